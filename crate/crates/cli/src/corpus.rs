//! The bundled fixture documents, built in code and shipped as text.

use std::sync::Arc;

use unital_core::fincat::{MorId, ObjId};
use unital_core::gen::{eckmann_hilton, preorder_category};
use unital_core::monfun::MultiplicativeFunctor;
use unital_core::{fixtures, Functor, SemiMonCat};

use crate::dsl::{CatDocument, CategoryDecl, FunctorDecl};

fn decl(s: Arc<SemiMonCat>) -> CategoryDecl {
    CategoryDecl { semimon: s, unit: None, monoids: Vec::new() }
}

fn single(s: Arc<SemiMonCat>) -> CatDocument {
    CatDocument { categories: vec![decl(s)], functors: Vec::new() }
}

/// `term -> poset2` sending `T` to `0`, with unit comparison `w: 1 -> 0`.
pub fn zero_functor_document() -> CatDocument {
    let (f, w) = fixtures::zero_functor();
    let categories = vec![decl(f.source().clone()), decl(f.target().clone())];
    let zero = FunctorDecl { name: "zero".into(), source: 0, target: 1, functor: f, phi0: Some(w) };
    CatDocument { categories, functors: vec![zero] }
}

/// A lax functor from the chain `0 < 1` under `min` into the monoid
/// `{1, z}` with `z` absorbing, whose unit comparison satisfies the right
/// unit triangles but not the left ones.
pub fn one_sided_document() -> CatDocument {
    let cat = Arc::new(preorder_category("chain2", &[vec![true, true], vec![false, true]]));
    let s =
        Arc::new(SemiMonCat::thin(cat.clone(), vec![ObjId(0), ObjId(0), ObjId(0), ObjId(1)]).expect("min is monotone"));
    let t = eckmann_hilton("absorb2", &[vec![0, 1], vec![1, 1]]).expect("commutative monoid");
    let (id, z) = (MorId(0), MorId(1));
    let f = Functor::new(cat, t.category().clone(), vec![ObjId(0); 2], vec![id, id, z]).expect("maps are in range");
    let functor = MultiplicativeFunctor::new(s.clone(), t.clone(), f, vec![z, id, z, id]).expect("tables are in range");
    let decl_f = FunctorDecl { name: "right_only".into(), source: 0, target: 1, functor, phi0: Some(id) };
    CatDocument { categories: vec![decl(s), decl(t)], functors: vec![decl_f] }
}

/// Every bundled document with its file stem.
pub fn documents() -> Vec<(&'static str, CatDocument)> {
    let mut out: Vec<(&'static str, CatDocument)> = fixtures::all().into_iter().map(|(n, s)| (n, single(s))).collect();
    out.push(("zero_functor", zero_functor_document()));
    out.push(("one_sided", one_sided_document()));
    out
}

/// The shipped text of each bundled document.
pub const SHIPPED: [(&str, &str); 8] = [
    ("term", include_str!("../fixtures/term.cat")),
    ("ind2", include_str!("../fixtures/ind2.cat")),
    ("poset2", include_str!("../fixtures/poset2.cat")),
    ("z2eh", include_str!("../fixtures/z2eh.cat")),
    ("xor2", include_str!("../fixtures/xor2.cat")),
    ("min2_disc", include_str!("../fixtures/min2_disc.cat")),
    ("zero_functor", include_str!("../fixtures/zero_functor.cat")),
    ("one_sided", include_str!("../fixtures/one_sided.cat")),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{emit, parse};

    #[test]
    fn shipped_files_parse_to_the_coded_documents() {
        for ((name, doc), (stem, text)) in documents().iter().zip(SHIPPED) {
            assert_eq!(*name, stem);
            assert_eq!(&parse(text).unwrap(), doc, "{name}");
            assert_eq!(emit(doc), text, "{name}");
        }
    }

    #[test]
    fn emission_round_trips() {
        for (name, doc) in documents() {
            let text = emit(&doc);
            assert_eq!(emit(&parse(&text).unwrap()), text, "{name}");
        }
    }
}
