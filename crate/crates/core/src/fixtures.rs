//! The named fixture categories used throughout the tests and audits.

use std::sync::Arc;

use crate::fincat::{CategoryBuilder, FinCategory, Functor, MorId, ObjId};
use crate::monfun::MultiplicativeFunctor;
use crate::tensor::SemiMonCat;

/// One object `T`, identity only, `T ⊗ T = T`.
pub fn term() -> Arc<SemiMonCat> {
    let mut b = CategoryBuilder::new("term");
    b.object("T");
    let cat = Arc::new(b.build());
    Arc::new(SemiMonCat::thin(cat, vec![ObjId(0)]).expect("term is thin"))
}

/// Indiscrete on `P`, `Q`; the tensor is the join with `P` as bottom.
pub fn ind2() -> Arc<SemiMonCat> {
    let mut b = CategoryBuilder::new("ind2");
    let p = b.object("P");
    let q = b.object("Q");
    let pq = b.morphism("pq", p, q);
    let qp = b.morphism("qp", q, p);
    let (id_p, id_q) = (b.identity(p), b.identity(q));
    b.compose(qp, pq, id_p).compose(pq, qp, id_q);
    let cat = Arc::new(b.build());
    Arc::new(SemiMonCat::thin(cat, vec![p, q, q, q]).expect("ind2 is thin"))
}

/// Objects `0`, `1` with one non-identity arrow `w: 1 -> 0`; tensor is `min`.
pub fn poset2() -> Arc<SemiMonCat> {
    let mut b = CategoryBuilder::new("poset2");
    let zero = b.object("0");
    let one = b.object("1");
    b.morphism("w", one, zero);
    let cat = Arc::new(b.build());
    Arc::new(SemiMonCat::thin(cat, vec![zero, zero, zero, one]).expect("poset2 is thin"))
}

/// One object `E` with automorphisms `{id, s}`, `s ∘ s = id`, and
/// `f ⊗ g = f ∘ g`.
pub fn z2eh() -> Arc<SemiMonCat> {
    let mut b = CategoryBuilder::new("z2eh");
    let e = b.object("E");
    let s = b.morphism("s", e, e);
    let id = b.identity(e);
    b.compose(s, s, id);
    let cat = Arc::new(b.build());
    let mtab = vec![id, s, s, id];
    Arc::new(SemiMonCat::new(cat, vec![e], mtab).expect("z2eh tables are in range"))
}

/// Discrete on `{0, 1}` with addition mod 2.
pub fn xor2() -> Arc<SemiMonCat> {
    discrete("xor2", &[vec![0, 1], vec![1, 0]])
}

/// Discrete on `{0, 1}` with `min`.
pub fn min2_disc() -> Arc<SemiMonCat> {
    discrete("min2_disc", &[vec![0, 0], vec![0, 1]])
}

/// Discrete category on `0..n` with the given multiplication table; no
/// associativity check.
pub fn discrete(name: &str, table: &[Vec<usize>]) -> Arc<SemiMonCat> {
    let mut b = CategoryBuilder::new(name);
    for k in 0..table.len() {
        b.object(k.to_string());
    }
    let cat: Arc<FinCategory> = Arc::new(b.build());
    let otab = table.iter().flatten().map(|&k| ObjId(k)).collect();
    Arc::new(SemiMonCat::thin(cat, otab).expect("discrete categories are thin"))
}

/// Every named fixture, in a fixed order.
pub fn all() -> Vec<(&'static str, Arc<SemiMonCat>)> {
    vec![
        ("term", term()),
        ("ind2", ind2()),
        ("poset2", poset2()),
        ("z2eh", z2eh()),
        ("xor2", xor2()),
        ("min2_disc", min2_disc()),
    ]
}

/// The functor `term -> poset2` sending `T` to `0`, with identity `φ₂`, and
/// the non-invertible unit comparison `w: 1 -> 0`.
pub fn zero_functor() -> (MultiplicativeFunctor, MorId) {
    let (src, tgt) = (term(), poset2());
    let zero = ObjId(0);
    let f = Functor::constant(src.category().clone(), tgt.category().clone(), zero);
    let phi2 = vec![tgt.category().id(zero)];
    let w = tgt.category().find_morphism("w").expect("poset2 has w");
    (MultiplicativeFunctor::new(src, tgt, f, phi2).expect("well-shaped"), w)
}
