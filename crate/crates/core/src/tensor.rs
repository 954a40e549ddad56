//! Strict associative tensor products on finite categories.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, MorId, ObjId};
use crate::validation::{ValidationReport, Violation};

/// A finite category with fully materialized tensor tables on objects and
/// morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiMonCat {
    cat: Arc<FinCategory>,
    otab: Vec<ObjId>,
    mtab: Vec<MorId>,
}

impl SemiMonCat {
    pub fn new(cat: Arc<FinCategory>, otab: Vec<ObjId>, mtab: Vec<MorId>) -> Result<Self> {
        let (n, m) = (cat.object_count(), cat.morphism_count());
        if otab.len() != n * n || mtab.len() != m * m {
            return Err(Error::Shape("tensor tables do not cover all pairs".into()));
        }
        if otab.iter().any(|a| a.0 >= n) || mtab.iter().any(|f| f.0 >= m) {
            return Err(Error::Shape("tensor table entry out of range".into()));
        }
        Ok(SemiMonCat { cat, otab, mtab })
    }

    /// Builds the morphism table of a thin category: `f ⊗ g` is the unique
    /// arrow between the tensored endpoints.
    pub fn thin(cat: Arc<FinCategory>, otab: Vec<ObjId>) -> Result<Self> {
        let n = cat.object_count();
        if otab.len() != n * n {
            return Err(Error::Shape("object tensor table does not cover all pairs".into()));
        }
        let mut mtab = Vec::with_capacity(cat.morphism_count().pow(2));
        for f in cat.morphisms() {
            for g in cat.morphisms() {
                let dom = otab[cat.dom(f).0 * n + cat.dom(g).0];
                let cod = otab[cat.cod(f).0 * n + cat.cod(g).0];
                match cat.hom(dom, cod) {
                    [h] => mtab.push(*h),
                    _ => {
                        return Err(Error::Typing(format!(
                            "no unique arrow {} -> {} for {} ⊗ {}",
                            cat.object_name(dom),
                            cat.object_name(cod),
                            cat.morphism_name(f),
                            cat.morphism_name(g)
                        )))
                    }
                }
            }
        }
        SemiMonCat::new(cat, otab, mtab)
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    pub fn name(&self) -> &str {
        self.cat.name()
    }

    pub fn tensor_obj(&self, a: ObjId, b: ObjId) -> ObjId {
        self.otab[a.0 * self.cat.object_count() + b.0]
    }

    pub fn tensor_mor(&self, f: MorId, g: MorId) -> MorId {
        self.mtab[f.0 * self.cat.morphism_count() + g.0]
    }

    /// `id_a ⊗ f`.
    pub fn whisker_left(&self, a: ObjId, f: MorId) -> MorId {
        self.tensor_mor(self.cat.id(a), f)
    }

    /// `f ⊗ id_a`.
    pub fn whisker_right(&self, f: MorId, a: ObjId) -> MorId {
        self.tensor_mor(f, self.cat.id(a))
    }

    pub fn object_table(&self) -> &[ObjId] {
        &self.otab
    }

    pub fn morphism_table(&self) -> &[MorId] {
        &self.mtab
    }

    /// Copy with one cell of the morphism table overwritten.
    pub fn with_tensor_mor(&self, f: MorId, g: MorId, h: MorId) -> SemiMonCat {
        let mut s = self.clone();
        let m = s.cat.morphism_count();
        s.mtab[f.0 * m + g.0] = h;
        s
    }

    /// Checks typing, identities, interchange and strict associativity of the
    /// tensor. The underlying category is validated first.
    pub fn validate(&self) -> ValidationReport {
        let c = &*self.cat;
        let mut report = c.validate();
        if !report.is_valid() {
            return report;
        }
        for f in c.morphisms() {
            for g in c.morphisms() {
                let h = self.tensor_mor(f, g);
                if c.dom(h) != self.tensor_obj(c.dom(f), c.dom(g)) || c.cod(h) != self.tensor_obj(c.cod(f), c.cod(g)) {
                    report.push(Violation::TensorTyping { f, g });
                }
            }
        }
        if !report.is_valid() {
            return report;
        }
        for a in c.objects() {
            for b in c.objects() {
                if self.tensor_mor(c.id(a), c.id(b)) != c.id(self.tensor_obj(a, b)) {
                    report.push(Violation::TensorIdentity { a, b });
                }
                for cc in c.objects() {
                    let l = self.tensor_obj(self.tensor_obj(a, b), cc);
                    let r = self.tensor_obj(a, self.tensor_obj(b, cc));
                    if l != r {
                        report.push(Violation::ObjectAssociativity { a, b, c: cc });
                    }
                }
            }
        }
        // (g ∘ g2) ⊗ (f ∘ f2) = (g ⊗ f) ∘ (g2 ⊗ f2)
        for g2 in c.morphisms() {
            for g in c.morphisms().filter(|&g| c.dom(g) == c.cod(g2)) {
                for f2 in c.morphisms() {
                    for f in c.morphisms().filter(|&f| c.dom(f) == c.cod(f2)) {
                        let left = self.tensor_mor(c.compose(g, g2), c.compose(f, f2));
                        let right = c.compose(self.tensor_mor(g, f), self.tensor_mor(g2, f2));
                        if left != right {
                            report.push(Violation::Interchange { g, g2, f, f2 });
                        }
                    }
                }
            }
        }
        for f in c.morphisms() {
            for g in c.morphisms() {
                for h in c.morphisms() {
                    let l = self.tensor_mor(self.tensor_mor(f, g), h);
                    let r = self.tensor_mor(f, self.tensor_mor(g, h));
                    if l != r {
                        report.push(Violation::MorphismAssociativity { f, g, h });
                    }
                }
            }
        }
        report
    }

    /// `X ↦ I X`, `f ↦ id_I ⊗ f`.
    pub fn left_tensor_functor(&self, i: ObjId) -> Functor {
        let omap = self.cat.objects().map(|x| self.tensor_obj(i, x)).collect();
        let mmap = self.cat.morphisms().map(|f| self.whisker_left(i, f)).collect();
        Functor::new(self.cat.clone(), self.cat.clone(), omap, mmap).expect("tables are in range")
    }

    /// `X ↦ X I`, `f ↦ f ⊗ id_I`.
    pub fn right_tensor_functor(&self, i: ObjId) -> Functor {
        let omap = self.cat.objects().map(|x| self.tensor_obj(x, i)).collect();
        let mmap = self.cat.morphisms().map(|f| self.whisker_right(f, i)).collect();
        Functor::new(self.cat.clone(), self.cat.clone(), omap, mmap).expect("tables are in range")
    }

    /// Tensoring with `i` on either side is fully faithful.
    pub fn is_cancellable(&self, i: ObjId) -> bool {
        self.left_tensor_functor(i).is_fully_faithful() && self.right_tensor_functor(i).is_fully_faithful()
    }

    /// `f ↦ ψ ⊗ f` and `f ↦ f ⊗ ψ` are bijections on every hom-set.
    /// Both endpoints of `psi` must be cancellable.
    pub fn is_tensor_cancellable(&self, psi: MorId) -> Result<bool> {
        let c = &*self.cat;
        let (i, j) = (c.dom(psi), c.cod(psi));
        for end in [i, j] {
            if !self.is_cancellable(end) {
                return Err(Error::NotCancellable { object: c.object_name(end).to_string() });
            }
        }
        for x in c.objects() {
            for y in c.objects() {
                let src = c.hom(x, y);
                let left_size = c.hom(self.tensor_obj(i, x), self.tensor_obj(j, y)).len();
                let right_size = c.hom(self.tensor_obj(x, i), self.tensor_obj(y, j)).len();
                if src.len() != left_size || src.len() != right_size {
                    return Ok(false);
                }
                let left: Vec<MorId> = src.iter().map(|&f| self.tensor_mor(psi, f)).collect();
                let right: Vec<MorId> = src.iter().map(|&f| self.tensor_mor(f, psi)).collect();
                if !distinct(left) || !distinct(right) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn distinct(mut items: Vec<MorId>) -> bool {
    let n = items.len();
    items.sort_unstable();
    items.dedup();
    items.len() == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_are_semi_monoidal() {
        for (name, s) in fixtures::all() {
            assert!(s.validate().is_valid(), "{name}");
        }
    }

    #[test]
    fn corrupted_tensor_breaks_interchange() {
        let z = fixtures::z2eh();
        let bad = z.with_tensor_mor(MorId(1), MorId(1), MorId(1));
        let report = bad.validate();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::Interchange { .. })));
    }

    #[test]
    fn tensoring_functors_on_poset2() {
        let p = fixtures::poset2();
        let c = p.category().clone();
        assert_eq!(p.left_tensor_functor(ObjId(1)), Functor::identity(c.clone()));
        assert_eq!(p.left_tensor_functor(ObjId(0)), Functor::constant(c.clone(), c, ObjId(0)));
        let z = fixtures::z2eh();
        assert_eq!(z.left_tensor_functor(ObjId(0)).morphism_map(), &[MorId(0), MorId(1)]);
    }

    #[test]
    fn cancellable_objects() {
        let p = fixtures::poset2();
        assert!(!p.is_cancellable(ObjId(0)));
        assert!(p.is_cancellable(ObjId(1)));
        assert!(fixtures::ind2().is_cancellable(ObjId(1)));
        assert!(!fixtures::min2_disc().is_cancellable(ObjId(0)));
    }

    #[test]
    fn tensor_cancellable_arrows() {
        assert!(fixtures::z2eh().is_tensor_cancellable(MorId(1)).unwrap());
        assert!(fixtures::ind2().is_tensor_cancellable(MorId(2)).unwrap());
        let p = fixtures::poset2();
        assert!(matches!(p.is_tensor_cancellable(MorId(2)), Err(Error::NotCancellable { .. })));
    }

    #[test]
    fn isomorphisms_between_cancellable_objects_are_tensor_cancellable() {
        for (name, s) in fixtures::all() {
            let c = s.category();
            for f in c.morphisms() {
                if c.is_iso(f).is_some() && s.is_cancellable(c.dom(f)) && s.is_cancellable(c.cod(f)) {
                    assert!(s.is_tensor_cancellable(f).unwrap(), "{name} {}", c.morphism_name(f));
                }
            }
        }
    }

    #[test]
    fn thin_requires_unique_arrows() {
        let z = fixtures::z2eh();
        assert!(matches!(SemiMonCat::thin(z.category().clone(), vec![ObjId(0)]), Err(Error::Typing(_))));
    }

    #[test]
    fn tables_must_cover_all_pairs() {
        let p = fixtures::poset2();
        assert!(SemiMonCat::new(p.category().clone(), vec![ObjId(0)], vec![]).is_err());
    }
}
