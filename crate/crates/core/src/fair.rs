//! Gentle functors and fair presentations: a semi-monoidal category `C`
//! together with a contractible semi-monoidal category `U` of chosen units
//! and a gentle strict inclusion `U -> C`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Budget;
use crate::fincat::{FinCategory, Functor, MorId, ObjId};
use crate::monfun::{
    check_saavedra_compat_strong, is_saavedra_monoid, lift_to_unit_categories, monoid_audit, CompatContext, Monoid,
    MultiplicativeFunctor,
};
use crate::tensor::SemiMonCat;
use crate::units::{canonical_unit_morphism, unit_category, validate_saavedra, SaavedraUnit, UnitCategory};

/// `(U, X) ↦ inc(U) ⊗ X` and `(X, U) ↦ X ⊗ inc(U)` are fully faithful on
/// the finite product categories.
pub fn is_gentle_functor(inc: &Functor, target: &SemiMonCat) -> bool {
    let (u, c) = (inc.source(), target.category());
    let left = Arc::new(u.product(c));
    let right = Arc::new(c.product(u));
    let (nc, mc) = (c.object_count(), c.morphism_count());
    let (nu, mu) = (u.object_count(), u.morphism_count());
    let lo = (0..nu * nc).map(|k| target.tensor_obj(inc.obj(ObjId(k / nc)), ObjId(k % nc))).collect();
    let lm = (0..mu * mc).map(|k| target.tensor_mor(inc.mor(MorId(k / mc)), MorId(k % mc))).collect();
    let ro = (0..nc * nu).map(|k| target.tensor_obj(ObjId(k / nu), inc.obj(ObjId(k % nu)))).collect();
    let rm = (0..mc * mu).map(|k| target.tensor_mor(MorId(k / mu), inc.mor(MorId(k % mu)))).collect();
    let l = Functor::new(left, c.clone(), lo, lm).expect("tables are in range");
    let r = Functor::new(right, c.clone(), ro, rm).expect("tables are in range");
    l.is_fully_faithful() && r.is_fully_faithful()
}

/// Gentleness of an inclusion with contractible source against
/// cancellability of each image object. All verdicts must agree.
pub fn gentle_iff_cancellable_audit(inc: &Functor, target: &SemiMonCat) -> Result<bool> {
    let u = inc.source();
    if !u.is_contractible() {
        return Err(Error::Precondition(format!("{} is not contractible", u.name())));
    }
    let gentle = is_gentle_functor(inc, target);
    for a in u.objects() {
        let cancellable = target.is_cancellable(inc.obj(a));
        if cancellable != gentle {
            return Err(Error::violation(
                "an inclusion of a contractible category is gentle iff its objects are cancellable",
                format!(
                    "{} ↦ {}: gentle {gentle}, cancellable {cancellable}",
                    u.object_name(a),
                    target.category().object_name(inc.obj(a))
                ),
            ));
        }
    }
    Ok(gentle)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairPresentation {
    pub units: Arc<SemiMonCat>,
    pub base: Arc<SemiMonCat>,
    pub inclusion: Functor,
}

impl FairPresentation {
    /// Contractible, nonempty `U`; the inclusion is a functor, strict
    /// multiplicative and gentle.
    pub fn validate(&self) -> Result<()> {
        let (u, c) = (self.units.category(), self.base.category());
        if self.inclusion.source() != u || self.inclusion.target() != c {
            return Err(Error::Shape("inclusion does not go from U to C".into()));
        }
        for report in [self.units.validate(), self.base.validate(), self.inclusion.validate()] {
            if !report.is_valid() {
                return Err(Error::Precondition(format!("invalid fair presentation: {:?}", report.violations)));
            }
        }
        if u.object_count() == 0 || !u.is_contractible() {
            return Err(Error::Precondition("U must be nonempty and contractible".into()));
        }
        let inc = &self.inclusion;
        let strict = u.objects().all(|a| {
            u.objects().all(|b| inc.obj(self.units.tensor_obj(a, b)) == self.base.tensor_obj(inc.obj(a), inc.obj(b)))
        }) && u.morphisms().all(|f| {
            u.morphisms().all(|g| inc.mor(self.units.tensor_mor(f, g)) == self.base.tensor_mor(inc.mor(f), inc.mor(g)))
        });
        if !strict {
            return Err(Error::Precondition("inclusion is not strict multiplicative".into()));
        }
        if !is_gentle_functor(inc, &self.base) {
            return Err(Error::Precondition("inclusion is not gentle".into()));
        }
        Ok(())
    }

    /// The unit `(inc U, inc(U U -> U))` determined by an object of `U`.
    pub fn unit_at(&self, a: ObjId) -> SaavedraUnit {
        let u = self.units.category();
        let aa = self.units.tensor_obj(a, a);
        SaavedraUnit { object: self.inclusion.obj(a), alpha: self.inclusion.mor(u.hom(aa, a)[0]) }
    }

    /// The object of `U` presenting the given unit, if any.
    pub fn find_unit(&self, unit: &SaavedraUnit) -> Option<ObjId> {
        self.units.category().objects().find(|&a| self.unit_at(a) == *unit)
    }
}

/// `U = U(C)` with the forgetful functor.
pub fn to_fair(s: &Arc<SemiMonCat>) -> Result<FairPresentation> {
    let uc = unit_category(s)?;
    if uc.is_empty() {
        return Err(Error::NoUnit(format!("{} has no units, so no fair presentation", s.name())));
    }
    fair_from_unit_category(s, &uc)
}

pub fn fair_from_unit_category(s: &Arc<SemiMonCat>, uc: &UnitCategory) -> Result<FairPresentation> {
    let p = FairPresentation { units: uc.category.clone(), base: s.clone(), inclusion: uc.forget.clone() };
    p.validate()?;
    Ok(p)
}

/// The underlying category with the unit given by the least object of `U`.
pub fn from_fair(p: &FairPresentation) -> Result<(Arc<SemiMonCat>, SaavedraUnit)> {
    p.validate()?;
    let unit = p.unit_at(ObjId(0));
    validate_saavedra(&p.base, &unit)
        .map_err(|e| Error::violation("a fair presentation yields a unit", e.to_string()))?;
    Ok((p.base.clone(), unit))
}

/// For every object `k` of `U`, the canonical unit morphism from the unit at
/// the least object to the unit at `k`; it must be the image of the unique
/// arrow of `U`.
pub fn choice_independence(p: &FairPresentation) -> Result<Vec<MorId>> {
    let (base, first) = from_fair(p)?;
    let u = p.units.category();
    let mut out = Vec::with_capacity(u.object_count());
    for k in u.objects() {
        let unit = p.unit_at(k);
        validate_saavedra(&base, &unit).map_err(|e| Error::violation("every object of U is a unit", e.to_string()))?;
        let psi = canonical_unit_morphism(&base, &first, &unit)?;
        if psi != p.inclusion.mor(u.hom(ObjId(0), k)[0]) {
            return Err(Error::violation(
                "the arrows of U are the canonical unit morphisms",
                base.category().morphism_name(psi).to_string(),
            ));
        }
        out.push(psi);
    }
    Ok(out)
}

/// The functor `U -> U(C)` induced by a fair presentation, and how much of
/// `U(C)` it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairComparison {
    pub functor: Functor,
    pub injective_on_objects: bool,
    pub surjective_on_objects: bool,
}

pub fn comparison_to_unit_category(p: &FairPresentation, uc: &UnitCategory) -> Result<FairComparison> {
    p.validate()?;
    let u = p.units.category();
    let ucat: &Arc<FinCategory> = uc.category.category();
    let omap: Vec<ObjId> = u
        .objects()
        .map(|a| {
            let unit = p.unit_at(a);
            uc.position(&unit).ok_or_else(|| {
                Error::violation("objects of U are units", p.base.category().object_name(unit.object).to_string())
            })
        })
        .collect::<Result<_>>()?;
    let mut mmap = Vec::with_capacity(u.morphism_count());
    for f in u.morphisms() {
        let m = uc.connecting(omap[u.dom(f).0], omap[u.cod(f).0]);
        if uc.forget.mor(m) != p.inclusion.mor(f) {
            return Err(Error::violation("arrows of U are unit morphisms", u.morphism_name(f).to_string()));
        }
        mmap.push(m);
    }
    let functor = Functor::new(u.clone(), ucat.clone(), omap.clone(), mmap)?;
    if !functor.validate().is_valid() || functor.then(&uc.forget)? != p.inclusion {
        return Err(Error::violation("U embeds into U(C) over C", p.base.name().to_string()));
    }
    let mut sorted = omap.clone();
    sorted.sort();
    sorted.dedup();
    Ok(FairComparison {
        injective_on_objects: sorted.len() == omap.len(),
        surjective_on_objects: sorted.len() == ucat.object_count(),
        functor,
    })
}

/// Round trips between a semi-monoidal category with units and its fair
/// presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FairRoundtrip {
    pub units: usize,
    pub recovered_unit: SaavedraUnit,
    pub base_recovered: bool,
    pub comparison_bijective: bool,
    pub canonical_morphisms: Vec<MorId>,
}

pub fn fair_roundtrip(s: &Arc<SemiMonCat>) -> Result<FairRoundtrip> {
    let p = to_fair(s)?;
    let (base, unit) = from_fair(&p)?;
    let uc = unit_category(&base)?;
    let again = fair_from_unit_category(&base, &uc)?;
    let cmp = comparison_to_unit_category(&p, &uc)?;
    let canonical_morphisms = choice_independence(&p)?;
    let out = FairRoundtrip {
        units: p.units.category().object_count(),
        recovered_unit: unit,
        base_recovered: base == *s && again == p,
        comparison_bijective: cmp.injective_on_objects && cmp.surjective_on_objects,
        canonical_morphisms,
    };
    if !out.base_recovered || !out.comparison_bijective || Some(unit) != crate::units::designated_unit(s) {
        return Err(Error::violation("fair presentations round-trip", format!("{out:?}")));
    }
    Ok(out)
}

/// A pair of strong multiplicative functors on units and on the underlying
/// categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairFunctor {
    pub units: MultiplicativeFunctor,
    pub base: MultiplicativeFunctor,
}

impl FairFunctor {
    /// The square with the inclusions commutes, including `φ₂` data.
    pub fn commutes(&self, p: &FairPresentation, q: &FairPresentation) -> bool {
        let u = p.units.category();
        let (fu, fc) = (&self.units, &self.base);
        self.units.is_strong()
            && self.base.is_strong()
            && u.objects().all(|a| q.inclusion.obj(fu.obj(a)) == fc.obj(p.inclusion.obj(a)))
            && u.morphisms().all(|f| q.inclusion.mor(fu.mor(f)) == fc.mor(p.inclusion.mor(f)))
            && u.objects().all(|a| {
                u.objects().all(|b| q.inclusion.mor(fu.phi2(a, b)) == fc.phi2(p.inclusion.obj(a), p.inclusion.obj(b)))
            })
    }
}

/// `Φ` together with its lift to the unit categories.
pub fn fair_functor_from_monoidal(
    ctx: &CompatContext<'_>,
    phi0: MorId,
    uc: &UnitCategory,
    ud: &UnitCategory,
) -> Result<FairFunctor> {
    let lift = lift_to_unit_categories(ctx, phi0, uc, ud)?;
    let ff = FairFunctor { units: lift, base: ctx.functor.clone() };
    let p = fair_from_unit_category(ctx.functor.source(), uc)?;
    let q = fair_from_unit_category(ctx.functor.target(), ud)?;
    if !ff.commutes(&p, &q) {
        return Err(Error::violation(
            "a monoidal functor gives a fair functor",
            ctx.functor.target().name().to_string(),
        ));
    }
    Ok(ff)
}

/// Extracts the unit comparison from a fair functor: the image of the arrow
/// `J -> phiU(I)` of `Q.U`. It must be a strong compatibility.
pub fn phi0_from_fair_functor(
    ff: &FairFunctor,
    ctx: &CompatContext<'_>,
    p: &FairPresentation,
    q: &FairPresentation,
) -> Result<MorId> {
    if !ff.commutes(p, q) {
        return Err(Error::Precondition("the fair functor square does not commute".into()));
    }
    let i = p.find_unit(&ctx.units.source).ok_or_else(|| Error::Precondition("source unit is not in U".into()))?;
    let j = q.find_unit(&ctx.units.target).ok_or_else(|| Error::Precondition("target unit is not in U'".into()))?;
    let arrow = q.units.category().hom(j, ff.units.obj(i))[0];
    let phi0 = q.inclusion.mor(arrow);
    if !check_saavedra_compat_strong(ctx, phi0)? {
        return Err(Error::violation(
            "a fair functor yields a compatibility",
            ctx.functor.target().category().morphism_name(phi0).to_string(),
        ));
    }
    Ok(phi0)
}

/// `eta: inc(I) -> M` is a gentle semi-monoid homomorphism.
pub fn fair_monoid_check(p: &FairPresentation, i: ObjId, m: &Monoid) -> bool {
    is_saavedra_monoid(&p.base, &p.unit_at(i), m)
}

/// Monoids found through the fair presentation at the least object of `U`,
/// checked against [`monoid_audit`] on the recovered category.
pub fn fair_monoid_audit(p: &FairPresentation, budget: &mut Budget) -> Result<Vec<Monoid>> {
    let (base, unit) = from_fair(p)?;
    let c = base.category();
    let mut found = Vec::new();
    for m in c.objects() {
        for &mu in c.hom(base.tensor_obj(m, m), m) {
            for &eta in c.hom(unit.object, m) {
                let cand = Monoid { object: m, mu, eta };
                if fair_monoid_check(p, ObjId(0), &cand) {
                    found.push(cand);
                }
            }
        }
    }
    let audit = monoid_audit(&base, &unit, budget)?;
    if audit.saavedra != found {
        return Err(Error::violation(
            "fair monoids are monoids",
            format!("fair {found:?} vs audit {:?}", audit.saavedra),
        ));
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Budget;
    use crate::fixtures;
    use crate::monfun::{enumerate_multiplicative, UnitPair};
    use crate::units::{designated_unit, enumerate_saavedra_units};

    fn point_at(target: &SemiMonCat, object: usize) -> Functor {
        Functor::constant(fixtures::term().category().clone(), target.category().clone(), ObjId(object))
    }

    #[test]
    fn gentle_functor_examples() {
        let z = fixtures::z2eh();
        let uc = unit_category(&z).unwrap();
        assert!(is_gentle_functor(&uc.forget, &z));
        let p = fixtures::poset2();
        assert!(!is_gentle_functor(&point_at(&p, 0), &p));
        assert!(is_gentle_functor(&point_at(&p, 1), &p));
    }

    #[test]
    fn gentle_iff_cancellable() {
        let i = fixtures::ind2();
        assert!(gentle_iff_cancellable_audit(&unit_category(&i).unwrap().forget, &i).unwrap());
        let p = fixtures::poset2();
        assert!(!gentle_iff_cancellable_audit(&point_at(&p, 0), &p).unwrap());
        let t = fixtures::term();
        assert!(gentle_iff_cancellable_audit(&point_at(&t, 0), &t).unwrap());
        assert!(matches!(
            gentle_iff_cancellable_audit(&Functor::identity(p.category().clone()), &p),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn to_fair_examples() {
        assert_eq!(to_fair(&fixtures::z2eh()).unwrap().units.category().object_count(), 2);
        assert_eq!(to_fair(&fixtures::term()).unwrap().units.category().object_count(), 1);
        let p = to_fair(&fixtures::poset2()).unwrap();
        assert_eq!(p.unit_at(ObjId(0)), SaavedraUnit { object: ObjId(1), alpha: MorId(1) });
        let left_zero = fixtures::discrete("left_zero", &[vec![0, 0], vec![1, 1]]);
        assert!(matches!(to_fair(&left_zero), Err(Error::NoUnit(_))));
    }

    #[test]
    fn from_fair_picks_the_least_unit() {
        let z = fixtures::z2eh();
        let (base, unit) = from_fair(&to_fair(&z).unwrap()).unwrap();
        assert_eq!(base, z);
        assert_eq!(unit, SaavedraUnit { object: ObjId(0), alpha: MorId(0) });
        let (_, unit) = from_fair(&to_fair(&fixtures::term()).unwrap()).unwrap();
        assert_eq!(unit, SaavedraUnit { object: ObjId(0), alpha: MorId(0) });
        assert_eq!(choice_independence(&to_fair(&z).unwrap()).unwrap(), vec![MorId(0), MorId(1)]);
    }

    #[test]
    fn sub_presentation_embeds_into_unit_category() {
        let z = fixtures::z2eh();
        let p = FairPresentation { units: fixtures::term(), base: z.clone(), inclusion: point_at(&z, 0) };
        p.validate().unwrap();
        let cmp = comparison_to_unit_category(&p, &unit_category(&z).unwrap()).unwrap();
        assert!(cmp.injective_on_objects && !cmp.surjective_on_objects);
    }

    #[test]
    fn non_gentle_presentation_is_rejected() {
        let p = fixtures::poset2();
        let bad = FairPresentation { units: fixtures::term(), base: p.clone(), inclusion: point_at(&p, 0) };
        assert!(matches!(bad.validate(), Err(Error::Precondition(_))));
        assert!(from_fair(&bad).is_err());
    }

    #[test]
    fn roundtrips_on_unit_bearing_fixtures() {
        for (name, s) in fixtures::all() {
            let r = fair_roundtrip(&s).unwrap();
            assert!(r.base_recovered && r.comparison_bijective, "{name}");
            assert_eq!(Some(r.recovered_unit), designated_unit(&s), "{name}");
        }
    }

    #[test]
    fn fair_functors_recover_compatibilities() {
        let all = fixtures::all();
        for (_, s) in &all {
            for (_, t) in &all {
                let (uc, ud) = (unit_category(s).unwrap(), unit_category(t).unwrap());
                let (p, q) = (fair_from_unit_category(s, &uc).unwrap(), fair_from_unit_category(t, &ud).unwrap());
                let pair = UnitPair { source: designated_unit(s).unwrap(), target: designated_unit(t).unwrap() };
                for f in enumerate_multiplicative(s, t, &mut Budget::unlimited()).unwrap() {
                    let ctx = CompatContext::new(&f, pair).unwrap();
                    for phi0 in ctx.phi0_candidates() {
                        if f.is_strong() && check_saavedra_compat_strong(&ctx, phi0).unwrap() {
                            let ff = fair_functor_from_monoidal(&ctx, phi0, &uc, &ud).unwrap();
                            assert_eq!(phi0_from_fair_functor(&ff, &ctx, &p, &q).unwrap(), phi0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn identity_gives_identity_fair_functor() {
        let z = fixtures::z2eh();
        let uc = unit_category(&z).unwrap();
        let f = MultiplicativeFunctor::identity(z.clone());
        let u = designated_unit(&z).unwrap();
        let ctx = CompatContext::new(&f, UnitPair { source: u, target: u }).unwrap();
        let ff = fair_functor_from_monoidal(&ctx, MorId(0), &uc, &uc).unwrap();
        assert_eq!(ff.units, MultiplicativeFunctor::identity(uc.category.clone()));
    }

    #[test]
    fn fair_monoids_match_the_monoid_audit() {
        for (name, s) in fixtures::all() {
            let p = to_fair(&s).unwrap();
            let found = fair_monoid_audit(&p, &mut Budget::unlimited()).unwrap();
            for k in p.units.category().objects() {
                let unit = p.unit_at(k);
                let audit = monoid_audit(&s, &unit, &mut Budget::unlimited()).unwrap();
                let direct: Vec<Monoid> =
                    audit.saavedra.iter().copied().filter(|m| fair_monoid_check(&p, k, m)).collect();
                assert_eq!(direct, audit.saavedra, "{name}");
            }
            assert!(!found.is_empty(), "{name}");
        }
        let t = to_fair(&fixtures::term()).unwrap();
        assert!(fair_monoid_check(&t, ObjId(0), &Monoid { object: ObjId(0), mu: MorId(0), eta: MorId(0) }));
        let p = to_fair(&fixtures::poset2()).unwrap();
        // w ⊗ 0 = id_0, so (0, id_0, w) is a monoid for the unit at 1
        assert!(fair_monoid_check(&p, ObjId(0), &Monoid { object: ObjId(0), mu: MorId(0), eta: MorId(2) }));
        assert_eq!(enumerate_saavedra_units(&fixtures::poset2()).len(), 1);
    }
}
