//! Units of a strict semi-monoidal category.
//!
//! Two presentations are supported and converted into each other:
//!
//! * an [`LrUnit`] carries the full left and right constraint families
//!   `λ_X: I X -> X` and `ρ_X: X I -> X`;
//! * a [`SaavedraUnit`] is a cancellable object `I` with a single
//!   isomorphism `α: I I -> I`.
//!
//! [`derive_lr`] recovers the constraints from `α` as the unique solutions of
//! `id_I ⊗ λ_X = α ⊗ id_X` and `ρ_X ⊗ id_I = id_X ⊗ α`; [`derive_saavedra`]
//! goes back by `α = λ_I`. The brute-force enumeration in
//! [`brute_force_lr_units`] never calls either conversion and serves as the
//! independent check of both.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Budget;
use crate::fincat::{CategoryBuilder, FinCategory, Functor, MorId, ObjId};
use crate::tensor::SemiMonCat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SaavedraUnit {
    pub object: ObjId,
    pub alpha: MorId,
}

/// A unit object with left and right constraint families indexed by object id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LrUnit {
    pub object: ObjId,
    pub lambda: Vec<MorId>,
    pub rho: Vec<MorId>,
}

impl LrUnit {
    pub fn lambda(&self, x: ObjId) -> MorId {
        self.lambda[x.0]
    }

    pub fn rho(&self, x: ObjId) -> MorId {
        self.rho[x.0]
    }
}

/// Verdicts of [`check_axioms`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct AxiomFlags {
    /// Every component is an isomorphism.
    pub invertible: bool,
    /// Both families are natural in `X`.
    pub natural: bool,
    /// `λ_I = ρ_I`
    pub lambda_eq_rho: bool,
    /// `λ_{XY} = λ_X ⊗ Y`
    pub lambda_multiplicative: bool,
    /// `ρ_{XY} = X ⊗ ρ_Y`
    pub rho_multiplicative: bool,
    /// `X ⊗ λ_Y = ρ_X ⊗ Y`
    pub exchange: bool,
    /// `λ_{IX} = I ⊗ λ_X`
    pub lambda_on_unit: bool,
    /// `ρ_{XI} = ρ_X ⊗ I`
    pub rho_on_unit: bool,
}

impl AxiomFlags {
    pub fn agree_and_multiplicative(&self) -> bool {
        self.lambda_eq_rho && self.lambda_multiplicative && self.rho_multiplicative
    }

    pub fn is_lr_unit(&self) -> bool {
        self.invertible && self.natural && self.agree_and_multiplicative() && self.exchange
    }

    pub fn all(&self) -> bool {
        self.is_lr_unit() && self.lambda_on_unit && self.rho_on_unit
    }
}

/// Evaluates every unit axiom on a candidate by enumeration. Ill-typed
/// components are an error and no axiom is evaluated.
pub fn check_axioms(s: &SemiMonCat, u: &LrUnit) -> Result<AxiomFlags> {
    let c = s.category();
    let i = u.object;
    let n = c.object_count();
    if u.lambda.len() != n || u.rho.len() != n {
        return Err(Error::Typing("constraint families must have one component per object".into()));
    }
    for x in c.objects() {
        let (l, r) = (u.lambda(x), u.rho(x));
        if l.0 >= c.morphism_count() || c.dom(l) != s.tensor_obj(i, x) || c.cod(l) != x {
            return Err(Error::Typing(format!("lambda at {} is not in hom(I{0}, {0})", c.object_name(x))));
        }
        if r.0 >= c.morphism_count() || c.dom(r) != s.tensor_obj(x, i) || c.cod(r) != x {
            return Err(Error::Typing(format!("rho at {} is not in hom({0}I, {0})", c.object_name(x))));
        }
    }
    let objs: Vec<ObjId> = c.objects().collect();
    let pairs = || objs.iter().flat_map(|&x| objs.iter().map(move |&y| (x, y)));
    let id = |x| c.id(x);
    Ok(AxiomFlags {
        invertible: objs.iter().all(|&x| c.is_iso(u.lambda(x)).is_some() && c.is_iso(u.rho(x)).is_some()),
        natural: c.morphisms().all(|f| {
            let (x, y) = (c.dom(f), c.cod(f));
            c.compose(f, u.lambda(x)) == c.compose(u.lambda(y), s.whisker_left(i, f))
                && c.compose(f, u.rho(x)) == c.compose(u.rho(y), s.whisker_right(f, i))
        }),
        lambda_eq_rho: u.lambda(i) == u.rho(i),
        lambda_multiplicative: pairs().all(|(x, y)| u.lambda(s.tensor_obj(x, y)) == s.tensor_mor(u.lambda(x), id(y))),
        rho_multiplicative: pairs().all(|(x, y)| u.rho(s.tensor_obj(x, y)) == s.tensor_mor(id(x), u.rho(y))),
        exchange: pairs().all(|(x, y)| s.tensor_mor(id(x), u.lambda(y)) == s.tensor_mor(u.rho(x), id(y))),
        lambda_on_unit: objs.iter().all(|&x| u.lambda(s.tensor_obj(i, x)) == s.whisker_left(i, u.lambda(x))),
        rho_on_unit: objs.iter().all(|&x| u.rho(s.tensor_obj(x, i)) == s.whisker_right(u.rho(x), i)),
    })
}

/// All natural families of isomorphisms `I X -> X` (left) and `X I -> X`
/// (right), by brute force over the cartesian product of hom-sets.
fn natural_iso_families(s: &SemiMonCat, i: ObjId, left: bool, budget: &mut Budget) -> Result<Vec<Vec<MorId>>> {
    let c = s.category();
    let choices: Vec<Vec<MorId>> = c
        .objects()
        .map(|x| {
            let dom = if left { s.tensor_obj(i, x) } else { s.tensor_obj(x, i) };
            c.hom(dom, x).iter().copied().filter(|&f| c.is_iso(f).is_some()).collect()
        })
        .collect();
    let mut out = Vec::new();
    for family in cartesian(&choices, budget)? {
        let natural = c.morphisms().all(|f| {
            let (x, y) = (c.dom(f), c.cod(f));
            let shifted = if left { s.whisker_left(i, f) } else { s.whisker_right(f, i) };
            c.compose(f, family[x.0]) == c.compose(family[y.0], shifted)
        });
        if natural {
            out.push(family);
        }
    }
    Ok(out)
}

/// Cartesian product in lexicographic order.
pub(crate) fn cartesian<T: Copy>(choices: &[Vec<T>], budget: &mut Budget) -> Result<Vec<Vec<T>>> {
    let total: u64 =
        choices.iter().map(|c| c.len() as u64).try_fold(1u64, |acc, k| acc.checked_mul(k)).unwrap_or(u64::MAX);
    budget.charge(total)?;
    let mut out: Vec<Vec<T>> = vec![Vec::with_capacity(choices.len())];
    for options in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&o| {
                    let mut p = prefix.clone();
                    p.push(o);
                    p
                })
            })
            .collect();
    }
    Ok(out)
}

/// Every triple `(I, λ, ρ)` with natural isomorphism families on `I`, in
/// canonical order. No unit axiom is imposed.
pub fn lr_candidates(s: &SemiMonCat, i: ObjId, budget: &mut Budget) -> Result<Vec<LrUnit>> {
    let lambdas = natural_iso_families(s, i, true, budget)?;
    let rhos = natural_iso_families(s, i, false, budget)?;
    budget.charge((lambdas.len() * rhos.len()) as u64)?;
    Ok(lambdas
        .iter()
        .flat_map(|l| rhos.iter().map(move |r| LrUnit { object: i, lambda: l.clone(), rho: r.clone() }))
        .collect())
}

/// LR units on `i` found by filtering [`lr_candidates`] through the axioms.
pub fn brute_force_lr_units(s: &SemiMonCat, i: ObjId, budget: &mut Budget) -> Result<Vec<LrUnit>> {
    let mut out = Vec::new();
    for u in lr_candidates(s, i, budget)? {
        if check_axioms(s, &u)?.is_lr_unit() {
            out.push(u);
        }
    }
    Ok(out)
}

/// Outcome of comparing the exchange law alone against `λ_I = ρ_I` with both
/// multiplicativity laws.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KellyReport {
    pub candidates: usize,
    pub satisfying_exchange: Vec<LrUnit>,
    pub satisfying_agree_and_multiplicative: Vec<LrUnit>,
    /// Candidates in exactly one of the two sets.
    pub separating: Vec<LrUnit>,
}

impl KellyReport {
    pub fn sets_coincide(&self) -> bool {
        self.separating.is_empty()
    }
}

pub fn verify_kelly_implications(s: &SemiMonCat, budget: &mut Budget) -> Result<KellyReport> {
    let mut report = KellyReport {
        candidates: 0,
        satisfying_exchange: Vec::new(),
        satisfying_agree_and_multiplicative: Vec::new(),
        separating: Vec::new(),
    };
    for i in s.category().objects() {
        for u in lr_candidates(s, i, budget)? {
            report.candidates += 1;
            let flags = check_axioms(s, &u)?;
            if flags.exchange {
                report.satisfying_exchange.push(u.clone());
            }
            if flags.agree_and_multiplicative() {
                report.satisfying_agree_and_multiplicative.push(u.clone());
            }
            if flags.exchange != flags.agree_and_multiplicative() {
                report.separating.push(u);
            }
        }
    }
    Ok(report)
}

/// Checks that `u` is a Saavedra unit: `α: I I -> I` invertible and `I`
/// cancellable.
pub fn validate_saavedra(s: &SemiMonCat, u: &SaavedraUnit) -> Result<()> {
    let c = s.category();
    let i = u.object;
    if i.0 >= c.object_count() || u.alpha.0 >= c.morphism_count() {
        return Err(Error::Typing("unit refers to unknown ids".into()));
    }
    if c.dom(u.alpha) != s.tensor_obj(i, i) || c.cod(u.alpha) != i {
        return Err(Error::Typing(format!("{} is not in hom(II, I)", c.morphism_name(u.alpha))));
    }
    if c.is_iso(u.alpha).is_none() {
        return Err(Error::NoUnit(format!("{} is not invertible", c.morphism_name(u.alpha))));
    }
    if !s.is_cancellable(i) {
        return Err(Error::NotCancellable { object: c.object_name(i).to_string() });
    }
    Ok(())
}

/// All Saavedra units in canonical order (by object, then by `α`).
pub fn enumerate_saavedra_units(s: &SemiMonCat) -> Vec<SaavedraUnit> {
    let c = s.category();
    c.objects()
        .filter(|&i| s.is_cancellable(i))
        .flat_map(|i| {
            c.hom(s.tensor_obj(i, i), i)
                .iter()
                .filter(|&&a| c.is_iso(a).is_some())
                .map(move |&alpha| SaavedraUnit { object: i, alpha })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// The least Saavedra unit, used when nothing else is designated.
pub fn designated_unit(s: &SemiMonCat) -> Option<SaavedraUnit> {
    enumerate_saavedra_units(s).into_iter().next()
}

/// The left and right constraints induced by a Saavedra unit.
pub fn derive_lr(s: &SemiMonCat, u: &SaavedraUnit) -> Result<LrUnit> {
    validate_saavedra(s, u)?;
    let c = s.category();
    let i = u.object;
    let solve = |x: ObjId, left: bool| -> Result<MorId> {
        let (dom, target) = if left {
            (s.tensor_obj(i, x), s.whisker_right(u.alpha, x))
        } else {
            (s.tensor_obj(x, i), s.whisker_left(x, u.alpha))
        };
        let found: Vec<MorId> = c
            .hom(dom, x)
            .iter()
            .copied()
            .filter(|&f| if left { s.whisker_left(i, f) } else { s.whisker_right(f, i) } == target)
            .collect();
        match found.as_slice() {
            [f] => Ok(*f),
            other => Err(Error::Precondition(format!(
                "{} solutions for the {} constraint at {}",
                other.len(),
                if left { "left" } else { "right" },
                c.object_name(x)
            ))),
        }
    };
    let lambda = c.objects().map(|x| solve(x, true)).collect::<Result<Vec<_>>>()?;
    let rho = c.objects().map(|x| solve(x, false)).collect::<Result<Vec<_>>>()?;
    let lr = LrUnit { object: i, lambda, rho };
    let flags = check_axioms(s, &lr)?;
    if !flags.all() {
        return Err(Error::violation("derived constraints satisfy every unit axiom", format!("{flags:?}")));
    }
    Ok(lr)
}

/// `α = λ_I`, after checking `λ_I = ρ_I` and cancellability of `I`.
pub fn derive_saavedra(s: &SemiMonCat, u: &LrUnit) -> Result<SaavedraUnit> {
    let c = s.category();
    let i = u.object;
    let (l, r) = (u.lambda(i), u.rho(i));
    if l != r {
        return Err(Error::UnitsDisagree {
            lambda: c.morphism_name(l).to_string(),
            rho: c.morphism_name(r).to_string(),
        });
    }
    let out = SaavedraUnit { object: i, alpha: l };
    validate_saavedra(s, &out)?;
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub object: ObjId,
    pub saavedra_units: Vec<SaavedraUnit>,
    /// LR units on the object found by brute force.
    pub lr_units: Vec<LrUnit>,
    /// `derive_saavedra ∘ derive_lr` is the identity on Saavedra units.
    pub saavedra_roundtrip: bool,
    /// `derive_lr ∘ derive_saavedra` is the identity on LR units.
    pub lr_roundtrip: bool,
    /// The images of `derive_lr` are exactly the brute-force LR units.
    pub images_match_oracle: bool,
}

impl RoundtripReport {
    pub fn holds(&self) -> bool {
        self.saavedra_roundtrip && self.lr_roundtrip && self.images_match_oracle
    }
}

pub fn roundtrip_check(s: &SemiMonCat, i: ObjId, budget: &mut Budget) -> Result<RoundtripReport> {
    let saavedra_units: Vec<SaavedraUnit> = enumerate_saavedra_units(s).into_iter().filter(|u| u.object == i).collect();
    let lr_units = brute_force_lr_units(s, i, budget)?;
    let mut derived = Vec::new();
    let mut saavedra_roundtrip = true;
    for u in &saavedra_units {
        let lr = derive_lr(s, u)?;
        saavedra_roundtrip &= derive_saavedra(s, &lr)? == *u;
        derived.push(lr);
    }
    let mut lr_roundtrip = true;
    for u in &lr_units {
        lr_roundtrip &= match derive_saavedra(s, u) {
            Ok(a) => derive_lr(s, &a)? == *u,
            Err(_) => false,
        };
    }
    let mut sorted_oracle = lr_units.clone();
    sorted_oracle.sort();
    derived.sort();
    Ok(RoundtripReport {
        object: i,
        saavedra_units,
        images_match_oracle: sorted_oracle == derived,
        lr_units,
        saavedra_roundtrip,
        lr_roundtrip,
    })
}

/// `id_I ⊗ α = α ⊗ id_I`.
pub fn is_associative(s: &SemiMonCat, u: &SaavedraUnit) -> bool {
    s.whisker_left(u.object, u.alpha) == s.whisker_right(u.alpha, u.object)
}

/// The two verdicts on a candidate unit morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnitMorphismSenses {
    pub left_triangles: bool,
    pub right_triangles: bool,
    /// Tensor cancellable semi-monoid homomorphism.
    pub saavedra: bool,
}

impl UnitMorphismSenses {
    pub fn lr(&self) -> bool {
        self.left_triangles && self.right_triangles
    }
}

fn lr_unit_morphism(s: &SemiMonCat, u: &LrUnit, v: &LrUnit, psi: MorId) -> (bool, bool) {
    let c = s.category();
    let left = c.objects().all(|x| u.lambda(x) == c.compose(v.lambda(x), s.whisker_right(psi, x)));
    let right = c.objects().all(|x| u.rho(x) == c.compose(v.rho(x), s.whisker_left(x, psi)));
    (left, right)
}

pub fn unit_morphism_senses(
    s: &SemiMonCat,
    u: &SaavedraUnit,
    v: &SaavedraUnit,
    psi: MorId,
) -> Result<UnitMorphismSenses> {
    let c = s.category();
    if c.dom(psi) != u.object || c.cod(psi) != v.object {
        return Err(Error::Typing(format!("{} does not connect the unit objects", c.morphism_name(psi))));
    }
    let (lu, lv) = (derive_lr(s, u)?, derive_lr(s, v)?);
    let (left_triangles, right_triangles) = lr_unit_morphism(s, &lu, &lv, psi);
    let homomorphism = c.compose(v.alpha, s.tensor_mor(psi, psi)) == c.compose(psi, u.alpha);
    let saavedra = homomorphism && s.is_tensor_cancellable(psi)?;
    Ok(UnitMorphismSenses { left_triangles, right_triangles, saavedra })
}

/// Whether `psi` is a morphism of units. The LR triangles (left and right
/// separately) and the Saavedra condition are all evaluated; any
/// disagreement is a theorem violation.
pub fn is_unit_morphism(s: &SemiMonCat, u: &SaavedraUnit, v: &SaavedraUnit, psi: MorId) -> Result<bool> {
    let senses = unit_morphism_senses(s, u, v, psi)?;
    if senses.left_triangles != senses.right_triangles || senses.lr() != senses.saavedra {
        let c = s.category();
        return Err(Error::violation(
            "unit morphism senses agree",
            format!("{} : {:?} -> {:?} gives {senses:?}", c.morphism_name(psi), u, v),
        ));
    }
    Ok(senses.saavedra)
}

/// `λ^u_{I'} ∘ (ρ^{u'}_I)^{-1}`, checked to be the one and only unit
/// morphism `I -> I'`.
pub fn canonical_unit_morphism(s: &SemiMonCat, u: &SaavedraUnit, v: &SaavedraUnit) -> Result<MorId> {
    let c = s.category();
    let (lu, lv) = (derive_lr(s, u)?, derive_lr(s, v)?);
    let psi = c.compose(lu.lambda(v.object), c.inverse(lv.rho(u.object))?);
    let passing: Vec<MorId> = c
        .hom(u.object, v.object)
        .iter()
        .copied()
        .map(|f| is_unit_morphism(s, u, v, f).map(|ok| (f, ok)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(f, ok)| ok.then_some(f))
        .collect();
    if passing != [psi] {
        return Err(Error::violation(
            "the canonical morphism is the unique unit morphism",
            format!("canonical {} but passing {:?}", c.morphism_name(psi), passing),
        ));
    }
    Ok(psi)
}

/// The tensor of two units in both presentations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorUnit {
    pub saavedra: SaavedraUnit,
    pub lr: LrUnit,
}

pub fn tensor_units(s: &SemiMonCat, u: &SaavedraUnit, v: &SaavedraUnit) -> Result<TensorUnit> {
    let c = s.category();
    let (lu, lv) = (derive_lr(s, u)?, derive_lr(s, v)?);
    let (i, j) = (u.object, v.object);
    let ij = s.tensor_obj(i, j);
    let lambda = c.objects().map(|x| c.compose(lu.lambda(x), s.whisker_left(i, lv.lambda(x)))).collect();
    let rho = c.objects().map(|x| c.compose(lv.rho(x), s.whisker_right(lu.rho(x), j))).collect();
    let lr = LrUnit { object: ij, lambda, rho };
    // I J I J -> I J J -> I J
    let gamma = c.compose(s.whisker_right(lv.rho(i), j), s.whisker_left(ij, lu.lambda(j)));
    let saavedra = SaavedraUnit { object: ij, alpha: gamma };
    validate_saavedra(s, &saavedra)?;
    let flags = check_axioms(s, &lr)?;
    if !flags.all() || derive_saavedra(s, &lr)? != saavedra || derive_lr(s, &saavedra)? != lr {
        return Err(Error::violation(
            "tensor of units agrees in both presentations",
            format!("{u:?} ⊗ {v:?}: gamma {} vs lr {flags:?}", c.morphism_name(gamma)),
        ));
    }
    Ok(TensorUnit { saavedra, lr })
}

/// `α = id` and tensoring with `I` is an isomorphism of categories on both
/// sides. When true, the derived constraints are checked to be identities.
pub fn is_strict_unit(s: &SemiMonCat, u: &SaavedraUnit) -> Result<bool> {
    validate_saavedra(s, u)?;
    let c = s.category();
    let strict = u.alpha == c.id(u.object)
        && s.left_tensor_functor(u.object).is_isomorphism()
        && s.right_tensor_functor(u.object).is_isomorphism();
    if strict {
        let lr = derive_lr(s, u)?;
        if c.objects().any(|x| !c.is_identity(lr.lambda(x)) || !c.is_identity(lr.rho(x))) {
            return Err(Error::violation("strict units have identity constraints", format!("{u:?}")));
        }
    }
    Ok(strict)
}

/// The semi-monoidal category of units together with its forgetful functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCategory {
    pub category: Arc<SemiMonCat>,
    /// Units in object-id order.
    pub units: Vec<SaavedraUnit>,
    pub forget: Functor,
}

impl UnitCategory {
    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn position(&self, u: &SaavedraUnit) -> Option<ObjId> {
        self.units.iter().position(|v| v == u).map(ObjId)
    }

    /// The unique morphism between two units of the category.
    pub fn connecting(&self, from: ObjId, to: ObjId) -> MorId {
        self.category.category().hom(from, to)[0]
    }
}

pub fn unit_label(c: &FinCategory, u: &SaavedraUnit) -> String {
    format!("({},{})", c.object_name(u.object), c.morphism_name(u.alpha))
}

/// Builds `U(C)`: units as objects, unit morphisms as arrows, the tensor of
/// units, and the strict forgetful functor. Contractibility, closure under
/// composition and tensor, and strictness of the forgetful functor are
/// asserted.
pub fn unit_category(s: &SemiMonCat) -> Result<UnitCategory> {
    let c = s.category();
    let units = enumerate_saavedra_units(s);
    let mut b = CategoryBuilder::new(format!("U({})", c.name()));
    for u in &units {
        b.object(unit_label(c, u));
    }
    let mut underlying: Vec<MorId> = units.iter().map(|u| c.id(u.object)).collect();
    let mut ends: Vec<(ObjId, ObjId)> = (0..units.len()).map(|k| (ObjId(k), ObjId(k))).collect();
    for (a, u) in units.iter().enumerate() {
        for (bb, v) in units.iter().enumerate() {
            for &psi in c.hom(u.object, v.object) {
                if a == bb && psi == c.id(u.object) {
                    if !is_unit_morphism(s, u, v, psi)? {
                        return Err(Error::violation("identities are unit morphisms", unit_label(c, u)));
                    }
                    continue;
                }
                if is_unit_morphism(s, u, v, psi)? {
                    let name = format!("{}:{}->{}", c.morphism_name(psi), unit_label(c, u), unit_label(c, v));
                    b.morphism(name, ObjId(a), ObjId(bb));
                    underlying.push(psi);
                    ends.push((ObjId(a), ObjId(bb)));
                }
            }
        }
    }
    let find = |from: ObjId, to: ObjId, psi: MorId| -> Option<MorId> {
        (0..underlying.len()).map(MorId).find(|m| ends[m.0] == (from, to) && underlying[m.0] == psi)
    };
    let m = underlying.len();
    for g in 0..m {
        for f in 0..m {
            if ends[f].1 != ends[g].0 {
                continue;
            }
            let h = c.compose(underlying[g], underlying[f]);
            let found = find(ends[f].0, ends[g].1, h).ok_or_else(|| {
                Error::violation(
                    "unit morphisms compose",
                    format!("{} after {}", c.morphism_name(underlying[g]), c.morphism_name(underlying[f])),
                )
            })?;
            b.compose(MorId(g), MorId(f), found);
        }
    }
    let cat = Arc::new(b.build());
    let mut otab = Vec::with_capacity(units.len() * units.len());
    for u in &units {
        for v in &units {
            let t = tensor_units(s, u, v)?.saavedra;
            let pos = units
                .iter()
                .position(|w| *w == t)
                .ok_or_else(|| Error::violation("tensor of units is a unit", unit_label(c, &t)))?;
            otab.push(ObjId(pos));
        }
    }
    let n = units.len();
    let mut mtab = Vec::with_capacity(m * m);
    for f in 0..m {
        for g in 0..m {
            let from = otab[ends[f].0 .0 * n + ends[g].0 .0];
            let to = otab[ends[f].1 .0 * n + ends[g].1 .0];
            let psi = s.tensor_mor(underlying[f], underlying[g]);
            let found = find(from, to, psi).ok_or_else(|| {
                Error::violation("tensor of unit morphisms is a unit morphism", c.morphism_name(psi).to_string())
            })?;
            mtab.push(found);
        }
    }
    let semimon = SemiMonCat::new(cat.clone(), otab, mtab)?;
    let report = semimon.validate();
    if !report.is_valid() {
        return Err(Error::violation("the category of units is semi-monoidal", format!("{:?}", report.violations)));
    }
    if n > 0 && !cat.is_contractible() {
        return Err(Error::violation("the category of units is contractible", c.name().to_string()));
    }
    let forget = Functor::new(cat.clone(), c.clone(), units.iter().map(|u| u.object).collect(), underlying)?;
    for a in cat.objects() {
        for bb in cat.objects() {
            if forget.obj(semimon.tensor_obj(a, bb)) != s.tensor_obj(forget.obj(a), forget.obj(bb)) {
                return Err(Error::violation("the forgetful functor is strict", "object tensor".to_string()));
            }
        }
    }
    for f in cat.morphisms() {
        for g in cat.morphisms() {
            if forget.mor(semimon.tensor_mor(f, g)) != s.tensor_mor(forget.mor(f), forget.mor(g)) {
                return Err(Error::violation("the forgetful functor is strict", "morphism tensor".to_string()));
            }
        }
    }
    Ok(UnitCategory { category: Arc::new(semimon), units, forget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn su(object: usize, alpha: usize) -> SaavedraUnit {
        SaavedraUnit { object: ObjId(object), alpha: MorId(alpha) }
    }

    fn lr1(l: usize, r: usize) -> LrUnit {
        LrUnit { object: ObjId(0), lambda: vec![MorId(l)], rho: vec![MorId(r)] }
    }

    #[test]
    fn axioms_on_z2eh() {
        let z = fixtures::z2eh();
        assert!(check_axioms(&z, &lr1(1, 1)).unwrap().all());
        let mixed = check_axioms(&z, &lr1(0, 1)).unwrap();
        assert!(!mixed.lambda_eq_rho);
        assert!(check_axioms(&fixtures::term(), &lr1(0, 0)).unwrap().all());
    }

    #[test]
    fn ill_typed_candidate_is_rejected() {
        let p = fixtures::poset2();
        // w: 1 -> 0 is not in hom(1 1, 1)
        let u = LrUnit { object: ObjId(1), lambda: vec![MorId(0), MorId(2)], rho: vec![MorId(0), MorId(1)] };
        assert!(matches!(check_axioms(&p, &u), Err(Error::Typing(_))));
    }

    #[test]
    fn kelly_sets_on_fixtures() {
        let z = verify_kelly_implications(&fixtures::z2eh(), &mut Budget::unlimited()).unwrap();
        assert_eq!(z.candidates, 4);
        assert!(z.sets_coincide());
        assert_eq!(z.satisfying_exchange, vec![lr1(0, 0), lr1(1, 1)]);
        for s in [fixtures::term(), fixtures::ind2(), fixtures::poset2()] {
            assert!(verify_kelly_implications(&s, &mut Budget::unlimited()).unwrap().sets_coincide());
        }
        let t = verify_kelly_implications(&fixtures::term(), &mut Budget::unlimited()).unwrap();
        assert_eq!(t.satisfying_exchange, vec![lr1(0, 0)]);
    }

    #[test]
    fn saavedra_enumeration() {
        assert_eq!(enumerate_saavedra_units(&fixtures::xor2()), vec![su(0, 0)]);
        assert_eq!(enumerate_saavedra_units(&fixtures::z2eh()), vec![su(0, 0), su(0, 1)]);
        assert_eq!(enumerate_saavedra_units(&fixtures::poset2()), vec![su(1, 1)]);
        assert_eq!(enumerate_saavedra_units(&fixtures::min2_disc()), vec![su(1, 1)]);
    }

    #[test]
    fn left_zero_semigroup_has_no_units() {
        let s = fixtures::discrete("left_zero", &[vec![0, 0], vec![1, 1]]);
        assert!(enumerate_saavedra_units(&s).is_empty());
        let u = unit_category(&s).unwrap();
        assert!(u.is_empty());
    }

    #[test]
    fn derive_lr_examples() {
        let z = fixtures::z2eh();
        assert_eq!(derive_lr(&z, &su(0, 1)).unwrap(), lr1(1, 1));
        let p = fixtures::poset2();
        let lr = derive_lr(&p, &su(1, 1)).unwrap();
        assert_eq!(lr.lambda, vec![MorId(0), MorId(1)]);
        assert_eq!(lr.rho, vec![MorId(0), MorId(1)]);
        let i = fixtures::ind2();
        let c = i.category();
        let qq_q = c.hom(ObjId(1), ObjId(1))[0];
        let lr = derive_lr(&i, &SaavedraUnit { object: ObjId(1), alpha: qq_q }).unwrap();
        assert_eq!(lr.lambda(ObjId(0)), c.hom(ObjId(1), ObjId(0))[0]);
    }

    #[test]
    fn derive_lr_rejects_non_units() {
        let p = fixtures::poset2();
        assert!(matches!(derive_lr(&p, &su(0, 0)), Err(Error::NotCancellable { .. })));
    }

    #[test]
    fn derive_saavedra_examples() {
        assert_eq!(derive_saavedra(&fixtures::z2eh(), &lr1(1, 1)).unwrap(), su(0, 1));
        assert_eq!(derive_saavedra(&fixtures::term(), &lr1(0, 0)).unwrap(), su(0, 0));
        let p = fixtures::poset2();
        let u = LrUnit { object: ObjId(1), lambda: vec![MorId(0), MorId(1)], rho: vec![MorId(0), MorId(1)] };
        assert_eq!(derive_saavedra(&p, &u).unwrap(), su(1, 1));
        assert!(matches!(derive_saavedra(&fixtures::z2eh(), &lr1(0, 1)), Err(Error::UnitsDisagree { .. })));
    }

    #[test]
    fn roundtrips_on_fixtures() {
        let z = roundtrip_check(&fixtures::z2eh(), ObjId(0), &mut Budget::unlimited()).unwrap();
        assert!(z.holds());
        assert_eq!(z.saavedra_units.len(), 2);
        for i in [ObjId(0), ObjId(1)] {
            assert!(roundtrip_check(&fixtures::ind2(), i, &mut Budget::unlimited()).unwrap().holds());
        }
        let x = roundtrip_check(&fixtures::xor2(), ObjId(0), &mut Budget::unlimited()).unwrap();
        assert!(x.holds());
        assert_eq!(x.saavedra_units, vec![su(0, 0)]);
    }

    #[test]
    fn unit_morphisms_on_z2eh() {
        let z = fixtures::z2eh();
        let (a, b) = (su(0, 0), su(0, 1));
        assert!(is_unit_morphism(&z, &a, &b, MorId(1)).unwrap());
        assert!(!is_unit_morphism(&z, &a, &b, MorId(0)).unwrap());
        assert!(is_unit_morphism(&z, &a, &a, MorId(0)).unwrap());
        assert_eq!(canonical_unit_morphism(&z, &a, &b).unwrap(), MorId(1));
        assert_eq!(canonical_unit_morphism(&z, &b, &b).unwrap(), MorId(0));
    }

    #[test]
    fn unit_morphisms_on_ind2() {
        let i = fixtures::ind2();
        let units = enumerate_saavedra_units(&i);
        let (p, q) = (units[0], units[1]);
        assert_eq!((p.object, q.object), (ObjId(0), ObjId(1)));
        let pq = i.category().hom(ObjId(0), ObjId(1))[0];
        assert!(is_unit_morphism(&i, &p, &q, pq).unwrap());
        assert_eq!(canonical_unit_morphism(&i, &p, &q).unwrap(), pq);
        assert_eq!(tensor_units(&i, &p, &q).unwrap().saavedra.object, ObjId(1));
    }

    #[test]
    fn unit_categories() {
        let z = unit_category(&fixtures::z2eh()).unwrap();
        assert_eq!(z.category.category().object_count(), 2);
        assert_eq!(z.category.category().morphism_count(), 4);
        assert!(z.category.category().is_contractible());
        assert_eq!(z.forget.mor(z.connecting(ObjId(0), ObjId(1))), MorId(1));
        let x = unit_category(&fixtures::xor2()).unwrap();
        assert_eq!(x.units.len(), 1);
        assert!(x.category.category().is_contractible());
    }

    #[test]
    fn tensor_of_units() {
        let z = fixtures::z2eh();
        // γ = (ρ' ⊗ J) ∘ (I J ⊗ λ_J) = s ∘ id = s
        assert_eq!(tensor_units(&z, &su(0, 0), &su(0, 1)).unwrap().saavedra, su(0, 1));
        assert_eq!(tensor_units(&z, &su(0, 1), &su(0, 1)).unwrap().saavedra, su(0, 0));
        let x = fixtures::xor2();
        assert_eq!(tensor_units(&x, &su(0, 0), &su(0, 0)).unwrap().saavedra, su(0, 0));
    }

    #[test]
    fn strict_units() {
        assert!(is_strict_unit(&fixtures::xor2(), &su(0, 0)).unwrap());
        assert!(!is_strict_unit(&fixtures::z2eh(), &su(0, 1)).unwrap());
        let i = fixtures::ind2();
        let q = enumerate_saavedra_units(&i)[1];
        assert!(!is_strict_unit(&i, &q).unwrap());
    }

    #[test]
    fn unit_theorems_on_every_fixture() {
        for (name, s) in fixtures::all() {
            let c = s.category();
            for u in enumerate_saavedra_units(&s) {
                assert!(is_associative(&s, &u), "{name}");
                assert!(s.left_tensor_functor(u.object).is_essentially_surjective(), "{name}");
                assert!(s.right_tensor_functor(u.object).is_essentially_surjective(), "{name}");
                let lr = derive_lr(&s, &u).unwrap();
                assert!(check_axioms(&s, &lr).unwrap().exchange, "{name}");
            }
            for i in c.objects() {
                let units = brute_force_lr_units(&s, i, &mut Budget::unlimited()).unwrap();
                for a in &units {
                    // a fixed λ admits at most one ρ
                    assert_eq!(units.iter().filter(|b| b.lambda == a.lambda).count(), 1, "{name}");
                }
            }
            let all = enumerate_saavedra_units(&s);
            for u in &all {
                for v in &all {
                    for &psi in c.hom(u.object, v.object) {
                        let senses = unit_morphism_senses(&s, u, v, psi).unwrap();
                        assert_eq!(senses.left_triangles, senses.right_triangles, "{name}");
                        assert_eq!(senses.lr(), senses.saavedra, "{name}");
                    }
                }
            }
            let uc = unit_category(&s).unwrap();
            assert!(uc.is_empty() || uc.category.category().is_contractible(), "{name}");
        }
    }
}
