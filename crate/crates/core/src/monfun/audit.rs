use std::sync::Arc;

use serde::Serialize;

use super::compat::{equivalence_audit, image_is_unit, lax_special_cases_audit, CompatContext};
use super::lift::{compat_from_lift, enumerate_lifts, lift_to_unit_categories};
use super::nat::{auto_unit_condition, check_monoidal_nt, enumerate_multiplicative_transformations, MonoidalNatTrans};
use super::{enumerate_multiplicative, MultiplicativeFunctor, UnitPair};
use crate::error::{Error, Result};
use crate::exec::AuditConfig;
use crate::fincat::MorId;
use crate::tensor::SemiMonCat;
use crate::units::{designated_unit, enumerate_saavedra_units, unit_category, UnitCategory};

/// Tallies of an exhaustive audit over every multiplicative functor between
/// two semi-monoidal categories, every unit pair and every unit comparison.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FunctorPairAudit {
    pub source: String,
    pub target: String,
    pub functors: usize,
    pub strong_functors: usize,
    pub unit_pairs: usize,
    pub candidates: usize,
    pub strong_passing: usize,
    pub lax_passing: usize,
    /// Lax compatibilities whose `φ₀` is not invertible.
    pub lax_not_iso: usize,
    /// Strong functors admitting a compatibility for some unit pair.
    pub monoidal_functors: usize,
    /// Candidates that satisfy exactly one of the left and right families
    /// of triangles (lax search for a one-sided compatibility).
    pub one_sided_lax: usize,
    pub special_case_a: usize,
    pub special_case_b: usize,
    pub lifts_built: usize,
    pub lifts_enumerated: usize,
    /// Pairs of monoidal functors (designated units) whose transformations
    /// were enumerated.
    pub transformation_pairs: usize,
    pub multiplicative_transformations: usize,
    pub monoidal_transformations: usize,
    pub auto_unit_applied: usize,
}

impl FunctorPairAudit {
    fn absorb(&mut self, other: &FunctorTally) {
        self.candidates += other.candidates;
        self.strong_passing += other.strong_passing;
        self.lax_passing += other.lax_passing;
        self.lax_not_iso += other.lax_not_iso;
        self.monoidal_functors += other.monoidal as usize;
        self.one_sided_lax += other.one_sided_lax;
        self.special_case_a += other.special_case_a;
        self.special_case_b += other.special_case_b;
        self.lifts_built += other.lifts_built;
        self.lifts_enumerated += other.lifts_enumerated;
    }
}

#[derive(Debug, Default)]
struct FunctorTally {
    candidates: usize,
    strong_passing: usize,
    lax_passing: usize,
    lax_not_iso: usize,
    monoidal: bool,
    one_sided_lax: usize,
    special_case_a: usize,
    special_case_b: usize,
    lifts_built: usize,
    lifts_enumerated: usize,
    /// The strong compatibility for the designated pair, if any.
    designated_phi0: Option<MorId>,
}

struct Setting<'a> {
    pairs: &'a [UnitPair],
    designated: Option<UnitPair>,
    uc: &'a UnitCategory,
    ud: &'a UnitCategory,
    config: &'a AuditConfig,
}

fn audit_functor(f: &MultiplicativeFunctor, st: &Setting<'_>) -> Result<FunctorTally> {
    let d = f.target().category();
    let mut tally = FunctorTally::default();
    let strong = f.is_strong();
    let mut passing_per_pair = Vec::with_capacity(st.pairs.len());
    for pair in st.pairs {
        let ctx = CompatContext::new(f, *pair)?;
        let mut strong_passing = Vec::new();
        for phi0 in ctx.phi0_candidates() {
            tally.candidates += 1;
            let v = equivalence_audit(&ctx, phi0)?;
            let cases = lax_special_cases_audit(&ctx, phi0)?;
            tally.special_case_a += cases.case_a as usize;
            tally.special_case_b += cases.case_b as usize;
            if v.sides.left_all != v.sides.right_all {
                tally.one_sided_lax += 1;
            }
            if v.lr_lax {
                tally.lax_passing += 1;
                if d.is_iso(phi0).is_none() {
                    tally.lax_not_iso += 1;
                }
            }
            if strong && d.is_iso(phi0).is_some() {
                let s = v.sides;
                if s.left_all != s.right_all || s.left_all != s.left_at_unit {
                    return Err(Error::violation(
                        "left and right compatibility agree and are decided at I",
                        format!("phi0 = {}: {s:?}", d.morphism_name(phi0)),
                    ));
                }
            }
            if v.saavedra_strong {
                strong_passing.push(phi0);
            }
        }
        if strong_passing.len() > 1 {
            return Err(Error::violation(
                "a strong compatibility is unique",
                format!("{} passing for {pair:?}", strong_passing.len()),
            ));
        }
        if strong {
            let image = image_is_unit(f, &pair.source).is_some();
            if image != !strong_passing.is_empty() {
                return Err(Error::violation(
                    "a strong functor is monoidal iff the image of a unit is a unit",
                    format!("{pair:?}: image unit {image}, compatibilities {strong_passing:?}"),
                ));
            }
        }
        tally.strong_passing += strong_passing.len();
        if Some(*pair) == st.designated {
            tally.designated_phi0 = strong_passing.first().copied();
        }
        passing_per_pair.push(strong_passing.first().copied());
    }
    if passing_per_pair.iter().any(Option::is_some) && passing_per_pair.iter().any(Option::is_none) {
        return Err(Error::violation(
            "a compatibility for one unit pair gives one for every pair",
            format!("{passing_per_pair:?}"),
        ));
    }
    tally.monoidal = passing_per_pair.first().is_some_and(Option::is_some);
    if strong && !st.uc.is_empty() && !st.ud.is_empty() {
        let mut budget = st.config.budget("lift enumeration");
        let lifts = enumerate_lifts(f, st.uc, st.ud, &mut budget)?;
        tally.lifts_enumerated = lifts.len();
        match (st.designated, tally.designated_phi0) {
            (Some(pair), Some(phi0)) => {
                let ctx = CompatContext::new(f, pair)?;
                let lift = lift_to_unit_categories(&ctx, phi0, st.uc, st.ud)?;
                tally.lifts_built = 1;
                if !lifts.contains(&lift) {
                    return Err(Error::violation("the constructed lift is a lift", f.target().name().to_string()));
                }
                for l in &lifts {
                    if compat_from_lift(&ctx, l, st.uc, st.ud)? != Some(phi0) || *l != lift {
                        return Err(Error::violation("lifts and compatibilities correspond", format!("{l:?}")));
                    }
                }
            }
            _ => {
                if !lifts.is_empty() {
                    return Err(Error::violation(
                        "a lift exists only when a compatibility does",
                        format!("{} lifts", lifts.len()),
                    ));
                }
            }
        }
    }
    Ok(tally)
}

/// Exhaustive audit of unit compatibilities for every multiplicative functor
/// `s -> t`. Enumeration is serial and budgeted; the per-functor checks run
/// through `config.map`, so the result does not depend on the execution
/// mode.
pub fn functor_pair_audit(s: &Arc<SemiMonCat>, t: &Arc<SemiMonCat>, config: &AuditConfig) -> Result<FunctorPairAudit> {
    let mut budget = config.budget("multiplicative functor enumeration");
    let functors = enumerate_multiplicative(s, t, &mut budget)?;
    let su = enumerate_saavedra_units(s);
    let tu = enumerate_saavedra_units(t);
    let pairs: Vec<UnitPair> =
        su.iter().flat_map(|&source| tu.iter().map(move |&target| UnitPair { source, target })).collect();
    let designated = designated_unit(s).zip(designated_unit(t)).map(|(source, target)| UnitPair { source, target });
    let (uc, ud) = (unit_category(s)?, unit_category(t)?);
    let setting = Setting { pairs: &pairs, designated, uc: &uc, ud: &ud, config };
    let tallies = config.try_map(&functors, |f| audit_functor(f, &setting))?;
    let mut audit = FunctorPairAudit {
        source: s.name().to_string(),
        target: t.name().to_string(),
        functors: functors.len(),
        strong_functors: functors.iter().filter(|f| f.is_strong()).count(),
        unit_pairs: pairs.len(),
        ..Default::default()
    };
    for tally in &tallies {
        audit.absorb(tally);
    }
    if let Some(pair) = designated {
        let monoidal: Vec<(&MultiplicativeFunctor, MorId)> =
            functors.iter().zip(&tallies).filter_map(|(f, t)| t.designated_phi0.map(|p| (f, p))).collect();
        let mut budget = config.budget("monoidal transformation enumeration");
        for &(f, phi0) in &monoidal {
            for &(g, gamma0) in &monoidal {
                audit.transformation_pairs += 1;
                for components in enumerate_multiplicative_transformations(f, g, &mut budget)? {
                    audit.multiplicative_transformations += 1;
                    let u = MonoidalNatTrans {
                        from: f.clone(),
                        to: g.clone(),
                        phi0,
                        gamma0,
                        unit: pair.source.object,
                        components,
                    };
                    if check_monoidal_nt(&u)?.monoidal() {
                        audit.monoidal_transformations += 1;
                    }
                    audit.auto_unit_applied += auto_unit_condition(&u)?.applies as usize;
                }
            }
        }
    }
    Ok(audit)
}
