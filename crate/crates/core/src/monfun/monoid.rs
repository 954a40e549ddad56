use std::sync::Arc;

use serde::Serialize;

use super::compat::{lax_special_cases_audit, CompatContext, Strength};
use super::{check_lr_compat, check_saavedra_compat_lax, MultiplicativeFunctor, UnitPair};
use crate::error::{Error, Result};
use crate::exec::Budget;
use crate::fincat::{Functor, MorId, ObjId};
use crate::fixtures;
use crate::tensor::SemiMonCat;
use crate::units::{derive_lr, LrUnit, SaavedraUnit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monoid {
    pub object: ObjId,
    pub mu: MorId,
    pub eta: MorId,
}

/// `mu: M M -> M` and `mu ∘ (mu ⊗ M) = mu ∘ (M ⊗ mu)`.
pub fn is_semi_monoid(s: &SemiMonCat, m: ObjId, mu: MorId) -> bool {
    let c = s.category();
    c.dom(mu) == s.tensor_obj(m, m)
        && c.cod(mu) == m
        && c.compose(mu, s.whisker_right(mu, m)) == c.compose(mu, s.whisker_left(m, mu))
}

/// `mu ∘ (eta ⊗ M)` and `mu ∘ (M ⊗ eta)` are monomorphisms.
pub fn is_gentle_arrow(s: &SemiMonCat, m: ObjId, mu: MorId, eta: MorId) -> bool {
    let c = s.category();
    c.is_mono(c.compose(mu, s.whisker_right(eta, m))) && c.is_mono(c.compose(mu, s.whisker_left(m, eta)))
}

fn eta_typed(s: &SemiMonCat, unit: ObjId, m: &Monoid) -> bool {
    let c = s.category();
    c.dom(m.eta) == unit && c.cod(m.eta) == m.object
}

/// Semi-monoid whose unit triangles give `λ_M` and `ρ_M`.
pub fn is_classical_monoid(s: &SemiMonCat, lr: &LrUnit, m: &Monoid) -> bool {
    let c = s.category();
    is_semi_monoid(s, m.object, m.mu)
        && eta_typed(s, lr.object, m)
        && c.compose(m.mu, s.whisker_right(m.eta, m.object)) == lr.lambda(m.object)
        && c.compose(m.mu, s.whisker_left(m.object, m.eta)) == lr.rho(m.object)
}

/// Semi-monoid with `eta` a gentle semi-monoid homomorphism out of `(I, α)`.
pub fn is_saavedra_monoid(s: &SemiMonCat, u: &SaavedraUnit, m: &Monoid) -> bool {
    let c = s.category();
    is_semi_monoid(s, m.object, m.mu)
        && eta_typed(s, u.object, m)
        && c.compose(m.mu, s.tensor_mor(m.eta, m.eta)) == c.compose(m.eta, u.alpha)
        && is_gentle_arrow(s, m.object, m.mu, m.eta)
}

/// `psi: M -> N` with `psi ∘ mu = nu ∘ (psi ⊗ psi)` and `psi ∘ eta = eta'`.
pub fn is_monoid_homomorphism(s: &SemiMonCat, m: &Monoid, n: &Monoid, psi: MorId) -> bool {
    let c = s.category();
    c.dom(psi) == m.object
        && c.cod(psi) == n.object
        && c.compose(psi, m.mu) == c.compose(n.mu, s.tensor_mor(psi, psi))
        && c.compose(psi, m.eta) == n.eta
}

/// The multiplicative functor `term -> S` picking `M`, with `φ₂ = mu`, and
/// its unit comparison `eta`.
pub fn monoid_as_lax_functor(s: &Arc<SemiMonCat>, m: &Monoid) -> Result<(MultiplicativeFunctor, MorId)> {
    let term = fixtures::term();
    let f = Functor::constant(term.category().clone(), s.category().clone(), m.object);
    Ok((MultiplicativeFunctor::new(term, s.clone(), f, vec![m.mu])?, m.eta))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoidAudit {
    pub unit: SaavedraUnit,
    pub candidates: usize,
    pub semi_monoids: usize,
    pub classical: Vec<Monoid>,
    pub saavedra: Vec<Monoid>,
    pub homomorphisms: usize,
    /// Candidates whose lax-functor encoding was cross-checked.
    pub encodings_checked: usize,
}

/// Enumerates every `(M, mu, eta)` and compares the classical and Saavedra
/// notions of monoid, their homomorphisms, and the lax-functor encoding of
/// each candidate from `term`. Any disagreement is a theorem violation.
pub fn monoid_audit(s: &Arc<SemiMonCat>, unit: &SaavedraUnit, budget: &mut Budget) -> Result<MonoidAudit> {
    let c = s.category();
    let lr = derive_lr(s, unit)?;
    let term = fixtures::term();
    let term_unit = SaavedraUnit { object: ObjId(0), alpha: term.category().id(ObjId(0)) };
    let mut candidates = 0;
    let mut semi_monoids = 0;
    let mut encodings_checked = 0;
    let (mut classical, mut saavedra) = (Vec::new(), Vec::new());
    for m in c.objects() {
        let mus = c.hom(s.tensor_obj(m, m), m);
        let etas = c.hom(unit.object, m);
        let n = (mus.len() * etas.len()) as u64;
        budget.charge(n)?;
        for &mu in mus {
            let semi = is_semi_monoid(s, m, mu);
            for &eta in etas {
                candidates += 1;
                let cand = Monoid { object: m, mu, eta };
                let (cl, sa) = (is_classical_monoid(s, &lr, &cand), is_saavedra_monoid(s, unit, &cand));
                if cl {
                    classical.push(cand);
                }
                if sa {
                    saavedra.push(cand);
                }
                if !semi {
                    continue;
                }
                semi_monoids += 1;
                let (f, phi0) = monoid_as_lax_functor(s, &cand)?;
                if !f.validate().is_valid() {
                    return Err(Error::violation(
                        "semi-monoids are multiplicative functors from term",
                        format!("{cand:?}"),
                    ));
                }
                let ctx = CompatContext::new(&f, UnitPair { source: term_unit, target: *unit })?;
                let lr_verdict = check_lr_compat(&ctx, phi0, Strength::Lax)?;
                let sa_verdict = check_saavedra_compat_lax(&ctx, phi0)?;
                let cases = lax_special_cases_audit(&ctx, phi0)?;
                if lr_verdict != cl || sa_verdict != sa || !cases.case_b {
                    return Err(Error::violation(
                        "monoids are lax monoidal functors from term",
                        format!("{cand:?}: classical {cl}, saavedra {sa}, lr functor {lr_verdict}, saavedra functor {sa_verdict}"),
                    ));
                }
                encodings_checked += 1;
            }
        }
    }
    if classical != saavedra {
        return Err(Error::violation(
            "classical and Saavedra monoids coincide",
            format!("classical {classical:?} vs saavedra {saavedra:?}"),
        ));
    }
    let mut homomorphisms = 0;
    for m in &classical {
        for n in &classical {
            homomorphisms +=
                c.hom(m.object, n.object).iter().filter(|&&psi| is_monoid_homomorphism(s, m, n, psi)).count();
        }
    }
    Ok(MonoidAudit { unit: *unit, candidates, semi_monoids, classical, saavedra, homomorphisms, encodings_checked })
}
