use serde::Serialize;

use super::{MultiplicativeFunctor, UnitPair};
use crate::error::{Error, Result};
use crate::fincat::{MorId, ObjId};
use crate::units::{derive_lr, is_unit_morphism, validate_saavedra, LrUnit, SaavedraUnit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strength {
    Strong,
    Lax,
}

/// A multiplicative functor together with designated units on both sides
/// and their derived constraints.
#[derive(Debug, Clone)]
pub struct CompatContext<'a> {
    pub functor: &'a MultiplicativeFunctor,
    pub units: UnitPair,
    source_lr: LrUnit,
    target_lr: LrUnit,
}

/// The LR triangles, evaluated separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LrSides {
    pub left_all: bool,
    pub right_all: bool,
    /// The left triangle at `X = I` only.
    pub left_at_unit: bool,
}

/// The three parts of a lax Saavedra-unit compatibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LaxSaavedraParts {
    pub homomorphism: bool,
    pub gentle: bool,
    pub epi: bool,
}

impl LaxSaavedraParts {
    pub fn holds(&self) -> bool {
        self.homomorphism && self.gentle && self.epi
    }
}

impl<'a> CompatContext<'a> {
    pub fn new(functor: &'a MultiplicativeFunctor, units: UnitPair) -> Result<Self> {
        let source_lr = derive_lr(functor.source(), &units.source)?;
        let target_lr = derive_lr(functor.target(), &units.target)?;
        Ok(CompatContext { functor, units, source_lr, target_lr })
    }

    pub fn source_lr(&self) -> &LrUnit {
        &self.source_lr
    }

    pub fn target_lr(&self) -> &LrUnit {
        &self.target_lr
    }

    /// Every arrow `J -> F I`.
    pub fn phi0_candidates(&self) -> Vec<MorId> {
        let d = self.functor.target().category();
        d.hom(self.units.target.object, self.functor.obj(self.units.source.object)).to_vec()
    }

    fn check_phi0(&self, phi0: MorId) -> Result<()> {
        let d = self.functor.target().category();
        let fi = self.functor.obj(self.units.source.object);
        if phi0.0 >= d.morphism_count() || d.dom(phi0) != self.units.target.object || d.cod(phi0) != fi {
            return Err(Error::Typing(format!(
                "phi0 must be an arrow {} -> {}",
                d.object_name(self.units.target.object),
                d.object_name(fi)
            )));
        }
        Ok(())
    }

    fn left_at(&self, phi0: MorId, x: ObjId) -> bool {
        let (f, t) = (self.functor, &**self.functor.target());
        let i = self.units.source.object;
        let fx = f.obj(x);
        let path = [f.mor(self.source_lr.lambda(x)), f.phi2(i, x), t.whisker_right(phi0, fx)];
        self.target_lr.lambda(fx) == t.category().compose_all(&path)
    }

    fn right_at(&self, phi0: MorId, x: ObjId) -> bool {
        let (f, t) = (self.functor, &**self.functor.target());
        let i = self.units.source.object;
        let fx = f.obj(x);
        let path = [f.mor(self.source_lr.rho(x)), f.phi2(x, i), t.whisker_left(fx, phi0)];
        self.target_lr.rho(fx) == t.category().compose_all(&path)
    }

    pub fn lr_sides(&self, phi0: MorId) -> Result<LrSides> {
        self.check_phi0(phi0)?;
        let c = self.functor.source().category();
        Ok(LrSides {
            left_all: c.objects().all(|x| self.left_at(phi0, x)),
            right_all: c.objects().all(|x| self.right_at(phi0, x)),
            left_at_unit: self.left_at(phi0, self.units.source.object),
        })
    }

    /// `F(α) ∘ φ₂(I, I)`, the multiplication transported to `F I`.
    pub fn image_alpha(&self) -> MorId {
        let f = self.functor;
        let i = self.units.source.object;
        f.target().category().compose(f.mor(self.units.source.alpha), f.phi2(i, i))
    }

    fn homomorphism(&self, phi0: MorId) -> bool {
        let t = &**self.functor.target();
        let d = t.category();
        d.compose(self.image_alpha(), t.tensor_mor(phi0, phi0)) == d.compose(phi0, self.units.target.alpha)
    }

    pub fn saavedra_lax_parts(&self, phi0: MorId) -> Result<LaxSaavedraParts> {
        self.check_phi0(phi0)?;
        let (f, t) = (self.functor, &**self.functor.target());
        let (c, d) = (f.source().category(), t.category());
        let i = self.units.source.object;
        let fi = f.obj(i);
        let bar = self.image_alpha();
        let gentle =
            d.is_mono(d.compose(bar, t.whisker_right(phi0, fi))) && d.is_mono(d.compose(bar, t.whisker_left(fi, phi0)));
        let epi = c.objects().all(|x| d.is_epi(f.phi2(i, x)) && d.is_epi(f.phi2(x, i)));
        Ok(LaxSaavedraParts { homomorphism: self.homomorphism(phi0), gentle, epi })
    }

    /// The gentle composites `F(α) ∘ φ₂ ∘ (φ₀ ⊗ F I)` and
    /// `F(α) ∘ φ₂ ∘ (F I ⊗ φ₀)`.
    pub fn gentle_composites(&self, phi0: MorId) -> (MorId, MorId) {
        let t = &**self.functor.target();
        let d = t.category();
        let fi = self.functor.obj(self.units.source.object);
        let bar = self.image_alpha();
        (d.compose(bar, t.whisker_right(phi0, fi)), d.compose(bar, t.whisker_left(fi, phi0)))
    }
}

pub fn check_lr_compat(ctx: &CompatContext<'_>, phi0: MorId, strength: Strength) -> Result<bool> {
    let sides = ctx.lr_sides(phi0)?;
    let lax = sides.left_all && sides.right_all;
    Ok(match strength {
        Strength::Lax => lax,
        Strength::Strong => lax && ctx.functor.is_strong() && ctx.functor.target().category().is_iso(phi0).is_some(),
    })
}

pub fn check_saavedra_compat_strong(ctx: &CompatContext<'_>, phi0: MorId) -> Result<bool> {
    ctx.check_phi0(phi0)?;
    let d = ctx.functor.target().category();
    Ok(ctx.functor.is_strong() && d.is_iso(phi0).is_some() && ctx.homomorphism(phi0))
}

pub fn check_saavedra_compat_lax(ctx: &CompatContext<'_>, phi0: MorId) -> Result<bool> {
    Ok(ctx.saavedra_lax_parts(phi0)?.holds())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdicts {
    pub lr_strong: bool,
    pub saavedra_strong: bool,
    pub lr_lax: bool,
    pub saavedra_lax: bool,
    pub sides: LrSides,
    pub parts: LaxSaavedraParts,
}

/// Evaluates both senses of compatibility, strong and lax. A disagreement
/// is a theorem violation.
pub fn equivalence_audit(ctx: &CompatContext<'_>, phi0: MorId) -> Result<EquivalenceVerdicts> {
    let sides = ctx.lr_sides(phi0)?;
    let parts = ctx.saavedra_lax_parts(phi0)?;
    let v = EquivalenceVerdicts {
        lr_strong: check_lr_compat(ctx, phi0, Strength::Strong)?,
        saavedra_strong: check_saavedra_compat_strong(ctx, phi0)?,
        lr_lax: sides.left_all && sides.right_all,
        saavedra_lax: parts.holds(),
        sides,
        parts,
    };
    let d = ctx.functor.target().category();
    if v.lr_strong != v.saavedra_strong {
        return Err(Error::violation(
            "strong LR and Saavedra compatibilities agree",
            format!("phi0 = {}: {v:?}", d.morphism_name(phi0)),
        ));
    }
    if v.lr_lax != v.saavedra_lax {
        return Err(Error::violation(
            "lax LR and Saavedra compatibilities agree",
            format!("phi0 = {}: {v:?}", d.morphism_name(phi0)),
        ));
    }
    if v.saavedra_strong && !v.saavedra_lax {
        return Err(Error::violation(
            "strong compatibilities are lax compatibilities",
            format!("phi0 = {}: {v:?}", d.morphism_name(phi0)),
        ));
    }
    Ok(v)
}

/// `(F I, F(α) ∘ φ₂(I, I))`, checked to be a unit with `phi0` a unit
/// morphism into it. Requires a strong compatibility.
pub fn image_unit(ctx: &CompatContext<'_>, phi0: MorId) -> Result<SaavedraUnit> {
    if !check_saavedra_compat_strong(ctx, phi0)? {
        return Err(Error::Precondition("phi0 is not a strong compatibility".into()));
    }
    let t = ctx.functor.target();
    let image = SaavedraUnit { object: ctx.functor.obj(ctx.units.source.object), alpha: ctx.image_alpha() };
    let witness = || format!("phi0 = {}", t.category().morphism_name(phi0));
    validate_saavedra(t, &image)
        .map_err(|e| Error::violation("the image of a unit is a unit", format!("{}: {e}", witness())))?;
    if !is_unit_morphism(t, &ctx.units.target, &image, phi0)? {
        return Err(Error::violation("a compatibility is a morphism of units", witness()));
    }
    Ok(image)
}

/// The image `(F I, F(α) ∘ φ₂(I, I))` of a source unit, if it is a unit.
pub fn image_is_unit(f: &MultiplicativeFunctor, u: &SaavedraUnit) -> Option<SaavedraUnit> {
    let t = f.target();
    let alpha = t.category().compose(f.mor(u.alpha), f.phi2(u.object, u.object));
    let image = SaavedraUnit { object: f.obj(u.object), alpha };
    validate_saavedra(t, &image).ok().map(|_| image)
}

/// Which automatic-epi situation applies to a lax candidate, and what was
/// confirmed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LaxSpecialCases {
    /// `φ₀` and every `φ₂(I, X)`, `φ₂(X, I)` are mono.
    pub case_a: bool,
    /// Every source object is isomorphic to `I`.
    pub case_b: bool,
    /// Homomorphism and gentle parts hold, so the `X = I` identity was
    /// checked.
    pub x_eq_i_checked: bool,
    /// A special case applied and the epi condition and LR verdict were
    /// confirmed.
    pub epi_derived: bool,
}

/// When homomorphism and gentleness hold: the gentle composites equal
/// `λ^J` and `ρ^J` at `F I`, and in either special case the epi condition
/// and the LR compatibility follow.
pub fn lax_special_cases_audit(ctx: &CompatContext<'_>, phi0: MorId) -> Result<LaxSpecialCases> {
    let parts = ctx.saavedra_lax_parts(phi0)?;
    let f = ctx.functor;
    let (c, d) = (f.source().category(), f.target().category());
    let i = ctx.units.source.object;
    let case_a = d.is_mono(phi0) && c.objects().all(|x| d.is_mono(f.phi2(i, x)) && d.is_mono(f.phi2(x, i)));
    let case_b = c.objects().all(|x| c.hom(x, i).iter().any(|&g| c.is_iso(g).is_some()));
    let witness = || format!("phi0 = {}", d.morphism_name(phi0));
    let x_eq_i_checked = parts.homomorphism && parts.gentle;
    if x_eq_i_checked {
        let fi = f.obj(i);
        let (left, right) = ctx.gentle_composites(phi0);
        if left != ctx.target_lr().lambda(fi) || right != ctx.target_lr().rho(fi) {
            return Err(Error::violation("gentle composites are the constraints at F I", witness()));
        }
    }
    let epi_derived = x_eq_i_checked && (case_a || case_b);
    if epi_derived {
        if !parts.epi {
            let which =
                if case_b { "every object isomorphic to the unit forces epi" } else { "monic comparisons force epi" };
            return Err(Error::violation(which, witness()));
        }
        if !check_lr_compat(ctx, phi0, Strength::Lax)? {
            return Err(Error::violation("a special-case lax compatibility is an LR compatibility", witness()));
        }
    }
    Ok(LaxSpecialCases { case_a, case_b, x_eq_i_checked, epi_derived })
}
