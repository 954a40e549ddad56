//! One function per CLI command. Each returns a report body and a status.

use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};
use unital_core::fair::{comparison_to_unit_category, fair_monoid_audit, fair_roundtrip, to_fair};
use unital_core::gen::{enumerate_eckmann_hilton, enumerate_thin};
use unital_core::monfun::{
    compat_from_lift, enumerate_lifts, enumerate_multiplicative, equivalence_audit, functor_pair_audit, image_unit,
    is_classical_monoid, is_gentle_arrow, is_saavedra_monoid, is_semi_monoid, lax_special_cases_audit,
    lift_to_unit_categories, monoid_audit, CompatContext, FunctorPairAudit, Monoid, UnitPair,
};
use unital_core::units::{
    brute_force_lr_units, canonical_unit_morphism, check_axioms, derive_lr, derive_saavedra, enumerate_saavedra_units,
    is_associative, is_strict_unit, lr_candidates, roundtrip_check, unit_category, validate_saavedra,
    verify_kelly_implications,
};
use unital_core::{AuditConfig, Error, FinCategory, MorId, ObjId, SaavedraUnit, SemiMonCat};

use crate::corpus;
use crate::dsl::{emit, CatDocument, CategoryDecl, FunctorDecl};
use crate::report::{self, Outcome, Status};
use crate::CliError;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// The categories named by `--category`, or all of them.
fn select<'d>(doc: &'d CatDocument, name: Option<&str>) -> Result<Vec<&'d CategoryDecl>, CliError> {
    match name {
        Some(n) => doc.category(n).map(|c| vec![c]).ok_or_else(|| usage(format!("no category named `{n}`"))),
        None => Ok(doc.categories.iter().collect()),
    }
}

fn select_one<'d>(doc: &'d CatDocument, name: Option<&str>) -> Result<&'d CategoryDecl, CliError> {
    match (name, doc.categories.as_slice()) {
        (Some(_), _) => Ok(select(doc, name)?[0]),
        (None, [only]) => Ok(only),
        (None, _) => Err(usage("the document has several categories; pass --category")),
    }
}

fn select_functors<'d>(doc: &'d CatDocument, name: Option<&str>) -> Result<Vec<&'d FunctorDecl>, CliError> {
    match name {
        Some(n) => doc.functor(n).map(|f| vec![f]).ok_or_else(|| usage(format!("no functor named `{n}`"))),
        None if doc.functors.is_empty() => Err(usage("the document declares no functor")),
        None => Ok(doc.functors.iter().collect()),
    }
}

/// Structural validity of a category; invalid input stops semantic commands.
fn require_valid(decl: &CategoryDecl) -> Result<(), CliError> {
    let report = decl.semimon.validate();
    if !report.is_valid() {
        return Err(input(format!(
            "category {} is invalid ({} violations); run `validate` for details",
            decl.name(),
            report.violations.len()
        )));
    }
    Ok(())
}

/// The declared unit, checked, or the least unit.
fn designated(decl: &CategoryDecl) -> Result<Option<SaavedraUnit>, CliError> {
    match decl.unit {
        Some(u) => {
            validate_saavedra(&decl.semimon, &u)
                .map_err(|e| input(format!("declared unit of {} is not a unit: {e}", decl.name())))?;
            Ok(Some(u))
        }
        None => Ok(enumerate_saavedra_units(&decl.semimon).into_iter().next()),
    }
}

fn functor_ends<'d>(doc: &'d CatDocument, f: &FunctorDecl) -> (&'d CategoryDecl, &'d CategoryDecl) {
    (&doc.categories[f.source], &doc.categories[f.target])
}

fn require_valid_functor(doc: &CatDocument, f: &FunctorDecl) -> Result<(), CliError> {
    let (s, t) = functor_ends(doc, f);
    require_valid(s)?;
    require_valid(t)?;
    let report = f.functor.validate();
    if !report.is_valid() {
        return Err(input(format!("functor {} is invalid; run `validate` for details", f.name)));
    }
    Ok(())
}

pub fn validate(doc: &CatDocument) -> Result<Outcome, CliError> {
    let mut status = Status::Ok;
    let mut categories = Vec::new();
    for decl in &doc.categories {
        let c = decl.semimon.category();
        let structure = decl.semimon.validate();
        let mut entry = Map::new();
        entry.insert("name".into(), json!(decl.name()));
        entry.insert("objects".into(), json!(c.object_count()));
        entry.insert("morphisms".into(), json!(c.morphism_count()));
        entry.insert("violations".into(), report::violations(c, &structure));
        let mut valid = structure.is_valid();
        if valid {
            if let Some(u) = decl.unit {
                let verdict = validate_saavedra(&decl.semimon, &u);
                valid &= verdict.is_ok();
                entry.insert(
                    "declared_unit".into(),
                    json!({"unit": report::unit(c, &u), "error": verdict.err().map(|e| e.to_string())}),
                );
            }
            let semi: Vec<Value> = decl
                .monoids
                .iter()
                .map(|m| json!({"object": report::obj(c, m.object), "semi_monoid": is_semi_monoid(&decl.semimon, m.object, m.mu)}))
                .collect();
            entry.insert("monoids".into(), Value::Array(semi));
        }
        entry.insert("valid".into(), json!(valid));
        if !valid {
            status = Status::InvalidInput;
        }
        categories.push(Value::Object(entry));
    }
    let mut functors = Vec::new();
    for f in &doc.functors {
        let (s, t) = functor_ends(doc, f);
        let ends_valid = s.semimon.validate().is_valid() && t.semimon.validate().is_valid();
        let structure = f.functor.validate();
        let mut valid = ends_valid && structure.is_valid();
        let mut phi0_typed = Value::Null;
        if valid {
            if let (Some(p), Ok(Some(i)), Ok(Some(j))) = (f.phi0, designated(s), designated(t)) {
                let d = t.semimon.category();
                let ok = d.dom(p) == j.object && d.cod(p) == f.functor.obj(i.object);
                phi0_typed = json!(ok);
                valid &= ok;
            }
        }
        if !valid {
            status = Status::InvalidInput;
        }
        functors.push(json!({
            "name": f.name,
            "source": s.name(),
            "target": t.name(),
            "ends_valid": ends_valid,
            "violations": report::violations(s.semimon.category(), &structure),
            "phi0_typed": phi0_typed,
            "valid": valid,
        }));
    }
    Ok(Outcome { status, body: json!({"categories": categories, "functors": functors}) })
}

pub fn units(doc: &CatDocument, category: Option<&str>, config: &AuditConfig) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    for decl in select(doc, category)? {
        require_valid(decl)?;
        let s = &decl.semimon;
        let c = s.category();
        let all = enumerate_saavedra_units(s);
        let mut derived = Vec::new();
        for u in &all {
            let lr = derive_lr(s, u)?;
            derived.push(json!({
                "unit": report::unit(c, u),
                "lr": report::lr(c, &lr),
                "associative": is_associative(s, u),
                "strict": is_strict_unit(s, u)?,
                "left_tensor_essentially_surjective": s.left_tensor_functor(u.object).is_essentially_surjective(),
                "right_tensor_essentially_surjective": s.right_tensor_functor(u.object).is_essentially_surjective(),
            }));
        }
        let mut roundtrips = Vec::new();
        let mut budget = config.budget("LR unit enumeration");
        for i in c.objects() {
            let r = roundtrip_check(s, i, &mut budget)?;
            if !r.holds() {
                return Err(CliError::Core(Error::TheoremViolation {
                    theorem: "LR and Saavedra units correspond",
                    witness: format!("{} at {}: {r:?}", decl.name(), c.object_name(i)),
                }));
            }
            roundtrips.push(json!({
                "object": report::obj(c, i),
                "saavedra_units": r.saavedra_units.len(),
                "lr_units": r.lr_units.len(),
                "holds": r.holds(),
            }));
        }
        let uc = unit_category(s)?;
        let ucat = uc.category.category();
        out.push(json!({
            "name": decl.name(),
            "designated_unit": report::opt_unit(c, designated(decl)?.as_ref()),
            "saavedra_units": all.iter().map(|u| report::unit(c, u)).collect::<Vec<_>>(),
            "derived": derived,
            "roundtrip": roundtrips,
            "unit_category": {
                "objects": ucat.object_count(),
                "morphisms": ucat.morphism_count(),
                "contractible": ucat.is_contractible(),
            },
        }));
    }
    Ok(Outcome::ok(json!({"categories": out})))
}

pub fn unit_cat(doc: &CatDocument, category: Option<&str>) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    for decl in select(doc, category)? {
        require_valid(decl)?;
        let s = &decl.semimon;
        let c = s.category();
        let uc = unit_category(s)?;
        let (u, ut) = (uc.category.category(), &uc.category);
        let label = |a: ObjId| report::unit(c, &uc.units[a.0]);
        let morphisms: Vec<Value> = u
            .morphisms()
            .map(|m| {
                json!({
                    "from": label(u.dom(m)),
                    "to": label(u.cod(m)),
                    "underlying": report::mor(c, uc.forget.mor(m)),
                })
            })
            .collect();
        let tensor: Vec<Vec<Value>> =
            u.objects().map(|a| u.objects().map(|b| label(ut.tensor_obj(a, b))).collect()).collect();
        let mut canonical = Vec::new();
        for a in &uc.units {
            for b in &uc.units {
                canonical.push(json!({
                    "from": report::unit(c, a),
                    "to": report::unit(c, b),
                    "morphism": report::mor(c, canonical_unit_morphism(s, a, b)?),
                }));
            }
        }
        out.push(json!({
            "name": decl.name(),
            "objects": uc.units.iter().map(|x| report::unit(c, x)).collect::<Vec<_>>(),
            "morphisms": morphisms,
            "tensor": tensor,
            "canonical_morphisms": canonical,
            "contractible": uc.is_empty() || u.is_contractible(),
            "empty": uc.is_empty(),
        }));
    }
    Ok(Outcome::ok(json!({"categories": out})))
}

/// Parses `OBJ:MOR` against a category.
fn parse_unit(c: &FinCategory, text: &str) -> Result<SaavedraUnit, CliError> {
    let (o, m) = text.split_once(':').ok_or_else(|| usage(format!("--unit expects OBJ:MOR, got `{text}`")))?;
    let object = c.find_object(o).ok_or_else(|| usage(format!("no object `{o}` in {}", c.name())))?;
    let alpha = c.find_morphism(m).ok_or_else(|| usage(format!("no morphism `{m}` in {}", c.name())))?;
    Ok(SaavedraUnit { object, alpha })
}

pub fn derive(doc: &CatDocument, category: Option<&str>, unit: &str) -> Result<Outcome, CliError> {
    let decl = select_one(doc, category)?;
    require_valid(decl)?;
    let s = &decl.semimon;
    let c = s.category();
    let u = parse_unit(c, unit)?;
    validate_saavedra(s, &u).map_err(|e| input(format!("{unit} is not a unit: {e}")))?;
    let lr = derive_lr(s, &u)?;
    let back = derive_saavedra(s, &lr)?;
    Ok(Outcome::ok(json!({
        "category": decl.name(),
        "unit": report::unit(c, &u),
        "lr": report::lr(c, &lr),
        "axioms": check_axioms(s, &lr)?,
        "saavedra_from_lr": report::unit(c, &back),
        "roundtrip": back == u,
    })))
}

pub fn axioms(doc: &CatDocument, category: Option<&str>, config: &AuditConfig) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    for decl in select(doc, category)? {
        require_valid(decl)?;
        let s = &decl.semimon;
        let c = s.category();
        let mut budget = config.budget("LR candidate enumeration");
        let mut candidates = Vec::new();
        for i in c.objects() {
            for cand in lr_candidates(s, i, &mut budget)? {
                candidates.push(json!({"candidate": report::lr(c, &cand), "axioms": check_axioms(s, &cand)?}));
            }
        }
        let lr_units: usize =
            c.objects().map(|i| brute_force_lr_units(s, i, &mut budget).map(|v| v.len())).sum::<Result<usize, _>>()?;
        out.push(json!({"name": decl.name(), "candidates": candidates, "lr_units": lr_units}));
    }
    Ok(Outcome::ok(json!({"categories": out})))
}

pub fn kelly_audit(doc: &CatDocument, category: Option<&str>, config: &AuditConfig) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    let mut status = Status::Ok;
    for decl in select(doc, category)? {
        require_valid(decl)?;
        let s = &decl.semimon;
        let c = s.category();
        let r = verify_kelly_implications(s, &mut config.budget("Kelly candidate enumeration"))?;
        if !r.sets_coincide() {
            status = Status::TheoremViolation;
        }
        let list = |v: &[unital_core::LrUnit]| v.iter().map(|u| report::lr(c, u)).collect::<Vec<_>>();
        out.push(json!({
            "name": decl.name(),
            "candidates": r.candidates,
            "satisfying_exchange": list(&r.satisfying_exchange),
            "satisfying_agree_and_multiplicative": list(&r.satisfying_agree_and_multiplicative),
            "separating": list(&r.separating),
            "sets_coincide": r.sets_coincide(),
        }));
    }
    Ok(Outcome { status, body: json!({"categories": out}) })
}

fn unit_pair(doc: &CatDocument, f: &FunctorDecl) -> Result<Option<UnitPair>, CliError> {
    let (s, t) = functor_ends(doc, f);
    Ok(designated(s)?.zip(designated(t)?).map(|(source, target)| UnitPair { source, target }))
}

fn check_declared_phi0(ctx: &CompatContext<'_>, f: &FunctorDecl) -> Result<(), CliError> {
    if let Some(p) = f.phi0 {
        if !ctx.phi0_candidates().contains(&p) {
            let d = f.functor.target().category();
            return Err(input(format!("phi0 = {} of functor {} is not in hom(J, F I)", d.morphism_name(p), f.name)));
        }
    }
    Ok(())
}

fn candidate_json(ctx: &CompatContext<'_>, phi0: MorId) -> Result<Value, CliError> {
    let d = ctx.functor.target().category();
    let v = equivalence_audit(ctx, phi0)?;
    let cases = lax_special_cases_audit(ctx, phi0)?;
    Ok(json!({
        "phi0": report::mor(d, phi0),
        "phi0_iso": d.is_iso(phi0).is_some(),
        "lr_strong": v.lr_strong,
        "saavedra_strong": v.saavedra_strong,
        "lr_lax": v.lr_lax,
        "saavedra_lax": v.saavedra_lax,
        "left_triangles": v.sides.left_all,
        "right_triangles": v.sides.right_all,
        "left_triangle_at_unit": v.sides.left_at_unit,
        "homomorphism": v.parts.homomorphism,
        "gentle": v.parts.gentle,
        "epi": v.parts.epi,
        "special_cases": cases,
    }))
}

fn pair_audit_json(a: &FunctorPairAudit) -> Value {
    serde_json::to_value(a).expect("serializes")
}

pub fn functor_audit(
    doc: &CatDocument,
    functor: Option<&str>,
    exhaustive: bool,
    config: &AuditConfig,
) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    let selected = if exhaustive && functor.is_none() && doc.functors.is_empty() {
        Vec::new()
    } else {
        select_functors(doc, functor)?
    };
    for f in selected {
        require_valid_functor(doc, f)?;
        let mf = &f.functor;
        let d = mf.target().category();
        let mut entry = json!({
            "name": f.name,
            "source": mf.source().name(),
            "target": mf.target().name(),
            "phi2_iso": mf.is_strong(),
        });
        let Some(pair) = unit_pair(doc, f)? else {
            entry["units"] = Value::Null;
            out.push(entry);
            continue;
        };
        let ctx = CompatContext::new(mf, pair)?;
        check_declared_phi0(&ctx, f)?;
        let candidates = ctx.phi0_candidates();
        let mut rows = Vec::new();
        let (mut strong, mut lax, mut lax_not_iso) = (Vec::new(), Vec::new(), Vec::new());
        for &p in &candidates {
            let row = candidate_json(&ctx, p)?;
            if row["saavedra_strong"] == json!(true) {
                strong.push(p);
            }
            if row["saavedra_lax"] == json!(true) {
                lax.push(p);
                if d.is_iso(p).is_none() {
                    lax_not_iso.push(p);
                }
            }
            rows.push(row);
        }
        if strong.len() > 1 {
            return Err(CliError::Core(Error::TheoremViolation {
                theorem: "a strong compatibility is unique",
                witness: format!("functor {}: {:?}", f.name, strong),
            }));
        }
        let image = match strong.first() {
            Some(&p) => report::unit(d, &image_unit(&ctx, p)?),
            None => Value::Null,
        };
        entry["units"] = json!({
            "source": report::unit(mf.source().category(), &pair.source),
            "target": report::unit(d, &pair.target),
        });
        entry["candidates"] = Value::Array(rows);
        entry["declared_phi0"] = match f.phi0 {
            Some(p) => candidate_json(&ctx, p)?,
            None => Value::Null,
        };
        entry["strong_compatibility"] = strong.first().map_or(Value::Null, |&p| report::mor(d, p));
        entry["lax_compatibilities"] = report::morphisms(d, &lax);
        entry["lax_not_iso"] = report::morphisms(d, &lax_not_iso);
        entry["image_of_unit"] = image;
        entry["strong_functor_with_non_iso_lax_compatibility"] = json!(mf.is_strong() && !lax_not_iso.is_empty());
        out.push(entry);
    }
    let mut body = json!({"functors": out});
    if exhaustive {
        let mut pairs = Vec::new();
        for s in &doc.categories {
            for t in &doc.categories {
                require_valid(s)?;
                require_valid(t)?;
                pairs.push(pair_audit_json(&functor_pair_audit(&s.semimon, &t.semimon, config)?));
            }
        }
        body["pair_audits"] = Value::Array(pairs);
    }
    Ok(Outcome::ok(body))
}

pub fn lift(doc: &CatDocument, functor: Option<&str>, config: &AuditConfig) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    for f in select_functors(doc, functor)? {
        require_valid_functor(doc, f)?;
        let mf = &f.functor;
        let (s, t) = (mf.source(), mf.target());
        let pair = unit_pair(doc, f)?.ok_or_else(|| input(format!("functor {}: an end has no unit", f.name)))?;
        let ctx = CompatContext::new(mf, pair)?;
        check_declared_phi0(&ctx, f)?;
        let strong: Vec<MorId> = ctx
            .phi0_candidates()
            .into_iter()
            .filter(|&p| equivalence_audit(&ctx, p).map(|v| v.saavedra_strong).unwrap_or(false))
            .collect();
        let phi0 = match (f.phi0, strong.as_slice()) {
            (Some(p), _) if strong.contains(&p) => p,
            (Some(p), _) => {
                return Err(input(format!(
                    "functor {}: declared phi0 = {} is not a strong compatibility, so there is no lift",
                    f.name,
                    t.category().morphism_name(p)
                )))
            }
            (None, [p]) => *p,
            (None, _) => return Err(input(format!("functor {} has no strong compatibility, so no lift", f.name))),
        };
        let (uc, ud) = (unit_category(s)?, unit_category(t)?);
        let l = lift_to_unit_categories(&ctx, phi0, &uc, &ud)?;
        let recovered = compat_from_lift(&ctx, &l, &uc, &ud)?;
        let lifts = enumerate_lifts(mf, &uc, &ud, &mut config.budget("lift enumeration"))?;
        let (c, d) = (s.category(), t.category());
        let (ucat, udat) = (uc.category.category(), ud.category.category());
        let objects: Map<String, Value> = ucat
            .objects()
            .map(|a| (unital_core::units::unit_label(c, &uc.units[a.0]), report::unit(d, &ud.units[l.obj(a).0])))
            .collect();
        let morphisms: Vec<Value> = ucat
            .morphisms()
            .map(|m| {
                json!({
                    "from": report::unit(c, &uc.units[ucat.dom(m).0]),
                    "to": report::unit(c, &uc.units[ucat.cod(m).0]),
                    "image": report::mor(d, ud.forget.mor(l.mor(m))),
                })
            })
            .collect();
        out.push(json!({
            "name": f.name,
            "phi0": report::mor(d, phi0),
            "objects": objects,
            "morphisms": morphisms,
            "phi2": ucat.objects().flat_map(|a| ucat.objects().map(move |b| (a, b))).map(|(a, b)| {
                json!({
                    "x": report::unit(c, &uc.units[a.0]),
                    "y": report::unit(c, &uc.units[b.0]),
                    "component": report::mor(d, ud.forget.mor(l.phi2(a, b))),
                })
            }).collect::<Vec<_>>(),
            "valid": l.validate().is_valid() && l.is_strong(),
            "recovered_phi0": recovered.map_or(Value::Null, |p| report::mor(d, p)),
            "lifts_enumerated": lifts.len(),
            "target_unit_category_objects": udat.object_count(),
        }));
    }
    Ok(Outcome::ok(json!({"functors": out})))
}

fn monoid_json(c: &FinCategory, m: &Monoid) -> Value {
    json!({"object": report::obj(c, m.object), "mu": report::mor(c, m.mu), "eta": report::mor(c, m.eta)})
}

pub fn monoids(doc: &CatDocument, category: Option<&str>, config: &AuditConfig) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    for decl in select(doc, category)? {
        require_valid(decl)?;
        let s = &decl.semimon;
        let c = s.category();
        let Some(u) = designated(decl)? else {
            if category.is_some() {
                return Err(input(format!("category {} has no unit", decl.name())));
            }
            out.push(json!({"name": decl.name(), "unit": null}));
            continue;
        };
        let audit = monoid_audit(s, &u, &mut config.budget("monoid enumeration"))?;
        let lr = derive_lr(s, &u)?;
        let declared: Vec<Value> = decl
            .monoids
            .iter()
            .map(|m| {
                json!({
                    "monoid": monoid_json(c, m),
                    "classical": is_classical_monoid(s, &lr, m),
                    "saavedra": is_saavedra_monoid(s, &u, m),
                    "gentle": is_gentle_arrow(s, m.object, m.mu, m.eta),
                })
            })
            .collect();
        out.push(json!({
            "name": decl.name(),
            "unit": report::unit(c, &u),
            "candidates": audit.candidates,
            "semi_monoids": audit.semi_monoids,
            "classical": audit.classical.iter().map(|m| monoid_json(c, m)).collect::<Vec<_>>(),
            "saavedra": audit.saavedra.iter().map(|m| monoid_json(c, m)).collect::<Vec<_>>(),
            "sets_coincide": audit.classical == audit.saavedra,
            "homomorphisms": audit.homomorphisms,
            "lax_functor_encodings_checked": audit.encodings_checked,
            "declared": declared,
        }));
    }
    Ok(Outcome::ok(json!({"categories": out})))
}

pub fn fair(doc: &CatDocument, category: Option<&str>, config: &AuditConfig) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    for decl in select(doc, category)? {
        require_valid(decl)?;
        let s = &decl.semimon;
        let c = s.category();
        if enumerate_saavedra_units(s).is_empty() {
            if category.is_some() {
                to_fair(s)?;
            }
            out.push(json!({"name": decl.name(), "fair": null}));
            continue;
        }
        let r = fair_roundtrip(s)?;
        let p = to_fair(s)?;
        let cmp = comparison_to_unit_category(&p, &unit_category(s)?)?;
        let monoids = fair_monoid_audit(&p, &mut config.budget("monoid enumeration"))?;
        out.push(json!({
            "name": decl.name(),
            "fair": {
                "units": (0..r.units).map(|k| report::unit(c, &p.unit_at(ObjId(k)))).collect::<Vec<_>>(),
                "recovered_unit": report::unit(c, &r.recovered_unit),
                "base_recovered": r.base_recovered,
                "comparison_injective": cmp.injective_on_objects,
                "comparison_surjective": cmp.surjective_on_objects,
                "canonical_morphisms": report::morphisms(c, &r.canonical_morphisms),
                "monoids": monoids.iter().map(|m| monoid_json(c, m)).collect::<Vec<_>>(),
            },
        }));
    }
    Ok(Outcome::ok(json!({"categories": out})))
}

pub fn lax_audit(doc: &CatDocument, functor: Option<&str>) -> Result<Outcome, CliError> {
    let mut out = Vec::new();
    for f in select_functors(doc, functor)? {
        require_valid_functor(doc, f)?;
        let mf = &f.functor;
        let d = mf.target().category();
        let Some(pair) = unit_pair(doc, f)? else {
            out.push(json!({"name": f.name, "units": null}));
            continue;
        };
        let ctx = CompatContext::new(mf, pair)?;
        check_declared_phi0(&ctx, f)?;
        let mut rows = Vec::new();
        let (mut left, mut right, mut one_sided) = (Vec::new(), Vec::new(), Vec::new());
        for p in ctx.phi0_candidates() {
            let row = candidate_json(&ctx, p)?;
            let (l, r) = (row["left_triangles"] == json!(true), row["right_triangles"] == json!(true));
            if l {
                left.push(p);
            }
            if r {
                right.push(p);
            }
            if l != r {
                one_sided.push(p);
            }
            rows.push(row);
        }
        out.push(json!({
            "name": f.name,
            "phi2_iso": mf.is_strong(),
            "units": {
                "source": report::unit(mf.source().category(), &pair.source),
                "target": report::unit(d, &pair.target),
            },
            "candidates": rows,
            "left_compatible": report::morphisms(d, &left),
            "right_compatible": report::morphisms(d, &right),
            "one_sided": report::morphisms(d, &one_sided),
        }));
    }
    Ok(Outcome::ok(json!({"functors": out})))
}

/// The first candidate, in enumeration order, satisfying exactly one family
/// of unit triangles.
fn find_one_sided(s: &Arc<SemiMonCat>, t: &Arc<SemiMonCat>, config: &AuditConfig) -> Result<Option<Value>, CliError> {
    let functors = enumerate_multiplicative(s, t, &mut config.budget("witness search"))?;
    for f in &functors {
        for source in enumerate_saavedra_units(s) {
            for target in enumerate_saavedra_units(t) {
                let ctx = CompatContext::new(f, UnitPair { source, target })?;
                for p in ctx.phi0_candidates() {
                    let sides = ctx.lr_sides(p)?;
                    if sides.left_all == sides.right_all {
                        continue;
                    }
                    let d = t.category();
                    let decl = |x: &Arc<SemiMonCat>, u| CategoryDecl {
                        semimon: x.clone(),
                        unit: Some(u),
                        monoids: Vec::new(),
                    };
                    let witness_doc = CatDocument {
                        categories: vec![decl(s, source), decl(t, target)],
                        functors: vec![FunctorDecl {
                            name: "witness".into(),
                            source: 0,
                            target: 1,
                            functor: f.clone(),
                            phi0: Some(p),
                        }],
                    };
                    return Ok(Some(json!({
                        "source": s.name(),
                        "target": t.name(),
                        "phi0": report::mor(d, p),
                        "left_triangles": sides.left_all,
                        "right_triangles": sides.right_all,
                        "document": emit(&witness_doc),
                    })));
                }
            }
        }
    }
    Ok(None)
}

/// Category pairs audited between two checks of the time limit.
const SEARCH_CHUNK: usize = 64;

pub fn search(
    max_objects: usize,
    max_morphisms: usize,
    max_seconds: Option<u64>,
    config: &AuditConfig,
) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let limit = max_seconds.map(Duration::from_secs);
    let mut stock = enumerate_thin(max_objects, max_morphisms, &mut config.budget("category generation"))?;
    stock.extend(enumerate_eckmann_hilton(max_morphisms)?);
    let all_pairs: Vec<(&Arc<SemiMonCat>, &Arc<SemiMonCat>)> =
        stock.iter().flat_map(|s| stock.iter().map(move |t| (s, t))).collect();
    let (mut pairs, mut functors, mut candidates, mut one_sided) = (0usize, 0usize, 0usize, 0usize);
    let mut first_one_sided = None;
    let mut truncated = false;
    for chunk in all_pairs.chunks(SEARCH_CHUNK) {
        if limit.is_some_and(|l| start.elapsed() > l) {
            truncated = true;
            break;
        }
        let audits = config.try_map(chunk, |(s, t)| functor_pair_audit(s, t, config))?;
        for (a, &(s, t)) in audits.iter().zip(chunk) {
            pairs += 1;
            functors += a.functors;
            candidates += a.candidates;
            one_sided += a.one_sided_lax;
            if a.one_sided_lax > 0 && first_one_sided.is_none() {
                first_one_sided = Some((s, t));
            }
        }
    }
    let witness = match first_one_sided {
        Some((s, t)) => find_one_sided(s, t, config)?.unwrap_or(Value::Null),
        None => Value::Null,
    };
    let result = match (witness.is_null(), truncated) {
        (false, _) => "counterexample found",
        (true, false) => "no counterexample within bounds",
        (true, true) => "no counterexample within bounds (time limit reached)",
    };
    Ok(Outcome::ok(json!({
        "bounds": {"max_objects": max_objects, "max_morphisms": max_morphisms, "max_seconds": max_seconds},
        "categories": stock.len(),
        "pairs": pairs,
        "functors": functors,
        "candidates": candidates,
        "one_sided_candidates": one_sided,
        "truncated": truncated,
        "result": result,
        "witness": witness,
    })))
}

pub fn emit_fixtures(dir: &Path) -> Result<Outcome, CliError> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
    let mut files = Vec::new();
    for (stem, doc) in corpus::documents() {
        let path = dir.join(format!("{stem}.cat"));
        std::fs::write(&path, emit(&doc))
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        files.push(format!("{stem}.cat"));
    }
    Ok(Outcome::ok(json!({"directory": dir.display().to_string(), "files": files})))
}
