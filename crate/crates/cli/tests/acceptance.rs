//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness and exits non-zero when any criterion fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use unital_cli::{audit_config, run};
use unital_core::fair::{fair_monoid_audit, fair_roundtrip, to_fair};
use unital_core::fixtures;
use unital_core::gen::{enumerate_monoids, enumerate_semigroups, gen_delooping, two_sided_identities};
use unital_core::monfun::{
    equivalence_audit, functor_pair_audit, is_monoid_homomorphism, lift_to_unit_categories, monoid_audit,
    CompatContext, Monoid, MultiplicativeFunctor, UnitPair,
};
use unital_core::units::{
    brute_force_lr_units, canonical_unit_morphism, designated_unit, enumerate_saavedra_units, is_associative,
    roundtrip_check, unit_category, verify_kelly_implications,
};
use unital_core::{AuditConfig, Budget, ObjId, SemiMonCat};

const KELLY_LIMIT: Duration = Duration::from_secs(1);
const BIJECTION_LIMIT: Duration = Duration::from_secs(10);
const COMPATIBILITY_LIMIT: Duration = Duration::from_secs(60);

type Verdict = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Verdict>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    check(spent < limit, || format!("{what} took {spent:?}, limit {limit:?}"))
}

fn deloopings() -> Result<Vec<Arc<SemiMonCat>>, String> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for (k, t) in enumerate_semigroups(n).map_err(|e| e.to_string())?.iter().enumerate() {
            out.push(gen_delooping(&format!("sg{n}_{k}"), t).map_err(|e| e.to_string())?);
        }
    }
    Ok(out)
}

fn kelly_equivalence() -> Verdict {
    let mut lines = Vec::new();
    for s in [fixtures::term(), fixtures::ind2(), fixtures::z2eh(), fixtures::poset2()] {
        let start = Instant::now();
        let r = verify_kelly_implications(&s, &mut Budget::unlimited()).map_err(|e| e.to_string())?;
        within(start, KELLY_LIMIT, s.name())?;
        check(r.sets_coincide(), || format!("{}: separating candidates {:?}", s.name(), r.separating))?;
        check(r.satisfying_exchange == r.satisfying_agree_and_multiplicative, || format!("{}: sets differ", s.name()))?;
        lines.push(format!("{} {}/{}", s.name(), r.satisfying_exchange.len(), r.candidates));
    }
    Ok(lines.join(", "))
}

fn unit_bijection() -> Verdict {
    let start = Instant::now();
    let mut stock: Vec<Arc<SemiMonCat>> = fixtures::all().into_iter().map(|(_, s)| s).collect();
    let fixture_count = stock.len();
    let generated = deloopings()?;
    let tables: Vec<Vec<Vec<usize>>> = (1..=3).flat_map(|n| enumerate_semigroups(n).unwrap()).collect();
    // oracle: the units of a delooping are its two-sided identities
    for (s, t) in generated.iter().zip(&tables) {
        let units: Vec<usize> = enumerate_saavedra_units(s).iter().map(|u| u.object.0).collect();
        check(units == two_sided_identities(t), || format!("{}: units {units:?} for table {t:?}", s.name()))?;
    }
    stock.extend(generated);
    let mut objects = 0;
    for s in &stock {
        for i in s.category().objects() {
            let r = roundtrip_check(s, i, &mut Budget::unlimited()).map_err(|e| e.to_string())?;
            check(r.holds(), || format!("{} at {}: {r:?}", s.name(), i.0))?;
            let brute = brute_force_lr_units(s, i, &mut Budget::unlimited()).map_err(|e| e.to_string())?;
            check(brute.len() == r.saavedra_units.len(), || format!("{} at {}: counts differ", s.name(), i.0))?;
            objects += 1;
        }
    }
    within(start, BIJECTION_LIMIT, "unit bijection")?;
    Ok(format!("{fixture_count} fixtures + {} deloopings, {objects} objects", stock.len() - fixture_count))
}

fn contractibility() -> Verdict {
    let mut with_units = 0;
    for (name, s) in fixtures::all() {
        let uc = unit_category(&s).map_err(|e| e.to_string())?;
        if uc.is_empty() {
            continue;
        }
        with_units += 1;
        let u = uc.category.category();
        check(u.is_contractible(), || format!("{name}: U is not contractible"))?;
        for a in u.objects() {
            for b in u.objects() {
                let canonical =
                    canonical_unit_morphism(&s, &uc.units[a.0], &uc.units[b.0]).map_err(|e| e.to_string())?;
                check(uc.forget.mor(uc.connecting(a, b)) == canonical, || {
                    format!("{name}: canonical morphism differs")
                })?;
            }
        }
    }
    let z = fixtures::z2eh();
    let uc = unit_category(&z).map_err(|e| e.to_string())?;
    let c = z.category();
    let s = c.find_morphism("s").expect("z2eh has s");
    check(uc.units.len() == 2, || format!("z2eh has {} units", uc.units.len()))?;
    check(uc.forget.mor(uc.connecting(ObjId(0), ObjId(1))) == s, || "connecting morphism is not s".into())?;
    check(canonical_unit_morphism(&z, &uc.units[0], &uc.units[1]).map_err(|e| e.to_string())? == s, || {
        "canonical unit morphism is not s".into()
    })?;
    Ok(format!("{with_units} fixtures with units, z2eh connected by s"))
}

fn associativity_and_equivalence() -> Verdict {
    let mut stock: Vec<Arc<SemiMonCat>> = fixtures::all().into_iter().map(|(_, s)| s).collect();
    stock.extend(deloopings()?);
    let mut units = 0;
    for s in &stock {
        for u in enumerate_saavedra_units(s) {
            check(is_associative(s, &u), || format!("{}: alpha not associative", s.name()))?;
            check(s.left_tensor_functor(u.object).is_essentially_surjective(), || format!("{}: L", s.name()))?;
            check(s.right_tensor_functor(u.object).is_essentially_surjective(), || format!("{}: R", s.name()))?;
            units += 1;
        }
    }
    Ok(format!("{units} units over {} categories", stock.len()))
}

fn fixture_pair_audits(config: &AuditConfig) -> Result<Vec<unital_core::monfun::FunctorPairAudit>, String> {
    let all = fixtures::all();
    let mut out = Vec::new();
    for (_, s) in &all {
        for (_, t) in &all {
            out.push(functor_pair_audit(s, t, config).map_err(|e| e.to_string())?);
        }
    }
    Ok(out)
}

fn compatibility_equivalence(config: &AuditConfig) -> Verdict {
    let start = Instant::now();
    let audits = fixture_pair_audits(config)?;
    within(start, COMPATIBILITY_LIMIT, "fixture pair audits")?;
    let functors: usize = audits.iter().map(|a| a.functors).sum();
    let candidates: usize = audits.iter().map(|a| a.candidates).sum();
    let strong: usize = audits.iter().map(|a| a.strong_passing).sum();
    check(candidates > 0 && strong > 0, || "nothing was audited".into())?;
    Ok(format!("{} pairs, {functors} functors, {candidates} candidates, {strong} strong", audits.len()))
}

fn lifts(config: &AuditConfig) -> Verdict {
    let audits = fixture_pair_audits(config)?;
    let built: usize = audits.iter().map(|a| a.lifts_built).sum();
    let enumerated: usize = audits.iter().map(|a| a.lifts_enumerated).sum();
    check(built > 0, || "no lift was built".into())?;
    // a lift built directly on z2eh, phi2 data included
    let z = fixtures::z2eh();
    let id = MultiplicativeFunctor::identity(z.clone());
    let u = designated_unit(&z).expect("z2eh has units");
    let ctx = CompatContext::new(&id, UnitPair { source: u, target: u }).map_err(|e| e.to_string())?;
    let uc = unit_category(&z).map_err(|e| e.to_string())?;
    let l = lift_to_unit_categories(&ctx, z.category().id(u.object), &uc, &uc).map_err(|e| e.to_string())?;
    check(l.validate().is_valid() && l.is_strong(), || "identity lift invalid".into())?;
    for a in uc.category.category().objects() {
        for b in uc.category.category().objects() {
            check(uc.forget.mor(l.phi2(a, b)) == id.phi2(uc.units[a.0].object, uc.units[b.0].object), || {
                "phi2 square does not commute".into()
            })?;
        }
    }
    Ok(format!("{built} lifts built, {enumerated} enumerated, all matched"))
}

fn zero_functor_counterexample() -> Verdict {
    let (f, w) = fixtures::zero_functor();
    check(f.validate().is_valid(), || "zero functor invalid".into())?;
    let pair = UnitPair {
        source: designated_unit(f.source()).expect("term has a unit"),
        target: designated_unit(f.target()).expect("poset2 has a unit"),
    };
    let ctx = CompatContext::new(&f, pair).map_err(|e| e.to_string())?;
    let v = equivalence_audit(&ctx, w).map_err(|e| e.to_string())?;
    let d = f.target().category();
    check(v.lr_lax && v.saavedra_lax, || format!("not lax in both senses: {v:?}"))?;
    check(f.is_strong(), || "phi2 is not invertible".into())?;
    check(d.is_iso(w).is_none(), || "phi0 is invertible".into())?;
    check(!v.lr_strong && !v.saavedra_strong, || "unexpectedly strong".into())?;
    Ok("lax in both senses, phi2 iso, phi0 = w not iso".into())
}

fn homomorphisms(s: &SemiMonCat, ms: &[Monoid]) -> Vec<(usize, usize, usize)> {
    let c = s.category();
    let mut out = Vec::new();
    for (i, m) in ms.iter().enumerate() {
        for (j, n) in ms.iter().enumerate() {
            for &psi in c.hom(m.object, n.object) {
                if is_monoid_homomorphism(s, m, n, psi) {
                    out.push((i, j, psi.0));
                }
            }
        }
    }
    out
}

fn monoids() -> Verdict {
    let mut stock = vec![fixtures::z2eh(), fixtures::term(), fixtures::poset2()];
    let mut delooped = Vec::new();
    for n in 1..=3 {
        for (k, t) in enumerate_monoids(n).map_err(|e| e.to_string())?.iter().enumerate() {
            delooped.push((
                gen_delooping(&format!("mon{n}_{k}"), t).map_err(|e| e.to_string())?,
                two_sided_identities(t)[0],
            ));
        }
    }
    stock.extend(delooped.iter().map(|(s, _)| s.clone()));
    let mut found = 0;
    for s in &stock {
        for u in enumerate_saavedra_units(s) {
            let a = monoid_audit(s, &u, &mut Budget::unlimited()).map_err(|e| e.to_string())?;
            check(a.classical == a.saavedra, || format!("{}: monoid sets differ", s.name()))?;
            check(homomorphisms(s, &a.classical) == homomorphisms(s, &a.saavedra), || {
                format!("{}: homomorphism sets differ", s.name())
            })?;
            found += a.classical.len();
        }
    }
    // oracle: in a discrete category the only monoid is the identity element
    for (s, e) in &delooped {
        let u = designated_unit(s).expect("monoids have units");
        let a = monoid_audit(s, &u, &mut Budget::unlimited()).map_err(|e| e.to_string())?;
        let id = s.category().id(ObjId(*e));
        check(a.classical == vec![Monoid { object: ObjId(*e), mu: id, eta: id }], || {
            format!("{}: {:?}", s.name(), a.classical)
        })?;
    }
    Ok(format!("{} categories, {found} monoids", stock.len()))
}

fn fair_round_trip() -> Verdict {
    let mut checked = 0;
    for (name, s) in fixtures::all() {
        if enumerate_saavedra_units(&s).is_empty() {
            continue;
        }
        let r = fair_roundtrip(&s).map_err(|e| format!("{name}: {e}"))?;
        let uc = unit_category(&s).map_err(|e| e.to_string())?;
        for (k, &m) in r.canonical_morphisms.iter().enumerate() {
            let expected = canonical_unit_morphism(&s, &uc.units[0], &uc.units[k]).map_err(|e| e.to_string())?;
            check(m == expected, || format!("{name}: canonical morphism {k} differs"))?;
        }
        let p = to_fair(&s).map_err(|e| e.to_string())?;
        let fair = fair_monoid_audit(&p, &mut Budget::unlimited()).map_err(|e| e.to_string())?;
        let unit = designated_unit(&s).expect("units exist");
        let audit = monoid_audit(&s, &unit, &mut Budget::unlimited()).map_err(|e| e.to_string())?;
        check(fair == audit.classical, || format!("{name}: fair monoids differ"))?;
        checked += 1;
    }
    Ok(format!("{checked} unit-bearing fixtures"))
}

fn report_bytes(args: &[&str], dir: &std::path::Path, tag: &str) -> Result<Vec<u8>, String> {
    let out = dir.join(format!("{tag}.json"));
    let mut full = vec!["unital".to_string()];
    full.extend(args.iter().map(|s| s.to_string()));
    full.push("--out".into());
    full.push(out.display().to_string());
    let code = run(full);
    check(code == 0, || format!("{args:?} exited {code}"))?;
    std::fs::read(&out).map_err(|e| e.to_string())
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let fixtures_dir = dir.path().join("corpus");
    let fd = fixtures_dir.display().to_string();
    report_bytes(&["fixtures", "--emit", &fd], dir.path(), "emit")?;
    let file = |n: &str| fixtures_dir.join(n).display().to_string();
    let (z2eh, poset2, zero, one_sided) =
        (file("z2eh.cat"), file("poset2.cat"), file("zero_functor.cat"), file("one_sided.cat"));
    let runs: Vec<Vec<&str>> = vec![
        vec!["units", &z2eh],
        vec!["kelly-audit", &poset2],
        vec!["axioms", &z2eh],
        vec!["monoids", &poset2],
        vec!["fair", &z2eh],
        vec!["functor-audit", &zero, "--exhaustive"],
        vec!["lax-audit", &one_sided],
        vec!["search", "--max-objects", "2", "--max-morphisms", "2"],
    ];
    for (k, args) in runs.iter().enumerate() {
        let first = report_bytes(args, dir.path(), &format!("{k}a"))?;
        let second = report_bytes(args, dir.path(), &format!("{k}b"))?;
        let mut serial_args = args.clone();
        serial_args.push("--serial");
        let serial = report_bytes(&serial_args, dir.path(), &format!("{k}s"))?;
        check(first == second, || format!("{args:?}: two runs differ"))?;
        check(first == serial, || format!("{args:?}: serial and parallel differ"))?;
    }
    Ok(format!("{} commands, 3 runs each", runs.len()))
}

fn main() {
    let parallel = match audit_config(false) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    let criteria: Vec<Criterion> = vec![
        ("1 Kelly equivalence", Box::new(kelly_equivalence)),
        ("2 unit bijection", Box::new(unit_bijection)),
        ("3 contractibility", Box::new(contractibility)),
        ("4 associativity and equivalence", Box::new(associativity_and_equivalence)),
        ("5 compatibility equivalence", Box::new(move || compatibility_equivalence(&parallel))),
        ("6 lifts", Box::new(move || lifts(&parallel))),
        ("7 zero functor counterexample", Box::new(zero_functor_counterexample)),
        ("8 monoids", Box::new(monoids)),
        ("9 fair round trip", Box::new(fair_round_trip)),
        ("10 determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (name, f) in &criteria {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!("PASS {name}: {detail} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
