use std::sync::Arc;

use unital_core::gen::{enumerate_eckmann_hilton, enumerate_monoids, enumerate_thin, gen_delooping};
use unital_core::monfun::{functor_pair_audit, monoid_audit};
use unital_core::units::enumerate_saavedra_units;
use unital_core::{AuditConfig, Budget, SemiMonCat};

fn stock() -> Vec<Arc<SemiMonCat>> {
    let mut out = enumerate_thin(2, 3, &mut Budget::unlimited()).unwrap();
    out.extend(enumerate_eckmann_hilton(2).unwrap());
    out
}

#[test]
fn functor_audits_over_generated_pairs() {
    let stock = stock();
    let config = AuditConfig::default();
    let mut one_sided = 0;
    for s in &stock {
        for t in &stock {
            let audit =
                functor_pair_audit(s, t, &config).unwrap_or_else(|e| panic!("{} -> {}: {e}", s.name(), t.name()));
            one_sided += audit.one_sided_lax;
        }
    }
    assert!(one_sided > 0);
}

#[test]
fn monoid_audits_over_deloopings() {
    for n in 1..=3 {
        for (k, t) in enumerate_monoids(n).unwrap().iter().enumerate() {
            let s = gen_delooping(&format!("m{n}_{k}"), t).unwrap();
            for u in enumerate_saavedra_units(&s) {
                let audit = monoid_audit(&s, &u, &mut Budget::unlimited()).unwrap();
                assert_eq!(audit.classical, audit.saavedra);
            }
        }
    }
}
