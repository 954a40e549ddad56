//! Generated test stock: semigroup deloopings, thin semi-monoidal
//! categories and one-object categories from commutative monoids.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec::Budget;
use crate::fincat::{CategoryBuilder, FinCategory, ObjId};
use crate::tensor::SemiMonCat;

/// A multiplication table, `table[a][b] = a · b`.
pub type Table = Vec<Vec<usize>>;

pub const MAX_SEMIGROUP_ORDER: usize = 3;

pub fn is_associative_table(table: &[Vec<usize>]) -> bool {
    let n = table.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| table[table[a][b]][c] == table[a][table[b][c]])))
}

fn check_square(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::Shape("multiplication table must be square with entries in range".into()));
    }
    Ok(())
}

/// The discrete semi-monoidal category with the table as tensor.
pub fn gen_delooping(name: &str, table: &[Vec<usize>]) -> Result<Arc<SemiMonCat>> {
    check_square(table)?;
    if !is_associative_table(table) {
        return Err(Error::Precondition(format!("{name}: multiplication table is not associative")));
    }
    let mut b = CategoryBuilder::new(name);
    for k in 0..table.len() {
        b.object(k.to_string());
    }
    let otab = table.iter().flatten().map(|&k| ObjId(k)).collect();
    Ok(Arc::new(SemiMonCat::thin(Arc::new(b.build()), otab)?))
}

/// Elements `e` with `e x = x e = x` for all `x`.
pub fn two_sided_identities(table: &[Vec<usize>]) -> Vec<usize> {
    let n = table.len();
    (0..n).filter(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)).collect()
}

/// Every associative table on `n` elements, in lexicographic order of the
/// row-major entries. Partial tables are pruned as soon as a fully defined
/// associativity instance fails.
pub fn enumerate_semigroups(n: usize) -> Result<Vec<Table>> {
    if n == 0 || n > MAX_SEMIGROUP_ORDER {
        return Err(Error::Precondition(format!("semigroup order must be in 1..={MAX_SEMIGROUP_ORDER}, got {n}")));
    }
    let mut cells = vec![None; n * n];
    let mut out = Vec::new();
    fill(n, 0, &mut cells, &mut out);
    Ok(out)
}

fn fill(n: usize, k: usize, cells: &mut Vec<Option<usize>>, out: &mut Vec<Table>) {
    if k == n * n {
        out.push(cells.chunks(n).map(|row| row.iter().map(|c| c.unwrap()).collect()).collect());
        return;
    }
    for v in 0..n {
        cells[k] = Some(v);
        if consistent(n, cells) {
            fill(n, k + 1, cells, out);
        }
    }
    cells[k] = None;
}

fn consistent(n: usize, cells: &[Option<usize>]) -> bool {
    let at = |a: usize, b: usize| cells[a * n + b];
    for a in 0..n {
        for b in 0..n {
            let Some(ab) = at(a, b) else { continue };
            for c in 0..n {
                let (Some(bc), Some(l)) = (at(b, c), at(ab, c)) else { continue };
                if let Some(r) = at(a, bc) {
                    if l != r {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Semigroups with a two-sided identity.
pub fn enumerate_monoids(n: usize) -> Result<Vec<Table>> {
    Ok(enumerate_semigroups(n)?.into_iter().filter(|t| !two_sided_identities(t).is_empty()).collect())
}

/// The one-object category whose arrows are the elements of a commutative
/// monoid, with `f ⊗ g = f ∘ g`.
pub fn eckmann_hilton(name: &str, table: &[Vec<usize>]) -> Result<Arc<SemiMonCat>> {
    check_square(table)?;
    let n = table.len();
    let e = match two_sided_identities(table).as_slice() {
        [e] => *e,
        _ => return Err(Error::Precondition(format!("{name}: table has no identity"))),
    };
    if !is_associative_table(table) || (0..n).any(|a| (0..n).any(|b| table[a][b] != table[b][a])) {
        return Err(Error::Precondition(format!("{name}: table is not a commutative monoid")));
    }
    let mut b = CategoryBuilder::new(name);
    let obj = b.object("E");
    // element e is the identity; the others become m1, m2, ... in order
    let mut ids = vec![b.identity(obj); n];
    for (k, slot) in ids.iter_mut().enumerate() {
        if k != e {
            *slot = b.morphism(format!("m{k}"), obj, obj);
        }
    }
    for x in 0..n {
        for y in 0..n {
            b.compose(ids[x], ids[y], ids[table[x][y]]);
        }
    }
    let cat = Arc::new(b.build());
    let m = cat.morphism_count();
    let mut elem = vec![0; m];
    for (k, id) in ids.iter().enumerate() {
        elem[id.0] = k;
    }
    let mtab = (0..m * m).map(|k| ids[table[elem[k / m]][elem[k % m]]]).collect();
    Ok(Arc::new(SemiMonCat::new(cat, vec![obj], mtab)?))
}

/// Every preorder on `n` points, as a relation matrix `rel[a][b] = a ≤ b`.
pub fn enumerate_preorders(n: usize, budget: &mut Budget) -> Result<Vec<Vec<Vec<bool>>>> {
    let off: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
    budget.charge(1 << off.len())?;
    let mut out = Vec::new();
    for mask in 0u64..(1 << off.len()) {
        let mut rel = vec![vec![false; n]; n];
        for (a, row) in rel.iter_mut().enumerate() {
            row[a] = true;
        }
        for (k, &(a, b)) in off.iter().enumerate() {
            rel[a][b] = mask >> k & 1 == 1;
        }
        let transitive = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(rel[a][b] && rel[b][c]) || rel[a][c])));
        if transitive {
            out.push(rel);
        }
    }
    Ok(out)
}

/// The thin category of a preorder: one arrow `a -> b` whenever `a ≤ b`.
pub fn preorder_category(name: &str, rel: &[Vec<bool>]) -> FinCategory {
    let n = rel.len();
    let mut b = CategoryBuilder::new(name);
    let objs: Vec<ObjId> = (0..n).map(|k| b.object(k.to_string())).collect();
    let mut arrow = vec![vec![None; n]; n];
    for a in 0..n {
        arrow[a][a] = Some(b.identity(objs[a]));
        for c in 0..n {
            if a != c && rel[a][c] {
                arrow[a][c] = Some(b.morphism(format!("{a}<{c}"), objs[a], objs[c]));
            }
        }
    }
    for a in 0..n {
        for c in 0..n {
            for d in 0..n {
                if let (Some(f), Some(g)) = (arrow[a][c], arrow[c][d]) {
                    b.compose(g, f, arrow[a][d].expect("preorder is transitive"));
                }
            }
        }
    }
    b.build()
}

/// Every thin semi-monoidal category with at most `max_objects` objects and
/// `max_morphisms` arrows: a preorder and an associative, monotone tensor on
/// its points. Ordered by object count, preorder, then table.
pub fn enumerate_thin(max_objects: usize, max_morphisms: usize, budget: &mut Budget) -> Result<Vec<Arc<SemiMonCat>>> {
    let mut out = Vec::new();
    for n in 1..=max_objects.min(MAX_SEMIGROUP_ORDER) {
        let tables = enumerate_semigroups(n)?;
        for (p, rel) in enumerate_preorders(n, budget)?.into_iter().enumerate() {
            let arrows = rel.iter().flatten().filter(|&&x| x).count();
            if arrows > max_morphisms {
                continue;
            }
            budget.charge(tables.len() as u64)?;
            for (t, table) in tables.iter().enumerate() {
                let monotone = (0..n).all(|a| {
                    (0..n).all(|a2| {
                        !rel[a][a2] || (0..n).all(|b| (0..n).all(|b2| !rel[b][b2] || rel[table[a][b]][table[a2][b2]]))
                    })
                });
                if !monotone {
                    continue;
                }
                let otab = table.iter().flatten().map(|&k| ObjId(k)).collect();
                let cat = Arc::new(preorder_category(&format!("thin{n}_{p}_{t}"), &rel));
                out.push(Arc::new(SemiMonCat::thin(cat, otab)?));
            }
        }
    }
    Ok(out)
}

/// One-object categories from every commutative monoid with at most
/// `max_morphisms` elements.
pub fn enumerate_eckmann_hilton(max_morphisms: usize) -> Result<Vec<Arc<SemiMonCat>>> {
    let mut out = Vec::new();
    for n in 1..=max_morphisms.min(MAX_SEMIGROUP_ORDER) {
        for (k, t) in enumerate_monoids(n)?.iter().enumerate() {
            if (0..n).all(|a| (0..n).all(|b| t[a][b] == t[b][a])) {
                out.push(eckmann_hilton(&format!("eh{n}_{k}"), t)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn brute_force_count(n: usize) -> usize {
        let cells = n * n;
        (0..n.pow(cells as u32))
            .filter(|&code| {
                let mut code = code;
                let mut t = vec![vec![0; n]; n];
                for k in 0..cells {
                    t[k / n][k % n] = code % n;
                    code /= n;
                }
                is_associative_table(&t)
            })
            .count()
    }

    #[test]
    fn semigroup_counts_match_brute_force() {
        for n in 1..=3 {
            assert_eq!(enumerate_semigroups(n).unwrap().len(), brute_force_count(n), "n = {n}");
        }
        assert_eq!(brute_force_count(2), 8);
        assert_eq!(brute_force_count(3), 113);
    }

    #[test]
    fn semigroups_are_sorted_and_distinct() {
        let all = enumerate_semigroups(3).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn order_four_is_rejected() {
        assert!(enumerate_semigroups(4).is_err());
        assert!(enumerate_semigroups(0).is_err());
    }

    #[test]
    fn deloopings_reproduce_fixtures() {
        let xor = gen_delooping("xor2", &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(xor, fixtures::xor2());
        let min = gen_delooping("min2_disc", &[vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(min, fixtures::min2_disc());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // (0·0)·1 = 0 but 0·(0·1) = 1
        let t = vec![vec![1, 0], vec![0, 0]];
        assert!(!is_associative_table(&t));
        assert!(matches!(gen_delooping("bad", &t), Err(Error::Precondition(_))));
    }

    #[test]
    fn eckmann_hilton_of_z2_is_z2eh() {
        let s = eckmann_hilton("z2eh", &[vec![0, 1], vec![1, 0]]).unwrap();
        let z = fixtures::z2eh();
        assert_eq!(s.object_table(), z.object_table());
        assert_eq!(s.morphism_table(), z.morphism_table());
        assert!(s.validate().is_valid());
    }

    #[test]
    fn generated_thin_categories_validate() {
        let all = enumerate_thin(2, 4, &mut Budget::unlimited()).unwrap();
        assert!(!all.is_empty());
        for s in &all {
            assert!(s.validate().is_valid(), "{}", s.name());
        }
    }

    #[test]
    fn preorders_on_three_points() {
        assert_eq!(enumerate_preorders(3, &mut Budget::unlimited()).unwrap().len(), 29);
    }
}
