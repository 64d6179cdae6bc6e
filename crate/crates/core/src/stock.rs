//! Stock finite categories shared by tests and the example generator.

use crate::fincat::{FiniteCategory, MorId, ObjId};

/// Discrete category on `n` objects (identities only).
pub fn discrete(n: usize) -> FiniteCategory {
    FiniteCategory::new(
        (0..n).map(|i| format!("a{i}")).collect(),
        (0..n).map(|i| (format!("id_a{i}"), ObjId(i), ObjId(i))).collect(),
        (0..n).map(MorId).collect(),
        (0..n).map(|i| ((MorId(i), MorId(i)), MorId(i))).collect(),
    )
}

/// Discrete category on the elements of Z_n, named by residue.
pub fn discrete_cyclic(n: usize) -> FiniteCategory {
    FiniteCategory::new(
        (0..n).map(|i| format!("z{i}")).collect(),
        (0..n).map(|i| (format!("id_z{i}"), ObjId(i), ObjId(i))).collect(),
        (0..n).map(MorId).collect(),
        (0..n).map(|i| ((MorId(i), MorId(i)), MorId(i))).collect(),
    )
}

/// One-object category from a monoid multiplication table.
///
/// `table[i][j]` is the index of `i;j` (diagrammatic, left then right) and
/// index 0 must be the unit. Associativity is the caller's problem: feeding
/// a broken table into the validators is how designed failures get built.
pub fn one_object_monoid<const N: usize>(names: &[&str; N], table: &[[usize; N]; N]) -> FiniteCategory {
    FiniteCategory::new(
        vec!["•".into()],
        names.iter().map(|n| (n.to_string(), ObjId(0), ObjId(0))).collect(),
        vec![MorId(0)],
        (0..N)
            .flat_map(|i| (0..N).map(move |j| (i, j)))
            .map(|(i, j)| ((MorId(i), MorId(j)), MorId(table[i][j])))
            .collect(),
    )
}

/// Monoid table given as a flat Vec (for table sizes not known at compile time).
pub fn one_object_monoid_dyn(names: &[String], table: &[Vec<usize>]) -> FiniteCategory {
    let n = names.len();
    FiniteCategory::new(
        vec!["•".into()],
        names.iter().map(|m| (m.clone(), ObjId(0), ObjId(0))).collect(),
        vec![MorId(0)],
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| ((MorId(i), MorId(j)), MorId(table[i][j])))
            .collect(),
    )
}

/// The walking arrow: objects 0, 1 and a single arrow u: 0 → 1.
pub fn walking_arrow() -> FiniteCategory {
    FiniteCategory::new(
        vec!["0".into(), "1".into()],
        vec![
            ("id_0".into(), ObjId(0), ObjId(0)),
            ("id_1".into(), ObjId(1), ObjId(1)),
            ("u".into(), ObjId(0), ObjId(1)),
        ],
        vec![MorId(0), MorId(1)],
        vec![
            ((MorId(0), MorId(0)), MorId(0)),
            ((MorId(1), MorId(1)), MorId(1)),
            ((MorId(0), MorId(2)), MorId(2)),
            ((MorId(2), MorId(1)), MorId(2)),
        ],
    )
}

/// Total order 0 < 1 < ... < n-1 as a posetal category; `le(i,j)` names the
/// unique morphism i → j.
pub fn chain_poset(n: usize, obj_name: impl Fn(usize) -> String) -> FiniteCategory {
    let mut morphisms = Vec::new();
    let mut index = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in i..n {
            index[i][j] = morphisms.len();
            morphisms.push((format!("le_{i}_{j}"), ObjId(i), ObjId(j)));
        }
    }
    let identity = (0..n).map(|i| MorId(index[i][i])).collect();
    let mut compose = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                compose.push(((MorId(index[i][j]), MorId(index[j][k])), MorId(index[i][k])));
            }
        }
    }
    FiniteCategory::new((0..n).map(obj_name).collect(), morphisms, identity, compose)
}

/// The left-zero monoid {1, x, y}: a;b = a for a ≠ 1. Associative but not
/// commutative, so the induced "tensor" fails interchange — the standard
/// designed-failure input.
pub fn left_zero_monoid() -> FiniteCategory {
    one_object_monoid(&["1", "x", "y"], &[[0, 1, 2], [1, 1, 1], [2, 2, 2]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;

    #[test]
    fn stock_categories_are_categories() {
        for c in [
            discrete(3),
            discrete_cyclic(2),
            one_object_monoid(&["1", "e"], &[[0, 1], [1, 1]]),
            walking_arrow(),
            chain_poset(4, |i| format!("c{i}")),
            left_zero_monoid(),
        ] {
            assert!(validate_category(&c).unwrap().passed(), "{:?}", c.obj_names);
        }
    }

    #[test]
    fn left_zero_table_matches() {
        let c = left_zero_monoid();
        // x;y = x and y;x = y.
        assert_eq!(c.then(MorId(1), MorId(2)), Some(MorId(1)));
        assert_eq!(c.then(MorId(2), MorId(1)), Some(MorId(2)));
    }
}
