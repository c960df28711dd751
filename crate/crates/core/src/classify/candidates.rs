//! Candidate shifts `Y = L^{-1} Z L` allowed by the degree inequalities.

use std::collections::BTreeSet;

use crate::paramgroup::ShiftOp;

/// `|k_a|, |k_b|, |k_z| ≤ 1`, `|k_b - k_c| ≤ 1`, `|k_a - k_c| ≤ 1` and
/// `|k_a + k_b - k_c + k_z| ≤ 1`.
pub fn satisfies_inequalities(k: &[i32; 4]) -> bool {
    let [a, b, c, z] = *k;
    a.abs() <= 1
        && b.abs() <= 1
        && z.abs() <= 1
        && (b - c).abs() <= 1
        && (a - c).abs() <= 1
        && (a + b - c + z).abs() <= 1
}

/// Rows of the candidate table as usually listed, up to `k_a → -k_a`,
/// `k_a ↔ k_b` and inversion. The row `(1,-1,0,-1)` appears twice in that listing.
pub const LISTED_ROWS: [[i32; 4]; 18] = [
    [1, 1, 2, 1],
    [1, 1, 2, 0],
    [1, 1, 2, -1],
    [1, 1, 1, 0],
    [1, 1, 1, -1],
    [1, 1, 0, -1],
    [1, 0, 1, 1],
    [1, 0, 1, 0],
    [1, 0, 1, -1],
    [1, 0, 0, 0],
    [1, 0, 0, -1],
    [1, -1, 0, 1],
    [1, -1, 0, 0],
    [1, -1, 0, -1],
    [1, -1, 0, -1],
    [1, -1, -1, 0],
    [0, 0, 1, 1],
    [0, 0, 0, 1],
];

/// Every nonidentity solution. The inequalities bound `|k_c| ≤ 2`, so the
/// box `[-1,1] × [-1,1] × [-3,3] × [-1,1]` is searched and the bound on
/// `k_c` is checked rather than assumed.
pub fn enumerate_candidates() -> Vec<ShiftOp> {
    let mut out = Vec::new();
    for a in -1..=1 {
        for b in -1..=1 {
            for c in -3..=3 {
                for z in -1..=1 {
                    let k = [a, b, c, z];
                    if k != [0; 4] && satisfies_inequalities(&k) {
                        assert!(c.abs() <= 2);
                        out.push(ShiftOp(k));
                    }
                }
            }
        }
    }
    out
}

/// Images of `k` under sign changes and the swap of `(k_a, k_b)`, and
/// under inversion `Y ↦ Y^{-1}` (the filter cannot tell the two apart).
pub fn symmetry_orbit(k: &[i32; 4]) -> Vec<[i32; 4]> {
    let mut out = BTreeSet::new();
    for [a, b, c, z] in [*k, k.map(|x| -x)] {
        for (x, y) in [(a, b), (b, a)] {
            for sx in [1, -1] {
                for sy in [1, -1] {
                    out.insert([sx * x, sy * y, c, z]);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Largest element of the orbit, so `k_a ≥ |k_b|`.
pub fn canonical(k: &[i32; 4]) -> [i32; 4] {
    *symmetry_orbit(k).iter().max().unwrap()
}

pub fn canonical_representatives(cands: &[ShiftOp]) -> Vec<[i32; 4]> {
    let set: BTreeSet<[i32; 4]> = cands.iter().map(|s| canonical(&s.0)).collect();
    set.into_iter().rev().collect()
}

/// Comparison between the listed rows and the computed solution set.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TableComparison {
    /// Listed rows that occur more than once.
    pub duplicates: Vec<[i32; 4]>,
    /// Listed rows that are not solutions themselves.
    pub not_solutions: Vec<[i32; 4]>,
    /// Listed rows whose symmetry class contains no solution.
    pub uncovered: Vec<[i32; 4]>,
    /// Canonical solution classes that no listed row represents.
    pub missing_classes: Vec<[i32; 4]>,
}

pub fn compare_with_listing(cands: &[ShiftOp]) -> TableComparison {
    let mut seen = BTreeSet::new();
    let mut duplicates = Vec::new();
    for r in &LISTED_ROWS {
        if !seen.insert(*r) {
            duplicates.push(*r);
        }
    }
    let sol: BTreeSet<[i32; 4]> = cands.iter().map(|s| s.0).collect();
    let classes: BTreeSet<[i32; 4]> = sol.iter().map(canonical).collect();
    let not_solutions = seen.iter().filter(|r| !sol.contains(*r)).copied().collect();
    let uncovered = seen.iter().filter(|r| !classes.contains(&canonical(r))).copied().collect();
    let listed: BTreeSet<[i32; 4]> = seen.iter().map(canonical).collect();
    let missing_classes = classes.iter().filter(|c| !listed.contains(*c)).copied().collect();
    TableComparison { duplicates, not_solutions, uncovered, missing_classes }
}
