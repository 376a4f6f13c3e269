//! Truncated simplicial sets with explicit operator tables, simplicial maps,
//! and exhaustive identity checking.
//!
//! A [`TruncatedSimplicialSet`] stores every simplex (degenerate ones
//! included) up to a dimension bound `N`, together with total face and
//! degeneracy tables. Simplices are identified by `(dimension, index)`;
//! each carries a canonical label used for deterministic ordering and for
//! cross-structure lookups.

use std::collections::HashMap;

use serde::Serialize;

use crate::report::ValidationReport;

/// A monotone map `[source] -> [target]` between finite ordinals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monotone {
    pub source: usize,
    pub target: usize,
    pub map: Vec<usize>,
}

impl Monotone {
    pub fn new(source: usize, target: usize, map: Vec<usize>) -> Self {
        assert_eq!(map.len(), source + 1);
        assert!(map.windows(2).all(|w| w[0] <= w[1]));
        assert!(map.iter().all(|&v| v <= target));
        Monotone {
            source,
            target,
            map,
        }
    }

    /// Coface `d^i: [n-1] -> [n]`, the injection skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        let map = (0..n).map(|a| if a < i { a } else { a + 1 }).collect();
        Monotone::new(n - 1, n, map)
    }

    /// Codegeneracy `s^i: [n+1] -> [n]`, the surjection repeating `i`.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        let map = (0..=n + 1).map(|a| if a <= i { a } else { a - 1 }).collect();
        Monotone::new(n + 1, n, map)
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `self` after `other`: the composite `[other.source] -> [self.target]`.
    pub fn compose_after(&self, other: &Monotone) -> Monotone {
        assert_eq!(other.target, self.source);
        let map = other.map.iter().map(|&a| self.map[a]).collect();
        Monotone::new(other.source, self.target, map)
    }
}

/// A simplicial set truncated at dimension `bound`, with simplices stored
/// explicitly (degenerate ones are not quotiented out).
#[derive(Debug, Clone)]
pub struct TruncatedSimplicialSet {
    pub bound: usize,
    /// Canonical labels per dimension, parallel to simplex indices.
    pub labels: Vec<Vec<String>>,
    index: Vec<HashMap<String, usize>>,
    /// `faces[k][i][x]` = index of `d_i x` in dimension `k-1`, for `1 <= k <= bound`.
    pub faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[k][i][x]` = index of `s_i x` in dimension `k+1`, for `k < bound`.
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

impl TruncatedSimplicialSet {
    pub fn cards(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.len()).collect()
    }

    pub fn card(&self, k: usize) -> usize {
        self.labels[k].len()
    }

    pub fn face(&self, k: usize, i: usize, x: usize) -> usize {
        self.faces[k][i][x]
    }

    pub fn degeneracy(&self, k: usize, i: usize, x: usize) -> usize {
        self.degeneracies[k][i][x]
    }

    pub fn index_of(&self, k: usize, label: &str) -> Option<usize> {
        self.index[k].get(label).copied()
    }

    /// True iff `x` is in the image of some degeneracy from dimension `k-1`.
    pub fn is_degenerate(&self, k: usize, x: usize) -> bool {
        if k == 0 {
            return false;
        }
        (0..k).any(|i| {
            self.degeneracies[k - 1][i]
                .iter()
                .any(|&im| im == x)
        })
    }
}

/// Builds a [`TruncatedSimplicialSet`] from per-dimension payloads plus
/// payload-level face/degeneracy actions. Payloads are sorted by their `Ord`,
/// which fixes the index order; every face/degeneracy image must resolve to a
/// registered payload (the closures are expected to land inside `items`).
pub fn assemble<T, L, F, S>(
    bound: usize,
    mut items: Vec<Vec<T>>,
    label_of: L,
    face_of: F,
    degen_of: S,
) -> (TruncatedSimplicialSet, Vec<Vec<T>>)
where
    T: Ord,
    L: Fn(usize, &T) -> String,
    F: Fn(usize, usize, &T) -> T,
    S: Fn(usize, usize, &T) -> T,
{
    assert_eq!(items.len(), bound + 1);
    for dim in items.iter_mut() {
        dim.sort();
    }
    let labels: Vec<Vec<String>> = items
        .iter()
        .enumerate()
        .map(|(k, dim)| dim.iter().map(|t| label_of(k, t)).collect())
        .collect();
    let index: Vec<HashMap<String, usize>> = labels
        .iter()
        .map(|dim| {
            let mut m = HashMap::with_capacity(dim.len());
            for (i, l) in dim.iter().enumerate() {
                let prev = m.insert(l.clone(), i);
                assert!(prev.is_none(), "duplicate simplex label {l}");
            }
            m
        })
        .collect();
    let lookup = |k: usize, t: &T| -> usize {
        let l = label_of(k, t);
        *index[k]
            .get(&l)
            .unwrap_or_else(|| panic!("face/degeneracy image not registered in dimension {k}: {l}"))
    };

    let mut faces = vec![Vec::new(); bound + 1];
    for k in 1..=bound {
        let mut per_i = Vec::with_capacity(k + 1);
        for i in 0..=k {
            per_i.push(
                items[k]
                    .iter()
                    .map(|t| lookup(k - 1, &face_of(k, i, t)))
                    .collect::<Vec<_>>(),
            );
        }
        faces[k] = per_i;
    }
    let mut degeneracies = vec![Vec::new(); bound.max(1)];
    degeneracies.truncate(bound);
    for k in 0..bound {
        let mut per_i = Vec::with_capacity(k + 1);
        for i in 0..=k {
            per_i.push(
                items[k]
                    .iter()
                    .map(|t| lookup(k + 1, &degen_of(k, i, t)))
                    .collect::<Vec<_>>(),
            );
        }
        degeneracies[k] = per_i;
    }

    (
        TruncatedSimplicialSet {
            bound,
            labels,
            index,
            faces,
            degeneracies,
        },
        items,
    )
}

/// Per-dimension cardinalities plus every violated simplicial identity.
#[derive(Debug, Clone, Serialize)]
pub struct SimplicialReport {
    pub cards: Vec<usize>,
    pub report: ValidationReport,
}

/// Exhaustively checks every simplicial identity that is defined within the
/// truncation bound.
pub fn check_simplicial(x: &TruncatedSimplicialSet) -> SimplicialReport {
    let mut report = ValidationReport::new("simplicial identities");
    let n = x.bound;
    // d_i d_j = d_{j-1} d_i for i < j
    for k in 2..=n {
        for j in 1..=k {
            for i in 0..j {
                for s in 0..x.card(k) {
                    let lhs = x.face(k - 1, i, x.face(k, j, s));
                    let rhs = x.face(k - 1, j - 1, x.face(k, i, s));
                    if lhs != rhs {
                        report.push(
                            "face-face",
                            format!("d_{i} d_{j} != d_{} d_{i} at dim {k} simplex {s}", j - 1),
                        );
                    }
                }
            }
        }
    }
    // s_i s_j = s_{j+1} s_i for i <= j (both sides defined when k + 2 <= n)
    for k in 0..n.saturating_sub(1) {
        for j in 0..=k {
            for i in 0..=j {
                for s in 0..x.card(k) {
                    let lhs = x.degeneracy(k + 1, i, x.degeneracy(k, j, s));
                    let rhs = x.degeneracy(k + 1, j + 1, x.degeneracy(k, i, s));
                    if lhs != rhs {
                        report.push(
                            "degen-degen",
                            format!("s_{i} s_{j} != s_{} s_{i} at dim {k} simplex {s}", j + 1),
                        );
                    }
                }
            }
        }
    }
    // d_i s_j identities on each X_k with k < n
    for k in 0..n {
        for j in 0..=k {
            for i in 0..=k + 1 {
                for s in 0..x.card(k) {
                    let lhs = x.face(k + 1, i, x.degeneracy(k, j, s));
                    let expected = if i == j || i == j + 1 {
                        s
                    } else if i < j {
                        // d_i s_j = s_{j-1} d_i
                        if k == 0 {
                            continue;
                        }
                        x.degeneracy(k - 1, j - 1, x.face(k, i, s))
                    } else {
                        // i > j + 1: d_i s_j = s_j d_{i-1}
                        if k == 0 {
                            continue;
                        }
                        x.degeneracy(k - 1, j, x.face(k, i - 1, s))
                    };
                    if lhs != expected {
                        report.push(
                            "face-degen",
                            format!("d_{i} s_{j} identity fails at dim {k} simplex {s}"),
                        );
                    }
                }
            }
        }
    }
    SimplicialReport {
        cards: x.cards(),
        report,
    }
}

/// A simplicial map between two truncated simplicial sets with the same bound,
/// stored as per-dimension index maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    pub dims: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn apply(&self, k: usize, x: usize) -> usize {
        self.dims[k][x]
    }

    pub fn identity(x: &TruncatedSimplicialSet) -> Self {
        SimplicialMap {
            dims: x.cards().iter().map(|&c| (0..c).collect()).collect(),
        }
    }

    /// `self` after `first` (apply `first`, then `self`).
    pub fn compose_after(&self, first: &SimplicialMap) -> SimplicialMap {
        SimplicialMap {
            dims: first
                .dims
                .iter()
                .enumerate()
                .map(|(k, m)| m.iter().map(|&x| self.dims[k][x]).collect())
                .collect(),
        }
    }
}

/// Checks that `f` commutes with every face and degeneracy inside the bound.
pub fn validate_simplicial_map(
    src: &TruncatedSimplicialSet,
    tgt: &TruncatedSimplicialSet,
    f: &SimplicialMap,
) -> ValidationReport {
    let mut report = ValidationReport::new("simplicial map");
    if src.bound != tgt.bound {
        report.push("structural", "source and target bounds differ".to_string());
        return report;
    }
    if f.dims.len() != src.bound + 1 {
        report.push("structural", "map is missing dimensions".to_string());
        return report;
    }
    for k in 0..=src.bound {
        if f.dims[k].len() != src.card(k) {
            report.push("structural", format!("dimension {k} map has wrong length"));
            return report;
        }
        if let Some(&bad) = f.dims[k].iter().find(|&&y| y >= tgt.card(k)) {
            report.push("structural", format!("dimension {k} image {bad} out of range"));
            return report;
        }
    }
    for k in 1..=src.bound {
        for i in 0..=k {
            for x in 0..src.card(k) {
                let lhs = tgt.face(k, i, f.apply(k, x));
                let rhs = f.apply(k - 1, src.face(k, i, x));
                if lhs != rhs {
                    report.push(
                        "face-commute",
                        format!("f d_{i} != d_{i} f at dim {k} simplex {x}"),
                    );
                }
            }
        }
    }
    for k in 0..src.bound {
        for i in 0..=k {
            for x in 0..src.card(k) {
                let lhs = tgt.degeneracy(k, i, f.apply(k, x));
                let rhs = f.apply(k + 1, src.degeneracy(k, i, x));
                if lhs != rhs {
                    report.push(
                        "degen-commute",
                        format!("f s_{i} != s_{i} f at dim {k} simplex {x}"),
                    );
                }
            }
        }
    }
    report
}

/// Outcome of a dimension-wise bijectivity test.
#[derive(Debug, Clone)]
pub enum IsoVerdict {
    Iso(SimplicialMap),
    NotBijective { dim: usize, reason: String },
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Iso(_))
    }
}

/// True (with the inverse as witness) iff each dimension-level map is a
/// bijection. Does not re-check the simplicial-map property; run
/// [`validate_simplicial_map`] separately.
pub fn is_isomorphism(
    src: &TruncatedSimplicialSet,
    tgt: &TruncatedSimplicialSet,
    f: &SimplicialMap,
) -> IsoVerdict {
    let mut inverse = Vec::with_capacity(f.dims.len());
    for (k, m) in f.dims.iter().enumerate() {
        if src.card(k) != tgt.card(k) {
            return IsoVerdict::NotBijective {
                dim: k,
                reason: format!(
                    "cardinality mismatch: {} vs {}",
                    src.card(k),
                    tgt.card(k)
                ),
            };
        }
        let mut inv = vec![usize::MAX; tgt.card(k)];
        for (x, &y) in m.iter().enumerate() {
            if inv[y] != usize::MAX {
                return IsoVerdict::NotBijective {
                    dim: k,
                    reason: format!("simplices {} and {x} share image {y}", inv[y]),
                };
            }
            inv[y] = x;
        }
        inverse.push(inv);
    }
    IsoVerdict::Iso(SimplicialMap { dims: inverse })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_composition() {
        let d0 = Monotone::coface(2, 0);
        let d2 = Monotone::coface(3, 2);
        let c = d2.compose_after(&d0);
        assert_eq!(c.map, vec![1, 3]);
        let s1 = Monotone::codegeneracy(1, 1);
        assert_eq!(s1.map, vec![0, 1, 1]);
    }

    #[test]
    fn constant_point_passes_checks() {
        let items: Vec<Vec<usize>> = vec![vec![0]; 4];
        let (x, _) = assemble(
            3,
            items,
            |_, _| "*".to_string(),
            |_, _, _| 0usize,
            |_, _, _| 0usize,
        );
        assert_eq!(x.cards(), vec![1, 1, 1, 1]);
        let rep = check_simplicial(&x);
        assert!(rep.report.is_clean());
        let id = SimplicialMap::identity(&x);
        assert!(validate_simplicial_map(&x, &x, &id).is_clean());
        assert!(is_isomorphism(&x, &x, &id).is_iso());
    }
}
