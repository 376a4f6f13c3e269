//! Bisimplicial sets with explicit operator tables, their diagonal, the bar
//! construction (codiagonal / total complex), and the canonical comparison
//! map from the diagonal into the bar construction.
//!
//! A `(p,q)`-bisimplex carries horizontal operators acting on `p` and
//! vertical operators acting on `q`; rows and columns are simplicial and the
//! two directions commute. Everything is stored for `p, q <= bound`.

use std::collections::HashMap;

use crate::report::ValidationReport;
use crate::simplicial::{assemble, SimplicialMap, TruncatedSimplicialSet};

#[derive(Debug, Clone)]
pub struct BisimplicialSet {
    pub bound: usize,
    /// `labels[p][q][x]`, parallel to indices, sorted per bidegree.
    pub labels: Vec<Vec<Vec<String>>>,
    index: Vec<Vec<HashMap<String, usize>>>,
    /// `h_faces[p][q][i][x]` for `p >= 1`, `i <= p`.
    pub h_faces: Vec<Vec<Vec<Vec<usize>>>>,
    /// `h_degens[p][q][i][x]` for `p < bound`, `i <= p`.
    pub h_degens: Vec<Vec<Vec<Vec<usize>>>>,
    /// `v_faces[p][q][j][x]` for `q >= 1`, `j <= q`.
    pub v_faces: Vec<Vec<Vec<Vec<usize>>>>,
    /// `v_degens[p][q][j][x]` for `q < bound`, `j <= q`.
    pub v_degens: Vec<Vec<Vec<Vec<usize>>>>,
}

impl BisimplicialSet {
    pub fn card(&self, p: usize, q: usize) -> usize {
        self.labels[p][q].len()
    }

    pub fn cards(&self) -> Vec<Vec<usize>> {
        self.labels
            .iter()
            .map(|row| row.iter().map(|c| c.len()).collect())
            .collect()
    }

    pub fn h_face(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.h_faces[p][q][i][x]
    }

    pub fn h_degen(&self, p: usize, q: usize, i: usize, x: usize) -> usize {
        self.h_degens[p][q][i][x]
    }

    pub fn v_face(&self, p: usize, q: usize, j: usize, x: usize) -> usize {
        self.v_faces[p][q][j][x]
    }

    pub fn v_degen(&self, p: usize, q: usize, j: usize, x: usize) -> usize {
        self.v_degens[p][q][j][x]
    }

    pub fn index_of(&self, p: usize, q: usize, label: &str) -> Option<usize> {
        self.index[p][q].get(label).copied()
    }
}

/// Builds a [`BisimplicialSet`] from per-bidegree payloads plus payload-level
/// operator actions, mirroring [`crate::simplicial::assemble`].
pub fn assemble_bisimplicial<T, L, HF, HD, VF, VD>(
    bound: usize,
    mut items: Vec<Vec<Vec<T>>>,
    label_of: L,
    h_face_of: HF,
    h_degen_of: HD,
    v_face_of: VF,
    v_degen_of: VD,
) -> (BisimplicialSet, Vec<Vec<Vec<T>>>)
where
    T: Ord,
    L: Fn(usize, usize, &T) -> String,
    HF: Fn(usize, usize, usize, &T) -> T,
    HD: Fn(usize, usize, usize, &T) -> T,
    VF: Fn(usize, usize, usize, &T) -> T,
    VD: Fn(usize, usize, usize, &T) -> T,
{
    for row in items.iter_mut() {
        for cell in row.iter_mut() {
            cell.sort();
        }
    }
    let labels: Vec<Vec<Vec<String>>> = items
        .iter()
        .enumerate()
        .map(|(p, row)| {
            row.iter()
                .enumerate()
                .map(|(q, cell)| cell.iter().map(|t| label_of(p, q, t)).collect())
                .collect()
        })
        .collect();
    let index: Vec<Vec<HashMap<String, usize>>> = labels
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| {
                    let mut m = HashMap::with_capacity(cell.len());
                    for (i, l) in cell.iter().enumerate() {
                        let prev = m.insert(l.clone(), i);
                        assert!(prev.is_none(), "duplicate bisimplex label {l}");
                    }
                    m
                })
                .collect()
        })
        .collect();
    let lookup = |p: usize, q: usize, t: &T| -> usize {
        let l = label_of(p, q, t);
        *index[p][q]
            .get(&l)
            .unwrap_or_else(|| panic!("operator image not registered at bidegree ({p},{q}): {l}"))
    };

    let empty = || vec![vec![Vec::new(); bound + 1]; bound + 1];
    let mut h_faces: Vec<Vec<Vec<Vec<usize>>>> = empty();
    let mut h_degens = empty();
    let mut v_faces = empty();
    let mut v_degens = empty();
    for p in 0..=bound {
        for q in 0..=bound {
            if p >= 1 {
                h_faces[p][q] = (0..=p)
                    .map(|i| {
                        items[p][q]
                            .iter()
                            .map(|t| lookup(p - 1, q, &h_face_of(p, q, i, t)))
                            .collect()
                    })
                    .collect();
            }
            if p < bound {
                h_degens[p][q] = (0..=p)
                    .map(|i| {
                        items[p][q]
                            .iter()
                            .map(|t| lookup(p + 1, q, &h_degen_of(p, q, i, t)))
                            .collect()
                    })
                    .collect();
            }
            if q >= 1 {
                v_faces[p][q] = (0..=q)
                    .map(|j| {
                        items[p][q]
                            .iter()
                            .map(|t| lookup(p, q - 1, &v_face_of(p, q, j, t)))
                            .collect()
                    })
                    .collect();
            }
            if q < bound {
                v_degens[p][q] = (0..=q)
                    .map(|j| {
                        items[p][q]
                            .iter()
                            .map(|t| lookup(p, q + 1, &v_degen_of(p, q, j, t)))
                            .collect()
                    })
                    .collect();
            }
        }
    }
    (
        BisimplicialSet {
            bound,
            labels,
            index,
            h_faces,
            h_degens,
            v_faces,
            v_degens,
        },
        items,
    )
}

/// Extracts row `q` (horizontal structure) or column `p` (vertical structure)
/// as a truncated simplicial set, for identity checking.
fn line_as_simplicial(s: &BisimplicialSet, fixed: usize, horizontal: bool) -> TruncatedSimplicialSet {
    let bound = s.bound;
    let items: Vec<Vec<usize>> = (0..=bound)
        .map(|k| {
            let (p, q) = if horizontal { (k, fixed) } else { (fixed, k) };
            (0..s.card(p, q)).collect()
        })
        .collect();
    let (space, _) = assemble(
        bound,
        items,
        |k, &x| {
            let (p, q) = if horizontal { (k, fixed) } else { (fixed, k) };
            s.labels[p][q][x].clone()
        },
        |k, i, &x| {
            if horizontal {
                s.h_face(k, fixed, i, x)
            } else {
                s.v_face(fixed, k, i, x)
            }
        },
        |k, i, &x| {
            if horizontal {
                s.h_degen(k, fixed, i, x)
            } else {
                s.v_degen(fixed, k, i, x)
            }
        },
    );
    space
}

/// Exhaustively validates a bisimplicial set: every row and column satisfies
/// the simplicial identities, and every horizontal operator commutes with
/// every vertical one.
pub fn check_bisimplicial(s: &BisimplicialSet) -> ValidationReport {
    let mut report = ValidationReport::new("bisimplicial identities");
    let n = s.bound;
    for q in 0..=n {
        let row = line_as_simplicial(s, q, true);
        let r = crate::simplicial::check_simplicial(&row);
        if !r.report.is_clean() {
            report.push("row", format!("row q={q}: {} violations", r.report.violations.len()));
        }
    }
    for p in 0..=n {
        let col = line_as_simplicial(s, p, false);
        let r = crate::simplicial::check_simplicial(&col);
        if !r.report.is_clean() {
            report.push("column", format!("column p={p}: {} violations", r.report.violations.len()));
        }
    }
    // horizontal/vertical commutation, all four operator pairings
    for p in 0..=n {
        for q in 0..=n {
            for x in 0..s.card(p, q) {
                if p >= 1 && q >= 1 {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = s.v_face(p - 1, q, j, s.h_face(p, q, i, x));
                            let b = s.h_face(p, q - 1, i, s.v_face(p, q, j, x));
                            if a != b {
                                report.push("commute", format!("dh_{i} dv_{j} at ({p},{q}) simplex {x}"));
                            }
                        }
                    }
                }
                if p >= 1 && q < n {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = s.v_degen(p - 1, q, j, s.h_face(p, q, i, x));
                            let b = s.h_face(p, q + 1, i, s.v_degen(p, q, j, x));
                            if a != b {
                                report.push("commute", format!("dh_{i} sv_{j} at ({p},{q}) simplex {x}"));
                            }
                        }
                    }
                }
                if p < n && q >= 1 {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = s.v_face(p + 1, q, j, s.h_degen(p, q, i, x));
                            let b = s.h_degen(p, q - 1, i, s.v_face(p, q, j, x));
                            if a != b {
                                report.push("commute", format!("sh_{i} dv_{j} at ({p},{q}) simplex {x}"));
                            }
                        }
                    }
                }
                if p < n && q < n {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = s.v_degen(p + 1, q, j, s.h_degen(p, q, i, x));
                            let b = s.h_degen(p, q + 1, i, s.v_degen(p, q, j, x));
                            if a != b {
                                report.push("commute", format!("sh_{i} sv_{j} at ({p},{q}) simplex {x}"));
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// External product of two truncated simplicial sets:
/// `S_{p,q} = X_p × Y_q`, horizontal operators act on the first factor and
/// vertical operators on the second.
pub fn external_product(x: &TruncatedSimplicialSet, y: &TruncatedSimplicialSet) -> BisimplicialSet {
    assert_eq!(x.bound, y.bound);
    let bound = x.bound;
    let items: Vec<Vec<Vec<(usize, usize)>>> = (0..=bound)
        .map(|p| {
            (0..=bound)
                .map(|q| {
                    (0..x.card(p))
                        .flat_map(|a| (0..y.card(q)).map(move |b| (a, b)))
                        .collect()
                })
                .collect()
        })
        .collect();
    let (s, _) = assemble_bisimplicial(
        bound,
        items,
        |p, q, &(a, b)| format!("({}×{})", x.labels[p][a], y.labels[q][b]),
        |p, _q, i, &(a, b)| (x.face(p, i, a), b),
        |p, _q, i, &(a, b)| (x.degeneracy(p, i, a), b),
        |_p, q, j, &(a, b)| (a, y.face(q, j, b)),
        |_p, q, j, &(a, b)| (a, y.degeneracy(q, j, b)),
    );
    s
}

/// The diagonal simplicial set: dimension `n` is `S_{n,n}`, with
/// `d_i = d^h_i d^v_i` and `s_i = s^h_i s^v_i`.
pub fn diag(s: &BisimplicialSet) -> TruncatedSimplicialSet {
    let bound = s.bound;
    let items: Vec<Vec<usize>> = (0..=bound).map(|n| (0..s.card(n, n)).collect()).collect();
    let (space, _) = assemble(
        bound,
        items,
        |n, &x| s.labels[n][n][x].clone(),
        |n, i, &x| s.v_face(n - 1, n, i, s.h_face(n, n, i, x)),
        |n, i, &x| s.v_degen(n + 1, n, i, s.h_degen(n, n, i, x)),
    );
    space
}

/// The bar construction (codiagonal / total complex) of a bisimplicial set,
/// together with the per-dimension component tuples.
///
/// A `p`-simplex is a tuple `(t_0, …, t_p)` with `t_m ∈ S_{m,p-m}` subject to
/// the matching condition `dv_0 t_m = dh_{m+1} t_{m+1}`. Faces and
/// degeneracies follow the Artin–Mazur formulas: position `m < i` of `d_i`
/// applies `dv_{i-m}`, positions from `i` on apply `dh_i` to the shifted
/// entries, and dually for `s_i`.
pub struct TotalComplex {
    pub space: TruncatedSimplicialSet,
    /// `tuples[p][x]` = component indices `t_m ∈ S_{m, p-m}`.
    pub tuples: Vec<Vec<Vec<usize>>>,
}

fn tuple_label(s: &BisimplicialSet, p: usize, t: &[usize]) -> String {
    let parts: Vec<String> = t
        .iter()
        .enumerate()
        .map(|(m, &x)| s.labels[m][p - m][x].clone())
        .collect();
    format!("[{}]", parts.join("|"))
}

fn wbar_face(s: &BisimplicialSet, p: usize, i: usize, t: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(p);
    for m in 0..i {
        out.push(s.v_face(m, p - m, i - m, t[m]));
    }
    for m in i..p {
        out.push(s.h_face(m + 1, p - m - 1, i, t[m + 1]));
    }
    out
}

fn wbar_degen(s: &BisimplicialSet, p: usize, i: usize, t: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(p + 2);
    for m in 0..=i {
        out.push(s.v_degen(m, p - m, i - m, t[m]));
    }
    for m in i..=p {
        out.push(s.h_degen(m, p - m, i, t[m]));
    }
    out
}

/// Checks the matching condition of a candidate tuple.
pub fn matching_holds(s: &BisimplicialSet, p: usize, t: &[usize]) -> bool {
    (0..p).all(|m| s.v_face(m, p - m, 0, t[m]) == s.h_face(m + 1, p - m - 1, m + 1, t[m + 1]))
}

pub fn total_complex(s: &BisimplicialSet) -> TotalComplex {
    let bound = s.bound;
    // enumerate matching tuples dimension by dimension, extending from the
    // front: group candidates for t_{m+1} by their dh_{m+1} image
    let mut items: Vec<Vec<Vec<usize>>> = Vec::with_capacity(bound + 1);
    for p in 0..=bound {
        let mut tuples: Vec<Vec<usize>> = (0..s.card(0, p)).map(|x| vec![x]).collect();
        for m in 0..p {
            // bucket elements of S_{m+1, p-m-1} by dh_{m+1}
            let mut buckets: HashMap<usize, Vec<usize>> = HashMap::new();
            for x in 0..s.card(m + 1, p - m - 1) {
                buckets
                    .entry(s.h_face(m + 1, p - m - 1, m + 1, x))
                    .or_default()
                    .push(x);
            }
            let mut next = Vec::new();
            for t in tuples {
                let key = s.v_face(m, p - m, 0, t[m]);
                if let Some(cands) = buckets.get(&key) {
                    for &x in cands {
                        let mut ext = t.clone();
                        ext.push(x);
                        next.push(ext);
                    }
                }
            }
            tuples = next;
        }
        items.push(tuples);
    }
    let (space, tuples) = assemble(
        bound,
        items,
        |p, t| tuple_label(s, p, t),
        |p, i, t| wbar_face(s, p, i, t),
        |p, i, t| wbar_degen(s, p, i, t),
    );
    TotalComplex { space, tuples }
}

/// The canonical comparison map from the diagonal into the bar construction:
/// the `m`-th component of the image of `t ∈ S_{p,p}` is
/// `(dh_{m+1})^{p-m} (dv_0)^m t`. Panics if a computed tuple violates the
/// matching condition, which indicates an invalid bisimplicial set.
pub fn diag_to_total(
    s: &BisimplicialSet,
    diagonal: &TruncatedSimplicialSet,
    total: &TotalComplex,
) -> SimplicialMap {
    let bound = s.bound;
    let mut dims = Vec::with_capacity(bound + 1);
    for p in 0..=bound {
        let mut level = Vec::with_capacity(diagonal.card(p));
        for x in 0..diagonal.card(p) {
            // diag dimension p indexes S_{p,p} directly
            let mut tuple = Vec::with_capacity(p + 1);
            for m in 0..=p {
                let mut cur = x;
                for step in 0..m {
                    cur = s.v_face(p, p - step, 0, cur);
                }
                for back in (m..p).rev() {
                    cur = s.h_face(back + 1, p - m, m + 1, cur);
                }
                tuple.push(cur);
            }
            assert!(
                matching_holds(s, p, &tuple),
                "comparison image violates the matching condition at dimension {p}"
            );
            let label = tuple_label(s, p, &tuple);
            let idx = total
                .space
                .index_of(p, &label)
                .unwrap_or_else(|| panic!("comparison image missing from the total complex: {label}"));
            level.push(idx);
        }
        dims.push(level);
    }
    SimplicialMap { dims }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{nerve, ordinal, FiniteCategory};
    use crate::simplicial::{check_simplicial, is_isomorphism, validate_simplicial_map};

    fn z2_cat() -> FiniteCategory {
        crate::corpus::cyclic_group_category(2)
    }

    fn constant_point(bound: usize) -> BisimplicialSet {
        let items: Vec<Vec<Vec<usize>>> = vec![vec![vec![0]; bound + 1]; bound + 1];
        let (s, _) = assemble_bisimplicial(
            bound,
            items,
            |_, _, _| "*".to_string(),
            |_, _, _, _| 0usize,
            |_, _, _, _| 0usize,
            |_, _, _, _| 0usize,
            |_, _, _, _| 0usize,
        );
        s
    }

    #[test]
    fn constant_point_bisimplicial() {
        let s = constant_point(3);
        assert!(check_bisimplicial(&s).is_clean());
        let d = diag(&s);
        assert_eq!(d.cards(), vec![1, 1, 1, 1]);
        let t = total_complex(&s);
        assert_eq!(t.space.cards(), vec![1, 1, 1, 1]);
        let phi = diag_to_total(&s, &d, &t);
        assert!(validate_simplicial_map(&d, &t.space, &phi).is_clean());
        assert!(is_isomorphism(&d, &t.space, &phi).is_iso());
    }

    #[test]
    fn product_of_nerves_is_valid_and_diag_counts_multiply() {
        let x = nerve(&z2_cat(), 3);
        let y = nerve(&ordinal(1), 3);
        let s = external_product(&x, &y);
        assert!(check_bisimplicial(&s).is_clean());
        let d = diag(&s);
        for n in 0..=3 {
            assert_eq!(d.card(n), x.card(n) * y.card(n));
            assert_eq!(d.card(n), s.card(n, n));
        }
        assert!(check_simplicial(&d).report.is_clean());
    }

    #[test]
    fn diag_of_product_matches_product_category_nerve() {
        // nerve(C) ⊠ nerve(D) has diagonal isomorphic to nerve(C × D);
        // compare cardinalities against an explicitly built product category.
        let c = z2_cat();
        let d = ordinal(1);
        let mut entries = Vec::new();
        let cm = c.mor_count();
        let dm = d.mor_count();
        for g1 in 0..cm {
            for f1 in 0..cm {
                let Some(h1) = c.compose_opt(g1, f1) else { continue };
                for g2 in 0..dm {
                    for f2 in 0..dm {
                        let Some(h2) = d.compose_opt(g2, f2) else { continue };
                        entries.push((g1 * dm + g2, f1 * dm + f2, h1 * dm + h2));
                    }
                }
            }
        }
        let product = FiniteCategory::new(
            c.object_count * d.object_count,
            (0..cm).flat_map(|a| (0..dm).map(move |b| (a, b))).map(|(a, b)| c.src[a] * d.object_count + d.src[b]).collect(),
            (0..cm).flat_map(|a| (0..dm).map(move |b| (a, b))).map(|(a, b)| c.tgt[a] * d.object_count + d.tgt[b]).collect(),
            (0..c.object_count)
                .flat_map(|x| (0..d.object_count).map(move |y| (x, y)))
                .map(|(x, y)| c.identity[x] * dm + d.identity[y])
                .collect(),
            &entries,
        );
        assert!(crate::fincat::validate_category(&product).is_clean());
        let product_nerve = nerve(&product, 3);
        let s = external_product(&nerve(&c, 3), &nerve(&d, 3));
        let dg = diag(&s);
        assert_eq!(dg.cards(), product_nerve.cards());
    }

    #[test]
    fn vertically_constant_total_complex_matches_row_zero() {
        // vertical operators all identities: W̄S_p is in bijection with S_{p,0}
        let x = nerve(&z2_cat(), 3);
        let pt = nerve(&ordinal(0), 3);
        let s = external_product(&x, &pt);
        let t = total_complex(&s);
        for p in 0..=3 {
            assert_eq!(t.space.card(p), s.card(p, 0), "dim {p}");
        }
        assert!(check_simplicial(&t.space).report.is_clean());
    }

    #[test]
    fn total_complex_dimension_zero_is_corner() {
        let s = external_product(&nerve(&z2_cat(), 2), &nerve(&z2_cat(), 2));
        let t = total_complex(&s);
        assert_eq!(t.space.card(0), s.card(0, 0));
    }

    #[test]
    fn comparison_map_is_simplicial_on_products() {
        for (a, b) in [(z2_cat(), ordinal(1)), (ordinal(2), z2_cat())] {
            let s = external_product(&nerve(&a, 3), &nerve(&b, 3));
            let d = diag(&s);
            let t = total_complex(&s);
            assert!(check_simplicial(&t.space).report.is_clean());
            let phi = diag_to_total(&s, &d, &t);
            let rep = validate_simplicial_map(&d, &t.space, &phi);
            assert!(rep.is_clean(), "{}", rep.to_text());
            for p in 0..=3 {
                for x in 0..d.card(p) {
                    assert!(matching_holds(&s, p, &t.tuples[p][phi.apply(p, x)]));
                }
            }
        }
    }

    #[test]
    fn comparison_entries_match_the_displayed_formula_in_dimension_one() {
        // the image of t ∈ S_{1,1} is (dh_1 t, dv_0 t)
        let s = external_product(&nerve(&z2_cat(), 2), &nerve(&ordinal(1), 2));
        let d = diag(&s);
        let t = total_complex(&s);
        let phi = diag_to_total(&s, &d, &t);
        for x in 0..d.card(1) {
            let tuple = &t.tuples[1][phi.apply(1, x)];
            assert_eq!(tuple[0], s.h_face(1, 1, 1, x));
            assert_eq!(tuple[1], s.v_face(1, 1, 0, x));
        }
    }

    #[test]
    fn mutated_bisimplicial_is_detected() {
        let mut s = external_product(&nerve(&z2_cat(), 2), &nerve(&z2_cat(), 2));
        let old = s.h_faces[2][1][1][3];
        s.h_faces[2][1][1][3] = if old == 0 { 1 } else { 0 };
        assert!(!check_bisimplicial(&s).is_clean());
    }
}
