//! Integral homology of truncated simplicial sets through the normalized
//! chain complex, plus induced maps on homology with isomorphism verdicts.
//!
//! Generators in degree `k` are the nondegenerate `k`-simplices (detected by
//! scanning the degeneracy tables); the boundary is the alternating face sum
//! with degenerate targets dropped. With a truncation bound `N`, `H_k` is
//! computable for `k <= N-1` and reported as trusted for `k <= N-2`.
//!
//! Boundaries are stored densely for the Smith-normal-form stages but the
//! whole-complex checks (`∂∂ = 0`, chain-map commutation) run on sparse
//! columns so that large top-dimension boundary matrices stay cheap.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::simplicial::{SimplicialMap, TruncatedSimplicialSet};
use crate::smith::{kernel_basis, smith_normal_form, solve, IntMatrix};

/// Sparse integer column as ordered (row, value) pairs.
type SparseCol = Vec<(usize, i64)>;

/// Normalized chain complex of a truncated simplicial set.
pub struct ChainComplex {
    pub bound: usize,
    /// Per degree: original simplex indices of the nondegenerate generators.
    pub generators: Vec<Vec<usize>>,
    /// `columns[k][x]` = sparse boundary of generator `x` in degree `k`.
    columns: Vec<Vec<SparseCol>>,
}

impl ChainComplex {
    pub fn rank(&self, k: usize) -> usize {
        self.generators[k].len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.len()).collect()
    }

    /// Dense boundary matrix `∂_k: C_k -> C_{k-1}` (zero map out of degree 0).
    pub fn boundary(&self, k: usize) -> IntMatrix {
        let rows = if k == 0 { 0 } else { self.rank(k - 1) };
        let mut m = IntMatrix::zeros(rows, self.rank(k));
        if k == 0 {
            return m;
        }
        for (col, sparse) in self.columns[k].iter().enumerate() {
            for &(row, v) in sparse {
                m.set(row, col, BigInt::from(v));
            }
        }
        m
    }
}

fn degenerate_flags(x: &TruncatedSimplicialSet, k: usize) -> Vec<bool> {
    let mut flags = vec![false; x.card(k)];
    if k == 0 {
        return flags;
    }
    for i in 0..k {
        for s in 0..x.card(k - 1) {
            flags[x.degeneracy(k - 1, i, s)] = true;
        }
    }
    flags
}

fn add_sparse(acc: &mut BTreeMap<usize, i64>, col: &SparseCol, scale: i64) {
    for &(row, v) in col {
        let e = acc.entry(row).or_insert(0);
        *e += scale * v;
        if *e == 0 {
            acc.remove(&row);
        }
    }
}

/// Builds the normalized complex and verifies `∂∂ = 0` exactly.
pub fn normalized_complex(x: &TruncatedSimplicialSet) -> ChainComplex {
    let bound = x.bound;
    let mut generators: Vec<Vec<usize>> = Vec::with_capacity(bound + 1);
    let mut positions: Vec<Vec<Option<usize>>> = Vec::with_capacity(bound + 1);
    for k in 0..=bound {
        let flags = degenerate_flags(x, k);
        let mut gens = Vec::new();
        let mut pos = vec![None; x.card(k)];
        for s in 0..x.card(k) {
            if !flags[s] {
                pos[s] = Some(gens.len());
                gens.push(s);
            }
        }
        generators.push(gens);
        positions.push(pos);
    }
    let mut columns: Vec<Vec<SparseCol>> = Vec::with_capacity(bound + 1);
    columns.push(generators[0].iter().map(|_| SparseCol::new()).collect());
    for k in 1..=bound {
        let mut level = Vec::with_capacity(generators[k].len());
        for &s in &generators[k] {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for i in 0..=k {
                let f = x.face(k, i, s);
                if let Some(row) = positions[k - 1][f] {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let e = acc.entry(row).or_insert(0);
                    *e += sign;
                    if *e == 0 {
                        acc.remove(&row);
                    }
                }
            }
            level.push(acc.into_iter().collect());
        }
        columns.push(level);
    }
    // ∂∂ = 0, column by column
    for k in 2..=bound {
        for (col, sparse) in columns[k].iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(row, v) in sparse {
                add_sparse(&mut acc, &columns[k - 1][row], v);
            }
            assert!(acc.is_empty(), "∂∂ != 0 at degree {k}, generator {col}");
        }
    }
    ChainComplex {
        bound,
        generators,
        columns,
    }
}

/// A finitely generated abelian group in canonical form: free rank plus
/// torsion coefficients in divisibility order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroupDescriptor {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupDescriptor {
    pub fn free(betti: usize) -> Self {
        AbelianGroupDescriptor {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.betti > 0 {
            parts.push(if self.betti == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.betti)
            });
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// `H_k` of the normalized complex; requires `k <= bound - 1` so that the
/// incoming boundary is complete.
pub fn homology(cc: &ChainComplex, k: usize) -> AbelianGroupDescriptor {
    assert!(
        k + 1 <= cc.bound,
        "H_{k} needs boundaries from degree {} beyond the truncation bound {}",
        k + 1,
        cc.bound
    );
    let r_k = if k == 0 {
        0
    } else {
        smith_normal_form(&cc.boundary(k)).rank
    };
    let s_next = smith_normal_form(&cc.boundary(k + 1));
    let betti = cc.rank(k) - r_k - s_next.rank;
    let torsion = s_next
        .invariant_factors()
        .into_iter()
        .filter(|d| d > &BigInt::one())
        .collect();
    AbelianGroupDescriptor { betti, torsion }
}

/// One row of a homology table, downstream-serializable.
#[derive(Debug, Clone, Serialize)]
pub struct HomologyRow {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<String>,
    pub trusted: bool,
}

/// Homology in degrees `0..=max_degree` (each must be `<= N-1`), with degrees
/// above `N-2` flagged untrusted.
pub fn homology_table(cc: &ChainComplex, max_degree: usize) -> Vec<HomologyRow> {
    (0..=max_degree)
        .map(|k| {
            let h = homology(cc, k);
            HomologyRow {
                degree: k,
                betti: h.betti,
                torsion: h.torsion.iter().map(|t| t.to_string()).collect(),
                trusted: k + 2 <= cc.bound,
            }
        })
        .collect()
}

/// The chain map of a simplicial map on normalized complexes: per degree,
/// each generator goes to a generator or (when the image is degenerate) to
/// zero. Commutation with the boundary is verified exactly, sparsely.
pub struct ChainMap {
    /// `degrees[k][x]` = image generator of `x`, or `None` for zero.
    pub degrees: Vec<Vec<Option<usize>>>,
}

impl ChainMap {
    /// Dense matrix of the degree-`k` component.
    pub fn matrix(&self, ccx: &ChainComplex, ccy: &ChainComplex, k: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(ccy.rank(k), ccx.rank(k));
        for (col, &img) in self.degrees[k].iter().enumerate() {
            if let Some(row) = img {
                m.set(row, col, BigInt::one());
            }
        }
        m
    }
}

pub fn chain_map(
    x: &TruncatedSimplicialSet,
    y: &TruncatedSimplicialSet,
    ccx: &ChainComplex,
    ccy: &ChainComplex,
    f: &SimplicialMap,
) -> Result<ChainMap, String> {
    let bound = x.bound;
    let mut degrees = Vec::with_capacity(bound + 1);
    for k in 0..=bound {
        let mut pos_y = vec![None; y.card(k)];
        for (row, &s) in ccy.generators[k].iter().enumerate() {
            pos_y[s] = Some(row);
        }
        let level: Vec<Option<usize>> = ccx.generators[k]
            .iter()
            .map(|&s| pos_y[f.apply(k, s)])
            .collect();
        degrees.push(level);
    }
    let cm = ChainMap { degrees };
    // sparse commutation check: ∂ g = g ∂ in every degree
    for k in 1..=bound {
        for (col, &img) in cm.degrees[k].iter().enumerate() {
            let mut lhs: BTreeMap<usize, i64> = BTreeMap::new();
            if let Some(yk) = img {
                add_sparse(&mut lhs, &ccy.columns[k][yk], 1);
            }
            let mut rhs: BTreeMap<usize, i64> = BTreeMap::new();
            for &(row, v) in &ccx.columns[k][col] {
                if let Some(yr) = cm.degrees[k - 1][row] {
                    let e = rhs.entry(yr).or_insert(0);
                    *e += v;
                    if *e == 0 {
                        rhs.remove(&yr);
                    }
                }
            }
            if lhs != rhs {
                return Err(format!(
                    "chain map does not commute with ∂ at degree {k}, generator {col}"
                ));
            }
        }
    }
    Ok(cm)
}

/// The induced map on `H_k` with an isomorphism verdict.
#[derive(Debug, Clone)]
pub struct InducedMap {
    pub degree: usize,
    pub matrix: IntMatrix,
    pub source: AbelianGroupDescriptor,
    pub target: AbelianGroupDescriptor,
    pub surjective: bool,
    pub iso: bool,
    /// Verdicts above degree `N-2` rest on possibly incomplete data.
    pub trusted: bool,
}

/// Computes the induced map on `H_k` via kernel-basis presentations and
/// returns the isomorphism verdict: the map is an isomorphism iff it is
/// surjective and both groups have equal canonical descriptors (for finitely
/// generated abelian groups a surjection between isomorphic groups is an
/// isomorphism).
pub fn induced_homology_map(
    ccx: &ChainComplex,
    ccy: &ChainComplex,
    cm: &ChainMap,
    k: usize,
) -> Result<InducedMap, String> {
    assert!(k + 1 <= ccx.bound && k + 1 <= ccy.bound);
    let zx = if k == 0 {
        IntMatrix::identity(ccx.rank(0))
    } else {
        kernel_basis(&ccx.boundary(k))
    };
    let zy = if k == 0 {
        IntMatrix::identity(ccy.rank(0))
    } else {
        kernel_basis(&ccy.boundary(k))
    };
    let rx = solve(&zx, &ccx.boundary(k + 1))
        .ok_or_else(|| format!("image of ∂_{} does not lie in the kernel basis", k + 1))?;
    let ry = solve(&zy, &ccy.boundary(k + 1))
        .ok_or_else(|| format!("image of ∂_{} does not lie in the kernel basis", k + 1))?;
    let p = solve(&zy, &cm.matrix(ccx, ccy, k).mul(&zx))
        .ok_or_else(|| "chain map does not carry cycles to cycles".to_string())?;

    let descriptor = |relations: &IntMatrix, gens: usize| {
        let s = smith_normal_form(relations);
        AbelianGroupDescriptor {
            betti: gens - s.rank,
            torsion: s
                .invariant_factors()
                .into_iter()
                .filter(|d| d > &BigInt::one())
                .collect(),
        }
    };
    let source = descriptor(&rx, zx.cols);
    let target = descriptor(&ry, zy.cols);

    // surjectivity: the cokernel of [P | R_Y] vanishes
    let stacked = p.hcat(&ry);
    let s = smith_normal_form(&stacked);
    let surjective =
        s.rank == zy.cols && s.invariant_factors().iter().all(|d| d.is_one());
    let iso = surjective && source == target;
    Ok(InducedMap {
        degree: k,
        matrix: p,
        source,
        target,
        surjective,
        iso,
        trusted: k + 2 <= ccx.bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{cyclic_group_category, disc_cyclic, one_object_z2};
    use crate::fincat::{nerve, ordinal};
    use crate::nerves::geometric_nerve_br;
    use crate::simplicial::SimplicialMap;
    use crate::DEFAULT_BUDGET;
    use std::sync::Arc;

    fn z(b: usize) -> AbelianGroupDescriptor {
        AbelianGroupDescriptor::free(b)
    }

    fn z_mod(t: i64) -> AbelianGroupDescriptor {
        AbelianGroupDescriptor {
            betti: 0,
            torsion: vec![BigInt::from(t)],
        }
    }

    #[test]
    fn point_has_trivial_homology() {
        let cc = normalized_complex(&nerve(&ordinal(0), 3));
        assert_eq!(cc.ranks(), vec![1, 0, 0, 0]);
        assert_eq!(homology(&cc, 0), z(1));
        assert_eq!(homology(&cc, 1), z(0));
        assert_eq!(homology(&cc, 2), z(0));
    }

    #[test]
    fn cyclic_group_nerve_is_a_lens_like_space() {
        // one-object Z/2 nerve: H_0 = Z, H_1 = Z/2, H_2 = 0, H_3 = Z/2
        let cc = normalized_complex(&nerve(&cyclic_group_category(2), 4));
        assert_eq!(cc.ranks(), vec![1, 1, 1, 1, 1]);
        assert_eq!(homology(&cc, 0), z(1));
        assert_eq!(homology(&cc, 1), z_mod(2));
        assert_eq!(homology(&cc, 2), z(0));
        assert_eq!(homology(&cc, 3), z_mod(2));
        // Z/3 for torsion variety
        let cc = normalized_complex(&nerve(&cyclic_group_category(3), 2));
        assert_eq!(homology(&cc, 0), z(1));
        assert_eq!(homology(&cc, 1), z_mod(3));
    }

    #[test]
    fn geometric_nerve_homology_disc_z2() {
        // double delooping of Z/2: H = Z, 0, Z/2, 0 in trusted degrees at N=5
        let b = Arc::new(disc_cyclic(2));
        let g = geometric_nerve_br(&b, 5, DEFAULT_BUDGET).unwrap();
        let cc = normalized_complex(&g.space);
        assert_eq!(cc.rank(2), 1);
        assert_eq!(homology(&cc, 0), z(1));
        assert_eq!(homology(&cc, 1), z(0));
        assert_eq!(homology(&cc, 2), z_mod(2));
        assert_eq!(homology(&cc, 3), z(0));
    }

    #[test]
    fn geometric_nerve_homology_one_object_z2() {
        // triple delooping: H_1 = H_2 = 0, H_3 = Z/2 at N=5
        let b = Arc::new(one_object_z2());
        let g = geometric_nerve_br(&b, 5, DEFAULT_BUDGET).unwrap();
        let cc = normalized_complex(&g.space);
        assert_eq!(homology(&cc, 0), z(1));
        assert_eq!(homology(&cc, 1), z(0));
        assert_eq!(homology(&cc, 2), z(0));
        assert_eq!(homology(&cc, 3), z_mod(2));
    }

    #[test]
    fn homology_table_flags_trust() {
        let cc = normalized_complex(&nerve(&cyclic_group_category(2), 3));
        let table = homology_table(&cc, 2);
        assert_eq!(table.len(), 3);
        assert!(table[0].trusted && table[1].trusted);
        assert!(!table[2].trusted);
    }

    #[test]
    fn identity_induces_isomorphisms() {
        let x = nerve(&cyclic_group_category(2), 4);
        let cc = normalized_complex(&x);
        let id = SimplicialMap::identity(&x);
        let cm = chain_map(&x, &x, &cc, &cc, &id).unwrap();
        for k in 0..=3 {
            let ind = induced_homology_map(&cc, &cc, &cm, k).unwrap();
            assert!(ind.iso, "degree {k}");
        }
    }

    #[test]
    fn collapse_map_is_not_an_iso_on_h1() {
        // nerve(Z/2) -> point kills H_1
        let x = nerve(&cyclic_group_category(2), 3);
        let y = nerve(&ordinal(0), 3);
        let ccx = normalized_complex(&x);
        let ccy = normalized_complex(&y);
        let f = SimplicialMap {
            dims: (0..=3).map(|k| vec![0; x.card(k)]).collect(),
        };
        let cm = chain_map(&x, &y, &ccx, &ccy, &f).unwrap();
        let h0 = induced_homology_map(&ccx, &ccy, &cm, 0).unwrap();
        assert!(h0.iso);
        let h1 = induced_homology_map(&ccx, &ccy, &cm, 1).unwrap();
        assert!(!h1.iso);
        assert!(h1.surjective, "H_1 of the point is trivial");
    }
}
