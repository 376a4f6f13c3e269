//! Finite categories over dense integer ids, functors between them, ordinal
//! categories, functor enumeration, and the Grothendieck nerve.
//!
//! Conventions: a morphism `m` runs `src(m) -> tgt(m)`. The ordinal `[n]` is
//! the category with objects `0..=n` and exactly one arrow `j -> i` whenever
//! `i <= j`; a monotone map of ordinals is then a functor. Composition
//! `compose(g, f) = g∘f` is defined when `src(g) = tgt(f)`.

use std::collections::HashMap;

use crate::report::ValidationReport;
use crate::simplicial::{assemble, Monotone, TruncatedSimplicialSet};

pub type ObjId = usize;
pub type MorId = usize;

/// A finite category as total lookup tables. The data may be ill-formed;
/// [`validate_category`] reports structural defects and law violations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    pub object_count: usize,
    pub src: Vec<ObjId>,
    pub tgt: Vec<ObjId>,
    pub identity: Vec<MorId>,
    /// Flattened partial table: `compose[g * mor_count + f] = Some(g∘f)`.
    compose: Vec<Option<MorId>>,
}

impl FiniteCategory {
    pub fn new(
        object_count: usize,
        src: Vec<ObjId>,
        tgt: Vec<ObjId>,
        identity: Vec<MorId>,
        compose_entries: &[(MorId, MorId, MorId)],
    ) -> Self {
        let m = src.len();
        let mut compose = vec![None; m * m];
        for &(g, f, gf) in compose_entries {
            compose[g * m + f] = Some(gf);
        }
        FiniteCategory {
            object_count,
            src,
            tgt,
            identity,
            compose,
        }
    }

    pub fn mor_count(&self) -> usize {
        self.src.len()
    }

    pub fn compose_opt(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.compose[g * self.mor_count() + f]
    }

    /// Composition, assuming the category has been validated.
    pub fn compose(&self, g: MorId, f: MorId) -> MorId {
        self.compose_opt(g, f)
            .unwrap_or_else(|| panic!("compose({g},{f}) undefined"))
    }

    pub fn compose_entries(&self) -> Vec<(MorId, MorId, MorId)> {
        let m = self.mor_count();
        let mut out = Vec::new();
        for g in 0..m {
            for f in 0..m {
                if let Some(gf) = self.compose[g * m + f] {
                    out.push((g, f, gf));
                }
            }
        }
        out
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        (0..self.mor_count())
            .filter(|&m| self.src[m] == x && self.tgt[m] == y)
            .collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.mor_count() == self.object_count
            && (0..self.mor_count()).all(|m| self.src[m] == self.tgt[m])
    }
}

/// Reports every structural defect and every violated associativity or
/// identity instance. Structural problems (dangling ids, a partial or
/// over-defined composition table) are tagged `structural`; law violations
/// name the witnessing morphisms.
pub fn validate_category(c: &FiniteCategory) -> ValidationReport {
    let mut report = ValidationReport::new("category");
    let m = c.mor_count();
    let mut structural = false;
    for mor in 0..m {
        if c.src[mor] >= c.object_count || c.tgt[mor] >= c.object_count {
            report.push("structural", format!("morphism {mor} has a dangling endpoint"));
            structural = true;
        }
    }
    if c.identity.len() != c.object_count {
        report.push("structural", "identity table has wrong length".to_string());
        structural = true;
    }
    for (x, &id) in c.identity.iter().enumerate() {
        if id >= m {
            report.push("structural", format!("identity of object {x} is a dangling morphism id"));
            structural = true;
        } else if c.src[id] != c.tgt[id] || c.src[id] != x {
            report.push(
                "structural",
                format!("identity of object {x} is morphism {id} with src/tgt ({},{})", c.src[id], c.tgt[id]),
            );
            structural = true;
        }
    }
    if structural {
        return report;
    }
    for g in 0..m {
        for f in 0..m {
            match c.compose_opt(g, f) {
                Some(gf) => {
                    if c.src[g] != c.tgt[f] {
                        report.push(
                            "structural",
                            format!("compose({g},{f}) defined but src({g}) != tgt({f})"),
                        );
                    } else if gf >= m {
                        report.push("structural", format!("compose({g},{f}) is a dangling morphism id"));
                    } else if c.src[gf] != c.src[f] || c.tgt[gf] != c.tgt[g] {
                        report.push(
                            "structural",
                            format!("compose({g},{f}) = {gf} has wrong endpoints"),
                        );
                    }
                }
                None => {
                    if c.src[g] == c.tgt[f] {
                        report.push(
                            "structural",
                            format!("composition table is partial: compose({g},{f}) missing"),
                        );
                    }
                }
            }
        }
    }
    if !report.is_clean() {
        return report;
    }
    // identity laws
    for f in 0..m {
        let idt = c.identity[c.tgt[f]];
        if c.compose(idt, f) != f {
            report.push("identity-law", format!("id∘{f} = {} != {f}", c.compose(idt, f)));
        }
        let ids = c.identity[c.src[f]];
        if c.compose(f, ids) != f {
            report.push("identity-law", format!("{f}∘id = {} != {f}", c.compose(f, ids)));
        }
    }
    // associativity on all composable triples
    for h in 0..m {
        for g in 0..m {
            if c.src[h] != c.tgt[g] {
                continue;
            }
            for f in 0..m {
                if c.src[g] != c.tgt[f] {
                    continue;
                }
                let lhs = c.compose(c.compose(h, g), f);
                let rhs = c.compose(h, c.compose(g, f));
                if lhs != rhs {
                    report.push(
                        "associativity",
                        format!("(h∘g)∘f != h∘(g∘f) at triple (h,g,f)=({h},{g},{f}): {lhs} vs {rhs}"),
                    );
                }
            }
        }
    }
    report
}

/// Index of the arrow `j -> i` (for `i <= j`) in the ordinal `[n]`,
/// enumerating pairs `(i, j)` lexicographically.
pub fn ordinal_pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j <= n);
    i * (n + 1) - i * (i.saturating_sub(1)) / 2 + (j - i)
}

/// All pairs `(i, j)` with `i <= j <= n` in lexicographic order.
pub fn ordinal_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            out.push((i, j));
        }
    }
    out
}

/// The ordinal category `[n]`: one arrow `j -> i` per `i <= j`.
pub fn ordinal(n: usize) -> FiniteCategory {
    let pairs = ordinal_pairs(n);
    let index: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let src = pairs.iter().map(|&(_, j)| j).collect();
    let tgt = pairs.iter().map(|&(i, _)| i).collect();
    let identity = (0..=n).map(|i| index[&(i, i)]).collect();
    let mut entries = Vec::new();
    for (g_idx, &(i1, j1)) in pairs.iter().enumerate() {
        for (f_idx, &(i2, j2)) in pairs.iter().enumerate() {
            // g: j1 -> i1, f: j2 -> i2, composable when i2 == j1
            if i2 == j1 {
                entries.push((g_idx, f_idx, index[&(i1, j2)]));
            }
        }
    }
    FiniteCategory::new(n + 1, src, tgt, identity, &entries)
}

/// A functor stored as object and morphism lookup tables over its source.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Functor {
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl Functor {
    pub fn identity(c: &FiniteCategory) -> Self {
        Functor {
            obj_map: (0..c.object_count).collect(),
            mor_map: (0..c.mor_count()).collect(),
        }
    }

    pub fn label(&self) -> String {
        let o: Vec<String> = self.obj_map.iter().map(|v| v.to_string()).collect();
        let m: Vec<String> = self.mor_map.iter().map(|v| v.to_string()).collect();
        format!("F[{}|{}]", o.join(","), m.join(","))
    }

    /// For a functor out of `[n]`: the image of the arrow `j -> i`.
    pub fn ordinal_arrow(&self, n: usize, i: usize, j: usize) -> MorId {
        self.mor_map[ordinal_pair_index(n, i, j)]
    }

    /// Precompose a functor out of `[n]` with a monotone map `[m] -> [n]`.
    pub fn reindex(&self, alpha: &Monotone) -> Functor {
        let n = alpha.target;
        let m = alpha.source;
        let obj_map = alpha.map.iter().map(|&a| self.obj_map[a]).collect();
        let mor_map = ordinal_pairs(m)
            .iter()
            .map(|&(i, j)| self.ordinal_arrow(n, alpha.apply(i), alpha.apply(j)))
            .collect();
        Functor { obj_map, mor_map }
    }
}

/// Checks that `f` preserves endpoints, identities, and composition.
pub fn validate_functor(
    source: &FiniteCategory,
    target: &FiniteCategory,
    f: &Functor,
) -> ValidationReport {
    let mut report = ValidationReport::new("functor");
    if f.obj_map.len() != source.object_count || f.mor_map.len() != source.mor_count() {
        report.push("structural", "object/morphism map has wrong length".to_string());
        return report;
    }
    if f.obj_map.iter().any(|&x| x >= target.object_count)
        || f.mor_map.iter().any(|&m| m >= target.mor_count())
    {
        report.push("structural", "map image out of range".to_string());
        return report;
    }
    for m in 0..source.mor_count() {
        let fm = f.mor_map[m];
        if target.src[fm] != f.obj_map[source.src[m]] || target.tgt[fm] != f.obj_map[source.tgt[m]]
        {
            report.push("endpoints", format!("morphism {m} image has wrong endpoints"));
        }
    }
    for x in 0..source.object_count {
        if f.mor_map[source.identity[x]] != target.identity[f.obj_map[x]] {
            report.push("identity", format!("identity of object {x} not preserved"));
        }
    }
    for g in 0..source.mor_count() {
        for h in 0..source.mor_count() {
            if let Some(gh) = source.compose_opt(g, h) {
                let lhs = f.mor_map[gh];
                let rhs = target.compose_opt(f.mor_map[g], f.mor_map[h]);
                if rhs != Some(lhs) {
                    report.push("composition", format!("composite of ({g},{h}) not preserved"));
                }
            }
        }
    }
    report
}

/// Complete, duplicate-free, lexicographically ordered list of functors
/// `[n] -> c` (ordered by object-map tuple, then morphism tuple).
pub fn enumerate_functors(n: usize, c: &FiniteCategory) -> Vec<Functor> {
    // A functor out of [n] is a chain of n composable arrows; composites and
    // identities are then forced.
    let mut out = Vec::new();
    let mut objs = vec![0usize; n + 1];
    let mut consecutive = vec![0usize; n]; // arrow (i-1, i): objs[i] -> objs[i-1]
    fn rec(
        c: &FiniteCategory,
        n: usize,
        pos: usize,
        objs: &mut Vec<usize>,
        consecutive: &mut Vec<usize>,
        out: &mut Vec<Functor>,
    ) {
        if pos == n {
            let pairs = ordinal_pairs(n);
            let mut mor_map = vec![0usize; pairs.len()];
            for (idx, &(i, j)) in pairs.iter().enumerate() {
                let mut m = c.identity[objs[i]];
                for step in i + 1..=j {
                    // extend towards j: m = m ∘ consecutive[step-1]
                    m = c.compose(m, consecutive[step - 1]);
                }
                mor_map[idx] = m;
            }
            out.push(Functor {
                obj_map: objs.clone(),
                mor_map,
            });
            return;
        }
        // choose the arrow objs[pos+1] -> objs[pos]
        for m in 0..c.mor_count() {
            if c.tgt[m] == objs[pos] {
                objs[pos + 1] = c.src[m];
                consecutive[pos] = m;
                rec(c, n, pos + 1, objs, consecutive, out);
            }
        }
    }
    for g0 in 0..c.object_count {
        objs[0] = g0;
        rec(c, n, 0, &mut objs, &mut consecutive, &mut out);
    }
    out.sort();
    out
}

/// The Grothendieck nerve truncated at `bound`: dimension-`k` simplices are
/// the functors `[k] -> c`, with operators given by precomposition.
pub fn nerve(c: &FiniteCategory, bound: usize) -> TruncatedSimplicialSet {
    let items: Vec<Vec<Functor>> = (0..=bound).map(|k| enumerate_functors(k, c)).collect();
    let (space, _) = assemble(
        bound,
        items,
        |_, f| f.label(),
        |k, i, f| f.reindex(&Monotone::coface(k, i)),
        |k, i, f| f.reindex(&Monotone::codegeneracy(k, i)),
    );
    space
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::check_simplicial;

    /// One-object category from a finite monoid table (`table[a][b] = a∘b`,
    /// unit must be index 0).
    pub fn monoid_category(table: &[Vec<usize>]) -> FiniteCategory {
        let m = table.len();
        let mut entries = Vec::new();
        for g in 0..m {
            for f in 0..m {
                entries.push((g, f, table[g][f]));
            }
        }
        FiniteCategory::new(1, vec![0; m], vec![0; m], vec![0], &entries)
    }

    pub fn z2_category() -> FiniteCategory {
        monoid_category(&[vec![0, 1], vec![1, 0]])
    }

    #[test]
    fn ordinal_counts() {
        assert_eq!(ordinal(0).object_count, 1);
        assert_eq!(ordinal(0).mor_count(), 1);
        assert_eq!(ordinal(1).object_count, 2);
        assert_eq!(ordinal(1).mor_count(), 3);
        assert_eq!(ordinal(3).object_count, 4);
        assert_eq!(ordinal(3).mor_count(), 10);
        for n in 0..=4 {
            assert!(validate_category(&ordinal(n)).is_clean(), "ordinal({n})");
        }
    }

    #[test]
    fn identity_law_violation_is_reported() {
        // z2 composition but with the identity pointer aimed at the non-unit
        // endomorphism: id∘u = u fails.
        let mut c = z2_category();
        c.identity = vec![1];
        let report = validate_category(&c);
        assert!(!report.is_clean());
        assert!(report.violations.iter().any(|v| v.kind == "identity-law"));
    }

    #[test]
    fn associativity_violation_names_the_triple() {
        // Non-associative unital magma on {e, u, v}: u∘u = v, u∘v = e, v∘u = u,
        // v∘v = e. Then (u∘u)∘u = v∘u = u but u∘(u∘u) = u∘v = e.
        let c = monoid_category(&[
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 1, 0],
        ]);
        let report = validate_category(&c);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == "associativity" && v.detail.contains("(1,1,1)")));
    }

    #[test]
    fn structural_error_for_bad_identity_endpoints() {
        // identity of object 0 points at a morphism with src != tgt
        let c = FiniteCategory::new(
            2,
            vec![0, 1, 1],
            vec![0, 1, 0],
            vec![2, 1],
            &[],
        );
        let report = validate_category(&c);
        assert!(report.violations.iter().any(|v| v.kind == "structural"));
    }

    #[test]
    fn partial_composition_table_is_structural() {
        let mut c = ordinal(1);
        let m = c.mor_count();
        // erase one required composite
        let entries: Vec<_> = c
            .compose_entries()
            .into_iter()
            .filter(|&(g, f, _)| !(g == 2 && f == 2))
            .collect();
        c = FiniteCategory::new(c.object_count, c.src.clone(), c.tgt.clone(), c.identity.clone(), &entries);
        assert_eq!(c.mor_count(), m);
        let report = validate_category(&c);
        assert!(report
            .violations
            .iter()
            .any(|v| v.kind == "structural" && v.detail.contains("partial")));
    }

    #[test]
    fn functor_enumeration_counts() {
        let pt = ordinal(0);
        for n in 0..4 {
            assert_eq!(enumerate_functors(n, &pt).len(), 1);
        }
        let arrow = ordinal(1);
        assert_eq!(enumerate_functors(1, &arrow).len(), 3);
        assert_eq!(enumerate_functors(2, &arrow).len(), 4);
        assert_eq!(enumerate_functors(3, &z2_category()).len(), 8);
    }

    /// Blunt oracle: all object/morphism assignments filtered by functor laws.
    fn brute_force_functors(n: usize, c: &FiniteCategory) -> usize {
        let ord = ordinal(n);
        let pairs = ordinal_pairs(n);
        let mut count = 0usize;
        let mut obj = vec![0usize; n + 1];
        let mut mor = vec![0usize; pairs.len()];
        fn rec_obj(
            depth: usize,
            c: &FiniteCategory,
            ord: &FiniteCategory,
            obj: &mut Vec<usize>,
            mor: &mut Vec<usize>,
            count: &mut usize,
        ) {
            if depth == obj.len() {
                rec_mor(0, c, ord, obj, mor, count);
                return;
            }
            for x in 0..c.object_count {
                obj[depth] = x;
                rec_obj(depth + 1, c, ord, obj, mor, count);
            }
        }
        fn rec_mor(
            depth: usize,
            c: &FiniteCategory,
            ord: &FiniteCategory,
            obj: &mut Vec<usize>,
            mor: &mut Vec<usize>,
            count: &mut usize,
        ) {
            if depth == mor.len() {
                let f = Functor {
                    obj_map: obj.clone(),
                    mor_map: mor.clone(),
                };
                if validate_functor(ord, c, &f).is_clean() {
                    *count += 1;
                }
                return;
            }
            for m in 0..c.mor_count() {
                mor[depth] = m;
                rec_mor(depth + 1, c, ord, obj, mor, count);
            }
        }
        rec_obj(0, c, &ord, &mut obj, &mut mor, &mut count);
        count
    }

    #[test]
    fn functor_enumeration_matches_brute_force() {
        for (n, c) in [(1, ordinal(1)), (2, ordinal(1)), (2, z2_category())] {
            assert_eq!(enumerate_functors(n, &c).len(), brute_force_functors(n, &c));
        }
    }

    #[test]
    fn nerve_cardinalities() {
        assert_eq!(nerve(&ordinal(0), 3).cards(), vec![1, 1, 1, 1]);
        assert_eq!(nerve(&z2_category(), 3).cards(), vec![1, 2, 4, 8]);
        assert_eq!(nerve(&ordinal(1), 2).cards(), vec![2, 3, 4]);
    }

    /// Independent oracle for nerve cardinalities: composable tuples.
    fn composable_tuples(c: &FiniteCategory, k: usize) -> usize {
        if k == 0 {
            return c.object_count;
        }
        let mut chains: Vec<Vec<usize>> = (0..c.mor_count()).map(|m| vec![m]).collect();
        for _ in 1..k {
            let mut next = Vec::new();
            for chain in &chains {
                let last = *chain.last().unwrap();
                for m in 0..c.mor_count() {
                    // extend with m where tgt(m) = src(last)
                    if c.tgt[m] == c.src[last] {
                        let mut ch = chain.clone();
                        ch.push(m);
                        next.push(ch);
                    }
                }
            }
            chains = next;
        }
        chains.len()
    }

    #[test]
    fn nerve_counts_match_composable_tuple_oracle() {
        for c in [ordinal(2), z2_category()] {
            let nv = nerve(&c, 3);
            for k in 0..=3 {
                assert_eq!(nv.card(k), composable_tuples(&c, k), "dim {k}");
            }
        }
    }

    #[test]
    fn nerves_pass_simplicial_identities() {
        for c in [ordinal(0), ordinal(2), z2_category()] {
            let nv = nerve(&c, 3);
            assert!(check_simplicial(&nv).report.is_clean());
        }
    }

    #[test]
    fn mutated_nerve_face_table_is_detected() {
        let mut nv = nerve(&z2_category(), 3);
        // redirect d_1 of some 2-simplex to the other 1-simplex
        let old = nv.faces[2][1][2];
        nv.faces[2][1][2] = 1 - old;
        let rep = check_simplicial(&nv);
        assert!(!rep.report.is_clean());
        assert!(rep
            .report
            .violations
            .iter()
            .any(|v| v.detail.contains("simplex 2") || v.detail.contains("simplex")));
    }
}
