//! 2-cocycles and 3-cocycles of the ordinal `[n]` with coefficients in a
//! composite diagram of (braided) monoidal categories: validators,
//! deterministic enumerators, reindexing along ordinal maps, and transport
//! along (braided) monoidal functors.
//!
//! Cocycles are stored normalized: only entries at strictly increasing index
//! tuples are kept. Entries at degenerate tuples are forced by the
//! normalization conventions and are produced on demand by the accessors,
//! built from the registered canonical shapes in [`crate::canon`].

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::canon::{canonical_iso, CanBindings, CanContext, CanShape};
use crate::fincat::{ordinal_pair_index, Functor, MorId, ObjId};
use crate::monoidal::{
    BraidedDiagram, BraidedMonoidalCategory, MonoidalCategory, MonoidalDiagram, MonoidalFunctor,
};
use crate::report::ValidationReport;
use crate::simplicial::Monotone;
use crate::EnumError;

/// A normalized 2-cocycle of `[n]`: objects `y[(i,j)]` in the fiber at `j`
/// for `i < j`, morphisms `f[(i,j,k)]` in the fiber at `k` for `i < j < k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TwoCocycle {
    pub n: usize,
    pub obj: BTreeMap<(usize, usize), ObjId>,
    pub mor: BTreeMap<(usize, usize, usize), MorId>,
}

impl TwoCocycle {
    pub fn label(&self) -> String {
        let y: Vec<String> = self
            .obj
            .iter()
            .map(|((i, j), v)| format!("y({i},{j})={v}"))
            .collect();
        let f: Vec<String> = self
            .mor
            .iter()
            .map(|((i, j, k), v)| format!("f({i},{j},{k})={v}"))
            .collect();
        format!("C2{{{};{}}}", y.join(","), f.join(","))
    }
}

/// A normalized 3-cocycle of `[n]`: objects `y[(i,j,k)]` in the fiber at `k`
/// for `i < j < k`, morphisms `f[(i,j,k,l)]` in the fiber at `l` for
/// `i < j < k < l`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ThreeCocycle {
    pub n: usize,
    pub obj: BTreeMap<(usize, usize, usize), ObjId>,
    pub mor: BTreeMap<(usize, usize, usize, usize), MorId>,
}

impl ThreeCocycle {
    pub fn label(&self) -> String {
        let y: Vec<String> = self
            .obj
            .iter()
            .map(|((i, j, k), v)| format!("y({i},{j},{k})={v}"))
            .collect();
        let f: Vec<String> = self
            .mor
            .iter()
            .map(|((i, j, k, l), v)| format!("f({i},{j},{k},{l})={v}"))
            .collect();
        format!("C3{{{};{}}}", y.join(","), f.join(","))
    }
}

/// Coefficients for cocycles of `[n]` valued in braided monoidal categories:
/// one fiber per vertex and one transfer functor per arrow `(i, j)` of `[n]`
/// (the transfer runs `fibers[i] -> fibers[j]`), strictly functorial.
#[derive(Clone)]
pub struct BrCoefficients {
    pub n: usize,
    pub fibers: Vec<Arc<BraidedMonoidalCategory>>,
    /// Indexed by `ordinal_pair_index(n, i, j)`.
    pub transfers: Vec<Arc<MonoidalFunctor>>,
}

impl BrCoefficients {
    pub fn constant(b: &Arc<BraidedMonoidalCategory>, n: usize) -> Self {
        let id = Arc::new(MonoidalFunctor::identity(&b.mon));
        BrCoefficients {
            n,
            fibers: vec![b.clone(); n + 1],
            transfers: vec![id; (n + 1) * (n + 2) / 2],
        }
    }

    /// Coefficients of the composite of a diagram with a functor `g: [n] -> index`.
    pub fn from_diagram(d: &BraidedDiagram, g: &Functor, n: usize) -> Self {
        let fibers = (0..=n).map(|m| d.fibers[g.obj_map[m]].clone()).collect();
        let mut transfers = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for i in 0..=n {
            for j in i..=n {
                transfers.push(d.transfers[g.ordinal_arrow(n, i, j)].clone());
            }
        }
        BrCoefficients {
            n,
            fibers,
            transfers,
        }
    }

    pub fn fiber(&self, m: usize) -> &BraidedMonoidalCategory {
        &self.fibers[m]
    }

    pub fn transfer(&self, i: usize, j: usize) -> &MonoidalFunctor {
        &self.transfers[ordinal_pair_index(self.n, i, j)]
    }
}

/// The monoidal counterpart of [`BrCoefficients`].
#[derive(Clone)]
pub struct MonCoefficients {
    pub n: usize,
    pub fibers: Vec<Arc<MonoidalCategory>>,
    pub transfers: Vec<Arc<MonoidalFunctor>>,
}

impl MonCoefficients {
    pub fn constant(m: &Arc<MonoidalCategory>, n: usize) -> Self {
        let id = Arc::new(MonoidalFunctor::identity(m));
        MonCoefficients {
            n,
            fibers: vec![m.clone(); n + 1],
            transfers: vec![id; (n + 1) * (n + 2) / 2],
        }
    }

    pub fn from_diagram(d: &MonoidalDiagram, g: &Functor, n: usize) -> Self {
        let fibers = (0..=n).map(|m| d.fibers[g.obj_map[m]].clone()).collect();
        let mut transfers = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for i in 0..=n {
            for j in i..=n {
                transfers.push(d.transfers[g.ordinal_arrow(n, i, j)].clone());
            }
        }
        MonCoefficients {
            n,
            fibers,
            transfers,
        }
    }

    pub fn fiber(&self, m: usize) -> &MonoidalCategory {
        &self.fibers[m]
    }

    pub fn transfer(&self, i: usize, j: usize) -> &MonoidalFunctor {
        &self.transfers[ordinal_pair_index(self.n, i, j)]
    }
}

// ---------------------------------------------------------------------------
// accessors (normalization rules for degenerate index tuples)
// ---------------------------------------------------------------------------

/// Object entry of a 2-cocycle at any `i <= j`.
pub fn y2(c: &TwoCocycle, co: &MonCoefficients, i: usize, j: usize) -> ObjId {
    if i == j {
        co.fiber(j).unit
    } else {
        c.obj[&(i, j)]
    }
}

/// Morphism entry of a 2-cocycle at any `i <= j <= k`. Degenerate tuples are
/// the prescribed unit composites.
pub fn f2(c: &TwoCocycle, co: &MonCoefficients, i: usize, j: usize, k: usize) -> MorId {
    if i < j && j < k {
        return c.mor[&(i, j, k)];
    }
    let fb = co.fiber(k);
    let ctx = CanContext::monoidal(fb);
    if i == j {
        // transfer(i,k)(I) ⊗ y(i,k) -> y(i,k)
        let t = co.transfer(i, k);
        canonical_iso(
            &ctx,
            CanShape::UnitLeftTransfer,
            &CanBindings::with_functor(&[y2(c, co, i, k)], t, &co.fiber(i).clone()),
        )
        .expect("degenerate 2-cocycle entry")
    } else {
        // j == k: y(i,j) ⊗ I -> y(i,j)
        canonical_iso(
            &ctx,
            CanShape::RightUnit,
            &CanBindings::objects(&[y2(c, co, i, j)]),
        )
        .expect("degenerate 2-cocycle entry")
    }
}

/// Object entry of a 3-cocycle at any `i <= j <= k`.
pub fn y3(c: &ThreeCocycle, co: &BrCoefficients, i: usize, j: usize, k: usize) -> ObjId {
    if i == j || j == k {
        co.fiber(k).mon.unit
    } else {
        c.obj[&(i, j, k)]
    }
}

/// Morphism entry of a 3-cocycle at any `i <= j <= k <= l`. Degenerate tuples
/// are the prescribed braiding/unit composites: middle-pair repeats compose
/// the functor unit constraint with nothing, first-pair repeats compose it
/// with the braiding, and last-pair repeats are the braiding against the unit.
pub fn f3(c: &ThreeCocycle, co: &BrCoefficients, i: usize, j: usize, k: usize, l: usize) -> MorId {
    if i < j && j < k && k < l {
        return c.mor[&(i, j, k, l)];
    }
    let fb = co.fiber(l);
    let ctx = CanContext::braided(fb);
    if j == k {
        // transfer(j,l)(I) ⊗ y(i,j,l) -> I ⊗ y(i,j,l)
        let t = co.transfer(j, l);
        canonical_iso(
            &ctx,
            CanShape::UnitIntroLeft,
            &CanBindings::with_functor(&[y3(c, co, i, j, l)], t, &co.fiber(j).mon),
        )
        .expect("degenerate 3-cocycle entry")
    } else if i == j {
        // transfer(k,l)(I) ⊗ y(i,k,l) -> y(i,k,l) ⊗ I
        let t = co.transfer(k, l);
        canonical_iso(
            &ctx,
            CanShape::BraidUnitLeft,
            &CanBindings::with_functor(&[y3(c, co, i, k, l)], t, &co.fiber(k).mon),
        )
        .expect("degenerate 3-cocycle entry")
    } else {
        // k == l: y(i,j,k) ⊗ I -> I ⊗ y(i,j,k)
        canonical_iso(
            &ctx,
            CanShape::BraidRightUnit,
            &CanBindings::objects(&[y3(c, co, i, j, k)]),
        )
        .expect("degenerate 3-cocycle entry")
    }
}

// ---------------------------------------------------------------------------
// coherence conditions
// ---------------------------------------------------------------------------

/// The 2-cocycle coherence square at `i <= j <= k <= l`, evaluated in the
/// fiber at `l`. Returns the two composites (clockwise, counterclockwise).
fn square2(
    c: &TwoCocycle,
    co: &MonCoefficients,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> (MorId, MorId) {
    let fb = co.fiber(l);
    let ctx = CanContext::monoidal(fb);
    let f = co.transfer(k, l);
    let x = co.transfer(j, k).obj(y2(c, co, i, j)); // in fiber(k)
    let yk = y2(c, co, j, k); // in fiber(k)
    let a = co.transfer(j, l).obj(y2(c, co, i, j));
    let b = f.obj(yk);
    let cc = y2(c, co, k, l);
    let assoc = canonical_iso(&ctx, CanShape::AssocRight, &CanBindings::objects(&[a, b, cc]))
        .expect("assoc");
    let lhs = fb.compose_chain(&[
        f2(c, co, i, j, l),
        fb.ten_m(fb.id_m(a), f2(c, co, j, k, l)),
        assoc,
    ]);
    let phi = canonical_iso(
        &ctx,
        CanShape::FunctorPair,
        &CanBindings::with_functor(&[x, yk], f, &co.fiber(k).clone()),
    )
    .expect("phi");
    let rhs = fb.compose_chain(&[
        f2(c, co, i, k, l),
        fb.ten_m(f.mor(f2(c, co, i, j, k)), fb.id_m(cc)),
        fb.ten_m(phi, fb.id_m(cc)),
    ]);
    (lhs, rhs)
}

/// The 3-cocycle coherence condition at `i <= j <= k <= l <= m`, evaluated in
/// the fiber at `m`. Returns the two route composites.
fn square3(
    c: &ThreeCocycle,
    co: &BrCoefficients,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
    m: usize,
) -> (MorId, MorId) {
    let fbm = co.fiber(m);
    let mon = &fbm.mon;
    let ctx = CanContext::braided(fbm);
    let f = co.transfer(l, m);
    let fl_mon = &co.fiber(l).mon;
    let p = co.transfer(k, l).obj(y3(c, co, i, j, k)); // fiber(l)
    let q = y3(c, co, i, k, l); // fiber(l)
    let a = f.obj(p); // = transfer(k,m)(y(i,j,k))
    let yjkl = y3(c, co, j, k, l);
    let yijl = y3(c, co, i, j, l);
    let yilm = y3(c, co, i, l, m);
    let yjlm = y3(c, co, j, l, m);
    let yijm = y3(c, co, i, j, m);
    let yklm = y3(c, co, k, l, m);
    let yikm = y3(c, co, i, k, m);
    let yjkm = y3(c, co, j, k, m);

    let splits_left = canonical_iso(
        &ctx,
        CanShape::FunctorSplits,
        &CanBindings::with_functor(&[yjkl, yijl, yilm], f, fl_mon),
    )
    .expect("splits");
    let assoc_left = canonical_iso(
        &ctx,
        CanShape::AssocLeft,
        &CanBindings::objects(&[f.obj(yjkl), yjlm, yijm]),
    )
    .expect("assoc");
    let left = mon.compose_chain(&[
        mon.ten_m(f3(c, co, j, k, l, m), mon.id_m(yijm)),
        assoc_left,
        mon.ten_m(mon.id_m(f.obj(yjkl)), f3(c, co, i, j, l, m)),
        splits_left,
        mon.ten_m(f.mor(f3(c, co, i, j, k, l)), mon.id_m(yilm)),
    ]);

    let splits_right = canonical_iso(
        &ctx,
        CanShape::FunctorSplits,
        &CanBindings::with_functor(&[p, q, yilm], f, fl_mon),
    )
    .expect("splits");
    let braid_mid = canonical_iso(
        &ctx,
        CanShape::BraidMiddle,
        &CanBindings::objects(&[a, yklm, yikm]),
    )
    .expect("braid-middle");
    let assoc_right = canonical_iso(
        &ctx,
        CanShape::AssocLeft,
        &CanBindings::objects(&[yklm, yjkm, yijm]),
    )
    .expect("assoc");
    let right = mon.compose_chain(&[
        assoc_right,
        mon.ten_m(mon.id_m(yklm), f3(c, co, i, j, k, m)),
        braid_mid,
        mon.ten_m(mon.id_m(a), f3(c, co, i, k, l, m)),
        splits_right,
    ]);
    (left, right)
}

// ---------------------------------------------------------------------------
// validators
// ---------------------------------------------------------------------------

/// Validates a normalized 2-cocycle against its coefficients: entry ranges
/// and endpoints, then the coherence square for every `i <= j <= k <= l`.
pub fn validate_two_cocycle(c: &TwoCocycle, co: &MonCoefficients) -> ValidationReport {
    let mut report = ValidationReport::new("2-cocycle");
    let n = c.n;
    if co.n != n {
        report.push("structural", "coefficients built for a different n".to_string());
        return report;
    }
    for (&(i, j), &v) in &c.obj {
        if !(i < j && j <= n) {
            report.push("structural", format!("object key ({i},{j}) out of range"));
            return report;
        }
        if v >= co.fiber(j).objects() {
            report.push("structural", format!("object at ({i},{j}) lives outside fiber {j}"));
            return report;
        }
    }
    if c.obj.len() != n * (n + 1) / 2 {
        report.push("structural", "object table incomplete".to_string());
        return report;
    }
    for (&(i, j, k), &m) in &c.mor {
        if !(i < j && j < k && k <= n) {
            report.push("structural", format!("morphism key ({i},{j},{k}) out of range"));
            return report;
        }
        let fb = co.fiber(k);
        if m >= fb.cat.mor_count() {
            report.push("structural", format!("morphism at ({i},{j},{k}) out of range"));
            return report;
        }
        let src = fb.ten_o(co.transfer(j, k).obj(y2(c, co, i, j)), y2(c, co, j, k));
        let tgt = y2(c, co, i, k);
        if fb.cat.src[m] != src || fb.cat.tgt[m] != tgt {
            report.push(
                "endpoints",
                format!("f({i},{j},{k}) has endpoints ({},{}), needs ({src},{tgt})", fb.cat.src[m], fb.cat.tgt[m]),
            );
        }
    }
    if c.mor.len() != count_triples(n) {
        report.push("structural", "morphism table incomplete".to_string());
        return report;
    }
    if !report.is_clean() {
        return report;
    }
    for i in 0..=n {
        for j in i..=n {
            for k in j..=n {
                for l in k..=n {
                    let (lhs, rhs) = square2(c, co, i, j, k, l);
                    if lhs != rhs {
                        report.push("coh", format!("coherence fails at ({i},{j},{k},{l})"));
                    }
                }
            }
        }
    }
    report
}

/// Validates a normalized 3-cocycle against its coefficients: entry ranges
/// and endpoints, then the coherence condition for every
/// `i <= j <= k <= l <= m`.
pub fn validate_three_cocycle(c: &ThreeCocycle, co: &BrCoefficients) -> ValidationReport {
    let mut report = ValidationReport::new("3-cocycle");
    let n = c.n;
    if co.n != n {
        report.push("structural", "coefficients built for a different n".to_string());
        return report;
    }
    for (&(i, j, k), &v) in &c.obj {
        if !(i < j && j < k && k <= n) {
            report.push("structural", format!("object key ({i},{j},{k}) out of range"));
            return report;
        }
        if v >= co.fiber(k).mon.objects() {
            report.push("structural", format!("object at ({i},{j},{k}) lives outside fiber {k}"));
            return report;
        }
    }
    if c.obj.len() != count_triples(n) {
        report.push("structural", "object table incomplete".to_string());
        return report;
    }
    for (&(i, j, k, l), &m) in &c.mor {
        if !(i < j && j < k && k < l && l <= n) {
            report.push("structural", format!("morphism key ({i},{j},{k},{l}) out of range"));
            return report;
        }
        let fb = &co.fiber(l).mon;
        if m >= fb.cat.mor_count() {
            report.push("structural", format!("morphism at ({i},{j},{k},{l}) out of range"));
            return report;
        }
        let src = fb.ten_o(co.transfer(k, l).obj(y3(c, co, i, j, k)), y3(c, co, i, k, l));
        let tgt = fb.ten_o(y3(c, co, j, k, l), y3(c, co, i, j, l));
        if fb.cat.src[m] != src || fb.cat.tgt[m] != tgt {
            report.push(
                "endpoints",
                format!(
                    "f({i},{j},{k},{l}) has endpoints ({},{}), needs ({src},{tgt})",
                    fb.cat.src[m], fb.cat.tgt[m]
                ),
            );
        }
    }
    if c.mor.len() != count_quadruples(n) {
        report.push("structural", "morphism table incomplete".to_string());
        return report;
    }
    if !report.is_clean() {
        return report;
    }
    for i in 0..=n {
        for j in i..=n {
            for k in j..=n {
                for l in k..=n {
                    for m in l..=n {
                        let (lhs, rhs) = square3(c, co, i, j, k, l, m);
                        if lhs != rhs {
                            report.push("coh", format!("coherence fails at ({i},{j},{k},{l},{m})"));
                        }
                    }
                }
            }
        }
    }
    report
}

pub fn count_triples(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        (n + 1) * n * (n - 1) / 6
    }
}

pub fn count_quadruples(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        (n + 1) * n * (n - 1) * (n - 2) / 24
    }
}

// ---------------------------------------------------------------------------
// enumeration
// ---------------------------------------------------------------------------

struct Budget {
    visited: u64,
    limit: u64,
    estimate: f64,
}

impl Budget {
    fn tick(&mut self) -> Result<(), EnumError> {
        self.visited += 1;
        if self.visited > self.limit {
            Err(EnumError::BudgetExceeded {
                visited: self.visited,
                budget: self.limit,
                estimate: self.estimate,
            })
        } else {
            Ok(())
        }
    }
}

/// All valid 2-cocycles of `[n]` in `co`, in lexicographic order of their
/// normalized tables.
pub fn enumerate_two_cocycles(
    n: usize,
    co: &MonCoefficients,
    budget: u64,
) -> Result<Vec<TwoCocycle>, EnumError> {
    let pairs: Vec<(usize, usize)> = (0..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let triples: Vec<(usize, usize, usize)> = (0..=n)
        .flat_map(|i| {
            (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k)))
        })
        .collect();
    let mut estimate = 1f64;
    for &(_, j) in &pairs {
        estimate *= co.fiber(j).objects() as f64;
    }
    for &(_, _, k) in &triples {
        estimate *= co.fiber(k).cat.mor_count().max(1) as f64;
    }
    let mut budget = Budget {
        visited: 0,
        limit: budget,
        estimate,
    };
    // hom-existence checks fire once the lex-max pair (j,k) of a triple is set
    let pair_pos: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(p, &t)| (t, p)).collect();
    let mut exists_checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); pairs.len()];
    for &(i, j, k) in &triples {
        exists_checks[pair_pos[&(j, k)]].push((i, j, k));
    }
    // coherence checks fire once the lex-max stored triple of a square is set
    let triple_pos: BTreeMap<(usize, usize, usize), usize> =
        triples.iter().enumerate().map(|(p, &t)| (t, p)).collect();
    let mut square_checks: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); triples.len()];
    let mut initial_squares: Vec<(usize, usize, usize, usize)> = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            for k in j..=n {
                for l in k..=n {
                    let deps: Vec<usize> = [(j, k, l), (i, k, l), (i, j, l), (i, j, k)]
                        .iter()
                        .filter(|t| t.0 < t.1 && t.1 < t.2)
                        .map(|t| triple_pos[t])
                        .collect();
                    match deps.iter().max() {
                        Some(&p) => square_checks[p].push((i, j, k, l)),
                        None => initial_squares.push((i, j, k, l)),
                    }
                }
            }
        }
    }

    let mut out = Vec::new();
    let mut c = TwoCocycle {
        n,
        obj: BTreeMap::new(),
        mor: BTreeMap::new(),
    };

    fn assign_mor(
        cell: usize,
        triples: &[(usize, usize, usize)],
        square_checks: &[Vec<(usize, usize, usize, usize)>],
        co: &MonCoefficients,
        c: &mut TwoCocycle,
        out: &mut Vec<TwoCocycle>,
        budget: &mut Budget,
    ) -> Result<(), EnumError> {
        if cell == triples.len() {
            out.push(c.clone());
            return Ok(());
        }
        let (i, j, k) = triples[cell];
        let fb = co.fiber(k);
        let src = fb.ten_o(co.transfer(j, k).obj(y2(c, co, i, j)), y2(c, co, j, k));
        let tgt = y2(c, co, i, k);
        for m in fb.cat.hom(src, tgt) {
            budget.tick()?;
            c.mor.insert((i, j, k), m);
            let ok = square_checks[cell].iter().all(|&(a, b, cc, d)| {
                let (l, r) = square2(c, co, a, b, cc, d);
                l == r
            });
            if ok {
                assign_mor(cell + 1, triples, square_checks, co, c, out, budget)?;
            }
            c.mor.remove(&(i, j, k));
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_obj(
        cell: usize,
        pairs: &[(usize, usize)],
        triples: &[(usize, usize, usize)],
        exists_checks: &[Vec<(usize, usize, usize)>],
        square_checks: &[Vec<(usize, usize, usize, usize)>],
        initial_squares: &[(usize, usize, usize, usize)],
        co: &MonCoefficients,
        c: &mut TwoCocycle,
        out: &mut Vec<TwoCocycle>,
        budget: &mut Budget,
    ) -> Result<(), EnumError> {
        if cell == pairs.len() {
            let ok = initial_squares.iter().all(|&(a, b, cc, d)| {
                let (l, r) = square2(c, co, a, b, cc, d);
                l == r
            });
            if ok {
                assign_mor(0, triples, square_checks, co, c, out, budget)?;
            }
            return Ok(());
        }
        let (i, j) = pairs[cell];
        for v in 0..co.fiber(j).objects() {
            budget.tick()?;
            c.obj.insert((i, j), v);
            let ok = exists_checks[cell].iter().all(|&(a, b, cc)| {
                let fb = co.fiber(cc);
                let src = fb.ten_o(co.transfer(b, cc).obj(y2(c, co, a, b)), y2(c, co, b, cc));
                let tgt = y2(c, co, a, cc);
                !fb.cat.hom(src, tgt).is_empty()
            });
            if ok {
                assign_obj(
                    cell + 1,
                    pairs,
                    triples,
                    exists_checks,
                    square_checks,
                    initial_squares,
                    co,
                    c,
                    out,
                    budget,
                )?;
            }
            c.obj.remove(&(i, j));
        }
        Ok(())
    }

    assign_obj(
        0,
        &pairs,
        &triples,
        &exists_checks,
        &square_checks,
        &initial_squares,
        co,
        &mut c,
        &mut out,
        &mut budget,
    )?;
    Ok(out)
}

/// All valid 3-cocycles of `[n]` in `co`, in lexicographic order of their
/// normalized tables.
pub fn enumerate_three_cocycles(
    n: usize,
    co: &BrCoefficients,
    budget: u64,
) -> Result<Vec<ThreeCocycle>, EnumError> {
    let triples: Vec<(usize, usize, usize)> = (0..=n)
        .flat_map(|i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
        .collect();
    let quads: Vec<(usize, usize, usize, usize)> = (0..=n)
        .flat_map(|i| {
            (i + 1..=n).flat_map(move |j| {
                (j + 1..=n).flat_map(move |k| (k + 1..=n).map(move |l| (i, j, k, l)))
            })
        })
        .collect();
    let mut estimate = 1f64;
    for &(_, _, k) in &triples {
        estimate *= co.fiber(k).mon.objects() as f64;
    }
    for &(_, _, _, l) in &quads {
        estimate *= co.fiber(l).mon.cat.mor_count().max(1) as f64;
    }
    let mut budget = Budget {
        visited: 0,
        limit: budget,
        estimate,
    };
    let triple_pos: BTreeMap<(usize, usize, usize), usize> =
        triples.iter().enumerate().map(|(p, &t)| (t, p)).collect();
    let mut exists_checks: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); triples.len()];
    for &(i, j, k, l) in &quads {
        exists_checks[triple_pos[&(j, k, l)]].push((i, j, k, l));
    }
    let quad_pos: BTreeMap<(usize, usize, usize, usize), usize> =
        quads.iter().enumerate().map(|(p, &t)| (t, p)).collect();
    let mut cond_checks: Vec<Vec<(usize, usize, usize, usize, usize)>> =
        vec![Vec::new(); quads.len()];
    let mut initial_conds: Vec<(usize, usize, usize, usize, usize)> = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            for k in j..=n {
                for l in k..=n {
                    for m in l..=n {
                        let deps: Vec<usize> =
                            [(j, k, l, m), (i, k, l, m), (i, j, l, m), (i, j, k, m), (i, j, k, l)]
                                .iter()
                                .filter(|t| t.0 < t.1 && t.1 < t.2 && t.2 < t.3)
                                .map(|t| quad_pos[t])
                                .collect();
                        match deps.iter().max() {
                            Some(&p) => cond_checks[p].push((i, j, k, l, m)),
                            None => initial_conds.push((i, j, k, l, m)),
                        }
                    }
                }
            }
        }
    }

    let mut out = Vec::new();
    let mut c = ThreeCocycle {
        n,
        obj: BTreeMap::new(),
        mor: BTreeMap::new(),
    };

    fn assign_mor(
        cell: usize,
        quads: &[(usize, usize, usize, usize)],
        cond_checks: &[Vec<(usize, usize, usize, usize, usize)>],
        co: &BrCoefficients,
        c: &mut ThreeCocycle,
        out: &mut Vec<ThreeCocycle>,
        budget: &mut Budget,
    ) -> Result<(), EnumError> {
        if cell == quads.len() {
            out.push(c.clone());
            return Ok(());
        }
        let (i, j, k, l) = quads[cell];
        let fb = &co.fiber(l).mon;
        let src = fb.ten_o(co.transfer(k, l).obj(y3(c, co, i, j, k)), y3(c, co, i, k, l));
        let tgt = fb.ten_o(y3(c, co, j, k, l), y3(c, co, i, j, l));
        for m in fb.cat.hom(src, tgt) {
            budget.tick()?;
            c.mor.insert((i, j, k, l), m);
            let ok = cond_checks[cell].iter().all(|&(a, b, cc, d, e)| {
                let (lh, rh) = square3(c, co, a, b, cc, d, e);
                lh == rh
            });
            if ok {
                assign_mor(cell + 1, quads, cond_checks, co, c, out, budget)?;
            }
            c.mor.remove(&(i, j, k, l));
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_obj(
        cell: usize,
        triples: &[(usize, usize, usize)],
        quads: &[(usize, usize, usize, usize)],
        exists_checks: &[Vec<(usize, usize, usize, usize)>],
        cond_checks: &[Vec<(usize, usize, usize, usize, usize)>],
        initial_conds: &[(usize, usize, usize, usize, usize)],
        co: &BrCoefficients,
        c: &mut ThreeCocycle,
        out: &mut Vec<ThreeCocycle>,
        budget: &mut Budget,
    ) -> Result<(), EnumError> {
        if cell == triples.len() {
            let ok = initial_conds.iter().all(|&(a, b, cc, d, e)| {
                let (lh, rh) = square3(c, co, a, b, cc, d, e);
                lh == rh
            });
            if ok {
                assign_mor(0, quads, cond_checks, co, c, out, budget)?;
            }
            return Ok(());
        }
        let (i, j, k) = triples[cell];
        for v in 0..co.fiber(k).mon.objects() {
            budget.tick()?;
            c.obj.insert((i, j, k), v);
            let ok = exists_checks[cell].iter().all(|&(a, b, cc, d)| {
                let fb = &co.fiber(d).mon;
                let src = fb.ten_o(co.transfer(cc, d).obj(y3(c, co, a, b, cc)), y3(c, co, a, cc, d));
                let tgt = fb.ten_o(y3(c, co, b, cc, d), y3(c, co, a, b, d));
                !fb.cat.hom(src, tgt).is_empty()
            });
            if ok {
                assign_obj(
                    cell + 1,
                    triples,
                    quads,
                    exists_checks,
                    cond_checks,
                    initial_conds,
                    co,
                    c,
                    out,
                    budget,
                )?;
            }
            c.obj.remove(&(i, j, k));
        }
        Ok(())
    }

    assign_obj(
        0,
        &triples,
        &quads,
        &exists_checks,
        &cond_checks,
        &initial_conds,
        co,
        &mut c,
        &mut out,
        &mut budget,
    )?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// reindexing and transport
// ---------------------------------------------------------------------------

/// Precompose a 2-cocycle with a monotone map `alpha: [m] -> [n]`; the result
/// has coefficients `co ∘ alpha`.
pub fn reindex2(c: &TwoCocycle, co: &MonCoefficients, alpha: &Monotone) -> TwoCocycle {
    let m = alpha.source;
    let mut obj = BTreeMap::new();
    let mut mor = BTreeMap::new();
    for i in 0..=m {
        for j in i + 1..=m {
            obj.insert((i, j), y2(c, co, alpha.apply(i), alpha.apply(j)));
        }
    }
    for i in 0..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                mor.insert(
                    (i, j, k),
                    f2(c, co, alpha.apply(i), alpha.apply(j), alpha.apply(k)),
                );
            }
        }
    }
    TwoCocycle { n: m, obj, mor }
}

/// Precompose a 3-cocycle with a monotone map `alpha: [m] -> [n]`.
pub fn reindex3(c: &ThreeCocycle, co: &BrCoefficients, alpha: &Monotone) -> ThreeCocycle {
    let m = alpha.source;
    let mut obj = BTreeMap::new();
    let mut mor = BTreeMap::new();
    for i in 0..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                obj.insert((i, j, k), y3(c, co, alpha.apply(i), alpha.apply(j), alpha.apply(k)));
            }
        }
    }
    for i in 0..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                for l in k + 1..=m {
                    mor.insert(
                        (i, j, k, l),
                        f3(
                            c,
                            co,
                            alpha.apply(i),
                            alpha.apply(j),
                            alpha.apply(k),
                            alpha.apply(l),
                        ),
                    );
                }
            }
        }
    }
    ThreeCocycle { n: m, obj, mor }
}

/// Transport a constant-coefficient 2-cocycle along a monoidal functor
/// `f: source -> target`: objects map through `f`, nondegenerate morphism
/// entries become `F(f_{ijk}) ∘ φ`, and normalization is re-imposed.
pub fn transport2(
    f: &MonoidalFunctor,
    target: &MonoidalCategory,
    c: &TwoCocycle,
) -> TwoCocycle {
    let obj: BTreeMap<_, _> = c.obj.iter().map(|(&k, &v)| (k, f.obj(v))).collect();
    let mor = c
        .mor
        .iter()
        .map(|(&(i, j, k), &m)| {
            let x = c.obj[&(i, j)];
            let y = c.obj[&(j, k)];
            ((i, j, k), target.compose(f.mor(m), f.phi(x, y)))
        })
        .collect();
    TwoCocycle {
        n: c.n,
        obj,
        mor,
    }
}

/// Transport a constant-coefficient 3-cocycle along a (braided) monoidal
/// functor: objects map through `f`, nondegenerate morphism entries are
/// conjugated by the tensor constraint, `φ⁻¹ ∘ F(f_{ijkl}) ∘ φ`.
pub fn transport3(
    f: &MonoidalFunctor,
    target: &MonoidalCategory,
    c: &ThreeCocycle,
) -> ThreeCocycle {
    let obj: BTreeMap<_, _> = c.obj.iter().map(|(&k, &v)| (k, f.obj(v))).collect();
    let mor = c
        .mor
        .iter()
        .map(|(&(i, j, k, l), &m)| {
            let phi_src = f.phi(c.obj[&(i, j, k)], c.obj[&(i, k, l)]);
            let phi_tgt = f.phi(c.obj[&(j, k, l)], c.obj[&(i, j, l)]);
            let phi_tgt_inv = target.invert(phi_tgt).expect("invertible constraint");
            ((i, j, k, l), target.compose_chain(&[phi_tgt_inv, f.mor(m), phi_src]))
        })
        .collect();
    ThreeCocycle {
        n: c.n,
        obj,
        mor,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{disc_cyclic, one_object_z2, pointed_z2, reduction_functor};
    use crate::DEFAULT_BUDGET;

    fn const3(b: &Arc<BraidedMonoidalCategory>, n: usize) -> BrCoefficients {
        BrCoefficients::constant(b, n)
    }

    fn const2(b: &Arc<BraidedMonoidalCategory>, n: usize) -> MonCoefficients {
        MonCoefficients::constant(&Arc::new(b.mon.clone()), n)
    }

    /// GF(2) rank by Gaussian elimination over bitmask rows.
    fn gf2_rank(mut rows: Vec<u64>) -> usize {
        let mut rank = 0;
        for bit in 0..64 {
            if let Some(p) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) {
                rows.swap(rank, p);
                for r in 0..rows.len() {
                    if r != rank && rows[r] >> bit & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    /// Coboundary matrix rows (as bitmasks over strictly increasing triples)
    /// for the quadruple condition on [n].
    fn delta_on_triples(n: usize) -> (usize, Vec<u64>) {
        let triples: Vec<(usize, usize, usize)> = (0..=n)
            .flat_map(|i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
            .collect();
        let pos: BTreeMap<_, _> = triples.iter().enumerate().map(|(p, &t)| (t, p)).collect();
        let mut rows = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        let mut row = 0u64;
                        for t in [(j, k, l), (i, k, l), (i, j, l), (i, j, k)] {
                            row ^= 1 << pos[&t];
                        }
                        rows.push(row);
                    }
                }
            }
        }
        (triples.len(), rows)
    }

    /// Coboundary matrix rows over strictly increasing quadruples for the
    /// quintuple condition on [n].
    fn delta_on_quadruples(n: usize) -> (usize, Vec<u64>) {
        let quads: Vec<(usize, usize, usize, usize)> = (0..=n)
            .flat_map(|i| {
                (i + 1..=n).flat_map(move |j| {
                    (j + 1..=n).flat_map(move |k| (k + 1..=n).map(move |l| (i, j, k, l)))
                })
            })
            .collect();
        let pos: BTreeMap<_, _> = quads.iter().enumerate().map(|(p, &t)| (t, p)).collect();
        let mut rows = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        for m in l + 1..=n {
                            let mut row = 0u64;
                            for t in [(j, k, l, m), (i, k, l, m), (i, j, l, m), (i, j, k, m), (i, j, k, l)] {
                                row ^= 1 << pos[&t];
                            }
                            rows.push(row);
                        }
                    }
                }
            }
        }
        (quads.len(), rows)
    }

    #[test]
    fn three_cocycle_counts_disc_z2() {
        let z2 = Arc::new(disc_cyclic(2));
        let expected = [1usize, 1, 2, 8, 64, 1024];
        for n in 0..=5 {
            let co = const3(&z2, n);
            let got = enumerate_three_cocycles(n, &co, DEFAULT_BUDGET).unwrap();
            assert_eq!(got.len(), expected[n], "n={n}");
            // independent oracle: 2^(#triples - rank of the coboundary)
            let (vars, rows) = delta_on_triples(n);
            let rank = gf2_rank(rows);
            assert_eq!(got.len(), 1usize << (vars - rank), "GF(2) oracle at n={n}");
            for c in got.iter().take(8) {
                assert!(validate_three_cocycle(c, &co).is_clean());
            }
        }
    }

    #[test]
    fn three_cocycle_counts_one_object_z2() {
        let b = Arc::new(one_object_z2());
        let expected = [1usize, 1, 1, 2, 16, 1024];
        for n in 0..=5 {
            let co = const3(&b, n);
            let got = enumerate_three_cocycles(n, &co, DEFAULT_BUDGET).unwrap();
            assert_eq!(got.len(), expected[n], "n={n}");
            let (vars, rows) = delta_on_quadruples(n);
            let rank = gf2_rank(rows);
            assert_eq!(got.len(), 1usize << (vars - rank), "GF(2) oracle at n={n}");
        }
    }

    #[test]
    fn three_cocycle_count_trivial_category() {
        let pt = Arc::new(disc_cyclic(1));
        for n in 0..=4 {
            let co = const3(&pt, n);
            assert_eq!(enumerate_three_cocycles(n, &co, DEFAULT_BUDGET).unwrap().len(), 1);
        }
    }

    /// Brute-force oracle for discrete cyclic coefficients: count maps
    /// Y: triples -> Z/a with Y(ijk) + Y(ikl) = Y(jkl) + Y(ijl) (mod a).
    fn brute_force_disc_count(a: usize, n: usize) -> usize {
        let triples: Vec<(usize, usize, usize)> = (0..=n)
            .flat_map(|i| (i + 1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k))))
            .collect();
        let pos: BTreeMap<_, _> = triples.iter().enumerate().map(|(p, &t)| (t, p)).collect();
        let mut count = 0usize;
        let cells = triples.len();
        let total = a.pow(cells as u32);
        for code in 0..total {
            let mut vals = vec![0usize; cells];
            let mut c = code;
            for v in vals.iter_mut() {
                *v = c % a;
                c /= a;
            }
            let mut ok = true;
            'outer: for i in 0..=n {
                for j in i + 1..=n {
                    for k in j + 1..=n {
                        for l in k + 1..=n {
                            let lhs = (vals[pos[&(i, j, k)]] + vals[pos[&(i, k, l)]]) % a;
                            let rhs = (vals[pos[&(j, k, l)]] + vals[pos[&(i, j, l)]]) % a;
                            if lhs != rhs {
                                ok = false;
                                break 'outer;
                            }
                        }
                    }
                }
            }
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn three_cocycle_counts_disc_z3_and_z4_match_brute_force() {
        for (a, n_max) in [(3usize, 3usize), (4, 3)] {
            let b = Arc::new(disc_cyclic(a));
            for n in 0..=n_max {
                let co = const3(&b, n);
                let got = enumerate_three_cocycles(n, &co, DEFAULT_BUDGET).unwrap().len();
                assert_eq!(got, brute_force_disc_count(a, n), "a={a} n={n}");
            }
        }
    }

    #[test]
    fn two_cocycle_counts() {
        let z2 = Arc::new(disc_cyclic(2));
        for n in 0..=5 {
            let co = const2(&z2, n);
            let got = enumerate_two_cocycles(n, &co, DEFAULT_BUDGET).unwrap();
            assert_eq!(got.len(), 1 << n, "n={n}");
            for c in got.iter().take(4) {
                assert!(validate_two_cocycle(c, &co).is_clean());
            }
        }
        let z3 = Arc::new(disc_cyclic(3));
        assert_eq!(
            enumerate_two_cocycles(2, &const2(&z3, 2), DEFAULT_BUDGET).unwrap().len(),
            9
        );
        let pt = Arc::new(disc_cyclic(1));
        for n in 0..=4 {
            assert_eq!(
                enumerate_two_cocycles(n, &const2(&pt, n), DEFAULT_BUDGET).unwrap().len(),
                1
            );
        }
    }

    #[test]
    fn two_cocycle_square_violation_names_the_triple() {
        // In disc(Z/2): Y01 = Y12 = 1 forces Y02 = 0; setting Y02 = 1 breaks
        // the unique triple, surfacing as a wrong-endpoint f entry.
        let z2 = Arc::new(disc_cyclic(2));
        let co = const2(&z2, 2);
        let mut obj = BTreeMap::new();
        obj.insert((0, 1), 1);
        obj.insert((1, 2), 1);
        obj.insert((0, 2), 1);
        let mut mor = BTreeMap::new();
        mor.insert((0, 1, 2), 0); // id_0, wrong endpoints
        let bad = TwoCocycle { n: 2, obj, mor };
        let rep = validate_two_cocycle(&bad, &co);
        assert!(rep
            .violations
            .iter()
            .any(|v| v.kind == "endpoints" && v.detail.contains("(0,1,2)")));

        // the consistent choice Y02 = Y01 + Y12 = 0 is valid
        let mut obj = BTreeMap::new();
        obj.insert((0, 1), 1);
        obj.insert((1, 2), 1);
        obj.insert((0, 2), 0);
        let mut mor = BTreeMap::new();
        mor.insert((0, 1, 2), 0);
        let good = TwoCocycle { n: 2, obj, mor };
        assert!(validate_two_cocycle(&good, &co).is_clean());
    }

    #[test]
    fn two_cocycle_n1_trivially_valid() {
        let z2 = Arc::new(disc_cyclic(2));
        let co = const2(&z2, 1);
        for v in 0..2 {
            let mut obj = BTreeMap::new();
            obj.insert((0, 1), v);
            let c = TwoCocycle {
                n: 1,
                obj,
                mor: BTreeMap::new(),
            };
            assert!(validate_two_cocycle(&c, &co).is_clean());
        }
    }

    #[test]
    fn pointed_category_cocycles_validate() {
        // not covered by the discrete oracle: braiding is nontrivial
        let p = Arc::new(pointed_z2());
        for n in 0..=3 {
            let co = const3(&p, n);
            let all = enumerate_three_cocycles(n, &co, DEFAULT_BUDGET).unwrap();
            assert!(!all.is_empty());
            for c in &all {
                assert!(validate_three_cocycle(c, &co).is_clean(), "n={n} {}", c.label());
            }
        }
    }

    #[test]
    fn reindex_preserves_validity() {
        let z2 = Arc::new(disc_cyclic(2));
        let co4 = const3(&z2, 4);
        let all = enumerate_three_cocycles(4, &co4, DEFAULT_BUDGET).unwrap();
        let co3 = const3(&z2, 3);
        for c in all.iter().take(16) {
            for i in 0..=4 {
                let r = reindex3(c, &co4, &Monotone::coface(4, i));
                assert!(validate_three_cocycle(&r, &co3).is_clean());
            }
        }
        let co5 = const3(&z2, 5);
        for c in all.iter().take(4) {
            for i in 0..=4 {
                let r = reindex3(c, &co4, &Monotone::codegeneracy(4, i));
                assert!(validate_three_cocycle(&r, &co5).is_clean());
            }
        }
    }

    #[test]
    fn transport_preserves_validity() {
        let z4 = Arc::new(disc_cyclic(4));
        let z2 = Arc::new(disc_cyclic(2));
        let red = reduction_functor(4, 2);
        let co4 = const3(&z4, 3);
        let co2 = const3(&z2, 3);
        for c in enumerate_three_cocycles(3, &co4, DEFAULT_BUDGET).unwrap() {
            let t = transport3(&red, &z2.mon, &c);
            assert!(validate_three_cocycle(&t, &co2).is_clean());
        }
        let mo4 = const2(&z4, 3);
        let mo2 = const2(&z2, 3);
        for c in enumerate_two_cocycles(3, &mo4, DEFAULT_BUDGET).unwrap() {
            let t = transport2(&red, &z2.mon, &c);
            assert!(validate_two_cocycle(&t, &mo2).is_clean());
        }
    }

    #[test]
    fn budget_exhaustion_reports_estimate() {
        let z2 = Arc::new(disc_cyclic(2));
        let co = const3(&z2, 5);
        let err = enumerate_three_cocycles(5, &co, 10).unwrap_err();
        match err {
            EnumError::BudgetExceeded { visited, budget, estimate } => {
                assert!(visited > budget);
                assert!(estimate > 1.0);
            }
        }
    }

    #[test]
    fn enumeration_order_is_sorted() {
        let z2 = Arc::new(disc_cyclic(2));
        let co = const3(&z2, 3);
        let all = enumerate_three_cocycles(3, &co, DEFAULT_BUDGET).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;
        use std::sync::OnceLock;

        /// Random monotone map [m] -> [n] from sorted choices.
        fn monotone(m: usize, n: usize) -> impl Strategy<Value = Monotone> {
            proptest::collection::vec(0..=n, m + 1).prop_map(move |mut v| {
                v.sort();
                Monotone::new(m, n, v)
            })
        }

        fn fixtures() -> &'static (Arc<BraidedMonoidalCategory>, Vec<ThreeCocycle>, Vec<TwoCocycle>) {
            static CELL: OnceLock<(Arc<BraidedMonoidalCategory>, Vec<ThreeCocycle>, Vec<TwoCocycle>)> =
                OnceLock::new();
            CELL.get_or_init(|| {
                let z2 = Arc::new(disc_cyclic(2));
                let threes =
                    enumerate_three_cocycles(4, &BrCoefficients::constant(&z2, 4), DEFAULT_BUDGET)
                        .unwrap();
                let twos = enumerate_two_cocycles(
                    4,
                    &MonCoefficients::constant(&Arc::new(z2.mon.clone()), 4),
                    DEFAULT_BUDGET,
                )
                .unwrap();
                (z2, threes, twos)
            })
        }

        proptest! {
            #[test]
            fn reindexing_is_functorial(
                pick in 0usize..64,
                alpha in monotone(3, 4),
                beta in monotone(2, 3),
            ) {
                // (c·α)·β == c·(α∘β), degenerate-entry prescriptions included
                let (z2, threes, _) = fixtures();
                let c = &threes[pick % threes.len()];
                let co4 = const3(z2, 4);
                let co3 = const3(z2, 3);
                let step = reindex3(&reindex3(c, &co4, &alpha), &co3, &beta);
                let direct = reindex3(c, &co4, &alpha.compose_after(&beta));
                prop_assert_eq!(step, direct);
            }

            #[test]
            fn two_cocycle_reindexing_is_functorial(
                pick in 0usize..16,
                alpha in monotone(3, 4),
                beta in monotone(2, 3),
            ) {
                let (z2, _, twos) = fixtures();
                let c = &twos[pick % twos.len()];
                let co4 = const2(z2, 4);
                let co3 = const2(z2, 3);
                let step = reindex2(&reindex2(c, &co4, &alpha), &co3, &beta);
                let direct = reindex2(c, &co4, &alpha.compose_after(&beta));
                prop_assert_eq!(step, direct);
            }
        }
    }
}
