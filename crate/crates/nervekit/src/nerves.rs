//! Nerve constructions: the geometric nerve of a single (braided) monoidal
//! category, the nerve of a diagram of such categories, the dimension-wise
//! unitary geometric nerve of the delooped Grothendieck construction, and
//! the natural isomorphism identifying the latter two.
//!
//! All spaces come back as [`TruncatedSimplicialSet`]s with a typed catalog
//! of simplices parallel to the index order; operators act by precomposition
//! with ordinal maps (reindexing).

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::canon::{canonical_iso, CanBindings, CanContext, CanShape};
use crate::cocycle::{
    enumerate_three_cocycles, enumerate_two_cocycles, reindex2, reindex3, BrCoefficients,
    MonCoefficients, ThreeCocycle, TwoCocycle,
};
use crate::fincat::{enumerate_functors, Functor, MorId, ObjId};
use crate::monoidal::{BraidedDiagram, BraidedMonoidalCategory, MonoidalCategory, MonoidalDiagram};
use crate::simplicial::{assemble, Monotone, SimplicialMap, TruncatedSimplicialSet};
use crate::EnumError;

fn pair_label(g: &Functor, c: &str) -> String {
    format!("({};{})", g.label(), c)
}

/// The geometric nerve of a braided monoidal category: dimension `n` is the
/// set of 3-cocycles of `[n]` with constant coefficients.
pub struct GeometricNerveBr {
    pub space: TruncatedSimplicialSet,
    pub cocycles: Vec<Vec<ThreeCocycle>>,
}

pub fn geometric_nerve_br(
    b: &Arc<BraidedMonoidalCategory>,
    bound: usize,
    budget: u64,
) -> Result<GeometricNerveBr, EnumError> {
    let coeffs: Vec<BrCoefficients> = (0..=bound).map(|n| BrCoefficients::constant(b, n)).collect();
    let items = (0..=bound)
        .into_par_iter()
        .map(|n| enumerate_three_cocycles(n, &coeffs[n], budget))
        .collect::<Result<Vec<_>, _>>()?;
    let (space, cocycles) = assemble(
        bound,
        items,
        |_, c| c.label(),
        |k, i, c| reindex3(c, &coeffs[k], &Monotone::coface(k, i)),
        |k, i, c| reindex3(c, &coeffs[k], &Monotone::codegeneracy(k, i)),
    );
    Ok(GeometricNerveBr { space, cocycles })
}

/// The unitary geometric nerve of the delooping of a single monoidal
/// category: dimension `n` is the set of 2-cocycles of `[n]` with constant
/// coefficients.
pub struct GeometricNerveMon {
    pub space: TruncatedSimplicialSet,
    pub cocycles: Vec<Vec<TwoCocycle>>,
}

pub fn geometric_nerve_mon(
    m: &Arc<MonoidalCategory>,
    bound: usize,
    budget: u64,
) -> Result<GeometricNerveMon, EnumError> {
    let coeffs: Vec<MonCoefficients> =
        (0..=bound).map(|n| MonCoefficients::constant(m, n)).collect();
    let items = (0..=bound)
        .into_par_iter()
        .map(|n| enumerate_two_cocycles(n, &coeffs[n], budget))
        .collect::<Result<Vec<_>, _>>()?;
    let (space, cocycles) = assemble(
        bound,
        items,
        |_, c| c.label(),
        |k, i, c| reindex2(c, &coeffs[k], &Monotone::coface(k, i)),
        |k, i, c| reindex2(c, &coeffs[k], &Monotone::codegeneracy(k, i)),
    );
    Ok(GeometricNerveMon { space, cocycles })
}

/// The nerve of a diagram of braided monoidal categories: an `n`-simplex is a
/// functor `g: [n] -> index` together with a 3-cocycle of `[n]` with
/// coefficients in the composite of the diagram with `g`.
pub struct DiagramNerveBr {
    pub space: TruncatedSimplicialSet,
    pub simplices: Vec<Vec<(Functor, ThreeCocycle)>>,
}

pub fn diagram_nerve_br(
    d: &BraidedDiagram,
    bound: usize,
    budget: u64,
) -> Result<DiagramNerveBr, EnumError> {
    let items: Vec<Vec<(Functor, ThreeCocycle)>> = (0..=bound)
        .into_par_iter()
        .map(|n| {
            let gs = enumerate_functors(n, &d.index);
            let mut level = Vec::new();
            for g in gs {
                let co = BrCoefficients::from_diagram(d, &g, n);
                for c in enumerate_three_cocycles(n, &co, budget)? {
                    level.push((g.clone(), c));
                }
            }
            Ok(level)
        })
        .collect::<Result<Vec<_>, EnumError>>()?;
    let (space, simplices) = assemble(
        bound,
        items,
        |_, (g, c)| pair_label(g, &c.label()),
        |k, i, (g, c)| {
            let alpha = Monotone::coface(k, i);
            let co = BrCoefficients::from_diagram(d, g, k);
            (g.reindex(&alpha), reindex3(c, &co, &alpha))
        },
        |k, i, (g, c)| {
            let alpha = Monotone::codegeneracy(k, i);
            let co = BrCoefficients::from_diagram(d, g, k);
            (g.reindex(&alpha), reindex3(c, &co, &alpha))
        },
    );
    Ok(DiagramNerveBr { space, simplices })
}

/// The nerve of a diagram of monoidal categories, built from 2-cocycles.
pub struct DiagramNerveMon {
    pub space: TruncatedSimplicialSet,
    pub simplices: Vec<Vec<(Functor, TwoCocycle)>>,
}

pub fn diagram_nerve_mon(
    d: &MonoidalDiagram,
    bound: usize,
    budget: u64,
) -> Result<DiagramNerveMon, EnumError> {
    let items: Vec<Vec<(Functor, TwoCocycle)>> = (0..=bound)
        .into_par_iter()
        .map(|n| {
            let gs = enumerate_functors(n, &d.index);
            let mut level = Vec::new();
            for g in gs {
                let co = MonCoefficients::from_diagram(d, &g, n);
                for c in enumerate_two_cocycles(n, &co, budget)? {
                    level.push((g.clone(), c));
                }
            }
            Ok(level)
        })
        .collect::<Result<Vec<_>, EnumError>>()?;
    let (space, simplices) = assemble(
        bound,
        items,
        |_, (g, c)| pair_label(g, &c.label()),
        |k, i, (g, c)| {
            let alpha = Monotone::coface(k, i);
            let co = MonCoefficients::from_diagram(d, g, k);
            (g.reindex(&alpha), reindex2(c, &co, &alpha))
        },
        |k, i, (g, c)| {
            let alpha = Monotone::codegeneracy(k, i);
            let co = MonCoefficients::from_diagram(d, g, k);
            (g.reindex(&alpha), reindex2(c, &co, &alpha))
        },
    );
    Ok(DiagramNerveMon { space, simplices })
}

/// An `n`-simplex of the unitary geometric nerve of the delooped Grothendieck
/// construction: an index functor system together with objects `x[(i,j)]` in
/// the fiber at `g(j)` and morphisms
/// `fhat[(i,j,k)] : transfer(j,k)(x[(i,j)]) ⊗ x[(j,k)] -> x[(i,k)]`
/// in the fiber at `g(k)`, subject to the coherence square at strictly
/// increasing quadruples. Degenerate entries are the canonical unit
/// constraints, supplied on demand.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DeloopSimplex {
    pub g: Functor,
    pub x: BTreeMap<(usize, usize), ObjId>,
    pub fhat: BTreeMap<(usize, usize, usize), MorId>,
}

impl DeloopSimplex {
    pub fn label(&self) -> String {
        let xs: Vec<String> = self.x.iter().map(|((i, j), v)| format!("x({i},{j})={v}")).collect();
        let fs: Vec<String> = self
            .fhat
            .iter()
            .map(|((i, j, k), v)| format!("m({i},{j},{k})={v}"))
            .collect();
        format!("D({};{};{})", self.g.label(), xs.join(","), fs.join(","))
    }

    fn cocycle_view(&self, n: usize) -> TwoCocycle {
        TwoCocycle {
            n,
            obj: self.x.clone(),
            mor: self.fhat.clone(),
        }
    }
}

/// The coherence square of the delooped Grothendieck construction at a
/// strictly increasing quadruple, evaluated in the fiber at `l`.
fn deloop_square(
    x: &BTreeMap<(usize, usize), ObjId>,
    fhat: &BTreeMap<(usize, usize, usize), MorId>,
    co: &MonCoefficients,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> (MorId, MorId) {
    let fb = co.fiber(l);
    let ctx = CanContext::monoidal(fb);
    let f = co.transfer(k, l);
    let xk = co.transfer(j, k).obj(x[&(i, j)]);
    let yk = x[&(j, k)];
    let a = co.transfer(j, l).obj(x[&(i, j)]);
    let b = f.obj(yk);
    let cc = x[&(k, l)];
    let assoc =
        canonical_iso(&ctx, CanShape::AssocRight, &CanBindings::objects(&[a, b, cc])).expect("assoc");
    let lhs = fb.compose_chain(&[
        fhat[&(i, j, l)],
        fb.ten_m(fb.id_m(a), fhat[&(j, k, l)]),
        assoc,
    ]);
    let phi = canonical_iso(
        &ctx,
        CanShape::FunctorPair,
        &CanBindings::with_functor(&[xk, yk], f, &co.fiber(k).clone()),
    )
    .expect("phi");
    let rhs = fb.compose_chain(&[
        fhat[&(i, k, l)],
        fb.ten_m(f.mor(fhat[&(i, j, k)]), fb.id_m(cc)),
        fb.ten_m(phi, fb.id_m(cc)),
    ]);
    (lhs, rhs)
}

/// Enumerates the object/morphism systems of the delooped Grothendieck nerve
/// over a fixed index functor, by depth-first assignment with hom-existence
/// pruning and square checks at strictly increasing quadruples.
fn enumerate_deloop_systems(
    n: usize,
    co: &MonCoefficients,
    budget: u64,
) -> Result<Vec<(BTreeMap<(usize, usize), ObjId>, BTreeMap<(usize, usize, usize), MorId>)>, EnumError>
{
    let pairs: Vec<(usize, usize)> = (0..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
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
    for &(_, j) in &pairs {
        estimate *= co.fiber(j).objects() as f64;
    }
    for &(_, _, k) in &triples {
        estimate *= co.fiber(k).cat.mor_count().max(1) as f64;
    }
    let mut visited = 0u64;

    let mut out = Vec::new();
    let mut x: BTreeMap<(usize, usize), ObjId> = BTreeMap::new();
    let mut fhat: BTreeMap<(usize, usize, usize), MorId> = BTreeMap::new();

    // schedule square checks at the lex-max participating triple
    let triple_pos: BTreeMap<(usize, usize, usize), usize> =
        triples.iter().enumerate().map(|(p, &t)| (t, p)).collect();
    let mut square_checks: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); triples.len()];
    for &(i, j, k, l) in &quads {
        square_checks[triple_pos[&(j, k, l)]].push((i, j, k, l));
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_fhat(
        cell: usize,
        triples: &[(usize, usize, usize)],
        square_checks: &[Vec<(usize, usize, usize, usize)>],
        co: &MonCoefficients,
        x: &mut BTreeMap<(usize, usize), ObjId>,
        fhat: &mut BTreeMap<(usize, usize, usize), MorId>,
        out: &mut Vec<(BTreeMap<(usize, usize), ObjId>, BTreeMap<(usize, usize, usize), MorId>)>,
        visited: &mut u64,
        budget: u64,
        estimate: f64,
    ) -> Result<(), EnumError> {
        if cell == triples.len() {
            out.push((x.clone(), fhat.clone()));
            return Ok(());
        }
        let (i, j, k) = triples[cell];
        let fb = co.fiber(k);
        let src = fb.ten_o(co.transfer(j, k).obj(x[&(i, j)]), x[&(j, k)]);
        let tgt = x[&(i, k)];
        for m in fb.cat.hom(src, tgt) {
            *visited += 1;
            if *visited > budget {
                return Err(EnumError::BudgetExceeded {
                    visited: *visited,
                    budget,
                    estimate,
                });
            }
            fhat.insert((i, j, k), m);
            let ok = square_checks[cell]
                .iter()
                .all(|&(a, b, c, d)| {
                    let (lh, rh) = deloop_square(x, fhat, co, a, b, c, d);
                    lh == rh
                });
            if ok {
                assign_fhat(cell + 1, triples, square_checks, co, x, fhat, out, visited, budget, estimate)?;
            }
            fhat.remove(&(i, j, k));
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_x(
        cell: usize,
        pairs: &[(usize, usize)],
        triples: &[(usize, usize, usize)],
        square_checks: &[Vec<(usize, usize, usize, usize)>],
        co: &MonCoefficients,
        x: &mut BTreeMap<(usize, usize), ObjId>,
        fhat: &mut BTreeMap<(usize, usize, usize), MorId>,
        out: &mut Vec<(BTreeMap<(usize, usize), ObjId>, BTreeMap<(usize, usize, usize), MorId>)>,
        visited: &mut u64,
        budget: u64,
        estimate: f64,
    ) -> Result<(), EnumError> {
        if cell == pairs.len() {
            return assign_fhat(0, triples, square_checks, co, x, fhat, out, visited, budget, estimate);
        }
        let (i, j) = pairs[cell];
        for v in 0..co.fiber(j).objects() {
            *visited += 1;
            if *visited > budget {
                return Err(EnumError::BudgetExceeded {
                    visited: *visited,
                    budget,
                    estimate,
                });
            }
            x.insert((i, j), v);
            // prune: every strict triple whose pairs are all assigned needs a
            // nonempty hom set; (j,k) is the lex-max pair of triple (i,j,k)
            let ok = triples
                .iter()
                .filter(|&&(_, b, c)| (b, c) == (i, j))
                .all(|&(a, b, c)| {
                    let fb = co.fiber(c);
                    let src = fb.ten_o(co.transfer(b, c).obj(x[&(a, b)]), x[&(b, c)]);
                    !fb.cat.hom(src, x[&(a, c)]).is_empty()
                });
            if ok {
                assign_x(cell + 1, pairs, triples, square_checks, co, x, fhat, out, visited, budget, estimate)?;
            }
            x.remove(&(i, j));
        }
        Ok(())
    }

    assign_x(
        0,
        &pairs,
        &triples,
        &square_checks,
        co,
        &mut x,
        &mut fhat,
        &mut out,
        &mut visited,
        budget,
        estimate,
    )?;
    Ok(out)
}

/// The unitary geometric nerve of the delooped Grothendieck construction of a
/// diagram of monoidal categories, built dimension-wise from functor systems,
/// object systems, and coherence-square-constrained morphism systems.
pub struct DeloopingNerve {
    pub space: TruncatedSimplicialSet,
    pub simplices: Vec<Vec<DeloopSimplex>>,
}

pub fn delooping_grothendieck_nerve(
    d: &MonoidalDiagram,
    bound: usize,
    budget: u64,
) -> Result<DeloopingNerve, EnumError> {
    let items: Vec<Vec<DeloopSimplex>> = (0..=bound)
        .into_par_iter()
        .map(|n| {
            let gs = enumerate_functors(n, &d.index);
            let mut level = Vec::new();
            for g in gs {
                let co = MonCoefficients::from_diagram(d, &g, n);
                for (x, fhat) in enumerate_deloop_systems(n, &co, budget)? {
                    level.push(DeloopSimplex {
                        g: g.clone(),
                        x,
                        fhat,
                    });
                }
            }
            Ok(level)
        })
        .collect::<Result<Vec<_>, EnumError>>()?;
    let (space, simplices) = assemble(
        bound,
        items,
        |_, s| s.label(),
        |k, i, s| {
            let alpha = Monotone::coface(k, i);
            let co = MonCoefficients::from_diagram(d, &s.g, k);
            let c = reindex2(&s.cocycle_view(k), &co, &alpha);
            DeloopSimplex {
                g: s.g.reindex(&alpha),
                x: c.obj,
                fhat: c.mor,
            }
        },
        |k, i, s| {
            let alpha = Monotone::codegeneracy(k, i);
            let co = MonCoefficients::from_diagram(d, &s.g, k);
            let c = reindex2(&s.cocycle_view(k), &co, &alpha);
            DeloopSimplex {
                g: s.g.reindex(&alpha),
                x: c.obj,
                fhat: c.mor,
            }
        },
    );
    Ok(DeloopingNerve { space, simplices })
}

/// The dimension-wise identification of the diagram nerve with the delooped
/// Grothendieck nerve: relabel `(g, (y, f))` as the system `(g, x, fhat)`.
/// Fails with the offending label if some relabeled simplex is missing.
pub fn proposition_iso(
    ner: &DiagramNerveMon,
    del: &DeloopingNerve,
) -> Result<SimplicialMap, String> {
    let mut dims = Vec::with_capacity(ner.simplices.len());
    for (k, level) in ner.simplices.iter().enumerate() {
        let mut m = Vec::with_capacity(level.len());
        for (g, c) in level {
            let s = DeloopSimplex {
                g: g.clone(),
                x: c.obj.clone(),
                fhat: c.mor.clone(),
            };
            let label = s.label();
            let idx = del
                .space
                .index_of(k, &label)
                .ok_or_else(|| format!("missing delooping simplex at dimension {k}: {label}"))?;
            m.push(idx);
        }
        dims.push(m);
    }
    Ok(SimplicialMap { dims })
}
