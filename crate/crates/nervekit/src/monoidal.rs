//! Finite monoidal and braided monoidal categories with explicit constraint
//! tables, monoidal functors, diagrams indexed by a finite category, and
//! exhaustive coherence validation.
//!
//! Axioms checked: tensor functoriality, invertibility and naturality of all
//! constraints, pentagon, triangle, the two hexagons, the three coherence
//! squares of a (braided) monoidal functor, and strict functoriality of
//! diagrams (identities map to literal identity functors, composites to
//! literal composite tables).

use std::sync::Arc;

use crate::fincat::{validate_category, validate_functor, FiniteCategory, Functor, MorId, ObjId};
use crate::report::ValidationReport;

/// A finite monoidal category: a finite category plus total tensor tables
/// and constraint isomorphism tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalCategory {
    pub cat: FiniteCategory,
    pub tensor_obj: Vec<Vec<ObjId>>,
    pub tensor_mor: Vec<Vec<MorId>>,
    pub unit: ObjId,
    /// `assoc[x][y][z]`: the associator `(x⊗y)⊗z -> x⊗(y⊗z)`, flattened.
    pub assoc: Vec<MorId>,
    /// `lunit[x]`: `I⊗x -> x`.
    pub lunit: Vec<MorId>,
    /// `runit[x]`: `x⊗I -> x`.
    pub runit: Vec<MorId>,
}

impl MonoidalCategory {
    pub fn objects(&self) -> usize {
        self.cat.object_count
    }

    pub fn ten_o(&self, x: ObjId, y: ObjId) -> ObjId {
        self.tensor_obj[x][y]
    }

    pub fn ten_m(&self, u: MorId, v: MorId) -> MorId {
        self.tensor_mor[u][v]
    }

    pub fn id_m(&self, x: ObjId) -> MorId {
        self.cat.identity[x]
    }

    pub fn assoc_at(&self, x: ObjId, y: ObjId, z: ObjId) -> MorId {
        let n = self.objects();
        self.assoc[(x * n + y) * n + z]
    }

    pub fn compose(&self, g: MorId, f: MorId) -> MorId {
        self.cat.compose(g, f)
    }

    /// Compose a chain right-to-left: `chain[0] ∘ chain[1] ∘ … ∘ chain[last]`.
    pub fn compose_chain(&self, chain: &[MorId]) -> MorId {
        let mut it = chain.iter().rev();
        let mut acc = *it.next().expect("empty chain");
        for &g in it {
            acc = self.compose(g, acc);
        }
        acc
    }

    /// Two-sided inverse, if one exists.
    pub fn invert(&self, m: MorId) -> Option<MorId> {
        let (s, t) = (self.cat.src[m], self.cat.tgt[m]);
        (0..self.cat.mor_count()).find(|&u| {
            self.cat.src[u] == t
                && self.cat.tgt[u] == s
                && self.cat.compose_opt(u, m) == Some(self.id_m(s))
                && self.cat.compose_opt(m, u) == Some(self.id_m(t))
        })
    }
}

/// A monoidal category plus a braiding table `braiding[x][y]: x⊗y -> y⊗x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedMonoidalCategory {
    pub mon: MonoidalCategory,
    pub braiding: Vec<Vec<MorId>>,
}

impl BraidedMonoidalCategory {
    pub fn braid(&self, x: ObjId, y: ObjId) -> MorId {
        self.braiding[x][y]
    }
}

/// A (strong) monoidal functor: an underlying functor plus the binary
/// constraint `φ_{x,y}: Fx⊗Fy -> F(x⊗y)` and unit constraint `φ₀: I -> FI`,
/// all stored as target-category morphism ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonoidalFunctor {
    pub functor: Functor,
    pub tensor_constraint: Vec<Vec<MorId>>,
    pub unit_constraint: MorId,
}

impl MonoidalFunctor {
    pub fn obj(&self, x: ObjId) -> ObjId {
        self.functor.obj_map[x]
    }

    pub fn mor(&self, m: MorId) -> MorId {
        self.functor.mor_map[m]
    }

    pub fn phi(&self, x: ObjId, y: ObjId) -> MorId {
        self.tensor_constraint[x][y]
    }

    pub fn phi0(&self) -> MorId {
        self.unit_constraint
    }

    /// The strict identity functor of `m` (identity maps, identity constraints).
    pub fn identity(m: &MonoidalCategory) -> Self {
        let n = m.objects();
        MonoidalFunctor {
            functor: Functor::identity(&m.cat),
            tensor_constraint: (0..n)
                .map(|x| (0..n).map(|y| m.id_m(m.ten_o(x, y))).collect())
                .collect(),
            unit_constraint: m.id_m(m.unit),
        }
    }

    /// `second ∘ first` with composed constraints, in `second`'s target.
    pub fn compose(
        first: &MonoidalFunctor,
        second: &MonoidalFunctor,
        first_source: &MonoidalCategory,
        second_target: &MonoidalCategory,
    ) -> MonoidalFunctor {
        let n = first_source.objects();
        let obj_map: Vec<ObjId> = (0..n).map(|x| second.obj(first.obj(x))).collect();
        let mor_map: Vec<MorId> = (0..first_source.cat.mor_count())
            .map(|m| second.mor(first.mor(m)))
            .collect();
        let tensor_constraint = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        second_target.compose(
                            second.mor(first.phi(x, y)),
                            second.phi(first.obj(x), first.obj(y)),
                        )
                    })
                    .collect()
            })
            .collect();
        let unit_constraint = second_target.compose(second.mor(first.phi0()), second.phi0());
        MonoidalFunctor {
            functor: Functor { obj_map, mor_map },
            tensor_constraint,
            unit_constraint,
        }
    }
}

fn check_mor_endpoints(
    report: &mut ValidationReport,
    cat: &FiniteCategory,
    m: MorId,
    src: ObjId,
    tgt: ObjId,
    what: &str,
) -> bool {
    if m >= cat.mor_count() {
        report.push("structural", format!("{what}: morphism id {m} out of range"));
        return false;
    }
    if cat.src[m] != src || cat.tgt[m] != tgt {
        report.push(
            "structural",
            format!(
                "{what}: morphism {m} has endpoints ({},{}) but needs ({src},{tgt})",
                cat.src[m], cat.tgt[m]
            ),
        );
        return false;
    }
    true
}

/// Exhaustively validates a monoidal structure: structural totality, tensor
/// functoriality, constraint invertibility and naturality, pentagon and
/// triangle. Violations name the witnessing object/morphism tuples.
pub fn validate_monoidal(m: &MonoidalCategory) -> ValidationReport {
    let mut report = validate_category(&m.cat);
    report.context = "monoidal category".to_string();
    if !report.is_clean() {
        return report;
    }
    let n = m.objects();
    let nm = m.cat.mor_count();
    if m.tensor_obj.len() != n
        || m.tensor_obj.iter().any(|r| r.len() != n)
        || m.tensor_mor.len() != nm
        || m.tensor_mor.iter().any(|r| r.len() != nm)
        || m.assoc.len() != n * n * n
        || m.lunit.len() != n
        || m.runit.len() != n
        || m.unit >= n
    {
        report.push("structural", "tensor/constraint tables have wrong shape".to_string());
        return report;
    }
    if m.tensor_obj.iter().flatten().any(|&x| x >= n) {
        report.push("structural", "tensor_obj entry out of range".to_string());
        return report;
    }
    let mut ok = true;
    for u in 0..nm {
        for v in 0..nm {
            ok &= check_mor_endpoints(
                &mut report,
                &m.cat,
                m.ten_m(u, v),
                m.ten_o(m.cat.src[u], m.cat.src[v]),
                m.ten_o(m.cat.tgt[u], m.cat.tgt[v]),
                &format!("tensor_mor[{u}][{v}]"),
            );
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let a = m.assoc_at(x, y, z);
                ok &= check_mor_endpoints(
                    &mut report,
                    &m.cat,
                    a,
                    m.ten_o(m.ten_o(x, y), z),
                    m.ten_o(x, m.ten_o(y, z)),
                    &format!("assoc[{x}][{y}][{z}]"),
                );
            }
        }
        ok &= check_mor_endpoints(&mut report, &m.cat, m.lunit[x], m.ten_o(m.unit, x), x, &format!("lunit[{x}]"));
        ok &= check_mor_endpoints(&mut report, &m.cat, m.runit[x], m.ten_o(x, m.unit), x, &format!("runit[{x}]"));
    }
    if !ok {
        return report;
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m.invert(m.assoc_at(x, y, z)).is_none() {
                    report.push("structural", format!("assoc[{x}][{y}][{z}] is not invertible"));
                }
            }
        }
        if m.invert(m.lunit[x]).is_none() {
            report.push("structural", format!("lunit[{x}] is not invertible"));
        }
        if m.invert(m.runit[x]).is_none() {
            report.push("structural", format!("runit[{x}] is not invertible"));
        }
    }
    if !report.is_clean() {
        return report;
    }
    // ⊗ is a functor
    for x in 0..n {
        for y in 0..n {
            if m.ten_m(m.id_m(x), m.id_m(y)) != m.id_m(m.ten_o(x, y)) {
                report.push("tensor-functor", format!("id_{x} ⊗ id_{y} is not an identity"));
            }
        }
    }
    for g in 0..nm {
        for f in 0..nm {
            let Some(gf) = m.cat.compose_opt(g, f) else { continue };
            for g2 in 0..nm {
                for f2 in 0..nm {
                    let Some(gf2) = m.cat.compose_opt(g2, f2) else { continue };
                    let lhs = m.ten_m(gf, gf2);
                    let rhs = m.compose(m.ten_m(g, g2), m.ten_m(f, f2));
                    if lhs != rhs {
                        report.push(
                            "tensor-functor",
                            format!("(g∘f)⊗(g'∘f') != (g⊗g')∘(f⊗f') at ({g},{f},{g2},{f2})"),
                        );
                    }
                }
            }
        }
    }
    // naturality of the associator
    for u in 0..nm {
        for v in 0..nm {
            for w in 0..nm {
                let (sx, sy, sz) = (m.cat.src[u], m.cat.src[v], m.cat.src[w]);
                let (tx, ty, tz) = (m.cat.tgt[u], m.cat.tgt[v], m.cat.tgt[w]);
                let lhs = m.compose(m.assoc_at(tx, ty, tz), m.ten_m(m.ten_m(u, v), w));
                let rhs = m.compose(m.ten_m(u, m.ten_m(v, w)), m.assoc_at(sx, sy, sz));
                if lhs != rhs {
                    report.push("naturality-assoc", format!("associator not natural at ({u},{v},{w})"));
                }
            }
        }
    }
    // naturality of the unitors
    for u in 0..nm {
        let (sx, tx) = (m.cat.src[u], m.cat.tgt[u]);
        let idu = m.id_m(m.unit);
        if m.compose(m.lunit[tx], m.ten_m(idu, u)) != m.compose(u, m.lunit[sx]) {
            report.push("naturality-lunit", format!("left unitor not natural at {u}"));
        }
        if m.compose(m.runit[tx], m.ten_m(u, idu)) != m.compose(u, m.runit[sx]) {
            report.push("naturality-runit", format!("right unitor not natural at {u}"));
        }
    }
    // pentagon
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = m.compose(
                        m.assoc_at(w, x, m.ten_o(y, z)),
                        m.assoc_at(m.ten_o(w, x), y, z),
                    );
                    let rhs = m.compose_chain(&[
                        m.ten_m(m.id_m(w), m.assoc_at(x, y, z)),
                        m.assoc_at(w, m.ten_o(x, y), z),
                        m.ten_m(m.assoc_at(w, x, y), m.id_m(z)),
                    ]);
                    if lhs != rhs {
                        report.push("pentagon", format!("pentagon fails at ({w},{x},{y},{z})"));
                    }
                }
            }
        }
    }
    // triangle
    for x in 0..n {
        for y in 0..n {
            let lhs = m.compose(m.ten_m(m.id_m(x), m.lunit[y]), m.assoc_at(x, m.unit, y));
            let rhs = m.ten_m(m.runit[x], m.id_m(y));
            if lhs != rhs {
                report.push("triangle", format!("triangle fails at ({x},{y})"));
            }
        }
    }
    report
}

/// Validates a braided monoidal category: the monoidal axioms plus braiding
/// invertibility, naturality, and the two hexagons.
pub fn validate_braided(b: &BraidedMonoidalCategory) -> ValidationReport {
    let mut report = validate_monoidal(&b.mon);
    report.context = "braided monoidal category".to_string();
    if !report.is_clean() {
        return report;
    }
    let m = &b.mon;
    let n = m.objects();
    if b.braiding.len() != n || b.braiding.iter().any(|r| r.len() != n) {
        report.push("structural", "braiding table has wrong shape".to_string());
        return report;
    }
    let mut ok = true;
    for x in 0..n {
        for y in 0..n {
            ok &= check_mor_endpoints(
                &mut report,
                &m.cat,
                b.braid(x, y),
                m.ten_o(x, y),
                m.ten_o(y, x),
                &format!("braiding[{x}][{y}]"),
            );
        }
    }
    if !ok {
        return report;
    }
    for x in 0..n {
        for y in 0..n {
            if m.invert(b.braid(x, y)).is_none() {
                report.push("structural", format!("braiding[{x}][{y}] is not invertible"));
            }
        }
    }
    if !report.is_clean() {
        return report;
    }
    // naturality of the braiding
    let nm = m.cat.mor_count();
    for u in 0..nm {
        for v in 0..nm {
            let (sx, sy) = (m.cat.src[u], m.cat.src[v]);
            let (tx, ty) = (m.cat.tgt[u], m.cat.tgt[v]);
            let lhs = m.compose(b.braid(tx, ty), m.ten_m(u, v));
            let rhs = m.compose(m.ten_m(v, u), b.braid(sx, sy));
            if lhs != rhs {
                report.push("naturality-braiding", format!("braiding not natural at ({u},{v})"));
            }
        }
    }
    // hexagons
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = m.compose_chain(&[
                    m.assoc_at(y, z, x),
                    b.braid(x, m.ten_o(y, z)),
                    m.assoc_at(x, y, z),
                ]);
                let rhs = m.compose_chain(&[
                    m.ten_m(m.id_m(y), b.braid(x, z)),
                    m.assoc_at(y, x, z),
                    m.ten_m(b.braid(x, y), m.id_m(z)),
                ]);
                if lhs != rhs {
                    report.push("hexagon-1", format!("first hexagon fails at ({x},{y},{z})"));
                }
                let ainv = |a: ObjId, bb: ObjId, c: ObjId| m.invert(m.assoc_at(a, bb, c)).unwrap();
                let lhs = m.compose_chain(&[
                    ainv(z, x, y),
                    b.braid(m.ten_o(x, y), z),
                    ainv(x, y, z),
                ]);
                let rhs = m.compose_chain(&[
                    m.ten_m(b.braid(x, z), m.id_m(y)),
                    ainv(x, z, y),
                    m.ten_m(m.id_m(x), b.braid(y, z)),
                ]);
                if lhs != rhs {
                    report.push("hexagon-2", format!("second hexagon fails at ({x},{y},{z})"));
                }
            }
        }
    }
    if b.mon.cat.is_discrete() {
        report.note("discrete category: every braiding entry is forced to be an identity".to_string());
    }
    report
}

/// Validates a monoidal functor `f: source -> target`: underlying functor
/// laws, constraint endpoints and invertibility, naturality of `φ`, and the
/// associativity/unit coherence squares.
pub fn validate_monoidal_functor(
    source: &MonoidalCategory,
    target: &MonoidalCategory,
    f: &MonoidalFunctor,
) -> ValidationReport {
    let mut report = validate_functor(&source.cat, &target.cat, &f.functor);
    report.context = "monoidal functor".to_string();
    if !report.is_clean() {
        return report;
    }
    let n = source.objects();
    if f.tensor_constraint.len() != n || f.tensor_constraint.iter().any(|r| r.len() != n) {
        report.push("structural", "tensor constraint table has wrong shape".to_string());
        return report;
    }
    let mut ok = check_mor_endpoints(
        &mut report,
        &target.cat,
        f.phi0(),
        target.unit,
        f.obj(source.unit),
        "unit constraint",
    );
    for x in 0..n {
        for y in 0..n {
            ok &= check_mor_endpoints(
                &mut report,
                &target.cat,
                f.phi(x, y),
                target.ten_o(f.obj(x), f.obj(y)),
                f.obj(source.ten_o(x, y)),
                &format!("tensor constraint[{x}][{y}]"),
            );
        }
    }
    if !ok {
        return report;
    }
    for x in 0..n {
        for y in 0..n {
            if target.invert(f.phi(x, y)).is_none() {
                report.push("structural", format!("tensor constraint[{x}][{y}] is not invertible"));
            }
        }
    }
    if target.invert(f.phi0()).is_none() {
        report.push("structural", "unit constraint is not invertible".to_string());
    }
    if !report.is_clean() {
        return report;
    }
    // naturality of φ
    let nm = source.cat.mor_count();
    for u in 0..nm {
        for v in 0..nm {
            let (sx, sy) = (source.cat.src[u], source.cat.src[v]);
            let (tx, ty) = (source.cat.tgt[u], source.cat.tgt[v]);
            let lhs = target.compose(f.phi(tx, ty), target.ten_m(f.mor(u), f.mor(v)));
            let rhs = target.compose(f.mor(source.ten_m(u, v)), f.phi(sx, sy));
            if lhs != rhs {
                report.push("naturality-phi", format!("tensor constraint not natural at ({u},{v})"));
            }
        }
    }
    // associativity coherence
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = target.compose_chain(&[
                    f.mor(source.assoc_at(x, y, z)),
                    f.phi(source.ten_o(x, y), z),
                    target.ten_m(f.phi(x, y), target.id_m(f.obj(z))),
                ]);
                let rhs = target.compose_chain(&[
                    f.phi(x, source.ten_o(y, z)),
                    target.ten_m(target.id_m(f.obj(x)), f.phi(y, z)),
                    target.assoc_at(f.obj(x), f.obj(y), f.obj(z)),
                ]);
                if lhs != rhs {
                    report.push("functor-assoc", format!("associativity square fails at ({x},{y},{z})"));
                }
            }
        }
    }
    // unit coherence
    for x in 0..n {
        let fx = f.obj(x);
        let left = target.compose_chain(&[
            f.mor(source.lunit[x]),
            f.phi(source.unit, x),
            target.ten_m(f.phi0(), target.id_m(fx)),
        ]);
        if left != target.lunit[fx] {
            report.push("functor-lunit", format!("left unit square fails at {x}"));
        }
        let right = target.compose_chain(&[
            f.mor(source.runit[x]),
            f.phi(x, source.unit),
            target.ten_m(target.id_m(fx), f.phi0()),
        ]);
        if right != target.runit[fx] {
            report.push("functor-runit", format!("right unit square fails at {x}"));
        }
    }
    report
}

/// Validates a braided monoidal functor: the monoidal functor axioms plus
/// compatibility with the braidings.
pub fn validate_braided_functor(
    source: &BraidedMonoidalCategory,
    target: &BraidedMonoidalCategory,
    f: &MonoidalFunctor,
) -> ValidationReport {
    let mut report = validate_monoidal_functor(&source.mon, &target.mon, f);
    report.context = "braided monoidal functor".to_string();
    if !report.is_clean() {
        return report;
    }
    let n = source.mon.objects();
    for x in 0..n {
        for y in 0..n {
            let lhs = target.mon.compose(f.mor(source.braid(x, y)), f.phi(x, y));
            let rhs = target
                .mon
                .compose(f.phi(y, x), target.braid(f.obj(x), f.obj(y)));
            if lhs != rhs {
                report.push("functor-braiding", format!("braiding square fails at ({x},{y})"));
            }
        }
    }
    report
}

/// A strict diagram of braided monoidal categories indexed by a finite
/// category: an arrow `a: j -> i` acts by a transfer functor
/// `fibers[i] -> fibers[j]`, contravariantly, with `(ab)* = b*∘a*` holding
/// as literal table equality.
#[derive(Debug, Clone)]
pub struct BraidedDiagram {
    pub index: FiniteCategory,
    pub fibers: Vec<Arc<BraidedMonoidalCategory>>,
    /// Per index morphism `a`: the transfer `fibers[tgt(a)] -> fibers[src(a)]`.
    pub transfers: Vec<Arc<MonoidalFunctor>>,
}

/// The monoidal counterpart of [`BraidedDiagram`].
#[derive(Debug, Clone)]
pub struct MonoidalDiagram {
    pub index: FiniteCategory,
    pub fibers: Vec<Arc<MonoidalCategory>>,
    pub transfers: Vec<Arc<MonoidalFunctor>>,
}

impl BraidedDiagram {
    /// Forget the braidings, keeping the same index and transfers.
    pub fn as_monoidal(&self) -> MonoidalDiagram {
        MonoidalDiagram {
            index: self.index.clone(),
            fibers: self.fibers.iter().map(|b| Arc::new(b.mon.clone())).collect(),
            transfers: self.transfers.clone(),
        }
    }
}

/// Strictness checks (identities and composites hold as literal table
/// equality); only sound once every transfer validated cleanly.
fn check_diagram_strictness(
    report: &mut ValidationReport,
    index: &FiniteCategory,
    mons: &[&MonoidalCategory],
    transfers: &[Arc<MonoidalFunctor>],
) {
    for x in 0..index.object_count {
        let t = &transfers[index.identity[x]];
        if **t != MonoidalFunctor::identity(mons[x]) {
            report.push(
                "strictness",
                format!("transfer of identity at object {x} is not the strict identity"),
            );
        }
    }
    for a in 0..index.mor_count() {
        for b in 0..index.mor_count() {
            let Some(ab) = index.compose_opt(a, b) else { continue };
            // a: j -> i, b: k -> j, ab: k -> i, so (ab)* = b* ∘ a*
            let i = index.tgt[a];
            let k = index.src[b];
            let composite = MonoidalFunctor::compose(&transfers[a], &transfers[b], mons[i], mons[k]);
            if *transfers[ab] != composite {
                report.push(
                    "strictness",
                    format!("(a∘b)* != b*∘a* for index morphisms a={a}, b={b}"),
                );
            }
        }
    }
}

pub fn validate_braided_diagram(d: &BraidedDiagram) -> ValidationReport {
    let mut report = validate_category(&d.index);
    report.context = "braided diagram".to_string();
    if !report.is_clean() {
        return report;
    }
    if d.fibers.len() != d.index.object_count || d.transfers.len() != d.index.mor_count() {
        report.push("structural", "fiber/transfer tables do not match the index".to_string());
        return report;
    }
    for (i, f) in d.fibers.iter().enumerate() {
        let r = validate_braided(f);
        if !r.is_clean() {
            report.push("fiber", format!("fiber {i} invalid: {} violations", r.violations.len()));
        }
    }
    for a in 0..d.index.mor_count() {
        let (j, i) = (d.index.src[a], d.index.tgt[a]);
        let r = validate_braided_functor(&d.fibers[i], &d.fibers[j], &d.transfers[a]);
        if !r.is_clean() {
            report.push(
                "transfer",
                format!("transfer of index morphism {a} invalid: {} violations", r.violations.len()),
            );
        }
    }
    if report.is_clean() {
        let mons: Vec<&MonoidalCategory> = d.fibers.iter().map(|b| &b.mon).collect();
        check_diagram_strictness(&mut report, &d.index, &mons, &d.transfers);
    }
    report
}

pub fn validate_monoidal_diagram(d: &MonoidalDiagram) -> ValidationReport {
    let mut report = validate_category(&d.index);
    report.context = "monoidal diagram".to_string();
    if !report.is_clean() {
        return report;
    }
    if d.fibers.len() != d.index.object_count || d.transfers.len() != d.index.mor_count() {
        report.push("structural", "fiber/transfer tables do not match the index".to_string());
        return report;
    }
    for (i, f) in d.fibers.iter().enumerate() {
        let r = validate_monoidal(f);
        if !r.is_clean() {
            report.push("fiber", format!("fiber {i} invalid: {} violations", r.violations.len()));
        }
    }
    for a in 0..d.index.mor_count() {
        let (j, i) = (d.index.src[a], d.index.tgt[a]);
        let r = validate_monoidal_functor(&d.fibers[i], &d.fibers[j], &d.transfers[a]);
        if !r.is_clean() {
            report.push(
                "transfer",
                format!("transfer of index morphism {a} invalid: {} violations", r.violations.len()),
            );
        }
    }
    if report.is_clean() {
        let mons: Vec<&MonoidalCategory> = d.fibers.iter().map(|m| m.as_ref()).collect();
        check_diagram_strictness(&mut report, &d.index, &mons, &d.transfers);
    }
    report
}
