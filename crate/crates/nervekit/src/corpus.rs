//! Ready-made finite (braided) monoidal categories, functors, and diagrams
//! used across the test suite, the acceptance gate, and the shipped sample
//! inputs.

use std::sync::Arc;

use crate::fincat::{ordinal, FiniteCategory, Functor};
use crate::monoidal::{
    BraidedDiagram, BraidedMonoidalCategory, MonoidalCategory, MonoidalDiagram, MonoidalFunctor,
};

/// One-object category from a finite monoid table (`table[a][b] = a∘b`, unit
/// at index 0).
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

/// The group Z/k as a one-object category.
pub fn cyclic_group_category(k: usize) -> FiniteCategory {
    let table: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
    monoid_category(&table)
}

/// The discrete category on `k` objects (identities only).
pub fn discrete_category(k: usize) -> FiniteCategory {
    FiniteCategory::new(
        k,
        (0..k).collect(),
        (0..k).collect(),
        (0..k).collect(),
        &(0..k).map(|i| (i, i, i)).collect::<Vec<_>>(),
    )
}

/// The discrete braided monoidal category on the group Z/k: objects are group
/// elements, only identity morphisms, tensor is addition, all constraints are
/// identities.
pub fn disc_cyclic(k: usize) -> BraidedMonoidalCategory {
    let cat = discrete_category(k);
    let ten = |x: usize, y: usize| (x + y) % k;
    let tensor_obj: Vec<Vec<usize>> = (0..k).map(|x| (0..k).map(|y| ten(x, y)).collect()).collect();
    let tensor_mor = tensor_obj.clone();
    let mut assoc = Vec::with_capacity(k * k * k);
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                assoc.push(ten(ten(x, y), z));
            }
        }
    }
    let mon = MonoidalCategory {
        cat,
        tensor_obj: tensor_obj.clone(),
        tensor_mor,
        unit: 0,
        assoc,
        lunit: (0..k).collect(),
        runit: (0..k).collect(),
    };
    BraidedMonoidalCategory {
        braiding: tensor_obj,
        mon,
    }
}

/// The one-object braided monoidal category with endomorphism group Z/2:
/// strict, tensor on morphisms is addition, trivial braiding.
pub fn one_object_z2() -> BraidedMonoidalCategory {
    let cat = cyclic_group_category(2);
    let mon = MonoidalCategory {
        cat,
        tensor_obj: vec![vec![0]],
        tensor_mor: vec![vec![0, 1], vec![1, 0]],
        unit: 0,
        assoc: vec![0],
        lunit: vec![0],
        runit: vec![0],
    };
    BraidedMonoidalCategory {
        mon,
        braiding: vec![vec![0]],
    }
}

/// Pointed braided category on Z/2 with Hom(x,x) = Z/2 at each object and
/// braiding c_{x,y} = x·y, the nontrivial bilinear form. Morphism ids encode
/// (object, endomorphism) as `2x + e`.
pub fn pointed_z2() -> BraidedMonoidalCategory {
    let mid = |x: usize, e: usize| 2 * x + e;
    let src = vec![0, 0, 1, 1];
    let tgt = src.clone();
    let identity = vec![0, 2];
    let mut entries = Vec::new();
    for x in 0..2 {
        for e in 0..2 {
            for d in 0..2 {
                entries.push((mid(x, e), mid(x, d), mid(x, (e + d) % 2)));
            }
        }
    }
    let cat = FiniteCategory::new(2, src, tgt, identity, &entries);
    let ten = |x: usize, y: usize| (x + y) % 2;
    let tensor_obj: Vec<Vec<usize>> = (0..2).map(|x| (0..2).map(|y| ten(x, y)).collect()).collect();
    let mut tensor_mor = vec![vec![0; 4]; 4];
    for x in 0..2 {
        for e in 0..2 {
            for y in 0..2 {
                for d in 0..2 {
                    tensor_mor[mid(x, e)][mid(y, d)] = mid(ten(x, y), (e + d) % 2);
                }
            }
        }
    }
    let mut assoc = Vec::new();
    for x in 0..2 {
        for y in 0..2 {
            for z in 0..2 {
                assoc.push(mid(ten(ten(x, y), z), 0));
            }
        }
    }
    let mon = MonoidalCategory {
        cat,
        tensor_obj,
        tensor_mor,
        unit: 0,
        assoc,
        lunit: vec![0, 2],
        runit: vec![0, 2],
    };
    let braiding = (0..2)
        .map(|x| (0..2).map(|y| mid(ten(x, y), x * y)).collect())
        .collect();
    BraidedMonoidalCategory { mon, braiding }
}

/// The identity functor on a pointed_z2-style category with the nontrivial
/// tensor constraint `φ_{x,y} = x·y` (a 2-cocycle twist). Unit constraint is
/// the identity.
pub fn pointed_z2_twisted_endofunctor() -> MonoidalFunctor {
    let p = pointed_z2();
    let mid = |x: usize, e: usize| 2 * x + e;
    let mut f = MonoidalFunctor::identity(&p.mon);
    for x in 0..2 {
        for y in 0..2 {
            f.tensor_constraint[x][y] = mid((x + y) % 2, x * y);
        }
    }
    f
}

/// Strict reduction `disc(Z/(k·d)) -> disc(Z/k)`, `x -> x mod k`.
pub fn reduction_functor(from: usize, to: usize) -> MonoidalFunctor {
    assert!(from % to == 0);
    let source = disc_cyclic(from);
    let target = disc_cyclic(to);
    let obj_map: Vec<usize> = (0..from).map(|x| x % to).collect();
    MonoidalFunctor {
        functor: Functor {
            obj_map: obj_map.clone(),
            mor_map: obj_map.clone(),
        },
        tensor_constraint: (0..from)
            .map(|x| (0..from).map(|y| target.mon.id_m((x + y) % to)).collect())
            .collect(),
        unit_constraint: target.mon.id_m(source.mon.unit % to),
    }
}

/// Constant diagram at fiber `b` over an arbitrary index category.
pub fn constant_diagram(index: FiniteCategory, b: &Arc<BraidedMonoidalCategory>) -> BraidedDiagram {
    let id = Arc::new(MonoidalFunctor::identity(&b.mon));
    let transfers = vec![id; index.mor_count()];
    let fibers = vec![b.clone(); index.object_count];
    BraidedDiagram {
        index,
        fibers,
        transfers,
    }
}

/// Diagram over the arrow category `[1]` (one non-identity arrow `1 -> 0`):
/// the fiber at 0 maps into the fiber at 1 by `transfer`.
pub fn arrow_diagram(
    fiber0: Arc<BraidedMonoidalCategory>,
    fiber1: Arc<BraidedMonoidalCategory>,
    transfer: MonoidalFunctor,
) -> BraidedDiagram {
    let index = ordinal(1);
    // morphism ids in ordinal(1): 0 = (0,0), 1 = (0,1) arrow 1 -> 0, 2 = (1,1)
    let transfers = vec![
        Arc::new(MonoidalFunctor::identity(&fiber0.mon)),
        Arc::new(transfer),
        Arc::new(MonoidalFunctor::identity(&fiber1.mon)),
    ];
    BraidedDiagram {
        index,
        fibers: vec![fiber0, fiber1],
        transfers,
    }
}

/// The span index `• <- • -> •`: objects {0, 1, 2}, non-identity arrows
/// `u: 1 -> 0` and `v: 1 -> 2`. Morphism ids: 0,1,2 identities; 3 = u; 4 = v.
pub fn span_index() -> FiniteCategory {
    let src = vec![0, 1, 2, 1, 1];
    let tgt = vec![0, 1, 2, 0, 2];
    let identity = vec![0, 1, 2];
    let mut entries = vec![(0, 0, 0), (1, 1, 1), (2, 2, 2)];
    entries.push((0, 3, 3));
    entries.push((3, 1, 3));
    entries.push((2, 4, 4));
    entries.push((4, 1, 4));
    FiniteCategory::new(3, src, tgt, identity, &entries)
}

/// Diagram over the span index: fibers at the feet map into the middle fiber.
pub fn span_diagram(
    fiber_left: Arc<BraidedMonoidalCategory>,
    fiber_mid: Arc<BraidedMonoidalCategory>,
    fiber_right: Arc<BraidedMonoidalCategory>,
    u_transfer: MonoidalFunctor,
    v_transfer: MonoidalFunctor,
) -> BraidedDiagram {
    let index = span_index();
    let transfers = vec![
        Arc::new(MonoidalFunctor::identity(&fiber_left.mon)),
        Arc::new(MonoidalFunctor::identity(&fiber_mid.mon)),
        Arc::new(MonoidalFunctor::identity(&fiber_right.mon)),
        Arc::new(u_transfer),
        Arc::new(v_transfer),
    ];
    BraidedDiagram {
        index,
        fibers: vec![fiber_left, fiber_mid, fiber_right],
        transfers,
    }
}

/// The four acceptance-corpus braided diagrams: constant over the point,
/// arrow with identity transfer, arrow with mod-2 reduction, and the span
/// with a mod-2 reduction on one leg.
pub fn corpus_braided_diagrams() -> Vec<(String, BraidedDiagram)> {
    let z2 = Arc::new(disc_cyclic(2));
    let z4 = Arc::new(disc_cyclic(4));
    vec![
        (
            "constant-point-discZ2".to_string(),
            constant_diagram(ordinal(0), &z2),
        ),
        (
            "arrow-identity-discZ2".to_string(),
            arrow_diagram(z2.clone(), z2.clone(), MonoidalFunctor::identity(&z2.mon)),
        ),
        (
            "arrow-reduction-discZ4-discZ2".to_string(),
            arrow_diagram(z4.clone(), z2.clone(), reduction_functor(4, 2)),
        ),
        (
            "span-reduction".to_string(),
            span_diagram(
                z4.clone(),
                z2.clone(),
                z2.clone(),
                reduction_functor(4, 2),
                MonoidalFunctor::identity(&z2.mon),
            ),
        ),
    ]
}

/// The monoidal mirrors of the corpus diagrams.
pub fn corpus_monoidal_diagrams() -> Vec<(String, MonoidalDiagram)> {
    corpus_braided_diagrams()
        .into_iter()
        .map(|(name, d)| (name, d.as_monoidal()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::{
        validate_braided, validate_braided_diagram, validate_braided_functor, validate_monoidal_functor,
    };

    #[test]
    fn corpus_categories_are_valid() {
        for (name, cat) in [
            ("disc-z2", disc_cyclic(2)),
            ("disc-z3", disc_cyclic(3)),
            ("disc-z4", disc_cyclic(4)),
            ("one-object-z2", one_object_z2()),
            ("pointed-z2", pointed_z2()),
        ] {
            let rep = validate_braided(&cat);
            assert!(rep.is_clean(), "{name}: {}", rep.to_text());
        }
    }

    #[test]
    fn discrete_braiding_note_is_emitted() {
        let rep = validate_braided(&disc_cyclic(2));
        assert!(rep.notes.iter().any(|n| n.contains("discrete")));
    }

    #[test]
    fn reduction_functor_is_braided() {
        let z4 = disc_cyclic(4);
        let z2 = disc_cyclic(2);
        let f = reduction_functor(4, 2);
        assert!(validate_braided_functor(&z4, &z2, &f).is_clean());
    }

    #[test]
    fn twisted_endofunctor_is_monoidal_but_nontrivial() {
        let p = pointed_z2();
        let f = pointed_z2_twisted_endofunctor();
        let rep = validate_monoidal_functor(&p.mon, &p.mon, &f);
        assert!(rep.is_clean(), "{}", rep.to_text());
        assert_ne!(f, MonoidalFunctor::identity(&p.mon));
        // it is even braided-compatible, since the form x·y is symmetric
        assert!(validate_braided_functor(&p, &p, &f).is_clean());
    }

    #[test]
    fn corpus_diagrams_are_valid() {
        for (name, d) in corpus_braided_diagrams() {
            let rep = validate_braided_diagram(&d);
            assert!(rep.is_clean(), "{name}: {}", rep.to_text());
        }
    }

    #[test]
    fn broken_functor_identity_constraint_is_reported() {
        let z4 = disc_cyclic(4);
        let z2 = disc_cyclic(2);
        let mut f = reduction_functor(4, 2);
        // redirect the unit constraint at a wrong object
        f.unit_constraint = z2.mon.id_m(1);
        let rep = validate_braided_functor(&z4, &z2, &f);
        assert!(rep.violations.iter().any(|v| v.kind == "structural"));
    }
}
