//! Randomized generators of small valid bisimplicial sets, for property
//! suites over the diagonal-to-total-complex comparison.
//!
//! Validity is guaranteed by construction: samples are drawn from constant
//! bisimplicial sets, vertically/horizontally constant ones, external
//! products of nerves of small categories, and random sub-bisimplicial
//! closures of such products. Since degeneracies are split injections,
//! bidegree cardinalities can only grow with degree; smallness is enforced
//! as a bound on the number of *nondegenerate* bisimplices per bidegree.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bisimplicial::{assemble_bisimplicial, external_product, BisimplicialSet};
use crate::corpus::{cyclic_group_category, discrete_category};
use crate::fincat::{nerve, ordinal, FiniteCategory};

/// Constant bisimplicial set on a finite set: all operators are identities.
pub fn constant_bisimplicial(size: usize, bound: usize) -> BisimplicialSet {
    let items: Vec<Vec<Vec<usize>>> = vec![vec![(0..size).collect(); bound + 1]; bound + 1];
    let (s, _) = assemble_bisimplicial(
        bound,
        items,
        |_, _, &x| format!("pt{x}"),
        |_, _, _, &x| x,
        |_, _, _, &x| x,
        |_, _, _, &x| x,
        |_, _, _, &x| x,
    );
    s
}

/// The sub-bisimplicial set generated by `generators`, closed under all four
/// operator families within the bound, rebuilt with reindexed tables.
pub fn sub_bisimplicial_closure(
    s: &BisimplicialSet,
    generators: &[(usize, usize, usize)],
) -> BisimplicialSet {
    let bound = s.bound;
    let mut keep: Vec<Vec<Vec<bool>>> = (0..=bound)
        .map(|p| (0..=bound).map(|q| vec![false; s.card(p, q)]).collect())
        .collect();
    let mut stack: Vec<(usize, usize, usize)> = generators.to_vec();
    while let Some((p, q, x)) = stack.pop() {
        if keep[p][q][x] {
            continue;
        }
        keep[p][q][x] = true;
        if p >= 1 {
            for i in 0..=p {
                stack.push((p - 1, q, s.h_face(p, q, i, x)));
            }
        }
        if p < bound {
            for i in 0..=p {
                stack.push((p + 1, q, s.h_degen(p, q, i, x)));
            }
        }
        if q >= 1 {
            for j in 0..=q {
                stack.push((p, q - 1, s.v_face(p, q, j, x)));
            }
        }
        if q < bound {
            for j in 0..=q {
                stack.push((p, q + 1, s.v_degen(p, q, j, x)));
            }
        }
    }
    let items: Vec<Vec<Vec<usize>>> = (0..=bound)
        .map(|p| {
            (0..=bound)
                .map(|q| (0..s.card(p, q)).filter(|&x| keep[p][q][x]).collect())
                .collect()
        })
        .collect();
    let (out, _) = assemble_bisimplicial(
        bound,
        items,
        |p, q, &x| s.labels[p][q][x].clone(),
        |p, q, i, &x| s.h_face(p, q, i, x),
        |p, q, i, &x| s.h_degen(p, q, i, x),
        |p, q, j, &x| s.v_face(p, q, j, x),
        |p, q, j, &x| s.v_degen(p, q, j, x),
    );
    out
}

/// Number of bisimplices at `(p,q)` that are neither horizontal nor vertical
/// degeneracy images.
pub fn nondegenerate_count(s: &BisimplicialSet, p: usize, q: usize) -> usize {
    let mut degenerate = vec![false; s.card(p, q)];
    if p >= 1 {
        for i in 0..p {
            for x in 0..s.card(p - 1, q) {
                degenerate[s.h_degen(p - 1, q, i, x)] = true;
            }
        }
    }
    if q >= 1 {
        for j in 0..q {
            for x in 0..s.card(p, q - 1) {
                degenerate[s.v_degen(p, q - 1, j, x)] = true;
            }
        }
    }
    degenerate.iter().filter(|&&d| !d).count()
}

fn category_pool(pick: usize) -> FiniteCategory {
    match pick % 6 {
        0 => ordinal(0),
        1 => ordinal(1),
        2 => ordinal(2),
        3 => cyclic_group_category(2),
        4 => discrete_category(2),
        _ => cyclic_group_category(3),
    }
}

/// Draws a random valid bisimplicial set with at most `max_nondeg`
/// nondegenerate bisimplices per bidegree (guaranteed by rejection, with a
/// constant-family fallback).
pub fn random_bisimplicial(seed: u64, bound: usize, max_nondeg: usize) -> BisimplicialSet {
    let mut rng = StdRng::seed_from_u64(seed);
    for _attempt in 0..32 {
        let s = match rng.gen_range(0..4) {
            0 => constant_bisimplicial(rng.gen_range(1..=max_nondeg.min(3)), bound),
            1 => {
                // vertically constant on a small nerve
                let c = category_pool(rng.gen_range(0..6));
                external_product(&nerve(&c, bound), &nerve(&ordinal(0), bound))
            }
            2 => {
                // horizontally constant
                let c = category_pool(rng.gen_range(0..6));
                external_product(&nerve(&ordinal(0), bound), &nerve(&c, bound))
            }
            _ => {
                let a = category_pool(rng.gen_range(0..6));
                let b = category_pool(rng.gen_range(0..6));
                let ambient = external_product(&nerve(&a, bound), &nerve(&b, bound));
                let mut gens = Vec::new();
                for _ in 0..rng.gen_range(1..=2) {
                    let p = rng.gen_range(0..=bound);
                    let q = rng.gen_range(0..=bound);
                    let x = rng.gen_range(0..ambient.card(p, q));
                    gens.push((p, q, x));
                }
                sub_bisimplicial_closure(&ambient, &gens)
            }
        };
        let small = (0..=bound)
            .all(|p| (0..=bound).all(|q| nondegenerate_count(&s, p, q) <= max_nondeg));
        if small {
            return s;
        }
    }
    constant_bisimplicial(1, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisimplicial::check_bisimplicial;

    #[test]
    fn samples_are_valid_and_small() {
        for seed in 0..25 {
            let s = random_bisimplicial(seed, 3, 3);
            let rep = check_bisimplicial(&s);
            assert!(rep.is_clean(), "seed {seed}: {}", rep.to_text());
            for p in 0..=3 {
                for q in 0..=3 {
                    assert!(nondegenerate_count(&s, p, q) <= 3, "seed {seed} at ({p},{q})");
                }
            }
        }
    }

    #[test]
    fn closure_is_closed_and_valid() {
        let ambient = external_product(
            &nerve(&cyclic_group_category(2), 3),
            &nerve(&ordinal(1), 3),
        );
        let s = sub_bisimplicial_closure(&ambient, &[(1, 1, 0)]);
        assert!(check_bisimplicial(&s).is_clean());
        assert!(s.card(1, 1) >= 1);
    }
}
