#![allow(dead_code)]

use qwhittaker::{Filling, GTPattern, Partition, Pop, QPoly, SymPoly};

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn digits(n: usize, rows: &[&str]) -> Filling {
    Filling::new(
        n,
        rows.iter()
            .map(|r| {
                r.chars()
                    .map(|c| c.to_digit(10).unwrap() as usize)
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

pub fn sample_pattern() -> GTPattern {
    GTPattern::new(
        4,
        vec![vec![4], vec![7, 2], vec![8, 5, 2], vec![10, 6, 4, 0]],
    )
    .unwrap()
}

pub fn sample_pop() -> Pop {
    Pop::new(
        sample_pattern(),
        [
            ((1, 1), vec![2, 1, 0]),
            ((1, 2), vec![2]),
            ((1, 3), vec![1, 1]),
            ((2, 2), vec![0, 0, 0]),
            ((2, 3), vec![1]),
            ((3, 3), vec![2, 2]),
        ],
    )
    .unwrap()
}

pub fn sample_filling() -> Filling {
    digits(4, &["1121212443", "223334", "3344"])
}

pub fn sample_tableau() -> Filling {
    digits(4, &["2111321442", "332243", "4433"])
}

pub fn small_filling() -> Filling {
    digits(4, &["2112", "43"])
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (perm, even) in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut next = perm.clone();
            next.insert(pos, n - 1);
            let moved = perm.len() - pos;
            out.push((next, even == (moved % 2 == 0)));
        }
    }
    out
}

/// `det(x_i^{a_j})` expanded by permutations.
pub fn alternant(exponents: &[usize]) -> SymPoly {
    let n = exponents.len();
    let mut out = SymPoly::zero(n);
    for (perm, even) in permutations(n) {
        let mut e = vec![0; n];
        for (i, &j) in perm.iter().enumerate() {
            e[i] = exponents[j];
        }
        let sign = if even { 1 } else { -1 };
        out.add_term(e, &QPoly::from_coeffs([sign])).unwrap();
    }
    out
}

/// `s * a_delta == a_{lambda + delta}`, the bialternant identity cleared of
/// its denominator.
pub fn bialternant_holds(lambda: &Partition, n: usize, s: &SymPoly) -> bool {
    let delta: Vec<usize> = (0..n).rev().collect();
    let shifted: Vec<usize> = (0..n).map(|j| lambda.part(j) + n - 1 - j).collect();
    s.mul(&alternant(&delta)).unwrap() == alternant(&shifted)
}
