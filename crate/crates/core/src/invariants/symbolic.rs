//! Symbolic derivation of `I₁` and `I₂` as explicit polynomials in the 20
//! coordinates.
//!
//! This mirrors the numeric routes with polynomial-valued scalars: `μ` and
//! `v_θ` from their closed forms, `I₁` from the `x⁴`-coefficient of the
//! characteristic polynomial (the sum of principal 2×2 minors of `L_θ`),
//! `I₂` from the permutation sum over `S₆`. The resulting term lists are the
//! reference against which the bundled data files are audited.

use std::sync::OnceLock;

use super::poly::MultiPoly;
use crate::exterior::IndexTuple;
use crate::scalar::{rat, ratio};

/// `λ_{ijk}` as a signed variable (or zero on repeated indices).
fn lambda(i: u8, j: u8, k: u8) -> MultiPoly {
    match IndexTuple::resolve(&[i, j, k]) {
        None => MultiPoly::zero(),
        Some((t, sign)) => {
            let var = MultiPoly::variable(t.position() as u8);
            if sign > 0 {
                var
            } else {
                var.neg()
            }
        }
    }
}

/// `μ^a_{ij}` symbolically: `μ^h = λ_{ij,h+3}`, `μ^{h+3} = −λ_{ij,h}`.
fn mu(a: u8, i: u8, j: u8) -> MultiPoly {
    if a <= 3 {
        lambda(i, j, a + 3)
    } else {
        lambda(i, j, a - 3).neg()
    }
}

/// Components of `v_θ` symbolically.
fn v_component(h: u8) -> MultiPoly {
    let sixth = ratio(1, 6);
    let combo = match h {
        1 => lambda(2, 4, 5).add(&lambda(3, 4, 6)).neg(),
        2 => lambda(1, 4, 5).sub(&lambda(3, 5, 6)),
        3 => lambda(1, 4, 6).add(&lambda(2, 5, 6)),
        4 => lambda(1, 2, 5).add(&lambda(1, 3, 6)).neg(),
        5 => lambda(2, 3, 6).sub(&lambda(1, 2, 4)).neg(),
        6 => lambda(1, 3, 4).add(&lambda(2, 3, 5)),
        _ => unreachable!("component index out of range"),
    };
    combo.scale(&sixth)
}

/// Entry `(a, i)` of the matrix of `L_θ`: `Σ_b μ^a_{bi} x^b`.
fn l_entry(a: u8, i: u8) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for b in 1..=6u8 {
        acc = acc.add(&mu(a, b, i).mul(&v_component(b)));
    }
    acc
}

/// `I₁` as a polynomial: `−18` times the sum of principal 2×2 minors of
/// `L_θ` (the `x⁴` coefficient of the characteristic polynomial).
pub fn i1_polynomial() -> &'static MultiPoly {
    static POLY: OnceLock<MultiPoly> = OnceLock::new();
    POLY.get_or_init(|| {
        let entries: Vec<Vec<MultiPoly>> = (1..=6u8)
            .map(|a| (1..=6u8).map(|i| l_entry(a, i)).collect())
            .collect();
        let mut c4 = MultiPoly::zero();
        for i in 0..6 {
            for j in i + 1..6 {
                let diag = entries[i][i].mul(&entries[j][j]);
                let off = entries[i][j].mul(&entries[j][i]);
                c4 = c4.add(&diag.sub(&off));
            }
        }
        c4.scale(&rat(-18))
    })
}

/// `ξ^l` on sorted triples, antisymmetric access for arbitrary order.
fn xi(l: u8, i: u8, j: u8, k: u8, table: &[Vec<MultiPoly>]) -> MultiPoly {
    match IndexTuple::resolve(&[i, j, k]) {
        None => MultiPoly::zero(),
        Some((t, sign)) => {
            let p = &table[usize::from(l) - 1][t.position()];
            if sign > 0 {
                p.clone()
            } else {
                p.neg()
            }
        }
    }
}

fn xi_table() -> Vec<Vec<MultiPoly>> {
    let triples: Vec<[u8; 3]> = crate::exterior::tuples(3)
        .iter()
        .map(|t| [t.indices()[0], t.indices()[1], t.indices()[2]])
        .collect();
    (1..=6u8)
        .map(|l| {
            triples
                .iter()
                .map(|&[i, j, k]| {
                    let mut acc = MultiPoly::zero();
                    for h in 1..=6u8 {
                        acc = acc.add(&mu(h, i, j).mul(&mu(l, h, k)));
                        acc = acc.add(&mu(h, j, k).mul(&mu(l, h, i)));
                        acc = acc.add(&mu(h, k, i).mul(&mu(l, h, j)));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `I₂` as a polynomial, via the permutation sum
/// `−(1/3) Σ_{σ∈S₆} ε_σ (ξ¹ξ⁴ + ξ²ξ⁵ + ξ³ξ⁶)`.
pub fn i2_polynomial() -> &'static MultiPoly {
    static POLY: OnceLock<MultiPoly> = OnceLock::new();
    POLY.get_or_init(|| {
        let table = xi_table();
        let mut acc = MultiPoly::zero();
        let mut perm = [1u8, 2, 3, 4, 5, 6];
        loop {
            let sign = {
                let mut s = 1i64;
                for i in 0..6 {
                    for j in i + 1..6 {
                        if perm[i] > perm[j] {
                            s = -s;
                        }
                    }
                }
                s
            };
            for h in 1..=3u8 {
                let left = xi(h, perm[0], perm[1], perm[2], &table);
                if left.is_zero() {
                    continue;
                }
                let right = xi(h + 3, perm[3], perm[4], perm[5], &table);
                acc = acc.add(&left.mul(&right).scale(&rat(sign)));
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        acc.scale(&ratio(-1, 3))
    })
}

/// Advances to the next lexicographic permutation; false after the last one.
fn next_permutation(arr: &mut [u8; 6]) -> bool {
    let n = arr.len();
    let Some(pivot) = (0..n - 1).rev().find(|&i| arr[i] < arr[i + 1]) else {
        return false;
    };
    let successor = (pivot + 1..n).rev().find(|&j| arr[j] > arr[pivot]).expect("successor exists");
    arr.swap(pivot, successor);
    arr[pivot + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::poly::{variable_from_code, Monomial};

    #[test]
    fn next_permutation_walks_all_of_s6() {
        let mut perm = [1u8, 2, 3, 4, 5, 6];
        let mut count = 1;
        while next_permutation(&mut perm) {
            count += 1;
        }
        assert_eq!(count, 720);
        assert_eq!(perm, [6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn i1_polynomial_is_degree_four_with_integer_coefficients() {
        let p = i1_polynomial();
        assert!(!p.is_zero());
        for (mono, coeff) in p.terms() {
            assert_eq!(mono.degree(), 4);
            assert!(coeff.is_integer(), "non-integer coefficient {coeff}");
        }
    }

    #[test]
    fn i2_polynomial_coefficients_are_multiples_of_24() {
        let p = i2_polynomial();
        assert!(!p.is_zero());
        for (mono, coeff) in p.terms() {
            assert_eq!(mono.degree(), 4);
            let scaled = coeff.try_div(&rat(24)).unwrap();
            assert!(scaled.is_integer(), "coefficient {coeff} is not 24·integer");
        }
    }

    #[test]
    fn leading_appendix_monomials_appear() {
        // I₁ contains +1·y₁₃₅y₂₃₄y₂₅₆² and I₂/24 contains −3·y₁₂₃²y₄₅₆².
        let i1 = i1_polynomial();
        let m = Monomial::from_vars(vec![
            variable_from_code(135).unwrap() as u8,
            variable_from_code(234).unwrap() as u8,
            variable_from_code(256).unwrap() as u8,
            variable_from_code(256).unwrap() as u8,
        ]);
        assert_eq!(i1.coeff(&m), rat(1));

        let i2 = i2_polynomial();
        let m = Monomial::from_vars(vec![
            variable_from_code(123).unwrap() as u8,
            variable_from_code(123).unwrap() as u8,
            variable_from_code(456).unwrap() as u8,
            variable_from_code(456).unwrap() as u8,
        ]);
        assert_eq!(i2.coeff(&m), rat(-72));
    }
}
