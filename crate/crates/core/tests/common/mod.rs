//! Brute-force oracles for the defining equations, shared by the oracle and
//! acceptance suites. These deliberately avoid the closed-form coefficient
//! tables: everything is recovered by solving exact linear systems built
//! from the definitions.

#![allow(dead_code)]

use trivec::exterior::{contract, solve_square, tuples, wedge, Trivector, Vector};
use trivec::invariants::TwoFormValuedMap;
use trivec::scalar::Rational;
use trivec::symplectic::{omega, omega_cubed, omega_gram};

/// Solves `Ω(J(v_i, v_j), v_k) = θ(v_i, v_j, v_k)` for every sorted pair
/// `(i, j)`: six unknowns `μ^a_{ij}` from six equations each.
pub fn j_tensor_oracle(theta: &Trivector) -> TwoFormValuedMap {
    let gram = omega_gram();
    // row k, column a: coefficient of μ^a in Ω(Σ μ^a v_a, v_k)
    let system: Vec<Vec<Rational>> = (1..=6u8)
        .map(|k| (1..=6u8).map(|a| gram.get(a, k).clone()).collect())
        .collect();
    let mut j = TwoFormValuedMap::zero();
    for pair in tuples(2).iter() {
        let idx = pair.indices();
        let (i, jj) = (idx[0], idx[1]);
        let rhs: Vec<Rational> = (1..=6u8).map(|k| theta.coeff_signed(i, jj, k)).collect();
        let mu = solve_square(&system, &rhs).expect("omega is non-degenerate");
        for (a, value) in mu.into_iter().enumerate() {
            j.set_mu(a as u8 + 1, i, jj, value);
        }
    }
    j
}

/// Solves `i_v(Ω∧Ω∧Ω) = θ∧Ω` for the six components of `v`.
pub fn v_vector_oracle(theta: &Trivector) -> Vector {
    // column h of the system: the 5-form i_{v_h}(Ω³) over the grade-5 slots
    let columns: Vec<Vec<Rational>> = (1..=6u8)
        .map(|h| {
            let contracted = contract(&Vector::basis(h), omega_cubed()).expect("grade 6");
            tuples(5).iter().map(|t| contracted.coeff(*t).clone()).collect()
        })
        .collect();
    let system: Vec<Vec<Rational>> = (0..6)
        .map(|row| (0..6).map(|col| columns[col][row].clone()).collect())
        .collect();
    let rhs_form = wedge(theta.as_multivector(), omega()).expect("grade 5");
    let rhs: Vec<Rational> = tuples(5).iter().map(|t| rhs_form.coeff(*t).clone()).collect();
    let solution = solve_square(&system, &rhs).expect("contraction of the top form is invertible");
    let mut v = Vector::zero();
    for (k, value) in solution.into_iter().enumerate() {
        v.set_component(k as u8 + 1, value);
    }
    v
}
