//! Closed-form coefficient tables against their defining-equation oracles.

mod common;

use common::{j_tensor_oracle, v_vector_oracle};
use trivec::exterior::{contract, solve_square, wedge, Trivector, Vector};
use trivec::invariants::{j_tensor, v_vector};
use trivec::scalar::{rat, Rational};
use trivec::symplectic::{omega, omega_cubed, omega_gram};
use trivec::verify::seeded_trivectors;

#[test]
fn closed_form_j_matches_linear_solve_oracle() {
    for theta in seeded_trivectors(61, 25) {
        assert_eq!(j_tensor(&theta), j_tensor_oracle(&theta));
    }
}

#[test]
fn closed_form_v_matches_defining_equation_oracle() {
    for theta in seeded_trivectors(62, 25) {
        let closed = v_vector(&theta);
        assert_eq!(closed, v_vector_oracle(&theta));
        // and the defining equation itself holds
        let lhs = contract(&closed, omega_cubed()).unwrap();
        let rhs = wedge(theta.as_multivector(), omega()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn single_coefficient_trivectors_probe_every_slot() {
    // one coordinate at a time: the oracle and the table must agree slot by slot
    for slot in 0..20 {
        let mut coords = vec![Rational::zero(); 20];
        coords[slot] = rat(1);
        let theta = Trivector::from_coordinates(coords).unwrap();
        assert_eq!(j_tensor(&theta), j_tensor_oracle(&theta), "slot {slot}");
        assert_eq!(v_vector(&theta), v_vector_oracle(&theta), "slot {slot}");
    }
}

#[test]
fn gram_system_solution_has_zero_residual() {
    // solve the Gram system of Ω against a fixed right side and substitute back
    let gram = omega_gram();
    let system: Vec<Vec<Rational>> = (1..=6u8)
        .map(|i| (1..=6u8).map(|j| gram.get(i, j).clone()).collect())
        .collect();
    let rhs: Vec<Rational> = (1..=6)
        .map(|k| Rational::new(9 - k, k).unwrap())
        .collect();
    let x = solve_square(&system, &rhs).unwrap();
    let mut vector = Vector::zero();
    for (k, value) in x.iter().enumerate() {
        vector.set_component(k as u8 + 1, value.clone());
    }
    for (i, want) in rhs.iter().enumerate() {
        let mut acc = Rational::zero();
        for j in 1..=6u8 {
            acc += gram.get(i as u8 + 1, j) * vector.component(j);
        }
        assert_eq!(&acc, want);
    }
}
