//! Seeded, reproducible verification sweeps.
//!
//! Every sweep draws its inputs from a deterministic stream, then checks
//! exact identities in parallel batches (input order is preserved in the
//! reports). These back the command-line `verify-*` subcommands and the
//! acceptance suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exterior::{pullback, Trivector};
use crate::invariants::{
    act_on_two_form_valued, char_poly, i1_appendix, i1_structural, i2_appendix, i2_permutation,
    i2_structural, j_tensor, l_endo, v_vector,
};
use crate::parallel;
use crate::scalar::Rational;
use crate::symplectic::{omega, random_symplectic, SpGroupElement};

/// A random trivector with coefficients `n/d`, `n ∈ [−9, 9]`, `d ∈ [1, 9]`.
pub fn random_trivector(rng: &mut impl Rng) -> Trivector {
    let coords = (0..20)
        .map(|_| {
            let numer = rng.gen_range(-9i64..=9);
            let denom = rng.gen_range(1i64..=9);
            Rational::new(numer, denom).expect("nonzero denominator")
        })
        .collect();
    Trivector::from_coordinates(coords).expect("20 coordinates")
}

/// A deterministic batch of random trivectors.
pub fn seeded_trivectors(seed: u64, count: usize) -> Vec<Trivector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_trivector(&mut rng)).collect()
}

/// One failed check in a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepFailure {
    pub trial: usize,
    pub check: String,
}

/// Outcome of a sweep: number of trials and any failures, in trial order.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub trials: usize,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn collect(per_trial: Vec<Vec<String>>) -> SweepReport {
        let trials = per_trial.len();
        let failures = per_trial
            .into_iter()
            .enumerate()
            .flat_map(|(trial, checks)| {
                checks.into_iter().map(move |check| SweepFailure { trial, check })
            })
            .collect();
        SweepReport { trials, failures }
    }
}

fn trial_pairs(seed: u64, trials: usize, max_factors: usize) -> Vec<(Trivector, SpGroupElement)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|t| {
            let theta = random_trivector(&mut rng);
            let factors = t % (max_factors + 1);
            let a = random_symplectic(seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(t as u64 + 1)), factors);
            (theta, a)
        })
        .collect()
}

/// Finite invariance: `I_k(A·θ) = I_k(θ)` for seeded `(θ, A)` pairs with `A`
/// a product of at most six shears, plus `pullback(A, Ω) = Ω`.
pub fn verify_invariance(seed: u64, trials: usize) -> SweepReport {
    let pairs = trial_pairs(seed, trials, 6);
    let per_trial = parallel::map_batch(&pairs, |(theta, a)| {
        let mut bad = Vec::new();
        let moved = a.act(theta);
        if i1_structural(&moved) != i1_structural(theta) {
            bad.push("I1(A·theta) != I1(theta)".to_string());
        }
        if i2_structural(&moved) != i2_structural(theta) {
            bad.push("I2(A·theta) != I2(theta)".to_string());
        }
        match pullback(a.matrix(), omega()) {
            Ok(pulled) if &pulled == omega() => {}
            _ => bad.push("pullback(A, omega) != omega".to_string()),
        }
        bad
    });
    SweepReport::collect(per_trial)
}

/// Equivariance of the whole chain on seeded pairs:
/// `J^{A·θ} = A·J^θ`, `v_{A·θ} = A v_θ`, `L_{A·θ} = A L_θ A⁻¹`.
pub fn verify_equivariance(seed: u64, pairs: usize) -> SweepReport {
    let inputs = trial_pairs(seed, pairs, 6);
    let per_trial = parallel::map_batch(&inputs, |(theta, a)| {
        let mut bad = Vec::new();
        let moved = a.act(theta);
        let pushed = act_on_two_form_valued(a.matrix(), &j_tensor(theta))
            .expect("group elements are invertible");
        if j_tensor(&moved) != pushed {
            bad.push("J^(A·theta) != A·J^theta".to_string());
        }
        if v_vector(&moved) != a.matrix() * &v_vector(theta) {
            bad.push("v_(A·theta) != A v_theta".to_string());
        }
        let conjugated = a
            .matrix()
            .mul(&l_endo(theta))
            .mul(&a.matrix().inverse().expect("invertible"));
        if l_endo(&moved) != conjugated {
            bad.push("L_(A·theta) != A L_theta A^-1".to_string());
        }
        bad
    });
    SweepReport::collect(per_trial)
}

/// Route agreement on seeded trivectors: the structural, permutation-sum and
/// term-list routes must coincide exactly, and every characteristic
/// polynomial must have the invariant shape.
pub fn verify_routes(seed: u64, trials: usize) -> SweepReport {
    let thetas = seeded_trivectors(seed, trials);
    let per_trial = parallel::map_batch(&thetas, |theta| {
        let mut bad = Vec::new();
        let cp = char_poly(&l_endo(theta));
        if !cp.has_invariant_shape() {
            bad.push("char poly lost the x^6 + c4 x^4 + c2 x^2 shape".to_string());
        }
        let i1 = i1_structural(theta);
        if i1 != i1_appendix(theta) {
            bad.push("i1 structural != i1 term list".to_string());
        }
        if &i1 != &(Rational::from_int(-18) * cp.coeff(4)) {
            bad.push("i1 != -18·c4".to_string());
        }
        let i2 = i2_structural(theta);
        if i2 != i2_permutation(theta) {
            bad.push("i2 structural != i2 permutation".to_string());
        }
        if i2 != i2_appendix(theta) {
            bad.push("i2 structural != i2 term list".to_string());
        }
        bad
    });
    SweepReport::collect(per_trial)
}
