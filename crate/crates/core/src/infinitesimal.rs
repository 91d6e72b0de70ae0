//! Derivations induced on the coordinate polynomials by the Lie algebra, and
//! the infinitesimal invariance machinery built on them.
//!
//! An algebra element `U` acts on `F[y_abc]` as the linear vector field
//! `U* = Σ_{h<i<j} (Σ_{a<b<c} U^{abc}_{hij} y_abc) ∂/∂y_{hij}`, with the
//! coefficients given by three 3×3 determinants mixing entries of `U` with
//! Kronecker deltas. Invariance of a polynomial under the group shows up as
//! `U*(I) = 0` for all `U`; the module checks that exactly, computes the
//! generic rank of the span of the 21 induced fields, and evaluates the
//! algebraic-independence determinant of the two invariants at its reference
//! point.

use serde::Serialize;

use crate::exterior::{self, tuples, Trivector, TRIVECTOR_SLOTS};
use crate::invariants::poly::{variable_from_code, MultiPoly};
use crate::invariants::{i1_term_list, i2_term_list, PolynomialTermList};
use crate::parallel;
use crate::scalar::{rat, Rational};
use crate::symplectic::{sp_reconstruct, SpAlgebraElement, SP_COORDINATES};

/// A derivation whose coefficients are linear in the coordinates: a 20×20
/// rational matrix `C`, encoding
/// `Σ_{hij} (Σ_{abc} C[(hij),(abc)] y_abc) ∂/∂y_{hij}` over the frozen
/// lexicographic triple order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearVectorField {
    coeffs: Vec<Rational>, // row = target slot (hij), col = source slot (abc)
}

impl LinearVectorField {
    pub fn zero() -> Self {
        LinearVectorField { coeffs: vec![Rational::zero(); TRIVECTOR_SLOTS * TRIVECTOR_SLOTS] }
    }

    pub fn get(&self, target: usize, source: usize) -> &Rational {
        &self.coeffs[target * TRIVECTOR_SLOTS + source]
    }

    pub fn set(&mut self, target: usize, source: usize, value: Rational) {
        self.coeffs[target * TRIVECTOR_SLOTS + source] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &LinearVectorField) -> LinearVectorField {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        LinearVectorField { coeffs }
    }

    pub fn scale(&self, factor: &Rational) -> LinearVectorField {
        LinearVectorField { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    /// The coefficient vector of the field at a point: `C · λ(θ)`.
    pub fn coefficients_at(&self, theta: &Trivector) -> Vec<Rational> {
        let lambda = theta.coordinates();
        (0..TRIVECTOR_SLOTS)
            .map(|target| {
                let mut acc = Rational::zero();
                for (source, coord) in lambda.iter().enumerate() {
                    if coord.is_zero() {
                        continue;
                    }
                    acc += self.get(target, source) * coord;
                }
                acc
            })
            .collect()
    }

    /// Applies the derivation to a polynomial:
    /// `Σ_{hij} (Σ_{abc} C[(hij),(abc)] y_abc) ∂P/∂y_{hij}`.
    pub fn apply_to_poly(&self, poly: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for target in 0..TRIVECTOR_SLOTS {
            let partial = poly.derivative(target as u8);
            if partial.is_zero() {
                continue;
            }
            let mut linear = MultiPoly::zero();
            for source in 0..TRIVECTOR_SLOTS {
                let c = self.get(target, source);
                if !c.is_zero() {
                    linear = linear.add(&MultiPoly::variable(source as u8).scale(c));
                }
            }
            out = out.add(&linear.mul(&partial));
        }
        out
    }

    /// The Lie bracket of two linear fields, again linear.
    pub fn bracket(&self, other: &LinearVectorField) -> LinearVectorField {
        // [X, X'] on coordinates has matrix C'·C − C·C'
        let mut out = LinearVectorField::zero();
        for t in 0..TRIVECTOR_SLOTS {
            for s in 0..TRIVECTOR_SLOTS {
                let mut acc = Rational::zero();
                for m in 0..TRIVECTOR_SLOTS {
                    acc += other.get(t, m) * self.get(m, s);
                    acc -= self.get(t, m) * other.get(m, s);
                }
                out.set(t, s, acc);
            }
        }
        out
    }
}

fn det3(m: [[Rational; 3]; 3]) -> Rational {
    let [[a, b, c], [d, e, f], [g, h, i]] = m;
    &a * &(&e * &i - &f * &h) - &b * &(&d * &i - &f * &g) + &c * &(&d * &h - &e * &g)
}

/// The derivation `U*` induced by an algebra element, via the
/// three-determinant coefficient formula. Membership of `U` is guaranteed by
/// the argument type.
pub fn ustar(u: &SpAlgebraElement) -> LinearVectorField {
    let m = u.matrix();
    let entry = |r: u8, c: u8| m.get(r, c).clone();
    let delta = |r: u8, c: u8| if r == c { Rational::one() } else { Rational::zero() };
    let mut field = LinearVectorField::zero();
    for (target_pos, target) in tuples(3).iter().enumerate() {
        let t = target.indices();
        let (h, i, j) = (t[0], t[1], t[2]);
        for (source_pos, source) in tuples(3).iter().enumerate() {
            let s = source.indices();
            let (a, b, c) = (s[0], s[1], s[2]);
            let first = det3([
                [entry(h, a), delta(h, b), delta(h, c)],
                [entry(i, a), delta(i, b), delta(i, c)],
                [entry(j, a), delta(j, b), delta(j, c)],
            ]);
            let second = det3([
                [delta(h, a), entry(h, b), delta(h, c)],
                [delta(i, a), entry(i, b), delta(i, c)],
                [delta(j, a), entry(j, b), delta(j, c)],
            ]);
            let third = det3([
                [delta(h, a), delta(h, b), entry(h, c)],
                [delta(i, a), delta(i, b), entry(i, c)],
                [delta(j, a), delta(j, b), entry(j, c)],
            ]);
            field.set(target_pos, source_pos, -(first + second + third));
        }
    }
    field
}

/// The 21 fields `Z_{rs} = (U_{rs})*`, where `U_{rs}` is the algebra element
/// whose coordinate `u_{rs}` is one and whose other coordinates vanish.
/// Labels follow [`SP_COORDINATES`].
pub fn z_fields() -> Vec<((u8, u8), LinearVectorField)> {
    SP_COORDINATES
        .iter()
        .enumerate()
        .map(|(k, &label)| {
            let mut coords: [Rational; 21] = std::array::from_fn(|_| Rational::zero());
            coords[k] = Rational::one();
            (label, ustar(&sp_reconstruct(&coords)))
        })
        .collect()
}

/// The exact gradient of a term-list polynomial at a point: the 20 partials
/// `∂I/∂y_abc`, multiplicity-aware.
pub fn grad(list: &PolynomialTermList, point: &Trivector) -> [Rational; 20] {
    poly_gradient(&list.to_poly(), point)
}

/// Gradient of an arbitrary polynomial in the 20 coordinates.
pub fn poly_gradient(poly: &MultiPoly, point: &Trivector) -> [Rational; 20] {
    let coords = point.coordinates();
    std::array::from_fn(|v| poly.derivative(v as u8).eval(&coords))
}

/// One nonzero pairing found by [`infinitesimal_check`].
#[derive(Clone, Debug, Serialize)]
pub struct InfinitesimalFailure {
    /// Coordinate label `(r, s)` of the offending field `Z_rs`.
    pub field: (u8, u8),
    pub point_index: usize,
    pub value: Rational,
}

/// Report of pairing `⟨grad I, Z·λ⟩` over all 21 fields and sample points.
#[derive(Clone, Debug, Serialize)]
pub struct InfinitesimalReport {
    pub points: usize,
    pub failures: Vec<InfinitesimalFailure>,
}

impl InfinitesimalReport {
    pub fn all_zero(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `U*(I) = 0` pointwise: for each of the 21 basis fields `Z` and each
/// sample point `θ`, the pairing `⟨grad(I, θ), Z·λ(θ)⟩` must vanish exactly.
pub fn infinitesimal_check(poly: &MultiPoly, points: &[Trivector]) -> InfinitesimalReport {
    let fields = z_fields();
    let partials: Vec<MultiPoly> = (0..TRIVECTOR_SLOTS).map(|v| poly.derivative(v as u8)).collect();
    let per_point = parallel::map_batch(points, |theta| {
        let coords = theta.coordinates();
        let gradient: Vec<Rational> = partials.iter().map(|p| p.eval(&coords)).collect();
        let mut nonzero = Vec::new();
        for (label, field) in &fields {
            let vector = field.coefficients_at(theta);
            let mut pairing = Rational::zero();
            for (g, w) in gradient.iter().zip(&vector) {
                pairing += g * w;
            }
            if !pairing.is_zero() {
                nonzero.push((*label, pairing));
            }
        }
        nonzero
    });
    let mut failures = Vec::new();
    for (point_index, items) in per_point.into_iter().enumerate() {
        for (field, value) in items {
            failures.push(InfinitesimalFailure { field, point_index, value });
        }
    }
    InfinitesimalReport { points: points.len(), failures }
}

/// Wrapper for term-list polynomials.
pub fn infinitesimal_check_term_list(
    list: &PolynomialTermList,
    points: &[Trivector],
) -> InfinitesimalReport {
    infinitesimal_check(&list.to_poly(), points)
}

/// Per-point exact ranks of the 21×20 matrix whose rows are the field
/// coefficient vectors.
#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub ranks: Vec<usize>,
    pub max_rank: usize,
}

/// Exact rank of the field span at one point.
pub fn rank_at(theta: &Trivector) -> usize {
    let rows: Vec<Vec<Rational>> =
        z_fields().iter().map(|(_, field)| field.coefficients_at(theta)).collect();
    exterior::matrix::rank(&rows)
}

/// The generic rank, certified operationally: the maximum exact rank of the
/// field matrix over the sample points.
pub fn generic_rank(points: &[Trivector]) -> usize {
    rank_profile(points).max_rank
}

/// Rank at every sample point, plus the maximum.
pub fn rank_profile(points: &[Trivector]) -> RankReport {
    assert!(!points.is_empty(), "at least one sample point is required");
    let ranks = parallel::map_batch(points, rank_at);
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    RankReport { ranks, max_rank }
}

/// The reference point for the algebraic-independence determinant:
/// `λ₁₂₃ = λ₁₂₅ = λ₁₃₄ = λ₄₅₆ = 1`, all other coordinates zero.
pub fn independence_point() -> Trivector {
    Trivector::from_terms(&[
        (rat(1), [1, 2, 3]),
        (rat(1), [1, 2, 5]),
        (rat(1), [1, 3, 4]),
        (rat(1), [4, 5, 6]),
    ])
}

/// The determinant
/// `| dI₁(Y₁₂₃) dI₁(Y₁₂₆) ; dI₂(Y₁₂₃) dI₂(Y₁₂₆) |` of the two invariants at
/// [`independence_point`]; evaluates to `2⁴·3² = 144`.
pub fn independence_fixture() -> Rational {
    independence_determinant(&independence_point())
}

/// The same determinant at an arbitrary point.
pub fn independence_determinant(point: &Trivector) -> Rational {
    let g1 = grad(i1_term_list(), point);
    let g2 = grad(i2_term_list(), point);
    let y123 = variable_from_code(123).expect("sorted triple");
    let y126 = variable_from_code(126).expect("sorted triple");
    &g1[y123] * &g2[y126] - &g1[y126] * &g2[y123]
}
