//! The two generating invariants `I₁` and `I₂`.
//!
//! For a trivector `θ` the tensor `J^θ ∈ Λ²V*⊗V` is pinned down by
//! `θ(x,y,z) = Ω(J^θ(x,y), z)`, and the vector `v_θ` by
//! `i_{v_θ}(Ω∧Ω∧Ω) = θ∧Ω`. Both have closed-form coefficient tables that the
//! tests check against brute-force linear-system solutions of the defining
//! equations. The endomorphism `L_θ = i_{v_θ}J^θ` has characteristic
//! polynomial `x⁶ + c₄x⁴ + c₂x²` with `c₂ = c₄²/4`, and `I₁ = −18·c₄`.
//!
//! `I₂` scales the top form built from the alternating composition
//! `J^θ ⊼ J^θ` against `Ω∧Ω∧Ω`. Each invariant is computed by independent
//! routes (structural, permutation sum, explicit term list) that the
//! verification sweeps compare for exact equality.

pub mod poly;
mod symbolic;

use std::sync::OnceLock;

use crate::exterior::{self, tuples, IndexTuple, Matrix6, Multivector, Trivector, Vector};
use crate::scalar::{rat, ratio, Rational};
use crate::symplectic::{omega_cubed, omega_gram};

pub use poly::{MultiPoly, PolynomialTermList, TermListError};
pub use symbolic::{i1_polynomial, i2_polynomial};

/// The coefficients `μ^a_{bc}` of `J^θ = Σ_{b<c} μ^a_{bc} v^b∧v^c ⊗ v_a`,
/// with antisymmetric access in the lower pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoFormValuedMap {
    // 6 upper slots × 15 sorted pairs
    mu: Vec<Rational>,
}

const PAIRS: usize = 15;

impl TwoFormValuedMap {
    pub fn zero() -> Self {
        TwoFormValuedMap { mu: vec![Rational::zero(); 6 * PAIRS] }
    }

    fn pair_position(b: u8, c: u8) -> usize {
        IndexTuple::from_sorted(&[b, c]).expect("sorted pair").position()
    }

    /// `μ^a_{bc}` for a sorted pair `b < c`.
    pub fn mu_sorted(&self, a: u8, b: u8, c: u8) -> &Rational {
        debug_assert!(b < c);
        &self.mu[(usize::from(a) - 1) * PAIRS + Self::pair_position(b, c)]
    }

    /// `μ^a_{ij}` for arbitrary order: antisymmetric, zero on `i = j`.
    pub fn mu(&self, a: u8, i: u8, j: u8) -> Rational {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Less => self.mu_sorted(a, i, j).clone(),
            Ordering::Equal => Rational::zero(),
            Ordering::Greater => -self.mu_sorted(a, j, i),
        }
    }

    pub fn set_mu(&mut self, a: u8, b: u8, c: u8, value: Rational) {
        debug_assert!(b < c);
        self.mu[(usize::from(a) - 1) * PAIRS + Self::pair_position(b, c)] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.mu.iter().all(Rational::is_zero)
    }

    /// `J(x, y)` by bilinear expansion.
    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero();
        for a in 1..=6u8 {
            let mut acc = Rational::zero();
            for (pair, _) in tuples(2).iter().enumerate() {
                let idx = tuples(2)[pair].indices();
                let (b, c) = (idx[0], idx[1]);
                let m = &self.mu[(usize::from(a) - 1) * PAIRS + pair];
                if m.is_zero() {
                    continue;
                }
                // v^b∧v^c evaluated on (x, y)
                let det = x.component(b) * y.component(c) - x.component(c) * y.component(b);
                acc += m * &det;
            }
            out.set_component(a, acc);
        }
        out
    }
}

/// Closed-form coefficients of `J^θ`: `μ^h_{ij} = λ_{ij,h+3}` and
/// `μ^{h+3}_{ij} = −λ_{ij,h}` for `h = 1..3`.
pub fn j_tensor(theta: &Trivector) -> TwoFormValuedMap {
    let mut j = TwoFormValuedMap::zero();
    for pair in tuples(2).iter() {
        let idx = pair.indices();
        let (b, c) = (idx[0], idx[1]);
        for h in 1..=3u8 {
            j.set_mu(h, b, c, theta.coeff_signed(b, c, h + 3));
            j.set_mu(h + 3, b, c, -theta.coeff_signed(b, c, h));
        }
    }
    j
}

/// Closed-form components of the vector `v_θ` defined by
/// `i_{v_θ}(Ω∧Ω∧Ω) = θ∧Ω`.
pub fn v_vector(theta: &Trivector) -> Vector {
    let lam = |i: u8, j: u8, k: u8| theta.coeff_signed(i, j, k);
    let sixth = ratio(1, 6);
    let mut v = Vector::zero();
    v.set_component(1, -&sixth * (lam(2, 4, 5) + lam(3, 4, 6)));
    v.set_component(2, &sixth * (lam(1, 4, 5) - lam(3, 5, 6)));
    v.set_component(3, &sixth * (lam(1, 4, 6) + lam(2, 5, 6)));
    v.set_component(4, -&sixth * (lam(1, 2, 5) + lam(1, 3, 6)));
    v.set_component(5, -&sixth * (lam(2, 3, 6) - lam(1, 2, 4)));
    v.set_component(6, &sixth * (lam(1, 3, 4) + lam(2, 3, 5)));
    v
}

/// The matrix of `L_θ = i_{v_θ}J^θ` in the basis `(v_i)`, column `i` holding
/// the image of `v_i`: entry `(a, i)` is `Σ_b μ^a_{bi} x^b`.
pub fn l_endo(theta: &Trivector) -> Matrix6 {
    let j = j_tensor(theta);
    let x = v_vector(theta);
    Matrix6::from_fn(|a, i| {
        let mut acc = Rational::zero();
        for b in 1..=6u8 {
            let xb = x.component(b);
            if xb.is_zero() {
                continue;
            }
            acc += j.mu(a, b, i) * xb;
        }
        acc
    })
}

/// Monic characteristic polynomial `det(xI − M) = x⁶ + c₅x⁵ + … + c₀`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPoly {
    coeffs: [Rational; 7],
}

impl CharPoly {
    /// Coefficient of `x^k`, `k = 0..=6`; `c₆` is always one.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational; 7] {
        &self.coeffs
    }

    /// Whether the polynomial has the shape `x⁶ + c₄x⁴ + c₂x²` with
    /// `c₂ = c₄²/4`, as every `L_θ` must.
    pub fn has_invariant_shape(&self) -> bool {
        self.coeffs[5].is_zero()
            && self.coeffs[3].is_zero()
            && self.coeffs[1].is_zero()
            && self.coeffs[0].is_zero()
            && self.coeffs[2] == &(&self.coeffs[4] * &self.coeffs[4]) * &ratio(1, 4)
    }
}

/// Exact characteristic polynomial by the Faddeev–LeVerrier recurrence.
pub fn char_poly(m: &Matrix6) -> CharPoly {
    let n = 6;
    let mut coeffs = std::array::from_fn(|_| Rational::zero());
    coeffs[n] = Rational::one();
    let mut b = Matrix6::identity();
    for k in 1..=n {
        let ak = m.mul(&b);
        let mut trace = Rational::zero();
        for i in 1..=n as u8 {
            trace += ak.get(i, i).clone();
        }
        let ck = -(trace / rat(k as i64));
        if k < n {
            b = ak.add(&Matrix6::identity().scale(&ck));
        } else {
            // the recurrence terminates; c₀ alone remains
            b = ak;
        }
        coeffs[n - k] = ck;
    }
    let _ = b;
    CharPoly { coeffs }
}

/// `I₁` through the structural route: `−18·c₄` of `det(xI − L_θ)`. The
/// characteristic-polynomial shape is asserted; a failure would indicate an
/// implementation bug, not bad input.
pub fn i1_structural(theta: &Trivector) -> Rational {
    let cp = char_poly(&l_endo(theta));
    assert!(
        cp.has_invariant_shape(),
        "characteristic polynomial of L_theta lost its x^6 + c4 x^4 + c2 x^2 shape: {cp:?}"
    );
    rat(-18) * cp.coeff(4)
}

/// `I₁` by direct evaluation of the explicit term list.
pub fn i1_appendix(theta: &Trivector) -> Rational {
    i1_term_list().eval(theta)
}

/// The coefficients `ξ^l_{ijk}` of `J^θ ⊼ J^θ`, antisymmetric in the lower
/// triple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarWedgeTensor {
    // 6 upper slots × 20 sorted triples
    xi: Vec<Rational>,
}

impl BarWedgeTensor {
    pub fn zero() -> Self {
        BarWedgeTensor { xi: vec![Rational::zero(); 6 * 20] }
    }

    /// `ξ^l_{ijk}` for a sorted triple.
    pub fn xi_sorted(&self, l: u8, triple: IndexTuple) -> &Rational {
        &self.xi[(usize::from(l) - 1) * 20 + triple.position()]
    }

    /// `ξ^l_{ijk}` for arbitrary index order (antisymmetric, zero on repeats).
    pub fn xi(&self, l: u8, i: u8, j: u8, k: u8) -> Rational {
        match IndexTuple::resolve(&[i, j, k]) {
            None => Rational::zero(),
            Some((t, 1)) => self.xi_sorted(l, t).clone(),
            Some((t, _)) => -self.xi_sorted(l, t),
        }
    }

    fn set_xi(&mut self, l: u8, triple: IndexTuple, value: Rational) {
        self.xi[(usize::from(l) - 1) * 20 + triple.position()] = value;
    }
}

/// `J ⊼ J` on coefficients:
/// `ξ^l_{ijk} = Σ_h (μ^h_{ij}μ^l_{hk} + μ^h_{jk}μ^l_{hi} + μ^h_{ki}μ^l_{hj})`.
pub fn barwedge(j: &TwoFormValuedMap) -> BarWedgeTensor {
    let mut out = BarWedgeTensor::zero();
    for triple in tuples(3).iter() {
        let idx = triple.indices();
        let (i, jj, k) = (idx[0], idx[1], idx[2]);
        for l in 1..=6u8 {
            let mut acc = Rational::zero();
            for h in 1..=6u8 {
                acc += j.mu(h, i, jj) * j.mu(l, h, k);
                acc += j.mu(h, jj, k) * j.mu(l, h, i);
                acc += j.mu(h, k, i) * j.mu(l, h, jj);
            }
            out.set_xi(l, *triple, acc);
        }
    }
    out
}

fn permutations6() -> &'static Vec<[u8; 6]> {
    static PERMS: OnceLock<Vec<[u8; 6]>> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut all = Vec::with_capacity(720);
        let mut current = [1u8, 2, 3, 4, 5, 6];
        fn heap(k: usize, arr: &mut [u8; 6], out: &mut Vec<[u8; 6]>) {
            if k == 1 {
                out.push(*arr);
                return;
            }
            for i in 0..k {
                heap(k - 1, arr, out);
                if k % 2 == 0 {
                    arr.swap(i, k - 1);
                } else {
                    arr.swap(0, k - 1);
                }
            }
        }
        heap(6, &mut current, &mut all);
        assert_eq!(all.len(), 720);
        all
    })
}

fn permutation_sign(perm: &[u8; 6]) -> i8 {
    let mut sign = 1i8;
    for i in 0..6 {
        for j in i + 1..6 {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `I₂` through the structural route: the top form
/// `Ω^θ = alt[Ω̃ ∘ (J⊼J ⊗ J⊼J)]`, expanded as
/// `Σ ξ^l_{ijk} ξ^d_{abc} (v^i∧v^j∧v^k∧v^a∧v^b∧v^c) Ω(v_l, v_d)` over ordered
/// index triples, divided by the computed top coefficient of `Ω∧Ω∧Ω`.
pub fn i2_structural(theta: &Trivector) -> Rational {
    let xi = barwedge(&j_tensor(theta));
    let gram = omega_gram();
    let mut top = Multivector::zero(6);
    for perm in permutations6().iter() {
        let (i, j, k) = (perm[0], perm[1], perm[2]);
        let (a, b, c) = (perm[3], perm[4], perm[5]);
        let mut factor = Rational::zero();
        for l in 1..=6u8 {
            let xi_left = xi.xi(l, i, j, k);
            if xi_left.is_zero() {
                continue;
            }
            for d in 1..=6u8 {
                let pairing = gram.get(l, d);
                if pairing.is_zero() {
                    continue;
                }
                factor += &xi_left * &xi.xi(d, a, b, c) * pairing;
            }
        }
        if factor.is_zero() {
            continue;
        }
        let left = Multivector::basis_signed(&[i, j, k]);
        let right = Multivector::basis_signed(&[a, b, c]);
        let sixform = exterior::wedge(&left, &right).expect("grade 6").scale(&factor);
        top = &top + &sixform;
    }
    let full = IndexTuple::from_sorted(&[1, 2, 3, 4, 5, 6]).expect("top tuple");
    let denominator = omega_cubed().coeff(full);
    top.coeff(full).try_div(denominator).expect("omega cubed has nonzero top coefficient")
}

/// `I₂` through the permutation-sum route:
/// `−(1/3) Σ_{σ∈S₆} ε_σ (ξ¹_{σ₁σ₂σ₃}ξ⁴_{σ₄σ₅σ₆} + ξ²ξ⁵ + ξ³ξ⁶)`.
pub fn i2_permutation(theta: &Trivector) -> Rational {
    let xi = barwedge(&j_tensor(theta));
    let mut acc = Rational::zero();
    for perm in permutations6().iter() {
        let sign = permutation_sign(perm);
        let (i, j, k) = (perm[0], perm[1], perm[2]);
        let (a, b, c) = (perm[3], perm[4], perm[5]);
        let mut inner = Rational::zero();
        for h in 1..=3u8 {
            inner += xi.xi(h, i, j, k) * xi.xi(h + 3, a, b, c);
        }
        if sign > 0 {
            acc += inner;
        } else {
            acc -= inner;
        }
    }
    -(acc / rat(3))
}

/// `I₂` by direct evaluation of the explicit term list (24·prefactor form).
pub fn i2_appendix(theta: &Trivector) -> Rational {
    i2_term_list().eval(theta)
}

/// The action of an invertible `A` on a `Λ²V*⊗V`-valued tensor:
/// `(A·η)(x, y) = A[η(A⁻¹x, A⁻¹y)]`.
pub fn act_on_two_form_valued(
    a: &Matrix6,
    j: &TwoFormValuedMap,
) -> Result<TwoFormValuedMap, exterior::ExteriorError> {
    let b = a.inverse().map_err(|_| exterior::ExteriorError::SingularMatrix)?;
    let mut out = TwoFormValuedMap::zero();
    for pair in tuples(2).iter() {
        let idx = pair.indices();
        let (i, jj) = (idx[0], idx[1]);
        // η(A⁻¹v_i, A⁻¹v_j) expanded over source pairs
        let mut image = Vector::zero();
        for source in tuples(2).iter() {
            let s = source.indices();
            let (m, n) = (s[0], s[1]);
            let det = b.get(m, i) * b.get(n, jj) - b.get(m, jj) * b.get(n, i);
            if det.is_zero() {
                continue;
            }
            for upper in 1..=6u8 {
                let mu = j.mu_sorted(upper, m, n);
                if mu.is_zero() {
                    continue;
                }
                let contribution = mu * &det;
                let updated = image.component(upper) + &contribution;
                image.set_component(upper, updated);
            }
        }
        let pushed = a * &image;
        for upper in 1..=6u8 {
            out.set_mu(upper, i, jj, pushed.component(upper).clone());
        }
    }
    Ok(out)
}

/// The explicit `I₁` term list (prefactor one).
pub fn i1_term_list() -> &'static PolynomialTermList {
    static LIST: OnceLock<PolynomialTermList> = OnceLock::new();
    LIST.get_or_init(|| {
        PolynomialTermList::parse(include_str!("invariants/data/i1_terms.txt"))
            .expect("bundled i1 term list is well-formed")
    })
}

/// The explicit `I₂` term list (prefactor 24).
pub fn i2_term_list() -> &'static PolynomialTermList {
    static LIST: OnceLock<PolynomialTermList> = OnceLock::new();
    LIST.get_or_init(|| {
        PolynomialTermList::parse(include_str!("invariants/data/i2_terms.txt"))
            .expect("bundled i2 term list is well-formed")
    })
}

/// The corrections sidecar: every monomial of the printed source lists whose
/// transcription disagreed with the derived polynomials, with both readings.
pub fn corrections_sidecar() -> &'static str {
    include_str!("invariants/data/corrections.txt")
}

/// One mismatch between a term list and a reference polynomial.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AuditDiscrepancy {
    /// Monomial as four sorted triple codes.
    pub monomial: [u16; 4],
    /// Integer coefficient in the term list (prefactor units), if present.
    pub listed: Option<i64>,
    /// Exact coefficient of the reference polynomial divided by the
    /// prefactor, as text.
    pub derived: String,
}

/// Result of checking a term list against a reference polynomial.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AuditReport {
    pub matching_terms: usize,
    pub discrepancies: Vec<AuditDiscrepancy>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares a term list against a reference polynomial monomial by monomial.
pub fn audit_term_list(list: &PolynomialTermList, reference: &MultiPoly) -> AuditReport {
    let as_poly = list.to_poly();
    let mut matching = 0usize;
    let mut discrepancies = Vec::new();
    let mut seen: std::collections::BTreeSet<poly::Monomial> = Default::default();
    for (mono, ref_coeff) in reference.terms() {
        seen.insert(mono.clone());
        let listed_coeff = as_poly.coeff(mono);
        if &listed_coeff == ref_coeff {
            matching += 1;
            continue;
        }
        let mut codes = [0u16; 4];
        for (slot, &v) in codes.iter_mut().zip(mono.vars()) {
            *slot = poly::variable_code(v as usize);
        }
        let listed = listed_coeff
            .try_div(&list.prefactor)
            .ok()
            .and_then(|c| c.to_i64())
            .filter(|_| !listed_coeff.is_zero());
        let derived = ref_coeff
            .try_div(&list.prefactor)
            .map(|c| c.to_string())
            .unwrap_or_else(|_| ref_coeff.to_string());
        discrepancies.push(AuditDiscrepancy { monomial: codes, listed, derived });
    }
    for (mono, coeff) in as_poly.terms() {
        if seen.contains(mono) {
            continue;
        }
        let mut codes = [0u16; 4];
        for (slot, &v) in codes.iter_mut().zip(mono.vars()) {
            *slot = poly::variable_code(v as usize);
        }
        let listed = coeff.try_div(&list.prefactor).ok().and_then(|c| c.to_i64());
        discrepancies.push(AuditDiscrepancy { monomial: codes, listed, derived: "0".into() });
    }
    discrepancies.sort_by_key(|d| d.monomial);
    AuditReport { matching_terms: matching, discrepancies }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::symplectic::random_symplectic;

    fn theta_from(terms: &[(i64, [u8; 3])]) -> Trivector {
        let owned: Vec<(Rational, [u8; 3])> =
            terms.iter().map(|(c, t)| (rat(*c), *t)).collect();
        Trivector::from_terms(&owned)
    }

    fn seeded_theta(seed: i64) -> Trivector {
        let coords = (0..20)
            .map(|k| ratio((seed * 23 + 5 * k as i64) % 19 - 9, 1 + (seed + k as i64).rem_euclid(4)))
            .collect();
        Trivector::from_coordinates(coords).unwrap()
    }

    #[test]
    fn j_tensor_closed_form_examples() {
        let theta = theta_from(&[(1, [1, 2, 4])]);
        let j = j_tensor(&theta);
        assert_eq!(j.mu_sorted(1, 1, 2), &rat(1)); // μ¹₁₂ = λ₁₂₄
        assert_eq!(j.mu(1, 2, 1), rat(-1));
        // the only other nonzero slots are the signed reindexings of λ₁₂₄
        assert_eq!(j.mu_sorted(4, 2, 4), &rat(-1)); // μ⁴₂₄ = −λ₂₄₁ = −λ₁₂₄
        assert_eq!(j.mu_sorted(5, 1, 4), &rat(1)); // μ⁵₁₄ = −λ₁₄₂ = +λ₁₂₄
        let mut nonzero = 0;
        for a in 1..=6u8 {
            for pair in tuples(2).iter() {
                let idx = pair.indices();
                if !j.mu_sorted(a, idx[0], idx[1]).is_zero() {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 3);
        assert!(j_tensor(&Trivector::zero()).is_zero());
    }

    #[test]
    fn j_tensor_defining_identity_on_basis_triples() {
        // Ω(J(v_i, v_j), v_k) = θ(v_i, v_j, v_k) for all basis triples
        let theta = seeded_theta(3);
        let j = j_tensor(&theta);
        let gram = omega_gram();
        for i in 1..=6u8 {
            for jj in 1..=6u8 {
                for k in 1..=6u8 {
                    let mut lhs = Rational::zero();
                    for a in 1..=6u8 {
                        lhs += j.mu(a, i, jj) * gram.get(a, k);
                    }
                    assert_eq!(lhs, theta.coeff_signed(i, jj, k), "triple ({i},{jj},{k})");
                }
            }
        }
    }

    #[test]
    fn v_vector_closed_form_examples() {
        let theta = theta_from(&[(1, [2, 4, 5])]);
        let v = v_vector(&theta);
        assert_eq!(v.component(1), &ratio(-1, 6));
        for i in 2..=6u8 {
            assert!(v.component(i).is_zero());
        }
        assert!(v_vector(&Trivector::zero()).is_zero());
    }

    #[test]
    fn v_vector_satisfies_defining_equation() {
        for seed in 0..6 {
            let theta = seeded_theta(seed);
            let v = v_vector(&theta);
            let lhs = exterior::contract(&v, omega_cubed()).unwrap();
            let rhs = exterior::wedge(theta.as_multivector(), crate::symplectic::omega()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn l_endo_matches_contraction_oracle() {
        for seed in 0..5 {
            let theta = seeded_theta(seed);
            let j = j_tensor(&theta);
            let v = v_vector(&theta);
            let l = l_endo(&theta);
            for i in 1..=6u8 {
                let image = j.apply(&v, &Vector::basis(i));
                for a in 1..=6u8 {
                    assert_eq!(l.get(a, i), image.component(a), "L(v_{i}) component {a}");
                }
            }
        }
        assert!(l_endo(&Trivector::zero()).is_zero());
    }

    #[test]
    fn char_poly_examples() {
        let cp = char_poly(&Matrix6::zero());
        assert_eq!(cp.coeffs()[..6], std::array::from_fn::<Rational, 6, _>(|_| rat(0)));

        // (x − 1)⁶ = x⁶ − 6x⁵ + 15x⁴ − 20x³ + 15x² − 6x + 1
        let cp = char_poly(&Matrix6::identity());
        let expected = [rat(1), rat(-6), rat(15), rat(-20), rat(15), rat(-6), rat(1)];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(cp.coeff(6 - k), e, "coefficient of x^{}", 6 - k);
        }
    }

    #[test]
    fn char_poly_of_d2_at_18() {
        let theta = catalog::build_named("D2", &[("lambda", rat(18))]).unwrap();
        let cp = char_poly(&l_endo(&theta));
        assert_eq!(cp.coeff(4), &rat(-1));
        assert_eq!(cp.coeff(2), &ratio(1, 4));
        for k in [0, 1, 3, 5] {
            assert!(cp.coeff(k).is_zero());
        }
        assert!(cp.has_invariant_shape());
    }

    #[test]
    fn i1_examples() {
        assert_eq!(i1_structural(&Trivector::zero()), rat(0));
        let d2 = catalog::build_named("D2", &[("lambda", rat(1))]).unwrap();
        assert_eq!(i1_structural(&d2), rat(1));
        let c6 = catalog::build_named("C6", &[("lambda", rat(1)), ("epsilon", rat(1))]).unwrap();
        assert_eq!(i1_structural(&c6), rat(2));
    }

    #[test]
    fn i1_appendix_single_monomial_survives() {
        assert_eq!(i1_appendix(&Trivector::zero()), rat(0));
        let theta = theta_from(&[(1, [1, 3, 5]), (1, [2, 3, 4]), (1, [2, 5, 6])]);
        assert_eq!(i1_appendix(&theta), rat(1));
    }

    #[test]
    fn barwedge_matches_direct_cyclic_evaluation() {
        let theta = seeded_theta(7);
        let j = j_tensor(&theta);
        let xi = barwedge(&j);
        assert!(barwedge(&j_tensor(&Trivector::zero()))
            .xi
            .iter()
            .all(Rational::is_zero));
        for triple in tuples(3).iter() {
            let idx = triple.indices();
            let (vi, vj, vk) =
                (Vector::basis(idx[0]), Vector::basis(idx[1]), Vector::basis(idx[2]));
            let direct = {
                let first = j.apply(&j.apply(&vi, &vj), &vk);
                let second = j.apply(&j.apply(&vj, &vk), &vi);
                let third = j.apply(&j.apply(&vk, &vi), &vj);
                let mut sum = Vector::zero();
                for a in 1..=6u8 {
                    sum.set_component(
                        a,
                        first.component(a) + second.component(a) + third.component(a),
                    );
                }
                sum
            };
            for l in 1..=6u8 {
                assert_eq!(&xi.xi(l, idx[0], idx[1], idx[2]), direct.component(l));
            }
        }
        // antisymmetry under an odd swap
        assert_eq!(xi.xi(1, 2, 1, 3), -xi.xi(1, 1, 2, 3));
    }

    #[test]
    fn i2_examples() {
        assert_eq!(i2_structural(&Trivector::zero()), rat(0));
        assert_eq!(i2_permutation(&Trivector::zero()), rat(0));
        assert_eq!(i2_appendix(&Trivector::zero()), rat(0));

        let p3 = catalog::build_named("P3", &[("q", rat(1))]).unwrap();
        assert_eq!(i2_structural(&p3), rat(-72));

        let p6 = catalog::build_named("P6", &[("q", rat(1)), ("p", rat(1))]).unwrap();
        assert_eq!(i2_structural(&p6), rat(-264));

        let e2 = catalog::build_named("E2", &[("a", rat(1)), ("b", rat(1)), ("k", rat(1))]).unwrap();
        assert_eq!(i2_permutation(&e2), rat(240));

        let c1 = catalog::build_named("C1", &[("lambda", rat(1))]).unwrap();
        assert_eq!(i2_appendix(&c1), rat(-72));
    }

    #[test]
    fn routes_agree_on_seeded_trivectors() {
        for seed in 0..6 {
            let theta = seeded_theta(seed);
            let structural = i2_structural(&theta);
            assert_eq!(structural, i2_permutation(&theta), "seed {seed}");
            assert_eq!(structural, i2_appendix(&theta), "seed {seed}");
            assert_eq!(i1_structural(&theta), i1_appendix(&theta), "seed {seed}");
        }
    }

    #[test]
    fn invariants_are_degree_four_homogeneous() {
        let theta = seeded_theta(9);
        let t = ratio(-3, 2);
        let scaled = theta.scale(&t);
        let t4 = t.pow(4);
        assert_eq!(i1_structural(&scaled), t4.clone() * i1_structural(&theta));
        assert_eq!(i2_structural(&scaled), t4 * i2_structural(&theta));
    }

    #[test]
    fn invariance_under_symplectic_action() {
        for seed in 0..4u64 {
            let theta = seeded_theta(seed as i64 + 2);
            let a = random_symplectic(seed, 5);
            let moved = a.act(&theta);
            assert_eq!(i1_structural(&moved), i1_structural(&theta));
            assert_eq!(i2_structural(&moved), i2_structural(&theta));
        }
    }

    #[test]
    fn equivariance_of_j_v_and_l() {
        for seed in 0..4u64 {
            let theta = seeded_theta(seed as i64 + 30);
            let a = random_symplectic(seed + 100, 4);

            let j_moved = j_tensor(&a.act(&theta));
            let j_pushed = act_on_two_form_valued(a.matrix(), &j_tensor(&theta)).unwrap();
            assert_eq!(j_moved, j_pushed);

            let v_moved = v_vector(&a.act(&theta));
            let v_pushed = a.matrix() * &v_vector(&theta);
            assert_eq!(v_moved, v_pushed);

            let l_moved = l_endo(&a.act(&theta));
            let l_conj = a
                .matrix()
                .mul(&l_endo(&theta))
                .mul(&a.matrix().inverse().unwrap());
            assert_eq!(l_moved, l_conj);
        }
    }

    #[test]
    fn symbolic_polynomials_match_numeric_routes() {
        for seed in 0..4 {
            let theta = seeded_theta(seed + 50);
            let point = theta.coordinates();
            assert_eq!(i1_polynomial().eval(&point), i1_structural(&theta));
            assert_eq!(i2_polynomial().eval(&point), i2_structural(&theta));
        }
    }

    #[test]
    fn bundled_term_lists_match_derived_polynomials() {
        let i1_report = audit_term_list(i1_term_list(), i1_polynomial());
        assert!(i1_report.is_clean(), "i1 discrepancies: {:?}", i1_report.discrepancies);
        let i2_report = audit_term_list(i2_term_list(), i2_polynomial());
        assert!(i2_report.is_clean(), "i2 discrepancies: {:?}", i2_report.discrepancies);
    }
}
