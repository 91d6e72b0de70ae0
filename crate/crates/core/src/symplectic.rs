//! The standard symplectic structure on the six-dimensional space.
//!
//! Fixes `Ω = Σ_{i=1..3} v^i ∧ v^{i+3}`, exposes the Lie algebra
//! `sp(6)` through membership-checked matrices with a distinguished
//! 21-element basis of square-zero elements, and generates group elements as
//! products of the shears `I + tU`. Group membership (`AᵀMΩA = MΩ`) is
//! verified exactly on construction, never assumed.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exterior::{self, Matrix6, Multivector, Trivector};
use crate::scalar::{ratio, Rational};

/// Errors from symplectic constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    /// Matrix fails `UᵀMΩ + MΩU = 0`.
    #[error("matrix is not in sp(6): U^T M + M U != 0")]
    NotInAlgebra,
    /// Matrix fails `AᵀMΩA = MΩ`.
    #[error("matrix is not in Sp(Ω): A^T M A != M")]
    NotInGroup,
    /// Shear requested for an element with `U² ≠ 0`.
    #[error("shear requires U^2 = 0")]
    NotSquareZero,
}

/// The symplectic form `Ω = v¹∧v⁴ + v²∧v⁵ + v³∧v⁶` as a grade-2 multivector.
pub fn omega() -> &'static Multivector {
    static OMEGA: OnceLock<Multivector> = OnceLock::new();
    OMEGA.get_or_init(|| {
        let mut w = Multivector::zero(2);
        for i in 1..=3u8 {
            w.add_signed(&[i, i + 3], &Rational::one());
        }
        w
    })
}

/// The Gram matrix `(Ω(v_i, v_j))`, antisymmetric and non-degenerate.
pub fn omega_gram() -> &'static Matrix6 {
    static GRAM: OnceLock<Matrix6> = OnceLock::new();
    GRAM.get_or_init(|| Matrix6::from_fn(|i, j| omega().coeff_signed(&[i, j])))
}

/// The top form `Ω ∧ Ω ∧ Ω`, computed through the wedge kernel.
pub fn omega_cubed() -> &'static Multivector {
    static CUBED: OnceLock<Multivector> = OnceLock::new();
    CUBED.get_or_init(|| {
        let squared = exterior::wedge(omega(), omega()).expect("grade 4");
        exterior::wedge(&squared, omega()).expect("grade 6")
    })
}

/// An element of the Lie algebra `sp(6)`, membership-checked.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpAlgebraElement {
    matrix: Matrix6,
}

impl SpAlgebraElement {
    pub fn new(matrix: Matrix6) -> Result<Self, SymplecticError> {
        let gram = omega_gram();
        if matrix.transpose().mul(gram).add(&gram.mul(&matrix)).is_zero() {
            Ok(SpAlgebraElement { matrix })
        } else {
            Err(SymplecticError::NotInAlgebra)
        }
    }

    pub fn matrix(&self) -> &Matrix6 {
        &self.matrix
    }

    pub fn is_square_zero(&self) -> bool {
        self.matrix.mul(&self.matrix).is_zero()
    }

    /// The commutator `[U, U']`, again an algebra element.
    pub fn bracket(&self, other: &SpAlgebraElement) -> SpAlgebraElement {
        let m = self.matrix.mul(&other.matrix).sub(&other.matrix.mul(&self.matrix));
        SpAlgebraElement::new(m).expect("bracket stays in the algebra")
    }

    pub fn add(&self, other: &SpAlgebraElement) -> SpAlgebraElement {
        SpAlgebraElement { matrix: self.matrix.add(&other.matrix) }
    }

    pub fn scale(&self, factor: &Rational) -> SpAlgebraElement {
        SpAlgebraElement { matrix: self.matrix.scale(factor) }
    }
}

/// An element of the symplectic group `Sp(Ω)`, membership-checked.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpGroupElement {
    matrix: Matrix6,
}

impl SpGroupElement {
    pub fn new(matrix: Matrix6) -> Result<Self, SymplecticError> {
        let gram = omega_gram();
        if &matrix.transpose().mul(gram).mul(&matrix) == gram {
            Ok(SpGroupElement { matrix })
        } else {
            Err(SymplecticError::NotInGroup)
        }
    }

    pub fn identity() -> Self {
        SpGroupElement { matrix: Matrix6::identity() }
    }

    pub fn matrix(&self) -> &Matrix6 {
        &self.matrix
    }

    pub fn compose(&self, other: &SpGroupElement) -> SpGroupElement {
        SpGroupElement { matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn inverse(&self) -> SpGroupElement {
        let inv = self.matrix.inverse().expect("group elements are invertible");
        SpGroupElement { matrix: inv }
    }

    /// The tensorial action on a trivector (pullback by this element).
    pub fn act(&self, theta: &Trivector) -> Trivector {
        let pulled = exterior::pullback(&self.matrix, theta.as_multivector())
            .expect("group elements are invertible");
        Trivector::from_multivector(pulled).expect("pullback preserves grade")
    }
}

/// The coordinate slots `(r, s)` used on `sp(6)`, in the fixed order
/// `u₁₁, u₁₂, …, u₆₃`.
pub const SP_COORDINATES: [(u8, u8); 21] = [
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 1), (2, 2), (2, 3), (2, 5), (2, 6),
    (3, 1), (3, 2), (3, 3), (3, 6),
    (4, 1), (4, 2), (4, 3),
    (5, 2), (5, 3),
    (6, 3),
];

/// The 21 square-zero basis elements of `sp(6)`, in the listed order.
pub fn sp_basis() -> &'static [SpAlgebraElement; 21] {
    static BASIS: OnceLock<[SpAlgebraElement; 21]> = OnceLock::new();
    BASIS.get_or_init(|| {
        let e = Matrix6::elementary;
        let combos: [Matrix6; 21] = [
            e(1, 1).add(&e(1, 4)).sub(&e(4, 1)).sub(&e(4, 4)),
            e(4, 1),
            e(5, 2),
            e(1, 4),
            e(2, 2).sub(&e(2, 5)).add(&e(5, 2)).sub(&e(5, 5)),
            e(4, 2).add(&e(5, 1)),
            e(5, 3).add(&e(6, 2)),
            e(2, 5),
            e(3, 3).sub(&e(6, 6)).add(&e(3, 6)).sub(&e(6, 3)),
            e(4, 3).add(&e(6, 1)),
            e(6, 3),
            e(3, 6),
            e(1, 2).sub(&e(5, 4)),
            e(3, 1).sub(&e(4, 6)),
            e(1, 5).add(&e(2, 4)),
            e(2, 6).add(&e(3, 5)),
            e(2, 1).sub(&e(4, 5)),
            e(2, 3).sub(&e(6, 5)),
            e(1, 6).add(&e(3, 4)),
            e(1, 3).sub(&e(6, 4)),
            e(3, 2).sub(&e(5, 6)),
        ];
        combos.map(|m| SpAlgebraElement::new(m).expect("basis element is in sp(6)"))
    })
}

/// Reads the 21 coordinates `(u₁₁, u₁₂, …, u₆₃)` off a membership-checked
/// element.
pub fn sp_coordinates(u: &SpAlgebraElement) -> [Rational; 21] {
    std::array::from_fn(|k| {
        let (r, s) = SP_COORDINATES[k];
        u.matrix().get(r, s).clone()
    })
}

/// Rebuilds the unique algebra element with the given coordinates, filling
/// the dependent entries through the linear relations
/// (`u₂₄ = u₁₅, …, u₆₆ = −u₃₃`).
pub fn sp_reconstruct(coords: &[Rational; 21]) -> SpAlgebraElement {
    let c = |r: u8, s: u8| {
        let k = SP_COORDINATES
            .iter()
            .position(|&(a, b)| (a, b) == (r, s))
            .expect("free coordinate");
        coords[k].clone()
    };
    let mut m = Matrix6::zero();
    // upper-left block and free slots
    for &(r, s) in SP_COORDINATES.iter() {
        m.set(r, s, c(r, s));
    }
    // symmetric completion of the off-diagonal blocks
    m.set(2, 4, c(1, 5));
    m.set(3, 4, c(1, 6));
    m.set(3, 5, c(2, 6));
    m.set(5, 1, c(4, 2));
    m.set(6, 1, c(4, 3));
    m.set(6, 2, c(5, 3));
    // lower-right block is minus the transpose of the upper-left one
    for r in 1..=3u8 {
        for s in 1..=3u8 {
            m.set(r + 3, s + 3, -&c(s, r));
        }
    }
    SpAlgebraElement::new(m).expect("reconstruction satisfies membership")
}

/// The shear `I + tU` for a square-zero algebra element; always symplectic.
pub fn shear(u: &SpAlgebraElement, t: &Rational) -> Result<SpGroupElement, SymplecticError> {
    if !u.is_square_zero() {
        return Err(SymplecticError::NotSquareZero);
    }
    let m = Matrix6::identity().add(&u.matrix().scale(t));
    SpGroupElement::new(m)
}

/// Deterministic generator of symplectic elements: the product of `factors`
/// shears with basis elements and small rational parameters drawn from a
/// seeded stream. Parameters keep numerators and denominators within
/// `[-9, 9]` to bound coefficient growth over six-factor products.
pub fn random_symplectic(seed: u64, factors: usize) -> SpGroupElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SpGroupElement::identity();
    for _ in 0..factors {
        let which = rng.gen_range(0..21usize);
        let numer = rng.gen_range(-9i64..=9);
        let denom = rng.gen_range(1i64..=9);
        let t = ratio(numer, denom);
        let factor = shear(&sp_basis()[which], &t).expect("basis elements are square-zero");
        out = out.compose(&factor);
    }
    out
}
