//! Fixed-dimension exterior-algebra kernel for `n = 6`.
//!
//! Multivectors of each grade are stored densely: grade `r` has `C(6, r)`
//! coefficient slots addressed by strictly increasing index tuples with
//! entries in `1..=6`, ordered lexicographically. The tuple → offset tables
//! are computed once and frozen, so slot layout is identical across runs.
//!
//! Index conventions follow the classical one throughout: accessing a
//! coefficient through an unsorted index list resolves through the sign of
//! the sorting permutation, and a repeated index yields zero.

pub mod matrix;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use thiserror::Error;

use crate::scalar::Rational;
pub use matrix::{determinant, rank, solve_square, LinearSystemError, Matrix6};

/// Dimension of the underlying vector space.
pub const DIM: usize = 6;

/// `C(6, r)` for `r = 0..=6`.
pub const GRADE_SIZES: [usize; 7] = [1, 6, 15, 20, 15, 6, 1];

/// Errors from exterior-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    /// Wedge product would exceed the top grade.
    #[error("grade overflow: {left} + {right} > 6")]
    GradeOverflow { left: usize, right: usize },
    /// Interior product of a grade-0 multivector.
    #[error("cannot contract a grade-0 multivector")]
    ContractScalar,
    /// Pullback by a singular matrix.
    #[error("pullback requires an invertible matrix")]
    SingularMatrix,
    /// An index outside `1..=6` or a tuple of unsupported length.
    #[error("invalid index data: {0}")]
    BadIndex(String),
}

fn tuple_tables() -> &'static [Vec<IndexTuple>; 7] {
    static TABLES: OnceLock<[Vec<IndexTuple>; 7]> = OnceLock::new();
    TABLES.get_or_init(|| {
        fn extend(prefix: &mut Vec<u8>, remaining: usize, out: &mut Vec<IndexTuple>) {
            if remaining == 0 {
                out.push(IndexTuple::freeze(prefix));
                return;
            }
            let start = prefix.last().map_or(1, |&last| last + 1);
            for next in start..=DIM as u8 {
                prefix.push(next);
                extend(prefix, remaining - 1, out);
                prefix.pop();
            }
        }
        let mut tables: [Vec<IndexTuple>; 7] = Default::default();
        for (grade, table) in tables.iter_mut().enumerate() {
            extend(&mut Vec::new(), grade, table);
            assert_eq!(table.len(), GRADE_SIZES[grade], "tuple table size for grade {grade}");
        }
        tables
    })
}

/// The sorted index tuples of a grade, in frozen lexicographic order.
pub fn tuples(grade: usize) -> &'static [IndexTuple] {
    &tuple_tables()[grade]
}

/// A strictly increasing tuple of indices in `1..=6`; the canonical address
/// of one multivector coefficient slot.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple {
    len: u8,
    idx: [u8; DIM],
}

impl IndexTuple {
    fn freeze(sorted: &[u8]) -> Self {
        let mut idx = [0u8; DIM];
        idx[..sorted.len()].copy_from_slice(sorted);
        IndexTuple { len: sorted.len() as u8, idx }
    }

    /// Builds a tuple from already sorted, strictly increasing indices.
    pub fn from_sorted(sorted: &[u8]) -> Result<Self, ExteriorError> {
        if sorted.len() > DIM {
            return Err(ExteriorError::BadIndex(format!("tuple of length {}", sorted.len())));
        }
        for (k, &i) in sorted.iter().enumerate() {
            if i < 1 || i > DIM as u8 {
                return Err(ExteriorError::BadIndex(format!("index {i} out of range")));
            }
            if k > 0 && sorted[k - 1] >= i {
                return Err(ExteriorError::BadIndex(format!("indices {sorted:?} not strictly increasing")));
            }
        }
        Ok(IndexTuple::freeze(sorted))
    }

    /// Sorts arbitrary indices, returning the canonical tuple and the sign of
    /// the sorting permutation; `None` when an index repeats.
    pub fn resolve(indices: &[u8]) -> Option<(Self, i8)> {
        let mut buf = [0u8; DIM];
        let n = indices.len();
        assert!(n <= DIM, "tuple of length {n}");
        buf[..n].copy_from_slice(indices);
        let slice = &mut buf[..n];
        let mut sign = 1i8;
        // insertion sort, counting transpositions
        for i in 1..n {
            let mut j = i;
            while j > 0 && slice[j - 1] > slice[j] {
                slice.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        for k in 1..n {
            if slice[k - 1] == slice[k] {
                return None;
            }
        }
        for &i in slice.iter() {
            assert!((1..=DIM as u8).contains(&i), "index {i} out of range");
        }
        Some((IndexTuple::freeze(slice), sign))
    }

    pub fn grade(&self) -> usize {
        self.len as usize
    }

    pub fn indices(&self) -> &[u8] {
        &self.idx[..self.len as usize]
    }

    /// Offset of this tuple within its grade's frozen lexicographic table.
    pub fn position(&self) -> usize {
        tuples(self.grade())
            .iter()
            .position(|t| t == self)
            .expect("tuple present in its grade table")
    }

    /// Whether the two tuples share no index.
    pub fn disjoint(&self, other: &IndexTuple) -> bool {
        self.indices().iter().all(|i| !other.indices().contains(i))
    }
}

impl fmt::Debug for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.indices().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// A homogeneous multivector: one grade, dense coefficients over the frozen
/// tuple order of that grade.
#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    grade: usize,
    coeffs: Vec<Rational>,
}

impl Multivector {
    pub fn zero(grade: usize) -> Self {
        assert!(grade <= DIM, "grade {grade} out of range");
        Multivector { grade, coeffs: vec![Rational::zero(); GRADE_SIZES[grade]] }
    }

    /// The basis multivector `v^{i_1} ∧ … ∧ v^{i_r}` for a sorted tuple.
    pub fn basis(tuple: IndexTuple) -> Self {
        let mut mv = Multivector::zero(tuple.grade());
        mv.coeffs[tuple.position()] = Rational::one();
        mv
    }

    /// The basis multivector for arbitrary index order, with the sorting
    /// sign applied; zero when an index repeats.
    pub fn basis_signed(indices: &[u8]) -> Self {
        match IndexTuple::resolve(indices) {
            None => Multivector::zero(indices.len()),
            Some((tuple, sign)) => {
                let mut mv = Multivector::zero(tuple.grade());
                mv.coeffs[tuple.position()] = Rational::from_int(sign as i64);
                mv
            }
        }
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Coefficient at a sorted tuple of the multivector's grade.
    pub fn coeff(&self, tuple: IndexTuple) -> &Rational {
        assert_eq!(tuple.grade(), self.grade, "tuple grade mismatch");
        &self.coeffs[tuple.position()]
    }

    /// Sign-resolved coefficient for arbitrary index order (zero on repeats).
    pub fn coeff_signed(&self, indices: &[u8]) -> Rational {
        assert_eq!(indices.len(), self.grade, "tuple grade mismatch");
        match IndexTuple::resolve(indices) {
            None => Rational::zero(),
            Some((tuple, 1)) => self.coeffs[tuple.position()].clone(),
            Some((tuple, _)) => -&self.coeffs[tuple.position()],
        }
    }

    pub fn set_coeff(&mut self, tuple: IndexTuple, value: Rational) {
        assert_eq!(tuple.grade(), self.grade, "tuple grade mismatch");
        self.coeffs[tuple.position()] = value;
    }

    /// Adds `value` into the slot addressed by arbitrary index order,
    /// resolving the permutation sign; a repeated index contributes nothing.
    pub fn add_signed(&mut self, indices: &[u8], value: &Rational) {
        assert_eq!(indices.len(), self.grade, "tuple grade mismatch");
        if let Some((tuple, sign)) = IndexTuple::resolve(indices) {
            let pos = tuple.position();
            if sign > 0 {
                self.coeffs[pos] += value;
            } else {
                self.coeffs[pos] -= value;
            }
        }
    }

    /// Iterates `(tuple, coefficient)` pairs in frozen order.
    pub fn iter(&self) -> impl Iterator<Item = (IndexTuple, &Rational)> {
        tuples(self.grade).iter().copied().zip(self.coeffs.iter())
    }

    pub fn scale(&self, factor: &Rational) -> Multivector {
        Multivector {
            grade: self.grade,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Evaluates the multivector as an alternating `r`-form on `r` vectors,
    /// i.e. the sum over tuples of `coeff · det(vᵃ(x_j))`.
    pub fn eval_on_vectors(&self, args: &[Vector]) -> Rational {
        assert_eq!(args.len(), self.grade, "argument count mismatch");
        let mut total = Rational::zero();
        for (tuple, coeff) in self.iter() {
            if coeff.is_zero() {
                continue;
            }
            let rows: Vec<Vec<Rational>> = tuple
                .indices()
                .iter()
                .map(|&a| args.iter().map(|x| x.component(a).clone()).collect())
                .collect();
            total += coeff * &matrix::determinant(rows);
        }
        total
    }
}

impl Add<&Multivector> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.grade, rhs.grade, "grade mismatch in addition");
        Multivector {
            grade: self.grade,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Multivector> for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.grade, rhs.grade, "grade mismatch in subtraction");
        Multivector {
            grade: self.grade,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector { grade: self.grade, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (tuple, coeff) in self.iter() {
            if coeff.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}*v^{tuple:?}")?;
            first = false;
        }
        if first {
            write!(f, "0 (grade {})", self.grade)?;
        }
        Ok(())
    }
}

/// The exterior product. Bilinear, graded-anticommutative, with canonical
/// signs obtained by sorting concatenated index lists.
pub fn wedge(left: &Multivector, right: &Multivector) -> Result<Multivector, ExteriorError> {
    let (r, s) = (left.grade(), right.grade());
    if r + s > DIM {
        return Err(ExteriorError::GradeOverflow { left: r, right: s });
    }
    let mut out = Multivector::zero(r + s);
    let mut concat = [0u8; DIM];
    for (lt, lc) in left.iter() {
        if lc.is_zero() {
            continue;
        }
        for (rt, rc) in right.iter() {
            if rc.is_zero() {
                continue;
            }
            concat[..r].copy_from_slice(lt.indices());
            concat[r..r + s].copy_from_slice(rt.indices());
            let product = lc * rc;
            out.add_signed(&concat[..r + s], &product);
        }
    }
    Ok(out)
}

/// Left interior product into the first argument slot:
/// `(i_x w)(y_1, …, y_{r−1}) = w(x, y_1, …, y_{r−1})`.
pub fn contract(x: &Vector, w: &Multivector) -> Result<Multivector, ExteriorError> {
    let r = w.grade();
    if r == 0 {
        return Err(ExteriorError::ContractScalar);
    }
    let mut out = Multivector::zero(r - 1);
    let mut rest = [0u8; DIM];
    for (tuple, coeff) in w.iter() {
        if coeff.is_zero() {
            continue;
        }
        let idx = tuple.indices();
        for k in 0..r {
            let slot = x.component(idx[k]);
            if slot.is_zero() {
                continue;
            }
            let mut m = 0;
            for (pos, &i) in idx.iter().enumerate() {
                if pos != k {
                    rest[m] = i;
                    m += 1;
                }
            }
            let mut value = coeff * slot;
            if k % 2 == 1 {
                value = -value;
            }
            out.add_signed(&rest[..r - 1], &value);
        }
    }
    Ok(out)
}

/// The pullback action of an invertible map:
/// `(A·ξ)(x_1, …, x_r) = ξ(A⁻¹x_1, …, A⁻¹x_r)`.
///
/// On coefficients this is `(A·ξ)_H = Σ_S ξ_S · det(B[S, H])` with
/// `B = A⁻¹`, the sum running over sorted source tuples `S`.
pub fn pullback(a: &Matrix6, w: &Multivector) -> Result<Multivector, ExteriorError> {
    let b = a.inverse().map_err(|_| ExteriorError::SingularMatrix)?;
    let r = w.grade();
    let mut out = Multivector::zero(r);
    for target in tuples(r).iter() {
        let mut total = Rational::zero();
        for (source, coeff) in w.iter() {
            if coeff.is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rational>> = source
                .indices()
                .iter()
                .map(|&row| {
                    target.indices().iter().map(|&col| b.get(row, col).clone()).collect()
                })
                .collect();
            total += coeff * &matrix::determinant(minor);
        }
        out.set_coeff(*target, total);
    }
    Ok(out)
}

/// A vector of `V` in the fixed basis `(v_1, …, v_6)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Vector([Rational; DIM]);

impl Vector {
    pub fn zero() -> Self {
        Vector(std::array::from_fn(|_| Rational::zero()))
    }

    /// The basis vector `v_i`, `i` in `1..=6`.
    pub fn basis(i: u8) -> Self {
        let mut v = Vector::zero();
        v.set_component(i, Rational::one());
        v
    }

    pub fn from_components(components: [Rational; DIM]) -> Self {
        Vector(components)
    }

    /// Component along `v_i`, `i` in `1..=6`.
    pub fn component(&self, i: u8) -> &Rational {
        &self.0[usize::from(i) - 1]
    }

    pub fn set_component(&mut self, i: u8, value: Rational) {
        self.0[usize::from(i) - 1] = value;
    }

    pub fn components(&self) -> &[Rational; DIM] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Vector {
        Vector(std::array::from_fn(|k| &self.0[k] * factor))
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }
}

impl Mul<&Vector> for &Matrix6 {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        let mut out = Vector::zero();
        for i in 1..=DIM as u8 {
            let mut acc = Rational::zero();
            for j in 1..=DIM as u8 {
                acc += self.get(i, j) * rhs.component(j);
            }
            out.set_component(i, acc);
        }
        out
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A trivector: the grade-3 multivector `Σ λ_{abc} v^a ∧ v^b ∧ v^c` with 20
/// addressable slots `1 ≤ a < b < c ≤ 6`.
#[derive(Clone, PartialEq, Eq)]
pub struct Trivector(Multivector);

/// Number of trivector coordinate slots.
pub const TRIVECTOR_SLOTS: usize = 20;

impl Trivector {
    pub fn zero() -> Self {
        Trivector(Multivector::zero(3))
    }

    /// Builds a trivector from `(coefficient, [i, j, k])` terms; indices may
    /// be unsorted or repeated and are normalized through the kernel's sign
    /// machinery, with like terms combined.
    pub fn from_terms(terms: &[(Rational, [u8; 3])]) -> Self {
        let mut mv = Multivector::zero(3);
        for (coeff, indices) in terms {
            mv.add_signed(indices, coeff);
        }
        Trivector(mv)
    }

    pub fn from_multivector(mv: Multivector) -> Result<Self, ExteriorError> {
        if mv.grade() != 3 {
            return Err(ExteriorError::BadIndex(format!("grade {} is not 3", mv.grade())));
        }
        Ok(Trivector(mv))
    }

    /// Coefficient `λ_{abc}` at a sorted triple.
    pub fn coeff(&self, a: u8, b: u8, c: u8) -> &Rational {
        debug_assert!(a < b && b < c);
        self.0.coeff(IndexTuple::from_sorted(&[a, b, c]).expect("sorted triple"))
    }

    /// Sign-resolved coefficient `λ_{ijk}` for arbitrary index order.
    pub fn coeff_signed(&self, i: u8, j: u8, k: u8) -> Rational {
        self.0.coeff_signed(&[i, j, k])
    }

    pub fn set_coeff(&mut self, a: u8, b: u8, c: u8, value: Rational) {
        debug_assert!(a < b && b < c);
        self.0.set_coeff(IndexTuple::from_sorted(&[a, b, c]).expect("sorted triple"), value);
    }

    /// The 20 coordinates in frozen lexicographic triple order.
    pub fn coordinates(&self) -> Vec<Rational> {
        self.0.coeffs.clone()
    }

    pub fn from_coordinates(coords: Vec<Rational>) -> Result<Self, ExteriorError> {
        if coords.len() != TRIVECTOR_SLOTS {
            return Err(ExteriorError::BadIndex(format!("{} coordinates", coords.len())));
        }
        Ok(Trivector(Multivector { grade: 3, coeffs: coords }))
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, factor: &Rational) -> Trivector {
        Trivector(self.0.scale(factor))
    }

    pub fn add(&self, rhs: &Trivector) -> Trivector {
        Trivector(&self.0 + &rhs.0)
    }
}

impl fmt::Debug for Trivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn basis1(i: u8) -> Multivector {
        Multivector::basis_signed(&[i])
    }

    #[test]
    fn tuple_tables_are_frozen_lexicographic() {
        assert_eq!(tuples(0).len(), 1);
        assert_eq!(tuples(3).len(), 20);
        let t3: Vec<&[u8]> = tuples(3).iter().map(|t| t.indices()).collect();
        assert_eq!(t3[0], &[1, 2, 3]);
        assert_eq!(t3[1], &[1, 2, 4]);
        assert_eq!(t3[19], &[4, 5, 6]);
        for (pos, tuple) in tuples(3).iter().enumerate() {
            assert_eq!(tuple.position(), pos);
        }
        // lexicographic order is strictly increasing on the raw index arrays
        for grade in 0..=6 {
            let table = tuples(grade);
            for w in table.windows(2) {
                assert!(w[0].indices() < w[1].indices());
            }
        }
    }

    #[test]
    fn resolve_computes_permutation_signs() {
        let (t, s) = IndexTuple::resolve(&[2, 1, 3]).unwrap();
        assert_eq!(t.indices(), &[1, 2, 3]);
        assert_eq!(s, -1);
        let (t, s) = IndexTuple::resolve(&[2, 3, 1]).unwrap();
        assert_eq!(t.indices(), &[1, 2, 3]);
        assert_eq!(s, 1);
        assert!(IndexTuple::resolve(&[1, 1, 2]).is_none());
    }

    #[test]
    fn wedge_alternation_and_anticommutativity() {
        let v1 = basis1(1);
        let v2 = basis1(2);
        assert!(wedge(&v1, &v1).unwrap().is_zero());
        let v12 = wedge(&v1, &v2).unwrap();
        let v21 = wedge(&v2, &v1).unwrap();
        assert_eq!(v21, -&v12);
    }

    #[test]
    fn wedge_grade_overflow_is_an_error() {
        let four = Multivector::basis_signed(&[1, 2, 3, 4]);
        let three = Multivector::basis_signed(&[1, 2, 5]);
        assert_eq!(
            wedge(&four, &three),
            Err(ExteriorError::GradeOverflow { left: 4, right: 3 })
        );
    }

    /// Independent sign oracle: expands a product of basis covectors by
    /// counting inversions of the concatenated index sequence.
    fn brute_force_wedge_sign(seq: &[u8]) -> Option<i8> {
        for (i, a) in seq.iter().enumerate() {
            if seq[i + 1..].contains(a) {
                return None;
            }
        }
        let mut sign = 1i8;
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if seq[i] > seq[j] {
                    sign = -sign;
                }
            }
        }
        Some(sign)
    }

    #[test]
    fn omega_cubed_matches_brute_force_expansion() {
        // Ω = Σ_{i=1..3} v^i ∧ v^{i+3}; expand (Ω)³ by hand over all index
        // choices and compare against the kernel's wedge.
        let mut omega = Multivector::zero(2);
        for i in 1..=3u8 {
            omega.add_signed(&[i, i + 3], &rat(1));
        }
        let cubed = wedge(&wedge(&omega, &omega).unwrap(), &omega).unwrap();

        let pairs: [[u8; 2]; 3] = [[1, 4], [2, 5], [3, 6]];
        let mut expected = rat(0);
        for p in &pairs {
            for q in &pairs {
                for r in &pairs {
                    let seq = [p[0], p[1], q[0], q[1], r[0], r[1]];
                    if let Some(sign) = brute_force_wedge_sign(&seq) {
                        expected += rat(sign as i64);
                    }
                }
            }
        }
        assert_eq!(expected, rat(-6));
        let top = IndexTuple::from_sorted(&[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(cubed.coeff(top), &rat(-6));
        assert_eq!(cubed, Multivector::basis(top).scale(&rat(-6)));
    }

    #[test]
    fn contraction_examples() {
        let v14 = Multivector::basis_signed(&[1, 4]);
        assert_eq!(contract(&Vector::basis(1), &v14).unwrap(), basis1(4));

        let mut omega = Multivector::zero(2);
        for i in 1..=3u8 {
            omega.add_signed(&[i, i + 3], &rat(1));
        }
        // oracle: i_{v_4}(Ω) evaluated against all basis vectors
        let contracted = contract(&Vector::basis(4), &omega).unwrap();
        for j in 1..=6u8 {
            let direct = omega.eval_on_vectors(&[Vector::basis(4), Vector::basis(j)]);
            assert_eq!(contracted.coeff_signed(&[j]), direct);
        }
        assert_eq!(contracted, -&basis1(1));

        let v23 = Multivector::basis_signed(&[2, 3]);
        assert!(contract(&Vector::basis(1), &v23).unwrap().is_zero());

        assert_eq!(
            contract(&Vector::basis(1), &Multivector::zero(0)),
            Err(ExteriorError::ContractScalar)
        );
    }

    #[test]
    fn contract_is_linear_in_the_vector() {
        let w = Multivector::basis_signed(&[1, 2, 4]);
        let mut x = Vector::zero();
        x.set_component(1, ratio(2, 3));
        x.set_component(4, rat(-5));
        let lhs = contract(&x, &w).unwrap();
        let by_parts = &contract(&Vector::basis(1), &w).unwrap().scale(&ratio(2, 3))
            + &contract(&Vector::basis(4), &w).unwrap().scale(&rat(-5));
        assert_eq!(lhs, by_parts);
    }

    #[test]
    fn pullback_by_identity_and_scaling() {
        let theta = Trivector::from_terms(&[(rat(1), [1, 2, 3]), (ratio(2, 7), [2, 4, 6])]);
        let id = Matrix6::identity();
        assert_eq!(pullback(&id, theta.as_multivector()).unwrap(), *theta.as_multivector());

        let two_id = Matrix6::identity().scale(&rat(2));
        let pulled = pullback(&two_id, theta.as_multivector()).unwrap();
        assert_eq!(pulled, theta.as_multivector().scale(&ratio(1, 8)));
    }

    #[test]
    fn pullback_rejects_singular_matrices() {
        let zero = Matrix6::zero();
        let theta = Multivector::basis_signed(&[1, 2, 3]);
        assert_eq!(pullback(&zero, &theta), Err(ExteriorError::SingularMatrix));
    }

    /// Definition-driven oracle for the pullback: evaluate
    /// `ξ(A⁻¹ v_{h_1}, …, A⁻¹ v_{h_r})` by multilinear expansion.
    fn pullback_oracle(a: &Matrix6, w: &Multivector) -> Multivector {
        let b = a.inverse().unwrap();
        let mut out = Multivector::zero(w.grade());
        for target in tuples(w.grade()).iter() {
            let args: Vec<Vector> =
                target.indices().iter().map(|&h| &b * &Vector::basis(h)).collect();
            out.set_coeff(*target, w.eval_on_vectors(&args));
        }
        out
    }

    fn seeded_matrix(seed: i64) -> Matrix6 {
        // deterministic small-entry matrix; shifted until invertible
        let mut shift = 0i64;
        loop {
            let m = Matrix6::from_fn(|i, j| {
                let v = (seed * 31 + i as i64 * 7 + j as i64 * 13 + i as i64 * j as i64) % 5 - 2;
                if i == j {
                    rat(v + 3 + shift)
                } else {
                    rat(v)
                }
            });
            if !m.det().is_zero() {
                return m;
            }
            shift += 1;
        }
    }

    fn seeded_trivector(seed: i64) -> Trivector {
        let coords = (0..20)
            .map(|k| ratio((seed * 17 + 3 * k as i64) % 19 - 9, (k as i64 % 4) + 1))
            .collect();
        Trivector::from_coordinates(coords).unwrap()
    }

    #[test]
    fn pullback_matches_definition_oracle_and_minor_reconstruction() {
        for seed in 0..4 {
            let a = seeded_matrix(seed);
            let theta = seeded_trivector(seed + 11);
            let fast = pullback(&a, theta.as_multivector()).unwrap();
            assert_eq!(fast, pullback_oracle(&a, theta.as_multivector()));
        }
    }

    #[test]
    fn pullback_is_multiplicative_and_wedge_compatible() {
        for seed in 0..3 {
            let a = seeded_matrix(seed);
            let b = seeded_matrix(seed + 5);
            let ab = a.mul(&b);
            let u = Multivector::basis_signed(&[1, 4]).scale(&ratio(3, 2));
            let w = &Multivector::basis_signed(&[2, 3, 6]) + &Multivector::basis_signed(&[2, 5, 6]);

            let via_product = pullback(&ab, &w).unwrap();
            let via_steps = pullback(&a, &pullback(&b, &w).unwrap()).unwrap();
            assert_eq!(via_product, via_steps);

            let uw = wedge(&u, &w).unwrap();
            let lhs = pullback(&a, &uw).unwrap();
            let rhs = wedge(&pullback(&a, &u).unwrap(), &pullback(&a, &w).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn contract_pullback_compatibility() {
        // pullback(A, i_v w) = i_{Av} pullback(A, w): contracting with the
        // transported vector commutes with the pullback action
        for seed in 0..3 {
            let a = seeded_matrix(seed + 2);
            let w = &Multivector::basis_signed(&[1, 2, 5]).scale(&rat(2))
                + &Multivector::basis_signed(&[3, 4, 6]);
            let mut v = Vector::zero();
            v.set_component(2, rat(1));
            v.set_component(5, ratio(-1, 2));
            let av = &a * &v;
            let lhs = pullback(&a, &contract(&v, &w).unwrap()).unwrap();
            let rhs = contract(&av, &pullback(&a, &w).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn contract_is_an_antiderivation() {
        let u = &Multivector::basis_signed(&[1, 4]) + &Multivector::basis_signed(&[2, 5]).scale(&rat(3));
        let w = &basis1(2) + &basis1(6).scale(&ratio(1, 3));
        let mut x = Vector::zero();
        x.set_component(1, rat(2));
        x.set_component(2, rat(-1));
        x.set_component(4, ratio(5, 2));

        let uw = wedge(&u, &w).unwrap();
        let lhs = contract(&x, &uw).unwrap();
        let r = u.grade();
        let mut rhs = wedge(&contract(&x, &u).unwrap(), &w).unwrap();
        let mut second = wedge(&u, &contract(&x, &w).unwrap()).unwrap();
        if r % 2 == 1 {
            second = -&second;
        }
        rhs = &rhs + &second;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn trivector_terms_normalize_through_kernel_signs() {
        let t = Trivector::from_terms(&[(rat(1), [2, 1, 3])]);
        assert_eq!(t.coeff(1, 2, 3), &rat(-1));
        let gone = Trivector::from_terms(&[(rat(5), [1, 1, 2])]);
        assert!(gone.is_zero());
        let combined = Trivector::from_terms(&[(rat(1), [1, 2, 3]), (rat(2), [2, 3, 1])]);
        assert_eq!(combined.coeff(1, 2, 3), &rat(3));
    }
}
