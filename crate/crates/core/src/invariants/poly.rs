//! Sparse polynomials in the 20 trivector coordinates, and the line-oriented
//! term-list files that carry the explicit degree-4 invariants.
//!
//! Variables are the coordinates `y_abc`, one per sorted triple
//! `1 ≤ a < b < c ≤ 6`, numbered by the frozen lexicographic triple order of
//! the exterior kernel. A variable is written externally as its 3-digit code
//! (`135` for `y_135`).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::exterior::{tuples, Trivector, TRIVECTOR_SLOTS};
use crate::scalar::Rational;

/// Number of polynomial variables.
pub const VARIABLE_COUNT: usize = TRIVECTOR_SLOTS;

/// The 3-digit code (`135`) of a variable index (`0..20`).
pub fn variable_code(index: usize) -> u16 {
    let idx = tuples(3)[index].indices();
    u16::from(idx[0]) * 100 + u16::from(idx[1]) * 10 + u16::from(idx[2])
}

/// The variable index of a 3-digit code, when the code is a sorted triple.
pub fn variable_from_code(code: u16) -> Option<usize> {
    let digits = [(code / 100) as u8, (code / 10 % 10) as u8, (code % 10) as u8];
    if !(1..=6).contains(&digits[0]) || digits[0] >= digits[1] || digits[1] >= digits[2] || digits[2] > 6 {
        return None;
    }
    tuples(3).iter().position(|t| t.indices() == digits)
}

/// A monomial: variable indices with multiplicity, kept sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn variable(v: u8) -> Self {
        debug_assert!((v as usize) < VARIABLE_COUNT);
        Monomial(vec![v])
    }

    pub fn from_vars(mut vars: Vec<u8>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    pub fn vars(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = self.0.clone();
        vars.extend_from_slice(&other.0);
        Monomial::from_vars(vars)
    }

    /// Multiplicity of a variable in this monomial.
    pub fn multiplicity(&self, v: u8) -> usize {
        self.0.iter().filter(|&&x| x == v).count()
    }

    /// Removes one occurrence of `v`, if present.
    pub fn without_one(&self, v: u8) -> Option<Monomial> {
        let pos = self.0.iter().position(|&x| x == v)?;
        let mut vars = self.0.clone();
        vars.remove(pos);
        Some(Monomial(vars))
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::one();
        for &v in &self.0 {
            acc *= &point[v as usize];
        }
        acc
    }
}

/// A sparse polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(value: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::unit(), value);
        p
    }

    pub fn variable(v: u8) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::variable(v), Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Adds `coeff · mono`, dropping the slot when it cancels to zero.
    pub fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (mono, coeff) in other.terms() {
            out.add_term(mono.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (mono, coeff) in other.terms() {
            out.add_term(mono.clone(), -coeff);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, factor: &Rational) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect() }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// The exact partial derivative with respect to variable `v`
    /// (multiplicity-aware power rule).
    pub fn derivative(&self, v: u8) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (mono, coeff) in self.terms() {
            let mult = mono.multiplicity(v);
            if mult == 0 {
                continue;
            }
            let reduced = mono.without_one(v).expect("variable present");
            out.add_term(reduced, coeff * &Rational::from_int(mult as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (mono, coeff) in self.terms() {
            acc += coeff * &mono.eval(point);
        }
        acc
    }
}

/// Errors from reading a term-list file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermListError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: terms must be canonically sorted and duplicate-free")]
    NotCanonical { line: usize },
}

/// One term of an explicit degree-4 polynomial: an integer coefficient and a
/// multiset of four variable codes, kept sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TermListTerm {
    pub coeff: i64,
    pub triples: [u16; 4],
}

/// An explicit polynomial stored as a term list with a global rational
/// prefactor.
///
/// File format, line-oriented and bit-exact:
///
/// ```text
/// # comment
/// prefactor 24
/// -5 124 136 146 345
/// ```
///
/// Each term line is an integer coefficient followed by four 3-digit sorted
/// triple codes in non-decreasing order; term lines themselves are sorted and
/// duplicate-free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolynomialTermList {
    pub prefactor: Rational,
    pub terms: Vec<TermListTerm>,
}

impl PolynomialTermList {
    /// Parses the line-oriented format, reporting the first offending line.
    pub fn parse(text: &str) -> Result<Self, TermListError> {
        let mut prefactor = Rational::one();
        let mut saw_prefactor = false;
        let mut terms: Vec<TermListTerm> = Vec::new();
        let mut last_line_of_term: Option<(usize, TermListTerm)> = None;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("prefactor") {
                if saw_prefactor {
                    return Err(TermListError::Malformed {
                        line: line_no,
                        reason: "duplicate prefactor header".into(),
                    });
                }
                if !terms.is_empty() {
                    return Err(TermListError::Malformed {
                        line: line_no,
                        reason: "prefactor header must precede all terms".into(),
                    });
                }
                prefactor = rest.trim().parse().map_err(|e| TermListError::Malformed {
                    line: line_no,
                    reason: format!("bad prefactor: {e}"),
                })?;
                saw_prefactor = true;
                continue;
            }
            let mut fields = line.split_whitespace();
            let coeff_text = fields.next().expect("nonempty line has a first field");
            let coeff: i64 = coeff_text
                .strip_prefix('+')
                .unwrap_or(coeff_text)
                .parse()
                .map_err(|_| TermListError::Malformed {
                    line: line_no,
                    reason: format!("bad integer coefficient {coeff_text:?}"),
                })?;
            if coeff == 0 {
                return Err(TermListError::Malformed {
                    line: line_no,
                    reason: "zero coefficient not allowed".into(),
                });
            }
            let mut triples = [0u16; 4];
            for slot in triples.iter_mut() {
                let field = fields.next().ok_or_else(|| TermListError::Malformed {
                    line: line_no,
                    reason: "expected four triple codes".into(),
                })?;
                let code: u16 = field.parse().map_err(|_| TermListError::Malformed {
                    line: line_no,
                    reason: format!("bad triple code {field:?}"),
                })?;
                if variable_from_code(code).is_none() {
                    return Err(TermListError::Malformed {
                        line: line_no,
                        reason: format!("{code} is not a sorted triple over 1..6"),
                    });
                }
                *slot = code;
            }
            if fields.next().is_some() {
                return Err(TermListError::Malformed {
                    line: line_no,
                    reason: "trailing fields after the four triple codes".into(),
                });
            }
            if triples.windows(2).any(|w| w[0] > w[1]) {
                return Err(TermListError::Malformed {
                    line: line_no,
                    reason: "triple codes within a term must be non-decreasing".into(),
                });
            }
            let term = TermListTerm { coeff, triples };
            if let Some((_, prev)) = last_line_of_term {
                if prev.triples >= term.triples {
                    return Err(TermListError::NotCanonical { line: line_no });
                }
            }
            last_line_of_term = Some((line_no, term));
            terms.push(term);
        }
        Ok(PolynomialTermList { prefactor, terms })
    }

    /// The canonical file rendering of this list.
    pub fn format(&self) -> String {
        let mut out = String::new();
        if !self.prefactor.is_one() {
            let _ = writeln!(out, "prefactor {}", self.prefactor);
        }
        for term in &self.terms {
            let _ = writeln!(
                out,
                "{:+} {} {} {} {}",
                term.coeff, term.triples[0], term.triples[1], term.triples[2], term.triples[3]
            );
        }
        out
    }

    /// Direct evaluation at the coordinates of a trivector.
    pub fn eval(&self, theta: &Trivector) -> Rational {
        let point = theta.coordinates();
        let mut acc = Rational::zero();
        for term in &self.terms {
            let mut product = Rational::from_int(term.coeff);
            for &code in &term.triples {
                let var = variable_from_code(code).expect("validated on construction");
                product *= &point[var];
            }
            acc += product;
        }
        acc * &self.prefactor
    }

    /// The list as a plain polynomial, prefactor folded in.
    pub fn to_poly(&self) -> MultiPoly {
        let mut poly = MultiPoly::zero();
        for term in &self.terms {
            let vars: Vec<u8> = term
                .triples
                .iter()
                .map(|&code| variable_from_code(code).expect("validated") as u8)
                .collect();
            poly.add_term(Monomial::from_vars(vars), Rational::from_int(term.coeff));
        }
        poly.scale(&self.prefactor)
    }

    /// Rebuilds a canonical term list from a polynomial whose coefficients
    /// are integer multiples of `prefactor`. Returns `None` when some
    /// coefficient is not such a multiple or a monomial is not degree 4.
    pub fn from_poly(poly: &MultiPoly, prefactor: Rational) -> Option<Self> {
        let mut terms = Vec::with_capacity(poly.len());
        for (mono, coeff) in poly.terms() {
            if mono.degree() != 4 {
                return None;
            }
            let scaled = coeff.try_div(&prefactor).ok()?;
            let coeff_int = scaled.to_i64()?;
            let mut triples = [0u16; 4];
            for (slot, &v) in triples.iter_mut().zip(mono.vars()) {
                *slot = variable_code(v as usize);
            }
            terms.push(TermListTerm { coeff: coeff_int, triples });
        }
        terms.sort_by_key(|t| t.triples);
        Some(PolynomialTermList { prefactor, terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    #[test]
    fn variable_codes_round_trip() {
        for v in 0..VARIABLE_COUNT {
            assert_eq!(variable_from_code(variable_code(v)), Some(v));
        }
        assert_eq!(variable_code(0), 123);
        assert_eq!(variable_code(19), 456);
        assert_eq!(variable_from_code(321), None);
        assert_eq!(variable_from_code(117), None);
        assert_eq!(variable_from_code(148), None);
    }

    #[test]
    fn poly_arithmetic_and_derivative() {
        // p = 3·y0²y1 − y2
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::from_vars(vec![0, 0, 1]), rat(3));
        p.add_term(Monomial::variable(2), rat(-1));

        let dp0 = p.derivative(0);
        let mut expected = MultiPoly::zero();
        expected.add_term(Monomial::from_vars(vec![0, 1]), rat(6));
        assert_eq!(dp0, expected);

        let mut point = vec![rat(0); VARIABLE_COUNT];
        point[0] = rat(2);
        point[1] = ratio(1, 2);
        point[2] = rat(7);
        assert_eq!(p.eval(&point), rat(6) - rat(7));

        let q = p.mul(&p);
        assert_eq!(q.eval(&point), rat(1));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn term_list_parse_format_round_trip() {
        let text = "# demo\nprefactor 24\n-5 124 136 146 345\n+1 135 234 256 256\n";
        let list = PolynomialTermList::parse(text).unwrap();
        assert_eq!(list.prefactor, rat(24));
        assert_eq!(list.terms.len(), 2);
        let again = PolynomialTermList::parse(&list.format()).unwrap();
        assert_eq!(again, list);
    }

    #[test]
    fn term_list_errors_carry_line_numbers() {
        let bad_code = "prefactor 1\n+1 123 999 456 456\n";
        match PolynomialTermList::parse(bad_code) {
            Err(TermListError::Malformed { line: 2, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        let unsorted = "+1 456 123 123 123\n";
        assert!(matches!(
            PolynomialTermList::parse(unsorted),
            Err(TermListError::Malformed { line: 1, .. })
        ));
        let duplicate = "+1 123 123 123 123\n+2 123 123 123 123\n";
        assert!(matches!(
            PolynomialTermList::parse(duplicate),
            Err(TermListError::NotCanonical { line: 2 })
        ));
        let trailing = "+1 123 123 123 123 456\n";
        assert!(matches!(
            PolynomialTermList::parse(trailing),
            Err(TermListError::Malformed { line: 1, .. })
        ));
    }

    #[test]
    fn term_list_eval_matches_poly_eval() {
        let text = "prefactor 3\n-1 123 123 456 456\n+2 123 124 125 126\n";
        let list = PolynomialTermList::parse(text).unwrap();
        let poly = list.to_poly();
        let theta = Trivector::from_terms(&[
            (rat(1), [1, 2, 3]),
            (rat(2), [1, 2, 4]),
            (ratio(1, 2), [1, 2, 5]),
            (rat(-3), [1, 2, 6]),
            (ratio(5, 7), [4, 5, 6]),
        ]);
        assert_eq!(list.eval(&theta), poly.eval(&theta.coordinates()));
        let rebuilt = PolynomialTermList::from_poly(&poly, rat(3)).unwrap();
        assert_eq!(rebuilt, list);
    }
}
