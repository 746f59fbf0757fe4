//! Dense integer polynomials in the formal variable `q`.
//!
//! Coefficients are arbitrary-precision integers stored in ascending powers
//! of `q`. The representation is canonical: no trailing zero coefficients,
//! and the zero polynomial stores nothing. All operations are exact; there
//! is no modular or floating-point shortcut anywhere.
//!
//! Two operations carry the combinatorial weight of the crate:
//!
//! * [`Poly::content_sums`] splits the coefficients into residue classes of
//!   the exponent mod m and sums each class.
//! * [`Poly::exact_div`] divides in `Z[q]`, failing loudly (with the
//!   remainder) when the quotient would leave the ring.
//!
//! A polynomial has *equal content* mod m when every class sums to
//! `f(1)/m`. That holds exactly when `1 + q + ... + q^(m-1)` divides `f`,
//! and [`Poly::has_equal_content`] checks the cheap side of that
//! equivalence. Debug builds recompute the divisibility side and assert
//! the two agree.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A dense polynomial over the integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    /// Builds a polynomial from coefficients in ascending powers of `q`,
    /// trimming trailing zeros to keep the representation canonical.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![BigInt::one()] }
    }

    /// The monomial `c * q^power`.
    pub fn monomial(c: BigInt, power: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        Poly { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The q-analogue `[m]_q = 1 + q + ... + q^(m-1)` of a positive
    /// integer m. Its value at q = 1 is m.
    pub fn q_analogue(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument(
                "q-analogue is defined for m >= 1".into(),
            ));
        }
        let len = usize::try_from(m)
            .map_err(|_| Error::InvalidArgument(format!("q-analogue of {m} will not fit in memory")))?;
        Ok(Poly { coeffs: vec![BigInt::one(); len] })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients in ascending powers of `q`; empty for zero.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `f(1)`, the sum of all coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `f * q^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[k + i] = c.clone();
        }
        Poly { coeffs }
    }

    /// Exact division in `Z[q]`. Returns the quotient when `divisor`
    /// divides `self` exactly; otherwise reports the remainder at the
    /// point long division leaves the integers (a nonzero final remainder
    /// or a leading coefficient that does not divide).
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        if divisor.is_zero() {
            return Err(Error::InvalidArgument(
                "division by the zero polynomial".into(),
            ));
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        loop {
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
            let rd = rem.len() - 1;
            if !(&rem[rd] % lead).is_zero() {
                return Err(Error::NotDivisible { remainder: Poly::new(rem) });
            }
            let c = &rem[rd] / lead;
            let shift = rd - dd;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[shift + i] -= t;
            }
            quot[shift] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Ok(Poly::new(quot))
        } else {
            Err(Error::NotDivisible { remainder: Poly::new(rem) })
        }
    }

    /// Sums the coefficients within each residue class of the exponent
    /// mod m: entry k is the sum of coefficients of `q^j` over `j = k
    /// (mod m)`. The entries always add up to `f(1)`.
    pub fn content_sums(&self, m: u64) -> Result<Vec<BigInt>> {
        if m == 0 {
            return Err(Error::InvalidArgument(
                "content sums need a modulus m >= 1".into(),
            ));
        }
        let m = usize::try_from(m)
            .map_err(|_| Error::InvalidArgument(format!("modulus {m} is out of range")))?;
        let mut sums = vec![BigInt::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            sums[i % m] += c;
        }
        Ok(sums)
    }

    /// Whether every residue class of exponents carries the same share
    /// `f(1)/m` of the coefficient mass. Equivalent to `[m]_q` dividing
    /// `f`; debug builds verify the equivalence on every call.
    pub fn has_equal_content(&self, m: u64) -> Result<bool> {
        let sums = self.content_sums(m)?;
        let total = self.value_at_one();
        let modulus = BigInt::from(m);
        let equal = if (&total % &modulus).is_zero() {
            let share = &total / &modulus;
            sums.iter().all(|s| *s == share)
        } else {
            false
        };
        #[cfg(debug_assertions)]
        {
            let divisible = self.exact_div(&Poly::q_analogue(m)?).is_ok();
            debug_assert_eq!(
                equal, divisible,
                "content criterion disagrees with divisibility for m = {m}"
            );
        }
        Ok(equal)
    }

    /// Multiplies by `[m]_q` in one pass: each output coefficient is a
    /// sliding-window sum of m input coefficients. Linear in the output
    /// size, which matters for the large-n identity chains.
    pub(crate) fn mul_q_analogue(&self, m: u64) -> Poly {
        assert!(m >= 1, "q-analogue factor needs m >= 1");
        if self.is_zero() {
            return Poly::zero();
        }
        let m = m as usize;
        let d = self.coeffs.len();
        let mut out = Vec::with_capacity(d + m - 1);
        let mut window = BigInt::zero();
        for j in 0..d + m - 1 {
            if j < d {
                window += &self.coeffs[j];
            }
            if j >= m {
                window -= &self.coeffs[j - m];
            }
            out.push(window.clone());
        }
        Poly::new(out)
    }

    /// Exact division by `[m]_q`, again as a linear-time sliding window.
    /// Produces the same result as `exact_div(&Poly::q_analogue(m)?)`.
    pub(crate) fn exact_div_q_analogue(&self, m: u64) -> Result<Poly> {
        if m == 0 {
            return Err(Error::InvalidArgument(
                "q-analogue divisor needs m >= 1".into(),
            ));
        }
        if m == 1 || self.is_zero() {
            return Ok(self.clone());
        }
        let m = m as usize;
        let d = self.coeffs.len();
        if d < m {
            return Err(Error::NotDivisible { remainder: self.clone() });
        }
        let h_len = d - m + 1;
        let mut h: Vec<BigInt> = Vec::with_capacity(h_len);
        // Invariant at the top of the loop: window = h[j-1] + ... + h[j-m+1].
        let mut window = BigInt::zero();
        for j in 0..d {
            if j < h_len {
                let hj = &self.coeffs[j] - &window;
                window += &hj;
                h.push(hj);
            } else if self.coeffs[j] != window {
                // The quotient would need a coefficient past its degree.
                let rem = self - &Poly::new(h).mul_q_analogue(m as u64);
                return Err(Error::NotDivisible { remainder: rem });
            }
            if j + 1 >= m {
                window -= &h[j + 1 - m];
            }
        }
        Ok(Poly::new(h))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.coeffs.len().max(rhs.coeffs.len()), BigInt::zero());
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Poly::new(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.magnitude();
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !magnitude.is_one() || i == 0;
            if show_coeff {
                write!(f, "{magnitude}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs)
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn q_analogue_values() {
        assert_eq!(Poly::q_analogue(1).unwrap(), Poly::one());
        assert_eq!(Poly::q_analogue(4).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(Poly::q_analogue(4).unwrap().value_at_one(), BigInt::from(4));
        assert!(Poly::q_analogue(0).is_err());
    }

    #[test]
    fn multiplication_is_convolution() {
        // (1 + q + q^2)(1 + q^2) = 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(&p(&[1, 1, 1]) * &p(&[1, 0, 1]), p(&[1, 1, 2, 1, 1]));
        assert_eq!(&p(&[1, 1]) * &Poly::zero(), Poly::zero());
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1]), p(&[1, 0, -1]));
    }

    #[test]
    fn exact_division_recovers_factors() {
        let f = p(&[1, 1, 2, 1, 1]);
        assert_eq!(f.exact_div(&p(&[1, 1, 1])).unwrap(), p(&[1, 0, 1]));
        assert_eq!(f.exact_div(&p(&[1, 0, 1])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(Poly::zero().exact_div(&p(&[1, 1])).unwrap(), Poly::zero());
    }

    #[test]
    fn failed_division_reports_remainder() {
        // Divisor degree exceeds the dividend degree: remainder is the
        // dividend itself.
        match p(&[1, 1]).exact_div(&p(&[1, 1, 1])) {
            Err(Error::NotDivisible { remainder }) => assert_eq!(remainder, p(&[1, 1])),
            other => panic!("expected a not-divisible error, got {other:?}"),
        }
        assert!(p(&[1, 1, 1]).exact_div(&p(&[1, 1])).is_err());
        assert!(p(&[1]).exact_div(&Poly::zero()).is_err());
    }

    #[test]
    fn division_requires_integer_quotients() {
        // (2 + 2q) / 2 works, (1 + 2q) / 2 does not.
        assert_eq!(p(&[2, 2]).exact_div(&p(&[2])).unwrap(), p(&[1, 1]));
        assert!(p(&[1, 2]).exact_div(&p(&[2])).is_err());
    }

    #[test]
    fn content_sums_split_by_exponent_class() {
        let f = p(&[1, 1, 2, 1, 1]);
        let mod5: Vec<BigInt> = f.content_sums(5).unwrap();
        assert_eq!(mod5, [1, 1, 2, 1, 1].map(BigInt::from));
        let mod2 = f.content_sums(2).unwrap();
        assert_eq!(mod2, [4, 2].map(BigInt::from));
        assert_eq!(
            f.content_sums(3).unwrap().iter().sum::<BigInt>(),
            f.value_at_one()
        );
        assert!(f.content_sums(0).is_err());
        assert_eq!(Poly::zero().content_sums(3).unwrap(), [0, 0, 0].map(BigInt::from));
    }

    #[test]
    fn equal_content_matches_divisibility() {
        // [6]_q = [3]_q (1 + q^3): classes mod 3 each sum to 2.
        let six = Poly::q_analogue(6).unwrap();
        assert!(six.has_equal_content(3).unwrap());
        assert!(six.has_equal_content(2).unwrap());
        assert!(six.has_equal_content(6).unwrap());
        assert!(!six.has_equal_content(4).unwrap());
        assert!(!p(&[1, 1, 2, 1, 1]).has_equal_content(5).unwrap());
        // Trivial modulus: one class holding everything.
        assert!(p(&[3, -1]).has_equal_content(1).unwrap());
        // The zero polynomial has equal (zero) content for every modulus.
        assert!(Poly::zero().has_equal_content(4).unwrap());
    }

    #[test]
    fn shifted_moves_all_exponents() {
        assert_eq!(p(&[1, 2]).shifted(2), p(&[0, 0, 1, 2]));
        assert_eq!(Poly::zero().shifted(3), Poly::zero());
    }

    #[test]
    fn window_multiply_matches_convolution() {
        let f = p(&[3, 0, -2, 1]);
        for m in 1..6 {
            let expected = &f * &Poly::q_analogue(m).unwrap();
            assert_eq!(f.mul_q_analogue(m), expected);
        }
    }

    #[test]
    fn window_division_matches_long_division() {
        let f = p(&[3, 0, -2, 1]);
        for m in 1..6 {
            let product = f.mul_q_analogue(m);
            assert_eq!(product.exact_div_q_analogue(m).unwrap(), f);
            assert_eq!(
                product.exact_div(&Poly::q_analogue(m).unwrap()).unwrap(),
                f
            );
        }
        assert!(p(&[1, 0, 1]).exact_div_q_analogue(2).is_err());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[1, 1, 2, 1, 1]).to_string(), "1 + q + 2q^2 + q^3 + q^4");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-q + 3q^3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[-2]).to_string(), "-2");
    }

    fn arb_poly(max_len: usize, max_abs: i64) -> impl Strategy<Value = Poly> {
        prop::collection::vec(-max_abs..=max_abs, 0..=max_len).prop_map(|v| Poly::from_coeffs(&v))
    }

    proptest! {
        #[test]
        fn prop_mul_then_divide_round_trips(f in arb_poly(12, 9), g in arb_poly(12, 9)) {
            prop_assume!(!g.is_zero());
            let product = &f * &g;
            prop_assert_eq!(product.exact_div(&g).unwrap(), f);
        }

        #[test]
        fn prop_content_sums_total_is_value_at_one(f in arb_poly(20, 50), m in 1u64..10) {
            let sums = f.content_sums(m).unwrap();
            prop_assert_eq!(sums.iter().sum::<BigInt>(), f.value_at_one());
        }

        #[test]
        fn prop_equal_content_iff_divisible(g in arb_poly(10, 9), m in 2u64..9) {
            let f = &g * &Poly::q_analogue(m).unwrap();
            prop_assert!(f.has_equal_content(m).unwrap());
            let divisible = f.exact_div(&Poly::q_analogue(m).unwrap()).is_ok();
            prop_assert!(divisible);
        }

        #[test]
        fn prop_analogue_of_multiple_divides(a in 1u64..8, b in 1u64..8) {
            // [ab]_q = [a]_q * (1 + q^a + q^{2a} + ...), so [a]_q | [ab]_q.
            let big = Poly::q_analogue(a * b).unwrap();
            prop_assert!(big.exact_div(&Poly::q_analogue(a).unwrap()).is_ok());
            prop_assert!(big.has_equal_content(a).unwrap());
        }

        #[test]
        fn prop_window_ops_match_general_ops(f in arb_poly(16, 9), m in 1u64..8) {
            let via_window = f.mul_q_analogue(m);
            let via_mul = &f * &Poly::q_analogue(m).unwrap();
            prop_assert_eq!(&via_window, &via_mul);
            prop_assert_eq!(via_window.exact_div_q_analogue(m).unwrap(), f);
        }
    }
}
