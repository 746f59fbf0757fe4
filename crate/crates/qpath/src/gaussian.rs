//! Gaussian binomial coefficients and q-Catalan numbers.
//!
//! The Gaussian binomial `gauss(n, k)` is the generating polynomial for
//! northeast lattice paths from (0,0) to (k, n-k) by enclosed area: the
//! coefficient of `q^j` counts the paths of area j. Equivalently it is the
//! inversion generating function of binary words with k zeros and n-k
//! ones. Setting q = 1 recovers C(n, k).
//!
//! Two independent routes compute it:
//!
//! * [`gauss_binom`] runs the Pascal-style recurrence
//!   `gauss(n, k) = q^(n-k) gauss(n-1, k-1) + gauss(n-1, k)`
//!   bottom-up. This is the primary route.
//! * [`gauss_binom_product`] evaluates `[n]_q! / ([k]_q! [n-k]_q!)` by
//!   exact division, and exists to cross-check the first.
//!
//! For central coefficients `gauss(2n, n)` there is also an incremental
//! chain ([`central_binomials`]) based on the factorization
//! `gauss(2n, n) = (1 + q^n) [2n-1]_q (gauss(2n-2, n-1) / [n]_q)`,
//! cheap enough to sweep n into the hundreds. The quotient in parentheses
//! is the q-Catalan number.

use crate::error::Result;
use crate::poly::Poly;

/// The Gaussian binomial coefficient as a polynomial in `q`; zero when k
/// is outside `[0, n]`.
///
/// Computed by the area recurrence: splitting paths to (k, n-k) on their
/// first step, a path starting east leaves `gauss(n-1, k-1)` shifted by
/// `q^(n-k)` (that east step passes under all n-k norths), and a path
/// starting north leaves `gauss(n-1, k)`. The symmetry `gauss(n, k) =
/// gauss(n, n-k)` halves the table before the sweep starts.
pub fn gauss_binom(n: u32, k: i64) -> Poly {
    if k < 0 || k > n as i64 {
        return Poly::zero();
    }
    let k = (k as u32).min(n - k as u32);
    if k == 0 {
        return Poly::one();
    }
    // Rolling rows r = 0..=n, keeping entries k' that can still reach
    // (n, k): k - (n - r) <= k' <= min(k, r).
    let lo = |r: u32| k.saturating_sub(n - r);
    let hi = |r: u32| k.min(r);
    let mut prev: Vec<Poly> = vec![Poly::one()];
    for r in 1..=n {
        let mut row = Vec::with_capacity((hi(r) - lo(r) + 1) as usize);
        for kk in lo(r)..=hi(r) {
            let above = if kk >= lo(r - 1) && kk <= hi(r - 1) {
                prev[(kk - lo(r - 1)) as usize].clone()
            } else {
                Poly::zero()
            };
            let entry = if kk == 0 {
                above
            } else {
                let diag = if kk > lo(r - 1) && kk - 1 <= hi(r - 1) {
                    prev[(kk - 1 - lo(r - 1)) as usize].shifted((r - kk) as usize)
                } else {
                    Poly::zero()
                };
                &diag + &above
            };
            row.push(entry);
        }
        prev = row;
    }
    debug_assert_eq!(prev.len(), 1);
    prev.pop().unwrap()
}

/// The same coefficient through the factorial product formula: all
/// numerator factors `[1]_q ... [n]_q` are accumulated first, then each
/// denominator factor is divided out one at a time. Every intermediate
/// quotient is again a polynomial, so each division is exact; a failed
/// division here would mean the arithmetic itself is broken.
pub fn gauss_binom_product(n: u32, k: u32) -> Poly {
    assert!(k <= n, "gauss_binom_product needs 0 <= k <= n");
    let mut acc = Poly::one();
    for i in 1..=n as u64 {
        acc = acc.mul_q_analogue(i);
    }
    for i in (1..=k as u64).chain(1..=(n - k) as u64) {
        acc = acc
            .exact_div_q_analogue(i)
            .unwrap_or_else(|_| panic!("factorial quotient left the polynomial ring at [{i}]_q"));
    }
    acc
}

/// Central Gaussian binomials `gauss(2n, n)` for n = 1, 2, ... via the
/// incremental factorization chain. Each step costs one exact division
/// and two window multiplications, all linear in the degree n^2, so the
/// iterator comfortably reaches n in the hundreds.
pub fn central_binomials() -> CentralBinomials {
    CentralBinomials { n: 0, current: Poly::one() }
}

pub struct CentralBinomials {
    n: u64,
    current: Poly,
}

impl Iterator for CentralBinomials {
    /// `(n, gauss(2n, n))`
    type Item = (u64, Poly);

    fn next(&mut self) -> Option<Self::Item> {
        self.n += 1;
        let n = self.n;
        let catalan = self
            .current
            .exact_div_q_analogue(n)
            .expect("gauss(2n-2, n-1) is divisible by [n]_q");
        let widened = catalan.mul_q_analogue(2 * n - 1);
        self.current = &widened + &widened.shifted(n as usize);
        Some((n, self.current.clone()))
    }
}

/// `gauss(2n, n)` through the chain; equal to `gauss_binom(2n, n)` but
/// usable far beyond where the full Pascal sweep is economical.
pub fn gauss_binom_central(n: u32) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    central_binomials()
        .nth(n as usize - 1)
        .expect("chain is infinite")
        .1
}

/// The q-Catalan number `gauss(2n, n) / [n+1]_q`, always a polynomial
/// with nonnegative coefficients.
pub fn q_catalan(n: u32) -> Poly {
    assert!(n >= 1, "q-Catalan numbers start at n = 1");
    gauss_binom(2 * n, n as i64)
        .exact_div(&Poly::q_analogue(n as u64 + 1).expect("n + 1 >= 2"))
        .expect("gauss(2n, n) is divisible by [n+1]_q")
}

/// Outcome of the three identity checks tying the central column together
/// at one n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QIdentityReport {
    pub n: u32,
    /// `gauss(2n, n) = (1 + q^n) [2n-1]_q (gauss(2n-2, n-1) / [n]_q)`
    pub factorization_holds: bool,
    /// `gauss(2n, n) / [n+1]_q = gauss(2n, n) - q gauss(2n, n+1)`
    pub catalan_identity_holds: bool,
    /// `[2n-1]_q` divides `gauss(2n, n)`
    pub central_divisible: bool,
}

impl QIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.factorization_holds && self.catalan_identity_holds && self.central_divisible
    }
}

/// Checks the three central-column identities at one n, computing every
/// side from the Pascal recurrence so the checks stay independent of the
/// incremental chain that assumes them.
pub fn verify_q_identities(n: u32) -> Result<QIdentityReport> {
    assert!(n >= 1, "identity checks start at n = 1");
    let central = gauss_binom(2 * n, n as i64);

    let factorization_holds = {
        let prev = gauss_binom(2 * n - 2, n as i64 - 1);
        match prev.exact_div(&Poly::q_analogue(n as u64)?) {
            Ok(catalan) => {
                let widened = &catalan * &Poly::q_analogue(2 * n as u64 - 1)?;
                central == &widened + &widened.shifted(n as usize)
            }
            Err(_) => false,
        }
    };

    let catalan_identity_holds = {
        match central.exact_div(&Poly::q_analogue(n as u64 + 1)?) {
            Ok(c) => {
                let rhs = &central - &gauss_binom(2 * n, n as i64 + 1).shifted(1);
                c == rhs
            }
            Err(_) => false,
        }
    };

    let central_divisible = central
        .exact_div(&Poly::q_analogue(2 * n as u64 - 1)?)
        .is_ok();

    Ok(QIdentityReport {
        n,
        factorization_holds,
        catalan_identity_holds,
        central_divisible,
    })
}
