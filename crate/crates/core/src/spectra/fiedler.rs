//! Exact enclosure of the algebraic connectivity.
//!
//! The Laplacian characteristic polynomial is real-rooted, so Descartes'
//! rule of signs is exact for it: after shifting the variable by `a`, the
//! number of sign changes equals the number of roots greater than `a`.
//! Bisection on that count encloses the second smallest root with rational
//! endpoints and no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

/// Decimal view of an interval for reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalSummary {
    pub lo: String,
    pub hi: String,
    pub lo_approx: f64,
    pub hi_approx: f64,
}

impl RationalInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Display only; decisions never read the approximations.
    pub fn summary(&self) -> IntervalSummary {
        IntervalSummary {
            lo: self.lo.to_string(),
            hi: self.hi.to_string(),
            lo_approx: approx(&self.lo),
            hi_approx: approx(&self.hi),
        }
    }
}

fn approx(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Default bisection tolerance, `2^-20`.
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 20u32)
}

/// Root counts of a real-rooted polynomial relative to a rational point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootCounts {
    pub below: usize,
    pub at: usize,
    pub above: usize,
}

/// Count roots of `p` below, at and above `a`, with multiplicity.
/// `p` must be real-rooted (e.g. the characteristic polynomial of a
/// symmetric matrix); otherwise `above` is only an upper bound.
pub fn root_counts(p: &IntPolynomial, a: &BigRational) -> RootCounts {
    let n = p.degree().unwrap_or(0);
    let (num, den) = (a.numer(), a.denom());
    // S(z) = sum c_i den^{n-i} (z + num)^i has roots den * (lambda - a)
    let mut acc: Vec<BigInt> = Vec::with_capacity(n + 1);
    let mut den_pow = BigInt::one();
    for c in p.coeffs().iter().rev() {
        // acc <- acc * (z + num) + c * den^{n-i}
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, x) in acc.iter().enumerate() {
            next[i] += x * num;
            next[i + 1] += x;
        }
        next[0] += c * &den_pow;
        den_pow *= den;
        acc = next;
    }
    let at = acc.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut changes = 0;
    let mut last_neg: Option<bool> = None;
    for c in &acc[at..] {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if last_neg.is_some_and(|l| l != neg) {
            changes += 1;
        }
        last_neg = Some(neg);
    }
    RootCounts {
        below: n - at - changes,
        at,
        above: changes,
    }
}

/// Enclose the second smallest root of a Laplacian characteristic
/// polynomial. `upper` must bound every root (e.g. twice the maximum degree).
pub fn second_smallest_root(
    p: &IntPolynomial,
    upper: &BigRational,
    tol: &BigRational,
) -> Result<RationalInterval> {
    let n = p.degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::invalid(
            "need at least 2 vertices for the second eigenvalue",
        ));
    }
    if !tol.is_positive() {
        return Err(Error::invalid("tolerance must be positive"));
    }
    let zero = BigRational::zero();
    let at_zero = root_counts(p, &zero);
    if at_zero.below + at_zero.at >= 2 {
        // disconnected (or a negative root, impossible for a Laplacian)
        return Ok(RationalInterval {
            lo: zero.clone(),
            hi: zero,
        });
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let mut lo = zero;
    let mut hi = upper.clone();
    let top = root_counts(p, &hi);
    if top.below + top.at < 2 {
        return Err(Error::invalid("upper bound does not enclose two roots"));
    }
    // invariant: fewer than 2 roots <= lo, at least 2 roots <= hi
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        let c = root_counts(p, &mid);
        if c.below >= 2 {
            hi = mid;
        } else if c.below + c.at >= 2 {
            return Ok(RationalInterval {
                lo: mid.clone(),
                hi: mid,
            });
        } else {
            lo = mid;
        }
    }
    Ok(RationalInterval { lo, hi })
}
