use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, lowest power
/// first. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    #[serde(with = "decimal_coeffs")]
    coeffs: Vec<BigInt>,
}

mod decimal_coeffs {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(c.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Largest `t` with `x^t | p`.
    pub fn zero_root_multiplicity(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::invalid("zero polynomial has no root multiplicity"))
    }

    /// True iff `p(-x) = ±p(x)`: every coefficient whose power has the
    /// opposite parity to the degree vanishes.
    pub fn spectrum_symmetric(&self) -> bool {
        match self.degree() {
            None => true,
            Some(n) => self
                .coeffs
                .iter()
                .enumerate()
                .all(|(i, c)| (n - i) % 2 == 0 || c.is_zero()),
        }
    }

    /// `(-1)^n p(d - x)`. For a `d`-regular graph this maps the adjacency
    /// characteristic polynomial to the Laplacian one.
    pub fn reflect_shift(&self, d: i64) -> IntPolynomial {
        let n = match self.degree() {
            None => return self.clone(),
            Some(n) => n,
        };
        // Horner in the variable (d - x)
        let mut acc: Vec<BigInt> = Vec::with_capacity(n + 1);
        let d = BigInt::from(d);
        for c in self.coeffs.iter().rev() {
            // acc <- acc * (d - x) + c
            let mut next = vec![BigInt::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i] += a * &d;
                next[i + 1] -= a;
            }
            next[0] += c;
            acc = next;
        }
        if n % 2 == 1 {
            for c in &mut acc {
                *c = -c.clone();
            }
        }
        IntPolynomial::new(acc)
    }

    /// Evaluate at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn decimal_coefficients(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Stable display digest: first 16 hex digits of SHA-256 over the
    /// comma-joined decimal coefficients (lowest power first).
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.decimal_coefficients().join(",").as_bytes());
        h.finalize()[..8]
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Bits of the largest coefficient magnitude.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().bits())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}
