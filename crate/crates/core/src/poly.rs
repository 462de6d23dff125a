//! Dense integer polynomials with overflow-checked arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients indexed by degree, trailing zeros trimmed. The zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPolynomial {
    coefficients: Vec<i64>,
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::CoefficientOverflow)
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `x^n − 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = -1;
        c[n] += 1;
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> i64 {
        self.coefficients.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coefficients.last() == Some(&1)
    }

    /// Sum of absolute coefficient values.
    pub fn l1_norm(&self) -> i128 {
        self.coefficients.iter().map(|&c| (c as i128).abs()).sum()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coefficients.len() + other.coefficients.len() - 1;
        let mut acc = vec![0i128; n];
        for (i, &a) in self.coefficients.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coefficients.iter().enumerate() {
                acc[i + j] = acc[i + j]
                    .checked_add(a as i128 * b as i128)
                    .ok_or(Error::CoefficientOverflow)?;
            }
        }
        Ok(Self::new(
            acc.into_iter().map(narrow).collect::<Result<_>>()?,
        ))
    }

    /// Quotient and remainder by a monic divisor, exact over Z.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = match divisor.degree() {
            Some(d) if d >= 1 && divisor.is_monic() => d,
            _ => return Err(Error::NotMonic),
        };
        let mut rem: Vec<i128> = self.coefficients.iter().map(|&c| c as i128).collect();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![0i64; rem.len() - dd];
        let dc = &divisor.coefficients;
        for top in (dd..rem.len()).rev() {
            let q = rem[top];
            if q == 0 {
                continue;
            }
            quot[top - dd] = narrow(q)?;
            let shift = top - dd;
            for (j, &c) in dc.iter().enumerate().take(dd) {
                if c != 0 {
                    let t = q.checked_mul(c as i128).ok_or(Error::CoefficientOverflow)?;
                    rem[shift + j] = rem[shift + j]
                        .checked_sub(t)
                        .ok_or(Error::CoefficientOverflow)?;
                }
            }
            rem[top] = 0;
        }
        rem.truncate(dd);
        let rem = rem.into_iter().map(narrow).collect::<Result<Vec<_>>>()?;
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of a division that must be exact; `None` if a remainder is left.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Folds exponents modulo `n`, i.e. reduces modulo `x^n − 1`.
    pub fn fold(&self, n: usize) -> Result<Self> {
        let mut c = vec![0i64; n.min(self.coefficients.len())];
        for (i, &a) in self.coefficients.iter().enumerate() {
            let slot = &mut c[i % n];
            *slot = slot.checked_add(a).ok_or(Error::CoefficientOverflow)?;
        }
        Ok(Self::new(c))
    }
}

/// Remainder of `p` modulo the monic polynomial `d`.
pub fn reduce_mod(p: &IntPolynomial, d: &IntPolynomial) -> Result<IntPolynomial> {
    Ok(p.div_rem(d)?.1)
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{a}x^{i}")?,
            }
        }
        Ok(())
    }
}
