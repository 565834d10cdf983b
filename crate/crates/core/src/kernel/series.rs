//! Truncated Laurent series in one variable `t` with exact coefficients.
//!
//! A series is `t^val * (c_0 + c_1 t + ... + c_{r-1} t^{r-1}) + O(t^{val + r})`.
//! The absolute precision `val + r` is tracked through every operation, and
//! reading a coefficient at or beyond it is an error rather than a silent zero.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use super::poly::Poly;
use super::rat::{fmt_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series precision exhausted (needed t^{needed}, known below t^{known})")]
    PrecisionExhausted { needed: i64, known: i64 },
    #[error("square root of a series with odd valuation {0}")]
    OddValuation(i64),
    #[error("leading coefficient is not the square of the requested branch")]
    LeadingNotSquareOfBranch,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentSeries {
    val: i64,
    coeffs: Vec<Rat>,
}

impl LaurentSeries {
    /// Builds `t^val * Σ coeffs[i] t^i + O(t^{val + coeffs.len()})`,
    /// shifting away leading zeros.
    pub fn new(val: i64, coeffs: Vec<Rat>) -> Self {
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        LaurentSeries {
            val: val + lead as i64,
            coeffs: coeffs.into_iter().skip(lead).collect(),
        }
    }

    /// `O(t^abs)`.
    pub fn zero(abs: i64) -> Self {
        LaurentSeries {
            val: abs,
            coeffs: Vec::new(),
        }
    }

    pub fn one(abs: i64) -> Self {
        Self::constant(Rat::one(), abs)
    }

    pub fn constant(c: Rat, abs: i64) -> Self {
        Self::from_poly(&Poly::constant(c), abs)
    }

    /// Polynomial in `t`, truncated to `O(t^abs)`.
    pub fn from_poly(p: &Poly, abs: i64) -> Self {
        let n = abs.max(0) as usize;
        LaurentSeries::new(0, (0..n).map(|i| p.coeff(i)).collect())
    }

    /// Expansion of `num / den` at `t = 0`, known through `O(t^abs)`.
    pub fn from_ratio(num: &Poly, den: &Poly, abs: i64) -> Result<Self, SeriesError> {
        let dv = den.coeffs().iter().take_while(|c| c.is_zero()).count() as i64;
        let nv = num.coeffs().iter().take_while(|c| c.is_zero()).count() as i64;
        if num.is_zero() {
            return Ok(LaurentSeries::zero(abs));
        }
        // relative precision needed for the quotient to reach `abs`
        let rel = abs - (nv - dv);
        if rel <= 0 {
            return Ok(LaurentSeries::zero(abs));
        }
        let n = LaurentSeries::from_poly(num, nv + rel);
        let d = LaurentSeries::from_poly(den, dv + rel);
        n.div(&d)
    }

    /// Valuation, or `None` if no nonzero coefficient is known.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    /// Exponent below which every coefficient is known.
    pub fn abs_precision(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    /// Number of known coefficients starting at the valuation.
    pub fn rel_precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero_known(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.first()
    }

    /// Coefficient of `t^n`.
    pub fn coeff(&self, n: i64) -> Result<Rat, SeriesError> {
        if n >= self.abs_precision() {
            return Err(SeriesError::PrecisionExhausted {
                needed: n,
                known: self.abs_precision(),
            });
        }
        if n < self.val {
            return Ok(Rat::zero());
        }
        Ok(self.coeffs[(n - self.val) as usize].clone())
    }

    /// Drops everything at and above `t^abs`.
    pub fn truncate(&self, abs: i64) -> Self {
        if abs >= self.abs_precision() {
            return self.clone();
        }
        if abs <= self.val {
            return LaurentSeries::zero(abs);
        }
        LaurentSeries::new(self.val, self.coeffs[..(abs - self.val) as usize].to_vec())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            val: self.val + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentSeries::zero(self.abs_precision());
        }
        LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let abs = self.abs_precision().min(rhs.abs_precision());
        let lo = self.val.min(rhs.val).min(abs);
        let coeffs = (lo..abs)
            .map(|n| self.coeff(n).unwrap() + rhs.coeff(n).unwrap())
            .collect();
        LaurentSeries::new(lo, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        match (self.valuation(), rhs.valuation()) {
            (None, None) => LaurentSeries::zero(self.val + rhs.val),
            (None, Some(v)) => LaurentSeries::zero(self.val + v),
            (Some(v), None) => LaurentSeries::zero(rhs.val + v),
            (Some(va), Some(vb)) => {
                let r = self.coeffs.len().min(rhs.coeffs.len());
                let mut out = vec![Rat::zero(); r];
                for (i, a) in self.coeffs.iter().take(r).enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in rhs.coeffs.iter().take(r - i).enumerate() {
                        out[i + j] += a * b;
                    }
                }
                LaurentSeries::new(va + vb, out)
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentSeries::one(self.rel_precision().max(1) as i64);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; fails when no nonzero coefficient is known.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let v = self.valuation().ok_or(SeriesError::PrecisionExhausted {
            needed: self.val,
            known: self.abs_precision(),
        })?;
        let r = self.coeffs.len();
        let c0inv = self.coeffs[0].recip();
        let mut out: Vec<Rat> = Vec::with_capacity(r);
        out.push(c0inv.clone());
        for n in 1..r {
            let mut s = Rat::zero();
            for k in 1..=n {
                s += &self.coeffs[k] * &out[n - k];
            }
            out.push(-s * &c0inv);
        }
        Ok(LaurentSeries::new(-v, out))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// Square root whose leading coefficient is `branch`.
    pub fn sqrt(&self, branch: &Rat) -> Result<Self, SeriesError> {
        let v = self.valuation().ok_or(SeriesError::PrecisionExhausted {
            needed: self.val,
            known: self.abs_precision(),
        })?;
        if v % 2 != 0 {
            return Err(SeriesError::OddValuation(v));
        }
        if branch.is_zero() || branch * branch != self.coeffs[0] {
            return Err(SeriesError::LeadingNotSquareOfBranch);
        }
        let r = self.coeffs.len();
        let two_b_inv = (branch + branch).recip();
        let mut out: Vec<Rat> = Vec::with_capacity(r);
        out.push(branch.clone());
        for n in 1..r {
            let mut s = self.coeffs[n].clone();
            for j in 1..n {
                s -= &out[j] * &out[n - j];
            }
            out.push(s * &two_b_inv);
        }
        Ok(LaurentSeries::new(v / 2, out))
    }
}

/// Square root with a prescribed leading coefficient.
pub fn series_sqrt(s: &LaurentSeries, branch: &Rat) -> Result<LaurentSeries, SeriesError> {
    s.sqrt(branch)
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write!(f, "({})t^{} + ", fmt_rat(c), self.val + i as i64)?;
        }
        write!(f, "O(t^{})", self.abs_precision())
    }
}
