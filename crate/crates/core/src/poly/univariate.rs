use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{PolyError, Q};

/// Dense univariate rational polynomial, coefficients from degree 0 upward.
/// Used for Hilbert polynomials and the squarefree test.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        UniPoly::new(vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        UniPoly::new(vec![Q::zero(), Q::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
                        + other.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Q {
        self.eval(&Q::from_integer(x.into()))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Q::from_integer((i as i64).into()))
                .collect(),
        )
    }

    /// Division with remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lc;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * b;
            }
            quot[k] = c;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// No repeated factor over an algebraic closure: `gcd(f, f')` is constant.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `binom(t + a, n)` as a polynomial in `t`.
    pub fn binomial_shift(a: i64, n: usize) -> UniPoly {
        let mut acc = UniPoly::constant(Q::one());
        for k in 1..=n {
            // factor (t + a - k + 1) / k
            let lin = UniPoly::new(vec![Q::from_integer((a - k as i64 + 1).into()), Q::one()]);
            acc = acc.mul(&lin).scale(&Q::new(BigInt::one(), BigInt::from(k)));
        }
        acc
    }

    /// Parse an expression in the single variable `t`, e.g. `3*t + 1`.
    pub fn parse(src: &str) -> Result<UniPoly, PolyError> {
        let ring = super::Ring::grevlex(&["t"])?;
        let p = super::parse_poly(src, &ring)?;
        let deg = p.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Q::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.degree() as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let p = UniPoly::from_ints(&[1, 3]);
        assert_eq!(p.to_string(), "3*t + 1");
        assert_eq!(UniPoly::parse("3*t + 1").unwrap(), p);
        assert_eq!(UniPoly::parse("5").unwrap().to_string(), "5");
        assert_eq!(UniPoly::from_ints(&[3, 1]).to_string(), "t + 3");
    }

    #[test]
    fn binomials() {
        // binom(t + 3, 3) at t = 2 is 10
        assert_eq!(UniPoly::binomial_shift(3, 3).eval_int(2), Q::from_integer(10.into()));
        // binom(t + 1, 3) at t = 4 is 10
        assert_eq!(UniPoly::binomial_shift(1, 3).eval_int(4), Q::from_integer(10.into()));
    }

    #[test]
    fn squarefree() {
        // (t-1)(t-2)
        assert!(UniPoly::from_ints(&[2, -3, 1]).is_squarefree());
        // (t-1)^2
        assert!(!UniPoly::from_ints(&[1, -2, 1]).is_squarefree());
        let g = UniPoly::from_ints(&[2, -3, 1]).gcd(&UniPoly::from_ints(&[-1, 1]));
        assert_eq!(g, UniPoly::from_ints(&[-1, 1]));
    }
}
