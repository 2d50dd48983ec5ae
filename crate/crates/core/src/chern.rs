//! Intersection arithmetic on `P^n` for `n <= 3`: Chern classes and
//! characters as truncated series in the hyperplane class `H`, the Todd
//! class, the Euler pairing `χ(E, F) = ∫ ch(E)^∨ · ch(F) · td`, and the
//! length `φ(d, n)` of the singular scheme of a generic distribution.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{q, Q};

/// Largest ambient dimension handled by the class/character conversion.
pub const MAX_DIM: usize = 3;

fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        return Err(Error::Unsupported(format!(
            "Chern arithmetic is implemented on P^n for n <= {MAX_DIM}, got n = {n}"
        )));
    }
    Ok(())
}

/// A class `Σ a_k H^k` in the rational Chow ring of `P^n`, stored as
/// `(a_0, …, a_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernCharacter {
    n: usize,
    coeffs: Vec<Q>,
}

impl ChernCharacter {
    /// Truncate or zero-pad `coeffs` to length `n + 1`.
    pub fn new(n: usize, coeffs: &[Q]) -> Self {
        let mut c: Vec<Q> = coeffs.iter().take(n + 1).cloned().collect();
        c.resize(n + 1, Q::zero());
        ChernCharacter { n, coeffs: c }
    }

    pub fn from_integers(n: usize, coeffs: &[i64]) -> Self {
        let c: Vec<Q> = coeffs.iter().map(|&a| q(a)).collect();
        Self::new(n, &c)
    }

    /// `ch(O(k)) = e^{kH}`.
    pub fn line_bundle(n: usize, k: i64) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut term = Q::one();
        for i in 0..=n {
            coeffs.push(term.clone());
            term = term * q(k) / q(i as i64 + 1);
        }
        ChernCharacter { n, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Q {
        &self.coeffs[k]
    }

    pub fn rank(&self) -> &Q {
        &self.coeffs[0]
    }

    /// The degree-`n` coefficient: the integral over `P^n`.
    pub fn integral(&self) -> &Q {
        &self.coeffs[self.n]
    }

    /// Truncated product.
    pub fn mul(&self, other: &ChernCharacter) -> Result<ChernCharacter> {
        if self.n != other.n {
            return Err(Error::Precondition(format!(
                "classes live on P^{} and P^{}",
                self.n, other.n
            )));
        }
        let mut coeffs = vec![Q::zero(); self.n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().take(self.n + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(ChernCharacter { n: self.n, coeffs })
    }

    pub fn add(&self, other: &ChernCharacter) -> Result<ChernCharacter> {
        if self.n != other.n {
            return Err(Error::Precondition(format!(
                "classes live on P^{} and P^{}",
                self.n, other.n
            )));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(ChernCharacter { n: self.n, coeffs })
    }

    pub fn scale(&self, c: &Q) -> ChernCharacter {
        ChernCharacter {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `ch(E ⊗ O(k)) = ch(E) · e^{kH}`.
    pub fn twist(&self, k: i64) -> ChernCharacter {
        self.mul(&ChernCharacter::line_bundle(self.n, k))
            .expect("same ambient dimension")
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(Q::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Rank and Chern classes `(c_1, …, c_m)` of a coherent sheaf. Classes
/// beyond the rank are kept: reflexive rank-2 sheaves on `P^3` carry a
/// nonzero `c_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernClassVector {
    pub rank: Q,
    pub classes: Vec<Q>,
}

impl ChernClassVector {
    pub fn new(rank: i64, classes: &[i64]) -> Self {
        ChernClassVector {
            rank: q(rank),
            classes: classes.iter().map(|&c| q(c)).collect(),
        }
    }

    /// `c_k`, with `c_0 = 1` and zero past the stored classes.
    pub fn class(&self, k: usize) -> Q {
        match k {
            0 => Q::one(),
            _ => self.classes.get(k - 1).cloned().unwrap_or_else(Q::zero),
        }
    }
}

impl fmt::Display for ChernClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.classes.iter().map(Q::to_string).collect();
        write!(f, "rank {}, c = ({})", self.rank, parts.join(", "))
    }
}

/// Newton's identities through degree three.
pub fn chern_to_character(c: &ChernClassVector, n: usize) -> Result<ChernCharacter> {
    check_dim(n)?;
    let (c1, c2, c3) = (c.class(1), c.class(2), c.class(3));
    let all = [
        c.rank.clone(),
        c1.clone(),
        (&c1 * &c1 - q(2) * &c2) / q(2),
        (&c1 * &c1 * &c1 - q(3) * &c1 * &c2 + q(3) * &c3) / q(6),
    ];
    Ok(ChernCharacter::new(n, &all))
}

/// Inverse of [`chern_to_character`]: classes `(c_1, …, c_n)`.
pub fn character_to_chern(ch: &ChernCharacter) -> Result<ChernClassVector> {
    check_dim(ch.n)?;
    let get = |k: usize| ch.coeffs.get(k).cloned().unwrap_or_else(Q::zero);
    let c1 = get(1);
    let c2 = (&c1 * &c1 - q(2) * get(2)) / q(2);
    let c3 = (q(6) * get(3) - &c1 * &c1 * &c1 + q(3) * &c1 * &c2) / q(3);
    let mut classes = vec![c1, c2, c3];
    classes.truncate(ch.n);
    Ok(ChernClassVector {
        rank: ch.rank().clone(),
        classes,
    })
}

/// `ch(E^∨)`: sign flip on the odd-degree components.
pub fn character_dual(ch: &ChernCharacter) -> ChernCharacter {
    let coeffs = ch
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, a)| if k % 2 == 1 { -a.clone() } else { a.clone() })
        .collect();
    ChernCharacter { n: ch.n, coeffs }
}

/// `td(P^n) = (H / (1 − e^{−H}))^{n+1}`, truncated at `H^n`.
pub fn todd_projective(n: usize) -> Result<ChernCharacter> {
    check_dim(n)?;
    // (1 − e^{−H}) / H = Σ (−1)^k H^k / (k+1)!; invert the series.
    let mut denom = Vec::with_capacity(n + 1);
    let mut fact = Q::one();
    for k in 0..=n {
        fact *= q(k as i64 + 1);
        let term = Q::one() / &fact;
        denom.push(if k % 2 == 1 { -term } else { term });
    }
    let mut inv = vec![Q::zero(); n + 1];
    inv[0] = Q::one();
    for k in 1..=n {
        let mut s = Q::zero();
        for j in 1..=k {
            s += &denom[j] * &inv[k - j];
        }
        inv[k] = -s;
    }
    let base = ChernCharacter { n, coeffs: inv };
    let mut td = ChernCharacter::line_bundle(n, 0);
    for _ in 0..=n {
        td = td.mul(&base)?;
    }
    Ok(td)
}

/// `χ(E, F) = Σ (−1)^k dim Ext^k(E, F) = ∫ ch(E)^∨ · ch(F) · td(P^n)`.
pub fn chi_pair(ch_e: &ChernCharacter, ch_f: &ChernCharacter, n: usize) -> Result<Q> {
    if ch_e.n != n || ch_f.n != n {
        return Err(Error::Precondition(format!(
            "characters live on P^{} and P^{}, pairing requested on P^{n}",
            ch_e.n, ch_f.n
        )));
    }
    let product = character_dual(ch_e).mul(ch_f)?.mul(&todd_projective(n)?)?;
    Ok(product.integral().clone())
}

/// `dim Hom(E, F) = χ(E, F) + dim Ext^1(E, F)` when the higher Ext groups
/// vanish.
pub fn dim_hom(chi: &Q, ext1: u64) -> Q {
    chi + q(ext1 as i64)
}

/// `φ(d, n) = ((d+1)^{n+1} − (−1)^{n+1}) / (d+2)`.
pub fn phi(d: u32, n: u32) -> BigInt {
    let num = BigInt::from(d + 1).pow(n + 1) - BigInt::from(-1).pow(n + 1);
    num / BigInt::from(d + 2)
}

/// `φ(d, n)` as `∫ c_n(Ω^1(d+2))`, with `c(Ω^1) = (1 − H)^{n+1}` from the
/// Euler sequence and the twist formula for a rank-`n` bundle.
pub fn phi_top_chern(d: u32, n: u32) -> BigInt {
    let l = BigInt::from(d + 2);
    let rank = n;
    // c_n(E ⊗ L) = Σ_i c_i(E) · C(rank − i, n − i) · c_1(L)^{n−i}
    (0..=n)
        .map(|i| {
            let ci = BigInt::from(-1).pow(i) * binomial(BigInt::from(n + 1), BigInt::from(i));
            let coefficient = binomial(BigInt::from(rank - i), BigInt::from(n - i));
            ci * coefficient * l.pow(n - i)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qf;

    #[test]
    fn newton_identities_round_trip() {
        let c = ChernClassVector::new(2, &[1, 2, 2]);
        let ch = chern_to_character(&c, 3).unwrap();
        assert_eq!(ch.coeffs(), &[q(2), q(1), qf(-3, 2), qf(1, 6)]);
        assert_eq!(character_to_chern(&ch).unwrap(), c);
    }

    #[test]
    fn todd_of_the_line() {
        assert_eq!(todd_projective(1).unwrap().coeffs(), &[q(1), q(1)]);
    }
}
