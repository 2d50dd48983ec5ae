use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::polynomial::{format_monomial, Polynomial};
use super::ring::RingRef;
use super::{PolyError, Q};

/// Polynomial whose coefficients are affine-linear in the ring's parameter
/// block: `p = p_const + t0 * p_0 + ... + tk * p_k`, each part a
/// parameter-free [`Polynomial`].
#[derive(Clone, PartialEq, Eq)]
pub struct ParamPoly {
    ring: RingRef,
    /// `parts[0]` is the constant part, `parts[k + 1]` multiplies `t_k`.
    parts: Vec<Polynomial>,
}

impl ParamPoly {
    pub fn zero(ring: &RingRef) -> Self {
        ParamPoly {
            ring: ring.clone(),
            parts: vec![Polynomial::zero(ring); ring.nparams() + 1],
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        let ring = p.ring().clone();
        let mut out = ParamPoly::zero(&ring);
        out.parts[0] = p;
        out
    }

    /// The parameter `t_k` itself.
    pub fn param(ring: &RingRef, k: usize) -> Self {
        let mut out = ParamPoly::zero(ring);
        out.parts[k + 1] = Polynomial::one(ring);
        out
    }

    /// Assemble from a constant part and one part per parameter.
    pub fn from_parts(ring: &RingRef, parts: Vec<Polynomial>) -> Result<Self, PolyError> {
        if parts.len() != ring.nparams() + 1 {
            return Err(PolyError::ParamCount {
                expected: ring.nparams(),
                got: parts.len().saturating_sub(1),
            });
        }
        let parts = parts
            .into_iter()
            .map(|p| p.rebase(ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ParamPoly {
            ring: ring.clone(),
            parts,
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn constant_part(&self) -> &Polynomial {
        &self.parts[0]
    }

    /// Coefficient polynomial of `t_k`.
    pub fn param_part(&self, k: usize) -> &Polynomial {
        &self.parts[k + 1]
    }

    pub fn parts(&self) -> &[Polynomial] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Polynomial::is_zero)
    }

    pub fn is_parameter_free(&self) -> bool {
        self.parts[1..].iter().all(Polynomial::is_zero)
    }

    /// The parameter-free polynomial, if no parameter occurs.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_parameter_free().then(|| &self.parts[0])
    }

    /// Degree shared by all nonzero parts, if they are homogeneous of one
    /// common degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for p in self.parts.iter().filter(|p| !p.is_zero()) {
            let d = p.homogeneous_degree()?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check(&self, other: &ParamPoly) -> Result<(), PolyError> {
        if self.ring.compatible(&other.ring) && self.ring.nparams() == other.ring.nparams() {
            Ok(())
        } else {
            Err(PolyError::RingMismatch {
                left: self.ring.header(),
                right: other.ring.header(),
            })
        }
    }

    pub fn try_add(&self, other: &ParamPoly) -> Result<ParamPoly, PolyError> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &ParamPoly) -> Result<ParamPoly, PolyError> {
        self.check(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &ParamPoly, f: impl Fn(&Polynomial, &Polynomial) -> Polynomial) -> ParamPoly {
        ParamPoly {
            ring: self.ring.clone(),
            parts: self
                .parts
                .iter()
                .zip(other.parts.iter())
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> ParamPoly {
        self.map(|p| -p)
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> ParamPoly {
        ParamPoly {
            ring: self.ring.clone(),
            parts: self.parts.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> ParamPoly {
        self.map(|p| p.scale(c))
    }

    pub fn mul_poly(&self, g: &Polynomial) -> Result<ParamPoly, PolyError> {
        let g = g.rebase(&self.ring)?;
        Ok(self.map(|p| p * &g))
    }

    /// Product; at most one factor may depend on parameters, otherwise the
    /// result would be quadratic in them.
    pub fn try_mul(&self, other: &ParamPoly) -> Result<ParamPoly, PolyError> {
        self.check(other)?;
        match (self.as_polynomial(), other.as_polynomial()) {
            (Some(a), _) => other.mul_poly(a),
            (_, Some(b)) => self.mul_poly(b),
            _ => Err(PolyError::QuadraticParameters),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> ParamPoly {
        self.map(|p| p.partial_derivative(var))
    }

    /// Substitute rational values for the parameters.
    pub fn specialize(&self, values: &[Q]) -> Result<Polynomial, PolyError> {
        if values.len() != self.ring.nparams() {
            return Err(PolyError::ParamCount {
                expected: self.ring.nparams(),
                got: values.len(),
            });
        }
        let mut acc = self.parts[0].clone();
        for (k, v) in values.iter().enumerate() {
            if !v.is_zero() && !self.parts[k + 1].is_zero() {
                acc = &acc + &self.parts[k + 1].scale(v);
            }
        }
        Ok(acc)
    }

    /// Move to a ring with the same main variables and possibly other
    /// parameter names; the parameter count must match.
    pub fn rebase(&self, ring: &RingRef) -> Result<ParamPoly, PolyError> {
        if ring.nparams() != self.ring.nparams() {
            return Err(PolyError::ParamCount {
                expected: ring.nparams(),
                got: self.ring.nparams(),
            });
        }
        ParamPoly::from_parts(ring, self.parts.clone())
    }

    /// Main-variable monomials with their affine coefficient vectors
    /// `[c_const, c_t0, ..., c_tk]`, in decreasing monomial order.
    pub fn coefficient_table(&self) -> Vec<(Monomial, Vec<Q>)> {
        let mut mons: Vec<Monomial> = self
            .parts
            .iter()
            .flat_map(|p| p.terms().iter().map(|(m, _)| m.clone()))
            .collect();
        let order = self.ring.order();
        mons.sort_by(|a, b| order.compare(b, a));
        mons.dedup();
        mons.into_iter()
            .map(|m| {
                let coeffs = self.parts.iter().map(|p| p.coefficient(&m)).collect();
                (m, coeffs)
            })
            .collect()
    }
}

fn format_affine(coeffs: &[Q], params: &[String]) -> (bool, String) {
    // Returns (single_term, text) for the affine form c0 + sum c_k t_k.
    let mut pieces: Vec<(bool, String)> = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        let body = if k == 0 {
            format!("{abs}")
        } else if abs.is_one() {
            params[k - 1].clone()
        } else {
            format!("{abs}*{}", params[k - 1])
        };
        pieces.push((c.is_negative(), body));
    }
    // constant last, matching the descending convention for main terms
    if coeffs.first().is_some_and(|c| !c.is_zero()) {
        let first = pieces.remove(0);
        pieces.push(first);
    }
    let single = pieces.len() == 1;
    let mut s = String::new();
    for (i, (neg, body)) in pieces.iter().enumerate() {
        if i == 0 {
            if *neg {
                s.push('-');
            }
        } else {
            s.push_str(if *neg { " - " } else { " + " });
        }
        s.push_str(body);
    }
    (single, s)
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_polynomial() {
            return write!(f, "{p}");
        }
        let table = self.coefficient_table();
        for (i, (m, coeffs)) in table.iter().enumerate() {
            let mono = format_monomial(m, self.ring.vars());
            let (single, text) = format_affine(coeffs, self.ring.params());
            let (neg, body) = if single {
                match text.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, text),
                }
            } else {
                (false, format!("({text})"))
            };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                f.write_str(&body)?;
            } else if body == "1" {
                f.write_str(&mono)?;
            } else {
                write!(f, "{body}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_param_poly, parse_ring};

    fn ring() -> RingRef {
        parse_ring("ring x,y,z,w params t0,t1").unwrap()
    }

    #[test]
    fn specialize_examples() {
        let r = ring();
        let f = parse_param_poly("t0*x + t1*y", &r).unwrap();
        let one = Q::one();
        let zero = Q::zero();
        assert_eq!(f.specialize(&[one.clone(), zero.clone()]).unwrap().to_string(), "x");
        assert!(f.specialize(&[zero.clone(), zero.clone()]).unwrap().is_zero());
        let g = parse_param_poly("t1*y*z", &r).unwrap();
        assert_eq!(g.specialize(&[one.clone(), one.clone()]).unwrap().to_string(), "y*z");
        assert!(matches!(
            f.specialize(&[one]),
            Err(PolyError::ParamCount { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn scalar_block_action_and_quadratic_rejection() {
        let r = ring();
        let t0 = ParamPoly::param(&r, 0);
        let q = ParamPoly::from_poly(crate::poly::parse_poly("x*z - y^2", &r).unwrap());
        let prod = t0.try_mul(&q).unwrap();
        assert!(!prod.is_parameter_free());
        assert_eq!(prod.param_part(0).to_string(), "-y^2 + x*z");
        assert!(matches!(
            t0.try_mul(&ParamPoly::param(&r, 1)),
            Err(PolyError::QuadraticParameters)
        ));
    }

    #[test]
    fn display_groups_by_monomial() {
        let r = ring();
        let f = parse_param_poly("t1*(z^2 - y*w) - t0*z^2 + 2*x*y", &r).unwrap();
        assert_eq!(f.to_string(), "2*x*y + (-t0 + t1)*z^2 - t1*y*w");
    }
}
