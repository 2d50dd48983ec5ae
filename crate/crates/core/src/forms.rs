//! Twisted 1-forms on projective space: radial contraction, the skew matrix
//! of the exterior derivative, 4×4 Pfaffians with their cofactor matrix,
//! the Frobenius 3-form `ω ∧ dω`, and constant tangent vector fields.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{parse_form, Monomial, ParamPoly, Polynomial, RingRef, Q};

/// `ω = Σ A_i dx_i` with every `A_i` homogeneous of degree `d + 1`, where `d`
/// is the degree of the distribution. Coefficients may be affine in the
/// ring's parameter block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedOneForm {
    ring: RingRef,
    coeffs: Vec<ParamPoly>,
    degree: i64,
}

impl TwistedOneForm {
    pub fn new(ring: &RingRef, coeffs: Vec<ParamPoly>) -> Result<Self> {
        if coeffs.len() != ring.nvars() {
            return Err(Error::Precondition(format!(
                "a 1-form needs {} coefficients, got {}",
                ring.nvars(),
                coeffs.len()
            )));
        }
        let mut degree: Option<u32> = None;
        for (i, a) in coeffs.iter().enumerate() {
            if a.ring() != ring {
                return Err(Error::Precondition("coefficient over a different ring".into()));
            }
            if a.is_zero() {
                continue;
            }
            let e = a
                .homogeneous_degree()
                .ok_or_else(|| Error::Precondition(format!("coefficient of d{} is not homogeneous", ring.vars()[i])))?;
            match degree {
                None => degree = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::Precondition(format!("coefficients have degrees {prev} and {e}")))
                }
                _ => {}
            }
        }
        let degree = degree.ok_or_else(|| Error::Precondition("the zero 1-form".into()))?;
        if degree == 0 {
            return Err(Error::Precondition("constant coefficients".into()));
        }
        Ok(TwistedOneForm {
            ring: ring.clone(),
            coeffs,
            degree: degree as i64 - 1,
        })
    }

    pub fn from_polys(ring: &RingRef, coeffs: Vec<Polynomial>) -> Result<Self> {
        TwistedOneForm::new(ring, coeffs.into_iter().map(ParamPoly::from_poly).collect())
    }

    /// Parse `(A0)*dx0 + ... + (An)*dxn`.
    pub fn parse(src: &str, ring: &RingRef) -> Result<Self> {
        TwistedOneForm::new(ring, parse_form(src, ring)?)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    /// Distribution degree `d` (coefficients have degree `d + 1`).
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_parameter_free(&self) -> bool {
        self.coeffs.iter().all(ParamPoly::is_parameter_free)
    }

    /// Parameters that actually occur in some coefficient.
    pub fn used_params(&self) -> Vec<usize> {
        (0..self.ring.nparams())
            .filter(|&k| self.coeffs.iter().any(|a| !a.param_part(k).is_zero()))
            .collect()
    }

    /// Coefficients of a parameter-free form.
    pub fn polys(&self) -> Result<Vec<Polynomial>> {
        self.coeffs
            .iter()
            .map(|a| {
                a.as_polynomial()
                    .cloned()
                    .ok_or_else(|| Error::Precondition("the form depends on parameters".into()))
            })
            .collect()
    }

    pub fn specialize(&self, values: &[Q]) -> Result<TwistedOneForm> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.specialize(values).map(ParamPoly::from_poly))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        TwistedOneForm::new(&self.ring, coeffs)
    }

    /// The form obtained by setting the parameter vector to the `k`-th unit
    /// vector: the `k`-th basis element of the family.
    pub fn basis_member(&self, k: usize) -> Result<TwistedOneForm> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| ParamPoly::from_poly(a.param_part(k).clone()))
            .collect();
        TwistedOneForm::new(&self.ring, coeffs)
    }

    pub fn scale(&self, c: &Q) -> TwistedOneForm {
        TwistedOneForm {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
            degree: self.degree,
        }
    }

    /// Substitute `x_i ↦ x_{perm[i]}` throughout, so that the pulled-back
    /// form has `A'_{perm[i]} = A_i ∘ perm`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<TwistedOneForm> {
        let n = self.ring.nvars();
        if perm.len() != n || (0..n).any(|i| !perm.contains(&i)) {
            return Err(Error::Precondition("not a permutation of the variables".into()));
        }
        let mut coeffs = vec![ParamPoly::zero(&self.ring); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[perm[i]] = a.map(|p| p.remap(&self.ring, perm));
        }
        TwistedOneForm::new(&self.ring, coeffs)
    }

    /// `ι_R ω = Σ x_i A_i`; zero exactly when `ω` descends to projective
    /// space.
    pub fn contract_radial(&self) -> ParamPoly {
        let mut acc = ParamPoly::zero(&self.ring);
        for (i, a) in self.coeffs.iter().enumerate() {
            let term = a
                .mul_poly(&Polynomial::var(&self.ring, i))
                .expect("a variable is parameter-free");
            acc = acc.try_add(&term).expect("same ring");
        }
        acc
    }

    /// Matrix of `dω`: `B_ij = ∂A_i/∂x_j − ∂A_j/∂x_i`.
    pub fn skew_of_derivative(&self) -> Result<SkewMatrix> {
        let a = self.polys()?;
        let n = a.len();
        let mut entries = vec![vec![Polynomial::zero(&self.ring); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let b = &a[i].partial_derivative(j) - &a[j].partial_derivative(i);
                entries[j][i] = -&b;
                entries[i][j] = b;
            }
        }
        Ok(SkewMatrix { entries })
    }

    /// `B·x = (d + 2)·A`, which holds for every projective form.
    pub fn satisfies_euler_relation(&self) -> Result<bool> {
        let b = self.skew_of_derivative()?;
        let a = self.polys()?;
        let bx = b.apply_to_variables(&self.ring);
        let factor = Q::from_integer((self.degree + 2).into());
        Ok(bx.iter().zip(&a).all(|(l, r)| *l == r.scale(&factor)))
    }

    /// `ω ∧ dω` for a parameter-free form.
    pub fn wedge_integrability(&self) -> Result<ThreeForm> {
        let a = self.polys()?;
        let b = self.skew_of_derivative()?;
        // dω = Σ_{j<k} C_jk dx_j ∧ dx_k with C_jk = ∂_j A_k − ∂_k A_j = B_kj
        let c = |j: usize, k: usize| b.entry(k, j);
        let n = a.len();
        let mut components = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let v = &(&(&a[i] * c(j, k)) - &(&a[j] * c(i, k))) + &(&a[k] * c(i, j));
                    if !v.is_zero() {
                        components.insert((i, j, k), v);
                    }
                }
            }
        }
        Ok(ThreeForm { components })
    }

    pub fn is_integrable(&self) -> Result<bool> {
        Ok(self.wedge_integrability()?.is_zero())
    }

    /// Basis of the constant vector fields `v` with `Σ v_i A_i = 0`.
    pub fn constant_tangent_fields(&self) -> Result<Vec<Vec<Q>>> {
        let a = self.polys()?;
        let rows: Vec<Monomial> = Monomial::all_of_degree(self.ring.nvars(), (self.degree + 1) as u32);
        let index: BTreeMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut m = Matrix::zeros(rows.len(), a.len());
        for (j, p) in a.iter().enumerate() {
            for (mono, c) in p.terms() {
                m.set(index[mono], j, c.clone());
            }
        }
        let ns = m.null_space();
        if ns.is_empty() {
            return Ok(Vec::new());
        }
        Ok(Matrix::from_rows(ns, a.len()).row_space_canonical())
    }

    /// `ω(v) = Σ v_i A_i` for a constant vector `v`.
    pub fn evaluate_on(&self, v: &[Q]) -> Result<Polynomial> {
        let a = self.polys()?;
        Ok(a.iter()
            .zip(v)
            .fold(Polynomial::zero(&self.ring), |acc, (p, c)| &acc + &p.scale(c)))
    }

    /// Coordinates over `(i, m)` with `m` running through the monomials of
    /// degree `d + 1`, component-major, for a parameter-free form.
    pub fn coordinates(&self) -> Result<Vec<Q>> {
        let a = self.polys()?;
        Ok(form_coordinates(&self.ring, &a, self.degree + 1))
    }
}

/// Coordinates of a coefficient vector over `(i, m)`, `m` of degree `k`,
/// component-major; the layout used by the linear-algebra oracle.
pub fn form_coordinates(ring: &RingRef, coeffs: &[Polynomial], k: i64) -> Vec<Q> {
    let monos = Monomial::all_of_degree(ring.nvars(), k as u32);
    let index: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut out = vec![Q::zero(); coeffs.len() * monos.len()];
    for (i, p) in coeffs.iter().enumerate() {
        for (m, c) in p.terms() {
            out[i * monos.len() + index[m]] = c.clone();
        }
    }
    out
}

impl fmt::Display for TwistedOneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({a})*d{}", self.ring.vars()[i])?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Square matrix of polynomials with `B = −Bᵀ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    entries: Vec<Vec<Polynomial>>,
}

impl SkewMatrix {
    /// Validates skew-symmetry exactly.
    pub fn new(entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Precondition("skew matrix must be square".into()));
            }
            for j in 0..n {
                if entries[i][j] != -&entries[j][i] {
                    return Err(Error::Precondition(format!("entry ({i},{j}) breaks skew symmetry")));
                }
            }
        }
        Ok(SkewMatrix { entries })
    }

    /// From the upper triangle `(b01, b02, b03, b12, b13, b23)` in row order.
    pub fn from_upper(ring: &RingRef, n: usize, upper: &[Polynomial]) -> Result<Self> {
        if upper.len() != n * (n - 1) / 2 {
            return Err(Error::Precondition("wrong number of upper-triangle entries".into()));
        }
        let mut entries = vec![vec![Polynomial::zero(ring); n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let b = it.next().unwrap().clone();
                entries[j][i] = -&b;
                entries[i][j] = b;
            }
        }
        Ok(SkewMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }

    /// `B·(x_0, …, x_n)ᵀ`.
    pub fn apply_to_variables(&self, ring: &RingRef) -> Vec<Polynomial> {
        self.entries
            .iter()
            .map(|row| {
                row.iter().enumerate().fold(Polynomial::zero(ring), |acc, (j, b)| {
                    &acc + &(b * &Polynomial::var(ring, j))
                })
            })
            .collect()
    }

    /// Determinant by cofactor expansion (exact, small sizes only).
    pub fn determinant(&self) -> Polynomial {
        fn det(m: &[Vec<Polynomial>]) -> Polynomial {
            let ring = m[0][0].ring().clone();
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut acc = Polynomial::zero(&ring);
            for (j, a) in m[0].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let t = a * &det(&minor);
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
        det(&self.entries)
    }

    fn require_four(&self) -> Result<()> {
        if self.size() != 4 {
            return Err(Error::Precondition(format!(
                "Pfaffian of a {0}×{0} matrix; only 4×4 is supported",
                self.size()
            )));
        }
        Ok(())
    }
}

/// `Pf(B) = B01·B23 − B02·B13 + B03·B12`.
pub fn pfaffian4(b: &SkewMatrix) -> Result<Polynomial> {
    b.require_four()?;
    let e = |i, j| b.entry(i, j);
    Ok(&(&(e(0, 1) * e(2, 3)) - &(e(0, 2) * e(1, 3))) + &(e(0, 3) * e(1, 2)))
}

/// Cofactor matrix `Q` with `Q·B = Pf(B)·Id`: `Q_ij = (−1)^{i+j} B_kl` for
/// `i < j`, where `{k < l}` is the complement of `{i, j}`, and `Q_ji = −Q_ij`.
/// For a projective form this gives the certificate
/// `Pf(B)·x_i = (d + 2)·Σ_j Q_ij A_j`.
pub fn pfaffian_cofactors(b: &SkewMatrix) -> Result<Vec<Vec<Polynomial>>> {
    b.require_four()?;
    let ring = b.entry(0, 0).ring().clone();
    let mut q = vec![vec![Polynomial::zero(&ring); 4]; 4];
    for i in 0..4 {
        for j in i + 1..4 {
            let rest: Vec<usize> = (0..4).filter(|&m| m != i && m != j).collect();
            let sub = b.entry(rest[0], rest[1]).clone();
            let v = if (i + j) % 2 == 0 { sub } else { -&sub };
            q[j][i] = -&v;
            q[i][j] = v;
        }
    }
    Ok(q)
}

/// 3-form stored on strictly increasing index triples; absent triples are
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ThreeForm {
    components: BTreeMap<(usize, usize, usize), Polynomial>,
}

impl ThreeForm {
    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &BTreeMap<(usize, usize, usize), Polynomial> {
        &self.components
    }

    pub fn component(&self, i: usize, j: usize, k: usize) -> Option<&Polynomial> {
        self.components.get(&(i, j, k))
    }
}

impl fmt::Display for ThreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|((i, j, k), p)| {
                let v = p.ring().vars();
                format!("({p})*d{}^d{}^d{}", v[*i], v[*j], v[*k])
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
