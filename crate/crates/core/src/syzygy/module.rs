use std::fmt;

use num_traits::{One, Zero};

use crate::groebner::{ModVec, ModuleOrder, Term};
use crate::poly::{Monomial, Polynomial, RingRef, Q};

/// Graded free module `⊕ S(-a_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

impl fmt::Display for GradedFreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twists.is_empty() {
            return f.write_str("0");
        }
        let mut groups: Vec<(i64, usize)> = Vec::new();
        for &t in &self.twists {
            match groups.last_mut() {
                Some((g, n)) if *g == t => *n += 1,
                _ => groups.push((t, 1)),
            }
        }
        let parts: Vec<String> = groups
            .iter()
            .map(|&(t, n)| {
                let base = if t == 0 {
                    "S".to_string()
                } else {
                    format!("S(-{t})").replace("--", "")
                };
                if n == 1 {
                    base
                } else {
                    format!("{base}^{n}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Matrix of polynomials presenting a map `source -> target` of graded free
/// modules; column `j` is the image of the `j`-th basis element of `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: RingRef,
    entries: Vec<Vec<Polynomial>>,
    source: GradedFreeModule,
    target: GradedFreeModule,
}

impl GradedMatrix {
    /// Build from rows; entry `(i, j)` must be zero or homogeneous of degree
    /// `source[j] - target[i]`.
    pub fn new(
        ring: &RingRef,
        entries: Vec<Vec<Polynomial>>,
        source: GradedFreeModule,
        target: GradedFreeModule,
    ) -> Result<Self, String> {
        if entries.len() != target.rank() {
            return Err(format!("{} rows for a target of rank {}", entries.len(), target.rank()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != source.rank() {
                return Err(format!("row {i} has {} entries, expected {}", row.len(), source.rank()));
            }
            for (j, e) in row.iter().enumerate() {
                let want = source.twists[j] - target.twists[i];
                if !e.is_zero() && e.homogeneous_degree().map(|d| d as i64) != Some(want) {
                    return Err(format!("entry ({i}, {j}) = {e} is not homogeneous of degree {want}"));
                }
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            entries,
            source,
            target,
        })
    }

    /// The 1 x r matrix of ideal generators, as a map onto `S`.
    pub fn generator_row(ring: &RingRef, gens: &[Polynomial]) -> Result<Self, String> {
        let twists = gens
            .iter()
            .map(|g| {
                g.homogeneous_degree()
                    .map(|d| d as i64)
                    .ok_or_else(|| format!("generator {g} is not homogeneous"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        GradedMatrix::new(
            ring,
            vec![gens.to_vec()],
            GradedFreeModule::new(twists),
            GradedFreeModule::new(vec![0]),
        )
    }

    /// Build from columns given as module vectors over the target.
    pub fn from_columns(
        ring: &RingRef,
        columns: &[ModVec],
        source: GradedFreeModule,
        target: GradedFreeModule,
    ) -> Self {
        let mut entries = vec![vec![Polynomial::zero(ring); columns.len()]; target.rank()];
        for (j, col) in columns.iter().enumerate() {
            let mut per_row: Vec<Vec<(Monomial, Q)>> = vec![Vec::new(); target.rank()];
            for (t, c) in col {
                per_row[t.comp].push((t.mono.clone(), c.clone()));
            }
            for (i, terms) in per_row.into_iter().enumerate() {
                entries[i][j] = Polynomial::from_terms(ring, terms);
            }
        }
        GradedMatrix {
            ring: ring.clone(),
            entries,
            source,
            target,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    /// Column `j` as a module vector sorted for `order`.
    pub fn column(&self, j: usize, order: &ModuleOrder) -> ModVec {
        let mut v: ModVec = Vec::new();
        for i in 0..self.nrows() {
            for (m, c) in self.entries[i][j].terms() {
                v.push((
                    Term {
                        comp: i,
                        mono: m.clone(),
                    },
                    c.clone(),
                ));
            }
        }
        order.sort(&mut v);
        v
    }

    pub fn column_polys(&self, j: usize) -> Vec<Polynomial> {
        (0..self.nrows()).map(|i| self.entries[i][j].clone()).collect()
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.ncols(), other.nrows(), "incompatible composition");
        let mut entries = vec![vec![Polynomial::zero(&self.ring); other.ncols()]; self.nrows()];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.ncols() {
                    if self.entries[i][k].is_zero() || other.entries[k][j].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&self.entries[i][k] * &other.entries[k][j]);
                }
                *e = acc;
            }
        }
        GradedMatrix {
            ring: self.ring.clone(),
            entries,
            source: other.source.clone(),
            target: self.target.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }

    /// Whether some entry is a nonzero constant (the map is not minimal).
    pub fn has_unit_entry(&self) -> bool {
        self.entries.iter().flatten().any(|e| !e.is_zero() && e.is_constant())
    }

    pub fn transpose(&self) -> GradedMatrix {
        let entries = (0..self.ncols())
            .map(|j| (0..self.nrows()).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        let neg = |m: &GradedFreeModule| GradedFreeModule::new(m.twists.iter().map(|t| -t).collect());
        GradedMatrix {
            ring: self.ring.clone(),
            entries,
            source: neg(&self.target),
            target: neg(&self.source),
        }
    }

    /// Entry-wise check that `self` is homogeneous for its twists.
    pub fn is_graded(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, e)| {
                e.is_zero()
                    || e.homogeneous_degree().map(|d| d as i64) == Some(self.source.twists[j] - self.target.twists[i])
            })
        })
    }

    /// The constant matrix of a map between equal-degree pieces, if every
    /// entry is a constant.
    pub fn constant_entries(&self) -> Option<Vec<Vec<Q>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        if e.is_zero() {
                            Some(Q::zero())
                        } else if e.is_constant() {
                            e.leading_coeff().cloned()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} <- {}", self.target, self.source)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [ {} ]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// The unit vector `e_comp` as a module element.
pub(crate) fn unit_vector(nvars: usize, comp: usize) -> ModVec {
    vec![(
        Term {
            comp,
            mono: Monomial::one(nvars),
        },
        Q::one(),
    )]
}
