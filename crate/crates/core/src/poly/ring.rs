use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::PolyError;

/// Monomial order on the main variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Pure lexicographic, `x0 > x1 > ...`.
    Lex,
    /// The first `k` variables form a block that is eliminated: terms are
    /// compared by grevlex on that block first, then grevlex on the rest.
    BlockElim(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::BlockElim(k) => {
                let k = k.min(a.exponents().len());
                let (ah, at) = a.exponents().split_at(k);
                let (bh, bt) = b.exponents().split_at(k);
                grevlex(ah, bh).then_with(|| grevlex(at, bt))
            }
        }
    }

    /// Whether the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex | MonomialOrder::BlockElim(0))
    }

    pub fn tag(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".to_string(),
            MonomialOrder::Lex => "lex".to_string(),
            MonomialOrder::BlockElim(k) => format!("elim({k})"),
        }
    }
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Variable layout of a polynomial ring: main variables carrying a monomial
/// order, plus an optional block of parameters in which coefficients may be
/// affine-linear.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    params: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(vars: Vec<String>, params: Vec<String>, order: MonomialOrder) -> Result<RingRef, PolyError> {
        if vars.is_empty() {
            return Err(PolyError::Ring("ring needs at least one variable".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in vars.iter().chain(params.iter()) {
            if !is_identifier(name) {
                return Err(PolyError::Ring(format!("invalid variable name `{name}`")));
            }
            if !seen.insert(name.as_str()) {
                return Err(PolyError::Ring(format!("duplicate variable name `{name}`")));
            }
        }
        if let MonomialOrder::BlockElim(k) = order {
            if k > vars.len() {
                return Err(PolyError::Ring(format!(
                    "elimination block of size {k} exceeds {} variables",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(Ring { vars, params, order }))
    }

    /// Grevlex ring on the given variable names, no parameters.
    pub fn grevlex(vars: &[&str]) -> Result<RingRef, PolyError> {
        Ring::new(
            vars.iter().map(|s| s.to_string()).collect(),
            Vec::new(),
            MonomialOrder::Grevlex,
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn nparams(&self) -> usize {
        self.params.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|v| v == name)
    }

    /// Polynomials over `self` and `other` can be combined: same main
    /// variables and the same order. Parameters do not matter here.
    pub fn compatible(&self, other: &Ring) -> bool {
        self.vars == other.vars && self.order == other.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef, PolyError> {
        Ring::new(self.vars.clone(), self.params.clone(), order)
    }

    pub fn with_params(&self, params: Vec<String>) -> Result<RingRef, PolyError> {
        Ring::new(self.vars.clone(), params, self.order)
    }

    /// Same variables, `count` parameters named `t0, t1, ...` (or `s0, ...`
    /// if `t` names clash with a main variable).
    pub fn with_numbered_params(&self, count: usize) -> Result<RingRef, PolyError> {
        for prefix in ["t", "s", "u", "p"] {
            let names: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
            if names.iter().all(|n| self.var_index(n).is_none()) {
                return self.with_params(names);
            }
        }
        Err(PolyError::Ring("no free parameter prefix".into()))
    }

    /// Ring with fresh variables prepended and a block order eliminating them.
    pub fn with_front_block(&self, names: &[&str]) -> Result<RingRef, PolyError> {
        let mut vars: Vec<String> = Vec::with_capacity(names.len() + self.vars.len());
        for base in names {
            let mut name = base.to_string();
            while self.vars.contains(&name) || self.params.contains(&name) || vars.contains(&name) {
                name.push('_');
            }
            vars.push(name);
        }
        vars.extend(self.vars.iter().cloned());
        Ring::new(vars, self.params.clone(), MonomialOrder::BlockElim(names.len()))
    }

    /// Header line in the input grammar, e.g. `ring x,y,z,w params t0,t1 order grevlex`.
    pub fn header(&self) -> String {
        let mut s = format!("ring {}", self.vars.join(","));
        if !self.params.is_empty() {
            s.push_str(&format!(" params {}", self.params.join(",")));
        }
        s.push_str(&format!(" order {}", self.order.tag()));
        s
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.header())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
