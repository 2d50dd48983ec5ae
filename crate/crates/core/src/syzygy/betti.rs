use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

/// Twists of the free modules in a minimal resolution, per homological
/// degree; index 0 holds the twists of the generators of the ideal.
/// Equality is multiset equality per degree (twists are kept sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiTable {
    degrees: Vec<Vec<i64>>,
}

impl BettiTable {
    pub fn new(degrees: Vec<Vec<i64>>) -> Self {
        let mut degrees = degrees;
        for d in degrees.iter_mut() {
            d.sort_unstable();
        }
        while degrees.last().is_some_and(|d| d.is_empty()) {
            degrees.pop();
        }
        BettiTable { degrees }
    }

    /// From `(twist, multiplicity)` groups per homological degree.
    pub fn from_shape(shape: &[&[(i64, usize)]]) -> Self {
        BettiTable::new(
            shape
                .iter()
                .map(|groups| groups.iter().flat_map(|&(t, n)| std::iter::repeat_n(t, n)).collect())
                .collect(),
        )
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    /// Number of nonzero free modules (the length of the resolution of the
    /// quotient ring, not counting the ring itself).
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// `{homdeg: {twist: multiplicity}}`.
    pub fn to_json(&self) -> Value {
        let mut outer = serde_json::Map::new();
        for (i, twists) in self.degrees.iter().enumerate() {
            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for &t in twists {
                *counts.entry(t).or_default() += 1;
            }
            let inner: serde_json::Map<String, Value> =
                counts.into_iter().map(|(t, n)| (t.to_string(), json!(n))).collect();
            outer.insert(i.to_string(), Value::Object(inner));
        }
        Value::Object(outer)
    }

    /// Compact form such as `2^5 | 3^5 | 5`.
    pub fn compact(&self) -> String {
        self.degrees
            .iter()
            .map(|twists| {
                let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
                for &t in twists {
                    *counts.entry(t).or_default() += 1;
                }
                counts
                    .into_iter()
                    .map(|(t, n)| if n == 1 { t.to_string() } else { format!("{t}^{n}") })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" | ")
    }

    /// Human-readable grid: one row per twist, one column per homological
    /// degree.
    pub fn grid(&self) -> String {
        let mut twists: Vec<i64> = self.degrees.iter().flatten().copied().collect();
        twists.sort_unstable();
        twists.dedup();
        let mut out = String::new();
        out.push_str("twist |");
        for i in 0..self.degrees.len() {
            out.push_str(&format!(" {i:>3}"));
        }
        out.push('\n');
        for t in twists {
            out.push_str(&format!("{t:>5} |"));
            for d in &self.degrees {
                let n = d.iter().filter(|&&x| x == t).count();
                if n == 0 {
                    out.push_str("   .");
                } else {
                    out.push_str(&format!(" {n:>3}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_equality_and_json() {
        let a = BettiTable::new(vec![vec![3, 2, 2], vec![4]]);
        let b = BettiTable::from_shape(&[&[(2, 2), (3, 1)], &[(4, 1)]]);
        assert_eq!(a, b);
        assert_eq!(a.to_json(), json!({"0": {"2": 2, "3": 1}, "1": {"4": 1}}));
        assert_eq!(a.compact(), "2^2 3 | 4");
    }

    #[test]
    fn grid_layout() {
        let t = BettiTable::from_shape(&[&[(2, 5)], &[(3, 5)], &[(5, 1)]]);
        let g = t.grid();
        assert!(g.contains("    2 |   5   .   ."));
        assert!(g.contains("    5 |   .   .   1"));
    }
}
