//! Partitions, standard tableaux and the diagram predicates used for
//! dimension predictions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{:?} is not a partition", parts)));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// λ_k, zero past the last row (1-based).
    pub fn part(&self, k: usize) -> usize {
        self.0.get(k.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Length of column j (0-based).
    fn column(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p > j).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// All partitions of n in descending lexicographic order, optionally with
/// at most `max_rows` rows.
pub fn partitions_of(n: usize, max_rows: Option<usize>) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, max_rows: usize, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_rows {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, max_rows, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(n, n, &mut Vec::new(), max_rows.unwrap_or(n), &mut out);
    out
}

/// Number of standard Young tableaux, by the hook-length formula.
pub fn standard_tableaux_count(lambda: &Partition) -> u128 {
    let n = lambda.size() as u128;
    let mut num: u128 = (1..=n).product();
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = lambda.column(j) - i - 1;
            hooks *= (arm + leg + 1) as u128;
            // keep the running values small
            let g = gcd(num, hooks);
            num /= g;
            hooks /= g;
        }
    }
    num / hooks
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Σ f_λ² over partitions of n with at most d rows.
pub fn predicted_image_dim(n: usize, d: usize) -> u128 {
    partitions_of(n, Some(d))
        .iter()
        .map(|l| {
            let f = standard_tableaux_count(l);
            f * f
        })
        .sum()
}

/// At most k rows and λ_1 − λ_k ≤ m − k.
pub fn is_km_diagram(lambda: &Partition, k: usize, m: usize) -> Result<bool> {
    if k == 0 || k + 1 > m {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= m-1, got k={}, m={}", k, m)));
    }
    Ok(lambda.rows() <= k && lambda.part(1) - lambda.part(k) <= m - k)
}
