//! Integer partitions with positive, weakly decreasing parts.
//!
//! A partition `λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_n > 0)` names the abelian p-group
//! `⊕_i Z/p^{λ_i}Z`. Intermediate computations that shrink parts drop zeros
//! immediately; the empty part list (the trivial group) is represented by
//! bare slices internally and never by a public `Partition`.

use crate::error::Error;
use crate::Result;
use std::fmt;

/// A nonempty partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates and wraps a part list.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        if *parts.last().unwrap() == 0 {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        Ok(Partition { parts })
    }

    /// The parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Never true; partitions are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The weight `|λ| = Σ λ_i`.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The suffix `(λ_{ℓ+1}, …, λ_n)` for `1 ≤ ℓ ≤ n−1`.
    pub fn suffix(&self, ell: usize) -> Result<Partition> {
        if ell == 0 || ell >= self.len() {
            return Err(Error::InvalidPartition(format!(
                "suffix index {ell} out of range 1..{}",
                self.len()
            )));
        }
        Ok(Partition { parts: self.parts[ell..].to_vec() })
    }

    /// All partitions of weight `w`, in lexicographically decreasing order.
    pub fn all_of_weight(w: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        descend(w, w, &mut stack, &mut out, usize::MAX);
        out
    }

    /// All partitions of weight `w` with exactly `n` parts, in
    /// lexicographically decreasing order.
    pub fn with_part_count(w: u32, n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        descend_exact(w, w, n, &mut stack, &mut out);
        out
    }
}

fn descend(left: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>, max_parts: usize) {
    if left == 0 {
        if !stack.is_empty() {
            out.push(Partition { parts: stack.clone() });
        }
        return;
    }
    if stack.len() >= max_parts {
        return;
    }
    for part in (1..=left.min(max_part)).rev() {
        stack.push(part);
        descend(left - part, part, stack, out, max_parts);
        stack.pop();
    }
}

fn descend_exact(left: u32, max_part: u32, n: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let remaining = n - stack.len();
    if remaining == 0 {
        if left == 0 {
            out.push(Partition { parts: stack.clone() });
        }
        return;
    }
    // Each remaining part needs at least 1 and at most max_part.
    if left < remaining as u32 || left > max_part.saturating_mul(remaining as u32) {
        return;
    }
    let hi = max_part.min(left - (remaining as u32 - 1));
    for part in (1..=hi).rev() {
        stack.push(part);
        descend_exact(left - part, part, n, stack, out);
        stack.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let lam = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(lam.weight(), 6);
        assert_eq!(lam.len(), 3);
        assert_eq!(lam.to_string(), "3,2,1");
    }

    #[test]
    fn suffixes() {
        let lam = Partition::new(vec![4, 3, 2, 1]).unwrap();
        assert_eq!(lam.suffix(1).unwrap().parts(), &[3, 2, 1]);
        assert_eq!(lam.suffix(3).unwrap().parts(), &[1]);
        assert!(lam.suffix(0).is_err());
        assert!(lam.suffix(4).is_err());
    }

    #[test]
    fn enumeration_is_lex_decreasing_and_complete() {
        let of5 = Partition::all_of_weight(5);
        assert_eq!(of5.len(), 7);
        assert_eq!(of5.first().unwrap().parts(), &[5]);
        assert_eq!(of5.last().unwrap().parts(), &[1, 1, 1, 1, 1]);
        for w in of5.windows(2) {
            assert!(w[0].parts() > w[1].parts(), "lex decreasing");
        }

        let exact = Partition::with_part_count(8, 4);
        assert_eq!(
            exact.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
            vec![vec![5, 1, 1, 1], vec![4, 2, 1, 1], vec![3, 3, 1, 1], vec![3, 2, 2, 1], vec![2, 2, 2, 2]]
        );
    }
}
