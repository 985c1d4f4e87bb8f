//! Partitions and interleaving patterns, the bookkeeping for branching rules
//! and filtration factors.

use std::fmt;

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts (trailing zeros stripped).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// Parse a comma-separated list like `2,1` or `0`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u64>, _> =
            s.split(',').map(|p| p.trim().parse()).collect();
        Partition::new(parts.map_err(|_| {
            Error::InvalidPartition(format!("cannot parse `{s}` as a partition"))
        })?)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The i-th part, 1-based, 0 beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// (1^k): k parts equal to one.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c as u64).count() as u64)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A pair of partitions satisfying the interleaving chain
/// outer_1 ≥ inner_1 ≥ outer_2 ≥ inner_2 ≥ …, with the inner one supported
/// on at most `slots` parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterleavingPattern {
    outer: Partition,
    inner: Partition,
    slots: usize,
}

impl InterleavingPattern {
    pub fn new(outer: Partition, inner: Partition, slots: usize) -> Result<Self> {
        if inner.len() > slots {
            return Err(Error::InvalidPartition(format!(
                "inner partition {inner} has more than {slots} parts"
            )));
        }
        if outer.len() > slots + 1 {
            return Err(Error::InvalidPartition(format!(
                "outer partition {outer} has more than {} parts",
                slots + 1
            )));
        }
        for i in 1..=slots {
            let v = inner.part(i);
            if v > outer.part(i) || v < outer.part(i + 1) {
                return Err(Error::InvalidPartition(format!(
                    "{inner} does not interleave {outer} at slot {i}"
                )));
            }
        }
        Ok(InterleavingPattern {
            outer,
            inner,
            slots,
        })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }
}

/// All partitions interleaving `outer` on `slots` parts, in decreasing
/// lexicographic order. Slot i ranges over [outer_{i+1}, outer_i]
/// independently, so this is a product of intervals.
pub fn interleavings(outer: &Partition, slots: usize) -> Result<Vec<Partition>> {
    if outer.len() > slots + 1 {
        return Err(Error::InvalidPartition(format!(
            "partition {outer} is too long to interleave on {slots} slots"
        )));
    }
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::with_capacity(slots);
    fn rec(outer: &Partition, slots: usize, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if current.len() == slots {
            out.push(Partition::new(current.clone()).expect("chain keeps parts decreasing"));
            return;
        }
        let i = current.len() + 1;
        let hi = outer.part(i);
        let lo = outer.part(i + 1);
        for v in (lo..=hi).rev() {
            current.push(v);
            rec(outer, slots, current, out);
            current.pop();
        }
    }
    rec(outer, slots, &mut current, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_normalization() {
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert_eq!(p.weight(), 4);
        assert_eq!(p.len(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::parse("2,1").unwrap().parts(), &[2, 1]);
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "0");
    }

    #[test]
    fn conjugation() {
        let p = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn forced_interleaving() {
        let p = Partition::new(vec![1, 1]).unwrap();
        let vs = interleavings(&p, 1).unwrap();
        assert_eq!(vs, vec![Partition::new(vec![1]).unwrap()]);
    }

    #[test]
    fn two_interleavings_in_decreasing_order() {
        let p = Partition::new(vec![2, 1]).unwrap();
        let vs = interleavings(&p, 1).unwrap();
        let strings: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
        assert_eq!(strings, vec!["2", "1"]);
    }

    #[test]
    fn empty_partition_interleaves_trivially() {
        let vs = interleavings(&Partition::empty(), 3).unwrap();
        assert_eq!(vs, vec![Partition::empty()]);
    }

    #[test]
    fn too_long_is_rejected() {
        let p = Partition::new(vec![1, 1, 1]).unwrap();
        assert!(interleavings(&p, 1).is_err());
    }

    #[test]
    fn pattern_type_validates_the_chain() {
        let outer = Partition::new(vec![2, 1]).unwrap();
        let ok = Partition::new(vec![2]).unwrap();
        assert!(InterleavingPattern::new(outer.clone(), ok, 1).is_ok());
        let bad = Partition::new(vec![3]).unwrap();
        assert!(InterleavingPattern::new(outer, bad, 1).is_err());
    }

    #[test]
    fn every_emitted_interleaving_validates() {
        let p = Partition::new(vec![3, 2, 1]).unwrap();
        for slots in 2..=4 {
            for v in interleavings(&p, slots).unwrap() {
                assert!(InterleavingPattern::new(p.clone(), v, slots).is_ok());
            }
        }
    }
}
