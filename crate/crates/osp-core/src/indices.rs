//! Admissible column indices: strictly increasing letter tuples using at most
//! one letter from each opposed pair. These label the Schubert cells of the
//! isotropic and odd grassmannians.

use std::fmt;

use crate::error::{Error, Result};
use crate::weyl::{Family, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleIndex {
    family: Family,
    letters: Vec<Letter>,
}

impl AdmissibleIndex {
    pub fn new(family: Family, letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() || letters.len() > family.window_len() {
            return Err(Error::InvalidIndex(format!(
                "index size {} out of range for {family:?}",
                letters.len()
            )));
        }
        let mut seen = vec![false; family.n() + 1];
        for (pos, &l) in letters.iter().enumerate() {
            if !family.contains(l) {
                return Err(Error::InvalidIndex(format!(
                    "letter {l} is out of range for {family:?}"
                )));
            }
            if pos > 0 && letters[pos - 1] >= l {
                return Err(Error::InvalidIndex(
                    "letters must be strictly increasing".into(),
                ));
            }
            let m = family.magnitude(l);
            if seen[m] {
                return Err(Error::InvalidIndex(format!(
                    "both letters of the pair with magnitude {m} occur"
                )));
            }
            seen[m] = true;
        }
        Ok(AdmissibleIndex { family, letters })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn k(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Componentwise comparison of the (sorted) letter tuples.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        if self.family != other.family || self.k() != other.k() {
            return Err(Error::Mismatch(format!(
                "cannot compare a {}-index of {:?} with a {}-index of {:?}",
                self.k(),
                self.family,
                other.k(),
                other.family
            )));
        }
        Ok(self
            .letters
            .iter()
            .zip(&other.letters)
            .all(|(a, b)| a <= b))
    }

    /// Bar-notation rendering, e.g. `0,3b,1b`... sorted as stored.
    pub fn bar_string(&self) -> String {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| self.family.letter_string(l))
            .collect();
        parts.join(",")
    }
}

impl fmt::Display for AdmissibleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All admissible k-element indices for the family, in lexicographic order.
pub fn admissible_indices(family: Family, k: usize) -> Result<Vec<AdmissibleIndex>> {
    if k < 1 || k > family.window_len() {
        return Err(Error::InvalidParameter(format!(
            "index size {k} out of range for {family:?}"
        )));
    }
    let mut out = Vec::new();
    let mut current: Vec<Letter> = Vec::with_capacity(k);
    let mut used = vec![false; family.n() + 1];
    fn rec(
        family: Family,
        k: usize,
        next_min: Letter,
        current: &mut Vec<Letter>,
        used: &mut Vec<bool>,
        out: &mut Vec<AdmissibleIndex>,
    ) {
        if current.len() == k {
            out.push(AdmissibleIndex {
                family,
                letters: current.clone(),
            });
            return;
        }
        for l in next_min..=family.max_letter() {
            let m = family.magnitude(l);
            if !used[m] {
                used[m] = true;
                current.push(l);
                rec(family, k, l + 1, current, used, out);
                current.pop();
                used[m] = false;
            }
        }
    }
    rec(family, k, family.min_letter(), &mut current, &mut used, &mut out);
    Ok(out)
}

/// Closed-form count of admissible k-indices; `k = 0` counts the empty index.
pub fn count_admissible(family: Family, k: usize) -> u64 {
    let n = family.n() as u64;
    let k = k as u64;
    match family {
        Family::Even { .. } => binomial(n, k) << k.min(63),
        Family::Odd { .. } => {
            let even_part = binomial(n, k) << k.min(63);
            let zero_part = if k == 0 {
                0
            } else {
                binomial(n, k - 1) << (k - 1).min(63)
            };
            even_part + zero_part
        }
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_even_enumeration_is_explicit() {
        let got: Vec<String> = admissible_indices(Family::Even { n: 2 }, 2)
            .unwrap()
            .iter()
            .map(|i| i.to_string())
            .collect();
        assert_eq!(got, vec!["1,2", "1,3", "2,4", "3,4"]);
    }

    #[test]
    fn odd_counts_match_closed_form() {
        let fam = Family::Odd { n: 3 }; // letters 0..=6
        assert_eq!(admissible_indices(fam, 2).unwrap().len(), 18);
        assert_eq!(admissible_indices(fam, 4).unwrap().len(), 8);
        for k in 1..=4 {
            assert_eq!(
                admissible_indices(fam, k).unwrap().len() as u64,
                count_admissible(fam, k)
            );
        }
    }

    #[test]
    fn comparison_is_componentwise() {
        let fam = Family::Even { n: 2 };
        let i = AdmissibleIndex::new(fam, vec![1, 2]).unwrap();
        let j = AdmissibleIndex::new(fam, vec![3, 4]).unwrap();
        assert!(i.leq(&i).unwrap());
        assert!(i.leq(&j).unwrap());
        assert!(!j.leq(&i).unwrap());
    }

    #[test]
    fn incomparable_pair() {
        let fam = Family::Even { n: 3 };
        let i = AdmissibleIndex::new(fam, vec![1, 4]).unwrap();
        let j = AdmissibleIndex::new(fam, vec![2, 3]).unwrap();
        assert!(!i.leq(&j).unwrap());
        assert!(!j.leq(&i).unwrap());
    }

    #[test]
    fn validation_rejects_bad_indices() {
        let fam = Family::Even { n: 2 };
        assert!(AdmissibleIndex::new(fam, vec![2, 1]).is_err());
        assert!(AdmissibleIndex::new(fam, vec![1, 4]).is_err()); // opposed pair
        assert!(AdmissibleIndex::new(fam, vec![]).is_err());
        assert!(AdmissibleIndex::new(fam, vec![5]).is_err());
        let odd = Family::Odd { n: 2 };
        assert!(AdmissibleIndex::new(odd, vec![0, 1, 2]).is_ok());
        assert!(AdmissibleIndex::new(odd, vec![1, 4]).is_err()); // 4 = 1̄ when n=2
    }
}
