//! Signed-permutation windows for the even and odd letter families, their
//! lengths, and the Bruhat order — both the sorted-prefix criterion and a
//! brute-force chain oracle over explicit reflections.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::indices::AdmissibleIndex;

/// A letter, stored as its position in the natural order of its family.
pub type Letter = usize;

/// The alphabet a window lives over.
///
/// * `Even { n }`: letters `1..=2n`, pairing `i ↔ 2n+1-i`, windows have
///   positions `1..=n`.
/// * `Odd { n }`: letters `0..=2n`, pairing `i ↔ 2n+1-i` for `i ≥ 1` with `0`
///   unpaired, windows have positions `0..=n`.
///
/// In both families the natural order on letters is plain integer order, and
/// a letter is "barred" exactly when it is `≥ n+1`; the barred letter with
/// magnitude `k` is `2n+1-k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Even { n: usize },
    Odd { n: usize },
}

impl Family {
    pub fn n(&self) -> usize {
        match *self {
            Family::Even { n } | Family::Odd { n } => n,
        }
    }

    /// Number of letters (the dimension of the underlying vector space).
    pub fn letter_count(&self) -> usize {
        match *self {
            Family::Even { n } => 2 * n,
            Family::Odd { n } => 2 * n + 1,
        }
    }

    /// Number of window positions.
    pub fn window_len(&self) -> usize {
        match *self {
            Family::Even { n } => n,
            Family::Odd { n } => n + 1,
        }
    }

    pub fn min_letter(&self) -> Letter {
        match *self {
            Family::Even { .. } => 1,
            Family::Odd { .. } => 0,
        }
    }

    pub fn max_letter(&self) -> Letter {
        match *self {
            Family::Even { n } => 2 * n,
            Family::Odd { n } => 2 * n,
        }
    }

    /// All letters in natural order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        self.min_letter()..=self.max_letter()
    }

    pub fn contains(&self, l: Letter) -> bool {
        (self.min_letter()..=self.max_letter()).contains(&l)
    }

    /// The letter paired with `l`, if any (`0` in the odd family has none).
    pub fn opposed(&self, l: Letter) -> Option<Letter> {
        debug_assert!(self.contains(l));
        match *self {
            Family::Even { n } => Some(2 * n + 1 - l),
            Family::Odd { n } => (l != 0).then(|| 2 * n + 1 - l),
        }
    }

    pub fn is_barred(&self, l: Letter) -> bool {
        debug_assert!(self.contains(l));
        l >= self.n() + 1
    }

    /// The unbarred representative of `l`'s pair (`0` for the odd letter 0).
    pub fn magnitude(&self, l: Letter) -> usize {
        if self.is_barred(l) {
            2 * self.n() + 1 - l
        } else {
            l
        }
    }

    /// Render a letter in bar notation: `3`, `3b`, `0`.
    pub fn letter_string(&self, l: Letter) -> String {
        if self.is_barred(l) {
            format!("{}b", self.magnitude(l))
        } else {
            format!("{}", l)
        }
    }

    /// Parse bar notation; inverse of [`Family::letter_string`].
    pub fn parse_letter(&self, s: &str) -> Result<Letter> {
        let (digits, barred) = match s.strip_suffix('b') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let mag: usize = digits
            .parse()
            .map_err(|_| Error::InvalidWindow(format!("cannot parse letter `{s}`")))?;
        let l = if barred { 2 * self.n() + 1 - mag } else { mag };
        let lo = if barred { 1 } else { self.min_letter() };
        if mag < lo || mag > self.n() || !self.contains(l) {
            return Err(Error::InvalidWindow(format!(
                "letter `{s}` is out of range for {self:?}"
            )));
        }
        Ok(l)
    }
}

/// An element of a signed-permutation group, stored as its window of letters.
///
/// Even family: an element of W(C_n) as the window `(w(1), …, w(n))`.
/// Odd family: an element of the index set for the odd flag manifold, i.e. a
/// window `(w(0), …, w(n))` over letters `0..=2n`; these are exactly the
/// elements of W(C_{n+1}) whose window avoids the barred partner of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    family: Family,
    window: Vec<Letter>,
}

impl SignedPermutation {
    pub fn new(family: Family, window: Vec<Letter>) -> Result<Self> {
        if window.len() != family.window_len() {
            return Err(Error::InvalidWindow(format!(
                "window length {} does not match family {:?}",
                window.len(),
                family
            )));
        }
        let mut seen = vec![false; family.n() + 1];
        for &l in &window {
            if !family.contains(l) {
                return Err(Error::InvalidWindow(format!(
                    "letter {l} is out of range for {family:?}"
                )));
            }
            let m = family.magnitude(l);
            if seen[m] {
                return Err(Error::InvalidWindow(format!(
                    "two window letters share the magnitude {m}"
                )));
            }
            seen[m] = true;
        }
        Ok(SignedPermutation { family, window })
    }

    pub fn identity(family: Family) -> Self {
        let window = (family.min_letter()..=family.n()).collect();
        SignedPermutation { family, window }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn window(&self) -> &[Letter] {
        &self.window
    }

    /// The induced permutation of all letters of the ambient even-letter
    /// alphabet, as a vector over positions in natural order.
    ///
    /// For `Even { n }` this permutes `1..=2n` (index `p-1` holds the image
    /// of position `p`). For `Odd { n }` it permutes `0..=2n+1`, the alphabet
    /// of the ambient group W(C_{n+1}) in which the odd windows live.
    pub fn full_image(&self) -> Vec<Letter> {
        match self.family {
            Family::Even { n } => {
                let mut img = vec![0; 2 * n];
                for (i, &l) in self.window.iter().enumerate() {
                    img[i] = l;
                    img[2 * n - 1 - i] = 2 * n + 1 - l;
                }
                img
            }
            Family::Odd { n } => {
                let mut img = vec![0; 2 * n + 2];
                for (p, &l) in self.window.iter().enumerate() {
                    img[p] = l;
                    img[2 * n + 1 - p] = 2 * n + 1 - l;
                }
                img
            }
        }
    }

    /// Coxeter length, computed from the full letter permutation:
    /// half of (inversions + number of barred window letters).
    pub fn length(&self) -> usize {
        let img = self.full_image();
        let mut inv = 0;
        for a in 0..img.len() {
            for b in a + 1..img.len() {
                if img[a] > img[b] {
                    inv += 1;
                }
            }
        }
        let barred = self
            .window
            .iter()
            .filter(|&&l| self.family.is_barred(l))
            .count();
        debug_assert!((inv + barred) % 2 == 0);
        (inv + barred) / 2
    }

    /// The first `i` window letters sorted increasingly.
    pub fn flatten_prefix(&self, i: usize) -> AdmissibleIndex {
        assert!(
            i >= 1 && i <= self.window.len(),
            "prefix length {i} out of range"
        );
        let mut letters: Vec<Letter> = self.window[..i].to_vec();
        letters.sort_unstable();
        AdmissibleIndex::new(self.family, letters)
            .expect("window prefixes are always admissible")
    }

    /// Bruhat order via the sorted-prefix criterion: `self ≤ other` iff every
    /// sorted prefix of `self` is componentwise ≤ the one of `other`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        if self.family != other.family {
            return Err(Error::Mismatch(format!(
                "cannot compare {:?} with {:?}",
                self.family, other.family
            )));
        }
        let len = self.window.len();
        let mut a: Vec<Letter> = Vec::with_capacity(len);
        let mut b: Vec<Letter> = Vec::with_capacity(len);
        for i in 0..len {
            let pa = a.partition_point(|&x| x < self.window[i]);
            a.insert(pa, self.window[i]);
            let pb = b.partition_point(|&x| x < other.window[i]);
            b.insert(pb, other.window[i]);
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// r_w(i, j) = #{positions k ≤ i with w(k) ≤ j}, with `i` a position and
    /// `j` a letter in the family's native numbering.
    pub fn rank(&self, i: usize, j: Letter) -> Result<usize> {
        let first = match self.family {
            Family::Even { .. } => 1,
            Family::Odd { .. } => 0,
        };
        let last = first + self.window.len() - 1;
        if i < first || i > last || !self.family.contains(j) {
            return Err(Error::InvalidParameter(format!(
                "rank index ({i}, {j}) outside the rectangle of {:?}",
                self.family
            )));
        }
        let prefix = i - first + 1;
        Ok(self.window[..prefix].iter().filter(|&&l| l <= j).count())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .window
            .iter()
            .map(|&l| self.family.letter_string(l))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parse a comma-separated window in bar notation, e.g. `1b,2` or `2,0`.
pub fn parse_window(family: Family, s: &str) -> Result<SignedPermutation> {
    let letters: Result<Vec<Letter>> = s
        .split(',')
        .map(|part| family.parse_letter(part.trim()))
        .collect();
    SignedPermutation::new(family, letters?)
}

/// The rank function of a window tabulated over its whole rectangle.
///
/// Rows are prefix positions in native numbering, columns are letters in
/// natural order. The table determines the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    family: Family,
    values: Vec<Vec<usize>>,
}

impl RankTable {
    pub fn new(w: &SignedPermutation) -> Self {
        let family = w.family();
        let first = family.min_letter();
        let values = (0..family.window_len())
            .map(|row| {
                family
                    .letters()
                    .map(|j| w.rank(first + row, j).expect("in-rectangle"))
                    .collect()
            })
            .collect();
        RankTable { family, values }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Row-major values; row `i` is the prefix ending at native position
    /// `min_letter + i`, column `j` is the `j`-th letter in natural order.
    pub fn values(&self) -> &[Vec<usize>] {
        &self.values
    }
}

fn enumerate(family: Family) -> Vec<SignedPermutation> {
    let len = family.window_len();
    let mut out = Vec::new();
    let mut window = Vec::with_capacity(len);
    let mut used = vec![false; family.n() + 1];
    fn rec(
        family: Family,
        len: usize,
        window: &mut Vec<Letter>,
        used: &mut Vec<bool>,
        out: &mut Vec<SignedPermutation>,
    ) {
        if window.len() == len {
            out.push(SignedPermutation {
                family,
                window: window.clone(),
            });
            return;
        }
        for l in family.letters() {
            let m = family.magnitude(l);
            if !used[m] {
                used[m] = true;
                window.push(l);
                rec(family, len, window, used, out);
                window.pop();
                used[m] = false;
            }
        }
    }
    rec(family, len, &mut window, &mut used, &mut out);
    out
}

/// All of W(C_n) as windows, in lexicographic order.
pub fn enumerate_weyl_even(n: usize) -> Vec<SignedPermutation> {
    enumerate(Family::Even { n })
}

/// The odd index set: windows over `0..=2n` (equivalently, the order ideal of
/// W(C_{n+1}) below the top odd element), in lexicographic order.
pub fn enumerate_weyl_odd(n: usize) -> Vec<SignedPermutation> {
    enumerate(Family::Odd { n })
}

/// The largest element of the odd family: `(1̄, 2̄, …, n̄, 0)`.
pub fn odd_top_element(n: usize) -> SignedPermutation {
    let mut window: Vec<Letter> = (n + 1..=2 * n).rev().collect();
    window.push(0);
    SignedPermutation::new(Family::Odd { n }, window).expect("valid window")
}

/// Brute-force Bruhat order: breadth-first search over reflection
/// multiplications that raise the length by exactly one.
///
/// The whole ambient group is enumerated up front, so this is capped at
/// ambient rank 5. Odd-family windows are compared inside their ambient
/// W(C_{n+1}) (shifting letters by one), which gives the induced order.
pub struct BruhatChainOracle {
    family: Family,
    ambient: Family,
    index: HashMap<Vec<Letter>, usize>,
    lengths: Vec<usize>,
    covers_up: Vec<Vec<usize>>,
}

impl BruhatChainOracle {
    pub fn new(family: Family) -> Result<Self> {
        let ambient = match family {
            Family::Even { n } => Family::Even { n },
            Family::Odd { n } => Family::Even { n: n + 1 },
        };
        let m = ambient.n();
        if m > 5 {
            return Err(Error::RankCap(format!(
                "chain oracle supports ambient rank ≤ 5, got {m}"
            )));
        }
        let elements = enumerate(ambient);
        let mut index = HashMap::with_capacity(elements.len());
        for (i, w) in elements.iter().enumerate() {
            index.insert(w.window.to_vec(), i);
        }
        let lengths: Vec<usize> = elements.iter().map(|w| w.length()).collect();
        let reflections = reflection_images(m);
        let mut covers_up = vec![Vec::new(); elements.len()];
        for (i, w) in elements.iter().enumerate() {
            for t in &reflections {
                let moved: Vec<Letter> = w.window.iter().map(|&l| t[l - 1]).collect();
                let j = index[&moved];
                if lengths[j] == lengths[i] + 1 {
                    covers_up[i].push(j);
                }
            }
        }
        Ok(BruhatChainOracle {
            family,
            ambient,
            index,
            lengths,
            covers_up,
        })
    }

    fn ambient_window(&self, w: &SignedPermutation) -> Result<Vec<Letter>> {
        if w.family() != self.family {
            return Err(Error::Mismatch(format!(
                "oracle built for {:?}, got {:?}",
                self.family,
                w.family()
            )));
        }
        Ok(match self.family {
            Family::Even { .. } => w.window.to_vec(),
            Family::Odd { .. } => w.window.iter().map(|&l| l + 1).collect(),
        })
    }

    /// Is there a chain of length-raising reflections from `w` to `v`?
    pub fn leq(&self, w: &SignedPermutation, v: &SignedPermutation) -> Result<bool> {
        let start = self.index[&self.ambient_window(w)?];
        let goal = self.index[&self.ambient_window(v)?];
        if start == goal {
            return Ok(true);
        }
        if self.lengths[start] >= self.lengths[goal] {
            return Ok(false);
        }
        let mut seen = vec![false; self.lengths.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &x in &self.covers_up[u] {
                if seen[x] || self.lengths[x] > self.lengths[goal] {
                    continue;
                }
                if x == goal {
                    return Ok(true);
                }
                seen[x] = true;
                queue.push_back(x);
            }
        }
        Ok(false)
    }

    pub fn ambient(&self) -> Family {
        self.ambient
    }
}

/// The reflections of W(C_m) as permutations of the letters `1..=2m`
/// (index `l-1` holds the image of the letter `l`): the transpositions
/// (i, ī) and the double transpositions (i, j)(ī, j̄) with j ∉ {i, ī}.
fn reflection_images(m: usize) -> Vec<Vec<Letter>> {
    let bar = |l: Letter| 2 * m + 1 - l;
    let mut set: HashSet<Vec<Letter>> = HashSet::new();
    for i in 1..=m {
        let mut t: Vec<Letter> = (1..=2 * m).collect();
        t.swap(i - 1, bar(i) - 1);
        set.insert(t);
    }
    for i in 1..=2 * m {
        for j in i + 1..=2 * m {
            if j == bar(i) {
                continue;
            }
            let mut t: Vec<Letter> = (1..=2 * m).collect();
            t.swap(i - 1, j - 1);
            t.swap(bar(i) - 1, bar(j) - 1);
            set.insert(t);
        }
    }
    assert_eq!(set.len(), m * m, "W(C_m) has m^2 reflections");
    let mut list: Vec<Vec<Letter>> = set.into_iter().collect();
    list.sort_unstable();
    list
}

#[cfg(test)]
mod tests {
    use super::*;

    fn even(n: usize) -> Family {
        Family::Even { n }
    }

    fn odd(n: usize) -> Family {
        Family::Odd { n }
    }

    fn w(family: Family, s: &str) -> SignedPermutation {
        parse_window(family, s).unwrap()
    }

    #[test]
    fn even_counts() {
        assert_eq!(enumerate_weyl_even(1).len(), 2);
        assert_eq!(enumerate_weyl_even(2).len(), 8);
        assert_eq!(enumerate_weyl_even(3).len(), 48);
    }

    #[test]
    fn odd_small_family_is_explicit() {
        let got: Vec<String> = enumerate_weyl_odd(1).iter().map(|w| w.to_string()).collect();
        assert_eq!(got, vec!["0,1", "0,1b", "1,0", "1b,0"]);
    }

    #[test]
    fn odd_counts() {
        assert_eq!(enumerate_weyl_odd(2).len(), 24);
        assert_eq!(enumerate_weyl_odd(3).len(), 192);
    }

    #[test]
    fn lengths_match_known_values() {
        assert_eq!(SignedPermutation::identity(even(2)).length(), 0);
        assert_eq!(w(even(2), "1b,2b").length(), 4);
        assert_eq!(w(odd(1), "1b,0").length(), 2);
        assert_eq!(w(odd(1), "1b,0").full_image(), vec![2, 0, 3, 1]);
    }

    #[test]
    fn prefix_flattening_sorts() {
        let x = w(even(2), "1b,2");
        assert_eq!(x.flatten_prefix(1).letters(), &[4]);
        assert_eq!(x.flatten_prefix(2).letters(), &[2, 4]);
        let top = odd_top_element(2);
        assert_eq!(top.to_string(), "1b,2b,0");
        assert_eq!(top.flatten_prefix(3).letters(), &[0, 3, 4]);
    }

    #[test]
    fn prefix_criterion_on_known_pairs() {
        let a = w(even(2), "2,1");
        let b = w(even(2), "1b,2");
        assert!(a.bruhat_leq(&a).unwrap());
        assert!(a.bruhat_leq(&b).unwrap());
        assert!(!b.bruhat_leq(&a).unwrap());
        assert_eq!(a.length(), 1);
        assert_eq!(b.length(), 3);
    }

    #[test]
    fn chain_oracle_agrees_on_examples() {
        let oracle = BruhatChainOracle::new(even(2)).unwrap();
        let a = w(even(2), "2,1");
        let b = w(even(2), "1b,2");
        assert!(oracle.leq(&a, &a).unwrap());
        assert!(oracle.leq(&a, &b).unwrap());
        // the two length-2 elements of W(C_2) are incomparable
        let c = w(even(2), "2,1b");
        let d = w(even(2), "2b,1");
        assert_eq!(c.length(), 2);
        assert_eq!(d.length(), 2);
        assert!(!oracle.leq(&c, &d).unwrap());
        assert!(!oracle.leq(&d, &c).unwrap());
    }

    #[test]
    fn rank_function_values() {
        let id = SignedPermutation::identity(even(3));
        assert_eq!(id.rank(2, 2).unwrap(), 2);
        assert_eq!(w(even(2), "2,1").rank(1, 2).unwrap(), 1);
        assert_eq!(w(even(2), "1b,2").rank(1, 3).unwrap(), 0);
        assert!(w(even(2), "2,1").rank(3, 1).is_err());
    }

    #[test]
    fn rank_tables_separate_elements() {
        let all = enumerate_weyl_even(2);
        let tables: HashSet<Vec<Vec<usize>>> = all
            .iter()
            .map(|w| RankTable::new(w).values().to_vec())
            .collect();
        assert_eq!(tables.len(), all.len());
    }

    #[test]
    fn window_validation_rejects_bad_input() {
        assert!(SignedPermutation::new(even(2), vec![1, 4]).is_err()); // same magnitude
        assert!(SignedPermutation::new(even(2), vec![1]).is_err());
        assert!(SignedPermutation::new(odd(1), vec![3, 0]).is_err()); // out of range
        assert!(parse_window(even(2), "0,1").is_err()); // no 0 in the even family
    }

    #[test]
    fn rank_cap_enforced() {
        assert!(BruhatChainOracle::new(even(6)).is_err());
        assert!(BruhatChainOracle::new(odd(5)).is_err());
        assert!(BruhatChainOracle::new(odd(4)).is_ok());
    }
}
