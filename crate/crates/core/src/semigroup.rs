//! Numerical semigroups stored as a Frobenius number plus a membership table.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::genset::{GenSet, Submonoid};

/// A numerical semigroup `S ⊆ ℕ`.
///
/// Stored canonically as its Frobenius number `F` and the membership table on
/// `[0, F]`; every integer above `F` is implicitly a member. The full
/// semigroup ℕ uses `F = 0` with table `[true]`, so `frobenius()` reports `0`
/// and `gaps()` is empty for it.
///
/// Equality and hashing look only at the canonical value. The minimal
/// generating set and the genus are computed lazily and cached.
#[derive(Clone)]
pub struct NumericalSemigroup {
    frobenius: u32,
    small: Vec<bool>,
    msg: OnceLock<Vec<u32>>,
    genus: OnceLock<u32>,
}

impl NumericalSemigroup {
    /// ℕ itself.
    pub fn full() -> Self {
        Self::from_table_unchecked(0, vec![true])
    }

    pub(crate) fn from_table_unchecked(frobenius: u32, small: Vec<bool>) -> Self {
        debug_assert_eq!(small.len(), frobenius as usize + 1);
        debug_assert!(small[0]);
        debug_assert!(frobenius == 0 || !small[frobenius as usize]);
        debug_assert!(first_closure_violation(frobenius, &small).is_none());
        NumericalSemigroup {
            frobenius,
            small,
            msg: OnceLock::new(),
            genus: OnceLock::new(),
        }
    }

    /// Builds `members ∪ {F+1, →}` after validating it.
    ///
    /// `members` must lie in `[0, F]`, contain `0` and omit `F`. With `F = 0`
    /// and `members = {0}` the result is ℕ.
    pub fn from_small_elements<I>(members: I, frobenius: u32) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut small = vec![false; frobenius as usize + 1];
        for m in members {
            if m > frobenius {
                return Err(Error::OutOfRange {
                    value: m,
                    bound: frobenius,
                });
            }
            small[m as usize] = true;
        }
        if !small[0] {
            return Err(Error::MissingZero);
        }
        if frobenius == 0 {
            return Ok(Self::full());
        }
        if small[frobenius as usize] {
            return Err(Error::FrobeniusPresent(frobenius));
        }
        if let Some((x, y)) = first_closure_violation(frobenius, &small) {
            return Err(Error::ClosureViolation { x, y });
        }
        Ok(Self::from_table_unchecked(frobenius, small))
    }

    /// `ℕ ∖ gaps`, validated. The largest gap becomes the Frobenius number.
    pub fn from_gaps<I>(gaps: I) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
    {
        let gaps: Vec<u32> = gaps.into_iter().collect();
        if gaps.contains(&0) {
            return Err(Error::MissingZero);
        }
        let f = gaps.iter().copied().max().unwrap_or(0);
        let mut small = vec![true; f as usize + 1];
        for g in gaps {
            small[g as usize] = false;
        }
        Self::from_small_elements(
            small
                .iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(x, _)| x as u32),
            f,
        )
    }

    /// ⟨gens⟩, which must have gcd 1.
    pub fn from_generators(gens: &GenSet) -> Result<Self> {
        let g = gens.gcd();
        if g != 1 {
            return Err(Error::NotNumerical(g));
        }
        let m = gens.min().expect("gcd 1 implies non-empty") as usize;
        // grow the table until m consecutive members appear
        let mut member = vec![true];
        let mut run = 1usize;
        let mut x = 0usize;
        while run < m {
            x += 1;
            let is =
                gens.iter().take_while(|&g| g as usize <= x).any(|g| member[x - g as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        let frobenius = member.iter().rposition(|&b| !b);
        match frobenius {
            None => Ok(Self::full()),
            Some(f) => {
                member.truncate(f + 1);
                Ok(Self::from_table_unchecked(f as u32, member))
            }
        }
    }

    /// `⟨A⟩ ∪ {F+1, →}`; the monoid table must reach `F` and exclude it.
    pub(crate) fn cofinite_extension(monoid: &Submonoid, frobenius: u32) -> Self {
        assert!(monoid.bound() >= frobenius);
        let small: Vec<bool> = (0..=frobenius).map(|x| monoid.contains(x)).collect();
        Self::from_table_unchecked(frobenius, small)
    }

    pub fn is_full(&self) -> bool {
        self.frobenius == 0
    }

    pub fn contains(&self, x: u32) -> bool {
        x > self.frobenius || self.small[x as usize]
    }

    /// Largest gap; `0` for ℕ.
    pub fn frobenius(&self) -> u32 {
        self.frobenius
    }

    pub fn conductor(&self) -> u32 {
        if self.is_full() {
            0
        } else {
            self.frobenius + 1
        }
    }

    pub fn genus(&self) -> u32 {
        *self.genus.get_or_init(|| self.small.iter().filter(|&&m| !m).count() as u32)
    }

    pub fn gaps(&self) -> Vec<u32> {
        self.gaps_iter().collect()
    }

    pub fn gaps_iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.small
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(x, _)| x as u32)
    }

    /// Members in `[0, F]`.
    pub fn small_elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.small
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(x, _)| x as u32)
    }

    /// The smallest non-zero member.
    pub fn multiplicity(&self) -> u32 {
        (1..).find(|&x| self.contains(x)).unwrap()
    }

    /// The minimal generating set `(S∖{0}) ∖ ((S∖{0}) + (S∖{0}))`.
    ///
    /// No minimal generator exceeds `2F + 1`: any larger `x` splits as
    /// `(x − F − 1) + (F + 1)` with both parts non-zero members.
    pub fn msg(&self) -> &[u32] {
        self.msg.get_or_init(|| {
            let top = 2 * self.frobenius + 1;
            (1..=top)
                .filter(|&x| self.contains(x))
                .filter(|&x| !(1..=x / 2).any(|y| self.contains(y) && self.contains(x - y)))
                .collect()
        })
    }

    pub fn embedding_dimension(&self) -> usize {
        self.msg().len()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.frobenius >= other.frobenius
            && (0..=self.frobenius).all(|x| !self.contains(x) || other.contains(x))
    }

    /// `S ∩ T`; its Frobenius number is `max(F(S), F(T))`.
    pub fn intersect(&self, other: &Self) -> Self {
        let f = self.frobenius.max(other.frobenius);
        let small = (0..=f).map(|x| self.contains(x) && other.contains(x)).collect();
        Self::from_table_unchecked(f, small)
    }

    /// `A ⊆ S`.
    pub fn contains_genset(&self, a: &GenSet) -> bool {
        a.iter().all(|x| self.contains(x))
    }

    /// `S ∩ B = ∅`.
    pub fn avoids_genset(&self, b: &GenSet) -> bool {
        b.iter().all(|x| !self.contains(x))
    }

    /// `(S ∖ {remove}) ∪ {add}`, both below `F`; the caller guarantees the
    /// result is a semigroup with the same Frobenius number.
    pub(crate) fn exchange(&self, remove: u32, add: u32) -> Self {
        let mut small = self.small.clone();
        debug_assert!(small[remove as usize] && !small[add as usize]);
        small[remove as usize] = false;
        small[add as usize] = true;
        Self::from_table_unchecked(self.frobenius, small)
    }

    /// `S ∪ extra` for gaps strictly below `F`; the caller guarantees closure.
    pub(crate) fn with_members<I: IntoIterator<Item = u32>>(&self, extra: I) -> Self {
        let mut small = self.small.clone();
        for x in extra {
            debug_assert!(x < self.frobenius);
            small[x as usize] = true;
        }
        Self::from_table_unchecked(self.frobenius, small)
    }
}

fn first_closure_violation(frobenius: u32, small: &[bool]) -> Option<(u32, u32)> {
    let f = frobenius as usize;
    for x in 1..=f {
        if !small[x] {
            continue;
        }
        for y in x..=f - x {
            if small[y] && !small[x + y] {
                return Some((x as u32, y as u32));
            }
        }
    }
    None
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.frobenius == other.frobenius && self.small == other.small
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.frobenius.hash(state);
        self.small.hash(state);
    }
}

/// Lexicographic order on the sorted gap lists.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps_iter().cmp(other.gaps_iter())
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.msg().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(&GenSet::normalize(gens.iter().copied())).unwrap()
    }

    #[test]
    fn generators_roundtrip_through_msg() {
        assert_eq!(sg(&[4, 6, 9]).msg(), &[4, 6, 9]);
        assert_eq!(sg(&[4, 6, 9]).frobenius(), 11);
        assert_eq!(sg(&[4, 13, 14, 15]).msg(), &[4, 13, 14, 15]);
        assert_eq!(sg(&[4, 13, 14, 15]).frobenius(), 11);
        assert_eq!(NumericalSemigroup::full().msg(), &[1]);
        assert_eq!(sg(&[1]), NumericalSemigroup::full());
    }

    #[test]
    fn from_small_elements_examples() {
        let s = NumericalSemigroup::from_small_elements([0, 4, 6, 8, 9, 10], 11).unwrap();
        assert_eq!(s, sg(&[4, 6, 9]));
        assert_eq!(
            NumericalSemigroup::from_small_elements([0, 2], 4).unwrap_err(),
            Error::ClosureViolation { x: 2, y: 2 }
        );
        let s = NumericalSemigroup::from_small_elements([0], 1).unwrap();
        assert_eq!(s, sg(&[2, 3]));
        assert_eq!(
            NumericalSemigroup::from_small_elements([0, 3], 3).unwrap_err(),
            Error::FrobeniusPresent(3)
        );
        assert_eq!(
            NumericalSemigroup::from_small_elements([4], 5).unwrap_err(),
            Error::MissingZero
        );
        assert!(matches!(
            NumericalSemigroup::from_small_elements([0, 7], 5),
            Err(Error::OutOfRange { value: 7, bound: 5 })
        ));
    }

    #[test]
    fn invariants_of_examples() {
        let s = sg(&[4, 6, 9]);
        assert_eq!((s.frobenius(), s.genus()), (11, 6));
        assert_eq!(s.gaps(), vec![1, 2, 3, 5, 7, 11]);
        let s = sg(&[4, 9, 15]);
        assert_eq!(s.gaps(), vec![1, 2, 3, 5, 6, 7, 10, 11, 14]);
        assert_eq!((s.frobenius(), s.genus()), (14, 9));
        let n = NumericalSemigroup::full();
        assert_eq!((n.frobenius(), n.genus()), (0, 0));
        assert!(n.gaps().is_empty());
    }

    #[test]
    fn gcd_greater_than_one_is_rejected() {
        assert_eq!(
            NumericalSemigroup::from_generators(&GenSet::from([4, 6])).unwrap_err(),
            Error::NotNumerical(2)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&GenSet::empty()).unwrap_err(),
            Error::NotNumerical(0)
        );
    }

    #[test]
    fn intersection() {
        let s = sg(&[4, 5]).intersect(&sg(&[4, 6, 9]));
        assert_eq!(s.small_elements().collect::<Vec<_>>(), vec![0, 4, 8, 9, 10]);
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.msg(), &[4, 9, 10, 15]);
        let t = sg(&[4, 6, 9]);
        assert_eq!(t.intersect(&t), t);
        assert_eq!(t.intersect(&NumericalSemigroup::full()), t);
    }

    #[test]
    fn genset_predicates() {
        assert!(sg(&[4, 6, 9]).contains_genset(&GenSet::from([4, 9])));
        assert!(!sg(&[2, 13]).contains_genset(&GenSet::from([4, 9])));
        assert!(sg(&[2, 13]).avoids_genset(&GenSet::empty()));
        assert!(sg(&[4, 9, 15]).avoids_genset(&GenSet::from([11, 14])));
    }

    #[test]
    fn gap_order_and_subset() {
        let mut v = [sg(&[4, 6, 9]), NumericalSemigroup::full(), sg(&[2, 13]), sg(&[4, 5])];
        v.sort();
        assert_eq!(v[0], NumericalSemigroup::full());
        assert_eq!(v[1], sg(&[4, 6, 9]));
        assert_eq!(v[3], sg(&[2, 13]));
        assert!(sg(&[4, 13, 14, 15]).is_subset_of(&sg(&[4, 6, 9])));
        assert!(!sg(&[4, 6, 9]).is_subset_of(&sg(&[4, 13, 14, 15])));
        assert!(sg(&[4, 6, 9]).is_subset_of(&NumericalSemigroup::full()));
    }

    #[test]
    fn from_gaps_matches() {
        assert_eq!(NumericalSemigroup::from_gaps([1, 2, 4]).unwrap(), sg(&[3, 5, 7]));
        assert_eq!(NumericalSemigroup::from_gaps([]).unwrap(), NumericalSemigroup::full());
    }
}
