//! Set systems over a finite universe and ±1 colorings of that universe,
//! together with the discrepancy functional Δ_M(x) = Σ_{j ∈ M} x(j).

use crate::bits;
use crate::error::{Error, Result};

/// A subset of the universe `{0..n-1}`, stored as a bitset.
#[derive(Clone, PartialEq, Eq)]
pub struct Subset {
    n: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(n: usize) -> Subset {
        Subset { n, words: vec![0; bits::words_for(n)] }
    }

    /// Builds a subset from 0-based elements; duplicates are rejected so that
    /// file-level typos do not silently change Δ.
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Subset> {
        let mut s = Subset::empty(n);
        for &e in elements {
            if e >= n {
                return Err(Error::invalid(format!("element {} out of range for universe of {}", e + 1, n)));
            }
            if bits::get(&s.words, e) {
                return Err(Error::invalid(format!("duplicate element {}", e + 1)));
            }
            bits::set(&mut s.words, e);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn card(&self) -> usize {
        bits::count_ones(&self.words)
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.n && bits::get(&self.words, e)
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> Vec<usize> {
        bits::ones(&self.words).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits::ones(&self.words)
    }
}

impl std::fmt::Debug for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subset(n={}, {:?})", self.n, self.elements())
    }
}

/// A family M_1, …, M_s of subsets of `{0..n-1}`. Duplicate and empty member
/// sets are allowed — the counting arguments never assume otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetSystem {
    n: usize,
    sets: Vec<Subset>,
}

impl SetSystem {
    pub fn new(n: usize, sets: Vec<Subset>) -> Result<SetSystem> {
        if let Some(bad) = sets.iter().find(|s| s.universe() != n) {
            return Err(Error::invalid(format!(
                "set over universe of {} in a system over universe of {}",
                bad.universe(),
                n
            )));
        }
        Ok(SetSystem { n, sets })
    }

    /// Convenience constructor from 0-based element lists.
    pub fn from_elements(n: usize, sets: &[Vec<usize>]) -> Result<SetSystem> {
        let sets = sets
            .iter()
            .map(|els| Subset::from_elements(n, els))
            .collect::<Result<Vec<_>>>()?;
        Ok(SetSystem { n, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of member sets (s).
    pub fn s(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }
}

/// A coloring x ∈ {−1, +1}^n.
#[derive(Clone, PartialEq, Eq)]
pub struct SignColoring {
    x: Vec<i8>,
}

impl SignColoring {
    /// Every entry must be +1 or −1.
    pub fn from_signs(x: Vec<i8>) -> Result<SignColoring> {
        if let Some(pos) = x.iter().position(|&v| v != 1 && v != -1) {
            return Err(Error::invalid(format!(
                "sign at position {} is {}, expected +1 or -1",
                pos + 1,
                x[pos]
            )));
        }
        Ok(SignColoring { x })
    }

    pub fn all_plus(n: usize) -> SignColoring {
        SignColoring { x: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn sign(&self, j: usize) -> i8 {
        self.x[j]
    }

    pub fn signs(&self) -> &[i8] {
        &self.x
    }
}

impl std::fmt::Debug for SignColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SignColoring(")?;
        for &v in &self.x {
            write!(f, "{}", if v > 0 { '+' } else { '-' })?;
        }
        write!(f, ")")
    }
}

/// Δ_M(x) = Σ_{j ∈ M} x(j). The coloring must cover M's universe exactly.
pub fn delta(m: &Subset, x: &SignColoring) -> Result<i64> {
    if x.n() != m.universe() {
        return Err(Error::invalid(format!(
            "coloring of length {} against a set over universe of {}",
            x.n(),
            m.universe()
        )));
    }
    Ok(m.iter().map(|j| x.sign(j) as i64).sum())
}

/// max_k |Δ_{M_k}(x)| over the system; 0 when the system has no sets.
pub fn max_abs_discrepancy(sys: &SetSystem, x: &SignColoring) -> Result<u64> {
    if x.n() != sys.n() {
        return Err(Error::invalid(format!(
            "coloring of length {} against a system over universe of {}",
            x.n(),
            sys.n()
        )));
    }
    let mut best = 0u64;
    for m in &sys.sets {
        let d = delta(m, x)?.unsigned_abs();
        best = best.max(d);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_validation() {
        assert!(Subset::from_elements(4, &[0, 4]).is_err());
        assert!(Subset::from_elements(4, &[1, 1]).is_err());
        let s = Subset::from_elements(4, &[3, 1]).unwrap();
        assert_eq!(s.elements(), vec![1, 3]);
        assert_eq!(s.card(), 2);
        assert!(s.contains(3) && !s.contains(0));
    }

    #[test]
    fn system_universe_must_match() {
        let good = Subset::from_elements(4, &[0]).unwrap();
        let bad = Subset::from_elements(5, &[0]).unwrap();
        assert!(SetSystem::new(4, vec![good.clone()]).is_ok());
        assert!(SetSystem::new(4, vec![good, bad]).is_err());
    }

    #[test]
    fn duplicate_and_empty_member_sets_are_legal() {
        let sys = SetSystem::from_elements(3, &[vec![], vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(sys.s(), 3);
    }

    #[test]
    fn sign_coloring_rejects_non_unit_entries() {
        assert!(SignColoring::from_signs(vec![1, -1, 0]).is_err());
        assert!(SignColoring::from_signs(vec![1, -1, 2]).is_err());
        assert_eq!(SignColoring::all_plus(3).signs(), &[1, 1, 1]);
    }

    #[test]
    fn delta_of_known_sets() {
        // universe {1..4} (1-based): M1 = {1,2}, M2 = {2,3,4}, x = (+,-,+,-)
        let x = SignColoring::from_signs(vec![1, -1, 1, -1]).unwrap();
        let m1 = Subset::from_elements(4, &[0, 1]).unwrap();
        let m2 = Subset::from_elements(4, &[1, 2, 3]).unwrap();
        assert_eq!(delta(&m1, &x).unwrap(), 0);
        assert_eq!(delta(&m2, &x).unwrap(), -1);

        let sys = SetSystem::new(4, vec![m1, m2]).unwrap();
        assert_eq!(max_abs_discrepancy(&sys, &x).unwrap(), 1);
    }

    #[test]
    fn delta_of_empty_set_is_zero() {
        let x = SignColoring::from_signs(vec![-1, -1]).unwrap();
        assert_eq!(delta(&Subset::empty(2), &x).unwrap(), 0);
    }

    #[test]
    fn empty_system_has_zero_discrepancy() {
        let sys = SetSystem::new(3, vec![]).unwrap();
        let x = SignColoring::from_signs(vec![-1, 1, -1]).unwrap();
        assert_eq!(max_abs_discrepancy(&sys, &x).unwrap(), 0);
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let sys = SetSystem::from_elements(3, &[vec![0]]).unwrap();
        let x = SignColoring::all_plus(4);
        assert!(max_abs_discrepancy(&sys, &x).is_err());
        let m = Subset::from_elements(3, &[0]).unwrap();
        assert!(delta(&m, &x).is_err());
    }
}
