//! Weak compositions and letter contents.
//!
//! A weak composition β = (β_1, ..., β_m) of n is a sequence of non-negative
//! integers summing to n; it is strong when every part is positive.  A
//! [`Content`] couples a composition β with a multiplicity r for the letter 0
//! and describes the multiset {0^r, 1^{β_1}, ..., m^{β_m}}.

use std::fmt;

/// A letter of the alphabet (0 is the distinguished smallest letter).
pub type Letter = u32;

/// A weak composition.  Parts may be zero; the letter i simply does not
/// occur when β_i = 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition { parts }
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    /// `(1, 1, ..., 1)` with n parts.
    pub fn ones(n: usize) -> Self {
        Composition {
            parts: vec![1; n],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// |β| = Σ β_i.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// ℓ(β), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Whether every part is positive.
    pub fn is_strong(&self) -> bool {
        self.parts.iter().all(|&p| p > 0)
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts[i]
    }

    pub fn last(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// β with its last part removed (β of the empty sequence stays empty).
    pub fn drop_last(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.pop();
        Composition { parts }
    }

    /// All weak compositions of `size` with no trailing zero part and at
    /// most `size` parts, in lexicographic order.  This is the finite
    /// universe of contents used by the exhaustive verification sweeps:
    /// interior zero parts are kept (they exercise absent letters) while
    /// trailing zeros, which change nothing, are dropped.
    pub fn enumerate_weak(size: u32) -> Vec<Composition> {
        let mut out = Vec::new();
        if size == 0 {
            out.push(Composition::empty());
            return out;
        }
        let mut parts: Vec<u32> = Vec::new();
        fn rec(remaining: u32, max_len: usize, parts: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if parts.len() == max_len {
                return;
            }
            for p in 0..=remaining {
                parts.push(p);
                if p == remaining && p > 0 {
                    out.push(Composition::new(parts.clone()));
                }
                // a trailing all-zero suffix can never end in a positive part
                if remaining - p > 0 {
                    rec(remaining - p, max_len, parts, out);
                }
                parts.pop();
            }
        }
        rec(size, size as usize, &mut parts, &mut out);
        out.sort();
        out
    }

    /// All strong compositions of `size` (in lexicographic order); the empty
    /// composition for `size = 0`.
    pub fn enumerate_strong(size: u32) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut parts: Vec<u32> = Vec::new();
        fn rec(remaining: u32, parts: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if remaining == 0 {
                out.push(Composition::new(parts.clone()));
                return;
            }
            for p in 1..=remaining {
                parts.push(p);
                rec(remaining - p, parts, out);
                parts.pop();
            }
        }
        rec(size, &mut parts, &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A composition β together with a multiplicity r of the letter 0: the
/// letter multiset {0^r, 1^{β_1}, ..., m^{β_m}}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content {
    pub beta: Composition,
    pub r: u32,
}

impl Content {
    pub fn new(beta: Composition, r: u32) -> Self {
        Content { beta, r }
    }

    /// Total number of letters, |β| + r.
    pub fn total(&self) -> u32 {
        self.beta.size() + self.r
    }

    /// The largest letter of the alphabet, m = ℓ(β).
    pub fn max_letter(&self) -> Letter {
        self.beta.len() as Letter
    }

    /// Multiplicity of `letter` (0 for letters beyond the alphabet).
    pub fn multiplicity(&self, letter: Letter) -> u32 {
        if letter == 0 {
            self.r
        } else {
            self.beta
                .parts()
                .get(letter as usize - 1)
                .copied()
                .unwrap_or(0)
        }
    }

    /// `(letter, multiplicity)` pairs for letters 0..=m, including zero
    /// multiplicities.
    pub fn letter_multiplicities(&self) -> Vec<(Letter, u32)> {
        let mut v = Vec::with_capacity(self.beta.len() + 1);
        v.push((0, self.r));
        for (i, &b) in self.beta.parts().iter().enumerate() {
            v.push((i as Letter + 1, b));
        }
        v
    }

    /// The content obtained by adding 1 to every letter: r becomes the
    /// multiplicity of the new letter 1 and the zero class empties.  Ordered
    /// multiset partitions of the original content with 0 allowed anywhere
    /// correspond bijectively to partitions of this relabeled content.
    pub fn prepend_relabel(&self) -> Content {
        let mut parts = Vec::with_capacity(self.beta.len() + 1);
        parts.push(self.r);
        parts.extend_from_slice(self.beta.parts());
        Content {
            beta: Composition::new(parts),
            r: 0,
        }
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={},beta={}", self.r, self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_and_length() {
        let b = Composition::new(vec![1, 3, 2, 1, 0, 1]);
        assert_eq!(b.size(), 8);
        assert_eq!(b.len(), 6);
        assert!(!b.is_strong());
        assert!(Composition::new(vec![2, 1]).is_strong());
    }

    #[test]
    fn weak_enumeration_counts() {
        // weak compositions of n with positive last part and at most n parts
        assert_eq!(Composition::enumerate_weak(0).len(), 1);
        assert_eq!(Composition::enumerate_weak(1).len(), 1);
        // (2), (1,1), (0,2) ... for n=2: (2), (0,2), (1,1)
        assert_eq!(Composition::enumerate_weak(2).len(), 3);
        // n=3: (3),(0,3),(1,2),(2,1),(0,0,3),(0,1,2),(0,2,1),(1,0,2),(1,1,1),(2,0,1)
        assert_eq!(Composition::enumerate_weak(3).len(), 10);
        for c in Composition::enumerate_weak(4) {
            assert!(c.last().unwrap() > 0);
            assert!(c.len() <= 4);
            assert_eq!(c.size(), 4);
        }
    }

    #[test]
    fn strong_enumeration_counts() {
        assert_eq!(Composition::enumerate_strong(0).len(), 1);
        for n in 1..=7u32 {
            assert_eq!(
                Composition::enumerate_strong(n).len(),
                1usize << (n - 1),
                "strong compositions of {n}"
            );
        }
    }

    #[test]
    fn content_multiplicities() {
        let c = Content::new(Composition::new(vec![2, 0, 1]), 2);
        assert_eq!(c.total(), 5);
        assert_eq!(c.max_letter(), 3);
        assert_eq!(c.multiplicity(0), 2);
        assert_eq!(c.multiplicity(1), 2);
        assert_eq!(c.multiplicity(2), 0);
        assert_eq!(c.multiplicity(3), 1);
        assert_eq!(c.multiplicity(9), 0);
        let p = c.prepend_relabel();
        assert_eq!(p.r, 0);
        assert_eq!(p.beta.parts(), &[2, 2, 0, 1]);
    }
}
