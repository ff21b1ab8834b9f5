//! Ordered multiset partitions: blocks of distinct letters in a fixed order.
//!
//! An ordered multiset partition of the multiset {0^r, 1^{β_1}, ..., m^{β_m}}
//! is a sequence of non-empty blocks, each a set of distinct letters, whose
//! union with multiplicity is the whole multiset.  Since a letter may not
//! repeat inside a block, a partition into k blocks is the same thing as a
//! choice, for every letter, of which blocks contain it — a viewpoint the
//! enumerator exploits.
//!
//! The *tail-positive* partitions are those whose last block does not
//! contain the letter 0.
//!
//! Canonical text form: block elements comma-separated in increasing order,
//! blocks joined by `/`, e.g. `1,3,4/2,6,8/5,7`.  As a convenience the
//! parser also accepts comma-free digit runs (`134/268/57`) when every
//! letter is a single digit.

use std::collections::BTreeSet;
use std::fmt;

use crate::content::{Composition, Content, Letter};
use crate::error::{DomainError, ParseError};

/// A non-empty set of distinct letters, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    elements: Vec<Letter>,
}

impl Block {
    /// Builds a block from elements in any order; rejects duplicates and
    /// emptiness.
    pub fn new(mut elements: Vec<Letter>) -> Result<Self, DomainError> {
        elements.sort_unstable();
        if elements.is_empty() || elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(DomainError::InvalidBlock);
        }
        Ok(Block { elements })
    }

    pub fn elements(&self) -> &[Letter] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> Letter {
        self.elements[0]
    }

    pub fn max(&self) -> Letter {
        *self.elements.last().unwrap()
    }

    /// The h-th smallest element, 1-indexed.
    pub fn kth_smallest(&self, h: usize) -> Option<Letter> {
        self.elements.get(h - 1).copied()
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// An ordered multiset partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedMultisetPartition {
    blocks: Vec<Block>,
}

/// Short alias used throughout the crate.
pub type Omp = OrderedMultisetPartition;

impl OrderedMultisetPartition {
    pub fn new(blocks: Vec<Block>) -> Self {
        OrderedMultisetPartition { blocks }
    }

    /// The empty partition (zero blocks, empty content).
    pub fn empty() -> Self {
        OrderedMultisetPartition { blocks: Vec::new() }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of blocks k.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Total number of letters (with multiplicity).
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Block::len).sum()
    }

    /// The shape (|B_1|, ..., |B_k|), a strong composition.
    pub fn shape(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.len() as u32).collect())
    }

    /// Whether 0 does not occur in the last block (vacuously true for the
    /// empty partition).
    pub fn is_tail_positive(&self) -> bool {
        self.blocks.last().map_or(true, |b| !b.contains(0))
    }

    /// The multiset of letters as a content (r = multiplicity of 0, β_i =
    /// multiplicity of i up to the largest letter present).
    pub fn content(&self) -> Content {
        let max = self
            .blocks
            .iter()
            .map(Block::max)
            .max()
            .unwrap_or(0);
        let mut counts = vec![0u32; max as usize + 1];
        for b in &self.blocks {
            for &x in b.elements() {
                counts[x as usize] += 1;
            }
        }
        let r = counts[0];
        Content::new(Composition::new(counts[1..].to_vec()), r)
    }

    /// Membership test for the partition families: true iff the block count
    /// is `k`, the letter multiset equals `content`, every block is a set,
    /// and (when `tail_positive`) 0 avoids the last block.  Total predicate:
    /// never fails, just answers.
    pub fn validate(&self, content: &Content, k: usize, tail_positive: bool) -> bool {
        if self.block_count() != k {
            return false;
        }
        if tail_positive && !self.is_tail_positive() {
            return false;
        }
        let mut counts = vec![0u64; content.max_letter() as usize + 1];
        for b in &self.blocks {
            for &x in b.elements() {
                if x as usize >= counts.len() {
                    return false;
                }
                counts[x as usize] += 1;
            }
        }
        counts
            .iter()
            .enumerate()
            .all(|(x, &c)| c == content.multiplicity(x as Letter) as u64)
    }

    /// Canonical text form (see module docs).  The empty partition prints
    /// as the empty string.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Parses the canonical (or digit-run) text form.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let mut blocks = Vec::new();
        let mut pos = 1usize; // 1-based position of the current block start
        for part in text.split('/') {
            blocks.push(parse_block(part, pos)?);
            pos += part.len() + 1;
        }
        Ok(OrderedMultisetPartition { blocks })
    }
}

fn parse_block(part: &str, start: usize) -> Result<Block, ParseError> {
    if part.is_empty() {
        return Err(ParseError::EmptyBlock { position: start });
    }
    let elements: Vec<Letter> = if part.contains(',') {
        let mut v = Vec::new();
        let mut pos = start;
        for token in part.split(',') {
            if token.is_empty() {
                return Err(ParseError::InvalidNumber { position: pos });
            }
            if let Some(bad) = token.chars().find(|c| !c.is_ascii_digit()) {
                return Err(ParseError::InvalidCharacter {
                    found: bad,
                    position: pos,
                });
            }
            let x: Letter = token
                .parse()
                .map_err(|_| ParseError::InvalidNumber { position: pos })?;
            v.push(x);
            pos += token.len() + 1;
        }
        v
    } else {
        // comma-free: a run of digits, one letter per digit
        let mut v = Vec::new();
        for (i, c) in part.chars().enumerate() {
            match c.to_digit(10) {
                Some(d) => v.push(d),
                None => {
                    return Err(ParseError::InvalidCharacter {
                        found: c,
                        position: start + i,
                    })
                }
            }
        }
        v
    };
    // strictly increasing, no repeats
    for (i, w) in elements.windows(2).enumerate() {
        if w[0] == w[1] {
            return Err(ParseError::RepeatedElement {
                element: w[0],
                position: start + i,
            });
        }
        if w[0] > w[1] {
            return Err(ParseError::NotIncreasing { position: start + i });
        }
    }
    Block::new(elements).map_err(|_| ParseError::EmptyBlock { position: start })
}

impl fmt::Display for OrderedMultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, x) in b.elements().iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Visits every ordered multiset partition of `content` into `k` blocks,
/// restricted to tail-positive ones when asked.  Visit order is
/// deterministic but unspecified; use [`enumerate_omps`] for the documented
/// order.
pub fn for_each_omp<F: FnMut(&Omp)>(content: &Content, k: usize, tail_positive: bool, mut f: F) {
    if k == 0 {
        if content.total() == 0 {
            f(&Omp::empty());
        }
        return;
    }
    if (content.total() as usize) < k {
        return;
    }
    let letters = content.letter_multiplicities();
    // suffix_total[i] = letters still to place starting from letters[i]
    let mut suffix_total = vec![0u32; letters.len() + 1];
    for i in (0..letters.len()).rev() {
        suffix_total[i] = suffix_total[i + 1] + letters[i].1;
    }
    let mut blocks: Vec<Vec<Letter>> = vec![Vec::new(); k];
    let mut empties = k;

    // For each letter (in increasing order) choose the set of blocks that
    // contain it; blocks then fill in increasing letter order by themselves.
    fn assign<F: FnMut(&Omp)>(
        letters: &[(Letter, u32)],
        suffix_total: &[u32],
        idx: usize,
        k: usize,
        tail_positive: bool,
        blocks: &mut Vec<Vec<Letter>>,
        empties: &mut usize,
        f: &mut F,
    ) {
        if idx == letters.len() {
            if *empties == 0 {
                let omp = Omp::new(
                    blocks
                        .iter()
                        .map(|b| Block::new(b.clone()).expect("blocks are built increasing"))
                        .collect(),
                );
                f(&omp);
            }
            return;
        }
        let (letter, mult) = letters[idx];
        // not enough letters left to fill the empty blocks
        if (suffix_total[idx] as usize) < *empties {
            return;
        }
        let max_block = if letter == 0 && tail_positive { k - 1 } else { k };
        if mult as usize > max_block {
            return;
        }
        // choose `mult` block indices out of 0..max_block
        let mut choice: Vec<usize> = Vec::with_capacity(mult as usize);
        fn choose<F: FnMut(&Omp)>(
            start: usize,
            left: u32,
            max_block: usize,
            letter: Letter,
            choice: &mut Vec<usize>,
            letters: &[(Letter, u32)],
            suffix_total: &[u32],
            idx: usize,
            k: usize,
            tail_positive: bool,
            blocks: &mut Vec<Vec<Letter>>,
            empties: &mut usize,
            f: &mut F,
        ) {
            if left == 0 {
                for &b in choice.iter() {
                    if blocks[b].is_empty() {
                        *empties -= 1;
                    }
                    blocks[b].push(letter);
                }
                assign(
                    letters,
                    suffix_total,
                    idx + 1,
                    k,
                    tail_positive,
                    blocks,
                    empties,
                    f,
                );
                for &b in choice.iter() {
                    blocks[b].pop();
                    if blocks[b].is_empty() {
                        *empties += 1;
                    }
                }
                return;
            }
            let highest = max_block - left as usize;
            let mut b = start;
            while b <= highest {
                choice.push(b);
                choose(
                    b + 1,
                    left - 1,
                    max_block,
                    letter,
                    choice,
                    letters,
                    suffix_total,
                    idx,
                    k,
                    tail_positive,
                    blocks,
                    empties,
                    f,
                );
                choice.pop();
                b += 1;
            }
        }
        choose(
            0,
            mult,
            max_block,
            letter,
            &mut choice,
            letters,
            suffix_total,
            idx,
            k,
            tail_positive,
            blocks,
            empties,
            f,
        );
    }

    assign(
        &letters,
        &suffix_total,
        0,
        k,
        tail_positive,
        &mut blocks,
        &mut empties,
        &mut f,
    );
}

/// Every partition of `content` into `k` blocks, each exactly once, sorted
/// lexicographically by canonical serialization.
pub fn enumerate_omps(content: &Content, k: usize, tail_positive: bool) -> Vec<Omp> {
    let mut out = Vec::new();
    for_each_omp(content, k, tail_positive, |o| out.push(o.clone()));
    out.sort_by_key(|o| o.serialize());
    out
}

/// Number of partitions of `content` into `k` blocks.
pub fn count_omps(content: &Content, k: usize, tail_positive: bool) -> u64 {
    let mut n = 0u64;
    for_each_omp(content, k, tail_positive, |_| n += 1);
    n
}

/// Collects, for every block count k at once, all partitions of `content`
/// grouped by k.  Block counts run from 1 (or 0 for the empty content) to
/// the total letter count.
pub fn for_each_omp_all_k<F: FnMut(usize, &Omp)>(
    content: &Content,
    tail_positive: bool,
    mut f: F,
) {
    let total = content.total() as usize;
    if total == 0 {
        f(0, &Omp::empty());
        return;
    }
    for k in 1..=total {
        for_each_omp(content, k, tail_positive, |o| f(k, o));
    }
}

/// The distinct letters of a content that actually occur, smallest first.
pub fn support(content: &Content) -> Vec<Letter> {
    content
        .letter_multiplicities()
        .into_iter()
        .filter(|&(_, m)| m > 0)
        .map(|(l, _)| l)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn content(beta: &[u32], r: u32) -> Content {
        Content::new(Composition::new(beta.to_vec()), r)
    }

    #[test]
    fn parse_canonical_and_digit_runs() {
        let a = Omp::parse("1,3,4/2,6,8/5,7").unwrap();
        let b = Omp::parse("134/268/57").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.serialize(), "1,3,4/2,6,8/5,7");
        assert_eq!(a.shape().parts(), &[3, 3, 2]);

        let c = Omp::parse("2,3/0,1,2,3/0,1,2").unwrap();
        assert_eq!(c.serialize(), "2,3/0,1,2,3/0,1,2");
        assert_eq!(c.content(), content(&[2, 3, 2], 2));
        assert!(!c.is_tail_positive());
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert_eq!(
            Omp::parse("1,1/2"),
            Err(ParseError::RepeatedElement {
                element: 1,
                position: 1
            })
        );
        assert!(matches!(
            Omp::parse("1//2"),
            Err(ParseError::EmptyBlock { position: 3 })
        ));
        assert!(matches!(
            Omp::parse("1,a/2"),
            Err(ParseError::InvalidCharacter { found: 'a', .. })
        ));
        assert!(matches!(
            Omp::parse("2,1/3"),
            Err(ParseError::NotIncreasing { .. })
        ));
        // digit-run form must be increasing too
        assert!(Omp::parse("21/3").is_err());
    }

    #[test]
    fn validate_families() {
        let a = Omp::parse("0,1/2").unwrap();
        assert!(a.validate(&content(&[1, 1], 1), 2, true));

        let b = Omp::parse("1/0").unwrap();
        assert!(!b.validate(&content(&[1], 1), 2, true));
        assert!(b.validate(&content(&[1], 1), 2, false));

        let c = Omp::parse("2,3/0,1,2,3/0,1,2").unwrap();
        assert!(!c.validate(&content(&[2, 3, 2], 2), 3, true));
        assert!(c.validate(&content(&[2, 3, 2], 2), 3, false));
        // wrong k and wrong content
        assert!(!c.validate(&content(&[2, 3, 2], 2), 2, false));
        assert!(!c.validate(&content(&[2, 3, 1], 2), 3, false));
    }

    #[test]
    fn enumerate_small_families() {
        let omps = enumerate_omps(&content(&[1, 1], 0), 2, true);
        let texts: Vec<String> = omps.iter().map(Omp::serialize).collect();
        assert_eq!(texts, vec!["1/2", "2/1"]);

        let omps = enumerate_omps(&content(&[1], 1), 2, true);
        let texts: Vec<String> = omps.iter().map(Omp::serialize).collect();
        assert_eq!(texts, vec!["0/1"]);

        // the empty content has exactly the empty partition, at k = 0
        let omps = enumerate_omps(&content(&[], 0), 0, true);
        assert_eq!(omps, vec![Omp::empty()]);
        assert!(enumerate_omps(&content(&[], 0), 1, true).is_empty());
        assert!(enumerate_omps(&content(&[1], 0), 0, true).is_empty());
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let omps = enumerate_omps(&content(&[2, 1], 1), 2, false);
        let texts: Vec<String> = omps.iter().map(Omp::serialize).collect();
        let mut sorted = texts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(texts, sorted);
        for o in &omps {
            assert!(o.validate(&content(&[2, 1], 1), 2, false));
        }
    }

    #[test]
    fn zero_parts_in_content_skip_letters() {
        // β = (1,0,1): letters 1 and 3 only
        let omps = enumerate_omps(&content(&[1, 0, 1], 0), 2, true);
        let texts: Vec<String> = omps.iter().map(Omp::serialize).collect();
        assert_eq!(texts, vec!["1/3", "3/1"]);
    }

    #[test]
    fn relabel_count_identity() {
        // |OP^all_{r;β,k}| = |OP_{(r,β),k}| via adding 1 to every letter
        for r in 0..=2u32 {
            for size in 0..=4u32 {
                for beta in Composition::enumerate_weak(size) {
                    let c = Content::new(beta, r);
                    let c_plus = c.prepend_relabel();
                    for k in 0..=(c.total() as usize) {
                        assert_eq!(
                            count_omps(&c, k, false),
                            count_omps(&c_plus, k, true),
                            "content {c} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tail_positive_equals_unrestricted_when_no_zeros() {
        for size in 0..=5u32 {
            for beta in Composition::enumerate_weak(size) {
                let c = Content::new(beta, 0);
                for k in 0..=(c.total() as usize) {
                    assert_eq!(
                        enumerate_omps(&c, k, true),
                        enumerate_omps(&c, k, false)
                    );
                }
            }
        }
    }
}
