//! Colour sequences: square detection, a fixed square-free ternary word, and
//! the block-insertion operators used to glue nonrepetitive pieces together.

use std::collections::HashSet;
use std::hash::Hash;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Colours are small positive integers. Colour `0` is never produced by the
/// constructions in this crate but is not forbidden.
pub type Colour = u32;

/// A finite sequence of colours read off a path.
pub type ColourSequence = Vec<Colour>;

/// An occurrence of a repetition `x x` inside a sequence.
///
/// Indices are 0-based; the occurrence covers `start .. start + 2 * half_length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Square {
    pub start: usize,
    pub half_length: usize,
}

impl Square {
    pub fn len(&self) -> usize {
        2 * self.half_length
    }

    pub fn is_empty(&self) -> bool {
        self.half_length == 0
    }

    pub fn end(&self) -> usize {
        self.start + self.len()
    }

    /// Whether this square really occurs in `seq`.
    pub fn occurs_in<T: PartialEq>(&self, seq: &[T]) -> bool {
        self.half_length > 0
            && self.end() <= seq.len()
            && (0..self.half_length)
                .all(|i| seq[self.start + i] == seq[self.start + self.half_length + i])
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("alphabets overlap: symbol at position {position} of the base sequence also occurs in a block")]
    AlphabetOverlap { position: usize },
    #[error("expected {expected} blocks for {cuts} cut points, got {got}")]
    BlockCount {
        expected: usize,
        cuts: usize,
        got: usize,
    },
    #[error("cut points must be strictly increasing and lie strictly inside 0..{len}")]
    InvalidCuts { len: usize },
    #[error("symbol {symbol} at position {position} is outside {{1,2,3}}")]
    OutOfAlphabet { position: usize, symbol: Colour },
}

/// Returns the leftmost square of consecutive terms, and among those starting at
/// the leftmost position the shortest one.
///
/// For each half-length `h` one pass counts runs of positions `i` with
/// `seq[i] == seq[i + h]`; a run of length `h` starting at `i` is a square.
/// Quadratic overall.
pub fn contains_square<T: PartialEq>(seq: &[T]) -> Option<Square> {
    let n = seq.len();
    let mut best: Option<Square> = None;
    for h in 1..=n / 2 {
        // A square with a larger half-length can only win by starting strictly
        // earlier, so stop scanning once we reach the current best start.
        let limit = match best {
            Some(b) => b.start.min(n - 2 * h + 1),
            None => n - 2 * h + 1,
        };
        let mut run = 0usize;
        let mut i = 0usize;
        // `run` counts matches seq[j] == seq[j+h] for j in (i - run) .. i.
        while i < n - h {
            if seq[i] == seq[i + h] {
                run += 1;
                if run >= h {
                    let start = i + 1 - h;
                    if start < limit {
                        best = Some(Square {
                            start,
                            half_length: h,
                        });
                    }
                    break;
                }
            } else {
                run = 0;
                if i + 1 >= limit {
                    break;
                }
            }
            i += 1;
        }
        if let Some(b) = best {
            if b.start == 0 {
                // nothing can start earlier, and a larger h is longer
                break;
            }
        }
    }
    best
}

/// True iff `seq` has no square of consecutive terms.
pub fn is_square_free<T: PartialEq>(seq: &[T]) -> bool {
    contains_square(seq).is_none()
}

/// Whether the last element of `seq` completes a square, i.e. some suffix of
/// `seq` is a square. Returns the shortest such suffix.
pub fn square_suffix<T: PartialEq>(seq: &[T]) -> Option<Square> {
    let n = seq.len();
    (1..=n / 2)
        .find(|&h| (0..h).all(|i| seq[n - 2 * h + i] == seq[n - h + i]))
        .map(|h| Square {
            start: n - 2 * h,
            half_length: h,
        })
}

/// Prefix of length `n` of a fixed infinite square-free word over `{1, 2, 3}`.
///
/// The word counts the `1`s between consecutive `0`s of the Thue–Morse word
/// (giving `2 1 0 2 0 1 2 1 0 1 2 0 ...`) and then relabels `2 -> 1`,
/// `1 -> 2`, `0 -> 3`, so it starts `1 2 3 1 3 2 1 2 3 2 1 3`.
pub fn squarefree_ternary(n: usize) -> ColourSequence {
    let thue_morse = |i: u64| (i.count_ones() & 1) as u8;
    let mut out = Vec::with_capacity(n);
    let mut pos: u64 = 0;
    // position 0 of the Thue-Morse word is a 0
    while out.len() < n {
        pos += 1;
        let mut ones = 0;
        while thue_morse(pos) == 1 {
            ones += 1;
            pos += 1;
        }
        out.push(match ones {
            2 => 1,
            1 => 2,
            _ => 3,
        });
    }
    out
}

/// Glues `blocks` around consecutive segments of `base`:
/// `B0, base[..c1], B1, base[c1..c2], ..., Br, base[cr..], B(r+1)`.
///
/// With `r` cut points there are `r + 1` segments and `r + 2` blocks. Cut
/// points must lie strictly inside the sequence so that every segment is
/// non-empty. If `base` and every block are square-free and no symbol of
/// `base` occurs in any block, the result is square-free.
pub fn interleave<T: Clone + Eq + Hash>(
    base: &[T],
    blocks: &[Vec<T>],
    cut_points: &[usize],
) -> Result<Vec<T>, SeqError> {
    if blocks.len() != cut_points.len() + 2 {
        return Err(SeqError::BlockCount {
            expected: cut_points.len() + 2,
            cuts: cut_points.len(),
            got: blocks.len(),
        });
    }
    let len = base.len();
    let increasing = cut_points.windows(2).all(|w| w[0] < w[1]);
    let inside = cut_points.iter().all(|&c| c > 0 && c < len);
    if !increasing || !inside {
        return Err(SeqError::InvalidCuts { len });
    }
    let block_symbols: HashSet<&T> = blocks.iter().flatten().collect();
    if let Some(position) = base.iter().position(|s| block_symbols.contains(s)) {
        return Err(SeqError::AlphabetOverlap { position });
    }

    let total = len + blocks.iter().map(Vec::len).sum::<usize>();
    let mut out = Vec::with_capacity(total);
    let mut from = 0;
    for (i, block) in blocks.iter().enumerate() {
        out.extend_from_slice(block);
        let to = match i {
            _ if i < cut_points.len() => cut_points[i],
            _ if i == cut_points.len() => len,
            _ => break,
        };
        out.extend_from_slice(&base[from..to]);
        from = to;
    }
    Ok(out)
}

/// Element-wise `4 - s` on a sequence over `{1, 2, 3}`.
pub fn complement_ternary(seq: &[Colour]) -> Result<ColourSequence, SeqError> {
    seq.iter()
        .enumerate()
        .map(|(position, &symbol)| match symbol {
            1..=3 => Ok(4 - symbol),
            _ => Err(SeqError::OutOfAlphabet { position, symbol }),
        })
        .collect()
}

/// Counts distinct symbols.
pub fn distinct_count<T: Eq + Hash>(seq: &[T]) -> usize {
    seq.iter().collect::<HashSet<_>>().len()
}


#[cfg(test)]
mod tests {
    use super::oracle::*;
    use super::*;
    use proptest::prelude::*;

    fn sq(start: usize, half_length: usize) -> Option<Square> {
        Some(Square { start, half_length })
    }

    #[test]
    fn small_examples() {
        assert_eq!(contains_square(&['a', 'b', 'a']), None);
        assert_eq!(contains_square(&['a', 'a']), sq(0, 1));
        assert_eq!(contains_square(&['a', 'b', 'c', 'a', 'b', 'c']), sq(0, 3));
        assert_eq!(contains_square::<u32>(&[]), None);
        assert_eq!(contains_square(&[7]), None);
        // leftmost wins over shorter: "abab" at 0 (h=2) beats "cc" later
        assert_eq!(contains_square(&[1, 2, 1, 2, 3, 3]), sq(0, 2));
        // at equal start, shortest wins
        assert_eq!(contains_square(&[1, 1, 1, 1]), sq(0, 1));
    }

    #[test]
    fn oracle_agrees_exhaustively_up_to_length_12() {
        for len in 0..=12 {
            for k in 1..=3u32 {
                if k == 1 && len > 3 {
                    continue;
                }
                for w in all_words(len, k) {
                    assert_eq!(contains_square(&w), all_blocks_square(&w), "{w:?}");
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn oracle_agrees_on_random_longer(w in proptest::collection::vec(0u32..4, 13..60)) {
            prop_assert_eq!(contains_square(&w), all_blocks_square(&w));
        }

        #[test]
        fn suffix_matches_scan(w in proptest::collection::vec(0u32..3, 0..30)) {
            let expected = (1..=w.len() / 2)
                .find(|&h| Square { start: w.len() - 2 * h, half_length: h }.occurs_in(&w));
            prop_assert_eq!(square_suffix(&w).map(|s| s.half_length), expected);
        }
    }

    #[test]
    fn ternary_word_prefix() {
        assert!(squarefree_ternary(0).is_empty());
        assert_eq!(squarefree_ternary(12), vec![1, 2, 3, 1, 3, 2, 1, 2, 3, 2, 1, 3]);
        let four = squarefree_ternary(4);
        assert_eq!(four.len(), 4);
        assert!(is_square_free(&four));
    }

    #[test]
    fn ternary_word_is_square_free() {
        let w = squarefree_ternary(1000);
        assert_eq!(w.len(), 1000);
        assert!(w.iter().all(|c| (1..=3).contains(c)));
        assert!(is_square_free(&w));
        assert!(all_blocks_square(&w[..300]).is_none());
        for n in [1, 2, 3, 5, 17, 64, 999] {
            let p = squarefree_ternary(n);
            assert_eq!(&p[..], &w[..n]);
        }
    }

    #[test]
    fn interleave_examples() {
        let out = interleave(&['x'], &[vec!['p'], vec!['q']], &[]).unwrap();
        assert_eq!(out, vec!['p', 'x', 'q']);

        let rainbow = ['x', 'y', 'z'];
        let blocks = vec![vec!['w']; 4];
        let out = interleave(&rainbow, &blocks, &[1, 2]).unwrap();
        assert_eq!(out, vec!['w', 'x', 'w', 'y', 'w', 'z', 'w']);
        assert!(is_square_free(&out));

        let base = squarefree_ternary(20);
        let cuts = [3, 7, 8, 15];
        let blocks = vec![vec![9]; cuts.len() + 2];
        let out = interleave(&base, &blocks, &cuts).unwrap();
        assert_eq!(out.len(), 26);
        assert!(all_blocks_square(&out).is_none());
    }

    #[test]
    fn interleave_errors() {
        assert_eq!(
            interleave(&[1, 2], &[vec![2], vec![5], vec![6]], &[1]),
            Err(SeqError::AlphabetOverlap { position: 1 })
        );
        assert!(matches!(
            interleave(&[1, 2], &[vec![5]], &[]),
            Err(SeqError::BlockCount { .. })
        ));
        assert!(matches!(
            interleave(&[1, 2, 3], &[vec![5], vec![5], vec![5]], &[0]),
            Err(SeqError::InvalidCuts { .. })
        ));
        assert!(matches!(
            interleave(&[1, 2, 3], &vec![vec![5]; 4], &[2, 1]),
            Err(SeqError::InvalidCuts { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn single_symbol_insertions_stay_square_free(
            offset in 0usize..500,
            len in 1usize..40,
            cut_mask in proptest::collection::vec(any::<bool>(), 40),
            fillers in proptest::collection::vec(4u32..7, 42),
        ) {
            let word = squarefree_ternary(offset + len);
            let base = &word[offset..];
            let cuts: Vec<usize> = (1..len).filter(|&c| cut_mask[c]).collect();
            let blocks: Vec<Vec<u32>> =
                (0..cuts.len() + 2).map(|i| vec![fillers[i]]).collect();
            let out = interleave(base, &blocks, &cuts).unwrap();
            prop_assert!(is_square_free(&out));
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_ternary(&[1, 2, 3]).unwrap(), vec![3, 2, 1]);
        assert_eq!(complement_ternary(&[2, 2]).unwrap(), vec![2, 2]);
        assert_eq!(
            complement_ternary(&[1, 4]),
            Err(SeqError::OutOfAlphabet {
                position: 1,
                symbol: 4
            })
        );
        let c = complement_ternary(&squarefree_ternary(100)).unwrap();
        assert!(is_square_free(&c));
    }

    #[test]
    fn complement_preserves_square_freeness_exhaustively() {
        for len in 0..=12 {
            for w in all_words(len, 3) {
                let w: Vec<u32> = w.into_iter().map(|c| c + 1).collect();
                if is_square_free(&w) {
                    assert!(is_square_free(&complement_ternary(&w).unwrap()));
                }
            }
        }
    }
}
