use std::fmt;

use super::{succ, ElementSet, MAX_GROUND};
use crate::error::{Error, Result};

/// Default largest `d` accepted by [`enumerate_nc`] (`C_14 = 2 674 440`).
pub const DEFAULT_NC_GUARD: usize = 14;

/// A noncrossing partition of `{1, ..., d}`.
///
/// Stored as a restricted growth string: `block_of[e-1]` is the block index of
/// element `e`, and blocks are numbered in order of their minimum element.
/// Ordering and equality are lexicographic on that string.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcPartition {
    block_of: Vec<u8>,
}

/// Per-partition statistics used by the weight functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    /// Number of blocks with at least two elements.
    pub block_count: usize,
    pub singletons: ElementSet,
    /// Elements `k` whose cyclic successor lies in the same block as `k`.
    pub antisingletons: ElementSet,
    /// Largest element of each nonsingleton block.
    pub last_elements: ElementSet,
}

impl PartitionStats {
    /// `|π|`, the total number of blocks.
    pub fn total_blocks(&self) -> usize {
        self.block_count + self.singletons.len()
    }
}

impl NcPartition {
    /// Builds a partition from its blocks, checking that they partition
    /// `{1, ..., d}` and do not cross.
    pub fn from_blocks(d: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if !is_noncrossing(d, blocks)? {
            return Err(Error::Crossing(render_blocks(blocks, d > 9)));
        }
        Ok(Self::from_blocks_unchecked(d, blocks))
    }

    fn from_blocks_unchecked(d: usize, blocks: &[Vec<usize>]) -> Self {
        let mut raw = vec![0usize; d];
        for (b, block) in blocks.iter().enumerate() {
            for &e in block {
                raw[e - 1] = b;
            }
        }
        Self::canonical(&raw)
    }

    /// Relabels arbitrary block labels into restricted-growth form.
    fn canonical(labels: &[usize]) -> Self {
        let mut map: Vec<Option<u8>> = vec![None; labels.iter().max().map_or(0, |m| m + 1)];
        let mut next = 0u8;
        let block_of = labels
            .iter()
            .map(|&l| {
                *map[l].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        NcPartition { block_of }
    }

    /// The partition with every element in its own block.
    pub fn discrete(d: usize) -> Self {
        NcPartition {
            block_of: (0..d as u8).collect(),
        }
    }

    /// The one-block partition `(12...d)`.
    pub fn full(d: usize) -> Self {
        NcPartition {
            block_of: vec![0; d],
        }
    }

    pub fn d(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, element: usize) -> usize {
        self.block_of[element - 1] as usize
    }

    pub fn block_labels(&self) -> &[u8] {
        &self.block_of
    }

    pub fn num_blocks(&self) -> usize {
        self.block_of.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks as sorted element lists, ordered by minimum element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.block_of.iter().enumerate() {
            blocks[b as usize].push(i + 1);
        }
        blocks
    }

    pub fn stats(&self) -> PartitionStats {
        let d = self.d();
        let mut sizes = vec![0usize; self.num_blocks()];
        let mut last = vec![0usize; self.num_blocks()];
        for (i, &b) in self.block_of.iter().enumerate() {
            sizes[b as usize] += 1;
            last[b as usize] = i + 1;
        }
        let mut stats = PartitionStats {
            block_count: sizes.iter().filter(|&&s| s > 1).count(),
            singletons: ElementSet::EMPTY,
            antisingletons: ElementSet::EMPTY,
            last_elements: ElementSet::EMPTY,
        };
        for k in 1..=d {
            let b = self.block_of(k);
            if sizes[b] == 1 {
                stats.singletons.insert(k);
            } else if last[b] == k {
                stats.last_elements.insert(k);
            }
            // At d = 1 the successor of 1 is 1 itself, so 1 counts as an
            // antisingleton; the duality identities require it.
            if self.block_of(succ(k, d)) == b {
                stats.antisingletons.insert(k);
            }
        }
        stats
    }

    /// The Simion–Ullman involution.
    ///
    /// Computed as the Kreweras complement `σ⁻¹ ∘ c` (σ the permutation whose
    /// cycles are the blocks in increasing order, `c = (1 2 ... d)`), whose
    /// cycles live on the gaps `i ~ (i, i+1)`; gap `i < d` is then relabeled
    /// `d - i` and gap `d` keeps label `d`.
    pub fn alpha(&self) -> NcPartition {
        let d = self.d();
        let mut pred = vec![0usize; d + 1];
        for block in self.blocks() {
            for (t, &e) in block.iter().enumerate() {
                let next = block[(t + 1) % block.len()];
                pred[next] = e;
            }
        }
        // complement(i) = σ⁻¹(i + 1)
        let gap_label = |i: usize| if i == d { d } else { d - i };
        let mut labels = vec![usize::MAX; d];
        let mut cycle = 0;
        for start in 1..=d {
            if labels[gap_label(start) - 1] != usize::MAX {
                continue;
            }
            let mut i = start;
            loop {
                labels[gap_label(i) - 1] = cycle;
                i = pred[succ(i, d)];
                if i == start {
                    break;
                }
            }
            cycle += 1;
        }
        Self::canonical(&labels)
    }

    /// Parses `(136)(2)(4)(5)` or the comma form `(1,3,6)(2)(4)(5)`.
    ///
    /// Any comma switches every block to the comma form. Comma-free text is
    /// read digit by digit; if that is not a partition,
    /// each block is read as one number instead, so the all-singleton
    /// rendering `(1)(2)...(10)` parses back. The two readings are never both
    /// valid.
    pub fn parse(text: &str) -> Result<Self> {
        let build = |blocks: Vec<Vec<usize>>| {
            let d = blocks.iter().map(Vec::len).sum();
            Self::from_blocks(d, &blocks)
        };
        let digits = build(parse_blocks(text, text.contains(','))?);
        if digits.is_err() && !text.contains(',') {
            if let Ok(whole) = parse_blocks(text, true).and_then(build) {
                return Ok(whole);
            }
        }
        digits
    }

    /// Text form; elements are comma-separated when `d > 9`.
    pub fn render(&self) -> String {
        render_blocks(&self.blocks(), self.d() > 9)
    }
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPartition{}", self.render())
    }
}

fn render_blocks(blocks: &[Vec<usize>], commas: bool) -> String {
    let sep = if commas { "," } else { "" };
    blocks
        .iter()
        .map(|b| {
            let inner: Vec<String> = b.iter().map(usize::to_string).collect();
            format!("({})", inner.join(sep))
        })
        .collect()
}

fn parse_blocks(text: &str, whole_numbers: bool) -> Result<Vec<Vec<usize>>> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse("empty partition".into()));
    }
    let mut blocks = Vec::new();
    let mut rest = text.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::Parse(format!("expected '(...)' at '{rest}'")))?;
        let (inner, tail) = body;
        let parse_elem = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad element '{s}'")))
        };
        let block = if whole_numbers {
            inner
                .split(',')
                .map(parse_elem)
                .collect::<Result<Vec<_>>>()?
        } else {
            inner
                .chars()
                .map(|c| parse_elem(&c.to_string()))
                .collect::<Result<Vec<_>>>()?
        };
        if block.is_empty() {
            return Err(Error::Parse("empty block".into()));
        }
        blocks.push(block);
        rest = tail;
    }
    Ok(blocks)
}

/// True iff `blocks` has no crossing quadruple `a < b < c < e` with `a, c` in
/// one block and `b, e` in another. Errors if `blocks` is not a set partition
/// of `{1, ..., d}`.
pub fn is_noncrossing(d: usize, blocks: &[Vec<usize>]) -> Result<bool> {
    if d > MAX_GROUND {
        return Err(Error::OutOfRange {
            what: "ground set size",
            value: d as i64,
            allowed: format!("1..={MAX_GROUND}"),
        });
    }
    let mut label = vec![usize::MAX; d + 1];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::NotAPartition("empty block".into()));
        }
        for &e in block {
            if e == 0 || e > d {
                return Err(Error::NotAPartition(format!("element {e} outside 1..={d}")));
            }
            if label[e] != usize::MAX {
                return Err(Error::NotAPartition(format!("element {e} appears twice")));
            }
            label[e] = b;
        }
    }
    if let Some(missing) = (1..=d).find(|&e| label[e] == usize::MAX) {
        return Err(Error::NotAPartition(format!("element {missing} missing")));
    }
    // Between two consecutive elements of a block, every other block must be
    // entirely nested.
    for block in blocks {
        let mut sorted = block.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            for mid in lo + 1..hi {
                let other = &blocks[label[mid]];
                if other.iter().any(|&e| e < lo || e > hi) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All of `NC(d)` in lexicographic order of the block-label string.
pub fn enumerate_nc(d: usize) -> Result<Vec<NcPartition>> {
    enumerate_nc_with_guard(d, DEFAULT_NC_GUARD)
}

pub fn enumerate_nc_with_guard(d: usize, guard: usize) -> Result<Vec<NcPartition>> {
    if d == 0 {
        return Err(Error::OutOfRange {
            what: "d",
            value: 0,
            allowed: "d >= 1".into(),
        });
    }
    if d > guard || d > MAX_GROUND {
        return Err(Error::Guard {
            what: "noncrossing partition enumeration",
            d,
            limit: guard.min(MAX_GROUND),
        });
    }
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(d);
    let mut stack = Vec::with_capacity(d);
    extend(d, 0, &mut labels, &mut stack, &mut out);
    Ok(out)
}

// `stack` holds the blocks that can still receive elements, bottom to top in
// creation order. Joining a block closes every block above it.
fn extend(
    d: usize,
    created: u8,
    labels: &mut Vec<u8>,
    stack: &mut Vec<u8>,
    out: &mut Vec<NcPartition>,
) {
    if labels.len() == d {
        out.push(NcPartition {
            block_of: labels.clone(),
        });
        return;
    }
    for depth in 0..stack.len() {
        let block = stack[depth];
        let saved: Vec<u8> = stack.drain(depth + 1..).collect();
        labels.push(block);
        extend(d, created, labels, stack, out);
        labels.pop();
        stack.extend(saved);
    }
    labels.push(created);
    stack.push(created);
    extend(d, created + 1, labels, stack, out);
    stack.pop();
    labels.pop();
}
