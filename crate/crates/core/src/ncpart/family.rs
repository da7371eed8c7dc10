use std::fmt;

use super::{succ, ElementSet, MAX_GROUND};
use crate::error::{Error, Result};

/// Default largest `d` for exhaustive sweeps over all interval families.
pub const DEFAULT_FAMILY_GUARD: usize = 8;

/// A family of pairwise disjoint cyclic intervals on `{1, ..., d}`.
///
/// `[k, l]` with `k <= l` is the ordinary run `k..=l`; `k > l` is a wrapped
/// interval `k, ..., d, 1, ..., l`. Intervals are kept sorted by their first
/// element, so a wrapped interval is always last. The special full wrapped
/// interval `[1,d]*` is represented by `star`; unlike the plain `[1,d]` it
/// also contains the cyclic pair `{d, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalFamily {
    d: usize,
    intervals: Vec<(usize, usize)>,
    star: bool,
}

impl IntervalFamily {
    pub fn empty(d: usize) -> Self {
        IntervalFamily {
            d,
            intervals: Vec::new(),
            star: false,
        }
    }

    /// `{[1,d]*}`.
    pub fn star(d: usize) -> Self {
        IntervalFamily {
            d,
            intervals: vec![(1, d)],
            star: true,
        }
    }

    /// Validates and normalizes a list of `(start, end)` intervals.
    pub fn new(d: usize, intervals: Vec<(usize, usize)>) -> Result<Self> {
        if d == 0 || d > MAX_GROUND {
            return Err(Error::OutOfRange {
                what: "ground set size",
                value: d as i64,
                allowed: format!("1..={MAX_GROUND}"),
            });
        }
        let mut covered = ElementSet::EMPTY;
        let mut wrapped = 0;
        for &(k, l) in &intervals {
            if !(1..=d).contains(&k) || !(1..=d).contains(&l) {
                return Err(Error::InvalidFamily(format!(
                    "interval [{k},{l}] outside 1..={d}"
                )));
            }
            if k > l {
                wrapped += 1;
            }
            let elems = interval_elements(d, k, l);
            if !covered.intersection(elems).is_empty() {
                return Err(Error::InvalidFamily(format!(
                    "interval [{k},{l}] overlaps another interval"
                )));
            }
            covered = ElementSet::from_bits(covered.bits() | elems.bits());
        }
        if wrapped > 1 {
            return Err(Error::InvalidFamily(
                "more than one wrapped interval".into(),
            ));
        }
        let mut intervals = intervals;
        intervals.sort_unstable();
        Ok(IntervalFamily {
            d,
            intervals,
            star: false,
        })
    }

    /// `{[k, d]}` for `1 <= k <= d`.
    pub fn tail(d: usize, k: usize) -> Result<Self> {
        Self::new(d, vec![(k, d)])
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn is_star(&self) -> bool {
        self.star
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Number of intervals, `i`.
    pub fn interval_count(&self) -> usize {
        self.intervals.len()
    }

    pub fn covered(&self) -> ElementSet {
        if self.star {
            return ElementSet::full(self.d);
        }
        self.intervals
            .iter()
            .fold(ElementSet::EMPTY, |acc, &(k, l)| {
                ElementSet::from_bits(acc.bits() | interval_elements(self.d, k, l).bits())
            })
    }

    /// Number of uncovered elements, `j`.
    pub fn uncovered_count(&self) -> usize {
        self.d - self.covered().len()
    }

    /// The pairs `{k, k+1}` (cyclically) lying consecutively inside a single
    /// interval, recorded by their first element `k`.
    pub fn internal_pairs(&self) -> ElementSet {
        if self.star {
            return ElementSet::full(self.d);
        }
        let mut pairs = ElementSet::EMPTY;
        for &(k, l) in &self.intervals {
            let mut e = k;
            while e != l {
                pairs.insert(e);
                e = succ(e, self.d);
            }
        }
        pairs
    }

    /// Whether the last interval wraps past `d` (true for `[1,d]*`).
    pub fn last_is_wrapped(&self) -> bool {
        self.star || self.intervals.last().is_some_and(|&(k, l)| k > l)
    }

    /// The dual family `S'`.
    pub fn beta(&self) -> IntervalFamily {
        let d = self.d;
        if self.star {
            return IntervalFamily::empty(d);
        }
        if self.intervals.is_empty() {
            return IntervalFamily::star(d);
        }
        let wrap = |v: usize| if v == 0 { d } else { v };
        let n = self.intervals.len();
        let mut dual = Vec::with_capacity(n);
        for t in 0..n - 1 {
            let (_, l) = self.intervals[t];
            let (k_next, _) = self.intervals[t + 1];
            dual.push((d - k_next + 1, d - l));
        }
        let (k_first, _) = self.intervals[0];
        let (_, l_last) = self.intervals[n - 1];
        dual.push((d - k_first + 1, wrap(d - l_last)));
        dual.sort_unstable();
        IntervalFamily {
            d,
            intervals: dual,
            star: false,
        }
    }

    /// `[1,d] - S`: the maximal cyclic runs of uncovered elements.
    pub fn complement(&self) -> IntervalFamily {
        let d = self.d;
        if self.star {
            return IntervalFamily::empty(d);
        }
        if self.intervals.is_empty() {
            return IntervalFamily::star(d);
        }
        let covered = self.covered();
        let free = |e: usize| !covered.contains(e);
        let mut runs = Vec::new();
        for start in 1..=d {
            let pred = if start == 1 { d } else { start - 1 };
            if free(start) && !free(pred) {
                let mut end = start;
                while free(succ(end, d)) {
                    end = succ(end, d);
                }
                runs.push((start, end));
            }
        }
        runs.sort_unstable();
        IntervalFamily {
            d,
            intervals: runs,
            star: false,
        }
    }

    /// Parses `{[2,3],[4],[6,1]}`, `{[1,6]*}` or `{}` on the ground set `1..=d`.
    pub fn parse(d: usize, text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("interval family must be braced: '{text}'")))?;
        if inner.is_empty() {
            return Ok(IntervalFamily::empty(d));
        }
        let star_form = format!("[1,{d}]*");
        if inner == star_form {
            return Ok(IntervalFamily::star(d));
        }
        if inner.contains('*') {
            return Err(Error::InvalidFamily(format!(
                "only {star_form} may carry '*'"
            )));
        }
        let mut intervals = Vec::new();
        let mut rest = inner;
        loop {
            let (body, tail) = rest
                .strip_prefix('[')
                .and_then(|r| r.split_once(']'))
                .ok_or_else(|| Error::Parse(format!("expected '[...]' at '{rest}'")))?;
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad interval endpoint '{s}'")))
            };
            let interval = match body.split_once(',') {
                Some((k, l)) => (num(k)?, num(l)?),
                None => {
                    let k = num(body)?;
                    (k, k)
                }
            };
            intervals.push(interval);
            if tail.is_empty() {
                break;
            }
            rest = tail
                .strip_prefix(',')
                .ok_or_else(|| Error::Parse(format!("expected ',' at '{tail}'")))?;
        }
        Self::new(d, intervals)
    }

    pub fn render(&self) -> String {
        if self.star {
            return format!("{{[1,{}]*}}", self.d);
        }
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|&(k, l)| {
                if k == l {
                    format!("[{k}]")
                } else {
                    format!("[{k},{l}]")
                }
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for IntervalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for IntervalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntervalFamily(d={}, {})", self.d, self.render())
    }
}

fn interval_elements(d: usize, k: usize, l: usize) -> ElementSet {
    let mut s = ElementSet::EMPTY;
    let mut e = k;
    loop {
        s.insert(e);
        if e == l {
            break;
        }
        e = succ(e, d);
    }
    s
}

/// Every interval family on `{1, ..., d}`, including `{}` and `{[1,d]*}`.
///
/// Families are read off subsets of the `2d`-cycle `1, g1, 2, g2, ..., d, gd`
/// (`gk` the gap after `k`) in which a gap is chosen only together with both
/// neighbours; the full cycle is `[1,d]*`.
pub fn enumerate_families(d: usize, guard: usize) -> Result<Vec<IntervalFamily>> {
    if d == 0 {
        return Err(Error::OutOfRange {
            what: "d",
            value: 0,
            allowed: "d >= 1".into(),
        });
    }
    if d > guard || 2 * d > 62 {
        return Err(Error::Guard {
            what: "interval family sweep",
            d,
            limit: guard,
        });
    }
    let full = (1u64 << (2 * d)) - 1;
    let elem = |mask: u64, e: usize| mask & (1 << (2 * (e - 1))) != 0;
    let gap = |mask: u64, e: usize| mask & (1 << (2 * (e - 1) + 1)) != 0;
    let mut out = Vec::new();
    for mask in 0..=full {
        let valid = (1..=d).all(|e| !gap(mask, e) || (elem(mask, e) && elem(mask, succ(e, d))));
        if !valid {
            continue;
        }
        if mask == full {
            out.push(IntervalFamily::star(d));
            continue;
        }
        let mut intervals = Vec::new();
        for e in 1..=d {
            let pred = if e == 1 { d } else { e - 1 };
            if elem(mask, e) && !gap(mask, pred) {
                let mut end = e;
                while gap(mask, end) {
                    end = succ(end, d);
                }
                intervals.push((e, end));
            }
        }
        out.push(IntervalFamily::new(d, intervals)?);
    }
    out.sort();
    Ok(out)
}
