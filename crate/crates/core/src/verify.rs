//! Named invariant suites. Each suite recomputes a family of identities by
//! independent routes and records every disagreement with its inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cubical::{adin_h_from_f, h_from_cvector, CVector, FVector};
use crate::error::{Error, Result};
use crate::ncpart::{
    enumerate_families, enumerate_nc_with_guard, is_noncrossing, weight_exponent,
    weight_k_exponent, IntervalFamily, NcPartition, DEFAULT_FAMILY_GUARD, DEFAULT_NC_GUARD,
};
use crate::poly::{binomial, Poly};
use crate::toric::{
    g_cube_gessel, g_cube_nc, g_cube_table, q_poly_pascal, toric_f_cubical, toric_f_from_adin,
    toric_f_from_shelling, FaceComplex, QTable, MAX_CUBE_DIM,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Tables,
    Involution,
    Beta,
    Weights,
    QModel,
    CModel,
    Duality,
    DehnSommerville,
    Little,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Tables,
        Suite::Involution,
        Suite::Beta,
        Suite::Weights,
        Suite::QModel,
        Suite::CModel,
        Suite::Duality,
        Suite::DehnSommerville,
        Suite::Little,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Involution => "involution",
            Suite::Beta => "beta",
            Suite::Weights => "weights",
            Suite::QModel => "q-model",
            Suite::CModel => "c-model",
            Suite::Duality => "duality",
            Suite::DehnSommerville => "dehn-sommerville",
            Suite::Little => "little",
            Suite::All => "all",
        }
    }

    /// Range used when no `max_d` is given.
    pub fn default_max_d(self) -> usize {
        match self {
            Suite::Tables => 8,
            Suite::Involution => 9,
            Suite::Beta => 8,
            Suite::Weights => 7,
            Suite::QModel => 9,
            Suite::CModel => 6,
            Suite::Duality => 8,
            Suite::DehnSommerville => 7,
            Suite::Little => 10,
            Suite::All => 0,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Overrides every suite's default range.
    pub max_d: Option<usize>,
    pub nc_guard: usize,
    pub family_guard: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_d: None,
            nc_guard: DEFAULT_NC_GUARD,
            family_guard: DEFAULT_FAMILY_GUARD,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub check: String,
    pub inputs: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: u64,
    /// Sorted by check identifier, then inputs.
    pub failures: Vec<Failure>,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The report without timing, so identical runs serialize identically.
    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures
            .iter()
            .map(|f| json!({ "check": f.check, "inputs": f.inputs, "left": f.left, "right": f.right }))
            .collect();
        json!({ "suite": self.suite, "checks": self.checks, "failures": failures })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,checks,check,inputs,left,right\n");
        if self.failures.is_empty() {
            out += &format!("{},{},,,,\n", self.suite, self.checks);
        }
        for f in &self.failures {
            let cells = [&f.check, &f.inputs, &f.left, &f.right].map(|c| csv_quote(c));
            out += &format!("{},{},{}\n", self.suite, self.checks, cells.join(","));
        }
        out
    }
}

fn csv_quote(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        writeln!(f, "checks: {}", self.checks)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for fail in &self.failures {
            writeln!(
                f,
                "FAIL {} [{}]: {} != {}",
                fail.check, fail.inputs, fail.left, fail.right
            )?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(
        &mut self,
        check: &str,
        inputs: impl FnOnce() -> String,
        ok: bool,
        left: impl fmt::Display,
        right: impl fmt::Display,
    ) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                check: check.to_string(),
                inputs: inputs(),
                left: left.to_string(),
                right: right.to_string(),
            });
        }
    }

    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        check: &str,
        inputs: impl FnOnce() -> String,
        left: &T,
        right: &T,
    ) {
        self.check(check, inputs, left == right, left, right);
    }

    fn holds(&mut self, check: &str, inputs: impl FnOnce() -> String, ok: bool) {
        self.check(check, inputs, ok, ok, true);
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }
}

/// Runs `suite`; `All` runs every suite and merges the results.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let tally = if suite == Suite::All {
        Suite::EACH
            .iter()
            .map(|&s| tally_for(s, config))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(Tally::default(), Tally::merge)
    } else {
        tally_for(suite, config)?
    };
    let mut failures = tally.failures;
    failures.sort();
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        checks: tally.checks,
        failures,
        wall_time: start.elapsed(),
    })
}

fn tally_for(suite: Suite, config: &VerifyConfig) -> Result<Tally> {
    let max_d = config.max_d.unwrap_or_else(|| suite.default_max_d());
    let mut t = Tally::default();
    match suite {
        Suite::Tables => tables(&mut t, max_d, config)?,
        Suite::Involution => involution(&mut t, max_d, config)?,
        Suite::Beta => beta(&mut t, max_d, config)?,
        Suite::Weights => weights(&mut t, max_d, config)?,
        Suite::QModel => q_model(&mut t, max_d, config)?,
        Suite::CModel => c_model(&mut t, max_d, config)?,
        Suite::Duality => duality(&mut t, max_d, config)?,
        Suite::DehnSommerville => dehn_sommerville(&mut t, max_d)?,
        Suite::Little => little(&mut t, max_d),
        Suite::All => unreachable!("expanded by run_suite"),
    }
    // Prefix check ids with the suite so merged reports stay bisectable.
    for f in &mut t.failures {
        f.check = format!("{}.{}", suite.name(), f.check);
    }
    Ok(t)
}

fn poly(coeffs: &[i64]) -> Poly {
    Poly::from_ints(coeffs.iter().copied())
}

/// `g(L_d)` for `d = -1, ..., 4` as printed in the reference table.
pub fn reference_g_table() -> Vec<(i64, Poly)> {
    vec![
        (-1, poly(&[1])),
        (0, poly(&[1])),
        (1, poly(&[1])),
        (2, poly(&[1, 1])),
        (3, poly(&[1, 4])),
        (4, poly(&[1, 11, 2])),
    ]
}

/// Rows `Q_{d,0}, ..., Q_{d,d+1}` for `d = 0, ..., 4` as printed in the
/// reference table.
pub fn reference_q_table() -> Vec<Vec<Poly>> {
    vec![
        vec![poly(&[0, 1]), poly(&[1])],
        vec![poly(&[0, 0, 1]), poly(&[0, 2]), poly(&[1])],
        vec![
            poly(&[0, 0, 1, 1]),
            poly(&[0, 0, 4]),
            poly(&[0, 4]),
            poly(&[1, 1]),
        ],
        vec![
            poly(&[0, 0, 0, 4, 1]),
            poly(&[0, 0, 2, 8]),
            poly(&[0, 0, 10]),
            poly(&[0, 8, 2]),
            poly(&[1, 4]),
        ],
        vec![
            poly(&[0, 0, 0, 2, 11, 1]),
            poly(&[0, 0, 0, 12, 16]),
            poly(&[0, 0, 4, 24]),
            poly(&[0, 0, 24, 4]),
            poly(&[0, 16, 12]),
            poly(&[1, 11, 2]),
        ],
    ]
}

fn tables(t: &mut Tally, max_d: usize, config: &VerifyConfig) -> Result<()> {
    let recursion = g_cube_table(max_d.max(4));
    for (d, expected) in reference_g_table() {
        let got = if d < 0 {
            Poly::one()
        } else {
            recursion[d as usize].clone()
        };
        t.eq("g.reference", || format!("d={d}"), &got, &expected);
    }
    for (d, expected) in recursion.iter().enumerate().take(max_d + 1) {
        t.eq("g.gessel", || format!("d={d}"), expected, &g_cube_gessel(d));
        if d <= config.nc_guard {
            t.eq(
                "g.nc",
                || format!("d={d}"),
                expected,
                &g_cube_nc(d, config.nc_guard)?,
            );
        }
        if d <= MAX_CUBE_DIM {
            let poset = FaceComplex::cube_boundary(d)?.toric_g()?;
            t.eq("g.poset", || format!("d={d}"), expected, &poset);
        }
    }
    for (d, row) in reference_q_table().into_iter().enumerate() {
        let computed = QTable::compute(d);
        for (k, expected) in row.iter().enumerate() {
            t.eq(
                "q.reference",
                || format!("d={d} k={k}"),
                computed.get(k),
                expected,
            );
        }
    }
    for d in 1..=max_d {
        let row = QTable::compute(d);
        for k in 1..=d {
            t.eq(
                "q.pascal",
                || format!("d={d} k={k}"),
                row.get(k),
                &q_poly_pascal(d, k)?,
            );
        }
    }
    Ok(())
}

/// The coarsest noncrossing partition of the primed points compatible with
/// `pi`, found by testing every candidate on the interleaved `2d`-gon.
/// Primed point `j'` sits between `d - j` and `d - j + 1`; `d'` between `d` and `1`.
pub fn alpha_by_search(pi: &NcPartition, candidates: &[NcPartition]) -> Result<NcPartition> {
    let d = pi.d();
    let unprimed = |e: usize| 2 * e - 1;
    let primed = |j: usize| if j == d { 2 * d } else { 2 * (d - j) };
    let mut base: Vec<Vec<usize>> = pi
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&e| unprimed(e)).collect())
        .collect();
    let n = base.len();
    let mut best: Option<&NcPartition> = None;
    for sigma in candidates {
        base.truncate(n);
        base.extend(
            sigma
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&j| primed(j)).collect::<Vec<_>>()),
        );
        if is_noncrossing(2 * d, &base)? && best.is_none_or(|b| sigma.num_blocks() < b.num_blocks())
        {
            best = Some(sigma);
        }
    }
    best.cloned()
        .ok_or_else(|| Error::InvalidComplex(format!("no compatible partition for {pi}")))
}

fn involution(t: &mut Tally, max_d: usize, config: &VerifyConfig) -> Result<()> {
    for d in 1..=max_d {
        let parts = enumerate_nc_with_guard(d, config.nc_guard)?;
        for pi in &parts {
            let a = pi.alpha();
            let input = || format!("d={d} pi={pi}");
            t.eq("alpha.involution", input, &a.alpha(), pi);
            t.eq(
                "alpha.block-sum",
                input,
                &(pi.num_blocks() + a.num_blocks()),
                &(d + 1),
            );
            let (s, sa) = (pi.stats(), a.stats());
            for k in 1..d {
                t.eq(
                    "alpha.antisingleton",
                    || format!("d={d} pi={pi} k={k}"),
                    &s.antisingletons.contains(k),
                    &sa.singletons.contains(d - k),
                );
            }
            t.eq(
                "alpha.antisingleton-d",
                input,
                &s.antisingletons.contains(d),
                &sa.singletons.contains(d),
            );
        }
        if d <= 8 {
            let oracle: Vec<(String, String)> = parts
                .par_iter()
                .map(|pi| {
                    Ok((
                        pi.alpha().to_string(),
                        alpha_by_search(pi, &parts)?.to_string(),
                    ))
                })
                .collect::<Result<_>>()?;
            for (pi, (fast, slow)) in parts.iter().zip(oracle) {
                t.eq("alpha.oracle", || format!("d={d} pi={pi}"), &fast, &slow);
            }
        }
    }
    Ok(())
}

fn beta(t: &mut Tally, max_d: usize, config: &VerifyConfig) -> Result<()> {
    for d in 1..=max_d {
        for s in enumerate_families(d, config.family_guard)? {
            let b = s.beta();
            let input = || format!("d={d} S={s}");
            t.eq("beta.involution", input, &b.beta(), &s);
            if s.is_empty() || s.is_star() {
                t.holds(
                    "beta.special",
                    input,
                    b.is_empty() != s.is_empty() && b.is_star() != s.is_star(),
                );
                continue;
            }
            let (i, j) = (s.interval_count(), s.uncovered_count());
            t.eq("beta.count", input, &b.interval_count(), &i);
            t.eq("beta.covered", input, &b.covered().len(), &(i + j));
            let wrapped = |f: &IntervalFamily| f.intervals().iter().any(|&(k, l)| k > l);
            let ends_at_d = s.intervals().last().is_some_and(|&(_, l)| l == d);
            let ok = if ends_at_d {
                !wrapped(&s) && !wrapped(&b)
            } else {
                wrapped(&s) != wrapped(&b)
            };
            t.holds("beta.wrapped", input, ok);
        }
    }
    Ok(())
}

fn weights(t: &mut Tally, max_d: usize, config: &VerifyConfig) -> Result<()> {
    for d in 1..=max_d {
        for pi in enumerate_nc_with_guard(d, config.nc_guard)? {
            let (s, a) = (pi.stats(), pi.alpha());
            let input = || format!("d={d} pi={pi}");
            t.eq(
                "wt.empty",
                input,
                &weight_k_exponent(&pi, d + 1)?,
                &s.block_count,
            );
            let star = s.total_blocks() + a.stats().singletons.len();
            t.eq("wt.star", input, &weight_k_exponent(&pi, 0)?, &star);
            for k in 0..=d + 1 {
                let sum = weight_k_exponent(&pi, k)? + weight_k_exponent(&a, d + 1 - k)?;
                t.eq(
                    "wt.k-duality",
                    || format!("d={d} pi={pi} k={k}"),
                    &sum,
                    &(d + 1),
                );
            }
        }
    }
    Ok(())
}

fn corollaries(t: &mut Tally, row: &QTable) {
    let d = row.d;
    for (k, q) in row.entries.iter().enumerate() {
        let input = || format!("d={d} k={k}");
        t.holds(
            "q.nonnegative-integer",
            input,
            q.is_integral() && q.is_nonnegative(),
        );
        if (1..=d).contains(&k) {
            let even = q
                .coeffs()
                .iter()
                .all(|c| c.is_integer() && (c.to_integer() % BigInt::from(2)).is_zero());
            t.holds("q.even", input, even);
        }
    }
}

fn q_model(t: &mut Tally, max_d: usize, config: &VerifyConfig) -> Result<()> {
    corollaries(t, &QTable::compute(0));
    for d in 1..=max_d {
        let formula = QTable::compute(d);
        let model = QTable::compute_nc(d, config.nc_guard)?;
        for k in 0..=d + 1 {
            t.eq(
                "q.model",
                || format!("d={d} k={k}"),
                model.get(k),
                formula.get(k),
            );
        }
        corollaries(t, &formula);
    }
    Ok(())
}

fn c_model(t: &mut Tally, max_d: usize, config: &VerifyConfig) -> Result<()> {
    for d in 1..=max_d {
        let row = QTable::compute(d);
        let parts = enumerate_nc_with_guard(d, config.nc_guard)?;
        let mut by_type: BTreeMap<(usize, usize), (IntervalFamily, Poly)> = BTreeMap::new();
        for s in enumerate_families(d, config.family_guard)? {
            let input = || format!("d={d} S={s}");
            let sum = crate::ncpart::family_weight_sum(&parts, &s)?;
            if s.is_star() {
                t.eq("c.star", input, &sum, row.get(0));
                continue;
            }
            if s.is_empty() {
                t.eq("c.empty", input, &sum, row.get(d + 1));
                continue;
            }
            let (i, j) = (s.interval_count(), s.uncovered_count());
            t.eq(
                "c.model",
                || format!("d={d} S={s} i={i} j={j}"),
                &sum,
                &row.c_poly(i, j)?,
            );
            match by_type.get(&(i, j)) {
                Some((first, first_sum)) => t.eq(
                    "c.position",
                    || format!("d={d} S={s} vs {first}"),
                    &sum,
                    first_sum,
                ),
                None => {
                    by_type.insert((i, j), (s.clone(), sum));
                }
            }
        }
        for k in 1..=d {
            let tail = IntervalFamily::tail(d, k)?;
            let sum = crate::ncpart::family_weight_sum(&parts, &tail)?;
            let half = row.get(k).scale(&crate::poly::ratio(1, 2));
            t.eq("c.half-q", || format!("d={d} k={k}"), &sum, &half);
        }
    }
    Ok(())
}

fn duality(t: &mut Tally, max_d: usize, config: &VerifyConfig) -> Result<()> {
    for d in 0..=max_d {
        let row = QTable::compute(d);
        for k in 0..=d + 1 {
            let mirrored = row.get(d + 1 - k).mirror(d + 1)?;
            t.eq("q.mirror", || format!("d={d} k={k}"), row.get(k), &mirrored);
            let pair = row.get(k) + row.get(d + 1 - k);
            t.eq(
                "q.pair-mirror",
                || format!("d={d} k={k}"),
                &pair,
                &pair.mirror(d + 1)?,
            );
        }
        for i in 1..=d {
            for j in 0..=d - i {
                let c = row.c_poly(i, j)?;
                let dual = row.c_poly(i, d - i - j)?.mirror(d + 1)?;
                t.eq("c.mirror", || format!("d={d} i={i} j={j}"), &c, &dual);
            }
        }
    }
    for d in 1..=max_d.min(config.family_guard) {
        let parts = enumerate_nc_with_guard(d, config.nc_guard)?;
        let alphas: Vec<NcPartition> = parts.iter().map(NcPartition::alpha).collect();
        for s in enumerate_families(d, config.family_guard)? {
            let b = s.beta();
            let bad: Vec<String> = parts
                .par_iter()
                .zip(&alphas)
                .map(|(pi, a)| Ok((pi, weight_exponent(pi, &s)? + weight_exponent(a, &b)?)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|&(_, sum)| sum != d + 1)
                .map(|(pi, sum)| format!("{pi}:{sum}"))
                .collect();
            t.checks += parts.len() as u64 - 1;
            t.check(
                "wt.general-duality",
                || format!("d={d} S={s}"),
                bad.is_empty(),
                bad.join(" "),
                d + 1,
            );
        }
    }
    Ok(())
}

/// Line shelling of the `n`-cube boundary: facets `x_1 = 0, ..., x_n = 0`
/// then `x_1 = 1, ..., x_n = 1`. Needs `n >= 2` so the closing type `(0, n-1)`
/// differs from the initial `(0, 0)`.
pub fn cube_boundary_shelling(n: usize) -> Result<CVector> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            allowed: "n >= 2".into(),
        });
    }
    let lower = (1..=n).map(|a| (a - 1, 0));
    let upper = (1..=n).map(|a| (n - a, a - 1));
    let types: Vec<(usize, usize)> = lower.chain(upper).collect();
    CVector::from_types(n - 1, &types)
}

fn dehn_sommerville(t: &mut Tally, max_d: usize) -> Result<()> {
    for n in 1..=max_d {
        let fv = FVector::cube_boundary(n)?;
        let long = adin_h_from_f(&fv)?.long_h;
        let expected = BigInt::one() << (n - 1);
        t.holds(
            "adin.cube-boundary",
            || format!("n={n}"),
            long.iter().all(|h| *h == expected),
        );

        let cubical = toric_f_cubical(&fv);
        let sum: Poly = QTable::compute(n - 1).entries.iter().cloned().sum();
        t.eq("ds.q-sum", || format!("n={n}"), &cubical, &sum);
        t.eq(
            "ds.palindrome",
            || format!("n={n}"),
            &cubical,
            &cubical.mirror(n)?,
        );

        if n >= 2 {
            let shelling = cube_boundary_shelling(n)?;
            let h_route = toric_f_from_adin(&h_from_cvector(&shelling))?;
            t.eq(
                "route.shelling",
                || format!("boundary n={n}"),
                &toric_f_from_shelling(&shelling)?,
                &h_route,
            );
            t.eq(
                "route.shelling-h",
                || format!("boundary n={n}"),
                &h_route,
                &cubical,
            );
        }

        if n <= MAX_CUBE_DIM {
            let poset = FaceComplex::cube_boundary(n)?.toric_f()?;
            t.eq(
                "route.poset-boundary",
                || format!("n={n}"),
                &poset,
                &cubical,
            );
        }
    }
    for d in 0..=max_d.min(MAX_CUBE_DIM) {
        let fv = FVector::cube(d);
        let cubical = toric_f_cubical(&fv);
        let poset = FaceComplex::cube(d)?.toric_f()?;
        t.eq("route.poset-cube", || format!("d={d}"), &poset, &cubical);
        let adin = toric_f_from_adin(&adin_h_from_f(&fv)?.normalized)?;
        t.eq("route.adin-cube", || format!("d={d}"), &adin, &cubical);
    }
    Ok(())
}

/// Both sides of the pair-counting binomial identity.
pub fn little_identity(d: i64, i: i64, j: i64, k: i64) -> (BigInt, BigInt) {
    let left = (0..=i)
        .map(|l| (binomial(i, l) * binomial(d - i - j, d - k - l)) << (i - l) as usize)
        .sum();
    let right = (0..i)
        .map(|m| {
            binomial(i - 1, m)
                * ((binomial(d - m - j - 1, d - k) << 1usize) + binomial(d - m - j - 1, d - k - 1))
        })
        .sum();
    (left, right)
}

fn little(t: &mut Tally, max_d: usize) {
    let max_d = max_d as i64;
    for d in 1..=max_d {
        for i in 1..=d {
            for j in 0..=d - i {
                for k in j..=d {
                    let (left, right) = little_identity(d, i, j, k);
                    t.eq(
                        "little",
                        || format!("d={d} i={i} j={j} k={k}"),
                        &left,
                        &right,
                    );
                }
            }
        }
    }
}
