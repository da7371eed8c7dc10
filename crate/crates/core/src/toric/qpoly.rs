//! Cube g-polynomials and the basis-change polynomials `Q_{d,k}` and
//! `C_{d,i,j}`, each by closed formula and by weighted enumeration of
//! noncrossing partitions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ncpart::{
    enumerate_nc_with_guard, family_weight_sum, weight_k_family, IntervalFamily, NcPartition,
};
use crate::poly::{binomial, Poly};

use super::complex::g_from_f;

/// Default largest `d` for enumeration-backed `Q` (`C_12 = 208 012`).
pub const DEFAULT_Q_GUARD: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GMethod {
    /// Toric recursion on the cube boundary, specialized to face counts.
    Recursion,
    /// Gessel's closed formula.
    Gessel,
    /// Noncrossing partitions counted by nonsingleton blocks.
    Nc,
}

impl GMethod {
    pub const ALL: [GMethod; 3] = [GMethod::Recursion, GMethod::Gessel, GMethod::Nc];

    pub fn name(self) -> &'static str {
        match self {
            GMethod::Recursion => "recursion",
            GMethod::Gessel => "gessel",
            GMethod::Nc => "nc",
        }
    }
}

impl FromStr for GMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursion" => Ok(GMethod::Recursion),
            "gessel" => Ok(GMethod::Gessel),
            "nc" => Ok(GMethod::Nc),
            other => Err(Error::Parse(format!("unknown g method '{other}'"))),
        }
    }
}

/// `g(L_0), ..., g(L_max_d)` by the specialized recursion
/// `f(∂L_d) = (x-1)^d + Σ_{j<d} 2^(d-j) C(d,j) (x-1)^(d-1-j) g(L_j)`.
pub fn g_cube_table(max_d: usize) -> Vec<Poly> {
    let mut table: Vec<Poly> = Vec::with_capacity(max_d + 1);
    for d in 0..=max_d {
        let mut f = Poly::linear_power(-1, d);
        for (j, gj) in table.iter().enumerate() {
            let count = binomial(d as i64, j as i64) << (d - j);
            f = &f + &(gj * &Poly::linear_power(-1, d - 1 - j)).scale_int(&count);
        }
        table.push(g_from_f(&f, d / 2));
    }
    table
}

/// `Σ_{k<=d/2} 1/(d-k+1) C(d,k) C(2d-2k,d) (x-1)^k`.
pub fn g_cube_gessel(d: usize) -> Poly {
    let d = d as i64;
    (0..=d / 2)
        .map(|k| {
            let c = BigRational::new(
                binomial(d, k) * binomial(2 * d - 2 * k, d),
                BigInt::from(d - k + 1),
            );
            Poly::linear_power(-1, k as usize).scale(&c)
        })
        .sum()
}

/// `Σ_{π ∈ NC(d)} x^block(π)`; `d = 0` gives 1.
pub fn g_cube_nc(d: usize, guard: usize) -> Result<Poly> {
    if d == 0 {
        return Ok(Poly::one());
    }
    let parts = enumerate_nc_with_guard(d, guard)?;
    family_weight_sum(&parts, &IntervalFamily::empty(d))
}

pub fn g_cube(d: usize, method: GMethod) -> Result<Poly> {
    match method {
        GMethod::Recursion => Ok(g_cube_table(d).pop().unwrap_or_else(Poly::one)),
        GMethod::Gessel => Ok(g_cube_gessel(d)),
        GMethod::Nc => g_cube_nc(d, crate::ncpart::DEFAULT_NC_GUARD),
    }
}

fn check_k(d: usize, k: usize) -> Result<()> {
    if k > d + 1 {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            allowed: format!("0..={}", d + 1),
        });
    }
    Ok(())
}

fn q_from_table(d: usize, k: usize, g: &[Poly]) -> Poly {
    let term = |j: usize, coeff: BigInt| {
        (&g[j] * &Poly::linear_power(-1, d - j)).scale_int(&(coeff << (d - j)))
    };
    let (d_, k_) = (d as i64, k as i64);
    match k {
        0 => {
            let sum: Poly = (0..=d).map(|j| term(j, binomial(d_, j as i64))).sum();
            &Poly::linear_power(-1, d + 1) + &sum
        }
        k if k == d + 1 => g[d].clone(),
        _ => (k - 1..=d)
            .map(|j| {
                let j_ = j as i64;
                term(
                    j,
                    binomial(d_ - k_, d_ - j_) + binomial(d_ + 1 - k_, d_ - j_),
                )
            })
            .sum(),
    }
}

fn q_pascal_from_table(d: usize, k: usize, g: &[Poly]) -> Poly {
    let (d_, k_) = (d as i64, k as i64);
    (k - 1..=d)
        .map(|j| {
            let j_ = j as i64;
            let coeff = binomial(d_ - k_, d_ - j_ - 1) + (binomial(d_ - k_, d_ - j_) << 1usize);
            (&g[j] * &Poly::linear_power(-1, d - j)).scale_int(&(coeff << (d - j)))
        })
        .sum()
}

/// `Q_{d,k}(x)`: the toric-f contribution of the normalized Adin entry `h_k`.
pub fn q_poly(d: usize, k: usize) -> Result<Poly> {
    check_k(d, k)?;
    let g = g_cube_table(d);
    let q = q_from_table(d, k, &g);
    debug_assert!(k == 0 || k == d + 1 || q == q_pascal_from_table(d, k, &g));
    Ok(q)
}

/// The Pascal-rearranged form of `Q_{d,k}` for `1 <= k <= d`.
pub fn q_poly_pascal(d: usize, k: usize) -> Result<Poly> {
    if k == 0 || k > d {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            allowed: format!("1..={d}"),
        });
    }
    Ok(q_pascal_from_table(d, k, &g_cube_table(d)))
}

/// `Q_{d,k}` as the total `wt_k` weight of `NC(d)`, doubled for `1 <= k <= d`.
pub fn q_poly_nc(d: usize, k: usize) -> Result<Poly> {
    q_poly_nc_with_guard(d, k, DEFAULT_Q_GUARD)
}

pub fn q_poly_nc_with_guard(d: usize, k: usize, guard: usize) -> Result<Poly> {
    check_k(d, k)?;
    let parts = enumerate_nc_with_guard(d, guard)?;
    q_nc_from_partitions(&parts, d, k)
}

pub(crate) fn q_nc_from_partitions(parts: &[NcPartition], d: usize, k: usize) -> Result<Poly> {
    let total = family_weight_sum(parts, &weight_k_family(d, k)?)?;
    Ok(if k == 0 || k == d + 1 {
        total
    } else {
        total.scale_int(&BigInt::from(2))
    })
}

/// The row `Q_{d,0}, ..., Q_{d,d+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTable {
    pub d: usize,
    pub entries: Vec<Poly>,
}

impl QTable {
    pub fn compute(d: usize) -> Self {
        let g = g_cube_table(d);
        QTable {
            d,
            entries: (0..=d + 1).map(|k| q_from_table(d, k, &g)).collect(),
        }
    }

    /// Same row from the noncrossing-partition model.
    pub fn compute_nc(d: usize, guard: usize) -> Result<Self> {
        let parts = enumerate_nc_with_guard(d, guard)?;
        let entries = (0..=d + 1)
            .map(|k| q_nc_from_partitions(&parts, d, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(QTable { d, entries })
    }

    pub fn get(&self, k: usize) -> &Poly {
        &self.entries[k]
    }

    /// `C_{d,i,j}` from this row.
    pub fn c_poly(&self, i: usize, j: usize) -> Result<Poly> {
        c_from_row(self.d, i, j, &self.entries)
    }

    pub fn to_json(&self) -> Value {
        json!({ "d": self.d, "q": self.entries.iter().map(Poly::to_json).collect::<Vec<_>>() })
    }

    /// One line per `k`, coefficients ascending.
    pub fn to_csv(&self) -> String {
        self.entries.iter().map(|q| csv_row(q) + "\n").collect()
    }
}

impl fmt::Display for QTable {
    /// A row in the layout `d | Q_{d,0} | Q_{d,1} | ...`, preceded by a `k` header.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header: Vec<String> = (0..=self.d + 1).map(|k| k.to_string()).collect();
        writeln!(f, "d\\k | {}", header.join(" | "))?;
        let cells: Vec<String> = self.entries.iter().map(Poly::to_string).collect();
        writeln!(f, "{} | {}", self.d, cells.join(" | "))
    }
}

pub(crate) fn csv_row(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let cells: Vec<String> = p
        .coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                c.to_integer().to_string()
            } else {
                c.to_string()
            }
        })
        .collect();
    cells.join(",")
}

fn check_ij(d: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || i + j > d {
        return Err(Error::InvalidType { d, i, j });
    }
    Ok(())
}

fn c_from_row(d: usize, i: usize, j: usize, q: &[Poly]) -> Result<Poly> {
    check_ij(d, i, j)?;
    let half_pow = BigRational::new(BigInt::one(), BigInt::one() << i);
    let sum: Poly = (j + 1..=i + j)
        .map(|k| q[k].scale_int(&binomial(i as i64 - 1, (k - 1 - j) as i64)))
        .sum();
    let c = sum.scale(&half_pow);
    if !c.is_integral() || !c.is_nonnegative() {
        return Err(Error::NonIntegral {
            what: format!("C_({d},{i},{j}) = {c}"),
        });
    }
    Ok(c)
}

/// `C_{d,i,j} = 2^-i Σ_{k=j+1}^{i+j} C(i-1, k-1-j) Q_{d,k}` for `i >= 1`, `i + j <= d`.
///
/// Types with `i = 0` are rejected. The constants sometimes quoted for them,
/// `C_{d,0,0} = 1` and `C_{d,0,d} = c_{0,d} x^(d+1)`, are h-polynomial
/// contributions; at the toric-f level the initial component contributes
/// `Q_{d,0}` and each closing component `Q_{d,d+1}`, as used by
/// [`toric_f_from_shelling`](super::toric_f_from_shelling).
pub fn c_poly(d: usize, i: usize, j: usize) -> Result<Poly> {
    check_ij(d, i, j)?;
    QTable::compute(d).c_poly(i, j)
}

/// `Σ_{π ∈ NC(d)} wt_S(π)` for a nonempty family other than `[1,d]*`.
pub fn c_poly_nc(family: &IntervalFamily) -> Result<Poly> {
    c_poly_nc_with_guard(family, DEFAULT_Q_GUARD)
}

pub fn c_poly_nc_with_guard(family: &IntervalFamily, guard: usize) -> Result<Poly> {
    if family.is_empty() || family.is_star() {
        return Err(Error::InvalidFamily(format!(
            "{} has no shelling type; its weight sum is Q_(d,{})",
            family,
            if family.is_star() {
                "0".to_string()
            } else {
                "d+1".to_string()
            }
        )));
    }
    let parts = enumerate_nc_with_guard(family.d(), guard)?;
    family_weight_sum(&parts, family)
}
