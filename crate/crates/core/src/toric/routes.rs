//! The toric f-polynomial of a cubical complex from face counts, from the
//! normalized Adin h-vector, and from a shelling c-vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::cubical::{CVector, FVector};
use crate::error::{Error, Result};
use crate::poly::Poly;

use super::qpoly::{g_cube_table, QTable};

/// `f(P, x) = (x-1)^(d+1) + Σ_j f_j (x-1)^(d-j) g(L_j, x)`.
pub fn toric_f_cubical(fv: &FVector) -> Poly {
    let d = fv.dim();
    let g = g_cube_table(d);
    let faces: Poly = fv
        .counts()
        .iter()
        .enumerate()
        .map(|(j, fj)| (&g[j] * &Poly::linear_power(-1, d - j)).scale_int(fj))
        .sum();
    &Poly::linear_power(-1, d + 1) + &faces
}

/// `f(P, x) = Σ_k h_k Q_{d,k}(x)` for a normalized h-vector `h_0 .. h_{d+1}`.
pub fn toric_f_from_adin(h: &[BigRational]) -> Result<Poly> {
    if h.len() < 2 {
        return Err(Error::NotRealizable("need h_0 .. h_(d+1)".into()));
    }
    if !h[0].is_one() {
        return Err(Error::NotRealizable(format!("h_0 must be 1, got {}", h[0])));
    }
    let q = QTable::compute(h.len() - 2);
    Ok(h.iter().zip(&q.entries).map(|(hk, qk)| qk.scale(hk)).sum())
}

/// `Q_{d,0} + c_{0,d} Q_{d,d+1} + Σ_{i>=1} c_{i,j} C_{d,i,j}`.
pub fn toric_f_from_shelling(c: &CVector) -> Result<Poly> {
    let d = c.d();
    let q = QTable::compute(d);
    let mut f = q.get(0).clone();
    if d > 0 {
        f = &f + &q.get(d + 1).scale_int(&BigInt::from(c.get(0, d)));
    }
    for (t, count) in c.iter() {
        if t.i == 0 {
            continue;
        }
        f = &f + &q.c_poly(t.i, t.j)?.scale_int(&BigInt::from(count));
    }
    Ok(f)
}
