//! Adin's cubical h-vectors, shelling-component types and their
//! h-contributions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{binomial, ratio, Poly};

/// Face numbers `f_0, ..., f_d` of a `d`-dimensional complex. The empty face
/// (`f_{-1} = 1`) is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    f: Vec<BigInt>,
}

impl FVector {
    pub fn new<I>(counts: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let f: Vec<BigInt> = counts.into_iter().map(Into::into).collect();
        if f.is_empty() {
            return Err(Error::Parse("f-vector needs at least f_0".into()));
        }
        if let Some(neg) = f.iter().find(|c| c.is_negative()) {
            return Err(Error::Parse(format!("negative face count {neg}")));
        }
        Ok(FVector { f })
    }

    /// Face counts of the solid `d`-cube: `f_j = 2^(d-j) C(d, j)`.
    pub fn cube(d: usize) -> Self {
        FVector {
            f: (0..=d).map(|j| cube_faces(d, j)).collect(),
        }
    }

    /// Face counts of the boundary of the `n`-cube, an `(n-1)`-complex.
    pub fn cube_boundary(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "cube dimension",
                value: 0,
                allowed: "n >= 1".into(),
            });
        }
        Ok(FVector {
            f: (0..n).map(|j| cube_faces(n, j)).collect(),
        })
    }

    /// Parses a comma list such as `8,12,6`.
    pub fn parse(text: &str) -> Result<Self> {
        let counts = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad face count '{}'", s.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(counts)
    }

    pub fn dim(&self) -> usize {
        self.f.len() - 1
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.f
    }

    /// `f_j`, with `f_{-1} = 1`.
    pub fn get(&self, j: i64) -> BigInt {
        if j == -1 {
            return BigInt::one();
        }
        usize::try_from(j)
            .ok()
            .and_then(|j| self.f.get(j))
            .cloned()
            .unwrap_or_default()
    }

    /// Reduced Euler characteristic `Σ_{j=-1}^{d} (-1)^j f_j`.
    pub fn reduced_euler(&self) -> BigInt {
        (-1..=self.dim() as i64)
            .map(|j| {
                if j.rem_euclid(2) == 0 {
                    self.get(j)
                } else {
                    -self.get(j)
                }
            })
            .sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.f
                .iter()
                .map(|c| crate::poly::rational_to_json(&BigRational::from_integer(c.clone())))
                .collect(),
        )
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.f.iter().map(BigInt::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn cube_faces(d: usize, j: usize) -> BigInt {
    (BigInt::one() << (d - j)) * binomial(d as i64, j as i64)
}

/// Adin's short, long and normalized cubical h-vectors of one complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdinH {
    pub d: usize,
    /// `h_0^(sc), ..., h_d^(sc)`
    pub short_h: Vec<BigInt>,
    /// `h_0^(c), ..., h_{d+1}^(c)`
    pub long_h: Vec<BigInt>,
    /// `long_h / 2^d`; starts with 1.
    pub normalized: Vec<BigRational>,
}

impl AdinH {
    /// Checks the terminal entry against `(-2)^d χ̃` for the given f-vector.
    pub fn verify_euler(&self, fv: &FVector) -> Result<()> {
        let expected = pow_neg_two(self.d) * fv.reduced_euler();
        let got = self.long_h.last().cloned().unwrap_or_default();
        if got != expected {
            return Err(Error::EulerCheck {
                got: got.to_string(),
                expected: expected.to_string(),
            });
        }
        Ok(())
    }

    /// The normalized h-polynomial `Σ h_k x^k`.
    pub fn polynomial(&self) -> Poly {
        Poly::from_coeffs(self.normalized.clone())
    }
}

fn pow_neg_two(d: usize) -> BigInt {
    let p = BigInt::one() << d;
    if d.is_multiple_of(2) {
        p
    } else {
        -p
    }
}

/// `h_i^(sc) = Σ_{j<=i} C(d-j, d-i) (-1)^(i-j) 2^j f_j`.
pub fn short_h_from_f(fv: &FVector) -> Vec<BigInt> {
    let d = fv.dim() as i64;
    (0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let term = binomial(d - j, d - i) * (BigInt::one() << j as usize) * fv.get(j);
                    if (i - j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// Long and normalized Adin h-vector via `h_0^(c) = 2^d`,
/// `h_{i+1}^(c) = h_i^(sc) - h_i^(c)`, with the Euler-characteristic check on
/// the final entry.
pub fn adin_h_from_f(fv: &FVector) -> Result<AdinH> {
    let d = fv.dim();
    let short_h = short_h_from_f(fv);
    let mut long_h = Vec::with_capacity(d + 2);
    long_h.push(BigInt::one() << d);
    for i in 0..=d {
        let next = &short_h[i] - &long_h[i];
        long_h.push(next);
    }
    let scale = BigRational::from_integer(BigInt::one() << d);
    let normalized = long_h
        .iter()
        .map(|h| BigRational::from_integer(h.clone()) / &scale)
        .collect();
    let adin = AdinH {
        d,
        short_h,
        long_h,
        normalized,
    };
    adin.verify_euler(fv)?;
    Ok(adin)
}

/// Inverts the normalized h-vector: `f_j = 2^(d-j) Σ_{i<=j} C(d-i, d-j)(h_{i+1} + h_i)`.
pub fn f_from_h(normalized: &[BigRational]) -> Result<FVector> {
    if normalized.len() < 2 {
        return Err(Error::NotRealizable("need h_0 .. h_(d+1)".into()));
    }
    if !normalized[0].is_one() {
        return Err(Error::NotRealizable(format!(
            "h_0 must be 1, got {}",
            normalized[0]
        )));
    }
    let d = normalized.len() - 2;
    let mut f = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut acc = BigRational::zero();
        for i in 0..=j {
            let c = binomial((d - i) as i64, (d - j) as i64);
            acc += BigRational::from_integer(c) * (&normalized[i + 1] + &normalized[i]);
        }
        acc *= BigRational::from_integer(BigInt::one() << (d - j));
        if !acc.is_integer() {
            return Err(Error::NotRealizable(format!("f_{j} = {acc}")));
        }
        f.push(acc.to_integer());
    }
    FVector::new(f)
}

/// A shelling-component type `(i, j)`: `i` unpaired facets of the attaching
/// region plus `j` antipodal pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShellingType {
    pub i: usize,
    pub j: usize,
}

impl ShellingType {
    pub fn new(d: usize, i: usize, j: usize) -> Result<Self> {
        if validate_type(d, i, j) {
            Ok(ShellingType { i, j })
        } else {
            Err(Error::InvalidType { d, i, j })
        }
    }
}

/// `(0,0)` for the first facet, `(0,d)` for a closing facet, otherwise
/// `i >= 1` and `i + j <= d`.
pub fn validate_type(d: usize, i: usize, j: usize) -> bool {
    (i == 0 && (j == 0 || j == d)) || (i >= 1 && i + j <= d)
}

/// Adin's contribution `Δ_t h(x)` of one shelling component of type `t`.
pub fn delta_h(t: ShellingType, d: usize) -> Result<Poly> {
    if !validate_type(d, t.i, t.j) {
        return Err(Error::InvalidType { d, i: t.i, j: t.j });
    }
    Ok(match (t.i, t.j) {
        (0, 0) => Poly::one(),
        (0, _) => Poly::monomial(BigRational::one(), d + 1),
        (i, j) => {
            let half_pow = ratio(1, 1) / BigRational::from_integer(BigInt::one() << i);
            &Poly::monomial(half_pow, j + 1) * &Poly::linear_power(1, i - 1)
        }
    })
}

/// Counts `c_{i,j}` of shelling components by type; `c_{0,0} = 1` always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CVector {
    d: usize,
    counts: BTreeMap<ShellingType, u64>,
}

impl CVector {
    pub fn new(d: usize) -> Self {
        let mut counts = BTreeMap::new();
        counts.insert(ShellingType { i: 0, j: 0 }, 1);
        CVector { d, counts }
    }

    /// Adds `count` components of type `(i, j)`. Type `(0,0)` may not be added:
    /// only the first facet has it.
    pub fn add(&mut self, i: usize, j: usize, count: u64) -> Result<()> {
        let t = ShellingType::new(self.d, i, j)?;
        if i == 0 && j == 0 {
            return Err(Error::InvalidCVector("c_(0,0) is fixed at 1".into()));
        }
        *self.counts.entry(t).or_insert(0) += count;
        Ok(())
    }

    pub fn from_types(d: usize, types: &[(usize, usize)]) -> Result<Self> {
        let mut c = CVector::new(d);
        let mut first = true;
        for &(i, j) in types {
            if first && (i, j) == (0, 0) {
                first = false;
                continue;
            }
            first = false;
            c.add(i, j, 1)?;
        }
        Ok(c)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts
            .get(&ShellingType { i, j })
            .copied()
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (ShellingType, u64)> + '_ {
        self.counts.iter().map(|(t, c)| (*t, *c))
    }

    /// Reads `i j count` lines; `#` starts a comment. An optional `d N` line
    /// fixes the dimension, otherwise `d` must be supplied. A `0 0 1` line is
    /// accepted and ignored.
    pub fn parse(text: &str, d: Option<usize>) -> Result<Self> {
        let mut dim = d;
        let mut entries = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("c-vector line {}: '{line}'", lineno + 1));
            match fields.as_slice() {
                ["d", n] => {
                    let n: usize = n.parse().map_err(|_| bad())?;
                    if dim.is_some_and(|given| given != n) {
                        return Err(Error::InvalidCVector(format!(
                            "file says d={n}, caller says d={}",
                            dim.unwrap_or(n)
                        )));
                    }
                    dim = Some(n);
                }
                [i, j, c] => {
                    let i: usize = i.parse().map_err(|_| bad())?;
                    let j: usize = j.parse().map_err(|_| bad())?;
                    let c: u64 = c.parse().map_err(|_| bad())?;
                    entries.push((i, j, c));
                }
                _ => return Err(bad()),
            }
        }
        let d = dim.ok_or_else(|| Error::InvalidCVector("dimension not given".into()))?;
        let mut cv = CVector::new(d);
        for (i, j, c) in entries {
            if (i, j) == (0, 0) {
                if c != 1 {
                    return Err(Error::InvalidCVector(format!("c_(0,0) must be 1, got {c}")));
                }
                continue;
            }
            cv.add(i, j, c)?;
        }
        Ok(cv)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .iter()
            .map(|(t, c)| serde_json::json!({ "i": t.i, "j": t.j, "count": c }))
            .collect();
        serde_json::json!({ "d": self.d, "counts": entries })
    }
}

/// Normalized h-vector `h_0 .. h_{d+1}` of a shellable complex from its
/// c-vector.
pub fn h_from_cvector(c: &CVector) -> Vec<BigRational> {
    let d = c.d();
    let mut h = vec![BigRational::zero(); d + 2];
    h[0] = BigRational::one();
    for (k, slot) in h.iter_mut().enumerate().take(d + 1).skip(1) {
        let mut acc = BigRational::zero();
        for j in 0..k {
            for i in (k - j)..=(d - j) {
                let count = c.get(i, j);
                if count == 0 {
                    continue;
                }
                let coeff = binomial(i as i64 - 1, (k - 1 - j) as i64) * count;
                acc += BigRational::new(coeff, BigInt::one() << i);
            }
        }
        *slot = acc;
    }
    if d > 0 {
        h[d + 1] = BigRational::from_integer(c.get(0, d).into());
    } else {
        // at d = 0 the closing type coincides with (0,0), which is never counted twice
        h[1] = BigRational::zero();
    }
    h
}

/// `Σ_t Δ_t h(x)` over every counted component, as a polynomial.
pub fn h_poly_from_deltas(c: &CVector) -> Result<Poly> {
    c.iter().try_fold(Poly::zero(), |acc, (t, count)| {
        Ok(&acc + &delta_h(t, c.d())?.scale_int(&BigInt::from(count)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| ratio(x, 1)).collect()
    }

    #[test]
    fn short_h_examples() {
        assert_eq!(
            short_h_from_f(&FVector::parse("8,12,6").unwrap()),
            ints(&[8, 8, 8])
        );
        assert_eq!(short_h_from_f(&FVector::parse("1").unwrap()), ints(&[1]));
        assert_eq!(
            short_h_from_f(&FVector::parse("4,4").unwrap()),
            ints(&[4, 4])
        );
    }

    #[test]
    fn adin_examples() {
        let cube3 = adin_h_from_f(&FVector::parse("8,12,6").unwrap()).unwrap();
        assert_eq!(cube3.long_h, ints(&[4, 4, 4, 4]));
        assert_eq!(cube3.normalized, rats(&[1, 1, 1, 1]));
        let square = adin_h_from_f(&FVector::parse("4,4").unwrap()).unwrap();
        assert_eq!(square.long_h, ints(&[2, 2, 2]));
        let solid = adin_h_from_f(&FVector::cube(3)).unwrap();
        assert_eq!(solid.normalized, rats(&[1, 0, 0, 0, 0]));
        for (i, sc) in cube3.short_h.iter().enumerate() {
            assert_eq!(sc, &(&cube3.long_h[i] + &cube3.long_h[i + 1]));
        }
    }

    #[test]
    fn euler_check_detects_stale_h() {
        let good = FVector::parse("8,12,6").unwrap();
        let adin = adin_h_from_f(&good).unwrap();
        let mutated = FVector::parse("8,13,6").unwrap();
        assert!(matches!(
            adin.verify_euler(&mutated),
            Err(Error::EulerCheck { .. })
        ));
        // recomputing from the mutated vector is self-consistent again
        assert!(adin_h_from_f(&mutated).is_ok());
    }

    #[test]
    fn f_from_h_examples() {
        assert_eq!(
            f_from_h(&rats(&[1, 1, 1, 1])).unwrap(),
            FVector::parse("8,12,6").unwrap()
        );
        assert_eq!(
            f_from_h(&rats(&[1, 0, 0, 0, 0])).unwrap(),
            FVector::parse("8,12,6,1").unwrap()
        );
        let sq = FVector::parse("4,4").unwrap();
        assert_eq!(
            f_from_h(&adin_h_from_f(&sq).unwrap().normalized).unwrap(),
            sq
        );
        let frac = vec![ratio(1, 1), ratio(1, 4), ratio(0, 1)];
        assert!(matches!(f_from_h(&frac), Err(Error::NotRealizable(_))));
        assert!(f_from_h(&rats(&[2, 0, 0])).is_err());
    }

    #[test]
    fn type_validation() {
        assert!(validate_type(3, 1, 2));
        assert!(validate_type(3, 0, 3));
        assert!(validate_type(3, 0, 0));
        assert!(validate_type(3, 3, 0));
        assert!(!validate_type(3, 3, 1));
        assert!(!validate_type(3, 0, 1));
        assert!(validate_type(1, 1, 0));
    }

    #[test]
    fn delta_h_examples() {
        let half = |p: usize| Poly::monomial(ratio(1, 2), p);
        assert_eq!(delta_h(ShellingType { i: 1, j: 0 }, 3).unwrap(), half(1));
        assert_eq!(
            delta_h(ShellingType { i: 0, j: 0 }, 3).unwrap(),
            Poly::one()
        );
        let expect = Poly::from_coeffs(vec![ratio(0, 1), ratio(0, 1), ratio(1, 4), ratio(1, 4)]);
        assert_eq!(delta_h(ShellingType { i: 2, j: 1 }, 3).unwrap(), expect);
        assert_eq!(
            delta_h(ShellingType { i: 0, j: 3 }, 3).unwrap(),
            Poly::monomial(ratio(1, 1), 4)
        );
        assert!(delta_h(ShellingType { i: 0, j: 2 }, 3).is_err());
    }

    #[test]
    fn h_from_cvector_examples() {
        assert_eq!(h_from_cvector(&CVector::new(3)), rats(&[1, 0, 0, 0, 0]));
        let square = CVector::from_types(1, &[(0, 0), (1, 0), (1, 0), (0, 1)]).unwrap();
        let h = h_from_cvector(&square);
        assert_eq!(h, rats(&[1, 1, 1]));
        assert_eq!(Poly::from_coeffs(h), h_poly_from_deltas(&square).unwrap());
    }

    #[test]
    fn cvector_file_format() {
        let text = "# cube boundary\nd 2\n0 0 1\n1 0 2\n1 1 2\n0 2 1\n";
        let c = CVector::parse(text, None).unwrap();
        assert_eq!(c.get(1, 1), 2);
        assert_eq!(c.get(0, 0), 1);
        assert_eq!(h_from_cvector(&c), rats(&[1, 1, 1, 1]));
        assert!(CVector::parse("1 0 1\n", None).is_err());
        assert!(CVector::parse("d 2\n0 0 2\n", None).is_err());
        assert!(CVector::parse("d 2\n0 1 1\n", None).is_err());
        assert!(CVector::parse("d 2\nfoo\n", None).is_err());
    }
}
