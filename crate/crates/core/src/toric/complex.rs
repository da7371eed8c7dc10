//! Face posets of polyhedral complexes and the toric f/g recursion on them.

use std::collections::{BTreeSet, HashMap};

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{binomial, Poly};

/// Largest cube dimension for the generated complexes.
pub const MAX_CUBE_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Face {
    dim: i32,
    /// Every proper subface (the down-set minus the face itself), sorted.
    below: Vec<usize>,
}

/// A polyhedral complex given by its face poset. Face 0 is the empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    faces: Vec<Face>,
    dim: i32,
}

impl FaceComplex {
    /// Builds a complex from `(dim, subfaces)` pairs. The subface lists may
    /// be any generating set of the order relation; the transitive closure is
    /// taken here. Face 0 must be the unique face of dimension -1.
    pub fn from_faces(raw: Vec<(i32, Vec<usize>)>) -> Result<Self> {
        if raw.is_empty() || raw[0].0 != -1 || !raw[0].1.is_empty() {
            return Err(Error::InvalidComplex(
                "face 0 must be the empty face (dim -1, no subfaces)".into(),
            ));
        }
        let n = raw.len();
        for (idx, (dim, subs)) in raw.iter().enumerate() {
            if idx > 0 && *dim < 0 {
                return Err(Error::InvalidComplex(format!(
                    "face {idx} has dimension {dim}; only face 0 may be empty"
                )));
            }
            for &s in subs {
                if s >= n {
                    return Err(Error::InvalidComplex(format!(
                        "face {idx} lists unknown subface {s}"
                    )));
                }
                if raw[s].0 >= *dim {
                    return Err(Error::InvalidComplex(format!(
                        "face {idx} (dim {dim}) lists subface {s} of dim {}",
                        raw[s].0
                    )));
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| raw[i].0);
        let mut closure: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &idx in &order {
            let mut set = BTreeSet::new();
            for &s in &raw[idx].1 {
                set.insert(s);
                set.extend(closure[s].iter().copied());
            }
            if idx != 0 {
                set.insert(0);
            }
            closure[idx] = set;
        }
        let faces: Vec<Face> = raw
            .iter()
            .zip(closure)
            .map(|((dim, _), below)| Face {
                dim: *dim,
                below: below.into_iter().collect(),
            })
            .collect();
        let dim = faces.iter().map(|f| f.dim).max().unwrap_or(-1);
        Ok(FaceComplex { faces, dim })
    }

    /// The face poset of the solid `d`-cube (faces are `{0,1,*}`-words).
    pub fn cube(d: usize) -> Result<Self> {
        Self::cube_words(d, true)
    }

    /// The boundary complex of the `d`-cube, of dimension `d - 1`.
    pub fn cube_boundary(d: usize) -> Result<Self> {
        Self::cube_words(d, false)
    }

    fn cube_words(d: usize, include_top: bool) -> Result<Self> {
        if d > MAX_CUBE_DIM {
            return Err(Error::OutOfRange {
                what: "cube dimension",
                value: d as i64,
                allowed: format!("0..={MAX_CUBE_DIM}"),
            });
        }
        // word digit t: 0, 1, or 2 for '*'
        let total = 3usize.pow(d as u32);
        let digits = |mut w: usize| {
            let mut v = vec![0u8; d];
            for slot in v.iter_mut() {
                *slot = (w % 3) as u8;
                w /= 3;
            }
            v
        };
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut words = Vec::new();
        for w in 0..total {
            let stars = digits(w).iter().filter(|&&c| c == 2).count();
            if !include_top && stars == d {
                continue;
            }
            words.push((stars, w));
        }
        words.sort_unstable();
        for (pos, &(_, w)) in words.iter().enumerate() {
            index.insert(w, pos + 1);
        }
        let mut raw = vec![(-1, Vec::new())];
        for &(stars, w) in &words {
            let dv = digits(w);
            // direct subfaces: replace one '*' by 0 or 1
            let mut subs = Vec::new();
            if stars == 0 {
                subs.push(0);
            }
            let mut pow = 1usize;
            for &c in &dv {
                if c == 2 {
                    subs.push(index[&(w - 2 * pow)]);
                    subs.push(index[&(w - pow)]);
                }
                pow *= 3;
            }
            raw.push((stars as i32, subs));
        }
        Self::from_faces(raw)
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.len() == 1
    }

    pub fn face_dim(&self, face: usize) -> i32 {
        self.faces[face].dim
    }

    /// Face counts `f_0, ..., f_dim` (the empty face excluded).
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; (self.dim + 1).max(0) as usize];
        for face in &self.faces[1..] {
            f[face.dim as usize] += 1;
        }
        f
    }

    /// Checks structurally that every nonempty face is a combinatorial cube:
    /// its proper faces have the cube's face counts, its facets are cubes
    /// falling into vertex-disjoint antipodal pairs, and the vertices are
    /// exactly `2^dim`.
    pub fn verify_cubical(&self) -> Result<()> {
        let mut order: Vec<usize> = (1..self.faces.len()).collect();
        order.sort_by_key(|&i| self.faces[i].dim);
        for idx in order {
            self.check_cube(idx)?;
        }
        Ok(())
    }

    fn check_cube(&self, idx: usize) -> Result<()> {
        let face = &self.faces[idx];
        let k = face.dim as usize;
        let not_cube = |reason: String| Error::NotCube { face: idx, reason };
        let mut counts = vec![0usize; k];
        for &s in &face.below {
            let sd = self.faces[s].dim;
            if sd >= 0 {
                counts[sd as usize] += 1;
            }
        }
        for (j, &c) in counts.iter().enumerate() {
            let expect = binomial(k as i64, j as i64)
                .to_usize()
                .unwrap_or(usize::MAX)
                << (k - j);
            if c != expect {
                return Err(not_cube(format!(
                    "has {c} faces of dimension {j}, a {k}-cube has {expect}"
                )));
            }
        }
        if k < 2 {
            return Ok(());
        }
        let vertices = |f: usize| -> BTreeSet<usize> {
            self.faces[f]
                .below
                .iter()
                .copied()
                .filter(|&s| self.faces[s].dim == 0)
                .collect()
        };
        let facets: Vec<usize> = face
            .below
            .iter()
            .copied()
            .filter(|&s| self.faces[s].dim == k as i32 - 1)
            .collect();
        let facet_vertices: Vec<BTreeSet<usize>> = facets.iter().map(|&f| vertices(f)).collect();
        for (a, va) in facet_vertices.iter().enumerate() {
            let partners = facet_vertices
                .iter()
                .enumerate()
                .filter(|&(b, vb)| b != a && va.is_disjoint(vb))
                .count();
            if partners != 1 {
                return Err(not_cube(format!(
                    "facet {} has {partners} antipodal partners",
                    facets[a]
                )));
            }
        }
        Ok(())
    }

    /// `g(∂F)` for every face, by the toric recursion. Faces are checked to be
    /// cubes first, and the value is shared between cubes of equal dimension.
    fn boundary_g(&self) -> Result<Vec<Poly>> {
        self.verify_cubical()?;
        let mut by_dim: HashMap<i32, Poly> = HashMap::new();
        let mut out = vec![Poly::zero(); self.faces.len()];
        let mut order: Vec<usize> = (0..self.faces.len()).collect();
        order.sort_by_key(|&i| self.faces[i].dim);
        for idx in order {
            let face = &self.faces[idx];
            if let Some(g) = by_dim.get(&face.dim) {
                out[idx] = g.clone();
                continue;
            }
            let g = if face.dim < 0 {
                Poly::one()
            } else {
                let boundary_dim = face.dim - 1;
                let f: Poly = face
                    .below
                    .iter()
                    .map(|&s| {
                        &out[s]
                            * &Poly::linear_power(-1, (boundary_dim - self.faces[s].dim) as usize)
                    })
                    .sum();
                g_from_f(&f, face.dim as usize / 2)
            };
            by_dim.insert(face.dim, g.clone());
            out[idx] = g;
        }
        Ok(out)
    }

    /// `f(P, x) = Σ_F g(∂F, x) (x - 1)^(d - dim F)`.
    pub fn toric_f(&self) -> Result<Poly> {
        let g = self.boundary_g()?;
        Ok(self
            .faces
            .iter()
            .zip(&g)
            .map(|(face, gf)| gf * &Poly::linear_power(-1, (self.dim - face.dim) as usize))
            .sum())
    }

    pub fn toric_g(&self) -> Result<Poly> {
        let f = self.toric_f()?;
        Ok(g_from_f(&f, ((self.dim + 1) / 2).max(0) as usize))
    }

    /// `{"faces": [{"dim": -1, "subfaces": []}, ...]}` with full down-sets.
    pub fn to_json(&self) -> Value {
        let faces: Vec<Value> = self
            .faces
            .iter()
            .map(|f| json!({ "dim": f.dim, "subfaces": f.below }))
            .collect();
        json!({ "faces": faces })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let faces = value
            .get("faces")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidComplex("missing 'faces' array".into()))?;
        let raw = faces
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let dim = f
                    .get("dim")
                    .and_then(Value::as_i64)
                    .ok_or_else(|| Error::InvalidComplex(format!("face {i}: missing 'dim'")))?;
                let subs = f
                    .get("subfaces")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::InvalidComplex(format!("face {i}: missing 'subfaces'")))?
                    .iter()
                    .map(|s| {
                        s.as_u64().map(|s| s as usize).ok_or_else(|| {
                            Error::InvalidComplex(format!("face {i}: bad subface index {s}"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((dim as i32, subs))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces(raw)
    }
}

/// `g = Σ_{i<=m} (k_i - k_{i-1}) x^i` for `f = Σ k_i x^i`.
pub fn g_from_f(f: &Poly, m: usize) -> Poly {
    (f - &(&Poly::x() * f)).truncate(m)
}
