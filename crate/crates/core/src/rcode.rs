//! Linear codes over `R`, stored as their four component codes.
//!
//! Every linear code over `R` is `g1 C1 ⊕ g2 C2 ⊕ g3 C3 ⊕ g4 C4` for linear
//! codes `C_i` over GF(q). The component tuple is the only stored state;
//! generator matrices over `R` (rows `g_i * row`) are rebuilt on demand.
//! Duals, hulls, the LCD property and self-orthogonality all split along the
//! components, and the Lee distance is the smallest component distance.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fqcode::{FqCode, LcdCheck};
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use crate::ring::{check_len, RingElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RCode {
    field: Field,
    n: usize,
    comps: [FqCode; 4],
}

/// `[n, k, d]` of one component code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentParams {
    pub n: usize,
    pub k: usize,
    /// `None` for the zero code or when enumeration exceeded the cap.
    pub d: Option<usize>,
}

/// Parameters of a code over `R`: length, total dimension `k = sum k_i`
/// (so `|C| = q^k`) and Lee distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RCodeParams {
    pub n: usize,
    pub k: usize,
    pub d_lee: Option<usize>,
    pub components: [ComponentParams; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingLcdCheck {
    pub lcd: bool,
    pub components: [LcdCheck; 4],
}

impl RCode {
    pub fn from_components(comps: [FqCode; 4]) -> Result<RCode> {
        let field = comps[0].field().clone();
        let n = comps[0].n();
        if comps.iter().any(|c| c.field() != &field || c.n() != n) {
            return Err(Error::Mismatch);
        }
        Ok(RCode { field, n, comps })
    }

    /// The `R`-span of `rows`. Because `r * (g_i x) = g_i (r_i x)`, the i-th
    /// component is the GF(q)-span of the rows' i-th coordinates.
    pub fn from_generators(field: &Field, n: usize, rows: &[Vec<RingElement>]) -> Result<RCode> {
        for row in rows {
            if row.len() != n {
                return Err(Error::WidthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if row.iter().flat_map(|x| x.0).any(|a| !field.contains(a)) {
                return Err(Error::SpecMismatch);
            }
        }
        let comps = std::array::from_fn(|i| {
            let data = rows.iter().flat_map(|row| row.iter().map(move |x| x.0[i])).collect();
            let m = Matrix::new(field, rows.len(), n, data).expect("validated above");
            FqCode::new(field, n, &m).expect("width checked")
        });
        RCode::from_components(comps)
    }

    pub fn zero(field: &Field, n: usize) -> RCode {
        RCode::from_components(std::array::from_fn(|_| FqCode::zero(field, n))).expect("uniform")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total dimension `k_1 + k_2 + k_3 + k_4`; the code has `q^k` words.
    pub fn k(&self) -> usize {
        self.comps.iter().map(FqCode::k).sum()
    }

    pub fn components(&self) -> &[FqCode; 4] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &FqCode {
        &self.comps[i]
    }

    /// Generator rows over `R`: `g_i * row` for every row of every `G_i`.
    pub fn generators(&self) -> Vec<Vec<RingElement>> {
        let mut out = Vec::with_capacity(self.k());
        for (i, c) in self.comps.iter().enumerate() {
            for row in c.generator().row_iter() {
                out.push(
                    row.iter()
                        .map(|&x| {
                            let mut g = [Fe::ZERO; 4];
                            g[i] = x;
                            RingElement(g)
                        })
                        .collect(),
                );
            }
        }
        out
    }

    fn map_components(&self, f: impl Fn(&FqCode) -> Result<FqCode>) -> Result<RCode> {
        let [a, b, c, d] = &self.comps;
        RCode::from_components([f(a)?, f(b)?, f(c)?, f(d)?])
    }

    /// The l-Galois dual `⊕ g_i C_i^{⊥l}`.
    pub fn galois_dual(&self, l: u32) -> Result<RCode> {
        self.map_components(|c| c.galois_dual(l))
    }

    /// Gray image over GF(q) of length `4n`. Row `x` of `G_i` becomes the
    /// vector with `x_j` at position `4j + i`.
    pub fn gray(&self) -> FqCode {
        let f = &self.field;
        let n4 = 4 * self.n;
        let mut data = Vec::with_capacity(self.k() * n4);
        for (i, c) in self.comps.iter().enumerate() {
            for row in c.generator().row_iter() {
                let mut img = vec![Fe::ZERO; n4];
                for (j, &x) in row.iter().enumerate() {
                    img[4 * j + i] = x;
                }
                data.extend(img);
            }
        }
        let m = Matrix::new(f, self.k(), n4, data).expect("shape");
        FqCode::new(f, n4, &m).expect("width")
    }

    /// Parameters with Lee distance `min d_i`. Components whose enumeration
    /// would exceed `cap` leave the distance unknown instead of failing.
    pub fn params(&self, cap: u64) -> RCodeParams {
        let components = std::array::from_fn(|i| {
            let c = &self.comps[i];
            ComponentParams {
                n: self.n,
                k: c.k(),
                d: if c.k() == 0 { None } else { c.min_dist(cap).ok() },
            }
        });
        RCodeParams {
            n: self.n,
            k: self.k(),
            d_lee: lee_from_components(&components),
            components,
        }
    }

    /// Lee distance, failing on the zero code or when the cap is exceeded.
    pub fn lee_distance(&self, cap: u64) -> Result<usize> {
        let mut best: Option<usize> = None;
        for c in self.comps.iter().filter(|c| c.k() > 0) {
            let d = c.min_dist(cap)?;
            best = Some(best.map_or(d, |b| b.min(d)));
        }
        best.ok_or(Error::ZeroCode)
    }

    pub fn hull_dims(&self, l: u32) -> Result<[usize; 4]> {
        let [a, b, c, d] = &self.comps;
        Ok([a.hull_dim(l)?, b.hull_dim(l)?, c.hull_dim(l)?, d.hull_dim(l)?])
    }

    /// l-Galois LCD iff every component is.
    pub fn is_lcd(&self, l: u32) -> Result<RingLcdCheck> {
        let [a, b, c, d] = &self.comps;
        let components = [a.is_lcd(l)?, b.is_lcd(l)?, c.is_lcd(l)?, d.is_lcd(l)?];
        Ok(RingLcdCheck {
            lcd: components.iter().all(|x| x.lcd),
            components,
        })
    }

    pub fn is_self_orthogonal(&self, l: u32) -> Result<bool> {
        for c in &self.comps {
            if !c.is_self_orthogonal(l)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Euclidean self-duality, componentwise.
    pub fn is_self_dual(&self) -> bool {
        self.comps.iter().all(FqCode::is_self_dual)
    }

    /// Singleton bound `d <= n - k/4 + 1`, met with equality.
    pub fn is_mds(&self, cap: u64) -> Result<bool> {
        let d = self.lee_distance(cap)?;
        Ok(4 * d + self.k() == 4 * self.n + 4)
    }

    /// The value `n - k/4 + 1` of the Singleton bound.
    pub fn singleton_bound(&self) -> f64 {
        self.n as f64 - self.k() as f64 / 4.0 + 1.0
    }

    /// `C^α = {(α_1 c_1, ..., α_n c_n)}` for a vector of units `α`; the i-th
    /// component is scaled by the i-th coordinates of `α`.
    pub fn scale(&self, alpha: &[RingElement]) -> Result<RCode> {
        check_len(self.n, alpha.len())?;
        if let Some(j) = alpha.iter().position(|a| !a.is_unit()) {
            return Err(Error::NotAUnit(j));
        }
        let comps: Vec<FqCode> = (0..4)
            .map(|i| {
                let a: Vec<Fe> = alpha.iter().map(|x| x.0[i]).collect();
                self.comps[i].scale(&a)
            })
            .collect::<Result<_>>()?;
        let comps: [FqCode; 4] = comps.try_into().expect("four components");
        RCode::from_components(comps)
    }
}

fn lee_from_components(c: &[ComponentParams; 4]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for p in c.iter().filter(|p| p.k > 0) {
        let d = p.d?;
        best = Some(best.map_or(d, |b| b.min(d)));
    }
    best
}

/// Whether all four components are MDS with identical `[n, k_i, d_i]`.
pub fn components_uniform_mds(code: &RCode, cap: u64) -> Result<bool> {
    let first = &code.comps[0];
    for c in &code.comps {
        if c.k() != first.k() {
            return Ok(false);
        }
        if c.k() == 0 {
            continue;
        }
        if !c.is_mds(cap)? {
            return Ok(false);
        }
    }
    Ok(first.k() > 0)
}
