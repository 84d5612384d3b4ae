//! Turning any linear code into an equivalent Euclidean or l-Galois LCD code.
//!
//! Take a generator in standard form `G = [I_k | M]` and let
//! `P = G F^m(G)^T`, with `m = 0` for the Euclidean form and `m = e - l` for
//! the l-Galois form. Scaling column `j < k` by `a_j` (all other columns by 1)
//! changes the Gram matrix to `P + diag(b)` with `b_j = a_j F^m(a_j) - 1`.
//!
//! If every principal minor of `P` obtained by deleting at most `t` rows and
//! columns vanishes, then for `b` supported on a set `S` of size at most
//! `t + 1`,
//!
//! ```text
//! det(P + diag(b)) = (prod_{j in S} b_j) * det(P with S deleted).
//! ```
//!
//! [`minor_search`] finds the smallest deletion set `S` with a nonzero minor,
//! so picking `a_j` with `b_j != 0` on `S` makes the scaled code LCD. For the
//! Euclidean form that means `a_j ∉ {0, 1, -1}` (possible once `q > 3`); for
//! the l-Galois form with `beta = (p^e - 1)/(p^(e-l) + 1)` it means `a_j` is a
//! unit outside the β-th powers, since those are exactly the solutions of
//! `a^(p^(e-l)+1) = 1`.
//!
//! Over `R` the construction runs on each component independently and the
//! four scaling vectors are assembled into `α_j = sum_i g_i α_ji`, a unit.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fqcode::FqCode;
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use crate::rcode::RCode;
use crate::ring::RingElement;

/// Largest Gram matrix the minor search accepts by default.
pub const DEFAULT_MAX_K: usize = 20;

/// Smallest vanishing-free deletion found by [`minor_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorCertificate {
    /// Every deletion of at most `t` indices has zero determinant; `-1` when
    /// the matrix itself is nonsingular.
    pub t: i64,
    /// Deleted indices, `t + 1` of them, ascending.
    pub removed: Vec<usize>,
    /// Determinant of the matrix with `removed` deleted; never zero.
    pub det: Fe,
}

/// Which inner product the constructed code should be LCD for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcdMode {
    Euclidean,
    Galois(u32),
}

impl LcdMode {
    /// The `l` of the matching inner product.
    pub fn l(self) -> u32 {
        match self {
            LcdMode::Euclidean => 0,
            LcdMode::Galois(l) => l,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructOptions {
    /// `None` picks the smallest admissible scalar; `Some` picks uniformly at
    /// random from a generator seeded with this value.
    pub seed: Option<u64>,
    /// Refuse minor searches on Gram matrices larger than this.
    pub max_k: usize,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            seed: None,
            max_k: DEFAULT_MAX_K,
        }
    }
}

/// Record of one field-level construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCertificate {
    pub minor: MinorCertificate,
    /// Standard-form column `c` is original column `perm[c]`.
    pub perm: Vec<usize>,
    /// Scaling vector in original coordinates.
    pub scaling: Vec<Fe>,
    /// `det` of the Gram matrix of the scaled standard-form generator.
    pub gram_det: Fe,
}

/// Output of [`field_lcd_equivalent`].
#[derive(Debug, Clone)]
pub struct FieldConstruction {
    pub scaling: Vec<Fe>,
    pub code: FqCode,
    pub certificate: ComponentCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionCertificate {
    pub mode: LcdMode,
    /// `(p^e - 1)/(p^(e-l) + 1)` for the Galois mode.
    pub beta: Option<u64>,
    pub components: [ComponentCertificate; 4],
    pub n: usize,
    pub k: usize,
}

/// Output of [`ring_lcd_equivalent`].
#[derive(Debug, Clone)]
pub struct RingConstruction {
    pub alpha: Vec<RingElement>,
    pub code: RCode,
    pub certificate: ConstructionCertificate,
}

/// Scans deletion sets by size, then lexicographically, and returns the first
/// one leaving a nonsingular minor. Deleting everything leaves the empty
/// matrix with determinant 1, so the scan always succeeds.
pub fn minor_search(p: &Matrix, max_k: usize) -> Result<MinorCertificate> {
    if !p.is_square() {
        return Err(Error::NotSquare {
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    let k = p.rows();
    if k > max_k {
        return Err(Error::SizeCap { k, max: max_k });
    }
    for w in 0..=k {
        for removed in (0..k).combinations(w) {
            let det = p.minor_det(&removed)?;
            if !det.is_zero() {
                return Ok(MinorCertificate {
                    t: w as i64 - 1,
                    removed,
                    det,
                });
            }
        }
    }
    unreachable!("the full deletion has determinant 1")
}

/// Checks `det(P + diag(b)) = (prod_{j in S} b_j) det(P_S)` where `S` is the
/// certificate's deletion set, which must be exactly the support of `b`.
pub fn lemma_det_check(p: &Matrix, b: &[Fe], cert: &MinorCertificate) -> Result<bool> {
    let support: Vec<usize> = (0..b.len()).filter(|&j| !b[j].is_zero()).collect();
    if b.len() != p.rows() || support != cert.removed {
        return Err(Error::SupportMismatch);
    }
    let f = p.field();
    let lhs = p.add_diagonal(b)?.det()?;
    let prod = support.iter().fold(Fe::ONE, |acc, &j| f.mul(acc, b[j]));
    Ok(lhs == f.mul(prod, p.minor_det(&support)?))
}

struct ModeSetup {
    /// Frobenius power in the Gram matrix.
    twist: u32,
    allowed: Vec<Fe>,
    beta: Option<u64>,
}

fn setup(field: &Field, mode: LcdMode) -> Result<ModeSetup> {
    match mode {
        LcdMode::Euclidean => {
            if field.q() <= 3 {
                return Err(Error::FieldTooSmall(field.q()));
            }
            Ok(ModeSetup {
                twist: 0,
                allowed: field.units_without_signs(),
                beta: None,
            })
        }
        LcdMode::Galois(l) => {
            let e = field.e();
            if l == 0 || l >= e {
                return Err(Error::BadL { l, e });
            }
            let divisor = (field.p() as u64).pow(e - l) + 1;
            let order = field.q() as u64 - 1;
            if order % divisor != 0 {
                return Err(Error::DivisibilityFails { divisor, order });
            }
            let beta = order / divisor;
            if beta == 1 {
                return Err(Error::BetaOne);
            }
            Ok(ModeSetup {
                twist: e - l,
                allowed: field.nonresidues(beta)?,
                beta: Some(beta),
            })
        }
    }
}

fn pick(allowed: &[Fe], rng: &mut Option<ChaCha8Rng>) -> Fe {
    match rng {
        Some(r) => *allowed.choose(r).expect("nonempty"),
        None => allowed[0],
    }
}

fn construct_component(
    code: &FqCode,
    mode: LcdMode,
    setup: &ModeSetup,
    opts: &ConstructOptions,
    rng: &mut Option<ChaCha8Rng>,
) -> Result<FieldConstruction> {
    let f = code.field();
    let n = code.n();
    let k = code.k();
    let (gs, perm) = code.generator().standard_form()?;
    let p = gs.gram(setup.twist);
    let minor = minor_search(&p, opts.max_k)?;

    let mut permuted = vec![Fe::ONE; n];
    let mut b = vec![Fe::ZERO; k];
    for &j in &minor.removed {
        let a = pick(&setup.allowed, rng);
        permuted[j] = a;
        b[j] = f.sub(f.mul(a, f.frobenius(a, setup.twist)), Fe::ONE);
    }
    if !lemma_det_check(&p, &b, &minor)? {
        return Err(Error::Consistency("determinant identity failed".into()));
    }
    let gram_det = gs.scale_columns(&permuted).gram(setup.twist).det()?;
    if gram_det != p.add_diagonal(&b)?.det()? || gram_det.is_zero() {
        return Err(Error::Consistency(
            "scaled Gram matrix disagrees with P + diag(b)".into(),
        ));
    }

    let mut scaling = vec![Fe::ONE; n];
    for (c, &src) in perm.iter().enumerate() {
        scaling[src] = permuted[c];
    }
    let scaled = code.scale(&scaling)?;
    if !scaled.is_lcd(mode.l())?.lcd {
        return Err(Error::Consistency("constructed code is not LCD".into()));
    }
    Ok(FieldConstruction {
        scaling: scaling.clone(),
        code: scaled,
        certificate: ComponentCertificate {
            minor,
            perm,
            scaling,
            gram_det,
        },
    })
}

fn make_rng(opts: &ConstructOptions) -> Option<ChaCha8Rng> {
    opts.seed.map(ChaCha8Rng::seed_from_u64)
}

/// Scales `code` into an equivalent LCD code for `mode`. Codes that are
/// already LCD come back unchanged with an all-ones scaling.
pub fn field_lcd_equivalent(code: &FqCode, mode: LcdMode, opts: &ConstructOptions) -> Result<FieldConstruction> {
    let setup = setup(code.field(), mode)?;
    construct_component(code, mode, &setup, opts, &mut make_rng(opts))
}

/// Euclidean LCD code equivalent to `code`; needs `q > 3`.
pub fn euclid_lcd_alpha(code: &FqCode, opts: &ConstructOptions) -> Result<FieldConstruction> {
    field_lcd_equivalent(code, LcdMode::Euclidean, opts)
}

/// l-Galois LCD code equivalent to `code`; needs `0 < l < e`,
/// `p^(e-l) + 1 | p^e - 1` and `beta > 1`.
pub fn galois_lcd_alpha(code: &FqCode, l: u32, opts: &ConstructOptions) -> Result<FieldConstruction> {
    field_lcd_equivalent(code, LcdMode::Galois(l), opts)
}

/// Unit vector `α` with `C^α` LCD for `mode`, built componentwise.
pub fn ring_lcd_equivalent(code: &RCode, mode: LcdMode, opts: &ConstructOptions) -> Result<RingConstruction> {
    let setup = setup(code.field(), mode)?;
    let mut rng = make_rng(opts);
    let mut parts = Vec::with_capacity(4);
    for c in code.components() {
        parts.push(construct_component(c, mode, &setup, opts, &mut rng)?);
    }
    let n = code.n();
    let alpha: Vec<RingElement> = (0..n)
        .map(|j| RingElement(std::array::from_fn(|i| parts[i].scaling[j])))
        .collect();
    let scaled = code.scale(&alpha)?;
    if !scaled.is_lcd(mode.l())?.lcd {
        return Err(Error::Consistency("constructed ring code is not LCD".into()));
    }
    let comps: Vec<ComponentCertificate> = parts.into_iter().map(|p| p.certificate).collect();
    let components: [ComponentCertificate; 4] = comps.try_into().expect("four components");
    Ok(RingConstruction {
        certificate: ConstructionCertificate {
            mode,
            beta: setup.beta,
            components,
            n,
            k: scaled.k(),
        },
        alpha,
        code: scaled,
    })
}
