//! Linear codes over GF(q).
//!
//! An [`FqCode`] keeps its generator matrix in reduced row echelon form with
//! zero rows dropped, so two codes are equal exactly when their fields,
//! lengths and generators agree.
//!
//! The l-Galois dual is always computed as the Euclidean dual of the
//! Frobenius-twisted code: `s` is orthogonal to every `t` under
//! `sum t_i s_i^(p^l)` iff `sum t_i^(p^(e-l)) s_i = 0`, so the dual is the
//! nullspace of `F^(e-l)(G)`.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Matrix;
use crate::ring::check_l;

/// Default enumeration budget for minimum-distance computations.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Clone)]
pub struct FqCode {
    field: Field,
    n: usize,
    gen: Matrix,
    min_dist: OnceLock<usize>,
}

impl PartialEq for FqCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.gen == other.gen
    }
}

impl Eq for FqCode {}

impl fmt::Debug for FqCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}] code over GF({}) gen {:?}",
            self.n,
            self.k(),
            self.field.q(),
            self.gen
        )
    }
}

/// Result of the Gram-determinant LCD test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LcdCheck {
    pub lcd: bool,
    /// `det(G F^(e-l)(G)^T)` for the canonical generator `G`.
    pub det: Fe,
}

impl FqCode {
    /// The code spanned by the rows of `rows`.
    pub fn new(field: &Field, n: usize, rows: &Matrix) -> Result<FqCode> {
        if rows.cols() != n {
            return Err(Error::WidthMismatch {
                expected: n,
                found: rows.cols(),
            });
        }
        if rows.field() != field {
            return Err(Error::SpecMismatch);
        }
        let r = rows.rref();
        let gen = r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>());
        Ok(FqCode {
            field: field.clone(),
            n,
            gen,
            min_dist: OnceLock::new(),
        })
    }

    /// Convenience constructor from rows of canonical encodings.
    pub fn from_values(field: &Field, n: usize, rows: &[Vec<u32>]) -> Result<FqCode> {
        let m = Matrix::from_values(field, n, rows)?;
        FqCode::new(field, n, &m)
    }

    pub fn zero(field: &Field, n: usize) -> FqCode {
        FqCode::new(field, n, &Matrix::zeros(field, 0, n)).expect("well formed")
    }

    pub fn full(field: &Field, n: usize) -> FqCode {
        FqCode::new(field, n, &Matrix::identity(field, n)).expect("well formed")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical (RREF, full row rank) generator matrix.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Whether `word` lies in the code.
    pub fn contains(&self, word: &[Fe]) -> Result<bool> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: word.len(),
            });
        }
        let w = Matrix::new(&self.field, 1, self.n, word.to_vec())?;
        Ok(self.gen.vstack(&w)?.rank() == self.k())
    }

    /// The l-Galois dual, `0 <= l < e`.
    pub fn galois_dual(&self, l: u32) -> Result<FqCode> {
        let e = self.field.e();
        check_l(l, e)?;
        let twisted = self.gen.frobenius(e - l);
        FqCode::new(&self.field, self.n, &twisted.nullspace())
    }

    /// Euclidean dual.
    pub fn dual(&self) -> FqCode {
        self.galois_dual(0).expect("l = 0 is always valid")
    }

    /// Dimension of `C ∩ C^{⊥l}`.
    pub fn hull_dim(&self, l: u32) -> Result<usize> {
        let dual = self.galois_dual(l)?;
        let stacked = self.gen.vstack(dual.generator())?;
        Ok(self.k() + dual.k() - stacked.rank())
    }

    /// LCD test through the Gram matrix `G F^(e-l)(G)^T`. The zero code is LCD.
    pub fn is_lcd(&self, l: u32) -> Result<LcdCheck> {
        let e = self.field.e();
        check_l(l, e)?;
        let det = self.gen.gram(e - l).det()?;
        Ok(LcdCheck {
            lcd: !det.is_zero(),
            det,
        })
    }

    /// `C ⊆ C^{⊥l}`, decided by membership of the generator rows in the dual.
    pub fn is_self_orthogonal(&self, l: u32) -> Result<bool> {
        let dual = self.galois_dual(l)?;
        let stacked = dual.generator().vstack(&self.gen)?;
        Ok(stacked.rank() == dual.k())
    }

    /// `C = C^⊥` (Euclidean).
    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// Minimum Hamming weight by enumerating all `q^k - 1` nonzero codewords.
    /// The value is cached after the first successful call.
    pub fn min_dist(&self, cap: u64) -> Result<usize> {
        if let Some(&d) = self.min_dist.get() {
            return Ok(d);
        }
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        let needed = (self.field.q() as u128).pow(self.k() as u32);
        if needed > cap as u128 {
            return Err(Error::CapExceeded { needed, cap });
        }
        let d = self.enumerate_min_weight();
        Ok(*self.min_dist.get_or_init(|| d))
    }

    /// Cached minimum distance, if it has been computed.
    pub fn known_min_dist(&self) -> Option<usize> {
        self.min_dist.get().copied()
    }

    fn enumerate_min_weight(&self) -> usize {
        let f = &self.field;
        let q = f.q() as usize;
        let k = self.k();
        let n = self.n;
        // scaled[i][c] = c * row_i
        let scaled: Vec<Vec<Vec<Fe>>> = self
            .gen
            .row_iter()
            .map(|row| {
                f.elements()
                    .map(|c| row.iter().map(|&x| f.mul(c, x)).collect())
                    .collect()
            })
            .collect();
        let mut digits = vec![0usize; k];
        let mut word = vec![Fe::ZERO; n];
        let mut best = n;
        // Odometer over the message space; each step changes one digit and
        // updates the running codeword by the difference of scaled rows.
        loop {
            let mut i = 0;
            loop {
                if i == k {
                    return best;
                }
                let old = digits[i];
                let new = (old + 1) % q;
                digits[i] = new;
                for (w, (&a, &b)) in word.iter_mut().zip(scaled[i][old].iter().zip(&scaled[i][new])) {
                    *w = f.add(f.sub(*w, a), b);
                }
                if new != 0 {
                    break;
                }
                i += 1;
            }
            let wt = word.iter().filter(|x| !x.is_zero()).count();
            if wt < best {
                best = wt;
            }
        }
    }

    /// Singleton bound met with equality: `d = n - k + 1`.
    pub fn is_mds(&self, cap: u64) -> Result<bool> {
        let d = self.min_dist(cap)?;
        Ok(d + self.k() == self.n + 1)
    }

    /// The code `{(a_1 c_1, ..., a_n c_n)}` for nonzero scalars `a`.
    pub fn scale(&self, a: &[Fe]) -> Result<FqCode> {
        if a.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: a.len(),
            });
        }
        if let Some(j) = a.iter().position(|x| x.is_zero()) {
            return Err(Error::ZeroScale(j));
        }
        let scaled = FqCode::new(&self.field, self.n, &self.gen.scale_columns(a))?;
        if let Some(&d) = self.min_dist.get() {
            let _ = scaled.min_dist.set(d);
        }
        Ok(scaled)
    }

    /// Column permutation: coordinate `c` of the new code is coordinate
    /// `perm[c]` of this one.
    pub fn permute(&self, perm: &[usize]) -> Result<FqCode> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: perm.len(),
            });
        }
        FqCode::new(&self.field, self.n, &self.gen.permute_columns(perm))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn gf9() -> Field {
        Field::new(3, 2, None).unwrap()
    }

    fn code(f: &Field, rows: &[&[u32]]) -> FqCode {
        let n = rows[0].len();
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        FqCode::from_values(f, n, &rows).unwrap()
    }

    /// Brute-force check that every pair pairs to zero under the l-Galois form.
    fn pairs_vanish(c: &FqCode, d: &FqCode, l: u32) -> bool {
        let f = c.field();
        let exp = (f.p() as u64).pow(l);
        c.generator().row_iter().all(|t| {
            d.generator().row_iter().all(|s| {
                t.iter()
                    .zip(s)
                    .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, f.pow(b, exp))))
                    .is_zero()
            })
        })
    }

    #[test]
    fn make_examples() {
        let f = f5();
        let c = FqCode::from_values(&f, 2, &[vec![2, 4]]).unwrap();
        assert_eq!(c.generator().to_values(), vec![vec![1, 2]]);
        assert_eq!(c.k(), 1);
        assert_eq!(code(&f, &[&[1, 1], &[1, 1]]).k(), 1);
        assert_eq!(FqCode::from_values(&f, 3, &[]).unwrap().k(), 0);
        assert!(matches!(
            FqCode::from_values(&f, 3, &[vec![1, 2]]),
            Err(Error::WidthMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn dual_examples() {
        let f = f5();
        let c = code(&f, &[&[1, 2]]);
        assert_eq!(c.galois_dual(0).unwrap(), c);
        let g = gf9();
        let c9 = code(&g, &[&[1, 4]]);
        let d9 = c9.galois_dual(1).unwrap();
        assert_eq!(d9.k(), 1);
        assert!(pairs_vanish(&c9, &d9, 1));
        // the twisted generator is [1, (w+1)^3] and the dual is its nullspace
        let w1_cubed = g.pow(g.elem(4).unwrap(), 3);
        let twisted = code(&g, &[&[1, w1_cubed.value()]]);
        assert_eq!(d9, twisted.dual());
        assert_eq!(FqCode::zero(&f, 3).galois_dual(0).unwrap(), FqCode::full(&f, 3));
        assert_eq!(c.galois_dual(1), Err(Error::BadL { l: 1, e: 1 }));
    }

    #[test]
    fn hull_examples() {
        let f = f5();
        assert_eq!(code(&f, &[&[1, 2]]).hull_dim(0).unwrap(), 1);
        assert_eq!(code(&f, &[&[1, 1]]).hull_dim(0).unwrap(), 0);
        assert_eq!(FqCode::zero(&f, 4).hull_dim(0).unwrap(), 0);
    }

    #[test]
    fn lcd_examples() {
        let f = f5();
        let a = code(&f, &[&[1, 1]]).is_lcd(0).unwrap();
        assert_eq!((a.lcd, a.det.value()), (true, 2));
        let b = code(&f, &[&[1, 2]]).is_lcd(0).unwrap();
        assert_eq!((b.lcd, b.det), (false, Fe::ZERO));
        let g = gf9();
        let c = code(&g, &[&[1, 4]]).is_lcd(1).unwrap();
        assert_eq!((c.lcd, c.det), (false, Fe::ZERO));
        assert!(FqCode::zero(&f, 2).is_lcd(0).unwrap().lcd);
    }

    #[test]
    fn self_orthogonal_examples() {
        let f = f5();
        assert!(code(&f, &[&[1, 2]]).is_self_orthogonal(0).unwrap());
        assert!(!code(&f, &[&[1, 1]]).is_self_orthogonal(0).unwrap());
        assert!(FqCode::zero(&f, 3).is_self_orthogonal(0).unwrap());
        assert!(code(&f, &[&[1, 2]]).is_self_dual());
        assert!(!code(&f, &[&[1, 1]]).is_self_dual());
    }

    #[test]
    fn min_dist_examples() {
        let f = f5();
        assert_eq!(code(&f, &[&[1, 1, 1]]).min_dist(DEFAULT_CAP).unwrap(), 3);
        assert_eq!(code(&f, &[&[1, 0, 1], &[0, 1, 1]]).min_dist(DEFAULT_CAP).unwrap(), 2);
        assert_eq!(FqCode::zero(&f, 3).min_dist(DEFAULT_CAP), Err(Error::ZeroCode));
        let big = FqCode::full(&f, 9);
        assert!(matches!(big.min_dist(DEFAULT_CAP), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn mds_examples() {
        let f = f5();
        let rep = code(&f, &[&[1, 1, 1]]);
        assert!(rep.is_mds(DEFAULT_CAP).unwrap());
        assert!(rep.dual().is_mds(DEFAULT_CAP).unwrap());
        assert_eq!(rep.dual().k(), 2);
        assert!(!code(&f, &[&[1, 0, 0, 0], &[0, 1, 1, 1]]).is_mds(DEFAULT_CAP).unwrap());
    }

    #[test]
    fn scale_examples() {
        let f = f5();
        let c = code(&f, &[&[1, 2]]);
        assert_eq!(c.scale(&[Fe::ONE, Fe::ONE]).unwrap(), c);
        let two = f.elem(2).unwrap();
        assert_eq!(c.scale(&[two, Fe::ONE]).unwrap(), code(&f, &[&[1, 1]]));
        assert_eq!(c.scale(&[Fe::ZERO, Fe::ONE]), Err(Error::ZeroScale(0)));
    }

    #[test]
    fn scaling_preserves_parameters() {
        let f = gf9();
        let c = code(&f, &[&[1, 0, 3, 7, 2], &[0, 1, 5, 1, 8]]);
        let d = c.min_dist(DEFAULT_CAP).unwrap();
        let a: Vec<Fe> = [4, 1, 7, 2, 8].iter().map(|&v| f.elem(v).unwrap()).collect();
        let fresh = FqCode::new(&f, 5, &c.generator().scale_columns(&a)).unwrap();
        assert_eq!(fresh.k(), c.k());
        assert_eq!(fresh.min_dist(DEFAULT_CAP).unwrap(), d);
    }

    #[test]
    fn dual_dimensions_are_complementary() {
        let f = gf9();
        let c = code(&f, &[&[1, 0, 3, 7, 2], &[0, 1, 5, 1, 8]]);
        for l in 0..2 {
            let d = c.galois_dual(l).unwrap();
            assert_eq!(c.k() + d.k(), c.n());
            assert!(pairs_vanish(&c, &d, l));
        }
    }
}
