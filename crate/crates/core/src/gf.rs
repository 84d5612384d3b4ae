//! Exact arithmetic in GF(p^e).
//!
//! A [`Field`] is a cheap-to-clone handle describing GF(p^e) by its prime,
//! exponent and monic irreducible modulus. Elements are [`Fe`] values holding
//! the canonical integer encoding `sum(coeffs[i] * p^i)` of the polynomial
//! residue, so every element of GF(q) corresponds to exactly one integer in
//! `[0, q)`. All arithmetic goes through the field handle.
//!
//! ```
//! use galois_lcd::gf::Field;
//!
//! let gf9 = Field::new(3, 2, None)?; // modulus x^2 + 1
//! let w = gf9.elem(3)?;             // the class of x
//! assert_eq!(gf9.mul(w, w), gf9.elem(2)?);
//! assert_eq!(gf9.frobenius(w, 1), gf9.elem(6)?); // w^3 = 2w
//! # Ok::<(), galois_lcd::Error>(())
//! ```

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Fields up to this order get full addition/multiplication tables.
const TABLE_LIMIT: u32 = 256;

/// A field element, stored as its canonical integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    /// The canonical integer encoding in `[0, q)`.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

/// GF(p^e) together with its defining polynomial.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.e == other.inner.e
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p(), self.e(), self.modulus())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds GF(p^e). Without an explicit modulus the smallest monic
    /// irreducible polynomial of degree `e` is used, ordered by the integer
    /// encoding of its low coefficients.
    pub fn new(p: u64, e: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::BadModulus("exponent must be at least 1".into()));
        }
        let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge(q.min(u64::MAX as u128) as u64));
        }
        let p = p as u32;
        let q = q as u32;
        let modulus = match modulus {
            Some(m) => {
                validate_modulus(m, p, e)?;
                m.to_vec()
            }
            None => default_modulus(p, e),
        };
        let mut inner = Inner {
            p,
            e,
            q,
            modulus,
            tables: None,
        };
        if e > 1 && q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field { inner: Arc::new(inner) })
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn e(&self) -> u32 {
        self.inner.e
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Modulus coefficients, ascending degree, length `e + 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// `-1`, i.e. the constant polynomial `p - 1`.
    pub fn neg_one(&self) -> Fe {
        Fe(self.inner.p - 1)
    }

    /// Element with the given canonical encoding.
    pub fn elem(&self, value: u32) -> Result<Fe> {
        if value < self.inner.q {
            Ok(Fe(value))
        } else {
            Err(Error::BadElement {
                value: value as u64,
                q: self.inner.q,
            })
        }
    }

    /// Image of an integer under Z -> F_p -> GF(q).
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.inner.p as i64) as u32)
    }

    pub fn contains(&self, x: Fe) -> bool {
        x.0 < self.inner.q
    }

    /// All `q` elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.inner.q).map(Fe)
    }

    /// Residue polynomial coefficients, ascending degree, length `e`.
    pub fn coeffs(&self, x: Fe) -> Vec<u32> {
        let p = self.inner.p;
        let mut v = x.0;
        (0..self.inner.e)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    /// Element from residue coefficients (reduced mod `p`, at most `e` of them).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        if coeffs.len() > self.inner.e as usize {
            return Err(Error::BadElement {
                value: coeffs.len() as u64,
                q: self.inner.q,
            });
        }
        let p = self.inner.p;
        let enc = coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c % p);
        Ok(Fe(enc))
    }

    pub fn add(&self, x: Fe, y: Fe) -> Fe {
        let inner = &*self.inner;
        if inner.e == 1 {
            let s = x.0 + y.0;
            return Fe(if s >= inner.p { s - inner.p } else { s });
        }
        if let Some(t) = &inner.tables {
            return Fe(t.add[(x.0 * inner.q + y.0) as usize]);
        }
        digitwise(inner.p, x.0, y.0, |a, b| (a + b) % inner.p)
    }

    pub fn neg(&self, x: Fe) -> Fe {
        let p = self.inner.p;
        if self.inner.e == 1 {
            return Fe(if x.0 == 0 { 0 } else { p - x.0 });
        }
        digitwise(p, x.0, 0, |a, _| (p - a) % p)
    }

    pub fn sub(&self, x: Fe, y: Fe) -> Fe {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        let inner = &*self.inner;
        if inner.e == 1 {
            return Fe((x.0 as u64 * y.0 as u64 % inner.p as u64) as u32);
        }
        if let Some(t) = &inner.tables {
            return Fe(t.mul[(x.0 * inner.q + y.0) as usize]);
        }
        Fe(poly_mul_mod(inner, x.0, y.0))
    }

    /// Multiplicative inverse.
    pub fn inv(&self, x: Fe) -> Result<Fe> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.inner;
        if let Some(t) = &inner.tables {
            return Ok(Fe(t.inv[x.0 as usize]));
        }
        let a = poly::trim(self.coeffs(x));
        let inv = poly::inv_mod(&a, &inner.modulus, inner.p).ok_or(Error::DivisionByZero)?;
        self.from_coeffs(&inv)
    }

    pub fn div(&self, x: Fe, y: Fe) -> Result<Fe> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: Fe, mut exp: u64) -> Fe {
        let mut acc = Fe::ONE;
        let mut base = x;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// `x^(p^l)`, the l-th iterate of the Frobenius automorphism.
    pub fn frobenius(&self, x: Fe, l: u32) -> Fe {
        let l = l % self.inner.e;
        if l == 0 {
            return x;
        }
        self.pow(x, (self.inner.p as u64).pow(l))
    }

    /// Whether a nonzero `x` lies in the subgroup of β-th powers of GF(q)*.
    pub fn is_power_residue(&self, x: Fe, beta: u64) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.inner.q as u64 - 1;
        check_beta(beta, order)?;
        Ok(self.pow(x, order / beta) == Fe::ONE)
    }

    /// Units that are not β-th powers, in encoding order.
    pub fn nonresidues(&self, beta: u64) -> Result<Vec<Fe>> {
        let order = self.inner.q as u64 - 1;
        check_beta(beta, order)?;
        if beta == 1 {
            return Err(Error::EmptySet);
        }
        let exp = order / beta;
        Ok(self
            .elements()
            .skip(1)
            .filter(|&x| self.pow(x, exp) != Fe::ONE)
            .collect())
    }

    /// The `rank`-th smallest non-β-th-power unit (0-based).
    pub fn nonresidue(&self, beta: u64, rank: usize) -> Result<Fe> {
        let set = self.nonresidues(beta)?;
        set.get(rank).copied().ok_or(Error::BadRank { rank, size: set.len() })
    }

    /// Units other than `1` and `-1`, in encoding order.
    pub fn units_without_signs(&self) -> Vec<Fe> {
        let m1 = self.neg_one();
        self.elements().skip(1).filter(|&x| x != Fe::ONE && x != m1).collect()
    }
}

fn check_beta(beta: u64, order: u64) -> Result<()> {
    if beta == 0 || order % beta != 0 {
        return Err(Error::BadBeta { beta, order });
    }
    Ok(())
}

fn digitwise(p: u32, mut x: u32, mut y: u32, f: impl Fn(u32, u32) -> u32) -> Fe {
    let mut out = 0u32;
    let mut place = 1u32;
    while x > 0 || y > 0 {
        out += f(x % p, y % p) * place;
        x /= p;
        y /= p;
        place = place.wrapping_mul(p);
    }
    Fe(out)
}

fn poly_mul_mod(inner: &Inner, x: u32, y: u32) -> u32 {
    let p = inner.p as u64;
    let e = inner.e as usize;
    let mut a = [0u64; 20];
    let mut b = [0u64; 20];
    let (mut vx, mut vy) = (x, y);
    for i in 0..e {
        a[i] = (vx % inner.p) as u64;
        b[i] = (vy % inner.p) as u64;
        vx /= inner.p;
        vy /= inner.p;
    }
    let mut prod = [0u64; 40];
    for i in 0..e {
        if a[i] == 0 {
            continue;
        }
        for j in 0..e {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    // Monic reduction: x^e = -(m_0 + ... + m_{e-1} x^{e-1}).
    for d in (e..2 * e - 1).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &m) in inner.modulus[..e].iter().enumerate() {
            let t = c * m as u64 % p;
            prod[d - e + i] = (prod[d - e + i] + p - t) % p;
        }
    }
    prod[..e].iter().rev().fold(0u32, |acc, &c| acc * inner.p + c as u32)
}

fn build_tables(inner: &Inner) -> Tables {
    let q = inner.q;
    let p = inner.p;
    let mut add = vec![0u32; (q * q) as usize];
    let mut mul = vec![0u32; (q * q) as usize];
    let mut inv = vec![0u32; q as usize];
    for x in 0..q {
        for y in 0..q {
            let idx = (x * q + y) as usize;
            add[idx] = digitwise(p, x, y, |a, b| (a + b) % p).0;
            let m = poly_mul_mod(inner, x, y);
            mul[idx] = m;
            if m == 1 {
                inv[x as usize] = y;
            }
        }
    }
    Tables { add, mul, inv }
}

fn validate_modulus(m: &[u32], p: u32, e: u32) -> Result<()> {
    if m.len() != e as usize + 1 {
        return Err(Error::BadModulus(format!(
            "expected {} coefficients, found {}",
            e + 1,
            m.len()
        )));
    }
    if let Some(&c) = m.iter().find(|&&c| c >= p) {
        return Err(Error::BadModulus(format!("coefficient {c} not reduced mod {p}")));
    }
    if m[e as usize] != 1 {
        return Err(Error::BadModulus("polynomial is not monic".into()));
    }
    if !poly::is_irreducible(m, p) {
        return Err(Error::BadModulus(format!("{m:?} is reducible over F_{p}")));
    }
    Ok(())
}

fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for enc in 0..count {
        let mut v = enc;
        let mut m: Vec<u32> = (0..e)
            .map(|_| {
                let c = (v % p as u64) as u32;
                v /= p as u64;
                c
            })
            .collect();
        m.push(1);
        if poly::is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> Field {
        Field::new(3, 2, Some(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn make_field_examples() {
        let f5 = Field::new(5, 1, None).unwrap();
        assert_eq!(f5.modulus(), &[0, 1]);
        assert_eq!(f5.q(), 5);
        let f9 = gf9();
        assert_eq!(f9.q(), 9);
        assert_eq!(Field::new(3, 2, None).unwrap(), f9);
        assert_eq!(Field::new(4, 1, None).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn modulus_validation() {
        assert!(matches!(Field::new(5, 2, Some(&[1, 0, 1])), Err(Error::BadModulus(_))));
        assert!(matches!(Field::new(3, 2, Some(&[1, 0, 2])), Err(Error::BadModulus(_))));
        assert!(matches!(Field::new(3, 2, Some(&[1, 1])), Err(Error::BadModulus(_))));
        assert!(matches!(Field::new(2, 30, None), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn default_moduli() {
        assert_eq!(Field::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(Field::new(2, 4, None).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(Field::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn arithmetic_examples() {
        let f = gf9();
        let w = f.elem(3).unwrap();
        assert_eq!(f.mul(w, w), f.elem(2).unwrap());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.add(f5.elem(3).unwrap(), f5.elem(4).unwrap()), f5.elem(2).unwrap());
        for x in f.elements() {
            assert_eq!(f.mul(x, Fe::ONE), x);
        }
    }

    #[test]
    fn inverse_examples() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.inv(f5.elem(2).unwrap()).unwrap(), f5.elem(3).unwrap());
        let f = gf9();
        assert_eq!(f.inv(f.elem(3).unwrap()).unwrap(), f.elem(6).unwrap());
        assert_eq!(f.inv(Fe::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn untabled_field_matches_definition() {
        // GF(3^6) has 729 elements and takes the untabled path.
        let f = Field::new(3, 6, None).unwrap();
        assert!(f.inner.tables.is_none());
        for v in (1..f.q()).step_by(37) {
            let x = f.elem(v).unwrap();
            assert_eq!(f.mul(x, f.inv(x).unwrap()), Fe::ONE);
            assert_eq!(f.frobenius(x, 6), x);
            assert_eq!(f.pow(x, f.q() as u64 - 1), Fe::ONE);
        }
    }

    #[test]
    fn frobenius_examples() {
        let f = gf9();
        let w = f.elem(3).unwrap();
        assert_eq!(f.frobenius(w, 1), f.elem(6).unwrap());
        for x in f.elements() {
            assert_eq!(f.frobenius(x, 2), x);
        }
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.frobenius(f5.elem(3).unwrap(), 1), f5.elem(3).unwrap());
    }

    #[test]
    fn residue_examples() {
        let f = gf9();
        assert!(!f.is_power_residue(f.elem(4).unwrap(), 2).unwrap());
        assert!(f.is_power_residue(f.elem(2).unwrap(), 2).unwrap());
        assert!(f.is_power_residue(Fe::ONE, 4).unwrap());
        assert_eq!(f.is_power_residue(Fe::ZERO, 2), Err(Error::DivisionByZero));
        assert!(matches!(f.is_power_residue(Fe::ONE, 3), Err(Error::BadBeta { .. })));
    }

    #[test]
    fn nonresidue_examples() {
        let f = gf9();
        let expected: Vec<Fe> = [4, 5, 7, 8].iter().map(|&v| f.elem(v).unwrap()).collect();
        assert_eq!(f.nonresidues(2).unwrap(), expected);
        assert_eq!(f.nonresidue(2, 0).unwrap(), f.elem(4).unwrap());
        assert_eq!(f.nonresidue(2, 4), Err(Error::BadRank { rank: 4, size: 4 }));
        let f4 = Field::new(2, 2, None).unwrap();
        assert_eq!(f4.nonresidue(1, 0), Err(Error::EmptySet));
    }

    #[test]
    fn power_subgroup_sizes() {
        for (p, e) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (2, 4),
            (5, 2),
            (2, 5),
            (3, 3),
            (11, 2),
            (2, 7),
        ] {
            let f = Field::new(p, e, None).unwrap();
            let order = f.q() as u64 - 1;
            for beta in (1..=order).filter(|b| order % b == 0) {
                let count = f
                    .elements()
                    .skip(1)
                    .filter(|&x| f.is_power_residue(x, beta).unwrap())
                    .count() as u64;
                assert_eq!(count, order / beta, "GF({}), beta {}", f.q(), beta);
                // independent: image of the beta-power map
                let mut image: Vec<Fe> = f.elements().skip(1).map(|x| f.pow(x, beta)).collect();
                image.sort();
                image.dedup();
                assert_eq!(image.len() as u64, order / beta);
            }
        }
    }

    #[test]
    fn encoding_round_trip() {
        let f = Field::new(5, 2, None).unwrap();
        for x in f.elements() {
            assert_eq!(f.from_coeffs(&f.coeffs(x)).unwrap(), x);
        }
        assert!(f.elem(25).is_err());
    }
}
