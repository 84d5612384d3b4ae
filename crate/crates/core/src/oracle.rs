//! Brute-force ground truth.
//!
//! Nothing here touches nullspaces, Gram determinants or the Gray map of
//! [`Ring`]; every answer comes from walking codewords and evaluating inner
//! products and weights directly, so agreement with the fast paths means
//! something.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fqcode::FqCode;
use crate::gf::{Fe, Field};
use crate::rcode::RCode;
use crate::ring::{check_l, Ring, RingElement};

/// Upper bound on the number of words or pairs an oracle may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_codewords: u64,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_codewords: 1_000_000,
        }
    }
}

impl EnumBudget {
    pub fn new(max_codewords: u64) -> EnumBudget {
        EnumBudget {
            max_codewords: max_codewords.max(1),
        }
    }

    fn admit(&self, needed: u128) -> Result<()> {
        if needed > self.max_codewords as u128 {
            Err(Error::CapExceeded {
                needed,
                cap: self.max_codewords,
            })
        } else {
            Ok(())
        }
    }

    fn allows(&self, needed: u128) -> bool {
        needed <= self.max_codewords as u128
    }
}

fn card(q: u32, k: usize) -> u128 {
    (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

/// All `q^k` codewords, message `m` in little-endian base-`q` counting order
/// mapped to `sum m_i g_i`.
pub fn enum_codewords(code: &FqCode, budget: EnumBudget) -> Result<impl Iterator<Item = Vec<Fe>>> {
    let f = code.field().clone();
    let q = f.q() as u64;
    let k = code.k();
    budget.admit(card(f.q(), k))?;
    let rows: Vec<Vec<Fe>> = code.generator().row_iter().map(<[Fe]>::to_vec).collect();
    let n = code.n();
    Ok((0..q.pow(k as u32)).map(move |mut idx| {
        let mut word = vec![Fe::ZERO; n];
        for row in &rows {
            let m = f.elem((idx % q) as u32).expect("digit");
            idx /= q;
            if m.is_zero() {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(m, g));
            }
        }
        word
    }))
}

/// All codewords of a ring code, as `sum g_i c_i` over every choice of
/// component codewords `c_i`.
pub fn enum_ring_codewords(code: &RCode, budget: EnumBudget) -> Result<Vec<Vec<RingElement>>> {
    budget.admit(card(code.field().q(), code.k()))?;
    let n = code.n();
    let mut words = vec![vec![RingElement::ZERO; n]];
    for (i, c) in code.components().iter().enumerate() {
        let comp: Vec<Vec<Fe>> = enum_codewords(c, budget)?.collect();
        let mut next = Vec::with_capacity(words.len() * comp.len());
        for c in &comp {
            for w in &words {
                let mut x = w.clone();
                for (slot, &v) in x.iter_mut().zip(c) {
                    slot.0[i] = v;
                }
                next.push(x);
            }
        }
        words = next;
    }
    Ok(words)
}

fn hamming(w: &[Fe]) -> usize {
    w.iter().filter(|x| !x.is_zero()).count()
}

/// Lee weight from the `u`-basis formula: each `a1 + a2 u + a3 v + a4 uv`
/// contributes the number of nonzero entries of
/// `(a1, a1+a2, a1+a3, a1+a2+a3+a4)`.
pub fn lee_weight_u(ring: &Ring, x: &[RingElement]) -> usize {
    let f = ring.field();
    x.iter()
        .map(|&r| {
            let [a1, a2, a3, a4] = ring.to_u_basis(r);
            let parts = [a1, f.add(a1, a2), f.add(a1, a3), f.add(f.add(a1, a2), f.add(a3, a4))];
            parts.iter().filter(|v| !v.is_zero()).count()
        })
        .sum()
}

/// Exhaustive minimum Hamming distance.
pub fn bf_min_dist(code: &FqCode, budget: EnumBudget) -> Result<usize> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    Ok(enum_codewords(code, budget)?
        .map(|w| hamming(&w))
        .filter(|&w| w > 0)
        .min()
        .expect("a nonzero codeword exists"))
}

/// Exhaustive minimum Lee distance.
pub fn bf_lee_distance(code: &RCode, budget: EnumBudget) -> Result<usize> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let ring = Ring::new(code.field());
    Ok(enum_ring_codewords(code, budget)?
        .iter()
        .map(|w| lee_weight_u(&ring, w))
        .filter(|&w| w > 0)
        .min()
        .expect("a nonzero codeword exists"))
}

fn field_inner(f: &Field, s: &[Fe], t: &[Fe], l: u32) -> Fe {
    s.iter()
        .zip(t)
        .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, f.frobenius(b, l))))
}

fn rows(code: &FqCode) -> Vec<Vec<Fe>> {
    code.generator().row_iter().map(<[Fe]>::to_vec).collect()
}

/// Whether `d` is the l-Galois dual of `c`: every pair pairs to zero and
/// `|C| |D| = q^n`.
///
/// All pairs are visited when `|C| |D|` fits the budget; otherwise codewords
/// of `C` are paired with generators of `D`, or generators with generators,
/// which is equivalent since the form is additive in both arguments and
/// semilinear in the second.
pub fn bf_dual_check(c: &FqCode, d: &FqCode, l: u32, budget: EnumBudget) -> Result<bool> {
    let f = c.field();
    if f != d.field() {
        return Err(Error::SpecMismatch);
    }
    crate::ring::check_len(c.n(), d.n())?;
    check_l(l, f.e())?;
    if c.k() + d.k() != c.n() {
        return Ok(false);
    }
    let q = f.q();
    let size_c = card(q, c.k());
    let lefts: Vec<Vec<Fe>> = if budget.allows(size_c.saturating_mul(d.k().max(1) as u128)) {
        enum_codewords(c, budget)?.collect()
    } else {
        rows(c)
    };
    let rights: Vec<Vec<Fe>> = if budget.allows((lefts.len() as u128).saturating_mul(card(q, d.k()))) {
        enum_codewords(d, budget)?.collect()
    } else {
        rows(d)
    };
    Ok(lefts
        .iter()
        .all(|t| rights.iter().all(|s| field_inner(f, t, s, l).is_zero())))
}

/// Ring analogue of [`bf_dual_check`]: pairs are checked with the
/// `R`-valued Galois form and `|C| |D|` must equal `q^(4n)`.
pub fn bf_ring_dual_check(c: &RCode, d: &RCode, l: u32, budget: EnumBudget) -> Result<bool> {
    let f = c.field();
    if f != d.field() {
        return Err(Error::SpecMismatch);
    }
    crate::ring::check_len(c.n(), d.n())?;
    check_l(l, f.e())?;
    if c.k() + d.k() != 4 * c.n() {
        return Ok(false);
    }
    let ring = Ring::new(f);
    let q = f.q();
    let size_c = card(q, c.k());
    let lefts = if budget.allows(size_c.saturating_mul(d.k().max(1) as u128)) {
        enum_ring_codewords(c, budget)?
    } else {
        c.generators()
    };
    let rights = if budget.allows((lefts.len() as u128).saturating_mul(card(q, d.k()))) {
        enum_ring_codewords(d, budget)?
    } else {
        d.generators()
    };
    for t in &lefts {
        for s in &rights {
            if !ring.galois_inner(t, s, l)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn exact_log(count: u128, q: u32) -> Result<usize> {
    let mut k = 0;
    let mut p: u128 = 1;
    while p < count {
        p *= q as u128;
        k += 1;
    }
    if p == count {
        Ok(k)
    } else {
        Err(Error::NonIntegralLog { count, q })
    }
}

/// `log_q |C ∩ C^{⊥l}|`, counting codewords `x` with `[g, x]_l = 0` for
/// every generator `g`.
pub fn bf_hull(code: &FqCode, l: u32, budget: EnumBudget) -> Result<usize> {
    let f = code.field();
    check_l(l, f.e())?;
    let gens = rows(code);
    let count = enum_codewords(code, budget)?
        .filter(|x| gens.iter().all(|g| field_inner(f, g, x, l).is_zero()))
        .count();
    exact_log(count as u128, f.q())
}

/// `log_q |C ∩ C^{⊥l}|` for a ring code, as an F_q-dimension.
pub fn bf_ring_hull(code: &RCode, l: u32, budget: EnumBudget) -> Result<usize> {
    let f = code.field();
    check_l(l, f.e())?;
    let ring = Ring::new(f);
    let gens = code.generators();
    let mut count: u128 = 0;
    for x in enum_ring_codewords(code, budget)? {
        let mut inside = true;
        for g in &gens {
            if !ring.galois_inner(g, &x, l)?.is_zero() {
                inside = false;
                break;
            }
        }
        count += inside as u128;
    }
    exact_log(count, f.q())
}

/// Whether Gray-mapping every ring codeword gives exactly the codewords of
/// the Gray image code.
pub fn gray_consistent(code: &RCode, budget: EnumBudget) -> Result<bool> {
    let ring = Ring::new(code.field());
    let mapped: BTreeSet<Vec<u32>> = enum_ring_codewords(code, budget)?
        .iter()
        .map(|w| ring.gray(w).iter().map(|x| x.value()).collect())
        .collect();
    let image: BTreeSet<Vec<u32>> = enum_codewords(&code.gray(), budget)?
        .map(|w| w.iter().map(|x| x.value()).collect())
        .collect();
    Ok(mapped == image)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    fn code(f: &Field, rows: &[&[u32]]) -> FqCode {
        let n = rows[0].len();
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        FqCode::from_values(f, n, &rows).unwrap()
    }

    fn same4(c: &FqCode) -> RCode {
        RCode::from_components(std::array::from_fn(|_| c.clone())).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let f = f5();
        let words: Vec<_> = enum_codewords(&code(&f, &[&[1, 1]]), EnumBudget::default())
            .unwrap()
            .collect();
        assert_eq!(words.len(), 5);
        assert!(words.iter().all(|w| w[0] == w[1]));
        let zero: Vec<_> = enum_codewords(&FqCode::zero(&f, 3), EnumBudget::default())
            .unwrap()
            .collect();
        assert_eq!(zero, vec![vec![Fe::ZERO; 3]]);
        let scalars = enum_ring_codewords(&same4(&code(&f, &[&[1]])), EnumBudget::default()).unwrap();
        assert_eq!(scalars.len(), 625);
        let distinct: BTreeSet<_> = scalars.iter().map(|w| w[0]).collect();
        assert_eq!(distinct.len(), 625);
        assert_eq!(
            enum_codewords(&FqCode::full(&f, 9), EnumBudget::new(1000)).err(),
            Some(Error::CapExceeded {
                needed: 1_953_125,
                cap: 1000
            })
        );
    }

    #[test]
    fn distance_examples() {
        let f = f5();
        let rep = code(&f, &[&[1, 1, 1]]);
        assert_eq!(bf_min_dist(&rep, EnumBudget::default()).unwrap(), 3);
        assert_eq!(bf_lee_distance(&same4(&rep), EnumBudget::default()).unwrap(), 3);
        let c = code(&f, &[&[1, 0, 2, 3], &[0, 1, 4, 4]]);
        assert_eq!(
            bf_min_dist(&c, EnumBudget::default()).unwrap(),
            c.min_dist(crate::fqcode::DEFAULT_CAP).unwrap()
        );
        assert_eq!(
            bf_min_dist(&FqCode::zero(&f, 2), EnumBudget::default()),
            Err(Error::ZeroCode)
        );
    }

    #[test]
    fn dual_check_examples() {
        let f = f5();
        let c = code(&f, &[&[1, 2]]);
        assert!(bf_dual_check(&c, &c.galois_dual(0).unwrap(), 0, EnumBudget::default()).unwrap());
        let d = code(&f, &[&[1, 1, 0]]);
        assert!(!bf_dual_check(&d, &d, 0, EnumBudget::default()).unwrap());
        let g9 = Field::new(3, 2, None).unwrap();
        let rc = same4(&code(&g9, &[&[1, 4, 0], &[0, 1, 2]]));
        for l in 0..2 {
            let dual = rc.galois_dual(l).unwrap();
            assert!(bf_ring_dual_check(&rc, &dual, l, EnumBudget::default()).unwrap());
            assert!(bf_ring_dual_check(&rc, &dual, l, EnumBudget::new(10)).unwrap());
        }
    }

    #[test]
    fn hull_examples() {
        let f = f5();
        let b = EnumBudget::default();
        assert_eq!(bf_hull(&code(&f, &[&[1, 2]]), 0, b).unwrap(), 1);
        assert_eq!(bf_hull(&code(&f, &[&[1, 1]]), 0, b).unwrap(), 0);
        assert_eq!(bf_hull(&FqCode::zero(&f, 4), 0, b).unwrap(), 0);
        assert_eq!(bf_ring_hull(&same4(&code(&f, &[&[1, 2]])), 0, b).unwrap(), 4);
        assert_eq!(exact_log(24, 5), Err(Error::NonIntegralLog { count: 24, q: 5 }));
    }

    #[test]
    fn gray_enumeration_matches_image() {
        let f = Field::new(2, 2, None).unwrap();
        let rc = RCode::from_components([
            code(&f, &[&[1, 2]]),
            FqCode::zero(&f, 2),
            code(&f, &[&[1, 0], &[0, 1]]),
            code(&f, &[&[0, 3]]),
        ])
        .unwrap();
        assert!(gray_consistent(&rc, EnumBudget::default()).unwrap());
    }

    #[test]
    fn lee_weight_formula_matches_gray_weight() {
        let f = Field::new(3, 2, None).unwrap();
        let ring = Ring::new(&f);
        for x in ring.elements() {
            assert_eq!(lee_weight_u(&ring, &[x]), ring.lee_weight(&[x]));
        }
    }
}
