//! The ring `R = F_q + uF_q + vF_q + uvF_q` with `u^2 = u`, `v^2 = v`, `uv = vu`.
//!
//! The orthogonal idempotents
//!
//! ```text
//! g1 = 1 - u - v + uv,   g2 = uv,   g3 = u - uv,   g4 = v - uv
//! ```
//!
//! sum to 1 and split `R` into four copies of `F_q`. Elements are stored in
//! these coordinates, so ring arithmetic is coordinatewise field arithmetic.
//! The `u`-basis `a1 + a2 u + a3 v + a4 uv` only appears at the edges (file
//! input and output).
//!
//! The Gray map sends an element to its four coordinates `(r1, r2, r3, r4)`.
//! Written in the `u`-basis the same coordinates are
//! `(a1, a1+a2+a3+a4, a1+a2, a1+a3)`; the classic presentation
//! `(a1, a1+a2, a1+a3, a1+a2+a3+a4)` is this map followed by the fixed
//! coordinate permutation `(r1, r3, r4, r2)`, see [`Ring::gray_u_order`].
//! Vectors are laid out coordinate-major: entry `j` occupies positions
//! `4j..4j+4` of the image.

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Element of `R` in idempotent coordinates `(r1, r2, r3, r4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElement(pub [Fe; 4]);

impl RingElement {
    pub const ZERO: RingElement = RingElement([Fe::ZERO; 4]);
    pub const ONE: RingElement = RingElement([Fe::ONE; 4]);

    /// The idempotent `g_i`, `i` in `0..4`.
    pub fn idempotent(i: usize) -> RingElement {
        let mut g = [Fe::ZERO; 4];
        g[i] = Fe::ONE;
        RingElement(g)
    }

    /// `c * (g1 + g2 + g3 + g4)`, the embedding of a field scalar.
    pub fn scalar(c: Fe) -> RingElement {
        RingElement([c; 4])
    }

    pub fn coords(&self) -> [Fe; 4] {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// Units are exactly the elements with no zero coordinate.
    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|x| !x.is_zero())
    }
}

/// Direction for [`Ring::convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// `a1 + a2 u + a3 v + a4 uv`
    U,
    /// `r1 g1 + r2 g2 + r3 g3 + r4 g4`
    Gamma,
}

/// Arithmetic context for `R` over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    field: Field,
}

impl Ring {
    pub fn new(field: &Field) -> Ring {
        Ring { field: field.clone() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Builds an element from four encodings given in `basis`.
    pub fn elem(&self, basis: Basis, values: [u32; 4]) -> Result<RingElement> {
        let f = &self.field;
        let quad = [
            f.elem(values[0])?,
            f.elem(values[1])?,
            f.elem(values[2])?,
            f.elem(values[3])?,
        ];
        Ok(match basis {
            Basis::Gamma => RingElement(quad),
            Basis::U => self.from_u_basis(quad),
        })
    }

    /// `(a1, a2, a3, a4)` of `a1 + a2 u + a3 v + a4 uv` to idempotent coordinates.
    pub fn from_u_basis(&self, a: [Fe; 4]) -> RingElement {
        let f = &self.field;
        let r1 = a[0];
        let r3 = f.add(a[0], a[1]);
        let r4 = f.add(a[0], a[2]);
        let r2 = f.add(f.add(r3, a[2]), a[3]);
        RingElement([r1, r2, r3, r4])
    }

    /// Inverse of [`Ring::from_u_basis`].
    pub fn to_u_basis(&self, x: RingElement) -> [Fe; 4] {
        let f = &self.field;
        let [r1, r2, r3, r4] = x.0;
        [r1, f.sub(r3, r1), f.sub(r4, r1), f.sub(f.add(r1, r2), f.add(r3, r4))]
    }

    /// Converts a coordinate quadruple between the two bases.
    pub fn convert(&self, from: Basis, quad: [Fe; 4]) -> [Fe; 4] {
        match from {
            Basis::U => self.from_u_basis(quad).0,
            Basis::Gamma => self.to_u_basis(RingElement(quad)),
        }
    }

    fn zip(&self, x: RingElement, y: RingElement, op: impl Fn(Fe, Fe) -> Fe) -> RingElement {
        RingElement(std::array::from_fn(|i| op(x.0[i], y.0[i])))
    }

    pub fn add(&self, x: RingElement, y: RingElement) -> RingElement {
        self.zip(x, y, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, x: RingElement, y: RingElement) -> RingElement {
        self.zip(x, y, |a, b| self.field.sub(a, b))
    }

    pub fn mul(&self, x: RingElement, y: RingElement) -> RingElement {
        self.zip(x, y, |a, b| self.field.mul(a, b))
    }

    pub fn neg(&self, x: RingElement) -> RingElement {
        RingElement(x.0.map(|a| self.field.neg(a)))
    }

    /// Inverse of a unit; `NotAUnit(0)` otherwise.
    pub fn inv(&self, x: RingElement) -> Result<RingElement> {
        if !x.is_unit() {
            return Err(Error::NotAUnit(0));
        }
        let mut out = [Fe::ZERO; 4];
        for (o, &a) in out.iter_mut().zip(&x.0) {
            *o = self.field.inv(a)?;
        }
        Ok(RingElement(out))
    }

    /// `F^l`, the Frobenius map applied to every coordinate `l` times.
    pub fn frobenius(&self, x: RingElement, l: u32) -> RingElement {
        RingElement(x.0.map(|a| self.field.frobenius(a, l)))
    }

    pub fn contains(&self, x: RingElement) -> bool {
        x.0.iter().all(|&a| self.field.contains(a))
    }

    /// Gray image in `F_q^{4n}`, coordinate-major.
    pub fn gray(&self, x: &[RingElement]) -> Vec<Fe> {
        x.iter().flat_map(|r| r.0).collect()
    }

    /// Inverse Gray map; `image.len()` must be a multiple of 4.
    pub fn gray_inverse(&self, image: &[Fe]) -> Result<Vec<RingElement>> {
        if image.len() % 4 != 0 {
            return Err(Error::Dimension(format!(
                "Gray image length {} is not a multiple of 4",
                image.len()
            )));
        }
        Ok(image
            .chunks_exact(4)
            .map(|c| RingElement([c[0], c[1], c[2], c[3]]))
            .collect())
    }

    /// The `u`-basis presentation `(a1, a1+a2, a1+a3, a1+a2+a3+a4)` of the
    /// Gray map for a single element.
    pub fn gray_u_order(&self, x: RingElement) -> [Fe; 4] {
        let [r1, r2, r3, r4] = x.0;
        [r1, r3, r4, r2]
    }

    /// Lee weight: Hamming weight of the Gray image.
    pub fn lee_weight(&self, x: &[RingElement]) -> usize {
        x.iter().map(|r| r.0.iter().filter(|a| !a.is_zero()).count()).sum()
    }

    pub fn lee_distance(&self, x: &[RingElement], y: &[RingElement]) -> Result<usize> {
        check_len(x.len(), y.len())?;
        Ok(x.iter().zip(y).map(|(&a, &b)| self.lee_weight(&[self.sub(a, b)])).sum())
    }

    /// `[s, t]_l = sum_i s_i F^l(t_i)`.
    pub fn galois_inner(&self, s: &[RingElement], t: &[RingElement], l: u32) -> Result<RingElement> {
        check_len(s.len(), t.len())?;
        check_l(l, self.field.e())?;
        Ok(s.iter().zip(t).fold(RingElement::ZERO, |acc, (&a, &b)| {
            self.add(acc, self.mul(a, self.frobenius(b, l)))
        }))
    }

    /// Every element of `R`, in lexicographic order of coordinate encodings.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        let q = self.field.q() as u64;
        (0..q.pow(4)).map(move |mut v| {
            let mut g = [Fe::ZERO; 4];
            for slot in g.iter_mut() {
                *slot = self.field.elem((v % q) as u32).expect("in range");
                v /= q;
            }
            RingElement(g)
        })
    }
}

pub(crate) fn check_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

pub(crate) fn check_l(l: u32, e: u32) -> Result<()> {
    if l >= e {
        return Err(Error::BadL { l, e });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(p: u64, e: u32) -> Ring {
        Ring::new(&Field::new(p, e, None).unwrap())
    }

    fn fe(r: &Ring, v: u32) -> Fe {
        r.field().elem(v).unwrap()
    }

    fn u_elem(r: &Ring, a: [u32; 4]) -> RingElement {
        r.elem(Basis::U, a).unwrap()
    }

    #[test]
    fn basis_convert_examples() {
        let r = ring(5, 1);
        assert_eq!(u_elem(&r, [1, 0, 0, 0]), RingElement::ONE);
        let u = u_elem(&r, [0, 1, 0, 0]);
        assert_eq!(u, r.elem(Basis::Gamma, [0, 1, 1, 0]).unwrap());
        // idempotent definitions
        assert_eq!(u_elem(&r, [1, 4, 4, 1]), RingElement::idempotent(0));
        assert_eq!(u_elem(&r, [0, 0, 0, 1]), RingElement::idempotent(1));
        assert_eq!(u_elem(&r, [0, 1, 0, 4]), RingElement::idempotent(2));
        assert_eq!(u_elem(&r, [0, 0, 1, 4]), RingElement::idempotent(3));
    }

    #[test]
    fn basis_convert_round_trips_exhaustively() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let r = ring(p, e);
            for x in r.elements() {
                let a = r.to_u_basis(x);
                assert_eq!(r.from_u_basis(a), x);
                assert_eq!(r.convert(Basis::Gamma, r.convert(Basis::U, a)), a);
            }
        }
    }

    #[test]
    fn idempotent_algebra() {
        let r = ring(5, 1);
        let g = RingElement::idempotent;
        assert_eq!(r.mul(g(1), g(2)), RingElement::ZERO);
        assert_eq!(r.mul(g(1), g(1)), g(1));
        let sum = (0..4).fold(RingElement::ZERO, |acc, i| r.add(acc, g(i)));
        assert_eq!(sum, RingElement::ONE);
    }

    #[test]
    fn u_basis_multiplication_rules() {
        // u^2 = u, v^2 = v, uv = vu, checked through the idempotent coordinates
        let r = ring(7, 1);
        let u = u_elem(&r, [0, 1, 0, 0]);
        let v = u_elem(&r, [0, 0, 1, 0]);
        let uv = u_elem(&r, [0, 0, 0, 1]);
        assert_eq!(r.mul(u, u), u);
        assert_eq!(r.mul(v, v), v);
        assert_eq!(r.mul(u, v), uv);
    }

    #[test]
    fn square_of_one_plus_u() {
        let r = ring(5, 1);
        let x = u_elem(&r, [1, 1, 0, 0]);
        assert_eq!(x, r.elem(Basis::Gamma, [1, 2, 2, 1]).unwrap());
        let sq = r.mul(x, x);
        assert_eq!(sq, r.elem(Basis::Gamma, [1, 4, 4, 1]).unwrap());
        assert_eq!(r.to_u_basis(sq).map(Fe::value), [1, 3, 0, 0]);
    }

    #[test]
    fn inverse_examples() {
        let r = ring(5, 1);
        assert_eq!(r.inv(RingElement::ONE).unwrap(), RingElement::ONE);
        let x = r.elem(Basis::Gamma, [1, 2, 1, 1]).unwrap();
        assert_eq!(r.inv(x).unwrap(), r.elem(Basis::Gamma, [1, 3, 1, 1]).unwrap());
        assert_eq!(r.inv(RingElement::idempotent(1)), Err(Error::NotAUnit(0)));
    }

    #[test]
    fn frobenius_examples() {
        let r = ring(3, 2);
        let w = fe(&r, 3);
        let g1w = r.mul(RingElement::idempotent(0), RingElement::scalar(w));
        assert_eq!(
            r.frobenius(g1w, 1),
            RingElement([fe(&r, 6), Fe::ZERO, Fe::ZERO, Fe::ZERO])
        );
        let g2w = r.mul(RingElement::idempotent(1), RingElement::scalar(w));
        let lhs = r.frobenius(r.mul(g2w, g2w), 1);
        let rhs = r.mul(r.frobenius(g2w, 1), r.frobenius(g2w, 1));
        assert_eq!(lhs, rhs);
        // w^6 = 2
        assert_eq!(lhs, r.mul(RingElement::idempotent(1), RingElement::scalar(fe(&r, 2))));
        for x in r.elements().step_by(97) {
            assert_eq!(r.frobenius(x, 2), x);
        }
    }

    #[test]
    fn frobenius_matches_u_basis_definition() {
        // F(a1 + a2 u + a3 v + a4 uv) = a1^p + a2^p u + a3^p v + a4^p uv
        let r = ring(3, 2);
        let f = r.field().clone();
        for x in r.elements().step_by(13) {
            let a = r.to_u_basis(x);
            let via_u = r.from_u_basis(a.map(|c| f.pow(c, 3)));
            assert_eq!(r.frobenius(x, 1), via_u);
        }
    }

    #[test]
    fn gray_examples() {
        let r = ring(5, 1);
        let u = u_elem(&r, [0, 1, 0, 0]);
        assert_eq!(r.gray(&[u]).iter().map(|x| x.value()).collect::<Vec<_>>(), [0, 1, 1, 0]);
        assert_eq!(r.gray(&[RingElement::ONE]), vec![Fe::ONE; 4]);
        let img = r.gray(&[RingElement::idempotent(1), RingElement::ZERO]);
        assert_eq!(
            img.iter().map(|x| x.value()).collect::<Vec<_>>(),
            [0, 1, 0, 0, 0, 0, 0, 0]
        );
    }

    #[test]
    fn lee_weight_examples() {
        let r = ring(5, 1);
        assert_eq!(r.lee_weight(&[u_elem(&r, [0, 1, 0, 0])]), 2);
        assert_eq!(r.lee_weight(&[u_elem(&r, [1, 1, 0, 0])]), 4);
        assert_eq!(r.lee_weight(&[RingElement::ZERO]), 0);
    }

    #[test]
    fn gray_u_presentation_is_the_stated_permutation() {
        // (a1, a1+a2, a1+a3, a1+a2+a3+a4) computed straight from u-coordinates
        for (p, e) in [(2, 2), (3, 1), (5, 1)] {
            let r = ring(p, e);
            let f = r.field().clone();
            for x in r.elements() {
                let [a1, a2, a3, a4] = r.to_u_basis(x);
                let classic = [a1, f.add(a1, a2), f.add(a1, a3), f.add(f.add(a1, a2), f.add(a3, a4))];
                assert_eq!(r.gray_u_order(x), classic);
            }
        }
    }

    #[test]
    fn galois_inner_examples() {
        let r = ring(3, 2);
        let g = RingElement::idempotent;
        assert_eq!(r.galois_inner(&[g(0)], &[g(0)], 0).unwrap(), g(0));
        let w = RingElement::scalar(fe(&r, 3));
        let t = r.mul(g(0), w);
        let expect = r.mul(g(0), RingElement::scalar(fe(&r, 6)));
        assert_eq!(r.galois_inner(&[g(0)], &[t], 1).unwrap(), expect);
        for l in 0..2 {
            assert_eq!(r.galois_inner(&[g(1)], &[g(2)], l).unwrap(), RingElement::ZERO);
        }
        assert_eq!(
            r.galois_inner(&[g(0)], &[], 0),
            Err(Error::LengthMismatch { left: 1, right: 0 })
        );
        assert_eq!(r.galois_inner(&[g(0)], &[g(0)], 2), Err(Error::BadL { l: 2, e: 2 }));
    }

    fn ring_vec(q: u32, n: usize) -> impl Strategy<Value = Vec<[u32; 4]>> {
        proptest::collection::vec(proptest::array::uniform4(0..q), n)
    }

    proptest! {
        #[test]
        fn gray_is_linear_isometry(x in ring_vec(9, 5), y in ring_vec(9, 5), c in 0u32..9) {
            let r = ring(3, 2);
            let f = r.field().clone();
            let to = |v: &Vec<[u32; 4]>| v.iter().map(|a| r.elem(Basis::Gamma, *a).unwrap()).collect::<Vec<_>>();
            let (x, y) = (to(&x), to(&y));
            let c = fe(&r, c);
            let cx_y: Vec<_> = x.iter().zip(&y).map(|(&a, &b)| r.add(r.mul(RingElement::scalar(c), a), b)).collect();
            let lhs = r.gray(&cx_y);
            let rhs: Vec<_> = r.gray(&x).iter().zip(r.gray(&y)).map(|(&a, b)| f.add(f.mul(c, a), b)).collect();
            prop_assert_eq!(lhs, rhs);
            let hamming = r.gray(&x).iter().zip(r.gray(&y)).filter(|(a, b)| a != &b).count();
            prop_assert_eq!(r.lee_distance(&x, &y).unwrap(), hamming);
            prop_assert_eq!(r.gray_inverse(&r.gray(&x)).unwrap(), x);
        }

        #[test]
        fn frobenius_is_ring_automorphism(a in proptest::array::uniform4(0u32..9), b in proptest::array::uniform4(0u32..9), l in 0u32..4) {
            let r = ring(3, 2);
            let x = r.elem(Basis::Gamma, a).unwrap();
            let y = r.elem(Basis::Gamma, b).unwrap();
            prop_assert_eq!(r.frobenius(r.mul(x, y), l), r.mul(r.frobenius(x, l), r.frobenius(y, l)));
            prop_assert_eq!(r.frobenius(r.add(x, y), l), r.add(r.frobenius(x, l), r.frobenius(y, l)));
        }

        #[test]
        fn inner_product_splits_by_coordinate(s in ring_vec(9, 4), t in ring_vec(9, 4), l in 0u32..2) {
            let r = ring(3, 2);
            let f = r.field().clone();
            let to = |v: &Vec<[u32; 4]>| v.iter().map(|a| r.elem(Basis::Gamma, *a).unwrap()).collect::<Vec<_>>();
            let (s, t) = (to(&s), to(&t));
            let ip = r.galois_inner(&s, &t, l).unwrap();
            for i in 0..4 {
                let field_ip = s.iter().zip(&t).fold(Fe::ZERO, |acc, (a, b)| {
                    f.add(acc, f.mul(a.0[i], f.pow(b.0[i], 3u64.pow(l))))
                });
                prop_assert_eq!(ip.0[i], field_ip);
            }
            if l == 0 {
                prop_assert_eq!(ip, r.galois_inner(&t, &s, 0).unwrap());
            }
        }
    }
}
