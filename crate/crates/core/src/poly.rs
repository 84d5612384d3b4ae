//! Dense polynomials over the prime field F_p, coefficients in ascending degree.
//!
//! Only what field construction needs: irreducibility testing and inversion
//! modulo the defining polynomial. Every function returns trimmed output (no
//! trailing zero coefficients; the zero polynomial is the empty vector).

pub(crate) type Poly = Vec<u32>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime and a != 0, so a^(p-2) is the inverse.
    pow_mod_p(a, p as u64 - 2, p)
}

pub(crate) fn pow_mod_p(base: u32, mut exp: u64, p: u32) -> u32 {
    let p64 = p as u64;
    let mut acc = 1u64 % p64;
    let mut b = base as u64 % p64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p64;
        }
        b = b * b % p64;
        exp >>= 1;
    }
    acc as u32
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Quotient and remainder of `a` by a nonzero `b`.
pub(crate) fn div_rem(a: &[u32], b: &[u32], p: u32) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = inv_mod_p(b[db], p) as u64;
    let p64 = p as u64;
    let mut rem: Vec<u64> = trim(a.to_vec()).into_iter().map(u64::from).collect();
    if rem.len() <= db {
        return (Vec::new(), trim(rem.into_iter().map(|c| c as u32).collect()));
    }
    let mut quot = vec![0u64; rem.len() - db];
    for shift in (0..rem.len() - db).rev() {
        let coef = rem[shift + db] * lead_inv % p64;
        if coef == 0 {
            continue;
        }
        quot[shift] = coef;
        for (j, &bj) in b[..=db].iter().enumerate() {
            let sub = coef * bj as u64 % p64;
            rem[shift + j] = (rem[shift + j] + p64 - sub) % p64;
        }
    }
    rem.truncate(db);
    (
        trim(quot.into_iter().map(|c| c as u32).collect()),
        trim(rem.into_iter().map(|c| c as u32).collect()),
    )
}

pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> Poly {
    div_rem(a, b, p).1
}

/// Monic greatest common divisor.
pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(x, p)
}

fn make_monic(a: Poly, p: u32) -> Poly {
    match a.last() {
        None => a,
        Some(&lead) => {
            let inv = inv_mod_p(lead, p) as u64;
            a.into_iter().map(|c| (c as u64 * inv % p as u64) as u32).collect()
        }
    }
}

/// `base^exp mod modulus`.
pub(crate) fn pow_mod(base: &[u32], mut exp: u64, modulus: &[u32], p: u32) -> Poly {
    let mut acc: Poly = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo an irreducible `modulus` by the extended Euclidean
/// algorithm. Returns `None` when `a` is zero modulo `modulus`.
pub(crate) fn inv_mod(a: &[u32], modulus: &[u32], p: u32) -> Option<Poly> {
    let mut r0 = trim(modulus.to_vec());
    let mut r1 = rem(a, modulus, p);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![1];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    if r0.len() != 1 {
        return None;
    }
    let c = inv_mod_p(r0[0], p) as u64;
    let inv = s0
        .into_iter()
        .map(|x| (x as u64 * c % p as u64) as u32)
        .collect::<Vec<_>>();
    Some(rem(&inv, modulus, p))
}

fn has_root(f: &[u32], p: u32) -> bool {
    let p64 = p as u64;
    (0..p).any(|x| {
        let mut acc = 0u64;
        for &c in f.iter().rev() {
            acc = (acc * x as u64 + c as u64) % p64;
        }
        acc == 0
    })
}

/// Irreducibility of a monic polynomial of degree `e` over F_p.
///
/// Root-free suffices up to degree 3. From degree 4 on, a polynomial is
/// irreducible iff it shares no factor with `x^(p^i) - x` for `i <= e/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let e = match degree(f) {
        Some(d) => d,
        None => return false,
    };
    if e == 0 {
        return false;
    }
    if e == 1 {
        return true;
    }
    if has_root(f, p) {
        return false;
    }
    if e <= 3 {
        return true;
    }
    let x: Poly = vec![0, 1];
    let mut frob = x.clone();
    for _ in 1..=e / 2 {
        frob = pow_mod(&frob, p as u64, f, p);
        let g = gcd(f, &sub(&frob, &x, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}
