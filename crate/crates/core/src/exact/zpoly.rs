//! Integer polynomial helpers: content, pseudo-division, subresultant
//! resultants and a multi-modular gcd. These are the fast paths behind the
//! ℚ-specific routines; everything here is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, QPoly, Rational};
use crate::factor::modp::{crt_step, large_primes, symmetric, Zp};

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(v: &mut ZPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn degree(f: &[BigInt]) -> Option<usize> {
    f.len().checked_sub(1)
}

pub(crate) fn content(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(f: &[BigInt]) -> ZPoly {
    if f.is_empty() {
        return Vec::new();
    }
    let mut c = content(f);
    if f.last().unwrap().is_negative() {
        c = -c;
    }
    f.iter().map(|x| x / &c).collect()
}

/// Splits `f` as `F / den` with `F` integral and `den > 0` minimal.
pub(crate) fn from_qpoly(f: &QPoly) -> (ZPoly, BigInt) {
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let v = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (v, den)
}

#[cfg(test)]
pub(crate) fn to_qpoly(f: &[BigInt]) -> QPoly {
    Poly::new(f.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// Monic rational polynomial from an integer one.
pub(crate) fn to_monic_qpoly(f: &[BigInt]) -> QPoly {
    let lc = f.last().expect("nonzero").clone();
    Poly::new(f.iter().map(|c| Rational::new(c.clone(), lc.clone())).collect())
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn derivative(f: &[BigInt]) -> ZPoly {
    let mut v: ZPoly = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut v);
    v
}

pub(crate) fn eval(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// `lc(b)^{deg a - deg b + 1} · a  mod  b`.
pub(crate) fn prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return r;
    }
    let lc = b[db].clone();
    let mut e = r.len() - db;
    while r.len() > db {
        let top = r.len() - 1;
        let c = r[top].clone();
        for x in r.iter_mut() {
            *x *= &lc;
        }
        for (j, bj) in b.iter().enumerate() {
            r[top - db + j] -= &c * bj;
        }
        debug_assert!(r[top].is_zero());
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let m = num_traits::pow(lc, e);
        for x in r.iter_mut() {
            *x *= &m;
        }
    }
    r
}

/// `Some(a / b)` when `b` divides `a` in ℤ[X].
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() <= db {
        return None;
    }
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (db..a.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let (c, rem) = r[i].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i - db + j] -= &c * bj;
        }
        q[i - db] = c;
    }
    if r.iter().take(db).any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// Resultant of two nonzero integer polynomials by the subresultant PRS.
pub(crate) fn resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let (mut da, mut db) = match (degree(a), degree(b)) {
        (Some(x), Some(y)) => (x, y),
        _ => return BigInt::zero(),
    };
    if da == 0 {
        return num_traits::pow(a[0].clone(), db);
    }
    if db == 0 {
        return num_traits::pow(b[0].clone(), da);
    }
    let ca = content(a);
    let cb = content(b);
    let mut a: ZPoly = a.iter().map(|x| x / &ca).collect();
    let mut b: ZPoly = b.iter().map(|x| x / &cb).collect();
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
    let mut s = 1i32;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            s = -1;
        }
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = prem(&a, &b);
        a = b;
        da = db;
        if r.is_empty() {
            return BigInt::zero();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = r.iter().map(|x| x / &divisor).collect();
        db = b.len() - 1;
        g = a[da].clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if db == 0 {
            let lb = b[0].clone();
            let hh = num_traits::pow(lb, da) / num_traits::pow(h, da - 1);
            let out = hh * t;
            return if s < 0 { -out } else { out };
        }
    }
}

/// Resultant over ℚ by clearing denominators.
pub(crate) fn resultant_q(f: &QPoly, g: &QPoly) -> Rational {
    let (fz, df) = from_qpoly(f);
    let (gz, dg) = from_qpoly(g);
    let m = f.deg0();
    let n = g.deg0();
    let r = resultant(&fz, &gz);
    let den = num_traits::pow(df, n) * num_traits::pow(dg, m);
    Rational::new(r, den)
}

/// Primitive gcd (positive leading coefficient) of two integer polynomials,
/// not both zero. Multi-modular with trial-division verification.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    let a = primitive(a);
    let b = primitive(b);
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let gamma = a.last().unwrap().gcd(b.last().unwrap());
    let mut best_deg = usize::MAX;
    let mut acc: ZPoly = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<ZPoly> = None;
    for p in large_primes() {
        let zp = Zp::new(p);
        if zp.reduce_int(a.last().unwrap()) == 0 || zp.reduce_int(b.last().unwrap()) == 0 {
            continue;
        }
        let gp = zp.gcd(&zp.reduce_poly(&a), &zp.reduce_poly(&b));
        let d = gp.len() - 1;
        if d == 0 {
            return vec![BigInt::one()];
        }
        if d > best_deg {
            continue;
        }
        let gp = zp.scale(zp.reduce_int(&gamma), &gp);
        let mut gp = gp;
        gp.resize(d + 1, 0);
        if d < best_deg {
            best_deg = d;
            acc = gp.iter().map(|&c| BigInt::from(c)).collect();
            modulus = BigInt::from(p);
            last = None;
            continue;
        }
        acc = acc
            .iter()
            .zip(gp.iter())
            .map(|(x, &r)| crt_step(x, &modulus, r, p))
            .collect();
        modulus *= BigInt::from(p);
        let cand: ZPoly = acc.iter().map(|x| symmetric(x, &modulus)).collect();
        if last.as_ref() == Some(&cand) {
            let prim = primitive(&cand);
            if exact_div(&a, &prim).is_some() && exact_div(&b, &prim).is_some() {
                return prim;
            }
        }
        last = Some(cand);
    }
    unreachable!("prime supply exhausted")
}
