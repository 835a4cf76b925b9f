//! Quadratic multifactor Hensel lifting over ℤ/pᵃ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::{MPoly, Zp};
use crate::exact::zpoly::ZPoly;

fn reduce(f: &[BigInt], m: &BigInt) -> ZPoly {
    let mut v: ZPoly = f.iter().map(|c| c.mod_floor(m)).collect();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
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
    reduce(&out, m)
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
        .collect();
    reduce(&v, m)
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
        .collect();
    reduce(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic(f: &[BigInt], h: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let dh = h.len() - 1;
    debug_assert!(h[dh].is_one());
    let mut r = f.to_vec();
    if r.len() <= dh {
        return (Vec::new(), reduce(&r, m));
    }
    let mut q = vec![BigInt::zero(); r.len() - dh];
    for i in (dh..r.len()).rev() {
        let c = r[i].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, hj) in h.iter().enumerate() {
            r[i - dh + j] -= &c * hj;
        }
        q[i - dh] = c;
    }
    r.truncate(dh);
    (reduce(&q, m), reduce(&r, m))
}

fn lift(p: &MPoly) -> ZPoly {
    p.iter().map(|&c| BigInt::from(c)).collect()
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// One quadratic step: from `f ≡ g·h`, `s·g + t·h ≡ 1 (mod m)` to the same
/// identities modulo `next` (with `m | next | m²`).
fn step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    next: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = sub(f, &mul(g, h, next), next);
    let (q, r) = divrem_monic(&mul(s, &e, next), h, next);
    let g2 = add(&add(g, &mul(t, &e, next), next), &mul(&q, g, next), next);
    let h2 = add(h, &r, next);
    let b = sub(&add(&mul(s, &g2, next), &mul(t, &h2, next), next), &[BigInt::one()], next);
    let (c, d) = divrem_monic(&mul(s, &b, next), &h2, next);
    let s2 = sub(s, &d, next);
    let t2 = sub(&sub(t, &mul(t, &b, next), next), &mul(&c, &g2, next), next);
    (g2, h2, s2, t2)
}

/// Lifts the monic modular factorization `f ≡ lc(f)·Π facs (mod p)` to monic
/// factors modulo `p^a`. `f` must be squarefree mod `p` with `p ∤ lc(f)`.
pub(crate) fn multifactor_lift(f: &[BigInt], facs: &[MPoly], p: u64, a: u32) -> Vec<ZPoly> {
    let pa = num_traits::pow(BigInt::from(p), a as usize);
    lift_rec(&reduce(f, &pa), facs, p, &pa)
}

fn lift_rec(f: &[BigInt], facs: &[MPoly], p: u64, pa: &BigInt) -> Vec<ZPoly> {
    if facs.len() == 1 {
        let inv = mod_inverse(f.last().unwrap(), pa);
        return vec![reduce(&f.iter().map(|c| c * &inv).collect::<ZPoly>(), pa)];
    }
    let zp = Zp::new(p);
    let k = facs.len() / 2;
    let lc = zp.reduce_int(f.last().unwrap());
    let g0 = facs[..k]
        .iter()
        .fold(vec![lc], |acc, x| zp.mul_poly(&acc, x));
    let h0 = facs[k..].iter().fold(vec![1u64], |acc, x| zp.mul_poly(&acc, x));
    let (d, s0, t0) = zp.ext_gcd(&g0, &h0);
    debug_assert_eq!(d, vec![1]);

    let pb = BigInt::from(p);
    let (mut g, mut h, mut s, mut t) = (lift(&g0), lift(&h0), lift(&s0), lift(&t0));
    let mut m = pb.clone();
    while &m < pa {
        let next = std::cmp::min(&m * &m, pa.clone());
        (g, h, s, t) = step(f, &g, &h, &s, &t, &next);
        m = next;
    }
    let mut out = lift_rec(&g, &facs[..k], p, pa);
    out.extend(lift_rec(&h, &facs[k..], p, pa));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifts_quadratic_split() {
        // x^2 - 2 over Z/7^a: sqrt(2) = ±3 mod 7 (3^2 = 9 = 2)
        let f: ZPoly = vec![BigInt::from(-2), BigInt::zero(), BigInt::one()];
        let facs = vec![vec![4u64, 1], vec![3u64, 1]];
        let lifted = multifactor_lift(&f, &facs, 7, 10);
        let pa = num_traits::pow(BigInt::from(7), 10);
        let prod = mul(&lifted[0], &lifted[1], &pa);
        assert_eq!(prod, reduce(&f, &pa));
    }

    #[test]
    fn lifts_nonmonic_three_factors() {
        // 6(x-1)(x-2)(x-3) lifted with p = 5
        let f: ZPoly = [-36i64, 66, -36, 6].iter().map(|&c| BigInt::from(c)).collect();
        let facs = vec![vec![4u64, 1], vec![3u64, 1], vec![2u64, 1]];
        let lifted = multifactor_lift(&f, &facs, 5, 6);
        let pa = num_traits::pow(BigInt::from(5), 6);
        let want: Vec<ZPoly> = [1i64, 2, 3]
            .iter()
            .map(|&r| reduce(&[BigInt::from(-r), BigInt::one()], &pa))
            .collect();
        assert_eq!(lifted, want);
    }
}
