//! Dense polynomials over ℤ/p for word-size primes (p < 2³¹).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

pub(crate) type MPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Zp {
    pub p: u64,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `>= start` in increasing order.
pub(crate) fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| is_prime(n))
}

/// Primes just below 2³¹, descending; used for multi-modular work.
pub(crate) fn large_primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..(1u64 << 31)).rev().filter(|&n| is_prime(n))
}

impl Zp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < (1 << 31));
        Zp { p }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().unwrap()
    }

    pub fn reduce_poly(&self, f: &[BigInt]) -> MPoly {
        let mut v: MPoly = f.iter().map(|c| self.reduce_int(c)).collect();
        trim(&mut v);
        v
    }

    pub fn sub_poly(&self, a: &[u64], b: &[u64]) -> MPoly {
        let n = a.len().max(b.len());
        let mut v: MPoly = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut v);
        v
    }

    pub fn scale(&self, c: u64, a: &[u64]) -> MPoly {
        let mut v: MPoly = a.iter().map(|&x| self.mul(c, x)).collect();
        trim(&mut v);
        v
    }

    pub fn mul_poly(&self, a: &[u64], b: &[u64]) -> MPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn divrem(&self, f: &[u64], g: &[u64]) -> (MPoly, MPoly) {
        assert!(!g.is_empty(), "division by zero polynomial mod p");
        let dg = g.len() - 1;
        let mut r = f.to_vec();
        if r.len() <= dg {
            return (Vec::new(), r);
        }
        let inv = self.inv(g[dg]);
        let mut q = vec![0u64; r.len() - dg];
        for i in (dg..r.len()).rev() {
            if r[i] == 0 {
                continue;
            }
            let c = self.mul(r[i], inv);
            q[i - dg] = c;
            for (j, &gj) in g.iter().enumerate() {
                let idx = i - dg + j;
                r[idx] = self.sub(r[idx], self.mul(c, gj));
            }
        }
        r.truncate(dg);
        trim(&mut r);
        trim(&mut q);
        (q, r)
    }

    pub fn rem(&self, f: &[u64], g: &[u64]) -> MPoly {
        self.divrem(f, g).1
    }

    pub fn monic(&self, f: &[u64]) -> MPoly {
        match f.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(self.inv(lc), f),
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> MPoly {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(d, s, t)` with `s·a + t·b = d` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (MPoly, MPoly, MPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1): (MPoly, MPoly) = (vec![1], vec![]);
        let (mut t0, mut t1): (MPoly, MPoly) = (vec![], vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t2 = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().unwrap());
        (self.scale(inv, &r0), self.scale(inv, &s0), self.scale(inv, &t0))
    }

    pub fn derivative(&self, f: &[u64]) -> MPoly {
        let mut v: MPoly = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(i as u64 % self.p, c))
            .collect();
        trim(&mut v);
        v
    }

    pub fn mulmod(&self, a: &[u64], b: &[u64], m: &[u64]) -> MPoly {
        self.rem(&self.mul_poly(a, b), m)
    }

    pub fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> MPoly {
        let mut acc: MPoly = self.rem(&[1], m);
        let base = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mulmod(&acc, &base, m);
            }
        }
        acc
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// `(d, product of all irreducible factors of degree d)`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(usize, MPoly)> {
        let mut out = Vec::new();
        let mut f = self.monic(f);
        let x: MPoly = vec![0, 1];
        let p = BigUint::from(self.p);
        let mut h = self.rem(&x, &f);
        let mut d = 0;
        while f.len() > 1 && 2 * (d + 1) <= f.len() - 1 {
            d += 1;
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&self.sub_poly(&h, &x), &f);
            if g.len() > 1 {
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((d, g));
            }
        }
        if f.len() > 1 {
            out.push((f.len() - 1, f));
        }
        out
    }

    /// Splits a monic squarefree product of degree-`d` irreducibles
    /// (Cantor–Zassenhaus, odd `p`).
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<MPoly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: MPoly = {
                let mut v: MPoly = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
                trim(&mut v);
                v
            };
            if a.len() < 2 {
                continue;
            }
            let g = self.gcd(&a, f);
            let g = if g.len() > 1 && g.len() < f.len() {
                g
            } else {
                let b = self.powmod(&a, &e, f);
                let b = self.sub_poly(&b, &[1]);
                self.gcd(&b, f)
            };
            if g.len() > 1 && g.len() < f.len() {
                let h = self.divrem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&self.monic(&h), d, rng));
                return out;
            }
        }
    }

}

pub(crate) fn trim(v: &mut MPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Chinese remaindering of a residue `r mod p` into `(acc mod m)`, result
/// in `[0, m·p)`.
pub(crate) fn crt_step(acc: &BigInt, m: &BigInt, r: u64, p: u64) -> BigInt {
    let zp = Zp::new(p);
    let acc_mod = zp.reduce_int(acc);
    let m_mod = zp.reduce_int(m);
    let k = zp.mul(zp.sub(r, acc_mod), zp.inv(m_mod));
    acc + m * BigInt::from(k)
}

/// Symmetric representative of `a mod m` in `(-m/2, m/2]`.
pub(crate) fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if (&r << 1u32) > *m {
        r - m
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn primality() {
        let small: Vec<u64> = primes_from(2).take(10).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(2147483647));
        assert!(!is_prime(2147483649));
        assert!(!is_prime(561));
    }

    #[test]
    fn ddf_and_edf_split_product() {
        let zp = Zp::new(13);
        // (x-1)(x-2)(x^2+2)(x^2+5)... build from linear and known irreducibles
        let lin1 = vec![12, 1];
        let lin2 = vec![11, 1];
        let q = vec![2, 0, 1]; // x^2+2 irreducible mod 13 (−2 is not a square)
        let f = zp.mul_poly(&zp.mul_poly(&lin1, &lin2), &q);
        let ddf = zp.distinct_degree(&f);
        assert_eq!(ddf.iter().map(|(d, g)| (*d, g.len() - 1)).collect::<Vec<_>>(), vec![(1, 2), (2, 2)]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let mut lins = zp.equal_degree(&ddf[0].1, 1, &mut rng);
        lins.sort();
        assert_eq!(lins, vec![lin2, lin1]);
    }

    #[test]
    fn crt_combines() {
        let m = BigInt::from(7);
        let x = crt_step(&BigInt::from(3), &m, 5, 11);
        assert_eq!(x.clone() % 7, BigInt::from(3));
        assert_eq!(x % 11, BigInt::from(5));
        assert_eq!(symmetric(&BigInt::from(70), &BigInt::from(77)), BigInt::from(-7));
    }
}
