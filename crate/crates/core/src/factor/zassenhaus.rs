//! Factoring squarefree primitive integer polynomials: modular factorization,
//! Hensel lifting and subset recombination.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hensel::multifactor_lift;
use super::modp::{primes_from, symmetric, MPoly, Zp};
use super::FactorError;
use crate::exact::zpoly::{self, ZPoly};

/// Seed for the equal-degree splitting PRNG.
const EDF_SEED: u64 = 0x5eed_cafe;

/// Number of admissible primes whose degree patterns are intersected.
const PRIMES_SCANNED: usize = 12;

#[derive(Clone, Debug)]
pub(crate) struct Tuning {
    /// Every irreducible factor degree is a multiple of this (1 = no prior).
    pub degree_multiple: usize,
    /// Upper limit on candidate subsets tried during recombination.
    pub subset_budget: Option<u64>,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Audit {
    pub prime: Option<u64>,
}

/// Set of achievable subset sums of `degs`, as a bitmap over `0..=n`.
fn subset_sums(degs: &[usize], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for &d in degs {
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

/// Factors `f` (primitive, positive leading coefficient, squarefree,
/// degree >= 1) into primitive irreducible integer polynomials.
pub(crate) fn factor_squarefree(
    f: &ZPoly,
    tuning: &Tuning,
) -> Result<(Vec<ZPoly>, Audit), FactorError> {
    let n = f.len() - 1;
    if n <= 1 {
        return Ok((vec![f.clone()], Audit::default()));
    }
    if f[0].is_zero() {
        let rest = zpoly::primitive(&f[1..]);
        let (mut out, audit) = factor_squarefree(&rest, &Tuning { degree_multiple: 1, ..tuning.clone() })?;
        out.insert(0, vec![BigInt::zero(), BigInt::one()]);
        return Ok((out, audit));
    }

    let mut allowed: Vec<bool> = (0..=n)
        .map(|d| n % tuning.degree_multiple != 0 || d % tuning.degree_multiple == 0)
        .collect();
    let mut best: Option<(u64, Vec<(usize, MPoly)>, usize)> = None;
    let mut scanned = 0;
    for p in primes_from(5) {
        if scanned == PRIMES_SCANNED {
            break;
        }
        let zp = Zp::new(p);
        if zp.reduce_int(f.last().unwrap()) == 0 {
            continue;
        }
        let fp = zp.monic(&zp.reduce_poly(f));
        if zp.gcd(&fp, &zp.derivative(&fp)).len() != 1 {
            continue;
        }
        scanned += 1;
        let ddf = zp.distinct_degree(&fp);
        let degs: Vec<usize> = ddf
            .iter()
            .flat_map(|(d, g)| std::iter::repeat(*d).take((g.len() - 1) / d))
            .collect();
        let sums = subset_sums(&degs, n);
        for (a, s) in allowed.iter_mut().zip(sums) {
            *a &= s;
        }
        let count = degs.len();
        if best.as_ref().map_or(true, |b| count < b.2) {
            best = Some((p, ddf, count));
        }
        if count == 1 || !allowed[1..n].iter().any(|&a| a) {
            break;
        }
    }
    let (p, ddf, count) = best.expect("some prime is admissible for a squarefree polynomial");
    if count == 1 || !allowed[1..n].iter().any(|&a| a) {
        log::debug!("factor: degree {n} irreducible by degree analysis (prime {p})");
        return Ok((vec![f.clone()], Audit { prime: Some(p) }));
    }

    let zp = Zp::new(p);
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    let mut modular: Vec<MPoly> = Vec::new();
    for (d, g) in &ddf {
        modular.extend(zp.equal_degree(g, *d, &mut rng));
    }
    modular.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    // Mignotte-type bound: every factor g of f satisfies |g|_inf <= 2^n |f|_2.
    let norm2 = f.iter().map(|c| c * c).fold(BigInt::zero(), |a, b| a + b).sqrt() + 1;
    let lc = f.last().unwrap().clone();
    let bound: BigInt = (BigInt::one() << n) * norm2 * lc.abs() * 2;
    let pb = BigInt::from(p);
    let mut a = 1u32;
    let mut pa = pb.clone();
    while pa <= bound {
        pa *= &pb;
        a += 1;
    }
    log::debug!("factor: degree {n}, prime {p}, {} modular factors, lift to {p}^{a}", modular.len());
    let lifted = multifactor_lift(f, &modular, p, a);
    let factors = recombine(f, lifted, &modular, &pa, &allowed, tuning.subset_budget)?;
    Ok((factors, Audit { prime: Some(p) }))
}

fn recombine(
    f: &ZPoly,
    lifted: Vec<ZPoly>,
    modular: &[MPoly],
    pa: &BigInt,
    allowed: &[bool],
    budget: Option<u64>,
) -> Result<Vec<ZPoly>, FactorError> {
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let degs: Vec<usize> = modular.iter().map(|m| m.len() - 1).collect();
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut tried = 0u64;
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let r = remaining.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let deg: usize = idx.iter().map(|&i| degs[remaining[i]]).sum();
            if allowed[deg] {
                tried += 1;
                if budget.is_some_and(|b| tried > b) {
                    return Err(FactorError::BudgetExceeded);
                }
                let subset: Vec<usize> = idx.iter().map(|&i| remaining[i]).collect();
                if let Some((g, q)) = try_candidate(&rest, &lifted, &subset, pa) {
                    out.push(g);
                    rest = q;
                    let chosen: Vec<usize> = idx.iter().map(|&i| remaining[i]).collect();
                    remaining.retain(|i| !chosen.contains(i));
                    continue 'outer;
                }
            }
            // next combination of `size` out of `r`
            let mut i = size;
            loop {
                if i == 0 {
                    size += 1;
                    continue 'outer;
                }
                i -= 1;
                if idx[i] != i + r - size {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    if rest.len() > 1 {
        out.push(zpoly::primitive(&rest));
    }
    Ok(out)
}

/// Tests whether `lc(rest)·Π lifted[subset]` (mod pᵃ, symmetric) yields a
/// true factor of `rest`; returns it with the cofactor.
fn try_candidate(
    rest: &ZPoly,
    lifted: &[ZPoly],
    subset: &[usize],
    pa: &BigInt,
) -> Option<(ZPoly, ZPoly)> {
    let lc = rest.last().unwrap();
    // trailing coefficient test
    if !rest[0].is_zero() {
        let mut c = lc.clone();
        for &i in subset {
            c = (c * &lifted[i][0]) % pa;
        }
        let c = symmetric(&c, pa);
        if c.is_zero() || !(lc * &rest[0] % &c).is_zero() {
            return None;
        }
    }
    let mut prod: ZPoly = vec![lc.clone()];
    for &i in subset {
        prod = zpoly::mul(&prod, &lifted[i])
            .into_iter()
            .map(|c| c % pa)
            .collect();
    }
    let cand: ZPoly = prod.iter().map(|c| symmetric(c, pa)).collect();
    let g = zpoly::primitive(&cand);
    let q = zpoly::exact_div(rest, &g)?;
    Some((g, q))
}

/// Rational roots of a squarefree primitive integer polynomial with nonzero
/// constant term, by lifting roots modulo a prime.
pub(crate) fn rational_roots_squarefree(f: &ZPoly) -> Vec<(BigInt, BigInt)> {
    if f.len() <= 1 {
        return Vec::new();
    }
    let lc = f.last().unwrap().clone();
    let mut found = Vec::new();
    let (p, fp) = primes_from(5)
        .map(|p| (p, Zp::new(p)))
        .find_map(|(p, zp)| {
            if zp.reduce_int(&lc) == 0 {
                return None;
            }
            let fp = zp.reduce_poly(f);
            (zp.gcd(&fp, &zp.derivative(&fp)).len() == 1).then_some((p, fp))
        })
        .unwrap();
    let zp = Zp::new(p);
    let fp = zp.monic(&fp);
    let xp = zp.powmod(&[0, 1], &BigUint::from(p), &fp);
    let lin = zp.gcd(&zp.sub_poly(&xp, &[0, 1]), &fp);
    if lin.len() <= 1 {
        return found;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
    let roots: Vec<u64> = zp
        .equal_degree(&lin, 1, &mut rng)
        .into_iter()
        .map(|l| (zp.p - l[0]) % zp.p)
        .collect();
    let bound: BigInt = (lc.abs() * f[0].abs()) * 2 + 1;
    let pb = BigInt::from(p);
    let df = zpoly::derivative(f);
    for r0 in roots {
        // Newton iteration: r <- r - f(r)/f'(r) mod p^k, doubling k
        let mut r = BigInt::from(r0);
        let mut m = pb.clone();
        while m <= bound {
            m = &m * &m;
            let fr = zpoly::eval(f, &r);
            let dfr = zpoly::eval(&df, &r);
            let inv = super::hensel::mod_inverse(&dfr, &m);
            r = symmetric(&(r - fr * inv), &m);
        }
        let num = symmetric(&(&lc * &r), &m);
        if homogeneous_eval(f, &num, &lc).is_zero() {
            found.push((num, lc.clone()));
        }
    }
    found
}

/// `Σ fᵢ aⁱ bⁿ⁻ⁱ`, which vanishes iff `a/b` is a root (for `b ≠ 0`).
fn homogeneous_eval(f: &ZPoly, a: &BigInt, b: &BigInt) -> BigInt {
    let n = f.len() - 1;
    let mut acc = BigInt::zero();
    let mut apow = BigInt::one();
    let mut bpows = vec![BigInt::one(); n + 1];
    for i in 1..=n {
        bpows[i] = &bpows[i - 1] * b;
    }
    for (i, c) in f.iter().enumerate() {
        acc += c * &apow * &bpows[n - i];
        apow *= a;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_sum_bitmap() {
        let s = subset_sums(&[2, 3], 5);
        assert_eq!(s, vec![true, false, true, true, false, true]);
    }
}
