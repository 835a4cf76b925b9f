use super::{ExactError, Field, FieldElem};

/// Dense univariate polynomial, coefficients in ascending order.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector and `degree` is the index of the last entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: FieldElem> Poly<E> {
    pub fn new(mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: E) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; handy for size bounds.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn map<E2: FieldElem>(&self, f: impl FnMut(&E) -> E2) -> Poly<E2> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

/// Polynomial operations over a fixed coefficient field.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly::zero()
    }

    pub fn one(&self) -> Poly<F::Elem> {
        Poly::constant(self.field.one())
    }

    /// `c·X^k`.
    pub fn monomial(&self, c: F::Elem, k: usize) -> Poly<F::Elem> {
        let mut v = vec![self.field.zero(); k];
        v.push(c);
        Poly::new(v)
    }

    /// `X - a`.
    pub fn linear(&self, a: &F::Elem) -> Poly<F::Elem> {
        Poly::new(vec![self.field.neg(a), self.field.one()])
    }

    pub fn from_ints(&self, c: &[i64]) -> Poly<F::Elem> {
        Poly::new(c.iter().map(|&v| self.field.from_int(v)).collect())
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.len().max(b.len());
        let k = &self.field;
        let v = (0..n)
            .map(|i| match (a.coeff(i), b.coeff(i)) {
                (Some(x), Some(y)) => k.add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(v)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly::new(a.coeffs().iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, c: &F::Elem, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(a.coeffs().iter().map(|x| self.field.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let k = &self.field;
        let mut out = vec![k.zero(); a.len() + b.len() - 1];
        for (i, x) in a.coeffs().iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs().iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(x, y));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, a: &Poly<F::Elem>, e: u32) -> Poly<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn divrem(
        &self,
        f: &Poly<F::Elem>,
        g: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>), ExactError> {
        let k = &self.field;
        let dg = g.degree().ok_or(ExactError::DivisionByZero)?;
        let inv_lc = k.inv(g.lc().unwrap()).expect("nonzero leading coefficient");
        let mut r: Vec<F::Elem> = f.coeffs().to_vec();
        if r.len() <= dg {
            return Ok((Poly::zero(), f.clone()));
        }
        let mut q = vec![k.zero(); r.len() - dg];
        for i in (dg..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let c = k.mul(&r[i], &inv_lc);
            for (j, gj) in g.coeffs().iter().enumerate() {
                let idx = i - dg + j;
                r[idx] = k.sub(&r[idx], &k.mul(&c, gj));
            }
            q[i - dg] = c;
        }
        r.truncate(dg);
        Ok((Poly::new(q), Poly::new(r)))
    }

    pub fn rem(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Result<Poly<F::Elem>, ExactError> {
        self.divrem(f, g).map(|(_, r)| r)
    }

    /// `Some(f / g)` when `g` divides `f` exactly.
    pub fn exact_div(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        match self.divrem(f, g) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn monic(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        match f.lc() {
            None => Poly::zero(),
            Some(lc) => self.scale(&self.field.inv(lc).unwrap(), f),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Result<Poly<F::Elem>, ExactError> {
        if f.is_zero() && g.is_zero() {
            return Err(ExactError::GcdOfZeros);
        }
        let (mut a, mut b) = (f.clone(), g.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b)?;
            a = b;
            b = self.monic(&r);
        }
        Ok(self.monic(&a))
    }

    /// Returns `(d, s, t)` with `s·f + t·g = d`, `d` the monic gcd.
    pub fn ext_gcd(
        &self,
        f: &Poly<F::Elem>,
        g: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>), ExactError> {
        if f.is_zero() && g.is_zero() {
            return Err(ExactError::GcdOfZeros);
        }
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1)?;
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.field.inv(r0.lc().unwrap()).unwrap();
        Ok((
            self.scale(&inv, &r0),
            self.scale(&inv, &s0),
            self.scale(&inv, &t0),
        ))
    }

    pub fn derivative(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let k = &self.field;
        Poly::new(
            f.coeffs()
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| k.mul(&k.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, f: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let k = &self.field;
        f.coeffs()
            .iter()
            .rev()
            .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// `f(g(X))`.
    pub fn compose(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Poly<F::Elem> {
        f.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, g), &Poly::constant(c.clone()))
        })
    }

    /// `f(X + a)`.
    pub fn shift(&self, f: &Poly<F::Elem>, a: &F::Elem) -> Poly<F::Elem> {
        let lin = Poly::new(vec![a.clone(), self.field.one()]);
        self.compose(f, &lin)
    }

    pub fn resultant(&self, f: &Poly<F::Elem>, g: &Poly<F::Elem>) -> Result<F::Elem, ExactError> {
        if f.is_zero() || g.is_zero() {
            return Err(ExactError::ZeroResultantInput);
        }
        Ok(self.field.poly_resultant(f, g))
    }

    /// `(-1)^{d(d-1)/2} Res(f, f') / lc(f)`.
    pub fn discriminant(&self, f: &Poly<F::Elem>) -> Result<F::Elem, ExactError> {
        let d = match f.degree() {
            None | Some(0) => return Err(ExactError::ConstantDiscriminant),
            Some(d) => d,
        };
        let k = &self.field;
        let df = self.derivative(f);
        let res = self.resultant(f, &df)?;
        let q = k.div(&res, f.lc().unwrap()).unwrap();
        Ok(if (d * (d - 1) / 2) % 2 == 1 { k.neg(&q) } else { q })
    }

    pub fn is_squarefree(&self, f: &Poly<F::Elem>) -> bool {
        match f.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self
                .gcd(f, &self.derivative(f))
                .map(|g| g.degree() == Some(0))
                .unwrap_or(false),
        }
    }

    /// `f / gcd(f, f')`, made monic.
    pub fn squarefree_part(&self, f: &Poly<F::Elem>) -> Result<Poly<F::Elem>, ExactError> {
        if f.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let g = self.gcd(f, &self.derivative(f))?;
        Ok(self.monic(&self.exact_div(f, &g).expect("gcd divides f")))
    }

    /// Yun's squarefree decomposition: monic `(a_i, i)` with `f = lc·Π a_i^i`,
    /// each `a_i` squarefree and pairwise coprime. Entries equal to 1 are
    /// dropped.
    pub fn squarefree_decomposition(
        &self,
        f: &Poly<F::Elem>,
    ) -> Result<Vec<(Poly<F::Elem>, usize)>, ExactError> {
        if f.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let f = self.monic(f);
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return Ok(out);
        }
        let df = self.derivative(&f);
        let g = self.gcd(&f, &df)?;
        let mut c = self.exact_div(&f, &g).unwrap();
        let mut d = self.sub(&self.exact_div(&df, &g).unwrap(), &self.derivative(&c));
        let mut i = 1;
        while c.degree().unwrap_or(0) > 0 {
            let a = self.gcd(&c, &d)?;
            c = self.exact_div(&c, &a).unwrap();
            d = self.sub(&self.exact_div(&d, &a).unwrap(), &self.derivative(&c));
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        Ok(out)
    }
}

/// Resultant via the Euclidean remainder sequence over a field.
pub(crate) fn euclidean_resultant<F: Field>(
    k: &F,
    f: &Poly<F::Elem>,
    g: &Poly<F::Elem>,
) -> F::Elem {
    let ring = PolyRing::new(k.clone());
    let mut a = f.clone();
    let mut b = g.clone();
    let mut acc = k.one();
    loop {
        let (da, db) = match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => (da, db),
            _ => return k.zero(),
        };
        if db == 0 {
            return k.mul(&acc, &k.pow(b.lc().unwrap(), da as u64));
        }
        if da == 0 {
            return k.mul(&acc, &k.pow(a.lc().unwrap(), db as u64));
        }
        let r = ring.rem(&a, &b).unwrap();
        let dr = match r.degree() {
            None => return k.zero(),
            Some(dr) => dr,
        };
        // Res(a, b) = (-1)^{da·db} lc(b)^{da - dr} Res(b, r)
        let mut factor = k.pow(b.lc().unwrap(), (da - dr) as u64);
        if (da * db) % 2 == 1 {
            factor = k.neg(&factor);
        }
        acc = k.mul(&acc, &factor);
        a = b;
        b = r;
    }
}

/// Resultant as the determinant of the Sylvester matrix. Quadratic memory
/// and cubic time; kept as an independent cross-check of the fast routes.
pub fn sylvester_resultant<F: Field>(
    k: &F,
    f: &Poly<F::Elem>,
    g: &Poly<F::Elem>,
) -> Result<F::Elem, ExactError> {
    let (m, n) = match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => (m, n),
        _ => return Err(ExactError::ZeroResultantInput),
    };
    let size = m + n;
    if size == 0 {
        return Ok(k.one());
    }
    let mut mat = vec![vec![k.zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    Ok(determinant(k, mat))
}

fn determinant<F: Field>(k: &F, mut mat: Vec<Vec<F::Elem>>) -> F::Elem {
    let n = mat.len();
    let mut det = k.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !mat[r][col].is_zero()) else {
            return k.zero();
        };
        if piv != col {
            mat.swap(piv, col);
            det = k.neg(&det);
        }
        det = k.mul(&det, &mat[col][col]);
        let inv = k.inv(&mat[col][col]).unwrap();
        for r in col + 1..n {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = k.mul(&mat[r][col], &inv);
            for c in col..n {
                let t = k.mul(&factor, &mat[col][c]);
                mat[r][c] = k.sub(&mat[r][c], &t);
            }
        }
    }
    det
}
