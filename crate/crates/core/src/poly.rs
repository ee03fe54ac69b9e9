//! Dense univariate polynomials over an exact field, with enough
//! factorization to split minimal polynomials: squarefree decomposition,
//! distinct-degree + equal-degree splitting over GF(p), and Hensel-based
//! recombination over Q.

use crate::field::{Field, PrimeField, Rationals};
use num::{BigInt, BigRational, BigUint, Integer, One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    field: F,
    /// little-endian, no trailing zeros
    coeffs: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn one(field: F) -> Self {
        let c = field.one();
        Poly { field, coeffs: vec![c] }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn x(field: F) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        Poly { field, coeffs }
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn monic(&self) -> Poly<F> {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(&self.leading_coeff());
        self.scale(&inv)
    }

    pub fn scale(&self, s: &F::Elem) -> Poly<F> {
        Poly::new(self.field.clone(), self.coeffs.iter().map(|c| self.field.mul(c, s)).collect())
    }

    pub fn add(&self, other: &Poly<F>) -> Poly<F> {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            let b = other.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            out.push(f.add(&a, &b));
        }
        Poly::new(self.field.clone(), out)
    }

    pub fn sub(&self, other: &Poly<F>) -> Poly<F> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly<F> {
        Poly::new(self.field.clone(), self.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    pub fn mul(&self, other: &Poly<F>) -> Poly<F> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add_mul(&out[i + j], a, b);
            }
        }
        Poly::new(self.field.clone(), out)
    }

    pub fn divrem(&self, divisor: &Poly<F>) -> (Poly<F>, Poly<F>) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let f = self.field.clone();
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let lc_inv = f.inv(&divisor.leading_coeff());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); self.coeffs.len() - dd];
        for i in (dd..rem.len()).rev() {
            if f.is_zero(&rem[i]) {
                continue;
            }
            let q = f.mul(&rem[i], &lc_inv);
            quot[i - dd] = q.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = f.sub(&rem[i - dd + j], &f.mul(&q, dc));
            }
        }
        (Poly::new(f.clone(), quot), Poly::new(f, rem))
    }

    pub fn rem(&self, divisor: &Poly<F>) -> Poly<F> {
        self.divrem(divisor).1
    }

    pub fn div_exact(&self, divisor: &Poly<F>) -> Poly<F> {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly<F>) -> Poly<F> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, u, v)` with `u*a + v*b = g`, `g` the monic gcd.
    pub fn extended_gcd(a: &Poly<F>, b: &Poly<F>) -> (Poly<F>, Poly<F>, Poly<F>) {
        let f = a.field.clone();
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut u0, mut u1) = (Poly::one(f.clone()), Poly::zero(f.clone()));
        let (mut v0, mut v1) = (Poly::zero(f.clone()), Poly::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            (r0, r1) = (r1, r);
            let nu = u0.sub(&q.mul(&u1));
            (u0, u1) = (u1, nu);
            let nv = v0.sub(&q.mul(&v1));
            (v0, v1) = (v1, nv);
        }
        if r0.is_zero() {
            return (r0, u0, v0);
        }
        let lc_inv = f.inv(&r0.leading_coeff());
        (r0.scale(&lc_inv), u0.scale(&lc_inv), v0.scale(&lc_inv))
    }

    pub fn derivative(&self) -> Poly<F> {
        let f = &self.field;
        let out: Vec<F::Elem> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
            .collect();
        Poly::new(self.field.clone(), out)
    }

    pub fn pow(&self, e: u64) -> Poly<F> {
        let mut acc = Poly::one(self.field.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn pow_mod(&self, e: &BigUint, modulus: &Poly<F>) -> Poly<F> {
        let mut acc = Poly::one(self.field.clone());
        let mut base = self.rem(modulus);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }
}

/// Squarefree decomposition of a monic polynomial: pairwise coprime monic
/// squarefree parts with multiplicities, product reconstructing the input.
pub fn squarefree_decomposition<F: Field>(p: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let f = p.field().clone();
    let p = p.monic();
    assert!(!p.is_zero());
    if p.degree() == Some(0) {
        return vec![];
    }
    let ch = f.characteristic();
    let deriv = p.derivative();
    let mut result: Vec<(Poly<F>, usize)> = Vec::new();
    if deriv.is_zero() {
        // characteristic p: the polynomial is a p-th power
        assert!(ch > 0, "nonconstant polynomial with zero derivative in char 0");
        let root = pth_root(&p, ch);
        for (fac, m) in squarefree_decomposition(&root) {
            result.push((fac, m * ch as usize));
        }
        return result;
    }
    let mut c = p.gcd(&deriv);
    let mut w = p.div_exact(&c);
    let mut i = 1usize;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            result.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        assert!(ch > 0);
        let root = pth_root(&c, ch);
        for (fac, m) in squarefree_decomposition(&root) {
            result.push((fac, m * ch as usize));
        }
    }
    result
}

/// Over a prime field the coefficients are Frobenius-fixed, so the p-th root
/// of `sum a_i x^(p*i)` is `sum a_i x^i`.
fn pth_root<F: Field>(p: &Poly<F>, ch: u64) -> Poly<F> {
    let f = p.field().clone();
    let step = ch as usize;
    let mut out = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if i % step == 0 {
            out.push(c.clone());
        } else {
            assert!(f.is_zero(c), "not a p-th power");
        }
    }
    Poly::new(f, out)
}

/// Full monic irreducible factorization with multiplicities.
pub fn factor<F: Field>(p: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out: Vec<(Poly<F>, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(p) {
        for irr in F::factor_squarefree(&part) {
            out.push((irr, mult));
        }
    }
    out.sort_by_key(|(f, _)| f.deg_or_zero());
    out
}

pub fn is_irreducible<F: Field>(p: &Poly<F>) -> bool {
    p.degree().is_some_and(|d| d >= 1) && {
        let fs = factor(p);
        fs.len() == 1 && fs[0].1 == 1
    }
}

// ---------------------------------------------------------------------------
// squarefree factorization over GF(p): distinct-degree then equal-degree
// ---------------------------------------------------------------------------

pub(crate) fn factor_squarefree_prime(p: &Poly<PrimeField>) -> Vec<Poly<PrimeField>> {
    let f = *p.field();
    let q = f.modulus();
    let p = p.monic();
    let deg = match p.degree() {
        None | Some(0) => return vec![],
        Some(1) => return vec![p],
        Some(d) => d,
    };
    // distinct-degree: peel off the product of all irreducible factors of
    // each degree d by gcd with x^(q^d) - x
    let mut parts: Vec<(Poly<PrimeField>, usize)> = Vec::new();
    let mut v = p.clone();
    let mut h = Poly::x(f).rem(&v);
    let mut d = 0usize;
    while v.deg_or_zero() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&BigUint::from(q), &v);
        let g = v.gcd(&h.sub(&Poly::x(f)));
        if !g.is_one() {
            parts.push((g.clone(), d));
            v = v.div_exact(&g);
            h = h.rem(&v);
        }
    }
    if !v.is_one() {
        let dv = v.deg_or_zero();
        parts.push((v, dv));
    }
    debug_assert_eq!(parts.iter().map(|(g, _)| g.deg_or_zero()).sum::<usize>(), deg);

    let mut rng = ChaCha8Rng::seed_from_u64(0x9d5f_21c4);
    let mut out = Vec::new();
    for (g, d) in parts {
        equal_degree_split(&g, d, &mut rng, &mut out);
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting of a product of distinct monic
/// irreducibles of degree `d`.
fn equal_degree_split(
    g: &Poly<PrimeField>,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Poly<PrimeField>>,
) {
    if g.deg_or_zero() == d {
        out.push(g.monic());
        return;
    }
    let f = *g.field();
    let q = f.modulus();
    loop {
        let deg_r = g.deg_or_zero() - 1;
        let coeffs: Vec<u64> = (0..=deg_r).map(|_| rng.gen_range(0..q)).collect();
        let r = Poly::new(f, coeffs);
        if r.degree().is_none() {
            continue;
        }
        let h = if q % 2 == 1 {
            // r^((q^d - 1)/2) - 1 kills about half the factors
            let e = (BigUint::from(q).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let s = r.pow_mod(&e, g);
            g.gcd(&s.sub(&Poly::one(f)))
        } else {
            // characteristic 2: use the trace map r + r^2 + ... + r^(2^(d-1))
            let mut t = r.rem(g);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(g);
                acc = acc.add(&t);
            }
            g.gcd(&acc)
        };
        let dh = h.deg_or_zero();
        if dh > 0 && dh < g.deg_or_zero() {
            equal_degree_split(&h, d, rng, out);
            equal_degree_split(&g.div_exact(&h), d, rng, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// squarefree factorization over Q: reduce to a monic integer polynomial,
// factor modulo a good prime, Hensel lift, recombine subsets
// ---------------------------------------------------------------------------

pub(crate) fn factor_squarefree_rationals(p: &Poly<Rationals>) -> Vec<Poly<Rationals>> {
    let p = p.monic();
    match p.degree() {
        None | Some(0) => return vec![],
        Some(1) => return vec![p],
        _ => {}
    }
    // substitute x = y/d for d the lcm of denominators: the result is a monic
    // integer polynomial with the "same" factors up to rescaling
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let n = p.deg_or_zero();
    let mut int_coeffs = Vec::with_capacity(n + 1);
    for (i, c) in p.coeffs().iter().enumerate() {
        // coefficient of y^i in d^n p(y/d) is a_i d^(n-i)
        let scaled = c * BigRational::from_integer(den.pow((n - i) as u32));
        assert!(scaled.is_integer());
        int_coeffs.push(scaled.to_integer());
    }
    let factors_z = factor_monic_squarefree_int(&int_coeffs);
    // map g(y) back to g(d x)/d^(deg g)
    let mut out = Vec::new();
    for g in factors_z {
        let dg = g.len() - 1;
        let coeffs: Vec<BigRational> = g
            .iter()
            .enumerate()
            .map(|(i, c)| {
                BigRational::new(c * den.pow(i as u32), den.pow(dg as u32))
            })
            .collect();
        out.push(Poly::new(Rationals, coeffs));
    }
    out
}

/// integer polynomial helpers (little-endian Vec<BigInt>)

fn int_poly_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division in Z[x] by a monic divisor.
fn int_poly_divrem_monic(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(b.last().is_some_and(|c| c.is_one()));
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (vec![], int_poly_trim(rem));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let q = rem[i].clone();
        if q.is_zero() {
            continue;
        }
        quot[i - db] = q.clone();
        for (j, bc) in b.iter().enumerate() {
            let t = &q * bc;
            rem[i - db + j] -= t;
        }
    }
    (int_poly_trim(quot), int_poly_trim(rem))
}

fn int_poly_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    int_poly_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

/// Representative with coefficients in (-m/2, m/2].
fn int_poly_centered(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    int_poly_trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn int_to_gfp(a: &[BigInt], f: PrimeField) -> Poly<PrimeField> {
    let p = BigInt::from(f.modulus());
    let coeffs: Vec<u64> = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(&p);
            r.to_biguint().unwrap().try_into().unwrap()
        })
        .collect();
    Poly::new(f, coeffs)
}

fn gfp_to_int(a: &Poly<PrimeField>) -> Vec<BigInt> {
    a.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

/// Zassenhaus factorization of a monic squarefree integer polynomial.
fn factor_monic_squarefree_int(q: &[BigInt]) -> Vec<Vec<BigInt>> {
    let deg = q.len() - 1;
    if deg <= 1 {
        return vec![q.to_vec()];
    }
    // choose a prime keeping q squarefree mod p
    let mut chosen = None;
    'primes: for &p in &[
        3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
        181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
    ] {
        let f = PrimeField::new(p);
        let qp = int_to_gfp(q, f);
        if qp.deg_or_zero() != deg {
            continue; // cannot happen for monic input, kept for safety
        }
        let d = qp.derivative();
        if d.is_zero() {
            continue;
        }
        if qp.gcd(&d).is_one() {
            chosen = Some(f);
            break 'primes;
        }
    }
    let f = chosen.expect("no good prime found for squarefree reduction");
    let mod_factors = factor_squarefree_prime(&int_to_gfp(q, f));
    if mod_factors.len() == 1 {
        return vec![q.to_vec()];
    }

    // coefficient bound for monic factors: 2^deg * |q|_2 is safely above the
    // Mignotte bound
    let norm_sq: BigInt = q.iter().map(|c| c * c).sum();
    let bound = BigInt::from(2).pow(deg as u32) * (norm_sq.sqrt() + BigInt::one());
    let p_big = BigInt::from(f.modulus());
    let mut modulus = p_big.clone();
    let mut k = 1u32;
    while modulus <= BigInt::from(2) * &bound {
        modulus *= &p_big;
        k += 1;
    }

    let lifted = hensel_lift_list(
        q,
        &mod_factors.iter().map(gfp_to_int).collect::<Vec<_>>(),
        f,
        k,
    );

    // subset recombination
    let mut remaining = q.to_vec();
    let mut pool: Vec<Vec<BigInt>> = lifted;
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= pool.len() {
        let idxs: Vec<usize> = (0..pool.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut prod = vec![BigInt::one()];
            for &i in &combo {
                prod = int_poly_mod(&int_poly_mul(&prod, &pool[i]), &modulus);
            }
            let cand = int_poly_centered(&prod, &modulus);
            if cand.len() < 2 {
                continue;
            }
            let (quot, rem) = int_poly_divrem_monic(&remaining, &cand);
            if rem.is_empty() {
                out.push(cand);
                remaining = quot;
                let keep: Vec<Vec<BigInt>> = pool
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                pool = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if remaining.len() > 1 {
        out.push(remaining);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, combo: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if combo.len() == k {
            out.push(combo.clone());
            return;
        }
        for i in start..items.len() {
            combo.push(items[i]);
            rec(items, k, i + 1, combo, out);
            combo.pop();
        }
    }
    rec(items, k, 0, &mut combo, &mut out);
    out
}

/// Lift a factorization of `q` modulo p to modulo p^k; all polynomials monic.
fn hensel_lift_list(q: &[BigInt], factors: &[Vec<BigInt>], f: PrimeField, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![q.to_vec()];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let p_big = BigInt::from(f.modulus());
    let modulus = p_big.pow(k);

    let g0: Poly<PrimeField> = left
        .iter()
        .fold(Poly::one(f), |acc, x| acc.mul(&int_to_gfp(x, f)));
    let h0: Poly<PrimeField> = right
        .iter()
        .fold(Poly::one(f), |acc, x| acc.mul(&int_to_gfp(x, f)));
    let (gcd, s, t) = Poly::extended_gcd(&g0, &h0);
    assert!(gcd.is_one(), "factors not coprime modulo p");

    // linear Hensel steps: q = g*h mod p^j, refine g and h
    let mut g = gfp_to_int(&g0);
    let mut h = gfp_to_int(&h0);
    let s_int = gfp_to_int(&s);
    let t_int = gfp_to_int(&t);
    let mut pj = p_big.clone();
    while pj < modulus {
        // e = (q - g h) / p^j  mod p
        let gh = int_poly_mul(&g, &h);
        let mut e: Vec<BigInt> = q.to_vec();
        for (i, c) in gh.iter().enumerate() {
            if i < e.len() {
                e[i] -= c;
            } else {
                e.push(-c.clone());
            }
        }
        let e_div: Vec<BigInt> = e.iter().map(|c| c / &pj).collect();
        let e_p = int_to_gfp(&e_div, f);
        // dg = t*e mod g, dh = s*e mod h (over GF(p))
        let gp = int_to_gfp(&g, f);
        let hp = int_to_gfp(&h, f);
        let dg = int_to_gfp(&t_int, f).mul(&e_p).rem(&gp);
        let dh = int_to_gfp(&s_int, f).mul(&e_p).rem(&hp);
        for (i, c) in gfp_to_int(&dg).iter().enumerate() {
            if i < g.len() {
                g[i] += c * &pj;
            } else {
                g.push(c * &pj);
            }
        }
        for (i, c) in gfp_to_int(&dh).iter().enumerate() {
            if i < h.len() {
                h[i] += c * &pj;
            } else {
                h.push(c * &pj);
            }
        }
        pj *= &p_big;
    }
    let g = int_poly_mod(&g, &modulus);
    let h = int_poly_mod(&h, &modulus);

    let mut out = hensel_lift_sublist(&g, left, f, k);
    out.extend(hensel_lift_sublist(&h, right, f, k));
    out
}

fn hensel_lift_sublist(q: &[BigInt], factors: &[Vec<BigInt>], f: PrimeField, k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![q.to_vec()];
    }
    hensel_lift_list(q, factors, f, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(coeffs: &[i64]) -> Poly<Rationals> {
        Poly::new(Rationals, coeffs.iter().map(|&c| Rationals.from_i64(c)).collect())
    }

    fn ppoly(p: u64, coeffs: &[i64]) -> Poly<PrimeField> {
        let f = PrimeField::new(p);
        Poly::new(f, coeffs.iter().map(|&c| f.from_i64(c)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let a = qpoly(&[1, 0, 2, 1]);
        let b = qpoly(&[1, 1]);
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn gcd_of_multiples() {
        let g = qpoly(&[-1, 1]);
        let a = g.mul(&qpoly(&[1, 1]));
        let b = g.mul(&qpoly(&[2, 0, 1]));
        assert_eq!(a.gcd(&b), g.monic());
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = qpoly(&[1, 0, 1]); // x^2 + 1
        let b = qpoly(&[-1, 1]); // x - 1
        let (g, u, v) = Poly::extended_gcd(&a, &b);
        assert!(g.is_one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), Poly::one(Rationals));
    }

    #[test]
    fn x2_plus_1_is_irreducible_over_q() {
        // brute-force oracle: a quadratic is reducible over Q iff it has a
        // rational root, and a rational root of a monic integer quadratic is
        // an integer dividing the constant term
        for r in [-1i64, 1] {
            assert_ne!(r * r + 1, 0);
        }
        let p = qpoly(&[1, 0, 1]);
        let fs = factor(&p);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 1);
        assert_eq!(fs[0].0, p);
        assert!(is_irreducible(&p));
    }

    #[test]
    fn x4_plus_1_is_irreducible_over_q() {
        // reducible modulo every prime, so this exercises recombination
        let p = qpoly(&[1, 0, 0, 0, 1]);
        assert!(is_irreducible(&p));
    }

    #[test]
    fn factors_product_of_quadratics() {
        let a = qpoly(&[-2, 0, 1]); // x^2 - 2
        let b = qpoly(&[-3, 0, 1]); // x^2 - 3
        let c = qpoly(&[-1, 1]); // x - 1
        let prod = a.mul(&b).mul(&c).mul(&c);
        let fs = factor(&prod);
        assert_eq!(fs.len(), 3);
        let mut found_sq = 0;
        for (f, m) in &fs {
            if *m == 2 {
                assert_eq!(*f, c.monic());
                found_sq += 1;
            } else {
                assert!(*f == a.monic() || *f == b.monic());
            }
        }
        assert_eq!(found_sq, 1);
    }

    #[test]
    fn rational_coefficients_factor() {
        // (x - 1/2)(x + 3) scaled monic
        let a = Poly::new(Rationals, vec![crate::field::ratio(-1, 2), Rationals.one()]);
        let b = qpoly(&[3, 1]);
        let fs = factor(&a.mul(&b));
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(_, m)| *m == 1));
        assert!(fs.iter().any(|(f, _)| *f == a));
    }

    #[test]
    fn gf2_factorizations() {
        // x^2 + x + 1 irreducible over GF(2)
        assert!(is_irreducible(&ppoly(2, &[1, 1, 1])));
        // x^4 + x + 1 irreducible over GF(2)
        assert!(is_irreducible(&ppoly(2, &[1, 1, 0, 0, 1])));
        // x^2 + 1 = (x+1)^2 over GF(2)
        let fs = factor(&ppoly(2, &[1, 0, 1]));
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 2);
        assert_eq!(fs[0].0, ppoly(2, &[1, 1]));
    }

    #[test]
    fn gf7_split_product() {
        // x^2 - 1 = (x-1)(x+1)
        let fs = factor(&ppoly(7, &[-1, 0, 1]));
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(f, m)| f.deg_or_zero() == 1 && *m == 1));
    }

    #[test]
    fn squarefree_decomposition_char_p_power() {
        // (x+1)^2 over GF(2) has zero derivative
        let p = ppoly(2, &[1, 0, 1]);
        let sf = squarefree_decomposition(&p);
        assert_eq!(sf.len(), 1);
        assert_eq!(sf[0].1, 2);
    }

    #[test]
    fn pow_mod_matches_pow() {
        let p = qpoly(&[1, 2, 1]);
        let m = qpoly(&[1, 0, 0, 1]);
        let e = BigUint::from(5u32);
        assert_eq!(p.pow_mod(&e, &m), p.pow(5).rem(&m));
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn factor_reassembles_over_gf5(coeffs in proptest::collection::vec(0i64..5, 2..6)) {
            let f = PrimeField::new(5);
            let mut p = Poly::new(f, coeffs.iter().map(|&c| f.from_i64(c)).collect());
            if p.deg_or_zero() < 1 {
                return Ok(());
            }
            p = p.monic();
            let fs = factor(&p);
            let mut prod = Poly::one(f);
            for (fac, m) in &fs {
                prop_assert!(is_irreducible(fac));
                for _ in 0..*m {
                    prod = prod.mul(fac);
                }
            }
            prop_assert_eq!(prod, p);
        }

        #[test]
        fn factor_reassembles_over_q(roots in proptest::collection::vec(-4i64..4, 1..4)) {
            let mut p = Poly::one(Rationals);
            for r in &roots {
                p = p.mul(&qpoly(&[-r, 1]));
            }
            p = p.mul(&qpoly(&[1, 1, 1])); // times an irreducible quadratic
            let fs = factor(&p);
            let mut prod = Poly::one(Rationals);
            for (fac, m) in &fs {
                for _ in 0..*m {
                    prod = prod.mul(fac);
                }
            }
            prop_assert_eq!(prod, p);
        }
    }
}

