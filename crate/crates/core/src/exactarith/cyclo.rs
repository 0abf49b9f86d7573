use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::root::RootExp;
use crate::error::{HopfError, Result};

/// Precomputed data for `Q(ζ_n)`: the cyclotomic polynomial and the
/// reductions of the powers `x^k` modulo it.
#[derive(Debug)]
pub struct CycloField {
    n: u32,
    /// Coefficients of Φ_n, constant term first. Monic.
    phi: Vec<i64>,
    /// `powers[k]` = coefficients of `x^k mod Φ_n`, for `k < table_len`.
    powers: Vec<Vec<i64>>,
}

impl CycloField {
    /// Shared handle to the field `Q(ζ_n)`.
    pub fn get(n: u32) -> Arc<CycloField> {
        assert!(n > 0, "cyclotomic modulus must be positive");
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("cyclotomic field cache poisoned");
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(CycloField::build(n)))
            .clone()
    }

    fn build(n: u32) -> CycloField {
        let phi = cyclotomic_polynomial(n);
        let deg = phi.len() - 1;
        let table_len = (n as usize).max(2 * deg);
        let mut powers = Vec::with_capacity(table_len);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        if deg == 0 {
            unreachable!("cyclotomic polynomials have positive degree");
        }
        for _ in 0..table_len {
            powers.push(cur.clone());
            // multiply by x, then subtract lead * Φ_n
            let lead = cur[deg - 1];
            let mut next = vec![0i64; deg];
            for i in (1..deg).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..deg {
                next[i] -= lead * phi[i];
            }
            cur = next;
        }
        CycloField { n, phi, powers }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    /// `deg Φ_n = φ(n)`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self) -> &[i64] {
        &self.phi
    }

    fn power(&self, k: usize) -> &[i64] {
        if k < self.powers.len() {
            &self.powers[k]
        } else {
            &self.powers[k % self.n as usize]
        }
    }
}

/// Φ_n by exact division of `x^n - 1` by Φ_d for the proper divisors d.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_monic_div(&num, &div);
        }
    }
    num
}

fn exact_monic_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = num.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for j in 0..=dd {
                rem[i + j] -= c * den[j];
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// An element of the cyclotomic field `Q(ζ_n)`, stored as the canonical
/// residue modulo Φ_n (so equality is coefficient equality).
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNum {}

impl std::hash::Hash for CycloNum {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.coeffs.hash(state);
    }
}

impl CycloNum {
    pub fn zero(n: u32) -> CycloNum {
        let field = CycloField::get(n);
        let coeffs = vec![BigRational::zero(); field.degree()];
        CycloNum { field, coeffs }
    }

    pub fn one(n: u32) -> CycloNum {
        CycloNum::from_integer(n, 1)
    }

    pub fn from_integer(n: u32, v: i64) -> CycloNum {
        CycloNum::from_rational(n, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(n: u32, v: BigRational) -> CycloNum {
        let mut z = CycloNum::zero(n);
        z.coeffs[0] = v;
        z
    }

    /// The root `ζ_m^k` as an element of `Q(ζ_n)`; requires `m | n`.
    pub fn from_root(n: u32, r: RootExp) -> Result<CycloNum> {
        let r = r.embed(n)?;
        let field = CycloField::get(n);
        let coeffs = field
            .power(r.exponent() as usize)
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Ok(CycloNum { field, coeffs })
    }

    /// Canonical residue of a polynomial in ζ_n (coefficients constant
    /// term first, any length).
    pub fn reduce(n: u32, raw: &[BigRational]) -> CycloNum {
        let field = CycloField::get(n);
        let deg = field.degree();
        let mut coeffs = vec![BigRational::zero(); deg];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &p) in field.power(k).iter().enumerate() {
                if p != 0 {
                    coeffs[j] += c * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        CycloNum { field, coeffs }
    }

    pub fn modulus(&self) -> u32 {
        self.field.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    fn check(&self, other: &CycloNum) {
        assert_eq!(
            self.field.n, other.field.n,
            "cyclotomic arithmetic across different fields"
        );
    }

    pub fn scale(&self, q: &BigRational) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Φ_n.
    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(HopfError::DivisionByZero);
        }
        let phi: Vec<BigRational> = self
            .field
            .phi
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let a = trim(self.coeffs.clone());
        // invariant: s * a ≡ r (mod Φ)
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ_n is irreducible, so the last nonzero remainder is a unit.
        let c = r1[0].clone();
        debug_assert!(!c.is_zero());
        let s = s1.iter().map(|x| x / &c).collect::<Vec<_>>();
        Ok(CycloNum::reduce(self.field.n, &s))
    }

    pub fn pow(&self, mut k: u32) -> CycloNum {
        let mut base = self.clone();
        let mut acc = CycloNum::one(self.field.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// The same number as an element of `Q(ζ_m)`, `n | m`.
    pub fn embed(&self, m: u32) -> Result<CycloNum> {
        let n = self.modulus();
        if m == 0 || !m.is_multiple_of(n) {
            return Err(HopfError::NotADivisor { from: n, to: m });
        }
        let step = (m / n) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs().len().saturating_sub(1)) * step + 1];
        for (i, c) in self.coeffs().iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Ok(CycloNum::reduce(m, &raw))
    }

    pub fn div(&self, other: &CycloNum) -> Result<CycloNum> {
        Ok(self * &other.inv()?)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for j in 0..=db {
                let t = &c * &b[j];
                r[i + j] -= t;
            }
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.check(rhs);
        CycloNum {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.check(rhs);
        CycloNum {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.check(rhs);
        let deg = self.field.degree();
        let mut conv = vec![BigRational::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = conv[..deg].to_vec();
        for (k, c) in conv.iter().enumerate().skip(deg) {
            if c.is_zero() {
                continue;
            }
            for (j, &p) in self.field.power(k).iter().enumerate() {
                if p != 0 {
                    coeffs[j] += c * BigRational::from_integer(BigInt::from(p));
                }
            }
        }
        CycloNum {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: CycloNum) -> CycloNum {
        &self + &rhs
    }
}

impl Sub for CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: CycloNum) -> CycloNum {
        &self - &rhs
    }
}

impl Mul for CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: CycloNum) -> CycloNum {
        &self * &rhs
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        self.check(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, rhs: &CycloNum) {
        self.check(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (_, true) => write!(f, "z^{}", k)?,
                (_, false) => write!(f, "{}*z^{}", mag, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})[{}]", self.field.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| q(x, 1)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn reduce_examples() {
        // x^2 ≡ -1 mod Φ_4
        assert_eq!(CycloNum::reduce(4, &ints(&[0, 0, 1])).coeffs(), &ints(&[-1, 0])[..]);
        // 1 + ζ_2 = 0
        assert!(CycloNum::reduce(2, &ints(&[1, 1])).is_zero());
        // 1 + ζ_3 + ζ_3^2 = 0
        assert!(CycloNum::reduce(3, &ints(&[1, 1, 1])).is_zero());
    }

    #[test]
    fn inverse_examples() {
        let two = CycloNum::from_integer(7, 2);
        assert_eq!(two.inv().unwrap(), CycloNum::from_rational(7, q(1, 2)));

        let i = CycloNum::from_root(4, RootExp::new(4, 1)).unwrap();
        let i3 = CycloNum::from_root(4, RootExp::new(4, 3)).unwrap();
        assert_eq!(i.inv().unwrap(), i3);

        // (1 + i)^{-1} = (1 - i) / 2
        let one_plus_i = CycloNum::reduce(4, &ints(&[1, 1]));
        let expected = CycloNum::reduce(4, &[q(1, 2), q(-1, 2)]);
        assert_eq!(one_plus_i.inv().unwrap(), expected);

        assert_eq!(CycloNum::zero(5).inv(), Err(HopfError::DivisionByZero));
    }

    #[test]
    fn roots_multiply_like_exponents() {
        for n in [3u32, 5, 8, 12] {
            for a in 0..n as i64 {
                for b in 0..n as i64 {
                    let x = CycloNum::from_root(n, RootExp::new(n, a)).unwrap();
                    let y = CycloNum::from_root(n, RootExp::new(n, b)).unwrap();
                    let z = CycloNum::from_root(n, RootExp::new(n, a + b)).unwrap();
                    assert_eq!(&x * &y, z);
                }
            }
        }
    }

    #[test]
    fn embedding_preserves_arithmetic() {
        let a = CycloNum::from_root(6, RootExp::new(6, 1)).unwrap();
        let b = &a + &CycloNum::from_integer(6, 3);
        let e = b.embed(12).unwrap();
        assert_eq!(e, &CycloNum::from_root(12, RootExp::new(12, 2)).unwrap() + &CycloNum::from_integer(12, 3));
        assert_eq!((&a * &a).embed(24).unwrap(), &a.embed(24).unwrap() * &a.embed(24).unwrap());
        assert!(a.embed(9).is_err());
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for n in 2..13u32 {
            let mut s = CycloNum::zero(n);
            for k in 0..n as i64 {
                s += &CycloNum::from_root(n, RootExp::new(n, k)).unwrap();
            }
            assert!(s.is_zero(), "n = {n}");
        }
    }

    use proptest::prelude::*;

    fn arb_num(n: u32) -> impl Strategy<Value = CycloNum> {
        let deg = CycloField::get(n).degree();
        proptest::collection::vec((-6i64..7, 1i64..4), deg)
            .prop_map(move |v| {
                let coeffs: Vec<BigRational> = v.iter().map(|&(a, b)| q(a, b)).collect();
                CycloNum::reduce(n, &coeffs)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_num(12), b in arb_num(12), c in arb_num(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn reduction_ignores_multiples_of_phi(
            p in proptest::collection::vec(-5i64..6, 0..6),
            r in proptest::collection::vec(-5i64..6, 0..9),
        ) {
            let n = 9u32;
            let phi = cyclotomic_polynomial(n);
            let mut prod = vec![0i64; (p.len() + phi.len()).max(r.len())];
            for (i, a) in p.iter().enumerate() {
                for (j, b) in phi.iter().enumerate() {
                    prod[i + j] += a * b;
                }
            }
            for (i, c) in r.iter().enumerate() {
                prod[i] += c;
            }
            prop_assert_eq!(CycloNum::reduce(n, &ints(&prod)), CycloNum::reduce(n, &ints(&r)));
        }

        #[test]
        fn reduce_is_idempotent(a in arb_num(10)) {
            prop_assert_eq!(CycloNum::reduce(10, a.coeffs()), a);
        }
    }
}
