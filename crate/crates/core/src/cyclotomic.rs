//! Exact arithmetic in the cyclotomic field Q(zeta_N).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Shared handle to a cyclotomic field.
pub type Field = Arc<CyclotomicField>;

/// The field Q(zeta_N) in the power basis modulo the N-th cyclotomic polynomial.
#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    degree: usize,
    modulus: Vec<BigInt>,
    // zeta^k on the power basis for 0 <= k < 2 * degree - 1
    powers: Vec<Vec<(usize, BigInt)>>,
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Field {
        assert!(conductor >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(conductor);
        let degree = modulus.len() - 1;
        let mut powers: Vec<Vec<(usize, BigInt)>> = Vec::new();
        let mut current = vec![BigInt::zero(); degree];
        if degree > 0 {
            current[0] = BigInt::one();
        }
        let count = (2 * degree).max(1);
        for _ in 0..count {
            powers
                .push(current.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect());
            // multiply by zeta and reduce the overflow coefficient
            let top = current[degree - 1].clone();
            for i in (1..degree).rev() {
                current[i] = current[i - 1].clone();
            }
            current[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    current[i] -= &top * &modulus[i];
                }
            }
        }
        Arc::new(CyclotomicField { conductor, degree, modulus, powers })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Dimension over Q, i.e. Euler's totient of the conductor.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Integer coefficients of the cyclotomic polynomial, constant term first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }
}

/// Coefficients of Phi_n, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi = cyclotomic_polynomial(d);
            num = exact_int_div(&num, &phi);
        }
    }
    num
}

fn exact_int_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    quot
}

/// An element of Q(zeta_N).
#[derive(Clone)]
pub struct CycNumber {
    field: Field,
    coords: Vec<BigRational>,
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coords == other.coords
    }
}

impl Eq for CycNumber {}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl CycNumber {
    pub fn zero(field: &Field) -> Self {
        CycNumber { field: field.clone(), coords: vec![BigRational::zero(); field.degree] }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Field, r: BigRational) -> Self {
        let mut c = Self::zero(field);
        c.coords[0] = r;
        c
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(field: &Field, n: i64, d: i64) -> Self {
        Self::from_rational(field, BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// Builds an element from power-basis coordinates.
    pub fn from_coords(field: &Field, coords: Vec<BigRational>) -> Result<Self> {
        if coords.len() != field.degree {
            return Err(Error::Parse {
                position: 0,
                message: format!("expected {} coordinates, found {}", field.degree, coords.len()),
            });
        }
        Ok(CycNumber { field: field.clone(), coords })
    }

    /// zeta_N^k for any integer k.
    pub fn zeta_pow(field: &Field, k: i64) -> Self {
        let n = field.conductor as i64;
        let e = k.rem_euclid(n) as usize;
        Self::zeta_pow_reduced(field, e)
    }

    fn zeta_pow_reduced(field: &Field, e: usize) -> Self {
        // e < conductor; powers table covers exponents below 2 * degree
        let mut acc = Self::one(field);
        let mut rest = e;
        let step = field.powers.len() - 1;
        while rest > 0 {
            let k = rest.min(step);
            let mut p = Self::zero(field);
            for (i, c) in &field.powers[k] {
                p.coords[*i] = BigRational::from_integer(c.clone());
            }
            acc = &acc * &p;
            rest -= k;
        }
        acc
    }

    /// The imaginary unit, when 4 divides the conductor.
    pub fn i(field: &Field) -> Result<Self> {
        Self::root_of_unity(field, 4, 1)
    }

    /// The primitive cube root exp(2 pi i / 3), when 3 divides the conductor.
    pub fn j(field: &Field) -> Result<Self> {
        Self::root_of_unity(field, 3, 1)
    }

    /// zeta_n^k embedded in the field.
    pub fn root_of_unity(field: &Field, n: u32, k: i64) -> Result<Self> {
        if n == 0 || !field.conductor.is_multiple_of(n) {
            return Err(Error::ConductorMismatch { expected: field.conductor, found: n });
        }
        Ok(Self::zeta_pow(field, k * (field.conductor / n) as i64))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.conductor != other.field.conductor {
            return Err(Error::ConductorMismatch { expected: self.field.conductor, found: other.field.conductor });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self * &other.inverse()?)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycNumber { field: self.field.clone(), coords: self.coords.iter().map(|c| c * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm modulo Phi_N.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(&self.field, self.coords[0].recip()));
        }
        let modulus: Vec<BigRational> =
            self.field.modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let inv = qpoly_inverse_mod(&trim(self.coords.clone()), &modulus);
        let mut coords = vec![BigRational::zero(); self.field.degree];
        for (i, c) in inv.into_iter().enumerate() {
            coords[i] = c;
        }
        Ok(CycNumber { field: self.field.clone(), coords })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow((-e) as u32))
        }
    }

    /// Image under zeta_n -> zeta_m^(m/n) in a field whose conductor is a multiple.
    pub fn embed(&self, target: &Field) -> Result<Self> {
        let n = self.field.conductor;
        let m = target.conductor;
        if !m.is_multiple_of(n) {
            return Err(Error::ConductorMismatch { expected: m, found: n });
        }
        let step = (m / n) as i64;
        let mut out = Self::zero(target);
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = &out + &Self::zeta_pow(target, k as i64 * step).scale(c);
        }
        Ok(out)
    }

    /// Canonical coordinate string: comma-separated fractions.
    pub fn to_coords_string(&self) -> String {
        self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn from_coords_string(field: &Field, text: &str) -> Result<Self> {
        let mut coords = Vec::new();
        for (idx, part) in text.split(',').enumerate() {
            let r: BigRational = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse { position: idx, message: format!("invalid fraction '{}'", part.trim()) })?;
            coords.push(r);
        }
        Self::from_coords(field, coords)
    }

    /// A square root inside the field.
    pub fn sqrt(&self) -> SquareRoot {
        if self.is_zero() {
            return SquareRoot::Found(self.clone());
        }
        if let Some(r) = self.to_rational() {
            return match rational_sqrt(&self.field, &r) {
                Some(s) => SquareRoot::Found(s),
                None => SquareRoot::NotInField,
            };
        }
        // kappa = zeta^(2k) * r with r rational
        let n = self.field.conductor as i64;
        for k in 0..n {
            let shifted = self * &Self::zeta_pow(&self.field, -2 * k);
            if let Some(r) = shifted.to_rational() {
                if let Some(s) = rational_sqrt(&self.field, &r) {
                    return SquareRoot::Found(&s * &Self::zeta_pow(&self.field, k));
                }
            }
        }
        SquareRoot::Undetermined
    }
}

/// Outcome of a square-root search.
#[derive(Clone, Debug, PartialEq)]
pub enum SquareRoot {
    Found(CycNumber),
    /// Proven absent from the field.
    NotInField,
    /// Neither found nor excluded by the available methods.
    Undetermined,
}

fn rational_sqrt(field: &Field, r: &BigRational) -> Option<CycNumber> {
    if r.is_zero() {
        return Some(CycNumber::zero(field));
    }
    let negative = r.is_negative();
    let den = r.denom().magnitude().clone();
    let mut rest: BigUint = r.numer().magnitude() * &den;
    // primes that can contribute square roots to Q(zeta_N)
    let mut primes: Vec<u32> = vec![2];
    let mut m = field.conductor;
    let mut p = 3;
    while m > 1 && p <= field.conductor {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 2;
    }
    let mut outside = BigUint::one();
    let mut odd_primes: Vec<u32> = Vec::new();
    for &p in &primes {
        let bp = BigUint::from(p);
        let mut e = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        outside *= bp.pow(e / 2);
        if e % 2 == 1 {
            odd_primes.push(p);
        }
    }
    let root = rest.sqrt();
    if &root * &root != rest {
        return None;
    }
    outside *= root;
    // square root of the signed squarefree kernel
    let mut kernel = CycNumber::one(field);
    let mut remaining: i64 = if negative { -1 } else { 1 };
    for &p in &odd_primes {
        if p == 2 {
            remaining *= 2;
            continue;
        }
        kernel = &kernel * &gauss_sum(field, p);
        if p % 4 == 3 {
            remaining = -remaining;
        }
    }
    let n = field.conductor;
    let unit = match remaining {
        1 => CycNumber::one(field),
        -1 if n.is_multiple_of(4) => CycNumber::zeta_pow(field, (n / 4) as i64),
        2 if n.is_multiple_of(8) => {
            let z = CycNumber::zeta_pow(field, (n / 8) as i64);
            &z + &z.inverse().ok()?
        }
        -2 if n.is_multiple_of(8) => {
            let z = CycNumber::zeta_pow(field, (n / 8) as i64);
            &z + &z.pow(3)
        }
        _ => return None,
    };
    let value = &(&kernel * &unit)
        .scale(&BigRational::new(BigInt::from_biguint(Sign::Plus, outside), BigInt::from_biguint(Sign::Plus, den)));
    let check = value * value;
    debug_assert!(check == CycNumber::from_rational(field, r.clone()));
    (check == CycNumber::from_rational(field, r.clone())).then(|| value.clone())
}

/// Quadratic Gauss sum for an odd prime p dividing the conductor; its square is (-1)^((p-1)/2) p.
fn gauss_sum(field: &Field, p: u32) -> CycNumber {
    let mut sum = CycNumber::zero(field);
    let step = (field.conductor / p) as i64;
    for a in 1..p {
        let residue = (1..p).any(|x| (x as u64 * x as u64) % p as u64 == a as u64);
        let term = CycNumber::zeta_pow(field, a as i64 * step);
        sum = if residue { &sum + &term } else { &sum - &term };
    }
    sum
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn qpoly_rem_quot(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    let lead = b[db].clone();
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            let t = &c * bi;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    (quot, trim(rem))
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn qpoly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    // invariant: s_k * a = r_k (mod m)
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = qpoly_rem_quot(&r0, &r1);
        let s = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r0 is a nonzero constant since Phi_N is irreducible
    let c = r0[0].recip();
    let (_, s) = qpoly_rem_quot(&s0, m);
    s.into_iter().map(|x| x * &c).collect()
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        assert_eq!(self.field.conductor, rhs.field.conductor, "conductor mismatch");
        CycNumber {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        assert_eq!(self.field.conductor, rhs.field.conductor, "conductor mismatch");
        CycNumber {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        assert_eq!(self.field.conductor, rhs.field.conductor, "conductor mismatch");
        let field = &self.field;
        if rhs.is_rational() {
            return self.scale(&rhs.coords[0]);
        }
        if self.is_rational() {
            return rhs.scale(&self.coords[0]);
        }
        let d = field.degree;
        let mut full = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                full[i + j] += a * b;
            }
        }
        let mut coords: Vec<BigRational> = full[..d].to_vec();
        for (k, c) in full.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (i, v) in &field.powers[k] {
                coords[*i] += c * BigRational::from_integer(v.clone());
            }
        }
        CycNumber { field: field.clone(), coords }
    }
}

impl<'a> Div<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn div(self, rhs: &CycNumber) -> CycNumber {
        self * &rhs.inverse().expect("division by zero")
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl CycNumber {
    /// Parseable expression: rational, r*u or (r + s*u) for u in {i, j, j^2}, or a zeta combination.
    pub fn to_expression(&self) -> String {
        if let Some(r) = self.to_rational() {
            return fmt_rational(&r);
        }
        let n = self.field.conductor;
        let mut units: Vec<(&str, CycNumber)> = Vec::new();
        if n.is_multiple_of(4) {
            units.push(("i", CycNumber::zeta_pow(&self.field, (n / 4) as i64)));
        }
        if n.is_multiple_of(3) {
            let j = CycNumber::zeta_pow(&self.field, (n / 3) as i64);
            units.push(("j^2", &j * &j));
            units.push(("j", j));
        }
        for (name, u) in &units {
            let ratio = self * &u.inverse().expect("unit");
            if let Some(r) = ratio.to_rational() {
                return if r.is_one() {
                    name.to_string()
                } else if (-&r).is_one() {
                    format!("-{}", name)
                } else {
                    format!("{}*{}", fmt_rational(&r), name)
                };
            }
        }
        for (name, u) in units.iter().rev() {
            if let Some(k) = u.coords.iter().enumerate().skip(1).find(|(_, c)| !c.is_zero()).map(|(k, _)| k) {
                let s = &self.coords[k] / &u.coords[k];
                if let Some(r) = (self - &u.scale(&s)).to_rational() {
                    let unit = if s.is_one() {
                        name.to_string()
                    } else if (-&s).is_one() {
                        format!("-{}", name)
                    } else {
                        format!("{}*{}", fmt_rational(&s), name)
                    };
                    let joined = format!("{} + {}", fmt_rational(&r), unit);
                    return format!("({})", joined.replace("+ -", "- "));
                }
            }
        }
        let mut parts = Vec::new();
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = match k {
                0 => String::new(),
                1 => format!("zeta({})", n),
                _ => format!("zeta({})^{}", n, k),
            };
            parts.push(match (k, c.is_one(), (-c).is_one()) {
                (0, _, _) => fmt_rational(c),
                (_, true, _) => z,
                (_, _, true) => format!("-{}", z),
                _ => format!("{}*{}", fmt_rational(c), z),
            });
        }
        format!("({})", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expression())
    }
}

/// Small integer helper used by callers that need a machine-size rational check.
pub fn rational_to_i64(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_values() {
        let p12: Vec<i64> = cyclotomic_polynomial(12).iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(p12, vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(84).len() - 1, 24);
    }

    #[test]
    fn constants_in_q12() {
        let k = CyclotomicField::new(12);
        let z = CycNumber::zeta_pow(&k, 1);
        let j = CycNumber::j(&k).unwrap();
        assert!((&(&j * &j) * &j).is_one());
        assert_eq!(j, &z.pow(2) - &CycNumber::one(&k));
        let s3 = &z.scale(&BigRational::from_integer(2.into())) - &z.pow(3);
        assert_eq!(&s3 * &s3, CycNumber::from_int(&k, 3));
        assert_eq!(z.pow(3).pow(2), CycNumber::from_int(&k, -1));
    }

    #[test]
    fn inverse_and_embedding() {
        let k = CyclotomicField::new(12);
        let big = CyclotomicField::new(84);
        let a = &CycNumber::zeta_pow(&k, 1) + &CycNumber::from_ratio(&k, 3, 7);
        assert!((&a * &a.inverse().unwrap()).is_one());
        let j = CycNumber::j(&k).unwrap().embed(&big).unwrap();
        assert_eq!(j, CycNumber::zeta_pow(&big, 28));
        assert!(j.pow(3).is_one());
        let i = CycNumber::i(&k).unwrap().embed(&big).unwrap();
        assert_eq!(i, CycNumber::zeta_pow(&big, 21));
    }

    #[test]
    fn square_roots() {
        let k = CyclotomicField::new(12);
        for (n, d) in [(-3, 1), (3, 1), (-1, 3), (4, 9), (-12, 25), (1, 1)] {
            let r = CycNumber::from_ratio(&k, n, d);
            match r.sqrt() {
                SquareRoot::Found(s) => assert_eq!(&s * &s, r),
                other => panic!("{n}/{d}: {other:?}"),
            }
        }
        assert_eq!(CycNumber::from_int(&k, 2).sqrt(), SquareRoot::NotInField);
        assert_eq!(CycNumber::from_int(&k, 5).sqrt(), SquareRoot::NotInField);
        let j = CycNumber::j(&k).unwrap();
        match j.sqrt() {
            SquareRoot::Found(s) => assert_eq!(&s * &s, j),
            other => panic!("{other:?}"),
        }
    }
}
