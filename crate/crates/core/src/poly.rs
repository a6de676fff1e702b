//! Sparse multivariate polynomials in x, y, z, t over Q(zeta_N).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use crate::cyclotomic::{CycNumber, Field};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z", "t"][self.index()]
    }
}

/// Exponent vector over (x, y, z, t), ordered graded-lexicographically with x < y < z < t.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; 4]);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0[3].cmp(&other.0[3]))
            .then(self.0[2].cmp(&other.0[2]))
            .then(self.0[1].cmp(&other.0[1]))
            .then(self.0[0].cmp(&other.0[0]))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; 4])
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = [0; 4];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn xy(i: u16, j: u16) -> Self {
        Monomial([i, j, 0, 0])
    }

    pub fn xyz(i: u16, j: u16, k: u16) -> Self {
        Monomial([i, j, k, 0])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(m)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient(&self, other: &Self) -> Self {
        let mut m = other.0;
        for (a, b) in m.iter_mut().zip(self.0) {
            *a -= b;
        }
        Monomial(m)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0) {
            *a = (*a).min(b);
        }
        Monomial(m)
    }

    pub fn without(&self, v: Var) -> Self {
        let mut m = self.0;
        m[v.index()] = 0;
        Monomial(m)
    }
}

#[derive(Clone)]
pub struct MultiPoly {
    field: Field,
    terms: BTreeMap<Monomial, CycNumber>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl MultiPoly {
    pub fn zero(field: &Field) -> Self {
        MultiPoly { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(CycNumber::one(field))
    }

    pub fn constant(c: CycNumber) -> Self {
        let field = c.field().clone();
        Self::monomial(&field, Monomial::one(), c)
    }

    pub fn from_int(field: &Field, n: i64) -> Self {
        Self::constant(CycNumber::from_int(field, n))
    }

    pub fn var(field: &Field, v: Var) -> Self {
        Self::monomial(field, Monomial::var(v, 1), CycNumber::one(field))
    }

    pub fn monomial(field: &Field, m: Monomial, c: CycNumber) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { field: field.clone(), terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, CycNumber)>>(field: &Field, terms: I) -> Self {
        let mut p = Self::zero(field);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CycNumber)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> CycNumber {
        self.terms.get(m).cloned().unwrap_or_else(|| CycNumber::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_value(&self) -> Option<CycNumber> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::one()))
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &CycNumber)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> CycNumber {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(|| CycNumber::zero(&self.field))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v) as u32).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v) as u32).min().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Homogeneous component of the given total degree.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, c.clone()));
        MultiPoly { field: self.field.clone(), terms: terms.collect() }
    }

    pub fn add_term(&mut self, m: Monomial, c: CycNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field);
        }
        MultiPoly { field: self.field.clone(), terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.scale(&CycNumber::from_rational(&self.field, r.clone()))
    }

    pub fn mul_term(&self, m: &Monomial, c: &CycNumber) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field);
        }
        MultiPoly { field: self.field.clone(), terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
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

    /// Scales so that the grlex-leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero")),
        }
    }

    /// Exact quotient; fails when the remainder is nonzero.
    pub fn exact_div(&self, d: &MultiPoly) -> Result<Self> {
        self.try_div(d).ok_or(Error::InexactDivision)
    }

    pub fn try_div(&self, d: &MultiPoly) -> Option<Self> {
        let (lm, lc) = match d.leading() {
            None => return None,
            Some((m, c)) => (*m, c.clone()),
        };
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.inverse().ok()?));
        }
        let inv = lc.inverse().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.field);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient(m);
            let qc = c * &inv;
            for (dm, dc) in d.terms.iter() {
                rem.add_term(dm.mul(&qm), -&(dc * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    pub fn divides(&self, other: &MultiPoly) -> bool {
        other.try_div(self).is_some()
    }

    pub fn derive(&self, v: Var) -> Self {
        let i = v.index();
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut nm = m.0;
            nm[i] -= 1;
            out.add_term(Monomial(nm), c.scale(&BigRational::from_integer(e.into())));
        }
        out
    }

    /// Simultaneous substitution of the variables by the given images (None keeps the variable).
    pub fn substitute_all(&self, images: &[Option<&MultiPoly>; 4]) -> Self {
        let mut cache: [Vec<MultiPoly>; 4] = Default::default();
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            let mut kept = Monomial::one();
            for v in Var::ALL {
                let e = m.exp(v) as usize;
                if e == 0 {
                    continue;
                }
                match images[v.index()] {
                    None => kept.0[v.index()] = e as u16,
                    Some(img) => {
                        let powers = &mut cache[v.index()];
                        if powers.is_empty() {
                            powers.push(Self::one(&self.field));
                        }
                        while powers.len() <= e {
                            let next = powers.last().unwrap() * img;
                            powers.push(next);
                        }
                        term = &term * &powers[e];
                    }
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm.mul(&kept), tc);
            }
        }
        out
    }

    pub fn substitute(&self, v: Var, image: &MultiPoly) -> Self {
        let mut images: [Option<&MultiPoly>; 4] = [None; 4];
        images[v.index()] = Some(image);
        self.substitute_all(&images)
    }

    /// Partial evaluation of one variable.
    pub fn eval_var(&self, v: Var, value: &CycNumber) -> Self {
        let i = v.index();
        let mut powers: Vec<CycNumber> = vec![CycNumber::one(&self.field)];
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out.add_term(m.without(v), c * &powers[e]);
        }
        out
    }

    /// Full evaluation; missing values are taken as zero.
    pub fn eval(&self, values: &[CycNumber]) -> CycNumber {
        let mut acc = CycNumber::zero(&self.field);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let base = values.get(k).cloned().unwrap_or_else(|| CycNumber::zero(&self.field));
                    t = &t * &base.pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficients as a polynomial in v: entry k multiplies v^k.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let n = self.degree_in(v) as usize;
        let mut out = vec![Self::zero(&self.field); n + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].terms.insert(m.without(v), c.clone());
        }
        out
    }

    /// Rebuilds sum_k coeffs[k] * v^k.
    pub fn from_coefficients(field: &Field, v: Var, coeffs: &[MultiPoly]) -> Self {
        let mut out = Self::zero(field);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                out.add_term(m.mul(&Monomial::var(v, k as u16)), a.clone());
            }
        }
        out
    }

    /// Homogenizes with respect to `h` to the given total degree.
    pub fn homogenize(&self, h: Var, degree: u32) -> Self {
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let d = m.degree();
            assert!(d <= degree, "homogenization degree too small");
            let mut nm = m.0;
            nm[h.index()] += (degree - d) as u16;
            out.add_term(Monomial(nm), c.clone());
        }
        out
    }

    pub fn dehomogenize(&self, h: Var) -> Self {
        self.eval_var(h, &CycNumber::one(&self.field))
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(*first, |acc, m| acc.gcd(m)),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(k, c)| (m.quotient(k), c.clone())).collect(),
        }
    }

    pub fn embed(&self, target: &Field) -> Result<Self> {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            out.add_term(*m, c.embed(target)?);
        }
        Ok(out)
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        let mut out = Self::zero(&self.field);
        for (m, c) in &self.terms {
            let mut nm = m.0;
            nm.swap(a.index(), b.index());
            out.add_term(Monomial(nm), c.clone());
        }
        out
    }

    /// Whether self = c * other for a nonzero constant c.
    pub fn is_proportional(&self, other: &MultiPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.monic() == other.monic()
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.field);
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        let mut acc: std::collections::HashMap<Monomial, CycNumber> = std::collections::HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(e) => *e = &*e + &p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { field: self.field.clone(), terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

fn monomial_string(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{}", v.name(), e)),
        }
    }
    parts.join("*")
}

fn term_string(m: &Monomial, c: &CycNumber) -> String {
    let coeff = c.to_expression();
    if m.is_one() {
        return coeff;
    }
    let mono = monomial_string(m);
    match coeff.as_str() {
        "1" => mono,
        "-1" => format!("-{}", mono),
        _ => format!("{}*{}", coeff, mono),
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let t = term_string(m, c);
            if first {
                write!(f, "{}", t)?;
                first = false;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", t)?;
            }
        }
        Ok(())
    }
}

/// Shorthands for building polynomials in tests and tables.
pub fn x(field: &Field) -> MultiPoly {
    MultiPoly::var(field, Var::X)
}

pub fn y(field: &Field) -> MultiPoly {
    MultiPoly::var(field, Var::Y)
}

pub fn z(field: &Field) -> MultiPoly {
    MultiPoly::var(field, Var::Z)
}

pub fn t(field: &Field) -> MultiPoly {
    MultiPoly::var(field, Var::T)
}

/// Cofactor expansion of a 3x3 determinant.
pub fn det3(m: &[[MultiPoly; 3]; 3]) -> MultiPoly {
    let minor = |a: &MultiPoly, b: &MultiPoly, c: &MultiPoly, d: &MultiPoly| &(a * d) - &(b * c);
    let t0 = &m[0][0] * &minor(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
    let t1 = &m[0][1] * &minor(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
    let t2 = &m[0][2] * &minor(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
    &(&t0 - &t1) + &t2
}

impl MultiPoly {
    /// Whether the rational constant r equals this polynomial.
    pub fn is_rational_constant(&self, r: &BigRational) -> bool {
        match self.constant_value() {
            Some(c) => c.to_rational().is_some_and(|v| &v == r),
            None => false,
        }
    }

    pub fn is_one(&self) -> bool {
        self.is_rational_constant(&BigRational::one())
    }
}
