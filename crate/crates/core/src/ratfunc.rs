//! Reduced quotients of polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::cyclotomic::{CycNumber, Field};
use crate::error::{Error, Result};
use crate::gcd::gcd;
use crate::poly::{MultiPoly, Var};

/// num / den with gcd(num, den) constant and den of leading coefficient 1.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            let field = den.field().clone();
            return Ok(Self::from_poly(MultiPoly::zero(&field)));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() { (num, den) } else { (num.exact_div(&g)?, den.exact_div(&g)?) };
        let lc = den.leading_coeff().inverse()?;
        Ok(RationalFunction { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.field());
        RationalFunction { num: p, den }
    }

    pub fn constant(c: CycNumber) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_poly(MultiPoly::zero(field))
    }

    pub fn one(field: &Field) -> Self {
        Self::from_poly(MultiPoly::one(field))
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn to_polynomial(&self) -> Option<MultiPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(RationalFunction { num: base.num.pow(k), den: base.den.pow(k) }.renormalized())
    }

    fn renormalized(self) -> Self {
        let lc = self.den.leading_coeff().inverse().expect("nonzero denominator");
        RationalFunction { num: self.num.scale(&lc), den: self.den.scale(&lc) }
    }

    pub fn derive(&self, v: Var) -> Self {
        let n = &(&self.num.derive(v) * &self.den) - &(&self.num * &self.den.derive(v));
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    /// Simultaneous substitution of variables by rational functions.
    pub fn substitute_all(&self, images: &[Option<&RationalFunction>; 4]) -> Result<Self> {
        let num = substitute_poly(&self.num, images)?;
        let den = substitute_poly(&self.den, images)?;
        num.checked_div(&den)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn eval_var(&self, v: Var, value: &CycNumber) -> Result<Self> {
        Self::new(self.num.eval_var(v, value), self.den.eval_var(v, value))
    }

    pub fn embed(&self, target: &Field) -> Result<Self> {
        Self::new(self.num.embed(target)?, self.den.embed(target)?)
    }
}

/// Substitutes rational functions into a polynomial by clearing one common denominator per variable.
pub fn substitute_poly(p: &MultiPoly, images: &[Option<&RationalFunction>; 4]) -> Result<RationalFunction> {
    let field = p.field().clone();
    let mut acc = RationalFunction::zero(&field);
    // group by powers through a direct sum; sizes here stay moderate
    let mut powers: [Vec<RationalFunction>; 4] = Default::default();
    for (m, c) in p.terms() {
        let mut term = RationalFunction::constant(c.clone());
        for v in Var::ALL {
            let e = m.exp(v) as usize;
            if e == 0 {
                continue;
            }
            let factor = match images[v.index()] {
                None => RationalFunction::from_poly(MultiPoly::var(&field, v).pow(e as u32)),
                Some(img) => {
                    let cache = &mut powers[v.index()];
                    if cache.is_empty() {
                        cache.push(RationalFunction::one(&field));
                    }
                    while cache.len() <= e {
                        let next = cache.last().unwrap() * img;
                        cache.push(next);
                    }
                    cache[e].clone()
                }
            };
            term = &term * &factor;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(n, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_polynomial() && rhs.is_polynomial() {
            return RationalFunction { num: &self.num * &rhs.num, den: self.den.clone() }.renormalized();
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
