//! Abelian relations among a first integral and its images under a trivolution.

use std::collections::BTreeSet;

use crate::birational::BirationalMap;
use crate::cyclotomic::CycNumber;
use crate::error::{Error, Result};
use crate::gcd::lcm;
use crate::linalg::Matrix;
use crate::poly::{Monomial, MultiPoly};
use crate::ratfunc::{substitute_poly, RationalFunction};

/// f o T, reduced.
pub fn pullback(f: &RationalFunction, t: &BirationalMap) -> Result<RationalFunction> {
    let (u, v) = t.affine_pair()?;
    let images = [Some(&u), Some(&v), None, None];
    let num = substitute_poly(f.numerator(), &images)?;
    let den = substitute_poly(f.denominator(), &images)?;
    if den.is_zero() {
        return Err(Error::Degenerate("the composition is undefined everywhere".into()));
    }
    num.checked_div(&den)
}

/// Three functions defining a 3-web.
#[derive(Clone, Debug)]
pub struct WebTriple {
    functions: [RationalFunction; 3],
    provenance: Option<(RationalFunction, BirationalMap)>,
}

impl WebTriple {
    /// Pairwise non-proportional functions.
    pub fn new(f0: RationalFunction, f1: RationalFunction, f2: RationalFunction) -> Result<Self> {
        let functions = [f0, f1, f2];
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let (a, b) = (&functions[i], &functions[j]);
            if a.is_zero() || b.is_zero() {
                return Err(Error::Degenerate("a web function vanishes".into()));
            }
            let ratio = a.checked_div(b)?;
            if ratio.numerator().is_constant() && ratio.denominator().is_constant() {
                return Err(Error::Degenerate(format!("f{i} and f{j} are proportional")));
            }
        }
        Ok(WebTriple { functions, provenance: None })
    }

    /// (f0, f0 o T, f0 o T^2).
    pub fn from_map(f0: RationalFunction, t: &BirationalMap) -> Result<Self> {
        let f1 = pullback(&f0, t)?;
        let f2 = pullback(&f0, &t.compose(t)?)?;
        let mut out = Self::new(f0.clone(), f1, f2)?;
        out.provenance = Some((f0, t.clone()));
        Ok(out)
    }

    /// Numerators over a common denominator, given as polynomials.
    pub fn from_numerators(numerators: [MultiPoly; 3], denominator: MultiPoly) -> Result<Self> {
        let [a, b, c] = numerators.map(|n| RationalFunction::new(n, denominator.clone()));
        Self::new(a?, b?, c?)
    }

    pub fn functions(&self) -> &[RationalFunction; 3] {
        &self.functions
    }

    pub fn provenance(&self) -> Option<&(RationalFunction, BirationalMap)> {
        self.provenance.as_ref()
    }

    /// The numerators of the three functions over their least common denominator.
    pub fn common_numerators(&self) -> Result<[MultiPoly; 3]> {
        let common =
            self.functions.iter().fold(MultiPoly::one(self.functions[0].field()), |acc, f| lcm(&acc, f.denominator()));
        let [a, b, c] = self.functions.clone().map(|f| Ok(f.numerator() * &common.exact_div(f.denominator())?));
        Ok([a?, b?, c?])
    }
}

/// A nonzero (a0, a1, a2), first nonzero coordinate 1, with a0 f0 + a1 f1 + a2 f2 = 0.
pub fn abelian_relation(w: &WebTriple) -> Result<Option<[CycNumber; 3]>> {
    let nums = w.common_numerators()?;
    let field = nums[0].field().clone();
    let monomials: BTreeSet<Monomial> = nums.iter().flat_map(|n| n.terms().map(|(m, _)| *m)).collect();
    let rows = monomials.iter().map(|m| nums.iter().map(|n| n.coeff(m)).collect()).collect();
    let matrix = Matrix::from_rows(rows)?;
    let Some(v) = matrix.kernel().into_iter().next() else {
        return Ok(None);
    };
    let relation = [v[0].clone(), v[1].clone(), v[2].clone()];
    let combo = nums.iter().zip(&relation).fold(MultiPoly::zero(&field), |acc, (n, a)| &acc + &n.scale(a));
    if !combo.is_zero() {
        return Err(Error::Inconsistent("kernel vector does not annihilate the numerators".into()));
    }
    Ok(Some(relation))
}
