//! Plane rational maps given by homogeneous triples.

use std::fmt;

use crate::cyclotomic::{CycNumber, Field};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gcd::{gcd, gcd_all};
use crate::integral::{determinant_vanishes, proportional, IntegralMap, Ring, UPoly};
use crate::parse::{parse_with, split_top_level, Bindings};
use crate::poly::{det3, MultiPoly, Var};
use crate::ratfunc::RationalFunction;
use crate::resultant::resultant;

/// A projective point given by homogeneous coordinates.
pub type Point = [CycNumber; 3];

/// (x:y:z) -> (f0:f1:f2) with homogeneous components of a common degree and no common factor.
#[derive(Clone, PartialEq, Eq)]
pub struct BirationalMap {
    comps: [MultiPoly; 3],
    degree: u32,
}

impl fmt::Debug for BirationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BirationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.comps[0], self.comps[1], self.comps[2])
    }
}

fn common_degree(comps: &[MultiPoly; 3]) -> Result<u32> {
    let mut degree = None;
    for c in comps.iter().filter(|c| !c.is_zero()) {
        if c.uses(Var::T) || !c.is_homogeneous() {
            return Err(Error::Precondition(format!("component {} is not a form in x, y, z", c)));
        }
        let d = c.total_degree().expect("nonzero");
        match degree {
            None => degree = Some(d),
            Some(e) if e != d => return Err(Error::Precondition("components have different degrees".into())),
            _ => {}
        }
    }
    degree.ok_or_else(|| Error::Degenerate("all components vanish".into()))
}

/// Removes the common factor of a triple.
fn reduce(comps: [MultiPoly; 3]) -> Result<[MultiPoly; 3]> {
    if comps.iter().all(|c| c.is_zero()) {
        return Err(Error::Degenerate("all components vanish identically".into()));
    }
    let g = gcd_all(comps.iter().filter(|c| !c.is_zero())).expect("nonempty");
    if g.is_constant() {
        return Ok(comps);
    }
    Ok([comps[0].exact_div(&g)?, comps[1].exact_div(&g)?, comps[2].exact_div(&g)?])
}

fn identity_triple(field: &Field) -> [MultiPoly; 3] {
    [MultiPoly::var(field, Var::X), MultiPoly::var(field, Var::Y), MultiPoly::var(field, Var::Z)]
}

/// Whether two triples agree projectively.
pub fn triples_proportional(a: &[MultiPoly; 3], b: &[MultiPoly; 3]) -> bool {
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if &a[i] * &b[j] != &a[j] * &b[i] {
            return false;
        }
    }
    a.iter().any(|c| !c.is_zero()) == b.iter().any(|c| !c.is_zero())
}

fn substitute_triple(map: &[MultiPoly; 3], args: &[MultiPoly; 3]) -> [MultiPoly; 3] {
    let images = [Some(&args[0]), Some(&args[1]), Some(&args[2]), None];
    [map[0].substitute_all(&images), map[1].substitute_all(&images), map[2].substitute_all(&images)]
}

impl BirationalMap {
    pub fn new(f0: MultiPoly, f1: MultiPoly, f2: MultiPoly) -> Result<Self> {
        let comps = reduce([f0, f1, f2])?;
        let degree = common_degree(&comps)?;
        Ok(BirationalMap { comps, degree })
    }

    pub fn identity(field: &Field) -> Self {
        BirationalMap { comps: identity_triple(field), degree: 1 }
    }

    /// The map (x, y) -> (first, second) of the chart z = 1.
    pub fn from_affine(first: &RationalFunction, second: &RationalFunction) -> Result<Self> {
        for r in [first, second] {
            if r.numerator().uses(Var::Z)
                || r.numerator().uses(Var::T)
                || r.denominator().uses(Var::Z)
                || r.denominator().uses(Var::T)
            {
                return Err(Error::Precondition("affine components must only involve x and y".into()));
            }
        }
        let a = first.numerator() * second.denominator();
        let b = second.numerator() * first.denominator();
        let c = first.denominator() * second.denominator();
        let d = [&a, &b, &c].iter().filter_map(|p| p.total_degree()).max().unwrap_or(0);
        Self::new(a.homogenize(Var::Z, d), b.homogenize(Var::Z, d), c.homogenize(Var::Z, d))
    }

    /// Parses "(f0 : f1 : f2)" or "(I1, I2)".
    pub fn parse(text: &str, field: &Field, bindings: &Bindings) -> Result<Self> {
        let trimmed = text.trim();
        let start = text.len() - text.trim_start().len();
        let (inner, offset) = match trimmed.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            Some(inner) => (inner, start + 1),
            None => (trimmed, start),
        };
        let colon = split_top_level(inner, ':');
        if colon.len() == 3 {
            let parts: Vec<MultiPoly> = colon
                .iter()
                .map(|(off, s)| {
                    let r = parse_with(s, field, bindings, offset + off)?;
                    r.to_polynomial().ok_or(Error::Parse { position: offset + off, message: "expected a form".into() })
                })
                .collect::<Result<_>>()?;
            let [a, b, c]: [MultiPoly; 3] = parts.try_into().expect("three parts");
            return Self::new(a, b, c);
        }
        let comma = split_top_level(inner, ',');
        if comma.len() == 2 {
            let a = parse_with(comma[0].1, field, bindings, offset + comma[0].0)?;
            let b = parse_with(comma[1].1, field, bindings, offset + comma[1].0)?;
            return Self::from_affine(&a, &b);
        }
        Err(Error::Parse { position: start, message: "expected (f0 : f1 : f2) or (I1, I2)".into() })
    }

    pub fn field(&self) -> &Field {
        self.comps[0].field()
    }

    pub fn components(&self) -> &[MultiPoly; 3] {
        &self.comps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The two affine components in the chart z = 1.
    pub fn affine_pair(&self) -> Result<(RationalFunction, RationalFunction)> {
        let den = self.comps[2].dehomogenize(Var::Z);
        if den.is_zero() {
            return Err(Error::Degenerate("the map sends the plane into the line z = 0".into()));
        }
        Ok((
            RationalFunction::new(self.comps[0].dehomogenize(Var::Z), den.clone())?,
            RationalFunction::new(self.comps[1].dehomogenize(Var::Z), den)?,
        ))
    }

    /// self o other, without removing common factors.
    pub fn compose_raw(&self, other: &BirationalMap) -> [MultiPoly; 3] {
        substitute_triple(&self.comps, &other.comps)
    }

    /// self o other, reduced.
    pub fn compose(&self, other: &BirationalMap) -> Result<BirationalMap> {
        let raw = self.compose_raw(other);
        if raw.iter().all(|c| c.is_zero()) {
            return Err(Error::Degenerate("the inner map sends the plane into the indeterminacy locus".into()));
        }
        Self::new(raw[0].clone(), raw[1].clone(), raw[2].clone())
    }

    /// Equality up to a nonzero factor.
    pub fn projective_equal(&self, other: &BirationalMap) -> bool {
        triples_proportional(&self.comps, &other.comps)
    }

    pub fn is_identity(&self) -> bool {
        triples_proportional(&self.comps, &identity_triple(self.field()))
    }

    /// Whether the composite maps[0] o maps[1] o ... o maps[k-1] is the identity.
    ///
    /// The composite is restricted to the affine lines y = c x; the identity minors have degree
    /// at most the product of the degrees plus one, so that many lines plus one certify vanishing.
    pub fn chain_is_identity(maps: &[&BirationalMap]) -> bool {
        let field = maps[0].field().clone();
        let ring = Ring::new(&field);
        let integral: Vec<IntegralMap> = maps.iter().map(|m| IntegralMap::new(&m.comps, m.degree)).collect();
        let total: u64 = maps.iter().map(|m| m.degree as u64).product();
        let needed = total + 2;
        let zero = BigInt::zero();
        let one = BigInt::one();
        let mut good = 0u64;
        let mut k: i64 = 0;
        while good < needed {
            if k as u64 > 4 * needed + 32 {
                return false;
            }
            let c = BigInt::from(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
            k += 1;
            let line: [UPoly; 3] = [
                vec![ring.integer(&zero), ring.integer(&one)],
                if c.is_zero() { Vec::new() } else { vec![ring.integer(&zero), ring.integer(&c)] },
                vec![ring.integer(&one)],
            ];
            let mut point = line.clone();
            let mut degenerate = false;
            for m in integral.iter().rev() {
                point = m.apply(&ring, &point);
                if point.iter().all(|p| p.is_empty()) {
                    degenerate = true;
                    break;
                }
            }
            if degenerate {
                continue;
            }
            if !proportional(&ring, &point, &line) {
                return false;
            }
            good += 1;
        }
        true
    }

    /// Whether m, f(m) and f(f(m)) are collinear for every m.
    ///
    /// det[m; f(m); f(f(m))] has degree at most 1 + d + d^2 and is restricted to enough lines y = c x.
    pub fn orbits_are_aligned(&self) -> bool {
        let field = self.field().clone();
        let ring = Ring::new(&field);
        let integral = IntegralMap::new(&self.comps, self.degree);
        let d = self.degree as u64;
        let needed = 2 + d + d * d;
        let zero = BigInt::zero();
        let one = BigInt::one();
        let mut good = 0u64;
        let mut k: i64 = 0;
        while good < needed {
            if k as u64 > 4 * needed + 32 {
                return false;
            }
            let c = BigInt::from(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
            k += 1;
            let line: [UPoly; 3] = [
                vec![ring.integer(&zero), ring.integer(&one)],
                if c.is_zero() { Vec::new() } else { vec![ring.integer(&zero), ring.integer(&c)] },
                vec![ring.integer(&one)],
            ];
            let first = integral.apply(&ring, &line);
            if first.iter().all(|p| p.is_empty()) {
                continue;
            }
            let second = integral.apply(&ring, &first);
            if second.iter().all(|p| p.is_empty()) {
                continue;
            }
            if !determinant_vanishes(&ring, &line, &first, &second) {
                return false;
            }
            good += 1;
        }
        true
    }

    /// Whether f^n is the identity while no smaller positive power is.
    pub fn verify_period(&self, n: u32) -> Result<bool> {
        if !(2..=3).contains(&n) {
            return Err(Error::Precondition("period must be 2 or 3".into()));
        }
        if self.is_identity() {
            return Err(Error::Precondition("the identity has no period".into()));
        }
        if n == 3 && Self::chain_is_identity(&[self, self]) {
            return Ok(false);
        }
        let chain: Vec<&BirationalMap> = std::iter::repeat_n(self, n as usize).collect();
        Ok(Self::chain_is_identity(&chain))
    }

    /// Jacobian determinant of the triple.
    pub fn jacobian(&self) -> Result<MultiPoly> {
        let vars = [Var::X, Var::Y, Var::Z];
        let m: [[MultiPoly; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| self.comps[i].derive(vars[j])));
        let det = det3(&m);
        if det.is_zero() {
            return Err(Error::Degenerate("Jacobian determinant vanishes identically".into()));
        }
        Ok(det)
    }

    /// One-dimensional part of the fixed locus, normalized; constant when fixed points are isolated.
    pub fn fixed_curve(&self) -> Result<MultiPoly> {
        if self.is_identity() {
            return Err(Error::Precondition("every point of the identity is fixed".into()));
        }
        let [x, y, z] = identity_triple(self.field());
        let [f0, f1, f2] = &self.comps;
        let minors = [&(&x * f1) - &(&y * f0), &(&x * f2) - &(&z * f0), &(&y * f2) - &(&z * f1)];
        Ok(gcd_all(minors.iter().filter(|m| !m.is_zero())).expect("not the identity"))
    }

    /// Whether every component vanishes at p.
    pub fn is_indeterminate_at(&self, p: &Point) -> Result<bool> {
        if p.iter().all(|c| c.is_zero()) {
            return Err(Error::Precondition("(0:0:0) is not a point".into()));
        }
        let target = p[0].field().clone();
        for c in &self.comps {
            let c = if target.conductor() == c.field().conductor() { c.clone() } else { c.embed(&target)? };
            if !c.eval(p).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Eliminants certifying where the indeterminacy points can lie.
    pub fn indeterminacy_certificate(&self) -> Result<IndeterminacyCertificate> {
        let field = self.field().clone();
        let chart: Vec<MultiPoly> = self.comps.iter().map(|c| c.dehomogenize(Var::Z)).collect();
        let mut combos = chart.clone();
        let mix = |a: i64, b: i64, c: i64| {
            &(&chart[0].scale(&CycNumber::from_int(&field, a)) + &chart[1].scale(&CycNumber::from_int(&field, b)))
                + &chart[2].scale(&CycNumber::from_int(&field, c))
        };
        combos.push(mix(1, 2, 3));
        combos.push(mix(3, -1, 2));
        let eliminant = |v: Var| -> MultiPoly {
            let mut acc = MultiPoly::zero(&field);
            for i in 0..combos.len() {
                for j in i + 1..combos.len() {
                    let (a, b) = (&combos[i], &combos[j]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let r = if a.degree_in(v) == 0 {
                        if b.degree_in(v) == 0 {
                            continue;
                        }
                        a.pow(b.degree_in(v))
                    } else if b.degree_in(v) == 0 {
                        b.pow(a.degree_in(v))
                    } else {
                        resultant(a, b, v).expect("both involve the variable")
                    };
                    if !r.is_zero() {
                        acc = gcd(&acc, &r);
                    }
                }
            }
            acc
        };
        let x_eliminant = eliminant(Var::Y);
        let y_eliminant = eliminant(Var::X);
        let at_infinity =
            gcd_all(self.comps.iter().map(|c| c.eval_var(Var::Z, &CycNumber::zero(&field))).collect::<Vec<_>>().iter())
                .expect("three");
        Ok(IndeterminacyCertificate { x_eliminant, y_eliminant, at_infinity })
    }

    /// If the line a x + b y + c z = 0 is contracted, the point it is sent to.
    pub fn contracted_line_image(&self, line: &Point) -> Result<Option<Point>> {
        let field = self.field().clone();
        let (s, t) = (MultiPoly::var(&field, Var::X), MultiPoly::var(&field, Var::Y));
        let [p, q] = line_basis(line)?;
        let param: [MultiPoly; 3] = std::array::from_fn(|i| &s.scale(&p[i]) + &t.scale(&q[i]));
        let img = substitute_triple(&self.comps, &param);
        let reduced = match reduce(img) {
            Ok(r) => r,
            Err(_) => return Ok(None),
        };
        if reduced.iter().all(|c| c.is_constant()) {
            let pt: Point =
                std::array::from_fn(|i| reduced[i].constant_value().unwrap_or_else(|| CycNumber::zero(&field)));
            return Ok(Some(pt));
        }
        Ok(None)
    }

    pub fn embed(&self, target: &Field) -> Result<Self> {
        Ok(BirationalMap {
            comps: [self.comps[0].embed(target)?, self.comps[1].embed(target)?, self.comps[2].embed(target)?],
            degree: self.degree,
        })
    }
}

/// Two points spanning the line a x + b y + c z = 0.
fn line_basis(line: &Point) -> Result<[Point; 2]> {
    let field = line[0].field().clone();
    let zero = CycNumber::zero(&field);
    let k = line.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::Precondition("zero line".into()))?;
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let mut basis: [Point; 2] =
        [[zero.clone(), zero.clone(), zero.clone()], [zero.clone(), zero.clone(), zero.clone()]];
    for (slot, &i) in others.iter().enumerate() {
        basis[slot][i] = line[k].clone();
        basis[slot][k] = -&line[i];
    }
    Ok(basis)
}

/// Where indeterminacy points may lie: x-coordinates in the chart z = 1 are roots of
/// `x_eliminant`, y-coordinates roots of `y_eliminant`, points at infinity zeros of `at_infinity`.
#[derive(Clone, Debug)]
pub struct IndeterminacyCertificate {
    pub x_eliminant: MultiPoly,
    pub y_eliminant: MultiPoly,
    pub at_infinity: MultiPoly,
}

/// Number of times `curve` divides `p`.
pub fn multiplicity(p: &MultiPoly, curve: &MultiPoly) -> u32 {
    if curve.is_constant() || p.is_zero() {
        return 0;
    }
    let mut k = 0;
    let mut rest = p.clone();
    while let Some(q) = rest.try_div(curve) {
        rest = q;
        k += 1;
    }
    k
}
