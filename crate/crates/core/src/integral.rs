//! Dense univariate arithmetic over Z[zeta] for restricting maps to lines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclotomic::Field;
use crate::poly::MultiPoly;

/// Element of Z[zeta] in the power basis.
type Elt = Vec<BigInt>;

/// Univariate polynomial with coefficients in Z[zeta], constant term first.
pub(crate) type UPoly = Vec<Elt>;

#[derive(Clone, Debug)]
pub(crate) struct Ring {
    modulus: Vec<BigInt>,
    degree: usize,
}

impl Ring {
    pub(crate) fn new(field: &Field) -> Self {
        Ring { modulus: field.modulus().to_vec(), degree: field.degree() }
    }

    fn zero(&self) -> Elt {
        vec![BigInt::zero(); self.degree]
    }

    pub(crate) fn integer(&self, n: &BigInt) -> Elt {
        let mut e = self.zero();
        e[0] = n.clone();
        e
    }

    fn is_zero(e: &Elt) -> bool {
        e.iter().all(|c| c.is_zero())
    }

    fn add_assign(a: &mut Elt, b: &Elt) {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
    }

    fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        let n = self.degree;
        let mut wide = vec![BigInt::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                wide[i + j] += x * y;
            }
        }
        for k in (n..wide.len()).rev() {
            let c = std::mem::take(&mut wide[k]);
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                wide[k - n + i] -= &c * &self.modulus[i];
            }
        }
        wide.truncate(n);
        wide
    }

    fn trim(p: &mut UPoly) {
        while p.last().is_some_and(Self::is_zero) {
            p.pop();
        }
    }

    pub(crate) fn poly_mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !Self::is_zero(x)) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !Self::is_zero(y)) {
                let prod = self.mul(x, y);
                Self::add_assign(&mut out[i + j], &prod);
            }
        }
        Self::trim(&mut out);
        out
    }

    fn poly_add_assign(&self, a: &mut UPoly, b: &UPoly) {
        if a.len() < b.len() {
            a.resize(b.len(), self.zero());
        }
        for (x, y) in a.iter_mut().zip(b) {
            Self::add_assign(x, y);
        }
        Self::trim(a);
    }

    fn poly_sub_assign(&self, a: &mut UPoly, b: &UPoly) {
        if a.len() < b.len() {
            a.resize(b.len(), self.zero());
        }
        for (x, y) in a.iter_mut().zip(b) {
            for (u, v) in x.iter_mut().zip(y) {
                *u -= v;
            }
        }
        Self::trim(a);
    }

    fn poly_scale(&self, a: &UPoly, c: &Elt) -> UPoly {
        let mut out: UPoly = a.iter().map(|x| self.mul(x, c)).collect();
        Self::trim(&mut out);
        out
    }
}

/// Homogeneous triple with coefficients cleared of denominators.
#[derive(Clone, Debug)]
pub(crate) struct IntegralMap {
    comps: [Vec<([u16; 3], Elt)>; 3],
    degree: u32,
}

impl IntegralMap {
    pub(crate) fn new(comps: &[MultiPoly; 3], degree: u32) -> Self {
        let mut den = BigInt::one();
        for c in comps {
            for (_, coeff) in c.terms() {
                for r in coeff.coords() {
                    den = den.lcm(r.denom());
                }
            }
        }
        let convert = |p: &MultiPoly| {
            p.terms()
                .map(|(m, c)| {
                    let coords = c.coords().iter().map(|r| (r * &den).to_integer()).collect();
                    ([m.0[0], m.0[1], m.0[2]], coords)
                })
                .collect()
        };
        IntegralMap { comps: [convert(&comps[0]), convert(&comps[1]), convert(&comps[2])], degree }
    }

    /// Image of a parametrized point, divided by the integer content.
    pub(crate) fn apply(&self, ring: &Ring, point: &[UPoly; 3]) -> [UPoly; 3] {
        let d = self.degree as usize;
        let powers: Vec<Vec<UPoly>> = point
            .iter()
            .map(|p| {
                let mut pw = vec![vec![ring.integer(&BigInt::one())]];
                for e in 1..=d {
                    pw.push(ring.poly_mul(&pw[e - 1], p));
                }
                pw
            })
            .collect();
        let mut out: [UPoly; 3] = Default::default();
        for (k, comp) in self.comps.iter().enumerate() {
            let mut acc: UPoly = Vec::new();
            for (exp, coeff) in comp {
                let mono = ring.poly_mul(
                    &ring.poly_mul(&powers[0][exp[0] as usize], &powers[1][exp[1] as usize]),
                    &powers[2][exp[2] as usize],
                );
                ring.poly_add_assign(&mut acc, &ring.poly_scale(&mono, coeff));
            }
            out[k] = acc;
        }
        remove_content(&mut out);
        out
    }
}

fn remove_content(triple: &mut [UPoly; 3]) {
    let mut g = BigInt::zero();
    for c in triple.iter().flatten().flatten() {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for c in triple.iter_mut().flatten().flatten() {
        *c = &*c / &g;
    }
}

/// Whether two parametrized triples are proportional.
pub(crate) fn proportional(ring: &Ring, a: &[UPoly; 3], b: &[UPoly; 3]) -> bool {
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if ring.poly_mul(&a[i], &b[j]) != ring.poly_mul(&a[j], &b[i]) {
            return false;
        }
    }
    true
}

/// Whether det[a; b; c] is the zero polynomial.
pub(crate) fn determinant_vanishes(ring: &Ring, a: &[UPoly; 3], b: &[UPoly; 3], c: &[UPoly; 3]) -> bool {
    let minor = |i: usize, j: usize| {
        let mut m = ring.poly_mul(&b[i], &c[j]);
        let n = ring.poly_mul(&b[j], &c[i]);
        ring.poly_sub_assign(&mut m, &n);
        m
    };
    let mut acc = ring.poly_mul(&a[0], &minor(1, 2));
    ring.poly_sub_assign(&mut acc, &ring.poly_mul(&a[1], &minor(0, 2)));
    ring.poly_add_assign(&mut acc, &ring.poly_mul(&a[2], &minor(0, 1)));
    acc.is_empty()
}
