//! Multivariate GCD by evaluation, recursive image GCDs and Newton interpolation,
//! every candidate being certified by exact trial division.

use std::collections::BTreeMap;

use crate::cyclotomic::CycNumber;
use crate::poly::{Monomial, MultiPoly, Var};

/// Greatest common divisor with grlex-leading coefficient 1; gcd(p, 0) = p normalized.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let field = a.field().clone();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(&field);
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let common = ma.gcd(&mb);
    let core = gcd_core(&a.div_monomial(&ma), &b.div_monomial(&mb));
    core.mul_term(&common, &CycNumber::one(&field)).monic()
}

/// GCD of a list; the empty list gives zero.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a MultiPoly>>(polys: I) -> Option<MultiPoly> {
    let mut acc: Option<MultiPoly> = None;
    for p in polys {
        acc = Some(match acc {
            None => p.monic(),
            Some(g) => {
                if g.is_constant() && !g.is_zero() {
                    return Some(g);
                }
                gcd(&g, p)
            }
        });
    }
    acc
}

/// Least common multiple, normalized.
pub fn lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let g = gcd(a, b);
    (a * &b.exact_div(&g).expect("gcd divides")).monic()
}

fn gcd_core(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let field = a.field().clone();
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(&field);
    }
    for v in Var::ALL {
        let (with, without) = match (a.uses(v), b.uses(v)) {
            (true, false) => (a, b),
            (false, true) => (b, a),
            _ => continue,
        };
        let mut g = without.clone();
        for c in with.coefficients_in(v) {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_constant() {
                break;
            }
        }
        return g.monic();
    }
    let vars: Vec<Var> = Var::ALL.iter().copied().filter(|v| a.uses(*v)).collect();
    if vars.len() == 1 {
        let v = vars[0];
        let g = dense_gcd(&to_dense(a, v), &to_dense(b, v));
        return from_dense(&field, &g, v);
    }
    let e = vars[0];
    let (ca, pa) = content_split(a, e);
    let (cb, pb) = content_split(b, e);
    let content = from_dense(&field, &dense_gcd(&ca, &cb), e);
    let la = lead_in_rest(&pa, e);
    let lb = lead_in_rest(&pb, e);
    let gamma = dense_gcd(&la, &lb);
    let bound = (gamma.len() - 1) + pa.degree_in(e).min(pb.degree_in(e)) as usize + 1;

    let mut interp: Option<MultiPoly> = None;
    let mut lead_mono: Option<Monomial> = None;
    let mut newton = MultiPoly::one(&field);
    let mut count = 0usize;
    let mut attempts = 0usize;
    let mut k: i64 = 0;
    loop {
        k += 1;
        let point = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
        let p = CycNumber::from_int(&field, point);
        if dense_eval(&la, &p).is_zero() || dense_eval(&lb, &p).is_zero() {
            continue;
        }
        let ia = pa.eval_var(e, &p);
        let ib = pb.eval_var(e, &p);
        let image = gcd(&ia, &ib);
        if image.is_constant() {
            return content.monic();
        }
        let lm = *image.leading().expect("nonzero").0;
        match lead_mono {
            Some(cur) if lm > cur => continue,
            Some(cur) if lm < cur => {
                interp = None;
                newton = MultiPoly::one(&field);
                count = 0;
                lead_mono = Some(lm);
            }
            None => lead_mono = Some(lm),
            _ => {}
        }
        let value = image.scale(&dense_eval(&gamma, &p));
        let linear = &MultiPoly::var(&field, e) - &MultiPoly::constant(p.clone());
        let stable;
        match interp.take() {
            None => {
                interp = Some(value);
                stable = false;
            }
            Some(h) => {
                let hp = h.eval_var(e, &p);
                if hp == value {
                    interp = Some(h);
                    stable = true;
                } else {
                    let scale = newton.eval_var(e, &p).constant_value().expect("univariate");
                    let corr = (&value - &hp).scale(&scale.inverse().expect("distinct points"));
                    interp = Some(&h + &(&corr * &newton));
                    stable = false;
                }
            }
        }
        newton = &newton * &linear;
        count += 1;
        if stable || count > bound {
            let h = interp.as_ref().expect("set");
            let (_, candidate) = content_split(h, e);
            if candidate.divides(&pa) && candidate.divides(&pb) {
                return (&content * &candidate).monic();
            }
            attempts += 1;
            assert!(count <= 2 * bound + 8 + attempts, "gcd interpolation failed to converge");
        }
    }
}

/// Content with respect to the variables other than `e`, as a univariate polynomial in `e`,
/// and the corresponding primitive part.
fn content_split(p: &MultiPoly, e: Var) -> (Vec<CycNumber>, MultiPoly) {
    let field = p.field().clone();
    let mut groups: BTreeMap<Monomial, Vec<CycNumber>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let slot = groups.entry(m.without(e)).or_default();
        let k = m.exp(e) as usize;
        if slot.len() <= k {
            slot.resize(k + 1, CycNumber::zero(&field));
        }
        slot[k] = c.clone();
    }
    let mut g: Option<Vec<CycNumber>> = None;
    for (_, coeffs) in groups {
        let coeffs = trim(coeffs);
        g = Some(match g {
            None => dense_monic(&coeffs),
            Some(acc) => dense_gcd(&acc, &coeffs),
        });
        if g.as_ref().is_some_and(|v| v.len() == 1) {
            break;
        }
    }
    let g = g.unwrap_or_else(|| vec![CycNumber::one(&field)]);
    if g.len() == 1 {
        return (g, p.clone());
    }
    let gp = from_dense(&field, &g, e);
    let prim = p.exact_div(&gp).expect("content divides");
    (g, prim)
}

fn lead_in_rest(p: &MultiPoly, e: Var) -> Vec<CycNumber> {
    let field = p.field().clone();
    let top = p.terms().map(|(m, _)| m.without(e)).max().expect("nonzero");
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        if m.without(e) == top {
            let k = m.exp(e) as usize;
            if out.len() <= k {
                out.resize(k + 1, CycNumber::zero(&field));
            }
            out[k] = c.clone();
        }
    }
    out
}

pub(crate) fn to_dense(p: &MultiPoly, v: Var) -> Vec<CycNumber> {
    let field = p.field();
    let mut out = vec![CycNumber::zero(field); p.degree_in(v) as usize + 1];
    for (m, c) in p.terms() {
        out[m.exp(v) as usize] = c.clone();
    }
    out
}

pub(crate) fn from_dense(field: &crate::cyclotomic::Field, c: &[CycNumber], v: Var) -> MultiPoly {
    MultiPoly::from_terms(field, c.iter().enumerate().map(|(k, a)| (Monomial::var(v, k as u16), a.clone())))
}

fn trim(mut v: Vec<CycNumber>) -> Vec<CycNumber> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn dense_is_zero(v: &[CycNumber]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub(crate) fn dense_eval(v: &[CycNumber], p: &CycNumber) -> CycNumber {
    let mut acc = CycNumber::zero(p.field());
    for c in v.iter().rev() {
        acc = &(&acc * p) + c;
    }
    acc
}

fn dense_monic(v: &[CycNumber]) -> Vec<CycNumber> {
    let v = trim(v.to_vec());
    let lc = v.last().expect("nonempty").clone();
    if lc.is_zero() || lc.is_one() {
        return v;
    }
    let inv = lc.inverse().expect("nonzero");
    v.iter().map(|c| c * &inv).collect()
}

fn dense_rem(a: &[CycNumber], b: &[CycNumber]) -> Vec<CycNumber> {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let inv = b[db].inverse().expect("nonzero divisor");
    while rem.len() > db && !dense_is_zero(&rem) {
        let k = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] * &inv;
        for (i, bi) in b.iter().enumerate() {
            let t = bi * &c;
            rem[k + i] = &rem[k + i] - &t;
        }
        rem.pop();
        rem = trim(rem);
    }
    if rem.is_empty() {
        rem.push(CycNumber::zero(b[0].field()));
    }
    rem
}

/// Monic univariate GCD by the Euclidean algorithm.
pub(crate) fn dense_gcd(a: &[CycNumber], b: &[CycNumber]) -> Vec<CycNumber> {
    let mut r0 = trim(a.to_vec());
    let mut r1 = trim(b.to_vec());
    if dense_is_zero(&r0) {
        return dense_monic(&r1);
    }
    while !dense_is_zero(&r1) {
        let r = dense_monic(&dense_rem(&r0, &r1));
        r0 = r1;
        r1 = r;
        if r1.len() == 1 && !r1[0].is_zero() {
            return vec![CycNumber::one(r1[0].field())];
        }
    }
    dense_monic(&r0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CyclotomicField;
    use crate::poly::{x, y, z};

    #[test]
    fn basic_cases() {
        let k = CyclotomicField::new(12);
        let (x, y) = (x(&k), y(&k));
        let a = &(&x * &x) - &(&y * &y);
        let b = &(&x + &y) * &(&x + &y);
        assert_eq!(gcd(&a, &b), &x + &y);
        let m1 = &(&x * &x) * &y;
        let m2 = &(&y * &y) * &x;
        assert_eq!(gcd(&m1, &m2), &x * &y);
        let p = a.scale(&CycNumber::from_int(&k, 7));
        assert_eq!(gcd(&p, &MultiPoly::zero(&k)), p.monic());
    }

    #[test]
    fn trivariate_common_factor() {
        let k = CyclotomicField::new(12);
        let (x, y, z) = (x(&k), y(&k), z(&k));
        let r = &(&(&x * &y) + &(&z * &z)) - &MultiPoly::from_int(&k, 3);
        let p = &(&x + &(&y * &z)) * &r;
        let q = &(&(&x * &x) - &z) * &r;
        assert_eq!(gcd(&p, &q), r.monic());
    }
}
