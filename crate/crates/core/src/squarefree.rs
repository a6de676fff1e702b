//! Square-free decomposition and perfect-square extraction.

use std::collections::BTreeMap;

use crate::cyclotomic::CycNumber;
use crate::gcd::{gcd, gcd_all};
use crate::poly::{MultiPoly, Var};

/// Square-free decomposition: pairs (f_i, i) with the f_i coprime, square-free, monic, and
/// D = lc(D) * prod f_i^i.
pub fn square_free_decomposition(d: &MultiPoly) -> Vec<(MultiPoly, u32)> {
    let mut acc: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    collect(&d.monic(), &mut acc);
    acc.into_iter().map(|(k, f)| (f, k)).collect()
}

fn collect(d: &MultiPoly, acc: &mut BTreeMap<u32, MultiPoly>) {
    if d.is_constant() {
        return;
    }
    let v = Var::ALL.iter().copied().find(|v| d.uses(*v)).expect("nonconstant");
    let coeffs: Vec<MultiPoly> = d.coefficients_in(v).into_iter().filter(|c| !c.is_zero()).collect();
    let content = gcd_all(coeffs.iter()).expect("nonempty");
    let primitive = d.exact_div(&content).expect("content divides");
    for (f, k) in yun(&primitive, v) {
        let slot = acc.entry(k).or_insert_with(|| MultiPoly::one(d.field()));
        *slot = (&*slot * &f).monic();
    }
    collect(&content.monic(), acc);
}

fn yun(p: &MultiPoly, v: Var) -> Vec<(MultiPoly, u32)> {
    let mut out = Vec::new();
    let dp = p.derive(v);
    let a0 = gcd(p, &dp);
    let mut b = p.exact_div(&a0).expect("gcd divides");
    let c = dp.exact_div(&a0).expect("gcd divides");
    let mut dd = &c - &b.derive(v);
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &dd);
        let nb = b.exact_div(&a).expect("gcd divides");
        let nc = dd.exact_div(&a).expect("gcd divides");
        dd = &nc - &nb.derive(v);
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        b = nb;
        i += 1;
    }
    out
}

/// D = kappa * s^2 with s of leading coefficient 1, when D is a square up to a constant.
pub fn perfect_square_decompose(d: &MultiPoly) -> Option<(CycNumber, MultiPoly)> {
    if d.is_zero() {
        return None;
    }
    let field = d.field().clone();
    let mut s = MultiPoly::one(&field);
    for (f, k) in square_free_decomposition(d) {
        if k % 2 == 1 {
            return None;
        }
        s = &s * &f.pow(k / 2);
    }
    let s = s.monic();
    let kappa = d.leading_coeff();
    debug_assert!(&(&s * &s).scale(&kappa) == d);
    Some((kappa, s))
}
