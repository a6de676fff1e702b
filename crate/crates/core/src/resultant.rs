//! Subresultant pseudo-remainder sequences: resultants and discriminants.

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Var};

fn degree(c: &[MultiPoly]) -> Option<usize> {
    c.iter().rposition(|p| !p.is_zero())
}

fn trimmed(mut c: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let d = degree(&c).map_or(0, |d| d + 1);
    c.truncate(d);
    c
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
fn pseudo_rem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let db = degree(b).expect("nonzero divisor");
    let lb = &b[db];
    let mut r: Vec<MultiPoly> = a.to_vec();
    let mut steps = degree(a).map_or(0, |da| da + 1).saturating_sub(db);
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        for p in r.iter_mut() {
            *p = &*p * lb;
        }
        for (i, bi) in b.iter().enumerate().take(db + 1) {
            let k = dr - db + i;
            r[k] = &r[k] - &(&lr * bi);
        }
        r.truncate(dr);
        steps = steps.saturating_sub(1);
    }
    // complete the power of lc(b) when the degree dropped by more than one per step
    for _ in 0..steps {
        for p in r.iter_mut() {
            *p = &*p * lb;
        }
    }
    trimmed(r)
}

/// Resultant eliminating `var`, equal to the Sylvester determinant.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: Var) -> Result<MultiPoly> {
    let field = p.field().clone();
    if p.degree_in(var) == 0 || q.degree_in(var) == 0 || p.is_zero() || q.is_zero() {
        return Err(Error::Precondition(format!("both polynomials must involve {}", var.name())));
    }
    let mut a = trimmed(p.coefficients_in(var));
    let mut b = trimmed(q.coefficients_in(var));
    let mut sign_negative = false;
    if a.len() < b.len() {
        let (da, db) = (a.len() - 1, b.len() - 1);
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MultiPoly::one(&field);
    let mut h = MultiPoly::one(&field);
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        if r.is_empty() {
            return Ok(MultiPoly::zero(&field));
        }
        let divisor = &g * &h.pow(delta);
        b = r.iter().map(|c| c.exact_div(&divisor).expect("subresultant division")).collect();
        g = a[a.len() - 1].clone();
        h = if delta == 0 { h } else { g.pow(delta).exact_div(&h.pow(delta - 1)).expect("subresultant division") };
        if b.len() == 1 {
            let dega = (a.len() - 1) as u32;
            let lb = &b[0];
            let res = if dega == 0 {
                MultiPoly::one(&field)
            } else {
                lb.pow(dega).exact_div(&h.pow(dega - 1)).expect("subresultant division")
            };
            return Ok(if sign_negative { -res } else { res });
        }
    }
}

/// Discriminant in `var`: (-1)^(n(n-1)/2) Res(f, f') / lc(f).
pub fn discriminant(f: &MultiPoly, var: Var) -> Result<MultiPoly> {
    let n = f.degree_in(var);
    if n < 2 {
        return Err(Error::Precondition("discriminant needs degree at least two".into()));
    }
    let res = resultant(f, &f.derive(var), var)?;
    let lc = f.coefficients_in(var).pop().expect("nonzero");
    let d = res.exact_div(&lc)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}
