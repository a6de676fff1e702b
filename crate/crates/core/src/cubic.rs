//! Trivolutions attached to degree-3 foliations and the homogeneous family.

use crate::birational::BirationalMap;
use crate::cyclotomic::{CycNumber, Field, SquareRoot};
use crate::error::{Error, Result};
use crate::foliation::{tangency_of_components, tangency_q_discriminant, Foliation, Tangency};
use crate::linalg::Matrix;
use crate::parse::{parse_polynomial_with, Bindings};
use crate::poly::{Monomial, MultiPoly, Var};
use crate::ratfunc::RationalFunction;
use crate::squarefree::perfect_square_decompose;

/// P(t) = a t^2 + b t + c and its discriminant b^2 - 4ac.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivolutionDiscriminant {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
    pub delta: MultiPoly,
}

impl TrivolutionDiscriminant {
    fn from_tangency(tan: &Tangency) -> Result<Self> {
        if tan.coefficients.len() != 3 {
            return Err(Error::Inconsistent(format!("deg_t(Q/t) = {:?}, expected 2", tan.degree())));
        }
        let delta = tan.discriminant()?;
        let [a, b, c] = [&tan.coefficients[0], &tan.coefficients[1], &tan.coefficients[2]];
        let dq = tangency_q_discriminant(tan)?;
        if dq != &(c * c) * &delta {
            return Err(Error::Inconsistent("Delta(Q) differs from c^2 Delta(P)".into()));
        }
        Ok(TrivolutionDiscriminant { a: a.clone(), b: b.clone(), c: c.clone(), delta })
    }
}

fn require_degree_three(f: &Foliation) -> Result<()> {
    let d = f.foliation_degree()?;
    if d != 3 {
        return Err(Error::Precondition(format!("foliation has degree {d}, expected 3")));
    }
    Ok(())
}

/// Coefficients of P and Delta(P) for a degree-3 foliation.
pub fn trivolution_discriminant(f: &Foliation) -> Result<TrivolutionDiscriminant> {
    require_degree_three(f)?;
    TrivolutionDiscriminant::from_tangency(&f.tangency_polynomial()?)
}

/// Same data for the field (first, second) taken as given, without normalization.
pub fn discriminant_of_components(first: &MultiPoly, second: &MultiPoly) -> Result<TrivolutionDiscriminant> {
    TrivolutionDiscriminant::from_tangency(&tangency_of_components(first, second))
}

/// The two roots (-b +- mu s) / 2a of P, with Delta(P) = mu^2 s^2.
///
/// None when Delta(P) is not a square over the algebraic closure.
pub fn tangency_roots(disc: &TrivolutionDiscriminant) -> Result<Option<[RationalFunction; 2]>> {
    let Some((kappa, s)) = perfect_square_decompose(&disc.delta) else {
        return Ok(None);
    };
    let mu = match kappa.sqrt() {
        SquareRoot::Found(mu) => mu,
        SquareRoot::NotInField => return Err(Error::ExtensionRequired { kappa: kappa.to_expression() }),
        SquareRoot::Undetermined => return Err(Error::SqrtUndetermined { kappa: kappa.to_expression() }),
    };
    let ms = s.scale(&mu);
    let two_a = disc.a.scale(&CycNumber::from_int(disc.a.field(), 2));
    let plus = RationalFunction::new(&ms - &disc.b, two_a.clone())?;
    let minus = RationalFunction::new(-&(&ms + &disc.b), two_a)?;
    Ok(Some([plus, minus]))
}

/// Roots of P for an unnormalized field (first, second).
pub fn tangency_roots_of_components(first: &MultiPoly, second: &MultiPoly) -> Result<Option<[RationalFunction; 2]>> {
    tangency_roots(&discriminant_of_components(first, second)?)
}

/// A trivolution and its square, in no canonical order.
#[derive(Clone, Debug)]
pub struct TrivolutionPair {
    pub first: BirationalMap,
    pub second: BirationalMap,
}

impl TrivolutionPair {
    /// Whether {first, second} equals {a, b} projectively.
    pub fn matches_unordered(&self, a: &BirationalMap, b: &BirationalMap) -> bool {
        (self.first.projective_equal(a) && self.second.projective_equal(b))
            || (self.first.projective_equal(b) && self.second.projective_equal(a))
    }
}

/// m -> m + r X(m).
fn step_map(first: &MultiPoly, second: &MultiPoly, r: &RationalFunction) -> Result<BirationalMap> {
    let k = first.field().clone();
    let x = RationalFunction::from_poly(MultiPoly::var(&k, Var::X));
    let y = RationalFunction::from_poly(MultiPoly::var(&k, Var::Y));
    let t1 = &x + &(r * &RationalFunction::from_poly(first.clone()));
    let t2 = &y + &(r * &RationalFunction::from_poly(second.clone()));
    BirationalMap::from_affine(&t1, &t2)
}

/// Trivolutions m -> m + r_i X(m) when Delta(P) is a square; None otherwise.
pub fn trivolution_from_cubic(f: &Foliation) -> Result<Option<TrivolutionPair>> {
    let disc = trivolution_discriminant(f)?;
    let Some([r1, r2]) = tangency_roots(&disc)? else {
        return Ok(None);
    };
    let field = f.vector_field();
    let first = step_map(field.first(), field.second(), &r1)?;
    let second = step_map(field.first(), field.second(), &r2)?;
    if !BirationalMap::chain_is_identity(&[&first, &second]) {
        return Err(Error::Inconsistent("T1 T2 is not the identity".into()));
    }
    if !first.verify_period(3)? {
        return Err(Error::Inconsistent("T1 does not have period three".into()));
    }
    Ok(Some(TrivolutionPair { first, second }))
}

/// Whether m, T(m) and T^2(m) are collinear for every m.
pub fn alignment_check(t: &BirationalMap) -> Result<bool> {
    if t.is_identity() {
        return Err(Error::Precondition("alignment is undefined for the identity".into()));
    }
    Ok(t.orbits_are_aligned())
}

/// Parameters (alpha; lambda, mu, nu) of the homogeneous family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousFamilyParams {
    pub alpha: CycNumber,
    pub lambda: CycNumber,
    pub mu: CycNumber,
    pub nu: CycNumber,
}

impl HomogeneousFamilyParams {
    /// Admissible parameters only.
    pub fn new(alpha: CycNumber, lambda: CycNumber, mu: CycNumber, nu: CycNumber) -> Result<Self> {
        let out = HomogeneousFamilyParams { alpha, lambda, mu, nu };
        if !out.is_admissible() {
            return Err(Error::Precondition(format!(
                "inadmissible parameters ({}, {}, {}, {})",
                out.alpha, out.lambda, out.mu, out.nu
            )));
        }
        Ok(out)
    }

    pub fn from_ratios(field: &Field, values: [(i64, i64); 4]) -> Result<Self> {
        let [a, l, m, n] = values.map(|(p, q)| CycNumber::from_ratio(field, p, q));
        Self::new(a, l, m, n)
    }

    pub fn field(&self) -> &Field {
        self.alpha.field()
    }

    /// alpha lambda mu nu (1 + lambda + mu + nu) != 0 and alpha != 1.
    pub fn is_admissible(&self) -> bool {
        let one = CycNumber::one(self.field());
        let sum = &(&(&one + &self.lambda) + &self.mu) + &self.nu;
        let product = &(&(&(&self.alpha * &self.lambda) * &self.mu) * &self.nu) * &sum;
        !product.is_zero() && self.alpha != one
    }

    /// (alpha, lambda, mu, nu) in the order of the closed-form variables.
    pub fn values(&self) -> [CycNumber; 4] {
        [self.alpha.clone(), self.lambda.clone(), self.mu.clone(), self.nu.clone()]
    }

    /// (4 - nu) lambda - nu (2 nu + 1) = 0 and mu = nu, at alpha = -1.
    pub fn condition_a(&self) -> bool {
        let k = self.field();
        let nu = &self.nu;
        let lhs = &(&(&CycNumber::from_int(k, 4) - nu) * &self.lambda)
            - &(nu * &(&(nu * &CycNumber::from_int(k, 2)) + &CycNumber::one(k)));
        lhs.is_zero() && self.mu == self.nu
    }

    /// lambda = 1 and mu + nu - 4 mu nu + 2 = 0, at alpha = -1.
    pub fn condition_b(&self) -> bool {
        let k = self.field();
        let lhs = &(&(&self.mu + &self.nu) - &(&(&self.mu * &self.nu) * &CycNumber::from_int(k, 4)))
            + &CycNumber::from_int(k, 2);
        self.lambda.is_one() && lhs.is_zero()
    }
}

/// Components of -x(lambda(y-x)(y-alpha x) + mu y(y-alpha x) + nu y(y-x)) d/dx
/// + y((y-x)(y-alpha x) - mu x(y-alpha x) - nu alpha x(y-x)) d/dy.
pub fn homogeneous_family_field(p: &HomogeneousFamilyParams) -> (MultiPoly, MultiPoly) {
    let k = p.field().clone();
    let x = MultiPoly::var(&k, Var::X);
    let y = MultiPoly::var(&k, Var::Y);
    let y_minus_x = &y - &x;
    let y_minus_ax = &y - &x.scale(&p.alpha);
    let inner1 = &(&(&y_minus_x * &y_minus_ax).scale(&p.lambda) + &(&y * &y_minus_ax).scale(&p.mu))
        + &(&y * &y_minus_x).scale(&p.nu);
    let inner2 = &(&(&y_minus_x * &y_minus_ax) - &(&x * &y_minus_ax).scale(&p.mu))
        - &(&x * &y_minus_x).scale(&(&p.nu * &p.alpha));
    (-&(&x * &inner1), &y * &inner2)
}

const R1: &str = "lambda^2*alpha^2*(2*alpha*nu*mu+alpha^2+2*alpha^2*nu+alpha^2*nu^2-2*alpha-2*alpha*mu\
    -2*alpha*nu+1+2*mu+mu^2)";

const R2: &str = "-2*lambda*alpha*(lambda*alpha*nu*mu+lambda*alpha^2*mu*nu-3*alpha^2*mu*nu+nu*mu^2+lambda*mu^2\
    -lambda*alpha*nu+alpha*nu^2*mu-2*alpha*nu*mu^2+alpha^2*nu*mu^2-3*alpha*nu*mu-lambda*alpha*mu\
    -lambda*alpha^2*mu+2*nu*mu-alpha^2*mu^2+lambda+nu+2*mu*lambda-lambda*alpha^2-lambda*alpha\
    +lambda*alpha^3+nu^2*mu*alpha^3+2*nu*mu*alpha^3-alpha*nu-alpha^2*mu+mu*alpha^3-lambda*nu*alpha^2\
    -2*mu*nu^2*alpha^2-nu^2*alpha+2*lambda*nu*alpha^3+lambda*nu^2*alpha^3)";

const R3: &str = "2*mu*nu^2-4*lambda*alpha^2*mu^2-4*lambda*alpha*nu*mu^2-2*lambda*alpha*nu*mu\
    +2*nu^2*lambda*alpha^2*mu-12*lambda*alpha^2*mu*nu+2*lambda^2*nu*alpha^2*mu+2*lambda*nu*alpha^2*mu^2\
    +4*lambda*nu*mu*alpha^4-4*lambda*nu^2*mu*alpha^3+2*lambda*nu^2*mu*alpha^4+4*lambda*nu*mu\
    +6*nu^2*alpha^2*mu^2-4*lambda^2*alpha^2*nu-4*lambda^2*alpha^2*mu-4*alpha*nu^2*mu+2*alpha^2*nu*mu^2\
    -4*lambda*alpha^2*mu+2*lambda^2*alpha*mu+2*mu*lambda*alpha^4+2*alpha^2*mu*nu-2*lambda*nu*mu*alpha^3\
    +2*lambda*nu*mu^2+2*lambda*alpha*nu-4*alpha*mu^2*nu^2+2*lambda^2*mu+lambda^2*mu^2+2*lambda^2*alpha\
    -6*lambda^2*alpha^2+nu^2+2*lambda*nu+lambda^2+mu^2*alpha^4+lambda^2*alpha^4+2*lambda^2*alpha^3\
    -4*mu^2*nu^2*alpha^3+2*lambda^2*nu*alpha^4+mu^2*nu^2-4*lambda*nu*alpha^2-4*nu*mu^2*alpha^3\
    +2*mu*nu^2*alpha^2-4*lambda*nu^2*alpha^2+2*lambda^2*nu*alpha^3+2*mu*lambda*alpha^3\
    +mu^2*nu^2*alpha^4+2*nu*mu^2*alpha^4+lambda^2*nu^2*alpha^4";

const R4: &str = "-2*(mu*nu^2-3*lambda*alpha*nu*mu-3*lambda*alpha^2*mu*nu+alpha^2*mu*nu\
    +2*lambda*nu*mu*alpha^3-lambda*alpha*nu+2*lambda*nu*mu-lambda^2*alpha^2*nu-2*alpha*nu^2*mu\
    +alpha*nu*mu^2-2*alpha^2*nu*mu^2+alpha*nu*mu-lambda*alpha*mu-lambda*alpha*mu^2-lambda*alpha^2*mu\
    +mu^2*alpha^3+lambda^2*alpha^3-lambda*nu*alpha^2+nu*mu^2*alpha^3+mu*nu^2*alpha^2-lambda*nu^2*alpha^2\
    +lambda^2*nu*alpha^3+2*mu*lambda*alpha^3-lambda^2*alpha*mu+lambda^2*mu-lambda^2*alpha-lambda^2*alpha^2\
    +nu^2+2*lambda*nu+lambda^2)";

const R5: &str = "lambda^2+lambda^2*alpha^2-2*lambda^2*alpha+2*lambda*alpha^2*mu+2*lambda*nu-2*lambda*alpha*nu\
    -2*lambda*alpha*mu+2*alpha*nu*mu+nu^2+alpha^2*mu^2";

/// Variables standing for (alpha, lambda, mu, nu) in the closed forms.
pub const PARAMETER_VARS: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::T];

/// r_1..r_5 as polynomials in (alpha, lambda, mu, nu) = (x, y, z, t).
pub fn family_coefficient_polynomials(field: &Field) -> [MultiPoly; 5] {
    let mut bindings = Bindings::new();
    for (name, v) in ["alpha", "lambda", "mu", "nu"].into_iter().zip(PARAMETER_VARS) {
        bindings.insert(name.to_string(), RationalFunction::from_poly(MultiPoly::var(field, v)));
    }
    [R1, R2, R3, R4, R5].map(|text| parse_polynomial_with(text, field, &bindings).expect("built-in formula parses"))
}

/// tau_1 x^4 + tau_2 x^3 y + tau_3 x^2 y^2 + tau_4 x y^3 + tau_5 y^4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuartic {
    tau: [CycNumber; 5],
}

impl BinaryQuartic {
    pub fn new(tau: [CycNumber; 5]) -> Result<Self> {
        if tau.iter().all(CycNumber::is_zero) {
            return Err(Error::Degenerate("the zero quartic".into()));
        }
        Ok(BinaryQuartic { tau })
    }

    /// Reads a homogeneous quartic in x and y.
    pub fn from_poly(p: &MultiPoly) -> Result<Self> {
        if p.uses(Var::Z) || p.uses(Var::T) || !p.is_homogeneous() || p.total_degree() != Some(4) {
            return Err(Error::Precondition("expected a binary quartic in x, y".into()));
        }
        Self::new(std::array::from_fn(|i| p.coeff(&Monomial::xy(4 - i as u16, i as u16))))
    }

    pub fn coefficients(&self) -> &[CycNumber; 5] {
        &self.tau
    }

    pub fn field(&self) -> &Field {
        self.tau[0].field()
    }

    pub fn to_poly(&self) -> MultiPoly {
        let k = self.field();
        MultiPoly::from_terms(
            k,
            self.tau.iter().enumerate().map(|(i, c)| (Monomial::xy(4 - i as u16, i as u16), c.clone())),
        )
    }
}

/// Whether the quartic is (A x^2 + B xy + C y^2)^2 up to a constant, via the coefficient conditions.
pub fn quartic_square_test(q: &BinaryQuartic) -> bool {
    let k = q.field();
    let n = |v: i64| CycNumber::from_int(k, v);
    let [t1, t2, t3, t4, t5] = q.coefficients();
    if t5.is_zero() {
        return t4.is_zero() && (&(&(t1 * t3) * &n(4)) - &(t2 * t2)).is_zero();
    }
    let inv = t5.inverse().expect("nonzero");
    let [t1, t2, t3, t4] = [t1, t2, t3, t4].map(|t| t * &inv);
    let second = t2.is_zero() && t4.is_zero() && (&(&t3 * &t3) - &(&t1 * &n(4))).is_zero();
    let third = !t4.is_zero()
        && (&(&(&t4 * &t4) * &t1) - &(&t2 * &t2)).is_zero()
        && (&(&(&(&t3 * &t4) * &n(4)) - &(&(&t4 * &t4) * &t4)) - &(&t2 * &n(8))).is_zero();
    second || third
}

/// Whether the quartic is a constant times a square, by square-free decomposition.
pub fn quartic_is_square(q: &BinaryQuartic) -> bool {
    perfect_square_decompose(&q.to_poly()).is_some()
}

/// A member of the homogeneous family with its quartic R.
#[derive(Clone, Debug)]
pub struct HomogeneousFamily {
    pub params: HomogeneousFamilyParams,
    pub foliation: Foliation,
    /// r_1..r_5 from the closed forms.
    pub r: [CycNumber; 5],
    /// The quartic R read off Delta(P).
    pub quartic: BinaryQuartic,
}

/// r_1..r_5 evaluated at the parameters.
pub fn family_coefficients(p: &HomogeneousFamilyParams) -> [CycNumber; 5] {
    let values = p.values();
    family_coefficient_polynomials(p.field()).map(|r| r.eval(&values))
}

/// (lambda + mu + nu + 1)^4 x^4 y^4 (y^2 - (alpha + 1) x y + alpha x^2)^4.
pub fn family_discriminant_prefactor(p: &HomogeneousFamilyParams) -> MultiPoly {
    let k = p.field().clone();
    let x = MultiPoly::var(&k, Var::X);
    let y = MultiPoly::var(&k, Var::Y);
    let one = CycNumber::one(&k);
    let sum = &(&(&one + &p.lambda) + &p.mu) + &p.nu;
    let quad = &(&(&y * &y) - &(&x * &y).scale(&(&p.alpha + &one))) + &(&x * &x).scale(&p.alpha);
    (&(&x * &y).pow(4) * &quad.pow(4)).scale(&sum.pow(4))
}

/// The foliation, the closed-form r_i, and their cross-check against Delta(P).
pub fn homogeneous_family_build(p: &HomogeneousFamilyParams) -> Result<HomogeneousFamily> {
    if !p.is_admissible() {
        return Err(Error::Precondition("inadmissible parameters".into()));
    }
    let (first, second) = homogeneous_family_field(p);
    let disc = discriminant_of_components(&first, &second)?;
    let r_poly = disc
        .delta
        .try_div(&family_discriminant_prefactor(p))
        .ok_or_else(|| Error::Inconsistent("Delta(P) lacks the expected factors".into()))?;
    let quartic = BinaryQuartic::from_poly(&r_poly)?;
    let r = family_coefficients(p);
    if quartic.coefficients() != &r {
        return Err(Error::Inconsistent("closed-form r_i disagree with Delta(P)".into()));
    }
    let foliation = Foliation::from_components(first, second)?;
    Ok(HomogeneousFamily { params: p.clone(), foliation, r, quartic })
}

/// Jacobian of (r_1/r_5, .., r_4/r_5) with respect to (alpha, lambda, mu, nu).
pub fn family_jacobian(p: &HomogeneousFamilyParams) -> Result<Matrix> {
    let values = p.values();
    let polys = family_coefficient_polynomials(p.field());
    let r5 = polys[4].eval(&values);
    if r5.is_zero() {
        return Err(Error::Precondition("r_5 vanishes; the chart tau_5 = 1 does not apply".into()));
    }
    let r5_sq_inv = (&r5 * &r5).inverse()?;
    let mut rows = Vec::with_capacity(4);
    for ri in &polys[..4] {
        let ri_val = ri.eval(&values);
        let row = PARAMETER_VARS
            .iter()
            .map(|&v| {
                let num = &(&ri.derive(v).eval(&values) * &r5) - &(&ri_val * &polys[4].derive(v).eval(&values));
                &num * &r5_sq_inv
            })
            .collect();
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

/// One grid point of a parameter scan.
#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub params: HomogeneousFamilyParams,
    pub r: [CycNumber; 5],
    /// Verdict of the coefficient conditions.
    pub square: bool,
    /// Verdict of the square-free decomposition.
    pub square_by_decomposition: bool,
    /// Condition (a) or (b), when alpha = -1.
    pub expected: Option<bool>,
}

impl ScanEntry {
    /// Both verdicts agree, and agree with (a)/(b) when alpha = -1.
    pub fn consistent(&self) -> bool {
        self.square == self.square_by_decomposition && self.expected.is_none_or(|e| e == self.square)
    }
}

/// Square verdicts of R over a grid of admissible parameters.
pub fn family_parameter_scan(grid: &[HomogeneousFamilyParams]) -> Result<Vec<ScanEntry>> {
    let Some(first) = grid.first() else {
        return Ok(Vec::new());
    };
    let polys = family_coefficient_polynomials(first.field());
    let minus_one = CycNumber::from_int(first.field(), -1);
    grid.iter()
        .map(|p| {
            if !p.is_admissible() {
                return Err(Error::Precondition(format!(
                    "inadmissible grid point ({}, {}, {}, {})",
                    p.alpha, p.lambda, p.mu, p.nu
                )));
            }
            let values = p.values();
            let r: [CycNumber; 5] = std::array::from_fn(|i| polys[i].eval(&values));
            let quartic = BinaryQuartic::new(r.clone())?;
            Ok(ScanEntry {
                square: quartic_square_test(&quartic),
                square_by_decomposition: quartic_is_square(&quartic),
                expected: (p.alpha == minus_one).then(|| p.condition_a() || p.condition_b()),
                r,
                params: p.clone(),
            })
        })
        .collect()
}

/// Admissible points of the product grid alpha x values^3.
pub fn rational_grid(alpha: &[CycNumber], values: &[CycNumber]) -> Vec<HomogeneousFamilyParams> {
    let mut out = Vec::new();
    for a in alpha {
        for l in values {
            for m in values {
                for n in values {
                    if let Ok(p) = HomogeneousFamilyParams::new(a.clone(), l.clone(), m.clone(), n.clone()) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

const FAMILY_A_U1: &str = "4*x*y*(nu*nt*(2*nu+1)^2*x^5 - (12*nu^3+28*nu^2+19*nu+4)*x^4*y \
    + 2*nu*nt*(nu-2*nu^2+1)*x^3*y^2 + 2*(6*nu^3+13*nu^2+13*nu+4)*x^2*y^3 \
    - 3*nu*nt*(2*nu+1)*x*y^4 + (2*nu^2-7*nu-4)*y^5)";

const FAMILY_A_V1: &str = "4*x*y*(nu*(1+6*nu+12*nu^2+8*nu^3)*x^5 + nt*(4*nu^3-12*nu^2-15*nu-4)*x^4*y \
    + 2*nt*(9*nu^2-3*nu-4-2*nu^3)*x^2*y^3 - 2*(45*nu^2+16*nu^3+4*nu^4+8+35*nu)*x^3*y^2 \
    + (20*nu^3+16+69*nu+84*nu^2)*x*y^4 + 3*nt*(4-2*nu^2+7*nu)*y^5)";

const FAMILY_A_W: &str = "nu^2*(2*nu+1)^2*x^4 - 2*(2*nu^3+25*nu^2+28*nu+8)*x^2*y^2 + (nu-4)^2*y^4";

const FAMILY_A_U2: &str = "(2*nu+1)*x^2 - y^2";

const FAMILY_A_V2: &str = "(2*nu+1)*x^2 - 9*y^2";

/// The member of family (a) with alpha = -1, mu = nu, lambda = nu (2 nu + 1) / (4 - nu).
pub fn family_a_params(nu: &CycNumber) -> Result<HomogeneousFamilyParams> {
    let k = nu.field();
    let four = CycNumber::from_int(k, 4);
    let two_nu_plus_one = &(nu * &CycNumber::from_int(k, 2)) + &CycNumber::one(k);
    let lambda = (nu * &two_nu_plus_one).checked_div(&(&four - nu))?;
    HomogeneousFamilyParams::new(CycNumber::from_int(k, -1), lambda, nu.clone(), nu.clone())
}

/// nu x((2 nu + 1) x^2 - 9 y^2)/(4 - nu) d/dx - y((2 nu + 1) x^2 - y^2) d/dy.
pub fn family_a_field(nu: &CycNumber) -> Result<(MultiPoly, MultiPoly)> {
    let k = nu.field().clone();
    let mut bindings = Bindings::new();
    bindings.insert("nu".into(), RationalFunction::constant(nu.clone()));
    let scale = nu.checked_div(&(&CycNumber::from_int(&k, 4) - nu))?;
    let first = parse_polynomial_with("x*((2*nu+1)*x^2 - 9*y^2)", &k, &bindings)?.scale(&scale);
    let second = parse_polynomial_with("-y*((2*nu+1)*x^2 - y^2)", &k, &bindings)?;
    Ok((first, second))
}

/// (U1/(W U2), V1/(W V2)) for a chosen square root nt of 2 nu + 1.
pub fn family_a_closed_form(nu: &CycNumber, nu_tilde: &CycNumber) -> Result<BirationalMap> {
    let k = nu.field().clone();
    let two_nu_plus_one = &(nu * &CycNumber::from_int(&k, 2)) + &CycNumber::one(&k);
    if (nu_tilde * nu_tilde) != two_nu_plus_one {
        return Err(Error::Precondition("nu_tilde^2 must equal 2 nu + 1".into()));
    }
    let mut bindings = Bindings::new();
    bindings.insert("nu".into(), RationalFunction::constant(nu.clone()));
    bindings.insert("nt".into(), RationalFunction::constant(nu_tilde.clone()));
    let expand = |text: &str| parse_polynomial_with(text, &k, &bindings);
    let w = expand(FAMILY_A_W)?;
    let first = RationalFunction::new(expand(FAMILY_A_U1)?, &w * &expand(FAMILY_A_U2)?)?;
    let second = RationalFunction::new(expand(FAMILY_A_V1)?, &w * &expand(FAMILY_A_V2)?)?;
    BirationalMap::from_affine(&first, &second)
}

/// Square root of 2 nu + 1 in the field, when it exists.
pub fn family_a_nu_tilde(nu: &CycNumber) -> Option<CycNumber> {
    let k = nu.field();
    match (&(nu * &CycNumber::from_int(k, 2)) + &CycNumber::one(k)).sqrt() {
        SquareRoot::Found(r) => Some(r),
        _ => None,
    }
}
