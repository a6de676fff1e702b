//! Plane foliations: affine vector fields, homogeneous 1-forms, degree, inflection and
//! tangency polynomials, singular points and symmetries.

use crate::birational::{BirationalMap, Point};
use crate::cyclotomic::{CycNumber, Field};
use crate::error::{Error, Result};
use crate::gcd::{gcd, gcd_all, lcm};
use crate::poly::{det3, MultiPoly, Var};
use crate::ratfunc::RationalFunction;
use crate::resultant::{discriminant, resultant};
use crate::squarefree::square_free_decomposition;

/// X1 d/dx + X2 d/dy in the chart z = 1, with coprime components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineVectorField {
    first: MultiPoly,
    second: MultiPoly,
}

impl AffineVectorField {
    /// Builds a field, dividing out the common factor of the components.
    pub fn new(first: MultiPoly, second: MultiPoly) -> Result<Self> {
        for c in [&first, &second] {
            if c.uses(Var::Z) || c.uses(Var::T) {
                return Err(Error::Precondition("field components must only involve x and y".into()));
            }
        }
        if first.is_zero() && second.is_zero() {
            return Err(Error::Degenerate("zero vector field".into()));
        }
        let g = gcd(&first, &second);
        if g.is_constant() {
            return Ok(AffineVectorField { first, second });
        }
        Ok(AffineVectorField { first: first.exact_div(&g)?, second: second.exact_div(&g)? })
    }

    pub fn first(&self) -> &MultiPoly {
        &self.first
    }

    pub fn second(&self) -> &MultiPoly {
        &self.second
    }

    pub fn field(&self) -> &Field {
        self.first.field()
    }

    /// Largest total degree of the components.
    pub fn affine_degree(&self) -> u32 {
        self.first.total_degree().unwrap_or(0).max(self.second.total_degree().unwrap_or(0))
    }

    /// Proportionality of fields up to a nonzero constant.
    pub fn is_proportional(&self, other: &AffineVectorField) -> bool {
        &self.first * &other.second == &self.second * &other.first
            && (self.first.is_zero() == other.first.is_zero())
            && (self.second.is_zero() == other.second.is_zero())
    }
}

/// u dx + v dy + w dz with homogeneous coefficients of a common degree, no common factor and
/// x u + y v + z w = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousOneForm {
    coeffs: [MultiPoly; 3],
}

impl HomogeneousOneForm {
    pub fn new(u: MultiPoly, v: MultiPoly, w: MultiPoly) -> Result<Self> {
        let coeffs = [u, v, w];
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::Degenerate("zero 1-form".into()));
        }
        let mut degree = None;
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            if c.uses(Var::T) || !c.is_homogeneous() {
                return Err(Error::Precondition(format!("coefficient {} is not a form in x, y, z", c)));
            }
            let d = c.total_degree().expect("nonzero");
            if degree.is_some_and(|e| e != d) {
                return Err(Error::Precondition("coefficients have different degrees".into()));
            }
            degree = Some(d);
        }
        let field = coeffs[0].field().clone();
        let euler = &(&(&MultiPoly::var(&field, Var::X) * &coeffs[0])
            + &(&MultiPoly::var(&field, Var::Y) * &coeffs[1]))
            + &(&MultiPoly::var(&field, Var::Z) * &coeffs[2]);
        if !euler.is_zero() {
            return Err(Error::Precondition("Euler identity x u + y v + z w = 0 fails".into()));
        }
        let g = gcd_all(coeffs.iter().filter(|c| !c.is_zero())).expect("nonzero");
        if g.is_constant() {
            return Ok(HomogeneousOneForm { coeffs });
        }
        let [u, v, w] = coeffs;
        Ok(HomogeneousOneForm { coeffs: [u.exact_div(&g)?, v.exact_div(&g)?, w.exact_div(&g)?] })
    }

    pub fn coefficients(&self) -> &[MultiPoly; 3] {
        &self.coeffs
    }

    pub fn field(&self) -> &Field {
        self.coeffs[0].field()
    }

    /// Degree of the coefficients.
    pub fn coefficient_degree(&self) -> u32 {
        self.coeffs.iter().filter_map(|c| c.total_degree()).max().expect("nonzero form")
    }

    pub fn is_proportional(&self, other: &HomogeneousOneForm) -> bool {
        crate::birational::triples_proportional(&self.coeffs, &other.coeffs)
    }
}

/// Restriction of a form to the chart z = 1.
pub fn to_affine_field(form: &HomogeneousOneForm) -> Result<AffineVectorField> {
    let one = CycNumber::one(form.field());
    let [u, v, _] = form.coefficients();
    let first = v.eval_var(Var::Z, &one);
    let second = -&u.eval_var(Var::Z, &one);
    if first.is_zero() && second.is_zero() {
        return Err(Error::Degenerate("the form restricts to zero on the chart z = 1".into()));
    }
    AffineVectorField::new(first, second)
}

/// Homogeneous vector field E d/dx + F d/dy + G d/dz projecting to a chart field, with its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousLift {
    pub components: [MultiPoly; 3],
    pub degree: u32,
}

impl HomogeneousLift {
    /// Z(p) = E p_x + F p_y + G p_z.
    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        let [e, f, g] = &self.components;
        &(&(e * &p.derive(Var::X)) + &(f * &p.derive(Var::Y))) + &(g * &p.derive(Var::Z))
    }
}

/// Lift of a chart field; a radial top-degree part lowers the degree by one.
pub fn homogeneous_lift(field: &AffineVectorField) -> Result<HomogeneousLift> {
    let k = field.field().clone();
    let d = field.affine_degree();
    let (x, y) = (MultiPoly::var(&k, Var::X), MultiPoly::var(&k, Var::Y));
    let top1 = field.first().homogeneous_part(d);
    let top2 = field.second().homogeneous_part(d);
    let radial = d >= 1 && &x * &top2 == &y * &top1;
    if radial {
        let phi = if !top1.is_zero() { top1.exact_div(&x)? } else { top2.exact_div(&y)? };
        let nu = d - 1;
        let e = (field.first() - &(&x * &phi)).homogenize(Var::Z, nu);
        let f = (field.second() - &(&y * &phi)).homogenize(Var::Z, nu);
        Ok(HomogeneousLift { components: [e, f, -&phi], degree: nu })
    } else {
        let e = field.first().homogenize(Var::Z, d);
        let f = field.second().homogenize(Var::Z, d);
        Ok(HomogeneousLift { components: [e, f, MultiPoly::zero(&k)], degree: d })
    }
}

/// The form obtained by contracting the volume with the radial field and a lift.
pub fn to_homogeneous_form(field: &AffineVectorField) -> Result<HomogeneousOneForm> {
    let lift = homogeneous_lift(field)?;
    form_of_lift(&lift)
}

fn form_of_lift(lift: &HomogeneousLift) -> Result<HomogeneousOneForm> {
    let k = lift.components[0].field().clone();
    let (x, y, z) = (MultiPoly::var(&k, Var::X), MultiPoly::var(&k, Var::Y), MultiPoly::var(&k, Var::Z));
    let [e, f, g] = &lift.components;
    let u = &(&y * g) - &(&z * f);
    let v = &(&z * e) - &(&x * g);
    let w = &(&x * f) - &(&y * e);
    HomogeneousOneForm::new(u, v, w)
}

/// Coefficients of the tangency polynomial Q(t) = t P(t) along m + t X(m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangency {
    /// Q as a polynomial in x, y, t.
    pub q: MultiPoly,
    /// P = Q / t.
    pub p: MultiPoly,
    /// Coefficients of P in t, highest power first.
    pub coefficients: Vec<MultiPoly>,
}

impl Tangency {
    /// Degree in t of P; None when Q vanishes identically.
    pub fn degree(&self) -> Option<u32> {
        (!self.q.is_zero()).then(|| self.coefficients.len() as u32 - 1)
    }

    /// b^2 - 4ac for a quadratic P.
    pub fn discriminant(&self) -> Result<MultiPoly> {
        if self.coefficients.len() != 3 {
            return Err(Error::Precondition("P must be quadratic in t".into()));
        }
        let [a, b, c] = [&self.coefficients[0], &self.coefficients[1], &self.coefficients[2]];
        let four = CycNumber::from_int(a.field(), 4);
        Ok(&(b * b) - &(a * c).scale(&four))
    }
}

/// Q(t) = X1(m + t X(m)) X2(m) - X2(m + t X(m)) X1(m) for arbitrary polynomial components.
pub fn tangency_of_components(first: &MultiPoly, second: &MultiPoly) -> Tangency {
    let k = first.field().clone();
    let t = MultiPoly::var(&k, Var::T);
    let sx = &MultiPoly::var(&k, Var::X) + &(&t * first);
    let sy = &MultiPoly::var(&k, Var::Y) + &(&t * second);
    let images = [Some(&sx), Some(&sy), None, None];
    let y1 = first.substitute_all(&images);
    let y2 = second.substitute_all(&images);
    let q = &(&y1 * second) - &(&y2 * first);
    if q.is_zero() {
        return Tangency { q: q.clone(), p: q, coefficients: vec![] };
    }
    let p = q.exact_div(&t).expect("Q vanishes at t = 0");
    let mut coefficients = p.coefficients_in(Var::T);
    coefficients.reverse();
    Tangency { q, p, coefficients }
}

/// A plane foliation with both representations and its degree.
#[derive(Clone, Debug)]
pub struct Foliation {
    field: AffineVectorField,
    form: HomogeneousOneForm,
    lift: HomogeneousLift,
    degree: u32,
}

impl Foliation {
    pub fn from_field(field: AffineVectorField) -> Result<Self> {
        let lift = homogeneous_lift(&field)?;
        let form = form_of_lift(&lift)?;
        let degree = form.coefficient_degree() - 1;
        Ok(Foliation { field, form, lift, degree })
    }

    pub fn from_components(first: MultiPoly, second: MultiPoly) -> Result<Self> {
        Self::from_field(AffineVectorField::new(first, second)?)
    }

    pub fn from_form(form: HomogeneousOneForm) -> Result<Self> {
        let field = to_affine_field(&form)?;
        let lift = homogeneous_lift(&field)?;
        let derived = form_of_lift(&lift)?;
        if !derived.is_proportional(&form) {
            return Err(Error::Inconsistent("form and its chart field disagree".into()));
        }
        let degree = form.coefficient_degree() - 1;
        Ok(Foliation { field, form, lift, degree })
    }

    pub fn vector_field(&self) -> &AffineVectorField {
        &self.field
    }

    pub fn form(&self) -> &HomogeneousOneForm {
        &self.form
    }

    pub fn lift(&self) -> &HomogeneousLift {
        &self.lift
    }

    pub fn field(&self) -> &Field {
        self.field.field()
    }

    /// Degree read from the 1-form coefficients.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn tangency(&self) -> Tangency {
        tangency_of_components(self.field.first(), self.field.second())
    }

    /// Degree as the number of tangencies along a generic line, cross-checked with the form.
    pub fn foliation_degree(&self) -> Result<u32> {
        let nu = self.tangency().degree().map_or(0, |d| d + 1);
        if nu != self.degree {
            return Err(Error::Inconsistent(format!(
                "tangency count {} disagrees with form degree {}",
                nu, self.degree
            )));
        }
        Ok(nu)
    }

    /// Tangency data, checking deg_t(Q/t) = degree - 1.
    pub fn tangency_polynomial(&self) -> Result<Tangency> {
        if self.degree < 2 {
            return Err(Error::Precondition("tangency polynomial needs degree at least two".into()));
        }
        let tan = self.tangency();
        if tan.degree() != Some(self.degree - 1) {
            return Err(Error::Inconsistent(format!(
                "deg_t(Q/t) = {:?} but the foliation has degree {}",
                tan.degree(),
                self.degree
            )));
        }
        Ok(tan)
    }

    /// det[[x, E, Z(E)], [y, F, Z(F)], [z, G, Z(G)]] without normalization.
    pub fn inflection_determinant(&self) -> Result<MultiPoly> {
        let k = self.field().clone();
        let [e, f, g] = &self.lift.components;
        let m = [
            [MultiPoly::var(&k, Var::X), e.clone(), self.lift.apply(e)],
            [MultiPoly::var(&k, Var::Y), f.clone(), self.lift.apply(f)],
            [MultiPoly::var(&k, Var::Z), g.clone(), self.lift.apply(g)],
        ];
        let h = det3(&m);
        if h.is_zero() {
            return Err(Error::Degenerate("the lift is collinear to the radial field".into()));
        }
        Ok(h)
    }

    /// Inflection polynomial H with leading coefficient 1.
    pub fn inflection_polynomial(&self) -> Result<MultiPoly> {
        Ok(self.inflection_determinant()?.monic())
    }

    /// Whether the curve p = 0 is invariant.
    pub fn is_invariant_curve(&self, p: &MultiPoly) -> bool {
        p.divides(&self.lift.apply(p))
    }

    /// Reduced product of the components of H that are not invariant.
    pub fn flex_part(&self) -> Result<MultiPoly> {
        let h = self.inflection_polynomial()?;
        let mut out = MultiPoly::one(self.field());
        for (f, _) in square_free_decomposition(&h) {
            let inv = gcd(&f, &self.lift.apply(&f));
            out = &out * &f.exact_div(&inv)?;
        }
        Ok(out.monic())
    }

    /// Whether u, v, w vanish at p.
    pub fn is_singular_point(&self, p: &Point) -> Result<bool> {
        if p.iter().all(|c| c.is_zero()) {
            return Err(Error::Precondition("(0:0:0) is not a point".into()));
        }
        let target = p[0].field().clone();
        for c in self.form.coefficients() {
            let c = if c.field().conductor() == target.conductor() { c.clone() } else { c.embed(&target)? };
            if !c.eval(p).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Eliminants in x and in y whose roots contain the coordinates of the affine singular points.
    pub fn singular_elimination(&self) -> Result<(MultiPoly, MultiPoly)> {
        let (a, b) = (self.field.first(), self.field.second());
        Ok((eliminant(a, b, Var::Y)?, eliminant(a, b, Var::X)?))
    }

    /// Whether the linear map g preserves the foliation.
    pub fn is_symmetry(&self, g: &BirationalMap) -> Result<bool> {
        if g.degree() != 1 {
            return Err(Error::Precondition("isotropy elements must be linear".into()));
        }
        let gc = g.components();
        let images = [Some(&gc[0]), Some(&gc[1]), Some(&gc[2]), None];
        let pulled: Vec<MultiPoly> = self.form.coefficients().iter().map(|c| c.substitute_all(&images)).collect();
        let vars = [Var::X, Var::Y, Var::Z];
        let back: [MultiPoly; 3] = std::array::from_fn(|k| {
            let mut acc = MultiPoly::zero(self.field());
            for i in 0..3 {
                acc = &acc + &(&pulled[i] * &gc[i].derive(vars[k]));
            }
            acc
        });
        Ok(crate::birational::triples_proportional(&back, self.form.coefficients()))
    }

    /// q0 u + q1 v + q2 w: tangency between the foliation and the lines through q.
    pub fn tangency_with_pencil(&self, q: &Point) -> MultiPoly {
        let [u, v, w] = self.form.coefficients();
        &(&u.scale(&q[0]) + &v.scale(&q[1])) + &w.scale(&q[2])
    }
}

fn eliminant(a: &MultiPoly, b: &MultiPoly, v: Var) -> Result<MultiPoly> {
    let k = a.field().clone();
    if a.is_zero() || b.is_zero() {
        return Err(Error::Degenerate("a vanishing component gives a curve of singular points".into()));
    }
    if a.is_constant() || b.is_constant() {
        return Ok(MultiPoly::one(&k));
    }
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    let r = match (da, db) {
        (0, 0) => {
            let g = gcd(a, b);
            if !g.is_constant() {
                return Err(Error::Degenerate("non-isolated singular points".into()));
            }
            return Ok(MultiPoly::one(&k));
        }
        (0, _) => a.pow(db),
        (_, 0) => b.pow(da),
        _ => resultant(a, b, v)?,
    };
    if r.is_zero() {
        return Err(Error::Degenerate("non-isolated singular points".into()));
    }
    Ok(r)
}

/// Foliation attached to an involution, with the degree checks.
#[derive(Clone, Debug)]
pub struct InvolutionFoliation {
    pub foliation: Foliation,
    pub degree: u32,
    pub degree_is_even: bool,
    /// deg I - deg Fix(I).
    pub bound: i64,
    pub bound_holds: bool,
}

/// The field (x - I1) d/dx + (y - I2) d/dy cleared of denominators and common factors.
pub fn foliation_from_involution(map: &BirationalMap) -> Result<InvolutionFoliation> {
    if map.is_identity() {
        return Err(Error::Precondition("the identity defines no foliation".into()));
    }
    let k = map.field().clone();
    let (i1, i2) = map.affine_pair()?;
    let d1 = &RationalFunction::from_poly(MultiPoly::var(&k, Var::X)) - &i1;
    let d2 = &RationalFunction::from_poly(MultiPoly::var(&k, Var::Y)) - &i2;
    let common = lcm(d1.denominator(), d2.denominator());
    let first = d1.numerator() * &common.exact_div(d1.denominator())?;
    let second = d2.numerator() * &common.exact_div(d2.denominator())?;
    let foliation = Foliation::from_components(first, second)?;
    let degree = foliation.foliation_degree()?;
    let fix = map.fixed_curve()?;
    let bound = map.degree() as i64 - fix.total_degree().unwrap_or(0) as i64;
    Ok(InvolutionFoliation {
        degree,
        degree_is_even: degree % 2 == 0,
        bound,
        bound_holds: (degree as i64) <= bound,
        foliation,
    })
}

/// Discriminant in t of Q, for checking Q's discriminant against c^2 times that of P.
pub fn tangency_q_discriminant(tan: &Tangency) -> Result<MultiPoly> {
    discriminant(&tan.q, Var::T)
}
