//! Involutions attached to quadratic foliations.

use crate::birational::BirationalMap;
use crate::cyclotomic::{CycNumber, Field};
use crate::error::{Error, Result};
use crate::foliation::{AffineVectorField, Foliation};
use crate::gcd::gcd;
use crate::linalg::Matrix;
use crate::parse::{parse_polynomial_with, Bindings};
use crate::poly::{MultiPoly, Var};
use crate::ratfunc::RationalFunction;

/// The involution m -> m + s X(m), s the nonzero tangency parameter along the leaf direction.
pub fn involution_from_quadratic(foliation: &Foliation) -> Result<BirationalMap> {
    if foliation.degree() != 2 {
        return Err(Error::Precondition(format!("foliation has degree {}, expected 2", foliation.degree())));
    }
    let tan = foliation.tangency_polynomial()?;
    let [a, b] = [&tan.coefficients[0], &tan.coefficients[1]];
    let field = foliation.vector_field();
    let k = field.field().clone();
    let x = MultiPoly::var(&k, Var::X);
    let y = MultiPoly::var(&k, Var::Y);
    let i1 = RationalFunction::new(&(a * &x) - &(b * field.first()), a.clone())?;
    let i2 = RationalFunction::new(&(a * &y) - &(b * field.second()), a.clone())?;
    BirationalMap::from_affine(&i1, &i2)
}

/// Coefficients of (x^2 y + a x^2 + b xy + c x + e y) d/dx + (x y^2 + A y^2 + B xy + C x + E y) d/dy
/// with e and E fixed by singularity at (1:1:1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedQuadraticCoefficients {
    pub a: CycNumber,
    pub b: CycNumber,
    pub c: CycNumber,
    pub big_a: CycNumber,
    pub big_b: CycNumber,
    pub big_c: CycNumber,
}

impl NormalizedQuadraticCoefficients {
    /// Checks that the induced field has coprime components.
    pub fn new(
        a: CycNumber,
        b: CycNumber,
        c: CycNumber,
        big_a: CycNumber,
        big_b: CycNumber,
        big_c: CycNumber,
    ) -> Result<Self> {
        let out = NormalizedQuadraticCoefficients { a, b, c, big_a, big_b, big_c };
        let (first, second) = out.components();
        if !gcd(&first, &second).is_constant() {
            return Err(Error::Degenerate("field components share a factor".into()));
        }
        Ok(out)
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    /// e = -1 - a - b - c.
    pub fn e(&self) -> CycNumber {
        -&(&(&(&CycNumber::one(self.field()) + &self.a) + &self.b) + &self.c)
    }

    /// E = -1 - A - B - C.
    pub fn big_e(&self) -> CycNumber {
        -&(&(&(&CycNumber::one(self.field()) + &self.big_a) + &self.big_b) + &self.big_c)
    }

    pub fn bindings(&self) -> Bindings {
        let mut out = Bindings::new();
        let values = [
            ("a", self.a.clone()),
            ("b", self.b.clone()),
            ("c", self.c.clone()),
            ("e", self.e()),
            ("A", self.big_a.clone()),
            ("B", self.big_b.clone()),
            ("C", self.big_c.clone()),
            ("E", self.big_e()),
        ];
        for (name, v) in values {
            out.insert(name.to_string(), RationalFunction::constant(v));
        }
        out
    }

    fn expand(&self, text: &str) -> MultiPoly {
        parse_polynomial_with(text, self.field(), &self.bindings()).expect("built-in formula parses")
    }

    /// (X1, X2).
    pub fn components(&self) -> (MultiPoly, MultiPoly) {
        (self.expand(V2), self.expand(U2))
    }

    pub fn vector_field(&self) -> Result<AffineVectorField> {
        let (first, second) = self.components();
        AffineVectorField::new(first, second)
    }

    pub fn foliation(&self) -> Result<Foliation> {
        Foliation::from_field(self.vector_field()?)
    }
}

const U1: &str = "(B-a)*(E-A*(B-a))*x^3*y^2 + (E*(a*B-a^2+C)+2*A*C*(a-B))*x^3*y + C*(a*E-A*C)*x^3 \
    + e*(A*E-b*E-c*A+e*B)*y^3 \
    + (2*(A^2*c-e*E-b*c*A-A^2*E)-a*e*A+c*e+b*e*B+3*b*A*E-b^2*E)*x*y^3 \
    + (c*E-e*C)*(E-c)*x*y + e*(e*C-c*E)*y^2 \
    + (a*e*B-e*C-e*B^2+E^2-c*E+b*B*E+2*(b*A*C-a*c*A-A^2*C-a*b*E-A*B*E+c*A*B)+3*a*A*E)*x^2*y^2 \
    + C*(c*E-e*C)*x^2 \
    + (2*(c*A*C-e*C*B-a*c*E-A*C*E)+a*E^2+c*B*E+b*C*E+a*e*C)*x^2*y \
    + (2*A*(A-b)*(a-B)+e*(a-B)+(A-b)*E)*x^2*y^3 \
    + (b-A)*(e-A*(b-A))*x*y^4 \
    + (b*e*C-a*e*E-c^2*A+b*E^2-A*E^2+3*c*A*E+c*e*B-e*B*E-2*b*c*E)*x*y^2 + e*(A^2-b*A+e)*y^4";

const V1: &str = "(2*a*(a-B)*(b-A)-a*c-A*C+b*C+c*B)*x^3*y^2 + (A-b)*(a*(A-b)+c)*x^2*y^3 \
    + (a-B)*(C+a*(a-B))*x^4*y \
    + (2*(a*B*E+c*C-a^2*E+a^2*c)-3*a*c*B-C*E+a*A*C-b*B*C+c*B^2)*x^3*y + C*(c*E-e*C)*x^2 \
    + (E-c)*(c*E-e*C)*x*y \
    + (2*(a*A*E-a*e*B+a*b*c-a*b*E+c*A*B+a^2*e)+b^2*C+e*C-b*c*B-c^2-3*a*c*A-b*A*C+c*E)*x^2*y^2 \
    - C*(C-a*B+a^2)*x^4 \
    + (2*c*B*E+a*E^2-b*C*E-3*a*c*E-c^2*B+b*c*C+c*A*C-e*C*B+a*c^2)*x^2*y \
    + C*(a*E-b*C-a*c+c*B)*x^3 + e*(a*e-c*A)*y^3 \
    + (2*(a*c*e+b*e*C-a*e*E+c*A*E)-c^2*A-c*e*B-e*A*C-b*c*E)*x*y^2 \
    + (c*A^2-c*e-b*c*A+2*a*e*(b-A))*x*y^3 + e*(e*C-c*E)*y^2";

const U2: &str = "x*y^2 + A*y^2 + B*x*y + C*x + E*y";

const V2: &str = "x^2*y + a*x^2 + b*x*y + c*x + e*y";

const T: &str = "(C-a*B+a^2)*x^2 + (E-c-A*B+a*b)*x*y + (b*C-c*B-A*C+a*c)*x + (b*A-A^2-e)*y^2 \
    + (b*E-e*B-A*E+a*e)*y";

/// The five polynomials of the closed form (U1/(T U2), V1/(T V2)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeiserPolynomials {
    pub u1: MultiPoly,
    pub v1: MultiPoly,
    pub u2: MultiPoly,
    pub v2: MultiPoly,
    pub t: MultiPoly,
}

impl GeiserPolynomials {
    pub fn new(coeffs: &NormalizedQuadraticCoefficients) -> Self {
        GeiserPolynomials {
            u1: coeffs.expand(U1),
            v1: coeffs.expand(V1),
            u2: coeffs.expand(U2),
            v2: coeffs.expand(V2),
            t: coeffs.expand(T),
        }
    }
}

/// Closed-form involution of a normalized quadratic foliation.
pub fn geiser_closed_form(coeffs: &NormalizedQuadraticCoefficients) -> Result<BirationalMap> {
    let polys = GeiserPolynomials::new(coeffs);
    if polys.t.is_zero() {
        return Err(Error::Degenerate("T vanishes identically".into()));
    }
    let first = RationalFunction::new(polys.u1, &polys.t * &polys.u2)?;
    let second = RationalFunction::new(polys.v1, &polys.t * &polys.v2)?;
    BirationalMap::from_affine(&first, &second)
}

/// Solves for the normalized foliation singular at three further affine points.
pub fn seven_points_solve(points: &[(CycNumber, CycNumber); 3]) -> Result<NormalizedQuadraticCoefficients> {
    let k = points[0].0.field().clone();
    let zero = CycNumber::zero(&k);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (x, y) in points {
        let xy = x * y;
        let row = |p: CycNumber, q: CycNumber, r: CycNumber, offset: usize| {
            let mut row = vec![zero.clone(); 6];
            row[offset] = p;
            row[offset + 1] = q;
            row[offset + 2] = r;
            row
        };
        rows.push(row(&(x * x) - y, &xy - y, x - y, 0));
        rhs.push(y - &(&(x * x) * y));
        rows.push(row(&(y * y) - y, &xy - y, x - y, 3));
        rhs.push(y - &(x * &(y * y)));
    }
    let m = Matrix::from_rows(rows)?;
    if m.determinant()?.is_zero() {
        return Err(Error::Degenerate("the three points give a singular system".into()));
    }
    let s = m.solve(&rhs)?;
    NormalizedQuadraticCoefficients::new(
        s[0].clone(),
        s[1].clone(),
        s[2].clone(),
        s[3].clone(),
        s[4].clone(),
        s[5].clone(),
    )
}
