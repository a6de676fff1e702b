//! Named foliations and maps shipped with the command-line tool.

/// An affine vector field first * d/dx + second * d/dy.
#[derive(Clone, Copy, Debug)]
pub struct FieldEntry {
    pub name: &'static str,
    pub first: &'static str,
    pub second: &'static str,
    /// Name of the expected map in [`MAPS`], if any.
    pub expected_map: Option<&'static str>,
    pub summary: &'static str,
}

/// A birational map written as "(f0 : f1 : f2)" or "(I1, I2)".
#[derive(Clone, Copy, Debug)]
pub struct MapEntry {
    pub name: &'static str,
    pub text: &'static str,
    pub summary: &'static str,
}

pub const FIELDS: &[FieldEntry] = &[
    FieldEntry {
        name: "jouanolou2",
        first: "x^3 - y^2",
        second: "x^2*y - 1",
        expected_map: Some("involution-jouanolou2"),
        summary: "Jouanolou foliation of degree 2",
    },
    FieldEntry {
        name: "jouanolou3",
        first: "y^3 - x^4",
        second: "1 - x^3*y",
        expected_map: None,
        summary: "Jouanolou foliation of degree 3",
    },
    FieldEntry {
        name: "omega1",
        first: "x*y^2",
        second: "y^3 - x^2",
        expected_map: Some("involution-omega1"),
        summary: "quadratic foliation with one singular point, x^2 dx + y^2 (x dy - y dx)",
    },
    FieldEntry {
        name: "omega2",
        first: "x^2 + x*y^2",
        second: "x*y + y^3 - x^2",
        expected_map: None,
        summary: "quadratic foliation with one singular point, x^2 dx + (x + y^2)(x dy - y dx)",
    },
    FieldEntry {
        name: "omega3",
        first: "x^3 + x*y^2",
        second: "x^2*y + y^3 - x*y",
        expected_map: None,
        summary: "quadratic foliation with one singular point, x y dx + (x^2 + y^2)(x dy - y dx)",
    },
    FieldEntry {
        name: "omega4",
        first: "x + y^2 - x^2*y",
        second: "-x^2 - x*y^2",
        expected_map: Some("involution-omega4"),
        summary: "quadratic foliation with one singular point, (x + y^2 - x^2 y) dy + x (x + y^2) dx",
    },
    FieldEntry {
        name: "conic-pencil",
        first: "x*y^2 + x^2",
        second: "y^3",
        expected_map: Some("involution-conic-pencil"),
        summary: "quadratic foliation attached to a pencil of conics",
    },
    FieldEntry {
        name: "cube",
        first: "x^3",
        second: "1",
        expected_map: Some("trivolution-cube"),
        summary: "x^3 d/dx + d/dy",
    },
    FieldEntry {
        name: "translated-cube",
        first: "x^3 - 1",
        second: "1",
        expected_map: Some("trivolution-translated-cube"),
        summary: "(x^3 - 1) d/dx + d/dy",
    },
    FieldEntry {
        name: "degree-four",
        first: "x^3",
        second: "1 + x + x^2/3",
        expected_map: Some("trivolution-degree-four"),
        summary: "cubic foliation with a trivolution of degree 4",
    },
    FieldEntry {
        name: "hamiltonian-quartic",
        first: "y^3",
        second: "x^3",
        expected_map: Some("trivolution-hamiltonian-quartic"),
        summary: "y^3 d/dx + x^3 d/dy",
    },
    FieldEntry {
        name: "diagonal-cubic",
        first: "x^3",
        second: "y^3",
        expected_map: Some("trivolution-diagonal-cubic"),
        summary: "x^3 d/dx + y^3 d/dy",
    },
];

pub const MAPS: &[MapEntry] = &[
    MapEntry { name: "sigma", text: "(y*z : x*z : x*y)", summary: "standard quadratic involution" },
    MapEntry {
        name: "jonquieres",
        text: "(y/(1 + x^2*y^2), x*(1 + x^2*y^2))",
        summary: "Jonquieres involution of degree 9",
    },
    MapEntry {
        name: "involution-jouanolou2",
        text: "(x*y^7 + 3*x^5*y^2*z - x^8 - 5*x^2*y^4*z^2 + 2*y^3*z^5 + x^3*y*z^4 - x*z^7 : \
               3*x*y^5*z^2 + 2*x^5*z^3 - x^7*y - 5*x^2*y^2*z^4 + x^4*y^3*z + y*z^7 - y^8 : \
               x*y^4*z^3 - 5*x^4*y^2*z^2 - y^7*z + 2*x^3*y^5 + 3*x^2*y*z^5 - z^8 + x^7*z)",
        summary: "involution of the degree-2 Jouanolou foliation",
    },
    MapEntry { name: "involution-omega1", text: "(x^3 : -x^2*y : x^2*z - 2*y^3)", summary: "involution of omega1" },
    MapEntry {
        name: "involution-omega4",
        text: "((x*z + y^2)*(x*y*z + x^3 + y^3)^2 : \
               ((2*x^2 - y*z)*(x*y*z + x^3 + y^3) - x^5 + x^3*y*z - x^2*z^3 - x*y^2*z^2)*(x*y*z + x^3 + y^3) : \
               x*y^7 - x^7*y - 3*x*y^4*z^3 - 3*x^2*y^2*z^4 + 4*x^4*y*z^3 + 6*x^2*y^5*z + 9*x^3*y^3*z^2 \
               - x^4*y^4 + x^5*y^2*z - x^3*z^5 + 2*x^6*z^2 - y^6*z^2)",
        summary: "involution of omega4",
    },
    MapEntry {
        name: "involution-conic-pencil",
        text: "(-x^2 : x*y : x*z + 2*y^2)",
        summary: "involution of the conic-pencil foliation",
    },
    MapEntry { name: "trivolution-cube", text: "(j*x, y + (j - 1)/x^2)", summary: "trivolution of x^3 d/dx + d/dy" },
    MapEntry {
        name: "trivolution-translated-cube",
        text: "(j*x, (x^3*y - y + (j - 1)*x)/(x^3 - 1))",
        summary: "trivolution of (x^3 - 1) d/dx + d/dy",
    },
    MapEntry {
        name: "trivolution-degree-four",
        text: "(3*j*x/((1 - j)*x + 3), (3*x^2*y - x^2 + (j - 4)*x + 3*(j - 1))/(3*x^2))",
        summary: "trivolution of degree 4",
    },
    MapEntry {
        name: "trivolution-hamiltonian-quartic",
        text: "(x*(x^4 - y^4)/(x^4 - j*y^4), j*y*(x^4 - y^4)/(x^4 - j*y^4))",
        summary: "trivolution of y^3 d/dx + x^3 d/dy",
    },
    MapEntry {
        name: "trivolution-diagonal-cubic",
        text: "(j*x*(x^2 - y^2)/(x^2 - j*y^2), y*(x^2 - y^2)/(x^2 - j*y^2))",
        summary: "trivolution of x^3 d/dx + y^3 d/dy",
    },
];

pub fn field(name: &str) -> Option<&'static FieldEntry> {
    FIELDS.iter().find(|e| e.name == name)
}

pub fn map(name: &str) -> Option<&'static MapEntry> {
    MAPS.iter().find(|e| e.name == name)
}
