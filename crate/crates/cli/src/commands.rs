//! One function per verb, each producing a report and a pass/fail verdict.

use folia::birational::BirationalMap;
use folia::cubic::{
    alignment_check, family_jacobian, family_parameter_scan, homogeneous_family_build, quartic_is_square,
    quartic_square_test, rational_grid, trivolution_discriminant, trivolution_from_cubic, HomogeneousFamilyParams,
};
use folia::foliation::{foliation_from_involution, Foliation};
use folia::parse::{parse_expression, parse_polynomial, split_top_level, Bindings};
use folia::quadratic::{geiser_closed_form, involution_from_quadratic, seven_points_solve, GeiserPolynomials};
use folia::webs::{abelian_relation, WebTriple};
use folia::{CycNumber, Field, MultiPoly};
use serde_json::{json, Value};

use crate::builtins::{self, FieldEntry};
use crate::error::{CliError, CliResult};
use crate::report::Report;

/// A rendered report and whether every check in it passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Report,
    pub passed: bool,
}

/// A foliation given by name or by its two components.
#[derive(Clone, Debug)]
pub enum FieldSource {
    Builtin(String),
    Components(String),
}

/// A map given by name or by its text.
#[derive(Clone, Debug)]
pub enum MapSource {
    Builtin(String),
    Text(String),
}

pub fn number(field: &Field, text: &str) -> CliResult<CycNumber> {
    parse_expression(text, field)?
        .to_polynomial()
        .and_then(|p| p.constant_value().or_else(|| p.is_zero().then(|| CycNumber::zero(field))))
        .ok_or_else(|| CliError::Usage(format!("'{text}' is not a constant")))
}

fn load_field(field: &Field, source: &FieldSource) -> CliResult<(Foliation, Option<&'static FieldEntry>)> {
    let (first, second, entry) = match source {
        FieldSource::Builtin(name) => {
            let entry = builtins::field(name).ok_or_else(|| CliError::UnknownBuiltin(name.clone()))?;
            (entry.first.to_string(), entry.second.to_string(), Some(entry))
        }
        FieldSource::Components(text) => {
            let parts = split_top_level(text, ',');
            if parts.len() != 2 {
                return Err(CliError::Usage("a field is written \"<X1>,<X2>\"".into()));
            }
            (parts[0].1.to_string(), parts[1].1.to_string(), None)
        }
    };
    let foliation = Foliation::from_components(parse_polynomial(&first, field)?, parse_polynomial(&second, field)?)?;
    Ok((foliation, entry))
}

pub fn load_map(field: &Field, source: &MapSource) -> CliResult<BirationalMap> {
    let text = match source {
        MapSource::Builtin(name) => builtins::map(name).ok_or_else(|| CliError::UnknownBuiltin(name.clone()))?.text,
        MapSource::Text(text) => text.as_str(),
    };
    Ok(BirationalMap::parse(text, field, &Bindings::new())?)
}

fn expected_map(field: &Field, entry: Option<&FieldEntry>) -> CliResult<Option<BirationalMap>> {
    entry.and_then(|e| e.expected_map).map(|name| load_map(field, &MapSource::Builtin(name.to_string()))).transpose()
}

fn map_value(map: &BirationalMap) -> CliResult<Value> {
    let (first, second) = map.affine_pair()?;
    Ok(json!({
        "homogeneous": map.to_string(),
        "affine": format!("({first}, {second})"),
        "degree": map.degree(),
    }))
}

fn factor(p: &MultiPoly) -> String {
    if p.num_terms() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

fn field_text(first: &MultiPoly, second: &MultiPoly) -> String {
    format!("{}*d/dx + {}*d/dy", factor(first), factor(second))
}

fn describe_field(report: &mut Report, foliation: &Foliation) {
    let v = foliation.vector_field();
    report.push("field", field_text(v.first(), v.second()));
}

pub fn flex(field: &Field, source: &FieldSource) -> CliResult<Outcome> {
    let (foliation, _) = load_field(field, source)?;
    let mut report = Report::new();
    describe_field(&mut report, &foliation);
    report
        .push("degree", foliation.foliation_degree()?)
        .push_display("inflection_polynomial", foliation.inflection_polynomial()?)
        .push_display("flex_part", foliation.flex_part()?);
    Ok(Outcome { report, passed: true })
}

pub fn involution(field: &Field, source: &FieldSource) -> CliResult<Outcome> {
    let (foliation, entry) = load_field(field, source)?;
    let mut report = Report::new();
    describe_field(&mut report, &foliation);
    let inv = involution_from_quadratic(&foliation)?;
    let period = inv.verify_period(2)?;
    let fix = inv.fixed_curve()?;
    let flex_divides = foliation.flex_part()?.divides(&fix);
    let cert = inv.indeterminacy_certificate()?;
    report
        .push("involution", map_value(&inv)?)
        .push("period_2", period)
        .push_display("fixed_curve", &fix)
        .push("flex_divides_fixed_curve", flex_divides)
        .push(
            "indeterminacy",
            json!({
                "x_eliminant": cert.x_eliminant.to_string(),
                "y_eliminant": cert.y_eliminant.to_string(),
                "at_infinity": cert.at_infinity.to_string(),
            }),
        );
    let mut passed = period && flex_divides;
    if let Some(expected) = expected_map(field, entry)? {
        let matches = inv.projective_equal(&expected);
        report.push("matches_builtin", matches);
        passed &= matches;
    }
    Ok(Outcome { report, passed })
}

pub fn reverse(field: &Field, source: &MapSource) -> CliResult<Outcome> {
    let map = load_map(field, source)?;
    let period = map.verify_period(2)?;
    let out = foliation_from_involution(&map)?;
    let mut report = Report::new();
    report.push("map", map_value(&map)?).push("period_2", period);
    describe_field(&mut report, &out.foliation);
    report
        .push("degree", out.degree)
        .push("degree_is_even", out.degree_is_even)
        .push("bound", out.bound)
        .push("bound_holds", out.bound_holds);
    Ok(Outcome { report, passed: period && out.degree_is_even })
}

pub fn trivolution(field: &Field, source: &FieldSource) -> CliResult<Outcome> {
    let (foliation, entry) = load_field(field, source)?;
    let mut report = Report::new();
    describe_field(&mut report, &foliation);
    let disc = trivolution_discriminant(&foliation)?;
    report
        .push_display("a", &disc.a)
        .push_display("b", &disc.b)
        .push_display("c", &disc.c)
        .push_display("discriminant", &disc.delta);
    let Some(pair) = trivolution_from_cubic(&foliation)? else {
        report.push("square", false);
        return Ok(Outcome { report, passed: true });
    };
    let period = pair.first.verify_period(3)? && pair.second.verify_period(3)?;
    let chain = BirationalMap::chain_is_identity(&[&pair.first, &pair.second]);
    let aligned = alignment_check(&pair.first)? && alignment_check(&pair.second)?;
    report
        .push("square", true)
        .push("t", map_value(&pair.first)?)
        .push("t_squared", map_value(&pair.second)?)
        .push("period_3", period)
        .push("composition_is_identity", chain)
        .push("aligned", aligned);
    let mut passed = period && chain && aligned;
    if let Some(expected) = expected_map(field, entry)? {
        let square = expected.compose(&expected)?;
        let matches = pair.matches_unordered(&expected, &square);
        report.push("matches_builtin", matches);
        passed &= matches;
    }
    Ok(Outcome { report, passed })
}

pub fn seven_points(field: &Field, points: &str) -> CliResult<Outcome> {
    let parsed: Vec<(CycNumber, CycNumber)> = split_top_level(points, ';')
        .into_iter()
        .map(|(_, pair)| {
            let coords = split_top_level(pair, ',');
            if coords.len() != 2 {
                return Err(CliError::Usage(format!("'{pair}' is not a point \"x,y\"")));
            }
            Ok((number(field, coords[0].1)?, number(field, coords[1].1)?))
        })
        .collect::<CliResult<_>>()?;
    let points: [(CycNumber, CycNumber); 3] =
        parsed.try_into().map_err(|_| CliError::Usage("exactly three points are required".into()))?;
    let coeffs = seven_points_solve(&points)?;
    let polys = GeiserPolynomials::new(&coeffs);
    let closed = geiser_closed_form(&coeffs)?;
    let tangency = involution_from_quadratic(&coeffs.foliation()?)?;
    let agrees = closed.projective_equal(&tangency);
    let period = closed.verify_period(2)?;
    let mut report = Report::new();
    report.push(
        "coefficients",
        json!({
            "a": coeffs.a.to_string(), "b": coeffs.b.to_string(), "c": coeffs.c.to_string(),
            "A": coeffs.big_a.to_string(), "B": coeffs.big_b.to_string(), "C": coeffs.big_c.to_string(),
            "e": coeffs.e().to_string(), "E": coeffs.big_e().to_string(),
        }),
    );
    let (first, second) = coeffs.components();
    report.push("field", field_text(&first, &second));
    report
        .push(
            "polynomials",
            json!({
                "U1": polys.u1.to_string(), "V1": polys.v1.to_string(),
                "U2": polys.u2.to_string(), "V2": polys.v2.to_string(), "T": polys.t.to_string(),
            }),
        )
        .push("involution", map_value(&closed)?)
        .push("period_2", period)
        .push("agrees_with_tangency_construction", agrees);
    Ok(Outcome { report, passed: period && agrees })
}

fn params_value(p: &HomogeneousFamilyParams) -> Value {
    let [a, l, m, n] = p.values();
    json!({ "alpha": a.to_string(), "lambda": l.to_string(), "mu": m.to_string(), "nu": n.to_string() })
}

pub fn family(field: &Field, values: [&str; 4]) -> CliResult<Outcome> {
    let [a, l, m, n] = values.map(|v| number(field, v));
    let params = HomogeneousFamilyParams::new(a?, l?, m?, n?)?;
    let family = homogeneous_family_build(&params)?;
    let square = quartic_square_test(&family.quartic);
    let by_decomposition = quartic_is_square(&family.quartic);
    let jacobian = family_jacobian(&params)?;
    let mut report = Report::new();
    report.push("parameters", params_value(&params));
    describe_field(&mut report, &family.foliation);
    report
        .push("r", family.r.iter().map(|c| c.to_string()).collect::<Vec<_>>())
        .push_display("quartic", family.quartic.to_poly())
        .push("square", square)
        .push("square_by_decomposition", by_decomposition)
        .push("jacobian_rank", jacobian.rank());
    let mut passed = square == by_decomposition;
    if params.values()[0] == CycNumber::from_int(field, -1) {
        let expected = params.condition_a() || params.condition_b();
        report.push("condition_a", params.condition_a()).push("condition_b", params.condition_b());
        passed &= expected == square;
    }
    Ok(Outcome { report, passed })
}

pub fn scan(field: &Field, alpha: &str, grid: &str) -> CliResult<Outcome> {
    let alpha = number(field, alpha)?;
    let values: Vec<CycNumber> =
        split_top_level(grid, ',').into_iter().map(|(_, v)| number(field, v)).collect::<CliResult<_>>()?;
    if values.is_empty() {
        return Err(CliError::Usage("the grid is empty".into()));
    }
    let entries = family_parameter_scan(&rational_grid(&[alpha], &values))?;
    let consistent = entries.iter().all(|e| e.consistent());
    let rows: Vec<Value> = entries
        .iter()
        .map(|e| {
            let mut row = params_value(&e.params);
            row["square"] = e.square.into();
            if let Some(expected) = e.expected {
                row["expected"] = expected.into();
            }
            row
        })
        .collect();
    let mut report = Report::new();
    report
        .push("points", entries.len())
        .push("squares", entries.iter().filter(|e| e.square).count())
        .push("consistent", consistent)
        .push("entries", rows);
    Ok(Outcome { report, passed: consistent })
}

pub fn web_check(field: &Field, f0: &str, map: Option<MapSource>, cubic: Option<FieldSource>) -> CliResult<Outcome> {
    let f0 = parse_expression(f0, field)?;
    let t = match (map, cubic) {
        (Some(source), None) => load_map(field, &source)?,
        (None, Some(source)) => {
            let (foliation, _) = load_field(field, &source)?;
            trivolution_from_cubic(&foliation)?
                .ok_or_else(|| CliError::Usage("the foliation has no trivolution".into()))?
                .first
        }
        _ => return Err(CliError::Usage("give exactly one of --map, --builtin-map or --field".into())),
    };
    let web = WebTriple::from_map(f0, &t)?;
    let relation = abelian_relation(&web)?;
    let mut report = Report::new();
    report
        .push("map", map_value(&t)?)
        .push("functions", web.functions().iter().map(|f| f.to_string()).collect::<Vec<_>>())
        .push("hexagonal", relation.is_some());
    if let Some(rel) = &relation {
        report.push("relation", rel.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    Ok(Outcome { report, passed: true })
}

pub fn parse(field: &Field, expr: Option<&str>, map: Option<&str>, builtin: Option<&str>) -> CliResult<Outcome> {
    let mut report = Report::new();
    if let Some(name) = builtin {
        if let Some(entry) = builtins::field(name) {
            let (foliation, _) = load_field(field, &FieldSource::Builtin(name.to_string()))?;
            report.push("name", entry.name).push("summary", entry.summary);
            describe_field(&mut report, &foliation);
        } else {
            let entry = builtins::map(name).ok_or_else(|| CliError::UnknownBuiltin(name.to_string()))?;
            let m = load_map(field, &MapSource::Builtin(name.to_string()))?;
            report.push("name", entry.name).push("summary", entry.summary).push("map", map_value(&m)?);
        }
        return Ok(Outcome { report, passed: true });
    }
    match (expr, map) {
        (Some(e), None) => {
            let r = parse_expression(e, field)?;
            report.push_display("expression", &r);
            if let Some(p) = r.to_polynomial() {
                report.push("total_degree", p.total_degree().unwrap_or(0));
                report.push("homogeneous", p.is_homogeneous());
            }
        }
        (None, Some(m)) => {
            let m = load_map(field, &MapSource::Text(m.to_string()))?;
            report.push("map", map_value(&m)?);
        }
        _ => return Err(CliError::Usage("give exactly one of --expr, --map or --builtin".into())),
    }
    Ok(Outcome { report, passed: true })
}
