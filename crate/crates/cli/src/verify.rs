//! Replays the built-in suite and compares rendered reports with golden files.

use std::path::{Path, PathBuf};

use folia::birational::BirationalMap;
use folia::parse::Bindings;
use folia::{CycNumber, CyclotomicField, Field};

use crate::builtins::{FIELDS, MAPS};
use crate::commands::{self, FieldSource, MapSource, Outcome};
use crate::error::CliResult;
use crate::report::Report;

pub const GOLDEN_DIR_VAR: &str = "FOLIA_GOLDEN_DIR";

type Check = Box<dyn Fn(&Field) -> CliResult<bool> + Send + Sync>;
type Golden = Box<dyn Fn(&Field) -> CliResult<Outcome> + Send + Sync>;

pub fn golden_dir() -> PathBuf {
    std::env::var_os(GOLDEN_DIR_VAR)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"))
}

fn field_source(name: &str) -> FieldSource {
    FieldSource::Builtin(name.to_string())
}

fn map_source(name: &str) -> MapSource {
    MapSource::Builtin(name.to_string())
}

fn checks() -> Vec<(String, Check)> {
    let mut out: Vec<(String, Check)> = Vec::new();
    for name in ["jouanolou2", "omega1", "omega4", "conic-pencil"] {
        out.push((
            format!("involution {name}"),
            Box::new(move |k| Ok(commands::involution(k, &field_source(name))?.passed)),
        ));
    }
    for name in ["omega2", "omega3"] {
        out.push((
            format!("involution {name} has degree at most 4"),
            Box::new(move |k| {
                let outcome = commands::involution(k, &field_source(name))?;
                let degree = outcome.report.to_value()["involution"]["degree"].as_u64().unwrap_or(u64::MAX);
                Ok(outcome.passed && degree <= 4)
            }),
        ));
    }
    for name in ["cube", "translated-cube", "degree-four", "hamiltonian-quartic", "diagonal-cubic"] {
        out.push((
            format!("trivolution {name}"),
            Box::new(move |k| Ok(commands::trivolution(k, &field_source(name))?.passed)),
        ));
    }
    out.push((
        "jouanolou3 has no trivolution".into(),
        Box::new(|k| {
            let outcome = commands::trivolution(k, &field_source("jouanolou3"))?;
            Ok(outcome.passed && outcome.report.to_value()["square"] == false)
        }),
    ));
    out.push((
        "jouanolou2 indeterminacy at the order-7 points".into(),
        Box::new(|_| {
            let k84 = CyclotomicField::new(84);
            let inv = commands::load_map(&k84, &map_source("involution-jouanolou2"))?;
            for j in 0..7 {
                let xi = CycNumber::root_of_unity(&k84, 7, j)?;
                if !inv.is_indeterminate_at(&[xi.clone(), xi.powi(-2)?, CycNumber::one(&k84)])? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
    ));
    out.push(("seven points".into(), Box::new(|k| Ok(commands::seven_points(k, "1/2,3/4;3/4,1/2;4/3,2/3")?.passed))));
    out.push((
        "family at (-1, 1, 1, 1)".into(),
        Box::new(|k| {
            let outcome = commands::family(k, ["-1", "1", "1", "1"])?;
            let r = outcome.report.to_value()["r"].clone();
            Ok(outcome.passed && r == serde_json::json!(["12", "0", "24", "0", "12"]))
        }),
    ));
    out.push((
        "family scan at alpha = -1".into(),
        Box::new(|k| Ok(commands::scan(k, "-1", "-2,-1,-1/2,1/2,1,2,3/2")?.passed)),
    ));
    for (name, degree) in [("jonquieres", 4), ("sigma", 2)] {
        out.push((
            format!("foliation of {name} has degree {degree}"),
            Box::new(move |k| {
                let outcome = commands::reverse(k, &map_source(name))?;
                Ok(outcome.passed && outcome.report.to_value()["degree"] == degree)
            }),
        ));
    }
    out.push((
        "web of the cube trivolution is hexagonal".into(),
        Box::new(|k| {
            let outcome = commands::web_check(k, "y + 1/(2*x^2)", Some(map_source("trivolution-cube")), None)?;
            Ok(outcome.report.to_value()["hexagonal"] == true)
        }),
    ));
    for entry in MAPS {
        let period = if entry.name.starts_with("trivolution") { 3 } else { 2 };
        out.push((
            format!("map {} has period {period}", entry.name),
            Box::new(move |k| Ok(BirationalMap::parse(entry.text, k, &Bindings::new())?.verify_period(period)?)),
        ));
    }
    for entry in FIELDS {
        out.push((
            format!("field {} parses", entry.name),
            Box::new(move |k| Ok(commands::flex(k, &field_source(entry.name)).is_ok())),
        ));
    }
    out
}

fn goldens() -> Vec<(&'static str, Golden)> {
    vec![
        ("involution-jouanolou2.txt", Box::new(|k| commands::involution(k, &field_source("jouanolou2")))),
        ("involution-omega1.txt", Box::new(|k| commands::involution(k, &field_source("omega1")))),
        ("trivolution-cube.txt", Box::new(|k| commands::trivolution(k, &field_source("cube")))),
        ("trivolution-degree-four.txt", Box::new(|k| commands::trivolution(k, &field_source("degree-four")))),
        (
            "trivolution-hamiltonian-quartic.txt",
            Box::new(|k| commands::trivolution(k, &field_source("hamiltonian-quartic"))),
        ),
        ("seven-points.txt", Box::new(|k| commands::seven_points(k, "1/2,3/4;3/4,1/2;4/3,2/3"))),
        ("family-special-point.txt", Box::new(|k| commands::family(k, ["-1", "1", "1", "1"]))),
        ("reverse-jonquieres.txt", Box::new(|k| commands::reverse(k, &map_source("jonquieres")))),
    ]
}

enum Item {
    Check(Check),
    Golden(Golden),
}

fn run_item(item: &Item, name: &str, dir: &Path, bless: bool, field: &Field) -> (bool, String) {
    match item {
        Item::Check(check) => match check(field) {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, "check failed".into()),
            Err(e) => (false, e.to_string()),
        },
        Item::Golden(render) => {
            let text = match render(field) {
                Ok(outcome) if outcome.passed => outcome.report.to_text(),
                Ok(_) => return (false, "report did not pass".into()),
                Err(e) => return (false, e.to_string()),
            };
            let path = dir.join(name);
            if bless {
                return match std::fs::write(&path, &text) {
                    Ok(()) => (true, "written".into()),
                    Err(e) => (false, e.to_string()),
                };
            }
            match std::fs::read_to_string(&path) {
                Ok(stored) if stored == text => (true, String::new()),
                Ok(_) => (false, format!("differs from {}", path.display())),
                Err(e) => (false, format!("{}: {e}", path.display())),
            }
        }
    }
}

/// Runs every item; golden files are rewritten when `bless` is set.
pub fn verify(field: &Field, bless: bool) -> CliResult<Outcome> {
    let dir = golden_dir();
    if bless {
        std::fs::create_dir_all(&dir)?;
    }
    let items: Vec<(String, Item)> = checks()
        .into_iter()
        .map(|(n, c)| (n, Item::Check(c)))
        .chain(goldens().into_iter().map(|(n, g)| (format!("golden {n}"), Item::Golden(g))))
        .collect();
    let results: Vec<(bool, String)> = std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .iter()
            .map(|(name, item)| {
                let file = name.strip_prefix("golden ").unwrap_or(name);
                let dir = &dir;
                scope.spawn(move || run_item(item, file, dir, bless, field))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap_or((false, "panicked".into()))).collect()
    });
    let mut report = Report::new();
    let mut passed = true;
    let mut rows = Vec::new();
    for ((name, _), (ok, detail)) in items.iter().zip(results) {
        passed &= ok;
        let line = if detail.is_empty() {
            format!("{} {name}", if ok { "PASS" } else { "FAIL" })
        } else {
            format!("{} {name} ({detail})", if ok { "PASS" } else { "FAIL" })
        };
        rows.push(line);
    }
    report.push("items", rows).push("all_passed", passed);
    Ok(Outcome { report, passed })
}
