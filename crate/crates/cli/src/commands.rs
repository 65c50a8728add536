use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::sync::Arc;

use qcd_core::classify::{self, verify_theorem, ClassificationReport, DEFAULT_CAP};
use qcd_core::fixtures::{self, Fixture};
use qcd_core::format::{
    format_field, format_matrix, goursat_to_json, matrix_to_pairs, parse_field, parse_goursat_json,
    parse_matrix, parse_poly, parse_support, CyclicJson, ElementJson, GoursatJson, IdempotentsJson,
};
use qcd_core::goursat::decompose as goursat_decompose;
use qcd_core::idem::factor_xn1;
use qcd_core::oracle as word;
use qcd_core::poly::Polynomial;
use qcd_core::{
    primitive_idempotents, CyclicCode, Error, FieldSpec, GoursatData, IdempotentBasis, Matrix,
    RowSpace,
};
use serde_json::{json, Value};

use crate::render::{matrix_json, pairs, poly, support, table, to_line};
use crate::{CyclicOp, DataArgs, Example, Failure, Grid, OracleCheck, Predicate, Setting};

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(Error::Invalid(msg.into()))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("reading {}: {e}", path.display())))
    }
}

fn basis(at: &Setting) -> Result<Arc<IdempotentBasis>, Failure> {
    let f = parse_field(&at.field)?;
    Ok(primitive_idempotents(&f, at.n)?)
}

/// `--cap`, else `QCD_CAP`, else the library default.
fn cap(flag: Option<u128>) -> Result<u128, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("QCD_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("QCD_CAP must be a non-negative integer, found {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn goursat(b: &Arc<IdempotentBasis>, d: &DataArgs) -> Result<GoursatData, Failure> {
    if let Some(path) = &d.data {
        return Ok(parse_goursat_json(b, &read_input(path)?)?);
    }
    let code = |s: &Option<String>| -> Result<CyclicCode, Failure> {
        let s = s.as_deref().unwrap_or("");
        Ok(CyclicCode::new(b, &parse_support(s)?)?)
    };
    if d.c1.is_none() && d.c2.is_none() && d.c12.is_none() {
        return Err(usage("give --data or at least one of --c1, --c2, --c12"));
    }
    let c12 = code(&d.c12)?;
    let g = match &d.g {
        Some(s) => parse_poly(b.field(), Some(b.n()), s)?,
        None => c12.identity(),
    };
    Ok(GoursatData::new(code(&d.c1)?, code(&d.c2)?, c12, g)?)
}

fn yes(b: bool) -> String {
    b.to_string()
}

pub fn field(out: &mut String, spec: &str, json_out: bool) -> Outcome {
    let f = parse_field(spec)?;
    let prime = FieldSpec::prime(f.p() as u64)?;
    let modulus = Polynomial::new(&prime, f.modulus().to_vec());
    let elements: Vec<String> = (0..f.q()).map(|v| f.format_value(v)).collect();
    if json_out {
        let v = json!({
            "field": format_field(&f),
            "p": f.p(),
            "m": f.m(),
            "q": f.q(),
            "modulus": f.modulus(),
            "generator": ElementJson::new(&f, f.generator()),
            "elements": elements,
        });
        out.push_str(&to_line(&v));
    } else {
        let mut items = vec![
            ("field", format_field(&f)),
            ("q", f.q().to_string()),
            ("modulus", modulus.to_string()),
            ("generator", f.format_value(f.generator())),
        ];
        if f.q() <= 64 {
            items.push(("elements", elements.join(" ")));
        }
        out.push_str(&pairs(&items));
    }
    Ok(())
}

pub fn factor(out: &mut String, at: &Setting, json_out: bool) -> Outcome {
    let f = parse_field(&at.field)?;
    let factors = factor_xn1(&f, at.n)?;
    if json_out {
        let list: Vec<Value> = factors
            .iter()
            .map(|p| {
                let coeffs: Vec<ElementJson> = p.coeffs().iter().map(|&c| ElementJson::new(&f, c)).collect();
                json!({ "degree": p.degree(), "coeffs": coeffs })
            })
            .collect();
        out.push_str(&to_line(&json!({ "n": at.n, "factors": list })));
    } else {
        let rows: Vec<Vec<String>> = factors
            .iter()
            .enumerate()
            .map(|(i, p)| vec![i.to_string(), p.degree().unwrap_or(0).to_string(), p.to_string()])
            .collect();
        out.push_str(&table(&["i", "deg", "f_i"], &rows));
    }
    Ok(())
}

pub fn idempotents(out: &mut String, at: &Setting, json_out: bool) -> Outcome {
    let b = basis(at)?;
    if json_out {
        let v = serde_json::to_value(IdempotentsJson::new(&b)).expect("plain data");
        out.push_str(&to_line(&v));
        return Ok(());
    }
    let rows: Vec<Vec<String>> = (0..b.len())
        .map(|i| {
            let j = b.bar_index(i);
            vec![
                format!("e{i}"),
                b.cosets()[i].representative.to_string(),
                b.dim(i).to_string(),
                format!("e{j}"),
                poly(b.idempotent(i)),
            ]
        })
        .collect();
    out.push_str(&table(&["e", "coset", "dim", "bar", "coefficients"], &rows));
    let (e1, e2) = b.bar_partition();
    out.push_str(&pairs(&[("E'", support(&e1)), ("E''", support(&e2))]));
    Ok(())
}

pub fn cyclic(out: &mut String, at: &Setting, s: &str, op: CyclicOp, json_out: bool) -> Outcome {
    let b = basis(at)?;
    let c = CyclicCode::new(&b, &parse_support(s)?)?;
    match op {
        CyclicOp::Dual => {
            let d = c.dual();
            if json_out {
                out.push_str(&to_line(&serde_json::to_value(CyclicJson::new(&d)).expect("plain data")));
            } else {
                out.push_str(&pairs(&[("dual", support(&d.support())), ("dim", d.dim().to_string())]));
            }
        }
        CyclicOp::Lcd | CyclicOp::Selforth => {
            let (key, v) = match op {
                CyclicOp::Lcd => ("lcd", c.is_lcd()),
                _ => ("selforth", c.is_self_orthogonal()),
            };
            if json_out {
                out.push_str(&to_line(&json!({ key: v })));
            } else {
                out.push_str(&pairs(&[(key, yes(v))]));
            }
        }
        CyclicOp::Genmat => {
            let m = c.generator_matrix();
            if json_out {
                out.push_str(&to_line(&matrix_json(&m)));
            } else {
                out.push_str(&format_matrix(&m));
            }
        }
    }
    Ok(())
}

pub fn construct(out: &mut String, at: &Setting, d: &DataArgs, json_out: bool) -> Outcome {
    let b = basis(at)?;
    let data = goursat(&b, d)?;
    let m = data.generator_matrix();
    if json_out {
        let v = json!({
            "code": GoursatJson::new(&data),
            "dim": data.dim(),
            "generator_matrix": matrix_json(&m),
        });
        out.push_str(&to_line(&v));
    } else {
        out.push_str(&format_matrix(&m));
    }
    Ok(())
}

pub fn decompose(out: &mut String, at: &Setting, gens: &Path, json_out: bool) -> Outcome {
    let b = basis(at)?;
    let m = parse_matrix(b.field(), &read_input(gens)?)?;
    if m.cols() != 2 * b.n() {
        return Err(usage(format!("expected {} columns, found {}", 2 * b.n(), m.cols())));
    }
    let data = goursat_decompose(&b, &matrix_to_pairs(&m)?)?;
    if json_out {
        out.push_str(&goursat_to_json(&data));
        out.push('\n');
        return Ok(());
    }
    let code = data.to_code();
    let rows: Vec<Vec<String>> = code
        .components()
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let slope = match t {
                qcd_core::ComponentType::Graph(s) => poly(s),
                _ => String::new(),
            };
            vec![format!("e{i}"), t.tag().to_string(), t.rank().to_string(), slope]
        })
        .collect();
    out.push_str(&table(&["e", "type", "rank", "slope"], &rows));
    out.push_str(&pairs(&[
        ("C1", support(&data.c1().support())),
        ("C2", support(&data.c2().support())),
        ("C12", support(&data.c12().support())),
        ("g", poly(data.g())),
        ("dim", data.dim().to_string()),
    ]));
    Ok(())
}

pub fn check(
    out: &mut String,
    at: &Setting,
    d: &DataArgs,
    gens: Option<&Path>,
    what: Predicate,
    json_out: bool,
) -> Outcome {
    let b = basis(at)?;
    let data = match gens {
        Some(path) => {
            let m = parse_matrix(b.field(), &read_input(path)?)?;
            goursat_decompose(&b, &matrix_to_pairs(&m)?)?
        }
        None => goursat(&b, d)?,
    };
    let (name, v) = match what {
        Predicate::Selfdual => ("selfdual", data.is_self_dual()),
        Predicate::Dihedral => ("dihedral", data.is_dihedral()),
        Predicate::Constadihedral => ("constadihedral", data.is_consta_dihedral()),
        Predicate::Doublecirculant => ("doublecirculant", data.is_double_circulant()),
        Predicate::Principal => ("principal", data.is_principal()),
    };
    if json_out {
        out.push_str(&to_line(&json!({ "what": name, "value": v })));
    } else {
        out.push_str(&pairs(&[(name, yes(v))]));
    }
    Ok(())
}

pub fn oracle(out: &mut String, spec: &str, genmat: &Path, check: OracleCheck, json_out: bool) -> Outcome {
    let f = parse_field(spec)?;
    let m = parse_matrix(&f, &read_input(genmat)?)?;
    if m.cols() % 2 != 0 {
        return Err(usage(format!("a generator matrix needs 2n columns, found {}", m.cols())));
    }
    let n = m.cols() / 2;
    let mut g = None;
    let (name, v) = match check {
        OracleCheck::Selfdual => ("selfdual", word::self_dual(&m, n)),
        OracleCheck::Yclosed => ("yclosed", word::y_closed(&m, n)),
        OracleCheck::Ytildeclosed => ("ytildeclosed", word::ytilde_closed(&m, n)),
        OracleCheck::Shift => ("shift", word::shift_invariant(&m, n)),
        OracleCheck::Dc => {
            g = word::double_circulant(&m, n);
            ("dc", g.is_some())
        }
    };
    if json_out {
        let mut v = json!({ "check": name, "value": v });
        if let Some(g) = &g {
            v["g"] = serde_json::to_value(qcd_core::format::PolyJson::new(g)).expect("plain data");
        }
        out.push_str(&to_line(&v));
    } else {
        let mut items = vec![(name, yes(v))];
        if let Some(g) = &g {
            items.push(("g", poly(g)));
        }
        out.push_str(&pairs(&items));
    }
    Ok(())
}

fn report_text(r: &ClassificationReport) -> String {
    let c = r.criteria.as_array();
    let mark = |b: bool| if b { "yes" } else { "no" }.to_string();
    let mut s = pairs(&[
        ("field", r.field.clone()),
        ("n", r.n.to_string()),
        ("qc codes", r.qc_codes.to_string()),
        ("idempotents", format!("{} (bar-fixed {}, moved {})", r.idempotents, r.bar_fixed, r.bar_moved)),
        ("self-dual", r.counts.self_dual.to_string()),
        ("dihedral", r.counts.dihedral.to_string()),
        ("consta-dihedral", r.counts.consta_dihedral.to_string()),
        ("double circulant", r.counts.double_circulant.to_string()),
        ("principal", r.counts.principal.to_string()),
        ("mode", r.mode.clone()),
        ("verdict", yes(r.verdict)),
    ]);
    let rows = vec![c.iter().map(|&b| mark(b)).collect::<Vec<_>>()];
    s.push('\n');
    s.push_str(&table(&["(1)", "(2)", "(3)", "(4)", "(5)", "(6)"], &rows));
    for w in &r.witnesses {
        s.push_str(&format!(
            "witness: {}: C1={} C2={} C12={}\n",
            w.label,
            support(&w.code.c1),
            support(&w.code.c2),
            support(&w.code.c12)
        ));
    }
    s.push_str(&format!("note: {}\n", r.source));
    s
}

pub fn classify(
    out: &mut String,
    at: &Setting,
    cap_flag: Option<u128>,
    json_out: Option<Option<std::path::PathBuf>>,
) -> Outcome {
    let b = basis(at)?;
    let r = verify_theorem(&b, cap(cap_flag)?)?;
    let v = serde_json::to_value(&r).expect("plain data");
    match json_out {
        None => out.push_str(&report_text(&r)),
        Some(None) => out.push_str(&to_line(&v)),
        Some(Some(path)) => {
            fs::write(&path, to_line(&v))
                .map_err(|e| usage(format!("writing {}: {e}", path.display())))?;
            out.push_str(&report_text(&r));
        }
    }
    Ok(())
}

pub fn sweep(g: Grid, cap_flag: Option<u128>) -> Outcome {
    let (qs, max_n, default_cap): (&[u64], usize, u128) = match g {
        Grid::Default => (&[2, 4, 8, 3, 5, 9, 13], 15, DEFAULT_CAP),
        Grid::Small => (&[2, 4, 3, 5], 7, 1_000_000),
    };
    let cap = match cap_flag {
        Some(c) => c,
        None if std::env::var_os("QCD_CAP").is_some() => cap(None)?,
        None => default_cap,
    };
    let points = classify::grid(qs, max_n, cap)?;
    // reports stream as they are produced
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    for b in points {
        let r = verify_theorem(&b, cap)?;
        let line = to_line(&serde_json::to_value(&r).expect("plain data"));
        if lock.write_all(line.as_bytes()).and_then(|_| lock.flush()).is_err() {
            break;
        }
    }
    Ok(())
}

struct Case<'a> {
    fx: &'a Fixture,
    matches: Option<bool>,
}

fn case_json(c: &Case) -> Value {
    let d = &c.fx.data;
    json!({
        "label": c.fx.label,
        "code": GoursatJson::new(d),
        "generator_matrix": matrix_json(&d.generator_matrix()),
        "matches_displayed": c.matches,
        "self_dual": d.is_self_dual(),
        "dihedral": d.is_dihedral(),
        "consta_dihedral": d.is_consta_dihedral(),
        "double_circulant": d.is_double_circulant(),
        "principal": d.is_principal(),
    })
}

fn case_text(k: usize, c: &Case, twist: &str) -> String {
    let d = &c.fx.data;
    let mut s = format!("case ({k}): {}\n", c.fx.label);
    for line in format_matrix(&d.generator_matrix()).lines().skip(1) {
        s.push_str("  ");
        s.push_str(line);
        s.push('\n');
    }
    let twisted = if twist == "dihedral" { d.is_dihedral() } else { d.is_consta_dihedral() };
    let mut items = vec![
        ("self-dual", yes(d.is_self_dual())),
        (twist, yes(twisted)),
        ("double circulant", yes(d.is_double_circulant())),
    ];
    if let Some(m) = c.matches {
        items.push(("matches displayed matrix", yes(m)));
    }
    s.push_str(&pairs(&items));
    s
}

pub fn repro(out: &mut String, example: Example, json_out: bool) -> Outcome {
    let (name, fixtures): (&str, Vec<Fixture>) = match example {
        Example::E11 => ("example-1.1", fixtures::f4_self_dual_pair()?.into()),
        Example::E55 => {
            let mut v: Vec<Fixture> = fixtures::f4_self_dual_pair()?.into();
            v.push(fixtures::f4_double_circulant()?);
            ("example-5.5", v)
        }
        Example::E65 => ("example-6.5", fixtures::f5_self_dual_triple()?.into()),
    };
    let b = fixtures[0].data.basis().clone();
    let twist = if b.field().p() == 2 { "dihedral" } else { "consta-dihedral" };
    let cases: Vec<Case> = fixtures
        .iter()
        .map(|fx| Case {
            fx,
            matches: fx
                .displayed
                .as_ref()
                .map(|m: &Matrix| RowSpace::new(m).equals(&RowSpace::new(&fx.data.generator_matrix()))),
        })
        .collect();
    let idems: Vec<String> = b.idempotents().iter().map(poly).collect();
    if json_out {
        let v = json!({
            "example": name,
            "field": format_field(b.field()),
            "n": b.n(),
            "idempotents": idems,
            "cases": cases.iter().map(case_json).collect::<Vec<_>>(),
        });
        out.push_str(&to_line(&v));
        return Ok(());
    }
    out.push_str(&format!("{name}: F_{}, n = {}\n", b.field().q(), b.n()));
    for (i, e) in idems.iter().enumerate() {
        out.push_str(&format!("e{i} = {e}\n"));
    }
    for (k, c) in cases.iter().enumerate() {
        out.push('\n');
        out.push_str(&case_text(k + 1, c, twist));
    }
    Ok(())
}
