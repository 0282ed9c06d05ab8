use std::fmt;
use std::fs;
use std::path::Path;

use hilbchar::arith::{fmt_pq, parse_poly, parse_rational, Rational};
use hilbchar::chern::{
    arithmetic_genus, character_table, ci_hilbert_series_oracle, euler_top, geometric_degree,
    hilbert_poly_characters_checked, hilbert_poly_hrr, ChernError, CompleteIntersection,
};
use hilbchar::grobner::{
    count_zero_dim, hilbert_data, in_ideal, membership_via_hilbert, parse_ideal_file,
    write_ideal_file, GrobnerConfig, GrobnerError, HomIdeal, ZeroCount,
};
use hilbchar::linalg::QMatrix;
use hilbchar::partitions::{Partition, PartitionError};
use hilbchar::reductions::{parse_dimacs, sat_generators, verify_sat, ReductionError};
use hilbchar::symfun::{delta_table, fmt_common_denominator, todd_poly, SymfunError};
use hilbchar::transversality::{
    gauss_point, normalize_point, random_flag_with_prefix, transversality_report, InputInstance,
    TransError,
};
use hilbchar::UniPoly;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

pub struct Context {
    pub seed: u64,
    pub cfg: GrobnerConfig,
}

/// A finished command: JSON and text renderings, and whether every route
/// that was compared agreed.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub agreement: bool,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Resource(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Resource(_) => 3,
            CliError::Input(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) | CliError::Resource(s) | CliError::Internal(s) => f.write_str(s),
        }
    }
}

impl From<GrobnerError> for CliError {
    fn from(e: GrobnerError) -> Self {
        match e {
            GrobnerError::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::Grobner(g) => g.into(),
            ReductionError::TooLarge { .. } => CliError::Resource(e.to_string()),
            ReductionError::Parse { .. } | ReductionError::BadLiteral { .. } => CliError::Input(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<ChernError> for CliError {
    fn from(e: ChernError) -> Self {
        match e {
            ChernError::Invalid(_) => CliError::Input(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<SymfunError> for CliError {
    fn from(e: SymfunError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<PartitionError> for CliError {
    fn from(e: PartitionError) -> Self {
        CliError::Input(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn envelope(ctx: &Context, command: &str, body: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), json!(1));
    out.insert("command".into(), json!(command));
    out.insert("seed".into(), json!(ctx.seed));
    if let Value::Object(fields) = body {
        out.extend(fields);
    }
    Value::Object(out)
}

fn q(x: &Rational) -> Value {
    Value::String(fmt_pq(x))
}

fn poly_json(p: &UniPoly) -> Value {
    json!({
        "text": p.compact(),
        "coefficients": p.coeffs().iter().map(q).collect::<Vec<_>>(),
    })
}

fn matrix_json(m: &QMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array(m.row(i).iter().map(q).collect()))
            .collect(),
    )
}

/// Integers that fit in an i64 become JSON numbers, larger ones strings.
fn int_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => Value::String(n.to_string()),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_ideal(path: &Path) -> Result<HomIdeal> {
    let (vars, polys) = parse_ideal_file(&read(path)?)?;
    Ok(HomIdeal::any(vars, polys)?)
}

fn read_hom_ideal(path: &Path) -> Result<HomIdeal> {
    let (vars, polys) = parse_ideal_file(&read(path)?)?;
    Ok(HomIdeal::new(vars, polys)?)
}

/// Accepts `n d1 d2 ...` or `n=4 degrees=2,3` (either order).
pub fn parse_ci(args: &[String]) -> Result<CompleteIntersection> {
    let bad = |s: &str| CliError::Input(format!("cannot parse complete intersection argument '{s}'"));
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad(s));
    let mut n = None;
    let mut degrees = Vec::new();
    for (i, a) in args.iter().enumerate() {
        if let Some(v) = a.strip_prefix("n=") {
            n = Some(num(v)?);
        } else if let Some(v) = a.strip_prefix("degrees=") {
            for d in v.split(',').filter(|s| !s.trim().is_empty()) {
                degrees.push(num(d)?);
            }
        } else if i == 0 && n.is_none() {
            n = Some(num(a)?);
        } else {
            for d in a.split(',').filter(|s| !s.trim().is_empty()) {
                degrees.push(num(d)?);
            }
        }
    }
    let n = n.ok_or_else(|| CliError::Input("missing ambient dimension n".into()))?;
    Ok(CompleteIntersection::new(n, degrees)?)
}

fn parse_point(s: &str) -> Result<Vec<Rational>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).ok_or_else(|| CliError::Input(format!("bad coordinate '{t}'"))))
        .collect()
}

pub fn hilbert(ctx: &Context, file: &Path) -> Result<Report> {
    let ideal = read_hom_ideal(file)?;
    let data = hilbert_data(&ideal, &ctx.cfg)?;
    let p = &data.hilbert_polynomial;
    let mut body = json!({
        "vars": ideal.vars().iter().collect::<Vec<_>>(),
        "hilbert_polynomial": poly_json(p),
        "series_numerator": poly_json(&data.series_numerator),
        "index_of_regularity": data.index_of_regularity,
        "krull_dim": data.krull_dim,
        "dim": data.projective_dim(),
    });
    let mut text = format!("p(T)={}", p.compact());
    if let Some(m) = data.projective_dim() {
        let deg = geometric_degree(p, m as u32);
        let genus = arithmetic_genus(p, m as u32);
        body["degree"] = q(&deg);
        body["genus"] = q(&genus);
        text.push_str(&format!(", deg={deg}, genus={genus}"));
    }
    Ok(Report {
        json: envelope(ctx, "hilbert", body),
        text,
        agreement: true,
    })
}

fn characters_json(ci: &CompleteIntersection) -> Result<Value> {
    let table = character_table(ci)?;
    Ok(Value::Object(
        table.iter().map(|(l, v)| (l.to_string(), int_json(v))).collect(),
    ))
}

pub fn ci(ctx: &Context, args: &[String]) -> Result<Report> {
    let ci = parse_ci(args)?;
    let hrr = hilbert_poly_hrr(&ci);
    let characters = hilbert_poly_characters_checked(&ci)?;
    let series = ci_hilbert_series_oracle(&ci);
    let agreement = hrr == characters && characters == series;
    let m = ci.m();
    let body = json!({
        "n": ci.n(),
        "degrees": ci.degrees(),
        "m": m,
        "hilbert_hrr": poly_json(&hrr),
        "hilbert_characters": poly_json(&characters),
        "hilbert_series": poly_json(&series),
        "characters": characters_json(&ci)?,
        "euler_top": int_json(&euler_top(&ci)),
        "degree": q(&geometric_degree(&hrr, m)),
        "genus": q(&arithmetic_genus(&hrr, m)),
        "agreement": agreement,
    });
    let text = if agreement {
        format!("{ci}: p(T)={}, agreement=true", hrr.compact())
    } else {
        format!(
            "{ci}: hrr={}, characters={}, series={}, agreement=false",
            hrr.compact(),
            characters.compact(),
            series.compact()
        )
    };
    Ok(Report {
        json: envelope(ctx, "ci", body),
        text,
        agreement,
    })
}

pub fn characters(ctx: &Context, args: &[String]) -> Result<Report> {
    let ci = parse_ci(args)?;
    let table = characters_json(&ci)?;
    let text = serde_json::to_string(&table).expect("serializable");
    Ok(Report {
        json: envelope(ctx, "characters", json!({"n": ci.n(), "degrees": ci.degrees(), "characters": table})),
        text,
        agreement: true,
    })
}

pub fn delta(ctx: &Context, m: u32, k: u32, n: Option<u32>) -> Result<Report> {
    let n = n.unwrap_or(2 * m);
    let table = delta_table(m, k, n)?;
    let ordered = table.ordered();
    let entries: Vec<Value> = ordered
        .iter()
        .map(|(mu, v)| json!({"mu": mu.parts(), "value": q(v)}))
        .collect();
    let text = ordered
        .iter()
        .map(|(mu, v)| format!("{mu} {v}"))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Report {
        json: envelope(ctx, "delta", json!({"m": m, "k": k, "n": n, "entries": entries})),
        text,
        agreement: true,
    })
}

pub fn todd(ctx: &Context, m: usize) -> Result<Report> {
    let t = todd_poly(m);
    let text = fmt_common_denominator(&t);
    Ok(Report {
        json: envelope(ctx, "todd", json!({"m": m, "todd": text})),
        text,
        agreement: true,
    })
}

fn zero_count_json(c: &ZeroCount) -> Value {
    match c {
        ZeroCount::Finite(n) => int_json(n),
        ZeroCount::Infinite => json!("infinite"),
    }
}

pub fn reduce_sat(ctx: &Context, file: &Path, ideal_out: Option<&Path>) -> Result<Report> {
    let phi = parse_dimacs(&read(file)?)?;
    let gens = sat_generators(&phi);
    let vars = match gens.first() {
        Some(g) => g.vars().clone(),
        None => hilbchar::arith::projective_vars(phi.num_vars()),
    };
    let ideal_text = write_ideal_file(&vars, &gens);
    if let Some(path) = ideal_out {
        fs::write(path, &ideal_text).map_err(|e| CliError::Internal(format!("{}: {e}", path.display())))?;
    }
    let report = verify_sat(&phi, &ctx.cfg)?;
    let agree = report.agree();
    let body = json!({
        "num_vars": phi.num_vars(),
        "num_clauses": phi.clauses().len(),
        "ideal": ideal_text,
        "hilbert_polynomial": poly_json(&report.hilbert_polynomial),
        "count_bruteforce": report.count_bruteforce,
        "hilbert_constant": report.hilbert_constant.as_ref().map(int_json),
        "zero_dim_count": zero_count_json(&report.zero_dim_count),
        "agree": agree,
        "agreement": agree,
    });
    let hc = report
        .hilbert_constant
        .as_ref()
        .map_or_else(|| "none".to_string(), |c| c.to_string());
    let text = format!(
        "{ideal_text}# count_bruteforce={}, hilbert_constant={hc}, zero_dim_count={}, agree={agree}",
        report.count_bruteforce, report.zero_dim_count
    );
    Ok(Report {
        json: envelope(ctx, "reduce-sat", body),
        text,
        agreement: agree,
    })
}

pub fn membership(ctx: &Context, file: &Path, poly: &str) -> Result<Report> {
    let ideal = read_hom_ideal(file)?;
    let g = parse_poly(poly, ideal.vars()).map_err(|e| CliError::Input(e.to_string()))?;
    let by_normal_form = in_ideal(&g, &ideal, &ctx.cfg)?;
    let hp = membership_via_hilbert(&ideal, &g, &ctx.cfg)?;
    let agreement = by_normal_form == hp.member;
    let body = json!({
        "poly": g.to_string(),
        "normal_form": by_normal_form,
        "hilbert": hp.member,
        "hilbert_without": poly_json(&hp.hilbert_without),
        "hilbert_with": poly_json(&hp.hilbert_with),
        "member": by_normal_form,
        "agreement": agreement,
    });
    let text = format!("member={by_normal_form}, hilbert={}, agreement={agreement}", hp.member);
    Ok(Report {
        json: envelope(ctx, "membership", body),
        text,
        agreement,
    })
}

pub fn count(ctx: &Context, file: &Path) -> Result<Report> {
    let ideal = read_ideal(file)?;
    let c = count_zero_dim(&ideal, &ctx.cfg)?;
    Ok(Report {
        json: envelope(ctx, "count", json!({"count": zero_count_json(&c)})),
        text: format!("count={c}"),
        agreement: true,
    })
}

fn verdict_failure(e: TransError) -> Result<(&'static str, String)> {
    let kind = match &e {
        TransError::NotAZero => "not_a_zero",
        TransError::NotSmooth { .. } => "not_smooth",
        TransError::OutsideChart(_) => "outside_chart",
        TransError::NotOnCell(_) => "not_on_cell",
        TransError::PointLength { .. } | TransError::Instance(_) | TransError::Partition(_) => {
            return Err(CliError::Input(e.to_string()))
        }
    };
    Ok((kind, e.to_string()))
}

pub fn trans(
    ctx: &Context,
    file: &Path,
    point: &str,
    partition: &str,
    dim: Option<usize>,
    flag_prefix: Option<&str>,
) -> Result<Report> {
    let (vars, polys) = parse_ideal_file(&read(file)?)?;
    let nvars = vars.len();
    let m = match dim {
        Some(m) => m,
        None => (nvars - 1)
            .checked_sub(polys.len())
            .ok_or_else(|| CliError::Input("more equations than coordinates; pass --dim".into()))?,
    };
    let inst = InputInstance::new(polys, nvars, m).map_err(|e| CliError::Input(e.to_string()))?;
    let mu: Partition = partition.parse()?;
    let x = normalize_point(&parse_point(point)?);
    let prefix: Vec<Vec<Rational>> = match flag_prefix {
        Some(s) => s
            .split(';')
            .filter(|v| !v.trim().is_empty())
            .map(parse_point)
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    let flag = random_flag_with_prefix(inst.n(), &prefix, ctx.seed)
        .ok_or_else(|| CliError::Input("flag prefix has wrong length or is dependent".into()))?;

    let mut body = json!({
        "n": inst.n(),
        "m": m,
        "point": x.iter().map(q).collect::<Vec<_>>(),
        "partition": mu.to_string(),
        "flag_basis": matrix_json(&flag.basis().transpose()),
    });
    let result = gauss_point(&inst, &x).and_then(|_| transversality_report(&inst, &x, &flag, &mu));
    let text = match result {
        Ok(r) => {
            let transversal = r.transversal();
            body["sigma"] = json!(r.sigma);
            body["pivot_equations"] = json!(r.pivot_equations);
            body["chart"] = matrix_json(&r.chart);
            body["in_cell"] = json!(r.in_cell);
            body["span_dim"] = json!(r.span_dim);
            body["codim"] = json!(r.codim);
            body["transversal"] = json!(transversal);
            match transversal {
                Some(t) => format!("transversal={t}, span_dim={}, codim={}", r.span_dim, r.codim),
                None => format!("not in the cell of {mu}"),
            }
        }
        Err(e) => {
            let (kind, msg) = verdict_failure(e)?;
            body["transversal"] = Value::Null;
            body["failure"] = json!(kind);
            msg
        }
    };
    Ok(Report {
        json: envelope(ctx, "trans", body),
        text,
        agreement: true,
    })
}
