//! Command dispatch and rendering.

use std::cmp::Ordering;

use liekit_core::branching::{tensor_decompose, OrthogonalDecomposition};
use liekit_core::modules::Algorithm;
use liekit_core::series::{branching_functions, string_functions};
use liekit_core::{FormalElement, HighestWeightModule, Multiplicity, QSeries, RootSystem, SubalgebraSpec, Weight};
use serde_json::{json, Map, Value};

use crate::algebra::{parse_algebra, parse_root_list};
use crate::cli::{AlgorithmArg, Cli, Command, Format, IntList, KindArg, ModuleArgs, SeriesArgs, Sub};
use crate::{bench, json, usage, Result};

/// Result of a command in both renderings.
pub struct Rendered {
    pub text: String,
    pub json: Map<String, Value>,
}

impl Rendered {
    fn new(text: String, json: Map<String, Value>) -> Rendered {
        Rendered { text, json }
    }
}

fn obj(pairs: Vec<(&str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn algorithm(a: AlgorithmArg) -> Algorithm {
    match a {
        AlgorithmArg::Recurrence => Algorithm::Recurrence,
        AlgorithmArg::Freudenthal => Algorithm::Freudenthal,
    }
}

/// Runs a parsed command line and returns what should go to stdout.
pub fn run(cli: &Cli) -> Result<String> {
    let (name, algebra, format, rendered) = match &cli.command {
        Command::Roots { algebra, limit, out } => ("roots", Some(algebra), out.format, roots(algebra, limit.limit)?),
        Command::Cartan { algebra, out } => ("cartan", Some(algebra), out.format, cartan(algebra)?),
        Command::Rho { algebra, out } => ("rho", Some(algebra), out.format, rho(algebra)?),
        Command::Mults { algebra, module, out } => ("mults", Some(algebra), out.format, mults(algebra, module, false)?),
        Command::Character { algebra, module, out } => {
            ("character", Some(algebra), out.format, mults(algebra, module, true)?)
        }
        Command::Dim { algebra, labels, out } => ("dim", Some(algebra), out.format, dim(algebra, &labels.labels)?),
        Command::Branch { algebra, labels, sub, limit, out } => {
            ("branch", Some(algebra), out.format, branch(algebra, &labels.labels, sub, limit.limit)?)
        }
        Command::Tensor { algebra, labels, power, out } => {
            ("tensor", Some(algebra), out.format, tensor(algebra, labels, *power)?)
        }
        Command::StringFunctions { algebra, series, algorithm: alg, out } => {
            ("string-functions", Some(algebra), out.format, q_series(algebra, series, None, algorithm(*alg))?)
        }
        Command::BranchingFunctions { algebra, series, sub, out } => (
            "branching-functions",
            Some(algebra),
            out.format,
            q_series(algebra, series, Some(sub), Algorithm::Recurrence)?,
        ),
        Command::Bench { suite, sizes, out } => ("bench", None, out.format, bench::run(*suite, &sizes.0)?),
    };
    Ok(match format {
        Format::Text => rendered.text,
        Format::Json => json::render(&json::envelope(name, algebra.map(String::as_str), rendered.json)),
    })
}

fn labels_text(labels: &[i64]) -> String {
    let parts: Vec<String> = labels.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Dynkin labels, as integers when possible.
fn labels_of(rs: &RootSystem, w: &Weight) -> (String, Value) {
    match rs.integer_labels(w) {
        Some(l) => (labels_text(&l), json!(l)),
        None => {
            let l = rs.labels(w);
            let parts: Vec<String> = l.iter().map(|x| x.to_string()).collect();
            (format!("[{}]", parts.join(",")), Value::Array(l.iter().map(json::rational).collect()))
        }
    }
}

fn highest(rs: &RootSystem, labels: &IntList) -> Result<Weight> {
    if labels.0.len() != rs.num_simple() {
        return usage(format!("{} needs {} labels, got {}", rs.name(), rs.num_simple(), labels.0.len()));
    }
    Ok(rs.weight(&labels.0)?)
}

fn by_rho(rs: &RootSystem) -> impl Fn(&Weight, &Weight) -> Ordering + '_ {
    let rho = rs.rho();
    move |a, b| rs.inner(b, rho).cmp(&rs.inner(a, rho)).then_with(|| a.cmp(b))
}

fn roots(algebra: &str, limit: u32) -> Result<Rendered> {
    let rs = parse_algebra(algebra)?;
    let list = rs.positive_roots_to(limit as i64);
    let mut text = String::new();
    let mut arr = Vec::new();
    for (r, m) in &list {
        if *m == 1 {
            text.push_str(&format!("{r}\n"));
        } else {
            text.push_str(&format!("{r} (multiplicity {m})\n"));
        }
        arr.push(json!({ "root": json::weight(r), "mult": m }));
    }
    Ok(Rendered::new(text, obj(vec![("roots", Value::Array(arr))])))
}

fn cartan(algebra: &str) -> Result<Rendered> {
    let rs = parse_algebra(algebra)?;
    let m = rs.cartan_matrix();
    let text: String = m
        .iter()
        .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    Ok(Rendered::new(text, obj(vec![("cartan", json!(m))])))
}

fn rho(algebra: &str) -> Result<Rendered> {
    let rs = parse_algebra(algebra)?;
    let r = rs.rho();
    Ok(Rendered::new(format!("{r}\n"), obj(vec![("rho", json::weight(r))])))
}

fn module(rs: &RootSystem, args: &ModuleArgs) -> Result<HighestWeightModule> {
    let mu = highest(rs, &args.labels.labels)?;
    let m = match (args.kind, &args.parabolic_index) {
        (KindArg::Irreducible, None) => HighestWeightModule::irreducible(rs, mu)?,
        (KindArg::Verma, None) => HighestWeightModule::verma(rs, mu)?,
        (KindArg::Parabolic, Some(ix)) => {
            let ix: Vec<usize> = ix.0.iter().map(|&i| usize::try_from(i).unwrap_or(usize::MAX)).collect();
            HighestWeightModule::parabolic_verma(rs, mu, &ix)?
        }
        (KindArg::Parabolic, None) => return usage("--kind parabolic needs --parabolic-index"),
        (_, Some(_)) => return usage("--parabolic-index only applies to --kind parabolic"),
    };
    Ok(m.with_depth(args.limit.limit))
}

fn weight_lines(rs: &RootSystem, f: &FormalElement, with_labels: bool) -> (String, Value) {
    let mut terms: Vec<(&Weight, &Multiplicity)> = f.iter().collect();
    let order = by_rho(rs);
    terms.sort_by(|a, b| order(a.0, b.0));
    let mut text = String::new();
    let mut arr = Vec::new();
    for (w, m) in terms {
        let mut entry = Map::new();
        entry.insert("weight".into(), json::weight(w));
        entry.insert("mult".into(), json::mult(m));
        if with_labels {
            let (lt, lj) = labels_of(rs, w);
            text.push_str(&format!("{lt} ({w}) : {m}\n"));
            entry.insert("labels".into(), lj);
        } else {
            text.push_str(&format!("({w}) : {m}\n"));
        }
        arr.push(Value::Object(entry));
    }
    (text, Value::Array(arr))
}

fn mults(algebra: &str, args: &ModuleArgs, full: bool) -> Result<Rendered> {
    let rs = parse_algebra(algebra)?;
    let m = module(&rs, args)?;
    let alg = algorithm(args.algorithm);
    let f = if full { m.character_with(alg)? } else { m.multiplicities(alg)? };
    let (text, arr) = weight_lines(&rs, &f, !full);
    let key = if full { "character" } else { "weights" };
    Ok(Rendered::new(text, obj(vec![("highest", json!(args.labels.labels.0)), (key, arr)])))
}

fn dim(algebra: &str, labels: &IntList) -> Result<Rendered> {
    let rs = parse_algebra(algebra)?;
    let mu = highest(&rs, labels)?;
    let d = liekit_core::modules::dimension(&rs, &mu)?;
    Ok(Rendered::new(format!("{d}\n"), obj(vec![("highest", json!(labels.0)), ("dimension", json::mult(&d))])))
}

fn subalgebra(rs: &RootSystem, sub: &Sub) -> Result<SubalgebraSpec> {
    match (&sub.sub_index, &sub.sub_roots) {
        (Some(ix), None) if ix.0.is_empty() => Ok(SubalgebraSpec::cartan(rs)),
        (Some(ix), None) => {
            let ix: Vec<usize> = ix.0.iter().map(|&i| usize::try_from(i).unwrap_or(0)).collect();
            Ok(SubalgebraSpec::parabolic(rs, &ix)?)
        }
        (None, Some(text)) => Ok(SubalgebraSpec::new(rs, parse_root_list(text)?)?),
        (None, None) => usage("a subalgebra is needed: pass --sub-index or --sub-roots"),
        (Some(_), Some(_)) => usage("--sub-index and --sub-roots are exclusive"),
    }
}

fn branch(algebra: &str, labels: &IntList, sub: &Sub, limit: u32) -> Result<Rendered> {
    let rs = parse_algebra(algebra)?;
    let mu = highest(&rs, labels)?;
    let spec = subalgebra(&rs, sub)?;
    let dec = OrthogonalDecomposition::new(&rs, &spec)?;
    let b = dec.branch(&mu, limit)?;
    let (text, arr) = weight_lines(dec.sub_system(), &b, true);
    Ok(Rendered::new(
        text,
        obj(vec![("highest", json!(labels.0)), ("subalgebra", json!(dec.sub_system().name())), ("coefficients", arr)]),
    ))
}

fn tensor(algebra: &str, labels: &[IntList], power: usize) -> Result<Rendered> {
    let rs = parse_algebra(algebra)?;
    if power == 0 {
        return usage("--power must be at least 1");
    }
    let mut factors = Vec::new();
    for _ in 0..power {
        for l in labels {
            factors.push(highest(&rs, l)?);
        }
    }
    let dec = tensor_decompose(&rs, &factors)?;
    let mut text = String::new();
    let mut arr = Vec::new();
    for (l, m) in &dec {
        text.push_str(&format!("{} : {m}\n", labels_text(l)));
        arr.push(json!({ "labels": l, "mult": json::mult(m) }));
    }
    let factors: Vec<&Vec<i64>> = labels.iter().map(|l| &l.0).collect();
    Ok(Rendered::new(
        text,
        obj(vec![("factors", json!(factors)), ("power", json!(power)), ("decomposition", Value::Array(arr))]),
    ))
}

/// Evaluates `f` on every item with up to `jobs` threads, keeping input order.
fn par_map<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs == 1 {
        return items.iter().map(&f).collect();
    }
    let f = &f;
    let mut tagged: Vec<(usize, R)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|t| {
                s.spawn(move || {
                    items.iter().enumerate().skip(t).step_by(jobs).map(|(i, x)| (i, f(x))).collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker thread panicked")).collect()
    });
    tagged.sort_by_key(|(i, _)| *i);
    tagged.into_iter().map(|(_, r)| r).collect()
}

fn q_series(algebra: &str, args: &SeriesArgs, sub: Option<&Sub>, alg: Algorithm) -> Result<Rendered> {
    let rs = parse_algebra(algebra)?;
    for l in &args.labels {
        highest(&rs, l)?;
    }
    let spec = sub.map(|s| subalgebra(&rs, s)).transpose()?;
    let limit = args.limit.limit;
    let results = par_map(&args.labels, args.jobs, |l| match &spec {
        None => string_functions(&rs, &l.0, limit, alg),
        Some(spec) => branching_functions(&rs, spec, &l.0, limit),
    });
    let many = args.labels.len() > 1;
    let mut text = String::new();
    let mut modules = Vec::new();
    for (l, r) in args.labels.iter().zip(results) {
        let series: Vec<QSeries> = r?;
        if many {
            text.push_str(&format!("# {}\n", labels_text(&l.0)));
        }
        for s in &series {
            text.push_str(&format!("{s}\n"));
        }
        let arr: Vec<Value> = series
            .iter()
            .map(|s| json!({ "class": s.labels, "coeffs": s.coeffs.iter().map(json::mult).collect::<Vec<_>>() }))
            .collect();
        modules.push(json!({ "highest": l.0, "series": arr }));
    }
    let mut body = obj(vec![("limit", json!(limit)), ("modules", Value::Array(modules))]);
    if let Some(spec) = &spec {
        let roots: Vec<Value> = spec.roots().iter().map(json::weight).collect();
        body.insert("subalgebra_roots".into(), Value::Array(roots));
    }
    Ok(Rendered::new(text, body))
}
