use std::fs;
use std::io::{self, BufRead, Write};
use std::time::Instant;

use copsi_core::copsi::Engine;
use copsi_core::extremal::{
    extremal_by_order_with, extremal_by_size_with, ExtremalReport, Parameter,
};
use copsi_core::formula::{
    family_formula, psin_complete_formula, sequence_params, star_linear_summand,
};
use copsi_core::graph::{Family, Graph};
use copsi_core::verify::{run_suite, Suite};
use copsi_core::{graph6, Error};
use serde_json::json;

use crate::record::{OutputRecord, Sink};
use crate::{CopsiArgs, EngineArg, ExtremalArgs, OutputArgs, Status, SuiteArg};

fn status_for(e: &Error) -> Status {
    match e {
        Error::OutOfBounds { value, min, .. } if value < min => Status::Usage,
        e if e.is_capability() => Status::Cap,
        Error::Parse(_) | Error::UnknownFamily(_) | Error::VertexOutOfRange { .. } => Status::Usage,
        _ => Status::Failed,
    }
}

fn report_error(e: &Error) -> Status {
    eprintln!("copsi: {e}");
    status_for(e)
}

fn parse_family(name: &str) -> Result<Family, Status> {
    name.parse::<Family>().map_err(|e| report_error(&e))
}

struct Input {
    descriptor: String,
    graph: Result<Graph, String>,
}

fn graph6_input(text: &str, origin: impl FnOnce() -> String) -> Input {
    Input {
        descriptor: text.to_string(),
        graph: graph6::decode(text).map_err(|e| format!("{}: {e}", origin())),
    }
}

fn read_inputs(args: &CopsiArgs) -> io::Result<Result<Vec<Input>, Status>> {
    if let (Some(family), Some(param)) = (&args.family, args.param) {
        let family = match parse_family(family) {
            Ok(f) => f,
            Err(s) => return Ok(Err(s)),
        };
        return Ok(match family.generate(param) {
            Ok(g) => Ok(vec![Input {
                descriptor: format!("{family} {param}"),
                graph: Ok(g),
            }]),
            Err(e) => Err(report_error(&e)),
        });
    }
    if !args.graphs.is_empty() {
        return Ok(Ok(args
            .graphs
            .iter()
            .enumerate()
            .map(|(i, t)| graph6_input(t, || format!("argument {}", i + 1)))
            .collect()));
    }
    let text = match &args.file {
        Some(path) => fs::read_to_string(path)?,
        None => io::stdin()
            .lock()
            .lines()
            .collect::<io::Result<Vec<_>>>()?
            .join("\n"),
    };
    Ok(Ok(text
        .lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.trim_end_matches('\r');
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            (!line.is_empty()).then(|| graph6_input(line, || format!("line {}", i + 1)))
        })
        .collect()))
}

pub fn copsi(args: &CopsiArgs, out: &mut impl Write) -> io::Result<Status> {
    let inputs = match read_inputs(args)? {
        Ok(inputs) => inputs,
        Err(status) => return Ok(status),
    };
    let sink = Sink {
        json: args.out.json,
    };
    let engine = Engine::with_subset_cap(args.subset_cap);
    let mut status = Status::Ok;
    for input in inputs {
        let start = Instant::now();
        let mut rec = OutputRecord::new("copsi", input.descriptor);
        match input.graph {
            Err(msg) => {
                eprintln!("copsi: {msg}");
                rec.push("error", msg);
                status = status.worst(Status::Usage);
            }
            Ok(g) => {
                rec.push("order", g.order());
                rec.push("size", g.size());
                if let Err(e) = copsi_fields(&engine, &g, args, &mut rec) {
                    eprintln!("copsi: {}: {e}", rec.input);
                    rec.push("error", &e);
                    status = status.worst(status_for(&e));
                } else if rec.fields.iter().any(|(k, v)| k == "agree" && v == "false") {
                    status = status.worst(Status::Failed);
                }
            }
        }
        if args.out.timing {
            rec.timing_ms = Some(start.elapsed().as_millis());
        }
        sink.emit(out, &rec)?;
    }
    Ok(status)
}

fn copsi_fields(
    engine: &Engine,
    g: &Graph,
    args: &CopsiArgs,
    rec: &mut OutputRecord,
) -> Result<(), Error> {
    match args.engine {
        EngineArg::Classes => rec.push("total", engine.classes(g)?),
        EngineArg::Naive => rec.push("total", engine.naive(g)?),
        EngineArg::Both => {
            let naive = engine.naive(g)?;
            let classes = engine.classes(g)?;
            rec.push("total", &classes);
            rec.push("naive", &naive);
            rec.push("classes", &classes);
            rec.push("agree", naive == classes);
        }
    }
    if args.breakdown {
        let b = engine.breakdown(g)?;
        rec.push("singleton", b.singleton);
        rec.push("edge", b.edge);
        rec.push("third", b.third);
    }
    Ok(())
}

fn with_timing(rec: &mut OutputRecord, opts: OutputArgs, start: Instant) {
    if opts.timing {
        rec.timing_ms = Some(start.elapsed().as_millis());
    }
}

pub fn formula(
    family: &str,
    param: u64,
    opts: OutputArgs,
    out: &mut impl Write,
) -> io::Result<Status> {
    let start = Instant::now();
    let family = match parse_family(family) {
        Ok(f) => f,
        Err(s) => return Ok(s),
    };
    let value = match family_formula(family, param) {
        Ok(v) => v,
        Err(e) => return Ok(report_error(&e)),
    };
    let mut rec = OutputRecord::new("formula", format!("{family} {param}")).field("value", value);
    with_timing(&mut rec, opts, start);
    Sink { json: opts.json }.emit(out, &rec)?;
    Ok(Status::Ok)
}

pub fn sequence(
    family: &str,
    count: usize,
    summands: bool,
    opts: OutputArgs,
    out: &mut impl Write,
) -> io::Result<Status> {
    let start = Instant::now();
    let family = match parse_family(family) {
        Ok(f) => f,
        Err(s) => return Ok(s),
    };
    if summands && family != Family::Star {
        eprintln!("copsi: --summands only applies to the star family");
        return Ok(Status::Usage);
    }
    let sink = Sink { json: opts.json };
    for param in sequence_params(family, count) {
        let value = family_formula(family, param).expect("sequence parameters are in range");
        let mut rec = OutputRecord::new("sequence", family.name())
            .field("n", param)
            .field("value", value);
        if summands {
            rec.push("linear", star_linear_summand(param));
            rec.push("psin", psin_complete_formula(param));
        }
        with_timing(&mut rec, opts, start);
        sink.emit(out, &rec)?;
    }
    Ok(Status::Ok)
}

const EXTREMAL_COLUMNS: [&str; 7] = [
    "rank",
    "graph6",
    "order",
    "size",
    "copsi",
    "cross_checked",
    "code",
];

fn candidate_rows(report: &ExtremalReport) -> Vec<[String; 7]> {
    report
        .ranked()
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            [
                (i + 1).to_string(),
                c.graph6.clone(),
                c.graph.order().to_string(),
                c.graph.size().to_string(),
                c.copsi.to_string(),
                c.cross_checked.to_string(),
                c.code.to_string(),
            ]
        })
        .collect()
}

fn summary_fields(report: &ExtremalReport) -> Vec<(&'static str, String)> {
    let maximizers: Vec<String> = report
        .candidates
        .iter()
        .filter(|c| report.maximizers.contains(&c.code))
        .map(|c| c.graph6.clone())
        .collect();
    let expected = report
        .candidates
        .iter()
        .find(|c| c.code == report.expected_code)
        .map_or_else(|| report.expected_code.to_graph(), |c| c.graph.clone());
    vec![
        ("candidates", report.candidates.len().to_string()),
        ("maximum", report.maximum.to_string()),
        ("maximizers", maximizers.join(",")),
        ("expected", graph6::encode(&expected)),
        ("expected_value", report.expected_value.to_string()),
        ("confirmed", report.confirms_expected().to_string()),
    ]
}

pub fn extremal(args: &ExtremalArgs, out: &mut impl Write) -> io::Result<Status> {
    let start = Instant::now();
    if args.jobs == 0 {
        eprintln!("copsi: --jobs must be at least 1");
        return Ok(Status::Usage);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(io::Error::other)?;
    let engine = Engine::default();
    let result = pool.install(|| match (args.target.by_size, args.target.by_order) {
        (Some(n), _) => extremal_by_size_with(&engine, n),
        (_, Some(m)) => extremal_by_order_with(&engine, m),
        (None, None) => unreachable!("clap requires one of --by-size/--by-order"),
    });
    let report = match result {
        Ok(r) => r,
        Err(e) => return Ok(report_error(&e)),
    };
    let input = match report.parameter {
        Parameter::Size(n) => format!("size {n}"),
        Parameter::Order(m) => format!("order {m}"),
    };
    let rows = candidate_rows(&report);
    let summary = summary_fields(&report);
    let elapsed = start.elapsed().as_millis();

    if args.out.json {
        let candidates: Vec<serde_json::Value> = rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> = EXTREMAL_COLUMNS
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let mut obj = serde_json::Map::new();
        obj.insert("command".into(), json!("extremal"));
        obj.insert("input".into(), json!(input));
        for (k, v) in &summary {
            obj.insert(k.to_string(), json!(v));
        }
        obj.insert("rows".into(), json!(candidates));
        if args.out.timing {
            obj.insert("timing_ms".into(), json!(elapsed.to_string()));
        }
        writeln!(out, "{}", serde_json::Value::Object(obj))?;
    } else {
        let widths: Vec<usize> = (0..EXTREMAL_COLUMNS.len())
            .map(|i| {
                rows.iter()
                    .map(|r| r[i].len())
                    .chain([EXTREMAL_COLUMNS[i].len()])
                    .max()
                    .unwrap()
            })
            .collect();
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(EXTREMAL_COLUMNS.to_vec()))?;
        for row in &rows {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
        }
        let mut rec = OutputRecord::new("extremal", input);
        for (k, v) in summary {
            rec.push(k, v);
        }
        if args.out.timing {
            rec.timing_ms = Some(elapsed);
        }
        writeln!(out, "{}", rec.table_line())?;
    }
    Ok(if report.confirms_expected() {
        Status::Ok
    } else {
        eprintln!("copsi: expected unique maximiser not confirmed");
        Status::Failed
    })
}

pub fn verify(
    suite: SuiteArg,
    order_bound: usize,
    opts: OutputArgs,
    out: &mut impl Write,
) -> io::Result<Status> {
    let start = Instant::now();
    let (suite, name) = match suite {
        SuiteArg::Lemma => (Suite::Lemma, "lemma"),
        SuiteArg::Engines => (Suite::Engines, "engines"),
        SuiteArg::Formulas => (Suite::Formulas, "formulas"),
        SuiteArg::All => (Suite::All, "all"),
    };
    let report = match run_suite(suite, order_bound) {
        Ok(r) => r,
        Err(e) => return Ok(report_error(&e)),
    };
    let sink = Sink { json: opts.json };
    for check in &report.checks {
        let mut rec = OutputRecord::new("verify", check.name.clone())
            .field("passed", check.passed)
            .field("detail", &check.detail);
        if let Some(w) = &check.witness {
            eprintln!("copsi: {} failed: {w}", check.name);
            rec.push("witness", w);
        }
        sink.emit(out, &rec)?;
    }
    let mut rec = OutputRecord::new("verify", name)
        .field("order_bound", order_bound)
        .field("checks", report.checks.len())
        .field("passed", report.passed());
    with_timing(&mut rec, opts, start);
    sink.emit(out, &rec)?;
    Ok(if report.passed() {
        Status::Ok
    } else {
        Status::Failed
    })
}

pub fn gen(family: &str, param: usize, out: &mut impl Write) -> io::Result<Status> {
    let family = match parse_family(family) {
        Ok(f) => f,
        Err(s) => return Ok(s),
    };
    match family.generate(param) {
        Ok(g) => {
            writeln!(out, "{}", graph6::encode(&g))?;
            Ok(Status::Ok)
        }
        Err(e) => Ok(report_error(&e)),
    }
}
