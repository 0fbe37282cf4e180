use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dp3::cluster::{Point, Seed};
use dp3::contour::{build_contour, classify_sign_pattern, extract_subgraphs, sign_pattern};
use dp3::formula::{phi, z};
use dp3::laurent::LaurentPoly;
use dp3::matching::{combinatorial_z_sides, count_matchings, hexahedron_sequences, WeightedGraph};
use dp3::taut::taut_mixed_partition;
use dp3::tiling::load_model_tiling;
use dp3::Error;

mod render;
mod verify;

use render::Scene;

/// Seeds visited before the mutation method gives up on a point.
const MUTATION_SEARCH_LIMIT: usize = 500_000;

/// Environment variable naming a directory for relative `--output` paths.
const OUT_DIR_VAR: &str = "DP3_OUT_DIR";

#[derive(Parser)]
#[command(name = "dp3", version, about = "Toric cluster variables of the dP3 quiver")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// The cluster variable at a lattice point.
    Z {
        #[arg(long, value_parser = model)]
        model: u8,
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        point: Point,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Compare formula and matchings over a grid of points.
    Verify {
        /// Grid radius: |i|, |j| <= R and -R <= k <= R + 1.
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        grid: i64,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4", value_parser = model)]
        models: Vec<u8>,
        /// Include per-model wall-clock times (output is then not reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Describe the contour of a point or side tuple.
    Contour {
        #[command(flatten)]
        target: ContourTarget,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Number of perfect matchings of the core graph.
    Count {
        #[command(flatten)]
        target: ContourTarget,
    },
    /// Apply a mutation sequence to an initial seed.
    Mutate {
        #[arg(long, value_parser = model)]
        model: u8,
        /// Comma-separated 1-based vertices; empty for the initial seed.
        #[arg(long, value_delimiter = ',', default_value = "")]
        seq: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// The integer sequences A_n, B_n of the hexahedron recurrence.
    Hexahedron {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
    },
    /// Taut double-dimer count for a self-intersecting Model 4 contour.
    Taut {
        #[arg(long, value_parser = point, allow_hyphen_values = true)]
        point: Point,
        #[arg(long)]
        json: bool,
    },
    /// Write a picture of a contour, a tiling patch or an empty document.
    Export {
        #[arg(long, value_enum)]
        kind: Kind,
        #[command(flatten)]
        target: ExportTarget,
        /// Relative paths are placed under $DP3_OUT_DIR when it is set.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ContourTarget {
    #[arg(long, value_parser = model)]
    model: u8,
    #[arg(long, value_parser = point, allow_hyphen_values = true, conflicts_with = "sides", required_unless_present = "sides")]
    point: Option<Point>,
    #[arg(long, value_parser = sides, allow_hyphen_values = true)]
    sides: Option<[i64; 6]>,
}

impl ContourTarget {
    fn sides(&self) -> [i64; 6] {
        self.sides.unwrap_or_else(|| phi(self.point.expect("clap enforces one of point/sides")))
    }
}

#[derive(Args)]
struct ExportTarget {
    #[arg(long, value_parser = model, required_unless_present = "empty")]
    model: Option<u8>,
    #[arg(long, value_parser = point, allow_hyphen_values = true, group = "what")]
    point: Option<Point>,
    #[arg(long, value_parser = sides, allow_hyphen_values = true, group = "what")]
    sides: Option<[i64; 6]>,
    /// Unfold the periodic tiling to this radius instead of cutting a contour.
    #[arg(long, group = "what")]
    tiling: Option<i64>,
    #[arg(long, group = "what")]
    empty: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Matching,
    Mutation,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
    Dot,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Dot,
    Svg,
    Json,
}

fn model(s: &str) -> Result<u8, String> {
    match s.trim().parse::<u8>() {
        Ok(m @ 1..=4) => Ok(m),
        _ => Err(format!("model must be 1, 2, 3 or 4, got `{s}`")),
    }
}

fn ints(s: &str, n: usize) -> Result<Vec<i64>, String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(format!("expected {n} comma-separated integers, got {}", v.len()));
    }
    Ok(v)
}

fn point(s: &str) -> Result<Point, String> {
    let v = ints(s, 3)?;
    Ok((v[0], v[1], v[2]))
}

fn sides(s: &str) -> Result<[i64; 6], String> {
    let v = ints(s, 6)?;
    Ok([v[0], v[1], v[2], v[3], v[4], v[5]])
}

fn fmt_point(p: Point) -> String {
    format!("({},{},{})", p.0, p.1, p.2)
}

/// Error type of the binary: a message plus the exit code to use.
struct Fail(String, u8);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(e.to_string(), 1)
    }
}

type Out = Result<ExitCode, Fail>;

fn self_intersecting_hint(model: u8, s: [i64; 6], p: Option<Point>) -> Fail {
    let mut msg = format!(
        "contour {s:?} ({}) of model {model} is self-intersecting; no perfect matching formula applies",
        sign_pattern(&s)
    );
    if let Some(p) = p {
        msg.push_str(&format!("; try `dp3 taut --point {},{},{}`", p.0, p.1, p.2));
    }
    Fail(msg, 1)
}

fn matching_value(model: u8, p: Point) -> Result<LaurentPoly, Fail> {
    let s = phi(p);
    combinatorial_z_sides(model, s).map_err(|e| match e {
        Error::SelfIntersecting(_) => self_intersecting_hint(model, s, Some(p)),
        e => e.into(),
    })
}

fn cmd_z(model: u8, p: Point, method: Method, json: bool) -> Out {
    let mut rows: Vec<(&str, Result<String, String>)> = Vec::new();
    let mut route = None;
    if matches!(method, Method::Formula | Method::All) {
        rows.push(("formula", z(model, p).map(|v| v.to_string()).map_err(|e| e.to_string())));
    }
    if matches!(method, Method::Matching | Method::All) {
        match matching_value(model, p) {
            Ok(v) => rows.push(("matching", Ok(v.to_string()))),
            Err(f) if method == Method::Matching => return Err(f),
            Err(f) => rows.push(("matching", Err(f.0))),
        }
    }
    if matches!(method, Method::Mutation | Method::All) {
        match dp3::cluster::z_by_mutation(model, p, MUTATION_SEARCH_LIMIT) {
            Ok((seq, v)) => {
                route = Some(seq);
                rows.push(("mutation", Ok(v.to_string())));
            }
            Err(e) => rows.push(("mutation", Err(e.to_string()))),
        }
    }
    if method != Method::All {
        let (_, v) = rows.pop().expect("one method ran");
        let v = v.map_err(|e| Fail(e, 1))?;
        if json {
            let doc = serde_json::json!({"model": model, "point": p, "value": v, "mutations": route});
            println!("{doc}");
        } else {
            println!("{v}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let values: Vec<&String> = rows.iter().filter_map(|(_, v)| v.as_ref().ok()).collect();
    let agree = values.len() >= 2 && values.iter().all(|v| *v == values[0]);
    let verdict = if agree { "AGREE" } else { "DISAGREE" };
    if json {
        let methods: serde_json::Map<String, serde_json::Value> = rows
            .iter()
            .map(|(k, v)| {
                let val = match v {
                    Ok(s) => serde_json::json!({"value": s}),
                    Err(e) => serde_json::json!({"error": e}),
                };
                (k.to_string(), val)
            })
            .collect();
        let doc = serde_json::json!({"model": model, "point": p, "methods": methods, "verdict": verdict});
        println!("{doc}");
    } else {
        for (k, v) in &rows {
            match v {
                Ok(s) => println!("{k}: {s}"),
                Err(e) => println!("{k}: unavailable ({e})"),
            }
        }
        println!("{verdict}");
    }
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn output_path(p: PathBuf) -> PathBuf {
    match std::env::var_os(OUT_DIR_VAR) {
        Some(dir) if p.is_relative() => PathBuf::from(dir).join(p),
        _ => p,
    }
}

fn write_out(text: &str, output: Option<PathBuf>) -> Result<(), Fail> {
    match output {
        Some(p) => {
            let p = output_path(p);
            std::fs::write(&p, text).map_err(|e| Fail(format!("cannot write {}: {e}", p.display()), 1))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_verify(grid: i64, mut models: Vec<u8>, timings: bool, output: Option<PathBuf>) -> Out {
    models.sort_unstable();
    models.dedup();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let report = verify::run(command, grid, &models, timings);
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    write_out(&text, output)?;
    eprintln!("{} passed, {} failed, {} skipped", report.passed, report.failed, report.skipped);
    Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn contour_scene(model: u8, s: [i64; 6]) -> Result<Scene, Fail> {
    let c = build_contour(model, s)?;
    let title = format!("model {model} contour {s:?}");
    if c.self_intersecting {
        return Ok(Scene { title, contour: c.path, ..Scene::default() });
    }
    let g = extract_subgraphs(&c)?;
    Ok(Scene {
        title,
        core: g.core.vertices.iter().map(|v| v.pos).collect(),
        patch: g.extended,
        forced: g.forced,
        contour: c.path,
        removed: g.removed,
        covering: g.covering.to_string(),
    })
}

fn cmd_contour(t: &ContourTarget, emit: Emit) -> Out {
    let s = t.sides();
    let text = match emit {
        Emit::Text => {
            let c = build_contour(t.model, s)?;
            let mut lines = vec![
                format!("sides: {s:?}"),
                format!("sign pattern: {}", c.sign_pattern()),
                format!("family: {}", classify_sign_pattern(t.model, &s).tag()),
                format!("self-intersecting: {}", c.self_intersecting),
            ];
            if !c.self_intersecting {
                let g = extract_subgraphs(&c)?;
                lines.push(format!(
                    "extended: {} vertices, {} edges",
                    g.extended.vertices.len(),
                    g.extended.edges.len()
                ));
                lines.push(format!("core: {} vertices, {} edges", g.core.vertices.len(), g.core.edges.len()));
                lines.push(format!("forced edges: {}", g.forced.len()));
                lines.push(format!("covering: {}", g.covering));
            }
            lines.join("\n") + "\n"
        }
        Emit::Json => {
            let c = build_contour(t.model, s)?;
            let doc = if c.self_intersecting {
                serde_json::json!({"contour": c, "family": classify_sign_pattern(t.model, &s)})
            } else {
                let g = extract_subgraphs(&c)?;
                serde_json::json!({"contour": c, "family": classify_sign_pattern(t.model, &s), "subgraphs": g})
            };
            serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
        }
        Emit::Dot => render::dot(&contour_scene(t.model, s)?),
        Emit::Svg => render::svg(&contour_scene(t.model, s)?),
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(t: &ContourTarget) -> Out {
    let s = t.sides();
    let c = build_contour(t.model, s)?;
    if c.self_intersecting {
        return Err(self_intersecting_hint(t.model, s, t.point));
    }
    let g = extract_subgraphs(&c)?;
    println!("{}", count_matchings(&WeightedGraph::from_patch(&g.core))?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_mutate(model: u8, seq: &[String], json: bool) -> Out {
    let mut vs = Vec::new();
    for t in seq.iter().map(|t| t.trim()).filter(|t| !t.is_empty()) {
        match t.parse::<usize>() {
            Ok(v @ 1..=6) => vs.push(v),
            _ => return Err(Fail(format!("mutation vertex must be 1..6, got `{t}`"), 2)),
        }
    }
    let s = Seed::initial(model).apply_sequence(&vs)?;
    let class = s.quiver.classify();
    if json {
        let vars: Vec<String> = s.vars.iter().map(|v| v.to_string()).collect();
        let doc = serde_json::json!({"model": model, "sequence": vs, "quiver_model": class, "cluster": vars});
        println!("{doc}");
    } else {
        for (i, v) in s.vars.iter().enumerate() {
            println!("x{}: {v}", i + 1);
        }
        match class {
            Some(m) => println!("quiver: model {m}"),
            None => println!("quiver: not one of the four models"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_hexahedron(n: u32) -> Out {
    let (a, b) = hexahedron_sequences(n as usize)?;
    for k in 0..=n as usize {
        println!("{k} {} {}", a[k], b[k]);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_taut(p: Point, json: bool) -> Out {
    let r = taut_mixed_partition(p)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&r).expect("serializes"));
    } else {
        println!("point: {}", fmt_point(p));
        println!("modified sides: {:?}", r.modified);
        println!("configurations: {} ({} taut)", r.configurations, r.taut_configurations);
        println!("at ones: {} ({} before the taut filter)", r.taut_at_ones, r.total_at_ones);
        println!("value: {}", r.value);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_export(kind: Kind, t: &ExportTarget, output: Option<PathBuf>) -> Out {
    let scene = if t.empty {
        Scene { title: "empty".into(), ..Scene::default() }
    } else {
        let m = t.model.expect("clap requires a model");
        if let Some(r) = t.tiling {
            if r < 0 {
                return Err(Fail("tiling radius must be non-negative".into(), 2));
            }
            Scene { title: format!("model {m} tiling, radius {r}"), patch: load_model_tiling(m).unfold(r), ..Scene::default() }
        } else {
            let s = match (t.point, t.sides) {
                (Some(p), _) => phi(p),
                (_, Some(s)) => s,
                _ => return Err(Fail("export needs --point, --sides, --tiling or --empty".into(), 2)),
            };
            contour_scene(m, s)?
        }
    };
    let text = match kind {
        Kind::Dot => render::dot(&scene),
        Kind::Svg => render::svg(&scene),
        Kind::Json => render::json(&scene),
    };
    write_out(&text, output)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.cmd {
        Cmd::Z { model, point, method, json } => cmd_z(model, point, method, json),
        Cmd::Verify { grid, models, timings, output } => cmd_verify(grid, models, timings, output),
        Cmd::Contour { target, emit } => cmd_contour(&target, emit),
        Cmd::Count { target } => cmd_count(&target),
        Cmd::Mutate { model, seq, json } => cmd_mutate(model, &seq, json),
        Cmd::Hexahedron { n } => cmd_hexahedron(n),
        Cmd::Taut { point, json } => cmd_taut(point, json),
        Cmd::Export { kind, target, output } => cmd_export(kind, &target, output),
    };
    match out {
        Ok(code) => code,
        Err(Fail(msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
