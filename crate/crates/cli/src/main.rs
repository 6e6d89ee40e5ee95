mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use singcoh::acceptance::{run_table, Budget, Bundle, RowStatus};
use singcoh::cohomology::{cohomology_table, sw_invariant};
use singcoh::examples::BUNDLE;
use singcoh::lattice::{box_size, DEFAULT_MAX_STATES};
use singcoh::newton::{build_diagram, check_isolated, check_rhs, classify_faces, mt_count, Support};
use singcoh::oka::{build_resolution, zk_cross_check};
use singcoh::path::{min_path, reduced_path_bound};
use singcoh::plumbing::k_squared_plus_v;
use singcoh::reduction::build_reduced_levels;
use singcoh::sequence::pg_certificate;
use singcoh::superisolated::{surgery_report, SISpec};
use singcoh::{Error, PlumbingGraph};

use report::{exit_code, Report, EXIT_DIAGRAM, EXIT_INVARIANT, EXIT_OK, EXIT_PARSE};

#[derive(Parser)]
#[command(name = "singcoh", version, about = "Lattice cohomology and genus certificates for surface singularities")]
struct Cli {
    /// Print the structured report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// State budget for lattice box enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STATES)]
    max_states: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a plumbing graph file.
    Graph { file: PathBuf },
    /// Oka graph, genus sequence and certificate of a Newton support file.
    Newton {
        file: PathBuf,
        /// Write the generated plumbing graph to this file.
        #[arg(long)]
        emit_graph: Option<PathBuf>,
    },
    /// Semigroup formula for a superisolated singularity spec.
    Si { file: PathBuf },
    /// Run the reproduction table on the bundled examples or a bundle directory.
    Reproduce { bundle: Option<PathBuf> },
}

/// A fatal error: exit code and message.
struct Fatal(i32, String);

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        Fatal(exit_code(&e), e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Fatal> {
    std::fs::read_to_string(path).map_err(|e| Fatal(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn cmd_graph(file: &Path, max_states: u64) -> Result<Report, Fatal> {
    let text = read(file)?;
    let mut r = Report::new(format!("graph {}", file.display()), &[text.as_bytes()]);
    let g = PlumbingGraph::parse_definite(&text)?;
    let canon = g.canonical_cycle()?;
    r.set("vertices", g.len());
    r.set("det", g.determinant()?);
    r.set("gorenstein", canon.gorenstein);
    r.set("K", &canon.k);
    let Some(zk) = canon.zk.clone() else {
        r.warnings
            .push("canonical cycle is not integral; lattice cohomology needs a numerically Gorenstein graph".into());
        return Ok(r);
    };
    r.set("Z_K", &zk);
    let k2v = k_squared_plus_v(&g, &canon.k)?;
    r.set("K^2+|V|", &k2v);
    let red = match build_reduced_levels(&g, &zk, max_states) {
        Ok(red) => red,
        Err(e @ Error::BoxTooLarge { .. }) => {
            r.skipped.push(format!("lattice cohomology: {e}"));
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    let t = cohomology_table(&red.levels)?;
    r.set("m", t.m);
    r.set("sum b0", t.rank(0));
    r.set("sum b1", t.rank(1));
    r.set("eu_h0", t.eu_h0());
    r.set("eu_star", t.eu_star());
    r.set("sw", sw_invariant(&t, &k2v));
    match min_path(&g, &zk, max_states) {
        Ok((c, _)) => {
            r.set("min_path", c);
            r.check("min_path <= eu_h0", c as i64 <= t.eu_h0(), true);
        }
        Err(e @ Error::BoxTooLarge { .. }) => {
            r.skipped.push(format!("min_path: {e}"));
            let (ub, _) = reduced_path_bound(&g, &zk, &red)?;
            r.set("min_path upper bound", ub);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

fn cmd_newton(file: &Path, emit: Option<&Path>, max_states: u64) -> Result<Report, Fatal> {
    let text = read(file)?;
    let mut r = Report::new(format!("newton {}", file.display()), &[text.as_bytes()]);
    let s = Support::parse(&text)?;
    let d = build_diagram(&s)?;
    if !check_isolated(&d) {
        return Err(Fatal(EXIT_DIAGRAM, "diagram is not convenient: the singularity is not isolated".into()));
    }
    if !check_rhs(&d) {
        return Err(Fatal(EXIT_DIAGRAM, "link is not a rational homology sphere".into()));
    }
    let compact = d.compact_faces();
    r.set("compact faces", compact.len());
    for (i, &f) in compact.iter().enumerate() {
        let face = &d.faces[f];
        let verts: Vec<String> = face.vertices.iter().map(|p| format!("({},{},{})", p[0], p[1], p[2])).collect();
        r.set(
            format!("face {i}"),
            format!(
                "normal ({},{},{}) level {} {:?} {}",
                face.normal[0],
                face.normal[1],
                face.normal[2],
                face.level,
                face.kind,
                verts.join(" ")
            ),
        );
    }
    let mt = mt_count(&d);
    r.set("mt_count", mt);
    if classify_faces(&d)?.special {
        r.warnings.push(
            "all faces fall in the excluded special case (all-even Brieskorn type); the genus sequence does not apply"
                .into(),
        );
        return Ok(r);
    }
    let eg = build_resolution(&d)?;
    r.set("graph vertices", eg.core.len());
    if let Some(p) = emit {
        std::fs::write(p, eg.to_text()).map_err(|e| Fatal(EXIT_PARSE, format!("{}: {e}", p.display())))?;
        r.set("graph file", p.display());
    }
    let zk = eg.core.anticanonical()?;
    r.set("Z_K", &zk);
    r.check("zk_cross_check", zk_cross_check(&eg, d.support.points())?, true);
    let cert = pg_certificate(&eg, &d)?;
    r.set("sequence pg", cert.pg);
    r.set("dual path cost", cert.path_cost);
    r.set("ratio ties", cert.ties);
    let w = cert.steps.len().to_string().len();
    for (i, st) in cert.steps.iter().enumerate() {
        r.set(
            format!("step {i:0w$}"),
            format!(
                "{} {:?} cost {} |P| {} cumulative {} / {}",
                st.vertex, st.kind, st.cost, st.points, st.cumulative_cost, st.cumulative_points
            ),
        );
    }
    let path: Vec<&str> = cert.path.steps.iter().map(|&v| eg.core.ids()[v].as_str()).collect();
    r.set("dual path", path.join(" "));
    r.check("sequence pg = mt_count", cert.pg, mt);
    r.check("dual path cost = pg", cert.path_cost, cert.pg);
    if box_size(&zk.0) <= max_states as u128 {
        let (c, _) = min_path(&eg.core, &zk, max_states)?;
        r.set("min_path", c);
        r.check("min_path = pg", c, cert.pg);
    } else {
        r.set("min_path", format!("not computed (box of {} points)", box_size(&zk.0)));
    }
    Ok(r)
}

fn cmd_si(file: &Path) -> Result<Report, Fatal> {
    let text = read(file)?;
    let mut r = Report::new(format!("si {}", file.display()), &[text.as_bytes()]);
    let spec = SISpec::parse(&text)?;
    let rep = surgery_report(&spec);
    r.set("d", rep.d);
    r.set("mu_total", rep.mu_total);
    r.set("realizable", rep.realizable);
    let w = rep.terms.len().saturating_sub(1).to_string().len();
    for t in &rep.terms {
        r.set(format!("min j={:0w$}", t.j), t.min);
        if let Some(e) = t.expected {
            r.check(format!("j={} against (j-d+1)(j-d+2)/2", t.j), t.min, e);
        }
    }
    r.set("eu_surgery", rep.eu);
    r.set("pg_superisolated", rep.pg);
    if rep.realizable {
        r.check("eu_surgery = pg_superisolated", rep.eu, rep.pg);
    } else {
        r.warnings
            .push("sum of Milnor numbers differs from (d-1)(d-2); oracle comparisons skipped".into());
    }
    Ok(r)
}

fn cmd_reproduce(dir: Option<&Path>, max_states: u64) -> Result<(Report, i32), Fatal> {
    let mut files = Vec::new();
    for (name, embedded) in BUNDLE {
        let text = match dir {
            Some(d) => read(&d.join(name))?,
            None => embedded.to_string(),
        };
        files.push((*name, text));
    }
    let bytes: Vec<&[u8]> = files.iter().flat_map(|(n, t)| [n.as_bytes(), t.as_bytes()]).collect();
    let command = match dir {
        Some(d) => format!("reproduce {}", d.display()),
        None => "reproduce".to_string(),
    };
    let mut r = Report::new(command, &bytes);
    let pairs: Vec<(&str, &str)> = files.iter().map(|(n, t)| (*n, t.as_str())).collect();
    let bundle = Bundle::parse(&pairs)?;
    let rows = run_table(&bundle, Budget::with_max_states(max_states));
    let mut failed = false;
    for row in &rows {
        r.set(format!("row {}", row.id), format!("{} {}: {}", row.status, row.title, row.detail()));
        for c in &row.checks {
            r.check(format!("row {}: {}", row.id, c.name), &c.got, &c.expected);
        }
        for s in &row.skipped {
            r.skipped.push(format!("row {}: {s}", row.id));
        }
        failed |= row.status == RowStatus::Fail;
    }
    Ok((r, if failed { EXIT_INVARIANT } else { EXIT_OK }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Graph { file } => cmd_graph(file, cli.max_states).map(|r| {
            let c = r.exit_code();
            (r, c)
        }),
        Command::Newton { file, emit_graph } => cmd_newton(file, emit_graph.as_deref(), cli.max_states).map(|r| {
            let c = r.exit_code();
            (r, c)
        }),
        Command::Si { file } => cmd_si(file).map(|r| {
            let c = r.exit_code();
            (r, c)
        }),
        Command::Reproduce { bundle } => cmd_reproduce(bundle.as_deref(), cli.max_states),
    };
    match outcome {
        Ok((r, code)) => {
            if cli.json {
                print!("{}", r.to_json());
            } else {
                print!("{}", r.to_table());
            }
            ExitCode::from(code as u8)
        }
        Err(Fatal(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
