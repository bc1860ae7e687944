use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use ribbon_core::arrows::ArrowPresentation;
use ribbon_core::bouquet::{extract_obstruction, intersection_graph, quotient_graph, Dot};
use ribbon_core::characterize::{obstruction_search_k, pinned, verify_theorem1_with, Limits};
use ribbon_core::enumerate::{DEFAULT_BOUQUET_CAP, DEFAULT_GENERAL_CAP};
use ribbon_core::knots::{knot_report, PdCode, SignedGaussCode};
use ribbon_core::pdual::DEFAULT_BRUTE_CAP;
use ribbon_core::{
    apply_step, contract_edge, decide_with, enumerate_with_cap, euler_genus, face_count, find_biseparation_with_cap,
    from_arrow_presentation, genus_profile_with_cap, geometric_dual, is_orientable, num_components, parse_rg,
    partial_dual, theorem2_mismatches, to_rg_string, BiseparationKind, EdgeSubset, EnumerationSpec,
    MinorStep, RibbonGraph, Witness,
};
use serde::Serialize;

use crate::{Cli, Command, DeleteArgs, EnumerateArgs, KindArg, KnotArgs, ShowArg};

#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: ribbon_core::Error },
    #[error(transparent)]
    Core(#[from] ribbon_core::Error),
}

type Result<T> = std::result::Result<T, Failure>;

pub struct Output {
    pub text: String,
    /// The command answered a yes/no question with "no".
    pub negative: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, negative: false }
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Failure::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// Reads a `.rg` file, or an arrow presentation when the extension is
/// `.arrows`.
fn load(path: &Path) -> Result<RibbonGraph> {
    let text = read(path)?;
    let parsed = if path.extension().is_some_and(|e| e == "arrows") {
        ArrowPresentation::parse(&text).and_then(|p| from_arrow_presentation(&p))
    } else {
        parse_rg(&text)
    };
    parsed.map_err(|source| Failure::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(b) = cli.brute_cap {
        l.brute_cap = b;
    }
    if let Some(m) = cli.max_edges {
        l.search.host_cap = m;
        l.sweep_cap = m;
    }
    l
}

fn graph_output(cli: &Cli, g: &RibbonGraph) -> Output {
    Output::ok(if cli.json { json(g) } else { to_rg_string(g) })
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Genus { file } => genus(cli, &load(file)?),
        Command::Dual { file } => Ok(graph_output(cli, &geometric_dual(&load(file)?))),
        Command::Pdual { file, edges } => {
            let g = load(file)?;
            Ok(graph_output(cli, &partial_dual(&g, &EdgeSubset::from_labels(edges))?))
        }
        Command::Contract { file, edges } => {
            let mut g = load(file)?;
            for e in edges {
                g = contract_edge(&g, e)?;
            }
            Ok(graph_output(cli, &g))
        }
        Command::Delete(args) => delete(cli, args),
        Command::Minor { file, target } => minor(cli, &load(file)?, target),
        Command::Biseparation { file, kind } => biseparation(cli, &load(file)?, *kind),
        Command::Bouquet { file, show } => bouquet(cli, &load(file)?, *show),
        Command::Characterize { file } => characterize(cli, &load(file)?),
        Command::Enumerate(args) => enumerate(cli, args),
        Command::Obstructions { genus } => obstructions(cli, *genus),
        Command::Knot(args) => knot(cli, args),
        Command::Selftest => selftest(cli),
        Command::Profile { file } => {
            let p = genus_profile_with_cap(&load(file)?, cli.brute_cap.unwrap_or(DEFAULT_BRUTE_CAP))?;
            Ok(Output::ok(json(&p)))
        }
    }
}

#[derive(Serialize)]
struct GenusReport {
    euler_genus: usize,
    vertices: usize,
    edges: usize,
    faces: usize,
    components: usize,
    orientable: bool,
}

fn genus(cli: &Cli, g: &RibbonGraph) -> Result<Output> {
    let r = GenusReport {
        euler_genus: euler_genus(g),
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        faces: face_count(g),
        components: num_components(g),
        orientable: is_orientable(g),
    };
    Ok(Output::ok(if cli.json {
        json(&r)
    } else {
        format!("euler_genus: {}\n", r.euler_genus)
    }))
}

fn delete(cli: &Cli, args: &DeleteArgs) -> Result<Output> {
    let mut g = load(&args.file)?;
    let steps = args
        .edges
        .iter()
        .map(|e| MinorStep::DeleteEdge(e.clone()))
        .chain(args.vertices.iter().map(|v| MinorStep::DeleteVertex(v.clone())));
    for s in steps {
        g = apply_step(&g, &s)?;
    }
    Ok(graph_output(cli, &g))
}

fn none(cli: &Cli) -> Output {
    Output {
        text: if cli.json { "null\n".into() } else { "none\n".into() },
        negative: true,
    }
}

fn minor(cli: &Cli, g: &RibbonGraph, target: &str) -> Result<Output> {
    let owned;
    let (name, h) = match pinned(target) {
        Some(h) => (target.to_ascii_uppercase(), h),
        None => {
            let path = Path::new(target);
            owned = load(path)?;
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
            (stem.unwrap_or_else(|| target.to_string()), &owned)
        }
    };
    let cert = limits(cli).search.find(g, &[(name.as_str(), h)])?;
    Ok(match cert {
        Some(c) => Output::ok(json(&c)),
        None => none(cli),
    })
}

fn biseparation(cli: &Cli, g: &RibbonGraph, kind: KindArg) -> Result<Output> {
    let kind = match kind {
        KindArg::Plane => BiseparationKind::Plane,
        KindArg::Rp2 => BiseparationKind::Rp2,
    };
    let cert = find_biseparation_with_cap(g, kind, cli.brute_cap.unwrap_or(DEFAULT_BRUTE_CAP))?;
    Ok(match cert {
        Some(c) => Output::ok(json(&c)),
        None => none(cli),
    })
}

fn bouquet(cli: &Cli, g: &RibbonGraph, show: ShowArg) -> Result<Output> {
    match show {
        ShowArg::Intersection => {
            let i = intersection_graph(g)?;
            Ok(Output::ok(if cli.json {
                json(&i)
            } else {
                Dot(&i.graph, &i.negative).to_string()
            }))
        }
        ShowArg::Quotient => {
            let q = quotient_graph(&intersection_graph(g)?)?;
            Ok(Output::ok(if cli.json {
                json(&q)
            } else {
                Dot(&q.graph, &q.negative_flags()).to_string()
            }))
        }
        ShowArg::Certificate => Ok(Output::ok(json(&extract_obstruction(g)?))),
    }
}

fn characterize(cli: &Cli, g: &RibbonGraph) -> Result<Output> {
    let d = decide_with(g, &limits(cli))?;
    let text = if cli.json {
        json(&d)
    } else {
        let mut s = format!("admits_low_genus_partial_dual: {}\n", d.admits_low_genus_partial_dual);
        match &d.witness {
            Witness::Biseparation(b) => {
                let a: Vec<&str> = b.a.iter().collect();
                let kind = match b.kind {
                    BiseparationKind::Plane => "plane",
                    _ => "RP2",
                };
                writeln!(s, "witness: {kind}-biseparation A = {{{}}}", a.join(", ")).unwrap();
            }
            Witness::Minor { minor } => {
                writeln!(s, "witness: {} minor", minor.target).unwrap();
                for step in &minor.steps {
                    writeln!(s, "  {step}").unwrap();
                }
            }
        }
        s
    };
    Ok(Output {
        text,
        negative: !d.admits_low_genus_partial_dual,
    })
}

fn enumerate(cli: &Cli, args: &EnumerateArgs) -> Result<Output> {
    let (spec, default_cap) = if args.bouquets {
        (EnumerationSpec::bouquets(args.edges), DEFAULT_BOUQUET_CAP)
    } else if args.all {
        (EnumerationSpec::all(args.edges), DEFAULT_GENERAL_CAP)
    } else {
        (EnumerationSpec::connected(args.edges), DEFAULT_GENERAL_CAP)
    };
    let spec = if args.exact { spec.exactly(args.edges) } else { spec };
    let graphs = enumerate_with_cap(spec, cli.max_edges.unwrap_or(default_cap))?;
    if args.count {
        return Ok(Output::ok(if cli.json {
            json(&serde_json::json!({ "count": graphs.len() }))
        } else {
            format!("{}\n", graphs.len())
        }));
    }
    if let Some(dir) = &args.out {
        let write_err = |source| Failure::Write {
            path: dir.clone(),
            source,
        };
        std::fs::create_dir_all(dir).map_err(write_err)?;
        for (i, g) in graphs.iter().enumerate() {
            let path = dir.join(format!("class{:05}.rg", i + 1));
            std::fs::write(&path, to_rg_string(g)).map_err(|source| Failure::Write { path, source })?;
        }
        return Ok(Output::ok(format!("wrote {} files to {}\n", graphs.len(), dir.display())));
    }
    if cli.json {
        return Ok(Output::ok(json(&graphs)));
    }
    let mut s = String::new();
    for (i, g) in graphs.iter().enumerate() {
        writeln!(s, "# class {}", i + 1).unwrap();
        s.push_str(&to_rg_string(g));
        s.push('\n');
    }
    Ok(Output::ok(s))
}

fn obstructions(cli: &Cli, k: usize) -> Result<Output> {
    let max = cli.max_edges.unwrap_or(3);
    let mut l = limits(cli);
    l.sweep_cap = max;
    let obs = obstruction_search_k(max, k, &l)?;
    if cli.json {
        return Ok(Output::ok(json(&obs)));
    }
    let mut s = String::new();
    if k != 1 {
        writeln!(s, "# experimental: obstructions to Euler genus at most {k}").unwrap();
    }
    for (i, o) in obs.iter().enumerate() {
        writeln!(
            s,
            "# obstruction {}: {} edges, minimum partial-dual Euler genus {}",
            i + 1,
            o.edges,
            o.min_genus
        )
        .unwrap();
        s.push_str(&to_rg_string(&o.graph));
        s.push('\n');
    }
    Ok(Output::ok(s))
}

fn knot(cli: &Cli, args: &KnotArgs) -> Result<Output> {
    let code = match (&args.pd, &args.gauss) {
        (Some(pd), _) => PdCode::parse(pd)?,
        (None, Some(gauss)) => SignedGaussCode::parse(gauss)?.to_pd()?,
        (None, None) => unreachable!("clap requires one of --pd and --gauss"),
    };
    let r = knot_report(&code)?;
    let text = if cli.json {
        json(&r)
    } else {
        let g = &r.ribbon_graph;
        format!(
            "state circles: {}\ncrossings: {}\nrepresentable_in_rp3: {}\n{}",
            g.num_vertices(),
            g.num_edges(),
            r.representable_in_rp3,
            to_rg_string(g)
        )
    };
    Ok(Output {
        text,
        negative: !r.representable_in_rp3,
    })
}

#[derive(Serialize)]
struct SelftestReport {
    max_edges: usize,
    theorem1: ribbon_core::characterize::Theorem1Report,
    theorem2: Theorem2Report,
    passed: bool,
}

#[derive(Serialize)]
struct Theorem2Report {
    checked: usize,
    pairs: usize,
    /// Graphs with at least one mismatching subset.
    mismatches: Vec<String>,
}

fn selftest(cli: &Cli) -> Result<Output> {
    let max = cli.max_edges.unwrap_or(3);
    let mut l = limits(cli);
    l.sweep_cap = max;
    let theorem1 = verify_theorem1_with(max, &l)?;
    let classes = enumerate_with_cap(EnumerationSpec::connected(max), max)?;
    let mut mismatches = Vec::new();
    let mut pairs = 0;
    for g in &classes {
        pairs += 1usize << g.num_edges();
        if !theorem2_mismatches(g)?.is_empty() {
            mismatches.push(g.to_string());
        }
    }
    let theorem2 = Theorem2Report {
        checked: classes.len(),
        pairs,
        mismatches,
    };
    let passed = theorem1.passed() && theorem2.mismatches.is_empty();
    let report = SelftestReport {
        max_edges: max,
        theorem1,
        theorem2,
        passed,
    };
    let text = if cli.json {
        json(&report)
    } else {
        format!(
            "theorem 1: {} connected classes with at most {max} edges, {} disagreements\n\
             theorem 2: {} classes, {} subsets, {} mismatching classes\n{}\n",
            report.theorem1.checked,
            report.theorem1.disagreements.len(),
            report.theorem2.checked,
            report.theorem2.pairs,
            report.theorem2.mismatches.len(),
            if passed { "PASS" } else { "FAIL" }
        )
    };
    Ok(Output { text, negative: !passed })
}
