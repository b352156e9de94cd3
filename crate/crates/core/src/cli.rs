//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a bound violation is detected (`audit`,
//! `fuzz`), 2 on usage or input errors. Data goes to the output stream or to
//! named files, diagnostics to the error stream.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bounds::{self, audit_graph};
use crate::constructions::{self, BipartiteTree, Block, GeneratedGraph, TreeMode};
use crate::fuzz::{random_connected_bounded, run_fuzz, FuzzConfig};
use crate::graph::{Graph, Regularity};
use crate::matching::{maximum_matching, tutte_berge, verify_matching, Matching, DEFAULT_TUTTE_BERGE_LIMIT};
use crate::rational::{decimal_string, exact_string, parse_rational, truncated_decimal_string, Rational};
use crate::region::{self, BoundingBox, RationalPoint, RegionLk, Transform, WitnessKind};

#[derive(Debug, Parser)]
#[command(name = "matchbound", version, about = "Matching numbers and their lower bounds for graphs of bounded degree")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximum matching of an edge-list graph: {"alpha", "edges"}
    Matching {
        file: PathBuf,
        /// instead check whether these edges form a matching, e.g. 0-1,2-3: {"valid"}
        #[arg(long)]
        verify: Option<String>,
    },
    /// Exhaustive Tutte-Berge minimum: {"alpha", "witness"}
    TutteBerge {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TUTTE_BERGE_LIMIT)]
        max_n: usize,
    },
    /// Structure of an edge-list graph: components, degrees, regularity
    Inspect {
        file: PathBuf,
        /// also report whether the maximum degree is at most k and which components are k-regular
        #[arg(long)]
        k: Option<usize>,
        /// count odd components after deleting these vertices, e.g. 0,3 ("" deletes none)
        #[arg(long)]
        delete: Option<String>,
    },
    /// Evaluate the bound formulas for given parameters
    Bound(BoundArgs),
    /// Evaluate every applicable lower bound; exits 1 on a violation
    Audit {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        /// write the report here instead of the output stream
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Generate an extremal family instance as an edge list
    Construct(ConstructArgs),
    /// Inspect the coefficient region L_k
    Region(RegionArgs),
    /// Audit bounds on seeded random graphs; exits 1 on a violation
    Fuzz {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// keep k-regular samples instead of removing an edge
        #[arg(long)]
        allow_regular: bool,
    },
    /// Seeded random connected graph of maximum degree at most k, as an edge list
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// keep a k-regular sample instead of removing an edge
        #[arg(long)]
        allow_regular: bool,
    },
    /// Print a reference table as CSV
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[command(subcommand)]
    family: Family,
    /// write the edge list here and a JSON sidecar to <out>.json
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// emit Graphviz DOT instead of an edge list
    #[arg(long, global = true)]
    dot: bool,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// G_{k,r}, k even
    Gkr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// gadgets, singles, or one 0/1 digit per block (1 = gadget)
        #[arg(long, default_value = "gadgets")]
        blocks: String,
    },
    /// H_{k,r}, k odd, from a canonical tree or a tree file
    Hkr {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, conflicts_with = "tree", requires = "r")]
        mode: Option<ModeArg>,
        #[arg(long, conflicts_with = "tree")]
        r: Option<usize>,
        /// edge-list tree; the side containing vertex 0 is V2
        #[arg(long)]
        tree: Option<PathBuf>,
    },
    /// F_{k,r}, k even
    Fkr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// The canonical bipartite tree used by hkr, k odd
    Tree {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// K_{k+1} - e
    CompleteMinusEdge {
        #[arg(long)]
        k: usize,
    },
    /// H_{k+2}, k odd
    Gadget {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Tree,
    Regular,
}

impl From<ModeArg> for TreeMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Tree => TreeMode::Tree,
            ModeArg::Regular => TreeMode::Regular,
        }
    }
}

#[derive(Debug, Args)]
struct RegionArgs {
    #[arg(long)]
    k: usize,
    /// classify "gamma,beta", e.g. -1/11,3/11
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// write the clipped polygon as CSV
    #[arg(long)]
    polygon: Option<PathBuf>,
    /// write the clipped polygon as SVG
    #[arg(long)]
    svg: Option<PathBuf>,
    /// move the point first: shift-down:EPS, tree-shear:EPS, regular-shear:EPS or mix:GAMMA,BETA:EPS
    #[arg(long, requires = "point", allow_hyphen_values = true)]
    transform: Option<String>,
    /// add the families on which the point is tight
    #[arg(long, requires = "point")]
    witness: bool,
    /// decide membership from the four half-spaces instead of the case split
    #[arg(long, requires = "point")]
    geometric: bool,
    /// clipping window "gmin,gmax,bmin,bmax"
    #[arg(long, allow_hyphen_values = true, default_value = "-1/2,1,-1/2,11/10")]
    bbox: String,
}

#[derive(Debug, Args)]
struct BoundArgs {
    /// maximum degree; required unless --degrees is given
    #[arg(long, required_unless_present = "degrees")]
    k: Option<usize>,
    #[arg(long, conflicts_with = "degrees")]
    n: Option<usize>,
    /// size; defaults to nk/2 with --regular
    #[arg(long, conflicts_with = "degrees", requires = "n")]
    m: Option<usize>,
    /// number of components
    #[arg(long, default_value_t = 1)]
    c: usize,
    /// the graph is connected and k-regular
    #[arg(long, requires = "n")]
    regular: bool,
    /// subcubic degree counts "n1,n2,n3"
    #[arg(long, conflicts_with = "k")]
    degrees: Option<String>,
}

/// Outcome of a subcommand that ran to completion.
enum Status {
    Ok,
    Violation,
}

struct Failure(String);

/// Marks a closed output stream, which ends the command without a diagnostic.
const BROKEN_PIPE: &str = "";

impl<E: std::fmt::Display + 'static> From<E> for Failure {
    fn from(e: E) -> Self {
        let any: &dyn std::any::Any = &e;
        match any.downcast_ref::<std::io::Error>() {
            Some(io) if io.kind() == std::io::ErrorKind::BrokenPipe => Failure(BROKEN_PIPE.into()),
            _ => Failure(e.to_string()),
        }
    }
}

type CmdResult = Result<Status, Failure>;

/// Runs the command line `argv` (including the program name) and returns the
/// process exit code.
pub fn run_cli<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{}", e.render());
                2
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(Status::Ok) => 0,
        Ok(Status::Violation) => 1,
        Err(Failure(message)) if message == BROKEN_PIPE => 0,
        Err(Failure(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Matching { file, verify: None } => {
            let g = read_graph(&file)?;
            let m = maximum_matching(&g);
            print_json(out, &json!({ "alpha": m.size(), "edges": m.edges }))
        }
        Command::Matching { file, verify: Some(pairs) } => {
            let g = read_graph(&file)?;
            let candidate = Matching { edges: parse_pairs(&pairs)? };
            print_json(out, &json!({ "valid": verify_matching(&g, &candidate) }))
        }
        Command::Inspect { file, k, delete } => inspect(&read_graph(&file)?, k, delete.as_deref(), out),
        Command::Bound(args) => bound_cmd(args, out),
        Command::TutteBerge { file, max_n } => {
            let g = read_graph(&file)?;
            let cert = tutte_berge(&g, max_n)?;
            print_json(out, &json!({ "alpha": cert.value, "witness": cert.witness }))
        }
        Command::Audit { file, k, json } => {
            let g = read_graph(&file)?;
            let report = audit_graph(&g, k)?;
            match json {
                Some(path) => write_file(&path, &to_json(&report)?)?,
                None => out.write_all(to_json(&report)?.as_bytes())?,
            }
            Ok(if report.violations().next().is_some() { Status::Violation } else { Status::Ok })
        }
        Command::Construct(args) => construct(args, out),
        Command::Region(args) => region_cmd(args, out),
        Command::Fuzz { k, trials, max_n, seed, allow_regular } => {
            let config = FuzzConfig { k, trials, max_n, seed, forbid_regular_components: !allow_regular };
            let outcome = run_fuzz(&config)?;
            print_json(out, &outcome)?;
            Ok(if outcome.is_clean() { Status::Ok } else { Status::Violation })
        }
        Command::Sample { n, k, seed, allow_regular } => {
            out.write_all(random_connected_bounded(seed, n, k, !allow_regular)?.to_edge_list().as_bytes())?;
            Ok(Status::Ok)
        }
        Command::Tables { which } => {
            let csv = match which {
                1 => table1_csv()?,
                2 => table2_csv()?,
                _ => table3_csv()?,
            };
            out.write_all(csv.as_bytes())?;
            Ok(Status::Ok)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    out.write_all(to_json(value)?.as_bytes())?;
    Ok(Status::Ok)
}

fn construct(args: ConstructArgs, out: &mut dyn Write) -> CmdResult {
    if let Family::Tree { k, r, mode } = args.family {
        let tree = constructions::canonical_tree(k, r, mode.into())?;
        let sidecar = to_json(&TreeSidecar { n: tree.graph().vertex_count(), m: tree.graph().edge_count(), v1: tree.v1(), v2: tree.v2() })?;
        return emit_construction(&format!("T_{k}_{r}"), tree.graph(), &sidecar, args.out, args.dot, out);
    }
    let (name, generated) = match args.family {
        Family::Gkr { k, r, blocks } => {
            let choices = Block::parse_choices(&blocks, constructions::gkr_block_count(k, r))?;
            (format!("G_{k}_{r}"), constructions::family_gkr(k, r, &choices)?)
        }
        Family::Hkr { k, mode, r, tree } => {
            let tree = match (tree, mode, r) {
                (Some(path), _, _) => BipartiteTree::rooted_at_zero(read_graph(&path)?)?,
                (None, Some(mode), Some(r)) => constructions::canonical_tree(k, r, mode.into())?,
                _ => return Err(Failure("hkr needs either --tree <file> or --mode with --r".into())),
            };
            (format!("H_{k}"), constructions::family_hkr(k, &tree)?)
        }
        Family::Fkr { k, r } => (format!("F_{k}_{r}"), constructions::family_fkr(k, r)?),
        Family::CompleteMinusEdge { k } => (format!("K_{}_minus_e", k + 1), constructions::complete_minus_edge(k)?),
        Family::Gadget { k } => (format!("H_{}", k + 2), constructions::gadget_hk2(k)?),
        Family::Tree { .. } => unreachable!("handled above"),
    };
    emit_construction(&name, &generated.graph, &sidecar_json(&generated)?, args.out, args.dot, out)
}

fn emit_construction(
    name: &str,
    graph: &Graph,
    sidecar: &str,
    out_path: Option<PathBuf>,
    dot: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let body = if dot { graph.to_dot(name) } else { graph.to_edge_list() };
    match out_path {
        Some(path) => {
            write_file(&path, &body)?;
            let mut sidecar_path = path.into_os_string();
            sidecar_path.push(".json");
            write_file(Path::new(&sidecar_path), sidecar)?;
        }
        None if dot => out.write_all(body.as_bytes())?,
        None => {
            write!(out, "# meta: {sidecar}")?;
            out.write_all(body.as_bytes())?;
        }
    }
    Ok(Status::Ok)
}

/// Parses "0-1,2-3" into vertex pairs.
fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (u, v) = t.split_once('-').ok_or_else(|| Failure(format!("expected u-v, got {t:?}")))?;
            Ok((u.trim().parse()?, v.trim().parse()?))
        })
        .collect()
}

fn parse_ids(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',').filter(|t| !t.trim().is_empty()).map(|t| Ok(t.trim().parse()?)).collect()
}

#[derive(Serialize)]
struct Inspection {
    n: usize,
    m: usize,
    connected: bool,
    component_sizes: Vec<usize>,
    max_degree: usize,
    degree_counts: BTreeMap<usize, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    average_degree: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_degree_at_most_k: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_regular: Option<Regularity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deleted: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_components: Option<usize>,
}

fn inspect(g: &Graph, k: Option<usize>, delete: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let profile = g.degree_profile();
    let (n, m) = (g.vertex_count(), g.edge_count());
    let (deleted, odd_components) = match delete {
        Some(text) => {
            let ids = parse_ids(text)?;
            let odd = g.odd_components_after_deletion(&ids)?;
            (Some(ids), Some(odd))
        }
        None => (None, None),
    };
    print_json(
        out,
        &Inspection {
            n,
            m,
            connected: g.is_connected(),
            component_sizes: g.components().component_sizes,
            max_degree: profile.max_degree,
            degree_counts: profile.degree_counts,
            average_degree: (n > 0).then(|| exact_string(&crate::rational::ratio(2 * m as i64, n as i64))),
            max_degree_at_most_k: k.map(|k| g.max_degree() <= k),
            k_regular: k.map(|k| g.regularity(k)),
            deleted,
            odd_components,
        },
    )
}

#[derive(Serialize)]
struct BoundSummary {
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    main: Option<bounds::CoefficientSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    even2: Option<bounds::CoefficientSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<BoundValues>,
}

#[derive(Serialize)]
struct BoundValues {
    n: usize,
    m: usize,
    c: usize,
    regular: bool,
    /// name -> exact value, for every formula defined at this k
    bounds: Vec<ValueEntry>,
}

#[derive(Serialize)]
struct ValueEntry {
    name: &'static str,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    exception: Option<&'static str>,
}

#[derive(Serialize)]
struct SubcubicSummary {
    n1: usize,
    n2: usize,
    n3: usize,
    n: usize,
    m: usize,
    c: usize,
    bounds: Vec<ValueEntry>,
}

fn entry(name: &'static str, value: &Rational) -> ValueEntry {
    ValueEntry { name, value: exact_string(value), exception: None }
}

fn bound_cmd(args: BoundArgs, out: &mut dyn Write) -> CmdResult {
    let c = args.c;
    if let Some(text) = &args.degrees {
        let counts = parse_ids(text)?;
        let [n1, n2, n3] = <[usize; 3]>::try_from(counts)
            .map_err(|_| Failure(format!("--degrees needs three counts n1,n2,n3, got {text:?}")))?;
        let degree_sum = n1 + 2 * n2 + 3 * n3;
        if degree_sum % 2 == 1 {
            return Err(Failure(format!("degree sum {degree_sum} is odd")));
        }
        let (n, m) = (n1 + n2 + n3, degree_sum / 2);
        let bounds = vec![
            entry(bounds::COR_SUBCUBIC, &bounds::subcubic_degree_bound(n1, n2, n3, c)),
            entry(bounds::MATCH_THM, &bounds::lower_bound_general(n, m, c, 3)?),
        ];
        return print_json(out, &SubcubicSummary { n1, n2, n3, n, m, c, bounds });
    }
    let k = args.k.ok_or_else(|| Failure("--k is required".into()))?;
    let main = bounds::main_coefficients(k).ok();
    let even2 = bounds::even2_coefficients(k).ok();
    if main.is_none() && even2.is_none() {
        return Err(Failure(format!("no bound is defined for k = {k}")));
    }
    let values = match args.n {
        None => None,
        Some(n) => {
            let m = match (args.m, args.regular) {
                (Some(m), _) => m,
                (None, true) if (n * k) % 2 == 0 => n * k / 2,
                (None, true) => return Err(Failure(format!("no {k}-regular graph has {n} vertices"))),
                (None, false) => return Err(Failure("--m is required unless --regular is given".into())),
            };
            let mut list = Vec::new();
            if main.is_some() {
                list.push(entry(bounds::MATCH_THM, &bounds::lower_bound_general(n, m, c, k)?));
            }
            if even2.is_some() {
                list.push(entry(bounds::MATCH_THM2, &bounds::lower_bound_even2(n, m, k)?));
            }
            if main.is_some() {
                let regular_n = args.regular.then_some(n);
                for b in bounds::lower_bound_connected(n, m, k, regular_n)? {
                    list.push(ValueEntry { name: b.name, value: exact_string(&b.value), exception: b.exception });
                }
            }
            if k >= 4 && k % 2 == 0 {
                list.push(entry(bounds::THM_C_A, &bounds::theorem_c_a(n, m, k)?));
                list.push(entry(bounds::THM_C_B, &bounds::theorem_c_b(n, m, k)?));
            }
            if args.regular {
                list.push(entry(bounds::KREGULAR_REFERENCE, &bounds::kregular_reference_bound(n, k)?));
            }
            Some(BoundValues { n, m, c, regular: args.regular, bounds: list })
        }
    };
    print_json(out, &BoundSummary { k, main, even2, values })
}

#[derive(Serialize)]
struct TreeSidecar {
    n: usize,
    m: usize,
    v1: Vec<usize>,
    v2: Vec<usize>,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    n: usize,
    m: usize,
    alpha_predicted: usize,
    link_vertices: &'a [usize],
}

fn sidecar_json(g: &GeneratedGraph) -> Result<String, Failure> {
    to_json(&Sidecar {
        n: g.predicted_n,
        m: g.predicted_m,
        alpha_predicted: g.predicted_alpha,
        link_vertices: &g.link_vertices,
    })
}

#[derive(Serialize)]
struct PointReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<RationalPoint>,
    classification: region::Classification,
    boundary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<WitnessKind>>,
}

/// Parses "shift-down:EPS", "tree-shear:EPS", "regular-shear:EPS" or "mix:GAMMA,BETA:EPS".
fn parse_transform(text: &str) -> Result<Transform, Failure> {
    let (rule, rest) = text.split_once(':').ok_or_else(|| Failure(format!("expected RULE:EPS, got {text:?}")))?;
    Ok(match rule {
        "shift-down" => Transform::ShiftDown(parse_rational(rest)?),
        "tree-shear" => Transform::TreeShear(parse_rational(rest)?),
        "regular-shear" => Transform::RegularShear(parse_rational(rest)?),
        "mix" => {
            let (other, eps) = rest.rsplit_once(':').ok_or_else(|| Failure(format!("expected mix:GAMMA,BETA:EPS, got {text:?}")))?;
            Transform::Mix(RationalPoint::parse(other)?, parse_rational(eps)?)
        }
        _ => return Err(Failure(format!("unknown transform {rule:?}"))),
    })
}

fn parse_bbox(text: &str) -> Result<BoundingBox, Failure> {
    let parts: Vec<Rational> = text.split(',').map(parse_rational).collect::<Result<_, _>>()?;
    match <[Rational; 4]>::try_from(parts) {
        Ok([g0, g1, b0, b1]) => Ok(BoundingBox::new(g0, g1, b0, b1)),
        Err(_) => Err(Failure(format!("bbox needs four values gmin,gmax,bmin,bmax, got {text:?}"))),
    }
}

fn region_cmd(args: RegionArgs, out: &mut dyn Write) -> CmdResult {
    let k = args.k;
    let region = RegionLk::new(k)?;
    let bbox = parse_bbox(&args.bbox)?;
    if let Some(path) = &args.polygon {
        let mut csv = String::from("gamma_exact,beta_exact,gamma_dec,beta_dec\n");
        for p in region::region_polygon(k, &bbox)? {
            csv.push_str(&format!(
                "{},{},{},{}\n",
                exact_string(&p.gamma),
                exact_string(&p.beta),
                decimal_string(&p.gamma, 5),
                decimal_string(&p.beta, 5)
            ));
        }
        write_file(path, &csv)?;
    }
    if let Some(path) = &args.svg {
        write_file(path, &region::region_svg(k, &bbox)?)?;
    }
    match &args.point {
        Some(text) => {
            let mut p = RationalPoint::parse(text)?;
            let moved = match &args.transform {
                Some(rule) => {
                    p = region::transform_good_pair(k, &p, &parse_transform(rule)?)?;
                    Some(p.clone())
                }
                None => None,
            };
            let classification =
                if args.geometric { region::classify_pair_geometric(k, &p)? } else { region::classify_pair(k, &p)? };
            let boundary = region::is_boundary(k, &p)?;
            let witness = match args.witness {
                true => Some(region::tight_family_for(k, &p)?.map(|w| w.kinds).unwrap_or_default()),
                false => None,
            };
            print_json(out, &PointReport { point: moved, classification, boundary, witness })
        }
        None if args.polygon.is_none() && args.svg.is_none() => print_json(out, &region),
        None => Ok(Status::Ok),
    }
}

fn table1_csv() -> Result<String, Failure> {
    let mut csv = String::from("k,bound,n_coefficient_exact,n_coefficient_dec\n");
    for k in 3..=8 {
        let expression = bounds::kregular_reference_expression(k)?;
        let kk = k as i64;
        let coefficient = if k % 2 == 0 {
            crate::rational::ratio(kk * kk + 4, 2 * (kk * kk + kk + 2))
        } else {
            crate::rational::ratio(kk * kk * kk - kk * kk - 2, 2 * (kk * kk * kk - 3 * kk))
        };
        csv.push_str(&format!(
            "{k},\"{expression}\",{},{}\n",
            exact_string(&coefficient),
            decimal_string(&coefficient, 5)
        ));
    }
    Ok(csv)
}

fn table2_csv() -> Result<String, Failure> {
    let mut csv = String::from("k,d,a,b,c,a_k_exact,b_k_exact,a_k_dec,b_k_dec\n");
    for k in 3..=11 {
        let row = bounds::table2_row(k)?;
        let coeffs = bounds::main_coefficients(k)?;
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row.k,
            row.d,
            row.a,
            row.b,
            row.c,
            exact_string(&coeffs.a_k),
            exact_string(&coeffs.b_k),
            decimal_string(&coeffs.a_k, 5),
            decimal_string(&coeffs.b_k, 5)
        ));
    }
    Ok(csv)
}

fn table3_csv() -> Result<String, Failure> {
    let mut csv = String::from("k,limit_exact,limit_truncated\n");
    for k in (4..=14).step_by(2) {
        let limit = constructions::average_degree_gkr_prime_limit(k)?;
        csv.push_str(&format!("{k},{},{}\n", exact_string(&limit), truncated_decimal_string(&limit, 3)));
    }
    Ok(csv)
}
