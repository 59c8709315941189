//! `linkbound`: command-line front end.
//!
//! Exit status: 0 success, 1 unreadable or invalid input, 2 a computation
//! budget was exceeded, 3 a check or fixture comparison failed.

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use linkbound::braid::{chi_minus_lower_bound, braid_equal, BraidWord, QPFactorization, SearchBudget};
use linkbound::classify::{
    apply_rules, chi_bounds_for, parse_qp_factors, prepare, table1_report, ClassifyError, ClassifyOptions,
    KnowledgeBase, LinkRecord,
};
use linkbound::diagram::{
    determinant, linking_matrix_of_closure, murasugi_chi_upper, seifert_matrix_of_closure, signature,
    LinkingMatrix, PDDiagram,
};
use linkbound::embed::{embed_forest, render_svg, EmbedOptions, Orientation};
use linkbound::homfly::{fwm_obstruction, homfly_pd_with_budget, FwmVerdict, HomflyError};
use linkbound::notation::{parse_braid, parse_ovals, parse_pd, render_poly, ParseError};
use linkbound::splice::{
    cabling_program, lk_from_splice, realizable, simplify_splice, splice_from_program, render_splice, CableKind,
    OvalForest,
};

#[derive(Parser)]
#[command(name = "linkbound", version, about = "Link invariants and ℂ-boundary classification")]
struct Cli {
    /// One key=value per line.
    #[arg(long, global = true)]
    machine: bool,
    /// Seed for projections.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Node limit for the skein recursion.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    skein_budget: usize,
    /// Node limit for the χ_s⁻ search.
    #[arg(long, global = true, default_value_t = 100_000)]
    search_budget: usize,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// HOMFLY polynomial and ord_v of a braid closure or PD code.
    Homfly { input: String },
    /// Linking matrix of a braid closure or PD code.
    Lk { input: String },
    /// Bounds for χ_s and χ_s⁻ of a braid closure.
    Chi { input: String },
    /// Check a quasipositive factorization: a file with a braid line and factor lines `[w]j ..`.
    QpVerify { file: PathBuf },
    /// Franks–Williams–Morton test against the computed χ_s upper bound.
    QpObstruct {
        input: String,
        /// Use this χ_s upper bound instead.
        #[arg(long, allow_hyphen_values = true)]
        chi_upper: Option<i64>,
    },
    /// Oval forests: realizability, cabling, splice diagrams, embedding.
    Ovals {
        #[arg(value_enum)]
        stage: Stage,
        file: PathBuf,
        /// Negate all windings first.
        #[arg(long)]
        conjugate: bool,
        /// Orient ovals by depth parity instead of all counterclockwise.
        #[arg(long)]
        boundary: bool,
        /// Write the projection as SVG (embed).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Derive verdicts and bounds for a knowledge base.
    Classify { file: PathBuf },
    /// Compare derived verdicts with the table rows of a knowledge base.
    Table1 { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    Realize,
    Cable,
    Splice,
    Embed,
}

enum Failure {
    Input(String),
    Budget(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Budget(_) => 2,
            Failure::Mismatch(_) => 3,
        }
    }
}

fn input<E: Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        input(e)
    }
}

impl From<HomflyError> for Failure {
    fn from(e: HomflyError) -> Self {
        Failure::Budget(e.to_string())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Homfly(h) => h.into(),
            ClassifyError::Certificate { .. } | ClassifyError::Relation { .. } => Failure::Mismatch(e.to_string()),
            e => input(e),
        }
    }
}

/// Report lines in both output modes.
#[derive(Default)]
struct Out {
    text: String,
    machine: String,
}

impl Out {
    /// Same value for both modes.
    fn kv(&mut self, key: &str, value: impl Display) {
        self.text.push_str(&format!("{key} = {value}\n"));
        self.machine.push_str(&format!("{key}={value}\n"));
    }

    fn text(&mut self, line: impl Display) {
        self.text.push_str(&format!("{line}\n"));
    }

    fn machine(&mut self, key: &str, value: impl Display) {
        self.machine.push_str(&format!("{key}={value}\n"));
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

/// Inline literal or a file holding one.
fn literal(arg: &str) -> Result<String, Failure> {
    let t = arg.trim_start();
    if t.starts_with("BR[") || t.starts_with("PD[") || t.contains('=') {
        Ok(arg.to_string())
    } else {
        read(&PathBuf::from(arg))
    }
}

enum Link {
    Braid(BraidWord),
    Pd(PDDiagram),
}

impl Link {
    fn parse(arg: &str) -> Result<Self, Failure> {
        let src = literal(arg)?;
        let body = linkbound::notation::split_assignment(&src).1.trim_start();
        if body.starts_with("PD[") {
            Ok(Link::Pd(parse_pd(&src)?))
        } else {
            Ok(Link::Braid(parse_braid(&src)?))
        }
    }

    fn pd(&self) -> PDDiagram {
        match self {
            Link::Braid(b) => PDDiagram::from_braid_closure(b),
            Link::Pd(d) => d.clone(),
        }
    }

    fn braid(self) -> Result<BraidWord, Failure> {
        match self {
            Link::Braid(b) => Ok(b),
            Link::Pd(_) => Err(input("this command needs a braid BR[..]")),
        }
    }
}

fn matrix(out: &mut Out, key: &str, m: &LinkingMatrix) {
    out.kv(key, m);
    out.machine(&format!("{key}.size"), m.size());
}

fn options(cli: &Cli) -> ClassifyOptions {
    ClassifyOptions {
        skein_budget: cli.skein_budget,
        search: SearchBudget { max_nodes: cli.search_budget, ..SearchBudget::default() },
    }
}

fn run(cli: &Cli, out: &mut Out) -> Result<(), Failure> {
    match &cli.command {
        Command::Homfly { input: arg } => {
            let d = Link::parse(arg)?.pd();
            let r = homfly_pd_with_budget(&d, cli.skein_budget)?;
            out.kv("P", render_poly(&r.poly));
            match r.poly.ord_v() {
                Ok(o) => out.kv("ord_v", o),
                Err(e) => out.kv("ord_v", e),
            }
            out.machine("skein_nodes", r.nodes);
        }
        Command::Lk { input: arg } => {
            let m = match Link::parse(arg)? {
                Link::Braid(b) => linking_matrix_of_closure(&b),
                Link::Pd(d) => d.linking_matrix(),
            };
            matrix(out, "lk", &m);
        }
        Command::Chi { input: arg } => {
            let b = Link::parse(arg)?.braid()?;
            let opts = options(cli);
            let record = LinkRecord {
                name: "L".into(),
                braid: b.clone(),
                qp_certificate: None,
                relations: vec![],
                outer: false,
            };
            let bounds = chi_bounds_for(&record, &opts)?;
            let s = seifert_matrix_of_closure(&b);
            let sig = signature(&s);
            out.kv("components", b.closure_components().len());
            out.kv("bennequin", b.bennequin_chi());
            out.kv("signature", sig.sigma);
            out.kv("nullity", sig.nullity);
            out.kv("murasugi_upper", murasugi_chi_upper(sig.sigma, sig.nullity));
            out.kv("determinant", determinant(&s));
            out.kv("chi_s", bounds.chi_s);
            out.kv("chi_s_minus", bounds.chi_s_minus);
            let search = chi_minus_lower_bound(&b, opts.search);
            out.kv("search_bound", search.bound);
            out.kv("search_nodes", search.nodes);
            out.kv("search_reached_positive", search.reached_positive);
            for (k, step) in search.path.iter().enumerate() {
                out.text(format!("  {} -> {}", step.mv.name(), linkbound::notation::render_braid(&step.word)));
                out.machine(&format!("path{k}"), format!("{} {}", step.mv.name(), linkbound::notation::render_braid(&step.word)));
            }
        }
        Command::QpVerify { file } => {
            let src = read(file)?;
            let mut lines = src.lines().map(|l| l.split('%').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
            let b = parse_braid(lines.next().ok_or_else(|| input("empty certificate file"))?)?;
            let factors = parse_qp_factors(&lines.collect::<Vec<_>>().join(" ")).map_err(input)?;
            let q = QPFactorization::new(b.strands(), factors).map_err(input)?;
            let ok = braid_equal(&q.expand(), &b).map_err(input)?;
            out.kv("factors", q.len());
            out.kv("chi", q.chi());
            out.kv("verified", ok);
            if !ok {
                return Err(Failure::Mismatch("factorization does not expand to the braid".into()));
            }
        }
        Command::QpObstruct { input: arg, chi_upper } => {
            let b = Link::parse(arg)?.braid()?;
            let opts = options(cli);
            let p = homfly_pd_with_budget(&PDDiagram::from_braid_closure(&b), cli.skein_budget)?.poly;
            let upper = match chi_upper {
                Some(u) => *u,
                None => {
                    let record = LinkRecord {
                        name: "L".into(),
                        braid: b,
                        qp_certificate: None,
                        relations: vec![],
                        outer: false,
                    };
                    chi_bounds_for(&record, &opts)?.chi_s.hi
                }
            };
            out.kv("chi_s_upper", upper);
            let v = fwm_obstruction(&p, upper).map_err(input)?;
            let (word, ord, req) = match v {
                FwmVerdict::Refuted { ord_v, required } => ("refuted", ord_v, required),
                FwmVerdict::Consistent { ord_v, required } => ("consistent", ord_v, required),
            };
            out.kv("ord_v", ord);
            out.kv("required", req);
            out.kv("verdict", word);
        }
        Command::Ovals { stage, file, conjugate, boundary, svg } => {
            let mut f: OvalForest = parse_ovals(&read(file)?)?;
            if *conjugate {
                f = f.conjugate();
            }
            ovals(cli, out, *stage, &f, *boundary, svg.as_ref())?;
        }
        Command::Classify { file } => {
            let kb = KnowledgeBase::parse(&read(file)?)?;
            let ledger = apply_rules(&prepare(&kb, &options(cli))?)?;
            out.text.push_str(&ledger.render());
            out.machine.push_str(&ledger.render_machine());
        }
        Command::Table1 { file } => {
            let kb = KnowledgeBase::parse(&read(file)?)?;
            let p = prepare(&kb, &options(cli))?;
            let ledger = apply_rules(&p)?;
            let report = table1_report(&p, &ledger)?;
            out.text.push_str(&report.render_text());
            out.machine.push_str(&report.render_machine());
            if report.mismatches() > 0 {
                return Err(Failure::Mismatch(format!("{} mismatches", report.mismatches())));
            }
        }
    }
    Ok(())
}

fn ovals(
    cli: &Cli,
    out: &mut Out,
    stage: Stage,
    f: &OvalForest,
    boundary: bool,
    svg: Option<&PathBuf>,
) -> Result<(), Failure> {
    match stage {
        Stage::Realize => {
            let r = realizable(f);
            out.text(if r.realizable { "realizable" } else { "not realizable" });
            out.machine("realizable", r.realizable);
            for (id, sum) in &r.violations {
                out.text(format!("  oval {id}: winding sum {sum}"));
                out.machine(&format!("violation.{id}"), sum);
            }
            if !r.realizable {
                return Err(Failure::Mismatch("winding data are not realizable".into()));
            }
        }
        Stage::Cable => {
            let prog = cabling_program(f);
            out.kv("components", prog.components);
            for (k, op) in prog.ops.iter().enumerate() {
                let what = match op.kind {
                    CableKind::AddRetain(a) => format!("cable({a},1) keep carrier {}", op.target),
                    CableKind::AddRemove(a) => format!("cable({a},1) drop carrier {}", op.target),
                    CableKind::Split(k) => format!("split carrier {} into {k}", op.target),
                    CableKind::Reverse => format!("reverse K{}", op.target + 1),
                };
                out.text(format!("  {what}"));
                out.machine(&format!("op{k}"), what);
            }
        }
        Stage::Splice => {
            let s = splice_from_program(&cabling_program(f)).map_err(input)?;
            let simple = simplify_splice(&s);
            out.kv("nodes", simple.node_count());
            out.kv("arrows", simple.arrow_count());
            for line in render_splice(&simple).lines() {
                out.text(format!("  {line}"));
            }
            for (k, e) in simple.edges.iter().enumerate() {
                out.machine(&format!("edge{k}"), format!("{} {} {} {}", e.ends[0], e.weights[0], e.weights[1], e.ends[1]));
            }
            matrix(out, "lk", &lk_from_splice(&s).map_err(input)?);
        }
        Stage::Embed => {
            let orientation = if boundary { Orientation::Boundary } else { Orientation::Counterclockwise };
            let p = embed_forest(f, None, EmbedOptions { orientation, seed: cli.seed, resolution: 1 }).map_err(input)?;
            out.kv("crossings", p.pd.crossings().len());
            out.kv("pd", linkbound::notation::render_pd(&p.pd));
            matrix(out, "lk", &p.linking_matrix());
            let hom = homfly_pd_with_budget(&p.pd, cli.skein_budget)?;
            out.kv("P", render_poly(&hom.poly));
            if let Some(path) = svg {
                std::fs::write(path, render_svg(&p)).map_err(|e| input(format!("{}: {e}", path.display())))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("linkbound: {e}");
        }
    }
    let mut out = Out::default();
    let result = run(&cli, &mut out);
    print!("{}", if cli.machine { &out.machine } else { &out.text });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Input(m) | Failure::Budget(m) | Failure::Mismatch(m)) = &f;
            eprintln!("linkbound: {m}");
            ExitCode::from(f.code())
        }
    }
}
