//! Batch command line front end. Every command prints one JSON report (or a
//! plain-text table with `--out table`) and exits with:
//!
//! - 0 on success / a passing verdict,
//! - 1 on a false mathematical verdict (never for malformed input),
//! - 2 on usage or input errors, with a one-line diagnostic on stderr.

use clap::{Args, Parser, Subcommand, ValueEnum};
use klt_core::bsdh::{
    boundary_valuations, chart_matrix, determinant, schubert_discrepancies, BsWord, Chart,
};
use klt_core::cartan::{builtin, real_root_orbit, type_a, Gcm, Weight};
use klt_core::error::Error;
use klt_core::fsplit::{
    check_prime, colon, compatible_fpure_test, dimension, fedder_fpure, flag_plucker_model,
    groebner, richardson_ideal, Ideal,
};
use klt_core::poly::{Field, Ring};
use klt_core::richardson::{
    boundary, certify, components_json, degree_identity_check, discrepancy_eval, lemma46_check,
    pair_datum, CertifyOptions, Classification, ComponentJson, Fraction, Rat,
};
use klt_core::weyl::{
    cocovers_in_interval, covers_in_interval, maximal_chains, CoverDatum, WeylElement, WeylGroup,
};
use klt_core::{F2, F3, F5, F7, Q};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "klt", version, about = "Exact divisor pairs on Richardson intervals: boundary data, chart valuations, splitting certificates")]
struct Cli {
    /// Output format for the report on stdout
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    out: OutputFormat,
    /// Worker count hint; accepted for compatibility, all commands run
    /// deterministically in one thread
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Validate Cartan matrices and enumerate real roots
    Gcm {
        #[command(subcommand)]
        op: GcmOp,
    },
    /// Weyl group arithmetic: canonical words, Bruhat order, covers, chains
    Weyl {
        #[command(subcommand)]
        op: WeylOp,
    },
    /// Boundary divisor data of an interval: pairs, degrees, discrepancies
    Richardson {
        #[command(subcommand)]
        op: RichardsonOp,
    },
    /// Symbolic chart engine: matrices, valuations, discrepancy harness
    Bsdh {
        #[command(subcommand)]
        op: BsdhOp,
    },
    /// Polynomial algebra: Groebner bases, dimensions, splitting tests
    Fsplit {
        #[command(subcommand)]
        op: FsplitOp,
    },
    /// Assemble the full certificate for an interval
    Certify(CertifyArgs),
}

#[derive(Args)]
struct RootDatumArgs {
    /// Built-in root datum: A1, A2, A3, B2 or A1~
    #[arg(long = "type")]
    builtin: Option<String>,
    /// Custom matrix: rows separated by ';' ("2 -1; -1 2") or JSON
    #[arg(long)]
    gcm: Option<String>,
}

impl RootDatumArgs {
    fn resolve(&self) -> Result<Gcm, Error> {
        match (&self.builtin, &self.gcm) {
            (Some(name), None) => {
                builtin(name).ok_or_else(|| Error::Parse(format!("unknown type {name:?}")))
            }
            (None, Some(src)) => Gcm::parse(src),
            _ => Err(Error::Parse(
                "exactly one of --type or --gcm is required".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum GcmOp {
    /// Check the GCM axioms and report the symmetrizer
    Validate {
        #[command(flatten)]
        datum: RootDatumArgs,
    },
    /// Positive real roots with coroots up to a height bound
    Roots {
        #[command(flatten)]
        datum: RootDatumArgs,
        #[arg(long)]
        height: i64,
    },
}

#[derive(Subcommand)]
enum WeylOp {
    /// Canonical (lex-least reduced) form of a word
    Canon {
        #[command(flatten)]
        datum: RootDatumArgs,
        #[arg(long)]
        word: String,
    },
    /// Bruhat order test; exit 1 when v is not below w
    Leq {
        #[command(flatten)]
        datum: RootDatumArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Covers of v inside [v, w], with reflection data
    Covers {
        #[command(flatten)]
        datum: RootDatumArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Cocovers of w inside [v, w], with reflection data
    Cocovers {
        #[command(flatten)]
        datum: RootDatumArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// All saturated chains of [v, w]
    Chains {
        #[command(flatten)]
        datum: RootDatumArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
}

#[derive(Subcommand)]
enum RichardsonOp {
    /// Boundary components with multiplicities
    Boundary {
        #[command(flatten)]
        datum: RootDatumArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// The pair data (N, Delta, K + Delta)
    Pair {
        #[command(flatten)]
        datum: RootDatumArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[arg(long = "N")]
        n: Option<i64>,
    },
    /// Degree identity under the weight 2*rho; exit 1 on mismatch
    Degree {
        #[command(flatten)]
        datum: RootDatumArgs,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
    },
    /// Discrepancy table from strict multiplicities and exceptional data;
    /// exit 1 unless the table is KLT
    Discrepancy {
        #[arg(long = "N")]
        n: i64,
        /// Strict-transform multiplicities, comma separated
        #[arg(long, default_value = "")]
        b: String,
        /// Exceptional multiplicities, comma separated
        #[arg(long, default_value = "")]
        d: String,
    },
    /// Coefficient comparison test; exit 1 when it fails
    Lemma46 {
        /// Log-canonical coefficients, comma-separated rationals
        #[arg(long)]
        a: String,
        /// Candidate coefficients, comma-separated rationals
        #[arg(long)]
        c: String,
    },
}

#[derive(Subcommand)]
enum BsdhOp {
    /// Chart matrix for a word and raising pattern
    Chart {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        word: String,
        /// One bit per letter, e.g. "101" or "1,0,1" (1 = raised)
        #[arg(long)]
        tau: String,
    },
    /// Boundary valuations of a pulled-back extremal section
    Valuations {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        word: String,
        #[arg(long)]
        u: String,
        /// Dominant weight coordinates, comma separated; defaults to rho
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Schubert discrepancy harness; exit 1 unless KLT with exact stricts
    Schubert {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        word: String,
        #[arg(long = "N")]
        n_param: Option<i64>,
    },
}

#[derive(Args)]
struct IdealArgs {
    /// Built-in model: flag2, flag3 or flag4
    #[arg(long)]
    model: Option<String>,
    /// Richardson interval inside the model
    #[arg(long)]
    v: Option<String>,
    #[arg(long)]
    w: Option<String>,
    /// Use the boundary ideal of the interval instead of the interval ideal
    #[arg(long)]
    boundary: bool,
    /// Explicit generators: a JSON list of polynomial strings
    #[arg(long)]
    ideal: Option<String>,
    /// Variable names for --ideal without a model, comma separated
    #[arg(long)]
    vars: Option<String>,
}

#[derive(Subcommand)]
enum FsplitOp {
    /// Reduced Groebner basis of the selected ideal
    Groebner {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Krull dimension of the quotient by the selected ideal
    Dim {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Fedder purity test at the cone point; exit 1 when not split
    Fedder {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        p: u64,
    },
    /// Compatible splitting of an interval ideal with its boundary ideal;
    /// exit 1 when the test fails
    Compatible {
        #[arg(long)]
        model: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        p: u64,
    },
    /// Colon ideal (J : I) of two explicit ideals
    Colon {
        #[arg(long)]
        vars: String,
        /// Generators of J, JSON list of polynomial strings
        #[arg(long)]
        j: String,
        /// Generators of I, JSON list of polynomial strings
        #[arg(long)]
        i: String,
        #[arg(long)]
        p: Option<u64>,
    },
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    datum: RootDatumArgs,
    #[arg(long)]
    v: String,
    #[arg(long)]
    w: String,
    #[arg(long = "N")]
    n: Option<i64>,
    /// Primes for splitting evidence, comma separated (from 2, 3, 5, 7)
    #[arg(long)]
    p: Option<String>,
}

struct Report {
    json: String,
    value: serde_json::Value,
    pass: bool,
}

fn report<T: Serialize>(payload: &T, pass: bool) -> Result<Report, Error> {
    let json = serde_json::to_string_pretty(payload)
        .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
    let value = serde_json::to_value(payload)
        .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
    Ok(Report {
        json,
        value,
        pass,
    })
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            match cli.out {
                OutputFormat::Json => println!("{}", report.json),
                OutputFormat::Table => println!("{}", render_table(&report.value)),
            }
            std::process::exit(if report.pass { 0 } else { 1 });
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}

#[derive(Serialize)]
struct GcmJson {
    rank: usize,
    entries: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

#[derive(Serialize)]
struct RootJson {
    root: Vec<i64>,
    coroot: Vec<i64>,
    height: i64,
}

#[derive(Serialize)]
struct CoverJson {
    lower: Vec<usize>,
    upper: Vec<usize>,
    root: Vec<i64>,
    coroot: Vec<i64>,
    b: i64,
}

fn cover_json(c: &CoverDatum) -> CoverJson {
    CoverJson {
        lower: c.lower.word(),
        upper: c.upper.word(),
        root: c.root.clone(),
        coroot: c.coroot.clone(),
        b: c.rho_pairing,
    }
}

fn element(group: &WeylGroup, src: &str) -> Result<WeylElement, Error> {
    group.element_from_str(src)
}

fn parse_int_list(src: &str) -> Result<Vec<i64>, Error> {
    src.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
        })
        .collect()
}

fn parse_rat(src: &str) -> Result<Rat, Error> {
    let parts: Vec<&str> = src.split('/').collect();
    let bad = || Error::Parse(format!("bad rational {src:?}"));
    match parts.as_slice() {
        [n] => Ok(Rat::from(n.trim().parse::<i64>().map_err(|_| bad())?)),
        [n, d] => Ok(Rat::new(
            n.trim().parse::<i64>().map_err(|_| bad())?,
            d.trim().parse::<i64>().map_err(|_| bad())?,
        )),
        _ => Err(bad()),
    }
}

fn parse_rat_list(src: &str) -> Result<Vec<Rat>, Error> {
    src.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_rat)
        .collect()
}

fn parse_word_list(src: &str) -> Result<Vec<usize>, Error> {
    klt_core::weyl::parse_word(src)
}

fn run(command: &Command) -> Result<Report, Error> {
    match command {
        Command::Gcm { op } => run_gcm(op),
        Command::Weyl { op } => run_weyl(op),
        Command::Richardson { op } => run_richardson(op),
        Command::Bsdh { op } => run_bsdh(op),
        Command::Fsplit { op } => run_fsplit(op),
        Command::Certify(args) => run_certify(args),
    }
}

fn run_gcm(op: &GcmOp) -> Result<Report, Error> {
    match op {
        GcmOp::Validate { datum } => {
            let gcm = datum.resolve()?;
            report(
                &GcmJson {
                    rank: gcm.rank(),
                    entries: gcm.entries().to_vec(),
                    symmetrizer: gcm.symmetrizer().to_vec(),
                },
                true,
            )
        }
        GcmOp::Roots { datum, height } => {
            let gcm = datum.resolve()?;
            let roots: Vec<RootJson> = real_root_orbit(&gcm, *height)
                .into_iter()
                .map(|p| RootJson {
                    height: p.height(),
                    root: p.root,
                    coroot: p.coroot,
                })
                .collect();
            report(&roots, true)
        }
    }
}

fn run_weyl(op: &WeylOp) -> Result<Report, Error> {
    #[derive(Serialize)]
    struct CanonJson {
        word: Vec<usize>,
        length: usize,
    }
    #[derive(Serialize)]
    struct LeqJson {
        v: Vec<usize>,
        w: Vec<usize>,
        leq: bool,
    }
    #[derive(Serialize)]
    struct ChainsJson {
        v: Vec<usize>,
        w: Vec<usize>,
        count: usize,
        chains: Vec<Vec<CoverJson>>,
    }
    match op {
        WeylOp::Canon { datum, word } => {
            let group = WeylGroup::new(datum.resolve()?);
            let w = group.element(&parse_word_list(word)?)?;
            report(
                &CanonJson {
                    word: w.word(),
                    length: w.len(),
                },
                true,
            )
        }
        WeylOp::Leq { datum, v, w } => {
            let group = WeylGroup::new(datum.resolve()?);
            let v = element(&group, v)?;
            let w = element(&group, w)?;
            let leq = v.bruhat_leq(&w)?;
            report(
                &LeqJson {
                    v: v.word(),
                    w: w.word(),
                    leq,
                },
                leq,
            )
        }
        WeylOp::Covers { datum, v, w } | WeylOp::Cocovers { datum, v, w } => {
            let group = WeylGroup::new(datum.resolve()?);
            let v = element(&group, v)?;
            let w = element(&group, w)?;
            let covers = match op {
                WeylOp::Covers { .. } => covers_in_interval(&v, &w)?,
                _ => cocovers_in_interval(&v, &w)?,
            };
            let rows: Vec<CoverJson> = covers.iter().map(cover_json).collect();
            report(&rows, true)
        }
        WeylOp::Chains { datum, v, w } => {
            let group = WeylGroup::new(datum.resolve()?);
            let v = element(&group, v)?;
            let w = element(&group, w)?;
            let chains: Vec<Vec<CoverJson>> = maximal_chains(&v, &w)?
                .map(|chain| chain.iter().map(cover_json).collect())
                .collect();
            report(
                &ChainsJson {
                    v: v.word(),
                    w: w.word(),
                    count: chains.len(),
                    chains,
                },
                true,
            )
        }
    }
}

fn run_richardson(op: &RichardsonOp) -> Result<Report, Error> {
    #[derive(Serialize)]
    struct BoundaryJson {
        v: Vec<usize>,
        w: Vec<usize>,
        components: Vec<ComponentJson>,
    }
    #[derive(Serialize)]
    struct PairJson {
        gcm: Vec<Vec<i64>>,
        v: Vec<usize>,
        w: Vec<usize>,
        components: Vec<ComponentJson>,
        #[serde(rename = "N")]
        n: i64,
        delta: Vec<Fraction>,
        k_plus_delta: Vec<Fraction>,
    }
    #[derive(Serialize)]
    struct DegreeJson {
        v: Vec<usize>,
        w: Vec<usize>,
        lhs: i64,
        rhs: i64,
        pass: bool,
    }
    #[derive(Serialize)]
    struct DiscrepancyEntryJson {
        label: String,
        kind: String,
        e: Fraction,
    }
    #[derive(Serialize)]
    struct DiscrepancyJson {
        #[serde(rename = "N")]
        n: i64,
        entries: Vec<DiscrepancyEntryJson>,
        classification: Classification,
    }
    #[derive(Serialize)]
    struct Lemma46Json {
        pass: bool,
    }
    match op {
        RichardsonOp::Boundary { datum, v, w } => {
            let group = WeylGroup::new(datum.resolve()?);
            let v = element(&group, v)?;
            let w = element(&group, w)?;
            let components = boundary(&v, &w)?;
            report(
                &BoundaryJson {
                    v: v.word(),
                    w: w.word(),
                    components: components_json(&components),
                },
                true,
            )
        }
        RichardsonOp::Pair { datum, v, w, n } => {
            let group = WeylGroup::new(datum.resolve()?);
            let v = element(&group, v)?;
            let w = element(&group, w)?;
            let datum = pair_datum(&v, &w, *n)?;
            report(
                &PairJson {
                    gcm: v.gcm().entries().to_vec(),
                    v: v.word(),
                    w: w.word(),
                    components: components_json(&datum.components),
                    n: datum.n,
                    delta: datum.delta.iter().map(|&r| Fraction::from(r)).collect(),
                    k_plus_delta: datum
                        .k_plus_delta
                        .iter()
                        .map(|&r| Fraction::from(r))
                        .collect(),
                },
                true,
            )
        }
        RichardsonOp::Degree { datum, v, w } => {
            let group = WeylGroup::new(datum.resolve()?);
            let v = element(&group, v)?;
            let w = element(&group, w)?;
            let result = degree_identity_check(&v, &w)?;
            report(
                &DegreeJson {
                    v: v.word(),
                    w: w.word(),
                    lhs: result.lhs,
                    rhs: result.rhs,
                    pass: result.pass,
                },
                result.pass,
            )
        }
        RichardsonOp::Discrepancy { n, b, d } => {
            let stricts: Vec<(String, i64)> = parse_int_list(b)?
                .into_iter()
                .enumerate()
                .map(|(i, b)| (format!("X{}", i + 1), b))
                .collect();
            let exceptionals: Vec<(String, i64)> = parse_int_list(d)?
                .into_iter()
                .enumerate()
                .map(|(i, d)| (format!("Z{}", i + 1), d))
                .collect();
            let result = discrepancy_eval(*n, &stricts, &exceptionals)?;
            let pass = result.classification == Classification::Klt;
            report(
                &DiscrepancyJson {
                    n: *n,
                    entries: result
                        .entries
                        .iter()
                        .map(|e| DiscrepancyEntryJson {
                            label: e.label.clone(),
                            kind: match e.kind {
                                klt_core::richardson::DivisorKind::Strict => "strict".into(),
                                klt_core::richardson::DivisorKind::Exceptional => {
                                    "exceptional".into()
                                }
                            },
                            e: Fraction::from(e.coefficient),
                        })
                        .collect(),
                    classification: result.classification,
                },
                pass,
            )
        }
        RichardsonOp::Lemma46 { a, c } => {
            let pass = lemma46_check(&parse_rat_list(a)?, &parse_rat_list(c)?)?;
            report(&Lemma46Json { pass }, pass)
        }
    }
}

fn bs_word(n: &Option<usize>, word: &str) -> Result<BsWord, Error> {
    let letters = parse_word_list(word)?;
    let n = n.unwrap_or_else(|| letters.iter().copied().max().unwrap_or(1) + 1);
    BsWord::new(n, letters)
}

fn run_bsdh(op: &BsdhOp) -> Result<Report, Error> {
    #[derive(Serialize)]
    struct ChartJson {
        n: usize,
        word: Vec<usize>,
        tau: Vec<u8>,
        matrix: Vec<Vec<String>>,
        det: String,
    }
    match op {
        BsdhOp::Chart { n, word, tau } => {
            let word = bs_word(n, word)?;
            let bits: Vec<bool> = tau
                .chars()
                .filter(|c| !c.is_whitespace() && *c != ',')
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(Error::Parse(format!("bad tau bit {other:?}"))),
                })
                .collect::<Result<_, _>>()?;
            let chart = Chart::new(word.clone(), bits.clone())?;
            let matrix = chart_matrix(&chart);
            let z_ring = Ring::with_prefix("z", word.len());
            let rows: Vec<Vec<String>> = matrix
                .iter()
                .map(|row| row.iter().map(|p| z_ring.display(p).to_string()).collect())
                .collect();
            let det = z_ring.display(&determinant(&matrix)).to_string();
            report(
                &ChartJson {
                    n: word.n,
                    word: word.letters.clone(),
                    tau: bits.iter().map(|&b| b as u8).collect(),
                    matrix: rows,
                    det,
                },
                true,
            )
        }
        BsdhOp::Valuations { n, word, u, lambda } => {
            let word = bs_word(n, word)?;
            let group = word.group();
            let u = element(&group, u)?;
            let lambda = match lambda {
                Some(src) => Weight(parse_int_list(src)?),
                None => Weight::rho(word.n - 1),
            };
            let table = boundary_valuations(&word, &u, &lambda)?;
            report(&table.to_json(), true)
        }
        BsdhOp::Schubert { n, word, n_param } => {
            let word = bs_word(n, word)?;
            let result = schubert_discrepancies(&word, *n_param)?;
            let pass =
                result.classification == Classification::Klt && result.stricts_consistent;
            report(&result.to_json(), pass)
        }
    }
}

enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FieldChoice {
    fn from_opt(p: &Option<u64>) -> Result<Self, Error> {
        match p {
            None => Ok(FieldChoice::Rational),
            Some(p) => {
                check_prime(*p)?;
                Ok(FieldChoice::Prime(*p))
            }
        }
    }
}

struct SelectedIdeal<F: Field> {
    ring: Ring,
    ideal: Ideal<F>,
}

fn select_ideal<F: Field>(args: &IdealArgs) -> Result<SelectedIdeal<F>, Error> {
    if let Some(model_name) = &args.model {
        let n: usize = model_name
            .strip_prefix("flag")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("unknown model {model_name:?}")))?;
        let model = flag_plucker_model::<F>(n)?;
        let ring = model.ring.clone();
        let ideal = match (&args.v, &args.w) {
            (Some(v), Some(w)) => {
                let group = WeylGroup::new(type_a(n - 1));
                let v = element(&group, v)?;
                let w = element(&group, w)?;
                let rich = richardson_ideal(&model, &v, &w)?;
                if args.boundary {
                    rich.boundary.to_ideal()
                } else {
                    rich.ideal.to_ideal()
                }
            }
            (None, None) => {
                if let Some(json) = &args.ideal {
                    parse_ideal(&ring, json)?
                } else {
                    model.relations_ideal()
                }
            }
            _ => {
                return Err(Error::Parse(
                    "--v and --w must be given together".into(),
                ))
            }
        };
        Ok(SelectedIdeal { ring, ideal })
    } else {
        let vars = args
            .vars
            .as_ref()
            .ok_or_else(|| Error::Parse("either --model or --vars is required".into()))?;
        let names: Vec<String> = vars
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        let ring = Ring::new(names);
        let json = args
            .ideal
            .as_ref()
            .ok_or_else(|| Error::Parse("--ideal is required with --vars".into()))?;
        let ideal = parse_ideal(&ring, json)?;
        Ok(SelectedIdeal { ring, ideal })
    }
}

fn parse_ideal<F: Field>(ring: &Ring, json: &str) -> Result<Ideal<F>, Error> {
    let sources: Vec<String> = serde_json::from_str(json)
        .map_err(|e| Error::Parse(format!("--ideal must be a JSON list of strings: {e}")))?;
    let gens = sources
        .iter()
        .map(|src| ring.parse(src))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::new(ring.clone(), gens)
}

#[derive(Serialize)]
struct BasisJson {
    ring: Vec<String>,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct DimensionJson {
    dimension: usize,
}

fn groebner_report<F: Field>(args: &IdealArgs) -> Result<Report, Error> {
    let selected = select_ideal::<F>(args)?;
    let gb = groebner(&selected.ideal);
    report(
        &BasisJson {
            ring: selected.ring.names().to_vec(),
            basis: gb
                .gens
                .iter()
                .map(|g| selected.ring.display(g).to_string())
                .collect(),
        },
        true,
    )
}

fn dimension_report<F: Field>(args: &IdealArgs) -> Result<Report, Error> {
    let selected = select_ideal::<F>(args)?;
    let gb = groebner(&selected.ideal);
    report(
        &DimensionJson {
            dimension: dimension(&gb),
        },
        true,
    )
}

fn fedder_report<F: Field>(args: &IdealArgs) -> Result<Report, Error> {
    let selected = select_ideal::<F>(args)?;
    let result = fedder_fpure(&selected.ideal)?;
    let pass = result.is_split;
    report(&result.to_json(&selected.ring), pass)
}

fn compatible_report<F: Field>(model_name: &str, v: &str, w: &str) -> Result<Report, Error> {
    let n: usize = model_name
        .strip_prefix("flag")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("unknown model {model_name:?}")))?;
    let model = flag_plucker_model::<F>(n)?;
    let group = WeylGroup::new(type_a(n - 1));
    let v = element(&group, v)?;
    let w = element(&group, w)?;
    let rich = richardson_ideal(&model, &v, &w)?;
    let result = compatible_fpure_test(&rich.ideal.to_ideal(), &rich.boundary.to_ideal())?;
    let pass = result.pass;
    report(&result.to_json(&model.ring), pass)
}

fn colon_report<F: Field>(vars: &str, j: &str, i: &str) -> Result<Report, Error> {
    let names: Vec<String> = vars
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    let ring = Ring::new(names);
    let j = parse_ideal::<F>(&ring, j)?;
    let i = parse_ideal::<F>(&ring, i)?;
    let quotient = colon(&j, &i)?;
    report(
        &BasisJson {
            ring: ring.names().to_vec(),
            basis: quotient
                .gens
                .iter()
                .map(|g| ring.display(g).to_string())
                .collect(),
        },
        true,
    )
}

fn run_fsplit(op: &FsplitOp) -> Result<Report, Error> {
    match op {
        FsplitOp::Groebner { ideal, p } => match FieldChoice::from_opt(p)? {
            FieldChoice::Rational => groebner_report::<Q>(ideal),
            FieldChoice::Prime(2) => groebner_report::<F2>(ideal),
            FieldChoice::Prime(3) => groebner_report::<F3>(ideal),
            FieldChoice::Prime(5) => groebner_report::<F5>(ideal),
            FieldChoice::Prime(7) => groebner_report::<F7>(ideal),
            FieldChoice::Prime(p) => Err(Error::NotPrime(p)),
        },
        FsplitOp::Dim { ideal, p } => match FieldChoice::from_opt(p)? {
            FieldChoice::Rational => dimension_report::<Q>(ideal),
            FieldChoice::Prime(2) => dimension_report::<F2>(ideal),
            FieldChoice::Prime(3) => dimension_report::<F3>(ideal),
            FieldChoice::Prime(5) => dimension_report::<F5>(ideal),
            FieldChoice::Prime(7) => dimension_report::<F7>(ideal),
            FieldChoice::Prime(p) => Err(Error::NotPrime(p)),
        },
        FsplitOp::Fedder { ideal, p } => {
            check_prime(*p)?;
            match p {
                2 => fedder_report::<F2>(ideal),
                3 => fedder_report::<F3>(ideal),
                5 => fedder_report::<F5>(ideal),
                7 => fedder_report::<F7>(ideal),
                other => Err(Error::NotPrime(*other)),
            }
        }
        FsplitOp::Compatible { model, v, w, p } => {
            check_prime(*p)?;
            match p {
                2 => compatible_report::<F2>(model, v, w),
                3 => compatible_report::<F3>(model, v, w),
                5 => compatible_report::<F5>(model, v, w),
                7 => compatible_report::<F7>(model, v, w),
                other => Err(Error::NotPrime(*other)),
            }
        }
        FsplitOp::Colon { vars, j, i, p } => match FieldChoice::from_opt(p)? {
            FieldChoice::Rational => colon_report::<Q>(vars, j, i),
            FieldChoice::Prime(2) => colon_report::<F2>(vars, j, i),
            FieldChoice::Prime(3) => colon_report::<F3>(vars, j, i),
            FieldChoice::Prime(5) => colon_report::<F5>(vars, j, i),
            FieldChoice::Prime(7) => colon_report::<F7>(vars, j, i),
            FieldChoice::Prime(p) => Err(Error::NotPrime(p)),
        },
    }
}

fn run_certify(args: &CertifyArgs) -> Result<Report, Error> {
    let group = WeylGroup::new(args.datum.resolve()?);
    let v = element(&group, &args.v)?;
    let w = element(&group, &args.w)?;
    let primes = match &args.p {
        None => Vec::new(),
        Some(src) => parse_int_list(src)?
            .into_iter()
            .map(|p| p as u64)
            .collect(),
    };
    let options = CertifyOptions {
        n: args.n,
        primes,
    };
    let certificate = certify(&v, &w, &options)?;
    let pass = certificate.verdict;
    report(&certificate.to_json(), pass)
}

/// Plain-text rendering: one `key: value` line per field, arrays of objects
/// as aligned rows.
fn render_table(value: &serde_json::Value) -> String {
    fn scalar(v: &serde_json::Value) -> String {
        match v {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Object(map)
                if map.len() == 2 && map.contains_key("num") && map.contains_key("den") =>
            {
                format!("{}/{}", map["num"], map["den"])
            }
            other => other.to_string(),
        }
    }
    fn inline(v: &serde_json::Value) -> Option<String> {
        match v {
            serde_json::Value::Array(items) => {
                let cells: Vec<Option<String>> = items.iter().map(inline).collect();
                if cells.iter().all(Option::is_some) {
                    let joined: Vec<String> = cells.into_iter().map(Option::unwrap).collect();
                    Some(format!("[{}]", joined.join(", ")))
                } else {
                    None
                }
            }
            serde_json::Value::Object(map)
                if map.len() == 2 && map.contains_key("num") && map.contains_key("den") =>
            {
                Some(scalar(v))
            }
            serde_json::Value::Object(_) => None,
            other => Some(scalar(other)),
        }
    }
    fn rows(items: &[serde_json::Value], indent: &str, out: &mut String) {
        for item in items {
            match inline(item) {
                Some(text) => out.push_str(&format!("{indent}- {text}\n")),
                None => match item {
                    serde_json::Value::Object(map) => {
                        let cells: Vec<String> = map
                            .iter()
                            .map(|(k, v)| {
                                format!("{k}={}", inline(v).unwrap_or_else(|| v.to_string()))
                            })
                            .collect();
                        out.push_str(&format!("{indent}- {}\n", cells.join("  ")));
                    }
                    serde_json::Value::Array(inner) => rows(inner, indent, out),
                    other => out.push_str(&format!("{indent}- {}\n", scalar(other))),
                },
            }
        }
    }
    let mut out = String::new();
    match value {
        serde_json::Value::Object(map) => {
            for (key, v) in map {
                match inline(v) {
                    Some(text) => out.push_str(&format!("{key}: {text}\n")),
                    None => match v {
                        serde_json::Value::Array(items) => {
                            out.push_str(&format!("{key}:\n"));
                            rows(items, "  ", &mut out);
                        }
                        other => out.push_str(&format!("{key}: {other}\n")),
                    },
                }
            }
        }
        serde_json::Value::Array(items) => rows(items, "", &mut out),
        other => out.push_str(&scalar(other)),
    }
    out.trim_end().to_string()
}
