//! Command-line surface: algebra ingestion, classification and
//! index-complex queries, verification runs, and catalog emission.
//!
//! Exit codes: 0 success (all checks pass), 1 verification failure with
//! embedded witnesses, 2 input error, 3 unsupported request.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lie_index::algebra::SeriesKind;
use lie_index::classify::is_supersolvable;
use lie_index::doc::{self, AlgebraDocument, AnyAlgebra};
use lie_index::field::{Field, FieldSpec};
use lie_index::index::{
    has_abelian_ideal_completion, ideal_completions, ideal_index, index_complex, is_maximal,
};
use lie_index::lattice::{self, build_lattice, GroundField};
use lie_index::report::{
    digest_bytes, CatalogEntryDoc, CatalogResults, ClassifyResults, IndexComplexResults,
    RecordDoc, ReportDocument, ReportResults, ReportSummary, SkipNote, SubspaceRows,
};
use lie_index::verify::{
    known_check, run_suite, CheckFilter, RandomBatch, SuiteConfig,
};
use lie_index::{
    catalog, Bounds, CompletionRecord, FpAlgebra, LieAlgebra, PrimeField, QAlgebra, Rationals,
    Subspace, TriBool,
};

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lie-index",
    version,
    about = "Exact index-complex computations for finite-dimensional Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify an algebra document: flags, series, radical, Frattini data.
    Classify {
        /// Path to an algebra document (JSON).
        #[arg(long)]
        input: PathBuf,
        /// Enumeration bound overrides, e.g. "5:5,7:3".
        #[arg(long)]
        bounds: Option<String>,
        /// Print the JSON report to stdout instead of the table.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this path.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute the index complex of a maximal subalgebra.
    IndexComplex {
        #[arg(long)]
        input: PathBuf,
        /// The maximal subalgebra, as a JSON array of scalar strings (one
        /// vector) or an array of such arrays (several spanning vectors).
        #[arg(long)]
        maximal: String,
        /// Report only the ideal index.
        #[arg(long)]
        eta_only: bool,
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the theorem-verification suite over a corpus.
    Verify {
        /// "catalog" or "random".
        #[arg(long)]
        corpus: String,
        /// Ground field for random corpora, e.g. "gf2".
        #[arg(long)]
        field: Option<String>,
        /// Maximum dimension for random corpora (1..=4).
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random algebras to draw.
        #[arg(long)]
        count: Option<usize>,
        /// Comma-separated check names, or "all".
        #[arg(long)]
        checks: Option<String>,
        #[arg(long)]
        bounds: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List catalog entries, or emit one as an algebra document.
    Catalog {
        /// List all entries with descriptions.
        #[arg(long)]
        list: bool,
        /// Entry to emit.
        #[arg(long)]
        name: Option<String>,
        /// Field for the emitted entry: "Q" (default) or "gf<p>".
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli))
}

fn fail(code: u8, message: &str) -> u8 {
    eprintln!("error: {message}");
    code
}

fn parse_bounds(spec: &Option<String>) -> Result<Bounds, String> {
    match spec {
        Some(s) => Bounds::parse(s),
        None => Ok(Bounds::new()),
    }
}

fn parse_field_name(name: &str) -> Result<FieldSpec, String> {
    let name = name.trim();
    if name.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = name
        .strip_prefix("gf")
        .or_else(|| name.strip_prefix("GF"))
        .map(|rest| rest.trim_matches(|c| c == '(' || c == ')'))
        .unwrap_or(name);
    let p: u32 = digits
        .parse()
        .map_err(|_| format!("cannot parse field {name:?}; expected \"Q\" or \"gf<p>\""))?;
    Ok(FieldSpec::PrimeField(p))
}

fn emit(report: &ReportDocument, json: bool, output: &Option<PathBuf>) -> Result<(), String> {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
    if let Some(path) = output {
        std::fs::write(path, report.to_json())
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Classify {
            input,
            bounds,
            json,
            output,
        } => cmd_classify(&input, &bounds, json, &output),
        Command::IndexComplex {
            input,
            maximal,
            eta_only,
            bounds,
            json,
            output,
        } => cmd_index_complex(&input, &maximal, eta_only, &bounds, json, &output),
        Command::Verify {
            corpus,
            field,
            dim,
            seed,
            count,
            checks,
            bounds,
            json,
            output,
        } => cmd_verify(
            &corpus, &field, dim, seed, count, &checks, &bounds, json, &output,
        ),
        Command::Catalog {
            list,
            name,
            field,
            output,
        } => cmd_catalog(list, &name, &field, &output),
    }
}

fn load_document(input: &PathBuf) -> Result<(AnyAlgebra, String), (u8, String)> {
    let bytes = std::fs::read(input)
        .map_err(|e| (EXIT_INPUT, format!("cannot read {}: {e}", input.display())))?;
    let digest = digest_bytes(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| (EXIT_INPUT, "input is not UTF-8".to_string()))?;
    let document =
        AlgebraDocument::from_json(&text).map_err(|e| (EXIT_INPUT, e.to_string()))?;
    let algebra = document
        .to_algebra()
        .map_err(|e| (EXIT_INPUT, e.to_string()))?;
    Ok((algebra, digest))
}

fn series_rows<F: Field>(l: &LieAlgebra<F>, kind: SeriesKind) -> Vec<SubspaceRows> {
    l.series(kind)
        .chain
        .iter()
        .map(|t| t.to_strings(l.field()))
        .collect()
}

fn cmd_classify(
    input: &PathBuf,
    bounds: &Option<String>,
    json: bool,
    output: &Option<PathBuf>,
) -> u8 {
    let bounds = match parse_bounds(bounds) {
        Ok(b) => b,
        Err(e) => return fail(EXIT_INPUT, &e),
    };
    let (algebra, digest) = match load_document(input) {
        Ok(x) => x,
        Err((code, msg)) => return fail(code, &msg),
    };
    let command = format!("classify --input {}", input.display());
    let (results, unsupported) = match &algebra {
        AnyAlgebra::Fp(l) => classify_fp(l, &bounds),
        AnyAlgebra::Q(l) => classify_q(l),
    };
    let summary = ReportSummary {
        verdict: if unsupported { "partial" } else { "ok" }.to_string(),
        detail: if unsupported {
            "some computations skipped as unsupported".to_string()
        } else {
            "complete".to_string()
        },
    };
    let report = ReportDocument::new(digest, command, ReportResults::Classify(results), summary);
    if let Err(e) = emit(&report, json, output) {
        return fail(EXIT_INPUT, &e);
    }
    if unsupported {
        EXIT_UNSUPPORTED
    } else {
        EXIT_OK
    }
}

fn classify_common<F: GroundField>(l: &LieAlgebra<F>) -> ClassifyResults {
    let flags = l.classify_basic();
    ClassifyResults {
        field: l.field().spec().to_string(),
        dim: l.dim(),
        abelian: flags.abelian,
        nilpotent: flags.nilpotent,
        solvable: flags.solvable,
        completely_solvable: flags.completely_solvable,
        supersolvable: is_supersolvable(l).to_string(),
        derived_series: series_rows(l, SeriesKind::Derived),
        lower_central_series: series_rows(l, SeriesKind::LowerCentral),
        radical: None,
        frattini_subalgebra: None,
        frattini_ideal: None,
        skips: Vec::new(),
    }
}

fn classify_fp(l: &FpAlgebra, bounds: &Bounds) -> (ClassifyResults, bool) {
    let mut results = classify_common(l);
    let mut unsupported = false;
    match build_lattice(l, bounds) {
        Ok(lat) => {
            match lattice::radical_from_lattice(l, &lat) {
                Ok(r) => results.radical = Some(r.to_strings(l.field())),
                Err(e) => {
                    unsupported = true;
                    results.skips.push(SkipNote {
                        what: "radical".to_string(),
                        reason: e.to_string(),
                    });
                }
            }
            match lattice::frattini(l, &lat) {
                Ok((f, phi)) => {
                    results.frattini_subalgebra = Some(f.to_strings(l.field()));
                    results.frattini_ideal = Some(phi.to_strings(l.field()));
                }
                Err(e) => {
                    results.skips.push(SkipNote {
                        what: "frattini".to_string(),
                        reason: e.to_string(),
                    });
                }
            }
        }
        Err(e) => {
            unsupported = true;
            results.skips.push(SkipNote {
                what: "lattice".to_string(),
                reason: e.to_string(),
            });
        }
    }
    (results, unsupported)
}

fn classify_q(l: &QAlgebra) -> (ClassifyResults, bool) {
    let mut results = classify_common(l);
    let mut unsupported = false;
    match Rationals::solvable_radical(l, &Bounds::new()) {
        Ok(r) => results.radical = Some(r.to_strings(l.field())),
        Err(e) => {
            unsupported = true;
            results.skips.push(SkipNote {
                what: "radical".to_string(),
                reason: e.to_string(),
            });
        }
    }
    // Frattini data needs the maximal subalgebras, which are not
    // enumerable over the rationals; reported as a skip, not a failure.
    results.skips.push(SkipNote {
        what: "frattini".to_string(),
        reason: "maximal subalgebras are not enumerable over Q".to_string(),
    });
    (results, unsupported)
}

fn record_doc<F: Field>(field: &F, r: &CompletionRecord<F>) -> RecordDoc {
    RecordDoc {
        completion: r.space.to_strings(field),
        strict_core: r.strict_core.to_strings(field),
        quotient_dim: r.quotient_dim,
        ideal: r.is_ideal,
        subideal: r.is_subideal,
        maximal_completion: r.maximal_in_complex,
        in_s_of_m: r.in_s_of_m,
        quotient_abelian: r.quotient_abelian,
    }
}

fn parse_maximal<F: Field>(
    l: &LieAlgebra<F>,
    rows_json: &str,
) -> Result<Subspace<F>, (u8, String)> {
    let rows = doc::parse_vector_rows(rows_json).map_err(|e| (EXIT_INPUT, e.to_string()))?;
    let field = l.field();
    let mut parsed: Vec<Vec<F::Elem>> = Vec::new();
    for row in &rows {
        if row.len() != l.dim() {
            return Err((
                EXIT_INPUT,
                format!("vector length {} does not match dimension {}", row.len(), l.dim()),
            ));
        }
        let mut v = Vec::with_capacity(row.len());
        for s in row {
            v.push(field.parse(s).map_err(|e| (EXIT_INPUT, e.to_string()))?);
        }
        parsed.push(v);
    }
    Subspace::from_rows(field, l.dim(), &parsed).map_err(|e| (EXIT_INPUT, e.to_string()))
}

fn cmd_index_complex(
    input: &PathBuf,
    maximal_json: &str,
    eta_only: bool,
    bounds: &Option<String>,
    json: bool,
    output: &Option<PathBuf>,
) -> u8 {
    let bounds = match parse_bounds(bounds) {
        Ok(b) => b,
        Err(e) => return fail(EXIT_INPUT, &e),
    };
    let (algebra, digest) = match load_document(input) {
        Ok(x) => x,
        Err((code, msg)) => return fail(code, &msg),
    };
    let command = format!("index-complex --input {}", input.display());
    let built = match &algebra {
        AnyAlgebra::Fp(l) => index_complex_fp(l, maximal_json, eta_only, &bounds),
        AnyAlgebra::Q(l) => index_complex_q(l, maximal_json, eta_only),
    };
    match built {
        Ok(results) => {
            let summary = ReportSummary {
                verdict: "ok".to_string(),
                detail: format!("{} records", results.records.len()),
            };
            let report =
                ReportDocument::new(digest, command, ReportResults::IndexComplex(results), summary);
            if let Err(e) = emit(&report, json, output) {
                return fail(EXIT_INPUT, &e);
            }
            EXIT_OK
        }
        Err((code, msg)) => fail(code, &msg),
    }
}

fn index_complex_fp(
    l: &FpAlgebra,
    maximal_json: &str,
    eta_only: bool,
    bounds: &Bounds,
) -> Result<IndexComplexResults, (u8, String)> {
    let m = parse_maximal(l, maximal_json)?;
    if !l.is_subalgebra(&m) {
        return Err((EXIT_INPUT, "the given subspace is not a subalgebra".into()));
    }
    if m.is_full() {
        return Err((EXIT_INPUT, "the whole algebra is not a maximal subalgebra".into()));
    }
    let lat = build_lattice(l, bounds).map_err(|e| (EXIT_UNSUPPORTED, e.to_string()))?;
    if is_maximal(l, &m, Some(&lat)) == TriBool::No {
        return Err((EXIT_INPUT, "the given subalgebra is not maximal".into()));
    }
    let cx = index_complex(l, &m, &lat).map_err(|e| (EXIT_UNSUPPORTED, e.to_string()))?;
    let field = l.field();
    let records = if eta_only {
        Vec::new()
    } else {
        cx.records.iter().map(|r| record_doc(field, r)).collect()
    };
    Ok(IndexComplexResults {
        field: field.spec().to_string(),
        maximal: m.to_strings(field),
        mode: if eta_only { "eta_only" } else { "exhaustive" }.to_string(),
        eta: cx.eta,
        records,
        abelian_ideal_completion: Some(cx.has_abelian_ideal_completion()),
    })
}

fn index_complex_q(
    l: &QAlgebra,
    maximal_json: &str,
    eta_only: bool,
) -> Result<IndexComplexResults, (u8, String)> {
    let m = parse_maximal(l, maximal_json)?;
    if !l.is_subalgebra(&m) {
        return Err((EXIT_INPUT, "the given subspace is not a subalgebra".into()));
    }
    if m.is_full() {
        return Err((EXIT_INPUT, "the whole algebra is not a maximal subalgebra".into()));
    }
    if is_maximal(l, &m, None) == TriBool::No {
        return Err((EXIT_INPUT, "the given subalgebra is not maximal".into()));
    }
    // Exhaustive completion enumeration is impossible over Q; the report
    // carries the decidable facts instead: ideal completions, the ideal
    // index, and abelian-ideal-completion status.
    let ideals = Rationals::all_ideals(l, &Bounds::new())
        .map_err(|e| (EXIT_UNSUPPORTED, e.to_string()))?;
    let records_full =
        ideal_completions(l, &m, &ideals).map_err(|e| (EXIT_UNSUPPORTED, e.to_string()))?;
    let eta = match ideal_index(l, &m, &ideals) {
        Ok(v) => Some(v),
        Err(e) => return Err((EXIT_UNSUPPORTED, e.to_string())),
    };
    let abelian = has_abelian_ideal_completion(l, &m, &ideals)
        .map_err(|e| (EXIT_UNSUPPORTED, e.to_string()))?;
    let field = l.field();
    let records = if eta_only {
        Vec::new()
    } else {
        records_full.iter().map(|r| record_doc(field, r)).collect()
    };
    Ok(IndexComplexResults {
        field: field.spec().to_string(),
        maximal: m.to_strings(field),
        mode: if eta_only { "eta_only" } else { "targeted" }.to_string(),
        eta,
        records,
        abelian_ideal_completion: Some(abelian),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    corpus: &str,
    field: &Option<String>,
    dim: Option<usize>,
    seed: Option<u64>,
    count: Option<usize>,
    checks: &Option<String>,
    bounds: &Option<String>,
    json: bool,
    output: &Option<PathBuf>,
) -> u8 {
    let checks = match checks.as_deref() {
        None | Some("all") => CheckFilter::All,
        Some(list) => {
            let names: Vec<String> = list
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            for n in &names {
                if !known_check(n) {
                    return fail(EXIT_INPUT, &format!("unknown check {n:?}"));
                }
            }
            CheckFilter::Named(names)
        }
    };
    let suite_bounds = match bounds {
        Some(s) => match Bounds::parse(s) {
            Ok(b) => b,
            Err(e) => return fail(EXIT_INPUT, &e),
        },
        // default widened so the dim-5 GF(5) catalog member is enumerable
        None => Bounds::new().with(5, 5),
    };
    let config = match corpus {
        "catalog" => SuiteConfig {
            catalog: true,
            random: Vec::new(),
            checks,
            bounds: suite_bounds,
        },
        "random" => {
            let spec = match field.as_deref() {
                Some(name) => match parse_field_name(name) {
                    Ok(s) => s,
                    Err(e) => return fail(EXIT_INPUT, &e),
                },
                None => FieldSpec::PrimeField(2),
            };
            let FieldSpec::PrimeField(p) = spec else {
                return fail(EXIT_INPUT, "random corpora need a finite field");
            };
            if PrimeField::new(p).is_err() {
                return fail(EXIT_INPUT, &format!("{p} is not a valid prime modulus"));
            }
            let max_dim = dim.unwrap_or(3);
            if !(1..=4).contains(&max_dim) {
                return fail(EXIT_INPUT, "random corpora support --dim 1..=4");
            }
            SuiteConfig {
                catalog: false,
                random: vec![RandomBatch {
                    p,
                    max_dim,
                    count: count.unwrap_or(100),
                    seed: seed.unwrap_or(7),
                }],
                checks,
                bounds: suite_bounds,
            }
        }
        other => return fail(EXIT_INPUT, &format!("unknown corpus {other:?}")),
    };
    let report = run_suite(&config);
    let digest = digest_bytes(report.corpus.as_bytes());
    let command = format!("verify --corpus {corpus}");
    let doc = ReportDocument::from_verification(digest, command, &report);
    if let Err(e) = emit(&doc, json, output) {
        return fail(EXIT_INPUT, &e);
    }
    if report.has_failures() {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}

fn cmd_catalog(
    list: bool,
    name: &Option<String>,
    field: &Option<String>,
    output: &Option<PathBuf>,
) -> u8 {
    match name {
        None => {
            let _ = list; // listing is the default without --name
            let entries: Vec<CatalogEntryDoc> = catalog::NAMES
                .iter()
                .map(|n| CatalogEntryDoc {
                    name: n.to_string(),
                    description: catalog::describe(n).unwrap_or_default().to_string(),
                })
                .collect();
            let report = ReportDocument::new(
                digest_bytes(b"catalog"),
                "catalog --list".to_string(),
                ReportResults::Catalog(CatalogResults { entries }),
                ReportSummary {
                    verdict: "ok".to_string(),
                    detail: format!("{} entries", catalog::NAMES.len()),
                },
            );
            if let Err(e) = emit(&report, false, output) {
                return fail(EXIT_INPUT, &e);
            }
            EXIT_OK
        }
        Some(name) => {
            let spec = match field.as_deref() {
                None => FieldSpec::Rationals,
                Some(f) => match parse_field_name(f) {
                    Ok(s) => s,
                    Err(e) => return fail(EXIT_INPUT, &e),
                },
            };
            let algebra = match spec {
                FieldSpec::Rationals => {
                    catalog::build(name, Rationals).map(AnyAlgebra::Q)
                }
                FieldSpec::PrimeField(p) => match PrimeField::new(p) {
                    Ok(f) => catalog::build(name, f).map(AnyAlgebra::Fp),
                    Err(e) => return fail(EXIT_INPUT, &e.to_string()),
                },
            };
            match algebra {
                Ok(a) => {
                    let json_doc = doc::to_document(&a).to_json();
                    println!("{json_doc}");
                    if let Some(path) = output {
                        if let Err(e) = std::fs::write(path, format!("{json_doc}\n")) {
                            return fail(EXIT_INPUT, &format!("cannot write output: {e}"));
                        }
                    }
                    EXIT_OK
                }
                Err(e) => fail(EXIT_INPUT, &e.to_string()),
            }
        }
    }
}
