//! Command-line front end: ingest code and function files, run the exact
//! computations and verification suites, and emit machine-readable reports.
//!
//! Exit status: 0 when every check passes, 1 when a verification fails,
//! 2 on usage or input errors, 3 when a size guard rejects the request.
//! Exact integers and rationals are serialized as decimal strings; floats
//! are printed at 12 significant digits so identical invocations produce
//! byte-identical reports.

use std::collections::BTreeSet;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use specktral::codes::{
    all_subspaces, format_code_file, parse_code_file, set_max_enumeration_words, AffineCode,
    LinearCode,
};
use specktral::constructions::{build_c, build_g, build_m};
use specktral::covering::{
    check_translate_dichotomy, count_intersecting_faces, covering_score, Face,
};
use specktral::error::Error;
use specktral::fourier::{
    eigenfunction_check, fast_transform_q2, format_function, parse_function, support, transform,
    uncertainty_report, DenseFunction,
};
use specktral::galois::format_matrix;
use specktral::identities::{
    verify_binary_even_identity, verify_generating_identity, verify_harmonic_dual_identity,
    verify_harmonic_identity_exact, verify_macwilliams, verify_shell_transform_exact,
};
use specktral::krawtchouk::krawtchouk_row_from_gf;

const EXIT_VERIFICATION_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_GUARD: i32 = 3;

#[derive(Parser)]
#[command(
    name = "specktral",
    version,
    about = "Exact weight-spectrum analysis for linear and affine codes over prime fields"
)]
struct Cli {
    /// Report format (artifact-emitting commands ignore this)
    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Tolerance for floating-point checks
    #[arg(long, global = true, default_value_t = specktral::fourier::DEFAULT_TOL)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Exact weight distribution of a (possibly affine) code
    Spectrum {
        /// Code file; '-' reads standard input
        #[arg(long)]
        code: PathBuf,
    },
    /// Dual code, emitted in the matrix text format
    Dual {
        #[arg(long)]
        code: PathBuf,
    },
    /// The uniform-spectrum statistic alpha = max coset weight fraction
    Alpha {
        #[arg(long)]
        code: PathBuf,
    },
    /// Run the MacWilliams identity suite over a code or all subspaces
    Verify {
        /// Code file; '-' reads standard input
        #[arg(long, conflicts_with_all = ["all_subspaces", "q", "n"])]
        code: Option<PathBuf>,
        /// Check every subspace of Q_q^n
        #[arg(long, requires = "q", requires = "n")]
        all_subspaces: bool,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Build the extremal objects M_(n,i), C_n and g
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Character transform, support, eigenfunction and uncertainty reports
    Fourier {
        #[command(subcommand)]
        what: FourierCmd,
    },
    /// Face intersection counts and the translate dichotomy check
    Faces {
        #[command(subcommand)]
        what: FacesCmd,
    },
    /// Krawtchouk polynomial table P_k(m; n, q)
    Krawtchouk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// The 1-weight affine code M_(n,i) = {(x, x xor 1, 0)}
    #[command(name = "m", alias = "M")]
    M {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        /// Write to a file instead of standard output
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// The linear span C_n of M_(n,0)
    #[command(name = "c", alias = "C")]
    C {
        #[arg(long)]
        n: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// The minimal-support eigenfunction g (function file)
    #[command(name = "g", alias = "G")]
    G {
        #[arg(long)]
        n: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FourierCmd {
    /// Transform the input and emit it as a function file
    Transform {
        #[arg(long)]
        function: Option<PathBuf>,
        /// Use a code file's indicator function as input
        #[arg(long, conflicts_with = "function")]
        code: Option<PathBuf>,
        /// Use the q = 2 butterfly path
        #[arg(long)]
        fast: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Support of the input above the tolerance
    Support {
        #[arg(long)]
        function: Option<PathBuf>,
        #[arg(long, conflicts_with = "function")]
        code: Option<PathBuf>,
    },
    /// Eigenfunction check on Q_2^n (eigenvalues +1 / -1)
    Eigen {
        #[arg(long)]
        function: Option<PathBuf>,
        #[arg(long, conflicts_with = "function")]
        code: Option<PathBuf>,
    },
    /// Support-size uncertainty bound |supp(f)||supp(f_hat)| >= 2^n
    Uncertainty {
        #[arg(long)]
        function: Option<PathBuf>,
        #[arg(long, conflicts_with = "function")]
        code: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum FacesCmd {
    /// How many t-faces the code's word set meets
    Count {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Translate dichotomy: nonzero counts are one common power of two
    #[command(alias = "prop2")]
    Dichotomy {
        #[arg(long)]
        code: PathBuf,
        /// Comma-separated free positions; omitted = every free set
        #[arg(long)]
        free: Option<String>,
    },
}

fn main() {
    if let Ok(raw) = std::env::var("SPECKTRAL_MAX_ENUM") {
        match raw.parse::<u64>() {
            Ok(limit) => set_max_enumeration_words(limit),
            Err(_) => {
                eprintln!("error: SPECKTRAL_MAX_ENUM must be an integer, got '{raw}'");
                std::process::exit(EXIT_USAGE);
            }
        }
    }
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn exit_code(err: &Error) -> i32 {
    if err.is_guard() {
        EXIT_GUARD
    } else {
        EXIT_USAGE
    }
}

fn fail(err: Error) -> i32 {
    eprintln!("error: {err}");
    exit_code(&err)
}

/// Fixed 12-significant-digit rendering for floats in reports.
fn f64_str(x: f64) -> String {
    format!("{x:.11e}")
}

/// Writes to stdout, exiting quietly when the downstream reader has closed
/// the pipe.
fn print_out(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).is_err() || out.flush().is_err() {
        std::process::exit(0);
    }
}

fn read_input(path: &Path) -> Result<String, i32> {
    if path == Path::new("-") {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            eprintln!("error: cannot read standard input: {e}");
            return Err(EXIT_USAGE);
        }
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| {
            eprintln!("error: cannot read {}: {e}", path.display());
            EXIT_USAGE
        })
    }
}

fn load_code(path: &Path) -> Result<AffineCode, i32> {
    let text = read_input(path)?;
    parse_code_file(&text).map_err(fail)
}

fn load_function(function: &Option<PathBuf>, code: &Option<PathBuf>) -> Result<DenseFunction, i32> {
    if let Some(path) = code {
        let code = load_code(path)?;
        return DenseFunction::indicator(&code).map_err(fail);
    }
    let text = match function {
        Some(path) => read_input(path)?,
        None => read_input(Path::new("-"))?,
    };
    parse_function(&text).map_err(fail)
}

fn write_artifact(text: &str, output: &Option<PathBuf>) -> i32 {
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
            0
        }
        None => {
            print_out(text);
            0
        }
    }
}

fn emit(format: Format, report: &Value, headers: &[&str], rows: &[Vec<String>]) {
    match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(report).expect("valid JSON");
            text.push('\n');
            print_out(&text);
        }
        Format::Csv => {
            let mut text = headers.join(",");
            text.push('\n');
            for row in rows {
                text.push_str(&row.join(","));
                text.push('\n');
            }
            print_out(&text);
        }
    }
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Spectrum { code } => cmd_spectrum(cli.format, &code),
        Command::Dual { code } => cmd_dual(&code),
        Command::Alpha { code } => cmd_alpha(cli.format, &code),
        Command::Verify {
            code,
            all_subspaces,
            q,
            n,
        } => cmd_verify(cli.format, cli.tol, code, all_subspaces, q, n),
        Command::Construct { what } => cmd_construct(what),
        Command::Fourier { what } => cmd_fourier(cli.format, cli.tol, what),
        Command::Faces { what } => cmd_faces(cli.format, what),
        Command::Krawtchouk { n, q } => cmd_krawtchouk(cli.format, n, q),
    }
}

fn cmd_spectrum(format: Format, path: &Path) -> i32 {
    let code = match load_code(path) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let dist = match code.weight_distribution() {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    let counts = dist.to_decimal_strings();
    let report = json!({
        "command": "spectrum",
        "q": code.q().get(),
        "n": code.length(),
        "k": code.dim(),
        "offset": code.offset().digits_string(),
        "counts": counts,
    });
    let rows: Vec<Vec<String>> = counts
        .iter()
        .enumerate()
        .map(|(i, c)| vec![i.to_string(), c.clone()])
        .collect();
    emit(format, &report, &["weight", "count"], &rows);
    0
}

fn cmd_dual(path: &Path) -> i32 {
    let code = match load_code(path) {
        Ok(c) => c,
        Err(e) => return e,
    };
    if !code.is_linear() {
        eprintln!("error: dual requires a linear code (zero offset)");
        return EXIT_USAGE;
    }
    let dual = code.linear().dual();
    write_artifact(&format_matrix(dual.generator()), &None)
}

fn cmd_alpha(format: Format, path: &Path) -> i32 {
    let code = match load_code(path) {
        Ok(c) => c,
        Err(e) => return e,
    };
    if !code.is_linear() {
        eprintln!("error: alpha is defined for subspaces; supply a linear code");
        return EXIT_USAGE;
    }
    let alpha = match code.linear().alpha() {
        Ok(a) => a,
        Err(e) => return fail(e),
    };
    let report = json!({
        "command": "alpha",
        "q": code.q().get(),
        "n": code.length(),
        "k": code.dim(),
        "alpha": alpha.to_string(),
    });
    emit(
        format,
        &report,
        &["q", "n", "k", "alpha"],
        &[vec![
            code.q().get().to_string(),
            code.length().to_string(),
            code.dim().to_string(),
            alpha.to_string(),
        ]],
    );
    0
}

fn rationals_string(values: &[num::BigRational]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(";"))
}

/// The identity suite for one linear code: every relation, exact where the
/// quantities are rational, the polynomial identity numerically.
fn identity_items(c: &LinearCode, tol: f64) -> Result<Vec<(String, String, String, bool)>, Error> {
    let mut items = Vec::new();

    let mw = verify_macwilliams(c)?;
    items.push((
        "macwilliams".to_string(),
        format!("[{}]", mw.transformed.to_decimal_strings().join(";")),
        format!("[{}]", mw.direct.to_decimal_strings().join(";")),
        mw.pass,
    ));

    let shell = verify_shell_transform_exact(c)?;
    items.push((
        "shell_transform".to_string(),
        rationals_string(&shell.lhs),
        rationals_string(&shell.rhs),
        shell.pass,
    ));

    let dual = verify_harmonic_dual_identity(c)?;
    items.push((
        "harmonic_dual".to_string(),
        dual.lhs.to_string(),
        dual.rhs.to_string(),
        dual.pass,
    ));

    let harm = verify_harmonic_identity_exact(&AffineCode::from_linear(c.clone()))?;
    items.push((
        "harmonic".to_string(),
        harm.lhs.to_string(),
        harm.rhs.to_string(),
        harm.pass,
    ));

    if c.q().get() == 2 {
        let even = verify_binary_even_identity(c)?;
        items.push((
            "binary_even".to_string(),
            even.lhs.to_string(),
            even.rhs.to_string(),
            even.pass,
        ));
    }

    let f = DenseFunction::indicator(&AffineCode::from_linear(c.clone()))?;
    let samples: Vec<f64> = (0..=c.length())
        .map(|j| j as f64 / (c.length() + 1) as f64)
        .collect();
    let gen = verify_generating_identity(&f, &samples, tol)?;
    items.push((
        "generating".to_string(),
        format!("max_abs_diff={}", f64_str(gen.max_abs_diff)),
        format!("tol={}", f64_str(gen.tol)),
        gen.pass,
    ));

    Ok(items)
}

fn cmd_verify(
    format: Format,
    tol: f64,
    code: Option<PathBuf>,
    all: bool,
    q: Option<u64>,
    n: Option<usize>,
) -> i32 {
    let codes: Vec<(String, LinearCode)> = if let Some(path) = &code {
        let affine = match load_code(path) {
            Ok(c) => c,
            Err(e) => return e,
        };
        if !affine.is_linear() {
            // The dual-side identities need a subspace; affine inputs are
            // covered by the harmonic shell identity alone.
            let harm = match verify_harmonic_identity_exact(&affine) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let items = vec![json!({
                "identity": "harmonic",
                "code": affine.brief(),
                "lhs": harm.lhs.to_string(),
                "rhs": harm.rhs.to_string(),
                "pass": harm.pass,
            })];
            let report = json!({
                "command": "verify",
                "items": items,
                "summary": {"total": 1, "passed": harm.pass as u64, "failed": !harm.pass as u64},
            });
            let rows = vec![vec![
                "harmonic".to_string(),
                affine.brief(),
                harm.lhs.to_string(),
                harm.rhs.to_string(),
                harm.pass.to_string(),
            ]];
            emit(
                format,
                &report,
                &["identity", "code", "lhs", "rhs", "pass"],
                &rows,
            );
            return if harm.pass {
                0
            } else {
                EXIT_VERIFICATION_FAILED
            };
        }
        vec![(affine.brief(), affine.linear().clone())]
    } else if all {
        let (q, n) = (q.expect("clap requires q"), n.expect("clap requires n"));
        let field = match specktral::galois::FieldOrder::new(q) {
            Ok(f) => f,
            Err(e) => return fail(e),
        };
        match all_subspaces(field, n) {
            Ok(subs) => subs.into_iter().map(|c| (c.brief(), c)).collect(),
            Err(e) => return fail(e),
        }
    } else {
        eprintln!("error: pass --code FILE or --all-subspaces --q Q --n N");
        return EXIT_USAGE;
    };

    let mut items = Vec::new();
    let mut rows = Vec::new();
    let mut passed = 0u64;
    let mut failed = 0u64;
    for (name, c) in &codes {
        let results = match identity_items(c, tol) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        for (identity, lhs, rhs, pass) in results {
            if pass {
                passed += 1;
            } else {
                failed += 1;
            }
            items.push(json!({
                "identity": identity,
                "code": name,
                "lhs": lhs,
                "rhs": rhs,
                "pass": pass,
            }));
            rows.push(vec![
                items.last().unwrap()["identity"]
                    .as_str()
                    .unwrap()
                    .to_string(),
                name.clone(),
                lhs.clone(),
                rhs.clone(),
                pass.to_string(),
            ]);
        }
    }
    let report = json!({
        "command": "verify",
        "codes": codes.len(),
        "items": items,
        "summary": {"total": passed + failed, "passed": passed, "failed": failed},
    });
    emit(
        format,
        &report,
        &["identity", "code", "lhs", "rhs", "pass"],
        &rows,
    );
    if failed == 0 {
        0
    } else {
        EXIT_VERIFICATION_FAILED
    }
}

fn cmd_construct(what: ConstructCmd) -> i32 {
    match what {
        ConstructCmd::M { n, i, output } => match build_m(n, i) {
            Ok(code) => write_artifact(&format_code_file(&code), &output),
            Err(e) => fail(e),
        },
        ConstructCmd::C { n, output } => match build_c(n) {
            Ok(code) => write_artifact(&format_code_file(&AffineCode::from_linear(code)), &output),
            Err(e) => fail(e),
        },
        ConstructCmd::G { n, output } => match build_g(n) {
            Ok(f) => write_artifact(&format_function(&f), &output),
            Err(e) => fail(e),
        },
    }
}

fn cmd_fourier(format: Format, tol: f64, what: FourierCmd) -> i32 {
    match what {
        FourierCmd::Transform {
            function,
            code,
            fast,
            output,
        } => {
            let f = match load_function(&function, &code) {
                Ok(f) => f,
                Err(e) => return e,
            };
            let fhat = if fast {
                match fast_transform_q2(&f) {
                    Ok(fh) => fh,
                    Err(e) => return fail(e),
                }
            } else {
                transform(&f)
            };
            write_artifact(&format_function(&fhat), &output)
        }
        FourierCmd::Support { function, code } => {
            let f = match load_function(&function, &code) {
                Ok(f) => f,
                Err(e) => return e,
            };
            let supp = support(&f, tol);
            let mut report = json!({
                "command": "fourier support",
                "q": f.q().get(),
                "n": f.n(),
                "size": supp.len(),
                "tol": f64_str(tol),
            });
            if supp.len() <= 4096 {
                report["indices"] = json!(supp.iter().collect::<Vec<_>>());
            }
            emit(
                format,
                &report,
                &["size", "tol"],
                &[vec![supp.len().to_string(), f64_str(tol)]],
            );
            0
        }
        FourierCmd::Eigen { function, code } => {
            let f = match load_function(&function, &code) {
                Ok(f) => f,
                Err(e) => return e,
            };
            let rep = match eigenfunction_check(&f, tol) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let eigen = match rep.eigenvalue {
                Some(1) => "+1",
                Some(-1) => "-1",
                _ => "none",
            };
            let report = json!({
                "command": "fourier eigen",
                "eigenvalue": eigen,
                "residual": f64_str(rep.residual),
                "residual_plus": f64_str(rep.residual_plus),
                "residual_minus": f64_str(rep.residual_minus),
                "tol": f64_str(tol),
            });
            emit(
                format,
                &report,
                &["eigenvalue", "residual", "tol"],
                &[vec![eigen.to_string(), f64_str(rep.residual), f64_str(tol)]],
            );
            if rep.eigenvalue.is_some() {
                0
            } else {
                EXIT_VERIFICATION_FAILED
            }
        }
        FourierCmd::Uncertainty { function, code } => {
            let f = match load_function(&function, &code) {
                Ok(f) => f,
                Err(e) => return e,
            };
            let rep = match uncertainty_report(&f, tol) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let report = json!({
                "command": "fourier uncertainty",
                "s1": rep.support_f,
                "s2": rep.support_fhat,
                "product": rep.product.to_string(),
                "bound": rep.bound.to_string(),
                "pass": rep.pass,
            });
            emit(
                format,
                &report,
                &["s1", "s2", "product", "bound", "pass"],
                &[vec![
                    rep.support_f.to_string(),
                    rep.support_fhat.to_string(),
                    rep.product.to_string(),
                    rep.bound.to_string(),
                    rep.pass.to_string(),
                ]],
            );
            if rep.pass {
                0
            } else {
                EXIT_VERIFICATION_FAILED
            }
        }
    }
}

fn cmd_faces(format: Format, what: FacesCmd) -> i32 {
    match what {
        FacesCmd::Count { code, t } => {
            let code = match load_code(&code) {
                Ok(c) => c,
                Err(e) => return e,
            };
            let words: Vec<_> = match code.codewords() {
                Ok(it) => it.collect(),
                Err(e) => return fail(e),
            };
            let n = code.length();
            let total = specktral::krawtchouk::binomial(n, t)
                * num::BigUint::from(code.q().get()).pow((n - t) as u32);
            let hit = match count_intersecting_faces(&words, t) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            let score = match covering_score(&words, t) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let report = json!({
                "command": "faces count",
                "t": t,
                "total_faces": total.to_string(),
                "intersecting": hit.to_string(),
                "score": score.to_string(),
            });
            emit(
                format,
                &report,
                &["t", "total_faces", "intersecting", "score"],
                &[vec![
                    t.to_string(),
                    total.to_string(),
                    hit.to_string(),
                    score.to_string(),
                ]],
            );
            0
        }
        FacesCmd::Dichotomy { code, free } => {
            let code = match load_code(&code) {
                Ok(c) => c,
                Err(e) => return e,
            };
            let n = code.length();
            let q = code.q();
            let free_sets: Vec<BTreeSet<usize>> = match &free {
                Some(spec) => {
                    let mut set = BTreeSet::new();
                    for tok in spec.split(',').filter(|t| !t.is_empty()) {
                        match tok.trim().parse::<usize>() {
                            Ok(p) if p < n => {
                                set.insert(p);
                            }
                            _ => {
                                eprintln!("error: invalid free position '{tok}'");
                                return EXIT_USAGE;
                            }
                        }
                    }
                    vec![set]
                }
                None => {
                    // Every free set of every dimension.
                    let mut sets = Vec::new();
                    for mask in 0u64..(1 << n) {
                        sets.push((0..n).filter(|&p| mask >> p & 1 == 1).collect());
                    }
                    sets
                }
            };
            let mut items = Vec::new();
            let mut rows = Vec::new();
            let mut all_pass = true;
            for set in &free_sets {
                let fixed: Vec<(usize, u64)> = (0..n)
                    .filter(|p| !set.contains(p))
                    .map(|p| (p, 0))
                    .collect();
                let free_list: Vec<usize> = set.iter().copied().collect();
                let face = match Face::from_parts(q, n, &free_list, &fixed) {
                    Ok(f) => f,
                    Err(e) => return fail(e),
                };
                let rep = match check_translate_dichotomy(&code, &face) {
                    Ok(r) => r,
                    Err(e) => return fail(e),
                };
                all_pass &= rep.pass;
                if free.is_some() {
                    items.push(json!({
                        "free": free_list,
                        "t": rep.t,
                        "translates": rep.translates,
                        "occupied": rep.occupied,
                        "count": rep.common_count.to_string(),
                        "s": rep.s,
                        "pass": rep.pass,
                    }));
                    rows.push(vec![
                        format!("\"{:?}\"", free_list),
                        rep.t.to_string(),
                        rep.common_count.to_string(),
                        rep.s.to_string(),
                        rep.pass.to_string(),
                    ]);
                }
            }
            let mut report = json!({
                "command": "faces dichotomy",
                "code": code.brief(),
                "sets_checked": free_sets.len(),
                "pass": all_pass,
            });
            if !items.is_empty() {
                report["items"] = json!(items);
            } else {
                rows.push(vec![
                    "(all)".to_string(),
                    free_sets.len().to_string(),
                    String::new(),
                    String::new(),
                    all_pass.to_string(),
                ]);
            }
            emit(
                format,
                &report,
                &["free", "t_or_sets", "count", "s", "pass"],
                &rows,
            );
            if all_pass {
                0
            } else {
                EXIT_VERIFICATION_FAILED
            }
        }
    }
}

fn cmd_krawtchouk(format: Format, n: usize, q: u64) -> i32 {
    let mut rows_json = Vec::new();
    let mut rows_csv = Vec::new();
    for m in 0..=n {
        let row = match krawtchouk_row_from_gf(m, n, q) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        let values: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        rows_json.push(json!({"m": m, "values": values}));
        let mut csv_row = vec![m.to_string()];
        csv_row.extend(values);
        rows_csv.push(csv_row);
    }
    let report = json!({
        "command": "krawtchouk",
        "q": q,
        "n": n,
        "rows": rows_json,
    });
    let mut headers: Vec<String> = vec!["m".to_string()];
    headers.extend((0..=n).map(|k| format!("P_{k}")));
    let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
    emit(format, &report, &header_refs, &rows_csv);
    0
}
