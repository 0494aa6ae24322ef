//! Command-line front end. Exit codes: 0 for success or an affirmative
//! answer, 1 for a negative mathematical result (not prime, empty solution
//! set, figure not Diophantine), 2 for usage, parse, or precondition errors.
//! Mathematical output goes to stdout, diagnostics to stderr.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gaussfig::census;
use gaussfig::figures::{
    cathetus_fan, classify_triangle, complete_triangle, completion_line, erdos_extend,
    type4_construct, Figure, LatticePoint,
};
use gaussfig::gp::{gp_prime_from_rational_prime, gp_stream, is_gp, is_gp_prime, GpWitness};
use gaussfig::primes::{classify, factorize, sum_two_squares};
use gaussfig::radicals::{radical_display_params, square_radical};
use gaussfig::ring::{gcd, gcd3};
use gaussfig::triples::{
    enumerate_pythagorean_triples, fermat_quartic_search, gen_primitive_triple,
    norm_sum_identity_check, GeneratorPair, TripleZi,
};
use gaussfig::GaussInt;

#[derive(Parser)]
#[command(
    name = "gaussfig",
    version,
    about = "Gaussian integers, Pythagorean triples, and Diophantine figures"
)]
struct Cli {
    /// Output format for mathematical results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Gaussian-integer arithmetic, primes, and square radicals.
    #[command(subcommand)]
    Gauss(GaussCmd),
    /// Gauss-Pythagorean integers.
    #[command(subcommand)]
    Gp(GpCmd),
    /// Pythagorean triples over the Gaussian integers.
    #[command(subcommand)]
    Triple(TripleCmd),
    /// Diophantine figures on the lattice.
    #[command(subcommand)]
    Figure(FigureCmd),
    /// Counting functions over rational Pythagorean triples.
    #[command(subcommand)]
    Census(CensusCmd),
}

#[derive(Subcommand)]
enum GaussCmd {
    /// Norm re^2 + im^2.
    Norm {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// Parity and the residue modulo 1+i.
    Parity {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// Greatest common divisor of two or three elements, in canonical form.
    Gcd {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        a: GaussInt,
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        b: GaussInt,
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        c: Option<GaussInt>,
    },
    /// Euclidean quotient and remainder with 2 norm(r) <= norm(b).
    Divmod {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        a: GaussInt,
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        b: GaussInt,
    },
    /// Prime classification: zero, unit, ramified, inert, split, composite.
    Classify {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// Factorization into canonical Gaussian primes.
    Factor {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// Solutions of x^2 = z, with the solvability parameters.
    Sqrt {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// The four associates and the canonical representative.
    Assoc {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// Decompose a rational prime p = 1 (mod 4) as odd^2 + even^2.
    Sum2sq { p: u64 },
}

#[derive(Subcommand)]
enum GpCmd {
    /// Membership test with the full witness.
    Check {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// Primality inside the Gauss-Pythagorean semigroup.
    Prime {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        z: GaussInt,
    },
    /// The canonical GP-prime built over a rational prime p = 1 (mod 4).
    Family { p: u64 },
    /// All Gauss-Pythagorean elements up to a norm bound.
    List {
        #[arg(long, default_value_t = 10_000)]
        norm_bound: i128,
    },
}

#[derive(Subcommand)]
enum TripleCmd {
    /// Generate a primitive Pythagorean triple from a coprime mixed-parity pair.
    Gen {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        lambda: GaussInt,
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        mu: GaussInt,
    },
    /// Test a triple: Pythagorean, primitive, and the gcd of the norms.
    Check {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        alpha: GaussInt,
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        beta: GaussInt,
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        gamma: GaussInt,
    },
    /// Enumerate Pythagorean triples up to a component norm bound.
    Enumerate {
        #[arg(long, default_value_t = 200)]
        norm_bound: i128,
        /// Keep only triples whose components share no non-unit divisor.
        #[arg(long)]
        primitive_only: bool,
    },
    /// Search the coordinate box for solutions of x^4 + y^4 = z^4.
    Fermat4 {
        #[arg(long, default_value_t = 6)]
        coord_bound: i128,
    },
    /// Check the parallelogram norm identity for a pair of elements.
    Identity {
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        kappa: GaussInt,
        #[arg(value_parser = parse_gauss, allow_hyphen_values = true)]
        tau: GaussInt,
    },
}

#[derive(Subcommand)]
enum FigureCmd {
    /// Test whether all pairwise vertex distances are integers.
    Check { file: String },
    /// Length of a closed vertex path; always even for Diophantine figures.
    Path {
        file: String,
        #[arg(num_args = 1.., required = true)]
        indices: Vec<usize>,
    },
    /// Classify a three-vertex figure by its bounding-box signature.
    Classify { file: String },
    /// Build a type-4 triangle from four integer parameters.
    Type4 {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
        #[arg(allow_hyphen_values = true)]
        c: i64,
        #[arg(allow_hyphen_values = true)]
        d: i64,
    },
    /// Third vertices X with |AX| = b, |BX| = a for A at the origin.
    Complete {
        #[arg(allow_hyphen_values = true)]
        bx: i64,
        #[arg(allow_hyphen_values = true)]
        by: i64,
        a: i64,
        b: i64,
        c: i64,
    },
    /// Lattice points at integer distance from every vertex, near the figure.
    Extend {
        file: String,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(i64).range(1..))]
        radius: i64,
    },
    /// The fan of all Pythagorean triangles over a common cathetus.
    Fan {
        #[arg(value_parser = clap::value_parser!(i64).range(1..=1 << 31))]
        n: i64,
    },
}

#[derive(Subcommand)]
enum CensusCmd {
    /// Number of Pythagorean triangles with leg n.
    Kappa {
        n: u64,
        /// Count by scanning factor pairs instead of the divisor formula.
        #[arg(long)]
        brute: bool,
    },
    /// Number of primitive Pythagorean triples with leg d.
    Eta {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
    },
    /// Number of divisors of n.
    Delta {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Number of Pythagorean triangles with hypotenuse l.
    Chi {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        l: u64,
        /// Count by scanning pairs instead of the factorization formula.
        #[arg(long)]
        brute: bool,
    },
    /// Census rows and summary for a whole range of n.
    Range { n_from: u64, n_to: u64 },
}

fn parse_gauss(s: &str) -> Result<GaussInt, String> {
    s.parse::<GaussInt>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = if cli.json { Format::Json } else { cli.format };
    if format == Format::Csv && !matches!(cli.command, Command::Census(CensusCmd::Range { .. })) {
        eprintln!("error: csv output is only available for `census range`");
        return ExitCode::from(2);
    }
    match run(cli.command, format) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

const OK: ExitCode = ExitCode::SUCCESS;
const NEGATIVE: ExitCode = ExitCode::FAILURE;

fn run(command: Command, fmt: Format) -> Result<ExitCode, String> {
    match command {
        Command::Gauss(cmd) => run_gauss(cmd, fmt),
        Command::Gp(cmd) => run_gp(cmd, fmt),
        Command::Triple(cmd) => run_triple(cmd, fmt),
        Command::Figure(cmd) => run_figure(cmd, fmt),
        Command::Census(cmd) => run_census(cmd, fmt),
    }
}

fn emit(fmt: Format, plain: &str, json: Value) {
    match fmt {
        Format::Plain => println!("{plain}"),
        Format::Json => println!("{json}"),
        Format::Csv => unreachable!("csv rejected before dispatch"),
    }
}

/// JSON value for an integer that may not fit the native JSON number range.
fn big(n: i128) -> Value {
    match i64::try_from(n) {
        Ok(v) => v.into(),
        Err(_) => n.to_string().into(),
    }
}

fn gauss_json(z: GaussInt) -> Value {
    Value::String(z.to_string())
}

fn point_json(p: LatticePoint) -> Value {
    json!([p.x, p.y])
}

fn run_gauss(cmd: GaussCmd, fmt: Format) -> Result<ExitCode, String> {
    match cmd {
        GaussCmd::Norm { z } => {
            emit(
                fmt,
                &z.norm().to_string(),
                json!({"z": gauss_json(z), "norm": big(z.norm())}),
            );
            Ok(OK)
        }
        GaussCmd::Parity { z } => {
            let parity = z.parity().to_string();
            let residue = z.residue_mod_one_plus_i();
            emit(
                fmt,
                &format!("{parity}, residue {residue}"),
                json!({"z": gauss_json(z), "parity": parity, "residue": residue}),
            );
            Ok(OK)
        }
        GaussCmd::Gcd { a, b, c } => {
            let (g, args) = match c {
                None => (gcd(a, b), vec![a, b]),
                Some(c) => (gcd3(a, b, c), vec![a, b, c]),
            };
            let g = g.map_err(|e| e.to_string())?;
            emit(
                fmt,
                &g.to_string(),
                json!({
                    "args": args.iter().map(|&x| gauss_json(x)).collect::<Vec<_>>(),
                    "gcd": gauss_json(g),
                }),
            );
            Ok(OK)
        }
        GaussCmd::Divmod { a, b } => {
            let (q, r) = a.divmod(b).map_err(|e| e.to_string())?;
            emit(
                fmt,
                &format!("q = {q}\nr = {r}"),
                json!({"a": gauss_json(a), "b": gauss_json(b), "q": gauss_json(q), "r": gauss_json(r)}),
            );
            Ok(OK)
        }
        GaussCmd::Classify { z } => {
            let class = classify(z);
            emit(
                fmt,
                &class.to_string(),
                json!({"z": gauss_json(z), "class": class.to_string(), "prime": class.is_prime()}),
            );
            Ok(if class.is_prime() { OK } else { NEGATIVE })
        }
        GaussCmd::Factor { z } => {
            let f = factorize(z).map_err(|e| e.to_string())?;
            let mut plain = f.unit.to_string();
            for &(p, e) in &f.factors {
                let shown = if p.re != 0 && p.im != 0 {
                    format!("({p})")
                } else {
                    p.to_string()
                };
                if e == 1 {
                    write!(plain, " * {shown}").unwrap();
                } else {
                    write!(plain, " * {shown}^{e}").unwrap();
                }
            }
            let factors: Vec<Value> = f
                .factors
                .iter()
                .map(|&(p, e)| json!({"prime": gauss_json(p), "exponent": e}))
                .collect();
            emit(
                fmt,
                &plain,
                json!({"z": gauss_json(z), "unit": gauss_json(f.unit), "factors": factors}),
            );
            Ok(OK)
        }
        GaussCmd::Sqrt { z } => {
            let r = square_radical(z);
            let params = radical_display_params(z.re, z.im).ok();
            let plain = if r.solutions.is_empty() {
                "no solutions".to_string()
            } else {
                r.solutions
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let json_params = params.map(|p| {
                json!({
                    "n_plus_l": big(p.n_plus_l),
                    "l_minus_n": big(p.l_minus_n),
                    "n_plus_l_is_square": p.n_plus_l_is_square,
                    "l_minus_n_is_square": p.l_minus_n_is_square,
                    "hypotenuse": big(p.hypotenuse),
                })
            });
            let empty = r.solutions.is_empty();
            emit(
                fmt,
                &plain,
                json!({
                    "z": gauss_json(z),
                    "solutions": r.solutions.iter().map(|&s| gauss_json(s)).collect::<Vec<_>>(),
                    "via_formula": r.via_formula,
                    "hypotenuse": r.hypotenuse.map(big),
                    "params": json_params,
                }),
            );
            Ok(if empty { NEGATIVE } else { OK })
        }
        GaussCmd::Assoc { z } => {
            let all = z.associates();
            let c = z.canonical();
            let plain = format!(
                "{}\ncanonical {} (unit {})",
                all.iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join("\n"),
                c.canonical,
                c.unit
            );
            emit(
                fmt,
                &plain,
                json!({
                    "z": gauss_json(z),
                    "associates": all.iter().map(|&a| gauss_json(a)).collect::<Vec<_>>(),
                    "canonical": gauss_json(c.canonical),
                    "unit": gauss_json(c.unit),
                }),
            );
            Ok(OK)
        }
        GaussCmd::Sum2sq { p } => {
            let (a, b) = sum_two_squares(p).map_err(|e| e.to_string())?;
            emit(
                fmt,
                &format!("{a} {b}"),
                json!({"p": p, "odd": a, "even": b}),
            );
            Ok(OK)
        }
    }
}

fn witness_plain(w: &GpWitness) -> String {
    let primitive = if w.primitive { "primitive" } else { "imprimitive" };
    let tau = match w.tau {
        Some(t) => format!("tau {t}"),
        None => "no tau".to_string(),
    };
    format!("{} z {} {} {}", w.element, w.z, primitive, tau)
}

fn witness_json(w: &GpWitness) -> Value {
    json!({
        "element": gauss_json(w.element),
        "z": big(w.z),
        "primitive": w.primitive,
        "tau": w.tau.map(gauss_json),
    })
}

fn run_gp(cmd: GpCmd, fmt: Format) -> Result<ExitCode, String> {
    match cmd {
        GpCmd::Check { z } => match is_gp(z) {
            Some(w) => {
                emit(
                    fmt,
                    &format!("gauss-pythagorean: {}", witness_plain(&w)),
                    json!({"z": gauss_json(z), "gp": true, "witness": witness_json(&w)}),
                );
                Ok(OK)
            }
            None => {
                emit(
                    fmt,
                    "not gauss-pythagorean",
                    json!({"z": gauss_json(z), "gp": false, "witness": null}),
                );
                Ok(NEGATIVE)
            }
        },
        GpCmd::Prime { z } => {
            let prime = is_gp_prime(z).map_err(|e| e.to_string())?;
            emit(
                fmt,
                if prime { "gp-prime" } else { "not gp-prime" },
                json!({"z": gauss_json(z), "gp_prime": prime}),
            );
            Ok(if prime { OK } else { NEGATIVE })
        }
        GpCmd::Family { p } => {
            let e = gp_prime_from_rational_prime(p).map_err(|e| e.to_string())?;
            emit(fmt, &e.to_string(), json!({"p": p, "element": gauss_json(e)}));
            Ok(OK)
        }
        GpCmd::List { norm_bound } => {
            let stream = gp_stream(norm_bound);
            let plain = stream
                .iter()
                .map(witness_plain)
                .collect::<Vec<_>>()
                .join("\n");
            let empty = stream.is_empty();
            emit(
                fmt,
                if empty { "none" } else { &plain },
                json!({
                    "norm_bound": big(norm_bound),
                    "witnesses": stream.iter().map(witness_json).collect::<Vec<_>>(),
                }),
            );
            Ok(if empty { NEGATIVE } else { OK })
        }
    }
}

fn triple_json(t: &TripleZi) -> Value {
    json!({
        "alpha": gauss_json(t.alpha),
        "beta": gauss_json(t.beta),
        "gamma": gauss_json(t.gamma),
    })
}

fn run_triple(cmd: TripleCmd, fmt: Format) -> Result<ExitCode, String> {
    match cmd {
        TripleCmd::Gen { lambda, mu } => {
            let pair = GeneratorPair::new(lambda, mu).map_err(|e| e.to_string())?;
            let t = gen_primitive_triple(&pair);
            emit(
                fmt,
                &t.to_string(),
                json!({
                    "lambda": gauss_json(lambda),
                    "mu": gauss_json(mu),
                    "triple": triple_json(&t),
                }),
            );
            Ok(OK)
        }
        TripleCmd::Check { alpha, beta, gamma } => {
            let t = TripleZi::new(alpha, beta, gamma);
            let pythagorean = t.is_pythagorean();
            let (norm_gcd, primitive) = t.norm_primitivity();
            let plain = format!(
                "{}\nprimitive: {}\nnorm gcd: {}",
                if pythagorean {
                    "pythagorean"
                } else {
                    "not pythagorean"
                },
                primitive,
                norm_gcd
            );
            emit(
                fmt,
                &plain,
                json!({
                    "triple": triple_json(&t),
                    "pythagorean": pythagorean,
                    "primitive": primitive,
                    "norm_gcd": big(norm_gcd),
                }),
            );
            Ok(if pythagorean { OK } else { NEGATIVE })
        }
        TripleCmd::Enumerate {
            norm_bound,
            primitive_only,
        } => {
            if norm_bound < 0 {
                return Err("norm bound must be non-negative".to_string());
            }
            let triples = enumerate_pythagorean_triples(norm_bound, primitive_only);
            let plain = triples
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let empty = triples.is_empty();
            emit(
                fmt,
                if empty { "none" } else { &plain },
                json!({
                    "norm_bound": big(norm_bound),
                    "primitive_only": primitive_only,
                    "triples": triples.iter().map(triple_json).collect::<Vec<_>>(),
                }),
            );
            Ok(if empty { NEGATIVE } else { OK })
        }
        TripleCmd::Fermat4 { coord_bound } => {
            if coord_bound < 1 {
                return Err("coordinate bound must be positive".to_string());
            }
            let sols = fermat_quartic_search(coord_bound);
            let plain = if sols.is_empty() {
                format!("no solutions with coordinates in [-{coord_bound}, {coord_bound}]")
            } else {
                sols.iter()
                    .map(|(x, y, z)| format!("({x}, {y}, {z})"))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let empty = sols.is_empty();
            emit(
                fmt,
                &plain,
                json!({
                    "coord_bound": big(coord_bound),
                    "solutions": sols
                        .iter()
                        .map(|&(x, y, z)| json!({
                            "x": gauss_json(x),
                            "y": gauss_json(y),
                            "z": gauss_json(z),
                        }))
                        .collect::<Vec<_>>(),
                }),
            );
            Ok(if empty { NEGATIVE } else { OK })
        }
        TripleCmd::Identity { kappa, tau } => {
            let lhs = (kappa + tau).norm() + (kappa - tau).norm();
            let rhs = 2 * kappa.norm() + 2 * tau.norm();
            let holds = norm_sum_identity_check(kappa, tau);
            emit(
                fmt,
                &format!("lhs = {lhs}\nrhs = {rhs}\n{}", if holds { "holds" } else { "fails" }),
                json!({
                    "kappa": gauss_json(kappa),
                    "tau": gauss_json(tau),
                    "lhs": big(lhs),
                    "rhs": big(rhs),
                    "holds": holds,
                }),
            );
            Ok(if holds { OK } else { NEGATIVE })
        }
    }
}

fn load_figure(path: &str) -> Result<Figure, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    Figure::from_json(&text).map_err(|e| format!("{path}: {e}"))
}

fn run_figure(cmd: FigureCmd, fmt: Format) -> Result<ExitCode, String> {
    match cmd {
        FigureCmd::Check { file } => {
            let figure = load_figure(&file)?;
            let check = figure.is_diophantine();
            let plain = match check.violation {
                None => "diophantine".to_string(),
                Some((p, q)) => format!("not diophantine: |{p} - {q}| is not an integer"),
            };
            emit(
                fmt,
                &plain,
                json!({
                    "diophantine": check.diophantine,
                    "violation": check.violation.map(|(p, q)| json!([point_json(p), point_json(q)])),
                }),
            );
            Ok(if check.diophantine { OK } else { NEGATIVE })
        }
        FigureCmd::Path { file, indices } => {
            let figure = load_figure(&file)?;
            let length = figure
                .closed_path_length(&indices)
                .map_err(|e| e.to_string())?;
            emit(fmt, &length.to_string(), json!({"length": length}));
            Ok(OK)
        }
        FigureCmd::Classify { file } => {
            let figure = load_figure(&file)?;
            let v = figure.vertices();
            if v.len() != 3 {
                return Err(format!("classification needs exactly 3 vertices, got {}", v.len()));
            }
            let class = classify_triangle(v[0], v[1], v[2]).map_err(|e| e.to_string())?;
            let mut plain = class.class.to_string();
            for comp in &class.complements {
                write!(
                    plain,
                    "\ncomplement legs {} {}, hypotenuse {}",
                    comp.legs.0, comp.legs.1, comp.hypotenuse
                )
                .unwrap();
            }
            write!(plain, "\nright-angled: {}", class.right_angled).unwrap();
            emit(
                fmt,
                &plain,
                json!({
                    "class": class.class.to_string(),
                    "right_angled": class.right_angled,
                    "complements": class
                        .complements
                        .iter()
                        .map(|c| json!({
                            "legs": [c.legs.0, c.legs.1],
                            "hypotenuse": c.hypotenuse,
                            "vertices": c.vertices.iter().map(|&p| point_json(p)).collect::<Vec<_>>(),
                        }))
                        .collect::<Vec<_>>(),
                }),
            );
            Ok(OK)
        }
        FigureCmd::Type4 { a, b, c, d } => {
            let t = type4_construct(a, b, c, d).map_err(|e| e.to_string())?;
            let plain = format!(
                "vertices {} {} {}\nsides {} {} {}",
                t.vertices[0], t.vertices[1], t.vertices[2], t.sides[0], t.sides[1], t.sides[2]
            );
            emit(
                fmt,
                &plain,
                json!({
                    "vertices": t.vertices.iter().map(|&p| point_json(p)).collect::<Vec<_>>(),
                    "sides": t.sides,
                }),
            );
            Ok(OK)
        }
        FigureCmd::Complete { bx, by, a, b, c } => {
            let b_vertex = LatticePoint::new(bx, by);
            let line = completion_line(b_vertex, a, b, c).map_err(|e| e.to_string())?;
            let points = complete_triangle(b_vertex, a, b, c).map_err(|e| e.to_string())?;
            let mut plain = match (line.base, line.direction) {
                (Some(base), Some(dir)) => {
                    format!("line: base {base}, direction ({}, {})", dir.0, dir.1)
                }
                _ => "line: unsolvable".to_string(),
            };
            for p in &points {
                write!(plain, "\n{p}").unwrap();
            }
            if points.is_empty() {
                plain.push_str("\nno completion points");
            }
            let empty = points.is_empty();
            emit(
                fmt,
                &plain,
                json!({
                    "solvable": line.solvable,
                    "base": line.base.map(point_json),
                    "direction": line.direction.map(|(dx, dy)| json!([dx, dy])),
                    "points": points.iter().map(|&p| point_json(p)).collect::<Vec<_>>(),
                }),
            );
            Ok(if empty { NEGATIVE } else { OK })
        }
        FigureCmd::Extend { file, radius } => {
            let figure = load_figure(&file)?;
            let check = figure.is_diophantine();
            if let Some((p, q)) = check.violation {
                return Err(format!("figure is not diophantine: |{p} - {q}| is not an integer"));
            }
            let points = erdos_extend(&figure, radius);
            let plain = if points.is_empty() {
                format!("no extension within radius {radius}")
            } else {
                points
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let empty = points.is_empty();
            emit(
                fmt,
                &plain,
                json!({
                    "radius": radius,
                    "points": points.iter().map(|&p| point_json(p)).collect::<Vec<_>>(),
                }),
            );
            Ok(if empty { NEGATIVE } else { OK })
        }
        FigureCmd::Fan { n } => {
            let figure = cathetus_fan(n);
            let text = figure.to_json();
            match fmt {
                Format::Plain | Format::Json => println!("{text}"),
                Format::Csv => unreachable!("csv rejected before dispatch"),
            }
            Ok(OK)
        }
    }
}

fn row_json(row: &census::CensusRow) -> Value {
    json!({
        "n": row.n,
        "kappa": row.kappa,
        "eta_sum": row.eta_sum,
        "delta": row.delta,
        "delta_sq": row.delta_sq,
        "ratio_half": row.ratio_half,
        "prachar_bound": if row.prachar_bound.is_finite() {
            Value::from(row.prachar_bound)
        } else {
            Value::Null
        },
    })
}

fn run_census(cmd: CensusCmd, fmt: Format) -> Result<ExitCode, String> {
    match cmd {
        CensusCmd::Kappa { n, brute } => {
            let kappa = if brute || n == 0 {
                census::kappa_bruteforce(n)
            } else {
                census::kappa_via_formula(n)
            };
            let method = if brute || n == 0 { "brute" } else { "formula" };
            emit(
                fmt,
                &kappa.to_string(),
                json!({"n": n, "kappa": kappa, "method": method}),
            );
            Ok(OK)
        }
        CensusCmd::Eta { d } => {
            let eta = census::eta(d);
            emit(fmt, &eta.to_string(), json!({"d": d, "eta": eta}));
            Ok(OK)
        }
        CensusCmd::Delta { n } => {
            let delta = census::delta(n);
            emit(fmt, &delta.to_string(), json!({"n": n, "delta": delta}));
            Ok(OK)
        }
        CensusCmd::Chi { l, brute } => {
            let chi = if brute {
                census::chi_bruteforce(l)
            } else {
                census::chi(l)
            };
            let method = if brute { "brute" } else { "formula" };
            emit(
                fmt,
                &chi.to_string(),
                json!({"l": l, "chi": chi, "method": method}),
            );
            Ok(OK)
        }
        CensusCmd::Range { n_from, n_to } => {
            let (rows, summary) = census::census_range(n_from, n_to).map_err(|e| e.to_string())?;
            match fmt {
                Format::Plain | Format::Csv => {
                    print!("{}", census::census_csv(&rows));
                    if fmt == Format::Plain {
                        eprintln!(
                            "max kappa/sqrt(n): {:.6} at n = {}",
                            summary.max_ratio_half, summary.max_ratio_half_at
                        );
                        eprintln!(
                            "max kappa/n: {:.6} at n = {}",
                            summary.max_kappa_over_n, summary.max_kappa_over_n_at
                        );
                        eprintln!("record in top decade: {}", summary.record_in_top_decade);
                    }
                }
                Format::Json => {
                    let value = json!({
                        "rows": rows.iter().map(row_json).collect::<Vec<_>>(),
                        "summary": {
                            "max_ratio_half": summary.max_ratio_half,
                            "max_ratio_half_at": summary.max_ratio_half_at,
                            "max_kappa_over_n": summary.max_kappa_over_n,
                            "max_kappa_over_n_at": summary.max_kappa_over_n_at,
                            "record_in_top_decade": summary.record_in_top_decade,
                            "decades": summary
                                .decades
                                .iter()
                                .map(|d| json!({
                                    "lo": d.lo,
                                    "hi": d.hi,
                                    "max_ratio_half": d.max_ratio_half,
                                    "max_kappa_over_n": d.max_kappa_over_n,
                                }))
                                .collect::<Vec<_>>(),
                        },
                    });
                    println!("{value}");
                }
            }
            Ok(OK)
        }
    }
}
