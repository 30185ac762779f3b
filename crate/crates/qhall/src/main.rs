//! Command-line frontend. Every subcommand is a thin adapter over the
//! library: parse arguments into domain objects, call one library function,
//! render the result. Exit codes: 0 success, 1 verification failure, 2
//! usage or parse error.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use qhall::partition::Partition;
use qhall::qpoly::IntPolynomial;
use qhall::ribbon;
use qhall::rigged::{self, RiggedConfiguration};
use qhall::symfunc::{self, Basis, SymTables};
use qhall::tuples::{self, Ssyt, TupleTableau};
use qhall::verify;
use qhall::{Error, Result};

#[derive(Parser)]
#[command(
    name = "qhall",
    about = "Exact combinatorics of ribbon tableaux, rigged configurations and \
             Hall-Littlewood functions at roots of unity",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Cospin generating polynomial of the k-ribbon tableaux of a shape and weight.
    Cospin {
        /// Shape as a partition literal, e.g. 8,7,6,5,1
        #[arg(long)]
        shape: String,
        /// Weight composition, e.g. 3,3,2,1
        #[arg(long)]
        weight: String,
        /// Ribbon size
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Inversion generating polynomial of tuples of semistandard tableaux.
    InvPoly {
        /// Component shapes as a JSON list of partitions, e.g. [[2],[3,2],[2]]
        #[arg(long)]
        shapes: String,
        #[arg(long)]
        weight: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Hall-Littlewood expansion on the monomial or Schur basis.
    Hl {
        /// Index partition, e.g. 2,2,2
        #[arg(long)]
        lambda: String,
        /// Target basis: m or s
        #[arg(long, default_value = "m")]
        basis: String,
        /// Coefficient normalization: tilde (cocharge) or prime (charge)
        #[arg(long, default_value = "tilde")]
        normalization: String,
        /// Degree budget for the transition tables
        #[arg(long, default_value_t = 8)]
        budget: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Rigged configuration of a tuple of weakly increasing single rows.
    Theta {
        /// Tuple as a JSON list of rows, e.g. [[1,4],[1,2],[1,2,3,3]]
        #[arg(long)]
        tuple: String,
        /// Optional weight cross-check, e.g. 3,2,2,1
        #[arg(long)]
        weight: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Ribbon tableau / tuple correspondence, in either direction.
    Psi {
        /// Forward: shape of the ribbon tableaux
        #[arg(long, conflicts_with = "inverse")]
        shape: Option<String>,
        /// Weight composition (forward direction)
        #[arg(long)]
        weight: Option<String>,
        /// Ribbon size
        #[arg(long)]
        k: usize,
        /// Forward: only print the tableau with this index
        #[arg(long)]
        index: Option<usize>,
        /// Map a tuple back to a ribbon tableau
        #[arg(long)]
        inverse: bool,
        /// Inverse: tuple as a JSON list of components, each a list of rows
        #[arg(long, requires = "inverse")]
        tuple: Option<String>,
        /// Inverse: the k-core to rebuild over (default empty)
        #[arg(long, default_value = "")]
        core: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Diagonal classes of tuples of single rows, with restricted polynomials.
    Classes {
        /// Component shapes as a JSON list of partitions, e.g. [[2],[2],[4]]
        #[arg(long)]
        shapes: String,
        #[arg(long)]
        weight: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Fermionic polynomials: full sum over configurations, or one shape.
    Fermionic {
        /// Partial-weight partition (first context index), e.g. 3,2,2,1
        #[arg(long)]
        lambda: String,
        /// Conjugate-target partition (second context index), e.g. 4,2,2
        #[arg(long)]
        mu: String,
        /// Restrict to one configuration: JSON list of shapes
        #[arg(long)]
        shapes: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Re-derive the verification suites; exits 1 on any failure.
    Verify {
        /// One of: goldens, rectangular, column, transport, theta, fermionic,
        /// classes, recoding, dominoes, all
        #[arg(long)]
        suite: String,
        /// Row length for the rectangular/column instances
        #[arg(long)]
        n: Option<usize>,
        /// Ribbon size / root order for the rectangular/column instances
        #[arg(long)]
        k: Option<usize>,
        /// Size cap for the sweep suites
        #[arg(long)]
        budget: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_weight(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad weight entry {tok:?}: {e}")))
        })
        .collect()
}

fn parse_shapes(s: &str) -> Result<Vec<Partition>> {
    let raw: Vec<Vec<usize>> =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad shape list: {e}")))?;
    raw.into_iter().map(Partition::new).collect()
}

fn parse_row_tuple(s: &str) -> Result<TupleTableau> {
    let rows: Vec<Vec<usize>> =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad tuple: {e}")))?;
    let components = rows
        .into_iter()
        .map(|row| Ssyt::new(if row.is_empty() { vec![] } else { vec![row] }))
        .collect::<Result<Vec<_>>>()?;
    TupleTableau::new(components)
}

fn parse_nested_tuple(s: &str) -> Result<TupleTableau> {
    let comps: Vec<Vec<Vec<usize>>> =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad tuple: {e}")))?;
    let components = comps.into_iter().map(Ssyt::new).collect::<Result<Vec<_>>>()?;
    TupleTableau::new(components)
}

fn poly_json(p: &IntPolynomial) -> Value {
    let map: serde_json::Map<String, Value> = p
        .to_exponent_map()
        .into_iter()
        .map(|(e, c)| {
            let v = match c.to_i64() {
                Some(small) => json!(small),
                None => json!(c.to_string()),
            };
            (e.to_string(), v)
        })
        .collect();
    Value::Object(map)
}

fn rc_json(rc: &RiggedConfiguration) -> Value {
    json!({
        "shapes": rc.config().shapes(),
        "riggings": rc.riggings(),
        "cocharge": rc.cocharge(),
        "vacancies": rc.config().vacancy_data(),
    })
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Cospin { shape, weight, k, out } => {
            let shape = Partition::from_str(&shape)?;
            let weight = parse_weight(&weight)?;
            let poly = ribbon::cospin_polynomial(&shape, &weight, k)?;
            if out.json {
                println!(
                    "{}",
                    json!({"shape": shape, "weight": weight, "k": k, "polynomial": poly_json(&poly)})
                );
            } else {
                println!("{poly}");
            }
        }
        Command::InvPoly { shapes, weight, out } => {
            let shapes = parse_shapes(&shapes)?;
            let weight = parse_weight(&weight)?;
            let poly = tuples::inversion_polynomial(&shapes, &weight)?;
            if out.json {
                println!(
                    "{}",
                    json!({"shapes": shapes, "weight": weight, "polynomial": poly_json(&poly)})
                );
            } else {
                println!("{poly}");
            }
        }
        Command::Hl { lambda, basis, normalization, budget, out } => {
            let lambda = Partition::from_str(&lambda)?;
            let basis = Basis::from_str(&basis)?;
            let tables = SymTables::new(budget);
            let mut f = match basis {
                Basis::Monomial => tables.hl_monomial(&lambda)?,
                Basis::Schur => tables.hl_schur(&lambda)?,
                _ => {
                    return Err(Error::Parse(
                        "hl expansions are available on the m and s bases".into(),
                    ))
                }
            };
            match normalization.as_str() {
                "tilde" => {}
                "prime" => f = symfunc::charge_normalized(&f, symfunc::eta(&lambda)),
                other => return Err(Error::Parse(format!("unknown normalization {other:?}"))),
            }
            if out.json {
                let terms: Vec<Value> = f
                    .terms()
                    .map(|(mu, c)| json!({"partition": mu, "coeff": poly_json(c)}))
                    .collect();
                println!(
                    "{}",
                    json!({"basis": basis.tag(), "degree": f.degree(), "terms": terms})
                );
            } else {
                println!("{f}");
            }
        }
        Command::Theta { tuple, weight, out } => {
            let tuple = parse_row_tuple(&tuple)?;
            if let Some(w) = weight {
                let expected = parse_weight(&w)?;
                if tuple.weight() != expected {
                    return Err(Error::WeightMismatch {
                        expected: expected.iter().sum(),
                        got: tuple.weight().iter().sum(),
                    });
                }
            }
            let rc = rigged::theta(&tuple)?;
            if out.json {
                println!("{}", rc_json(&rc));
            } else {
                let shapes: Vec<String> =
                    rc.config().shapes().iter().map(|s| s.to_string()).collect();
                println!("shapes: {}", shapes.join(" "));
                println!("cocharge: {}", rc.cocharge());
                print!("{rc}");
            }
        }
        Command::Psi { shape, weight, k, index, inverse, tuple, core, out } => {
            if inverse {
                let tuple = parse_nested_tuple(tuple.as_deref().ok_or_else(|| {
                    Error::Parse("--inverse requires --tuple".into())
                })?)?;
                let core = Partition::from_str(&core)?;
                let t = ribbon::stanton_white_inverse(&tuple, &core, k)?;
                if out.json {
                    println!("{}", serde_json::to_string(&t).expect("serializable"));
                } else {
                    println!("shape: {}", t.outer());
                    for r in t.ribbons() {
                        let cells: Vec<String> =
                            r.cells().iter().map(|c| format!("({},{})", c.row, c.col)).collect();
                        println!("ribbon {}: {}", r.label, cells.join(" "));
                    }
                }
            } else {
                let shape = Partition::from_str(shape.as_deref().ok_or_else(|| {
                    Error::Parse("forward direction requires --shape".into())
                })?)?;
                let weight = parse_weight(weight.as_deref().ok_or_else(|| {
                    Error::Parse("forward direction requires --weight".into())
                })?)?;
                let class = ribbon::enumerate_ribbon_tableaux(&shape, &weight, k)?;
                let max = ribbon::max_twice_spin(&class);
                let shifts = shape.k_shifts(k);
                let selected: Vec<(usize, &ribbon::RibbonTableau)> = match index {
                    Some(i) => class
                        .get(i)
                        .map(|t| vec![(i, t)])
                        .ok_or_else(|| Error::Parse(format!("index {i} out of range")))?,
                    None => class.iter().enumerate().collect(),
                };
                let mut entries = Vec::new();
                for (i, t) in selected {
                    let image = ribbon::stanton_white(t);
                    let cospin = ribbon::cospin_from_max(t, max.expect("class is nonempty"));
                    let inv = tuples::inversions_with_shifts(&image, &shifts);
                    if out.json {
                        entries.push(json!({
                            "index": i,
                            "tableau": t,
                            "tuple": image.components(),
                            "cospin": cospin,
                            "inversions": inv,
                        }));
                    } else {
                        println!(
                            "{i}: cospin {cospin}, inversions {inv}, tuple {}",
                            serde_json::to_string(image.components()).expect("serializable")
                        );
                    }
                }
                if out.json {
                    println!("{}", json!({"count": class.len(), "tableaux": entries}));
                } else if index.is_none() {
                    println!("{} tableaux", class.len());
                }
            }
        }
        Command::Classes { shapes, weight, out } => {
            let shapes = parse_shapes(&shapes)?;
            let weight = parse_weight(&weight)?;
            let classes = tuples::diagonal_classes(&shapes, &weight)?;
            let mut entries = Vec::new();
            for class in &classes {
                let poly = tuples::restricted_inversion_polynomial(class);
                let diagonals: Vec<&[usize]> =
                    class.vector.diagonals().values().map(|v| v.as_slice()).collect();
                if out.json {
                    entries.push(json!({
                        "diagonals": diagonals,
                        "size": class.len(),
                        "polynomial": poly_json(&poly),
                    }));
                } else {
                    println!(
                        "d={} size={} poly={poly}",
                        serde_json::to_string(&diagonals).expect("serializable"),
                        class.len()
                    );
                }
            }
            if out.json {
                println!("{}", json!({"classes": entries}));
            }
        }
        Command::Fermionic { lambda, mu, shapes, out } => {
            let lambda = Partition::from_str(&lambda)?;
            let mu = Partition::from_str(&mu)?;
            match shapes {
                Some(s) => {
                    let shapes = parse_shapes(&s)?;
                    let config = rigged::Configuration::new(shapes, lambda, mu)?;
                    let poly = config.fermionic_restricted();
                    if out.json {
                        println!(
                            "{}",
                            json!({
                                "shapes": config.shapes(),
                                "alpha": config.alpha(),
                                "polynomial": poly_json(&poly),
                            })
                        );
                    } else {
                        println!("{poly}");
                    }
                }
                None => {
                    let poly = rigged::fermionic_polynomial(&lambda, &mu);
                    if out.json {
                        let shapes: Vec<Value> = rigged::enumerate_configurations(&lambda, &mu)
                            .iter()
                            .map(|c| {
                                json!({
                                    "shapes": c.shapes(),
                                    "restricted": poly_json(&c.fermionic_restricted()),
                                })
                            })
                            .collect();
                        println!(
                            "{}",
                            json!({"polynomial": poly_json(&poly), "configurations": shapes})
                        );
                    } else {
                        println!("{poly}");
                    }
                }
            }
        }
        Command::Verify { suite, n, k, budget } => {
            let reports = run_verify(&suite, n, k, budget)?;
            let mut ok = true;
            for report in &reports {
                ok &= report.ok;
                print!("{report}");
            }
            println!("{}", if ok { "OK" } else { "FAIL" });
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(
    suite: &str,
    n: Option<usize>,
    k: Option<usize>,
    budget: Option<usize>,
) -> Result<Vec<verify::VerifyReport>> {
    let reports = match suite {
        "goldens" => {
            let tables = SymTables::new(6);
            vec![
                verify::cospin_golden()?,
                verify::hl_monomial_golden(&tables)?,
                verify::hl_schur_golden(&tables)?,
                verify::root_of_unity_golden(&tables)?,
            ]
        }
        "rectangular" => match (n, k) {
            (Some(n), Some(k)) => {
                let tables = SymTables::new(n * k);
                vec![verify::verify_rectangular_theorem(n, k, &tables)?]
            }
            _ => {
                let cap = budget.unwrap_or(8);
                vec![verify::rectangular_suite(&SymTables::new(cap), cap)?]
            }
        },
        "column" => match (n, k) {
            (Some(n), Some(k)) => {
                let tables = SymTables::new(n * k);
                vec![verify::verify_column_case(n, k, &tables)?]
            }
            _ => {
                let tables = SymTables::new(8);
                vec![verify::column_suite(&tables, &[(1, 2), (2, 2), (1, 3)])?]
            }
        },
        "transport" => vec![verify::transport_suite(budget.unwrap_or(10), 3)?],
        "theta" => vec![verify::theta_transport_suite(budget.unwrap_or(8))?],
        "fermionic" => vec![verify::fermionic_suite()?],
        "classes" => vec![verify::diagonal_class_suite(budget.unwrap_or(8))?],
        "recoding" => vec![verify::matrix_recoding_suite(budget.unwrap_or(8))?],
        "dominoes" => vec![verify::domino_factorization_suite(budget.unwrap_or(10))?],
        "all" => verify::run_all(&SymTables::new(budget.unwrap_or(8)))?,
        other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
    };
    Ok(reports)
}
