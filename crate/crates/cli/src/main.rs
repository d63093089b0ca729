//! `cartanlab`: Cartan class, property suites, contractions and SL(2n)
//! contact checks from the command line. Every command prints a JSON report.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use cartanlab::catalog::{self, CatalogEntry};
use cartanlab::contraction::{contract, has_eq7_shape, is_in_model_family, Contraction, ContractionSpec};
use cartanlab::deformation::{extension_roundtrip, quadra_check, DeformationSpec};
use cartanlab::exterior::{cartan_class, Parity};
use cartanlab::io::{self, AlgebraFile};
use cartanlab::lie::{center, is_nilpotent, jacobi_check, lower_central_series};
use cartanlab::manifold::sl;
use cartanlab::sampling::{Sampler, DEFAULT_SEED, SEED_ENV};
use cartanlab::{DualForm, Error, LieAlgebra, Scalar};
use num_traits::Zero;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use report::{scalars, vector, Failure, Report};

const ID_HELP: &str = "Catalog ids: name[:key=value,...], list values as [v1,v2].
Names: heisenberg[:p=], abelian:n=, h3, solvable1, solvable_b:b=, sl2[:lambda=], so3,
diag_ii_a, diag_ii_b, diag_ii_c, nondiag_case1, nondiag_case2, nondiag_case4 (parameters default to 0),
filiform[:n=], filiform_contact[:p=,a=[..]], mu_c9:a=[a14,a26,a38],
frobenius[:p=,a=[..]], frobenius_base[:p=], frobenius_sample.
Rationals are written p/q. Indices in files and reports are 1-based.";

#[derive(Parser)]
#[command(name = "cartanlab", version, about = "Exact Lie algebra and contact-form computations", after_help = ID_HELP)]
struct Cli {
    /// Seed for randomized suites.
    #[arg(long, global = true, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Accept catalog parameters whose bracket fails the Jacobi identity.
    #[arg(long, global = true)]
    allow_nonjacobi: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// Algebra file (JSON).
    #[arg(long, value_name = "FILE")]
    algebra: Option<PathBuf>,
    /// Catalog id, e.g. heisenberg:p=2 or frobenius:p=2,a=[1].
    #[arg(long, value_name = "ID")]
    catalog: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan class of a left-invariant 1-form.
    Class {
        #[command(flatten)]
        source: Source,
        /// Coefficients in the dual basis; defaults to the catalog's distinguished form.
        #[arg(long, value_name = "C1,...,CN")]
        form: Option<String>,
    },
    /// Run a property suite on one algebra.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Random covectors for the sampled suites.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Limit of the bracket under X_i -> t^{e_i} X_i as t -> 0.
    Contract {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "E1,...,EN", allow_hyphen_values = true)]
        exponents: String,
        /// Change of basis applied first (matrix file, columns are the new basis).
        #[arg(long, value_name = "MATRIXFILE")]
        basis: Option<PathBuf>,
        /// Also write the limit algebra to this file.
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
    },
    /// Contact geometry of the 1-form on SL(2n).
    Sl {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        action: SlAction,
    },
    /// Write a catalog algebra as an algebra file.
    Export {
        #[arg(long, value_name = "ID")]
        catalog: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SlAction {
    /// Expand ω ∧ (dω)^q ∧ dΔ in top degree.
    #[arg(long)]
    identity: bool,
    /// Check ω(Z) = Δ and compare i(Z)dω with dΔ.
    #[arg(long)]
    reeb: bool,
    /// Pullback invariance under a rotation (matrix file).
    #[arg(long, value_name = "MATRIXFILE")]
    invariance: Option<PathBuf>,
    /// Evaluate the singular-set equations at a point of SL(2n) (matrix file).
    #[arg(long, value_name = "POINTFILE")]
    singular: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Jacobi,
    NilpotentParity,
    Center,
    Quadra,
    ExtensionRoundtrip,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::NilpotentParity => "nilpotent-parity",
            Suite::Center => "center",
            Suite::Quadra => "quadra",
            Suite::ExtensionRoundtrip => "extension-roundtrip",
        }
    }
}

struct Loaded {
    algebra: Arc<LieAlgebra>,
    entry: Option<CatalogEntry>,
}

fn read(path: &Path, report: &mut Report) -> Result<String, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    report.digest(text.as_bytes());
    Ok(text)
}

fn load(source: &Source, allow_nonjacobi: bool, report: &mut Report) -> Result<Loaded, Failure> {
    if let Some(path) = &source.algebra {
        let text = read(path, report)?;
        let g = io::parse_algebra(&text)?;
        return Ok(Loaded {
            algebra: Arc::new(g),
            entry: None,
        });
    }
    let id = source.catalog.as_deref().expect("clap enforces one source");
    report.digest(id.as_bytes());
    let entry = catalog::lookup_with(id, allow_nonjacobi)?;
    Ok(Loaded {
        algebra: entry.algebra.clone(),
        entry: Some(entry),
    })
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|e| Failure::Parse(format!("{what} entry {:?}: {e}", t.trim())))
        })
        .collect()
}

fn cmd_class(cli: &Cli, source: &Source, form: Option<&str>, r: &mut Report) -> Result<(), Failure> {
    let l = load(source, cli.allow_nonjacobi, r)?;
    let w = match (form, &l.entry) {
        (Some(f), _) => {
            r.digest(f.as_bytes());
            let c: Vec<Scalar> = parse_list(f, "form")?;
            if c.len() != l.algebra.dim() {
                return Err(Failure::Usage(format!(
                    "form has {} coefficients for dimension {}",
                    c.len(),
                    l.algebra.dim()
                )));
            }
            DualForm::covector(l.algebra.clone(), &c)?
        }
        (None, Some(e)) => e.distinguished_form.clone(),
        (None, None) => return Err(Failure::Usage("--form is required with --algebra".into())),
    };
    let res = cartan_class(&w)?;
    r.set("dim", json!(l.algebra.dim()));
    r.set("form", scalars(&w.covector_coeffs()));
    r.set("class", json!(res.class));
    r.set("q", json!(res.q));
    r.set(
        "parity",
        json!(match res.parity {
            Parity::Odd => "odd: ω ∧ (dω)^q ≠ 0",
            Parity::Even => "even: (dω)^q ≠ 0, ω ∧ (dω)^q = 0",
        }),
    );
    let basis: Vec<Value> = res.characteristic_space.basis().iter().map(vector).collect();
    r.set("characteristic_space", json!(basis));
    if let (None, Some(e)) = (form, &l.entry) {
        r.set("catalog_id", json!(e.id));
        r.set("expected_class", json!(e.expected_class));
        r.set("constraints_hold", json!(e.constraints_hold));
        r.tally(!e.constraints_hold || e.expected_class == res.class);
    }
    Ok(())
}

fn cmd_check(cli: &Cli, source: &Source, suite: Suite, samples: usize, r: &mut Report) -> Result<(), Failure> {
    let l = load(source, cli.allow_nonjacobi, r)?;
    let g = &l.algebra;
    r.set("suite", json!(suite.name()));
    r.set("dim", json!(g.dim()));
    match suite {
        Suite::Jacobi => {
            let rep = jacobi_check(g);
            r.tally(rep.ok);
            if let Some(w) = rep.witness {
                r.set("witness", json!({"triple": [w.i + 1, w.j + 1, w.k + 1], "defect": vector(&w.defect)}));
            }
        }
        Suite::NilpotentParity => {
            let series = lower_central_series(g);
            let Some(nilindex) = series.nilindex else {
                return Err(Failure::Precondition("algebra is not nilpotent".into()));
            };
            r.set("nilindex", json!(nilindex));
            let mut s = Sampler::new(cli.seed);
            let mut witnesses = Vec::new();
            for _ in 0..samples {
                let w = DualForm::covector(g.clone(), &s.nonzero_vector(g.dim()))?;
                let c = cartan_class(&w)?.class;
                let odd = c % 2 == 1;
                r.tally(odd);
                if !odd && witnesses.len() < 5 {
                    witnesses.push(json!({"form": scalars(&w.covector_coeffs()), "class": c}));
                }
            }
            r.set("odd", json!(r.passed()));
            r.set("samples", json!(samples));
            r.set("even_witnesses", json!(witnesses));
        }
        Suite::Center => {
            let z = center(g);
            let basis: Vec<Value> = z.basis().iter().map(vector).collect();
            r.set("center", json!(basis));
            let mut s = Sampler::new(cli.seed);
            for _ in 0..samples {
                let w = DualForm::covector(g.clone(), &s.nonzero_vector(g.dim()))?;
                let res = cartan_class(&w)?;
                let omega = w.covector_coeffs();
                let ok = z.basis().iter().all(|v| {
                    let pair: Scalar = v.0.iter().zip(&omega).map(|(a, b)| a * b).sum();
                    !pair.is_zero() || res.characteristic_space.contains(v)
                }) && res.class <= g.dim() - z.dim() + 1;
                r.tally(ok);
            }
        }
        Suite::Quadra => {
            let (spec, kappa) = DeformationSpec::from_contact_basis(g)?;
            let rep = quadra_check(&spec);
            let assembled = spec.assemble();
            let lie = jacobi_check(&assembled).ok;
            r.set("kappa", json!(io::scalar_token(&kappa)));
            r.set("failing_equations", json!(rep.failing_equations()));
            r.set("assembled_is_lie", json!(lie));
            r.tally(rep.ok);
            r.tally(lie);
        }
        Suite::ExtensionRoundtrip => {
            let back = extension_roundtrip(g)?;
            let same = back == **g;
            r.set("reconstructed", serde_json::to_value(AlgebraFile::from_algebra(&back)).expect("plain data"));
            r.tally(same);
        }
    }
    Ok(())
}

fn cmd_contract(
    cli: &Cli,
    source: &Source,
    exponents: &str,
    basis: Option<&Path>,
    emit: Option<&Path>,
    r: &mut Report,
) -> Result<(), Failure> {
    let l = load(source, cli.allow_nonjacobi, r)?;
    r.digest(exponents.as_bytes());
    let ex: Vec<i64> = parse_list(exponents, "exponent")?;
    if ex.len() != l.algebra.dim() {
        return Err(Failure::Usage(format!(
            "{} exponents for dimension {}",
            ex.len(),
            l.algebra.dim()
        )));
    }
    let mut spec = ContractionSpec::new((*l.algebra).clone(), ex)?;
    if let Some(path) = basis {
        let text = read(path, r)?;
        spec = spec.with_basis(io::parse_matrix(&text)?)?;
    }
    match contract(&spec)? {
        Contraction::Limit(limit) => {
            let file = AlgebraFile::from_algebra(&limit);
            r.set("status", json!("converges"));
            r.set("limit", serde_json::to_value(&file).expect("plain data"));
            r.set("nilpotent", json!(is_nilpotent(&limit)));
            r.set("model_shape", json!(has_eq7_shape(&limit)));
            r.set(
                "model_family",
                match is_in_model_family(&limit) {
                    Some(a) => json!({"member": true, "a": scalars(&a)}),
                    None => json!({"member": false}),
                },
            );
            if let Some(out) = emit {
                std::fs::write(out, file.to_json()).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            }
        }
        Contraction::Diverges(d) => {
            r.set("status", json!("diverges"));
            r.set(
                "divergence",
                json!({"triple": [d.i + 1, d.j + 1, d.k + 1], "exponent": d.exponent}),
            );
        }
    }
    r.tally(true);
    Ok(())
}

fn cmd_sl(n: usize, action: &SlAction, r: &mut Report) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    r.set("n", json!(n));
    if action.identity {
        let id = sl::sl_contact_identity(n)?;
        r.set("q", json!(id.q));
        r.set("constant", json!(io::scalar_token(&id.constant)));
        r.set("displayed_exponent", json!(id.displayed_exponent));
        let reference = -(Scalar::int(2).pow((2 * n * n) as u32) * Scalar::int(n as i64));
        r.set("reference_constant", json!(io::scalar_token(&reference)));
        r.set("matches_reference", json!(reference == id.constant));
        r.tally(true);
    } else if action.reeb {
        let rep = sl::sl_reeb_check(&sl::sl_contact_data(n));
        r.set("pairing_is_det", json!(rep.pairing_is_det));
        r.set(
            "contraction_multiple",
            json!(rep.contraction_multiple.as_ref().map(io::scalar_token)),
        );
        r.tally(rep.pairing_is_det);
        r.tally(rep.contraction_multiple.is_some());
    } else if let Some(path) = &action.invariance {
        let m = io::parse_matrix(&read(path, r)?)?;
        let ok = sl::so_invariance_check(n, &m)?;
        r.set("invariant", json!(ok));
        r.tally(ok);
    } else if let Some(path) = &action.singular {
        let m = io::parse_matrix(&read(path, r)?)?;
        let rep = sl::evaluate_singular(n, &m)?;
        let values: Vec<Value> = rep
            .values
            .iter()
            .map(|(i, j, v)| json!({"i": i, "j": j, "value": io::scalar_token(v)}))
            .collect();
        r.set("values", json!(values));
        r.set("singular", json!(rep.singular));
        r.tally(true);
    }
    Ok(())
}

fn run(cli: &Cli, r: &mut Report) -> Result<(), Failure> {
    match &cli.command {
        Command::Class { source, form } => cmd_class(cli, source, form.as_deref(), r),
        Command::Check { source, suite, samples } => cmd_check(cli, source, *suite, *samples, r),
        Command::Contract {
            source,
            exponents,
            basis,
            emit,
        } => cmd_contract(cli, source, exponents, basis.as_deref(), emit.as_deref(), r),
        Command::Sl { n, action } => cmd_sl(*n, action, r),
        Command::Export { .. } => unreachable!("handled before reports"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Export { catalog: id } = &cli.command {
        return match catalog::lookup_with(id, cli.allow_nonjacobi) {
            Ok(e) => {
                print!("{}", io::algebra_to_json(&e.algebra));
                ExitCode::SUCCESS
            }
            Err(e) => Failure::from(e).exit(),
        };
    }
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut report = Report::new(argv, cli.seed);
    match run(&cli, &mut report) {
        Ok(()) => {
            println!("{}", report.to_json());
            if report.failed() > 0 {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => f.exit(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownCatalog(_) => Failure::Parse(e.to_string()),
            Error::DimensionMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Precondition(e.to_string()),
        }
    }
}
