use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use torfix_core::{
    AlgebraElement, CmElement, CmField, EndomorphismInput, PeriodicTableKind, QuaternionElement,
    RealQuadElement,
};

use torfix::input::{
    parse_inline_analytic, parse_inline_charpoly, parse_inline_matrix, parse_input, parse_poly,
    parse_rational, parse_rationals4,
};
use torfix::report::Report;
use torfix::{commands, CliError, EXIT_MALFORMED};

/// Fixed-point counts and asymptotic behaviour of endomorphisms of
/// two-dimensional complex tori.
#[derive(Parser, Debug)]
#[command(name = "torfix", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the fixed-point function as B1, B2 or B3.
    Classify(InputArgs),
    /// Print fix(f^n) for n = 1..n_max.
    Sequence {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'n', long = "n-max")]
        n_max: u64,
        /// Allow n_max above 1000000.
        #[arg(long)]
        force: bool,
    },
    /// Classify or count fixed points of an endomorphism algebra element.
    Algebra {
        #[command(subcommand)]
        kind: AlgebraCommand,
    },
    /// List the built-in examples, or show one with its input document.
    Examples { name: Option<String> },
    /// Minimal polynomials of the roots of unity allowed for periodic elements.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
    },
    /// Least a such that t^4 + a t^2 + t + 1 has a root of modulus below eps.
    SearchSmall {
        /// Rational p/q in (0, 1].
        #[arg(long)]
        eps: String,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// JSON input document; `-` reads standard input.
    file: Option<PathBuf>,
    /// Characteristic quartic as ascending coefficients, e.g. "4,0,5,0,1".
    #[arg(long, allow_hyphen_values = true)]
    charpoly: Option<String>,
    /// Rational representation, rows separated by ';', e.g. "2,0,0,0;0,2,0,0;0,0,2,0;0,0,0,2".
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
    /// Analytic representation as "u,v;u,v;u,v;u,v" row-major, entries u + v√m.
    #[arg(long, allow_hyphen_values = true, requires = "field")]
    analytic: Option<String>,
    /// Square-free m of the field ℚ(√m) for --analytic.
    #[arg(long, allow_hyphen_values = true)]
    field: Option<i64>,
    /// Name of a built-in example.
    #[arg(long)]
    example: Option<String>,
}

#[derive(Subcommand, Debug)]
enum AlgebraCommand {
    /// Real multiplication: a + b·ω in the maximal order of ℚ(√d).
    Rm {
        action: Action,
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(short = 'n', long = "n-max", default_value_t = 12)]
        n_max: u64,
    },
    /// Quaternion multiplication: a + b·i + c·j + d·ij in (α, β)_ℚ.
    Quat {
        action: Action,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Four rationals "a,b,c,d".
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(short = 'n', long = "n-max", default_value_t = 12)]
        n_max: u64,
    },
    /// Complex multiplication: coordinates on the power basis of ℚ[y]/(g).
    Cm {
        action: Action,
        /// Defining quartic as ascending coefficients.
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        /// Four rationals.
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
        /// Optional square-free e of the decomposition data.
        #[arg(long)]
        e: Option<BigInt>,
        #[arg(short = 'n', long = "n-max", default_value_t = 12)]
        n_max: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Action {
    Classify,
    Fix,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TableKind {
    Quaternion,
    Cm,
}

impl InputArgs {
    fn resolve(&self) -> Result<EndomorphismInput, CliError> {
        let given = [
            self.file.is_some(),
            self.charpoly.is_some(),
            self.matrix.is_some(),
            self.analytic.is_some(),
            self.example.is_some(),
        ];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(CliError::Malformed(
                "give exactly one input: FILE, --charpoly, --matrix, --analytic or --example"
                    .into(),
            ));
        }
        let input = if let Some(path) = &self.file {
            return parse_input(&read_document(path)?);
        } else if let Some(p) = &self.charpoly {
            parse_inline_charpoly(p)?
        } else if let Some(m) = &self.matrix {
            parse_inline_matrix(m)?
        } else if let Some(a) = &self.analytic {
            parse_inline_analytic(a, self.field.expect("required by clap"))?
        } else {
            let name = self.example.as_deref().expect("one input given");
            torfix_core::abelian::builtin_example(name)
                .ok_or_else(|| CliError::Malformed(format!("unknown example {name:?}")))?
        };
        torfix_core::Endomorphism::new(input.clone())?;
        Ok(input)
    }
}

fn read_document(path: &PathBuf) -> Result<String, CliError> {
    let read = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    read.map_err(|e| CliError::Malformed(format!("cannot read {}: {e}", path.display())))
}

fn algebra(kind: &AlgebraCommand) -> Result<Report, CliError> {
    let (x, action, n_max) = match kind {
        AlgebraCommand::Rm {
            action,
            d,
            a,
            b,
            n_max,
        } => (
            AlgebraElement::RealQuad(RealQuadElement::new(*d, a.clone(), b.clone())?),
            action,
            n_max,
        ),
        AlgebraCommand::Quat {
            action,
            alpha,
            beta,
            coeffs,
            n_max,
        } => {
            let x = QuaternionElement::new(
                parse_rational(alpha)?,
                parse_rational(beta)?,
                parse_rationals4(coeffs)?,
            )?;
            (AlgebraElement::Quaternion(x), action, n_max)
        }
        AlgebraCommand::Cm {
            action,
            g,
            coords,
            e,
            n_max,
        } => {
            let field = CmField::new(parse_poly(g)?, e.clone())?;
            (
                AlgebraElement::Cm(CmElement::new(field, parse_rationals4(coords)?)),
                action,
                n_max,
            )
        }
    };
    Ok(match action {
        Action::Classify => Report::Classify(commands::classify_algebra(&x)?),
        Action::Fix => Report::Sequence(commands::algebra_fix(&x, *n_max)?),
    })
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    Ok(match &cli.command {
        Command::Classify(input) => Report::Classify(commands::classify(&input.resolve()?)?),
        Command::Sequence {
            input,
            n_max,
            force,
        } => Report::Sequence(commands::sequence(&input.resolve()?, *n_max, *force)?),
        Command::Algebra { kind } => algebra(kind)?,
        Command::Examples { name } => commands::examples(name.as_deref())?,
        Command::Table { kind } => Report::Table(commands::table(match kind {
            TableKind::Quaternion => PeriodicTableKind::Quaternion,
            TableKind::Cm => PeriodicTableKind::Cm,
        })),
        Command::SearchSmall { eps } => Report::Search(commands::search_small(eps)?),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_MALFORMED as u8
            } else {
                0
            });
        }
    };
    match run(&cli) {
        Ok(report) => {
            print!(
                "{}",
                if cli.json {
                    report.to_json() + "\n"
                } else {
                    report.to_text()
                }
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
