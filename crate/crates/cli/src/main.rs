use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use triangle_cone::output;
use triangle_cone::pipeline::{Artifacts, Pipeline};
use triangle_cone::table::{render_table, TableKind};
use triangle_cone::verify;
use triangle_cone_core::rootsys::Family;

#[derive(Parser)]
#[command(
    name = "triangle-cone",
    version,
    about = "Triangle inequality cones D3 for the rank-3 root systems A3, B3, C3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "A3", alias = "a3")]
    A3,
    #[value(name = "B3", alias = "b3")]
    B3,
    #[value(name = "C3", alias = "c3")]
    C3,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::A3 => Family::A,
            FamilyArg::B3 => Family::B,
            FamilyArg::C3 => Family::C,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Ieq,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Weyl,
    #[value(name = "singular-weights")]
    SingularWeights,
    #[value(name = "schubert-poly")]
    SchubertPoly,
    Products,
    Inequalities,
}

impl KindArg {
    fn kind(self) -> TableKind {
        match self {
            KindArg::Weyl => TableKind::Weyl,
            KindArg::SingularWeights => TableKind::SingularWeights,
            KindArg::SchubertPoly => TableKind::SchubertPoly,
            KindArg::Products => TableKind::Products,
            KindArg::Inequalities => TableKind::Inequalities,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write the inequality system, facets and rays of one family to files.
    Generate {
        #[arg(long, default_value = "C3")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Output directory (created if missing).
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run the verification suite against the embedded tables.
    Verify {
        /// A3, B3, C3 or "all".
        #[arg(long, default_value = "all")]
        family: String,
    },
    /// Print one of the per-parabolic tables.
    Table {
        #[arg(long, default_value = "C3")]
        family: FamilyArg,
        #[arg(long, default_value_t = 1)]
        parabolic: usize,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Print the extreme rays of the cone.
    Rays {
        #[arg(long, default_value = "C3")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Print the irredundant facet system of the cone.
    Facets {
        #[arg(long, default_value = "C3")]
        family: FamilyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Check that D3(B3) and D3(C3) are the same polyhedral cone.
    Compare,
}

enum AppError {
    Core(triangle_cone_core::Error),
    Io(std::io::Error),
    Usage(String),
}

impl From<triangle_cone_core::Error> for AppError {
    fn from(e: triangle_cone_core::Error) -> Self {
        AppError::Core(e)
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(AppError::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.command {
        Command::Generate { family, format, out } => generate(family.family(), format, &out),
        Command::Verify { family } => run_verify(&family),
        Command::Table {
            family,
            parabolic,
            kind,
        } => {
            if !(1..=3).contains(&parabolic) {
                return Err(AppError::Usage(format!(
                    "parabolic index must be 1, 2 or 3, got {parabolic}"
                )));
            }
            let ring = triangle_cone_core::schubert::SchubertRing::new(family.family())?;
            print!("{}", render_table(&ring, parabolic, kind.kind())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Rays { family, format } => {
            let art = Artifacts::new(family.family())?;
            let ambient = art.pipeline.system.ambient_dim;
            match format {
                FormatArg::Text => {
                    for ray in &art.rays.rays {
                        let line: Vec<String> = output::coordinate_major(ambient, ray)
                            .iter()
                            .map(|x| x.to_string())
                            .collect();
                        println!("{}", line.join(" "));
                    }
                }
                FormatArg::Ieq => {
                    print!(
                        "{}",
                        output::poi_text(
                            &format!("extreme rays of D3({})", art.pipeline.system.family),
                            ambient,
                            &art.rays.rays
                        )
                    );
                }
                FormatArg::Json => {
                    print!(
                        "{}",
                        output::json_text(&art.pipeline.system, &art.facets, &art.rays)
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Facets { family, format } => {
            let pipeline = Pipeline::new(family.family())?;
            let facets = pipeline.facets();
            match format {
                FormatArg::Text => {
                    print!("{}", output::text_rows(&pipeline.system, &facets.kept));
                }
                FormatArg::Ieq => {
                    print!(
                        "{}",
                        output::ieq_text(
                            &format!("facets of D3({})", pipeline.system.family),
                            pipeline.system.ambient_dim,
                            &pipeline.system.equalities,
                            &facets.hrep.inequalities
                        )
                    );
                }
                FormatArg::Json => {
                    let rays = Pipeline::rays(&facets)?;
                    print!("{}", output::json_text(&pipeline.system, &facets, &rays));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare => {
            let b = Pipeline::new(Family::B)?;
            let c = Pipeline::new(Family::C)?;
            let equal = triangle_cone_core::cone::cones_equal(&b.hrep(), &c.hrep())?;
            println!("D3(B3) == D3(C3): {equal}");
            Ok(if equal {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn run_verify(family: &str) -> Result<ExitCode, AppError> {
    let families: Vec<Family> = match family {
        "all" => vec![Family::A, Family::B, Family::C],
        "A3" | "a3" => vec![Family::A],
        "B3" | "b3" => vec![Family::B],
        "C3" | "c3" => vec![Family::C],
        other => {
            return Err(AppError::Usage(format!(
                "unknown family {other:?}; use A3, B3, C3 or all"
            )))
        }
    };
    let report = verify::verify(&families)?;
    for check in &report.checks {
        println!(
            "[{}] {}: {}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.details
        );
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    println!("{passed}/{} checks passed", report.checks.len());
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn generate(family: Family, format: FormatArg, out: &PathBuf) -> Result<ExitCode, AppError> {
    std::fs::create_dir_all(out)?;
    let art = Artifacts::new(family)?;
    let system = &art.pipeline.system;
    let prefix = system.family.to_string().to_lowercase();
    let ambient = system.ambient_dim;
    let all_indices: Vec<usize> = (0..system.inequalities.len()).collect();
    let mut written = Vec::new();
    match format {
        FormatArg::Text => {
            let files = [
                (
                    format!("{prefix}_system.txt"),
                    output::text_rows(system, &all_indices),
                ),
                (
                    format!("{prefix}_facets.txt"),
                    output::text_rows(system, &art.facets.kept),
                ),
                (format!("{prefix}_rays.txt"), {
                    let mut s = String::new();
                    for ray in &art.rays.rays {
                        let line: Vec<String> = output::coordinate_major(ambient, ray)
                            .iter()
                            .map(|x| x.to_string())
                            .collect();
                        s.push_str(&line.join(" "));
                        s.push('\n');
                    }
                    s
                }),
            ];
            for (name, content) in files {
                let path = out.join(&name);
                std::fs::write(&path, content)?;
                written.push(name);
            }
        }
        FormatArg::Ieq => {
            let files = [
                (
                    format!("{prefix}_system.ieq"),
                    output::ieq_text(
                        &format!("full inequality system for D3({})", system.family),
                        ambient,
                        &system.equalities,
                        &system
                            .inequalities
                            .iter()
                            .map(|i| i.coeffs.clone())
                            .collect::<Vec<_>>(),
                    ),
                ),
                (
                    format!("{prefix}_facets.ieq"),
                    output::ieq_text(
                        &format!("facets of D3({})", system.family),
                        ambient,
                        &system.equalities,
                        &art.facets.hrep.inequalities,
                    ),
                ),
                (
                    format!("{prefix}_rays.poi"),
                    output::poi_text(
                        &format!("extreme rays of D3({})", system.family),
                        ambient,
                        &art.rays.rays,
                    ),
                ),
            ];
            for (name, content) in files {
                let path = out.join(&name);
                std::fs::write(&path, content)?;
                written.push(name);
            }
        }
        FormatArg::Json => {
            let name = format!("{prefix}.json");
            std::fs::write(
                out.join(&name),
                output::json_text(system, &art.facets, &art.rays),
            )?;
            written.push(name);
        }
    }
    println!(
        "{}: {} rows, {} facets, {} rays -> {}",
        system.family,
        system.inequalities.len(),
        art.facets.hrep.inequalities.len(),
        art.rays.rays.len(),
        written.join(", ")
    );
    Ok(ExitCode::SUCCESS)
}
