use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idemgen::biorder::{square_records, Biorder, ClassLabels};
use idemgen::complex::{gh_complex, nambooripad_complex};
use idemgen::partial_map::{parse_maps, NamedMap};
use idemgen::presentation::{presentation_at, tietze_simplify};
use idemgen::rees::{bipartite_graph, parse_incidence, rees_semigroup};
use idemgen::semigroup::DEFAULT_CAP;
use idemgen::snf::abelianize;
use idemgen::{torus, Error, FiniteSemigroup, GreenData};
use serde_json::json;

#[derive(Parser)]
#[command(name = "idemgen", version, about = "Biordered sets, Graham-Houghton complexes and their fundamental groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Close a set of partial maps under composition.
    Generate {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Write the semigroup as JSON here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Green's relations of the closure.
    Green {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Idempotents, E-squares and singularization witnesses.
    Biorder {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// List every non-degenerate E-square with its witnesses.
        #[arg(long)]
        squares: bool,
        /// List only the singular E-squares.
        #[arg(long)]
        singular: bool,
    },
    /// Rees matrix semigroup and bipartite graph of a 0/1 grid.
    Rees {
        #[arg(short = 'm', long = "matrix")]
        matrix: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Graham-Houghton complex: components, Euler characteristics, surfaces.
    Gh {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print the complex as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Fundamental group presentation at an idempotent.
    Pi1 {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// 1-based element index of an idempotent.
        #[arg(long)]
        base: usize,
        #[arg(long)]
        abelianize: bool,
        #[arg(long)]
        simplify_budget: Option<usize>,
        #[arg(long, value_enum, default_value_t = ComplexKind::Gh)]
        complex: ComplexKind,
    },
    /// Recompute the 73-element torus example and check every claim.
    ReproPaper {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexKind {
    Gh,
    K,
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load(path: &Path, cap: usize) -> Result<(Vec<NamedMap>, FiniteSemigroup), Failure> {
    let maps = parse_maps(&read(path)?)?;
    let gens: Vec<_> = maps.iter().map(|m| m.map.clone()).collect();
    let s = FiniteSemigroup::generate(&gens, cap)?;
    Ok((maps, s))
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate { input, cap, output } => {
            let (maps, s) = load(&input, cap)?;
            let doc = json!({
                "degree": s.degree(),
                "size": s.len(),
                "zero": s.zero().map(|z| z + 1),
                "generators": maps.iter().zip(s.gens()).map(|(m, &g)| json!({"name": m.name, "element": g + 1})).collect::<Vec<_>>(),
                "elements": s.elements(),
                "idempotents": one_based(&s.idempotents()),
                "table": (0..s.len()).map(|a| (0..s.len()).map(|b| s.mul(a, b) + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            let text = serde_json::to_string_pretty(&doc).unwrap();
            match output {
                Some(path) => {
                    write(&path, &text)?;
                    println!("{} elements, {} idempotents -> {}", s.len(), s.idempotents().len(), path.display());
                }
                None => println!("{text}"),
            }
        }
        Command::Green { input, cap } => {
            let (_, s) = load(&input, cap)?;
            let g = GreenData::compute(&s);
            let reg = s.regularity();
            println!("elements {}", s.len());
            println!("idempotents {}", s.idempotents().len());
            println!("regular {}", reg.regular);
            println!(
                "classes R {} L {} H {} D {} J {}",
                g.r_classes().len(),
                g.l_classes().len(),
                g.h_classes().len(),
                g.d_classes().len(),
                g.j_classes().len()
            );
            println!("d_equals_j {}", g.d_equals_j());
            for (i, d) in g.d_classes().iter().enumerate() {
                let rs: std::collections::BTreeSet<_> = d.iter().map(|&x| g.r_class[x]).collect();
                let ls: std::collections::BTreeSet<_> = d.iter().map(|&x| g.l_class[x]).collect();
                let idem = d.iter().filter(|&&x| s.is_idempotent(x)).count();
                println!(
                    "D{}: {} elements, {}x{} R/L classes, {} idempotents, rank {}",
                    i + 1,
                    d.len(),
                    rs.len(),
                    ls.len(),
                    idem,
                    s.element(d[0]).rank()
                );
            }
        }
        Command::Biorder { input, cap, squares, singular } => {
            let (_, s) = load(&input, cap)?;
            let b = Biorder::extract(&s)?;
            let labels = ClassLabels::numbered(&b);
            println!("idempotents {}", b.idempotents().len());
            println!("regular {}", b.is_regular());
            for &e in b.idempotents() {
                let (r, l) = labels.cell(b.green(), e);
                println!("{}: ({r},{l}) {}", e + 1, s.element(e));
            }
            if squares || singular {
                let list = if singular { b.singular_squares(None) } else { b.enumerate_squares(None) };
                let records = square_records(&b, &list, &labels);
                println!("squares {}", records.len());
                for r in records {
                    let corners: Vec<String> = r.corners.iter().map(|(a, c)| format!("({a},{c})")).collect();
                    let w: Vec<String> = r.witnesses.iter().map(|w| format!("{} {}", w.t, w.mode)).collect();
                    println!("{} singular={} witnesses=[{}]", corners.join(" "), r.singular, w.join(", "));
                }
            }
        }
        Command::Rees { matrix, dot } => {
            let d = parse_incidence(&read(&matrix)?)?;
            let (s, _) = rees_semigroup(&d)?;
            let graph = bipartite_graph(&d);
            println!("blocks {} points {} incidences {}", d.num_blocks(), d.num_points(), d.ones());
            println!("elements {} idempotents {}", s.len(), s.idempotents().len());
            println!(
                "graph vertices {} edges {} components {} connected {}",
                graph.num_vertices(),
                graph.edges.len(),
                graph.num_components(),
                graph.is_connected()
            );
            if let Some(path) = dot {
                write(&path, &graph.to_dot())?;
            }
        }
        Command::Gh { input, cap, dot, json } => {
            let (_, s) = load(&input, cap)?;
            let b = Biorder::extract(&s)?;
            let gh = gh_complex(&b);
            let x = &gh.complex;
            if json {
                println!("{}", serde_json::to_string_pretty(&x.to_json()).unwrap());
            } else {
                println!("vertices {} edges {} faces {}", x.vertices.len(), x.edges.len(), x.faces.len());
                for c in x.components() {
                    let surface = x.surface_classify(c.representative)?;
                    println!(
                        "component {}: V={} E={} F={} chi={} surface={}",
                        c.component + 1,
                        c.vertices,
                        c.edges,
                        c.faces,
                        c.euler,
                        serde_json::to_string(&surface).unwrap()
                    );
                }
            }
            if let Some(path) = dot {
                write(&path, &x.to_dot())?;
            }
        }
        Command::Pi1 { input, cap, base, abelianize: ab, simplify_budget, complex } => {
            let (_, s) = load(&input, cap)?;
            let b = Biorder::extract(&s)?;
            let e = base.checked_sub(1).ok_or(Error::NotIdempotent(0))?;
            if !b.is_idempotent(e) {
                return Err(Error::NotIdempotent(base).into());
            }
            let (x, vertex) = match complex {
                ComplexKind::Gh => {
                    let gh = gh_complex(&b);
                    let v = gh.l_vertex(e)?;
                    (gh.complex, v)
                }
                ComplexKind::K => {
                    let k = nambooripad_complex(&b);
                    let v = k.vertex_of(e)?;
                    (k.complex, v)
                }
            };
            let mut p = presentation_at(&x, vertex)?.presentation;
            if let Some(budget) = simplify_budget {
                p = tietze_simplify(&p, budget).presentation;
            }
            print!("{}", p.to_text());
            println!("# {p}");
            if ab {
                let a = abelianize(&p);
                println!("{}", serde_json::to_string(&a).unwrap());
            }
        }
        Command::ReproPaper { json } => {
            let report = torus::reproduce()?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                print!("{}", report.summary());
            }
            report.check()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse { .. } => 2,
                Error::CapExceeded { .. } => 3,
                Error::VerificationMismatch(_) => 4,
                _ => 1,
            })
        }
    }
}
