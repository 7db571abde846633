//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeded and every asserted property
//! holds, 1 when a decider or verifier reported a failure, 2 on input and
//! parse errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog;
use crate::covers::{minimal_subcover, Cover, Strategy};
use crate::document::{space_namer, witness_json, LoadedSpace, Namer, SpaceDocument};
use crate::error::{Error, Result};
use crate::search::{find_counterexample, PropertyId, SearchBudget};
use crate::signature::{max_cells_from_env, Signature};
use crate::topology::SoftTopology;
use crate::verdict::{Verdict, Witness};
use crate::verify::{verify_law, verify_theorem, LawId, Scope, TheoremId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "softtop",
    version,
    about = "Deciders and counterexample search for finite soft topological spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the listed sets (with Φ_E and ~X) form a soft topology.
    Validate { file: PathBuf },
    /// Decide every named property.
    Profile {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Properties that must hold; any failure exits with 1.
        #[arg(long, value_delimiter = ',')]
        assert: Vec<String>,
    },
    /// Soft closure of a named set.
    Closure {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Soft interior of a named set.
    Interior {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Subspace topology on the given points, printed as a document.
    Subspace {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<String>,
    },
    /// Minimum-cardinality subcover of an open cover.
    Subcover {
        file: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long, value_delimiter = ',', required = true)]
        members: Vec<String>,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exact)]
        strategy: StrategyArg,
    },
    /// Check a theorem on one space or on every small space, or a law on
    /// random soft sets.
    Verify(VerifyArgs),
    /// Look for a space with the given properties holding and failing.
    Search(SearchArgs),
    /// Print or export a catalog example.
    Catalog {
        #[arg(long)]
        id: String,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exact,
    Greedy,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "law", conflicts_with = "law")]
    theorem: Option<String>,
    #[arg(long)]
    law: Option<String>,
    #[arg(long, conflicts_with_all = ["max_points", "max_params"])]
    file: Option<PathBuf>,
    #[arg(long, requires = "max_params")]
    max_points: Option<usize>,
    #[arg(long, requires = "max_points")]
    max_params: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, value_delimiter = ',')]
    holds: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    fails: Vec<String>,
    #[arg(long, conflicts_with = "random")]
    exhaustive: bool,
    #[arg(long, requires = "budget")]
    random: bool,
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    max_points: usize,
    #[arg(long, default_value_t = 2)]
    max_params: usize,
}

/// Runs the tool with stdout/stderr. `args` includes the program name.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let mut ctx = Ctx { out, echo };
    match ctx.dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    echo: Vec<String>,
}

fn io_err(e: std::io::Error) -> Error {
    Error::Input(format!("i/o: {e}"))
}

fn read_space(path: &Path) -> Result<LoadedSpace> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    LoadedSpace::from_json(&text, max_cells_from_env()?)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn parse_list<T: std::str::FromStr<Err = Error>>(names: &[String]) -> Result<Vec<T>> {
    names.iter().map(|n| n.parse()).collect()
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

impl Ctx<'_> {
    fn dispatch(&mut self, command: Command) -> Result<i32> {
        match command {
            Command::Validate { file } => self.validate(&file),
            Command::Profile { file, json, assert } => self.profile(&file, json, &assert),
            Command::Closure { file, set } => self.closure(&file, &set, true),
            Command::Interior { file, set } => self.closure(&file, &set, false),
            Command::Subspace { file, points } => self.subspace(&file, &points),
            Command::Subcover {
                file,
                target,
                members,
                strategy,
            } => self.subcover(&file, &target, &members, strategy),
            Command::Verify(args) => self.verify(args),
            Command::Search(args) => self.search(args),
            Command::Catalog { id, emit } => self.catalog(&id, emit.as_deref()),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref()).map_err(io_err)
    }

    fn print_witness(&mut self, w: &Witness, namer: &Namer, sig: &Signature) -> Result<()> {
        let text = witness_text(w, namer, sig);
        if !text.is_empty() {
            self.line(format!("  witness: {text}"))?;
        }
        Ok(())
    }

    /// Loads a file that must describe a topology. `Err(code)` when it does
    /// not (the axiom witness is printed).
    fn space(
        &mut self,
        file: &Path,
    ) -> Result<std::result::Result<(LoadedSpace, SoftTopology), i32>> {
        let loaded = read_space(file)?;
        match loaded.topology()? {
            Ok(t) => Ok(Ok((loaded, t))),
            Err(v) => {
                self.line("not a soft topology")?;
                self.print_witness(&v.witness, &loaded.namer(), &loaded.signature)?;
                Ok(Err(EXIT_FAILED))
            }
        }
    }

    fn validate(&mut self, file: &Path) -> Result<i32> {
        Ok(match self.space(file)? {
            Ok((_, t)) => {
                self.line(format!("soft topology with {} open sets", t.len()))?;
                EXIT_OK
            }
            Err(code) => code,
        })
    }

    fn profile(&mut self, file: &Path, as_json: bool, assert: &[String]) -> Result<i32> {
        let asserted: Vec<PropertyId> = parse_list(assert)?;
        let (loaded, t) = match self.space(file)? {
            Ok(s) => s,
            Err(code) => return Ok(code),
        };
        let namer = loaded.namer();
        let verdicts: Vec<(PropertyId, Verdict)> =
            PropertyId::ALL.iter().map(|&p| (p, p.decide(&t))).collect();
        let failed: Vec<PropertyId> = asserted
            .iter()
            .copied()
            .filter(|p| !verdicts.iter().any(|(q, v)| q == p && v.holds))
            .collect();
        let code = if failed.is_empty() {
            EXIT_OK
        } else {
            EXIT_FAILED
        };
        if as_json {
            let checks: Vec<serde_json::Value> = verdicts
                .iter()
                .map(|(p, v)| {
                    json!({
                        "property": p.name(),
                        "holds": v.holds,
                        "vacuous": v.vacuous,
                        "witness": witness_json(&v.witness, &namer, &loaded.signature),
                    })
                })
                .collect();
            let report = json!({
                "command": self.echo,
                "checks": checks,
                "asserted": asserted.iter().map(|p| p.name()).collect::<Vec<_>>(),
                "failed": failed.iter().map(|p| p.name()).collect::<Vec<_>>(),
                "exit": code,
            });
            self.line(serde_json::to_string_pretty(&report).expect("report serializes"))?;
        } else {
            for (p, v) in &verdicts {
                let vac = if v.vacuous { " (vacuous)" } else { "" };
                self.line(format!("{}: {}{vac}", p.name(), flag(v.holds)))?;
                if !v.holds || asserted.contains(p) {
                    self.print_witness(&v.witness, &namer, &loaded.signature)?;
                }
            }
            for p in &failed {
                self.line(format!("assertion failed: {}", p.name()))?;
            }
        }
        Ok(code)
    }

    fn closure(&mut self, file: &Path, name: &str, closure: bool) -> Result<i32> {
        let (loaded, t) = match self.space(file)? {
            Ok(s) => s,
            Err(code) => return Ok(code),
        };
        let s = loaded.set(name)?;
        let r = if closure {
            t.closure(&s)?
        } else {
            t.interior(&s)?
        };
        self.line(loaded.namer().set_text(&r))?;
        Ok(EXIT_OK)
    }

    fn subspace(&mut self, file: &Path, points: &[String]) -> Result<i32> {
        let (_, t) = match self.space(file)? {
            Ok(s) => s,
            Err(code) => return Ok(code),
        };
        let sub = t.subspace(points)?;
        let doc = SpaceDocument::from_space(&sub);
        write!(self.out, "{}", doc.to_json()).map_err(io_err)?;
        Ok(EXIT_OK)
    }

    fn subcover(
        &mut self,
        file: &Path,
        target: &str,
        members: &[String],
        strategy: StrategyArg,
    ) -> Result<i32> {
        let (loaded, t) = match self.space(file)? {
            Ok(s) => s,
            Err(code) => return Ok(code),
        };
        let target = loaded.set(target)?;
        let sets = members
            .iter()
            .map(|m| loaded.set(m))
            .collect::<Result<Vec<_>>>()?;
        if let Some(i) = sets.iter().position(|s| !t.is_open_cells(s.cells())) {
            self.line(format!("member `{}` is not soft open", members[i]))?;
            return Ok(EXIT_FAILED);
        }
        let cover = match Cover::new(target, sets) {
            Ok(c) => c,
            Err(Error::Precondition(msg)) => {
                self.line(format!("not a cover: {msg}"))?;
                return Ok(EXIT_FAILED);
            }
            Err(e) => return Err(e),
        };
        let strategy = match strategy {
            StrategyArg::Exact => Strategy::Exact,
            StrategyArg::Greedy => Strategy::Greedy,
        };
        let sub = minimal_subcover(&cover, strategy);
        let names: Vec<&str> = sub.indices.iter().map(|&i| members[i].as_str()).collect();
        self.line(format!("subcover ({}): {}", names.len(), names.join(", ")))?;
        Ok(EXIT_OK)
    }

    fn verify(&mut self, args: VerifyArgs) -> Result<i32> {
        let (verdict, namer, sig) = if let Some(law) = &args.law {
            let law: LawId = law.parse()?;
            let sig = match (&args.file, args.max_points, args.max_params) {
                (Some(f), _, _) => read_space(f)?.signature,
                (None, Some(p), Some(e)) => Arc::new(Signature::anonymous(p, e)?),
                _ => {
                    return Err(Error::Input(
                        "--law needs --file or --max-points/--max-params".into(),
                    ))
                }
            };
            let v = verify_law(law, &sig, args.trials, args.seed)?;
            (v, Namer::default(), sig)
        } else {
            let thm: TheoremId = args.theorem.as_deref().unwrap_or_default().parse()?;
            match (&args.file, args.max_points, args.max_params) {
                (Some(f), _, _) => {
                    let (loaded, t) = match self.space(f)? {
                        Ok(s) => s,
                        Err(code) => return Ok(code),
                    };
                    let v = verify_theorem(thm, &Scope::Space(t))?;
                    (v, loaded.namer(), loaded.signature)
                }
                (None, Some(max_points), Some(max_params)) => {
                    let scope = Scope::Enumerate {
                        max_points,
                        max_params,
                    };
                    let v = verify_theorem(thm, &scope)?;
                    (v, Namer::default(), Arc::new(Signature::anonymous(1, 1)?))
                }
                _ => {
                    return Err(Error::Input(
                        "--theorem needs --file or --max-points/--max-params".into(),
                    ))
                }
            }
        };
        let label = args.law.or(args.theorem).unwrap_or_default();
        self.line(format!(
            "{label}: {}",
            if verdict.holds { "holds" } else { "fails" }
        ))?;
        self.print_witness(&verdict.witness, &namer, &sig)?;
        Ok(if verdict.holds { EXIT_OK } else { EXIT_FAILED })
    }

    fn search(&mut self, args: SearchArgs) -> Result<i32> {
        let holds: Vec<PropertyId> = parse_list(&args.holds)?;
        let fails: Vec<PropertyId> = parse_list(&args.fails)?;
        let budget = match (args.exhaustive, args.random, args.budget) {
            (true, false, _) => SearchBudget::exhaustive(args.max_points, args.max_params),
            (false, true, Some(k)) => {
                SearchBudget::random(args.max_points, args.max_params, k, args.seed)
            }
            _ => {
                return Err(Error::Input(
                    "choose --exhaustive or --random --budget K".into(),
                ))
            }
        };
        let outcome = find_counterexample(&holds, &fails, &budget)?;
        match outcome.found {
            Some(found) => {
                let namer = space_namer(&found.space);
                let sig = found.space.signature().clone();
                self.line(format!("found after {} spaces:", outcome.examined))?;
                write!(
                    self.out,
                    "{}",
                    SpaceDocument::from_space(&found.space).to_json()
                )
                .map_err(io_err)?;
                for (p, v) in &found.verdicts {
                    self.line(format!("{}: {}", p.name(), flag(v.holds)))?;
                    if !v.holds {
                        self.print_witness(&v.witness, &namer, &sig)?;
                    }
                }
                Ok(EXIT_OK)
            }
            None => {
                let scope = if outcome.complete {
                    "exhaustive: no such space exists within the bounds"
                } else {
                    "sampled: none found within the budget"
                };
                self.line(format!(
                    "no space found among {} ({scope})",
                    outcome.examined
                ))?;
                Ok(EXIT_FAILED)
            }
        }
    }

    fn catalog(&mut self, id: &str, emit: Option<&Path>) -> Result<i32> {
        let entry = catalog::example(id)?;
        let doc = SpaceDocument::from_named(entry.space.signature(), &entry.named);
        if let Some(path) = emit {
            fs::write(path, doc.to_json())
                .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        } else {
            write!(self.out, "{}", doc.to_json()).map_err(io_err)?;
        }
        self.line(format!("{}: {}", entry.id, entry.note))?;
        let mut code = EXIT_OK;
        for r in entry.replay() {
            let status = if r.matches() { "ok" } else { "MISMATCH" };
            self.line(format!(
                "  {}: expected {}, got {} [{status}]",
                r.expectation.property.name(),
                flag(r.expectation.holds),
                flag(r.verdict.holds)
            ))?;
            if !r.matches() {
                code = EXIT_FAILED;
            }
        }
        Ok(code)
    }
}

pub fn witness_text(w: &Witness, namer: &Namer, sig: &Signature) -> String {
    let set = |s| namer.set_text(s);
    let point = |x: usize| sig.points()[x].clone();
    match w {
        Witness::None => String::new(),
        Witness::Note(n) => n.clone(),
        Witness::Missing { axiom, set: s } => format!("{axiom:?}: missing {}", set(s)),
        Witness::NotClosed {
            axiom,
            left,
            right,
            result,
        } => format!(
            "{axiom:?}: {} with {} gives {}, not listed",
            set(left),
            set(right),
            set(result)
        ),
        Witness::Point(x) => format!("point {}", point(*x)),
        Witness::PointPair { first, second } => {
            format!("points ({}, {})", point(*first), point(*second))
        }
        Witness::PointSet { point: x, set: s } => format!("point {} and {}", point(*x), set(s)),
        Witness::Set(s) => set(s),
        Witness::SetPair { first, second } => format!("({}, {})", set(first), set(second)),
        Witness::Family(f) => format!("[{}]", f.iter().map(set).collect::<Vec<_>>().join(", ")),
        Witness::Separations(seps) => format!("{} separations", seps.len()),
        Witness::Space { space, detail } => {
            let inner = space_namer(space);
            let names: Vec<String> = space.members().iter().map(|s| inner.set_text(s)).collect();
            format!(
                "space over {} points, {} parameters: {{{}}}; {}",
                space.signature().n_points(),
                space.signature().n_params(),
                names.join(", "),
                witness_text(detail, &inner, space.signature())
            )
        }
    }
}
