//! The `zdt` command line. Exit codes: 0 everything held, 1 some check
//! failed, 2 usage, parse or I/O error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::claims;
use crate::continuity::{self, Beneath, WayBelow};
use crate::dot::{export_dot, Overlay};
use crate::enumerate::EnumMode;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::io::{inline_poset, parse_many, write_poset};
use crate::monad;
use crate::poset::FinitePoset;
use crate::report::{render_all, ClaimReport, Outcome, Witness};
use crate::system::{is_zcpo, parse_system_list, SubsetSystem};
use crate::topology::{self, lower_topology, ZScott};

#[derive(Parser, Debug)]
#[command(
    name = "zdt",
    version,
    about = "Z-Scott topology and Z-continuity workbench for finite posets"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Source {
    /// Poset file; may hold several `poset ... end` blocks.
    #[arg(
        long,
        value_name = "FILE",
        conflicts_with = "fixture",
        required_unless_present = "fixture"
    )]
    poset: Option<PathBuf>,
    /// A built-in fixture instead of a file (see `zdt fixtures --list`).
    #[arg(long, value_name = "NAME")]
    fixture: Option<String>,
    #[arg(long, value_name = "Z", default_value = "directed")]
    system: SubsetSystem,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Test one property, or one registered claim, on each poset in a file.
    Check {
        #[command(flatten)]
        src: Source,
        #[arg(long, required_unless_present = "claim", conflicts_with = "claim")]
        property: Option<Property>,
        #[arg(long, value_name = "ID")]
        claim: Option<String>,
    },
    /// Print a family of subsets, one per line.
    Family {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        family: FamilyKind,
    },
    /// Print ≪_Z or ≺_Z as a 0/1 matrix, row `x` column `y` meaning `x R y`.
    Relation {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        relation: RelationKind,
        /// Also list the related pairs, one per line.
        #[arg(long)]
        pairs: bool,
    },
    /// Verify the adjunction, the monad laws or the algebra description.
    Monad {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        verify: Verify,
    },
    /// Exhaustively check a claim over all posets up to a size.
    Search {
        /// A claim id, or `all` for the whole registry.
        #[arg(long, value_name = "ID")]
        claim: String,
        #[arg(long, value_name = "N")]
        max_size: usize,
        /// Comma-separated systems; defaults to the claim's own scope.
        #[arg(long, value_name = "Z")]
        system: Option<String>,
        #[arg(long, conflicts_with = "up_to_iso")]
        labeled: bool,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, value_name = "K")]
        jobs: Option<usize>,
        /// Write failing posets here, in the poset file format.
        #[arg(long, value_name = "PATH")]
        emit_counterexamples: Option<PathBuf>,
    },
    /// Run the fixture expectations, list fixtures, or print one.
    Fixtures {
        #[arg(long)]
        list: bool,
        #[arg(long, value_name = "NAME")]
        print: Option<String>,
    },
    /// Graphviz output of the Hasse diagram.
    Export {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value = "none")]
        overlay: OverlayArg,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// List registered claims.
    Claims,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Property {
    WeakSCont,
    SCont,
    Quasicont,
    WeaklyMeet,
    Meet,
    LocallyWeaklyMeet,
    DeltaCont,
    Prealgebraic,
    Zcpo,
    DeltaCpo,
    LowerHereditary,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyKind {
    GammaSubbasis,
    SigmaSubbasis,
    GammaTopology,
    SigmaTopology,
    Lower,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RelationKind {
    Waybelow,
    Beneath,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Verify {
    Adjunction,
    MonadLaws,
    Em,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OverlayArg {
    None,
    Waybelow,
    Beneath,
}

impl clap::builder::ValueParserFactory for SubsetSystem {
    type Parser = clap::builder::ValueParser;

    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<SubsetSystem>())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut out = String::new();
    let res = dispatch(cli.cmd, &mut out);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match res {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("zdt: {e}");
            2
        }
    }
}

fn load(src: &Source) -> Result<Vec<FinitePoset>> {
    if let Some(name) = &src.fixture {
        return fixtures::by_name(name)
            .map(|p| vec![p])
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown fixture `{name}`"),
            });
    }
    let path = src
        .poset
        .as_deref()
        .expect("clap requires --poset or --fixture");
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let ps = parse_many(&text)?;
    if ps.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: format!("{}: no poset found", path.display()),
        });
    }
    Ok(ps)
}

/// `Ok(true)` when nothing failed.
fn dispatch(cmd: Cmd, out: &mut String) -> Result<bool> {
    match cmd {
        Cmd::Check {
            src,
            property,
            claim,
        } => {
            let mut ok = true;
            for p in load(&src)? {
                let r = match (&claim, property) {
                    (Some(id), _) => claims::check_claim(id, &p, src.system)?,
                    (None, Some(prop)) => {
                        let o = Outcome::from_result(check_property(&p, src.system, prop))?;
                        ClaimReport::single(&property_name(prop), src.system.name(), &p, o)
                    }
                    (None, None) => unreachable!("clap requires one of --property, --claim"),
                };
                let o = r.outcome();
                let _ = writeln!(out, "{} {} {} {}", r.claim, r.system, p.name(), o.keyword());
                match &o {
                    Outcome::Fails(w) => out.push_str(&w.render()),
                    Outcome::Inapplicable(why) => {
                        let _ = writeln!(out, "# {why}");
                    }
                    Outcome::Holds => {}
                }
                for n in &r.notes {
                    let _ = writeln!(out, "# note: {n}");
                }
                ok &= !o.fails();
            }
            Ok(ok)
        }
        Cmd::Family { src, family } => {
            for p in load(&src)? {
                let zs = ZScott::new(&p, src.system)?;
                let fam = match family {
                    FamilyKind::GammaSubbasis => topology::gamma_subbasis(&p, src.system)?,
                    FamilyKind::SigmaSubbasis => topology::sigma_subbasis(&p, src.system)?,
                    FamilyKind::GammaTopology => zs.gamma_topology()?,
                    FamilyKind::SigmaTopology => zs.sigma_topology()?,
                    FamilyKind::Lower => lower_topology(&p),
                };
                out.push_str(&fam.render(&p));
            }
            Ok(true)
        }
        Cmd::Relation {
            src,
            relation,
            pairs,
        } => {
            for p in load(&src)? {
                let rel: Box<dyn Fn(usize, usize) -> bool> = match relation {
                    RelationKind::Waybelow => {
                        let wb = WayBelow::of(&p, src.system)?;
                        Box::new(move |x, y| wb.below(x, y))
                    }
                    RelationKind::Beneath => {
                        let b = Beneath::of(&p, src.system)?;
                        Box::new(move |x, y| b.beneath(x, y))
                    }
                };
                write_matrix(out, &p, &rel);
                if pairs {
                    let sym = match relation {
                        RelationKind::Waybelow => "<<",
                        RelationKind::Beneath => "-<",
                    };
                    for x in 0..p.len() {
                        for y in (0..p.len()).filter(|&y| rel(x, y)) {
                            let _ = writeln!(out, "{} {sym} {}", p.label(x), p.label(y));
                        }
                    }
                }
            }
            Ok(true)
        }
        Cmd::Monad { src, verify } => {
            let ids: &[&str] = match verify {
                Verify::Adjunction => &["thm-adjunction"],
                Verify::MonadLaws => &["thm-monad"],
                Verify::Em => &["thm-em", "prop-em-morph"],
            };
            let mut ok = true;
            for p in load(&src)? {
                let _ = writeln!(
                    out,
                    "# poset {} under {}",
                    inline_poset(&p),
                    src.system.name()
                );
                for id in ids {
                    let r = claims::check_claim(id, &p, src.system)?;
                    let claim = claims::lookup(id)?;
                    let _ = writeln!(out, "# {}", claim.statement);
                    for n in &r.notes {
                        let _ = writeln!(out, "# note: {n}");
                    }
                    let o = r.outcome();
                    let _ = writeln!(out, "CLAIM {id} {}{}", o.keyword(), outcome_suffix(&o));
                    ok &= !o.fails();
                }
            }
            Ok(ok)
        }
        Cmd::Search {
            claim,
            max_size,
            system,
            labeled,
            up_to_iso: _,
            jobs,
            emit_counterexamples,
        } => {
            let mode = if labeled {
                EnumMode::Labeled
            } else {
                EnumMode::UpToIso
            };
            let systems = match &system {
                Some(s) => parse_system_list(s)?,
                None => Vec::new(),
            };
            let jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let reports = if claim == "all" {
                let mut v = Vec::new();
                for c in claims::registry() {
                    let sizes = claims::sizes_up_to(max_size.min(c.default_max));
                    v.extend(claims::run_claim(c.id, &sizes, mode, &systems, jobs)?);
                }
                v
            } else {
                claims::run_claim(&claim, &claims::sizes_up_to(max_size), mode, &systems, jobs)?
            };
            out.push_str(&render_all(&reports));
            if let Some(path) = emit_counterexamples {
                write_counterexamples(&path, &reports)?;
            }
            Ok(reports.iter().all(ClaimReport::all_hold))
        }
        Cmd::Fixtures { list, print } => {
            if let Some(name) = print {
                let p = fixtures::by_name(&name).ok_or_else(|| Error::Parse {
                    line: 0,
                    msg: format!("unknown fixture `{name}`"),
                })?;
                out.push_str(&write_poset(&p));
                return Ok(true);
            }
            if list {
                for p in fixtures::all_named() {
                    let _ = writeln!(out, "{:<8} {}", p.name(), inline_poset(&p));
                }
                return Ok(true);
            }
            let reports = claims::run_fixture_suite()?;
            out.push_str(&render_all(&reports));
            Ok(reports.iter().all(ClaimReport::all_hold))
        }
        Cmd::Export {
            src,
            overlay,
            out: path,
        } => {
            let overlay = match overlay {
                OverlayArg::None => Overlay::None,
                OverlayArg::Waybelow => Overlay::WayBelow,
                OverlayArg::Beneath => Overlay::Beneath,
            };
            let mut text = String::new();
            for p in load(&src)? {
                text.push_str(&export_dot(&p, overlay, src.system)?);
            }
            match path {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
                None => out.push_str(&text),
            }
            Ok(true)
        }
        Cmd::Claims => {
            for c in claims::registry() {
                let scope: Vec<&str> = if c.system_free {
                    vec!["any"]
                } else {
                    c.systems.iter().map(|z| z.name()).collect()
                };
                let _ = writeln!(
                    out,
                    "{:<22} n<={} {:<40} {}",
                    c.id,
                    c.default_max,
                    scope.join(","),
                    c.statement
                );
            }
            Ok(true)
        }
    }
}

fn outcome_suffix(o: &Outcome) -> String {
    match o {
        Outcome::Holds => String::new(),
        Outcome::Inapplicable(why) => format!(" {why}"),
        Outcome::Fails(w) => {
            let mut s = format!(" poset=[{}]", inline_poset(&w.poset));
            for (k, v) in &w.notes {
                let _ = write!(s, " {k}={v}");
            }
            s
        }
    }
}

fn write_matrix(out: &mut String, p: &FinitePoset, rel: &dyn Fn(usize, usize) -> bool) {
    let w = p.labels().iter().map(String::len).max().unwrap_or(1);
    let _ = writeln!(out, "{:w$} {}", "", p.labels().join(" "));
    for x in 0..p.len() {
        let row: Vec<String> = (0..p.len())
            .map(|y| format!("{:>k$}", u8::from(rel(x, y)), k = p.label(y).len()))
            .collect();
        let _ = writeln!(out, "{:w$} {}", p.label(x), row.join(" "));
    }
}

/// Failing posets from every report, each preceded by comments naming the
/// claim and system so `zdt check --claim` can replay them.
fn write_counterexamples(path: &Path, reports: &[ClaimReport]) -> Result<()> {
    let mut s = String::new();
    for r in reports {
        for w in &r.witnesses {
            let _ = writeln!(s, "# claim = {}", r.claim);
            let _ = writeln!(s, "# system = {}", r.system);
            s.push_str(&w.render());
            s.push('\n');
        }
    }
    std::fs::write(path, s).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn property_name(p: Property) -> String {
    p.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn check_property(p: &FinitePoset, z: SubsetSystem, prop: Property) -> Result<Outcome> {
    Ok(match prop {
        Property::WeakSCont => continuity::weak_s_continuity(&WayBelow::of(p, z)?),
        Property::SCont => continuity::s_continuity(&WayBelow::of(p, z)?),
        Property::Quasicont => continuity::quasicontinuity(&WayBelow::of(p, z)?)?,
        Property::WeaklyMeet => continuity::weakly_meet(&ZScott::new(p, z)?),
        Property::Meet => continuity::meet(&ZScott::new(p, z)?)?,
        Property::LocallyWeaklyMeet => continuity::locally_weakly_meet(p, z)?,
        Property::DeltaCont => Beneath::of(p, z)?.delta_continuity(),
        Property::Prealgebraic => Beneath::of(p, z)?.prealgebraicity(),
        Property::Zcpo => {
            let gens = z.generators(p)?;
            let bad = gens.iter().find(|m| p.sup_of(m).is_none());
            debug_assert_eq!(bad.is_none(), is_zcpo(p, z)?);
            Outcome::check(bad.is_none(), || {
                Witness::new(p).note("no supremum for", p.fmt_set(bad.unwrap()))
            })
        }
        Property::DeltaCpo => {
            let d = crate::lattice::DeltaObject::new(p, z)?;
            let bad = d.missing_sup();
            debug_assert_eq!(bad.is_none(), monad::is_delta_cpo(p, z)?);
            Outcome::check(bad.is_none(), || {
                Witness::new(p).note(
                    "compact closed set without supremum",
                    p.fmt_set(d.set(bad.unwrap())),
                )
            })
        }
        Property::LowerHereditary => {
            let bad = ZScott::new(p, z)?.lower_hereditary_witness()?;
            Outcome::check(bad.is_none(), || {
                Witness::new(p).note("A", p.fmt_set(bad.as_ref().unwrap()))
            })
        }
    })
}
