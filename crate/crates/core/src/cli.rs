//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::counting::{weyl_leading, weyl_polya_report, CountingContext};
use crate::coxeter::{cache_dir, class_table, load_or_enumerate, lookup_str, GroupDescriptor, GroupName};
use crate::error::Error;
use crate::eta::{eta_invariant, EtaKind};
use crate::exactnum::{parse_rational, rational_to_string, Rational};
use crate::poincare::{build_chain, degeneracies, gce, BoundaryCondition};
use crate::ratfun::ZPolynomial;
use crate::spectral::{casimir_energy, heat_coefficients_bc, modified_zeta_value, zeta_ce_value};
use crate::verify::{run_suite, Suite};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BcArg {
    Absolute,
    Relative,
}

impl From<BcArg> for BoundaryCondition {
    fn from(b: BcArg) -> Self {
        match b {
            BcArg::Absolute => BoundaryCondition::Absolute,
            BcArg::Relative => BoundaryCondition::Relative,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Signature,
    Dirac,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    H,
    Hc,
    Hcc,
    Hccc,
    Gce,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Identities,
    Regression,
    All,
}

#[derive(Parser, Debug)]
#[command(name = "tesspec", version, about = "Spectral invariants of coexact forms on spherical fundamental domains")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Directory for enumerated group elements (default: $TESSPEC_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GroupSel {
    /// 3-3-3, 3-3-4, 3-4-3, 3-3-5, hemisphere-D or custom.
    #[arg(long)]
    pub group: Option<String>,
    /// Reduced degrees of a custom group, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<u32>>,
    /// Sphere dimension; required with --degrees.
    #[arg(long = "d")]
    pub d: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List catalog groups, or the rotation classes of one.
    Groups {
        #[command(flatten)]
        sel: GroupSel,
    },
    /// A generating function of the chain, with its σ-expansion.
    Series {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long, value_enum, default_value = "absolute")]
        bc: BcArg,
        #[arg(long, value_enum, default_value = "gce")]
        kind: SeriesArg,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
    /// Coexact degeneracies at levels 0..=lmax.
    Degeneracy {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long, value_enum, default_value = "absolute")]
        bc: BcArg,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 20)]
        lmax: usize,
    },
    /// Coexact zeta value at s = 0, a negative integer, or -1/2.
    Zeta {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_enum, default_value = "absolute")]
        bc: BcArg,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Heat-kernel coefficients C_{k/2}, k = 0..=d.
    Heatcoeffs {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_enum, default_value = "absolute")]
        bc: BcArg,
    },
    /// Middle-rank Casimir energy.
    Casimir {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Signature or Dirac eta invariant of the doubled domain.
    Eta {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long, value_enum, default_value = "signature")]
        kind: KindArg,
        #[arg(long, default_value_t = 64)]
        digits: u32,
    },
    /// Accumulated degeneracies and the counting function.
    Counting {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long, value_enum, default_value = "absolute")]
        bc: BcArg,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 20)]
        lmax: usize,
        /// Evaluate N(λ) at this λ instead of tabulating.
        #[arg(long)]
        at: Option<String>,
    },
    /// Weyl constant and the empirical leading-term ratio.
    Weyl {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_enum, default_value = "absolute")]
        bc: BcArg,
        #[arg(long, default_value_t = 10_000)]
        lmax: u64,
    },
    /// Sign pattern of the relative-minus-absolute accumulated difference.
    WeylPolya {
        #[command(flatten)]
        sel: GroupSel,
        #[arg(long, default_value_t = 60)]
        order: usize,
    },
    /// Run the identity and regression suites.
    Verify {
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[arg(long, value_enum, default_value = "identities")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 64)]
        digits: u32,
    },
}

/// Usage problems exit with 2, computation failures with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Compute(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl GroupSel {
    pub fn resolve(&self) -> CliResult<GroupDescriptor> {
        let desc = match (&self.group, &self.degrees) {
            (Some(g), None) if g != "custom" => lookup_str(g).map_err(|e| usage(e.to_string()))?,
            (None, Some(degs)) | (Some(_), Some(degs)) => {
                if let Some(g) = &self.group {
                    if g != "custom" {
                        return Err(usage("--degrees goes with --group custom"));
                    }
                }
                let d = self.d.ok_or_else(|| usage("custom degrees require --d"))?;
                if degs.len() != d as usize {
                    return Err(usage(format!("--d {d} but {} degrees given", degs.len())));
                }
                GroupDescriptor::custom(degs).map_err(|e| usage(e.to_string()))?
            }
            (Some(_), None) => return Err(usage("--group custom needs --degrees and --d")),
            (None, None) => return Err(usage("select a group with --group or --degrees")),
        };
        if let Some(d) = self.d {
            if d != desc.d() {
                return Err(usage(format!("--d {d} does not match {} (d = {})", desc.label(), desc.d())));
            }
        }
        Ok(desc)
    }
}

fn middle_or(desc: &GroupDescriptor, p: Option<usize>) -> CliResult<usize> {
    let d = desc.d() as usize;
    match p {
        Some(p) if p < d => Ok(p),
        Some(p) => Err(usage(format!("--p {p} out of range 0..{d}"))),
        None if d % 2 == 1 => Ok((d - 1) / 2),
        None => Err(usage("--p is required for even d")),
    }
}

fn r(x: &Rational) -> String {
    rational_to_string(x)
}

struct Out {
    format: Format,
    buf: String,
}

impl Out {
    fn json<T: Serialize>(&mut self, v: &T) -> CliResult<()> {
        let s = serde_json::to_string_pretty(v).map_err(|e| CliError::Compute(Error::Parse(e.to_string())))?;
        self.line(s);
        Ok(())
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    fn csv(&mut self, header: &[&str], rows: Vec<Vec<String>>) {
        self.line(header.join(","));
        for row in rows {
            let cells: Vec<String> =
                row.into_iter().map(|c| if c.contains(',') { format!("\"{c}\"") } else { c }).collect();
            self.line(cells.join(","));
        }
    }
}

fn no_csv(cmd: &str) -> CliError {
    usage(format!("{cmd} has no csv output"))
}

fn series_of(desc: &GroupDescriptor, bc: BoundaryCondition, kind: SeriesArg) -> CliResult<ZPolynomial> {
    if kind == SeriesArg::Gce {
        return Ok(gce(desc, bc)?);
    }
    let ch = build_chain(desc, bc)?;
    Ok(match kind {
        SeriesArg::H => ch.h,
        SeriesArg::Hc => ch.hc,
        SeriesArg::Hcc => ch.hcc,
        SeriesArg::Hccc => ch.hccc,
        SeriesArg::Gce => unreachable!(),
    })
}

fn execute(cli: &Cli, out: &mut Out) -> CliResult<bool> {
    let cache = cache_dir(cli.cache.as_deref());
    let cache = cache.as_deref();
    let f = cli.format;
    match &cli.command {
        Command::Groups { sel } => {
            if sel.group.is_none() && sel.degrees.is_none() {
                let rows: Vec<GroupDescriptor> = GroupName::polytopes().iter().map(crate::coxeter::catalog_lookup).collect::<Result<_, _>>()?;
                match f {
                    Format::Json => out.json(&rows)?,
                    Format::Csv => out.csv(
                        &["name", "label", "d", "reduced_degrees", "exponents", "order"],
                        rows.iter()
                            .map(|g| {
                                vec![
                                    g.name.cli_name(),
                                    g.label(),
                                    g.d().to_string(),
                                    join(&g.reduced_degrees),
                                    join(&g.exponents),
                                    g.order.to_string(),
                                ]
                            })
                            .collect(),
                    ),
                    Format::Text => {
                        for g in rows {
                            out.line(format!(
                                "{:<6} {:<8} d={} degrees=({}) exponents=({}) order={}",
                                g.name.cli_name(),
                                g.label(),
                                g.d(),
                                join(&g.reduced_degrees),
                                join(&g.exponents),
                                g.order
                            ));
                        }
                    }
                }
                return Ok(true);
            }
            let desc = sel.resolve()?;
            if !desc.name.is_polytope() {
                match f {
                    Format::Json => out.json(&desc)?,
                    _ => out.line(format!("{} d={} degrees=({}) order={}", desc.label(), desc.d(), join(&desc.reduced_degrees), desc.order)),
                }
                return Ok(true);
            }
            let classes = class_table(&load_or_enumerate(&desc, cache)?)?;
            match f {
                Format::Json => out.json(&json!({"group": desc, "rotation_classes": classes}))?,
                Format::Csv | Format::Text => out.csv(
                    &["order", "a", "b", "oriented_sign", "class_size", "unit_eigenvalue"],
                    classes
                        .iter()
                        .map(|c| {
                            vec![
                                c.order.to_string(),
                                c.a.to_string(),
                                c.b.to_string(),
                                c.oriented_sign.to_string(),
                                c.class_size.to_string(),
                                c.has_unit_eigenvalue.to_string(),
                            ]
                        })
                        .collect(),
                ),
            }
        }
        Command::Series { sel, bc, kind, order } => {
            let desc = sel.resolve()?;
            let bc: BoundaryCondition = (*bc).into();
            let s = series_of(&desc, bc, *kind)?;
            let table: Vec<Vec<Rational>> = s.coeffs().iter().map(|c| c.series(*order)).collect::<Result<_, _>>()?;
            match f {
                Format::Json => {
                    let t: Vec<Vec<String>> = table.iter().map(|row| row.iter().map(r).collect()).collect();
                    out.json(&json!({"group": desc.label(), "bc": bc, "kind": format!("{kind:?}").to_lowercase(), "series": s, "coefficients": t}))?
                }
                Format::Csv => out.csv(
                    &["z_power", "l", "coefficient"],
                    table
                        .iter()
                        .enumerate()
                        .flat_map(|(k, row)| row.iter().enumerate().map(move |(l, c)| vec![k.to_string(), l.to_string(), r(c)]))
                        .collect(),
                ),
                Format::Text => {
                    out.line(format!("{} {bc} {:?}: {s}", desc.label(), kind));
                    for (k, row) in table.iter().enumerate() {
                        out.line(format!("z^{k}: {}", row.iter().map(r).collect::<Vec<_>>().join(" ")));
                    }
                }
            }
        }
        Command::Degeneracy { sel, bc, p, lmax } => {
            let desc = sel.resolve()?;
            let bc: BoundaryCondition = (*bc).into();
            if *p >= desc.d() as usize {
                return Err(usage(format!("--p {p} out of range 0..{}", desc.d())));
            }
            let degs = degeneracies(&desc, bc, *p, *lmax)?;
            let series = gce(&desc, bc)?.coeff(*p);
            match f {
                Format::Json => out.json(&json!({
                    "group": desc.label(), "bc": bc, "p": p, "series": series,
                    "degeneracies": degs.iter().map(r).collect::<Vec<_>>()
                }))?,
                Format::Csv => out.csv(&["l", "degeneracy"], degs.iter().enumerate().map(|(l, g)| vec![l.to_string(), r(g)]).collect()),
                Format::Text => {
                    out.line(format!("{} {bc} p={p}: {series}", desc.label()));
                    for (l, g) in degs.iter().enumerate() {
                        out.line(format!("{l} {}", r(g)));
                    }
                }
            }
        }
        Command::Zeta { sel, p, bc, at } => {
            let desc = sel.resolve()?;
            let p = middle_or(&desc, *p)?;
            let s = parse_rational(at).map_err(|e| usage(e.to_string()))?;
            let bc: BoundaryCondition = (*bc).into();
            let d = desc.d() as usize;
            let middle = d % 2 == 1 && 2 * p + 1 == d;
            let v = if middle { zeta_ce_value(&desc, p, &s)? } else { modified_zeta_value(&desc, p, bc, &s)? };
            match f {
                Format::Json => out.json(&json!({"group": desc.label(), "d": d, "p": p, "bc": bc, "s": r(&s), "value": r(&v)}))?,
                Format::Csv => out.csv(&["group", "d", "p", "bc", "s", "value"], vec![vec![desc.label(), d.to_string(), p.to_string(), bc.to_string(), r(&s), r(&v)]]),
                Format::Text => out.line(r(&v)),
            }
        }
        Command::Heatcoeffs { sel, p, bc } => {
            let desc = sel.resolve()?;
            let p = middle_or(&desc, *p)?;
            let bc: BoundaryCondition = (*bc).into();
            let h = heat_coefficients_bc(&desc, bc, p)?;
            match f {
                Format::Json => out.json(&json!({"group": desc.label(), "p": p, "bc": bc, "heat_coefficients": h}))?,
                Format::Csv => out.csv(&["k", "coefficient", "sqrt_pi"], h.iter().map(|c| vec![c.k.to_string(), r(&c.coefficient), c.sqrt_pi.to_string()]).collect()),
                Format::Text => {
                    for c in &h {
                        out.line(format!("C_{}/2 = {c}", c.k));
                    }
                }
            }
        }
        Command::Casimir { sel, p } => {
            let desc = sel.resolve()?;
            let p = middle_or(&desc, *p)?;
            let e = casimir_energy(&desc, p)?;
            match f {
                Format::Json => out.json(&json!({"group": desc.label(), "p": p, "casimir": r(&e)}))?,
                Format::Csv => return Err(no_csv("casimir")),
                Format::Text => out.line(r(&e)),
            }
        }
        Command::Eta { sel, kind, digits } => {
            let desc = sel.resolve()?;
            if *digits < 40 {
                return Err(usage("--digits must be at least 40 for recognition"));
            }
            let kind = match kind {
                KindArg::Signature => EtaKind::Signature,
                KindArg::Dirac => EtaKind::Dirac,
            };
            let res = eta_invariant(&desc, kind, *digits, cache)?;
            match f {
                Format::Json => out.json(&res)?,
                Format::Csv => out.csv(
                    &["order", "a", "b", "class_size", "unit_eigenvalue", "contribution"],
                    res.class_breakdown
                        .iter()
                        .map(|c| {
                            vec![
                                c.class.order.to_string(),
                                c.class.a.to_string(),
                                c.class.b.to_string(),
                                c.class.class_size.to_string(),
                                c.class.has_unit_eigenvalue.to_string(),
                                c.contribution.value.clone(),
                            ]
                        })
                        .collect(),
                ),
                Format::Text => {
                    out.line(format!("{} {kind} eta = {}", res.group, res.numeric.value));
                    match &res.recognized {
                        Some(q) => out.line(format!("recognized: {q}")),
                        None => out.line("recognized: no match"),
                    }
                }
            }
        }
        Command::Counting { sel, bc, p, lmax, at } => {
            let desc = sel.resolve()?;
            let p = middle_or(&desc, *p)?;
            let bc: BoundaryCondition = (*bc).into();
            let ctx = CountingContext::new(&desc, bc, p, *lmax)?;
            if let Some(at) = at {
                let lambda = parse_rational(at).map_err(|e| usage(e.to_string()))?;
                let n = ctx.counting_function(&lambda)?;
                match f {
                    Format::Json => out.json(&json!({"group": desc.label(), "bc": bc, "p": p, "lambda": r(&lambda), "count": r(&n)}))?,
                    Format::Csv => out.csv(&["lambda", "count"], vec![vec![r(&lambda), r(&n)]]),
                    Format::Text => out.line(r(&n)),
                }
                return Ok(true);
            }
            let rows: Vec<Vec<String>> = (0..=*lmax)
                .map(|l| {
                    let g = &ctx.degeneracies[l];
                    let acc = &ctx.accumulated_values[l];
                    let above = acc + g / Rational::from_integer(2.into());
                    vec![l.to_string(), r(&ctx.eigenvalue(l as u64)), r(g), r(acc), r(&above)]
                })
                .collect();
            match f {
                Format::Json => out.json(&json!({
                    "group": desc.label(), "bc": bc, "p": p, "accumulated_series": ctx.accumulated,
                    "rows": rows.iter().map(|x| json!({"l": x[0], "lambda": x[1], "degeneracy": x[2], "G": x[3], "N_above": x[4]})).collect::<Vec<_>>()
                }))?,
                Format::Csv | Format::Text => out.csv(&["l", "lambda", "degeneracy", "G", "N_above"], rows),
            }
        }
        Command::Weyl { sel, p, bc, lmax } => {
            let desc = sel.resolve()?;
            let p = middle_or(&desc, *p)?;
            let w = weyl_leading(&desc, (*bc).into(), p, *lmax)?;
            match f {
                Format::Json => out.json(&w)?,
                Format::Csv => return Err(no_csv("weyl")),
                Format::Text => {
                    out.line(format!("constant = {} = {}", r(&w.constant), w.constant_numeric));
                    out.line(format!("ratio at l={} : {:.6} (shifted λ+5: {:.6})", w.l, w.ratio, w.ratio_shifted));
                }
            }
        }
        Command::WeylPolya { sel, order } => {
            let desc = sel.resolve()?;
            let rep = weyl_polya_report(&desc, *order)?;
            match f {
                Format::Json => out.json(&rep)?,
                Format::Csv => out.csv(
                    &["i", "expected", "holds", "first_violation", "zero_coefficients"],
                    rep.ranks
                        .iter()
                        .map(|s| {
                            vec![
                                s.i.to_string(),
                                s.expected.to_string(),
                                s.holds.to_string(),
                                s.first_violation.map(|v| v.to_string()).unwrap_or_default(),
                                s.zero_coefficients.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(" "),
                            ]
                        })
                        .collect(),
                ),
                Format::Text => {
                    out.line(format!("{} W = {}", rep.group, rep.big_w));
                    out.line(format!(
                        "anti-reciprocal {} middle {:?} W(1)=0 {} W(-1)=0 {:?}",
                        rep.anti_reciprocal, rep.middle_vanishes, rep.vanishes_at_one, rep.vanishes_at_minus_one
                    ));
                    for s in &rep.ranks {
                        out.line(format!(
                            "w_{} {} through σ^{}: {}{}",
                            s.i,
                            s.expected,
                            rep.order,
                            if s.holds { "holds" } else { "violated" },
                            if s.zero_coefficients.is_empty() { String::new() } else { format!(" (zeros at {:?})", s.zero_coefficients) }
                        ));
                    }
                }
            }
            return Ok(rep.structure_holds);
        }
        Command::Verify { order, suite, digits } => {
            let suite = match suite {
                SuiteArg::Identities => Suite::Identities,
                SuiteArg::Regression => Suite::Regression,
                SuiteArg::All => Suite::All,
            };
            let checks = run_suite(suite, *order, *digits, cache)?;
            let ok = checks.iter().all(|c| c.passed);
            match f {
                Format::Json => out.json(&json!({"passed": ok, "checks": checks}))?,
                Format::Csv => out.csv(
                    &["check", "group", "detail", "status"],
                    checks.iter().map(|c| vec![c.name.clone(), c.group.clone(), c.detail.clone(), status(c.passed)]).collect(),
                ),
                Format::Text => {
                    for c in &checks {
                        out.line(format!("{:<4} {:<28} {:<14} {}", status(c.passed), c.name, c.group, c.detail));
                    }
                    let failed = checks.iter().filter(|c| !c.passed).count();
                    out.line(format!("{} checks, {failed} failed", checks.len()));
                }
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn status(ok: bool) -> String {
    if ok { "PASS" } else { "FAIL" }.to_string()
}

fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Runs a parsed command, writing to `stdout`; returns the exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut out = Out { format: cli.format, buf: String::new() };
    let _ = out.format;
    let code = match execute(cli, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            return 2;
        }
        Err(CliError::Compute(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let _ = stdout.write_all(out.buf.as_bytes());
    code
}

/// Entry point for the binary.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
