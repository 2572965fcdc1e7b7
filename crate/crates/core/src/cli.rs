//! Command-line front end. Machine-readable results go to `out` as
//! tab-separated lines; diagnostics go to `err`.
//!
//! Exit codes: 0 success, 1 negative answer (not isomorphic, invalid table,
//! failed cross-check), 2 usage, 3 malformed input, 4 capability bound.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::enumerate::{
    brute_force_quandles, builtin_catalog, classify, enumerate_connected_quandles_with,
    obstruction_check, Catalog, BUILTIN_MAX_DEGREE,
};
use crate::error::Error;
use crate::families::{
    affine_quandle, galkin, ncycles_envelope, platonic_envelope, psl3_2_envelope, sl2_envelope,
    tuple_envelope_alt, tuple_envelope_sym, two_subsets_envelope, AbelianGroup, AutMap,
    PlatonicOutcome, Solid,
};
use crate::quandle::Quandle;

#[derive(Parser, Debug)]
#[command(
    name = "quandles",
    version,
    about = "Connected quandles from transitive groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count connected quandles of one order: q, latin, affine.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Catalog file of transitive groups; required above degree 8.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Envelope)]
        method: Method,
        /// Directory for quandle files and summary.tsv.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Validate a quandle file and print its properties.
    Check { path: PathBuf },
    /// Find an isomorphism between two quandle files.
    Iso { first: PathBuf, second: PathBuf },
    /// Build a quandle from a named family.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated key=value pairs.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the built-in catalog of a degree, or validate a catalog file.
    Catalog {
        #[arg(
            long,
            required_unless_present = "validate",
            conflicts_with = "validate"
        )]
        degree: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        validate: Option<PathBuf>,
    },
    /// List the groups of an even-degree catalog meeting both envelope conditions.
    Obstruct {
        #[arg(long, required_unless_present = "degree", conflicts_with = "degree")]
        catalog: Option<PathBuf>,
        /// Use the built-in catalog of this degree instead of a file.
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Envelope,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Affine,
    Galkin,
    TwoSubsets,
    NCycles,
    SymTuples,
    AltTuples,
    Sl2,
    #[value(name = "psl3-2")]
    Psl32,
    Platonic,
}

/// Why a command stopped, with its exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            msg: msg.into(),
        }
    }

    fn negative(msg: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::TooLarge { .. } | Error::Unsupported(_) => 4,
            Error::Inconsistency(_) | Error::NotConnected => 1,
            _ => 3,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure {
            code: 3,
            msg: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let res = match cli.command {
        Command::Enumerate {
            order,
            catalog,
            method,
            out: dir,
            threads,
        } => enumerate(
            order,
            catalog.as_deref(),
            method,
            dir.as_deref(),
            threads,
            out,
            err,
        ),
        Command::Check { path } => check(&path, out),
        Command::Iso { first, second } => iso(&first, &second, out),
        Command::Construct {
            family,
            params,
            out: path,
        } => construct(family, &params, path.as_deref(), out),
        Command::Catalog {
            degree,
            out: path,
            validate,
        } => catalog(degree, path.as_deref(), validate.as_deref(), out, err),
        Command::Obstruct { catalog, degree } => obstruct(catalog.as_deref(), degree, out, err),
    };
    match res {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn load_catalog(path: &Path, err: &mut dyn Write) -> std::result::Result<Catalog, Failure> {
    let (c, warnings) = Catalog::load(path)?;
    for w in warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    Ok(c)
}

fn read_quandle(path: &Path) -> std::result::Result<Quandle, Failure> {
    Ok(Quandle::parse(&std::fs::read_to_string(path)?)?)
}

fn enumerate(
    order: usize,
    catalog: Option<&Path>,
    method: Method,
    dir: Option<&Path>,
    threads: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if order == 0 {
        return Err(Failure::usage("--order must be positive"));
    }
    let envelope = if method == Method::Oracle {
        None
    } else {
        let cat = match catalog {
            Some(p) => load_catalog(p, err)?,
            None if order <= BUILTIN_MAX_DEGREE => builtin_catalog(order)?,
            None => {
                return Err(Failure {
                    code: 4,
                    msg: format!("order {order} is above the built-in catalogs (max {BUILTIN_MAX_DEGREE}); pass --catalog"),
                })
            }
        };
        if cat.degree() != order {
            return Err(Failure {
                code: 3,
                msg: format!(
                    "catalog has degree {}, but --order is {order}",
                    cat.degree()
                ),
            });
        }
        Some(enumerate_connected_quandles_with(&cat, threads)?)
    };
    let oracle = if method == Method::Envelope {
        None
    } else {
        Some(brute_force_quandles(order)?)
    };
    if let (Some(e), Some(o)) = (&envelope, &oracle) {
        if e.matching(o).is_none() {
            return Err(Failure::negative(format!(
                "envelope enumeration ({}) and oracle ({}) disagree at order {order}",
                e.len(),
                o.len()
            )));
        }
        let _ = writeln!(err, "oracle agrees: {} quandles matched", e.len());
    }
    let result = envelope.or(oracle).expect("one method ran");
    let counts = classify(&result)?;
    writeln!(out, "{counts}")?;
    if let Some(dir) = dir {
        result.export(dir)?;
    }
    Ok(0)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn check(path: &Path, out: &mut dyn Write) -> CmdResult {
    let q = match Quandle::parse(&std::fs::read_to_string(path)?) {
        Ok(q) => q,
        Err(
            e @ (Error::NotIdempotent(_)
            | Error::ColumnNotBijective(_)
            | Error::NotRightDistributive { .. }),
        ) => {
            writeln!(out, "valid\tno\t{e}")?;
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let connected = q.is_connected();
    let medial = q.is_medial();
    let orbits: Vec<usize> = q.orbits().iter().map(Vec::len).collect();
    writeln!(out, "valid\tyes")?;
    writeln!(out, "order\t{}", q.order())?;
    writeln!(out, "connected\t{}", yes_no(connected))?;
    writeln!(out, "latin\t{}", yes_no(q.is_latin()))?;
    writeln!(out, "medial\t{}", yes_no(medial))?;
    writeln!(
        out,
        "affine\t{}",
        if connected { yes_no(medial) } else { "-" }
    )?;
    writeln!(out, "rmlt_order\t{}", q.rmlt().order())?;
    writeln!(out, "dis_order\t{}", q.dis().order())?;
    writeln!(out, "orbit_sizes\t{}", join(&orbits))?;
    writeln!(
        out,
        "translation_class_sizes\t{}",
        join(&q.translation_class_sizes())
    )?;
    Ok(0)
}

fn iso(a: &Path, b: &Path, out: &mut dyn Write) -> CmdResult {
    let (qa, qb) = (read_quandle(a)?, read_quandle(b)?);
    match qa.are_isomorphic(&qb) {
        Some(phi) => {
            writeln!(out, "isomorphic\t{phi}")?;
            Ok(0)
        }
        None => {
            writeln!(out, "not isomorphic")?;
            Ok(1)
        }
    }
}

fn parse_params(s: &str) -> std::result::Result<BTreeMap<String, String>, Failure> {
    let mut map = BTreeMap::new();
    for pair in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = pair
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("parameter `{pair}` is not key=value")))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

struct Params {
    map: BTreeMap<String, String>,
}

impl Params {
    fn take(&mut self, key: &str) -> Option<String> {
        self.map.remove(key)
    }

    fn need(&mut self, key: &str) -> std::result::Result<String, Failure> {
        self.take(key)
            .ok_or_else(|| Failure::usage(format!("missing parameter `{key}`")))
    }

    fn number(&mut self, key: &str) -> std::result::Result<usize, Failure> {
        let v = self.need(key)?;
        v.parse().map_err(|_| {
            Failure::usage(format!(
                "parameter `{key}` must be a positive integer, got `{v}`"
            ))
        })
    }

    fn finish(self) -> std::result::Result<(), Failure> {
        match self.map.keys().next() {
            Some(k) => Err(Failure::usage(format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }
}

fn construct(family: Family, params: &str, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let mut p = Params {
        map: parse_params(params)?,
    };
    let q = match family {
        Family::Affine => {
            let a = AbelianGroup::parse(&p.need("a")?)?;
            let f = match (p.take("f"), p.take("basis")) {
                (Some(k), None) => {
                    let k: i64 = k.parse().map_err(|_| {
                        Failure::usage(format!("parameter `f` must be an integer, got `{k}`"))
                    })?;
                    AutMap::scalar(&a, k)?
                }
                (None, Some(b)) => {
                    let images = b
                        .split(':')
                        .map(|e| a.parse_element(e))
                        .collect::<crate::Result<Vec<usize>>>()?;
                    AutMap::from_basis_images(&a, &images).ok_or(Error::NotAnAutomorphism)?
                }
                _ => {
                    return Err(Failure::usage(
                        "affine needs exactly one of `f` (scalar) or `basis`",
                    ))
                }
            };
            affine_quandle(&a, &f)
        }
        Family::Galkin => {
            let a = AbelianGroup::parse(&p.need("a")?)?;
            let u = match p.take("u") {
                Some(u) => a.parse_element(&u)?,
                None => 0,
            };
            galkin(&a, u)?
        }
        Family::TwoSubsets => two_subsets_envelope(p.number("n")?)?.quandle()?,
        Family::NCycles => ncycles_envelope(p.number("n")?)?.quandle()?,
        Family::SymTuples => tuple_envelope_sym(p.number("n")?)?.quandle()?,
        Family::AltTuples => tuple_envelope_alt(p.number("n")?)?.quandle()?,
        Family::Sl2 => sl2_envelope(p.number("q")?)?.quandle()?,
        Family::Psl32 => psl3_2_envelope()?.quandle()?,
        Family::Platonic => {
            let solid: Solid = p.need("solid")?.parse()?;
            match platonic_envelope(solid)? {
                PlatonicOutcome::Envelope(e) => e.quandle()?,
                PlatonicOutcome::Obstruction { reason, .. } => {
                    return Err(Failure::negative(format!(
                        "{solid} gives no envelope: {reason}"
                    )))
                }
            }
        }
    };
    p.finish()?;
    match path {
        Some(path) => std::fs::write(path, q.to_text())?,
        None => out.write_all(q.to_text().as_bytes())?,
    }
    Ok(0)
}

fn catalog(
    degree: Option<usize>,
    path: Option<&Path>,
    validate: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    if let Some(v) = validate {
        let c = load_catalog(v, err)?;
        writeln!(out, "valid\t{}\t{}", c.degree(), c.len())?;
        return Ok(0);
    }
    let c = builtin_catalog(degree.expect("clap requires --degree"))?;
    match path {
        Some(path) => c.save(path)?,
        None => out.write_all(c.to_text().as_bytes())?,
    }
    Ok(0)
}

fn obstruct(
    path: Option<&Path>,
    degree: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let c = match (path, degree) {
        (Some(p), _) => load_catalog(p, err)?,
        (None, Some(d)) => builtin_catalog(d)?,
        (None, None) => return Err(Failure::usage("pass --catalog or --degree")),
    };
    let report = obstruction_check(&c)?;
    out.write_all(report.to_tsv().as_bytes())?;
    let survivors = report.survivors();
    if survivors.is_empty() {
        writeln!(out, "survivors\tnone")?;
    } else {
        writeln!(out, "survivors\t{}", join(&survivors))?;
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["quandles"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn enumerate_order_six() {
        assert_eq!(
            run_str(&["enumerate", "--order", "6"]),
            (0, "2\t0\t0\n".into(), String::new())
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&[]).0, 2);
        assert_eq!(run_str(&["enumerate", "--order", "3", "--bogus"]).0, 2);
        assert_eq!(
            run_str(&["construct", "--family", "sl2", "--params", "q=3,z=1"]).0,
            2
        );
        assert_eq!(
            run_str(&["construct", "--family", "sl2", "--params", "q"]).0,
            2
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(run_str(&["enumerate", "--order", "9"]).0, 4);
        assert_eq!(
            run_str(&["enumerate", "--order", "11", "--method", "oracle"]).0,
            4
        );
        assert_eq!(
            run_str(&["construct", "--family", "sl2", "--params", "q=6"]).0,
            4
        );
    }

    #[test]
    fn construct_prints_a_table() {
        let (code, out, _) = run_str(&["construct", "--family", "affine", "--params", "a=3,f=2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "quandle 3\n1 3 2\n3 2 1\n2 1 3\n");
    }

    #[test]
    fn octahedron_is_refused() {
        let (code, _, err) = run_str(&[
            "construct",
            "--family",
            "platonic",
            "--params",
            "solid=octahedron",
        ]);
        assert_eq!(code, 1);
        assert!(err.contains("no envelope"));
    }
}
