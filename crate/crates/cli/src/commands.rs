use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs::File;
use std::path::Path;
use std::str::FromStr;

use vagueset::dataset::{self, DatasetSummary};
use vagueset::eventology::to_real;
use vagueset::syntagma::{eval_event, eval_tnorm, eval_vague};
use vagueset::{
    derive_vague_curve, parse, Expr, SelectionMatrix, Share, StepCurve, TNormKind, Universe,
};

use crate::config::Config;
use crate::error::CliError;
use crate::render::{fixed, step_plot, trimmed, Series, PALETTE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    Event,
    Vague,
    TNorm(TNormKind),
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "event" => Ok(Semantics::Event),
            "vague" => Ok(Semantics::Vague),
            other => other
                .strip_prefix("tnorm:")
                .and_then(|k| k.parse().ok())
                .map(Semantics::TNorm)
                .ok_or_else(|| {
                    format!("unknown semantics {other:?} (event, vague, tnorm:min, tnorm:prod, tnorm:luk)")
                }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Svg,
}

pub fn load_dataset(path: &Path, universe: Universe) -> Result<(SelectionMatrix, DatasetSummary), CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::Data(format!("cannot open dataset {}: {e}", path.display())))?;
    Ok(dataset::load_matrix(file, universe)?)
}

fn check_atoms(expr: &Expr, matrix: &SelectionMatrix) -> Result<(), CliError> {
    for atom in expr.atoms() {
        matrix.row(atom)?;
    }
    Ok(())
}

pub fn validate(path: &Path, cfg: &Config) -> Result<String, CliError> {
    let universe = cfg.universe()?;
    let (matrix, summary) = load_dataset(path, universe)?;
    let mut out = String::new();
    writeln!(
        out,
        "ok subjects={} names={} judgments={}",
        matrix.population(),
        matrix.names().len(),
        summary.rows
    )
    .unwrap();
    for name in matrix.names() {
        let row = matrix.row(name)?;
        let covered = row
            .regions()
            .iter()
            .try_fold(universe.empty(), |acc, r| acc.union(r))
            .map_err(|e| CliError::Internal(e.to_string()))?;
        let (pro, contra) = summary.per_name.get(name).copied().unwrap_or_default();
        writeln!(
            out,
            "name={name} for={pro} against={contra} coverage={}",
            fixed(covered.measure() / universe.width(), cfg.precision)
        )
        .unwrap();
    }
    Ok(out)
}

pub fn eval(
    path: &Path,
    text: &str,
    semantics: Semantics,
    format: Format,
    cfg: &Config,
) -> Result<String, CliError> {
    let expr = parse(text)?;
    let universe = cfg.universe()?;
    let hedges = cfg.hedges()?;
    let (matrix, _) = load_dataset(path, universe)?;
    check_atoms(&expr, &matrix)?;
    let p = cfg.precision;
    let title = expr.to_text();

    let mut out = String::new();
    match semantics {
        Semantics::Event => {
            let curve = eval_event(&expr, &matrix, &hedges)?;
            if format == Format::Svg {
                let s = Series::from_curve(&title, PALETTE[0], &curve, |g| g.to_f64());
                return Ok(step_plot(&title, universe, &[s], cfg));
            }
            out.push_str("omega,value,value_exact\n");
            for (omega, grade) in curve.sample(cfg.step) {
                let exact = grade.exact().map(|s| s.to_string()).unwrap_or_default();
                writeln!(out, "{},{},{exact}", trimmed(omega, p), fixed(grade.to_f64(), p)).unwrap();
            }
        }
        Semantics::Vague => {
            let bindings = expr
                .atoms()
                .into_iter()
                .map(|n| Ok((n.to_owned(), derive_vague_curve(&matrix, n)?)))
                .collect::<Result<HashMap<_, _>, CliError>>()?;
            let curve = eval_vague(&expr, &bindings, &hedges)?;
            if format == Format::Svg {
                let series = [
                    Series::from_curve("t (lower)", PALETTE[0], &curve, |v| v.t()),
                    Series::from_curve("1 - f (upper)", PALETTE[1], &curve, |v| 1.0 - v.f()),
                ];
                return Ok(step_plot(&title, universe, &series, cfg));
            }
            out.push_str("omega,t,f,lower,upper\n");
            for (omega, v) in curve.sample(cfg.step) {
                let (lower, upper) = v.span();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    trimmed(omega, p),
                    fixed(v.t(), p),
                    fixed(v.f(), p),
                    fixed(lower, p),
                    fixed(upper, p)
                )
                .unwrap();
            }
        }
        Semantics::TNorm(kind) => {
            let bindings = expr
                .atoms()
                .into_iter()
                .map(|n| Ok((n.to_owned(), to_real(&matrix.row(n)?.membership()?))))
                .collect::<Result<HashMap<_, _>, CliError>>()?;
            let curve = eval_tnorm(&expr, kind, &bindings, &hedges)?;
            if format == Format::Svg {
                let s = Series::from_curve(format!("{title} [{kind}]"), PALETTE[0], &curve, |v| *v);
                return Ok(step_plot(&title, universe, &[s], cfg));
            }
            out.push_str("omega,value\n");
            for (omega, v) in curve.sample(cfg.step) {
                writeln!(out, "{},{}", trimmed(omega, p), fixed(*v, p)).unwrap();
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Connective {
    And,
    Or,
}

fn comparison_operands(expr: &Expr) -> Result<(Connective, &str, &str), CliError> {
    let unsupported = || {
        CliError::usage(format!(
            "UnsupportedComparison: {} is not a single 'and'/'or' of two distinct atoms",
            expr.to_text()
        ))
    };
    let (conn, a, b) = match expr {
        Expr::And(a, b) => (Connective::And, a, b),
        Expr::Or(a, b) => (Connective::Or, a, b),
        _ => return Err(unsupported()),
    };
    match (a.as_ref(), b.as_ref()) {
        (Expr::Atom(x), Expr::Atom(y)) if x != y => Ok((conn, x, y)),
        _ => Err(unsupported()),
    }
}

/// One piece of the comparison: exact shares of `x`, `y` and the
/// Minkowski combination.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Triple {
    p: Share,
    q: Share,
    r: Share,
}

impl Triple {
    fn tnorms(&self, conn: Connective) -> [f64; 3] {
        let (p, q) = (self.p.to_f64(), self.q.to_f64());
        TNormKind::ALL.map(|k| match conn {
            Connective::And => k.tnorm(p, q),
            Connective::Or => k.tconorm(p, q),
        })
    }

    /// Exact Fréchet envelope check on subject counts.
    fn frechet_ok(&self, conn: Connective) -> bool {
        let m = self.p.population();
        let (p, q, r) = (self.p.count(), self.q.count(), self.r.count());
        match conn {
            Connective::And => (p + q).saturating_sub(m) <= r && r <= p.min(q),
            Connective::Or => p.max(q) <= r && r <= (p + q).min(m),
        }
    }
}

pub fn compare(path: &Path, text: &str, format: Format, cfg: &Config) -> Result<String, CliError> {
    let expr = parse(text)?;
    let (conn, x, y) = comparison_operands(&expr)?;
    let universe = cfg.universe()?;
    let (matrix, _) = load_dataset(path, universe)?;
    check_atoms(&expr, &matrix)?;

    let (ex, ey) = (matrix.row(x)?, matrix.row(y)?);
    let combined = match conn {
        Connective::And => ex.and(&ey)?,
        Connective::Or => ex.or(&ey)?,
    };
    let pq = ex.membership()?.zip_with(&ey.membership()?, |p, q| (*p, *q));
    let triples: StepCurve<Triple> = pq
        .and_then(|pq| pq.zip_with(&combined.membership().ok()?, |&(p, q), r| Triple { p, q, r: *r }))
        .ok_or_else(|| CliError::Internal("rows disagree on the universe".into()))?
        .merged();

    let mut deviation = [0.0f64; 3];
    let mut all_ok = true;
    for (_, _, t) in triples.pieces() {
        let mink = t.r.to_f64();
        for (d, v) in deviation.iter_mut().zip(t.tnorms(conn)) {
            *d = d.max((v - mink).abs());
        }
        all_ok &= t.frechet_ok(conn);
    }

    let p = cfg.precision;
    let out = match format {
        Format::Svg => {
            let mut series = vec![Series::from_curve("minkowski", PALETTE[0], &triples, |t| t.r.to_f64())];
            for (i, kind) in TNormKind::ALL.into_iter().enumerate() {
                series.push(Series::from_curve(format!("t_{kind}"), PALETTE[i + 1], &triples, |t| {
                    t.tnorms(conn)[i]
                }));
            }
            step_plot(&expr.to_text(), universe, &series, cfg)
        }
        Format::Csv => {
            let mut out = String::from("omega,minkowski,t_min,t_prod,t_luk,frechet_ok\n");
            for (omega, t) in triples.sample(cfg.step) {
                let [tmin, tprod, tluk] = t.tnorms(conn);
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    trimmed(omega, p),
                    fixed(t.r.to_f64(), p),
                    fixed(tmin, p),
                    fixed(tprod, p),
                    fixed(tluk, p),
                    t.frechet_ok(conn)
                )
                .unwrap();
            }
            writeln!(
                out,
                "# max_deviation t_min={} t_prod={} t_luk={}",
                fixed(deviation[0], p),
                fixed(deviation[1], p),
                fixed(deviation[2], p)
            )
            .unwrap();
            out
        }
    };
    if !all_ok {
        return Err(CliError::Internal(format!(
            "Minkowski {} left the Fréchet envelope\n{out}",
            expr.to_text()
        )));
    }
    Ok(out)
}

pub fn example(seed: u64, subjects: usize) -> Result<String, CliError> {
    Ok(dataset::generate_example(seed, subjects)?)
}
