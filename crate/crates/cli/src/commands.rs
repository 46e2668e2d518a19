use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;
use uhlenbeck::bvariety::{self, BTriple};
use uhlenbeck::calogero::{self, CmPair};
use uhlenbeck::ic;
use uhlenbeck::nc::{self, NcWord};
use uhlenbeck::partition::{partition_counts, partitions};
use uhlenbeck::quiver::{self, DimVector, QuiverRep, Verdict};
use uhlenbeck::{sample, Rat};

use crate::args::{BvarCommand, CmCommand, Command, IcCommand, NcCommand, QuiverCommand, TauArg};
use crate::output::{Output, Table};

pub enum Failure {
    /// Bad input or a failed precondition: exit code 1.
    Domain(String),
    /// Flags that do not make sense together: exit code 2.
    Usage(String),
}

impl From<uhlenbeck::Error> for Failure {
    fn from(e: uhlenbeck::Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

type Run = Result<Output, Failure>;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Domain(format!("cannot parse {}: {e}", path.display())))
}

pub fn run(command: &Command, seed: u64) -> Run {
    match command {
        Command::Nc(c) => run_nc(c),
        Command::Quiver(c) => run_quiver(c, seed),
        Command::Cm(c) => run_cm(c, seed),
        Command::Bvar(c) => run_bvar(c, seed),
        Command::Ic(c) => run_ic(c),
        Command::Report { n, out } => report(*n, out),
    }
}

#[derive(Serialize)]
struct Term {
    mono: String,
    coeff: String,
}

fn run_nc(command: &NcCommand) -> Run {
    match command {
        NcCommand::NormalForm { tau, word } => {
            let word: NcWord = word.parse()?;
            let nf = nc::normal_form(&word);
            let (element, tau_label) = match tau {
                TauArg::Symbolic => (nf, "t".to_string()),
                TauArg::Value(t) => (nf.specialize(t), t.to_string()),
            };
            let terms: Vec<Term> = element
                .terms()
                .iter()
                .map(|(m, c)| Term {
                    mono: m.to_string(),
                    coeff: c.display_in("t"),
                })
                .collect();
            Ok(Output::ok(json!({ "terms": terms })).with_tau(tau_label))
        }
        NcCommand::Dims { max_degree, tau } => {
            let dual = nc::dual_graded_dims(tau, *max_degree);
            let mut table = Table::new(vec!["degree", "dim", "dual_dim"]);
            let rows: Vec<_> = (0..=*max_degree)
                .map(|i| {
                    let a = nc::graded_dim_a(i);
                    table.push(vec![i.to_string(), a.to_string(), dual[i].to_string()]);
                    json!({ "degree": i, "dim": a, "dual_dim": dual[i] })
                })
                .collect();
            let confluent = nc::rules().is_confluent_at(tau);
            Ok(Output::ok(json!({ "confluent": confluent, "rows": rows }))
                .with_tau(tau)
                .with_table(table))
        }
    }
}

fn run_quiver(command: &QuiverCommand, seed: u64) -> Run {
    match command {
        QuiverCommand::Check { tau, rep } => {
            let mut rep: QuiverRep = read_json(rep)?;
            if let Some(t) = tau {
                rep.tau = t.clone();
            }
            let report = quiver::check_relations(&rep)?;
            Ok(Output::verdict(report.holds, &report).with_tau(&rep.tau))
        }
        QuiverCommand::Stability {
            theta0,
            theta1,
            rep,
            budget,
        } => {
            let rep: QuiverRep = read_json(rep)?;
            let mut thetas = vec![theta0.clone()];
            thetas.extend(theta1.iter().cloned());
            let payload = if rep.dim == DimVector::new(1, 2, 1) {
                let report = quiver::decide_stability_121(&rep, &thetas)?;
                json!({
                    "method": "exact",
                    "verdict": report.verdict,
                    "witness": report.witness,
                    "witness_slopes": report.witness_slopes,
                })
            } else {
                let found = quiver::find_destabilizer(&rep, &thetas, *budget, seed)?;
                let verdict = if found.is_some() {
                    Verdict::Unstable
                } else {
                    Verdict::Unknown
                };
                let slopes = found.as_ref().map(|w| quiver::slope_vector(&thetas, &w.dim));
                json!({
                    "method": "search",
                    "verdict": verdict,
                    "witness": found,
                    "witness_slopes": slopes.unwrap_or_default(),
                })
            };
            Ok(Output::ok(payload).with_tau(&rep.tau))
        }
        QuiverCommand::Alpha { r, d, n } => Ok(Output::ok(quiver::alpha(*r, *d, *n)?)),
    }
}

fn run_cm(command: &CmCommand, seed: u64) -> Run {
    match command {
        CmCommand::Verify { tau, pair } => {
            let mut pair: CmPair = read_json(pair)?;
            if let Some(t) = tau {
                pair.tau = t.clone();
            }
            let membership = pair.verify()?;
            Ok(Output::verdict(membership.is_member(), &membership).with_tau(&pair.tau))
        }
        CmCommand::Sample { n, spectrum, tau } => {
            let spectrum = match (n, spectrum) {
                (Some(n), Some(s)) if s.0.len() != *n => {
                    return Err(Failure::Domain(format!(
                        "--n {n} but the spectrum has {} values",
                        s.0.len()
                    )))
                }
                (_, Some(s)) => s.0.clone(),
                (Some(n), None) => {
                    let span = 10 * (*n as i64) + 10;
                    sample::distinct_ints(&mut sample::rng(seed), *n, -span, span)
                        .into_iter()
                        .map(Rat::from)
                        .collect()
                }
                (None, None) => {
                    return Err(Failure::Usage("give --n or --spectrum".into()));
                }
            };
            let pair = calogero::sample_cm(&spectrum, tau)?;
            Ok(Output::ok(&pair).with_tau(tau))
        }
        CmCommand::FixedPoints { n } => {
            let points = partitions(*n);
            let mut table = Table::new(vec!["lambda"]);
            for p in &points {
                table.push(vec![p.to_string()]);
            }
            Ok(Output::ok(json!({
                "n": n,
                "count": calogero::cm_fixed_point_count(*n),
                "fixed_points": points,
            }))
            .with_table(table))
        }
    }
}

fn run_bvar(command: &BvarCommand, seed: u64) -> Run {
    match command {
        BvarCommand::Check { tau, triple } => {
            let mut t: BTriple = read_json(triple)?;
            if let Some(tau) = tau {
                t.tau = tau.clone();
            }
            let check = bvariety::check_btriple(&t.y, &t.z, &t.v, &t.tau)?;
            Ok(Output::verdict(check.is_valid(), &check).with_tau(&t.tau))
        }
        BvarCommand::Jordan { k, u, tau } => {
            let t = bvariety::jordan_triple(*k, u, tau)?;
            Ok(Output::ok(&t).with_tau(tau))
        }
        BvarCommand::Components { k, tau } => {
            let mut table = Table::new(vec![
                "lambda",
                "orbit_dim",
                "solution_dim",
                "centralizer_formula",
                "total",
            ]);
            let mut rows = Vec::new();
            for lambda in partitions(*k) {
                let c = bvariety::component_dimension(&lambda, tau)?;
                table.push(vec![
                    c.lambda.to_string(),
                    c.orbit_dim.to_string(),
                    c.solution_dim.to_string(),
                    c.centralizer_formula.to_string(),
                    c.total.to_string(),
                ]);
                rows.push(c);
            }
            let consistent = rows.iter().all(|c| c.is_consistent());
            Ok(Output::verdict(consistent, &rows).with_tau(tau).with_table(table))
        }
        BvarCommand::Fiber {
            lambda,
            u,
            tau,
            samples,
        } => {
            let probe = bvariety::fiber_probe(lambda, u, tau, *samples, seed)?;
            Ok(Output::ok(&probe).with_tau(tau))
        }
    }
}

fn run_ic(command: &IcCommand) -> Run {
    match command {
        IcCommand::Stalk { n, m, lambda } => {
            let stalk = ic::ic_stalk(*n, *m, lambda)?;
            Ok(Output::ok(json!({ "poly": stalk, "total": stalk.total() })))
        }
        IcCommand::Betti { n } => {
            let betti = ic::punctual_hilbert_betti(*n)?;
            let mut table = Table::new(vec!["degree", "dim"]);
            for (i, b) in betti.iter().enumerate() {
                table.push(vec![(2 * i).to_string(), b.to_string()]);
            }
            Ok(Output::ok(json!({ "n": n, "betti": betti })).with_table(table))
        }
        IcCommand::Strata { n } => {
            let strata = ic::strata(*n);
            let mut table = Table::new(vec!["m", "lambda", "dim"]);
            for s in &strata {
                table.push(vec![s.m.to_string(), s.lambda.to_string(), s.dim.to_string()]);
            }
            Ok(Output::ok(&strata).with_table(table))
        }
        IcCommand::FixedPoints { n } => {
            let points = ic::uhlenbeck_fixed_points(*n);
            let mut table = Table::new(vec!["lambda", "k0", "k_inf", "attracting"]);
            for p in &points {
                table.push(vec![
                    p.lambda.to_string(),
                    p.k0.to_string(),
                    p.k_inf.to_string(),
                    p.attracting.to_string(),
                ]);
            }
            Ok(Output::ok(json!({
                "n": n,
                "count": ic::uhlenbeck_fixed_point_count(*n),
                "fixed_points": points,
            }))
            .with_table(table))
        }
        IcCommand::Audit { n } => {
            let rows = ic::smallness_audit(*n)?;
            let mut table = Table::new(vec![
                "m",
                "lambda",
                "dim",
                "codim",
                "fiber_bound",
                "stalk",
                "small",
            ]);
            for r in &rows {
                table.push(vec![
                    r.stratum.m.to_string(),
                    r.stratum.lambda.to_string(),
                    r.stratum.dim.to_string(),
                    r.codim.to_string(),
                    r.fiber_bound.to_string(),
                    r.stalk.to_string(),
                    r.small.to_string(),
                ]);
            }
            let small = rows.iter().all(|r| r.small);
            Ok(Output::verdict(small, &rows).with_table(table))
        }
    }
}

const REPORT_MAX: usize = 20;

fn report(n: usize, out: &Path) -> Run {
    if n > REPORT_MAX {
        return Err(Failure::Domain(format!("report needs n <= {REPORT_MAX}, got {n}")));
    }
    let mut strata = Table::new(vec!["m", "lambda", "dim", "codim", "stalk", "total"]);
    for s in ic::strata(n) {
        let stalk = ic::ic_stalk(n, s.m, &s.lambda)?;
        strata.push(vec![
            s.m.to_string(),
            s.lambda.to_string(),
            s.dim.to_string(),
            (2 * n - s.dim).to_string(),
            stalk.to_string(),
            stalk.total().to_string(),
        ]);
    }
    let mut betti = Table::new(vec!["degree", "dim"]);
    if n > 0 {
        for (i, b) in ic::punctual_hilbert_betti(n)?.iter().enumerate() {
            betti.push(vec![(2 * i).to_string(), b.to_string()]);
        }
    }
    let mut fixed = Table::new(vec!["m", "cm_points", "points"]);
    for (m, p) in partition_counts(n).iter().enumerate() {
        fixed.push(vec![m.to_string(), p.to_string(), (p * (n - m + 1) as u64).to_string()]);
    }
    fs::create_dir_all(out)
        .map_err(|e| Failure::Domain(format!("cannot create {}: {e}", out.display())))?;
    let mut files = Vec::new();
    for (name, table) in [
        ("strata.csv", &strata),
        ("betti.csv", &betti),
        ("fixed_points.csv", &fixed),
    ] {
        let text = table
            .to_csv()
            .map_err(|e| Failure::Domain(format!("csv: {e}")))?;
        let path = out.join(name);
        fs::write(&path, text)
            .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?;
        files.push(json!({ "name": name, "rows": table.rows.len() }));
    }
    Ok(Output::ok(json!({
        "n": n,
        "fixed_point_count": ic::uhlenbeck_fixed_point_count(n),
        "files": files,
    })))
}
