//! Verification suites. Every suite yields a count of checks and a sorted
//! list of failure descriptions.

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use superschur::keyops::{check_identity, Identity};
use superschur::pieri::{verify_against_oracle, PieriKind};
use superschur::schur::{cauchy_slices, duality_suite, schur, Family};
use superschur::tableaux::{enumerate_from, generating_function, reconstruct, weight_of, Filling};
use superschur::SuperPartition;

use crate::commands::{parse, CliError, Out};
use crate::limits::Limits;
use crate::render::pretty;
use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    PieriOracle,
    Dualities,
    Cauchy,
    Appendix,
    Tableaux,
}

#[derive(Debug)]
pub struct Bounds {
    pub n: usize,
    pub m: usize,
    pub ell: usize,
    pub nx: usize,
    pub ny: usize,
    pub deg: usize,
    pub seed: u64,
    pub count: usize,
    pub identity: Option<String>,
}

#[derive(Serialize)]
struct Report {
    suite: Suite,
    passed: bool,
    checks: usize,
    failures: Vec<String>,
}

fn pieri_oracle(b: &Bounds) -> (usize, Vec<String>) {
    let (cases, failures) = verify_against_oracle(&PieriKind::ALL, b.n, b.m, b.ell);
    let dump = failures
        .iter()
        .map(|f| format!("{} {} l={}: rule {} but product {}", f.kind, f.lambda, f.ell, f.rule, f.brute_force))
        .collect();
    (cases, dump)
}

fn cauchy(b: &Bounds) -> (usize, Vec<String>) {
    let slices = cauchy_slices(b.deg, b.nx, b.ny);
    let bad = slices.iter().filter(|s| !s.holds).map(|s| format!("slice ({}|{}) differs", s.n, s.m)).collect();
    (slices.len(), bad)
}

fn appendix(b: &Bounds) -> Result<(usize, Vec<String>), CliError> {
    let ids: Vec<Identity> = match &b.identity {
        Some(id) => vec![parse("identity", id)?],
        None => Identity::ALL.to_vec(),
    };
    let mut checks = 0;
    let mut bad = Vec::new();
    for id in ids {
        let r = check_identity(id, b.seed, b.count);
        checks += r.instances;
        bad.extend(r.failures.iter().map(|f| format!("{id}: {f}")));
    }
    Ok((checks, bad))
}

/// Generating functions against the Key route, sign bookkeeping, and the
/// diagram round trip.
fn tableaux(b: &Bounds) -> (usize, Vec<String>) {
    let mut work = Vec::new();
    for n in 0..=b.n {
        for m in 0..=b.m {
            for l in SuperPartition::all(n, m) {
                for fam in [Family::S, Family::SBar] {
                    work.push((l.clone(), fam));
                }
            }
        }
    }
    let parts: Vec<(usize, Vec<String>)> = work
        .par_iter()
        .map(|(l, fam)| {
            let mut checks = 1;
            let mut bad = Vec::new();
            let empty = SuperPartition::empty();
            match generating_function(l, &empty, *fam) {
                Ok(g) if g == schur(l, *fam) => {}
                _ => bad.push(format!("{fam} {l}: generating function differs from the Key route")),
            }
            // l doubles as a weight here
            let weight = weight_of(l);
            for t in enumerate_from(&empty, &weight, *fam).unwrap_or_default() {
                checks += 1;
                let diagram = t.render();
                if t.step_sign() != t.sign() {
                    bad.push(format!("{fam} sign mismatch\n{diagram}"));
                }
                let back = diagram.parse::<Filling>().and_then(|f| reconstruct(&f, &empty, weight.len(), *fam));
                if back.as_ref().ok() != Some(&t.chain) {
                    bad.push(format!("{fam} round trip fails\n{diagram}"));
                }
            }
            (checks, bad)
        })
        .collect();
    let mut checks = 0;
    let mut bad = Vec::new();
    for (c, f) in parts {
        checks += c;
        bad.extend(f);
    }
    (checks, bad)
}

pub fn run(limits: &Limits, f: Format, suite: Suite, b: &Bounds) -> Out {
    match suite {
        Suite::Cauchy => {
            limits.degree(b.deg, b.nx.min(b.ny))?;
            limits.vars(b.nx + b.ny)?;
        }
        Suite::Appendix => {}
        _ => limits.degree(b.n + b.ell * usize::from(suite == Suite::PieriOracle), b.m)?,
    }
    let (checks, mut failures) = match suite {
        Suite::PieriOracle => pieri_oracle(b),
        Suite::Dualities => {
            let r = duality_suite(b.n, b.m);
            (r.checks, r.failures)
        }
        Suite::Cauchy => cauchy(b),
        Suite::Appendix => appendix(b)?,
        Suite::Tableaux => tableaux(b),
    };
    failures.sort();
    let report = Report { suite, passed: failures.is_empty(), checks, failures };
    let text = match f {
        Format::Json => pretty(&json!(report)),
        _ => {
            let name = serde_json::to_value(suite).expect("suite names serialize");
            let name = name.as_str().unwrap_or_default().to_string();
            let status = if report.passed { "pass" } else { "FAIL" };
            let mut out = format!("{name}: {status} ({checks} checks, {} failures)", report.failures.len());
            for x in &report.failures {
                out.push_str("\n- ");
                out.push_str(&x.replace('\n', "\n  "));
            }
            out
        }
    };
    if report.passed {
        Ok(text)
    } else {
        Err(CliError::Failed(text))
    }
}
