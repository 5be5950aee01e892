use serde_json::{json, Value};
use superschur::bases::convert;
use superschur::pieri::{pieri as pieri_terms, PieriKind};
use superschur::schur::{kostka as kostka_matrix, lr as lr_terms, schur_by, Family, KostkaKind, Route};
use superschur::tableaux::{enumerate, parse_weight, weight_to_text, Letter, Tableau};
use superschur::{Basis, SuperPartition, SymSuperFunc};

use crate::limits::Limits;
use crate::render::{join_signed, json_func, json_sp, latex_basis, latex_func, latex_sp, plain_func, pretty};
use crate::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Bounds(String),
    #[error(transparent)]
    Library(#[from] superschur::Error),
    /// A verification report with at least one failure.
    #[error("verification failed")]
    Failed(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Library(superschur::Error::Parse { .. }) => 2,
            CliError::Bounds(_) => 3,
            CliError::Library(_) => 1,
        }
    }
}

pub type Out = Result<String, CliError>;

pub fn parse<T: std::str::FromStr>(what: &str, text: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    text.parse().map_err(|e| CliError::Parse(format!("bad {what} {text:?}: {e}")))
}

fn parse_family(text: &str) -> Result<Family, CliError> {
    parse("family", text)
}

pub fn expand(limits: &Limits, f: Format, family: &str, lambda: &str, basis: &str, route: &str) -> Out {
    let family = parse_family(family)?;
    let lambda: SuperPartition = parse("superpartition", lambda)?;
    let basis: Basis = parse("basis", basis)?;
    let route = match route {
        "key" => Route::Key,
        "pieri" => Route::Pieri,
        _ => return Err(CliError::Parse(format!("bad route {route:?}: expected key or pieri"))),
    };
    limits.degree(lambda.n(), lambda.m())?;
    limits.vars(SuperPartition::max_rows(lambda.n(), lambda.m()))?;
    let m = schur_by(&lambda, family, route)?;
    let out = convert(&m, basis)?;
    Ok(match f {
        Format::Plain => plain_func(&out),
        Format::Json => pretty(&json_func(&out)),
        Format::Latex => format!("{}_{{{}}} = {}", latex_basis(family.basis()), latex_sp(&lambda), latex_func(&out)),
    })
}

pub fn pieri(f: Format, kind: &str, lambda: &str, ell: usize) -> Out {
    let kind: PieriKind = parse("Pieri kind", kind)?;
    let lambda: SuperPartition = parse("superpartition", lambda)?;
    let terms = pieri_terms(kind, &lambda, ell);
    Ok(match f {
        Format::Plain => terms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n"),
        Format::Json => pretty(&json!(terms
            .iter()
            .map(|t| json!({"omega": json_sp(&t.omega), "sign": t.sign}))
            .collect::<Vec<_>>())),
        Format::Latex => {
            let b = latex_basis(kind.family().basis());
            join_signed(terms.iter().map(|t| (t.sign < 0, format!("{b}_{{{}}}", latex_sp(&t.omega)))))
        }
    })
}

pub fn kostka(limits: &Limits, f: Format, n: usize, m: usize, which: &str) -> Out {
    let which: KostkaKind = parse("Kostka kind", which)?;
    limits.degree(n, m)?;
    let k = kostka_matrix(n, m, which);
    let dense = k.dense();
    Ok(match f {
        Format::Plain => {
            let index: Vec<String> = k.index.iter().map(|l| l.to_string()).collect();
            format!("{which} ({n}|{m}), index {}\n{}", index.join(" "), json!(dense))
        }
        Format::Json => pretty(&json!({
            "which": which.name(),
            "n": n,
            "m": m,
            "index": k.index.iter().map(json_sp).collect::<Vec<_>>(),
            "matrix": dense,
        })),
        Format::Latex => {
            let rows: Vec<String> =
                dense.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" & ")).collect();
            format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
        }
    })
}

pub fn lr(limits: &Limits, f: Format, gamma: &str, omega: &str, family: &str) -> Out {
    let gamma: SuperPartition = parse("superpartition", gamma)?;
    let omega: SuperPartition = parse("superpartition", omega)?;
    let family = parse_family(family)?;
    limits.degree(gamma.n() + omega.n(), gamma.m() + omega.m())?;
    let terms = lr_terms(&gamma, &omega, family)?;
    let func = SymSuperFunc::from_terms(family.basis(), terms.into_iter().map(|(k, v)| (k, v.into())));
    Ok(match f {
        Format::Plain => plain_func(&func),
        Format::Json => pretty(&json_func(&func)),
        Format::Latex => {
            let b = latex_basis(family.basis());
            format!("{b}_{{{}}}\\,{b}_{{{}}} = {}", latex_sp(&gamma), latex_sp(&omega), latex_func(&func))
        }
    })
}

fn chain_text(t: &Tableau) -> String {
    t.chain.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn tableaux(f: Format, lambda: &str, omega: &str, weight: &str, family: Option<&str>) -> Out {
    let lambda: SuperPartition = parse("superpartition", lambda)?;
    let omega: SuperPartition = parse("superpartition", omega)?;
    let weight: Vec<Letter> = parse_weight(weight).map_err(|e| CliError::Parse(e.to_string()))?;
    let families = match family {
        Some(text) => vec![parse_family(text)?],
        None => vec![Family::S, Family::SBar],
    };
    let mut text = Vec::new();
    let mut values = Vec::new();
    for family in families {
        let (t, v) = tableaux_for(f, &lambda, &omega, &weight, family)?;
        text.push(t);
        values.push(v);
    }
    Ok(match f {
        Format::Json if values.len() == 1 => pretty(&values[0]),
        Format::Json => pretty(&Value::Array(values)),
        _ => text.join("\n\n"),
    })
}

/// The plain or LaTeX text and the JSON value for one family.
fn tableaux_for(
    f: Format,
    lambda: &SuperPartition,
    omega: &SuperPartition,
    weight: &[Letter],
    family: Family,
) -> Result<(String, Value), CliError> {
    let found = enumerate(lambda, omega, weight, family)?;
    let total: i64 = found.iter().map(|(_, s)| *s as i64).sum();
    let head = format!(
        "{} {family}-tableaux of shape {lambda}/{omega} and weight ({}), signed count {total}",
        found.len(),
        weight_to_text(weight)
    );
    let value = json!({
        "family": family,
        "lambda": json_sp(lambda),
        "omega": json_sp(omega),
        "weight": weight_to_text(weight),
        "count": found.len(),
        "signed_count": total,
        "tableaux": found.iter().map(|(t, s)| json!({
            "sign": s,
            "chain": t.chain.iter().map(json_sp).collect::<Vec<_>>(),
            "word": t.word.0,
            "diagram": t.render(),
        })).collect::<Vec<_>>(),
    });
    let text = match f {
        Format::Plain | Format::Json => {
            let mut out = vec![head];
            for (i, (t, s)) in found.iter().enumerate() {
                out.push(format!("\ntableau {}, sign {s:+}, chain {}", i + 1, chain_text(t)));
                out.push(t.render());
            }
            out.join("\n")
        }
        Format::Latex => {
            let items: Vec<String> =
                found.iter().map(|(t, s)| format!("{}{}", if *s < 0 { "-" } else { "" }, t.render_latex())).collect();
            format!("% {head}\n{}", items.join("\\qquad\n"))
        }
    };
    Ok((text, value))
}
