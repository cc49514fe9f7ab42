//! JSON wire formats. Partitions are arrays of parts, rationals are decimal
//! strings (`num`/`den`, or a single `"p/q"` string inside relations).

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Basis, Series};
use crate::bernstein::LaurentSchur;
use crate::error::{Error, Result};
use crate::kp::{CoeffTable, DiffExpr, Matrix, PairVerdict};
use crate::partition::Partition;
use crate::plucker::{QuadRelation, Verdict};
use crate::Rational;

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<usize>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    truncation_weight: usize,
    series: Vec<TermJson>,
}

#[derive(Serialize)]
struct LaurentJson {
    t: i64,
    series: Vec<TermJson>,
}

#[derive(Serialize)]
struct QuadTermJson {
    coeff: String,
    left: Vec<usize>,
    right: Vec<usize>,
}

#[derive(Serialize)]
struct RelationJson {
    alpha: Vec<usize>,
    beta: Vec<usize>,
    terms: Vec<QuadTermJson>,
}

#[derive(Serialize)]
struct VerdictJson {
    alpha: Vec<usize>,
    beta: Vec<usize>,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

#[derive(Serialize)]
struct MonomialJson {
    coeff: String,
    factors: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct DiffExprJson {
    target: &'static str,
    terms: Vec<MonomialJson>,
}

fn format_err(e: impl std::fmt::Display) -> Error {
    Error::Format(e.to_string())
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::Format(format!("not an integer: {s:?}")))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s.trim())?)),
        Some((n, d)) => {
            let d = parse_int(d.trim())?;
            if d == BigInt::from(0) {
                return Err(Error::Format(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(n.trim())?, d))
        }
    }
}

fn terms_of<B: Basis>(f: &Series<B>) -> Vec<TermJson> {
    f.iter()
        .map(|(p, c)| TermJson {
            partition: p.parts().to_vec(),
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

fn series_of<B: Basis>(terms: Vec<TermJson>, truncation: Option<usize>) -> Result<Series<B>> {
    let mut out = Series::zero(truncation);
    for t in terms {
        let p = Partition::new(t.partition)?;
        if truncation.is_some_and(|w| p.weight() > w) {
            return Err(Error::Format(format!(
                "term {p} exceeds the truncation weight"
            )));
        }
        let den = parse_int(&t.den)?;
        if den == BigInt::from(0) {
            return Err(Error::Format("zero denominator".into()));
        }
        out.add_term(p, Rational::new(parse_int(&t.num)?, den));
    }
    Ok(out)
}

pub fn series_to_value<B: Basis>(f: &Series<B>) -> Value {
    serde_json::to_value(terms_of(f)).expect("serializable")
}

pub fn series_to_json<B: Basis>(f: &Series<B>) -> String {
    serde_json::to_string(&terms_of(f)).expect("serializable")
}

/// Reads an untruncated series.
pub fn series_from_json<B: Basis>(s: &str) -> Result<Series<B>> {
    let terms: Vec<TermJson> = serde_json::from_str(s).map_err(format_err)?;
    series_of(terms, None)
}

pub fn table_to_json(t: &CoeffTable) -> String {
    serde_json::to_string(&TableJson {
        truncation_weight: t.truncation(),
        series: terms_of(t.series()),
    })
    .expect("serializable")
}

pub fn table_from_json(s: &str) -> Result<CoeffTable> {
    let t: TableJson = serde_json::from_str(s).map_err(format_err)?;
    let series = series_of(t.series, Some(t.truncation_weight))?;
    Ok(CoeffTable::from_series(series, t.truncation_weight))
}

pub fn laurent_to_json(l: &LaurentSchur) -> String {
    let v: Vec<LaurentJson> = l
        .iter()
        .map(|(t, f)| LaurentJson {
            t,
            series: terms_of(f),
        })
        .collect();
    serde_json::to_string(&v).expect("serializable")
}

fn relation_json(r: &QuadRelation) -> RelationJson {
    let src = r.source();
    RelationJson {
        alpha: src.alpha.parts().to_vec(),
        beta: src.beta.parts().to_vec(),
        terms: r
            .terms
            .iter()
            .map(|t| QuadTermJson {
                coeff: t.coeff.to_string(),
                left: t.left.parts().to_vec(),
                right: t.right.parts().to_vec(),
            })
            .collect(),
    }
}

pub fn relations_to_json(rs: &[QuadRelation]) -> String {
    let v: Vec<RelationJson> = rs.iter().map(relation_json).collect();
    serde_json::to_string(&v).expect("serializable")
}

fn verdict_json(alpha: &Partition, beta: &Partition, v: &Verdict) -> VerdictJson {
    VerdictJson {
        alpha: alpha.parts().to_vec(),
        beta: beta.parts().to_vec(),
        status: v.status(),
        value: match v {
            Verdict::Fails(x) => Some(x.to_string()),
            _ => None,
        },
    }
}

/// Verdicts keyed by the generating pair of each relation.
pub fn relation_verdicts_to_json(rs: &[(QuadRelation, Verdict)]) -> String {
    let v: Vec<VerdictJson> = rs
        .iter()
        .map(|(r, v)| verdict_json(&r.source().alpha, &r.source().beta, v))
        .collect();
    serde_json::to_string(&v).expect("serializable")
}

pub fn pair_verdicts_to_json(vs: &[PairVerdict]) -> String {
    let v: Vec<VerdictJson> = vs
        .iter()
        .map(|p| verdict_json(&p.alpha, &p.beta, &p.verdict))
        .collect();
    serde_json::to_string(&v).expect("serializable")
}

fn diff_expr_json(e: &DiffExpr) -> DiffExprJson {
    DiffExprJson {
        target: e.target().name(),
        terms: e
            .iter()
            .map(|(m, c)| MonomialJson {
                coeff: c.to_string(),
                factors: m.factors().iter().map(|d| d.indices().to_vec()).collect(),
            })
            .collect(),
    }
}

pub fn diff_expr_to_json(e: &DiffExpr) -> String {
    serde_json::to_string(&diff_expr_json(e)).expect("serializable")
}

pub fn diff_exprs_to_json(es: &[&DiffExpr]) -> String {
    let v: Vec<DiffExprJson> = es.iter().map(|e| diff_expr_json(e)).collect();
    serde_json::to_string(&v).expect("serializable")
}

/// A matrix as an array of rows; entries are integers or rational strings.
pub fn matrix_from_json(s: &str) -> Result<Matrix> {
    let rows: Vec<Vec<Value>> = serde_json::from_str(s).map_err(format_err)?;
    let rows = rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| match v {
                    Value::Number(n) => n
                        .as_i64()
                        .map(|x| Rational::from_integer(x.into()))
                        .ok_or_else(|| Error::Format(format!("not an integer: {n}"))),
                    Value::String(s) => parse_rational(&s),
                    other => Err(Error::Format(format!("bad matrix entry: {other}"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

pub fn matrix_to_json(m: &Matrix) -> String {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
        .collect();
    serde_json::to_string(&rows).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SchurSeries;
    use crate::{part, rat};

    #[test]
    fn series_round_trip() {
        let f = SchurSeries::from_terms(
            None,
            [
                (part![2, 1], rat(-3, 7)),
                (part![], rat(1, 1)),
                (
                    part![3],
                    Rational::new("123456789012345678901234567890".parse().unwrap(), 7.into()),
                ),
            ],
        );
        let s = series_to_json(&f);
        assert!(s.starts_with(r#"[{"partition":[],"num":"1","den":"1"}"#));
        let g: SchurSeries = series_from_json(&s).unwrap();
        assert_eq!(f, g);
        assert_eq!(series_to_json(&g), s);
    }

    #[test]
    fn table_round_trip() {
        let t = CoeffTable::from_series(SchurSeries::from_terms(None, [(part![1], rat(2, 3))]), 5);
        let s = table_to_json(&t);
        let u = table_from_json(&s).unwrap();
        assert_eq!(t, u);
        assert!(table_from_json(
            r#"{"truncation_weight":1,"series":[{"partition":[2],"num":"1","den":"1"}]}"#
        )
        .is_err());
    }

    #[test]
    fn malformed_inputs() {
        assert!(series_from_json::<crate::algebra::Power>("[{").is_err());
        assert!(series_from_json::<crate::algebra::Power>(
            r#"[{"partition":[1,2],"num":"1","den":"1"}]"#
        )
        .is_err());
        assert!(series_from_json::<crate::algebra::Power>(
            r#"[{"partition":[1],"num":"1","den":"0"}]"#
        )
        .is_err());
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
    }

    #[test]
    fn matrices() {
        let m = matrix_from_json(r#"[[1, "1/2"], [-3, "4"]]"#).unwrap();
        assert_eq!(m.get(0, 1), &rat(1, 2));
        assert_eq!(matrix_to_json(&m), r#"[["1","1/2"],["-3","4"]]"#);
        assert!(matrix_from_json(r#"[[1, 2], [3]]"#).is_err());
        assert!(matrix_from_json(r#"[[1.5]]"#).is_err());
    }
}
