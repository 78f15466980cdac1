//! JSON report builders. Exact rationals are always serialized as strings
//! ("p/q", or "p" for integers); decimal approximations only appear as
//! additional fields under --approx. serde_json's default BTreeMap keeps
//! key order stable, so report bytes are deterministic for fixed inputs.

use irrwalk_core::algebra::{IntPoly, RatPoly};
use irrwalk_core::field::{algebraic_to_json, rat_to_f64};
use irrwalk_core::geometry::fmt_f64;
use irrwalk_core::num_bigint::BigInt;
use irrwalk_core::num_rational::BigRational;
use irrwalk_core::spectra::{Graph, PairDecomposition, SpectralDecomposition};
use irrwalk_core::walk::{
    AverageMixingMatrix, Classification, FrequencyBasis, PgstVerdict, RotationOrder, SupBound,
};
use serde_json::{json, Value};

pub fn rational_str(q: &BigRational) -> String {
    q.to_string()
}

fn int_poly_json(p: &IntPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(v) => Value::from(v),
                Err(_) => Value::String(c.to_string()),
            })
            .collect(),
    )
}

fn rat_poly_json(p: &RatPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(rational_str(c)))
            .collect(),
    )
}

fn bigint_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(c.to_string()),
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
        "hash": g.structure_hash(),
    })
}

pub fn spectra_report(sd: &SpectralDecomposition, approx: bool) -> Value {
    let field = sd.field();
    let iv = field.refine_to(64);
    let eigenvalues: Vec<Value> = (0..sd.num_eigenvalues())
        .map(|r| {
            let theta = sd.eigenvalue(r);
            let mut v = json!({
                "value": rat_poly_json(theta.coeffs()),
                "multiplicity": sd.multiplicity(r),
            });
            if approx {
                v["approx"] = Value::String(fmt_f64(theta.to_f64()));
            }
            v
        })
        .collect();
    json!({
        "graph": graph_json(sd.graph()),
        "char_poly": int_poly_json(sd.char_poly()),
        "min_poly": int_poly_json(&sd.char_poly().squarefree_part()),
        "field": {
            "min_poly": int_poly_json(field.min_poly()),
            "degree": field.degree(),
            "interval": [iv.lo.to_string(), iv.hi.to_string()],
        },
        "eigenvalues": eigenvalues,
    })
}

pub fn amm_report(g: &Graph, amm: &AverageMixingMatrix, approx: bool) -> Value {
    let entries: Vec<Vec<Value>> = amm
        .rows()
        .iter()
        .map(|row| row.iter().map(|q| Value::String(rational_str(q))).collect())
        .collect();
    let mut out = json!({
        "graph": graph_json(g),
        "entries": entries,
    });
    if approx {
        let approx_rows: Vec<Vec<Value>> = amm
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| Value::String(fmt_f64(rat_to_f64(q))))
                    .collect()
            })
            .collect();
        out["entries_approx"] = Value::Array(
            approx_rows.into_iter().map(Value::Array).collect(),
        );
    }
    out
}

pub fn cospectral_report(g: &Graph, pd: &PairDecomposition) -> Value {
    let signs: Value = if pd.strongly_cospectral {
        Value::Object(
            pd.signs
                .iter()
                .map(|(r, s)| (r.to_string(), Value::from(*s as i64)))
                .collect(),
        )
    } else {
        Value::Null
    };
    json!({
        "graph": graph_json(g),
        "a": pd.a,
        "b": pd.b,
        "strongly_cospectral": pd.strongly_cospectral,
        "phi_plus": int_poly_json(&pd.phi_plus),
        "phi_minus": int_poly_json(&pd.phi_minus),
        "phi_zero": pd.phi_zero.as_ref().map(int_poly_json).unwrap_or(Value::Null),
        "signs": signs,
    })
}

pub fn pgst_report(g: &Graph, v: &PgstVerdict) -> Value {
    let witness = v.witness.as_ref().map(|w| {
        json!({
            "ell": w.ell.iter().map(bigint_json).collect::<Vec<_>>(),
            "m": w.m.iter().map(bigint_json).collect::<Vec<_>>(),
        })
    });
    json!({
        "graph": graph_json(g),
        "a": v.a,
        "b": v.b,
        "result": v.result.as_str(),
        "witness": witness.unwrap_or(Value::Null),
        "lambdas": v.lambdas.iter().map(|x| rat_poly_json(x.coeffs())).collect::<Vec<_>>(),
        "mus": v.mus.iter().map(|x| rat_poly_json(x.coeffs())).collect::<Vec<_>>(),
    })
}

pub fn basis_report(g: &Graph, fb: &FrequencyBasis, approx: bool) -> Value {
    let w: Vec<Value> = fb
        .w
        .iter()
        .map(|x| {
            let mut v = algebraic_to_json(x);
            if approx {
                v["approx"] = Value::String(fmt_f64(x.to_f64()));
            }
            v
        })
        .collect();
    json!({
        "graph": graph_json(g),
        "support": fb.support,
        "k": fb.dimension(),
        "w": w,
        "f": fb.f.iter()
            .map(|row| Value::Array(row.iter().map(bigint_json).collect()))
            .collect::<Vec<_>>(),
        "relations": fb.relations.iter()
            .map(|row| Value::Array(row.iter().map(bigint_json).collect()))
            .collect::<Vec<_>>(),
    })
}

pub fn symmetry_report(g: &Graph, a: usize, b: usize, order: &RotationOrder) -> Value {
    let order_json = match order {
        RotationOrder::Unbounded => Value::String("unbounded".into()),
        RotationOrder::Finite(n) => match u64::try_from(n) {
            Ok(v) => Value::from(v),
            Err(_) => Value::String(n.to_string()),
        },
    };
    json!({
        "graph": graph_json(g),
        "a": a,
        "b": b,
        "order": order_json,
    })
}

pub fn classify_report(g: &Graph, a: usize, b: usize, c: &Classification) -> Value {
    json!({
        "graph": graph_json(g),
        "a": a,
        "b": b,
        "classification": c.label().as_str(),
        "integral_support": c.integral_support,
        "bipartite": c.bipartite,
    })
}

pub fn moments_report(
    g: &Graph,
    a: usize,
    b: usize,
    moments: &[BigRational],
    approx: bool,
) -> Value {
    let vals: Vec<Value> = moments
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let mut v = json!({
                "ell": i + 1,
                "moment": rational_str(m),
            });
            if approx {
                v["approx"] = Value::String(fmt_f64(rat_to_f64(m)));
            }
            v
        })
        .collect();
    json!({
        "graph": graph_json(g),
        "a": a,
        "b": b,
        "moments": vals,
    })
}

pub fn sup_report(g: &Graph, a: usize, b: usize, bounds: &[SupBound], approx: bool) -> Value {
    let vals: Vec<Value> = bounds
        .iter()
        .map(|sb| {
            let mut v = json!({
                "ell": sb.ell,
                "moment": rational_str(&sb.moment),
                "lower": sb.lower.to_string(),
                "upper": sb.upper.to_string(),
            });
            if approx {
                v["lower_approx"] = Value::String(fmt_f64(rat_to_f64(&sb.lower)));
                v["upper_approx"] = Value::String(fmt_f64(rat_to_f64(&sb.upper)));
            }
            v
        })
        .collect();
    json!({
        "graph": graph_json(g),
        "a": a,
        "b": b,
        "bounds": vals,
    })
}

/// Parse a rational emitted by [`rational_str`] ("p/q" or "p").
#[cfg(test)]
pub fn parse_rational(s: &str) -> Option<BigRational> {
    s.parse::<BigRational>().ok()
}
