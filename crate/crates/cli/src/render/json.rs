use matpfd_core::expm::VectorTerm;
use matpfd_core::pipeline::Decomposition;
use matpfd_core::scalar::render_rational;
use matpfd_core::{
    BasisFn, Chain, ChainSource, ClosedFormExp, FactoredCharPoly, GaussianRational,
    GeneralSolution, IvpSolution, Matrix, Poly, Rational, Scalar, SpectrumMode, VerifyReport,
};
use serde_json::{json, Value};

use super::{quadratic_poly, EigenChains};

pub fn rational(r: &Rational) -> Value {
    Value::String(render_rational(r))
}

/// Real values as strings, non-real Gaussian values as `{"re", "im"}`.
pub fn scalar<T: Scalar>(x: &T) -> Value {
    let (re, im) = x.parts();
    if im == Rational::from_integer(0.into()) {
        rational(&re)
    } else {
        json!({ "re": render_rational(&re), "im": render_rational(&im) })
    }
}

pub fn vector<T: Scalar>(v: &[T]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn matrix<T: Scalar>(m: &Matrix<T>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector(r)).collect())
}

pub fn poly<T: Scalar>(p: &Poly<T>) -> Value {
    vector(p.coeffs())
}

fn mode(m: SpectrumMode) -> &'static str {
    match m {
        SpectrumMode::Complex => "complex",
        SpectrumMode::Real => "real",
    }
}

pub fn basis(f: &BasisFn<GaussianRational>) -> Value {
    match f {
        BasisFn::PolyExp { lambda, power } => {
            json!({ "kind": "poly_exp", "λ": scalar(lambda), "power": power })
        }
        BasisFn::Cos { a, d } => json!({ "kind": "cos", "a": rational(a), "d": rational(d) }),
        BasisFn::Sin { a, d } => json!({
            "kind": "sin",
            "a": rational(a),
            "d": rational(d),
            "over_sqrt_d": matpfd_core::scalar::rational_sqrt(d).is_none(),
        }),
    }
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn factorization(f: &FactoredCharPoly) -> Value {
    let mut factors: Vec<Value> = f
        .linear
        .iter()
        .map(|(root, m)| json!({ "kind": "linear", "λ": scalar(root), "multiplicity": m }))
        .collect();
    factors.extend(f.quadratic.iter().map(|q| {
        json!({
            "kind": "quadratic",
            "a": rational(&q.a),
            "d": rational(&q.d),
            "coefficients": poly(&quadratic_poly(q)),
        })
    }));
    json!({ "mode": mode(f.mode), "factors": factors })
}

pub fn charpoly(p: &Poly<Rational>, factored: Option<&FactoredCharPoly>) -> String {
    pretty(json!({
        "charpoly": poly(p),
        "factorization": factored.map(factorization),
    }))
}

fn coefficient_list<T: Scalar>(coefficients: &[Matrix<T>]) -> Value {
    Value::Array(
        coefficients
            .iter()
            .enumerate()
            .map(|(j, b)| json!({ "j": j + 1, "matrix": matrix(b) }))
            .collect(),
    )
}

pub fn pfd(decomposition: &Decomposition) -> String {
    let v = match decomposition {
        Decomposition::Complex(pfd) => json!({
            "mode": "complex",
            "n": pfd.n,
            "blocks": pfd.blocks.iter().map(|b| json!({
                "λ": scalar(&b.eigenvalue),
                "multiplicity": b.multiplicity(),
                "coefficients": coefficient_list(&b.coefficients),
            })).collect::<Vec<_>>(),
            "quadratic": [],
        }),
        Decomposition::Real(pfd) => json!({
            "mode": "real",
            "n": pfd.n,
            "blocks": pfd.linear.iter().map(|b| json!({
                "λ": scalar(&b.eigenvalue),
                "multiplicity": b.multiplicity(),
                "coefficients": coefficient_list(&b.coefficients),
            })).collect::<Vec<_>>(),
            "quadratic": pfd.quadratic.iter().map(|q| json!({
                "a": rational(&q.factor.a),
                "d": rational(&q.factor.d),
                "P": matrix(&q.p),
                "Q": matrix(&q.q),
            })).collect::<Vec<_>>(),
        }),
    };
    pretty(v)
}

fn chain(c: &Chain<GaussianRational>) -> Value {
    let source = match &c.source {
        ChainSource::Column(m) => json!({ "column": m + 1 }),
        ChainSource::Combination(v) => json!({ "combination": vector(v) }),
    };
    json!({
        "source": source,
        "vectors": c.vectors.iter().map(|v| vector(v)).collect::<Vec<_>>(),
    })
}

pub fn chains(eigen: &[EigenChains]) -> String {
    pretty(Value::Array(
        eigen
            .iter()
            .map(|e| {
                json!({
                    "λ": scalar(&e.eigenvalue),
                    "multiplicity": e.multiplicity,
                    "geometric_multiplicity": e.geometric_multiplicity,
                    "column_chains": e.columns.iter().map(chain).collect::<Vec<_>>(),
                    "basis": e.basis.chains.iter().map(chain).collect::<Vec<_>>(),
                })
            })
            .collect(),
    ))
}

pub fn exp(cf: &ClosedFormExp<GaussianRational>) -> String {
    pretty(json!({
        "n": cf.n,
        "terms": cf.terms.iter().map(|(f, c)| json!({
            "basis": basis(f),
            "matrix": matrix(c),
        })).collect::<Vec<_>>(),
    }))
}

fn vector_terms(terms: &[VectorTerm<GaussianRational>]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(f, v)| json!({ "basis": basis(f), "vector": vector(v) }))
            .collect(),
    )
}

pub fn solve(sol: &IvpSolution<GaussianRational>) -> String {
    pretty(json!({ "n": sol.n, "terms": vector_terms(&sol.terms) }))
}

pub fn general(sol: &GeneralSolution<GaussianRational>, wronskian: &GaussianRational) -> String {
    pretty(json!({
        "n": sol.n,
        "solutions": sol.columns.iter().enumerate().map(|(m, c)| json!({
            "column": m + 1,
            "terms": vector_terms(c),
        })).collect::<Vec<_>>(),
        "wronskian_at_zero": scalar(wronskian),
    }))
}

pub fn verify(report: &VerifyReport) -> String {
    pretty(json!({
        "passed": report.all_passed(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "detail": c.detail,
        })).collect::<Vec<_>>(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_scalars_as_strings() {
        let r = Rational::new((-3).into(), 4.into());
        assert_eq!(rational(&r).to_string(), "\"-3/4\"");
        let g = GaussianRational::new(r.clone(), Rational::from_integer(2.into()));
        assert_eq!(scalar(&g), json!({ "re": "-3/4", "im": "2" }));
        assert_eq!(scalar(&GaussianRational::from(r)), json!("-3/4"));
    }
}
