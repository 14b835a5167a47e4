use matpfd_core::expm::VectorTerm;
use matpfd_core::pipeline::Decomposition;
use matpfd_core::scalar::{rational_sqrt, render_rational};
use matpfd_core::{
    BasisFn, ChainSource, ClosedFormExp, FactoredCharPoly, GaussianRational, GeneralSolution,
    IvpSolution, Matrix, Poly, Rational, Scalar, VerifyReport,
};
use num_traits::{One, Zero};

use super::{linear_factor, needs_parens, quadratic_poly, EigenChains};

pub fn vector<T: Scalar>(v: &[T]) -> String {
    let entries: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", entries.join(", "))
}

pub fn matrix<T: Scalar>(m: &Matrix<T>) -> String {
    m.to_string()
}

/// `e^(2t)`, `e^t`, `e^((1/2)t)`; empty for `lambda = 0`.
fn exponential(lambda: &GaussianRational) -> String {
    if lambda.is_zero() {
        return String::new();
    }
    if lambda.is_one() {
        return "e^t".into();
    }
    if *lambda == -GaussianRational::one() {
        return "e^(-t)".into();
    }
    let text = lambda.to_string();
    if needs_parens(&text) {
        format!("e^(({text})t)")
    } else {
        format!("e^({text}t)")
    }
}

/// Argument of cos/sin: `3t`, `t`, `(3/2)t` or `sqrt(2) t`.
fn frequency(d: &Rational) -> String {
    match rational_sqrt(d) {
        Some(beta) if beta.is_one() => "t".into(),
        Some(beta) => {
            let b = render_rational(&beta);
            if needs_parens(&b) {
                format!("({b})t")
            } else {
                format!("{b}t")
            }
        }
        None => format!("sqrt({}) t", render_rational(d)),
    }
}

fn join_factors(parts: &[String]) -> String {
    parts
        .iter()
        .filter(|p| !p.is_empty())
        .cloned()
        .collect::<Vec<_>>()
        .join(" ")
}

/// Empty for the constant function 1.
pub fn basis(f: &BasisFn<GaussianRational>) -> String {
    match f {
        BasisFn::PolyExp { lambda, power } => {
            let t = match power {
                0 => String::new(),
                1 => "t".into(),
                k => format!("t^{k}"),
            };
            join_factors(&[t, exponential(lambda)])
        }
        BasisFn::Cos { a, d } => {
            let damping = exponential(&GaussianRational::from(-a.clone()));
            join_factors(&[damping, format!("cos({})", frequency(d))])
        }
        BasisFn::Sin { a, d } => {
            let damping = exponential(&GaussianRational::from(-a.clone()));
            let mut sin = format!("sin({})", frequency(d));
            if rational_sqrt(d).is_none() {
                sin = format!("{sin} / sqrt({})", render_rational(d));
            }
            join_factors(&[damping, sin])
        }
    }
}

fn term(f: &BasisFn<GaussianRational>, value: String) -> String {
    let b = basis(f);
    if b.is_empty() {
        value
    } else {
        format!("{b} * {value}")
    }
}

pub fn closed_form(cf: &ClosedFormExp<GaussianRational>) -> String {
    if cf.terms.is_empty() {
        return matrix(&Matrix::<GaussianRational>::zeros(cf.n, cf.n));
    }
    let terms: Vec<String> = cf.terms.iter().map(|(f, c)| term(f, matrix(c))).collect();
    terms.join(" + ")
}

pub fn vector_terms(n: usize, terms: &[VectorTerm<GaussianRational>]) -> String {
    if terms.is_empty() {
        return vector(&vec![GaussianRational::zero(); n]);
    }
    let parts: Vec<String> = terms.iter().map(|(f, v)| term(f, vector(v))).collect();
    parts.join(" + ")
}

pub fn factorization(f: &FactoredCharPoly) -> String {
    let mut parts: Vec<String> = f
        .linear
        .iter()
        .map(|(root, m)| {
            let p = format!("({})", linear_factor(root));
            if *m == 1 {
                p
            } else {
                format!("{p}^{m}")
            }
        })
        .collect();
    parts.extend(
        f.quadratic
            .iter()
            .map(|q| format!("({})", quadratic_poly(q))),
    );
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

pub fn charpoly(p: &Poly<Rational>, factored: Option<&FactoredCharPoly>) -> String {
    let mut out = format!("p(s) = {p}\n");
    if let Some(f) = factored {
        out.push_str(&format!(
            "factored ({}): {}\n",
            mode_name(f),
            factorization(f)
        ));
    }
    out
}

fn mode_name(f: &FactoredCharPoly) -> &'static str {
    match f.mode {
        matpfd_core::SpectrumMode::Complex => "complex",
        matpfd_core::SpectrumMode::Real => "real",
    }
}

pub fn pfd(decomposition: &Decomposition) -> String {
    let mut out = String::new();
    let linear_blocks =
        |out: &mut String, blocks: Vec<(GaussianRational, Vec<Matrix<GaussianRational>>)>| {
            for (lambda, coefficients) in blocks {
                out.push_str(&format!(
                    "eigenvalue {lambda}, multiplicity {}\n",
                    coefficients.len()
                ));
                for (j, b) in coefficients.iter().enumerate() {
                    out.push_str(&format!("  B[{}] = {}\n", j + 1, matrix(b)));
                }
            }
        };
    match decomposition {
        Decomposition::Complex(pfd) => {
            let blocks = pfd
                .blocks
                .iter()
                .map(|b| (b.eigenvalue.clone(), b.coefficients.clone()))
                .collect();
            linear_blocks(&mut out, blocks);
        }
        Decomposition::Real(pfd) => {
            let blocks = pfd
                .linear
                .iter()
                .map(|b| {
                    let embed = b.map(|x| GaussianRational::from(x.clone()));
                    (embed.eigenvalue, embed.coefficients)
                })
                .collect();
            linear_blocks(&mut out, blocks);
            for q in &pfd.quadratic {
                out.push_str(&format!(
                    "quadratic factor {} (a = {}, d = {})\n  P = {}\n  Q = {}\n",
                    quadratic_poly(&q.factor),
                    render_rational(&q.factor.a),
                    render_rational(&q.factor.d),
                    matrix(&q.p),
                    matrix(&q.q)
                ));
            }
        }
    }
    out
}

fn chain_line<T: Scalar>(vectors: &[Vec<T>]) -> String {
    let parts: Vec<String> = vectors.iter().map(|v| vector(v)).collect();
    parts.join(" -> ")
}

fn source(s: &ChainSource<GaussianRational>) -> String {
    match s {
        ChainSource::Column(m) => format!("column {}", m + 1),
        ChainSource::Combination(c) => format!("combination {}", vector(c)),
    }
}

pub fn chains(eigen: &[EigenChains]) -> String {
    let mut out = String::new();
    for e in eigen {
        out.push_str(&format!(
            "eigenvalue {}, multiplicity {}, geometric multiplicity {}\n",
            e.eigenvalue, e.multiplicity, e.geometric_multiplicity
        ));
        for c in &e.columns {
            out.push_str(&format!(
                "  {}: {}\n",
                source(&c.source),
                chain_line(&c.vectors)
            ));
        }
        let chosen: Vec<String> = e.basis.chains.iter().map(|c| source(&c.source)).collect();
        out.push_str(&format!("  basis: {}\n", chosen.join(", ")));
        for c in e
            .basis
            .chains
            .iter()
            .filter(|c| matches!(c.source, ChainSource::Combination(_)))
        {
            out.push_str(&format!(
                "  {}: {}\n",
                source(&c.source),
                chain_line(&c.vectors)
            ));
        }
    }
    out
}

pub fn exp(cf: &ClosedFormExp<GaussianRational>) -> String {
    format!("{}\n", closed_form(cf))
}

pub fn solve(sol: &IvpSolution<GaussianRational>) -> String {
    format!("{}\n", vector_terms(sol.n, &sol.terms))
}

pub fn general(sol: &GeneralSolution<GaussianRational>, wronskian: &GaussianRational) -> String {
    let mut out = String::new();
    for (m, column) in sol.columns.iter().enumerate() {
        out.push_str(&format!(
            "y{}(t) = {}\n",
            m + 1,
            vector_terms(sol.n, column)
        ));
    }
    out.push_str(&format!("W(0) = {wronskian}\n"));
    out
}

pub fn verify(report: &VerifyReport) -> String {
    let failed = report.failures().count();
    format!("{report}{} checks, {failed} failed\n", report.checks.len())
}
