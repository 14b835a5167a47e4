use matpfd_core::expm::VectorTerm;
use matpfd_core::pipeline::Decomposition;
use matpfd_core::scalar::rational_sqrt;
use matpfd_core::{
    BasisFn, ClosedFormExp, FactoredCharPoly, GaussianRational, GeneralSolution, IvpSolution,
    Matrix, Poly, Rational, Scalar, VerifyReport,
};
use num_traits::{One, Signed, Zero};

use super::{linear_factor, quadratic_poly, EigenChains};

fn display(body: &str) -> String {
    format!("\\[\n{body}\n\\]\n")
}

/// `3`, `-\frac{3}{4}`.
pub fn rational(r: &Rational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let a = r.abs();
    if a.is_integer() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

/// `-2+3i`, `\frac{1}{2}-i`.
pub fn scalar<T: Scalar>(x: &T) -> String {
    let (re, im) = x.parts();
    if im.is_zero() {
        return rational(&re);
    }
    let im_text = if im.is_one() {
        "i".to_string()
    } else if (-im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", rational(&im))
    };
    if re.is_zero() {
        im_text
    } else if im.is_negative() {
        format!("{}{im_text}", rational(&re))
    } else {
        format!("{}+{im_text}", rational(&re))
    }
}

pub fn matrix<T: Scalar>(m: &Matrix<T>) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(scalar).collect::<Vec<_>>().join("&"))
        .collect();
    format!("\\begin{{bmatrix}}{}\\end{{bmatrix}}", rows.join("\\\\"))
}

pub fn column<T: Scalar>(v: &[T]) -> String {
    let rows: Vec<String> = v.iter().map(scalar).collect();
    format!("\\begin{{bmatrix}}{}\\end{{bmatrix}}", rows.join("\\\\"))
}

pub fn poly<T: Scalar>(p: &Poly<T>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (re, im) = c.parts();
        let compound = !re.is_zero() && !im.is_zero();
        let negative = !compound && (re.is_negative() || im.is_negative());
        let magnitude = if negative { -c.clone() } else { c.clone() };
        out.push_str(match (out.is_empty(), negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        let body = if compound {
            format!("({})", scalar(&magnitude))
        } else {
            scalar(&magnitude)
        };
        if k == 0 {
            out.push_str(&body);
            continue;
        }
        if !magnitude.is_one() {
            out.push_str(&body);
        }
        out.push('s');
        if k > 1 {
            out.push_str(&format!("^{{{k}}}"));
        }
    }
    out
}

fn exponential(lambda: &GaussianRational) -> String {
    if lambda.is_zero() {
        return String::new();
    }
    if lambda.is_one() {
        return "e^{t}".into();
    }
    if *lambda == -GaussianRational::one() {
        return "e^{-t}".into();
    }
    if lambda.is_real() {
        return format!("e^{{{}t}}", scalar(lambda));
    }
    format!("e^{{({})t}}", scalar(lambda))
}

fn frequency(d: &Rational) -> String {
    match rational_sqrt(d) {
        Some(beta) if beta.is_one() => "t".into(),
        Some(beta) => format!("{}t", rational(&beta)),
        None => format!("\\sqrt{{{}}}\\,t", rational(d)),
    }
}

pub fn basis(f: &BasisFn<GaussianRational>) -> String {
    match f {
        BasisFn::PolyExp { lambda, power } => {
            let t = match power {
                0 => String::new(),
                1 => "t".into(),
                k => format!("t^{{{k}}}"),
            };
            format!("{t}{}", exponential(lambda))
        }
        BasisFn::Cos { a, d } => {
            let damping = exponential(&GaussianRational::from(-a.clone()));
            format!("{damping}\\cos({})", frequency(d))
        }
        BasisFn::Sin { a, d } => {
            let damping = exponential(&GaussianRational::from(-a.clone()));
            let sin = format!("\\sin({})", frequency(d));
            match rational_sqrt(d) {
                Some(_) => format!("{damping}{sin}"),
                None => format!("{damping}\\frac{{{sin}}}{{\\sqrt{{{}}}}}", rational(d)),
            }
        }
    }
}

fn terms_doc(lhs: &str, terms: Vec<String>, zero: String) -> String {
    let rhs = if terms.is_empty() {
        zero
    } else {
        terms.join(" + ")
    };
    display(&format!("{lhs} = {rhs}"))
}

pub fn charpoly(p: &Poly<Rational>, factored: Option<&FactoredCharPoly>) -> String {
    let mut body = format!("p(s) = {}", poly(p));
    if let Some(f) = factored {
        let mut parts: Vec<String> = f
            .linear
            .iter()
            .map(|(root, m)| {
                let p = format!("({})", poly(&linear_factor(root)));
                if *m == 1 {
                    p
                } else {
                    format!("{p}^{{{m}}}")
                }
            })
            .collect();
        parts.extend(
            f.quadratic
                .iter()
                .map(|q| format!("({})", poly(&quadratic_poly(q)))),
        );
        body.push_str(&format!(" = {}", parts.join("")));
    }
    display(&body)
}

fn power_denominator(lambda: &GaussianRational, j: usize) -> String {
    let f = poly(&linear_factor(lambda));
    if j == 1 {
        f
    } else {
        format!("({f})^{{{j}}}")
    }
}

pub fn pfd(decomposition: &Decomposition) -> String {
    let mut terms = Vec::new();
    let mut linear = |lambda: &GaussianRational, coefficients: &[Matrix<GaussianRational>]| {
        for (j, b) in coefficients.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            terms.push(format!(
                "\\frac{{1}}{{{}}}{}",
                power_denominator(lambda, j + 1),
                matrix(b)
            ));
        }
    };
    match decomposition {
        Decomposition::Complex(pfd) => {
            for b in &pfd.blocks {
                linear(&b.eigenvalue, &b.coefficients);
            }
        }
        Decomposition::Real(pfd) => {
            for b in &pfd.linear {
                let embed = b.map(|x| GaussianRational::from(x.clone()));
                linear(&embed.eigenvalue, &embed.coefficients);
            }
            for q in &pfd.quadratic {
                let den = poly(&quadratic_poly(&q.factor));
                let shift = poly(&Poly::linear(&-q.factor.a.clone()));
                terms.push(format!("\\frac{{{shift}}}{{{den}}}{}", matrix(&q.p)));
                terms.push(format!("\\frac{{1}}{{{den}}}{}", matrix(&q.q)));
            }
        }
    }
    terms_doc("(sI - A)^{-1}", terms, "0".into())
}

pub fn chains(eigen: &[EigenChains]) -> String {
    let mut out = String::new();
    for e in eigen {
        let lines: Vec<String> = e
            .columns
            .iter()
            .chain(
                e.basis
                    .chains
                    .iter()
                    .filter(|c| matches!(c.source, matpfd_core::ChainSource::Combination(_))),
            )
            .map(|c| {
                c.vectors
                    .iter()
                    .map(|v| column(v))
                    .collect::<Vec<_>>()
                    .join(" \\to ")
            })
            .collect();
        out.push_str(&display(&format!(
            "\\lambda = {}:\\quad {}",
            scalar(&e.eigenvalue),
            lines.join(",\\quad ")
        )));
    }
    out
}

pub fn exp(cf: &ClosedFormExp<GaussianRational>) -> String {
    let terms = cf
        .terms
        .iter()
        .map(|(f, c)| format!("{}{}", basis(f), matrix(c)))
        .collect();
    terms_doc(
        "e^{tA}",
        terms,
        matrix(&Matrix::<GaussianRational>::zeros(cf.n, cf.n)),
    )
}

fn vector_terms(lhs: &str, n: usize, terms: &[VectorTerm<GaussianRational>]) -> String {
    let parts = terms
        .iter()
        .map(|(f, v)| format!("{}{}", basis(f), column(v)))
        .collect();
    terms_doc(lhs, parts, column(&vec![GaussianRational::zero(); n]))
}

pub fn solve(sol: &IvpSolution<GaussianRational>) -> String {
    vector_terms("y(t)", sol.n, &sol.terms)
}

pub fn general(sol: &GeneralSolution<GaussianRational>, wronskian: &GaussianRational) -> String {
    let mut out: String = sol
        .columns
        .iter()
        .enumerate()
        .map(|(m, c)| vector_terms(&format!("y_{{{}}}(t)", m + 1), sol.n, c))
        .collect();
    out.push_str(&display(&format!("W(0) = {}", scalar(wronskian))));
    out
}

fn escape(text: &str) -> String {
    let mut out = String::new();
    for c in text.chars() {
        match c {
            '\\' => out.push_str("\\textbackslash{}"),
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '{' | '}' | '_' | '#' | '%' | '&' | '$' => {
                out.push('\\');
                out.push(c);
            }
            _ => out.push(c),
        }
    }
    out
}

pub fn verify(report: &VerifyReport) -> String {
    let mut out = String::from("\\begin{tabular}{lll}\n");
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status} & {} & {} \\\\\n",
            escape(&c.name),
            escape(&c.detail)
        ));
    }
    out.push_str("\\end{tabular}\n");
    out
}
