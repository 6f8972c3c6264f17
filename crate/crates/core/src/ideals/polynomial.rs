//! Homogeneous forms with integer coefficients, in the shapes the h.s.o.p.
//! constructions need.

use std::collections::BTreeMap;

/// A monomial as a dense exponent vector.
pub type Exponents = Vec<u32>;

/// A homogeneous polynomial `sum c_i x^{a_i}` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    pub degree: usize,
    pub terms: Vec<(Exponents, i64)>,
}

impl Form {
    /// Builds a form, merging repeated monomials and dropping zero terms.
    /// Every monomial must have total degree `degree` and length
    /// `variable_count`.
    pub fn new(
        variable_count: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Exponents, i64)>,
    ) -> Result<Self, String> {
        let mut merged: BTreeMap<Exponents, i64> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != variable_count {
                return Err(format!(
                    "monomial has {} exponents, expected {variable_count}",
                    e.len()
                ));
            }
            let deg: u32 = e.iter().sum();
            if deg as usize != degree {
                return Err(format!("monomial of degree {deg} in a form of degree {degree}"));
            }
            *merged.entry(e).or_insert(0) += c;
        }
        Ok(Form {
            degree,
            terms: merged.into_iter().filter(|&(_, c)| c != 0).collect(),
        })
    }

    pub fn variable_count(&self) -> Option<usize> {
        self.terms.first().map(|t| t.0.len())
    }

    /// Human-readable rendering, e.g. `x(1,2)*x(3,4) + x(1,3)*x(2,4)`.
    pub fn render(&self, labels: Option<&[String]>) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(if *c < 0 { " - " } else { " + " });
            } else if *c < 0 {
                out.push('-');
            }
            let mono = render_monomial(e, labels);
            match c.unsigned_abs() {
                1 => out.push_str(&mono),
                a if mono == "1" => out.push_str(&a.to_string()),
                a => out.push_str(&format!("{a}*{mono}")),
            }
        }
        out
    }
}

pub fn variable_name(v: usize, labels: Option<&[String]>) -> String {
    match labels {
        Some(l) if l[v].starts_with('(') => {
            format!("x{}", l[v].split_whitespace().collect::<Vec<_>>().join(","))
        }
        Some(l) => format!("x({})", l[v]),
        None => format!("x{v}"),
    }
}

pub fn render_monomial(e: &[u32], labels: Option<&[String]>) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(v, &a)| {
            let name = variable_name(v, labels);
            if a == 1 {
                name
            } else {
                format!("{name}^{a}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Sparse polynomial in any number of variables; used for identity checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Exponents, i64>,
}

impl Poly {
    pub fn monomial(e: Exponents, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                terms.remove(e);
            }
        }
        Poly { terms }
    }

    pub fn scale(&self, s: i64) -> Poly {
        if s == 0 {
            return Poly::default();
        }
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Exponents = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out = out.add(&Poly::monomial(e, x * y));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}
