//! Edge ideals, homogeneous systems of parameters, and Hilbert functions of
//! `R/I(G)`.

mod polynomial;
mod regular;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::binomial;
use crate::complexes::{f_vector, independence_complex, FVector, HVector};
use crate::error::{invalid, Result};
use crate::graphs::{for_each_independent_set, independence_number, Graph};

pub use polynomial::{render_monomial, variable_name, Exponents, Form, Poly};
pub use regular::{
    default_degree_cap, verify_regular, verify_regular_with, DegreeRow, RationalMode, RegularityStatus,
    RegularityVerdict, VerifyOptions, CERTIFICATE_PRIMES,
};

/// `I(G) = <x_u x_v : uv ∈ E(G)>`, one generator per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeIdeal {
    pub variable_count: usize,
    pub generators: Vec<(usize, usize)>,
}

impl EdgeIdeal {
    /// True when `x^support` (any positive exponents) lies in the ideal,
    /// i.e. the support contains an edge.
    pub fn contains_support(&self, support: &[usize]) -> bool {
        self.generators
            .iter()
            .any(|(u, v)| support.contains(u) && support.contains(v))
    }

    pub fn render(&self, labels: Option<&[String]>) -> Vec<String> {
        self.generators
            .iter()
            .map(|&(u, v)| format!("{}*{}", variable_name(u, labels), variable_name(v, labels)))
            .collect()
    }
}

pub fn edge_ideal(g: &Graph) -> EdgeIdeal {
    EdgeIdeal {
        variable_count: g.vertex_count(),
        generators: g.edges().to_vec(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HsopKind {
    /// `F_k = sum of x_S over independent sets S with |S| = k`.
    IndependentSetSums,
    /// `p_k = sum_i x_i^k`.
    PowerSums,
    /// Caller-supplied forms.
    Custom,
}

impl HsopKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            HsopKind::IndependentSetSums => "independent-set-sums",
            HsopKind::PowerSums => "power-sums",
            HsopKind::Custom => "custom",
        }
    }
}

impl fmt::Display for HsopKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// Candidate system of parameters: one homogeneous form per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HsopSequence {
    pub kind: HsopKind,
    pub variable_count: usize,
    pub forms: Vec<Form>,
}

impl HsopSequence {
    pub fn custom(variable_count: usize, forms: Vec<Form>) -> Result<Self> {
        for f in &forms {
            if f.variable_count().is_some_and(|n| n != variable_count) {
                return invalid("form over a different number of variables");
            }
        }
        Ok(HsopSequence {
            kind: HsopKind::Custom,
            variable_count,
            forms,
        })
    }

    /// Number of forms; equals the Krull dimension for the built-in kinds.
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.forms.iter().map(|f| f.degree).collect()
    }
}

/// The forms of degrees `1..=d`, `d` the independence number of `g`.
pub fn hsop(g: &Graph, kind: HsopKind) -> Result<HsopSequence> {
    let n = g.vertex_count();
    let d = independence_number(g);
    if d < 1 {
        return invalid("the graph has no vertices, so R/I(G) has dimension 0");
    }
    let forms = match kind {
        HsopKind::IndependentSetSums => {
            let mut by_size: Vec<Vec<(Exponents, i64)>> = vec![Vec::new(); d + 1];
            for_each_independent_set(g, Some(d), |s| {
                if !s.is_empty() {
                    let mut e = vec![0; n];
                    for &v in s {
                        e[v] = 1;
                    }
                    by_size[s.len()].push((e, 1));
                }
            });
            by_size
                .into_iter()
                .enumerate()
                .skip(1)
                .map(|(k, terms)| Form::new(n, k, terms))
                .collect::<std::result::Result<Vec<_>, _>>()
        }
        HsopKind::PowerSums => (1..=d)
            .map(|k| {
                Form::new(
                    n,
                    k,
                    (0..n).map(|v| {
                        let mut e = vec![0; n];
                        e[v] = k as u32;
                        (e, 1)
                    }),
                )
            })
            .collect::<std::result::Result<Vec<_>, _>>(),
        HsopKind::Custom => return invalid("custom sequences are built with HsopSequence::custom"),
    }
    .map_err(crate::Error::InvalidArgument)?;
    Ok(HsopSequence {
        kind,
        variable_count: n,
        forms,
    })
}

/// Hilbert function of `R/I(G)`: the monomials of degree `d` whose support
/// is independent, counted as `sum_k f_{k-1} C(d-1, k-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub f_vector: FVector,
}

impl HilbertData {
    pub fn new(g: &Graph) -> Self {
        let f = f_vector(&independence_complex(g)).expect("independence complexes are nonvoid");
        HilbertData { f_vector: f }
    }

    pub fn value(&self, d: usize) -> BigInt {
        if d == 0 {
            return BigInt::from(1);
        }
        let mut total = BigInt::zero();
        for (k, f) in self.f_vector.entries.iter().enumerate().skip(1) {
            // f_{k-1} with support size k
            total += f * binomial(d as u64 - 1, k as u64 - 1);
        }
        total
    }
}

pub fn hilbert_function(g: &Graph, d: usize) -> BigInt {
    HilbertData::new(g).value(d)
}

/// Coefficients of `h(t) * prod_k (1 + t + ... + t^{k-1})`, the Hilbert
/// function of `R/(I + θ)` when the forms `θ` of the given degrees form a
/// regular sequence. A degree-0 entry contributes the factor `0`.
pub fn expected_artinian_hilbert(h: &HVector, degrees: &[usize]) -> Vec<BigInt> {
    let mut poly = h.entries.clone();
    for &k in degrees {
        if k == 0 {
            return vec![BigInt::zero()];
        }
        let mut next = vec![BigInt::zero(); poly.len() + k - 1];
        for (i, c) in poly.iter().enumerate() {
            for slot in &mut next[i..i + k] {
                *slot += c;
            }
        }
        poly = next;
    }
    poly
}

/// Expands `z_i^m = z_i^{m-1} σ_1 - z_i^{m-2} σ_2 + ... + (-1)^{m+1} σ_m` in
/// `m` variables for every `i` and reports whether both sides agree.
pub fn telescoping_check(m: usize) -> Result<bool> {
    if !(1..=8).contains(&m) {
        return invalid(format!("telescoping check supports 1 <= m <= 8, got {m}"));
    }
    let var = |i: usize, a: u32| {
        let mut e = vec![0; m];
        e[i] = a;
        Poly::monomial(e, 1)
    };
    let sigma: Vec<Poly> = (0..=m)
        .map(|j| {
            let mut acc = Poly::default();
            for mask in 0u32..(1 << m) {
                if mask.count_ones() as usize == j {
                    let e = (0..m).map(|v| (mask >> v) & 1).collect();
                    acc = acc.add(&Poly::monomial(e, 1));
                }
            }
            acc
        })
        .collect();
    for i in 0..m {
        let lhs = var(i, m as u32);
        let mut rhs = Poly::default();
        for j in 1..=m {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            rhs = rhs.add(&var(i, (m - j) as u32).mul(&sigma[j]).scale(sign));
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
