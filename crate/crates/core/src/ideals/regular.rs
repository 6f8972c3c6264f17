//! Degree-by-degree regularity test for a candidate h.s.o.p.
//!
//! In degree `δ` the quotient `R/(I(G) + θ)` has dimension
//! `H(δ) - rank M_δ`, where `H` is the Hilbert function of `R/I(G)` and the
//! rows of `M_δ` are the products `θ_k · m` for every monomial `m` of degree
//! `δ - deg θ_k` with independent support, written in the basis of degree-`δ`
//! monomials with independent support (everything else is zero in
//! `R/I(G)`).
//!
//! The forms are a regular sequence exactly when this Hilbert function
//! equals `h(t) · prod_k (1 + ... + t^{deg θ_k - 1})`. Comparison stops once
//! both sides vanish past the degree of that polynomial: a standard graded
//! algebra that is zero in one degree is zero in every higher degree.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{expected_artinian_hilbert, HilbertData, HsopSequence};
use crate::complexes::{f_vector, h_vector, independence_complex};
use crate::error::{invalid, Result};
use crate::graphs::{for_each_independent_set, Graph};
use crate::homology::rank::{rank_mod_p, rank_rational};
use crate::homology::{FieldSpec, SparseMatrix};

/// Primes used to certify regularity over `Q`.
pub const CERTIFICATE_PRIMES: [u32; 2] = [1_000_003, 1_000_033];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegularityStatus {
    Regular,
    NotRegular,
    NotHsopWithinCap,
    CapReached,
}

impl RegularityStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegularityStatus::Regular => "REGULAR",
            RegularityStatus::NotRegular => "NOT_REGULAR",
            RegularityStatus::NotHsopWithinCap => "NOT_HSOP_WITHIN_CAP",
            RegularityStatus::CapReached => "CAP_REACHED",
        }
    }
}

impl std::fmt::Display for RegularityStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    pub expected: BigInt,
    pub actual: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub status: RegularityStatus,
    pub per_degree: Vec<DegreeRow>,
    /// First degree where the quotient's dimension differs from the
    /// expected one.
    pub failing_degree: Option<usize>,
    pub field: FieldSpec,
    /// For `field = Q`: the prime whose computation certified the verdict,
    /// `None` when ranks were computed over `Q` directly.
    pub certified_by: Option<u32>,
}

/// How verdicts over `Q` are obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RationalMode {
    /// Try [`CERTIFICATE_PRIMES`] in turn and accept `REGULAR` from either;
    /// otherwise fall back to exact rational ranks.
    ///
    /// Sound because `rank_Q >= rank_p`: a mod-`p` quotient of the expected
    /// size bounds the rational one from above, while the rational one can
    /// never drop below the expected total for a system of parameters.
    #[default]
    PrimeCertificate,
    /// Exact rational ranks only.
    Exact,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub rational: RationalMode,
    /// Largest basis size allowed in any degree; exceeding it stops the run
    /// with `CAP_REACHED`.
    pub max_columns: Option<usize>,
}

/// Verifies that `seq` is a regular sequence on `R/I(G)` over `field`,
/// checking degrees `0..=degree_cap`.
pub fn verify_regular(
    g: &Graph,
    seq: &HsopSequence,
    field: FieldSpec,
    degree_cap: usize,
) -> Result<RegularityVerdict> {
    verify_regular_with(g, seq, field, degree_cap, VerifyOptions::default())
}

pub fn verify_regular_with(
    g: &Graph,
    seq: &HsopSequence,
    field: FieldSpec,
    degree_cap: usize,
    options: VerifyOptions,
) -> Result<RegularityVerdict> {
    if seq.variable_count != g.vertex_count() {
        return invalid(format!(
            "sequence uses {} variables but the graph has {} vertices",
            seq.variable_count,
            g.vertex_count()
        ));
    }
    let h = h_vector(&f_vector(&independence_complex(g))?);
    let expected = expected_artinian_hilbert(&h, &seq.degrees());
    let poly_degree = expected.len() - 1;
    if degree_cap < poly_degree + 1 {
        return invalid(format!(
            "degree cap {degree_cap} is below {} (expected Hilbert polynomial degree + 1)",
            poly_degree + 1
        ));
    }
    let mut run = Verifier::new(g, seq, &expected, degree_cap, options.max_columns);
    if !field.is_rational() {
        return Ok(run.run(Backend::Prime(field.characteristic()), field));
    }
    if options.rational == RationalMode::PrimeCertificate {
        for p in CERTIFICATE_PRIMES {
            let v = run.run(Backend::Prime(p), field);
            if v.status == RegularityStatus::Regular {
                return Ok(RegularityVerdict {
                    certified_by: Some(p),
                    ..v
                });
            }
            if v.status == RegularityStatus::CapReached {
                return Ok(v);
            }
        }
    }
    Ok(run.run(Backend::Rational, field))
}

/// Default cap: degree of the expected Hilbert polynomial plus two.
pub fn default_degree_cap(g: &Graph, seq: &HsopSequence) -> Result<usize> {
    let h = h_vector(&f_vector(&independence_complex(g))?);
    Ok(expected_artinian_hilbert(&h, &seq.degrees()).len() + 1)
}

#[derive(Clone, Copy)]
enum Backend {
    Prime(u32),
    Rational,
}

/// Monomials of one degree with independent support, lexicographically
/// sorted by exponent vector.
struct DegreeBasis {
    monomials: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, u32>,
}

struct Verifier<'a> {
    g: &'a Graph,
    seq: &'a HsopSequence,
    expected: &'a [BigInt],
    hilbert: HilbertData,
    degree_cap: usize,
    max_columns: Option<usize>,
    bases: Vec<Option<DegreeBasis>>,
}

impl<'a> Verifier<'a> {
    fn new(
        g: &'a Graph,
        seq: &'a HsopSequence,
        expected: &'a [BigInt],
        degree_cap: usize,
        max_columns: Option<usize>,
    ) -> Self {
        Verifier {
            g,
            seq,
            expected,
            hilbert: HilbertData::new(g),
            degree_cap,
            max_columns,
            bases: Vec::new(),
        }
    }

    fn basis(&mut self, degree: usize) -> &DegreeBasis {
        if self.bases.len() <= degree {
            self.bases.resize_with(degree + 1, || None);
        }
        if self.bases[degree].is_none() {
            self.bases[degree] = Some(build_basis(self.g, degree));
        }
        self.bases[degree].as_ref().expect("just built")
    }

    fn run(&mut self, backend: Backend, field: FieldSpec) -> RegularityVerdict {
        let poly_degree = self.expected.len() - 1;
        let mut per_degree = Vec::new();
        let mut failing_degree = None;
        let mut status = RegularityStatus::NotHsopWithinCap;
        for degree in 0..=self.degree_cap {
            let columns = usize::try_from(self.hilbert.value(degree)).unwrap_or(usize::MAX);
            if self.max_columns.is_some_and(|m| columns > m) {
                status = RegularityStatus::CapReached;
                break;
            }
            let expected = self.expected.get(degree).cloned().unwrap_or_else(BigInt::zero);
            let actual = BigInt::from(columns - self.image_rank(degree, backend));
            let mismatch = actual != expected;
            let vanished = actual.is_zero() && degree > poly_degree;
            per_degree.push(DegreeRow {
                degree,
                expected: expected.clone(),
                actual: actual.clone(),
            });
            if mismatch && failing_degree.is_none() {
                failing_degree = Some(degree);
            }
            if actual.is_zero() && (vanished || failing_degree.is_some()) {
                // the quotient vanishes from here on
                status = if failing_degree.is_some() {
                    RegularityStatus::NotRegular
                } else {
                    RegularityStatus::Regular
                };
                break;
            }
        }
        RegularityVerdict {
            status,
            per_degree,
            failing_degree,
            field,
            certified_by: None,
        }
    }

    /// Rank of the degree-`degree` part of the ideal generated by the forms.
    fn image_rank(&mut self, degree: usize, backend: Backend) -> usize {
        let forms: Vec<usize> = (0..self.seq.forms.len())
            .filter(|&k| self.seq.forms[k].degree <= degree)
            .collect();
        if forms.is_empty() {
            return 0;
        }
        for &k in &forms {
            self.basis(degree - self.seq.forms[k].degree);
        }
        self.basis(degree);
        let target = self.bases[degree].as_ref().expect("built above");
        let reduce = |c: i64| match backend {
            Backend::Prime(p) => c.rem_euclid(p as i64),
            Backend::Rational => c,
        };
        let mut entries = Vec::new();
        let mut row = 0usize;
        let mut product: Vec<u8> = Vec::new();
        let mut acc: Vec<(usize, i64)> = Vec::new();
        for &k in &forms {
            let form = &self.seq.forms[k];
            let source = self.bases[degree - form.degree].as_ref().expect("built above");
            for m in &source.monomials {
                acc.clear();
                for (e, c) in &form.terms {
                    product.clear();
                    product.extend(m.iter().zip(e).map(|(&a, &b)| a + b as u8));
                    if let Some(&col) = target.index.get(&product) {
                        acc.push((col as usize, *c));
                    }
                }
                if acc.is_empty() {
                    continue;
                }
                acc.sort_unstable_by_key(|x| x.0);
                let mut i = 0;
                let mut any = false;
                while i < acc.len() {
                    let col = acc[i].0;
                    let mut c = 0i64;
                    while i < acc.len() && acc[i].0 == col {
                        c += acc[i].1;
                        i += 1;
                    }
                    let c = reduce(c);
                    if c != 0 {
                        entries.push((row, col, c));
                        any = true;
                    }
                }
                if any {
                    row += 1;
                }
            }
        }
        let m = SparseMatrix::new(row, target.monomials.len(), entries)
            .expect("rows are merged per column");
        match backend {
            Backend::Prime(p) => rank_mod_p(&m, p),
            Backend::Rational => rank_rational(&m),
        }
    }
}

fn build_basis(g: &Graph, degree: usize) -> DegreeBasis {
    let n = g.vertex_count();
    let mut monomials = Vec::new();
    if degree == 0 {
        monomials.push(vec![0u8; n]);
    } else {
        for_each_independent_set(g, Some(degree), |s| {
            if s.is_empty() {
                return;
            }
            // positive exponents on s summing to degree
            let mut e = vec![0u8; n];
            distribute(s, degree, &mut e, &mut monomials);
        });
    }
    monomials.sort_unstable();
    let index = monomials
        .iter()
        .enumerate()
        .map(|(k, m)| (m.clone(), k as u32))
        .collect();
    DegreeBasis { monomials, index }
}

fn distribute(support: &[usize], remaining: usize, e: &mut [u8], out: &mut Vec<Vec<u8>>) {
    let (&v, rest) = support.split_first().expect("support is nonempty");
    if rest.is_empty() {
        e[v] = remaining as u8;
        out.push(e.to_vec());
        e[v] = 0;
        return;
    }
    for a in 1..=remaining - rest.len() {
        e[v] = a as u8;
        distribute(rest, remaining - a, e, out);
    }
    e[v] = 0;
}
