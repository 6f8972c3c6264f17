//! Cohen–Macaulay decisions.
//!
//! Three routes, cheapest first:
//!
//! * the h-vector screen: a negative `h_k` rules out CM over every field;
//! * Reisner's criterion on a general complex: every link `lk(F)`, `F`
//!   including `∅`, must have `H̃_i(lk F) = 0` for `i < dim lk F`;
//! * for `Δ(n)`, the parity ladder: links of `Δ(n)` are copies of
//!   `Δ(n - 2|F|)`, so it is enough to test `Δ(l)` for `l <= n` of the same
//!   parity as `n`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::complexes::{
    component_count, f_vector, h_vector, link, triangular_complex, triangular_f_closed,
    HVector, SimplicialComplex,
};
use crate::error::{invalid, Error, Result};
use crate::graphs::{independence_number, Graph};
use crate::homology::{reduced_betti_table, FieldSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CmStatus {
    Cm,
    NotCm,
    Unknown,
}

impl CmStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CmStatus::Cm => "CM",
            CmStatus::NotCm => "NOT_CM",
            CmStatus::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for CmStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CmMethod {
    HScreen,
    Connectivity,
    ReisnerFull,
    ReisnerParity,
    FastPathTheorem,
}

impl CmMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            CmMethod::HScreen => "h-screen",
            CmMethod::Connectivity => "connectivity",
            CmMethod::ReisnerFull => "reisner-full",
            CmMethod::ReisnerParity => "reisner-parity",
            CmMethod::FastPathTheorem => "fast-path-theorem",
        }
    }
}

impl fmt::Display for CmMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// Evidence against Cohen–Macaulayness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// `H̃_index(complex) = dim ≠ 0` below the complex's dimension.
    Homology {
        complex: String,
        index: isize,
        dim: usize,
    },
    /// `h_index(complex) = value < 0`.
    NegativeH {
        complex: String,
        index: usize,
        value: BigInt,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Homology { complex, index, dim } => {
                write!(f, "dim H̃_{index}({complex}) = {dim}")
            }
            Witness::NegativeH { complex, index, value } => {
                write!(f, "h_{index}({complex}) = {value}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmVerdict {
    pub status: CmStatus,
    pub field: FieldSpec,
    pub witnesses: Vec<Witness>,
    pub method: CmMethod,
}

impl CmVerdict {
    fn cm(field: FieldSpec, method: CmMethod) -> Self {
        debug_assert!(method != CmMethod::HScreen);
        CmVerdict {
            status: CmStatus::Cm,
            field,
            witnesses: Vec::new(),
            method,
        }
    }

    fn not_cm(field: FieldSpec, method: CmMethod, witness: Witness) -> Self {
        CmVerdict {
            status: CmStatus::NotCm,
            field,
            witnesses: vec![witness],
            method,
        }
    }

    fn unknown(field: FieldSpec, method: CmMethod) -> Self {
        CmVerdict {
            status: CmStatus::Unknown,
            field,
            witnesses: Vec::new(),
            method,
        }
    }

    pub fn is_cm(&self) -> bool {
        self.status == CmStatus::Cm
    }
}

/// User-imposed resource caps. Exceeding one yields an `UNKNOWN` verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckLimits {
    /// Largest number of faces (including `∅`) a complex may have before
    /// homology is computed on it.
    pub max_faces: Option<usize>,
}

impl CheckLimits {
    fn exceeded(&self, faces: usize) -> bool {
        self.max_faces.is_some_and(|m| faces > m)
    }
}

/// Dimension of `R/I(G)`, which equals the independence number of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KrullDimension(pub usize);

impl KrullDimension {
    pub fn value(&self) -> usize {
        self.0
    }
}

pub fn krull_dimension(g: &Graph) -> KrullDimension {
    KrullDimension(independence_number(g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HScreen {
    Pass,
    Fail { index: usize, value: BigInt },
}

impl HScreen {
    pub fn passed(&self) -> bool {
        matches!(self, HScreen::Pass)
    }
}

fn screen_h(h: &HVector) -> HScreen {
    match h.first_negative() {
        Some((index, value)) => HScreen::Fail {
            index,
            value: value.clone(),
        },
        None => HScreen::Pass,
    }
}

/// Fails at the first negative h-entry; a failure rules out CM over every
/// field. Passing proves nothing.
pub fn h_screen(c: &SimplicialComplex) -> Result<HScreen> {
    Ok(screen_h(&h_vector(&f_vector(c)?)))
}

fn face_name(face: &[usize]) -> String {
    if face.is_empty() {
        "lk(∅)".to_string()
    } else {
        let parts: Vec<String> = face.iter().map(ToString::to_string).collect();
        format!("lk({{{}}})", parts.join(","))
    }
}

/// Checks that `H̃_i(c) = 0` for every `i < dim c`, returning the first
/// offending `(i, dim H̃_i)`. One-dimensional complexes use the component
/// count.
fn lower_homology_failure(c: &SimplicialComplex, field: FieldSpec) -> Option<(isize, usize)> {
    match c.dim() {
        d if d <= 0 => None,
        1 => {
            let k = component_count(c);
            (k != 1).then(|| (0, k.saturating_sub(1)))
        }
        d => reduced_betti_table(c, field).first_nonzero_below(d),
    }
}

/// Reisner's criterion over `field`, run over all links.
pub fn reisner_check(c: &SimplicialComplex, field: FieldSpec) -> Result<CmVerdict> {
    reisner_check_with(c, field, CheckLimits::default())
}

pub fn reisner_check_with(
    c: &SimplicialComplex,
    field: FieldSpec,
    limits: CheckLimits,
) -> Result<CmVerdict> {
    if c.is_void() {
        return invalid("Reisner's criterion needs a nonvoid complex");
    }
    let method = if c.dim() == 1 {
        CmMethod::Connectivity
    } else {
        CmMethod::ReisnerFull
    };
    if limits.exceeded(c.total_faces()) {
        return Ok(CmVerdict::unknown(field, method));
    }

    // links up to order-preserving relabeling, with the least face giving each
    let mut classes: HashMap<SimplicialComplex, Vec<usize>> = HashMap::new();
    let mut order: Vec<(SimplicialComplex, Vec<usize>)> = Vec::new();
    let faces = std::iter::once(&[][..]).chain(c.iter_faces());
    for f in faces {
        let lk = link(c, f)?.compressed();
        if lk.dim() <= 0 {
            continue;
        }
        if let std::collections::hash_map::Entry::Vacant(e) = classes.entry(lk.clone()) {
            e.insert(f.to_vec());
            order.push((lk, f.to_vec()));
        }
    }
    order.sort_by(|a, b| {
        a.0.total_faces()
            .cmp(&b.0.total_faces())
            .then_with(|| a.1.len().cmp(&b.1.len()))
            .then_with(|| a.1.cmp(&b.1))
    });
    for (lk, face) in &order {
        if let Some((index, dim)) = lower_homology_failure(lk, field) {
            let w = Witness::Homology {
                complex: face_name(face),
                index,
                dim,
            };
            return Ok(CmVerdict::not_cm(field, method, w));
        }
    }
    Ok(CmVerdict::cm(field, method))
}

/// Same-parity ladder `l = n mod 2, ..., n` with `l >= 2`, ascending.
fn parity_ladder(n: usize) -> impl Iterator<Item = usize> {
    (2..=n).filter(move |l| l % 2 == n % 2)
}

/// Decides whether `Δ(n)` is CM over `field` by testing `Δ(l)` for every
/// `l <= n` with the parity of `n`.
///
/// All h-screens run first (from the closed-form face counts), then the
/// homology of each `Δ(l)` below its top dimension, smallest `l` first.
pub fn reisner_triangular(n: usize, field: FieldSpec) -> Result<CmVerdict> {
    reisner_triangular_with(n, field, CheckLimits::default())
}

pub fn reisner_triangular_with(n: usize, field: FieldSpec, limits: CheckLimits) -> Result<CmVerdict> {
    if n < 2 {
        return invalid(format!("T_n needs n >= 2, got {n}"));
    }
    let mut sizes = Vec::new();
    for l in parity_ladder(n) {
        let f = triangular_f_closed(l)?;
        if let HScreen::Fail { index, value } = screen_h(&h_vector(&f)) {
            let w = Witness::NegativeH {
                complex: format!("Δ({l})"),
                index,
                value,
            };
            return Ok(CmVerdict::not_cm(field, CmMethod::HScreen, w));
        }
        let total: BigInt = f.entries.iter().sum();
        sizes.push((l, usize::try_from(total).unwrap_or(usize::MAX)));
    }
    for (l, total) in sizes {
        if limits.exceeded(total) {
            return Ok(CmVerdict::unknown(field, CmMethod::ReisnerParity));
        }
        let delta = triangular_complex(l);
        if let Some((index, dim)) = lower_homology_failure(&delta, field) {
            let w = Witness::Homology {
                complex: format!("Δ({l})"),
                index,
                dim,
            };
            return Ok(CmVerdict::not_cm(field, CmMethod::ReisnerParity, w));
        }
    }
    Ok(CmVerdict::cm(field, CmMethod::ReisnerParity))
}

/// The classification of `T_n`.
///
/// Without `force_full`: `n ∈ {2, 3, 5}` is CM; even `n >= 4` fails through
/// `Δ(4)` being disconnected; odd `n >= 11` fails through `h_5(Δ(11)) < 0`;
/// `n ∈ {7, 9}` runs the parity ladder over `field`. With `force_full` the
/// ladder always runs and is cross-checked against the fast path.
pub fn classify_triangular(n: usize, field: FieldSpec, force_full: bool) -> Result<CmVerdict> {
    classify_triangular_with(n, field, force_full, CheckLimits::default())
}

pub fn classify_triangular_with(
    n: usize,
    field: FieldSpec,
    force_full: bool,
    limits: CheckLimits,
) -> Result<CmVerdict> {
    if n < 2 {
        return invalid(format!("T_n needs n >= 2, got {n}"));
    }
    let fast = fast_path(n, field)?;
    if !force_full {
        if let Some(v) = fast {
            return Ok(v);
        }
        return reisner_triangular_with(n, field, limits);
    }
    let full = reisner_triangular_with(n, field, limits)?;
    if full.status == CmStatus::Unknown {
        return Ok(full);
    }
    if let Some(v) = fast {
        if v.status != full.status {
            return Err(Error::Inconsistent(format!(
                "T_{n} over {field}: fast path says {}, full check says {}",
                v.status, full.status
            )));
        }
    }
    Ok(full)
}

fn fast_path(n: usize, field: FieldSpec) -> Result<Option<CmVerdict>> {
    let m = CmMethod::FastPathTheorem;
    Ok(match n {
        2 | 3 | 5 => Some(CmVerdict::cm(field, m)),
        n if n % 2 == 0 => {
            let k = component_count(&triangular_complex(4));
            let w = Witness::Homology {
                complex: "Δ(4)".into(),
                index: 0,
                dim: k - 1,
            };
            Some(CmVerdict::not_cm(field, m, w))
        }
        n if n >= 11 => match screen_h(&h_vector(&triangular_f_closed(11)?)) {
            HScreen::Fail { index, value } => {
                let w = Witness::NegativeH {
                    complex: "Δ(11)".into(),
                    index,
                    value,
                };
                Some(CmVerdict::not_cm(field, m, w))
            }
            HScreen::Pass => unreachable!("h_5(Δ(11)) is negative"),
        },
        _ => None,
    })
}

/// CM test for an arbitrary complex: h-screen, then Reisner over all links.
/// With `force_full` the Reisner check also runs after a failed screen and
/// must agree.
pub fn classify_complex(c: &SimplicialComplex, field: FieldSpec, force_full: bool) -> Result<CmVerdict> {
    classify_complex_with(c, field, force_full, CheckLimits::default())
}

pub fn classify_complex_with(
    c: &SimplicialComplex,
    field: FieldSpec,
    force_full: bool,
    limits: CheckLimits,
) -> Result<CmVerdict> {
    if let HScreen::Fail { index, value } = h_screen(c)? {
        let w = Witness::NegativeH {
            complex: "lk(∅)".into(),
            index,
            value,
        };
        let screened = CmVerdict::not_cm(field, CmMethod::HScreen, w);
        if force_full {
            let full = reisner_check_with(c, field, limits)?;
            if full.status == CmStatus::Cm {
                return Err(Error::Inconsistent(
                    "negative h-vector but Reisner's criterion holds".into(),
                ));
            }
        }
        return Ok(screened);
    }
    reisner_check_with(c, field, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::independence_complex;
    use crate::graphs::{complete, triangular};

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    #[test]
    fn h_screens() {
        assert_eq!(
            h_screen(&triangular_complex(6)).unwrap(),
            HScreen::Fail { index: 3, value: BigInt::from(-16) }
        );
        assert!(h_screen(&triangular_complex(5)).unwrap().passed());
        assert!(h_screen(&SimplicialComplex::void(0)).is_err());
    }

    #[test]
    fn reisner_on_small_complexes() {
        let v = reisner_check(&triangular_complex(4), q()).unwrap();
        assert_eq!(v.status, CmStatus::NotCm);
        assert_eq!(
            v.witnesses,
            vec![Witness::Homology { complex: "lk(∅)".into(), index: 0, dim: 2 }]
        );
        let points = independence_complex(&complete(4).unwrap());
        assert!(reisner_check(&points, q()).unwrap().is_cm());
        for p in [0, 2, 3, 5] {
            let f = FieldSpec::new(p).unwrap();
            assert!(reisner_check(&triangular_complex(5), f).unwrap().is_cm());
        }
        assert!(reisner_check(&SimplicialComplex::empty_face(0), q()).unwrap().is_cm());
    }

    #[test]
    fn unequal_facets_fail() {
        let path = Graph::new(3, [(0, 1), (1, 2)], None).unwrap();
        let c = independence_complex(&path);
        assert_eq!(reisner_check(&c, q()).unwrap().status, CmStatus::NotCm);
        let v = classify_complex(&c, q(), true).unwrap();
        assert_eq!(v.method, CmMethod::HScreen);
    }

    #[test]
    fn ladder_small_cases() {
        assert!(reisner_triangular(5, q()).unwrap().is_cm());
        let v = reisner_triangular(8, FieldSpec::new(3).unwrap()).unwrap();
        assert_eq!(v.status, CmStatus::NotCm);
        assert!(matches!(&v.witnesses[0], Witness::NegativeH { complex, .. } if complex == "Δ(4)"));
        assert!(reisner_triangular(1, q()).is_err());
    }

    #[test]
    fn fast_paths() {
        assert!(classify_triangular(2, q(), false).unwrap().is_cm());
        let v = classify_triangular(10, q(), false).unwrap();
        assert_eq!(v.status, CmStatus::NotCm);
        assert_eq!(v.method, CmMethod::FastPathTheorem);
        let v = classify_triangular(13, q(), false).unwrap();
        assert_eq!(
            v.witnesses,
            vec![Witness::NegativeH { complex: "Δ(11)".into(), index: 5, value: BigInt::from(-936) }]
        );
        assert!(classify_triangular(1, q(), false).is_err());
    }

    #[test]
    fn limits_give_unknown() {
        let limits = CheckLimits { max_faces: Some(10) };
        let v = reisner_triangular_with(7, q(), limits).unwrap();
        assert_eq!(v.status, CmStatus::Unknown);
        let v = reisner_check_with(&triangular_complex(5), q(), limits).unwrap();
        assert_eq!(v.status, CmStatus::Unknown);
    }

    #[test]
    fn krull() {
        assert_eq!(krull_dimension(&triangular(7).unwrap()).value(), 3);
        assert_eq!(krull_dimension(&complete(5).unwrap()).value(), 1);
        assert_eq!(krull_dimension(&Graph::edgeless(4)).value(), 4);
    }
}
