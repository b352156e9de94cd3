//! Exact lower bounds on the matching number of a graph with maximum degree
//! at most `k`, in terms of its order `n`, size `m` and component count `c`.
//!
//! Every value is an exact [`Rational`]; "tight" always means slack exactly
//! zero. [`audit_graph`] evaluates every bound whose hypotheses hold for a
//! concrete graph and reports the slack against the true matching number.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::matching::matching_number;
use crate::rational::{self, from_usize, int, ratio, Rational};

pub const MATCH_THM: &str = "match_thm";
pub const MATCH_THM2: &str = "match_thm2";
pub const COR_K_ODD: &str = "corKodd";
pub const COR_K_EVEN: &str = "corKeven";
pub const THM_C_A: &str = "thmC_a";
pub const COR_K_EVEN2: &str = "corKeven2";
pub const THM_C_B: &str = "thmC_b";
pub const COR_SUBCUBIC: &str = "corHaxScott";
pub const KREGULAR_REFERENCE: &str = "kregular_reference";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("k = {k} not allowed: {requirement}")]
    InvalidK { k: usize, requirement: &'static str },
    #[error("regular order {regular_n} inconsistent with n = {n}, m = {m}, k = {k}")]
    RegularMismatch { regular_n: usize, n: usize, m: usize, k: usize },
    #[error("maximum degree {max_degree} exceeds k = {k}")]
    DegreeExceedsK { max_degree: usize, k: usize },
    #[error("a connected k-regular graph needs n >= k + 1 and n*k even (n = {n}, k = {k})")]
    NoRegularGraph { n: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `α' >= a_k (n - c) + b_k m`
    Main,
    /// `α' >= b_k m - a_k n`, k even
    Even2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientSet {
    pub k: usize,
    /// Only defined for the main variant.
    #[serde(with = "rational::serde_exact::option")]
    pub epsilon_k: Option<Rational>,
    #[serde(with = "rational::serde_exact")]
    pub a_k: Rational,
    #[serde(with = "rational::serde_exact")]
    pub b_k: Rational,
    pub parity: Parity,
    pub variant: Variant,
}

fn k_rat(k: usize) -> Rational {
    from_usize(k)
}

/// `ε_k`, then `a_k = ε_k / 2` and `b_k = (2 - k ε_k) / (2k)`.
pub fn main_coefficients(k: usize) -> Result<CoefficientSet, BoundsError> {
    if k < 3 {
        return Err(BoundsError::InvalidK { k, requirement: "k >= 3" });
    }
    let kk = k_rat(k);
    let epsilon = match Parity::of(k) {
        Parity::Even => int(2) / (&kk * (&kk + int(1))),
        Parity::Odd => (int(2) * &kk - int(2)) / (&kk * (&kk * &kk - int(3))),
    };
    let a_k = &epsilon / int(2);
    let b_k = (int(2) - &kk * &epsilon) / (int(2) * &kk);
    Ok(CoefficientSet { k, epsilon_k: Some(epsilon), a_k, b_k, parity: Parity::of(k), variant: Variant::Main })
}

/// `a_k = (k-2)/(k²+k+2)`, `b_k = (k+2)/(k²+k+2)` for even `k >= 2`.
pub fn even2_coefficients(k: usize) -> Result<CoefficientSet, BoundsError> {
    if k < 2 || k % 2 == 1 {
        return Err(BoundsError::InvalidK { k, requirement: "k even and >= 2" });
    }
    let k = k as i64;
    let denom = k * k + k + 2;
    Ok(CoefficientSet {
        k: k as usize,
        epsilon_k: None,
        a_k: ratio(k - 2, denom),
        b_k: ratio(k + 2, denom),
        parity: Parity::Even,
        variant: Variant::Even2,
    })
}

/// `a_k (n - c) + b_k m` for graphs with no k-regular component.
pub fn lower_bound_general(n: usize, m: usize, c: usize, k: usize) -> Result<Rational, BoundsError> {
    let coeffs = main_coefficients(k)?;
    Ok(&coeffs.a_k * (from_usize(n) - from_usize(c)) + &coeffs.b_k * from_usize(m))
}

/// `b_k m - a_k n` (even variant) for graphs with no k-regular component.
pub fn lower_bound_even2(n: usize, m: usize, k: usize) -> Result<Rational, BoundsError> {
    let coeffs = even2_coefficients(k)?;
    Ok(&coeffs.b_k * from_usize(m) - &coeffs.a_k * from_usize(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedBound {
    pub name: &'static str,
    #[serde(with = "rational::serde_exact")]
    pub value: Rational,
    /// Set when an exceptional regular case replaced the generic constant.
    pub exception: Option<&'static str>,
}

/// Bounds for a connected graph of order `n` and size `m` with maximum degree
/// at most `k`. Pass `regular_n = Some(n)` exactly when the graph is
/// k-regular; the even-k bounds then switch to their exceptional constants.
pub fn lower_bound_connected(
    n: usize,
    m: usize,
    k: usize,
    regular_n: Option<usize>,
) -> Result<Vec<NamedBound>, BoundsError> {
    if k < 3 {
        return Err(BoundsError::InvalidK { k, requirement: "k >= 3" });
    }
    if let Some(rn) = regular_n {
        if rn != n || 2 * m != n * k {
            return Err(BoundsError::RegularMismatch { regular_n: rn, n, m, k });
        }
    }
    let coeffs = main_coefficients(k)?;
    let (nr, mr) = (from_usize(n), from_usize(m));
    let base = &coeffs.a_k * &nr + &coeffs.b_k * &mr;
    if Parity::of(k) == Parity::Odd {
        return Ok(vec![NamedBound { name: COR_K_ODD, value: base - &coeffs.a_k, exception: None }]);
    }

    let kk = k_rat(k);
    let (keven_sub, keven_exc) = match regular_n {
        Some(rn) if rn == k + 1 => (int(1) / &kk, Some("k-regular, n = k+1")),
        Some(rn) if rn == k + 3 => (int(3) / (&kk * (&kk + int(1))), Some("k-regular, n = k+3")),
        _ => (coeffs.a_k.clone(), None),
    };
    let even2 = even2_coefficients(k)?;
    let denom = int((k * k + k + 2) as i64);
    let (keven2_sub, keven2_exc) = match regular_n {
        Some(rn) if rn == k + 1 => (int(k as i64 + 2) / &denom, Some("k-regular, n = k+1")),
        Some(rn) if rn == k + 3 => (int(4) / &denom, Some("k-regular, n = k+3")),
        Some(9) if k == 4 => (int(2) / &denom, Some("4-regular, n = 9")),
        _ => (Rational::zero(), None),
    };
    Ok(vec![
        NamedBound { name: COR_K_EVEN, value: base - keven_sub, exception: keven_exc },
        NamedBound {
            name: COR_K_EVEN2,
            value: &even2.b_k * &mr - &even2.a_k * &nr - keven2_sub,
            exception: keven2_exc,
        },
    ])
}

/// `n/(k(k+1)) + m/(k+1) - 1/k`: the weaker even-k form that needs no
/// exceptional cases.
pub fn theorem_c_a(n: usize, m: usize, k: usize) -> Result<Rational, BoundsError> {
    if k < 4 || k % 2 == 1 {
        return Err(BoundsError::InvalidK { k, requirement: "k even and >= 4" });
    }
    let coeffs = main_coefficients(k)?;
    Ok(&coeffs.a_k * from_usize(n) + &coeffs.b_k * from_usize(m) - int(1) / k_rat(k))
}

/// `b_k m - a_k n - (k+2)/(k²+k+2)`: the even-k form that needs no
/// exceptional cases.
pub fn theorem_c_b(n: usize, m: usize, k: usize) -> Result<Rational, BoundsError> {
    if k < 4 || k % 2 == 1 {
        return Err(BoundsError::InvalidK { k, requirement: "k even and >= 4" });
    }
    let even2 = even2_coefficients(k)?;
    Ok(&even2.b_k * from_usize(m) - &even2.a_k * from_usize(n) - &even2.b_k)
}

/// Tight lower bound for connected k-regular graphs of order `n`.
pub fn kregular_reference_bound(n: usize, k: usize) -> Result<Rational, BoundsError> {
    if k < 2 {
        return Err(BoundsError::InvalidK { k, requirement: "k >= 2" });
    }
    if n < k + 1 || (n * k) % 2 == 1 {
        return Err(BoundsError::NoRegularGraph { n, k });
    }
    let (nn, kk) = (from_usize(n), k_rat(k));
    Ok(match Parity::of(k) {
        Parity::Even => {
            let ratio_term = (&kk * &kk + int(4)) / (&kk * &kk + &kk + int(2)) * &nn / int(2);
            let half = (&nn - int(1)) / int(2);
            ratio_term.min(half)
        }
        Parity::Odd => {
            let k3 = &kk * &kk * &kk;
            ((&k3 - &kk * &kk - int(2)) * &nn - int(2) * &kk + int(2)) / (int(2) * (&k3 - int(3) * &kk))
        }
    })
}

/// The k-regular reference bound written as a formula in `n`, reduced:
/// `(4n-1)/9`, `min{5n/11, (n-1)/2}`, ...
pub fn kregular_reference_expression(k: usize) -> Result<String, BoundsError> {
    if k < 2 {
        return Err(BoundsError::InvalidK { k, requirement: "k >= 2" });
    }
    let k = k as i64;
    Ok(if k % 2 == 0 {
        let slope = ratio(k * k + 4, 2 * (k * k + k + 2));
        format!("min{{{}n/{}, (n-1)/2}}", slope.numer(), slope.denom())
    } else {
        let (coef, constant, denom) = (k * k * k - k * k - 2, 2 * k - 2, 2 * (k * k * k - 3 * k));
        let g = coef.gcd(&constant).gcd(&denom);
        format!("({}n-{})/{}", coef / g, constant / g, denom / g)
    })
}

/// `4n₃/9 + n₂/3 + 2n₁/9 - c/9` for graphs with maximum degree at most 3.
pub fn subcubic_degree_bound(n1: usize, n2: usize, n3: usize, c: usize) -> Rational {
    ratio(4, 9) * from_usize(n3) + ratio(1, 3) * from_usize(n2) + ratio(2, 9) * from_usize(n1)
        - ratio(1, 9) * from_usize(c)
}

/// Integer form `D α' >= A n + B m - C c` of the main bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub k: usize,
    pub d: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

pub fn table2_row(k: usize) -> Result<Table2Row, BoundsError> {
    let coeffs = main_coefficients(k)?;
    let d = coeffs.a_k.denom().lcm(coeffs.b_k.denom());
    let scale = Rational::from_integer(d.clone());
    let to_u64 = |r: Rational| -> u64 {
        let r = r.to_integer();
        u64::try_from(r).expect("table entries fit in u64")
    };
    let a = to_u64(&coeffs.a_k * &scale);
    let b = to_u64(&coeffs.b_k * &scale);
    Ok(Table2Row { k, d: u64::try_from(d).expect("denominator fits in u64"), a, b, c: a })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub bound_name: &'static str,
    pub applicable: bool,
    pub reason: String,
    #[serde(with = "rational::serde_exact::option")]
    pub bound_value: Option<Rational>,
    #[serde(with = "rational::serde_exact::option")]
    pub slack: Option<Rational>,
    pub tight: bool,
}

impl BoundEntry {
    fn applicable(name: &'static str, reason: impl Into<String>, value: Rational, alpha: usize) -> Self {
        let slack = from_usize(alpha) - &value;
        Self {
            bound_name: name,
            applicable: true,
            reason: reason.into(),
            tight: slack.is_zero(),
            bound_value: Some(value),
            slack: Some(slack),
        }
    }

    fn skipped(name: &'static str, reason: impl Into<String>) -> Self {
        Self { bound_name: name, applicable: false, reason: reason.into(), bound_value: None, slack: None, tight: false }
    }

    pub fn is_violation(&self) -> bool {
        self.applicable && self.slack.as_ref().is_some_and(|s| s.is_negative())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub connected: bool,
    pub k_regular: bool,
    pub alpha: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.is_violation())
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.bound_name == name)
    }
}

/// Computes `α'(g)` and evaluates every bound whose hypotheses `g` meets.
pub fn audit_graph(g: &Graph, k: usize) -> Result<BoundReport, BoundsError> {
    let max_degree = g.max_degree();
    if max_degree > k {
        return Err(BoundsError::DegreeExceedsK { max_degree, k });
    }
    let alpha = matching_number(g);
    Ok(audit_with_alpha(g, k, alpha))
}

pub(crate) fn audit_with_alpha(g: &Graph, k: usize, alpha: usize) -> BoundReport {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let regularity = g.regularity(k);
    let c = regularity.per_component.len();
    let connected = c == 1;
    let k_regular = connected && regularity.global;
    let regular_component = regularity.any_component();
    let even = k.is_multiple_of(2);
    let mut entries = Vec::new();

    entries.push(if k < 3 {
        BoundEntry::skipped(MATCH_THM, "requires k >= 3")
    } else if regular_component {
        BoundEntry::skipped(MATCH_THM, "k-regular component")
    } else {
        let value = lower_bound_general(n, m, c, k).expect("k >= 3");
        BoundEntry::applicable(MATCH_THM, "no k-regular component", value, alpha)
    });

    entries.push(if !even || k < 2 {
        BoundEntry::skipped(MATCH_THM2, "requires even k")
    } else if regular_component {
        BoundEntry::skipped(MATCH_THM2, "k-regular component")
    } else {
        let value = lower_bound_even2(n, m, k).expect("k even");
        BoundEntry::applicable(MATCH_THM2, "no k-regular component", value, alpha)
    });

    let connected_bounds = if connected && k >= 3 && (!even || k >= 4) {
        Some(lower_bound_connected(n, m, k, k_regular.then_some(n)).expect("hypotheses checked"))
    } else {
        None
    };
    let connected_reason = |name: &'static str, bounds: &Option<Vec<NamedBound>>| -> BoundEntry {
        match bounds.as_ref().and_then(|b| b.iter().find(|nb| nb.name == name)) {
            Some(nb) => {
                let reason = match nb.exception {
                    Some(exc) => format!("connected; exceptional case: {exc}"),
                    None => "connected".to_string(),
                };
                BoundEntry::applicable(name, reason, nb.value.clone(), alpha)
            }
            None if !connected => BoundEntry::skipped(name, "graph is not connected"),
            None => BoundEntry::skipped(name, "parity or range of k"),
        }
    };

    entries.push(connected_reason(COR_K_ODD, &connected_bounds));
    entries.push(connected_reason(COR_K_EVEN, &connected_bounds));
    entries.push(connected_reason(COR_K_EVEN2, &connected_bounds));

    for (name, f) in [(THM_C_A, theorem_c_a as fn(usize, usize, usize) -> _), (THM_C_B, theorem_c_b)] {
        entries.push(if !connected {
            BoundEntry::skipped(name, "graph is not connected")
        } else {
            match f(n, m, k) {
                Ok(value) => BoundEntry::applicable(name, "connected", value, alpha),
                Err(_) => BoundEntry::skipped(name, "requires even k >= 4"),
            }
        });
    }

    entries.push(if k == 3 {
        let profile = g.degree_profile();
        let value = subcubic_degree_bound(profile.count(1), profile.count(2), profile.count(3), c);
        BoundEntry::applicable(COR_SUBCUBIC, "maximum degree at most 3", value, alpha)
    } else {
        BoundEntry::skipped(COR_SUBCUBIC, "requires k = 3")
    });

    entries.push(if k_regular && k >= 2 {
        let value = kregular_reference_bound(n, k).expect("a connected k-regular graph exists");
        BoundEntry::applicable(KREGULAR_REFERENCE, "connected and k-regular", value, alpha)
    } else {
        BoundEntry::skipped(KREGULAR_REFERENCE, "not a connected k-regular graph")
    });

    BoundReport { k, n, m, components: c, connected, k_regular, alpha, entries }
}
