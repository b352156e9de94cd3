//! The convex set `L_k` of coefficient pairs `(γ, β)` for which
//! `α'(G) >= γ n + β m - K` holds, for some constant `K`, over all connected
//! graphs with maximum degree at most `k`.
//!
//! A pair is also written `(a, b)`; [`RationalPoint`] stores it as
//! `(gamma, beta)` either way. Pairs in `L_k` are called k-good, others
//! k-bad. The boundary belongs to `L_k`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{gkr_block_count, Block, FamilySpec, TreeMode, TreeSource};
use crate::rational::{exact_string, from_usize, int, ratio, to_f64, zero, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegionError {
    #[error("k = {0} not allowed: the region is defined for k >= 3")]
    InvalidK(usize),
    #[error("bounding box is empty or degenerate")]
    DegenerateBox,
    #[error("bounding box does not contain the extreme point {0}")]
    ExtremePointOutside(Box<RationalPoint>),
    #[error("epsilon {0} out of range")]
    EpsilonOutOfRange(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalPoint {
    #[serde(with = "crate::rational::serde_exact")]
    pub gamma: Rational,
    #[serde(with = "crate::rational::serde_exact")]
    pub beta: Rational,
}

impl RationalPoint {
    pub fn new(gamma: Rational, beta: Rational) -> Self {
        Self { gamma, beta }
    }

    /// Parses `"p/q,p/q"`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let (g, b) = text.split_once(',').ok_or_else(|| format!("expected gamma,beta in {text:?}"))?;
        Ok(Self::new(crate::rational::parse_rational(g)?, crate::rational::parse_rational(b)?))
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", exact_string(&self.gamma), exact_string(&self.beta))
    }
}

/// The closed half-plane `β <= slope·γ + intercept`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfSpace {
    pub name: &'static str,
    #[serde(with = "crate::rational::serde_exact")]
    pub slope: Rational,
    #[serde(with = "crate::rational::serde_exact")]
    pub intercept: Rational,
}

impl HalfSpace {
    pub fn line_at(&self, gamma: &Rational) -> Rational {
        &self.slope * gamma + &self.intercept
    }

    /// `slope·γ + intercept - β`; nonnegative exactly on the half-plane.
    pub fn margin(&self, p: &RationalPoint) -> Rational {
        self.line_at(&p.gamma) - &p.beta
    }

    pub fn contains(&self, p: &RationalPoint) -> bool {
        self.margin(p) >= zero()
    }

    pub fn on_boundary(&self, p: &RationalPoint) -> bool {
        self.margin(p) == zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Good,
    Bad,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionLk {
    pub k: usize,
    pub half_spaces: Vec<HalfSpace>,
    pub extreme_points: Vec<RationalPoint>,
}

impl RegionLk {
    pub fn new(k: usize) -> Result<Self, RegionError> {
        Ok(Self { k, half_spaces: half_spaces(k)?, extreme_points: extreme_points(k)? })
    }
}

fn check_k(k: usize) -> Result<(), RegionError> {
    if k < 3 {
        return Err(RegionError::InvalidK(k));
    }
    Ok(())
}

pub fn half_spaces(k: usize) -> Result<Vec<HalfSpace>, RegionError> {
    check_k(k)?;
    let kq = from_usize(k);
    let k2 = &kq * &kq;
    let k3 = &k2 * &kq;
    let l1 = HalfSpace { name: "l1", slope: int(-1), intercept: int(1) / &kq };
    if k % 2 == 1 {
        let l2 = HalfSpace {
            name: "l2",
            slope: int(-2) / &kq,
            intercept: (&k3 - &k2 - int(2)) / (&k2 * (&k2 - int(3))),
        };
        return Ok(vec![l1, l2]);
    }
    let l3 = HalfSpace {
        name: "l3",
        slope: int(-2) / &kq,
        intercept: (&k2 + int(4)) / (&kq * (&k2 + &kq + int(2))),
    };
    let d4 = &k3 - &kq + int(2);
    let l4 = HalfSpace { name: "l4", slope: int(-2) * &k2 / &d4, intercept: (&k2 - &kq + int(2)) / &d4 };
    Ok(vec![l1, l3, l4])
}

/// Extreme points ordered by decreasing `γ`.
pub fn extreme_points(k: usize) -> Result<Vec<RationalPoint>, RegionError> {
    check_k(k)?;
    let kq = from_usize(k);
    let k2 = &kq * &kq;
    if k % 2 == 1 {
        let den = &kq * (&k2 - int(3));
        return Ok(vec![RationalPoint::new((&kq - int(1)) / &den, (&k2 - &kq - int(2)) / &den)]);
    }
    let d = &k2 + &kq + int(2);
    Ok(vec![
        RationalPoint::new(int(1) / (&kq * (&kq + int(1))), int(1) / (&kq + int(1))),
        RationalPoint::new(-(&kq - int(2)) / &d, (&kq + int(2)) / &d),
    ])
}

/// Case analysis on `a` relative to the extreme points.
pub fn classify_pair(k: usize, p: &RationalPoint) -> Result<Classification, RegionError> {
    check_k(k)?;
    let kq = from_usize(k);
    let (a, b) = (&p.gamma, &p.beta);
    let points = extreme_points(k)?;
    let limit = if k % 2 == 1 {
        let (sa, sb) = (&points[0].gamma, &points[0].beta);
        if a <= sa {
            sb + int(2) * (sa - a) / &kq
        } else {
            sb + sa - a
        }
    } else {
        let (a1, b1) = (&points[0].gamma, &points[0].beta);
        let (a2, b2) = (&points[1].gamma, &points[1].beta);
        if a <= a2 {
            b2 + int(2) * (a2 - a) / &kq
        } else if a > a1 {
            b1 + a1 - a
        } else {
            b2 + (b1 - b2) * (a - a2) / (a1 - a2)
        }
    };
    Ok(if b <= &limit { Classification::Good } else { Classification::Bad })
}

pub fn classify_pair_geometric(k: usize, p: &RationalPoint) -> Result<Classification, RegionError> {
    let inside = half_spaces(k)?.iter().all(|h| h.contains(p));
    Ok(if inside { Classification::Good } else { Classification::Bad })
}

/// Largest `β` with `(γ, β)` in `L_k`.
pub fn boundary_beta(k: usize, gamma: &Rational) -> Result<Rational, RegionError> {
    Ok(half_spaces(k)?.iter().map(|h| h.line_at(gamma)).min().expect("at least two half-spaces"))
}

pub fn is_boundary(k: usize, p: &RationalPoint) -> Result<bool, RegionError> {
    Ok(p.beta == boundary_beta(k, &p.gamma)?)
}

/// Points of a `step`-spaced grid over `[g0, g1] × [b0, b1]` where the two
/// classifiers disagree, together with the number of points checked.
pub fn classifier_disagreements(
    k: usize,
    bbox: &BoundingBox,
    step: &Rational,
) -> Result<(usize, Vec<RationalPoint>), RegionError> {
    check_k(k)?;
    bbox.validate()?;
    let axis = |lo: &Rational, hi: &Rational| -> Vec<Rational> {
        let mut values = Vec::new();
        let mut x = lo.clone();
        while &x <= hi {
            values.push(x.clone());
            x += step;
        }
        values
    };
    let gammas = axis(&bbox.gamma_min, &bbox.gamma_max);
    let betas = axis(&bbox.beta_min, &bbox.beta_max);
    let rows: Vec<Vec<RationalPoint>> = betas
        .par_iter()
        .map(|beta| {
            gammas
                .iter()
                .map(|gamma| RationalPoint::new(gamma.clone(), beta.clone()))
                .filter(|p| classify_pair(k, p).ok() != classify_pair_geometric(k, p).ok())
                .collect()
        })
        .collect();
    Ok((gammas.len() * betas.len(), rows.into_iter().flatten().collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    Trees,
    GkrPrime,
    HkrTree,
    HkrRegular,
    Fkr,
}

/// Families on which a boundary pair is met with equality up to one constant.
///
/// The constant `S` is not predicted; instantiate the families and solve
/// `α' = γ n + β m - S` from any one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightnessWitness {
    pub k: usize,
    pub point: RationalPoint,
    pub kinds: Vec<WitnessKind>,
    pub constant: Option<Rational>,
}

impl TightnessWitness {
    /// Three instances of increasing size for `kind`.
    pub fn instances(&self, kind: WitnessKind) -> Vec<FamilySpec> {
        let k = self.k;
        let sizes: [usize; 3] = match kind {
            WitnessKind::HkrRegular => [1, k, 2 * k - 1],
            _ => [1, 2, 3],
        };
        sizes
            .iter()
            .map(|&r| match kind {
                WitnessKind::Trees => FamilySpec::Gkr { k, r, blocks: vec![Block::Single; gkr_block_count(k, r)] },
                WitnessKind::GkrPrime => FamilySpec::Gkr { k, r, blocks: vec![Block::Gadget; gkr_block_count(k, r)] },
                WitnessKind::HkrTree => FamilySpec::Hkr { k, tree: TreeSource::Canonical { r, mode: TreeMode::Tree } },
                WitnessKind::HkrRegular => {
                    FamilySpec::Hkr { k, tree: TreeSource::Canonical { r, mode: TreeMode::Regular } }
                }
                WitnessKind::Fkr => FamilySpec::Fkr { k, r },
            })
            .collect()
    }
}

/// Witness families for a boundary point of `L_k`; `None` off the boundary.
pub fn tight_family_for(k: usize, p: &RationalPoint) -> Result<Option<TightnessWitness>, RegionError> {
    if !is_boundary(k, p)? {
        return Ok(None);
    }
    let points = extreme_points(k)?;
    let a = &p.gamma;
    use std::cmp::Ordering::*;
    let kinds = if k % 2 == 1 {
        match a.cmp(&points[0].gamma) {
            Greater => vec![WitnessKind::HkrTree],
            Equal => vec![WitnessKind::HkrTree, WitnessKind::HkrRegular],
            Less => vec![WitnessKind::HkrRegular],
        }
    } else {
        let (a1, a2) = (&points[0].gamma, &points[1].gamma);
        match (a.cmp(a1), a.cmp(a2)) {
            (Greater, _) => vec![WitnessKind::Trees],
            (Equal, _) => vec![WitnessKind::Trees, WitnessKind::GkrPrime],
            (Less, Greater) => vec![WitnessKind::GkrPrime],
            (_, Equal) => vec![WitnessKind::GkrPrime, WitnessKind::Fkr],
            (_, Less) => vec![WitnessKind::Fkr],
        }
    };
    Ok(Some(TightnessWitness { k, point: p.clone(), kinds, constant: None }))
}

/// Coefficient transformations that preserve k-goodness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transform {
    /// `(a, b - ε)`
    ShiftDown(Rational),
    /// `(a + ε, b - ε)`
    TreeShear(Rational),
    /// `(a - εk, b + 2ε)`
    RegularShear(Rational),
    /// `ε·p + (1-ε)·other`
    Mix(RationalPoint, Rational),
}

pub fn transform_good_pair(k: usize, p: &RationalPoint, rule: &Transform) -> Result<RationalPoint, RegionError> {
    check_k(k)?;
    let nonnegative = |eps: &Rational| -> Result<(), RegionError> {
        if eps < &zero() {
            return Err(RegionError::EpsilonOutOfRange(exact_string(eps)));
        }
        Ok(())
    };
    let (a, b) = (&p.gamma, &p.beta);
    Ok(match rule {
        Transform::ShiftDown(eps) => {
            nonnegative(eps)?;
            RationalPoint::new(a.clone(), b - eps)
        }
        Transform::TreeShear(eps) => {
            nonnegative(eps)?;
            RationalPoint::new(a + eps, b - eps)
        }
        Transform::RegularShear(eps) => {
            nonnegative(eps)?;
            RationalPoint::new(a - eps * from_usize(k), b + int(2) * eps)
        }
        Transform::Mix(other, eps) => {
            if eps < &zero() || eps > &int(1) {
                return Err(RegionError::EpsilonOutOfRange(exact_string(eps)));
            }
            let rest = int(1) - eps;
            RationalPoint::new(eps * a + &rest * &other.gamma, eps * b + &rest * &other.beta)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundingBox {
    pub gamma_min: Rational,
    pub gamma_max: Rational,
    pub beta_min: Rational,
    pub beta_max: Rational,
}

impl BoundingBox {
    pub fn new(gamma_min: Rational, gamma_max: Rational, beta_min: Rational, beta_max: Rational) -> Self {
        Self { gamma_min, gamma_max, beta_min, beta_max }
    }

    /// `[-1/2, 1] × [-1/2, 11/10]`, the window used for plotting.
    pub fn plot_window() -> Self {
        Self::new(ratio(-1, 2), int(1), ratio(-1, 2), ratio(11, 10))
    }

    fn validate(&self) -> Result<(), RegionError> {
        if self.gamma_min >= self.gamma_max || self.beta_min >= self.beta_max {
            return Err(RegionError::DegenerateBox);
        }
        Ok(())
    }

    pub fn contains(&self, p: &RationalPoint) -> bool {
        self.gamma_min <= p.gamma && p.gamma <= self.gamma_max && self.beta_min <= p.beta && p.beta <= self.beta_max
    }
}

/// `L_k ∩ bbox` as a counterclockwise vertex list, clipped exactly.
pub fn region_polygon(k: usize, bbox: &BoundingBox) -> Result<Vec<RationalPoint>, RegionError> {
    let region = RegionLk::new(k)?;
    bbox.validate()?;
    if let Some(p) = region.extreme_points.iter().find(|p| !bbox.contains(p)) {
        return Err(RegionError::ExtremePointOutside(Box::new(p.clone())));
    }
    let mut polygon = vec![
        RationalPoint::new(bbox.gamma_min.clone(), bbox.beta_min.clone()),
        RationalPoint::new(bbox.gamma_max.clone(), bbox.beta_min.clone()),
        RationalPoint::new(bbox.gamma_max.clone(), bbox.beta_max.clone()),
        RationalPoint::new(bbox.gamma_min.clone(), bbox.beta_max.clone()),
    ];
    for h in &region.half_spaces {
        polygon = clip(&polygon, h);
    }
    polygon.dedup();
    while polygon.len() > 1 && polygon.first() == polygon.last() {
        polygon.pop();
    }
    Ok(polygon)
}

fn clip(polygon: &[RationalPoint], h: &HalfSpace) -> Vec<RationalPoint> {
    let mut out = Vec::with_capacity(polygon.len() + 1);
    for (i, current) in polygon.iter().enumerate() {
        let previous = &polygon[(i + polygon.len() - 1) % polygon.len()];
        let (mc, mp) = (h.margin(current), h.margin(previous));
        let (inside_c, inside_p) = (mc >= zero(), mp >= zero());
        if inside_c != inside_p && mc != zero() && mp != zero() {
            let t = &mp / (&mp - &mc);
            out.push(RationalPoint::new(
                &previous.gamma + &t * (&current.gamma - &previous.gamma),
                &previous.beta + &t * (&current.beta - &previous.beta),
            ));
        }
        if inside_c {
            out.push(current.clone());
        }
    }
    out
}

/// A standalone SVG drawing of `L_k ∩ bbox` with axes and extreme points.
pub fn region_svg(k: usize, bbox: &BoundingBox) -> Result<String, RegionError> {
    let polygon = region_polygon(k, bbox)?;
    let extremes = extreme_points(k)?;
    let (size, pad) = (400.0, 20.0);
    let (g0, g1) = (to_f64(&bbox.gamma_min), to_f64(&bbox.gamma_max));
    let (b0, b1) = (to_f64(&bbox.beta_min), to_f64(&bbox.beta_max));
    let x = |g: f64| pad + (g - g0) / (g1 - g0) * size;
    let y = |b: f64| pad + (b1 - b) / (b1 - b0) * size;
    let total = size + 2.0 * pad;

    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{total}\" height=\"{total}\" viewBox=\"0 0 {total} {total}\">\n"
    );
    svg.push_str(&format!("  <title>L_{k}</title>\n"));
    let points: Vec<String> = polygon
        .iter()
        .map(|p| format!("{:.3},{:.3}", x(to_f64(&p.gamma)), y(to_f64(&p.beta))))
        .collect();
    svg.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"1.5\"/>\n",
        points.join(" ")
    ));
    if g0 <= 0.0 && 0.0 <= g1 {
        svg.push_str(&format!(
            "  <line x1=\"{0:.3}\" y1=\"{1:.3}\" x2=\"{0:.3}\" y2=\"{2:.3}\" stroke=\"black\"/>\n",
            x(0.0),
            y(b1),
            y(b0)
        ));
    }
    if b0 <= 0.0 && 0.0 <= b1 {
        svg.push_str(&format!(
            "  <line x1=\"{1:.3}\" y1=\"{0:.3}\" x2=\"{2:.3}\" y2=\"{0:.3}\" stroke=\"black\"/>\n",
            y(0.0),
            x(g0),
            x(g1)
        ));
    }
    for p in &extremes {
        let (px, py) = (x(to_f64(&p.gamma)), y(to_f64(&p.beta)));
        svg.push_str(&format!("  <circle cx=\"{px:.3}\" cy=\"{py:.3}\" r=\"3\" fill=\"#cb181d\"/>\n"));
        svg.push_str(&format!(
            "  <text x=\"{:.3}\" y=\"{:.3}\" font-size=\"11\">({:.2},{:.2})</text>\n",
            px + 5.0,
            py - 5.0,
            to_f64(&p.gamma),
            to_f64(&p.beta)
        ));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(g: (i64, i64), b: (i64, i64)) -> RationalPoint {
        RationalPoint::new(ratio(g.0, g.1), ratio(b.0, b.1))
    }

    #[test]
    fn half_space_examples() {
        let k3 = half_spaces(3).unwrap();
        assert_eq!((k3[0].slope.clone(), k3[0].intercept.clone()), (int(-1), ratio(1, 3)));
        let k4 = half_spaces(4).unwrap();
        assert_eq!(k4.iter().map(|h| h.name).collect::<Vec<_>>(), ["l1", "l3", "l4"]);
        assert_eq!((k4[2].slope.clone(), k4[2].intercept.clone()), (ratio(-16, 31), ratio(7, 31)));
        assert_eq!(half_spaces(5).unwrap()[1].intercept, ratio(49, 275));
        assert_eq!(half_spaces(2), Err(RegionError::InvalidK(2)));
    }

    #[test]
    fn extreme_point_examples() {
        assert_eq!(extreme_points(3).unwrap(), vec![pt((1, 9), (2, 9))]);
        assert_eq!(extreme_points(4).unwrap(), vec![pt((1, 20), (1, 5)), pt((-1, 11), (3, 11))]);
    }

    #[test]
    fn extreme_points_lie_on_exactly_two_lines() {
        for k in 3..=30 {
            let region = RegionLk::new(k).unwrap();
            for p in &region.extreme_points {
                let on = region.half_spaces.iter().filter(|h| h.on_boundary(p)).count();
                let strict = region.half_spaces.iter().filter(|h| h.margin(p) > zero()).count();
                assert_eq!((on, strict), (2, region.half_spaces.len() - 2), "k={k} {p}");
            }
        }
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(classify_pair(3, &pt((1, 9), (2, 9))).unwrap(), Classification::Good);
        assert_eq!(classify_pair(3, &pt((1, 9), (2 * 100 + 9, 900))).unwrap(), Classification::Bad);
        for k in 3..8 {
            assert_eq!(classify_pair(k, &pt((0, 1), (0, 1))).unwrap(), Classification::Good);
        }
        assert_eq!(classify_pair_geometric(4, &pt((-1, 11), (3, 11))).unwrap(), Classification::Good);
        assert_eq!(classify_pair_geometric(4, &pt((1, 1), (1, 1))).unwrap(), Classification::Bad);
    }

    #[test]
    fn grid_agreement_small() {
        for k in 3..=6 {
            let (checked, bad) = classifier_disagreements(k, &BoundingBox::plot_window(), &ratio(1, 10)).unwrap();
            assert_eq!(checked, 16 * 17);
            assert!(bad.is_empty(), "k={k}: {bad:?}");
        }
    }

    #[test]
    fn witness_kinds() {
        let w = tight_family_for(3, &pt((1, 9), (2, 9))).unwrap().unwrap();
        assert_eq!(w.kinds, vec![WitnessKind::HkrTree, WitnessKind::HkrRegular]);
        let mid = RationalPoint::new(int(0), boundary_beta(4, &int(0)).unwrap());
        assert_eq!(mid.beta, ratio(7, 31));
        assert_eq!(tight_family_for(4, &mid).unwrap().unwrap().kinds, vec![WitnessKind::GkrPrime]);
        let left = RationalPoint::new(int(-1), boundary_beta(4, &int(-1)).unwrap());
        assert_eq!(tight_family_for(4, &left).unwrap().unwrap().kinds, vec![WitnessKind::Fkr]);
        assert_eq!(tight_family_for(4, &pt((0, 1), (0, 1))).unwrap(), None);
    }

    #[test]
    fn transform_examples() {
        let p = pt((1, 9), (2, 9));
        let sheared = transform_good_pair(3, &p, &Transform::TreeShear(ratio(1, 9))).unwrap();
        assert_eq!(sheared, pt((2, 9), (1, 9)));
        assert_eq!(classify_pair(3, &sheared).unwrap(), Classification::Good);
        let regular = transform_good_pair(3, &p, &Transform::RegularShear(ratio(1, 27))).unwrap();
        assert_eq!(regular, pt((0, 1), (8, 27)));
        assert_eq!(classify_pair(3, &regular).unwrap(), Classification::Good);
        assert_eq!(transform_good_pair(3, &p, &Transform::ShiftDown(int(0))).unwrap(), p);
        assert!(transform_good_pair(3, &p, &Transform::ShiftDown(int(-1))).is_err());
        assert!(transform_good_pair(3, &p, &Transform::Mix(p.clone(), int(2))).is_err());
    }

    #[test]
    fn polygon_examples() {
        let bbox = BoundingBox::new(ratio(-1, 2), int(1), ratio(-1, 2), int(1));
        let poly = region_polygon(3, &bbox).unwrap();
        assert!(poly.contains(&pt((1, 9), (2, 9))));
        // l1 meets beta = -1/2 at gamma = 5/6; l2 meets gamma = -1/2
        assert!(poly.contains(&pt((5, 6), (-1, 2))));
        assert!(poly.contains(&RationalPoint::new(ratio(-1, 2), half_spaces(3).unwrap()[1].line_at(&ratio(-1, 2)))));

        let poly4 = region_polygon(4, &BoundingBox::plot_window()).unwrap();
        assert!(poly4.contains(&pt((1, 20), (1, 5))) && poly4.contains(&pt((-1, 11), (3, 11))));

        let hug = BoundingBox::new(ratio(1, 9), ratio(1, 9), ratio(2, 9), ratio(2, 9));
        assert_eq!(region_polygon(3, &hug), Err(RegionError::DegenerateBox));
        let far = BoundingBox::new(int(2), int(3), int(2), int(3));
        assert!(matches!(region_polygon(3, &far), Err(RegionError::ExtremePointOutside(_))));
    }

    #[test]
    fn polygon_is_counterclockwise_and_inside() {
        for k in 3..=8 {
            let poly = region_polygon(k, &BoundingBox::plot_window()).unwrap();
            let n = poly.len();
            let twice_area: Rational = (0..n)
                .map(|i| {
                    let (p, q) = (&poly[i], &poly[(i + 1) % n]);
                    &p.gamma * &q.beta - &q.gamma * &p.beta
                })
                .sum();
            assert!(twice_area > zero());
            assert!(poly.iter().all(|p| classify_pair_geometric(k, p).unwrap() == Classification::Good));
        }
    }

    #[test]
    fn svg_mentions_polygon() {
        let svg = region_svg(4, &BoundingBox::plot_window()).unwrap();
        assert!(svg.starts_with("<svg") && svg.contains("<polygon") && svg.matches("<circle").count() == 2);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-400i64..=400, 1i64..=40).prop_map(|(p, q)| ratio(p, q * 100))
    }

    proptest! {
        #[test]
        fn classifiers_agree(k in 3usize..12, g in small_rational(), b in small_rational()) {
            let p = RationalPoint::new(g, b);
            prop_assert_eq!(classify_pair(k, &p).unwrap(), classify_pair_geometric(k, &p).unwrap());
        }

        #[test]
        fn boundary_is_good_and_tight(k in 3usize..12, g in small_rational(), eps in 1i64..1000) {
            let p = RationalPoint::new(g.clone(), boundary_beta(k, &g).unwrap());
            prop_assert_eq!(classify_pair(k, &p).unwrap(), Classification::Good);
            let up = RationalPoint::new(g.clone(), &p.beta + ratio(eps, 10_000));
            prop_assert_eq!(classify_pair(k, &up).unwrap(), Classification::Bad);
            let right = RationalPoint::new(&g + ratio(eps, 10_000), p.beta.clone());
            prop_assert_eq!(classify_pair(k, &right).unwrap(), Classification::Bad);
        }

        #[test]
        fn shears_preserve_goodness(k in 3usize..12, g in small_rational(), drop in 0i64..100, eps in 0i64..100) {
            let p = RationalPoint::new(g.clone(), boundary_beta(k, &g).unwrap() - ratio(drop, 100));
            let eps = ratio(eps, 100);
            for rule in [Transform::ShiftDown(eps.clone()), Transform::TreeShear(eps.clone()), Transform::RegularShear(eps.clone())] {
                let q = transform_good_pair(k, &p, &rule).unwrap();
                prop_assert_eq!(classify_pair(k, &q).unwrap(), Classification::Good);
            }
        }
    }
}
