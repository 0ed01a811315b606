//! Elliptic curves through the origin of Y = C × C, where C = ℂ/Λ has
//! endomorphism order O.
//!
//! Such a curve is the graph `w = αz` for α ∈ O, or the axis `z = 0`; it is
//! recorded as a point of O ∪ {∞}. Automorphisms of Y fixing the origin are
//! 2×2 matrices over O with unit determinant, acting on slopes by fractional
//! linear maps.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lattices::{self, BasisPoint, LatticeError, Rational};
use crate::rings::{OrderKind, QuadInt, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("slope {slope} does not belong to the {expected} order")]
    OrderMismatch { slope: Slope, expected: OrderKind },
    #[error("curves with equal slope {0} meet along the whole curve")]
    EqualSlopes(Slope),
    #[error("expected {expected} slopes, found {found}")]
    Cardinality { expected: &'static str, found: usize },
    #[error("slope {0} appears twice")]
    DuplicateSlope(Slope),
    #[error("determinant {0} is not a unit")]
    NonUnitDeterminant(QuadInt),
    #[error("image of {0} is not in O ∪ {{∞}}")]
    NotRepresentable(Slope),
    #[error("curves {0} and {1} meet in {2} points, not 1")]
    NotGood(Slope, Slope, i64),
    #[error("cannot parse slope {0:?}")]
    Parse(String),
}

/// The curve `w = αz` (`Finite`) or `z = 0` (`Infinity`).
///
/// `Infinity` sorts first; finite slopes follow the [`QuadInt`] order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slope {
    Infinity,
    Finite(QuadInt),
}

impl Slope {
    pub fn finite(&self) -> Option<&QuadInt> {
        match self {
            Slope::Finite(a) => Some(a),
            Slope::Infinity => None,
        }
    }

    fn check_order(&self, order: OrderKind) -> Result<(), SurfaceError> {
        match self {
            Slope::Finite(a) if a.order() != order => Err(SurfaceError::OrderMismatch {
                slope: *self,
                expected: order,
            }),
            _ => Ok(()),
        }
    }

    /// Accepts `inf`, `infinity`, `∞`, or a [`QuadInt`] literal.
    pub fn parse(order: OrderKind, s: &str) -> Result<Self, SurfaceError> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Slope::Infinity),
            other => QuadInt::parse(order, other)
                .map(Slope::Finite)
                .map_err(|_| SurfaceError::Parse(s.to_string())),
        }
    }

    /// Homogeneous coordinates `[p : q]` with `q ∈ {0, 1}`.
    fn homogeneous(&self, order: OrderKind) -> (QuadInt, QuadInt) {
        match self {
            Slope::Finite(a) => (*a, QuadInt::one(order)),
            Slope::Infinity => (QuadInt::one(order), QuadInt::zero(order)),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(a) => write!(f, "{a}"),
            Slope::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn common_order(s1: &Slope, s2: &Slope) -> Result<Option<OrderKind>, SurfaceError> {
    match (s1, s2) {
        (Slope::Finite(a), Slope::Finite(b)) if a.order() != b.order() => {
            Err(SurfaceError::OrderMismatch {
                slope: *s2,
                expected: a.order(),
            })
        }
        (Slope::Finite(a), _) | (_, Slope::Finite(a)) => Ok(Some(a.order())),
        _ => Ok(None),
    }
}

/// Number of intersection points of two curves through the origin.
///
/// Distinct finite slopes meet in `norm(α − β)` points; a graph meets the
/// axis `z = 0` only at the origin; a curve has self-intersection 0.
pub fn intersection_number(s1: &Slope, s2: &Slope) -> Result<i64, SurfaceError> {
    common_order(s1, s2)?;
    match (s1, s2) {
        _ if s1 == s2 => Ok(0),
        (Slope::Finite(a), Slope::Finite(b)) => Ok(a.checked_sub(b)?.norm()?),
        _ => Ok(1),
    }
}

/// One point of C × C, as basis coordinates of (w, z).
pub type SurfacePoint = (BasisPoint, BasisPoint);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoints {
    pub s1: Slope,
    pub s2: Slope,
    pub points: Vec<SurfacePoint>,
}

impl IntersectionPoints {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn intersection_points(s1: &Slope, s2: &Slope) -> Result<IntersectionPoints, SurfaceError> {
    common_order(s1, s2)?;
    if s1 == s2 {
        return Err(SurfaceError::EqualSlopes(*s1));
    }
    let origin = (Rational::from(0), Rational::from(0));
    let points = match (s1, s2) {
        (Slope::Finite(a), Slope::Finite(b)) => {
            // αz ≡ βz  ⇔  (α − β)z ∈ Λ
            let kernel = lattices::quotient_reps(&a.checked_sub(b)?)?;
            let graph = lattices::mult_matrix(a)?;
            let mut pts: Vec<SurfacePoint> = kernel
                .reps()
                .iter()
                .map(|z| (lattices::reduce_point(&graph.apply(z)), *z))
                .collect();
            pts.sort();
            pts
        }
        _ => vec![(origin, origin)],
    };
    Ok(IntersectionPoints {
        s1: *s1,
        s2: *s2,
        points,
    })
}

/// A set of distinct curves through the origin of C × C.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    order: OrderKind,
    slopes: Vec<Slope>,
}

impl Configuration {
    pub fn new(order: OrderKind, slopes: Vec<Slope>) -> Result<Self, SurfaceError> {
        if !(2..=4).contains(&slopes.len()) {
            return Err(SurfaceError::Cardinality {
                expected: "2 to 4",
                found: slopes.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for s in &slopes {
            s.check_order(order)?;
            if !seen.insert(*s) {
                return Err(SurfaceError::DuplicateSlope(*s));
            }
        }
        Ok(Configuration { order, slopes })
    }

    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    /// Equality as sets of curves.
    pub fn same_curves(&self, other: &Self) -> bool {
        let a: BTreeSet<_> = self.slopes.iter().collect();
        let b: BTreeSet<_> = other.slopes.iter().collect();
        self.order == other.order && a == b
    }

    /// First pair (in listing order) that does not meet exactly once.
    pub fn first_bad_pair(&self) -> Result<Option<(Slope, Slope, i64)>, SurfaceError> {
        for (i, s) in self.slopes.iter().enumerate() {
            for t in &self.slopes[i + 1..] {
                let n = intersection_number(s, t)?;
                if n != 1 {
                    return Ok(Some((*s, *t, n)));
                }
            }
        }
        Ok(None)
    }

    /// Applies `m` to every curve.
    pub fn transform(&self, m: &MobiusMap) -> Result<Self, SurfaceError> {
        let slopes = self
            .slopes
            .iter()
            .map(|s| m.apply(s))
            .collect::<Result<Vec<_>, _>>()?;
        Configuration::new(self.order, slopes)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.slopes.iter().map(Slope::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Four curves pairwise meeting exactly once.
///
/// All curves contain the origin, so meeting once means meeting only there
/// and the four share exactly one point.
pub fn is_good_configuration(cfg: &Configuration) -> Result<bool, SurfaceError> {
    if cfg.len() != 4 {
        return Err(SurfaceError::Cardinality {
            expected: "4",
            found: cfg.len(),
        });
    }
    Ok(cfg.first_bad_pair()?.is_none())
}

/// `[[m11, m12], [m21, m22]]` acting on (w, z); sends slope α to
/// (m11·α + m12)/(m21·α + m22).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MobiusMap {
    m11: QuadInt,
    m12: QuadInt,
    m21: QuadInt,
    m22: QuadInt,
}

impl MobiusMap {
    pub fn new(m11: QuadInt, m12: QuadInt, m21: QuadInt, m22: QuadInt) -> Result<Self, SurfaceError> {
        let m = MobiusMap { m11, m12, m21, m22 };
        let det = m.det()?;
        if !det.is_unit() {
            return Err(SurfaceError::NonUnitDeterminant(det));
        }
        Ok(m)
    }

    pub fn order(&self) -> OrderKind {
        self.m11.order()
    }

    pub fn entries(&self) -> [QuadInt; 4] {
        [self.m11, self.m12, self.m21, self.m22]
    }

    pub fn det(&self) -> Result<QuadInt, SurfaceError> {
        Ok(self
            .m11
            .checked_mul(&self.m22)?
            .checked_sub(&self.m12.checked_mul(&self.m21)?)?)
    }

    pub fn identity(order: OrderKind) -> Self {
        let (o, z) = (QuadInt::one(order), QuadInt::zero(order));
        MobiusMap { m11: o, m12: z, m21: z, m22: o }
    }

    /// (w, z) ↦ (w − α₀z, z): α ↦ α − α₀.
    pub fn shear(alpha0: &QuadInt) -> Result<Self, SurfaceError> {
        let order = alpha0.order();
        let (o, z) = (QuadInt::one(order), QuadInt::zero(order));
        MobiusMap::new(o, alpha0.checked_neg()?, z, o)
    }

    /// (w, z) ↦ (z, w − α₀z): α ↦ 1/(α − α₀), sending α₀ to ∞ and ∞ to 0.
    pub fn inversion(alpha0: &QuadInt) -> Result<Self, SurfaceError> {
        let order = alpha0.order();
        let (o, z) = (QuadInt::one(order), QuadInt::zero(order));
        MobiusMap::new(z, o, o, alpha0.checked_neg()?)
    }

    /// α ↦ u·α for a unit u.
    pub fn scale(unit: &QuadInt) -> Result<Self, SurfaceError> {
        let order = unit.order();
        let (o, z) = (QuadInt::one(order), QuadInt::zero(order));
        MobiusMap::new(*unit, z, z, o)
    }

    /// The factor swap (w, z) ↦ (z, w): α ↦ 1/α.
    pub fn swap(order: OrderKind) -> Self {
        let (o, z) = (QuadInt::one(order), QuadInt::zero(order));
        MobiusMap { m11: z, m12: o, m21: o, m22: z }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self, SurfaceError> {
        let dot = |x1: &QuadInt, y1: &QuadInt, x2: &QuadInt, y2: &QuadInt| -> Result<QuadInt, SurfaceError> {
            Ok(x1.checked_mul(x2)?.checked_add(&y1.checked_mul(y2)?)?)
        };
        Ok(MobiusMap {
            m11: dot(&self.m11, &self.m12, &other.m11, &other.m21)?,
            m12: dot(&self.m11, &self.m12, &other.m12, &other.m22)?,
            m21: dot(&self.m21, &self.m22, &other.m11, &other.m21)?,
            m22: dot(&self.m21, &self.m22, &other.m12, &other.m22)?,
        })
    }

    pub fn apply(&self, s: &Slope) -> Result<Slope, SurfaceError> {
        let order = self.order();
        s.check_order(order)?;
        let (x, y) = s.homogeneous(order);
        let p = self.m11.checked_mul(&x)?.checked_add(&self.m12.checked_mul(&y)?)?;
        let q = self.m21.checked_mul(&x)?.checked_add(&self.m22.checked_mul(&y)?)?;
        if q.is_zero() {
            // [p : 0] with p ≠ 0 because the matrix is invertible
            return Ok(Slope::Infinity);
        }
        match p.try_div_exact(&q)? {
            Some(alpha) => Ok(Slope::Finite(alpha)),
            None => Err(SurfaceError::NotRepresentable(*s)),
        }
    }
}

/// Orbit representative `{∞, 0, 1, …}` of a configuration whose curves
/// pairwise meet once.
///
/// Each ordered triple of curves is sent to (∞, 0, 1) by an inversion, a
/// shear and a unit scaling; the map doing so is unique up to a scalar, so
/// the remaining slopes are determined by the triple. The smallest result
/// over all triples is returned. The factor swap is itself a unit-determinant
/// matrix, so no separate pass is needed for it.
pub fn canonicalize(cfg: &Configuration) -> Result<Configuration, SurfaceError> {
    if cfg.len() < 3 {
        return Err(SurfaceError::Cardinality {
            expected: "3 or 4",
            found: cfg.len(),
        });
    }
    if let Some((s, t, n)) = cfg.first_bad_pair()? {
        return Err(SurfaceError::NotGood(s, t, n));
    }
    let order = cfg.order();
    let slopes = cfg.slopes();
    let mut best: Option<Vec<Slope>> = None;
    for i in 0..slopes.len() {
        let to_infinity = match slopes[i] {
            Slope::Infinity => MobiusMap::identity(order),
            Slope::Finite(a) => MobiusMap::inversion(&a)?,
        };
        let moved = cfg.transform(&to_infinity)?;
        for j in (0..slopes.len()).filter(|&j| j != i) {
            let zero_target = moved.slopes()[j].finite().copied().expect("only slope i is at infinity");
            let sheared = moved.transform(&MobiusMap::shear(&zero_target)?)?;
            for k in (0..slopes.len()).filter(|&k| k != i && k != j) {
                let one_target = sheared.slopes()[k].finite().copied().expect("finite");
                let inverse = one_target
                    .unit_inverse()
                    .ok_or(SurfaceError::NotGood(slopes[j], slopes[k], one_target.norm()?))?;
                let normal = sheared.transform(&MobiusMap::scale(&inverse)?)?;
                let mut rest: Vec<Slope> = (0..slopes.len())
                    .filter(|&l| l != i && l != j && l != k)
                    .map(|l| normal.slopes()[l])
                    .collect();
                rest.sort();
                if best.as_ref().is_none_or(|b| rest < *b) {
                    best = Some(rest);
                }
            }
        }
    }
    let mut out = vec![
        Slope::Infinity,
        Slope::Finite(QuadInt::zero(order)),
        Slope::Finite(QuadInt::one(order)),
    ];
    out.extend(best.expect("at least one triple"));
    Configuration::new(order, out)
}

/// A normalized candidate `{∞, 0, 1, u}` and whether it is good.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub u: QuadInt,
    pub good: bool,
}

/// Every slope u with `{∞, 0, 1, u}` a configuration of four distinct
/// curves, u running over the units of the order.
///
/// Any good configuration normalizes to `{∞, 0, 1, u}` with u and u − 1
/// both units, so units are the only candidates worth testing.
pub fn normalized_candidates(order: OrderKind) -> Result<Vec<Candidate>, SurfaceError> {
    let zero = QuadInt::zero(order);
    let one = QuadInt::one(order);
    let mut out = Vec::new();
    for u in QuadInt::units(order) {
        if u == one || u == zero {
            continue;
        }
        let cfg = Configuration::new(
            order,
            vec![Slope::Infinity, Slope::Finite(zero), Slope::Finite(one), Slope::Finite(u)],
        )?;
        out.push(Candidate {
            u,
            good: is_good_configuration(&cfg)?,
        });
    }
    Ok(out)
}

/// All good configurations over `order`, one canonical representative per
/// orbit, sorted.
pub fn search_good_configurations(order: OrderKind) -> Result<Vec<Configuration>, SurfaceError> {
    let one = QuadInt::one(order);
    let mut classes = BTreeSet::new();
    for c in normalized_candidates(order)? {
        if !c.good {
            continue;
        }
        debug_assert!(c.u.checked_sub(&one)?.is_unit());
        let cfg = Configuration::new(
            order,
            vec![
                Slope::Infinity,
                Slope::Finite(QuadInt::zero(order)),
                Slope::Finite(one),
                Slope::Finite(c.u),
            ],
        )?;
        classes.insert(canonicalize(&cfg)?);
    }
    Ok(classes.into_iter().collect())
}
