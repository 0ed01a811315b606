//! The classification of pairs (X, D) with 3c̄₂ = c̄₁² and c̄₂ = 1, run as
//! an explicit case tree.
//!
//! Every case is either settled by arithmetic that is recomputed on each
//! run (`Rule::Arithmetic`) or by a geometric argument that is recorded with
//! its reference but not re-derived (`Rule::CitedGeometric`). Bi-elliptic
//! minimal models are excluded by hypothesis and reported as out of scope.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chern::{self, LogPair, SurfaceClass};
use crate::rings::OrderKind;
use crate::surfaces::{self, Slope, SurfaceError};

/// Largest n scanned when checking the singular-curve deficit bound.
pub const DEFICIT_SCAN_LIMIT: u64 = 100;

/// Total boundary deficit −ΣDᵢ² forced by 3c̄₂ = c̄₁² on a one-point blow-up
/// of a surface with K = 0.
pub const BOUNDARY_DEFICIT: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Arithmetic,
    CitedGeometric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Eliminated,
    Survives,
    OutOfScope,
}

impl Verdict {
    fn from_survival(survives: bool) -> Self {
        if survives {
            Verdict::Survives
        } else {
            Verdict::Eliminated
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Eliminated => "ELIMINATED",
            Verdict::Survives => "SURVIVES",
            Verdict::OutOfScope => "OUT OF SCOPE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationStep {
    pub case_id: String,
    pub rule: Rule,
    pub citation: String,
    pub verdict: Verdict,
    /// The recomputed quantities behind the verdict.
    pub detail: String,
}

impl EliminationStep {
    fn arithmetic(case_id: impl Into<String>, citation: &str, verdict: Verdict, detail: String) -> Self {
        EliminationStep {
            case_id: case_id.into(),
            rule: Rule::Arithmetic,
            citation: citation.to_string(),
            verdict,
            detail,
        }
    }

    fn cited(case_id: impl Into<String>, citation: &str, verdict: Verdict, detail: &str) -> Self {
        EliminationStep {
            case_id: case_id.into(),
            rule: Rule::CitedGeometric,
            citation: citation.to_string(),
            verdict,
            detail: detail.to_string(),
        }
    }
}

/// Self-intersections of the boundary curves, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CuspPartition(Vec<i64>);

impl CuspPartition {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn cusps(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for CuspPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Every multiset of negative integers summing to −`total`, ordered by
/// number of cusps and then with the least negative entries first.
pub fn cusp_partitions(total: u32) -> Vec<CuspPartition> {
    fn extend(remaining: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in min_part..=remaining {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut parts = Vec::new();
    if total > 0 {
        extend(total, 1, &mut Vec::new(), &mut parts);
    }
    parts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    parts
        .into_iter()
        .map(|p| CuspPartition(p.into_iter().map(|m| -(m as i64)).collect()))
        .collect()
}

pub fn enumerate_cusp_partitions() -> Vec<CuspPartition> {
    cusp_partitions(BOUNDARY_DEFICIT)
}

/// A boundary curve that is the proper transform of a curve C with one
/// ordinary point of multiplicity r, C² = 2n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularCase {
    pub n: u64,
    pub c_sq: i64,
    pub r: i64,
    pub d_sq: i64,
}

/// The multiplicity r solving r² − r − 2n = 0, when it is an integer.
pub fn integral_multiplicity(n: u64) -> Option<i64> {
    let disc = 1 + 8 * n;
    let root = disc.isqrt();
    (root * root == disc && root % 2 == 1).then_some(root.div_ceil(2) as i64)
}

/// Singular blow-down curves whose proper transform has D² ≥ −4.
pub fn singular_curve_cases() -> Vec<SingularCase> {
    (1..=DEFICIT_SCAN_LIMIT)
        .filter_map(|n| {
            let r = integral_multiplicity(n)?;
            let c_sq = 2 * n as i64;
            let d_sq = c_sq - r * r;
            (d_sq >= -(BOUNDARY_DEFICIT as i64)).then_some(SingularCase { n, c_sq, r, d_sq })
        })
        .collect()
}

/// Behaviour of the real deficit 2n − ((1 + √(1+8n))/2)² for 1 ≤ n ≤ limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficitScan {
    pub limit: u64,
    pub strictly_decreasing: bool,
    /// Smallest n from which every deficit up to `limit` is below −4.
    pub below_bound_from: Option<u64>,
}

/// Exact scan of the deficit.
///
/// With s = 1 + 8n the deficit equals −(1 + √s)/2, so comparisons between
/// deficits reduce to comparisons between the integers s, and
/// deficit < −4 ⇔ √s > 7 ⇔ s > 49.
pub fn deficit_scan(limit: u64) -> DeficitScan {
    let s = |n: u64| 1 + 8 * n;
    let strictly_decreasing = (1..limit).all(|n| s(n + 1) > s(n));
    let below = |n: u64| s(n) > 49;
    let below_bound_from = (1..=limit).find(|&n| (n..=limit).all(below));
    DeficitScan {
        limit,
        strictly_decreasing,
        below_bound_from,
    }
}

/// Verdict of C² ≥ r(r − 1) + 1 for a curve with one singular point of
/// multiplicity r.
pub fn theta_obstruction(c_sq: i64, r: i64) -> Verdict {
    Verdict::from_survival(c_sq > r * (r - 1))
}

const THETA_CITATION: &str = "theta-function obstruction on abelian surfaces: a reduced ample curve \
with one singular point of multiplicity r satisfies C^2 >= r(r-1) + 1 (non-constant Gauss map)";

pub fn theta_obstruction_filter(case: &SingularCase) -> EliminationStep {
    let bound = case.r * (case.r - 1) + 1;
    let verdict = theta_obstruction(case.c_sq, case.r);
    let relation = if verdict == Verdict::Eliminated { "<" } else { ">=" };
    EliminationStep::arithmetic(
        format!("abelian/singular/n={}", case.n),
        THETA_CITATION,
        verdict,
        format!(
            "C^2 = {}, r = {}, D^2 = {}: C^2 {} r(r-1)+1 = {}",
            case.c_sq, case.r, case.d_sq, relation, bound
        ),
    )
}

const NOETHER_CITATION: &str = "Noether's formula: c1^2 + c2 = 12 chi(O_X)";

fn noether_step(case_id: String, c1_sq: i64, c2: i64) -> EliminationStep {
    let holds = chern::noether_filter(c1_sq, c2);
    EliminationStep::arithmetic(
        case_id,
        NOETHER_CITATION,
        Verdict::from_survival(holds),
        format!("c1^2 + c2 = {} + {} = {} (mod 12 = {})", c1_sq, c2, c1_sq + c2, (c1_sq + c2).rem_euclid(12)),
    )
}

/// The Noether filter as a standalone step, for control cases.
pub fn noether_check(c1_sq: i64, c2: i64) -> EliminationStep {
    noether_step(format!("noether/c1sq={c1_sq},c2={c2}"), c1_sq, c2)
}

/// All (c₂(Y), k) with c₂(Y) ≥ `min_c2`, k ≥ 0 and c₂(Y) + k = `target`.
fn euler_splits(min_c2: i64, target: i64) -> Vec<(i64, i64)> {
    (min_c2..=target).map(|c2| (c2, target - c2)).collect()
}

/// Kodaira dimension two: X is minimal and c₁² ∈ {1, 2}, which Noether's
/// formula rules out.
pub fn eliminate_general_type() -> Vec<EliminationStep> {
    let c2bar = 1;
    let mut steps = vec![EliminationStep::cited(
        "kappa2/euler-positive",
        "minimal surfaces of general type have c2 > 0 (Barth-Hulek-Peters-Van de Ven, ch. VII)",
        Verdict::Survives,
        "c2(Y) >= 1 for the minimal model Y",
    )];

    let splits = euler_splits(1, c2bar);
    let minimal = splits == [(1, 0)];
    steps.push(EliminationStep::arithmetic(
        "kappa2/minimality",
        "c2(Bl_k Y) = c2(Y) + k",
        Verdict::from_survival(minimal),
        format!("solutions (c2(Y), k) of c2(Y) + k = 1 with c2(Y) >= 1: {splits:?}; X is minimal"),
    ));

    // c̄₁² = c₁² − D² = 3c̄₂ with D² < 0 and c₁² > 0 on a minimal surface of
    // general type.
    let target = 3 * c2bar;
    let candidates: Vec<i64> = (1..target).filter(|c1| target - c1 > 0).collect();
    steps.push(EliminationStep::arithmetic(
        "kappa2/chern-bounds",
        "c1bar^2 = c1^2 - D^2 = 3 c2bar with D^2 < 0 and c1^2 > 0",
        Verdict::from_survival(!candidates.is_empty()),
        format!("0 < c1^2 < {target}: c1^2 in {candidates:?}"),
    ));
    for c1 in candidates {
        steps.push(noether_step(format!("kappa2/noether/c1sq={c1}"), c1, c2bar));
    }
    steps
}

/// Kodaira dimensions one and −∞.
pub fn eliminate_nonzero_kodaira() -> Vec<EliminationStep> {
    let mut steps = Vec::new();

    // κ = 1: minimal model has K² = 0, c₂ = 12d; X = Bl_k Y.
    let splits: Vec<(i64, i64)> = (0..=1)
        .flat_map(|d| (0..=1).map(move |k| (d, k)))
        .filter(|&(d, k)| SurfaceClass::MinimalKodairaOne(d as u32).c2() + k == 1)
        .collect();
    steps.push(EliminationStep::arithmetic(
        "kappa1/euler-split",
        "c2(X) = 12d + k for X the k-fold blow-up of a minimal elliptic surface with c2 = 12d",
        Verdict::from_survival(splits == [(0, 1)]),
        format!("solutions (d, k) of 12d + k = 1 with d, k >= 0: {splits:?}"),
    ));
    steps.push(EliminationStep::cited(
        "kappa1/multiple-fibres",
        "d = 0 leaves only multiple fibres with smooth reduction (Friedman, Algebraic Surfaces and \
         Holomorphic Vector Bundles, ch. 7); a boundary curve dominates the base, Hurwitz bounds its \
         genus by 1, and base change along the boundary curve gives a fibration with a section, \
         forcing kappa(Y) = 0 (canonical bundle formula for elliptic fibrations)",
        Verdict::Eliminated,
        "kappa(Y) cannot be one",
    ));

    // κ = −∞: minimal models ℙ², Hirzebruch, ruled over genus g ≥ 1.
    for (id, class) in [
        ("kappa-infinity/p2", SurfaceClass::ProjectivePlane),
        ("kappa-infinity/hirzebruch", SurfaceClass::Hirzebruch),
    ] {
        let c2 = chern::blowup_c2(class.c2(), 0);
        steps.push(EliminationStep::arithmetic(
            id,
            "c2(Bl_k Y) = c2(Y) + k >= c2(Y)",
            Verdict::from_survival(c2 <= 1),
            format!("c2(X) >= c2({class}) = {c2} > 1"),
        ));
    }
    steps.push(EliminationStep::cited(
        "kappa-infinity/ruled-genus-ge-2",
        "a negative elliptic boundary curve is a multisection of the ruling; Hurwitz forces the base \
         genus to be at most 1",
        Verdict::Eliminated,
        "base curve must be elliptic",
    ));
    let elliptic_ruled = SurfaceClass::RuledOverGenus(1);
    let blowups = 1 - elliptic_ruled.c2();
    let picard_rank = 2 + blowups;
    steps.push(EliminationStep::arithmetic(
        "kappa-infinity/ruled-genus-1",
        "c2(ruled surface over an elliptic curve) = 0; rho(Bl_k Y) = 2 + k",
        Verdict::from_survival(blowups == 1),
        format!("k = 1 - c2(Y) = {blowups}; Picard rank {picard_rank}"),
    ));
    steps.push(EliminationStep::cited(
        "kappa-infinity/cusp-bound",
        "Di Cerbo, Proposition 3.8: Picard rank 3 allows at most two cusps",
        Verdict::Survives,
        "at most two boundary components",
    ));
    steps.push(EliminationStep::cited(
        "kappa-infinity/one-cusp",
        "the blow-down curve is a singular multisection; the proper transform of the fibre through \
         the singular point is a P^1 with at most one puncture inside X \\ D, impossible on a ball quotient",
        Verdict::Eliminated,
        "one cusp impossible",
    ));
    steps.push(EliminationStep::cited(
        "kappa-infinity/two-cusps",
        "two components meeting at one ordinary point with distinct tangents; the fibre argument of \
         the one-cusp case applies",
        Verdict::Eliminated,
        "two cusps impossible",
    ));
    steps
}

/// The one survivor of the classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SurvivorRepr")]
pub struct Survivor {
    pub order: OrderKind,
    pub slopes: Vec<Slope>,
    pub boundary_selfints: Vec<i64>,
    pub c1bar_sq: i64,
    pub c2bar: i64,
    pub bmy_equality: bool,
}

#[derive(Deserialize)]
struct SurvivorRepr {
    order: OrderKind,
    slopes: Vec<String>,
    boundary_selfints: Vec<i64>,
    c1bar_sq: i64,
    c2bar: i64,
    bmy_equality: bool,
}

impl TryFrom<SurvivorRepr> for Survivor {
    type Error = SurfaceError;

    fn try_from(r: SurvivorRepr) -> Result<Self, Self::Error> {
        let slopes = r
            .slopes
            .iter()
            .map(|s| Slope::parse(r.order, s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Survivor {
            order: r.order,
            slopes,
            boundary_selfints: r.boundary_selfints,
            c1bar_sq: r.c1bar_sq,
            c2bar: r.c2bar,
            bmy_equality: r.bmy_equality,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    /// Endomorphism orders searched for good configurations.
    pub orders: Vec<OrderKind>,
    pub steps: Vec<EliminationStep>,
    pub survivor: Option<Survivor>,
}

impl ClassificationReport {
    pub fn step(&self, case_id: &str) -> Option<&EliminationStep> {
        self.steps.iter().find(|s| s.case_id == case_id)
    }
}

fn minimal_model_steps() -> Vec<EliminationStep> {
    let mut steps = Vec::new();
    for (id, class) in [("kappa0/k3", SurfaceClass::K3), ("kappa0/enriques", SurfaceClass::Enriques)] {
        let c2 = class.c2();
        steps.push(EliminationStep::arithmetic(
            id,
            "c2(Bl_k Y) = c2(Y) + k >= c2(Y)",
            Verdict::from_survival(c2 <= 1),
            format!("c2(X) >= c2({class}) = {c2} > 1"),
        ));
    }
    let blowups = 1 - SurfaceClass::Abelian.c2();
    steps.push(EliminationStep::arithmetic(
        "kappa0/abelian",
        "c2(Bl_k Y) = c2(Y) + k",
        Verdict::from_survival(blowups == 1),
        format!("c2(Y) = 0, so X is the blow-up of Y at k = {blowups} point"),
    ));
    steps.push(EliminationStep::cited(
        "kappa0/bielliptic",
        "bi-elliptic minimal models are excluded by hypothesis; their classification is not attempted",
        Verdict::OutOfScope,
        "c2(Y) = 0 would also allow k = 1",
    ));
    steps
}

/// Steps for the abelian branch up to (and including) the boundary shape.
/// Returns the steps and the surviving partitions.
fn boundary_steps() -> (Vec<EliminationStep>, Vec<CuspPartition>) {
    let mut steps = Vec::new();
    let k_sq = LogPair::new(SurfaceClass::Abelian, 1, vec![]).map(|p| p.k_squared()).unwrap_or(-1);
    steps.push(EliminationStep::arithmetic(
        "abelian/log-chern",
        "c1bar^2 = K_X^2 - sum D_i^2 (adjunction, elliptic D_i); 3 c2bar = c1bar^2",
        Verdict::from_survival(3 - k_sq == BOUNDARY_DEFICIT as i64),
        format!("K_X^2 = {k_sq}, so -sum D_i^2 = 3 - ({k_sq}) = {}", 3 - k_sq),
    ));
    steps.push(EliminationStep::cited(
        "abelian/blow-down-curves",
        "K_Y = 0 gives p_a(C) = 1 + C^2/2; rational curves do not exist on a complex torus",
        Verdict::Survives,
        "each blow-down curve is smooth elliptic with C^2 = 0, or has one singular point with C^2 = 2n, n >= 1",
    ));
    // One blow-up at the common point: a smooth curve has multiplicity 1.
    let smooth_d_sq = 0 - 1;
    steps.push(EliminationStep::arithmetic(
        "abelian/smooth-component",
        "D^2 = C^2 - r^2 for the proper transform through a point of multiplicity r",
        Verdict::Survives,
        format!("C^2 = 0, r = 1: D^2 = {smooth_d_sq}"),
    ));

    let scan = deficit_scan(DEFICIT_SCAN_LIMIT);
    let scan_ok = scan.strictly_decreasing && scan.below_bound_from == Some(7);
    steps.push(EliminationStep::arithmetic(
        "abelian/singular/n>=7",
        "genus formula 2p_a(D) - 2 = 2p_a(C) - 2 - r(r-1) with p_a(D) = 1 gives r^2 - r - 2n = 0",
        Verdict::from_survival(!scan_ok),
        format!(
            "deficit 2n - r(n)^2 strictly decreasing: {}; below -4 from n = {:?} (checked n <= {})",
            scan.strictly_decreasing, scan.below_bound_from, scan.limit
        ),
    ));
    let cases = singular_curve_cases();
    for n in 1..7u64 {
        match cases.iter().find(|c| c.n == n) {
            Some(case) => steps.push(theta_obstruction_filter(case)),
            None => steps.push(EliminationStep::arithmetic(
                format!("abelian/singular/n={n}"),
                "r = (1 + sqrt(1 + 8n))/2 must be a positive integer",
                Verdict::Eliminated,
                format!("1 + 8n = {} is not an odd square", 1 + 8 * n),
            )),
        }
    }
    let surviving_selfints: Vec<i64> = cases
        .iter()
        .filter(|c| theta_obstruction(c.c_sq, c.r) == Verdict::Survives)
        .map(|c| c.d_sq)
        .chain(std::iter::once(smooth_d_sq))
        .collect();

    let mut survivors = Vec::new();
    for partition in enumerate_cusp_partitions() {
        let pair = LogPair::new(SurfaceClass::Abelian, 1, partition.entries().to_vec())
            .expect("partitions have negative entries");
        let lc = chern::log_chern_numbers(&pair);
        let bmy = chern::bmy_equality(lc.c1bar_sq, lc.c2bar);
        let blocked: Vec<i64> = partition
            .entries()
            .iter()
            .copied()
            .filter(|d| !surviving_selfints.contains(d))
            .collect();
        let survives = bmy && blocked.is_empty();
        let detail = if blocked.is_empty() {
            format!("(c1bar^2, c2bar) = ({}, {}); every D_i^2 realized", lc.c1bar_sq, lc.c2bar)
        } else {
            format!(
                "(c1bar^2, c2bar) = ({}, {}); D^2 in {blocked:?} needs a singular blow-down curve, all excluded",
                lc.c1bar_sq, lc.c2bar
            )
        };
        steps.push(EliminationStep::arithmetic(
            format!("abelian/partition/{partition}"),
            "realizable boundary self-intersections: -1 (smooth) or -r (singular, excluded above)",
            Verdict::from_survival(survives),
            detail,
        ));
        if survives {
            survivors.push(partition);
        }
    }
    (steps, survivors)
}

fn configuration_steps(orders: &[OrderKind]) -> (Vec<EliminationStep>, Vec<surfaces::Configuration>) {
    let mut steps = vec![EliminationStep::cited(
        "abelian/product-reduction",
        "translate the common point to the origin; two elliptic curves meeting once split Y = C1 x C2, \
         a third meeting both once forces C1 = C2 = C, and curves through the origin of C x C are \
         w = alpha z (alpha in End C) or z = 0, with C_0 . C_alpha = [Lambda : alpha Lambda]",
        Verdict::Survives,
        "Y = C x C; boundary curves are slopes in End(C) u {inf}",
    )];
    steps.push(EliminationStep::cited(
        "abelian/endomorphism-orders",
        "the automorphism group of an elliptic curve is {+-1} except for j = 1728 (Z[i]) and j = 0 (Z[tau])",
        Verdict::Survives,
        "unit groups of Z, Z[i], Z[tau] cover every case",
    ));
    let mut classes = Vec::new();
    for &order in orders {
        let outcome = surfaces::normalized_candidates(order)
            .and_then(|cands| Ok((cands, surfaces::search_good_configurations(order)?)));
        let step = match outcome {
            Ok((cands, found)) => {
                let listed: Vec<String> = cands
                    .iter()
                    .map(|c| format!("u = {}: {}", c.u, if c.good { "good" } else { "not good" }))
                    .collect();
                let shown: Vec<String> = found.iter().map(ToString::to_string).collect();
                let detail = format!(
                    "{{inf, 0, 1, u}} over units u: [{}]; classes: [{}]",
                    listed.join("; "),
                    shown.join("; ")
                );
                let verdict = Verdict::from_survival(!found.is_empty());
                classes.extend(found);
                EliminationStep::arithmetic(
                    format!("configurations/{order}"),
                    "good configuration: four curves pairwise meeting once; normalized to {inf, 0, 1, u} \
                     with u and u - 1 units",
                    verdict,
                    detail,
                )
            }
            Err(e) => EliminationStep::arithmetic(
                format!("configurations/{order}"),
                "exhaustive normalized search",
                Verdict::Eliminated,
                format!("search failed: {e}"),
            ),
        };
        steps.push(step);
    }
    (steps, classes)
}

/// Runs the full case tree over every endomorphism order.
pub fn run_classification() -> ClassificationReport {
    run_classification_with(&OrderKind::ALL)
}

/// Runs the case tree, searching configurations only over `orders`.
pub fn run_classification_with(orders: &[OrderKind]) -> ClassificationReport {
    let mut steps = eliminate_general_type();
    steps.extend(eliminate_nonzero_kodaira());
    steps.extend(minimal_model_steps());
    let (boundary, partitions) = boundary_steps();
    steps.extend(boundary);
    let (config_steps, classes) = configuration_steps(orders);
    steps.extend(config_steps);

    let four_smooth = partitions.len() == 1 && partitions[0].entries() == [-1, -1, -1, -1];
    let unique = classes.len() == 1 && four_smooth;
    steps.push(EliminationStep::arithmetic(
        "theorem/uniqueness",
        "exactly one boundary shape and one configuration class remain",
        Verdict::from_survival(unique),
        format!(
            "surviving boundary shapes: {}; configuration classes: {}",
            partitions.len(),
            classes.len()
        ),
    ));

    let survivor = unique.then(|| {
        let cfg = &classes[0];
        let boundary = partitions[0].entries().to_vec();
        let pair = LogPair::new(SurfaceClass::Abelian, 1, boundary.clone()).expect("negative boundary");
        let lc = chern::log_chern_numbers(&pair);
        let bmy = chern::bmy_equality(lc.c1bar_sq, lc.c2bar);
        let noether = chern::noether_filter(pair.k_squared(), pair.c2());
        steps.push(EliminationStep::arithmetic(
            "survivor/log-chern",
            "c1bar^2 = K_X^2 - sum D_i^2, c2bar = c2(X); 3 c2bar = c1bar^2; Noether on X",
            Verdict::from_survival(bmy && noether),
            format!(
                "(c1bar^2, c2bar) = ({}, {}); 3 c2bar = c1bar^2: {bmy}; K_X^2 + c2(X) = {} + {} = 0 mod 12: {noether}",
                lc.c1bar_sq,
                lc.c2bar,
                pair.k_squared(),
                pair.c2()
            ),
        ));
        Survivor {
            order: cfg.order(),
            slopes: cfg.slopes().to_vec(),
            boundary_selfints: boundary,
            c1bar_sq: lc.c1bar_sq,
            c2bar: lc.c2bar,
            bmy_equality: bmy,
        }
    });

    ClassificationReport {
        orders: orders.to_vec(),
        steps,
        survivor,
    }
}
