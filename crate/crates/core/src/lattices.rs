//! 2×2 integer matrices, their Smith normal form, and the finite group
//! {z ∈ ℂ/Λ : γz ∈ Λ} written in coordinates of the basis (1, g).

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::rings::{QuadInt, RingError};

pub type Rational = Ratio<i64>;

/// Coordinates of a point of ℂ/Λ in the basis (1, g), reduced into [0,1)².
pub type BasisPoint = (Rational, Rational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("multiplication by zero has infinite kernel")]
    ZeroGamma,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntMat2 {
    pub m11: i64,
    pub m12: i64,
    pub m21: i64,
    pub m22: i64,
}

impl IntMat2 {
    pub const fn new(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        IntMat2 { m11, m12, m21, m22 }
    }

    pub const fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub const fn diag(d1: i64, d2: i64) -> Self {
        Self::new(d1, 0, 0, d2)
    }

    pub fn det(&self) -> i128 {
        self.m11 as i128 * self.m22 as i128 - self.m12 as i128 * self.m21 as i128
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs() == 1
    }

    pub fn is_diagonal(&self) -> bool {
        self.m12 == 0 && self.m21 == 0
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LatticeError> {
        let dot = |x1: i64, y1: i64, x2: i64, y2: i64| {
            let v = x1 as i128 * x2 as i128 + y1 as i128 * y2 as i128;
            i64::try_from(v).map_err(|_| LatticeError::Overflow("matrix product"))
        };
        Ok(IntMat2 {
            m11: dot(self.m11, self.m12, rhs.m11, rhs.m21)?,
            m12: dot(self.m11, self.m12, rhs.m12, rhs.m22)?,
            m21: dot(self.m21, self.m22, rhs.m11, rhs.m21)?,
            m22: dot(self.m21, self.m22, rhs.m12, rhs.m22)?,
        })
    }

    /// M·(x, y)ᵀ over ℚ.
    pub fn apply(&self, p: &BasisPoint) -> BasisPoint {
        let (x, y) = *p;
        (
            Rational::from(self.m11) * x + Rational::from(self.m12) * y,
            Rational::from(self.m21) * x + Rational::from(self.m22) * y,
        )
    }

    fn rows(&self) -> [[i64; 2]; 2] {
        [[self.m11, self.m12], [self.m21, self.m22]]
    }

    fn from_rows(r: [[i64; 2]; 2]) -> Self {
        Self::new(r[0][0], r[0][1], r[1][0], r[1][1])
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

/// `u · m · v = d` with `u`, `v` unimodular and `d = diag(d₁, d₂)`,
/// `0 ≤ d₁ | d₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMat2,
    pub d: IntMat2,
    pub v: IntMat2,
}

impl SnfResult {
    pub fn invariant_factors(&self) -> (i64, i64) {
        (self.d.m11, self.d.m22)
    }

    /// Checks every structural property against the input matrix.
    pub fn is_valid_for(&self, m: &IntMat2) -> bool {
        let (d1, d2) = self.invariant_factors();
        let product = self.u.checked_mul(m).and_then(|um| um.checked_mul(&self.v));
        product == Ok(self.d)
            && self.u.is_unimodular()
            && self.v.is_unimodular()
            && self.d.is_diagonal()
            && d1 >= 0
            && d2 >= 0
            && divides(d1, d2)
            && d1 as i128 * d2 as i128 == m.det().abs()
    }
}

fn divides(a: i64, b: i64) -> bool {
    if a == 0 {
        b == 0
    } else {
        b % a == 0
    }
}

/// Matrix of z ↦ γz on Λ = ℤ + ℤg; columns are the images of 1 and g.
pub fn mult_matrix(gamma: &QuadInt) -> Result<IntMat2, LatticeError> {
    let order = gamma.order();
    let (a, b) = (gamma.a(), gamma.b());
    let bn = b
        .checked_mul(order.norm_of_gen())
        .and_then(i64::checked_neg)
        .ok_or(LatticeError::Overflow("mult_matrix"))?;
    let a_bt = b
        .checked_mul(order.trace_of_gen())
        .and_then(|bt| bt.checked_add(a))
        .ok_or(LatticeError::Overflow("mult_matrix"))?;
    Ok(IntMat2::new(a, bn, b, a_bt))
}

// Elementary operations on a working matrix, mirrored on the transform that
// accumulates them (rows into `u`, columns into `v`).
struct Reducer {
    a: [[i64; 2]; 2],
    u: [[i64; 2]; 2],
    v: [[i64; 2]; 2],
}

impl Reducer {
    fn swap_rows(&mut self) {
        self.a.swap(0, 1);
        self.u.swap(0, 1);
    }

    fn swap_cols(&mut self) {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                row.swap(0, 1);
            }
        }
    }

    /// row[dst] += k · row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i64) -> Result<(), LatticeError> {
        for m in [&mut self.a, &mut self.u] {
            let src_row = m[src];
            for (x, s) in m[dst].iter_mut().zip(src_row) {
                *x = k
                    .checked_mul(s)
                    .and_then(|y| y.checked_add(*x))
                    .ok_or(LatticeError::Overflow("smith normal form"))?;
            }
        }
        Ok(())
    }

    /// col[dst] += k · col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i64) -> Result<(), LatticeError> {
        for m in [&mut self.a, &mut self.v] {
            for row in m.iter_mut() {
                row[dst] = k
                    .checked_mul(row[src])
                    .and_then(|x| x.checked_add(row[dst]))
                    .ok_or(LatticeError::Overflow("smith normal form"))?;
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) -> Result<(), LatticeError> {
        for m in [&mut self.a, &mut self.u] {
            for x in m[r].iter_mut() {
                *x = x.checked_neg().ok_or(LatticeError::Overflow("smith normal form"))?;
            }
        }
        Ok(())
    }
}

pub fn smith_normal_form(m: &IntMat2) -> Result<SnfResult, LatticeError> {
    let id = IntMat2::identity().rows();
    let mut r = Reducer {
        a: m.rows(),
        u: id,
        v: id,
    };
    loop {
        // Bring the smallest nonzero entry to the pivot.
        let pivot = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .filter(|&(i, j)| r.a[i][j] != 0)
            .min_by_key(|&(i, j)| r.a[i][j].unsigned_abs());
        let Some((pi, pj)) = pivot else { break };
        if pi == 1 {
            r.swap_rows();
        }
        if pj == 1 {
            r.swap_cols();
        }
        let p = r.a[0][0];
        let overflow = || LatticeError::Overflow("smith normal form");
        let q = r.a[1][0].checked_div_euclid(p).and_then(i64::checked_neg).ok_or_else(overflow)?;
        r.add_row(1, 0, q)?;
        let q = r.a[0][1].checked_div_euclid(p).and_then(i64::checked_neg).ok_or_else(overflow)?;
        r.add_col(1, 0, q)?;
        if r.a[1][0] != 0 || r.a[0][1] != 0 {
            continue;
        }
        if r.a[1][1] % p != 0 {
            // Pull d₂ into the pivot row; the next pass shrinks the pivot.
            r.add_row(0, 1, 1)?;
            continue;
        }
        break;
    }
    for row in 0..2 {
        if r.a[row][row] < 0 {
            r.negate_row(row)?;
        }
    }
    let out = SnfResult {
        u: IntMat2::from_rows(r.u),
        d: IntMat2::from_rows(r.a),
        v: IntMat2::from_rows(r.v),
    };
    debug_assert!(out.is_valid_for(m), "invalid SNF {out:?} for {m}");
    Ok(out)
}

/// Reduces a rational into [0, 1).
pub fn frac(x: Rational) -> Rational {
    x - x.floor()
}

pub fn reduce_point(p: &BasisPoint) -> BasisPoint {
    (frac(p.0), frac(p.1))
}

/// The kernel of multiplication by `gamma` on ℂ/Λ, as sorted coset
/// representatives in [0,1)².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionGroup {
    gamma: QuadInt,
    reps: Vec<BasisPoint>,
}

impl TorsionGroup {
    pub fn gamma(&self) -> &QuadInt {
        &self.gamma
    }

    pub fn reps(&self) -> &[BasisPoint] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Membership of the class of `p` (any representative).
    pub fn contains(&self, p: &BasisPoint) -> bool {
        self.reps.binary_search(&reduce_point(p)).is_ok()
    }

    /// Sum of two points in ℂ/Λ, reduced.
    pub fn add(p: &BasisPoint, q: &BasisPoint) -> BasisPoint {
        reduce_point(&(p.0 + q.0, p.1 + q.1))
    }
}

/// Whether γ·p lies in Λ, i.e. has integer basis coordinates.
pub fn kills(gamma: &QuadInt, p: &BasisPoint) -> Result<bool, LatticeError> {
    let image = mult_matrix(gamma)?.apply(p);
    Ok(image.0.is_integer() && image.1.is_integer())
}

pub fn quotient_reps(gamma: &QuadInt) -> Result<TorsionGroup, LatticeError> {
    if gamma.is_zero() {
        return Err(LatticeError::ZeroGamma);
    }
    let snf = smith_normal_form(&mult_matrix(gamma)?)?;
    let (d1, d2) = snf.invariant_factors();
    // M = U⁻¹ D V⁻¹, so Mz ∈ ℤ² iff D·V⁻¹z ∈ ℤ², i.e. z ∈ V·(ℤ/d₁ × ℤ/d₂).
    let mut reps: Vec<BasisPoint> = (0..d1)
        .flat_map(|x| (0..d2).map(move |y| (Rational::new(x, d1), Rational::new(y, d2))))
        .map(|p| reduce_point(&snf.v.apply(&p)))
        .collect();
    reps.sort();
    reps.dedup();
    debug_assert_eq!(Ok(reps.len() as i64), gamma.norm());
    Ok(TorsionGroup { gamma: *gamma, reps })
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn format_point(p: &BasisPoint) -> String {
    format!("({}, {})", p.0, p.1)
}
