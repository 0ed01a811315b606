//! Chern numbers of blown-up minimal surfaces and logarithmic Chern numbers
//! of pairs (X, D) whose boundary D is a disjoint union of smooth elliptic
//! curves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error("boundary self-intersection {0} is not negative")]
    NonNegativeBoundary(i64),
    #[error("unknown surface class {0:?}")]
    UnknownClass(String),
}

/// Minimal model of a smooth projective surface, with the invariants the
/// class determines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceClass {
    Abelian,
    Bielliptic,
    K3,
    Enriques,
    ProjectivePlane,
    Hirzebruch,
    RuledOverGenus(u32),
    /// Minimal elliptic surface of Kodaira dimension one with c₂ = 12d.
    MinimalKodairaOne(u32),
}

impl SurfaceClass {
    pub fn c2(&self) -> i64 {
        match *self {
            SurfaceClass::Abelian | SurfaceClass::Bielliptic => 0,
            SurfaceClass::K3 => 24,
            SurfaceClass::Enriques => 12,
            SurfaceClass::ProjectivePlane => 3,
            SurfaceClass::Hirzebruch => 4,
            SurfaceClass::RuledOverGenus(g) => 4 - 4 * g as i64,
            SurfaceClass::MinimalKodairaOne(d) => 12 * d as i64,
        }
    }

    /// K² of the minimal model.
    pub fn k_squared(&self) -> i64 {
        match *self {
            SurfaceClass::Abelian
            | SurfaceClass::Bielliptic
            | SurfaceClass::K3
            | SurfaceClass::Enriques
            | SurfaceClass::MinimalKodairaOne(_) => 0,
            SurfaceClass::ProjectivePlane => 9,
            SurfaceClass::Hirzebruch => 8,
            SurfaceClass::RuledOverGenus(g) => 8 * (1 - g as i64),
        }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceClass::Abelian => f.write_str("abelian"),
            SurfaceClass::Bielliptic => f.write_str("bielliptic"),
            SurfaceClass::K3 => f.write_str("k3"),
            SurfaceClass::Enriques => f.write_str("enriques"),
            SurfaceClass::ProjectivePlane => f.write_str("p2"),
            SurfaceClass::Hirzebruch => f.write_str("hirzebruch"),
            SurfaceClass::RuledOverGenus(g) => write!(f, "ruled:{g}"),
            SurfaceClass::MinimalKodairaOne(d) => write!(f, "kodaira1:{d}"),
        }
    }
}

impl FromStr for SurfaceClass {
    type Err = ChernError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || ChernError::UnknownClass(s.to_string());
        let lower = s.to_ascii_lowercase();
        let (head, arg) = match lower.split_once(':') {
            Some((h, a)) => (h, Some(a.parse::<u32>().map_err(|_| unknown())?)),
            None => (lower.as_str(), None),
        };
        Ok(match (head, arg) {
            ("abelian", None) => SurfaceClass::Abelian,
            ("bielliptic" | "bi-elliptic", None) => SurfaceClass::Bielliptic,
            ("k3", None) => SurfaceClass::K3,
            ("enriques", None) => SurfaceClass::Enriques,
            ("p2" | "projective-plane", None) => SurfaceClass::ProjectivePlane,
            ("hirzebruch", None) => SurfaceClass::Hirzebruch,
            ("ruled", Some(g)) => SurfaceClass::RuledOverGenus(g),
            ("kodaira1", Some(d)) => SurfaceClass::MinimalKodairaOne(d),
            _ => return Err(unknown()),
        })
    }
}

/// A minimal model blown up `blowups` times, with boundary curves of the
/// given (negative) self-intersections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogPair {
    base: SurfaceClass,
    blowups: u32,
    boundary_selfints: Vec<i64>,
}

impl LogPair {
    pub fn new(base: SurfaceClass, blowups: u32, boundary_selfints: Vec<i64>) -> Result<Self, ChernError> {
        if let Some(&d) = boundary_selfints.iter().find(|&&d| d >= 0) {
            return Err(ChernError::NonNegativeBoundary(d));
        }
        Ok(LogPair {
            base,
            blowups,
            boundary_selfints,
        })
    }

    pub fn base(&self) -> SurfaceClass {
        self.base
    }

    pub fn blowups(&self) -> u32 {
        self.blowups
    }

    pub fn boundary_selfints(&self) -> &[i64] {
        &self.boundary_selfints
    }

    /// K² of the blown-up surface.
    pub fn k_squared(&self) -> i64 {
        self.base.k_squared() - self.blowups as i64
    }

    pub fn c2(&self) -> i64 {
        blowup_c2(self.base.c2(), self.blowups)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogChern {
    pub c1bar_sq: i64,
    pub c2bar: i64,
}

pub fn blowup_c2(c2: i64, k: u32) -> i64 {
    c2 + k as i64
}

/// (c̄₁², c̄₂) of the pair.
///
/// The boundary is a disjoint union of smooth elliptic curves, so
/// χ(D) = 0 gives c̄₂ = c₂(X), and adjunction gives K·Dᵢ = −Dᵢ², hence
/// (K + D)² = K² − ΣDᵢ².
pub fn log_chern_numbers(pair: &LogPair) -> LogChern {
    let boundary: i64 = pair.boundary_selfints.iter().sum();
    LogChern {
        c1bar_sq: pair.k_squared() - boundary,
        c2bar: pair.c2(),
    }
}

/// Noether: c₁² + c₂ ≡ 0 (mod 12) on any smooth compact surface.
pub fn noether_filter(c1_sq: i64, c2: i64) -> bool {
    (c1_sq + c2).rem_euclid(12) == 0
}

/// 3c̄₂ = c̄₁².
pub fn bmy_equality(c1bar_sq: i64, c2bar: i64) -> bool {
    3 * c2bar == c1bar_sq
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_table() {
        let table = [
            (SurfaceClass::Abelian, 0, 0),
            (SurfaceClass::Bielliptic, 0, 0),
            (SurfaceClass::K3, 24, 0),
            (SurfaceClass::Enriques, 12, 0),
            (SurfaceClass::ProjectivePlane, 3, 9),
            (SurfaceClass::Hirzebruch, 4, 8),
            (SurfaceClass::RuledOverGenus(0), 4, 8),
            (SurfaceClass::RuledOverGenus(1), 0, 0),
            (SurfaceClass::RuledOverGenus(3), -8, -16),
            (SurfaceClass::MinimalKodairaOne(0), 0, 0),
            (SurfaceClass::MinimalKodairaOne(2), 24, 0),
        ];
        for (class, c2, k2) in table {
            assert_eq!((class.c2(), class.k_squared()), (c2, k2), "{class}");
            // every minimal model here satisfies Noether
            assert!(noether_filter(k2, c2), "{class}");
            assert_eq!(class.to_string().parse::<SurfaceClass>().unwrap(), class);
        }
    }

    #[test]
    fn blowups() {
        assert_eq!(blowup_c2(0, 1), 1);
        assert_eq!(blowup_c2(24, 0), 24);
        assert_eq!(blowup_c2(3, 5), 8);
    }

    #[test]
    fn log_chern_examples() {
        let four = LogPair::new(SurfaceClass::Abelian, 1, vec![-1, -1, -1, -1]).unwrap();
        assert_eq!(log_chern_numbers(&four), LogChern { c1bar_sq: 3, c2bar: 1 });
        let one = LogPair::new(SurfaceClass::Abelian, 1, vec![-4]).unwrap();
        assert_eq!(log_chern_numbers(&one), LogChern { c1bar_sq: 3, c2bar: 1 });
        let empty = LogPair::new(SurfaceClass::Abelian, 0, vec![]).unwrap();
        assert_eq!(log_chern_numbers(&empty), LogChern { c1bar_sq: 0, c2bar: 0 });
        assert_eq!(
            LogPair::new(SurfaceClass::Abelian, 1, vec![-1, 0]),
            Err(ChernError::NonNegativeBoundary(0))
        );
    }

    #[test]
    fn noether_examples() {
        assert!(!noether_filter(1, 1));
        assert!(!noether_filter(2, 1));
        assert!(noether_filter(0, 12));
        assert!(noether_filter(9, 3));
        assert!(noether_filter(-1, 1));
    }

    #[test]
    fn bmy_examples() {
        assert!(bmy_equality(3, 1));
        assert!(!bmy_equality(2, 1));
        assert!(bmy_equality(0, 0));
    }

    #[test]
    fn abelian_one_point_blowups_exhaustive() {
        // all boundary lists with entries in [−6, −1] and length ≤ 6
        fn walk(prefix: &mut Vec<i64>, depth: usize) {
            let pair = LogPair::new(SurfaceClass::Abelian, 1, prefix.clone()).unwrap();
            let lc = log_chern_numbers(&pair);
            let deficit: i64 = prefix.iter().map(|d| -d).sum();
            assert_eq!(lc.c1bar_sq, -1 + deficit);
            assert_eq!(lc.c2bar, 1);
            assert_eq!(bmy_equality(lc.c1bar_sq, lc.c2bar), deficit == 4);
            if depth < 6 {
                for d in -6..=-1 {
                    prefix.push(d);
                    walk(prefix, depth + 1);
                    prefix.pop();
                }
            }
        }
        walk(&mut Vec::new(), 0);
    }

    #[test]
    fn class_parsing_errors() {
        assert!("ruled".parse::<SurfaceClass>().is_err());
        assert!("ruled:x".parse::<SurfaceClass>().is_err());
        assert!("torus".parse::<SurfaceClass>().is_err());
    }
}
