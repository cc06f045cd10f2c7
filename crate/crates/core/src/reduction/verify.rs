use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::action::{mat2_identity, translate_locate_within, GroupAction2D};
use crate::polyhedral::{cone_intersection, PolyhedralCone};
use crate::scalars::Rational;
use crate::{Error, Result};

/// Numerators and denominators of sampled coordinates are drawn from `1..=SAMPLE_BOX`
/// (numerators of `x2` from `-SAMPLE_BOX..=SAMPLE_BOX`).
pub const SAMPLE_BOX: i64 = 1000;

/// At most this many witnesses are kept in a report.
pub const MAX_WITNESSES: usize = 16;

/// Why a sample or a word failed one of the two axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A sampled point of the open cone not found in `g^k Pi` for `|k| <= max_word`.
    /// `located` is set when the point lies in a translate beyond the bound.
    Uncovered {
        #[serde(with = "rational_pair")]
        point: [Rational; 2],
        #[serde(with = "rational_string")]
        slope: Rational,
        located: Option<i64>,
    },
    /// `Int(Pi)` meets `Int(g^word Pi)`.
    Overlap { word: i64 },
}

/// Outcome of checking the covering and disjoint-interiors axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainReport {
    pub covering_ok: bool,
    pub disjoint_ok: bool,
    pub witnesses: Vec<Witness>,
    /// Largest `|k|` needed to place a covered sample.
    pub words_used: u32,
}

impl DomainReport {
    pub fn ok(&self) -> bool {
        self.covering_ok && self.disjoint_ok
    }
}

/// Deterministic rational points of the open cone of `action`.
pub fn sample_points(action: &GroupAction2D, count: usize, seed: u64) -> Vec<[Rational; 2]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x1 =
            Rational::new(BigInt::from(rng.gen_range(1..=SAMPLE_BOX)), BigInt::from(rng.gen_range(1..=SAMPLE_BOX)));
        let x2 = Rational::new(
            BigInt::from(rng.gen_range(-SAMPLE_BOX..=SAMPLE_BOX)),
            BigInt::from(rng.gen_range(1..=SAMPLE_BOX)),
        );
        let p = [x1, x2];
        if action.in_open_cone(&p) {
            out.push(p);
        }
    }
    out
}

/// Checks `Pi` against both fundamental-domain axioms for `<g>`:
/// every sampled point lies in some `g^k Pi` with `|k| <= max_word`, and
/// `Int(Pi)` misses `Int(g^k Pi)` for `1 <= |k| <= max_word`.
pub fn verify_fundamental_domain(
    pi: &PolyhedralCone,
    action: &GroupAction2D,
    samples: usize,
    max_word: u32,
    seed: u64,
) -> Result<DomainReport> {
    if pi.dim() != 2 {
        return Err(Error::PreconditionViolated(format!("Pi has dimension {}, expected 2", pi.dim())));
    }
    for r in pi.rays() {
        let v = r.to_rational();
        if !action.in_closed_cone(&[v[0].clone(), v[1].clone()]) {
            return Err(Error::PreconditionViolated(format!("ray {r} is outside the closed cone")));
        }
    }

    let mut witnesses = Vec::new();
    let mut covering_ok = true;
    let mut words_used = 0u32;
    let bound = max_word as i64;
    for p in sample_points(action, samples, seed) {
        let located = match translate_locate_within(&p, pi, action, 2 * max_word + 2) {
            Ok(k) if k.abs() <= bound => {
                words_used = words_used.max(k.unsigned_abs() as u32);
                continue;
            }
            Ok(k) => Some(k),
            Err(Error::NotFundamental(_)) => None,
            Err(e) => return Err(e),
        };
        covering_ok = false;
        if witnesses.len() < MAX_WITNESSES {
            let slope = &p[1] / &p[0];
            witnesses.push(Witness::Uncovered { point: p, slope, located });
        }
    }

    let mut disjoint_ok = true;
    for k in (-bound..=bound).filter(|&k| k != 0) {
        if action.power(k) == mat2_identity() {
            continue;
        }
        let translate = action.translate(pi, k)?;
        let overlap = cone_intersection(pi, &translate)?.is_some_and(|c| c.is_full_dimensional());
        if overlap {
            disjoint_ok = false;
            if witnesses.len() < MAX_WITNESSES {
                witnesses.push(Witness::Overlap { word: k });
            }
        }
    }

    Ok(DomainReport { covering_ok, disjoint_ok, witnesses, words_used })
}

/// Rationals as `"p/q"` strings.
pub mod rational_string {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::scalars::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// `[Rational; 2]` as a pair of `"p/q"` strings.
pub mod rational_pair {
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    use crate::scalars::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(p: &[Rational; 2], s: S) -> Result<S::Ok, S::Error> {
        [p[0].to_string(), p[1].to_string()].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Rational; 2], D::Error> {
        let [a, b] = <[String; 2]>::deserialize(d)?;
        Ok([parse_rational(&a).map_err(D::Error::custom)?, parse_rational(&b).map_err(D::Error::custom)?])
    }
}

#[cfg(test)]
mod tests {
    use super::super::action::mat2_from_ints;
    use super::*;
    use crate::scalars::int;

    fn setup() -> (PolyhedralCone, GroupAction2D) {
        let pi = PolyhedralCone::from_int_rays(&[&[1, 0], &[3, 2]]).unwrap();
        let g = GroupAction2D::new(int(1), int(2), mat2_from_ints([[3, 4], [2, 3]])).unwrap();
        (pi, g)
    }

    #[test]
    fn real_multiplication_domain_passes() {
        let (pi, g) = setup();
        let report = verify_fundamental_domain(&pi, &g, 500, 12, 0).unwrap();
        assert!(report.covering_ok && report.disjoint_ok, "{report:?}");
        assert!(report.witnesses.is_empty());
        assert!(report.words_used >= 1);
    }

    #[test]
    fn single_ray_does_not_cover() {
        let (_, g) = setup();
        let ray = PolyhedralCone::from_int_rays(&[&[1, 0]]).unwrap();
        let report = verify_fundamental_domain(&ray, &g, 50, 12, 0).unwrap();
        assert!(!report.covering_ok);
        assert!(report.disjoint_ok);
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn squared_generator_leaves_gaps() {
        let (pi, g) = setup();
        let g2 = GroupAction2D::new(int(1), int(2), g.power(2)).unwrap();
        let report = verify_fundamental_domain(&pi, &g2, 500, 12, 0).unwrap();
        assert!(report.disjoint_ok);
        assert!(!report.covering_ok);
    }

    #[test]
    fn overlapping_cone_is_not_disjoint() {
        let (_, g) = setup();
        let fat = PolyhedralCone::from_int_rays(&[&[1, 0], &[17, 12]]).unwrap();
        let report = verify_fundamental_domain(&fat, &g, 100, 12, 0).unwrap();
        assert!(report.covering_ok);
        assert!(!report.disjoint_ok);
        assert!(report.witnesses.contains(&Witness::Overlap { word: 1 }));
        assert!(report.witnesses.contains(&Witness::Overlap { word: -1 }));
    }

    #[test]
    fn precondition() {
        let (_, g) = setup();
        let outside = PolyhedralCone::from_int_rays(&[&[1, 0], &[1, 1]]).unwrap();
        assert!(matches!(verify_fundamental_domain(&outside, &g, 10, 12, 0), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn sampling_is_deterministic() {
        let (_, g) = setup();
        assert_eq!(sample_points(&g, 20, 7), sample_points(&g, 20, 7));
        assert_ne!(sample_points(&g, 20, 7), sample_points(&g, 20, 8));
        assert!(sample_points(&g, 100, 1).iter().all(|p| g.in_open_cone(p)));
    }
}
