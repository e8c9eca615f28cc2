//! Brute-force region counting from an actual chord arrangement.
//!
//! Points live on the unit circle at exact rational coordinates through the
//! tangent half-angle map `t -> ((1 - t^2)/(1 + t^2), 2t/(1 + t^2))`, with the
//! point `(-1, 0)` as the parameter at infinity. Chord crossings are solved
//! exactly, so general position is certified rather than assumed, and
//! degenerate arrangements are counted correctly instead of rejected.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moser;
use crate::numeric::{rat, Rational};

/// Default number of placement attempts in generic mode.
pub const DEFAULT_RETRY_BUDGET: usize = 16;

/// Largest `m` for which the face-walk count is run.
pub const FACE_WALK_MAX_M: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CircleParam {
    Finite(Rational),
    /// The point `(-1, 0)`.
    Infinity,
}

impl CircleParam {
    pub fn finite(t: impl Into<Rational>) -> Self {
        CircleParam::Finite(t.into())
    }
}

/// Finite parameters ascend with the angle in `(-pi, pi)`; infinity is `pi`.
impl Ord for CircleParam {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (CircleParam::Finite(a), CircleParam::Finite(b)) => a.cmp(b),
            (CircleParam::Finite(_), CircleParam::Infinity) => Ordering::Less,
            (CircleParam::Infinity, CircleParam::Finite(_)) => Ordering::Greater,
            (CircleParam::Infinity, CircleParam::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for CircleParam {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CircleParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircleParam::Finite(t) => f.write_str(&t.to_fraction_string()),
            CircleParam::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for CircleParam {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::str::FromStr for CircleParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(CircleParam::Infinity),
            other => Ok(CircleParam::Finite(other.parse()?)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CirclePoint {
    pub param: CircleParam,
    pub x: Rational,
    pub y: Rational,
}

impl CirclePoint {
    pub fn new(param: CircleParam) -> Self {
        let (x, y) = match &param {
            CircleParam::Infinity => (-Rational::one(), Rational::zero()),
            CircleParam::Finite(t) => {
                let t2 = t * t;
                let den = (Rational::one() + &t2).recip().expect("1 + t^2 > 0");
                ((Rational::one() - &t2) * &den, Rational::from(2) * t * &den)
            }
        };
        CirclePoint { param, x, y }
    }
}

type Point = (Rational, Rational);

fn cross(a: &Point, b: &Point) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn sub(a: &Point, b: &Point) -> Point {
    (&a.0 - &b.0, &a.1 - &b.1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InteriorPoint {
    pub x: Rational,
    pub y: Rational,
    /// Indices into `ChordArrangement::chords`, ascending.
    pub chords: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Degeneracy {
    /// Interior points where three or more chords meet.
    pub concurrent: Vec<InteriorPoint>,
    /// Crossings that do not lie strictly inside the circle.
    pub on_boundary: Vec<InteriorPoint>,
}

impl Degeneracy {
    pub fn is_empty(&self) -> bool {
        self.concurrent.is_empty() && self.on_boundary.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordArrangement {
    pub m: usize,
    /// Sorted by angle.
    pub points: Vec<CirclePoint>,
    /// Every unordered pair `(i, j)` with `i < j`, lexicographic.
    pub chords: Vec<(usize, usize)>,
    /// Sorted by coordinates; empty until `intersect_chords` runs.
    pub interior_points: Vec<InteriorPoint>,
    pub degeneracy: Option<Degeneracy>,
    pub general_position: bool,
}

impl ChordArrangement {
    /// Sorts the parameters by angle and lists every chord. Intersections are
    /// not computed yet.
    pub fn from_params(params: Vec<CircleParam>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::InvalidArgument(
                "an arrangement needs at least one point".into(),
            ));
        }
        let mut params = params;
        params.sort();
        if let Some(w) = params.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateParameter(w[0].to_string()));
        }
        let m = params.len();
        let points = params.into_iter().map(CirclePoint::new).collect();
        let chords = (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .collect();
        Ok(ChordArrangement {
            m,
            points,
            chords,
            interior_points: Vec::new(),
            degeneracy: None,
            general_position: true,
        })
    }

    pub fn params(&self) -> Vec<CircleParam> {
        self.points.iter().map(|p| p.param.clone()).collect()
    }

    fn xy(&self, i: usize) -> Point {
        (self.points[i].x.clone(), self.points[i].y.clone())
    }

    /// Crossing of two chords strictly inside both segments, if any.
    fn crossing(&self, c1: (usize, usize), c2: (usize, usize)) -> Option<Point> {
        if c1.0 == c2.0 || c1.0 == c2.1 || c1.1 == c2.0 || c1.1 == c2.1 {
            return None;
        }
        let (a, b) = (self.xy(c1.0), self.xy(c1.1));
        let (c, d) = (self.xy(c2.0), self.xy(c2.1));
        let ab = sub(&b, &a);
        let cd = sub(&d, &c);
        let det = cross(&ab, &cd);
        if det.is_zero() {
            return None;
        }
        let ac = sub(&c, &a);
        let s = cross(&ac, &cd).checked_div(&det).ok()?;
        let u = cross(&ac, &ab).checked_div(&det).ok()?;
        let zero = Rational::zero();
        let one = Rational::one();
        if s > zero && s < one && u > zero && u < one {
            Some((&a.0 + &s * &ab.0, &a.1 + &s * &ab.1))
        } else {
            None
        }
    }

    fn crossings_for(&self, i: usize) -> Vec<(Point, usize, usize)> {
        (i + 1..self.chords.len())
            .filter_map(|j| {
                self.crossing(self.chords[i], self.chords[j])
                    .map(|p| (p, i, j))
            })
            .collect()
    }
}

/// Computes every chord crossing, merges coincident ones, and records any
/// degeneracy. The parallel path produces the identical arrangement.
pub fn intersect_chords(arr: &ChordArrangement, parallel: bool) -> ChordArrangement {
    let hits: Vec<(Point, usize, usize)> = if parallel {
        (0..arr.chords.len())
            .into_par_iter()
            .flat_map_iter(|i| arr.crossings_for(i))
            .collect()
    } else {
        (0..arr.chords.len())
            .flat_map(|i| arr.crossings_for(i))
            .collect()
    };

    let mut merged: BTreeMap<Point, BTreeSet<usize>> = BTreeMap::new();
    for (p, i, j) in hits {
        let set = merged.entry(p).or_default();
        set.insert(i);
        set.insert(j);
    }
    let interior_points: Vec<InteriorPoint> = merged
        .into_iter()
        .map(|((x, y), chords)| InteriorPoint {
            x,
            y,
            chords: chords.into_iter().collect(),
        })
        .collect();

    let mut degeneracy = Degeneracy::default();
    for p in &interior_points {
        if p.chords.len() >= 3 {
            degeneracy.concurrent.push(p.clone());
        }
        if &p.x * &p.x + &p.y * &p.y >= Rational::one() {
            degeneracy.on_boundary.push(p.clone());
        }
    }
    let general_position = degeneracy.is_empty();
    ChordArrangement {
        interior_points,
        degeneracy: (!general_position).then_some(degeneracy),
        general_position,
        ..arr.clone()
    }
}

/// How `place_points` chooses parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Placement {
    /// Deterministic sequence; `variant` selects one of many distinct
    /// configurations.
    Generic {
        variant: u64,
    },
    /// Random parameters drawn from a seeded generator.
    Seeded {
        seed: u64,
        variant: u64,
    },
    /// Rational approximations of a regular polygon, diametric pairs exact,
    /// never perturbed.
    RegularApprox,
    Explicit(Vec<CircleParam>),
}

fn generic_params(m: usize, variant: u64, attempt: usize) -> Vec<CircleParam> {
    let half = rat(m as i64, 2);
    let v = variant as i64;
    (0..m as i64)
        .map(|i| {
            let frac = rat(v + 1, (v + i + 2) * (v + i + 2));
            let nudge = rat(attempt as i64, 97 * (i + 1) + 13 * attempt as i64 + 1);
            CircleParam::Finite(Rational::from(i) - &half + frac + nudge)
        })
        .collect()
}

fn seeded_params(m: usize, seed: u64, variant: u64, attempt: usize) -> Vec<CircleParam> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(variant.wrapping_mul(1 << 16).wrapping_add(attempt as u64));
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(m);
    while out.len() < m {
        let t = rat(rng.gen_range(-4000..=4000), rng.gen_range(1..=997));
        if seen.insert(t.clone()) {
            out.push(CircleParam::Finite(t));
        }
    }
    out
}

/// `tan(phi)` to a fixed rational precision, from truncated series with a
/// rational `pi`. Exact arithmetic throughout; only the angles are approximate.
fn approx_tan(numer: i64, denom: i64) -> Rational {
    let pi = rat(355, 113);
    let phi = pi * rat(numer, denom);
    let phi2 = &phi * &phi;
    let (mut sin, mut cos) = (Rational::zero(), Rational::zero());
    let (mut s_term, mut c_term) = (phi.clone(), Rational::one());
    for k in 0..12i64 {
        sin += &s_term;
        cos += &c_term;
        s_term = -(&s_term * &phi2) * rat(1, (2 * k + 2) * (2 * k + 3));
        c_term = -(&c_term * &phi2) * rat(1, (2 * k + 1) * (2 * k + 2));
    }
    let t = sin.checked_div(&cos).expect("angle away from pi/2");
    // round to 1e-9 so coordinates stay small
    let scale = 1_000_000_000i64;
    let scaled = &t * Rational::from(scale);
    let floor = scaled.numer().clone() / scaled.denom().clone();
    Rational::new(floor, scale).expect("nonzero scale")
}

fn regular_params(m: usize) -> Vec<CircleParam> {
    // angle_i = -pi + 2 pi (i + 1/2) / m, parameter tan(angle_i / 2)
    let m64 = m as i64;
    let mut out: Vec<Option<CircleParam>> = vec![None; m];
    for i in 0..m {
        if out[i].is_some() {
            continue;
        }
        // half angle as a fraction of pi: (2i + 1 - m) / (2m)
        let t = approx_tan(2 * i as i64 + 1 - m64, 2 * m64);
        let opposite = i + m / 2;
        if m.is_multiple_of(2) && opposite < m {
            let o = if t.is_zero() {
                CircleParam::Infinity
            } else {
                CircleParam::Finite(-t.recip().expect("nonzero"))
            };
            out[opposite] = Some(o);
        }
        out[i] = Some(CircleParam::Finite(t));
    }
    out.into_iter().map(|p| p.expect("filled")).collect()
}

/// Builds an arrangement with intersections computed. In generic and seeded
/// modes the placement is retried with deterministic perturbations until it
/// is in general position, up to `budget` attempts.
pub fn build_arrangement(
    m: usize,
    placement: &Placement,
    budget: usize,
    parallel: bool,
) -> Result<ChordArrangement> {
    if m < 1 {
        return Err(Error::InvalidArgument(
            "need at least one point (m >= 1)".into(),
        ));
    }
    let attempt_with = |params: Vec<CircleParam>| -> Result<ChordArrangement> {
        Ok(intersect_chords(
            &ChordArrangement::from_params(params)?,
            parallel,
        ))
    };
    match placement {
        Placement::Explicit(params) => {
            if params.len() != m {
                return Err(Error::InvalidArgument(format!(
                    "explicit placement has {} parameters for m = {m}",
                    params.len()
                )));
            }
            attempt_with(params.clone())
        }
        Placement::RegularApprox => attempt_with(regular_params(m)),
        Placement::Generic { .. } | Placement::Seeded { .. } => {
            for attempt in 0..budget.max(1) {
                let params = match placement {
                    Placement::Generic { variant } => generic_params(m, *variant, attempt),
                    Placement::Seeded { seed, variant } => {
                        seeded_params(m, *seed, *variant, attempt)
                    }
                    _ => unreachable!(),
                };
                match attempt_with(params) {
                    Ok(arr) if arr.general_position => return Ok(arr),
                    Ok(_) | Err(Error::DuplicateParameter(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(Error::PlacementBudgetExceeded {
                m,
                attempts: budget.max(1),
            })
        }
    }
}

pub fn place_points(m: usize, placement: &Placement, budget: usize) -> Result<Vec<CirclePoint>> {
    Ok(build_arrangement(m, placement, budget, false)?.points)
}

/// The symmetric six-point configuration whose three main diagonals meet at
/// the centre: parameters `0, +-1/2, +-2` and infinity.
pub fn hexagon_params() -> Vec<CircleParam> {
    vec![
        CircleParam::finite(0),
        CircleParam::Finite(rat(1, 2)),
        CircleParam::finite(2),
        CircleParam::Infinity,
        CircleParam::finite(-2),
        CircleParam::Finite(rat(-1, 2)),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionReport {
    pub m: usize,
    pub vertices: usize,
    pub edges: usize,
    /// Faces inside the circle.
    pub regions: usize,
    pub general_position: bool,
    pub method: &'static str,
}

/// `V = m + |I|`, `E = m + sum over chords of (1 + crossings on it)`, and
/// regions inside the circle `= E - V + 1`.
pub fn count_regions(arr: &ChordArrangement) -> Result<RegionReport> {
    if arr.m == 0 {
        return Err(Error::InvalidArgument("empty arrangement".into()));
    }
    let vertices = arr.m + arr.interior_points.len();
    let mut per_chord = vec![0usize; arr.chords.len()];
    for p in &arr.interior_points {
        for &c in &p.chords {
            per_chord[c] += 1;
        }
    }
    let edges = arr.m + per_chord.iter().map(|k| 1 + k).sum::<usize>();
    Ok(RegionReport {
        m: arr.m,
        vertices,
        edges,
        regions: edges + 1 - vertices,
        general_position: arr.general_position,
        method: "geometric",
    })
}

#[derive(Debug, Clone)]
struct HalfEdge {
    origin: usize,
    dir: Point,
}

/// Counts regions by tracing every face of the planar map, using the exact
/// rotation order of edges at each vertex. Arcs leave a circle point along
/// its tangent. Independent of the Euler relation.
pub fn count_regions_by_face_walk(arr: &ChordArrangement) -> Result<usize> {
    let m = arr.m;
    if m == 0 {
        return Err(Error::InvalidArgument("empty arrangement".into()));
    }
    if m > FACE_WALK_MAX_M {
        return Err(Error::InvalidArgument(format!(
            "face walk is limited to m <= {FACE_WALK_MAX_M}"
        )));
    }
    let mut coords: Vec<Point> = (0..m).map(|i| arr.xy(i)).collect();
    coords.extend(
        arr.interior_points
            .iter()
            .map(|p| (p.x.clone(), p.y.clone())),
    );

    // half-edges come in twin pairs (2k, 2k + 1)
    let mut half: Vec<HalfEdge> = Vec::new();
    for i in 0..m {
        let j = (i + 1) % m;
        let (xi, yi) = &coords[i];
        let (xj, yj) = &coords[j];
        half.push(HalfEdge {
            origin: i,
            dir: (-yi, xi.clone()),
        });
        half.push(HalfEdge {
            origin: j,
            dir: (yj.clone(), -xj),
        });
    }
    for (c, &(a, b)) in arr.chords.iter().enumerate() {
        let ab = sub(&coords[b], &coords[a]);
        // vertices along the chord, ordered by position from a to b
        let mut along: Vec<(Rational, usize)> = arr
            .interior_points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.chords.contains(&c))
            .map(|(k, p)| {
                let d = sub(&(p.x.clone(), p.y.clone()), &coords[a]);
                (&d.0 * &ab.0 + &d.1 * &ab.1, m + k)
            })
            .collect();
        along.sort();
        let chain: Vec<usize> = std::iter::once(a)
            .chain(along.into_iter().map(|(_, v)| v))
            .chain(std::iter::once(b))
            .collect();
        for w in chain.windows(2) {
            let d = sub(&coords[w[1]], &coords[w[0]]);
            half.push(HalfEdge {
                origin: w[0],
                dir: d.clone(),
            });
            half.push(HalfEdge {
                origin: w[1],
                dir: (-&d.0, -&d.1),
            });
        }
    }

    let upper = |p: &Point| p.1 > Rational::zero() || (p.1.is_zero() && p.0 > Rational::zero());
    let by_angle = |a: &Point, b: &Point| -> Ordering {
        match (upper(a), upper(b)) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => Rational::zero().cmp(&cross(a, b)),
        }
    };
    let mut around: Vec<Vec<usize>> = vec![Vec::new(); coords.len()];
    for (h, e) in half.iter().enumerate() {
        around[e.origin].push(h);
    }
    let mut position = vec![0usize; half.len()];
    for list in &mut around {
        list.sort_by(|&a, &b| by_angle(&half[a].dir, &half[b].dir));
        for (k, &h) in list.iter().enumerate() {
            position[h] = k;
        }
    }
    let next = |h: usize| -> usize {
        let twin = h ^ 1;
        let list = &around[half[twin].origin];
        list[(position[twin] + list.len() - 1) % list.len()]
    };

    let mut seen = vec![false; half.len()];
    let mut faces = 0;
    for start in 0..half.len() {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            h = next(h);
        }
    }
    // the face outside the circle
    Ok(faces - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: Vec<CircleParam>,
    pub regions: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub m: usize,
    pub trials: usize,
    #[serde(serialize_with = "crate::report::big_as_number")]
    pub expected: num_bigint::BigInt,
    pub counts: Vec<usize>,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

/// Counts regions on `trials` distinct generic configurations and compares
/// each with `1 + C(m, 2) + C(m, 4)`.
pub fn verify_against_formula(
    m: usize,
    trials: usize,
    seed: Option<u64>,
    budget: usize,
) -> Result<Verdict> {
    if trials < 1 {
        return Err(Error::InvalidArgument("need at least one trial".into()));
    }
    let expected = moser::regions_binomial(m as u64)?;
    let mut counts = Vec::with_capacity(trials);
    let mut counterexample = None;
    for variant in 0..trials as u64 {
        let placement = match seed {
            Some(seed) => Placement::Seeded { seed, variant },
            None => Placement::Generic { variant },
        };
        let arr = build_arrangement(m, &placement, budget, true)?;
        let report = count_regions(&arr)?;
        if counterexample.is_none() && num_bigint::BigInt::from(report.regions) != expected {
            counterexample = Some(Counterexample {
                params: arr.params(),
                regions: report.regions,
            });
        }
        counts.push(report.regions);
    }
    Ok(Verdict {
        m,
        trials,
        expected,
        counts,
        pass: counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn generic(m: usize, variant: u64) -> ChordArrangement {
        build_arrangement(
            m,
            &Placement::Generic { variant },
            DEFAULT_RETRY_BUDGET,
            false,
        )
        .unwrap()
    }

    fn hexagon() -> ChordArrangement {
        build_arrangement(6, &Placement::Explicit(hexagon_params()), 1, false).unwrap()
    }

    #[test]
    fn points_lie_on_circle() {
        for p in generic(8, 0).points.iter().chain(&hexagon().points) {
            assert_eq!(&p.x * &p.x + &p.y * &p.y, Rational::one());
        }
        assert_eq!(CirclePoint::new(CircleParam::Infinity).x, rat(-1, 1));
        let p = CirclePoint::new(CircleParam::Finite(rat(1, 2)));
        assert_eq!((p.x, p.y), (rat(3, 5), rat(4, 5)));
    }

    #[test]
    fn rejects_duplicates_and_empty() {
        let params = vec![CircleParam::finite(1), CircleParam::finite(1)];
        assert!(matches!(
            ChordArrangement::from_params(params),
            Err(Error::DuplicateParameter(_))
        ));
        assert!(ChordArrangement::from_params(vec![]).is_err());
        assert!(build_arrangement(0, &Placement::Generic { variant: 0 }, 4, false).is_err());
    }

    #[test]
    fn single_point() {
        let arr = generic(1, 0);
        assert_eq!(arr.points.len(), 1);
        assert!(arr.chords.is_empty());
        assert_eq!(count_regions(&arr).unwrap().regions, 1);
        assert_eq!(count_regions_by_face_walk(&arr).unwrap(), 1);
    }

    #[test]
    fn small_generic_counts() {
        assert_eq!(generic(4, 0).interior_points.len(), 1);
        let six = generic(6, 0);
        assert!(six.general_position);
        assert_eq!(six.interior_points.len(), 15);
        assert_eq!(count_regions(&six).unwrap().regions, 31);
    }

    #[test]
    fn hexagon_is_degenerate() {
        let arr = hexagon();
        assert!(!arr.general_position);
        assert_eq!(arr.interior_points.len(), 13);
        let deg = arr.degeneracy.as_ref().unwrap();
        assert_eq!(deg.concurrent.len(), 1);
        assert_eq!(
            (deg.concurrent[0].x.clone(), deg.concurrent[0].y.clone()),
            (Rational::zero(), Rational::zero())
        );
        assert_eq!(deg.concurrent[0].chords.len(), 3);
        let report = count_regions(&arr).unwrap();
        assert_eq!(report.regions, 30);
        assert!(!report.general_position);
        assert_eq!(count_regions_by_face_walk(&arr).unwrap(), 30);
    }

    #[test]
    fn constructed_counts_match_symbolic() {
        for m in 1..=10usize {
            let arr = generic(m, 1);
            let report = count_regions(&arr).unwrap();
            let e = moser::euler_counts(m as u64).unwrap();
            assert_eq!(BigInt::from(report.vertices), e.vertices, "m = {m}");
            assert_eq!(BigInt::from(report.edges), e.edges, "m = {m}");
            assert_eq!(
                BigInt::from(arr.interior_points.len()),
                moser::intersection_count(m as u64).unwrap()
            );
            for p in &arr.interior_points {
                assert!(&p.x * &p.x + &p.y * &p.y < Rational::one());
            }
        }
    }

    #[test]
    fn face_walk_agrees_with_euler() {
        for m in 1..=FACE_WALK_MAX_M {
            for variant in 0..2 {
                let arr = generic(m, variant);
                assert_eq!(
                    count_regions_by_face_walk(&arr).unwrap(),
                    count_regions(&arr).unwrap().regions
                );
            }
            let reg = build_arrangement(m, &Placement::RegularApprox, 1, false).unwrap();
            assert_eq!(
                count_regions_by_face_walk(&reg).unwrap(),
                count_regions(&reg).unwrap().regions
            );
        }
        assert!(count_regions_by_face_walk(&generic(8, 0)).is_err());
    }

    #[test]
    fn regular_approx_keeps_diameters_concurrent() {
        let arr = build_arrangement(6, &Placement::RegularApprox, 1, false).unwrap();
        assert!(!arr.general_position);
        let arr = build_arrangement(5, &Placement::RegularApprox, 1, false).unwrap();
        assert_eq!(arr.points.len(), 5);
    }

    #[test]
    fn parallel_matches_serial() {
        for m in [5, 8, 9] {
            let base = ChordArrangement::from_params(generic_params(m, 2, 0)).unwrap();
            let a = intersect_chords(&base, false);
            let b = intersect_chords(&base, true);
            assert_eq!(
                serde_json::to_string(&a).unwrap(),
                serde_json::to_string(&b).unwrap()
            );
        }
    }

    #[test]
    fn distinct_trials() {
        let a = generic(5, 0).params();
        let b = generic(5, 1).params();
        assert_ne!(a, b);
    }

    #[test]
    fn seeded_placement_is_reproducible() {
        let p = Placement::Seeded {
            seed: 42,
            variant: 0,
        };
        let a = build_arrangement(7, &p, DEFAULT_RETRY_BUDGET, false).unwrap();
        let b = build_arrangement(7, &p, DEFAULT_RETRY_BUDGET, false).unwrap();
        assert_eq!(a, b);
        assert_eq!(count_regions(&a).unwrap().regions, 57);
    }

    #[test]
    fn verify_harness() {
        let v = verify_against_formula(7, 3, None, DEFAULT_RETRY_BUDGET).unwrap();
        assert!(v.pass);
        assert_eq!(v.counts, vec![57, 57, 57]);
        let v = verify_against_formula(1, 1, None, DEFAULT_RETRY_BUDGET).unwrap();
        assert_eq!(v.counts, vec![1]);
        assert!(verify_against_formula(3, 0, None, 4).is_err());
    }

    #[test]
    fn param_parsing() {
        assert_eq!("inf".parse::<CircleParam>().unwrap(), CircleParam::Infinity);
        assert_eq!(
            "-1/2".parse::<CircleParam>().unwrap(),
            CircleParam::Finite(rat(-1, 2))
        );
        assert!(CircleParam::finite(1000) < CircleParam::Infinity);
    }
}
