//! Combinatorial (1,1)-diagrams.
//!
//! A diagram is stored as three arc matchings on `p` slots: nested arcs
//! hugging the bottom boundary of the cut annulus, nested arcs hugging the
//! top, and through strands joining a bottom slot to a top slot.  Decoding
//! turns the four integers `(p, q, r, s)` into such a matching; validation
//! checks that the matching describes a single embedded curve meeting the
//! horizontal curve with algebraic intersection number ±1.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Four-parameter description `K(p, q, r, s)` of a (1,1)-diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RasmussenParams {
    /// Number of crossings between the two curves.
    pub p: i64,
    /// Number of arcs in each rainbow.
    pub q: i64,
    /// Cyclic position of the top rainbow.
    pub r: i64,
    /// Twist parameter; the decoder accepts `s` with
    /// `u = s - (2q - r)` in `[0, p - 2q)`.
    pub s: i64,
    /// Family index when produced by [`family_params`].
    pub n: Option<u32>,
}

impl RasmussenParams {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Self {
        RasmussenParams { p, q, r, s, n: None }
    }

    /// Through-strand cyclic offset `u = s - (2q - r)`.
    pub fn offset(&self) -> i64 {
        self.s - (2 * self.q - self.r)
    }
}

/// Parameters of the twist family member `K_n`:
/// `K(64n+31, 24n+12, 16n+6, 32n+18)`.
pub fn family_params(n: u32) -> RasmussenParams {
    let n64 = n as i64;
    RasmussenParams {
        p: 64 * n64 + 31,
        q: 24 * n64 + 12,
        r: 16 * n64 + 6,
        s: 32 * n64 + 18,
        n: Some(n),
    }
}

/// Which boundary of the cut annulus an arc end sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Bottom,
    Top,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Bottom => Side::Top,
            Side::Top => Side::Bottom,
        }
    }
}

/// Symbolic basepoint position; concrete coordinates are assigned by the
/// geometry layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Anchor {
    /// Under the innermost bottom arc.
    BottomRainbowCenter,
    /// Above the innermost top arc.
    TopRainbowCenter,
    /// In the vertical gap at cyclic position 0 (used when there are no
    /// rainbow arcs).
    GapColumn,
}

/// A validated combinatorial (1,1)-diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneOneDiagram {
    p: usize,
    bottom: Vec<(usize, usize)>,
    top: Vec<(usize, usize)>,
    /// Ordered pairs (bottom slot, top slot).
    through: Vec<(usize, usize)>,
    z_anchor: Anchor,
    w_anchor: Anchor,
}

/// Outcome of the traversal checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub cycle_length: usize,
    pub algebraic_intersection: i64,
    pub failures: Vec<ValidationFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ValidationFailure {
    NotSingleCycle { cycle_length: usize, expected: usize },
    IntersectionNotUnit { value: i64 },
}

#[derive(Debug, Error)]
pub enum DiagramError {
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("rainbow pairs interleave on the {side:?} boundary: {a:?} and {b:?}")]
    CrossingArcs {
        side: Side,
        a: (usize, usize),
        b: (usize, usize),
    },
    #[error("slot {slot} is used {count} times as a {side:?} arc end")]
    Coverage { side: Side, slot: usize, count: usize },
    #[error("diagram fails validation: {0:?}")]
    Validity(ValidationReport),
}

/// 1-based cyclic slot reduction.
fn sigma(m: i64, p: i64) -> usize {
    ((m - 1).rem_euclid(p) + 1) as usize
}

/// Decode four parameters into the normal-form diagram.
///
/// Bottom arcs pair `j` with `2q+1-j`; top arcs pair `sigma(r+1+j)` with
/// `sigma(r+2+2q-j)`; through strands match the remaining bottom slots in
/// cyclic order to the remaining top slots listed cyclically from
/// `sigma(r+2q+2)`, rotated by `r + u` where `u = s - (2q - r)`.  The
/// rotation by `r` is pinned by the published grading lists of the twist
/// family; `u` must lie in `[0, p - 2q)`.
pub fn decode(params: RasmussenParams) -> Result<OneOneDiagram, DiagramError> {
    let RasmussenParams { p, q, r, s, .. } = params;
    if p <= 0 {
        return Err(DiagramError::ParameterRange(format!("p = {p} must be positive")));
    }
    if q < 0 || 2 * q >= p {
        return Err(DiagramError::ParameterRange(format!(
            "q = {q} must satisfy 0 <= 2q < p = {p}"
        )));
    }
    if r < 0 || r >= p {
        return Err(DiagramError::ParameterRange(format!(
            "r = {r} must satisfy 0 <= r < p = {p}"
        )));
    }
    if s < 0 {
        return Err(DiagramError::ParameterRange(format!("s = {s} must be non-negative")));
    }
    let u = params.offset();
    if u < 0 || u >= p - 2 * q {
        return Err(DiagramError::ParameterRange(format!(
            "u = s - (2q - r) = {u} must lie in [0, p - 2q) = [0, {})",
            p - 2 * q
        )));
    }

    let bottom: Vec<(usize, usize)> = (1..=q).map(|j| (j as usize, (2 * q + 1 - j) as usize)).collect();
    let top: Vec<(usize, usize)> = (1..=q)
        .map(|j| (sigma(r + 1 + j, p), sigma(r + 2 + 2 * q - j, p)))
        .collect();
    let m = p - 2 * q;
    let through: Vec<(usize, usize)> = (1..=m)
        .map(|k| {
            let slot = (k - 1 + r + u).rem_euclid(m);
            ((2 * q + k) as usize, sigma(r + 2 * q + 2 + slot, p))
        })
        .collect();

    let (z_anchor, w_anchor) = if q == 0 {
        (Anchor::GapColumn, Anchor::GapColumn)
    } else {
        (Anchor::BottomRainbowCenter, Anchor::TopRainbowCenter)
    };

    build_diagram(p as usize, bottom, top, through, z_anchor, w_anchor)
}

/// Assemble a diagram from explicit matchings, running all structural checks.
pub fn from_matchings(
    bottom: Vec<(usize, usize)>,
    top: Vec<(usize, usize)>,
    through: Vec<(usize, usize)>,
    anchors: Option<(Anchor, Anchor)>,
) -> Result<OneOneDiagram, DiagramError> {
    let p = 2 * bottom.len() + through.len();
    let (z_anchor, w_anchor) = anchors.unwrap_or(if bottom.is_empty() {
        (Anchor::GapColumn, Anchor::GapColumn)
    } else {
        (Anchor::BottomRainbowCenter, Anchor::TopRainbowCenter)
    });
    build_diagram(p, bottom, top, through, z_anchor, w_anchor)
}

fn build_diagram(
    p: usize,
    bottom: Vec<(usize, usize)>,
    top: Vec<(usize, usize)>,
    through: Vec<(usize, usize)>,
    z_anchor: Anchor,
    w_anchor: Anchor,
) -> Result<OneOneDiagram, DiagramError> {
    check_coverage(p, Side::Bottom, bottom.iter().flat_map(|&(a, b)| [a, b]).chain(through.iter().map(|&(b, _)| b)))?;
    check_coverage(p, Side::Top, top.iter().flat_map(|&(a, b)| [a, b]).chain(through.iter().map(|&(_, t)| t)))?;
    check_noncrossing(p, Side::Bottom, &bottom)?;
    check_noncrossing(p, Side::Top, &top)?;

    let d = OneOneDiagram { p, bottom, top, through, z_anchor, w_anchor };
    let report = validate(&d);
    if !report.ok {
        return Err(DiagramError::Validity(report));
    }
    Ok(d)
}

fn check_coverage(
    p: usize,
    side: Side,
    ends: impl Iterator<Item = usize>,
) -> Result<(), DiagramError> {
    let mut seen = vec![0usize; p + 1];
    for e in ends {
        if e < 1 || e > p {
            return Err(DiagramError::ParameterRange(format!(
                "{side:?} arc end {e} outside 1..={p}"
            )));
        }
        seen[e] += 1;
    }
    for slot in 1..=p {
        if seen[slot] != 1 {
            return Err(DiagramError::Coverage { side, slot, count: seen[slot] });
        }
    }
    Ok(())
}

/// Two chords of a cycle cross iff their endpoints alternate around it.
fn check_noncrossing(p: usize, side: Side, pairs: &[(usize, usize)]) -> Result<(), DiagramError> {
    let between = |a: usize, b: usize, x: usize| -> bool {
        // x strictly inside the cyclic interval (a, b)
        if a < b {
            a < x && x < b
        } else {
            x > a || x < b
        }
    };
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            let c_in = between(a, b, c);
            let d_in = between(a, b, d);
            if c_in != d_in {
                return Err(DiagramError::CrossingArcs { side, a: (a, b), b: (c, d) });
            }
        }
    }
    let _ = p;
    Ok(())
}

impl OneOneDiagram {
    pub fn p(&self) -> usize {
        self.p
    }
    pub fn bottom_pairs(&self) -> &[(usize, usize)] {
        &self.bottom
    }
    pub fn top_pairs(&self) -> &[(usize, usize)] {
        &self.top
    }
    pub fn through_pairs(&self) -> &[(usize, usize)] {
        &self.through
    }
    pub fn z_anchor(&self) -> Anchor {
        self.z_anchor
    }
    pub fn w_anchor(&self) -> Anchor {
        self.w_anchor
    }

    /// For each slot, the other end of the arc attached at its `side` end.
    pub(crate) fn arc_links(&self) -> (Vec<(Side, usize)>, Vec<(Side, usize)>) {
        let p = self.p;
        let mut from_bottom = vec![(Side::Bottom, 0usize); p + 1];
        let mut from_top = vec![(Side::Top, 0usize); p + 1];
        for &(a, b) in &self.bottom {
            from_bottom[a] = (Side::Bottom, b);
            from_bottom[b] = (Side::Bottom, a);
        }
        for &(a, b) in &self.top {
            from_top[a] = (Side::Top, b);
            from_top[b] = (Side::Top, a);
        }
        for &(b, t) in &self.through {
            from_bottom[b] = (Side::Top, t);
            from_top[t] = (Side::Bottom, b);
        }
        (from_bottom, from_top)
    }
}

/// Traverse the curve and report cycle length and algebraic intersection.
///
/// The traversal starts at slot 1 oriented so the curve leaves through the
/// bottom end of slot 1; the sign of a crossing is `+1` when the curve
/// enters it through its top end and `-1` through its bottom end.
pub fn validate(d: &OneOneDiagram) -> ValidationReport {
    let (visits, _) = traverse(d);
    let cycle_length = visits.len();
    let algebraic_intersection = visits
        .iter()
        .map(|&(_, side)| match side {
            Side::Top => 1,
            Side::Bottom => -1,
        })
        .sum::<i64>();
    let mut failures = Vec::new();
    if cycle_length != d.p {
        failures.push(ValidationFailure::NotSingleCycle { cycle_length, expected: d.p });
    }
    if algebraic_intersection.abs() != 1 {
        failures.push(ValidationFailure::IntersectionNotUnit { value: algebraic_intersection });
    }
    ValidationReport { ok: failures.is_empty(), cycle_length, algebraic_intersection, failures }
}

/// Raw traversal from the state "exiting slot 1 through its bottom end".
///
/// `visits[k]` is the k-th arrival (slot, entry side); `arcs[k]` is the arc
/// traversed into it, as (end left from, end arrived at).  For a valid
/// diagram the final visit is `(1, Top)`.
#[allow(clippy::type_complexity)]
pub(crate) fn traverse(d: &OneOneDiagram) -> (Vec<(usize, Side)>, Vec<((Side, usize), (Side, usize))>) {
    let (from_bottom, from_top) = d.arc_links();
    let mut visits = Vec::with_capacity(d.p);
    let mut arcs = Vec::with_capacity(d.p);
    // Exit slot 1 through its bottom end.
    let mut exit: (Side, usize) = (Side::Bottom, 1);
    loop {
        let arrive = match exit.0 {
            Side::Bottom => from_bottom[exit.1],
            Side::Top => from_top[exit.1],
        };
        arcs.push((exit, arrive));
        visits.push((arrive.1, arrive.0));
        // The orbit through the start state closes exactly at the arrival
        // that re-enters slot 1 from the top.
        if arrive == (Side::Top, 1) || visits.len() > 2 * d.p {
            break;
        }
        exit = (arrive.0.opposite(), arrive.1);
    }
    (visits, arcs)
}

/// The order of generators along the curve starting at slot 1, each tagged
/// with the side through which the curve enters the crossing.
pub fn beta_cycle(d: &OneOneDiagram) -> Result<Vec<(usize, Side)>, DiagramError> {
    let report = validate(d);
    if !report.ok {
        return Err(DiagramError::Validity(report));
    }
    let mut visits = traverse(d).0;
    visits.rotate_right(1);
    Ok(visits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_params_values() {
        assert_eq!(family_params(0), RasmussenParams { p: 31, q: 12, r: 6, s: 18, n: Some(0) });
        assert_eq!(family_params(1), RasmussenParams { p: 95, q: 36, r: 22, s: 50, n: Some(1) });
        assert_eq!(family_params(2), RasmussenParams { p: 159, q: 60, r: 38, s: 82, n: Some(2) });
    }

    #[test]
    fn decode_unknot() {
        let d = decode(RasmussenParams::new(1, 0, 0, 0)).unwrap();
        assert!(d.bottom_pairs().is_empty());
        assert!(d.top_pairs().is_empty());
        assert_eq!(d.through_pairs(), &[(1, 1)]);
        assert_eq!(d.z_anchor(), Anchor::GapColumn);
    }

    #[test]
    fn decode_family_zero() {
        let d = decode(family_params(0)).unwrap();
        let bottom: Vec<_> = (1..=12).map(|j| (j, 25 - j)).collect();
        let top: Vec<_> = (1..=12).map(|j| (7 + j, 32 - j)).collect();
        let through: Vec<_> = (1..=7).map(|k| (24 + k, if k == 1 { 7 } else { k - 1 })).collect();
        assert_eq!(d.bottom_pairs(), &bottom[..]);
        assert_eq!(d.top_pairs(), &top[..]);
        assert_eq!(d.through_pairs(), &through[..]);
        assert_eq!(d.z_anchor(), Anchor::BottomRainbowCenter);
        assert_eq!(d.w_anchor(), Anchor::TopRainbowCenter);
    }

    #[test]
    fn decode_small() {
        let d = decode(RasmussenParams::new(5, 2, 0, 4)).unwrap();
        assert_eq!(d.bottom_pairs(), &[(1, 4), (2, 3)]);
        assert_eq!(d.top_pairs(), &[(2, 5), (3, 4)]);
        assert_eq!(d.through_pairs(), &[(5, 1)]);
    }

    #[test]
    fn decode_rejects_bad_offset() {
        assert!(matches!(
            decode(RasmussenParams::new(31, 12, 6, 17)),
            Err(DiagramError::ParameterRange(_))
        ));
        assert!(matches!(
            decode(RasmussenParams::new(4, 2, 0, 4)),
            Err(DiagramError::ParameterRange(_))
        ));
    }

    #[test]
    fn validate_family_zero() {
        let d = decode(family_params(0)).unwrap();
        let report = validate(&d);
        assert!(report.ok);
        assert_eq!(report.cycle_length, 31);
        assert_eq!(report.algebraic_intersection, 1);
    }

    #[test]
    fn validate_unknot() {
        let d = decode(RasmussenParams::new(1, 0, 0, 0)).unwrap();
        let report = validate(&d);
        assert!(report.ok);
        assert_eq!(report.cycle_length, 1);
        assert_eq!(report.algebraic_intersection.abs(), 1);
    }

    #[test]
    fn from_matchings_intersection_zero() {
        let err = from_matchings(vec![(1, 2)], vec![(1, 2)], vec![], None).unwrap_err();
        match err {
            DiagramError::Validity(report) => {
                assert_eq!(report.cycle_length, 2);
                assert_eq!(report.algebraic_intersection, 0);
            }
            other => panic!("expected validity error, got {other:?}"),
        }
    }

    #[test]
    fn from_matchings_roundtrip() {
        let d = decode(family_params(0)).unwrap();
        let d2 = from_matchings(
            d.bottom_pairs().to_vec(),
            d.top_pairs().to_vec(),
            d.through_pairs().to_vec(),
            Some((d.z_anchor(), d.w_anchor())),
        )
        .unwrap();
        assert_eq!(d, d2);
    }

    #[test]
    fn from_matchings_crossing_arcs() {
        let err = from_matchings(
            vec![(1, 3), (2, 4)],
            vec![(1, 2), (3, 4)],
            vec![],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, DiagramError::CrossingArcs { side: Side::Bottom, .. }));
    }

    #[test]
    fn beta_cycle_small() {
        let d = decode(RasmussenParams::new(5, 2, 0, 4)).unwrap();
        let cycle = beta_cycle(&d).unwrap();
        let slots: Vec<usize> = cycle.iter().map(|&(s, _)| s).collect();
        assert_eq!(slots, vec![1, 4, 3, 2, 5]);
    }

    #[test]
    fn beta_cycle_unknot() {
        let d = decode(RasmussenParams::new(1, 0, 0, 0)).unwrap();
        let cycle = beta_cycle(&d).unwrap();
        assert_eq!(cycle.len(), 1);
        assert_eq!(cycle[0].0, 1);
    }

    #[test]
    fn beta_cycle_family_zero() {
        let d = decode(family_params(0)).unwrap();
        let cycle = beta_cycle(&d).unwrap();
        let slots: Vec<usize> = cycle.iter().map(|&(s, _)| s).collect();
        assert_eq!(
            slots,
            vec![
                1, 24, 15, 10, 29, 4, 21, 18, 7, 25, 14, 11, 28, 3, 22, 17, 8, 31, 6, 19, 20, 5,
                30, 9, 16, 23, 2, 27, 12, 13, 26
            ]
        );
    }

    #[test]
    fn family_valid_up_to_50() {
        for n in 0..=50 {
            let params = family_params(n);
            let d = decode(params).unwrap();
            let report = validate(&d);
            assert!(report.ok, "family {n} invalid: {report:?}");
            assert_eq!(report.cycle_length as i64, params.p);
            assert_eq!(report.algebraic_intersection, 1);
        }
    }
}
