//! Exact piecewise-linear realization in the fundamental domain.
//!
//! The torus is `R^2` modulo the lattice spanned by `(p, 0)` and `(0, 1)`;
//! the alpha curve is the line `y = 0` and slot `i` sits at `x = i - 1/2`.
//! Every coordinate is an integer multiple of `1/L` for a per-diagram
//! denominator `L`, so all computations run on scaled integers with `i128`
//! intermediates — no floating point anywhere.

use crate::diagram::{traverse, validate, Anchor, OneOneDiagram, Side};
use num_rational::Rational64;
use thiserror::Error;

pub type ScaledPoint = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ArcKind {
    BottomArch,
    TopArch,
    Through,
}

/// One arc of the realized curve inside the cut annulus.
///
/// `pts` runs from the `ends.0` endpoint to the `ends.1` endpoint; the
/// x-coordinates are a chosen lift and may leave `[0, p)`.
#[derive(Debug, Clone)]
pub struct Arc {
    pub kind: ArcKind,
    pub pts: Vec<ScaledPoint>,
    pub ends: ((Side, usize), (Side, usize)),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasepointKind {
    Z,
    W,
}

/// Exact PL model of a diagram.
#[derive(Debug, Clone)]
pub struct Realization {
    p: usize,
    scale: i64,
    arcs: Vec<Arc>,
    /// arc index attached at each slot's bottom / top end (1-based slots).
    bottom_attach: Vec<usize>,
    top_attach: Vec<usize>,
    z: ScaledPoint,
    w: ScaledPoint,
    /// common through-strand drift used for the straight segments
    max_drift: i64,
}

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("diagram fails validation and cannot be realized")]
    InvalidDiagram,
    #[error("diagram is outside the supported normal form: {0}")]
    RealizationFailure(String),
    #[error("traced lift does not close up to a deck translate")]
    TraceFailure,
}

fn rational(num: i64, den: i64) -> Rational64 {
    Rational64::new(num, den)
}

impl Realization {
    pub fn p(&self) -> usize {
        self.p
    }

    /// Common denominator: scaled coordinates divided by this are the
    /// rational coordinates in the `[0, p] x [0, 1]` fundamental domain.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_at(&self, side: Side, slot: usize) -> &Arc {
        let idx = match side {
            Side::Bottom => self.bottom_attach[slot],
            Side::Top => self.top_attach[slot],
        };
        &self.arcs[idx]
    }

    pub fn z_scaled(&self) -> ScaledPoint {
        self.z
    }

    pub fn w_scaled(&self) -> ScaledPoint {
        self.w
    }

    pub fn z_point(&self) -> (Rational64, Rational64) {
        (rational(self.z.0, self.scale), rational(self.z.1, self.scale))
    }

    pub fn w_point(&self) -> (Rational64, Rational64) {
        (rational(self.w.0, self.scale), rational(self.w.1, self.scale))
    }

    /// Horizontal deck step in scaled units.
    pub fn deck_x(&self) -> i64 {
        self.p as i64 * self.scale
    }

    /// Vertical deck step in scaled units.
    pub fn deck_y(&self) -> i64 {
        self.scale
    }

    pub fn max_drift(&self) -> i64 {
        self.max_drift
    }
}

/// Minimal-absolute-value representative of `t - b` mod `p`, ties positive.
pub fn drift(b: usize, t: usize, p: usize) -> i64 {
    let p = p as i64;
    let d = (t as i64 - b as i64).rem_euclid(p);
    if 2 * d > p {
        d - p
    } else {
        d
    }
}

/// Integer drifts for the through strands.
///
/// Straight strands between lifted endpoints are pairwise disjoint exactly
/// when the lift assignment preserves the cyclic order of the endpoints, so
/// the drifts are determined up to a simultaneous shift by `p`; the shift is
/// chosen to minimize the largest absolute drift, ties toward positive.
pub(crate) fn strand_drifts(
    through: &[(usize, usize)],
    p: usize,
) -> Result<Vec<i64>, GeometryError> {
    let pi = p as i64;
    if through.is_empty() {
        return Ok(Vec::new());
    }
    // Sort by bottom slot; assign each top end the smallest lift keeping the
    // lifted tops strictly increasing.
    let mut order: Vec<usize> = (0..through.len()).collect();
    order.sort_by_key(|&i| through[i].0);
    let mut lifted: Vec<i64> = Vec::with_capacity(order.len());
    let mut prev: Option<i64> = None;
    for &i in &order {
        let t = through[i].1 as i64;
        let lift = match prev {
            None => t,
            Some(pv) => t + ((pv - t).div_euclid(pi) + 1) * pi,
        };
        prev = Some(lift);
        lifted.push(lift);
    }
    if lifted.len() > 1 && *lifted.last().unwrap() >= lifted[0] + pi {
        return Err(GeometryError::RealizationFailure(
            "through strands are not cyclically order-preserving".into(),
        ));
    }
    // Raw drifts before the global shift.
    let raw: Vec<i64> = order
        .iter()
        .zip(&lifted)
        .map(|(&i, &lift)| lift - through[i].0 as i64)
        .collect();
    let best_shift = (-2 - raw.iter().max().unwrap() / pi..=2 - raw.iter().min().unwrap() / pi)
        .min_by_key(|&c| {
            let mx = raw.iter().map(|&d| (d + c * pi).abs()).max().unwrap();
            // ties toward positive drift
            (mx, -(raw[0] + c * pi))
        })
        .unwrap();
    let mut out = vec![0i64; through.len()];
    for (&i, &d) in order.iter().zip(&raw) {
        out[i] = d + best_shift * pi;
    }
    Ok(out)
}

/// Laid-out arch: a pair drawn over the virtual interval `[va, vb]` at
/// nesting height index `k` (innermost 1).
struct ArchLayout {
    pair: (usize, usize),
    va: usize,
    vb: usize,
    k: usize,
}

/// Place the arches of one side.  `cut` must be an arc end not matched by
/// the pairs (a through-strand end); every pair is drawn over the cyclic
/// interval not containing the cut.
fn layout_arches(
    pairs: &[(usize, usize)],
    strand_ends: &[usize],
    p: usize,
    side: Side,
) -> Result<Vec<ArchLayout>, GeometryError> {
    if pairs.is_empty() {
        return Ok(Vec::new());
    }
    let cut = *strand_ends.first().ok_or_else(|| {
        GeometryError::RealizationFailure("rainbow with no through strand to cut at".into())
    })?;
    // Unroll the circle at the cut: slot s gets virtual coordinate in
    // (cut, cut + p].
    let virt = |s: usize| -> usize {
        if s > cut {
            s
        } else {
            s + p
        }
    };
    let mut intervals: Vec<ArchLayout> = pairs
        .iter()
        .map(|&(a, b)| {
            let (va, vb) = (virt(a).min(virt(b)), virt(a).max(virt(b)));
            ArchLayout { pair: (a, b), va, vb, k: 0 }
        })
        .collect();
    // No strand end may fall strictly inside a drawn interval.
    for se in strand_ends {
        let v = virt(*se);
        for arch in &intervals {
            if arch.va < v && v < arch.vb {
                return Err(GeometryError::RealizationFailure(format!(
                    "{side:?} arch {:?} would cover a through-strand end at slot {se}",
                    arch.pair
                )));
            }
        }
    }
    // Intervals must be laminar (nested or disjoint).
    for i in 0..intervals.len() {
        for j in i + 1..intervals.len() {
            let (a, b) = (&intervals[i], &intervals[j]);
            let nested = (a.va < b.va && b.vb < a.vb) || (b.va < a.va && a.vb < b.vb);
            let disjoint = a.vb < b.va || b.vb < a.va;
            if !(nested || disjoint) {
                return Err(GeometryError::RealizationFailure(format!(
                    "{side:?} arches {:?} and {:?} interleave",
                    a.pair, b.pair
                )));
            }
        }
    }
    // Height index = height of the nesting subtree (innermost arches 1).
    intervals.sort_by_key(|a| a.vb - a.va);
    for i in 0..intervals.len() {
        let mut k = 1;
        for j in 0..i {
            if intervals[i].va < intervals[j].va && intervals[j].vb < intervals[i].vb {
                k = k.max(intervals[j].k + 1);
            }
        }
        intervals[i].k = k;
    }
    Ok(intervals)
}

/// Realize a valid diagram with the canonical drift choice.
pub fn realize(d: &OneOneDiagram) -> Result<Realization, GeometryError> {
    realize_with_drift_shift(d, 0)
}

/// Realize with every through-strand drift shifted by `shift` periods.
/// Shifting all drifts by a full period yields a diagram of the same knot;
/// the invariant pipeline must be insensitive to it.
pub fn realize_with_drift_shift(
    d: &OneOneDiagram,
    shift: i64,
) -> Result<Realization, GeometryError> {
    if !validate(d).ok {
        return Err(GeometryError::InvalidDiagram);
    }
    let p = d.p();
    let pi = p as i64;
    let q = d.bottom_pairs().len() as i64;

    let drifts: Vec<i64> = strand_drifts(d.through_pairs(), p)?
        .into_iter()
        .map(|dr| dr + shift * pi)
        .collect();
    let max_drift = drifts.iter().map(|d| d.abs()).max().unwrap_or(0).max(1);

    // Arch height k/(4(q+1)D) scaled by L = 32(q+1)D is exactly 8k; the
    // divisor D = max |drift| keeps every arch below the lowest pass of any
    // wrapped through strand (clearance 1/D).
    let scale = 32 * (q + 1) * max_drift;
    let slot_x = |slot_virtual: usize| -> i64 { (2 * slot_virtual as i64 - 1) * scale / 2 };

    let mut arcs: Vec<Arc> = Vec::with_capacity(p);
    let mut bottom_attach = vec![usize::MAX; p + 1];
    let mut top_attach = vec![usize::MAX; p + 1];

    let bottom_strand_ends: Vec<usize> = d.through_pairs().iter().map(|&(b, _)| b).collect();
    let top_strand_ends: Vec<usize> = d.through_pairs().iter().map(|&(_, t)| t).collect();

    let bottom_layout = layout_arches(d.bottom_pairs(), &bottom_strand_ends, p, Side::Bottom)?;
    for arch in &bottom_layout {
        let (xa, xb) = (slot_x(arch.va), slot_x(arch.vb));
        let h = 8 * arch.k as i64;
        let idx = arcs.len();
        arcs.push(Arc {
            kind: ArcKind::BottomArch,
            pts: vec![(xa, 0), (xa, h), (xb, h), (xb, 0)],
            ends: ((Side::Bottom, arch.pair.0), (Side::Bottom, arch.pair.1)),
        });
        bottom_attach[arch.pair.0] = idx;
        bottom_attach[arch.pair.1] = idx;
    }
    let top_layout = layout_arches(d.top_pairs(), &top_strand_ends, p, Side::Top)?;
    for arch in &top_layout {
        let (xa, xb) = (slot_x(arch.va), slot_x(arch.vb));
        let h = scale - 8 * arch.k as i64;
        let idx = arcs.len();
        arcs.push(Arc {
            kind: ArcKind::TopArch,
            pts: vec![(xa, scale), (xa, h), (xb, h), (xb, scale)],
            ends: ((Side::Top, arch.pair.0), (Side::Top, arch.pair.1)),
        });
        top_attach[arch.pair.0] = idx;
        top_attach[arch.pair.1] = idx;
    }
    for (&(b, t), &dr) in d.through_pairs().iter().zip(&drifts) {
        let xb = slot_x(b);
        let idx = arcs.len();
        arcs.push(Arc {
            kind: ArcKind::Through,
            pts: vec![(xb, 0), (xb + dr * scale, scale)],
            ends: ((Side::Bottom, b), (Side::Top, t)),
        });
        bottom_attach[b] = idx;
        top_attach[t] = idx;
    }

    // Basepoints.  z sits a hair above the alpha curve under the innermost
    // bottom arch (or in the gap column when there is no rainbow); w is the
    // mirror image near the top boundary.
    let z = match d.z_anchor() {
        Anchor::GapColumn => (0, 1),
        Anchor::BottomRainbowCenter => {
            let inner = bottom_layout
                .iter()
                .max_by_key(|a| (a.k, std::cmp::Reverse(a.va)))
                .ok_or_else(|| {
                    GeometryError::RealizationFailure("z anchored to an empty bottom rainbow".into())
                })?;
            ((slot_x(inner.va) + slot_x(inner.vb)) / 2, 1)
        }
        Anchor::TopRainbowCenter => {
            return Err(GeometryError::RealizationFailure(
                "z must sit on the bottom side".into(),
            ))
        }
    };
    let w = match d.w_anchor() {
        Anchor::GapColumn => (0, scale - 1),
        Anchor::TopRainbowCenter => {
            let inner = top_layout
                .iter()
                .max_by_key(|a| (a.k, std::cmp::Reverse(a.va)))
                .ok_or_else(|| {
                    GeometryError::RealizationFailure("w anchored to an empty top rainbow".into())
                })?;
            ((slot_x(inner.va) + slot_x(inner.vb)) / 2, scale - 1)
        }
        Anchor::BottomRainbowCenter => {
            return Err(GeometryError::RealizationFailure(
                "w must sit on the top side".into(),
            ))
        }
    };
    let z = (z.0.rem_euclid(pi * scale), z.1);
    let w = (w.0.rem_euclid(pi * scale), w.1);

    let real = Realization { p, scale, arcs, bottom_attach, top_attach, z, w, max_drift };
    real.check_disjoint()?;
    Ok(real)
}

impl Realization {
    /// Exact pairwise disjointness of all arcs and basepoints on the torus:
    /// every pair is tested under the horizontal translates where the
    /// x-extents overlap.
    fn check_disjoint(&self) -> Result<(), GeometryError> {
        let period = self.deck_x();
        let extent = |arc: &Arc| -> (i64, i64) {
            let xs = arc.pts.iter().map(|p| p.0);
            (xs.clone().min().unwrap(), xs.max().unwrap())
        };
        for i in 0..self.arcs.len() {
            for j in i..self.arcs.len() {
                let (alo, ahi) = extent(&self.arcs[i]);
                let (blo, bhi) = extent(&self.arcs[j]);
                // shifts k with [blo, bhi] + k*period meeting [alo, ahi]
                let kmin = (alo - bhi).div_euclid(period);
                let kmax = (ahi - blo).div_euclid(period) + 1;
                for k in kmin..=kmax {
                    if i == j && k == 0 {
                        continue;
                    }
                    let off = k * period;
                    if arcs_touch(&self.arcs[i].pts, &self.arcs[j].pts, off) {
                        return Err(GeometryError::RealizationFailure(format!(
                            "arcs {i} and {j} (shifted {k} periods) intersect"
                        )));
                    }
                }
            }
        }
        for base in [self.z, self.w] {
            for arc in &self.arcs {
                let (alo, ahi) = extent(arc);
                let kmin = (alo - base.0).div_euclid(period);
                let kmax = (ahi - base.0).div_euclid(period) + 1;
                for k in kmin..=kmax {
                    let pt = (base.0 + k * period, base.1);
                    for seg in arc.pts.windows(2) {
                        if point_on_segment(pt, seg[0], seg[1]) {
                            return Err(GeometryError::RealizationFailure(
                                "basepoint lies on an arc".into(),
                            ));
                        }
                    }
                }
            }
        }
        if self.z == self.w {
            return Err(GeometryError::RealizationFailure("basepoints coincide".into()));
        }
        Ok(())
    }
}

fn cross(o: ScaledPoint, a: ScaledPoint, b: ScaledPoint) -> i128 {
    let (ox, oy) = (o.0 as i128, o.1 as i128);
    (a.0 as i128 - ox) * (b.1 as i128 - oy) - (a.1 as i128 - oy) * (b.0 as i128 - ox)
}

pub fn point_on_segment(p: ScaledPoint, a: ScaledPoint, b: ScaledPoint) -> bool {
    if cross(a, b, p) != 0 {
        return false;
    }
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Closed-segment intersection test.
pub(crate) fn segments_intersect(
    a: ScaledPoint,
    b: ScaledPoint,
    c: ScaledPoint,
    d: ScaledPoint,
) -> bool {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && point_on_segment(a, c, d))
        || (d2 == 0 && point_on_segment(b, c, d))
        || (d3 == 0 && point_on_segment(c, a, b))
        || (d4 == 0 && point_on_segment(d, a, b))
}

fn arcs_touch(a: &[ScaledPoint], b: &[ScaledPoint], b_offset: i64) -> bool {
    for sa in a.windows(2) {
        for sb in b.windows(2) {
            let c = (sb[0].0 + b_offset, sb[0].1);
            let d = (sb[1].0 + b_offset, sb[1].1);
            if segments_intersect(sa[0], sa[1], c, d) {
                return true;
            }
        }
    }
    false
}

/// One period of the traced lift of the curve.
#[derive(Debug, Clone)]
pub struct Trace {
    /// Crossing `j` of the chunk (0 = slot 1 at `(L/2, 0)`).
    pub crossings: Vec<TraceCrossing>,
    /// `chunk_arcs[j]` joins crossing `j` to crossing `j+1`, oriented along
    /// the traversal, in the lift's coordinates.
    pub chunk_arcs: Vec<Vec<ScaledPoint>>,
    /// Horizontal winding: the period vector is `(h*p, v)` (unscaled).
    pub h: i64,
    /// Vertical winding, `+1` or `-1`.
    pub v: i64,
}

#[derive(Debug, Clone, Copy)]
pub struct TraceCrossing {
    pub generator: usize,
    pub pos: ScaledPoint,
}

/// Trace one lift of the curve through the universal cover.
pub fn trace(real: &Realization, d: &OneOneDiagram) -> Result<Trace, GeometryError> {
    let (visits, arcs) = traverse(d);
    if visits.len() != real.p() || visits.last().map(|&(s, _)| s) != Some(1) {
        return Err(GeometryError::TraceFailure);
    }
    let start = (real.scale() / 2, 0);
    let mut crossings = vec![TraceCrossing { generator: 1, pos: start }];
    let mut chunk_arcs = Vec::with_capacity(real.p());
    let mut cur = start;
    for (k, &(exit_end, arrive_end)) in arcs.iter().enumerate() {
        let arc = real.arc_at(exit_end.0, exit_end.1);
        // Orient the stored polyline from exit_end to arrive_end.
        let mut pts: Vec<ScaledPoint> = if arc.ends.0 == exit_end && arc.ends.1 == arrive_end {
            arc.pts.clone()
        } else if arc.ends.1 == exit_end && arc.ends.0 == arrive_end {
            arc.pts.iter().rev().cloned().collect()
        } else {
            return Err(GeometryError::TraceFailure);
        };
        // Translate so the arc continues from the current point; the offset
        // must be a deck vector.
        let off = (cur.0 - pts[0].0, cur.1 - pts[0].1);
        if off.0.rem_euclid(real.deck_x()) != 0 || off.1.rem_euclid(real.deck_y()) != 0 {
            return Err(GeometryError::TraceFailure);
        }
        for p in &mut pts {
            p.0 += off.0;
            p.1 += off.1;
        }
        cur = *pts.last().unwrap();
        crossings.push(TraceCrossing { generator: visits[k].0, pos: cur });
        chunk_arcs.push(pts);
    }
    let end = crossings.pop().unwrap();
    if end.generator != 1 {
        return Err(GeometryError::TraceFailure);
    }
    let dx = end.pos.0 - start.0;
    let dy = end.pos.1 - start.1;
    if dx.rem_euclid(real.deck_x()) != 0 || dy.abs() != real.deck_y() {
        return Err(GeometryError::TraceFailure);
    }
    Ok(Trace {
        crossings,
        chunk_arcs,
        h: dx / real.deck_x(),
        v: dy / real.deck_y(),
    })
}

/// A lift of the curve clipped to the requested window, with its period.
#[derive(Debug, Clone)]
pub struct LiftedStrand {
    points: Vec<ScaledPoint>,
    scale: i64,
    /// Deck translation identifying the strand with itself, unscaled
    /// `(p*h, v)`.
    pub period: (i64, i64),
}

impl LiftedStrand {
    pub fn points(&self) -> Vec<(Rational64, Rational64)> {
        self.points
            .iter()
            .map(|&(x, y)| (rational(x, self.scale), rational(y, self.scale)))
            .collect()
    }

    pub fn points_scaled(&self) -> &[ScaledPoint] {
        &self.points
    }
}

/// All lifts of the curve meeting the box
/// `[-window*p, (window+1)*p] x [-window, window+1]`.
///
/// Every lift is a horizontal translate of the traced one; each strand's
/// polyline spans enough periods to cover the box vertically.
pub fn lift_beta(
    real: &Realization,
    d: &OneOneDiagram,
    window: u32,
) -> Result<Vec<LiftedStrand>, GeometryError> {
    let t = trace(real, d)?;
    let w = window as i64;
    let l = real.deck_y();
    let period = (t.h * real.deck_x(), t.v * l);

    // Vertical extent of one chunk, in units of L.
    let ys: Vec<i64> = t.chunk_arcs.iter().flatten().map(|p| p.1).collect();
    let (ymin, ymax) = (*ys.iter().min().unwrap() / l, *ys.iter().max().unwrap() / l + 1);
    // Period copies m with chunk y-range [ymin + m v, ymax + m v] meeting
    // [-w, w+1].
    let mut ms: Vec<i64> = Vec::new();
    for m in -(w + ymax.abs() + 1)..=(w + ymin.abs() + ymax.abs() + 2) {
        for sgn in [m, -m] {
            if (ymin + sgn * t.v) <= (w + 1) && (ymax + sgn * t.v) >= -w && !ms.contains(&sgn) {
                ms.push(sgn);
            }
        }
    }
    ms.sort_unstable();
    if ms.is_empty() {
        ms.push(0);
    }
    let mut base: Vec<ScaledPoint> = Vec::new();
    for &m in &ms {
        for (j, arc) in t.chunk_arcs.iter().enumerate() {
            let pts = arc.iter().map(|&(x, y)| (x + m * period.0, y + m * period.1));
            if j == 0 && !base.is_empty() {
                // consecutive period copies share the junction crossing
                base.extend(pts.skip(1));
            } else if base.is_empty() {
                base.extend(pts);
            } else {
                base.extend(pts.skip(1));
            }
        }
    }
    let (bxmin, bxmax) = (
        base.iter().map(|p| p.0).min().unwrap(),
        base.iter().map(|p| p.0).max().unwrap(),
    );
    let box_lo = -w * real.deck_x();
    let box_hi = (w + 1) * real.deck_x();
    let kmin = (box_lo - bxmax).div_euclid(real.deck_x());
    let kmax = (box_hi - bxmin).div_euclid(real.deck_x()) + 1;
    let mut strands = Vec::new();
    for k in kmin..=kmax {
        let off = k * real.deck_x();
        if bxmin + off > box_hi || bxmax + off < box_lo {
            continue;
        }
        strands.push(LiftedStrand {
            points: base.iter().map(|&(x, y)| (x + off, y)).collect(),
            scale: real.scale(),
            period: (t.h * real.p() as i64, t.v),
        });
    }
    Ok(strands)
}

/// Deck translates of the two basepoints inside the window box
/// `[-window*p, (window+1)*p) x [-window, window+1)`, half-open so the
/// seam column is not double counted.
pub fn basepoint_lifts(
    real: &Realization,
    window: u32,
) -> Vec<(BasepointKind, (Rational64, Rational64))> {
    let w = window as i64;
    let mut out = Vec::new();
    for (kind, base) in [(BasepointKind::Z, real.z_scaled()), (BasepointKind::W, real.w_scaled())] {
        for kx in -(w + 1)..=(w + 1) {
            let x = base.0 + kx * real.deck_x();
            if x < -w * real.deck_x() || x >= (w + 1) * real.deck_x() {
                continue;
            }
            for ky in -(w + 1)..=(w + 1) {
                let y = base.1 + ky * real.deck_y();
                if y < -w * real.deck_y() || y >= (w + 1) * real.deck_y() {
                    continue;
                }
                out.push((kind, (rational(x, real.scale()), rational(y, real.scale()))));
            }
        }
    }
    out
}
