//! Disk enumeration and differentials.
//!
//! A unit-index Whitney disk between crossings lifts to an immersed disk
//! in the universal cover bounded by one subarc of the horizontal line
//! `y = 0` and one subarc of a lift of the other curve, with both corners
//! convex and no other deck lift of either corner inside.  Every
//! deck-translation class of such disks has both corners on the traced
//! base lift, so candidates are exactly the pairs of its crossings with
//! that line.  When the boundary loop is embedded the filling is unique;
//! otherwise the mod-2 count of fillings is computed by assembling the
//! loop from embedded pieces along chords on the line.

use crate::diagram::OneOneDiagram;
use crate::geometry::{trace, GeometryError, Realization, ScaledPoint, Trace};
use std::collections::BTreeMap;
use thiserror::Error;

/// A Maslov-index-one disk record.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bigon {
    pub from: usize,
    pub to: usize,
    pub n_w: u32,
    pub n_z: u32,
    /// Boundary subarc along the lifted curve, translated so the `from`
    /// crossing has x in `[0, p)` (scaled); the closing edge runs along
    /// `y = 0`.
    pub witness: Vec<ScaledPoint>,
}

/// Which disks a differential counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Basepoint-free disks only.
    HatKnot,
    /// Disks avoiding `w`.
    HatS3,
    /// All disks, with multiplicities retained.
    Full,
}

/// Parity-one differential entries, keyed by endpoints and multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundaryTable {
    pub entries: Vec<(usize, usize, u32, u32)>,
}

impl BoundaryTable {
    pub fn rows(&self, p: usize) -> Vec<Vec<(usize, u32, u32)>> {
        let mut rows = vec![Vec::new(); p + 1];
        for &(from, to, n_w, n_z) in &self.entries {
            rows[from].push((to, n_w, n_z));
        }
        rows
    }
}

#[derive(Debug, Error)]
pub enum FloerError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("bigon set changed when the window was enlarged from {window} to {next}")]
    WindowInstability { window: u32, next: u32 },
    #[error("immersed-disk assembly search exceeded its budget")]
    AssemblyBudget,
}

/// Crossings of the base lift with the line `y = 0`, in order along the lift.
struct LineCrossings {
    /// (t-index along the lift, x-coordinate, generator, germ y-sign)
    items: Vec<(i64, i64, usize, i64)>,
    period: (i64, i64),
}

fn line_crossings(real: &Realization, tr: &Trace) -> LineCrossings {
    let p = real.p() as i64;
    let period = (tr.h * real.deck_x(), tr.v * real.deck_y());
    let mut items: Vec<(i64, i64, usize, i64)> = tr
        .crossings
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let level = c.pos.1 / real.deck_y();
            let m = -level * tr.v;
            let arc = &tr.chunk_arcs[j];
            let germ = (arc[1].1 - arc[0].1).signum();
            (j as i64 + m * p, c.pos.0 + m * period.0, c.generator, germ)
        })
        .collect();
    items.sort_unstable();
    LineCrossings { items, period }
}

/// Enumerate all bigons, verifying stability under window enlargement.
///
/// The candidate set is intrinsically finite (both corners lie among the
/// finitely many crossings of the traced lift with the line), so the full
/// enumeration runs uncapped; the window then only classifies: every disk
/// must fit the window box, else enlarging the window would change the
/// result and the enumeration reports instability.
pub fn enumerate_bigons(
    real: &Realization,
    d: &OneOneDiagram,
    window: u32,
) -> Result<Vec<Bigon>, FloerError> {
    let tr = trace(real, d)?;
    let found = enumerate_all(real, &tr)?;
    let w = window as i64;
    let max_width = (2 * w + 1) * real.deck_x();
    let max_height = (2 * w + 2) * real.deck_y();
    for b in &found {
        let bb = BBox::of(&b.witness);
        if bb.x1 - bb.x0 > max_width || bb.y1 - bb.y0 > max_height {
            return Err(FloerError::WindowInstability { window, next: window + 1 });
        }
    }
    Ok(found)
}

#[derive(Debug, Clone, Copy)]
struct BBox {
    x0: i64,
    x1: i64,
    y0: i64,
    y1: i64,
}

impl BBox {
    fn of(pts: &[ScaledPoint]) -> BBox {
        BBox {
            x0: pts.iter().map(|p| p.0).min().unwrap(),
            x1: pts.iter().map(|p| p.0).max().unwrap(),
            y0: pts.iter().map(|p| p.1).min().unwrap(),
            y1: pts.iter().map(|p| p.1).max().unwrap(),
        }
    }
}

fn enumerate_all(real: &Realization, tr: &Trace) -> Result<Vec<Bigon>, FloerError> {
    let lc = line_crossings(real, tr);

    let mut out = Vec::new();
    let n = lc.items.len();
    for i in 0..n {
        for j in i + 1..n {
            let (ta, xa, ga, dir_a) = lc.items[i];
            let (tb, xb, gb, dir_b) = lc.items[j];
            // Convexity at the two corners forces the lift to cross the
            // line in opposite directions there.
            if dir_a == dir_b {
                continue;
            }
            // Every crossing strictly between along the lift is a line
            // contact of the boundary subarc; immersed fillings need an
            // even number of them with balanced directions, pairing into
            // finitely many chords.
            let m_total = (j - i).saturating_sub(1);
            let (lo, hi) = (xa.min(xb), xa.max(xb));
            let between = &lc.items[i + 1..j];
            let span_contacts = between.iter().filter(|&&(_, x, _, _)| lo < x && x < hi).count();
            if span_contacts > 0 {
                let balance: i64 = between.iter().map(|&(_, _, _, d)| d).sum();
                if m_total % 2 != 0 || balance != 0 {
                    continue;
                }
            }
            out.extend(try_bigon(real, tr, &lc, (ta, xa, ga), (tb, xb, gb))?);
        }
    }
    out.sort();
    Ok(out)
}

/// Polyline of arc `t` (1-based along the lift), translated into place.
fn global_arc(real: &Realization, tr: &Trace, lc: &LineCrossings, t: i64) -> Vec<ScaledPoint> {
    let p = real.p() as i64;
    let j = (t - 1).rem_euclid(p);
    let m = (t - 1 - j) / p;
    tr.chunk_arcs[j as usize]
        .iter()
        .map(|&(x, y)| (x + m * lc.period.0, y + m * lc.period.1))
        .collect()
}

fn try_bigon(
    real: &Realization,
    tr: &Trace,
    lc: &LineCrossings,
    a: (i64, i64, usize),
    b: (i64, i64, usize),
) -> Result<Vec<Bigon>, FloerError> {
    let (ta, xa, ga) = a;
    let (tb, xb, gb) = b;
    // Subarc from crossing ta to crossing tb.
    let mut pts: Vec<ScaledPoint> = Vec::new();
    let (mut x0, mut x1, mut y0, mut y1) = (xa, xa, 0i64, 0i64);
    for t in ta + 1..=tb {
        let arc = global_arc(real, tr, lc, t);
        let skip = usize::from(!pts.is_empty());
        for &pt in arc.iter().skip(skip) {
            x0 = x0.min(pt.0);
            x1 = x1.max(pt.0);
            y0 = y0.min(pt.1);
            y1 = y1.max(pt.1);
            pts.push(pt);
        }
    }
    debug_assert_eq!(pts.first(), Some(&(xa, 0)));
    debug_assert_eq!(pts.last().map(|p| p.1), Some(0));
    let bbox = (x0, x1, y0, y1);

    // Contacts: interior vertices where the subarc crosses the line.
    let (lo, hi) = (xa.min(xb), xa.max(xb));
    let contacts: Vec<usize> =
        (1..pts.len() - 1).filter(|&k| pts[k].1 == 0).collect();
    let span_contacts =
        contacts.iter().filter(|&&k| lo < pts[k].0 && pts[k].0 < hi).count();

    let mut out = Vec::new();
    if span_contacts == 0 {
        // The boundary loop is embedded; the count of the unique filling
        // is one, subject to the unit-index corner conditions.
        let mut area2: i128 = 0;
        for k in 0..pts.len() {
            let (px, py) = pts[k];
            let (qx, qy) = pts[(k + 1) % pts.len()];
            area2 += px as i128 * qy as i128 - qx as i128 * py as i128;
        }
        if area2 == 0 {
            return Ok(out);
        }
        let forward = area2 > 0;
        if let Some(bigon) = finish_candidate(real, &pts, bbox, forward, (ga, gb)) {
            out.push(bigon);
        }
    } else {
        // Immersed fillings: Blank count via non-crossing chord matchings
        // of the line contacts, each matching contributing one filling
        // when every piece closes up embedded and positively oriented.
        // Cheap index and positivity conditions run first.
        let faces = line_face_windings(&pts, &contacts);
        for forward in [true, false] {
            let orient = if forward { 1 } else { -1 };
            if faces.iter().any(|&w| orient * w < 0) {
                continue;
            }
            if let Some(bigon) = finish_candidate(real, &pts, bbox, forward, (ga, gb)) {
                if assembly_count_is_odd(&pts, &contacts, forward)? {
                    out.push(bigon);
                }
            }
        }
    }
    Ok(out)
}

/// Winding of the loop in the faces adjacent to the line (a filling needs
/// them all non-negative in its orientation).
fn line_face_windings(pts: &[ScaledPoint], contacts: &[usize]) -> Vec<i64> {
    let mut xs: Vec<i64> = contacts.iter().map(|&k| pts[k].0).collect();
    xs.push(pts[0].0);
    xs.push(pts[pts.len() - 1].0);
    xs.sort_unstable();
    xs.dedup();
    let mut probes = Vec::new();
    for w in xs.windows(2) {
        let mid = w[0] + (w[1] - w[0]) / 2;
        probes.push((mid, 1i64));
        probes.push((mid, -1));
    }
    winding_batch(pts, &probes).into_iter().flatten().collect()
}

/// Final unit-index conditions and multiplicity bookkeeping for a counted
/// filling with the given boundary orientation (`forward` = subarc first).
fn finish_candidate(
    real: &Realization,
    pts: &[ScaledPoint],
    bbox: (i64, i64, i64, i64),
    forward: bool,
    gens: (usize, usize),
) -> Option<Bigon> {
    let (ga, gb) = gens;
    let n = pts.len();
    // Corner convexity in the counted orientation: the boundary turns left
    // at both ends of the closing edge.
    let oriented: Vec<ScaledPoint> = if forward {
        pts.to_vec()
    } else {
        pts.iter().rev().cloned().collect()
    };
    let corner_first = cross2(sub(oriented[0], oriented[n - 1]), sub(oriented[1], oriented[0]));
    let corner_last =
        cross2(sub(oriented[n - 1], oriented[n - 2]), sub(oriented[0], oriented[n - 1]));
    if corner_first <= 0 || corner_last <= 0 {
        return None;
    }
    // Unit index: no other deck lift of either corner generator may meet
    // the closed domain (winding or boundary).
    let orient: i64 = if forward { 1 } else { -1 };
    let corners = [pts[0], *pts.last().unwrap()];
    for corner in corners {
        if lift_meets_domain(pts, corner, real, bbox, &corners) {
            return None;
        }
    }
    let n_z = winding_count(pts, real.z_scaled(), real, bbox, orient)?;
    let n_w = winding_count(pts, real.w_scaled(), real, bbox, orient)?;
    // FROM is the corner where the counted boundary passes from the lifted
    // curve onto the horizontal line: the subarc's end in the forward
    // orientation.
    let (from, to) = if forward { (gb, ga) } else { (ga, gb) };
    let from_x = if forward { pts.last().unwrap().0 } else { pts[0].0 };
    let shift = -from_x.div_euclid(real.deck_x()) * real.deck_x();
    let witness: Vec<ScaledPoint> = pts.iter().map(|&(x, y)| (x + shift, y)).collect();
    Some(Bigon { from, to, n_w, n_z, witness })
}

/// Blank count mod 2: fillings of the loop (subarc plus closing edge) with
/// the given orientation correspond to non-crossing matchings of the line
/// contacts into chords joining opposite crossing directions, such that
/// every resulting piece is an embedded, positively oriented region.
fn assembly_count_is_odd(
    pts: &[ScaledPoint],
    contacts: &[usize],
    forward: bool,
) -> Result<bool, FloerError> {
    let m = contacts.len();
    if m % 2 != 0 {
        return Ok(false);
    }
    let dirs: Vec<i64> = contacts
        .iter()
        .map(|&idx| pts[idx + 1].1.signum() - pts[idx - 1].1.signum())
        .collect();

    // The number of interior sheets (chords) over every line interval is
    // forced by the winding profile: 2 chords(x) = W(x,+) + W(x,-) - [x in S].
    let orient = if forward { 1 } else { -1 };
    let (sx0, sx1) = {
        let (a, b) = (pts[0].0, pts[pts.len() - 1].0);
        (a.min(b), a.max(b))
    };
    let mut xs: Vec<i64> = contacts.iter().map(|&k| pts[k].0).collect();
    xs.push(sx0);
    xs.push(sx1);
    xs.sort_unstable();
    xs.dedup();
    let mut targets: Vec<i64> = Vec::with_capacity(xs.len() - 1);
    for w in xs.windows(2) {
        let mid = w[0] + (w[1] - w[0]) / 2;
        let wp = orient * winding_number(pts, (mid, 1));
        let wm = orient * winding_number(pts, (mid, -1));
        if wp < 0 || wm < 0 {
            return Ok(false);
        }
        let in_s = i64::from(sx0 < mid && mid < sx1);
        let total = wp + wm - in_s;
        if total < 0 || total % 2 != 0 {
            return Ok(false);
        }
        targets.push(total / 2);
    }
    // interval indices spanned by a chord between two contact positions
    let xs_for_ranges = xs.clone();
    let interval_range = move |xa: i64, xb: i64| -> (usize, usize) {
        let (lo, hi) = (xa.min(xb), xa.max(xb));
        let i0 = xs_for_ranges.partition_point(|&x| x < lo);
        let i1 = xs_for_ranges.partition_point(|&x| x < hi);
        (i0, i1) // intervals i0..i1 lie strictly inside [lo, hi]
    };

    let mut state = AssemblyState {
        pts,
        contacts,
        forward,
        matching: vec![usize::MAX; m],
        cache: PieceCache::default(),
        total: 0,
        cover: vec![0; targets.len()],
        targets,
        budget: 4_000_000,
    };
    let mut tasks = vec![Task::Range(0, m)];
    state.recurse(&mut tasks, &dirs, &interval_range);
    if state.budget == 0 {
        return Err(FloerError::AssemblyBudget);
    }
    Ok(state.total % 2 == 1)
}

type PieceCache = std::collections::HashMap<Vec<ScaledPoint>, bool>;

enum Task {
    Range(usize, usize),
    ValidatePiece(usize, usize),
}

struct AssemblyState<'a> {
    pts: &'a [ScaledPoint],
    contacts: &'a [usize],
    forward: bool,
    matching: Vec<usize>,
    cache: PieceCache,
    total: u32,
    /// current chord coverage per elementary line interval
    cover: Vec<i64>,
    /// forced coverage per interval from the winding profile
    targets: Vec<i64>,
    budget: u64,
}

impl AssemblyState<'_> {
    /// Depth-first over chord choices; each chord's piece is validated as
    /// soon as its inner range is fully matched, and coverage never
    /// exceeds the forced profile.
    fn recurse(
        &mut self,
        tasks: &mut Vec<Task>,
        dirs: &[i64],
        interval_range: &impl Fn(i64, i64) -> (usize, usize),
    ) {
        if self.budget == 0 {
            return;
        }
        self.budget -= 1;
        let Some(task) = tasks.pop() else {
            // complete matching: coverage must meet the profile exactly,
            // and the outer piece must close up
            if self.cover == self.targets && self.piece_valid(None) {
                self.total += 1;
            }
            return;
        };
        match task {
            Task::ValidatePiece(lo, j) => {
                if self.piece_valid(Some((lo, j))) {
                    self.recurse(tasks, dirs, interval_range);
                }
                tasks.push(Task::ValidatePiece(lo, j));
            }
            Task::Range(lo, hi) => {
                if lo >= hi {
                    self.recurse(tasks, dirs, interval_range);
                    tasks.push(Task::Range(lo, hi));
                    return;
                }
                let mut j = lo + 1;
                while j < hi {
                    if dirs[lo] + dirs[j] == 0 {
                        let (i0, i1) =
                            interval_range(self.pts[self.contacts[lo]].0, self.pts[self.contacts[j]].0);
                        let fits = (i0..i1).all(|iv| self.cover[iv] < self.targets[iv]);
                        if fits {
                            for iv in i0..i1 {
                                self.cover[iv] += 1;
                            }
                            self.matching[lo] = j;
                            self.matching[j] = lo;
                            tasks.push(Task::Range(j + 1, hi));
                            tasks.push(Task::ValidatePiece(lo, j));
                            tasks.push(Task::Range(lo + 1, j));
                            self.recurse(tasks, dirs, interval_range);
                            tasks.pop();
                            tasks.pop();
                            tasks.pop();
                            self.matching[lo] = usize::MAX;
                            self.matching[j] = usize::MAX;
                            for iv in i0..i1 {
                                self.cover[iv] -= 1;
                            }
                        }
                    }
                    j += 2;
                }
                tasks.push(Task::Range(lo, hi));
            }
        }
    }

    /// Build and validate one piece: for chord `(lo, j)` the region walked
    /// from its contacts jumping over immediate children; for `None` the
    /// outer region including the closing edge.
    fn piece_valid(&mut self, chord: Option<(usize, usize)>) -> bool {
        let pts = self.pts;
        let contacts = self.contacts;
        let n = pts.len();
        let mut contact_of = vec![usize::MAX; n];
        for (k, &idx) in contacts.iter().enumerate() {
            contact_of[idx] = k;
        }
        let mut poly: Vec<ScaledPoint> = Vec::new();
        let (start_v, end_v) = match chord {
            Some((lo, j)) => (contacts[lo], contacts[j]),
            None => (0, n - 1),
        };
        let mut v = start_v;
        loop {
            poly.push(pts[v]);
            if v == end_v {
                break;
            }
            let next = v + 1;
            if next >= n {
                return false;
            }
            let k = contact_of[next];
            if k != usize::MAX && Some(k) != chord.map(|c| c.1) {
                let partner = self.matching[k];
                if partner == usize::MAX {
                    return false;
                }
                poly.push(pts[contacts[k]]);
                v = contacts[partner];
                if v > end_v {
                    return false;
                }
            } else {
                v = next;
            }
        }
        if poly.len() < 3 {
            return false;
        }
        if let Some(&ok) = self.cache.get(&poly) {
            return ok;
        }
        let mut area2: i128 = 0;
        for k in 0..poly.len() {
            let (px, py) = poly[k];
            let (qx, qy) = poly[(k + 1) % poly.len()];
            area2 += px as i128 * qy as i128 - qx as i128 * py as i128;
        }
        let signed = if self.forward { area2 } else { -area2 };
        let ok = signed > 0 && polygon_simple(&poly);
        self.cache.insert(poly, ok);
        ok
    }
}

/// Exact simplicity test for a closed polygon (consecutive edges share
/// only their common vertex; others are disjoint).
fn polygon_simple(poly: &[ScaledPoint]) -> bool {
    let n = poly.len();
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        if a == b {
            continue;
        }
        for j in i + 1..n {
            let (c, d) = (poly[j], poly[(j + 1) % n]);
            if c == d {
                continue;
            }
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if adjacent {
                // may share exactly the common endpoint
                let shared = if j == i + 1 { b } else { a };
                let other_c = if j == i + 1 { d } else { c };
                if crate::geometry::point_on_segment(other_c, a, b) && other_c != shared {
                    return false;
                }
                continue;
            }
            if crate::geometry::segments_intersect(a, b, c, d) {
                return false;
            }
        }
    }
    true
}

fn sub(a: ScaledPoint, b: ScaledPoint) -> ScaledPoint {
    (a.0 - b.0, a.1 - b.1)
}

fn cross2(a: ScaledPoint, b: ScaledPoint) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

/// Signed winding number of the closed polygon around a point not on its
/// boundary.
fn winding_number(pts: &[ScaledPoint], p: ScaledPoint) -> i64 {
    let mut winding = 0i64;
    let n = pts.len();
    for k in 0..n {
        let a = pts[k];
        let b = pts[(k + 1) % n];
        // is_left = cross(b - a, p - a)
        let is_left = (b.0 as i128 - a.0 as i128) * (p.1 as i128 - a.1 as i128)
            - (b.1 as i128 - a.1 as i128) * (p.0 as i128 - a.0 as i128);
        if a.1 <= p.1 && b.1 > p.1 && is_left > 0 {
            winding += 1;
        } else if a.1 > p.1 && b.1 <= p.1 && is_left < 0 {
            winding -= 1;
        }
    }
    winding
}

/// Deck lifts of `base` within the box.
fn lifts_in_box(base: ScaledPoint, real: &Realization, bbox: (i64, i64, i64, i64)) -> Vec<ScaledPoint> {
    let (x0, x1, y0, y1) = bbox;
    let kx0 = (x0 - base.0).div_euclid(real.deck_x());
    let kx1 = (x1 - base.0).div_euclid(real.deck_x()) + 1;
    let ky0 = (y0 - base.1).div_euclid(real.deck_y());
    let ky1 = (y1 - base.1).div_euclid(real.deck_y()) + 1;
    let mut out = Vec::new();
    for kx in kx0..=kx1 {
        for ky in ky0..=ky1 {
            let pt = (base.0 + kx * real.deck_x(), base.1 + ky * real.deck_y());
            if pt.0 >= x0 && pt.0 <= x1 && pt.1 >= y0 && pt.1 <= y1 {
                out.push(pt);
            }
        }
    }
    out
}

/// Winding numbers of the polygon around many points at once, bucketing
/// points by row so each edge only touches the rows it spans.  Points on
/// the boundary are reported as `None`.
fn winding_batch(pts: &[ScaledPoint], queries: &[ScaledPoint]) -> Vec<Option<i64>> {
    let n = pts.len();
    let mut winding = vec![0i64; queries.len()];
    let mut boundary = vec![false; queries.len()];
    // rows sorted by y
    let mut order: Vec<usize> = (0..queries.len()).collect();
    order.sort_by_key(|&i| queries[i].1);
    for k in 0..n {
        let a = pts[k];
        let b = pts[(k + 1) % n];
        let (ylo, yhi) = (a.1.min(b.1), a.1.max(b.1));
        // candidate query points with ylo - 0 <= y <= yhi (closed to catch
        // boundary targets); binary search the sorted order
        let start = order.partition_point(|&i| queries[i].1 < ylo);
        for &qi in &order[start..] {
            let p = queries[qi];
            if p.1 > yhi {
                break;
            }
            if crate::geometry::point_on_segment(p, a, b) {
                boundary[qi] = true;
                continue;
            }
            let is_left = (b.0 as i128 - a.0 as i128) * (p.1 as i128 - a.1 as i128)
                - (b.1 as i128 - a.1 as i128) * (p.0 as i128 - a.0 as i128);
            if a.1 <= p.1 && b.1 > p.1 && is_left > 0 {
                winding[qi] += 1;
            } else if a.1 > p.1 && b.1 <= p.1 && is_left < 0 {
                winding[qi] -= 1;
            }
        }
    }
    (0..queries.len()).map(|i| if boundary[i] { None } else { Some(winding[i]) }).collect()
}

/// Does any deck lift of `base` other than the marked corners meet the
/// closed domain (nonzero winding or boundary)?  Such a lift raises the
/// corner point measures above index one.
fn lift_meets_domain(
    pts: &[ScaledPoint],
    base: ScaledPoint,
    real: &Realization,
    bbox: (i64, i64, i64, i64),
    corners: &[ScaledPoint; 2],
) -> bool {
    let queries: Vec<ScaledPoint> = lifts_in_box(base, real, bbox)
        .into_iter()
        .filter(|pt| !corners.contains(pt))
        .collect();
    winding_batch(pts, &queries)
        .into_iter()
        .any(|w| w.is_none() || w != Some(0))
}

/// Winding-weighted count of deck lifts of `base` inside the domain, in
/// the counted orientation; `None` when any lift has negative multiplicity
/// or sits on the boundary.
fn winding_count(
    pts: &[ScaledPoint],
    base: ScaledPoint,
    real: &Realization,
    bbox: (i64, i64, i64, i64),
    orient: i64,
) -> Option<u32> {
    let queries = lifts_in_box(base, real, bbox);
    let mut count = 0i64;
    for w in winding_batch(pts, &queries) {
        let w = orient * w?;
        if w < 0 {
            return None;
        }
        count += w;
    }
    u32::try_from(count).ok()
}

/// Boundary table of a differential mode: entries with odd disk count.
pub fn differential(bigons: &[Bigon], mode: Mode) -> BoundaryTable {
    let mut parity: BTreeMap<(usize, usize, u32, u32), u32> = BTreeMap::new();
    for b in bigons {
        let keep = match mode {
            Mode::HatKnot => b.n_w == 0 && b.n_z == 0,
            Mode::HatS3 => b.n_w == 0,
            Mode::Full => true,
        };
        if keep {
            *parity.entry((b.from, b.to, b.n_w, b.n_z)).or_insert(0) += 1;
        }
    }
    BoundaryTable {
        entries: parity.into_iter().filter(|&(_, c)| c % 2 == 1).map(|(k, _)| k).collect(),
    }
}

/// Check that the differential squares to zero over the two-element field,
/// tracking basepoint multiplicities.
pub fn d_squared_is_zero(table: &BoundaryTable, p: usize) -> bool {
    let rows = table.rows(p);
    for x in 1..=p {
        let mut acc: BTreeMap<(usize, u32, u32), u32> = BTreeMap::new();
        for &(y, w1, z1) in &rows[x] {
            for &(zt, w2, z2) in &rows[y] {
                *acc.entry((zt, w1 + w2, z1 + z2)).or_insert(0) += 1;
            }
        }
        if acc.values().any(|&c| c % 2 == 1) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{decode, family_params, RasmussenParams};
    use crate::geometry::realize;

    fn bigons_for(p: i64, q: i64, r: i64, s: i64) -> Vec<Bigon> {
        let d = decode(RasmussenParams::new(p, q, r, s)).unwrap();
        let real = realize(&d).unwrap();
        enumerate_bigons(&real, &d, 4).unwrap()
    }

    #[test]
    fn unknot_has_no_bigons() {
        assert!(bigons_for(1, 0, 0, 0).is_empty());
    }

    #[test]
    fn family_zero_specific_bigons() {
        let d = decode(family_params(0)).unwrap();
        let real = realize(&d).unwrap();
        let bigons = enumerate_bigons(&real, &d, 4).unwrap();
        let has = |from: usize, to: usize, n_w: u32, n_z: u32| {
            bigons.iter().any(|b| b.from == from && b.to == to && b.n_w == n_w && b.n_z == n_z)
        };
        assert!(has(12, 13, 0, 1), "innermost bottom arch disk");
        assert!(has(31, 25, 0, 2), "double-z disk");
        assert!(has(1, 7, 2, 0), "double-w disk");
        assert!(!bigons.iter().any(|b| b.n_w == 0 && b.n_z == 0), "perfect diagram");
    }

    #[test]
    fn family_zero_hat_knot_empty() {
        let bigons = bigons_for(31, 12, 6, 18);
        let table = differential(&bigons, Mode::HatKnot);
        assert!(table.entries.is_empty());
    }

    #[test]
    fn family_zero_d_squared() {
        let bigons = bigons_for(31, 12, 6, 18);
        for mode in [Mode::HatKnot, Mode::HatS3, Mode::Full] {
            let table = differential(&bigons, mode);
            assert!(d_squared_is_zero(&table, 31));
        }
    }

    #[test]
    fn witnesses_audit_independently() {
        // every returned disk's witness re-verifies: endpoints on the line,
        // and for embedded loops a simple polygon with convex corners
        let d = decode(family_params(0)).unwrap();
        let real = realize(&d).unwrap();
        let bigons = enumerate_bigons(&real, &d, 4).unwrap();
        for b in &bigons {
            let w = &b.witness;
            assert_eq!(w.first().unwrap().1, 0);
            assert_eq!(w.last().unwrap().1, 0);
            assert!(polygon_simple(w), "witness of {} -> {}", b.from, b.to);
            let n = w.len();
            let c1 = cross2(sub(w[0], w[n - 1]), sub(w[1], w[0]));
            let c2 = cross2(sub(w[n - 1], w[n - 2]), sub(w[0], w[n - 1]));
            // corners turn the same way (counted orientation may be either)
            assert!(c1.signum() == c2.signum() && c1 != 0);
        }
    }

    #[test]
    fn no_duplicate_disk_classes() {
        let d = decode(family_params(1)).unwrap();
        let real = realize(&d).unwrap();
        let bigons = enumerate_bigons(&real, &d, 4).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for b in &bigons {
            assert!(seen.insert((b.from, b.to, b.n_w, b.n_z, b.witness.clone())));
        }
    }

    #[test]
    fn mode_monotonicity() {
        for params in [family_params(0), RasmussenParams::new(5, 2, 0, 4)] {
            let d = decode(params).unwrap();
            let real = realize(&d).unwrap();
            let bigons = enumerate_bigons(&real, &d, 4).unwrap();
            let pairs = |mode: Mode| -> std::collections::BTreeSet<(usize, usize)> {
                differential(&bigons, mode).entries.iter().map(|&(f, t, _, _)| (f, t)).collect()
            };
            let hat_knot = pairs(Mode::HatKnot);
            let hat_s3 = pairs(Mode::HatS3);
            let full = pairs(Mode::Full);
            assert!(hat_knot.is_subset(&hat_s3));
            assert!(hat_s3.is_subset(&full));
        }
    }

    #[test]
    fn small_example_d_squared() {
        let bigons = bigons_for(5, 2, 0, 4);
        for mode in [Mode::HatKnot, Mode::HatS3, Mode::Full] {
            let table = differential(&bigons, mode);
            assert!(d_squared_is_zero(&table, 5));
        }
    }
}
