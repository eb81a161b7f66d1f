//! Face decomposition, domains, the Maslov index, and absolute gradings.
//!
//! The complement of the two curves in the torus is a union of disk faces.
//! A domain connecting two crossings is an integer combination of faces
//! whose boundary has corners only at those crossings; it is unique up to
//! adding the full surface, and both the grading drops and the Maslov index
//! (Euler measure plus the two corner point measures) are invariants of the
//! class.

use crate::diagram::{OneOneDiagram, Side};
use crate::geometry::{GeometryError, Realization, ScaledPoint};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GradingsError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("grading equations are inconsistent at generator {0}")]
    Inconsistent(usize),
    #[error("no connecting domain between generators {0} and {1}")]
    NoDomain(usize, usize),
    #[error("no Alexander shift symmetrizes the Euler characteristic")]
    NoSymmetricShift,
    #[error("normalized Euler characteristic is {0}, expected 1")]
    NonUnitAugmentation(i64),
}

/// One of the four quadrants around a crossing, in rotation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Quadrant {
    NE,
    NW,
    SW,
    SE,
}

/// Half-edge ports at a crossing: along the horizontal curve to the right
/// or left, along the other curve up into the annulus or down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Port {
    AlphaRight,
    AlphaLeft,
    BetaUp,
    BetaDown,
}

impl Port {
    /// Clockwise neighbor in the rotation [right, up, left, down].
    fn cw_next(self) -> Port {
        match self {
            Port::AlphaRight => Port::BetaDown,
            Port::BetaUp => Port::AlphaRight,
            Port::AlphaLeft => Port::BetaUp,
            Port::BetaDown => Port::AlphaLeft,
        }
    }

    /// Quadrant between the arrival port and its clockwise continuation.
    fn corner_quadrant(self) -> Quadrant {
        match self {
            Port::AlphaLeft => Quadrant::NW,
            Port::BetaDown => Quadrant::SW,
            Port::AlphaRight => Quadrant::SE,
            Port::BetaUp => Quadrant::NE,
        }
    }
}

/// The face decomposition of the diagram complement.
pub struct Faces {
    p: usize,
    /// corner count of each face
    corners: Vec<usize>,
    /// face incident to each (crossing, quadrant)
    at: BTreeMap<(usize, Quadrant), usize>,
    /// face containing each basepoint
    pub z_face: usize,
    pub w_face: usize,
    /// lifted boundary polygon of each face (closed, first point repeated
    /// nowhere), for audits and rendering
    polygons: Vec<Vec<ScaledPoint>>,
}


impl Faces {
    pub fn face_count(&self) -> usize {
        self.corners.len()
    }

    /// Euler measure of face `f`, times 4.
    pub fn euler4(&self, f: usize) -> i64 {
        4 - self.corners[f] as i64
    }

    pub fn face_at(&self, crossing: usize, q: Quadrant) -> usize {
        self.at[&(crossing, q)]
    }

    pub fn polygon(&self, f: usize) -> &[ScaledPoint] {
        &self.polygons[f]
    }

    pub fn p(&self) -> usize {
        self.p
    }
}

/// Compute the faces of the arrangement by tracing boundaries through the
/// rotation system, lifting each boundary walk in the cover.
pub fn faces(real: &Realization, d: &OneOneDiagram) -> Result<Faces, GradingsError> {
    let p = real.p();
    let (from_bottom, from_top) = d.arc_links();
    // twin: walking out of (v, port), where do we arrive?
    let twin = |v: usize, port: Port| -> (usize, Port) {
        match port {
            Port::AlphaRight => (v % p + 1, Port::AlphaLeft),
            Port::AlphaLeft => (if v == 1 { p } else { v - 1 }, Port::AlphaRight),
            Port::BetaUp => {
                let (side, slot) = from_bottom[v];
                match side {
                    Side::Bottom => (slot, Port::BetaUp),
                    Side::Top => (slot, Port::BetaDown),
                }
            }
            Port::BetaDown => {
                let (side, slot) = from_top[v];
                match side {
                    Side::Top => (slot, Port::BetaDown),
                    Side::Bottom => (slot, Port::BetaUp),
                }
            }
        }
    };
    // lifted geometry of the walk step out of (v, port)
    let step_geom = |v: usize, port: Port| -> Vec<ScaledPoint> {
        let l = real.scale();
        let x = (2 * v as i64 - 1) * l / 2;
        match port {
            Port::AlphaRight => vec![(x, 0), (x + l, 0)],
            Port::AlphaLeft => vec![(x, 0), (x - l, 0)],
            Port::BetaUp => {
                let arc = real.arc_at(Side::Bottom, v);
                let mut pts = if arc.ends.0 == (Side::Bottom, v) {
                    arc.pts.clone()
                } else {
                    arc.pts.iter().rev().cloned().collect()
                };
                let off = x - pts[0].0;
                for pt in &mut pts {
                    pt.0 += off;
                }
                pts
            }
            Port::BetaDown => {
                let arc = real.arc_at(Side::Top, v);
                let mut pts = if arc.ends.0 == (Side::Top, v) {
                    arc.pts.clone()
                } else {
                    arc.pts.iter().rev().cloned().collect()
                };
                // the stored arc starts on the top boundary; the walk leaves
                // downward from the crossing, so drop it by one deck step
                for pt in &mut pts {
                    pt.1 -= real.deck_y();
                }
                let off = x - pts[0].0;
                for pt in &mut pts {
                    pt.0 += off;
                }
                pts
            }
        }
    };

    let mut at: BTreeMap<(usize, Quadrant), usize> = BTreeMap::new();
    let mut corners: Vec<usize> = Vec::new();
    let mut polygons: Vec<Vec<ScaledPoint>> = Vec::new();
    let mut visited: BTreeMap<(usize, u8), bool> = BTreeMap::new();
    let port_id = |port: Port| -> u8 {
        match port {
            Port::AlphaRight => 0,
            Port::BetaUp => 1,
            Port::AlphaLeft => 2,
            Port::BetaDown => 3,
        }
    };

    for v0 in 1..=p {
        for port0 in [Port::AlphaRight, Port::BetaUp, Port::AlphaLeft, Port::BetaDown] {
            if visited.contains_key(&(v0, port_id(port0))) {
                continue;
            }
            let f = corners.len();
            corners.push(0);
            let mut poly: Vec<ScaledPoint> = Vec::new();
            let (mut v, mut port) = (v0, port0);
            let mut offset: ScaledPoint = (0, 0);
            loop {
                visited.insert((v, port_id(port)), true);
                let geom = step_geom(v, port);
                let start = (geom[0].0 + offset.0, geom[0].1 + offset.1);
                if poly.is_empty() {
                    poly.push(start);
                } else {
                    debug_assert_eq!(*poly.last().unwrap(), start);
                }
                for pt in geom.iter().skip(1) {
                    poly.push((pt.0 + offset.0, pt.1 + offset.1));
                }
                let end = *poly.last().unwrap();
                let (w_v, w_port) = twin(v, port);
                // the face turns clockwise at the arrival vertex
                let next_port = w_port.cw_next();
                corners[f] += 1;
                at.insert((w_v, w_port.corner_quadrant()), f);
                // the arrival crossing sits at the lifted end point
                let canon_x = (2 * w_v as i64 - 1) * real.scale() / 2;
                debug_assert_eq!(end.1.rem_euclid(real.deck_y()), 0);
                offset = (end.0 - canon_x, end.1);
                v = w_v;
                port = next_port;
                if v == v0 && port == port0 {
                    break;
                }
            }
            // closed polygon: drop the repeated last point
            debug_assert_eq!(poly.first(), poly.last());
            poly.pop();
            polygons.push(poly);
        }
    }
    debug_assert_eq!(corners.iter().sum::<usize>(), 4 * p);
    debug_assert_eq!(corners.len(), p);

    // locate the basepoints
    let z_face = locate(real, &polygons, real.z_scaled())
        .ok_or(GradingsError::NoDomain(0, 0))?;
    let w_face = locate(real, &polygons, real.w_scaled())
        .ok_or(GradingsError::NoDomain(0, 0))?;
    Ok(Faces { p, corners, at, z_face, w_face, polygons })
}

fn point_in_polygon(pts: &[ScaledPoint], p: ScaledPoint) -> bool {
    let mut inside = false;
    let n = pts.len();
    for k in 0..n {
        let a = pts[k];
        let b = pts[(k + 1) % n];
        if (a.1 > p.1) != (b.1 > p.1) {
            let num = (p.1 as i128 - a.1 as i128) * (b.0 as i128 - a.0 as i128);
            let den = b.1 as i128 - a.1 as i128;
            let lhs = num + (a.0 as i128 - p.0 as i128) * den;
            if (den > 0 && lhs > 0) || (den < 0 && lhs < 0) {
                inside = !inside;
            }
        }
    }
    inside
}

fn locate(real: &Realization, polygons: &[Vec<ScaledPoint>], base: ScaledPoint) -> Option<usize> {
    for (f, poly) in polygons.iter().enumerate() {
        let xs: (i64, i64) = (
            poly.iter().map(|p| p.0).min().unwrap(),
            poly.iter().map(|p| p.0).max().unwrap(),
        );
        let ys: (i64, i64) = (
            poly.iter().map(|p| p.1).min().unwrap(),
            poly.iter().map(|p| p.1).max().unwrap(),
        );
        let k0 = (xs.0 - base.0).div_euclid(real.deck_x());
        let k1 = (xs.1 - base.0).div_euclid(real.deck_x()) + 1;
        let m0 = (ys.0 - base.1).div_euclid(real.deck_y());
        let m1 = (ys.1 - base.1).div_euclid(real.deck_y()) + 1;
        for k in k0..=k1 {
            for m in m0..=m1 {
                if point_in_polygon(poly, (base.0 + k * real.deck_x(), base.1 + m * real.deck_y()))
                {
                    return Some(f);
                }
            }
        }
    }
    None
}

/// Exact rational with i128 parts, enough for the small solves here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Frac {
    n: i128,
    d: i128,
}

impl Frac {
    fn new(n: i128, d: i128) -> Frac {
        debug_assert!(d != 0);
        let g = gcd(n.abs(), d.abs()).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Frac { n: s * n / g, d: s * d / g }
    }
    fn int(n: i128) -> Frac {
        Frac { n, d: 1 }
    }
    fn is_zero(self) -> bool {
        self.n == 0
    }
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.n * o.d + o.n * self.d, self.d * o.d)
    }
    fn sub(self, o: Frac) -> Frac {
        Frac::new(self.n * o.d - o.n * self.d, self.d * o.d)
    }
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.n * o.n, self.d * o.d)
    }
    fn div(self, o: Frac) -> Frac {
        Frac::new(self.n * o.d, self.d * o.n)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Domain solver: face multiplicities of classes connecting generators.
///
/// The corner equation at a crossing v reads
/// `c[NE] + c[SW] - c[NW] - c[SE] = +1` at the source, `-1` at the target,
/// `0` elsewhere; pinning one face multiplicity to zero makes the solution
/// unique (the full surface spans the kernel).
pub struct DomainSolver {
    faces: Faces,
    /// reduced row echelon data: for each source generator we solve lazily
    /// and cache the result
    cache: BTreeMap<(usize, usize), Vec<i64>>,
}

impl DomainSolver {
    pub fn new(faces: Faces) -> DomainSolver {
        DomainSolver { faces, cache: BTreeMap::new() }
    }

    pub fn faces(&self) -> &Faces {
        &self.faces
    }

    /// Multiplicity vector of a domain from `x` to `y`, unique up to the
    /// full surface; the returned representative has its minimum
    /// multiplicity equal to zero.
    pub fn domain(&mut self, x: usize, y: usize) -> Result<Vec<i64>, GradingsError> {
        if let Some(v) = self.cache.get(&(x, y)) {
            return Ok(v.clone());
        }
        let n = self.faces.face_count();
        let p = self.faces.p;
        // Augmented system: one equation per crossing, unknowns per face.
        let mut rows: Vec<Vec<Frac>> = Vec::with_capacity(p + 1);
        for v in 1..=p {
            let mut row = vec![Frac::int(0); n + 1];
            for (q, sgn) in [
                (Quadrant::NE, 1i128),
                (Quadrant::SW, 1),
                (Quadrant::NW, -1),
                (Quadrant::SE, -1),
            ] {
                let f = self.faces.face_at(v, q);
                row[f] = row[f].add(Frac::int(sgn));
            }
            let rhs = if v == x && v == y {
                0
            } else if v == x {
                1
            } else if v == y {
                -1
            } else {
                0
            };
            row[n] = Frac::int(rhs);
            rows.push(row);
        }
        // Pin the multiplicity of face 0.
        let mut pin = vec![Frac::int(0); n + 1];
        pin[0] = Frac::int(1);
        rows.push(pin);

        // Gaussian elimination.
        let mut rank = 0usize;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for col in 0..n {
            let Some(pr) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pr);
            let inv = rows[rank][col];
            for c in col..=n {
                rows[rank][c] = rows[rank][c].div(inv);
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let factor = rows[r][col];
                    for c in col..=n {
                        let t = rows[rank][c].mul(factor);
                        rows[r][c] = rows[r][c].sub(t);
                    }
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
        // Consistency: no row 0 = nonzero.
        for r in rank..rows.len() {
            if !rows[r][n].is_zero() {
                return Err(GradingsError::NoDomain(x, y));
            }
        }
        if rank < n {
            return Err(GradingsError::NoDomain(x, y));
        }
        let mut sol = vec![0i64; n];
        for &(r, col) in &pivots {
            let v = rows[r][n];
            if v.d != 1 {
                return Err(GradingsError::NoDomain(x, y));
            }
            sol[col] = v.n as i64;
        }
        let min = *sol.iter().min().unwrap();
        for s in &mut sol {
            *s -= min;
        }
        self.cache.insert((x, y), sol.clone());
        Ok(sol)
    }

    /// Maslov index of the domain, via Euler measure plus the two corner
    /// point measures (quarters handled exactly).
    pub fn maslov_index(&self, mult: &[i64], x: usize, y: usize) -> Option<i64> {
        let mut four_mu: i64 = 0;
        for (f, &c) in mult.iter().enumerate() {
            four_mu += c * self.faces.euler4(f);
        }
        for v in [x, y] {
            for q in [Quadrant::NE, Quadrant::NW, Quadrant::SW, Quadrant::SE] {
                four_mu += mult[self.faces.face_at(v, q)];
            }
        }
        if four_mu % 4 != 0 {
            return None;
        }
        Some(four_mu / 4)
    }

    /// Basepoint multiplicities of a domain.
    pub fn basepoints(&self, mult: &[i64]) -> (i64, i64) {
        (mult[self.faces.w_face], mult[self.faces.z_face])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{decode, family_params, RasmussenParams};
    use crate::geometry::realize;

    #[test]
    fn unknot_single_face() {
        let d = decode(RasmussenParams::new(1, 0, 0, 0)).unwrap();
        let real = realize(&d).unwrap();
        let f = faces(&real, &d).unwrap();
        assert_eq!(f.face_count(), 1);
        assert_eq!(f.euler4(0), 0);
        assert_eq!(f.z_face, 0);
        assert_eq!(f.w_face, 0);
    }

    #[test]
    fn family_zero_faces() {
        let d = decode(family_params(0)).unwrap();
        let real = realize(&d).unwrap();
        let f = faces(&real, &d).unwrap();
        assert_eq!(f.face_count(), 31);
        let total_euler: i64 = (0..f.face_count()).map(|k| f.euler4(k)).sum();
        assert_eq!(total_euler, 0);
        assert_ne!(f.z_face, f.w_face);
        assert!(audit_faces(&f).is_empty());
    }

    fn k0_gradings() -> Vec<GradedGenerator> {
        let d = decode(family_params(0)).unwrap();
        let real = realize(&d).unwrap();
        let bigons = crate::floer::enumerate_bigons(&real, &d, 4).unwrap();
        let f = faces(&real, &d).unwrap();
        let mut solver = DomainSolver::new(f);
        calibrate(&mut solver, &bigons).unwrap();
        let rel =
            relative_gradings(&bigons, 31, |x, y| domain_fallback(&mut solver, x, y)).unwrap();
        // hat complex of the three-sphere survives at the relative Maslov
        // grading of the generator left after cancelling; computed in the
        // invariants pipeline, but for this test the known survivor is x_31.
        let survivor = rel.maslov[31];
        normalize(&rel, survivor).unwrap()
    }

    #[test]
    fn family_zero_absolute_gradings() {
        let gens = k0_gradings();
        let a: Vec<i64> = gens.iter().map(|g| g.alexander).collect();
        let m: Vec<i64> = gens.iter().map(|g| g.maslov).collect();
        assert_eq!(
            a,
            vec![
                -1, 0, 1, 0, 1, 2, 1, 2, 1, 0, 1, 0, -1, 0, -1, 0, 1, 0, 1, 0, -1, 0, -1, -2, -1,
                -2, -1, 0, -1, 0, 1
            ]
        );
        assert_eq!(
            m,
            vec![
                -2, -1, 0, 0, 1, 2, 1, 1, 0, -1, 1, 0, -1, 0, -2, -1, 0, 0, 1, 0, -1, -1, -2, -3,
                -1, -2, -1, 0, -2, -1, 0
            ]
        );
    }

    #[test]
    fn fallback_agrees_with_bigons() {
        let d = decode(family_params(0)).unwrap();
        let real = realize(&d).unwrap();
        let bigons = crate::floer::enumerate_bigons(&real, &d, 4).unwrap();
        let f = faces(&real, &d).unwrap();
        let mut solver = DomainSolver::new(f);
        for b in &bigons {
            let (da, dm) = domain_fallback(&mut solver, b.from, b.to).unwrap();
            assert_eq!(da, b.n_z as i64 - b.n_w as i64, "bigon {} -> {}", b.from, b.to);
            assert_eq!(dm, 1 - 2 * b.n_w as i64, "bigon {} -> {}", b.from, b.to);
        }
    }

    #[test]
    fn fallback_specific_pair() {
        // relative gradings of (x_1, x_2): a_1 - a_2 = -1, m_1 - m_2 = -1
        let d = decode(family_params(0)).unwrap();
        let real = realize(&d).unwrap();
        let f = faces(&real, &d).unwrap();
        let mut solver = DomainSolver::new(f);
        assert_eq!(domain_fallback(&mut solver, 1, 2).unwrap(), (-1, -1));
        assert_eq!(domain_fallback(&mut solver, 4, 4).unwrap(), (0, 0));
    }

    #[test]
    fn unknot_normalized() {
        let rel = RelativeGradings { alexander: vec![0, 0], maslov: vec![0, 0] };
        let gens = normalize(&rel, 0).unwrap();
        assert_eq!(gens, vec![GradedGenerator { index: 1, alexander: 0, maslov: 0 }]);
    }
}

/// A crossing with its absolute gradings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradedGenerator {
    pub index: usize,
    pub alexander: i64,
    pub maslov: i64,
}

/// Relative gradings, as offsets from generator 1.
#[derive(Debug, Clone)]
pub struct RelativeGradings {
    pub alexander: Vec<i64>,
    pub maslov: Vec<i64>,
}

/// Propagate the grading equations
/// `A(from) - A(to) = n_z - n_w` and `M(from) - M(to) = 1 - 2 n_w`
/// over the graph whose edges are the bigons; disconnected components are
/// joined through the connecting-domain solver.
pub fn relative_gradings(
    bigons: &[crate::floer::Bigon],
    p: usize,
    mut fallback: impl FnMut(usize, usize) -> Result<(i64, i64), GradingsError>,
) -> Result<RelativeGradings, GradingsError> {
    let mut alexander = vec![0i64; p + 1];
    let mut maslov = vec![0i64; p + 1];
    let mut known = vec![false; p + 1];
    let mut adj: Vec<Vec<(usize, i64, i64)>> = vec![Vec::new(); p + 1];
    for b in bigons {
        let da = b.n_z as i64 - b.n_w as i64;
        let dm = 1 - 2 * b.n_w as i64;
        adj[b.from].push((b.to, -da, -dm));
        adj[b.to].push((b.from, da, dm));
    }
    let mut roots = Vec::new();
    for start in 1..=p {
        if known[start] {
            continue;
        }
        if start == 1 {
            alexander[1] = 0;
            maslov[1] = 0;
        } else {
            // link this component to generator 1 through a domain
            let (da, dm) = fallback(1, start)?;
            alexander[start] = alexander[1] - da;
            maslov[start] = maslov[1] - dm;
        }
        known[start] = true;
        roots.push(start);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            let edges = adj[v].clone();
            for (w, da, dm) in edges {
                let (aw, mw) = (alexander[v] + da, maslov[v] + dm);
                if known[w] {
                    if alexander[w] != aw || maslov[w] != mw {
                        return Err(GradingsError::Inconsistent(w));
                    }
                } else {
                    alexander[w] = aw;
                    maslov[w] = mw;
                    known[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    Ok(RelativeGradings { alexander, maslov })
}

/// Relative (Alexander, Maslov) drop between two generators from a
/// connecting domain: `(n_z - n_w, index - 2 n_w)`.
///
/// The corner sign convention is calibrated against a bigon before first
/// use; an implementation whose convention came out globally reversed
/// would be caught there.
pub fn domain_fallback(
    solver: &mut DomainSolver,
    x: usize,
    y: usize,
) -> Result<(i64, i64), GradingsError> {
    if x == y {
        return Ok((0, 0));
    }
    let dom = solver.domain(x, y)?;
    let mu = solver.maslov_index(&dom, x, y).ok_or(GradingsError::NoDomain(x, y))?;
    let (n_w, n_z) = solver.basepoints(&dom);
    Ok((n_z - n_w, mu - 2 * n_w))
}

/// Check the solver against one bigon's grading equation.
pub fn calibrate(
    solver: &mut DomainSolver,
    bigons: &[crate::floer::Bigon],
) -> Result<(), GradingsError> {
    if let Some(b) = bigons.first() {
        let (da, dm) = domain_fallback(solver, b.from, b.to)?;
        if da != b.n_z as i64 - b.n_w as i64 || dm != 1 - 2 * b.n_w as i64 {
            return Err(GradingsError::Inconsistent(b.from));
        }
    }
    Ok(())
}

/// Absolute gradings: the Maslov shift puts the surviving hat-complex
/// homology of the three-sphere at degree zero; the Alexander shift is the
/// unique one making the graded Euler characteristic symmetric, and the
/// normalized characteristic must evaluate to one.
pub fn normalize(
    rel: &RelativeGradings,
    maslov_survivor_label: i64,
) -> Result<Vec<GradedGenerator>, GradingsError> {
    let p = rel.alexander.len() - 1;
    let m_shift = -maslov_survivor_label;
    // Euler characteristic per relative Alexander grading.
    let mut chi: BTreeMap<i64, i64> = BTreeMap::new();
    for i in 1..=p {
        let sign = if (rel.maslov[i] + m_shift).rem_euclid(2) == 0 { 1 } else { -1 };
        *chi.entry(rel.alexander[i]).or_insert(0) += sign;
    }
    chi.retain(|_, c| *c != 0);
    if chi.is_empty() {
        return Err(GradingsError::NoSymmetricShift);
    }
    let lo = *chi.keys().next().unwrap();
    let hi = *chi.keys().next_back().unwrap();
    if (lo + hi) % 2 != 0 {
        return Err(GradingsError::NoSymmetricShift);
    }
    let a_shift = -(lo + hi) / 2;
    for (&a, &c) in &chi {
        if chi.get(&(-a - 2 * a_shift)).copied().unwrap_or(0) != c {
            return Err(GradingsError::NoSymmetricShift);
        }
    }
    let total: i64 = chi.values().sum();
    if total != 1 {
        return Err(GradingsError::NonUnitAugmentation(total));
    }
    Ok((1..=p)
        .map(|i| GradedGenerator {
            index: i,
            alexander: rel.alexander[i] + a_shift,
            maslov: rel.maslov[i] + m_shift,
        })
        .collect())
}

/// Audit: the face above and below each open segment of the horizontal
/// curve must be assigned consistently at its two endpoints.
pub fn audit_faces(f: &Faces) -> Vec<usize> {
    let p = f.p();
    let mut bad = Vec::new();
    for v in 1..=p {
        let w = v % p + 1;
        if f.face_at(v, Quadrant::NE) != f.face_at(w, Quadrant::NW)
            || f.face_at(v, Quadrant::SE) != f.face_at(w, Quadrant::SW)
        {
            bad.push(v);
        }
    }
    bad
}
