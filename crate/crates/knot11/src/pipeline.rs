//! End-to-end analysis of a diagram.

use crate::algebra::F2Complex;
use crate::diagram::{
    beta_cycle, decode, validate, DiagramError, OneOneDiagram, RasmussenParams, Side,
};
use crate::floer::{differential, enumerate_bigons, d_squared_is_zero, Bigon, BoundaryTable, Mode};
use crate::geometry::{realize_with_drift_shift, GeometryError, Realization};
use crate::gradings::{
    calibrate, domain_fallback, faces, normalize, relative_gradings, DomainSolver,
    GradedGenerator, GradingsError,
};
use crate::invariants::{
    alexander_polynomial, cfk_table, hfk_table, poincare, seifert_genus, slice_report, tau,
    InvariantsError, LaurentPoly2, SliceReport,
};
use std::collections::BTreeMap;
use thiserror::Error;

pub const DEFAULT_WINDOW: u32 = 4;

/// Failures that indicate bad input (exit code 1).
#[derive(Debug, Error)]
pub enum InputError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("diagram is outside the supported normal form: {0}")]
    Realization(GeometryError),
}

/// Failures of internal consistency invariants (exit code 2).
#[derive(Debug, Error)]
pub enum ConsistencyError {
    #[error("bigon enumeration unstable: {0}")]
    WindowInstability(crate::floer::FloerError),
    #[error("differential does not square to zero in {0:?} mode")]
    DSquared(Mode),
    #[error(transparent)]
    Gradings(#[from] GradingsError),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
    #[error("trace failure: {0}")]
    Trace(GeometryError),
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Consistency(#[from] ConsistencyError),
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Input(_) => 1,
            PipelineError::Consistency(_) => 2,
        }
    }
}

/// Everything the pipeline computes for one diagram.
pub struct Analysis {
    pub params: Option<RasmussenParams>,
    pub diagram: OneOneDiagram,
    pub realization: Realization,
    pub beta_cycle: Vec<(usize, Side)>,
    pub bigons: Vec<Bigon>,
    pub hat_knot: BoundaryTable,
    pub hat_s3: BoundaryTable,
    pub full: BoundaryTable,
    pub gradings: Vec<GradedGenerator>,
    pub hfk: BTreeMap<(i64, i64), usize>,
    pub poincare: LaurentPoly2,
    pub alexander: BTreeMap<i64, i64>,
    pub genus: i64,
    pub tau: i64,
    pub cfk_rows: Vec<String>,
    pub slice: SliceReport,
    pub window: u32,
}

/// Run the full pipeline on decoded parameters.
pub fn analyze_params(params: RasmussenParams, window: u32) -> Result<Analysis, PipelineError> {
    let d = decode(params).map_err(InputError::from)?;
    analyze(d, Some(params), window, 0)
}

pub fn analyze_family(n: u32, window: u32) -> Result<Analysis, PipelineError> {
    analyze_params(crate::diagram::family_params(n), window)
}

/// Run the full pipeline on a validated diagram.
pub fn analyze(
    diagram: OneOneDiagram,
    params: Option<RasmussenParams>,
    window: u32,
    drift_shift: i64,
) -> Result<Analysis, PipelineError> {
    let report = validate(&diagram);
    if !report.ok {
        return Err(InputError::Diagram(DiagramError::Validity(report)).into());
    }
    let realization = realize_with_drift_shift(&diagram, drift_shift).map_err(|e| match e {
        GeometryError::InvalidDiagram => {
            InputError::Diagram(DiagramError::Validity(validate(&diagram)))
        }
        other => InputError::Realization(other),
    })?;
    let cycle = beta_cycle(&diagram).map_err(InputError::from)?;
    let p = diagram.p();

    // Enlarge the window until the enumeration stabilizes; a diagram with
    // larger disks than the default box simply needs a larger box, and the
    // stability check at window + 1 still gates every answer.
    let (bigons, window) = {
        let mut current = window;
        loop {
            match enumerate_bigons(&realization, &diagram, current) {
                Ok(b) => break (b, current),
                Err(crate::floer::FloerError::Geometry(g)) => {
                    return Err(ConsistencyError::Trace(g).into())
                }
                Err(unstable) => {
                    // Corner coordinates along the traced lift are bounded,
                    // so enumeration always stabilizes eventually; the
                    // ceiling only guards against runaway loops.
                    if current >= window + 64 {
                        return Err(ConsistencyError::WindowInstability(unstable).into());
                    }
                    current += 1;
                }
            }
        }
    };

    let hat_knot_t = differential(&bigons, Mode::HatKnot);
    let hat_s3_t = differential(&bigons, Mode::HatS3);
    let full_t = differential(&bigons, Mode::Full);
    for (mode, table) in
        [(Mode::HatKnot, &hat_knot_t), (Mode::HatS3, &hat_s3_t), (Mode::Full, &full_t)]
    {
        if !d_squared_is_zero(table, p) {
            return Err(ConsistencyError::DSquared(mode).into());
        }
    }

    // Gradings: propagate bigon equations, fall back to connecting domains
    // for stray components, then normalize.  The face solver is built and
    // calibrated only if a disconnected bigon graph actually needs it.
    let mut solver: Option<DomainSolver> = None;
    let rel = {
        let realization_ref = &realization;
        let diagram_ref = &diagram;
        let bigons_ref = &bigons;
        relative_gradings(&bigons, p, move |x, y| {
            if solver.is_none() {
                let face_data = faces(realization_ref, diagram_ref)?;
                let mut s = DomainSolver::new(face_data);
                calibrate(&mut s, bigons_ref)?;
                solver = Some(s);
            }
            domain_fallback(solver.as_mut().unwrap(), x, y)
        })
        .map_err(ConsistencyError::from)?
    };

    // Hat complex of the three-sphere: homology must be one-dimensional;
    // its relative Maslov label anchors the absolute grading.
    let s3_entries: Vec<(usize, usize)> =
        hat_s3_t.entries.iter().map(|&(from, to, _, _)| (from, to)).collect();
    let s3_plain = F2Complex::new(p, &s3_entries, None).map_err(ConsistencyError::from)?;
    let total = s3_plain.homology_dim();
    if total != 1 {
        return Err(ConsistencyError::Invariants(InvariantsError::InconsistentHomology(total))
            .into());
    }
    let survivor_label = survivor_maslov(&s3_plain, &rel.maslov)?;
    let gradings = normalize(&rel, survivor_label).map_err(ConsistencyError::from)?;

    // Filtered hat complex of the three-sphere for tau.
    let filtration: Vec<i64> = gradings.iter().map(|g| g.alexander).collect();
    let s3_filtered = F2Complex::new(p, &s3_entries, Some(filtration))
        .map_err(ConsistencyError::from)?;
    let tau_value = tau(&s3_filtered).map_err(ConsistencyError::from)?;

    // Hat knot complex and the headline invariants.
    let knot_entries: Vec<(usize, usize)> =
        hat_knot_t.entries.iter().map(|&(from, to, _, _)| (from, to)).collect();
    let hat_knot_c = F2Complex::new(p, &knot_entries, None).map_err(ConsistencyError::from)?;
    let hfk = hfk_table(&hat_knot_c, &gradings).map_err(ConsistencyError::from)?;
    let poly = poincare(&hfk);
    let alexander = alexander_polynomial(&poly).map_err(ConsistencyError::from)?;
    let genus = seifert_genus(&hfk);
    let cfk_rows = cfk_table(&full_t, &gradings);
    let slice = slice_report(&alexander, tau_value, params.and_then(|p| p.n));

    Ok(Analysis {
        params,
        diagram,
        realization,
        beta_cycle: cycle,
        bigons,
        hat_knot: hat_knot_t,
        hat_s3: hat_s3_t,
        full: full_t,
        gradings,
        hfk,
        poincare: poly,
        alexander,
        genus,
        tau: tau_value,
        cfk_rows,
        slice,
        window,
    })
}

/// Relative Maslov label at which the one-dimensional homology survives.
fn survivor_maslov(c: &F2Complex, maslov_rel: &[i64]) -> Result<i64, ConsistencyError> {
    let labels: Vec<(i64, i64)> = c.names().iter().map(|&i| (maslov_rel[i], 0)).collect();
    let dims = crate::algebra::homology_dims(c, &labels, (1, 0))?;
    let mut nonzero = dims.iter().filter(|&(_, &d)| d > 0);
    match (nonzero.next(), nonzero.next()) {
        (Some((&(m, _), &1)), None) => Ok(m),
        _ => Err(ConsistencyError::Invariants(InvariantsError::InconsistentHomology(
            dims.values().sum(),
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_analysis() {
        let a = analyze_params(RasmussenParams::new(1, 0, 0, 0), 4).unwrap();
        assert_eq!(a.tau, 0);
        assert_eq!(a.genus, 0);
        assert_eq!(a.hfk.get(&(0, 0)), Some(&1));
        assert!(a.slice.conway_trivial);
        assert!(!a.slice.smoothly_slice_obstructed);
    }

    #[test]
    fn family_zero_headline() {
        let a = analyze_family(0, 4).unwrap();
        assert_eq!(a.tau, 1);
        assert_eq!(a.genus, 2);
        assert_eq!(a.hfk.values().sum::<usize>(), 31);
        assert!(a.hat_knot.entries.is_empty());
        assert!(a.slice.conway_trivial);
        assert!(a.slice.smoothly_slice_obstructed);
        assert_eq!(a.slice.g4_lower_bound, 1);
        assert_eq!(a.slice.g4_family_note, Some(1));
    }

    #[test]
    fn bad_params_is_input_error() {
        match analyze_params(RasmussenParams::new(31, 12, 6, 17), 4) {
            Err(err) => assert_eq!(err.exit_code(), 1),
            Ok(_) => panic!("offset out of range must be rejected"),
        }
    }

    #[test]
    fn small_example_consistent() {
        let a = analyze_params(RasmussenParams::new(5, 2, 0, 4), 4).unwrap();
        // the five-crossing diagram: genus-one knot with determinant 5
        assert_eq!(a.hfk.values().sum::<usize>(), 5);
        let det: i64 = a.alexander.iter().map(|(&a, &c)| if a % 2 == 0 { c } else { -c }).sum();
        assert_eq!(det.abs() % 2, 1);
        assert_eq!(a.alexander.values().sum::<i64>(), 1);
    }

    #[test]
    fn trefoil_like() {
        let a = analyze_params(RasmussenParams::new(3, 1, 0, 2), 4).unwrap();
        assert_eq!(a.hfk.values().sum::<usize>(), 3);
        assert_eq!(a.genus, 1);
        assert_eq!(a.tau.abs(), 1);
    }
}
