//! Dynamic graphs: timed sequences of stage graphs over a fixed vertex set.

use serde::{Deserialize, Serialize};

use crate::duration::Duration;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphRepr};
use crate::linalg::UnitaryMatrix;
use crate::propagator::{evolve, propagate_stage};
use crate::state::StateVector;

#[derive(Debug, Clone, PartialEq)]
pub struct Stage {
    pub graph: Graph,
    pub duration: Duration,
}

/// Ordered stage sequence; stage `ℓ` occupies the window starting at the
/// prefix sum of the earlier durations. Stage 0 acts first.
#[derive(Debug, Clone, PartialEq)]
pub struct DynamicGraph {
    vertex_count: usize,
    stages: Vec<Stage>,
}

impl DynamicGraph {
    pub fn new(vertex_count: usize, stages: Vec<(Graph, Duration)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        let mut out = Vec::with_capacity(stages.len());
        for (graph, duration) in stages {
            if graph.vertex_count() != vertex_count {
                return Err(Error::VertexCountMismatch {
                    left: vertex_count,
                    right: graph.vertex_count(),
                });
            }
            if duration.is_zero() {
                return Err(Error::NonPositiveDuration);
            }
            out.push(Stage { graph, duration });
        }
        Ok(DynamicGraph { vertex_count, stages: out })
    }

    /// Walk with no stages; its composite propagator is the identity.
    pub fn empty(vertex_count: usize) -> Result<Self> {
        DynamicGraph::new(vertex_count, vec![])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn total_duration(&self) -> f64 {
        self.stages.iter().map(|s| s.duration.value()).sum()
    }

    /// Cumulative transition times t_0 = 0, …, t_L.
    pub fn stage_boundaries(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.stages.len() + 1);
        let mut t = 0.0;
        out.push(t);
        for s in &self.stages {
            t += s.duration.value();
            out.push(t);
        }
        out
    }

    /// Same stage sequence over a larger vertex set; added vertices are
    /// isolated in every stage (and so only pick up singleton phases).
    pub fn embedded(&self, vertex_count: usize) -> Result<Self> {
        if vertex_count < self.vertex_count {
            return Err(Error::VertexCountMismatch {
                left: self.vertex_count,
                right: vertex_count,
            });
        }
        let stages = self
            .stages
            .iter()
            .map(|s| Ok((s.graph.embedded(vertex_count)?, s.duration)))
            .collect::<Result<Vec<_>>>()?;
        DynamicGraph::new(vertex_count, stages)
    }

    /// Stages of `self` followed by the stages of `other`.
    pub fn concatenate(&self, other: &DynamicGraph) -> Result<DynamicGraph> {
        if self.vertex_count != other.vertex_count {
            return Err(Error::VertexCountMismatch {
                left: self.vertex_count,
                right: other.vertex_count,
            });
        }
        let stages = self
            .stages
            .iter()
            .chain(&other.stages)
            .map(|s| (s.graph.clone(), s.duration))
            .collect();
        DynamicGraph::new(self.vertex_count, stages)
    }

    /// Ordered product of the stage propagators, stage 0 rightmost.
    pub fn composite_propagator(&self) -> Result<UnitaryMatrix> {
        let mut total = UnitaryMatrix::identity(self.vertex_count);
        for stage in &self.stages {
            let u = propagate_stage(&stage.graph, stage.duration)?;
            total = u.mul(&total)?;
        }
        Ok(total)
    }

    /// Vertex-probability trajectory on a per-stage uniform grid.
    ///
    /// Each stage contributes `samples_per_stage` samples starting at its
    /// entry time; the global endpoint is appended once. Within a stage the
    /// state is propagated from the stage-entry state, so samples at exact
    /// grid fractions reuse the rational-duration trig.
    pub fn evolve_dynamic(
        &self,
        s0: &StateVector,
        samples_per_stage: u32,
    ) -> Result<Trajectory> {
        if s0.dimension() != self.vertex_count {
            return Err(Error::DimensionMismatch {
                left: self.vertex_count,
                right: s0.dimension(),
            });
        }
        if samples_per_stage < 2 {
            return Err(Error::InvalidCircuit(
                "samples_per_stage must be at least 2".into(),
            ));
        }
        let mut times = Vec::new();
        let mut probabilities = Vec::new();
        let mut entry = s0.clone();
        let mut t0 = 0.0;
        for stage in &self.stages {
            for k in 0..samples_per_stage {
                let partial = stage.duration.fraction(k, samples_per_stage);
                let u = propagate_stage(&stage.graph, partial)?;
                let s = evolve(&u, &entry)?;
                times.push(t0 + partial.value());
                probabilities.push(s.probabilities());
            }
            let u = propagate_stage(&stage.graph, stage.duration)?;
            entry = evolve(&u, &entry)?;
            t0 += stage.duration.value();
        }
        times.push(t0);
        probabilities.push(entry.probabilities());
        Ok(Trajectory {
            sample_times: times,
            probabilities,
            stage_boundaries: self.stage_boundaries(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DynamicGraphRepr::from(self))
            .expect("dynamic graph serialization")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        let repr: DynamicGraphRepr = serde_json::from_str(s)?;
        repr.try_into()
            .map_err(|e: Error| serde::de::Error::custom(format!("invalid dynamic graph: {e}")))
    }
}

#[derive(Serialize, Deserialize)]
struct StageRepr {
    edges: Vec<(usize, usize)>,
    duration: Duration,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct DynamicGraphRepr {
    vertices: usize,
    stages: Vec<StageRepr>,
}

impl From<&DynamicGraph> for DynamicGraphRepr {
    fn from(dg: &DynamicGraph) -> Self {
        DynamicGraphRepr {
            vertices: dg.vertex_count,
            stages: dg
                .stages
                .iter()
                .map(|s| StageRepr { edges: s.graph.edges().to_vec(), duration: s.duration })
                .collect(),
        }
    }
}

impl TryFrom<DynamicGraphRepr> for DynamicGraph {
    type Error = Error;
    fn try_from(r: DynamicGraphRepr) -> Result<DynamicGraph> {
        let stages = r
            .stages
            .into_iter()
            .map(|s| {
                let g = Graph::try_from(GraphRepr { vertices: r.vertices, edges: s.edges })?;
                Ok((g, s.duration))
            })
            .collect::<Result<Vec<_>>>()?;
        DynamicGraph::new(r.vertices, stages)
    }
}

/// Sampled vertex probabilities along a walk.
#[derive(Debug, Clone)]
pub struct Trajectory {
    sample_times: Vec<f64>,
    probabilities: Vec<Vec<f64>>,
    stage_boundaries: Vec<f64>,
}

impl Trajectory {
    pub fn sample_times(&self) -> &[f64] {
        &self.sample_times
    }

    pub fn probabilities(&self) -> &[Vec<f64>] {
        &self.probabilities
    }

    pub fn stage_boundaries(&self) -> &[f64] {
        &self.stage_boundaries
    }

    /// CSV with header `t,p0,…,p{N−1}`, 15 significant digits, LF endings.
    pub fn to_csv(&self) -> String {
        let n = self.probabilities.first().map_or(0, Vec::len);
        let mut out = String::from("t");
        for j in 0..n {
            out.push_str(&format!(",p{j}"));
        }
        out.push('\n');
        for (t, row) in self.sample_times.iter().zip(&self.probabilities) {
            out.push_str(&format!("{t:.14e}"));
            for p in row {
                out.push_str(&format!(",{p:.14e}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn boundaries_json(&self) -> String {
        #[derive(Serialize)]
        struct Sidecar<'a> {
            stage_boundaries: &'a [f64],
        }
        serde_json::to_string_pretty(&Sidecar { stage_boundaries: &self.stage_boundaries })
            .expect("sidecar serialization")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use num_complex::Complex64;

    fn k2_graph(n: usize) -> Graph {
        Graph::new(n, &[(0, 1)]).unwrap()
    }

    fn pi(n: i64, d: i64) -> Duration {
        Duration::pi(n, d).unwrap()
    }

    #[test]
    fn rejects_mismatched_stage_graphs() {
        let err = DynamicGraph::new(3, vec![(k2_graph(2), pi(1, 2))]);
        assert!(matches!(err, Err(Error::VertexCountMismatch { .. })));
        let err = DynamicGraph::new(2, vec![(k2_graph(2), Duration::zero())]);
        assert!(matches!(err, Err(Error::NonPositiveDuration)));
    }

    #[test]
    fn bit_flip_schedule_is_exact() {
        // K2 for 3π/2 then singletons for π/2 composes to X with no phase
        let dg = DynamicGraph::new(
            2,
            vec![
                (k2_graph(2), pi(3, 2)),
                (Graph::empty(2).unwrap(), pi(1, 2)),
            ],
        )
        .unwrap();
        let u = dg.composite_propagator().unwrap();
        let mut x = Matrix::zeros(2);
        x.set(0, 1, Complex64::ONE);
        x.set(1, 0, Complex64::ONE);
        assert!(u.max_abs_diff(&x).unwrap() < 1e-15);
    }

    #[test]
    fn single_full_period_stage_is_identity() {
        let dg = DynamicGraph::new(2, vec![(k2_graph(2), pi(2, 1))]).unwrap();
        let u = dg.composite_propagator().unwrap();
        assert!(u.max_abs_diff(&Matrix::identity(2)).unwrap() < 1e-15);
    }

    #[test]
    fn split_stage_matches_semigroup() {
        let whole = DynamicGraph::new(2, vec![(k2_graph(2), pi(1, 2))]).unwrap();
        let split = DynamicGraph::new(
            2,
            vec![(k2_graph(2), pi(1, 4)), (k2_graph(2), pi(1, 4))],
        )
        .unwrap();
        let dev = whole
            .composite_propagator()
            .unwrap()
            .max_abs_diff(split.composite_propagator().unwrap().matrix())
            .unwrap();
        assert!(dev < 1e-15);
    }

    #[test]
    fn concatenate_orders_right_to_left() {
        let a = DynamicGraph::new(2, vec![(k2_graph(2), pi(3, 2))]).unwrap();
        let b = DynamicGraph::new(2, vec![(Graph::empty(2).unwrap(), pi(1, 2))]).unwrap();
        let ab = a.concatenate(&b).unwrap();
        let expect = b
            .composite_propagator()
            .unwrap()
            .mul(&a.composite_propagator().unwrap())
            .unwrap();
        let dev = ab
            .composite_propagator()
            .unwrap()
            .max_abs_diff(expect.matrix())
            .unwrap();
        assert!(dev < 1e-15);

        // concatenating with a zero-stage walk changes nothing
        let with_empty = a.concatenate(&DynamicGraph::empty(2).unwrap()).unwrap();
        assert_eq!(with_empty.stages().len(), 1);

        let four = DynamicGraph::empty(4).unwrap();
        assert!(matches!(
            a.concatenate(&four),
            Err(Error::VertexCountMismatch { .. })
        ));
    }

    #[test]
    fn trajectory_constant_then_swapping() {
        // two singletons for π/2, then K2 for 3π/2
        let dg = DynamicGraph::new(
            2,
            vec![
                (Graph::empty(2).unwrap(), pi(1, 2)),
                (k2_graph(2), pi(3, 2)),
            ],
        )
        .unwrap();
        let s0 = StateVector::new(vec![
            Complex64::new((1.0f64 / 3.0).sqrt(), 0.0),
            Complex64::new((2.0f64 / 3.0).sqrt(), 0.0),
        ])
        .unwrap();
        let tr = dg.evolve_dynamic(&s0, 6).unwrap();
        assert_eq!(tr.sample_times().len(), 13);
        // constant during the disconnected stage
        for k in 0..6 {
            assert!((tr.probabilities()[k][0] - 1.0 / 3.0).abs() < 1e-12);
            assert!((tr.probabilities()[k][1] - 2.0 / 3.0).abs() < 1e-12);
        }
        // swapped at K2-relative π/2 (sample index 6 + 2 since 3π/2 / 6 = π/4 steps)
        let row = &tr.probabilities()[8];
        assert!((row[0] - 2.0 / 3.0).abs() < 1e-12);
        assert!((row[1] - 1.0 / 3.0).abs() < 1e-12);
        // rows sum to one
        for row in tr.probabilities() {
            assert!((row.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
        // final sample equals the composite applied to s0
        let u = dg.composite_propagator().unwrap();
        let fin = evolve(&u, &s0).unwrap().probabilities();
        let last = tr.probabilities().last().unwrap();
        for (a, b) in last.iter().zip(fin) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn trajectory_of_basis_state_under_singleton() {
        let dg =
            DynamicGraph::new(1, vec![(Graph::new(1, &[]).unwrap(), pi(5, 4))]).unwrap();
        let tr = dg.evolve_dynamic(&StateVector::basis(1, 0).unwrap(), 4).unwrap();
        for row in tr.probabilities() {
            assert!((row[0] - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn json_round_trip_is_exact() {
        let dg = DynamicGraph::new(
            2,
            vec![
                (k2_graph(2), pi(3, 2)),
                (Graph::empty(2).unwrap(), Duration::raw(0.5235987755982988).unwrap()),
            ],
        )
        .unwrap();
        let j = dg.to_json();
        let back = DynamicGraph::from_json(&j).unwrap();
        assert_eq!(back, dg);
    }

    #[test]
    fn csv_shape() {
        let dg = DynamicGraph::new(2, vec![(k2_graph(2), pi(1, 2))]).unwrap();
        let tr = dg.evolve_dynamic(&StateVector::basis(2, 0).unwrap(), 2).unwrap();
        let csv = tr.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "t,p0,p1");
        assert_eq!(lines.count(), 3);
        assert!(csv.ends_with('\n') && !csv.contains('\r'));
    }
}
