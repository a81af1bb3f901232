//! Stage propagators e^{−iHΔt}.
//!
//! Closed forms cover the graphs the walk schedules are built from — the
//! singleton, K2, the 4-cycle and the 4-leaf star (the last two share the
//! spectrum {0, ±2} and hence one polynomial form). `propagate_general`
//! is the spectral-decomposition route and doubles as the independent
//! oracle for every closed form.

use num_complex::Complex64;

use crate::duration::Duration;
use crate::error::{Error, Result};
use crate::graph::{Graph, HermitianMatrix};
use crate::linalg::{symmetric_eigen, Matrix, UnitaryMatrix};
use crate::state::StateVector;

/// Default tolerance for perfect-state-transfer detection.
pub const DEFAULT_PST_TOL: f64 = 1e-9;

/// e^{−iHΔt} through the real-symmetric eigendecomposition U = V e^{−iΛt} Vᵀ.
pub fn propagate_general(h: &HermitianMatrix, dt: Duration) -> Result<UnitaryMatrix> {
    let n = h.dim();
    if dt.is_zero() {
        return Ok(UnitaryMatrix::identity(n));
    }
    let (values, vectors) = symmetric_eigen(h)?;
    let t = dt.value();
    let phases: Vec<Complex64> =
        values.iter().map(|&e| Complex64::cis(-e * t)).collect();
    let mut m = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::ZERO;
            for k in 0..n {
                acc += vectors[i * n + k] * phases[k] * vectors[j * n + k];
            }
            m.set(i, j, acc);
        }
    }
    UnitaryMatrix::try_new(m)
}

/// Singleton phase e^{−iΔt} (the self-loop convention).
pub fn propagate_k1(dt: Duration) -> UnitaryMatrix {
    let (s, c) = dt.sin_cos();
    let mut m = Matrix::zeros(1);
    m.set(0, 0, Complex64::new(c, -s));
    UnitaryMatrix::try_new(m).expect("a phase is unitary")
}

/// K2 propagator cos(Δt)·I − i·sin(Δt)·X.
pub fn propagate_k2(dt: Duration) -> UnitaryMatrix {
    let (s, c) = dt.sin_cos();
    let mut m = Matrix::zeros(2);
    m.set(0, 0, Complex64::new(c, 0.0));
    m.set(1, 1, Complex64::new(c, 0.0));
    m.set(0, 1, Complex64::new(0.0, -s));
    m.set(1, 0, Complex64::new(0.0, -s));
    UnitaryMatrix::try_new(m).expect("closed form is unitary")
}

/// Closed form for components with adjacency spectrum {0, ±2}:
/// U = I + (cos 2Δt − 1)·H²/4 − (i/2)·sin 2Δt·H.
fn spectrum_two_form(h: &HermitianMatrix, dt: Duration) -> Matrix {
    let n = h.dim();
    let (s2, c2) = dt.doubled().sin_cos();
    let h2 = h.matmul(h);
    let mut m = Matrix::identity(n);
    let quad = (c2 - 1.0) / 4.0;
    for i in 0..n {
        for j in 0..n {
            let mut v = m.get(i, j);
            v += Complex64::new(quad * h2[i * n + j], 0.0);
            v += Complex64::new(0.0, -0.5 * s2 * h.get(i, j));
            m.set(i, j, v);
        }
    }
    m
}

fn c4_graph() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("static graph")
}

fn star5_graph() -> Graph {
    Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).expect("static graph")
}

/// 4-cycle propagator on vertices 0..4; antipodal pairs are (0,3) and (1,2).
pub fn propagate_c4(dt: Duration) -> UnitaryMatrix {
    UnitaryMatrix::try_new(spectrum_two_form(&c4_graph().hamiltonian(), dt))
        .expect("closed form is unitary")
}

/// Star propagator on five vertices with the center at local vertex 0.
pub fn propagate_star5(dt: Duration) -> UnitaryMatrix {
    UnitaryMatrix::try_new(spectrum_two_form(&star5_graph().hamiltonian(), dt))
        .expect("closed form is unitary")
}

#[derive(Debug, PartialEq)]
enum ComponentShape {
    Singleton,
    Pair,
    SpectrumTwo, // 4-cycle or 4-leaf star
    General,
}

fn classify(g: &Graph, verts: &[usize]) -> ComponentShape {
    let degs: Vec<usize> = verts.iter().map(|&v| g.degree(v)).collect();
    match verts.len() {
        1 => ComponentShape::Singleton,
        2 if degs == [1, 1] => ComponentShape::Pair,
        4 if degs.iter().all(|&d| d == 2) => ComponentShape::SpectrumTwo,
        5 => {
            let centers = degs.iter().filter(|&&d| d == 4).count();
            let leaves = degs.iter().filter(|&&d| d == 1).count();
            if centers == 1 && leaves == 4 {
                ComponentShape::SpectrumTwo
            } else {
                ComponentShape::General
            }
        }
        _ => ComponentShape::General,
    }
}

fn component_hamiltonian(g: &Graph, verts: &[usize]) -> HermitianMatrix {
    let k = verts.len();
    let index = |v: usize| verts.iter().position(|&w| w == v).expect("member");
    let mut data = vec![0.0; k * k];
    for &(u, v) in g.edges() {
        if verts.contains(&u) && verts.contains(&v) {
            let (i, j) = (index(u), index(v));
            data[i * k + j] = 1.0;
            data[j * k + i] = 1.0;
        }
    }
    HermitianMatrix::new(k, data).expect("symmetric by construction")
}

/// Propagator for one stage graph, assembled per connected component with
/// closed forms where the shape allows and the spectral route otherwise.
pub fn propagate_stage(g: &Graph, dt: Duration) -> Result<UnitaryMatrix> {
    let n = g.vertex_count();
    if dt.is_zero() {
        return Ok(UnitaryMatrix::identity(n));
    }
    let mut m = Matrix::zeros(n);
    for comp in g.components() {
        let block: Matrix = match classify(g, &comp) {
            ComponentShape::Singleton => propagate_k1(dt).into_matrix(),
            ComponentShape::Pair => propagate_k2(dt).into_matrix(),
            ComponentShape::SpectrumTwo => {
                spectrum_two_form(&component_hamiltonian(g, &comp), dt)
            }
            ComponentShape::General => {
                propagate_general(&component_hamiltonian(g, &comp), dt)?.into_matrix()
            }
        };
        for (bi, &vi) in comp.iter().enumerate() {
            for (bj, &vj) in comp.iter().enumerate() {
                m.set(vi, vj, block.get(bi, bj));
            }
        }
    }
    UnitaryMatrix::try_new(m)
}

/// Apply a propagator to a state. The result is validated against the unit
/// norm but never renormalized; drift is a defect signal.
pub fn evolve(u: &UnitaryMatrix, s: &StateVector) -> Result<StateVector> {
    let amplitudes = u.matvec(s.amplitudes())?;
    StateVector::new(amplitudes)
}

/// Whether the walk on `g` transfers vertex `u` to vertex `v` at time `t`
/// with unit-magnitude amplitude (within `tol`); also returns the transfer
/// amplitude.
pub fn pst_check(
    g: &Graph,
    u: usize,
    v: usize,
    t: Duration,
    tol: f64,
) -> Result<(bool, Complex64)> {
    let n = g.vertex_count();
    if u >= n {
        return Err(Error::VertexOutOfRange { vertex: u, vertex_count: n });
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, vertex_count: n });
    }
    if u == v {
        return Err(Error::EqualPstVertices);
    }
    if tol <= 0.0 {
        return Err(Error::InvalidTolerance);
    }
    let prop = propagate_general(&g.hamiltonian(), t)?;
    let amp = prop.get(v, u);
    Ok((amp.norm() >= 1.0 - tol, amp))
}
