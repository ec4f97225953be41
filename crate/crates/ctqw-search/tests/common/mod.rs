//! Independent numerical oracles for cross-checking the library.
//!
//! Nothing here calls into the crate's spectral or evolution code: the RK4
//! integrator solves the Schrödinger equation by time-stepping, power
//! iteration and the cyclic Jacobi sweep find spectra by entirely different
//! algorithms than the LAPACK-backed production path. Agreement between the
//! two routes is what the integration suites assert.

#![allow(dead_code)] // each test binary uses a subset of the oracles

use ndarray::{Array1, Array2};

/// Real/imaginary state pair for the ODE integrator.
#[derive(Debug, Clone)]
pub struct OdeState {
    pub re: Array1<f64>,
    pub im: Array1<f64>,
}

impl OdeState {
    pub fn real(v: &Array1<f64>) -> OdeState {
        OdeState {
            re: v.clone(),
            im: Array1::zeros(v.len()),
        }
    }

    pub fn probability(&self, vertex: usize) -> f64 {
        self.re[vertex].powi(2) + self.im[vertex].powi(2)
    }

    pub fn norm_sq(&self) -> f64 {
        self.re.dot(&self.re) + self.im.dot(&self.im)
    }
}

/// Derivative of ψ = x + iy under iψ' = Hψ: x' = H·y, y' = −H·x.
fn schrodinger_rhs(h: &Array2<f64>, s: &OdeState) -> OdeState {
    OdeState {
        re: h.dot(&s.im),
        im: -h.dot(&s.re),
    }
}

fn axpy(s: &OdeState, k: &OdeState, f: f64) -> OdeState {
    OdeState {
        re: &s.re + &(&k.re * f),
        im: &s.im + &(&k.im * f),
    }
}

/// Classic fixed-step 4th-order Runge–Kutta integration of the Schrödinger
/// equation up to time `t` (handles the ragged final step).
pub fn rk4_evolve(h: &Array2<f64>, initial: &OdeState, t: f64, dt: f64) -> OdeState {
    assert!(dt > 0.0 && t >= 0.0);
    let mut state = initial.clone();
    let mut remaining = t;
    while remaining > 1e-15 {
        let step = dt.min(remaining);
        let k1 = schrodinger_rhs(h, &state);
        let k2 = schrodinger_rhs(h, &axpy(&state, &k1, step / 2.0));
        let k3 = schrodinger_rhs(h, &axpy(&state, &k2, step / 2.0));
        let k4 = schrodinger_rhs(h, &axpy(&state, &k3, step));
        state = OdeState {
            re: &state.re
                + &((&k1.re + &(&k2.re * 2.0) + &(&k3.re * 2.0) + &k4.re) * (step / 6.0)),
            im: &state.im
                + &((&k1.im + &(&k2.im * 2.0) + &(&k3.im * 2.0) + &k4.im) * (step / 6.0)),
        };
        remaining -= step;
    }
    state
}

/// Integrate once, sampling the state at each requested time (times must be
/// non-decreasing).
pub fn rk4_evolve_at(
    h: &Array2<f64>,
    initial: &OdeState,
    times: &[f64],
    dt: f64,
) -> Vec<OdeState> {
    let mut out = Vec::with_capacity(times.len());
    let mut state = initial.clone();
    let mut now = 0.0;
    for &t in times {
        assert!(t >= now, "times must be non-decreasing");
        state = rk4_evolve(h, &state, t - now, dt);
        now = t;
        out.push(state.clone());
    }
    out
}

/// Power iteration for the eigenvalue of largest magnitude of a symmetric
/// matrix; returns (Rayleigh quotient, unit vector). Converges when
/// successive estimates differ by less than `tol`.
pub fn power_iteration(a: &Array2<f64>, tol: f64, max_iter: usize) -> (f64, Array1<f64>) {
    let n = a.nrows();
    // Deterministic, mildly irregular start vector with nonzero overlap
    // against anything reasonable.
    let mut v = Array1::from_shape_fn(n, |i| 1.0 + 0.123 * ((i * 2654435761) % 97) as f64 / 97.0);
    let mut norm = v.dot(&v).sqrt();
    v.mapv_inplace(|x| x / norm);
    let mut lambda = 0.0;
    for _ in 0..max_iter {
        let w = a.dot(&v);
        norm = w.dot(&w).sqrt();
        if norm == 0.0 {
            return (0.0, v);
        }
        let next = w.mapv(|x| x / norm);
        let rayleigh = next.dot(&a.dot(&next));
        let done = (rayleigh - lambda).abs() < tol;
        lambda = rayleigh;
        v = next;
        if done {
            break;
        }
    }
    (lambda, v)
}

/// Spectral norm oracle: largest |eigenvalue| via power iteration.
pub fn opnorm_oracle(a: &Array2<f64>, tol: f64) -> f64 {
    power_iteration(a, tol, 100_000).0.abs()
}

/// Cyclic Jacobi eigenvalue sweep for small symmetric matrices; returns all
/// eigenvalues sorted descending. O(n³) per sweep — intended for n ≤ 128.
pub fn jacobi_eigenvalues(a: &Array2<f64>) -> Vec<f64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    let mut m = a.clone();
    let scale: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += m[[p, q]] * m[[p, q]];
            }
        }
        if off.sqrt() < 1e-12 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[[p, q]];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = (m[[q, q]] - m[[p, p]]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[[k, p]];
                    let mkq = m[[k, q]];
                    m[[k, p]] = c * mkp - s * mkq;
                    m[[k, q]] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[[p, k]];
                    let mqk = m[[q, k]];
                    m[[p, k]] = c * mpk - s * mqk;
                    m[[q, k]] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| m[[i, i]]).collect();
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    vals
}
