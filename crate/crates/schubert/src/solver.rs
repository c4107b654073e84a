//! Random instances, Newton refinement, and a total-degree homotopy tracker
//! for desk-scale systems: start system x_e^(d_e) = c_e, convex deformation
//! with a random unit rotation, Euler prediction and Newton correction with
//! adaptive steps. No projective endgame; paths leaving a norm ball are
//! discarded as divergent.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::combinatorics::SchubertProblem;
use crate::error::{Error, Result};
use crate::eval::{evaluate, jacobian};
use crate::exact::GaussRat;
use crate::matrix::Mat;
use crate::systems::{InstanceField, ProblemInstance, SquareSystem};
use crate::patterns::FlagMatrix;

/// Tracker parameters. Everything that influences a run is recorded here so
/// runs are reproducible from (system, config, seed).
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TrackerConfig {
    pub initial_step: f64,
    pub min_step: f64,
    pub step_growth: f64,
    pub step_shrink: f64,
    pub corrector_iters: usize,
    pub corrector_tol: f64,
    pub divergence_norm: f64,
    pub refine_iters: usize,
    pub refine_target: f64,
    pub dedup_tol: f64,
    pub bezout_ceiling: u128,
}

impl Default for TrackerConfig {
    fn default() -> Self {
        TrackerConfig {
            initial_step: 0.05,
            min_step: 1e-9,
            step_growth: 1.7,
            step_shrink: 0.4,
            corrector_iters: 3,
            corrector_tol: 1e-10,
            divergence_norm: 1e8,
            refine_iters: 16,
            refine_target: 1e-12,
            dedup_tol: 1e-6,
            bezout_ceiling: 10_000,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub enum PathStatus {
    Converged,
    DivergedToInfinity,
    StepFailure,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    /// Deduplicated converged endpoints after final refinement.
    pub solutions: Vec<Vec<Complex64>>,
    pub statuses: Vec<PathStatus>,
    pub paths: u128,
    pub seed: u64,
}

impl SolveResult {
    pub fn count(&self, status: PathStatus) -> usize {
        self.statuses.iter().filter(|&&s| s == status).count()
    }
}

/// Sample a full-rank integer flag matrix; entries uniform in
/// [-scale, scale], Gaussian integers in the complex field.
fn random_flag(rng: &mut ChaCha12Rng, n: usize, field: InstanceField, scale: i64) -> Result<FlagMatrix> {
    for _ in 0..16 {
        let m = Mat::from_fn(n, n, |_, _| {
            let re = rng.gen_range(-scale..=scale);
            let im = match field {
                InstanceField::Real => 0,
                InstanceField::Complex => rng.gen_range(-scale..=scale),
            };
            GaussRat::from_int_pair(re, im)
        });
        match FlagMatrix::new(m) {
            Ok(f) => return Ok(f),
            Err(Error::SingularFlag) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SingularFlag)
}

/// Generate one flag per condition, deterministically in the seed. Indices
/// appearing as the second member of a pair receive the row reversal of
/// their partner's matrix, making the two flags exactly opposite.
pub fn random_instance(
    problem: &SchubertProblem,
    pairing: &[(usize, usize)],
    seed: u64,
    field: InstanceField,
    scale: i64,
) -> Result<ProblemInstance> {
    problem.validate()?;
    let n = problem.space().n();
    let s = problem.num_conditions();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let second: Vec<Option<usize>> = {
        let mut v = vec![None; s];
        for &(i, j) in pairing {
            v[j] = Some(i);
        }
        v
    };
    let mut flags: Vec<Option<FlagMatrix>> = vec![None; s];
    for i in 0..s {
        if second[i].is_none() {
            flags[i] = Some(random_flag(&mut rng, n, field, scale)?);
        }
    }
    for i in 0..s {
        if let Some(leader) = second[i] {
            let f = flags[leader].as_ref().expect("leader generated first");
            flags[i] = Some(f.reversed_rows()?);
        }
    }
    Ok(ProblemInstance {
        problem: problem.clone(),
        flags: flags.into_iter().map(|f| f.unwrap()).collect(),
        pairing: pairing.to_vec(),
        seed,
        field,
    })
}

pub fn max_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn norm2(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[derive(Clone, Debug)]
pub struct NewtonReport {
    pub residual_norms: Vec<f64>,
    pub step_norms: Vec<f64>,
    pub converged: bool,
}

/// Newton iteration x <- x - DG(x)^{-1} G(x) until the residual reaches
/// `target`, the iteration cap, or a singular Jacobian.
pub fn newton_refine(
    sys: &SquareSystem,
    point: &[Complex64],
    max_iters: usize,
    target: f64,
) -> Result<(Vec<Complex64>, NewtonReport)> {
    let mut x = point.to_vec();
    let mut report = NewtonReport {
        residual_norms: Vec::new(),
        step_norms: Vec::new(),
        converged: false,
    };
    for _ in 0..=max_iters {
        let res = evaluate(sys, &x)?;
        let rnorm = norm2(&res);
        report.residual_norms.push(rnorm);
        if rnorm <= target {
            report.converged = true;
            return Ok((x, report));
        }
        if report.step_norms.len() >= max_iters {
            break;
        }
        let jac = jacobian(sys, &x)?;
        let rhs = Mat::from_fn(res.len(), 1, |r, _| res[r]);
        let delta = jac.solve(&rhs)?;
        let mut step = 0.0;
        for (i, xi) in x.iter_mut().enumerate() {
            let d = delta[(i, 0)];
            *xi -= d;
            step += d.norm_sqr();
        }
        report.step_norms.push(step.sqrt());
    }
    Ok((x, report))
}

struct Homotopy<'a> {
    sys: &'a SquareSystem,
    degrees: Vec<usize>,
    start_consts: Vec<Complex64>,
    gamma: Complex64,
}

impl Homotopy<'_> {
    /// H(x, t) = (1-t) gamma (x_e^{d_e} - c_e) + t F(x)
    fn eval(&self, x: &[Complex64], t: f64) -> Result<Vec<Complex64>> {
        let f = evaluate(self.sys, x)?;
        let mut out = Vec::with_capacity(f.len());
        for e in 0..f.len() {
            let g = x[e].powu(self.degrees[e] as u32) - self.start_consts[e];
            out.push(self.gamma * (1.0 - t) * g + t * f[e]);
        }
        Ok(out)
    }

    fn jac(&self, x: &[Complex64], t: f64) -> Result<Mat<Complex64>> {
        let mut j = jacobian(self.sys, x)?;
        for r in 0..j.rows {
            for c in 0..j.cols {
                j[(r, c)] *= t;
            }
        }
        for e in 0..j.rows {
            let d = self.degrees[e] as f64;
            let dg = d * x[e].powu(self.degrees[e] as u32 - 1);
            j[(e, e)] += self.gamma * (1.0 - t) * dg;
        }
        Ok(j)
    }

    /// dH/dt = F(x) - gamma G(x)
    fn dt(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        let f = evaluate(self.sys, x)?;
        let mut out = Vec::with_capacity(f.len());
        for e in 0..f.len() {
            let g = x[e].powu(self.degrees[e] as u32) - self.start_consts[e];
            out.push(f[e] - self.gamma * g);
        }
        Ok(out)
    }
}

fn track_path(
    h: &Homotopy<'_>,
    start: Vec<Complex64>,
    cfg: &TrackerConfig,
) -> (PathStatus, Option<Vec<Complex64>>) {
    let mut x = start;
    let mut t = 0.0_f64;
    let mut dt = cfg.initial_step;
    while t < 1.0 {
        if max_norm(&x) > cfg.divergence_norm {
            return (PathStatus::DivergedToInfinity, None);
        }
        if dt < cfg.min_step {
            return (PathStatus::StepFailure, None);
        }
        let t_next = (t + dt).min(1.0);
        // Euler predictor: dx = -H_x^{-1} H_t (t_next - t)
        let predicted = (|| -> Result<Vec<Complex64>> {
            let jx = h.jac(&x, t)?;
            let ht = h.dt(&x)?;
            let rhs = Mat::from_fn(ht.len(), 1, |r, _| ht[r]);
            let dx = jx.solve(&rhs)?;
            Ok(x.iter()
                .enumerate()
                .map(|(i, xi)| xi - dx[(i, 0)] * (t_next - t))
                .collect())
        })();
        let Ok(mut y) = predicted else {
            dt *= cfg.step_shrink;
            continue;
        };
        // Newton corrector at t_next
        let mut ok = false;
        for _ in 0..cfg.corrector_iters {
            let Ok(res) = h.eval(&y, t_next) else { break };
            let scale = 1.0_f64.max(max_norm(&y));
            if norm2(&res) <= cfg.corrector_tol * scale {
                ok = true;
                break;
            }
            let Ok(jx) = h.jac(&y, t_next) else { break };
            let rhs = Mat::from_fn(res.len(), 1, |r, _| res[r]);
            let Ok(delta) = jx.solve(&rhs) else { break };
            for (i, yi) in y.iter_mut().enumerate() {
                *yi -= delta[(i, 0)];
            }
        }
        // accept only if the corrector actually converged
        if ok {
            if let Ok(res) = h.eval(&y, t_next) {
                let scale = 1.0_f64.max(max_norm(&y));
                if norm2(&res) <= cfg.corrector_tol * scale * 10.0 {
                    x = y;
                    t = t_next;
                    dt = (dt * cfg.step_growth).min(0.1);
                    continue;
                }
            }
        }
        dt *= cfg.step_shrink;
    }
    (PathStatus::Converged, Some(x))
}

/// Total Bezout path count, erroring above the configured ceiling.
pub fn bezout_count(sys: &SquareSystem, ceiling: u128) -> Result<u128> {
    let mut paths: u128 = 1;
    for d in sys.equation_degrees() {
        if d == 0 {
            return Err(Error::DegenerateInstance(
                "an equation has no variable dependence".into(),
            ));
        }
        paths = paths.saturating_mul(d as u128);
        if paths > ceiling {
            return Err(Error::BezoutCeilingExceeded { paths, ceiling });
        }
    }
    Ok(paths)
}

/// Track all total-degree paths. Deterministic in (system, config, seed);
/// paths are independent and run on the rayon pool.
pub fn solve_total_degree(
    sys: &SquareSystem,
    cfg: &TrackerConfig,
    seed: u64,
) -> Result<SolveResult> {
    if sys.total_variables == 0 {
        // the empty point is the unique solution of a 0 x 0 system
        return Ok(SolveResult {
            solutions: vec![Vec::new()],
            statuses: vec![PathStatus::Converged],
            paths: 1,
            seed,
        });
    }
    let degrees = sys.equation_degrees();
    let paths = bezout_count(sys, cfg.bezout_ceiling)?;

    let mut rng = ChaCha12Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let gamma = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
    let start_consts: Vec<Complex64> = (0..degrees.len())
        .map(|_| Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU)))
        .collect();
    let h = Homotopy { sys, degrees: degrees.clone(), start_consts: start_consts.clone(), gamma };

    let results: Vec<(PathStatus, Option<Vec<Complex64>>)> = (0..paths as u64)
        .into_par_iter()
        .map(|p| {
            // mixed-radix digits pick one root of each start equation
            let mut digits = Vec::with_capacity(degrees.len());
            let mut rem = p as u128;
            for &d in &degrees {
                digits.push((rem % d as u128) as u32);
                rem /= d as u128;
            }
            let start: Vec<Complex64> = (0..degrees.len())
                .map(|e| {
                    let d = degrees[e] as f64;
                    let root = start_consts[e].powf(1.0 / d);
                    let spin =
                        Complex64::from_polar(1.0, std::f64::consts::TAU * digits[e] as f64 / d);
                    root * spin
                })
                .collect();
            let (status, endpoint) = track_path(&h, start, cfg);
            match (status, endpoint) {
                (PathStatus::Converged, Some(x)) => {
                    match newton_refine(sys, &x, cfg.refine_iters, cfg.refine_target) {
                        Ok((refined, report)) if report.converged => {
                            (PathStatus::Converged, Some(refined))
                        }
                        _ => (PathStatus::StepFailure, None),
                    }
                }
                other => other,
            }
        })
        .collect();

    let statuses: Vec<PathStatus> = results.iter().map(|(s, _)| *s).collect();
    let mut solutions: Vec<Vec<Complex64>> = Vec::new();
    for (_, endpoint) in results {
        let Some(x) = endpoint else { continue };
        let dup = solutions
            .iter()
            .any(|y| x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) < cfg.dedup_tol);
        if !dup {
            solutions.push(x);
        }
    }
    Ok(SolveResult { solutions, statuses, paths, seed })
}

/// Conjugation closure check used for real instances: every solution's
/// conjugate matches some solution within the tolerance.
pub fn closed_under_conjugation(solutions: &[Vec<Complex64>], tol: f64) -> bool {
    solutions.iter().all(|x| {
        let conj: Vec<Complex64> = x.iter().map(|z| z.conj()).collect();
        solutions.iter().any(|y| {
            conj.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) < tol
        })
    })
}
