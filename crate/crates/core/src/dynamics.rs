//! Time evolution of the atom pair under collective spontaneous emission.
//!
//! Three routes are provided and cross-checked against each other:
//!
//! - [`evolve_analytic`]: the exponential solutions for identical atoms.
//! - [`evolve_block_ode`]: numerical integration of the equations of motion
//!   in the collective basis. Covers detuned atoms and the small-sample
//!   point `Γ12 = Γ`.
//! - [`evolve_full_master`]: integration of the master equation for the full
//!   4×4 density matrix in the product basis, with no assumption on the
//!   block structure.
//!
//! The Hamiltonian used by the full master equation is
//! `Σ ωi S^z_i − Ω12 (S+_1 S-_2 + S+_2 S-_1)` with `ω1,2 = ω0 ∓ Δ`. With
//! `S^z = (|e⟩⟨e| − |g⟩⟨g|)/2` this sign of the exchange term is the one that
//! reproduces the collective equations of motion term by term:
//!
//! ```text
//! ρ̇ee = −2Γ ρee
//! ρ̇eg = −(Γ + 2iω0) ρeg
//! ρ̇ss = −(Γ+Γ12)(ρss − ρee) + iΔ(ρas − ρsa)
//! ρ̇aa = −(Γ−Γ12)(ρaa − ρee) − iΔ(ρas − ρsa)
//! ρ̇as = −(Γ + 2iΩ12) ρas + iΔ(ρss − ρaa)
//! ```

use nalgebra::{Matrix4, SMatrix, SVector};
use num_complex::Complex64;

use crate::couplings::CouplingRates;
use crate::error::{Error, Result};
use crate::ode::Dopri5;
use crate::statespace::{CollectiveState, DensityMatrix4, EE, EG, GE, GG};

/// Width of the exclusion zone around `Γ12 = ±Γ` for the closed-form
/// solution with a populated doubly excited state.
pub const EPS_DICKE: f64 = 1e-8;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomPairParams {
    pub gamma: f64,
    pub gamma12: f64,
    pub omega12: f64,
    /// Half the transition-frequency difference, `(ω2 − ω1)/2`.
    pub delta: f64,
    /// Mean transition frequency; zero means the rotating frame.
    pub omega0: f64,
}

impl AtomPairParams {
    pub fn new(rates: CouplingRates, delta: f64) -> Self {
        Self {
            gamma: rates.gamma,
            gamma12: rates.gamma12,
            omega12: rates.omega12,
            delta,
            omega0: 0.0,
        }
    }

    pub fn identical(gamma: f64, gamma12: f64, omega12: f64) -> Self {
        Self {
            gamma,
            gamma12,
            omega12,
            delta: 0.0,
            omega0: 0.0,
        }
    }

    pub fn with_delta(self, delta: f64) -> Self {
        Self { delta, ..self }
    }

    pub fn with_omega0(self, omega0: f64) -> Self {
        Self { omega0, ..self }
    }

    pub fn rates(&self) -> CouplingRates {
        CouplingRates {
            gamma: self.gamma,
            gamma12: self.gamma12,
            omega12: self.omega12,
        }
    }

    pub fn check(&self) -> Result<()> {
        let all = [self.gamma, self.gamma12, self.omega12, self.delta, self.omega0];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::Invalid("atom-pair parameters must be finite".into()));
        }
        if self.gamma <= 0.0 {
            return Err(Error::Invalid(format!("gamma must be positive, got {}", self.gamma)));
        }
        if self.gamma12.abs() > self.gamma * (1.0 + 1e-12) {
            return Err(Error::Invalid(format!(
                "|gamma12| = {} exceeds gamma = {}",
                self.gamma12.abs(),
                self.gamma
            )));
        }
        Ok(())
    }

    /// True when the closed-form prefactors `(Γ±Γ12)/(Γ∓Γ12)` are unusable.
    pub fn near_dicke_point(&self) -> bool {
        (self.gamma - self.gamma12).abs() < EPS_DICKE * self.gamma
            || (self.gamma + self.gamma12).abs() < EPS_DICKE * self.gamma
    }
}

/// Uniformly spaced sample times, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_start: f64,
    t_end: f64,
    n_points: usize,
}

impl TimeGrid {
    /// A grid needs `t_start ≥ 0` and either `t_end > t_start` with at least
    /// two points, or `t_end == t_start` with exactly one point.
    pub fn new(t_start: f64, t_end: f64, n_points: usize) -> Result<Self> {
        if !(t_start.is_finite() && t_end.is_finite()) || t_start < 0.0 {
            return Err(Error::Invalid(format!("invalid time range [{t_start}, {t_end}]")));
        }
        let ok = if t_end == t_start {
            n_points == 1
        } else {
            t_end > t_start && n_points >= 2
        };
        if !ok {
            return Err(Error::Invalid(format!(
                "time grid [{t_start}, {t_end}] with {n_points} points"
            )));
        }
        Ok(Self {
            t_start,
            t_end,
            n_points,
        })
    }

    pub fn single(t: f64) -> Result<Self> {
        Self::new(t, t, 1)
    }

    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn times(&self) -> Vec<f64> {
        if self.n_points == 1 {
            return vec![self.t_start];
        }
        let last = (self.n_points - 1) as f64;
        (0..self.n_points)
            .map(|k| {
                if k + 1 == self.n_points {
                    self.t_end
                } else {
                    self.t_start + (self.t_end - self.t_start) * (k as f64 / last)
                }
            })
            .collect()
    }
}

/// Closed-form state at time `t` for identical atoms (`Δ = 0`).
pub fn evolve_analytic(c0: &CollectiveState, p: &AtomPairParams, t: f64) -> Result<CollectiveState> {
    p.check()?;
    if p.delta != 0.0 {
        return Err(Error::Invalid(
            "closed-form evolution requires identical atoms (delta = 0)".into(),
        ));
    }
    if c0.ree > 0.0 && p.near_dicke_point() {
        return Err(Error::DickeSingularity {
            gamma: p.gamma,
            gamma12: p.gamma12,
        });
    }
    let g = p.gamma;
    let plus = g + p.gamma12;
    let minus = g - p.gamma12;
    let e_plus = (-plus * t).exp();
    let e_minus = (-minus * t).exp();
    let e_two = (-2.0 * g * t).exp();

    let ree = c0.ree * e_two;
    let mut rss = c0.rss * e_plus;
    let mut raa = c0.raa * e_minus;
    if c0.ree != 0.0 {
        rss += c0.ree * plus / minus * (e_plus - e_two);
        raa += c0.ree * minus / plus * (e_minus - e_two);
    }
    let reg = c0.reg * (-Complex64::new(g, 2.0 * p.omega0) * t).exp();
    let ras = c0.ras * (-Complex64::new(g, 2.0 * p.omega12) * t).exp();
    Ok(CollectiveState::from_excited(ree, rss, raa, reg, ras))
}

/// [`evolve_analytic`] at every time of `grid`.
pub fn evolve_analytic_grid(c0: &CollectiveState, p: &AtomPairParams, grid: &TimeGrid) -> Result<Vec<CollectiveState>> {
    grid.times().into_iter().map(|t| evolve_analytic(c0, p, t)).collect()
}

fn collective_to_vec(c: &CollectiveState) -> [f64; 7] {
    [c.ree, c.reg.re, c.reg.im, c.rss, c.raa, c.ras.re, c.ras.im]
}

fn collective_from_vec(y: &[f64; 7]) -> CollectiveState {
    CollectiveState::from_excited(
        y[0],
        y[3],
        y[4],
        Complex64::new(y[1], y[2]),
        Complex64::new(y[5], y[6]),
    )
}

/// Right-hand side of the collective equations of motion.
pub fn collective_rhs(p: &AtomPairParams, c: &CollectiveState) -> CollectiveState {
    let g = p.gamma;
    // iΔ(ρas − ρsa) = iΔ·2i·Im ρas
    let transfer = -2.0 * p.delta * c.ras.im;
    let ree = -2.0 * g * c.ree;
    let rss = -(g + p.gamma12) * (c.rss - c.ree) + transfer;
    let raa = -(g - p.gamma12) * (c.raa - c.ree) - transfer;
    CollectiveState {
        rgg: -(ree + rss + raa),
        ree,
        rss,
        raa,
        reg: -Complex64::new(g, 2.0 * p.omega0) * c.reg,
        ras: -Complex64::new(g, 2.0 * p.omega12) * c.ras + I * p.delta * (c.rss - c.raa),
    }
}

pub fn evolve_block_ode(c0: &CollectiveState, p: &AtomPairParams, grid: &TimeGrid) -> Result<Vec<CollectiveState>> {
    evolve_block_ode_with(&Dopri5::default(), c0, p, grid)
}

pub fn evolve_block_ode_with(
    solver: &Dopri5,
    c0: &CollectiveState,
    p: &AtomPairParams,
    grid: &TimeGrid,
) -> Result<Vec<CollectiveState>> {
    p.check()?;
    let times = grid.times();
    // The integration starts at the first grid time with c0 as the state there.
    let ys = solver.solve(
        |_, y: &[f64; 7], dy| {
            let d = collective_rhs(p, &collective_from_vec(y));
            *dy = collective_to_vec(&d);
        },
        collective_to_vec(c0),
        &times,
    )?;
    Ok(ys.iter().map(collective_from_vec).collect())
}

/// Operators of the master equation in the product basis.
struct MasterGenerator {
    hamiltonian: Matrix4<Complex64>,
    /// `(Γij, S+_i S-_j, S-_j, S+_i)`
    channels: Vec<(f64, Matrix4<Complex64>, Matrix4<Complex64>, Matrix4<Complex64>)>,
}

fn ket_bra(i: usize, j: usize) -> Matrix4<Complex64> {
    let mut m = Matrix4::zeros();
    m[(i, j)] = Complex64::new(1.0, 0.0);
    m
}

/// Lowering operators `S-_1`, `S-_2` in the product basis.
pub fn lowering_operators() -> [Matrix4<Complex64>; 2] {
    [
        ket_bra(GG, EG) + ket_bra(GE, EE),
        ket_bra(GG, GE) + ket_bra(EG, EE),
    ]
}

/// Energy operators `S^z_1`, `S^z_2` (eigenvalue `+½` when excited).
pub fn energy_operators() -> [Matrix4<Complex64>; 2] {
    let half = |excited: [usize; 2], ground: [usize; 2]| {
        let mut m = Matrix4::zeros();
        for k in excited {
            m[(k, k)] = Complex64::new(0.5, 0.0);
        }
        for k in ground {
            m[(k, k)] = Complex64::new(-0.5, 0.0);
        }
        m
    };
    [half([EE, EG], [GG, GE]), half([EE, GE], [GG, EG])]
}

impl MasterGenerator {
    fn new(p: &AtomPairParams) -> Self {
        let lower = lowering_operators();
        let raise = lower.map(|l| l.adjoint());
        let [sz1, sz2] = energy_operators();
        let c = |x: f64| Complex64::new(x, 0.0);
        let omega1 = p.omega0 - p.delta;
        let omega2 = p.omega0 + p.delta;
        let exchange = raise[0] * lower[1] + raise[1] * lower[0];
        let hamiltonian = sz1 * c(omega1) + sz2 * c(omega2) - exchange * c(p.omega12);

        let rate = |i: usize, j: usize| if i == j { p.gamma } else { p.gamma12 };
        let mut channels = Vec::with_capacity(4);
        for i in 0..2 {
            for j in 0..2 {
                channels.push((rate(i, j), raise[i] * lower[j], lower[j], raise[i]));
            }
        }
        Self { hamiltonian, channels }
    }

    fn apply(&self, rho: &Matrix4<Complex64>) -> Matrix4<Complex64> {
        let h = &self.hamiltonian;
        let mut d = (h * rho - rho * h) * (-I);
        for (g, pm, lower, raise) in &self.channels {
            if *g == 0.0 {
                continue;
            }
            let term = rho * pm + pm * rho - lower * rho * raise * Complex64::new(2.0, 0.0);
            d -= term * Complex64::new(0.5 * g, 0.0);
        }
        d
    }
}

impl MasterGenerator {
    /// The generator as a real 32×32 matrix acting on `matrix_to_vec(ρ)`.
    fn liouvillian(&self) -> Box<SMatrix<f64, 32, 32>> {
        let mut l = Box::new(SMatrix::<f64, 32, 32>::zeros());
        for k in 0..32 {
            let mut e = [0.0; 32];
            e[k] = 1.0;
            let col = matrix_to_vec(&self.apply(&matrix_from_vec(&e)));
            l.set_column(k, &SVector::<f64, 32>::from_column_slice(&col));
        }
        l
    }
}

fn matrix_to_vec(m: &Matrix4<Complex64>) -> [f64; 32] {
    let mut y = [0.0; 32];
    for (k, z) in m.iter().enumerate() {
        y[2 * k] = z.re;
        y[2 * k + 1] = z.im;
    }
    y
}

fn matrix_from_vec(y: &[f64; 32]) -> Matrix4<Complex64> {
    Matrix4::from_fn(|i, j| {
        let k = j * 4 + i;
        Complex64::new(y[2 * k], y[2 * k + 1])
    })
}

/// Time derivative of `ρ` under the master equation.
pub fn master_rhs(p: &AtomPairParams, rho: &DensityMatrix4) -> DensityMatrix4 {
    DensityMatrix4(MasterGenerator::new(p).apply(rho.matrix()))
}

pub fn evolve_full_master(m0: &DensityMatrix4, p: &AtomPairParams, grid: &TimeGrid) -> Result<Vec<DensityMatrix4>> {
    evolve_full_master_with(&Dopri5::default(), m0, p, grid)
}

pub fn evolve_full_master_with(
    solver: &Dopri5,
    m0: &DensityMatrix4,
    p: &AtomPairParams,
    grid: &TimeGrid,
) -> Result<Vec<DensityMatrix4>> {
    p.check()?;
    let diag = m0.validate();
    if !diag.is_valid() {
        return Err(Error::Invalid(format!("initial density matrix is not valid: {diag:?}")));
    }
    let gen = MasterGenerator::new(p).liouvillian();
    let ys = solver.solve(
        |_, y: &[f64; 32], dy| {
            let v = SVector::<f64, 32>::from_column_slice(y);
            dy.copy_from_slice((&*gen * v).as_slice());
        },
        matrix_to_vec(m0.matrix()),
        &grid.times(),
    )?;
    Ok(ys.iter().map(|y| DensityMatrix4(matrix_from_vec(y))).collect())
}

/// `⟨S²⟩ = 2 − 2ρaa`: the triplet carries `S(S+1) = 2`, the singlet `0`.
pub fn total_spin_squared(c: &CollectiveState) -> f64 {
    2.0 - 2.0 * c.raa
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statespace::{to_collective, BlockState};
    use approx::assert_abs_diff_eq;

    fn pair(gamma12: f64, omega12: f64) -> AtomPairParams {
        AtomPairParams::identical(1.0, gamma12, omega12)
    }

    #[test]
    fn antisymmetric_decays_subradiantly() {
        let c0 = to_collective(&BlockState::antisymmetric());
        let c = evolve_analytic(&c0, &pair(0.95, 4.65), 1.0).unwrap();
        assert_abs_diff_eq!(c.raa, (-0.05f64).exp(), epsilon = 1e-6);
        assert_abs_diff_eq!(c.raa, 0.951_229_424_500_714, epsilon = 1e-12);
    }

    #[test]
    fn doubly_excited_feeds_symmetric_state() {
        let c0 = to_collective(&BlockState::both_excited());
        let c = evolve_analytic(&c0, &pair(0.95, 4.65), 3.0).unwrap();
        // 39·(e^{−5.85} − e^{−6})
        let expected = 39.0 * ((-5.85f64).exp() - (-6.0f64).exp());
        assert_abs_diff_eq!(c.rss, expected, epsilon = 1e-14);
        assert_abs_diff_eq!(c.rss, 0.01563, epsilon = 1e-4);
        assert_abs_diff_eq!(c.ree, (-6.0f64).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(c.rgg + c.ree + c.rss + c.raa, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn identity_at_time_zero() {
        let b = BlockState::new(
            0.2,
            0.3,
            0.1,
            0.4,
            Complex64::new(0.1, 0.05),
            Complex64::new(-0.05, 0.15),
        )
        .unwrap();
        let c0 = to_collective(&b);
        let c = evolve_analytic(&c0, &pair(0.5, 2.0), 0.0).unwrap();
        assert!(c.max_abs_diff(&c0) < 1e-15);
        let grid = TimeGrid::single(0.0).unwrap();
        let traj = evolve_block_ode(&c0, &pair(0.5, 2.0), &grid).unwrap();
        assert_eq!(traj.len(), 1);
        assert!(traj[0].max_abs_diff(&c0) < 1e-15);
    }

    #[test]
    fn closed_form_refuses_dicke_point() {
        let c0 = to_collective(&BlockState::both_excited());
        let r = evolve_analytic(&c0, &pair(1.0, 0.0), 1.0);
        assert!(matches!(r, Err(Error::DickeSingularity { .. })));
        let r = evolve_analytic(&c0, &pair(-1.0, 0.0), 1.0);
        assert!(matches!(r, Err(Error::DickeSingularity { .. })));
        // Without doubly excited population the solution is regular there.
        let c0 = to_collective(&BlockState::atom1_excited());
        assert!(evolve_analytic(&c0, &pair(1.0, 0.0), 1.0).is_ok());
    }

    #[test]
    fn closed_form_requires_identical_atoms() {
        let c0 = to_collective(&BlockState::atom1_excited());
        assert!(evolve_analytic(&c0, &pair(0.5, 1.0).with_delta(1.0), 1.0).is_err());
    }

    #[test]
    fn dicke_point_ode_conserves_spin() {
        let c0 = to_collective(&BlockState::both_excited());
        let grid = TimeGrid::new(0.0, 10.0, 101).unwrap();
        let traj = evolve_block_ode(&c0, &pair(1.0, 3.0), &grid).unwrap();
        for c in &traj {
            assert_abs_diff_eq!(total_spin_squared(c), 2.0, epsilon = 1e-12);
        }
        // Dicke cascade: ρss = 2t e^{−2t}
        for (t, c) in grid.times().iter().zip(&traj) {
            assert_abs_diff_eq!(c.rss, 2.0 * t * (-2.0 * t).exp(), epsilon = 1e-9);
        }
    }

    #[test]
    fn spin_squared_values() {
        let mut c = to_collective(&BlockState::antisymmetric());
        assert_abs_diff_eq!(total_spin_squared(&c), 0.0, epsilon = 1e-15);
        c.raa = 0.0;
        assert_eq!(total_spin_squared(&c), 2.0);
        c.raa = 0.5;
        assert_eq!(total_spin_squared(&c), 1.0);
    }

    #[test]
    fn ground_state_is_dark() {
        let m0 = BlockState::ground().to_density();
        let grid = TimeGrid::new(0.0, 5.0, 11).unwrap();
        let p = pair(0.9, 4.0).with_delta(2.0);
        for m in evolve_full_master(&m0, &p, &grid).unwrap() {
            assert!((m.matrix() - m0.matrix()).iter().all(|z| z.norm() < 1e-15));
        }
    }

    #[test]
    fn generator_matches_collective_equations() {
        // A generic block state: both routes must give the same derivative.
        let b = BlockState::new(
            0.2,
            0.3,
            0.1,
            0.4,
            Complex64::new(0.1, 0.05),
            Complex64::new(-0.05, 0.15),
        )
        .unwrap();
        let p = AtomPairParams::identical(1.0, 0.7, 3.1).with_delta(1.7).with_omega0(2.3);
        let d_full = master_rhs(&p, &b.to_density());
        let d_full = d_full.to_block(1e-15).unwrap();
        let d_coll = collective_rhs(&p, &to_collective(&b));
        let d_full_coll = to_collective(&d_full);
        // to_collective is linear, so it maps derivatives to derivatives.
        assert!(d_full_coll.max_abs_diff(&d_coll) < 1e-14, "{d_full_coll:?} vs {d_coll:?}");
    }

    #[test]
    fn time_grid_rules() {
        assert!(TimeGrid::new(0.0, 1.0, 1).is_err());
        assert!(TimeGrid::new(1.0, 0.5, 5).is_err());
        assert!(TimeGrid::new(-1.0, 0.5, 5).is_err());
        assert!(TimeGrid::new(0.0, 0.0, 2).is_err());
        let g = TimeGrid::new(0.0, 3.0, 3000).unwrap();
        let t = g.times();
        assert_eq!(t.len(), 3000);
        assert_eq!(t[0], 0.0);
        assert_eq!(t[2999], 3.0);
    }

    #[test]
    fn parameter_checks() {
        assert!(pair(1.2, 0.0).check().is_err());
        assert!(AtomPairParams::identical(0.0, 0.0, 0.0).check().is_err());
        assert!(pair(f64::NAN, 0.0).check().is_err());
        assert!(pair(1.0, 0.0).check().is_ok());
    }
}
