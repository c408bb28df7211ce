//! Two-atom density matrices and the three bases used to describe them.
//!
//! The product basis is ordered
//!
//! ```text
//! |1⟩ = |g1⟩|g2⟩   |2⟩ = |e1⟩|e2⟩   |3⟩ = |g1⟩|e2⟩   |4⟩ = |e1⟩|g2⟩
//! ```
//!
//! so that a state reached from a block-form initial condition by
//! spontaneous emission only has entries inside the `{|1⟩,|2⟩}` and
//! `{|3⟩,|4⟩}` 2×2 blocks. Matrix indices in code are zero-based.
//!
//! The Bell basis is `|1'⟩ = Φ+`, `|2'⟩ = Φ−`, `|3'⟩ = Ψ+`, `|4'⟩ = Ψ−`
//! with the phases fixed by [`bell_transform`]. The collective basis keeps
//! `|g⟩ = |1⟩`, `|e⟩ = |2⟩` and rotates only the lower block onto
//! `|s⟩ = |3'⟩`, `|a⟩ = |4'⟩`.

use nalgebra::{Matrix2, Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const TOL_HERMITIAN: f64 = 1e-10;
pub const TOL_TRACE: f64 = 1e-9;
pub const TOL_PSD: f64 = 1e-9;

/// Product-basis indices.
pub const GG: usize = 0;
pub const EE: usize = 1;
pub const GE: usize = 2;
pub const EG: usize = 3;

const C0: Complex64 = Complex64::new(0.0, 0.0);

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The real orthogonal matrix `U` taking the product basis to the Bell
/// basis, `ρ' = U ρ U⁺`.
pub fn bell_transform() -> Matrix4<f64> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    Matrix4::new(
        h, h, 0.0, 0.0, //
        -h, h, 0.0, 0.0, //
        0.0, 0.0, h, h, //
        0.0, 0.0, -h, h,
    )
}

/// 2×2 block of `U`; both diagonal blocks of [`bell_transform`] are equal.
fn bell_block() -> Matrix2<f64> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    Matrix2::new(h, h, -h, h)
}

/// Hermitian 2×2 block `[[a, z], [z*, b]]` conjugated by a real rotation.
fn rotate_block(u: &Matrix2<f64>, a: f64, b: f64, z: Complex64) -> (f64, f64, Complex64) {
    let m = Matrix2::new(c(a), z, z.conj(), c(b));
    let uc = u.map(c);
    let r = uc * m * uc.transpose();
    (r[(0, 0)].re, r[(1, 1)].re, r[(0, 1)])
}

/// Eigenvalues of a Hermitian 4×4 matrix, ascending.
pub(crate) fn hermitian_eigenvalues(m: &Matrix4<Complex64>) -> Result<[f64; 4]> {
    let eig = SymmetricEigen::try_new(*m, 1e-15, 10_000)
        .ok_or_else(|| Error::Eigen("Hermitian eigensolver did not converge".into()))?;
    let mut v: [f64; 4] = eig.eigenvalues.into();
    v.sort_by(|a, b| a.total_cmp(b));
    Ok(v)
}

/// Full eigendecomposition of a Hermitian 4×4 matrix.
pub(crate) fn hermitian_eigen(m: &Matrix4<Complex64>) -> Result<SymmetricEigen<Complex64, nalgebra::U4>> {
    SymmetricEigen::try_new(*m, 1e-15, 10_000)
        .ok_or_else(|| Error::Eigen("Hermitian eigensolver did not converge".into()))
}

/// Two-atom density matrix in the product basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4(pub Matrix4<Complex64>);

impl DensityMatrix4 {
    pub fn from_matrix(m: Matrix4<Complex64>) -> Self {
        Self(m)
    }

    /// `|ψ⟩⟨ψ|` for a normalised ket given in the product basis.
    pub fn from_pure(ket: [Complex64; 4]) -> Self {
        let v = Vector4::from(ket);
        Self(v * v.adjoint())
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    /// `V ρ V⁺`.
    pub fn conjugated_by(&self, v: &Matrix4<Complex64>) -> Self {
        Self(v * self.0 * v.adjoint())
    }

    /// Reads the six block entries; fails if any cross-block entry exceeds `tol`.
    pub fn to_block(&self, tol: f64) -> Result<BlockState> {
        if !is_block_form(self, tol) {
            return Err(Error::Invalid(
                "density matrix has entries outside the two diagonal blocks".into(),
            ));
        }
        let m = &self.0;
        Ok(BlockState {
            r11: m[(GG, GG)].re,
            r22: m[(EE, EE)].re,
            r33: m[(GE, GE)].re,
            r44: m[(EG, EG)].re,
            r12: m[(GG, EE)],
            r34: m[(GE, EG)],
        })
    }

    pub fn validate(&self) -> Diagnostics {
        validate(self)
    }
}

/// Residuals of the density-matrix conditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Diagnostics {
    /// `max |ρ_ij − ρ_ji*|`
    pub hermiticity: f64,
    /// `|Tr ρ − 1|`
    pub trace: f64,
    /// Smallest eigenvalue of the Hermitian part; `NaN` if the solver failed.
    pub min_eigenvalue: f64,
}

impl Diagnostics {
    pub fn is_hermitian(&self) -> bool {
        self.hermiticity <= TOL_HERMITIAN
    }

    pub fn has_unit_trace(&self) -> bool {
        self.trace <= TOL_TRACE
    }

    pub fn is_positive(&self) -> bool {
        self.min_eigenvalue >= -TOL_PSD
    }

    pub fn is_valid(&self) -> bool {
        self.is_hermitian() && self.has_unit_trace() && self.is_positive()
    }
}

pub fn validate(m: &DensityMatrix4) -> Diagnostics {
    let a = m.matrix();
    let hermiticity = (a - a.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let trace = (a.trace() - c(1.0)).norm();
    let herm = (a + a.adjoint()) * c(0.5);
    let min_eigenvalue = hermitian_eigenvalues(&herm).map(|v| v[0]).unwrap_or(f64::NAN);
    Diagnostics {
        hermiticity,
        trace,
        min_eigenvalue,
    }
}

/// True iff all eight entries coupling the `{|1⟩,|2⟩}` and `{|3⟩,|4⟩}`
/// blocks have modulus below `tol`.
pub fn is_block_form(m: &DensityMatrix4, tol: f64) -> bool {
    let a = m.matrix();
    (0..2).all(|i| (2..4).all(|j| a[(i, j)].norm() < tol && a[(j, i)].norm() < tol))
}

/// The independent entries of a block-form density matrix; `ρ21 = ρ12*`
/// and `ρ43 = ρ34*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockState {
    pub r11: f64,
    pub r22: f64,
    pub r33: f64,
    pub r44: f64,
    pub r12: Complex64,
    pub r34: Complex64,
}

impl BlockState {
    pub fn new(r11: f64, r22: f64, r33: f64, r44: f64, r12: Complex64, r34: Complex64) -> Result<Self> {
        let b = Self {
            r11,
            r22,
            r33,
            r44,
            r12,
            r34,
        };
        b.check()?;
        Ok(b)
    }

    pub fn diagonal(r11: f64, r22: f64, r33: f64, r44: f64) -> Self {
        Self {
            r11,
            r22,
            r33,
            r44,
            r12: C0,
            r34: C0,
        }
    }

    /// `|g1 g2⟩`
    pub fn ground() -> Self {
        Self::diagonal(1.0, 0.0, 0.0, 0.0)
    }

    /// `|e1 e2⟩`
    pub fn both_excited() -> Self {
        Self::diagonal(0.0, 1.0, 0.0, 0.0)
    }

    /// `|e1 g2⟩`, i.e. `ρ44 = 1`.
    pub fn atom1_excited() -> Self {
        Self::diagonal(0.0, 0.0, 0.0, 1.0)
    }

    /// `|g1 e2⟩`, i.e. `ρ33 = 1`.
    pub fn atom2_excited() -> Self {
        Self::diagonal(0.0, 0.0, 1.0, 0.0)
    }

    /// `|s⟩ = (|3⟩ + |4⟩)/√2`
    pub fn symmetric() -> Self {
        Self {
            r34: c(0.5),
            ..Self::diagonal(0.0, 0.0, 0.5, 0.5)
        }
    }

    /// `|a⟩ = (|4⟩ − |3⟩)/√2`
    pub fn antisymmetric() -> Self {
        Self {
            r34: c(-0.5),
            ..Self::diagonal(0.0, 0.0, 0.5, 0.5)
        }
    }

    pub fn maximally_mixed() -> Self {
        Self::diagonal(0.25, 0.25, 0.25, 0.25)
    }

    pub fn r21(&self) -> Complex64 {
        self.r12.conj()
    }

    pub fn r43(&self) -> Complex64 {
        self.r34.conj()
    }

    pub fn trace(&self) -> f64 {
        self.r11 + self.r22 + self.r33 + self.r44
    }

    /// Unit trace and positivity of both blocks, within the module tolerances.
    pub fn check(&self) -> Result<()> {
        let pops = [self.r11, self.r22, self.r33, self.r44];
        if pops.iter().chain([self.r12.re, self.r12.im, self.r34.re, self.r34.im].iter()).any(|v| !v.is_finite()) {
            return Err(Error::Invalid("block state has non-finite entries".into()));
        }
        if (self.trace() - 1.0).abs() > TOL_TRACE {
            return Err(Error::Invalid(format!("block state trace is {}", self.trace())));
        }
        if pops.iter().any(|&p| p < -TOL_PSD) {
            return Err(Error::Invalid("block state has a negative population".into()));
        }
        if self.r12.norm_sqr() > self.r11 * self.r22 + TOL_PSD
            || self.r34.norm_sqr() > self.r33 * self.r44 + TOL_PSD
        {
            return Err(Error::Invalid("block state coherence exceeds the positivity bound".into()));
        }
        Ok(())
    }

    pub fn to_density(&self) -> DensityMatrix4 {
        let mut m = Matrix4::zeros();
        m[(GG, GG)] = c(self.r11);
        m[(EE, EE)] = c(self.r22);
        m[(GE, GE)] = c(self.r33);
        m[(EG, EG)] = c(self.r44);
        m[(GG, EE)] = self.r12;
        m[(EE, GG)] = self.r21();
        m[(GE, EG)] = self.r34;
        m[(EG, GE)] = self.r43();
        DensityMatrix4(m)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            (self.r11 - other.r11).abs(),
            (self.r22 - other.r22).abs(),
            (self.r33 - other.r33).abs(),
            (self.r44 - other.r44).abs(),
            (self.r12 - other.r12).norm(),
            (self.r34 - other.r34).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Block entries in the Bell basis (`p11 = ρ1'1'`, `p12 = ρ1'2'`, ...).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellState4 {
    pub p11: f64,
    pub p22: f64,
    pub p33: f64,
    pub p44: f64,
    pub p12: Complex64,
    pub p34: Complex64,
}

impl BellState4 {
    pub fn p21(&self) -> Complex64 {
        self.p12.conj()
    }

    pub fn p43(&self) -> Complex64 {
        self.p34.conj()
    }

    /// Projector onto the `k`-th Bell vector, `k ∈ 1..=4`.
    pub fn projector(k: usize) -> Self {
        let mut p = Self {
            p11: 0.0,
            p22: 0.0,
            p33: 0.0,
            p44: 0.0,
            p12: C0,
            p34: C0,
        };
        match k {
            1 => p.p11 = 1.0,
            2 => p.p22 = 1.0,
            3 => p.p33 = 1.0,
            4 => p.p44 = 1.0,
            _ => panic!("Bell vectors are numbered 1 to 4, got {k}"),
        }
        p
    }
}

pub fn to_bell(b: &BlockState) -> BellState4 {
    let u = bell_block();
    let (p11, p22, p12) = rotate_block(&u, b.r11, b.r22, b.r12);
    let (p33, p44, p34) = rotate_block(&u, b.r33, b.r44, b.r34);
    BellState4 {
        p11,
        p22,
        p33,
        p44,
        p12,
        p34,
    }
}

pub fn from_bell(p: &BellState4) -> BlockState {
    let ut = bell_block().transpose();
    let (r11, r22, r12) = rotate_block(&ut, p.p11, p.p22, p.p12);
    let (r33, r44, r34) = rotate_block(&ut, p.p33, p.p44, p.p34);
    BlockState {
        r11,
        r22,
        r33,
        r44,
        r12,
        r34,
    }
}

/// State in the collective basis `{|g⟩, |e⟩, |s⟩, |a⟩}`.
///
/// `reg = ⟨e|ρ|g⟩` is the two-photon coherence and `ras = ⟨a|ρ|s⟩`;
/// `rsa` is always `ras*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollectiveState {
    pub rgg: f64,
    pub ree: f64,
    pub rss: f64,
    pub raa: f64,
    pub reg: Complex64,
    pub ras: Complex64,
}

impl CollectiveState {
    pub fn rsa(&self) -> Complex64 {
        self.ras.conj()
    }

    pub fn rge(&self) -> Complex64 {
        self.reg.conj()
    }

    /// Builds a state whose ground population is fixed by unit trace.
    pub fn from_excited(ree: f64, rss: f64, raa: f64, reg: Complex64, ras: Complex64) -> Self {
        Self {
            rgg: 1.0 - ree - rss - raa,
            ree,
            rss,
            raa,
            reg,
            ras,
        }
    }

    pub fn check(&self) -> Result<()> {
        let pops = [self.rgg, self.ree, self.rss, self.raa];
        if pops.iter().any(|&p| !(-TOL_PSD..=1.0 + TOL_PSD).contains(&p)) {
            return Err(Error::Invalid("collective population outside [0, 1]".into()));
        }
        if (pops.iter().sum::<f64>() - 1.0).abs() > TOL_TRACE {
            return Err(Error::Invalid("collective populations do not sum to one".into()));
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            (self.rgg - other.rgg).abs(),
            (self.ree - other.ree).abs(),
            (self.rss - other.rss).abs(),
            (self.raa - other.raa).abs(),
            (self.reg - other.reg).norm(),
            (self.ras - other.ras).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// Keeps the upper block and rotates the lower one onto `|s⟩, |a⟩`.
pub fn to_collective(b: &BlockState) -> CollectiveState {
    let (rss, raa, rsa) = rotate_block(&bell_block(), b.r33, b.r44, b.r34);
    CollectiveState {
        rgg: b.r11,
        ree: b.r22,
        rss,
        raa,
        reg: b.r21(),
        ras: rsa.conj(),
    }
}

pub fn from_collective(s: &CollectiveState) -> BlockState {
    let (r33, r44, r34) = rotate_block(&bell_block().transpose(), s.rss, s.raa, s.rsa());
    BlockState {
        r11: s.rgg,
        r22: s.ree,
        r33,
        r44,
        r12: s.rge(),
        r34,
    }
}
