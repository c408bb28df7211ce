//! Concurrence and negativity of two-atom states.
//!
//! For block states both measures have closed forms in terms of the two
//! "alternatives"
//!
//! ```text
//! C1 = 2(|ρ12| − √(ρ33ρ44))      C1⁺ = 2(|ρ12| + √(ρ33ρ44))
//! C2 = 2(|ρ34| − √(ρ11ρ22))      C2⁺ = 2(|ρ34| + √(ρ11ρ22))
//! ```
//!
//! with `C = max(0, C1, C2)` and `N = max(0, √(Ck·Ck⁺ + s_k²) − s_k)`, where
//! `s_1 = ρ33 + ρ44` and `s_2 = ρ11 + ρ22`. The generic routes
//! [`wootters_generic`] and [`negativity_generic`] work on any 4×4 density
//! matrix and serve as independent checks of the closed forms.

use nalgebra::{Matrix4, SVD};
use num_complex::Complex64;

use crate::dynamics::{evolve_analytic, AtomPairParams};
use crate::error::{Error, Result};
use crate::statespace::{
    hermitian_eigen, hermitian_eigenvalues, to_collective, BellState4, BlockState, DensityMatrix4, EE, EG, GE, GG,
};

/// Square root clamped at zero for round-off-negative arguments.
fn sqrt0(x: f64) -> f64 {
    x.max(0.0).sqrt()
}

/// The two concurrence alternatives of a block state and their
/// nonnegative companions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alternatives {
    pub c1: f64,
    pub c2: f64,
    pub c1_plus: f64,
    pub c2_plus: f64,
}

impl Alternatives {
    pub fn concurrence(&self) -> f64 {
        0.0f64.max(self.c1).max(self.c2)
    }
}

pub fn concurrence_alternatives(b: &BlockState) -> Alternatives {
    let upper = b.r12.norm();
    let lower = b.r34.norm();
    let lower_pop = sqrt0(b.r33 * b.r44);
    let upper_pop = sqrt0(b.r11 * b.r22);
    Alternatives {
        c1: 2.0 * (upper - lower_pop),
        c2: 2.0 * (lower - upper_pop),
        c1_plus: 2.0 * (upper + lower_pop),
        c2_plus: 2.0 * (lower + upper_pop),
    }
}

/// Closed-form concurrence `max(0, C1, C2)` of a block state.
pub fn concurrence_block(b: &BlockState) -> f64 {
    concurrence_alternatives(b).concurrence()
}

/// Closed-form negativity from the partial-transpose eigenvalues.
pub fn negativity_block(b: &BlockState) -> f64 {
    let s1 = b.r33 + b.r44;
    let s2 = b.r11 + b.r22;
    let n1 = sqrt0(4.0 * (b.r12.norm_sqr() - b.r33 * b.r44) + s1 * s1) - s1;
    let n2 = sqrt0(4.0 * (b.r34.norm_sqr() - b.r11 * b.r22) + s2 * s2) - s2;
    0.0f64.max(n1).max(n2)
}

/// Negativity through its relation to the concurrence alternatives,
/// `N = max(0, √(Ck·Ck⁺ + s_k²) − s_k)`.
pub fn relation_negativity(alt: &Alternatives, b: &BlockState) -> f64 {
    let s1 = b.r33 + b.r44;
    let s2 = b.r11 + b.r22;
    let n1 = sqrt0(alt.c1 * alt.c1_plus + s1 * s1) - s1;
    let n2 = sqrt0(alt.c2 * alt.c2_plus + s2 * s2) - s2;
    0.0f64.max(n1).max(n2)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport {
    pub concurrence: f64,
    pub negativity: f64,
    pub c1: f64,
    pub c2: f64,
    pub c1_plus: f64,
    pub c2_plus: f64,
}

impl EntanglementReport {
    pub fn from_block(b: &BlockState) -> Self {
        let alt = concurrence_alternatives(b);
        Self {
            concurrence: alt.concurrence(),
            negativity: negativity_block(b),
            c1: alt.c1,
            c2: alt.c2,
            c1_plus: alt.c1_plus,
            c2_plus: alt.c2_plus,
        }
    }

    /// `Ck·Ck⁺` for the alternative that is larger; zero when the state is
    /// separable. Reported only, it plays no role in `concurrence` or
    /// `negativity`.
    pub fn product_measure(&self) -> f64 {
        if self.concurrence <= 0.0 {
            0.0
        } else if self.c1 >= self.c2 {
            self.c1 * self.c1_plus
        } else {
            self.c2 * self.c2_plus
        }
    }
}

/// `σy ⊗ σy` in the product basis: flips both atoms, `|1⟩↔|2⟩` with a
/// sign and `|3⟩↔|4⟩` without.
///
/// On block states this acts exactly like `σx ⊗ σx`, because the sign is
/// shared by the whole upper block; off the block form only `σy ⊗ σy`
/// gives the Wootters concurrence (product states must map to zero).
fn spin_flip() -> Matrix4<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let mut p = Matrix4::zeros();
    p[(GG, EE)] = -one;
    p[(EE, GG)] = -one;
    p[(GE, EG)] = one;
    p[(EG, GE)] = one;
    p
}

/// `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`
pub fn spin_flipped(m: &DensityMatrix4) -> DensityMatrix4 {
    let p = spin_flip();
    DensityMatrix4(p * m.matrix().conjugate() * p)
}

/// Square roots of the eigenvalues of `R = ρρ̃`, in decreasing order.
///
/// They are the singular values of `√ρ·√ρ̃ = √ρ·Y·(√ρ)*·Y`, `Y = σy⊗σy`, which avoids
/// taking square roots of eigenvalues that are zero up to round-off.
pub fn wootters_roots(m: &DensityMatrix4) -> Result<[f64; 4]> {
    let herm = (m.matrix() + m.matrix().adjoint()) * Complex64::new(0.5, 0.0);
    let eig = hermitian_eigen(&herm)?;
    let sqrt_vals = eig.eigenvalues.map(|v| Complex64::new(sqrt0(v), 0.0));
    let v = &eig.eigenvectors;
    let sqrt_rho = v * Matrix4::from_diagonal(&sqrt_vals) * v.adjoint();
    let a = sqrt_rho * spin_flip() * sqrt_rho.conjugate();
    let svd = SVD::try_new(a, false, false, 1e-15, 10_000)
        .ok_or_else(|| Error::Eigen("SVD did not converge".into()))?;
    let mut roots: [f64; 4] = svd.singular_values.into();
    roots.sort_by(|x, y| y.total_cmp(x));
    Ok(roots)
}

/// Wootters concurrence `max(0, √λ1 − √λ2 − √λ3 − √λ4)` of any 4×4 state.
pub fn wootters_generic(m: &DensityMatrix4) -> Result<f64> {
    let r = wootters_roots(m)?;
    Ok(0.0f64.max(r[0] - r[1] - r[2] - r[3]))
}

/// Partial transpose with respect to atom 1.
pub fn partial_transpose_first(m: &DensityMatrix4) -> DensityMatrix4 {
    // (atom 1, atom 2) excitation of each product-basis index
    const LEVELS: [(usize, usize); 4] = [(0, 0), (1, 1), (0, 1), (1, 0)];
    let index = |a: usize, b: usize| LEVELS.iter().position(|&l| l == (a, b)).unwrap();
    let src = m.matrix();
    DensityMatrix4(Matrix4::from_fn(|i, j| {
        let (a1, b2) = LEVELS[i];
        let (c1, d2) = LEVELS[j];
        src[(index(c1, b2), index(a1, d2))]
    }))
}

/// `max(0, −2 Σ μi)` over the negative eigenvalues of the partial transpose.
pub fn negativity_generic(m: &DensityMatrix4) -> Result<f64> {
    let pt = partial_transpose_first(m);
    let herm = (pt.matrix() + pt.matrix().adjoint()) * Complex64::new(0.5, 0.0);
    let neg: f64 = hermitian_eigenvalues(&herm)?.iter().filter(|&&v| v < 0.0).sum();
    Ok(0.0f64.max(-2.0 * neg))
}

/// Alternatives written directly in Bell-basis matrix elements.
pub fn concurrence_bell_form(p: &BellState4) -> Alternatives {
    let c = |x: f64| Complex64::new(x, 0.0);
    // (a)² − (z)² with z purely real or imaginary; the result is real.
    let root = |a: Complex64, z: Complex64| sqrt0((a * a - z * z).re);
    let upper_diff = root(c(p.p11 - p.p22), p.p12 - p.p21());
    let upper_sum = root(c(p.p11 + p.p22), p.p12 + p.p21());
    let lower_diff = root(c(p.p33 - p.p44), p.p34 - p.p43());
    let lower_sum = root(c(p.p33 + p.p44), p.p34 + p.p43());
    Alternatives {
        c1: upper_diff - lower_sum,
        c2: lower_diff - upper_sum,
        c1_plus: upper_diff + lower_sum,
        c2_plus: lower_diff + upper_sum,
    }
}

/// Negativity from Bell-basis elements.
pub fn negativity_bell_form(p: &BellState4) -> f64 {
    let alt = concurrence_bell_form(p);
    let s1 = p.p33 + p.p44;
    let s2 = p.p11 + p.p22;
    let n1 = sqrt0(alt.c1 * alt.c1_plus + s1 * s1) - s1;
    let n2 = sqrt0(alt.c2 * alt.c2_plus + s2 * s2) - s2;
    0.0f64.max(n1).max(n2)
}

fn require_identical(p: &AtomPairParams) -> Result<()> {
    p.check()?;
    if p.delta != 0.0 {
        return Err(Error::Invalid("closed forms require identical atoms (delta = 0)".into()));
    }
    Ok(())
}

/// `C2(t)` for one atom initially excited (`ρ44(0) = 1`):
///
/// `√( ¼[e^{−(Γ+Γ12)t} − e^{−(Γ−Γ12)t}]² + e^{−2Γt} sin²(2Ω12 t) )`.
///
/// The `¼` multiplies only the population term; this is what the general
/// `C2 = √((ρss−ρaa)² − (ρsa−ρas)²) − 2√(ρee ρgg)` gives for that
/// initial state.
pub fn closed_form_c2_single(p: &AtomPairParams, t: f64) -> Result<f64> {
    require_identical(p)?;
    let g = p.gamma;
    let diff = (-(g + p.gamma12) * t).exp() - (-(g - p.gamma12) * t).exp();
    let osc = (-2.0 * g * t).exp() * (2.0 * p.omega12 * t).sin().powi(2);
    Ok((0.25 * diff * diff + osc).sqrt())
}

/// Ground-state population for one atom initially excited.
pub fn ground_population_single(p: &AtomPairParams, t: f64) -> f64 {
    let g = p.gamma;
    1.0 - 0.5 * ((-(g + p.gamma12) * t).exp() + (-(g - p.gamma12) * t).exp())
}

/// `N2(t) = √(C2·C2⁺ + ρgg²) − ρgg` for one atom initially excited. Here
/// `ρee ≡ 0`, so `C2⁺ = C2`.
pub fn closed_form_n2_single(p: &AtomPairParams, t: f64) -> Result<f64> {
    let c2 = closed_form_c2_single(p, t)?;
    let gg = ground_population_single(p, t);
    Ok((c2 * c2 + gg * gg).sqrt() - gg)
}

/// `C2(t)` for both atoms initially excited; may be negative, in which case
/// the concurrence is zero.
///
/// `|ρss(t) − ρaa(t)| − 2e^{−Γt}√ρgg(t)` with the cascade populations
/// `ρss = (Γ+Γ12)/(Γ−Γ12)·(e^{−(Γ+Γ12)t} − e^{−2Γt})` and
/// `ρaa = (Γ−Γ12)/(Γ+Γ12)·(e^{−(Γ−Γ12)t} − e^{−2Γt})`.
pub fn closed_form_c2_double(p: &AtomPairParams, t: f64) -> Result<f64> {
    require_identical(p)?;
    if p.near_dicke_point() {
        return Err(Error::DickeSingularity {
            gamma: p.gamma,
            gamma12: p.gamma12,
        });
    }
    let g = p.gamma;
    let plus = g + p.gamma12;
    let minus = g - p.gamma12;
    let e_two = (-2.0 * g * t).exp();
    let ss = plus / minus * ((-plus * t).exp() - e_two);
    let aa = minus / plus * ((-minus * t).exp() - e_two);
    let gg = 1.0 - (ss + aa + e_two);
    Ok((ss - aa).abs() - 2.0 * (-g * t).exp() * sqrt0(gg))
}

/// Concurrence and negativity of the closed-form trajectory at time `t`.
pub fn report_at(b0: &BlockState, p: &AtomPairParams, t: f64) -> Result<EntanglementReport> {
    let c = evolve_analytic(&to_collective(b0), p, t)?;
    Ok(EntanglementReport::from_block(&crate::statespace::from_collective(&c)))
}
