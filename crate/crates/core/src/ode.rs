//! Adaptive Dormand–Prince 5(4) integrator for small, fixed-size real systems.
//!
//! Output is produced at caller-supplied times by shortening the step that
//! would cross each output time, so no interpolation error is introduced.

use crate::error::{Error, Result};

// Dormand–Prince tableau.
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// Difference between the 5th and 4th order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;

#[derive(Debug, Clone, Copy)]
pub struct Dopri5 {
    pub rtol: f64,
    pub atol: f64,
    /// Upper bound on the step size.
    pub h_max: f64,
    pub max_steps: usize,
}

impl Default for Dopri5 {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            atol: 1e-12,
            h_max: f64::INFINITY,
            max_steps: 1_000_000,
        }
    }
}

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for (coef, k) in terms {
        for i in 0..N {
            out[i] += h * coef * k[i];
        }
    }
    out
}

impl Dopri5 {
    /// Integrates `dy/dt = f(t, y)` from `times[0]` with `y(times[0]) = y0`
    /// and returns the state at every entry of `times` (which must be
    /// non-decreasing).
    pub fn solve<const N: usize, F>(&self, mut f: F, y0: [f64; N], times: &[f64]) -> Result<Vec<[f64; N]>>
    where
        F: FnMut(f64, &[f64; N], &mut [f64; N]),
    {
        let Some(&t0) = times.first() else {
            return Ok(Vec::new());
        };
        if times.windows(2).any(|w| !(w[1] >= w[0])) {
            return Err(Error::Invalid("output times must be non-decreasing".into()));
        }

        let mut out = Vec::with_capacity(times.len());
        out.push(y0);

        let mut t = t0;
        let mut y = y0;
        let mut k1 = [0.0; N];
        f(t, &y, &mut k1);
        let mut h = self.initial_step(&mut f, t, &y, &k1);
        let mut steps = 0usize;

        for &t_out in &times[1..] {
            while t < t_out {
                steps += 1;
                if steps > self.max_steps {
                    return Err(Error::StepSize {
                        t,
                        reason: format!("exceeded {} steps", self.max_steps),
                    });
                }
                let remaining = t_out - t;
                let lands = h >= remaining;
                let step = if lands { remaining } else { h };
                if step <= f64::EPSILON * t.abs().max(1.0) && !lands {
                    return Err(Error::StepSize {
                        t,
                        reason: format!("step size underflow (h = {step:e})"),
                    });
                }

                let (y_new, k7, err) = self.attempt(&mut f, t, &y, &k1, step);
                if !err.is_finite() {
                    return Err(Error::StepSize {
                        t,
                        reason: "non-finite error estimate".into(),
                    });
                }
                let factor = if err == 0.0 {
                    MAX_FACTOR
                } else {
                    (SAFETY * err.powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR)
                };
                if err <= 1.0 {
                    t = if lands { t_out } else { t + step };
                    y = y_new;
                    k1 = k7;
                    // A step shortened to hit an output time says little about
                    // the admissible size; keep the previous proposal.
                    if !lands {
                        h = (step * factor).min(self.h_max);
                    } else {
                        h = h.max(step * factor).min(self.h_max);
                    }
                } else {
                    h = step * factor.min(1.0);
                }
            }
            out.push(y);
        }
        Ok(out)
    }

    fn initial_step<const N: usize, F>(&self, f: &mut F, t: f64, y: &[f64; N], k1: &[f64; N]) -> f64
    where
        F: FnMut(f64, &[f64; N], &mut [f64; N]),
    {
        let scale = |i: usize| self.atol + self.rtol * y[i].abs();
        let rms = |v: &dyn Fn(usize) -> f64| ((0..N).map(|i| v(i).powi(2)).sum::<f64>() / N as f64).sqrt();
        let d0 = rms(&|i| y[i] / scale(i));
        let d1 = rms(&|i| k1[i] / scale(i));
        let h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
        let y1 = axpy(y, h0, &[(1.0, k1)]);
        let mut k2 = [0.0; N];
        f(t + h0, &y1, &mut k2);
        let d2 = rms(&|i| (k2[i] - k1[i]) / scale(i)) / h0;
        let h1 = if d1.max(d2) <= 1e-15 {
            (h0 * 1e-3).max(1e-6)
        } else {
            (0.01 / d1.max(d2)).powf(0.2)
        };
        (100.0 * h0).min(h1).min(self.h_max)
    }

    /// One trial step; returns the new state, the derivative there, and the
    /// scaled RMS error.
    fn attempt<const N: usize, F>(&self, f: &mut F, t: f64, y: &[f64; N], k1: &[f64; N], h: f64) -> ([f64; N], [f64; N], f64)
    where
        F: FnMut(f64, &[f64; N], &mut [f64; N]),
    {
        let mut k2 = [0.0; N];
        let mut k3 = [0.0; N];
        let mut k4 = [0.0; N];
        let mut k5 = [0.0; N];
        let mut k6 = [0.0; N];
        let mut k7 = [0.0; N];

        f(t + C2 * h, &axpy(y, h, &[(A21, k1)]), &mut k2);
        f(t + C3 * h, &axpy(y, h, &[(A31, k1), (A32, &k2)]), &mut k3);
        f(t + C4 * h, &axpy(y, h, &[(A41, k1), (A42, &k2), (A43, &k3)]), &mut k4);
        f(t + C5 * h, &axpy(y, h, &[(A51, k1), (A52, &k2), (A53, &k3), (A54, &k4)]), &mut k5);
        f(t + h, &axpy(y, h, &[(A61, k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]), &mut k6);
        let y_new = axpy(y, h, &[(A71, k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
        f(t + h, &y_new, &mut k7);

        let mut acc = 0.0;
        for i in 0..N {
            let e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = self.atol + self.rtol * y[i].abs().max(y_new[i].abs());
            acc += (e / sc).powi(2);
        }
        (y_new, k7, (acc / N as f64).sqrt())
    }
}
