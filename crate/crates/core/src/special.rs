//! Gamma-family special functions on the complex plane.
//!
//! Lanczos approximation (g = 7, nine terms) with the reflection formula on
//! the left half-plane. Relative accuracy is about 1e-15 away from poles.

use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// `ln Γ(z)` for `Re z >= 1/2` (principal branch of the Lanczos sum).
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `sin(πz)` with the real part reduced first, so integer arguments give exact zeros.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let x = z.re - 2.0 * (z.re / 2.0).floor();
    let (s, c) = match x {
        x if x == 0.0 => (0.0, 1.0),
        x if x == 0.5 => (1.0, 0.0),
        x if x == 1.0 => (0.0, -1.0),
        x if x == 1.5 => (-1.0, 0.0),
        x => ((PI * x).sin(), (PI * x).cos()),
    };
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

/// A logarithm of `Γ(z)`. Off the real axis the branch is not the principal
/// one in the reflected region, so only `exp` of it is meaningful there.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        ln_gamma_right(z)
    } else {
        Complex64::new(PI.ln(), 0.0) - sin_pi(z).ln() - ln_gamma_right(1.0 - z)
    }
}

pub fn gamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        ln_gamma_right(z).exp()
    } else {
        PI / (sin_pi(z) * ln_gamma_right(1.0 - z).exp())
    }
}

/// `1/Γ(z)`, entire; exactly zero at the non-positive integers.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        (-ln_gamma_right(z)).exp()
    } else {
        sin_pi(z) * ln_gamma_right(1.0 - z).exp() / PI
    }
}

pub fn gamma_real(x: f64) -> f64 {
    gamma(Complex64::new(x, 0.0)).re
}

/// `Γ_ℝ(s) = π^{-s/2} Γ(s/2)`.
pub fn gamma_r(s: Complex64) -> Complex64 {
    (-(s / 2.0) * PI.ln()).exp() * gamma(s / 2.0)
}

/// Distance from `z` to the nearest pole of `Γ` (a non-positive integer).
pub fn distance_to_gamma_pole(z: Complex64) -> (f64, i64) {
    let nearest = z.re.round().min(0.0);
    let d = (z - nearest).norm();
    (d, nearest as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn factorials() {
        let mut f = 1.0;
        for n in 1..20 {
            let g = gamma_real(n as f64);
            assert!((g - f).abs() <= 1e-13 * f, "Γ({n}) = {g}, want {f}");
            f *= n as f64;
        }
    }

    #[test]
    fn half_integers_and_reflection() {
        assert!((gamma_real(0.5) - PI.sqrt()).abs() < 1e-14);
        assert!((gamma_real(-0.5) + 2.0 * PI.sqrt()).abs() < 1e-13);
        assert!((gamma_real(-1.5) - 4.0 / 3.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn recurrence_off_axis() {
        for &z in &[c(0.3, 2.0), c(-2.7, 0.4), c(5.5, -11.0), c(0.25, 20.0)] {
            let lhs = gamma(z + 1.0);
            let rhs = z * gamma(z);
            assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm(), "{z}");
        }
    }

    #[test]
    fn reflection_identity() {
        for &z in &[c(0.3, 1.0), c(0.7, -3.0), c(0.1, 0.0)] {
            let prod = gamma(z) * gamma(1.0 - z) * sin_pi(z);
            assert!((prod - PI).norm() < 1e-12, "{z}: {prod}");
        }
    }

    #[test]
    fn recip_gamma_vanishes_at_poles() {
        for n in 0..6 {
            assert_eq!(recip_gamma(c(-(n as f64), 0.0)).norm(), 0.0);
        }
        // 1/Γ(ε) ≈ ε near 0
        let eps = 1e-7;
        assert!((recip_gamma(c(eps, 0.0)).re - eps).abs() < 1e-13);
    }

    #[test]
    fn gamma_r_values() {
        assert!((gamma_r(c(1.0, 0.0)).re - 1.0).abs() < 1e-14);
        assert!((gamma_r(c(2.0, 0.0)).re - 1.0 / PI).abs() < 1e-14);
    }

    #[test]
    fn pole_distance() {
        assert_eq!(distance_to_gamma_pole(c(-2.0, 0.0)), (0.0, -2));
        let (d, n) = distance_to_gamma_pole(c(0.4, 0.0));
        assert_eq!(n, 0);
        assert!((d - 0.4).abs() < 1e-15);
    }
}
