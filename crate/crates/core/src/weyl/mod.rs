//! Exact Weyl-algebra calculus: b-functions, orbit sign factors, Capelli
//! eigenvalues and Γ-product denominators.

mod power;
mod univar;

pub use power::SymbolicPower;
pub use univar::{Factorization, UnivarPoly};

use crate::poly::{fmt_monomial, fmt_rat, rat_int, rat_to_f64, MultiPoly, Rational};
use crate::registry::{OrbitChart, PvsDescriptor};
use crate::special;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WeylError {
    #[error("no one-term Bernstein identity: residual {0}")]
    NotEigen(String),
    #[error("operation supports rank 1 only (got rank {0})")]
    UnsupportedRank(usize),
    #[error("b-function has irrational roots: {0}")]
    IrrationalRoots(String),
}

/// `q(∂)` applied to a symbolic power.
pub fn apply_operator(q: &MultiPoly, expr: &SymbolicPower) -> SymbolicPower {
    expr.apply_operator(q)
}

/// The one-term b-function: `f̌(∂) f^{s+1} = b(s) f^s`.
pub fn b_function(f: &MultiPoly, fdual: &MultiPoly) -> Result<UnivarPoly, WeylError> {
    let out = SymbolicPower::power(f, 1).apply_operator(fdual);
    out.as_eigen().ok_or_else(|| WeylError::NotEigen(display_power(&out)))
}

/// `f̌(∂) f^{s+1} − b(s) f^s`, collapsed; zero iff `b` is certified.
pub fn bernstein_remainder(f: &MultiPoly, fdual: &MultiPoly, b: &UnivarPoly) -> SymbolicPower {
    let lhs = SymbolicPower::power(f, 1).apply_operator(fdual);
    let rhs = SymbolicPower::power(f, 0).mul_univar(b);
    lhs.sub(&rhs).collapse()
}

/// Renders `Σ p_k(x;s) f^{s-k}` with `f` written literally.
pub fn display_power(p: &SymbolicPower) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let n = p.dim();
    let name = |j: usize| if j == n { "s".to_string() } else { ["x", "y", "z"].get(j).map(|s| s.to_string()).unwrap_or(format!("x{}", j + 1)) };
    p.parts()
        .map(|(k, poly)| {
            let body = poly
                .terms()
                .rev()
                .map(|(e, c)| {
                    let m = fmt_monomial(e, name);
                    if m.is_empty() {
                        fmt_rat(c)
                    } else {
                        format!("{}*{}", fmt_rat(c), m)
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ");
            let exp = match k {
                0 => "s".to_string(),
                k if k < 0 => format!("s+{}", -k),
                k => format!("s-{k}"),
            };
            format!("({body})·f^({exp})")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn require_rank_one(desc: &PvsDescriptor) -> Result<(), WeylError> {
    if desc.rank == 1 {
        Ok(())
    } else {
        Err(WeylError::UnsupportedRank(desc.rank))
    }
}

/// Constant `ε'` with `f̌(∂)|f|^{s+1} = ε'·b(s)|f|^s` on the orbit.
///
/// Obtained by certifying the identity for `εf` and comparing with `b`.
pub fn orbit_sign_factor(desc: &PvsDescriptor, orbit: &OrbitChart) -> Result<Rational, WeylError> {
    require_rank_one(desc)?;
    let eps = rat_int(orbit.sign_vector[0] as i64);
    let b = b_function(desc.f(), desc.fdual())?;
    let b_eps = b_function(&desc.f().scale(&eps), desc.fdual())?;
    let c = b_eps.leading() / b.leading();
    if b_eps != b.scale(&c) {
        return Err(WeylError::NotEigen(format!("{b_eps} is not a multiple of {b}")));
    }
    Ok(c)
}

fn apply_fdual_power(desc: &PvsDescriptor, expr: SymbolicPower, times: u32) -> SymbolicPower {
    (0..times).fold(expr, |acc, _| acc.apply_operator(desc.fdual()))
}

/// Eigenvalue of the Capelli operator `D = h^M ∘ ȟ(∂)^M`, `h = f²`, on `|f|^s`.
pub fn capelli_eigenvalue(desc: &PvsDescriptor, m: u32) -> Result<UnivarPoly, WeylError> {
    twisted_capelli_eigenvalue(desc, m, 0)
}

/// Eigenvalue on `|f|^s` of `u ↦ g^{-m} · D(g^m · u)`, `g = f²`, computed by
/// direct symbolic application.
pub fn twisted_capelli_eigenvalue(desc: &PvsDescriptor, big_m: u32, m: i64) -> Result<UnivarPoly, WeylError> {
    require_rank_one(desc)?;
    let w = desc.h_weight();
    let start = SymbolicPower::power(desc.f(), 0).mul_base_power(w * m);
    let differentiated = apply_fdual_power(desc, start, w as u32 * big_m);
    let out = differentiated.mul_base_power(w * big_m as i64).mul_base_power(-w * m);
    out.as_eigen().ok_or_else(|| WeylError::NotEigen(display_power(&out)))
}

/// Checks the Harish-Chandra shift law: the `m`-twisted eigenvalue equals
/// `c(s + m·μ)`, `μ` the weight of `g`.
pub fn twist_shift_check(desc: &PvsDescriptor, big_m: u32, m: i64) -> Result<bool, WeylError> {
    let c = capelli_eigenvalue(desc, big_m)?;
    let twisted = twisted_capelli_eigenvalue(desc, big_m, m)?;
    Ok(twisted == c.shift(&rat_int(m * desc.h_weight())))
}

/// Top homogeneous part of `c(s)` evaluated at `s = −μ`.
pub fn leading_coeff_at(desc: &PvsDescriptor, big_m: u32) -> Result<Rational, WeylError> {
    let c = capelli_eigenvalue(desc, big_m)?;
    Ok(c.top_part().eval(&rat_int(-desc.h_weight())))
}

/// Affine form `α(λ) = slope·λ + offset`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AffineForm {
    pub slope: i32,
    #[serde(serialize_with = "ser_rat")]
    pub offset: Rational,
}

fn ser_rat<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rat(q))
}

impl AffineForm {
    pub fn eval(&self, lambda: Complex64) -> Complex64 {
        lambda * self.slope as f64 + rat_to_f64(&self.offset)
    }

    /// λ with `α(λ) = -k`.
    pub fn lambda_at(&self, value: f64) -> f64 {
        (value - rat_to_f64(&self.offset)) / self.slope as f64
    }
}

/// `L(λ) = Π_j Γ(α_j(λ))^{-1}` with `b(s) = C·Π_j (s + r_j)` and
/// `α_j(λ) = e(λ) + r_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GammaProduct {
    pub factors: Vec<AffineForm>,
    /// Leading constant `C` of `b`.
    #[serde(serialize_with = "ser_rat")]
    pub b_constant: Rational,
    /// Shifts `r_j`, ascending.
    #[serde(skip)]
    pub shifts: Vec<Rational>,
}

/// Location of the Γ factor nearest to a pole.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NearestPole {
    pub factor: usize,
    /// The non-positive integer `α_j` is closest to.
    pub at: i64,
    pub distance: f64,
}

impl GammaProduct {
    pub fn eval(&self, lambda: Complex64) -> Complex64 {
        self.factors.iter().map(|a| special::recip_gamma(a.eval(lambda))).product()
    }

    pub fn nearest_pole(&self, lambda: Complex64) -> Option<NearestPole> {
        self.factors
            .iter()
            .enumerate()
            .map(|(j, a)| {
                let (distance, at) = special::distance_to_gamma_pole(a.eval(lambda));
                NearestPole { factor: j, at, distance }
            })
            .min_by(|x, y| x.distance.total_cmp(&y.distance))
    }

    /// Real λ in `[lo, hi]` where some `α_j(λ) ∈ ℤ≤0`, ascending, deduplicated.
    pub fn pole_candidates(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut out = Vec::new();
        for a in &self.factors {
            for k in 0..10_000i64 {
                let l = a.lambda_at(-(k as f64));
                if (a.slope > 0 && l < lo) || (a.slope < 0 && l > hi) {
                    break;
                }
                if (lo..=hi).contains(&l) {
                    out.push(l);
                }
            }
        }
        out.sort_by(f64::total_cmp);
        out.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        out
    }

    /// Human-readable `Γ(λ + 1/2)^-1 …`.
    pub fn describe(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|a| {
                let lam = if a.slope < 0 { "-λ" } else { "λ" };
                if a.offset.is_zero() {
                    format!("Γ({lam})^-1")
                } else if a.offset > Rational::zero() {
                    format!("Γ({lam} + {})^-1", fmt_rat(&a.offset))
                } else {
                    format!("Γ({lam} - {})^-1", fmt_rat(&-a.offset.clone()))
                }
            })
            .collect::<Vec<_>>()
            .join(" · ")
    }
}

pub fn denominator(desc: &PvsDescriptor) -> Result<GammaProduct, WeylError> {
    require_rank_one(desc)?;
    let fac = desc.b().factor();
    if !fac.is_split() {
        return Err(WeylError::IrrationalRoots(fac.rest.to_string()));
    }
    let base = desc.exponent_offset();
    let shifts: Vec<Rational> = fac.roots.iter().map(|r| -r.clone()).rev().collect();
    let factors = shifts
        .iter()
        .map(|r| AffineForm { slope: desc.lambda_orientation, offset: &base + r })
        .collect();
    let b_constant = if fac.roots.is_empty() && desc.b().is_zero() { Rational::one() } else { fac.constant };
    Ok(GammaProduct { factors, b_constant, shifts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{diagonal_quadratic, rat};
    use crate::registry::builtin_space;

    #[test]
    fn b_function_line() {
        let x = MultiPoly::var(1, 0);
        assert_eq!(b_function(&x, &x).unwrap(), UnivarPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn b_function_quadrics() {
        for (signs, half_n) in [(vec![1, 1], rat_int(1)), (vec![1, 1, 1], rat(3, 2)), (vec![1, -1], rat_int(1))] {
            let q = diagonal_quadratic(&signs);
            let b = b_function(&q, &q).unwrap();
            assert_eq!(b, UnivarPoly::from_shifts(rat_int(4), &[rat_int(1), half_n]));
        }
    }

    #[test]
    fn not_eigen_for_cube() {
        let x = MultiPoly::var(1, 0);
        assert!(matches!(b_function(&x.pow(3), &x), Err(WeylError::NotEigen(_))));
    }

    #[test]
    fn sign_factors() {
        let t = builtin_space("TATE").unwrap();
        assert_eq!(orbit_sign_factor(&t, &t.orbits[0]).unwrap(), rat_int(1));
        assert_eq!(orbit_sign_factor(&t, &t.orbits[1]).unwrap(), rat_int(-1));
        let q = builtin_space("QF_1_1").unwrap();
        assert_eq!(orbit_sign_factor(&q, &q.orbits[1]).unwrap(), rat_int(-1));
    }

    #[test]
    fn capelli_tate() {
        let t = builtin_space("TATE").unwrap();
        assert_eq!(capelli_eigenvalue(&t, 1).unwrap(), UnivarPoly::from_i64(&[0, -1, 1]));
        assert_eq!(capelli_eigenvalue(&t, 0).unwrap(), UnivarPoly::one());
        assert_eq!(leading_coeff_at(&t, 1).unwrap(), rat_int(4));
    }

    #[test]
    fn twist_law_holds() {
        for name in ["TATE", "QF_1_1"] {
            let d = builtin_space(name).unwrap();
            for m in -2..=2 {
                assert!(twist_shift_check(&d, 1, m).unwrap(), "{name} m={m}");
            }
        }
    }

    #[test]
    fn denominators() {
        let t = builtin_space("TATE").unwrap();
        let g = denominator(&t).unwrap();
        assert_eq!(g.factors, vec![AffineForm { slope: 1, offset: rat(1, 2) }]);
        assert_eq!(g.pole_candidates(-3.0, 0.0), vec![-2.5, -1.5, -0.5]);
        assert_eq!(g.describe(), "Γ(λ + 1/2)^-1");
        let q = builtin_space("QF_2_0").unwrap();
        assert_eq!(denominator(&q).unwrap().factors.len(), 2);
    }

    #[test]
    fn constant_b_gives_empty_product() {
        let mut t = builtin_space("TATE").unwrap();
        t.bfun[0] = UnivarPoly::constant(rat_int(3));
        let g = denominator(&t).unwrap();
        assert!(g.factors.is_empty());
        assert_eq!(g.eval(Complex64::new(0.3, 0.0)), Complex64::new(1.0, 0.0));
    }
}
