//! Gaussian–Hermite Schwartz functions with exact Fourier transforms.
//!
//! A [`TestFunction`] is `ξ₀(x) = p(x)·exp(−π σ² |x|²)` with `σ` a positive
//! rational and `p` a polynomial whose coefficients live in `ℚ(i)[π, π⁻¹]`
//! ([`PiCoeff`]). The class is closed under multiplication by polynomials,
//! constant-coefficient operators and the Fourier transform
//!
//! ```text
//! F_a ξ(y) = ∫ ξ(x) e^{2πi a ⟨x, y⟩} dx,
//! ```
//!
//! so every transform below is exact; only [`TestFunction::evaluate`] goes
//! through floating point.

use crate::poly::{fmt_monomial, fmt_rat, rat_int, var_name, rat_to_f64, MultiPoly, Poly, Rational, Ring};
use num_complex::{Complex, Complex64};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

pub type CRational = Complex<Rational>;

/// Element of `ℚ(i)[π, π⁻¹]`: `Σ_k c_k π^k`.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct PiCoeff {
    terms: BTreeMap<i32, CRational>,
}

impl PiCoeff {
    pub fn new(c: CRational, pi_power: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(pi_power, c);
        }
        PiCoeff { terms }
    }

    pub fn rational(q: Rational) -> Self {
        Self::new(Complex::new(q, Rational::zero()), 0)
    }

    pub fn i() -> Self {
        Self::new(Complex::new(Rational::zero(), Rational::one()), 0)
    }

    pub fn pi_power(k: i32) -> Self {
        Self::new(Complex::one(), k)
    }

    pub fn to_complex(&self) -> Complex64 {
        self.terms
            .iter()
            .map(|(k, c)| Complex64::new(rat_to_f64(&c.re), rat_to_f64(&c.im)) * PI.powi(*k))
            .sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &CRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }
}

impl Zero for PiCoeff {
    fn zero() -> Self {
        PiCoeff::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PiCoeff {
    fn one() -> Self {
        PiCoeff::rational(Rational::one())
    }
}

impl Add for PiCoeff {
    type Output = PiCoeff;
    fn add(mut self, rhs: PiCoeff) -> PiCoeff {
        for (k, c) in rhs.terms {
            let slot = self.terms.entry(k).or_insert_with(CRational::zero);
            *slot = slot.clone() + c;
            if slot.is_zero() {
                self.terms.remove(&k);
            }
        }
        self
    }
}

impl Neg for PiCoeff {
    type Output = PiCoeff;
    fn neg(self) -> PiCoeff {
        PiCoeff { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Sub for PiCoeff {
    type Output = PiCoeff;
    fn sub(self, rhs: PiCoeff) -> PiCoeff {
        self + (-rhs)
    }
}

impl Mul for PiCoeff {
    type Output = PiCoeff;
    fn mul(self, rhs: PiCoeff) -> PiCoeff {
        let mut out = PiCoeff::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out = out + PiCoeff::new(c1.clone() * c2.clone(), k1 + k2);
            }
        }
        out
    }
}

impl Ring for PiCoeff {
    fn from_rational(q: &Rational) -> Self {
        PiCoeff::rational(q.clone())
    }
}

impl fmt::Display for PiCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let num = match (c.re.is_zero(), c.im.is_zero()) {
                    (false, true) => fmt_rat(&c.re),
                    (true, false) => format!("{}i", fmt_rat(&c.im)),
                    _ => format!("({} + {}i)", fmt_rat(&c.re), fmt_rat(&c.im)),
                };
                match k {
                    0 => num,
                    1 => format!("{num}·π"),
                    k => format!("{num}·π^{k}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub type PiPoly = Poly<PiCoeff>;

impl fmt::Display for PiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.nvars();
        let parts: Vec<String> = self
            .terms()
            .rev()
            .map(|(e, c)| {
                let mono = fmt_monomial(e, |j| var_name(n, j));
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono,
                    (false, false) => format!("({c})*{mono}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SchwartzError {
    #[error("additive character parameter must be nonzero")]
    ZeroCharacter,
    #[error("dilation factor must be nonzero")]
    ZeroDilation,
}

/// `ψ_a(t) = e^{2πi a t}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiCharacter {
    a: Rational,
}

impl PsiCharacter {
    pub fn new(a: Rational) -> Result<Self, SchwartzError> {
        if a.is_zero() {
            return Err(SchwartzError::ZeroCharacter);
        }
        Ok(PsiCharacter { a })
    }

    pub fn standard() -> Self {
        PsiCharacter { a: Rational::one() }
    }

    pub fn from_i64(a: i64) -> Result<Self, SchwartzError> {
        Self::new(rat_int(a))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// `ψ_{−a}`.
    pub fn inverse(&self) -> Self {
        PsiCharacter { a: -self.a.clone() }
    }

    /// `c(ψ_a) = 1/(2πi a)` exactly.
    pub fn c_exact(&self) -> PiCoeff {
        // 1/(2πia) = −i/(2a) · π⁻¹
        PiCoeff::new(Complex::new(Rational::zero(), -(self.a.clone() * rat_int(2)).recip()), -1)
    }
}

/// `c(ψ)` with `F(f·ξ) = c(ψ)^{deg f} f(∂) F(ξ)`; purely imaginary.
pub fn c_psi(psi: &PsiCharacter) -> Complex64 {
    psi.c_exact().to_complex()
}

/// `A(ψ_a) = |a|^{−n}`, exact.
pub fn a_psi_exact(psi: &PsiCharacter, n: usize) -> Rational {
    num_traits::pow(psi.a.abs(), n).recip()
}

pub fn a_psi(psi: &PsiCharacter, n: usize) -> f64 {
    rat_to_f64(&a_psi_exact(psi, n))
}

/// `ξ₀(x) = p(x) exp(−π σ² |x|²)`, carried as the half-density `ξ₀ |Ω|^{1/2}`.
#[derive(Clone, PartialEq, Debug)]
pub struct TestFunction {
    n: usize,
    sigma: Rational,
    poly: PiPoly,
}

impl TestFunction {
    pub fn new(poly: PiPoly, sigma: Rational) -> Self {
        assert!(sigma.is_positive(), "Gaussian scale must be positive");
        TestFunction { n: poly.nvars(), sigma, poly }
    }

    pub fn gaussian(n: usize) -> Self {
        Self::new(PiPoly::one(n), Rational::one())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(PiPoly::zero(n), Rational::one())
    }

    /// `x^α · e^{−π|x|²}`.
    pub fn monomial(alpha: &[u32]) -> Self {
        Self::new(PiPoly::monomial(alpha.to_vec(), PiCoeff::one()), Rational::one())
    }

    pub fn from_rational_poly(p: &MultiPoly) -> Self {
        Self::new(lift(p), Rational::one())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> &Rational {
        &self.sigma
    }

    pub fn poly(&self) -> &PiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.poly.total_degree().unwrap_or(0)
    }

    fn with_poly(&self, poly: PiPoly) -> Self {
        TestFunction { n: self.n, sigma: self.sigma.clone(), poly }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.sigma, other.sigma, "adding test functions with different Gaussian scales");
        self.with_poly(&self.poly + &other.poly)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.sigma, other.sigma, "subtracting test functions with different Gaussian scales");
        self.with_poly(&self.poly - &other.poly)
    }

    pub fn scale(&self, c: &PiCoeff) -> Self {
        self.with_poly(self.poly.scale(c))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&PiCoeff::rational(q.clone()))
    }

    /// `g · ξ`.
    pub fn mul_poly(&self, g: &MultiPoly) -> Self {
        self.with_poly(&self.poly * &lift(g))
    }

    /// `∂_j ξ` using `∂_j (p G) = (∂_j p − 2π σ² x_j p) G`.
    pub fn partial(&self, j: usize) -> Self {
        let coef = PiCoeff::new(Complex::new(rat_int(-2) * &self.sigma * &self.sigma, Rational::zero()), 1);
        let mut e = vec![0; self.n];
        e[j] = 1;
        let shifted = self.poly.mul_monomial(&e, &coef);
        self.with_poly(&self.poly.derivative(j) + &shifted)
    }

    /// Constant-coefficient operator `q(∂)`.
    pub fn apply_operator(&self, q: &MultiPoly) -> Self {
        assert_eq!(q.nvars(), self.n, "operator dimension mismatch");
        let mut cache: BTreeMap<Vec<u32>, TestFunction> = BTreeMap::new();
        let mut out = self.with_poly(PiPoly::zero(self.n));
        for (beta, c) in q.terms() {
            let d = self.derive_multi(beta, &mut cache);
            out = out.add(&d.scale_rational(c));
        }
        out
    }

    fn derive_multi(&self, beta: &[u32], cache: &mut BTreeMap<Vec<u32>, TestFunction>) -> TestFunction {
        if beta.iter().all(|&b| b == 0) {
            return self.clone();
        }
        if let Some(hit) = cache.get(beta) {
            return hit.clone();
        }
        let j = beta.iter().rposition(|&b| b > 0).unwrap();
        let mut prev = beta.to_vec();
        prev[j] -= 1;
        let out = self.derive_multi(&prev, cache).partial(j);
        cache.insert(beta.to_vec(), out.clone());
        out
    }

    /// Pullback along `x ↦ a·x`.
    pub fn dilate(&self, a: &Rational) -> Result<Self, SchwartzError> {
        if a.is_zero() {
            return Err(SchwartzError::ZeroDilation);
        }
        let mut poly = PiPoly::zero(self.n);
        for (e, c) in self.poly.terms() {
            let k: u32 = e.iter().sum();
            poly.add_term(e.clone(), c.clone() * PiCoeff::rational(num_traits::pow(a.clone(), k as usize)));
        }
        Ok(TestFunction { n: self.n, sigma: &self.sigma * a.abs(), poly })
    }

    /// Exact `F_a ξ`.
    pub fn fourier(&self, psi: &PsiCharacter) -> Self {
        // F_a[x^α G_σ] = c^{|α|} ∂^α (σ^{-n} G_{|a|/σ}),  c = 1/(2πia)
        let sigma_hat = psi.a.abs() / &self.sigma;
        let seed = TestFunction {
            n: self.n,
            sigma: sigma_hat,
            poly: PiPoly::constant(self.n, PiCoeff::rational(num_traits::pow(self.sigma.clone(), self.n).recip())),
        };
        let c = psi.c_exact();
        let mut cache = BTreeMap::new();
        let mut out = seed.with_poly(PiPoly::zero(self.n));
        for (alpha, coef) in self.poly.terms() {
            let k: u32 = alpha.iter().sum();
            let factor = coef.clone() * pi_pow(&c, k);
            let d = seed.derive_multi(alpha, &mut cache);
            out = out.add(&d.scale(&factor));
        }
        out
    }

    /// Complex monomial coefficients for numeric work.
    pub fn numeric_terms(&self) -> Vec<(Vec<u32>, Complex64)> {
        self.poly.terms().map(|(e, c)| (e.clone(), c.to_complex())).collect()
    }

    pub fn evaluate(&self, x: &[f64]) -> Complex64 {
        assert_eq!(x.len(), self.n);
        let s2 = rat_to_f64(&self.sigma).powi(2);
        let r2: f64 = x.iter().map(|v| v * v).sum();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut comp = Complex64::new(0.0, 0.0);
        // Kahan-compensated polynomial sum
        for (e, c) in self.numeric_terms() {
            let m: f64 = e.iter().zip(x).map(|(&k, &xi)| xi.powi(k as i32)).product();
            let y = c * m - comp;
            let t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        }
        acc * (-PI * s2 * r2).exp()
    }

    /// `ξ₀(0)`.
    pub fn value_at_origin(&self) -> Complex64 {
        self.poly.coeff(&vec![0; self.n]).to_complex()
    }
}

fn pi_pow(c: &PiCoeff, k: u32) -> PiCoeff {
    (0..k).fold(PiCoeff::one(), |acc, _| acc * c.clone())
}

pub fn lift(p: &MultiPoly) -> PiPoly {
    p.map_coeffs(|c| PiCoeff::rational(c.clone()))
}

/// `H̃_k`, monic Hermite polynomials adapted to `e^{−πx²}`:
/// `H̃_{k+1} = x H̃_k − k/(4π) H̃_{k−1}`.
fn hermite(k: u32) -> Vec<PiCoeff> {
    let mut prev: Vec<PiCoeff> = vec![];
    let mut cur = vec![PiCoeff::one()];
    for j in 0..k {
        let mut next = vec![PiCoeff::zero()];
        next.extend(cur.iter().cloned());
        let c = PiCoeff::new(Complex::new(-Rational::new(j.into(), 4.into()), Rational::zero()), -1);
        for (i, p) in prev.iter().enumerate() {
            next[i] = next[i].clone() + c.clone() * p.clone();
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Exponent vectors of total degree ≤ `d`, graded, then lexicographically
/// descending within a degree (`x` before `y`).
pub fn graded_exponents(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for deg in 0..=d {
        let mut level = Vec::new();
        fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == n - 1 {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
                return;
            }
            for k in (0..=left).rev() {
                cur.push(k);
                rec(n, left - k, cur, out);
                cur.pop();
            }
        }
        if n == 0 {
            continue;
        }
        rec(n, deg, &mut Vec::new(), &mut level);
        out.extend(level);
    }
    out
}

/// Hermite function `Π_j H̃_{α_j}(x_j) · e^{−π|x|²}`, an eigenfunction of
/// `F_1` with eigenvalue `i^{|α|}`.
pub fn hermite_function(alpha: &[u32]) -> TestFunction {
    let n = alpha.len();
    let mut p = PiPoly::one(n);
    for (j, &k) in alpha.iter().enumerate() {
        let h = hermite(k);
        let mut hj = PiPoly::zero(n);
        for (deg, c) in h.into_iter().enumerate() {
            let mut e = vec![0; n];
            e[j] = deg as u32;
            hj.add_term(e, c);
        }
        p = &p * &hj;
    }
    TestFunction::new(p, Rational::one())
}

/// Hermite × Gaussian basis of all degrees `≤ max_degree`, `C(n+d, d)` members.
pub fn basis(n: usize, max_degree: u32) -> Vec<TestFunction> {
    graded_exponents(n, max_degree).iter().map(|a| hermite_function(a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{diagonal_quadratic, rat};
    use crate::quadrature;

    fn numeric_fourier_1d(xi: &TestFunction, a: f64, y: f64) -> Complex64 {
        let re = quadrature::interval_fixed(|x| (xi.evaluate(&[x]) * Complex64::from_polar(1.0, 2.0 * PI * a * x * y)).re, -9.0, 9.0, 8);
        let im = quadrature::interval_fixed(|x| (xi.evaluate(&[x]) * Complex64::from_polar(1.0, 2.0 * PI * a * x * y)).im, -9.0, 9.0, 8);
        Complex64::new(re, im)
    }

    #[test]
    fn gaussian_is_self_dual() {
        let g = TestFunction::gaussian(1);
        assert_eq!(g.fourier(&PsiCharacter::standard()), g);
        for y in [-1.0, -0.3, 0.0, 0.4, 1.2] {
            let v = numeric_fourier_1d(&g, 1.0, y);
            assert!((v - g.evaluate(&[y])).norm() < 1e-10);
        }
    }

    #[test]
    fn x_gaussian_transform() {
        let xi = TestFunction::monomial(&[1]);
        let f = xi.fourier(&PsiCharacter::standard());
        // i·y·e^{−πy²}
        assert_eq!(f, TestFunction::monomial(&[1]).scale(&PiCoeff::i()));
        for y in [-0.8, 0.25, 1.1] {
            assert!((numeric_fourier_1d(&xi, 1.0, y) - f.evaluate(&[y])).norm() < 1e-10);
        }
    }

    #[test]
    fn general_character_numeric() {
        let xi = basis(1, 3)[3].clone();
        let psi = PsiCharacter::new(rat(-3, 2)).unwrap();
        let f = xi.fourier(&psi);
        for y in [-0.7, 0.1, 0.9] {
            assert!((numeric_fourier_1d(&xi, -1.5, y) - f.evaluate(&[y])).norm() < 1e-10);
        }
    }

    #[test]
    fn inversion_is_exact() {
        for a in [rat_int(1), rat_int(2), rat(-1, 3)] {
            let psi = PsiCharacter::new(a).unwrap();
            for xi in basis(2, 3) {
                let back = xi.fourier(&psi).fourier(&psi.inverse());
                assert_eq!(back, xi.scale_rational(&a_psi_exact(&psi, 2)));
            }
        }
    }

    #[test]
    fn hermite_eigenfunctions() {
        let psi = PsiCharacter::standard();
        for xi in basis(1, 5) {
            let k = xi.degree();
            let ik = (0..k).fold(PiCoeff::one(), |acc, _| acc * PiCoeff::i());
            assert_eq!(xi.fourier(&psi), xi.scale(&ik));
        }
    }

    #[test]
    fn commutation_with_invariants() {
        let psi = PsiCharacter::new(rat_int(2)).unwrap();
        let q = diagonal_quadratic(&[1, -1]);
        let c2 = psi.c_exact() * psi.c_exact();
        for xi in basis(2, 2) {
            let lhs = xi.mul_poly(&q).fourier(&psi);
            let rhs = xi.fourier(&psi).apply_operator(&q).scale(&c2);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn constants() {
        let c = c_psi(&PsiCharacter::standard());
        assert!(c.re == 0.0 && (c.im + 1.0 / (2.0 * PI)).abs() < 1e-16);
        assert_eq!(a_psi_exact(&PsiCharacter::from_i64(2).unwrap(), 2), rat(1, 4));
        assert_eq!(a_psi(&PsiCharacter::from_i64(-1).unwrap(), 3), 1.0);
        assert_eq!(PsiCharacter::from_i64(0), Err(SchwartzError::ZeroCharacter));
    }

    #[test]
    fn basis_shapes() {
        assert_eq!(basis(1, 1), vec![TestFunction::gaussian(1), TestFunction::monomial(&[1])]);
        assert_eq!(basis(2, 2).len(), 6);
        assert_eq!(basis(3, 2).len(), 10);
        assert_eq!(basis(1, 0).len(), 1);
        assert_eq!(graded_exponents(2, 1), vec![vec![0, 0], vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn dilation_and_derivative() {
        let xi = TestFunction::monomial(&[1]);
        let d = xi.dilate(&rat_int(2)).unwrap();
        assert!((d.evaluate(&[0.3]) - xi.evaluate(&[0.6])).norm() < 1e-15);
        let h = 1e-5;
        let num = (xi.evaluate(&[0.4 + h]) - xi.evaluate(&[0.4 - h])) / (2.0 * h);
        assert!((xi.partial(0).evaluate(&[0.4]) - num).norm() < 1e-8);
    }
}
