//! Prehomogeneous vector space descriptors and the built-in registry.
//!
//! λ is always expressed in the shared X-side coordinate. A descriptor maps it
//! to the integrand exponent of `|f|` against Lebesgue measure by
//! [`PvsDescriptor::exponent`]:
//!
//! ```text
//! e(λ) = o·λ + o·λ₀ − σ_μ
//! ```
//!
//! where `o` is the orientation, `λ₀` is stored in the shared coordinate (so
//! the dual stores `−λ₀`) and `σ_μ` is stored in the space's own coordinate.

mod chart;
mod json;

pub use chart::{Chart, OrbitChart, DEFAULT_TRUNCATION};
pub use json::{from_json, to_json};

use crate::poly::{diagonal_quadratic, fmt_rat, rat, rat_int, rat_to_f64, MultiPoly, Rational};
use crate::weyl::{self, UnivarPoly};
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RegistryError {
    #[error("unknown space '{0}' (known: TATE, QF_2_0, QF_1_1, QF_3_0, QF_2_1)")]
    NotFound(String),
    #[error("malformed descriptor document: {0}")]
    Malformed(String),
}

pub const BUILTIN_NAMES: [&str; 5] = ["TATE", "QF_2_0", "QF_1_1", "QF_3_0", "QF_2_1"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantDegree {
    pub primal: u32,
    pub dual: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PvsDescriptor {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub basic_invariants: Vec<MultiPoly>,
    pub dual_basic_invariants: Vec<MultiPoly>,
    pub degrees: Vec<InvariantDegree>,
    pub orbits: Vec<OrbitChart>,
    /// Half-density shift, shared coordinate.
    pub lambda0: Vec<Rational>,
    /// Invariant measure `|f|^{−σ_μ} dx`, own coordinate.
    pub measure_exponent: Vec<Rational>,
    pub lambda_orientation: i32,
    pub bfun: Vec<UnivarPoly>,
    /// Convergence threshold on `Re(o·λ)` (open condition), own coordinate.
    pub kappa: Vec<Rational>,
    pub d_coeffs: Vec<u32>,
    /// Diagonal of the linear identification `X → X̌` carrying orbits across.
    pub identification: Vec<Rational>,
}

impl PvsDescriptor {
    fn rank_one(&self) -> usize {
        debug_assert!(self.rank >= 1);
        0
    }

    pub fn f(&self) -> &MultiPoly {
        &self.basic_invariants[self.rank_one()]
    }

    pub fn fdual(&self) -> &MultiPoly {
        &self.dual_basic_invariants[self.rank_one()]
    }

    pub fn b(&self) -> &UnivarPoly {
        &self.bfun[self.rank_one()]
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_dual(&self) -> bool {
        self.lambda_orientation < 0
    }

    /// Integrand exponent `e(λ)` of `|f|` against Lebesgue measure.
    pub fn exponent(&self, lambda: Complex64) -> Complex64 {
        let o = self.lambda_orientation as f64;
        lambda * o + o * rat_to_f64(&self.lambda0[0]) - rat_to_f64(&self.measure_exponent[0])
    }

    /// Inverse of [`PvsDescriptor::exponent`].
    pub fn lambda_from_exponent(&self, e: Complex64) -> Complex64 {
        let o = self.lambda_orientation as f64;
        (e + rat_to_f64(&self.measure_exponent[0])) * o - rat_to_f64(&self.lambda0[0])
    }

    /// Exact constant part of `e(λ)`: `o·λ₀ − σ_μ`.
    pub fn exponent_offset(&self) -> Rational {
        rat_int(self.lambda_orientation as i64) * &self.lambda0[0] - &self.measure_exponent[0]
    }

    /// Whether the defining integral converges absolutely at λ.
    pub fn converges_at(&self, lambda: Complex64) -> bool {
        (lambda * self.lambda_orientation as f64).re > rat_to_f64(&self.kappa[0])
    }

    /// `d(λ) = Σ λ_i · deg f̌_i`.
    pub fn d_of(&self, lambda: &[Complex64]) -> Complex64 {
        lambda.iter().zip(&self.d_coeffs).map(|(l, &d)| l * d as f64).sum()
    }

    /// Index of the orbit containing `x`, judged by the sign of `f`.
    pub fn orbit_of(&self, x: &[Rational]) -> Option<usize> {
        let signs: Vec<i8> = self.basic_invariants.iter().map(|f| sign_of(&f.eval_rational(x))).collect();
        if signs.contains(&0) {
            return None;
        }
        self.orbits.iter().position(|o| o.sign_vector == signs)
    }

    /// Eigencharacter coordinate of the non-degenerate invariant `h = f²`.
    pub fn h_weight(&self) -> i64 {
        2
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }
}

fn sign_of(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// `κ` derived from the exponent map and the largest root of `b`.
fn derived_kappa(lambda0_own: &Rational, sigma: &Rational, b: &UnivarPoly) -> Option<Rational> {
    let fac = b.factor();
    let rmax = fac.roots.iter().max()?.clone();
    Some(sigma - lambda0_own + rmax)
}

fn tate() -> PvsDescriptor {
    let f = MultiPoly::var(1, 0);
    let b = UnivarPoly::from_i64(&[1, 1]);
    let orbit = |sign: i8| OrbitChart {
        sign_vector: vec![sign],
        sample_point: vec![rat_int(sign as i64)],
        parametrization: Chart::HalfLine { sign },
        truncation: DEFAULT_TRUNCATION,
    };
    PvsDescriptor {
        name: "TATE".into(),
        dim: 1,
        rank: 1,
        basic_invariants: vec![f.clone()],
        dual_basic_invariants: vec![f],
        degrees: vec![InvariantDegree { primal: 1, dual: 1 }],
        orbits: vec![orbit(1), orbit(-1)],
        lambda0: vec![rat(1, 2)],
        measure_exponent: vec![rat_int(1)],
        lambda_orientation: 1,
        bfun: vec![b],
        kappa: vec![rat(-1, 2)],
        d_coeffs: vec![1],
        identification: vec![rat_int(1)],
    }
}

fn quadratic(p: usize, q: usize) -> PvsDescriptor {
    let n = p + q;
    let signs: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
    let f = diagonal_quadratic(&signs);
    let half_n = rat(n as i64, 2);
    let b = UnivarPoly::from_shifts(rat_int(4), &[rat_int(1), half_n.clone()]);
    let unit = |j: usize| -> Vec<Rational> { (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect() };
    let orbits = if q == 0 {
        vec![OrbitChart {
            sign_vector: vec![1],
            sample_point: unit(0),
            parametrization: Chart::SphereShell { p },
            truncation: DEFAULT_TRUNCATION,
        }]
    } else {
        vec![
            OrbitChart {
                sign_vector: vec![1],
                sample_point: unit(0),
                parametrization: Chart::HyperboloidShell { p, q, sign: 1 },
                truncation: DEFAULT_TRUNCATION,
            },
            OrbitChart {
                sign_vector: vec![-1],
                sample_point: unit(n - 1),
                parametrization: Chart::HyperboloidShell { p, q, sign: -1 },
                truncation: DEFAULT_TRUNCATION,
            },
        ]
    };
    let lambda0 = rat(n as i64, 4);
    let kappa = derived_kappa(&lambda0, &half_n, &b).expect("quadric b-function has roots");
    PvsDescriptor {
        name: format!("QF_{p}_{q}"),
        dim: n,
        rank: 1,
        basic_invariants: vec![f.clone()],
        dual_basic_invariants: vec![f],
        degrees: vec![InvariantDegree { primal: 2, dual: 2 }],
        orbits,
        lambda0: vec![lambda0],
        measure_exponent: vec![half_n],
        lambda_orientation: 1,
        bfun: vec![b],
        kappa: vec![kappa],
        d_coeffs: vec![2],
        identification: signs.iter().map(|&s| rat_int(2 * s)).collect(),
    }
}

/// Looks up a built-in space. A `_DUAL` suffix returns its dual.
pub fn builtin_space(name: &str) -> Result<PvsDescriptor, RegistryError> {
    if let Some(base) = name.strip_suffix("_DUAL") {
        return builtin_space(base).map(|d| dual(&d));
    }
    match name {
        "TATE" => Ok(tate()),
        "QF_2_0" => Ok(quadratic(2, 0)),
        "QF_1_1" => Ok(quadratic(1, 1)),
        "QF_3_0" => Ok(quadratic(3, 0)),
        "QF_2_1" => Ok(quadratic(2, 1)),
        other => Err(RegistryError::NotFound(other.to_string())),
    }
}

pub fn builtin_spaces() -> Vec<PvsDescriptor> {
    BUILTIN_NAMES.iter().map(|n| builtin_space(n).expect("built-in")).collect()
}

/// The dual space: swaps `f ↔ f̌`, negates orientation and `λ₀`, and carries
/// each orbit across the stored identification.
pub fn dual(desc: &PvsDescriptor) -> PvsDescriptor {
    let name = match desc.name.strip_suffix("_DUAL") {
        Some(base) => base.to_string(),
        None => format!("{}_DUAL", desc.name),
    };
    let iota = &desc.identification;
    let orbits = desc
        .orbits
        .iter()
        .map(|o| {
            let sample: Vec<Rational> = o.sample_point.iter().zip(iota).map(|(x, d)| x * d).collect();
            let sign_vector = desc.dual_basic_invariants.iter().map(|g| sign_of(&g.eval_rational(&sample))).collect();
            OrbitChart { sign_vector, sample_point: sample, parametrization: o.parametrization, truncation: o.truncation }
        })
        .collect();
    PvsDescriptor {
        name,
        dim: desc.dim,
        rank: desc.rank,
        basic_invariants: desc.dual_basic_invariants.clone(),
        dual_basic_invariants: desc.basic_invariants.clone(),
        degrees: desc.degrees.iter().map(|d| InvariantDegree { primal: d.dual, dual: d.primal }).collect(),
        orbits,
        lambda0: desc.lambda0.iter().map(|l| -l.clone()).collect(),
        measure_exponent: desc.measure_exponent.clone(),
        lambda_orientation: -desc.lambda_orientation,
        bfun: desc.bfun.clone(),
        kappa: desc.kappa.clone(),
        d_coeffs: desc.degrees.iter().map(|d| d.primal).collect(),
        identification: iota.iter().map(|d| d.recip()).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub invariant: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub space: String,
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, invariant: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.invariant == invariant)
    }
}

struct Recorder(Vec<CheckOutcome>);

impl Recorder {
    fn check(&mut self, invariant: &str, failure: Option<String>) {
        self.0.push(CheckOutcome { invariant: invariant.into(), passed: failure.is_none(), witness: failure });
    }
}

fn fmt_point(x: &[Rational]) -> String {
    format!("({})", x.iter().map(fmt_rat).collect::<Vec<_>>().join(", "))
}

/// Rational probe points `{-2, -1, 1/2, 1, 3}^n`.
fn rational_probes(n: usize) -> Vec<Vec<Rational>> {
    let vals = [rat_int(-2), rat_int(-1), rat(1, 2), rat_int(1), rat_int(3)];
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|p: Vec<Rational>| vals.iter().map(move |v| [p.clone(), vec![v.clone()]].concat())).collect();
    }
    out
}

/// Runs every descriptor invariant; failures are reported with witnesses.
pub fn validate(desc: &PvsDescriptor) -> ValidationReport {
    let mut rec = Recorder(Vec::new());
    let r = desc.rank;
    let shape_ok = desc.basic_invariants.len() == r
        && desc.dual_basic_invariants.len() == r
        && desc.degrees.len() == r
        && desc.lambda0.len() == r
        && desc.measure_exponent.len() == r
        && desc.bfun.len() == r
        && desc.kappa.len() == r
        && desc.d_coeffs.len() == r
        && desc.identification.len() == desc.dim
        && desc.orbits.iter().all(|o| o.sign_vector.len() == r && o.sample_point.len() == desc.dim);
    rec.check("shape", (!shape_ok).then(|| format!("field lengths inconsistent with rank {r} and dim {}", desc.dim)));
    if !shape_ok {
        return ValidationReport { space: desc.name.clone(), checks: rec.0 };
    }

    let mut bad = None;
    for (i, (f, g)) in desc.basic_invariants.iter().zip(&desc.dual_basic_invariants).enumerate() {
        if f.homogeneous_degree() != Some(desc.degrees[i].primal) || g.homogeneous_degree() != Some(desc.degrees[i].dual) {
            bad = Some(format!("index {i}: f = {f}, f̌ = {g} against stored degrees {:?}", desc.degrees[i]));
        }
    }
    rec.check("homogeneous_degrees", bad);

    let mut bad = None;
    for (k, o) in desc.orbits.iter().enumerate() {
        for (i, f) in desc.basic_invariants.iter().enumerate() {
            let v = f.eval_rational(&o.sample_point);
            if v.is_zero() {
                bad = Some(format!("orbit {k}: f_{i} vanishes at {}", fmt_point(&o.sample_point)));
            }
        }
    }
    rec.check("sample_nonvanishing", bad);

    let mut bad = None;
    for (k, o) in desc.orbits.iter().enumerate() {
        let signs: Vec<i8> = desc.basic_invariants.iter().map(|f| sign_of(&f.eval_rational(&o.sample_point))).collect();
        if signs != o.sign_vector {
            bad = Some(format!(
                "orbit {k}: f at {} has signs {:?}, stored sign_vector {:?}",
                fmt_point(&o.sample_point),
                signs,
                o.sign_vector
            ));
        }
    }
    rec.check("sign_vector", bad);

    let mut distinct: Vec<&Vec<i8>> = desc.orbits.iter().map(|o| &o.sign_vector).collect();
    distinct.sort();
    distinct.dedup();
    rec.check(
        "orbits_distinct",
        (distinct.len() != desc.orbits.len() || desc.orbits.is_empty()).then(|| "orbit sign vectors repeat or no orbits".to_string()),
    );

    let mut bad = None;
    for (k, o) in desc.orbits.iter().enumerate() {
        if o.parametrization.dim() != desc.dim {
            bad = Some(format!("orbit {k}: chart dimension {} ≠ {}", o.parametrization.dim(), desc.dim));
            continue;
        }
        for (t, x) in o.probe_points() {
            let v = desc.f().eval_f64(&x);
            if (v.abs() - t).abs() > 1e-12 * t.max(1.0) || (v.signum() as i8) != o.sign_vector[0] {
                bad = Some(format!("orbit {k}: chart point {x:?} has f = {v}, expected {}·{t}", o.sign_vector[0]));
            }
        }
    }
    rec.check("chart_fiber", bad);

    rec.check(
        "orientation",
        (desc.lambda_orientation.abs() != 1).then(|| format!("lambda_orientation = {}", desc.lambda_orientation)),
    );

    // f̌(ιx) / f(x)^{deg f̌ / deg f} must be a nonzero constant: after the
    // homogeneous inversion, f · f̌∘ι carries no eigencharacter.
    let mut bad = None;
    for i in 0..r {
        let (dp, dd) = (desc.degrees[i].primal, desc.degrees[i].dual);
        if dp == 0 || dd % dp != 0 {
            bad = Some(format!("index {i}: degree ratio {dd}/{dp} not integral"));
            continue;
        }
        let mut ratio: Option<Rational> = None;
        let points = desc.orbits.iter().map(|o| o.sample_point.clone()).chain(rational_probes(desc.dim));
        for x in points {
            let fx = desc.basic_invariants[i].eval_rational(&x);
            if fx.is_zero() {
                continue;
            }
            let ix: Vec<Rational> = x.iter().zip(&desc.identification).map(|(a, d)| a * d).collect();
            let q = desc.dual_basic_invariants[i].eval_rational(&ix) / num_traits::pow(fx, (dd / dp) as usize);
            match &ratio {
                None if q.is_zero() => bad = Some(format!("f̌∘ι vanishes at {}", fmt_point(&x))),
                None => ratio = Some(q),
                Some(r0) if *r0 != q => {
                    bad = Some(format!("f̌(ιx)/f(x) = {} at {} but {} elsewhere", fmt_rat(&q), fmt_point(&x), fmt_rat(r0)))
                }
                _ => {}
            }
        }
    }
    rec.check("eigencharacter_balance", bad);

    let mut bad = None;
    for i in 0..r {
        let f = &desc.basic_invariants[i];
        let g = &desc.dual_basic_invariants[i];
        let rem = weyl::bernstein_remainder(f, g, &desc.bfun[i]);
        if !rem.is_zero() {
            bad = Some(format!("f̌(∂)f^(s+1) − ({})·f^s = {}", desc.bfun[i], weyl::display_power(&rem)));
        }
    }
    rec.check("bfun_certified", bad);

    let mut bad = None;
    for i in 0..r {
        if desc.bfun[i].degree() != Some(desc.degrees[i].dual as usize) {
            bad = Some(format!("deg b = {:?}, deg f̌ = {}", desc.bfun[i].degree(), desc.degrees[i].dual));
        }
    }
    rec.check("bfun_degree", bad);

    let mut bad = None;
    for i in 0..r {
        let four = &desc.lambda0[i] * rat_int(4);
        let two = &desc.measure_exponent[i] * rat_int(2);
        if !four.is_integer() || !two.is_integer() {
            bad = Some(format!("λ₀ = {}, σ_μ = {}", fmt_rat(&desc.lambda0[i]), fmt_rat(&desc.measure_exponent[i])));
        }
    }
    rec.check("lambda0_lattice", bad);

    let mut bad = None;
    for i in 0..r {
        if desc.d_coeffs[i] != desc.degrees[i].dual {
            bad = Some(format!("d_coeffs[{i}] = {} but deg f̌ = {}", desc.d_coeffs[i], desc.degrees[i].dual));
        }
    }
    rec.check("d_coeffs", bad);

    let mut bad = None;
    for i in 0..r {
        let own = rat_int(desc.lambda_orientation as i64) * &desc.lambda0[i];
        match derived_kappa(&own, &desc.measure_exponent[i], &desc.bfun[i]) {
            Some(k) if k == desc.kappa[i] => {}
            Some(k) => bad = Some(format!("κ = {}, derived {}", fmt_rat(&desc.kappa[i]), fmt_rat(&k))),
            None => bad = Some("b has no rational root".to_string()),
        }
    }
    rec.check("kappa", bad);

    ValidationReport { space: desc.name.clone(), checks: rec.0 }
}
