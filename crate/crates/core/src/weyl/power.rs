//! Symbolic powers `Σ_k p_k(x; s) · f^{s-k}` and the Leibniz calculus on them.

use super::univar::UnivarPoly;
use crate::poly::{rat_int, MultiPoly, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Expression `Σ_k p_k(x; s) · f^{s-k}`.
///
/// Each `p_k` lives in `ℚ[x_1..x_n, s]`: the exponent variable `s` is the
/// trailing variable (index `n`). `k` may be negative, so that `f^{s+1}` is the
/// part `k = -1`.
#[derive(Clone, PartialEq, Debug)]
pub struct SymbolicPower {
    base: MultiPoly,
    parts: BTreeMap<i64, MultiPoly>,
}

impl SymbolicPower {
    /// `f^{s+shift}`.
    pub fn power(base: &MultiPoly, shift: i64) -> Self {
        let n = base.nvars();
        let mut parts = BTreeMap::new();
        parts.insert(-shift, MultiPoly::one(n + 1));
        SymbolicPower { base: base.clone(), parts }
    }

    pub fn zero(base: &MultiPoly) -> Self {
        SymbolicPower { base: base.clone(), parts: BTreeMap::new() }
    }

    pub fn base(&self) -> &MultiPoly {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.base.nvars()
    }

    pub fn parts(&self) -> impl Iterator<Item = (i64, &MultiPoly)> {
        self.parts.iter().map(|(k, p)| (*k, p))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    fn s_var(&self) -> MultiPoly {
        MultiPoly::var(self.dim() + 1, self.dim())
    }

    fn add_part(&mut self, k: i64, p: MultiPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.parts.entry(k).or_insert_with(|| MultiPoly::zero(p.nvars()));
        *slot = &*slot + &p;
        if slot.is_zero() {
            self.parts.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.base, other.base, "symbolic powers over different bases");
        let mut out = self.clone();
        for (k, p) in &other.parts {
            out.add_part(*k, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(&self.base);
        for (k, p) in &self.parts {
            out.add_part(*k, p.scale(c));
        }
        out
    }

    /// Multiplies by `c(s)`.
    pub fn mul_univar(&self, c: &UnivarPoly) -> Self {
        let lifted = univar_in(self.dim(), c);
        let mut out = Self::zero(&self.base);
        for (k, p) in &self.parts {
            out.add_part(*k, p * &lifted);
        }
        out
    }

    /// Multiplies by an ordinary polynomial `g(x)`.
    pub fn mul_poly(&self, g: &MultiPoly) -> Self {
        let g = g.lift(1);
        let mut out = Self::zero(&self.base);
        for (k, p) in &self.parts {
            out.add_part(*k, p * &g);
        }
        out
    }

    /// Multiplies by `f^m` (any integer `m`).
    pub fn mul_base_power(&self, m: i64) -> Self {
        SymbolicPower { base: self.base.clone(), parts: self.parts.iter().map(|(k, p)| (k - m, p.clone())).collect() }
    }

    /// Substitutes `s ↦ s + c` in every coefficient (not in the exponents).
    pub fn shift_s(&self, c: &Rational) -> Self {
        let n = self.dim();
        let s_plus_c = &self.s_var() + &MultiPoly::constant(n + 1, c.clone());
        let mut out = Self::zero(&self.base);
        for (k, p) in &self.parts {
            let mut q = MultiPoly::zero(n + 1);
            for (e, a) in p.terms() {
                let mut mono = e.clone();
                let ks = mono[n];
                mono[n] = 0;
                q = &q + &(&MultiPoly::monomial(mono, a.clone()) * &s_plus_c.pow(ks));
            }
            out.add_part(*k, q);
        }
        out
    }

    /// `∂/∂x_j` by the Leibniz rule with `∂_j f^{s-k} = (s-k)(∂_j f) f^{s-k-1}`.
    pub fn partial(&self, j: usize) -> Self {
        let n = self.dim();
        let df = self.base.derivative(j).lift(1);
        let mut out = Self::zero(&self.base);
        for (k, p) in &self.parts {
            out.add_part(*k, p.derivative(j));
            if !df.is_zero() {
                let s_minus_k = &self.s_var() - &MultiPoly::constant(n + 1, rat_int(*k));
                out.add_part(k + 1, &(p * &s_minus_k) * &df);
            }
        }
        out
    }

    /// Applies the constant-coefficient operator `q(∂)`.
    pub fn apply_operator(&self, q: &MultiPoly) -> Self {
        assert_eq!(q.nvars(), self.dim(), "operator dimension mismatch");
        let mut out = Self::zero(&self.base);
        // memoize ∂^β along the lexicographic walk of the operator's monomials
        let mut cache: BTreeMap<Vec<u32>, SymbolicPower> = BTreeMap::new();
        for (beta, c) in q.terms() {
            let d = derive_multi(self, beta, &mut cache);
            out = out.add(&d.scale(c));
        }
        out.collapse()
    }

    /// Rewrites as a single part `P · f^{s-k}` with `f ∤ P` where possible.
    pub fn collapse(&self) -> Self {
        let Some(&kmax) = self.parts.keys().next_back() else {
            return self.clone();
        };
        let f = self.base.lift(1);
        let mut total = MultiPoly::zero(self.dim() + 1);
        for (k, p) in &self.parts {
            total = &total + &(p * &f.pow((kmax - k) as u32));
        }
        if total.is_zero() {
            return Self::zero(&self.base);
        }
        let mut k = kmax;
        if f.total_degree().unwrap_or(0) > 0 {
            while let Some(q) = total.div_exact(&f) {
                total = q;
                k -= 1;
            }
        }
        let mut parts = BTreeMap::new();
        parts.insert(k, total);
        SymbolicPower { base: self.base.clone(), parts }
    }

    /// If the expression equals `c(s) · f^{s}`, returns `c`.
    pub fn as_eigen(&self) -> Option<UnivarPoly> {
        let c = self.collapse();
        if c.is_zero() {
            return Some(UnivarPoly::zero());
        }
        let (&k, p) = c.parts.iter().next()?;
        if k != 0 {
            return None;
        }
        let n = self.dim();
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, a) in p.terms() {
            if e[..n].iter().any(|&x| x != 0) {
                return None;
            }
            let d = e[n] as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, Rational::zero());
            }
            coeffs[d] = a.clone();
        }
        Some(UnivarPoly::new(coeffs))
    }

    /// Specializes `s` to a non-negative integer and expands to an ordinary
    /// polynomial. `None` if some surviving part needs a negative power of `f`.
    pub fn specialize(&self, s: u32) -> Option<MultiPoly> {
        let n = self.dim();
        let mut out = MultiPoly::zero(n);
        for (k, p) in &self.parts {
            let exp = s as i64 - k;
            if exp < 0 {
                return None;
            }
            let px = p.substitute(n, &rat_int(s as i64));
            out = &out + &(&px * &self.base.pow(exp as u32));
        }
        Some(out)
    }
}

fn derive_multi(
    expr: &SymbolicPower,
    beta: &[u32],
    cache: &mut BTreeMap<Vec<u32>, SymbolicPower>,
) -> SymbolicPower {
    if beta.iter().all(|&b| b == 0) {
        return expr.clone();
    }
    if let Some(hit) = cache.get(beta) {
        return hit.clone();
    }
    let j = beta.iter().rposition(|&b| b > 0).unwrap();
    let mut prev = beta.to_vec();
    prev[j] -= 1;
    let lower = derive_multi(expr, &prev, cache);
    let out = lower.partial(j).collapse();
    cache.insert(beta.to_vec(), out.clone());
    out
}

/// Embeds `c(s)` into `ℚ[x_1..x_n, s]`.
pub(crate) fn univar_in(n: usize, c: &UnivarPoly) -> MultiPoly {
    MultiPoly::from_terms(
        n + 1,
        c.coeffs().iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(k, a)| {
            let mut e = vec![0; n + 1];
            e[n] = k as u32;
            (e, a.clone())
        }),
    )
}
