//! Polynomials in the single exponent variable `s`.

use crate::poly::{fmt_rat, rat_int, rat_to_f64, Rational};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// `Σ c_k s^k`, coefficients ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UnivarPoly {
    coeffs: Vec<Rational>,
}

/// `constant · Π (s - root) · rest`.
#[derive(Clone, PartialEq, Debug)]
pub struct Factorization {
    pub constant: Rational,
    /// Rational roots with multiplicity, ascending.
    pub roots: Vec<Rational>,
    /// Monic cofactor without rational roots (`1` when fully split).
    pub rest: UnivarPoly,
}

impl UnivarPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UnivarPoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivarPoly { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `s + c`.
    pub fn linear(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    /// `c · Π (s + r)` over the listed `r`.
    pub fn from_shifts(c: Rational, shifts: &[Rational]) -> Self {
        shifts.iter().fold(Self::constant(c), |acc, r| acc.mul(&Self::linear(r.clone())))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
                        + o.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `p(s + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let lin = Self::linear(c.clone());
        let mut acc = Self::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(a.clone()));
        }
        acc
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, a| acc * s + a)
    }

    pub fn eval_complex(&self, s: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * s + rat_to_f64(a))
    }

    /// Leading monomial `c·s^d` only (the top homogeneous part).
    pub fn top_part(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => {
                let mut cs = vec![Rational::zero(); d + 1];
                cs[d] = self.leading();
                Self::new(cs)
            }
        }
    }

    /// Divides by `(s - r)`; `None` if `r` is not a root.
    fn deflate(&self, r: &Rational) -> Option<Self> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        let mut q = vec![Rational::zero(); d];
        let mut carry = Rational::zero();
        for i in (0..=d).rev() {
            let c = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return c.is_zero().then(|| Self::new(q));
            }
            q[i - 1] = c.clone();
            carry = c;
        }
        unreachable!()
    }

    /// Splits off every rational root by the rational-root test.
    pub fn factor(&self) -> Factorization {
        let mut rest = self.clone();
        let mut roots = Vec::new();
        if rest.is_zero() {
            return Factorization { constant: Rational::zero(), roots, rest };
        }
        let constant = rest.leading();
        rest = rest.scale(&constant.recip());
        'outer: loop {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            if rest.coeffs[0].is_zero() {
                roots.push(Rational::zero());
                rest = rest.deflate(&Rational::zero()).expect("zero root");
                continue;
            }
            let l = rest.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> = rest.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            for p in divisors(&a0) {
                for q in divisors(&an) {
                    for sign in [1, -1] {
                        let r = Rational::new(p.clone() * sign, q.clone());
                        if let Some(d) = rest.deflate(&r) {
                            roots.push(r);
                            rest = d;
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        roots.sort();
        Factorization { constant, roots, rest }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

impl Factorization {
    pub fn is_split(&self) -> bool {
        self.rest.degree().unwrap_or(0) == 0
    }

    /// One factor per line: the constant, then `s + r` for each root `-r`.
    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![fmt_rat(&self.constant)];
        for r in &self.roots {
            let shift = -r.clone();
            out.push(if shift.is_zero() {
                "s".to_string()
            } else if shift.is_negative() {
                format!("s - {}", fmt_rat(&-shift))
            } else {
                format!("s + {}", fmt_rat(&shift))
            });
        }
        if !self.is_split() {
            out.push(format!("({})", self.rest));
        }
        out
    }
}

impl fmt::Display for Factorization {
    /// `c (s + r1)^k …`, with the constant dropped when it is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines = self.lines();
        let mut parts: Vec<String> = Vec::new();
        if lines[0] != "1" || lines.len() == 1 {
            parts.push(lines[0].clone());
        }
        let mut i = 1;
        while i < lines.len() {
            let mut k = 1;
            while i + k < lines.len() && lines[i + k] == lines[i] {
                k += 1;
            }
            let l = &lines[i];
            let base = if l == "s" || l.starts_with('(') { l.clone() } else { format!("({l})") };
            parts.push(if k > 1 { format!("{base}^{k}") } else { base });
            i += k;
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Display for UnivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{k}"),
            };
            let body = match (mono.is_empty(), a.is_one()) {
                (true, _) => fmt_rat(&a),
                (false, true) => mono,
                (false, false) => format!("{}*{}", fmt_rat(&a), mono),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                write!(f, "{}{}", if c.is_negative() { "-" } else { "" }, body)?;
            } else {
                write!(f, " {sign} {body}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn factor_double_root() {
        // 4(s+1)^2
        let p = UnivarPoly::from_i64(&[4, 8, 4]);
        let f = p.factor();
        assert_eq!(f.constant, rat_int(4));
        assert_eq!(f.roots, vec![rat_int(-1), rat_int(-1)]);
        assert!(f.is_split());
        assert_eq!(f.lines(), vec!["4", "s + 1", "s + 1"]);
    }

    #[test]
    fn factor_half_root() {
        let p = UnivarPoly::from_shifts(rat_int(4), &[rat_int(1), rat(3, 2)]);
        let f = p.factor();
        assert_eq!(f.roots, vec![rat(-3, 2), rat_int(-1)]);
        assert_eq!(f.lines()[1], "s + 3/2");
    }

    #[test]
    fn irreducible_rest() {
        let p = UnivarPoly::from_i64(&[2, 0, 1]).mul(&UnivarPoly::from_i64(&[-1, 1]));
        let f = p.factor();
        assert_eq!(f.roots, vec![rat_int(1)]);
        assert!(!f.is_split());
        assert_eq!(f.rest, UnivarPoly::from_i64(&[2, 0, 1]));
    }

    #[test]
    fn shift_and_eval() {
        let p = UnivarPoly::from_i64(&[0, -1, 1]); // s(s-1)
        let q = p.shift(&rat_int(2)); // (s+2)(s+1)
        assert_eq!(q, UnivarPoly::from_i64(&[2, 3, 1]));
        assert_eq!(p.eval(&rat_int(-2)), rat_int(6));
        assert_eq!(p.top_part(), UnivarPoly::from_i64(&[0, 0, 1]));
        assert_eq!(p.to_string(), "s^2 - s");
    }
}
