//! Exact polynomial primitives: homogeneous binary and ternary forms over
//! the rationals, plus small projective-geometry helpers (lines and points
//! of the projective plane).
//!
//! Binary forms carry a *formal* degree so that resultants are the honest
//! projective resultants: `resultant` vanishes exactly when the two forms
//! share a root in the projective line, including at infinity. Square roots
//! and gcds are computed exactly and verified before being returned.

use std::collections::BTreeMap;

use num_integer::Roots;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::Rat;

/// Errors produced by polynomial and projective-geometry operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("a form needs at least one coefficient")]
    EmptyCoefficients,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("operation is undefined for the zero form ({0})")]
    ZeroPolynomial(String),
    #[error("form is not a perfect square")]
    NotASquare,
    #[error("form is not divisible by the given linear factor")]
    NotDivisible,
    #[error("monomial exponents do not sum to the stated degree")]
    BadExponents,
    #[error("coefficient vector does not define a projective object (all zero)")]
    ZeroVector,
    #[error("the two lines coincide")]
    CoincidentLines,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Homogeneous binary form of a fixed formal degree.
///
/// `coeffs[i]` is the coefficient of `s^(d-i) t^i`, where `d` is the formal
/// degree. Leading or trailing zeros are kept: they encode roots at `(1:0)`
/// and `(0:1)` and make resultants projectively correct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryPoly {
    coeffs: Vec<Rat>,
}

impl BinaryPoly {
    /// Builds a form of formal degree `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rat>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::EmptyCoefficients);
        }
        Ok(BinaryPoly { coeffs })
    }

    /// The zero form of formal degree `degree`.
    pub fn zero(degree: usize) -> Self {
        BinaryPoly {
            coeffs: vec![Rat::zero(); degree + 1],
        }
    }

    /// The constant form `c` (degree 0).
    pub fn constant(c: Rat) -> Self {
        BinaryPoly { coeffs: vec![c] }
    }

    /// Formal degree.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `s^(d-i) t^i`.
    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Evaluation at `(s, t)`.
    pub fn eval(&self, s: &Rat, t: &Rat) -> Rat {
        let d = self.degree();
        let mut powers_s = Vec::with_capacity(d + 1);
        let mut s_pow = Rat::one();
        for _ in 0..=d {
            powers_s.push(s_pow.clone());
            s_pow *= s.clone();
        }
        let mut total = Rat::zero();
        let mut t_pow = Rat::one();
        for i in 0..=d {
            total += self.coeffs[i].clone() * powers_s[d - i].clone() * t_pow.clone();
            t_pow *= t.clone();
        }
        total
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.degree() != other.degree() {
            return Err(PolyError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(BinaryPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        if self.degree() != other.degree() {
            return Err(PolyError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(BinaryPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        BinaryPoly {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BinaryPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.degree() + other.degree();
        let mut coeffs = vec![Rat::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        BinaryPoly { coeffs }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = BinaryPoly::constant(Rat::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Resultant with respect to the formal degrees (Sylvester determinant).
    ///
    /// Zero exactly when the forms share a projective root over the complex
    /// numbers, including at `(1:0)` or `(0:1)`.
    pub fn resultant(&self, other: &Self) -> Result<Rat, PolyError> {
        let m = self.degree();
        let n = other.degree();
        if m == 0 || n == 0 {
            // Res(f, c) = c^deg(f) for a constant c.
            let (cst, f, d) = if m == 0 {
                (&self.coeffs[0], other, n)
            } else {
                (&other.coeffs[0], self, m)
            };
            let _ = f;
            let mut r = Rat::one();
            for _ in 0..d {
                r *= cst.clone();
            }
            return Ok(r);
        }
        let size = m + n;
        let mut syl = Matrix::zero(size, size);
        for row in 0..n {
            for (i, a) in self.coeffs.iter().enumerate() {
                *syl.at_mut(row, row + i) = a.clone();
            }
        }
        for row in 0..m {
            for (j, b) in other.coeffs.iter().enumerate() {
                *syl.at_mut(n + row, row + j) = b.clone();
            }
        }
        syl.det().map_err(|e| PolyError::Dimension(e.to_string()))
    }

    /// Multiplication by `s^k` (raises the formal degree, keeps coefficients).
    pub fn mul_s_power(&self, k: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat(Rat::zero()).take(k));
        BinaryPoly { coeffs }
    }

    /// Index of the lowest nonzero coefficient (multiplicity of `t`).
    fn t_multiplicity(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Index of the highest nonzero coefficient.
    fn top_index(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Greatest common divisor, normalized so its highest nonzero
    /// coefficient is 1. The gcd of two zero forms is an error.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(PolyError::ZeroPolynomial("gcd".into())),
            (true, false) => return Ok(other.normalized()),
            (false, true) => return Ok(self.normalized()),
            (false, false) => {}
        }
        // Factor out powers of s (degree drop) and run the Euclidean
        // algorithm on the dehomogenizations u = t/s, which keeps track of
        // powers of t automatically.
        let top_a = self.top_index().unwrap();
        let top_b = other.top_index().unwrap();
        let s_pow = (self.degree() - top_a).min(other.degree() - top_b);
        let mut a = self.coeffs[..=top_a].to_vec();
        let mut b = other.coeffs[..=top_b].to_vec();
        while !b.iter().all(Rat::is_zero) {
            let r = univariate_rem(&a, &b);
            a = b;
            b = r;
        }
        let g = BinaryPoly { coeffs: a }.normalized();
        Ok(g.mul_s_power(s_pow))
    }

    /// Scales so the highest nonzero coefficient is 1 (zero stays zero).
    pub fn normalized(&self) -> Self {
        match self.top_index() {
            None => self.clone(),
            Some(top) => {
                let lead = self.coeffs[top].clone();
                self.scale(&(Rat::one() / lead))
            }
        }
    }

    /// Exact square root: returns `h` with `h · h == self` when one exists.
    pub fn sqrt(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            if self.degree() % 2 != 0 {
                return Err(PolyError::NotASquare);
            }
            return Ok(BinaryPoly::zero(self.degree() / 2));
        }
        let d = self.degree();
        if d % 2 != 0 {
            return Err(PolyError::NotASquare);
        }
        let low = self.t_multiplicity().unwrap();
        let top = self.top_index().unwrap();
        let s_mult = d - top;
        if low % 2 != 0 || s_mult % 2 != 0 {
            return Err(PolyError::NotASquare);
        }
        // Interior coefficients c_low .. c_top form a univariate polynomial
        // with nonzero constant term; recover its square root by coefficient
        // recursion and verify.
        let interior: Vec<Rat> = self.coeffs[low..=top].to_vec();
        let m = top - low;
        let h0 = rational_sqrt(&interior[0]).ok_or(PolyError::NotASquare)?;
        let half = m / 2;
        let mut h = vec![Rat::zero(); half + 1];
        h[0] = h0;
        let two_h0 = h[0].clone() + h[0].clone();
        for k in 1..=half {
            let mut acc = interior[k].clone();
            for i in 1..k {
                acc -= &h[i] * &h[k - i];
            }
            h[k] = acc / two_h0.clone();
        }
        let cand = BinaryPoly { coeffs: h };
        let sq = cand.mul(&cand);
        if sq.coeffs != interior {
            return Err(PolyError::NotASquare);
        }
        Ok(cand
            .mul(&BinaryPoly {
                // t^(low/2), formal degree low/2.
                coeffs: {
                    let mut c = vec![Rat::zero(); low / 2 + 1];
                    c[low / 2] = Rat::one();
                    c
                },
            })
            .mul_s_power(s_mult / 2))
    }

    /// Multiplicity of the projective root `(p : q)`.
    pub fn root_multiplicity(&self, p: &Rat, q: &Rat) -> Result<usize, PolyError> {
        if p.is_zero() && q.is_zero() {
            return Err(PolyError::ZeroVector);
        }
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial("root multiplicity".into()));
        }
        let mut mult = 0;
        let mut f = self.clone();
        while f.eval(p, q).is_zero() && f.degree() > 0 {
            f = f.divide_linear(p, q)?;
            mult += 1;
        }
        Ok(mult)
    }

    /// Exact division by the linear form vanishing at `(p : q)`.
    pub fn divide_linear(&self, p: &Rat, q: &Rat) -> Result<Self, PolyError> {
        if p.is_zero() && q.is_zero() {
            return Err(PolyError::ZeroVector);
        }
        let d = self.degree();
        if d == 0 {
            return Err(PolyError::NotDivisible);
        }
        // The linear form q·s − p·t vanishes at (p : q). Solve
        // f = (q·s − p·t) · h coefficient by coefficient.
        let (alpha, beta) = (q.clone(), -p.clone());
        let mut h = vec![Rat::zero(); d];
        if !alpha.is_zero() {
            for k in 0..d {
                let prev = if k == 0 {
                    Rat::zero()
                } else {
                    h[k - 1].clone()
                };
                h[k] = (self.coeffs[k].clone() - beta.clone() * prev) / alpha.clone();
            }
            if self.coeffs[d] != beta * h[d - 1].clone() {
                return Err(PolyError::NotDivisible);
            }
        } else {
            if !self.coeffs[0].is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for k in 0..d {
                h[k] = self.coeffs[k + 1].clone() / beta.clone();
            }
        }
        Ok(BinaryPoly { coeffs: h })
    }
}

/// Remainder of univariate division, coefficient vectors low-to-high.
fn univariate_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let deg = |v: &[Rat]| v.iter().rposition(|c| !c.is_zero());
    let Some(db) = deg(b) else {
        return a.to_vec();
    };
    let mut r = a.to_vec();
    loop {
        let Some(dr) = deg(&r) else {
            return vec![Rat::zero()];
        };
        if dr < db {
            r.truncate(dr + 1);
            return r;
        }
        let factor = r[dr].clone() / b[db].clone();
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            let t = bc * &factor;
            r[i + shift] -= t;
        }
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let ns = Roots::sqrt(r.numer());
    let ds = Roots::sqrt(r.denom());
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Homogeneous ternary form of a fixed degree, stored sparsely.
///
/// Keys are exponent triples `(i, j, k)` with `i + j + k = degree`; only
/// nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryPoly {
    degree: usize,
    terms: BTreeMap<(u32, u32, u32), Rat>,
}

impl TernaryPoly {
    /// The zero form of the given degree.
    pub fn zero(degree: usize) -> Self {
        TernaryPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A single monomial `c · x1^i x2^j x3^k`.
    pub fn monomial(exps: (u32, u32, u32), c: Rat) -> Result<Self, PolyError> {
        let degree = (exps.0 + exps.1 + exps.2) as usize;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Ok(TernaryPoly { degree, terms })
    }

    /// Builds a form from monomials, all of the stated degree.
    pub fn from_terms(
        degree: usize,
        entries: Vec<((u32, u32, u32), Rat)>,
    ) -> Result<Self, PolyError> {
        let mut terms = BTreeMap::new();
        for (exps, c) in entries {
            if (exps.0 + exps.1 + exps.2) as usize != degree {
                return Err(PolyError::BadExponents);
            }
            if c.is_zero() {
                continue;
            }
            let slot = terms.entry(exps).or_insert_with(Rat::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(&exps);
            }
        }
        Ok(TernaryPoly { degree, terms })
    }

    /// The degree-1 form with the given line's coefficients.
    pub fn linear(line: &LinForm) -> Self {
        let c = line.coeffs();
        TernaryPoly::from_terms(
            1,
            vec![
                ((1, 0, 0), c[0].clone()),
                ((0, 1, 0), c[1].clone()),
                ((0, 0, 1), c[2].clone()),
            ],
        )
        .expect("linear exponents are consistent")
    }

    /// Product of linear forms (e.g. the right-hand side of a double cover).
    pub fn product_of_lines(lines: &[LinForm]) -> Self {
        let mut acc =
            TernaryPoly::from_terms(0, vec![((0, 0, 0), Rat::one())]).expect("constant form");
        for l in lines {
            acc = acc.mul(&TernaryPoly::linear(l));
        }
        acc
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x1^i x2^j x3^k` (zero when absent).
    pub fn coeff(&self, exps: (u32, u32, u32)) -> Rat {
        self.terms.get(&exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterator over nonzero terms in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.degree != other.degree {
            return Err(PolyError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut terms = self.terms.clone();
        for (exps, c) in &other.terms {
            let slot = terms.entry(*exps).or_insert_with(Rat::zero);
            *slot += c.clone();
            if slot.is_zero() {
                terms.remove(exps);
            }
        }
        Ok(TernaryPoly {
            degree: self.degree,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return TernaryPoly::zero(self.degree);
        }
        TernaryPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<(u32, u32, u32), Rat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = (ea.0 + eb.0, ea.1 + eb.1, ea.2 + eb.2);
                let slot = terms.entry(e).or_insert_with(Rat::zero);
                *slot += ca * cb;
                if slot.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        TernaryPoly {
            degree: self.degree + other.degree,
            terms,
        }
    }

    /// Evaluation at affine representatives `(x1, x2, x3)`.
    pub fn eval(&self, p: &[Rat; 3]) -> Rat {
        let mut total = Rat::zero();
        for (&(i, j, k), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..i {
                term *= p[0].clone();
            }
            for _ in 0..j {
                term *= p[1].clone();
            }
            for _ in 0..k {
                term *= p[2].clone();
            }
            total += term;
        }
        total
    }

    /// Substitutes a binary parametrization `x_i = param[i](s, t)`.
    ///
    /// All three components must share one formal degree; the result has
    /// formal degree `self.degree() * param_degree`.
    pub fn compose_binary(&self, param: &[BinaryPoly; 3]) -> Result<BinaryPoly, PolyError> {
        let dp = param[0].degree();
        if param[1].degree() != dp || param[2].degree() != dp {
            return Err(PolyError::DegreeMismatch {
                left: dp,
                right: param[1].degree().max(param[2].degree()),
            });
        }
        let out_deg = self.degree * dp;
        let mut acc = BinaryPoly::zero(out_deg);
        for (&(i, j, k), c) in &self.terms {
            let term = param[0]
                .pow(i as usize)
                .mul(&param[1].pow(j as usize))
                .mul(&param[2].pow(k as usize))
                .scale(c);
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Substitutes the linear change of coordinates `x = M · y`.
    ///
    /// Returns the form `G(y) = F(M y)`, with `M` a 3×3 rational matrix.
    pub fn substitute_linear(&self, m: &Matrix<Rat>) -> Result<Self, PolyError> {
        if m.rows() != 3 || m.cols() != 3 {
            return Err(PolyError::Dimension(format!(
                "expected a 3x3 matrix, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        // Row r of M is the linear form replacing x_{r+1}.
        let rows: Vec<TernaryPoly> = (0..3)
            .map(|r| {
                TernaryPoly::from_terms(
                    1,
                    vec![
                        ((1, 0, 0), m.at(r, 0).clone()),
                        ((0, 1, 0), m.at(r, 1).clone()),
                        ((0, 0, 1), m.at(r, 2).clone()),
                    ],
                )
                .expect("linear exponents are consistent")
            })
            .collect();
        // Memoize powers of each substituted row up to the needed exponent.
        let mut max_exp = [0u32; 3];
        for &(i, j, k) in self.terms.keys() {
            max_exp[0] = max_exp[0].max(i);
            max_exp[1] = max_exp[1].max(j);
            max_exp[2] = max_exp[2].max(k);
        }
        let powers: Vec<Vec<TernaryPoly>> = (0..3)
            .map(|r| {
                let mut ps = Vec::with_capacity(max_exp[r] as usize + 1);
                ps.push(
                    TernaryPoly::from_terms(0, vec![((0, 0, 0), Rat::one())])
                        .expect("constant form"),
                );
                for e in 1..=max_exp[r] as usize {
                    let next = ps[e - 1].mul(&rows[r]);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut acc = TernaryPoly::zero(self.degree);
        for (&(i, j, k), c) in &self.terms {
            let term = powers[0][i as usize]
                .mul(&powers[1][j as usize])
                .mul(&powers[2][k as usize])
                .scale(c);
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}

/// Line in the projective plane, stored as coefficients `(a, b, c)` of
/// `a·x1 + b·x2 + c·x3`, scaled so the first nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinForm {
    coeffs: [Rat; 3],
}

impl LinForm {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self, PolyError> {
        let mut coeffs = [a, b, c];
        let Some(first) = coeffs.iter().position(|v| !v.is_zero()) else {
            return Err(PolyError::ZeroVector);
        };
        let lead = coeffs[first].clone();
        for v in &mut coeffs {
            *v = v.clone() / lead.clone();
        }
        Ok(LinForm { coeffs })
    }

    pub fn coeffs(&self) -> &[Rat; 3] {
        &self.coeffs
    }

    /// Evaluation at affine representatives.
    pub fn eval(&self, p: &[Rat; 3]) -> Rat {
        self.coeffs
            .iter()
            .zip(p)
            .fold(Rat::zero(), |acc, (c, x)| acc + c * x)
    }

    /// Whether the projective point lies on the line.
    pub fn contains(&self, p: &ProjPoint3) -> bool {
        self.eval(p.coords()).is_zero()
    }

    pub fn to_poly(&self) -> TernaryPoly {
        TernaryPoly::linear(self)
    }
}

/// Point of the projective plane, scaled so the first nonzero coordinate
/// is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint3 {
    coords: [Rat; 3],
}

impl ProjPoint3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Result<Self, PolyError> {
        let mut coords = [x, y, z];
        let Some(first) = coords.iter().position(|v| !v.is_zero()) else {
            return Err(PolyError::ZeroVector);
        };
        let lead = coords[first].clone();
        for v in &mut coords {
            *v = v.clone() / lead.clone();
        }
        Ok(ProjPoint3 { coords })
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.coords
    }
}

/// Intersection point of two distinct lines (cross product of coefficient
/// vectors).
pub fn line_intersection(l1: &LinForm, l2: &LinForm) -> Result<ProjPoint3, PolyError> {
    let a = l1.coeffs();
    let b = l2.coeffs();
    let x = &a[1] * &b[2] - &a[2] * &b[1];
    let y = &a[2] * &b[0] - &a[0] * &b[2];
    let z = &a[0] * &b[1] - &a[1] * &b[0];
    ProjPoint3::new(x, y, z).map_err(|_| PolyError::CoincidentLines)
}
