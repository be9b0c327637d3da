//! Plane-model interpolation oracle: linear systems of plane curves with
//! assigned base points of given multiplicities (including one infinitely
//! near point), used to confirm independently that each member of the
//! negative-curve family exists and is the *unique* curve of its degree
//! through its fat-point data.
//!
//! The configuration lives in P²: four points on the conic `x₃² = 4x₁x₂`,
//! the three diagonal points cut out by the pairs of lines through them, a
//! fifth conic point `q`, and the tangent direction of the conic at `q`.
//! A multiplicity-`m` condition at a point contributes the vanishing of
//! all coefficients of local degree `< m`; an infinitely near point of
//! multiplicity `k` in a tangent direction adds the coefficients with
//! `i + 2j < m + k` (local coordinates adapted so the direction is the
//! first axis). Every condition row is filled from a closed-form shifted
//! multinomial expansion — no polynomial arithmetic — and ranks are exact:
//! a modular elimination certifies full rank when it reaches the row/column
//! bound, with exact fraction-free elimination as the fallback.

use num_integer::{binomial, Integer};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::matrix::{LinalgError, Matrix};
use crate::poly::{line_intersection, LinForm, PolyError, ProjPoint3, TernaryPoly};
use crate::{rat_string, Int, Rat, RatMatrix};

/// Errors from plane-model construction and the interpolation oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("configuration parameters must be pairwise distinct, {0} repeats")]
    ParamsNotDistinct(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfig(String),
    #[error("curve family index must be at least 1, got {0}")]
    IndexOutOfRange(u64),
    #[error("the linear system has no unique curve ({0})")]
    NoUniqueCurve(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The base-point configuration in P².
#[derive(Debug, Clone)]
pub struct PlaneConfig {
    params: [Rat; 5],
    conic: TernaryPoly,
    points: [ProjPoint3; 4],
    diagonals: [ProjPoint3; 3],
    q: ProjPoint3,
    tangent: LinForm,
}

/// The conic point of parameter `t`: `(1 : t² : 2t)` on `x₃² = 4x₁x₂`.
fn conic_point(t: &Rat) -> ProjPoint3 {
    ProjPoint3::new(Rat::one(), t * t, t + t).expect("nonzero coordinates")
}

/// The tangent line of the conic at the parameter-`t` point:
/// `t²x₁ + x₂ − tx₃` (gradient of the conic at the point).
fn conic_tangent(t: &Rat) -> LinForm {
    LinForm::new(t * t, Rat::one(), -t).expect("nonzero line")
}

/// Builds a configuration from five pairwise distinct conic parameters:
/// the first four give the points `q₁..q₄`, the fifth gives `q` and the
/// tangent direction there. The three diagonal points are the pairwise
/// intersections `line(qᵢ,qⱼ) ∩ line(q_k,q_l)`, ordered
/// `(12)(34), (13)(24), (23)(14)`.
pub fn build_config(params: [Rat; 5]) -> Result<PlaneConfig, PlaneError> {
    for i in 0..5 {
        for j in 0..i {
            if params[i] == params[j] {
                return Err(PlaneError::ParamsNotDistinct(rat_string(&params[i])));
            }
        }
    }
    let conic = TernaryPoly::from_terms(
        2,
        vec![
            ((0, 0, 2), Rat::one()),
            ((1, 1, 0), -Rat::from(Int::from(4))),
        ],
    )?;
    let points: [ProjPoint3; 4] = [
        conic_point(&params[0]),
        conic_point(&params[1]),
        conic_point(&params[2]),
        conic_point(&params[3]),
    ];
    let join = |a: &ProjPoint3, b: &ProjPoint3| -> Result<LinForm, PlaneError> {
        let (p, q) = (a.coords(), b.coords());
        Ok(LinForm::new(
            &p[1] * &q[2] - &p[2] * &q[1],
            &p[2] * &q[0] - &p[0] * &q[2],
            &p[0] * &q[1] - &p[1] * &q[0],
        )?)
    };
    let mut diagonals = Vec::with_capacity(3);
    for (pair_a, pair_b) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((1, 2), (0, 3))] {
        let l1 = join(&points[pair_a.0], &points[pair_a.1])?;
        let l2 = join(&points[pair_b.0], &points[pair_b.1])?;
        diagonals.push(line_intersection(&l1, &l2)?);
    }
    let q = conic_point(&params[4]);
    let tangent = conic_tangent(&params[4]);
    let diagonals: [ProjPoint3; 3] = [
        diagonals[0].clone(),
        diagonals[1].clone(),
        diagonals[2].clone(),
    ];
    // Genericity: diagonal points stay off the conic, and all eight
    // assigned points are pairwise distinct.
    for d in &diagonals {
        if conic.eval(d.coords()).is_zero() {
            return Err(PlaneError::DegenerateConfig(
                "a diagonal point lies on the conic".to_string(),
            ));
        }
    }
    let mut all: Vec<&ProjPoint3> = points.iter().collect();
    all.extend(diagonals.iter());
    all.push(&q);
    for i in 0..all.len() {
        for j in 0..i {
            if all[i] == all[j] {
                return Err(PlaneError::DegenerateConfig(
                    "two assigned base points coincide".to_string(),
                ));
            }
        }
    }
    Ok(PlaneConfig {
        params,
        conic,
        points,
        diagonals,
        q,
        tangent,
    })
}

/// The standard configuration: conic parameters `(0, 1, −1, 2)` and `q`
/// at parameter `3`.
pub fn default_config() -> PlaneConfig {
    let r = |p: i64| Rat::from(Int::from(p));
    build_config([r(0), r(1), r(-1), r(2), r(3)]).expect("standard parameters are generic")
}

impl PlaneConfig {
    pub fn params(&self) -> &[Rat; 5] {
        &self.params
    }

    pub fn conic(&self) -> &TernaryPoly {
        &self.conic
    }

    /// The four conic points `q₁..q₄`.
    pub fn points(&self) -> &[ProjPoint3; 4] {
        &self.points
    }

    /// The three diagonal points, ordered `(12)(34), (13)(24), (23)(14)`.
    pub fn diagonals(&self) -> &[ProjPoint3; 3] {
        &self.diagonals
    }

    pub fn q(&self) -> &ProjPoint3 {
        &self.q
    }

    /// The tangent line of the conic at `q`.
    pub fn tangent(&self) -> &LinForm {
        &self.tangent
    }

    pub fn to_json(&self) -> Value {
        let point_json = |p: &ProjPoint3| {
            Value::Array(
                p.coords()
                    .iter()
                    .map(|c| Value::String(rat_string(c)))
                    .collect(),
            )
        };
        json!({
            "params": self.params.iter().map(rat_string).collect::<Vec<_>>(),
            "points": self.points.iter().map(point_json).collect::<Vec<_>>(),
            "diagonals": self.diagonals.iter().map(point_json).collect::<Vec<_>>(),
            "q": point_json(&self.q),
            "tangent": self.tangent.coeffs().iter().map(rat_string).collect::<Vec<_>>(),
        })
    }
}

/// One assigned base point: an ordinary multiplicity, plus optionally an
/// infinitely near point of multiplicity `near_multiplicity` in the
/// direction of `direction` (a line through the point).
#[derive(Debug, Clone)]
pub struct FatPoint {
    point: ProjPoint3,
    multiplicity: usize,
    direction: Option<LinForm>,
    near_multiplicity: usize,
}

impl FatPoint {
    pub fn ordinary(point: ProjPoint3, multiplicity: usize) -> Self {
        FatPoint {
            point,
            multiplicity,
            direction: None,
            near_multiplicity: 0,
        }
    }

    pub fn with_near(
        point: ProjPoint3,
        multiplicity: usize,
        direction: LinForm,
        near_multiplicity: usize,
    ) -> Self {
        FatPoint {
            point,
            multiplicity,
            direction: Some(direction),
            near_multiplicity,
        }
    }

    pub fn point(&self) -> &ProjPoint3 {
        &self.point
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn near_multiplicity(&self) -> usize {
        self.near_multiplicity
    }

    /// Local condition exponents `(i, j)`: all `i + j < m`, and for an
    /// infinitely near point additionally `i + j ≥ m` with `i + 2j < m + k`
    /// (first local axis along the assigned direction).
    fn conditions(&self) -> Vec<(usize, usize)> {
        let m = self.multiplicity;
        let k = self.near_multiplicity;
        let mut out = Vec::new();
        for total in 0..(m + k) {
            for j in 0..=total {
                let i = total - j;
                let ordinary = i + j < m;
                let near = i + j >= m && i + 2 * j < m + k;
                if ordinary || near {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// A fat-point linear system: plane curves of the given degree vanishing
/// to the assigned multiplicities.
#[derive(Debug, Clone)]
pub struct FatPointSpec {
    degree: usize,
    points: Vec<FatPoint>,
}

impl FatPointSpec {
    pub fn new(degree: usize, points: Vec<FatPoint>) -> Self {
        FatPointSpec { degree, points }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn points(&self) -> &[FatPoint] {
        &self.points
    }

    /// Appends an ordinary base point.
    pub fn push_point(&mut self, point: ProjPoint3, multiplicity: usize) {
        self.points.push(FatPoint::ordinary(point, multiplicity));
    }

    /// Total number of linear conditions: `Σ m(m+1)/2 + k(k+1)/2`.
    pub fn condition_count(&self) -> usize {
        self.points.iter().map(|p| p.conditions().len()).sum()
    }

    /// Arithmetic genus of a curve of this degree with these
    /// multiplicities: `(d−1)(d−2)/2 − Σ m(m−1)/2`.
    pub fn arithmetic_genus(&self) -> Rat {
        let d = Int::from(self.degree as u64);
        let two = Int::from(2);
        let mut g = (&d - 1) * (&d - 2);
        for p in &self.points {
            let m = Int::from(p.multiplicity as u64);
            let k = Int::from(p.near_multiplicity as u64);
            g -= (&m - 1) * &m;
            g -= (&k - 1) * &k;
        }
        Rat::new(g, two)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "points": self
                .points
                .iter()
                .map(|p| {
                    let mut v = json!({
                        "point": p.point.coords().iter().map(rat_string).collect::<Vec<_>>(),
                        "multiplicity": p.multiplicity,
                    });
                    if let Some(dir) = &p.direction {
                        v["direction"] =
                            Value::Array(dir.coeffs().iter().map(|c| Value::String(rat_string(c))).collect());
                        v["near_multiplicity"] = json!(p.near_multiplicity);
                    }
                    v
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Fat-point data of the `n`-th member of the negative-curve family in the
/// plane model: degree `3n² + n`, multiplicity `n²` at the four conic
/// points, `n² + n` at the three diagonal points, and `n²` at `q` with an
/// infinitely near point of multiplicity `n² − 1` in the conic direction.
pub fn dn_plane_data(config: &PlaneConfig, n: u64) -> Result<FatPointSpec, PlaneError> {
    if n < 1 {
        return Err(PlaneError::IndexOutOfRange(n));
    }
    let n = n as usize;
    let degree = 3 * n * n + n;
    let m = n * n;
    let mut points = Vec::with_capacity(8);
    for p in config.points.iter() {
        points.push(FatPoint::ordinary(p.clone(), m));
    }
    for p in config.diagonals.iter() {
        points.push(FatPoint::ordinary(p.clone(), m + n));
    }
    if m >= 2 {
        points.push(FatPoint::with_near(
            config.q.clone(),
            m,
            config.tangent.clone(),
            m - 1,
        ));
    } else {
        points.push(FatPoint::ordinary(config.q.clone(), m));
    }
    Ok(FatPointSpec::new(degree, points))
}

/// Monomial exponents of total degree `d` in three variables, in a fixed
/// deterministic order (first exponent descending, then second).
pub fn monomial_basis(d: usize) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::with_capacity((d + 1) * (d + 2) / 2);
    for a in (0..=d).rev() {
        for b in (0..=(d - a)).rev() {
            out.push((a as u32, b as u32, (d - a - b) as u32));
        }
    }
    out
}

/// Local frame at a base point: an affine chart where the point is finite,
/// its affine coordinates, and the two local direction columns (the first
/// aligned with the assigned tangent direction, if any).
struct PointFrame {
    /// Indices of the two affine variables (the chart variable is the one
    /// set to 1).
    vars: (usize, usize),
    p: [Rat; 2],
    z1: [Rat; 2],
    z2: [Rat; 2],
}

fn point_frame(fp: &FatPoint) -> PointFrame {
    let coords = fp.point.coords();
    let chart = (0..3)
        .find(|&k| !coords[k].is_zero())
        .expect("projective point has a nonzero coordinate");
    let others: Vec<usize> = (0..3).filter(|&k| k != chart).collect();
    let (a, b) = (others[0], others[1]);
    let p = [&coords[a] / &coords[chart], &coords[b] / &coords[chart]];
    let (z1, z2) = match &fp.direction {
        None => ([Rat::one(), Rat::zero()], [Rat::zero(), Rat::one()]),
        Some(line) => {
            // The line τ in the chart reads τ_a w₁ + τ_b w₂ + τ_chart = 0;
            // its direction is (−τ_b, τ_a), nonzero because the line passes
            // through the (finite) point.
            let t = line.coeffs();
            let delta = [-t[b].clone(), t[a].clone()];
            let complement = if !delta[0].is_zero() {
                [Rat::zero(), Rat::one()]
            } else {
                [Rat::one(), Rat::zero()]
            };
            (delta, complement)
        }
    };
    PointFrame {
        vars: (a, b),
        p,
        z1,
        z2,
    }
}

/// Powers `base^0..=base^max` as exact rationals.
fn power_table(base: &Rat, max: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(Rat::one());
    for _ in 0..max {
        out.push(out.last().unwrap() * base);
    }
    out
}

/// The interpolation matrix: one row per vanishing condition, one column
/// per degree-`d` monomial (ordered as in `monomial_basis`). Entries are
/// closed-form shifted multinomial coefficients.
pub fn interpolation_matrix(spec: &FatPointSpec) -> Result<RatMatrix, PlaneError> {
    let d = spec.degree;
    let basis = monomial_basis(d);
    let cols = basis.len();
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(spec.condition_count());
    // Multinomial helper: n! / (r! s! (n−r−s)!) as an exact rational.
    let multinomial = |n: usize, r: usize, s: usize| -> Int {
        binomial(Int::from(n as u64), Int::from(r as u64))
            * binomial(Int::from((n - r) as u64), Int::from(s as u64))
    };
    for fp in &spec.points {
        let frame = point_frame(fp);
        let (a_var, b_var) = frame.vars;
        let p1 = power_table(&frame.p[0], d);
        let p2 = power_table(&frame.p[1], d);
        let a1 = power_table(&frame.z1[0], d);
        let a2 = power_table(&frame.z1[1], d);
        let b1 = power_table(&frame.z2[0], d);
        let b2 = power_table(&frame.z2[1], d);
        for (i, j) in fp.conditions() {
            let mut row = Vec::with_capacity(cols);
            for &(e0, e1, e2) in &basis {
                let exps = [e0 as usize, e1 as usize, e2 as usize];
                let big_a = exps[a_var];
                let big_b = exps[b_var];
                // Coefficient of z₁ⁱ z₂ʲ in
                //   (p₁ + a₁z₁ + b₁z₂)^A · (p₂ + a₂z₁ + b₂z₂)^B.
                let mut entry = Rat::zero();
                for r in 0..=i.min(big_a) {
                    let ir = i - r;
                    if ir > big_b {
                        continue;
                    }
                    for s in 0..=j.min(big_a - r) {
                        let js = j - s;
                        if ir + js > big_b {
                            continue;
                        }
                        let c1 = multinomial(big_a, r, s);
                        let c2 = multinomial(big_b, ir, js);
                        let term = Rat::from(c1 * c2)
                            * &a1[r]
                            * &b1[s]
                            * &p1[big_a - r - s]
                            * &a2[ir]
                            * &b2[js]
                            * &p2[big_b - ir - js];
                        entry += term;
                    }
                }
                row.push(entry);
            }
            rows.push(row);
        }
    }
    Ok(Matrix::from_rows(rows)?)
}

/// 2⁶¹ − 1, a Mersenne prime used for the modular rank lower bound.
const RANK_PRIME: u64 = 2_305_843_009_213_693_951;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % RANK_PRIME as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        exp >>= 1;
    }
    acc
}

fn rat_mod_p(r: &Rat) -> u64 {
    let p = Int::from(RANK_PRIME);
    let num = r
        .numer()
        .mod_floor(&p)
        .to_u64()
        .expect("reduced below 2^61");
    let den = r
        .denom()
        .mod_floor(&p)
        .to_u64()
        .expect("reduced below 2^61");
    debug_assert!(den != 0, "denominator divisible by the rank prime");
    mulmod(num, powmod(den, RANK_PRIME - 2))
}

/// Row-echelon rank of the matrix reduced modulo a fixed prime. Ranks can
/// only drop under reduction, so this is a certified lower bound for the
/// exact rank.
fn rank_mod_p(m: &RatMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut data: Vec<Vec<u64>> = (0..rows)
        .map(|i| (0..cols).map(|j| rat_mod_p(m.at(i, j))).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| data[r][col] != 0) else {
            continue;
        };
        data.swap(rank, pivot);
        let inv = powmod(data[rank][col], RANK_PRIME - 2);
        for j in col..cols {
            data[rank][j] = mulmod(data[rank][j], inv);
        }
        for r in 0..rows {
            if r != rank && data[r][col] != 0 {
                let factor = data[r][col];
                for j in col..cols {
                    let sub = mulmod(factor, data[rank][j]);
                    data[r][j] = (data[r][j] + RANK_PRIME - sub) % RANK_PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank of an interpolation matrix: the modular lower bound pins the
/// rank whenever it reaches `min(rows, cols)`; otherwise falls back to
/// exact fraction-free elimination.
pub fn interpolation_rank(m: &RatMatrix) -> usize {
    let lower = rank_mod_p(m);
    if lower == m.rows().min(m.cols()) {
        return lower;
    }
    m.rank()
}

/// Outcome of the interpolation oracle for one linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub exists: bool,
    pub unique: bool,
}

impl OracleReport {
    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "exists": self.exists,
            "unique": self.unique,
        })
    }
}

/// Decides whether the linear system has a curve and whether it is unique:
/// the kernel dimension of the interpolation matrix is `cols − rank`, so
/// existence is `kernel ≥ 1` and uniqueness `kernel = 1`.
pub fn oracle_unique_curve(spec: &FatPointSpec) -> Result<OracleReport, PlaneError> {
    let m = interpolation_matrix(spec)?;
    let rank = interpolation_rank(&m);
    let kernel_dim = m.cols() - rank;
    Ok(OracleReport {
        rows: m.rows(),
        cols: m.cols(),
        rank,
        kernel_dim,
        exists: kernel_dim >= 1,
        unique: kernel_dim == 1,
    })
}

/// The unique curve of the linear system, as a ternary form (error when
/// the kernel is not one-dimensional). Exact kernel extraction, so this is
/// only practical for small systems.
pub fn kernel_curve(spec: &FatPointSpec) -> Result<TernaryPoly, PlaneError> {
    let m = interpolation_matrix(spec)?;
    let kernel = m.kernel_basis();
    if kernel.len() != 1 {
        return Err(PlaneError::NoUniqueCurve(format!(
            "kernel dimension is {}",
            kernel.len()
        )));
    }
    let coeffs = &kernel[0];
    let basis = monomial_basis(spec.degree);
    let terms: Vec<((u32, u32, u32), Rat)> = basis
        .into_iter()
        .zip(coeffs.iter().cloned())
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(TernaryPoly::from_terms(spec.degree, terms)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn default_configuration_is_generic() {
        let cfg = default_config();
        // q1 = (1:0:0), diagonal points as computed from the joins.
        assert_eq!(cfg.points()[0].coords(), &[rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(
            cfg.diagonals()[0].coords(),
            &[rat(0, 1), rat(1, 1), rat(2, 1)]
        );
        assert_eq!(
            cfg.diagonals()[2].coords(),
            &[rat(1, 1), rat(1, 1), rat(1, 1)]
        );
        // The tangent at q contains q.
        assert!(cfg.tangent().contains(cfg.q()));
    }

    #[test]
    fn repeated_parameters_are_rejected() {
        let r = |p: i64| Rat::from(Int::from(p));
        assert!(matches!(
            build_config([r(0), r(1), r(1), r(2), r(3)]),
            Err(PlaneError::ParamsNotDistinct(_))
        ));
    }

    #[test]
    fn condition_counts_match_the_multiplicity_formula() {
        let cfg = default_config();
        let spec = dn_plane_data(&cfg, 2).unwrap();
        // 4·C(5,2) + 3·C(7,2) + C(5,2) + C(4,2) = 40 + 63 + 10 + 6.
        assert_eq!(spec.condition_count(), 119);
        assert_eq!(spec.degree(), 14);
        assert_eq!(monomial_basis(14).len(), 120);
    }

    #[test]
    fn family_members_have_arithmetic_genus_zero() {
        let cfg = default_config();
        for n in 1..=6 {
            let spec = dn_plane_data(&cfg, n).unwrap();
            assert_eq!(spec.arithmetic_genus(), rat(0, 1), "n = {n}");
        }
    }

    #[test]
    fn index_zero_is_rejected() {
        let cfg = default_config();
        assert!(matches!(
            dn_plane_data(&cfg, 0),
            Err(PlaneError::IndexOutOfRange(0))
        ));
    }
}
