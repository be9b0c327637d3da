//! Weighted-projective model of the quotient surface: the hypersurface
//! `x₄² = ℓ₁⋯ℓ_{2g+2}` in P(1,1,1,g+1), where the `ℓᵢ` are distinct tangent
//! lines of the conic `x₃² = 4x₁x₂` in the plane of the first three
//! coordinates.
//!
//! The plane P² is the symmetric square of P¹ via `{u,v} ↦ (1 : uv : u+v)`;
//! the conic is the image of the diagonal, and the tangent line at the
//! diagonal point of parameter `t` is `t²x₁ + x₂ − tx₃` (the line `x₁ = 0`
//! for `t = ∞`). Curves on the surface are recorded with an explicit
//! rational parametrization of their plane support, the restricted `x₄`
//! section along that parametrization, and an ambient polynomial inducing
//! the section — enough data to verify membership and decide exact
//! intersection questions by resultants and gcds of binary forms.

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::poly::{line_intersection, BinaryPoly, LinForm, PolyError, ProjPoint3, TernaryPoly};
use crate::{rat_string, Rat};

/// Errors from the weighted-projective surface model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WpsError {
    #[error("genus must be at least 1, got {0}")]
    GenusOutOfRange(u32),
    #[error("a genus-{genus} surface needs {expected} tangent parameters, got {got}")]
    ParamCount {
        genus: u32,
        expected: usize,
        got: usize,
    },
    #[error("tangent parameters must be distinct, {0} repeats")]
    DuplicateParam(String),
    #[error("cannot parse tangent parameter {0:?}")]
    BadParam(String),
    #[error(
        "operation requires the standard genus-1 surface with tangent parameters (inf, 0, 1, -1)"
    )]
    PresetRequired,
    #[error("curve {label:?} is malformed: {reason}")]
    CurveMalformed { label: String, reason: String },
    #[error("curve {0:?} does not lie on its support")]
    NotOnSupport(String),
    #[error("curve {0:?}: section squared differs from the branch form on the support")]
    SectionSquareMismatch(String),
    #[error("curve {0:?}: ambient polynomial does not restrict to the curve section")]
    AmbientMismatch(String),
    #[error(
        "antidiagonal labeling impossible: expected exactly one component disjoint \
         from the three double-point curves"
    )]
    LabelingImpossible,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A tangency parameter on the conic: a point of P¹.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TangentParam {
    Finite(Rat),
    Infinity,
}

impl std::fmt::Display for TangentParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TangentParam::Finite(t) => write!(f, "{}", rat_string(t)),
            TangentParam::Infinity => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for TangentParam {
    type Err = WpsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(TangentParam::Infinity),
            other => other
                .parse::<Rat>()
                .map(TangentParam::Finite)
                .map_err(|_| WpsError::BadParam(other.to_string())),
        }
    }
}

/// The tangent line of the conic `x₃² = 4x₁x₂` at the diagonal point of
/// parameter `t`: the line `t²x₁ + x₂ − tx₃`, or `x₁ = 0` at `t = ∞`.
pub fn tangent_line(t: &TangentParam) -> LinForm {
    match t {
        TangentParam::Finite(t) => {
            LinForm::new(t * t, Rat::one(), -t).expect("tangent line is never zero")
        }
        TangentParam::Infinity => {
            LinForm::new(Rat::one(), Rat::zero(), Rat::zero()).expect("nonzero")
        }
    }
}

/// The degree-2 parametrization `(s², t², 2st)` of the conic
/// `x₃² = 4x₁x₂`, i.e. the image of the diagonal `{u, u}`.
fn conic_param() -> [BinaryPoly; 3] {
    let bp = |v: &[i64]| {
        BinaryPoly::new(v.iter().map(|&c| Rat::from(crate::Int::from(c))).collect())
            .expect("nonempty")
    };
    [bp(&[1, 0, 0]), bp(&[0, 0, 1]), bp(&[0, 2, 0])]
}

/// The double cover of P² branched along `2g+2` tangent lines of the
/// conic, realized as `x₄² = ∏ᵢ ℓᵢ` in P(1,1,1,g+1).
#[derive(Debug, Clone)]
pub struct WpsSurface {
    genus: u32,
    params: Vec<TangentParam>,
    lines: Vec<LinForm>,
    rhs: TernaryPoly,
    nodes: Vec<(usize, usize, ProjPoint3)>,
}

/// Builds the surface from a genus and `2g+2` distinct tangency parameters.
pub fn build_wps(genus: u32, params: Vec<TangentParam>) -> Result<WpsSurface, WpsError> {
    if genus < 1 {
        return Err(WpsError::GenusOutOfRange(genus));
    }
    let expected = 2 * genus as usize + 2;
    if params.len() != expected {
        return Err(WpsError::ParamCount {
            genus,
            expected,
            got: params.len(),
        });
    }
    for i in 0..params.len() {
        for j in 0..i {
            if params[i] == params[j] {
                return Err(WpsError::DuplicateParam(params[i].to_string()));
            }
        }
    }
    let lines: Vec<LinForm> = params.iter().map(tangent_line).collect();
    let rhs = TernaryPoly::product_of_lines(&lines);
    // Distinct tangent lines always meet in a single point; these pairwise
    // intersections are exactly the nodes of the double cover.
    let mut nodes = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            let p = line_intersection(&lines[i], &lines[j])?;
            nodes.push((i, j, p));
        }
    }
    Ok(WpsSurface {
        genus,
        params,
        lines,
        rhs,
        nodes,
    })
}

/// The standard genus-1 surface: tangency parameters `(∞, 0, 1, −1)`,
/// branch lines `x₁`, `x₂`, `x₁+x₂−x₃`, `x₁+x₂+x₃`.
pub fn build_wps_preset_g1() -> Result<WpsSurface, WpsError> {
    build_wps(1, preset_params())
}

fn preset_params() -> Vec<TangentParam> {
    vec![
        TangentParam::Infinity,
        TangentParam::Finite(Rat::zero()),
        TangentParam::Finite(Rat::one()),
        TangentParam::Finite(-Rat::one()),
    ]
}

impl WpsSurface {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn params(&self) -> &[TangentParam] {
        &self.params
    }

    pub fn lines(&self) -> &[LinForm] {
        &self.lines
    }

    /// The branch form `∏ᵢ ℓᵢ`, the right-hand side of `x₄² = …`.
    pub fn rhs(&self) -> &TernaryPoly {
        &self.rhs
    }

    /// The nodes of the surface: for each pair of branch lines, their
    /// intersection point (indices into `lines`).
    pub fn nodes(&self) -> &[(usize, usize, ProjPoint3)] {
        &self.nodes
    }

    /// Witness that branch line `i` is tangent to the conic: the square
    /// root of its restriction to the conic parametrization (a line meets
    /// the conic in a double point exactly when the restriction is a
    /// perfect square).
    pub fn tangency_square(&self, i: usize) -> Result<BinaryPoly, WpsError> {
        let restricted = TernaryPoly::linear(&self.lines[i]).compose_binary(&conic_param())?;
        Ok(restricted.sqrt()?)
    }

    /// How many branch lines pass through a point.
    pub fn lines_through(&self, p: &ProjPoint3) -> usize {
        self.lines.iter().filter(|l| l.contains(p)).count()
    }

    /// Whether this is the standard genus-1 surface.
    pub fn is_preset_g1(&self) -> bool {
        self.params == preset_params()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "genus": self.genus,
            "params": self.params.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "lines": self
                .lines
                .iter()
                .map(|l| l.coeffs().iter().map(rat_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "rhs": ternary_json(&self.rhs),
            "nodes": self
                .nodes
                .iter()
                .map(|(i, j, p)| json!({
                    "lines": [i, j],
                    "point": p.coords().iter().map(rat_string).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

fn ternary_json(f: &TernaryPoly) -> Value {
    json!({
        "degree": f.degree(),
        "terms": f
            .terms()
            .map(|(&(a, b, c), coeff)| json!({
                "exps": [a, b, c],
                "coeff": rat_string(coeff),
            }))
            .collect::<Vec<_>>(),
    })
}

fn binary_json(f: &BinaryPoly) -> Value {
    Value::Array(
        f.coeffs()
            .iter()
            .map(|c| Value::String(rat_string(c)))
            .collect(),
    )
}

/// A curve on the surface: a plane support curve with a rational
/// parametrization, the `x₄` section along the parametrization, and an
/// ambient polynomial in `(x₁, x₂, x₃)` inducing that section.
#[derive(Debug, Clone)]
pub struct CurveOnX {
    label: String,
    support: TernaryPoly,
    param: [BinaryPoly; 3],
    section: BinaryPoly,
    ambient: TernaryPoly,
}

impl CurveOnX {
    pub fn new(
        label: impl Into<String>,
        support: TernaryPoly,
        param: [BinaryPoly; 3],
        section: BinaryPoly,
        ambient: TernaryPoly,
    ) -> Self {
        CurveOnX {
            label: label.into(),
            support,
            param,
            section,
            ambient,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn support(&self) -> &TernaryPoly {
        &self.support
    }

    pub fn param(&self) -> &[BinaryPoly; 3] {
        &self.param
    }

    pub fn section(&self) -> &BinaryPoly {
        &self.section
    }

    pub fn ambient(&self) -> &TernaryPoly {
        &self.ambient
    }

    /// The curve with the opposite sheet: same support and parametrization,
    /// negated section and ambient polynomial.
    pub fn conjugate(&self, label: impl Into<String>) -> Self {
        CurveOnX {
            label: label.into(),
            support: self.support.clone(),
            param: self.param.clone(),
            section: self.section.neg(),
            ambient: self.ambient.scale(&-Rat::one()),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "support": ternary_json(&self.support),
            "param": self.param.iter().map(binary_json).collect::<Vec<_>>(),
            "section": binary_json(&self.section),
            "ambient": ternary_json(&self.ambient),
        })
    }
}

/// Verifies that a recorded curve actually lies on the surface:
/// - the parametrization lies on the support and hits no base point,
/// - the section squared equals the branch form restricted to the support,
/// - the ambient polynomial restricts to the section.
pub fn verify_curve_on_x(surface: &WpsSurface, curve: &CurveOnX) -> Result<(), WpsError> {
    let label = curve.label.clone();
    let malformed = |reason: &str| WpsError::CurveMalformed {
        label: label.clone(),
        reason: reason.to_string(),
    };
    if curve.support.is_zero() {
        return Err(malformed("support polynomial is zero"));
    }
    let dp = curve.param[0].degree();
    if curve.param.iter().any(|p| p.degree() != dp) {
        return Err(malformed("parametrization components differ in degree"));
    }
    // No base point: the parametrization never evaluates to (0,0,0).
    let nonzero: Vec<&BinaryPoly> = curve.param.iter().filter(|p| !p.is_zero()).collect();
    let mut base = match nonzero.first() {
        None => return Err(malformed("parametrization components are all zero")),
        Some(p) => (*p).clone(),
    };
    for p in &nonzero[1..] {
        base = base.gcd(p)?;
    }
    if base.degree() > 0 {
        return Err(malformed("parametrization components share a root"));
    }
    let weight = surface.genus as usize + 1;
    if curve.section.degree() != weight * dp {
        return Err(malformed("section degree does not match the x4 weight"));
    }
    if curve.ambient.degree() != weight {
        return Err(malformed("ambient degree does not match the x4 weight"));
    }
    if !curve.support.compose_binary(&curve.param)?.is_zero() {
        return Err(WpsError::NotOnSupport(label));
    }
    let branch = surface.rhs.compose_binary(&curve.param)?;
    let square = curve.section.mul(&curve.section);
    if !branch.sub(&square)?.is_zero() {
        return Err(WpsError::SectionSquareMismatch(label));
    }
    let induced = curve.ambient.compose_binary(&curve.param)?;
    if !induced.sub(&curve.section)?.is_zero() {
        return Err(WpsError::AmbientMismatch(label));
    }
    Ok(())
}

/// Whether two supports define the same plane curve (equal up to scalar).
fn same_support(a: &TernaryPoly, b: &TernaryPoly) -> bool {
    if a.degree() != b.degree() {
        return false;
    }
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let (exps, ca) = a.terms().next().expect("nonzero");
    let cb = match b.terms().find(|(e, _)| *e == exps) {
        Some((_, c)) => c,
        None => return false,
    };
    let ratio = cb / ca;
    match b.sub(&a.scale(&ratio)) {
        Ok(diff) => diff.is_zero(),
        Err(_) => false,
    }
}

/// Exact disjointness of two verified curves on the surface.
///
/// Curves with the same support always meet (at least where the section
/// vanishes). For different supports, the common points are the parameter
/// values of `a` where `b`'s support vanishes *and* the two `x₄` sections
/// agree; the curves are disjoint exactly when the resultant of those two
/// binary forms is nonzero.
pub fn curves_disjoint(surface: &WpsSurface, a: &CurveOnX, b: &CurveOnX) -> Result<bool, WpsError> {
    verify_curve_on_x(surface, a)?;
    verify_curve_on_x(surface, b)?;
    if same_support(&a.support, &b.support) {
        return Ok(false);
    }
    let on_support = b.support.compose_binary(&a.param)?;
    if on_support.is_zero() {
        // a's parametrization lies inside b's support: same curve downstairs.
        return Ok(false);
    }
    let section_gap = a.section.sub(&b.ambient.compose_binary(&a.param)?)?;
    if section_gap.is_zero() {
        return Ok(false);
    }
    Ok(!on_support.resultant(&section_gap)?.is_zero())
}

/// The binary form whose roots are the parameter values mapping to `node`
/// (constant when the parametrized curve misses the node).
fn node_param_form(param: &[BinaryPoly; 3], node: &ProjPoint3) -> Result<BinaryPoly, WpsError> {
    let v = node.coords();
    // Cross products param(θ) × node: all vanish exactly at preimages.
    let crosses = [
        param[0].scale(&v[1]).sub(&param[1].scale(&v[0]))?,
        param[0].scale(&v[2]).sub(&param[2].scale(&v[0]))?,
        param[1].scale(&v[2]).sub(&param[2].scale(&v[1]))?,
    ];
    let mut g: Option<BinaryPoly> = None;
    for c in crosses {
        if c.is_zero() {
            continue;
        }
        g = Some(match g {
            None => c,
            Some(acc) => acc.gcd(&c)?,
        });
    }
    g.ok_or_else(|| WpsError::CurveMalformed {
        label: String::new(),
        reason: "parametrization is constant".to_string(),
    })
}

/// Whether two verified curves meet at a *smooth* point of the surface,
/// i.e. share a point that is not one of the nodes.
///
/// The meeting parameters form a binary form `g`; the meetings all sit at
/// nodes exactly when every root of `g` is a root of the node-preimage
/// form, which is decided by one gcd computation.
pub fn meets_outside_nodes(
    surface: &WpsSurface,
    a: &CurveOnX,
    b: &CurveOnX,
) -> Result<bool, WpsError> {
    verify_curve_on_x(surface, a)?;
    verify_curve_on_x(surface, b)?;
    let meeting = if same_support(&a.support, &b.support) {
        if a.param != b.param {
            return Err(WpsError::CurveMalformed {
                label: b.label.clone(),
                reason: "same support but different parametrizations".to_string(),
            });
        }
        let gap = a.section.sub(&b.section)?;
        if gap.is_zero() {
            // The curves coincide.
            return Ok(true);
        }
        gap
    } else {
        let on_support = b.support.compose_binary(&a.param)?;
        if on_support.is_zero() {
            return Err(WpsError::CurveMalformed {
                label: b.label.clone(),
                reason: "supports share a component but are not equal".to_string(),
            });
        }
        let section_gap = a.section.sub(&b.ambient.compose_binary(&a.param)?)?;
        if section_gap.is_zero() {
            on_support
        } else {
            let g = on_support.gcd(&section_gap)?;
            if g.degree() == 0 {
                return Ok(false);
            }
            g
        }
    };
    // Form whose roots are all parameters of `a` mapping to any node.
    let mut node_form = BinaryPoly::constant(Rat::one());
    for (_, _, p) in &surface.nodes {
        node_form = node_form.mul(&node_param_form(&a.param, p)?);
    }
    if node_form.degree() == 0 {
        return Ok(true);
    }
    let absorbed = meeting.gcd(&node_form.pow(meeting.degree()))?;
    Ok(absorbed.degree() < meeting.degree())
}

/// The six double-point curves of the standard genus-1 surface: for each
/// of the three ways to split the four branch lines into two pairs, the
/// line through the two corresponding nodes splits on the double cover
/// into two curves (a curve and its conjugate sheet).
pub fn preset_diagonal_curves(surface: &WpsSurface) -> Result<Vec<CurveOnX>, WpsError> {
    if !surface.is_preset_g1() {
        return Err(WpsError::PresetRequired);
    }
    let bp = |v: &[i64]| {
        BinaryPoly::new(v.iter().map(|&c| Rat::from(crate::Int::from(c))).collect())
            .expect("nonempty")
    };
    let line_poly = |a: i64, b: i64, c: i64| {
        TernaryPoly::from_terms(
            1,
            vec![
                ((1, 0, 0), Rat::from(crate::Int::from(a))),
                ((0, 1, 0), Rat::from(crate::Int::from(b))),
                ((0, 0, 1), Rat::from(crate::Int::from(c))),
            ],
        )
        .expect("linear terms")
    };
    let quad = |terms: Vec<((u32, u32, u32), i64)>| {
        TernaryPoly::from_terms(
            2,
            terms
                .into_iter()
                .map(|(e, c)| (e, Rat::from(crate::Int::from(c))))
                .collect(),
        )
        .expect("quadratic terms")
    };
    // Pairing (12)(34): the line through the nodes ℓ₁∩ℓ₂ and ℓ₃∩ℓ₄.
    let e1234 = CurveOnX::new(
        "E(12)(34)",
        line_poly(1, 1, 0),
        [bp(&[1, 0]), bp(&[-1, 0]), bp(&[0, 1])],
        bp(&[0, 1, 0]),
        quad(vec![((0, 1, 1), -1)]),
    );
    // Pairing (13)(24): the line through ℓ₁∩ℓ₃ and ℓ₂∩ℓ₄.
    let e1324 = CurveOnX::new(
        "E(13)(24)",
        line_poly(1, -1, 1),
        [bp(&[1, 0]), bp(&[1, 1]), bp(&[0, 1])],
        bp(&[-2, -2, 0]),
        quad(vec![((0, 2, 0), -2), ((0, 1, 1), 2)]),
    );
    // Pairing (23)(14): the line through ℓ₂∩ℓ₃ and ℓ₁∩ℓ₄.
    let e2314 = CurveOnX::new(
        "E(23)(14)",
        line_poly(1, -1, -1),
        [bp(&[1, 0]), bp(&[1, 1]), bp(&[0, -1])],
        bp(&[2, 2, 0]),
        quad(vec![((0, 2, 0), 2), ((0, 1, 1), 2)]),
    );
    let mut curves = vec![e1234, e1324, e2314];
    let primed: Vec<CurveOnX> = curves
        .iter()
        .map(|c| c.conjugate(format!("{}'", c.label)))
        .collect();
    curves.extend(primed);
    for c in &curves {
        verify_curve_on_x(surface, c)?;
    }
    Ok(curves)
}

/// The two components over the diagonal conic `x₃² = 4x₁x₂` on the
/// standard genus-1 surface, labeled by geometry: the branch form restricts
/// to a perfect square on the conic, so its preimage splits into two
/// curves; exactly one of them is disjoint from all three double-point
/// curves, and that one is the antidiagonal (`"Delta-"`). The other
/// component, the image of the diagonal, is labeled `"Delta"`.
pub fn antidiagonal_components(surface: &WpsSurface) -> Result<(CurveOnX, CurveOnX), WpsError> {
    if !surface.is_preset_g1() {
        return Err(WpsError::PresetRequired);
    }
    let bp = |v: &[i64]| {
        BinaryPoly::new(v.iter().map(|&c| Rat::from(crate::Int::from(c))).collect())
            .expect("nonempty")
    };
    let conic = TernaryPoly::from_terms(
        2,
        vec![
            ((0, 0, 2), Rat::one()),
            ((1, 1, 0), -Rat::from(crate::Int::from(4))),
        ],
    )?;
    let half = Rat::new(crate::Int::from(1), crate::Int::from(2));
    // Section candidate +st(s²−t²) with ambient ½x₃(x₁−x₂).
    let plus = CurveOnX::new(
        "candidate+",
        conic.clone(),
        conic_param(),
        bp(&[0, 1, 0, -1, 0]),
        TernaryPoly::from_terms(2, vec![((1, 0, 1), half.clone()), ((0, 1, 1), -half)])?,
    );
    let minus = plus.conjugate("candidate-");
    verify_curve_on_x(surface, &plus)?;
    verify_curve_on_x(surface, &minus)?;
    let unprimed: Vec<CurveOnX> = preset_diagonal_curves(surface)?
        .into_iter()
        .filter(|c| !c.label.ends_with('\''))
        .collect();
    let mut qualified = Vec::new();
    for candidate in [plus, minus] {
        let mut disjoint_from_all = true;
        for c in &unprimed {
            disjoint_from_all &= curves_disjoint(surface, &candidate, c)?;
        }
        qualified.push((candidate, disjoint_from_all));
    }
    match (qualified[0].1, qualified[1].1) {
        (true, false) | (false, true) => {
            let (first, second) = if qualified[0].1 {
                (0usize, 1usize)
            } else {
                (1, 0)
            };
            let delta_minus = CurveOnX {
                label: "Delta-".to_string(),
                ..qualified[first].0.clone()
            };
            let delta = CurveOnX {
                label: "Delta".to_string(),
                ..qualified[second].0.clone()
            };
            Ok((delta_minus, delta))
        }
        _ => Err(WpsError::LabelingImpossible),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn constructor_guards() {
        assert!(matches!(
            build_wps(0, vec![]),
            Err(WpsError::GenusOutOfRange(0))
        ));
        assert!(matches!(
            build_wps(1, vec![TangentParam::Infinity]),
            Err(WpsError::ParamCount {
                expected: 4,
                got: 1,
                ..
            })
        ));
        let twice = vec![
            TangentParam::Finite(rat(1, 1)),
            TangentParam::Finite(rat(2, 1)),
            TangentParam::Finite(rat(1, 1)),
            TangentParam::Infinity,
        ];
        assert!(matches!(
            build_wps(1, twice),
            Err(WpsError::DuplicateParam(_))
        ));
    }

    #[test]
    fn preset_branch_lines_and_nodes() {
        let surface = build_wps_preset_g1().unwrap();
        assert_eq!(surface.lines().len(), 4);
        assert_eq!(surface.nodes().len(), 6);
        // The node over the pair (ℓ₃, ℓ₄) is (1 : −1 : 0).
        let (_, _, p34) = &surface.nodes()[5];
        assert_eq!(p34.coords(), &[rat(1, 1), rat(-1, 1), rat(0, 1)]);
        // Every node lies on exactly two branch lines.
        for (_, _, p) in surface.nodes() {
            assert_eq!(surface.lines_through(p), 2);
        }
    }

    #[test]
    fn tangent_parameter_parsing_round_trips() {
        let inf: TangentParam = "inf".parse().unwrap();
        assert_eq!(inf, TangentParam::Infinity);
        let half: TangentParam = "-3/2".parse().unwrap();
        assert_eq!(half, TangentParam::Finite(rat(-3, 2)));
        assert!("abc".parse::<TangentParam>().is_err());
    }

    #[test]
    fn preset_curves_verify() {
        let surface = build_wps_preset_g1().unwrap();
        let curves = preset_diagonal_curves(&surface).unwrap();
        assert_eq!(curves.len(), 6);
        for c in &curves {
            verify_curve_on_x(&surface, c).unwrap();
        }
    }

    #[test]
    fn corrupted_section_is_rejected() {
        let surface = build_wps_preset_g1().unwrap();
        let curves = preset_diagonal_curves(&surface).unwrap();
        let mut bad = curves[0].clone();
        bad.section = bad.section.scale(&rat(2, 1));
        assert!(matches!(
            verify_curve_on_x(&surface, &bad),
            Err(WpsError::SectionSquareMismatch(_))
        ));
    }
}
