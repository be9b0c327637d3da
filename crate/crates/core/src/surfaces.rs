//! Concrete surface models: the symmetric square of a hyperelliptic curve,
//! its quotient plane model, the blown-up quotient at genus 1, the full
//! rank-10 resolution lattice, and the genus ≥ 2 pairing table.
//!
//! Each builder instantiates a lattice together with every named divisor
//! class the toolkit works with, and verifies a set of internal relations at
//! construction time — a model that fails its own consistency gates cannot
//! be built. The rank-10 lattice is reconstructed from its dual intersection
//! graph (curve adjacencies plus the (−1)/(−2) self-intersection convention)
//! and is gated by unimodularity and an independent class relation.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde_json::{json, Value};
use thiserror::Error;

use crate::lattice::{DivClass, DoubleCoverMap, LatticeError, NsLattice};
use crate::matrix::{LinalgError, Matrix};
use crate::{rat, rint, Rat, RatMatrix};

/// Errors produced by model builders and class-family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("genus must be at least {min}, got {got}")]
    GenusOutOfRange { min: u32, got: u32 },
    #[error("torsion order must be at least 2, got {0}")]
    TorsionOrderOutOfRange(u64),
    #[error("no class named {0:?} in this model")]
    UnknownClass(String),
    #[error("operation requires the {expected} model, got {got}")]
    WrongModel { expected: String, got: String },
    #[error("internal relation {0:?} failed to verify")]
    RelationViolated(String),
    #[error("lattice reconstruction gate failed: {0}")]
    ReconstructionGate(String),
    #[error("intersection graph inconsistent: {0}")]
    GraphInconsistent(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which surface a model describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// Second symmetric product of a genus-`g` hyperelliptic curve.
    Sym2(u32),
    /// Quotient of the symmetric product by the hyperelliptic involution.
    X(u32),
    /// The genus-1 quotient blown up at one point (rank 3, torsion (ℤ/2)²).
    XtildeG1,
    /// Minimal resolution of the blown-up genus-1 quotient (rank 10).
    Z,
    /// Pairing table of five named classes at genus ≥ 2 (not a basis).
    XtildeSpan(u32),
}

impl ModelKind {
    /// Display name of the model, e.g. `"Sym2(2)"` or `"XtildeG1"`.
    pub fn name(&self) -> String {
        match self {
            ModelKind::Sym2(g) => format!("Sym2({g})"),
            ModelKind::X(g) => format!("X({g})"),
            ModelKind::XtildeG1 => "XtildeG1".into(),
            ModelKind::Z => "Z".into(),
            ModelKind::XtildeSpan(g) => format!("XtildeSpan({g})"),
        }
    }
}

/// A verified linear relation between named classes, stored as the two
/// sides of an exact equality.
#[derive(Debug, Clone)]
pub struct Relation {
    name: String,
    lhs: DivClass,
    rhs: DivClass,
}

impl Relation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lhs(&self) -> &DivClass {
        &self.lhs
    }

    pub fn rhs(&self) -> &DivClass {
        &self.rhs
    }

    /// Exact equality of free and torsion parts.
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A surface model: a lattice, named divisor classes, and the relations that
/// were verified when the model was built.
#[derive(Debug, Clone)]
pub struct SurfaceModel {
    kind: ModelKind,
    lattice: Arc<NsLattice>,
    named: BTreeMap<String, DivClass>,
    relations: Vec<Relation>,
}

impl SurfaceModel {
    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn name(&self) -> String {
        self.kind.name()
    }

    pub fn lattice(&self) -> &Arc<NsLattice> {
        &self.lattice
    }

    /// Looks up a named class.
    pub fn class(&self, name: &str) -> Result<&DivClass, ModelError> {
        self.named
            .get(name)
            .ok_or_else(|| ModelError::UnknownClass(name.into()))
    }

    /// All named classes in label order.
    pub fn classes(&self) -> impl Iterator<Item = (&String, &DivClass)> {
        self.named.iter()
    }

    pub fn class_names(&self) -> Vec<&str> {
        self.named.keys().map(String::as_str).collect()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// JSON rendering: lattice data, named classes, relation names.
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name(),
            "lattice": self.lattice.to_json(),
            "classes": self
                .named
                .iter()
                .map(|(k, v)| (k.clone(), v.to_json()))
                .collect::<serde_json::Map<String, Value>>(),
            "relations": self
                .relations
                .iter()
                .map(|r| json!({
                    "name": r.name,
                    "lhs": r.lhs.to_json(),
                    "rhs": r.rhs.to_json(),
                    "holds": r.holds(),
                }))
                .collect::<Vec<_>>(),
        })
    }

    fn insert(&mut self, name: &str, class: DivClass) {
        self.named.insert(name.into(), class);
    }

    fn add_relation(&mut self, name: &str, lhs: DivClass, rhs: DivClass) -> Result<(), ModelError> {
        let rel = Relation {
            name: name.into(),
            lhs,
            rhs,
        };
        if !rel.holds() {
            return Err(ModelError::RelationViolated(name.into()));
        }
        self.relations.push(rel);
        Ok(())
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| (*s).into()).collect()
}

/// Second symmetric product of a genus-`g` hyperelliptic curve: rank-2
/// lattice on the diagonal and antidiagonal classes.
pub fn build_sym2(g: u32) -> Result<SurfaceModel, ModelError> {
    if g < 1 {
        return Err(ModelError::GenusOutOfRange { min: 1, got: g });
    }
    let gi = i64::from(g);
    let gram = Matrix::symmetric(vec![
        vec![rint(4 - 4 * gi), rint(2 * gi + 2)],
        vec![rint(2 * gi + 2), rint(1 - gi)],
    ])?;
    let lattice = NsLattice::new(
        ModelKind::Sym2(g).name(),
        labels(&["Delta+", "Delta-"]),
        gram,
        vec![],
    )?;
    let mut model = SurfaceModel {
        kind: ModelKind::Sym2(g),
        lattice: Arc::clone(&lattice),
        named: BTreeMap::new(),
        relations: vec![],
    };
    model.insert("Delta+", lattice.basis_class(0));
    model.insert("Delta-", lattice.basis_class(1));
    Ok(model)
}

/// Quotient of the symmetric product by the hyperelliptic involution:
/// rank-2 lattice on the images of the diagonal and antidiagonal, together
/// with the degree-2 cover map from the symmetric product.
///
/// The cover pulls the diagonal image back to the diagonal and the
/// antidiagonal image back to twice the antidiagonal (the cover branches
/// there); construction verifies the pairing-doubling law, so the symmetric
/// product's Gram matrix is re-derived from this one.
pub fn build_x(g: u32) -> Result<(SurfaceModel, DoubleCoverMap), ModelError> {
    if g < 1 {
        return Err(ModelError::GenusOutOfRange { min: 1, got: g });
    }
    let gi = i64::from(g);
    let gram = Matrix::symmetric(vec![
        vec![rint(2 - 2 * gi), rint(2 * gi + 2)],
        vec![rint(2 * gi + 2), rint(2 - 2 * gi)],
    ])?;
    let lattice = NsLattice::new(ModelKind::X(g).name(), labels(&["C+", "C-"]), gram, vec![])?;
    let mut model = SurfaceModel {
        kind: ModelKind::X(g),
        lattice: Arc::clone(&lattice),
        named: BTreeMap::new(),
        relations: vec![],
    };
    model.insert("C+", lattice.basis_class(0));
    model.insert("C-", lattice.basis_class(1));
    let sym2 = build_sym2(g)?;
    let pullback = Matrix::from_rows(vec![vec![rint(1), rint(0)], vec![rint(0), rint(2)]])?;
    let cover = DoubleCoverMap::new(Arc::clone(sym2.lattice()), lattice, pullback)?;
    Ok((model, cover))
}

/// The genus-1 quotient blown up at one antidiagonal point: rank-3 lattice
/// with 2-torsion, carrying all the named classes of the effective-cone
/// analysis.
pub fn build_xtilde_g1() -> Result<SurfaceModel, ModelError> {
    let gram = Matrix::symmetric(vec![
        vec![rat(1, 2), rat(1, 2), rint(0)],
        vec![rat(1, 2), rint(0), rint(0)],
        vec![rint(0), rint(0), rat(-1, 2)],
    ])?;
    let lattice = NsLattice::new(
        ModelKind::XtildeG1.name(),
        labels(&["E1", "E(12)(34)", "E"]),
        gram,
        labels(&["[E1-E2]", "[E1-E3]"]),
    )?;
    let mut model = SurfaceModel {
        kind: ModelKind::XtildeG1,
        lattice: Arc::clone(&lattice),
        named: BTreeMap::new(),
        relations: vec![],
    };
    // E2, E3, E4 share E1's free part (twice any of them is the pullback of
    // a line) and differ from E1 only by torsion.
    let e_free = vec![rint(1), rint(0), rint(0)];
    let e1 = lattice.class(e_free.clone(), vec![0, 0])?;
    let e2 = lattice.class(e_free.clone(), vec![1, 0])?;
    let e3 = lattice.class(e_free.clone(), vec![0, 1])?;
    let e4 = lattice.class(e_free, vec![1, 1])?;
    let e1234 = lattice.basis_class(1);
    let e = lattice.basis_class(2);
    let c = lattice.free_class(vec![rint(2), rint(0), rint(-2)])?;
    let k = lattice.free_class(vec![rint(-2), rint(0), rint(2)])?;
    let delta_minus = lattice.free_class(vec![rint(0), rint(2), rint(-2)])?;

    model.add_relation("C = 2E1 - 2E", c.clone(), {
        let two = rint(2);
        e1.scale(&two)?.sub(&e.scale(&two)?)?
    })?;
    model.add_relation("C = -K", c.clone(), k.neg())?;
    model.add_relation("Delta- = 2E(12)(34) - 2E", delta_minus.clone(), {
        let two = rint(2);
        e1234.scale(&two)?.sub(&e.scale(&two)?)?
    })?;
    // Torsion relation: [E2-E1] + [E2-E3] + [E2-E4] = 0.
    model.add_relation(
        "[E2-E1] + [E2-E3] + [E2-E4] = 0",
        e2.sub(&e1)?.add(&e2.sub(&e3)?)?.add(&e2.sub(&e4)?)?,
        lattice.zero_class(),
    )?;

    model.insert("E1", e1);
    model.insert("E2", e2);
    model.insert("E3", e3);
    model.insert("E4", e4);
    model.insert("E(12)(34)", e1234);
    model.insert("E", e);
    model.insert("C", c);
    model.insert("K", k);
    model.insert("Delta-", delta_minus);
    Ok(model)
}

/// Basis order of the rank-10 resolution lattice.
pub const Z_BASIS: [&str; 10] = [
    "E12",
    "E13",
    "E14",
    "E1",
    "E2",
    "E3",
    "E4",
    "E(12)(34)",
    "E'",
    "E",
];

/// The sixteen negative curves whose adjacency graph describes the rank-10
/// lattice: eight (−2)-curves followed by eight (−1)-curves.
pub const Z_CURVES: [&str; 16] = [
    "E12",
    "E13",
    "E14",
    "E23",
    "E24",
    "E34",
    "Delta-",
    "E'", // self-int −2
    "E1",
    "E2",
    "E3",
    "E4",
    "E(12)(34)",
    "E(13)(24)",
    "E(23)(14)",
    "E", // self-int −1
];

/// Basis Gram matrix of the rank-10 lattice, read off the curve adjacency
/// graph: (−1)/(−2) self-intersections on the diagonal, pairing 1 for each
/// adjacent pair of basis curves, 0 otherwise.
pub fn z_standard_gram() -> RatMatrix {
    let n = Z_BASIS.len();
    let mut gram = Matrix::zero(n, n);
    for (i, d) in Z_BASIS_SELF_INT.iter().enumerate() {
        *gram.at_mut(i, i) = rint(*d);
    }
    // Adjacent basis curves (pairing 1): each exceptional node curve meets
    // the two tangent-line curves over its node and, for the first node,
    // the diagonal-type curve through it; the two curves over the blown-up
    // point meet each other.
    let edges = [
        (0usize, 3usize),
        (0, 4),
        (0, 7),
        (1, 3),
        (1, 5),
        (2, 3),
        (2, 6),
        (8, 9),
    ];
    for (i, j) in edges {
        *gram.at_mut(i, j) = rint(1);
        *gram.at_mut(j, i) = rint(1);
    }
    gram
}

/// Self-intersections of the ten basis curves, in `Z_BASIS` order.
const Z_BASIS_SELF_INT: [i64; 10] = [-2, -2, -2, -1, -1, -1, -1, -1, -2, -1];

/// Minimal resolution of the blown-up genus-1 quotient: unimodular rank-10
/// lattice, reconstructed from the curve adjacency graph.
///
/// The basis Gram matrix encodes the (−1)/(−2) self-intersections and the
/// adjacency (pairing 1) of the basis curves; the seven remaining named
/// curves are solved from their intersection profiles, never hand-entered.
/// Construction is gated on unimodularity and on the class relation
/// `2E(12)(34) + E34 + E12 = Delta- + 2E + E'`, two facts independent of
/// the reconstruction.
pub fn build_z() -> Result<SurfaceModel, ModelError> {
    build_z_from_gram(z_standard_gram())
}

/// Runs the full rank-10 reconstruction from a caller-supplied basis Gram.
///
/// Used by the standard construction and by sensitivity checks that perturb
/// a single entry and expect the gates (unimodularity, class relation) or
/// the downstream curve-family identities to break.
pub fn build_z_from_gram(gram: RatMatrix) -> Result<SurfaceModel, ModelError> {
    let n = Z_BASIS.len();
    if gram.rows() != n || gram.cols() != n {
        return Err(ModelError::ReconstructionGate(format!(
            "basis Gram must be {n}x{n}, got {}x{}",
            gram.rows(),
            gram.cols()
        )));
    }
    let lattice = NsLattice::new(ModelKind::Z.name(), labels(&Z_BASIS), gram, vec![])?;

    // Reconstruction gate 1: the lattice must be unimodular.
    let det = lattice.gram().det()?;
    if det != rint(1) && det != rint(-1) {
        return Err(ModelError::ReconstructionGate(format!(
            "determinant is {det}, expected ±1"
        )));
    }

    let mut model = SurfaceModel {
        kind: ModelKind::Z,
        lattice: Arc::clone(&lattice),
        named: BTreeMap::new(),
        relations: vec![],
    };
    for (i, name) in Z_BASIS.iter().enumerate() {
        model.insert(name, lattice.basis_class(i));
    }

    // Non-basis curves, defined by their pairings against the basis
    // (intersection 1 with adjacent basis curves, 0 otherwise).
    let profiles: [(&str, [i64; 10]); 6] = [
        ("E23", [0, 0, 0, 0, 1, 1, 0, 0, 0, 0]),
        ("E24", [0, 0, 0, 0, 1, 0, 1, 0, 0, 0]),
        ("E34", [0, 0, 0, 0, 0, 1, 1, 1, 0, 0]),
        ("E(13)(24)", [0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
        ("E(23)(14)", [0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
        ("Delta-", [0, 0, 0, 1, 1, 1, 1, 0, 0, 1]),
    ];
    for (name, profile) in profiles {
        let pairings: Vec<Rat> = profile.iter().map(|&v| rint(v)).collect();
        let class = lattice.class_from_intersections(&pairings)?;
        model.insert(name, class);
    }

    // Canonical class from adjunction: pairing 0 with every (−2)-curve and
    // −1 with every (−1)-curve of the basis.
    let k_profile: Vec<Rat> = Z_BASIS_SELF_INT
        .iter()
        .map(|&d| if d == -2 { rint(0) } else { rint(-1) })
        .collect();
    let k = lattice.class_from_intersections(&k_profile)?;
    let c = k.neg();
    model.insert("K", k);
    model.insert("C", c);

    // Reconstruction gate 2: the independent class relation.
    let lhs = model
        .class("E(12)(34)")?
        .scale(&rint(2))?
        .add(model.class("E34")?)?
        .add(model.class("E12")?)?;
    let rhs = model
        .class("Delta-")?
        .add(&model.class("E")?.scale(&rint(2))?)?
        .add(model.class("E'")?)?;
    if lhs != rhs {
        return Err(ModelError::ReconstructionGate(
            "class relation 2E(12)(34) + E34 + E12 = Delta- + 2E + E' failed".into(),
        ));
    }
    model.add_relation("2E(12)(34) + E34 + E12 = Delta- + 2E + E'", lhs, rhs)?;
    Ok(model)
}

/// Pairing table of the five classes spanning the genus ≥ 2 picture.
///
/// The five classes are not claimed to be linearly independent (the table is
/// degenerate); only the pairings are asserted.
pub fn build_xtilde_span(g: u32) -> Result<SurfaceModel, ModelError> {
    if g < 2 {
        return Err(ModelError::GenusOutOfRange { min: 2, got: g });
    }
    let gi = i64::from(g);
    let gram = Matrix::symmetric(vec![
        vec![
            rint(2 - 2 * gi),
            rint(2 + 2 * gi),
            rint(1),
            rint(2),
            rint(0),
        ],
        vec![rint(2 + 2 * gi), rint(-2 * gi), rint(1), rint(0), rint(1)],
        vec![rint(1), rint(1), rat(1, 2), rint(1), rint(0)],
        vec![rint(2), rint(0), rint(1), rint(0), rint(1)],
        vec![rint(0), rint(1), rint(0), rint(1), rat(-1, 2)],
    ])?;
    let lattice = NsLattice::new(
        ModelKind::XtildeSpan(g).name(),
        labels(&["Delta+", "Delta-", "E1", "C", "E"]),
        gram,
        vec![],
    )?;
    let mut model = SurfaceModel {
        kind: ModelKind::XtildeSpan(g),
        lattice: Arc::clone(&lattice),
        named: BTreeMap::new(),
        relations: vec![],
    };
    for (i, name) in ["Delta+", "Delta-", "E1", "C", "E"].iter().enumerate() {
        model.insert(name, lattice.basis_class(i));
    }
    Ok(model)
}

fn require_kind(model: &SurfaceModel, expected: ModelKind) -> Result<(), ModelError> {
    if model.kind() != expected {
        return Err(ModelError::WrongModel {
            expected: expected.name(),
            got: model.name(),
        });
    }
    Ok(())
}

/// The negative-curve family `D_n = 2n(n+1)·E1 − 2n·E(12)(34) + (1−2n²)·E`
/// on the blown-up genus-1 quotient.
pub fn dn_class(model: &SurfaceModel, n: u64) -> Result<DivClass, ModelError> {
    require_kind(model, ModelKind::XtildeG1)?;
    let n = i128::from(n);
    let coeff = |v: i128| Rat::from(crate::Int::from(v));
    Ok(model.lattice().free_class(vec![
        coeff(2 * n * (n + 1)),
        coeff(-2 * n),
        coeff(1 - 2 * n * n),
    ])?)
}

/// The finite-order ray `Γ_m = m·E1 − E(12)(34) + (1−m)·E`, defined for
/// torsion order `m ≥ 2`; equals `(1/2)(−m·K − Delta-)`.
pub fn gamma_class(model: &SurfaceModel, m: u64) -> Result<DivClass, ModelError> {
    require_kind(model, ModelKind::XtildeG1)?;
    if m < 2 {
        return Err(ModelError::TorsionOrderOutOfRange(m));
    }
    let m = i128::from(m);
    let coeff = |v: i128| Rat::from(crate::Int::from(v));
    Ok(model
        .lattice()
        .free_class(vec![coeff(m), coeff(-1), coeff(1 - m)])?)
}

/// Pushforward of the rank-10 basis to the rank-3 lattice: the exceptional
/// node curves and the second exceptional curve over the blown-up point
/// contract to zero; every other basis curve maps to its image class.
fn resolution_pushforward() -> Result<RatMatrix, LinalgError> {
    // Columns follow Z_BASIS; rows follow (E1, E(12)(34), E).
    Matrix::from_rows(vec![
        vec![
            rint(0),
            rint(0),
            rint(0),
            rint(1),
            rint(1),
            rint(1),
            rint(1),
            rint(0),
            rint(0),
            rint(0),
        ],
        vec![
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(1),
            rint(0),
            rint(0),
        ],
        vec![
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(0),
            rint(1),
        ],
    ])
}

/// The integer rounding `R_n = ⌊π*D_n⌋ = π*D_n − (1/2)·E'` of the pullback
/// of `D_n` along the resolution, computed on the rank-10 lattice.
///
/// The class is recovered from intersection data: by the projection formula
/// `⟨π*D_n, b⟩ = ⟨D_n, π_*b⟩` for every basis curve `b`, and the `E'`
/// correction subtracts half of `E'`'s pairing row. No coordinates are
/// hand-entered.
pub fn rn_class(model_z: &SurfaceModel, n: u64) -> Result<DivClass, ModelError> {
    require_kind(model_z, ModelKind::Z)?;
    let xtilde = build_xtilde_g1()?;
    let dn = dn_class(&xtilde, n)?;
    let push = resolution_pushforward()?;
    let z = model_z.lattice();
    let eprime_index = 8;
    let mut pairings = Vec::with_capacity(z.rank());
    for b in 0..z.rank() {
        // π_* of the b-th basis curve, as a class upstairs is replaced by
        // its image downstairs; pair D_n against it.
        let image: Vec<Rat> = (0..3).map(|r| push.at(r, b).clone()).collect();
        let image_class = xtilde.lattice().free_class(image)?;
        let mut p = dn.pair(&image_class)?;
        // Subtract (1/2)·⟨E', b⟩.
        p -= rat(1, 2) * z.gram().at(eprime_index, b).clone();
        pairings.push(p);
    }
    Ok(z.class_from_intersections(&pairings)?)
}

/// Pushforward matrix from the rank-10 basis to the rank-3 free part,
/// exposed for cross-model compatibility checks.
pub fn z_to_xtilde_pushforward() -> RatMatrix {
    resolution_pushforward().expect("constant matrix is well-formed")
}

/// A graph of negative curves: nodes tagged with self-intersection −1 or
/// −2, edges meaning intersection number exactly 1.
#[derive(Debug, Clone)]
pub struct IntersectionGraph {
    nodes: Vec<(String, i64)>,
    edges: Vec<(String, String)>,
}

impl IntersectionGraph {
    /// Nodes with their self-intersection tags, in construction order.
    pub fn nodes(&self) -> &[(String, i64)] {
        &self.nodes
    }

    /// Unordered edges, listed with endpoints in node order.
    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    /// Whether the graph has the given edge (in either orientation).
    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.edges
            .iter()
            .any(|(u, v)| (u == a && v == b) || (u == b && v == a))
    }

    /// DOT rendering: filled circles, one color per self-intersection
    /// (−2 red, −1 blue), matching the usual dual-graph conventions.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph intersection_graph {\n");
        out.push_str("  node [style=filled];\n");
        for (name, self_int) in &self.nodes {
            let color = if *self_int == -2 { "red" } else { "lightblue" };
            out.push_str(&format!(
                "  \"{name}\" [fillcolor={color}, selfint={self_int}];\n"
            ));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  \"{a}\" -- \"{b}\";\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self
                .nodes
                .iter()
                .map(|(n, s)| json!({"name": n, "self_int": s}))
                .collect::<Vec<_>>(),
            "edges": self
                .edges
                .iter()
                .map(|(a, b)| json!([a, b]))
                .collect::<Vec<_>>(),
        })
    }
}

/// Builds the intersection graph on the given named curves of a model.
///
/// Fails unless every listed curve has self-intersection −1 or −2 and all
/// cross pairings are 0 or 1 — the graph is derived from the lattice, so a
/// successful build certifies the adjacency structure.
pub fn intersection_graph(
    model: &SurfaceModel,
    curve_names: &[&str],
) -> Result<IntersectionGraph, ModelError> {
    let mut nodes = Vec::with_capacity(curve_names.len());
    for name in curve_names {
        let class = model.class(name)?;
        let s = class.self_int();
        if s != rint(-1) && s != rint(-2) {
            return Err(ModelError::GraphInconsistent(format!(
                "{name} has self-intersection {s}, expected -1 or -2"
            )));
        }
        let tag = if s == rint(-2) { -2 } else { -1 };
        nodes.push(((*name).to_string(), tag));
    }
    let mut edges = Vec::new();
    for i in 0..curve_names.len() {
        for j in i + 1..curve_names.len() {
            let p = model
                .class(curve_names[i])?
                .pair(model.class(curve_names[j])?)?;
            if p == rint(1) {
                edges.push((curve_names[i].to_string(), curve_names[j].to_string()));
            } else if !p.is_zero() {
                return Err(ModelError::GraphInconsistent(format!(
                    "{} · {} = {p}, expected 0 or 1",
                    curve_names[i], curve_names[j]
                )));
            }
        }
    }
    Ok(IntersectionGraph { nodes, edges })
}

/// The intersection graph of the sixteen negative curves on the rank-10
/// model.
pub fn z_intersection_graph(model_z: &SurfaceModel) -> Result<IntersectionGraph, ModelError> {
    require_kind(model_z, ModelKind::Z)?;
    intersection_graph(model_z, &Z_CURVES)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_bounds_are_enforced() {
        assert!(matches!(
            build_sym2(0),
            Err(ModelError::GenusOutOfRange { min: 1, got: 0 })
        ));
        assert!(matches!(
            build_xtilde_span(1),
            Err(ModelError::GenusOutOfRange { min: 2, got: 1 })
        ));
        let xt = build_xtilde_g1().unwrap();
        assert!(matches!(
            gamma_class(&xt, 1),
            Err(ModelError::TorsionOrderOutOfRange(1))
        ));
    }

    #[test]
    fn model_guards_reject_wrong_lattices() {
        let z = build_z().unwrap();
        assert!(matches!(
            dn_class(&z, 1),
            Err(ModelError::WrongModel { .. })
        ));
        let xt = build_xtilde_g1().unwrap();
        assert!(matches!(
            rn_class(&xt, 1),
            Err(ModelError::WrongModel { .. })
        ));
    }

    #[test]
    fn unknown_class_lookup_errors() {
        let m = build_sym2(1).unwrap();
        assert!(matches!(m.class("nope"), Err(ModelError::UnknownClass(_))));
    }
}
