//! Lattices of numerical divisor classes: a rational intersection pairing on
//! a labeled basis, optional 2-torsion bookkeeping, class recovery from
//! intersection data, and degree-2 cover pullback/pushforward calculus.
//!
//! Classes are tagged with their owning lattice; combining classes from
//! different lattices is a hard error rather than a coercion, since silent
//! coordinate reuse between surfaces is the main bug risk in this domain.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::matrix::{dot, LinalgError};
use crate::{rat_string, Rat, RatMatrix};

/// Errors produced by lattice constructors and class arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("gram matrix must be square and symmetric")]
    GramNotSymmetric,
    #[error("expected {expected} basis labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("classes belong to different lattices")]
    LatticeMismatch,
    #[error("free part has length {got}, lattice rank is {expected}")]
    FreeLength { expected: usize, got: usize },
    #[error("torsion part has length {got}, torsion rank is {expected}")]
    TorsionLength { expected: usize, got: usize },
    #[error("cannot scale a class with nonzero torsion by the non-integer {0}")]
    NonIntegerTorsionScale(String),
    #[error("gram matrix is singular")]
    SingularGram,
    #[error("cover data is inconsistent: {0}")]
    CoverIncompatible(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A lattice of numerical divisor classes: a labeled basis, a symmetric
/// rational Gram matrix, and labels for the generators of the 2-torsion
/// companion group (possibly none).
#[derive(Debug, PartialEq, Eq)]
pub struct NsLattice {
    name: String,
    labels: Vec<String>,
    gram: RatMatrix,
    torsion_labels: Vec<String>,
}

impl NsLattice {
    /// Builds a lattice, checking that the Gram matrix is square and
    /// symmetric with one row per label and that all labels are unique.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        gram: RatMatrix,
        torsion_labels: Vec<String>,
    ) -> Result<Arc<Self>, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::GramNotSymmetric);
        }
        if labels.len() != gram.rows() {
            return Err(LatticeError::LabelCount {
                expected: gram.rows(),
                got: labels.len(),
            });
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in labels.iter().chain(&torsion_labels) {
            if !seen.insert(l.clone()) {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }
        Ok(Arc::new(NsLattice {
            name: name.into(),
            labels,
            gram,
            torsion_labels,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rank of the free part.
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    /// Dimension of the 2-torsion companion over ℤ/2.
    pub fn torsion_rank(&self) -> usize {
        self.torsion_labels.len()
    }

    pub fn torsion_labels(&self) -> &[String] {
        &self.torsion_labels
    }

    /// Index of a basis label.
    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// JSON rendering of the lattice data.
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "basis": self.labels,
            "gram": self.gram.to_json(),
            "torsion_basis": self.torsion_labels,
        })
    }
}

/// Two lattice handles denote the same lattice when they are the same
/// allocation or are structurally equal.
fn same_lattice(a: &Arc<NsLattice>, b: &Arc<NsLattice>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A divisor class: rational coordinates in its lattice's basis plus a
/// ℤ/2-torsion bit vector.
#[derive(Debug, Clone)]
pub struct DivClass {
    lattice: Arc<NsLattice>,
    free: Vec<Rat>,
    torsion: Vec<u8>,
}

impl PartialEq for DivClass {
    fn eq(&self, other: &Self) -> bool {
        same_lattice(&self.lattice, &other.lattice)
            && self.free == other.free
            && self.torsion == other.torsion
    }
}

impl Eq for DivClass {}

impl NsLattice {
    /// Builds a class in this lattice, validating component lengths.
    /// Torsion bits are reduced mod 2.
    pub fn class(
        self: &Arc<Self>,
        free: Vec<Rat>,
        torsion: Vec<u8>,
    ) -> Result<DivClass, LatticeError> {
        if free.len() != self.rank() {
            return Err(LatticeError::FreeLength {
                expected: self.rank(),
                got: free.len(),
            });
        }
        if torsion.len() != self.torsion_rank() {
            return Err(LatticeError::TorsionLength {
                expected: self.torsion_rank(),
                got: torsion.len(),
            });
        }
        Ok(DivClass {
            lattice: Arc::clone(self),
            free,
            torsion: torsion.into_iter().map(|b| b % 2).collect(),
        })
    }

    /// The class with free part `free` and zero torsion.
    pub fn free_class(self: &Arc<Self>, free: Vec<Rat>) -> Result<DivClass, LatticeError> {
        let t = vec![0; self.torsion_rank()];
        self.class(free, t)
    }

    /// The zero class.
    pub fn zero_class(self: &Arc<Self>) -> DivClass {
        DivClass {
            lattice: Arc::clone(self),
            free: vec![Rat::zero(); self.rank()],
            torsion: vec![0; self.torsion_rank()],
        }
    }

    /// The `i`-th basis class.
    pub fn basis_class(self: &Arc<Self>, i: usize) -> DivClass {
        assert!(i < self.rank(), "basis index out of range");
        let mut free = vec![Rat::zero(); self.rank()];
        free[i] = Rat::one();
        DivClass {
            lattice: Arc::clone(self),
            free,
            torsion: vec![0; self.torsion_rank()],
        }
    }

    /// The unique free class `v` with `pair(v, basisᵢ) = pairings[i]` for
    /// every `i`; requires an invertible Gram matrix.
    pub fn class_from_intersections(
        self: &Arc<Self>,
        pairings: &[Rat],
    ) -> Result<DivClass, LatticeError> {
        if pairings.len() != self.rank() {
            return Err(LatticeError::FreeLength {
                expected: self.rank(),
                got: pairings.len(),
            });
        }
        let free = self.gram.solve(pairings).map_err(|e| match e {
            LinalgError::Singular => LatticeError::SingularGram,
            other => LatticeError::Linalg(other),
        })?;
        self.free_class(free)
    }
}

impl DivClass {
    pub fn lattice(&self) -> &Arc<NsLattice> {
        &self.lattice
    }

    pub fn free(&self) -> &[Rat] {
        &self.free
    }

    pub fn torsion(&self) -> &[u8] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Rat::is_zero) && self.torsion.iter().all(|&b| b == 0)
    }

    /// Intersection pairing `selfᵀ · Gram · other`. Torsion is numerically
    /// trivial and does not contribute.
    pub fn pair(&self, other: &DivClass) -> Result<Rat, LatticeError> {
        if !same_lattice(&self.lattice, &other.lattice) {
            return Err(LatticeError::LatticeMismatch);
        }
        let gv = self.lattice.gram.mul_vec(&other.free)?;
        Ok(dot(&self.free, &gv))
    }

    /// Self-intersection `pair(self, self)`.
    pub fn self_int(&self) -> Rat {
        self.pair(self).expect("a class always pairs with itself")
    }

    /// Sum of classes: free parts add, torsion bits add mod 2 (XOR).
    pub fn add(&self, other: &DivClass) -> Result<DivClass, LatticeError> {
        if !same_lattice(&self.lattice, &other.lattice) {
            return Err(LatticeError::LatticeMismatch);
        }
        Ok(DivClass {
            lattice: Arc::clone(&self.lattice),
            free: self
                .free
                .iter()
                .zip(&other.free)
                .map(|(a, b)| a + b)
                .collect(),
            torsion: self
                .torsion
                .iter()
                .zip(&other.torsion)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &DivClass) -> Result<DivClass, LatticeError> {
        self.add(&other.neg())
    }

    /// Negation; torsion bits are their own inverses.
    pub fn neg(&self) -> DivClass {
        DivClass {
            lattice: Arc::clone(&self.lattice),
            free: self.free.iter().map(|a| -a.clone()).collect(),
            torsion: self.torsion.clone(),
        }
    }

    /// Scalar multiple. A class with nonzero torsion can only be scaled by
    /// an integer (the torsion bit is multiplied by the integer's parity).
    pub fn scale(&self, c: &Rat) -> Result<DivClass, LatticeError> {
        let has_torsion = self.torsion.iter().any(|&b| b != 0);
        let torsion = if has_torsion {
            if !c.is_integer() {
                return Err(LatticeError::NonIntegerTorsionScale(rat_string(c)));
            }
            let even = (c.numer() % &crate::Int::from(2)).is_zero();
            let bit = if even { 0u8 } else { 1u8 };
            self.torsion.iter().map(|b| b & bit).collect()
        } else {
            self.torsion.clone()
        };
        Ok(DivClass {
            lattice: Arc::clone(&self.lattice),
            free: self.free.iter().map(|a| a * c).collect(),
            torsion,
        })
    }

    /// JSON rendering: lattice name, exact rational coordinates, torsion bits.
    pub fn to_json(&self) -> Value {
        json!({
            "lattice": self.lattice.name(),
            "free": self.free.iter().map(|r| rat_string(r)).collect::<Vec<_>>(),
            "torsion": self.torsion,
        })
    }
}

/// A degree-2 cover `f: source_surface → target_surface` between surfaces of
/// equal Picard rank, described by its pullback matrix on divisor classes.
///
/// The pushforward is never stored independently: it is derived as
/// `2 · pullback⁻¹`, which is forced by the projection formula
/// `f_* ∘ f* = 2 · id`. Construction verifies the pairing-doubling law
/// `⟨f*x, f*y⟩_source = 2 · ⟨x, y⟩_target` on all basis pairs.
#[derive(Debug, Clone)]
pub struct DoubleCoverMap {
    source: Arc<NsLattice>,
    target: Arc<NsLattice>,
    pullback: RatMatrix,
    pushforward: RatMatrix,
}

impl DoubleCoverMap {
    pub fn new(
        source: Arc<NsLattice>,
        target: Arc<NsLattice>,
        pullback: RatMatrix,
    ) -> Result<Self, LatticeError> {
        if pullback.rows() != source.rank() || pullback.cols() != target.rank() {
            return Err(LatticeError::CoverIncompatible(format!(
                "pullback matrix is {}x{}, expected {}x{}",
                pullback.rows(),
                pullback.cols(),
                source.rank(),
                target.rank()
            )));
        }
        if source.rank() != target.rank() {
            return Err(LatticeError::CoverIncompatible(
                "cover calculus requires equal source and target ranks".into(),
            ));
        }
        // Pairing doubling: Pᵀ · G_source · P = 2 · G_target.
        let lhs = pullback.transpose().mul(&source.gram().mul(&pullback)?)?;
        let rhs = target.gram().scale(&(Rat::one() + Rat::one()));
        if lhs != rhs {
            return Err(LatticeError::CoverIncompatible(
                "pullback does not double the intersection pairing".into(),
            ));
        }
        let inv = pullback.inverse().map_err(|_| {
            LatticeError::CoverIncompatible("pullback matrix is not invertible".into())
        })?;
        let pushforward = inv.scale(&(Rat::one() + Rat::one()));
        Ok(DoubleCoverMap {
            source,
            target,
            pullback,
            pushforward,
        })
    }

    pub fn source(&self) -> &Arc<NsLattice> {
        &self.source
    }

    pub fn target(&self) -> &Arc<NsLattice> {
        &self.target
    }

    pub fn degree(&self) -> u32 {
        2
    }

    pub fn pullback_matrix(&self) -> &RatMatrix {
        &self.pullback
    }

    pub fn pushforward_matrix(&self) -> &RatMatrix {
        &self.pushforward
    }

    /// Pulls a class back from the target lattice to the source lattice.
    /// Torsion is not transported (set to zero upstairs).
    pub fn pullback(&self, x: &DivClass) -> Result<DivClass, LatticeError> {
        if !same_lattice(&x.lattice, &self.target) {
            return Err(LatticeError::LatticeMismatch);
        }
        let free = self.pullback.mul_vec(&x.free)?;
        self.source.free_class(free)
    }

    /// Pushes a class forward from the source lattice to the target lattice.
    /// Torsion is not transported (set to zero downstairs).
    pub fn pushforward(&self, x: &DivClass) -> Result<DivClass, LatticeError> {
        if !same_lattice(&x.lattice, &self.source) {
            return Err(LatticeError::LatticeMismatch);
        }
        let free = self.pushforward.mul_vec(&x.free)?;
        self.target.free_class(free)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::{rat, rint};

    fn small_lattice() -> Arc<NsLattice> {
        NsLattice::new(
            "test",
            vec!["a".into(), "b".into()],
            Matrix::from_rows(vec![vec![rint(0), rint(1)], vec![rint(1), rint(0)]]).unwrap(),
            vec!["t".into()],
        )
        .unwrap()
    }

    #[test]
    fn cross_lattice_arithmetic_is_rejected() {
        let l1 = small_lattice();
        let l2 = NsLattice::new(
            "other",
            vec!["a".into()],
            Matrix::from_rows(vec![vec![rint(-1)]]).unwrap(),
            vec![],
        )
        .unwrap();
        let x = l1.basis_class(0);
        let y = l2.basis_class(0);
        assert_eq!(x.pair(&y), Err(LatticeError::LatticeMismatch));
        assert_eq!(x.add(&y), Err(LatticeError::LatticeMismatch));
    }

    #[test]
    fn structurally_equal_lattices_are_interchangeable() {
        let l1 = small_lattice();
        let l2 = small_lattice();
        let x = l1.basis_class(0);
        let y = l2.basis_class(1);
        assert_eq!(x.pair(&y).unwrap(), rint(1));
    }

    #[test]
    fn torsion_bits_are_two_torsion() {
        let l = small_lattice();
        let t = l.class(vec![rint(0), rint(0)], vec![1]).unwrap();
        assert!(t.add(&t).unwrap().is_zero());
        assert_eq!(t.neg(), t);
        assert_eq!(
            t.scale(&rat(1, 2)),
            Err(LatticeError::NonIntegerTorsionScale("1/2".into()))
        );
        assert!(t.scale(&rint(2)).unwrap().is_zero());
    }

    #[test]
    fn intersection_solver_round_trips() {
        let l = small_lattice();
        let v = l.free_class(vec![rat(3, 2), rint(-1)]).unwrap();
        let pairings: Vec<Rat> = (0..2).map(|i| v.pair(&l.basis_class(i)).unwrap()).collect();
        assert_eq!(l.class_from_intersections(&pairings).unwrap(), v);
    }
}
