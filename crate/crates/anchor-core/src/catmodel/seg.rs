//! Tensor-leg bookkeeping.
//!
//! Nested binary tensor products of multi-simple objects do not share basis
//! order across different bracketings, so every multi-stage diagram formula
//! tracks the bracketing of its legs with a `Seg` tree and re-associates
//! explicitly between stages. `Chain` composes stages, inserting the
//! re-association permutation whenever adjacent stages present the same
//! atoms with different bracketing.

use super::backend::Simple;
use super::mor::Mor;
use super::obj::Obj;
use crate::error::{AnchorError, Result};
use crate::linalg;
use crate::scalar::Real;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub enum Seg<S: Real> {
    /// The unit object (no atoms).
    Empty(Obj<S>),
    /// An object whose own standard basis is used as-is.
    Atom(Obj<S>),
    /// A binary tensor product in the canonical pair enumeration.
    Pair(Box<Seg<S>>, Box<Seg<S>>),
}

pub type Tuples = BTreeMap<Simple, Vec<Vec<(Simple, usize)>>>;

impl<S: Real> Seg<S> {
    pub fn empty(backend: &super::backend::Backend<S>) -> Self {
        Seg::Empty(Obj::unit(backend))
    }

    pub fn atom(obj: Obj<S>) -> Self {
        Seg::Atom(obj)
    }

    pub fn pair(a: Seg<S>, b: Seg<S>) -> Self {
        Seg::Pair(Box::new(a), Box::new(b))
    }

    /// Left-nested fold of a list of segments.
    pub fn fold(segs: Vec<Seg<S>>) -> Seg<S> {
        let mut it = segs.into_iter();
        let first = it.next().expect("Seg::fold needs at least one segment");
        it.fold(first, Seg::pair)
    }

    pub fn obj(&self) -> Obj<S> {
        match self {
            Seg::Empty(u) => u.clone(),
            Seg::Atom(o) => o.clone(),
            Seg::Pair(a, b) => a.obj().tensor(&b.obj()),
        }
    }

    pub fn atoms(&self) -> Vec<Obj<S>> {
        match self {
            Seg::Empty(_) => vec![],
            Seg::Atom(o) => vec![o.clone()],
            Seg::Pair(a, b) => {
                let mut v = a.atoms();
                v.extend(b.atoms());
                v
            }
        }
    }

    /// Basis enumeration: for each fused simple, the ordered list of flat
    /// tuples (one `(simple, copy)` entry per atom) in this bracketing's
    /// enumeration order. Matches `Obj::tensor_basis` exactly.
    pub fn tuples(&self) -> Tuples {
        match self {
            Seg::Empty(u) => {
                let mut out: Tuples = BTreeMap::new();
                for s in u.mults.keys() {
                    out.insert(s.clone(), vec![vec![]]);
                }
                out
            }
            Seg::Atom(o) => {
                let mut out: Tuples = BTreeMap::new();
                for (s, &m) in &o.mults {
                    out.insert(s.clone(), (0..m).map(|p| vec![(s.clone(), p)]).collect());
                }
                out
            }
            Seg::Pair(a, b) => {
                let backend = self.obj().backend;
                let la = a.tuples();
                let lb = b.tuples();
                let mut out: Tuples = BTreeMap::new();
                for (s, ta) in &la {
                    for tup_a in ta {
                        for (t, tb) in &lb {
                            if let Some(u) = backend.fuse(s, t) {
                                for tup_b in tb {
                                    let mut tup = tup_a.clone();
                                    tup.extend(tup_b.iter().cloned());
                                    out.entry(u.clone()).or_default().push(tup);
                                }
                            }
                        }
                    }
                }
                out
            }
        }
    }
}

/// Re-association isomorphism between two bracketings of the same atom list.
pub fn seg_iso<S: Real>(from: &Seg<S>, to: &Seg<S>) -> Result<Mor<S>> {
    let fa = from.atoms();
    let ta = to.atoms();
    if fa.len() != ta.len() || fa.iter().zip(ta.iter()).any(|(x, y)| x != y) {
        return Err(AnchorError::ShapeMismatch(format!(
            "seg_iso: atom lists differ ({} vs {} atoms)",
            fa.len(),
            ta.len()
        )));
    }
    let src = from.obj();
    let tgt = to.obj();
    let ft = from.tuples();
    let tt = to.tuples();
    let mut blocks = BTreeMap::new();
    for (u, from_list) in &ft {
        let to_list = tt.get(u).ok_or_else(|| {
            AnchorError::ShapeMismatch("seg_iso: fused support mismatch".into())
        })?;
        let index: BTreeMap<&Vec<(Simple, usize)>, usize> =
            to_list.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut mat = linalg::zeros::<S>(to_list.len(), from_list.len());
        for (col, tup) in from_list.iter().enumerate() {
            let row = *index.get(tup).ok_or_else(|| {
                AnchorError::ShapeMismatch("seg_iso: tuple missing in target enumeration".into())
            })?;
            mat[(row, col)] = crate::scalar::one::<S>();
        }
        blocks.insert(u.clone(), mat);
    }
    Ok(Mor::from_blocks(&src, &tgt, blocks))
}

/// One tensor factor of a stage: a morphism with declared source/target
/// bracketings.
#[derive(Debug, Clone)]
pub struct Leg<S: Real> {
    pub mor: Mor<S>,
    pub src: Seg<S>,
    pub tgt: Seg<S>,
}

impl<S: Real> Leg<S> {
    pub fn new(mor: Mor<S>, src: Seg<S>, tgt: Seg<S>) -> Self {
        debug_assert_eq!(mor.source, src.obj(), "leg source presentation mismatch");
        debug_assert_eq!(mor.target, tgt.obj(), "leg target presentation mismatch");
        Leg { mor, src, tgt }
    }

    pub fn id(seg: Seg<S>) -> Self {
        let mor = Mor::identity(&seg.obj());
        Leg {
            mor,
            src: seg.clone(),
            tgt: seg,
        }
    }
}

/// A running composite of tensor stages.
#[derive(Debug, Clone)]
pub struct Chain<S: Real> {
    mor: Mor<S>,
    seg: Seg<S>,
}

impl<S: Real> Chain<S> {
    pub fn start(seg: Seg<S>) -> Self {
        let mor = Mor::identity(&seg.obj());
        Chain { mor, seg }
    }

    pub fn current_seg(&self) -> &Seg<S> {
        &self.seg
    }

    /// Apply one stage: the legs' source segments (folded left) must carry
    /// the same atoms as the current segment.
    pub fn then(mut self, legs: Vec<Leg<S>>) -> Result<Chain<S>> {
        assert!(!legs.is_empty(), "stage needs at least one leg");
        let src_seg = Seg::fold(legs.iter().map(|l| l.src.clone()).collect());
        let tgt_seg = Seg::fold(legs.iter().map(|l| l.tgt.clone()).collect());
        let iso = seg_iso(&self.seg, &src_seg)?;
        let mut step = legs[0].mor.clone();
        for l in &legs[1..] {
            step = step.tensor(&l.mor);
        }
        self.mor = step.compose(&iso.compose(&self.mor)?)?;
        self.seg = tgt_seg;
        Ok(self)
    }

    /// Finish, re-associating into the requested final presentation.
    pub fn finish(self, final_seg: &Seg<S>) -> Result<Mor<S>> {
        let iso = seg_iso(&self.seg, final_seg)?;
        iso.compose(&self.mor)
    }

    /// Finish without re-associating (caller knows the presentation).
    pub fn into_mor(self) -> Mor<S> {
        self.mor
    }
}
