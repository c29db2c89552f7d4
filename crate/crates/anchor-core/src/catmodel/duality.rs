//! Unitary dual functor data, braiding, twist, traces, and states.

use super::backend::{Backend, Simple};
use super::mor::Mor;
use super::obj::Obj;
use super::seg::{Chain, Leg, Seg};
use crate::error::{AnchorError, Result};
use crate::linalg;
use crate::scalar::{Cx, Real};
use std::collections::BTreeMap;

/// Evaluation `ev_a : ā ⊗ a → 1`, pairing the p-th copy of each simple with
/// the p-th copy of its conjugate, scaled by the backend's ev coefficient.
pub fn ev<S: Real>(a: &Obj<S>) -> Mor<S> {
    let backend = &a.backend;
    let ca = a.conj();
    let src = ca.tensor(a);
    let tgt = Obj::unit(backend);
    let basis = ca.tensor_basis(a);
    let mut blocks = BTreeMap::new();
    for (u, cols) in &basis {
        if tgt.mult(u) == 0 {
            continue;
        }
        let mut mat = linalg::zeros::<S>(1, cols.len());
        let mut nonzero = false;
        for (ci, ((t1, p), (t2, q))) in cols.iter().enumerate() {
            if *t1 == backend.conj_simple(t2) && p == q {
                mat[(0, ci)] = Cx::new(backend.ev_coeff(t2), S::zero());
                nonzero = true;
            }
        }
        if nonzero {
            blocks.insert(u.clone(), mat);
        }
    }
    Mor::from_blocks(&src, &tgt, blocks)
}

/// Coevaluation `coev_a : 1 → a ⊗ ā`.
pub fn coev<S: Real>(a: &Obj<S>) -> Mor<S> {
    let backend = &a.backend;
    let ca = a.conj();
    let tgt = a.tensor(&ca);
    let src = Obj::unit(backend);
    let basis = a.tensor_basis(&ca);
    let mut blocks = BTreeMap::new();
    for (u, rows) in &basis {
        if src.mult(u) == 0 {
            continue;
        }
        let mut mat = linalg::zeros::<S>(rows.len(), 1);
        let mut nonzero = false;
        for (ri, ((t1, p), (t2, q))) in rows.iter().enumerate() {
            if *t2 == backend.conj_simple(t1) && p == q {
                mat[(ri, 0)] = Cx::new(backend.coev_coeff(t1), S::zero());
                nonzero = true;
            }
        }
        if nonzero {
            blocks.insert(u.clone(), mat);
        }
    }
    Mor::from_blocks(&src, &tgt, blocks)
}

/// Unitary braiding `β_{a,b} : a ⊗ b → b ⊗ a` (bicharacter-weighted swap).
pub fn braiding<S: Real>(a: &Obj<S>, b: &Obj<S>) -> Result<Mor<S>> {
    let backend = &a.backend;
    if !backend.is_braided() {
        return Err(AnchorError::NotBraided);
    }
    let src = a.tensor(b);
    let tgt = b.tensor(a);
    let src_basis = a.tensor_basis(b);
    let tgt_basis = b.tensor_basis(a);
    let mut blocks = BTreeMap::new();
    for (u, cols) in &src_basis {
        let rows = match tgt_basis.get(u) {
            Some(r) => r,
            None => continue,
        };
        let index: BTreeMap<((Simple, usize), (Simple, usize)), usize> =
            rows.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let mut mat = linalg::zeros::<S>(rows.len(), cols.len());
        for (ci, ((s, p), (t, q))) in cols.iter().enumerate() {
            let ri = *index
                .get(&((t.clone(), *q), (s.clone(), *p)))
                .expect("swap lands in tensor basis");
            mat[(ri, ci)] = backend.braid_coeff(s, t)?;
        }
        blocks.insert(u.clone(), mat);
    }
    Ok(Mor::from_blocks(&src, &tgt, blocks))
}

/// Inverse braiding `β^{-1}_{a,b} : b ⊗ a → a ⊗ b`.
pub fn braiding_inv<S: Real>(a: &Obj<S>, b: &Obj<S>) -> Result<Mor<S>> {
    Ok(braiding(a, b)?.dagger())
}

/// Twist `θ_a = (id ⊗ coev†) ∘ (β_{a,a} ⊗ id) ∘ (id ⊗ coev)`.
pub fn twist<S: Real>(a: &Obj<S>) -> Result<Mor<S>> {
    let backend = &a.backend;
    if !backend.is_braided() {
        return Err(AnchorError::NotBraided);
    }
    let ca = a.conj();
    let sa = || Seg::atom(a.clone());
    let sca = || Seg::atom(ca.clone());
    let cv = coev(a);
    let chain = Chain::start(sa())
        .then(vec![
            Leg::id(sa()),
            Leg::new(cv.clone(), Seg::empty(backend), Seg::pair(sa(), sca())),
        ])?
        .then(vec![
            Leg::new(braiding(a, a)?, Seg::pair(sa(), sa()), Seg::pair(sa(), sa())),
            Leg::id(sca()),
        ])?
        .then(vec![
            Leg::id(sa()),
            Leg::new(cv.dagger(), Seg::pair(sa(), sca()), Seg::empty(backend)),
        ])?;
    chain.finish(&sa())
}

/// Conjugation coherence `ν_{a,b} : ā ⊗ b̄ → conj(b ⊗ a)`.
///
/// Computed directly: on basis pairs it reverses the factors, conjugates the
/// label, and scales by `ev_a · ev_b · coev_{b⊗a}` coefficients (the
/// contraction of the defining ev/coev composite).
pub fn nu<S: Real>(a: &Obj<S>, b: &Obj<S>) -> Result<Mor<S>> {
    let backend = &a.backend;
    let ca = a.conj();
    let cb = b.conj();
    let ba = b.tensor(a);
    let cba = ba.conj();
    let src_basis = ca.tensor_basis(&cb);
    // target basis: conj(b⊗a) at simple ū lists the (b,a)-pairs of u in order
    let tgt_pairs = b.tensor_basis(a);
    let mut blocks = BTreeMap::new();
    for (u_src, cols) in &src_basis {
        // u_src is a simple of ā⊗b̄; the matching target block label equals it
        let u_ba = backend.conj_simple(u_src);
        let rows = match tgt_pairs.get(&u_ba) {
            Some(r) => r,
            None => continue,
        };
        let index: BTreeMap<((Simple, usize), (Simple, usize)), usize> =
            rows.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let mut mat = linalg::zeros::<S>(rows.len(), cols.len());
        for (ci, ((sa_bar, p), (tb_bar, q))) in cols.iter().enumerate() {
            let s = backend.conj_simple(sa_bar);
            let t = backend.conj_simple(tb_bar);
            if let Some(st) = backend.fuse(&t, &s) {
                let ri = *index
                    .get(&((t.clone(), *q), (s.clone(), *p)))
                    .expect("reversed pair lands in (b,a) basis");
                let coeff =
                    backend.ev_coeff(&s) * backend.ev_coeff(&t) * backend.coev_coeff(&st);
                mat[(ri, ci)] = Cx::new(coeff, S::zero());
            }
        }
        blocks.insert(u_src.clone(), mat);
    }
    Ok(Mor::from_blocks(&ca.tensor(&cb), &cba, blocks))
}

/// Reference implementation of `ν` as the ev/coev composite (test oracle;
/// builds a five-factor intermediate, so keep the objects small).
#[doc(hidden)]
pub fn nu_composite<S: Real>(a: &Obj<S>, b: &Obj<S>) -> Result<Mor<S>> {
    let backend = &a.backend;
    let ca = a.conj();
    let cb = b.conj();
    let ba = b.tensor(a);
    let cba = ba.conj();
    let s_ca = || Seg::atom(ca.clone());
    let s_cb = || Seg::atom(cb.clone());
    let s_a = || Seg::atom(a.clone());
    let s_b = || Seg::atom(b.clone());
    let s_cba = || Seg::atom(cba.clone());
    let chain = Chain::start(Seg::pair(s_ca(), s_cb()))
        .then(vec![
            Leg::id(s_ca()),
            Leg::id(s_cb()),
            Leg::new(
                coev(&ba),
                Seg::empty(backend),
                Seg::pair(Seg::pair(s_b(), s_a()), s_cba()),
            ),
        ])?
        .then(vec![
            Leg::id(s_ca()),
            Leg::new(ev(b), Seg::pair(s_cb(), s_b()), Seg::empty(backend)),
            Leg::id(s_a()),
            Leg::id(s_cba()),
        ])?
        .then(vec![
            Leg::new(ev(a), Seg::pair(s_ca(), s_a()), Seg::empty(backend)),
            Leg::id(s_cba()),
        ])?;
    chain.finish(&s_cba())
}

/// Canonical unitary pivotal structure `φ_a = (coev_a† ⊗ 1) ∘ (1 ⊗ coev_{ā})`,
/// an endomorphism of `a` under the strict identification `conj(conj(a)) = a`.
pub fn pivotal_phi<S: Real>(a: &Obj<S>) -> Result<Mor<S>> {
    let backend = &a.backend;
    let ca = a.conj();
    let s_a = || Seg::atom(a.clone());
    let s_ca = || Seg::atom(ca.clone());
    let chain = Chain::start(s_a())
        .then(vec![
            Leg::id(s_a()),
            Leg::new(
                coev(&ca),
                Seg::empty(backend),
                Seg::pair(s_ca(), s_a()),
            ),
        ])?
        .then(vec![
            Leg::new(coev(a).dagger(), Seg::pair(s_a(), s_ca()), Seg::empty(backend)),
            Leg::id(s_a()),
        ])?;
    chain.finish(&s_a())
}

/// Left trace `tr_L(f) = coev† ∘ (f ⊗ id_ā) ∘ coev`, an End(1) element.
pub fn tr_l<S: Real>(f: &Mor<S>) -> Result<Mor<S>> {
    if !f.is_endo() {
        return Err(AnchorError::ShapeMismatch("trace of a non-endomorphism".into()));
    }
    let a = &f.source;
    let cv = coev(a);
    cv.dagger().compose(&f.tensor(&Mor::identity(&a.conj())).compose(&cv)?)
}

/// Right trace `tr_R(f) = ev ∘ (id_ā ⊗ f) ∘ ev†`.
pub fn tr_r<S: Real>(f: &Mor<S>) -> Result<Mor<S>> {
    if !f.is_endo() {
        return Err(AnchorError::ShapeMismatch("trace of a non-endomorphism".into()));
    }
    let a = &f.source;
    let e = ev(a);
    e.compose(&Mor::identity(&a.conj()).tensor(f).compose(&e.dagger())?)
}

/// Apply the backend state to an End(1) element.
pub fn state_of_end1<S: Real>(f: &Mor<S>) -> Cx<S> {
    let backend = &f.source.backend;
    let mut out = crate::scalar::zero::<S>();
    for (s, b) in &f.blocks {
        out += b[(0, 0)] * Cx::new(backend.state_weight(s), S::zero());
    }
    out
}

/// Unitary trace `Tr(f) = ψ(tr_L(f)) = ψ(tr_R(f))`, computed directly from
/// the loop weights.
pub fn unitary_trace<S: Real>(f: &Mor<S>) -> Result<Cx<S>> {
    if !f.is_endo() {
        return Err(AnchorError::ShapeMismatch("trace of a non-endomorphism".into()));
    }
    let backend = &f.source.backend;
    let mut out = crate::scalar::zero::<S>();
    for (s, b) in &f.blocks {
        let mut t = crate::scalar::zero::<S>();
        for k in 0..b.nrows() {
            t += b[(k, k)];
        }
        out += t * Cx::new(backend.trace_weight(s), S::zero());
    }
    Ok(out)
}

/// Quantum dimension of an object under the unitary trace.
pub fn dim_obj<S: Real>(a: &Obj<S>) -> S {
    let mut d = S::zero();
    for (s, &m) in &a.mults {
        d += a.backend.trace_weight(s) * S::from_usize(m).unwrap();
    }
    d
}

/// Positive-definite inner product `⟨f, g⟩ = Tr(g† ∘ f)` on parallel morphisms.
pub fn inner_product<S: Real>(f: &Mor<S>, g: &Mor<S>) -> Result<Cx<S>> {
    if f.source != g.source || f.target != g.target {
        return Err(AnchorError::ShapeMismatch("inner product needs parallel morphisms".into()));
    }
    unitary_trace(&g.dagger().compose(f)?)
}

/// Unique spherical state for the backend's dual functor, as weights on the
/// unit summands, or `None` if the loop data does not factor consistently.
pub fn spherical_state_solve<S: Real>(backend: &Backend<S>) -> Option<Vec<S>> {
    match backend {
        Backend::HilbFd => Some(vec![S::one()]),
        // For finite G the only homomorphism G → R_{>0} is trivial, so the
        // balanced dual functor and the unique state on the 1-dim End(1).
        Backend::GroupPointed { .. } => Some(vec![S::one()]),
        Backend::MatrixCat { r, .. } => {
            // Recover pi_{ij} from the loop values of the simples (i, j):
            // right loop = ev ∘ ev† = pi^{1/2}.
            let mut pi = vec![vec![S::one(); *r]; *r];
            for i in 0..*r {
                for j in 0..*r {
                    let s = Simple::Mat(i, j);
                    let a = Obj::simple(backend, s);
                    let e = ev(&a);
                    let loop_r = e.compose(&e.dagger()).ok()?;
                    // lands on the unit summand (j, j)
                    let val = loop_r.block(&Simple::Mat(j, j))[(0, 0)].re;
                    pi[i][j] = val * val;
                }
            }
            // groupoid consistency: pi_ij * pi_jk = pi_ik
            let tol = S::lit(1e-9);
            for i in 0..*r {
                for j in 0..*r {
                    for k in 0..*r {
                        if (pi[i][j] * pi[j][k] - pi[i][k]).abs() > tol {
                            return None;
                        }
                    }
                }
            }
            let total: S = (0..*r).fold(S::zero(), |acc, j| acc + pi[j][0]);
            Some((0..*r).map(|i| pi[i][0] / total).collect())
        }
    }
}
