//! Morphisms: block matrices per simple label.

use super::backend::Simple;
use super::obj::Obj;
use crate::error::{AnchorError, Result};
use crate::linalg::{self, CMat};
use crate::scalar::{Cx, Real};
use rand::Rng;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct Mor<S: Real> {
    pub source: Obj<S>,
    pub target: Obj<S>,
    /// Block for each simple in the support of both source and target;
    /// shape (target mult × source mult). Absent blocks are zero.
    pub blocks: BTreeMap<Simple, CMat<S>>,
}

impl<S: Real> Mor<S> {
    pub fn zero(source: &Obj<S>, target: &Obj<S>) -> Self {
        Mor {
            source: source.clone(),
            target: target.clone(),
            blocks: BTreeMap::new(),
        }
    }

    pub fn identity(obj: &Obj<S>) -> Self {
        let mut blocks = BTreeMap::new();
        for (s, &m) in &obj.mults {
            blocks.insert(s.clone(), linalg::identity::<S>(m));
        }
        Mor {
            source: obj.clone(),
            target: obj.clone(),
            blocks,
        }
    }

    pub fn from_blocks(source: &Obj<S>, target: &Obj<S>, blocks: BTreeMap<Simple, CMat<S>>) -> Self {
        for (s, m) in &blocks {
            assert_eq!(
                m.shape(),
                (target.mult(s), source.mult(s)),
                "block shape mismatch at {:?}",
                s
            );
        }
        Mor {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }

    /// Scalar multiple of the identity on the unit object (an End(1) element
    /// with the same coefficient on every unit summand).
    pub fn unit_scalar(obj_unit: &Obj<S>, z: Cx<S>) -> Self {
        let mut m = Mor::identity(obj_unit);
        for b in m.blocks.values_mut() {
            *b *= z;
        }
        m
    }

    pub fn block(&self, s: &Simple) -> CMat<S> {
        match self.blocks.get(s) {
            Some(b) => b.clone(),
            None => linalg::zeros(self.target.mult(s), self.source.mult(s)),
        }
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    pub fn compose(&self, f: &Mor<S>) -> Result<Mor<S>> {
        if f.target != self.source {
            return Err(AnchorError::ShapeMismatch(format!(
                "compose: inner target {:?} != outer source {:?}",
                f.target.mults, self.source.mults
            )));
        }
        let mut blocks = BTreeMap::new();
        for (s, g) in &self.blocks {
            if let Some(h) = f.blocks.get(s) {
                let prod = g * h;
                if linalg::max_norm(&prod) > S::zero() {
                    blocks.insert(s.clone(), prod);
                }
            }
        }
        Ok(Mor {
            source: f.source.clone(),
            target: self.target.clone(),
            blocks,
        })
    }

    pub fn dagger(&self) -> Mor<S> {
        let blocks = self
            .blocks
            .iter()
            .map(|(s, m)| (s.clone(), linalg::dagger(m)))
            .collect();
        Mor {
            source: self.target.clone(),
            target: self.source.clone(),
            blocks,
        }
    }

    /// Conjugate morphism: `f̄ : ā → b̄`, with entrywise-conjugated blocks.
    pub fn conj(&self) -> Mor<S> {
        let backend = self.source.backend.clone();
        let blocks = self
            .blocks
            .iter()
            .map(|(s, m)| (backend.conj_simple(s), linalg::conj_entries(m)))
            .collect();
        Mor {
            source: self.source.conj(),
            target: self.target.conj(),
            blocks,
        }
    }

    pub fn scale(&self, z: Cx<S>) -> Mor<S> {
        let blocks = self.blocks.iter().map(|(s, m)| (s.clone(), m * z)).collect();
        Mor {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        }
    }

    pub fn add(&self, other: &Mor<S>) -> Result<Mor<S>> {
        if self.source != other.source || self.target != other.target {
            return Err(AnchorError::ShapeMismatch("add: parallel morphisms required".into()));
        }
        let mut blocks = self.blocks.clone();
        for (s, m) in &other.blocks {
            match blocks.get_mut(s) {
                Some(b) => *b += m,
                None => {
                    blocks.insert(s.clone(), m.clone());
                }
            }
        }
        Ok(Mor {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        })
    }

    pub fn sub(&self, other: &Mor<S>) -> Result<Mor<S>> {
        self.add(&other.scale(Cx::new(-S::one(), S::zero())))
    }

    pub fn max_norm(&self) -> S {
        let mut mx = S::zero();
        for b in self.blocks.values() {
            let n = linalg::max_norm(b);
            if n > mx {
                mx = n;
            }
        }
        mx
    }

    pub fn diff_norm(&self, other: &Mor<S>) -> S {
        if self.source != other.source || self.target != other.target {
            return S::max_value().unwrap_or_else(S::one);
        }
        let mut mx = S::zero();
        let keys: std::collections::BTreeSet<_> =
            self.blocks.keys().chain(other.blocks.keys()).cloned().collect();
        for s in keys {
            let n = linalg::diff_norm(&self.block(&s), &other.block(&s));
            if n > mx {
                mx = n;
            }
        }
        mx
    }

    /// Blockwise inverse (all square blocks).
    pub fn try_inverse(&self) -> Result<Mor<S>> {
        let mut blocks = BTreeMap::new();
        // every simple in the support of either end must be invertible
        for (s, &m) in &self.source.mults {
            if self.target.mult(s) != m {
                return Err(AnchorError::SingularMate);
            }
            let b = self.block(s);
            match linalg::try_inverse(&b) {
                Some(inv) => {
                    blocks.insert(s.clone(), inv);
                }
                None => return Err(AnchorError::SingularMate),
            }
        }
        for s in self.target.mults.keys() {
            if self.source.mult(s) != self.target.mult(s) {
                return Err(AnchorError::SingularMate);
            }
        }
        Ok(Mor {
            source: self.target.clone(),
            target: self.source.clone(),
            blocks,
        })
    }

    /// Standard inclusion of the `q`-th copy of simple `s` into `v`.
    pub fn inclusion(v: &Obj<S>, s: &Simple, q: usize) -> Mor<S> {
        let a = Obj::simple(&v.backend, s.clone());
        let mut col = linalg::zeros::<S>(v.mult(s), 1);
        col[(q, 0)] = Cx::new(S::one(), S::zero());
        let mut blocks = BTreeMap::new();
        blocks.insert(s.clone(), col);
        Mor {
            source: a,
            target: v.clone(),
            blocks,
        }
    }

    /// Tensor product of morphisms under the canonical pair enumeration.
    pub fn tensor(&self, other: &Mor<S>) -> Mor<S> {
        let src = self.source.tensor(&other.source);
        let tgt = self.target.tensor(&other.target);
        let src_basis = self.source.tensor_basis(&other.source);
        let tgt_basis = self.target.tensor_basis(&other.target);
        let mut blocks = BTreeMap::new();
        for (u, rows) in &tgt_basis {
            let cols = match src_basis.get(u) {
                Some(c) => c,
                None => continue,
            };
            // skip blocks whose every entry would come from an absent factor
            let feasible = rows.iter().any(|((s1, _), (t1, _))| {
                self.blocks.contains_key(s1) && other.blocks.contains_key(t1)
            });
            if !feasible {
                continue;
            }
            let mut mat = linalg::zeros::<S>(rows.len(), cols.len());
            let mut nonzero = false;
            for (ri, ((s1, p1), (t1, q1))) in rows.iter().enumerate() {
                let fb = match self.blocks.get(s1) {
                    Some(b) => b,
                    None => continue,
                };
                let gb = match other.blocks.get(t1) {
                    Some(b) => b,
                    None => continue,
                };
                for (ci, ((s0, p0), (t0, q0))) in cols.iter().enumerate() {
                    if s0 != s1 || t0 != t1 {
                        continue;
                    }
                    let v = fb[(*p1, *p0)] * gb[(*q1, *q0)];
                    if crate::scalar::cabs(v) > S::zero() {
                        mat[(ri, ci)] = v;
                        nonzero = true;
                    }
                }
            }
            if nonzero {
                blocks.insert(u.clone(), mat);
            }
        }
        Mor {
            source: src,
            target: tgt,
            blocks,
        }
    }

    /// Random morphism with standard-normal complex entries (for tests).
    pub fn random<R: Rng>(source: &Obj<S>, target: &Obj<S>, rng: &mut R) -> Mor<S> {
        let mut blocks = BTreeMap::new();
        for (s, &m) in &target.mults {
            let n = source.mult(s);
            if n == 0 {
                continue;
            }
            let mut mat = linalg::zeros::<S>(m, n);
            for i in 0..m {
                for j in 0..n {
                    let re: f64 = rng.sample(rand_distr_standard());
                    let im: f64 = rng.sample(rand_distr_standard());
                    mat[(i, j)] = Cx::new(S::lit(re), S::lit(im));
                }
            }
            blocks.insert(s.clone(), mat);
        }
        Mor {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }
}

fn rand_distr_standard() -> rand::distributions::Uniform<f64> {
    rand::distributions::Uniform::new(-1.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catmodel::backend::Backend;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tensor_of_identities_is_identity() {
        let b = Backend::matrix_cat(vec![0.25, 0.75]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..5 {
            let a = random_obj(&b, &mut rng);
            let c = random_obj(&b, &mut rng);
            let t = Mor::identity(&a).tensor(&Mor::identity(&c));
            assert!(t.diff_norm(&Mor::identity(&a.tensor(&c))) < 1e-12);
        }
    }

    #[test]
    fn tensor_interchange() {
        // (f∘f')⊗(g∘g') = (f⊗g)∘(f'⊗g')
        let b = Backend::<f64>::svect();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let a0 = random_obj(&b, &mut rng);
            let a1 = random_obj(&b, &mut rng);
            let a2 = random_obj(&b, &mut rng);
            let c0 = random_obj(&b, &mut rng);
            let c1 = random_obj(&b, &mut rng);
            let c2 = random_obj(&b, &mut rng);
            let fp = Mor::random(&a0, &a1, &mut rng);
            let f = Mor::random(&a1, &a2, &mut rng);
            let gp = Mor::random(&c0, &c1, &mut rng);
            let g = Mor::random(&c1, &c2, &mut rng);
            let lhs = f.compose(&fp).unwrap().tensor(&g.compose(&gp).unwrap());
            let rhs = f.tensor(&g).compose(&fp.tensor(&gp)).unwrap();
            assert!(lhs.diff_norm(&rhs) < 1e-10);
        }
    }

    pub fn random_obj<R: rand::Rng>(b: &Backend<f64>, rng: &mut R) -> Obj<f64> {
        let mut mults = std::collections::BTreeMap::new();
        for s in b.simples() {
            let m = rng.gen_range(0..3usize);
            if m > 0 {
                mults.insert(s, m);
            }
        }
        if mults.is_empty() {
            mults.insert(b.simples()[0].clone(), 1);
        }
        Obj::from_mults(b, mults)
    }
}
