//! Objects of a backend: finitely supported multiplicity vectors over simples.

use super::backend::{Backend, Simple};
use crate::scalar::Real;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub struct Obj<S: Real> {
    pub backend: Backend<S>,
    pub mults: BTreeMap<Simple, usize>,
}

impl<S: Real> Obj<S> {
    pub fn zero(backend: &Backend<S>) -> Self {
        Obj {
            backend: backend.clone(),
            mults: BTreeMap::new(),
        }
    }

    pub fn simple(backend: &Backend<S>, s: Simple) -> Self {
        let mut mults = BTreeMap::new();
        mults.insert(s, 1);
        Obj {
            backend: backend.clone(),
            mults,
        }
    }

    pub fn from_mults(backend: &Backend<S>, mults: BTreeMap<Simple, usize>) -> Self {
        let mults = mults.into_iter().filter(|(_, m)| *m > 0).collect();
        Obj {
            backend: backend.clone(),
            mults,
        }
    }

    /// The monoidal unit object.
    pub fn unit(backend: &Backend<S>) -> Self {
        let mut mults = BTreeMap::new();
        for s in backend.unit_simples() {
            mults.insert(s, 1);
        }
        Obj {
            backend: backend.clone(),
            mults,
        }
    }

    pub fn mult(&self, s: &Simple) -> usize {
        self.mults.get(s).copied().unwrap_or(0)
    }

    pub fn total_dim_basis(&self) -> usize {
        self.mults.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// Conjugate object: relabels each simple by its dual, keeping copy order.
    pub fn conj(&self) -> Obj<S> {
        let mut mults = BTreeMap::new();
        for (s, &m) in &self.mults {
            mults.insert(self.backend.conj_simple(s), m);
        }
        Obj {
            backend: self.backend.clone(),
            mults,
        }
    }

    /// Basis of the fused tensor product, per product simple: ordered pairs
    /// ((s, p), (t, q)) enumerated lexicographically. This single convention
    /// fixes the meaning of every tensor-product matrix in the engine.
    pub fn tensor_basis(&self, other: &Obj<S>) -> BTreeMap<Simple, Vec<((Simple, usize), (Simple, usize))>> {
        assert!(
            self.backend == other.backend,
            "tensor across distinct backends"
        );
        let mut out: BTreeMap<Simple, Vec<((Simple, usize), (Simple, usize))>> = BTreeMap::new();
        for (s, &ms) in &self.mults {
            for p in 0..ms {
                for (t, &mt) in &other.mults {
                    if let Some(u) = self.backend.fuse(s, t) {
                        for q in 0..mt {
                            out.entry(u.clone())
                                .or_default()
                                .push(((s.clone(), p), (t.clone(), q)));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn tensor(&self, other: &Obj<S>) -> Obj<S> {
        let basis = self.tensor_basis(other);
        let mults = basis.into_iter().map(|(u, v)| (u, v.len())).collect();
        Obj {
            backend: self.backend.clone(),
            mults,
        }
    }

    pub fn tensor_pow(&self, n: usize) -> Obj<S> {
        let mut out = Obj::unit(&self.backend);
        for _ in 0..n {
            out = out.tensor(self);
        }
        out
    }

    pub fn direct_sum(&self, other: &Obj<S>) -> Obj<S> {
        assert!(self.backend == other.backend);
        let mut mults = self.mults.clone();
        for (s, m) in &other.mults {
            *mults.entry(s.clone()).or_insert(0) += m;
        }
        Obj {
            backend: self.backend.clone(),
            mults,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_tensor_is_group_law() {
        let b = Backend::<f64>::svect();
        let g = Obj::simple(&b, Simple::Grp(vec![1]));
        let gg = g.tensor(&g);
        assert_eq!(gg.mult(&Simple::Grp(vec![0])), 1);
        assert_eq!(gg.mult(&Simple::Grp(vec![1])), 0);
    }

    #[test]
    fn matrix_unit_fusion() {
        let b = Backend::matrix_cat(vec![0.5, 0.5]).unwrap();
        let a = Obj::simple(&b, Simple::Mat(0, 1));
        let c = Obj::simple(&b, Simple::Mat(1, 0));
        let ac = a.tensor(&c);
        assert_eq!(ac.mult(&Simple::Mat(0, 0)), 1);
        assert_eq!(ac.total_dim_basis(), 1);
        // unit object is not simple for r = 2
        let unit = Obj::unit(&b);
        assert_eq!(unit.total_dim_basis(), 2);
        assert_eq!(unit.tensor(&a), a);
    }

    #[test]
    fn unit_is_strict() {
        let b = Backend::<f64>::svect();
        let g = Obj::simple(&b, Simple::Grp(vec![1]));
        let u = Obj::unit(&b);
        assert_eq!(u.tensor(&g), g);
        assert_eq!(g.tensor(&u), g);
    }
}
