//! Concrete finite semisimple C* category backends.

use crate::error::{AnchorError, Result};
use crate::scalar::{cx, Cx, Real};

/// Label of a simple object in a backend.
///
/// Ordering of labels fixes every canonical basis enumeration in the engine.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Simple {
    /// The unique simple of `HilbFd`.
    Unit,
    /// Group element of a pointed category, componentwise mod the factors.
    Grp(Vec<u32>),
    /// Matrix-unit simple `(i, j)` of `M_r(Hilb)`, zero-based.
    Mat(usize, usize),
}

impl Simple {
    pub fn label(&self) -> String {
        match self {
            Simple::Unit => "1".to_string(),
            Simple::Grp(v) => {
                let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                format!("g{}", parts.join("."))
            }
            Simple::Mat(i, j) => format!("m{}.{}", i, j),
        }
    }

    pub fn parse_label(s: &str) -> Option<Simple> {
        if s == "1" {
            return Some(Simple::Unit);
        }
        if let Some(rest) = s.strip_prefix('g') {
            let v: Option<Vec<u32>> = rest.split('.').map(|p| p.parse().ok()).collect();
            return v.map(Simple::Grp);
        }
        if let Some(rest) = s.strip_prefix('m') {
            let mut it = rest.split('.');
            let i = it.next()?.parse().ok()?;
            let j = it.next()?.parse().ok()?;
            return Some(Simple::Mat(i, j));
        }
        None
    }
}

/// A concrete category backend.
#[derive(Debug, Clone, PartialEq)]
pub enum Backend<S: Real> {
    /// Finite dimensional Hilbert spaces: one simple label.
    HilbFd,
    /// Pointed category `Vect_G` for a finite abelian group with a
    /// bicharacter braiding. `q[s][t]` is the value on generators `e_s, e_t`.
    GroupPointed { factors: Vec<u32>, q: Vec<Vec<Cx<S>>> },
    /// Matrix multifusion `M_r(Hilb)` with state weights `psi` (positive,
    /// summing to 1). Simples are matrix units; the unit object is not simple
    /// for `r > 1`.
    MatrixCat { r: usize, psi: Vec<S> },
}

impl<S: Real> Backend<S> {
    pub fn hilb() -> Self {
        Backend::HilbFd
    }

    /// Pointed `Vect_G` with a bicharacter given on generators.
    pub fn group_pointed(factors: Vec<u32>, q: Vec<Vec<Cx<S>>>) -> Result<Self> {
        let n = factors.len();
        if q.len() != n || q.iter().any(|row| row.len() != n) {
            return Err(AnchorError::InvalidBackend(
                "bicharacter matrix shape must match the number of cyclic factors".into(),
            ));
        }
        if factors.iter().any(|&m| m == 0) {
            return Err(AnchorError::InvalidBackend("cyclic factors must be positive".into()));
        }
        let b = Backend::GroupPointed { factors, q };
        b.check_bicharacter()?;
        Ok(b)
    }

    /// Super vector spaces: Z/2 with q(g,g) = -1.
    pub fn svect() -> Self {
        Backend::GroupPointed {
            factors: vec![2],
            q: vec![vec![cx(-1.0, 0.0)]],
        }
    }

    pub fn matrix_cat(psi: Vec<S>) -> Result<Self> {
        let r = psi.len();
        if r == 0 {
            return Err(AnchorError::InvalidBackend("matrix backend needs r >= 1".into()));
        }
        if psi.iter().any(|w| *w <= S::zero()) {
            return Err(AnchorError::InvalidBackend("state weights must be positive".into()));
        }
        let sum: S = psi.iter().fold(S::zero(), |a, &b| a + b);
        if (sum - S::one()).abs() > S::lit(1e-6) {
            return Err(AnchorError::InvalidBackend("state weights must sum to 1".into()));
        }
        Ok(Backend::MatrixCat { r, psi })
    }

    fn check_bicharacter(&self) -> Result<()> {
        if let Backend::GroupPointed { factors, q } = self {
            for (s, &m) in factors.iter().enumerate() {
                for t in 0..factors.len() {
                    // q(e_s, e_t)^{m_s} = q(m_s e_s, e_t) = q(0, e_t) = 1.
                    let powed = q[s][t].powu(m);
                    let powed2 = q[t][s].powu(m);
                    let tol = S::lit(1e-9);
                    if crate::scalar::cabs(powed - cx::<S>(1.0, 0.0)) > tol
                        || crate::scalar::cabs(powed2 - cx::<S>(1.0, 0.0)) > tol
                        || (crate::scalar::cabs(q[s][t]) - S::one()).abs() > tol
                    {
                        return Err(AnchorError::InvalidBackend(
                            "q is not a unitary bicharacter for the given factors".into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// All simple labels, in canonical order.
    pub fn simples(&self) -> Vec<Simple> {
        match self {
            Backend::HilbFd => vec![Simple::Unit],
            Backend::GroupPointed { factors, .. } => {
                let mut out = vec![];
                let mut cur = vec![0u32; factors.len()];
                loop {
                    out.push(Simple::Grp(cur.clone()));
                    let mut k = factors.len();
                    loop {
                        if k == 0 {
                            out.sort();
                            return out;
                        }
                        k -= 1;
                        cur[k] += 1;
                        if cur[k] < factors[k] {
                            break;
                        }
                        cur[k] = 0;
                    }
                }
            }
            Backend::MatrixCat { r, .. } => {
                let mut out = vec![];
                for i in 0..*r {
                    for j in 0..*r {
                        out.push(Simple::Mat(i, j));
                    }
                }
                out
            }
        }
    }

    /// Fusion of simples; `None` means the tensor product is zero.
    pub fn fuse(&self, a: &Simple, b: &Simple) -> Option<Simple> {
        match (self, a, b) {
            (Backend::HilbFd, Simple::Unit, Simple::Unit) => Some(Simple::Unit),
            (Backend::GroupPointed { factors, .. }, Simple::Grp(x), Simple::Grp(y)) => {
                let v: Vec<u32> = x
                    .iter()
                    .zip(y.iter())
                    .zip(factors.iter())
                    .map(|((&p, &q), &m)| (p + q) % m)
                    .collect();
                Some(Simple::Grp(v))
            }
            (Backend::MatrixCat { .. }, Simple::Mat(i, j), Simple::Mat(k, l)) => {
                if j == k {
                    Some(Simple::Mat(*i, *l))
                } else {
                    None
                }
            }
            _ => panic!("simple label does not belong to this backend"),
        }
    }

    /// Conjugate (dual) simple label.
    pub fn conj_simple(&self, a: &Simple) -> Simple {
        match (self, a) {
            (Backend::HilbFd, Simple::Unit) => Simple::Unit,
            (Backend::GroupPointed { factors, .. }, Simple::Grp(x)) => {
                let v: Vec<u32> = x
                    .iter()
                    .zip(factors.iter())
                    .map(|(&p, &m)| (m - p % m) % m)
                    .collect();
                Simple::Grp(v)
            }
            (Backend::MatrixCat { .. }, Simple::Mat(i, j)) => Simple::Mat(*j, *i),
            _ => panic!("simple label does not belong to this backend"),
        }
    }

    /// Simples of the unit object with their multiplicities (always 1).
    pub fn unit_simples(&self) -> Vec<Simple> {
        match self {
            Backend::HilbFd => vec![Simple::Unit],
            Backend::GroupPointed { factors, .. } => vec![Simple::Grp(vec![0; factors.len()])],
            Backend::MatrixCat { r, .. } => (0..*r).map(|i| Simple::Mat(i, i)).collect(),
        }
    }

    pub fn is_braided(&self) -> bool {
        !matches!(self, Backend::MatrixCat { .. })
    }

    /// Bicharacter value on a pair of simples (braiding coefficient).
    pub fn braid_coeff(&self, a: &Simple, b: &Simple) -> Result<Cx<S>> {
        match (self, a, b) {
            (Backend::HilbFd, _, _) => Ok(cx(1.0, 0.0)),
            (Backend::GroupPointed { q, .. }, Simple::Grp(x), Simple::Grp(y)) => {
                let mut out = cx::<S>(1.0, 0.0);
                for (s, &xs) in x.iter().enumerate() {
                    for (t, &yt) in y.iter().enumerate() {
                        out *= q[s][t].powu(xs * yt);
                    }
                }
                Ok(out)
            }
            (Backend::MatrixCat { .. }, _, _) => Err(AnchorError::NotBraided),
            _ => panic!("simple label does not belong to this backend"),
        }
    }

    /// Evaluation coefficient: `ev_s : conj(s) ⊗ s → 1` scaled by this value.
    pub fn ev_coeff(&self, s: &Simple) -> S {
        match (self, s) {
            (Backend::MatrixCat { psi, .. }, Simple::Mat(i, j)) => {
                // pi_{ij}^{1/4} with pi_{ij} = psi_i / psi_j
                (psi[*i] / psi[*j]).sqrt().sqrt()
            }
            _ => S::one(),
        }
    }

    /// Coevaluation coefficient: `coev_s : 1 → s ⊗ conj(s)`; inverse of `ev_coeff`.
    pub fn coev_coeff(&self, s: &Simple) -> S {
        S::one() / self.ev_coeff(s)
    }

    /// Loop weight of a simple under the unitary trace (psi after tr_L = tr_R).
    pub fn trace_weight(&self, s: &Simple) -> S {
        match (self, s) {
            (Backend::MatrixCat { psi, .. }, Simple::Mat(i, j)) => (psi[*i] * psi[*j]).sqrt(),
            _ => S::one(),
        }
    }

    /// State weight of a unit-object summand (for MatrixCat, `psi_i` of `(i,i)`).
    pub fn state_weight(&self, s: &Simple) -> S {
        match (self, s) {
            (Backend::MatrixCat { psi, .. }, Simple::Mat(i, j)) => {
                debug_assert_eq!(i, j);
                psi[*i]
            }
            _ => S::one(),
        }
    }
}
