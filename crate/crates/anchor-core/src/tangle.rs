//! Anchored planar tangles as composable generator terms.
//!
//! Tangles are terms, not geometric embeddings: isotopy relations are
//! verified after evaluation, never decided syntactically.

use crate::error::{AnchorError, Result};
use std::fmt;

/// Type of a tangle: ordered input arities and the output arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleType {
    pub inputs: Vec<usize>,
    pub output: usize,
}

impl fmt::Display for TangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ins: Vec<String> = self.inputs.iter().map(|n| n.to_string()).collect();
        write!(f, "([{}];{})", ins.join(","), self.output)
    }
}

/// Generator tangles.
///
/// `Trac{i,j}` is the annular tangle of type `(i+j; j+i)` carrying the first
/// `i` strands around the back of the anchor line to the end; `TracInv` is
/// its inverse. `Cap{n,i}` contracts strands `i+1, i+2` of an `(n+2)`-box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Unit,
    Cap { n: usize, i: usize },
    Cup { n: usize, i: usize },
    Mult { i: usize, j: usize },
    Trac { i: usize, j: usize },
    TracInv { i: usize, j: usize },
    Id { n: usize },
}

impl Generator {
    pub fn tangle_type(&self) -> TangleType {
        match *self {
            Generator::Unit => TangleType { inputs: vec![], output: 0 },
            Generator::Cap { n, .. } => TangleType { inputs: vec![n + 2], output: n },
            Generator::Cup { n, .. } => TangleType { inputs: vec![n], output: n + 2 },
            Generator::Mult { i, j } => TangleType { inputs: vec![i, j], output: i + j },
            Generator::Trac { i, j } => TangleType { inputs: vec![i + j], output: j + i },
            Generator::TracInv { i, j } => TangleType { inputs: vec![j + i], output: i + j },
            Generator::Id { n } => TangleType { inputs: vec![n], output: n },
        }
    }

    pub fn valid(&self) -> bool {
        match *self {
            Generator::Cap { n, i } | Generator::Cup { n, i } => i <= n,
            _ => true,
        }
    }
}

/// A letter of the ribbon braid group acting on input positions (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RibbonLetter {
    /// Braid positions m, m+1.
    Sigma(usize),
    SigmaInv(usize),
    /// Twist position m.
    Theta(usize),
    ThetaInv(usize),
}

impl RibbonLetter {
    pub fn inverse(self) -> RibbonLetter {
        match self {
            RibbonLetter::Sigma(m) => RibbonLetter::SigmaInv(m),
            RibbonLetter::SigmaInv(m) => RibbonLetter::Sigma(m),
            RibbonLetter::Theta(m) => RibbonLetter::ThetaInv(m),
            RibbonLetter::ThetaInv(m) => RibbonLetter::Theta(m),
        }
    }
}

/// A term over the generator tangles, operadic composition, and ribbon-braid
/// moves on the input positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TangleExpr {
    Gen(Generator),
    /// `Compose(outer, slot, inner)`: plug `inner` into the 1-based `slot`.
    Compose(Box<TangleExpr>, usize, Box<TangleExpr>),
    /// Letters apply left to right: `RibbonMove(e, [l1, l2])` is
    /// `RibbonMove(RibbonMove(e, [l1]), [l2])`.
    RibbonMove(Box<TangleExpr>, Vec<RibbonLetter>),
}

impl TangleExpr {
    pub fn gen(g: Generator) -> TangleExpr {
        TangleExpr::Gen(g)
    }

    /// Type of the term, validating arities along the way.
    pub fn tangle_type(&self) -> Result<TangleType> {
        match self {
            TangleExpr::Gen(g) => {
                if !g.valid() {
                    return Err(AnchorError::BadSlot {
                        slot: 0,
                        inputs: 0,
                    });
                }
                Ok(g.tangle_type())
            }
            TangleExpr::Compose(outer, slot, inner) => {
                let to = outer.tangle_type()?;
                let ti = inner.tangle_type()?;
                if *slot == 0 || *slot > to.inputs.len() {
                    return Err(AnchorError::BadSlot {
                        slot: *slot,
                        inputs: to.inputs.len(),
                    });
                }
                if to.inputs[*slot - 1] != ti.output {
                    return Err(AnchorError::ArityMismatch {
                        expected: to.inputs[*slot - 1],
                        found: ti.output,
                    });
                }
                let mut inputs = Vec::with_capacity(to.inputs.len() + ti.inputs.len() - 1);
                inputs.extend_from_slice(&to.inputs[..*slot - 1]);
                inputs.extend_from_slice(&ti.inputs);
                inputs.extend_from_slice(&to.inputs[*slot..]);
                Ok(TangleType {
                    inputs,
                    output: to.output,
                })
            }
            TangleExpr::RibbonMove(e, word) => {
                let t = e.tangle_type()?;
                let mut inputs = t.inputs;
                for letter in word {
                    match *letter {
                        RibbonLetter::Sigma(m) | RibbonLetter::SigmaInv(m) => {
                            if m == 0 || m >= inputs.len() + 1 && true {
                                if m == 0 || m + 1 > inputs.len() {
                                    return Err(AnchorError::BadBraidLetter {
                                        pos: m,
                                        inputs: inputs.len(),
                                    });
                                }
                            }
                            if m + 1 > inputs.len() {
                                return Err(AnchorError::BadBraidLetter {
                                    pos: m,
                                    inputs: inputs.len(),
                                });
                            }
                            inputs.swap(m - 1, m);
                        }
                        RibbonLetter::Theta(m) | RibbonLetter::ThetaInv(m) => {
                            if m == 0 || m > inputs.len() {
                                return Err(AnchorError::BadBraidLetter {
                                    pos: m,
                                    inputs: inputs.len(),
                                });
                            }
                        }
                    }
                }
                Ok(TangleType {
                    inputs,
                    output: t.output,
                })
            }
        }
    }

    /// Operadic composition with arity checking.
    pub fn compose_at(self, slot: usize, inner: TangleExpr) -> Result<TangleExpr> {
        let e = TangleExpr::Compose(Box::new(self), slot, Box::new(inner));
        e.tangle_type()?;
        Ok(e)
    }

    /// Reflection: mirrors the tangle, reversing the input order.
    ///
    /// Generators map as `Cap{n,i} ↦ Cap{n,n−i}`, `Mult{i,j} ↦ Mult{j,i}`
    /// (slots swapped), `Trac{i,j} ↦ TracInv{i,j}`; ribbon words are mirrored
    /// letter by letter with inverses.
    pub fn reflect(&self) -> TangleExpr {
        match self {
            TangleExpr::Gen(g) => TangleExpr::Gen(match *g {
                Generator::Unit => Generator::Unit,
                Generator::Cap { n, i } => Generator::Cap { n, i: n - i },
                Generator::Cup { n, i } => Generator::Cup { n, i: n - i },
                Generator::Mult { i, j } => Generator::Mult { i: j, j: i },
                Generator::Trac { i, j } => Generator::TracInv { i, j },
                Generator::TracInv { i, j } => Generator::Trac { i, j },
                Generator::Id { n } => Generator::Id { n },
            }),
            TangleExpr::Compose(outer, slot, inner) => {
                let n_outer = outer
                    .tangle_type()
                    .map(|t| t.inputs.len())
                    .unwrap_or(0);
                TangleExpr::Compose(
                    Box::new(outer.reflect()),
                    n_outer + 1 - slot,
                    Box::new(inner.reflect()),
                )
            }
            TangleExpr::RibbonMove(e, word) => {
                let k = e.tangle_type().map(|t| t.inputs.len()).unwrap_or(0);
                let mirrored: Vec<RibbonLetter> = word
                    .iter()
                    .map(|l| match *l {
                        RibbonLetter::Sigma(m) => RibbonLetter::SigmaInv(k - m),
                        RibbonLetter::SigmaInv(m) => RibbonLetter::Sigma(k - m),
                        RibbonLetter::Theta(m) => RibbonLetter::ThetaInv(k + 1 - m),
                        RibbonLetter::ThetaInv(m) => RibbonLetter::Theta(k + 1 - m),
                    })
                    .collect();
                TangleExpr::RibbonMove(Box::new(e.reflect()), mirrored)
            }
        }
    }

    /// Canonical pretty-printed form, parseable by the CLI grammar.
    pub fn print(&self) -> String {
        match self {
            TangleExpr::Gen(g) => match *g {
                Generator::Unit => "unit".into(),
                Generator::Cap { n, i } => format!("cap({},{})", n, i),
                Generator::Cup { n, i } => format!("cup({},{})", n, i),
                Generator::Mult { i, j } => format!("mult({},{})", i, j),
                Generator::Trac { i, j } => format!("trac({},{})", i, j),
                Generator::TracInv { i, j } => format!("tracinv({},{})", i, j),
                Generator::Id { n } => format!("id({})", n),
            },
            TangleExpr::Compose(outer, slot, inner) => {
                let rhs = match **inner {
                    TangleExpr::Compose(..) => format!("({})", inner.print()),
                    _ => inner.print(),
                };
                format!("{} o{} {}", outer.print(), slot, rhs)
            }
            TangleExpr::RibbonMove(e, word) => {
                let letters: Vec<String> = word
                    .iter()
                    .map(|l| match *l {
                        RibbonLetter::Sigma(m) => format!("s{}", m),
                        RibbonLetter::SigmaInv(m) => format!("s{}'", m),
                        RibbonLetter::Theta(m) => format!("t{}", m),
                        RibbonLetter::ThetaInv(m) => format!("t{}'", m),
                    })
                    .collect();
                format!("braid({}, \"{}\")", e.print(), letters.join(" "))
            }
        }
    }
}

/// The one-click rotation annular tangle of type `(n; n)`.
///
/// `rotation(0)` degenerates to `Id{0}`.
pub fn rotation(n: usize) -> TangleExpr {
    if n == 0 {
        TangleExpr::Gen(Generator::Id { n: 0 })
    } else {
        TangleExpr::Gen(Generator::Trac { i: 1, j: n - 1 })
    }
}

/// The all-strand twist tangle on `P[n]`: the identity pattern whose anchor
/// line winds once around the inner box.
pub fn twist_tangle(n: usize) -> TangleExpr {
    TangleExpr::Gen(Generator::TracInv { i: n, j: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(x: Generator) -> TangleExpr {
        TangleExpr::Gen(x)
    }

    #[test]
    fn generator_types() {
        assert_eq!(
            g(Generator::Mult { i: 2, j: 3 }).tangle_type().unwrap(),
            TangleType { inputs: vec![2, 3], output: 5 }
        );
        assert_eq!(
            g(Generator::Unit).tangle_type().unwrap(),
            TangleType { inputs: vec![], output: 0 }
        );
        assert_eq!(
            g(Generator::Cap { n: 0, i: 0 }).tangle_type().unwrap(),
            TangleType { inputs: vec![2], output: 0 }
        );
    }

    #[test]
    fn compose_types_and_errors() {
        let e = g(Generator::Mult { i: 0, j: 4 })
            .compose_at(1, g(Generator::Unit))
            .unwrap();
        assert_eq!(e.tangle_type().unwrap(), TangleType { inputs: vec![4], output: 4 });

        let e2 = g(Generator::Cap { n: 0, i: 0 })
            .compose_at(1, g(Generator::Id { n: 2 }))
            .unwrap();
        assert_eq!(e2.tangle_type().unwrap(), TangleType { inputs: vec![2], output: 0 });

        let e3 = g(Generator::Mult { i: 2, j: 2 })
            .compose_at(
                2,
                g(Generator::Mult { i: 1, j: 1 })
                    .compose_at(1, g(Generator::Id { n: 1 }))
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(
            e3.tangle_type().unwrap(),
            TangleType { inputs: vec![2, 1, 1], output: 4 }
        );

        let bad = g(Generator::Mult { i: 1, j: 1 }).compose_at(1, g(Generator::Unit));
        assert!(matches!(
            bad,
            Err(AnchorError::ArityMismatch { expected: 1, found: 0 })
        ));

        let bad_slot = g(Generator::Id { n: 1 }).compose_at(3, g(Generator::Id { n: 1 }));
        assert!(matches!(bad_slot, Err(AnchorError::BadSlot { .. })));
    }

    #[test]
    fn ribbon_move_types() {
        let e = TangleExpr::RibbonMove(
            Box::new(g(Generator::Mult { i: 1, j: 3 })),
            vec![RibbonLetter::Sigma(1)],
        );
        assert_eq!(e.tangle_type().unwrap(), TangleType { inputs: vec![3, 1], output: 4 });

        let bad = TangleExpr::RibbonMove(
            Box::new(g(Generator::Mult { i: 1, j: 3 })),
            vec![RibbonLetter::Sigma(2)],
        );
        assert!(matches!(bad.tangle_type(), Err(AnchorError::BadBraidLetter { .. })));

        let theta = TangleExpr::RibbonMove(
            Box::new(g(Generator::Mult { i: 1, j: 3 })),
            vec![RibbonLetter::Theta(2)],
        );
        assert_eq!(theta.tangle_type().unwrap(), TangleType { inputs: vec![1, 3], output: 4 });
    }

    #[test]
    fn reflect_generators() {
        assert_eq!(
            g(Generator::Cap { n: 3, i: 1 }).reflect(),
            g(Generator::Cap { n: 3, i: 2 })
        );
        assert_eq!(
            g(Generator::Mult { i: 1, j: 2 }).reflect(),
            g(Generator::Mult { i: 2, j: 1 })
        );
        assert_eq!(
            g(Generator::Trac { i: 1, j: 2 }).reflect(),
            g(Generator::TracInv { i: 1, j: 2 })
        );
    }

    #[test]
    fn reflect_is_involution_and_reverses_inputs() {
        // a small deterministic pool of well-typed expressions
        let pool = sample_exprs();
        assert!(pool.len() >= 20);
        for e in pool {
            let t = e.tangle_type().unwrap();
            let r = e.reflect();
            let tr = r.tangle_type().unwrap();
            let mut rev = t.inputs.clone();
            rev.reverse();
            assert_eq!(tr.inputs, rev);
            assert_eq!(tr.output, t.output);
            assert_eq!(r.reflect(), e);
        }
    }

    pub fn sample_exprs() -> Vec<TangleExpr> {
        let mut pool = vec![];
        for n in 0..3 {
            pool.push(g(Generator::Id { n }));
        }
        for n in 0..3 {
            for i in 0..=n {
                pool.push(g(Generator::Cap { n, i }));
                pool.push(g(Generator::Cup { n, i }));
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                pool.push(g(Generator::Mult { i, j }));
                pool.push(g(Generator::Trac { i, j }));
            }
        }
        let mut composites = vec![];
        for a in &pool {
            for b in &pool {
                let ta = a.tangle_type().unwrap();
                for (k, arity) in ta.inputs.iter().enumerate() {
                    if b.tangle_type().unwrap().output == *arity && composites.len() < 15 {
                        composites.push(a.clone().compose_at(k + 1, b.clone()).unwrap());
                    }
                }
            }
        }
        pool.extend(composites);
        pool.push(TangleExpr::RibbonMove(
            Box::new(g(Generator::Mult { i: 1, j: 2 })),
            vec![RibbonLetter::Sigma(1), RibbonLetter::Theta(1)],
        ));
        pool
    }

    #[test]
    fn rotation_basics() {
        assert_eq!(rotation(2), g(Generator::Trac { i: 1, j: 1 }));
        assert_eq!(
            rotation(5).tangle_type().unwrap(),
            TangleType { inputs: vec![5], output: 5 }
        );
        assert_eq!(rotation(0), g(Generator::Id { n: 0 }));
    }

    #[test]
    fn print_forms() {
        let e = g(Generator::Mult { i: 0, j: 4 })
            .compose_at(1, g(Generator::Unit))
            .unwrap();
        assert_eq!(e.print(), "mult(0,4) o1 unit");
    }
}
