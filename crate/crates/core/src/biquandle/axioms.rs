//! Exhaustive verification of the four biquandle axioms.
//!
//! Notation: `a^b = up(a, b)`, `a^{b-bar} = upbar(a, b)`, `a_b = low(a, b)`,
//! `a_{b-bar} = lowbar(a, b)`, and exponents/subscripts compose left to
//! right, so `a^{bc} = up(up(a, b), c)`.
//!
//! Axiom 1 (direct type II), for all `a, b`:
//!   1.1 `a = (a^b)^{bar(b_a)}`      1.2 `b = (b_a)_{bar(a^b)}`
//!   1.3 `a = (a^{bar b})^{b_{bar a}}`  1.4 `b = (b_{bar a})_{a^{bar b}}`
//!
//! Axiom 2 (reverse type II), for all `a, b` there is an `x` with
//!   `x = a^{b_{bar x}}`, `a = x^{bar b}`, `b = (b_{bar x})_a`
//! holding jointly, and a `y` with
//!   `y = a^{bar(b_y)}`, `a = y^b`, `b = (b_y)_{bar a}`.
//!
//! Axiom 3 (type III), for all `a, b, c`:
//!   3.1 `a^{bc} = a^{c_b b^c}`
//!   3.2 `c_{ba} = c_{a^b b_a}`
//!   3.3 `(b_a)^{c_{a^b}} = (b^c)_{a^{c_b}}`
//!   3.4 `a^{bar b bar c} = a^{bar(c_{bar b}) bar(b^{bar c})}`
//!   3.5 `c_{bar b bar a} = c_{bar(a^{bar b}) bar(b_{bar a})}`
//!   3.6 `(b_{bar a})^{bar(c_{bar(a^{bar b})})} = (b^{bar c})_{bar(a^{bar(c_{bar b})})}`
//!
//! 3.2 is the lower-strand equation obtained by expanding the Yang-Baxter
//! equation for the switch `S(a, b) = (b_a, a^b)`; 3.5 likewise for `S^{-1}`.
//!
//! Axiom 4 (type I), for every `a` there is an `x` with `x = a_x` and
//! `a = x^a`, and a `y` with `y = a^{bar y}` and `a = y_{bar a}`.

use std::fmt;

use super::FiniteBiquandle;

/// A failing instance: the violated equation and the carrier indices involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub equation: &'static str,
    pub elements: Vec<usize>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "equation {} at", self.equation)?;
        for (name, e) in ["a", "b", "c"].iter().zip(&self.elements) {
            write!(f, " {name}={e}")?;
        }
        Ok(())
    }
}

/// Outcome of checking axioms 1 through 4; `None` means the axiom holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axioms: [Option<Witness>; 4],
}

impl AxiomReport {
    /// `axiom` is 1-based.
    pub fn passed(&self, axiom: usize) -> bool {
        self.axioms[axiom - 1].is_none()
    }

    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(Option::is_none)
    }

    pub fn witness(&self, axiom: usize) -> Option<&Witness> {
        self.axioms[axiom - 1].as_ref()
    }
}

fn witness(equation: &'static str, elements: &[usize]) -> Option<Witness> {
    Some(Witness {
        equation,
        elements: elements.to_vec(),
    })
}

fn axiom1(q: &FiniteBiquandle) -> Option<Witness> {
    let n = q.size();
    for a in 0..n {
        for b in 0..n {
            let (ab, ba) = (q.up(a, b), q.low(b, a));
            if q.upbar(ab, ba) != a {
                return witness("1.1", &[a, b]);
            }
            if q.lowbar(ba, ab) != b {
                return witness("1.2", &[a, b]);
            }
            let (abar, bbar) = (q.upbar(a, b), q.lowbar(b, a));
            if q.up(abar, bbar) != a {
                return witness("1.3", &[a, b]);
            }
            if q.low(bbar, abar) != b {
                return witness("1.4", &[a, b]);
            }
        }
    }
    None
}

fn axiom2(q: &FiniteBiquandle) -> Option<Witness> {
    let n = q.size();
    for a in 0..n {
        for b in 0..n {
            let has_x = (0..n).any(|x| {
                let bx = q.lowbar(b, x);
                x == q.up(a, bx) && a == q.upbar(x, b) && b == q.low(bx, a)
            });
            if !has_x {
                return witness("2.x", &[a, b]);
            }
            let has_y = (0..n).any(|y| {
                let by = q.low(b, y);
                y == q.upbar(a, by) && a == q.up(y, b) && b == q.lowbar(by, a)
            });
            if !has_y {
                return witness("2.y", &[a, b]);
            }
        }
    }
    None
}

fn axiom3(q: &FiniteBiquandle) -> Option<Witness> {
    let n = q.size();
    for a in 0..n {
        for b in 0..n {
            let (ab, ba) = (q.up(a, b), q.low(b, a));
            let (abar, bbar) = (q.upbar(a, b), q.lowbar(b, a));
            for c in 0..n {
                let (cb, bc) = (q.low(c, b), q.up(b, c));
                if q.up(ab, c) != q.up(q.up(a, cb), bc) {
                    return witness("3.1", &[a, b, c]);
                }
                if q.low(q.low(c, b), a) != q.low(q.low(c, ab), ba) {
                    return witness("3.2", &[a, b, c]);
                }
                if q.up(ba, q.low(c, ab)) != q.low(bc, q.up(a, cb)) {
                    return witness("3.3", &[a, b, c]);
                }
                let (cbbar, bcbar) = (q.lowbar(c, b), q.upbar(b, c));
                if q.upbar(abar, c) != q.upbar(q.upbar(a, cbbar), bcbar) {
                    return witness("3.4", &[a, b, c]);
                }
                if q.lowbar(q.lowbar(c, b), a) != q.lowbar(q.lowbar(c, abar), bbar) {
                    return witness("3.5", &[a, b, c]);
                }
                if q.upbar(bbar, q.lowbar(c, abar)) != q.lowbar(bcbar, q.upbar(a, cbbar)) {
                    return witness("3.6", &[a, b, c]);
                }
            }
        }
    }
    None
}

fn axiom4(q: &FiniteBiquandle) -> Option<Witness> {
    let n = q.size();
    for a in 0..n {
        if !(0..n).any(|x| x == q.low(a, x) && a == q.up(x, a)) {
            return witness("4.x", &[a]);
        }
        if !(0..n).any(|y| y == q.upbar(a, y) && a == q.lowbar(y, a)) {
            return witness("4.y", &[a]);
        }
    }
    None
}

/// Checks all four axioms exhaustively, keeping the first witness of each failure.
pub fn check_axioms(q: &FiniteBiquandle) -> AxiomReport {
    AxiomReport {
        axioms: [axiom1(q), axiom2(q), axiom3(q), axiom4(q)],
    }
}

/// True iff all four axioms hold; cheap axioms first, stopping at the first failure.
pub fn satisfies_axioms(q: &FiniteBiquandle) -> bool {
    axiom1(q).is_none() && axiom4(q).is_none() && axiom2(q).is_none() && axiom3(q).is_none()
}

#[cfg(test)]
mod tests {
    use super::super::{alexander_biquandle, make_biquandle, Carrier};
    use super::*;

    #[test]
    fn swap_up_fails_axiom_one() {
        let swap = vec![vec![1, 1], vec![0, 0]];
        let id = vec![vec![0, 0], vec![1, 1]];
        let q = make_biquandle(Carrier::Labels(2), swap, id.clone(), id.clone(), id).unwrap();
        let report = check_axioms(&q);
        assert!(!report.passed(1));
        assert_eq!(
            report.witness(1),
            Some(&Witness {
                equation: "1.1",
                elements: vec![0, 0]
            })
        );
        assert!(!report.all_pass());
        assert!(!satisfies_axioms(&q));
    }

    #[test]
    fn alexander_passes() {
        let q = alexander_biquandle(3, 2, 1).unwrap();
        let report = check_axioms(&q);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn constant_operation_fails_type_one() {
        // up(a, b) = 0 is not invertible in a.
        let n = 3;
        let zero = vec![vec![0; n]; n];
        let id: Vec<Vec<usize>> = (0..n).map(|a| vec![a; n]).collect();
        let q = make_biquandle(Carrier::Labels(n), zero, id.clone(), id.clone(), id).unwrap();
        let report = check_axioms(&q);
        assert!(!report.passed(1));
        assert!(!report.passed(4));
    }

    #[test]
    fn witness_display() {
        let w = Witness {
            equation: "3.2",
            elements: vec![0, 4, 2],
        };
        assert_eq!(w.to_string(), "equation 3.2 at a=0 b=4 c=2");
    }
}
