//! Finite biquandles stored as four `N x N` operation tables.

mod axioms;
mod constructors;
mod matrix;

use std::fmt;

pub use axioms::{check_axioms, satisfies_axioms, AxiomReport, Witness};
pub use constructors::{alexander_biquandle, omega, symplectic_quandle, trivial_biquandle};
pub use matrix::{block_matrix_decode, block_matrix_encode};

use crate::error::{Error, Result};
use crate::modular::{ModVector, Modulus};

/// One of the four biquandle operations. `Up(a, b)` is `a^b`, `UpBar(a, b)` is
/// `a^{b-bar}`, `Low(a, b)` is `a_b` and `LowBar(a, b)` is `a_{b-bar}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Up,
    UpBar,
    Low,
    LowBar,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Up, Op::UpBar, Op::Low, Op::LowBar];

    #[inline]
    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Up => "up",
            Op::UpBar => "upbar",
            Op::Low => "low",
            Op::LowBar => "lowbar",
        })
    }
}

/// The ordered element list of a finite biquandle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Carrier {
    /// Opaque elements `x_1, ..., x_N`.
    Labels(usize),
    /// Elements of `(Z_n)^m`, in table order.
    Module {
        modulus: Modulus,
        dim: usize,
        elements: Vec<ModVector>,
    },
}

impl Carrier {
    pub fn len(&self) -> usize {
        match self {
            Carrier::Labels(n) => *n,
            Carrier::Module { elements, .. } => elements.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vector(&self, index: usize) -> Option<&ModVector> {
        match self {
            Carrier::Labels(_) => None,
            Carrier::Module { elements, .. } => elements.get(index),
        }
    }

    /// Human-readable name of element `index` (1-based label or vector).
    pub fn label(&self, index: usize) -> String {
        match self.vector(index) {
            Some(v) => v.to_string(),
            None => format!("x{}", index + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBiquandle {
    carrier: Carrier,
    size: usize,
    tables: [Vec<u32>; 4],
}

/// Builds a biquandle from four row-indexed tables (`table[a][b]` is the
/// result for `(a, b)`). No axiom is checked.
pub fn make_biquandle(
    carrier: Carrier,
    up: Vec<Vec<usize>>,
    upbar: Vec<Vec<usize>>,
    low: Vec<Vec<usize>>,
    lowbar: Vec<Vec<usize>>,
) -> Result<FiniteBiquandle> {
    let size = carrier.len();
    if size == 0 {
        return Err(Error::ShapeError("empty carrier".into()));
    }
    let mut tables: [Vec<u32>; 4] = Default::default();
    for (op, rows) in Op::ALL.into_iter().zip([up, upbar, low, lowbar]) {
        if rows.len() != size {
            return Err(Error::ShapeError(format!(
                "{op} table has {} rows, expected {size}",
                rows.len()
            )));
        }
        let flat = &mut tables[op.slot()];
        flat.reserve(size * size);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::ShapeError(format!(
                    "{op} table row {} has {} entries, expected {size}",
                    i + 1,
                    row.len()
                )));
            }
            for value in row {
                if value >= size {
                    return Err(Error::IndexOutOfRange { value, size });
                }
                flat.push(value as u32);
            }
        }
    }
    Ok(FiniteBiquandle {
        carrier,
        size,
        tables,
    })
}

impl FiniteBiquandle {
    /// Internal constructor from flat row-major tables that are known to be in range.
    pub(crate) fn from_flat(carrier: Carrier, tables: [Vec<u32>; 4]) -> Self {
        let size = carrier.len();
        debug_assert!(tables
            .iter()
            .all(|t| t.len() == size * size && t.iter().all(|&e| (e as usize) < size)));
        FiniteBiquandle {
            carrier,
            size,
            tables,
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    #[inline]
    pub fn apply(&self, op: Op, a: usize, b: usize) -> usize {
        self.tables[op.slot()][a * self.size + b] as usize
    }

    #[inline]
    pub fn up(&self, a: usize, b: usize) -> usize {
        self.apply(Op::Up, a, b)
    }

    #[inline]
    pub fn upbar(&self, a: usize, b: usize) -> usize {
        self.apply(Op::UpBar, a, b)
    }

    #[inline]
    pub fn low(&self, a: usize, b: usize) -> usize {
        self.apply(Op::Low, a, b)
    }

    #[inline]
    pub fn lowbar(&self, a: usize, b: usize) -> usize {
        self.apply(Op::LowBar, a, b)
    }

    /// Row-major flat table of `op`.
    pub fn table(&self, op: Op) -> &[u32] {
        &self.tables[op.slot()]
    }

    /// True when the four tables coincide (carriers are not compared).
    pub fn same_tables(&self, other: &FiniteBiquandle) -> bool {
        self.size == other.size && self.tables == other.tables
    }

    /// `a_b = a_{b-bar} = a` for all `a, b`.
    pub fn is_quandle(&self) -> bool {
        let n = self.size;
        (0..n).all(|a| (0..n).all(|b| self.low(a, b) == a && self.lowbar(a, b) == a))
    }

    /// The sub-biquandle generated by `seeds`: the smallest subset containing
    /// them and closed under all four operations. Returned sorted.
    pub fn closure<I: IntoIterator<Item = usize>>(&self, seeds: I) -> Vec<usize> {
        let mut member = vec![false; self.size];
        let mut elems = Vec::new();
        for s in seeds {
            if !member[s] {
                member[s] = true;
                elems.push(s);
            }
        }
        // Every pair (i, j) with i, j < done has been combined.
        let mut done = 0;
        while done < elems.len() {
            let k = elems[done];
            done += 1;
            for i in 0..done {
                let j = elems[i];
                for (a, b) in [(k, j), (j, k)] {
                    for op in Op::ALL {
                        let c = self.apply(op, a, b);
                        if !member[c] {
                            member[c] = true;
                            elems.push(c);
                        }
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }
}
