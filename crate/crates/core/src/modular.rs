//! Exact arithmetic in `Z_n` and the free module `(Z_n)^m`.
//!
//! Every scalar is kept as its canonical representative in `[0, n)`. Module
//! elements are enumerated in lexicographic coordinate order, so the index of
//! a vector in [`enumerate_module`] is its base-`n` numeral with the first
//! coordinate most significant.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default cap on the number of carrier elements a construction may materialize.
pub const DEFAULT_CARRIER_BOUND: usize = 10_000;

/// Environment variable overriding [`DEFAULT_CARRIER_BOUND`].
pub const CARRIER_BOUND_ENV: &str = "BBQ_CARRIER_BOUND";

/// Upper bound on carrier cardinality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CarrierBound(pub usize);

impl CarrierBound {
    /// Reads `BBQ_CARRIER_BOUND`, falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(CARRIER_BOUND_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(CarrierBound)
            .unwrap_or(CarrierBound(DEFAULT_CARRIER_BOUND))
    }

    /// Returns `n^m` if it fits under the bound.
    pub fn check(self, n: u32, m: usize) -> Result<usize> {
        let size = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if size > self.0 as u128 {
            Err(Error::CapacityExceeded {
                size,
                bound: self.0,
            })
        } else {
            Ok(size as usize)
        }
    }
}

impl Default for CarrierBound {
    fn default() -> Self {
        static BOUND: OnceLock<CarrierBound> = OnceLock::new();
        *BOUND.get_or_init(CarrierBound::from_env)
    }
}

/// The ring `Z_n`, `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(Modulus(n))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Canonical representative of `x` in `[0, n)`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.reduce(a as i64 - b as i64)
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        self.reduce(-(a as i64))
    }

    pub fn inv(self, x: u32) -> Result<u32> {
        inv_scalar(x, self.0)
    }

    pub fn is_unit(self, x: u32) -> bool {
        gcd(x % self.0, self.0) == 1
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Multiplicative inverse of `x` modulo `n`, via the extended Euclidean algorithm.
pub fn inv_scalar(x: u32, n: u32) -> Result<u32> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let (mut r0, mut r1) = (n as i64, (x % n) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible {
            value: x,
            modulus: n,
        });
    }
    Ok(t0.rem_euclid(n as i64) as u32)
}

/// The units of `Z_n` in ascending order.
pub fn units(n: Modulus) -> Vec<u32> {
    (1..n.get()).filter(|&x| gcd(x, n.get()) == 1).collect()
}

/// An element of `(Z_n)^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModVector {
    modulus: Modulus,
    coords: Vec<u32>,
}

impl ModVector {
    /// Builds a vector, reducing every coordinate.
    pub fn new(modulus: Modulus, coords: &[i64]) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidDimension);
        }
        Ok(ModVector {
            modulus,
            coords: coords.iter().map(|&c| modulus.reduce(c)).collect(),
        })
    }

    pub fn zero(modulus: Modulus, dim: usize) -> Self {
        ModVector {
            modulus,
            coords: vec![0; dim],
        }
    }

    /// The vector at position `index` of [`enumerate_module`].
    pub fn from_index(modulus: Modulus, dim: usize, mut index: usize) -> Self {
        let n = modulus.get() as usize;
        let mut coords = vec![0u32; dim];
        for c in coords.iter_mut().rev() {
            *c = (index % n) as u32;
            index /= n;
        }
        ModVector { modulus, coords }
    }

    /// Position of this vector in [`enumerate_module`].
    pub fn index(&self) -> usize {
        let n = self.modulus.get() as usize;
        self.coords.iter().fold(0, |acc, &c| acc * n + c as usize)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn check_compatible(&self, other: &ModVector) -> Result<()> {
        if self.modulus != other.modulus || self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vectors over (Z_{})^{} and (Z_{})^{}",
                self.modulus,
                self.dim(),
                other.modulus,
                other.dim()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &ModVector) -> Result<ModVector> {
        self.check_compatible(other)?;
        let n = self.modulus;
        Ok(ModVector {
            modulus: n,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| n.add(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, k: u32) -> ModVector {
        let n = self.modulus;
        ModVector {
            modulus: n,
            coords: self.coords.iter().map(|&c| n.mul(c, k % n.get())).collect(),
        }
    }

    pub fn neg(&self) -> ModVector {
        let n = self.modulus;
        ModVector {
            modulus: n,
            coords: self.coords.iter().map(|&c| n.neg(c)).collect(),
        }
    }
}

impl fmt::Display for ModVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Square matrix over `Z_n`; the Gram matrix of a bilinear form `f(x, y) = x A y^t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormMatrix {
    modulus: Modulus,
    dim: usize,
    entries: Vec<u32>,
}

impl FormMatrix {
    pub fn from_rows<R: AsRef<[i64]>>(modulus: Modulus, rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {dim}",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&x| modulus.reduce(x)));
        }
        Ok(FormMatrix {
            modulus,
            dim,
            entries,
        })
    }

    /// Builds from already-reduced row-major entries.
    pub(crate) fn from_row_major(modulus: Modulus, dim: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        debug_assert!(entries.iter().all(|&e| e < modulus.get()));
        FormMatrix {
            modulus,
            dim,
            entries,
        }
    }

    pub fn zero(modulus: Modulus, dim: usize) -> Self {
        FormMatrix {
            modulus,
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn identity(modulus: Modulus, dim: usize) -> Self {
        let mut m = Self::zero(modulus, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = 1;
        }
        m
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.dim + j]
    }

    pub fn row_major(&self) -> &[u32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> FormMatrix {
        let d = self.dim;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                entries[j * d + i] = self.get(i, j);
            }
        }
        FormMatrix::from_row_major(self.modulus, d, entries)
    }

    pub fn mul(&self, other: &FormMatrix) -> FormMatrix {
        debug_assert_eq!(self.dim, other.dim);
        let (d, n) = (self.dim, self.modulus);
        let mut entries = vec![0u32; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0u64;
                for k in 0..d {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                entries[i * d + j] = (acc % n.get() as u64) as u32;
            }
        }
        FormMatrix::from_row_major(n, d, entries)
    }

    /// `P A P^t`: the Gram matrix of the same form in the basis given by the rows of `P`.
    pub fn congruent(&self, p: &FormMatrix) -> FormMatrix {
        p.mul(self).mul(&p.transpose())
    }

    /// `A^t = -A` with a zero diagonal.
    pub fn is_antisymmetric(&self) -> bool {
        let n = self.modulus;
        (0..self.dim).all(|i| {
            self.get(i, i) == 0 && (0..self.dim).all(|j| n.add(self.get(i, j), self.get(j, i)) == 0)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for FormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `f(x, y) = sum_ij x_i A_ij y_j mod n`.
pub fn bilinear_eval(a: &FormMatrix, x: &ModVector, y: &ModVector) -> Result<u32> {
    x.check_compatible(y)?;
    if a.modulus != x.modulus || a.dim != x.dim() {
        return Err(Error::DimensionMismatch(format!(
            "form over (Z_{})^{} applied to vectors over (Z_{})^{}",
            a.modulus,
            a.dim,
            x.modulus,
            x.dim()
        )));
    }
    let n = a.modulus.get() as u64;
    let mut acc = 0u64;
    for (i, &xi) in x.coords.iter().enumerate() {
        for (j, &yj) in y.coords.iter().enumerate() {
            acc = (acc + xi as u64 * a.get(i, j) as u64 % n * yj as u64) % n;
        }
    }
    Ok(acc as u32)
}

/// All `n^m` vectors of `(Z_n)^m` in lexicographic order, under the default carrier bound.
pub fn enumerate_module(n: Modulus, m: usize) -> Result<Vec<ModVector>> {
    enumerate_module_bounded(n, m, CarrierBound::default())
}

pub fn enumerate_module_bounded(
    n: Modulus,
    m: usize,
    bound: CarrierBound,
) -> Result<Vec<ModVector>> {
    if m == 0 {
        return Err(Error::InvalidDimension);
    }
    let size = bound.check(n.get(), m)?;
    Ok((0..size).map(|i| ModVector::from_index(n, m, i)).collect())
}

/// The submodule of `(Z_n)^m` generated by `generators`, by breadth-first closure.
///
/// Closing `{0}` under addition of generators already yields every `Z_n`-linear
/// combination, since `k * g` is `g` added `k` times.
pub fn submodule_span(
    generators: &[ModVector],
    n: Modulus,
    m: usize,
) -> Result<BTreeSet<ModVector>> {
    for g in generators {
        if g.modulus != n || g.dim() != m {
            return Err(Error::DimensionMismatch(format!(
                "generator {g} is not in (Z_{n})^{m}"
            )));
        }
    }
    let gens: Vec<&ModVector> = generators.iter().filter(|g| !g.is_zero()).collect();
    let zero = ModVector::zero(n, m);
    let mut span = BTreeSet::new();
    span.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = v.add(g)?;
            if span.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    Ok(span)
}
