//! Bilinear biquandles on `(Z_n)^m` and the exhaustive search for them.
//!
//! A bilinear biquandle is given by units `alpha, beta` and a form matrix `A`:
//!
//! ```text
//! x^y       = alpha x + f(x,y) y          x_y       = beta x
//! x^{y-bar} = alpha^-1 x + omega f(x,y) y  x_{y-bar} = beta^-1 x
//! ```
//!
//! with `f(x,y) = x A y^t`. The type I and type III moves force
//! `A_ii = beta^-1 - alpha` and `alpha(1 - beta^2) A_ij = beta(1 - beta^2) A_ij = 0`,
//! which is what makes exhaustive search practical.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::biquandle::{omega, satisfies_axioms, Carrier, FiniteBiquandle};
use crate::error::{Error, Result};
use crate::modular::{units, CarrierBound, FormMatrix, ModVector, Modulus};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearSpec {
    alpha: u32,
    beta: u32,
    form: FormMatrix,
    alpha_inv: u32,
    beta_inv: u32,
    omega: u32,
}

impl BilinearSpec {
    /// Fails with `NotInvertible` unless `alpha` and `beta` are units. The
    /// structural constraints on `A` are checked by [`BilinearSpec::validate`].
    pub fn new(alpha: u32, beta: u32, form: FormMatrix) -> Result<Self> {
        let n = form.modulus();
        let (alpha, beta) = (alpha % n.get(), beta % n.get());
        Ok(BilinearSpec {
            alpha_inv: n.inv(alpha)?,
            beta_inv: n.inv(beta)?,
            omega: omega(alpha, beta, n.get())?,
            alpha,
            beta,
            form,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.form.modulus()
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn form(&self) -> &FormMatrix {
        &self.form
    }

    pub fn alpha_inv(&self) -> u32 {
        self.alpha_inv
    }

    pub fn beta_inv(&self) -> u32 {
        self.beta_inv
    }

    pub fn omega(&self) -> u32 {
        self.omega
    }

    /// Required value of every diagonal entry of `A`: `beta^-1 - alpha`.
    pub fn forced_diagonal(&self) -> u32 {
        self.modulus().sub(self.beta_inv, self.alpha)
    }

    /// Checks `A_ii = beta^-1 - alpha` and the type III annihilator condition on every entry.
    pub fn validate(&self) -> Result<()> {
        let diag = self.forced_diagonal();
        let allowed = candidate_entries(self.alpha, self.beta, self.modulus().get())?;
        for i in 0..self.dim() {
            if self.form.get(i, i) != diag {
                return Err(Error::InvariantViolation(format!(
                    "A[{i}][{i}] = {} but beta^-1 - alpha = {diag}",
                    self.form.get(i, i)
                )));
            }
            for j in 0..self.dim() {
                let e = self.form.get(i, j);
                if allowed.binary_search(&e).is_err() {
                    return Err(Error::InvariantViolation(format!(
                        "A[{i}][{j}] = {e} is not annihilated by alpha(1 - beta^2) and beta(1 - beta^2)"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `alpha = beta = 1` with an antisymmetric form.
    pub fn is_symplectic(&self) -> bool {
        self.alpha == 1 && self.beta == 1 && self.form.is_antisymmetric()
    }

    /// Materializes the operation tables over `enumerate_module(n, m)` without
    /// checking [`BilinearSpec::validate`] or any axiom.
    pub fn materialize(&self, bound: CarrierBound) -> Result<FiniteBiquandle> {
        let n = self.modulus();
        let m = self.dim();
        let size = bound.check(n.get(), m)?;
        let q = n.get() as u64;
        let coords: Vec<u32> = (0..size)
            .flat_map(|i| ModVector::from_index(n, m, i).coords().to_vec())
            .collect();
        let vector = |i: usize| &coords[i * m..(i + 1) * m];
        // Row vector x A for every x.
        let xa: Vec<u32> = (0..size)
            .flat_map(|i| {
                let x = vector(i);
                (0..m)
                    .map(|j| {
                        let s: u64 = (0..m)
                            .map(|k| x[k] as u64 * self.form.get(k, j) as u64)
                            .sum();
                        (s % q) as u32
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        let combine = |a: u32, x: &[u32], f: u32, y: &[u32]| -> u32 {
            x.iter().zip(y).fold(0u64, |acc, (&xi, &yi)| {
                acc * q + (a as u64 * xi as u64 + f as u64 * yi as u64) % q
            }) as u32
        };
        let scaled = |a: u32, x: &[u32]| -> u32 {
            x.iter()
                .fold(0u64, |acc, &xi| acc * q + (a as u64 * xi as u64) % q) as u32
        };

        let mut tables: [Vec<u32>; 4] = Default::default();
        for t in tables.iter_mut() {
            t.reserve(size * size);
        }
        for i in 0..size {
            let x = vector(i);
            let row = &xa[i * m..(i + 1) * m];
            let low = scaled(self.beta, x);
            let lowbar = scaled(self.beta_inv, x);
            for j in 0..size {
                let y = vector(j);
                let f = (row
                    .iter()
                    .zip(y)
                    .map(|(&r, &yj)| r as u64 * yj as u64)
                    .sum::<u64>()
                    % q) as u32;
                let fbar = n.mul(self.omega, f);
                tables[0].push(combine(self.alpha, x, f, y));
                tables[1].push(combine(self.alpha_inv, x, fbar, y));
                tables[2].push(low);
                tables[3].push(lowbar);
            }
        }
        let elements = (0..size).map(|i| ModVector::from_index(n, m, i)).collect();
        Ok(FiniteBiquandle::from_flat(
            Carrier::Module {
                modulus: n,
                dim: m,
                elements,
            },
            tables,
        ))
    }

    /// Ordering key: `alpha`, then `beta`, then `A` row-major.
    pub fn sort_key(&self) -> (u32, u32, &[u32]) {
        (self.alpha, self.beta, self.form.row_major())
    }
}

impl fmt::Display for BilinearSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{}",
            self.modulus(),
            self.dim(),
            self.alpha,
            self.beta,
            self.form
        )
    }
}

impl FromStr for BilinearSpec {
    type Err = Error;

    /// Parses `n,m,alpha,beta,[[a11,...,a1m],...,[am1,...,amm]]`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::Parse(format!("spec `{s}`: {why}"));
        let mut head = compact.splitn(5, ',');
        let mut scalar = |name: &str| -> Result<i64> {
            let tok = head.next().ok_or_else(|| bad(&format!("missing {name}")))?;
            tok.parse::<i64>()
                .map_err(|_| bad(&format!("{name} `{tok}` is not an integer")))
        };
        let n = scalar("n")?;
        let m = scalar("m")?;
        let alpha = scalar("alpha")?;
        let beta = scalar("beta")?;
        let matrix = head.next().ok_or_else(|| bad("missing matrix"))?;

        let n = u32::try_from(n).map_err(|_| bad("n out of range"))?;
        let modulus = Modulus::new(n)?;
        if m < 1 {
            return Err(bad("m must be at least 1"));
        }
        let inner = matrix
            .strip_prefix("[[")
            .and_then(|r| r.strip_suffix("]]"))
            .ok_or_else(|| bad("matrix must look like [[..],..,[..]]"))?;
        let rows = inner
            .split("],[")
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.parse::<i64>()
                            .map_err(|_| bad(&format!("bad entry `{e}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() as i64 != m {
            return Err(bad(&format!("matrix has {} rows but m = {m}", rows.len())));
        }
        let form = FormMatrix::from_rows(modulus, &rows)?;
        BilinearSpec::new(modulus.reduce(alpha), modulus.reduce(beta), form)
    }
}

/// Materializes a validated spec under the default carrier bound.
pub fn build_bilinear(spec: &BilinearSpec) -> Result<FiniteBiquandle> {
    spec.validate()?;
    spec.materialize(CarrierBound::default())
}

/// All `x` in `Z_n` with `alpha(1 - beta^2)x = beta(1 - beta^2)x = 0`, ascending.
pub fn candidate_entries(alpha: u32, beta: u32, n: u32) -> Result<Vec<u32>> {
    let zn = Modulus::new(n)?;
    let (alpha, beta) = (alpha % n, beta % n);
    for v in [alpha, beta] {
        if !zn.is_unit(v) {
            return Err(Error::NotInvertible {
                value: v,
                modulus: n,
            });
        }
    }
    let c = zn.sub(1, zn.mul(beta, beta));
    let (ka, kb) = (zn.mul(alpha, c), zn.mul(beta, c));
    Ok((0..n)
        .filter(|&x| zn.mul(ka, x) == 0 && zn.mul(kb, x) == 0)
        .collect())
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Drop specs with `alpha = beta = 1` and antisymmetric `A`.
    pub exclude_symplectic: bool,
    /// Report one spec per isomorphism class (see [`canonical_form`]).
    pub up_to_isomorphism: bool,
    pub bound: CarrierBound,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            exclude_symplectic: true,
            up_to_isomorphism: true,
            bound: CarrierBound::default(),
        }
    }
}

/// Every bilinear biquandle structure on `(Z_n)^m`, with off-diagonal entries
/// pruned to [`candidate_entries`].
pub fn search(n: u32, m: usize, opts: &SearchOptions) -> Result<Vec<BilinearSpec>> {
    run_search(n, m, opts, |alpha, beta, zn| {
        candidate_entries(alpha, beta, zn.get())
    })
}

/// Same as [`search`] but off-diagonal entries range over all of `Z_n`.
pub fn brute_force_search(n: u32, m: usize, opts: &SearchOptions) -> Result<Vec<BilinearSpec>> {
    run_search(n, m, opts, |_, _, zn| Ok((0..zn.get()).collect()))
}

fn run_search<F>(n: u32, m: usize, opts: &SearchOptions, entries: F) -> Result<Vec<BilinearSpec>>
where
    F: Fn(u32, u32, Modulus) -> Result<Vec<u32>>,
{
    let zn = Modulus::new(n)?;
    if m == 0 {
        return Err(Error::InvalidDimension);
    }
    opts.bound.check(n, m)?;

    let mut candidates = Vec::new();
    for &alpha in &units(zn) {
        for &beta in &units(zn) {
            let allowed = entries(alpha, beta, zn)?;
            let diag = zn.sub(zn.inv(beta)?, alpha);
            for form in forms_with_diagonal(zn, m, diag, &allowed) {
                candidates.push(BilinearSpec::new(alpha, beta, form)?);
            }
        }
    }

    let mut accepted = candidates
        .into_par_iter()
        .filter(|spec| !(opts.exclude_symplectic && spec.is_symplectic()))
        .map(|spec| {
            let q = spec.materialize(opts.bound)?;
            Ok(satisfies_axioms(&q).then_some(spec))
        })
        .filter_map(|r: Result<Option<BilinearSpec>>| r.transpose())
        .collect::<Result<Vec<_>>>()?;
    accepted.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));

    if opts.up_to_isomorphism {
        accepted = reduce_up_to_isomorphism(accepted);
    }
    Ok(accepted)
}

/// All `m x m` matrices with the given diagonal and off-diagonal entries from
/// `allowed`, in row-major lexicographic order.
fn forms_with_diagonal(zn: Modulus, m: usize, diag: u32, allowed: &[u32]) -> Vec<FormMatrix> {
    let slots: Vec<usize> = (0..m * m).filter(|k| k / m != k % m).collect();
    if allowed.is_empty() && !slots.is_empty() {
        return Vec::new();
    }
    let mut digits = vec![0usize; slots.len()];
    let mut out = Vec::new();
    loop {
        let mut entries = vec![diag; m * m];
        for (&slot, &d) in slots.iter().zip(&digits) {
            entries[slot] = allowed[d];
        }
        out.push(FormMatrix::from_row_major(zn, m, entries));
        // Odometer with the last slot fastest.
        let mut k = digits.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < allowed.len() {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// Generators of `GL_m(Z_n)`: elementary transvections, coordinate swaps and
/// `diag(u, 1, ..., 1)` for each unit `u`.
fn gl_generators(zn: Modulus, m: usize) -> Vec<FormMatrix> {
    let mut gens = Vec::new();
    for u in units(zn).into_iter().filter(|&u| u != 1) {
        let mut d = FormMatrix::identity(zn, m);
        let mut e = d.row_major().to_vec();
        e[0] = u;
        d = FormMatrix::from_row_major(zn, m, e);
        gens.push(d);
    }
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let mut e = FormMatrix::identity(zn, m).row_major().to_vec();
            e[i * m + j] = 1;
            gens.push(FormMatrix::from_row_major(zn, m, e));
            if i < j {
                let mut p = vec![0u32; m * m];
                for k in 0..m {
                    let image = if k == i {
                        j
                    } else if k == j {
                        i
                    } else {
                        k
                    };
                    p[k * m + image] = 1;
                }
                gens.push(FormMatrix::from_row_major(zn, m, p));
            }
        }
    }
    gens
}

/// The congruence class `{ P A P^t : P in GL_m(Z_n) }` of `form`.
///
/// A change of basis `x -> x P` carries the bilinear biquandle `(alpha, beta, A)`
/// isomorphically onto `(alpha, beta, P^-1 A P^-t)`, so each class is one
/// isomorphism type for fixed `alpha, beta`.
pub fn congruence_class(form: &FormMatrix) -> HashSet<FormMatrix> {
    let gens = gl_generators(form.modulus(), form.dim());
    let mut seen = HashSet::from([form.clone()]);
    let mut stack = vec![form.clone()];
    while let Some(a) = stack.pop() {
        for p in &gens {
            let b = a.congruent(p);
            if seen.insert(b.clone()) {
                stack.push(b);
            }
        }
    }
    seen
}

/// Row-major least member of the congruence class of `form`.
pub fn canonical_form(form: &FormMatrix) -> FormMatrix {
    congruence_class(form)
        .into_iter()
        .min_by(|a, b| a.row_major().cmp(b.row_major()))
        .expect("class contains the form itself")
}

/// Keeps one spec per `(alpha, beta, congruence class)`: the class's row-major
/// least form. Input and output are sorted by [`BilinearSpec::sort_key`].
pub fn reduce_up_to_isomorphism(specs: Vec<BilinearSpec>) -> Vec<BilinearSpec> {
    let mut covered: HashSet<(u32, u32, FormMatrix)> = HashSet::new();
    let mut out = Vec::new();
    for spec in specs {
        if covered.contains(&(spec.alpha, spec.beta, spec.form.clone())) {
            continue;
        }
        let class = congruence_class(&spec.form);
        let least = class
            .iter()
            .min_by(|a, b| a.row_major().cmp(b.row_major()))
            .cloned()
            .expect("nonempty class");
        for a in class {
            covered.insert((spec.alpha, spec.beta, a));
        }
        out.push(BilinearSpec {
            form: least,
            ..spec
        });
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}
