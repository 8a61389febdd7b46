//! Biquandle colorings of link diagrams, the counting invariant, and the
//! bilinear biquandle polynomial
//! `phi_BB = sum over colorings f of q^|Im f| z^|Span(Im f)|`.
//!
//! `Im f` is the sub-biquandle generated by the colors on the semiarcs; it is
//! the image of the knot biquandle, which is generated by its semiarcs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;

use crate::bilinear::{build_bilinear, BilinearSpec};
use crate::biquandle::{satisfies_axioms, FiniteBiquandle};
use crate::error::{Error, Result};
use crate::link::{crossing_relations, CrossingRelation, LinkDiagram};
use crate::modular::{submodule_span, ModVector};

/// Carrier index of the color on each semiarc.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub assignment: Vec<usize>,
}

impl Coloring {
    pub fn vectors<'a>(&self, q: &'a FiniteBiquandle) -> Option<Vec<&'a ModVector>> {
        self.assignment
            .iter()
            .map(|&i| q.carrier().vector(i))
            .collect()
    }
}

struct Solver<'a> {
    q: &'a FiniteBiquandle,
    relations: Vec<CrossingRelation>,
    // relations having the semiarc as an input
    watchers: Vec<Vec<usize>>,
}

impl<'a> Solver<'a> {
    fn new(d: &LinkDiagram, q: &'a FiniteBiquandle) -> Self {
        let relations = crossing_relations(d);
        let mut watchers = vec![Vec::new(); d.semiarc_count()];
        for (k, r) in relations.iter().enumerate() {
            watchers[r.inputs.0].push(k);
            if r.inputs.1 != r.inputs.0 {
                watchers[r.inputs.1].push(k);
            }
        }
        Solver {
            q,
            relations,
            watchers,
        }
    }

    /// Assigns `arc = value` and everything it forces. False on conflict.
    fn assign(&self, state: &mut [Option<usize>], arc: usize, value: usize) -> bool {
        let mut stack = vec![(arc, value)];
        while let Some((arc, value)) = stack.pop() {
            match state[arc] {
                Some(v) if v != value => return false,
                Some(_) => continue,
                None => state[arc] = Some(value),
            }
            for &k in &self.watchers[arc] {
                let r = &self.relations[k];
                if let (Some(x), Some(y)) = (state[r.inputs.0], state[r.inputs.1]) {
                    stack.push((r.output, self.q.apply(r.op, x, y)));
                }
            }
        }
        true
    }

    fn extend(&self, state: Vec<Option<usize>>, out: &mut Vec<Coloring>) {
        let Some(arc) = state.iter().position(Option::is_none) else {
            out.push(Coloring {
                assignment: state.into_iter().flatten().collect(),
            });
            return;
        };
        for v in 0..self.q.size() {
            let mut next = state.clone();
            if self.assign(&mut next, arc, v) {
                self.extend(next, out);
            }
        }
    }
}

/// All colorings of `d` by `q`, sorted lexicographically by assignment.
pub fn enumerate_colorings(d: &LinkDiagram, q: &FiniteBiquandle) -> Vec<Coloring> {
    let s = d.semiarc_count();
    if s == 0 {
        return vec![Coloring {
            assignment: Vec::new(),
        }];
    }
    let solver = Solver::new(d, q);
    let mut all: Vec<Coloring> = (0..q.size())
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut state = vec![None; s];
            let mut out = Vec::new();
            if solver.assign(&mut state, 0, v) {
                solver.extend(state, &mut out);
            }
            out
        })
        .collect();
    all.sort_unstable();
    all
}

pub fn counting_invariant(d: &LinkDiagram, q: &FiniteBiquandle) -> usize {
    enumerate_colorings(d, q).len()
}

/// Terms `(q exponent, z exponent) -> coefficient`; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BBPolynomial {
    terms: BTreeMap<(u32, u32), u64>,
}

impl BBPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), u64)>>(terms: I) -> Self {
        let mut p = Self::new();
        for (exps, c) in terms {
            p.add_term(exps.0, exps.1, c);
        }
        p
    }

    pub fn add_term(&mut self, q_exp: u32, z_exp: u32, coeff: u64) {
        if coeff > 0 {
            *self.terms.entry((q_exp, z_exp)).or_insert(0) += coeff;
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, q_exp: u32, z_exp: u32) -> u64 {
        self.terms.get(&(q_exp, z_exp)).copied().unwrap_or(0)
    }
}

impl fmt::Display for BBPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&phi_to_string(self))
    }
}

/// Computes `phi_BB(d, T)` for the bilinear biquandle `T` described by `spec`.
pub fn phi_bb(d: &LinkDiagram, spec: &BilinearSpec) -> Result<BBPolynomial> {
    let q = build_bilinear(spec)?;
    if !satisfies_axioms(&q) {
        return Err(Error::InvariantViolation(format!(
            "{spec} is not a biquandle"
        )));
    }
    let (n, m) = (spec.modulus(), spec.dim());
    let mut poly = BBPolynomial::new();
    let mut span_sizes: HashMap<Vec<usize>, u32> = HashMap::new();
    for c in enumerate_colorings(d, &q) {
        let image = q.closure(c.assignment.iter().copied());
        let span = match span_sizes.get(&image) {
            Some(&s) => s,
            None => {
                let gens: Vec<ModVector> = image
                    .iter()
                    .map(|&i| q.carrier().vector(i).expect("bilinear carrier").clone())
                    .collect();
                let s = submodule_span(&gens, n, m)?.len() as u32;
                span_sizes.insert(image.clone(), s);
                s
            }
        };
        poly.add_term(image.len() as u32, span, 1);
    }
    Ok(poly)
}

/// Evaluates the polynomial at integer `q`, `z`.
pub fn phi_specialize(p: &BBPolynomial, q_val: i64, z_val: i64) -> i128 {
    p.terms
        .iter()
        .map(|(&(i, j), &c)| c as i128 * (q_val as i128).pow(i) * (z_val as i128).pow(j))
        .sum()
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Canonical text: terms by ascending `(q, z)` exponents, e.g. `q z + 3 q z^2 + 12 q^2 z^4`.
pub fn phi_to_string(p: &BBPolynomial) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.terms
        .iter()
        .map(|(&(i, j), &c)| {
            let mut parts = Vec::with_capacity(3);
            if c != 1 || (i == 0 && j == 0) {
                parts.push(c.to_string());
            }
            parts.extend(
                [power("q", i), power("z", j)]
                    .into_iter()
                    .filter(|s| !s.is_empty()),
            );
            parts.join(" ")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
