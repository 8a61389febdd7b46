//! Signed Gauss codes of oriented classical and virtual links.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! code      := component (';' component)*
//! component := token*
//! token     := ('O' | 'U') digits ('+' | '-')
//! ```
//!
//! Each component is read cyclically. Semiarcs are the segments between
//! consecutive tokens: semiarc `offset + j` of a component leaves its `j`-th
//! token and enters the next one. A component with no tokens is an unknotted
//! circle and gets a single free semiarc. Virtual crossings are simply not
//! written, so any code that pairs its tokens correctly is accepted whether
//! or not it is planar.

use std::collections::BTreeMap;
use std::fmt;

use crate::biquandle::Op;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strand {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussToken {
    pub strand: Strand,
    pub crossing: u32,
    pub sign: Sign,
}

impl fmt::Display for GaussToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.strand {
            Strand::Over => 'O',
            Strand::Under => 'U',
        };
        let sign = match self.sign {
            Sign::Positive => '+',
            Sign::Negative => '-',
        };
        write!(f, "{s}{}{sign}", self.crossing)
    }
}

/// The four semiarcs meeting at a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub sign: Sign,
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
}

/// `output = op(inputs.0, inputs.1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingRelation {
    pub output: usize,
    pub inputs: (usize, usize),
    pub op: Op,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    components: Vec<Vec<GaussToken>>,
    crossings: BTreeMap<u32, Crossing>,
    semiarcs: usize,
}

fn parse_component(text: &str, index: usize) -> Result<Vec<GaussToken>> {
    let bad = |why: String| Error::Parse(format!("component {}: {why}", index + 1));
    let mut tokens = Vec::new();
    let mut chars = text.chars().filter(|c| !c.is_whitespace()).peekable();
    while let Some(c) = chars.next() {
        let strand = match c {
            'O' => Strand::Over,
            'U' => Strand::Under,
            other => return Err(bad(format!("expected `O` or `U`, found `{other}`"))),
        };
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let crossing: u32 = digits
            .parse()
            .map_err(|_| bad(format!("missing or oversized crossing number after `{c}`")))?;
        if crossing == 0 {
            return Err(bad("crossing numbers start at 1".into()));
        }
        let sign = match chars.next() {
            Some('+') => Sign::Positive,
            Some('-') => Sign::Negative,
            Some(other) => return Err(bad(format!("expected `+` or `-`, found `{other}`"))),
            None => return Err(bad(format!("token `{c}{digits}` has no sign"))),
        };
        tokens.push(GaussToken {
            strand,
            crossing,
            sign,
        });
    }
    Ok(tokens)
}

/// Parses a signed Gauss code.
pub fn parse_gauss(text: &str) -> Result<LinkDiagram> {
    let components = text
        .split(';')
        .enumerate()
        .map(|(i, c)| parse_component(c, i))
        .collect::<Result<Vec<_>>>()?;
    LinkDiagram::from_components(components)
}

#[derive(Default)]
struct Partial {
    sign: Option<Sign>,
    over: Option<(usize, usize)>,
    under: Option<(usize, usize)>,
}

impl LinkDiagram {
    pub fn from_components(components: Vec<Vec<GaussToken>>) -> Result<Self> {
        let mut partial: BTreeMap<u32, Partial> = BTreeMap::new();
        let mut offset = 0;
        for tokens in &components {
            let len = tokens.len();
            if len == 0 {
                offset += 1;
                continue;
            }
            for (j, tok) in tokens.iter().enumerate() {
                let arcs = (offset + (j + len - 1) % len, offset + j);
                let entry = partial.entry(tok.crossing).or_default();
                match entry.sign {
                    Some(s) if s != tok.sign => return Err(Error::SignMismatch(tok.crossing)),
                    _ => entry.sign = Some(tok.sign),
                }
                let slot = match tok.strand {
                    Strand::Over => &mut entry.over,
                    Strand::Under => &mut entry.under,
                };
                if slot.replace(arcs).is_some() {
                    return Err(Error::UnmatchedCrossing(tok.crossing));
                }
            }
            offset += len;
        }
        let crossings = partial
            .into_iter()
            .map(|(id, p)| match (p.sign, p.over, p.under) {
                (Some(sign), Some((over_in, over_out)), Some((under_in, under_out))) => Ok((
                    id,
                    Crossing {
                        sign,
                        under_in,
                        under_out,
                        over_in,
                        over_out,
                    },
                )),
                _ => Err(Error::UnmatchedCrossing(id)),
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(LinkDiagram {
            components,
            crossings,
            semiarcs: offset,
        })
    }

    pub fn components(&self) -> &[Vec<GaussToken>] {
        &self.components
    }

    pub fn crossings(&self) -> &BTreeMap<u32, Crossing> {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn semiarc_count(&self) -> usize {
        self.semiarcs
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for tok in comp {
                write!(f, "{tok}")?;
            }
        }
        Ok(())
    }
}

/// Two relations per crossing. With under-strand input `x` and over-strand
/// input `y`, a positive crossing gives `under_out = x^y`, `over_out = y_x`
/// and a negative crossing gives `under_out = x^{y-bar}`, `over_out = y_{x-bar}`.
pub fn crossing_relations(d: &LinkDiagram) -> Vec<CrossingRelation> {
    d.crossings
        .values()
        .flat_map(|c| {
            let (under_op, over_op) = match c.sign {
                Sign::Positive => (Op::Up, Op::Low),
                Sign::Negative => (Op::UpBar, Op::LowBar),
            };
            [
                CrossingRelation {
                    output: c.under_out,
                    inputs: (c.under_in, c.over_in),
                    op: under_op,
                },
                CrossingRelation {
                    output: c.over_out,
                    inputs: (c.over_in, c.under_in),
                    op: over_op,
                },
            ]
        })
        .collect()
}

/// Names accepted by [`builtin_link`].
pub const BUILTIN_LINKS: [&str; 5] = ["unknot", "trefoil", "trefoil_mirror", "hopf_pos", "figure8"];

/// Stored Gauss code of a named diagram.
pub fn builtin_code(name: &str) -> Result<&'static str> {
    Ok(match name {
        "unknot" => "",
        "trefoil" => "O1+U2+O3+U1+O2+U3+",
        "trefoil_mirror" => "O1-U2-O3-U1-O2-U3-",
        "hopf_pos" => "O1+U2+;U1+O2+",
        "figure8" => "O1+U2-O3-U1+O4+U3-O2-U4+",
        other => return Err(Error::UnknownLink(other.to_string())),
    })
}

pub fn builtin_link(name: &str) -> Result<LinkDiagram> {
    parse_gauss(builtin_code(name)?)
}
