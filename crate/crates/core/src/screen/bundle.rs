//! Relation bundles: magic-unitary relations plus an ideal, generated on
//! demand and written one relation per line.

use std::fmt::{self, Write as _};
use std::io::{self, Write};

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::structures::{covers, pointed_sets, rel, IsoStructure, PointedSet};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GridKind {
    Pointed,
    Groundset,
}

impl GridKind {
    pub fn letter(self) -> char {
        match self {
            GridKind::Pointed => 'u',
            GridKind::Groundset => 'w',
        }
    }

    fn tag(self) -> &'static str {
        match self {
            GridKind::Pointed => "POINTED",
            GridKind::Groundset => "GROUNDSET",
        }
    }
}

/// `coeff * v_1 v_2 ... v_k`; the empty product is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coeff: i64,
    pub vars: Vec<(usize, usize)>,
}

/// A noncommutative polynomial set to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub terms: Vec<Term>,
}

impl Relation {
    fn monomial(vars: Vec<(usize, usize)>) -> Relation {
        Relation {
            terms: vec![Term { coeff: 1, vars }],
        }
    }

    fn idempotent(v: (usize, usize)) -> Relation {
        Relation {
            terms: vec![
                Term {
                    coeff: 1,
                    vars: vec![v, v],
                },
                Term {
                    coeff: -1,
                    vars: vec![v],
                },
            ],
        }
    }

    fn sum_to_one(vars: impl Iterator<Item = (usize, usize)>) -> Relation {
        let mut terms: Vec<Term> = vars
            .map(|v| Term {
                coeff: 1,
                vars: vec![v],
            })
            .collect();
        terms.push(Term {
            coeff: -1,
            vars: vec![],
        });
        Relation { terms }
    }

    pub fn render(&self, letter: char) -> String {
        let mut s = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.coeff < 0) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mag = t.coeff.unsigned_abs();
            if mag != 1 || t.vars.is_empty() {
                write!(s, "{mag}").expect("string write");
            }
            for (a, x) in &t.vars {
                write!(s, "{letter}[{a}][{x}]").expect("string write");
            }
        }
        if self.terms.is_empty() {
            s.push('0');
        }
        s
    }
}

/// Tuples of one length with their membership flags.
type TupleSide = Vec<(Vec<usize>, bool)>;

enum Ideal {
    /// `u_ax u_by` whenever `rel(a, b) != rel(x, y)`.
    Rel {
        rows: Vec<PointedSet>,
        cols: Vec<PointedSet>,
    },
    /// `w_AX` whenever exactly one of `A`, `X` is a structure tuple; one
    /// entry per tuple length, each side listing `(tuple, is member)`.
    Tuples(Vec<(TupleSide, TupleSide)>),
}

/// Relations for an isomorphism algebra on a `rows x cols` grid of formally
/// self-adjoint variables.
pub struct RelationBundle {
    pub kind: GridKind,
    pub rows: usize,
    pub cols: usize,
    pub row_legend: Vec<serde_json::Value>,
    pub col_legend: Vec<serde_json::Value>,
    ideal: Ideal,
}

fn check_covering(m: &Matroid, n: &Matroid, s: IsoStructure) -> Result<()> {
    for (side, x) in [("M", m), ("N", n)] {
        let r = covers(x, s)?;
        if let Some(w) = r.witness {
            return Err(Error::NotCovering {
                structure: format!("{s} on {side}"),
                witness: w,
            });
        }
    }
    Ok(())
}

fn pointed_legend(v: &[PointedSet]) -> Vec<serde_json::Value> {
    v.iter()
        .map(|p| json!({"set": p.set.iter().collect::<Vec<_>>(), "point": p.point}))
        .collect()
}

/// The pointed-set grid with the `rel` ideal.
pub fn export_pointed_relations(
    m: &Matroid,
    n: &Matroid,
    s: IsoStructure,
) -> Result<RelationBundle> {
    check_covering(m, n, s)?;
    let rows = pointed_sets(m, s)?;
    let cols = pointed_sets(n, s)?;
    Ok(RelationBundle {
        kind: GridKind::Pointed,
        rows: rows.len(),
        cols: cols.len(),
        row_legend: pointed_legend(&rows),
        col_legend: pointed_legend(&cols),
        ideal: Ideal::Rel { rows, cols },
    })
}

/// Whether a tuple of elements is an `S`-tuple of `m`. Tuples with repeats
/// never are, except `(a, a)` for a nonloop `a` under circuits.
pub fn is_structure_tuple(m: &Matroid, s: IsoStructure, t: &[usize]) -> Result<bool> {
    let set = Subset::from_elems(t.iter().copied());
    let distinct = set.len() == t.len();
    Ok(match s {
        IsoStructure::Independent => distinct && m.is_independent(set),
        IsoStructure::Bases => distinct && t.len() == m.rank() && m.is_basis(set),
        IsoStructure::NonBases => t.len() == m.rank() && !(distinct && m.is_basis(set)),
        IsoStructure::Circuits => {
            if t.len() == 2 && t[0] == t[1] {
                !m.loops().contains(t[0])
            } else {
                distinct
                    && !m.is_independent(set)
                    && set.iter().all(|e| m.is_independent(set.remove(e)))
            }
        }
        IsoStructure::Hyperplanes => {
            distinct && m.closure(set)? == set && m.rank_of(set)? + 1 == m.rank()
        }
        IsoStructure::Flats => {
            return Err(Error::UnsupportedKind(
                "flats have no tuple structure".into(),
            ))
        }
    })
}

fn all_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |e| {
                    let mut u = t.clone();
                    u.push(e);
                    u
                })
            })
            .collect();
    }
    out
}

/// Tuple lengths carrying `S`-tuples of `m`, not counting the empty tuple.
fn tuple_lengths(m: &Matroid, s: IsoStructure) -> Result<Vec<usize>> {
    let r = m.rank();
    Ok(match s {
        IsoStructure::Independent => (1..=r).collect(),
        IsoStructure::Bases | IsoStructure::NonBases => {
            vec![r].into_iter().filter(|&l| l > 0).collect()
        }
        IsoStructure::Circuits => {
            let mut ls: Vec<usize> = m.circuits()?.iter().map(|c| c.len()).collect();
            if !m.loops().complement(m.n()).is_empty() {
                ls.push(2);
            }
            ls.sort_unstable();
            ls.dedup();
            ls
        }
        IsoStructure::Hyperplanes => {
            let mut ls: Vec<usize> = m
                .hyperplanes()?
                .iter()
                .map(|h| h.len())
                .filter(|&l| l > 0)
                .collect();
            ls.sort_unstable();
            ls.dedup();
            ls
        }
        IsoStructure::Flats => {
            return Err(Error::UnsupportedKind(
                "flats have no tuple structure".into(),
            ))
        }
    })
}

/// The ground-set grid with the tuple ideal.
pub fn export_groundset_relations(
    m: &Matroid,
    n: &Matroid,
    s: IsoStructure,
) -> Result<RelationBundle> {
    if s == IsoStructure::Flats {
        return Err(Error::UnsupportedKind(
            "flats have no tuple structure".into(),
        ));
    }
    check_covering(m, n, s)?;
    let mut lengths = tuple_lengths(m, s)?;
    lengths.extend(tuple_lengths(n, s)?);
    lengths.sort_unstable();
    lengths.dedup();
    let side = |x: &Matroid, len: usize| -> Result<TupleSide> {
        all_tuples(x.n(), len)
            .into_iter()
            .map(|t| {
                let b = is_structure_tuple(x, s, &t)?;
                Ok((t, b))
            })
            .collect()
    };
    let tuples = lengths
        .into_iter()
        .map(|len| Ok((side(m, len)?, side(n, len)?)))
        .collect::<Result<Vec<_>>>()?;
    let legend = |x: &Matroid| -> Vec<serde_json::Value> {
        (0..x.n())
            .map(|e| json!({"element": e, "label": x.label(e)}))
            .collect()
    };
    Ok(RelationBundle {
        kind: GridKind::Groundset,
        rows: m.n(),
        cols: n.n(),
        row_legend: legend(m),
        col_legend: legend(n),
        ideal: Ideal::Tuples(tuples),
    })
}

impl RelationBundle {
    /// Magic-unitary relations on the grid: idempotents, row and column
    /// orthogonality, row and column sums.
    pub fn magic_unitary(&self) -> impl Iterator<Item = Relation> + '_ {
        let (r, c) = (self.rows, self.cols);
        let idem = (0..r).flat_map(move |a| (0..c).map(move |x| Relation::idempotent((a, x))));
        let row_orth = (0..r).flat_map(move |a| {
            (0..c).flat_map(move |x| {
                (0..c)
                    .filter(move |&y| y != x)
                    .map(move |y| Relation::monomial(vec![(a, x), (a, y)]))
            })
        });
        let col_orth = (0..c).flat_map(move |x| {
            (0..r).flat_map(move |a| {
                (0..r)
                    .filter(move |&b| b != a)
                    .map(move |b| Relation::monomial(vec![(a, x), (b, x)]))
            })
        });
        let col_sums = (0..c).map(move |x| Relation::sum_to_one((0..r).map(move |a| (a, x))));
        let row_sums = (0..r).map(move |a| Relation::sum_to_one((0..c).map(move |x| (a, x))));
        idem.chain(row_orth)
            .chain(col_orth)
            .chain(col_sums)
            .chain(row_sums)
    }

    /// Generators of the ideal, in a fixed order.
    pub fn ideal(&self) -> Box<dyn Iterator<Item = Relation> + '_> {
        match &self.ideal {
            Ideal::Rel { rows, cols } => Box::new((0..rows.len()).flat_map(move |a| {
                (0..cols.len()).flat_map(move |x| {
                    (0..rows.len()).flat_map(move |b| {
                        let rab = rel(&rows[a], &rows[b]);
                        (0..cols.len())
                            .filter(move |&y| rab != rel(&cols[x], &cols[y]))
                            .map(move |y| Relation::monomial(vec![(a, x), (b, y)]))
                    })
                })
            })),
            Ideal::Tuples(by_len) => Box::new(by_len.iter().flat_map(|(ms, ns)| {
                ms.iter().flat_map(move |(a, ia)| {
                    ns.iter()
                        .filter(move |(_, ix)| ia != ix)
                        .map(move |(x, _)| {
                            Relation::monomial(a.iter().copied().zip(x.iter().copied()).collect())
                        })
                })
            })),
        }
    }

    pub fn relations(&self) -> impl Iterator<Item = Relation> + '_ {
        self.magic_unitary().chain(self.ideal())
    }

    pub fn write_header(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "grid {} {} {}", self.kind.tag(), self.rows, self.cols)?;
        let legend = self
            .row_legend
            .iter()
            .map(|v| ("row", v))
            .chain(self.col_legend.iter().map(|v| ("col", v)));
        for (i, (side, v)) in legend.enumerate() {
            let mut entry = v.clone();
            entry["side"] = json!(side);
            writeln!(out, "legend {i} {entry}")?;
        }
        Ok(())
    }

    /// Header, legend, then one relation per line.
    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        self.write_header(out)?;
        let letter = self.kind.letter();
        for r in self.relations() {
            writeln!(out, "{}", r.render(letter))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RelationBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RelationBundle")
            .field("kind", &self.kind)
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .finish_non_exhaustive()
    }
}

/// A bundle read back from text.
#[derive(Clone, Debug, PartialEq)]
pub struct ParsedBundle {
    pub kind: GridKind,
    pub rows: usize,
    pub cols: usize,
    pub legend: Vec<serde_json::Value>,
    pub relations: Vec<Relation>,
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i] == b' ' {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.i;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i])
            .ok()?
            .parse()
            .ok()
    }

    fn index(&mut self) -> Option<usize> {
        if !self.eat(b'[') {
            return None;
        }
        let n = self.number()? as usize;
        self.eat(b']').then_some(n)
    }
}

fn parse_relation(line: &str, letter: char, rows: usize, cols: usize) -> Result<Relation> {
    let bad = |what: &str| Error::Parse(format!("{what} in relation {line:?}"));
    let mut c = Cursor {
        s: line.as_bytes(),
        i: 0,
    };
    let mut terms = Vec::new();
    c.skip_ws();
    if c.eat(b'0') {
        c.skip_ws();
        return if c.peek().is_none() {
            Ok(Relation { terms })
        } else {
            Err(bad("trailing text"))
        };
    }
    let mut first = true;
    loop {
        c.skip_ws();
        let negative = if first {
            c.eat(b'-')
        } else if c.eat(b'+') {
            false
        } else if c.eat(b'-') {
            true
        } else {
            return Err(bad("expected + or -"));
        };
        c.skip_ws();
        let mag = if c.peek().is_some_and(|b| b.is_ascii_digit()) {
            c.number().ok_or_else(|| bad("bad coefficient"))? as i64
        } else {
            1
        };
        let mut vars = Vec::new();
        while c.eat(letter as u8) {
            let a = c.index().ok_or_else(|| bad("bad row index"))?;
            let x = c.index().ok_or_else(|| bad("bad column index"))?;
            if a >= rows || x >= cols {
                return Err(bad("index outside the grid"));
            }
            vars.push((a, x));
        }
        terms.push(Term {
            coeff: if negative { -mag } else { mag },
            vars,
        });
        first = false;
        c.skip_ws();
        if c.peek().is_none() {
            return Ok(Relation { terms });
        }
    }
}

/// Read the text written by [`RelationBundle::write`].
pub fn parse_bundle(text: &str) -> Result<ParsedBundle> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty bundle".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let (kind, rows, cols) = match parts.as_slice() {
        ["grid", k, r, c] => {
            let kind = match *k {
                "POINTED" => GridKind::Pointed,
                "GROUNDSET" => GridKind::Groundset,
                _ => return Err(Error::Parse(format!("unknown grid kind {k:?}"))),
            };
            let num = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse(e.to_string()));
            (kind, num(r)?, num(c)?)
        }
        _ => return Err(Error::Parse(format!("bad header {header:?}"))),
    };
    let mut legend = Vec::new();
    let mut relations = Vec::new();
    for line in lines {
        if let Some(rest) = line.strip_prefix("legend ") {
            let (i, v) = rest
                .split_once(' ')
                .ok_or_else(|| Error::Parse(format!("bad legend {line:?}")))?;
            if i.parse::<usize>().ok() != Some(legend.len()) {
                return Err(Error::Parse(format!("legend out of order: {line:?}")));
            }
            legend.push(serde_json::from_str(v).map_err(|e| Error::Parse(e.to_string()))?);
        } else {
            relations.push(parse_relation(line, kind.letter(), rows, cols)?);
        }
    }
    Ok(ParsedBundle {
        kind,
        rows,
        cols,
        legend,
        relations,
    })
}

/// `w_ax -> sum over pointed sets t of N with point x of u_{b_a t}`, where
/// `b_a` is the first pointed set of `M` with point `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Substitution {
    pub a: usize,
    pub x: usize,
    pub image: Vec<(usize, usize)>,
}

pub fn substitution_table(m: &Matroid, n: &Matroid, s: IsoStructure) -> Result<Vec<Substitution>> {
    check_covering(m, n, s)?;
    let rows = pointed_sets(m, s)?;
    let cols = pointed_sets(n, s)?;
    let mut out = Vec::new();
    for a in 0..m.n() {
        let b = rows.iter().position(|p| p.point == a).expect("covering");
        for x in 0..n.n() {
            let image = (0..cols.len())
                .filter(|&t| cols[t].point == x)
                .map(|t| (b, t))
                .collect();
            out.push(Substitution { a, x, image });
        }
    }
    Ok(out)
}

pub fn write_substitutions(table: &[Substitution], out: &mut dyn Write) -> io::Result<()> {
    for sub in table {
        let rhs = Relation {
            terms: sub
                .image
                .iter()
                .map(|&v| Term {
                    coeff: 1,
                    vars: vec![v],
                })
                .collect(),
        };
        writeln!(out, "w[{}][{}] -> {}", sub.a, sub.x, rhs.render('u'))?;
    }
    Ok(())
}
