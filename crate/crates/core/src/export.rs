//! Tables of exact values and their CSV, JSON and LaTeX renderings.
//!
//! Every rendering parses back to the same [`Table`]. Fractions are written
//! as `p/q` with no whitespace and integers without a denominator.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arrays::{a0_column_symbolic, build_a_numeric, build_a_symbolic, build_b_numeric,
    build_b_symbolic, Form, Triangle};
use crate::error::{Error, Result};
use crate::ffpoly::FFPoly;
use crate::numbers::{Integer, Rational};
use crate::phi::{build_phi, TriangularLayers};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    A,
    B,
    Phi,
    PhiT,
    F,
}

impl FromStr for Structure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Structure::A),
            "B" | "b" => Ok(Structure::B),
            "phi" => Ok(Structure::Phi),
            "phiT" | "phit" => Ok(Structure::PhiT),
            "F" | "f" => Ok(Structure::F),
            other => Err(Error::Parse(format!("unknown structure {other:?}"))),
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Structure::A => "A",
            Structure::B => "B",
            Structure::Phi => "phi",
            Structure::PhiT => "phiT",
            Structure::F => "F",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// One table value: an exact rational or a polynomial in `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Exact(Rational),
    Symbolic(FFPoly),
}

impl Cell {
    pub fn to_plain(&self) -> String {
        match self {
            Cell::Exact(q) => q.to_string(),
            Cell::Symbolic(p) => p.to_string(),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            Cell::Exact(q) if q.is_integer() => q.to_string(),
            Cell::Exact(q) => {
                let sign = if q.numer().sign() == num_bigint::Sign::Minus { "-" } else { "" };
                format!("{sign}\\frac{{{}}}{{{}}}", q.numer().magnitude(), q.denom())
            }
            Cell::Symbolic(p) => p.to_latex(),
        }
    }

    pub fn parse_plain(text: &str, symbolic: bool) -> Result<Self> {
        if symbolic {
            return text.parse().map(Cell::Symbolic);
        }
        parse_rational(text).map(Cell::Exact)
    }

    pub fn parse_latex(text: &str, symbolic: bool) -> Result<Self> {
        if symbolic {
            return text.parse().map(Cell::Symbolic);
        }
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let Some(frac) = body.strip_prefix("\\frac{") else {
            return parse_rational(text).map(Cell::Exact);
        };
        let bad = || Error::Parse(format!("malformed fraction {text:?}"));
        let (num, den) = frac
            .strip_suffix('}')
            .and_then(|f| f.split_once("}{"))
            .ok_or_else(bad)?;
        let q = parse_rational(&format!("{num}/{den}"))?;
        Ok(Cell::Exact(if negative { -q } else { q }))
    }
}

/// Parses `p/q` or `p` back into a normalized rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not an exact fraction: {text:?}"));
    match text.split_once('/') {
        None => text.parse::<Integer>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: Integer = p.parse().map_err(|_| bad())?;
            let q: Integer = q.parse().map_err(|_| bad())?;
            if q == Integer::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// A single exported value with its full index tuple:
/// `(r, j)` for A, `(r, n)` for B, `(n, j, k)` for φ, `(n, λ, k)` for φ̃ and F.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportRecord {
    pub structure: Structure,
    pub index: Vec<i64>,
    pub value: Cell,
}

/// What a table holds, needed to read the headerless CSV and LaTeX forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    #[serde(with = "structure_name")]
    pub structure: Structure,
    pub symbolic: bool,
    pub s: Option<i64>,
    pub n: Option<u32>,
    pub lam: Option<u32>,
}

mod structure_name {
    use super::Structure;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Structure, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Structure, D::Error> {
        let name = String::deserialize(d)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}

/// Values grouped as blocks of rows. A, B and F use a single block; φ and
/// φ̃ use one block per layer `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Header,
    pub blocks: Vec<Vec<Vec<Cell>>>,
}

/// Parameters of a table request, as given on the command line.
#[derive(Debug, Clone, Default)]
pub struct TableRequest {
    pub s: Option<i64>,
    pub r_max: Option<u32>,
    pub n_max: Option<u32>,
    pub n: Option<u32>,
    pub lam: Option<u32>,
    pub symbolic: bool,
}

pub const DEFAULT_R_MAX: u32 = 8;
pub const DEFAULT_N_MAX: u32 = 4;

fn exact_rows(t: &Triangle<Integer>) -> Vec<Vec<Cell>> {
    t.rows()
        .iter()
        .map(|row| row.iter().map(|v| Cell::Exact(Rational::from_integer(v.clone()))).collect())
        .collect()
}

fn symbolic_rows(t: &Triangle<FFPoly>) -> Vec<Vec<Cell>> {
    t.rows()
        .iter()
        .map(|row| row.iter().map(|v| Cell::Symbolic(v.clone())).collect())
        .collect()
}

fn layer_blocks(layers: &TriangularLayers) -> Vec<Vec<Vec<Cell>>> {
    layers
        .layers()
        .iter()
        .map(|layer| {
            layer
                .iter()
                .map(|row| row.iter().cloned().map(Cell::Exact).collect())
                .collect()
        })
        .collect()
}

fn reject(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Err(Error::Domain(msg.to_string()))
    } else {
        Ok(())
    }
}

/// Builds the requested structure and wraps it as a [`Table`].
pub fn build_table(structure: Structure, req: &TableRequest) -> Result<Table> {
    let mut header = Header {
        structure,
        symbolic: false,
        s: None,
        n: None,
        lam: None,
    };
    let blocks = match structure {
        Structure::A | Structure::B => {
            reject(req.n_max.is_some() || req.n.is_some() || req.lam.is_some(),
                "A and B take --s/--symbolic and --rmax")?;
            let r_max = req.r_max.unwrap_or(DEFAULT_R_MAX);
            match (req.symbolic, req.s) {
                (true, Some(_)) => return Err(Error::Domain("--s conflicts with --symbolic".into())),
                (false, None) => return Err(Error::Domain("numeric table needs --s".into())),
                (true, None) => {
                    header.symbolic = true;
                    let t = if structure == Structure::A {
                        build_a_symbolic(r_max)
                    } else {
                        build_b_symbolic(r_max)
                    };
                    vec![symbolic_rows(&t)]
                }
                (false, Some(s)) => {
                    reject(s < 0, "--s must be non-negative")?;
                    header.s = Some(s);
                    let t = if structure == Structure::A {
                        build_a_numeric(s, r_max)
                    } else {
                        build_b_numeric(s, r_max)
                    };
                    vec![exact_rows(&t)]
                }
            }
        }
        Structure::Phi | Structure::PhiT => {
            reject(req.symbolic || req.s.is_some() || req.r_max.is_some() || req.n.is_some()
                || req.lam.is_some(), "phi and phiT take only --nmax")?;
            let field = build_phi(req.n_max.unwrap_or(DEFAULT_N_MAX));
            if structure == Structure::Phi {
                layer_blocks(field.layers())
            } else {
                layer_blocks(field.adjoint().layers())
            }
        }
        Structure::F => {
            reject(req.symbolic || req.s.is_some() || req.r_max.is_some() || req.n_max.is_some(),
                "F takes only --n and --lam")?;
            let n = req.n.ok_or_else(|| Error::Domain("F needs --n".into()))?;
            if let Some(lam) = req.lam {
                reject(lam > n, "F(n, lam) needs lam <= n")?;
            }
            header.n = Some(n);
            header.lam = req.lam;
            let adj = build_phi(n).adjoint();
            let lams = match req.lam {
                Some(l) => l..=l,
                None => 0..=n,
            };
            let rows = lams
                .map(|lam| {
                    (0..=i64::from(lam))
                        .map(|k| Cell::Exact(adj.get(i64::from(n), i64::from(lam), k)))
                        .collect()
                })
                .collect();
            vec![rows]
        }
    };
    let table = Table { header, blocks };
    table.validate()?;
    Ok(table)
}

impl Table {
    fn expected_row_len(&self, row: usize) -> usize {
        match self.header.structure {
            Structure::A | Structure::Phi | Structure::PhiT => row + 1,
            Structure::B => row / 2 + 1,
            Structure::F => self.header.lam.unwrap_or(0) as usize + row + 1,
        }
    }

    /// Checks that every block and row has the triangular shape of its
    /// structure.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: String| Err(Error::Parse(format!("{} table: {what}", self.header.structure)));
        let layered = matches!(self.header.structure, Structure::Phi | Structure::PhiT);
        if self.blocks.is_empty() {
            return bad("no data".into());
        }
        if !layered && self.blocks.len() != 1 {
            return bad(format!("expected one block, found {}", self.blocks.len()));
        }
        if self.header.structure == Structure::F {
            let n = self.header.n.unwrap_or(0) as usize;
            let want = if self.header.lam.is_some() { 1 } else { n + 1 };
            if self.blocks[0].len() != want {
                return bad(format!("expected {want} rows, found {}", self.blocks[0].len()));
            }
        }
        for (b, block) in self.blocks.iter().enumerate() {
            if layered && block.len() != b + 1 {
                return bad(format!("layer {b} has {} rows", block.len()));
            }
            if block.is_empty() {
                return bad("empty block".into());
            }
            for (r, row) in block.iter().enumerate() {
                let want = self.expected_row_len(r);
                if row.len() != want {
                    return bad(format!("block {b} row {r} has {} cells, expected {want}", row.len()));
                }
            }
        }
        Ok(())
    }

    /// Flattens the table into index-tagged records.
    pub fn records(&self) -> Vec<ExportRecord> {
        let structure = self.header.structure;
        let mut out = Vec::new();
        for (b, block) in self.blocks.iter().enumerate() {
            for (r, row) in block.iter().enumerate() {
                for (c, cell) in row.iter().enumerate() {
                    let (b, r, c) = (b as i64, r as i64, c as i64);
                    let index = match structure {
                        Structure::A | Structure::B => vec![r, c],
                        Structure::Phi | Structure::PhiT => vec![b, r, c],
                        Structure::F => vec![
                            i64::from(self.header.n.unwrap_or(0)),
                            i64::from(self.header.lam.unwrap_or(0)) + r,
                            c,
                        ],
                    };
                    out.push(ExportRecord {
                        structure,
                        index,
                        value: cell.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
            Format::Latex => self.to_latex(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.blocks.iter().flatten() {
            let line: Vec<String> = row.iter().map(Cell::to_plain).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let plain = |row: &Vec<Cell>| row.iter().map(Cell::to_plain).collect::<Vec<_>>();
        let data = match self.header.structure {
            Structure::Phi | Structure::PhiT => JsonData::Layers(
                self.blocks.iter().map(|b| b.iter().map(plain).collect()).collect(),
            ),
            _ => JsonData::Rows(self.blocks[0].iter().map(plain).collect()),
        };
        let doc = JsonTable {
            header: self.header.clone(),
            data,
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("table serializes");
        text.push('\n');
        text
    }

    pub fn to_latex(&self) -> String {
        let layered = matches!(self.header.structure, Structure::Phi | Structure::PhiT);
        let label_base = match self.header.structure {
            Structure::F => self.header.lam.unwrap_or(0) as usize,
            _ => 0,
        };
        let mut out = String::new();
        for (b, block) in self.blocks.iter().enumerate() {
            if layered {
                out.push_str(&format!("% n = {b}\n"));
            }
            let width = block.iter().map(Vec::len).max().unwrap_or(0);
            out.push_str(&format!("\\begin{{tabular}}{{r | {}}}\n", vec!["l"; width].join(" ")));
            let heads: Vec<String> = (0..width).map(|c| c.to_string()).collect();
            out.push_str(&format!(" & {} \\\\\n\\hline\n", heads.join(" & ")));
            for (r, row) in block.iter().enumerate() {
                let mut cells: Vec<String> = row.iter().map(Cell::to_latex).collect();
                cells.resize(width, "\\cdot".to_string());
                out.push_str(&format!("{} & {} \\\\\n", label_base + r, cells.join(" & ")));
            }
            out.push_str("\\end{tabular}\n");
        }
        out
    }

    pub fn parse(format: Format, text: &str, header: &Header) -> Result<Table> {
        match format {
            Format::Csv => Self::from_csv(header, text),
            Format::Json => Self::from_json(text),
            Format::Latex => Self::from_latex(header, text),
        }
    }

    fn regroup(header: &Header, rows: Vec<Vec<Cell>>) -> Result<Table> {
        let blocks = match header.structure {
            Structure::Phi | Structure::PhiT => {
                let mut blocks = Vec::new();
                let mut rest = rows.into_iter();
                let mut size = 1;
                loop {
                    let block: Vec<Vec<Cell>> = rest.by_ref().take(size).collect();
                    if block.is_empty() {
                        break;
                    }
                    if block.len() != size {
                        return Err(Error::Parse(format!("layer {} is incomplete", size - 1)));
                    }
                    blocks.push(block);
                    size += 1;
                }
                blocks
            }
            _ => vec![rows],
        };
        let table = Table {
            header: header.clone(),
            blocks,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn from_csv(header: &Header, text: &str) -> Result<Table> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                line.split(',')
                    .map(|cell| Cell::parse_plain(cell.trim(), header.symbolic))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::regroup(header, rows)
    }

    pub fn from_json(text: &str) -> Result<Table> {
        let doc: JsonTable =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("json: {e}")))?;
        let symbolic = doc.header.symbolic;
        let parse_row = |row: Vec<String>| {
            row.iter()
                .map(|c| Cell::parse_plain(c, symbolic))
                .collect::<Result<Vec<_>>>()
        };
        let blocks = match doc.data {
            JsonData::Rows(rows) => vec![rows.into_iter().map(parse_row).collect::<Result<Vec<_>>>()?],
            JsonData::Layers(layers) => layers
                .into_iter()
                .map(|layer| layer.into_iter().map(parse_row).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        };
        let table = Table {
            header: doc.header,
            blocks,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn from_latex(header: &Header, text: &str) -> Result<Table> {
        let mut rows = Vec::new();
        let mut in_body = false;
        let mut seen_heading = false;
        for line in text.lines().map(str::trim) {
            if line.starts_with("\\begin{tabular}") {
                in_body = true;
                seen_heading = false;
                continue;
            }
            if line.starts_with("\\end{tabular}") {
                in_body = false;
                continue;
            }
            if !in_body || line.is_empty() || line.starts_with('%') || line == "\\hline" {
                continue;
            }
            if !seen_heading {
                seen_heading = true;
                continue;
            }
            let body = line
                .strip_suffix("\\\\")
                .ok_or_else(|| Error::Parse(format!("row without terminator: {line:?}")))?;
            let cells = body
                .split('&')
                .skip(1)
                .map(str::trim)
                .take_while(|c| *c != "\\cdot")
                .map(|c| Cell::parse_latex(c, header.symbolic))
                .collect::<Result<Vec<_>>>()?;
            rows.push(cells);
        }
        Self::regroup(header, rows)
    }

    /// Integer triangle held by an exact A or B table.
    pub fn to_integer_triangle(&self) -> Option<Triangle<Integer>> {
        let form = self.triangle_form()?;
        let rows = self.blocks[0]
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Cell::Exact(q) if q.is_integer() => Some(q.to_integer()),
                        _ => None,
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Triangle::from_rows(form, rows)
    }

    /// Polynomial triangle held by a symbolic A or B table.
    pub fn to_symbolic_triangle(&self) -> Option<Triangle<FFPoly>> {
        let form = self.triangle_form()?;
        let rows = self.blocks[0]
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Cell::Symbolic(p) => Some(p.clone()),
                        _ => None,
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        Triangle::from_rows(form, rows)
    }

    /// Layers held by a φ or φ̃ table.
    pub fn to_layers(&self) -> Option<TriangularLayers> {
        if !matches!(self.header.structure, Structure::Phi | Structure::PhiT) {
            return None;
        }
        let layers = self
            .blocks
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|c| match c {
                                Cell::Exact(q) => Some(q.clone()),
                                Cell::Symbolic(_) => None,
                            })
                            .collect::<Option<Vec<_>>>()
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        TriangularLayers::from_layers(layers)
    }

    fn triangle_form(&self) -> Option<Form> {
        match self.header.structure {
            Structure::A => Some(Form::Full),
            Structure::B => Some(Form::Condensed),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTable {
    #[serde(flatten)]
    header: Header,
    data: JsonData,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonData {
    Rows(Vec<Vec<String>>),
    Layers(Vec<Vec<Vec<String>>>),
}

/// For each even `r` in `2..=r_max`, the coefficients of `(s)_1, (s)_2, …`
/// in `A(s, r, 0)`, comma separated.
pub fn oeis_rows(r_max: u32) -> Vec<String> {
    (2..=r_max)
        .step_by(2)
        .map(|r| {
            let p = a0_column_symbolic(r);
            let top = p.degree().unwrap_or(0);
            (1..=top)
                .map(|k| p.coeff(k).to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::frac;

    fn req() -> TableRequest {
        TableRequest::default()
    }

    #[test]
    fn fraction_rendering_round_trips() {
        for q in [frac(1, 6), frac(-3, 2), frac(4, 1), frac(0, 5)] {
            let text = q.to_string();
            assert!(!text.contains(' '));
            assert_eq!(parse_rational(&text).unwrap(), q);
            let cell = Cell::Exact(q.clone());
            assert_eq!(Cell::parse_latex(&cell.to_latex(), false).unwrap(), cell);
        }
        assert_eq!(frac(4, 1).to_string(), "4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn symbolic_latex_contains_table_cell() {
        let t = build_table(Structure::A, &TableRequest { symbolic: true, r_max: Some(4), ..req() })
            .unwrap();
        let latex = t.to_latex();
        assert!(latex.contains("3\\,(s)_2 + s"), "{latex}");
        assert!(latex.contains("\\cdot"));
    }

    #[test]
    fn phi_json_contains_corner() {
        let t = build_table(Structure::Phi, &TableRequest { n_max: Some(1), ..req() }).unwrap();
        let json = t.to_json();
        assert!(json.contains("\"1/6\""), "{json}");
        assert_eq!(Table::from_json(&json).unwrap(), t);
    }

    #[test]
    fn f_csv_row() {
        let t = build_table(Structure::F, &TableRequest { n: Some(1), lam: Some(1), ..req() })
            .unwrap();
        assert_eq!(t.to_csv(), "1/2,1/6\n");
        let all = build_table(Structure::F, &TableRequest { n: Some(2), ..req() }).unwrap();
        assert_eq!(all.to_csv(), "0\n1/24,1/120\n1/8,1/12,1/72\n");
        let recs = all.records();
        assert_eq!(recs.last().unwrap().index, vec![2, 2, 2]);
    }

    #[test]
    fn invalid_requests() {
        assert!(build_table(Structure::A, &req()).is_err());
        assert!(build_table(Structure::A, &TableRequest { s: Some(2), symbolic: true, ..req() }).is_err());
        assert!(build_table(Structure::A, &TableRequest { s: Some(-1), ..req() }).is_err());
        assert!(build_table(Structure::F, &req()).is_err());
        assert!(build_table(Structure::F, &TableRequest { n: Some(1), lam: Some(2), ..req() }).is_err());
        assert!(build_table(Structure::Phi, &TableRequest { s: Some(1), ..req() }).is_err());
        assert!("Q".parse::<Structure>().is_err());
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn every_format_round_trips() {
        let requests = [
            (Structure::A, TableRequest { s: Some(3), r_max: Some(12), ..req() }),
            (Structure::A, TableRequest { symbolic: true, r_max: Some(12), ..req() }),
            (Structure::B, TableRequest { s: Some(8), r_max: Some(12), ..req() }),
            (Structure::B, TableRequest { symbolic: true, r_max: Some(12), ..req() }),
            (Structure::Phi, TableRequest { n_max: Some(10), ..req() }),
            (Structure::PhiT, TableRequest { n_max: Some(6), ..req() }),
            (Structure::F, TableRequest { n: Some(5), ..req() }),
            (Structure::F, TableRequest { n: Some(5), lam: Some(3), ..req() }),
        ];
        for (structure, request) in requests {
            let table = build_table(structure, &request).unwrap();
            for format in [Format::Csv, Format::Json, Format::Latex] {
                let text = table.render(format);
                let back = Table::parse(format, &text, &table.header).unwrap();
                assert_eq!(back, table, "{structure} {format:?}");
            }
        }
    }

    #[test]
    fn tables_convert_back_to_domain_objects() {
        let a = build_a_numeric(4, 8);
        let t = build_table(Structure::A, &TableRequest { s: Some(4), ..req() }).unwrap();
        assert_eq!(t.to_integer_triangle().unwrap(), a);
        let b = build_table(Structure::B, &TableRequest { symbolic: true, ..req() }).unwrap();
        assert_eq!(b.to_symbolic_triangle().unwrap(), build_b_symbolic(8));
        let p = build_table(Structure::Phi, &req()).unwrap();
        assert_eq!(p.to_layers().unwrap(), build_phi(4).layers().clone());
        assert!(p.to_integer_triangle().is_none());
    }

    #[test]
    fn malformed_input_is_rejected() {
        let header = Header { structure: Structure::A, symbolic: false, s: Some(1), n: None, lam: None };
        assert!(Table::from_csv(&header, "1\n0,1,2\n").is_err());
        assert!(Table::from_csv(&header, "1\n0,x\n").is_err());
        let phi = Header { structure: Structure::Phi, ..header.clone() };
        assert!(Table::from_csv(&phi, "1\n1/2\n").is_err());
        assert!(Table::from_json("{}").is_err());
    }

    #[test]
    fn oeis_examples() {
        assert_eq!(oeis_rows(8), vec!["1", "1,3", "1,15,15", "1,63,210,105"]);
        assert_eq!(oeis_rows(3), vec!["1"]);
    }
}
