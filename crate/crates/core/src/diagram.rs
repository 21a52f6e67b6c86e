//! The p-by-q residue diagram of a coprime pair.
//!
//! Cell `(alpha, beta)` — column `alpha` in `[0, q)`, row `beta` in `[0, p)`
//! — holds `(alpha*p + beta*q) mod pq`.  Rows are rendered with `beta`
//! decreasing from top to bottom, so the origin sits at the lower left.
//!
//! Two corner regions carry the non-zero coefficients of the pair's
//! inclusion-exclusion polynomial:
//!
//! - the lower-left block `alpha < rho`, `beta < sigma` (the `+1` exponents,
//!   `rho*sigma` cells, all semigroup members), and
//! - the upper-right block `alpha ≥ rho`, `beta ≥ sigma` (the `-1`
//!   exponents, `rho*sigma - 1` cells, every one a gap).
//!
//! A cell is a gap of the pair's semigroup exactly when its raw value
//! `alpha*p + beta*q` exceeds `pq`.  The top-right cell always shows the
//! Frobenius number.

use serde::Serialize;

use crate::cyclo::BinaryPair;
use crate::error::Result;

/// Which corner block, if any, a cell belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// `alpha < rho` and `beta < sigma`: a `+1` coefficient exponent.
    LowerLeft,
    /// `alpha ≥ rho` and `beta ≥ sigma`: a `-1` coefficient exponent.
    UpperRight,
    /// Neither corner: coefficient zero.
    Neutral,
}

/// One cell of the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    /// Column index, `0 ≤ alpha < q`.
    pub alpha: u64,
    /// Row index, `0 ≤ beta < p`.
    pub beta: u64,
    /// `alpha*p + beta*q` before reduction.
    pub raw: u64,
    /// `raw mod pq`, the displayed value.
    pub value: u64,
    /// Corner-block classification.
    pub region: Region,
    /// True when `value` is a gap of the pair's semigroup, equivalently
    /// when `raw > pq`.
    pub is_gap: bool,
}

/// The exponent sets read off the two corner blocks, each sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerExponents {
    /// Values of lower-left cells: the `+1` exponents.
    pub plus: Vec<u64>,
    /// Values of upper-right cells: the `-1` exponents.
    pub minus: Vec<u64>,
}

/// Output format for [`Diagram::render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramFormat {
    /// Fixed-width text with a corner rule splitting the four blocks.
    Text,
    /// A GitHub-flavored Markdown table.
    Markdown,
    /// A single JSON document with full cell metadata.
    Json,
}

/// Rendering controls.
#[derive(Debug, Clone, Copy)]
pub struct RenderOptions {
    /// Highlight gap cells (`*v*` in text, bold in Markdown; JSON always
    /// carries `is_gap` explicitly).
    pub mark_gaps: bool,
    /// Target format.
    pub format: DiagramFormat,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { mark_gaps: false, format: DiagramFormat::Text }
    }
}

/// Serializable view of the whole diagram.
#[derive(Debug, Clone, Serialize)]
struct DiagramRecord<'a> {
    p: u64,
    q: u64,
    rho: u64,
    sigma: u64,
    frobenius: i64,
    /// Cells in reading order: `beta` descending, then `alpha` ascending.
    cells: Vec<&'a Cell>,
}

/// The full residue diagram of a coprime pair.
#[derive(Debug, Clone)]
pub struct Diagram {
    pair: BinaryPair,
    /// `rows[beta][alpha]`, with `beta` ascending in storage.
    rows: Vec<Vec<Cell>>,
}

impl Diagram {
    /// Build the diagram for a coprime pair (`p` rows by `q` columns).
    pub fn new(p: u64, q: u64) -> Result<Self> {
        Ok(Self::for_pair(&BinaryPair::new(p, q)?))
    }

    /// Build the diagram for an already-validated pair.
    pub fn for_pair(pair: &BinaryPair) -> Self {
        let (p, q) = (pair.p(), pair.q());
        let (rho, sigma) = (pair.rho(), pair.sigma());
        let rows = (0..p)
            .map(|beta| {
                (0..q)
                    .map(|alpha| {
                        let raw = alpha * p + beta * q;
                        let region = if alpha < rho && beta < sigma {
                            Region::LowerLeft
                        } else if alpha >= rho && beta >= sigma {
                            Region::UpperRight
                        } else {
                            Region::Neutral
                        };
                        Cell {
                            alpha,
                            beta,
                            raw,
                            value: raw % (p * q),
                            region,
                            is_gap: raw > p * q,
                        }
                    })
                    .collect()
            })
            .collect();
        Diagram { pair: *pair, rows }
    }

    /// The underlying pair.
    pub fn pair(&self) -> &BinaryPair {
        &self.pair
    }

    /// The cell at `(alpha, beta)`.
    pub fn cell(&self, alpha: u64, beta: u64) -> &Cell {
        &self.rows[beta as usize][alpha as usize]
    }

    /// All cells in reading order (`beta` descending, `alpha` ascending).
    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.rows.iter().rev().flatten()
    }

    /// The `+1` and `-1` exponent sets from the corner blocks, sorted.
    pub fn corner_exponents(&self) -> CornerExponents {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for cell in self.rows.iter().flatten() {
            match cell.region {
                Region::LowerLeft => plus.push(cell.value),
                Region::UpperRight => minus.push(cell.value),
                Region::Neutral => {}
            }
        }
        plus.sort_unstable();
        minus.sort_unstable();
        CornerExponents { plus, minus }
    }

    /// Render to the requested format.  All formats are deterministic.
    pub fn render(&self, opts: &RenderOptions) -> String {
        match opts.format {
            DiagramFormat::Text => self.render_text(opts.mark_gaps),
            DiagramFormat::Markdown => self.render_markdown(opts.mark_gaps),
            DiagramFormat::Json => self.render_json(),
        }
    }

    fn cell_text(cell: &Cell, mark_gaps: bool, width: usize) -> String {
        let body = if mark_gaps && cell.is_gap {
            format!("*{}*", cell.value)
        } else {
            cell.value.to_string()
        };
        format!("{body:>width$}")
    }

    /// Fixed-width grid with a `|` after column `rho - 1` and a dashed rule
    /// under row `sigma`, so the four corner blocks are visually split.
    fn render_text(&self, mark_gaps: bool) -> String {
        let (p, q) = (self.pair.p(), self.pair.q());
        let (rho, sigma) = (self.pair.rho(), self.pair.sigma());
        let digits = (p * q - 1).to_string().len();
        let width = if mark_gaps { digits + 2 } else { digits };
        let mut lines = Vec::with_capacity(p as usize + 1);
        for beta in (0..p).rev() {
            let mut tokens: Vec<String> = Vec::with_capacity(q as usize + 1);
            for alpha in 0..q {
                if alpha == rho {
                    tokens.push("|".to_string());
                }
                tokens.push(Self::cell_text(self.cell(alpha, beta), mark_gaps, width));
            }
            lines.push(tokens.join(" "));
            if beta == sigma {
                // Rule between the beta ≥ sigma rows and the beta < sigma rows.
                let bar_at = rho as usize * (width + 1);
                let total = q as usize * (width + 1) + 1;
                let rule: String =
                    (0..total).map(|i| if i == bar_at { '+' } else { '-' }).collect();
                lines.push(rule);
            }
        }
        lines.join("\n")
    }

    /// GitHub-flavored Markdown table, one row per `beta` (descending), with
    /// gap values bold when requested.
    fn render_markdown(&self, mark_gaps: bool) -> String {
        let (p, q) = (self.pair.p(), self.pair.q());
        let mut lines = Vec::with_capacity(p as usize + 3);
        let header: Vec<String> =
            std::iter::once("b\\a".to_string()).chain((0..q).map(|a| a.to_string())).collect();
        lines.push(format!("| {} |", header.join(" | ")));
        lines.push(format!("|{}|", vec![" --- "; q as usize + 1].join("|")));
        for beta in (0..p).rev() {
            let mut cols = vec![beta.to_string()];
            for alpha in 0..q {
                let cell = self.cell(alpha, beta);
                cols.push(if mark_gaps && cell.is_gap {
                    format!("**{}**", cell.value)
                } else {
                    cell.value.to_string()
                });
            }
            lines.push(format!("| {} |", cols.join(" | ")));
        }
        lines.push(String::new());
        lines.push(format!(
            "corner blocks: `alpha < {rho}` x `beta < {sigma}` (+1) and `alpha >= {rho}` x `beta >= {sigma}` (-1)",
            rho = self.pair.rho(),
            sigma = self.pair.sigma(),
        ));
        lines.join("\n")
    }

    /// Compact JSON document with per-cell metadata, cells in reading order.
    fn render_json(&self) -> String {
        let record = DiagramRecord {
            p: self.pair.p(),
            q: self.pair.q(),
            rho: self.pair.rho(),
            sigma: self.pair.sigma(),
            frobenius: self.pair.frobenius(),
            cells: self.cells().collect(),
        };
        serde_json::to_string(&record).expect("diagram record serializes")
    }
}
