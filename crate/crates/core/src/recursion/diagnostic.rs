//! Bounded search for a `(g, d)` recursion directly on a table of rational
//! invariants. Used where no exact `ℚ(ℏ)` series is available.

use std::fmt;

use super::GDRecursion;
use crate::arith::nullspace;
use crate::arith::rational::Rational;
use crate::error::RecursionError;
use crate::generator::InvariantTable;
use crate::QPoly;

/// Shape of one ansatz: genus shifts `≤ h`, index shifts `≤ r`, degree `≤ deg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ansatz {
    pub r: usize,
    pub deg: usize,
    pub h: usize,
    pub equations: usize,
    pub unknowns: usize,
}

#[derive(Clone, Debug)]
pub struct DiagnosticReport {
    pub bounds: (usize, usize, usize),
    pub buffer: usize,
    pub searched: Vec<Ansatz>,
    /// Shapes with fewer than `unknowns + buffer` equations in the table.
    pub skipped: Vec<Ansatz>,
    pub found: Option<(Ansatz, GDRecursion)>,
}

impl fmt::Display for DiagnosticReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, d, h) = self.bounds;
        match &self.found {
            Some((a, rec)) => write!(
                f,
                "recursion found at R={}, D={}, H={}: {}",
                a.r,
                a.deg,
                a.h,
                rec.pretty("n")
            ),
            None => write!(
                f,
                "no recursion found within bounds R<={r}, D<={d}, H<={h} ({} shapes solved, {} skipped for lack of data)",
                self.searched.len(),
                self.skipped.len()
            ),
        }
    }
}

/// Equations `(g, d)` at which every `n_{g-i}(d-j)` is in the table, in
/// `(d, g)` order.
fn equation_points(table: &InvariantTable, r: usize, h: usize) -> Vec<(i64, i64)> {
    let mut pts = Vec::new();
    for d in (r as i64 + 1)..=table.d_max {
        for g in (h as i64)..=table.g_max {
            pts.push((g, d));
        }
    }
    pts
}

fn row(table: &InvariantTable, g: i64, d: i64, a: &Ansatz) -> Option<Vec<Rational>> {
    let dd = Rational::from_integer(d.into());
    let mut out = Vec::with_capacity(a.unknowns);
    for i in 0..=a.h {
        for j in 0..=a.r {
            let mut x = table.get(g - i as i64, d - j as i64)?.clone();
            for _ in 0..=a.deg {
                out.push(x.clone());
                x *= &dd;
            }
        }
    }
    Some(out)
}

/// Searches shapes in increasing `R`, then `D`, then `H`, solving only
/// systems with at least `buffer` more equations than unknowns, so that any
/// solution is overdetermined by the table.
pub fn no_recursion_diagnostic(
    table: &InvariantTable,
    r_max: usize,
    d_max: usize,
    h_max: usize,
    buffer: usize,
) -> Result<DiagnosticReport, RecursionError> {
    let mut report = DiagnosticReport {
        bounds: (r_max, d_max, h_max),
        buffer,
        searched: Vec::new(),
        skipped: Vec::new(),
        found: None,
    };
    for r in 0..=r_max {
        for deg in 0..=d_max {
            for h in 0..=h_max {
                let pts = equation_points(table, r, h);
                let unknowns = (h + 1) * (r + 1) * (deg + 1);
                let a = Ansatz {
                    r,
                    deg,
                    h,
                    equations: pts.len(),
                    unknowns,
                };
                if pts.len() < unknowns + buffer {
                    report.skipped.push(a);
                    continue;
                }
                let rows: Vec<Vec<Rational>> = pts
                    .iter()
                    .map(|&(g, d)| {
                        row(table, g, d, &a).ok_or(RecursionError::InsufficientData {
                            needed: unknowns + buffer,
                            got: pts.len(),
                        })
                    })
                    .collect::<Result<_, _>>()?;
                report.searched.push(a);
                if let Some(v) = nullspace(&rows).into_iter().next() {
                    let mut terms = Vec::new();
                    let mut chunks = v.chunks(deg + 1);
                    for i in 0..=h {
                        for j in 0..=r {
                            let c = chunks.next().expect("unknown layout");
                            terms.push(((i, j), QPoly::new(c.to_vec())));
                        }
                    }
                    let rec = GDRecursion::new(terms)?;
                    report.found = Some((a, rec));
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}
