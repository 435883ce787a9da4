//! Comparisons of generated invariants against the published tables.

use onepoint::arith::rational::format_rational;
use onepoint::generator::{catalog, invariants, InvariantTable};
use onepoint::Rational;

use super::figures::*;
use super::{eval_q, q, qlist, qvec, specializations};

fn table(problem: &str, d_max: i64, g_max: i64) -> InvariantTable {
    let p = catalog(problem).unwrap();
    let t = invariants(&p, p.stride() as i64 * d_max, g_max).unwrap();
    t.relabel(p.stride() as i64)
}

fn compare(label: &str, t: &InvariantTable, g: i64, d: i64, want: &Rational, out: &mut Vec<String>) {
    let got = t.get(g, d).cloned().unwrap_or_else(|| q("0"));
    if &got != want {
        out.push(format!(
            "{label}: (g={g}, d={d}) expected {} got {}",
            format_rational(want),
            format_rational(&got)
        ));
    }
}

/// Ribbon graph numbers `a_g(d)`, `d ≤ 6`.
pub fn ribbon_mismatches() -> Vec<String> {
    let t = table("ribbon", 6, 3);
    let mut out = Vec::new();
    for &(d, g, a, _) in RIBBON_AND_DOUBLE_DESSIN {
        compare("ribbon", &t, g, d, &q(a), &mut out);
    }
    out
}

/// `q`-polynomial columns evaluated at each specialization, against the
/// series-indexed table of `family(q1,…)`.
fn double_mismatches<'a>(
    family: impl Fn(&str) -> String,
    rows: impl Iterator<Item = (i64, i64, &'a str)> + Clone,
    d_max: i64,
    g_max: i64,
) -> Vec<String> {
    let mut out = Vec::new();
    for spec in specializations() {
        let name = family(&qlist(&spec));
        let t = invariants(&catalog(&name).unwrap(), d_max, g_max).unwrap();
        for (d, g, poly) in rows.clone() {
            compare(&name, &t, g, d, &eval_q(poly, &qvec(&spec)), &mut out);
        }
    }
    out
}

pub fn double_dessin_mismatches() -> Vec<String> {
    let rows = RIBBON_AND_DOUBLE_DESSIN.iter().map(|&(d, g, _, b)| (d, g, b));
    double_mismatches(|qs| format!("double-dessin({qs})"), rows, 6, 3)
}

/// Double BMS-3 polynomials `b̄³_g(d)`, `d ≤ 5`.
pub fn double_bms3_mismatches() -> Vec<String> {
    let rows = DOUBLE_BMS3.iter().map(|&(d, g, b)| (d, g, b));
    double_mismatches(|qs| format!("double-bms(3;{qs})"), rows, 5, 4)
}

/// Simple Hurwitz numbers `h_g(d)`, `d ≤ 5`, `g ≤ 2`.
pub fn hurwitz_mismatches() -> Vec<String> {
    let t = table("hurwitz", 5, 2);
    let mut out = Vec::new();
    for &(d, g, h, _) in HURWITZ {
        compare("hurwitz", &t, g, d, &q(h), &mut out);
    }
    out
}

pub fn double_hurwitz_mismatches() -> Vec<String> {
    let rows = HURWITZ.iter().map(|&(d, g, _, b)| (d, g, b));
    double_mismatches(|qs| format!("double-hurwitz({qs})"), rows, 5, 2)
}

/// Entries of the monotone table at `d = 1`, `g ≥ 1`, printed as 1 although
/// no transposition exists in `S_1`.
pub fn monotone_flagged(d: i64, g: i64) -> bool {
    d == 1 && g >= 1
}

/// Monotone Hurwitz numbers `m_g(d)`, `d ≤ 5`, `g ≤ 2`. Returns mismatches
/// and notes for the flagged entries, where 0 is expected.
pub fn monotone_mismatches() -> (Vec<String>, Vec<String>) {
    let t = table("monotone", 5, 2);
    let mut out = Vec::new();
    let mut notes = Vec::new();
    for &(d, g, m, _) in MONOTONE {
        if monotone_flagged(d, g) {
            let got = t.get(g, d).cloned().unwrap_or_else(|| q("0"));
            notes.push(format!(
                "m_{g}({d}): table prints {m}, generated {}",
                format_rational(&got)
            ));
            compare("monotone (flagged)", &t, g, d, &q("0"), &mut out);
        } else {
            compare("monotone", &t, g, d, &q(m), &mut out);
        }
    }
    (out, notes)
}

pub fn double_monotone_mismatches() -> Vec<String> {
    let rows = MONOTONE.iter().map(|&(d, g, _, b)| (d, g, b));
    double_mismatches(|qs| format!("double-monotone({qs})"), rows, 5, 2)
}
