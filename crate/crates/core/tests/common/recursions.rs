//! Recursion recovery and verification against generated tables.

use onepoint::generator::{catalog, invariants, InvariantTable};
use onepoint::recursion::{
    catalog_recursion, no_recursion_diagnostic, search_minimal, DiagnosticReport, DEFAULT_BUFFER,
};

/// `(catalog recursion, problem, series terms)` recovered by `search_minimal`.
pub const RECOVERIES: [(&str, &str, usize); 3] = [
    ("harer-zagier", "ribbon", 24),
    ("do-norbury", "dessin", 24),
    ("monotone", "monotone", 20),
];

/// `Ok(pretty form)` when the search with `R ≤ 3, D ≤ 4` returns the
/// catalog recursion.
pub fn recover(name: &str, problem: &str, n: usize) -> Result<String, String> {
    let p = catalog(problem).map_err(|e| e.to_string())?;
    let cat = catalog_recursion(name).map_err(|e| e.to_string())?;
    let out = search_minimal(&p, 3, 4, n, DEFAULT_BUFFER).map_err(|e| e.to_string())?;
    if out.relation.is_none() {
        return Err(format!("{name}: no relation within R <= 3, D <= 4"));
    }
    if out.gd_forms.len() != 1 || !out.gd_forms[0].equivalent(&cat.recursion) {
        let got: Vec<String> = out.gd_forms.iter().map(|g| g.pretty(cat.symbol).to_string()).collect();
        return Err(format!("{name}: recovered {got:?}"));
    }
    Ok(out.gd_forms[0].pretty(cat.symbol).to_string())
}

/// Table of relabelled invariants `n_g(s·d)`, `d ≤ d_max`.
pub fn relabelled_table(problem: &str, d_max: i64, g_max: i64) -> InvariantTable {
    let p = catalog(problem).expect("catalog problem");
    let s = p.stride() as i64;
    invariants(&p, s * d_max, g_max).expect("rational preset").relabel(s)
}

/// Checks a catalog recursion on its problem's table; returns the number of
/// points checked or the failing `(g, d)`.
pub fn table_check(name: &str, d_max: i64, g_max: i64) -> Result<usize, String> {
    let cat = catalog_recursion(name).map_err(|e| e.to_string())?;
    let table = relabelled_table(cat.problem, d_max, g_max);
    let (checked, failures) = cat.recursion.check_table(&table);
    if checked == 0 {
        return Err(format!("{name}: no applicable points"));
    }
    if !failures.is_empty() {
        return Err(format!("{name}: fails at (g, d) in {failures:?}"));
    }
    Ok(checked)
}

/// The bounded diagnostic with `R ≤ 4, D ≤ 6, H ≤ 3` on a `d ≤ 14, g ≤ 5`
/// table.
pub fn diagnostic(problem: &str) -> DiagnosticReport {
    let p = catalog(problem).expect("catalog problem");
    let table = invariants(&p, 14, 5).expect("table");
    no_recursion_diagnostic(&table, 4, 6, 3, DEFAULT_BUFFER).expect("diagnostic")
}
