//! Brute-force enumeration against the generator.

use onepoint::generator::{catalog, invariants, InvariantTable};
use onepoint::oracle::{
    bms_counts, dessin_counts, hurwitz_factorizations, monotone_factorizations, ribbon_gluings, GluingCount,
};

fn table(problem: &str, d_max: i64, g_max: i64) -> InvariantTable {
    let p = catalog(problem).expect("catalog problem");
    let s = p.stride() as i64;
    invariants(&p, s * d_max, g_max).expect("table").relabel(s)
}

fn compare(label: &str, c: &GluingCount, t: &InvariantTable, out: &mut Vec<String>) {
    for g in 0..=t.g_max {
        let want = t.get(g, c.d).cloned().unwrap_or_default();
        if c.get(g) != want {
            out.push(format!("{label} d={} g={g}: oracle {} generator {want}", c.d, c.get(g)));
        }
    }
    if c.genus_histogram.keys().any(|&g| g > t.g_max) {
        out.push(format!("{label} d={}: oracle genus beyond table", c.d));
    }
}

pub fn ribbon_failures() -> Vec<String> {
    let t = table("ribbon", 6, 3);
    let mut out = Vec::new();
    for d in 1..=6 {
        compare("ribbon", &ribbon_gluings(d).expect("in range"), &t, &mut out);
    }
    out
}

pub fn dessin_failures() -> Vec<String> {
    let t = table("dessin", 5, 3);
    let mut out = Vec::new();
    for d in 1..=5 {
        compare("dessin", &dessin_counts(d).expect("in range"), &t, &mut out);
    }
    out
}

pub fn bms3_failures() -> Vec<String> {
    let t = table("bms(3)", 4, 3);
    let mut out = Vec::new();
    for d in 1..=4 {
        compare("bms(3)", &bms_counts(3, d).expect("in range"), &t, &mut out);
    }
    out
}

pub fn monotone_failures() -> Vec<String> {
    let t = table("monotone", 5, 2);
    let mut out = Vec::new();
    for d in 1..=5 {
        for g in 0..=2 {
            let o = monotone_factorizations(d, g).expect("in range");
            if Some(&o) != t.get(g, d) {
                out.push(format!("monotone d={d} g={g}: oracle {o} generator {:?}", t.get(g, d)));
            }
        }
    }
    out
}

pub fn hurwitz_failures() -> Vec<String> {
    let t = table("hurwitz", 4, 2);
    let mut out = Vec::new();
    for d in 1..=4 {
        for g in 0..=2 {
            let o = hurwitz_factorizations(d, g).expect("in range");
            if Some(&o) != t.get(g, d) {
                out.push(format!("hurwitz d={d} g={g}: oracle {o} generator {:?}", t.get(g, d)));
            }
        }
    }
    out
}
