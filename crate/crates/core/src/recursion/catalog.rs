//! Known 1-point recursions, stored as literal data.

use super::GDRecursion;
use crate::arith::rational::int;
use crate::error::RecursionError;
use crate::QPoly;

#[derive(Clone, Debug)]
pub struct NamedRecursion {
    pub name: &'static str,
    /// Catalog problem whose relabelled invariants satisfy it.
    pub problem: &'static str,
    pub symbol: &'static str,
    pub recursion: GDRecursion,
}

/// `Π (a d + b)` times `c`.
fn poly(c: i64, factors: &[(i64, i64)]) -> QPoly {
    factors.iter().fold(QPoly::constant(int(c)), |acc, &(a, b)| {
        acc * QPoly::new(vec![int(b), int(a)])
    })
}

fn dense(cs: &[i64]) -> QPoly {
    QPoly::new(cs.iter().map(|&c| int(c)).collect())
}

fn build(terms: Vec<((usize, usize), QPoly)>) -> GDRecursion {
    GDRecursion::new(terms).expect("catalog recursions are nonzero")
}

pub fn catalog_recursions() -> Vec<NamedRecursion> {
    let harer_zagier = build(vec![
        ((0, 0), poly(1, &[(1, 1)])),
        ((0, 1), poly(-2, &[(2, -1)])),
        ((1, 2), poly(-1, &[(2, -1), (1, -1), (2, -3)])),
    ]);
    let do_norbury = build(vec![
        ((0, 0), poly(1, &[(1, 1)])),
        ((0, 1), poly(-2, &[(2, -1)])),
        ((1, 2), poly(-1, &[(1, -1), (1, -1), (1, -2)])),
    ]);
    let hypermap3 = build(vec![
        ((0, 0), poly(2, &[(1, 0), (2, 1)])),
        ((0, 1), poly(-3, &[(3, -1), (3, -2)])),
        ((1, 1), poly(-1, &[(3, -1), (3, -2)]) * dense(&[2, -8, 9])),
        ((2, 2), poly(1, &[(1, -1), (3, -1), (3, -2), (3, -4), (3, -5), (6, -7)])),
        (
            (3, 3),
            poly(
                -1,
                &[(1, -1), (1, -2), (3, -1), (3, -2), (3, -4), (3, -5), (3, -7), (3, -8)],
            ),
        ),
    ]);
    let bms3 = build(vec![
        ((0, 0), poly(2, &[(1, 0), (2, 1), (3, -4)])),
        ((0, 1), poly(-3, &[(3, -1), (3, -2), (3, -4)])),
        ((1, 1), poly(-1, &[(1, -1), (3, -2)]) * dense(&[-2, 14, -22, 9])),
        (
            (2, 2),
            poly(1, &[(1, -1), (1, -1), (1, -2)]) * dense(&[26, -127, 172, -93, 18]),
        ),
        (
            (3, 3),
            poly(
                -1,
                &[
                    (1, -1),
                    (1, -1),
                    (1, -2),
                    (1, -2),
                    (1, -2),
                    (1, -2),
                    (1, -2),
                    (1, -3),
                    (3, -1),
                ],
            ),
        ),
    ]);
    let monotone = build(vec![
        ((0, 0), poly(1, &[(1, 0)])),
        ((0, 1), poly(-2, &[(2, -3)])),
        ((1, 0), poly(-1, &[(1, 0), (1, -1), (1, -1)])),
    ]);
    vec![
        NamedRecursion {
            name: "harer-zagier",
            problem: "ribbon",
            symbol: "a",
            recursion: harer_zagier,
        },
        NamedRecursion {
            name: "do-norbury",
            problem: "dessin",
            symbol: "b",
            recursion: do_norbury,
        },
        NamedRecursion {
            name: "3-hypermap",
            problem: "hypermap(3)",
            symbol: "a^3",
            recursion: hypermap3,
        },
        NamedRecursion {
            name: "3-bms",
            problem: "bms(3)",
            symbol: "b^3",
            recursion: bms3,
        },
        NamedRecursion {
            name: "monotone",
            problem: "monotone",
            symbol: "m",
            recursion: monotone,
        },
    ]
}

pub fn catalog_recursion(name: &str) -> Result<NamedRecursion, RecursionError> {
    catalog_recursions()
        .into_iter()
        .find(|r| r.name == name)
        .ok_or_else(|| RecursionError::UnknownRecursion(name.to_string()))
}
