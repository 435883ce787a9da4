//! Published tables of 1-point invariants, transcribed verbatim.

#![allow(dead_code)]

/// `(d, g, a_g(d), b̄_g(d))`; `a_g(d)` lives at series index `2d`.
pub const RIBBON_AND_DOUBLE_DESSIN: &[(i64, i64, &str, &str)] = &[
    (1, 0, "1", "q1"),
    (2, 0, "2", "q2+q1^2"),
    (2, 1, "1", "0"),
    (3, 0, "5", "q3+3q2q1+q1^3"),
    (3, 1, "10", "q3"),
    (4, 0, "14", "q4+4q3q1+2q2^2+6q2q1^2+q1^4"),
    (4, 1, "70", "5q4+4q3q1+q2^2"),
    (4, 2, "21", "0"),
    (5, 0, "42", "q5+5q4q1+5q3q2+10q3q1^2+10q2^2q1+10q2q1^3+q1^5"),
    (5, 1, "420", "15q5+25q4q1+15q3q2+10q3q1^2+5q2^2q1"),
    (5, 2, "483", "8q5"),
    (
        6,
        0,
        "132",
        "q6+6q5q1+6q4q2+15q4q1^2+3q3^2+30q3q2q1+20q3q1^3+5q2^3+30q2^2q1^2+15q2q1^4+q1^6",
    ),
    (
        6,
        1,
        "2310",
        "35q6+90q5q1+60q4q2+75q4q1^2+25q3^2+90q3q2q1+20q3q1^3+10q2^3+15q2^2q1^2",
    ),
    (6, 2, "6468", "84q6+48q5q1+24q4q2+12q3^2"),
    (6, 3, "1485", "0"),
];

/// `(d, g, b̄³_g(d))`.
pub const DOUBLE_BMS3: &[(i64, i64, &str)] = &[
    (1, 0, "q1"),
    (2, 0, "q2+2q1^2"),
    (2, 1, "q2"),
    (3, 0, "q3+6q2q1+5q1^3"),
    (3, 1, "8q3+12q2q1+q1^3"),
    (3, 2, "3q3"),
    (4, 0, "q4+8q3q1+4q2^2+28q2q1^2+14q1^4"),
    (4, 1, "30q4+96q3q1+34q2^2+100q2q1^2+10q1^4"),
    (4, 2, "93q4+88q3q1+34q2^2+16q2q1^2"),
    (4, 3, "20q4"),
    (5, 0, "q5+10q4q1+10q3q2+45q3q1^2+45q2^2q1+120q2q1^3+42q1^5"),
    (5, 1, "80q5+400q4q1+280q3q2+770q3q1^2+560q2^2q1+700q2q1^3+70q1^5"),
    (5, 2, "901q5+1990q4q1+1290q3q2+1405q3q1^2+1055q2^2q1+380q2q1^3+8q1^5"),
    (5, 3, "1650q5+1200q4q1+820q3q2+180q3q1^2+140q2^2q1"),
    (5, 4, "248q5"),
];

/// `(d, g, h_g(d), h̄_g(d))`.
pub const HURWITZ: &[(i64, i64, &str, &str)] = &[
    (1, 0, "1", "q1"),
    (1, 1, "0", "0"),
    (1, 2, "0", "0"),
    (2, 0, "1", "q2+q1^2"),
    (2, 1, "1/6", "1/2q2+1/6q1^2"),
    (2, 2, "1/120", "1/24q2+1/120q1^2"),
    (3, 0, "3/2", "q3+3q2q1+3/2q1^3"),
    (3, 1, "9/8", "3q3+9/2q2q1+9/8q1^3"),
    (3, 2, "27/80", "9/4q3+81/40q2q1+27/80q1^3"),
    (4, 0, "8/3", "q4+4q3q1+2q2^2+8q2q1^2+8/3q1^4"),
    (4, 1, "16/3", "10q4+24q3q1+28/3q2^2+80/3q2q1^2+16/3q1^4"),
    (4, 2, "208/45", "82/3q4+216/5q3q1+244/15q2^2+1456/45q2q1^2+208/45q1^4"),
    (
        5,
        0,
        "125/24",
        "q5+5q4q1+5q3q2+25/2q3q1^2+25/2q2^2q1+125/6q2q1^3+125/24q1^5",
    ),
    (
        5,
        1,
        "3125/144",
        "25q5+250/3q4q1+125/2q3q2+3125/24q3q1^2+625/6q2^2q1+3125/24q2q1^3+3125/144q1^5",
    ),
    (
        5,
        2,
        "15625/384",
        "2125/12q5+1250/3q4q1+6875/24q3q2+21875/48q3q1^2+3125/9q2^2q1+15625/48q2q1^3+15625/384q1^5",
    ),
];

/// `(d, g, m_g(d), m̄_g(d))`.
pub const MONOTONE: &[(i64, i64, &str, &str)] = &[
    (1, 0, "1", "q1"),
    (1, 1, "1", "0"),
    (1, 2, "1", "0"),
    (2, 0, "1", "q2+q1^2"),
    (2, 1, "1", "q2+q1^2"),
    (2, 2, "1", "q2+q1^2"),
    (3, 0, "2", "q3+3q2q1+2q1^3"),
    (3, 1, "10", "5q3+15q2q1+10q1^3"),
    (3, 2, "42", "21q3+63q2q1+42q1^3"),
    (4, 0, "5", "q4+4q3q1+2q2^2+10q2q1^2+5q1^4"),
    (4, 1, "70", "15q4+60q3q1+25q2^2+140q2q1^2+70q1^4"),
    (4, 2, "735", "161q4+644q3q1+252q2^2+1470q2q1^2+735q1^4"),
    (5, 0, "14", "q5+5q4q1+5q3q2+15q3q1^2+15q2^2q1+35q2q1^3+14q1^5"),
    (
        5,
        1,
        "420",
        "35q5+175q4q1+140q3q2+490q3q1^2+420q2^2q1+1050q2q1^3+420q1^5",
    ),
    (
        5,
        2,
        "8778",
        "777q5+3885q4q1+2835q3q2+10605q3q1^2+8505q2^2q1+21945q2q1^3+8778q1^5",
    ),
];
