//! Reference data for the worked examples: marked curves and divisors by
//! the numerators of their endpoints, and inequalities as printed, terms
//! in printed order.

pub type MarkedEdge = ([i64; 3], [i64; 3], u32);
pub type MarkedVertex = ([i64; 3], &'static [u32]);
pub type Terms = &'static [(u64, usize)];

pub const SIXTH_CURVES: &[MarkedEdge] = &[
    ([0, 6, 0], [1, 2, 3], 3),
    ([0, 0, 6], [1, 2, 3], 2),
    ([1, 2, 3], [2, 4, 0], 2),
    ([3, 0, 3], [4, 2, 0], 1),
    ([1, 2, 3], [3, 0, 3], 3),
    ([1, 2, 3], [4, 2, 0], 4),
];

pub const SIXTH_DIVISORS: &[MarkedVertex] = &[
    ([1, 2, 3], &[5]),
];

pub const THIRTIETH_CURVES: &[MarkedEdge] = &[
    ([30, 0, 0], [25, 2, 3], 6),
    ([25, 2, 3], [20, 4, 6], 6),
    ([20, 4, 6], [15, 6, 9], 6),
    ([15, 6, 9], [10, 8, 12], 6),
    ([10, 8, 12], [5, 10, 15], 6),
    ([5, 10, 15], [0, 12, 18], 6),
    ([15, 0, 15], [10, 2, 18], 3),
    ([10, 2, 18], [5, 4, 21], 3),
    ([5, 4, 21], [0, 6, 24], 3),
    ([15, 0, 15], [25, 2, 3], 25),
    ([10, 2, 18], [25, 2, 3], 28),
    ([10, 2, 18], [15, 6, 9], 15),
    ([5, 4, 21], [15, 6, 9], 18),
    ([5, 4, 21], [5, 10, 15], 5),
    ([0, 6, 24], [5, 10, 15], 8),
    ([0, 0, 30], [10, 2, 18], 20),
    ([10, 2, 18], [20, 4, 6], 20),
    ([0, 0, 30], [5, 4, 21], 10),
    ([5, 4, 21], [10, 8, 12], 10),
    ([0, 30, 0], [5, 22, 3], 15),
    ([5, 22, 3], [10, 14, 6], 15),
    ([10, 14, 6], [15, 6, 9], 15),
    ([10, 20, 0], [5, 22, 3], 2),
    ([5, 22, 3], [0, 24, 6], 2),
    ([20, 10, 0], [15, 12, 3], 4),
    ([15, 12, 3], [10, 14, 6], 4),
    ([10, 14, 6], [5, 16, 9], 4),
    ([5, 16, 9], [0, 18, 12], 4),
    ([5, 10, 15], [5, 16, 9], 5),
    ([5, 16, 9], [5, 22, 3], 5),
    ([5, 10, 15], [0, 18, 12], 9),
    ([10, 8, 12], [5, 16, 9], 12),
    ([5, 16, 9], [0, 24, 6], 12),
    ([10, 8, 12], [10, 14, 6], 10),
    ([20, 4, 6], [15, 12, 3], 20),
    ([15, 12, 3], [10, 20, 0], 20),
    ([25, 2, 3], [20, 10, 0], 25),
    ([25, 2, 3], [15, 12, 3], 27),
    ([15, 12, 3], [5, 22, 3], 27),
    ([20, 4, 6], [10, 14, 6], 24),
];

pub const THIRTIETH_DIVISORS: &[MarkedVertex] = &[
    ([25, 2, 3], &[1]),
    ([20, 4, 6], &[26]),
    ([15, 6, 9], &[21]),
    ([10, 8, 12], &[16]),
    ([5, 10, 15], &[11]),
    ([10, 2, 18], &[23]),
    ([5, 4, 21], &[13]),
    ([10, 14, 6], &[19]),
    ([5, 22, 3], &[17]),
    ([15, 12, 3], &[29, 22]),
    ([5, 16, 9], &[14, 7]),
];

pub const TWENTY_FIFTH_CURVES: &[MarkedEdge] = &[
    ([25, 0, 0], [18, 4, 3], 9),
    ([18, 4, 3], [11, 8, 6], 9),
    ([11, 8, 6], [4, 12, 9], 9),
    ([0, 25, 0], [6, 18, 1], 1),
    ([6, 18, 1], [12, 11, 2], 1),
    ([12, 11, 2], [18, 4, 3], 1),
    ([25, 0, 0], [17, 1, 7], 21),
    ([17, 1, 7], [9, 2, 14], 21),
    ([9, 2, 14], [1, 3, 21], 21),
    ([0, 0, 25], [1, 3, 21], 3),
    ([1, 3, 21], [2, 6, 17], 3),
    ([2, 6, 17], [3, 9, 13], 3),
    ([3, 9, 13], [4, 12, 9], 3),
    ([4, 12, 9], [5, 15, 5], 3),
    ([5, 15, 5], [6, 18, 1], 3),
    ([0, 0, 25], [9, 2, 14], 2),
    ([0, 0, 25], [17, 1, 7], 1),
    ([0, 25, 0], [1, 3, 21], 21),
    ([0, 25, 0], [2, 6, 17], 17),
    ([0, 25, 0], [3, 9, 13], 13),
    ([0, 25, 0], [4, 12, 9], 9),
    ([0, 25, 0], [5, 15, 5], 5),
    ([25, 0, 0], [12, 11, 2], 6),
    ([25, 0, 0], [6, 18, 1], 3),
    ([17, 1, 7], [10, 5, 10], 13),
    ([10, 5, 10], [3, 9, 13], 13),
    ([17, 1, 7], [18, 4, 3], 1),
    ([9, 2, 14], [10, 5, 10], 2),
    ([10, 5, 10], [11, 8, 6], 2),
    ([2, 6, 17], [10, 5, 10], 18),
    ([10, 5, 10], [18, 4, 3], 18),
    ([3, 9, 13], [11, 8, 6], 15),
    ([2, 6, 17], [9, 2, 14], 17),
    ([12, 11, 2], [5, 15, 5], 6),
    ([11, 8, 6], [12, 11, 2], 2),
    ([11, 8, 6], [5, 15, 5], 5),
];

pub const TWENTY_FIFTH_DIVISORS: &[MarkedVertex] = &[
    ([1, 3, 21], &[24]),
    ([2, 6, 17], &[20]),
    ([3, 9, 13], &[16]),
    ([4, 12, 9], &[12]),
    ([5, 15, 5], &[8]),
    ([6, 18, 1], &[4]),
    ([12, 11, 2], &[7]),
    ([11, 8, 6], &[11]),
    ([18, 4, 3], &[10]),
    ([9, 2, 14], &[23]),
    ([10, 5, 10], &[14, 19]),
    ([17, 1, 7], &[22]),
];

/// curve inequalities of 1/30(25,2,3)
pub const THIRTIETH_CURVE_INEQUALITIES: &[(&str, Terms)] = &[
    ("A2", &[(1, 2), (1, 27), (1, 22), (1, 17)]),
    ("B2", &[(1, 2), (1, 5), (1, 8), (1, 11), (1, 14)]),
    ("A3", &[(1, 3), (1, 13), (1, 18), (1, 23), (1, 28)]),
    ("B3", &[(1, 3), (1, 5), (1, 7), (1, 9), (1, 11), (1, 13), (1, 23), (1, 28)]),
    ("C3", &[(1, 3), (1, 5), (1, 7), (1, 9), (1, 11), (1, 13), (1, 15), (1, 17), (1, 19), (1, 21)]),
    ("A4", &[(1, 4), (1, 29), (1, 24), (1, 19), (1, 14)]),
    ("B4", &[(1, 4), (1, 7), (1, 29), (1, 24), (1, 19)]),
    ("C4", &[(1, 4), (1, 7), (1, 10), (1, 13), (1, 16), (1, 19), (1, 29)]),
    ("D4", &[(1, 4), (1, 7), (1, 10), (1, 13), (1, 16), (1, 19), (1, 22)]),
    ("A5", &[(1, 5), (1, 7), (1, 9), (1, 11)]),
    ("B5", &[(1, 5), (1, 7), (1, 8), (1, 11)]),
    ("C5", &[(1, 5), (1, 8), (1, 11), (1, 14)]),
    ("A6", &[(1, 6), (1, 8), (1, 9), (1, 10), (1, 11), (1, 13), (2, 12), (2, 14), (2, 16), (2, 15), (2, 17), (2, 19), (3, 18), (3, 20), (3, 22), (3, 21), (3, 23), (3, 25), (4, 24), (4, 26), (4, 28), (4, 27), (4, 29), (4, 1)]),
    ("B6", &[(1, 6), (1, 8), (1, 10), (2, 12), (2, 14), (2, 16), (3, 18), (1, 9), (1, 11), (1, 13), (2, 15), (2, 17), (2, 19), (3, 21), (1, 1), (4, 26), (2, 16), (3, 23), (3, 20), (3, 22), (4, 24), (4, 26)]),
    ("C6", &[(1, 6), (1, 8), (1, 10), (2, 12), (2, 14), (2, 16), (3, 18), (1, 9), (1, 11), (1, 13), (2, 15), (2, 17), (2, 19), (3, 21), (1, 1), (1, 26), (1, 21), (1, 16)]),
    ("D6", &[(1, 6), (1, 8), (1, 10), (2, 12), (2, 14), (2, 16), (1, 1), (1, 26), (1, 21), (1, 16), (1, 9), (1, 11), (1, 13)]),
    ("E6", &[(1, 6), (1, 1), (1, 26), (1, 21), (1, 16), (1, 11), (1, 8), (1, 9)]),
    ("F6", &[(1, 6), (1, 1), (1, 26), (1, 21), (1, 16), (1, 11)]),
    ("A8", &[(1, 8)]),
    ("A9", &[(1, 9)]),
    ("A10", &[(1, 10), (1, 13), (1, 16)]),
    ("B10", &[(1, 10), (1, 12), (1, 14), (1, 16), (1, 18), (1, 5), (1, 7), (1, 9), (1, 11), (1, 13)]),
    ("C10", &[(1, 10), (1, 13), (1, 12), (1, 14), (1, 16)]),
    ("A12", &[(1, 12), (1, 7)]),
    ("B12", &[(1, 12), (1, 14)]),
    ("A15", &[(1, 15), (1, 17), (1, 19), (1, 21)]),
    ("B15", &[(1, 15), (1, 17), (1, 19), (1, 18), (1, 21)]),
    ("C15", &[(1, 15), (1, 17), (1, 18), (1, 21), (1, 24), (1, 10), (1, 13), (1, 16), (1, 19)]),
    ("D15", &[(1, 15), (1, 18), (1, 21), (1, 24), (1, 27), (1, 10), (1, 13), (1, 16), (1, 19), (1, 22), (1, 5), (1, 8), (1, 11), (1, 14), (1, 17)]),
    ("A18", &[(1, 18)]),
    ("A20", &[(1, 20), (1, 23), (1, 26), (1, 29)]),
    ("B20", &[(1, 20), (1, 22), (1, 23), (1, 26)]),
    ("C20", &[(1, 20), (1, 23), (1, 22), (1, 24), (1, 26)]),
    ("D20", &[(1, 20), (1, 15), (1, 17), (1, 19), (1, 21), (1, 22), (1, 24), (1, 26), (1, 28)]),
    ("A24", &[(1, 24)]),
    ("A25", &[(1, 25), (1, 27), (1, 29), (1, 1)]),
    ("B25", &[(1, 25), (1, 28), (1, 1)]),
    ("A27", &[(1, 27), (1, 22)]),
    ("B27", &[(1, 27), (1, 29)]),
    ("A28", &[(1, 28)]),
];

/// subsheaf inequalities of 1/30(25,2,3)
pub const THIRTIETH_SUBSHEAF_INEQUALITIES: &[(&str, Terms)] = &[
    ("A1", &[(1, 1)]),
    ("A7", &[(1, 7)]),
    ("A11", &[(1, 11)]),
    ("A13", &[(1, 13)]),
    ("A14", &[(1, 14)]),
    ("A16", &[(1, 16)]),
    ("A17", &[(1, 17)]),
    ("A19", &[(1, 19)]),
    ("A21", &[(1, 21)]),
    ("A22", &[(1, 22)]),
    ("A23", &[(1, 23)]),
    ("A26", &[(1, 26)]),
    ("A29", &[(1, 29)]),
];

/// inequalities of 1/6(1,2,3)
pub const SIXTH_INEQUALITIES: &[(&str, Terms)] = &[
    ("A1", &[(1, 1)]),
    ("A2", &[(1, 2), (1, 5)]),
    ("B2", &[(1, 2), (1, 3), (2, 4), (2, 5)]),
    ("A3", &[(1, 3), (1, 5)]),
    ("B3", &[(1, 3), (1, 4), (1, 5)]),
    ("A4", &[(1, 4)]),
    ("A5", &[(1, 5)]),
    ("B5", &[(1, 2), (1, 3), (1, 4), (1, 5)]),
];

/// walls of 1/6(1,2,3) with their types
pub const SIXTH_WALLS: &[(&str, Terms)] = &[
    ("I", &[(1, 1)]),
    ("III", &[(1, 2), (1, 5)]),
    ("I", &[(1, 3), (1, 5)]),
    ("I", &[(1, 4)]),
    ("0", &[(1, 5)]),
    ("0", &[(1, 2), (1, 3), (1, 4), (1, 5)]),
];

/// terms missing from the printed curve inequalities of 1/30(25,2,3); each
/// is a character of the G-igsaw piece of the curve with degree one, and
/// the summands claimed for D20 already contain t23
pub const THIRTIETH_MISSING_TERMS: &[(&str, usize)] = &[("B2", 17), ("C3", 23), ("D20", 23)];

/// inequalities of 1/30(25,2,3) from curves that are not (-1,-1)-curves
pub const THIRTIETH_BOLD: &[&str] =
    &["A6", "B6", "C6", "D6", "E6", "F6", "B10", "C10", "B15", "C15", "D15", "C20", "D20"];

/// redundancy claims for 1/30(25,2,3): summands, then the inequality
pub const THIRTIETH_CLAIMS: &[(&[&str], &str)] = &[
    (&["F6", "A8", "A9", "A10", "B12", "A15", "A18", "A20", "A24", "A25", "B27", "A28"], "A6"),
    (&["F6", "A8", "A9", "A10", "B12", "A15", "A18", "A20", "A24"], "B6"),
    (&["F6", "A8", "A9", "A10", "B12", "A15", "A18"], "C6"),
    (&["F6", "A8", "A9", "A10", "B12"], "D6"),
    (&["F6", "A8", "A9"], "E6"),
    (&["A5", "B12", "A18"], "B10"),
    (&["A10", "B12"], "C10"),
    (&["A15", "A18"], "B15"),
    (&["A15", "A18", "A10", "A24"], "C15"),
    (&["A15", "A18", "A10", "A24", "A27", "C5"], "D15"),
    (&["B20", "A24"], "C20"),
    (&["A15", "B20", "A24"], "D20"),
];

/// printed summands that exceed their target, with the replacement that
/// fits: A20 carries t29, which B6 lacks
pub const THIRTIETH_CLAIM_FIXES: &[(&str, &str, &str)] = &[("B6", "A20", "B20")];

pub const THIRTIETH_PIECES: &[(u32, &[u32])] = &[
    (5, &[5, 7, 9, 11]),
    (15, &[15, 17, 19, 21]),
    (2, &[2, 17, 22, 27]),
    (15, &[10, 13, 15, 16, 17, 18, 19, 21, 24]),
];

/// inequalities along the 15-chain of 1/35(1,3,31) and the curves used to
/// reduce them
pub const THIRTY_FIFTH_INEQUALITIES: &[(&str, Terms)] = &[
    ("A15", &[(1, 15), (1, 18), (1, 21), (1, 24), (1, 7), (1, 10), (1, 13), (1, 16), (1, 11), (1, 14), (1, 17), (1, 20)]),
    ("B15", &[(1, 15), (1, 18), (1, 21), (1, 16), (1, 11), (1, 14), (1, 17)]),
    ("C15", &[(1, 15), (1, 16), (1, 17), (1, 18)]),
    ("D15", &[(1, 15), (1, 16), (1, 17), (1, 18)]),
    ("A7", &[(1, 7), (1, 10), (1, 13)]),
    ("A11", &[(1, 11), (1, 14)]),
    ("A21", &[(1, 21)]),
    ("A24", &[(1, 24), (1, 20)]),
];

pub const THIRTY_FIFTH_CLAIMS: &[(&[&str], &str)] =
    &[(&["C15", "A7", "A11", "A21", "A24"], "A15"), (&["C15", "A11", "A21"], "B15")];

pub const THIRTY_FIFTH_PIECE: &[u32] = &[
    1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 13, 14, 16, 17, 18, 20, 21, 22, 24, 25, 26, 28, 29, 30, 32, 33, 34,
];

/// Type III walls of 1/25(1,3,21)
pub const TWENTY_FIFTH_TYPE_III: &[(&str, Terms)] = &[
    ("F3", &[(1, 3), (1, 4), (1, 8), (1, 12), (1, 16), (1, 20), (1, 24)]),
    ("C9", &[(1, 9), (1, 10), (1, 11), (1, 12)]),
    ("C21", &[(1, 21), (1, 22), (1, 23), (1, 24)]),
];
