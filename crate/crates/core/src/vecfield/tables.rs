//! Tabulated brackets of the two vector field catalogs, kept as independent
//! reference data: `[e_i, e_j]` for `i < j`, one-based, zero entries omitted.

/// Conformal algebra of the wave equation with the scaling `e16 = u d/du`.
pub const WAVE16: &[(usize, usize, &str)] = &[
    (1, 2, "-1/2*e9"),
    (1, 7, "-e1"),
    (1, 8, "-e2"),
    (1, 10, "e16-e7"),
    (1, 11, "e15"),
    (1, 12, "e13"),
    (1, 13, "-e5"),
    (1, 15, "-e3"),
    (2, 4, "-e15"),
    (2, 6, "-e13"),
    (2, 8, "-e10"),
    (2, 9, "2*e1"),
    (2, 10, "-e8"),
    (2, 13, "-e6"),
    (2, 15, "-e4"),
    (3, 4, "-1/2*e9"),
    (3, 7, "-e3"),
    (3, 8, "-e4"),
    (3, 10, "-e15"),
    (3, 11, "e16-e7"),
    (3, 12, "e14"),
    (3, 14, "-e5"),
    (3, 15, "e1"),
    (4, 6, "-e14"),
    (4, 8, "-e11"),
    (4, 9, "2*e3"),
    (4, 11, "-e8"),
    (4, 14, "-e6"),
    (4, 15, "e2"),
    (5, 6, "-1/2*e9"),
    (5, 7, "-e5"),
    (5, 8, "-e6"),
    (5, 10, "-e13"),
    (5, 11, "-e14"),
    (5, 12, "e16-e7"),
    (5, 13, "e1"),
    (5, 14, "e3"),
    (6, 8, "-e12"),
    (6, 9, "2*e5"),
    (6, 12, "-e8"),
    (6, 13, "e2"),
    (6, 14, "e4"),
    (7, 8, "-e8"),
    (7, 9, "e9"),
    (7, 10, "-e10"),
    (7, 11, "-e11"),
    (7, 12, "-e12"),
    (8, 9, "2*e7-2*e16"),
    (9, 10, "-2*e2"),
    (9, 11, "-2*e4"),
    (9, 12, "-2*e6"),
    (10, 13, "-e12"),
    (10, 15, "-e11"),
    (11, 14, "-e12"),
    (11, 15, "e10"),
    (12, 13, "e10"),
    (12, 14, "e11"),
    (13, 14, "e15"),
    (13, 15, "-e14"),
    (14, 15, "e13"),
];

/// Split real form of G2 acting on the Hilbert-Cartan equation, prolonged to
/// second order. `[X4, X14] = -X12` and `[X4, X13] = 0`; placing `-X12` in the
/// `(4, 13)` cell instead breaks the Jacobi identity.
pub const G2: &[(usize, usize, &str)] = &[
    (1, 6, "-X1"),
    (1, 10, "-1/2*X2"),
    (1, 11, "-1/2*X3"),
    (1, 12, "-1/2*X4"),
    (1, 13, "-1/2*X5"),
    (1, 14, "-X6"),
    (2, 5, "4*X1"),
    (2, 6, "-1/2*X2"),
    (2, 8, "3/2*X2"),
    (2, 9, "-X3"),
    (2, 12, "-4/3*X7"),
    (2, 13, "-2*X8+2*X6"),
    (2, 14, "-X10"),
    (3, 4, "-4*X1"),
    (3, 6, "-1/2*X3"),
    (3, 7, "-3/2*X2"),
    (3, 8, "1/2*X3"),
    (3, 9, "-X4"),
    (3, 11, "4/3*X7"),
    (3, 12, "2/3*X8-2*X6"),
    (3, 13, "2*X9"),
    (3, 14, "-X11"),
    (4, 6, "-1/2*X4"),
    (4, 7, "-2*X3"),
    (4, 8, "-1/2*X4"),
    (4, 9, "-X5"),
    (4, 10, "-4/3*X7"),
    (4, 11, "2/3*X8+2*X6"),
    (4, 12, "-8/3*X9"),
    (4, 14, "-X12"),
    (5, 6, "-1/2*X5"),
    (5, 7, "-3/2*X4"),
    (5, 8, "-3/2*X5"),
    (5, 10, "-2*X8-2*X6"),
    (5, 11, "2*X9"),
    (5, 14, "-X13"),
    (6, 10, "-1/2*X10"),
    (6, 11, "-1/2*X11"),
    (6, 12, "-1/2*X12"),
    (6, 13, "-1/2*X13"),
    (6, 14, "-X14"),
    (7, 8, "X7"),
    (7, 9, "-X8"),
    (7, 11, "3/2*X10"),
    (7, 12, "2*X11"),
    (7, 13, "3/2*X12"),
    (8, 9, "X9"),
    (8, 10, "-3/2*X10"),
    (8, 11, "-1/2*X11"),
    (8, 12, "1/2*X12"),
    (8, 13, "3/2*X13"),
    (9, 10, "X11"),
    (9, 11, "X12"),
    (9, 12, "X13"),
    (10, 13, "2*X14"),
    (11, 12, "-2*X14"),
];
