//! Bracket tables of the twenty- and six-parameter families, one line per cell.

/// `(i, j, k, entry)`: the `X_k` coefficient of `[X_i, X_j]`.
pub const TABLE1: &[(usize, usize, usize, &str)] = &[
    (2, 3, 1, "l10"),
    (2, 3, 4, "l7"),
    (2, 3, 5, "l1"),
    (2, 3, 6, "l2"),
    (3, 1, 2, "l10"),
    (3, 1, 4, "l4"),
    (3, 1, 5, "l8"),
    (3, 1, 6, "l3"),
    (1, 2, 3, "l10"),
    (1, 2, 4, "l5"),
    (1, 2, 5, "l6"),
    (1, 2, 6, "l9"),
    (5, 6, 1, "l17"),
    (5, 6, 2, "l14"),
    (5, 6, 3, "l15"),
    (5, 6, 4, "l20"),
    (6, 4, 1, "l11"),
    (6, 4, 2, "l18"),
    (6, 4, 3, "l16"),
    (6, 4, 5, "l20"),
    (4, 5, 1, "l12"),
    (4, 5, 2, "l13"),
    (4, 5, 3, "l19"),
    (4, 5, 6, "l20"),
    (1, 4, 2, "l5"),
    (1, 4, 3, "-l4"),
    (1, 4, 5, "-l12"),
    (1, 4, 6, "l11"),
    (1, 5, 2, "l6"),
    (1, 5, 3, "-l8"),
    (1, 5, 4, "l12"),
    (1, 5, 6, "-l17"),
    (1, 6, 2, "l9"),
    (1, 6, 3, "-l3"),
    (1, 6, 4, "-l11"),
    (1, 6, 5, "l17"),
    (2, 4, 1, "-l5"),
    (2, 4, 3, "l7"),
    (2, 4, 5, "-l13"),
    (2, 4, 6, "l18"),
    (2, 5, 1, "-l6"),
    (2, 5, 3, "l1"),
    (2, 5, 4, "l13"),
    (2, 5, 6, "-l14"),
    (2, 6, 1, "-l9"),
    (2, 6, 3, "l2"),
    (2, 6, 4, "-l18"),
    (2, 6, 5, "l14"),
    (3, 4, 1, "l4"),
    (3, 4, 2, "-l7"),
    (3, 4, 5, "-l19"),
    (3, 4, 6, "l16"),
    (3, 5, 1, "l8"),
    (3, 5, 2, "-l1"),
    (3, 5, 4, "l19"),
    (3, 5, 6, "-l15"),
    (3, 6, 1, "l3"),
    (3, 6, 2, "-l2"),
    (3, 6, 4, "-l16"),
    (3, 6, 5, "l15"),
];

/// Same layout as [`TABLE1`].
pub const TABLE2: &[(usize, usize, usize, &str)] = &[
    (2, 3, 5, "l1"),
    (2, 3, 6, "l2"),
    (3, 1, 4, "l4"),
    (3, 1, 6, "l3"),
    (1, 2, 4, "l5"),
    (1, 2, 5, "l6"),
    (5, 6, 2, "-l4"),
    (5, 6, 3, "-l5"),
    (6, 4, 1, "-l1"),
    (6, 4, 3, "-l6"),
    (4, 5, 1, "-l2"),
    (4, 5, 2, "-l3"),
    (1, 4, 2, "l5"),
    (1, 4, 3, "-l4"),
    (1, 4, 5, "l2"),
    (1, 4, 6, "-l1"),
    (1, 5, 2, "l6"),
    (1, 5, 4, "-l2"),
    (1, 6, 3, "-l3"),
    (1, 6, 4, "l1"),
    (2, 4, 1, "-l5"),
    (2, 4, 5, "l3"),
    (2, 5, 1, "-l6"),
    (2, 5, 3, "l1"),
    (2, 5, 4, "-l3"),
    (2, 5, 6, "l4"),
    (2, 6, 3, "l2"),
    (2, 6, 5, "-l4"),
    (3, 4, 1, "l4"),
    (3, 4, 6, "-l6"),
    (3, 5, 2, "-l1"),
    (3, 5, 6, "l5"),
    (3, 6, 1, "l3"),
    (3, 6, 2, "-l2"),
    (3, 6, 4, "l6"),
    (3, 6, 5, "-l5"),
];
