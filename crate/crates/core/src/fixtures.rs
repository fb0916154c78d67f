//! Published apex of the array `A(s, r, j)` for symbolic `s`, cell by cell.
//!
//! Cells are `(r, j, entry)` in the plain falling-factorial rendering.
//! Elided cells are simply absent.

pub const TABLE_A_APEX: &[(u32, u32, &str)] = &[
    (0, 0, "1"),
    (1, 0, "0"),
    (1, 1, "(s)_1"),
    (2, 0, "(s)_1"),
    (2, 1, "0"),
    (2, 2, "(s)_2"),
    (3, 0, "0"),
    (3, 1, "3*(s)_2 + (s)_1"),
    (3, 2, "0"),
    (3, 3, "(s)_3"),
    (4, 0, "3*(s)_2 + (s)_1"),
    (4, 1, "0"),
    (4, 2, "6*(s)_3 + 4*(s)_2"),
    (4, 3, "0"),
    (4, 4, "(s)_4"),
    (5, 0, "0"),
    (5, 1, "15*(s)_3 + 15*(s)_2 + (s)_1"),
    (5, 2, "0"),
    (5, 3, "10*(s)_4 + 10*(s)_3"),
    (5, 4, "0"),
    (6, 0, "15*(s)_3 + 15*(s)_2 + (s)_1"),
    (6, 1, "0"),
    (6, 2, "45*(s)_4 + 75*(s)_3 + 16*(s)_2"),
    (6, 3, "0"),
    (7, 0, "0"),
    (7, 1, "105*(s)_4 + 210*(s)_3 + 63*(s)_2 + (s)_1"),
    (8, 0, "105*(s)_4 + 210*(s)_3 + 63*(s)_2 + (s)_1"),
    (9, 0, "0"),
];

/// Coefficients of `(s)_1, (s)_2, …` in `A(s, r, 0)` for even `r`, read off
/// the same table.
pub const A0_EVEN_ROWS: &[(u32, &str)] = &[
    (2, "1"),
    (4, "1,3"),
    (6, "1,15,15"),
    (8, "1,63,210,105"),
];
