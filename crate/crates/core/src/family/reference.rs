//! Closed-form values for the six-parameter family, as expression strings
//! over `l1..l6`. Index strings are 1-based.

use crate::poly::{parse_poly, Poly, Vars};

/// Coordinate planes `alpha_ij` with `J alpha = alpha`.
pub const HOLOMORPHIC_PLANES: &[&str] = &["14", "25", "36"];

/// Pairs of totally real coordinate planes.
pub const TOTALLY_REAL_PAIRS: &[(&str, &str)] = &[
    ("12", "45"),
    ("13", "46"),
    ("15", "24"),
    ("16", "34"),
    ("23", "56"),
    ("26", "35"),
];

/// Nonzero curvature components `R_ijkl`, up to the symmetries of `R`.
pub const CURVATURE: &[(&str, &str)] = &[
    ("1441", "-1/4*(l1^2+l2^2-l4^2-l5^2)"),
    ("2552", "1/4*(l1^2-l3^2-l4^2+l6^2)"),
    ("3663", "1/4*(l2^2+l3^2-l5^2-l6^2)"),
    ("1221", "-1/4*(l5^2+l6^2)"),
    ("1331", "-1/4*(l3^2+l4^2)"),
    ("1551", "-1/4*(l2^2-l6^2)"),
    ("1661", "-1/4*(l1^2-l3^2)"),
    ("2332", "-1/4*(l1^2+l2^2)"),
    ("2442", "-1/4*(l3^2-l5^2)"),
    ("2662", "1/4*(l2^2-l4^2)"),
    ("3443", "1/4*(l4^2-l6^2)"),
    ("3553", "1/4*(l1^2-l5^2)"),
    ("4554", "1/4*(l2^2+l3^2)"),
    ("4664", "1/4*(l1^2+l6^2)"),
    ("5665", "1/4*(l4^2+l5^2)"),
    ("1561", "1/4*l1*l2"),
    ("2562", "1/4*l1*l2"),
    ("3563", "1/4*l1*l2"),
    ("4564", "-1/4*l1*l2"),
    ("1341", "-1/4*l1*l3"),
    ("2342", "-1/4*l1*l3"),
    ("5345", "1/4*l1*l3"),
    ("6346", "1/4*l1*l3"),
    ("1361", "1/4*l1*l4"),
    ("2362", "1/4*l1*l4"),
    ("4364", "-1/4*l1*l4"),
    ("5365", "-1/4*l1*l4"),
    ("1261", "-1/4*l1*l5"),
    ("3263", "-1/4*l1*l5"),
    ("4264", "1/4*l1*l5"),
    ("5265", "1/4*l1*l5"),
    ("2132", "1/4*l1*l6"),
    ("4134", "-1/4*l1*l6"),
    ("5135", "-1/4*l1*l6"),
    ("6136", "-1/4*l1*l6"),
    ("3123", "1/4*l2*l3"),
    ("4124", "-1/4*l2*l3"),
    ("5125", "-1/4*l2*l3"),
    ("6126", "-1/4*l2*l3"),
    ("1351", "-1/4*l2*l4"),
    ("2352", "-1/4*l2*l4"),
    ("4354", "1/4*l2*l4"),
    ("6356", "1/4*l2*l4"),
    ("1251", "1/4*l2*l5"),
    ("3253", "1/4*l2*l5"),
    ("4254", "-1/4*l2*l5"),
    ("6256", "-1/4*l2*l5"),
    ("1241", "-1/4*l2*l6"),
    ("3243", "-1/4*l2*l6"),
    ("5245", "1/4*l2*l6"),
    ("6246", "1/4*l2*l6"),
    ("1461", "1/4*l3*l4"),
    ("2462", "1/4*l3*l4"),
    ("3463", "1/4*l3*l4"),
    ("5465", "-1/4*l3*l4"),
    ("2152", "-1/4*l3*l5"),
    ("3153", "-1/4*l3*l5"),
    ("4154", "1/4*l3*l5"),
    ("6156", "1/4*l3*l5"),
    ("2142", "1/4*l3*l6"),
    ("3143", "1/4*l3*l6"),
    ("5145", "-1/4*l3*l6"),
    ("6146", "-1/4*l3*l6"),
    ("1231", "1/4*l4*l5"),
    ("4234", "-1/4*l4*l5"),
    ("5235", "-1/4*l4*l5"),
    ("6236", "-1/4*l4*l5"),
    ("2162", "-1/4*l4*l6"),
    ("3163", "-1/4*l4*l6"),
    ("4164", "1/4*l4*l6"),
    ("5165", "1/4*l4*l6"),
    ("1451", "1/4*l5*l6"),
    ("2452", "1/4*l5*l6"),
    ("3453", "1/4*l5*l6"),
    ("6456", "-1/4*l5*l6"),
];

/// Ricci components `rho_ij`, `i <= j`.
pub const RICCI: &[(&str, &str)] = &[
    ("11", "1/2*(l1^2+l2^2-l3^2-l4^2-l5^2-l6^2)"),
    ("22", "1/2*(-l1^2-l2^2+l3^2+l4^2-l5^2-l6^2)"),
    ("33", "1/2*(-l1^2-l2^2-l3^2-l4^2+l5^2+l6^2)"),
    ("44", "1/2*(-l1^2-l2^2-l3^2+l4^2+l5^2-l6^2)"),
    ("55", "1/2*(l1^2-l2^2-l3^2-l4^2-l5^2+l6^2)"),
    ("66", "1/2*(-l1^2+l2^2+l3^2-l4^2-l5^2-l6^2)"),
    ("12", "l2*l3"),
    ("13", "l1*l6"),
    ("14", "l3*l6"),
    ("15", "-l3*l5"),
    ("16", "-l4*l6"),
    ("23", "l4*l5"),
    ("24", "-l2*l6"),
    ("25", "l2*l5"),
    ("26", "-l1*l5"),
    ("34", "-l1*l3"),
    ("35", "-l2*l4"),
    ("36", "l1*l4"),
    ("45", "l5*l6"),
    ("46", "l3*l4"),
    ("56", "l1*l2"),
];

/// Sectional curvatures `k(alpha_ij)` of coordinate planes.
pub const SECTIONAL: &[(&str, &str)] = &[
    ("14", "1/4*(l1^2+l2^2-l4^2-l5^2)"),
    ("25", "-1/4*(l1^2-l3^2-l4^2+l6^2)"),
    ("36", "-1/4*(l2^2+l3^2-l5^2-l6^2)"),
    ("12", "-1/4*(l5^2+l6^2)"),
    ("45", "1/4*(l2^2+l3^2)"),
    ("13", "-1/4*(l3^2+l4^2)"),
    ("46", "1/4*(l1^2+l6^2)"),
    ("15", "1/4*(l2^2-l6^2)"),
    ("24", "1/4*(l3^2-l5^2)"),
    ("16", "1/4*(l1^2-l3^2)"),
    ("34", "-1/4*(l4^2-l6^2)"),
    ("23", "-1/4*(l1^2+l2^2)"),
    ("56", "1/4*(l4^2+l5^2)"),
    ("26", "-1/4*(l2^2-l4^2)"),
    ("35", "-1/4*(l1^2-l5^2)"),
];

/// `(p, c, ijk)`: `l_p = c * F_ijk`.
pub const F_IDENTITIES: &[(usize, i64, &str)] = &[
    (1, 2, "116"),
    (1, 2, "161"),
    (1, -2, "134"),
    (1, -2, "143"),
    (1, 2, "223"),
    (1, 2, "232"),
    (1, 2, "256"),
    (1, 2, "265"),
    (1, -1, "322"),
    (1, -1, "355"),
    (1, 2, "413"),
    (1, 2, "431"),
    (1, 2, "446"),
    (1, 2, "464"),
    (1, -2, "526"),
    (1, -2, "562"),
    (1, 2, "535"),
    (1, 2, "553"),
    (1, -1, "611"),
    (1, -1, "644"),
    (2, -2, "115"),
    (2, -2, "151"),
    (2, 2, "124"),
    (2, 2, "142"),
    (2, 1, "233"),
    (2, 1, "266"),
    (2, -2, "323"),
    (2, -2, "332"),
    (2, -2, "356"),
    (2, -2, "365"),
    (2, -2, "412"),
    (2, -2, "421"),
    (2, -2, "445"),
    (2, -2, "454"),
    (2, 1, "511"),
    (2, 1, "544"),
    (2, -2, "626"),
    (2, -2, "662"),
    (2, 2, "635"),
    (2, 2, "653"),
    (3, -1, "133"),
    (3, -1, "166"),
    (3, -2, "215"),
    (3, -2, "251"),
    (3, 2, "224"),
    (3, 2, "242"),
    (3, 2, "313"),
    (3, 2, "331"),
    (3, 2, "346"),
    (3, 2, "364"),
    (3, -1, "422"),
    (3, -1, "455"),
    (3, 2, "512"),
    (3, 2, "521"),
    (3, 2, "545"),
    (3, 2, "554"),
    (3, 2, "616"),
    (3, 2, "661"),
    (3, -2, "634"),
    (3, -2, "643"),
    (4, -2, "113"),
    (4, -2, "131"),
    (4, -2, "146"),
    (4, -2, "164"),
    (4, -2, "226"),
    (4, -2, "262"),
    (4, 2, "235"),
    (4, 2, "253"),
    (4, 1, "311"),
    (4, 1, "344"),
    (4, 2, "416"),
    (4, 2, "461"),
    (4, -2, "434"),
    (4, -2, "523"),
    (4, -2, "443"),
    (4, -2, "532"),
    (4, -2, "556"),
    (4, -2, "565"),
    (4, 1, "622"),
    (4, 1, "655"),
    (5, 2, "112"),
    (5, 2, "121"),
    (5, 2, "145"),
    (5, 2, "154"),
    (5, -1, "211"),
    (5, -1, "244"),
    (5, -2, "326"),
    (5, -2, "362"),
    (5, 2, "335"),
    (5, 2, "353"),
    (5, -2, "415"),
    (5, -2, "451"),
    (5, 2, "424"),
    (5, 2, "442"),
    (5, -1, "533"),
    (5, -1, "566"),
    (5, 2, "623"),
    (5, 2, "632"),
    (5, 2, "656"),
    (5, 2, "665"),
    (6, 1, "122"),
    (6, 1, "155"),
    (6, -2, "212"),
    (6, -2, "221"),
    (6, -2, "245"),
    (6, -2, "254"),
    (6, 2, "316"),
    (6, 2, "361"),
    (6, -2, "334"),
    (6, -2, "343"),
    (6, 1, "433"),
    (6, 1, "466"),
    (6, -2, "515"),
    (6, -2, "551"),
    (6, 2, "524"),
    (6, 2, "542"),
    (6, -2, "613"),
    (6, -2, "631"),
    (6, -2, "646"),
    (6, -2, "664"),
];

/// `N(X_i, X_j)` in coordinates.
pub const NIJENHUIS: &[(&str, [&str; 6])] = &[
    ("23", ["0", "2*l4", "2*l5", "0", "2*l1", "2*l2"]),
    ("56", ["0", "-2*l4", "-2*l5", "0", "-2*l1", "-2*l2"]),
    ("31", ["2*l1", "0", "2*l6", "2*l4", "0", "2*l3"]),
    ("64", ["-2*l1", "0", "-2*l6", "-2*l4", "0", "-2*l3"]),
    ("12", ["2*l2", "2*l3", "0", "2*l5", "2*l6", "0"]),
    ("45", ["-2*l2", "-2*l3", "0", "-2*l5", "-2*l6", "0"]),
    ("35", ["0", "-2*l1", "-2*l2", "0", "2*l4", "2*l5"]),
    ("26", ["0", "2*l1", "2*l2", "0", "-2*l4", "-2*l5"]),
    ("16", ["-2*l4", "0", "-2*l3", "2*l1", "0", "2*l6"]),
    ("34", ["2*l4", "0", "2*l3", "-2*l1", "0", "-2*l6"]),
    ("24", ["-2*l5", "-2*l6", "0", "2*l2", "2*l3", "0"]),
    ("15", ["2*l5", "2*l6", "0", "-2*l2", "-2*l3", "0"]),
];

/// Parses one of the expression strings above over `vars`.
pub fn expr(text: &str, vars: &Vars) -> Poly {
    parse_poly(text, vars).unwrap_or_else(|e| panic!("bad reference expression {text:?}: {e}"))
}

/// Splits a 1-based digit string into 0-based indices.
pub fn indices(label: &str) -> Vec<usize> {
    label.bytes().map(|b| (b - b'1') as usize).collect()
}
