//! Stored weighted Dynkin diagrams.
//!
//! Labels are listed in Bourbaki order of the type they live on. The `D_n` rows are
//! kept only to be compared against the computed recipe; the `E_6`/`E_7` rows and
//! the `F_4` Levi rows are used as data.

pub(crate) struct StoredRow {
    pub label: &'static str,
    pub aliases: &'static [&'static str],
    pub partition: &'static [u32],
    pub labels: &'static [u8],
}

const CARTER_D: &str = "distinguished orbits of type D, Carter, Finite Groups of Lie Type, p.174";
const CARTER_E6: &str = "distinguished orbits of type E6, Carter, Finite Groups of Lie Type, p.175";
const CARTER_E7: &str = "distinguished orbits of type E7, Carter, Finite Groups of Lie Type, p.176";
const CARTER_F4_LEVI: &str =
    "distinguished orbits of the Levi factors of F4, Carter, Finite Groups of Lie Type, pp.174-175";

macro_rules! row {
    ($label:expr, [$($p:expr),*], [$($l:expr),*]) => {
        StoredRow { label: $label, aliases: &[], partition: &[$($p),*], labels: &[$($l),*] }
    };
    ($label:expr, aliases [$($a:expr),*], [$($l:expr),*]) => {
        StoredRow { label: $label, aliases: &[$($a),*], partition: &[], labels: &[$($l),*] }
    };
}

const D4: &[StoredRow] = &[
    row!("(5,3)", [5, 3], [2, 0, 2, 2]),
    row!("(7,1)", [7, 1], [2, 2, 2, 2]),
];
const D5: &[StoredRow] = &[
    row!("(7,3)", [7, 3], [2, 2, 0, 2, 2]),
    row!("(9,1)", [9, 1], [2, 2, 2, 2, 2]),
];
const D6: &[StoredRow] = &[
    row!("(7,5)", [7, 5], [2, 0, 2, 0, 2, 2]),
    row!("(9,3)", [9, 3], [2, 2, 2, 0, 2, 2]),
    row!("(11,1)", [11, 1], [2, 2, 2, 2, 2, 2]),
];
const D7: &[StoredRow] = &[
    row!("(9,5)", [9, 5], [2, 2, 0, 2, 0, 2, 2]),
    row!("(11,3)", [11, 3], [2, 2, 2, 2, 0, 2, 2]),
    row!("(13,1)", [13, 1], [2, 2, 2, 2, 2, 2, 2]),
];

/// The orbit called `E6(a3)` in the standard notation also circulates as `E6(a2)`.
const E6: &[StoredRow] = &[
    row!("E6", aliases [], [2, 2, 2, 2, 2, 2]),
    row!("E6(a1)", aliases [], [2, 2, 2, 0, 2, 2]),
    row!("E6(a3)", aliases ["E6(a2)"], [2, 0, 0, 2, 0, 2]),
];
const E7: &[StoredRow] = &[
    row!("E7", aliases [], [2, 2, 2, 2, 2, 2, 2]),
    row!("E7(a1)", aliases [], [2, 2, 2, 0, 2, 2, 2]),
    row!("E7(a2)", aliases [], [2, 2, 2, 0, 2, 0, 2]),
    row!("E7(a3)", aliases [], [2, 0, 0, 2, 0, 2, 2]),
    row!("E7(a4)", aliases [], [2, 0, 0, 2, 0, 0, 2]),
    row!("E7(a5)", aliases [], [0, 0, 0, 2, 0, 0, 2]),
];

pub(crate) fn stored_d(rank: usize) -> Option<&'static [StoredRow]> {
    match rank {
        4 => Some(D4),
        5 => Some(D5),
        6 => Some(D6),
        7 => Some(D7),
        _ => None,
    }
}

pub(crate) fn stored_e(rank: usize) -> Option<&'static [StoredRow]> {
    match rank {
        6 => Some(E6),
        7 => Some(E7),
        _ => None,
    }
}

pub(crate) fn provenance_d() -> &'static str {
    CARTER_D
}

pub(crate) fn provenance_e(rank: usize) -> &'static str {
    if rank == 6 {
        CARTER_E6
    } else {
        CARTER_E7
    }
}

/// A distinguished diagram on a Levi factor of `F_4`. `subset` lists the ambient
/// simple roots in the factor's Bourbaki order and `labels` follows that order.
pub(crate) struct F4LeviRow {
    pub label: &'static str,
    pub factor: &'static str,
    pub subset: &'static [usize],
    pub labels: &'static [u8],
}

pub(crate) const F4_LEVI: &[F4LeviRow] = &[
    F4LeviRow {
        label: "C2",
        factor: "C2",
        subset: &[2, 1],
        labels: &[2, 2],
    },
    F4LeviRow {
        label: "C3",
        factor: "C3",
        subset: &[3, 2, 1],
        labels: &[2, 2, 2],
    },
    F4LeviRow {
        label: "C3(a1)",
        factor: "C3",
        subset: &[3, 2, 1],
        labels: &[2, 0, 2],
    },
    F4LeviRow {
        label: "B3",
        factor: "B3",
        subset: &[0, 1, 2],
        labels: &[2, 2, 2],
    },
];

pub(crate) fn provenance_f4_levi() -> &'static str {
    CARTER_F4_LEVI
}
