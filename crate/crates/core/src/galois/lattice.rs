//! Conjugacy classes of subgroups of GL2(F3) that can occur as mod-3 images.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A 2x2 matrix over F3, entries in `0..3`.
pub type Mat3 = [[u8; 2]; 2];

pub const IDENTITY: Mat3 = [[1, 0], [0, 1]];
pub const MINUS_IDENTITY: Mat3 = [[2, 0], [0, 2]];

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0u8; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = ((a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 3) as u8;
        }
    }
    out
}

pub fn det(a: &Mat3) -> u8 {
    ((a[0][0] * a[1][1] + 2 * a[0][1] * a[1][0]) % 3) as u8
}

/// All 48 invertible matrices.
pub fn gl2_f3() -> Vec<Mat3> {
    let mut out = Vec::with_capacity(48);
    for code in 0..81u32 {
        let e = |k: u32| (code / 3u32.pow(k) % 3) as u8;
        let m = [[e(0), e(1)], [e(2), e(3)]];
        if det(&m) != 0 {
            out.push(m);
        }
    }
    out
}

/// Closure of a generating set under multiplication.
pub fn generated_subgroup(gens: &[Mat3]) -> Vec<Mat3> {
    let mut group = vec![IDENTITY];
    let mut frontier = vec![IDENTITY];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let prod = mat_mul(&g, h);
            if !group.contains(&prod) {
                group.push(prod);
                frontier.push(prod);
            }
        }
    }
    group.sort_unstable();
    group
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mod3Label {
    GL2F3,
    SD16,
    C8,
    SL2F3,
    Q8,
    D12,
    D8,
    C6,
    /// Both classes of order-6 subgroups of the Borel without `-id`.
    #[serde(rename = "S3_Borel")]
    S3Borel,
    C4,
    V4,
    C3,
    TwoC2,
    OneC2,
    C1,
}

struct LabelData {
    name: &'static str,
    order: usize,
    contains_minus_id: bool,
    inside_sl2: bool,
    generators: &'static [Mat3],
}

const T: Mat3 = [[1, 1], [0, 1]];
const T_LOWER: Mat3 = [[1, 0], [1, 1]];
const DIAG_1_2: Mat3 = [[1, 0], [0, 2]];
const DIAG_2_1: Mat3 = [[2, 0], [0, 1]];
const NONSPLIT: Mat3 = [[1, 2], [1, 1]];
const ROTATION: Mat3 = [[0, 1], [2, 0]];

impl Mod3Label {
    pub const ALL: [Mod3Label; 15] = [
        Mod3Label::GL2F3,
        Mod3Label::SD16,
        Mod3Label::C8,
        Mod3Label::SL2F3,
        Mod3Label::Q8,
        Mod3Label::D12,
        Mod3Label::D8,
        Mod3Label::C6,
        Mod3Label::S3Borel,
        Mod3Label::C4,
        Mod3Label::V4,
        Mod3Label::C3,
        Mod3Label::TwoC2,
        Mod3Label::OneC2,
        Mod3Label::C1,
    ];

    fn data(self) -> LabelData {
        let (name, order, contains_minus_id, inside_sl2, generators): (_, _, _, _, &'static [Mat3]) = match self {
            Mod3Label::GL2F3 => ("GL2F3", 48, true, false, &[T, T_LOWER, DIAG_1_2]),
            Mod3Label::SD16 => ("SD16", 16, true, false, &[NONSPLIT, DIAG_1_2]),
            Mod3Label::C8 => ("C8", 8, true, false, &[NONSPLIT]),
            Mod3Label::SL2F3 => ("SL2F3", 24, true, true, &[T, T_LOWER]),
            Mod3Label::Q8 => ("Q8", 8, true, true, &[ROTATION, [[1, 1], [1, 2]]]),
            Mod3Label::D12 => ("D12", 12, true, false, &[T, DIAG_2_1, DIAG_1_2]),
            Mod3Label::D8 => ("D8", 8, true, false, &[DIAG_2_1, [[0, 1], [1, 0]]]),
            Mod3Label::C6 => ("C6", 6, true, true, &[[[2, 2], [0, 2]]]),
            Mod3Label::S3Borel => ("S3_Borel", 6, false, false, &[T, DIAG_1_2]),
            Mod3Label::C4 => ("C4", 4, true, true, &[ROTATION]),
            Mod3Label::V4 => ("V4", 4, true, false, &[DIAG_2_1, DIAG_1_2]),
            Mod3Label::C3 => ("C3", 3, false, true, &[T]),
            Mod3Label::TwoC2 => ("TwoC2", 2, false, false, &[DIAG_1_2]),
            Mod3Label::OneC2 => ("OneC2", 2, true, true, &[MINUS_IDENTITY]),
            Mod3Label::C1 => ("C1", 1, false, true, &[]),
        };
        LabelData {
            name,
            order,
            contains_minus_id,
            inside_sl2,
            generators,
        }
    }

    pub fn name(self) -> &'static str {
        self.data().name
    }

    pub fn order(self) -> usize {
        self.data().order
    }

    pub fn contains_minus_id(self) -> bool {
        self.data().contains_minus_id
    }

    pub fn inside_sl2(self) -> bool {
        self.data().inside_sl2
    }

    pub fn generators(self) -> &'static [Mat3] {
        self.data().generators
    }

    /// The subgroup generated by the stored representative generators.
    pub fn subgroup(self) -> Vec<Mat3> {
        generated_subgroup(self.generators())
    }
}

impl fmt::Display for Mod3Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mod3Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Mod3Label::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mod-3 label {s:?}")))
    }
}
