//! Fixtures shared by the benchmarks.

use hermsym::JordanModel;

pub const GRASSMANNIAN: JordanModel = JordanModel::Rect { p: 2, q: 2 };

/// Models covered by the float benchmarks.
pub fn models() -> [JordanModel; 4] {
    [
        JordanModel::Rect { p: 1, q: 1 },
        GRASSMANNIAN,
        JordanModel::Rect { p: 2, q: 3 },
        JordanModel::Spin { n: 5 },
    ]
}
