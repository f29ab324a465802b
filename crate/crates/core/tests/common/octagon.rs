//! The labelled cells of the octagon fan, as drawn in the figure.

use latwalk::buchberger::canonical_key;
use latwalk::vector::IntVec;

/// Binomials over a, b, c, d, e as written in the figure, head first.
pub fn label(terms: &[([i64; 5], [i64; 5])]) -> Vec<IntVec> {
    canonical_key(terms.iter().map(|(h, t)| {
        IntVec::new(h.iter().zip(t).map(|(x, y)| x - y).collect())
    }))
}

pub const A2C: [i64; 5] = [2, 0, 1, 0, 0];
pub const B2E: [i64; 5] = [0, 2, 0, 0, 1];
pub const A2D: [i64; 5] = [2, 0, 0, 1, 0];
pub const BE2: [i64; 5] = [0, 1, 0, 0, 2];
pub const CE: [i64; 5] = [0, 0, 1, 0, 1];
pub const BD: [i64; 5] = [0, 1, 0, 1, 0];
pub const A2D2: [i64; 5] = [2, 0, 0, 2, 0];
pub const CE3: [i64; 5] = [0, 0, 1, 0, 3];
pub const A2C2: [i64; 5] = [2, 0, 2, 0, 0];
pub const B3D: [i64; 5] = [0, 3, 0, 1, 0];

pub fn figure_cells() -> Vec<Vec<IntVec>> {
    let mut v = vec![
        label(&[(A2D2, CE3), (B2E, A2C), (BE2, A2D), (BD, CE)]),
        label(&[(CE3, A2D2), (B2E, A2C), (BE2, A2D), (BD, CE)]),
        label(&[(B2E, A2C), (A2D, BE2), (BD, CE)]),
        label(&[(A2C, B2E), (A2D, BE2), (BD, CE)]),
        label(&[(A2C, B2E), (A2D, BE2), (CE, BD)]),
        label(&[(A2C, B2E), (BE2, A2D), (CE, BD)]),
        label(&[(A2C2, B3D), (B2E, A2C), (BE2, A2D), (CE, BD)]),
        label(&[(B3D, A2C2), (B2E, A2C), (BE2, A2D), (CE, BD)]),
    ];
    v.sort();
    v
}

pub fn truncated_figure_cells() -> Vec<Vec<IntVec>> {
    let mut v = vec![
        label(&[(B2E, A2C), (BE2, A2D), (BD, CE)]),
        label(&[(B2E, A2C), (A2D, BE2), (BD, CE)]),
        label(&[(A2C, B2E), (A2D, BE2), (BD, CE)]),
        label(&[(A2C, B2E), (A2D, BE2), (CE, BD)]),
        label(&[(A2C, B2E), (BE2, A2D), (CE, BD)]),
        label(&[(B2E, A2C), (BE2, A2D), (CE, BD)]),
    ];
    v.sort();
    v
}

