use std::sync::OnceLock;

use super::Vec4;

/// Signed coordinate permutation: `image[i] = signs[i] * v[perm[i]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymmetryOp {
    pub perm: [u8; 4],
    pub signs: [i8; 4],
}

impl SymmetryOp {
    pub const IDENTITY: SymmetryOp = SymmetryOp { perm: [0, 1, 2, 3], signs: [1; 4] };

    pub fn apply(&self, v: Vec4) -> Vec4 {
        Vec4(std::array::from_fn(|i| self.signs[i] as i64 * v.0[self.perm[i] as usize]))
    }

    /// `self.then(o)` applies `self` first, then `o`.
    pub fn then(&self, o: &SymmetryOp) -> SymmetryOp {
        SymmetryOp {
            perm: std::array::from_fn(|i| self.perm[o.perm[i] as usize]),
            signs: std::array::from_fn(|i| o.signs[i] * self.signs[o.perm[i] as usize]),
        }
    }

    pub fn inverse(&self) -> SymmetryOp {
        let mut perm = [0u8; 4];
        let mut signs = [1i8; 4];
        for i in 0..4 {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            signs[j] = self.signs[i];
        }
        SymmetryOp { perm, signs }
    }

    /// All 384 operations, identity first.
    pub fn all() -> &'static [SymmetryOp] {
        static OPS: OnceLock<Vec<SymmetryOp>> = OnceLock::new();
        OPS.get_or_init(|| {
            let mut ops = Vec::with_capacity(384);
            for perm in permutations4() {
                for mask in 0..16u8 {
                    let signs = std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
                    ops.push(SymmetryOp { perm, signs });
                }
            }
            ops
        })
    }
}

fn permutations4() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u8 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}
