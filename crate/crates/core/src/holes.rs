//! Kronecker coefficients of three two-row partitions of a fixed weight.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::kron224::{bravyi_check, kron224, BravyiReport};
use crate::partition::{validate_triple, KroneckerTriple, Partition, BOUNDS_224};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolePoint {
    pub i: u64,
    pub j: u64,
    pub k: u64,
    pub g: BigInt,
}

/// Points `(i, j, k)`, `0 <= j <= i <= k <= N/2`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolesGrid {
    pub weight: u64,
    pub points: Vec<HolePoint>,
}

/// `((N-i, i), (N-j, j), (N-k, k))`.
pub fn grid_triple(weight: u64, i: u64, j: u64, k: u64) -> KroneckerTriple {
    let two_row = |x: u64| Partition::new(vec![weight - x, x]).expect("x <= N/2");
    validate_triple(&two_row(i), &two_row(j), &two_row(k).padded(4), BOUNDS_224).expect("equal weights")
}

pub fn holes_grid(weight: u64) -> HolesGrid {
    let half = weight / 2;
    let coords: Vec<(u64, u64, u64)> =
        (0..=half).flat_map(|i| (0..=i).flat_map(move |j| (i..=half).map(move |k| (i, j, k)))).collect();
    let points = coords
        .into_par_iter()
        .map(|(i, j, k)| {
            let g = kron224(&grid_triple(weight, i, j, k)).expect("two-row triples fit the pattern");
            HolePoint { i, j, k, g }
        })
        .collect();
    HolesGrid { weight, points }
}

impl HolesGrid {
    pub fn bravyi(&self, p: &HolePoint) -> BravyiReport {
        bravyi_check(&grid_triple(self.weight, p.i, p.j, p.k)).expect("two-row triples fit the pattern")
    }

    /// Zero entries passing all three Bravyi inequalities.
    pub fn holes(&self) -> Vec<&HolePoint> {
        self.points.iter().filter(|p| p.g.is_zero() && self.bravyi(p).all()).collect()
    }

    pub fn zero_count(&self) -> usize {
        self.points.iter().filter(|p| p.g.is_zero()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_examples() {
        let grid = holes_grid(24);
        let at = |i, j, k| grid.points.iter().find(|p| (p.i, p.j, p.k) == (i, j, k)).unwrap().g.clone();
        assert_eq!(at(12, 12, 12), BigInt::from(1));
        assert_eq!(at(0, 0, 0), BigInt::from(1));
        assert_eq!(at(1, 0, 1), BigInt::from(1));
        assert_eq!(at(1, 0, 2), BigInt::from(0));
        assert_eq!(kron224::<BigInt>(&grid_triple(24, 1, 0, 0)).unwrap(), BigInt::from(0));
        assert_eq!(grid.points.len(), (0..=12).map(|i| (i + 1) * (13 - i)).sum::<usize>());
        assert!(grid.holes().iter().all(|p| p.k == 12));
    }

    #[test]
    fn weight_zero() {
        let grid = holes_grid(0);
        assert_eq!(grid.points, vec![HolePoint { i: 0, j: 0, k: 0, g: BigInt::from(1) }]);
    }
}
