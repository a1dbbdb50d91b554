//! Deterministic subset enumeration: by increasing size, then
//! lexicographically on the sorted vertex lists.

use itertools::Itertools;

use crate::graph::VertexSet;

/// All subsets of `ground` with exactly `size` elements, in lexicographic order.
pub fn of_size(ground: VertexSet, size: usize) -> impl Iterator<Item = VertexSet> {
    ground
        .to_vec()
        .into_iter()
        .combinations(size)
        .map(VertexSet::from_iter)
}

/// All subsets of `ground` with size in `sizes`, smallest first.
pub fn by_size(
    ground: VertexSet,
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Iterator<Item = VertexSet> {
    sizes.flat_map(move |s| of_size(ground, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_within_size() {
        let got: Vec<Vec<usize>> = of_size(VertexSet::full(4), 2).map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(by_size(VertexSet::full(4), 0..=4).count(), 16);
        assert_eq!(of_size(VertexSet::full(3), 0).next(), Some(VertexSet::EMPTY));
    }
}
