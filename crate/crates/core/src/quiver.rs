//! The link graph `Q(Λ)` and the valued quiver `Q^v(Λ)`.
//!
//! Two independent constructions are provided: one from products of the
//! maximal ideals and one from `rad / rad²`. They must agree on every order.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exponent::ExponentMatrix;

/// Directed graph on vertices `0..n` with at most one arrow per ordered
/// pair. Loops are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    adjacency: Vec<bool>,
}

impl Quiver {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adjacency: vec![false; n * n],
        }
    }

    /// Builds a quiver from 0-based arrows; repeated arrows collapse.
    pub fn from_arrows(n: usize, arrows: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut q = Self::empty(n);
        for (i, j) in arrows {
            let bad = i.max(j);
            if bad >= n {
                return Err(Error::IndexOutOfRange { index: bad + 1, n });
            }
            q.adjacency[i * n + j] = true;
        }
        Ok(q)
    }

    fn from_predicate(
        n: usize,
        mut arrow: impl FnMut(usize, usize) -> Result<bool>,
    ) -> Result<Self> {
        let mut q = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                q.adjacency[i * n + j] = arrow(i, j)?;
            }
        }
        Ok(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arrow(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.n + j]
    }

    /// Arrows sorted by `(source, target)`.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n * n)
            .filter(|&k| self.adjacency[k])
            .map(move |k| (k / n, k % n))
    }

    pub fn arrow_count(&self) -> usize {
        self.adjacency.iter().filter(|&&a| a).count()
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.has_arrow(v, v)).collect()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_arrow(u, v)).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&w| self.has_arrow(v, w)).count()
    }

    /// `(in-degree, out-degree, has loop)`; preserved by every automorphism.
    pub fn profile(&self, v: usize) -> (usize, usize, bool) {
        (self.in_degree(v), self.out_degree(v), self.has_arrow(v, v))
    }
}

impl std::fmt::Debug for Quiver {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Quiver")
            .field("n", &self.n)
            .field("arrows", &self.arrows().collect::<Vec<_>>())
            .finish()
    }
}

/// Link graph with each arrow `(i, j)` valued by the exponent `β` of
/// `Hom(P_i, P_j) = P^β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedQuiver {
    quiver: Quiver,
    values: BTreeMap<(usize, usize), i64>,
}

impl ValuedQuiver {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Value of the arrow `(i, j)`, if present.
    pub fn value(&self, i: usize, j: usize) -> Option<i64> {
        self.values.get(&(i, j)).copied()
    }

    /// `(i, j, v)` triples sorted by `(i, j)`.
    pub fn valued_arrows(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.values.iter().map(|(&(i, j), &v)| (i, j, v))
    }
}

/// Link graph from the maximal ideals: arrow `i -> j` iff
/// `M_i M_j != M_i ∩ M_j`.
///
/// The product is taken in the order that makes the arrows agree with
/// [`link_graph_via_radical`]; with the factors swapped every arrow reverses.
pub fn link_graph(a: &ExponentMatrix) -> Quiver {
    let n = a.n();
    let ideals: Vec<_> = (0..n).map(|k| a.maximal_ideal(k).expect("k < n")).collect();
    Quiver::from_predicate(n, |i, j| {
        let product = ideals[i].minplus_product(&ideals[j])?;
        let meet = ideals[i].intersect(&ideals[j])?;
        Ok(product != meet)
    })
    .expect("validated exponents fit in i64 after adding one")
}

/// Link graph from the Jacobson radical: arrow `i -> j` iff
/// `γ_ij < (γ²)_ij`, i.e. position `(i, j)` of `rad Λ` is not already
/// filled by `rad² Λ`.
pub fn link_graph_via_radical(a: &ExponentMatrix) -> Quiver {
    let gamma = a.radical();
    let square = gamma
        .minplus_product(&gamma)
        .expect("validated exponents fit in i64 after adding one");
    Quiver::from_predicate(a.n(), |i, j| Ok(gamma.get(i, j) < square.get(i, j)))
        .expect("infallible predicate")
}

/// Link graph valued by `v(i, j) = α_ij`, since `Hom(Λe_i, Λe_j) ≅ e_iΛe_j`.
pub fn valued_quiver(a: &ExponentMatrix) -> ValuedQuiver {
    let quiver = link_graph(a);
    let values = quiver
        .arrows()
        .map(|(i, j)| ((i, j), a.get(i, j)))
        .collect();
    ValuedQuiver { quiver, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::hereditary_order;

    fn order(rows: &[&[i64]]) -> ExponentMatrix {
        ExponentMatrix::validate(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn example6() -> ExponentMatrix {
        order(&[&[0, 2, 4], &[3, 0, 4], &[1, 1, 0]])
    }

    #[test]
    fn example6_is_complete_with_loops() {
        let a = example6();
        let q = link_graph(&a);
        let all: Vec<_> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).collect();
        assert_eq!(q.arrows().collect::<Vec<_>>(), all);
        assert_eq!(q.loops(), vec![0, 1, 2]);
        assert_eq!(link_graph_via_radical(&a), q);
    }

    #[test]
    fn hereditary_three_is_a_cycle() {
        let h = hereditary_order(3).unwrap();
        let expected = vec![(0, 1), (1, 2), (2, 0)];
        assert_eq!(link_graph(&h).arrows().collect::<Vec<_>>(), expected);
        assert_eq!(
            link_graph_via_radical(&h).arrows().collect::<Vec<_>>(),
            expected
        );
    }

    #[test]
    fn two_by_two_zero_one() {
        let a = order(&[&[0, 1], &[1, 0]]);
        let q = link_graph(&a);
        assert_eq!(q.arrow_count(), 4);
        assert_eq!(link_graph_via_radical(&a), q);
    }

    #[test]
    fn single_vertex_has_a_loop() {
        let a = order(&[&[0]]);
        assert_eq!(link_graph(&a).arrows().collect::<Vec<_>>(), vec![(0, 0)]);
        assert_eq!(
            link_graph_via_radical(&a).arrows().collect::<Vec<_>>(),
            vec![(0, 0)]
        );
    }

    #[test]
    fn full_matrix_ring_agrees() {
        let a = order(&[&[0, 0], &[0, 0]]);
        assert_eq!(link_graph(&a), link_graph_via_radical(&a));
        assert_eq!(link_graph(&a).arrow_count(), 4);
    }

    #[test]
    fn valued_arrows() {
        let a = example6();
        let v = valued_quiver(&a);
        assert_eq!(v.value(0, 1), Some(2));
        assert_eq!(v.value(1, 2), Some(4));
        for i in 0..3 {
            assert_eq!(v.value(i, i), Some(0));
        }
        assert_eq!(v.quiver(), &link_graph(&a));
        assert_eq!(v.valued_arrows().count(), 9);
    }

    #[test]
    fn from_arrows_checks_endpoints() {
        assert_eq!(
            Quiver::from_arrows(2, [(0, 2)]),
            Err(Error::IndexOutOfRange { index: 3, n: 2 })
        );
        let q = Quiver::from_arrows(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(q.arrow_count(), 1);
        assert_eq!(q.profile(0), (0, 1, false));
        assert_eq!(q.profile(1), (1, 0, false));
    }
}
