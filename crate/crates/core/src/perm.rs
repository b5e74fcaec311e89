//! Permutations of `{1..n}` and automorphisms of quivers.
//!
//! Composition is left-to-right: `s.compose(&t)` applies `s` first, so
//! `(s·t)(i) = t(s(i))`. With permutation matrices `v(σ)_{ij} = 1` iff
//! `j = σ(i)` this is the order for which `v(σ)v(τ) = v(στ)`.
//!
//! Internally points are `0..n`; text forms are 1-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::par;
use crate::quiver::Quiver;

/// Default cap on `n` for anything that enumerates subsets of `S_n`.
pub const DEFAULT_MAX_N: usize = 9;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &p in &image {
            if p >= n {
                return Err(Error::OutOfRange {
                    value: p as i64 + 1,
                    n,
                });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::RepeatedElement(p + 1));
            }
        }
        Ok(Self { image })
    }

    /// Parses cycle notation `"(1 2 3)(4 5)"` or one-line notation
    /// `"[2,3,1]"`, both 1-based. Fixed points may be left out of cycle
    /// notation; `"()"` and the empty string denote the identity.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if let Some(body) = text.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| Error::MalformedSyntax(format!("missing ']' in {text:?}")))?;
            let values = body
                .split(',')
                .map(|t| parse_point(t.trim(), n))
                .collect::<Result<Vec<_>>>()?;
            if values.len() != n {
                return Err(Error::MalformedSyntax(format!(
                    "one-line form has {} entries, expected {n}",
                    values.len()
                )));
            }
            return Self::from_images(values);
        }

        let mut image: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut rest = text;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::MalformedSyntax(format!("expected '(' at {rest:?}")))?;
            let close = inner
                .find(')')
                .ok_or_else(|| Error::MalformedSyntax(format!("unclosed cycle in {text:?}")))?;
            let cycle = inner[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| parse_point(t, n))
                .collect::<Result<Vec<_>>>()?;
            for &p in &cycle {
                if std::mem::replace(&mut used[p], true) {
                    return Err(Error::RepeatedElement(p + 1));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                image[p] = cycle[(k + 1) % cycle.len()];
            }
            rest = inner[close + 1..].trim_start();
        }
        Ok(Self { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|&p| p + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Left-to-right product: `self` first, then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Self {
            image: self.image.iter().map(|&p| other.image[p]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.n()];
        for (i, &p) in self.image.iter().enumerate() {
            image[p] = i;
        }
        Self { image }
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.image[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.image[p];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn parse_point(token: &str, n: usize) -> Result<usize> {
    let value: i64 = token
        .parse()
        .map_err(|_| Error::MalformedSyntax(format!("not an integer: {token:?}")))?;
    if value < 1 || value as u64 > n as u64 {
        return Err(Error::OutOfRange { value, n });
    }
    Ok(value as usize - 1)
}

/// Cycle notation, 1-based; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self)
    }
}

/// Lexicographic successor of `image`, in place. Returns false at the last
/// permutation.
fn next_permutation(image: &mut [usize]) -> bool {
    let n = image.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| image[i] < image[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| image[j] > image[i]).unwrap();
    image.swap(i, j);
    image[i + 1..].reverse();
    true
}

/// All of `S_n` in lexicographic order of the image.
pub fn symmetric_group(n: usize) -> impl Iterator<Item = Perm> {
    let mut next = Some((0..n).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            next = Some(succ);
        }
        Some(Perm { image: current })
    })
}

/// Permutations of `S_n` sending `0` to `first`, lexicographically.
pub(crate) fn symmetric_group_with_first(n: usize, first: usize) -> impl Iterator<Item = Perm> {
    let mut rest: Vec<usize> = (0..n).filter(|&p| p != first).collect();
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut image = Vec::with_capacity(n);
        image.push(first);
        image.extend_from_slice(&rest);
        done = !next_permutation(&mut rest);
        Some(Perm { image })
    })
}

pub(crate) fn check_size(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Error::TooLarge { n, max_n });
    }
    Ok(())
}

/// All automorphisms of `q`, sorted lexicographically by image.
///
/// Backtracking assigns vertices `0, 1, ...` in turn, only trying targets
/// with the same (in-degree, out-degree, loop) profile, and checks arrows
/// against every previously placed vertex. The search is split by the
/// image of vertex 0 and the branches run in parallel.
pub fn quiver_automorphisms(q: &Quiver, max_n: usize) -> Result<Vec<Perm>> {
    let n = q.n();
    check_size(n, max_n)?;
    let profiles: Vec<_> = (0..n).map(|v| q.profile(v)).collect();
    let firsts: Vec<usize> = (0..n).filter(|&t| profiles[t] == profiles[0]).collect();
    let branches = par::map(&firsts, |&first| {
        let mut search = AutSearch {
            q,
            profiles: &profiles,
            image: vec![usize::MAX; n],
            used: vec![false; n],
            found: Vec::new(),
        };
        if search.fits(0, first) {
            search.place(0, first);
            search.extend(1);
        }
        search.found
    });
    let mut all: Vec<Perm> = branches.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

struct AutSearch<'a> {
    q: &'a Quiver,
    profiles: &'a [(usize, usize, bool)],
    image: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Perm>,
}

impl AutSearch<'_> {
    fn fits(&self, v: usize, t: usize) -> bool {
        if self.used[t] || self.profiles[v] != self.profiles[t] {
            return false;
        }
        (0..v).all(|u| {
            let tu = self.image[u];
            self.q.has_arrow(u, v) == self.q.has_arrow(tu, t)
                && self.q.has_arrow(v, u) == self.q.has_arrow(t, tu)
        })
    }

    fn place(&mut self, v: usize, t: usize) {
        self.image[v] = t;
        self.used[t] = true;
    }

    fn extend(&mut self, v: usize) {
        let n = self.q.n();
        if v == n {
            self.found.push(Perm {
                image: self.image.clone(),
            });
            return;
        }
        for t in 0..n {
            if self.fits(v, t) {
                self.place(v, t);
                self.extend(v + 1);
                self.used[t] = false;
            }
        }
        self.image[v] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Perm {
        Perm::parse(text, n).unwrap()
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("(1 2 3)", 3).one_line(), vec![2, 3, 1]);
        assert_eq!(p("[2,1]", 2), p("(1 2)", 2));
        assert_eq!(p("[ 2, 3 ,1 ]", 3), p("(1 2 3)", 3));
        assert_eq!(p("(1 2)(3 4)", 5).one_line(), vec![2, 1, 4, 3, 5]);
        assert_eq!(p("(1,3)", 3).one_line(), vec![3, 2, 1]);
        assert!(p("()", 4).is_identity());
        assert!(p("", 4).is_identity());
        assert!(p("(2)", 3).is_identity());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(Perm::parse("(1 1)", 2), Err(Error::RepeatedElement(1)));
        assert_eq!(Perm::parse("(1 2)(2 3)", 3), Err(Error::RepeatedElement(2)));
        assert_eq!(Perm::parse("[1,1]", 2), Err(Error::RepeatedElement(1)));
        assert_eq!(
            Perm::parse("(1 4)", 3),
            Err(Error::OutOfRange { value: 4, n: 3 })
        );
        assert_eq!(
            Perm::parse("[0,1]", 2),
            Err(Error::OutOfRange { value: 0, n: 2 })
        );
        for bad in ["(1 2", "1 2", "(a b)", "[1,2", "[1]", "(1 2)x"] {
            assert!(
                matches!(Perm::parse(bad, 2), Err(Error::MalformedSyntax(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn compose_left_to_right() {
        let c = p("(1 2 3)", 3);
        assert_eq!(c.compose(&c).unwrap(), p("(1 3 2)", 3));
        assert_eq!(c.compose(&Perm::identity(3)).unwrap(), c);
        let prod = p("(1 2)", 3).compose(&c).unwrap();
        assert_eq!(prod.one_line(), vec![3, 2, 1]);
        assert_eq!(prod, p("(1 3)", 3));
        assert!(matches!(
            c.compose(&Perm::identity(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn perm_matrix(s: &Perm) -> Vec<Vec<i32>> {
        let n = s.n();
        (0..n)
            .map(|i| (0..n).map(|j| i32::from(j == s.apply(i))).collect())
            .collect()
    }

    fn matmul(a: &[Vec<i32>], b: &[Vec<i32>]) -> Vec<Vec<i32>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| (0..n).map(|j| a[i][j] * b[j][k]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn permutation_matrices_multiply_in_compose_order() {
        for n in 1..=5 {
            let all: Vec<Perm> = symmetric_group(n).collect();
            for s in &all {
                for t in &all {
                    assert_eq!(
                        matmul(&perm_matrix(s), &perm_matrix(t)),
                        perm_matrix(&s.compose(t).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn display_and_order() {
        assert_eq!(p("(3 1 2)", 3).to_string(), "(1 2 3)");
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert_eq!(p("(1 2)(3 4 5)", 5).to_string(), "(1 2)(3 4 5)");
        assert_eq!(p("(1 2)(3 4 5)", 5).order(), 6);
        assert_eq!(Perm::identity(4).order(), 1);
        let s = p("(1 4 2)(3 5)", 6);
        assert_eq!(p(&s.to_string(), 6), s);
        assert_eq!(s.compose(&s.inverse()).unwrap(), Perm::identity(6));
    }

    #[test]
    fn symmetric_group_enumeration() {
        let all: Vec<Perm> = symmetric_group(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(symmetric_group(1).count(), 1);
        let with: Vec<Perm> = (0..4)
            .flat_map(|f| symmetric_group_with_first(4, f))
            .collect();
        assert_eq!(with, all);
    }

    #[test]
    fn automorphisms_of_small_quivers() {
        let complete =
            Quiver::from_arrows(3, (0..3).flat_map(|i| (0..3).map(move |j| (i, j)))).unwrap();
        assert_eq!(quiver_automorphisms(&complete, 9).unwrap().len(), 6);

        let cycle = Quiver::from_arrows(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        let auts = quiver_automorphisms(&cycle, 9).unwrap();
        assert_eq!(auts.len(), 4);
        assert!(auts.contains(&p("(1 2 3 4)", 4)));

        let empty = Quiver::from_arrows(3, []).unwrap();
        assert_eq!(quiver_automorphisms(&empty, 9).unwrap().len(), 6);

        let one = Quiver::from_arrows(1, [(0, 0)]).unwrap();
        assert_eq!(
            quiver_automorphisms(&one, 9).unwrap(),
            vec![Perm::identity(1)]
        );
    }

    #[test]
    fn automorphisms_respect_max_n() {
        let q = Quiver::from_arrows(10, []).unwrap();
        assert_eq!(
            quiver_automorphisms(&q, 9),
            Err(Error::TooLarge { n: 10, max_n: 9 })
        );
    }
}
