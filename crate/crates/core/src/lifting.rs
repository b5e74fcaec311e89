//! Liftable quiver automorphisms and their monomial lifts.
//!
//! A permutation `σ` of the vertices lifts to an automorphism of `Λ` when
//! conjugation by a monomial matrix `d(x)v(σ)` (entry `π^{x_i}` at
//! `(i, σ(i))`) maps `Λ` onto itself. At the level of exponents this is the
//! difference system
//!
//! ```text
//! x_i - x_j = α_ij - α_{σ(i)σ(j)}      for all ordered pairs i != j
//! ```
//!
//! The constraint graph is complete, so the solution set is either empty
//! or a single coset `x + Z·(1, ..., 1)`. Fixing `x_0 = 0` along the star
//! at vertex 0 produces the only candidate; checking every pair decides
//! consistency. Scalar diagonals are central, so the coset is reported by
//! its representative with `min x = 0`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::ExponentMatrix;
use crate::par;
use crate::perm::{self, Perm};
use crate::quiver::{link_graph, Quiver};

/// Exponents `x` of the diagonal factor `d(x) = diag(π^{x_1}, ..., π^{x_n})`,
/// normalized so that `min x = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiftVector(Vec<i64>);

impl LiftVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// Shifts `raw` by a constant so its minimum is 0.
    pub fn normalized(mut raw: Vec<i64>) -> Self {
        if let Some(&min) = raw.iter().min() {
            for v in &mut raw {
                *v -= min;
            }
        }
        Self(raw)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }
}

impl fmt::Debug for LiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// `(1,3,0)`-style rendering.
impl fmt::Display for LiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Outcome of solving a lift system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftSolution {
    Consistent(LiftVector),
    /// First ordered pair `(i, j)` (0-based, lexicographic) whose equation
    /// fails for the star-propagated candidate.
    Inconsistent {
        i: usize,
        j: usize,
    },
}

impl LiftSolution {
    pub fn into_option(self) -> Option<LiftVector> {
        match self {
            Self::Consistent(x) => Some(x),
            Self::Inconsistent { .. } => None,
        }
    }
}

/// Solves `x_i - x_j = a_ij - b_{σ(i)σ(j)}` over all ordered pairs `i != j`.
///
/// With `b = a` this is the lift system of `σ`; with a second order it asks
/// whether `d(x)v(σ)` conjugates `a` onto `b`.
pub fn solve_difference_system(
    a: &ExponentMatrix,
    b: &ExponentMatrix,
    sigma: &Perm,
) -> Result<LiftSolution> {
    let n = a.n();
    for m in [b.n(), sigma.n()] {
        if m != n {
            return Err(Error::DimensionMismatch { left: n, right: m });
        }
    }
    let rhs = |i: usize, j: usize| a.get(i, j) - b.get(sigma.apply(i), sigma.apply(j));
    let x: Vec<i64> = (0..n).map(|j| -rhs(0, j)).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && x[i] - x[j] != rhs(i, j) {
                return Ok(LiftSolution::Inconsistent { i, j });
            }
        }
    }
    Ok(LiftSolution::Consistent(LiftVector::normalized(x)))
}

/// Lift system of `σ` for the order `a`, with the failing pair on
/// inconsistency.
pub fn lift_system(a: &ExponentMatrix, sigma: &Perm) -> Result<LiftSolution> {
    solve_difference_system(a, a, sigma)
}

/// The normalized solution of the lift system of `σ`, if any.
pub fn solve_lift_system(a: &ExponentMatrix, sigma: &Perm) -> Result<Option<LiftVector>> {
    Ok(lift_system(a, sigma)?.into_option())
}

fn is_automorphism_of(q: &Quiver, sigma: &Perm) -> bool {
    q.arrows().count()
        == q.arrows()
            .filter(|&(i, j)| q.has_arrow(sigma.apply(i), sigma.apply(j)))
            .count()
}

/// Whether `σ` lifts to an automorphism of `a`.
///
/// A consistent lift system already forces `σ ∈ Aut(Q(Λ))`; that implication
/// is checked on every success and reported as an invariant failure if it
/// ever breaks.
pub fn is_liftable(a: &ExponentMatrix, sigma: &Perm) -> Result<bool> {
    let Some(x) = solve_lift_system(a, sigma)? else {
        return Ok(false);
    };
    if !is_automorphism_of(&link_graph(a), sigma) {
        return Err(Error::Invariant(format!(
            "{sigma} has lift {x} but is not a link-graph automorphism"
        )));
    }
    Ok(true)
}

/// The pair `(σ, x)`, standing for the monomial matrix `d(x)v(σ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialLift {
    sigma: Perm,
    x: LiftVector,
}

impl MonomialLift {
    pub fn identity(n: usize) -> Self {
        Self {
            sigma: Perm::identity(n),
            x: LiftVector::zero(n),
        }
    }

    /// Builds the lift after checking with [`ExponentMatrix::conjugate`] that
    /// it maps `a` onto itself.
    pub fn for_order(a: &ExponentMatrix, sigma: Perm, x: LiftVector) -> Result<Self> {
        let lift = Self { sigma, x };
        if !lift.verify(a)? {
            return Err(Error::Invariant(format!(
                "conjugation by {lift:?} does not preserve the order"
            )));
        }
        Ok(lift)
    }

    /// The lift of `σ` for `a`, or `None` when `σ` is not liftable.
    pub fn of(a: &ExponentMatrix, sigma: &Perm) -> Result<Option<Self>> {
        solve_lift_system(a, sigma)?
            .map(|x| Self::for_order(a, sigma.clone(), x))
            .transpose()
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn x(&self) -> &LiftVector {
        &self.x
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.x.is_zero()
    }

    /// True iff conjugation by this lift maps `a` onto itself.
    pub fn verify(&self, a: &ExponentMatrix) -> Result<bool> {
        Ok(a.conjugate(&self.sigma, self.x.as_slice())? == *a.as_lattice())
    }

    /// `d(x)v(σ) · d(y)v(τ) = d(x) d(y)^σ v(στ)`: the permutation parts
    /// compose left to right and `z_i = x_i + y_{σ(i)}`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let sigma = self.sigma.compose(&other.sigma)?;
        let z = (0..self.n())
            .map(|i| self.x.0[i] + other.x.0[self.sigma.apply(i)])
            .collect();
        Ok(Self {
            sigma,
            x: LiftVector::normalized(z),
        })
    }

    /// Inverse monomial matrix: `(σ⁻¹, y)` with `y_{σ(i)} = -x_i`.
    pub fn inverse(&self) -> Self {
        let mut y = vec![0; self.n()];
        for (i, &xi) in self.x.0.iter().enumerate() {
            y[self.sigma.apply(i)] = -xi;
        }
        Self {
            sigma: self.sigma.inverse(),
            x: LiftVector::normalized(y),
        }
    }

    pub fn matrix(&self) -> MonomialMatrix {
        let n = self.n();
        let mut entries = vec![None; n * n];
        for i in 0..n {
            entries[i * n + self.sigma.apply(i)] = Some(self.x.0[i]);
        }
        MonomialMatrix { n, entries }
    }
}

impl fmt::Debug for MonomialLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lift({}, {})", self.sigma, self.x)
    }
}

/// Lift product, see [`MonomialLift::compose`].
pub fn compose_lifts(l1: &MonomialLift, l2: &MonomialLift) -> Result<MonomialLift> {
    l1.compose(l2)
}

/// Symbolic monomial matrix.
pub fn lift_matrix(l: &MonomialLift) -> MonomialMatrix {
    l.matrix()
}

/// How the uniformizer is spelled when rendering matrices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PiStyle {
    #[default]
    Ascii,
    Unicode,
}

/// Matrix whose entries are `0` or a power of `π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    n: usize,
    entries: Vec<Option<i64>>,
}

impl MonomialMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` for a zero entry, otherwise the exponent of `π`.
    pub fn exponent(&self, i: usize, j: usize) -> Option<i64> {
        self.entries[i * self.n + j]
    }

    pub fn render_entry(&self, i: usize, j: usize, style: PiStyle) -> String {
        let pi = match style {
            PiStyle::Ascii => "pi",
            PiStyle::Unicode => "π",
        };
        match self.exponent(i, j) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => pi.into(),
            Some(e) => format!("{pi}^{e}"),
        }
    }

    pub fn render_rows(&self, style: PiStyle) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.render_entry(i, j, style))
                    .collect()
            })
            .collect()
    }

    /// `[[0,pi,0],[0,0,pi^3],[1,0,0]]`.
    pub fn render(&self, style: PiStyle) -> String {
        let rows: Vec<String> = self
            .render_rows(style)
            .into_iter()
            .map(|r| format!("[{}]", r.join(",")))
            .collect();
        format!("[{}]", rows.join(","))
    }
}

impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(PiStyle::Ascii))
    }
}

/// First arrow `(i, j)` of `Q(Λ)` whose value changes under `σ`, i.e.
/// `α_{σ(i)σ(j)} != α_ij`.
pub fn valuation_mismatch(a: &ExponentMatrix, sigma: &Perm) -> Result<Option<(usize, usize)>> {
    if sigma.n() != a.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: sigma.n(),
        });
    }
    let q = link_graph(a);
    if !is_automorphism_of(&q, sigma) {
        return Err(Error::NotQuiverAutomorphism);
    }
    let mismatch = q
        .arrows()
        .find(|&(i, j)| a.get(sigma.apply(i), sigma.apply(j)) != a.get(i, j));
    Ok(mismatch)
}

/// Whether `σ ∈ Aut(Q(Λ))` is also an automorphism of the valued quiver.
pub fn preserves_valuation(a: &ExponentMatrix, sigma: &Perm) -> Result<bool> {
    Ok(valuation_mismatch(a, sigma)?.is_none())
}

/// Groups larger than this get generators by first uncovered element rather
/// than the largest-extension search.
const GREEDY_GENERATOR_LIMIT: usize = 5040;

/// The finite group `O_Λ` of monomial lifts of liftable automorphisms.
#[derive(Clone, Debug)]
pub struct LiftableGroup {
    order_matrix: ExponentMatrix,
    elements: Vec<MonomialLift>,
    generators: Vec<MonomialLift>,
    is_cyclic: bool,
    is_abelian: bool,
    aut_q_order: usize,
}

impl LiftableGroup {
    pub fn order_matrix(&self) -> &ExponentMatrix {
        &self.order_matrix
    }

    /// Elements sorted by permutation image; the identity comes first.
    pub fn elements(&self) -> &[MonomialLift] {
        &self.elements
    }

    pub fn generators(&self) -> &[MonomialLift] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_cyclic
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian
    }

    /// `|Aut(Q(Λ))|`.
    pub fn aut_q_order(&self) -> usize {
        self.aut_q_order
    }

    pub fn lift_of(&self, sigma: &Perm) -> Option<&MonomialLift> {
        self.elements
            .binary_search_by(|l| l.sigma.cmp(sigma))
            .ok()
            .map(|k| &self.elements[k])
    }
}

/// Computes `O_Λ`: enumerates `Aut(Q(Λ))`, lifts what lifts, checks the
/// group laws and picks generators.
pub fn liftable_subgroup(a: &ExponentMatrix, max_n: usize) -> Result<LiftableGroup> {
    let q = link_graph(a);
    let auts = perm::quiver_automorphisms(&q, max_n)?;
    let lifted = par::map(&auts, |s| MonomialLift::of(a, s));
    let mut elements = Vec::new();
    for lift in lifted {
        if let Some(l) = lift? {
            elements.push(l);
        }
    }
    // auts is sorted, so elements are sorted by permutation too

    let index: HashMap<&Perm, usize> = elements
        .iter()
        .enumerate()
        .map(|(k, l)| (&l.sigma, k))
        .collect();
    let invariant = |msg: String| Err(Error::Invariant(msg));

    if elements.first().is_none_or(|l| !l.is_identity()) {
        return invariant("identity lift missing from O_Λ".into());
    }
    if auts.len() % elements.len() != 0 {
        return invariant(format!(
            "|O_Λ| = {} does not divide |Aut(Q)| = {}",
            elements.len(),
            auts.len()
        ));
    }

    let generators = choose_generators(&elements)?;

    // closure under the generators plus containment in their span gives
    // closure of the whole set; products must match the solver's lift
    for g in &elements {
        for s in &generators {
            let product = g.compose(s)?;
            match index.get(&product.sigma) {
                Some(&k) if elements[k] == product => {}
                _ => return invariant(format!("{g:?} * {s:?} = {product:?} not in O_Λ")),
            }
        }
        let inv = g.inverse();
        match index.get(&inv.sigma) {
            Some(&k) if elements[k] == inv && g.compose(&inv)?.is_identity() => {}
            _ => return invariant(format!("inverse of {g:?} missing from O_Λ")),
        }
    }

    let order = elements.len();
    let is_cyclic = elements.iter().any(|l| l.sigma.order() == order);
    let mut is_abelian = true;
    for (k, s) in generators.iter().enumerate() {
        for t in &generators[k + 1..] {
            if s.compose(t)? != t.compose(s)? {
                is_abelian = false;
            }
        }
    }

    Ok(LiftableGroup {
        order_matrix: a.clone(),
        elements,
        generators,
        is_cyclic,
        is_abelian,
        aut_q_order: auts.len(),
    })
}

/// Subgroup of permutations generated by `gens`.
fn span(gens: &[&Perm], n: usize) -> HashSet<Perm> {
    let id = Perm::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = g.compose(s).expect("same degree");
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

/// Greedy generating set: repeatedly add the element whose adjunction
/// enlarges the generated subgroup the most, ties going to the smallest
/// permutation. Only one element per left coset `H·c` is tried, since they
/// all generate the same subgroup together with `H`.
fn choose_generators(elements: &[MonomialLift]) -> Result<Vec<MonomialLift>> {
    let n = elements[0].n();
    let mut chosen: Vec<&MonomialLift> = Vec::new();
    let mut current = span(&[], n);
    while current.len() < elements.len() {
        let mut covered: HashSet<Perm> = HashSet::new();
        let mut candidates: Vec<&MonomialLift> = Vec::new();
        for l in elements {
            if current.contains(&l.sigma) || covered.contains(&l.sigma) {
                continue;
            }
            for h in &current {
                covered.insert(h.compose(&l.sigma)?);
            }
            candidates.push(l);
        }
        let pick = if elements.len() <= GREEDY_GENERATOR_LIMIT {
            let sizes = par::map(&candidates, |c| {
                let mut gens: Vec<&Perm> = chosen.iter().map(|l| &l.sigma).collect();
                gens.push(&c.sigma);
                span(&gens, n).len()
            });
            let best = sizes.iter().copied().max().expect("candidates non-empty");
            let k = sizes.iter().position(|&s| s == best).expect("max exists");
            candidates[k]
        } else {
            candidates[0]
        };
        chosen.push(pick);
        let gens: Vec<&Perm> = chosen.iter().map(|l| &l.sigma).collect();
        current = span(&gens, n);
    }
    Ok(chosen.into_iter().cloned().collect())
}

/// Looks for `σ` and `x` with `conjugate(a, σ, x) = b`, i.e. the monomial
/// matrix `d(x)v(σ)` conjugates the order `a` onto `b`.
///
/// Permutations are tried in lexicographic order, so the identity wins
/// whenever it works. Every witness is checked against the conjugation
/// oracle in both directions (via the inverse lift) before it is returned.
pub fn orders_isomorphic(
    a: &ExponentMatrix,
    b: &ExponentMatrix,
    max_n: usize,
) -> Result<Option<(Perm, LiftVector)>> {
    let n = a.n();
    if b.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: b.n(),
        });
    }
    perm::check_size(n, max_n)?;
    let firsts: Vec<usize> = (0..n).collect();
    let found = par::find_map_first(&firsts, |&first| {
        perm::symmetric_group_with_first(n, first).find_map(|s| {
            match solve_difference_system(a, b, &s).expect("dimensions checked") {
                LiftSolution::Consistent(x) => Some((s, x)),
                LiftSolution::Inconsistent { .. } => None,
            }
        })
    });
    let Some((sigma, x)) = found else {
        return Ok(None);
    };
    let forward = MonomialLift {
        sigma: sigma.clone(),
        x: x.clone(),
    };
    let back = forward.inverse();
    if a.conjugate(&sigma, x.as_slice())? != *b.as_lattice()
        || b.conjugate(&back.sigma, back.x.as_slice())? != *a.as_lattice()
    {
        return Err(Error::Invariant(format!(
            "isomorphism witness {forward:?} fails the conjugation check"
        )));
    }
    Ok(Some((sigma, x)))
}
