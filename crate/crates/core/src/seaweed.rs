//! Standard parabolic and seaweed subalgebras of `gl_n`/`sl_n`, their meander
//! graphs, and the meander index formula.
//!
//! Orientation: the top composition fixes a block upper-triangular parabolic,
//! the bottom composition a block lower-triangular one; the seaweed is their
//! intersection. Arcs within a block join positions symmetric about the
//! block centre, outermost first.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{AlgebraKind, Family, SubalgebraBasis};
use crate::ratlin::RatMatrix;

/// An ordered list of positive block sizes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    blocks: Vec<usize>,
}

impl Composition {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::InvalidComposition(format!("{blocks:?}")));
        }
        Ok(Self { blocks })
    }

    pub fn single(n: usize) -> Self {
        Self { blocks: vec![n] }
    }

    pub fn ones(n: usize) -> Self {
        Self { blocks: vec![1; n] }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn reversed(&self) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.reverse();
        Self { blocks }
    }

    /// Composition whose block boundaries sit after positions `cuts` (1-based, in `1..n`).
    pub fn from_cuts(n: usize, cuts: &BTreeSet<usize>) -> Result<Self> {
        if n == 0 || cuts.iter().any(|&c| c == 0 || c >= n) {
            return Err(Error::InvalidComposition(format!("cuts {cuts:?} for n={n}")));
        }
        let mut blocks = Vec::with_capacity(cuts.len() + 1);
        let mut prev = 0;
        for &c in cuts.iter().chain(std::iter::once(&n)) {
            blocks.push(c - prev);
            prev = c;
        }
        Self::new(blocks)
    }

    /// Block index of every position `0..n`.
    fn block_of(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(b, &len)| std::iter::repeat(b).take(len))
            .collect()
    }

    /// Pairs `(j, start + end - j)` inside each block, outermost first, 0-based.
    fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        let mut start = 0;
        for &len in &self.blocks {
            for t in 0..len / 2 {
                arcs.push((start + t, start + len - 1 - t));
            }
            start += len;
        }
        arcs
    }

    /// `sum_{i<=j} c_i c_j`, the dimension of the parabolic in `gl_n`.
    pub fn parabolic_dim_gl(&self) -> usize {
        let n = self.n();
        let sq: usize = self.blocks.iter().map(|c| c * c).sum();
        (n * n + sq) / 2
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.blocks.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

/// Accepts `"1|2|6"`; commas are also allowed as separators.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split(['|', ','])
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad block {t:?} in composition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(blocks)
    }
}

impl Serialize for Composition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeaweedSpec {
    pub top: Composition,
    pub bottom: Composition,
}

impl SeaweedSpec {
    pub fn new(top: Composition, bottom: Composition) -> Result<Self> {
        if top.n() != bottom.n() {
            return Err(Error::InvalidComposition(format!(
                "top sums to {} but bottom sums to {}",
                top.n(),
                bottom.n()
            )));
        }
        Ok(Self { top, bottom })
    }

    /// The standard parabolic with Levi blocks `top`.
    pub fn parabolic(top: Composition) -> Self {
        let n = top.n();
        Self {
            top,
            bottom: Composition::single(n),
        }
    }

    pub fn borel(n: usize) -> Self {
        Self::parabolic(Composition::ones(n))
    }

    pub fn n(&self) -> usize {
        self.top.n()
    }

    pub fn reversed(&self) -> Self {
        Self {
            top: self.top.reversed(),
            bottom: self.bottom.reversed(),
        }
    }

    /// Dimension in `gl_n`: admissible positions of the matrix.
    pub fn dim_gl(&self) -> usize {
        let (tb, bb) = (self.top.block_of(), self.bottom.block_of());
        let n = self.n();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| tb[i] <= tb[j] && bb[i] >= bb[j])
            .count()
    }
}

impl fmt::Display for SeaweedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.top, self.bottom)
    }
}

/// Accepts `"1|2|6 / 9"`.
impl FromStr for SeaweedSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (top, bottom) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("seaweed {s:?} needs the form \"top / bottom\"")))?;
        SeaweedSpec::new(top.parse()?, bottom.parse()?)
    }
}

/// Arc diagram of a seaweed: top arcs from the top composition, bottom arcs
/// from the bottom one, on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeanderGraph {
    pub n: usize,
    pub top_arcs: Vec<(usize, usize)>,
    pub bottom_arcs: Vec<(usize, usize)>,
    /// Vertex sets of the components, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub cycles: usize,
    pub paths: usize,
}

impl MeanderGraph {
    /// Index of the seaweed in `gl_n`: two per cycle, one per path.
    pub fn gl_index(&self) -> usize {
        2 * self.cycles + self.paths
    }

    /// Multi-line rendering: vertex ruler, both arc lists and the component census.
    pub fn render(&self) -> String {
        let arcs = |list: &[(usize, usize)]| {
            if list.is_empty() {
                "-".to_string()
            } else {
                list.iter()
                    .map(|(a, b)| format!("{a}-{b}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        };
        let ruler: Vec<String> = (1..=self.n).map(|v| v.to_string()).collect();
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                let vs: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        format!(
            "vertices: {}\ntop:      {}\nbottom:   {}\ncomponents: {}\ncycles: {}  paths: {}\n",
            ruler.join(" "),
            arcs(&self.top_arcs),
            arcs(&self.bottom_arcs),
            comps.join(" "),
            self.cycles,
            self.paths
        )
    }
}

pub fn meander(spec: &SeaweedSpec) -> MeanderGraph {
    let n = spec.n();
    let top = spec.top.arcs();
    let bottom = spec.bottom.arcs();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in top.iter().chain(&bottom) {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        let r = find(&mut parent, v);
        by_root.entry(r).or_default().push(v);
    }
    let mut edge_count = vec![0usize; n];
    for &(a, _) in top.iter().chain(&bottom) {
        let r = find(&mut parent, a);
        edge_count[r] += 1;
    }
    let mut components = Vec::new();
    let (mut cycles, mut paths) = (0, 0);
    for (root, verts) in &by_root {
        // Every vertex has degree at most two, so a component is a cycle
        // exactly when it has as many edges as vertices.
        if edge_count[*root] == verts.len() {
            cycles += 1;
        } else {
            paths += 1;
        }
        components.push(verts.iter().map(|v| v + 1).collect::<Vec<_>>());
    }
    components.sort();
    let one_based = |arcs: Vec<(usize, usize)>| arcs.into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
    MeanderGraph {
        n,
        top_arcs: one_based(top),
        bottom_arcs: one_based(bottom),
        components,
        cycles,
        paths,
    }
}

/// Index of the seaweed from its meander; the `sl_n` value is one less.
pub fn dk_index(spec: &SeaweedSpec, kind: Family) -> usize {
    let gl = meander(spec).gl_index();
    match kind {
        Family::Gl => gl,
        Family::Sl => gl - 1,
    }
}

/// Basis of the seaweed: matrix units at admissible off-diagonal positions
/// plus the diagonal (traceless for `sl_n`).
pub fn seaweed_basis(spec: &SeaweedSpec, kind: Family) -> Result<SubalgebraBasis> {
    let n = spec.n();
    let algebra = AlgebraKind::new(kind, n)?;
    let (tb, bb) = (spec.top.block_of(), spec.bottom.block_of());
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && tb[i] <= tb[j] && bb[i] >= bb[j] {
                mats.push(RatMatrix::unit(n, i, j));
            }
        }
    }
    match kind {
        Family::Gl => mats.extend((0..n).map(|i| RatMatrix::unit(n, i, i))),
        Family::Sl => mats.extend(
            (0..n - 1).map(|i| &RatMatrix::unit(n, i, i) - &RatMatrix::unit(n, i + 1, i + 1)),
        ),
    }
    Ok(SubalgebraBasis::from_parts_unchecked(algebra, mats))
}

/// Upper Borel subalgebra.
pub fn borel(kind: AlgebraKind) -> SubalgebraBasis {
    seaweed_basis(&SeaweedSpec::borel(kind.n), kind.family).expect("n >= 2")
}

/// Levi composition of the standard parabolic `p_A`: block boundaries at the
/// simple roots not in `A`.
pub fn levi_composition(a: &BTreeSet<usize>, n: usize) -> Result<Composition> {
    if let Some(bad) = a.iter().find(|&&i| i == 0 || i >= n) {
        return Err(Error::Precondition(format!("simple root {bad} is outside 1..{}", n - 1)));
    }
    let cuts: BTreeSet<usize> = (1..n).filter(|i| !a.contains(i)).collect();
    Composition::from_cuts(n, &cuts)
}

/// The standard (upper) parabolic whose Levi factor has simple roots `A`.
pub fn parabolic_from_a(a: &BTreeSet<usize>, n: usize, kind: Family) -> Result<SubalgebraBasis> {
    let comp = levi_composition(a, n)?;
    seaweed_basis(&SeaweedSpec::parabolic(comp), kind)
}

/// Dimensions of the standard parabolics of `sl_n` with index zero.
pub fn frobenius_parabolic_dims(n: usize) -> Result<BTreeSet<usize>> {
    Ok(frobenius_parabolics(n)?.into_iter().map(|(_, d)| d).collect())
}

/// Every index-zero standard parabolic of `sl_n` with its dimension, in subset order.
pub fn frobenius_parabolics(n: usize) -> Result<Vec<(Composition, usize)>> {
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    let subsets: Vec<u64> = (0..1u64 << (n - 1)).collect();
    let found: Vec<Option<(Composition, usize)>> = subsets
        .par_iter()
        .map(|&mask| {
            let a: BTreeSet<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let comp = levi_composition(&a, n).expect("valid subset");
            let spec = SeaweedSpec::parabolic(comp.clone());
            (dk_index(&spec, Family::Sl) == 0).then(|| {
                let dim = comp.parabolic_dim_gl() - 1;
                (comp, dim)
            })
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// Simple roots of a minimal-dimension Frobenius parabolic of `sl_n`:
/// even roots up to `n-1` for odd `n`; for even `n` the even roots of the
/// first half followed by odd roots of the second half.
pub fn minimal_frobenius_a(n: usize) -> Result<BTreeSet<usize>> {
    if n < 3 {
        return Err(Error::Precondition(format!("need n >= 3, got {n}")));
    }
    let set = if n % 2 == 1 {
        let k = (n - 1) / 2;
        (1..=k).map(|i| 2 * i).collect()
    } else if n % 4 == 0 {
        let p = n / 4;
        (1..p)
            .map(|i| 2 * i)
            .chain((2 * p + 1..=4 * p - 1).step_by(2))
            .collect()
    } else {
        let p = (n - 2) / 4;
        (1..=p)
            .map(|i| 2 * i)
            .chain((2 * p + 3..=4 * p + 1).step_by(2))
            .collect()
    };
    Ok(set)
}

/// `floor((n-1)/2)`, the index of the Borel subalgebra of `sl_n`.
pub fn borel_index_formula(n: usize) -> usize {
    (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sw(s: &str) -> SeaweedSpec {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn parsing() {
        let s = sw("1|2|6 / 9");
        assert_eq!(s.top.blocks(), &[1, 2, 6]);
        assert_eq!(s.bottom.blocks(), &[9]);
        assert!("1|2 / 4".parse::<SeaweedSpec>().is_err());
        assert!("1|0 / 1".parse::<SeaweedSpec>().is_err());
        assert!("3".parse::<SeaweedSpec>().is_err());
        assert_eq!(s.to_string(), "1|2|6 / 9");
    }

    #[test]
    fn parabolic_examples() {
        let n = 5;
        let all: BTreeSet<usize> = (1..n).collect();
        assert_eq!(parabolic_from_a(&all, n, Family::Sl).unwrap().dim(), n * n - 1);
        assert_eq!(
            parabolic_from_a(&BTreeSet::new(), n, Family::Sl).unwrap().dim(),
            n * (n + 1) / 2 - 1
        );
        for i in 1..n {
            let a: BTreeSet<usize> = (1..n).filter(|&j| j != i).collect();
            assert_eq!(
                parabolic_from_a(&a, n, Family::Sl).unwrap().dim(),
                n * n - 1 - i * (n - i)
            );
        }
        assert!(parabolic_from_a(&set(&[5]), 5, Family::Sl).is_err());
        assert!(parabolic_from_a(&set(&[0]), 5, Family::Sl).is_err());
    }

    #[test]
    fn seaweed_examples() {
        assert_eq!(seaweed_basis(&sw("4 / 4"), Family::Gl).unwrap().dim(), 16);
        let b = seaweed_basis(&sw("1|1|1|1 / 4"), Family::Gl).unwrap();
        assert_eq!(b.dim(), 10);
        for m in b.mats() {
            for i in 0..4 {
                for j in 0..i {
                    assert!(num_traits::Zero::is_zero(&m[(i, j)]));
                }
            }
        }
        let p = seaweed_basis(&sw("1|2|6 / 9"), Family::Sl).unwrap();
        assert_eq!(p.dim(), 60);
        assert!(p.is_closed());
        assert_eq!(sw("1|2|6 / 9").dim_gl(), 61);
    }

    #[test]
    fn meander_examples() {
        let m = meander(&sw("1|1|1 / 1|1|1"));
        assert_eq!((m.cycles, m.paths), (0, 3));
        let m = meander(&sw("2 / 1|1"));
        assert_eq!((m.cycles, m.paths), (0, 1));
        assert_eq!(m.components, vec![vec![1, 2]]);
        for n in 2..=10 {
            assert_eq!(dk_index(&SeaweedSpec::borel(n), Family::Sl), borel_index_formula(n));
        }
    }

    #[test]
    fn dk_index_examples() {
        for n in 2..=8 {
            let full = SeaweedSpec::parabolic(Composition::single(n));
            assert_eq!(dk_index(&full, Family::Gl), n);
            let p1 = SeaweedSpec::parabolic(Composition::new(vec![1, n - 1]).unwrap());
            assert_eq!(dk_index(&p1, Family::Sl), 0);
        }
        assert_eq!(dk_index(&SeaweedSpec::borel(6), Family::Sl), 2);
    }

    #[test]
    fn frobenius_dims() {
        assert_eq!(frobenius_parabolic_dims(6).unwrap(), set(&[22, 24, 26, 30]));
        assert_eq!(frobenius_parabolic_dims(2).unwrap(), set(&[2]));
        assert!(frobenius_parabolic_dims(1).is_err());
    }

    #[test]
    fn minimal_a_examples() {
        assert_eq!(minimal_frobenius_a(5).unwrap(), set(&[2, 4]));
        assert_eq!(minimal_frobenius_a(8).unwrap(), set(&[2, 5, 7]));
        assert_eq!(minimal_frobenius_a(6).unwrap(), set(&[2, 5]));
        assert_eq!(minimal_frobenius_a(3).unwrap(), set(&[2]));
        assert_eq!(minimal_frobenius_a(4).unwrap(), set(&[3]));
        assert!(minimal_frobenius_a(2).is_err());
    }

    #[test]
    fn reversal_symmetry() {
        for s in ["1|2|3 / 4|2", "2|2|1 / 1|4", "3|1 / 1|1|2"] {
            let s = sw(s);
            assert_eq!(dk_index(&s, Family::Gl), dk_index(&s.reversed(), Family::Gl));
        }
    }
}
