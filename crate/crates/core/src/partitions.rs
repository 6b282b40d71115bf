//! Integer partitions indexing nilpotent orbits of `sl_n`, with the closed-form
//! orbit and centralizer dimensions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts. Zeros are stripped and parts
/// sorted on construction, so equal partitions compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no positive parts".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// The one-row partition `(n)`.
    pub fn principal(n: usize) -> Self {
        Self { parts: vec![n] }
    }

    /// The one-column partition `(1^n)`.
    pub fn trivial(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    pub fn is_trivial(&self) -> bool {
        self.parts[0] == 1
    }

    pub fn is_principal(&self) -> bool {
        self.parts.len() == 1
    }

    /// Conjugate partition: column lengths of the Young diagram.
    pub fn dual(&self) -> Self {
        let parts = (1..=self.parts[0])
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self { parts }
    }

    /// Sum of squared parts of the dual, i.e. `dim (gl_n)^e`.
    pub fn dual_square_sum(&self) -> usize {
        self.dual().parts.iter().map(|m| m * m).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Accepts `"5,2,2"` and exponent shorthand such as `"3,1^4"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::Parse(format!("empty part in partition {s:?}")));
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {token:?}")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?;
            if base == 0 {
                return Err(Error::Parse(format!("zero part in {token:?}")));
            }
            parts.extend(std::iter::repeat(base).take(exp));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Closed-form data attached to the nilpotent orbit of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStats {
    pub partition: Partition,
    pub orbit_dim: usize,
    pub centralizer_dim_gl: usize,
    pub centralizer_dim_sl: usize,
    pub spherical: bool,
    pub rank_of_e: usize,
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

pub fn dual(lambda: &Partition) -> Partition {
    lambda.dual()
}

pub fn orbit_stats(lambda: &Partition) -> OrbitStats {
    let n = lambda.n();
    let centralizer_dim_gl = lambda.dual_square_sum();
    OrbitStats {
        partition: lambda.clone(),
        orbit_dim: n * n - centralizer_dim_gl,
        centralizer_dim_gl,
        centralizer_dim_sl: centralizer_dim_gl - 1,
        spherical: lambda.largest() <= 2,
        rank_of_e: n - lambda.len(),
    }
}

pub fn orbit_dim(lambda: &Partition) -> usize {
    let n = lambda.n();
    n * n - lambda.dual_square_sum()
}

/// `sum_{i,j} min(lambda_i, lambda_j)`: the count of independent diagonal
/// strips in the centralizer of a Jordan matrix.
pub fn centralizer_dim_minsum(lambda: &Partition) -> usize {
    let p = lambda.parts();
    p.iter()
        .flat_map(|a| p.iter().map(move |b| (*a).min(*b)))
        .sum()
}

/// Dominance order: every prefix sum of `lambda` is at least that of `nu`.
pub fn dominates(lambda: &Partition, nu: &Partition) -> Result<bool> {
    if lambda.n() != nu.n() {
        return Err(Error::InvalidPartition(format!(
            "cannot compare partitions of {} and {}",
            lambda.n(),
            nu.n()
        )));
    }
    let len = lambda.len().max(nu.len());
    let (mut sl, mut sn) = (0, 0);
    for i in 0..len {
        sl += lambda.parts().get(i).copied().unwrap_or(0);
        sn += nu.parts().get(i).copied().unwrap_or(0);
        if sl < sn {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Jordan type of the `k`-th power of a regular nilpotent in `gl_n`:
/// `((l+1)^q, l^(k-q))` where `n = k l + q`, `0 <= q < k`.
pub fn power_partition(n: usize, k: usize) -> Result<Partition> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let (l, q) = (n / k, n % k);
    let mut parts = vec![l + 1; q];
    parts.extend(std::iter::repeat(l).take(k - q));
    Partition::new(parts)
}

/// The `k` with `power_partition(n, k) == lambda`, if any.
pub fn power_exponent(lambda: &Partition) -> Option<usize> {
    let n = lambda.n();
    let k = lambda.len();
    (power_partition(n, k).ok()? == *lambda).then_some(k)
}

/// `(m+1, m-1)` for `n = 2m` and `(m+2, m-1)` for `n = 2m+1`. Every
/// non-principal orbit of larger dimension has no complementary subalgebra.
pub fn tilde_orbit(n: usize) -> Result<Partition> {
    if n < 4 {
        return Err(Error::Precondition(format!("tilde orbit needs n >= 4, got {n}")));
    }
    let m = n / 2;
    if n % 2 == 0 {
        Partition::new(vec![m + 1, m - 1])
    } else {
        Partition::new(vec![m + 2, m - 1])
    }
}

/// True when the orbit is not principal and strictly larger than the tilde
/// orbit; such orbits admit no complementary subalgebra.
pub fn dimension_excluded(lambda: &Partition) -> Result<bool> {
    let n = lambda.n();
    if lambda.is_principal() {
        return Ok(false);
    }
    let tilde = tilde_orbit(n)?;
    Ok(orbit_dim(lambda) > orbit_dim(&tilde))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Independent count of partitions via the recurrence on the largest part.
    fn partition_count(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| partition_count(n - k, k)).sum()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions_of(1).unwrap(), vec![p("1")]);
        assert_eq!(partitions_of(4).unwrap().len(), 5);
        assert_eq!(partitions_of(9).unwrap().len(), 30);
        for n in 1..=14 {
            assert_eq!(partitions_of(n).unwrap().len(), partition_count(n, n));
        }
        assert!(partitions_of(0).is_err());
    }

    #[test]
    fn enumeration_is_reverse_lexicographic() {
        let all = partitions_of(6).unwrap();
        assert_eq!(all.first(), Some(&p("6")));
        assert_eq!(all.last(), Some(&p("1^6")));
        for w in all.windows(2) {
            assert!(w[0].parts() > w[1].parts());
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(p("3,1^4").parts(), &[3, 1, 1, 1, 1]);
        assert_eq!(p("2,5,2").parts(), &[5, 2, 2]);
        assert_eq!(p("(5,2,2)").to_string(), "5,2,2");
        assert!("".parse::<Partition>().is_err());
        assert!("3,,1".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!(Partition::new(vec![0, 0]).is_err());
        assert_eq!(Partition::new(vec![1, 0, 3]).unwrap(), p("3,1"));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(p("7").dual(), p("1^7"));
        assert_eq!(p("5,2,2").dual(), p("3,3,1,1,1"));
        // ((l+1)^q, l^(k-q)) has dual (k^l, q)
        let (n, k) = (10, 3);
        assert_eq!(power_partition(n, k).unwrap().dual(), p("3,3,3,1"));
    }

    #[test]
    fn orbit_stats_examples() {
        for n in 2..=8 {
            assert_eq!(orbit_stats(&Partition::principal(n)).orbit_dim, n * n - n);
            assert_eq!(orbit_stats(&Partition::trivial(n)).orbit_dim, 0);
        }
        let s = orbit_stats(&p("5,2,2"));
        assert_eq!(s.orbit_dim, 60);
        assert_eq!(s.centralizer_dim_sl, 20);
        assert_eq!(s.rank_of_e, 6);
        assert!(!s.spherical);
        assert!(orbit_stats(&p("2,2,1")).spherical);
    }

    #[test]
    fn minsum_examples() {
        assert_eq!(centralizer_dim_minsum(&p("6")), 6);
        assert_eq!(centralizer_dim_minsum(&p("2,1")), 5);
        assert_eq!(centralizer_dim_minsum(&p("5,2,2")), 21);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p("3,2,1"), &p("3,2,1")).unwrap());
        for nu in partitions_of(6).unwrap() {
            assert!(dominates(&p("6"), &nu).unwrap());
        }
        assert!(!dominates(&p("3,3"), &p("4,1,1")).unwrap());
        assert!(!dominates(&p("4,1,1"), &p("3,3")).unwrap());
        assert!(dominates(&p("3,2"), &p("4")).is_err());
    }

    #[test]
    fn power_partition_examples() {
        assert_eq!(power_partition(7, 1).unwrap(), p("7"));
        let lam = power_partition(10, 3).unwrap();
        assert_eq!(lam, p("4,3,3"));
        assert_eq!(orbit_dim(&lam), 72);
        for m in 2..=6 {
            let mut expect = vec![3];
            expect.extend(std::iter::repeat(2).take(m - 1));
            assert_eq!(power_partition(2 * m + 1, m).unwrap(), Partition::new(expect).unwrap());
        }
        assert!(power_partition(5, 0).is_err());
        assert!(power_partition(5, 6).is_err());
        assert_eq!(power_exponent(&p("3,3")), Some(2));
        assert_eq!(power_exponent(&p("5,1")), None);
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(tilde_orbit(8).unwrap(), p("5,3"));
        assert_eq!(tilde_orbit(9).unwrap(), p("6,3"));
        assert_eq!(tilde_orbit(4).unwrap(), p("3,1"));
        assert!(tilde_orbit(3).is_err());
    }

    #[test]
    fn exclusion_examples() {
        assert!(!dimension_excluded(&p("10")).unwrap());
        assert!(dimension_excluded(&p("8,1,1")).unwrap());
        assert!(dimension_excluded(&p("5,1")).unwrap());
        assert!(!dimension_excluded(&p("4,2")).unwrap());
    }
}
