//! Orbit classification: explicit complements first, then the dimension
//! obstruction, then randomized searches. A failed search yields `Unknown`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lie::{index_monte_carlo, AlgebraKind, Family, SubalgebraBasis};
use crate::partitions::{dimension_excluded, orbit_dim, partitions_of, power_exponent, tilde_orbit, Partition};
use crate::ratlin::{derive_seed, RatMatrix, SeededRng};
use crate::seaweed::{
    borel, dk_index, frobenius_parabolics, levi_composition, minimal_frobenius_a, seaweed_basis,
    Composition, SeaweedSpec,
};
use crate::strange::flags::{flag_stabilizer, three_part_partition, witness_flag_three_part, witness_flag_two_part};
use crate::strange::pair::check_pair;
use crate::strange::search::{random_conjugate_search, root_subalgebra_search};
use crate::strange::witness::{to_jordan_frame, witness_fig1, witness_solvable_spherical};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Strange,
    NotStrange,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    #[serde(rename = "fig1")]
    Fig1,
    #[serde(rename = "solvable")]
    Solvable,
    #[serde(rename = "flag2")]
    Flag2,
    #[serde(rename = "flag3")]
    Flag3,
    #[serde(rename = "parabolic-conjugate")]
    ParabolicConjugate,
    #[serde(rename = "root-conjugate")]
    RootConjugate,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Fig1 => "fig1",
            WitnessKind::Solvable => "solvable",
            WitnessKind::Flag2 => "flag2",
            WitnessKind::Flag3 => "flag3",
            WitnessKind::ParabolicConjugate => "parabolic-conjugate",
            WitnessKind::RootConjugate => "root-conjugate",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            WitnessKind::Fig1,
            WitnessKind::Solvable,
            WitnessKind::Flag2,
            WitnessKind::Flag3,
            WitnessKind::ParabolicConjugate,
            WitnessKind::RootConjugate,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }
}

/// A named construction together with the subalgebra it produced, expressed
/// in the Jordan basis of the orbit's partition.
#[derive(Clone, Debug)]
pub struct Witness {
    pub kind: WitnessKind,
    pub data: Value,
    pub basis: SubalgebraBasis,
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut obj = serde_json::Map::new();
        obj.insert("kind".into(), json!(self.kind));
        if let Value::Object(data) = &self.data {
            for (k, v) in data {
                obj.insert(k.clone(), v.clone());
            }
        }
        Value::Object(obj).serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub dim_orbit: usize,
    pub dim_h: Option<usize>,
    pub intersection_dim: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub index_upper_bound: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationVerdict {
    pub partition: Partition,
    pub n: usize,
    pub status: Status,
    pub witness: Option<Witness>,
    pub reason: String,
    pub checks: Checks,
}

impl ClassificationVerdict {
    /// Rebuilds the pair report from the stored witness; `true` for verdicts
    /// without a witness.
    pub fn reverify(&self) -> Result<bool> {
        match (&self.status, &self.witness) {
            (Status::Strange, Some(w)) => {
                let r = check_pair(&self.partition, &w.basis, AlgebraKind::sl(self.n))?;
                Ok(r.is_strange_pair && r.h_is_subalgebra)
            }
            (Status::Strange, None) => Ok(false),
            _ => Ok(self.witness.is_none()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyConfig {
    pub seed: u64,
    /// Conjugation trials allowed per search stage.
    pub search_trials: usize,
    pub height: u64,
    /// Trials for the Monte-Carlo index of a found complement.
    pub index_trials: usize,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            search_trials: 200,
            height: 10,
            index_trials: 8,
        }
    }
}

/// Conjugation trials spent on a single candidate before moving on.
const TRIALS_PER_CANDIDATE: usize = 8;
/// The torus-stable root search is only run up to this rank.
const ROOT_SEARCH_MAX_N: usize = 6;

/// Per-partition generator, independent of scheduling.
pub fn partition_rng(seed: u64, lambda: &Partition) -> SeededRng {
    let tags: Vec<u64> = lambda.parts().iter().map(|&p| p as u64).collect();
    SeededRng::new(derive_seed(seed, &tags))
}

fn matrix_json(m: &RatMatrix) -> Value {
    json!((0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn set_json(a: &BTreeSet<usize>) -> Value {
    json!(a.iter().collect::<Vec<_>>())
}

fn simple_roots_of(comp: &Composition) -> BTreeSet<usize> {
    let mut cuts = BTreeSet::new();
    let mut acc = 0;
    for &c in &comp.blocks()[..comp.blocks().len() - 1] {
        acc += c;
        cuts.insert(acc);
    }
    (1..comp.n()).filter(|i| !cuts.contains(i)).collect()
}

/// Orbit expected to take the minimal Frobenius parabolic as a complement:
/// `(3, 2^{k-2}, 1)` for `n = 2k` and `(3, 2^{k-1})` for `n = 2k+1`.
pub fn minimal_frobenius_target(n: usize) -> Result<Partition> {
    if n < 3 {
        return Err(Error::Precondition(format!("need n >= 3, got {n}")));
    }
    let k = n / 2;
    let mut parts = vec![3];
    if n % 2 == 0 {
        parts.extend(std::iter::repeat(2).take(k - 2));
        parts.push(1);
    } else {
        parts.extend(std::iter::repeat(2).take(k - 1));
    }
    Partition::new(parts)
}

fn witness_from_parabolic_search(
    lambda: &Partition,
    comp: &Composition,
    trials: usize,
    cfg: &ClassifyConfig,
    rng: &SeededRng,
) -> Result<Option<Witness>> {
    let h0 = seaweed_basis(&SeaweedSpec::parabolic(comp.clone()), Family::Sl)?;
    let Some(hit) = random_conjugate_search(lambda, &h0, trials, cfg.height, rng)? else {
        return Ok(None);
    };
    Ok(Some(Witness {
        kind: WitnessKind::ParabolicConjugate,
        data: json!({
            "composition": comp,
            "simple_roots": set_json(&simple_roots_of(comp)),
            "conjugator": matrix_json(&hit.g),
            "trials_used": hit.trials_used,
        }),
        basis: hit.h,
    }))
}

/// Explicit complements that need no search, if one applies to `lambda`.
fn deterministic_witness(lambda: &Partition) -> Result<Option<Witness>> {
    let n = lambda.n();
    if let Some(k) = power_exponent(lambda) {
        let h = to_jordan_frame(&witness_fig1(n, k)?, k, Family::Sl)?;
        return Ok(Some(Witness {
            kind: WitnessKind::Fig1,
            data: json!({ "n": n, "k": k }),
            basis: h,
        }));
    }
    if n >= 4 && *lambda == tilde_orbit(n)? {
        let flag = witness_flag_two_part(n)?;
        let h = flag_stabilizer(&flag, AlgebraKind::sl(n))?;
        return Ok(Some(Witness {
            kind: WitnessKind::Flag2,
            data: json!({ "flag": flag }),
            basis: h,
        }));
    }
    if three_part_partition(n).ok().as_ref() == Some(lambda) {
        let flag = witness_flag_three_part(n)?;
        let h = flag_stabilizer(&flag, AlgebraKind::sl(n))?;
        return Ok(Some(Witness {
            kind: WitnessKind::Flag3,
            data: json!({ "flag": flag }),
            basis: h,
        }));
    }
    Ok(None)
}

fn searched_witness(lambda: &Partition, cfg: &ClassifyConfig, rng: &SeededRng) -> Result<Option<(Witness, String)>> {
    let n = lambda.n();
    let dim = orbit_dim(lambda);
    if n >= 3 && *lambda == minimal_frobenius_target(n)? {
        let a = minimal_frobenius_a(n)?;
        let comp = levi_composition(&a, n)?;
        if let Some(w) = witness_from_parabolic_search(lambda, &comp, cfg.search_trials, cfg, &rng.fork(1))? {
            return Ok(Some((w, "conjugate of the minimal Frobenius parabolic".into())));
        }
    }
    let matching: Vec<Composition> = frobenius_parabolics(n)?
        .into_iter()
        .filter(|(_, d)| *d == dim)
        .map(|(c, _)| c)
        .collect();
    let mut spent = 0;
    for (i, comp) in matching.iter().enumerate() {
        if spent >= cfg.search_trials {
            break;
        }
        let trials = TRIALS_PER_CANDIDATE.min(cfg.search_trials - spent);
        if let Some(w) = witness_from_parabolic_search(lambda, comp, trials, cfg, &rng.fork_path(&[2, i as u64]))? {
            return Ok(Some((w, "conjugate of a Frobenius parabolic".into())));
        }
        spent += trials;
    }
    if n <= ROOT_SEARCH_MAX_N {
        let found = root_subalgebra_search(lambda, 2, TRIALS_PER_CANDIDATE, cfg.search_trials, cfg.height, &rng.fork(3))?;
        if let Some(hit) = found {
            let torus: Vec<Vec<String>> = hit.base.mats()[..hit.candidate.torus_dim]
                .iter()
                .map(|m| (0..n).map(|i| m[(i, i)].to_string()).collect())
                .collect();
            let w = Witness {
                kind: WitnessKind::RootConjugate,
                data: json!({
                    "alpha": hit.candidate.alpha + 1,
                    "removed_roots": hit.candidate.removed.iter().map(|(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(),
                    "torus": torus,
                    "conjugator": matrix_json(&hit.hit.g),
                    "trials_used": hit.hit.trials_used,
                }),
                basis: hit.hit.h,
            };
            return Ok(Some((w, "conjugate of a torus-stable root subalgebra".into())));
        }
    }
    Ok(None)
}

fn verified(lambda: &Partition, witness: Witness, reason: String, cfg: &ClassifyConfig, rng: &SeededRng) -> Result<ClassificationVerdict> {
    let n = lambda.n();
    let report = check_pair(lambda, &witness.basis, AlgebraKind::sl(n))?;
    let est = index_monte_carlo(&witness.basis, cfg.index_trials, cfg.height, &rng.fork(4))?;
    let ok = report.is_strange_pair && report.h_is_subalgebra;
    let checks = Checks {
        dim_orbit: report.dim_orbit,
        dim_h: Some(report.dim_h),
        intersection_dim: Some(report.b),
        a: Some(report.a),
        b: Some(report.b),
        index_upper_bound: Some(est.upper_bound_on_index),
    };
    if !ok {
        // A named construction that fails its own check is a bug, not evidence.
        return Ok(ClassificationVerdict {
            partition: lambda.clone(),
            n,
            status: Status::Unknown,
            witness: None,
            reason: format!("{} construction did not verify", witness.kind.name()),
            checks,
        });
    }
    Ok(ClassificationVerdict {
        partition: lambda.clone(),
        n,
        status: Status::Strange,
        witness: Some(witness),
        reason,
        checks,
    })
}

/// Decides the orbit of `lambda` in `sl_n` as far as the available
/// constructions and the dimension obstruction allow.
pub fn classify_orbit(lambda: &Partition, cfg: &ClassifyConfig) -> Result<ClassificationVerdict> {
    let n = lambda.n();
    if n < 2 || lambda.is_trivial() {
        return Err(Error::Precondition(format!("need a nonzero nilpotent orbit with n >= 2, got {lambda}")));
    }
    let rng = partition_rng(cfg.seed, lambda);
    let dim = orbit_dim(lambda);
    if let Some(w) = deterministic_witness(lambda)? {
        let reason = match w.kind {
            WitnessKind::Fig1 => "power of a regular nilpotent: block-shaped complement",
            WitnessKind::Flag2 => "two-part orbit: stabilizer of an explicit flag",
            _ => "three-part orbit: stabilizer of an explicit flag",
        };
        return verified(lambda, w, reason.into(), cfg, &rng);
    }
    if n >= 4 && dimension_excluded(lambda)? {
        let tilde = tilde_orbit(n)?;
        return Ok(ClassificationVerdict {
            partition: lambda.clone(),
            n,
            status: Status::NotStrange,
            witness: None,
            reason: format!(
                "dimension obstruction: non-principal orbit of dimension {dim} exceeds dim O({tilde}) = {}",
                orbit_dim(&tilde)
            ),
            checks: Checks {
                dim_orbit: dim,
                dim_h: None,
                intersection_dim: None,
                a: None,
                b: None,
                index_upper_bound: None,
            },
        });
    }
    if let Some((w, reason)) = searched_witness(lambda, cfg, &rng)? {
        return verified(lambda, w, reason, cfg, &rng);
    }
    Ok(ClassificationVerdict {
        partition: lambda.clone(),
        n,
        status: Status::Unknown,
        witness: None,
        reason: "no complement found by the randomized searches".into(),
        checks: Checks {
            dim_orbit: dim,
            dim_h: None,
            intersection_dim: None,
            a: None,
            b: None,
            index_upper_bound: None,
        },
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    pub strange: usize,
    pub not_strange: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyReport {
    pub n: usize,
    pub verdicts: Vec<ClassificationVerdict>,
    pub summary: StatusCounts,
    pub config: ClassifyConfig,
}

/// Classifies every nontrivial partition of `n`, in enumeration order.
pub fn survey(n: usize, cfg: &ClassifyConfig) -> Result<SurveyReport> {
    if n < 2 {
        return Err(Error::Precondition(format!("survey needs n >= 2, got {n}")));
    }
    let parts: Vec<Partition> = partitions_of(n)?.into_iter().filter(|p| !p.is_trivial()).collect();
    let verdicts = parts
        .par_iter()
        .map(|p| classify_orbit(p, cfg))
        .collect::<Result<Vec<_>>>()?;
    let mut summary = StatusCounts::default();
    for v in &verdicts {
        match v.status {
            Status::Strange => summary.strange += 1,
            Status::NotStrange => summary.not_strange += 1,
            Status::Unknown => summary.unknown += 1,
        }
    }
    Ok(SurveyReport {
        n,
        verdicts,
        summary,
        config: *cfg,
    })
}

/// Resolves a named construction for `lambda` in `sl_n`, in the Jordan frame.
/// Constructions tied to a power of the regular nilpotent use `k = #parts`.
pub fn named_witness(lambda: &Partition, kind: WitnessKind, cfg: &ClassifyConfig) -> Result<SubalgebraBasis> {
    let n = lambda.n();
    let k = lambda.len();
    match kind {
        WitnessKind::Fig1 => to_jordan_frame(&witness_fig1(n, k)?, k, Family::Sl),
        WitnessKind::Solvable => to_jordan_frame(&witness_solvable_spherical(n, k)?, k, Family::Sl),
        WitnessKind::Flag2 => flag_stabilizer(&witness_flag_two_part(n)?, AlgebraKind::sl(n)),
        WitnessKind::Flag3 => flag_stabilizer(&witness_flag_three_part(n)?, AlgebraKind::sl(n)),
        WitnessKind::ParabolicConjugate => {
            let comp = levi_composition(&minimal_frobenius_a(n)?, n)?;
            let rng = partition_rng(cfg.seed, lambda).fork(1);
            match witness_from_parabolic_search(lambda, &comp, cfg.search_trials, cfg, &rng)? {
                Some(w) => Ok(w.basis),
                None => seaweed_basis(&SeaweedSpec::parabolic(comp), Family::Sl),
            }
        }
        WitnessKind::RootConjugate => {
            let rng = partition_rng(cfg.seed, lambda).fork(3);
            match root_subalgebra_search(lambda, 2, TRIALS_PER_CANDIDATE, cfg.search_trials, cfg.height, &rng)? {
                Some(hit) => Ok(hit.hit.h),
                None => Err(Error::Precondition(format!("no torus-stable root subalgebra found for {lambda}"))),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Numerology {
    pub n: usize,
    pub dim_b: usize,
    pub ind_b: usize,
    /// `dim b - ind b`, the largest dimension of a spherical nilpotent orbit.
    pub m_sph: usize,
    pub max_frobenius_parabolic_dim: usize,
    pub n_squared_minus_n: usize,
}

pub fn numerology(n: usize) -> Result<Numerology> {
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    let dim_b = borel(AlgebraKind::sl(n)).dim();
    let ind_b = dk_index(&SeaweedSpec::borel(n), Family::Sl);
    let max_frob = frobenius_parabolics(n)?
        .into_iter()
        .map(|(_, d)| d)
        .max()
        .expect("the maximal parabolics of type (1, n-1) are Frobenius");
    Ok(Numerology {
        n,
        dim_b,
        ind_b,
        m_sph: dim_b - ind_b,
        max_frobenius_parabolic_dim: max_frob,
        n_squared_minus_n: n * n - n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn numerology_examples() {
        let six = numerology(6).unwrap();
        assert_eq!((six.m_sph, six.max_frobenius_parabolic_dim), (18, 30));
        assert_eq!(numerology(3).unwrap().m_sph, 4);
        assert_eq!(numerology(2).unwrap().m_sph, 2);
    }

    #[test]
    fn targets() {
        assert_eq!(minimal_frobenius_target(6).unwrap(), p("3,2,1"));
        assert_eq!(minimal_frobenius_target(7).unwrap(), p("3,2,2"));
        assert_eq!(minimal_frobenius_target(4).unwrap(), p("3,1"));
        assert_eq!(minimal_frobenius_target(3).unwrap(), p("3"));
    }

    #[test]
    fn simple_roots_roundtrip() {
        let a: BTreeSet<usize> = [2, 5, 7].into_iter().collect();
        assert_eq!(simple_roots_of(&levi_composition(&a, 8).unwrap()), a);
    }

    #[test]
    fn classify_examples() {
        let cfg = ClassifyConfig::default();
        let v = classify_orbit(&p("5,1"), &cfg).unwrap();
        assert_eq!(v.status, Status::NotStrange);
        assert!(v.witness.is_none());
        let v = classify_orbit(&p("5,2,2"), &cfg).unwrap();
        assert_eq!(v.status, Status::Strange);
        assert_eq!(v.witness.as_ref().unwrap().kind, WitnessKind::Flag3);
        assert!(v.reverify().unwrap());
        let v = classify_orbit(&p("3,1,1"), &cfg).unwrap();
        assert_eq!(v.status, Status::Strange);
        assert!(v.reverify().unwrap());
        assert!(classify_orbit(&p("1,1,1"), &cfg).is_err());
    }

    #[test]
    fn verdict_json_shape() {
        let v = classify_orbit(&p("3,1"), &ClassifyConfig::default()).unwrap();
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["status"], "Strange");
        assert_eq!(j["witness"]["kind"], "flag2");
        assert_eq!(j["checks"]["a"], 0);
        assert_eq!(j["partition"], json!([3, 1]));
    }
}
