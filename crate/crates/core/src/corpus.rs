//! Seeded frame corpora and the property suites run over them.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cep::{cep, CepMethod};
use crate::congruence::{
    congruence_generators, join_congruences, partition_of_generator, partition_oracle, principal_congruence,
};
use crate::error::{Error, Result};
use crate::frame::BooleanFrame;
use crate::limits::Limits;
use crate::random::{all_frames, random_frame, Constraint};
use crate::structure::hs_equals_sh;
use crate::terms::{builtin_property, Property};

/// `count` random frames; per-frame seeds are drawn from a generator seeded
/// with `seed`. Star-constrained draws that exhaust their retry budget are
/// skipped, so that constraint may yield fewer frames.
pub fn seeded_frames(
    atoms: u32,
    count: usize,
    seed: u64,
    constraint: Constraint,
    limits: &Limits,
) -> Result<Vec<BooleanFrame>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..count).map(|_| rng.gen()).collect();
    let drawn: Vec<Result<BooleanFrame>> = seeds
        .par_iter()
        .map(|&s| random_frame(atoms, s, constraint, limits))
        .collect();
    let mut out = Vec::with_capacity(count);
    for r in drawn {
        match r {
            Ok(frame) => out.push(frame),
            Err(Error::RetryExhausted { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Every frame with two atoms plus 200 random frames with three.
pub fn oracle_corpus(seed: u64, limits: &Limits) -> Result<Vec<BooleanFrame>> {
    let mut frames: Vec<BooleanFrame> = all_frames(2).collect();
    frames.extend(seeded_frames(3, 200, seed, Constraint::Free, limits)?);
    Ok(frames)
}

/// The oracle corpus plus 100 additive frames and up to 100 star frames
/// (alternating two and three atoms).
pub fn implication_corpus(seed: u64, limits: &Limits) -> Result<Vec<BooleanFrame>> {
    let mut frames = oracle_corpus(seed, limits)?;
    frames.extend(seeded_frames(3, 100, seed.wrapping_add(1), Constraint::Additive, limits)?);
    frames.extend(seeded_frames(2, 50, seed.wrapping_add(2), Constraint::Star, limits)?);
    frames.extend(seeded_frames(3, 50, seed.wrapping_add(3), Constraint::Star, limits)?);
    Ok(frames)
}

/// `count` pairs of free random frames with one or two atoms each.
pub fn small_frame_pairs(seed: u64, count: usize, limits: &Limits) -> Result<Vec<(BooleanFrame, BooleanFrame)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| random_frame(rng.gen_range(1..=2), rng.gen(), Constraint::Free, limits);
    (0..count)
        .map(|_| Ok((draw(&mut rng)?, draw(&mut rng)?)))
        .collect()
}

/// The first `count` pairs from a seeded stream of small pairs whose factors
/// both satisfy HS = SH (at most `attempts` pairs are drawn).
pub fn hs_sh_factor_pairs(
    seed: u64,
    count: usize,
    attempts: usize,
    limits: &Limits,
) -> Result<Vec<(BooleanFrame, BooleanFrame)>> {
    let mut out = Vec::new();
    for (a, b) in small_frame_pairs(seed, attempts, limits)? {
        if out.len() == count {
            break;
        }
        if hs_equals_sh(&a, limits)?.holds && hs_equals_sh(&b, limits)?.holds {
            out.push((a, b));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub check: &'static str,
    pub frame: BooleanFrame,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub frames: usize,
    pub checks: BTreeMap<&'static str, CheckTally>,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, frame: &BooleanFrame, outcomes: Vec<(&'static str, Option<String>)>) -> Self {
        self.frames += 1;
        for (check, failure) in outcomes {
            let tally = self.checks.entry(check).or_default();
            match failure {
                None => tally.passed += 1,
                Some(detail) => {
                    tally.failed += 1;
                    self.failures.push(SuiteFailure {
                        check,
                        frame: frame.clone(),
                        detail,
                    });
                }
            }
        }
        self
    }
}

type Outcomes = Vec<(&'static str, Option<String>)>;

fn run_suite(
    frames: &[BooleanFrame],
    per_frame: impl Fn(&BooleanFrame) -> Result<Outcomes> + Sync + Send,
) -> Result<SuiteReport> {
    let results: Vec<Result<Outcomes>> = frames.par_iter().map(per_frame).collect();
    let mut report = SuiteReport::default();
    for (frame, r) in frames.iter().zip(results) {
        report = report.merge(frame, r?);
    }
    Ok(report)
}

/// First pair `(x, y)` where `Cg(x, 0) v Cg(y, 0) != Cg(x | y, 0)`.
pub fn principal_join_counterexample(frame: &BooleanFrame) -> Result<Option<(u32, u32)>> {
    let principal: Vec<u32> = frame
        .elements()
        .map(|x| principal_congruence(frame, x, 0))
        .collect::<Result<_>>()?;
    for x in frame.elements() {
        for y in frame.elements() {
            let joined = join_congruences(frame, principal[x as usize], principal[y as usize])?;
            if joined != principal[(x | y) as usize] {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Generators and brute-force congruence partitions agree one to one.
pub fn oracle_bijection(frame: &BooleanFrame) -> Result<bool> {
    let mut from_generators: Vec<_> = congruence_generators(frame)
        .into_iter()
        .map(|a| partition_of_generator(frame, a))
        .collect();
    from_generators.sort();
    let mut oracle = partition_oracle(frame)?;
    oracle.sort();
    Ok(from_generators == oracle)
}

fn failure_if(ok: bool, detail: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(detail)
}

/// Oracle bijection, agreement of the three CEP deciders, and the principal
/// join identity.
pub fn oracle_suite(frames: &[BooleanFrame], limits: &Limits) -> Result<SuiteReport> {
    run_suite(frames, |frame| {
        let verdicts = CepMethod::ALL
            .iter()
            .map(|&m| cep(frame, m, limits).map(|v| v.holds))
            .collect::<Result<Vec<_>>>()?;
        let join = principal_join_counterexample(frame)?;
        Ok(vec![
            ("oracle_bijection", failure_if(oracle_bijection(frame)?, || "partitions differ".into())),
            (
                "cep_agreement",
                failure_if(verdicts.iter().all(|&v| v == verdicts[0]), || {
                    format!("direct/two_generated/pcep = {verdicts:?}")
                }),
            ),
            (
                "principal_join",
                failure_if(join.is_none(), || format!("pair {:?}", join.unwrap())),
            ),
        ])
    })
}

/// additive => star => monotone, star => CEP, CEP => HS = SH, additive => CEP.
pub fn implication_suite(frames: &[BooleanFrame], limits: &Limits) -> Result<SuiteReport> {
    run_suite(frames, |frame| {
        let additive = builtin_property(frame, Property::Additive, limits)?.holds;
        let star = builtin_property(frame, Property::Star, limits)?.holds;
        let monotone = builtin_property(frame, Property::Monotone, limits)?.holds;
        let has_cep = cep(frame, CepMethod::Direct, limits)?.holds;
        let hs_sh = if has_cep { hs_equals_sh(frame, limits)?.holds } else { true };
        let implies = |p: bool, q: bool, what: &str| failure_if(!p || q, || what.to_string());
        Ok(vec![
            ("additive_implies_star", implies(additive, star, "additive but not star")),
            ("star_implies_monotone", implies(star, monotone, "star but not monotone")),
            ("star_implies_cep", implies(star, has_cep, "star but no CEP")),
            ("cep_implies_hs_sh", implies(has_cep, hs_sh, "CEP but HS != SH")),
            ("additive_implies_cep", implies(additive, has_cep, "additive but no CEP")),
        ])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin_frame;

    #[test]
    fn corpora_are_deterministic() {
        let l = Limits::default();
        let a = seeded_frames(3, 5, 0, Constraint::Free, &l).unwrap();
        assert_eq!(a, seeded_frames(3, 5, 0, Constraint::Free, &l).unwrap());
        assert_ne!(a, seeded_frames(3, 5, 1, Constraint::Free, &l).unwrap());
        assert_eq!(oracle_corpus(0, &l).unwrap().len(), 456);
    }

    #[test]
    fn suites_on_examples() {
        let l = Limits::default();
        let frames = vec![builtin_frame("example1").unwrap(), builtin_frame("example-sh").unwrap()];
        let r = oracle_suite(&frames, &l).unwrap();
        assert!(r.holds(), "{:?}", r.failures);
        assert_eq!(r.frames, 2);
        assert_eq!(r.checks["cep_agreement"].passed, 2);
        let r = implication_suite(&frames, &l).unwrap();
        assert!(r.holds(), "{:?}", r.failures);
    }

    #[test]
    fn principal_join_on_wheel() {
        assert_eq!(principal_join_counterexample(&builtin_frame("wheel:5").unwrap()).unwrap(), None);
    }
}
