//! Theorem batches as JSON reports, and counterexample replay.

use std::ops::Range;
use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};

use ciflie_core::oracle::theorem::{generate_batch, ReportVerdict, Tally};
use ciflie_core::oracle::{evaluate, run_batch, BatchReport, Instance, Outcome, TheoremId, ValueGrid};
use ciflie_core::{LinearMap, Space};
use serde_json::{json, Map, Value};

use crate::format::{self, map_from_json, map_to_json, set_on_space, set_to_json, space_for, FormatError, Result};

/// One theorem run over a contiguous seed range.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub batch: BatchReport,
    pub space: Arc<Space>,
    pub grid: ValueGrid,
    pub seeds: Range<u64>,
    pub map: Option<LinearMap>,
    /// The instance named by the counterexample, kept for the payload.
    pub failing: Option<Instance>,
    pub elapsed: Duration,
}

impl TheoremReport {
    pub fn verdict(&self) -> ReportVerdict {
        self.batch.verdict()
    }

    /// Canonical JSON. Wall-clock time is only included on request, so that
    /// reports are byte-identical across runs by default.
    pub fn to_json(&self, timing: bool) -> Value {
        let variants: Map<String, Value> =
            self.batch.variants.iter().map(|(k, t)| (k.clone(), tally_json(t))).collect();
        let counterexample = match (&self.batch.counterexample, &self.failing) {
            (Some(c), Some(inst)) => json!({
                "instance": c.instance,
                "seed": self.seeds.start + c.instance as u64,
                "variant": c.variant,
                "detail": c.detail,
                "payload": instance_to_json(inst),
            }),
            _ => Value::Null,
        };
        let mut obj = json!({
            "theorem": self.batch.id.name(),
            "algebra": format::algebra_to_json(self.space.algebra()),
            "grid": self.grid.to_string(),
            "seeds": {"start": self.seeds.start, "end": self.seeds.end},
            "map": self.map.as_ref().map_or(Value::Null, map_to_json),
            "instances": self.batch.instances,
            "verdict": self.verdict().name(),
            "variants": variants,
            "counterexample": counterexample,
        });
        if timing {
            obj["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        obj
    }
}

fn tally_json(t: &Tally) -> Value {
    json!({"held": t.held, "vacuous": t.vacuous, "skipped": t.skipped, "refuted": t.refuted})
}

/// Generate the seeded instances for `id` and evaluate them.
pub fn run_theorem(
    id: TheoremId,
    space: &Arc<Space>,
    grid: &ValueGrid,
    seeds: Range<u64>,
    map: Option<&LinearMap>,
) -> ciflie_core::Result<TheoremReport> {
    let start = Instant::now();
    let instances = generate_batch(id, space, grid, seeds.clone(), map)?;
    let batch = run_batch(id, &instances)?;
    let failing = batch.counterexample.as_ref().map(|c| instances[c.instance].clone());
    Ok(TheoremReport {
        batch,
        space: space.clone(),
        grid: grid.clone(),
        seeds,
        map: map.cloned(),
        failing,
        elapsed: start.elapsed(),
    })
}

/// Several reports with an overall verdict: refuted if any report is.
pub fn aggregate(reports: &[TheoremReport], timing: bool) -> Value {
    let refuted = reports.iter().any(|r| r.verdict() == ReportVerdict::Refuted);
    json!({
        "verdict": if refuted { "refuted" } else { "held" },
        "reports": reports.iter().map(|r| r.to_json(timing)).collect::<Vec<_>>(),
    })
}

pub fn instance_to_json(inst: &Instance) -> Value {
    match inst {
        Instance::Single(a) => json!({"shape": "single", "sets": [set_to_json(a)]}),
        Instance::Pair(a, b) => json!({"shape": "pair", "sets": [set_to_json(a), set_to_json(b)]}),
        Instance::Scalar(alpha, a) => json!({"shape": "scalar", "alpha": alpha, "sets": [set_to_json(a)]}),
        Instance::Mapped(phi, a) => json!({"shape": "mapped", "map": map_to_json(phi), "sets": [set_to_json(a)]}),
        Instance::MappedPair(phi, a, b) => {
            json!({"shape": "mapped-pair", "map": map_to_json(phi), "sets": [set_to_json(a), set_to_json(b)]})
        }
    }
}

fn schema(msg: impl Into<String>) -> FormatError {
    FormatError::Schema(msg.into())
}

/// Rebuild an instance. Mapped sets are placed on the map's target for the
/// preimage theorems and on its source otherwise.
pub fn instance_from_json(id: TheoremId, v: &Value) -> Result<Instance> {
    let base = Path::new(".");
    let shape = v.get("shape").and_then(Value::as_str).ok_or_else(|| schema("instance needs a `shape`"))?;
    let sets = v.get("sets").and_then(Value::as_array).ok_or_else(|| schema("instance needs `sets`"))?;
    let nth = |i: usize| sets.get(i).ok_or_else(|| schema(format!("{shape} instance needs {} sets", i + 1)));
    let on_own = |i: usize| -> Result<_> { format::set_from_json(nth(i)?, base) };
    let map = || -> Result<LinearMap> {
        map_from_json(v.get("map").ok_or_else(|| schema("mapped instance needs a `map`"))?, base)
    };
    Ok(match shape {
        "single" => Instance::Single(on_own(0)?),
        "pair" => {
            let a = on_own(0)?;
            let b = set_on_space(nth(1)?, a.space().clone(), base)?;
            Instance::Pair(a, b)
        }
        "scalar" => {
            let alpha =
                v.get("alpha").and_then(Value::as_u64).ok_or_else(|| schema("scalar instance needs `alpha`"))?;
            Instance::Scalar(u32::try_from(alpha).map_err(|_| schema("alpha too large"))?, on_own(0)?)
        }
        "mapped" | "mapped-pair" => {
            let phi = map()?;
            let on = match id {
                TheoremId::PPre | TheoremId::PAntiPre => phi.target().clone(),
                _ => phi.source().clone(),
            };
            let a = set_on_space(nth(0)?, on.clone(), base)?;
            if shape == "mapped" {
                Instance::Mapped(phi, a)
            } else {
                let b = set_on_space(nth(1)?, on, base)?;
                Instance::MappedPair(phi, a, b)
            }
        }
        other => return Err(schema(format!("unknown instance shape `{other}`"))),
    })
}

/// Outcome of re-running one serialized counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub theorem: TheoremId,
    pub variant: String,
    pub outcome: Outcome,
}

impl Replay {
    pub fn still_refutes(&self) -> bool {
        self.outcome == Outcome::Refuted
    }
}

/// Replay every counterexample in a report or aggregate document.
pub fn replay(doc: &Value) -> Result<Vec<Replay>> {
    let reports: Vec<&Value> = match doc.get("reports").and_then(Value::as_array) {
        Some(list) => list.iter().collect(),
        None => vec![doc],
    };
    let mut out = Vec::new();
    for r in reports {
        let Some(cx) = r.get("counterexample").filter(|c| !c.is_null()) else { continue };
        let id: TheoremId =
            r.get("theorem").and_then(Value::as_str).ok_or_else(|| schema("report needs a `theorem`"))?.parse()?;
        let variant =
            cx.get("variant").and_then(Value::as_str).ok_or_else(|| schema("counterexample needs a `variant`"))?;
        let inst =
            instance_from_json(id, cx.get("payload").ok_or_else(|| schema("counterexample needs a `payload`"))?)?;
        let outcome =
            evaluate(id, &inst)?.into_iter().find(|c| c.variant == variant).map_or(Outcome::Skipped, |c| c.outcome());
        out.push(Replay { theorem: id, variant: variant.to_owned(), outcome });
    }
    Ok(out)
}

/// Space for a theorem run: a built-in name or an algebra file.
pub fn theorem_space(algebra: &str) -> Result<Arc<Space>> {
    space_for(format::load_algebra(algebra)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ciflie_core::fixtures;
    use ciflie_core::oracle::generate::basis_permutation;

    #[test]
    fn reports_are_deterministic_and_untimed() {
        let s = fixtures::heisenberg_5_1();
        let g = ValueGrid::default();
        let a = run_theorem(TheoremId::PSum, &s, &g, 0..5, None).unwrap();
        let b = run_theorem(TheoremId::PSum, &s, &g, 0..5, None).unwrap();
        let (ja, jb) = (a.to_json(false), b.to_json(false));
        assert_eq!(format::to_canonical(&ja), format::to_canonical(&jb));
        assert!(ja.get("elapsed_ms").is_none());
        assert!(a.to_json(true).get("elapsed_ms").is_some());
        assert_eq!(ja["verdict"], "held");
        assert_eq!(ja["counterexample"], Value::Null);
    }

    #[test]
    fn instances_round_trip() {
        let s = fixtures::heisenberg_5_1();
        let g = ValueGrid::default();
        for id in TheoremId::ALL {
            for inst in generate_batch(id, &s, &g, 0..2, None).unwrap() {
                let back = instance_from_json(id, &instance_to_json(&inst)).unwrap();
                assert_eq!(evaluate(id, &back).unwrap(), evaluate(id, &inst).unwrap(), "{id}");
            }
        }
    }

    #[test]
    fn counterexamples_replay() {
        // seed 236 refutes closure of sums of sub-superalgebras
        let s = fixtures::heisenberg_5_1();
        let r = run_theorem(TheoremId::PSumSuper, &s, &ValueGrid::default(), 236..237, None).unwrap();
        assert_eq!(r.verdict(), ReportVerdict::Refuted);
        let doc: Value = serde_json::from_str(&format::to_canonical(&r.to_json(false))).unwrap();
        let replays = replay(&doc).unwrap();
        assert_eq!(replays.len(), 1);
        assert!(replays[0].still_refutes());
    }

    #[test]
    fn non_surjective_map_skips() {
        let s = ciflie_core::fixtures::abelian(5, 2, 1).unwrap();
        let zero = LinearMap::zero(s.clone(), s.clone()).unwrap();
        let r = run_theorem(TheoremId::PAntiSum, &s, &ValueGrid::default(), 0..5, Some(&zero)).unwrap();
        assert_eq!(r.verdict(), ReportVerdict::Skipped);
        let swap = basis_permutation(s.clone(), &[1, 0, 2]).unwrap();
        let r = run_theorem(TheoremId::PAntiSum, &s, &ValueGrid::default(), 0..5, Some(&swap)).unwrap();
        assert_eq!(r.verdict(), ReportVerdict::Held);
    }
}
