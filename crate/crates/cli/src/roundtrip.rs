use crate::args::{Flags, Reduction};
use crate::run::{check_source, diagonal, emit, oracle, solve_letterboxed, solve_pips, solve_strands};
use crate::{CliError, CliResult, Status};
use nythard_core::io::{self, SourceSolution};
use nythard_core::letterboxed::reductions::{lift_sides, pullback_3dm, pullback_nae, reduce_3dm, reduce_nae3sat};
use nythard_core::letterboxed::LetterBoxedPuzzle;
use nythard_core::pips::reductions::{
    pullback_1in3_pips, pullback_subset_sum, reduce_planar_1in3_pips, reduce_subset_sum,
};
use nythard_core::source::SourceInstance;
use nythard_core::strands::expand::{expand_blocks, pullback_blocks};
use nythard_core::strands::flowfree::{pullback_flowfree, reduce_flowfree, verify_flow_paths, FlowFreeInstance};
use nythard_core::strands::reductions::{pullback_1in3_strands, reduce_planar_1in3_strands};
use nythard_core::strands::{verify_partition, StrandsInstance};
use nythard_core::SearchOutcome;
use serde_json::json;
use std::path::Path;

/// Answers of one round trip; `None` where undecided or not applicable.
#[derive(Debug, Default)]
struct Trip {
    source: Option<bool>,
    reduced: Option<bool>,
    pulled_back: Option<bool>,
    exhausted: bool,
}

impl Trip {
    fn pass(&self) -> bool {
        let agree = match (self.source, self.reduced) {
            (Some(a), Some(b)) => a == b,
            // No source decider: the reduced side must at least be decided.
            (None, Some(_)) => !self.exhausted,
            _ => false,
        };
        let witnessed = self.reduced != Some(true) || self.pulled_back != Some(false);
        agree && witnessed
    }
}

fn decided<T>(o: &SearchOutcome<T>, trip: &mut Trip) -> Option<bool> {
    let d = o.decided();
    trip.exhausted |= d.is_none();
    d
}

fn source_side(inst: &SourceInstance, trip: &mut Trip) {
    trip.source = decided(&oracle(inst), trip);
}

fn pulled(inst: &SourceInstance, sol: Result<SourceSolution, String>) -> Option<bool> {
    Some(sol.is_ok_and(|s| check_source(inst, &s).is_ok()))
}

fn wrong_kind(path: &Path) -> CliError {
    CliError::Usage(format!("{} holds the wrong source kind for this reduction", path.display()))
}

fn reduction_failed(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("reduction failed: {e}"))
}

pub fn run(reduction: Reduction, input: &Path, flags: &Flags) -> CliResult {
    let budget = flags.budget;
    let mut t = Trip::default();
    match reduction {
        Reduction::NaeToLetterBoxed => {
            let src: SourceInstance = io::load(input)?;
            let SourceInstance::Nae(inst) = &src else { return Err(wrong_kind(input)) };
            source_side(&src, &mut t);
            let out = reduce_nae3sat(inst).map_err(reduction_failed)?;
            let o = solve_letterboxed(&out.puzzle, Some(out.k), budget);
            t.reduced = decided(&o, &mut t);
            if let SearchOutcome::Found(sol) = o {
                t.pulled_back =
                    pulled(&src, pullback_nae(&out, &sol).map(SourceSolution::Assignment).map_err(|e| e.to_string()));
            }
        }
        Reduction::ThreeDmToLetterBoxed => {
            let src: SourceInstance = io::load(input)?;
            let SourceInstance::ThreeDm(inst) = &src else { return Err(wrong_kind(input)) };
            source_side(&src, &mut t);
            let out = reduce_3dm(inst).map_err(reduction_failed)?;
            let o = solve_letterboxed(&out.puzzle, Some(out.k), budget);
            t.reduced = decided(&o, &mut t);
            if let SearchOutcome::Found(sol) = o {
                let back = pullback_3dm(&out, &sol).map_err(|e| e.to_string()).map(|_| {
                    let mut w = sol.words.clone();
                    w.sort_unstable();
                    SourceSolution::Matching(w)
                });
                t.pulled_back = pulled(&src, back);
            }
        }
        Reduction::LiftSides => {
            let p: LetterBoxedPuzzle = io::load(input)?;
            let k = flags.k.ok_or_else(|| CliError::Usage("lift-sides needs --k".into()))?;
            t.source = decided(&solve_letterboxed(&p, Some(k), budget), &mut t);
            let out = lift_sides(&p, k).map_err(reduction_failed)?;
            t.reduced = decided(&solve_letterboxed(&out.puzzle, Some(out.k), budget), &mut t);
        }
        Reduction::OneInThreeToPips => {
            let src: SourceInstance = io::load(input)?;
            let SourceInstance::OneInThree(inst) = &src else { return Err(wrong_kind(input)) };
            source_side(&src, &mut t);
            let out = reduce_planar_1in3_pips(inst, flags.connected).map_err(reduction_failed)?;
            let o = solve_pips(&out.puzzle, budget);
            t.reduced = decided(&o, &mut t);
            if let SearchOutcome::Found(sol) = o {
                let back = pullback_1in3_pips(&out.puzzle, &out.layout, &sol);
                t.pulled_back = pulled(&src, back.map(SourceSolution::Assignment).map_err(|e| e.to_string()));
            }
        }
        Reduction::SubsetSumToPips => {
            let src: SourceInstance = io::load(input)?;
            let SourceInstance::SubsetSum(inst) = &src else { return Err(wrong_kind(input)) };
            source_side(&src, &mut t);
            let puzzle = reduce_subset_sum(inst).map_err(reduction_failed)?;
            let o = solve_pips(&puzzle, budget);
            t.reduced = decided(&o, &mut t);
            if let SearchOutcome::Found(sol) = o {
                let back = pullback_subset_sum(&puzzle, &sol);
                t.pulled_back = pulled(&src, back.map(SourceSolution::Subset).map_err(|e| e.to_string()));
            }
        }
        Reduction::OneInThreeToStrands => {
            let src: SourceInstance = io::load(input)?;
            let SourceInstance::OneInThree(inst) = &src else { return Err(wrong_kind(input)) };
            source_side(&src, &mut t);
            let out = reduce_planar_1in3_strands(inst).map_err(reduction_failed)?;
            let diag = diagonal(flags);
            let o = solve_strands(&out.instance, diag, budget);
            t.reduced = decided(&o, &mut t);
            if let SearchOutcome::Found(part) = o {
                let back = pullback_1in3_strands(&out.instance, &out.layout, &part, diag);
                t.pulled_back = pulled(&src, back.map(SourceSolution::Assignment).map_err(|e| e.to_string()));
            }
        }
        Reduction::ExpandBlocks => {
            // Source words use edge adjacency; the expanded board allows diagonals.
            let inst: StrandsInstance = io::load(input)?;
            t.source = decided(&solve_strands(&inst, false, budget), &mut t);
            let out = expand_blocks(&inst);
            let o = solve_strands(&out.instance, true, budget);
            t.reduced = decided(&o, &mut t);
            if let SearchOutcome::Found(part) = o {
                t.pulled_back = Some(
                    pullback_blocks(&inst, &part)
                        .is_some_and(|p| verify_partition(&inst, &p, false).is_ok_and(|v| v.is_valid())),
                );
            }
        }
        Reduction::FlowFreeToStrands => {
            let inst: FlowFreeInstance = io::load(input)?;
            let o = solve_strands(&reduce_flowfree(&inst), false, budget);
            t.reduced = decided(&o, &mut t);
            if let SearchOutcome::Found(part) = o {
                t.pulled_back = Some(pullback_flowfree(&inst, &part).is_some_and(|p| verify_flow_paths(&inst, &p)));
            }
        }
    }
    let pass = t.pass();
    let report = json!({
        "reduction": reduction_name(reduction),
        "sourceAnswer": t.source,
        "reducedAnswer": t.reduced,
        "pullbackVerified": t.pulled_back,
        "pass": pass,
    });
    emit(flags, &format!("{}\n", serde_json::to_string_pretty(&report).expect("report serializes")))?;
    Ok(if pass {
        Status::Ok
    } else if t.exhausted {
        Status::Exhausted
    } else {
        Status::Fail
    })
}

fn reduction_name(r: Reduction) -> String {
    use clap::ValueEnum;
    r.to_possible_value().expect("no skipped variants").get_name().to_string()
}
