use crate::args::{Family, Flags, Format};
use crate::run::{diagonal, emit, solve_letterboxed, solve_pips, solve_strands};
use crate::{CliError, CliResult, Status};
use nythard_core::letterboxed::generate::{random_puzzle, PuzzleParams};
use nythard_core::pips::reductions::{reduce_planar_1in3_pips, reduce_subset_sum};
use nythard_core::source::{random_1in3, random_subset_sum};
use nythard_core::strands::generate::random_planted;
use nythard_core::strands::reductions::reduce_planar_1in3_strands;
use nythard_core::tiles::{generate, solve_greedy};
use nythard_core::SearchOutcome;
use std::fmt::Write;
use std::time::Instant;

fn label<T>(o: &SearchOutcome<T>) -> &'static str {
    match o {
        SearchOutcome::Found(_) => "found",
        SearchOutcome::Unsolvable => "unsolvable",
        SearchOutcome::BudgetExhausted => "exhausted",
    }
}

/// Generates and solves one instance; `None` when the generator rejects
/// the parameters.
fn one(family: Family, size: usize, seed: u64, flags: &Flags) -> Option<(&'static str, u128)> {
    let budget = flags.budget;
    let timed = |f: &dyn Fn() -> &'static str| {
        let start = Instant::now();
        let outcome = f();
        (outcome, start.elapsed().as_micros())
    };
    Some(match family {
        Family::Letterboxed => {
            let params =
                PuzzleParams { sides: 4, side_len: size, alphabet: (2 * size + 2).min(26), words: 4 * size, max_word_len: 5 };
            let p = random_puzzle(params, seed);
            timed(&|| label(&solve_letterboxed(&p, None, budget)))
        }
        Family::Pips1in3 => {
            let inst = random_1in3(size + 2, size, seed).ok()?;
            let p = reduce_planar_1in3_pips(&inst, flags.connected).ok()?.puzzle;
            timed(&|| label(&solve_pips(&p, budget)))
        }
        Family::PipsSubsetSum => {
            let inst = random_subset_sum(size + 1, 9, seed).ok()?;
            let p = reduce_subset_sum(&inst).ok()?;
            timed(&|| label(&solve_pips(&p, budget)))
        }
        Family::Strands1in3 => {
            let inst = random_1in3(size + 2, size, seed).ok()?;
            let s = reduce_planar_1in3_strands(&inst).ok()?.instance;
            timed(&|| label(&solve_strands(&s, diagonal(flags), budget)))
        }
        Family::StrandsPlanted => {
            let s = random_planted(size + 1, size + 1, 3, 4, seed);
            timed(&|| label(&solve_strands(&s, diagonal(flags), budget)))
        }
        Family::Tiles => {
            let t = generate::random_instance(2 * size, 6, seed);
            timed(&|| if solve_greedy(&t).is_some() { "found" } else { "unsolvable" })
        }
    })
}

pub fn run(family: Family, count: u64, max_size: usize, flags: &Flags) -> CliResult {
    if !matches!(flags.format, Format::Csv | Format::Ascii) {
        return Err(CliError::Usage("bench prints CSV".into()));
    }
    let name = {
        use clap::ValueEnum;
        family.to_possible_value().expect("no skipped variants").get_name().to_string()
    };
    let mut out = String::from("family,size,seed,outcome,micros\n");
    for size in 1..=max_size {
        for seed in flags.seed..flags.seed + count {
            let (outcome, micros) = one(family, size, seed, flags).unwrap_or(("skipped", 0));
            writeln!(out, "{name},{size},{seed},{outcome},{micros}").unwrap();
        }
    }
    emit(flags, &out)?;
    Ok(Status::Ok)
}
