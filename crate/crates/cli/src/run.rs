use crate::args::{Command, Flags, Format, Game, GenKind, Reduction};
use crate::{bench, roundtrip, CliError, CliResult, Status};
use nythard_core::io::{self, Layout, SourceSolution, StrandsSolutionFile, TilesMoves};
use nythard_core::letterboxed::generate::{random_puzzle, PuzzleParams};
use nythard_core::letterboxed::reductions::{lift_sides, pullback_3dm, pullback_nae, reduce_3dm, reduce_nae3sat};
use nythard_core::letterboxed::{
    solve_dp, solve_search_with_budget, verify_solution, DpMetric, LetterBoxedPuzzle, LetterBoxedSolution,
};
use nythard_core::pips::reductions::{
    pullback_1in3_pips, pullback_subset_sum, reduce_planar_1in3_pips, reduce_subset_sum,
};
use nythard_core::pips::{solve_pips_with, verify_pips, PipsPlacement, PipsPuzzle, PipsSearchOptions};
use nythard_core::render;
use nythard_core::source::{
    generate_random, is_perfect_matching, oracle_1in3, oracle_3dm, oracle_nae, oracle_subset_sum, satisfies_1in3,
    satisfies_nae, GenerateKind, GenerateParams, OracleOutcome, SourceInstance,
};
use nythard_core::strands::expand::expand_blocks;
use nythard_core::strands::flowfree::{pullback_flowfree, reduce_flowfree, verify_flow_paths, FlowFreeInstance};
use nythard_core::strands::reductions::{pullback_1in3_strands, reduce_planar_1in3_strands};
use nythard_core::strands::{
    export_certificate, generate::random_planted, solve_strands_with, verify_partition, GridCell, StrandsInstance,
    StrandsPartition, StrandsSearchOptions,
};
use nythard_core::tiles::{
    brute_force_no_teleport, generate, no_teleport_solvable, sharing_number, solve_greedy,
    verify_moves, TilesInstance, TilesOracleError,
};
use nythard_core::{Budget, SearchOutcome};
use std::path::{Path, PathBuf};

pub fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Solve { subject, puzzle, flags } => solve(subject, &puzzle, &flags),
        Command::Verify { subject, puzzle, solution, flags } => verify(subject, &puzzle, &solution, &flags),
        Command::Reduce { reduction, input, output, layout, flags } => {
            reduce(reduction, &input, output.as_deref(), layout, &flags)
        }
        Command::Pullback { reduction, puzzle, layout, solution, flags } => {
            pullback(reduction, &puzzle, &layout, &solution, &flags)
        }
        Command::Roundtrip { reduction, input, flags } => roundtrip::run(reduction, &input, &flags),
        Command::Render { subject, puzzle, solution, flags } => render_cmd(subject, &puzzle, solution.as_deref(), &flags),
        Command::Gen { kind, size, count, flags } => gen(kind, size, count, &flags),
        Command::Bench { family, count, max_size, flags } => bench::run(family, count, max_size, &flags),
    }
}

/// Writes `text` to `--out`, or stdout.
pub fn emit(flags: &Flags, text: &str) -> Result<(), CliError> {
    match &flags.out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn diagonal(flags: &Flags) -> bool {
    !flags.no_diagonal
}

pub fn strands_options(flags: &Flags) -> StrandsSearchOptions {
    StrandsSearchOptions { allow_diagonal: diagonal(flags), ..Default::default() }
}

/// Emits a found solution; reports the other outcomes on stderr.
fn finish<T>(outcome: SearchOutcome<T>, flags: &Flags, show: impl FnOnce(T) -> String) -> CliResult {
    match outcome {
        SearchOutcome::Found(x) => {
            emit(flags, &show(x))?;
            Ok(Status::Ok)
        }
        SearchOutcome::Unsolvable => {
            eprintln!("unsolvable");
            Ok(Status::Fail)
        }
        SearchOutcome::BudgetExhausted => {
            eprintln!("budget exhausted after {} nodes", flags.budget);
            Ok(Status::Exhausted)
        }
    }
}

fn oracle_status<T>(outcome: OracleOutcome<T>) -> SearchOutcome<T> {
    match outcome {
        OracleOutcome::Found(x) => SearchOutcome::Found(x),
        OracleOutcome::NotFound => SearchOutcome::Unsolvable,
        OracleOutcome::TooLarge => SearchOutcome::BudgetExhausted,
    }
}

pub fn solve_letterboxed(p: &LetterBoxedPuzzle, k: Option<usize>, budget: u64) -> SearchOutcome<LetterBoxedSolution> {
    let mut budget = Budget::new(budget);
    match k {
        Some(k) => solve_search_with_budget(p, k, &mut budget).0,
        None => solve_dp(p, DpMetric::Words, &mut budget).map(|d| d.solution),
    }
}

pub fn solve_pips(p: &PipsPuzzle, budget: u64) -> SearchOutcome<PipsPlacement> {
    solve_pips_with(p, PipsSearchOptions::default(), &mut Budget::new(budget))
}

pub fn solve_strands(inst: &StrandsInstance, allow_diagonal: bool, budget: u64) -> SearchOutcome<StrandsPartition> {
    let options = StrandsSearchOptions { allow_diagonal, ..Default::default() };
    solve_strands_with(inst, options, &mut Budget::new(budget))
}

pub fn strands_file(inst: &StrandsInstance, partition: StrandsPartition) -> StrandsSolutionFile {
    let certificate = export_certificate(inst, &partition).ok();
    StrandsSolutionFile { partition: Some(partition), certificate }
}

fn paths_json(paths: &[Vec<GridCell>]) -> String {
    let mut s = serde_json::to_string_pretty(paths).expect("paths serialize");
    s.push('\n');
    s
}

/// Solves Flow Free through its Strands reduction.
pub fn solve_flowfree(inst: &FlowFreeInstance, budget: u64) -> SearchOutcome<Vec<Vec<GridCell>>> {
    let reduced = reduce_flowfree(inst);
    match solve_strands(&reduced, false, budget) {
        SearchOutcome::Found(part) => match pullback_flowfree(inst, &part) {
            Some(paths) => SearchOutcome::Found(paths),
            None => SearchOutcome::Unsolvable,
        },
        SearchOutcome::Unsolvable => SearchOutcome::Unsolvable,
        SearchOutcome::BudgetExhausted => SearchOutcome::BudgetExhausted,
    }
}

fn load_source(path: &Path, subject: Game) -> Result<SourceInstance, CliError> {
    let inst: SourceInstance = io::load(path)?;
    let matches = matches!(
        (&inst, subject),
        (SourceInstance::Nae(_), Game::Nae3sat)
            | (SourceInstance::OneInThree(_), Game::OneInThree)
            | (SourceInstance::ThreeDm(_), Game::ThreeDm)
            | (SourceInstance::SubsetSum(_), Game::Subsetsum)
    );
    if !matches {
        return Err(usage(format!("{} does not hold a {subject:?} instance", path.display())));
    }
    Ok(inst)
}

pub fn oracle(inst: &SourceInstance) -> SearchOutcome<SourceSolution> {
    match inst {
        SourceInstance::Nae(i) => oracle_status(oracle_nae(i)).map(SourceSolution::Assignment),
        SourceInstance::OneInThree(i) => oracle_status(oracle_1in3(i)).map(SourceSolution::Assignment),
        SourceInstance::ThreeDm(i) => oracle_status(oracle_3dm(i)).map(SourceSolution::Matching),
        SourceInstance::SubsetSum(i) => oracle_status(oracle_subset_sum(i)).map(SourceSolution::Subset),
    }
}

/// Checks a source answer; `Err` carries the reason it fails.
pub fn check_source(inst: &SourceInstance, sol: &SourceSolution) -> Result<(), String> {
    let ok = match (inst, sol) {
        (SourceInstance::Nae(i), SourceSolution::Assignment(v)) => {
            v.len() == i.variables().len() && satisfies_nae(i, v)
        }
        (SourceInstance::OneInThree(i), SourceSolution::Assignment(v)) => {
            v.len() == i.variables().len() && satisfies_1in3(i, v)
        }
        (SourceInstance::ThreeDm(i), SourceSolution::Matching(t)) => is_perfect_matching(i, t),
        (SourceInstance::SubsetSum(i), SourceSolution::Subset(idx)) => {
            let mut seen = vec![false; i.elements().len()];
            let mut sum = 0u64;
            for &x in idx {
                if x >= seen.len() || std::mem::replace(&mut seen[x], true) {
                    return Err(format!("index {x} is out of range or repeated"));
                }
                sum = sum.saturating_add(i.elements()[x]);
            }
            if sum != i.target() {
                return Err(format!("subset sums to {sum}, target is {}", i.target()));
            }
            true
        }
        _ => return Err("solution kind does not match the instance".into()),
    };
    if ok {
        Ok(())
    } else {
        Err("constraints violated".into())
    }
}

fn solve(subject: Game, path: &Path, flags: &Flags) -> CliResult {
    match subject {
        Game::Letterboxed => {
            let p: LetterBoxedPuzzle = io::load(path)?;
            let outcome = solve_letterboxed(&p, flags.k, flags.budget);
            finish(outcome, flags, |s| io::to_canonical(&s))
        }
        Game::Pips => {
            let p: PipsPuzzle = io::load(path)?;
            finish(solve_pips(&p, flags.budget), flags, |s| io::to_canonical(&s))
        }
        Game::Strands => {
            let inst: StrandsInstance = io::load(path)?;
            let outcome = solve_strands_with(&inst, strands_options(flags), &mut Budget::new(flags.budget));
            finish(outcome, flags, |s| io::to_canonical(&strands_file(&inst, s)))
        }
        Game::Tiles => {
            let inst: TilesInstance = io::load(path)?;
            if flags.no_teleport {
                return solve_tiles_no_teleport(&inst, flags);
            }
            let outcome = match solve_greedy(&inst) {
                Some(m) => SearchOutcome::Found(m),
                None => SearchOutcome::Unsolvable,
            };
            finish(outcome, flags, |m| io::to_canonical(&TilesMoves(m)))
        }
        Game::Flowfree => {
            let inst: FlowFreeInstance = io::load(path)?;
            finish(solve_flowfree(&inst, flags.budget), flags, |p| paths_json(&p))
        }
        Game::Nae3sat | Game::OneInThree | Game::ThreeDm | Game::Subsetsum => {
            let inst = load_source(path, subject)?;
            finish(oracle(&inst), flags, |s| io::to_canonical(&s))
        }
    }
}

/// Euler trail when the sharing number is 1; otherwise only the exhaustive
/// answer is reported.
fn solve_tiles_no_teleport(inst: &TilesInstance, flags: &Flags) -> CliResult {
    if sharing_number(inst).ok() == Some(1) {
        let moves = no_teleport_solvable(inst).map_err(io::IoError::from)?;
        let outcome = moves.map_or(SearchOutcome::Unsolvable, SearchOutcome::Found);
        return finish(outcome, flags, |m| io::to_canonical(&TilesMoves(m)));
    }
    match brute_force_no_teleport(inst, &mut Budget::new(flags.budget)) {
        Ok(true) => {
            eprintln!("solvable without teleports (exhaustive search; no move list for sharing number above 1)");
            Ok(Status::Ok)
        }
        Ok(false) => {
            eprintln!("unsolvable without teleports");
            Ok(Status::Fail)
        }
        Err(TilesOracleError::BudgetExhausted) => {
            eprintln!("budget exhausted after {} nodes", flags.budget);
            Ok(Status::Exhausted)
        }
        Err(e @ TilesOracleError::TooLarge(_)) => Err(usage(e.to_string())),
    }
}

fn report(lines: &[String], flags: &Flags) -> CliResult {
    if lines.is_empty() {
        emit(flags, "valid\n")?;
        Ok(Status::Ok)
    } else {
        emit(flags, &format!("invalid\n{}\n", lines.join("\n")))?;
        Ok(Status::Fail)
    }
}

fn debug_lines<T: std::fmt::Debug>(items: &[T]) -> Vec<String> {
    items.iter().map(|v| format!("  {v:?}")).collect()
}

fn verify(subject: Game, path: &Path, solution: &Path, flags: &Flags) -> CliResult {
    let lines = match subject {
        Game::Letterboxed => {
            let p: LetterBoxedPuzzle = io::load(path)?;
            let sol: LetterBoxedSolution = io::load(solution)?;
            let k = flags.k.unwrap_or_else(|| p.certificate_bound());
            match verify_solution(&p, &sol, k) {
                Ok(v) => debug_lines(&v.violations),
                Err(e) => vec![format!("  {e}")],
            }
        }
        Game::Pips => {
            let p: PipsPuzzle = io::load(path)?;
            let sol: PipsPlacement = io::load(solution)?;
            match verify_pips(&p, &sol) {
                Ok(v) => debug_lines(&v.violations),
                Err(e) => vec![format!("  {e}")],
            }
        }
        Game::Strands => {
            let inst: StrandsInstance = io::load(path)?;
            let file: StrandsSolutionFile = io::load(solution)?;
            match file.resolve(&inst) {
                Ok(part) => match verify_partition(&inst, &part, diagonal(flags)) {
                    Ok(v) => debug_lines(&v.violations),
                    Err(e) => vec![format!("  {e}")],
                },
                Err(e) => vec![format!("  {e}")],
            }
        }
        Game::Tiles => {
            let inst: TilesInstance = io::load(path)?;
            let TilesMoves(moves) = io::load(solution)?;
            match verify_moves(&inst, &moves) {
                Ok(r) => {
                    let mut out = Vec::new();
                    if !r.all_deleted {
                        out.push("  features remain undeleted".to_string());
                    }
                    if flags.no_teleport && r.teleports() > 0 {
                        out.push(format!("  {} teleports used", r.teleports()));
                    }
                    eprintln!(
                        "standard moves: {}, teleports: {}, unforced teleports: {}, longest combo: {}",
                        r.standard_moves(),
                        r.teleports(),
                        r.unforced_teleports,
                        r.max_combo
                    );
                    out
                }
                Err(e) => vec![format!("  {e}")],
            }
        }
        Game::Flowfree => {
            let inst: FlowFreeInstance = io::load(path)?;
            let text = std::fs::read_to_string(solution)
                .map_err(|source| io::IoError::Read { path: solution.to_path_buf(), source })?;
            let paths: Vec<Vec<GridCell>> = serde_json::from_str(&text).map_err(io::IoError::from)?;
            if verify_flow_paths(&inst, &paths) {
                vec![]
            } else {
                vec!["  paths do not join every pair and fill the grid".to_string()]
            }
        }
        Game::Nae3sat | Game::OneInThree | Game::ThreeDm | Game::Subsetsum => {
            let inst = load_source(path, subject)?;
            let sol: SourceSolution = io::load(solution)?;
            match check_source(&inst, &sol) {
                Ok(()) => vec![],
                Err(e) => vec![format!("  {e}")],
            }
        }
    };
    report(&lines, flags)
}

/// `x.json` becomes `x.layout.json`; other names get the suffix appended.
pub fn default_layout_path(output: &Path) -> PathBuf {
    let s = output.to_string_lossy();
    match s.strip_suffix(".json") {
        Some(stem) => PathBuf::from(format!("{stem}.layout.json")),
        None => PathBuf::from(format!("{s}.layout.json")),
    }
}

/// Reduced instance text and its sidecar.
pub fn build_reduction(reduction: Reduction, input: &Path, flags: &Flags) -> Result<(String, Layout), CliError> {
    let bad = |e: &dyn std::fmt::Display| usage(format!("reduction failed: {e}"));
    Ok(match reduction {
        Reduction::NaeToLetterBoxed => {
            let SourceInstance::Nae(inst) = load_source(input, Game::Nae3sat)? else { unreachable!() };
            let out = reduce_nae3sat(&inst).map_err(|e| bad(&e))?;
            (io::to_canonical(&out.puzzle), Layout::nae(&out))
        }
        Reduction::ThreeDmToLetterBoxed => {
            let SourceInstance::ThreeDm(inst) = load_source(input, Game::ThreeDm)? else { unreachable!() };
            let out = reduce_3dm(&inst).map_err(|e| bad(&e))?;
            (io::to_canonical(&out.puzzle), Layout::three_dm(&out))
        }
        Reduction::LiftSides => {
            let p: LetterBoxedPuzzle = io::load(input)?;
            let k = flags.k.ok_or_else(|| usage("lift-sides needs --k"))?;
            let out = lift_sides(&p, k).map_err(|e| bad(&e))?;
            (io::to_canonical(&out.puzzle), Layout::lift(&out))
        }
        Reduction::OneInThreeToPips => {
            let SourceInstance::OneInThree(inst) = load_source(input, Game::OneInThree)? else { unreachable!() };
            let out = reduce_planar_1in3_pips(&inst, flags.connected).map_err(|e| bad(&e))?;
            (io::to_canonical(&out.puzzle), Layout::PipsOneInThree(out.layout))
        }
        Reduction::SubsetSumToPips => {
            let SourceInstance::SubsetSum(inst) = load_source(input, Game::Subsetsum)? else { unreachable!() };
            let puzzle = reduce_subset_sum(&inst).map_err(|e| bad(&e))?;
            (io::to_canonical(&puzzle), Layout::SubsetSum)
        }
        Reduction::OneInThreeToStrands => {
            let SourceInstance::OneInThree(inst) = load_source(input, Game::OneInThree)? else { unreachable!() };
            let out = reduce_planar_1in3_strands(&inst).map_err(|e| bad(&e))?;
            (io::to_canonical(&out.instance), Layout::StrandsOneInThree(out.layout))
        }
        Reduction::ExpandBlocks => {
            let inst: StrandsInstance = io::load(input)?;
            let out = expand_blocks(&inst);
            (io::to_canonical(&out.instance), Layout::Blocks { colors: out.colors })
        }
        Reduction::FlowFreeToStrands => {
            let inst: FlowFreeInstance = io::load(input)?;
            (io::to_canonical(&reduce_flowfree(&inst)), Layout::FlowFree)
        }
    })
}

fn reduce(
    reduction: Reduction,
    input: &Path,
    output: Option<&Path>,
    layout: Option<PathBuf>,
    flags: &Flags,
) -> CliResult {
    let (text, sidecar) = build_reduction(reduction, input, flags)?;
    match output {
        Some(out) => write(out, &text)?,
        None => emit(flags, &text)?,
    }
    if let Some(path) = layout.or_else(|| output.map(default_layout_path)) {
        write(&path, &io::to_canonical(&sidecar))?;
    }
    Ok(Status::Ok)
}

/// Maps a reduced solution back; `Ok(Err(_))` means the solution was rejected.
pub fn pull_back(
    reduction: Reduction,
    puzzle: &Path,
    layout: &Layout,
    solution: &Path,
    allow_diagonal: bool,
) -> Result<Result<SourceSolution, String>, CliError> {
    let wrong = || usage("layout sidecar does not match the reduction");
    Ok(match reduction {
        Reduction::NaeToLetterBoxed => {
            let out = layout.nae_output(io::load(puzzle)?).ok_or_else(wrong)?;
            let sol: LetterBoxedSolution = io::load(solution)?;
            pullback_nae(&out, &sol).map(SourceSolution::Assignment).map_err(|e| e.to_string())
        }
        Reduction::ThreeDmToLetterBoxed => {
            let out = layout.three_dm_output(io::load(puzzle)?).ok_or_else(wrong)?;
            let sol: LetterBoxedSolution = io::load(solution)?;
            // Word i spells triple i.
            pullback_3dm(&out, &sol)
                .map(|_| {
                    let mut t = sol.words.clone();
                    t.sort_unstable();
                    SourceSolution::Matching(t)
                })
                .map_err(|e| e.to_string())
        }
        Reduction::OneInThreeToPips => {
            let Layout::PipsOneInThree(l) = layout else { return Err(wrong()) };
            let p: PipsPuzzle = io::load(puzzle)?;
            let sol: PipsPlacement = io::load(solution)?;
            pullback_1in3_pips(&p, l, &sol).map(SourceSolution::Assignment).map_err(|e| e.to_string())
        }
        Reduction::SubsetSumToPips => {
            let Layout::SubsetSum = layout else { return Err(wrong()) };
            let p: PipsPuzzle = io::load(puzzle)?;
            let sol: PipsPlacement = io::load(solution)?;
            pullback_subset_sum(&p, &sol).map(SourceSolution::Subset).map_err(|e| e.to_string())
        }
        Reduction::OneInThreeToStrands => {
            let Layout::StrandsOneInThree(l) = layout else { return Err(wrong()) };
            let inst: StrandsInstance = io::load(puzzle)?;
            let file: StrandsSolutionFile = io::load(solution)?;
            let part = match file.resolve(&inst) {
                Ok(p) => p,
                Err(e) => return Ok(Err(e.to_string())),
            };
            pullback_1in3_strands(&inst, l, &part, allow_diagonal)
                .map(SourceSolution::Assignment)
                .map_err(|e| e.to_string())
        }
        Reduction::LiftSides | Reduction::ExpandBlocks | Reduction::FlowFreeToStrands => {
            return Err(usage(
                "pullback needs the source instance for this reduction; use roundtrip instead",
            ))
        }
    })
}

fn pullback(reduction: Reduction, puzzle: &Path, layout: &Path, solution: &Path, flags: &Flags) -> CliResult {
    let layout: Layout = io::load(layout)?;
    match pull_back(reduction, puzzle, &layout, solution, diagonal(flags))? {
        Ok(sol) => {
            emit(flags, &io::to_canonical(&sol))?;
            Ok(Status::Ok)
        }
        Err(e) => {
            eprintln!("rejected: {e}");
            Ok(Status::Fail)
        }
    }
}

fn render_cmd(subject: Game, path: &Path, solution: Option<&Path>, flags: &Flags) -> CliResult {
    let (ascii, svg) = match subject {
        Game::Letterboxed => {
            let p: LetterBoxedPuzzle = io::load(path)?;
            let mut text = render::letterboxed_ascii(&p);
            if let Some(s) = solution {
                let sol: LetterBoxedSolution = io::load(s)?;
                let words: Vec<String> = sol.words.iter().map(|&w| p.word_string(w)).collect();
                text.push_str(&format!("solution: {}\n", words.join(" ")));
            }
            (text, None)
        }
        Game::Pips => {
            let p: PipsPuzzle = io::load(path)?;
            let sol: Option<PipsPlacement> = solution.map(io::load).transpose()?;
            (render::pips_ascii(&p, sol.as_ref()), Some(render::pips_svg(&p, sol.as_ref())))
        }
        Game::Strands => {
            let inst: StrandsInstance = io::load(path)?;
            let part = match solution {
                Some(s) => Some(io::load::<StrandsSolutionFile>(s)?.resolve(&inst)?),
                None => None,
            };
            (render::strands_ascii(&inst, part.as_ref()), Some(render::strands_svg(&inst, part.as_ref())))
        }
        Game::Tiles => {
            let inst: TilesInstance = io::load(path)?;
            let mut text = render::tiles_ascii(&inst);
            if let Some(s) = solution {
                let TilesMoves(m) = io::load(s)?;
                let m: Vec<String> = m.iter().map(usize::to_string).collect();
                text.push_str(&format!("moves: {}\n", m.join(" ")));
            }
            (text, None)
        }
        Game::Flowfree => (render::flowfree_ascii(&io::load(path)?), None),
        Game::Nae3sat | Game::OneInThree | Game::ThreeDm | Game::Subsetsum => {
            (io::to_canonical(&load_source(path, subject)?), None)
        }
    };
    if let Some(out) = &flags.svg {
        let picture = svg.as_ref().ok_or_else(|| usage(format!("no SVG picture for {subject:?}")))?;
        write(out, picture)?;
    }
    match flags.format {
        Format::Ascii => emit(flags, &ascii)?,
        Format::Svg => emit(flags, &svg.ok_or_else(|| usage(format!("no SVG picture for {subject:?}")))?)?,
        Format::Csv => return Err(usage("render supports ascii and svg")),
    }
    Ok(Status::Ok)
}

fn gen(kind: GenKind, size: usize, count: usize, flags: &Flags) -> CliResult {
    let seed = flags.seed;
    let source = |kind| {
        generate_random(kind, GenerateParams { size, count }, seed)
            .map(|i| io::to_canonical(&i))
            .map_err(|e| usage(e.to_string()))
    };
    let text = match kind {
        GenKind::Letterboxed => {
            let params = PuzzleParams {
                sides: 4,
                side_len: size.max(1),
                alphabet: (4 * size).clamp(1, 26),
                words: count,
                max_word_len: 6,
            };
            io::to_canonical(&random_puzzle(params, seed))
        }
        GenKind::Strands => {
            if size == 0 {
                return Err(usage("strands grid side must be positive"));
            }
            io::to_canonical(&random_planted(size, size, count.clamp(1, 26), 5, seed))
        }
        GenKind::Tiles => {
            if size == 0 || !(1..=32).contains(&count) {
                return Err(usage("tiles needs --size >= 1 and --count in 1..=32"));
            }
            io::to_canonical(&generate::random_instance(size, count as u32, seed))
        }
        GenKind::Nae3sat => source(GenerateKind::Nae)?,
        GenKind::OneInThree => source(GenerateKind::OneInThree)?,
        GenKind::ThreeDm => source(GenerateKind::ThreeDm)?,
        GenKind::Subsetsum => source(GenerateKind::SubsetSum)?,
    };
    emit(flags, &text)?;
    Ok(Status::Ok)
}
