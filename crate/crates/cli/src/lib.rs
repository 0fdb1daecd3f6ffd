//! Command implementations behind the `syllogic` binary.

pub mod problem;
pub mod report;

use std::path::{Path, PathBuf};

use syllogic::par::{self, Execution};
use syllogic::{
    catalog, check_g_coherence, check_t_coherence_grid, coherence_report, evaluate_syllogism, extension_report,
    extension_union_sampled, format_rational, sigma_with_openness, to_defaults, ConditionalEvent, ExtensionInterval,
    Figure, ImportKind, OpenInterval, Rational, SyllogismForm,
};

pub use problem::{parse_value, Assessment, ProblemFile, SyllogismSpec};
pub use report::{CatalogRow, CommandKind, CrossCheck, Details, GridReport, IntervalReport, Report, WitnessEntry};

use report::interval_text;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] syllogic::Error),
}

/// Settings shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Grid density for sampled cross-checks and t-coherence sweeps.
    pub grid: Option<usize>,
    /// Confirm closed forms with the linear-programming oracle.
    pub oracle: bool,
    /// Overrides the import kind of a syllogism.
    pub import: Option<ImportKind>,
    pub defaults: bool,
    pub unicode: bool,
}

const DEFAULT_GRID: usize = 5;

pub fn read_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    ProblemFile::parse(&text)
}

fn point_values(problem: &ProblemFile) -> Vec<Rational> {
    problem.assessments.iter().map(|a| a.value.lower.clone()).collect()
}

fn boxed(problem: &ProblemFile) -> Vec<OpenInterval> {
    problem.assessments.iter().map(|a| a.value.clone()).collect()
}

fn closed(iv: &ExtensionInterval) -> OpenInterval {
    OpenInterval::closed(iv.lower.clone(), iv.upper.clone())
}

pub fn cmd_check(problem: &ProblemFile, opts: &Options) -> Result<Report, CliError> {
    if problem.assessments.is_empty() {
        return Err(CliError::Invalid("no assessments to check".into()));
    }
    let family = problem.family();
    let (verdict, coherent, witness, precise) = if problem.values_are_points() {
        let rep = coherence_report(&family, &point_values(problem))?;
        let witness = match (&rep.witness, rep.coherent) {
            (Some((table, lambda)), true) => lambda
                .iter()
                .enumerate()
                .map(|(h, l)| WitnessEntry { constituent: table.describe(h), mass: format_rational(l) })
                .collect(),
            _ => Vec::new(),
        };
        let word = if rep.coherent { "coherent" } else { "incoherent" };
        (word, rep.coherent, witness, true)
    } else {
        let ok = check_g_coherence(&family, &boxed(problem))?;
        (if ok { "g-coherent" } else { "not g-coherent" }, ok, Vec::new(), false)
    };
    let grid = match opts.grid {
        Some(density) => {
            let t_coherent = check_t_coherence_grid(&family, &boxed(problem), density, Execution::Parallel)?;
            Some(GridReport { density, t_coherent })
        }
        None => None,
    };
    Ok(Report {
        command: CommandKind::Check,
        verdict: verdict.to_string(),
        success: coherent,
        problem: Some(problem.to_text()),
        details: Details::Check { precise, coherent, witness, grid },
    })
}

/// A problem recognized as one of the three figures, with its premises
/// reordered to the canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureMatch {
    pub figure: Figure,
    /// `order[k]` is the assessment index of canonical premise `k`.
    pub order: [usize; 3],
    /// The target is the complement of the canonical one.
    pub complemented: bool,
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Finds a figure and a renaming of the problem's three atoms under which the
/// family and target are the figure's, up to logical equivalence.
pub fn match_figure(family: &[ConditionalEvent], target: &ConditionalEvent) -> Option<FigureMatch> {
    if family.len() != 3 {
        return None;
    }
    let mut atoms = std::collections::BTreeSet::new();
    family.iter().chain([target]).for_each(|c| atoms.extend(c.atoms()));
    let atoms: Vec<String> = atoms.into_iter().collect();
    if atoms.len() != 3 {
        return None;
    }
    for figure in Figure::ALL {
        for p in PERMUTATIONS {
            let (a, b, c) = (&atoms[p[0]], &atoms[p[1]], &atoms[p[2]]);
            let canon = figure.premise_family_with(a, b, c);
            let canon_target = figure.target_with(a, b, c);
            let complemented = if target.equivalent(&canon_target) {
                false
            } else if target.equivalent(&canon_target.complement()) {
                true
            } else {
                continue;
            };
            let mut order = [usize::MAX; 3];
            let mut used = [false; 3];
            for (k, premise) in canon.iter().enumerate() {
                if let Some(j) = (0..3).find(|&j| !used[j] && family[j].equivalent(premise)) {
                    used[j] = true;
                    order[k] = j;
                }
            }
            if used.iter().all(|&u| u) {
                return Some(FigureMatch { figure, order, complemented });
            }
        }
    }
    None
}

fn reflect_if(iv: OpenInterval, flip: bool) -> OpenInterval {
    if flip {
        iv.reflect()
    } else {
        iv
    }
}

pub fn cmd_propagate(problem: &ProblemFile, opts: &Options) -> Result<Report, CliError> {
    let target = problem.target.clone().ok_or_else(|| CliError::Invalid("propagate needs a [target] section".into()))?;
    if problem.assessments.is_empty() {
        return Err(CliError::Invalid("no premises to propagate".into()));
    }
    let family = problem.family();
    let matched = match_figure(&family, &target);
    let figure = matched.as_ref().map(|m| m.figure.to_string());
    let mut diagnostics = Vec::new();
    let mut cross_check = None;
    let precise = problem.values_are_points();

    let coherent =
        if precise { coherence_report(&family, &point_values(problem))?.coherent } else { check_g_coherence(&family, &boxed(problem))? };
    let (interval, method) = if !coherent {
        (None, "none".to_string())
    } else if precise {
        let values = point_values(problem);
        let mut lp = || -> Result<OpenInterval, CliError> {
            let rep = extension_report(&family, &values, &target)?;
            diagnostics.extend(rep.diagnostics());
            Ok(closed(&rep.interval))
        };
        match &matched {
            Some(m) => {
                let v = |k: usize| &values[m.order[k]];
                let closed_form = reflect_if(closed(&m.figure.bounds(v(0), v(1), v(2))), m.complemented);
                if opts.oracle {
                    let oracle = lp()?;
                    cross_check = Some(CrossCheck {
                        method: "exact linear programming".into(),
                        agrees: oracle == closed_form,
                        interval: Some(IntervalReport::new(&oracle)),
                    });
                }
                (Some(closed_form), format!("closed form, figure {}", m.figure))
            }
            None => (Some(lp()?), "exact linear programming".to_string()),
        }
    } else {
        let bx = boxed(problem);
        let density = opts.grid.unwrap_or(DEFAULT_GRID);
        let sampled = || extension_union_sampled(&family, &bx, &target, density, Execution::Parallel);
        match &matched {
            Some(m) => {
                let canon = [bx[m.order[0]].clone(), bx[m.order[1]].clone(), bx[m.order[2]].clone()];
                let sigma = reflect_if(sigma_with_openness(m.figure, &canon)?, m.complemented);
                if opts.oracle || opts.grid.is_some() {
                    let inner = sampled()?;
                    let agrees = inner.as_ref().is_some_and(|s| sigma.contains(&s.lower) && sigma.contains(&s.upper));
                    cross_check = Some(CrossCheck {
                        method: format!("grid {density} sample hull inside Σ"),
                        interval: inner.as_ref().map(|s| IntervalReport::new(&closed(s))),
                        agrees,
                    });
                }
                (Some(sigma), format!("closed form with open faces, figure {}", m.figure))
            }
            None => {
                diagnostics.push("no figure matched; interval is the hull over coherent grid points".into());
                (sampled()?.map(|s| closed(&s)), format!("grid {density} sample hull"))
            }
        }
    };
    let verdict = match &interval {
        None if precise => "incoherent premises".to_string(),
        None => "premises not g-coherent".to_string(),
        Some(iv) if iv.is_unit() => format!("{} non-informative", interval_text(iv)),
        Some(iv) => interval_text(iv),
    };
    let agrees = cross_check.as_ref().map_or(true, |c| c.agrees);
    Ok(Report {
        command: CommandKind::Propagate,
        verdict,
        success: interval.is_some() && agrees,
        problem: Some(problem.to_text()),
        details: Details::Propagate {
            target: target.to_string(),
            method,
            figure,
            non_informative: interval.as_ref().is_some_and(OpenInterval::is_unit),
            interval: interval.as_ref().map(IntervalReport::new),
            cross_check,
            diagnostics,
        },
    })
}

fn verdict_line(v: &syllogic::Verdict) -> String {
    let sigma = v.sigma.to_string();
    if v.strictly_valid {
        format!("s-valid, Σ={sigma}")
    } else if v.valid {
        format!("valid (not s-valid), Σ={sigma} ⊆ {}", v.conclusion_set)
    } else {
        format!("invalid, Σ={sigma}")
    }
}

pub fn cmd_syllogism(form: &SyllogismForm, import: ImportKind) -> Result<Report, CliError> {
    let v = evaluate_syllogism(form, import)?;
    let sentences = form.sentences();
    let mut premises: Vec<String> = sentences[..2].iter().map(|s| {
        let c = syllogic::interpret_sentence(s).primary;
        format!("{s}: p({}) ∈ {}", c.event, c.set)
    }).collect();
    if let Some(c) = syllogic::import_constraint(form.figure, import) {
        premises.push(format!("existential import: p({}) ∈ {}", c.event, c.set));
    }
    let problem = ProblemFile {
        syllogism: Some(SyllogismSpec { form: form.clone(), import: Some(import) }),
        ..ProblemFile::default()
    };
    Ok(Report {
        command: CommandKind::Syllogism,
        verdict: verdict_line(&v),
        success: v.valid,
        problem: Some(problem.to_text()),
        details: Details::Syllogism {
            form: form.label(),
            figure: form.figure.to_string(),
            mood: form.mood_string(),
            import: import.to_string(),
            premises,
            target: v.target.to_string(),
            sigma: v.sigma.to_string(),
            conclusion_set: v.conclusion_set.to_string(),
            valid: v.valid,
            strictly_valid: v.strictly_valid,
        },
    })
}

pub fn cmd_catalog(opts: &Options) -> Result<Report, CliError> {
    let import = opts.import.unwrap_or_default();
    let forms = catalog();
    let results = par::map(Execution::Parallel, &forms, |f| -> Result<CatalogRow, CliError> {
        let v = evaluate_syllogism(f, import)?;
        let defaults = if opts.defaults {
            let rule = to_defaults(f)?;
            Some(if opts.unicode { rule.to_unicode() } else { rule.to_ascii() })
        } else {
            None
        };
        Ok(CatalogRow {
            name: f.label(),
            figure: f.figure.to_string(),
            mood: f.mood_string(),
            verdict: v.label().to_string(),
            sigma: v.sigma.to_string(),
            conclusion_set: v.conclusion_set.to_string(),
            defaults,
        })
    });
    let rows = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let count = |label: &str| rows.iter().filter(|r| r.verdict == label).count();
    let verdict =
        format!("{} forms: {} s-valid, {} valid, {} invalid", rows.len(), count("s-valid"), count("valid"), count("invalid"));
    Ok(Report {
        command: CommandKind::Catalog,
        verdict,
        success: true,
        problem: None,
        details: Details::Catalog { import: import.to_string(), rows },
    })
}

/// Runs whatever a problem file asks for: a syllogism verdict, a propagation
/// to its target, or a coherence check.
pub fn run_problem(problem: &ProblemFile, opts: &Options) -> Result<Report, CliError> {
    if let Some(spec) = &problem.syllogism {
        let import = opts.import.or(spec.import).unwrap_or_default();
        return cmd_syllogism(&spec.form, import);
    }
    if problem.target.is_some() {
        return cmd_propagate(problem, opts);
    }
    cmd_check(problem, opts)
}

/// Re-evaluates a report's embedded problem text.
pub fn replay(report: &Report, opts: &Options) -> Result<Report, CliError> {
    match &report.problem {
        Some(text) => run_problem(&ProblemFile::parse(text)?, opts),
        None => cmd_catalog(opts),
    }
}

/// Evaluates independent problem files concurrently, keeping input order.
pub fn run_batch(paths: &[PathBuf], opts: &Options) -> Vec<Result<Report, CliError>> {
    par::map(Execution::Parallel, paths, |p| run_problem(&read_problem(p)?, opts))
}
