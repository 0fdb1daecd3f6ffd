//! Coherence-based probabilistic reasoning over conditional events.
//!
//! The crate checks coherence of precise and interval-valued conditional
//! probability assessments, propagates them to further conditional events by
//! exact linear programming, evaluates closed-form propagation rules for the
//! first three syllogistic figures, and classifies categorical syllogisms as
//! valid or strictly valid under probabilistic existential import.
//!
//! All arithmetic is exact over rationals.

pub mod coherence;
pub mod constituents;
pub mod defaults;
pub mod error;
pub mod event;
pub mod figures;
pub mod germ;
pub mod interval;
pub mod lp;
pub mod par;
pub mod propagation;
pub mod rational;
pub mod syllogism;

pub use coherence::{
    build_system, check_coherence, check_g_coherence, check_t_coherence_grid, coherence_report, compute_i0,
    solve_feasible, CoherenceReport, I0Result, LinearSystem,
};
pub use constituents::{enumerate_constituents, points_for, Constituent, ConstituentTable};
pub use defaults::{to_defaults, DefaultRule, DefaultStatement, Entailment};
pub use error::{Error, Result};
pub use event::{ConditionalEvent, Event, Truth};
pub use figures::{sigma_with_openness, Figure, FigureBox, FigureTriple};
pub use interval::{BoxAssessment, ExtensionInterval, OpenInterval};
pub use par::Execution;
pub use propagation::{extension_bounds, extension_report, extension_union_sampled, lp_optimize, ExtensionReport};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use syllogism::{
    box_verdict, catalog, check_p_entailment, evaluate_syllogism, gq_syllogism, import_constraint, interpret_sentence,
    Comparison, GqSentence, ImportKind, ProbConstraint, Quantity, SentenceType, SyllogismForm, Verdict,
};
