//! Prints every catalog syllogism with its verdict and default translation.

use syllogic::{catalog, evaluate_syllogism, to_defaults, ImportKind};

fn main() -> syllogic::Result<()> {
    for form in catalog() {
        let verdict = evaluate_syllogism(&form, ImportKind::Conditional)?;
        let rule = to_defaults(&form)?;
        println!("{:<14} {:<8} Σ = {:<8} {}", form.label(), verdict.label(), verdict.sigma.to_string(), rule.to_unicode());
    }
    Ok(())
}
