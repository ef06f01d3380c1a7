//! Sizes and class counts of the rook monoids R₁ … R₅.
//!
//! Each S-conjugacy class of R_n is labelled by a rank k and a cycle type
//! of S_k, so the count is Σ_k p(k).

use invsemi::conjugacy::{g_conjugacy, s_conjugacy_structural};
use invsemi::irreps::partitions;
use invsemi::{fixtures, GreenStructure, Result};

fn main() -> Result<()> {
    println!(
        "{:>2} {:>6} {:>10} {:>10} {:>8}",
        "n", "|R_n|", "S-classes", "Σ p(k)", "G-classes"
    );
    for n in 1..=5 {
        let table = fixtures::rook(n).table()?;
        let green = GreenStructure::new(&table)?;
        let classes = s_conjugacy_structural(&table, &green).len();
        let expected: usize = (0..=n).map(|k| partitions(k).len()).sum();
        let g = g_conjugacy(&table)?.len();
        println!(
            "{n:>2} {:>6} {classes:>10} {expected:>10} {g:>8}",
            table.len()
        );
    }
    Ok(())
}
