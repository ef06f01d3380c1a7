//! Seeded random inverse subsemigroups of R₄ and R₅: the structural
//! classification against brute force, and the class count against the
//! group class counts.

use invsemi::conjugacy::{s_conjugacy_bruteforce, ConjugacyAnalysis};
use invsemi::{fixtures, GreenStructure, Result};

fn main() -> Result<()> {
    for (degree, seed) in [(4, 1), (4, 2), (4, 3), (5, 1), (5, 2)] {
        let file = fixtures::random(degree, 3, seed);
        let table = file.table()?;
        let green = GreenStructure::new(&table)?;
        let analysis = ConjugacyAnalysis::new(&table, &green);
        let brute = s_conjugacy_bruteforce(&table);
        let sum: usize = analysis.group_class_counts.iter().sum();
        println!(
            "random-{degree} seed {seed}: |S| = {:>4}, D-classes {:>2}, classes {:>3} (brute force {:>3}), Σ #cc(G(e)) = {sum}",
            table.len(),
            green.d_classes().len(),
            analysis.structural.len(),
            brute.len(),
        );
    }
    Ok(())
}
