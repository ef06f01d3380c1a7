//! S-conjugacy in the rook monoid of degree 3: both algorithms, the group
//! conjugacy of the unit group, and the class of (32)[1].

use invsemi::conjugacy::{
    counterexample_check, g_conjugacy, s_conjugacy_bruteforce, s_conjugacy_structural, swap_literal,
};
use invsemi::{fixtures, GreenStructure, Result};

fn main() -> Result<()> {
    let table = fixtures::rook(3).table()?;
    let green = GreenStructure::new(&table)?;
    let brute = s_conjugacy_bruteforce(&table);
    let structural = s_conjugacy_structural(&table, &green);
    let g = g_conjugacy(&table)?;
    println!(
        "S-conjugacy classes: {} (brute force), {} (structural)",
        brute.len(),
        structural.len()
    );
    println!("G-conjugacy classes: {}", g.len());
    println!("partitions agree: {}", brute.same_partition(&structural));

    for class in &structural.classes {
        let members: Vec<String> = class
            .members
            .iter()
            .map(|&a| table.element(a).to_string())
            .collect();
        let subrank = class
            .subrank
            .map(|e| table.element(e).to_string())
            .unwrap_or_default();
        println!("  subrank {subrank}: {}", members.join(" "));
    }

    // (32)[1] swaps points 2 and 3 and leaves 1 undefined.
    let a = table.id_of(&swap_literal(3, 2)).expect("in R₃");
    let class: Vec<String> = structural
        .class_of(a)
        .members
        .iter()
        .map(|&b| table.element(b).to_string())
        .collect();
    println!("\nclass of (32)[1] = {}", class.join(" "));

    let check = counterexample_check(&table)?;
    println!(
        "t·(31)[2]·t⁻¹ = {}, outside the class: {}, check passed: {}",
        check.conjugate, check.zero_outside_class, check.passed
    );
    Ok(())
}
