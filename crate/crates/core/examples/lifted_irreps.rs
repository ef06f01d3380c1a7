//! Irreducible representations of R₃ lifted from its maximal subgroups,
//! over the rationals and over GF(5), with their certificates.

use invsemi::algebra::Decomposition;
use invsemi::field::{Field, PrimeField, Rationals};
use invsemi::irreps::{all_irreps, characteristic_guard};
use invsemi::{fixtures, GreenStructure, Result};

fn show<F: Field>(field: &F, name: &str) -> Result<()> {
    let table = fixtures::rook(3).table()?;
    let green = GreenStructure::new(&table)?;
    let decomposition = Decomposition::new(&table, &green)?;
    let set = all_irreps(field, &decomposition, &green, None)?;
    println!("over {name}:");
    for (lift, commutant) in set.lifts.iter().zip(&set.commutant_dimensions) {
        println!(
            "  from G({}): deg ρ = {}, deg ρ* = {}, commutant dimension {commutant}",
            table.element(lift.lambda),
            lift.rep_degree,
            lift.degree
        );
    }
    println!(
        "  Σ deg² = {}, pairwise inequivalent: {}, certified lifts: {}",
        set.degree_square_sum(),
        set.pairwise_inequivalent(),
        set.certified_count()
    );
    Ok(())
}

fn main() -> Result<()> {
    show(&Rationals, "Q")?;
    show(&PrimeField::new(5)?, "GF(5)")?;

    let table = fixtures::rook(3).table()?;
    let green = GreenStructure::new(&table)?;
    for p in [2, 3, 5, 7] {
        println!(
            "characteristic {p} admissible: {}",
            characteristic_guard(&table, &green, p)?
        );
    }
    match all_irreps(
        &PrimeField::new(2)?,
        &Decomposition::new(&table, &green)?,
        &green,
        None,
    ) {
        Err(e) => println!("GF(2): {e} (exit code {})", e.exit_code()),
        Ok(_) => println!("GF(2) unexpectedly accepted"),
    }
    Ok(())
}
