//! Basic partial-permutation arithmetic: composition, inverses, the
//! natural order and rook matrices.

use invsemi::{PartialPerm, Result};

fn main() -> Result<()> {
    // x ↦ x − 1 on four points; 0 has no image.
    let shift = PartialPerm::new(vec![None, Some(0), Some(1), Some(2)])?;
    let inv = shift.inverse();
    println!("a        = {shift}  (rank {})", shift.rank());
    println!("a⁻¹      = {inv}");
    println!("a⁻¹a     = {}  = dom(a)", inv.compose(&shift)?);
    println!("aa⁻¹     = {}  = ran(a)", shift.compose(&inv)?);
    println!("aa⁻¹a    = {}", shift.compose(&inv)?.compose(&shift)?);

    let mut power = shift.clone();
    for k in 2..=4 {
        power = power.compose(&shift)?;
        println!("a^{k}      = {power}");
    }

    let restriction = PartialPerm::from_pairs(4, &[(2, 1)])?;
    println!(
        "\n{restriction} ≤ {shift}: {}",
        restriction.natural_leq(&shift)?
    );
    println!(
        "{shift} ≤ {restriction}: {}",
        shift.natural_leq(&restriction)?
    );

    println!("\nrook matrix of a (row i, column j is 1 iff a(j) = i):");
    for row in shift.to_rook_matrix() {
        println!("  {row:?}");
    }
    Ok(())
}
