//! D-classes, the Λ transversal, maximal subgroups and connecting elements
//! of the rook monoid of degree 3.

use invsemi::{fixtures, GreenStructure, Result};

fn main() -> Result<()> {
    let table = fixtures::rook(3).table()?;
    let green = GreenStructure::new(&table)?;
    println!(
        "|R₃| = {}, {} idempotents, {} H-classes",
        table.len(),
        table.idempotent_ids().len(),
        green.h_class_count()
    );

    for (k, d) in green.d_classes().iter().enumerate() {
        let group = green.maximal_subgroup(&table, d.lambda)?;
        println!(
            "D{k}: rank {}, {} elements, n_e = {}, Λ = {} {}, |G(e)| = {}, group classes = {}",
            d.rank,
            d.members.len(),
            d.idempotent_count(),
            d.lambda,
            table.element(d.lambda),
            group.order(),
            group.conjugacy_classes().len(),
        );
        for &f in &d.idempotents {
            let t = green.connecting_element(&table, f, d.lambda)?;
            println!(
                "    t: {} → {} via {}",
                table.element(f),
                table.element(d.lambda),
                table.element(t)
            );
        }
    }
    Ok(())
}
