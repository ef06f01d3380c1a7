//! The groupoid basis of the algebra of R₂ and the blocks ψ_e of its
//! decomposition into matrix algebras over group algebras.

use invsemi::algebra::{groupoid_expand, AlgebraElement, Decomposition};
use invsemi::field::{Field, Rationals};
use invsemi::{fixtures, GreenStructure, Result};

fn main() -> Result<()> {
    let q = Rationals;
    let table = fixtures::rook(2).table()?;
    let green = GreenStructure::new(&table)?;
    let decomposition = Decomposition::new(&table, &green)?;

    println!("groupoid basis ⌊a⌋ = Σ μ(b, a)·b:");
    for a in table.ids() {
        let terms: Vec<String> = groupoid_expand(&q, &table, a)
            .terms()
            .map(|(b, c)| format!("{}·{}", q.format(c), table.element(b)))
            .collect();
        println!("  ⌊{}⌋ = {}", table.element(a), terms.join(" + "));
    }

    println!("\nblocks:");
    for block in decomposition.blocks() {
        println!(
            "  e = {}: M_{}(F G(e)) with |G(e)| = {}, dimension {}",
            table.element(block.lambda),
            block.size(),
            block.group.order(),
            block.dimension()
        );
        for a in table.ids() {
            let image = decomposition.psi(&q, block.lambda, &AlgebraElement::basis(&q, a))?;
            if !image.is_zero() {
                let entries: Vec<String> = image
                    .entries()
                    .map(|((i, j), x)| {
                        let g: Vec<String> = x
                            .terms()
                            .map(|(g, _)| table.element(g).to_string())
                            .collect();
                        format!("({i},{j}): {}", g.join("+"))
                    })
                    .collect();
                println!("    ψ({}) = {}", table.element(a), entries.join(", "));
            }
        }
    }
    println!(
        "\nΣ n_e²|G(e)| = {} = |S| = {}; ψ multiplicative: {}; direct sum rank {}",
        decomposition.total_dimension(),
        table.len(),
        decomposition.homomorphism_failure().is_none(),
        decomposition.direct_sum_rank()
    );
    Ok(())
}
