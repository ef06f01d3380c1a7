//! Supplying irreducibles for a maximal subgroup with no built-in ones.
//!
//! The Klein four-group generated by two disjoint double transpositions is
//! neither cyclic nor a full symmetric group. Its four characters take
//! values ±1, so they can be given over the rationals.

use invsemi::algebra::Decomposition;
use invsemi::field::Rationals;
use invsemi::irreps::{all_irreps, parse_supplied};
use invsemi::{GreenStructure, PartialPerm, Result};

fn main() -> Result<()> {
    let x = PartialPerm::new(vec![Some(1), Some(0), Some(3), Some(2)])?;
    let y = PartialPerm::new(vec![Some(2), Some(3), Some(0), Some(1)])?;
    let table = invsemi::SemigroupTable::generate(4, &[x.clone(), y.clone()])?;
    let green = GreenStructure::new(&table)?;
    let decomposition = Decomposition::new(&table, &green)?;

    match all_irreps(&Rationals, &decomposition, &green, None) {
        Err(e) => println!("built-in: {e}"),
        Ok(_) => println!("built-in irreducibles unexpectedly available"),
    }

    let e = table.identity().expect("a group has an identity");
    let (xi, yi) = (table.id_of(&x).unwrap(), table.id_of(&y).unwrap());
    let xy = table.product(xi, yi);
    let character = |sx: i64, sy: i64| {
        format!(
            r#"{{"degree": 1, "images": {{"{}": [[1]], "{}": [[{sx}]], "{}": [[{sy}]], "{}": [[{}]]}}}}"#,
            e.0,
            xi.0,
            yi.0,
            xy.0,
            sx * sy
        )
    };
    let text = format!(
        r#"{{"{}": [{}, {}, {}, {}]}}"#,
        e.0,
        character(1, 1),
        character(1, -1),
        character(-1, 1),
        character(-1, -1)
    );
    let supplied = parse_supplied(&text)?;
    let set = all_irreps(&Rationals, &decomposition, &green, Some(&supplied))?;
    println!(
        "supplied: {} lifts, degrees {:?}, commutants {:?}, certified {}",
        set.lifts.len(),
        set.degrees(),
        set.commutant_dimensions,
        set.certified_count()
    );

    let incomplete = format!(r#"{{"{}": [{}]}}"#, e.0, character(1, 1));
    if let Err(err) = all_irreps(
        &Rationals,
        &decomposition,
        &green,
        Some(&parse_supplied(&incomplete)?),
    ) {
        println!("incomplete list rejected: {err}");
    }
    Ok(())
}
