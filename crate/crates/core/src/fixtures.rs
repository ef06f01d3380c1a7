//! Built-in generator sets and the generator file format.
//!
//! A generator file is JSON of the form
//! `{ "degree": n, "generators": [[0, null, 1], ...] }` with 0-based points
//! and `null` for undefined points. Files may also carry a `name` and the
//! `seed` used to produce a random fixture.

use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partial_perm::PartialPerm;
use crate::semigroup::{GenerateOptions, SemigroupTable};

/// Largest degree accepted by the built-in families.
pub const MAX_BUILTIN_DEGREE: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<PartialPerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// `false` closes under composition only, without adding inverses.
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub close_under_inverse: bool,
}

fn default_true() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

impl GeneratorFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GeneratorFile =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("generator file: {e}")))?;
        for g in &file.generators {
            if g.degree() != file.degree {
                return Err(Error::Input(format!(
                    "generator {g} has degree {} but the file declares {}",
                    g.degree(),
                    file.degree
                )));
            }
        }
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("generator files always serialize")
    }

    pub fn table(&self) -> Result<SemigroupTable> {
        self.table_with(&GenerateOptions::default())
    }

    /// Generates the table, adding inverses only if both the file and
    /// `options` ask for it.
    pub fn table_with(&self, options: &GenerateOptions) -> Result<SemigroupTable> {
        let options = GenerateOptions {
            close_under_inverse: self.close_under_inverse && options.close_under_inverse,
            ..options.clone()
        };
        SemigroupTable::generate_with(self.degree, &self.generators, &options)
    }
}

fn named(name: String, degree: usize, generators: Vec<PartialPerm>) -> GeneratorFile {
    GeneratorFile {
        name: Some(name),
        degree,
        generators,
        seed: None,
        close_under_inverse: true,
    }
}

fn transpositions(n: usize) -> Vec<PartialPerm> {
    let mut out = Vec::new();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            let mut images: Vec<Option<u32>> = (0..n as u32).map(Some).collect();
            images.swap(i as usize, j as usize);
            out.push(PartialPerm::new(images).expect("transposition is a permutation"));
        }
    }
    out
}

/// The rook monoid `R_n`: all transpositions plus the partial identity on
/// the first `n − 1` points.
pub fn rook(n: usize) -> GeneratorFile {
    let mut gens = transpositions(n);
    if n < 2 {
        gens.push(PartialPerm::identity(n));
    }
    let first: Vec<u32> = (0..n.saturating_sub(1) as u32).collect();
    gens.push(PartialPerm::partial_identity(n, &first).expect("points in range"));
    named(format!("rook-{n}"), n, gens)
}

/// The symmetric group on `n` points, generated by transpositions.
pub fn symmetric(n: usize) -> GeneratorFile {
    let mut gens = transpositions(n);
    if gens.is_empty() {
        gens.push(PartialPerm::identity(n));
    }
    named(format!("sym-{n}"), n, gens)
}

/// The nilpotent shift `x ↦ x − 1` on `n` points.
pub fn chain(n: usize) -> GeneratorFile {
    let images = (0..n as u32).map(|x| x.checked_sub(1)).collect();
    named(
        format!("chain-{n}"),
        n,
        vec![PartialPerm::new(images).expect("shift is injective")],
    )
}

/// A uniformly random partial permutation whose rank is at least
/// `degree − 2`, biased so that fixtures have non-trivial groups.
fn random_partial_perm(rng: &mut ChaCha8Rng, degree: usize) -> PartialPerm {
    let low = degree.saturating_sub(2);
    let rank = rng.gen_range(low..=degree);
    let mut domain: Vec<u32> = (0..degree as u32).collect();
    domain.shuffle(rng);
    domain.truncate(rank);
    let mut range: Vec<u32> = (0..degree as u32).collect();
    range.shuffle(rng);
    range.truncate(rank);
    let pairs: Vec<(u32, u32)> = domain.into_iter().zip(range).collect();
    PartialPerm::from_pairs(degree, &pairs).expect("random pairs form a partial permutation")
}

/// Seeded random generators; the inverse subsemigroup of `R_degree` they
/// generate is the fixture.
pub fn random(degree: usize, generator_count: usize, seed: u64) -> GeneratorFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = (0..generator_count.max(1))
        .map(|_| random_partial_perm(&mut rng, degree))
        .collect();
    GeneratorFile {
        name: Some(format!("random-{degree}")),
        degree,
        generators: gens,
        seed: Some(seed),
        close_under_inverse: true,
    }
}

/// Resolves `rook-n`, `sym-n`, `chain-n` or `random-n`.
pub fn builtin(name: &str, seed: u64, generator_count: usize) -> Result<GeneratorFile> {
    let (family, n) = name
        .rsplit_once('-')
        .ok_or_else(|| Error::Input(format!("unknown built-in `{name}`")))?;
    let n: usize = n
        .parse()
        .map_err(|_| Error::Input(format!("unknown built-in `{name}`")))?;
    if n > MAX_BUILTIN_DEGREE {
        return Err(Error::Input(format!(
            "degree {n} exceeds the built-in limit of {MAX_BUILTIN_DEGREE}"
        )));
    }
    match family {
        "rook" => Ok(rook(n)),
        "sym" => Ok(symmetric(n)),
        "chain" if n >= 1 => Ok(chain(n)),
        "random" if n >= 1 => Ok(random(n, generator_count, seed)),
        _ => Err(Error::Input(format!("unknown built-in `{name}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_sizes() {
        assert_eq!(builtin("rook-3", 0, 3).unwrap().table().unwrap().len(), 34);
        assert_eq!(builtin("rook-1", 0, 3).unwrap().table().unwrap().len(), 2);
        assert_eq!(builtin("sym-3", 0, 3).unwrap().table().unwrap().len(), 6);
        assert_eq!(builtin("sym-1", 0, 3).unwrap().table().unwrap().len(), 1);
    }

    #[test]
    fn chain_plain_closure_is_cyclic_nilpotent() {
        let opts = GenerateOptions {
            close_under_inverse: false,
            ..Default::default()
        };
        let t = chain(4).table_with(&opts).unwrap();
        assert_eq!(t.len(), 4);
        assert!(t.ids().any(|a| t.element(a) == &PartialPerm::empty(4)));
    }

    #[test]
    fn unknown_names() {
        for bad in ["rook", "foo-3", "rook-x", "chain-0", "rook-99"] {
            assert!(builtin(bad, 0, 3).is_err(), "{bad}");
        }
    }

    #[test]
    fn random_is_seeded() {
        assert_eq!(random(4, 3, 7), random(4, 3, 7));
        assert_ne!(random(4, 3, 7).generators, random(4, 3, 8).generators);
        let t = random(4, 3, 7).table().unwrap();
        assert!(t.check_inverse().is_inverse());
    }

    #[test]
    fn file_round_trip_and_degree_check() {
        let f = rook(2);
        assert_eq!(GeneratorFile::from_json(&f.to_json()).unwrap(), f);
        let bad = r#"{"degree": 3, "generators": [[null, 0]]}"#;
        assert!(GeneratorFile::from_json(bad).is_err());
        let shift = r#"{"degree": 4, "generators": [[null, 0, 1, 2]]}"#;
        assert_eq!(GeneratorFile::from_json(shift).unwrap().generators.len(), 1);
    }
}
