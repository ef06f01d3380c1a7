//! Irreducible representations: built-in ones for trivial, cyclic and full
//! symmetric maximal subgroups, user-supplied ones, and the certified set
//! of lifts to the whole semigroup.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Deserialize;
use serde_json::Value;

use crate::algebra::{lift, Decomposition, LiftedRep, Rep};
use crate::error::{Error, Result};
use crate::field::{is_prime, Field};
use crate::matrix::{commutant_dimension, intertwiner_dimension, Matrix};
use crate::semigroup::{ElementId, GreenStructure, MaximalSubgroup, SemigroupTable};

pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// Partitions of `k` in reverse lexicographic order, `[k]` first.
pub fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Standard Young tableaux of `shape`, each stored as the (row, column)
/// cell of the entries `0, 1, …, k−1`.
fn standard_tableaux(shape: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn go(
        shape: &[usize],
        filled: &mut Vec<usize>,
        cells: &mut Vec<(usize, usize)>,
        total: usize,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cells.len() == total {
            out.push(cells.clone());
            return;
        }
        for row in 0..shape.len() {
            let col = filled[row];
            let fits = col < shape[row] && (row == 0 || filled[row - 1] > col);
            if fits {
                filled[row] += 1;
                cells.push((row, col));
                go(shape, filled, cells, total, out);
                cells.pop();
                filled[row] -= 1;
            }
        }
    }
    let total = shape.iter().sum();
    let mut out = Vec::new();
    go(
        shape,
        &mut vec![0; shape.len()],
        &mut Vec::new(),
        total,
        &mut out,
    );
    out
}

/// An irreducible representation of `S_k` in Young's seminormal form.
#[derive(Clone, Debug)]
pub struct SymmetricIrrep<E> {
    pub shape: Vec<usize>,
    pub degree: usize,
    /// Images of the adjacent transpositions `(i, i+1)`, `i = 0..k−1`.
    pub adjacent: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> SymmetricIrrep<E> {
    /// Images of every permutation, keyed by image table, built by
    /// breadth-first search over adjacent transpositions.
    pub fn all_images<F: Field<Elem = E>>(&self, field: &F) -> HashMap<Vec<u8>, Matrix<E>> {
        let k: usize = self.shape.iter().sum();
        let start: Vec<u8> = (0..k as u8).collect();
        let mut images = HashMap::new();
        images.insert(start.clone(), Matrix::identity(field, self.degree));
        let mut queue = VecDeque::from([start]);
        while let Some(perm) = queue.pop_front() {
            for (i, s) in self.adjacent.iter().enumerate() {
                // s_i ∘ π: apply π, then swap the values i and i+1.
                let next: Vec<u8> = perm
                    .iter()
                    .map(|&v| match v as usize {
                        x if x == i => (i + 1) as u8,
                        x if x == i + 1 => i as u8,
                        _ => v,
                    })
                    .collect();
                if !images.contains_key(&next) {
                    let m = s.mul(field, &images[&perm]);
                    images.insert(next.clone(), m);
                    queue.push_back(next);
                }
            }
        }
        images
    }
}

/// One irreducible per partition of `k`, with exact entries.
pub fn symmetric_group_irreps<F: Field>(
    field: &F,
    k: usize,
) -> Result<Vec<SymmetricIrrep<F::Elem>>> {
    if k > MAX_SYMMETRIC_DEGREE {
        return Err(Error::Unsupported(format!(
            "built-in irreducibles of S_{k} (only k ≤ {MAX_SYMMETRIC_DEGREE}); supply representations instead"
        )));
    }
    let mut out = Vec::new();
    for shape in partitions(k) {
        let tableaux = standard_tableaux(&shape);
        let index: HashMap<&Vec<(usize, usize)>, usize> =
            tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let d = tableaux.len();
        let mut adjacent = Vec::new();
        for i in 0..k.saturating_sub(1) {
            let mut m = Matrix::zeros(field, d, d);
            for (col, t) in tableaux.iter().enumerate() {
                let (r1, c1) = t[i];
                let (r2, c2) = t[i + 1];
                if r1 == r2 {
                    m.set(col, col, field.one());
                } else if c1 == c2 {
                    m.set(col, col, field.from_i64(-1));
                } else {
                    // Axial distance from i to i+1.
                    let r = (c2 as i64 - r2 as i64) - (c1 as i64 - r1 as i64);
                    let mut swapped = t.clone();
                    swapped.swap(i, i + 1);
                    let other = index[&swapped];
                    m.set(col, col, field.from_ratio(1, r)?);
                    // i above i+1 gets the unit coefficient.
                    let off = if r1 < r2 {
                        field.one()
                    } else {
                        field.from_ratio(r * r - 1, r * r)?
                    };
                    m.set(other, col, off);
                }
            }
            adjacent.push(m);
        }
        out.push(SymmetricIrrep {
            shape,
            degree: d,
            adjacent,
        });
    }
    Ok(out)
}

/// `p = 0`, or a prime dividing no `|G(e)|` for `e ∈ Λ`.
pub fn characteristic_guard(
    table: &SemigroupTable,
    green: &GreenStructure,
    p: u64,
) -> Result<bool> {
    let _ = table;
    if p == 0 {
        return Ok(true);
    }
    if !is_prime(p) {
        return Err(Error::Input(format!("characteristic {p} is not prime")));
    }
    Ok(green
        .d_classes()
        .iter()
        .all(|d| !(d.group_order as u64).is_multiple_of(p)))
}

fn require_characteristic(green: &GreenStructure, p: u64) -> Result<()> {
    if p == 0 {
        return Ok(());
    }
    match green
        .d_classes()
        .iter()
        .find(|d| (d.group_order as u64).is_multiple_of(p))
    {
        Some(d) => Err(Error::Characteristic {
            p,
            order: d.group_order,
            idempotent: d.lambda.index(),
        }),
        None => Ok(()),
    }
}

/// The permutation of `0..k` a group element induces on the sorted domain
/// of the group identity.
fn as_permutation(table: &SemigroupTable, group: &MaximalSubgroup, a: ElementId) -> Vec<u8> {
    let points = table.element(group.base()).domain_points();
    let position: HashMap<u32, u8> = points
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u8))
        .collect();
    let perm = table.element(a);
    points
        .iter()
        .map(|&p| {
            position[&perm
                .apply(crate::Point(p))
                .expect("group element fixes the domain")
                .0]
        })
        .collect()
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Built-in irreducibles of a maximal subgroup, or `Unsupported`.
pub fn builtin_irreps<F: Field>(
    field: &F,
    table: &SemigroupTable,
    group: &MaximalSubgroup,
) -> Result<Vec<Rep<F::Elem>>> {
    let order = group.order();
    let base = group.base();
    if order == 1 {
        let images = BTreeMap::from([(base, Matrix::identity(field, 1))]);
        return Ok(vec![Rep {
            base,
            degree: 1,
            images,
        }]);
    }

    let k = table.rank(base);
    if (2..=MAX_SYMMETRIC_DEGREE).contains(&k) && order == factorial(k) {
        let irreps = symmetric_group_irreps(field, k)?;
        let perms: Vec<(ElementId, Vec<u8>)> = group
            .members()
            .iter()
            .map(|&a| (a, as_permutation(table, group, a)))
            .collect();
        return Ok(irreps
            .iter()
            .map(|irrep| {
                let all = irrep.all_images(field);
                Rep {
                    base,
                    degree: irrep.degree,
                    images: perms.iter().map(|(a, p)| (*a, all[p].clone())).collect(),
                }
            })
            .collect());
    }

    if let Some(&generator) = group
        .members()
        .iter()
        .find(|&&a| group.element_order(a) == order)
    {
        let zeta = field.root_of_unity(order).ok_or_else(|| {
            Error::Unsupported(format!(
                "G({base}) is cyclic of order {order} but the field has no primitive {order}-th root of unity"
            ))
        })?;
        let mut reps = Vec::new();
        let mut character_root = field.one();
        for _ in 0..order {
            let mut images = BTreeMap::new();
            let mut power = base;
            let mut value = field.one();
            for _ in 0..order {
                images.insert(
                    power,
                    Matrix::from_rows(vec![vec![value.clone()]]).expect("1×1"),
                );
                power = group.product(power, generator);
                value = field.mul(&value, &character_root);
            }
            reps.push(Rep {
                base,
                degree: 1,
                images,
            });
            character_root = field.mul(&character_root, &zeta);
        }
        return Ok(reps);
    }

    Err(Error::Unsupported(format!(
        "no built-in irreducibles for G({base}) of order {order}; supply representations"
    )))
}

/// Supplied representations: per Λ member id, a list of
/// `{ "degree": d, "images": { "<element id>": [[entry, …], …] } }`.
pub type SuppliedReps = BTreeMap<u32, Vec<SuppliedRep>>;

#[derive(Clone, Debug, Deserialize)]
pub struct SuppliedRep {
    pub degree: usize,
    pub images: BTreeMap<u32, Vec<Vec<Value>>>,
}

pub fn parse_supplied(text: &str) -> Result<SuppliedReps> {
    let raw: BTreeMap<String, Vec<SuppliedRep>> = serde_json::from_str(text)
        .map_err(|e| Error::Input(format!("representations file: {e}")))?;
    raw.into_iter()
        .map(|(k, v)| {
            let id = k
                .parse::<u32>()
                .map_err(|_| Error::Input(format!("Λ member key `{k}` is not an element id")))?;
            Ok((id, v))
        })
        .collect()
}

fn convert_supplied<F: Field>(
    field: &F,
    base: ElementId,
    rep: &SuppliedRep,
) -> Result<Rep<F::Elem>> {
    let mut images = BTreeMap::new();
    for (&id, rows) in &rep.images {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|v| field.parse(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_rows(parsed)
            .ok_or_else(|| Error::Validation(format!("image of #{id} is ragged")))?;
        images.insert(ElementId(id), m);
    }
    Ok(Rep {
        base,
        degree: rep.degree,
        images,
    })
}

/// Checks that `reps` is a complete irredundant list of irreducibles of
/// `group`: each multiplicative, each with commutant dimension 1, pairwise
/// intertwiner dimension 0, and `Σ deg² = |G|`.
pub fn validate_irrep_list<F: Field>(
    field: &F,
    group: &MaximalSubgroup,
    reps: &[Rep<F::Elem>],
) -> Result<()> {
    let base = group.base();
    for (i, r) in reps.iter().enumerate() {
        r.validate(field, group)
            .map_err(|e| Error::Validation(format!("G({base}) rep {i}: {e}")))?;
        let c = commutant_dimension(field, &r.family(group));
        if c != 1 {
            return Err(Error::Validation(format!(
                "G({base}) rep {i}: commutant dimension {c}, not irreducible"
            )));
        }
    }
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let d = intertwiner_dimension(field, &reps[i].family(group), &reps[j].family(group));
            if d != 0 {
                return Err(Error::Validation(format!(
                    "G({base}) reps {i} and {j} are equivalent (intertwiner dimension {d})"
                )));
            }
        }
    }
    let sum: usize = reps.iter().map(|r| r.degree * r.degree).sum();
    if sum != group.order() {
        return Err(Error::Validation(format!(
            "G({base}): Σ deg² = {sum} but |G| = {}; list is incomplete",
            group.order()
        )));
    }
    Ok(())
}

/// The lifts of every irreducible of every `G(e)`, `e ∈ Λ`, with their
/// certificates.
#[derive(Clone, Debug)]
pub struct IrrepSet<E> {
    pub lifts: Vec<LiftedRep<E>>,
    /// `true` for lifts of built-in representations.
    pub builtin: Vec<bool>,
    pub commutant_dimensions: Vec<usize>,
    /// Pairwise intertwiner dimensions, symmetric.
    pub intertwiner_dimensions: Vec<Vec<usize>>,
    /// First lift failing multiplicativity, as `(lift index, a, g)`.
    pub multiplicativity_failure: Option<(usize, ElementId, ElementId)>,
}

impl<E> IrrepSet<E> {
    pub fn degrees(&self) -> Vec<usize> {
        self.lifts.iter().map(|l| l.degree).collect()
    }

    pub fn degree_square_sum(&self) -> usize {
        self.lifts.iter().map(|l| l.degree * l.degree).sum()
    }

    pub fn all_irreducible(&self) -> bool {
        self.commutant_dimensions.iter().all(|&d| d == 1)
    }

    pub fn pairwise_inequivalent(&self) -> bool {
        self.intertwiner_dimensions
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &d)| i == j || d == 0))
    }

    /// Lifts that are irreducible, multiplicative and pairwise inequivalent.
    pub fn certified_count(&self) -> usize {
        if self.multiplicativity_failure.is_some() || !self.pairwise_inequivalent() {
            return 0;
        }
        self.commutant_dimensions
            .iter()
            .filter(|&&d| d == 1)
            .count()
    }
}

pub fn all_irreps<F: Field>(
    field: &F,
    decomposition: &Decomposition<'_>,
    green: &GreenStructure,
    supplied: Option<&SuppliedReps>,
) -> Result<IrrepSet<F::Elem>> {
    let table = decomposition.table();
    require_characteristic(green, field.characteristic())?;

    let mut lifts = Vec::new();
    let mut builtin = Vec::new();
    for block in decomposition.blocks() {
        let group = &block.group;
        let (reps, is_builtin) = match supplied.and_then(|s| s.get(&block.lambda.0)) {
            Some(list) => {
                let reps = list
                    .iter()
                    .map(|r| convert_supplied(field, block.lambda, r))
                    .collect::<Result<Vec<_>>>()?;
                validate_irrep_list(field, group, &reps)?;
                (reps, false)
            }
            None => (builtin_irreps(field, table, group)?, true),
        };
        for rho in &reps {
            lifts.push(lift(field, decomposition, rho)?);
            builtin.push(is_builtin);
        }
    }

    if let Some(extra) = supplied.and_then(|s| {
        s.keys()
            .find(|&&k| green.lambda_index(ElementId(k)).is_none())
    }) {
        return Err(Error::Validation(format!(
            "supplied representations for #{extra}, which is not in Λ"
        )));
    }

    let families: Vec<Vec<Matrix<F::Elem>>> =
        lifts.iter().map(|l| l.generator_family(table)).collect();
    let commutant_dimensions = families
        .iter()
        .map(|f| commutant_dimension(field, f))
        .collect();
    let n = lifts.len();
    let mut intertwiner_dimensions = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let d = intertwiner_dimension(field, &families[i], &families[j]);
            intertwiner_dimensions[i][j] = d;
            intertwiner_dimensions[j][i] = d;
        }
    }
    let multiplicativity_failure = lifts.iter().enumerate().find_map(|(i, l)| {
        l.multiplicativity_failure(field, table)
            .map(|(a, g)| (i, a, g))
    });
    Ok(IrrepSet {
        lifts,
        builtin,
        commutant_dimensions,
        intertwiner_dimensions,
        multiplicativity_failure,
    })
}
