//! S-conjugacy, ∼_G conjugacy and the data tying S-conjugacy classes to
//! group conjugacy classes of maximal subgroups.
//!
//! Two independent routes compute S-conjugacy:
//!
//! * [`s_conjugacy_bruteforce`] closes the primary relation `xy ∼_p yx`
//!   transitively over all of `S × S`;
//! * [`s_conjugacy_structural`] labels each `a` by its subrank `e ∈ Λ` and
//!   the group conjugacy class of `t·(a e_a)·t⁻¹` in `G(e)`.
//!
//! The two partitions must agree; [`ConjugacyAnalysis::invariants`] checks
//! that along with the other structural properties of S-conjugacy.

use std::collections::{BTreeMap, HashMap, HashSet};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partial_perm::PartialPerm;
use crate::semigroup::{normalize_labels, ElementId, GreenStructure, LambdaRule, SemigroupTable};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    BruteForce,
    Structural,
    GConjugacy,
}

/// Induced idempotent, invertible part and subrank of one element.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedData {
    pub element: ElementId,
    /// `e_a`.
    pub induced_idempotent: ElementId,
    /// `a·e_a`.
    pub invertible_part: ElementId,
    /// The Λ member whose D-class contains `a·e_a`.
    pub subrank: ElementId,
    /// Index of that D-class in [`GreenStructure::d_classes`].
    pub d_class: usize,
}

pub fn induced_idempotent(table: &SemigroupTable, a: ElementId) -> ElementId {
    table.induced_idempotent(a)
}

pub fn invertible_part(table: &SemigroupTable, a: ElementId) -> ElementId {
    table.product(a, table.induced_idempotent(a))
}

pub fn subrank(table: &SemigroupTable, green: &GreenStructure, a: ElementId) -> ElementId {
    green.d_classes()[green.d_class_of(invertible_part(table, a))].lambda
}

pub fn induced_data(table: &SemigroupTable, green: &GreenStructure, a: ElementId) -> InducedData {
    let e_a = table.induced_idempotent(a);
    let part = table.product(a, e_a);
    let d_class = green.d_class_of(part);
    InducedData {
        element: a,
        induced_idempotent: e_a,
        invertible_part: part,
        subrank: green.d_classes()[d_class].lambda,
        d_class,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyClass {
    /// Members in ascending id order; the first is the class representative.
    pub members: Vec<ElementId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subrank: Option<ElementId>,
    /// Smallest member of the group conjugacy class in `G(subrank)` that
    /// the class meets.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_class_witness: Option<ElementId>,
}

impl ConjugacyClass {
    pub fn representative(&self) -> ElementId {
        self.members[0]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyPartition {
    pub method: Method,
    pub classes: Vec<ConjugacyClass>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

impl ConjugacyPartition {
    fn from_labels(method: Method, labels: &[usize]) -> Self {
        let class_of = normalize_labels(labels);
        let count = class_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes: Vec<ConjugacyClass> = (0..count)
            .map(|_| ConjugacyClass {
                members: Vec::new(),
                subrank: None,
                group_class_witness: None,
            })
            .collect();
        for (i, &c) in class_of.iter().enumerate() {
            classes[c].members.push(ElementId(i as u32));
        }
        Self {
            method,
            classes,
            class_of,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, a: ElementId) -> usize {
        self.class_of[a.index()]
    }

    pub fn class_of(&self, a: ElementId) -> &ConjugacyClass {
        &self.classes[self.class_of[a.index()]]
    }

    pub fn same_class(&self, a: ElementId, b: ElementId) -> bool {
        self.class_of[a.index()] == self.class_of[b.index()]
    }

    /// Labels numbered by smallest member, so equal partitions have equal
    /// label vectors.
    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn same_partition(&self, other: &Self) -> bool {
        self.class_of == other.class_of
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Self) -> bool {
        self.classes.iter().all(|c| {
            let target = coarser.class_index(c.members[0]);
            c.members.iter().all(|&m| coarser.class_index(m) == target)
        })
    }

    /// Fills in the subrank of every class from its representative.
    pub fn with_subranks(mut self, table: &SemigroupTable, green: &GreenStructure) -> Self {
        for c in &mut self.classes {
            c.subrank = Some(subrank(table, green, c.members[0]));
        }
        self
    }
}

/// The primary relation `a ∼_p b` as a dense bit matrix.
pub struct PrimaryConjugacy {
    n: usize,
    bits: Vec<u64>,
}

impl PrimaryConjugacy {
    pub fn new(table: &SemigroupTable) -> Self {
        let n = table.len();
        let mut bits = vec![0u64; (n * n).div_ceil(64)];
        for x in table.ids() {
            for y in table.ids() {
                let (a, b) = (table.product(x, y), table.product(y, x));
                let k = a.index() * n + b.index();
                bits[k / 64] |= 1 << (k % 64);
            }
        }
        Self { n, bits }
    }

    pub fn related(&self, a: ElementId, b: ElementId) -> bool {
        let k = a.index() * self.n + b.index();
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }
}

/// Transitive closure of `xy ∼_p yx` over every ordered pair.
pub fn s_conjugacy_bruteforce(table: &SemigroupTable) -> ConjugacyPartition {
    let n = table.len();
    let mut uf = UnionFind::<usize>::new(n);
    for x in table.ids() {
        for y in table.ids() {
            uf.union(table.product(x, y).index(), table.product(y, x).index());
        }
    }
    let labels: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
    ConjugacyPartition::from_labels(Method::BruteForce, &labels)
}

/// Group conjugacy classes of every Λ member's maximal subgroup, with a
/// lookup from group element to class index.
struct GroupClasses {
    /// Per Λ position, the classes of `G(e)`.
    classes: Vec<Vec<Vec<ElementId>>>,
    class_of: HashMap<ElementId, usize>,
}

impl GroupClasses {
    fn new(table: &SemigroupTable, green: &GreenStructure) -> Self {
        let mut classes = Vec::new();
        let mut class_of = HashMap::new();
        for d in green.d_classes() {
            let group = green
                .maximal_subgroup(table, d.lambda)
                .expect("Λ members are idempotent");
            let cc = group.conjugacy_classes();
            for (k, c) in cc.iter().enumerate() {
                for &m in c {
                    class_of.insert(m, k);
                }
            }
            classes.push(cc);
        }
        Self { classes, class_of }
    }
}

/// `σ_t(a·e_a)` for the minimal connecting element `t` from `e_a` to the
/// subrank.
pub fn transported_invertible_part(
    table: &SemigroupTable,
    green: &GreenStructure,
    a: ElementId,
) -> ElementId {
    let data = induced_data(table, green, a);
    let t = green
        .connecting_element(table, data.induced_idempotent, data.subrank)
        .expect("e_a lies in the D-class of its subrank");
    table
        .sigma_t(t, data.invertible_part)
        .expect("invertible part lies in G(e_a)")
}

/// Labels each element by (subrank, group class of the transported
/// invertible part).
pub fn s_conjugacy_structural(
    table: &SemigroupTable,
    green: &GreenStructure,
) -> ConjugacyPartition {
    let groups = GroupClasses::new(table, green);
    let mut keys: HashMap<(usize, usize), usize> = HashMap::new();
    let mut witness_of: Vec<(ElementId, ElementId)> = Vec::new();
    let labels: Vec<usize> = table
        .ids()
        .map(|a| {
            let d = green.d_class_of(invertible_part(table, a));
            let image = transported_invertible_part(table, green, a);
            let k = groups.class_of[&image];
            let next = keys.len();
            *keys.entry((d, k)).or_insert_with(|| {
                witness_of.push((green.d_classes()[d].lambda, groups.classes[d][k][0]));
                next
            })
        })
        .collect();
    let mut partition = ConjugacyPartition::from_labels(Method::Structural, &labels);
    // from_labels renumbers by smallest member, which is also first-seen
    // order, so witness_of lines up with the classes.
    for (c, (e, w)) in partition.classes.iter_mut().zip(witness_of) {
        c.subrank = Some(e);
        c.group_class_witness = Some(w);
    }
    partition
}

/// Units of the table: elements whose domain and range are the identity.
pub fn unit_group(table: &SemigroupTable) -> Result<Vec<ElementId>> {
    let one = table
        .identity()
        .ok_or_else(|| Error::Input("∼_G conjugacy needs a monoid with identity".into()))?;
    let one_perm = table.element(one);
    Ok(table
        .ids()
        .filter(|&a| {
            let p = table.element(a);
            &p.domain_of() == one_perm && &p.range_of() == one_perm
        })
        .collect())
}

/// Orbits of `S` under conjugation `a ↦ gag⁻¹` by the unit group.
pub fn g_conjugacy(table: &SemigroupTable) -> Result<ConjugacyPartition> {
    let units = unit_group(table)?;
    let n = table.len();
    let mut uf = UnionFind::<usize>::new(n);
    for &g in &units {
        let g_inv = table
            .try_inverse(g)
            .or_else(|| {
                let inv = table.element(g).inverse();
                table.id_of(&inv)
            })
            .ok_or_else(|| Error::Input(format!("unit {g} has no inverse in S")))?;
        for a in table.ids() {
            uf.union(a.index(), table.product3(g, a, g_inv).index());
        }
    }
    let labels: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
    Ok(ConjugacyPartition::from_labels(Method::GConjugacy, &labels))
}

/// Mutually inverse `u, v = u⁻¹` with `a e_a = u (b e_b) v` and
/// `b e_b = v (a e_a) u`, smallest `u` first.
pub fn mutually_inverse_witness(
    table: &SemigroupTable,
    a: ElementId,
    b: ElementId,
) -> Option<(ElementId, ElementId)> {
    let x = invertible_part(table, a);
    let y = invertible_part(table, b);
    table.ids().find_map(|u| {
        let v = table.inverse(u);
        (table.product3(u, y, v) == x && table.product3(v, x, u) == y).then_some((u, v))
    })
}

/// Result of reproducing the rook-monoid computation `t((31)[2])t⁻¹ = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    /// The class of `(32)[1]` as 0-based literals.
    pub class_of_a: Vec<PartialPerm>,
    pub class_matches: bool,
    pub conjugate: PartialPerm,
    pub conjugate_is_zero: bool,
    pub zero_outside_class: bool,
    /// `t·(32)[1]·t⁻¹`, expected to be `(12)[3]`.
    pub control_conjugate: PartialPerm,
    pub control_in_class: bool,
    pub passed: bool,
}

/// The element `(ij)[k]` of `R_3` in 1-based labels: `i ↔ j` with the
/// remaining point `k` undefined.
pub fn swap_literal(i: u32, j: u32) -> PartialPerm {
    let mut images = vec![None; 3];
    images[(i - 1) as usize] = Some(j - 1);
    images[(j - 1) as usize] = Some(i - 1);
    PartialPerm::new(images).expect("swap of two points")
}

/// Checks, inside the rook monoid `R_3`, that conjugating a member of
/// `[(32)[1]]` by `t: 2→1, 3→2` can leave the class.
pub fn counterexample_check(table: &SemigroupTable) -> Result<CounterexampleReport> {
    if table.degree() != 3 || table.len() != 34 {
        return Err(Error::Input("the counterexample check runs on R_3".into()));
    }
    let id = |p: &PartialPerm| {
        table
            .id_of(p)
            .ok_or_else(|| Error::Input(format!("{p} is not in the table")))
    };
    let a = id(&swap_literal(3, 2))?;
    let member = id(&swap_literal(3, 1))?;
    let t = id(&PartialPerm::new(vec![None, Some(0), Some(1)])?)?;
    let zero = id(&PartialPerm::empty(3))?;

    let brute = s_conjugacy_bruteforce(table);
    let class = brute.class_of(a);
    let mut class_of_a: Vec<PartialPerm> = class
        .members
        .iter()
        .map(|&m| table.element(m).clone())
        .collect();
    class_of_a.sort();
    let mut expected = vec![swap_literal(1, 2), swap_literal(3, 2), swap_literal(3, 1)];
    expected.sort();

    let t_inv = table.inverse(t);
    let conjugate = table.product3(t, member, t_inv);
    let control = table.product3(t, a, t_inv);

    let class_matches = class_of_a == expected;
    let conjugate_is_zero = conjugate == zero;
    let zero_outside_class = !brute.same_class(zero, a);
    let control_in_class = brute.same_class(control, a);
    Ok(CounterexampleReport {
        class_of_a,
        class_matches,
        conjugate: table.element(conjugate).clone(),
        conjugate_is_zero,
        zero_outside_class,
        control_conjugate: table.element(control).clone(),
        control_in_class,
        passed: class_matches && conjugate_is_zero && zero_outside_class && control_in_class,
    })
}

/// Outcome of one executable property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl InvariantCheck {
    pub fn new(name: &str, failure: Option<String>, ok_detail: impl Into<String>) -> Self {
        match failure {
            None => Self {
                name: name.to_string(),
                passed: true,
                detail: ok_detail.into(),
            },
            Some(d) => Self {
                name: name.to_string(),
                passed: false,
                detail: d,
            },
        }
    }
}

/// Everything the conjugacy layer computes for one table.
pub struct ConjugacyAnalysis<'a> {
    pub table: &'a SemigroupTable,
    pub green: &'a GreenStructure,
    pub induced: Vec<InducedData>,
    pub bruteforce: ConjugacyPartition,
    pub structural: ConjugacyPartition,
    /// `None` when the table has no identity.
    pub g_conjugacy: Option<ConjugacyPartition>,
    /// Number of group conjugacy classes of `G(e)` per Λ member.
    pub group_class_counts: Vec<usize>,
}

impl<'a> ConjugacyAnalysis<'a> {
    pub fn new(table: &'a SemigroupTable, green: &'a GreenStructure) -> Self {
        let induced = table.ids().map(|a| induced_data(table, green, a)).collect();
        let bruteforce = s_conjugacy_bruteforce(table).with_subranks(table, green);
        let structural = s_conjugacy_structural(table, green);
        let g_conjugacy = g_conjugacy(table).ok();
        let group_class_counts = green
            .d_classes()
            .iter()
            .map(|d| {
                green
                    .maximal_subgroup(table, d.lambda)
                    .expect("Λ members are idempotent")
                    .conjugacy_classes()
                    .len()
            })
            .collect();
        Self {
            table,
            green,
            induced,
            bruteforce,
            structural,
            g_conjugacy,
            group_class_counts,
        }
    }

    fn is_group_element(&self, a: ElementId) -> bool {
        self.table.domain_of(a) == self.table.range_of(a)
    }

    /// Runs every conjugacy property and reports each one.
    pub fn invariants(&self) -> Vec<InvariantCheck> {
        let t = self.table;
        let primary = PrimaryConjugacy::new(t);
        let group_elements: Vec<ElementId> =
            t.ids().filter(|&a| self.is_group_element(a)).collect();
        let mut out = Vec::new();

        // (a) a·e_a = e_a·a and a·e_a H e_a.
        let failure = self.induced.iter().find_map(|d| {
            let a = d.element;
            let e = d.induced_idempotent;
            let ok = t.product(a, e) == t.product(e, a)
                && self.green.h_related(t, d.invertible_part, e)
                && t.is_idempotent(e);
            (!ok).then(|| format!("fails at {a}"))
        });
        out.push(InvariantCheck::new(
            "invertible_part_commutes_and_h_related",
            failure,
            format!("{} elements", t.len()),
        ));

        // (b) group elements in one class are D-related and primarily conjugate.
        let mut pairs = 0usize;
        let mut failure = None;
        'b: for &a in &group_elements {
            for &b in &group_elements {
                if self.bruteforce.same_class(a, b) {
                    pairs += 1;
                    if self.green.d_class_of(a) != self.green.d_class_of(b)
                        || !primary.related(a, b)
                    {
                        failure = Some(format!("fails for {a}, {b}"));
                        break 'b;
                    }
                }
            }
        }
        out.push(InvariantCheck::new(
            "conjugate_group_elements_are_d_related_and_primary",
            failure,
            format!("{pairs} pairs"),
        ));

        // (c) H-related, primarily conjugate group elements are conjugate in H_{e_a}.
        let mut pairs = 0usize;
        let mut failure = None;
        'c: for &a in &group_elements {
            let group = self
                .green
                .maximal_subgroup(t, t.domain_of(a))
                .expect("domain is idempotent");
            for &b in group.members() {
                if !primary.related(a, b) {
                    continue;
                }
                pairs += 1;
                let found = group
                    .members()
                    .iter()
                    .any(|&h| group.product(group.product(h, b), group.inverse(h)) == a);
                if !found {
                    failure = Some(format!("no h for {a}, {b}"));
                    break 'c;
                }
            }
        }
        out.push(InvariantCheck::new(
            "h_related_primary_pairs_conjugate_in_group",
            failure,
            format!("{pairs} pairs"),
        ));

        // (d) a ∼ a·e_a.
        let failure = self.induced.iter().find_map(|d| {
            (!self.bruteforce.same_class(d.element, d.invertible_part))
                .then(|| format!("{} not conjugate to its invertible part", d.element))
        });
        out.push(InvariantCheck::new(
            "element_conjugate_to_invertible_part",
            failure,
            format!("{} elements", t.len()),
        ));

        // (e) a ∼ b iff mutually inverse u, v link the invertible parts.
        out.push(self.check_mutually_inverse_witnesses(&group_elements));

        // Subrank is constant on classes.
        let failure = self.bruteforce.classes.iter().find_map(|c| {
            let s = subrank(t, self.green, c.members[0]);
            c.members
                .iter()
                .find(|&&m| subrank(t, self.green, m) != s)
                .map(|m| format!("class of {} has mixed subranks at {m}", c.members[0]))
        });
        out.push(InvariantCheck::new(
            "subrank_constant_on_classes",
            failure,
            format!("{} classes", self.bruteforce.len()),
        ));

        // Each class meets exactly one G(e) with e ∈ Λ, namely its subrank, and
        // the intersection is the group class of the transported invertible part.
        let lambda: Vec<ElementId> = self.green.lambda();
        let lambda_groups: Vec<_> = lambda
            .iter()
            .map(|&e| self.green.maximal_subgroup(t, e).expect("idempotent"))
            .collect();
        let groups = GroupClasses::new(t, self.green);
        let mut failure = None;
        for c in &self.bruteforce.classes {
            let met: Vec<usize> = (0..lambda.len())
                .filter(|&k| c.members.iter().any(|&m| lambda_groups[k].contains(m)))
                .collect();
            let s = subrank(t, self.green, c.members[0]);
            if met.len() != 1 || lambda[met[0]] != s {
                failure = Some(format!("class of {} meets Λ groups {met:?}", c.members[0]));
                break;
            }
            let k = met[0];
            let mut inside: Vec<ElementId> = c
                .members
                .iter()
                .copied()
                .filter(|&m| lambda_groups[k].contains(m))
                .collect();
            inside.sort_unstable();
            let image = transported_invertible_part(t, self.green, c.members[0]);
            if inside != groups.classes[k][groups.class_of[&image]] {
                failure = Some(format!(
                    "class of {} meets G({}) outside the group class of {image}",
                    c.members[0], lambda[k]
                ));
                break;
            }
        }
        out.push(InvariantCheck::new(
            "class_meets_unique_lambda_group_in_one_group_class",
            failure,
            format!("{} classes", self.bruteforce.len()),
        ));

        // Group class of σ_t(a·e_a) does not depend on t.
        let mut checked = 0usize;
        let mut failure = None;
        'p: for d in &self.induced {
            let k = d.d_class;
            let mut class = None;
            for &tt in self
                .green
                .connecting_elements(d.induced_idempotent, d.subrank)
            {
                checked += 1;
                let image = t.sigma_t(tt, d.invertible_part).expect("in G(e_a)");
                let c = groups.class_of[&image];
                if *class.get_or_insert(c) != c {
                    failure = Some(format!("{} depends on the connecting element", d.element));
                    break 'p;
                }
                debug_assert!(groups.classes[k].len() > c);
            }
        }
        out.push(InvariantCheck::new(
            "group_class_independent_of_connecting_element",
            failure,
            format!("{checked} connecting elements"),
        ));

        let same = self.structural.same_partition(&self.bruteforce);
        out.push(InvariantCheck::new(
            "structural_equals_bruteforce",
            (!same).then(|| {
                format!(
                    "structural {} classes vs brute force {}",
                    self.structural.len(),
                    self.bruteforce.len()
                )
            }),
            format!("{} classes", self.bruteforce.len()),
        ));

        let sum: usize = self.group_class_counts.iter().sum();
        out.push(InvariantCheck::new(
            "class_count_equals_sum_of_group_class_counts",
            (sum != self.bruteforce.len())
                .then(|| format!("{} classes vs Σ {sum}", self.bruteforce.len())),
            format!("{sum} = {:?}", self.group_class_counts),
        ));

        let alternative = GreenStructure::with_rule(t, LambdaRule::MaxId)
            .map(|g| s_conjugacy_structural(t, &g).len());
        out.push(InvariantCheck::new(
            "class_count_independent_of_lambda",
            match alternative {
                Ok(n) if n == self.bruteforce.len() => None,
                Ok(n) => Some(format!("max-id Λ gives {n} classes")),
                Err(e) => Some(e.to_string()),
            },
            "min-id and max-id Λ agree",
        ));

        if let Some(g) = &self.g_conjugacy {
            out.push(InvariantCheck::new(
                "g_conjugacy_refines_s_conjugacy",
                (!g.refines(&self.bruteforce)).then(|| "a ∼_G class is split".to_string()),
                format!("{} ∼_G classes", g.len()),
            ));
        }
        out
    }

    fn check_mutually_inverse_witnesses(&self, group_elements: &[ElementId]) -> InvariantCheck {
        let t = self.table;
        // For each invertible part x, every y = u⁻¹xu with x = uyu⁻¹.
        let mut witnessed: HashMap<ElementId, HashSet<ElementId>> = HashMap::new();
        for &x in group_elements {
            let set = witnessed.entry(x).or_default();
            for u in t.ids() {
                let v = t.inverse(u);
                let y = t.product3(v, x, u);
                if t.product3(u, y, v) == x {
                    set.insert(y);
                }
            }
        }
        let mut checked = 0usize;
        for &x in group_elements {
            for &y in group_elements {
                checked += 1;
                let linked = witnessed[&x].contains(&y);
                if linked != self.bruteforce.same_class(x, y) {
                    return InvariantCheck::new(
                        "mutually_inverse_witness_iff_conjugate",
                        Some(format!("witness {linked} for {x}, {y}")),
                        "",
                    );
                }
            }
        }
        let failure = self.induced.iter().find_map(|d| {
            (!self.bruteforce.same_class(d.element, d.invertible_part)).then(|| {
                format!(
                    "{} and its invertible part are in different classes",
                    d.element
                )
            })
        });
        InvariantCheck::new(
            "mutually_inverse_witness_iff_conjugate",
            failure,
            format!("{checked} pairs of group elements"),
        )
    }

    /// Class counts per method.
    pub fn counts(&self) -> BTreeMap<&'static str, usize> {
        let mut m = BTreeMap::new();
        m.insert("bruteforce", self.bruteforce.len());
        m.insert("structural", self.structural.len());
        if let Some(g) = &self.g_conjugacy {
            m.insert("g_conjugacy", g.len());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn r3() -> SemigroupTable {
        fixtures::rook(3).table().unwrap()
    }

    fn id(t: &SemigroupTable, images: &[Option<u32>]) -> ElementId {
        t.id_of(&PartialPerm::new(images.to_vec()).unwrap())
            .unwrap()
    }

    #[test]
    fn swap_literals() {
        assert_eq!(
            swap_literal(3, 2),
            PartialPerm::new(vec![None, Some(2), Some(1)]).unwrap()
        );
        assert_eq!(
            swap_literal(1, 2),
            PartialPerm::new(vec![Some(1), Some(0), None]).unwrap()
        );
        assert_eq!(
            swap_literal(3, 1),
            PartialPerm::new(vec![Some(2), None, Some(0)]).unwrap()
        );
    }

    #[test]
    fn induced_idempotent_examples() {
        let t = r3();
        let a = t.id_of(&swap_literal(3, 2)).unwrap();
        let e = induced_idempotent(&t, a);
        assert_eq!(
            t.element(e),
            &PartialPerm::partial_identity(3, &[1, 2]).unwrap()
        );
        assert_eq!(e, t.product(a, a));
        for &f in t.idempotent_ids() {
            assert_eq!(induced_idempotent(&t, f), f);
        }
    }

    #[test]
    fn invertible_part_examples() {
        let t = r3();
        let a = t.id_of(&swap_literal(3, 2)).unwrap();
        assert_eq!(invertible_part(&t, a), a);
        let g = id(&t, &[Some(1), Some(2), Some(0)]);
        assert_eq!(invertible_part(&t, g), g);
        let nil = id(&t, &[None, Some(0), Some(1)]);
        assert_eq!(t.element(invertible_part(&t, nil)), &PartialPerm::empty(3));
    }

    #[test]
    fn subrank_examples() {
        let t = r3();
        let green = GreenStructure::new(&t).unwrap();
        let a = t.id_of(&swap_literal(3, 2)).unwrap();
        assert_eq!(t.rank(subrank(&t, &green, a)), 2);
        let zero = t.id_of(&PartialPerm::empty(3)).unwrap();
        assert_eq!(subrank(&t, &green, zero), zero);
        let cycle = id(&t, &[Some(1), Some(2), Some(0)]);
        assert_eq!(subrank(&t, &green, cycle), t.identity().unwrap());
    }

    #[test]
    fn rook_three_partitions() {
        let t = r3();
        let green = GreenStructure::new(&t).unwrap();
        let brute = s_conjugacy_bruteforce(&t);
        assert_eq!(brute.len(), 7);
        let structural = s_conjugacy_structural(&t, &green);
        assert!(structural.same_partition(&brute));
        assert_eq!(g_conjugacy(&t).unwrap().len(), 10);

        let a = t.id_of(&swap_literal(3, 2)).unwrap();
        let mut members: Vec<_> = brute
            .class_of(a)
            .members
            .iter()
            .map(|&m| t.element(m).clone())
            .collect();
        members.sort();
        let mut expected = vec![swap_literal(1, 2), swap_literal(3, 2), swap_literal(3, 1)];
        expected.sort();
        assert_eq!(members, expected);
    }

    #[test]
    fn rook_one_and_two() {
        let r1 = fixtures::rook(1).table().unwrap();
        assert_eq!(s_conjugacy_bruteforce(&r1).len(), 2);
        let r2 = fixtures::rook(2).table().unwrap();
        let green = GreenStructure::new(&r2).unwrap();
        assert_eq!(s_conjugacy_structural(&r2, &green).len(), 4);
        assert_eq!(s_conjugacy_bruteforce(&r2).len(), 4);
        // Burnside over S_2: (7 elements + 3 fixed by the swap) / 2.
        assert_eq!(g_conjugacy(&r2).unwrap().len(), 5);
    }

    #[test]
    fn groups_reduce_to_ordinary_conjugacy() {
        for n in 2..=4 {
            let t = fixtures::symmetric(n).table().unwrap();
            let green = GreenStructure::new(&t).unwrap();
            let one = t.identity().unwrap();
            let ordinary = green
                .maximal_subgroup(&t, one)
                .unwrap()
                .conjugacy_classes()
                .len();
            assert_eq!(s_conjugacy_structural(&t, &green).len(), ordinary);
            assert_eq!(s_conjugacy_bruteforce(&t).len(), ordinary);
            assert_eq!(g_conjugacy(&t).unwrap().len(), ordinary);
        }
    }

    #[test]
    fn g_conjugacy_needs_identity() {
        let t = fixtures::chain(3).table().unwrap();
        assert!(t.identity().is_none());
        assert!(matches!(g_conjugacy(&t), Err(Error::Input(_))));
    }

    #[test]
    fn witness_examples() {
        let t = r3();
        let a = t.id_of(&swap_literal(3, 2)).unwrap();
        let b = t.id_of(&swap_literal(1, 2)).unwrap();
        let (u, v) = mutually_inverse_witness(&t, a, b).unwrap();
        assert_eq!(t.inverse(u), v);
        let e = t
            .id_of(&PartialPerm::partial_identity(3, &[0]).unwrap())
            .unwrap();
        assert!(mutually_inverse_witness(&t, e, e).is_some());
        let c = t.id_of(&swap_literal(3, 1)).unwrap();
        let zero = t.id_of(&PartialPerm::empty(3)).unwrap();
        assert!(mutually_inverse_witness(&t, c, zero).is_none());
    }

    #[test]
    fn witness_agrees_with_bruteforce_on_all_pairs() {
        let t = r3();
        let brute = s_conjugacy_bruteforce(&t);
        for a in t.ids() {
            for b in t.ids() {
                assert_eq!(
                    mutually_inverse_witness(&t, a, b).is_some(),
                    brute.same_class(a, b),
                    "{a} {b}"
                );
            }
        }
    }

    #[test]
    fn counterexample_reproduces() {
        let t = r3();
        let report = counterexample_check(&t).unwrap();
        assert!(report.conjugate_is_zero);
        assert!(report.zero_outside_class);
        assert!(report.control_in_class);
        assert_eq!(report.control_conjugate, swap_literal(1, 2));
        assert!(report.passed);
        // Conjugating an idempotent by t with dom(t) ⊇ dom(e) stays idempotent.
        let tt = id(&t, &[None, Some(0), Some(1)]);
        let e = t
            .id_of(&PartialPerm::partial_identity(3, &[2]).unwrap())
            .unwrap();
        assert!(t.is_idempotent(t.product3(tt, e, t.inverse(tt))));

        let r2 = fixtures::rook(2).table().unwrap();
        assert!(counterexample_check(&r2).is_err());
    }

    #[test]
    fn all_invariants_hold_on_small_fixtures() {
        for fx in [
            fixtures::rook(2),
            fixtures::rook(3),
            fixtures::chain(3),
            fixtures::symmetric(3),
        ] {
            let t = fx.table().unwrap();
            let green = GreenStructure::new(&t).unwrap();
            let analysis = ConjugacyAnalysis::new(&t, &green);
            for check in analysis.invariants() {
                assert!(
                    check.passed,
                    "{:?} {}: {}",
                    fx.name, check.name, check.detail
                );
            }
        }
    }
}
