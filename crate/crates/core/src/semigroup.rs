//! Enumeration of inverse semigroups of partial permutations and their
//! Green structure.
//!
//! A [`SemigroupTable`] is built once from generators and never mutated
//! afterwards. Elements are numbered in breadth-first discovery order, and
//! every deterministic choice made downstream (the Λ transversal, connecting
//! elements, idempotent labels inside a D-class) is a minimum over those
//! numbers.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partial_perm::PartialPerm;

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Position of an element in the enumeration order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct GenerateOptions {
    pub cap: usize,
    /// Add the inverse of every generator before closing. Turning this off
    /// yields the plain subsemigroup, which need not be inverse.
    pub close_under_inverse: bool,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_ELEMENT_CAP,
            close_under_inverse: true,
        }
    }
}

/// A finite semigroup of partial permutations with its full Cayley table.
pub struct SemigroupTable {
    degree: usize,
    elements: Vec<PartialPerm>,
    index: HashMap<PartialPerm, ElementId>,
    generator_ids: Vec<ElementId>,
    products: Vec<u32>,
    inverse_of: Vec<Option<ElementId>>,
    domain_of: Vec<Option<ElementId>>,
    range_of: Vec<Option<ElementId>>,
    idempotent_ids: Vec<ElementId>,
    identity: Option<ElementId>,
}

impl fmt::Debug for SemigroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemigroupTable")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("generators", &self.generator_ids)
            .finish()
    }
}

impl SemigroupTable {
    /// Closure of `generators` (and, by default, their inverses) under
    /// composition.
    pub fn generate(degree: usize, generators: &[PartialPerm]) -> Result<Self> {
        Self::generate_with(degree, generators, &GenerateOptions::default())
    }

    pub fn generate_with(
        degree: usize,
        generators: &[PartialPerm],
        options: &GenerateOptions,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Input("at least one generator is required".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }

        let mut seeds: Vec<PartialPerm> = generators.to_vec();
        if options.close_under_inverse {
            seeds.extend(generators.iter().map(PartialPerm::inverse));
        }

        let mut elements: Vec<PartialPerm> = Vec::new();
        let mut index: HashMap<PartialPerm, ElementId> = HashMap::new();
        let mut generator_ids = Vec::new();

        let insert = |p: PartialPerm,
                      elements: &mut Vec<PartialPerm>,
                      index: &mut HashMap<PartialPerm, ElementId>|
         -> Result<(ElementId, bool)> {
            if let Some(&id) = index.get(&p) {
                return Ok((id, false));
            }
            if elements.len() >= options.cap {
                return Err(Error::CapExceeded { cap: options.cap });
            }
            let id = ElementId(elements.len() as u32);
            index.insert(p.clone(), id);
            elements.push(p);
            Ok((id, true))
        };

        for s in &seeds {
            let (id, _) = insert(s.clone(), &mut elements, &mut index)?;
            if !generator_ids.contains(&id) {
                generator_ids.push(id);
            }
        }
        let seed_perms: Vec<PartialPerm> = generator_ids
            .iter()
            .map(|g| elements[g.index()].clone())
            .collect();

        let mut queue: VecDeque<usize> = (0..elements.len()).collect();
        while let Some(i) = queue.pop_front() {
            for g in &seed_perms {
                let product = elements[i].compose_unchecked(g);
                let (id, fresh) = insert(product, &mut elements, &mut index)?;
                if fresh {
                    queue.push_back(id.index());
                }
            }
        }

        let n = elements.len();
        let products: Vec<u32> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let row_elem = &elements[i];
                let index = &index;
                elements
                    .iter()
                    .map(move |col| index[&row_elem.compose_unchecked(col)].0)
            })
            .collect();

        let lookup = |p: &PartialPerm| index.get(p).copied();
        let inverse_of: Vec<_> = elements.iter().map(|a| lookup(&a.inverse())).collect();
        let domain_of: Vec<_> = elements.iter().map(|a| lookup(&a.domain_of())).collect();
        let range_of: Vec<_> = elements.iter().map(|a| lookup(&a.range_of())).collect();
        let idempotent_ids: Vec<ElementId> = (0..n)
            .filter(|&i| products[i * n + i] as usize == i)
            .map(|i| ElementId(i as u32))
            .collect();
        let identity = idempotent_ids.iter().copied().find(|e| {
            let row = &products[e.index() * n..(e.index() + 1) * n];
            row.iter().enumerate().all(|(j, &p)| p as usize == j)
                && (0..n).all(|j| products[j * n + e.index()] as usize == j)
        });

        Ok(Self {
            degree,
            elements,
            index,
            generator_ids,
            products,
            inverse_of,
            domain_of,
            range_of,
            idempotent_ids,
            identity,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of elements, `|S|`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.elements.len() as u32).map(ElementId)
    }

    pub fn element(&self, id: ElementId) -> &PartialPerm {
        &self.elements[id.index()]
    }

    pub fn elements(&self) -> &[PartialPerm] {
        &self.elements
    }

    pub fn id_of(&self, p: &PartialPerm) -> Option<ElementId> {
        self.index.get(p).copied()
    }

    /// Ids of the seeds used in the closure: the generators followed by
    /// their inverses, duplicates removed. They generate the table.
    pub fn generator_ids(&self) -> &[ElementId] {
        &self.generator_ids
    }

    #[inline]
    pub fn product(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.products[a.index() * self.len() + b.index()])
    }

    pub fn product3(&self, a: ElementId, b: ElementId, c: ElementId) -> ElementId {
        self.product(self.product(a, b), c)
    }

    /// Inverse within the table, `None` when the partial inverse is absent.
    pub fn try_inverse(&self, a: ElementId) -> Option<ElementId> {
        self.inverse_of[a.index()]
    }

    /// Inverse of `a`. Panics on tables that are not inverse-closed.
    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.inverse_of[a.index()].expect("table is not closed under inverse")
    }

    /// Id of `a⁻¹a`. Panics on tables that are not inverse-closed.
    pub fn domain_of(&self, a: ElementId) -> ElementId {
        self.domain_of[a.index()].expect("table is not closed under inverse")
    }

    /// Id of `aa⁻¹`. Panics on tables that are not inverse-closed.
    pub fn range_of(&self, a: ElementId) -> ElementId {
        self.range_of[a.index()].expect("table is not closed under inverse")
    }

    pub fn is_idempotent(&self, a: ElementId) -> bool {
        self.product(a, a) == a
    }

    pub fn idempotent_ids(&self) -> &[ElementId] {
        &self.idempotent_ids
    }

    pub fn identity(&self) -> Option<ElementId> {
        self.identity
    }

    pub fn rank(&self, a: ElementId) -> usize {
        self.element(a).rank()
    }

    /// Definitional inverse check: every element must have exactly one `x`
    /// with `axa = a` and `xax = x`.
    pub fn check_inverse(&self) -> InverseDiagnosis {
        for a in self.ids() {
            let mut found: Option<ElementId> = None;
            for x in self.ids() {
                if self.product3(a, x, a) == a && self.product3(x, a, x) == x {
                    if let Some(first) = found {
                        return InverseDiagnosis::MultipleInverses {
                            element: a,
                            first,
                            second: x,
                        };
                    }
                    found = Some(x);
                }
            }
            if found.is_none() {
                return InverseDiagnosis::MissingInverse { element: a };
            }
        }
        InverseDiagnosis::Inverse
    }

    pub fn require_inverse(&self) -> Result<()> {
        match self.check_inverse() {
            InverseDiagnosis::Inverse => Ok(()),
            d => Err(Error::NotInverse(d.describe(self))),
        }
    }

    /// Elements `b ≤ a` in the natural order of the table, ascending by id.
    ///
    /// In an inverse semigroup these are exactly the products `a·f` with `f`
    /// idempotent.
    pub fn down_set(&self, a: ElementId) -> Vec<ElementId> {
        let mut below: Vec<ElementId> = self
            .idempotent_ids
            .iter()
            .map(|&f| self.product(a, f))
            .collect();
        below.sort_unstable();
        below.dedup();
        below
    }

    pub fn natural_leq(&self, b: ElementId, a: ElementId) -> bool {
        self.element(b)
            .natural_leq(self.element(a))
            .expect("table elements share a degree")
    }

    /// `μ(b, a)` for every `b ≤ a`, from the recursion
    /// `μ(a, a) = 1`, `μ(b, a) = −Σ_{b < c ≤ a} μ(c, a)`.
    pub fn mobius_column(&self, a: ElementId) -> Vec<(ElementId, i64)> {
        let mut below = self.down_set(a);
        // Larger elements first so every strict upper bound is already known.
        below.sort_by_key(|&b| (std::cmp::Reverse(self.rank(b)), b));
        let mut values: Vec<(ElementId, i64)> = Vec::with_capacity(below.len());
        for &b in &below {
            let mu = if b == a {
                1
            } else {
                -values
                    .iter()
                    .filter(|&&(c, _)| c != b && self.natural_leq(b, c))
                    .map(|&(_, m)| m)
                    .sum::<i64>()
            };
            values.push((b, mu));
        }
        values.sort_unstable();
        values
    }

    /// Möbius function of the natural partial order.
    pub fn mobius(&self, b: ElementId, a: ElementId) -> Result<i64> {
        if !self.natural_leq(b, a) {
            return Err(Error::Input(format!(
                "{b} is not below {a} in the natural order"
            )));
        }
        Ok(self
            .mobius_column(a)
            .into_iter()
            .find(|&(c, _)| c == b)
            .map(|(_, m)| m)
            .expect("b lies in the down-set of a"))
    }

    /// `t·a·t⁻¹` for `a ∈ G(f)` with `f = dom(t)`; lands in `G(ran(t))`.
    pub fn sigma_t(&self, t: ElementId, a: ElementId) -> Result<ElementId> {
        let f = self.domain_of(t);
        if self.domain_of(a) != f || self.range_of(a) != f {
            return Err(Error::Input(format!(
                "{a} is not in the maximal subgroup at dom({t}) = {f}"
            )));
        }
        Ok(self.product3(t, a, self.inverse(t)))
    }

    /// First idempotent among `a, a², a³, …`.
    pub fn induced_idempotent(&self, a: ElementId) -> ElementId {
        let mut power = a;
        for _ in 0..=self.len() {
            if self.is_idempotent(power) {
                return power;
            }
            power = self.product(power, a);
        }
        panic!("no idempotent power of {a} within |S| steps");
    }

    /// D-classes computed from principal two-sided ideals: `a D b` iff
    /// `S¹aS¹ = S¹bS¹`, i.e. `a` and `b` are strongly connected in the
    /// two-sided Cayley graph. Returns a class label per element, labels
    /// numbered by smallest member.
    pub fn d_labels_by_ideals(&self) -> Vec<usize> {
        let n = self.len();
        let mut graph: DiGraph<(), ()> =
            DiGraph::with_capacity(n, 2 * n * self.generator_ids.len());
        let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
        for a in self.ids() {
            for &g in &self.generator_ids {
                graph.add_edge(nodes[a.index()], nodes[self.product(a, g).index()], ());
                graph.add_edge(nodes[a.index()], nodes[self.product(g, a).index()], ());
            }
        }
        let mut label = vec![usize::MAX; n];
        for (k, component) in tarjan_scc(&graph).into_iter().enumerate() {
            for node in component {
                label[node.index()] = k;
            }
        }
        normalize_labels(&label)
    }
}

/// Renumbers a labelling so that classes are numbered by their smallest
/// member.
pub fn normalize_labels(label: &[usize]) -> Vec<usize> {
    let mut renumber: HashMap<usize, usize> = HashMap::new();
    label
        .iter()
        .map(|&l| {
            let next = renumber.len();
            *renumber.entry(l).or_insert(next)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InverseDiagnosis {
    Inverse,
    MissingInverse {
        element: ElementId,
    },
    MultipleInverses {
        element: ElementId,
        first: ElementId,
        second: ElementId,
    },
}

impl InverseDiagnosis {
    pub fn is_inverse(&self) -> bool {
        matches!(self, InverseDiagnosis::Inverse)
    }

    pub fn describe(&self, table: &SemigroupTable) -> String {
        match self {
            InverseDiagnosis::Inverse => "inverse semigroup".to_string(),
            InverseDiagnosis::MissingInverse { element } => format!(
                "element {element} = {} has no inverse in S",
                table.element(*element)
            ),
            InverseDiagnosis::MultipleInverses {
                element,
                first,
                second,
            } => format!(
                "element {element} = {} has two inverses {} and {}",
                table.element(*element),
                table.element(*first),
                table.element(*second)
            ),
        }
    }
}

/// How the Λ transversal picks one idempotent per D-class.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum LambdaRule {
    #[default]
    MinId,
    MaxId,
}

#[derive(Clone, Debug)]
pub struct DClass {
    /// The Λ representative.
    pub lambda: ElementId,
    /// Idempotents of the class in ascending id order; position `i` is the
    /// matrix-unit label `f_i`.
    pub idempotents: Vec<ElementId>,
    pub members: Vec<ElementId>,
    pub rank: usize,
    /// Order of the maximal subgroups in this class.
    pub group_order: usize,
}

impl DClass {
    /// `n_e`, the number of idempotents in the class.
    pub fn idempotent_count(&self) -> usize {
        self.idempotents.len()
    }
}

/// Green's relations of an inverse semigroup together with a fixed Λ.
#[derive(Clone, Debug)]
pub struct GreenStructure {
    d_class_of: Vec<usize>,
    d_classes: Vec<DClass>,
    /// H-classes keyed by (domain id, range id); members ascending.
    h_classes: BTreeMap<(ElementId, ElementId), Vec<ElementId>>,
}

impl GreenStructure {
    pub fn new(table: &SemigroupTable) -> Result<Self> {
        Self::with_rule(table, LambdaRule::MinId)
    }

    pub fn with_rule(table: &SemigroupTable, rule: LambdaRule) -> Result<Self> {
        table.require_inverse()?;
        let n = table.len();

        let mut h_classes: BTreeMap<(ElementId, ElementId), Vec<ElementId>> = BTreeMap::new();
        let mut witnesses = UnionFind::<usize>::new(n);
        for a in table.ids() {
            let (d, r) = (table.domain_of(a), table.range_of(a));
            h_classes.entry((d, r)).or_default().push(a);
            witnesses.union(d.index(), r.index());
        }

        // Group idempotents by D-class, then number classes by Λ id.
        let mut by_root: BTreeMap<usize, Vec<ElementId>> = BTreeMap::new();
        for &e in table.idempotent_ids() {
            by_root
                .entry(witnesses.find(e.index()))
                .or_default()
                .push(e);
        }
        let mut classes: Vec<(usize, DClass)> = by_root
            .into_iter()
            .map(|(root, idempotents)| {
                let lambda = match rule {
                    LambdaRule::MinId => idempotents[0],
                    LambdaRule::MaxId => *idempotents.last().expect("non-empty class"),
                };
                let group_order = h_classes[&(lambda, lambda)].len();
                let class = DClass {
                    lambda,
                    rank: table.rank(lambda),
                    idempotents,
                    members: Vec::new(),
                    group_order,
                };
                (root, class)
            })
            .collect();
        classes.sort_by_key(|(_, c)| c.lambda);

        let root_to_class: HashMap<usize, usize> = classes
            .iter()
            .enumerate()
            .map(|(k, (root, _))| (*root, k))
            .collect();
        let mut d_classes: Vec<DClass> = classes.into_iter().map(|(_, c)| c).collect();
        let mut d_class_of = vec![0; n];
        for a in table.ids() {
            let k = root_to_class[&witnesses.find(table.domain_of(a).index())];
            d_class_of[a.index()] = k;
            d_classes[k].members.push(a);
        }

        Ok(Self {
            d_class_of,
            d_classes,
            h_classes,
        })
    }

    pub fn d_classes(&self) -> &[DClass] {
        &self.d_classes
    }

    /// Index into [`Self::d_classes`] of the class containing `a`.
    pub fn d_class_of(&self, a: ElementId) -> usize {
        self.d_class_of[a.index()]
    }

    pub fn d_labels(&self) -> &[usize] {
        &self.d_class_of
    }

    pub fn lambda(&self) -> Vec<ElementId> {
        self.d_classes.iter().map(|c| c.lambda).collect()
    }

    /// Position of `e` in Λ, if it is a member.
    pub fn lambda_index(&self, e: ElementId) -> Option<usize> {
        self.d_classes.iter().position(|c| c.lambda == e)
    }

    pub fn h_class_count(&self) -> usize {
        self.h_classes.len()
    }

    pub fn h_related(&self, table: &SemigroupTable, a: ElementId, b: ElementId) -> bool {
        table.domain_of(a) == table.domain_of(b) && table.range_of(a) == table.range_of(b)
    }

    /// All `t` with `dom(t) = f` and `ran(t) = e`, ascending.
    pub fn connecting_elements(&self, f: ElementId, e: ElementId) -> &[ElementId] {
        self.h_classes
            .get(&(f, e))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// The connecting element from `f` to `e` with the smallest id.
    pub fn connecting_element(
        &self,
        table: &SemigroupTable,
        f: ElementId,
        e: ElementId,
    ) -> Result<ElementId> {
        for x in [f, e] {
            if !table.is_idempotent(x) {
                return Err(Error::Input(format!("{x} is not idempotent")));
            }
        }
        self.connecting_elements(f, e)
            .first()
            .copied()
            .ok_or_else(|| Error::Input(format!("{f} and {e} are not D-related")))
    }

    /// `G(e)`, the maximal subgroup at an idempotent.
    pub fn maximal_subgroup(
        &self,
        table: &SemigroupTable,
        e: ElementId,
    ) -> Result<MaximalSubgroup> {
        if !table.is_idempotent(e) {
            return Err(Error::Input(format!("{e} is not idempotent")));
        }
        Ok(MaximalSubgroup::new(
            table,
            e,
            self.h_classes[&(e, e)].clone(),
        ))
    }
}

/// `G(e) = {a : dom(a) = e = ran(a)}` with its own multiplication table.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    base: ElementId,
    members: Vec<ElementId>,
    position: HashMap<ElementId, usize>,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl MaximalSubgroup {
    fn new(table: &SemigroupTable, base: ElementId, members: Vec<ElementId>) -> Self {
        let position: HashMap<ElementId, usize> =
            members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let k = members.len();
        let mut product = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                product.push(position[&table.product(a, b)]);
            }
        }
        let inverse = members
            .iter()
            .map(|&a| position[&table.inverse(a)])
            .collect();
        Self {
            base,
            members,
            position,
            table: product,
            inverse,
        }
    }

    /// The idempotent `e`; also the group identity.
    pub fn base(&self) -> ElementId {
        self.base
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: ElementId) -> bool {
        self.position.contains_key(&a)
    }

    pub fn position(&self, a: ElementId) -> Option<usize> {
        self.position.get(&a).copied()
    }

    pub fn product(&self, a: ElementId, b: ElementId) -> ElementId {
        let (i, j) = (self.position[&a], self.position[&b]);
        self.members[self.table[i * self.order() + j]]
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        self.members[self.inverse[self.position[&a]]]
    }

    /// Group conjugacy classes by orbit enumeration, each sorted, classes
    /// ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElementId>> {
        let k = self.order();
        let mut class_of = vec![usize::MAX; k];
        let mut classes: Vec<Vec<ElementId>> = Vec::new();
        for i in 0..k {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut orbit = Vec::new();
            for g in 0..k {
                let conj = self.table[self.table[g * k + i] * k + self.inverse[g]];
                if class_of[conj] == usize::MAX {
                    class_of[conj] = c;
                    orbit.push(self.members[conj]);
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        classes
    }

    /// Order of an element in the group.
    pub fn element_order(&self, a: ElementId) -> usize {
        let mut power = a;
        let mut n = 1;
        while power != self.base {
            power = self.product(power, a);
            n += 1;
        }
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn pp(images: &[Option<u32>]) -> PartialPerm {
        PartialPerm::new(images.to_vec()).unwrap()
    }

    /// |R_n| = Σ_k C(n,k)² k!
    fn rook_order(n: u64) -> u64 {
        let fact = |k: u64| (1..=k).product::<u64>();
        let binom = |n: u64, k: u64| fact(n) / (fact(k) * fact(n - k));
        (0..=n).map(|k| binom(n, k).pow(2) * fact(k)).sum()
    }

    /// Brute-force oracle: all injective partial maps of a small degree.
    fn all_partial_perms(n: usize) -> Vec<PartialPerm> {
        let mut out = Vec::new();
        let total = (n + 1).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let images: Vec<Option<u32>> = (0..n)
                .map(|_| {
                    let d = c % (n + 1);
                    c /= n + 1;
                    (d < n).then_some(d as u32)
                })
                .collect();
            if let Ok(p) = PartialPerm::new(images) {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn rook_three_has_34_elements() {
        let t = fixtures::rook(3).table().unwrap();
        assert_eq!(t.len(), 34);
        assert_eq!(rook_order(3), 34);
        assert_eq!(all_partial_perms(3).len(), 34);
        for p in all_partial_perms(3) {
            assert!(t.id_of(&p).is_some(), "{p} missing");
        }
    }

    #[test]
    fn trivial_generators() {
        let t = SemigroupTable::generate(3, &[PartialPerm::identity(3)]).unwrap();
        assert_eq!(t.len(), 1);
        let z = SemigroupTable::generate(3, &[PartialPerm::empty(3)]).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z.element(ElementId(0)), &PartialPerm::empty(3));
        assert!(z.check_inverse().is_inverse());
    }

    #[test]
    fn cap_is_enforced() {
        let opts = GenerateOptions {
            cap: 10,
            ..Default::default()
        };
        let gens = fixtures::rook(3).generators;
        let err = SemigroupTable::generate_with(3, &gens, &opts).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 10 }));
        assert_eq!(err.exit_code(), 4);
    }

    #[test]
    fn product_agrees_with_composition() {
        let t = fixtures::rook(3).table().unwrap();
        for a in t.ids() {
            for b in t.ids() {
                let direct = t.element(a).compose(t.element(b)).unwrap();
                assert_eq!(t.element(t.product(a, b)), &direct);
            }
        }
    }

    #[test]
    fn check_inverse_cases() {
        let r3 = fixtures::rook(3).table().unwrap();
        assert!(r3.check_inverse().is_inverse());
        // The order-preserving shift 1→0 on two points without its inverse.
        let opts = GenerateOptions {
            close_under_inverse: false,
            ..Default::default()
        };
        let shift = pp(&[None, Some(0)]);
        let t = SemigroupTable::generate_with(2, &[shift], &opts).unwrap();
        assert_eq!(t.len(), 2);
        let diag = t.check_inverse();
        assert!(!diag.is_inverse());
        assert!(diag.describe(&t).contains("no inverse"));
        assert!(matches!(GreenStructure::new(&t), Err(Error::NotInverse(_))));
    }

    #[test]
    fn green_structure_of_rook_three() {
        let t = fixtures::rook(3).table().unwrap();
        let g = GreenStructure::new(&t).unwrap();
        let mut ranks: Vec<_> = g.d_classes().iter().map(|c| c.rank).collect();
        ranks.sort();
        assert_eq!(ranks, vec![0, 1, 2, 3]);
        for c in g.d_classes() {
            assert!(t.is_idempotent(c.lambda));
            assert_eq!(c.idempotents[0], c.lambda);
        }
        // The rank-2 generator id{0,1} is the first rank-2 idempotent found.
        let e2 = PartialPerm::partial_identity(3, &[0, 1]).unwrap();
        assert!(g.lambda().contains(&t.id_of(&e2).unwrap()));
        assert!(g
            .lambda()
            .contains(&t.id_of(&PartialPerm::identity(3)).unwrap()));
        assert!(g
            .lambda()
            .contains(&t.id_of(&PartialPerm::empty(3)).unwrap()));
        let audit: usize = g
            .d_classes()
            .iter()
            .map(|c| c.idempotent_count().pow(2) * c.group_order)
            .sum();
        assert_eq!(audit, 34);
    }

    #[test]
    fn green_structure_of_rook_two_and_group() {
        let t = fixtures::rook(2).table().unwrap();
        let g = GreenStructure::new(&t).unwrap();
        let mut counts: Vec<_> = g
            .d_classes()
            .iter()
            .map(|c| (c.rank, c.idempotent_count()))
            .collect();
        counts.sort();
        assert_eq!(counts, vec![(0, 1), (1, 2), (2, 1)]);

        let s3 = fixtures::symmetric(3).table().unwrap();
        let g = GreenStructure::new(&s3).unwrap();
        assert_eq!(g.d_classes().len(), 1);
        assert_eq!(g.lambda(), vec![s3.identity().unwrap()]);
    }

    #[test]
    fn ideal_oracle_matches_witness_d_classes() {
        for fx in [
            fixtures::rook(2),
            fixtures::rook(3),
            fixtures::chain(4),
            fixtures::symmetric(3),
        ] {
            let t = fx.table().unwrap();
            let g = GreenStructure::new(&t).unwrap();
            assert_eq!(normalize_labels(g.d_labels()), t.d_labels_by_ideals());
        }
    }

    #[test]
    fn maximal_subgroups_of_rook_three() {
        let t = fixtures::rook(3).table().unwrap();
        let g = GreenStructure::new(&t).unwrap();
        let one = t.id_of(&PartialPerm::identity(3)).unwrap();
        assert_eq!(g.maximal_subgroup(&t, one).unwrap().order(), 6);
        let e = t
            .id_of(&PartialPerm::partial_identity(3, &[1, 2]).unwrap())
            .unwrap();
        let ge = g.maximal_subgroup(&t, e).unwrap();
        assert_eq!(ge.order(), 2);
        assert_eq!(ge.base(), e);
        let zero = t.id_of(&PartialPerm::empty(3)).unwrap();
        assert_eq!(g.maximal_subgroup(&t, zero).unwrap().order(), 1);
        let not_idem = t.id_of(&pp(&[Some(1), Some(0), None])).unwrap();
        assert!(g.maximal_subgroup(&t, not_idem).is_err());
        assert_eq!(
            g.maximal_subgroup(&t, one)
                .unwrap()
                .conjugacy_classes()
                .len(),
            3
        );
    }

    #[test]
    fn connecting_elements() {
        let t = fixtures::rook(3).table().unwrap();
        let g = GreenStructure::new(&t).unwrap();
        let id = |pts: &[u32]| {
            t.id_of(&PartialPerm::partial_identity(3, pts).unwrap())
                .unwrap()
        };

        let (f, e) = (id(&[1, 2]), id(&[0, 1]));
        let c = g.connecting_element(&t, f, e).unwrap();
        assert_eq!(t.domain_of(c), f);
        assert_eq!(t.range_of(c), e);
        // The witness 2→1, 3→2 (1-based) is among the valid choices.
        let t_23_12 = t.id_of(&pp(&[None, Some(0), Some(1)])).unwrap();
        assert!(g.connecting_elements(f, e).contains(&t_23_12));

        let c = g.connecting_element(&t, e, e).unwrap();
        assert_eq!((t.domain_of(c), t.range_of(c)), (e, e));

        let c = g.connecting_element(&t, id(&[0]), id(&[2])).unwrap();
        assert_eq!(t.element(c), &pp(&[Some(2), None, None]));

        assert!(g.connecting_element(&t, id(&[0]), id(&[0, 1])).is_err());
    }

    #[test]
    fn sigma_t_examples_and_isomorphism() {
        let t = fixtures::rook(3).table().unwrap();
        let g = GreenStructure::new(&t).unwrap();
        let f = t
            .id_of(&PartialPerm::partial_identity(3, &[1, 2]).unwrap())
            .unwrap();
        let e = t
            .id_of(&PartialPerm::partial_identity(3, &[0, 1]).unwrap())
            .unwrap();
        let t_23_12 = t.id_of(&pp(&[None, Some(0), Some(1)])).unwrap();
        // (32)[1] ↦ (12)[3]
        let a = t.id_of(&pp(&[None, Some(2), Some(1)])).unwrap();
        let image = t.sigma_t(t_23_12, a).unwrap();
        assert_eq!(t.element(image), &pp(&[Some(1), Some(0), None]));
        assert_eq!(t.sigma_t(t_23_12, f).unwrap(), e);
        assert!(t.sigma_t(t_23_12, e).is_err());

        let gf = g.maximal_subgroup(&t, f).unwrap();
        let ge = g.maximal_subgroup(&t, e).unwrap();
        for &x in gf.members() {
            assert_eq!(t.sigma_t(f, x).unwrap(), x);
        }
        for &tt in g.connecting_elements(f, e) {
            let map: Vec<_> = gf
                .members()
                .iter()
                .map(|&x| t.sigma_t(tt, x).unwrap())
                .collect();
            let mut sorted = map.clone();
            sorted.sort();
            assert_eq!(sorted, ge.members());
            for &x in gf.members() {
                for &y in gf.members() {
                    let lhs = t.sigma_t(tt, gf.product(x, y)).unwrap();
                    let rhs = ge.product(t.sigma_t(tt, x).unwrap(), t.sigma_t(tt, y).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn mobius_examples() {
        let t = fixtures::rook(3).table().unwrap();
        for a in t.ids() {
            assert_eq!(t.mobius(a, a).unwrap(), 1);
        }
        let a = t.id_of(&pp(&[Some(1), Some(2), None])).unwrap();
        let b = t.id_of(&pp(&[Some(1), None, None])).unwrap();
        assert_eq!(t.mobius(b, a).unwrap(), -1);
        let zero = t.id_of(&PartialPerm::empty(3)).unwrap();
        let e12 = t
            .id_of(&PartialPerm::partial_identity(3, &[0, 1]).unwrap())
            .unwrap();
        assert_eq!(t.mobius(zero, e12).unwrap(), 1);
        assert!(t.mobius(e12, zero).is_err());
    }

    #[test]
    fn mobius_on_non_boolean_interval() {
        // {0, id{0,1}}: the interval has two elements, so μ = −1 although the
        // rank difference is 2.
        let t = SemigroupTable::generate(2, &[PartialPerm::identity(2), PartialPerm::empty(2)])
            .unwrap();
        let zero = t.id_of(&PartialPerm::empty(2)).unwrap();
        let one = t.id_of(&PartialPerm::identity(2)).unwrap();
        assert_eq!(t.mobius(zero, one).unwrap(), -1);
    }

    #[test]
    fn induced_idempotent_of_shift() {
        let opts = GenerateOptions {
            close_under_inverse: false,
            ..Default::default()
        };
        let shift = pp(&[None, Some(0), Some(1), Some(2)]);
        let t = SemigroupTable::generate_with(4, std::slice::from_ref(&shift), &opts).unwrap();
        assert_eq!(t.len(), 4);
        let a = t.id_of(&shift).unwrap();
        assert_eq!(t.element(t.induced_idempotent(a)), &PartialPerm::empty(4));
    }
}
