//! The semigroup algebra `FS`, its decomposition into matrix algebras over
//! group algebras, and the lifting of group representations to `S`.
//!
//! The decomposition goes through the groupoid basis
//! `⌊a⌋ = Σ_{b ≤ a} μ(b, a)·b`. In that basis `⌊a⌋⌊b⌋ = ⌊ab⌋` when
//! `dom(a) = ran(b)` and `0` otherwise, so each D-class `D_e` spans a copy of
//! `M_{n_e}(FG(e))`. Concretely, with the idempotents of `D_e` listed as
//! `f_1 < … < f_{n_e}` and `t_i` the minimal element with `dom(t_i) = f_i`,
//! `ran(t_i) = e`, an element `⌊b⌋` with `ran(b) = f_i`, `dom(b) = f_j` maps
//! to `t_i·b·t_j⁻¹` in entry `(i, j)`. Since `a = Σ_{b ≤ a} ⌊b⌋`, the image
//! of a basis element `a` is the sum of those entries over its down-set.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::matrix::{Echelon, Matrix};
use crate::semigroup::{ElementId, GreenStructure, MaximalSubgroup, SemigroupTable};

/// A finite linear combination of semigroup elements.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<E> {
    terms: BTreeMap<ElementId, E>,
}

impl<E: Clone + PartialEq> AlgebraElement<E> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis<F: Field<Elem = E>>(field: &F, a: ElementId) -> Self {
        let mut x = Self::zero();
        x.add_term(field, a, &field.one());
        x
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElementId, &E)> {
        self.terms.iter().map(|(&a, c)| (a, c))
    }

    pub fn coefficient(&self, a: ElementId) -> Option<&E> {
        self.terms.get(&a)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, field: &F, a: ElementId, c: &E) {
        let sum = match self.terms.get(&a) {
            Some(old) => field.add(old, c),
            None => c.clone(),
        };
        if field.is_zero(&sum) {
            self.terms.remove(&a);
        } else {
            self.terms.insert(a, sum);
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in other.terms() {
            out.add_term(field, a, c);
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            out.add_term(field, a, &field.mul(c, x));
        }
        out
    }

    /// Product in `FS`.
    pub fn mul<F: Field<Elem = E>>(&self, field: &F, table: &SemigroupTable, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(field, table.product(a, b), &field.mul(x, y));
            }
        }
        out
    }
}

/// `⌊a⌋ = Σ_{b ≤ a} μ(b, a)·b`.
pub fn groupoid_expand<F: Field>(
    field: &F,
    table: &SemigroupTable,
    a: ElementId,
) -> AlgebraElement<F::Elem> {
    let mut out = AlgebraElement::zero();
    for (b, mu) in table.mobius_column(a) {
        out.add_term(field, b, &field.from_i64(mu));
    }
    out
}

/// An `n_e × n_e` matrix with entries in `FG(e)`, stored sparsely.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupMatrix<E> {
    pub size: usize,
    /// The Λ member `e`.
    pub lambda: ElementId,
    entries: BTreeMap<(usize, usize), AlgebraElement<E>>,
}

impl<E: Clone + PartialEq> GroupMatrix<E> {
    pub fn zero(size: usize, lambda: ElementId) -> Self {
        Self {
            size,
            lambda,
            entries: BTreeMap::new(),
        }
    }

    /// `β_ij`, or `None` when the entry is zero.
    pub fn entry(&self, i: usize, j: usize) -> Option<&AlgebraElement<E>> {
        self.entries.get(&(i, j))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &AlgebraElement<E>)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_to_entry<F: Field<Elem = E>>(
        &mut self,
        field: &F,
        i: usize,
        j: usize,
        x: &AlgebraElement<E>,
    ) {
        let slot = self
            .entries
            .entry((i, j))
            .or_insert_with(AlgebraElement::zero);
        *slot = slot.add(field, x);
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    /// Product in `M_{n_e}(FG(e))`.
    pub fn mul<F: Field<Elem = E>>(&self, field: &F, table: &SemigroupTable, other: &Self) -> Self {
        let mut out = Self::zero(self.size, self.lambda);
        for (&(i, k), x) in &self.entries {
            for (&(k2, j), y) in other.entries.range((k, 0)..=(k, usize::MAX)) {
                debug_assert_eq!(k, k2);
                out.add_to_entry(field, i, j, &x.mul(field, table, y));
            }
        }
        out
    }
}

/// One block `M_{n_e}(FG(e))` of the decomposition.
#[derive(Clone, Debug)]
pub struct Block {
    pub lambda: ElementId,
    /// `f_1 < … < f_{n_e}`.
    pub idempotents: Vec<ElementId>,
    /// `t_i` with `dom(t_i) = f_i` and `ran(t_i) = e`.
    pub connecting: Vec<ElementId>,
    pub group: MaximalSubgroup,
    position: HashMap<ElementId, usize>,
}

impl Block {
    pub fn size(&self) -> usize {
        self.idempotents.len()
    }

    /// `n_e² · |G(e)|`.
    pub fn dimension(&self) -> usize {
        self.size() * self.size() * self.group.order()
    }
}

/// The maps `ψ_e : FS → M_{n_e}(FG(e))` for every `e ∈ Λ`.
pub struct Decomposition<'a> {
    table: &'a SemigroupTable,
    green: &'a GreenStructure,
    blocks: Vec<Block>,
}

impl<'a> Decomposition<'a> {
    pub fn new(table: &'a SemigroupTable, green: &'a GreenStructure) -> Result<Self> {
        let mut blocks = Vec::new();
        for d in green.d_classes() {
            let e = d.lambda;
            let connecting = d
                .idempotents
                .iter()
                .map(|&f| green.connecting_element(table, f, e))
                .collect::<Result<Vec<_>>>()?;
            blocks.push(Block {
                lambda: e,
                idempotents: d.idempotents.clone(),
                position: d
                    .idempotents
                    .iter()
                    .enumerate()
                    .map(|(i, &f)| (f, i))
                    .collect(),
                connecting,
                group: green.maximal_subgroup(table, e)?,
            });
        }
        Ok(Self {
            table,
            green,
            blocks,
        })
    }

    pub fn table(&self) -> &SemigroupTable {
        self.table
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_index(&self, e: ElementId) -> Result<usize> {
        self.green
            .lambda_index(e)
            .ok_or_else(|| Error::Input(format!("{e} is not a member of Λ")))
    }

    /// Σ over blocks of `n_e²·|G(e)|`.
    pub fn total_dimension(&self) -> usize {
        self.blocks.iter().map(Block::dimension).sum()
    }

    /// Image of `⌊b⌋` in its own block: `(block, i, j, t_i·b·t_j⁻¹)`.
    pub fn groupoid_image(&self, b: ElementId) -> (usize, usize, usize, ElementId) {
        let t = self.table;
        let k = self.green.d_class_of(b);
        let block = &self.blocks[k];
        let i = block.position[&t.range_of(b)];
        let j = block.position[&t.domain_of(b)];
        let g = t.product3(block.connecting[i], b, t.inverse(block.connecting[j]));
        (k, i, j, g)
    }

    /// Nonzero entries of `ψ_e(a)` for a basis element, as `(i, j, g)`
    /// terms with coefficient 1.
    pub fn psi_basis_terms(&self, k: usize, a: ElementId) -> Vec<(usize, usize, ElementId)> {
        self.table
            .down_set(a)
            .into_iter()
            .filter(|&b| self.green.d_class_of(b) == k)
            .map(|b| {
                let (_, i, j, g) = self.groupoid_image(b);
                (i, j, g)
            })
            .collect()
    }

    /// `ψ_e(x)`; zero on every `FD_f` with `f ≠ e`.
    pub fn psi<F: Field>(
        &self,
        field: &F,
        e: ElementId,
        x: &AlgebraElement<F::Elem>,
    ) -> Result<GroupMatrix<F::Elem>> {
        let k = self.block_index(e)?;
        let mut out = GroupMatrix::zero(self.blocks[k].size(), e);
        for (a, c) in x.terms() {
            for (i, j, g) in self.psi_basis_terms(k, a) {
                let mut term = AlgebraElement::zero();
                term.add_term(field, g, c);
                out.add_to_entry(field, i, j, &term);
            }
        }
        Ok(out)
    }

    /// First basis pair `(a, b)` with `ψ_e(ab) ≠ ψ_e(a)ψ_e(b)` in some block.
    pub fn homomorphism_failure(&self) -> Option<(ElementId, ElementId, ElementId)> {
        type Sparse = BTreeMap<(usize, usize, ElementId), i64>;
        let t = self.table;
        for (k, block) in self.blocks.iter().enumerate() {
            let images: Vec<Sparse> = t
                .ids()
                .map(|a| {
                    let mut m = Sparse::new();
                    for (i, j, g) in self.psi_basis_terms(k, a) {
                        *m.entry((i, j, g)).or_default() += 1;
                    }
                    m
                })
                .collect();
            for a in t.ids() {
                for b in t.ids() {
                    let mut product = Sparse::new();
                    for (&(i, l, g), &x) in &images[a.index()] {
                        for (&(l2, j, h), &y) in &images[b.index()] {
                            if l == l2 {
                                *product
                                    .entry((i, j, block.group.product(g, h)))
                                    .or_default() += x * y;
                            }
                        }
                    }
                    product.retain(|_, v| *v != 0);
                    if product != images[t.product(a, b).index()] {
                        return Some((block.lambda, a, b));
                    }
                }
            }
        }
        None
    }

    /// Rank of `a ↦ ⊕_e ψ_e(a)` on the standard basis, computed mod a large
    /// prime. Equal to `|S|` exactly when the map is injective (full rank
    /// mod p implies full rank over ℚ for integer matrices).
    pub fn direct_sum_rank(&self) -> usize {
        let field = PrimeField::new(2_147_483_647).expect("prime");
        let mut offsets = Vec::with_capacity(self.blocks.len());
        let mut total = 0;
        for b in &self.blocks {
            offsets.push(total);
            total += b.dimension();
        }
        let t = self.table;
        let mut order: Vec<ElementId> = t.ids().collect();
        order.sort_by_key(|&a| (t.rank(a), a));
        let mut system = Echelon::new(&field, total);
        for a in order {
            let mut row = vec![0u64; total];
            for b in t.down_set(a) {
                let (k, i, j, g) = self.groupoid_image(b);
                let block = &self.blocks[k];
                let n = block.size();
                let gi = block.group.position(g).expect("image lies in G(e)");
                let idx = offsets[k] + (i * n + j) * block.group.order() + gi;
                row[idx] = field.add(&row[idx], &1);
            }
            system.push(row);
        }
        system.rank()
    }
}

/// A matrix representation of a maximal subgroup `G(e)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rep<E> {
    /// The group identity `e`.
    pub base: ElementId,
    pub degree: usize,
    pub images: BTreeMap<ElementId, Matrix<E>>,
}

impl<E: Clone + PartialEq> Rep<E> {
    pub fn image(&self, g: ElementId) -> &Matrix<E> {
        &self.images[&g]
    }

    /// Images in group-member order.
    pub fn family(&self, group: &MaximalSubgroup) -> Vec<Matrix<E>> {
        group
            .members()
            .iter()
            .map(|g| self.images[g].clone())
            .collect()
    }

    /// Checks shape, identity and multiplicativity on `group`.
    pub fn validate<F: Field<Elem = E>>(&self, field: &F, group: &MaximalSubgroup) -> Result<()> {
        let fail = |msg: String| Err(Error::Validation(msg));
        if self.base != group.base() {
            return fail(format!(
                "representation is for {} but the group is G({})",
                self.base,
                group.base()
            ));
        }
        for &g in group.members() {
            match self.images.get(&g) {
                None => return fail(format!("no image for group element {g}")),
                Some(m) if m.rows() != self.degree || m.cols() != self.degree => {
                    return fail(format!("image of {g} is not {0}×{0}", self.degree));
                }
                Some(_) => {}
            }
        }
        if self.images.len() != group.order() {
            return fail("images given for elements outside the group".into());
        }
        if self.images[&group.base()] != Matrix::identity(field, self.degree) {
            return fail(format!(
                "identity {} does not map to the identity matrix",
                group.base()
            ));
        }
        for &g in group.members() {
            for &h in group.members() {
                let lhs = &self.images[&group.product(g, h)];
                let rhs = self.images[&g].mul(field, &self.images[&h]);
                if *lhs != rhs {
                    return fail(format!("not multiplicative at ({g}, {h})"));
                }
            }
        }
        Ok(())
    }
}

/// `ρ*`, a representation of `S` lifted from one of `G(e)`.
#[derive(Clone, Debug)]
pub struct LiftedRep<E> {
    pub lambda: ElementId,
    pub rep_degree: usize,
    /// `n_e`.
    pub block_size: usize,
    /// `n_e · deg ρ`.
    pub degree: usize,
    /// One image per element, indexed by id.
    pub images: Vec<Matrix<E>>,
}

impl<E: Clone + PartialEq> LiftedRep<E> {
    pub fn image(&self, a: ElementId) -> &Matrix<E> {
        &self.images[a.index()]
    }

    /// Images of the generating seeds of the table.
    pub fn generator_family(&self, table: &SemigroupTable) -> Vec<Matrix<E>> {
        table
            .generator_ids()
            .iter()
            .map(|&g| self.images[g.index()].clone())
            .collect()
    }

    /// Checks `ρ*(a·g) = ρ*(a)ρ*(g)` for every `a ∈ S` and every generating
    /// seed `g`. By induction on word length this is equivalent to
    /// multiplicativity on all of `S × S`.
    pub fn multiplicativity_failure<F: Field<Elem = E>>(
        &self,
        field: &F,
        table: &SemigroupTable,
    ) -> Option<(ElementId, ElementId)> {
        for a in table.ids() {
            for &g in table.generator_ids() {
                let lhs = self.image(table.product(a, g));
                if *lhs != self.image(a).mul(field, self.image(g)) {
                    return Some((a, g));
                }
            }
        }
        None
    }

    /// Full `|S|²` multiplicativity check.
    pub fn multiplicativity_failure_all_pairs<F: Field<Elem = E>>(
        &self,
        field: &F,
        table: &SemigroupTable,
    ) -> Option<(ElementId, ElementId)> {
        for a in table.ids() {
            for b in table.ids() {
                if *self.image(table.product(a, b)) != self.image(a).mul(field, self.image(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// `ρ*(a) = Σ ρ(β_ij(a)) E_ij` as a block matrix.
pub fn lift<F: Field>(
    field: &F,
    decomposition: &Decomposition<'_>,
    rho: &Rep<F::Elem>,
) -> Result<LiftedRep<F::Elem>> {
    let k = decomposition.block_index(rho.base)?;
    let block = &decomposition.blocks()[k];
    rho.validate(field, &block.group)
        .map_err(|e| Error::Input(format!("cannot lift: {e}")))?;
    let d = rho.degree;
    let n = block.size();
    let images = decomposition
        .table()
        .ids()
        .map(|a| {
            let mut m = Matrix::zeros(field, n * d, n * d);
            for (i, j, g) in decomposition.psi_basis_terms(k, a) {
                m.add_block(field, i * d, j * d, rho.image(g));
            }
            m
        })
        .collect();
    Ok(LiftedRep {
        lambda: rho.base,
        rep_degree: d,
        block_size: n,
        degree: n * d,
        images,
    })
}
