//! Finitely generated permutation groups with materialized element sets.
//!
//! Groups are immutable after construction. The element list is always
//! sorted in the canonical (lexicographic) order, so equality of groups
//! is equality of element vectors.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Closes a generator list under composition.
    ///
    /// The empty generator list yields the trivial group; degree 0 is
    /// rejected. Fails once the closure exceeds `caps.element_cap`.
    pub fn generate(degree: usize, generators: Vec<Permutation>, caps: &Caps) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let elements = close(&[Permutation::identity(degree)], &generators, caps)?;
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: vec![Permutation::identity(degree)],
        }
    }

    /// Wraps an explicit element set, verifying that it is a group.
    ///
    /// A small generating set is extracted greedily; the set is accepted
    /// iff the closure of that generating set reproduces it exactly.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        for g in &elements {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        // a genuine group never grows past its own size while being
        // regenerated, so the cap doubles as the closure test
        let generators =
            greedy_generators(degree, &elements, elements.len()).map_err(|_| Error::NotAGroup)?;
        let cap = Caps::default().with_element_cap(elements.len());
        let closure = close(&[Permutation::identity(degree)], &generators, &cap)
            .map_err(|_| Error::NotAGroup)?;
        if closure != elements {
            return Err(Error::NotAGroup);
        }
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    /// Internal constructor for element sets already known to be closed.
    pub(crate) fn from_closure_unchecked(
        degree: usize,
        mut elements: Vec<Permutation>,
        generators: Vec<Permutation>,
    ) -> PermGroup {
        elements.sort();
        elements.dedup();
        PermGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn symmetric(n: usize, caps: &Caps) -> Result<PermGroup> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
        }
        PermGroup::generate(n, gens, caps)
    }

    pub fn alternating(n: usize, caps: &Caps) -> Result<PermGroup> {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1, 2]])?);
        }
        if n >= 4 {
            let long: Vec<usize> = if n % 2 == 1 {
                (0..n).collect()
            } else {
                (1..n).collect()
            };
            gens.push(Permutation::from_cycles(n, &[long])?);
        }
        PermGroup::generate(n.max(1), gens, caps)
    }

    pub fn cyclic(n: usize, caps: &Caps) -> Result<PermGroup> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let gens = if n == 1 {
            Vec::new()
        } else {
            vec![Permutation::from_cycles(n, &[(0..n).collect()])?]
        };
        PermGroup::generate(n, gens, caps)
    }

    /// Symmetries of a regular n-gon on its n vertices, order 2n.
    pub fn dihedral(n: usize, caps: &Caps) -> Result<PermGroup> {
        if n < 3 {
            return Err(Error::ZeroDegree);
        }
        let rotation = Permutation::from_cycles(n, &[(0..n).collect()])?;
        let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
        PermGroup::generate(n, vec![rotation, reflection], caps)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in canonical sorted order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.elements.binary_search(g).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }

    /// Largest element order in the group.
    pub fn exponent_bound(&self) -> u64 {
        self.elements.iter().map(|g| g.order()).max().unwrap_or(1)
    }

    /// Partition of the elements into conjugacy classes.
    ///
    /// Classes are sorted by (representative order, class size, minimal
    /// representative); elements within a class are sorted canonically.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Permutation>> {
        let mut seen: HashSet<Permutation> = HashSet::new();
        let mut classes = Vec::new();
        for g in &self.elements {
            if seen.contains(g) {
                continue;
            }
            let mut class = self.conjugacy_class_of(g);
            for x in &class {
                seen.insert(x.clone());
            }
            class.sort();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c[0].order(), c.len(), c[0].clone()));
        classes
    }

    /// Orbit of `g` under conjugation by the group.
    fn conjugacy_class_of(&self, g: &Permutation) -> Vec<Permutation> {
        let mut orbit: HashSet<Permutation> = HashSet::new();
        orbit.insert(g.clone());
        let mut queue = vec![g.clone()];
        while let Some(x) = queue.pop() {
            for t in &self.generators {
                let y = x.conjugate_by(t);
                if orbit.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        orbit.into_iter().collect()
    }

    /// Whether some x in the group satisfies x g x^-1 = h.
    pub fn are_conjugate(&self, g: &Permutation, h: &Permutation) -> Result<bool> {
        if !self.contains(g) || !self.contains(h) {
            return Err(Error::NotAMember);
        }
        if g == h {
            return Ok(true);
        }
        Ok(self.conjugacy_class_of(g).contains(h))
    }

    /// Subgroup of elements commuting with every member of `set`.
    pub fn centralizer_of_set(&self, set: &[Permutation]) -> Result<PermGroup> {
        for s in set {
            if !self.contains(s) {
                return Err(Error::NotAMember);
            }
        }
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|x| set.iter().all(|s| x.commutes_with(s)))
            .cloned()
            .collect();
        Ok(self.subgroup_from_sorted(elements))
    }

    pub fn center(&self) -> PermGroup {
        self.centralizer_of_set(&self.generators.clone())
            .expect("generators are members")
    }

    /// Subgroup of elements x with x H x^-1 = H.
    pub fn normalizer(&self, subgroup: &PermGroup) -> Result<PermGroup> {
        if !subgroup.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|x| {
                subgroup
                    .elements
                    .iter()
                    .all(|h| subgroup.contains(&h.conjugate_by(x)))
            })
            .cloned()
            .collect();
        Ok(self.subgroup_from_sorted(elements))
    }

    /// All subgroups, by cyclic extension sweep.
    ///
    /// Seeds with every cyclic subgroup, then repeatedly extends each
    /// discovered subgroup by one outside element and closes, until no
    /// new subgroup appears. Deduplicated by element set and sorted by
    /// (order, element list).
    pub fn subgroups(&self, caps: &Caps) -> Result<Vec<PermGroup>> {
        if self.order() > caps.subgroup_cap {
            return Err(Error::SubgroupCapExceeded {
                order: self.order(),
                cap: caps.subgroup_cap,
            });
        }
        let nocap = Caps::default().with_element_cap(self.order());
        let mut found: HashMap<Vec<Permutation>, PermGroup> = HashMap::new();
        let mut queue: VecDeque<PermGroup> = VecDeque::new();
        let trivial = PermGroup::trivial(self.degree);
        found.insert(trivial.elements.clone(), trivial.clone());
        queue.push_back(trivial);
        for g in &self.elements {
            if g.is_identity() {
                continue;
            }
            let elements = close(
                &[Permutation::identity(self.degree)],
                std::slice::from_ref(g),
                &nocap,
            )?;
            if let std::collections::hash_map::Entry::Vacant(slot) = found.entry(elements) {
                let sub = PermGroup::from_closure_unchecked(
                    self.degree,
                    slot.key().clone(),
                    vec![g.clone()],
                );
                slot.insert(sub.clone());
                queue.push_back(sub);
            }
        }
        while let Some(sub) = queue.pop_front() {
            for g in &self.elements {
                if sub.contains(g) {
                    continue;
                }
                let mut gens = sub.generators.clone();
                gens.push(g.clone());
                let elements = close(&sub.elements, &gens, &nocap)?;
                if let std::collections::hash_map::Entry::Vacant(slot) = found.entry(elements) {
                    let next =
                        PermGroup::from_closure_unchecked(self.degree, slot.key().clone(), gens);
                    slot.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut subgroups: Vec<PermGroup> = found.into_values().collect();
        subgroups.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        Ok(subgroups)
    }

    /// All normal subgroups, as joins of conjugacy-class closures.
    ///
    /// A normal subgroup is generated by the conjugacy classes it
    /// contains, so saturating the set of class-generated normal closures
    /// under joins enumerates the whole normal lattice without touching
    /// the (much larger) subgroup lattice.
    pub fn normal_subgroups(&self) -> Vec<PermGroup> {
        let nocap = Caps::default().with_element_cap(self.order());
        let mut class_closures: Vec<PermGroup> = Vec::new();
        let mut closure_keys: HashSet<Vec<Permutation>> = HashSet::new();
        for class in self.conjugacy_classes() {
            let gens = greedy_generators(self.degree, &class, self.order())
                .expect("class closures stay within the group");
            let elements = close(&[Permutation::identity(self.degree)], &gens, &nocap)
                .expect("class closure stays within the group");
            if closure_keys.insert(elements.clone()) {
                class_closures.push(PermGroup::from_closure_unchecked(
                    self.degree,
                    elements,
                    gens,
                ));
            }
        }
        let mut found: HashMap<Vec<Permutation>, PermGroup> = HashMap::new();
        let trivial = PermGroup::trivial(self.degree);
        found.insert(trivial.elements.clone(), trivial.clone());
        let mut queue: VecDeque<PermGroup> = VecDeque::new();
        queue.push_back(trivial);
        while let Some(n) = queue.pop_front() {
            for cc in &class_closures {
                if cc.is_subgroup_of(&n) {
                    continue;
                }
                let mut gens = n.generators.clone();
                gens.extend(cc.generators.iter().cloned());
                let elements = close(&n.elements, &gens, &nocap)
                    .expect("join of normal subgroups stays within the group");
                if let std::collections::hash_map::Entry::Vacant(slot) = found.entry(elements) {
                    let join =
                        PermGroup::from_closure_unchecked(self.degree, slot.key().clone(), gens);
                    slot.insert(join.clone());
                    queue.push_back(join);
                }
            }
        }
        let mut normals: Vec<PermGroup> = found.into_values().collect();
        normals.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        normals
    }

    /// Group acting on the disjoint union of the two supports.
    pub fn direct_product(a: &PermGroup, b: &PermGroup, caps: &Caps) -> Result<PermGroup> {
        let degree = a.degree + b.degree;
        let mut gens = Vec::new();
        for g in &a.generators {
            gens.push(embed(g, degree, 0)?);
        }
        for g in &b.generators {
            gens.push(embed(g, degree, a.degree)?);
        }
        PermGroup::generate(degree, gens, caps)
    }

    /// Semidirect product realized on the disjoint union of supports.
    ///
    /// `conjugators[i]` is a permutation of the kernel support paired with
    /// `quotient.generators()[i]`; it must normalize `kernel`. Each combined
    /// generator acts as the conjugator on the kernel points and as the
    /// quotient generator on its own points.
    pub fn semidirect_product(
        kernel: &PermGroup,
        quotient: &PermGroup,
        conjugators: &[Permutation],
        caps: &Caps,
    ) -> Result<PermGroup> {
        if conjugators.len() != quotient.generators.len() {
            return Err(Error::ConjugatorCountMismatch {
                expected: quotient.generators.len(),
                found: conjugators.len(),
            });
        }
        for c in conjugators {
            if c.degree() != kernel.degree {
                return Err(Error::DegreeMismatch {
                    expected: kernel.degree,
                    found: c.degree(),
                });
            }
            for g in &kernel.generators {
                if !kernel.contains(&g.conjugate_by(c)) {
                    return Err(Error::ConjugatorDoesNotNormalize);
                }
            }
        }
        let degree = kernel.degree + quotient.degree;
        let mut gens = Vec::new();
        for g in &kernel.generators {
            gens.push(embed(g, degree, 0)?);
        }
        for (h, c) in quotient.generators.iter().zip(conjugators) {
            let mut images: Vec<usize> = Vec::with_capacity(degree);
            images.extend(c.images().iter().copied());
            images.extend(h.images().iter().map(|&x| x + kernel.degree));
            gens.push(Permutation::from_images(images)?);
        }
        PermGroup::generate(degree, gens, caps)
    }

    /// Wraps an already-sorted subset of this group's elements,
    /// computing a small generating set for it.
    fn subgroup_from_sorted(&self, elements: Vec<Permutation>) -> PermGroup {
        let generators = greedy_generators(self.degree, &elements, elements.len().max(1))
            .expect("filtered subgroups are closed");
        PermGroup {
            degree: self.degree,
            generators,
            elements,
        }
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, gens {:?})",
            self.degree,
            self.order(),
            self.generators
        )
    }
}

/// Embeds a permutation into a larger degree at the given point offset.
fn embed(g: &Permutation, degree: usize, offset: usize) -> Result<Permutation> {
    let mut images: Vec<usize> = (0..degree).collect();
    for (i, &x) in g.images().iter().enumerate() {
        images[offset + i] = offset + x;
    }
    Permutation::from_images(images)
}

/// Closes `start` (a set containing the identity) under right
/// multiplication by `generators`. Returns the sorted element list.
fn close(
    start: &[Permutation],
    generators: &[Permutation],
    caps: &Caps,
) -> Result<Vec<Permutation>> {
    let mut set: HashSet<Permutation> = start.iter().cloned().collect();
    let mut queue: VecDeque<Permutation> = start.iter().cloned().collect();
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = p.compose(g);
            if !set.contains(&q) {
                if set.len() >= caps.element_cap {
                    return Err(Error::ElementCapExceeded {
                        cap: caps.element_cap,
                    });
                }
                set.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    let mut elements: Vec<Permutation> = set.into_iter().collect();
    elements.sort();
    Ok(elements)
}

/// Greedy small generating set for ⟨elements⟩: elements are consumed in
/// canonical order and kept only when not already generated. Fails if
/// an intermediate closure grows past `limit` elements.
fn greedy_generators(
    degree: usize,
    elements: &[Permutation],
    limit: usize,
) -> Result<Vec<Permutation>> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current: HashSet<Permutation> = HashSet::new();
    current.insert(Permutation::identity(degree));
    let cap = Caps::default().with_element_cap(limit);
    for e in elements {
        if !current.contains(e) {
            gens.push(e.clone());
            let closed = close(&[Permutation::identity(degree)], &gens, &cap)?;
            current = closed.into_iter().collect();
        }
    }
    Ok(gens)
}
