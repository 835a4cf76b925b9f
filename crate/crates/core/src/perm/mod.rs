//! Permutation groups on `{1..n}` given by generators, and finite groups
//! given by a composition table.
//!
//! Groups here are tiny (`n ≤ 12`, a few thousand elements at most), so
//! everything works on explicit element lists.

mod iso;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub use iso::{are_isomorphic, Isomorphism, ISO_ORDER_CAP};

/// Largest supported permutation degree.
pub const MAX_DEGREE: usize = 12;
/// Largest group order `closure` will enumerate.
pub const ORDER_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("images do not form a bijection of 1..{0}")]
    NotBijection(usize),
    #[error("generators of degrees {0} and {1} mixed")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} above the supported maximum {MAX_DEGREE}")]
    DegreeCap(usize),
    #[error("group order exceeds {0}")]
    OrderCap(usize),
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
}

/// A permutation of `{1..n}`. Stored 0-based; displayed in cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(PermError::DegreeCap(n));
        }
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(PermError::NotBijection(n));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&i| (i - 1) as u8).collect() })
    }

    /// From disjoint-or-not cycles of 1-based points, composed left to right
    /// as functions (`cycles[0] ∘ cycles[1] ∘ …`).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if n > MAX_DEGREE {
            return Err(PermError::DegreeCap(n));
        }
        let mut p = Permutation::identity(n);
        for c in cycles.iter().rev() {
            let mut cyc = Permutation::identity(n);
            let mut seen = HashSet::new();
            for (k, &a) in c.iter().enumerate() {
                if a == 0 || a > n || !seen.insert(a) {
                    return Err(PermError::NotBijection(n));
                }
                cyc.images[a - 1] = (c[(k + 1) % c.len()] - 1) as u8;
            }
            p = cyc.compose(&p);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Nontrivial cycles, each starting at its smallest point, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.images[s] as usize == s {
                continue;
            }
            let mut c = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i + 1);
                i = self.images[i] as usize;
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A subgroup of `S_n` with its full (sorted) element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

/// Breadth-first closure of `gens` inside `S_n`.
pub fn closure(n: usize, gens: &[Permutation]) -> Result<PermGroup, PermError> {
    if n > MAX_DEGREE {
        return Err(PermError::DegreeCap(n));
    }
    for g in gens {
        if g.degree() != n {
            return Err(PermError::DegreeMismatch(n, g.degree()));
        }
    }
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(a) = queue.pop_front() {
        for g in gens {
            let b = a.compose(g);
            if seen.insert(b.clone()) {
                if seen.len() > ORDER_CAP {
                    return Err(PermError::OrderCap(ORDER_CAP));
                }
                queue.push_back(b);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    Ok(PermGroup { degree: n, generators: gens.to_vec(), elements })
}

impl PermGroup {
    pub fn trivial(n: usize) -> Self {
        PermGroup { degree: n, generators: Vec::new(), elements: vec![Permutation::identity(n)] }
    }

    /// The full symmetric group, generated by `(1 2)` and `(1 2 … n)`.
    pub fn symmetric(n: usize) -> Result<Self, PermError> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![1, 2]])?);
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(1..=n).collect()])?);
        }
        closure(n, &gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in increasing lexicographic order of their images; the
    /// identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.elements.iter().all(|h| g.contains(h))
    }

    /// `{g ∈ self : g H g⁻¹ = H}`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup, PermError> {
        if !h.is_subgroup_of(self) {
            return Err(PermError::NotSubgroup);
        }
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|g| {
                let gi = g.inverse();
                h.elements.iter().all(|x| h.contains(&g.compose(x).compose(&gi)))
            })
            .cloned()
            .collect();
        // the normalizer is generated by its own elements; keep the list as generators
        Ok(PermGroup { degree: self.degree, generators: elements.clone(), elements })
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        self.is_subgroup_of(g)
            && g.elements.iter().all(|x| {
                let xi = x.inverse();
                self.generators_or_elements().iter().all(|h| self.contains(&x.compose(h).compose(&xi)))
            })
    }

    fn generators_or_elements(&self) -> &[Permutation] {
        if self.generators.is_empty() && self.order() > 1 {
            &self.elements
        } else if self.generators.is_empty() {
            &[]
        } else {
            &self.generators
        }
    }

    /// Coset table of `self / h`, cosets labelled by their lexicographically
    /// smallest element.
    pub fn quotient(&self, h: &PermGroup) -> Result<AbstractGroup, PermError> {
        if !h.is_subgroup_of(self) {
            return Err(PermError::NotSubgroup);
        }
        if !h.is_normal_in(self) {
            return Err(PermError::NotNormal);
        }
        let mut coset_of: HashMap<&Permutation, usize> = HashMap::new();
        let mut reps: Vec<Permutation> = Vec::new();
        // elements are sorted, so the first unseen element is its coset's minimum
        for g in &self.elements {
            if coset_of.contains_key(g) {
                continue;
            }
            let idx = reps.len();
            reps.push(g.clone());
            for x in &h.elements {
                let gx = g.compose(x);
                let key = &self.elements[self.index_of(&gx).expect("closed")];
                coset_of.insert(key, idx);
            }
        }
        let table = reps
            .iter()
            .map(|a| reps.iter().map(|b| coset_of[&a.compose(b)]).collect())
            .collect();
        let labels = reps.iter().map(|r| r.to_string()).collect();
        Ok(AbstractGroup::from_table_unchecked(table, labels))
    }

    /// Composition table over the sorted element list.
    pub fn to_abstract(&self) -> AbstractGroup {
        let table = self
            .elements
            .iter()
            .map(|a| {
                self.elements
                    .iter()
                    .map(|b| self.index_of(&a.compose(b)).expect("closed"))
                    .collect()
            })
            .collect();
        let labels = self.elements.iter().map(|p| p.to_string()).collect();
        AbstractGroup::from_table_unchecked(table, labels)
    }
}

/// The quotient `N/H` of the normalizer of `H` in `G` by `H`.
pub fn aut_group_via_normalizer(g: &PermGroup, h: &PermGroup) -> Result<AbstractGroup, PermError> {
    g.normalizer(h)?.quotient(h)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("table is not square or has entries out of range")]
    Shape,
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
}

/// A finite group given by its composition table: `table[i][j]` is the index
/// of `elements[i] · elements[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractGroup {
    table: Vec<Vec<usize>>,
    labels: Vec<String>,
    identity: usize,
}

impl AbstractGroup {
    /// Checks the group axioms exhaustively.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self, TableError> {
        let m = table.len();
        if m == 0 || labels.len() != m || table.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m)) {
            return Err(TableError::Shape);
        }
        let e = (0..m)
            .find(|&e| (0..m).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(TableError::NoIdentity)?;
        for a in 0..m {
            if !(0..m).any(|b| table[a][b] == e && table[b][a] == e) {
                return Err(TableError::NoInverse(a));
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = table[a][b];
                for c in 0..m {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(TableError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(AbstractGroup { table, labels, identity: e })
    }

    pub(crate) fn from_table_unchecked(table: Vec<Vec<usize>>, labels: Vec<String>) -> Self {
        let m = table.len();
        let identity = (0..m).find(|&e| (0..m).all(|a| table[e][a] == a)).expect("identity");
        AbstractGroup { table, labels, identity }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    /// Sorted multiset of element orders.
    pub fn order_statistics(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }
}
