//! Finite topological spaces via the specialization preorder.
//!
//! A finite topology is stored as its minimal-open-set matrix: row `x` is the
//! smallest open set containing `x`, and a set is open exactly when it
//! contains the minimal open set of each of its points. Open families are
//! derived on demand, never stored. Products, coproducts and quotients are
//! relation computations on these matrices.

use crate::bitset::PointSet;
use crate::error::{Error, Result};

/// Default bound on the number of points of any constructed carrier.
pub const DEFAULT_SIZE_LIMIT: usize = 5000;

/// Default bound for brute-force homeomorphism search.
pub const DEFAULT_HOMEO_BOUND: usize = 6;

/// Beyond this many points the full open family is not enumerated.
const OPEN_FAMILY_BOUND: usize = 20;

/// A finite topological space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinSpace {
    labels: Vec<String>,
    upset: Vec<PointSet>,
}

/// Separation verdicts; on finite carriers `t1`, `hausdorff` and `discrete`
/// coincide, which is asserted rather than assumed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Separation {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub discrete: bool,
    pub indiscrete: bool,
    pub h_prime: bool,
}

/// A pair `(a, b)` witnessing failure of property (H'): every open set around
/// `witness` meets both the minimal open set of `a` and that of `b`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HPrimeViolation {
    pub a: usize,
    pub b: usize,
    pub witness: usize,
}

impl FinSpace {
    /// Builds a space from its minimal-open-set matrix, validating that the
    /// relation is reflexive and transitive.
    pub fn from_upset(labels: Vec<String>, upset: Vec<PointSet>) -> Result<FinSpace> {
        let n = labels.len();
        if upset.len() != n {
            return Err(Error::NotAPreorder(format!(
                "{} rows for {n} points",
                upset.len()
            )));
        }
        for (x, row) in upset.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::NotAPreorder(format!(
                    "row {x} has universe {} instead of {n}",
                    row.universe()
                )));
            }
            if !row.contains(x) {
                return Err(Error::NotAPreorder(format!("not reflexive at point {x}")));
            }
        }
        for (x, row) in upset.iter().enumerate() {
            for y in row.iter() {
                if !upset[y].is_subset(row) {
                    return Err(Error::NotAPreorder(format!(
                        "not transitive: {y} in minimal open of {x}, but minimal open of {y} is not contained in it"
                    )));
                }
            }
        }
        Ok(FinSpace { labels, upset })
    }

    /// Builds a space from a boolean matrix `rows[x][y] = (y lies in the
    /// minimal open set of x)`.
    pub fn from_upset_rows(labels: Vec<String>, rows: &[Vec<bool>]) -> Result<FinSpace> {
        let n = labels.len();
        let mut upset = Vec::with_capacity(n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NotAPreorder(format!(
                    "row of length {} for {n} points",
                    row.len()
                )));
            }
            let mut s = PointSet::empty(n);
            for (y, &b) in row.iter().enumerate() {
                if b {
                    s.insert(y);
                }
            }
            upset.push(s);
        }
        FinSpace::from_upset(labels, upset)
    }

    /// Builds a space from an explicit open-set family.
    ///
    /// The family must be a topology already: it has to contain the empty set
    /// and the full carrier and be closed under pairwise union and
    /// intersection (pairwise closure suffices on a finite family). The
    /// offending pair is reported otherwise.
    pub fn from_opens(labels: Vec<String>, opens: &[Vec<usize>]) -> Result<FinSpace> {
        let n = labels.len();
        let mut family: Vec<PointSet> = Vec::new();
        for open in opens {
            for &i in open {
                if i >= n {
                    return Err(Error::InvalidInput(format!(
                        "open set member {i} outside carrier of size {n}"
                    )));
                }
            }
            let s = PointSet::from_indices(n, open);
            if !family.contains(&s) {
                family.push(s);
            }
        }
        if !family.contains(&PointSet::empty(n)) {
            return Err(Error::NotATopology("missing the empty set".into()));
        }
        if !family.contains(&PointSet::full(n)) {
            return Err(Error::NotATopology("missing the full carrier".into()));
        }
        for a in &family {
            for b in &family {
                let u = a.union(b);
                if !family.contains(&u) {
                    return Err(Error::NotATopology(format!(
                        "union of {a:?} and {b:?} is missing"
                    )));
                }
                let i = a.intersection(b);
                if !family.contains(&i) {
                    return Err(Error::NotATopology(format!(
                        "intersection of {a:?} and {b:?} is missing"
                    )));
                }
            }
        }
        // Minimal open set of each point: intersection of all opens containing it.
        let mut upset = Vec::with_capacity(n);
        for x in 0..n {
            let mut min = PointSet::full(n);
            for s in &family {
                if s.contains(x) {
                    min.intersect_with(s);
                }
            }
            upset.push(min);
        }
        FinSpace::from_upset(labels, upset)
    }

    pub fn point_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// The smallest open set containing `x`.
    pub fn min_open(&self, x: usize) -> &PointSet {
        &self.upset[x]
    }

    pub fn upset_rows(&self) -> &[PointSet] {
        &self.upset
    }

    /// A set is open iff it contains the minimal open set of each member.
    pub fn is_open(&self, s: &PointSet) -> bool {
        s.iter().all(|x| self.upset[x].is_subset(s))
    }

    /// Enumerates the exact open-set family, ordered by size then membership.
    ///
    /// This walks all subsets of the carrier and is only available on small
    /// spaces; larger spaces are fully described by the minimal-open basis.
    pub fn open_sets(&self) -> Result<Vec<PointSet>> {
        let n = self.point_count();
        if n > OPEN_FAMILY_BOUND {
            return Err(Error::SizeLimit {
                needed: n,
                limit: OPEN_FAMILY_BOUND,
            });
        }
        let mut family = Vec::new();
        for mask in 0..(1u64 << n) {
            let s = PointSet::from_mask(n, mask);
            if self.is_open(&s) {
                family.push(s);
            }
        }
        family.sort_by_key(|s| (s.size(), s.to_indices()));
        Ok(family)
    }

    /// Topological closure: every point whose minimal open set meets `s`.
    pub fn closure(&self, s: &PointSet) -> PointSet {
        let n = self.point_count();
        let mut out = PointSet::empty(n);
        for x in 0..n {
            if !self.upset[x].is_disjoint(s) {
                out.insert(x);
            }
        }
        out
    }

    pub fn separation(&self) -> Separation {
        let n = self.point_count();
        let mut t0 = true;
        let mut t1 = true;
        let mut hausdorff = true;
        let mut indiscrete = true;
        let full = PointSet::full(n);
        for x in 0..n {
            if self.upset[x].size() != 1 {
                t1 = false;
            }
            if self.upset[x] != full {
                indiscrete = false;
            }
            for y in (x + 1)..n {
                if self.upset[x].contains(y) && self.upset[y].contains(x) {
                    t0 = false;
                }
                if !self.upset[x].is_disjoint(&self.upset[y]) {
                    hausdorff = false;
                }
            }
        }
        if n <= 1 {
            indiscrete = true;
        }
        let h_prime = self.h_prime_violations().is_empty();
        debug_assert_eq!(t1, hausdorff, "finite spaces: T1 iff Hausdorff");
        Separation {
            t0,
            t1,
            hausdorff,
            discrete: t1,
            indiscrete,
            h_prime,
        }
    }

    /// All pairs violating property (H'), each with a witnessing point.
    ///
    /// Property (H') asks, for each pair `a != b`, for opens `U` around `a`
    /// and `V` around `b` such that every point has a neighborhood missing
    /// `U` or `V`. Shrinking `U`, `V` and the neighborhood only helps, so on
    /// a finite space it suffices to quantify over minimal open sets.
    pub fn h_prime_violations(&self) -> Vec<HPrimeViolation> {
        let n = self.point_count();
        let mut out = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                let witness = (0..n).find(|&y| {
                    !self.upset[y].is_disjoint(&self.upset[a])
                        && !self.upset[y].is_disjoint(&self.upset[b])
                });
                if let Some(y) = witness {
                    out.push(HPrimeViolation { a, b, witness: y });
                }
            }
        }
        out
    }

    /// Path components, computed as the connected components of the
    /// comparability graph of the specialization relation. A comparability
    /// edge `x <= y` is realized by an explicit two-point path, so
    /// order-connected components and path components agree on finite spaces.
    pub fn path_components(&self) -> Partition {
        let n = self.point_count();
        let mut assignment = vec![usize::MAX; n];
        let mut blocks: Vec<PointSet> = Vec::new();
        for start in 0..n {
            if assignment[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut block = PointSet::empty(n);
            let mut stack = vec![start];
            assignment[start] = id;
            block.insert(start);
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if assignment[y] == usize::MAX
                        && (self.upset[x].contains(y) || self.upset[y].contains(x))
                    {
                        assignment[y] = id;
                        block.insert(y);
                        stack.push(y);
                    }
                }
            }
            blocks.push(block);
        }
        Partition {
            universe: n,
            blocks,
            assignment,
        }
    }

    /// The path-component space with its projection.
    pub fn pi0(&self) -> (FinSpace, FinMap) {
        let components = self.path_components();
        self.quotient(&components)
            .expect("component partition is always valid")
    }

    /// Quotient by a partition: the block space carries the final topology
    /// and the projection is a quotient map by construction.
    pub fn quotient(&self, p: &Partition) -> Result<(FinSpace, FinMap)> {
        let n = self.point_count();
        if p.universe != n {
            return Err(Error::InvalidPartition(format!(
                "partition of {} points applied to space with {n}",
                p.universe
            )));
        }
        let labels: Vec<String> = p
            .blocks
            .iter()
            .map(|b| {
                let members: Vec<&str> = b.iter().map(|i| self.label(i)).collect();
                format!("{{{}}}", members.join(","))
            })
            .collect();
        let space = final_topology_on(self, &p.assignment, labels)?;
        let map = FinMap::new(self.clone(), space.clone(), p.assignment.clone())?;
        Ok((space, map))
    }
}

/// Final topology on a labelled codomain carrier along a surjective table.
///
/// Saturated open sets of the domain biject with opens of the final topology,
/// so the minimal open set of `z` is the image of the smallest saturated open
/// set containing its fiber. That set is computed as graph reachability: `z`
/// reaches `w` when the minimal open set of some point over `z` meets the
/// fiber of `w`; the reachability closure of `z` is its minimal open set.
fn final_topology_on(domain: &FinSpace, table: &[usize], labels: Vec<String>) -> Result<FinSpace> {
    let m = labels.len();
    let mut seen = vec![false; m];
    for &z in table {
        if z >= m {
            return Err(Error::InvalidMap(format!(
                "value {z} outside codomain of size {m}"
            )));
        }
        seen[z] = true;
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::NotSurjective);
    }
    let mut edge: Vec<PointSet> = vec![PointSet::empty(m); m];
    for (x, row) in domain.upset.iter().enumerate() {
        let target = &mut edge[table[x]];
        for y in row.iter() {
            target.insert(table[y]);
        }
    }
    transitive_closure(&mut edge);
    FinSpace::from_upset(labels, edge)
}

/// In-place reflexive-transitive closure of a relation given as bitset rows.
fn transitive_closure(rows: &mut [PointSet]) {
    let m = rows.len();
    for k in 0..m {
        let row_k = rows[k].clone();
        for i in 0..m {
            if i != k && rows[i].contains(k) {
                rows[i].union_with(&row_k);
            }
        }
    }
}

/// A partition of `{0, .., universe-1}` into disjoint nonempty blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    universe: usize,
    blocks: Vec<PointSet>,
    assignment: Vec<usize>,
}

impl Partition {
    pub fn from_blocks(universe: usize, blocks: Vec<Vec<usize>>) -> Result<Partition> {
        let mut assignment = vec![usize::MAX; universe];
        let mut sets = Vec::with_capacity(blocks.len());
        for (id, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {id} is empty")));
            }
            let mut s = PointSet::empty(universe);
            for &i in block {
                if i >= universe {
                    return Err(Error::InvalidPartition(format!(
                        "point {i} outside carrier of size {universe}"
                    )));
                }
                if assignment[i] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "point {i} appears in more than one block"
                    )));
                }
                assignment[i] = id;
                s.insert(i);
            }
            sets.push(s);
        }
        if let Some(missing) = assignment.iter().position(|&a| a == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "point {missing} is not covered"
            )));
        }
        Ok(Partition {
            universe,
            blocks: sets,
            assignment,
        })
    }

    /// Partition by the fibers of `key`, blocks ordered by block id.
    ///
    /// `assignment[i]` must be a block id below `block_count`; every block id
    /// must be hit.
    pub fn from_assignment(assignment: Vec<usize>, block_count: usize) -> Result<Partition> {
        let universe = assignment.len();
        let mut blocks = vec![PointSet::empty(universe); block_count];
        for (i, &b) in assignment.iter().enumerate() {
            if b >= block_count {
                return Err(Error::InvalidPartition(format!(
                    "block id {b} out of range for {block_count} blocks"
                )));
            }
            blocks[b].insert(i);
        }
        if let Some(empty) = blocks.iter().position(|b| b.is_empty()) {
            return Err(Error::InvalidPartition(format!("block {empty} is empty")));
        }
        Ok(Partition {
            universe,
            blocks,
            assignment,
        })
    }

    pub fn identity(universe: usize) -> Partition {
        Partition::from_assignment((0..universe).collect(), universe).unwrap()
    }

    pub fn single_block(universe: usize) -> Partition {
        assert!(universe > 0);
        Partition::from_assignment(vec![0; universe], 1).unwrap()
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, id: usize) -> &PointSet {
        &self.blocks[id]
    }

    pub fn blocks(&self) -> &[PointSet] {
        &self.blocks
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.assignment[point]
    }
}

/// A function between finite spaces, stored as a table of codomain indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinMap {
    domain: FinSpace,
    codomain: FinSpace,
    table: Vec<usize>,
}

impl FinMap {
    pub fn new(domain: FinSpace, codomain: FinSpace, table: Vec<usize>) -> Result<FinMap> {
        if table.len() != domain.point_count() {
            return Err(Error::InvalidMap(format!(
                "table of length {} for domain of size {}",
                table.len(),
                domain.point_count()
            )));
        }
        let m = codomain.point_count();
        for &v in &table {
            if v >= m {
                return Err(Error::InvalidMap(format!(
                    "value {v} outside codomain of size {m}"
                )));
            }
        }
        Ok(FinMap {
            domain,
            codomain,
            table,
        })
    }

    pub fn identity(space: &FinSpace) -> FinMap {
        FinMap {
            domain: space.clone(),
            codomain: space.clone(),
            table: (0..space.point_count()).collect(),
        }
    }

    pub fn domain(&self) -> &FinSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &FinSpace {
        &self.codomain
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn image_of(&self, s: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.codomain.point_count());
        for x in s.iter() {
            out.insert(self.table[x]);
        }
        out
    }

    pub fn preimage_of(&self, s: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.domain.point_count());
        for (x, &v) in self.table.iter().enumerate() {
            if s.contains(v) {
                out.insert(x);
            }
        }
        out
    }

    /// Continuity via preorder preservation: the image of each minimal open
    /// set lands in the minimal open set of the image. On finite spaces this
    /// is equivalent to openness of all preimages, which the tests check
    /// against the literal preimage oracle.
    pub fn is_continuous(&self) -> bool {
        self.table.iter().enumerate().all(|(x, &fx)| {
            self.domain.upset[x]
                .iter()
                .all(|y| self.codomain.upset[fx].contains(self.table[y]))
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain.point_count()];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.iter().all(|&s| s)
    }

    /// The final topology induced on the codomain carrier.
    pub fn final_topology(&self) -> Result<FinSpace> {
        final_topology_on(&self.domain, &self.table, self.codomain.labels.clone())
    }

    /// Decides whether the codomain carries exactly the final topology, by
    /// recomputing that topology and comparing minimal-open matrices.
    pub fn is_quotient_map(&self) -> Result<bool> {
        if !self.is_surjective() {
            return Err(Error::NotSurjective);
        }
        if !self.is_continuous() {
            return Err(Error::NotContinuous);
        }
        let fin = self.final_topology()?;
        Ok(fin.upset == self.codomain.upset)
    }

    /// The induced map on path-component spaces. Requires continuity, which
    /// guarantees blocks map into blocks.
    pub fn induced_on_components(&self) -> Result<FinMap> {
        if !self.is_continuous() {
            return Err(Error::NotContinuous);
        }
        let (dom_pi0, dom_proj) = self.domain.pi0();
        let (cod_pi0, cod_proj) = self.codomain.pi0();
        let mut table = vec![usize::MAX; dom_pi0.point_count()];
        for x in 0..self.domain.point_count() {
            let block = dom_proj.apply(x);
            let target = cod_proj.apply(self.table[x]);
            if table[block] == usize::MAX {
                table[block] = target;
            } else if table[block] != target {
                return Err(Error::InvalidMap(
                    "image of a path component meets two components".into(),
                ));
            }
        }
        FinMap::new(dom_pi0, cod_pi0, table)
    }
}

pub(crate) fn tuple_index(base: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

pub(crate) fn tuple_digits(base: usize, len: usize, mut index: usize) -> Vec<usize> {
    let mut digits = vec![0; len];
    for slot in digits.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    digits
}

/// Binary product with the product topology; minimal opens multiply.
pub fn product(a: &FinSpace, b: &FinSpace, limit: usize) -> Result<FinSpace> {
    let n = a.point_count().saturating_mul(b.point_count());
    if n > limit {
        return Err(Error::SizeLimit { needed: n, limit });
    }
    let bs = b.point_count();
    let mut labels = Vec::with_capacity(n);
    let mut upset = Vec::with_capacity(n);
    for x in 0..a.point_count() {
        for y in 0..bs {
            labels.push(format!("({},{})", a.label(x), b.label(y)));
            let mut row = PointSet::empty(n);
            for u in a.upset[x].iter() {
                for v in b.upset[y].iter() {
                    row.insert(u * bs + v);
                }
            }
            upset.push(row);
        }
    }
    FinSpace::from_upset(labels, upset)
}

/// Every tuple picking one entry from each list, as flattened indices
/// `tuple_index(base, picks)`.
fn cartesian_indices(base: usize, lists: &[Vec<usize>], out: &mut PointSet) {
    let mut picks = vec![0usize; lists.len()];
    loop {
        let tuple: Vec<usize> = lists.iter().zip(&picks).map(|(l, &c)| l[c]).collect();
        out.insert(tuple_index(base, &tuple));
        let mut pos = lists.len();
        while pos > 0 {
            pos -= 1;
            picks[pos] += 1;
            if picks[pos] < lists[pos].len() {
                break;
            }
            picks[pos] = 0;
            if pos == 0 {
                return;
            }
        }
        if lists.is_empty() {
            return;
        }
    }
}

/// `n`-fold power with the product topology; `power(a, 0)` is a point.
pub fn power(a: &FinSpace, n: usize, limit: usize) -> Result<FinSpace> {
    let k = a.point_count();
    let size = k.checked_pow(n as u32).unwrap_or(usize::MAX);
    if size > limit {
        return Err(Error::SizeLimit {
            needed: size,
            limit,
        });
    }
    let min_open_indices: Vec<Vec<usize>> = a.upset.iter().map(|s| s.to_indices()).collect();
    let mut labels = Vec::with_capacity(size);
    let mut upset = Vec::with_capacity(size);
    for index in 0..size {
        let digits = tuple_digits(k, n, index);
        let parts: Vec<&str> = digits.iter().map(|&d| a.label(d)).collect();
        labels.push(format!("({})", parts.join(",")));
        let mut row = PointSet::empty(size);
        let lists: Vec<Vec<usize>> = digits
            .iter()
            .map(|&d| min_open_indices[d].clone())
            .collect();
        cartesian_indices(k, &lists, &mut row);
        upset.push(row);
    }
    FinSpace::from_upset(labels, upset)
}

/// Disjoint union; a set is open iff both restrictions are open.
pub fn coproduct(a: &FinSpace, b: &FinSpace) -> FinSpace {
    let na = a.point_count();
    let n = na + b.point_count();
    let mut labels = Vec::with_capacity(n);
    let mut upset = Vec::with_capacity(n);
    for x in 0..na {
        labels.push(a.label(x).to_string());
        let mut row = PointSet::empty(n);
        for y in a.upset[x].iter() {
            row.insert(y);
        }
        upset.push(row);
    }
    for x in 0..b.point_count() {
        labels.push(b.label(x).to_string());
        let mut row = PointSet::empty(n);
        for y in b.upset[x].iter() {
            row.insert(na + y);
        }
        upset.push(row);
    }
    FinSpace::from_upset(labels, upset).expect("coproduct of preorders is a preorder")
}

/// Searches for a bijection preserving the open-set family in both
/// directions, equivalently one matching minimal-open rows exactly.
/// Brute force with minimal-open-size pruning; carriers above `bound` error.
pub fn are_homeomorphic(a: &FinSpace, b: &FinSpace, bound: usize) -> Result<Option<Vec<usize>>> {
    let n = a.point_count();
    if n.max(b.point_count()) > bound {
        return Err(Error::SizeLimit {
            needed: n.max(b.point_count()),
            limit: bound,
        });
    }
    if n != b.point_count() {
        return Ok(None);
    }
    let down_size = |s: &FinSpace, x: usize| (0..n).filter(|&y| s.upset[y].contains(x)).count();
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for x in 0..n {
        let row: Vec<usize> = (0..n)
            .filter(|&y| {
                a.upset[x].size() == b.upset[y].size() && down_size(a, x) == down_size(b, y)
            })
            .collect();
        if row.is_empty() {
            return Ok(None);
        }
        candidates.push(row);
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn search(
        x: usize,
        n: usize,
        a: &FinSpace,
        b: &FinSpace,
        candidates: &[Vec<usize>],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if x == n {
            return true;
        }
        for &y in &candidates[x] {
            if used[y] {
                continue;
            }
            let consistent = (0..x).all(|prev| {
                let py = perm[prev];
                a.upset[x].contains(prev) == b.upset[y].contains(py)
                    && a.upset[prev].contains(x) == b.upset[py].contains(y)
            });
            if !consistent {
                continue;
            }
            perm[x] = y;
            used[y] = true;
            if search(x + 1, n, a, b, candidates, perm, used) {
                return true;
            }
            perm[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    if search(0, n, a, b, &candidates, &mut perm, &mut used) {
        debug_assert!((0..n).all(|x| {
            (0..n).all(|y| a.upset[x].contains(y) == b.upset[perm[x]].contains(perm[y]))
        }));
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}
