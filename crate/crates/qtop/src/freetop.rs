//! Truncated free quasitopological groups over a finite alphabet space.
//!
//! For an alphabet space `Y` and a level `n`, the unreduced monoid space
//! `M_n(Y)` is the coproduct over `i <= n` of the `i`-th powers of the signed
//! double `Y + Y'`. Reduced words of length at most `n` form the carrier of
//! the truncated group `F_n(Y)`; its topology is the final topology of word
//! reduction from `M_n(Y)` (the reduction topology), or of "apply a quotient
//! map letterwise, then reduce" (the refined topology). The infinite groups
//! are never materialized: every statement about them is checked level by
//! level, and reports always name the level.

use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::finspace::{power, product, FinMap, FinSpace, Partition};
use crate::words::{enumerate, Letter, Sign, Word};

/// How the topology on a truncated carrier was produced.
#[derive(Clone, PartialEq, Debug)]
pub enum Provenance {
    /// Final topology of the reduction map from the unreduced monoid space.
    ReductionQuotient,
    /// Final topology of "apply `q` letterwise, then reduce" from the
    /// unreduced monoid space over the domain of `q`.
    RefinedQuotient(FinMap),
    /// Subspace topology induced from the group at the recorded level.
    SubspaceOf(usize),
}

/// Reduced words of length at most `level` carrying a finite topology.
#[derive(Clone, Debug)]
pub struct TruncatedGroup {
    alphabet_space: FinSpace,
    level: usize,
    carrier: Vec<Word>,
    topology: FinSpace,
    provenance: Provenance,
}

impl TruncatedGroup {
    pub fn alphabet_space(&self) -> &FinSpace {
        &self.alphabet_space
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn carrier(&self) -> &[Word] {
        &self.carrier
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.carrier[i]
    }

    /// Index of a word in the carrier (the carrier is length-lex sorted).
    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.carrier.binary_search(w).ok()
    }

    pub fn topology(&self) -> &FinSpace {
        &self.topology
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn identity_index(&self) -> usize {
        0
    }
}

/// Labels `a`, then `a'`, for the two copies of the alphabet in `Y + Y'`.
pub fn signed_double(y: &FinSpace) -> FinSpace {
    let n = y.point_count();
    let mut labels = Vec::with_capacity(2 * n);
    let mut upset = Vec::with_capacity(2 * n);
    for copy in 0..2 {
        for x in 0..n {
            labels.push(if copy == 0 {
                y.label(x).to_string()
            } else {
                format!("{}'", y.label(x))
            });
            let mut row = PointSet::empty(2 * n);
            for v in y.min_open(x).iter() {
                row.insert(copy * n + v);
            }
            upset.push(row);
        }
    }
    FinSpace::from_upset(labels, upset).expect("signed double of a preorder is a preorder")
}

/// The unreduced monoid space truncated at length `n`: all words of length
/// at most `n` with the coproduct-of-product-powers topology, labelled and
/// ordered by the word enumeration.
pub fn build_unreduced_space(
    y: &FinSpace,
    n: usize,
    limit: usize,
) -> Result<(FinSpace, Vec<Word>)> {
    let k = y.point_count();
    let words = enumerate(k, n, false, limit)?;
    let total = words.len();
    let labels: Vec<String> = words.iter().map(|w| w.display(y.labels())).collect();
    let mut upset = Vec::with_capacity(total);
    for (i, w) in words.iter().enumerate() {
        let mut row = PointSet::empty(total);
        fill_product_open(y, w, &words, &mut row);
        debug_assert!(row.contains(i));
        upset.push(row);
    }
    let space = FinSpace::from_upset(labels, upset)?;
    Ok((space, words))
}

/// Minimal open set of `w` inside the unreduced space: words with the same
/// sign pattern whose letters run over the factor minimal opens.
fn fill_product_open(y: &FinSpace, w: &Word, sorted_words: &[Word], row: &mut PointSet) {
    let k = y.point_count();
    let lists: Vec<Vec<usize>> = w
        .letters()
        .iter()
        .map(|l| y.min_open(l.index).to_indices())
        .collect();
    let mut picks = vec![0usize; lists.len()];
    loop {
        let letters: Vec<Letter> = (0..w.len())
            .map(|j| Letter::new(lists[j][picks[j]], w.letters()[j].sign))
            .collect();
        let v = Word::from_letters(k, letters).expect("letters stay in range");
        let idx = sorted_words
            .binary_search(&v)
            .expect("neighbor word is enumerated");
        row.insert(idx);
        let mut pos = lists.len();
        let mut done = true;
        while pos > 0 {
            pos -= 1;
            picks[pos] += 1;
            if picks[pos] < lists[pos].len() {
                done = false;
                break;
            }
            picks[pos] = 0;
        }
        if done {
            return;
        }
    }
}

/// `F_n(Y)` with the reduction topology: the quotient of the unreduced space
/// along the fibers of word reduction.
pub fn build_reduced_group(y: &FinSpace, n: usize, limit: usize) -> Result<TruncatedGroup> {
    let (m_space, m_words) = build_unreduced_space(y, n, limit)?;
    let carrier = enumerate(y.point_count(), n, true, limit)?;
    let assignment: Vec<usize> = m_words
        .iter()
        .map(|w| {
            carrier
                .binary_search(&w.reduce())
                .expect("reduction of a bounded word is enumerated")
        })
        .collect();
    let partition = Partition::from_assignment(assignment, carrier.len())?;
    let (block_space, _) = m_space.quotient(&partition)?;
    let labels: Vec<String> = carrier.iter().map(|w| w.display(y.labels())).collect();
    let topology = FinSpace::from_upset(labels, block_space.upset_rows().to_vec())?;
    Ok(TruncatedGroup {
        alphabet_space: y.clone(),
        level: n,
        carrier,
        topology,
        provenance: Provenance::ReductionQuotient,
    })
}

/// `F_n` over the codomain of `q` with the refined topology: the final
/// topology of "apply `q` letterwise, then reduce" from the unreduced space
/// over the domain of `q`. Requires `q` to be a quotient map.
pub fn build_refined_group(q: &FinMap, n: usize, limit: usize) -> Result<TruncatedGroup> {
    if !q.is_quotient_map()? {
        return Err(Error::NotQuotient);
    }
    let x = q.domain();
    let y = q.codomain();
    let (m_space, m_words) = build_unreduced_space(x, n, limit)?;
    let carrier = enumerate(y.point_count(), n, true, limit)?;
    let assignment: Vec<usize> = m_words
        .iter()
        .map(|w| {
            let mapped = Word::from_letters(
                y.point_count(),
                w.letters()
                    .iter()
                    .map(|l| Letter::new(q.apply(l.index), l.sign))
                    .collect(),
            )
            .expect("mapped letters stay in range");
            carrier
                .binary_search(&mapped.reduce())
                .expect("reduction of a bounded word is enumerated")
        })
        .collect();
    let partition = Partition::from_assignment(assignment, carrier.len())?;
    let (block_space, _) = m_space.quotient(&partition)?;
    let labels: Vec<String> = carrier.iter().map(|w| w.display(y.labels())).collect();
    let topology = FinSpace::from_upset(labels, block_space.upset_rows().to_vec())?;
    Ok(TruncatedGroup {
        alphabet_space: y.clone(),
        level: n,
        carrier,
        topology,
        provenance: Provenance::RefinedQuotient(q.clone()),
    })
}

/// Set-containment comparison of two topologies on the same carrier.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TopologyOrder {
    Equal,
    /// The first topology has strictly more open sets.
    StrictlyFiner,
    /// The first topology has strictly fewer open sets.
    StrictlyCoarser,
    Incomparable,
}

pub fn compare_topologies(a: &TruncatedGroup, b: &TruncatedGroup) -> Result<TopologyOrder> {
    if a.carrier != b.carrier {
        return Err(Error::CarrierMismatch(format!(
            "levels {} and {} over alphabets of size {} and {}",
            a.level,
            b.level,
            a.alphabet_space.point_count(),
            b.alphabet_space.point_count()
        )));
    }
    // Finer means smaller minimal opens at every point.
    let a_finer =
        (0..a.carrier.len()).all(|i| a.topology.min_open(i).is_subset(b.topology.min_open(i)));
    let b_finer =
        (0..a.carrier.len()).all(|i| b.topology.min_open(i).is_subset(a.topology.min_open(i)));
    Ok(match (a_finer, b_finer) {
        (true, true) => TopologyOrder::Equal,
        (true, false) => TopologyOrder::StrictlyFiner,
        (false, true) => TopologyOrder::StrictlyCoarser,
        (false, false) => TopologyOrder::Incomparable,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// The translation `v -> reduce(wv)` (or `vw`) from `g` into `target`, which
/// must be the compatible group at level `g.level + |w|`.
pub fn translation_map(
    g: &TruncatedGroup,
    target: &TruncatedGroup,
    w: &Word,
    side: Side,
) -> Result<FinMap> {
    if target.alphabet_space != g.alphabet_space {
        return Err(Error::CarrierMismatch("different alphabet spaces".into()));
    }
    if target.level != g.level + w.len() {
        return Err(Error::CarrierMismatch(format!(
            "target level {} differs from {} + |w| = {}",
            target.level,
            g.level,
            g.level + w.len()
        )));
    }
    if !compatible_provenance(&g.provenance, &target.provenance) {
        return Err(Error::CarrierMismatch(
            "groups come from different constructions".into(),
        ));
    }
    let mut table = Vec::with_capacity(g.carrier.len());
    for v in &g.carrier {
        let glued = match side {
            Side::Left => w.concat(v)?,
            Side::Right => v.concat(w)?,
        };
        let idx = target
            .word_index(&glued.reduce())
            .ok_or_else(|| Error::CarrierMismatch("translated word not in target".into()))?;
        table.push(idx);
    }
    FinMap::new(g.topology.clone(), target.topology.clone(), table)
}

fn compatible_provenance(a: &Provenance, b: &Provenance) -> bool {
    matches!(
        (a, b),
        (Provenance::ReductionQuotient, Provenance::ReductionQuotient)
            | (
                Provenance::RefinedQuotient(_),
                Provenance::RefinedQuotient(_)
            )
            | (Provenance::SubspaceOf(_), Provenance::SubspaceOf(_))
    )
}

/// The involution `v -> v^{-1}` as a self-map of the level carrier.
/// Inverses of reduced words are reduced, so the carrier is stable.
pub fn inversion_map(g: &TruncatedGroup) -> FinMap {
    let table: Vec<usize> = g
        .carrier
        .iter()
        .map(|v| {
            g.word_index(&v.invert())
                .expect("carrier is inversion-closed")
        })
        .collect();
    FinMap::new(g.topology.clone(), g.topology.clone(), table)
        .expect("inversion is a carrier bijection")
}

/// The multiplication table `F_n x F_m -> F_{n+m}` as a map from the product
/// topology; the three groups must share alphabet space and construction.
pub fn multiplication_map(
    gn: &TruncatedGroup,
    gm: &TruncatedGroup,
    gnm: &TruncatedGroup,
    limit: usize,
) -> Result<FinMap> {
    if gn.alphabet_space != gm.alphabet_space || gn.alphabet_space != gnm.alphabet_space {
        return Err(Error::CarrierMismatch("different alphabet spaces".into()));
    }
    if gnm.level != gn.level + gm.level {
        return Err(Error::CarrierMismatch(format!(
            "target level {} differs from {} + {}",
            gnm.level, gn.level, gm.level
        )));
    }
    let dom = product(&gn.topology, &gm.topology, limit)?;
    let m_count = gm.carrier.len();
    let mut table = Vec::with_capacity(gn.carrier.len() * m_count);
    for u in &gn.carrier {
        for v in &gm.carrier {
            let idx = gnm
                .word_index(&u.concat(v)?.reduce())
                .ok_or_else(|| Error::CarrierMismatch("product word not in target".into()))?;
            table.push(idx);
        }
    }
    FinMap::new(dom, gnm.topology.clone(), table)
}

/// True iff `F_n x F_m -> F_{n+m}` is jointly continuous for the reduction
/// topologies over `y`.
pub fn multiplication_continuous(y: &FinSpace, n: usize, m: usize, limit: usize) -> Result<bool> {
    let gn = build_reduced_group(y, n, limit)?;
    let gm = build_reduced_group(y, m, limit)?;
    let gnm = build_reduced_group(y, n + m, limit)?;
    Ok(multiplication_map(&gn, &gm, &gnm, limit)?.is_continuous())
}

/// T1 at this level: every singleton is closed.
pub fn t1_at_level(g: &TruncatedGroup) -> bool {
    g.topology.separation().t1
}

/// Exact topological closure of a set of carrier words.
pub fn closure_of(g: &TruncatedGroup, words: &[Word]) -> Result<Vec<Word>> {
    let mut s = PointSet::empty(g.carrier.len());
    for w in words {
        let idx = g.word_index(w).ok_or_else(|| {
            Error::CarrierMismatch(format!("word of length {} not in carrier", w.len()))
        })?;
        s.insert(idx);
    }
    Ok(g.topology
        .closure(&s)
        .iter()
        .map(|i| g.carrier[i].clone())
        .collect())
}

/// A witness that the level is not T1: a pair `(v, w)`, `v != w`, where every
/// open set containing `w` also contains `v`.
pub fn non_t1_witness(g: &TruncatedGroup) -> Option<(Word, Word)> {
    for (w_idx, row) in g.topology.upset_rows().iter().enumerate() {
        for v_idx in row.iter() {
            if v_idx != w_idx {
                return Some((g.carrier[v_idx].clone(), g.carrier[w_idx].clone()));
            }
        }
    }
    None
}

/// Verdict for the canonical map `Y^n -> F_N(Y)` sending a tuple to its
/// (automatically reduced) positive word.
#[derive(Clone, PartialEq, Debug)]
pub struct SigmaReport {
    /// The image is closed in the level-`N` topology.
    pub closed: bool,
    /// The corestriction is a homeomorphism onto the image with the
    /// subspace topology.
    pub embedding: bool,
    /// A word outside the image lying in its closure, when not closed.
    pub closure_witness: Option<Word>,
}

pub fn sigma_embedding_report(
    y: &FinSpace,
    n: usize,
    big_level: usize,
    limit: usize,
) -> Result<SigmaReport> {
    if n == 0 || big_level < n {
        return Err(Error::InvalidInput(format!(
            "need 1 <= n <= N, got n = {n}, N = {big_level}"
        )));
    }
    let g = build_reduced_group(y, big_level, limit)?;
    let dom = power(y, n, limit)?;
    let k = y.point_count();
    let mut table = Vec::with_capacity(dom.point_count());
    for index in 0..dom.point_count() {
        let digits = crate::finspace::tuple_digits(k, n, index);
        let word = Word::from_letters(
            k,
            digits.iter().map(|&d| Letter::new(d, Sign::Plus)).collect(),
        )?;
        debug_assert!(word.is_reduced());
        table.push(
            g.word_index(&word)
                .expect("positive words are in the carrier"),
        );
    }
    let sigma = FinMap::new(dom.clone(), g.topology.clone(), table.clone())?;
    let image = sigma.image_of(&PointSet::full(dom.point_count()));
    let closure = g.topology.closure(&image);
    let closed = closure == image;
    let closure_witness = if closed {
        None
    } else {
        closure
            .iter()
            .find(|i| !image.contains(*i))
            .map(|i| g.carrier[i].clone())
    };
    // Homeomorphism onto the image: the image of each minimal open set is
    // exactly the subspace minimal open set of the image point.
    let embedding = (0..dom.point_count()).all(|p| {
        let mapped = sigma.image_of(dom.min_open(p));
        let subspace = g.topology.min_open(table[p]).intersection(&image);
        mapped == subspace
    });
    Ok(SigmaReport {
        closed,
        embedding,
        closure_witness,
    })
}

/// True iff the image of `Y^n` is closed in `F_N(Y)` and carries the power
/// topology as a subspace.
pub fn sigma_closed_embedding(
    y: &FinSpace,
    n: usize,
    big_level: usize,
    limit: usize,
) -> Result<bool> {
    let report = sigma_embedding_report(y, n, big_level, limit)?;
    Ok(report.closed && report.embedding)
}

/// Whether a lower level sits well inside a higher one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoherenceRecord {
    /// The level-`n` carrier is closed in the level-`N` topology.
    pub closed: bool,
    /// The subspace topology induced on it equals the intrinsic level-`n`
    /// topology.
    pub subspace_equal: bool,
}

/// Compares the intrinsic topology of `small` with the subspace topology it
/// receives inside `big`. The carriers must be nested levels of the same
/// construction; reduced words of length `<= n` are an initial segment of the
/// length-lex enumeration at any higher level.
pub fn coherence_between(small: &TruncatedGroup, big: &TruncatedGroup) -> Result<CoherenceRecord> {
    if small.alphabet_space != big.alphabet_space
        || small.level > big.level
        || !compatible_provenance(&small.provenance, &big.provenance)
    {
        return Err(Error::CarrierMismatch(
            "coherence needs nested levels of one construction".into(),
        ));
    }
    let count = small.carrier.len();
    debug_assert_eq!(small.carrier[..], big.carrier[..count]);
    let total = big.carrier.len();
    let prefix = PointSet::from_indices(total, &(0..count).collect::<Vec<_>>());
    let closed = big.topology.closure(&prefix) == prefix;
    let subspace_equal = (0..count).all(|i| {
        let sub = big.topology.min_open(i).intersection(&prefix);
        let intrinsic = small.topology.min_open(i);
        sub.to_indices() == intrinsic.to_indices()
    });
    Ok(CoherenceRecord {
        closed,
        subspace_equal,
    })
}

/// Coherence of `F_n(Y)` inside `F_N(Y)` for the reduction topology.
pub fn coherence_check(
    y: &FinSpace,
    n: usize,
    big_level: usize,
    limit: usize,
) -> Result<CoherenceRecord> {
    if big_level < n {
        return Err(Error::InvalidInput(format!(
            "need n <= N, got n = {n}, N = {big_level}"
        )));
    }
    let small = build_reduced_group(y, n, limit)?;
    let big = build_reduced_group(y, big_level, limit)?;
    coherence_between(&small, &big)
}

/// The level-`n` carrier of `big` with its subspace topology.
pub fn subspace_group(big: &TruncatedGroup, n: usize) -> Result<TruncatedGroup> {
    if n > big.level {
        return Err(Error::InvalidInput(format!(
            "subspace level {n} above group level {}",
            big.level
        )));
    }
    let carrier = enumerate(big.alphabet_space.point_count(), n, true, usize::MAX)?;
    let count = carrier.len();
    debug_assert_eq!(carrier[..], big.carrier[..count]);
    let labels: Vec<String> = (0..count)
        .map(|i| big.topology.label(i).to_string())
        .collect();
    let prefix = PointSet::from_indices(big.carrier.len(), &(0..count).collect::<Vec<_>>());
    let upset: Vec<PointSet> = (0..count)
        .map(|i| {
            let sub = big.topology.min_open(i).intersection(&prefix);
            let mut row = PointSet::empty(count);
            for j in sub.iter() {
                row.insert(j);
            }
            row
        })
        .collect();
    Ok(TruncatedGroup {
        alphabet_space: big.alphabet_space.clone(),
        level: n,
        carrier,
        topology: FinSpace::from_upset(labels, upset)?,
        provenance: Provenance::SubspaceOf(big.level),
    })
}

/// The map `F_n(X) -> F_n(Y)` applying `q` letterwise and reducing, between
/// the reduction-topology groups.
pub fn induced_word_map(q: &FinMap, gx: &TruncatedGroup, gy: &TruncatedGroup) -> Result<FinMap> {
    if gx.level != gy.level {
        return Err(Error::CarrierMismatch("levels differ".into()));
    }
    let ky = gy.alphabet_space.point_count();
    let mut table = Vec::with_capacity(gx.carrier.len());
    for w in &gx.carrier {
        let mapped = Word::from_letters(
            ky,
            w.letters()
                .iter()
                .map(|l| Letter::new(q.apply(l.index), l.sign))
                .collect(),
        )?;
        let idx = gy
            .word_index(&mapped.reduce())
            .ok_or_else(|| Error::CarrierMismatch("mapped word not in target".into()))?;
        table.push(idx);
    }
    FinMap::new(gx.topology.clone(), gy.topology.clone(), table)
}

/// Is the induced map `F_n(X) -> F_n(Y)` a quotient map, for a continuous
/// surjection `q`?
pub fn induced_map_quotient(q: &FinMap, n: usize, limit: usize) -> Result<bool> {
    if !q.is_surjective() {
        return Err(Error::NotSurjective);
    }
    if !q.is_continuous() {
        return Err(Error::NotContinuous);
    }
    let gx = build_reduced_group(q.domain(), n, limit)?;
    let gy = build_reduced_group(q.codomain(), n, limit)?;
    induced_word_map(q, &gx, &gy)?.is_quotient_map()
}

/// The two sides of the level-`n` exchange of "quotient the letters" with
/// "form words": they agree exactly when all doubled powers are quotient.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PsiLevelCheck {
    /// All powers `(q + q)^i`, `1 <= i <= n`, are quotient maps.
    pub powers_quotient: bool,
    /// The identity carrier bijection between "quotient letterwise, then the
    /// final topology" and "words over the quotient space" is a
    /// homeomorphism at every piece of the level.
    pub psi_iso: bool,
}

/// Checks, at truncation level `n`, the equivalence between quotient powers
/// of `q` and the exchange map being a homeomorphism. `q` must be a
/// continuous surjection.
pub fn psi_level_check(q: &FinMap, n: usize, limit: usize) -> Result<PsiLevelCheck> {
    if !q.is_surjective() {
        return Err(Error::NotSurjective);
    }
    if !q.is_continuous() {
        return Err(Error::NotContinuous);
    }
    let x = q.domain();
    let z = q.codomain();
    let dx = signed_double(x);
    let dz = signed_double(z);
    let nx = x.point_count();
    let nz = z.point_count();
    let doubled_table: Vec<usize> = (0..2 * nx)
        .map(|i| {
            if i < nx {
                q.apply(i)
            } else {
                nz + q.apply(i - nx)
            }
        })
        .collect();

    let mut powers_quotient = true;
    for i in 1..=n {
        let dom = power(&dx, i, limit)?;
        let cod = power(&dz, i, limit)?;
        let table: Vec<usize> = (0..dom.point_count())
            .map(|idx| {
                let digits = crate::finspace::tuple_digits(2 * nx, i, idx);
                let mapped: Vec<usize> = digits.iter().map(|&d| doubled_table[d]).collect();
                crate::finspace::tuple_index(2 * nz, &mapped)
            })
            .collect();
        let pw = FinMap::new(dom, cod, table)?;
        if !pw.is_quotient_map()? {
            powers_quotient = false;
        }
    }

    // Quotient the unreduced space over X along letterwise application of q,
    // and compare with the unreduced space built directly over Z.
    let (mx, x_words) = build_unreduced_space(x, n, limit)?;
    let (mz, z_words) = build_unreduced_space(z, n, limit)?;
    let assignment: Vec<usize> = x_words
        .iter()
        .map(|w| {
            let mapped = Word::from_letters(
                nz,
                w.letters()
                    .iter()
                    .map(|l| Letter::new(q.apply(l.index), l.sign))
                    .collect(),
            )
            .expect("mapped letters stay in range");
            z_words
                .binary_search(&mapped)
                .expect("mapped word is enumerated")
        })
        .collect();
    let partition = Partition::from_assignment(assignment, z_words.len())?;
    let (quotient_side, _) = mx.quotient(&partition)?;
    let psi_iso = quotient_side.upset_rows() == mz.upset_rows();

    Ok(PsiLevelCheck {
        powers_quotient,
        psi_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::finspace::{are_homeomorphic, coproduct, DEFAULT_SIZE_LIMIT};

    const LIMIT: usize = DEFAULT_SIZE_LIMIT;

    fn sierpinski_word(spec: &[(usize, i8)]) -> Word {
        Word::from_letters(
            2,
            spec.iter()
                .map(|&(i, s)| Letter::new(i, if s > 0 { Sign::Plus } else { Sign::Minus }))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn unreduced_space_sizes() {
        let (s, w) = build_unreduced_space(&catalog::discrete(2), 1, LIMIT).unwrap();
        assert_eq!(s.point_count(), 5);
        assert_eq!(w.len(), 5);

        let (s, _) = build_unreduced_space(&catalog::point(), 2, LIMIT).unwrap();
        assert_eq!(s.point_count(), 7);

        assert!(matches!(
            build_unreduced_space(&catalog::discrete(12), 3, LIMIT),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn unreduced_space_minimal_opens_follow_products() {
        // Over Sierpinski at level 2 the minimal open set of the word "a a"
        // is the four positive two-letter words: both letters run over the
        // minimal open {a, b} of a.
        let y = catalog::sierpinski();
        let (space, words) = build_unreduced_space(&y, 2, LIMIT).unwrap();
        let aa = sierpinski_word(&[(0, 1), (0, 1)]);
        let idx = words.binary_search(&aa).unwrap();
        let open: Vec<&Word> = space.min_open(idx).iter().map(|i| &words[i]).collect();
        let expect: Vec<Word> = [
            [(0, 1), (0, 1)],
            [(0, 1), (1, 1)],
            [(1, 1), (0, 1)],
            [(1, 1), (1, 1)],
        ]
        .iter()
        .map(|pair| sierpinski_word(pair))
        .collect();
        assert_eq!(open.len(), 4);
        for w in &expect {
            assert!(open.contains(&w));
        }

        // Sign patterns are locally constant: the minimal open set of "a b'"
        // keeps the pattern (+, -).
        let ab1 = sierpinski_word(&[(0, 1), (1, -1)]);
        let idx = words.binary_search(&ab1).unwrap();
        for i in space.min_open(idx).iter() {
            assert_eq!(words[i].sign_pattern(), ab1.sign_pattern());
        }
    }

    #[test]
    fn reduced_group_counts_and_discreteness() {
        let g = build_reduced_group(&catalog::discrete(2), 2, LIMIT).unwrap();
        assert_eq!(g.carrier().len(), 17);
        assert!(g.topology().separation().discrete);

        let g = build_reduced_group(&catalog::point(), 3, LIMIT).unwrap();
        assert_eq!(g.carrier().len(), 7);
        assert!(g.topology().separation().discrete);

        for k in 1..=3usize {
            for n in 0..=3usize {
                let g = build_reduced_group(&catalog::discrete(k), n, LIMIT).unwrap();
                assert_eq!(g.carrier().len() as u128, crate::words::reduced_count(k, n));
            }
        }
    }

    #[test]
    fn reduced_group_indiscrete_blocks() {
        // F_1 over indiscrete(2): e is isolated, the two signed copies are
        // indiscrete blocks.
        let g = build_reduced_group(&catalog::indiscrete(2), 1, LIMIT).unwrap();
        let t = g.topology();
        assert_eq!(t.min_open(0).to_indices(), vec![0]);
        let a = g
            .word_index(&Word::letter(2, 0, Sign::Plus).unwrap())
            .unwrap();
        let b = g
            .word_index(&Word::letter(2, 1, Sign::Plus).unwrap())
            .unwrap();
        assert_eq!(t.min_open(a), t.min_open(b));
        assert_eq!(t.min_open(a).size(), 2);
    }

    #[test]
    fn refined_with_identity_equals_reduction() {
        for entry in catalog::entries() {
            let y = &entry.space;
            if y.point_count() > 3 {
                continue;
            }
            let id = FinMap::identity(y);
            for n in 0..=2 {
                let refined = build_refined_group(&id, n, LIMIT).unwrap();
                let reduced = build_reduced_group(y, n, LIMIT).unwrap();
                assert_eq!(
                    compare_topologies(&refined, &reduced).unwrap(),
                    TopologyOrder::Equal,
                    "on {} at level {n}",
                    entry.name
                );
            }
        }
    }

    #[test]
    fn refined_along_component_projection_is_discrete() {
        for entry in catalog::entries() {
            let x = &entry.space;
            if x.point_count() > 4 {
                continue;
            }
            let (_, proj) = x.pi0();
            for n in 0..=2 {
                let refined = build_refined_group(&proj, n, LIMIT).unwrap();
                assert!(
                    refined.topology().separation().discrete,
                    "refined level {n} over components of {}",
                    entry.name
                );
            }
        }
    }

    #[test]
    fn refined_is_never_coarser_than_reduction() {
        for entry in catalog::entries() {
            let x = &entry.space;
            if x.point_count() > 3 {
                continue;
            }
            let (_, proj) = x.pi0();
            for n in 0..=2 {
                let refined = build_refined_group(&proj, n, LIMIT).unwrap();
                let reduced = build_reduced_group(proj.codomain(), n, LIMIT).unwrap();
                let order = compare_topologies(&refined, &reduced).unwrap();
                assert!(
                    matches!(order, TopologyOrder::Equal | TopologyOrder::StrictlyFiner),
                    "on {} at level {n}: {order:?}",
                    entry.name
                );
            }
        }
    }

    #[test]
    fn compare_topologies_examples() {
        let fine = build_reduced_group(&catalog::discrete(2), 1, LIMIT).unwrap();
        let coarse = build_reduced_group(&catalog::indiscrete(2), 1, LIMIT).unwrap();
        assert_eq!(
            compare_topologies(&fine, &coarse).unwrap(),
            TopologyOrder::StrictlyFiner
        );
        assert_eq!(
            compare_topologies(&coarse, &fine).unwrap(),
            TopologyOrder::StrictlyCoarser
        );
        let other = build_reduced_group(&catalog::discrete(2), 2, LIMIT).unwrap();
        assert!(compare_topologies(&fine, &other).is_err());
    }

    #[test]
    fn translation_examples() {
        let y = catalog::sierpinski();
        let g1 = build_reduced_group(&y, 1, LIMIT).unwrap();
        let g2 = build_reduced_group(&y, 2, LIMIT).unwrap();

        // Translation by e is the inclusion F_1 into F_1.
        let e = Word::empty(2);
        let id = translation_map(&g1, &g1, &e, Side::Left).unwrap();
        assert!(id.is_continuous());
        assert_eq!(id.table(), &(0..5).collect::<Vec<_>>()[..]);

        for sign in [Sign::Plus, Sign::Minus] {
            for idx in 0..2 {
                let w = Word::letter(2, idx, sign).unwrap();
                for side in [Side::Left, Side::Right] {
                    let t = translation_map(&g1, &g2, &w, side).unwrap();
                    assert!(
                        t.is_continuous(),
                        "translation by letter {idx} {sign:?} {side:?}"
                    );
                }
            }
        }

        // Discrete alphabet: every translation is continuous.
        let d = catalog::discrete(3);
        let d1 = build_reduced_group(&d, 1, LIMIT).unwrap();
        let d2 = build_reduced_group(&d, 2, LIMIT).unwrap();
        let w = Word::letter(3, 2, Sign::Minus).unwrap();
        assert!(translation_map(&d1, &d2, &w, Side::Right)
            .unwrap()
            .is_continuous());
    }

    #[test]
    fn inversion_examples() {
        let y = catalog::sierpinski();
        let g = build_reduced_group(&y, 2, LIMIT).unwrap();
        let inv = inversion_map(&g);
        assert_eq!(inv.apply(0), 0, "identity word is fixed");
        for i in 0..g.carrier().len() {
            assert_eq!(
                inv.apply(inv.apply(i)),
                i,
                "involution squares to the identity"
            );
        }
        assert!(inv.is_continuous());
    }

    #[test]
    fn multiplication_examples() {
        let d = catalog::discrete(2);
        for (n, m) in [(0, 1), (1, 1), (1, 2)] {
            assert!(multiplication_continuous(&d, n, m, LIMIT).unwrap());
        }
        let y = catalog::sierpinski();
        assert!(multiplication_continuous(&y, 0, 2, LIMIT).unwrap());
        // Golden verdict for the Sierpinski alphabet at (1, 1), pinned after
        // cross-checking the preimage oracle.
        assert_eq!(multiplication_continuous(&y, 1, 1, LIMIT).unwrap(), true);
    }

    #[test]
    fn t1_and_closure_examples() {
        let y = catalog::sierpinski();
        let g2 = build_reduced_group(&y, 2, LIMIT).unwrap();
        assert!(!t1_at_level(&g2));

        // Every open set containing "a b'" contains e, so "a b'" lies in the
        // closure of {e}.
        let ab1 = sierpinski_word(&[(0, 1), (1, -1)]);
        let closure_of_e = closure_of(&g2, &[Word::empty(2)]).unwrap();
        assert!(closure_of_e.contains(&ab1));
        let e_idx = g2.identity_index();
        let ab1_idx = g2.word_index(&ab1).unwrap();
        assert!(g2.topology().min_open(ab1_idx).contains(e_idx));

        let witness = non_t1_witness(&g2).unwrap();
        assert_ne!(witness.0, witness.1);

        let d = catalog::discrete(2);
        for n in 0..=2 {
            assert!(t1_at_level(&build_reduced_group(&d, n, LIMIT).unwrap()));
        }

        let all: Vec<Word> = g2.carrier().to_vec();
        assert_eq!(closure_of(&g2, &all).unwrap().len(), all.len());
    }

    #[test]
    fn sigma_embedding_examples() {
        let d = catalog::discrete(2);
        for (n, big) in [(1, 1), (1, 3), (2, 3)] {
            assert!(sigma_closed_embedding(&d, n, big, LIMIT).unwrap());
        }

        // Over Sierpinski the one-letter positive words are not closed at
        // level 3: the word "b a b'" lies in their closure, as does every
        // reported witness.
        let y = catalog::sierpinski();
        let report = sigma_embedding_report(&y, 1, 3, LIMIT).unwrap();
        assert!(!report.closed);
        let witness = report.closure_witness.unwrap();
        assert!(witness.len() > 1, "witness lies outside the image");
        let g3 = build_reduced_group(&y, 3, LIMIT).unwrap();
        let image: Vec<Word> = vec![
            Word::letter(2, 0, Sign::Plus).unwrap(),
            Word::letter(2, 1, Sign::Plus).unwrap(),
        ];
        let closure = closure_of(&g3, &image).unwrap();
        assert!(closure.contains(&witness));
        assert!(closure.contains(&sierpinski_word(&[(1, 1), (0, 1), (1, -1)])));
        assert!(!sigma_closed_embedding(&y, 1, 3, LIMIT).unwrap());

        // At even top level the image of one-letter words stays closed over
        // an indiscrete alphabet: neighborhoods of two-letter words only
        // reach words of even reduced length. At level 3 closedness fails.
        let i2 = catalog::indiscrete(2);
        let r = sigma_embedding_report(&i2, 1, 2, LIMIT).unwrap();
        assert_eq!((r.closed, r.embedding), (true, true));
        let r = sigma_embedding_report(&i2, 1, 3, LIMIT).unwrap();
        assert_eq!(r.closed, false);
    }

    #[test]
    fn coherence_examples() {
        let d = catalog::discrete(3);
        let r = coherence_check(&d, 1, 2, LIMIT).unwrap();
        assert!(r.closed && r.subspace_equal);

        let y = catalog::sierpinski();
        let r = coherence_check(&y, 0, 2, LIMIT).unwrap();
        assert!(!r.closed, "the identity is not closed at level 2");

        // Golden record for Sierpinski at (1, 2).
        let r = coherence_check(&y, 1, 2, LIMIT).unwrap();
        assert_eq!((r.closed, r.subspace_equal), (false, true));
    }

    #[test]
    fn subspace_group_has_subspace_provenance() {
        let y = catalog::sierpinski();
        let g2 = build_reduced_group(&y, 2, LIMIT).unwrap();
        let sub = subspace_group(&g2, 1).unwrap();
        assert_eq!(sub.level(), 1);
        assert_eq!(*sub.provenance(), Provenance::SubspaceOf(2));
        let intrinsic = build_reduced_group(&y, 1, LIMIT).unwrap();
        // Matches the coherence record: the subspace topology at level 1
        // agrees with the intrinsic one on the Sierpinski alphabet.
        assert_eq!(
            sub.topology().upset_rows(),
            intrinsic.topology().upset_rows()
        );
    }

    #[test]
    fn induced_map_quotient_examples() {
        let y = catalog::sierpinski();
        let id = FinMap::identity(&y);
        assert!(induced_map_quotient(&id, 2, LIMIT).unwrap());

        let d2 = catalog::discrete(2);
        let to_indiscrete = FinMap::new(d2.clone(), catalog::indiscrete(2), vec![0, 1]).unwrap();
        assert!(!induced_map_quotient(&to_indiscrete, 1, LIMIT).unwrap());

        let not_surj = FinMap::new(d2.clone(), d2, vec![0, 0]).unwrap();
        assert_eq!(
            induced_map_quotient(&not_surj, 1, LIMIT),
            Err(Error::NotSurjective)
        );
    }

    #[test]
    fn psi_level_examples() {
        let s = catalog::sierpinski();
        let (_, proj) = s.pi0();
        let r = psi_level_check(&proj, 2, LIMIT).unwrap();
        assert!(r.powers_quotient && r.psi_iso);

        let d = catalog::discrete(2);
        let r = psi_level_check(&FinMap::identity(&d), 2, LIMIT).unwrap();
        assert!(r.powers_quotient && r.psi_iso);

        let to_indiscrete = FinMap::new(d, catalog::indiscrete(2), vec![0, 1]).unwrap();
        let r = psi_level_check(&to_indiscrete, 2, LIMIT).unwrap();
        assert!(!r.powers_quotient && !r.psi_iso);
    }

    #[test]
    fn non_hausdorff_pairs_glue_identity_at_level_two() {
        // For any pair without disjoint open neighborhoods, every open set
        // around the two-letter word y z' contains e.
        for entry in catalog::entries() {
            let y = &entry.space;
            if y.point_count() > 4 {
                continue;
            }
            let g2 = build_reduced_group(y, 2, LIMIT).unwrap();
            let k = y.point_count();
            for a in 0..k {
                for b in 0..k {
                    if a == b || y.min_open(a).is_disjoint(y.min_open(b)) {
                        continue;
                    }
                    let word = Word::from_letters(
                        k,
                        vec![Letter::new(a, Sign::Plus), Letter::new(b, Sign::Minus)],
                    )
                    .unwrap();
                    let idx = g2.word_index(&word).unwrap();
                    assert!(
                        g2.topology().min_open(idx).contains(g2.identity_index()),
                        "pair ({a},{b}) on {}",
                        entry.name
                    );
                }
            }
        }
    }

    #[test]
    fn discrete_collapse_across_constructions() {
        for k in 1..=3usize {
            let y = catalog::discrete(k);
            for n in 0..=2 {
                let g = build_reduced_group(&y, n, LIMIT).unwrap();
                assert!(g.topology().separation().discrete);
                assert!(t1_at_level(&g));
                assert!(inversion_map(&g).is_continuous());
            }
        }
    }

    #[test]
    fn reduction_final_topology_recomputed_independently() {
        // Final topology oracle via the saturation fixpoint, independent of
        // the reachability-closure implementation inside quotient(). Runs
        // over every topology on at most three labelled points.
        let mut spaces = Vec::new();
        for points in 1..=3 {
            spaces.extend(catalog::enumerate_topologies(points, false).unwrap());
        }
        for entry in spaces {
            let n = 2;
            let g = build_reduced_group(&entry, n, LIMIT).unwrap();
            let (m_space, m_words) = build_unreduced_space(&entry, n, LIMIT).unwrap();
            let total = m_words.len();
            for (i, w) in g.carrier().iter().enumerate() {
                // Smallest reduce-saturated open superset of the fiber of w.
                let mut s = PointSet::empty(total);
                for (j, v) in m_words.iter().enumerate() {
                    if &v.reduce() == w {
                        s.insert(j);
                    }
                }
                loop {
                    let mut next = PointSet::empty(total);
                    for x in s.iter() {
                        next.union_with(m_space.min_open(x));
                    }
                    let mut saturated = PointSet::empty(total);
                    for (j, v) in m_words.iter().enumerate() {
                        let r = v.reduce();
                        if next.iter().any(|x| m_words[x].reduce() == r) {
                            saturated.insert(j);
                        }
                    }
                    if saturated == s {
                        break;
                    }
                    s = saturated;
                }
                let image: Vec<usize> = {
                    let mut out: Vec<usize> = s
                        .iter()
                        .map(|j| g.word_index(&m_words[j].reduce()).unwrap())
                        .collect();
                    out.sort_unstable();
                    out.dedup();
                    out
                };
                assert_eq!(g.topology().min_open(i).to_indices(), image);
            }
        }
    }

    #[test]
    fn group_axioms_hold_on_carrier() {
        let y = catalog::sierpinski();
        let g = build_reduced_group(&y, 2, LIMIT).unwrap();
        let e = Word::empty(2);
        for u in g.carrier() {
            assert_eq!(u.concat(&u.invert()).unwrap().reduce(), e);
        }
    }

    #[test]
    fn carrier_is_prefix_of_higher_levels() {
        let y = coproduct(&catalog::sierpinski(), &catalog::point());
        let g1 = build_reduced_group(&y, 1, LIMIT).unwrap();
        let g2 = build_reduced_group(&y, 2, LIMIT).unwrap();
        assert_eq!(g1.carrier()[..], g2.carrier()[..g1.carrier().len()]);
        assert!(
            are_homeomorphic(&catalog::discrete(2), &catalog::discrete(2), 6)
                .unwrap()
                .is_some()
        );
    }
}
