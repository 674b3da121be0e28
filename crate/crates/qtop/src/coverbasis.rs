//! Neighborhood bases for quotient spaces from pointwise open covers.
//!
//! A pointwise open cover assigns one distinguished open neighborhood to each
//! point of the domain of a quotient map. Starting from a codomain point, the
//! generated neighborhood alternates pulling back, spreading along the cover
//! and pushing forward until the set stabilizes; the stable set is open and
//! saturated. With the minimal-open cover it is the smallest open set of the
//! codomain containing the starting point.

use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::finspace::{FinMap, FinSpace};

/// One distinguished open neighborhood per point of `base`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointwiseCover {
    base: FinSpace,
    member: Vec<PointSet>,
}

impl PointwiseCover {
    pub fn new(base: FinSpace, member: Vec<PointSet>) -> Result<PointwiseCover> {
        if member.len() != base.point_count() {
            return Err(Error::InvalidCover(format!(
                "{} member sets for {} points",
                member.len(),
                base.point_count()
            )));
        }
        for (y, set) in member.iter().enumerate() {
            if !set.contains(y) {
                return Err(Error::InvalidCover(format!(
                    "member set of point {y} does not contain it"
                )));
            }
            if !base.is_open(set) {
                return Err(Error::InvalidCover(format!(
                    "member set of point {y} is not open"
                )));
            }
        }
        Ok(PointwiseCover { base, member })
    }

    /// The finest cover: each point keeps its minimal open set.
    pub fn minimal(base: &FinSpace) -> PointwiseCover {
        PointwiseCover {
            member: base.upset_rows().to_vec(),
            base: base.clone(),
        }
    }

    /// The coarsest cover: every member set is the full carrier.
    pub fn maximal(base: &FinSpace) -> PointwiseCover {
        PointwiseCover {
            member: vec![PointSet::full(base.point_count()); base.point_count()],
            base: base.clone(),
        }
    }

    pub fn base(&self) -> &FinSpace {
        &self.base
    }

    pub fn member(&self, y: usize) -> &PointSet {
        &self.member[y]
    }

    /// Union of the member sets over a subset of the base.
    pub fn spread(&self, s: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.base.point_count());
        for y in s.iter() {
            out.union_with(&self.member[y]);
        }
        out
    }
}

/// Pointwise refinement: true iff `v`'s member set at every point is
/// contained in `u`'s, i.e. `v` refines `u`.
pub fn refine(u: &PointwiseCover, v: &PointwiseCover) -> Result<bool> {
    if u.base != v.base {
        return Err(Error::BaseMismatch);
    }
    Ok(u.member
        .iter()
        .zip(&v.member)
        .all(|(uy, vy)| vy.is_subset(uy)))
}

/// A generated neighborhood together with the number of iterations the
/// fixpoint needed (bounded by the codomain size).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratedNeighborhood {
    pub set: PointSet,
    pub iterations: usize,
}

/// The open neighborhood of `z` generated by the cover `u` under the
/// quotient map `q`: the union fixpoint of `O -> q(u(q^-1(O)))` from `{z}`.
pub fn generate_neighborhood(
    q: &FinMap,
    z: usize,
    u: &PointwiseCover,
) -> Result<GeneratedNeighborhood> {
    if u.base() != q.domain() {
        return Err(Error::BaseMismatch);
    }
    if !q.is_quotient_map()? {
        return Err(Error::NotQuotient);
    }
    let m = q.codomain().point_count();
    if z >= m {
        return Err(Error::InvalidInput(format!(
            "point {z} outside codomain of size {m}"
        )));
    }
    let mut current = PointSet::singleton(m, z);
    for iterations in 0..=m {
        let next = q.image_of(&u.spread(&q.preimage_of(&current)));
        debug_assert!(current.is_subset(&next), "the iteration chain is monotone");
        if next == current {
            debug_assert!(q.codomain().is_open(&current));
            debug_assert!(u
                .spread(&q.preimage_of(&current))
                .is_subset(&q.preimage_of(&current)));
            return Ok(GeneratedNeighborhood {
                set: current,
                iterations,
            });
        }
        current = next;
    }
    // The chain grows strictly until it stabilizes and lives inside a set of
    // m points, so it must stabilize within m steps.
    unreachable!("fixpoint not reached within the codomain-size bound");
}

/// True iff the neighborhoods of `z1` and `z2` generated by `u` are disjoint.
pub fn separated_by_cover(q: &FinMap, z1: usize, z2: usize, u: &PointwiseCover) -> Result<bool> {
    let a = generate_neighborhood(q, z1, u)?;
    let b = generate_neighborhood(q, z2, u)?;
    Ok(a.set.is_disjoint(&b.set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::finspace::{FinMap, Partition};

    fn identity_quotient(s: &FinSpace) -> FinMap {
        FinMap::identity(s)
    }

    #[test]
    fn refinement_examples() {
        let s = catalog::sierpinski();
        let minimal = PointwiseCover::minimal(&s);
        let maximal = PointwiseCover::maximal(&s);
        assert!(refine(&maximal, &minimal).unwrap());
        assert!(!refine(&minimal, &maximal).unwrap());
        assert!(refine(&minimal, &minimal).unwrap());

        let i2 = catalog::indiscrete(2);
        assert!(refine(&PointwiseCover::minimal(&i2), &PointwiseCover::maximal(&i2)).unwrap());

        assert_eq!(
            refine(&PointwiseCover::minimal(&s), &PointwiseCover::minimal(&i2)),
            Err(Error::BaseMismatch)
        );
    }

    #[test]
    fn invalid_covers_are_rejected() {
        let s = catalog::sierpinski();
        // {0} is not open in Sierpinski.
        let bad = PointwiseCover::new(
            s.clone(),
            vec![PointSet::singleton(2, 0), PointSet::singleton(2, 1)],
        );
        assert!(matches!(bad, Err(Error::InvalidCover(_))));
        // Member set missing its own point.
        let bad = PointwiseCover::new(
            s,
            vec![PointSet::singleton(2, 1), PointSet::singleton(2, 1)],
        );
        assert!(matches!(bad, Err(Error::InvalidCover(_))));
    }

    #[test]
    fn generated_neighborhood_examples() {
        // Collapse Sierpinski to a point.
        let s = catalog::sierpinski();
        let (_, collapse) = s.quotient(&Partition::single_block(2)).unwrap();
        let out = generate_neighborhood(&collapse, 0, &PointwiseCover::minimal(&s)).unwrap();
        assert_eq!(out.set.to_indices(), vec![0]);

        // Identity on Sierpinski with the minimal cover reaches the minimal
        // open set in one step.
        let q = identity_quotient(&s);
        let min = PointwiseCover::minimal(&s);
        assert_eq!(
            generate_neighborhood(&q, 1, &min).unwrap().set.to_indices(),
            vec![1]
        );
        assert_eq!(
            generate_neighborhood(&q, 0, &min).unwrap().set.to_indices(),
            vec![0, 1]
        );
    }

    #[test]
    fn merging_cover_grows_the_neighborhood() {
        // discrete{0,1,2} collapsed to blocks {0,1},{2}: a cover sending 0
        // near 2 forces the blocks to merge in one step.
        let d3 = catalog::discrete(3);
        let p = Partition::from_blocks(3, vec![vec![0, 1], vec![2]]).unwrap();
        let (_, q) = d3.quotient(&p).unwrap();

        let staying = PointwiseCover::new(
            d3.clone(),
            vec![
                PointSet::from_indices(3, &[0, 1]),
                PointSet::singleton(3, 1),
                PointSet::singleton(3, 2),
            ],
        )
        .unwrap();
        let out = generate_neighborhood(&q, 0, &staying).unwrap();
        assert_eq!(out.set.to_indices(), vec![0]);

        let merging = PointwiseCover::new(
            d3.clone(),
            vec![
                PointSet::from_indices(3, &[0, 2]),
                PointSet::singleton(3, 1),
                PointSet::singleton(3, 2),
            ],
        )
        .unwrap();
        let out = generate_neighborhood(&q, 0, &merging).unwrap();
        assert_eq!(out.set.to_indices(), vec![0, 1]);
        assert!(out.iterations <= 2);

        // Brute-force stability oracle: the result is the smallest superset
        // of {z} fixed by one application of the generating step.
        for (cover, z) in [
            (&staying, 0usize),
            (&merging, 0),
            (&staying, 1),
            (&merging, 1),
        ] {
            let got = generate_neighborhood(&q, z, cover).unwrap().set;
            let m = q.codomain().point_count();
            let mut best: Option<PointSet> = None;
            for mask in 0..(1u64 << m) {
                let t = PointSet::from_mask(m, mask);
                if !t.contains(z) {
                    continue;
                }
                let step = q.image_of(&cover.spread(&q.preimage_of(&t)));
                if step == t && best.as_ref().map_or(true, |b| t.size() < b.size()) {
                    best = Some(t);
                }
            }
            assert_eq!(got, best.unwrap());
        }
    }

    #[test]
    fn minimal_cover_reaches_smallest_open_set() {
        for entry in catalog::entries() {
            let s = &entry.space;
            if s.point_count() > 6 {
                continue;
            }
            let (pi0, proj) = s.pi0();
            let min = PointwiseCover::minimal(s);
            for z in 0..pi0.point_count() {
                let got = generate_neighborhood(&proj, z, &min).unwrap();
                assert_eq!(&got.set, pi0.min_open(z), "on {}", entry.name);
                assert!(got.iterations <= pi0.point_count());
            }
        }
    }

    #[test]
    fn separation_examples() {
        let d2 = catalog::discrete(2);
        let q = identity_quotient(&d2);
        assert!(separated_by_cover(&q, 0, 1, &PointwiseCover::minimal(&d2)).unwrap());

        let i2 = catalog::indiscrete(2);
        let q = identity_quotient(&i2);
        for cover in [PointwiseCover::minimal(&i2), PointwiseCover::maximal(&i2)] {
            assert!(!separated_by_cover(&q, 0, 1, &cover).unwrap());
        }

        let s = catalog::sierpinski();
        let q = identity_quotient(&s);
        for cover in [PointwiseCover::minimal(&s), PointwiseCover::maximal(&s)] {
            assert!(!separated_by_cover(&q, 0, 1, &cover).unwrap());
        }
    }

    /// Every pointwise cover built from the open family of the domain.
    fn all_covers(s: &FinSpace) -> Vec<PointwiseCover> {
        let opens = s.open_sets().unwrap();
        let per_point: Vec<Vec<&PointSet>> = (0..s.point_count())
            .map(|y| opens.iter().filter(|o| o.contains(y)).collect())
            .collect();
        let mut covers = Vec::new();
        let mut picks = vec![0usize; s.point_count()];
        'outer: loop {
            let member: Vec<PointSet> = picks
                .iter()
                .enumerate()
                .map(|(y, &c)| per_point[y][c].clone())
                .collect();
            covers.push(PointwiseCover::new(s.clone(), member).unwrap());
            let mut pos = s.point_count();
            while pos > 0 {
                pos -= 1;
                picks[pos] += 1;
                if picks[pos] < per_point[pos].len() {
                    continue 'outer;
                }
                picks[pos] = 0;
            }
            return covers;
        }
    }

    #[test]
    fn refinement_monotonicity_exhaustive() {
        let s = catalog::chain(3);
        let q = identity_quotient(&s);
        let covers = all_covers(&s);
        for u in &covers {
            for v in &covers {
                if refine(u, v).unwrap() {
                    for z in 0..3 {
                        let nu = generate_neighborhood(&q, z, u).unwrap().set;
                        let nv = generate_neighborhood(&q, z, v).unwrap().set;
                        assert!(nv.is_subset(&nu));
                    }
                }
            }
        }
    }

    #[test]
    fn basis_property() {
        // For every open V around z there is a cover whose generated
        // neighborhood stays inside V: send points over V into the preimage
        // of V and everything else anywhere.
        for entry in catalog::entries() {
            let s = &entry.space;
            if s.point_count() > 5 {
                continue;
            }
            let (pi0, proj) = s.pi0();
            let opens = pi0.open_sets().unwrap();
            for v in &opens {
                for z in v.iter() {
                    let pre = proj.preimage_of(v);
                    let member: Vec<PointSet> = (0..s.point_count())
                        .map(|y| {
                            if v.contains(proj.apply(y)) {
                                pre.clone()
                            } else {
                                PointSet::full(s.point_count())
                            }
                        })
                        .collect();
                    let cover = PointwiseCover::new(s.clone(), member).unwrap();
                    let got = generate_neighborhood(&proj, z, &cover).unwrap().set;
                    assert!(got.is_subset(v));
                }
            }
        }
    }

    #[test]
    fn cover_separation_matches_disjoint_open_neighborhoods() {
        // Exhaustive cover search on small quotients: a pair is separated by
        // some cover iff it has disjoint open neighborhoods in the codomain.
        let spaces = [
            catalog::sierpinski(),
            catalog::discrete(2),
            catalog::indiscrete(2),
            catalog::chain(3),
            catalog::fence(3),
            catalog::discrete(4),
        ];
        for s in &spaces {
            if s.point_count() > 4 {
                continue;
            }
            let q = identity_quotient(s);
            let covers = all_covers(s);
            let n = s.point_count();
            for z1 in 0..n {
                for z2 in (z1 + 1)..n {
                    let some_cover = covers
                        .iter()
                        .any(|u| separated_by_cover(&q, z1, z2, u).unwrap());
                    let disjoint_opens = s.min_open(z1).is_disjoint(s.min_open(z2));
                    assert_eq!(some_cover, disjoint_opens);
                }
            }
        }
    }
}
