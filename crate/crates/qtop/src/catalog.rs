//! Builtin example spaces and exhaustive enumeration of all topologies on
//! small carriers.
//!
//! Carriers of up to four points use alphabetic labels. Enumeration works on
//! the specialization relation: a topology on `n` labelled points is exactly
//! a reflexive-transitive boolean matrix, so candidates are the `2^(n^2-n)`
//! off-diagonal masks filtered by transitivity. Deduplication uses the
//! lexicographically minimal matrix over all point permutations.

use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::finspace::{FinMap, FinSpace, Partition};
use crate::freetop::{
    build_reduced_group, coherence_check, multiplication_continuous, t1_at_level,
};
use crate::words::{Letter, Sign, Word};

/// A named example space.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub space: FinSpace,
    pub notes: String,
}

fn alpha_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

pub fn point() -> FinSpace {
    discrete(1)
}

pub fn discrete(n: usize) -> FinSpace {
    let upset = (0..n).map(|i| PointSet::singleton(n, i)).collect();
    FinSpace::from_upset(alpha_labels(n), upset).unwrap()
}

pub fn indiscrete(n: usize) -> FinSpace {
    let upset = (0..n).map(|_| PointSet::full(n)).collect();
    FinSpace::from_upset(alpha_labels(n), upset).unwrap()
}

/// Two points `a < b`: opens are {}, {b}, {a,b}.
pub fn sierpinski() -> FinSpace {
    chain(2)
}

/// Linear order `a < b < ... `; minimal opens are the upper tails, so a chain
/// on `n` points has `n + 1` open sets.
pub fn chain(n: usize) -> FinSpace {
    let upset = (0..n)
        .map(|i| PointSet::from_indices(n, &(i..n).collect::<Vec<_>>()))
        .collect();
    FinSpace::from_upset(alpha_labels(n), upset).unwrap()
}

/// Zigzag order `a < b > c < d > ...`: odd positions are open points, even
/// positions see their odd neighbors. Path-connected but not a chain.
pub fn fence(n: usize) -> FinSpace {
    let upset = (0..n)
        .map(|i| {
            if i % 2 == 1 {
                PointSet::singleton(n, i)
            } else {
                let mut s = PointSet::singleton(n, i);
                if i > 0 {
                    s.insert(i - 1);
                }
                if i + 1 < n {
                    s.insert(i + 1);
                }
                s
            }
        })
        .collect();
    FinSpace::from_upset(alpha_labels(n), upset).unwrap()
}

/// Four points with the weak homotopy type of a circle: two open points
/// `a`, `b` and two closed points `c`, `d`, each seeing both open points.
pub fn pseudocircle() -> FinSpace {
    let labels = alpha_labels(4);
    let upset = vec![
        PointSet::singleton(4, 0),
        PointSet::singleton(4, 1),
        PointSet::from_indices(4, &[0, 1, 2]),
        PointSet::from_indices(4, &[0, 1, 3]),
    ];
    FinSpace::from_upset(labels, upset).unwrap()
}

/// A finite stand-in for a totally path-disconnected space failing property
/// (H'): two hub points `a`, `b` whose neighborhoods both reach into every
/// column through the column midpoints.
///
/// Points: `a`, `b`, midpoints `(r_i,0)` and tails `(r_i,+s_j)`, `(r_i,-s_j)`
/// for `i, j <= m`. Tails are open points; the midpoint of column `i` sees
/// its whole column; `a` sees every positive tail, `b` every negative tail.
pub fn nonhausdorff_grid(m: usize) -> FinSpace {
    let n = 2 + m + 2 * m * m;
    let mut labels = vec!["a".to_string(), "b".to_string()];
    // Index layout: a = 0, b = 1, midpoint of column i at 2 + i,
    // then tails in column-major order.
    let mid = |i: usize| 2 + i;
    let tail =
        |i: usize, j: usize, positive: bool| 2 + m + i * 2 * m + j * 2 + usize::from(!positive);
    for i in 0..m {
        labels.push(format!("(r{},0)", i + 1));
    }
    let mut tail_labels = vec![String::new(); 2 * m * m];
    for i in 0..m {
        for j in 0..m {
            tail_labels[tail(i, j, true) - (2 + m)] = format!("(r{},+s{})", i + 1, j + 1);
            tail_labels[tail(i, j, false) - (2 + m)] = format!("(r{},-s{})", i + 1, j + 1);
        }
    }
    labels.extend(tail_labels);

    let mut upset = vec![PointSet::empty(n); n];
    upset[0] = PointSet::singleton(n, 0);
    upset[1] = PointSet::singleton(n, 1);
    for i in 0..m {
        let mut column = PointSet::singleton(n, mid(i));
        for j in 0..m {
            upset[0].insert(tail(i, j, true));
            upset[1].insert(tail(i, j, false));
            column.insert(tail(i, j, true));
            column.insert(tail(i, j, false));
            upset[tail(i, j, true)] = PointSet::singleton(n, tail(i, j, true));
            upset[tail(i, j, false)] = PointSet::singleton(n, tail(i, j, false));
        }
        upset[mid(i)] = column;
    }
    FinSpace::from_upset(labels, upset).unwrap()
}

/// Parses `name` or `name(k)`.
fn parse_name(name: &str) -> Option<(&str, Option<usize>)> {
    match name.find('(') {
        None => Some((name, None)),
        Some(open) => {
            let inner = name.strip_suffix(')')?.get(open + 1..)?;
            let arg: usize = inner.parse().ok()?;
            Some((&name[..open], Some(arg)))
        }
    }
}

/// Looks up a builtin space by name, e.g. `sierpinski` or `discrete(3)`.
pub fn builtin(name: &str) -> Result<FinSpace> {
    let err = || Error::UnknownName(name.to_string());
    let (base, arg) = parse_name(name).ok_or_else(err)?;
    let need = |a: Option<usize>| a.filter(|&k| k >= 1).ok_or_else(err);
    match (base, arg) {
        ("point", None) => Ok(point()),
        ("sierpinski", None) => Ok(sierpinski()),
        ("pseudocircle", None) => Ok(pseudocircle()),
        ("discrete", a) => Ok(discrete(need(a)?)),
        ("indiscrete", a) => Ok(indiscrete(need(a)?)),
        ("chain", a) => Ok(chain(need(a)?)),
        ("fence", a) => Ok(fence(need(a)?)),
        ("nonhausdorff_grid", a) => Ok(nonhausdorff_grid(need(a)?)),
        _ => Err(err()),
    }
}

/// The standard catalog, in a fixed order.
pub fn entries() -> Vec<CatalogEntry> {
    let entry = |name: &str, space: FinSpace, notes: &str| CatalogEntry {
        name: name.to_string(),
        space,
        notes: notes.to_string(),
    };
    vec![
        entry("point", point(), "one-point space"),
        entry("discrete(2)", discrete(2), "two isolated points"),
        entry("discrete(3)", discrete(3), "three isolated points"),
        entry("indiscrete(2)", indiscrete(2), "two inseparable points"),
        entry("indiscrete(3)", indiscrete(3), "three inseparable points"),
        entry(
            "sierpinski",
            sierpinski(),
            "a < b; the smallest non-discrete T0 space",
        ),
        entry("chain(3)", chain(3), "a < b < c; 4 open sets"),
        entry("fence(4)", fence(4), "a < b > c < d; path-connected zigzag"),
        entry(
            "pseudocircle",
            pseudocircle(),
            "4 points, weak homotopy type of the circle",
        ),
        entry(
            "nonhausdorff_grid(2)",
            nonhausdorff_grid(2),
            "12 points; hubs a and b cannot be separated in the sense of property (H'); \
             too large for level-3 group constructions under the default size limit",
        ),
    ]
}

/// Catalog entries small enough for level-3 group constructions under the
/// default size limit (alphabets of at most four points).
pub fn group_test_entries() -> Vec<CatalogEntry> {
    entries()
        .into_iter()
        .filter(|e| e.space.point_count() <= 4)
        .collect()
}

const ENUMERATION_RAW_BOUND: usize = 4;
const ENUMERATION_DEDUP_BOUND: usize = 5;

/// All topologies on `n` labelled points, as specialization preorders, in
/// ascending relation-mask order; optionally one representative per
/// homeomorphism class (the lexicographically minimal matrix).
pub fn enumerate_topologies(n: usize, up_to_homeo: bool) -> Result<Vec<FinSpace>> {
    let bound = if up_to_homeo {
        ENUMERATION_DEDUP_BOUND
    } else {
        ENUMERATION_RAW_BOUND
    };
    if n > bound {
        return Err(Error::SizeLimit {
            needed: n,
            limit: bound,
        });
    }
    if n == 0 {
        return Err(Error::InvalidInput("need at least one point".into()));
    }
    let off_diag = n * n - n;
    let labels = alpha_labels(n);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << off_diag) {
        let matrix = mask_to_matrix(n, mask);
        if !is_transitive(n, &matrix) {
            continue;
        }
        if up_to_homeo && canonical_matrix(n, &matrix) != matrix {
            continue;
        }
        let upset = (0..n)
            .map(|x| {
                let mut s = PointSet::empty(n);
                for y in 0..n {
                    if matrix[x * n + y] {
                        s.insert(y);
                    }
                }
                s
            })
            .collect();
        out.push(FinSpace::from_upset(labels.clone(), upset)?);
    }
    Ok(out)
}

fn mask_to_matrix(n: usize, mask: u64) -> Vec<bool> {
    let mut matrix = vec![false; n * n];
    let mut bit = 0;
    for x in 0..n {
        matrix[x * n + x] = true;
        for y in 0..n {
            if x != y {
                matrix[x * n + y] = mask & (1u64 << bit) != 0;
                bit += 1;
            }
        }
    }
    matrix
}

fn is_transitive(n: usize, m: &[bool]) -> bool {
    for x in 0..n {
        for y in 0..n {
            if m[x * n + y] {
                for z in 0..n {
                    if m[y * n + z] && !m[x * n + z] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut current, &mut out);
    out
}

fn heap_permute(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, current, out);
        if k.is_multiple_of(2) {
            current.swap(i, k - 1);
        } else {
            current.swap(0, k - 1);
        }
    }
}

fn permute_matrix(n: usize, m: &[bool], perm: &[usize]) -> Vec<bool> {
    let mut out = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            out[perm[x] * n + perm[y]] = m[x * n + y];
        }
    }
    out
}

fn canonical_matrix(n: usize, m: &[bool]) -> Vec<bool> {
    permutations(n)
        .iter()
        .map(|p| permute_matrix(n, m, p))
        .min()
        .unwrap()
}

fn space_matrix(s: &FinSpace) -> Vec<bool> {
    let n = s.point_count();
    let mut m = vec![false; n * n];
    for x in 0..n {
        for y in s.min_open(x).iter() {
            m[x * n + y] = true;
        }
    }
    m
}

/// The lexicographically minimal relation matrix over all relabelings.
pub fn canonical_form(s: &FinSpace) -> Vec<bool> {
    canonical_matrix(s.point_count(), &space_matrix(s))
}

/// Number of distinct labelled topologies homeomorphic to `s`.
pub fn orbit_size(s: &FinSpace) -> usize {
    let n = s.point_count();
    let m = space_matrix(s);
    let mut seen: Vec<Vec<bool>> = permutations(n)
        .iter()
        .map(|p| permute_matrix(n, &m, p))
        .collect();
    seen.sort();
    seen.dedup();
    seen.len()
}

/// One classification row.
#[derive(Clone, Debug)]
pub struct ClassifyRow {
    pub name: String,
    pub points: usize,
    pub opens: usize,
    pub t0: bool,
    pub t1: bool,
    pub discrete: bool,
    pub h_prime: bool,
    /// T1 verdict for the reduction-topology group at the chosen level.
    pub f_t1: bool,
    /// For every pair `a != b` of alphabet points, `e` and `a b'` have
    /// disjoint open neighborhoods at the chosen level.
    pub f_pairs_separable: bool,
    pub mult_1_1: bool,
    pub coherence_1_2_closed: bool,
    pub coherence_1_2_subspace: bool,
}

/// Classifies each space: separation axioms of the space itself and
/// level-indexed verdicts for its reduction-topology group.
pub fn classify(
    spaces: &[(String, FinSpace)],
    level: usize,
    limit: usize,
) -> Result<Vec<ClassifyRow>> {
    let mut rows = Vec::with_capacity(spaces.len());
    for (name, space) in spaces {
        let sep = space.separation();
        let g = build_reduced_group(space, level, limit)?;
        let k = space.point_count();
        let mut pairs_separable = true;
        for a in 0..k {
            for b in 0..k {
                if a == b {
                    continue;
                }
                let word = Word::from_letters(
                    k,
                    vec![Letter::new(a, Sign::Plus), Letter::new(b, Sign::Minus)],
                )?;
                let idx = g
                    .word_index(&word)
                    .expect("two-letter reduced words exist at level >= 2");
                let e = g.identity_index();
                if !g
                    .topology()
                    .min_open(idx)
                    .is_disjoint(g.topology().min_open(e))
                {
                    pairs_separable = false;
                }
            }
        }
        let coherence = coherence_check(space, 1, 2, limit)?;
        rows.push(ClassifyRow {
            name: name.clone(),
            points: space.point_count(),
            opens: space.open_sets()?.len(),
            t0: sep.t0,
            t1: sep.t1,
            discrete: sep.discrete,
            h_prime: sep.h_prime,
            f_t1: t1_at_level(&g),
            f_pairs_separable: pairs_separable,
            mult_1_1: multiplication_continuous(space, 1, 1, limit)?,
            coherence_1_2_closed: coherence.closed,
            coherence_1_2_subspace: coherence.subspace_equal,
        });
    }
    Ok(rows)
}

/// Helper shared by tests and the census: all continuous surjections between
/// two spaces, as maps.
pub fn continuous_surjections(x: &FinSpace, z: &FinSpace) -> Vec<FinMap> {
    let nx = x.point_count();
    let nz = z.point_count();
    if nz > nx {
        return Vec::new();
    }
    let total = nz.checked_pow(nx as u32).expect("census spaces are tiny");
    let mut out = Vec::new();
    for idx in 0..total {
        let table = crate::finspace::tuple_digits(nz, nx, idx);
        let map = FinMap::new(x.clone(), z.clone(), table).unwrap();
        if map.is_surjective() && map.is_continuous() {
            out.push(map);
        }
    }
    out
}

/// Quotient of a space by an explicit block partition; convenience used by
/// the command-line front end.
pub fn quotient_by_blocks(space: &FinSpace, blocks: Vec<Vec<usize>>) -> Result<(FinSpace, FinMap)> {
    let p = Partition::from_blocks(space.point_count(), blocks)?;
    space.quotient(&p)
}
