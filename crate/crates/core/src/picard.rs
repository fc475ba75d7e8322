//! Blow-up Picard lattices of the plane: enumeration of (-1)-classes,
//! their intersection matrix, dual graphs, and exact graph automorphism
//! groups.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// An integer divisor class `h*H - sum m_i E_i` on the blow-up of the
/// plane at `r` points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PicClass {
    pub h: i64,
    pub m: Vec<i64>,
}

impl PicClass {
    pub fn new(h: i64, m: Vec<i64>) -> PicClass {
        PicClass { h, m }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    /// Canonical class `-3H + sum E_i`.
    pub fn canonical(r: usize) -> PicClass {
        PicClass {
            h: -3,
            m: vec![-1; r],
        }
    }

    /// Intersection pairing `h_a h_b - sum m_a,i m_b,i`.
    pub fn intersection(&self, other: &PicClass) -> Result<i64> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.h * other.h - self.m.iter().zip(&other.m).map(|(a, b)| a * b).sum::<i64>())
    }

    pub fn self_intersection(&self) -> i64 {
        self.intersection(self).expect("same rank")
    }
}

/// The configuration of all lines ((-1)-classes) on a blow-up at `r`
/// points, with canonical names and the full intersection matrix.
#[derive(Debug, Clone)]
pub struct LineConfig {
    r: usize,
    lines: Vec<(String, PicClass)>,
    gram: Vec<Vec<i64>>,
}

impl LineConfig {
    pub fn r(&self) -> usize {
        self.r
    }

    /// Degree of the surface, `K^2 = 9 - r`.
    pub fn degree(&self) -> usize {
        9 - self.r
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn names(&self) -> Vec<&str> {
        self.lines.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn classes(&self) -> impl Iterator<Item = &PicClass> {
        self.lines.iter().map(|(_, c)| c)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.lines[index].0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lines.iter().position(|(n, _)| n == name)
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn graph(&self) -> Result<LineGraph> {
        if self.lines.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let n = self.lines.len();
        let adjacency: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| i != j && self.gram[i][j] == 1).collect())
            .collect();
        Ok(LineGraph {
            names: self.lines.iter().map(|(n, _)| n.clone()).collect(),
            adjacency,
        })
    }
}

/// Enumerates the lines on the blow-up of the plane at `r <= 6` general
/// points: the integer classes with `l.l = l.K = -1`.
///
/// The two equations force `h` into `{0, 1, 2}` for r <= 6. The search
/// runs up to h = 3 and asserts nothing is found there, re-deriving the
/// bound instead of assuming it.
pub fn blowup_config(r: usize) -> Result<LineConfig> {
    if r > 6 {
        return Err(Error::BlowupRankOutOfRange(r));
    }
    let canonical = PicClass::canonical(r);
    let mut solutions: Vec<PicClass> = Vec::new();
    for h in 0..=3i64 {
        let mut m = vec![0i64; r];
        enumerate_multiplicities(h, &mut m, 0, &canonical, &mut solutions);
    }
    assert!(
        solutions.iter().all(|c| c.h <= 2),
        "line search bound h <= 2 violated"
    );

    let mut named: Vec<(String, PicClass)> = solutions
        .into_iter()
        .map(|c| (line_name(&c, r), c))
        .collect();
    named.sort_by_key(|(name, c)| (name_rank(c), name.clone()));

    let n = named.len();
    let mut gram = vec![vec![0i64; n]; n];
    for (i, row) in gram.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = named[i].1.intersection(&named[j].1)?;
        }
    }
    for (i, row) in gram.iter().enumerate() {
        assert_eq!(row[i], -1);
        for (j, &entry) in row.iter().enumerate() {
            if i != j {
                // off-diagonal intersections stay in {0, 1} for r <= 6
                assert!(entry == 0 || entry == 1);
            }
        }
    }
    Ok(LineConfig {
        r,
        lines: named,
        gram,
    })
}

fn enumerate_multiplicities(
    h: i64,
    m: &mut Vec<i64>,
    pos: usize,
    canonical: &PicClass,
    out: &mut Vec<PicClass>,
) {
    if pos == m.len() {
        let c = PicClass::new(h, m.clone());
        if c.self_intersection() == -1 && c.intersection(canonical).unwrap() == -1 {
            out.push(c);
        }
        return;
    }
    // |m_i| <= h + 1 covers m_i^2 <= h^2 + 1 for all h in range
    for v in -(h + 1)..=(h + 1) {
        m[pos] = v;
        enumerate_multiplicities(h, m, pos + 1, canonical, out);
    }
    m[pos] = 0;
}

fn name_rank(c: &PicClass) -> u8 {
    match c.h {
        0 => 0,
        1 => 1,
        _ => 2,
    }
}

fn line_name(c: &PicClass, r: usize) -> String {
    match c.h {
        0 => {
            let i =
                c.m.iter()
                    .position(|&v| v == -1)
                    .expect("exceptional class");
            format!("E{}", i + 1)
        }
        1 => {
            let picked: Vec<usize> =
                c.m.iter()
                    .enumerate()
                    .filter(|(_, &v)| v == 1)
                    .map(|(i, _)| i + 1)
                    .collect();
            format!("L{}{}", picked[0], picked[1])
        }
        2 => {
            if r == 5 {
                "Q".to_string()
            } else {
                let omitted =
                    c.m.iter()
                        .position(|&v| v == 0)
                        .expect("conic omits one point");
                format!("Q{}", omitted + 1)
            }
        }
        _ => unreachable!("lines have h <= 2"),
    }
}

/// Dual graph of a line configuration: one vertex per line, an edge per
/// intersecting pair.
#[derive(Debug, Clone)]
pub struct LineGraph {
    names: Vec<String>,
    adjacency: Vec<Vec<bool>>,
}

impl LineGraph {
    pub fn from_adjacency(names: Vec<String>, adjacency: Vec<Vec<bool>>) -> Result<LineGraph> {
        if names.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok(LineGraph { names, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacency[i][j] {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    pub fn degree_of(&self, v: usize) -> usize {
        self.adjacency[v].iter().filter(|&&b| b).count()
    }

    /// Full automorphism group, by backtracking over vertex images with
    /// degree and adjacency pruning.
    pub fn automorphisms(&self) -> Result<PermGroup> {
        let n = self.vertex_count();
        if n > 27 {
            return Err(Error::GraphTooLarge(n));
        }
        let gram: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(self.adjacency[i][j])).collect())
            .collect();
        let autos = matrix_automorphisms(&gram, &vec![None; n]);
        Ok(PermGroup::from_elements(n, autos).expect("automorphisms form a group"))
    }

    /// Whether the graph is a single cycle through all its vertices.
    pub fn is_single_cycle(&self) -> bool {
        let n = self.vertex_count();
        if n < 3 || (0..n).any(|v| self.degree_of(v) != 2) {
            return false;
        }
        let mut visited = 1usize;
        let mut prev = 0usize;
        let mut cur = (0..n).find(|&j| self.adjacency[0][j]).expect("degree 2");
        while cur != 0 {
            let next = (0..n)
                .find(|&j| self.adjacency[cur][j] && j != prev)
                .expect("degree 2");
            prev = cur;
            cur = next;
            visited += 1;
        }
        visited == n
    }
}

/// All permutations of `0..n` preserving the matrix entry for entry and
/// extending the given partial assignment. Results come out in
/// lexicographic order.
pub fn matrix_automorphisms(matrix: &[Vec<i64>], partial: &[Option<usize>]) -> Vec<Permutation> {
    let n = matrix.len();
    let mut used = vec![false; n];
    for v in partial.iter().flatten() {
        used[*v] = true;
    }
    let mut image: Vec<Option<usize>> = partial.to_vec();
    let mut found = Vec::new();
    search(matrix, 0, &mut image, &mut used, &mut found);
    found
}

fn search(
    matrix: &[Vec<i64>],
    pos: usize,
    image: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    found: &mut Vec<Permutation>,
) {
    let n = matrix.len();
    if pos == n {
        let images: Vec<usize> = image.iter().map(|v| v.expect("complete")).collect();
        found.push(Permutation::from_images(images).expect("bijection by construction"));
        return;
    }
    if image[pos].is_some() {
        if consistent(matrix, pos, image) {
            search(matrix, pos + 1, image, used, found);
        }
        return;
    }
    for w in 0..n {
        if used[w] {
            continue;
        }
        image[pos] = Some(w);
        if consistent(matrix, pos, image) {
            used[w] = true;
            search(matrix, pos + 1, image, used, found);
            used[w] = false;
        }
        image[pos] = None;
    }
}

fn consistent(matrix: &[Vec<i64>], pos: usize, image: &[Option<usize>]) -> bool {
    let w = image[pos].expect("assigned");
    for u in 0..=pos {
        if let Some(x) = image[u] {
            if matrix[u][pos] != matrix[x][w] || matrix[pos][u] != matrix[w][x] {
                return false;
            }
        }
    }
    true
}

/// Certifies that a group of order 12 is S3 x mu_2: a central involution
/// together with a nonabelian complement of order 6. Returns the central
/// involution as witness, or `None` if the structure is absent.
pub fn hexagon_structure_check(group: &PermGroup) -> Option<Permutation> {
    if group.order() != 12 {
        return None;
    }
    let center = group.center();
    let central_involutions: Vec<Permutation> = center
        .elements()
        .iter()
        .filter(|e| e.order() == 2)
        .cloned()
        .collect();
    for sigma in &central_involutions {
        // look for a nonabelian subgroup of order 6 avoiding sigma
        let caps = crate::config::Caps::default();
        let subs = group.subgroups(&caps).ok()?;
        for s in &subs {
            if s.order() == 6 && !s.is_abelian() && !s.contains(sigma) {
                return Some(sigma.clone());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;

    #[test]
    fn line_counts_for_all_ranks() {
        let expected = [0, 1, 3, 6, 10, 16, 27];
        for (r, &want) in expected.iter().enumerate() {
            assert_eq!(blowup_config(r).unwrap().line_count(), want, "r = {r}");
        }
        assert!(blowup_config(7).is_err());
    }

    #[test]
    fn canonical_class_squares_to_nine_minus_r() {
        for r in 0..=6 {
            assert_eq!(PicClass::canonical(r).self_intersection(), 9 - r as i64);
        }
    }

    #[test]
    fn sixteen_line_names_are_canonical() {
        let config = blowup_config(5).unwrap();
        let names = config.names();
        assert_eq!(
            names,
            vec![
                "E1", "E2", "E3", "E4", "E5", "L12", "L13", "L14", "L15", "L23", "L24", "L25",
                "L34", "L35", "L45", "Q"
            ]
        );
    }

    #[test]
    fn intersection_rules_hold_on_all_pairs() {
        let config = blowup_config(5).unwrap();
        let idx = |n: &str| config.index_of(n).unwrap();
        let gram = config.gram();
        // self-intersections
        for (i, row) in gram.iter().enumerate() {
            assert_eq!(row[i], -1);
        }
        for i in 1..=5usize {
            for j in 1..=5usize {
                if i == j {
                    continue;
                }
                // E_i . E_j = 0, E_i . Q = 1
                assert_eq!(gram[idx(&format!("E{i}"))][idx(&format!("E{j}"))], 0);
            }
            assert_eq!(gram[idx(&format!("E{i}"))][idx("Q")], 1);
        }
        for i in 1..=5usize {
            for j in i + 1..=5usize {
                let lij = idx(&format!("L{i}{j}"));
                // L_ij meets E_i and E_j, misses other E's, misses Q
                for k in 1..=5usize {
                    let expected = i64::from(k == i || k == j);
                    assert_eq!(gram[lij][idx(&format!("E{k}"))], expected);
                }
                assert_eq!(gram[lij][idx("Q")], 0);
                // L_ij . L_kl = 1 iff the index sets are disjoint
                for k in 1..=5usize {
                    for l in k + 1..=5usize {
                        if (i, j) == (k, l) {
                            continue;
                        }
                        let disjoint = i != k && i != l && j != k && j != l;
                        assert_eq!(
                            gram[lij][idx(&format!("L{k}{l}"))],
                            i64::from(disjoint),
                            "L{i}{j} . L{k}{l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sixteen_line_graph_is_five_regular_with_automorphism_group_1920() {
        let graph = blowup_config(5).unwrap().graph().unwrap();
        for v in 0..16 {
            assert_eq!(graph.degree_of(v), 5);
        }
        let autos = graph.automorphisms().unwrap();
        assert_eq!(autos.order(), 1920);
    }

    #[test]
    fn automorphisms_preserve_gram_entry_for_entry() {
        let config = blowup_config(5).unwrap();
        let graph = config.graph().unwrap();
        let autos = graph.automorphisms().unwrap();
        let gram = config.gram();
        for a in autos.elements() {
            for i in 0..16 {
                for j in 0..16 {
                    assert_eq!(gram[i][j], gram[a.apply(i)][a.apply(j)]);
                }
            }
        }
    }

    #[test]
    fn hexagon_is_a_six_cycle_with_automorphism_group_of_order_12() {
        let graph = blowup_config(3).unwrap().graph().unwrap();
        assert!(graph.is_single_cycle());
        let autos = graph.automorphisms().unwrap();
        assert_eq!(autos.order(), 12);
        let sigma = hexagon_structure_check(&autos).expect("S3 x mu_2 structure");
        assert_eq!(sigma.order(), 2);
        // the witness is the antipodal map of the hexagon
        for v in 0..6 {
            assert!(!graph.adjacent(v, sigma.apply(v)));
            assert_ne!(v, sigma.apply(v));
        }
    }

    #[test]
    fn single_vertex_graph_has_trivial_automorphism_group() {
        let graph = blowup_config(1).unwrap().graph().unwrap();
        assert_eq!(graph.automorphisms().unwrap().order(), 1);
    }

    #[test]
    fn twenty_seven_line_graph_has_the_classical_automorphism_count() {
        let graph = blowup_config(6).unwrap().graph().unwrap();
        assert_eq!(graph.vertex_count(), 27);
        assert_eq!(graph.automorphisms().unwrap().order(), 51840);
    }

    #[test]
    fn structure_check_rejects_cyclic_group_of_order_12() {
        let caps = Caps::default();
        let c12 = PermGroup::cyclic(12, &caps).unwrap();
        assert!(hexagon_structure_check(&c12).is_none());
    }

    #[test]
    fn structure_check_accepts_direct_product_s3_mu2() {
        let caps = Caps::default();
        let s3 = PermGroup::symmetric(3, &caps).unwrap();
        let c2 = PermGroup::cyclic(2, &caps).unwrap();
        let g = PermGroup::direct_product(&s3, &c2, &caps).unwrap();
        assert!(hexagon_structure_check(&g).is_some());
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let a = PicClass::new(0, vec![-1, 0, 0]);
        let b = PicClass::new(0, vec![-1, 0]);
        assert_eq!(
            a.intersection(&b).unwrap_err(),
            Error::RankMismatch { left: 3, right: 2 }
        );
    }
}
