//! The symmetry group of the 16-line configuration in two coordinates:
//! abstract signed permutations (sigma, v) with an even-weight sign
//! vector, and the explicit action on the canonical 16-line list.
//!
//! Multiplication convention: `(sigma, v) * (tau, w) = (sigma tau,
//! tau^-1(v) + w)`, which makes the line action a homomorphism for the
//! composition order used by `Permutation::compose` (right factor acts
//! first). The homomorphism property is exercised exhaustively in tests
//! rather than assumed.

use std::fmt;
use std::sync::OnceLock;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::picard::{blowup_config, matrix_automorphisms, LineConfig};

pub const POINTS: usize = 5;
pub const LINES: usize = 16;

/// An element (sigma, v): a coordinate permutation of 5 points together
/// with an even-weight sign vector over F2^5.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPerm {
    sigma: Permutation,
    signs: u8,
}

impl SignedPerm {
    pub fn new(sigma: Permutation, sign_mask: u8) -> Result<SignedPerm> {
        if sigma.degree() != POINTS {
            return Err(Error::DegreeMismatch {
                expected: POINTS,
                found: sigma.degree(),
            });
        }
        if (sign_mask & !0x1f) != 0 || !sign_mask.count_ones().is_multiple_of(2) {
            return Err(Error::OddSignWeight);
        }
        Ok(SignedPerm {
            sigma,
            signs: sign_mask,
        })
    }

    pub fn identity() -> SignedPerm {
        SignedPerm {
            sigma: Permutation::identity(POINTS),
            signs: 0,
        }
    }

    pub fn from_sigma(sigma: Permutation) -> Result<SignedPerm> {
        SignedPerm::new(sigma, 0)
    }

    /// The kernel involution flipping signs at the two points `a`, `b`.
    pub fn iota_pair(a: usize, b: usize) -> SignedPerm {
        assert!(a < POINTS && b < POINTS && a != b);
        SignedPerm {
            sigma: Permutation::identity(POINTS),
            signs: (1 << a) | (1 << b),
        }
    }

    /// The kernel involution flipping signs at four points.
    pub fn iota_quad(a: usize, b: usize, c: usize, d: usize) -> SignedPerm {
        let mask = (1u8 << a) | (1 << b) | (1 << c) | (1 << d);
        assert_eq!(mask.count_ones(), 4, "indices must be distinct");
        SignedPerm {
            sigma: Permutation::identity(POINTS),
            signs: mask,
        }
    }

    /// Builds an element from a sign support set, rejecting odd weight.
    pub fn from_parts(sigma: Permutation, support: &[usize]) -> Result<SignedPerm> {
        let mut mask = 0u8;
        for &i in support {
            if i >= POINTS || (mask >> i) & 1 == 1 {
                return Err(Error::NotABijection { len: POINTS });
            }
            mask |= 1 << i;
        }
        SignedPerm::new(sigma, mask)
    }

    /// Natural projection onto the coordinate permutation.
    pub fn rho(&self) -> Permutation {
        self.sigma.clone()
    }

    pub fn sign_mask(&self) -> u8 {
        self.signs
    }

    pub fn sign_support(&self) -> Vec<usize> {
        (0..POINTS)
            .filter(|&i| (self.signs >> i) & 1 == 1)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.signs == 0 && self.sigma.is_identity()
    }

    pub fn mul(&self, other: &SignedPerm) -> SignedPerm {
        let sigma = self.sigma.compose(&other.sigma);
        // tau^-1(v): bit j of the result is bit tau(j) of v
        let mut moved = 0u8;
        for j in 0..POINTS {
            moved |= ((self.signs >> other.sigma.apply(j)) & 1) << j;
        }
        SignedPerm {
            sigma,
            signs: moved ^ other.signs,
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        let sigma_inv = self.sigma.inverse();
        // sigma(v): bit sigma(i) of the result is bit i of v
        let mut moved = 0u8;
        for i in 0..POINTS {
            moved |= ((self.signs >> i) & 1) << self.sigma.apply(i);
        }
        SignedPerm {
            sigma: sigma_inv,
            signs: moved,
        }
    }

    pub fn order(&self) -> u64 {
        let mut n = 1;
        let mut x = self.clone();
        while !x.is_identity() {
            x = x.mul(self);
            n += 1;
        }
        n
    }

    /// The induced permutation of the canonical 16-line list.
    pub fn line_action(&self) -> Permutation {
        let table = line_table();
        let mut action = table.sigma_action(&self.sigma);
        let support = self.sign_support();
        match support.len() {
            0 => {}
            2 => action = action.compose(&table.iota[pair_index(support[0], support[1])]),
            4 => {
                let first = &table.iota[pair_index(support[0], support[1])];
                let second = &table.iota[pair_index(support[2], support[3])];
                action = action.compose(&first.compose(second));
            }
            _ => unreachable!("sign vectors have even weight"),
        }
        action
    }

    /// Names of the lines fixed by this element's line action.
    pub fn fixed_lines(&self) -> Vec<String> {
        let table = line_table();
        self.line_action()
            .fixed_points()
            .into_iter()
            .map(|i| table.config.name(i).to_string())
            .collect()
    }
}

/// Formats elements in the CLI grammar: cycles for the coordinate
/// permutation, "*i" plus 1-indexed digits for the sign support.
impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.sign_support();
        if support.is_empty() {
            return write!(f, "{}", self.sigma);
        }
        let digits: String = support.iter().map(|i| (i + 1).to_string()).collect();
        if self.sigma.is_identity() {
            write!(f, "i{digits}")
        } else {
            write!(f, "{}*i{digits}", self.sigma)
        }
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm({self})")
    }
}

/// All 1920 elements: every coordinate permutation times every
/// even-weight sign vector.
pub fn all_elements(caps: &Caps) -> Result<Vec<SignedPerm>> {
    let s5 = PermGroup::symmetric(POINTS, caps)?;
    let mut out = Vec::with_capacity(1920);
    for sigma in s5.elements() {
        for mask in 0u8..32 {
            if mask.count_ones().is_multiple_of(2) {
                out.push(SignedPerm {
                    sigma: sigma.clone(),
                    signs: mask,
                });
            }
        }
    }
    Ok(out)
}

/// The even-weight sign masks, identity first.
pub fn even_sign_masks() -> Vec<u8> {
    (0u8..32)
        .filter(|m| m.count_ones().is_multiple_of(2))
        .collect()
}

/// The group of all line actions as a degree-16 permutation group,
/// generated by the adjacent coordinate transpositions and one kernel
/// involution.
pub fn full_group(caps: &Caps) -> Result<PermGroup> {
    PermGroup::generate(LINES, standard_generators()?, caps)
}

/// Line actions of (1 2), (2 3), (3 4), (4 5) and iota_12, in that order.
pub fn standard_generators() -> Result<Vec<Permutation>> {
    let mut gens = Vec::new();
    for k in 0..POINTS - 1 {
        let t = Permutation::from_cycles(POINTS, &[vec![k, k + 1]])?;
        gens.push(SignedPerm::from_sigma(t)?.line_action());
    }
    gens.push(SignedPerm::iota_pair(0, 1).line_action());
    Ok(gens)
}

/// Canonical 16-line names in the order the line action permutes.
pub fn line_names() -> Vec<String> {
    line_table()
        .config
        .names()
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// The canonical 16-line configuration backing the action.
pub fn line_configuration() -> &'static LineConfig {
    &line_table().config
}

struct LineTable {
    config: LineConfig,
    e_index: [usize; POINTS],
    l_index: [[usize; POINTS]; POINTS],
    q_index: usize,
    /// Line action of iota_ab, indexed by pair_index(a, b).
    iota: Vec<Permutation>,
}

impl LineTable {
    /// Index permutation of the lines under a coordinate permutation.
    fn sigma_action(&self, sigma: &Permutation) -> Permutation {
        let mut images = vec![0usize; LINES];
        for i in 0..POINTS {
            images[self.e_index[i]] = self.e_index[sigma.apply(i)];
            for j in i + 1..POINTS {
                let (a, b) = ordered(sigma.apply(i), sigma.apply(j));
                images[self.l_index[i][j]] = self.l_index[a][b];
            }
        }
        images[self.q_index] = self.q_index;
        Permutation::from_images(images).expect("index action is a bijection")
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn pair_index(a: usize, b: usize) -> usize {
    let (a, b) = ordered(a, b);
    // pairs (0,1), (0,2), ... in lexicographic order
    a * (2 * POINTS - a - 1) / 2 + (b - a - 1)
}

fn line_table() -> &'static LineTable {
    static TABLE: OnceLock<LineTable> = OnceLock::new();
    TABLE.get_or_init(|| build_line_table().expect("canonical 16-line table builds"))
}

fn build_line_table() -> Result<LineTable> {
    let config = blowup_config(POINTS)?;
    let mut e_index = [0usize; POINTS];
    let mut l_index = [[0usize; POINTS]; POINTS];
    #[allow(clippy::needless_range_loop)]
    for i in 0..POINTS {
        e_index[i] = config
            .index_of(&format!("E{}", i + 1))
            .expect("exceptional line present");
        for j in i + 1..POINTS {
            l_index[i][j] = config
                .index_of(&format!("L{}{}", i + 1, j + 1))
                .expect("line through two points present");
        }
    }
    let q_index = config.index_of("Q").expect("conic line present");

    let mut iota = Vec::new();
    for a in 0..POINTS {
        for b in a + 1..POINTS {
            iota.push(iota_pair_action(&config, &e_index, &l_index, a, b)?);
        }
    }
    Ok(LineTable {
        config,
        e_index,
        l_index,
        q_index,
        iota,
    })
}

/// Builds the line action of iota_ab from its defining values on the
/// exceptional lines, completed to the unique intersection-preserving
/// permutation of all 16 lines.
fn iota_pair_action(
    config: &LineConfig,
    e_index: &[usize; POINTS],
    l_index: &[[usize; POINTS]; POINTS],
    a: usize,
    b: usize,
) -> Result<Permutation> {
    let mut partial: Vec<Option<usize>> = vec![None; LINES];
    partial[e_index[a]] = Some(e_index[b]);
    partial[e_index[b]] = Some(e_index[a]);
    for c in 0..POINTS {
        if c == a || c == b {
            continue;
        }
        let rest: Vec<usize> = (0..POINTS)
            .filter(|&x| x != a && x != b && x != c)
            .collect();
        let (d, e) = (rest[0], rest[1]);
        partial[e_index[c]] = Some(l_index[d][e]);
        partial[l_index[d][e]] = Some(e_index[c]);
    }
    let completions = matrix_automorphisms(config.gram(), &partial);
    if completions.len() != 1 {
        return Err(Error::AmbiguousCompletion(completions.len()));
    }
    let action = completions.into_iter().next().expect("one completion");
    debug_assert!(action.compose(&action).is_identity());
    Ok(action)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn cycle(points: &[usize]) -> Permutation {
        Permutation::from_cycles(POINTS, &[points.to_vec()]).unwrap()
    }

    #[test]
    fn rho_projects_onto_the_coordinate_permutation() {
        assert!(SignedPerm::iota_pair(0, 1).rho().is_identity());
        let g = SignedPerm::from_sigma(cycle(&[0, 1, 2, 3])).unwrap();
        assert_eq!(g.rho(), cycle(&[0, 1, 2, 3]));
        let h = SignedPerm::from_sigma(cycle(&[0, 1, 2, 3]))
            .unwrap()
            .mul(&SignedPerm::iota_pair(0, 4));
        assert_eq!(h.rho(), cycle(&[0, 1, 2, 3]));
    }

    #[test]
    fn odd_weight_is_rejected() {
        assert_eq!(
            SignedPerm::new(Permutation::identity(POINTS), 0b00001).unwrap_err(),
            Error::OddSignWeight
        );
        assert_eq!(
            SignedPerm::from_parts(Permutation::identity(POINTS), &[0, 1, 2]).unwrap_err(),
            Error::OddSignWeight
        );
    }

    #[test]
    fn iota12_maps_e1_to_e2_and_e3_to_l45() {
        let action = SignedPerm::iota_pair(0, 1).line_action();
        let names = line_names();
        let idx = |n: &str| names.iter().position(|x| x == n).unwrap();
        assert_eq!(action.apply(idx("E1")), idx("E2"));
        assert_eq!(action.apply(idx("E3")), idx("L45"));
    }

    #[test]
    fn iota1234_maps_l12_to_l34_and_e5_to_q() {
        let action = SignedPerm::iota_quad(0, 1, 2, 3).line_action();
        let names = line_names();
        let idx = |n: &str| names.iter().position(|x| x == n).unwrap();
        assert_eq!(action.apply(idx("L12")), idx("L34"));
        assert_eq!(action.apply(idx("E5")), idx("Q"));
    }

    #[test]
    fn five_cycle_fixes_exactly_q() {
        let g = SignedPerm::from_sigma(cycle(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(g.fixed_lines(), vec!["Q".to_string()]);
    }

    #[test]
    fn identity_fixes_all_sixteen_lines() {
        assert_eq!(SignedPerm::identity().fixed_lines().len(), 16);
    }

    #[test]
    fn three_cycle_fixes_e4_e5_l45_q() {
        let g = SignedPerm::from_sigma(cycle(&[0, 1, 2])).unwrap();
        assert_eq!(
            g.fixed_lines(),
            vec![
                "E4".to_string(),
                "E5".to_string(),
                "L45".to_string(),
                "Q".to_string()
            ]
        );
    }

    #[test]
    fn full_group_has_order_1920() {
        let g = full_group(&caps()).unwrap();
        assert_eq!(g.order(), 1920);
        // contains every iota_abcd since iota_abcd = iota_ab * iota_cd
        for a in 0..POINTS {
            for b in a + 1..POINTS {
                for c in b + 1..POINTS {
                    for d in c + 1..POINTS {
                        assert!(g.contains(&SignedPerm::iota_quad(a, b, c, d).line_action()));
                    }
                }
            }
        }
    }

    #[test]
    fn line_action_is_a_homomorphism_on_all_generator_pairs() {
        let gens: Vec<SignedPerm> = {
            let mut v = Vec::new();
            for k in 0..POINTS - 1 {
                v.push(SignedPerm::from_sigma(cycle(&[k, k + 1])).unwrap());
            }
            for a in 0..POINTS {
                for b in a + 1..POINTS {
                    v.push(SignedPerm::iota_pair(a, b));
                }
            }
            v.push(SignedPerm::from_sigma(cycle(&[0, 1, 2, 3, 4])).unwrap());
            v
        };
        for g in &gens {
            for h in &gens {
                assert_eq!(
                    g.mul(h).line_action(),
                    g.line_action().compose(&h.line_action()),
                    "homomorphism fails on {g} * {h}"
                );
            }
        }
    }

    #[test]
    fn line_action_is_injective_over_all_1920_elements() {
        let mut seen = std::collections::HashSet::new();
        for g in all_elements(&caps()).unwrap() {
            let action = g.line_action();
            if action.is_identity() {
                assert!(g.is_identity());
            }
            assert!(seen.insert(action), "duplicate action for {g}");
        }
        assert_eq!(seen.len(), 1920);
    }

    #[test]
    fn line_actions_preserve_the_gram_matrix() {
        let config = line_configuration();
        let gram = config.gram();
        for g in all_elements(&caps()).unwrap().iter().take(200) {
            let action = g.line_action();
            for i in 0..LINES {
                for j in 0..LINES {
                    assert_eq!(gram[i][j], gram[action.apply(i)][action.apply(j)]);
                }
            }
        }
    }

    #[test]
    fn centralizer_of_the_four_cycle_is_generated_by_it_and_iota1234() {
        let group = full_group(&caps()).unwrap();
        let four_cycle = SignedPerm::from_sigma(cycle(&[0, 1, 2, 3]))
            .unwrap()
            .line_action();
        let centralizer = group
            .centralizer_of_set(std::slice::from_ref(&four_cycle))
            .unwrap();
        assert_eq!(centralizer.order(), 8);
        let expected = PermGroup::generate(
            LINES,
            vec![four_cycle, SignedPerm::iota_quad(0, 1, 2, 3).line_action()],
            &caps(),
        )
        .unwrap();
        assert!(centralizer.same_elements(&expected));
    }

    #[test]
    fn kernel_of_rho_is_exactly_the_sixteen_sign_actions() {
        let group = full_group(&caps()).unwrap();
        let mut signed_gens: Vec<SignedPerm> = (0..POINTS - 1)
            .map(|k| SignedPerm::from_sigma(cycle(&[k, k + 1])).unwrap())
            .collect();
        signed_gens.push(SignedPerm::iota_pair(0, 1));
        let images: Vec<Permutation> = signed_gens.iter().map(|g| g.rho()).collect();
        let rho = crate::hom::GroupHom::new(&group, &images, &caps()).unwrap();
        let mut kernel: Vec<Permutation> = rho.kernel().elements().to_vec();
        let mut translations: Vec<Permutation> = even_sign_masks()
            .into_iter()
            .map(|mask| {
                SignedPerm::new(Permutation::identity(POINTS), mask)
                    .unwrap()
                    .line_action()
            })
            .collect();
        kernel.sort();
        translations.sort();
        assert_eq!(kernel, translations);
    }

    #[test]
    fn group_axioms_for_signed_perms() {
        let elems = all_elements(&caps()).unwrap();
        assert_eq!(elems.len(), 1920);
        for g in elems.iter().take(40) {
            assert!(g.mul(&g.inverse()).is_identity());
            assert!(g.inverse().mul(g).is_identity());
        }
        // associativity spot check
        let a = &elems[17];
        let b = &elems[911];
        let c = &elems[1500];
        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    }

    #[test]
    fn display_round_trips_the_grammar_shape() {
        let g = SignedPerm::from_sigma(cycle(&[0, 1, 2, 3]))
            .unwrap()
            .mul(&SignedPerm::iota_pair(0, 4));
        assert_eq!(g.to_string(), "(1 2 3 4)*i15");
        assert_eq!(SignedPerm::iota_pair(0, 1).to_string(), "i12");
        assert_eq!(SignedPerm::identity().to_string(), "()");
    }
}
