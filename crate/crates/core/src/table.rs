//! Finite groups given by Cayley tables, and exhaustive enumeration of
//! group extensions of elementary abelian 2-groups by the cyclic group
//! of order 4.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A finite group presented by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl TableGroup {
    /// Validates a Latin square with a two-sided identity and an
    /// associative product, checked over all triples.
    pub fn new(table: Vec<Vec<usize>>) -> Result<TableGroup> {
        let m = table.len();
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        for row in &table {
            if row.len() != m {
                return Err(Error::NotALatinSquare);
            }
        }
        // rows and the transposed columns are scanned together, so plain
        // indices read better than a zipped iterator here
        #[allow(clippy::needless_range_loop)]
        for i in 0..m {
            let mut row_seen = vec![false; m];
            let mut col_seen = vec![false; m];
            for j in 0..m {
                let r = table[i][j];
                let c = table[j][i];
                if r >= m || row_seen[r] || c >= m || col_seen[c] {
                    return Err(Error::NotALatinSquare);
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        let identity = (0..m)
            .find(|&e| (0..m).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative);
                    }
                }
            }
        }
        Ok(TableGroup { table, identity })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_abelian(&self) -> bool {
        let m = self.order();
        (0..m).all(|a| (a..m).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut n = 1;
        while x != self.identity {
            x = self.product(x, g);
            n += 1;
        }
        n
    }
}

/// Faithful permutation group of left translations, degree = order.
pub fn regular_representation(group: &TableGroup) -> PermGroup {
    let m = group.order();
    let elements: Vec<Permutation> = (0..m)
        .map(|g| {
            Permutation::from_images((0..m).map(|x| group.product(g, x)).collect())
                .expect("table rows are bijections")
        })
        .collect();
    PermGroup::from_elements(m, elements).expect("left translations form a group")
}

/// One extension of mu_2^k by mu_4: an action together with a valid
/// normalized 2-cocycle, realized as a Cayley table on pairs (a, x)
/// with element index x * 2^k + a.
#[derive(Debug, Clone)]
pub struct Extension {
    pub group: TableGroup,
    /// Image of each kernel element under the automorphism that the
    /// quotient generator acts by.
    pub action: Vec<usize>,
    /// Normalized cocycle values f(x, y) for x, y in 0..4.
    pub cocycle: [[usize; 4]; 4],
    kernel_size: usize,
}

impl Extension {
    pub fn kernel_order(&self) -> usize {
        self.kernel_size
    }

    /// Kernel elements are the table indices 0..2^k.
    pub fn kernel_indices(&self) -> std::ops::Range<usize> {
        0..self.kernel_size
    }

    pub fn action_is_trivial(&self) -> bool {
        self.action.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Whether every kernel element commutes with the whole group.
    pub fn kernel_is_central(&self) -> bool {
        let g = &self.group;
        self.kernel_indices()
            .all(|a| (0..g.order()).all(|x| g.product(a, x) == g.product(x, a)))
    }
}

/// Result of the exhaustive extension sweep for one kernel rank.
#[derive(Debug, Clone)]
pub struct ExtensionSweep {
    pub extensions: Vec<Extension>,
    pub actions_tried: usize,
    pub cocycles_tried: usize,
}

/// Enumerates every extension of mu_2^k by the cyclic group of order 4.
///
/// Sweeps all actions (automorphisms of mu_2^k whose order divides 4,
/// which for k <= 2 means order 1 or 2) times all normalized cocycle
/// candidates, keeps those satisfying the cocycle identity
/// `phi_x(f(y,z)) + f(x, y+z) = f(x,y) + f(x+y, z)`, and materializes
/// each surviving pair as a validated Cayley table.
pub fn enumerate_extensions(kernel_rank: usize) -> Result<ExtensionSweep> {
    if kernel_rank > 2 {
        return Err(Error::UnsupportedKernelRank(kernel_rank));
    }
    let h = 1usize << kernel_rank;
    let actions = involutive_automorphisms(kernel_rank);
    let mut extensions = Vec::new();
    let mut cocycles_tried = 0usize;
    let free_entries = 9; // f(x, y) for x, y in 1..4; the rest is normalized to 0
    let candidates = (h as u64).pow(free_entries as u32);
    for action in &actions {
        // phi_x = action^x
        let mut phi: Vec<Vec<usize>> = vec![(0..h).collect()];
        for x in 1..4 {
            phi.push((0..h).map(|a| action[phi[x - 1][a]]).collect());
        }
        for code in 0..candidates {
            cocycles_tried += 1;
            let mut f = [[0usize; 4]; 4];
            let mut c = code;
            for row in f.iter_mut().skip(1) {
                for value in row.iter_mut().skip(1) {
                    *value = (c % h as u64) as usize;
                    c /= h as u64;
                }
            }
            if !cocycle_identity_holds(&phi, &f) {
                continue;
            }
            let m = 4 * h;
            let mut table = vec![vec![0usize; m]; m];
            for x in 0..4 {
                for a in 0..h {
                    for y in 0..4 {
                        for b in 0..h {
                            let prod_a = a ^ phi[x][b] ^ f[x][y];
                            let prod_x = (x + y) % 4;
                            table[x * h + a][y * h + b] = prod_x * h + prod_a;
                        }
                    }
                }
            }
            let group = TableGroup::new(table)?;
            extensions.push(Extension {
                group,
                action: action.clone(),
                cocycle: f,
                kernel_size: h,
            });
        }
    }
    Ok(ExtensionSweep {
        extensions,
        actions_tried: actions.len(),
        cocycles_tried,
    })
}

fn cocycle_identity_holds(phi: &[Vec<usize>], f: &[[usize; 4]; 4]) -> bool {
    // triples involving the identity hold automatically for normalized f
    for x in 1..4 {
        for y in 1..4 {
            for z in 1..4 {
                if phi[x][f[y][z]] ^ f[x][(y + z) % 4] != f[x][y] ^ f[(x + y) % 4][z] {
                    return false;
                }
            }
        }
    }
    true
}

/// Automorphisms of mu_2^k of order dividing 4, as image tables on
/// bitmask elements. For k <= 2 these are exactly the identity and,
/// for k = 2, the three involutions of GL(2, F2).
fn involutive_automorphisms(kernel_rank: usize) -> Vec<Vec<usize>> {
    let h = 1usize << kernel_rank;
    if kernel_rank < 2 {
        return vec![(0..h).collect()];
    }
    let matrices: [[usize; 4]; 4] = [
        [1, 0, 0, 1], // identity
        [0, 1, 1, 0], // swap the two coordinates
        [1, 1, 0, 1],
        [1, 0, 1, 1],
    ];
    matrices
        .iter()
        .map(|&[a, b, c, d]| {
            (0..h)
                .map(|x| {
                    let (x0, x1) = (x & 1, (x >> 1) & 1);
                    let y0 = (a * x0 + b * x1) % 2;
                    let y1 = (c * x0 + d * x1) % 2;
                    y0 | (y1 << 1)
                })
                .collect()
        })
        .collect()
}

/// Caps instance suitable for groups coming out of the extension sweep.
pub fn extension_caps() -> Caps {
    Caps::default()
}
