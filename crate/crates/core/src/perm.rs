//! Permutations of `{0..n-1}` in image-sequence form.
//!
//! The canonical order on permutations is lexicographic on the image
//! sequence; every set-valued operation in this crate sorts its output
//! by that order so runs are reproducible.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A bijection of `{0..n-1}`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image sequence, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotABijection { len: n });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-indexed cycles, applied right to left.
    ///
    /// Cycles need not be disjoint; a point may not repeat within one cycle.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut result = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..degree).collect();
            let mut seen = vec![false; degree];
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree || seen[p] {
                    return Err(Error::NotABijection { len: degree });
                }
                seen[p] = true;
                images[p] = cycle[(k + 1) % cycle.len()];
            }
            result = Permutation { images }.compose(&result);
        }
        Ok(result)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Function composition: `self.compose(&g)` applies `g` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Conjugate `self` by `x`, that is `x * self * x^-1`.
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        x.compose(self).compose(&x.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn pow(&self, exponent: i64) -> Permutation {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut result = Permutation::identity(self.degree());
        for _ in 0..exponent.unsigned_abs() {
            result = result.compose(&base);
        }
        result
    }

    /// Smallest `k >= 1` with `self^k = id`, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut order: u64 = 1;
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Nontrivial cycles, each starting at its minimal point, sorted by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut cycles = Vec::new();
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            if cycle.len() >= 2 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree())
            .filter(|&i| self.images[i] == i)
            .collect()
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Cycle notation over arbitrary point labels; identity prints as "()".
    pub fn cycle_string_with<F: Fn(usize) -> String>(&self, label: F) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|&p| label(p)).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

/// 1-indexed cycle notation, matching the user-facing convention.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string_with(|p| (p + 1).to_string()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.images)
    }
}
