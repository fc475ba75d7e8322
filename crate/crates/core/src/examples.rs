//! Concrete permutation realizations of the example groups attached to
//! pointless del Pezzo surfaces of degrees 4, 6 and 8.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Order-32 group for degree 4: even sign changes of five projective
/// coordinates acting on the 10 points (coordinate, sign), extended by
/// the double swap of coordinates (x y)(z t).
///
/// Even-weight sign vectors are a set of coset representatives for the
/// projective quotient of all sign changes by the global sign, so the
/// group is mu_2^4 : mu_2 of order 32.
pub fn dp4_sign_group(caps: &Caps) -> Result<PermGroup> {
    let degree = 10;
    let flip = |support: &[usize]| -> Result<Permutation> {
        let cycles: Vec<Vec<usize>> = support.iter().map(|&i| vec![2 * i, 2 * i + 1]).collect();
        Permutation::from_cycles(degree, &cycles)
    };
    let mut gens = vec![
        flip(&[0, 1])?,
        flip(&[1, 2])?,
        flip(&[2, 3])?,
        flip(&[3, 4])?,
    ];
    // coordinate swap (x y)(z t) carrying each (coordinate, sign) pair
    gens.push(Permutation::from_cycles(
        degree,
        &[vec![0, 2], vec![1, 3], vec![4, 6], vec![5, 7]],
    )?);
    let group = PermGroup::generate(degree, gens, caps)?;
    assert_eq!(group.order(), 32);
    assert_eq!(group.exponent_bound(), 4);
    Ok(group)
}

/// Degree-6 example group mu_n^2 : mu_2^2 for odd prime n: two rotation
/// factors of order n, an involution inverting both, and an involution
/// swapping them. Realized on 2n + 4 points.
pub fn dp6_group(n: usize, caps: &Caps) -> Result<PermGroup> {
    if n < 3 || n.is_multiple_of(2) || !is_prime(n) {
        return Err(Error::NotAnOddPrime(n));
    }
    let rot_a = Permutation::from_cycles(2 * n, &[(0..n).collect()])?;
    let rot_b = Permutation::from_cycles(2 * n, &[(n..2 * n).collect()])?;
    let kernel = PermGroup::generate(2 * n, vec![rot_a, rot_b], caps)?;

    let klein = PermGroup::generate(
        4,
        vec![
            Permutation::from_cycles(4, &[vec![0, 1]])?,
            Permutation::from_cycles(4, &[vec![2, 3]])?,
        ],
        caps,
    )?;

    // inversion i -> -i mod n on both blocks
    let invert = Permutation::from_images(
        (0..2 * n)
            .map(|p| {
                let (block, i) = (p / n, p % n);
                block * n + (n - i) % n
            })
            .collect(),
    )?;
    // swap of the two blocks
    let swap = Permutation::from_images(
        (0..2 * n)
            .map(|p| if p < n { p + n } else { p - n })
            .collect(),
    )?;

    let group = PermGroup::semidirect_product(&kernel, &klein, &[invert, swap], caps)?;
    assert_eq!(group.order(), 4 * n * n);
    Ok(group)
}

/// Degree-8 example group (A5 x A5) : mu_2, the wreath-type extension by
/// the factor swap, realized on 12 points. Its order is 7200.
pub fn dp8_product_group(caps: &Caps) -> Result<PermGroup> {
    let a5 = PermGroup::alternating(5, caps)?;
    swap_wreath(&a5, caps)
}

/// S5 on five points, the degree-8 example with Jordan constant 120.
pub fn dp8_s5_group(caps: &Caps) -> Result<PermGroup> {
    PermGroup::symmetric(5, caps)
}

/// G wr mu_2 on the doubled support: (G x G) extended by the block swap.
pub fn swap_wreath(group: &PermGroup, caps: &Caps) -> Result<PermGroup> {
    let base = PermGroup::direct_product(group, group, caps)?;
    let d = group.degree();
    let swap = Permutation::from_images(
        (0..2 * d)
            .map(|p| if p < d { p + d } else { p - d })
            .collect(),
    )?;
    let flip = PermGroup::generate(2, vec![Permutation::from_cycles(2, &[vec![0, 1]])?], caps)?;
    PermGroup::semidirect_product(&base, &flip, &[swap], caps)
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn dp4_group_is_nonabelian_of_order_32_with_elementary_kernel() {
        let g = dp4_sign_group(&caps()).unwrap();
        assert_eq!(g.order(), 32);
        assert!(!g.is_abelian());
        // the 16 pair-preserving elements form the elementary abelian kernel
        let kernel: Vec<_> = g
            .elements()
            .iter()
            .filter(|e| (0..5).all(|i| e.apply(2 * i) / 2 == i))
            .collect();
        assert_eq!(kernel.len(), 16);
        assert!(kernel.iter().all(|e| e.order() <= 2));
    }

    #[test]
    fn dp4_group_subgroup_census() {
        let g = dp4_sign_group(&caps()).unwrap();
        let subs = g.subgroups(&caps()).unwrap();
        // enumeration is the oracle; cross-checked by Lagrange and by the
        // classical subspace count of F_2^4 for the kernel part
        assert_eq!(subs.len(), 106);
        assert!(subs.iter().all(|s| 32 % s.order() == 0));
        let inside_kernel = subs
            .iter()
            .filter(|s| {
                s.elements()
                    .iter()
                    .all(|e| (0..5).all(|i| e.apply(2 * i) / 2 == i))
            })
            .count();
        assert_eq!(inside_kernel, 67);
    }

    #[test]
    fn dp6_group_orders() {
        assert_eq!(dp6_group(5, &caps()).unwrap().order(), 100);
        assert_eq!(dp6_group(7, &caps()).unwrap().order(), 196);
        assert_eq!(dp6_group(4, &caps()).unwrap_err(), Error::NotAnOddPrime(4));
        assert_eq!(dp6_group(9, &caps()).unwrap_err(), Error::NotAnOddPrime(9));
    }

    #[test]
    fn dp8_product_group_has_order_7200() {
        let g = dp8_product_group(&caps()).unwrap();
        assert_eq!(g.order(), 7200);
        assert_eq!(g.degree(), 12);
    }

    #[test]
    fn dp8_product_normal_subgroups_match_the_simplicity_argument() {
        let g = dp8_product_group(&caps()).unwrap();
        let orders: Vec<usize> = g.normal_subgroups().iter().map(|n| n.order()).collect();
        assert_eq!(orders, vec![1, 3600, 7200]);
    }

    #[test]
    fn swap_wreath_of_c2_is_dihedral_of_order_8() {
        let c2 = PermGroup::cyclic(2, &caps()).unwrap();
        let g = swap_wreath(&c2, &caps()).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
    }
}
