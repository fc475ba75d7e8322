//! Jordan constant machinery: minimal index of a normal abelian
//! subgroup, the Jordan constant over all subgroups, the squared-index
//! bound, and commuting-subgroup-pair analysis.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// How an exact Jordan constant was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// nu(G) = |G| forces J(G) = |G| without a subgroup sweep; also used
    /// for abelian groups, where J = 1 needs no sweep either.
    FastPath,
    /// Maximum of nu over the full subgroup lattice.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JordanValue {
    Exact {
        value: u64,
        method: Method,
    },
    /// The group exceeds the subgroup cap and the fast path does not
    /// apply; `nu` is a proven lower bound but the exact value is open.
    LowerBoundOnly,
}

#[derive(Debug, Clone)]
pub struct JordanResult {
    pub group_order: u64,
    /// Minimal index of a normal abelian subgroup.
    pub nu: u64,
    /// A normal abelian subgroup of maximal order witnessing nu.
    pub witness: PermGroup,
    pub jordan: JordanValue,
}

impl JordanResult {
    pub fn exact_value(&self) -> Option<u64> {
        match self.jordan {
            JordanValue::Exact { value, .. } => Some(value),
            JordanValue::LowerBoundOnly => None,
        }
    }

    pub fn method_label(&self) -> &'static str {
        match self.jordan {
            JordanValue::Exact {
                method: Method::FastPath,
                ..
            } => "fast-path",
            JordanValue::Exact {
                method: Method::Exhaustive,
                ..
            } => "exhaustive",
            JordanValue::LowerBoundOnly => "lower-bound-only",
        }
    }
}

/// Minimal index of a normal abelian subgroup, with a maximal-order
/// witness (ties broken by canonical element-set order).
///
/// Abelian groups short-circuit to (1, G); otherwise the normal lattice
/// is enumerated by conjugacy-class joins.
pub fn nu(group: &PermGroup) -> (u64, PermGroup) {
    if group.is_abelian() {
        return (1, group.clone());
    }
    let mut best: Option<PermGroup> = None;
    for n in group.normal_subgroups() {
        if !n.is_abelian() {
            continue;
        }
        match &best {
            Some(b) if b.order() >= n.order() => {}
            _ => best = Some(n),
        }
    }
    let witness = best.expect("the trivial subgroup is normal and abelian");
    ((group.order() / witness.order()) as u64, witness)
}

/// The Jordan constant of a finite group: the maximum of nu over all
/// subgroups.
///
/// Fast path: if nu(G) = |G| then J(G) = |G| because nu(H) <= |H| <= |G|
/// for every subgroup H. Otherwise the subgroup lattice is swept when
/// |G| fits under the cap; if it does not, the result is marked as a
/// lower bound rather than silently reported as exact.
pub fn jordan_constant(group: &PermGroup, caps: &Caps) -> JordanResult {
    let (nu_value, witness) = nu(group);
    let group_order = group.order() as u64;
    if nu_value == group_order {
        return JordanResult {
            group_order,
            nu: nu_value,
            witness,
            jordan: JordanValue::Exact {
                value: group_order,
                method: Method::FastPath,
            },
        };
    }
    if group.is_abelian() {
        return JordanResult {
            group_order,
            nu: 1,
            witness,
            jordan: JordanValue::Exact {
                value: 1,
                method: Method::FastPath,
            },
        };
    }
    match jordan_exhaustive(group, caps) {
        Ok(value) => JordanResult {
            group_order,
            nu: nu_value,
            witness,
            jordan: JordanValue::Exact {
                value,
                method: Method::Exhaustive,
            },
        },
        Err(_) => JordanResult {
            group_order,
            nu: nu_value,
            witness,
            jordan: JordanValue::LowerBoundOnly,
        },
    }
}

/// Maximum of nu over the full subgroup lattice, ignoring fast paths.
pub fn jordan_exhaustive(group: &PermGroup, caps: &Caps) -> Result<u64> {
    let subgroups = group.subgroups(caps)?;
    Ok(subgroups
        .iter()
        .map(|h| nu(h).0)
        .max()
        .expect("the lattice contains the trivial subgroup"))
}

/// Checks that J(G) never exceeds the squared index of an abelian
/// subgroup.
///
/// This is a theorem for finite groups, so a `false` return signals an
/// engine defect rather than a property of the input.
pub fn isaacs_bound_check(group: &PermGroup, caps: &Caps) -> Result<bool> {
    let result = jordan_constant(group, caps);
    let j = match result.jordan {
        JordanValue::Exact { value, .. } => value,
        JordanValue::LowerBoundOnly => {
            return Err(Error::SubgroupCapExceeded {
                order: group.order(),
                cap: caps.subgroup_cap,
            })
        }
    };
    for a in group.subgroups(caps)? {
        if !a.is_abelian() {
            continue;
        }
        let index = (group.order() / a.order()) as u64;
        if j > index * index {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All ordered pairs of subgroups (A, B) with every element of A
/// commuting with every element of B.
pub fn commuting_subgroup_pairs(
    group: &PermGroup,
    caps: &Caps,
) -> Result<Vec<(PermGroup, PermGroup)>> {
    let subgroups = group.subgroups(caps)?;
    let centralizers: Vec<PermGroup> = subgroups
        .iter()
        .map(|a| {
            group
                .centralizer_of_set(a.elements())
                .expect("subgroup elements are members")
        })
        .collect();
    let mut pairs = Vec::new();
    for (a, cent) in subgroups.iter().zip(&centralizers) {
        for b in &subgroups {
            if b.is_subgroup_of(cent) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn abelian_groups_have_nu_one_with_full_witness() {
        let g = PermGroup::cyclic(12, &caps()).unwrap();
        let (v, witness) = nu(&g);
        assert_eq!(v, 1);
        assert!(witness.same_elements(&g));
        let result = jordan_constant(&g, &caps());
        assert_eq!(result.exact_value(), Some(1));
    }

    #[test]
    fn s5_hits_the_fast_path_at_its_full_order() {
        let g = PermGroup::symmetric(5, &caps()).unwrap();
        let (v, witness) = nu(&g);
        assert_eq!(v, 120);
        assert_eq!(witness.order(), 1);
        let result = jordan_constant(&g, &caps());
        assert_eq!(result.exact_value(), Some(120));
        assert_eq!(result.method_label(), "fast-path");
    }

    #[test]
    fn fast_path_agrees_with_exhaustive_sweep() {
        for g in [
            PermGroup::alternating(5, &caps()).unwrap(),
            PermGroup::symmetric(5, &caps()).unwrap(),
        ] {
            let (v, _) = nu(&g);
            assert_eq!(v as usize, g.order());
            assert_eq!(jordan_exhaustive(&g, &caps()).unwrap(), g.order() as u64);
        }
    }

    #[test]
    fn s3_has_jordan_constant_two_within_the_squared_index_bound() {
        let g = PermGroup::symmetric(3, &caps()).unwrap();
        let result = jordan_constant(&g, &caps());
        assert_eq!(result.exact_value(), Some(2));
        assert_eq!(result.method_label(), "exhaustive");
        assert!(isaacs_bound_check(&g, &caps()).unwrap());
    }

    #[test]
    fn trivial_group_has_jordan_constant_one() {
        let g = PermGroup::trivial(1);
        assert_eq!(jordan_constant(&g, &caps()).exact_value(), Some(1));
    }

    #[test]
    fn lower_bound_is_reported_when_the_cap_blocks_the_sweep() {
        let g = PermGroup::symmetric(4, &caps()).unwrap();
        let tight = caps().with_subgroup_cap(8);
        let result = jordan_constant(&g, &tight);
        assert_eq!(result.jordan, JordanValue::LowerBoundOnly);
        assert_eq!(result.nu, 6);
        assert_eq!(result.method_label(), "lower-bound-only");
    }

    #[test]
    fn monotone_over_subgroups_of_s4() {
        let g = PermGroup::symmetric(4, &caps()).unwrap();
        let jg = jordan_constant(&g, &caps()).exact_value().unwrap();
        for h in g.subgroups(&caps()).unwrap() {
            let jh = jordan_constant(&h, &caps()).exact_value().unwrap();
            assert!(jh <= jg, "J({}) = {jh} > J(S4) = {jg}", h.order());
        }
    }

    #[test]
    fn commuting_pairs_of_an_abelian_group_are_all_pairs() {
        let g = PermGroup::cyclic(6, &caps()).unwrap();
        let subs = g.subgroups(&caps()).unwrap();
        let pairs = commuting_subgroup_pairs(&g, &caps()).unwrap();
        assert_eq!(pairs.len(), subs.len() * subs.len());
    }

    #[test]
    fn hexagon_commuting_pairs_match_the_centralizer_case_analysis() {
        let group = crate::picard::blowup_config(3)
            .unwrap()
            .graph()
            .unwrap()
            .automorphisms()
            .unwrap();
        let sigma = crate::picard::hexagon_structure_check(&group).unwrap();
        let sigma_group = PermGroup::generate(group.degree(), vec![sigma], &caps()).unwrap();
        let pairs = commuting_subgroup_pairs(&group, &caps()).unwrap();
        // partners of each nonabelian order-6 subgroup are exactly the
        // subgroups of <sigma>; partners of mu_6 are exactly its own subgroups
        for a in group.subgroups(&caps()).unwrap() {
            if a.order() != 6 {
                continue;
            }
            let partners: Vec<&PermGroup> = pairs
                .iter()
                .filter(|(x, _)| x.same_elements(&a))
                .map(|(_, b)| b)
                .collect();
            if a.is_abelian() {
                assert_eq!(partners.len(), 4);
                assert!(partners.iter().all(|b| b.is_subgroup_of(&a)));
            } else {
                assert_eq!(partners.len(), 2);
                assert!(partners.iter().all(|b| b.is_subgroup_of(&sigma_group)));
            }
        }
    }

    #[test]
    fn isaacs_bound_holds_trivially_for_abelian_groups() {
        let g = PermGroup::cyclic(9, &caps()).unwrap();
        assert!(isaacs_bound_check(&g, &caps()).unwrap());
    }

    #[test]
    fn jordan_is_one_iff_abelian_on_small_groups() {
        for g in [
            PermGroup::cyclic(8, &caps()).unwrap(),
            PermGroup::symmetric(3, &caps()).unwrap(),
            PermGroup::dihedral(4, &caps()).unwrap(),
            PermGroup::alternating(4, &caps()).unwrap(),
        ] {
            let j = jordan_constant(&g, &caps()).exact_value().unwrap();
            assert_eq!(j == 1, g.is_abelian());
            assert_eq!(nu(&g).0 == 1, g.is_abelian());
        }
    }
}
