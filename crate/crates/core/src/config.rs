/// Enumeration limits shared by all group operations.
///
/// `element_cap` bounds how many elements a group may materialize;
/// `subgroup_cap` bounds the order of groups whose full subgroup lattice
/// may be enumerated. The defaults cover everything the verification
/// suite needs (largest materialized group: order 7200; largest subgroup
/// sweep: order 196).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub element_cap: usize,
    pub subgroup_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            element_cap: 20_000,
            subgroup_cap: 512,
        }
    }
}

impl Caps {
    pub fn with_subgroup_cap(self, subgroup_cap: usize) -> Self {
        Caps {
            subgroup_cap,
            ..self
        }
    }

    pub fn with_element_cap(self, element_cap: usize) -> Self {
        Caps {
            element_cap,
            ..self
        }
    }
}
