//! Homomorphisms between permutation groups, given on generators.
//!
//! Well-definedness is certified through the graph subgroup: the pairs
//! (g, image(g)) generate a group whose order equals the source order
//! exactly when the generator assignment extends to a homomorphism.

use std::collections::HashMap;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::table::{regular_representation, TableGroup};

#[derive(Debug)]
pub struct GroupHom {
    source_degree: usize,
    target_degree: usize,
    map: HashMap<Permutation, Permutation>,
}

impl GroupHom {
    /// Builds the homomorphism sending `source.generators()[i]` to
    /// `images[i]`, verifying it is well defined on all elements.
    pub fn new(source: &PermGroup, images: &[Permutation], caps: &Caps) -> Result<GroupHom> {
        if images.len() != source.generators().len() {
            return Err(Error::HomImageCountMismatch {
                expected: source.generators().len(),
                found: images.len(),
            });
        }
        let target_degree = images.first().map(|p| p.degree()).unwrap_or(1);
        for im in images {
            if im.degree() != target_degree {
                return Err(Error::DegreeMismatch {
                    expected: target_degree,
                    found: im.degree(),
                });
            }
        }
        let sd = source.degree();
        let graph_gens: Vec<Permutation> = source
            .generators()
            .iter()
            .zip(images)
            .map(|(g, im)| pair_up(g, im, sd, target_degree))
            .collect::<Result<_>>()?;
        let graph = PermGroup::generate(sd + target_degree, graph_gens, caps)?;
        if graph.order() != source.order() {
            return Err(Error::HomNotWellDefined);
        }
        let mut map = HashMap::with_capacity(graph.order());
        for e in graph.elements() {
            let (first, second) = split(e, sd, target_degree);
            map.insert(first, second);
        }
        Ok(GroupHom {
            source_degree: sd,
            target_degree,
            map,
        })
    }

    /// Same, for a Cayley-table source via its regular representation.
    pub fn from_table(
        source: &TableGroup,
        images: &[Permutation],
        caps: &Caps,
    ) -> Result<GroupHom> {
        GroupHom::new(&regular_representation(source), images, caps)
    }

    pub fn apply(&self, g: &Permutation) -> Result<Permutation> {
        self.map.get(g).cloned().ok_or(Error::NotAMember)
    }

    pub fn image(&self) -> PermGroup {
        let elements: Vec<Permutation> = self.map.values().cloned().collect();
        PermGroup::from_elements(self.target_degree, elements)
            .expect("homomorphic image is a group")
    }

    pub fn kernel(&self) -> PermGroup {
        let elements: Vec<Permutation> = self
            .map
            .iter()
            .filter(|(_, v)| v.is_identity())
            .map(|(k, _)| k.clone())
            .collect();
        PermGroup::from_elements(self.source_degree, elements)
            .expect("kernel of a homomorphism is a group")
    }
}

fn pair_up(g: &Permutation, im: &Permutation, sd: usize, td: usize) -> Result<Permutation> {
    let mut images: Vec<usize> = Vec::with_capacity(sd + td);
    images.extend(g.images().iter().copied());
    images.extend(im.images().iter().map(|&x| x + sd));
    Permutation::from_images(images)
}

fn split(e: &Permutation, sd: usize, td: usize) -> (Permutation, Permutation) {
    let first = Permutation::from_images(e.images()[..sd].to_vec()).expect("left block");
    let second =
        Permutation::from_images(e.images()[sd..sd + td].iter().map(|&x| x - sd).collect())
            .expect("right block");
    (first, second)
}
