use std::collections::VecDeque;

use super::{closure, Action, Partition, MAX_REGULAR_ORDER};
use crate::error::{Error, Result};
use crate::groups::{Assignment, FreeWord, GroupElement, Letter, Permutation};
use crate::sets::{FiniteSet, Point, PointSet};

/// A surjection `f: X → Y` between finite actions together with the images
/// of the source generators under a homomorphism `φ`, satisfying
/// `f(g·x) = φ(g)·f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantMap {
    source: Action,
    target: Action,
    point_map: Vec<usize>,
    generator_images: Vec<GroupElement>,
}

impl EquivariantMap {
    /// Validates surjectivity and equivariance on every generator and point.
    pub fn new(
        source: Action,
        target: Action,
        point_map: Vec<usize>,
        generator_images: Vec<GroupElement>,
    ) -> Result<EquivariantMap> {
        let (n, m) = match (source.degree(), target.degree()) {
            (Some(n), Some(m)) => (n, m),
            _ => return Err(Error::NotFinite),
        };
        if point_map.len() != n {
            return Err(Error::DegreeMismatch(n, point_map.len()));
        }
        if let Some(&y) = point_map.iter().find(|&&y| y >= m) {
            return Err(Error::IncompatiblePoint(format!("{y} (target degree {m})")));
        }
        let mut hit = vec![false; m];
        for &y in &point_map {
            hit[y] = true;
        }
        if let Some(y) = hit.iter().position(|h| !h) {
            return Err(Error::NotSurjective(y));
        }
        if generator_images.len() != source.generator_count() {
            return Err(Error::NotEquivariant(format!(
                "{} generator images for {} generators",
                generator_images.len(),
                source.generator_count()
            )));
        }
        for (g, h) in source.generators().iter().zip(&generator_images) {
            for x in 0..n {
                let lhs = point_map[index(&source.act(g, &Point::Index(x))?)];
                let rhs = index(&target.act(h, &Point::Index(point_map[x]))?);
                if lhs != rhs {
                    return Err(Error::NotEquivariant(format!("f({g}·{x}) = {lhs} but φ({g})·f({x}) = {rhs}")));
                }
            }
        }
        Ok(EquivariantMap { source, target, point_map, generator_images })
    }

    pub fn identity(action: &Action) -> Result<EquivariantMap> {
        let n = action.degree().ok_or(Error::NotFinite)?;
        EquivariantMap::new(action.clone(), action.clone(), (0..n).collect(), action.generators())
    }

    pub fn source(&self) -> &Action {
        &self.source
    }

    pub fn target(&self) -> &Action {
        &self.target
    }

    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.point_map[x]
    }

    /// `φ(w)` for a word in the source generators.
    pub fn map_element(&self, g: &GroupElement) -> Result<GroupElement> {
        let w = g
            .as_word()
            .ok_or_else(|| Error::Precondition("only words in the source generators can be mapped".into()))?;
        let mut acc = self.target.identity();
        for l in w.letters() {
            let image =
                self.generator_images.get(l.generator()).ok_or(Error::UnassignedGenerator(l.generator() + 1))?;
            let factor = if l.is_inverse() { self.target.invert(image)? } else { self.target.normalize(image)? };
            acc = self.target.multiply(&acc, &factor)?;
        }
        Ok(acc)
    }

    /// Blocks `f⁻¹(E_i)` in the same order.
    pub fn pull_back_partition(&self, partition: &Partition) -> Result<Partition> {
        let n = self.point_map.len();
        let blocks = partition
            .blocks()
            .iter()
            .map(|b| {
                self.target.check_set(b)?;
                let b = b.as_finite().expect("target is finite");
                let pts = (0..n).filter(|&x| b.contains(self.point_map[x]));
                Ok(PointSet::Finite(FiniteSet::from_points(n, pts)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&self.source, blocks)
    }
}

fn index(p: &Point) -> usize {
    match p {
        Point::Index(i) => *i,
        Point::Word(_) => unreachable!("finite actions have index points"),
    }
}

/// Permutation of the points induced by `g`.
fn point_permutation(action: &Action, g: &GroupElement) -> Result<Permutation> {
    let n = action.degree().ok_or(Error::NotFinite)?;
    let images = (0..n).map(|x| action.act(g, &Point::Index(x)).map(|p| index(&p))).collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

/// An orbit of a finite action and its description by cosets of the
/// stabilizer of a base point.
#[derive(Clone, Debug)]
pub struct OrbitCosets {
    /// Orbit points in increasing order; the orbit action relabels
    /// `orbit[i]` as `i`.
    pub orbit: Vec<usize>,
    pub orbit_action: Action,
    /// Action on the cosets `g·Stab(x0)`, coset `c` represented by
    /// `representatives[c]`.
    pub coset_action: Action,
    pub representatives: Vec<FreeWord>,
    /// `x ↦ g_x·Stab(x0)` where `g_x·x0 = x`.
    pub map: EquivariantMap,
    pub group_order: Option<usize>,
    pub stabilizer_order: Option<usize>,
    /// Set when the action is not transitive and was restricted to the orbit.
    pub warning: Option<String>,
}

/// Restricts a finite action to the orbit of `x0` and builds the
/// equivariant bijection onto the cosets of `Stab(x0)`.
pub fn orbit_coset_action(action: &Action, x0: usize) -> Result<OrbitCosets> {
    let n = action.degree().ok_or(Error::NotFinite)?;
    if x0 >= n {
        return Err(Error::IncompatiblePoint(x0.to_string()));
    }
    let rank = action.generator_count();
    let gens: Vec<Permutation> =
        action.generators().iter().map(|g| point_permutation(action, g)).collect::<Result<_>>()?;

    // Breadth-first search over generator letters and their inverses.
    let mut coset_of = vec![usize::MAX; n];
    let mut representatives = vec![FreeWord::identity()];
    let mut bfs_points = vec![x0];
    coset_of[x0] = 0;
    let mut queue = VecDeque::from([x0]);
    while let Some(x) = queue.pop_front() {
        for l in Letter::alphabet(rank) {
            let g = &gens[l.generator()];
            let y = if l.is_inverse() { g.inverse().apply(x) } else { g.apply(x) };
            if coset_of[y] == usize::MAX {
                coset_of[y] = representatives.len();
                representatives.push(FreeWord::from_letter(l).multiply(&representatives[coset_of[x]]));
                bfs_points.push(y);
                queue.push_back(y);
            }
        }
    }
    let k = bfs_points.len();
    let mut orbit = bfs_points.clone();
    orbit.sort_unstable();
    let mut position = vec![usize::MAX; n];
    for (i, &x) in orbit.iter().enumerate() {
        position[x] = i;
    }

    let orbit_gens = gens
        .iter()
        .map(|g| Permutation::new(orbit.iter().map(|&x| position[g.apply(x)]).collect()))
        .collect::<Result<Vec<_>>>()?;
    let coset_gens = gens
        .iter()
        .map(|g| Permutation::new(bfs_points.iter().map(|&x| coset_of[g.apply(x)]).collect()))
        .collect::<Result<Vec<_>>>()?;
    let orbit_action = Action::permutation(k, orbit_gens)?;
    let coset_action = Action::permutation(k, coset_gens)?;
    let map = EquivariantMap::new(
        orbit_action.clone(),
        coset_action.clone(),
        orbit.iter().map(|&x| coset_of[x]).collect(),
        coset_action.generators(),
    )?;

    let group_order = closure(&Assignment::new(n, gens)?, MAX_REGULAR_ORDER).ok().map(|e| e.len());
    let warning =
        (k < n).then(|| format!("action is not transitive; restricted to the orbit of {x0} ({k} of {n} points)"));
    Ok(OrbitCosets {
        orbit,
        orbit_action,
        coset_action,
        representatives,
        map,
        group_order,
        stabilizer_order: group_order.map(|g| g / k),
        warning,
    })
}

/// The regular action of the permutation group generated by the action's
/// generators, mapped onto the orbit of `x0` by `g ↦ g·x0`.
///
/// The target is the orbit action of [`orbit_coset_action`]; generator `i`
/// of the regular action maps to generator `i` of the orbit action.
pub fn regular_to_orbit(action: &Action, x0: usize) -> Result<(Action, EquivariantMap)> {
    let orbit = orbit_coset_action(action, x0)?;
    let n = action.degree().expect("finite");
    let gens: Vec<Permutation> =
        action.generators().iter().map(|g| point_permutation(action, g)).collect::<Result<_>>()?;
    let regular = Action::regular(n, gens)?;
    let Action::FiniteRegular(grp) = &regular else { unreachable!() };
    let position = |x: usize| orbit.orbit.binary_search(&x).expect("image lies in the orbit");
    let point_map = grp.elements().iter().map(|g| position(g.apply(x0))).collect();
    let images = orbit.orbit_action.generators();
    let map = EquivariantMap::new(regular.clone(), orbit.orbit_action, point_map, images)?;
    Ok((regular, map))
}
