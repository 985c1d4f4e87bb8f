//! Orbit stratification of the odd-family spaces under the odd symplectic
//! group: the two grassmannian orbits (kernel line inside / transverse), the
//! n+1 flag orbits, and the orbit of each Schubert cell.

use std::fmt;

use crate::error::{Error, Result};
use crate::indices::AdmissibleIndex;
use crate::poincare::Space;
use crate::weyl::{Family, SignedPermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitId {
    /// Grassmannian orbit of subspaces containing the kernel line.
    X0,
    /// Grassmannian orbit of subspaces meeting the kernel line trivially.
    X1,
    /// Flag orbit where the kernel line enters the flag at step i (1-based).
    O(usize),
}

impl fmt::Display for OrbitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrbitId::X0 => write!(f, "X_0"),
            OrbitId::X1 => write!(f, "X_1"),
            OrbitId::O(i) => write!(f, "O_{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitInfo {
    pub id: OrbitId,
    pub dimension: usize,
    pub codimension: usize,
    /// Short description of the orbit's geometric model.
    pub model: String,
    /// Ids of the orbits in this orbit's closure (including itself).
    pub closure: Vec<OrbitId>,
}

/// k(2n−k) − k(k−1)/2, the dimension of the even isotropic grassmannian;
/// accepts k = 0 (a point) unlike [`Space::dimension`].
fn grass_even_dimension(k: usize, n: usize) -> usize {
    if k == 0 {
        return 0;
    }
    k * (2 * n - k) - k * (k - 1) / 2
}

/// The orbit stratification of the odd grassmannian of k-spaces, 1 ≤ k ≤ n+1.
///
/// For k ≤ n there are two orbits; for k = n+1 every isotropic subspace
/// contains the kernel line and the space is a single orbit.
pub fn grassmannian_orbits(k: usize, n: usize) -> Result<Vec<OrbitInfo>> {
    let space = Space::Grassmannian {
        family: Family::Odd { n },
        k,
    };
    space.validate()?;
    let total = space.dimension();
    let closed_dim = grass_even_dimension(k - 1, n);
    if k == n + 1 {
        debug_assert_eq!(closed_dim, total);
        return Ok(vec![OrbitInfo {
            id: OrbitId::X0,
            dimension: total,
            codimension: 0,
            model: format!(
                "homogeneous: every maximal isotropic subspace contains the kernel line; \
                 isomorphic to the lagrangian grassmannian of the reduced {}-space",
                2 * n
            ),
            closure: vec![OrbitId::X0],
        }]);
    }
    Ok(vec![
        OrbitInfo {
            id: OrbitId::X0,
            dimension: closed_dim,
            codimension: total - closed_dim,
            model: format!(
                "closed: subspaces through the kernel line, isomorphic to the even \
                 grassmannian of {}-spaces in the reduced {}-space",
                k - 1,
                2 * n
            ),
            closure: vec![OrbitId::X0],
        },
        OrbitInfo {
            id: OrbitId::X1,
            dimension: total,
            codimension: 0,
            model: format!(
                "open: subspaces meeting the kernel line trivially, the total space of \
                 the dual tautological bundle over the even grassmannian of {k}-spaces"
            ),
            closure: vec![OrbitId::X0, OrbitId::X1],
        },
    ])
}

/// The n+1 orbits of the odd flag manifold, ordered O_1, …, O_{n+1}.
pub fn flag_orbits(n: usize) -> Result<Vec<OrbitInfo>> {
    if n < 1 {
        return Err(Error::InvalidParameter("need n ≥ 1".into()));
    }
    Ok((1..=n + 1)
        .map(|i| OrbitInfo {
            id: OrbitId::O(i),
            dimension: n * n + i - 1,
            codimension: n + 1 - i,
            model: format!(
                "flags where the kernel line enters at step {i}; an affine bundle \
                 over the even flag manifold"
            ),
            closure: (1..=i).map(OrbitId::O).collect(),
        })
        .collect())
}

/// Which grassmannian orbit a Schubert cell lies in: X_0 exactly when the
/// index uses the letter 0 (the pivot at the kernel coordinate).
pub fn grassmannian_cell_orbit(index: &AdmissibleIndex) -> Result<OrbitId> {
    match index.family() {
        Family::Even { .. } => Err(Error::InvalidParameter(
            "orbit stratification only applies to the odd family".into(),
        )),
        Family::Odd { .. } => Ok(if index.letters().contains(&0) {
            OrbitId::X0
        } else {
            OrbitId::X1
        }),
    }
}

/// Which flag orbit a Schubert cell lies in: O_{j+1} where j is the window
/// position carrying the letter 0.
pub fn flag_cell_orbit(w: &SignedPermutation) -> Result<OrbitId> {
    match w.family() {
        Family::Even { .. } => Err(Error::InvalidParameter(
            "orbit stratification only applies to the odd family".into(),
        )),
        Family::Odd { .. } => {
            let j = w
                .window()
                .iter()
                .position(|&l| l == 0)
                .expect("odd windows always contain the letter 0");
            Ok(OrbitId::O(j + 1))
        }
    }
}
