use crate::error::{Error, Result};
use crate::linalg::{Echelon, Mat, Subspace, Vector};

/// `A^k v`.
pub fn iterate(a: &Mat, v: &Vector, k: usize) -> Vector {
    (0..k).fold(v.clone(), |x, _| a.apply(&x))
}

/// Jordan chains of a nilpotent matrix as `(seed, length)` pairs.
///
/// Built from the kernel filtration `ker A ⊆ ker A² ⊆ …`, choosing seeds at the
/// deepest level first. The iterates `A^j seed` for `j < length` form a basis
/// and `A^length seed = 0`.
pub fn nilpotent_jordan_chains(a: &Mat) -> Result<Vec<(Vector, usize)>> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "Jordan chains of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut kernels = vec![Subspace::zero(n)];
    let mut power = Mat::identity(n);
    while !kernels.last().expect("nonempty").is_full() {
        if kernels.len() > n {
            return Err(Error::NotNilpotent);
        }
        power = &power * a;
        kernels.push(power.kernel());
    }
    let depth = kernels.len() - 1;
    let mut chains: Vec<(Vector, usize)> = Vec::new();
    for j in (1..=depth).rev() {
        let mut ech = Echelon::new(n);
        for b in kernels[j - 1].basis() {
            ech.try_push(b);
        }
        for (s, l) in &chains {
            ech.try_push(&iterate(a, s, l - j));
        }
        for x in kernels[j].basis() {
            if ech.try_push(x) {
                chains.push((x.clone(), j));
            }
        }
    }
    Ok(chains)
}

/// All iterates `A^j seed`, `j < length`, chain by chain.
pub fn chain_vectors(a: &Mat, chains: &[(Vector, usize)]) -> Vec<Vector> {
    chains
        .iter()
        .flat_map(|(s, l)| (0..*l).map(move |j| iterate(a, s, j)))
        .collect()
}
