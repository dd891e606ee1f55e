//! Exact diagonalization in a truncated Fock space.
//!
//! Basis order: `|+z, n⟩` at index `2n`, `|−z, n⟩` at `2n + 1`, for
//! `n = 0..=n_max`. In this basis both Hamiltonians are real symmetric.
//! Every coupling term changes the photon number by one and flips the spin,
//! so truncation preserves parity and the two parity sectors can be solved
//! separately.

mod eigen;
mod hamiltonian;
mod matrix;

pub use eigen::{eigensolve, eigenvalues, EigenDecomposition, MAX_DIM};
pub use hamiltonian::{build_effective_hamiltonian, build_hamiltonian, parity_matrix};
pub use matrix::DenseSymmetricMatrix;

use crate::analytic::{Label, Spin};
use crate::error::{Error, Result};
use crate::model::ModelParams;

pub const DEFAULT_N_MAX: usize = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedSpace {
    n_max: usize,
}

impl TruncatedSpace {
    pub fn new(n_max: usize) -> Result<Self> {
        if 2 * (n_max + 1) > MAX_DIM {
            return Err(Error::Domain(format!(
                "n_max = {n_max} exceeds the dense solver limit"
            )));
        }
        Ok(Self { n_max })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        2 * (self.n_max + 1)
    }

    pub fn index(&self, spin: Spin, n: usize) -> usize {
        match spin {
            Spin::Up => 2 * n,
            Spin::Down => 2 * n + 1,
        }
    }

    /// Parity `s (−1)^n` of the basis state at `index`.
    pub fn parity_of(&self, index: usize) -> i8 {
        let n = index / 2;
        let spin: i8 = if index.is_multiple_of(2) { 1 } else { -1 };
        if n.is_multiple_of(2) {
            spin
        } else {
            -spin
        }
    }

    /// Basis indices of one parity sector, ordered by photon number.
    /// Each sector holds exactly one state per `n`.
    pub fn sector_indices(&self, parity: i8) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.parity_of(i) == parity)
            .collect()
    }
}

/// Energies of both parity sectors, each ascending; index `k` in a sector
/// is the state labelled `|parity, k⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParitySpectrum {
    pub plus: Vec<f64>,
    pub minus: Vec<f64>,
}

impl ParitySpectrum {
    pub fn energy(&self, label: Label) -> Option<f64> {
        let sector = if label.parity > 0 {
            &self.plus
        } else {
            &self.minus
        };
        sector.get(label.index).copied()
    }

    /// Both sectors merged, ascending, truncated to `count`.
    pub fn lowest(&self, count: usize) -> Vec<LabeledEnergy> {
        let label = |parity: i8| {
            move |(k, &energy): (usize, &f64)| LabeledEnergy {
                label: Label::new(parity, k),
                energy,
            }
        };
        let mut all: Vec<LabeledEnergy> = self
            .plus
            .iter()
            .enumerate()
            .map(label(1))
            .chain(self.minus.iter().enumerate().map(label(-1)))
            .collect();
        all.sort_by(|a, b| a.energy.total_cmp(&b.energy).then(a.label.cmp(&b.label)));
        all.truncate(count);
        all
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabeledEnergy {
    pub label: Label,
    pub energy: f64,
}

/// Eigenvalues of each parity block of the full Hamiltonian.
pub fn parity_spectrum(params: &ModelParams, space: &TruncatedSpace) -> Result<ParitySpectrum> {
    let h = build_hamiltonian(params, space);
    Ok(ParitySpectrum {
        plus: eigenvalues(&h.submatrix(&space.sector_indices(1)))?,
        minus: eigenvalues(&h.submatrix(&space.sector_indices(-1)))?,
    })
}

/// The `n_levels` lowest levels with their `|n₀, n₁⟩` labels.
pub fn labeled_spectrum(
    params: &ModelParams,
    space: &TruncatedSpace,
    n_levels: usize,
) -> Result<Vec<LabeledEnergy>> {
    if n_levels == 0 || n_levels > space.dim() / 4 {
        return Err(Error::Domain(format!(
            "n_levels must be in 1..={} for n_max = {}",
            space.dim() / 4,
            space.n_max()
        )));
    }
    Ok(parity_spectrum(params, space)?.lowest(n_levels))
}

/// Eigenstate `|label⟩` of the full Hamiltonian, embedded in the full basis.
pub fn labeled_state(
    params: &ModelParams,
    space: &TruncatedSpace,
    label: Label,
) -> Result<(f64, Vec<f64>)> {
    let h = build_hamiltonian(params, space);
    let indices = space.sector_indices(label.parity);
    let dec = eigensolve(&h.submatrix(&indices))?;
    if label.index >= dec.dim() {
        return Err(Error::Domain(format!(
            "label {label} beyond truncated sector"
        )));
    }
    let local = dec.vector(label.index);
    let mut full = vec![0.0; space.dim()];
    for (&i, &a) in indices.iter().zip(&local) {
        full[i] = a;
    }
    Ok((dec.values[label.index], full))
}

/// True ground state: the lower of the two sector minima.
pub fn ground_state(params: &ModelParams, space: &TruncatedSpace) -> Result<(f64, Vec<f64>)> {
    let minus = labeled_state(params, space, Label::new(-1, 0))?;
    let plus = labeled_state(params, space, Label::new(1, 0))?;
    Ok(if plus.0 < minus.0 { plus } else { minus })
}

/// Operators diagonal in the spin⊗Fock basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observable {
    PhotonNumber,
    SigmaZ,
    /// `N = a⁺a + σz/2 + 1/2`.
    PolaritonNumber,
    PolaritonNumberSquared,
}

impl Observable {
    fn diagonal(self, index: usize) -> f64 {
        let n = (index / 2) as f64;
        let sz = if index.is_multiple_of(2) { 1.0 } else { -1.0 };
        match self {
            Observable::PhotonNumber => n,
            Observable::SigmaZ => sz,
            Observable::PolaritonNumber => n + 0.5 * (sz + 1.0),
            Observable::PolaritonNumberSquared => (n + 0.5 * (sz + 1.0)).powi(2),
        }
    }
}

/// `⟨v|O|v⟩` for a normalized state in the interleaved basis.
pub fn expectation(vector: &[f64], which: Observable) -> Result<f64> {
    if !vector.len().is_multiple_of(2) {
        return Err(Error::DimensionMismatch {
            expected: vector.len() + 1,
            got: vector.len(),
        });
    }
    let norm_sq: f64 = vector.iter().map(|a| a * a).sum();
    if (norm_sq - 1.0).abs() > 1e-10 {
        return Err(Error::UnnormalizedState { norm_sq });
    }
    Ok(vector
        .iter()
        .enumerate()
        .map(|(i, a)| a * a * which.diagonal(i))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(g: f64, gp: f64) -> ModelParams {
        ModelParams::new(1.0, 0.3, g, gp).unwrap()
    }

    #[test]
    fn sectors_partition_the_basis() {
        let s = TruncatedSpace::new(5).unwrap();
        let mut all = s.sector_indices(1);
        assert_eq!(all.len(), 6);
        assert_eq!(&all[..3], &[0, 3, 4]);
        all.extend(s.sector_indices(-1));
        all.sort();
        assert_eq!(all, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn bare_levels_are_labelled_by_parity() {
        let s = TruncatedSpace::new(20).unwrap();
        let levels = labeled_spectrum(&params(0.0, 0.0), &s, 4).unwrap();
        let expected = [(-1, 0, -0.3), (1, 0, 0.3), (1, 1, 0.7), (-1, 1, 1.3)];
        for (l, (p, k, e)) in levels.iter().zip(expected) {
            assert_eq!(l.label, Label::new(p, k));
            assert_relative_eq!(l.energy, e, epsilon = 1e-14);
        }
    }

    #[test]
    fn jc_levels_match_closed_form() {
        let p = params(0.3, 0.0);
        let s = TruncatedSpace::new(DEFAULT_N_MAX).unwrap();
        let spec = parity_spectrum(&p, &s).unwrap();
        assert_relative_eq!(
            spec.energy(Label::new(-1, 0)).unwrap(),
            -0.3,
            epsilon = 1e-12
        );
        for n in 1..=8usize {
            let det = 0.5 * (0.6 - 1.0);
            let root = (det * det + 0.09 * n as f64).sqrt();
            let c = n as f64 - 0.5;
            let parity = if n % 2 == 1 { 1 } else { -1 };
            assert!((spec.energy(Label::new(parity, n - 1)).unwrap() - (c - root)).abs() <= 1e-8);
            assert!((spec.energy(Label::new(parity, n)).unwrap() - (c + root)).abs() <= 1e-8);
        }
    }

    #[test]
    fn labeled_spectrum_bounds() {
        let s = TruncatedSpace::new(7).unwrap();
        assert!(labeled_spectrum(&params(0.1, 0.1), &s, 5).is_err());
        assert!(labeled_spectrum(&params(0.1, 0.1), &s, 0).is_err());
        assert_eq!(labeled_spectrum(&params(0.1, 0.1), &s, 4).unwrap().len(), 4);
    }

    #[test]
    fn expectation_examples() {
        let s = TruncatedSpace::new(5).unwrap();
        let mut v = vec![0.0; s.dim()];
        v[s.index(Spin::Down, 3)] = 1.0;
        assert_eq!(expectation(&v, Observable::PhotonNumber).unwrap(), 3.0);
        assert_eq!(expectation(&v, Observable::SigmaZ).unwrap(), -1.0);
        let mut v = vec![0.0; s.dim()];
        v[s.index(Spin::Down, 0)] = 1.0;
        assert_eq!(expectation(&v, Observable::PolaritonNumber).unwrap(), 0.0);
        let mut v = vec![0.0; s.dim()];
        v[s.index(Spin::Up, 2)] = 1.0;
        assert_eq!(
            expectation(&v, Observable::PolaritonNumberSquared).unwrap(),
            9.0
        );

        let half = vec![0.5; 2];
        assert!(matches!(
            expectation(&half, Observable::SigmaZ),
            Err(Error::UnnormalizedState { .. })
        ));
        assert!(expectation(&[1.0], Observable::SigmaZ).is_err());
    }

    #[test]
    fn oracle_ground_photons_near_lambda_squared() {
        let p = params(0.1, 0.2);
        let s = TruncatedSpace::new(DEFAULT_N_MAX).unwrap();
        let (_, v) = ground_state(&p, &s).unwrap();
        let photons = expectation(&v, Observable::PhotonNumber).unwrap();
        let lam = crate::model::solve_lambda(&p, 1).unwrap().lam;
        assert!(
            (photons / (lam * lam) - 1.0).abs() <= 0.1,
            "{photons} vs {}",
            lam * lam
        );
    }

    #[test]
    fn oversized_space_rejected() {
        assert!(TruncatedSpace::new(600).is_err());
        assert!(TruncatedSpace::new(0).is_ok());
    }
}
