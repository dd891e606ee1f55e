//! Analytic spectrum: ground level, doublet energies, mixing angles,
//! wavefunction expansions and the parity labels `|n₀, n₁⟩`.
//!
//! Doublet `n ≥ 1` lives in `{|+z, n−1⟩, |−z, n⟩}` of the transformed
//! Hamiltonian with `λ = λ_n`; the ground level is `|−z, 0⟩` with `λ = λ₁`.

use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::model::{coeff_g, coeff_r, solve_lambda, LambdaSolution, ModelParams};
use crate::special::displaced_fock_element;

/// Eigenstate of σz.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn sign(self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Minus,
    Plus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelKind {
    Ground,
    Doublet(Branch),
}

/// Parity quantum number `n₀ = ±1` and the index `n₁` within that parity sector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    pub parity: i8,
    pub index: usize,
}

impl Label {
    pub fn new(parity: i8, index: usize) -> Self {
        debug_assert!(parity == 1 || parity == -1);
        Self { parity, index }
    }

    /// Label of an analytic level: ground is `(−1, 0)`; doublet `n` sits in
    /// parity `(−1)^{n+1}` with indices `n − 1` (minus) and `n` (plus).
    pub fn for_level(kind: LevelKind, n: usize) -> Self {
        match kind {
            LevelKind::Ground => Self::new(-1, 0),
            LevelKind::Doublet(branch) => {
                let parity = if n % 2 == 1 { 1 } else { -1 };
                let index = match branch {
                    Branch::Minus => n - 1,
                    Branch::Plus => n,
                };
                Self::new(parity, index)
            }
        }
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "|{:+}, {}⟩", self.parity, self.index)
    }
}

/// One analytic eigenlevel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticLevel {
    pub kind: LevelKind,
    /// Doublet index; 0 for the ground level.
    pub n: usize,
    pub energy: f64,
    /// Mixing angle θ_n; 0 for the ground level.
    pub theta: f64,
    pub lam: f64,
    pub label: Label,
}

/// The 2×2 block of the transformed Hamiltonian in `{|+z, n−1⟩, |−z, n⟩}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubletBlock {
    pub n: usize,
    pub lambda: LambdaSolution,
    pub h11: f64,
    pub h22: f64,
    /// `2 R_n(λ_n)`.
    pub off: f64,
    pub r: f64,
    pub g_lower: f64,
    pub g_upper: f64,
}

impl DoubletBlock {
    /// `(E_{n−}, E_{n+})` in the closed form.
    pub fn energies(&self, params: &ModelParams) -> (f64, f64) {
        let n = self.n as f64;
        let lam = self.lambda.lam;
        let w = params.omega();
        let center = (n - 0.5) * w + w * lam * lam - 2.0 * params.g1() * lam
            + 0.5 * (self.g_lower - self.g_upper);
        let half_diff = 0.5 * (-w + self.g_lower + self.g_upper);
        let half_gap = (half_diff * half_diff + 4.0 * self.r * self.r).sqrt();
        (center - half_gap, center + half_gap)
    }
}

pub fn doublet_block(params: &ModelParams, n: usize) -> Result<DoubletBlock> {
    if n == 0 {
        return Err(Error::Domain("doublets are indexed from n = 1".into()));
    }
    let lambda = solve_lambda(params, n)?;
    let lam = lambda.lam;
    let w = params.omega();
    let shift = w * lam * lam - 2.0 * params.g1() * lam;
    let g_lower = coeff_g(params, lam, n - 1);
    let g_upper = coeff_g(params, lam, n);
    let r = coeff_r(params, lam, n)?;
    Ok(DoubletBlock {
        n,
        lambda,
        h11: (n - 1) as f64 * w + shift + g_lower,
        h22: n as f64 * w + shift - g_upper,
        off: 2.0 * r,
        r,
        g_lower,
        g_upper,
    })
}

/// `E_G = ωλ₁² − 2g₁λ₁ − G₀(λ₁)`, labelled `(−1, 0)`.
pub fn ground_energy(params: &ModelParams) -> Result<AnalyticLevel> {
    let lam = solve_lambda(params, 1)?.lam;
    let e = (-2.0 * lam * lam).exp();
    let energy = params.omega() * lam * lam
        - 2.0 * params.g1() * lam
        - params.big_omega() * e
        - 2.0 * params.g2() * lam * e;
    Ok(AnalyticLevel {
        kind: LevelKind::Ground,
        n: 0,
        energy,
        theta: 0.0,
        lam,
        label: Label::for_level(LevelKind::Ground, 0),
    })
}

/// Both levels of doublet `n`, lower first.
pub fn doublet_energies(params: &ModelParams, n: usize) -> Result<(AnalyticLevel, AnalyticLevel)> {
    let block = doublet_block(params, n)?;
    let (lower, upper) = block.energies(params);
    let theta = mixing_angle_of(block.h11, block.h22, block.off).theta;
    let level = |branch, energy| {
        let kind = LevelKind::Doublet(branch);
        AnalyticLevel {
            kind,
            n,
            energy,
            theta,
            lam: block.lambda.lam,
            label: Label::for_level(kind, n),
        }
    };
    Ok((level(Branch::Minus, lower), level(Branch::Plus, upper)))
}

/// Rotation angle of a real symmetric 2×2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingAngle {
    pub theta: f64,
    /// Set when the block is a multiple of the identity; θ is then
    /// arbitrary and reported as π/4.
    pub degenerate: bool,
}

/// θ ∈ (−π/2, π/2] with `(cos θ, sin θ)` the eigenvector of the lower eigenvalue
/// of `[[h11, off], [off, h22]]`.
pub fn mixing_angle_of(h11: f64, h22: f64, off: f64) -> MixingAngle {
    const DEGENERACY_TOL: f64 = 1e-14;
    if (h11 - h22).abs() <= DEGENERACY_TOL && off.abs() <= DEGENERACY_TOL {
        return MixingAngle {
            theta: FRAC_PI_4,
            degenerate: true,
        };
    }
    // atan2(−0, x < 0) would land on −π
    let y = if off == 0.0 { 0.0 } else { -2.0 * off };
    MixingAngle {
        theta: 0.5 * y.atan2(h22 - h11),
        degenerate: false,
    }
}

pub fn mixing_angle(params: &ModelParams, n: usize) -> Result<MixingAngle> {
    let block = doublet_block(params, n)?;
    Ok(mixing_angle_of(block.h11, block.h22, block.off))
}

/// Ground level followed by doublets `1..=n_doublets`, sorted by label.
///
/// Labels are energy ranks within each parity sector among the returned
/// levels (see [`assign_rank_labels`]), so they agree with the oracle's only
/// below the lowest doublet that was not computed.
pub fn spectrum(params: &ModelParams, n_doublets: usize) -> Result<Vec<AnalyticLevel>> {
    if n_doublets == 0 {
        return Err(Error::Domain("n_doublets must be at least 1".into()));
    }
    let mut levels = Vec::with_capacity(2 * n_doublets + 1);
    levels.push(ground_energy(params)?);
    for n in 1..=n_doublets {
        let (minus, plus) = doublet_energies(params, n)?;
        levels.push(minus);
        levels.push(plus);
    }
    assign_rank_labels(&mut levels);
    levels.sort_by_key(|l| l.label);
    Ok(levels)
}

/// Relabel levels by energy rank within their parity sector, the way
/// eigenstates of the full Hamiltonian are labelled.
///
/// [`Label::for_level`] gives the same answer as long as no two doublets of
/// one sector cross; at strong coupling a high doublet's lower branch can
/// drop below a lower doublet's upper branch (exactly so in the JC case).
pub fn assign_rank_labels(levels: &mut [AnalyticLevel]) {
    for parity in [-1i8, 1] {
        let mut members: Vec<usize> = (0..levels.len())
            .filter(|&i| Label::for_level(levels[i].kind, levels[i].n).parity == parity)
            .collect();
        members.sort_by(|&a, &b| {
            levels[a]
                .energy
                .total_cmp(&levels[b].energy)
                .then(levels[a].n.cmp(&levels[b].n))
        });
        for (rank, i) in members.into_iter().enumerate() {
            levels[i].label = Label::new(parity, rank);
        }
    }
}

/// Upper bound on doublets examined by [`lowest_levels`].
const MAX_DOUBLETS: usize = 200;

/// The `count` lowest analytic levels in ascending energy, labelled by rank
/// within each parity sector.
///
/// Doublets are added until two consecutive lower branches lie above the
/// `count`-th lowest energy found so far.
pub fn lowest_levels(params: &ModelParams, count: usize) -> Result<Vec<AnalyticLevel>> {
    if count == 0 {
        return Err(Error::Domain("count must be at least 1".into()));
    }
    let mut levels = vec![ground_energy(params)?];
    let mut above = 0;
    for n in 1..=MAX_DOUBLETS {
        let (minus, plus) = doublet_energies(params, n)?;
        levels.push(minus);
        levels.push(plus);
        if levels.len() < count + 1 {
            continue;
        }
        let mut energies: Vec<f64> = levels.iter().map(|l| l.energy).collect();
        energies.sort_by(f64::total_cmp);
        above = if minus.energy > energies[count - 1] {
            above + 1
        } else {
            0
        };
        if above == 2 {
            break;
        }
    }
    assign_rank_labels(&mut levels);
    levels.sort_by(|a, b| a.energy.total_cmp(&b.energy).then(a.label.cmp(&b.label)));
    levels.truncate(count);
    Ok(levels)
}

/// The first `count` analytic levels in natural order
/// (ground, 1−, 1+, 2−, 2+, …) as `(kind, n)` pairs.
pub fn level_sequence(count: usize) -> Vec<(LevelKind, usize)> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push((LevelKind::Ground, 0));
    let mut n = 1;
    while out.len() < count {
        out.push((LevelKind::Doublet(Branch::Minus), n));
        if out.len() < count {
            out.push((LevelKind::Doublet(Branch::Plus), n));
        }
        n += 1;
    }
    out
}

/// Real amplitudes of a state in the truncated spin⊗Fock basis, stored with
/// `|+z, n⟩` at index `2n` and `|−z, n⟩` at `2n + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionExpansion {
    pub cutoff: usize,
    pub amplitudes: Vec<f64>,
}

impl WavefunctionExpansion {
    pub fn amplitude(&self, spin: Spin, n: usize) -> f64 {
        if n > self.cutoff {
            return 0.0;
        }
        match spin {
            Spin::Up => self.amplitudes[2 * n],
            Spin::Down => self.amplitudes[2 * n + 1],
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }
}

pub const DEFAULT_CUTOFF_MARGIN: usize = 40;
const MIN_CUTOFF_MARGIN: usize = 20;
const NORM_DEFICIT_TOL: f64 = 1e-8;

/// `exp[−λ σx (a⁺ − a)] |E⟩` expanded in the bare basis up to `cutoff` photons.
///
/// In the σx eigenbasis the exponential is a pair of scalar displacements
/// `D(∓λ)`, so the expansion is two displaced-Fock columns per component of
/// `|E⟩`, rotated back to σz.
pub fn wavefunction(level: &AnalyticLevel, cutoff: usize) -> Result<WavefunctionExpansion> {
    if cutoff < level.n + MIN_CUTOFF_MARGIN {
        return Err(Error::CutoffTooSmall {
            n: level.n,
            cutoff,
            deficit: f64::NAN,
        });
    }
    let (c, s) = (level.theta.cos(), level.theta.sin());
    // |E⟩ = up_coeff |+z, up_fock⟩ + down_coeff |−z, down_fock⟩
    let (up_coeff, up_fock, down_coeff, down_fock) = match level.kind {
        LevelKind::Ground => (0.0, 0, 1.0, 0),
        LevelKind::Doublet(Branch::Minus) => (c, level.n - 1, s, level.n),
        LevelKind::Doublet(Branch::Plus) => (-s, level.n - 1, c, level.n),
    };
    let lam = level.lam;
    let mut amplitudes = vec![0.0; 2 * (cutoff + 1)];
    for m in 0..=cutoff {
        let plus_x = up_coeff * displaced_fock_element(m, up_fock, -lam)
            + down_coeff * displaced_fock_element(m, down_fock, -lam);
        let minus_x = up_coeff * displaced_fock_element(m, up_fock, lam)
            - down_coeff * displaced_fock_element(m, down_fock, lam);
        amplitudes[2 * m] = 0.5 * (plus_x + minus_x);
        amplitudes[2 * m + 1] = 0.5 * (plus_x - minus_x);
    }
    let psi = WavefunctionExpansion { cutoff, amplitudes };
    let deficit = (1.0 - psi.norm_sq()).abs();
    if deficit > NORM_DEFICIT_TOL {
        return Err(Error::CutoffTooSmall {
            n: level.n,
            cutoff,
            deficit,
        });
    }
    Ok(psi)
}

/// [`wavefunction`] at cutoff `n + 40`.
pub fn wavefunction_default(level: &AnalyticLevel) -> Result<WavefunctionExpansion> {
    wavefunction(level, level.n + DEFAULT_CUTOFF_MARGIN)
}
