//! Laguerre polynomials and matrix elements of the real displacement
//! operator `D(λ) = exp[λ (a⁺ − a)]` in the Fock basis.

use crate::error::{Error, Result};

/// Validated arguments for [`laguerre`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreArgs {
    pub n: usize,
    pub k: usize,
    pub x: f64,
}

impl LaguerreArgs {
    pub fn new(n: i64, k: i64, x: f64) -> Result<Self> {
        if n < 0 || k < 0 {
            return Err(Error::Domain(format!(
                "Laguerre degree and order must be nonnegative (n = {n}, k = {k})"
            )));
        }
        if !x.is_finite() {
            return Err(Error::Domain(format!(
                "Laguerre argument must be finite (x = {x})"
            )));
        }
        Ok(Self {
            n: n as usize,
            k: k as usize,
            x,
        })
    }

    pub fn eval(&self) -> f64 {
        laguerre(self.n, self.k, self.x)
    }
}

/// Associated Laguerre polynomial `L_n^k(x)`; `k = 0` is the ordinary one.
///
/// Uses the upward recurrence
/// `(m+1) L_{m+1} = (2m+k+1−x) L_m − (m+k) L_{m−1}`, which stays accurate
/// where the explicit alternating series loses digits to cancellation.
pub fn laguerre(n: usize, k: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let k = k as f64;
    let mut prev = 1.0;
    let mut cur = 1.0 + k - x;
    for m in 1..n {
        let m = m as f64;
        let next = ((2.0 * m + k + 1.0 - x) * cur - (m + k) * prev) / (m + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `⟨row| exp[lam (a⁺ − a)] |col⟩`.
///
/// For `col ≤ row` this is `e^{−lam²/2} lam^{row−col} √(col!/row!) L_col^{row−col}(lam²)`.
/// The other triangle follows from `D(lam)† = D(−lam)`, which gives a factor
/// `(−1)^{col−row}` on the transposed element.
pub fn displaced_fock_element(row: usize, col: usize, lam: f64) -> f64 {
    if col > row {
        let sign = if (col - row).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        return sign * displaced_fock_element(col, row, lam);
    }
    let shift = row - col;
    let mut prefactor = (-0.5 * lam * lam).exp();
    // lam^{row−col} √(col!/row!) as a running product; no factorials.
    for j in (col + 1)..=row {
        prefactor *= lam / (j as f64).sqrt();
    }
    prefactor * laguerre(col, shift, lam * lam)
}

/// Column `col` of `D(lam)` restricted to Fock states `0..=cutoff`.
pub fn displaced_fock_column(col: usize, lam: f64, cutoff: usize) -> Vec<f64> {
    (0..=cutoff)
        .map(|row| displaced_fock_element(row, col, lam))
        .collect()
}
