//! Position-space construction and evolution of standard and split-step
//! discrete-time quantum walks on a periodic 1-D lattice.
//!
//! States live on a ring of `N` sites with a 2-dimensional coin at each site,
//! stored coin-major within the site: index `2x + c`. One-step operators are
//! materialized as dense `2N × 2N` matrices from their index structure, while
//! [`evolve`] uses an equivalent matrix-free application path.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, CMat2, CMatrix, ONE, ZERO};
use crate::par;

/// Tolerance for accepting a coin matrix as unitary.
pub const COIN_UNITARITY_TOL: f64 = 1e-12;

/// A 2×2 unitary acting on the coin degree of freedom.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinOperator {
    matrix: CMat2,
}

impl CoinOperator {
    /// Wrap a matrix, rejecting it unless ‖U†U − I‖_max ≤ 1e-12.
    pub fn new(matrix: CMat2) -> Result<Self> {
        let residual = crate::linalg::unitarity_residual2(&matrix);
        if residual > COIN_UNITARITY_TOL {
            return Err(Error::InvalidSpec(format!(
                "coin is not unitary (residual {residual:.3e})"
            )));
        }
        Ok(Self { matrix })
    }

    pub fn identity() -> Self {
        Self {
            matrix: CMat2::identity(),
        }
    }

    pub fn matrix(&self) -> &CMat2 {
        &self.matrix
    }
}

/// The Hadamard coin (1/√2)[[1, 1], [1, −1]].
pub fn hadamard() -> CoinOperator {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    CoinOperator {
        matrix: CMat2::new(c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0)),
    }
}

/// The rotation coin T(θ) = exp(−iθσ_y) = [[cos θ, −sin θ], [sin θ, cos θ]].
pub fn coin_rotation(theta: f64) -> CoinOperator {
    let (s, co) = theta.sin_cos();
    CoinOperator {
        matrix: CMat2::new(c(co, 0.0), c(-s, 0.0), c(s, 0.0), c(co, 0.0)),
    }
}

/// Which coin component is shifted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftKind {
    /// S:  coin-0 one step forward, coin-1 one step backward.
    Full,
    /// S⁺: coin-0 one step forward, coin-1 in place.
    HalfUp,
    /// S⁻: coin-0 in place, coin-1 one step backward.
    HalfDown,
}

/// Orientation of the shift; `Negative` mirrors every displacement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftDirection {
    Positive,
    Negative,
}

/// Per-coin site displacement of a shift operator.
fn displacements(direction: ShiftDirection, kind: ShiftKind) -> [i64; 2] {
    let sign = match direction {
        ShiftDirection::Positive => 1,
        ShiftDirection::Negative => -1,
    };
    match kind {
        ShiftKind::Full => [sign, -sign],
        ShiftKind::HalfUp => [sign, 0],
        ShiftKind::HalfDown => [0, -sign],
    }
}

/// Dense conditional-shift operator on C^{2N} with periodic wraparound.
pub fn shift(direction: ShiftDirection, kind: ShiftKind, n: usize) -> Result<CMatrix> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("lattice size {n} < 2")));
    }
    let disp = displacements(direction, kind);
    let mut m = CMatrix::zeros(2 * n, 2 * n);
    for x in 0..n {
        for coin in 0..2 {
            let y = wrap(x as i64 + disp[coin], n);
            m[(2 * y + coin, 2 * x + coin)] = ONE;
        }
    }
    Ok(m)
}

fn wrap(x: i64, n: usize) -> usize {
    x.rem_euclid(n as i64) as usize
}

/// Walk family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WalkKind {
    Standard,
    SplitStep,
}

/// Full description of a one-step walk operator.
///
/// `standard` is S·(T ⊗ I) with T the Hadamard coin unless overridden;
/// `split_step` is S⁻·(T(θ₂) ⊗ I)·S⁺·(T(θ₁) ⊗ I).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WalkSpec {
    pub kind: WalkKind,
    #[serde(default)]
    pub theta1: f64,
    #[serde(default)]
    pub theta2: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coin_override: Option<[[[f64; 2]; 2]; 2]>,
    pub lattice_size: usize,
}

impl WalkSpec {
    pub fn standard(lattice_size: usize) -> Self {
        Self {
            kind: WalkKind::Standard,
            theta1: 0.0,
            theta2: 0.0,
            coin_override: None,
            lattice_size,
        }
    }

    pub fn standard_with_coin(coin: &CoinOperator, lattice_size: usize) -> Self {
        let m = coin.matrix();
        let row = |r: usize| [[m[(r, 0)].re, m[(r, 0)].im], [m[(r, 1)].re, m[(r, 1)].im]];
        Self {
            kind: WalkKind::Standard,
            theta1: 0.0,
            theta2: 0.0,
            coin_override: Some([row(0), row(1)]),
            lattice_size,
        }
    }

    pub fn split_step(theta1: f64, theta2: f64, lattice_size: usize) -> Self {
        Self {
            kind: WalkKind::SplitStep,
            theta1,
            theta2,
            coin_override: None,
            lattice_size,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lattice_size < 2 {
            return Err(Error::InvalidSpec(format!(
                "lattice size {} < 2",
                self.lattice_size
            )));
        }
        if !self.theta1.is_finite() || !self.theta2.is_finite() {
            return Err(Error::InvalidSpec("non-finite coin angle".into()));
        }
        if self.coin_override.is_some() && self.kind == WalkKind::SplitStep {
            return Err(Error::InvalidSpec(
                "coin_override only applies to the standard walk".into(),
            ));
        }
        if let Some(_) = self.coin_override {
            self.override_coin()?;
        }
        Ok(())
    }

    fn override_coin(&self) -> Result<Option<CoinOperator>> {
        match &self.coin_override {
            None => Ok(None),
            Some(rows) => {
                let m = CMat2::new(
                    c(rows[0][0][0], rows[0][0][1]),
                    c(rows[0][1][0], rows[0][1][1]),
                    c(rows[1][0][0], rows[1][0][1]),
                    c(rows[1][1][0], rows[1][1][1]),
                );
                CoinOperator::new(m).map(Some)
            }
        }
    }

    /// The coin applied by the standard walk (Hadamard unless overridden).
    pub fn standard_coin(&self) -> Result<CoinOperator> {
        Ok(self.override_coin()?.unwrap_or_else(hadamard))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: WalkSpec = serde_json::from_str(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serialization")
    }
}

/// Walker ⊗ coin state on the ring: N complex 2-vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    lattice_size: usize,
    amps: Vec<C64>,
}

impl SpinorField {
    pub fn zero(lattice_size: usize) -> Self {
        Self {
            lattice_size,
            amps: vec![ZERO; 2 * lattice_size],
        }
    }

    /// δ_x ⊗ |coin⟩.
    pub fn delta(lattice_size: usize, x: usize, coin: usize) -> Result<Self> {
        if x >= lattice_size || coin > 1 {
            return Err(Error::InvalidSpec(format!(
                "delta site {x}/{lattice_size} coin {coin}"
            )));
        }
        let mut f = Self::zero(lattice_size);
        f.amps[2 * x + coin] = ONE;
        Ok(f)
    }

    pub fn from_amplitudes(lattice_size: usize, amps: Vec<C64>) -> Result<Self> {
        if amps.len() != 2 * lattice_size {
            return Err(Error::DimensionMismatch(format!(
                "{} amplitudes for lattice size {lattice_size}",
                amps.len()
            )));
        }
        Ok(Self { lattice_size, amps })
    }

    pub fn lattice_size(&self) -> usize {
        self.lattice_size
    }

    pub fn amplitude(&self, x: usize, coin: usize) -> C64 {
        self.amps[2 * x + coin]
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    /// p(x) = |ψ₀(x)|² + |ψ₁(x)|²; sums to norm².
    pub fn position_distribution(&self) -> Vec<f64> {
        (0..self.lattice_size)
            .map(|x| self.amps[2 * x].norm_sqr() + self.amps[2 * x + 1].norm_sqr())
            .collect()
    }

    /// CSV rows `x, re0, im0, re1, im1` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,re0,im0,re1,im1\n");
        for x in 0..self.lattice_size {
            let a = self.amps[2 * x];
            let b = self.amps[2 * x + 1];
            out.push_str(&format!("{x},{},{},{},{}\n", a.re, a.im, b.re, b.im));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || (lineno == 0 && line.starts_with('x')) {
                continue;
            }
            let parts: Vec<&str> = line.split(',').map(str::trim).collect();
            if parts.len() != 5 {
                return Err(Error::Parse(format!(
                    "state CSV line {}: expected 5 fields, got {}",
                    lineno + 1,
                    parts.len()
                )));
            }
            let x: usize = parts[0]
                .parse()
                .map_err(|_| Error::Parse(format!("bad site index {:?}", parts[0])))?;
            let nums: Vec<f64> = parts[1..]
                .iter()
                .map(|s| {
                    s.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad amplitude {s:?}")))
                })
                .collect::<Result<_>>()?;
            rows.push((x, c(nums[0], nums[1]), c(nums[2], nums[3])));
        }
        let n = rows.len();
        if n < 2 {
            return Err(Error::Parse("state CSV has fewer than 2 sites".into()));
        }
        let mut amps = vec![ZERO; 2 * n];
        for (x, a, b) in rows {
            if x >= n {
                return Err(Error::Parse(format!("site index {x} out of range 0..{n}")));
            }
            amps[2 * x] = a;
            amps[2 * x + 1] = b;
        }
        Ok(Self {
            lattice_size: n,
            amps,
        })
    }
}

/// Distribution CSV rows `x, p` with a header line.
pub fn distribution_to_csv(dist: &[f64]) -> String {
    let mut out = String::from("x,p\n");
    for (x, p) in dist.iter().enumerate() {
        out.push_str(&format!("{x},{p}\n"));
    }
    out
}

/// Dense one-step operator for a walk spec.
///
/// standard:   U = S·(T ⊗ I)
/// split_step: W = S⁻·(T(θ₂) ⊗ I)·S⁺·(T(θ₁) ⊗ I)
///
/// Assembled directly from the index structure (sum over the intermediate
/// coin path), not by multiplying dense factors.
pub fn one_step_operator(spec: &WalkSpec) -> Result<CMatrix> {
    spec.validate()?;
    let n = spec.lattice_size;
    let mut u = CMatrix::zeros(2 * n, 2 * n);
    match spec.kind {
        WalkKind::Standard => {
            let t = spec.standard_coin()?;
            let t = t.matrix();
            // coin then conditional shift: coin a lands at x + (1 − 2a)
            for x in 0..n {
                for b in 0..2 {
                    for a in 0..2 {
                        let y = wrap(x as i64 + if a == 0 { 1 } else { -1 }, n);
                        u[(2 * y + a, 2 * x + b)] += t[(a, b)];
                    }
                }
            }
        }
        WalkKind::SplitStep => {
            let t1 = coin_rotation(spec.theta1);
            let t2 = coin_rotation(spec.theta2);
            let (t1, t2) = (t1.matrix().clone_owned(), t2.matrix().clone_owned());
            // T(θ₁) sends coin b to c at site x; S⁺ moves coin 0 forward;
            // T(θ₂) sends c to a; S⁻ moves coin 1 backward.
            for x in 0..n {
                for b in 0..2 {
                    for cmid in 0..2 {
                        let site = wrap(x as i64 + if cmid == 0 { 1 } else { 0 }, n);
                        for a in 0..2 {
                            let y = wrap(site as i64 - if a == 1 { 1 } else { 0 }, n);
                            u[(2 * y + a, 2 * x + b)] += t2[(a, cmid)] * t1[(cmid, b)];
                        }
                    }
                }
            }
        }
    }
    Ok(u)
}

fn apply_coin(field: &mut [C64], t: &CMat2, n: usize) {
    // cheap per-site 2×2 product; parallelism only pays off on big rings
    if cfg!(feature = "parallel") && n >= 1 << 12 {
        let chunks: Vec<[C64; 2]> = par::map_indexed(n, |x| {
            let a = field[2 * x];
            let b = field[2 * x + 1];
            [
                t[(0, 0)] * a + t[(0, 1)] * b,
                t[(1, 0)] * a + t[(1, 1)] * b,
            ]
        });
        for (x, pair) in chunks.into_iter().enumerate() {
            field[2 * x] = pair[0];
            field[2 * x + 1] = pair[1];
        }
    } else {
        for x in 0..n {
            let a = field[2 * x];
            let b = field[2 * x + 1];
            field[2 * x] = t[(0, 0)] * a + t[(0, 1)] * b;
            field[2 * x + 1] = t[(1, 0)] * a + t[(1, 1)] * b;
        }
    }
}

fn apply_shift(field: &[C64], disp: [i64; 2], n: usize) -> Vec<C64> {
    let mut out = vec![ZERO; 2 * n];
    for x in 0..n {
        for coin in 0..2 {
            let y = wrap(x as i64 + disp[coin], n);
            out[2 * y + coin] = field[2 * x + coin];
        }
    }
    out
}

/// One matrix-free application of the walk's one-step operator.
pub fn apply_step(spec: &WalkSpec, psi: &SpinorField) -> Result<SpinorField> {
    spec.validate()?;
    if psi.lattice_size != spec.lattice_size {
        return Err(Error::DimensionMismatch(format!(
            "state size {} vs spec size {}",
            psi.lattice_size, spec.lattice_size
        )));
    }
    let n = spec.lattice_size;
    let mut amps = psi.amps.clone();
    match spec.kind {
        WalkKind::Standard => {
            let t = spec.standard_coin()?;
            apply_coin(&mut amps, t.matrix(), n);
            amps = apply_shift(&amps, displacements(ShiftDirection::Positive, ShiftKind::Full), n);
        }
        WalkKind::SplitStep => {
            apply_coin(&mut amps, coin_rotation(spec.theta1).matrix(), n);
            amps = apply_shift(&amps, displacements(ShiftDirection::Positive, ShiftKind::HalfUp), n);
            apply_coin(&mut amps, coin_rotation(spec.theta2).matrix(), n);
            amps = apply_shift(&amps, displacements(ShiftDirection::Positive, ShiftKind::HalfDown), n);
        }
    }
    Ok(SpinorField {
        lattice_size: n,
        amps,
    })
}

/// U^steps ψ₀ by repeated matrix-free application.
pub fn evolve(psi0: &SpinorField, spec: &WalkSpec, steps: usize) -> Result<SpinorField> {
    let mut psi = psi0.clone();
    for _ in 0..steps {
        psi = apply_step(spec, &psi)?;
    }
    Ok(psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs, max_abs2, unitarity_residual};

    #[test]
    fn hadamard_matches_displayed_matrix() {
        let h = hadamard();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let want = CMat2::new(c(s, 0.0), c(s, 0.0), c(s, 0.0), c(-s, 0.0));
        assert!(max_abs2(&(h.matrix() - want)) == 0.0);
        // involution
        assert!(max_abs2(&(h.matrix() * h.matrix() - CMat2::identity())) < 1e-15);
        // det = −1 by direct 2×2 determinant
        let det = h.matrix()[(0, 0)] * h.matrix()[(1, 1)] - h.matrix()[(0, 1)] * h.matrix()[(1, 0)];
        assert!((det - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn rotation_coin_special_angles() {
        assert!(max_abs2(&(coin_rotation(0.0).matrix() - CMat2::identity())) == 0.0);
        assert!(
            max_abs2(&(coin_rotation(std::f64::consts::PI).matrix() + CMat2::identity())) < 1e-15
        );
        let q = coin_rotation(std::f64::consts::FRAC_PI_4);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let want = CMat2::new(c(h, 0.0), c(-h, 0.0), c(h, 0.0), c(h, 0.0));
        assert!(max_abs2(&(q.matrix() - want)) < 1e-15);
    }

    #[test]
    fn shift_moves_coin_zero_right() {
        let n = 6;
        let s = shift(ShiftDirection::Positive, ShiftKind::Full, n).unwrap();
        let psi = SpinorField::delta(n, 0, 0).unwrap();
        let v = nalgebra::DVector::from_column_slice(psi.amplitudes());
        let moved = &s * v;
        let expect = SpinorField::delta(n, 1, 0).unwrap();
        let want = nalgebra::DVector::from_column_slice(expect.amplitudes());
        assert!((moved - want).norm() < 1e-15);
    }

    #[test]
    fn half_shifts_compose_to_full() {
        let n = 8;
        let sp = shift(ShiftDirection::Positive, ShiftKind::HalfUp, n).unwrap();
        let sm = shift(ShiftDirection::Positive, ShiftKind::HalfDown, n).unwrap();
        let s = shift(ShiftDirection::Positive, ShiftKind::Full, n).unwrap();
        assert!(max_abs(&(&sm * &sp - s)) == 0.0);
    }

    #[test]
    fn double_shift_wraps_around() {
        let n = 4;
        let s = shift(ShiftDirection::Positive, ShiftKind::Full, n).unwrap();
        let psi = SpinorField::delta(n, 0, 1).unwrap();
        let v = nalgebra::DVector::from_column_slice(psi.amplitudes());
        let moved = &s * (&s * v);
        // coin-1 moves left twice: 0 → N−2
        let expect = SpinorField::delta(n, n - 2, 1).unwrap();
        let want = nalgebra::DVector::from_column_slice(expect.amplitudes());
        assert!((moved - want).norm() < 1e-15);
    }

    #[test]
    fn split_step_with_zero_theta2_reduces_to_standard() {
        let n = 8;
        for &theta in &[0.3, -1.2, 2.0] {
            let split = one_step_operator(&WalkSpec::split_step(theta, 0.0, n)).unwrap();
            let std_spec = WalkSpec::standard_with_coin(&coin_rotation(theta), n);
            let standard = one_step_operator(&std_spec).unwrap();
            assert!(max_abs(&(split - standard)) < 1e-14);
        }
    }

    #[test]
    fn standard_identity_coin_is_pure_shift() {
        let n = 6;
        let spec = WalkSpec::standard_with_coin(&CoinOperator::identity(), n);
        let u = one_step_operator(&spec).unwrap();
        let s = shift(ShiftDirection::Positive, ShiftKind::Full, n).unwrap();
        assert!(max_abs(&(u - s)) == 0.0);
    }

    #[test]
    fn one_hadamard_step_from_origin() {
        let n = 8;
        let spec = WalkSpec::standard(n);
        let psi = apply_step(&spec, &SpinorField::delta(n, 0, 0).unwrap()).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((psi.amplitude(1, 0) - c(s, 0.0)).norm() < 1e-15);
        assert!((psi.amplitude(n - 1, 1) - c(s, 0.0)).norm() < 1e-15);
        let dist = psi.position_distribution();
        assert!((dist[1] - 0.5).abs() < 1e-15);
        assert!((dist[n - 1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn two_hadamard_steps_distribution() {
        // hand expansion: {−2: 1/4, 0: 1/4, +2: 1/2}
        let n = 8;
        let spec = WalkSpec::standard(n);
        let psi = evolve(&SpinorField::delta(n, 0, 0).unwrap(), &spec, 2).unwrap();
        let dist = psi.position_distribution();
        assert!((dist[2] - 0.5).abs() < 1e-14);
        assert!((dist[0] - 0.25).abs() < 1e-14);
        assert!((dist[n - 2] - 0.25).abs() < 1e-14);
        let rest: f64 = (0..n)
            .filter(|&x| x != 0 && x != 2 && x != n - 2)
            .map(|x| dist[x])
            .sum();
        assert!(rest < 1e-14);
    }

    #[test]
    fn evolve_zero_steps_is_identity_and_semigroup_holds() {
        let n = 10;
        let spec = WalkSpec::split_step(0.7, -0.4, n);
        let psi = SpinorField::delta(n, 3, 1).unwrap();
        assert_eq!(evolve(&psi, &spec, 0).unwrap(), psi);
        let a = evolve(&evolve(&psi, &spec, 3).unwrap(), &spec, 4).unwrap();
        let b = evolve(&psi, &spec, 7).unwrap();
        let diff: f64 = a
            .amplitudes()
            .iter()
            .zip(b.amplitudes())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max);
        assert!(diff < 1e-12);
    }

    #[test]
    fn dense_and_matrix_free_paths_agree() {
        let n = 12;
        for spec in [
            WalkSpec::standard(n),
            WalkSpec::split_step(0.9, 0.35, n),
        ] {
            let u = one_step_operator(&spec).unwrap();
            let psi = SpinorField::delta(n, 5, 1).unwrap();
            let dense = &u * nalgebra::DVector::from_column_slice(psi.amplitudes());
            let free = apply_step(&spec, &psi).unwrap();
            let free = nalgebra::DVector::from_column_slice(free.amplitudes());
            assert!((dense - free).norm() < 1e-13);
        }
    }

    #[test]
    fn operator_is_unitary_and_translation_covariant() {
        let n = 10;
        let spec = WalkSpec::split_step(1.1, 0.2, n);
        let u = one_step_operator(&spec).unwrap();
        assert!(unitarity_residual(&u) < 1e-12);
        // R: one-site cyclic translation, coin untouched
        let mut r = CMatrix::zeros(2 * n, 2 * n);
        for x in 0..n {
            for coin in 0..2 {
                r[(2 * ((x + 1) % n) + coin, 2 * x + coin)] = ONE;
            }
        }
        let conj = &r * &u * r.transpose();
        assert!(max_abs(&(conj - u)) < 1e-14);
    }

    #[test]
    fn norm_is_conserved() {
        let n = 64;
        let spec = WalkSpec::split_step(0.6, -0.9, n);
        let psi0 = SpinorField::delta(n, 0, 0).unwrap();
        let psi = evolve(&psi0, &spec, 2000).unwrap();
        assert!((psi.norm_sq() - 1.0).abs() < 1e-10);
        let dist = psi.position_distribution();
        let total: f64 = dist.iter().sum();
        assert!((total - psi.norm_sq()).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(one_step_operator(&WalkSpec::standard(1)).is_err());
        let mut spec = WalkSpec::split_step(0.2, 0.3, 8);
        spec.coin_override = Some([[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]);
        assert!(spec.validate().is_err());
        let psi = SpinorField::delta(6, 0, 0).unwrap();
        assert!(apply_step(&WalkSpec::standard(8), &psi).is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{"kind": "split_step", "theta1": 0.4, "theta2": -0.2, "lattice_size": 16}"#;
        let spec = WalkSpec::from_json(text).unwrap();
        assert_eq!(spec.kind, WalkKind::SplitStep);
        assert_eq!(spec.lattice_size, 16);
        let back = WalkSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(back.theta1, spec.theta1);
    }

    #[test]
    fn state_csv_round_trip() {
        let n = 5;
        let spec = WalkSpec::standard(n);
        let psi = evolve(&SpinorField::delta(n, 2, 0).unwrap(), &spec, 1).unwrap();
        let parsed = SpinorField::from_csv(&psi.to_csv()).unwrap();
        assert_eq!(parsed, psi);
    }
}
