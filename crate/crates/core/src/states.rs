//! Wave-function and density-operator construction and validation, including
//! the hbar-dependent admissible mixed families with sum lambda_j^2 <= (2 pi hbar)^d.

use ndarray::{ArrayD, IxDyn};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::grid::{fft_axis, AxisLabel, ComplexField, Field, GridAxis, PhaseGrid, RealField, TAU};

/// Scaled Planck constant and particle mass. The crate works in the regime
/// 0 < hbar <= 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    pub hbar: f64,
    pub mass: f64,
}

impl PhysicalParams {
    pub fn new(hbar: f64, mass: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar <= 1.0) {
            return Err(LabError::BadParams(format!("hbar must be in (0, 1], got {hbar}")));
        }
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(LabError::BadParams(format!("mass must be positive, got {mass}")));
        }
        Ok(PhysicalParams { hbar, mass })
    }
}

/// Normalized complex samples of psi on the x-grid.
#[derive(Debug, Clone)]
pub struct WaveFunction {
    pub params: PhysicalParams,
    pub field: ComplexField,
}

pub fn x_labels(d: usize) -> Vec<AxisLabel> {
    (0..d).map(AxisLabel::X).collect()
}

impl WaveFunction {
    pub fn new(params: PhysicalParams, field: ComplexField) -> Result<Self> {
        let wf = WaveFunction { params, field }.normalized();
        wf.field.check_finite("wave function")?;
        Ok(wf)
    }

    pub fn dim(&self) -> usize {
        self.field.grid.ndim()
    }

    pub fn x_axis(&self, j: usize) -> &GridAxis {
        self.field.grid.axis(AxisLabel::X(j)).expect("x axis present")
    }

    pub fn norm(&self) -> f64 {
        self.field.l2_norm()
    }

    /// Normalization is enforced post-discretization: divide by the grid norm.
    pub fn normalized(mut self) -> Self {
        let n = self.norm();
        if n > 0.0 {
            self.field.data.map_inplace(|z| *z /= n);
        }
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.norm();
        if (n - 1.0).abs() > 1e-10 {
            return Err(LabError::BadState(format!("L2 norm {n} != 1 +- 1e-10")));
        }
        Ok(())
    }

    /// rho = |psi|^2
    pub fn density(&self) -> RealField {
        Field {
            grid: self.field.grid.clone(),
            data: self.field.data.mapv(|z| z.norm_sqr()),
        }
    }

    /// J_j = (hbar/m) Im(conj(psi) d_j psi), the current density.
    pub fn current(&self) -> Result<Vec<RealField>> {
        let scale = self.params.hbar / self.params.mass;
        (0..self.dim())
            .map(|j| {
                let d = self.field.derivative(AxisLabel::X(j), 1)?;
                Ok(Field {
                    grid: self.field.grid.clone(),
                    data: ndarray::Zip::from(&self.field.data)
                        .and(&d.data)
                        .map_collect(|p, dp| scale * (p.conj() * dp).im),
                })
            })
            .collect()
    }

    /// int |v|^2 w dv evaluated from psi:
    /// sum_j (hbar^2/4) [2|d_j psi|^2 - 2 Re(d_j^2 psi conj(psi))].
    pub fn second_v_moment(&self) -> Result<RealField> {
        let mut acc = ArrayD::from_elem(IxDyn(&self.field.grid.shape()), 0.0f64);
        let h2 = self.params.hbar * self.params.hbar;
        for j in 0..self.dim() {
            let d1 = self.field.derivative(AxisLabel::X(j), 1)?;
            let d2 = self.field.derivative(AxisLabel::X(j), 2)?;
            ndarray::Zip::from(&mut acc)
                .and(&self.field.data)
                .and(&d1.data)
                .and(&d2.data)
                .for_each(|a, p, dp, dpp| {
                    *a += 0.25 * h2 * (2.0 * dp.norm_sqr() - 2.0 * (dpp * p.conj()).re);
                });
        }
        Field::new(self.field.grid.clone(), acc)
    }

    /// Kinetic energy density E(x) = (1/2m) int |v|^2 w dv.
    pub fn kinetic_density(&self) -> Result<RealField> {
        let mut e = self.second_v_moment()?;
        let f = 0.5 / self.params.mass;
        e.data.map_inplace(|x| *x *= f);
        Ok(e)
    }

    pub fn mean_position(&self, j: usize) -> Result<f64> {
        let rho = self.density();
        let ax = self.field.grid.axis(AxisLabel::X(j))?.clone();
        let idx = self.field.grid.index_of(AxisLabel::X(j))?;
        let weighted = Field::new(
            rho.grid.clone(),
            ArrayD::from_shape_fn(IxDyn(&rho.grid.shape()), |i| rho.data[&i] * ax.point(i[idx])),
        )?;
        Ok(weighted.total())
    }

    pub fn position_variance(&self, j: usize) -> Result<f64> {
        let mean = self.mean_position(j)?;
        let rho = self.density();
        let ax = self.field.grid.axis(AxisLabel::X(j))?.clone();
        let idx = self.field.grid.index_of(AxisLabel::X(j))?;
        let weighted = Field::new(
            rho.grid.clone(),
            ArrayD::from_shape_fn(IxDyn(&rho.grid.shape()), |i| {
                rho.data[&i] * (ax.point(i[idx]) - mean).powi(2)
            }),
        )?;
        Ok(weighted.total())
    }

    /// <p_j> by quadrature of -i hbar conj(psi) d_j psi.
    pub fn momentum_mean(&self, j: usize) -> Result<f64> {
        let d = self.field.derivative(AxisLabel::X(j), 1)?;
        let integrand = crate::grid::zip_map(&self.field, &d, |p, dp| {
            self.params.hbar * (p.conj() * dp).im
        })?;
        Ok(integrand.total())
    }
}

/// Low-rank spectral form {(lambda_j, psi_j)} of a density operator.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    pub params: PhysicalParams,
    pub weights: Vec<f64>,
    pub eigenfunctions: Vec<ComplexField>,
}

impl DensityOperator {
    pub fn pure(wf: &WaveFunction) -> Self {
        DensityOperator {
            params: wf.params,
            weights: vec![1.0],
            eigenfunctions: vec![wf.field.clone()],
        }
    }

    pub fn mixed(
        params: PhysicalParams,
        weights: Vec<f64>,
        eigenfunctions: Vec<ComplexField>,
    ) -> Result<Self> {
        let op = DensityOperator {
            params,
            weights,
            eigenfunctions,
        };
        op.validate()?;
        Ok(op)
    }

    pub fn rank(&self) -> usize {
        self.weights.iter().filter(|&&l| l > 0.0).count()
    }

    /// sum lambda_j^2 in (0, 1].
    pub fn purity(&self) -> f64 {
        self.weights.iter().map(|l| l * l).sum()
    }

    pub fn dim(&self) -> usize {
        self.eigenfunctions[0].grid.ndim()
    }

    pub fn validate(&self) -> Result<()> {
        if self.weights.len() != self.eigenfunctions.len() || self.weights.is_empty() {
            return Err(LabError::BadState("weights/eigenfunctions length mismatch".into()));
        }
        if self.weights.iter().any(|&l| l < 0.0) {
            return Err(LabError::BadState("negative occupation probability".into()));
        }
        let trace: f64 = self.weights.iter().sum();
        if (trace - 1.0).abs() > 1e-10 {
            return Err(LabError::BadState(format!("trace {trace} != 1 +- 1e-10")));
        }
        let g = self.gram()?;
        let n = self.weights.len();
        for j in 0..n {
            for k in 0..n {
                let want = if j == k { 1.0 } else { 0.0 };
                if (g[j * n + k] - Complex64::new(want, 0.0)).norm() > 1e-8 {
                    return Err(LabError::BadState(format!(
                        "Gram matrix deviates from identity at ({j},{k}): {}",
                        g[j * n + k]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Pairwise L2 inner products <psi_j, psi_k> by quadrature.
    pub fn gram(&self) -> Result<Vec<Complex64>> {
        let n = self.eigenfunctions.len();
        let mut g = vec![Complex64::new(0.0, 0.0); n * n];
        for j in 0..n {
            for k in 0..n {
                let prod = crate::grid::zip_map(
                    &self.eigenfunctions[j],
                    &self.eigenfunctions[k],
                    |a, b| a.conj() * b,
                )?;
                g[j * n + k] = prod.total();
            }
        }
        Ok(g)
    }

    /// Rank-one operators round-trip to a wave function (global phase free).
    pub fn to_wave_function(&self) -> Result<WaveFunction> {
        if self.rank() != 1 {
            return Err(LabError::BadState(format!(
                "rank {} operator is not a pure state",
                self.rank()
            )));
        }
        let j = self.weights.iter().position(|&l| l > 0.0).unwrap();
        WaveFunction::new(self.params, self.eigenfunctions[j].clone())
    }

    /// Weighted density sum over eigenfunctions.
    pub fn density(&self) -> RealField {
        let mut acc = ArrayD::from_elem(IxDyn(&self.eigenfunctions[0].grid.shape()), 0.0f64);
        for (l, f) in self.weights.iter().zip(&self.eigenfunctions) {
            ndarray::Zip::from(&mut acc).and(&f.data).for_each(|a, z| *a += l * z.norm_sqr());
        }
        Field {
            grid: self.eigenfunctions[0].grid.clone(),
            data: acc,
        }
    }
}

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

fn grid_from_axes(axes: &[GridAxis]) -> PhaseGrid {
    PhaseGrid::new(
        axes.iter()
            .enumerate()
            .map(|(j, a)| (AxisLabel::X(j), a.clone()))
            .collect(),
    )
}

fn check_gaussian_margins(
    axes: &[GridAxis],
    params: &PhysicalParams,
    x0: &[f64],
    p0: &[f64],
    sigma: f64,
) -> Result<()> {
    for (j, ax) in axes.iter().enumerate() {
        let lo = ax.offset();
        let hi = ax.offset() + ax.length();
        let margin = (x0[j] - lo).min(hi - x0[j]);
        if margin < 8.0 * sigma {
            return Err(LabError::Margin(format!(
                "x-box margin {margin:.4} around x0[{j}]={} is below 8*sigma = {:.4}",
                x0[j],
                8.0 * sigma
            )));
        }
        // dual-sense margin: Nyquist must clear p0/hbar by 8/sigma
        let nyquist = std::f64::consts::PI / ax.spacing();
        let needed = p0[j].abs() / params.hbar + 8.0 / sigma;
        if nyquist < needed {
            return Err(LabError::Margin(format!(
                "spectral margin: Nyquist {nyquist:.4} below |p0|/hbar + 8/sigma = {needed:.4} on axis {j}"
            )));
        }
    }
    Ok(())
}

/// psi(x) = (pi sigma^2)^{-d/4} exp(-|x-x0|^2/(2 sigma^2)) exp(i p0.x/hbar),
/// renormalized on the grid.
pub fn make_gaussian(
    axes: &[GridAxis],
    params: PhysicalParams,
    x0: &[f64],
    p0: &[f64],
    sigma: f64,
) -> Result<WaveFunction> {
    let d = axes.len();
    if x0.len() != d || p0.len() != d {
        return Err(LabError::BadParams("x0/p0 dimension mismatch".into()));
    }
    if !(sigma > 0.0) {
        return Err(LabError::BadParams("sigma must be positive".into()));
    }
    check_gaussian_margins(axes, &params, x0, p0, sigma)?;
    let grid = grid_from_axes(axes);
    let amp = (std::f64::consts::PI * sigma * sigma).powf(-(d as f64) / 4.0);
    let field = Field::from_fn(grid, |x| {
        let mut q = 0.0;
        let mut phase = 0.0;
        for j in 0..d {
            q += (x[j] - x0[j]).powi(2);
            phase += p0[j] * x[j];
        }
        Complex64::from_polar(amp * (-q / (2.0 * sigma * sigma)).exp(), phase / params.hbar)
    });
    WaveFunction::new(params, field)
}

/// Coherent state of the harmonic well: Gaussian with sigma = sqrt(hbar/(m omega)).
pub fn make_coherent(
    axes: &[GridAxis],
    params: PhysicalParams,
    omega: f64,
    x0: &[f64],
    p0: &[f64],
) -> Result<WaveFunction> {
    if !(omega > 0.0) {
        return Err(LabError::BadParams("omega must be positive".into()));
    }
    let sigma = (params.hbar / (params.mass * omega)).sqrt();
    make_gaussian(axes, params, x0, p0, sigma)
}

/// WKB factory output; `rough_phase` flags spectral tails of S above 1e-6.
#[derive(Debug, Clone)]
pub struct WkbState {
    pub wf: WaveFunction,
    pub phase_tail_fraction: f64,
    pub rough_phase: bool,
}

/// psi = sqrt(rho_profile) e^{i S/hbar}, renormalized.
pub fn make_wkb(
    axes: &[GridAxis],
    params: PhysicalParams,
    rho_profile: impl Fn(&[f64]) -> f64,
    s_profile: impl Fn(&[f64]) -> f64,
) -> Result<WkbState> {
    let grid = grid_from_axes(axes);
    let rho = Field::from_fn(grid.clone(), |x| rho_profile(x));
    if rho.data.iter().any(|&r| r < 0.0 || !r.is_finite()) {
        return Err(LabError::BadState("rho_profile must be nonnegative and finite".into()));
    }
    let s = Field::from_fn(grid.clone(), |x| s_profile(x));

    // spectral tail of S: top-octave energy fraction (DC excluded), max over axes
    let mut tail_frac = 0.0f64;
    for ax_idx in 0..axes.len() {
        let mut hat = s.data.mapv(|x| Complex64::new(x, 0.0));
        fft_axis(&mut hat, ax_idx, true);
        let n = axes[ax_idx].n();
        let mut total = 0.0;
        let mut tail = 0.0;
        for (k, sub) in hat.axis_iter(ndarray::Axis(ax_idx)).enumerate() {
            if k == 0 {
                continue; // DC carries no roughness
            }
            let ks = if k < n / 2 { k } else { n - k };
            let e: f64 = sub.iter().map(|z| z.norm_sqr()).sum();
            total += e;
            if ks >= n / 4 {
                tail += e;
            }
        }
        if total > 0.0 {
            tail_frac = tail_frac.max(tail / total);
        }
    }

    let field = crate::grid::zip_map(&rho, &s, |r, sv| {
        Complex64::from_polar(r.max(0.0).sqrt(), sv / params.hbar)
    })?;
    let wf = WaveFunction::new(params, field)?;
    Ok(WkbState {
        rough_phase: tail_frac > 1e-6,
        phase_tail_fraction: tail_frac,
        wf,
    })
}

/// Standard two-Gaussian cat state (equal weights, common sigma), renormalized.
pub fn make_cat(
    axes: &[GridAxis],
    params: PhysicalParams,
    x0_left: &[f64],
    x0_right: &[f64],
    sigma: f64,
) -> Result<WaveFunction> {
    let l = make_gaussian(axes, params, x0_left, &vec![0.0; axes.len()], sigma)?;
    let r = make_gaussian(axes, params, x0_right, &vec![0.0; axes.len()], sigma)?;
    let field = crate::grid::zip_map(&l.field, &r.field, |a, b| a + b)?;
    WaveFunction::new(params, field)
}

/// First `count` harmonic-oscillator eigenfunctions (d = 1 per axis, tensor
/// products ordered by total quantum number for d = 2), grid-renormalized.
pub fn harmonic_eigenfunctions(
    axes: &[GridAxis],
    params: PhysicalParams,
    omega: f64,
    center: &[f64],
    count: usize,
) -> Result<Vec<ComplexField>> {
    if !(omega > 0.0) {
        return Err(LabError::BadParams("omega must be positive".into()));
    }
    let d = axes.len();
    let sigma_ho = (params.hbar / (params.mass * omega)).sqrt();

    // feasibility: the highest mode's turning point plus an 8 sigma_ho margin
    // must fit in the box, and the grid must resolve its oscillation.
    let max_order_1d = if d == 1 { count } else { count }; // bound per axis
    let feasible = |ax: &GridAxis, c: f64| -> usize {
        let lo = (c - ax.offset()).min(ax.offset() + ax.length() - c);
        let nmax_box = (((lo - 8.0 * sigma_ho) / sigma_ho).max(0.0).powi(2) / 2.0).floor() as usize;
        let nyquist = std::f64::consts::PI / ax.spacing();
        let nmax_res =
            ((((nyquist - 8.0 / sigma_ho) * sigma_ho).max(0.0)).powi(2) / 2.0).floor() as usize;
        nmax_box.min(nmax_res)
    };
    for (j, ax) in axes.iter().enumerate() {
        let f = feasible(ax, center[j]);
        if max_order_1d > f + 1 {
            return Err(LabError::BasisTooLarge {
                requested: count,
                feasible: f + 1,
            });
        }
    }

    // 1D Hermite-function ladder per axis
    let ladder = |ax: &GridAxis, c: f64, nmax: usize| -> Vec<Vec<f64>> {
        let pts = ax.points();
        let norm0 = (params.mass * omega / (std::f64::consts::PI * params.hbar)).powf(0.25);
        let mut fns: Vec<Vec<f64>> = Vec::with_capacity(nmax + 1);
        let xi: Vec<f64> = pts.iter().map(|&x| (x - c) / sigma_ho).collect();
        fns.push(xi.iter().map(|&u| norm0 * (-0.5 * u * u).exp()).collect());
        if nmax >= 1 {
            let prev = fns[0].clone();
            fns.push(
                xi.iter()
                    .zip(prev.iter())
                    .map(|(&u, &p)| (2.0f64).sqrt() * u * p)
                    .collect(),
            );
        }
        for n in 1..nmax {
            let next: Vec<f64> = (0..pts.len())
                .map(|i| {
                    ((2.0 / (n as f64 + 1.0)).sqrt() * xi[i] * fns[n][i])
                        - ((n as f64 / (n as f64 + 1.0)).sqrt() * fns[n - 1][i])
                })
                .collect();
            fns.push(next);
        }
        fns
    };

    let mut out: Vec<ComplexField> = Vec::with_capacity(count);
    let grid = grid_from_axes(axes);
    match d {
        1 => {
            let fns = ladder(&axes[0], center[0], count.saturating_sub(1));
            for f in fns.into_iter().take(count) {
                let data = ArrayD::from_shape_vec(
                    IxDyn(&[axes[0].n()]),
                    f.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
                )
                .expect("shape");
                let field = Field::new(grid.clone(), data)?;
                let n = field.l2_norm();
                let mut field = field;
                field.data.map_inplace(|z| *z /= n);
                out.push(field);
            }
        }
        2 => {
            // order tensor products (n0, n1) by total quantum number then n0
            let per_axis = count; // more than enough 1d modes
            let f0 = ladder(&axes[0], center[0], per_axis);
            let f1 = ladder(&axes[1], center[1], per_axis);
            let mut orders: Vec<(usize, usize)> = Vec::new();
            'outer: for total in 0..=2 * per_axis {
                for n0 in 0..=total.min(per_axis) {
                    let n1 = total - n0;
                    if n1 > per_axis {
                        continue;
                    }
                    orders.push((n0, n1));
                    if orders.len() == count {
                        break 'outer;
                    }
                }
            }
            for (n0, n1) in orders {
                let data = ArrayD::from_shape_fn(IxDyn(&[axes[0].n(), axes[1].n()]), |i| {
                    Complex64::new(f0[n0][i[0]] * f1[n1][i[1]], 0.0)
                });
                let field = Field::new(grid.clone(), data)?;
                let n = field.l2_norm();
                let mut field = field;
                field.data.map_inplace(|z| *z /= n);
                out.push(field);
            }
        }
        _ => return Err(LabError::BadParams("d must be 1 or 2".into())),
    }
    Ok(out)
}

/// Orthonormal basis recipes for admissible mixtures.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum BasisRecipe {
    HarmonicEigenbasis { omega: f64, center: Vec<f64> },
    ShiftedGaussians { sigma: f64, spacing: f64, center: Vec<f64> },
}

/// Number of modes the admissibility condition requires at this hbar:
/// N = ceil((2 pi hbar)^{-d}), with a rounding guard so exact integers stay exact.
pub fn admissible_rank(hbar: f64, d: usize) -> usize {
    let raw = (TAU * hbar).powi(-(d as i32));
    (raw - 1e-9).ceil().max(1.0) as usize
}

/// Equal-weight mixture of N orthonormal modes; by construction
/// sum lambda_j^2 = 1/N <= (2 pi hbar)^d.
pub fn make_admissible_mixture(
    axes: &[GridAxis],
    params: PhysicalParams,
    recipe: &BasisRecipe,
) -> Result<DensityOperator> {
    let d = axes.len();
    let n = admissible_rank(params.hbar, d);
    let basis = match recipe {
        BasisRecipe::HarmonicEigenbasis { omega, center } => {
            harmonic_eigenfunctions(axes, params, *omega, center, n)?
        }
        BasisRecipe::ShiftedGaussians { sigma, spacing, center } => {
            shifted_gaussian_basis(axes, params, *sigma, *spacing, center, n)?
        }
    };
    let weights = vec![1.0 / n as f64; n];
    DensityOperator::mixed(params, weights, basis)
}

/// Gram-Schmidt of Gaussians displaced along the first axis (d = 1 recipe).
fn shifted_gaussian_basis(
    axes: &[GridAxis],
    params: PhysicalParams,
    sigma: f64,
    spacing: f64,
    center: &[f64],
    n: usize,
) -> Result<Vec<ComplexField>> {
    if axes.len() != 1 {
        return Err(LabError::BadParams("shifted_gaussians recipe is one-dimensional".into()));
    }
    let mut raw: Vec<ComplexField> = Vec::with_capacity(n);
    for j in 0..n {
        let x0 = center[0] + (j as f64 - (n as f64 - 1.0) / 2.0) * spacing;
        let g = make_gaussian(axes, params, &[x0], &[0.0], sigma)?;
        raw.push(g.field);
    }
    // modified Gram-Schmidt, run twice for orthogonality at the 1e-12 level
    let mut basis: Vec<ComplexField> = Vec::with_capacity(n);
    for mut f in raw.into_iter() {
        for _pass in 0..2 {
            for b in &basis {
                let inner = crate::grid::zip_map(b, &f, |a, c| a.conj() * c)?.total();
                ndarray::Zip::from(&mut f.data).and(&b.data).for_each(|x, &y| *x -= inner * y);
            }
        }
        let nrm = f.l2_norm();
        if nrm < 1e-8 {
            return Err(LabError::BasisTooLarge {
                requested: n,
                feasible: basis.len(),
            });
        }
        f.data.map_inplace(|z| *z /= nrm);
        basis.push(f);
    }
    Ok(basis)
}

// ---------------------------------------------------------------------------
// Serializable state recipes (CLI surface)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "profile", rename_all = "snake_case", deny_unknown_fields)]
pub enum RhoProfile {
    Gaussian { sigma: f64 },
    /// Gaussian envelope times (1 + amp cos(k x)) - the oscillatory family
    /// used as the monokinetic counterexample when k ~ 1/hbar.
    GaussianModulated { sigma: f64, amp: f64, wavenumber: f64 },
}

impl RhoProfile {
    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            RhoProfile::Gaussian { sigma } => {
                let q: f64 = x.iter().map(|&v| v * v).sum();
                (-q / (sigma * sigma)).exp()
            }
            RhoProfile::GaussianModulated { sigma, amp, wavenumber } => {
                let q: f64 = x.iter().map(|&v| v * v).sum();
                (-q / (sigma * sigma)).exp() * (1.0 + amp * (wavenumber * x[0]).cos())
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "profile", rename_all = "snake_case", deny_unknown_fields)]
pub enum PhaseProfile {
    Zero,
    Linear { p0: Vec<f64> },
    Sine { amp: f64, wavenumber: f64 },
    Cosine { amp: f64, wavenumber: f64 },
}

impl PhaseProfile {
    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            PhaseProfile::Zero => 0.0,
            PhaseProfile::Linear { p0 } => p0.iter().zip(x.iter()).map(|(p, v)| p * v).sum(),
            PhaseProfile::Sine { amp, wavenumber } => amp * (wavenumber * x[0]).sin(),
            PhaseProfile::Cosine { amp, wavenumber } => amp * (wavenumber * x[0]).cos(),
        }
    }

    pub fn gradient_bound(&self) -> f64 {
        match self {
            PhaseProfile::Zero => 0.0,
            PhaseProfile::Linear { p0 } => p0.iter().map(|p| p.abs()).fold(0.0, f64::max),
            PhaseProfile::Sine { amp, wavenumber } | PhaseProfile::Cosine { amp, wavenumber } => {
                (amp * wavenumber).abs()
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StateRecipe {
    Gaussian { x0: Vec<f64>, p0: Vec<f64>, sigma: f64 },
    Coherent { omega: f64, x0: Vec<f64>, p0: Vec<f64> },
    Wkb { rho: RhoProfile, phase: PhaseProfile },
    Cat { x0_left: Vec<f64>, x0_right: Vec<f64>, sigma: f64 },
    AdmissibleMixture { basis: BasisRecipe },
    HarmonicEigenbasisMixture { omega: f64, center: Vec<f64> },
}

/// A constructed state: pure or mixed.
#[derive(Debug, Clone)]
pub enum State {
    Pure(WaveFunction),
    Mixed(DensityOperator),
}

impl State {
    pub fn as_operator(&self) -> DensityOperator {
        match self {
            State::Pure(wf) => DensityOperator::pure(wf),
            State::Mixed(op) => op.clone(),
        }
    }
}

pub fn build_state(recipe: &StateRecipe, axes: &[GridAxis], params: PhysicalParams) -> Result<State> {
    match recipe {
        StateRecipe::Gaussian { x0, p0, sigma } => {
            Ok(State::Pure(make_gaussian(axes, params, x0, p0, *sigma)?))
        }
        StateRecipe::Coherent { omega, x0, p0 } => {
            Ok(State::Pure(make_coherent(axes, params, *omega, x0, p0)?))
        }
        StateRecipe::Wkb { rho, phase } => Ok(State::Pure(
            make_wkb(axes, params, |x| rho.eval(x), |x| phase.eval(x))?.wf,
        )),
        StateRecipe::Cat { x0_left, x0_right, sigma } => {
            Ok(State::Pure(make_cat(axes, params, x0_left, x0_right, *sigma)?))
        }
        StateRecipe::AdmissibleMixture { basis } => Ok(State::Mixed(make_admissible_mixture(
            axes, params, basis,
        )?)),
        StateRecipe::HarmonicEigenbasisMixture { omega, center } => {
            Ok(State::Mixed(make_admissible_mixture(
                axes,
                params,
                &BasisRecipe::HarmonicEigenbasis {
                    omega: *omega,
                    center: center.clone(),
                },
            )?))
        }
    }
}
