//! Uniform periodic grids, spacing-weighted discrete Fourier transforms,
//! spectral derivatives/shifts, and rectangle-rule quadrature.
//!
//! Transform convention (fixed crate-wide): the forward transform along one
//! axis carries the kernel e^{-i eta s} and a prefactor 1/(2pi), the inverse
//! carries e^{+i eta s} with no prefactor, and discrete sums are scaled by the
//! axis spacing. With this scaling the DFT approximates the continuum
//! integrals (1/2pi) ∫ f(s) e^{-i eta s} ds and ∫ F(eta) e^{+i eta s} d eta,
//! and Parseval reads  ∫|f|² ds = 2pi ∫|F|² d eta  per transformed axis.

use std::collections::HashMap;
use std::sync::Arc;

use ndarray::{ArrayD, Axis, IxDyn, Zip};
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{LabError, Result};

pub const TAU: f64 = std::f64::consts::TAU;

/// Physical role of a field dimension. `X`/`V` are position and velocity,
/// `Y` is the relative variable dual to `V`, `Xi` is dual to `X`, `T`/`Tau`
/// the time pair. The index distinguishes tensor dimensions for d = 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum AxisLabel {
    X(usize),
    V(usize),
    Y(usize),
    Xi(usize),
    T,
    Tau,
}

impl AxisLabel {
    pub fn dual(self) -> AxisLabel {
        match self {
            AxisLabel::X(i) => AxisLabel::Xi(i),
            AxisLabel::Xi(i) => AxisLabel::X(i),
            AxisLabel::V(i) => AxisLabel::Y(i),
            AxisLabel::Y(i) => AxisLabel::V(i),
            AxisLabel::T => AxisLabel::Tau,
            AxisLabel::Tau => AxisLabel::T,
        }
    }
}

impl std::fmt::Display for AxisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxisLabel::X(i) => write!(f, "x{i}"),
            AxisLabel::V(i) => write!(f, "v{i}"),
            AxisLabel::Y(i) => write!(f, "y{i}"),
            AxisLabel::Xi(i) => write!(f, "xi{i}"),
            AxisLabel::T => write!(f, "t"),
            AxisLabel::Tau => write!(f, "tau"),
        }
    }
}

/// One uniform periodic axis: `n` points covering `[offset, offset + length)`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct GridAxis {
    n: usize,
    length: f64,
    offset: f64,
}

impl GridAxis {
    /// `n` must be even and >= 8 (keeps Nyquist handling trivial), `length` positive.
    pub fn new(n: usize, length: f64, offset: f64) -> Result<Self> {
        if n < 8 || n % 2 != 0 {
            return Err(LabError::BadAxis(format!(
                "n_points must be even and >= 8, got {n}"
            )));
        }
        if !(length > 0.0) || !length.is_finite() || !offset.is_finite() {
            return Err(LabError::BadAxis(format!(
                "length must be positive and finite, got length={length}, offset={offset}"
            )));
        }
        Ok(GridAxis { n, length, offset })
    }

    /// Axis centered on the origin: `[-length/2, length/2)`.
    pub fn centered(n: usize, length: f64) -> Result<Self> {
        Self::new(n, length, -0.5 * length)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.n as f64
    }

    pub fn point(&self, j: usize) -> f64 {
        self.offset + j as f64 * self.spacing()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n).map(|j| self.point(j)).collect()
    }

    /// Dual axis for the DFT pair: same point count, spacing 2pi/length,
    /// centered on the origin (monotone layout).
    pub fn dual(&self) -> GridAxis {
        let d = TAU / self.length;
        let n = self.n;
        GridAxis {
            n,
            length: d * n as f64,
            offset: -0.5 * d * n as f64,
        }
    }

    /// Wavenumbers 2pi/length x {0, 1, ..., n/2-1, -n/2, ..., -1} in the
    /// transform's native layout.
    pub fn wavenumbers(&self) -> Vec<f64> {
        let d = TAU / self.length;
        (0..self.n)
            .map(|k| {
                let ks = if k < self.n / 2 {
                    k as isize
                } else {
                    k as isize - self.n as isize
                };
                ks as f64 * d
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
struct AxisSlot {
    label: AxisLabel,
    axis: GridAxis,
    /// Physical axis this frequency axis was produced from, kept so an
    /// inverse transform restores the exact original (offset included).
    source: Option<(AxisLabel, GridAxis)>,
}

/// Ordered axis metadata for a sample block; entry order matches array dims.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseGrid {
    slots: Vec<AxisSlot>,
}

impl PhaseGrid {
    pub fn new(axes: Vec<(AxisLabel, GridAxis)>) -> Self {
        PhaseGrid {
            slots: axes
                .into_iter()
                .map(|(label, axis)| AxisSlot {
                    label,
                    axis,
                    source: None,
                })
                .collect(),
        }
    }

    pub fn ndim(&self) -> usize {
        self.slots.len()
    }

    pub fn labels(&self) -> Vec<AxisLabel> {
        self.slots.iter().map(|s| s.label).collect()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.slots.iter().map(|s| s.axis.n).collect()
    }

    pub fn index_of(&self, label: AxisLabel) -> Result<usize> {
        self.slots
            .iter()
            .position(|s| s.label == label)
            .ok_or_else(|| LabError::AxisMissing(label.to_string()))
    }

    pub fn axis(&self, label: AxisLabel) -> Result<&GridAxis> {
        let i = self.index_of(label)?;
        Ok(&self.slots[i].axis)
    }

    pub fn has(&self, label: AxisLabel) -> bool {
        self.slots.iter().any(|s| s.label == label)
    }

    /// Product of spacings over all axes (the quadrature cell measure).
    pub fn cell_measure(&self) -> f64 {
        self.slots.iter().map(|s| s.axis.spacing()).product()
    }
}

/// Dense multi-dimensional sample block bound to a [`PhaseGrid`].
#[derive(Debug, Clone)]
pub struct Field<T> {
    pub grid: PhaseGrid,
    pub data: ArrayD<T>,
}

pub type RealField = Field<f64>;
pub type ComplexField = Field<Complex64>;

impl<T: Clone + num_complex::ComplexFloat> Field<T> {
    pub fn new(grid: PhaseGrid, data: ArrayD<T>) -> Result<Self> {
        if grid.shape() != data.shape() {
            return Err(LabError::BadAxis(format!(
                "grid shape {:?} does not match data shape {:?}",
                grid.shape(),
                data.shape()
            )));
        }
        Ok(Field { grid, data })
    }

    /// Build from a function of the physical coordinates (slot order).
    pub fn from_fn(grid: PhaseGrid, f: impl Fn(&[f64]) -> T) -> Self {
        let shape = grid.shape();
        let pts: Vec<Vec<f64>> = grid.slots.iter().map(|s| s.axis.points()).collect();
        let mut coord = vec![0.0; shape.len()];
        let data = ArrayD::from_shape_fn(IxDyn(&shape), |idx| {
            for (d, c) in coord.iter_mut().enumerate() {
                *c = pts[d][idx[d]];
            }
            f(&coord)
        });
        Field { grid, data }
    }

    pub fn zeros(grid: PhaseGrid) -> Self
    where
        T: num_complex::ComplexFloat,
    {
        let shape = grid.shape();
        Field {
            data: ArrayD::from_elem(IxDyn(&shape), T::zero()),
            grid,
        }
    }
}

// ---------------------------------------------------------------------------
// FFT plumbing
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// Kernel e^{-i eta s}, prefactor 1/(2pi) per axis.
    Forward,
    /// Kernel e^{+i eta s}, no prefactor.
    Inverse,
}

thread_local! {
    static PLANS: std::cell::RefCell<HashMap<(usize, bool), Arc<dyn Fft<f64>>>> =
        std::cell::RefCell::new(HashMap::new());
}

fn plan(n: usize, forward: bool) -> Arc<dyn Fft<f64>> {
    PLANS.with(|p| {
        p.borrow_mut()
            .entry((n, forward))
            .or_insert_with(|| {
                let mut planner = FftPlanner::new();
                if forward {
                    planner.plan_fft_forward(n)
                } else {
                    planner.plan_fft_inverse(n)
                }
            })
            .clone()
    })
}

/// Unnormalized FFT along one axis of a dynamic-rank complex array.
/// forward: sum_j f_j e^{-2pi i jk/n}; inverse: sum_k F_k e^{+2pi i jk/n}.
pub fn fft_axis(data: &mut ArrayD<Complex64>, axis: usize, forward: bool) {
    let n = data.shape()[axis];
    let fft = plan(n, forward);
    let scratch_len = fft.get_inplace_scratch_len();
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    let mut scratch = vec![Complex64::new(0.0, 0.0); scratch_len];
    for mut lane in data.lanes_mut(Axis(axis)) {
        for (b, v) in buf.iter_mut().zip(lane.iter()) {
            *b = *v;
        }
        fft.process_with_scratch(&mut buf, &mut scratch);
        for (v, b) in lane.iter_mut().zip(buf.iter()) {
            *v = *b;
        }
    }
}

/// Multiply every subview at index k along `axis` by `factors[k]`.
fn scale_axis(data: &mut ArrayD<Complex64>, axis: usize, factors: &[Complex64]) {
    for (k, mut sub) in data.axis_iter_mut(Axis(axis)).enumerate() {
        let f = factors[k];
        sub.map_inplace(|z| *z *= f);
    }
}

/// Rotate by n/2 along `axis`: native FFT order <-> monotone centered order.
/// For even n the rotation is an involution, so one helper serves both ways.
fn fftshift(data: &ArrayD<Complex64>, axis: usize) -> ArrayD<Complex64> {
    let n = data.shape()[axis];
    let half = n / 2;
    let mut out = data.clone();
    for (k, mut sub) in out.axis_iter_mut(Axis(axis)).enumerate() {
        let src = (k + half) % n;
        sub.assign(&data.index_axis(Axis(axis), src));
    }
    out
}

impl ComplexField {
    /// Spacing-weighted DFT along one labeled axis; the axis is replaced by
    /// its dual (label and lattice), monotone centered layout.
    pub fn dft_along(&self, label: AxisLabel, dir: Direction) -> Result<ComplexField> {
        let ax_idx = self.grid.index_of(label)?;
        let slot = &self.grid.slots[ax_idx];
        let axis = slot.axis.clone();
        let n = axis.n;

        match dir {
            Direction::Forward => {
                // out_k = (spacing/2pi) * e^{-i eta_k * offset} * FFT_k(f)
                let mut data = self.data.clone();
                fft_axis(&mut data, ax_idx, true);
                let dual = axis.dual();
                let scale = axis.spacing() / TAU;
                let factors: Vec<Complex64> = axis
                    .wavenumbers()
                    .iter()
                    .map(|&w| Complex64::from_polar(scale, -w * axis.offset))
                    .collect();
                scale_axis(&mut data, ax_idx, &factors);
                let data = fftshift(&data, ax_idx);
                let mut grid = self.grid.clone();
                grid.slots[ax_idx] = AxisSlot {
                    label: label.dual(),
                    axis: dual,
                    source: Some((label, axis)),
                };
                Ok(Field { grid, data })
            }
            Direction::Inverse => {
                // f_j = spacing_eta * sum_k F_k e^{+i eta_k s_j}
                let (tgt_label, target) = match &slot.source {
                    Some((l, a)) => (*l, a.clone()),
                    None => (label.dual(), axis.dual()),
                };
                let mut data = fftshift(&self.data, ax_idx);
                let factors: Vec<Complex64> = axis
                    .wavenumbers()
                    .iter()
                    .map(|&w| Complex64::from_polar(axis.spacing(), w * target.offset))
                    .collect();
                scale_axis(&mut data, ax_idx, &factors);
                fft_axis(&mut data, ax_idx, false);
                let mut grid = self.grid.clone();
                grid.slots[ax_idx] = AxisSlot {
                    label: tgt_label,
                    axis: target,
                    source: None,
                };
                Ok(Field { grid, data })
            }
        }
    }

    /// Spectral derivative of given order along a labeled axis.
    /// The Nyquist coefficient is zeroed for odd orders so real fields stay real.
    pub fn derivative(&self, label: AxisLabel, order: u32) -> Result<ComplexField> {
        let ax_idx = self.grid.index_of(label)?;
        let axis = &self.grid.slots[ax_idx].axis;
        let n = axis.n as f64;
        let mut data = self.data.clone();
        fft_axis(&mut data, ax_idx, true);
        let factors: Vec<Complex64> = axis
            .wavenumbers()
            .iter()
            .enumerate()
            .map(|(k, &w)| {
                if order % 2 == 1 && k == axis.n / 2 {
                    Complex64::new(0.0, 0.0)
                } else {
                    (Complex64::new(0.0, w)).powu(order) / n
                }
            })
            .collect();
        scale_axis(&mut data, ax_idx, &factors);
        fft_axis(&mut data, ax_idx, false);
        Ok(Field {
            grid: self.grid.clone(),
            data,
        })
    }

    /// Band-limited evaluation of f(s + shift) along a labeled axis
    /// (multiplication by e^{+i w shift} in the axis' Fourier dual).
    pub fn translate(&self, label: AxisLabel, shift: f64) -> Result<ComplexField> {
        let ax_idx = self.grid.index_of(label)?;
        let axis = &self.grid.slots[ax_idx].axis;
        let n = axis.n as f64;
        let mut data = self.data.clone();
        fft_axis(&mut data, ax_idx, true);
        let factors: Vec<Complex64> = axis
            .wavenumbers()
            .iter()
            .map(|&w| Complex64::from_polar(1.0 / n, w * shift))
            .collect();
        scale_axis(&mut data, ax_idx, &factors);
        fft_axis(&mut data, ax_idx, false);
        Ok(Field {
            grid: self.grid.clone(),
            data,
        })
    }

    pub fn check_finite(&self, what: &str) -> Result<()> {
        if self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            Ok(())
        } else {
            Err(LabError::NonFinite(what.to_string()))
        }
    }

    /// Real part, rejecting if the imaginary residue exceeds `tol` times the
    /// field magnitude.
    pub fn into_real_checked(self, tol: f64) -> Result<RealField> {
        let mag = self
            .data
            .iter()
            .fold(0.0f64, |m, z| m.max(z.re.abs().max(z.im.abs())));
        let residue = self.data.iter().fold(0.0f64, |m, z| m.max(z.im.abs()));
        if mag > 0.0 && residue > tol * mag {
            return Err(LabError::ImaginaryResidue {
                residue,
                limit: tol * mag,
            });
        }
        Ok(Field {
            grid: self.grid,
            data: self.data.mapv(|z| z.re),
        })
    }

    pub fn l2_norm(&self) -> f64 {
        let cell = self.grid.cell_measure();
        (self.data.iter().map(|z| z.norm_sqr()).sum::<f64>() * cell).sqrt()
    }
}

impl RealField {
    pub fn to_complex(&self) -> ComplexField {
        Field {
            grid: self.grid.clone(),
            data: self.data.mapv(|x| Complex64::new(x, 0.0)),
        }
    }

    /// Spectral derivative (real in, real out; residue must be tiny).
    pub fn derivative(&self, label: AxisLabel, order: u32) -> Result<RealField> {
        Ok(Field {
            grid: self.grid.clone(),
            data: self
                .to_complex()
                .derivative(label, order)?
                .data
                .mapv(|z| z.re),
        })
    }

    pub fn l2_norm(&self) -> f64 {
        let cell = self.grid.cell_measure();
        (self.data.iter().map(|x| x * x).sum::<f64>() * cell).sqrt()
    }

    pub fn min_max(&self) -> (f64, f64) {
        self.data.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
    }
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

macro_rules! impl_quadrature {
    ($t:ty, $zero:expr) => {
        impl Field<$t> {
            /// Periodic rectangle rule over the given axes; the result keeps
            /// the remaining axes.
            pub fn quadrature(&self, labels: &[AxisLabel]) -> Result<Field<$t>> {
                if labels.is_empty() {
                    return Err(LabError::EmptyQuadrature);
                }
                let mut idxs = Vec::with_capacity(labels.len());
                for &l in labels {
                    idxs.push(self.grid.index_of(l)?);
                }
                idxs.sort_unstable();
                idxs.dedup();
                if idxs.len() != labels.len() {
                    return Err(LabError::BadAxis("duplicate quadrature axis".into()));
                }
                let weight: f64 = idxs
                    .iter()
                    .map(|&i| self.grid.slots[i].axis.spacing())
                    .product();
                let mut data = self.data.clone();
                // reduce from the highest axis index so lower indices stay valid
                for &i in idxs.iter().rev() {
                    data = data.sum_axis(Axis(i));
                }
                let data = data.mapv(|x| x * weight);
                let mut grid = self.grid.clone();
                for &i in idxs.iter().rev() {
                    grid.slots.remove(i);
                }
                Ok(Field { grid, data })
            }

            /// Quadrature over every axis.
            pub fn total(&self) -> $t {
                let cell = self.grid.cell_measure();
                let mut acc: $t = $zero;
                for v in self.data.iter() {
                    acc = acc + *v;
                }
                acc * cell
            }
        }
    };
}

impl_quadrature!(f64, 0.0f64);
impl_quadrature!(Complex64, Complex64::new(0.0, 0.0));

/// Elementwise combination of two fields on the same grid.
pub fn zip_map<T: Copy, U: Copy, R: Copy + num_complex::ComplexFloat>(
    a: &Field<T>,
    b: &Field<U>,
    f: impl Fn(T, U) -> R + Sync + Send,
) -> Result<Field<R>> {
    if a.grid.shape() != b.grid.shape() {
        return Err(LabError::BadAxis("zip_map shape mismatch".into()));
    }
    let mut out = ArrayD::from_elem(IxDyn(&a.grid.shape()), R::zero());
    Zip::from(&mut out)
        .and(&a.data)
        .and(&b.data)
        .for_each(|o, &x, &y| *o = f(x, y));
    Field::new(a.grid.clone(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cplx_gaussian(axis: &GridAxis, c: f64, s: f64) -> ComplexField {
        let grid = PhaseGrid::new(vec![(AxisLabel::Y(0), axis.clone())]);
        Field::from_fn(grid, |x| Complex64::new((-(x[0] - c).powi(2) / (2.0 * s * s)).exp(), 0.0))
    }

    // deterministic pseudo-random stream for tests (no rand dependency)
    pub(crate) fn splitmix(seed: &mut u64) -> f64 {
        *seed = seed.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = *seed;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    }

    #[test]
    fn axis_invariants_rejected() {
        assert!(GridAxis::new(7, 1.0, 0.0).is_err());
        assert!(GridAxis::new(10, -1.0, 0.0).is_err());
        assert!(GridAxis::new(4, 1.0, 0.0).is_err());
        assert!(GridAxis::new(8, 1.0, 0.0).is_ok());
    }

    #[test]
    fn wavenumbers_match_integer_lattice() {
        let ax = GridAxis::new(8, TAU, 0.0).unwrap();
        let expect = [0.0, 1.0, 2.0, 3.0, -4.0, -3.0, -2.0, -1.0];
        for (w, e) in ax.wavenumbers().iter().zip(expect.iter()) {
            assert_relative_eq!(w, e, max_relative = 1e-14);
        }
        let ax = GridAxis::new(8, std::f64::consts::PI, 0.0).unwrap();
        let expect = [0.0, 2.0, 4.0, 6.0, -8.0, -6.0, -4.0, -2.0];
        for (w, e) in ax.wavenumbers().iter().zip(expect.iter()) {
            assert_relative_eq!(w, e, max_relative = 1e-14);
        }
        // spacing of the dual lattice times n recovers 2pi n / length
        let ax = GridAxis::new(64, 5.0, -2.5).unwrap();
        assert_relative_eq!(
            ax.dual().spacing() * ax.n() as f64,
            TAU * ax.n() as f64 / ax.length(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn forward_inverse_roundtrip_random() {
        let axis = GridAxis::new(64, 7.0, -2.0).unwrap();
        let grid = PhaseGrid::new(vec![(AxisLabel::Y(0), axis)]);
        let mut seed = 42u64;
        let data = ArrayD::from_shape_fn(IxDyn(&[64]), |_| {
            Complex64::new(splitmix(&mut seed), splitmix(&mut seed))
        });
        let f = Field::new(grid, data).unwrap();
        let back = f
            .dft_along(AxisLabel::Y(0), Direction::Forward)
            .unwrap()
            .dft_along(AxisLabel::V(0), Direction::Inverse)
            .unwrap();
        let err: f64 = f
            .data
            .iter()
            .zip(back.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        let mag = f.data.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(err <= 1e-12 * mag, "roundtrip error {err}");
        // axis metadata restored exactly
        assert_eq!(back.grid.slots[0].axis, f.grid.slots[0].axis);
        assert_eq!(back.grid.slots[0].label, AxisLabel::Y(0));
    }

    #[test]
    fn inverse_then_forward_roundtrip() {
        let axis = GridAxis::centered(32, 12.0).unwrap();
        let grid = PhaseGrid::new(vec![(AxisLabel::V(0), axis)]);
        let mut seed = 7u64;
        let data = ArrayD::from_shape_fn(IxDyn(&[32]), |_| {
            Complex64::new(splitmix(&mut seed), splitmix(&mut seed))
        });
        let f = Field::new(grid, data).unwrap();
        let back = f
            .dft_along(AxisLabel::V(0), Direction::Inverse)
            .unwrap()
            .dft_along(AxisLabel::Y(0), Direction::Forward)
            .unwrap();
        let err: f64 = f
            .data
            .iter()
            .zip(back.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err <= 1e-12, "roundtrip error {err}");
    }

    #[test]
    fn constant_field_gives_discrete_delta() {
        let axis = GridAxis::centered(64, 10.0).unwrap();
        let grid = PhaseGrid::new(vec![(AxisLabel::Y(0), axis.clone())]);
        let f = Field::new(grid, ArrayD::from_elem(IxDyn(&[64]), Complex64::new(1.0, 0.0))).unwrap();
        let hat = f.dft_along(AxisLabel::Y(0), Direction::Forward).unwrap();
        // forward of 1 with kernel e^{-ivy}/2pi tends to delta(v); discretely a
        // single spike at v = 0 whose quadrature mass is L/2pi * dv = 1... the
        // mass of the spike is value * dv and must equal 1 after the 2pi-free
        // inverse picks it up; check the v-quadrature of hat equals L/(2pi)*...:
        // sum_k hat_k dv = f(y=0 content) -> easiest exact check: spike at v=0
        // with value L/(2pi), zeros elsewhere.
        let vax = hat.grid.axis(AxisLabel::V(0)).unwrap().clone();
        let zero_idx = vax.points().iter().position(|&v| v.abs() < 1e-12).unwrap();
        for (k, z) in hat.data.iter().enumerate() {
            if k == zero_idx {
                assert_relative_eq!(z.re, 10.0 / TAU, max_relative = 1e-12);
                // mass after quadrature: value * dv = L/(2pi) * 2pi/L = 1
                assert_relative_eq!(z.re * vax.spacing(), 1.0, max_relative = 1e-12);
            } else {
                assert!(z.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn gaussian_forward_matches_direct_summation_oracle() {
        // e^{-y^2/2} on a length-40, 256-point axis
        let axis = GridAxis::centered(256, 40.0).unwrap();
        let f = cplx_gaussian(&axis, 0.0, 1.0);
        let hat = f.dft_along(AxisLabel::Y(0), Direction::Forward).unwrap();
        let vax = hat.grid.axis(AxisLabel::V(0)).unwrap().clone();
        // independent direct-summation quadrature of (1/2pi) \int e^{-ivy} e^{-y^2/2} dy
        let ys = axis.points();
        let dy = axis.spacing();
        for (k, &v) in vax.points().iter().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for &y in &ys {
                acc += Complex64::from_polar((-0.5 * y * y).exp(), -v * y);
            }
            acc *= dy / TAU;
            let got = hat.data[k];
            assert!((got - acc).norm() <= 1e-12, "direct-sum mismatch at v={v}");
            // and the closed form (2pi)^{-1/2} e^{-v^2/2}
            let closed = (TAU).powf(-0.5) * (-0.5 * v * v).exp();
            assert!(
                (got.re - closed).abs() <= 1e-8 && got.im.abs() <= 1e-10,
                "closed-form mismatch at v={v}: got {got}, want {closed}"
            );
        }
    }

    #[test]
    fn parseval_on_forward_transform() {
        let axis = GridAxis::new(128, 9.0, -4.0).unwrap();
        let grid = PhaseGrid::new(vec![(AxisLabel::Y(0), axis)]);
        let mut seed = 99u64;
        let data = ArrayD::from_shape_fn(IxDyn(&[128]), |_| {
            Complex64::new(splitmix(&mut seed), splitmix(&mut seed))
        });
        let f = Field::new(grid, data).unwrap();
        let hat = f.dft_along(AxisLabel::Y(0), Direction::Forward).unwrap();
        let in_sq = zip_map(&f, &f, |a, _| a.norm_sqr()).unwrap().total();
        let out_sq = zip_map(&hat, &hat, |a, _| a.norm_sqr()).unwrap().total();
        assert_relative_eq!(in_sq, TAU * out_sq, max_relative = 1e-10);
    }

    #[test]
    fn dft_linearity() {
        let axis = GridAxis::centered(64, 6.0).unwrap();
        let grid = PhaseGrid::new(vec![(AxisLabel::Y(0), axis)]);
        let mut seed = 5u64;
        let mk = |seed: &mut u64| {
            Field::new(
                grid.clone(),
                ArrayD::from_shape_fn(IxDyn(&[64]), |_| {
                    Complex64::new(splitmix(seed), splitmix(seed))
                }),
            )
            .unwrap()
        };
        let f = mk(&mut seed);
        let g = mk(&mut seed);
        let (a, b) = (Complex64::new(1.3, -0.4), Complex64::new(-0.7, 2.1));
        let comb = Field::new(
            grid.clone(),
            &f.data.mapv(|z| z * a) + &g.data.mapv(|z| z * b),
        )
        .unwrap();
        let lhs = comb.dft_along(AxisLabel::Y(0), Direction::Forward).unwrap();
        let fh = f.dft_along(AxisLabel::Y(0), Direction::Forward).unwrap();
        let gh = g.dft_along(AxisLabel::Y(0), Direction::Forward).unwrap();
        let mag = lhs.data.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for ((l, x), y) in lhs.data.iter().zip(fh.data.iter()).zip(gh.data.iter()) {
            assert!((l - (x * a + y * b)).norm() <= 1e-12 * mag.max(1.0));
        }
    }

    #[test]
    fn quadrature_basics() {
        let axis = GridAxis::centered(64, 5.0).unwrap();
        let grid = PhaseGrid::new(vec![(AxisLabel::X(0), axis.clone())]);
        let c = Field::new(grid.clone(), ArrayD::from_elem(IxDyn(&[64]), 3.5f64)).unwrap();
        assert_relative_eq!(c.total(), 3.5 * 5.0, max_relative = 1e-14);

        // odd function integrates to zero over the symmetric axis
        let odd = Field::from_fn(grid.clone(), |x| (x[0] * TAU / 5.0).sin());
        assert!(odd.total().abs() < 1e-12);

        // errors
        assert!(matches!(
            c.quadrature(&[]),
            Err(LabError::EmptyQuadrature)
        ));
        assert!(c.quadrature(&[AxisLabel::V(0)]).is_err());
    }

    #[test]
    fn quadrature_exact_for_trig_polynomials() {
        // modes below Nyquist integrate exactly (to rounding)
        let axis = GridAxis::centered(32, 4.0).unwrap();
        let grid = PhaseGrid::new(vec![(AxisLabel::X(0), axis)]);
        for mode in 1..15usize {
            let f = Field::from_fn(grid.clone(), |x| {
                (x[0] * TAU * mode as f64 / 4.0).cos() + 2.0
            });
            assert!(
                (f.total() - 8.0).abs() <= 1e-12,
                "mode {mode} quadrature not exact"
            );
        }
    }

    #[test]
    fn spectral_derivative_and_translate() {
        let axis = GridAxis::centered(128, 20.0).unwrap();
        let grid = PhaseGrid::new(vec![(AxisLabel::X(0), axis)]);
        let f = Field::from_fn(grid.clone(), |x| {
            Complex64::new((-x[0] * x[0] / 2.0).exp(), 0.0)
        });
        let df = f.derivative(AxisLabel::X(0), 1).unwrap();
        let exact = Field::from_fn(grid.clone(), |x| {
            Complex64::new(-x[0] * (-x[0] * x[0] / 2.0).exp(), 0.0)
        });
        let err = df
            .data
            .iter()
            .zip(exact.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-10, "derivative err {err}");

        let sh = f.translate(AxisLabel::X(0), 1.25).unwrap();
        let exact = Field::from_fn(grid, |x| {
            Complex64::new((-(x[0] + 1.25).powi(2) / 2.0).exp(), 0.0)
        });
        let err = sh
            .data
            .iter()
            .zip(exact.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-10, "translate err {err}");
    }
}
