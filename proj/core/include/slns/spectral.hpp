#pragma once

#include "slns/field.hpp"

#include <variant>

namespace slns {

/// Forward/inverse real FFTs behind the Field spectral views. Thread-safe;
/// plans are cached per (d, n) and created with FFTW_ESTIMATE so results are
/// reproducible run to run.
SpectralData forward_transform(const PeriodicGrid& g, const std::vector<double>& values);
std::vector<double> inverse_transform(const SpectralData& s);

enum class DiffKind { Gradient, Divergence, Curl, Laplacian };

/// Exact spectral derivative of the trigonometric interpolant along one axis.
ScalarField derivative(const ScalarField& f, int axis, int order = 1);
/// Multi-index derivative D^m.
ScalarField derivative(const ScalarField& f, const std::array<int, 3>& multi);

VectorField gradient(const ScalarField& f);
/// Jacobian: comp(i,j) = d v_i / d x_j.
TensorField gradient(const VectorField& v);
ScalarField divergence(const VectorField& v);
/// Scalar vorticity in d=2, vector curl in d=3.
std::variant<ScalarField, VectorField> curl(const VectorField& v);
ScalarField curl2(const VectorField& v);   ///< d=2 only
VectorField curl3(const VectorField& v);   ///< d=3 only
ScalarField laplacian(const ScalarField& f);
VectorField laplacian(const VectorField& v);

/// Dispatching form of the derivative operators.
/// Gradient of a scalar returns VectorField; divergence of a vector returns
/// ScalarField; curl follows the d=2/d=3 reduction; laplacian preserves rank.
std::variant<ScalarField, VectorField, TensorField>
differentiate(const std::variant<ScalarField, VectorField>& f, DiffKind kind);

/// Mean-zero inverse Laplacian (zero mode gauged to zero). Rejects input whose
/// mean exceeds 1e-10 * ||f||_2.
ScalarField inverse_laplacian(const ScalarField& f);

/// Leray-Hodge projection P v = v - grad(inv_lap(div v)); preserves the mean,
/// kills gradients, output divergence-free to spectral roundoff.
VectorField leray_project(const VectorField& v);

/// Velocity from vorticity: u = perp-grad(inv_lap(omega)) in d=2,
/// u = -inv_lap(curl omega) in d=3. Input must be mean-zero; in d=3 the
/// vorticity must be divergence-free to 1e-8 relative.
VectorField biot_savart(const ScalarField& omega2d);
VectorField biot_savart(const VectorField& omega3d);

/// Relative size of the divergence: ||div v||_2 / (||grad v||_2 + tiny).
double divergence_residual(const VectorField& v);

/// Zero every mode with any |k_axis| > n/3 (2/3-rule dealiasing).
void dealias(SpectralData& s);

/// Resample onto a grid refined by `factor` via zero-padded spectrum.
ScalarField spectral_upsample(const ScalarField& f, int factor);

/// Shift field by a constant displacement via phase multiplication (exact for
/// the trigonometric interpolant).
ScalarField phase_shift(const ScalarField& f, const std::array<double, 3>& shift);
VectorField phase_shift(const VectorField& f, const std::array<double, 3>& shift);

/// Fraction of spectral energy in the top third of the spectrum (resolution
/// diagnostic used by the norm estimators).
double high_mode_energy_fraction(const ScalarField& f);

} // namespace slns
