#pragma once

#include "slns/grid.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace slns {

/// Complex Fourier coefficients in real-to-complex half-spectrum layout:
/// full dims along the first d-1 axes, n/2+1 along the last. Normalized so
/// that f(x) = sum_k c_k exp(i 2*pi k.x / L) (conjugate half implied).
struct SpectralData {
    PeriodicGrid grid;
    std::vector<std::complex<double>> coef;

    std::size_t num_coef() const {
        std::size_t p = static_cast<std::size_t>(grid.n / 2 + 1);
        for (int a = 0; a < grid.d - 1; ++a) p *= static_cast<std::size_t>(grid.n);
        return p;
    }
};

/// Real scalar samples on a PeriodicGrid with a lazily built spectral view.
/// The spectral cache is invalidated by any mutable access to the samples;
/// concurrent use is safe on distinct fields only.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const PeriodicGrid& g, double fill = 0.0)
        : grid_(g), values_(g.num_nodes(), fill) {}
    ScalarField(const PeriodicGrid& g, std::vector<double> values);

    const PeriodicGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { spectrum_.reset(); return values_; }

    double operator[](std::size_t i) const { return values_[i]; }
    double& at(std::size_t i) { spectrum_.reset(); return values_[i]; }

    /// Spectral view, computed on first use and cached.
    const SpectralData& spectrum() const;
    /// Replace samples from a spectrum (inverse transform) and adopt it as cache.
    void assign_spectrum(SpectralData s);

    double mean() const;
    double max_abs() const;
    /// L2 norm, integral sense: sqrt(int |f|^2 dx) with uniform quadrature.
    double l2_norm() const;
    /// L1 norm via uniform quadrature; `refine` spectrally upsamples by that
    /// factor first (useful because |f| is not band-limited).
    double l1_norm(int refine = 1) const;

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double c);

private:
    PeriodicGrid grid_;
    std::vector<double> values_;
    mutable std::optional<SpectralData> spectrum_;
};

/// d-component vector field; components are ScalarFields on a shared grid.
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(const PeriodicGrid& g) : grid_(g), comps_(g.d, ScalarField(g)) {}

    const PeriodicGrid& grid() const { return grid_; }
    int num_comps() const { return static_cast<int>(comps_.size()); }
    const ScalarField& comp(int c) const { return comps_[c]; }
    ScalarField& comp(int c) { return comps_[c]; }

    std::array<double, 3> mean() const;
    double max_abs() const;  ///< sup over nodes of the Euclidean vector norm
    double l2_norm() const;

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(double c);

private:
    PeriodicGrid grid_;
    std::vector<ScalarField> comps_;
};

/// d x d tensor samples; component (i,j) stored at index i*d+j.
class TensorField {
public:
    TensorField() = default;
    explicit TensorField(const PeriodicGrid& g) : grid_(g), comps_(g.d * g.d, ScalarField(g)) {}

    static TensorField identity(const PeriodicGrid& g);

    const PeriodicGrid& grid() const { return grid_; }
    int num_comps() const { return static_cast<int>(comps_.size()); }
    const ScalarField& comp(int i, int j) const { return comps_[i * grid_.d + j]; }
    ScalarField& comp(int i, int j) { return comps_[i * grid_.d + j]; }
    const ScalarField& flat(int c) const { return comps_[c]; }
    ScalarField& flat(int c) { return comps_[c]; }

private:
    PeriodicGrid grid_;
    std::vector<ScalarField> comps_;
};

double l2_distance(const ScalarField& a, const ScalarField& b);
double l2_distance(const VectorField& a, const VectorField& b);

} // namespace slns
