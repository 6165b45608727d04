#include "slns/field.hpp"
#include "slns/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace slns {

ScalarField::ScalarField(const PeriodicGrid& g, std::vector<double> values)
    : grid_(g), values_(std::move(values)) {
    if (values_.size() != grid_.num_nodes())
        throw std::invalid_argument("ScalarField: sample count does not match grid");
}

const SpectralData& ScalarField::spectrum() const {
    if (!spectrum_) spectrum_ = forward_transform(grid_, values_);
    return *spectrum_;
}

void ScalarField::assign_spectrum(SpectralData s) {
    if (!(s.grid == grid_) && grid_.num_nodes() != 0)
        grid_ = s.grid;
    values_ = inverse_transform(s);
    spectrum_ = std::move(s);
}

double ScalarField::mean() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / static_cast<double>(values_.size());
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double ScalarField::l2_norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    double cell = 1.0;
    for (int a = 0; a < grid_.d; ++a) cell *= grid_.spacing();
    return std::sqrt(s * cell);
}

double ScalarField::l1_norm(int refine) const {
    const std::vector<double>* vals = &values_;
    ScalarField fine;
    if (refine > 1) {
        fine = spectral_upsample(*this, refine);
        vals = &fine.values();
    }
    const PeriodicGrid& g = refine > 1 ? fine.grid() : grid_;
    double s = 0.0;
    for (double v : *vals) s += std::abs(v);
    double cell = 1.0;
    for (int a = 0; a < g.d; ++a) cell *= g.spacing();
    return s * cell;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    spectrum_.reset();
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    spectrum_.reset();
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

ScalarField& ScalarField::operator*=(double c) {
    spectrum_.reset();
    for (double& v : values_) v *= c;
    return *this;
}

std::array<double, 3> VectorField::mean() const {
    std::array<double, 3> m{0.0, 0.0, 0.0};
    for (int c = 0; c < num_comps(); ++c) m[c] = comps_[c].mean();
    return m;
}

double VectorField::max_abs() const {
    const std::size_t npts = grid_.num_nodes();
    double m = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        double s = 0.0;
        for (int c = 0; c < num_comps(); ++c) {
            const double v = comps_[c][i];
            s += v * v;
        }
        m = std::max(m, s);
    }
    return std::sqrt(m);
}

double VectorField::l2_norm() const {
    double s = 0.0;
    for (int c = 0; c < num_comps(); ++c) {
        const double n = comps_[c].l2_norm();
        s += n * n;
    }
    return std::sqrt(s);
}

VectorField& VectorField::operator+=(const VectorField& o) {
    for (int c = 0; c < num_comps(); ++c) comps_[c] += o.comps_[c];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    for (int c = 0; c < num_comps(); ++c) comps_[c] -= o.comps_[c];
    return *this;
}

VectorField& VectorField::operator*=(double c) {
    for (int i = 0; i < num_comps(); ++i) comps_[i] *= c;
    return *this;
}

TensorField TensorField::identity(const PeriodicGrid& g) {
    TensorField t(g);
    for (int i = 0; i < g.d; ++i) {
        auto& vals = t.comp(i, i).values();
        for (double& v : vals) v = 1.0;
    }
    return t;
}

double l2_distance(const ScalarField& a, const ScalarField& b) {
    ScalarField diff = a;
    diff -= b;
    return diff.l2_norm();
}

double l2_distance(const VectorField& a, const VectorField& b) {
    VectorField diff = a;
    diff -= b;
    return diff.l2_norm();
}

} // namespace slns
