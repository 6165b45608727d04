#include "slns/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace slns {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// One cached FFTW plan pair per (d, n), executed on owned scratch buffers.
/// FFTW_ESTIMATE keeps the chosen algorithm a pure function of the shape.
struct PlanEntry {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    double* real = nullptr;
    fftw_complex* cplx = nullptr;
    std::size_t nreal = 0, ncplx = 0;

    ~PlanEntry() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (real) fftw_free(real);
        if (cplx) fftw_free(cplx);
    }
};

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

PlanEntry& plan_for(const PeriodicGrid& g) {
    static std::map<std::pair<int, int>, PlanEntry> cache;
    auto key = std::make_pair(g.d, g.n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    PlanEntry& e = cache[key];
    const int n = g.n;
    e.nreal = g.num_nodes();
    e.ncplx = e.nreal / n * (n / 2 + 1);
    e.real = fftw_alloc_real(e.nreal);
    e.cplx = fftw_alloc_complex(e.ncplx);
    if (g.d == 2) {
        e.fwd = fftw_plan_dft_r2c_2d(n, n, e.real, e.cplx, FFTW_ESTIMATE);
        e.bwd = fftw_plan_dft_c2r_2d(n, n, e.cplx, e.real, FFTW_ESTIMATE);
    } else {
        e.fwd = fftw_plan_dft_r2c_3d(n, n, n, e.real, e.cplx, FFTW_ESTIMATE);
        e.bwd = fftw_plan_dft_c2r_3d(n, n, n, e.cplx, e.real, FFTW_ESTIMATE);
    }
    if (!e.fwd || !e.bwd) throw std::runtime_error("fftw plan creation failed");
    return e;
}

/// Visit every stored half-spectrum mode with its integer wavenumbers.
template <class Fn>
void for_each_mode(const PeriodicGrid& g, Fn&& fn) {
    const int n = g.n;
    const int nh = n / 2 + 1;
    if (g.d == 2) {
        std::size_t flat = 0;
        for (int j0 = 0; j0 < n; ++j0) {
            const int k0 = g.wavenumber(j0);
            for (int j1 = 0; j1 < nh; ++j1, ++flat) fn(flat, k0, j1, 0);
        }
    } else {
        std::size_t flat = 0;
        for (int j0 = 0; j0 < n; ++j0) {
            const int k0 = g.wavenumber(j0);
            for (int j1 = 0; j1 < n; ++j1) {
                const int k1 = g.wavenumber(j1);
                for (int j2 = 0; j2 < nh; ++j2, ++flat) fn(flat, k0, k1, j2);
            }
        }
    }
}

bool is_nyquist(const PeriodicGrid& g, int k0, int k1, int k2) {
    const int ny = g.n / 2;
    if (std::abs(k0) == ny || std::abs(k1) == ny) return true;
    return g.d == 3 ? std::abs(k2) == ny : std::abs(k1) == ny;
}

std::complex<double> ik_factor(double kappa, int order) {
    std::complex<double> f(0.0, kappa);
    std::complex<double> r(1.0, 0.0);
    for (int i = 0; i < order; ++i) r *= f;
    return r;
}

} // namespace

SpectralData forward_transform(const PeriodicGrid& g, const std::vector<double>& values) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    PlanEntry& e = plan_for(g);
    if (values.size() != e.nreal)
        throw std::invalid_argument("forward_transform: size mismatch");
    std::memcpy(e.real, values.data(), e.nreal * sizeof(double));
    fftw_execute(e.fwd);
    SpectralData s;
    s.grid = g;
    s.coef.resize(e.ncplx);
    const double norm = 1.0 / static_cast<double>(e.nreal);
    for (std::size_t i = 0; i < e.ncplx; ++i)
        s.coef[i] = std::complex<double>(e.cplx[i][0] * norm, e.cplx[i][1] * norm);
    return s;
}

std::vector<double> inverse_transform(const SpectralData& s) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    PlanEntry& e = plan_for(s.grid);
    if (s.coef.size() != e.ncplx)
        throw std::invalid_argument("inverse_transform: size mismatch");
    for (std::size_t i = 0; i < e.ncplx; ++i) {
        e.cplx[i][0] = s.coef[i].real();
        e.cplx[i][1] = s.coef[i].imag();
    }
    fftw_execute(e.bwd);
    return std::vector<double>(e.real, e.real + e.nreal);
}

ScalarField derivative(const ScalarField& f, int axis, int order) {
    const PeriodicGrid& g = f.grid();
    if (axis < 0 || axis >= g.d) throw std::invalid_argument("derivative: bad axis");
    if (order == 0) return f;
    SpectralData s = f.spectrum();
    const double kb = 2.0 * kPi / g.length;
    const bool odd = (order % 2) != 0;
    for_each_mode(g, [&](std::size_t flat, int k0, int k1, int k2) {
        const int k = axis == 0 ? k0 : (axis == 1 ? k1 : k2);
        if (odd && std::abs(k) == g.n / 2) {
            s.coef[flat] = 0.0;
            return;
        }
        s.coef[flat] *= ik_factor(kb * k, order);
    });
    ScalarField out(g);
    out.assign_spectrum(std::move(s));
    return out;
}

ScalarField derivative(const ScalarField& f, const std::array<int, 3>& multi) {
    ScalarField out = f;
    for (int a = 0; a < f.grid().d; ++a)
        if (multi[a] > 0) out = derivative(out, a, multi[a]);
    return out;
}

VectorField gradient(const ScalarField& f) {
    VectorField out(f.grid());
    for (int a = 0; a < f.grid().d; ++a) out.comp(a) = derivative(f, a, 1);
    return out;
}

TensorField gradient(const VectorField& v) {
    TensorField out(v.grid());
    for (int i = 0; i < v.grid().d; ++i)
        for (int j = 0; j < v.grid().d; ++j) out.comp(i, j) = derivative(v.comp(i), j, 1);
    return out;
}

ScalarField divergence(const VectorField& v) {
    ScalarField out(v.grid());
    for (int a = 0; a < v.grid().d; ++a) out += derivative(v.comp(a), a, 1);
    return out;
}

ScalarField curl2(const VectorField& v) {
    if (v.grid().d != 2) throw std::invalid_argument("curl2 requires d=2");
    ScalarField out = derivative(v.comp(1), 0, 1);
    out -= derivative(v.comp(0), 1, 1);
    return out;
}

VectorField curl3(const VectorField& v) {
    if (v.grid().d != 3) throw std::invalid_argument("curl3 requires d=3");
    VectorField out(v.grid());
    out.comp(0) = derivative(v.comp(2), 1, 1);
    out.comp(0) -= derivative(v.comp(1), 2, 1);
    out.comp(1) = derivative(v.comp(0), 2, 1);
    out.comp(1) -= derivative(v.comp(2), 0, 1);
    out.comp(2) = derivative(v.comp(1), 0, 1);
    out.comp(2) -= derivative(v.comp(0), 1, 1);
    return out;
}

std::variant<ScalarField, VectorField> curl(const VectorField& v) {
    if (v.grid().d == 2) return curl2(v);
    return curl3(v);
}

ScalarField laplacian(const ScalarField& f) {
    const PeriodicGrid& g = f.grid();
    SpectralData s = f.spectrum();
    const double kb = 2.0 * kPi / g.length;
    for_each_mode(g, [&](std::size_t flat, int k0, int k1, int k2) {
        const double kk = kb * kb * (double(k0) * k0 + double(k1) * k1 + double(k2) * k2);
        s.coef[flat] *= -kk;
    });
    ScalarField out(g);
    out.assign_spectrum(std::move(s));
    return out;
}

VectorField laplacian(const VectorField& v) {
    VectorField out(v.grid());
    for (int a = 0; a < v.grid().d; ++a) out.comp(a) = laplacian(v.comp(a));
    return out;
}

std::variant<ScalarField, VectorField, TensorField>
differentiate(const std::variant<ScalarField, VectorField>& f, DiffKind kind) {
    switch (kind) {
    case DiffKind::Gradient:
        if (auto* s = std::get_if<ScalarField>(&f)) return gradient(*s);
        return gradient(std::get<VectorField>(f));
    case DiffKind::Divergence:
        if (auto* v = std::get_if<VectorField>(&f)) return divergence(*v);
        throw std::invalid_argument("divergence of a scalar field");
    case DiffKind::Curl: {
        const auto* v = std::get_if<VectorField>(&f);
        if (!v) throw std::invalid_argument("curl of a scalar field");
        if (v->grid().d == 2) return curl2(*v);
        return curl3(*v);
    }
    case DiffKind::Laplacian:
        if (auto* s = std::get_if<ScalarField>(&f)) return laplacian(*s);
        return laplacian(std::get<VectorField>(f));
    }
    throw std::logic_error("differentiate: unknown kind");
}

ScalarField inverse_laplacian(const ScalarField& f) {
    const PeriodicGrid& g = f.grid();
    const double rms = f.l2_norm() / std::pow(g.length, g.d / 2.0);
    if (std::abs(f.mean()) > 1e-10 * rms && rms > 0.0)
        throw std::invalid_argument("inverse_laplacian: input has nonzero mean");
    SpectralData s = f.spectrum();
    const double kb = 2.0 * kPi / g.length;
    for_each_mode(g, [&](std::size_t flat, int k0, int k1, int k2) {
        const double kk = kb * kb * (double(k0) * k0 + double(k1) * k1 + double(k2) * k2);
        s.coef[flat] = kk == 0.0 ? 0.0 : s.coef[flat] / (-kk);
    });
    ScalarField out(g);
    out.assign_spectrum(std::move(s));
    return out;
}

VectorField leray_project(const VectorField& v) {
    const PeriodicGrid& g = v.grid();
    const int d = g.d;
    std::vector<SpectralData> s(d);
    for (int a = 0; a < d; ++a) s[a] = v.comp(a).spectrum();
    const double kb = 2.0 * kPi / g.length;
    for_each_mode(g, [&](std::size_t flat, int k0, int k1, int k2) {
        const double kap[3] = {kb * k0, kb * k1, kb * k2};
        const double kk = kap[0] * kap[0] + kap[1] * kap[1] + kap[2] * kap[2];
        if (kk == 0.0) return;
        std::complex<double> kdotv(0.0, 0.0);
        for (int a = 0; a < d; ++a) kdotv += kap[a] * s[a].coef[flat];
        for (int a = 0; a < d; ++a) s[a].coef[flat] -= kap[a] * kdotv / kk;
    });
    VectorField out(g);
    for (int a = 0; a < d; ++a) out.comp(a).assign_spectrum(std::move(s[a]));
    return out;
}

VectorField biot_savart(const ScalarField& omega2d) {
    const PeriodicGrid& g = omega2d.grid();
    if (g.d != 2) throw std::invalid_argument("scalar biot_savart requires d=2");
    const double rms = omega2d.l2_norm() / g.length;
    if (std::abs(omega2d.mean()) > 1e-10 * rms && rms > 0.0)
        throw std::invalid_argument("biot_savart: vorticity has nonzero mean");
    ScalarField psi = inverse_laplacian(omega2d);
    VectorField u(g);
    u.comp(0) = derivative(psi, 1, 1);
    u.comp(0) *= -1.0;
    u.comp(1) = derivative(psi, 0, 1);
    return u;
}

VectorField biot_savart(const VectorField& omega3d) {
    const PeriodicGrid& g = omega3d.grid();
    if (g.d != 3) throw std::invalid_argument("vector biot_savart requires d=3");
    for (int a = 0; a < 3; ++a) {
        const double rms = omega3d.comp(a).l2_norm() / std::pow(g.length, 1.5);
        if (std::abs(omega3d.comp(a).mean()) > 1e-10 * rms && rms > 0.0)
            throw std::invalid_argument("biot_savart: vorticity has nonzero mean");
    }
    if (divergence_residual(omega3d) > 1e-8)
        throw std::invalid_argument("biot_savart: d=3 vorticity not divergence-free");
    VectorField c = curl3(omega3d);
    VectorField u(g);
    for (int a = 0; a < 3; ++a) {
        u.comp(a) = inverse_laplacian(c.comp(a));
        u.comp(a) *= -1.0;
    }
    return u;
}

double divergence_residual(const VectorField& v) {
    const double div = divergence(v).l2_norm();
    double grad = 0.0;
    for (int i = 0; i < v.grid().d; ++i)
        for (int j = 0; j < v.grid().d; ++j) {
            const double n = derivative(v.comp(i), j, 1).l2_norm();
            grad += n * n;
        }
    grad = std::sqrt(grad);
    return grad > 0.0 ? div / grad : div;
}

void dealias(SpectralData& s) {
    const PeriodicGrid& g = s.grid;
    const int kc = g.n / 3;
    for_each_mode(g, [&](std::size_t flat, int k0, int k1, int k2) {
        if (std::abs(k0) > kc || std::abs(k1) > kc || std::abs(k2) > kc)
            s.coef[flat] = 0.0;
    });
}

ScalarField spectral_upsample(const ScalarField& f, int factor) {
    if (factor <= 1) return f;
    const PeriodicGrid& g = f.grid();
    PeriodicGrid fine(g.d, g.n * factor, g.length);
    const SpectralData& src = f.spectrum();
    SpectralData dst;
    dst.grid = fine;
    dst.coef.assign(dst.num_coef(), 0.0);
    const int nh_f = fine.n / 2 + 1;
    for_each_mode(g, [&](std::size_t flat, int k0, int k1, int k2) {
        // Nyquist modes of the coarse grid are dropped (treated as unresolved).
        if (is_nyquist(g, k0, k1, k2)) return;
        const int j0 = k0 >= 0 ? k0 : k0 + fine.n;
        std::size_t out;
        if (g.d == 2) {
            out = static_cast<std::size_t>(j0) * nh_f + k1;
        } else {
            const int j1 = k1 >= 0 ? k1 : k1 + fine.n;
            out = (static_cast<std::size_t>(j0) * fine.n + j1) * nh_f + k2;
        }
        dst.coef[out] = src.coef[flat];
    });
    ScalarField out(fine);
    out.assign_spectrum(std::move(dst));
    return out;
}

ScalarField phase_shift(const ScalarField& f, const std::array<double, 3>& shift) {
    const PeriodicGrid& g = f.grid();
    SpectralData s = f.spectrum();
    const double kb = 2.0 * kPi / g.length;
    for_each_mode(g, [&](std::size_t flat, int k0, int k1, int k2) {
        if (is_nyquist(g, k0, k1, k2)) {
            s.coef[flat] = 0.0;
            return;
        }
        const double phase = -kb * (k0 * shift[0] + k1 * shift[1] + k2 * shift[2]);
        s.coef[flat] *= std::complex<double>(std::cos(phase), std::sin(phase));
    });
    ScalarField out(g);
    out.assign_spectrum(std::move(s));
    return out;
}

VectorField phase_shift(const VectorField& f, const std::array<double, 3>& shift) {
    VectorField out(f.grid());
    for (int a = 0; a < f.grid().d; ++a) out.comp(a) = phase_shift(f.comp(a), shift);
    return out;
}

double high_mode_energy_fraction(const ScalarField& f) {
    const PeriodicGrid& g = f.grid();
    const SpectralData& s = f.spectrum();
    const int kc = g.n / 3;
    double total = 0.0, high = 0.0;
    for_each_mode(g, [&](std::size_t flat, int k0, int k1, int k2) {
        // modes with 0 < j_last < n/2 represent a conjugate pair
        const int klast = g.d == 2 ? k1 : k2;
        const double w = (klast == 0 || klast == g.n / 2) ? 1.0 : 2.0;
        const double e = w * std::norm(s.coef[flat]);
        total += e;
        if (std::abs(k0) > kc || std::abs(k1) > kc || std::abs(k2) > kc) high += e;
    });
    return total > 0.0 ? high / total : 0.0;
}

} // namespace slns
