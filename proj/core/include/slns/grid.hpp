#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace slns {

/// Uniform N^d collocation lattice on the periodic box [0,L)^d, d = 2 or 3.
/// N must be a power of two and at least 8 so that index wrapping can use a
/// bit mask and spectral derivatives stay resolvable.
struct PeriodicGrid {
    int d = 2;
    int n = 32;
    double length = 1.0;

    PeriodicGrid() = default;
    PeriodicGrid(int dim, int points, double box_length)
        : d(dim), n(points), length(box_length) {
        if (d != 2 && d != 3)
            throw std::invalid_argument("PeriodicGrid: d must be 2 or 3");
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("PeriodicGrid: N must be a power of two >= 8");
        if (!(length > 0.0))
            throw std::invalid_argument("PeriodicGrid: L must be positive");
    }

    double spacing() const { return length / n; }

    std::size_t num_nodes() const {
        std::size_t p = 1;
        for (int a = 0; a < d; ++a) p *= static_cast<std::size_t>(n);
        return p;
    }

    /// Row-major flattening, axis 0 slowest.
    std::size_t index(const std::array<int, 3>& i) const {
        std::size_t idx = static_cast<std::size_t>(i[0]);
        for (int a = 1; a < d; ++a) idx = idx * n + static_cast<std::size_t>(i[a]);
        return idx;
    }

    /// Physical coordinates of a node from its flat index.
    std::array<double, 3> node(std::size_t flat) const {
        std::array<double, 3> x{0.0, 0.0, 0.0};
        const double h = spacing();
        for (int a = d - 1; a >= 0; --a) {
            x[a] = static_cast<double>(flat % n) * h;
            flat /= n;
        }
        return x;
    }

    /// Integer wavenumber of spectral index j along a full axis: j -> j or j-n.
    int wavenumber(int j) const { return j <= n / 2 ? j : j - n; }

    bool operator==(const PeriodicGrid& o) const {
        return d == o.d && n == o.n && length == o.length;
    }
};

} // namespace slns
