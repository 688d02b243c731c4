#pragma once

#include <array>
#include <cmath>
#include <utility>

#include <Eigen/Core>

#include "dhflow/errors.hpp"

namespace dhflow {

/// Spin structure on the 2-torus: a half-integer Fourier-mode shift per axis.
/// (0,0) is the fully periodic trivialization, (1/2,1/2) the fully antiperiodic one.
struct SpinStructure {
    double d1 = 0.0;
    double d2 = 0.0;

    bool operator==(const SpinStructure&) const = default;
};

/// Uniform collocation grid on the flat square 2-torus with a chosen spin
/// structure. Owns the mode layout: map/scalar fields live on integer modes k,
/// spinor fields on shifted modes k + delta, with k in [-n/2, n/2) per axis
/// (-n/2 included, +n/2 excluded).
class SpinTorusGrid {
public:
    SpinTorusGrid(int n, SpinStructure delta, double side = 2.0 * M_PI);

    int n() const { return n_; }
    int points() const { return n_ * n_; }
    double side() const { return side_; }
    double cell_measure() const { return cell_; }
    double volume() const { return side_ * side_; }
    const SpinStructure& spin_structure() const { return delta_; }

    /// Signed integer mode for FFT slot m in [0, n).
    int signed_mode(int m) const { return m < n_ / 2 ? m : m - n_; }

    /// Shifted spinor mode (k1 + d1, k2 + d2) for FFT slots (m1, m2).
    Eigen::Vector2d spinor_mode(int m1, int m2) const {
        return {signed_mode(m1) + delta_.d1, signed_mode(m2) + delta_.d2};
    }

    Eigen::Vector2i map_mode(int m1, int m2) const {
        return {signed_mode(m1), signed_mode(m2)};
    }

    /// Coordinate of grid node index along one axis.
    double coord(int i) const { return side_ * static_cast<double>(i) / n_; }

    int index(int i, int j) const { return i * n_ + j; }

    bool operator==(const SpinTorusGrid& o) const {
        return n_ == o.n_ && delta_ == o.delta_ && side_ == o.side_;
    }
    bool operator!=(const SpinTorusGrid& o) const { return !(*this == o); }

private:
    int n_;
    SpinStructure delta_;
    double side_;
    double cell_;
};

/// Validated construction: n even and >= 8, shifts in {0, 1/2}.
SpinTorusGrid make_grid(int n, SpinStructure delta, double side = 2.0 * M_PI);

inline void require_same_grid(const SpinTorusGrid& a, const SpinTorusGrid& b, const char* where) {
    if (a != b) throw GridMismatch(where);
}

} // namespace dhflow
