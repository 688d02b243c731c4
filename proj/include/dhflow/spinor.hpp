#pragma once

#include <complex>

#include <Eigen/Core>

#include "dhflow/grid.hpp"

namespace dhflow {

using Matrix2cd = Eigen::Matrix2cd;
using Vector2cd = Eigen::Vector2cd;

/// Clifford multiplication on rank-2 spinor values, c_a = i * sigma_a, together
/// with the quaternionic structure j(v) = sigma_2 * conj(v). These satisfy
///   c_a c_b + c_b c_a = -2 delta_ab,   j^2 = -1,   j(i v) = -i j(v),
///   j o c_a = c_a o j.
struct CliffordBasis {
    static const Matrix2cd& c(int a); // a in {1, 2}

    static Vector2cd j(const Vector2cd& v);

    /// Max defect over all defining matrix identities; tests pin it near 0.
    static double relation_defect();
};

/// Quaternion h = w + x i + y j + z k acting on spinor values from the right:
/// v.i = i v (complex scalar), v.j = j(v), v.k = j(i v).
struct Quaternion {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    Quaternion inverse() const;

    static Quaternion unit(double w, double x, double y, double z);

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
};

Vector2cd quaternion_act_value(const Vector2cd& v, const Quaternion& h);

/// Grid-sampled section of the plain spinor bundle: one rank-2 complex value
/// per grid point. Component s occupies the contiguous block [s*n^2, (s+1)*n^2).
class PlainSpinorField {
public:
    PlainSpinorField(SpinTorusGrid grid, VectorXcd values);
    static PlainSpinorField zero(const SpinTorusGrid& grid);

    const SpinTorusGrid& grid() const { return grid_; }
    const VectorXcd& values() const { return values_; }
    VectorXcd& values() { return values_; }

    Complex& at(int comp, int point) { return values_[comp * grid_.points() + point]; }
    Complex at(int comp, int point) const { return values_[comp * grid_.points() + point]; }

    Vector2cd value(int point) const {
        return {values_[point], values_[grid_.points() + point]};
    }
    void set_value(int point, const Vector2cd& v) {
        values_[point] = v[0];
        values_[grid_.points() + point] = v[1];
    }

    PlainSpinorField& operator+=(const PlainSpinorField& o);
    PlainSpinorField& operator-=(const PlainSpinorField& o);
    PlainSpinorField& operator*=(Complex a);
    friend PlainSpinorField operator+(PlainSpinorField a, const PlainSpinorField& b) { return a += b; }
    friend PlainSpinorField operator-(PlainSpinorField a, const PlainSpinorField& b) { return a -= b; }
    friend PlainSpinorField operator*(Complex a, PlainSpinorField f) { return f *= a; }

private:
    SpinTorusGrid grid_;
    VectorXcd values_; // size 2 * n^2
};

} // namespace dhflow
