#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "qslice/errors.hpp"

namespace qslice {

/// Quaternion q = w + x i + y j + z k over double components.
/// Values are immutable in spirit: every operation returns a new value.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    /// Real quaternion.
    constexpr explicit Quaternion(double real) : w(real) {}

    [[nodiscard]] constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    [[nodiscard]] double norm() const { return std::sqrt(norm_sq()); }
    [[nodiscard]] constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    /// Real part as a scalar.
    [[nodiscard]] constexpr double real() const { return w; }
    /// Norm of the imaginary part.
    [[nodiscard]] double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

    [[nodiscard]] bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }
    [[nodiscard]] bool is_finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    /// Multiplicative inverse conj(q)/|q|^2. Throws ZeroDivideError on q = 0.
    [[nodiscard]] Quaternion inverse() const;

    constexpr bool operator==(const Quaternion&) const = default;

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(const Quaternion& a, double s) {
    return {a.w * s, a.x * s, a.y * s, a.z * s};
}
constexpr Quaternion operator*(double s, const Quaternion& a) { return a * s; }
constexpr Quaternion operator/(const Quaternion& a, double s) {
    return {a.w / s, a.x / s, a.y / s, a.z / s};
}

/// Hamilton product, using ij = k, jk = i, ki = j and anticommutation.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline double abs(const Quaternion& q) { return q.norm(); }

/// Euclidean distance between two quaternions.
inline double dist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

/// A point of the imaginary unit sphere: purely imaginary, unit norm,
/// hence u^2 = -1. Construction validates both invariants to 1e-12.
class ImaginaryUnit {
public:
    static constexpr double kInvariantTol = 1e-12;

    explicit ImaginaryUnit(const Quaternion& u);

    /// Normalizes a nonzero imaginary direction (dx, dy, dz) onto the sphere.
    static ImaginaryUnit from_direction(double dx, double dy, double dz);

    [[nodiscard]] const Quaternion& value() const { return u_; }

    static ImaginaryUnit i() { return ImaginaryUnit(Quaternion::i()); }
    static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::j()); }
    static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::k()); }

private:
    Quaternion u_;
};

/// Slice coordinates of a quaternion: q = x + y * unit with y >= 0.
/// Real quaternions carry no unit (the distinguished real-axis marker);
/// callers must branch on has_unit() before using the unit.
struct SliceCoords {
    double x = 0.0;
    double y = 0.0;
    std::optional<ImaginaryUnit> unit; // nullopt iff y == 0

    [[nodiscard]] bool has_unit() const { return unit.has_value(); }

    /// x + y * unit (or plain x on the real axis).
    [[nodiscard]] Quaternion reconstruct() const {
        if (!unit) return Quaternion(x);
        return Quaternion(x) + y * unit->value();
    }
};

/// Splits q into real part, imaginary magnitude and imaginary direction.
SliceCoords decompose(const Quaternion& q);

/// n points of the imaginary sphere, uniformly distributed, reproducible
/// for a fixed seed across platforms (raw mt19937_64 output, not the
/// distribution adapters).
std::vector<ImaginaryUnit> sample_sphere_units(std::size_t n, std::uint64_t seed);

/// Parses the `w+xi+yj+zk` grammar with optional signs and omitted zero
/// terms, e.g. "1-2i+0.5k". Throws ParseError on malformed input.
Quaternion parse_quaternion(std::string_view text);

/// Prints in the same grammar with shortest round-trip components, so
/// parse_quaternion(to_string(q)) == q bit for bit.
std::string to_string(const Quaternion& q);

/// Shortest decimal form of a double that parses back to the same bits.
std::string format_double(double v);

} // namespace qslice
