#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qslice/regpoly.hpp"

namespace qslice {

using Complex = std::complex<double>;

/// The sphere x + y*S (a real singleton when y = 0).
struct SphereLocus {
    double x = 0.0;
    double y = 0.0; // >= 0
    bool operator==(const SphereLocus&) const = default;
};

/// Distance between loci as points of the closed half plane.
inline double locus_dist(const SphereLocus& a, const SphereLocus& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Distance from a quaternion to the sphere x + y*S.
double dist_to_sphere(const Quaternion& q, const SphereLocus& s);

/// The affine data of f on one sphere: f(x + yI) = b + I*c for every
/// unit I.
struct SpherePair {
    Quaternion b;
    Quaternion c;
};

/// b = [f(x+yK) + f(x-yK)] / 2 and c = K [f(x-yK) - f(x+yK)] / 2 for any
/// probe K; the result does not depend on the probe. y = 0 collapses to
/// b = f(x), c = 0.
SpherePair sphere_pair(const RegPoly& f, const SphereLocus& s, const ImaginaryUnit& probe);

/// An orthonormal splitting frame (I, J) with I perpendicular to J.
class Frame {
public:
    static constexpr double kOrthogonalityTol = 1e-10;

    Frame(const ImaginaryUnit& I, const ImaginaryUnit& J);

    /// Deterministic complement for I: the coordinate unit most
    /// orthogonal to I, Gram-Schmidt projected and normalized.
    static Frame canonical(const ImaginaryUnit& I);

    [[nodiscard]] const ImaginaryUnit& I() const { return I_; }
    [[nodiscard]] const ImaginaryUnit& J() const { return J_; }
    /// Cached product I*J, the fourth basis vector of {1, I, J, IJ}.
    [[nodiscard]] const Quaternion& IJ() const { return IJ_; }

    /// Embeds a slice coordinate z = u + vi as u + v*I.
    [[nodiscard]] Quaternion embed(const Complex& z) const;

    [[nodiscard]] bool same_as(const Frame& other, double tol = 1e-12) const;

private:
    ImaginaryUnit I_;
    ImaginaryUnit J_;
    Quaternion IJ_;
};

/// Polynomial over the slice L_I, coefficients as std::complex against
/// the basis (1, I).
struct SlicePoly {
    std::vector<Complex> coeffs; // ascending degree

    [[nodiscard]] Complex eval(const Complex& z) const;
    /// Coefficientwise conjugation: the polynomial z -> conj(p(conj z)).
    [[nodiscard]] SlicePoly bar() const;
};

SlicePoly operator*(const SlicePoly& a, const SlicePoly& b);
SlicePoly operator+(const SlicePoly& a, const SlicePoly& b);
SlicePoly operator-(const SlicePoly& a, const SlicePoly& b);

/// Splitting of f on L_I: f_I(z) = F(z) + G(z) J with F, G slice
/// polynomials over L_I.
struct SplitPair {
    Frame frame;
    SlicePoly F;
    SlicePoly G;

    /// Reassembles the quaternion polynomial a_n = F_n + G_n J.
    [[nodiscard]] RegPoly to_poly() const;
    /// f_I(z) = F(z) + G(z) J as a quaternion value.
    [[nodiscard]] Quaternion eval_slice(const Complex& z) const;
};

/// Decomposes each coefficient over the orthonormal basis {1, I, J, IJ}.
/// Throws FrameError if I and J are not orthogonal within 1e-10.
SplitPair split(const RegPoly& f, const ImaginaryUnit& I, const ImaginaryUnit& J);
SplitPair split(const RegPoly& f, const Frame& frame);

/// The split form of the regular product:
/// [F H - G bar(K)] + [F K + G bar(H)] J. Frames must match.
SplitPair split_mul(const SplitPair& fs, const SplitPair& gs);

/// The split form of the regular conjugate: bar(F) - G J.
SplitPair split_conjugate(const SplitPair& fs);

/// Extension of slice data to the whole space:
/// f(x+yJ) = [f_I(z) + f_I(zbar)]/2 + J (I/2) [f_I(zbar) - f_I(z)],
/// with z = x + yi. At real q both terms coincide and the value is
/// f_I(x).
Quaternion ext_eval(const std::function<Quaternion(const Complex&)>& f_slice,
                    const ImaginaryUnit& I, const Quaternion& q);
Quaternion ext_eval(const SplitPair& fs, const Quaternion& q);

/// Default tolerance for degenerate-sphere detection: 1e-9 scaled by
/// the coefficient magnitude of f.
double degeneracy_tol(const RegPoly& f);

/// True iff f is constant on the sphere s, i.e. |c(x, y)| <= tol.
/// Requires s.y > 0; real points are excluded from the degenerate set.
bool is_degenerate_sphere(const RegPoly& f, const SphereLocus& s, double tol);
bool is_degenerate_sphere(const RegPoly& f, const SphereLocus& s);

} // namespace qslice
