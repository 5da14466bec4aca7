#pragma once

#include <optional>
#include <vector>

#include "qslice/slicerep.hpp"

namespace qslice {

enum class ZeroKind { IsolatedPoint, SphericalZero, RealPoint };

/// One classified zero: a single non-real point, a whole sphere, or a
/// real point. Multiplicity is recorded from root clustering but carries
/// no interpretation.
struct ZeroEntry {
    ZeroKind kind;
    Quaternion point;  // IsolatedPoint and RealPoint
    SphereLocus locus; // the sphere through the zero (y = 0 for RealPoint)
    int multiplicity = 1;
};

/// Outcome of solving b + I c = 0 on one sphere.
struct SphereZeroClass {
    enum class Kind { Whole, Point, None };
    Kind kind = Kind::None;
    std::optional<ImaginaryUnit> unit; // set for Kind::Point

    static SphereZeroClass whole() { return {Kind::Whole, std::nullopt}; }
    static SphereZeroClass point(ImaginaryUnit u) { return {Kind::Point, std::move(u)}; }
    static SphereZeroClass none() { return {Kind::None, std::nullopt}; }
};

/// All roots in the complex plane of a real-coefficient polynomial
/// (ascending coefficients), with multiplicity, closed under
/// conjugation. Durand-Kerner simultaneous iteration; initial guesses on
/// the circle of radius 1 + max|coeff|/|lead| at angles offset by 0.4,
/// update tolerance 1e-12, at most 500 sweeps. Roots within 1e-8 of the
/// real axis are snapped real; the rest are symmetrized into exact
/// conjugate pairs. Throws ZeroPolynomialError for the zero polynomial;
/// constants yield no roots.
std::vector<Complex> complex_roots_real_poly(const std::vector<double>& coeffs);

/// Zero set of f on the sphere s (s.y > 0): Whole when b and c both
/// vanish, Point(-b c^{-1}) when the candidate passes the unit-sphere
/// test, None otherwise.
SphereZeroClass classify_on_sphere(const RegPoly& f, const SphereLocus& s);

/// Complete zero set of a nonzero polynomial: roots of the real
/// symmetrization are clustered into loci, real loci become RealPoint
/// entries and spheres are classified into SphericalZero or
/// IsolatedPoint. A sphere of the symmetrization that classifies to None
/// signals numerical breakdown (InconsistencyError): the theory
/// guarantees a zero of f on every zero sphere of f^s.
std::vector<ZeroEntry> find_zeros(const RegPoly& f);

/// The zero dichotomy of the regular product, evaluated from the right
/// hand side: f(q) = 0, or f(q) != 0 and g(f(q)^{-1} q f(q)) = 0.
/// Values below tol * (1 + coefficient scale) count as zero.
bool product_zero_check(const RegPoly& f, const RegPoly& g, const Quaternion& q, double tol = 1e-9);

/// |f| at the reported location of an entry (sampled over the sphere for
/// SphericalZero); used to re-verify classifications.
double zero_entry_residual(const RegPoly& f, const ZeroEntry& entry, std::size_t sphere_samples = 20,
                           std::uint64_t seed = 0);

} // namespace qslice
