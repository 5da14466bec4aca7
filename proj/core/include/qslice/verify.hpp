#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "qslice/rational.hpp"
#include "qslice/zeros.hpp"

namespace qslice {

using QuatFn = std::function<Quaternion(const Quaternion&)>;

/// Sampling region for the probes: a 4D box of the given radius around
/// the center, or a 2D rectangle in slice coordinates on one complex
/// line.
struct GridSpec {
    Quaternion center;
    double radius = 1.0;
    int points_per_axis = 15;

    enum class Domain { Box4D, Slice2D };
    Domain domain = Domain::Box4D;
    std::optional<ImaginaryUnit> slice_unit; // Slice2D only; defaults to i
};

struct ProbeReport {
    bool pass = false;
    Quaternion witness; // the point violating or certifying
    double residual = 0.0;
    std::string note;
};

/// Finite-difference test of slice regularity: on sampled units I and a
/// grid of slice points, the central-difference approximation of
/// (d/dx + I d/dy) f_I / 2 must stay below tol. The coordinate units i,
/// j, k are always probed in addition to `extra_units` sampled ones.
/// Residuals scale as O(h^2) for regular inputs.
ProbeReport check_regular(const QuatFn& fun, const GridSpec& region, double h, double tol,
                          std::size_t extra_units = 12, std::uint64_t seed = 1);
ProbeReport check_regular(const RegPoly& f, const GridSpec& region, double h = 1e-5,
                          double tol = 1e-5, std::size_t extra_units = 12, std::uint64_t seed = 1);

/// Scans the grid for a strict interior local maximum of |f| (margin
/// 1e-12 over every neighbor). Non-constant regular functions must not
/// have one; constants report pass with a note.
ProbeReport max_modulus_probe(const RegPoly& f, const GridSpec& region);

/// Scans for strict interior local minima of |f|; each must either sit
/// below zero_tol or lie within one grid cell of a zero from
/// find_zeros.
ProbeReport min_modulus_probe(const RegPoly& f, const GridSpec& region, double zero_tol = 1e-6);

struct OpenMappingOptions {
    int boundary_samples = 256;
    int grid_per_axis = 11;
    int max_levels = 12;       // nested 5x refinements, stops early on success
    double target_tol = 1e-4;  // |fun(q) - p| required of the found preimage
    double target_radius_frac = 0.5; // target offsets as a fraction of the boundary spread
};

/// Openness probe at q0: targets are sampled within a fraction of the
/// observed boundary image spread around fun(q0) and each must be
/// attained inside B(q0, r) by nested grid refinement. The polynomial
/// overload first rejects q0 within 1e-3 of a degenerate sphere.
ProbeReport open_mapping_probe(const QuatFn& fun, const Quaternion& q0, double r, int targets,
                               std::uint64_t seed = 2, const OpenMappingOptions& opt = {});
ProbeReport open_mapping_probe(const RegPoly& f, const Quaternion& q0, double r, int targets,
                               std::uint64_t seed = 2, const OpenMappingOptions& opt = {});

/// Same probe over the symmetric tube of radius r around the sphere
/// x + yS (requires s.y > r so the tube stays off the real axis).
ProbeReport open_mapping_probe_tube(const RegPoly& f, const SphereLocus& s, double r, int targets,
                                    std::uint64_t seed = 2, const OpenMappingOptions& opt = {});

/// Non-openness evidence for f(q) = q^{-2} + 1. Verifies f(i) = 0,
/// verifies that ball samples mapping near the slice L_j are in fact
/// near the real axis, and records the separation between f(B(i, 1/2))
/// and the target 0.1 j in the residual field. The separation is
/// derived by nested grid refinement plus seeded ball samples and is
/// asserted strictly positive.
ProbeReport counterexample_probe(std::uint64_t seed = 3);

} // namespace qslice
