#include "qslice/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qslice {

namespace {

constexpr double kUpdateTol = 1e-12;
constexpr int kMaxSweeps = 500;
constexpr double kAngleOffset = 0.4;
constexpr double kConjugateClusterTol = 1e-8;
// tight enough never to fuse the distinct loci the structure theorem
// separates, wide enough to catch the ~1e-8 spread of double roots
constexpr double kRootClusterTol = 1e-6;
// Loci closer than this merge into one sphere; multiple roots of the
// symmetrization land around the true locus at ~sqrt(eps) distance and
// only their centroid is accurate.
constexpr double kLocusClusterTol = 1e-6;
constexpr double kRealLocusTol = 1e-7;

std::vector<Complex> durand_kerner(std::vector<double> coeffs) {
    const double lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;
    const std::size_t n = coeffs.size() - 1;

    double max_ratio = 0.0;
    for (std::size_t k = 0; k < n; ++k) max_ratio = std::max(max_ratio, std::fabs(coeffs[k]));
    const double radius = 1.0 + max_ratio;

    std::vector<Complex> z(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double angle = 2.0 * M_PI * static_cast<double>(m) / static_cast<double>(n) + kAngleOffset;
        z[m] = radius * Complex{std::cos(angle), std::sin(angle)};
    }

    const auto p = [&coeffs](const Complex& v) {
        Complex acc = coeffs.back();
        for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * v + coeffs[i];
        return acc;
    };

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double max_update = 0.0;
        double max_abs = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            Complex denom{1.0, 0.0};
            for (std::size_t l = 0; l < n; ++l) {
                if (l == m) continue;
                denom *= z[m] - z[l];
            }
            if (denom == Complex{0.0, 0.0}) {
                z[m] += Complex{1e-8, 1e-8};
                max_update = 1.0;
                continue;
            }
            const Complex delta = p(z[m]) / denom;
            z[m] -= delta;
            max_update = std::max(max_update, std::abs(delta));
            max_abs = std::max(max_abs, std::abs(z[m]));
        }
        if (max_update <= kUpdateTol * (1.0 + max_abs)) break;
    }
    return z;
}

} // namespace

namespace {

std::vector<double> poly_derivative(const std::vector<double>& c) {
    std::vector<double> d;
    if (c.size() <= 1) return d;
    d.resize(c.size() - 1);
    for (std::size_t k = 0; k + 1 < c.size(); ++k) d[k] = static_cast<double>(k + 1) * c[k + 1];
    return d;
}

Complex horner(const std::vector<double>& c, const Complex& z) {
    if (c.empty()) return {};
    Complex acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
}

struct RootCluster {
    Complex center;
    int multiplicity = 1;
};

// A root of multiplicity m sits at the noise floor of the polynomial
// itself (|p| is flat to machine precision within ~eps^(1/m) of it) but
// is a simple root of the (m-1)-th derivative, so polishing there with
// plain Newton recovers full accuracy.
Complex polish_cluster(const std::vector<std::vector<double>>& derivatives, const Complex& start,
                       int multiplicity) {
    const std::size_t level = static_cast<std::size_t>(multiplicity - 1);
    if (level + 1 >= derivatives.size()) return start;
    const std::vector<double>& p = derivatives[level];
    const std::vector<double>& dp = derivatives[level + 1];
    Complex z = start;
    for (int it = 0; it < 40; ++it) {
        const Complex dv = horner(dp, z);
        if (dv == Complex{}) break;
        const Complex delta = horner(p, z) / dv;
        z -= delta;
        if (std::abs(delta) <= 1e-15 * (1.0 + std::abs(z))) break;
    }
    // reject a polish that ran away from its cluster
    if (std::abs(z - start) > 1e-4 * (1.0 + std::abs(start))) return start;
    return z;
}

} // namespace

std::vector<Complex> complex_roots_real_poly(const std::vector<double>& coeffs_in) {
    std::vector<double> coeffs = coeffs_in;
    while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
    if (coeffs.empty()) throw ZeroPolynomialError("root finding on the zero polynomial");
    if (coeffs.size() == 1) return {};

    const std::vector<Complex> raw = durand_kerner(coeffs);

    // group nearby approximations: multiple roots come out of the
    // iteration as a tight cluster around the true value
    std::vector<RootCluster> clusters;
    std::vector<bool> used(raw.size(), false);
    for (std::size_t a = 0; a < raw.size(); ++a) {
        if (used[a]) continue;
        Complex sum = raw[a];
        int count = 1;
        used[a] = true;
        for (std::size_t b = a + 1; b < raw.size(); ++b) {
            if (used[b]) continue;
            if (std::abs(raw[b] - sum / static_cast<double>(count)) <=
                kRootClusterTol * (1.0 + std::abs(raw[b]))) {
                sum += raw[b];
                ++count;
                used[b] = true;
            }
        }
        clusters.push_back({sum / static_cast<double>(count), count});
    }

    std::vector<std::vector<double>> derivatives = {coeffs};
    for (std::size_t m = 0; m + 1 < coeffs.size(); ++m)
        derivatives.push_back(poly_derivative(derivatives.back()));
    for (auto& cl : clusters) cl.center = polish_cluster(derivatives, cl.center, cl.multiplicity);

    // snap near-real clusters onto the axis, then symmetrize the rest
    // into exact conjugate pairs
    std::vector<Complex> out;
    out.reserve(raw.size());
    std::vector<bool> paired(clusters.size(), false);
    for (std::size_t a = 0; a < clusters.size(); ++a) {
        if (paired[a]) continue;
        const Complex z = clusters[a].center;
        if (std::fabs(z.imag()) <= kConjugateClusterTol * (1.0 + std::abs(z))) {
            paired[a] = true;
            for (int m = 0; m < clusters[a].multiplicity; ++m) out.emplace_back(z.real(), 0.0);
            continue;
        }
        std::size_t partner = clusters.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < clusters.size(); ++b) {
            if (b == a || paired[b]) continue;
            const double d = std::abs(std::conj(z) - clusters[b].center);
            if (d < best) {
                best = d;
                partner = b;
            }
        }
        paired[a] = true;
        if (partner == clusters.size()) {
            for (int m = 0; m < clusters[a].multiplicity; ++m) out.emplace_back(z.real(), 0.0);
            continue;
        }
        paired[partner] = true;
        const Complex w = clusters[partner].center;
        const double x = 0.5 * (z.real() + w.real());
        const double y = 0.5 * std::fabs(z.imag() - w.imag());
        const int pairs = (clusters[a].multiplicity + clusters[partner].multiplicity) / 2;
        for (int m = 0; m < pairs; ++m) {
            out.emplace_back(x, y);
            out.emplace_back(x, -y);
        }
    }

    std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

SphereZeroClass classify_on_sphere(const RegPoly& f, const SphereLocus& s) {
    if (s.y <= 0.0)
        throw PreconditionError("sphere classification requires y > 0, got y = " + std::to_string(s.y));
    const auto [b, c] = sphere_pair(f, s, ImaginaryUnit::i());
    const double tol = 1e-9 * (1.0 + f.coeff_scale());
    if (b.norm() <= tol && c.norm() <= tol) return SphereZeroClass::whole();
    if (c.norm() <= tol) return SphereZeroClass::none();
    const Quaternion cand = -(b * c.inverse());
    // unit test is looser than construction tolerance: the candidate
    // compounds two divisions
    if (std::fabs(cand.w) > 1e-7 || std::fabs(cand.norm() - 1.0) > 1e-7) return SphereZeroClass::none();
    return SphereZeroClass::point(ImaginaryUnit::from_direction(cand.x, cand.y, cand.z));
}

namespace {

double poly_value_bound(const RegPoly& f, double r) {
    double bound = 0.0;
    double power = 1.0;
    for (const auto& a : f.coeffs()) {
        bound += a.norm() * power;
        power *= std::max(1.0, r);
    }
    return bound;
}

struct LocusCluster {
    double sum_x = 0.0;
    double sum_y = 0.0;
    int count = 0;

    [[nodiscard]] SphereLocus centroid() const {
        return {sum_x / count, sum_y / count};
    }
};

} // namespace

std::vector<ZeroEntry> find_zeros(const RegPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError("zero set of the zero polynomial is everything");
    if (f.is_constant()) return {};

    const RegPoly fs = symmetrization(f);
    std::vector<double> real_coeffs;
    real_coeffs.reserve(fs.coeffs().size());
    const double reality_tol = 1e-11 * (1.0 + fs.coeff_scale());
    for (const auto& a : fs.coeffs()) {
        if (a.imag_norm() > reality_tol)
            throw InconsistencyError("symmetrization has non-real coefficient of imaginary size " +
                                     std::to_string(a.imag_norm()));
        real_coeffs.push_back(a.w);
    }

    const std::vector<Complex> roots = complex_roots_real_poly(real_coeffs);

    // Fold conjugate pairs onto the upper half plane and cluster by
    // locus; the centroid of each cluster is far more accurate than the
    // individual approximations when the sphere is a multiple root.
    std::vector<LocusCluster> clusters;
    for (const auto& z : roots) {
        const double x = z.real();
        const double y = std::fabs(z.imag());
        const double tol = kLocusClusterTol * (1.0 + std::abs(z));
        bool merged = false;
        for (auto& cl : clusters) {
            const SphereLocus c = cl.centroid();
            if (std::hypot(c.x - x, c.y - y) <= tol) {
                cl.sum_x += x;
                cl.sum_y += y;
                ++cl.count;
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back({x, y, 1});
    }

    std::vector<ZeroEntry> entries;
    for (const auto& cl : clusters) {
        const SphereLocus locus = cl.centroid();
        if (locus.y <= kRealLocusTol * (1.0 + std::fabs(locus.x))) {
            const Quaternion r(locus.x);
            const double residual = eval(f, r).norm();
            if (residual > 1e-9 * (1.0 + poly_value_bound(f, std::fabs(locus.x))))
                throw InconsistencyError("real root of the symmetrization is not a zero of f: residual " +
                                         std::to_string(residual));
            entries.push_back({ZeroKind::RealPoint, r, {locus.x, 0.0}, cl.count});
            continue;
        }
        const SphereZeroClass cls = classify_on_sphere(f, locus);
        switch (cls.kind) {
            case SphereZeroClass::Kind::Whole:
                entries.push_back({ZeroKind::SphericalZero, Quaternion::zero(), locus,
                                   std::max(1, cl.count / 2)});
                break;
            case SphereZeroClass::Kind::Point: {
                const Quaternion p = Quaternion(locus.x) + locus.y * cls.unit->value();
                entries.push_back({ZeroKind::IsolatedPoint, p, locus, std::max(1, cl.count / 2)});
                break;
            }
            case SphereZeroClass::Kind::None:
                throw InconsistencyError(
                    "symmetrization vanishes on the sphere x=" + std::to_string(locus.x) +
                    ", y=" + std::to_string(locus.y) + " but no zero of f was classified there");
        }
    }

    std::sort(entries.begin(), entries.end(), [](const ZeroEntry& a, const ZeroEntry& b) {
        if (a.locus.x != b.locus.x) return a.locus.x < b.locus.x;
        return a.locus.y < b.locus.y;
    });
    return entries;
}

bool product_zero_check(const RegPoly& f, const RegPoly& g, const Quaternion& q, double tol) {
    const Quaternion v = eval(f, q);
    if (v.norm() <= tol * (1.0 + f.coeff_scale())) return true;
    const Quaternion moved = v.inverse() * q * v;
    return eval(g, moved).norm() <= tol * (1.0 + g.coeff_scale());
}

double zero_entry_residual(const RegPoly& f, const ZeroEntry& entry, std::size_t sphere_samples,
                           std::uint64_t seed) {
    if (entry.kind != ZeroKind::SphericalZero) return eval(f, entry.point).norm();
    double worst = 0.0;
    for (const auto& u : sample_sphere_units(sphere_samples, seed)) {
        const Quaternion p = Quaternion(entry.locus.x) + entry.locus.y * u.value();
        worst = std::max(worst, eval(f, p).norm());
    }
    return worst;
}

} // namespace qslice
