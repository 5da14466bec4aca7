#include "qslice/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace qslice {

namespace {

constexpr double kExtremumMargin = 1e-12;

bool lex_less(const Quaternion& a, const Quaternion& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

// Aggregation rule shared by all probes: extremal residual first, ties
// broken by lexicographic point order, so concurrent or reordered scans
// would agree.
struct ArgMax {
    double value = -std::numeric_limits<double>::infinity();
    Quaternion point;
    bool any = false;

    void offer(double v, const Quaternion& p) {
        if (!any || v > value || (v == value && lex_less(p, point))) {
            value = v;
            point = p;
            any = true;
        }
    }
};

struct ArgMin {
    double value = std::numeric_limits<double>::infinity();
    Quaternion point;
    bool any = false;

    void offer(double v, const Quaternion& p) {
        if (!any || v < value || (v == value && lex_less(p, point))) {
            value = v;
            point = p;
            any = true;
        }
    }
};

double next_unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void next_gaussian_pair(std::mt19937_64& rng, double& g0, double& g1) {
    double u1 = next_unit_double(rng);
    while (u1 == 0.0) u1 = next_unit_double(rng);
    const double u2 = next_unit_double(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    g0 = r * std::cos(two_pi * u2);
    g1 = r * std::sin(two_pi * u2);
}

Quaternion random_unit_4vector(std::mt19937_64& rng) {
    for (;;) {
        Quaternion g;
        next_gaussian_pair(rng, g.w, g.x);
        next_gaussian_pair(rng, g.y, g.z);
        const double n = g.norm();
        if (n > 1e-12) return g / n;
    }
}

Quaternion random_in_ball(std::mt19937_64& rng, const Quaternion& center, double radius) {
    const Quaternion dir = random_unit_4vector(rng);
    const double u = next_unit_double(rng);
    return center + dir * (radius * std::pow(u, 0.25));
}

void validate_region(const GridSpec& region) {
    if (!(region.radius > 0.0)) throw PreconditionError("grid radius must be positive");
    if (region.points_per_axis < 2) throw PreconditionError("grid needs at least 2 points per axis");
}

// Materialized |f| samples over the region, with enough index structure
// for neighbor scans.
struct GridValues {
    int dim = 4;
    int n = 0;
    double step = 0.0;
    std::vector<Quaternion> points;
    std::vector<double> values;

    [[nodiscard]] std::size_t size() const { return values.size(); }
};

GridValues evaluate_grid(const RegPoly& f, const GridSpec& region) {
    validate_region(region);
    GridValues g;
    g.n = region.points_per_axis;
    g.step = 2.0 * region.radius / (g.n - 1);
    if (region.domain == GridSpec::Domain::Box4D) {
        g.dim = 4;
        g.points.reserve(static_cast<std::size_t>(g.n) * g.n * g.n * g.n);
        const Quaternion base =
            region.center - Quaternion{region.radius, region.radius, region.radius, region.radius};
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c)
                    for (int d = 0; d < g.n; ++d)
                        g.points.push_back(base + Quaternion{a * g.step, b * g.step, c * g.step, d * g.step});
    } else {
        g.dim = 2;
        const ImaginaryUnit I = region.slice_unit.value_or(ImaginaryUnit::i());
        const SliceCoords sc = decompose(region.center);
        g.points.reserve(static_cast<std::size_t>(g.n) * g.n);
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b) {
                const double u = sc.x - region.radius + a * g.step;
                const double v = sc.y - region.radius + b * g.step;
                g.points.push_back(Quaternion(u) + v * I.value());
            }
    }
    g.values.reserve(g.points.size());
    for (const auto& p : g.points) g.values.push_back(eval(f, p).norm());
    return g;
}

// Strict local extrema against the full 3^dim - 1 neighborhood.
template <typename Visit>
void scan_strict_extrema(const GridValues& g, bool maximum, Visit&& visit) {
    const int n = g.n;
    std::array<int, 4> idx{};
    const int dim = g.dim;
    std::array<long, 4> strides{};
    strides[dim - 1] = 1;
    for (int d = dim - 2; d >= 0; --d) strides[d] = strides[d + 1] * n;

    const auto interior_flat = [&](auto&& self, int depth, long flat) -> void {
        if (depth == dim) {
            const double v = g.values[static_cast<std::size_t>(flat)];
            // compare against every neighbor offset in {-1,0,1}^dim \ {0}
            std::array<int, 4> off{};
            bool is_extremum = true;
            const auto walk = [&](auto&& inner, int d) -> void {
                if (!is_extremum) return;
                if (d == dim) {
                    bool all_zero = true;
                    long nflat = flat;
                    for (int t = 0; t < dim; ++t) {
                        if (off[t] != 0) all_zero = false;
                        nflat += off[t] * strides[t];
                    }
                    if (all_zero) return;
                    const double nv = g.values[static_cast<std::size_t>(nflat)];
                    if (maximum ? (v < nv + kExtremumMargin) : (v > nv - kExtremumMargin))
                        is_extremum = false;
                    return;
                }
                for (int o = -1; o <= 1 && is_extremum; ++o) {
                    off[d] = o;
                    inner(inner, d + 1);
                }
            };
            walk(walk, 0);
            if (is_extremum) visit(static_cast<std::size_t>(flat), v);
            return;
        }
        for (int i = 1; i < n - 1; ++i) {
            idx[depth] = i;
            self(self, depth + 1, flat + i * strides[depth]);
        }
    };
    if (n >= 3) interior_flat(interior_flat, 0, 0);
}

struct RefineResult {
    Quaternion point;
    double value = std::numeric_limits<double>::infinity();
};

// Derivative-free simplex descent (Nelder-Mead); points outside the
// membership region score infinity, which keeps the simplex inside.
// Grid refinement alone contracts too fast when the objective valley is
// anisotropic, so the last mile is walked here.
RefineResult simplex_polish(const std::function<double(const Quaternion&)>& objective,
                            const std::function<bool(const Quaternion&)>& member,
                            const Quaternion& start, double scale, double start_value,
                            double stop_below) {
    const auto guarded = [&](const Quaternion& q) {
        return member(q) ? objective(q) : std::numeric_limits<double>::infinity();
    };
    struct Vertex {
        Quaternion p;
        double v;
    };
    const auto shifted = [](Quaternion p, int axis, double d) {
        switch (axis) {
            case 0: p.w += d; break;
            case 1: p.x += d; break;
            case 2: p.y += d; break;
            default: p.z += d; break;
        }
        return p;
    };
    std::array<Vertex, 5> simplex;
    simplex[0] = {start, start_value};
    for (int c = 0; c < 4; ++c) {
        Quaternion p = shifted(start, c, scale);
        if (!member(p)) p = shifted(start, c, -scale);
        simplex[static_cast<std::size_t>(c) + 1] = {p, guarded(p)};
    }
    const auto by_value = [](const Vertex& a, const Vertex& b) {
        if (a.v != b.v) return a.v < b.v;
        return lex_less(a.p, b.p);
    };
    for (int it = 0; it < 600; ++it) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        if (simplex[0].v <= stop_below) break;
        double diameter = 0.0;
        for (std::size_t n = 1; n < simplex.size(); ++n)
            diameter = std::max(diameter, dist(simplex[n].p, simplex[0].p));
        if (diameter <= 1e-13 * (1.0 + simplex[0].p.norm())) break;

        Quaternion centroid = Quaternion::zero();
        for (std::size_t n = 0; n + 1 < simplex.size(); ++n) centroid = centroid + simplex[n].p;
        centroid = centroid * 0.25;
        Vertex& worst = simplex.back();

        const Quaternion reflected = centroid + (centroid - worst.p);
        const double vr = guarded(reflected);
        if (vr < simplex[0].v) {
            const Quaternion expanded = centroid + 2.0 * (centroid - worst.p);
            const double ve = guarded(expanded);
            worst = ve < vr ? Vertex{expanded, ve} : Vertex{reflected, vr};
            continue;
        }
        if (vr < simplex[simplex.size() - 2].v) {
            worst = {reflected, vr};
            continue;
        }
        const Quaternion contracted = centroid + 0.5 * (worst.p - centroid);
        const double vc = guarded(contracted);
        if (vc < worst.v) {
            worst = {contracted, vc};
            continue;
        }
        for (std::size_t n = 1; n < simplex.size(); ++n) {
            simplex[n].p = simplex[0].p + 0.5 * (simplex[n].p - simplex[0].p);
            simplex[n].v = guarded(simplex[n].p);
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
    return {simplex[0].p, simplex[0].v};
}

// Nested grid refinement, no derivatives anywhere: a coarse scan keeps
// the few best well-separated cells, then each is refined by m^4 boxes
// shrunk 5x per level. Multiple starts guard against the coarse grid
// landing in the wrong basin.
RefineResult nested_min(const std::function<double(const Quaternion&)>& objective,
                        const std::function<bool(const Quaternion&)>& member,
                        const Quaternion& start_center, double start_half_width, int initial_grid,
                        int m_per_axis, int max_levels, double stop_below) {
    const double step0 = 2.0 * start_half_width / (initial_grid - 1);
    std::vector<RefineResult> seeds;
    std::size_t members = 0;
    for (int a = 0; a < initial_grid; ++a)
        for (int b = 0; b < initial_grid; ++b)
            for (int c = 0; c < initial_grid; ++c)
                for (int d = 0; d < initial_grid; ++d) {
                    const Quaternion p =
                        start_center + Quaternion{a * step0 - start_half_width, b * step0 - start_half_width,
                                                  c * step0 - start_half_width, d * step0 - start_half_width};
                    if (!member(p)) continue;
                    ++members;
                    const double v = objective(p);
                    bool absorbed = false;
                    for (auto& s : seeds) {
                        if (dist(s.point, p) >= 1.5 * step0) continue;
                        absorbed = true;
                        if (v < s.value || (v == s.value && lex_less(p, s.point))) s = {p, v};
                        break;
                    }
                    if (!absorbed) seeds.push_back({p, v});
                }
    if (members == 0) throw PreconditionError("refinement region contains no grid point");
    std::sort(seeds.begin(), seeds.end(), [](const RefineResult& a, const RefineResult& b) {
        if (a.value != b.value) return a.value < b.value;
        return lex_less(a.point, b.point);
    });
    constexpr std::size_t kStarts = 5;
    if (seeds.size() > kStarts) seeds.resize(kStarts);

    RefineResult best;
    for (const auto& seed : seeds) {
        if (best.value <= stop_below) break;
        Quaternion center = seed.point;
        double local = seed.value;
        if (local < best.value) best = seed;
        // wide enough to cover the seed's whole absorption neighborhood
        // (coarse points within 1.5 steps merge into one seed) plus the
        // half-diagonal of a coarse cell
        double half = 2.5 * step0;
        for (int level = 0; level < max_levels; ++level) {
            const double step = 2.0 * half / (m_per_axis - 1);
            ArgMin arg;
            for (int a = 0; a < m_per_axis; ++a)
                for (int b = 0; b < m_per_axis; ++b)
                    for (int c = 0; c < m_per_axis; ++c)
                        for (int d = 0; d < m_per_axis; ++d) {
                            const Quaternion p = center + Quaternion{a * step - half, b * step - half,
                                                                     c * step - half, d * step - half};
                            if (!member(p)) continue;
                            arg.offer(objective(p), p);
                        }
            if (!arg.any) break;
            if (arg.value < local) {
                local = arg.value;
                center = arg.point;
            }
            if (local < best.value) best = {center, local};
            if (best.value <= stop_below) break;
            half /= 5.0;
        }
        if (best.value > stop_below) {
            const RefineResult polished =
                simplex_polish(objective, member, best.point, std::max(half * 5.0, 1e-9), best.value,
                               stop_below);
            if (polished.value < best.value) best = polished;
        }
    }
    return best;
}

} // namespace

ProbeReport check_regular(const QuatFn& fun, const GridSpec& region, double h, double tol,
                          std::size_t extra_units, std::uint64_t seed) {
    validate_region(region);
    if (!(h > 0.0)) throw PreconditionError("finite-difference step must be positive");

    std::vector<ImaginaryUnit> units = {ImaginaryUnit::i(), ImaginaryUnit::j(), ImaginaryUnit::k()};
    for (auto& u : sample_sphere_units(extra_units, seed)) units.push_back(std::move(u));

    const SliceCoords sc = decompose(region.center);
    const int n = region.points_per_axis;
    const double step = 2.0 * region.radius / (n - 1);

    ArgMax worst;
    for (const auto& I : units) {
        const Quaternion u = I.value();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const double px = sc.x - region.radius + a * step;
                const double py = sc.y - region.radius + b * step;
                const Quaternion p = Quaternion(px) + py * u;
                Quaternion dx, dy;
                try {
                    dx = (fun(Quaternion(px + h) + py * u) - fun(Quaternion(px - h) + py * u)) / (2.0 * h);
                    dy = (fun(Quaternion(px) + (py + h) * u) - fun(Quaternion(px) + (py - h) * u)) / (2.0 * h);
                } catch (const Error& e) {
                    throw PreconditionError("evaluation failed near q = " + to_string(p) + ": " + e.what());
                }
                const double residual = ((dx + u * dy) * 0.5).norm();
                worst.offer(residual, p);
            }
    }
    ProbeReport rep;
    rep.pass = worst.value <= tol;
    rep.witness = worst.point;
    rep.residual = worst.value;
    return rep;
}

ProbeReport check_regular(const RegPoly& f, const GridSpec& region, double h, double tol,
                          std::size_t extra_units, std::uint64_t seed) {
    return check_regular([&f](const Quaternion& q) { return eval(f, q); }, region, h, tol, extra_units,
                         seed);
}

ProbeReport max_modulus_probe(const RegPoly& f, const GridSpec& region) {
    if (f.is_constant()) {
        ProbeReport rep;
        rep.pass = true;
        rep.witness = region.center;
        rep.note = "constant input: modulus principle is vacuous";
        return rep;
    }
    const GridValues g = evaluate_grid(f, region);
    ArgMax violation;
    scan_strict_extrema(g, /*maximum=*/true,
                        [&](std::size_t flat, double v) { violation.offer(v, g.points[flat]); });
    ProbeReport rep;
    if (violation.any) {
        rep.pass = false;
        rep.witness = violation.point;
        rep.residual = violation.value;
        rep.note = "strict interior local maximum of |f|";
        return rep;
    }
    ArgMax global;
    for (std::size_t s = 0; s < g.size(); ++s) global.offer(g.values[s], g.points[s]);
    rep.pass = true;
    rep.witness = global.point;
    rep.residual = global.value;
    rep.note = "no strict interior maximum; grid maximum on the boundary";
    return rep;
}

ProbeReport min_modulus_probe(const RegPoly& f, const GridSpec& region, double zero_tol) {
    if (f.is_constant()) {
        ProbeReport rep;
        rep.pass = true;
        rep.witness = region.center;
        rep.note = "constant input: modulus principle is vacuous";
        return rep;
    }
    const GridValues g = evaluate_grid(f, region);
    const std::vector<ZeroEntry> zeros = find_zeros(f);
    const double cell = g.step * std::sqrt(static_cast<double>(g.dim));

    // proximity is measured to the sphere through the zero: |f| forms a
    // valley along the whole symmetric set carrying a zero (f^s vanishes
    // there), so a coarse grid pins its minima anywhere along that
    // sphere, not necessarily beside the zero point itself
    const auto dist_to_zero_set = [&zeros](const Quaternion& p) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& z : zeros) best = std::min(best, dist_to_sphere(p, z.locus));
        return best;
    };

    ArgMax violation;
    ArgMin deepest;
    std::size_t minima = 0;
    scan_strict_extrema(g, /*maximum=*/false, [&](std::size_t flat, double v) {
        ++minima;
        deepest.offer(v, g.points[flat]);
        if (v <= zero_tol) return;
        const double d = dist_to_zero_set(g.points[flat]);
        if (d <= cell) return;
        violation.offer(d, g.points[flat]);
    });

    ProbeReport rep;
    if (violation.any) {
        rep.pass = false;
        rep.witness = violation.point;
        rep.residual = violation.value;
        rep.note = "interior minimum of |f| away from every zero";
        return rep;
    }
    rep.pass = true;
    if (deepest.any) {
        rep.witness = deepest.point;
        rep.residual = deepest.value;
        rep.note = std::to_string(minima) + " interior minimum(s), all explained by zeros";
    } else {
        ArgMin global;
        for (std::size_t s = 0; s < g.size(); ++s) global.offer(g.values[s], g.points[s]);
        rep.witness = global.point;
        rep.residual = global.value;
        rep.note = "no strict interior minimum; grid minimum on the boundary";
    }
    return rep;
}

namespace {

ProbeReport open_mapping_core(const QuatFn& fun, const Quaternion& v0,
                              const std::function<bool(const Quaternion&)>& member,
                              const std::vector<Quaternion>& boundary, const Quaternion& search_center,
                              double search_half_width, int initial_grid, int targets,
                              std::uint64_t seed, const OpenMappingOptions& opt) {
    ArgMin spread;
    for (const auto& q : boundary) spread.offer(dist(fun(q), v0), q);
    ProbeReport rep;
    if (!spread.any || spread.value <= 1e-9 * (1.0 + v0.norm())) {
        rep.pass = false;
        rep.witness = spread.any ? spread.point : search_center;
        rep.residual = spread.any ? spread.value : 0.0;
        rep.note = "boundary image spread vanished; probe cannot separate targets";
        return rep;
    }
    const double eps = opt.target_radius_frac * spread.value;

    std::mt19937_64 rng(seed);
    ArgMax worst;
    for (int t = 0; t < targets; ++t) {
        const Quaternion p = random_in_ball(rng, v0, eps);
        const RefineResult found = nested_min([&fun, &p](const Quaternion& q) { return dist(fun(q), p); },
                                              member, search_center, search_half_width, initial_grid,
                                              opt.grid_per_axis, opt.max_levels, 0.3 * opt.target_tol);
        worst.offer(found.value, found.point);
    }
    rep.pass = worst.value <= opt.target_tol;
    rep.witness = worst.point;
    rep.residual = worst.value;
    rep.note = "boundary spread " + format_double(spread.value) + ", target radius " + format_double(eps);
    return rep;
}

} // namespace

ProbeReport open_mapping_probe(const QuatFn& fun, const Quaternion& q0, double r, int targets,
                               std::uint64_t seed, const OpenMappingOptions& opt) {
    if (!(r > 0.0)) throw PreconditionError("open-mapping radius must be positive");
    if (targets < 1) throw PreconditionError("open-mapping probe needs at least one target");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Quaternion> boundary;
    boundary.reserve(static_cast<std::size_t>(opt.boundary_samples));
    for (int s = 0; s < opt.boundary_samples; ++s) boundary.push_back(q0 + random_unit_4vector(rng) * r);
    const auto member = [&q0, r](const Quaternion& q) { return dist(q, q0) <= r; };
    return open_mapping_core(fun, fun(q0), member, boundary, q0, r, opt.grid_per_axis, targets, seed,
                             opt);
}

ProbeReport open_mapping_probe(const RegPoly& f, const Quaternion& q0, double r, int targets,
                               std::uint64_t seed, const OpenMappingOptions& opt) {
    // reject starting points on or within 1e-3 of a degenerate sphere;
    // exact ring offsets so points with y = 0 stay on the real axis,
    // where degeneracy is not defined
    const SliceCoords sc = decompose(q0);
    constexpr double ring = 1e-3;
    const double diag = std::sqrt(0.5);
    const double offsets[8][2] = {{1, 0},     {diag, diag},   {0, 1},  {-diag, diag},
                                  {-1, 0},    {-diag, -diag}, {0, -1}, {diag, -diag}};
    std::vector<SphereLocus> candidates;
    if (sc.y > 0.0) candidates.push_back({sc.x, sc.y});
    for (const auto& off : offsets) {
        const SphereLocus s{sc.x + ring * off[0], sc.y + ring * off[1]};
        if (s.y > 0.0) candidates.push_back(s);
    }
    for (const auto& s : candidates)
        if (is_degenerate_sphere(f, s))
            throw PreconditionError("q0 = " + to_string(q0) + " is within 1e-3 of a degenerate sphere (x=" +
                                    format_double(s.x) + ", y=" + format_double(s.y) + ")");
    return open_mapping_probe([&f](const Quaternion& q) { return eval(f, q); }, q0, r, targets, seed, opt);
}

ProbeReport open_mapping_probe_tube(const RegPoly& f, const SphereLocus& s, double r, int targets,
                                    std::uint64_t seed, const OpenMappingOptions& opt) {
    if (!(s.y > r)) throw PreconditionError("tube probe requires s.y > r to stay off the real axis");
    const auto member = [&s, r](const Quaternion& q) {
        return std::hypot(q.w - s.x, q.imag_norm() - s.y) <= r;
    };
    // boundary of the tube: the locus ring at distance r, swept over units
    std::vector<Quaternion> boundary;
    const auto units = sample_sphere_units(24, seed ^ 0x6a09e667f3bcc908ULL);
    constexpr int ring_samples = 16;
    for (int a = 0; a < ring_samples; ++a) {
        const double angle = 2.0 * M_PI * a / ring_samples;
        const double x = s.x + r * std::cos(angle);
        const double y = s.y + r * std::sin(angle);
        for (const auto& u : units) boundary.push_back(Quaternion(x) + y * u.value());
    }
    const Quaternion q0 = Quaternion(s.x) + s.y * Quaternion::i();
    const Quaternion search_center(s.x);
    const double half_width = s.y + r;
    // the curved shell is sampled coarsely, so shrink the target radius
    // by an extra 2/3 against the overestimated spread, and scan the
    // large bounding box densely before refining
    OpenMappingOptions tube_opt = opt;
    tube_opt.target_radius_frac *= 2.0 / 3.0;
    const int initial_grid = std::max(21, opt.grid_per_axis);
    return open_mapping_core([&f](const Quaternion& q) { return eval(f, q); }, eval(f, q0), member,
                             boundary, search_center, half_width, initial_grid, targets, seed,
                             tube_opt);
}

ProbeReport counterexample_probe(std::uint64_t seed) {
    const RationalExpr expr =
        RationalExpr::const_shift(RationalExpr::reciprocal(RegPoly::monomial(2)), Quaternion::one());
    const auto fun = [&expr](const Quaternion& q) { return rational_eval(expr, q); };

    const Quaternion center = Quaternion::i();
    const double radius = 0.5;
    const Quaternion target = 0.1 * Quaternion::j();

    ProbeReport rep;
    const double at_i = fun(center).norm();
    if (at_i > 1e-12) {
        rep.pass = false;
        rep.witness = center;
        rep.residual = at_i;
        rep.note = "f(i) did not vanish";
        return rep;
    }

    // deterministic odd grid over the open ball: image points that come
    // within 1e-6 of the slice L_j must be within 1e-6 of the real axis
    constexpr int n = 21;
    const double step = 2.0 * radius / (n - 1);
    std::size_t near_slice = 0;
    std::size_t near_slice_violations = 0;
    ArgMin closest;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    const Quaternion q = center + Quaternion{a * step - radius, b * step - radius,
                                                             c * step - radius, d * step - radius};
                    if (dist(q, center) >= radius) continue;
                    const Quaternion v = fun(q);
                    if (std::hypot(v.x, v.z) <= 1e-6) {
                        ++near_slice;
                        if (v.imag_norm() > 1e-6) ++near_slice_violations;
                    }
                    closest.offer(dist(v, target), q);
                }

    // separation bound: refine the grid minimum, then challenge it with
    // seeded random samples of the ball
    const auto member = [&center, radius](const Quaternion& q) { return dist(q, center) < radius; };
    const RefineResult refined =
        nested_min([&fun, &target](const Quaternion& q) { return dist(fun(q), target); }, member,
                   center, radius, 21, 11, 8, 0.0);
    std::mt19937_64 rng(seed);
    ArgMin sampled;
    for (int t = 0; t < 20000; ++t) {
        const Quaternion q = random_in_ball(rng, center, radius * 0.999999);
        sampled.offer(dist(fun(q), target), q);
    }

    double separation = std::min(closest.value, refined.value);
    Quaternion witness = refined.value <= closest.value ? refined.point : closest.point;
    if (sampled.value < separation) {
        separation = sampled.value;
        witness = sampled.point;
    }

    rep.pass = near_slice_violations == 0 && near_slice > 0 && separation > 0.0;
    rep.witness = witness;
    rep.residual = separation;
    rep.note = "f(i) = 0; " + std::to_string(near_slice) + " image sample(s) near L_j, " +
               std::to_string(near_slice_violations) + " off the real axis; separation from 0.1j = " +
               format_double(separation);
    return rep;
}

} // namespace qslice
