#include "qslice/quaternion.hpp"

#include <cctype>
#include <charconv>
#include <random>

namespace qslice {

Quaternion Quaternion::inverse() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw ZeroDivideError("cannot invert the zero quaternion");
    return conj() / n2;
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& u) : u_(u) {
    if (std::fabs(u.w) > kInvariantTol)
        throw PreconditionError("imaginary unit has nonzero real part " + std::to_string(u.w));
    if (std::fabs(u.norm() - 1.0) > kInvariantTol)
        throw PreconditionError("imaginary unit has norm " + std::to_string(u.norm()));
    u_.w = 0.0;
}

ImaginaryUnit ImaginaryUnit::from_direction(double dx, double dy, double dz) {
    const double n = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (n == 0.0) throw PreconditionError("zero imaginary direction");
    return ImaginaryUnit(Quaternion{0.0, dx / n, dy / n, dz / n});
}

SliceCoords decompose(const Quaternion& q) {
    SliceCoords sc;
    sc.x = q.w;
    const double y = q.imag_norm();
    if (y == 0.0) {
        sc.y = 0.0;
        return sc; // real-axis marker
    }
    sc.y = y;
    sc.unit = ImaginaryUnit(Quaternion{0.0, q.x / y, q.y / y, q.z / y});
    return sc;
}

namespace {

// mt19937_64 output mapped to [0, 1); bit-identical on every platform,
// unlike std::uniform_real_distribution.
double next_unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller pair from two uniform draws.
void next_gaussian_pair(std::mt19937_64& rng, double& g0, double& g1) {
    double u1 = next_unit_double(rng);
    while (u1 == 0.0) u1 = next_unit_double(rng);
    const double u2 = next_unit_double(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    g0 = r * std::cos(two_pi * u2);
    g1 = r * std::sin(two_pi * u2);
}

} // namespace

std::vector<ImaginaryUnit> sample_sphere_units(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ImaginaryUnit> units;
    units.reserve(n);
    while (units.size() < n) {
        double g[4];
        next_gaussian_pair(rng, g[0], g[1]);
        next_gaussian_pair(rng, g[2], g[3]);
        const double norm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
        if (norm < 1e-12) continue;
        units.push_back(ImaginaryUnit::from_direction(g[0], g[1], g[2]));
    }
    return units;
}

std::string format_double(double v) {
    if (v == 0.0) return "0"; // canonicalize -0.0, which JSON parsers read back as +0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

bool parse_number(std::string_view text, std::size_t& pos, double& out) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr == first) return false;
    pos += static_cast<std::size_t>(res.ptr - first);
    return true;
}

} // namespace

Quaternion parse_quaternion(std::string_view text) {
    // strip surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty quaternion literal");

    Quaternion q;
    std::size_t pos = 0;
    while (pos < text.size()) {
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1.0 : 1.0;
            ++pos;
            if (pos >= text.size())
                throw ParseError("dangling sign in quaternion literal '" + std::string(text) + "'");
        }
        if (text[pos] == '+' || text[pos] == '-')
            throw ParseError("doubled sign in quaternion literal '" + std::string(text) + "'");
        double mag = 1.0;
        const bool had_number = parse_number(text, pos, mag);
        double* slot = &q.w;
        bool had_unit = false;
        if (pos < text.size()) {
            switch (text[pos]) {
                case 'i': slot = &q.x; had_unit = true; ++pos; break;
                case 'j': slot = &q.y; had_unit = true; ++pos; break;
                case 'k': slot = &q.z; had_unit = true; ++pos; break;
                default: break;
            }
        }
        if (!had_number && !had_unit)
            throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                             "' in quaternion literal '" + std::string(text) + "'");
        *slot += sign * mag;
    }
    return q;
}

std::string to_string(const Quaternion& q) {
    if (q.is_zero()) return "0";
    std::string out;
    const auto append_term = [&out](double v, const char* suffix) {
        if (v == 0.0) return;
        if (!out.empty() && !(v < 0.0) && !std::signbit(v)) out += '+';
        out += format_double(v);
        out += suffix;
    };
    append_term(q.w, "");
    append_term(q.x, "i");
    append_term(q.y, "j");
    append_term(q.z, "k");
    return out;
}

} // namespace qslice
