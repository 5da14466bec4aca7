#include "qslice/slicerep.hpp"

#include <algorithm>
#include <array>

namespace qslice {

double dist_to_sphere(const Quaternion& q, const SphereLocus& s) {
    return std::hypot(q.w - s.x, q.imag_norm() - s.y);
}

SpherePair sphere_pair(const RegPoly& f, const SphereLocus& s, const ImaginaryUnit& probe) {
    if (s.y == 0.0) return {eval(f, Quaternion(s.x)), Quaternion::zero()};
    const Quaternion K = probe.value();
    const Quaternion plus = eval(f, Quaternion(s.x) + s.y * K);
    const Quaternion minus = eval(f, Quaternion(s.x) - s.y * K);
    return {(plus + minus) * 0.5, K * (minus - plus) * 0.5};
}

namespace {

double imag_dot(const Quaternion& a, const Quaternion& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

} // namespace

Frame::Frame(const ImaginaryUnit& I, const ImaginaryUnit& J) : I_(I), J_(J), IJ_(I.value() * J.value()) {
    if (std::fabs(imag_dot(I.value(), J.value())) > kOrthogonalityTol)
        throw FrameError("splitting frame is not orthogonal: <I,J> = " +
                         std::to_string(imag_dot(I.value(), J.value())));
}

Frame Frame::canonical(const ImaginaryUnit& I) {
    const std::array<Quaternion, 3> axes = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    std::size_t best = 0;
    double best_overlap = std::fabs(imag_dot(I.value(), axes[0]));
    for (std::size_t a = 1; a < axes.size(); ++a) {
        const double overlap = std::fabs(imag_dot(I.value(), axes[a]));
        if (overlap < best_overlap) {
            best_overlap = overlap;
            best = a;
        }
    }
    const Quaternion e = axes[best];
    const double d = imag_dot(e, I.value());
    const Quaternion raw = e - d * I.value();
    return Frame(I, ImaginaryUnit::from_direction(raw.x, raw.y, raw.z));
}

Quaternion Frame::embed(const Complex& z) const {
    return Quaternion(z.real()) + z.imag() * I_.value();
}

bool Frame::same_as(const Frame& other, double tol) const {
    return dist(I_.value(), other.I_.value()) <= tol && dist(J_.value(), other.J_.value()) <= tol;
}

Complex SlicePoly::eval(const Complex& z) const {
    if (coeffs.empty()) return {0.0, 0.0};
    Complex acc = coeffs.back();
    for (std::size_t n = coeffs.size() - 1; n-- > 0;) acc = z * acc + coeffs[n];
    return acc;
}

SlicePoly SlicePoly::bar() const {
    SlicePoly out;
    out.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) out.coeffs.push_back(std::conj(c));
    return out;
}

SlicePoly operator*(const SlicePoly& a, const SlicePoly& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    SlicePoly out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Complex{});
    for (std::size_t n = 0; n < a.coeffs.size(); ++n)
        for (std::size_t m = 0; m < b.coeffs.size(); ++m) out.coeffs[n + m] += a.coeffs[n] * b.coeffs[m];
    return out;
}

SlicePoly operator+(const SlicePoly& a, const SlicePoly& b) {
    SlicePoly out;
    out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), Complex{});
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
        if (n < a.coeffs.size()) out.coeffs[n] += a.coeffs[n];
        if (n < b.coeffs.size()) out.coeffs[n] += b.coeffs[n];
    }
    return out;
}

SlicePoly operator-(const SlicePoly& a, const SlicePoly& b) {
    SlicePoly out;
    out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), Complex{});
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
        if (n < a.coeffs.size()) out.coeffs[n] += a.coeffs[n];
        if (n < b.coeffs.size()) out.coeffs[n] -= b.coeffs[n];
    }
    return out;
}

RegPoly SplitPair::to_poly() const {
    const std::size_t len = std::max(F.coeffs.size(), G.coeffs.size());
    std::vector<Quaternion> c(len);
    for (std::size_t n = 0; n < len; ++n) {
        Quaternion a = Quaternion::zero();
        if (n < F.coeffs.size()) a = a + frame.embed(F.coeffs[n]);
        if (n < G.coeffs.size()) a = a + frame.embed(G.coeffs[n]) * frame.J().value();
        c[n] = a;
    }
    return RegPoly(std::move(c));
}

Quaternion SplitPair::eval_slice(const Complex& z) const {
    return frame.embed(F.eval(z)) + frame.embed(G.eval(z)) * frame.J().value();
}

SplitPair split(const RegPoly& f, const Frame& frame) {
    SplitPair out{frame, {}, {}};
    out.F.coeffs.reserve(f.coeffs().size());
    out.G.coeffs.reserve(f.coeffs().size());
    // a = t + u I + v J + w IJ over the orthonormal basis {1, I, J, IJ},
    // so alpha = t + u I and beta = v + w I.
    for (const auto& a : f.coeffs()) {
        const double t = a.w;
        const double u = imag_dot(a, frame.I().value());
        const double v = imag_dot(a, frame.J().value());
        const double w = imag_dot(a, frame.IJ());
        out.F.coeffs.push_back({t, u});
        out.G.coeffs.push_back({v, w});
    }
    return out;
}

SplitPair split(const RegPoly& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
    return split(f, Frame(I, J));
}

SplitPair split_mul(const SplitPair& fs, const SplitPair& gs) {
    if (!fs.frame.same_as(gs.frame)) throw FrameError("split pairs use different frames");
    const SlicePoly& F = fs.F;
    const SlicePoly& G = fs.G;
    const SlicePoly& H = gs.F;
    const SlicePoly& K = gs.G;
    return {fs.frame, F * H - G * K.bar(), F * K + G * H.bar()};
}

SplitPair split_conjugate(const SplitPair& fs) {
    SplitPair out{fs.frame, fs.F.bar(), {}};
    out.G.coeffs.reserve(fs.G.coeffs.size());
    for (const auto& c : fs.G.coeffs) out.G.coeffs.push_back(-c);
    return out;
}

Quaternion ext_eval(const std::function<Quaternion(const Complex&)>& f_slice,
                    const ImaginaryUnit& I, const Quaternion& q) {
    const SliceCoords sc = decompose(q);
    const Complex z{sc.x, sc.y};
    const Quaternion plus = f_slice(z);
    const Quaternion minus = f_slice(std::conj(z));
    const Quaternion even = (plus + minus) * 0.5;
    if (!sc.has_unit()) return even; // both terms coincide at real q
    return even + sc.unit->value() * (I.value() * 0.5) * (minus - plus);
}

Quaternion ext_eval(const SplitPair& fs, const Quaternion& q) {
    return ext_eval([&fs](const Complex& z) { return fs.eval_slice(z); }, fs.frame.I(), q);
}

double degeneracy_tol(const RegPoly& f) { return 1e-9 * (1.0 + f.coeff_scale()); }

bool is_degenerate_sphere(const RegPoly& f, const SphereLocus& s, double tol) {
    if (s.y <= 0.0)
        throw PreconditionError("degenerate-sphere test requires y > 0, got y = " + std::to_string(s.y));
    return sphere_pair(f, s, ImaginaryUnit::i()).c.norm() <= tol;
}

bool is_degenerate_sphere(const RegPoly& f, const SphereLocus& s) {
    return is_degenerate_sphere(f, s, degeneracy_tol(f));
}

} // namespace qslice
