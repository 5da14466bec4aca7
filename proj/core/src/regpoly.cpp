#include "qslice/regpoly.hpp"

#include <algorithm>

namespace qslice {

RegPoly::RegPoly(std::vector<Quaternion> coeffs, double trailing_tol) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && (coeffs_.back().is_zero() || coeffs_.back().norm() < trailing_tol))
        coeffs_.pop_back();
}

RegPoly RegPoly::constant(const Quaternion& a) { return RegPoly({a}); }

RegPoly RegPoly::monomial(std::size_t n, const Quaternion& a) {
    std::vector<Quaternion> c(n + 1);
    c[n] = a;
    return RegPoly(std::move(c));
}

RegPoly RegPoly::linear_factor(const Quaternion& p) { return RegPoly({-p, Quaternion::one()}); }

double RegPoly::coeff_scale() const {
    double s = 0.0;
    for (const auto& a : coeffs_) s = std::max(s, a.norm());
    return s;
}

RegPoly operator+(const RegPoly& f, const RegPoly& g) {
    std::vector<Quaternion> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(n) + g.coeff(n);
    return RegPoly(std::move(c));
}

RegPoly operator-(const RegPoly& f, const RegPoly& g) {
    std::vector<Quaternion> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(n) - g.coeff(n);
    return RegPoly(std::move(c));
}

RegPoly operator-(const RegPoly& f) {
    std::vector<Quaternion> c(f.coeffs().size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = -f.coeff(n);
    return RegPoly(std::move(c));
}

RegPoly operator*(const RegPoly& f, double s) {
    std::vector<Quaternion> c(f.coeffs().size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeff(n) * s;
    return RegPoly(std::move(c));
}

Quaternion eval(const RegPoly& f, const Quaternion& q) {
    const auto& c = f.coeffs();
    if (c.empty()) return Quaternion::zero();
    Quaternion acc = c.back();
    for (std::size_t n = c.size() - 1; n-- > 0;) acc = q * acc + c[n];
    return acc;
}

RegPoly star_mul(const RegPoly& f, const RegPoly& g) {
    if (f.is_zero() || g.is_zero()) return RegPoly();
    std::vector<Quaternion> c(f.coeffs().size() + g.coeffs().size() - 1);
    for (std::size_t a = 0; a < f.coeffs().size(); ++a)
        for (std::size_t b = 0; b < g.coeffs().size(); ++b)
            c[a + b] = c[a + b] + f.coeffs()[a] * g.coeffs()[b];
    return RegPoly(std::move(c));
}

Quaternion pointwise_product_formula(const RegPoly& f, const RegPoly& g, const Quaternion& q) {
    const Quaternion v = eval(f, q);
    const double cutoff = 1e-13 * (1.0 + f.coeff_scale());
    if (v.norm() < cutoff) return Quaternion::zero();
    const Quaternion moved = v.inverse() * q * v;
    return v * eval(g, moved);
}

RegPoly regular_conjugate(const RegPoly& f) {
    std::vector<Quaternion> c(f.coeffs().size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = f.coeffs()[n].conj();
    return RegPoly(std::move(c));
}

RegPoly symmetrization(const RegPoly& f) { return star_mul(f, regular_conjugate(f)); }

} // namespace qslice
