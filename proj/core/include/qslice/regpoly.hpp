#pragma once

#include <vector>

#include "qslice/quaternion.hpp"

namespace qslice {

/// Polynomial sum_n q^n a_n with quaternion coefficients on the right of
/// the powers. Stored in ascending degree, normalized so the trailing
/// coefficient is nonzero; the zero polynomial is the empty list and has
/// degree -1.
class RegPoly {
public:
    /// Trailing coefficients below this magnitude are stripped after
    /// arithmetic, keeping the degree meaningful under cancellation.
    static constexpr double kTrailingTol = 1e-13;

    RegPoly() = default; // zero polynomial
    explicit RegPoly(std::vector<Quaternion> coeffs, double trailing_tol = kTrailingTol);

    static RegPoly constant(const Quaternion& a);
    /// The monomial q^n * a.
    static RegPoly monomial(std::size_t n, const Quaternion& a = Quaternion::one());
    /// The identity function q.
    static RegPoly identity() { return monomial(1); }
    /// The linear factor q - p.
    static RegPoly linear_factor(const Quaternion& p);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
    [[nodiscard]] const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    [[nodiscard]] Quaternion coeff(std::size_t n) const {
        return n < coeffs_.size() ? coeffs_[n] : Quaternion::zero();
    }
    /// Largest coefficient magnitude; 0 for the zero polynomial.
    [[nodiscard]] double coeff_scale() const;

    bool operator==(const RegPoly&) const = default;

private:
    std::vector<Quaternion> coeffs_;
};

RegPoly operator+(const RegPoly& f, const RegPoly& g);
RegPoly operator-(const RegPoly& f, const RegPoly& g);
RegPoly operator-(const RegPoly& f);
RegPoly operator*(const RegPoly& f, double s);

/// sum_n q^n a_n evaluated by Horner's rule with left powers.
Quaternion eval(const RegPoly& f, const Quaternion& q);

/// Regular product: coefficient convolution c_n = sum_k a_k b_{n-k} with
/// the factor order preserved (a on the left). Associative and
/// distributive, in general not commutative.
RegPoly star_mul(const RegPoly& f, const RegPoly& g);

/// Evaluates f*g at q without forming the product polynomial:
/// 0 when f(q) = 0, otherwise f(q) * g(f(q)^{-1} q f(q)).
/// The vanishing branch triggers below 1e-13 * (1 + coefficient scale).
Quaternion pointwise_product_formula(const RegPoly& f, const RegPoly& g, const Quaternion& q);

/// Termwise coefficient conjugation; an involution.
RegPoly regular_conjugate(const RegPoly& f);

/// f * f^c. Coefficients are real up to roundoff and the two factor
/// orders agree.
RegPoly symmetrization(const RegPoly& f);

} // namespace qslice
