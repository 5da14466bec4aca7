#pragma once

#include <memory>
#include <vector>

#include "qslice/regpoly.hpp"

namespace qslice {

/// Default pole tolerance for a denominator symmetrization:
/// 1e-10 * (1 + coefficient scale).
double pole_tol(const RegPoly& fs);

/// f^{-*}(q) = f^s(q)^{-1} f^c(q), defined off the zero set of f^s.
/// Throws PoleError when |f^s(q)| falls under the pole tolerance.
Quaternion reciprocal_eval(const RegPoly& f, const Quaternion& q);

/// T_f(q) = f^c(q)^{-1} q f^c(q); maps every sphere x + y*S to itself
/// and inverts against T_{f^c}. Throws PoleError when f^c(q) vanishes.
Quaternion transform_Tf(const RegPoly& f, const Quaternion& q);

/// Expression tree over polynomial leaves with sum, regular product,
/// regular reciprocal and constant-shift nodes. Reciprocal nodes apply
/// to polynomial leaves only and cache the leaf symmetrization and
/// conjugate for pole testing. Trees are immutable after construction.
class RationalExpr {
public:
    enum class Kind { Leaf, Sum, Star, Recip, ConstShift };

    static RationalExpr leaf(RegPoly f);
    static RationalExpr sum(std::vector<RationalExpr> args);
    static RationalExpr star(std::vector<RationalExpr> args);
    /// Regular reciprocal of a polynomial leaf. Throws
    /// ZeroPolynomialError for the zero polynomial.
    static RationalExpr reciprocal(RegPoly f);
    static RationalExpr const_shift(RationalExpr arg, const Quaternion& shift);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const RegPoly& leaf_poly() const { return leaf_; }
    [[nodiscard]] const std::vector<RationalExpr>& args() const { return args_; }
    [[nodiscard]] const Quaternion& shift() const { return shift_; }
    /// Cached symmetrization of a reciprocal leaf.
    [[nodiscard]] const RegPoly& pole_poly() const { return recip_symm_; }
    /// Largest coefficient magnitude over all leaves.
    [[nodiscard]] double scale() const { return scale_; }

private:
    RationalExpr() = default;

    Kind kind_ = Kind::Leaf;
    RegPoly leaf_;
    std::vector<RationalExpr> args_;
    Quaternion shift_;
    RegPoly recip_symm_;
    RegPoly recip_conj_;
    double scale_ = 0.0;

    friend Quaternion rational_eval(const RationalExpr& e, const Quaternion& q);
};

/// Recursive evaluation; star nodes use the pointwise product formula
/// semantics, reciprocal nodes raise PoleError on the zero set of their
/// leaf symmetrization.
Quaternion rational_eval(const RationalExpr& e, const Quaternion& q);

} // namespace qslice
