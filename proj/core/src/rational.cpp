#include "qslice/rational.hpp"

#include <algorithm>

namespace qslice {

double pole_tol(const RegPoly& fs) { return 1e-10 * (1.0 + fs.coeff_scale()); }

Quaternion reciprocal_eval(const RegPoly& f, const Quaternion& q) {
    if (f.is_zero()) throw ZeroPolynomialError("regular reciprocal of the zero polynomial");
    const RegPoly fs = symmetrization(f);
    const Quaternion denom = eval(fs, q);
    if (denom.norm() <= pole_tol(fs))
        throw PoleError("f^-* evaluated on the zero set of f^s at q = " + to_string(q));
    return denom.inverse() * eval(regular_conjugate(f), q);
}

Quaternion transform_Tf(const RegPoly& f, const Quaternion& q) {
    const Quaternion v = eval(regular_conjugate(f), q);
    if (v.norm() <= 1e-10 * (1.0 + f.coeff_scale()))
        throw PoleError("T_f undefined where f^c vanishes, at q = " + to_string(q));
    return v.inverse() * q * v;
}

RationalExpr RationalExpr::leaf(RegPoly f) {
    RationalExpr e;
    e.kind_ = Kind::Leaf;
    e.scale_ = f.coeff_scale();
    e.leaf_ = std::move(f);
    return e;
}

RationalExpr RationalExpr::sum(std::vector<RationalExpr> args) {
    if (args.empty()) throw PreconditionError("sum node needs at least one argument");
    RationalExpr e;
    e.kind_ = Kind::Sum;
    for (const auto& a : args) e.scale_ = std::max(e.scale_, a.scale_);
    e.args_ = std::move(args);
    return e;
}

RationalExpr RationalExpr::star(std::vector<RationalExpr> args) {
    if (args.empty()) throw PreconditionError("star node needs at least one argument");
    RationalExpr e;
    e.kind_ = Kind::Star;
    for (const auto& a : args) e.scale_ = std::max(e.scale_, a.scale_);
    e.args_ = std::move(args);
    return e;
}

RationalExpr RationalExpr::reciprocal(RegPoly f) {
    if (f.is_zero()) throw ZeroPolynomialError("regular reciprocal of the zero polynomial");
    RationalExpr e;
    e.kind_ = Kind::Recip;
    e.scale_ = f.coeff_scale();
    e.recip_symm_ = symmetrization(f);
    e.recip_conj_ = regular_conjugate(f);
    e.leaf_ = std::move(f);
    return e;
}

RationalExpr RationalExpr::const_shift(RationalExpr arg, const Quaternion& shift) {
    RationalExpr e;
    e.kind_ = Kind::ConstShift;
    e.scale_ = std::max(arg.scale_, shift.norm());
    e.args_.push_back(std::move(arg));
    e.shift_ = shift;
    return e;
}

Quaternion rational_eval(const RationalExpr& e, const Quaternion& q) {
    switch (e.kind_) {
        case RationalExpr::Kind::Leaf:
            return eval(e.leaf_, q);
        case RationalExpr::Kind::Sum: {
            Quaternion acc = Quaternion::zero();
            for (const auto& a : e.args_) acc = acc + rational_eval(a, q);
            return acc;
        }
        case RationalExpr::Kind::Star: {
            // left fold of the pointwise product formula: each factor is
            // evaluated at the point conjugated by the accumulated value
            Quaternion acc = rational_eval(e.args_.front(), q);
            const double cutoff = 1e-13 * (1.0 + e.scale_);
            for (std::size_t n = 1; n < e.args_.size(); ++n) {
                if (acc.norm() < cutoff) return Quaternion::zero();
                const Quaternion moved = acc.inverse() * q * acc;
                acc = acc * rational_eval(e.args_[n], moved);
            }
            return acc;
        }
        case RationalExpr::Kind::Recip: {
            const Quaternion denom = eval(e.recip_symm_, q);
            if (denom.norm() <= pole_tol(e.recip_symm_))
                throw PoleError("pole of reciprocal leaf (degree " + std::to_string(e.leaf_.degree()) +
                                ") at q = " + to_string(q));
            return denom.inverse() * eval(e.recip_conj_, q);
        }
        case RationalExpr::Kind::ConstShift:
            return rational_eval(e.args_.front(), q) + e.shift_;
    }
    throw InconsistencyError("unreachable expression kind");
}

} // namespace qslice
