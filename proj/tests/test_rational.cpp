#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qslice/io.hpp"
#include "qslice/rational.hpp"
#include "test_support.hpp"

using namespace qslice;

namespace {
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();

// random point kept away from the zero set of f^s
Quaternion off_pole_point(qtest::Rng& rng, const RegPoly& fs) {
    for (;;) {
        const Quaternion q = rng.quat(-1.5, 1.5);
        if (eval(fs, q).norm() > 1e-4 * (1.0 + fs.coeff_scale())) return q;
    }
}
} // namespace

TEST_CASE("regular reciprocal values") {
    const RegPoly f = RegPoly::linear_factor(I);
    // f^s(2i) = -3, f^c(2i) = 3i, so f^-*(2i) = -i
    CHECK(dist(reciprocal_eval(f, 2.0 * I), -I) < 1e-15);

    const Quaternion a{2, -1, 0.5, 3};
    CHECK(dist(reciprocal_eval(RegPoly::constant(a), Quaternion{9, 1, -4, 2}), a.inverse()) < 1e-15);

    CHECK_THROWS_AS((void)reciprocal_eval(f, J), PoleError); // f^s = q^2+1 vanishes on S
    CHECK_THROWS_AS((void)reciprocal_eval(RegPoly(), I), ZeroPolynomialError);
}

TEST_CASE("sphere-preserving transform") {
    const RegPoly f = RegPoly::linear_factor(I);
    CHECK(dist(transform_Tf(f, 2.0 * I), 2.0 * I) < 1e-15);

    qtest::Rng rng(404);
    for (int t = 0; t < 10; ++t) {
        const Quaternion r(rng.uniform(-3, 3));
        CHECK(dist(transform_Tf(rng.poly(4), r), r) < 1e-12 * (1 + r.norm()));
    }

    // (j+i)^{-1} j (j+i) = i, still on the unit sphere
    const Quaternion moved = transform_Tf(f, J);
    CHECK(dist(moved, I) < 1e-15);
    const SliceCoords sc = decompose(moved);
    CHECK(std::fabs(sc.x) < 1e-12);
    CHECK(std::fabs(sc.y - 1.0) < 1e-12);

    // pole of T_f where f^c vanishes
    CHECK_THROWS_AS((void)transform_Tf(RegPoly::linear_factor(-I), I), PoleError);
}

TEST_CASE("reciprocal and transform laws on random data") {
    qtest::Rng rng(1234);
    for (int t = 0; t < 40; ++t) {
        const RegPoly f = rng.poly(1 + static_cast<int>(rng.uniform(0, 5)));
        const RegPoly fs = symmetrization(f);
        const RegPoly fc = regular_conjugate(f);
        const Quaternion q = off_pole_point(rng, fs);

        // mutual inverses
        CHECK(dist(transform_Tf(fc, transform_Tf(f, q)), q) <= 1e-9 * (1.0 + q.norm()));

        // sphere preservation
        const SliceCoords before = decompose(q);
        const SliceCoords after = decompose(transform_Tf(f, q));
        CHECK(std::fabs(before.x - after.x) <= 1e-10 * (1.0 + std::fabs(before.x)));
        CHECK(std::fabs(before.y - after.y) <= 1e-10 * (1.0 + before.y));

        // two reciprocal formulas agree
        const Quaternion direct = reciprocal_eval(f, q);
        const Quaternion via_transform = eval(f, transform_Tf(f, q)).inverse();
        CHECK(dist(direct, via_transform) <= 1e-9 * (1.0 + direct.norm()));

        // f * f^-* = f^-* * f = 1 pointwise
        const Quaternion vf = eval(f, q);
        if (vf.norm() > 1e-6) {
            const Quaternion left = vf * reciprocal_eval(f, vf.inverse() * q * vf);
            CHECK(dist(left, Quaternion::one()) <= 1e-9);
        }
        const Quaternion vr = reciprocal_eval(f, q);
        if (vr.norm() > 1e-6) {
            const Quaternion right = vr * eval(f, vr.inverse() * q * vr);
            CHECK(dist(right, Quaternion::one()) <= 1e-9);
        }
    }
}

TEST_CASE("rational expression evaluation") {
    const RationalExpr recip_q2_plus_1 =
        RationalExpr::const_shift(RationalExpr::reciprocal(RegPoly::monomial(2)), Quaternion::one());

    CHECK(rational_eval(recip_q2_plus_1, I).norm() == 0.0);
    CHECK(dist(rational_eval(recip_q2_plus_1, Quaternion(2.0)), Quaternion(1.25)) < 1e-15);

    qtest::Rng rng(5);
    const RegPoly f = rng.poly(4);
    const RationalExpr leaf = RationalExpr::leaf(f);
    for (int t = 0; t < 10; ++t) {
        const Quaternion q = rng.quat(-2, 2);
        CHECK(dist(rational_eval(leaf, q), eval(f, q)) == 0.0);
    }

    // star nodes follow the pointwise product formula
    const RegPoly g = rng.poly(3);
    const RationalExpr star = RationalExpr::star({RationalExpr::leaf(f), RationalExpr::leaf(g)});
    const RegPoly fg = star_mul(f, g);
    for (int t = 0; t < 20; ++t) {
        const Quaternion q = rng.quat(-1.5, 1.5);
        CHECK(dist(rational_eval(star, q), eval(fg, q)) <= 1e-9 * (1.0 + eval(fg, q).norm()));
    }

    const RationalExpr sum = RationalExpr::sum({RationalExpr::leaf(f), RationalExpr::leaf(g)});
    const RegPoly fplusg = f + g;
    for (int t = 0; t < 10; ++t) {
        const Quaternion q = rng.quat(-2, 2);
        CHECK(dist(rational_eval(sum, q), eval(fplusg, q)) < 1e-13 * (1 + eval(fplusg, q).norm()));
    }

    // the pole error names the reciprocal leaf
    const RationalExpr recip = RationalExpr::reciprocal(RegPoly::linear_factor(I));
    try {
        (void)rational_eval(recip, J);
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(std::string(e.what()).find("reciprocal leaf") != std::string::npos);
        CHECK(std::string(e.what()).find("degree 1") != std::string::npos);
    }
}

TEST_CASE("rational expression JSON round trip") {
    const RationalExpr expr =
        RationalExpr::const_shift(RationalExpr::reciprocal(RegPoly::monomial(2)), Quaternion::one());
    const std::string text = to_json(expr);
    CHECK(text.find("\"op\":\"const-shift\"") != std::string::npos);
    CHECK(text.find("\"op\":\"recip\"") != std::string::npos);

    const RationalExpr back = rational_from_json(text);
    qtest::Rng rng(6);
    for (int t = 0; t < 20; ++t) {
        Quaternion q = rng.quat(-2, 2);
        while (q.norm() < 0.3) q = rng.quat(-2, 2);
        CHECK(dist(rational_eval(back, q), rational_eval(expr, q)) == 0.0);
    }

    CHECK_THROWS_AS(rational_from_json("{\"op\":\"recip\",\"args\":[{\"op\":\"sum\",\"args\":[{\"coeffs\":[[1,0,0,0]]}]}]}"),
                    ParseError);
    CHECK_THROWS_AS(rational_from_json("{\"op\":\"nope\",\"args\":[]}"), ParseError);
}
