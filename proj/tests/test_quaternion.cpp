#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qslice/quaternion.hpp"
#include "test_support.hpp"

using namespace qslice;

namespace {
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();
} // namespace

TEST_CASE("hamilton product on the units") {
    CHECK(dist(I * J, K) == 0.0);
    CHECK(dist(J * I, -K) == 0.0);
    CHECK(dist(J * K, I) == 0.0);
    CHECK(dist(K * I, J) == 0.0);
    CHECK(dist(I * I, Quaternion(-1.0)) == 0.0);
    CHECK(dist(I * K, -J) == 0.0); // ik = -(ki) = -j

    const Quaternion q{0.3, -1.2, 0.7, 2.0};
    CHECK(dist(q * Quaternion::one(), q) == 0.0);
    CHECK(dist(Quaternion::one() * q, q) == 0.0);
}

TEST_CASE("conjugate, norm, inverse") {
    const Quaternion two_i = 2.0 * I;
    CHECK(dist(two_i.inverse(), -0.5 * I) == 0.0);

    CHECK(Quaternion::one().conj() == Quaternion::one());
    CHECK(Quaternion::one().norm() == 1.0);
    CHECK(dist(Quaternion::one().inverse(), Quaternion::one()) == 0.0);

    const Quaternion q{1, 1, 1, 1};
    CHECK(q.norm() == 2.0);
    CHECK(dist(q.inverse(), Quaternion{0.25, -0.25, -0.25, -0.25}) == 0.0);
    CHECK(dist(q * q.inverse(), Quaternion::one()) < 1e-15);

    CHECK_THROWS_AS((void)Quaternion::zero().inverse(), ZeroDivideError);
}

TEST_CASE("slice decomposition") {
    const SliceCoords a = decompose(Quaternion{1, 0, 3, 0});
    CHECK(a.x == 1.0);
    CHECK(a.y == 3.0);
    REQUIRE(a.has_unit());
    CHECK(dist(a.unit->value(), J) == 0.0);

    const SliceCoords b = decompose(Quaternion(5.0));
    CHECK(b.x == 5.0);
    CHECK(b.y == 0.0);
    CHECK(!b.has_unit());
    CHECK(dist(b.reconstruct(), Quaternion(5.0)) == 0.0);

    const SliceCoords c = decompose(Quaternion{1, 1, 1, 0});
    CHECK(c.x == 1.0);
    CHECK(c.y == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    REQUIRE(c.has_unit());
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(dist(c.unit->value(), Quaternion{0, s, s, 0}) < 1e-15);
    CHECK(dist(c.reconstruct(), Quaternion{1, 1, 1, 0}) < 1e-12);
}

TEST_CASE("imaginary unit invariants are enforced") {
    CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0.5, 1, 0, 0}), PreconditionError);
    CHECK_THROWS_AS(ImaginaryUnit(Quaternion{0, 2, 0, 0}), PreconditionError);
    CHECK_THROWS_AS(ImaginaryUnit::from_direction(0, 0, 0), PreconditionError);
    const ImaginaryUnit u = ImaginaryUnit::from_direction(3, 4, 0);
    CHECK(dist(u.value(), Quaternion{0, 0.6, 0.8, 0}) < 1e-15);
}

TEST_CASE("sphere sampling: invariants, determinism, uniformity") {
    const auto one = sample_sphere_units(1, 9);
    REQUIRE(one.size() == 1);
    CHECK(dist(one[0].value() * one[0].value(), Quaternion(-1.0)) < 1e-12);

    const auto a = sample_sphere_units(3, 42);
    const auto b = sample_sphere_units(3, 42);
    REQUIRE(a.size() == 3);
    for (std::size_t n = 0; n < a.size(); ++n) CHECK(dist(a[n].value(), b[n].value()) == 0.0);

    const auto many = sample_sphere_units(1000, 7);
    double mx = 0, my = 0, mz = 0;
    for (const auto& u : many) {
        mx += u.value().x;
        my += u.value().y;
        mz += u.value().z;
    }
    CHECK(std::fabs(mx / 1000.0) < 0.1);
    CHECK(std::fabs(my / 1000.0) < 0.1);
    CHECK(std::fabs(mz / 1000.0) < 0.1);
}

TEST_CASE("algebra properties on random values") {
    qtest::Rng rng(2024);
    for (int t = 0; t < 500; ++t) {
        const Quaternion a = rng.quat(-5, 5);
        const Quaternion b = rng.quat(-5, 5);
        const Quaternion c = rng.quat(-5, 5);
        CHECK(std::fabs((a * b).norm() - a.norm() * b.norm()) <= 1e-12 * (1.0 + a.norm() * b.norm()));
        CHECK(dist((a * b) * c, a * (b * c)) <= 1e-12 * (1.0 + (a * b * c).norm()));
    }
    for (const auto& u : sample_sphere_units(200, 11))
        CHECK(dist(u.value() * u.value(), Quaternion(-1.0)) < 1e-10);
    for (int t = 0; t < 200; ++t) {
        const Quaternion q = rng.quat(-10, 10);
        CHECK(dist(decompose(q).reconstruct(), q) <= 1e-12 * (1.0 + q.norm()));
    }
}

TEST_CASE("text format parses and prints") {
    CHECK(dist(parse_quaternion("1-2i+0.5k"), Quaternion{1, -2, 0, 0.5}) == 0.0);
    CHECK(dist(parse_quaternion("0+0i+1j+0k"), J) == 0.0);
    CHECK(dist(parse_quaternion("i"), I) == 0.0);
    CHECK(dist(parse_quaternion("-k"), -K) == 0.0);
    CHECK(dist(parse_quaternion("3"), Quaternion(3.0)) == 0.0);
    CHECK(dist(parse_quaternion("1e-3j"), Quaternion{0, 0, 1e-3, 0}) == 0.0);
    CHECK(dist(parse_quaternion(" 2+i "), Quaternion{2, 1, 0, 0}) == 0.0);

    CHECK(to_string(Quaternion::zero()) == "0");
    CHECK(to_string(Quaternion{1, -2, 0, 0.5}) == "1-2i+0.5k");
    CHECK(to_string(J) == "1j");

    CHECK_THROWS_AS(parse_quaternion(""), ParseError);
    CHECK_THROWS_AS(parse_quaternion("1+"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("abc"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("1--2i"), ParseError);
    CHECK_THROWS_AS(parse_quaternion("2x"), ParseError);
}

TEST_CASE("text round trip is exact") {
    qtest::Rng rng(77);
    for (int t = 0; t < 400; ++t) {
        Quaternion q = rng.quat(-100, 100);
        if (t % 3 == 0) q.y = 0.0;
        if (t % 5 == 0) q = Quaternion(q.w);
        if (t % 7 == 0) q.x = 1.0 / 3.0;
        const Quaternion back = parse_quaternion(to_string(q));
        CHECK(back.w == q.w);
        CHECK(back.x == q.x);
        CHECK(back.y == q.y);
        CHECK(back.z == q.z);
    }
    // extreme magnitudes still round trip
    const Quaternion tiny{5e-324, -1.7976931348623157e308, 0.1, 1e-17};
    const Quaternion back = parse_quaternion(to_string(tiny));
    CHECK(back.w == tiny.w);
    CHECK(back.x == tiny.x);
    CHECK(back.y == tiny.y);
    CHECK(back.z == tiny.z);
}
