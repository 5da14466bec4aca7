#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qslice/zeros.hpp"
#include "test_support.hpp"

using namespace qslice;

namespace {
const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();

RegPoly from(std::initializer_list<Quaternion> cs) { return RegPoly(std::vector<Quaternion>(cs)); }

const RegPoly q2_plus_1 = from({Quaternion::one(), Quaternion::zero(), Quaternion::one()});

bool roots_match(const std::vector<Complex>& got, const std::vector<Complex>& want, double tol) {
    if (got.size() != want.size()) return false;
    std::vector<bool> used(got.size(), false);
    for (const auto& w : want) {
        bool matched = false;
        for (std::size_t n = 0; n < got.size(); ++n) {
            if (used[n] || std::abs(got[n] - w) > tol) continue;
            used[n] = true;
            matched = true;
            break;
        }
        if (!matched) return false;
    }
    return true;
}
} // namespace

TEST_CASE("complex roots of real polynomials") {
    CHECK(roots_match(complex_roots_real_poly({1, 0, 1}), {{0, 1}, {0, -1}}, 1e-10));
    CHECK(roots_match(complex_roots_real_poly({2, -3, 1}), {{1, 0}, {2, 0}}, 1e-10));
    // (q^2+1)^2: double roots at +-i, accuracy limited by multiplicity
    CHECK(roots_match(complex_roots_real_poly({1, 0, 2, 0, 1}), {{0, 1}, {0, 1}, {0, -1}, {0, -1}},
                      1e-6));
    CHECK_THROWS_AS(complex_roots_real_poly({}), ZeroPolynomialError);
    CHECK_THROWS_AS(complex_roots_real_poly({0.0, 0.0}), ZeroPolynomialError);
    CHECK(complex_roots_real_poly({4.0}).empty());

    // output is conjugate-closed for every real polynomial
    qtest::Rng rng(31337);
    for (int t = 0; t < 30; ++t) {
        std::vector<double> coeffs(static_cast<std::size_t>(2 + rng.uniform(0, 9)));
        for (auto& c : coeffs) c = rng.uniform(-2, 2);
        if (std::fabs(coeffs.back()) < 1e-3) coeffs.back() = 1.0;
        const auto roots = complex_roots_real_poly(coeffs);
        CHECK(roots.size() == coeffs.size() - 1);
        for (const auto& r : roots) {
            const bool has_conj = std::any_of(roots.begin(), roots.end(), [&r](const Complex& s) {
                return std::abs(std::conj(r) - s) == 0.0;
            });
            CHECK(has_conj);
        }
    }
}

TEST_CASE("classification on a sphere") {
    CHECK(classify_on_sphere(q2_plus_1, {0.0, 1.0}).kind == SphereZeroClass::Kind::Whole);

    const RegPoly prod = star_mul(RegPoly::linear_factor(I), RegPoly::linear_factor(J));
    const auto cls = classify_on_sphere(prod, {0.0, 1.0});
    REQUIRE(cls.kind == SphereZeroClass::Kind::Point);
    CHECK(dist(cls.unit->value(), I) < 1e-12);
    // the b, c data behind the classification
    const auto [b, c] = sphere_pair(prod, {0.0, 1.0}, ImaginaryUnit::k());
    CHECK(dist(b, Quaternion{-1, 0, 0, 1}) < 1e-15);
    CHECK(dist(c, -(I + J)) < 1e-15);

    CHECK(classify_on_sphere(RegPoly::linear_factor(Quaternion(5.0)), {0.0, 1.0}).kind ==
          SphereZeroClass::Kind::None);
    CHECK_THROWS_AS(classify_on_sphere(q2_plus_1, {0.0, 0.0}), PreconditionError);
}

TEST_CASE("zero sets of the canonical examples") {
    const auto sphere = find_zeros(q2_plus_1);
    REQUIRE(sphere.size() == 1);
    CHECK(sphere[0].kind == ZeroKind::SphericalZero);
    CHECK(std::fabs(sphere[0].locus.x) < 1e-12);
    CHECK(std::fabs(sphere[0].locus.y - 1.0) < 1e-12);

    const RegPoly prod = star_mul(RegPoly::linear_factor(I), RegPoly::linear_factor(J));
    const auto one_point = find_zeros(prod);
    REQUIRE(one_point.size() == 1);
    CHECK(one_point[0].kind == ZeroKind::IsolatedPoint);
    CHECK(dist(one_point[0].point, I) <= 1e-9);
    // j is NOT a zero although it generates the right factor
    CHECK(eval(prod, J).norm() > 1.0);

    const RegPoly mixed = star_mul(RegPoly::linear_factor(Quaternion(2.0)), q2_plus_1);
    const auto entries = find_zeros(mixed);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].kind == ZeroKind::SphericalZero);
    CHECK(std::fabs(entries[0].locus.x) < 1e-10);
    CHECK(std::fabs(entries[0].locus.y - 1.0) < 1e-10);
    CHECK(entries[1].kind == ZeroKind::RealPoint);
    CHECK(dist(entries[1].point, Quaternion(2.0)) <= 1e-9);
    for (const auto& e : entries) CHECK(zero_entry_residual(mixed, e) <= 1e-8);

    CHECK_THROWS_AS(find_zeros(RegPoly()), ZeroPolynomialError);
    CHECK(find_zeros(RegPoly::constant(Quaternion{1, 2, 3, 4})).empty());
}

TEST_CASE("zero sets of random factored polynomials") {
    qtest::Rng rng(60601);
    for (int t = 0; t < 25; ++t) {
        const int k = 1 + static_cast<int>(rng.uniform(0, 4));
        const RegPoly f = rng.factored_poly(k);
        const auto entries = find_zeros(f);
        CHECK(static_cast<int>(entries.size()) <= k);
        CHECK(!entries.empty()); // a product of linear factors always vanishes somewhere
        for (const auto& e : entries) CHECK(zero_entry_residual(f, e) <= 1e-8);
        for (std::size_t a = 0; a < entries.size(); ++a)
            for (std::size_t b = a + 1; b < entries.size(); ++b)
                CHECK(locus_dist(entries[a].locus, entries[b].locus) >= 1e-6);
    }
    // a degree-n polynomial never yields more than n loci
    for (int t = 0; t < 25; ++t) {
        const int deg = 1 + static_cast<int>(rng.uniform(0, 8));
        const RegPoly f = rng.poly(deg);
        CHECK(static_cast<int>(find_zeros(f).size()) <= deg);
    }
}

TEST_CASE("zeros of the conjugate correspond sphere by sphere") {
    qtest::Rng rng(7401);
    for (int t = 0; t < 15; ++t) {
        const RegPoly f = rng.factored_poly(2 + static_cast<int>(rng.uniform(0, 2)));
        const RegPoly fc = regular_conjugate(f);
        const auto zf = find_zeros(f);
        const auto zfc = find_zeros(fc);
        for (const auto& e : zf) {
            if (e.kind != ZeroKind::IsolatedPoint) continue;
            std::size_t matches = 0;
            for (const auto& ec : zfc) {
                if (locus_dist(e.locus, ec.locus) > 1e-6) continue;
                ++matches;
                CHECK(ec.kind == ZeroKind::IsolatedPoint);
                CHECK(eval(fc, ec.point).norm() <= 1e-8);
            }
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("product zero dichotomy") {
    const RegPoly f = RegPoly::linear_factor(I);
    const RegPoly g = RegPoly::linear_factor(J);

    CHECK(product_zero_check(f, g, I)); // left factor vanishes
    CHECK(!product_zero_check(f, g, J));
    CHECK(dist(eval(star_mul(f, g), J), 2.0 * Quaternion::k()) < 1e-15);

    // right branch: g's zero pulled back through the conjugation. For
    // f = q - i the conjugation sends every p in S \ {i} to -i, so pair
    // f with g = q + i and the branch fires at p = j.
    const RegPoly g2 = RegPoly::linear_factor(-I);
    CHECK(product_zero_check(f, g2, J));
    CHECK(eval(star_mul(f, g2), J).norm() < 1e-15);
    const Quaternion v = eval(f, J);
    CHECK(dist(v.inverse() * J * v, -I) < 1e-15);

    // dichotomy agrees with evaluating the convolution
    qtest::Rng rng(88);
    for (int t = 0; t < 40; ++t) {
        const RegPoly a = rng.poly(1 + static_cast<int>(rng.uniform(0, 4)));
        const RegPoly b = rng.poly(1 + static_cast<int>(rng.uniform(0, 4)));
        const RegPoly ab = star_mul(a, b);
        for (int p = 0; p < 10; ++p) {
            const Quaternion q = rng.quat(-1.5, 1.5);
            const bool direct = eval(ab, q).norm() <= 1e-9 * (1.0 + ab.coeff_scale());
            CHECK(product_zero_check(a, b, q) == direct);
        }
        // and at an actual zero of the product
        for (const auto& e : find_zeros(ab)) {
            if (e.kind == ZeroKind::SphericalZero) continue;
            CHECK(product_zero_check(a, b, e.point));
        }
    }
}
