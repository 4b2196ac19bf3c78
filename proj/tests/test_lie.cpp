#include <doctest.h>

#include <random>

#include "mubforge/engine.hpp"
#include "mubforge/lie.hpp"

using namespace mubforge;

TEST_CASE("sl summands") {
    Engine e2(2, 1);
    Certificate c2("summands");
    const CartanSummand h1 = build_sl_summand(e2.group(), e2.rep(), 1, &c2);
    CHECK(h1.basis.size() == 1); // q - 1 = 1
    CHECK(c2.passed());
    CHECK(trace(h1.basis[0]).is_zero());

    Engine e4(2, 2);
    Certificate c4("summands");
    for (int i = 1; i <= 5; ++i) {
        const CartanSummand h = build_sl_summand(e4.group(), e4.rep(), i, &c4);
        CHECK(span_rank(h.basis) == 3);
        for (const auto& m : h.basis) {
            CHECK(trace(m).is_zero());
            CHECK_FALSE(det(m).is_zero()); // group images are invertible
        }
    }
    CHECK(c4.passed());

    CHECK_THROWS_AS(build_sl_summand(Engine(3, 1).group(), Engine(3, 1).rep(), 1, nullptr),
                    input_error);
}

TEST_CASE("theorem3 certificate at q=2 and q=4") {
    Engine e2(2, 1);
    const Certificate c2 = e2.theorem3();
    INFO(c2.first_failure());
    CHECK(c2.passed());

    Engine e4(2, 2);
    const Certificate c4 = e4.theorem3();
    INFO(c4.first_failure());
    CHECK(c4.passed());
}

TEST_CASE("killing-surrogate isometry of conjugation by D") {
    Engine engine(2, 2);
    const Generator& gen = engine.generator();
    const ExactMatrix d_inv = dagger(gen.matrix);
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> pick(0, engine.group().order() - 1);
    for (int rep = 0; rep < 15; ++rep) {
        const auto u = engine.rep().evaluate(engine.group().element_from_code(pick(rng)));
        const auto v = engine.rep().evaluate(engine.group().element_from_code(pick(rng)));
        const auto cu = mat_mul(mat_mul(d_inv, u), gen.matrix);
        const auto cv = mat_mul(mat_mul(d_inv, v), gen.matrix);
        CHECK(trace_of_product(cu, cv) == trace_of_product(u, v));
    }
}

TEST_CASE("symplectic form at q=2 is 4 times the standard skew unit") {
    Engine engine(2, 1);
    Certificate cert("form");
    const SymplecticForm form =
        compute_symplectic_form(engine.group(), engine.rep(), engine.generator(), &cert);
    INFO(cert.first_failure());
    CHECK(cert.passed());

    // Hand computation: all four transversal terms contribute K, so
    // S = 4 (e_{01} - e_{10}).
    ExactMatrix expected(2, 2, 4);
    expected.set(0, 1, CyclotomicNumber(4, Rational(4)));
    expected.set(1, 0, CyclotomicNumber(4, Rational(-4)));
    CHECK(form.matrix == expected);
}

TEST_CASE("symplectic form invariants at q=4") {
    Engine engine(2, 2);
    Certificate cert("form");
    const SymplecticForm form =
        compute_symplectic_form(engine.group(), engine.rep(), engine.generator(), &cert);
    INFO(cert.first_failure());
    CHECK(cert.passed());

    const ExactMatrix& s = form.matrix;
    CHECK(transpose(s) == mat_scale(s, CyclotomicNumber(4, Rational(-1))));
    CHECK_FALSE(det(s).is_zero());
    CHECK(mat_mul(mat_mul(engine.generator().matrix, s),
                  transpose(engine.generator().matrix)) == s);
}

TEST_CASE("sp summands") {
    Engine e2(2, 1);
    Certificate c2("sp");
    const SymplecticForm f2 =
        compute_symplectic_form(e2.group(), e2.rep(), e2.generator(), nullptr);
    for (int i = 1; i <= 3; ++i) {
        const CartanSummand s = build_sp_summand(e2.group(), e2.rep(), f2, i, &c2);
        CHECK(s.basis.size() == 1); // q/2 = 1, from 2 order-4 images
    }
    CHECK(c2.passed());

    Engine e4(2, 2);
    Certificate c4("sp");
    const SymplecticForm f4 =
        compute_symplectic_form(e4.group(), e4.rep(), e4.generator(), nullptr);
    for (int i = 1; i <= 5; ++i) {
        const CartanSummand s = build_sp_summand(e4.group(), e4.rep(), f4, i, &c4);
        CHECK(s.basis.size() == 2); // q/2 = 2, from 4 order-4 images
        for (const auto& m : s.basis) {
            // Order 4: m^2 = -I, and membership in the symplectic algebra.
            CHECK(mat_pow(m, 2) ==
                  mat_scale(ExactMatrix::identity(4, 4), CyclotomicNumber(4, Rational(-1))));
            CHECK(mat_add(mat_mul(m, f4.matrix), mat_mul(f4.matrix, transpose(m))) ==
                  ExactMatrix(4, 4, 4));
        }
    }
    CHECK(c4.passed());
}

TEST_CASE("theorem4 certificate at q=2 and q=4") {
    Engine e2(2, 1);
    const Certificate c2 = e2.theorem4();
    INFO(c2.first_failure());
    CHECK(c2.passed());

    Engine e4(2, 2);
    const Certificate c4 = e4.theorem4();
    INFO(c4.first_failure());
    CHECK(c4.passed());
}

TEST_CASE("summand orbit is a single cycle") {
    Engine e2(2, 1);
    const SummandOrbit o2 = e2.orbit();
    CHECK(o2.next_index == std::vector<int>{2, 3, 1});
    CHECK(o2.single_cycle);

    // Odd p: report-only orbit on the (q+1)/2 distinct summands.
    Engine e3(3, 1);
    const SummandOrbit o3 = e3.orbit();
    CHECK(o3.next_index.size() == 2);
    CHECK(o3.single_cycle);
    CHECK(o3.next_index == std::vector<int>{2, 1});
}
