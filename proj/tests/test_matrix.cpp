#include <doctest.h>

#include <random>

#include "mubforge/matrix.hpp"

using namespace mubforge;

namespace {

CyclotomicNumber gauss(long re_num, long re_den, long im_num, long im_den) {
    return {4, {Rational(re_num, re_den), Rational(im_num, im_den)}};
}

// The 2x2 unitary of order 3 used as a fixture throughout: (1+i)/2 * [[-1, i], [1, i]].
ExactMatrix fixture_q2() {
    ExactMatrix m(2, 2, 4);
    m.set(0, 0, gauss(-1, 2, -1, 2));
    m.set(0, 1, gauss(-1, 2, 1, 2));
    m.set(1, 0, gauss(1, 2, 1, 2));
    m.set(1, 1, gauss(-1, 2, 1, 2));
    return m;
}

ExactMatrix random_matrix(int n, int conductor, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    ExactMatrix m(n, n, conductor);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> c;
            for (int k = 0; k < cyclotomic_degree(conductor); ++k)
                c.emplace_back(num(rng), den(rng));
            m.set(i, j, CyclotomicNumber(conductor, std::move(c)));
        }
    return m;
}

ExactMatrix random_monomial(int n, std::mt19937& rng) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<long> phase(0, 3);
    ExactMatrix m(n, n, 4);
    for (int i = 0; i < n; ++i)
        m.set(i, perm[static_cast<size_t>(i)], root_of_unity(4, phase(rng)));
    return m;
}

} // namespace

TEST_CASE("basic operations") {
    const auto m = fixture_q2();
    CHECK(dagger(dagger(m)) == m);
    CHECK(trace(ExactMatrix::identity(5, 4)).equals_rational(Rational(5)));

    // Trace inner product tr(U^dagger V) against a direct entrywise expansion.
    std::mt19937 rng(1);
    const auto v = random_matrix(2, 4, rng);
    CyclotomicNumber direct(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) direct += m.at(i, j).conjugate() * v.at(i, j);
    CHECK(trace(mat_mul(dagger(m), v)) == direct);
    CHECK(trace_of_product(dagger(m), v) == direct);

    CHECK_THROWS_AS(mat_mul(ExactMatrix(2, 3, 4), ExactMatrix(2, 3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(det(ExactMatrix(2, 3, 4)), std::invalid_argument);
}

TEST_CASE("determinant") {
    CHECK(det(ExactMatrix::identity(4, 4)).equals_rational(Rational(1)));

    // Hand cofactor expansion of the fixture: ((1+i)/2)^2 * (-2i) = 1.
    const auto m = fixture_q2();
    const CyclotomicNumber by_cofactor =
        m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    CHECK(by_cofactor.equals_rational(Rational(1)));
    CHECK(det(m) == by_cofactor);

    std::mt19937 rng(2024);
    for (int rep = 0; rep < 10; ++rep) {
        const auto a = random_matrix(3, 4, rng);
        const auto b = random_matrix(3, 4, rng);
        CHECK(det(mat_mul(a, b)) == det(a) * det(b));
        CHECK(det(dagger(a)) == det(a).conjugate());
    }

    ExactMatrix singular(2, 2, 4);
    singular.set(0, 0, CyclotomicNumber::one(4));
    singular.set(1, 0, CyclotomicNumber::one(4));
    CHECK(det(singular).is_zero());
}

TEST_CASE("scalar and unitary predicates") {
    auto three_i = mat_scale(ExactMatrix::identity(3, 4), CyclotomicNumber(4, Rational(3)));
    const auto s = is_scalar(three_i);
    REQUIRE(s.has_value());
    CHECK(s->equals_rational(Rational(3)));

    CHECK(is_unitary(fixture_q2()));
    CHECK_FALSE(is_scalar(fixture_q2()).has_value());
    CHECK_FALSE(is_unitary(mat_scale(ExactMatrix::identity(2, 4),
                                     CyclotomicNumber(4, Rational(2)))));
}

TEST_CASE("inverse and powers") {
    const auto m = fixture_q2();
    CHECK(mat_mul(m, inverse(m)) == ExactMatrix::identity(2, 4));
    // The fixture has order 3.
    CHECK(mat_pow(m, 3) == ExactMatrix::identity(2, 4));
    CHECK(mat_pow(m, 1) != ExactMatrix::identity(2, 4));
    CHECK(mat_pow(m, 2) != ExactMatrix::identity(2, 4));
    CHECK(mat_pow(m, -1) == mat_pow(m, 2));

    ExactMatrix singular(2, 2, 4);
    CHECK_THROWS_AS(inverse(singular), std::domain_error);
}

TEST_CASE("adjoint and trace identities on random instances") {
    std::mt19937 rng(77);
    for (int rep = 0; rep < 10; ++rep) {
        const auto a = random_matrix(3, 4, rng);
        const auto b = random_matrix(3, 4, rng);
        CHECK(dagger(mat_mul(a, b)) == mat_mul(dagger(b), dagger(a)));
        CHECK(trace(mat_mul(a, b)) == trace(mat_mul(b, a)));
        CHECK(trace_of_product(a, b) == trace(mat_mul(a, b)));
    }
}

TEST_CASE("monomial fast path agrees with the dense product") {
    std::mt19937 rng(31337);
    for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_monomial(5, rng);
        const auto b = random_monomial(5, rng);
        CHECK(is_monomial(a));
        CHECK(mat_mul_fast(a, b) == mat_mul(a, b));
        const auto dense = random_matrix(5, 4, rng);
        CHECK(mat_mul_fast(a, dense) == mat_mul(a, dense));
    }
    CHECK_FALSE(is_monomial(fixture_q2()));
}

TEST_CASE("span rank and membership") {
    const auto m = fixture_q2();
    CHECK(span_membership(m, {m}));
    CHECK(span_rank({m}) == 1);

    const auto id = ExactMatrix::identity(2, 4);
    const auto neg_id = mat_scale(id, CyclotomicNumber(4, Rational(-1)));
    CHECK(span_rank({id, neg_id}) == 1);
    CHECK(span_rank({id, m}) == 2);
    CHECK(span_membership(mat_scale(m, root_of_unity(4, 1)), {m}));
    CHECK_FALSE(span_membership(id, {m}));
    CHECK(span_rank({}) == 0);
}

TEST_CASE("centralizer solver") {
    // Everything commutes with the identity.
    const auto full = solve_centralizer({ExactMatrix::identity(3, 4)});
    CHECK(full.dimension == 9);

    // The centralizer of the diagonal trace-zero space in 3x3 matrices is the
    // diagonal algebra.
    std::vector<ExactMatrix> diag_tracezero;
    {
        ExactMatrix d1(3, 3, 4), d2(3, 3, 4);
        d1.set(0, 0, CyclotomicNumber::one(4));
        d1.set(1, 1, CyclotomicNumber(4, Rational(-1)));
        d2.set(1, 1, CyclotomicNumber::one(4));
        d2.set(2, 2, CyclotomicNumber(4, Rational(-1)));
        diag_tracezero = {d1, d2};
    }
    const auto diag = solve_centralizer(diag_tracezero);
    CHECK(diag.dimension == 3);
    for (const auto& y : diag.basis)
        for (const auto& h : diag_tracezero)
            CHECK(mat_mul(h, y) == mat_mul(y, h));

    // Explicit 4-unknown solve: the commutant of diag(i, -i) in 2x2 matrices
    // is the diagonal algebra, dimension 2.
    ExactMatrix di(2, 2, 4);
    di.set(0, 0, root_of_unity(4, 1));
    di.set(1, 1, root_of_unity(4, 3));
    const auto c = solve_centralizer({di});
    CHECK(c.dimension == 2);
    for (const auto& y : c.basis) CHECK(mat_mul(di, y) == mat_mul(y, di));
}
