#include <doctest.h>

#include <random>

#include "mubforge/field.hpp"

using namespace mubforge;

namespace {

// Test-only polynomial helpers over F_p, independent of the library's
// construction path. Little-endian coefficients.
std::vector<int> tmul(const std::vector<int>& f, const std::vector<int>& g, int p) {
    std::vector<int> r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

bool tdivides(const std::vector<int>& divisor, std::vector<int> f, int p) {
    while (f.size() >= divisor.size() && !f.empty()) {
        const int lead = f.back();
        const size_t shift = f.size() - divisor.size();
        for (size_t k = 0; k < divisor.size(); ++k)
            f[k + shift] = ((f[k + shift] - lead * divisor[k]) % p + p * p) % p;
        while (!f.empty() && f.back() == 0) f.pop_back();
    }
    return f.empty();
}

// Oracle: the lexicographically first (low-degree coefficients compared
// first) monic irreducible polynomial of degree d over F_p, by exhaustive
// enumeration and trial division.
std::vector<int> first_irreducible(int p, int d) {
    long count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (long idx = 0; idx < count; ++idx) {
        std::vector<int> f(static_cast<size_t>(d) + 1, 0);
        f[static_cast<size_t>(d)] = 1;
        long rest = idx;
        for (int k = d - 1; k >= 0; --k) {
            f[static_cast<size_t>(k)] = static_cast<int>(rest % p);
            rest /= p;
        }
        bool irreducible = true;
        for (int dd = 1; 2 * dd <= d && irreducible; ++dd) {
            long sub = 1;
            for (int k = 0; k < dd; ++k) sub *= p;
            for (long s = 0; s < sub && irreducible; ++s) {
                std::vector<int> g(static_cast<size_t>(dd) + 1, 0);
                g[static_cast<size_t>(dd)] = 1;
                long r = s;
                for (int k = 0; k < dd; ++k) {
                    g[static_cast<size_t>(k)] = static_cast<int>(r % p);
                    r /= p;
                }
                if (tdivides(g, f, p)) irreducible = false;
            }
        }
        if (irreducible) return f;
    }
    return {};
}

} // namespace

TEST_CASE("modulus selection") {
    // The unique monic irreducible quadratic over F_2.
    CHECK(FieldSpec::make(2, 1)->modulus() == std::vector<int>{1, 1, 1});
    // Oracle: enumerate monic quadratics over F_3 lexicographically.
    CHECK(FieldSpec::make(3, 1)->modulus() == first_irreducible(3, 2));
    CHECK(FieldSpec::make(3, 1)->modulus() == std::vector<int>{1, 0, 1}); // t^2 + 1
    // Oracle over all 16 monic quartic candidates.
    CHECK(FieldSpec::make(2, 2)->modulus() == first_irreducible(2, 4));
    CHECK(FieldSpec::make(5, 1)->modulus() == first_irreducible(5, 2));
    CHECK(FieldSpec::make(2, 3)->modulus() == first_irreducible(2, 6));
}

TEST_CASE("bad inputs") {
    CHECK_THROWS_AS(FieldSpec::make(4, 1), input_error);
    CHECK_THROWS_AS(FieldSpec::make(1, 1), input_error);
    CHECK_THROWS_AS(FieldSpec::make(2, 6), resource_error); // 64 > default cap 32
}

TEST_CASE("frobenius") {
    const auto F = FieldSpec::make(2, 1); // F_4 over F_2
    const FieldElement t = F->from_coeffs({0, 1});
    // t^2 = t + 1 modulo t^2 + t + 1.
    CHECK(frobenius_q(t) == F->from_coeffs({1, 1}));

    for (auto [p, a] : {std::pair{2, 2}, {3, 1}, {5, 1}, {2, 3}}) {
        const auto S = FieldSpec::make(p, a);
        long fixed = 0;
        for (long x = 0; x < S->q2(); ++x) {
            const FieldElement e = S->element(static_cast<int>(x));
            CHECK(frobenius_q(frobenius_q(e)) == e);
            if (frobenius_q(e) == e) ++fixed;
        }
        CHECK(fixed == S->q());

        std::mt19937 rng(5);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(S->q2()) - 1);
        for (int rep = 0; rep < 50; ++rep) {
            const FieldElement x = S->element(pick(rng));
            const FieldElement y = S->element(pick(rng));
            CHECK(frobenius_q(x + y) == frobenius_q(x) + frobenius_q(y));
            CHECK(frobenius_q(x * y) == frobenius_q(x) * frobenius_q(y));
        }
    }
}

TEST_CASE("alpha has order q+1") {
    const auto F4 = FieldSpec::make(2, 1);
    const FieldElement alpha = find_alpha(*F4);
    CHECK(alpha == F4->from_coeffs({0, 1})); // alpha = t in F_4
    CHECK(alpha.pow(3) == F4->one());
    CHECK(alpha != F4->one());

    for (auto [p, a] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {5, 1}, {3, 2}}) {
        const auto S = FieldSpec::make(p, a);
        const FieldElement al = find_alpha(*S);
        CHECK(al.pow(S->q() + 1) == S->one());
        for (long k = 1; k <= S->q(); ++k) CHECK(al.pow(k) != S->one());
        CHECK(frobenius_q(al) == al.inverse());
    }
}

TEST_CASE("generator order is q^2 - 1") {
    for (auto [p, a] : {std::pair{2, 2}, {3, 1}, {5, 1}}) {
        const auto S = FieldSpec::make(p, a);
        const FieldElement g = S->element(S->generator_code());
        long order = 1;
        FieldElement cur = g;
        while (cur != S->one()) {
            cur = cur * g;
            ++order;
        }
        CHECK(order == S->q2() - 1);
    }
}

TEST_CASE("skew elements") {
    for (auto [p, a] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}}) {
        const auto S = FieldSpec::make(p, a);
        const auto skew = skew_elements(*S);
        CHECK(static_cast<long>(skew.size()) == S->q());
        CHECK(skew.front().is_zero());
        for (const auto& e : skew) CHECK(frobenius_q(e) == -e);
        if (p == 2) {
            // In characteristic 2 the skew set is the subfield itself.
            for (const auto& e : skew) CHECK(S->in_subfield_q(e.code()));
        }
    }
}

TEST_CASE("trace lands in the prime field and is nondegenerate") {
    for (auto [p, a] : {std::pair{2, 2}, {3, 1}, {5, 1}}) {
        const auto S = FieldSpec::make(p, a);
        bool some_nonzero = false;
        for (long x = 0; x < S->q2(); ++x) {
            const int t = S->trace_to_fp(static_cast<int>(x));
            CHECK(t >= 0);
            CHECK(t < p);
            if (t != 0) some_nonzero = true;
        }
        CHECK(some_nonzero);
    }
}
