#include <doctest.h>

#include <random>

#include "mubforge/engine.hpp"
#include "mubforge/serialize.hpp"

using namespace mubforge;

TEST_CASE("cyclotomic round trip is exact, including huge values") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    for (int conductor : {4, 3, 5, 7})
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<Rational> c;
            for (int k = 0; k < cyclotomic_degree(conductor); ++k)
                c.emplace_back(num(rng), den(rng));
            const CyclotomicNumber x(conductor, std::move(c));
            CHECK(cyclotomic_from_json(cyclotomic_to_json(x)) == x);
        }

    const Rational big = Rational::from_strings(
        "987654321098765432109876543210987654321", "1234567890123456789");
    const CyclotomicNumber huge(5, {big, big * big, Rational(1), Rational(-7, 3)});
    CHECK(cyclotomic_from_json(cyclotomic_to_json(huge)) == huge);
}

TEST_CASE("matrix round trip and canonical re-serialization") {
    Engine engine(2, 1);
    const ExactMatrix& d = engine.generator().matrix;
    const json j = matrix_to_json(d);
    CHECK(matrix_from_json(j) == d);
    CHECK(dump_canonical(j) == dump_canonical(matrix_to_json(matrix_from_json(j))));
}

TEST_CASE("generator artifact round trips and re-verifies") {
    Engine engine(2, 1);
    const json artifact = engine.generator_json();
    CHECK(artifact.at("schema") == kSchemaVersion);
    CHECK(artifact.at("kind") == "generator");
    CHECK(artifact.at("q") == 2);
    CHECK(artifact.at("order") == 3);
    CHECK(artifact.at("field").at("modulus") == json::array({1, 1, 1}));

    const Certificate cert = verify_artifact(artifact);
    INFO(cert.first_failure());
    CHECK(cert.passed());
}

TEST_CASE("odd-characteristic generator artifacts re-verify") {
    for (auto [p, a] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
        Engine engine(p, a);
        const Certificate cert = verify_artifact(engine.generator_json());
        INFO("p=", p, " a=", a, ": ", cert.first_failure());
        CHECK(cert.passed());
    }
}

TEST_CASE("family artifact re-verifies, and tampering is detected") {
    Engine engine(2, 1);
    json artifact = engine.family_json();
    const Certificate good = verify_artifact(artifact);
    INFO(good.first_failure());
    CHECK(good.passed());

    // Perturb a single entry of one basis; re-verification must fail and the
    // pairwise flatness clause must name the damaged entry.
    artifact["bases"][1]["entries"][0][0]["coeffs"][0][0] = "31";
    const Certificate bad = verify_artifact(artifact);
    CHECK_FALSE(bad.passed());
    bool flatness_witness = false;
    for (const auto& c : bad.checks())
        if (c.clause == "pairwise_unbiased" && !c.passed &&
            c.witness.find("entry") != std::string::npos)
            flatness_witness = true;
    CHECK(flatness_witness);
}

TEST_CASE("fixture artifacts re-verify") {
    const json q2 = fixture_to_json("q2", fixture_q2_matrix(), 3, {1, 2});
    const Certificate c1 = verify_artifact(q2);
    INFO(c1.first_failure());
    CHECK(c1.passed());

    const json real4 = fixture_to_json("real4", fixture_real4_matrix(), 3, {1, 2});
    const Certificate c2 = verify_artifact(real4);
    INFO(c2.first_failure());
    CHECK(c2.passed());
}

TEST_CASE("decomposition artifacts re-verify") {
    Engine engine(2, 1);
    const Certificate sl = verify_artifact(engine.sl_decomposition_json());
    INFO(sl.first_failure());
    CHECK(sl.passed());
    const Certificate sp = verify_artifact(engine.sp_decomposition_json());
    INFO(sp.first_failure());
    CHECK(sp.passed());
}

TEST_CASE("profile artifact re-verifies") {
    Engine engine(3, 1);
    const Certificate cert = verify_artifact(engine.profile_json());
    INFO(cert.first_failure());
    CHECK(cert.passed());
}

TEST_CASE("unknown artifacts are rejected") {
    CHECK_THROWS_AS(verify_artifact(json::object()), input_error);
    CHECK_THROWS_AS(verify_artifact(json{{"schema", kSchemaVersion}, {"kind", "mystery"}}),
                    input_error);
    CHECK_THROWS_AS(verify_artifact(json{{"schema", "other-9"}, {"kind", "generator"}}),
                    input_error);
}

TEST_CASE("byte-identical output across independent runs") {
    Engine a(2, 2), b(2, 2);
    CHECK(dump_canonical(a.generator_json()) == dump_canonical(b.generator_json()));
    CHECK(dump_canonical(a.family_json()) == dump_canonical(b.family_json()));

    Engine c(3, 1), d(3, 1);
    CHECK(dump_canonical(c.generator_json()) == dump_canonical(d.generator_json()));
}

TEST_CASE("field and group element encodings") {
    const auto spec = FieldSpec::make(2, 1);
    const json fs = field_spec_to_json(*spec);
    CHECK(fs.at("p") == 2);
    CHECK(fs.at("modulus") == json::array({1, 1, 1}));

    const GroupElement x{spec->from_coeffs({0, 1}), spec->from_coeffs({1, 1})};
    const json gx = group_element_to_json(x);
    CHECK(gx.at("a") == json::array({0, 1}));
    CHECK(gx.at("b") == json::array({1, 1}));
}

TEST_CASE("float export mirrors the shape") {
    Engine engine(2, 1);
    const json f = matrix_to_float_json(engine.generator().matrix, 12);
    CHECK(f.at("rows") == 2);
    CHECK(f.at("entries").size() == 2);
    CHECK(f.at("entries")[0][0].size() == 2); // [re, im]
}
