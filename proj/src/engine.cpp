#include "mubforge/engine.hpp"

#include <string>

namespace mubforge {

Engine::Engine(int p, int a, EngineOptions opts) : p_(p), a_(a), opts_(opts) {
    spec_ = FieldSpec::make(p, a, opts_.max_q);
    group_ = std::make_unique<Gq>(spec_);
    rep_.emplace(UnitaryRep::induce(
        ExtendedCharacter::build(CentralCharacter::build(spec_, opts_.lambda_index))));
}

const Generator& Engine::generator() {
    if (!generator_) generator_ = build_generator(*group_, *rep_, opts_.seed_index);
    return *generator_;
}

MubFamily Engine::family() { return generate_family(*group_, generator()); }

FlatnessProfile Engine::profile() { return flatness_profile(*group_, generator()); }

Certificate Engine::character_certificates() const {
    Certificate cert("characters");
    cert.merge(rep_->central_character().certify());
    cert.merge(rep_->inducing_character().certify());
    return cert;
}

Certificate Engine::lemma1() const { return verify_lemma1(*group_, *rep_, opts_.exhaustive_limit); }

Certificate Engine::subgroup_cover() const {
    return p_ == 2 ? group_->check_lemma3(opts_.exhaustive_limit)
                   : group_->check_lemma4(opts_.exhaustive_limit);
}

Certificate Engine::census() const { return group_->structure_census(opts_.exhaustive_limit); }

Certificate Engine::uniqueness() { return uniqueness_check(*group_, *rep_); }

Certificate Engine::crosscheck() {
    return eigenbasis_crosscheck(*group_, *rep_, generator(), opts_.float_tol);
}

Certificate Engine::theorem3() { return verify_theorem3(*group_, *rep_, generator()); }

Certificate Engine::theorem4() { return verify_theorem4(*group_, *rep_, generator()); }

SummandOrbit Engine::orbit() { return summand_orbit(*group_, *rep_, generator()); }

json Engine::generator_json() {
    return generator_to_json(group_->field(), opts_.lambda_index, generator());
}

json Engine::family_json() { return mub_family_to_json(p_, a_, family()); }

json Engine::generator_float_json(int digits) {
    json j = json{{"schema", kSchemaVersion},
                  {"kind", "generator_float"},
                  {"p", p_},
                  {"a", a_},
                  {"q", q()},
                  {"D", matrix_to_float_json(generator().matrix, digits)}};
    return j;
}

json Engine::family_float_json(int digits) {
    const MubFamily fam = family();
    json bases = json::array();
    for (const auto& b : fam.bases) bases.push_back(matrix_to_float_json(b, digits));
    return json{{"schema", kSchemaVersion},
                {"kind", "mub_family_float"},
                {"p", p_},
                {"a", a_},
                {"q", fam.q},
                {"count", fam.bases.size()},
                {"bases", bases}};
}

json Engine::profile_json() { return flatness_profile_to_json(p_, a_, profile()); }

json Engine::sl_decomposition_json() {
    Certificate cert = theorem3();
    std::vector<CartanSummand> summands;
    for (int i = 1; i <= static_cast<int>(q()) + 1; ++i)
        summands.push_back(build_sl_summand(*group_, *rep_, i, nullptr));
    return decomposition_to_json("sl", p_, a_, summands, generator(), nullptr, orbit(), cert);
}

json Engine::sp_decomposition_json() {
    Certificate cert = theorem4();
    const SymplecticForm form = compute_symplectic_form(*group_, *rep_, generator(), nullptr);
    std::vector<CartanSummand> summands;
    for (int i = 1; i <= static_cast<int>(q()) + 1; ++i)
        summands.push_back(build_sp_summand(*group_, *rep_, form, i, nullptr));
    return decomposition_to_json("sp", p_, a_, summands, generator(), &form.matrix, orbit(),
                                 cert);
}

json Engine::lie_profile_json() {
    const SummandOrbit orb = orbit();
    json cycle = json::array();
    for (int v : orb.next_index) cycle.push_back(v);
    return json{{"schema", kSchemaVersion},
                {"kind", "lie_profile"},
                {"p", p_},
                {"a", a_},
                {"q", q()},
                {"summand_count", orb.next_index.size()},
                {"orbit", cycle},
                {"single_cycle", orb.single_cycle}};
}

namespace {

bool matrix_is_identity(const ExactMatrix& m) {
    return m.rows() == m.cols() && m == ExactMatrix::identity(m.rows(), m.conductor());
}

void verify_generator_payload(Certificate& cert, const json& artifact,
                              const EngineOptions& opts) {
    const int p = artifact.at("p").get<int>();
    const int a = artifact.at("a").get<int>();
    const long q = artifact.at("q").get<long>();
    const long order = artifact.at("order").get<long>();
    const ExactMatrix d = matrix_from_json(artifact.at("D"));

    cert.record("declared_order_is_q_plus_1", "lemma5", order == q + 1, "");
    cert.record("shape", "section3",
                d.rows() == q && d.cols() == q &&
                    d.conductor() == (p == 2 ? 4 : p),
                "dimension or conductor mismatch");
    cert.record("unitary", "lemma5", is_unitary(d), "D D^dagger != I");
    cert.record("det_one", "lemma5", det(d).equals_rational(Rational(1)), "det D != 1");

    const ExactMatrix id = ExactMatrix::identity(static_cast<int>(q), d.conductor());
    bool exact_order = mat_pow(d, order) == id;
    for (long k = 1; k < order && exact_order; ++k)
        if (mat_pow(d, k) == id) exact_order = false;
    cert.record("multiplicative_order", "lemma5", exact_order, "order differs from declared");

    if (p == 2) {
        ExactMatrix power = d;
        for (long k = 1; k <= q; ++k) {
            std::string w;
            cert.record("power_flat_k" + std::to_string(k), "theorem1",
                        is_flat_witness(power, q, &w), w);
            power = mat_mul(power, d);
        }
    } else {
        const ExactMatrix dinv = dagger(d);
        ExactMatrix power = ExactMatrix::identity(static_cast<int>(q), d.conductor());
        for (long k = 1; k <= (q - 1) / 2; ++k) {
            power = mat_mul(power, dinv);
            std::string w;
            cert.record("power_flat_k_minus" + std::to_string(k), "theorem2",
                        is_flat_witness(power, q, &w), w);
        }
    }

    // Rebuild the pinned pipeline and check the conjugation identity of the
    // stored matrix against the reconstructed representation.
    const int lambda_index = artifact.at("provenance").at("lambda_index").get<int>();
    EngineOptions rebuild = opts;
    rebuild.lambda_index = lambda_index;
    Engine engine(p, a, rebuild);
    if (artifact.contains("field"))
        cert.record("modulus_matches_pinned_choice", "section2",
                    artifact.at("field").at("modulus").get<std::vector<int>>() ==
                        engine.group().field().modulus(),
                    "stored modulus differs from the deterministic one");
    bool intertwines = true;
    std::string witness;
    const FieldSpec& F = engine.group().field();
    for (long c = 0; c < F.q2() && intertwines; ++c) {
        const GroupElement x = engine.group().make(static_cast<int>(c), 0);
        if (mat_mul(engine.rep().evaluate(x), d) !=
            mat_mul(d, engine.rep().evaluate(engine.group().sigma(x, 1)))) {
            intertwines = false;
            witness = "transversal element " + std::to_string(c);
        }
    }
    cert.record("conjugates_rep_to_sigma_twist", "section3", intertwines, witness);
}

void verify_family_payload(Certificate& cert, const json& artifact) {
    const int p = artifact.at("p").get<int>();
    const long q = artifact.at("q").get<long>();
    const bool full = artifact.at("family").get<std::string>() == "full";
    cert.record("family_parity_matches_p", "theorem1", full == (p == 2), "");

    std::vector<ExactMatrix> bases;
    for (const auto& b : artifact.at("bases")) bases.push_back(matrix_from_json(b));
    cert.record("count", full ? "theorem1" : "theorem2",
                static_cast<long>(bases.size()) == (full ? q + 1 : (q + 1) / 2) &&
                    bases.size() == artifact.at("count").get<size_t>(),
                "family size mismatch");
    if (bases.empty()) return;

    cert.record("first_basis_identity", "section4", matrix_is_identity(bases[0]), "");
    bool unitary = true;
    std::string uw;
    for (size_t i = 0; i < bases.size(); ++i)
        if (!is_unitary(bases[i])) {
            unitary = false;
            uw = "basis " + std::to_string(i);
        }
    cert.record("bases_unitary", "section1", unitary, uw);

    // Quadratic pairwise route, independent of how the family was produced:
    // U_i^dagger U_j must be flat for every pair.
    bool unbiased = true;
    std::string witness;
    for (size_t i = 0; i < bases.size() && unbiased; ++i)
        for (size_t j = i + 1; j < bases.size(); ++j) {
            std::string w;
            if (!is_flat_witness(mat_mul(dagger(bases[i]), bases[j]), q, &w)) {
                unbiased = false;
                witness = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + w;
                break;
            }
        }
    cert.record("pairwise_unbiased", full ? "theorem1" : "theorem2", unbiased, witness);
}

void verify_fixture_payload(Certificate& cert, const json& artifact) {
    const ExactMatrix m = matrix_from_json(artifact.at("matrix"));
    const long order = artifact.at("order").get<long>();
    const long q = m.rows();
    const ExactMatrix id = ExactMatrix::identity(m.rows(), m.conductor());

    cert.record("unitary", "section4_example", is_unitary(m), "");
    cert.record("det_one", "section4_example", det(m).equals_rational(Rational(1)), "");
    bool exact_order = mat_pow(m, order) == id;
    for (long k = 1; k < order && exact_order; ++k)
        if (mat_pow(m, k) == id) exact_order = false;
    cert.record("multiplicative_order", "section4_example", exact_order, "");
    for (const auto& kj : artifact.at("flat_powers")) {
        const long k = kj.get<long>();
        std::string w;
        cert.record("power_flat_k" + std::to_string(k), "section4_example",
                    is_flat_witness(mat_pow(m, k), q, &w), w);
    }
}

void verify_decomposition_payload(Certificate& cert, const json& artifact,
                                  const EngineOptions& opts) {
    const std::string algebra = artifact.at("algebra").get<std::string>();
    const int p = artifact.at("p").get<int>();
    const int a = artifact.at("a").get<int>();
    const long q = artifact.at("q").get<long>();
    const ExactMatrix d = matrix_from_json(artifact.at("D"));
    const bool is_sp = algebra == "sp";

    std::vector<std::vector<ExactMatrix>> summands;
    for (const auto& s : artifact.at("summands")) {
        std::vector<ExactMatrix> basis;
        for (const auto& b : s.at("basis")) basis.push_back(matrix_from_json(b));
        summands.push_back(std::move(basis));
    }
    cert.record("summand_count", is_sp ? "theorem4" : "theorem3",
                static_cast<long>(summands.size()) == q + 1, "");

    const long dim = is_sp ? q / 2 : q - 1;
    bool per_summand = true;
    std::string witness;
    for (size_t i = 0; i < summands.size() && per_summand; ++i) {
        for (const auto& m : summands[i])
            if (!trace(m).is_zero()) {
                per_summand = false;
                witness = "nonzero trace in summand " + std::to_string(i + 1);
            }
        if (span_rank(summands[i]) != dim) {
            per_summand = false;
            witness = "summand " + std::to_string(i + 1) + " has wrong dimension";
        }
        for (size_t u = 0; u < summands[i].size() && per_summand; ++u)
            for (size_t v = u + 1; v < summands[i].size(); ++v)
                if (mat_mul(summands[i][u], summands[i][v]) !=
                    mat_mul(summands[i][v], summands[i][u])) {
                    per_summand = false;
                    witness = "summand " + std::to_string(i + 1) + " is not abelian";
                    break;
                }
    }
    cert.record("summands_wellformed", is_sp ? "theorem4" : "theorem3", per_summand, witness);

    std::vector<ExactMatrix> all;
    for (const auto& s : summands) all.insert(all.end(), s.begin(), s.end());
    const long expect_rank = is_sp ? q * (q + 1) / 2 : q * q - 1;
    cert.record("global_rank", is_sp ? "theorem4" : "theorem3", span_rank(all) == expect_rank,
                "rank " + std::to_string(span_rank(all)));

    bool ortho = true;
    for (size_t i = 0; i < summands.size() && ortho; ++i)
        for (size_t j = i + 1; j < summands.size() && ortho; ++j)
            for (const auto& u : summands[i]) {
                for (const auto& v : summands[j])
                    if (!trace_of_product(u, v).is_zero()) {
                        ortho = false;
                        break;
                    }
                if (!ortho) break;
            }
    cert.record("cross_summand_trace_orthogonality", is_sp ? "theorem4" : "theorem3", ortho,
                "");

    const ExactMatrix d_inv = dagger(d);
    const auto orbit = artifact.at("orbit").get<std::vector<int>>();
    bool orbit_ok = orbit.size() == summands.size();
    for (size_t i = 0; i < summands.size() && orbit_ok; ++i) {
        const int target = orbit[i];
        if (target < 1 || target > static_cast<int>(summands.size())) {
            orbit_ok = false;
            break;
        }
        for (const auto& h : summands[i])
            if (!span_membership(mat_mul(mat_mul(d_inv, h), d),
                                 summands[static_cast<size_t>(target - 1)])) {
                orbit_ok = false;
                break;
            }
    }
    cert.record("orbit_under_D", is_sp ? "theorem4" : "theorem3", orbit_ok,
                "stored orbit does not match conjugation");

    if (is_sp) {
        const ExactMatrix s = matrix_from_json(artifact.at("S"));
        cert.record("form_skew_symmetric", "section6",
                    transpose(s) == mat_scale(s, CyclotomicNumber(s.conductor(), Rational(-1))),
                    "");
        cert.record("form_invertible", "section6", !det(s).is_zero(), "");
        cert.record("form_invariant_under_D", "section6",
                    mat_mul(mat_mul(d, s), transpose(d)) == s, "");
        bool membership = true;
        for (const auto& summand : summands)
            for (const auto& m : summand)
                if (mat_add(mat_mul(m, s), mat_mul(s, transpose(m))) !=
                    ExactMatrix(m.rows(), m.cols(), m.conductor()))
                    membership = false;
        cert.record("summands_in_symplectic_algebra", "section6", membership, "");

        // Invariance under the representation needs the rebuilt X.
        Engine engine(p, a, opts);
        bool invariant = true;
        const FieldSpec& F = engine.group().field();
        for (long c = 0; c < F.q2() && invariant; ++c) {
            const ExactMatrix x =
                engine.rep().evaluate(engine.group().make(static_cast<int>(c), 0));
            if (mat_mul(mat_mul(x, s), transpose(x)) != s) invariant = false;
        }
        cert.record("form_invariant_under_rep", "section6", invariant, "");
    }
}

void verify_profile_payload(Certificate& cert, const json& artifact,
                            const EngineOptions& opts) {
    const int p = artifact.at("p").get<int>();
    const int a = artifact.at("a").get<int>();
    Engine engine(p, a, opts);
    const FlatnessProfile prof = engine.profile();
    cert.merge(prof.certificate);

    bool matches = artifact.at("records").size() == prof.records.size();
    for (size_t k = 0; matches && k < prof.records.size(); ++k) {
        const json& r = artifact.at("records")[k];
        matches = r.at("k").get<long>() == prof.records[k].k &&
                  r.at("flat").get<bool>() == prof.records[k].flat &&
                  r.at("diagonal_flat").get<bool>() == prof.records[k].diagonal_flat;
    }
    cert.record("records_match_recomputation", "section4", matches, "profile drifted");
}

} // namespace

Certificate verify_artifact(const json& artifact, const EngineOptions& opts) {
    if (!artifact.is_object() || !artifact.contains("schema") || !artifact.contains("kind"))
        throw input_error("not a recognizable artifact file");
    if (artifact.at("schema").get<std::string>() != kSchemaVersion)
        throw input_error("unsupported schema version");
    const std::string kind = artifact.at("kind").get<std::string>();

    Certificate cert("verify_" + kind);
    if (kind == "generator")
        verify_generator_payload(cert, artifact, opts);
    else if (kind == "mub_family")
        verify_family_payload(cert, artifact);
    else if (kind == "fixture")
        verify_fixture_payload(cert, artifact);
    else if (kind == "decomposition")
        verify_decomposition_payload(cert, artifact, opts);
    else if (kind == "flatness_profile")
        verify_profile_payload(cert, artifact, opts);
    else
        throw input_error("unknown artifact kind: " + kind);
    return cert;
}

} // namespace mubforge
