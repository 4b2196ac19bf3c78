#include "mubforge/serialize.hpp"

#include <cstdio>

namespace mubforge {

json rational_to_json(const Rational& r) {
    return json::array({r.num_str(), r.den_str()});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw input_error("rational must be a [num, den] pair");
    return Rational::from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

json cyclotomic_to_json(const CyclotomicNumber& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(rational_to_json(c));
    return json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const json& j) {
    const int conductor = j.at("conductor").get<int>();
    if (!conductor_supported(conductor)) throw input_error("unsupported conductor in artifact");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return {conductor, std::move(coeffs)};
}

json matrix_to_json(const ExactMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(cyclotomic_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()},
                {"cols", m.cols()},
                {"conductor", m.conductor()},
                {"entries", entries}};
}

ExactMatrix matrix_from_json(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const int conductor = j.at("conductor").get<int>();
    if (rows <= 0 || cols <= 0 || rows > 64 || cols > 64)
        throw input_error("matrix dimensions out of range");
    ExactMatrix m(rows, cols, conductor);
    const json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows) throw input_error("bad entry grid");
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(entries[static_cast<size_t>(i)].size()) != cols)
            throw input_error("bad entry grid");
        for (int c = 0; c < cols; ++c)
            m.set(i, c, cyclotomic_from_json(entries[static_cast<size_t>(i)][static_cast<size_t>(c)]));
    }
    return m;
}

namespace {

std::string format_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

} // namespace

json matrix_to_float_json(const ExactMatrix& m, int digits) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            const auto z = m.at(i, j).embed();
            row.push_back(json::array(
                {format_double(z.real(), digits), format_double(z.imag(), digits)}));
        }
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()},
                {"cols", m.cols()},
                {"digits", digits},
                {"entries", entries}};
}

json field_spec_to_json(const FieldSpec& spec) {
    return json{{"p", spec.p()}, {"a", spec.a()}, {"modulus", spec.modulus()}};
}

json group_element_to_json(const GroupElement& x) {
    return json{{"a", x.a.coeffs()}, {"b", x.b.coeffs()}};
}

json certificate_to_json(const Certificate& cert) {
    json checks = json::array();
    for (const auto& c : cert.checks())
        checks.push_back(json{{"clause", c.clause},
                              {"tag", c.tag},
                              {"passed", c.passed},
                              {"witness", c.witness}});
    return json{{"subject", cert.subject()}, {"passed", cert.passed()}, {"checks", checks}};
}

json generator_to_json(const FieldSpec& spec, int lambda_index, const Generator& gen) {
    return json{{"schema", kSchemaVersion},
                {"kind", "generator"},
                {"field", field_spec_to_json(spec)},
                {"p", spec.p()},
                {"a", spec.a()},
                {"q", spec.q()},
                {"conductor", gen.matrix.conductor()},
                {"order", gen.order},
                {"D", matrix_to_json(gen.matrix)},
                {"provenance",
                 json{{"lambda_index", lambda_index},
                      {"seed", gen.seed_index},
                      {"d", cyclotomic_to_json(gen.det_raw)},
                      {"lambda_s", cyclotomic_to_json(gen.lambda_s)}}},
                {"certificate", certificate_to_json(gen.certificate)}};
}

json mub_family_to_json(int p, int a, const MubFamily& fam) {
    json bases = json::array();
    for (const auto& b : fam.bases) bases.push_back(matrix_to_json(b));
    return json{{"schema", kSchemaVersion},
                {"kind", "mub_family"},
                {"p", p},
                {"a", a},
                {"q", fam.q},
                {"family", fam.full_family ? "full" : "half"},
                {"count", fam.bases.size()},
                {"bases", bases},
                {"certificate", certificate_to_json(fam.certificate)}};
}

json decomposition_to_json(const std::string& algebra, int p, int a,
                           const std::vector<CartanSummand>& summands,
                           const Generator& gen, const ExactMatrix* sp_form,
                           const SummandOrbit& orbit, const Certificate& cert) {
    long q = 1;
    for (int k = 0; k < a; ++k) q *= p;
    json js = json::array();
    for (const auto& s : summands) {
        json basis = json::array();
        for (const auto& m : s.basis) basis.push_back(matrix_to_json(m));
        js.push_back(json{{"index", s.index}, {"basis", basis}});
    }
    json out{{"schema", kSchemaVersion},
             {"kind", "decomposition"},
             {"algebra", algebra},
             {"p", p},
             {"a", a},
             {"q", q},
             {"summands", js},
             {"D", matrix_to_json(gen.matrix)},
             {"orbit", orbit.next_index},
             {"single_cycle", orbit.single_cycle},
             {"certificate", certificate_to_json(cert)}};
    if (sp_form) out["S"] = matrix_to_json(*sp_form);
    return out;
}

json flatness_profile_to_json(int p, int a, const FlatnessProfile& prof) {
    json recs = json::array();
    for (const auto& r : prof.records)
        recs.push_back(json{{"k", r.k}, {"flat", r.flat}, {"diagonal_flat", r.diagonal_flat}});
    return json{{"schema", kSchemaVersion},
                {"kind", "flatness_profile"},
                {"p", p},
                {"a", a},
                {"q", prof.q},
                {"records", recs},
                {"certificate", certificate_to_json(prof.certificate)}};
}

json fixture_to_json(const std::string& name, const ExactMatrix& m, long order,
                     const std::vector<long>& flat_powers) {
    return json{{"schema", kSchemaVersion},
                {"kind", "fixture"},
                {"name", name},
                {"matrix", matrix_to_json(m)},
                {"order", order},
                {"flat_powers", flat_powers}};
}

std::string dump_canonical(const json& j) {
    // nlohmann objects iterate in sorted key order, so a plain dump is
    // already canonical; pin the indentation so output never drifts.
    return j.dump(2) + "\n";
}

} // namespace mubforge
