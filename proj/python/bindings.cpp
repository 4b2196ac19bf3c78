// Python bindings: a thin JSON-string surface over the exact pipeline. All
// numerically meaningful data crosses the boundary as exact decimal strings;
// the Python package parses them into dicts.

#include <pybind11/pybind11.h>

#include <string>

#include "mubforge/engine.hpp"
#include "mubforge/serialize.hpp"

namespace py = pybind11;
using namespace mubforge;

namespace {

EngineOptions make_options(int lambda_index, int seed_index, long max_q) {
    EngineOptions opts;
    opts.lambda_index = lambda_index;
    opts.seed_index = seed_index;
    opts.max_q = max_q;
    return opts;
}

std::string generator_json_str(int p, int a, int lambda_index, int seed_index, long max_q) {
    Engine engine(p, a, make_options(lambda_index, seed_index, max_q));
    return dump_canonical(engine.generator_json());
}

std::string family_json_str(int p, int a, int lambda_index, int seed_index, long max_q) {
    Engine engine(p, a, make_options(lambda_index, seed_index, max_q));
    return dump_canonical(engine.family_json());
}

std::string family_float_json_str(int p, int a, int digits, long max_q) {
    Engine engine(p, a, make_options(0, 0, max_q));
    return dump_canonical(engine.family_float_json(digits));
}

std::string profile_json_str(int p, int a, long max_q) {
    Engine engine(p, a, make_options(0, 0, max_q));
    return dump_canonical(engine.profile_json());
}

std::string decomposition_json_str(int p, int a, const std::string& algebra, long max_q) {
    Engine engine(p, a, make_options(0, 0, max_q));
    if (algebra == "sl") return dump_canonical(engine.sl_decomposition_json());
    if (algebra == "sp") return dump_canonical(engine.sp_decomposition_json());
    throw input_error("algebra must be 'sl' or 'sp'");
}

std::string lie_profile_json_str(int p, int a, long max_q) {
    Engine engine(p, a, make_options(0, 0, max_q));
    return dump_canonical(engine.lie_profile_json());
}

std::string structure_json_str(int p, int a, long max_q) {
    Engine engine(p, a, make_options(0, 0, max_q));
    json out{{"schema", kSchemaVersion},
             {"kind", "structure_report"},
             {"p", p},
             {"a", a},
             {"q", engine.q()},
             {"characters", certificate_to_json(engine.character_certificates())},
             {"lemma1", certificate_to_json(engine.lemma1())},
             {"subgroup_cover", certificate_to_json(engine.subgroup_cover())},
             {"census", certificate_to_json(engine.census())}};
    return dump_canonical(out);
}

std::string verify_json_str(const std::string& text) {
    json artifact;
    try {
        artifact = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("artifact parse error: ") + e.what());
    }
    return dump_canonical(certificate_to_json(verify_artifact(artifact)));
}

std::string crosscheck_json_str(int p, int a, double tol, long max_q) {
    EngineOptions opts = make_options(0, 0, max_q);
    opts.float_tol = tol;
    Engine engine(p, a, opts);
    return dump_canonical(certificate_to_json(engine.crosscheck()));
}

std::string fixtures_json_str() {
    json out{{"schema", kSchemaVersion},
             {"kind", "fixture_report"},
             {"q2", certificate_to_json(verify_fixture_q2())},
             {"real4", certificate_to_json(verify_fixture_real4())}};
    return dump_canonical(out);
}

std::string fixture_artifact_json_str(const std::string& name) {
    if (name == "q2")
        return dump_canonical(fixture_to_json("q2", fixture_q2_matrix(), 3, {1, 2}));
    if (name == "real4")
        return dump_canonical(fixture_to_json("real4", fixture_real4_matrix(), 3, {1, 2}));
    throw input_error("unknown fixture: " + name);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact construction and certification of mutually unbiased bases "
              "generated by powers of a single unitary matrix";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_ValueError);
    py::register_exception<certification_error>(m, "CertificationError", PyExc_RuntimeError);

    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    m.def("generator_json", &generator_json_str, py::arg("p"), py::arg("a"),
          py::arg("lambda_index") = 0, py::arg("seed_index") = 0, py::arg("max_q") = 32,
          "Exact generator artifact as a JSON string");
    m.def("family_json", &family_json_str, py::arg("p"), py::arg("a"),
          py::arg("lambda_index") = 0, py::arg("seed_index") = 0, py::arg("max_q") = 32,
          "Exact mutually-unbiased family artifact as a JSON string");
    m.def("family_float_json", &family_float_json_str, py::arg("p"), py::arg("a"),
          py::arg("digits") = 15, py::arg("max_q") = 32,
          "Floating-point export of the family (never used for verification)");
    m.def("flatness_profile_json", &profile_json_str, py::arg("p"), py::arg("a"),
          py::arg("max_q") = 32);
    m.def("decomposition_json", &decomposition_json_str, py::arg("p"), py::arg("a"),
          py::arg("algebra"), py::arg("max_q") = 8,
          "Certified orthogonal Cartan decomposition ('sl' or 'sp'), p = 2 only");
    m.def("lie_profile_json", &lie_profile_json_str, py::arg("p"), py::arg("a"),
          py::arg("max_q") = 32, "Report-only conjugation orbit of the summands");
    m.def("structure_json", &structure_json_str, py::arg("p"), py::arg("a"),
          py::arg("max_q") = 32,
          "Character, subgroup-cover and census certificates in one report");
    m.def("verify_json", &verify_json_str, py::arg("artifact_text"),
          "Re-verify an exported artifact from scratch; returns a certificate");
    m.def("crosscheck_json", &crosscheck_json_str, py::arg("p"), py::arg("a"),
          py::arg("tol") = 1e-9, py::arg("max_q") = 32,
          "Floating-point eigenbasis cross-check certificate");
    m.def("fixtures_json", &fixtures_json_str, "Certificates for the built-in matrices");
    m.def("fixture_artifact_json", &fixture_artifact_json_str, py::arg("name"),
          "Exportable artifact for a built-in fixture ('q2' or 'real4')");
}
