// Command-line front end: generate exact artifacts, re-verify them from
// disk, build the Lie decompositions, profile flatness, and run the built-in
// fixtures. Exit codes: 0 success, 1 certification failure, 2 input error,
// 3 resource-limit error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "mubforge/engine.hpp"
#include "mubforge/serialize.hpp"

namespace fs = std::filesystem;
using namespace mubforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertification = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

// Atomic file write: temp file in the same directory, then rename.
void write_file(const fs::path& path, const std::string& text) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot write " + tmp.string());
        out << text;
    }
    fs::rename(tmp, path);
}

void print_certificate(const Certificate& cert) {
    for (const auto& c : cert.checks()) {
        std::cout << (c.passed ? "  [pass] " : "  [FAIL] ") << cert.subject() << "."
                  << c.clause << " (" << c.tag << ")";
        if (!c.passed && !c.witness.empty()) std::cout << " -- " << c.witness;
        std::cout << "\n";
    }
}

std::string matrix_grid(const ExactMatrix& m) {
    // Column-aligned grid of exact entries.
    std::vector<std::string> cells;
    size_t width = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            cells.push_back(m.at(i, j).str());
            width = std::max(width, cells.back().size());
        }
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        out += "  [ ";
        for (int j = 0; j < m.cols(); ++j) {
            std::string c = cells[static_cast<size_t>(i * m.cols() + j)];
            c.resize(width, ' ');
            out += c + (j + 1 < m.cols() ? "  " : "");
        }
        out += " ]\n";
    }
    return out;
}

struct CommonArgs {
    int p = 2;
    int a = 1;
    std::string out_dir = ".";
    std::string format = "exact-json";
    int digits = 15;
    int lambda_index = 0;
    int seed_index = 0;
    long max_q = 32;
    long exhaustive_limit = 65536;
};

EngineOptions options_from(const CommonArgs& args, long default_max) {
    EngineOptions opts;
    opts.lambda_index = args.lambda_index;
    opts.seed_index = args.seed_index;
    opts.max_q = args.max_q == 32 ? default_max : args.max_q;
    opts.exhaustive_limit = args.exhaustive_limit;
    return opts;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--p", args.p, "Characteristic prime p");
    cmd->add_option("--a", args.a, "Exponent a; the dimension is q = p^a");
    cmd->add_option("--out", args.out_dir, "Output directory");
    cmd->add_option("--format", args.format, "exact-json | float-json | text")
        ->check(CLI::IsMember({"exact-json", "float-json", "text"}));
    cmd->add_option("--digits", args.digits, "Digits for float exports");
    cmd->add_option("--lambda-index", args.lambda_index,
                    "Pick the k-th admissible central character instead of the first");
    cmd->add_option("--seed-index", args.seed_index,
                    "Starting matrix-unit seed for the conjugating-matrix sum");
    cmd->add_option("--max-q", args.max_q, "Resource cap on q");
    cmd->add_option("--exhaustive-limit", args.exhaustive_limit,
                    "Group-order bound for exhaustive scans; sampling beyond it");
}

int run_generate(const CommonArgs& args) {
    Engine engine(args.p, args.a, options_from(args, 32));
    const Generator& gen = engine.generator();
    const MubFamily fam = engine.family();

    Certificate summary("generate");
    summary.merge(gen.certificate);
    summary.merge(fam.certificate);
    summary.merge(engine.character_certificates());
    summary.merge(engine.lemma1());
    summary.merge(engine.subgroup_cover());
    summary.merge(engine.census());

    const fs::path dir(args.out_dir);
    fs::create_directories(dir);
    write_file(dir / "generator.json", dump_canonical(engine.generator_json()));
    write_file(dir / "mub_family.json", dump_canonical(engine.family_json()));
    if (args.format == "float-json") {
        write_file(dir / "generator.float.json",
                   dump_canonical(engine.generator_float_json(args.digits)));
        write_file(dir / "mub_family.float.json",
                   dump_canonical(engine.family_float_json(args.digits)));
    }

    std::string text;
    text += "q = " + std::to_string(engine.q()) + " (p = " + std::to_string(args.p) +
            ", a = " + std::to_string(args.a) + ")\n";
    text += "bases: " + std::to_string(fam.bases.size()) +
            (fam.full_family ? " (full family)\n" : " (half family, inverse powers)\n");
    text += "generator of order " + std::to_string(gen.order) + ":\n" +
            matrix_grid(gen.matrix);
    text += summary.passed() ? "all certificates passed\n"
                             : "FAILED: " + summary.first_failure() + "\n";
    write_file(dir / "summary.txt", text);
    if (args.format == "text") std::cout << text;
    print_certificate(summary);

    if (!summary.passed()) {
        std::cerr << "certification failure: " << summary.first_failure() << "\n";
        return kExitCertification;
    }
    std::cout << "generated " << fam.bases.size() << " mutually unbiased bases at q = "
              << engine.q() << "\n";
    return kExitOk;
}

int run_verify(const std::string& path, const CommonArgs& args) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read " + path);
    json artifact;
    try {
        in >> artifact;
    } catch (const json::exception& e) {
        throw input_error("parse error in " + path + ": " + e.what());
    }
    EngineOptions opts;
    opts.max_q = args.max_q;
    opts.exhaustive_limit = args.exhaustive_limit;
    const Certificate cert = verify_artifact(artifact, opts);
    print_certificate(cert);
    if (!cert.passed()) {
        std::cerr << "verification failed: " << cert.first_failure() << "\n";
        return kExitCertification;
    }
    std::cout << path << ": verified\n";
    return kExitOk;
}

int run_lie(const CommonArgs& args, bool profile_mode) {
    if (args.p != 2 && !profile_mode)
        throw input_error("the certified decompositions require p = 2; "
                          "use --profile for odd p");

    Engine engine(args.p, args.a, options_from(args, 8));
    const fs::path dir(args.out_dir);
    fs::create_directories(dir);

    if (args.p != 2) {
        write_file(dir / "lie_profile.json", dump_canonical(engine.lie_profile_json()));
        const SummandOrbit orbit = engine.orbit();
        std::cout << "orbit of conjugation on " << orbit.next_index.size()
                  << " summands:";
        for (int v : orbit.next_index) std::cout << " " << v;
        std::cout << (orbit.single_cycle ? " (single cycle)" : "") << "\n";
        return kExitOk;
    }

    const json sl = engine.sl_decomposition_json();
    const json sp = engine.sp_decomposition_json();
    write_file(dir / "sl_decomp.json", dump_canonical(sl));
    write_file(dir / "sp_decomp.json", dump_canonical(sp));

    Certificate summary("lie");
    summary.merge(engine.theorem3());
    summary.merge(engine.theorem4());
    print_certificate(summary);
    if (!summary.passed()) {
        std::cerr << "certification failure: " << summary.first_failure() << "\n";
        return kExitCertification;
    }
    std::cout << "sl and sp decompositions certified at q = " << engine.q() << "\n";
    return kExitOk;
}

int run_profile(const CommonArgs& args) {
    Engine engine(args.p, args.a, options_from(args, 32));
    const FlatnessProfile prof = engine.profile();
    const fs::path dir(args.out_dir);
    fs::create_directories(dir);
    write_file(dir / "flatness_profile.json", dump_canonical(engine.profile_json()));

    std::cout << "k    flat  diagonal_flat\n";
    for (const auto& r : prof.records)
        std::printf("%-4ld %-5s %s\n", r.k, r.flat ? "yes" : "no",
                    r.diagonal_flat ? "yes" : "no");
    print_certificate(prof.certificate);
    return prof.certificate.passed() ? kExitOk : kExitCertification;
}

int run_fixtures(const CommonArgs& args, bool write_out) {
    const Certificate q2 = verify_fixture_q2();
    const Certificate real4 = verify_fixture_real4();

    std::cout << "2x2 fixture ((1+i)/2 scaling):\n" << matrix_grid(fixture_q2_matrix());
    std::cout << "4x4 real fixture:\n" << matrix_grid(fixture_real4_matrix());
    print_certificate(q2);
    print_certificate(real4);

    // Informational: how the pipeline's canonical 2x2 generator relates to
    // the fixture.
    Engine engine(2, 1);
    std::cout << "canonical q=2 generator vs fixture: "
              << relate_to_fixture_q2(engine.generator().matrix) << "\n";

    if (write_out) {
        const fs::path dir(args.out_dir);
        fs::create_directories(dir);
        write_file(dir / "fixture_q2.json",
                   dump_canonical(fixture_to_json("q2", fixture_q2_matrix(), 3, {1, 2})));
        write_file(dir / "fixture_real4.json",
                   dump_canonical(fixture_to_json("real4", fixture_real4_matrix(), 3, {1, 2})));
    }

    if (!q2.passed() || !real4.passed()) {
        std::cerr << "fixture regression: "
                  << (q2.passed() ? real4.first_failure() : q2.first_failure()) << "\n";
        return kExitCertification;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and certification of mutually unbiased bases "
                 "generated by powers of a single unitary"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string verify_path;
    bool lie_profile = false;
    bool fixtures_write = false;

    CLI::App* generate = app.add_subcommand("generate", "build D and its power family");
    add_common(generate, args);

    CLI::App* verify = app.add_subcommand("verify", "re-check an exported artifact");
    verify->add_option("path", verify_path, "artifact JSON file")->required();
    verify->add_option("--max-q", args.max_q, "Resource cap on q");
    verify->add_option("--exhaustive-limit", args.exhaustive_limit, "Exhaustive scan bound");

    CLI::App* lie = app.add_subcommand("lie", "orthogonal Cartan decompositions");
    add_common(lie, args);
    lie->add_flag("--profile", lie_profile, "report-only orbit structure (odd p)");

    CLI::App* profile = app.add_subcommand("profile", "flatness of every power of D");
    add_common(profile, args);

    CLI::App* fixtures = app.add_subcommand("fixtures", "verify the built-in matrices");
    fixtures->add_option("--out", args.out_dir, "also export fixture JSON files here")
        ->each([&](const std::string&) { fixtures_write = true; });

    try {
        app.parse(argc, argv);
        if (generate->parsed()) return run_generate(args);
        if (verify->parsed()) return run_verify(verify_path, args);
        if (lie->parsed()) return run_lie(args, lie_profile);
        if (profile->parsed()) return run_profile(args);
        if (fixtures->parsed()) return run_fixtures(args, fixtures_write);
        return kExitInput;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const certification_error& e) {
        std::cerr << "certification failure: " << e.what() << "\n";
        return kExitCertification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
