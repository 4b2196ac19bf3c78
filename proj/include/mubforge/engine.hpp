#pragma once

#include <memory>
#include <optional>
#include <string>

#include "mubforge/serialize.hpp"

namespace mubforge {

struct EngineOptions {
    int lambda_index = 0;
    int seed_index = 0;
    long max_q = 32;
    long exhaustive_limit = 65536;
    double float_tol = 1e-9;
};

/// End-to-end pipeline for one (p, a): field, group, characters, induced
/// representation, generator, families and decompositions. Construction is
/// deterministic, so two engines with the same inputs produce byte-identical
/// artifacts.
class Engine {
public:
    Engine(int p, int a, EngineOptions opts = {});

    int p() const { return p_; }
    int a() const { return a_; }
    long q() const { return group_->field().q(); }
    const EngineOptions& options() const { return opts_; }

    const Gq& group() const { return *group_; }
    const UnitaryRep& rep() const { return *rep_; }
    const Generator& generator();

    MubFamily family();
    FlatnessProfile profile();

    Certificate character_certificates() const;
    Certificate lemma1() const;
    /// lemma3 for p = 2, lemma4 otherwise.
    Certificate subgroup_cover() const;
    Certificate census() const;
    Certificate uniqueness();
    Certificate crosscheck();
    Certificate theorem3();
    Certificate theorem4();
    SummandOrbit orbit();

    json generator_json();
    json family_json();
    json family_float_json(int digits);
    json generator_float_json(int digits);
    json profile_json();
    json sl_decomposition_json();
    json sp_decomposition_json();
    json lie_profile_json();

private:
    int p_, a_;
    EngineOptions opts_;
    std::shared_ptr<const FieldSpec> spec_;
    std::unique_ptr<Gq> group_;
    std::optional<UnitaryRep> rep_;
    std::optional<Generator> generator_;
};

/// Recomputes every invariant of a previously exported artifact from its
/// payload; stored certificates are ignored. Dispatches on the "kind" field.
Certificate verify_artifact(const json& artifact, const EngineOptions& opts = {});

} // namespace mubforge
