#pragma once

#include <string>

#include <json.hpp>

#include "mubforge/certificate.hpp"
#include "mubforge/cyclotomic.hpp"
#include "mubforge/field.hpp"
#include "mubforge/group.hpp"
#include "mubforge/intertwiner.hpp"
#include "mubforge/lie.hpp"
#include "mubforge/matrix.hpp"
#include "mubforge/mub.hpp"

namespace mubforge {

/// Schema version stamped into every artifact file.
inline constexpr const char* kSchemaVersion = "mubforge-1";

using json = nlohmann::json;

// Exact encodings. Integers travel as decimal strings so round-trips are
// exact at any size.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json cyclotomic_to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const json& j);

json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);
/// Same shape with [re, im] doubles, printed to the requested digits.
json matrix_to_float_json(const ExactMatrix& m, int digits);

json field_spec_to_json(const FieldSpec& spec);
json group_element_to_json(const GroupElement& x);

json certificate_to_json(const Certificate& cert);

/// Artifact files. Each carries {"schema", "kind", ...} and verify_artifact
/// re-derives every invariant from the payload, ignoring any stored
/// certificate.
json generator_to_json(const FieldSpec& spec, int lambda_index, const Generator& gen);
json mub_family_to_json(int p, int a, const MubFamily& fam);
json decomposition_to_json(const std::string& algebra, int p, int a,
                           const std::vector<CartanSummand>& summands,
                           const Generator& gen, const ExactMatrix* sp_form,
                           const SummandOrbit& orbit, const Certificate& cert);
json flatness_profile_to_json(int p, int a, const FlatnessProfile& prof);
json fixture_to_json(const std::string& name, const ExactMatrix& m, long order,
                     const std::vector<long>& flat_powers);

/// Deterministic serialization (sorted keys, no whitespace dependence):
/// identical inputs produce byte-identical text.
std::string dump_canonical(const json& j);

} // namespace mubforge
