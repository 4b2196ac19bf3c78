#pragma once

#include <string>
#include <vector>

#include "mubforge/certificate.hpp"
#include "mubforge/group.hpp"
#include "mubforge/intertwiner.hpp"
#include "mubforge/matrix.hpp"
#include "mubforge/representation.hpp"

namespace mubforge {

/// True iff every entry of the q x q matrix has squared modulus exactly
/// 1/q. Two orthonormal bases U, V are mutually unbiased exactly when
/// U V^{-1} is flat, so flatness of D^k certifies unbiasedness of the
/// power family.
bool is_flat(const ExactMatrix& m, long q);
/// As above, reporting the first offending entry.
bool is_flat_witness(const ExactMatrix& m, long q, std::string* witness);

/// The mutually unbiased family generated by powers of D: the full family
/// I, D, ..., D^q for p = 2, and the half family I, D^{-1}, ...,
/// D^{-(q-1)/2} for odd p.
struct MubFamily {
    long q = 0;
    bool full_family = false; // true for p = 2
    std::vector<ExactMatrix> bases;
    Certificate certificate{"mub_family"};
};
MubFamily generate_family(const Gq& group, const Generator& gen);

/// Flatness of every power k = 1..q+1, reported without asserting anything
/// beyond the theorems. For odd non-square q the involutory power
/// D^{(q+1)/2} must NOT have a uniformly flat diagonal; a flat diagonal
/// there would contradict the involutory-unitary obstruction and signals an
/// arithmetic bug.
struct FlatnessRecord {
    long k = 0;
    bool flat = false;
    bool diagonal_flat = false;
};
struct FlatnessProfile {
    long q = 0;
    std::vector<FlatnessRecord> records;
    Certificate certificate{"flatness_profile"};
};
FlatnessProfile flatness_profile(const Gq& group, const Generator& gen);

/// Floating-point oracle for the eigenvector route: numerically build a
/// simultaneous eigenbasis B of the commuting family C_1 = {X(x_{1,j})},
/// check that the columns of D^{-(i-1)} B are simultaneous eigenvectors of
/// C_i within tol, and that those bases are pairwise unbiased within tol.
/// Also certifies, exactly, the trace orthogonality
/// tr(X(x)^dagger X(y)) = 0 across distinct families and commutativity
/// inside each family. The float path is the only place any tolerance
/// appears.
Certificate eigenbasis_crosscheck(const Gq& group, const UnitaryRep& rep,
                                  const Generator& gen, double tol = 1e-9);

/// The 2x2 matrix (1+i)/2 [[-1, i], [1, i]]: unitary of order 3 with flat
/// powers, generating three mutually unbiased bases of C^2.
ExactMatrix fixture_q2_matrix();
/// The real orthogonal 4x4 matrix of order 3 with entries +-1/2; doubling
/// it gives a Hadamard matrix.
ExactMatrix fixture_real4_matrix();

Certificate verify_fixture_q2();
Certificate verify_fixture_real4();

/// How a candidate 2x2 generator relates to the fixture matrix: "equal",
/// "permutation_conjugate", or "sibling" (both satisfy all generator
/// invariants without being conjugate by a permutation).
std::string relate_to_fixture_q2(const ExactMatrix& d);

} // namespace mubforge
