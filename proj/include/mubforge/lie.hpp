#pragma once

#include <vector>

#include "mubforge/certificate.hpp"
#include "mubforge/group.hpp"
#include "mubforge/intertwiner.hpp"
#include "mubforge/matrix.hpp"
#include "mubforge/representation.hpp"

namespace mubforge {

/// One summand of an orthogonal Cartan decomposition: the span of the
/// non-identity X(x_{i,j}) for the sl case (dimension q-1), or of one
/// representative per +-pair of order-4 images in X(A_i) for the sp case
/// (dimension q/2).
struct CartanSummand {
    int index = 0;
    std::string algebra; // "sl" or "sp"
    std::vector<ExactMatrix> basis;
};

/// The invariant skew form: S^T = -S, S invertible, X(x) S X(x)^T = S for
/// all x, and D S D^T = S.
struct SymplecticForm {
    ExactMatrix matrix;
    int seed_row = 0;
    int seed_col = 1;
};

CartanSummand build_sl_summand(const Gq& group, const UnitaryRep& rep, int i,
                               Certificate* cert = nullptr);

/// Full certification of the sl decomposition: q+1 summands of dimension
/// q-1 with global rank q^2-1, exact cross-summand trace orthogonality,
/// centralizer of dimension q per summand (the Cartan property), and a
/// verified (q+1)-cycle of summands under conjugation by D.
Certificate verify_theorem3(const Gq& group, const UnitaryRep& rep, const Generator& gen);

/// S = sum over a Z-transversal of X(g) K X(g)^T for the first
/// skew-symmetric matrix-unit seed K giving a nonzero result. Central
/// contributions are trivial because the central character is +-1-valued
/// when p = 2. All SymplecticForm invariants are certified, including
/// proportionality of a second seed (the invariant form is unique up to
/// scale).
SymplecticForm compute_symplectic_form(const Gq& group, const UnitaryRep& rep,
                                       const Generator& gen, Certificate* cert = nullptr);

CartanSummand build_sp_summand(const Gq& group, const UnitaryRep& rep,
                               const SymplecticForm& form, int i,
                               Certificate* cert = nullptr);

/// Full certification of the sp decomposition: q+1 summands of dimension
/// q/2 filling dimension q(q+1)/2, order-4 count q per X(A_i), pairwise
/// trace orthogonality, abelian summands, centralizer-in-sp of dimension
/// q/2, and the (q+1)-cycle under D.
Certificate verify_theorem4(const Gq& group, const UnitaryRep& rep, const Generator& gen);

/// Orbit of conjugation by D on the span summands. For p = 2 this is the
/// certified (q+1)-cycle; for odd p it is reported without any pass/fail
/// claim (the half-family summands are distinct for i up to (q+1)/2).
struct SummandOrbit {
    std::vector<int> next_index; // next_index[i-1] = j with D^{-1} H_i D = H_j
    bool single_cycle = false;
};
SummandOrbit summand_orbit(const Gq& group, const UnitaryRep& rep, const Generator& gen);

} // namespace mubforge
