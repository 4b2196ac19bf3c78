#pragma once

#include "mubforge/certificate.hpp"
#include "mubforge/group.hpp"
#include "mubforge/matrix.hpp"
#include "mubforge/representation.hpp"

namespace mubforge {

/// The normalized conjugating matrix: unitary, det D = 1, D^{q+1} = I, and
/// D^{-1} X(x) D = X(sigma(x)) for every x. Given the pinned upstream
/// choices it is unique (any two candidates differ by a scalar zeta with
/// zeta^{q+1} = zeta^q = 1, hence zeta = 1), so the artifact's D is
/// canonical and reproducible.
struct Generator {
    ExactMatrix matrix;
    long order = 0;       // q + 1
    int seed_index = 0;   // row-major matrix-unit seed that produced T
    CyclotomicNumber det_raw;    // d   = det T before normalization
    CyclotomicNumber lambda_s;   // T^{q+1} = lambda_s I
    Certificate certificate{"generator"};
};

/// T = sum over a transversal of Z of X(g) E X(sigma(g))^{-1} with E the
/// matrix unit picked by seed_index (row-major). Summing over Z-cosets
/// suffices: central factors cancel because sigma fixes Z pointwise. Seeds
/// are tried in row-major order starting at seed_index and the first
/// nonzero T is returned; a nonzero intertwiner between irreducibles is
/// automatically invertible.
struct RawIntertwiner {
    ExactMatrix matrix;
    int seed_index = 0;
};
RawIntertwiner raw_intertwiner(const Gq& group, const UnitaryRep& rep, int seed_index = 0);

/// Scales T to D = d * lambda_s^{-1} * T where T^{q+1} = lambda_s I and
/// d = det T, then certifies every Generator invariant exactly. Throws
/// certification_error if T^{q+1} fails to be scalar.
Generator normalize(const Gq& group, const UnitaryRep& rep, const RawIntertwiner& raw);

/// Convenience: raw intertwiner then normalize.
Generator build_generator(const Gq& group, const UnitaryRep& rep, int seed_index = 0);

/// Intertwiners from distinct seeds are proportional (one-dimensional
/// intertwiner space) and normalize to the identical matrix; scaling T by a
/// rational leaves D unchanged.
Certificate uniqueness_check(const Gq& group, const UnitaryRep& rep);

} // namespace mubforge
