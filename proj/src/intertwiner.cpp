#include "mubforge/intertwiner.hpp"

#include <string>

namespace mubforge {

namespace {

// One term X(g) E_{kl} X(sigma(g))^{-1}: with M1 = X(g) and
// M2 = X(sigma(g^{-1})), the product is the outer product of column k of M1
// with row l of M2, and both are monomial, so the term has a single nonzero
// entry.
void accumulate_term(ExactMatrix& acc, const ExactMatrix& m1, const ExactMatrix& m2,
                     int k, int l) {
    const int q = m1.rows();
    int r = -1;
    for (int i = 0; i < q; ++i)
        if (!m1.at(i, k).is_zero()) {
            r = i;
            break;
        }
    if (r < 0) return;
    for (int j = 0; j < q; ++j)
        if (!m2.at(l, j).is_zero()) {
            acc.set(r, j, acc.at(r, j) + m1.at(r, k) * m2.at(l, j));
            return;
        }
}

} // namespace

RawIntertwiner raw_intertwiner(const Gq& group, const UnitaryRep& rep, int seed_index) {
    const FieldSpec& F = group.field();
    const int q = rep.dimension();
    if (seed_index < 0 || seed_index >= q * q)
        throw input_error("seed index out of range");

    // X(g) and X(sigma(g))^{-1} = X(sigma(g^{-1})) for the Z-transversal
    // {(c, 0)}; both depend only on the coset, so compute them once.
    std::vector<ExactMatrix> left, right;
    left.reserve(static_cast<size_t>(F.q2()));
    right.reserve(static_cast<size_t>(F.q2()));
    for (long c = 0; c < F.q2(); ++c) {
        const GroupElement g = group.make(static_cast<int>(c), 0);
        left.push_back(rep.evaluate(g));
        right.push_back(rep.evaluate(group.sigma(g_inv(g), 1)));
    }

    for (int seed = seed_index; seed < q * q; ++seed) {
        const int k = seed / q;
        const int l = seed % q;
        ExactMatrix t(q, q, rep.conductor());
        for (long c = 0; c < F.q2(); ++c)
            accumulate_term(t, left[static_cast<size_t>(c)], right[static_cast<size_t>(c)], k, l);
        bool nonzero = false;
        for (int i = 0; i < q && !nonzero; ++i)
            for (int j = 0; j < q; ++j)
                if (!t.at(i, j).is_zero()) {
                    nonzero = true;
                    break;
                }
        if (nonzero) return {t, seed};
    }
    // Impossible for an irreducible representation; treat as a failure of X.
    throw certification_error("all matrix-unit seeds produced a zero intertwiner");
}

Generator normalize(const Gq& group, const UnitaryRep& rep, const RawIntertwiner& raw) {
    const FieldSpec& F = group.field();
    const long q = F.q();
    const int n = rep.conductor();
    const ExactMatrix& t = raw.matrix;

    const ExactMatrix t_power = mat_pow(t, q + 1);
    const auto scalar = is_scalar(t_power);
    if (!scalar.has_value())
        throw certification_error("T^{q+1} is not scalar; conjugation closure failed");
    const CyclotomicNumber lambda_s = *scalar;
    const CyclotomicNumber d = det(t);
    if (d.is_zero()) throw certification_error("intertwiner is singular");

    Generator gen{mat_scale(t, d * lambda_s.inverse()), q + 1, raw.seed_index, d, lambda_s,
                  Certificate("generator")};
    Certificate& cert = gen.certificate;

    // d^{q+1} = lambda_s^q, the determinant identity behind the scaling.
    {
        CyclotomicNumber lhs = CyclotomicNumber::one(n);
        for (long i = 0; i < q + 1; ++i) lhs = lhs * d;
        CyclotomicNumber rhs = CyclotomicNumber::one(n);
        for (long i = 0; i < q; ++i) rhs = rhs * lambda_s;
        cert.record("determinant_power_identity", "lemma5", lhs == rhs, "d^{q+1} != lambda^q");
    }

    cert.record("det_one", "lemma5", det(gen.matrix).equals_rational(Rational(1)), "det D != 1");
    cert.record("unitary", "lemma5", is_unitary(gen.matrix), "D D^dagger != I");

    const ExactMatrix id = ExactMatrix::identity(static_cast<int>(q), n);
    bool exact_order = mat_pow(gen.matrix, q + 1) == id;
    std::string witness = exact_order ? "" : "D^{q+1} != I";
    ExactMatrix power = gen.matrix;
    for (long k = 1; k <= q && exact_order; ++k) {
        if (power == id) {
            exact_order = false;
            witness = "D^" + std::to_string(k) + " = I";
        }
        power = mat_mul(power, gen.matrix);
    }
    cert.record("multiplicative_order_q_plus_1", "lemma5", exact_order, witness);

    // Defining identity on every Z-coset representative: X(x) D = D X(sigma x).
    bool intertwines = true;
    std::string iw;
    for (long c = 0; c < F.q2() && intertwines; ++c) {
        const GroupElement x = group.make(static_cast<int>(c), 0);
        const ExactMatrix lhs = mat_mul(rep.evaluate(x), gen.matrix);
        const ExactMatrix rhs = mat_mul(gen.matrix, rep.evaluate(group.sigma(x, 1)));
        if (lhs != rhs) {
            intertwines = false;
            iw = "transversal element with first coordinate " + std::to_string(c);
        }
    }
    cert.record("conjugates_rep_to_sigma_twist", "section3", intertwines, iw);

    cert.record("entries_in_expected_field", "section3",
                gen.matrix.conductor() == (F.p() == 2 ? 4 : F.p()), "conductor mismatch");
    return gen;
}

Generator build_generator(const Gq& group, const UnitaryRep& rep, int seed_index) {
    return normalize(group, rep, raw_intertwiner(group, rep, seed_index));
}

Certificate uniqueness_check(const Gq& group, const UnitaryRep& rep) {
    Certificate cert("uniqueness");
    const auto first = raw_intertwiner(group, rep, 0);
    const auto second = raw_intertwiner(group, rep, first.seed_index + 1);

    // Schur: the intertwiner space is one-dimensional, so the two raw sums
    // are proportional.
    CyclotomicNumber ratio(rep.conductor());
    bool ratio_found = false;
    for (int i = 0; i < first.matrix.rows() && !ratio_found; ++i)
        for (int j = 0; j < first.matrix.cols(); ++j)
            if (!first.matrix.at(i, j).is_zero()) {
                ratio = second.matrix.at(i, j) * first.matrix.at(i, j).inverse();
                ratio_found = true;
                break;
            }
    cert.record("raw_intertwiners_proportional", "section3",
                ratio_found && second.matrix == mat_scale(first.matrix, ratio),
                "seeds give non-proportional intertwiners");

    const Generator d1 = normalize(group, rep, first);
    const Generator d2 = normalize(group, rep, second);
    cert.record("distinct_seeds_same_generator", "lemma5", d1.matrix == d2.matrix,
                "seeds " + std::to_string(first.seed_index) + " and " +
                    std::to_string(second.seed_index) + " disagree");

    // Rational rescaling of T is absorbed by the normalization.
    const RawIntertwiner scaled{
        mat_scale(first.matrix, CyclotomicNumber(rep.conductor(), Rational(7, 3))),
        first.seed_index};
    const Generator d3 = normalize(group, rep, scaled);
    cert.record("normalization_scale_invariant", "lemma5", d3.matrix == d1.matrix,
                "rescaled T changed D");

    cert.merge(d1.certificate);
    return cert;
}

} // namespace mubforge
