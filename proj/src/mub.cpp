#include "mubforge/mub.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

namespace mubforge {

bool is_flat_witness(const ExactMatrix& m, long q, std::string* witness) {
    const Rational target(1, q);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).norm_squared().equals_rational(target)) {
                if (witness)
                    *witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") = " + m.at(i, j).str();
                return false;
            }
    return true;
}

bool is_flat(const ExactMatrix& m, long q) { return is_flat_witness(m, q, nullptr); }

namespace {

bool diagonal_flat(const ExactMatrix& m, long q) {
    const Rational target(1, q);
    for (int i = 0; i < m.rows(); ++i)
        if (!m.at(i, i).norm_squared().equals_rational(target)) return false;
    return true;
}

bool is_perfect_square(long q) {
    long r = static_cast<long>(std::lround(std::sqrt(static_cast<double>(q))));
    return r * r == q;
}

} // namespace

MubFamily generate_family(const Gq& group, const Generator& gen) {
    MubFamily fam;
    fam.q = group.field().q();
    fam.full_family = group.field().p() == 2;
    Certificate& cert = fam.certificate;

    const int n = gen.matrix.conductor();
    const ExactMatrix id = ExactMatrix::identity(static_cast<int>(fam.q), n);
    fam.bases.push_back(id);

    // Pairwise unbiasedness of the power family reduces to flatness of the
    // difference powers: U_i^dagger U_j is itself a power of D.
    const long steps = fam.full_family ? fam.q : (fam.q - 1) / 2;
    const ExactMatrix step = fam.full_family ? gen.matrix : dagger(gen.matrix);
    ExactMatrix power = id;
    for (long k = 1; k <= steps; ++k) {
        power = mat_mul(power, step);
        fam.bases.push_back(power);
        std::string witness;
        const bool flat = is_flat_witness(power, fam.q, &witness);
        const std::string label = fam.full_family ? "power_flat_k" + std::to_string(k)
                                                  : "power_flat_k_minus" + std::to_string(k);
        cert.record(label, fam.full_family ? "theorem1" : "theorem2", flat, witness);
    }
    cert.record("family_size", fam.full_family ? "theorem1" : "theorem2",
                static_cast<long>(fam.bases.size()) ==
                    (fam.full_family ? fam.q + 1 : (fam.q + 1) / 2),
                "wrong number of bases");
    return fam;
}

FlatnessProfile flatness_profile(const Gq& group, const Generator& gen) {
    FlatnessProfile prof;
    prof.q = group.field().q();
    const long q = prof.q;

    ExactMatrix power = gen.matrix;
    for (long k = 1; k <= q + 1; ++k) {
        FlatnessRecord rec;
        rec.k = k;
        rec.flat = is_flat(power, q);
        rec.diagonal_flat = diagonal_flat(power, q);
        prof.records.push_back(rec);
        if (k <= q) power = mat_mul(power, gen.matrix);
    }

    prof.certificate.record("profile_covers_all_powers", "section4",
                            static_cast<long>(prof.records.size()) == q + 1, "");

    // Involutory-unitary obstruction: for odd non-square q the diagonal of
    // the involution D^{(q+1)/2} cannot be uniformly flat. A violation here
    // means the arithmetic is broken, not that the theorem failed.
    if (q % 2 == 1 && !is_perfect_square(q)) {
        const auto& inv = prof.records[static_cast<size_t>((q + 1) / 2 - 1)];
        prof.certificate.record("involution_diagonal_not_flat", "lemma6", !inv.diagonal_flat,
                                "flat diagonal at the involutory power contradicts the "
                                "square-dimension obstruction");
    }
    return prof;
}

Certificate eigenbasis_crosscheck(const Gq& group, const UnitaryRep& rep,
                                  const Generator& gen, double tol) {
    Certificate cert("eigenbasis_crosscheck");
    const FieldSpec& F = group.field();
    const long q = F.q();
    const int dim = rep.dimension();
    const long families = F.p() == 2 ? q + 1 : (q + 1) / 2;

    // Exact part first: members of each C_i commute, and non-identity
    // members of distinct families are trace-orthogonal.
    std::vector<std::vector<ExactMatrix>> images;
    for (long i = 1; i <= families; ++i) {
        std::vector<ExactMatrix> ci;
        for (const auto& x : group.coset_system(static_cast<int>(i)).representatives)
            ci.push_back(rep.evaluate(x));
        images.push_back(std::move(ci));
    }

    bool commute = true;
    for (const auto& ci : images)
        for (size_t u = 0; u < ci.size() && commute; ++u)
            for (size_t v = u + 1; v < ci.size(); ++v)
                if (mat_mul(ci[u], ci[v]) != mat_mul(ci[v], ci[u])) {
                    commute = false;
                    break;
                }
    cert.record("families_commute", "section4", commute, "");

    bool ortho = true;
    std::string ow;
    for (size_t i = 0; i < images.size() && ortho; ++i)
        for (size_t j = 0; j < images.size() && ortho; ++j) {
            if (i == j) continue;
            for (size_t u = 1; u < images[i].size() && ortho; ++u)
                for (size_t v = 1; v < images[j].size(); ++v)
                    if (!trace_of_product(dagger(images[i][u]), images[j][v]).is_zero()) {
                        ortho = false;
                        ow = "families " + std::to_string(i + 1) + "," + std::to_string(j + 1);
                        break;
                    }
        }
    cert.record("cross_family_trace_orthogonality", "section4", ortho, ow);

    // Float oracle. Embed the commuting family C_1 and diagonalize a generic
    // hermitian combination; distinct weights separate the q joint
    // eigenlines.
    using Cd = std::complex<double>;
    using Mat = Eigen::MatrixXcd;
    auto embed = [&](const ExactMatrix& m) {
        Mat out(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).embed();
        return out;
    };

    std::vector<Mat> c1;
    for (const auto& m : images[0]) c1.push_back(embed(m));

    Mat basis(dim, dim);
    bool separated = false;
    for (int attempt = 0; attempt < 4 && !separated; ++attempt) {
        Mat h = Mat::Zero(dim, dim);
        for (size_t j = 0; j < c1.size(); ++j) {
            const double angle = 2.399963229728653 * static_cast<double>(j + 1) +
                                 0.7 * static_cast<double>(attempt);
            const Cd w = std::polar(1.0 + 0.25 * static_cast<double>(j), angle);
            h += w * c1[j] + std::conj(w) * c1[j].adjoint();
        }
        Eigen::SelfAdjointEigenSolver<Mat> solver(h);
        double min_gap = 1e300;
        for (int i = 0; i + 1 < dim; ++i)
            min_gap = std::min(min_gap, solver.eigenvalues()(i + 1) - solver.eigenvalues()(i));
        if (dim == 1 || min_gap > 1e-6) {
            basis = solver.eigenvectors();
            separated = true;
        }
    }
    cert.record("joint_eigenbasis_separated", "theorem1", separated,
                "hermitian combination failed to separate eigenvalues");
    if (!separated) return cert;

    const Mat d_float = embed(gen.matrix);
    const Mat d_inv = d_float.adjoint(); // unitary

    double worst_residual = 0.0;
    std::vector<Mat> family_bases;
    Mat cur = basis;
    for (long i = 0; i < families; ++i) {
        if (i > 0) cur = d_inv * cur;
        family_bases.push_back(cur);
        for (const auto& member : images[static_cast<size_t>(i)]) {
            const Mat u = embed(member);
            for (int col = 0; col < dim; ++col) {
                const Eigen::VectorXcd v = cur.col(col);
                const Cd rayleigh = v.dot(u * v); // v^H (U v)
                worst_residual =
                    std::max(worst_residual, (u * v - rayleigh * v).norm());
            }
        }
    }
    cert.record("eigenvector_residuals_below_tol", "theorem1", worst_residual < tol,
                "worst residual " + std::to_string(worst_residual));

    double worst_unbias = 0.0;
    for (size_t i = 0; i < family_bases.size(); ++i)
        for (size_t j = i + 1; j < family_bases.size(); ++j) {
            const Mat gram = family_bases[i].adjoint() * family_bases[j];
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    worst_unbias = std::max(
                        worst_unbias, std::abs(std::norm(gram(r, c)) - 1.0 / static_cast<double>(q)));
        }
    cert.record("eigenbases_pairwise_unbiased", "theorem1", worst_unbias < tol,
                "worst |<u,v>|^2 deviation " + std::to_string(worst_unbias));
    return cert;
}

ExactMatrix fixture_q2_matrix() {
    auto gauss = [](long re_num, long im_num) {
        return CyclotomicNumber(4, {Rational(re_num, 2), Rational(im_num, 2)});
    };
    ExactMatrix m(2, 2, 4);
    // (1+i)/2 * [[-1, i], [1, i]]
    m.set(0, 0, gauss(-1, -1));
    m.set(0, 1, gauss(-1, 1));
    m.set(1, 0, gauss(1, 1));
    m.set(1, 1, gauss(-1, 1));
    return m;
}

ExactMatrix fixture_real4_matrix() {
    const int signs[4][4] = {{-1, -1, -1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}};
    ExactMatrix m(4, 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m.set(i, j, CyclotomicNumber(4, Rational(signs[i][j], 2)));
    return m;
}

Certificate verify_fixture_q2() {
    Certificate cert("fixture_q2");
    const ExactMatrix m = fixture_q2_matrix();
    const ExactMatrix id = ExactMatrix::identity(2, 4);

    cert.record("unitary", "section4_example", is_unitary(m), "");
    cert.record("order_three", "section4_example",
                mat_pow(m, 3) == id && m != id && mat_pow(m, 2) != id, "");
    cert.record("det_one", "section4_example", det(m).equals_rational(Rational(1)), "");
    std::string w1, w2;
    cert.record("first_power_flat", "section4_example", is_flat_witness(m, 2, &w1), w1);
    cert.record("second_power_flat", "section4_example",
                is_flat_witness(mat_pow(m, 2), 2, &w2), w2);
    return cert;
}

Certificate verify_fixture_real4() {
    Certificate cert("fixture_real4");
    const ExactMatrix m = fixture_real4_matrix();
    const ExactMatrix id = ExactMatrix::identity(4, 4);

    bool real_entries = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!m.at(i, j).is_rational()) real_entries = false;
    cert.record("entries_real", "section5_example", real_entries, "");
    cert.record("orthogonal", "section5_example", mat_mul(m, transpose(m)) == id,
                "M M^T != I");
    cert.record("order_three", "section5_example",
                mat_pow(m, 3) == id && m != id && mat_pow(m, 2) != id, "");
    std::string w1, w2;
    cert.record("first_power_flat", "section5_example", is_flat_witness(m, 4, &w1), w1);
    cert.record("second_power_flat", "section5_example",
                is_flat_witness(mat_pow(m, 2), 4, &w2), w2);

    // Doubling gives a Hadamard matrix: +-1 entries with H H^T = 4I.
    const ExactMatrix h = mat_scale(m, CyclotomicNumber(4, Rational(2)));
    bool pm_one = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!h.at(i, j).equals_rational(Rational(1)) &&
                !h.at(i, j).equals_rational(Rational(-1)))
                pm_one = false;
    cert.record("doubled_entries_pm_one", "section5_example", pm_one, "");
    cert.record("doubled_hadamard", "section5_example",
                mat_mul(h, transpose(h)) == mat_scale(id, CyclotomicNumber(4, Rational(4))),
                "H H^T != 4I");
    return cert;
}

std::string relate_to_fixture_q2(const ExactMatrix& d) {
    const ExactMatrix fixture = fixture_q2_matrix();
    if (d == fixture) return "equal";
    // All 2x2 permutations: identity (covered above) and the swap.
    ExactMatrix swap(2, 2, 4);
    swap.set(0, 1, CyclotomicNumber::one(4));
    swap.set(1, 0, CyclotomicNumber::one(4));
    if (mat_mul(mat_mul(swap, d), swap) == fixture) return "permutation_conjugate";
    return "sibling";
}

} // namespace mubforge
