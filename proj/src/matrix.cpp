#include "mubforge/matrix.hpp"

#include <stdexcept>
#include <string>

namespace mubforge {

ExactMatrix::ExactMatrix(int rows, int cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      e_(static_cast<size_t>(rows) * static_cast<size_t>(cols), CyclotomicNumber(conductor)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n, int conductor) {
    ExactMatrix m(n, n, conductor);
    for (int i = 0; i < n; ++i) m.set(i, i, CyclotomicNumber::one(conductor));
    return m;
}

void ExactMatrix::set(int i, int j, const CyclotomicNumber& v) {
    if (v.conductor() != conductor_)
        throw std::invalid_argument("entry conductor mismatch");
    e_[index(i, j)] = v;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.conductor_ == b.conductor_ &&
           a.e_ == b.e_;
}

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.conductor() != b.conductor())
        throw std::invalid_argument("matrix shape/conductor mismatch");
}

} // namespace

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows() || a.conductor() != b.conductor())
        throw std::invalid_argument("matrix product shape/conductor mismatch");
    ExactMatrix r(a.rows(), b.cols(), a.conductor());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const CyclotomicNumber& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.set(i, j, r.at(i, j) + aik * b.at(k, j));
            }
        }
    return r;
}

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    ExactMatrix r(a.rows(), a.cols(), a.conductor());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j) + b.at(i, j));
    return r;
}

ExactMatrix mat_sub(const ExactMatrix& a, const ExactMatrix& b) {
    require_same_shape(a, b);
    ExactMatrix r(a.rows(), a.cols(), a.conductor());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j) - b.at(i, j));
    return r;
}

ExactMatrix mat_scale(const ExactMatrix& a, const CyclotomicNumber& s) {
    ExactMatrix r(a.rows(), a.cols(), a.conductor());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j) * s);
    return r;
}

ExactMatrix transpose(const ExactMatrix& a) {
    ExactMatrix r(a.cols(), a.rows(), a.conductor());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
    return r;
}

ExactMatrix dagger(const ExactMatrix& a) {
    ExactMatrix r(a.cols(), a.rows(), a.conductor());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j).conjugate());
    return r;
}

CyclotomicNumber trace(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("trace of non-square matrix");
    CyclotomicNumber t(a.conductor());
    for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

CyclotomicNumber trace_of_product(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols() || a.conductor() != b.conductor())
        throw std::invalid_argument("trace_of_product shape mismatch");
    CyclotomicNumber t(a.conductor());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero() || b.at(k, i).is_zero()) continue;
            t += a.at(i, k) * b.at(k, i);
        }
    return t;
}

ExactMatrix mat_pow(const ExactMatrix& a, long e) {
    if (a.rows() != a.cols()) throw std::invalid_argument("power of non-square matrix");
    if (e < 0) return mat_pow(inverse(a), -e);
    ExactMatrix acc = ExactMatrix::identity(a.rows(), a.conductor());
    ExactMatrix base = a;
    while (e > 0) {
        if (e & 1) acc = mat_mul_fast(acc, base);
        base = mat_mul_fast(base, base);
        e >>= 1;
    }
    return acc;
}

CyclotomicNumber det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    std::vector<std::vector<CyclotomicNumber>> w(
        static_cast<size_t>(n), std::vector<CyclotomicNumber>(static_cast<size_t>(n),
                                                              CyclotomicNumber(m.conductor())));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);

    CyclotomicNumber result = CyclotomicNumber::one(m.conductor());
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!w[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return CyclotomicNumber(m.conductor()); // singular
        if (pivot != col) {
            std::swap(w[static_cast<size_t>(pivot)], w[static_cast<size_t>(col)]);
            negate = !negate;
        }
        const CyclotomicNumber& pv = w[static_cast<size_t>(col)][static_cast<size_t>(col)];
        result = result * pv;
        const CyclotomicNumber pinv = pv.inverse();
        for (int i = col + 1; i < n; ++i) {
            const CyclotomicNumber f = w[static_cast<size_t>(i)][static_cast<size_t>(col)] * pinv;
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j)
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    w[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                    f * w[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    return negate ? -result : result;
}

std::optional<CyclotomicNumber> is_scalar(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_scalar on non-square matrix");
    if (m.rows() == 0) return std::nullopt;
    const CyclotomicNumber lambda = m.at(0, 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (i == j) {
                if (m.at(i, j) != lambda) return std::nullopt;
            } else if (!m.at(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    return lambda;
}

bool is_unitary(const ExactMatrix& m) {
    if (m.rows() != m.cols()) return false;
    const auto s = is_scalar(mat_mul(m, dagger(m)));
    return s.has_value() && s->equals_rational(Rational(1));
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    std::vector<std::vector<CyclotomicNumber>> w(
        static_cast<size_t>(n),
        std::vector<CyclotomicNumber>(static_cast<size_t>(2 * n), CyclotomicNumber(m.conductor())));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
        w[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = CyclotomicNumber::one(m.conductor());
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!w[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("matrix is singular");
        std::swap(w[static_cast<size_t>(pivot)], w[static_cast<size_t>(col)]);
        const CyclotomicNumber pinv =
            w[static_cast<size_t>(col)][static_cast<size_t>(col)].inverse();
        for (int j = 0; j < 2 * n; ++j)
            w[static_cast<size_t>(col)][static_cast<size_t>(j)] =
                w[static_cast<size_t>(col)][static_cast<size_t>(j)] * pinv;
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const CyclotomicNumber f = w[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (int j = 0; j < 2 * n; ++j)
                w[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    w[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                    f * w[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    ExactMatrix inv(n, n, m.conductor());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.set(i, j, w[static_cast<size_t>(i)][static_cast<size_t>(n + j)]);
    return inv;
}

bool is_monomial(const ExactMatrix& m) {
    if (m.rows() != m.cols()) return false;
    std::vector<int> row_count(static_cast<size_t>(m.rows()), 0);
    std::vector<int> col_count(static_cast<size_t>(m.cols()), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) {
                ++row_count[static_cast<size_t>(i)];
                ++col_count[static_cast<size_t>(j)];
            }
    for (int i = 0; i < m.rows(); ++i)
        if (row_count[static_cast<size_t>(i)] != 1 || col_count[static_cast<size_t>(i)] != 1)
            return false;
    return true;
}

ExactMatrix mat_mul_fast(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows() || a.conductor() != b.conductor())
        throw std::invalid_argument("matrix product shape/conductor mismatch");
    if (a.rows() != a.cols() || b.rows() != b.cols() || !is_monomial(a) || !is_monomial(b))
        return mat_mul(a, b);
    const int n = a.rows();
    // a has its nonzero in row i at column sig_a(i); then
    // (a b)(i, j) = a(i, sig_a(i)) * b(sig_a(i), j) touches one j per row.
    ExactMatrix r(n, n, a.conductor());
    for (int i = 0; i < n; ++i) {
        int k = -1;
        for (int j = 0; j < n; ++j)
            if (!a.at(i, j).is_zero()) {
                k = j;
                break;
            }
        for (int j = 0; j < n; ++j)
            if (!b.at(k, j).is_zero()) {
                r.set(i, j, a.at(i, k) * b.at(k, j));
                break;
            }
    }
    return r;
}

namespace {

// Row echelon machinery shared by rank / membership / kernel computations.
// Rows are dense vectors over Q(zeta_n).
struct Eliminator {
    explicit Eliminator(int width, int conductor) : width(width), conductor(conductor) {}

    // Reduces v against the accepted rows; if a nonzero remainder is left,
    // stores it as a new pivot row and returns true.
    bool absorb(std::vector<CyclotomicNumber> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const int pc = pivot_col[r];
            if (v[static_cast<size_t>(pc)].is_zero()) continue;
            const CyclotomicNumber f = v[static_cast<size_t>(pc)];
            for (int j = 0; j < width; ++j)
                v[static_cast<size_t>(j)] =
                    v[static_cast<size_t>(j)] - f * rows[r][static_cast<size_t>(j)];
        }
        int pc = -1;
        for (int j = 0; j < width; ++j)
            if (!v[static_cast<size_t>(j)].is_zero()) {
                pc = j;
                break;
            }
        if (pc < 0) return false;
        const CyclotomicNumber pinv = v[static_cast<size_t>(pc)].inverse();
        for (int j = 0; j < width; ++j)
            v[static_cast<size_t>(j)] = v[static_cast<size_t>(j)] * pinv;
        rows.push_back(std::move(v));
        pivot_col.push_back(pc);
        return true;
    }

    int rank() const { return static_cast<int>(rows.size()); }

    int width;
    int conductor;
    std::vector<std::vector<CyclotomicNumber>> rows;
    std::vector<int> pivot_col;
};

std::vector<CyclotomicNumber> vectorize(const ExactMatrix& m) {
    std::vector<CyclotomicNumber> v;
    v.reserve(static_cast<size_t>(m.rows()) * static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

// Kernel basis of the linear system rows * x = 0, where `rows` are the
// equation coefficient vectors over Q(zeta_n).
std::vector<std::vector<CyclotomicNumber>> kernel_basis(
    std::vector<std::vector<CyclotomicNumber>> eqs, int unknowns, int conductor) {
    Eliminator el(unknowns, conductor);
    for (auto& e : eqs) el.absorb(std::move(e));

    // Back-substitute to reduced echelon form.
    for (size_t r = el.rows.size(); r-- > 0;) {
        for (size_t s = 0; s < r; ++s) {
            const CyclotomicNumber f = el.rows[s][static_cast<size_t>(el.pivot_col[r])];
            if (f.is_zero()) continue;
            for (int j = 0; j < unknowns; ++j)
                el.rows[s][static_cast<size_t>(j)] =
                    el.rows[s][static_cast<size_t>(j)] - f * el.rows[r][static_cast<size_t>(j)];
        }
    }

    std::vector<bool> is_pivot(static_cast<size_t>(unknowns), false);
    for (int pc : el.pivot_col) is_pivot[static_cast<size_t>(pc)] = true;

    std::vector<std::vector<CyclotomicNumber>> basis;
    for (int free = 0; free < unknowns; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<CyclotomicNumber> v(static_cast<size_t>(unknowns),
                                        CyclotomicNumber(conductor));
        v[static_cast<size_t>(free)] = CyclotomicNumber::one(conductor);
        for (size_t r = 0; r < el.rows.size(); ++r)
            v[static_cast<size_t>(el.pivot_col[r])] =
                -el.rows[r][static_cast<size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

int span_rank(const std::vector<ExactMatrix>& mats) {
    if (mats.empty()) return 0;
    const int width = mats[0].rows() * mats[0].cols();
    Eliminator el(width, mats[0].conductor());
    for (const auto& m : mats) {
        if (m.rows() != mats[0].rows() || m.cols() != mats[0].cols() ||
            m.conductor() != mats[0].conductor())
            throw std::invalid_argument("span_rank: mixed shapes");
        el.absorb(vectorize(m));
    }
    return el.rank();
}

bool span_membership(const ExactMatrix& v, const std::vector<ExactMatrix>& basis) {
    Eliminator el(v.rows() * v.cols(), v.conductor());
    for (const auto& m : basis) {
        if (m.rows() != v.rows() || m.cols() != v.cols() || m.conductor() != v.conductor())
            throw std::invalid_argument("span_membership: mixed shapes");
        el.absorb(vectorize(m));
    }
    // v is in the span iff it reduces to zero, i.e. adds no new pivot.
    return !el.absorb(vectorize(v));
}

namespace {

CentralizerResult solve_linear_matrix_system(
    const std::vector<std::vector<CyclotomicNumber>>& eqs, int d, int conductor) {
    auto null_vs = kernel_basis(eqs, d * d, conductor);
    CentralizerResult out;
    out.dimension = static_cast<int>(null_vs.size());
    for (const auto& v : null_vs) {
        ExactMatrix y(d, d, conductor);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                y.set(i, j, v[static_cast<size_t>(i * d + j)]);
        out.basis.push_back(std::move(y));
    }
    return out;
}

// Equations h Y - Y h = 0 appended to eqs; unknown Y is vectorized row-major.
void append_commutant_equations(std::vector<std::vector<CyclotomicNumber>>& eqs,
                                const ExactMatrix& h) {
    const int d = h.rows();
    const int conductor = h.conductor();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            std::vector<CyclotomicNumber> row(static_cast<size_t>(d * d),
                                              CyclotomicNumber(conductor));
            // (h Y)_{ab} = sum_c h_{ac} Y_{cb}; (Y h)_{ab} = sum_c Y_{ac} h_{cb}
            for (int c = 0; c < d; ++c) {
                row[static_cast<size_t>(c * d + b)] += h.at(a, c);
                row[static_cast<size_t>(a * d + c)] += -h.at(c, b);
            }
            eqs.push_back(std::move(row));
        }
}

} // namespace

CentralizerResult solve_centralizer(const std::vector<ExactMatrix>& basis) {
    if (basis.empty()) throw std::invalid_argument("solve_centralizer: empty basis");
    const int d = basis[0].rows();
    const int conductor = basis[0].conductor();
    std::vector<std::vector<CyclotomicNumber>> eqs;
    for (const auto& h : basis) {
        if (h.rows() != d || h.cols() != d || h.conductor() != conductor)
            throw std::invalid_argument("solve_centralizer: mixed shapes");
        append_commutant_equations(eqs, h);
    }
    return solve_linear_matrix_system(eqs, d, conductor);
}

CentralizerResult solve_centralizer_in_symplectic(const std::vector<ExactMatrix>& basis,
                                                  const ExactMatrix& s) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    const int d = basis[0].rows();
    const int conductor = basis[0].conductor();
    std::vector<std::vector<CyclotomicNumber>> eqs;
    for (const auto& h : basis) append_commutant_equations(eqs, h);
    // Y S + S Y^T = 0: (Y S)_{ab} = sum_c Y_{ac} S_{cb};
    // (S Y^T)_{ab} = sum_c S_{ac} Y_{bc}.
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            std::vector<CyclotomicNumber> row(static_cast<size_t>(d * d),
                                              CyclotomicNumber(conductor));
            for (int c = 0; c < d; ++c) {
                row[static_cast<size_t>(a * d + c)] += s.at(c, b);
                row[static_cast<size_t>(b * d + c)] += s.at(a, c);
            }
            eqs.push_back(std::move(row));
        }
    return solve_linear_matrix_system(eqs, d, conductor);
}

} // namespace mubforge
