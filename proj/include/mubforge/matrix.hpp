#pragma once

#include <optional>
#include <vector>

#include "mubforge/cyclotomic.hpp"

namespace mubforge {

/// Dense matrix over a single cyclotomic field Q(zeta_n). Dimensions stay
/// small (<= 32), so everything is plain exact row reduction; there is no
/// floating point and no tolerance anywhere in this module.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols, int conductor);
    static ExactMatrix identity(int n, int conductor);
    static ExactMatrix zero(int rows, int cols, int conductor) {
        return ExactMatrix(rows, cols, conductor);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int conductor() const { return conductor_; }

    const CyclotomicNumber& at(int i, int j) const { return e_[index(i, j)]; }
    void set(int i, int j, const CyclotomicNumber& v);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    size_t index(int i, int j) const {
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }

    int rows_, cols_, conductor_;
    std::vector<CyclotomicNumber> e_;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_sub(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_scale(const ExactMatrix& a, const CyclotomicNumber& s);
ExactMatrix transpose(const ExactMatrix& a);
/// Conjugate-transpose.
ExactMatrix dagger(const ExactMatrix& a);
CyclotomicNumber trace(const ExactMatrix& a);
/// tr(a * b) without forming the product.
CyclotomicNumber trace_of_product(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_pow(const ExactMatrix& a, long e);

/// Exact determinant by Gaussian elimination over Q(zeta_n).
CyclotomicNumber det(const ExactMatrix& m);

/// Returns lambda iff m == lambda * I exactly.
std::optional<CyclotomicNumber> is_scalar(const ExactMatrix& m);
bool is_unitary(const ExactMatrix& m);
ExactMatrix inverse(const ExactMatrix& m);

/// True when every row and every column has exactly one nonzero entry.
bool is_monomial(const ExactMatrix& m);
/// Product that walks only the nonzero entries when both factors are
/// monomial; falls back to the dense product otherwise. Output is always
/// identical to mat_mul.
ExactMatrix mat_mul_fast(const ExactMatrix& a, const ExactMatrix& b);

/// Dimension of the span of the given matrices inside the full matrix
/// space, by exact row reduction of their vectorizations.
int span_rank(const std::vector<ExactMatrix>& mats);
bool span_membership(const ExactMatrix& v, const std::vector<ExactMatrix>& basis);

/// Solution space of { Y : h Y = Y h for every h in basis }.
struct CentralizerResult {
    int dimension = 0;
    std::vector<ExactMatrix> basis;
};
CentralizerResult solve_centralizer(const std::vector<ExactMatrix>& basis);

/// Same system with the extra constraint Y S + S Y^T = 0 (membership in the
/// symplectic algebra attached to S).
CentralizerResult solve_centralizer_in_symplectic(const std::vector<ExactMatrix>& basis,
                                                  const ExactMatrix& s);

} // namespace mubforge
