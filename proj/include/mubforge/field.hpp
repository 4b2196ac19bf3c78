#pragma once

#include <memory>
#include <vector>

#include "mubforge/errors.hpp"

namespace mubforge {

class FieldElement;

/// Description of F_{q^2} for q = p^a: the prime p, the exponent a, and a
/// deterministic monic irreducible modulus of degree 2a over F_p. Elements
/// are polynomial residues; the subfield F_q is carved out as the fixed
/// field of x -> x^q rather than built separately.
///
/// Every choice is pinned: the modulus is the lexicographically smallest
/// monic irreducible polynomial (coefficients compared low-degree-first),
/// and the cached multiplicative generator is the lexicographically
/// smallest one. Downstream objects inherit bit-for-bit reproducibility
/// from these choices.
///
/// Elements are encoded as integers in [0, q^2): the code of an element
/// with coefficients (c_0, ..., c_{2a-1}) is sum c_k * p^{2a-1-k}, so
/// ascending code order is exactly the lexicographic order used for all
/// "first such element" selections.
class FieldSpec {
public:
    /// Builds the field. Throws input_error if p is not prime, and
    /// resource_error if p^a exceeds max_q.
    static std::shared_ptr<const FieldSpec> make(int p, int a, long max_q = 32);

    int p() const { return p_; }
    int a() const { return a_; }
    long q() const { return q_; }
    long q2() const { return q2_; }
    /// Modulus coefficients c_0 ... c_{2a}, monic (c_{2a} = 1).
    const std::vector<int>& modulus() const { return modulus_; }

    long element_count() const { return q2_; }

    // Arithmetic on element codes. All O(1) table lookups.
    int add(int x, int y) const { return add_[idx(x, y)]; }
    int mul(int x, int y) const { return mul_[idx(x, y)]; }
    int neg(int x) const { return neg_[static_cast<size_t>(x)]; }
    int sub(int x, int y) const { return add(x, neg(y)); }
    /// Multiplicative inverse; throws std::domain_error on zero.
    int inv(int x) const;
    /// x^q, the relative Frobenius.
    int frob_q(int x) const { return frob_[static_cast<size_t>(x)]; }
    int pow(int x, long e) const;

    /// Absolute trace F_{q^2} -> F_p as an integer in [0, p).
    int trace_to_fp(int x) const { return trace_[static_cast<size_t>(x)]; }

    bool in_subfield_q(int x) const { return frob_q(x) == x; }
    bool is_skew(int x) const { return frob_q(x) == neg(x); }

    /// The q elements of F_q = {x : x^q = x}, ascending code order.
    const std::vector<int>& subfield_q() const { return subfield_q_; }
    /// The q elements with x^q = -x, ascending code order.
    const std::vector<int>& skew_codes() const { return skew_; }

    /// Lexicographically smallest generator of the cyclic group F_{q^2}^*.
    int generator_code() const { return generator_; }
    /// alpha = g^{q-1}; has multiplicative order exactly q+1.
    int alpha_code() const { return alpha_; }

    std::vector<int> coeffs_of(int code) const;
    int code_of(const std::vector<int>& coeffs) const;

    FieldElement element(int code) const;
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;
    FieldElement zero() const;
    FieldElement one() const;

private:
    FieldSpec() = default;
    size_t idx(int x, int y) const {
        return static_cast<size_t>(x) * static_cast<size_t>(q2_) + static_cast<size_t>(y);
    }
    void build_tables();

    int p_ = 0;
    int a_ = 0;
    long q_ = 0;
    long q2_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_;
    std::vector<int> neg_, inv_, frob_, trace_;
    std::vector<int> subfield_q_, skew_;
    int generator_ = 0;
    int alpha_ = 0;
};

/// A value in F_{q^2}, identified by its polynomial coefficient vector.
/// Holds a non-owning pointer to its FieldSpec; the spec must outlive it.
class FieldElement {
public:
    FieldElement() : spec_(nullptr), code_(0) {}
    FieldElement(const FieldSpec* spec, int code) : spec_(spec), code_(code) {}

    const FieldSpec* spec() const { return spec_; }
    int code() const { return code_; }
    std::vector<int> coeffs() const { return spec_->coeffs_of(code_); }
    bool is_zero() const { return code_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return with(spec_->add(code_, check(o))); }
    FieldElement operator-(const FieldElement& o) const { return with(spec_->sub(code_, check(o))); }
    FieldElement operator*(const FieldElement& o) const { return with(spec_->mul(code_, check(o))); }
    FieldElement operator-() const { return with(spec_->neg(code_)); }
    FieldElement inverse() const { return with(spec_->inv(code_)); }
    FieldElement pow(long e) const { return with(spec_->pow(code_, e)); }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.spec_ == y.spec_ && x.code_ == y.code_;
    }
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

private:
    FieldElement with(int code) const { return {spec_, code}; }
    int check(const FieldElement& o) const {
        if (o.spec_ != spec_) throw std::invalid_argument("FieldElement: spec mismatch");
        return o.code_;
    }

    const FieldSpec* spec_;
    int code_;
};

/// x^q computed by square-and-multiply (table-backed).
FieldElement frobenius_q(const FieldElement& x);

/// The pinned element of multiplicative order q+1: g^{q-1} for the
/// lexicographically smallest generator g. Order is verified exhaustively.
FieldElement find_alpha(const FieldSpec& spec);

/// All e with e^q = -e; exactly q of them.
std::vector<FieldElement> skew_elements(const FieldSpec& spec);

} // namespace mubforge
