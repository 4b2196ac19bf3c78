#pragma once

#include <memory>
#include <vector>

#include "mubforge/certificate.hpp"
#include "mubforge/field.hpp"

namespace mubforge {

/// An element (a, b) of the group of order q^4 on F_{q^2} x F_{q^2} with
/// multiplication (a,b)(c,d) = (a+c, a^q c + b + d).
struct GroupElement {
    FieldElement a;
    FieldElement b;

    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const GroupElement& x, const GroupElement& y) { return !(x == y); }
};

GroupElement g_mul(const GroupElement& x, const GroupElement& y);
/// (-a, a^{q+1} - b).
GroupElement g_inv(const GroupElement& x);
GroupElement g_pow(const GroupElement& x, long k);
/// x^{-1} y^{-1} x y; always of the form (0, a^q c - c^q a).
GroupElement g_comm(const GroupElement& x, const GroupElement& y);

/// An ordered transversal of the center inside the abelian subgroup A_i:
/// x_{i,j} = (alpha^{i-1} a_j, 0) with a_1 = 0 and a_2..a_q running over
/// the nonzero subfield elements in field order.
struct CosetSystem {
    int index = 0; // 1-based
    std::vector<GroupElement> representatives;
};

/// The group G_q attached to a field spec, together with the order-(q+1)
/// automorphism sigma(a,b) = (alpha a, b) and the structure checks on its
/// maximal abelian subgroups.
class Gq {
public:
    explicit Gq(std::shared_ptr<const FieldSpec> spec);

    const FieldSpec& field() const { return *spec_; }
    std::shared_ptr<const FieldSpec> field_ptr() const { return spec_; }
    FieldElement alpha() const { return alpha_; }
    long order() const { return spec_->q2() * spec_->q2(); }

    GroupElement identity() const;
    GroupElement make(int a_code, int b_code) const;
    bool is_central(const GroupElement& x) const { return x.a.is_zero(); }

    /// sigma^steps(x) = (alpha^steps a, b). Negative steps run it backwards.
    GroupElement sigma(const GroupElement& x, long steps = 1) const;

    /// All q^2 central elements (0, b), ascending b.
    std::vector<GroupElement> center() const;

    /// i in [1, q+1]; throws input_error outside that range.
    CosetSystem coset_system(int i) const;

    /// Membership of (c, d) in A_i = sigma^{i-1}(A), decided on the first
    /// coordinate: alpha^{-(i-1)} c must lie in F_q.
    bool in_abelian_subgroup(const GroupElement& x, int i) const;

    /// p = 2 only: the A_i pairwise intersect in the center and cover the
    /// whole group. Exhaustive set computation when |G_q| <= exhaustive_limit,
    /// fixed-seed sampling beyond it.
    Certificate check_lemma3(long exhaustive_limit = 65536) const;

    /// p odd only: A_i and A_j intersect in the center for distinct indices
    /// up to (q+1)/2, and A_{i+(q+1)/2} = A_i.
    Certificate check_lemma4(long exhaustive_limit = 65536) const;

    /// |Z| = q^2, |G'| = q (equal to the skew set), and every non-central
    /// element has centralizer of order q^3.
    Certificate structure_census(long exhaustive_limit = 65536) const;

    /// Dense code of an element, for set computations.
    long element_code(const GroupElement& x) const {
        return static_cast<long>(x.a.code()) * spec_->q2() + x.b.code();
    }
    GroupElement element_from_code(long code) const;

private:
    std::shared_ptr<const FieldSpec> spec_;
    FieldElement alpha_;
};

} // namespace mubforge
