#pragma once

#include <memory>
#include <vector>

#include "mubforge/certificate.hpp"
#include "mubforge/cyclotomic.hpp"
#include "mubforge/group.hpp"
#include "mubforge/matrix.hpp"

namespace mubforge {

/// A character of the center Z = {(0, b)} with values in the p-th roots of
/// unity, lambda(0, b) = zeta^{(n/p) * T(theta b)} where T is the absolute
/// trace to F_p and theta is the pinned parameter. Values are handled as
/// exponents of zeta_n (n = 4 for p = 2, n = p otherwise).
///
/// theta is the deterministically first field element whose character is
/// nontrivial on the commutator subgroup {(0, e) : e^q = -e}; equivalently
/// the first theta outside F_q. That nontriviality is what makes the induced
/// representation irreducible. lambda_index selects later admissible choices
/// for experiments.
class CentralCharacter {
public:
    static CentralCharacter build(std::shared_ptr<const FieldSpec> spec, int lambda_index = 0);

    const FieldSpec& field() const { return *spec_; }
    std::shared_ptr<const FieldSpec> field_ptr() const { return spec_; }
    int conductor() const { return conductor_; }
    int theta_code() const { return theta_code_; }
    int lambda_index() const { return lambda_index_; }

    /// Exponent e with lambda(0, b) = zeta_n^e.
    int exponent(int b_code) const { return exps_[static_cast<size_t>(b_code)]; }
    CyclotomicNumber value(int b_code) const { return root_of_unity(conductor_, exponent(b_code)); }

    /// Homomorphism on Z, p-th-power triviality, nontriviality on the
    /// commutator subgroup, kernel of order q^2/p.
    Certificate certify() const;

private:
    std::shared_ptr<const FieldSpec> spec_;
    int conductor_ = 0;
    int theta_code_ = 0;
    int lambda_index_ = 0;
    std::vector<int> exps_;
};

/// Extension of a central character to the maximal abelian subgroup
/// A = {(a, b) : a in F_q}, built along the chain Z < <Z, g_1> < ... < A
/// with one generator g_k = (e_k, 0) per F_p-basis element e_k of F_q. Each
/// mu(g_k) is the deterministically first p-th root (smallest zeta-exponent)
/// of lambda(g_k^p).
class ExtendedCharacter {
public:
    static ExtendedCharacter build(CentralCharacter lambda);

    const CentralCharacter& central() const { return lambda_; }
    const FieldSpec& field() const { return lambda_.field(); }
    int conductor() const { return lambda_.conductor(); }

    const std::vector<GroupElement>& generators() const { return gens_; }
    const std::vector<int>& generator_exponents() const { return gen_exps_; }

    bool in_domain(const GroupElement& x) const { return field().in_subfield_q(x.a.code()); }
    /// Exponent e with mu(x) = zeta_n^e; x must lie in A.
    int exponent(const GroupElement& x) const;
    CyclotomicNumber value(const GroupElement& x) const {
        return root_of_unity(conductor(), exponent(x));
    }

    /// Restriction to Z equals lambda; homomorphism on all generator pairs
    /// and on an exhaustive scan of A x A when small enough.
    Certificate certify() const;

private:
    explicit ExtendedCharacter(CentralCharacter lambda) : lambda_(std::move(lambda)) {}

    CentralCharacter lambda_;
    std::vector<int> basis_codes_;          // F_p-basis of F_q
    std::vector<GroupElement> gens_;        // (e_k, 0)
    std::vector<int> gen_exps_;             // exponent of mu(g_k)
    // Per subfield element a: its canonical product h(a) = prod g_k^{c_k},
    // the inverse of h(a), and sum c_k * exp(mu(g_k)).
    std::vector<int> subfield_pos_;         // a code -> position, -1 outside F_q
    std::vector<GroupElement> h_, h_inv_;
    std::vector<int> base_exp_;
};

/// The degree-q unitary irreducible representation obtained by inducing mu
/// from A. Matrices are monomial with root-of-unity nonzero entries, so
/// unitarity is built in rather than imposed afterwards. The transversal is
/// t_k = (r_k, 0) with r_k the deterministic additive coset representatives
/// of F_q in F_{q^2}.
class UnitaryRep {
public:
    static UnitaryRep induce(ExtendedCharacter mu);

    int dimension() const { return static_cast<int>(transversal_.size()); }
    int conductor() const { return mu_.conductor(); }
    const ExtendedCharacter& inducing_character() const { return mu_; }
    const CentralCharacter& central_character() const { return mu_.central(); }
    const FieldSpec& field() const { return mu_.field(); }
    const std::vector<GroupElement>& transversal() const { return transversal_; }

    ExactMatrix evaluate(const GroupElement& g) const;
    CyclotomicNumber character(const GroupElement& g) const;

private:
    explicit UnitaryRep(ExtendedCharacter mu) : mu_(std::move(mu)) {}

    ExtendedCharacter mu_;
    std::vector<GroupElement> transversal_, transversal_inv_;
    std::vector<int> coset_of_; // first-coordinate code -> transversal index
};

/// Character-theoretic facts for the pinned degree-q representation:
/// chi(1) = q, chi vanishes off the center, sum_Z |chi(z)|^2 = q^4
/// (irreducibility), |X(Z)| = p, |ker X| = q^2 / p.
Certificate verify_lemma1(const Gq& group, const UnitaryRep& rep,
                          long exhaustive_limit = 65536);

} // namespace mubforge
