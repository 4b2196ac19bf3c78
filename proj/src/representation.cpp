#include "mubforge/representation.hpp"

#include <random>
#include <set>
#include <string>

namespace mubforge {

CentralCharacter CentralCharacter::build(std::shared_ptr<const FieldSpec> spec,
                                         int lambda_index) {
    CentralCharacter ch;
    ch.spec_ = std::move(spec);
    const FieldSpec& F = *ch.spec_;
    ch.conductor_ = F.p() == 2 ? 4 : F.p();
    ch.lambda_index_ = lambda_index;

    // Admissible theta: lambda_theta nontrivial on the commutator subgroup,
    // which happens exactly when theta is outside F_q. Walk the canonical
    // field order and take the (lambda_index + 1)-th admissible element.
    int remaining = lambda_index;
    ch.theta_code_ = -1;
    for (long t = 0; t < F.q2(); ++t) {
        if (F.in_subfield_q(static_cast<int>(t))) continue;
        bool nontrivial = false;
        for (int e : F.skew_codes())
            if (F.trace_to_fp(F.mul(static_cast<int>(t), e)) != 0) nontrivial = true;
        if (!nontrivial) continue;
        if (remaining == 0) {
            ch.theta_code_ = static_cast<int>(t);
            break;
        }
        --remaining;
    }
    if (ch.theta_code_ < 0) throw input_error("lambda index out of range");

    const int unit = ch.conductor_ / F.p(); // 2 when p = 2, else 1
    ch.exps_.resize(static_cast<size_t>(F.q2()));
    for (long b = 0; b < F.q2(); ++b)
        ch.exps_[static_cast<size_t>(b)] =
            (unit * F.trace_to_fp(F.mul(ch.theta_code_, static_cast<int>(b)))) % ch.conductor_;
    return ch;
}

Certificate CentralCharacter::certify() const {
    Certificate cert("central_character");
    const FieldSpec& F = *spec_;
    const int n = conductor_;

    bool hom = true;
    for (long b1 = 0; b1 < F.q2() && hom; ++b1)
        for (long b2 = 0; b2 < F.q2(); ++b2) {
            const int sum = F.add(static_cast<int>(b1), static_cast<int>(b2));
            if (exponent(sum) != (exponent(static_cast<int>(b1)) +
                                  exponent(static_cast<int>(b2))) % n) {
                hom = false;
                break;
            }
        }
    cert.record("homomorphism_on_center", "section3", hom, "additivity failed");

    bool p_valued = true;
    for (int e : exps_)
        if ((e * F.p()) % n != 0) p_valued = false;
    cert.record("values_are_pth_roots", "section2", p_valued, "");

    bool nontrivial = false;
    for (int e : F.skew_codes())
        if (exponent(e) != 0) nontrivial = true;
    cert.record("nontrivial_on_commutator_subgroup", "section3", nontrivial,
                "character kills the commutator subgroup");

    long kernel = 0;
    for (int e : exps_)
        if (e == 0) ++kernel;
    cert.record("kernel_order_q2_over_p", "section3", kernel * F.p() == F.q2(),
                "kernel has " + std::to_string(kernel) + " elements");
    return cert;
}

ExtendedCharacter ExtendedCharacter::build(CentralCharacter lambda) {
    ExtendedCharacter mu(std::move(lambda));
    const FieldSpec& F = mu.field();
    const int p = F.p();
    const int n = mu.conductor();
    const int a = F.a();

    // Greedy F_p-basis of F_q in canonical order. Spans are tiny (q <= 32),
    // so enumerate the span of the chosen prefix directly.
    std::set<int> span{0};
    for (int code : F.subfield_q()) {
        if (static_cast<int>(mu.basis_codes_.size()) == a) break;
        if (span.count(code)) continue;
        mu.basis_codes_.push_back(code);
        std::set<int> next;
        for (int s : span) {
            int acc = s;
            for (int rep = 0; rep < p; ++rep) {
                next.insert(acc);
                acc = F.add(acc, code);
            }
        }
        span = std::move(next);
    }
    if (static_cast<int>(mu.basis_codes_.size()) != a)
        throw certification_error("subfield basis extraction failed");

    for (int code : mu.basis_codes_)
        mu.gens_.push_back({F.element(code), F.zero()});

    // mu(g_k) = first p-th root of lambda(g_k^p), by smallest zeta-exponent.
    for (const auto& g : mu.gens_) {
        const GroupElement gp = g_pow(g, p);
        if (!gp.a.is_zero()) throw certification_error("generator^p is not central");
        const int target = mu.lambda_.exponent(gp.b.code());
        int chosen = -1;
        for (int m = 0; m < n && chosen < 0; ++m)
            if ((m * p) % n == target) chosen = m;
        if (chosen < 0) throw certification_error("no p-th root for generator value");
        mu.gen_exps_.push_back(chosen);
    }

    // Decompose every subfield element over the basis by enumerating all q
    // coefficient tuples once.
    mu.subfield_pos_.assign(static_cast<size_t>(F.q2()), -1);
    const auto& sub = F.subfield_q();
    for (size_t pos = 0; pos < sub.size(); ++pos)
        mu.subfield_pos_[static_cast<size_t>(sub[pos])] = static_cast<int>(pos);

    mu.h_.assign(sub.size(), {F.zero(), F.zero()});
    mu.h_inv_.assign(sub.size(), {F.zero(), F.zero()});
    mu.base_exp_.assign(sub.size(), 0);
    std::vector<char> done(sub.size(), 0);

    std::vector<int> digits(static_cast<size_t>(a), 0);
    const long total = F.q();
    for (long it = 0; it < total; ++it) {
        long rest = it;
        for (int k = 0; k < a; ++k) {
            digits[static_cast<size_t>(k)] = static_cast<int>(rest % p);
            rest /= p;
        }
        int acode = 0;
        GroupElement h{F.zero(), F.zero()};
        int bexp = 0;
        for (int k = 0; k < a; ++k) {
            const int c = digits[static_cast<size_t>(k)];
            if (c == 0) continue;
            for (int reps = 0; reps < c; ++reps) acode = F.add(acode, mu.basis_codes_[static_cast<size_t>(k)]);
            h = g_mul(h, g_pow(mu.gens_[static_cast<size_t>(k)], c));
            bexp = (bexp + c * mu.gen_exps_[static_cast<size_t>(k)]) % n;
        }
        const int pos = mu.subfield_pos_[static_cast<size_t>(acode)];
        if (pos < 0) throw certification_error("basis span left the subfield");
        if (done[static_cast<size_t>(pos)]) throw certification_error("basis is not free");
        done[static_cast<size_t>(pos)] = 1;
        mu.h_[static_cast<size_t>(pos)] = h;
        mu.h_inv_[static_cast<size_t>(pos)] = g_inv(h);
        mu.base_exp_[static_cast<size_t>(pos)] = bexp;
    }
    return mu;
}

int ExtendedCharacter::exponent(const GroupElement& x) const {
    const int pos = subfield_pos_[static_cast<size_t>(x.a.code())];
    if (pos < 0) throw std::invalid_argument("element outside the abelian subgroup A");
    const GroupElement z = g_mul(h_inv_[static_cast<size_t>(pos)], x);
    if (!z.a.is_zero()) throw certification_error("decomposition left a non-central part");
    return (base_exp_[static_cast<size_t>(pos)] + lambda_.exponent(z.b.code())) % conductor();
}

Certificate ExtendedCharacter::certify() const {
    Certificate cert("extended_character");
    const FieldSpec& F = field();
    const int n = conductor();

    bool restricts = true;
    for (long b = 0; b < F.q2(); ++b) {
        const GroupElement z{F.zero(), F.element(static_cast<int>(b))};
        if (exponent(z) != lambda_.exponent(static_cast<int>(b))) restricts = false;
    }
    cert.record("restriction_to_center_is_lambda", "section3", restricts, "");

    // Homomorphism on all generator pairs, including each generator against
    // its own powers and central shifts.
    bool hom = true;
    std::string witness;
    const auto check_pair = [&](const GroupElement& x, const GroupElement& y) {
        if (exponent(g_mul(x, y)) != (exponent(x) + exponent(y)) % n) {
            hom = false;
            witness = "pair with first coordinates " + std::to_string(x.a.code()) + "," +
                      std::to_string(y.a.code());
        }
    };
    for (const auto& gx : gens_)
        for (const auto& gy : gens_) check_pair(gx, gy);

    // Exhaustive scan of A x A for small fields; A has q^3 elements, so cap
    // at q <= 4 and sample beyond that.
    if (F.q() <= 4) {
        for (int ax : F.subfield_q())
            for (long bx = 0; bx < F.q2(); ++bx)
                for (int ay : F.subfield_q())
                    for (long by = 0; by < F.q2(); ++by)
                        check_pair({F.element(ax), F.element(static_cast<int>(bx))},
                                   {F.element(ay), F.element(static_cast<int>(by))});
    } else {
        std::mt19937 rng(2718);
        std::uniform_int_distribution<size_t> pick_a(0, F.subfield_q().size() - 1);
        std::uniform_int_distribution<long> pick_b(0, F.q2() - 1);
        for (int rep = 0; rep < 512; ++rep)
            check_pair({F.element(F.subfield_q()[pick_a(rng)]),
                        F.element(static_cast<int>(pick_b(rng)))},
                       {F.element(F.subfield_q()[pick_a(rng)]),
                        F.element(static_cast<int>(pick_b(rng)))});
    }
    cert.record("homomorphism_on_A", "section3", hom, witness);
    return cert;
}

UnitaryRep UnitaryRep::induce(ExtendedCharacter mu) {
    UnitaryRep rep(std::move(mu));
    const FieldSpec& F = rep.field();

    // Additive coset representatives of F_q in F_{q^2}, greedy in canonical
    // order; r_1 = 0 so t_1 is the identity.
    std::vector<int> reps;
    rep.coset_of_.assign(static_cast<size_t>(F.q2()), -1);
    for (long c = 0; c < F.q2(); ++c) {
        if (rep.coset_of_[static_cast<size_t>(c)] >= 0) continue;
        const int k = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(c));
        for (int u : F.subfield_q())
            rep.coset_of_[static_cast<size_t>(F.add(static_cast<int>(c), u))] = k;
    }
    if (static_cast<long>(reps.size()) != F.q())
        throw certification_error("coset transversal has wrong size");

    for (int r : reps) {
        const GroupElement t{F.element(r), F.zero()};
        rep.transversal_.push_back(t);
        rep.transversal_inv_.push_back(g_inv(t));
    }
    return rep;
}

ExactMatrix UnitaryRep::evaluate(const GroupElement& g) const {
    const int q = dimension();
    ExactMatrix m(q, q, conductor());
    for (int l = 0; l < q; ++l) {
        const GroupElement w = g_mul(g, transversal_[static_cast<size_t>(l)]);
        const int k = coset_of_[static_cast<size_t>(w.a.code())];
        const GroupElement arg = g_mul(transversal_inv_[static_cast<size_t>(k)], w);
        m.set(k, l, root_of_unity(conductor(), mu_.exponent(arg)));
    }
    return m;
}

CyclotomicNumber UnitaryRep::character(const GroupElement& g) const {
    CyclotomicNumber chi(conductor());
    for (size_t k = 0; k < transversal_.size(); ++k) {
        const GroupElement w = g_mul(g, transversal_[k]);
        if (coset_of_[static_cast<size_t>(w.a.code())] != static_cast<int>(k)) continue;
        chi += root_of_unity(conductor(), mu_.exponent(g_mul(transversal_inv_[k], w)));
    }
    return chi;
}

Certificate verify_lemma1(const Gq& group, const UnitaryRep& rep, long exhaustive_limit) {
    Certificate cert("lemma1");
    const FieldSpec& F = group.field();
    const long q = F.q();
    const int n = rep.conductor();

    cert.record("degree_is_q", "lemma1",
                rep.character(group.identity()).equals_rational(Rational(q)), "chi(1) != q");

    // chi(z (a,0)) = lambda(z) chi((a,0)), so vanishing on the (a, 0) with
    // a != 0 covers every non-central element.
    bool vanishes = true;
    std::string witness;
    if (q * q <= exhaustive_limit) {
        for (long a = 1; a < F.q2() && vanishes; ++a)
            if (!rep.character(group.make(static_cast<int>(a), 0)).is_zero()) {
                vanishes = false;
                witness = "first coordinate " + std::to_string(a);
            }
    } else {
        std::mt19937 rng(1312);
        std::uniform_int_distribution<long> pick(1, F.q2() - 1);
        for (int trial = 0; trial < 256 && vanishes; ++trial) {
            const long a = pick(rng);
            if (!rep.character(group.make(static_cast<int>(a), 0)).is_zero()) {
                vanishes = false;
                witness = "first coordinate " + std::to_string(a);
            }
        }
    }
    cert.record("character_vanishes_off_center", "lemma1", vanishes, witness);

    // Irreducibility: sum over the center of |chi(z)|^2 must be |G_q| = q^4.
    CyclotomicNumber total(n);
    for (long b = 0; b < F.q2(); ++b)
        total += rep.character(group.make(0, static_cast<int>(b))).norm_squared();
    cert.record("character_norm_is_group_order", "lemma1",
                total.equals_rational(Rational(q * q * q * q)), "sum |chi(z)|^2 != q^4");

    // Scalar action on the center: image of size p, kernel of size q^2/p.
    std::set<int> central_values;
    long kernel = 0;
    const CentralCharacter& lambda = rep.central_character();
    for (long b = 0; b < F.q2(); ++b) {
        const int e = lambda.exponent(static_cast<int>(b));
        central_values.insert(e);
        if (e == 0) ++kernel;
    }
    cert.record("central_image_has_order_p", "section3",
                static_cast<int>(central_values.size()) == F.p(), "");
    cert.record("kernel_order_q2_over_p", "section3", kernel * F.p() == F.q2(),
                "kernel has " + std::to_string(kernel) + " central elements");
    return cert;
}

} // namespace mubforge
