#include "mubforge/field.hpp"

#include <algorithm>
#include <string>

namespace mubforge {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomial arithmetic over F_p, little-endian coefficient vectors,
// used only while constructing a FieldSpec.
using Poly = std::vector<int>;

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    return poly_trim(std::move(r));
}

// Remainder of f modulo a monic divisor.
Poly poly_mod(Poly f, const Poly& m, int p) {
    f = poly_trim(std::move(f));
    const size_t dm = m.size() - 1;
    while (f.size() > dm) {
        const int lead = f.back();
        const size_t shift = f.size() - 1 - dm;
        if (lead != 0)
            for (size_t k = 0; k < m.size(); ++k) {
                const size_t i = k + shift;
                f[i] = ((f[i] - lead * m[k]) % p + p * p) % p;
            }
        f = poly_trim(std::move(f));
        if (f.empty()) break;
    }
    return f;
}

// Exhaustive factor search: a monic polynomial of degree d is irreducible
// iff no monic polynomial of degree 1..d/2 divides it.
bool poly_irreducible(const Poly& f, int p) {
    const int d = static_cast<int>(f.size()) - 1;
    for (int dd = 1; 2 * dd <= d; ++dd) {
        long count = 1;
        for (int k = 0; k < dd; ++k) count *= p;
        for (long idx = 0; idx < count; ++idx) {
            Poly g(static_cast<size_t>(dd) + 1, 0);
            g[static_cast<size_t>(dd)] = 1;
            long rest = idx;
            // idx encodes coefficients low-degree-first; the order does not
            // matter for a divisibility scan.
            for (int k = 0; k < dd; ++k) {
                g[static_cast<size_t>(k)] = static_cast<int>(rest % p);
                rest /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

std::shared_ptr<const FieldSpec> FieldSpec::make(int p, int a, long max_q) {
    if (!is_prime(p)) throw input_error(std::to_string(p) + " is not prime");
    if (a < 1) throw input_error("field exponent must be positive");
    long q = 1;
    for (int k = 0; k < a; ++k) {
        q *= p;
        if (q > max_q)
            throw resource_error("q = " + std::to_string(p) + "^" + std::to_string(a) +
                                 " exceeds the configured limit " + std::to_string(max_q));
    }

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->a_ = a;
    spec->q_ = q;
    spec->q2_ = q * q;

    // Lexicographically smallest monic irreducible modulus of degree 2a,
    // coefficients compared low-degree-first.
    const int deg = 2 * a;
    long candidates = 1;
    for (int k = 0; k < deg; ++k) candidates *= p;
    bool found = false;
    for (long idx = 0; idx < candidates && !found; ++idx) {
        Poly f(static_cast<size_t>(deg) + 1, 0);
        f[static_cast<size_t>(deg)] = 1;
        long rest = idx;
        // Most significant digit of idx drives c_0 so ascending idx is the
        // required lexicographic order.
        // c_0 takes the most significant digit of idx so that ascending idx
        // is lexicographic order compared low-degree-first.
        for (int k = deg - 1; k >= 0; --k) {
            f[static_cast<size_t>(k)] = static_cast<int>(rest % p);
            rest /= p;
        }
        if (poly_irreducible(f, p)) {
            spec->modulus_ = f;
            found = true;
        }
    }
    if (!found) throw certification_error("no irreducible modulus found"); // unreachable

    spec->build_tables();
    return spec;
}

std::vector<int> FieldSpec::coeffs_of(int code) const {
    std::vector<int> c(static_cast<size_t>(2 * a_));
    long rest = code;
    for (int k = 2 * a_ - 1; k >= 0; --k) {
        c[static_cast<size_t>(k)] = static_cast<int>(rest % p_);
        rest /= p_;
    }
    return c;
}

int FieldSpec::code_of(const std::vector<int>& coeffs) const {
    if (coeffs.size() != static_cast<size_t>(2 * a_))
        throw std::invalid_argument("coefficient vector must have length 2a");
    long code = 0;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        const int c = coeffs[k];
        if (c < 0 || c >= p_) throw std::invalid_argument("coefficient out of range");
        code = code * p_ + c; // c_0 ends up most significant, matching coeffs_of
    }
    return static_cast<int>(code);
}

void FieldSpec::build_tables() {
    const long n = q2_;
    const int deg = 2 * a_;

    add_.assign(static_cast<size_t>(n * n), 0);
    mul_.assign(static_cast<size_t>(n * n), 0);
    neg_.assign(static_cast<size_t>(n), 0);

    std::vector<Poly> polys(static_cast<size_t>(n));
    for (long x = 0; x < n; ++x) {
        const auto c = coeffs_of(static_cast<int>(x));
        polys[static_cast<size_t>(x)] = poly_trim(Poly(c.begin(), c.end()));
    }
    auto code_of_poly = [&](const Poly& f) {
        std::vector<int> c(static_cast<size_t>(deg), 0);
        for (size_t k = 0; k < f.size(); ++k) c[k] = f[k];
        return code_of(c);
    };

    for (long x = 0; x < n; ++x) {
        const auto cx = coeffs_of(static_cast<int>(x));
        std::vector<int> cn(cx.size());
        for (size_t k = 0; k < cx.size(); ++k) cn[k] = (p_ - cx[k]) % p_;
        neg_[static_cast<size_t>(x)] = code_of(cn);
        for (long y = x; y < n; ++y) {
            const auto cy = coeffs_of(static_cast<int>(y));
            std::vector<int> cs(cx.size());
            for (size_t k = 0; k < cx.size(); ++k) cs[k] = (cx[k] + cy[k]) % p_;
            const int s = code_of(cs);
            add_[idx(static_cast<int>(x), static_cast<int>(y))] = s;
            add_[idx(static_cast<int>(y), static_cast<int>(x))] = s;
            const int m =
                code_of_poly(poly_mod(poly_mul(polys[static_cast<size_t>(x)],
                                               polys[static_cast<size_t>(y)], p_),
                                      modulus_, p_));
            mul_[idx(static_cast<int>(x), static_cast<int>(y))] = m;
            mul_[idx(static_cast<int>(y), static_cast<int>(x))] = m;
        }
    }

    frob_.assign(static_cast<size_t>(n), 0);
    for (long x = 0; x < n; ++x)
        frob_[static_cast<size_t>(x)] = pow(static_cast<int>(x), q_);

    inv_.assign(static_cast<size_t>(n), 0);
    for (long x = 1; x < n; ++x)
        inv_[static_cast<size_t>(x)] = pow(static_cast<int>(x), n - 2);

    // Absolute trace x + x^p + ... + x^{p^{2a-1}}; lands in F_p.
    trace_.assign(static_cast<size_t>(n), 0);
    for (long x = 0; x < n; ++x) {
        int acc = 0;
        int cur = static_cast<int>(x);
        for (int k = 0; k < deg; ++k) {
            acc = add(acc, cur);
            cur = pow(cur, p_);
        }
        const auto c = coeffs_of(acc);
        for (size_t k = 1; k < c.size(); ++k)
            if (c[k] != 0) throw certification_error("trace value escaped F_p");
        trace_[static_cast<size_t>(x)] = c[0];
    }

    for (long x = 0; x < n; ++x) {
        if (in_subfield_q(static_cast<int>(x))) subfield_q_.push_back(static_cast<int>(x));
        if (is_skew(static_cast<int>(x))) skew_.push_back(static_cast<int>(x));
    }
    if (static_cast<long>(subfield_q_.size()) != q_)
        throw certification_error("fixed field of x -> x^q has wrong size");
    if (static_cast<long>(skew_.size()) != q_)
        throw certification_error("skew set {e : e^q = -e} has wrong size");

    // Lexicographically smallest multiplicative generator, by exhaustive
    // order check (at most 1024 elements at the size cap).
    std::vector<int> unit(static_cast<size_t>(deg), 0);
    unit[0] = 1;
    const int one_code = code_of(unit);
    generator_ = -1;
    for (long g = 1; g < n && generator_ < 0; ++g) {
        if (g == one_code && n > 2) continue;
        long order = 1;
        int cur = static_cast<int>(g);
        while (cur != one_code) {
            cur = mul(cur, static_cast<int>(g));
            ++order;
            if (order > n) throw certification_error("order scan overrun");
        }
        if (order == n - 1) generator_ = static_cast<int>(g);
    }
    if (generator_ < 0) throw certification_error("no multiplicative generator found");

    alpha_ = pow(generator_, q_ - 1);
    long order = 1;
    int cur = alpha_;
    while (cur != one_code) {
        cur = mul(cur, alpha_);
        ++order;
    }
    if (order != q_ + 1) throw certification_error("alpha does not have order q+1");
}

int FieldSpec::inv(int x) const {
    if (x == 0) throw std::domain_error("field inverse of zero");
    return inv_[static_cast<size_t>(x)];
}

int FieldSpec::pow(int x, long e) const {
    if (e < 0) {
        x = inv(x);
        e = -e;
    }
    std::vector<int> c(static_cast<size_t>(2 * a_), 0);
    c[0] = 1;
    int acc = code_of(c);
    int base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldElement FieldSpec::element(int code) const {
    if (code < 0 || code >= q2_) throw std::invalid_argument("element code out of range");
    return {this, code};
}

FieldElement FieldSpec::from_coeffs(const std::vector<int>& coeffs) const {
    return {this, code_of(coeffs)};
}

FieldElement FieldSpec::zero() const { return {this, 0}; }

FieldElement FieldSpec::one() const {
    std::vector<int> c(static_cast<size_t>(2 * a_), 0);
    c[0] = 1;
    return {this, code_of(c)};
}

FieldElement frobenius_q(const FieldElement& x) {
    return {x.spec(), x.spec()->frob_q(x.code())};
}

FieldElement find_alpha(const FieldSpec& spec) {
    return {&spec, spec.alpha_code()};
}

std::vector<FieldElement> skew_elements(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.skew_codes().size());
    for (int code : spec.skew_codes()) out.emplace_back(&spec, code);
    return out;
}

} // namespace mubforge
