#pragma once
#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sympow/errors.hpp"
#include "sympow/monomial.hpp"
#include "sympow/ring.hpp"

namespace sympow {

template <class F>
struct Term {
    Monomial m;
    typename F::Elem c;
};

// Sparse polynomial: terms kept sorted strictly descending in `order`,
// no zero coefficients.  The zero polynomial has no terms.
template <class F>
struct Polynomial {
    using Elem = typename F::Elem;

    RingPtr<F> ring;
    MonomialOrder order;
    std::vector<Term<F>> terms;

    bool is_zero() const { return terms.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms) d = std::max(d, static_cast<int>(t.m.deg));
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms)
            if (t.m.deg != terms.front().m.deg) return false;
        return true;
    }
    const Term<F>& lead() const {
        if (terms.empty()) throw ZeroInput("lead term of the zero polynomial");
        return terms.front();
    }
    const Monomial& lead_mono() const { return lead().m; }
    const Elem& lead_coeff() const { return lead().c; }
};

template <class F>
Polynomial<F> poly_zero(const RingPtr<F>& ring, const MonomialOrder& order) {
    return {ring, order, {}};
}

// Canonicalize an arbitrary term list: sort descending, merge equal
// monomials, drop zeros.
template <class F>
Polynomial<F> poly_from_terms(const RingPtr<F>& ring, const MonomialOrder& order,
                              std::vector<Term<F>> terms) {
    const F& k = ring->field;
    std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
        return mono_cmp(order, a.m, b.m) > 0;
    });
    std::vector<Term<F>> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = k.add(out.back().c, t.c);
        else
            out.push_back(std::move(t));
        if (!out.empty() && k.is_zero(out.back().c)) out.pop_back();
    }
    return {ring, order, std::move(out)};
}

template <class F>
Polynomial<F> poly_constant(const RingPtr<F>& ring, const MonomialOrder& order,
                            typename F::Elem c) {
    if (ring->field.is_zero(c)) return poly_zero(ring, order);
    return {ring, order, {Term<F>{Monomial::unit(ring->num_vars), std::move(c)}}};
}

template <class F>
Polynomial<F> poly_var(const RingPtr<F>& ring, const MonomialOrder& order, int i,
                       std::uint16_t power = 1) {
    if (i < 0 || i >= ring->num_vars) throw BadParameter("variable index out of range");
    return {ring, order, {Term<F>{Monomial::var(ring->num_vars, i, power), ring->field.one()}}};
}

template <class F>
Polynomial<F> poly_add(const Polynomial<F>& a, const Polynomial<F>& b) {
    require_same_ring(a.ring, b.ring);
    if (!(a.order == b.order)) throw ContextMismatch("adding polynomials under different orders");
    const F& k = a.ring->field;
    std::vector<Term<F>> out;
    out.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = mono_cmp(a.order, a.terms[i].m, b.terms[j].m);
        if (c > 0) {
            out.push_back(a.terms[i++]);
        } else if (c < 0) {
            out.push_back(b.terms[j++]);
        } else {
            auto s = k.add(a.terms[i].c, b.terms[j].c);
            if (!k.is_zero(s)) out.push_back(Term<F>{a.terms[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) out.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) out.push_back(b.terms[j]);
    return {a.ring, a.order, std::move(out)};
}

template <class F>
Polynomial<F> poly_neg(const Polynomial<F>& a) {
    const F& k = a.ring->field;
    Polynomial<F> r = a;
    for (auto& t : r.terms) t.c = k.neg(t.c);
    return r;
}

template <class F>
Polynomial<F> poly_sub(const Polynomial<F>& a, const Polynomial<F>& b) {
    return poly_add(a, poly_neg(b));
}

// Multiply by a single term: preserves sortedness because monomial
// orders are translation invariant.
template <class F>
Polynomial<F> poly_mul_term(const Polynomial<F>& a, const Monomial& m,
                            const typename F::Elem& c) {
    const F& k = a.ring->field;
    if (k.is_zero(c)) return poly_zero(a.ring, a.order);
    Polynomial<F> r = a;
    for (auto& t : r.terms) {
        t.m = mono_mul(t.m, m);
        t.c = k.mul(t.c, c);
    }
    return r;
}

template <class F>
Polynomial<F> poly_mul_scalar(const Polynomial<F>& a, const typename F::Elem& c) {
    return poly_mul_term(a, Monomial::unit(a.ring->num_vars), c);
}

template <class F>
Polynomial<F> poly_mul(const Polynomial<F>& a, const Polynomial<F>& b) {
    require_same_ring(a.ring, b.ring);
    if (!(a.order == b.order)) throw ContextMismatch("multiplying under different orders");
    const F& k = a.ring->field;
    std::vector<Term<F>> out;
    out.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            out.push_back(Term<F>{mono_mul(ta.m, tb.m), k.mul(ta.c, tb.c)});
    return poly_from_terms(a.ring, a.order, std::move(out));
}

template <class F>
Polynomial<F> poly_pow(const Polynomial<F>& a, unsigned e) {
    Polynomial<F> r = poly_constant(a.ring, a.order, a.ring->field.one());
    Polynomial<F> base = a;
    for (; e; e >>= 1) {
        if (e & 1) r = poly_mul(r, base);
        if (e > 1) base = poly_mul(base, base);
    }
    return r;
}

template <class F>
Polynomial<F> poly_with_order(const Polynomial<F>& a, const MonomialOrder& order) {
    if (a.order == order) return a;
    return poly_from_terms(a.ring, order, a.terms);
}

template <class F>
bool poly_eq(const Polynomial<F>& a, const Polynomial<F>& b) {
    require_same_ring(a.ring, b.ring);
    const Polynomial<F> bb = poly_with_order(b, a.order);
    if (a.terms.size() != bb.terms.size()) return false;
    const F& k = a.ring->field;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (!(a.terms[i].m == bb.terms[i].m) || !k.eq(a.terms[i].c, bb.terms[i].c)) return false;
    return true;
}

// Evaluate at a point, with per-variable power tables so repeated
// exponents cost one lookup.
template <class F>
typename F::Elem poly_eval(const Polynomial<F>& a,
                           const std::vector<typename F::Elem>& point) {
    const F& k = a.ring->field;
    if (static_cast<int>(point.size()) != a.ring->num_vars)
        throw LengthMismatch("evaluation point has wrong dimension");
    std::array<std::uint16_t, kMaxVars> maxe{};
    for (const auto& t : a.terms)
        for (int i = 0; i < a.ring->num_vars; ++i) maxe[i] = std::max(maxe[i], t.m.e[i]);
    std::vector<std::vector<typename F::Elem>> powers(a.ring->num_vars);
    for (int i = 0; i < a.ring->num_vars; ++i) {
        powers[i].resize(maxe[i] + 1u, k.one());
        for (std::uint16_t e = 1; e <= maxe[i]; ++e)
            powers[i][e] = k.mul(powers[i][e - 1], point[i]);
    }
    typename F::Elem acc = k.zero();
    for (const auto& t : a.terms) {
        typename F::Elem v = t.c;
        for (int i = 0; i < a.ring->num_vars; ++i)
            if (t.m.e[i]) v = k.mul(v, powers[i][t.m.e[i]]);
        acc = k.add(acc, v);
    }
    return acc;
}

// Hasse (divided-power) derivative D^a: x^e maps to prod C(e_i, a_i)
// x^{e-a}.  Works in any characteristic, which is the point: ordinary
// partials degenerate mod p.
template <class F>
Polynomial<F> hasse_derivative(const Polynomial<F>& f, const Monomial& a) {
    const F& k = f.ring->field;
    std::vector<Term<F>> out;
    for (const auto& t : f.terms) {
        if (!mono_divides(a, t.m)) continue;
        mpz_class binprod = 1;
        for (int i = 0; i < f.ring->num_vars; ++i) {
            if (a.e[i] == 0) continue;
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), t.m.e[i], a.e[i]);
            binprod *= b;
        }
        auto c = k.mul(t.c, k.from_mpz(binprod));
        if (!k.is_zero(c)) out.push_back(Term<F>{mono_div(t.m, a), std::move(c)});
    }
    return poly_from_terms(f.ring, f.order, std::move(out));
}

// Normalizations used inside basis computations.  Over a finite field:
// monic.  Over Q: integer coefficients with content 1 and positive lead.
template <class F>
Polynomial<F> poly_monic(const Polynomial<F>& a) {
    if (a.is_zero()) return a;
    return poly_mul_scalar(a, a.ring->field.inv(a.lead_coeff()));
}

template <class F>
Polynomial<F> poly_normalize(const Polynomial<F>& a) {
    if (a.is_zero()) return a;
    if constexpr (F::is_rationals) {
        mpz_class den_lcm = 1;
        for (const auto& t : a.terms)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
        mpz_class num_gcd = 0;
        for (const auto& t : a.terms) {
            mpz_class scaled = t.c.get_num() * (den_lcm / t.c.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
        }
        mpq_class factor(den_lcm, num_gcd);
        factor.canonicalize();
        if (a.lead_coeff() < 0) factor = -factor;
        return poly_mul_scalar(a, factor);
    } else {
        return poly_monic(a);
    }
}

std::string format_term_body(const std::string& coeff_str, const std::string& mono_str);

template <class F>
std::string poly_to_string(const Polynomial<F>& a) {
    if (a.is_zero()) return "0";
    const F& k = a.ring->field;
    std::string out;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        const auto& t = a.terms[i];
        std::string cs = k.str(t.c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        out += format_term_body(cs, mono_to_string(t.m, a.ring->var_names.data()));
    }
    return out;
}

}  // namespace sympow
