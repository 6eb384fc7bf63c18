#pragma once
#include <cstdint>
#include <queue>
#include <unordered_set>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/poly.hpp"

namespace sympow {

struct GroebnerStats {
    std::uint64_t pairs_considered = 0;  // popped from the queue
    std::uint64_t pairs_reduced = 0;     // survived both criteria, S-poly reduced
    std::uint64_t zero_reductions = 0;
    int max_lcm_degree = 0;
};

// Reduced Groebner basis: elements monic, tails reduced, sorted by lead
// monomial ascending.  If `truncated`, only S-pairs with lcm degree
// <= degree_cap were processed; for homogeneous input that still gives
// exact normal forms in degrees <= degree_cap.
template <class F>
struct GroebnerBasis {
    RingPtr<F> ring;
    MonomialOrder order;
    std::vector<Polynomial<F>> elems;
    bool reduced = true;
    bool truncated = false;
    int degree_cap = -1;
    GroebnerStats stats;
};

struct BuchbergerOptions {
    bool use_coprime_criterion = true;
    bool use_chain_criterion = true;
    // Truncation device (not an error): skip S-pairs above this lcm degree.
    int degree_cap = -1;
    // Budgets; exceeding either throws ResourceCap.
    std::uint64_t max_pairs = 0;  // 0 = unlimited
    int max_degree = -1;          // -1 = unlimited
};

// S(f,g) = (L/lt f)·f − (L/lt g)·g with L = lcm of lead monomials; the
// division is by the full lead terms, so lead coefficients cancel too.
template <class F>
Polynomial<F> s_poly(const Polynomial<F>& f, const Polynomial<F>& g) {
    require_same_ring(f.ring, g.ring);
    if (!(f.order == g.order)) throw ContextMismatch("s_poly under different orders");
    if (f.is_zero() || g.is_zero()) throw ZeroInput("s_poly of a zero polynomial");
    const F& k = f.ring->field;
    Monomial L = mono_lcm(f.lead_mono(), g.lead_mono());
    Polynomial<F> a = poly_mul_term(f, mono_div(L, f.lead_mono()), k.inv(f.lead_coeff()));
    Polynomial<F> b = poly_mul_term(g, mono_div(L, g.lead_mono()), k.inv(g.lead_coeff()));
    return poly_sub(a, b);
}

namespace gb_detail {

// Full normal form of f against the (nonzero) polynomials in G.  Over Q
// the loop is fraction-free: the working polynomial is scaled to integer
// coefficients and a running scalar keeps track, so the returned value
// is still the exact normal form.  Over F_p reducers are used as-is
// (callers pass monic bases).
template <class F>
Polynomial<F> normal_form_raw(const Polynomial<F>& f, const std::vector<Polynomial<F>>& G) {
    const F& k = f.ring->field;
    Polynomial<F> tail = f;
    std::vector<Term<F>> done;
    [[maybe_unused]] mpq_class scale = 1;  // tracked factor: done+tail = scale * (f mod G)

    if constexpr (F::is_rationals) {
        Polynomial<F> t2 = poly_normalize(tail);
        if (!tail.is_zero()) scale = t2.lead_coeff() / tail.lead_coeff();
        tail = std::move(t2);
    }

    int steps_since_strip = 0;
    while (!tail.is_zero()) {
        const Term<F>& head = tail.terms.front();
        const Polynomial<F>* red = nullptr;
        for (const auto& g : G) {
            if (mono_divides(g.lead_mono(), head.m)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            done.push_back(head);
            tail.terms.erase(tail.terms.begin());
            continue;
        }
        Monomial shift = mono_div(head.m, red->lead_mono());
        if constexpr (F::is_rationals) {
            mpz_class a = red->lead_coeff().get_num() * head.c.get_den();
            mpz_class c = head.c.get_num() * red->lead_coeff().get_den();
            mpz_class d;
            mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
            mpq_class up(a / d), mult(c / d);
            if (up < 0) {
                up = -up;
                mult = -mult;
            }
            if (up != 1) {
                for (auto& t : done) t.c *= up;
                tail = poly_mul_scalar(tail, mpq_class(up));
                scale *= up;
            }
            tail = poly_sub(tail, poly_mul_term(*red, shift, mpq_class(mult)));
            if (++steps_since_strip >= 64) {
                steps_since_strip = 0;
                mpz_class content = 0;
                for (const auto& t : done)
                    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.c.get_num().get_mpz_t());
                for (const auto& t : tail.terms)
                    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.c.get_num().get_mpz_t());
                if (content > 1) {
                    for (auto& t : done) t.c /= content;
                    for (auto& t : tail.terms) t.c /= content;
                    scale /= content;
                }
            }
        } else {
            auto mult = k.div(head.c, red->lead_coeff());
            tail = poly_sub(tail, poly_mul_term(*red, shift, mult));
        }
    }
    Polynomial<F> out{f.ring, f.order, std::move(done)};
    if constexpr (F::is_rationals) {
        if (scale != 1) out = poly_mul_scalar(out, mpq_class(1 / scale));
    }
    return out;
}

struct Pair {
    Monomial lcm;
    int i, j;
};

inline std::uint64_t pair_key(int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

}  // namespace gb_detail

// Buchberger with normal (lowest lcm degree first) selection and the two
// classical pair criteria, followed by interreduction to the unique
// reduced basis.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, const MonomialOrder& order,
                            const BuchbergerOptions& opts = {}) {
    using gb_detail::Pair;
    using gb_detail::pair_key;

    RingPtr<F> ring;
    std::vector<Polynomial<F>> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ring)
            ring = g.ring;
        else
            require_same_ring(ring, g.ring);
        basis.push_back(poly_normalize(poly_with_order(g, order)));
    }
    if (basis.empty()) throw EmptyIdeal("all generators are zero");
    const F& k = ring->field;

    GroebnerStats stats;
    bool truncated = false;

    auto cmp = [](const Pair& a, const Pair& b) {
        if (a.lcm.deg != b.lcm.deg) return a.lcm.deg > b.lcm.deg;
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(cmp)> queue(cmp);
    std::unordered_set<std::uint64_t> pending;

    auto push_pairs_with = [&](int t) {
        for (int i = 0; i < t; ++i) {
            queue.push(Pair{mono_lcm(basis[i].lead_mono(), basis[t].lead_mono()), i, t});
            pending.insert(pair_key(i, t));
        }
    };
    for (int t = 1; t < static_cast<int>(basis.size()); ++t) push_pairs_with(t);

    while (!queue.empty()) {
        Pair pr = queue.top();
        queue.pop();
        pending.erase(pair_key(pr.i, pr.j));
        ++stats.pairs_considered;

        if (opts.degree_cap >= 0 && static_cast<int>(pr.lcm.deg) > opts.degree_cap) {
            truncated = true;
            continue;
        }
        if (opts.max_degree >= 0 && static_cast<int>(pr.lcm.deg) > opts.max_degree)
            throw ResourceCap("Groebner degree budget exceeded", stats.pairs_reduced,
                              static_cast<int>(pr.lcm.deg));

        const Polynomial<F>&f = basis[pr.i], &g = basis[pr.j];
        if (opts.use_coprime_criterion && mono_coprime(f.lead_mono(), g.lead_mono())) continue;
        if (opts.use_chain_criterion) {
            bool skip = false;
            for (int t = 0; t < static_cast<int>(basis.size()) && !skip; ++t) {
                if (t == pr.i || t == pr.j) continue;
                if (!mono_divides(basis[t].lead_mono(), pr.lcm)) continue;
                int a1 = std::min(pr.i, t), b1 = std::max(pr.i, t);
                int a2 = std::min(pr.j, t), b2 = std::max(pr.j, t);
                if (!pending.count(pair_key(a1, b1)) && !pending.count(pair_key(a2, b2)))
                    skip = true;
            }
            if (skip) continue;
        }

        ++stats.pairs_reduced;
        if (opts.max_pairs && stats.pairs_reduced > opts.max_pairs)
            throw ResourceCap("Groebner pair budget exceeded", stats.pairs_reduced,
                              static_cast<int>(pr.lcm.deg));
        stats.max_lcm_degree = std::max(stats.max_lcm_degree, static_cast<int>(pr.lcm.deg));

        Polynomial<F> s = s_poly(f, g);
        Polynomial<F> r = gb_detail::normal_form_raw(s, basis);
        if (r.is_zero()) {
            ++stats.zero_reductions;
            continue;
        }
        basis.push_back(poly_normalize(std::move(r)));
        push_pairs_with(static_cast<int>(basis.size()) - 1);
    }

    // Interreduce: drop elements whose lead is divisible by another lead,
    // then fully reduce each tail against the rest.
    std::vector<int> order_idx(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = static_cast<int>(i);
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        return mono_cmp(order, basis[a].lead_mono(), basis[b].lead_mono()) < 0;
    });
    std::vector<Polynomial<F>> minimal;
    for (int idx : order_idx) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (mono_divides(kept.lead_mono(), basis[idx].lead_mono())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[idx]);
    }
    std::vector<Polynomial<F>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<F>> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial<F> r = others.empty() ? minimal[i]
                                         : gb_detail::normal_form_raw(minimal[i], others);
        reduced.push_back(poly_mul_scalar(r, k.inv(r.lead_coeff())));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
        return mono_cmp(order, a.lead_mono(), b.lead_mono()) < 0;
    });

    GroebnerBasis<F> gb;
    gb.ring = ring;
    gb.order = order;
    gb.elems = std::move(reduced);
    gb.reduced = true;
    gb.truncated = truncated;
    gb.degree_cap = opts.degree_cap;
    gb.stats = stats;
    return gb;
}

// Full normal form against a basis; unique once the basis is reduced.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
    require_same_ring(f.ring, gb.ring);
    if (!(f.order == gb.order))
        return normal_form(poly_with_order(f, gb.order), gb);
    if (gb.truncated && f.degree() > gb.degree_cap)
        throw BadParameter("normal form of degree " + std::to_string(f.degree()) +
                           " against a basis truncated at degree " +
                           std::to_string(gb.degree_cap));
    return gb_detail::normal_form_raw(f, gb.elems);
}

}  // namespace sympow
