#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sympow/groebner.hpp"
#include "sympow/matrix.hpp"
#include "sympow/poly.hpp"
#include "sympow/textio.hpp"

namespace sympow {

// Move a polynomial into another ring: new exponent position i takes the
// exponent of old position index_map[i] (entries < 0 mean "fresh
// variable, exponent 0").
template <class F>
Polynomial<F> poly_map_vars(const Polynomial<F>& f, const RingPtr<F>& new_ring,
                            const MonomialOrder& new_order, const std::vector<int>& index_map) {
    if (static_cast<int>(index_map.size()) != new_ring->num_vars)
        throw LengthMismatch("index map does not cover the target ring");
    std::vector<Term<F>> terms;
    terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        Monomial m = Monomial::unit(new_ring->num_vars);
        std::uint32_t moved = 0;
        for (int i = 0; i < new_ring->num_vars; ++i) {
            if (index_map[i] < 0) continue;
            m.e[i] = t.m.e[index_map[i]];
            m.deg += m.e[i];
            moved += m.e[i];
        }
        if (moved != t.m.deg)
            throw BadParameter("variable map drops a variable that appears in the polynomial");
        terms.push_back(Term<F>{m, t.c});
    }
    return poly_from_terms(new_ring, new_order, std::move(terms));
}

// Exact quotient h / f; throws if f does not divide h.
template <class F>
Polynomial<F> poly_exact_div(const Polynomial<F>& h, const Polynomial<F>& f) {
    require_same_ring(h.ring, f.ring);
    if (f.is_zero()) throw ZeroDivisorPolynomial("division by the zero polynomial");
    const F& k = h.ring->field;
    Polynomial<F> rem = poly_with_order(h, f.order);
    std::vector<Term<F>> quot;
    while (!rem.is_zero()) {
        const Term<F>& head = rem.lead();
        if (!mono_divides(f.lead_mono(), head.m))
            throw BadParameter("polynomial division with nonzero remainder");
        Term<F> q{mono_div(head.m, f.lead_mono()), k.div(head.c, f.lead_coeff())};
        rem = poly_sub(rem, poly_mul_term(f, q.m, q.c));
        quot.push_back(std::move(q));
    }
    return poly_from_terms(h.ring, h.order, std::move(quot));
}

// Homogeneous ideal with a lazily computed, cached reduced grevlex GB.
// Copies share the cache; the cache is single-assignment under a mutex.
template <class F>
class Ideal {
  public:
    Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens, bool known_saturated = false)
        : ring_(std::move(ring)),
          order_(MonomialOrder::grevlex(ring_->num_vars)),
          known_saturated_(known_saturated),
          cache_(std::make_shared<Cache>()) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            require_same_ring(ring_, g.ring);
            gens_.push_back(poly_with_order(g, order_));
            homogeneous_ = homogeneous_ && gens_.back().is_homogeneous();
        }
        if (gens_.empty()) throw EmptyIdeal("ideal needs at least one nonzero generator");
    }

    // For operations that already produce a reduced grevlex GB.
    static Ideal with_known_gb(RingPtr<F> ring, GroebnerBasis<F> gb, bool known_saturated) {
        Ideal I(std::move(ring), gb.elems, known_saturated);
        I.cache_->gb = std::make_shared<const GroebnerBasis<F>>(std::move(gb));
        return I;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial<F>>& gens() const { return gens_; }
    bool homogeneous() const { return homogeneous_; }
    bool known_saturated() const { return known_saturated_; }
    void mark_saturated() { known_saturated_ = true; }

    std::shared_ptr<const GroebnerBasis<F>> groebner(const BuchbergerOptions& opts = {}) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (!cache_->gb) {
            auto gb = buchberger(gens_, order_, opts);
            if (!gb.truncated)
                cache_->gb = std::make_shared<const GroebnerBasis<F>>(std::move(gb));
            else
                return std::make_shared<const GroebnerBasis<F>>(std::move(gb));
        }
        return cache_->gb;
    }

    bool contains(const Polynomial<F>& f) const {
        if (f.is_zero()) return true;
        return normal_form(f, *groebner()).is_zero();
    }

  private:
    RingPtr<F> ring_;
    MonomialOrder order_;
    std::vector<Polynomial<F>> gens_;
    bool homogeneous_ = true;
    bool known_saturated_ = false;
    struct Cache {
        std::mutex mu;
        std::shared_ptr<const GroebnerBasis<F>> gb;
    };
    std::shared_ptr<Cache> cache_;
};

template <class F>
bool ideal_eq(const Ideal<F>& a, const Ideal<F>& b) {
    require_same_ring(a.ring(), b.ring());
    const auto& ga = a.groebner()->elems;
    const auto& gb = b.groebner()->elems;
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (!poly_eq(ga[i], gb[i])) return false;
    return true;
}

template <class F>
bool ideal_subset(const Ideal<F>& a, const Ideal<F>& b) {
    for (const auto& g : a.gens())
        if (!b.contains(g)) return false;
    return true;
}

// All r-fold products of generators, deduplicated.
template <class F>
Ideal<F> ideal_power(const Ideal<F>& I, unsigned r) {
    if (r == 0) throw ZeroExponent("ideal power wants exponent >= 1");
    if (r == 1) return I;
    const auto& gens = I.gens();
    std::vector<Polynomial<F>> products;
    // Multisets of generator indices, nondecreasing.
    std::vector<std::size_t> pick(r, 0);
    for (;;) {
        Polynomial<F> prod = gens[pick[0]];
        for (unsigned i = 1; i < r; ++i) prod = poly_mul(prod, gens[pick[i]]);
        bool dup = false;
        for (const auto& q : products)
            if (poly_eq(q, prod)) {
                dup = true;
                break;
            }
        if (!dup) products.push_back(std::move(prod));
        // next multiset
        int pos = static_cast<int>(r) - 1;
        while (pos >= 0 && pick[pos] == gens.size() - 1) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (unsigned i = pos + 1; i < r; ++i) pick[i] = pick[pos];
    }
    return Ideal<F>(I.ring(), std::move(products));
}

// I ∩ J by the auxiliary-variable method: eliminate w from w·I + (1−w)·J.
// The surviving elements of the big reduced GB are the reduced grevlex GB
// of the intersection, so the result carries its basis along.
template <class F>
Ideal<F> intersect(const Ideal<F>& I, const Ideal<F>& J) {
    require_same_ring(I.ring(), J.ring());
    const RingPtr<F>& ring = I.ring();
    const int n = ring->num_vars;
    if (n + 1 > kMaxVars) throw BadParameter("no room for the elimination variable");
    RingPtr<F> big = extended_ring(ring, "w_elim");
    MonomialOrder elim = MonomialOrder::block(n + 1, n);

    std::vector<int> up(n + 1);
    for (int i = 0; i < n; ++i) up[i] = i;
    up[n] = -1;

    const F& k = ring->field;
    Polynomial<F> w = poly_var(big, elim, n);
    Polynomial<F> one_minus_w =
        poly_sub(poly_constant(big, elim, k.one()), w);
    std::vector<Polynomial<F>> work;
    for (const auto& f : I.gens()) work.push_back(poly_mul(w, poly_map_vars(f, big, elim, up)));
    for (const auto& g : J.gens())
        work.push_back(poly_mul(one_minus_w, poly_map_vars(g, big, elim, up)));

    GroebnerBasis<F> gb = buchberger(work, elim);
    std::vector<int> down(n);
    for (int i = 0; i < n; ++i) down[i] = i;
    GroebnerBasis<F> small;
    small.ring = ring;
    small.order = MonomialOrder::grevlex(n);
    for (const auto& g : gb.elems) {
        bool uses_w = false;
        for (const auto& t : g.terms) uses_w = uses_w || t.m.e[n] != 0;
        if (!uses_w) small.elems.push_back(poly_map_vars(g, ring, small.order, down));
    }
    if (small.elems.empty()) throw EmptyIdeal("empty intersection basis (inputs were units?)");
    std::sort(small.elems.begin(), small.elems.end(),
              [&](const Polynomial<F>& a, const Polynomial<F>& b) {
                  return mono_cmp(small.order, a.lead_mono(), b.lead_mono()) < 0;
              });
    return Ideal<F>::with_known_gb(ring, std::move(small), false);
}

template <class F>
Ideal<F> intersect_many(std::vector<Ideal<F>> parts) {
    if (parts.empty()) throw EmptyIdeal("intersection of no ideals");
    // Balanced pairwise merging keeps intermediate bases small.
    while (parts.size() > 1) {
        std::vector<Ideal<F>> next;
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
            next.push_back(intersect(parts[i], parts[i + 1]));
        if (parts.size() % 2) next.push_back(parts.back());
        parts = std::move(next);
    }
    return parts.front();
}

// I : f = (I ∩ (f)) / f, each quotient generator verified by membership.
template <class F>
Ideal<F> colon(const Ideal<F>& I, const Polynomial<F>& f) {
    if (f.is_zero()) throw ZeroDivisorPolynomial("colon by the zero polynomial");
    Ideal<F> inter = intersect(I, Ideal<F>(I.ring(), {f}));
    std::vector<Polynomial<F>> quot;
    for (const auto& h : inter.gens()) {
        Polynomial<F> q = poly_exact_div(h, f);
        if (!I.contains(poly_mul(q, f)))
            throw BadParameter("colon verification failed: quotient times divisor left the ideal");
        quot.push_back(std::move(q));
    }
    return Ideal<F>(I.ring(), std::move(quot));
}

// I : J = ∩ over generators g of J of (I : g).
template <class F>
Ideal<F> colon(const Ideal<F>& I, const Ideal<F>& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Ideal<F>> parts;
    for (const auto& g : J.gens()) parts.push_back(colon(I, g));
    return intersect_many(std::move(parts));
}

// I : x_i^∞ for homogeneous I, by the reverse-lex division trick: compute
// a grevlex GB with x_i moved last, then strip the x_i content of every
// element.  The stripped set is again a GB of the saturation.
template <class F>
Ideal<F> saturate_var(const Ideal<F>& I, int var, const BuchbergerOptions& opts = {}) {
    if (!I.homogeneous()) throw NonHomogeneousInput("variable saturation needs homogeneous input");
    const RingPtr<F>& ring = I.ring();
    const int n = ring->num_vars;
    if (var < 0 || var >= n) throw BadParameter("saturation variable out of range");

    std::vector<int> perm;  // new position -> old index, `var` last
    for (int i = 0; i < n; ++i)
        if (i != var) perm.push_back(i);
    perm.push_back(var);
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;

    RingPtr<F> pring = permuted_ring(ring, perm);
    MonomialOrder porder = MonomialOrder::grevlex(n);
    std::vector<Polynomial<F>> moved;
    for (const auto& g : I.gens()) moved.push_back(poly_map_vars(g, pring, porder, perm));

    GroebnerBasis<F> gb = buchberger(moved, porder, opts);
    std::vector<Polynomial<F>> stripped;
    for (const auto& g : gb.elems) {
        std::uint16_t content = g.terms.front().m.e[n - 1];
        for (const auto& t : g.terms) content = std::min(content, t.m.e[n - 1]);
        Polynomial<F> h = g;
        if (content > 0) {
            for (auto& t : h.terms) {
                t.m.e[n - 1] = static_cast<std::uint16_t>(t.m.e[n - 1] - content);
                t.m.deg -= content;
            }
        }
        stripped.push_back(poly_map_vars(h, ring, I.order(), inv));
    }
    GroebnerBasis<F> back = buchberger(stripped, I.order());
    return Ideal<F>::with_known_gb(ring, std::move(back), false);
}

// Rabinowitsch form of I : x_i^∞, used as an independent cross-check:
// eliminate w from I + (1 − w·x_i).
template <class F>
Ideal<F> saturate_wrt(const Ideal<F>& I, int var) {
    const RingPtr<F>& ring = I.ring();
    const int n = ring->num_vars;
    if (n + 1 > kMaxVars) throw BadParameter("no room for the elimination variable");
    if (var < 0 || var >= n) throw BadParameter("saturation variable out of range");
    RingPtr<F> big = extended_ring(ring, "w_elim");
    MonomialOrder elim = MonomialOrder::block(n + 1, n);
    std::vector<int> up(n + 1);
    for (int i = 0; i < n; ++i) up[i] = i;
    up[n] = -1;

    const F& k = ring->field;
    std::vector<Polynomial<F>> work;
    for (const auto& f : I.gens()) work.push_back(poly_map_vars(f, big, elim, up));
    Polynomial<F> wx = poly_mul(poly_var(big, elim, n), poly_var(big, elim, var));
    work.push_back(poly_sub(poly_constant(big, elim, k.one()), wx));

    GroebnerBasis<F> gb = buchberger(work, elim);
    std::vector<Polynomial<F>> kept;
    std::vector<int> down(n);
    for (int i = 0; i < n; ++i) down[i] = i;
    for (const auto& g : gb.elems) {
        bool uses_w = false;
        for (const auto& t : g.terms) uses_w = uses_w || t.m.e[n] != 0;
        if (!uses_w) kept.push_back(poly_map_vars(g, ring, I.order(), down));
    }
    if (kept.empty()) throw EmptyIdeal("saturation came out empty");
    return Ideal<F>(ring, std::move(kept));
}

// I : (x0..xN)^∞ = ∩_i (I : x_i^∞); one round of the intersection is
// already saturated, no fixed-point iteration is needed.
template <class F>
Ideal<F> saturate_irrelevant(const Ideal<F>& I, const BuchbergerOptions& opts = {}) {
    if (!I.homogeneous()) throw NonHomogeneousInput("saturation needs a homogeneous ideal");
    std::vector<Ideal<F>> parts;
    for (int i = 0; i < I.ring()->num_vars; ++i) parts.push_back(saturate_var(I, i, opts));
    Ideal<F> result = intersect_many(std::move(parts));
    result.mark_saturated();
    return result;
}

inline mpz_class binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return b;
}

inline long long dim_forms(int num_vars, int d) {
    if (d < 0) return 0;
    return binomial(d + num_vars - 1, num_vars - 1).get_si();
}

// Degree-d monomials in ring order-agnostic enumeration (lex on
// exponents, deterministic).
inline std::vector<Monomial> monomials_of_degree(int num_vars, int d) {
    std::vector<Monomial> out;
    // Odometer over exponent compositions of d.
    std::vector<int> e(num_vars, 0);
    e[0] = d;
    for (;;) {
        Monomial mm = Monomial::unit(num_vars);
        int left = d;
        for (int i = 0; i < num_vars; ++i) {
            mm.e[i] = static_cast<std::uint16_t>(e[i]);
            left -= e[i];
        }
        mm.deg = static_cast<std::uint32_t>(d);
        out.push_back(mm);
        // next composition of d into num_vars parts
        int i = num_vars - 2;
        while (i >= 0 && e[i] == 0) --i;
        if (i < 0) break;
        int tail = 0;
        for (int j = i + 1; j < num_vars; ++j) {
            tail += e[j];
            e[j] = 0;
        }
        e[i] -= 1;
        e[i + 1] = tail + 1;
    }
    return out;
}

// dim_K (R/I)_d: degree-d monomials not divisible by any lead of the
// reduced GB (standard monomials).
template <class F>
long long hilbert_function(const Ideal<F>& I, int d) {
    if (d < 0) return 0;
    auto gb = I.groebner();
    long long count = 0;
    for (const Monomial& m : monomials_of_degree(I.ring()->num_vars, d)) {
        bool reducible = false;
        for (const auto& g : gb->elems) {
            if (g.lead_mono().deg > m.deg) break;  // elems sorted ascending
            if (mono_divides(g.lead_mono(), m)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) ++count;
    }
    return count;
}

// Castelnuovo–Mumford regularity of a saturated point ideal via Hilbert
// function stabilization: reg = 1 + least t with HF(R/I, t) = deg.
template <class F>
int reg_points(const Ideal<F>& I, long long expected_deg = -1, int cap = 256) {
    long long prev = -1;
    for (int t = 0; t <= cap; ++t) {
        long long hf = hilbert_function(I, t);
        if (expected_deg >= 0) {
            if (hf == expected_deg) return t + 1;
        } else if (hf == prev) {
            return t;  // prev achieved at t-1; reg = (t-1) + 1
        }
        prev = hf;
    }
    throw NotZeroDimensional("Hilbert function failed to stabilize below the cap");
}

struct GradedProfile {
    int lo = 0, hi = -1;
    std::vector<long long> dim_ideal;  // dim I_d for d in [lo, hi]
    std::vector<long long> min_gens;   // beta_{0,d}
    int alpha = -1;                    // least d with I_d != 0
    int omega = -1;                    // largest d with beta_{0,d} > 0
    long long total_min_gens() const {
        long long s = 0;
        for (long long b : min_gens) s += b;
        return s;
    }
};

// Per-degree dim I_d and minimal generator counts up to `bound`
// (default: reg+1 for saturated point ideals, where all minimal
// generators live).
template <class F>
GradedProfile graded_min_gens(const Ideal<F>& I, int bound = -1) {
    if (!I.homogeneous()) throw NonHomogeneousInput("graded profile needs a homogeneous ideal");
    if (bound < 0) {
        if (!I.known_saturated())
            throw MissingDegreeBound("graded profile needs a degree bound for this ideal");
        bound = reg_points(I) + 1;
    }
    const RingPtr<F>& ring = I.ring();
    const F& k = ring->field;
    const int n = ring->num_vars;
    auto gb = I.groebner();

    GradedProfile prof;
    prof.lo = 0;
    prof.hi = bound;
    for (int d = 0; d <= bound; ++d) {
        std::vector<Monomial> cols = monomials_of_degree(n, d);
        std::map<std::array<std::uint16_t, kMaxVars>, std::size_t> col_of;
        for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j].e] = j;

        std::vector<std::vector<typename F::Elem>> rows_all, rows_strict;
        for (const auto& g : gb->elems) {
            int gd = g.degree();
            if (gd > d) continue;
            for (const Monomial& mu : monomials_of_degree(n, d - gd)) {
                std::vector<typename F::Elem> row(cols.size(), k.zero());
                for (const auto& t : g.terms) row[col_of.at(mono_mul(mu, t.m).e)] = t.c;
                if (mu.deg > 0) rows_strict.push_back(row);
                rows_all.push_back(std::move(row));
            }
        }
        auto rank_of = [&](const std::vector<std::vector<typename F::Elem>>& rows) {
            if (rows.empty()) return static_cast<std::size_t>(0);
            ExactMatrix<F> M(k, rows.size(), cols.size());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < cols.size(); ++j) M.at(i, j) = rows[i][j];
            return matrix_rank(std::move(M));
        };
        long long dim_d = static_cast<long long>(rank_of(rows_all));
        long long dim_strict = static_cast<long long>(rank_of(rows_strict));
        prof.dim_ideal.push_back(dim_d);
        prof.min_gens.push_back(dim_d - dim_strict);
        if (dim_d > 0 && prof.alpha < 0) prof.alpha = d;
        if (dim_d - dim_strict > 0) prof.omega = d;
    }
    return prof;
}

template <class F>
std::string ideal_to_text(const Ideal<F>& I) {
    return ideal_to_text(I.gens());
}

}  // namespace sympow
