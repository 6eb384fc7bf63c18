#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympow/ideal.hpp"
#include "sympow/matrix.hpp"
#include "sympow/textio.hpp"

namespace sympow {

// Projective point in canonical form: first nonzero coordinate is 1, so
// projective equality is plain vector equality.
template <class F>
struct ProjectivePoint {
    std::vector<typename F::Elem> coords;
    int pivot = 0;  // index of the leading 1
};

template <class F>
ProjectivePoint<F> make_point(const F& k, std::vector<typename F::Elem> raw) {
    int pivot = -1;
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (!k.is_zero(raw[i])) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot < 0) throw ZeroPoint("projective point with all coordinates zero");
    auto scale = k.inv(raw[pivot]);
    for (auto& c : raw) c = k.mul(c, scale);
    return ProjectivePoint<F>{std::move(raw), pivot};
}

template <class F>
bool point_eq(const F& k, const ProjectivePoint<F>& a, const ProjectivePoint<F>& b) {
    if (a.coords.size() != b.coords.size()) return false;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (!k.eq(a.coords[i], b.coords[i])) return false;
    return true;
}

template <class F>
std::string point_to_string(const F& k, const ProjectivePoint<F>& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) out += ":";
        out += k.str(p.coords[i]);
    }
    return out + "]";
}

enum class ConfigKind { Custom, Fermat, Chmn, AllButOne };

inline const char* config_kind_name(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::Fermat: return "fermat";
        case ConfigKind::Chmn: return "chmn";
        case ConfigKind::AllButOne: return "all-but-one";
        default: return "custom";
    }
}

// A finite set of projective points plus the extra structure the
// constructors know: recorded lines, a complete-intersection ideal
// containing the point ideal (Waldschmidt lower-bound material), and the
// excluded point for the all-but-one family.
template <class F>
struct PointConfiguration {
    RingPtr<F> ring;
    std::string label;
    ConfigKind kind = ConfigKind::Custom;
    std::vector<ProjectivePoint<F>> points;
    std::vector<std::string> point_names;  // optional, parallel to points
    std::vector<Polynomial<F>> lines;      // linear forms (hyperplanes for N > 2)
    std::shared_ptr<const Ideal<F>> radical;  // saturated ideal of the points
    std::vector<Polynomial<F>> ci_gens;       // complete intersection containing radical
    std::vector<int> ci_degrees;
    std::optional<ProjectivePoint<F>> excluded;
    std::map<std::string, std::string> params;

    MonomialOrder order() const { return MonomialOrder::grevlex(ring->num_vars); }
    int dim_projective() const { return ring->num_vars - 1; }
};

// Ideal of one point: the N forms x_k - p_k * x_pivot, k != pivot.
template <class F>
Ideal<F> point_ideal(const RingPtr<F>& ring, const ProjectivePoint<F>& p) {
    const F& k = ring->field;
    if (static_cast<int>(p.coords.size()) != ring->num_vars)
        throw LengthMismatch("point dimension does not match ring");
    MonomialOrder ord = MonomialOrder::grevlex(ring->num_vars);
    std::vector<Polynomial<F>> gens;
    for (int i = 0; i < ring->num_vars; ++i) {
        if (i == p.pivot) continue;
        Polynomial<F> form = poly_sub(
            poly_var(ring, ord, i),
            poly_mul_scalar(poly_var(ring, ord, p.pivot), p.coords[i]));
        if (!k.is_zero(poly_eval(form, p.coords)))
            throw HypothesisViolated("point ideal generator fails to vanish at its point");
        gens.push_back(std::move(form));
    }
    return Ideal<F>(ring, std::move(gens), true);
}

template <class F>
Ideal<F> fat_point_ideal(const RingPtr<F>& ring, const ProjectivePoint<F>& p, unsigned m) {
    return ideal_power(point_ideal(ring, p), m);
}

// ---------- multiplicity via Hasse derivatives ----------

// Multi-indices over the non-pivot coordinates with |a| = total, as
// monomials (pivot exponent forced to 0).
inline std::vector<Monomial> multi_indices_excluding(int num_vars, int pivot, int total) {
    std::vector<Monomial> out;
    for (const Monomial& m : monomials_of_degree(num_vars - 1, total)) {
        Monomial a = Monomial::unit(num_vars);
        int j = 0;
        for (int i = 0; i < num_vars; ++i) {
            if (i == pivot) continue;
            a.e[i] = m.e[j++];
        }
        a.deg = static_cast<std::uint32_t>(total);
        out.push_back(a);
    }
    return out;
}

// Order of vanishing of f at p: least total order of a nonvanishing
// Hasse derivative taken in the affine chart x_pivot = 1.  Exact in any
// characteristic.
template <class F>
int multiplicity_at(const Polynomial<F>& f, const ProjectivePoint<F>& p) {
    if (f.is_zero()) throw ZeroInput("multiplicity of the zero polynomial");
    const F& k = f.ring->field;
    const int n = f.ring->num_vars;
    for (int order = 0; order <= f.degree(); ++order) {
        for (const Monomial& a : multi_indices_excluding(n, p.pivot, order)) {
            Polynomial<F> d = hasse_derivative(f, a);
            if (!d.is_zero() && !k.is_zero(poly_eval(d, p.coords)))
                return order;
        }
    }
    throw HypothesisViolated("nonzero form with vanishing Taylor expansion");
}

// ---------- interpolation: conditions matrices and alpha ----------

// Rows: for each point, the Hasse-derivative conditions of order < m in
// its affine chart; columns: the degree-d monomials.  A homogeneous
// degree-d form lies in I^(m) iff its coefficient vector is in the
// kernel.
template <class F>
ExactMatrix<F> conditions_matrix(const RingPtr<F>& ring,
                                 const std::vector<ProjectivePoint<F>>& points, unsigned m,
                                 int d) {
    const F& k = ring->field;
    const int n = ring->num_vars;
    std::vector<Monomial> cols = monomials_of_degree(n, d);

    std::size_t rows_per_point = 0;
    for (unsigned total = 0; total < m; ++total)
        rows_per_point += static_cast<std::size_t>(dim_forms(n - 1, static_cast<int>(total)));

    ExactMatrix<F> M(k, points.size() * rows_per_point, cols.size());
    std::size_t row = 0;
    for (const auto& p : points) {
        // power tables p_i^e up to d
        std::vector<std::vector<typename F::Elem>> pw(n);
        for (int i = 0; i < n; ++i) {
            pw[i].resize(d + 1, k.one());
            for (int e = 1; e <= d; ++e) pw[i][e] = k.mul(pw[i][e - 1], p.coords[i]);
        }
        for (unsigned total = 0; total < m; ++total) {
            for (const Monomial& a : multi_indices_excluding(n, p.pivot, total)) {
                for (std::size_t j = 0; j < cols.size(); ++j) {
                    const Monomial& e = cols[j];
                    if (!mono_divides(a, e)) continue;
                    mpz_class binprod = 1;
                    for (int i = 0; i < n; ++i) {
                        if (a.e[i] == 0) continue;
                        mpz_class b;
                        mpz_bin_uiui(b.get_mpz_t(), e.e[i], a.e[i]);
                        binprod *= b;
                    }
                    auto v = k.from_mpz(binprod);
                    if (k.is_zero(v)) continue;
                    for (int i = 0; i < n; ++i)
                        if (e.e[i] > a.e[i]) v = k.mul(v, pw[i][e.e[i] - a.e[i]]);
                    M.at(row, j) = v;
                }
                ++row;
            }
        }
    }
    return M;
}

// dim of the degree-d piece of I^(m), by interpolation rank.  This is
// the GB-free route; tests pit it against standard-monomial counting.
template <class F>
long long fat_dim_by_interpolation(const RingPtr<F>& ring,
                                   const std::vector<ProjectivePoint<F>>& points, unsigned m,
                                   int d) {
    ExactMatrix<F> M = conditions_matrix(ring, points, m, d);
    long long cols = static_cast<long long>(M.cols);
    return cols - static_cast<long long>(matrix_rank(std::move(M)));
}

// Least d <= degree_cap with a nonzero degree-d form vanishing to order
// m at every point; nullopt if none exists up to the cap.
template <class F>
std::optional<int> alpha_interpolation(const PointConfiguration<F>& cfg, unsigned m,
                                       int degree_cap) {
    if (degree_cap < 1) throw BadParameter("alpha search needs degree_cap >= 1");
    for (int d = 1; d <= degree_cap; ++d)
        if (fat_dim_by_interpolation(cfg.ring, cfg.points, m, d) > 0) return d;
    return std::nullopt;
}

// ---------- symbolic powers ----------

enum class SymbolicMethod { Intersect, Saturate };

// A linear form nonvanishing at every point, used to saturate fat-point
// powers with a single colon: the only associated primes of I^m are the
// points and the irrelevant maximal ideal, so any form missing all the
// points certifies the saturation.
template <class F>
std::vector<typename F::Elem> avoiding_form_coeffs(const RingPtr<F>& ring,
                                                   const std::vector<ProjectivePoint<F>>& pts) {
    const F& k = ring->field;
    const int n = ring->num_vars;
    auto misses_all = [&](const std::vector<typename F::Elem>& c) {
        for (const auto& p : pts) {
            auto v = k.zero();
            for (int i = 0; i < n; ++i) v = k.add(v, k.mul(c[i], p.coords[i]));
            if (k.is_zero(v)) return false;
        }
        return true;
    };
    // Coordinates first: cheapest when one works.
    for (int i = 0; i < n; ++i) {
        std::vector<typename F::Elem> c(n, k.zero());
        c[i] = k.one();
        if (misses_all(c)) return c;
    }
    // Then x0 + a1 x1 + ... with small coefficient odometers.
    const long long limit = k.characteristic() ? static_cast<long long>(k.characteristic()) : 64;
    std::vector<long long> a(n - 1, 0);
    for (;;) {
        std::vector<typename F::Elem> c(n);
        c[0] = k.one();
        for (int i = 1; i < n; ++i) c[i] = k.from_int(a[i - 1]);
        if (misses_all(c)) return c;
        int pos = n - 2;
        while (pos >= 0 && a[pos] == limit - 1) a[pos--] = 0;
        if (pos < 0) break;
        ++a[pos];
    }
    throw HypothesisViolated("no linear form avoids all of the points");
}

// Substitute images[i] for variable i (images share ring and order).
template <class F>
Polynomial<F> poly_substitute(const Polynomial<F>& f,
                              const std::vector<Polynomial<F>>& images) {
    if (static_cast<int>(images.size()) != f.ring->num_vars)
        throw LengthMismatch("substitution needs one image per variable");
    const RingPtr<F>& ring = images.front().ring;
    const MonomialOrder& ord = images.front().order;
    std::array<std::uint16_t, kMaxVars> maxe{};
    for (const auto& t : f.terms)
        for (int i = 0; i < f.ring->num_vars; ++i) maxe[i] = std::max(maxe[i], t.m.e[i]);
    std::vector<std::vector<Polynomial<F>>> pw(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        pw[i].push_back(poly_constant(ring, ord, ring->field.one()));
        for (int e = 1; e <= maxe[i]; ++e) pw[i].push_back(poly_mul(pw[i].back(), images[i]));
    }
    Polynomial<F> acc = poly_zero(ring, ord);
    for (const auto& t : f.terms) {
        Polynomial<F> prod = poly_constant(ring, ord, t.c);
        for (int i = 0; i < f.ring->num_vars; ++i)
            if (t.m.e[i]) prod = poly_mul(prod, pw[i][t.m.e[i]]);
        acc = poly_add(acc, prod);
    }
    return acc;
}

// Saturate a fat-point power I^m using one avoiding linear form: move
// the form onto a coordinate by a linear change, apply the reverse-lex
// division trick there, and change back.
template <class F>
Ideal<F> saturate_fat_power(const Ideal<F>& Ipow,
                            const std::vector<ProjectivePoint<F>>& pts,
                            const BuchbergerOptions& opts = {}) {
    const RingPtr<F>& ring = Ipow.ring();
    const F& k = ring->field;
    const int n = ring->num_vars;
    std::vector<typename F::Elem> ell = avoiding_form_coeffs(ring, pts);

    int nonzero = 0, coord = -1;
    for (int i = 0; i < n; ++i)
        if (!k.is_zero(ell[i])) {
            ++nonzero;
            coord = i;
        }
    if (nonzero == 1) {
        Ideal<F> sat = saturate_var(Ipow, coord, opts);
        sat.mark_saturated();
        return sat;
    }

    MonomialOrder ord = Ipow.order();
    int j = coord;  // last index with a nonzero coefficient
    // Forward change alpha: x_j -> (x_j - sum_{i != j} ell_i x_i)/ell_j,
    // which maps the form ell onto the plain variable x_j.
    std::vector<Polynomial<F>> fwd, bwd;
    for (int i = 0; i < n; ++i) {
        fwd.push_back(poly_var(ring, ord, i));
        bwd.push_back(poly_var(ring, ord, i));
    }
    Polynomial<F> corr = poly_var(ring, ord, j);
    Polynomial<F> ell_poly = poly_zero(ring, ord);
    for (int i = 0; i < n; ++i) {
        if (k.is_zero(ell[i])) continue;
        ell_poly = poly_add(ell_poly, poly_mul_scalar(poly_var(ring, ord, i), ell[i]));
        if (i != j)
            corr = poly_sub(corr, poly_mul_scalar(poly_var(ring, ord, i), ell[i]));
    }
    fwd[j] = poly_mul_scalar(corr, k.inv(ell[j]));
    bwd[j] = ell_poly;

    std::vector<Polynomial<F>> moved;
    for (const auto& g : Ipow.gens()) moved.push_back(poly_substitute(g, fwd));
    Ideal<F> satm = saturate_var(Ideal<F>(ring, std::move(moved)), j, opts);
    std::vector<Polynomial<F>> back;
    for (const auto& g : satm.gens()) back.push_back(poly_substitute(g, bwd));
    Ideal<F> sat = Ideal<F>::with_known_gb(ring, buchberger(back, ord, opts), true);
    sat.mark_saturated();
    return sat;
}

template <class F>
Ideal<F> symbolic_power(const PointConfiguration<F>& cfg, unsigned m,
                        SymbolicMethod method = SymbolicMethod::Saturate,
                        const BuchbergerOptions& opts = {}) {
    if (m < 1) throw BadParameter("symbolic power wants m >= 1");
    if (m == 1) return *cfg.radical;
    if (method == SymbolicMethod::Intersect) {
        std::vector<Ideal<F>> parts;
        for (const auto& p : cfg.points) parts.push_back(fat_point_ideal(cfg.ring, p, m));
        Ideal<F> result = intersect_many(std::move(parts));
        result.mark_saturated();
        return result;
    }
    Ideal<F> Ipow = ideal_power(*cfg.radical, m);
    return saturate_fat_power(Ipow, cfg.points, opts);
}

// ---------- constructors ----------

namespace points_detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    if (v > 1) fs.push_back(v);
    return fs;
}

inline std::uint64_t smallest_primitive_root(const PrimeField& k) {
    const std::uint64_t p = k.characteristic();
    auto factors = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (std::uint64_t q : factors)
            if (k.pow(g, (p - 1) / q) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return g;
    }
    throw HypothesisViolated("no primitive root found (modulus not prime?)");
}

template <class F>
void require_distinct(const F& k, const std::vector<ProjectivePoint<F>>& pts,
                      const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (point_eq(k, pts[i], pts[j]))
                throw CoincidentPoints("points " +
                                       (names.empty() ? std::to_string(i) : names[i]) + " and " +
                                       (names.empty() ? std::to_string(j) : names[j]) +
                                       " coincide");
}

}  // namespace points_detail

// n^2 + 3 points: the n^2 torus points [1 : zeta^i : zeta^j] plus the
// three coordinate vertices; the stated three generators are verified to
// cut out exactly these points.
template <class F>
PointConfiguration<F> fermat_config(int n, const F& field) {
    if (n < 3) throw BadN("this family needs n >= 3");
    if constexpr (F::is_rationals) {
        throw RootsOfUnityUnavailable("the rationals contain no primitive n-th roots of unity");
    } else {
        const std::uint64_t p = field.characteristic();
        if (p == 2) throw RootsOfUnityUnavailable("characteristic 2 is excluded");
        if ((p - 1) % static_cast<std::uint64_t>(n) != 0)
            throw RootsOfUnityUnavailable("need n | p - 1 for n distinct n-th roots of unity");

        PointConfiguration<F> cfg;
        cfg.ring = make_ring(field, 3, {"x", "y", "z"});
        cfg.kind = ConfigKind::Fermat;
        cfg.label = "fermat-n" + std::to_string(n);
        const F& k = cfg.ring->field;

        std::uint64_t g = points_detail::smallest_primitive_root(field);
        std::uint64_t zeta = field.pow(g, (p - 1) / static_cast<std::uint64_t>(n));
        cfg.params["n"] = std::to_string(n);
        cfg.params["zeta"] = std::to_string(zeta);

        auto P = [&](long long a, long long b, long long c) {
            return make_point(k, {k.from_int(a), k.from_int(b), k.from_int(c)});
        };
        cfg.points.push_back(P(1, 0, 0));
        cfg.points.push_back(P(0, 1, 0));
        cfg.points.push_back(P(0, 0, 1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cfg.points.push_back(make_point(
                    k, {k.one(), field.pow(zeta, i), field.pow(zeta, j)}));
        points_detail::require_distinct(k, cfg.points, {});

        MonomialOrder ord = cfg.order();
        auto X = poly_var(cfg.ring, ord, 0), Y = poly_var(cfg.ring, ord, 1),
             Z = poly_var(cfg.ring, ord, 2);
        auto pw = [&](const Polynomial<F>& v) { return poly_pow(v, n); };
        Polynomial<F> yz = poly_sub(pw(Y), pw(Z));
        Polynomial<F> zx = poly_sub(pw(Z), pw(X));
        Polynomial<F> xy = poly_sub(pw(X), pw(Y));
        std::vector<Polynomial<F>> gens = {poly_mul(X, yz), poly_mul(Y, zx), poly_mul(Z, xy)};
        Ideal<F> from_gens(cfg.ring, gens, true);

        std::vector<Ideal<F>> parts;
        for (const auto& pt : cfg.points) parts.push_back(point_ideal(cfg.ring, pt));
        Ideal<F> from_points = intersect_many(std::move(parts));
        if (!ideal_eq(from_gens, from_points))
            throw HypothesisViolated("stated generators do not cut out the point set");
        cfg.radical = std::make_shared<const Ideal<F>>(std::move(from_gens));

        cfg.ci_gens = {yz, zx};
        cfg.ci_degrees = {n, n};
        return cfg;
    }
}

// 19 points A..S and 12 lines; every coordinate is also re-derived as a
// line-line intersection and compared, so a transcription slip in either
// table cannot survive construction.
template <class F>
PointConfiguration<F> chmn_config(const typename F::Elem& t, const F& field) {
    const F& k = field;
    auto el = [&](long long v) { return k.from_int(v); };
    // denylist: t in {0, -1, -2} or t^2 + t + 1 = 0
    if (k.is_zero(t)) throw DegenerateParameter("t = 0 collapses the configuration");
    if (k.is_zero(k.add(t, el(1)))) throw DegenerateParameter("t = -1 makes DE parallel to NO");
    if (k.is_zero(k.add(t, el(2)))) throw DegenerateParameter("t = -2 degenerates the configuration");
    auto t2 = k.mul(t, t);
    if (k.is_zero(k.add(k.add(t2, t), el(1))))
        throw DegenerateParameter("t^2 + t + 1 = 0 makes HJ pass through G");

    PointConfiguration<F> cfg;
    cfg.ring = make_ring(field, 3, {"x", "y", "z"});
    cfg.kind = ConfigKind::Chmn;
    cfg.label = "chmn";
    cfg.params["t"] = k.str(t);

    auto t3 = k.mul(t2, t);
    auto one = k.one();
    auto tp1 = k.add(t, one);                      // t + 1
    auto tp2 = k.add(t, el(2));                    // t + 2
    auto t2t = k.add(t2, t);                       // t^2 + t
    auto t2t1 = k.add(t2t, one);                   // t^2 + t + 1
    auto t2_2t_1 = k.add(k.add(t2, k.mul(el(2), t)), one);  // t^2 + 2t + 1
    auto t2_2t_2 = k.add(t2_2t_1, one);            // t^2 + 2t + 2
    auto t3t2t = k.add(t3, t2t);                   // t^3 + t^2 + t

    auto pt = [&](typename F::Elem a, typename F::Elem b, typename F::Elem c) {
        return make_point(k, {std::move(a), std::move(b), std::move(c)});
    };
    std::vector<std::string> names = {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J",
                                      "K", "L", "M", "N", "O", "P", "Q", "R", "S"};
    std::vector<ProjectivePoint<F>> pts = {
        pt(el(0), el(0), el(1)),              // A
        pt(el(0), el(1), el(0)),              // B
        pt(el(1), el(0), el(0)),              // C
        pt(el(0), el(1), el(1)),              // D
        pt(el(1), el(0), el(1)),              // E
        pt(el(1), t, el(0)),                  // F
        pt(el(1), t, el(1)),                  // G
        pt(el(1), tp1, el(1)),                // H
        pt(el(1), el(0), k.neg(t)),           // I
        pt(el(1), t, tp1),                    // J
        pt(el(1), el(-1), el(0)),             // K
        pt(el(0), el(1), k.neg(t)),           // L
        pt(el(1), el(0), t2t1),               // M
        pt(t, t2t1, el(0)),                   // N
        pt(t, k.neg(tp1), t),                 // O
        pt(el(1), t, k.neg(t2t)),             // P
        pt(el(0), el(-1), tp1),               // Q
        pt(tp2, t2_2t_1, el(1)),              // R
        pt(tp2, el(-1), tp1),                 // S
    };

    // Line forms as coefficient triples, in the fixed published order.
    struct LineDef {
        const char* name;
        std::array<typename F::Elem, 3> c;
    };
    std::vector<LineDef> line_defs = {
        {"AB", {one, k.zero(), k.zero()}},
        {"AC", {k.zero(), one, k.zero()}},
        {"BC", {k.zero(), k.zero(), one}},
        {"BE", {one, k.zero(), k.neg(one)}},
        {"AF", {t, k.neg(one), k.zero()}},
        {"DF", {t, k.neg(one), one}},
        {"DE", {one, one, k.neg(one)}},
        {"HJ", {t2t1, k.neg(t), k.neg(one)}},
        {"IK", {t, t, one}},
        {"GM", {t3t2t, k.neg(t2t), k.neg(t)}},
        {"NO", {t2t1, k.neg(t), k.neg(t2_2t_2)}},
        {"CQ", {k.zero(), tp1, one}},
    };
    auto line_idx = [&](const char* nm) {
        for (std::size_t i = 0; i < line_defs.size(); ++i)
            if (std::string(line_defs[i].name) == nm) return i;
        throw BadParameter("unknown line name");
    };
    auto cross = [&](const char* l1, const char* l2) {
        const auto& u = line_defs[line_idx(l1)].c;
        const auto& v = line_defs[line_idx(l2)].c;
        return make_point(k, {k.sub(k.mul(u[1], v[2]), k.mul(u[2], v[1])),
                              k.sub(k.mul(u[2], v[0]), k.mul(u[0], v[2])),
                              k.sub(k.mul(u[0], v[1]), k.mul(u[1], v[0]))});
    };
    // Every non-frame point re-derived as an intersection of two lines.
    std::vector<std::pair<int, ProjectivePoint<F>>> rederived = {
        {6, cross("AF", "BE")},   // G
        {7, cross("DF", "BE")},   // H
        {8, cross("DF", "AC")},   // I
        {9, cross("AF", "DE")},   // J
        {10, cross("BC", "DE")},  // K
        {11, cross("HJ", "AB")},  // L
        {12, cross("HJ", "AC")},  // M
        {13, cross("HJ", "BC")},  // N
        {14, cross("IK", "BE")},  // O
        {15, cross("IK", "AF")},  // P
        {16, cross("GM", "AB")},  // Q
        {17, cross("GM", "DF")},  // R
        {18, cross("DE", "NO")},  // S
    };
    for (const auto& [idx, q] : rederived)
        if (!point_eq(k, pts[idx], q))
            throw HypothesisViolated("closed form for point " + names[idx] +
                                     " disagrees with its line intersection");
    points_detail::require_distinct(k, pts, names);

    cfg.points = std::move(pts);
    cfg.point_names = std::move(names);
    MonomialOrder ord = cfg.order();
    for (const auto& ld : line_defs) {
        Polynomial<F> form = poly_zero(cfg.ring, ord);
        for (int i = 0; i < 3; ++i)
            form = poly_add(form, poly_mul_scalar(poly_var(cfg.ring, ord, i), ld.c[i]));
        cfg.lines.push_back(std::move(form));
    }

    std::vector<Ideal<F>> parts;
    for (const auto& p : cfg.points) parts.push_back(point_ideal(cfg.ring, p));
    Ideal<F> rad = intersect_many(std::move(parts));
    rad.mark_saturated();
    cfg.radical = std::make_shared<const Ideal<F>>(std::move(rad));
    return cfg;
}

// Every rational point of P^N over F_s except q (default [1:0:...:0]),
// with the s^N rational hyperplanes missing q recorded as lines and a
// complete intersection of degree s forms through the remaining points.
template <class F>
PointConfiguration<F> all_but_one_config(const F& field, int N,
                                         std::optional<std::vector<long long>> q_coords =
                                             std::nullopt) {
    if constexpr (F::is_rationals) {
        throw BadParameter("the all-but-one family lives over a finite field");
    } else {
        if (N < 2) throw BadParameter("need projective dimension N >= 2");
        if (N + 2 > kMaxVars)
            throw BadParameter("projective dimension too large for this build");
        const std::uint64_t s = field.characteristic();

        PointConfiguration<F> cfg;
        cfg.ring = make_ring(field, N + 1);
        cfg.kind = ConfigKind::AllButOne;
        const F& k = cfg.ring->field;
        cfg.label = "all-but-one-s" + std::to_string(s) + "-N" + std::to_string(N);
        cfg.params["s"] = std::to_string(s);
        cfg.params["N"] = std::to_string(N);

        std::vector<long long> qc(N + 1, 0);
        qc[0] = 1;
        if (q_coords) {
            if (static_cast<int>(q_coords->size()) != N + 1)
                throw LengthMismatch("excluded point has wrong dimension");
            qc = *q_coords;
        }
        std::vector<typename F::Elem> qe;
        for (long long v : qc) qe.push_back(k.from_int(v));
        ProjectivePoint<F> q = make_point(k, qe);

        // all points of P^N(F_s): pivot position j, 1 there, free tail
        bool removed = false;
        for (int j = 0; j <= N; ++j) {
            std::vector<std::uint64_t> tail(N - j, 0);
            for (;;) {
                std::vector<typename F::Elem> c(N + 1, k.zero());
                c[j] = k.one();
                for (int i = j + 1; i <= N; ++i)
                    c[i] = k.from_int(static_cast<long long>(tail[i - j - 1]));
                ProjectivePoint<F> pt{std::move(c), j};
                if (point_eq(k, pt, q))
                    removed = true;
                else
                    cfg.points.push_back(std::move(pt));
                int pos = static_cast<int>(tail.size()) - 1;
                while (pos >= 0 && tail[pos] == s - 1) tail[pos--] = 0;
                if (pos < 0) break;
                ++tail[pos];
            }
        }
        if (!removed) throw PointNotRational("excluded point is not a rational point");
        cfg.excluded = q;

        // hyperplanes ell with ell(q) = 1: free coefficients off the pivot
        MonomialOrder ord = cfg.order();
        const int piv = q.pivot;
        std::vector<std::uint64_t> free(N, 0);
        for (;;) {
            std::vector<typename F::Elem> c(N + 1);
            int fi = 0;
            typename F::Elem acc = k.zero();
            for (int i = 0; i <= N; ++i) {
                if (i == piv) continue;
                c[i] = k.from_int(static_cast<long long>(free[fi++]));
                acc = k.add(acc, k.mul(c[i], q.coords[i]));
            }
            c[piv] = k.sub(k.one(), acc);
            Polynomial<F> form = poly_zero(cfg.ring, ord);
            for (int i = 0; i <= N; ++i)
                form = poly_add(form, poly_mul_scalar(poly_var(cfg.ring, ord, i), c[i]));
            cfg.lines.push_back(std::move(form));
            int pos = N - 1;
            while (pos >= 0 && free[pos] == s - 1) free[pos--] = 0;
            if (pos < 0) break;
            ++free[pos];
        }

        std::vector<Ideal<F>> parts;
        for (const auto& p : cfg.points) parts.push_back(point_ideal(cfg.ring, p));
        Ideal<F> rad = intersect_many(std::move(parts));
        rad.mark_saturated();
        cfg.radical = std::make_shared<const Ideal<F>>(std::move(rad));

        // complete intersection through all rational points with x1 != 0
        // (which avoids the default q): x_i (x_i^{s-1} - x_1^{s-1}), i != 1.
        bool default_q = q.pivot == 0;
        for (int i = 1; i <= N && default_q; ++i) default_q = k.is_zero(q.coords[i]);
        if (default_q) {
            auto x1 = poly_var(cfg.ring, ord, 1);
            Polynomial<F> x1s = poly_pow(x1, static_cast<unsigned>(s - 1));
            for (int i = 0; i <= N; ++i) {
                if (i == 1) continue;
                auto xi = poly_var(cfg.ring, ord, i);
                cfg.ci_gens.push_back(
                    poly_mul(xi, poly_sub(poly_pow(xi, static_cast<unsigned>(s - 1)), x1s)));
                cfg.ci_degrees.push_back(static_cast<int>(s));
            }
        }
        return cfg;
    }
}

// Product of the recorded hyperplanes not vanishing at q; vanishes to
// order exactly s^{N-1} at every configuration point.
template <class F>
Polynomial<F> hyperplane_product_avoiding(const PointConfiguration<F>& cfg) {
    if (cfg.kind != ConfigKind::AllButOne || !cfg.excluded)
        throw WrongConfigurationKind("hyperplane product needs an all-but-one configuration");
    Polynomial<F> prod = poly_constant(cfg.ring, cfg.order(), cfg.ring->field.one());
    for (const auto& ell : cfg.lines) prod = poly_mul(prod, ell);
    const F& k = cfg.ring->field;
    if (k.is_zero(poly_eval(prod, cfg.excluded->coords)))
        throw HypothesisViolated("avoiding product vanishes at the excluded point");
    return prod;
}

// ---------- incidence audit ----------

struct IncidenceReport {
    std::vector<std::vector<int>> line_points;  // per line: indices of points on it
    std::vector<int> point_line_counts;
    bool all_points_triple = false;
    bool every_line_ge4 = false;
    int min_points_on_a_line = 0;
};

template <class F>
IncidenceReport incidence_audit(const PointConfiguration<F>& cfg) {
    if (cfg.lines.empty()) throw NoLinesRecorded("configuration has no recorded lines");
    const F& k = cfg.ring->field;
    IncidenceReport rep;
    rep.line_points.resize(cfg.lines.size());
    rep.point_line_counts.assign(cfg.points.size(), 0);
    for (std::size_t li = 0; li < cfg.lines.size(); ++li)
        for (std::size_t pi = 0; pi < cfg.points.size(); ++pi)
            if (k.is_zero(poly_eval(cfg.lines[li], cfg.points[pi].coords))) {
                rep.line_points[li].push_back(static_cast<int>(pi));
                ++rep.point_line_counts[pi];
            }
    rep.all_points_triple = true;
    for (int c : rep.point_line_counts) rep.all_points_triple = rep.all_points_triple && c == 3;
    rep.min_points_on_a_line = static_cast<int>(cfg.points.size());
    for (const auto& lp : rep.line_points)
        rep.min_points_on_a_line =
            std::min(rep.min_points_on_a_line, static_cast<int>(lp.size()));
    rep.every_line_ge4 = rep.min_points_on_a_line >= 4;
    return rep;
}

// Rank of the degree-2 evaluation matrix of a point sextuple; rank <= 5
// means the six points lie on a conic.
template <class F>
int conic_rank(const PointConfiguration<F>& cfg, const std::vector<int>& sextuple) {
    if (sextuple.size() != 6) throw BadParameter("conic check wants exactly 6 points");
    const F& k = cfg.ring->field;
    std::vector<Monomial> cols = monomials_of_degree(cfg.ring->num_vars, 2);
    ExactMatrix<F> M(k, 6, cols.size());
    for (int i = 0; i < 6; ++i) {
        const auto& p = cfg.points.at(sextuple[i]).coords;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            typename F::Elem v = k.one();
            for (int vi = 0; vi < cfg.ring->num_vars; ++vi)
                for (int rep = 0; rep < cols[j].e[vi]; ++rep) v = k.mul(v, p[vi]);
            M.at(i, j) = v;
        }
    }
    return static_cast<int>(matrix_rank(std::move(M)));
}

// ---------- configuration files ----------

template <class F>
std::string config_to_text(const PointConfiguration<F>& cfg) {
    const F& k = cfg.ring->field;
    std::string out = "label " + cfg.label + "\n";
    for (const auto& p : cfg.points) {
        out += "point";
        for (const auto& c : p.coords) out += " " + k.str(c);
        out += "\n";
    }
    for (const auto& l : cfg.lines) out += "line " + poly_to_string(l) + "\n";
    return out;
}

template <class F>
PointConfiguration<F> config_from_text(const F& field, const std::string& text) {
    ConfigDocument doc = split_config_document(text);
    PointConfiguration<F> cfg;
    cfg.kind = ConfigKind::Custom;
    cfg.label = doc.label.empty() ? "custom" : doc.label;
    int nvars = static_cast<int>(doc.point_rows.front().size());
    cfg.ring = make_ring(field, nvars);
    const F& k = cfg.ring->field;
    for (const auto& row : doc.point_rows) {
        if (static_cast<int>(row.size()) != nvars)
            throw LengthMismatch("point records with differing dimensions");
        std::vector<typename F::Elem> c;
        for (const auto& tok : row) c.push_back(parse_field_element(k, tok));
        cfg.points.push_back(make_point(k, std::move(c)));
    }
    points_detail::require_distinct(k, cfg.points, {});
    MonomialOrder ord = cfg.order();
    for (const auto& lf : doc.line_forms) {
        Polynomial<F> form = parse_polynomial(cfg.ring, ord, lf);
        if (form.is_zero() || form.degree() != 1 || !form.is_homogeneous())
            throw ParseError("line record is not a nonzero linear form: " + lf);
        cfg.lines.push_back(std::move(form));
    }
    std::vector<Ideal<F>> parts;
    for (const auto& p : cfg.points) parts.push_back(point_ideal(cfg.ring, p));
    Ideal<F> rad = intersect_many(std::move(parts));
    rad.mark_saturated();
    cfg.radical = std::make_shared<const Ideal<F>>(std::move(rad));
    return cfg;
}

}  // namespace sympow
