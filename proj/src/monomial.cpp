#include "sympow/monomial.hpp"

namespace sympow {

namespace {

void check_same(const Monomial& a, const Monomial& b) {
    if (a.n != b.n)
        throw LengthMismatch("monomials over different variable counts: " +
                             std::to_string(a.n) + " vs " + std::to_string(b.n));
}

std::uint32_t range_deg(const Monomial& m, int lo, int hi) {
    std::uint32_t d = 0;
    for (int i = lo; i < hi; ++i) d += m.e[i];
    return d;
}

// Graded reverse lex restricted to positions [lo, hi): higher degree
// wins; on a degree tie the monomial with the smaller exponent at the
// last differing position wins.
int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    std::uint32_t da = range_deg(a, lo, hi), db = range_deg(b, lo, hi);
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

int lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int mono_cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    check_same(a, b);
    switch (order.kind) {
        case OrderKind::GrevLex:
            if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
            return grevlex_range(a, b, 0, order.nvars);
        case OrderKind::Lex:
            return lex_range(a, b, 0, order.nvars);
        case OrderKind::Block: {
            if (int c = grevlex_range(a, b, order.split, order.nvars)) return c;
            return grevlex_range(a, b, 0, order.split);
        }
    }
    return 0;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r = a;
    for (int i = 0; i < a.n; ++i) r.e[i] = static_cast<std::uint16_t>(r.e[i] + b.e[i]);
    r.deg = a.deg + b.deg;
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    for (int i = 0; i < a.n; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    check_same(a, b);
    Monomial r = b;
    for (int i = 0; i < b.n; ++i) {
        if (a.e[i] > b.e[i]) throw BadParameter("monomial division with remainder");
        r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    }
    r.deg = b.deg - a.deg;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r = Monomial::unit(a.n);
    for (int i = 0; i < a.n; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    for (int i = 0; i < a.n; ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

std::string mono_to_string(const Monomial& m, const std::string* names) {
    if (m.deg == 0) return "1";
    std::string out;
    for (int i = 0; i < m.n; ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

}  // namespace sympow
