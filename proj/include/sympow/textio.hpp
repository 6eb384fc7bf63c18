#pragma once
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sympow/errors.hpp"
#include "sympow/poly.hpp"
#include "sympow/ring.hpp"

namespace sympow {

// ---- plain text plumbing (field-independent), implemented in textio.cpp ----

// One polynomial per line under a `ring <field> <num_vars>` header.
struct IdealDocument {
    FieldSpec field;
    int num_vars = 0;
    std::vector<std::string> poly_lines;
};
IdealDocument split_ideal_document(const std::string& text);

// `label`, `point`, `line` records; coordinates stay as strings until a
// field is chosen.
struct ConfigDocument {
    std::string label;
    std::vector<std::vector<std::string>> point_rows;
    std::vector<std::string> line_forms;
};
ConfigDocument split_config_document(const std::string& text);

namespace textio_detail {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at column " + std::to_string(pos + 1) + " in '" +
                         std::string(s) + "'");
    }
    mpz_class read_integer() {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(std::string(s.substr(start, pos - start)), 10);
    }
    std::string read_ident() {
        std::size_t start = pos;
        if (!isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable name");
        while (pos < s.size() &&
               (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

template <class F>
int resolve_var(const RingPtr<F>& ring, const std::string& name, Cursor& cur) {
    for (int i = 0; i < ring->num_vars; ++i)
        if (ring->var_names[i] == name) return i;
    // Single-letter aliases for the first four coordinates.
    static const std::string aliases = "xyzw";
    if (name.size() == 1) {
        auto idx = aliases.find(name[0]);
        if (idx != std::string::npos && static_cast<int>(idx) < ring->num_vars)
            return static_cast<int>(idx);
    }
    cur.fail("unknown variable '" + name + "'");
}

template <class F>
typename F::Elem coeff_from_parts(const F& field, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ParseError("zero denominator in coefficient");
    if constexpr (F::is_rationals) {
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    } else {
        return field.div(field.from_mpz(num), field.from_mpz(den));
    }
}

}  // namespace textio_detail

// Field element literal: optional sign, integer, optional /denominator.
template <class F>
typename F::Elem parse_field_element(const F& field, std::string_view text) {
    using namespace textio_detail;
    Cursor cur{text};
    cur.skip_ws();
    bool neg = false;
    if (cur.peek() == '-' || cur.peek() == '+') {
        neg = cur.peek() == '-';
        ++cur.pos;
        cur.skip_ws();
    }
    mpz_class num = cur.read_integer(), den = 1;
    if (cur.peek() == '/') {
        ++cur.pos;
        den = cur.read_integer();
    }
    cur.skip_ws();
    if (!cur.done()) cur.fail("trailing characters in number");
    auto v = coeff_from_parts(field, num, den);
    return neg ? field.neg(v) : v;
}

// Polynomial grammar: terms joined by + / -; a term is `coeff*mono`,
// `mono`, or `coeff`; a mono is `*`-joined `var^exp` factors with
// exponent 1 implied.  Example: `x^2*y - 3*z^3`.
template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const MonomialOrder& order,
                               std::string_view text) {
    using namespace textio_detail;
    const F& k = ring->field;
    Cursor cur{text};
    std::vector<Term<F>> terms;

    cur.skip_ws();
    if (cur.done()) cur.fail("empty polynomial");
    if (cur.s == "0") return poly_zero(ring, order);
    bool neg = false;
    if (cur.peek() == '-' || cur.peek() == '+') {
        neg = cur.peek() == '-';
        ++cur.pos;
        cur.skip_ws();
    }
    for (;;) {
        typename F::Elem coeff = k.one();
        bool saw_coeff = false, saw_mono = false;
        if (isdigit(static_cast<unsigned char>(cur.peek()))) {
            mpz_class num = cur.read_integer(), den = 1;
            if (cur.peek() == '/') {
                ++cur.pos;
                den = cur.read_integer();
            }
            coeff = coeff_from_parts(k, num, den);
            saw_coeff = true;
        }
        Monomial mono = Monomial::unit(ring->num_vars);
        bool expect_factor = false;
        if (saw_coeff && cur.peek() == '*') {
            ++cur.pos;
            expect_factor = true;
        }
        while (expect_factor || (!saw_coeff && isalpha(static_cast<unsigned char>(cur.peek())))) {
            std::string name = cur.read_ident();
            int vi = resolve_var(ring, name, cur);
            mpz_class exp = 1;
            if (cur.peek() == '^') {
                ++cur.pos;
                exp = cur.read_integer();
                if (exp == 0) throw ZeroExponent("exponent 0 is written by omitting the factor");
            }
            if (exp > 0xFFFF) cur.fail("exponent too large");
            unsigned long ev = exp.get_ui();
            mono.e[vi] = static_cast<std::uint16_t>(mono.e[vi] + ev);
            mono.deg += static_cast<std::uint32_t>(ev);
            saw_mono = true;
            expect_factor = false;
            if (cur.peek() == '*') {
                ++cur.pos;
                expect_factor = true;
            }
        }
        if (!saw_coeff && !saw_mono) cur.fail("expected a term");
        terms.push_back(Term<F>{mono, neg ? k.neg(coeff) : coeff});

        cur.skip_ws();
        if (cur.done()) break;
        if (cur.peek() == '+')
            neg = false;
        else if (cur.peek() == '-')
            neg = true;
        else
            cur.fail("expected + or - between terms");
        ++cur.pos;
        cur.skip_ws();
    }
    return poly_from_terms(ring, order, std::move(terms));
}

template <class F>
std::string ideal_to_text(const std::vector<Polynomial<F>>& gens) {
    if (gens.empty()) throw EmptyIdeal("cannot serialize an ideal with no generators");
    const RingPtr<F>& ring = gens.front().ring;
    std::string out =
        "ring " + ring->field.spec().to_string() + " " + std::to_string(ring->num_vars) + "\n";
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring);
        out += poly_to_string(g) + "\n";
    }
    return out;
}

template <class F>
std::vector<Polynomial<F>> parse_ideal_body(const RingPtr<F>& ring, const MonomialOrder& order,
                                            const std::vector<std::string>& poly_lines) {
    std::vector<Polynomial<F>> gens;
    gens.reserve(poly_lines.size());
    for (const auto& line : poly_lines) gens.push_back(parse_polynomial(ring, order, line));
    return gens;
}

}  // namespace sympow
