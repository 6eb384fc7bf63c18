#pragma once
#include <array>
#include <cstdint>
#include <string>

#include "sympow/errors.hpp"

namespace sympow {

// Hard cap on ring size: projective space P^N here never needs more than
// N+1 <= 7 variables plus one auxiliary for elimination tricks.
inline constexpr int kMaxVars = 8;

// Exponent vector with cached total degree.  Fixed storage keeps
// monomials trivially copyable and cheap to compare.
struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;
    std::uint8_t n = 0;  // number of active variables

    static Monomial unit(int nvars) {
        Monomial m;
        m.n = static_cast<std::uint8_t>(nvars);
        return m;
    }
    static Monomial var(int nvars, int i, std::uint16_t power = 1) {
        Monomial m = unit(nvars);
        m.e[i] = power;
        m.deg = power;
        return m;
    }

    bool operator==(const Monomial& o) const { return n == o.n && deg == o.deg && e == o.e; }
};

enum class OrderKind { GrevLex, Lex, Block };

// A Block order compares the trailing variables [split, nvars) first
// (graded reverse lex among themselves), then the leading block.  Any
// monomial free of the trailing block in its lead term stays free of it
// throughout, which is what elimination needs.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    int nvars = 0;
    int split = 0;  // Block only: first index of the eliminated block

    static MonomialOrder grevlex(int nvars) { return {OrderKind::GrevLex, nvars, 0}; }
    static MonomialOrder lex(int nvars) { return {OrderKind::Lex, nvars, 0}; }
    static MonomialOrder block(int nvars, int split) { return {OrderKind::Block, nvars, split}; }

    bool operator==(const MonomialOrder&) const = default;
};

// Three-way compare: +1 if a > b in the order, -1 if a < b, 0 if equal.
int mono_cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b);

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

std::string mono_to_string(const Monomial& m, const std::string* names);

}  // namespace sympow
