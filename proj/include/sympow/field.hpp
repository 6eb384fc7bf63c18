#pragma once
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "sympow/errors.hpp"

namespace sympow {

enum class FieldKind { Rationals, Prime };

// Runtime description of a coefficient field: Q or F_p with p prime.
// Prime powers are rejected; nothing here models F_{p^e}.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec prime(std::uint64_t p);         // NotPrime unless p is prime
    static FieldSpec parse(std::string_view token);  // "qq" | "fp:<p>"
    std::string to_string() const;
    std::uint64_t characteristic() const { return kind == FieldKind::Prime ? p : 0; }
    bool operator==(const FieldSpec&) const = default;
};

bool is_prime_u64(std::uint64_t n);

// F_p arithmetic on canonical residues 0..p-1.  Elements are plain
// integers; every operation goes through the field object.
class PrimeField {
  public:
    using Elem = std::uint64_t;
    static constexpr bool is_rationals = false;

    explicit PrimeField(std::uint64_t p) : p_(FieldSpec::prime(p).p) {}
    explicit PrimeField(const FieldSpec& s) : p_(s.p) {
        if (s.kind != FieldKind::Prime) throw BadParameter("PrimeField needs an fp spec");
    }

    FieldSpec spec() const { return FieldSpec::prime(p_); }
    std::uint64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return r < 0 ? r + p_ : r;
    }
    Elem from_mpz(const mpz_class& v) const {
        mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
        if (r < 0) r += static_cast<unsigned long>(p_);
        return r.get_ui();
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p_);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw ZeroInversion("inverse of 0 in F_" + std::to_string(p_));
        // Fermat: a^(p-2); p is prime so this is the inverse.
        Elem r = one(), base = a;
        for (std::uint64_t e = p_ - 2; e; e >>= 1) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
        }
        return r;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        for (; e; e >>= 1) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
        }
        return r;
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    std::uint64_t p_;
};

// Exact rationals via GMP; mpq_class keeps values canonicalized.
class RationalField {
  public:
    using Elem = mpq_class;
    static constexpr bool is_rationals = true;

    RationalField() = default;
    explicit RationalField(const FieldSpec& s) {
        if (s.kind != FieldKind::Rationals) throw BadParameter("RationalField needs a qq spec");
    }

    FieldSpec spec() const { return FieldSpec::rationals(); }
    std::uint64_t characteristic() const { return 0; }

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }
    Elem from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
    Elem from_mpz(const mpz_class& v) const { return mpq_class(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw ZeroInversion("inverse of 0 in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        for (; e; e >>= 1) {
            if (e & 1) r = r * a;
            a = a * a;
        }
        return r;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const { return true; }

  private:
    const Elem& inv_guard(const Elem& b) const {
        if (b == 0) throw ZeroInversion("division by 0 in Q");
        return b;
    }
};

}  // namespace sympow
