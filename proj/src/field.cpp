#include "sympow/field.hpp"

#include <charconv>

namespace sympow {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    for (; e; e >>= 1) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; this witness set decides primality for all
// 64-bit integers.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime("fp modulus " + std::to_string(p) + " is not prime");
    return {FieldKind::Prime, p};
}

FieldSpec FieldSpec::parse(std::string_view token) {
    if (token == "qq") return rationals();
    constexpr std::string_view kPrefix = "fp:";
    if (token.substr(0, kPrefix.size()) == kPrefix) {
        std::string_view digits = token.substr(kPrefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            throw ParseError("bad field token '" + std::string(token) + "'");
        return prime(p);
    }
    throw ParseError("bad field token '" + std::string(token) + "' (want qq or fp:<p>)");
}

std::string FieldSpec::to_string() const {
    return kind == FieldKind::Rationals ? "qq" : "fp:" + std::to_string(p);
}

}  // namespace sympow
