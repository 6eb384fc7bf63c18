#pragma once
#include <memory>
#include <string>
#include <vector>

#include "sympow/errors.hpp"
#include "sympow/field.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

// Polynomial ring k[x0..x_{n-1}].  Rings are shared immutable context;
// polynomials hold a pointer and refuse to mix contexts.
template <class F>
struct Ring {
    F field;
    int num_vars;
    std::vector<std::string> var_names;

    Ring(F f, int nvars, std::vector<std::string> names)
        : field(std::move(f)), num_vars(nvars), var_names(std::move(names)) {
        if (nvars < 1 || nvars > kMaxVars)
            throw BadParameter("ring must have 1.." + std::to_string(kMaxVars) + " variables");
        if (static_cast<int>(var_names.size()) != nvars)
            throw LengthMismatch("variable name count does not match ring size");
    }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

inline std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

template <class F>
RingPtr<F> make_ring(F field, int nvars) {
    return std::make_shared<const Ring<F>>(std::move(field), nvars, default_var_names(nvars));
}

template <class F>
RingPtr<F> make_ring(F field, int nvars, std::vector<std::string> names) {
    return std::make_shared<const Ring<F>>(std::move(field), nvars, std::move(names));
}

// Same field, one extra trailing variable; used for elimination.
template <class F>
RingPtr<F> extended_ring(const RingPtr<F>& ring, const std::string& extra_name) {
    std::vector<std::string> names = ring->var_names;
    names.push_back(extra_name);
    return make_ring(ring->field, ring->num_vars + 1, std::move(names));
}

// Same field and size with variables rearranged; perm[i] gives the old
// index that lands in new position i.
template <class F>
RingPtr<F> permuted_ring(const RingPtr<F>& ring, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != ring->num_vars)
        throw LengthMismatch("permutation size does not match ring size");
    std::vector<std::string> names;
    names.reserve(perm.size());
    for (int old_idx : perm) names.push_back(ring->var_names.at(old_idx));
    return make_ring(ring->field, ring->num_vars, std::move(names));
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    if (a == b) return true;
    return a->field == b->field && a->num_vars == b->num_vars && a->var_names == b->var_names;
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    if (!same_ring(a, b)) throw ContextMismatch("polynomials live in different rings");
}

}  // namespace sympow
