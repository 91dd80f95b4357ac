#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewmon {

// Structural problems (bad shapes, mixed fields, malformed input) are thrown;
// axiom failures are reported as data, never as exceptions.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : StructuralError {
    explicit OverflowError(const std::string& what) : StructuralError(what) {}
};

// Mixed-radix helpers for reshaping composite index spaces (row-major:
// the last axis varies fastest).
inline std::size_t flat_index(const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& idx)
{
    std::size_t f = 0;
    for (std::size_t a = 0; a < dims.size(); ++a)
        f = f * dims[a] + idx[a];
    return f;
}

inline std::vector<std::size_t> unflatten(const std::vector<std::size_t>& dims, std::size_t f)
{
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t a = dims.size(); a-- > 0;) {
        idx[a] = f % dims[a];
        f /= dims[a];
    }
    return idx;
}

inline std::size_t product(const std::vector<std::size_t>& dims)
{
    std::size_t p = 1;
    for (auto d : dims)
        p *= d;
    return p;
}

// Column reindexing table for an axis permutation. new_axis[a] names the old
// axis that becomes axis a; entry j of the result is the old flat index of the
// new flat index j.
inline std::vector<std::size_t> axis_permutation(const std::vector<std::size_t>& old_dims,
                                                 const std::vector<std::size_t>& new_axis)
{
    std::vector<std::size_t> new_dims(new_axis.size());
    for (std::size_t a = 0; a < new_axis.size(); ++a)
        new_dims[a] = old_dims[new_axis[a]];
    const std::size_t total = product(old_dims);
    std::vector<std::size_t> table(total);
    std::vector<std::size_t> old_idx(old_dims.size());
    for (std::size_t j = 0; j < total; ++j) {
        auto idx = unflatten(new_dims, j);
        for (std::size_t a = 0; a < new_axis.size(); ++a)
            old_idx[new_axis[a]] = idx[a];
        table[j] = flat_index(old_dims, old_idx);
    }
    return table;
}

} // namespace skewmon
