#pragma once

// Exact integer lattice membership.  The generating vectors are brought to a
// Hermite-style row echelon form over Z by repeated gcd elimination per
// column; a vector lies in the Z-span iff it reduces to zero with divisible
// pivot steps.  Inputs here are tiny (dimension <= 8, entries of size O(n)),
// so int64 arithmetic is ample.

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace excseq {

// Echelon basis of the Z-span: pivot columns strictly increase and every row
// is zero left of its pivot.
inline std::vector<std::vector<long long>> z_echelon_basis(
    std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<long long>> basis;
    if (rows.empty()) return basis;
    size_t dim = rows.front().size();
    for (size_t col = 0; col < dim; ++col) {
        // gcd-eliminate until at most one row is nonzero at this column
        while (true) {
            int best = -1;
            int live = 0;
            for (size_t r = 0; r < rows.size(); ++r) {
                long long x = rows[r][col];
                if (x == 0) continue;
                ++live;
                if (best < 0 || std::llabs(x) < std::llabs(rows[static_cast<size_t>(best)][col]))
                    best = static_cast<int>(r);
            }
            if (live <= 1) break;
            auto& piv = rows[static_cast<size_t>(best)];
            for (size_t r = 0; r < rows.size(); ++r) {
                if (static_cast<int>(r) == best || rows[r][col] == 0) continue;
                long long q = rows[r][col] / piv[col];
                for (size_t t = 0; t < dim; ++t) rows[r][t] -= q * piv[t];
            }
        }
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            auto row = rows[r];
            rows.erase(rows.begin() + static_cast<long>(r));
            if (row[col] < 0)
                for (auto& x : row) x = -x;
            basis.push_back(std::move(row));
            break;
        }
    }
    return basis;
}

inline bool in_z_span(const std::vector<std::vector<long long>>& span,
                      const std::vector<long long>& target) {
    std::vector<long long> v = target;
    auto basis = z_echelon_basis(span);
    size_t dim = v.size();
    for (auto& row : basis) {
        size_t col = 0;
        while (row[col] == 0) ++col;
        if (v[col] % row[col] != 0) return false;
        long long q = v[col] / row[col];
        for (size_t t = 0; t < dim; ++t) v[t] -= q * row[t];
    }
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace excseq
