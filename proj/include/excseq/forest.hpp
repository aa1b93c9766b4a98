#pragma once

// Rooted labeled forests and trees, weights, augmentations and root
// insertion/truncation.  Vertices carry labels 1..n; augmentation residues
// are 0-based modulo n.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace excseq {

inline int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

// A rooted labeled forest on vertices 1..n.  parent[i-1] is the label of the
// parent of vertex i, or 0 when vertex i is a root.
struct RootedForest {
    int n = 0;
    std::vector<int> parent;

    RootedForest() = default;
    RootedForest(int n_, std::vector<int> parent_) : n(n_), parent(std::move(parent_)) {}

    int parent_of(int label) const { return parent.at(static_cast<size_t>(label - 1)); }
    bool is_root(int label) const { return parent_of(label) == 0; }

    std::vector<int> roots() const {
        std::vector<int> r;
        for (int v = 1; v <= n; ++v)
            if (is_root(v)) r.push_back(v);
        return r;
    }

    std::vector<int> children_of(int label) const {
        std::vector<int> c;
        for (int v = 1; v <= n; ++v)
            if (parent_of(v) == label) c.push_back(v);
        return c;
    }

    bool operator==(const RootedForest& o) const { return n == o.n && parent == o.parent; }
    bool operator<(const RootedForest& o) const {
        if (n != o.n) return n < o.n;
        return parent < o.parent;
    }
};

// A RootedTree is a RootedForest with exactly one root.
using RootedTree = RootedForest;

inline bool forest_is_valid(const RootedForest& f) {
    if (static_cast<int>(f.parent.size()) != f.n) return false;
    for (int v = 1; v <= f.n; ++v) {
        int p = f.parent_of(v);
        if (p < 0 || p > f.n || p == v) return false;
    }
    // every parent chain must reach a root
    for (int v = 1; v <= f.n; ++v) {
        int cur = v, steps = 0;
        while (cur != 0) {
            cur = f.parent_of(cur);
            if (++steps > f.n) return false;
        }
    }
    return true;
}

inline bool is_tree(const RootedForest& f) {
    return f.n >= 1 && forest_is_valid(f) && static_cast<int>(f.roots().size()) == 1;
}

inline int root_of_tree(const RootedTree& t) {
    for (int v = 1; v <= t.n; ++v)
        if (t.is_root(v)) return v;
    throw std::invalid_argument("tree has no root");
}

inline void check_label(const RootedForest& f, int i) {
    if (i < 1 || i > f.n) throw std::out_of_range("vertex label out of range");
}

// Number of vertices in the subtree rooted at v_i (descendants including v_i).
inline int weight(const RootedForest& f, int i) {
    check_label(f, i);
    int w = 0;
    for (int v = 1; v <= f.n; ++v) {
        int cur = v;
        while (cur != 0) {
            if (cur == i) { ++w; break; }
            cur = f.parent_of(cur);
        }
    }
    return w;
}

// Reduced forest weight: weight at roots, zero elsewhere.
inline int reduced_weight(const RootedForest& f, int i) {
    check_label(f, i);
    return f.is_root(i) ? weight(f, i) : 0;
}

enum class VertexClass { Root, Ascending, Descending };

inline VertexClass vertex_class(const RootedForest& f, int i) {
    check_label(f, i);
    int p = f.parent_of(i);
    if (p == 0) return VertexClass::Root;
    return p > i ? VertexClass::Descending : VertexClass::Ascending;
}

// Deleting the root of a tree on n vertices and shifting the labels above it
// down by one.
inline RootedForest underlying_forest(const RootedTree& t) {
    int r = root_of_tree(t);
    RootedForest f;
    f.n = t.n - 1;
    f.parent.assign(static_cast<size_t>(f.n), 0);
    auto relabel = [&](int v) { return v < r ? v : v - 1; };
    for (int v = 1; v <= t.n; ++v) {
        if (v == r) continue;
        int p = t.parent_of(v);
        f.parent[static_cast<size_t>(relabel(v) - 1)] = (p == r) ? 0 : relabel(p);
    }
    return f;
}

// Reduced tree weight: 1 at the root, reduced forest weight of the
// corresponding vertex of the underlying forest elsewhere.
inline int reduced_tree_weight(const RootedTree& t, int i) {
    check_label(t, i);
    int r = root_of_tree(t);
    if (i == r) return 1;
    RootedForest f = underlying_forest(t);
    int fi = i < r ? i : i - 1;
    return reduced_weight(f, fi);
}

// A rooted labeled tree on n vertices with a residue epsilon mod n attached
// to its root.
struct AugmentedTree {
    RootedTree tree;
    int epsilon = 0;

    bool operator==(const AugmentedTree& o) const { return tree == o.tree && epsilon == o.epsilon; }
    bool operator<(const AugmentedTree& o) const {
        if (!(tree == o.tree)) return tree < o.tree;
        return epsilon < o.epsilon;
    }
};

// A forest on n-1 vertices together with an augmentation
// eps : {0..n-1} -> Z_n satisfying eps(i) = eps(i-1) - w(v_i) where w is the
// reduced forest weight.  Only eps(0) is stored; the rest is derived.
struct AugmentedForest {
    RootedForest forest;  // n-1 vertices
    int modulus = 1;      // n
    int eps0 = 0;         // eps(0)

    std::vector<int> epsilon_map() const {
        std::vector<int> eps(static_cast<size_t>(modulus));
        eps[0] = eps0;
        for (int i = 1; i < modulus; ++i)
            eps[static_cast<size_t>(i)] =
                mod(eps[static_cast<size_t>(i - 1)] - reduced_weight(forest, i), modulus);
        return eps;
    }

    bool operator==(const AugmentedForest& o) const {
        return forest == o.forest && modulus == o.modulus && eps0 == o.eps0;
    }
    bool operator<(const AugmentedForest& o) const {
        if (!(forest == o.forest)) return forest < o.forest;
        if (modulus != o.modulus) return modulus < o.modulus;
        return eps0 < o.eps0;
    }
};

inline bool augmented_tree_is_valid(const AugmentedTree& t) {
    return is_tree(t.tree) && t.epsilon >= 0 && t.epsilon < t.tree.n;
}

inline bool augmented_forest_is_valid(const AugmentedForest& f) {
    return forest_is_valid(f.forest) && f.modulus == f.forest.n + 1 && f.eps0 >= 0 &&
           f.eps0 < f.modulus;
}

inline AugmentedForest truncate_root(const AugmentedTree& t) {
    if (!augmented_tree_is_valid(t)) throw std::invalid_argument("invalid augmented tree");
    int n = t.tree.n;
    int r = root_of_tree(t.tree);
    AugmentedForest f;
    f.forest = underlying_forest(t.tree);
    f.modulus = n;
    // eps_F(r-1) = eps_T pins the whole map; walk the recurrence back to eps(0).
    int e = t.epsilon;
    for (int i = r - 1; i >= 1; --i) e = mod(e + reduced_weight(f.forest, i), n);
    f.eps0 = e;
    return f;
}

inline AugmentedTree insert_root(const AugmentedForest& f, int r) {
    if (!augmented_forest_is_valid(f)) throw std::invalid_argument("invalid augmented forest");
    int n = f.modulus;
    if (r < 1 || r > n) throw std::out_of_range("root label out of range");
    AugmentedTree t;
    t.tree.n = n;
    t.tree.parent.assign(static_cast<size_t>(n), 0);
    auto relabel = [&](int v) { return v < r ? v : v + 1; };
    for (int v = 1; v <= f.forest.n; ++v) {
        int p = f.forest.parent_of(v);
        t.tree.parent[static_cast<size_t>(relabel(v) - 1)] = (p == 0) ? r : relabel(p);
    }
    t.epsilon = f.epsilon_map()[static_cast<size_t>(r - 1)];
    return t;
}

// All rooted labeled forests on m vertices, ordered lexicographically on the
// parent array with 0 (root) < 1 < ... < m.
inline std::vector<RootedForest> enumerate_forests(int m) {
    if (m < 0) throw std::invalid_argument("negative vertex count");
    std::vector<RootedForest> out;
    RootedForest f;
    f.n = m;
    f.parent.assign(static_cast<size_t>(m), 0);
    // reject parent arrays containing a cycle
    auto acyclic = [&]() {
        for (int v = 1; v <= m; ++v) {
            int cur = v, steps = 0;
            while (cur != 0 && ++steps <= m) cur = f.parent_of(cur);
            if (cur != 0) return false;
        }
        return true;
    };
    while (true) {
        if (acyclic()) out.push_back(f);
        int i = m - 1;
        for (; i >= 0; --i) {
            int& p = f.parent[static_cast<size_t>(i)];
            ++p;
            if (p == i + 1) ++p;  // no self-parent
            if (p <= m) break;
            p = 0;
        }
        if (i < 0) break;
    }
    return out;
}

inline std::vector<RootedTree> enumerate_trees(int n) {
    std::vector<RootedTree> out;
    for (auto& f : enumerate_forests(n))
        if (static_cast<int>(f.roots().size()) == 1) out.push_back(f);
    return out;
}

inline std::vector<AugmentedTree> enumerate_augmented_trees(int n) {
    std::vector<AugmentedTree> out;
    for (auto& t : enumerate_trees(n))
        for (int e = 0; e < n; ++e) out.push_back(AugmentedTree{t, e});
    return out;
}

// Augmented forests on n-1 vertices (modulus n); there are n^(n-1) of them.
inline std::vector<AugmentedForest> enumerate_augmented_forests(int n) {
    std::vector<AugmentedForest> out;
    for (auto& f : enumerate_forests(n - 1))
        for (int e = 0; e < n; ++e) out.push_back(AugmentedForest{f, n, e});
    return out;
}

}  // namespace excseq
