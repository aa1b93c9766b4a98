#pragma once

// Braid group generators acting on rooted labeled forests, trees and
// augmented trees.  The generator cases follow the parent/child/sibling
// relation of v_i and v_{i+1} after adjoining a virtual root v_0 that makes
// all roots siblings:
//
//   case 0: unrelated            -> switch the labels i, i+1
//   case 1: v_k -> v_i -> v_i+1  -> v_k -> v_i+1 -> v_i, children kept by label
//   case 2: v_k -> v_i+1 -> v_i  -> both children of v_k, children swapped
//   case 3: siblings under v_k   -> children swapped, then v_k -> v_i -> v_i+1
//
// On trees there is a special rule when v_{i+1} is the root: only the labels
// i and i+1 are switched.  Words act left-to-right (first token acts first);
// the fundamental braid delta_n therefore executes s_{n-1},...,s_1 in that
// order so that composing right-to-left spells sigma_1 ... sigma_{n-1}.

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "forest.hpp"

namespace excseq {

inline void check_gen_index(int n, int i) {
    if (i < 1 || i > n - 1) throw std::out_of_range("braid generator index out of range");
}

inline RootedForest sigma_forest(const RootedForest& f, int i) {
    check_gen_index(f.n, i);
    RootedForest g = f;
    int pi = f.parent_of(i);        // 0 stands for the virtual root v_0
    int pi1 = f.parent_of(i + 1);
    auto swap_children = [&]() {
        for (int v = 1; v <= f.n; ++v) {
            if (v == i || v == i + 1) continue;
            if (f.parent_of(v) == i) g.parent[static_cast<size_t>(v - 1)] = i + 1;
            else if (f.parent_of(v) == i + 1) g.parent[static_cast<size_t>(v - 1)] = i;
        }
    };
    if (pi1 == i) {
        // case 1
        g.parent[static_cast<size_t>(i)] = pi;       // v_{i+1} takes v_i's parent
        g.parent[static_cast<size_t>(i - 1)] = i + 1;
    } else if (pi == i + 1) {
        // case 2
        swap_children();
        g.parent[static_cast<size_t>(i - 1)] = pi1;  // both under v_k now
    } else if (pi == pi1) {
        // case 3 (includes two roots, siblings under v_0)
        swap_children();
        g.parent[static_cast<size_t>(i)] = i;
    } else {
        // case 0: switch labels (neither vertex is parent of the other here)
        swap_children();
        g.parent[static_cast<size_t>(i - 1)] = pi1;
        g.parent[static_cast<size_t>(i)] = pi;
    }
    return g;
}

inline RootedTree sigma_tree(const RootedTree& t, int i) {
    check_gen_index(t.n, i);
    int r = root_of_tree(t);
    if (r == i + 1) {
        // special rule: switch the labels of v_i and v_{i+1} only
        RootedTree g = t;
        for (int v = 1; v <= t.n; ++v) {
            if (v == i || v == i + 1) continue;
            if (t.parent_of(v) == i) g.parent[static_cast<size_t>(v - 1)] = i + 1;
            else if (t.parent_of(v) == i + 1) g.parent[static_cast<size_t>(v - 1)] = i;
        }
        int pi = t.parent_of(i);
        g.parent[static_cast<size_t>(i - 1)] = 0;
        g.parent[static_cast<size_t>(i)] = pi == i + 1 ? i : pi;  // pi == i+1 only if chained
        return g;
    }
    return sigma_forest(t, i);
}

inline AugmentedTree sigma_augmented(const AugmentedTree& t, int i) {
    check_gen_index(t.tree.n, i);
    int r = root_of_tree(t.tree);
    AugmentedTree out;
    out.tree = sigma_tree(t.tree, i);
    out.epsilon = t.epsilon;
    if (i == r - 1)
        out.epsilon = mod(t.epsilon + reduced_tree_weight(t.tree, r - 1), t.tree.n);
    return out;
}

// A braid word in execution order: entry +i is sigma_i, entry -i its inverse.
using BraidWord = std::vector<int>;

// Parses "s1 s2 s1'" where a trailing apostrophe marks the inverse.
inline BraidWord parse_braid_word(const std::string& text) {
    BraidWord w;
    size_t p = 0;
    while (p < text.size()) {
        while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == ',')) ++p;
        if (p >= text.size()) break;
        if (text[p] != 's' && text[p] != 'S')
            throw std::invalid_argument("braid word tokens look like s3 or s3'");
        ++p;
        size_t q = p;
        while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
        if (q == p) throw std::invalid_argument("missing generator index in braid word");
        int idx = std::atoi(text.substr(p, q - p).c_str());
        bool inv = q < text.size() && text[q] == '\'';
        if (inv) ++q;
        w.push_back(inv ? -idx : idx);
        p = q;
    }
    return w;
}

// delta_n = sigma_1 ... sigma_{n-1} as a composition (rightmost acts first),
// so the execution order is s_{n-1}, ..., s_1.
inline BraidWord delta_word(int n) {
    BraidWord w;
    for (int i = n - 1; i >= 1; --i) w.push_back(i);
    return w;
}

// Garside element Delta = delta_n delta_{n-1} ... delta_2.
inline BraidWord garside_word(int n) {
    BraidWord w;
    for (int m = 2; m <= n; ++m) {
        BraidWord d = delta_word(m);
        w.insert(w.end(), d.begin(), d.end());
    }
    return w;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

inline BraidWord repeat_word(const BraidWord& w, int times) {
    BraidWord out;
    for (int t = 0; t < times; ++t) out.insert(out.end(), w.begin(), w.end());
    return out;
}

// Generic word action.  Apply must be a callable (x, i) -> x implementing the
// positive generator; inverses are computed by cycling the forward orbit,
// which is finite because every generator permutes the finite carrier.
template <class T, class Apply>
T act_word(const BraidWord& w, T x, Apply&& apply) {
    for (int tok : w) {
        if (tok == 0) throw std::invalid_argument("zero braid generator");
        if (tok > 0) {
            x = apply(x, tok);
        } else {
            int i = -tok;
            T prev = x;
            T cur = apply(x, i);
            int guard = 0;
            while (!(cur == x)) {
                prev = cur;
                cur = apply(cur, i);
                if (++guard > 100000000) throw std::runtime_error("generator orbit did not close");
            }
            x = prev;
        }
    }
    return x;
}

inline RootedForest act_word_forest(const BraidWord& w, const RootedForest& f) {
    return act_word(w, f, [](const RootedForest& x, int i) { return sigma_forest(x, i); });
}
inline RootedTree act_word_tree(const BraidWord& w, const RootedTree& t) {
    return act_word(w, t, [](const RootedTree& x, int i) { return sigma_tree(x, i); });
}
inline AugmentedTree act_word_augmented(const BraidWord& w, const AugmentedTree& t) {
    return act_word(w, t, [](const AugmentedTree& x, int i) { return sigma_augmented(x, i); });
}

}  // namespace excseq
