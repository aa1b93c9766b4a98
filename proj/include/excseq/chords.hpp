#pragma once

// Oriented chords and loops on a circle with n marked points, the ordered
// noncrossing predicate and enumeration of noncrossing sequences.
//
// The support of a chord from i to j is the set of boundary arcs swept
// clockwise from i to j (arc a runs from marked point a to a+1); a loop
// supports every arc, which places it above every chord in the inclusion
// order.  The pair predicate rotates the second object to start at 0 and
// tests membership of its span in the support of the first, which is the
// normal form every geometric configuration reduces to.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "forest.hpp"  // for mod()

namespace excseq {

struct ChordObject {
    int from = 0;
    int to = 0;

    bool is_loop() const { return from == to; }
    bool operator==(const ChordObject& o) const { return from == o.from && to == o.to; }
    bool operator<(const ChordObject& o) const {
        if (from != o.from) return from < o.from;
        return to < o.to;
    }
};

struct ChordSequence {
    int n = 0;
    std::vector<ChordObject> items;

    bool operator==(const ChordSequence& o) const { return n == o.n && items == o.items; }
    bool operator<(const ChordSequence& o) const {
        if (n != o.n) return n < o.n;
        return items < o.items;
    }
};

inline bool chord_in_range(const ChordObject& g, int n) {
    return g.from >= 0 && g.from < n && g.to >= 0 && g.to < n;
}

// Arc set as a bitmask over Z_n (bit a = arc from marked point a to a+1).
inline std::uint32_t support_mask(const ChordObject& g, int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("circle size out of range");
    if (!chord_in_range(g, n)) throw std::invalid_argument("marked point out of range");
    if (g.is_loop()) return n == 32 ? 0xffffffffu : ((1u << n) - 1u);
    std::uint32_t m = 0;
    for (int a = g.from; a != g.to; a = mod(a + 1, n)) m |= 1u << a;
    return m;
}

// Ordered compatibility of (g1, g2): rotate so g2 becomes the span 0 -> k
// (k = n for a loop) and test k against the support interval of the rotated
// g1, which is (i, j] when i < j and (j, n] when j <= i.
inline bool noncrossing_pair(const ChordObject& g1, const ChordObject& g2, int n) {
    if (!chord_in_range(g1, n) || !chord_in_range(g2, n))
        throw std::invalid_argument("marked point out of range");
    int k = mod(g2.to - g2.from, n);
    if (k == 0) k = n;
    int i = mod(g1.from - g2.from, n);
    int j = mod(g1.to - g2.from, n);
    bool k_in_support = (i < j) ? (i < k && k <= j) : (k > j);
    return !k_in_support;
}

inline bool is_valid_sequence(const ChordSequence& s) {
    for (size_t b = 0; b < s.items.size(); ++b) {
        if (!chord_in_range(s.items[b], s.n)) return false;
        for (size_t a = 0; a < b; ++a)
            if (!noncrossing_pair(s.items[a], s.items[b], s.n)) return false;
    }
    return true;
}

inline int loop_count(const ChordSequence& s) {
    int c = 0;
    for (auto& g : s.items) c += g.is_loop() ? 1 : 0;
    return c;
}

// Consistency conditions that are implied by pairwise noncrossing: at most
// one loop, and the underlying unoriented chords of a loop-free sequence are
// acyclic.  Used as an internal check, not as part of validity.
inline bool sequence_consistency(const ChordSequence& s) {
    if (!is_valid_sequence(s)) return false;
    if (loop_count(s) > 1) return false;
    // union-find on marked points over non-loop chords
    std::vector<int> uf(static_cast<size_t>(s.n));
    for (int v = 0; v < s.n; ++v) uf[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
        while (uf[static_cast<size_t>(v)] != v) v = uf[static_cast<size_t>(v)];
        return v;
    };
    for (auto& g : s.items) {
        if (g.is_loop()) continue;
        int a = find(g.from), b = find(g.to);
        if (a == b) return false;  // cycle
        uf[static_cast<size_t>(a)] = b;
    }
    return true;
}

// Arcs lying in no support; for a valid loop-free sequence this is the one
// region on the right side of every chord.
inline std::uint32_t central_region(const ChordSequence& s) {
    if (!is_valid_sequence(s) || loop_count(s) > 0)
        throw std::invalid_argument("central region needs a valid loop-free sequence");
    std::uint32_t all = s.n == 32 ? 0xffffffffu : ((1u << s.n) - 1u);
    std::uint32_t region = all;
    for (auto& g : s.items) region &= ~support_mask(g, s.n);
    if (region == 0) throw std::logic_error("central region is empty");
    // no chord may separate two arcs of the region
    for (auto& g : s.items) {
        std::uint32_t m = support_mask(g, s.n);
        if ((region & m) != 0 && (region & ~m) != 0)
            throw std::logic_error("central region split by a chord");
    }
    return region;
}

enum class ChordMode { ChordsOnly, WithLoops };

// Lexicographic backtracking over extensions; visit returns false to stop.
template <class Visit>
bool enumerate_sequences_visit(int n, int k, ChordMode mode, Visit&& visit) {
    if (k > n) throw std::invalid_argument("sequence length exceeds circle size");
    ChordSequence s;
    s.n = n;
    auto extend_ok = [&](const ChordObject& g) {
        for (auto& prev : s.items)
            if (!noncrossing_pair(prev, g, n)) return false;
        return true;
    };
    // depth-first over objects in (from, to) order
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(s.items.size()) == k) return visit(s);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ChordObject g{i, j};
                if (mode == ChordMode::ChordsOnly && g.is_loop()) continue;
                if (!extend_ok(g)) continue;
                s.items.push_back(g);
                bool go_on = self(self);
                s.items.pop_back();
                if (!go_on) return false;
            }
        return true;
    };
    return rec(rec);
}

inline std::vector<ChordSequence> enumerate_sequences(int n, int k, ChordMode mode) {
    std::vector<ChordSequence> out;
    enumerate_sequences_visit(n, k, mode, [&](const ChordSequence& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

inline bool is_pointed_diagram(const ChordSequence& s) {
    return static_cast<int>(s.items.size()) == s.n && is_valid_sequence(s) && loop_count(s) == 1;
}

inline std::vector<ChordSequence> enumerate_pointed_diagrams(int n) {
    std::vector<ChordSequence> out;
    enumerate_sequences_visit(n, n, ChordMode::WithLoops, [&](const ChordSequence& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

// Extends a valid sequence to maximal length (n-1 chords-only, n with loops),
// returning the first extension in lexicographic backtracking order.
inline ChordSequence complete_diagram(const ChordSequence& input, ChordMode mode) {
    if (!is_valid_sequence(input)) throw std::invalid_argument("invalid chord sequence");
    int n = input.n;
    int target = mode == ChordMode::ChordsOnly ? n - 1 : n;
    if (static_cast<int>(input.items.size()) > target)
        throw std::invalid_argument("sequence longer than completion target");
    ChordSequence s = input;
    auto extend_ok = [&](const ChordObject& g) {
        for (auto& prev : s.items)
            if (!noncrossing_pair(prev, g, n)) return false;
        return true;
    };
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(s.items.size()) == target) return true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                ChordObject g{i, j};
                if (mode == ChordMode::ChordsOnly && g.is_loop()) continue;
                if (!extend_ok(g)) continue;
                s.items.push_back(g);
                if (self(self)) return true;
                s.items.pop_back();
            }
        return false;
    };
    if (!rec(rec)) throw std::logic_error("valid sequence admitted no completion");
    return s;
}

inline ChordObject rotate_chord(const ChordObject& g, int t, int n) {
    return ChordObject{mod(g.from - t, n), mod(g.to - t, n)};
}

inline ChordSequence rotate_sequence(const ChordSequence& s, int t) {
    ChordSequence out;
    out.n = s.n;
    out.items.reserve(s.items.size());
    for (auto& g : s.items) out.items.push_back(rotate_chord(g, t, s.n));
    return out;
}

// Unoriented ordered chord diagrams realized as orientation classes: each one
// lifts to exactly k+1 oriented diagrams, one per choice of central region.
// Canonical form: endpoints sorted within each chord.
inline std::vector<std::vector<std::pair<int, int>>> enumerate_unoriented(int n, int k) {
    if (k < 1 || k >= n) throw std::invalid_argument("unoriented length out of range");
    std::vector<std::vector<std::pair<int, int>>> out;
    enumerate_sequences_visit(n, k, ChordMode::ChordsOnly, [&](const ChordSequence& s) {
        std::vector<std::pair<int, int>> u;
        u.reserve(s.items.size());
        for (auto& g : s.items)
            u.emplace_back(std::min(g.from, g.to), std::max(g.from, g.to));
        out.push_back(std::move(u));
        return true;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace excseq
