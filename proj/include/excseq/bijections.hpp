#pragma once

// The correspondences tying the models together.
//
//   * elementwise transport M_ij <-> V_ij <-> gamma_ij,
//   * pointed chord diagrams <-> augmented trees (Hasse diagram of supports),
//   * complete tube sequences <-> augmented forests,
//   * the signed-sequence chain theta/beta/chi between the tube of rank n+1
//     and type C_n,
//   * the deletion/insertion braid action on complete sequences.
//
// theta and chi are recursive from the right: the new first entry is the
// unique candidate that is orthogonal to the already-built tail and whose
// dimension vector is congruent to the prescribed one modulo the Z-span of
// the later dimension vectors.  Uniqueness is a theorem, so zero or multiple
// candidates abort loudly.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "braid.hpp"
#include "chords.hpp"
#include "forest.hpp"
#include "hereditary.hpp"
#include "lattice.hpp"
#include "tube.hpp"

namespace excseq {

// --- elementwise transports --------------------------------------------------

inline ChordObject chord_of_tube(const TubeObject& v) {
    auto [i, j] = v.v_pair();
    return ChordObject{i, j};
}

inline TubeObject tube_of_chord(const ChordObject& g, int n) { return make_brick(g.from, g.to, n); }

inline ChordObject chord_of_module(const HereditaryCategory& cat, int id) {
    Mod m = cat.module(id);
    return ChordObject{m.i, m.j};
}

inline int module_of_chord(const HereditaryCategory& cat, const ChordObject& g) {
    return cat.index_of(Mod{g.from, g.to});
}

inline ChordSequence chords_of_tube_sequence(const std::vector<TubeObject>& seq, int n) {
    ChordSequence s;
    s.n = n;
    s.items.reserve(seq.size());
    for (auto& v : seq) s.items.push_back(chord_of_tube(v));
    return s;
}

inline std::vector<TubeObject> tube_sequence_of_chords(const ChordSequence& s) {
    std::vector<TubeObject> out;
    out.reserve(s.items.size());
    for (auto& g : s.items) out.push_back(tube_of_chord(g, s.n));
    return out;
}

inline ChordSequence chords_of_cn_sequence(const HereditaryCategory& cat,
                                           const std::vector<int>& seq) {
    ChordSequence s;
    s.n = cat.rank();
    s.items.reserve(seq.size());
    for (int id : seq) s.items.push_back(chord_of_module(cat, id));
    return s;
}

inline std::vector<int> cn_sequence_of_chords(const HereditaryCategory& cat,
                                              const ChordSequence& s) {
    std::vector<int> out;
    out.reserve(s.items.size());
    for (auto& g : s.items) out.push_back(module_of_chord(cat, g));
    return out;
}

// --- pointed diagrams <-> augmented trees ------------------------------------

// Vertex p of the tree is position p of the diagram; the parent is the
// minimal strict superset in the support order, the root is the loop
// position and the augmentation is the loop's marked point.
inline AugmentedTree hasse_tree(const ChordSequence& d) {
    if (!is_pointed_diagram(d)) throw std::invalid_argument("not a pointed chord diagram");
    int n = d.n;
    std::vector<std::uint32_t> sup;
    sup.reserve(d.items.size());
    for (auto& g : d.items) sup.push_back(support_mask(g, n));
    AugmentedTree t;
    t.tree.n = n;
    t.tree.parent.assign(static_cast<size_t>(n), 0);
    for (int q = 0; q < n; ++q) {
        int parent = 0;
        for (int p = 0; p < n; ++p) {
            if (p == q) continue;
            if (sup[static_cast<size_t>(p)] == sup[static_cast<size_t>(q)])
                throw std::logic_error("equal supports in a pointed diagram");
            if ((sup[static_cast<size_t>(p)] | sup[static_cast<size_t>(q)]) !=
                sup[static_cast<size_t>(p)])
                continue;  // not a superset
            if (parent == 0 ||
                (sup[static_cast<size_t>(p)] | sup[static_cast<size_t>(parent - 1)]) ==
                    sup[static_cast<size_t>(parent - 1)])
                parent = p + 1;
        }
        t.tree.parent[static_cast<size_t>(q)] = parent;
    }
    if (!is_tree(t.tree)) throw std::logic_error("support order is not a tree");
    for (size_t p = 0; p < d.items.size(); ++p)
        if (d.items[p].is_loop()) {
            if (!t.tree.is_root(static_cast<int>(p) + 1))
                throw std::logic_error("loop is not the root of the support order");
            t.epsilon = d.items[p].from;
        }
    return t;
}

namespace detail {

struct TreeKey {
    std::vector<int> data;
    bool operator<(const TreeKey& o) const { return data < o.data; }
};

inline TreeKey key_of(const AugmentedTree& t) {
    TreeKey k;
    k.data = t.tree.parent;
    k.data.push_back(t.epsilon);
    return k;
}

// Full inverse table built once per n: every pointed diagram is produced and
// hashed under its Hasse tree; bijectivity means each tree appears exactly
// once, which is asserted while filling.
inline const std::map<TreeKey, ChordSequence>& diagram_table(int n) {
    static std::mutex guard;
    static std::map<int, std::map<TreeKey, ChordSequence>> tables;
    std::lock_guard<std::mutex> lock(guard);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;
    std::map<TreeKey, ChordSequence> table;
    enumerate_sequences_visit(n, n, ChordMode::WithLoops, [&](const ChordSequence& d) {
        TreeKey k = key_of(hasse_tree(d));
        if (!table.emplace(k, d).second)
            throw std::logic_error("two pointed diagrams share a Hasse tree");
        return true;
    });
    long long expect = 1;
    for (int t = 0; t < n; ++t) expect *= n;
    if (static_cast<long long>(table.size()) != expect)
        throw std::logic_error("pointed diagram table has the wrong size");
    return tables.emplace(n, std::move(table)).first->second;
}

}  // namespace detail

inline ChordSequence diagram_from_tree(const AugmentedTree& t) {
    if (!augmented_tree_is_valid(t)) throw std::invalid_argument("invalid augmented tree");
    const auto& table = detail::diagram_table(t.tree.n);
    auto it = table.find(detail::key_of(t));
    if (it == table.end()) throw std::logic_error("augmented tree has no diagram preimage");
    return it->second;
}

// --- complete tube sequences <-> augmented forests ---------------------------

// Insert the missing loop in every valid way; all n insertions must truncate
// to the same augmented forest.
inline AugmentedForest forest_of_complete_tube_sequence(const std::vector<TubeObject>& seq) {
    if (seq.empty()) throw std::invalid_argument("empty tube sequence");
    int n = seq.front().n;
    if (static_cast<int>(seq.size()) != n - 1 || !is_exceptional_sequence(seq))
        throw std::invalid_argument("need a complete exceptional tube sequence");
    ChordSequence chords = chords_of_tube_sequence(seq, n);
    std::optional<AugmentedForest> result;
    int insertions = 0;
    for (int pos = 0; pos <= n - 1; ++pos)
        for (int l = 0; l < n; ++l) {
            ChordSequence d = chords;
            d.items.insert(d.items.begin() + pos, ChordObject{l, l});
            if (!is_valid_sequence(d)) continue;
            ++insertions;
            AugmentedForest f = truncate_root(hasse_tree(d));
            if (result && !(*result == f))
                throw std::logic_error("loop insertions disagree on the forest");
            result = f;
        }
    if (insertions != n) throw std::logic_error("expected exactly n loop insertions");
    return *result;
}

inline std::vector<TubeObject> tube_sequence_of_forest(const AugmentedForest& f) {
    int n = f.modulus;
    ChordSequence d = diagram_from_tree(insert_root(f, 1));
    ChordSequence chords;
    chords.n = n;
    for (auto& g : d.items)
        if (!g.is_loop()) chords.items.push_back(g);
    std::vector<TubeObject> seq = tube_sequence_of_chords(chords);
    if (!(forest_of_complete_tube_sequence(seq) == f))
        throw std::logic_error("forest round trip failed");
    return seq;
}

// Relative projectivity of a complete tube sequence read off the forest:
// descending vertices are the relatively projective positions, ascending the
// relatively injective ones.
inline std::vector<bool> rel_projective_combinatorial(const std::vector<TubeObject>& seq) {
    AugmentedForest f = forest_of_complete_tube_sequence(seq);
    std::vector<bool> out;
    for (int j = 1; j <= f.forest.n; ++j)
        out.push_back(vertex_class(f.forest, j) == VertexClass::Descending);
    return out;
}

inline std::vector<bool> rel_injective_combinatorial(const std::vector<TubeObject>& seq) {
    AugmentedForest f = forest_of_complete_tube_sequence(seq);
    std::vector<bool> out;
    for (int j = 1; j <= f.forest.n; ++j)
        out.push_back(vertex_class(f.forest, j) == VertexClass::Ascending);
    return out;
}

// --- theta: signed tube sequences <-> ext-orthogonal tuples ------------------

inline bool is_signed_tube_sequence(const std::vector<SignedTubeObject>& s) {
    std::vector<TubeObject> under;
    under.reserve(s.size());
    for (auto& x : s) under.push_back(x.obj);
    if (!is_exceptional_sequence(under)) return false;
    for (size_t t = 0; t < s.size(); ++t)
        if (s[t].shifted && !is_rel_projective_oracle(under, static_cast<int>(t) + 1))
            return false;
    return true;
}

inline bool ext_orthogonal_tube(const TubeObject& x, const TubeObject& y) {
    return !ext_nonzero(x, y) && !ext_nonzero(y, x);
}

inline std::vector<TubeObject> theta(const std::vector<SignedTubeObject>& s) {
    if (s.empty()) return {};
    if (!is_signed_tube_sequence(s)) throw std::invalid_argument("invalid signed tube sequence");
    int n = s.front().obj.n;
    int k = static_cast<int>(s.size());
    std::vector<TubeObject> out(s.size(), TubeObject(0, 1, n));
    out[static_cast<size_t>(k - 1)] = s.back().obj;
    for (int p = k - 2; p >= 0; --p) {
        std::vector<std::vector<long long>> span;
        for (int l = p + 1; l < k; ++l) span.push_back(tube_dim_vector(s[static_cast<size_t>(l)].obj));
        std::vector<long long> want = tube_dim_vector(s[static_cast<size_t>(p)].obj);
        if (s[static_cast<size_t>(p)].shifted)
            for (auto& x : want) x = -x;
        std::optional<TubeObject> found;
        for (auto& cand : tube_bricks(n)) {
            if (!cand.is_rigid()) continue;
            bool orth = true;
            for (int l = p + 1; l < k; ++l)
                if (!ext_orthogonal_tube(cand, out[static_cast<size_t>(l)])) { orth = false; break; }
            if (!orth) continue;
            std::vector<long long> diff = tube_dim_vector(cand);
            for (size_t t = 0; t < diff.size(); ++t) diff[t] -= want[t];
            if (!in_z_span(span, diff)) continue;
            if (found) throw std::logic_error("theta candidate is not unique");
            found = cand;
        }
        if (!found) throw std::logic_error("theta found no candidate");
        out[static_cast<size_t>(p)] = *found;
    }
    return out;
}

inline std::vector<SignedTubeObject> theta_inverse(const std::vector<TubeObject>& tuple) {
    if (tuple.empty()) return {};
    int n = tuple.front().n;
    int k = static_cast<int>(tuple.size());
    for (size_t b = 0; b < tuple.size(); ++b) {
        if (!tuple[b].is_rigid()) throw std::invalid_argument("tuple must be rigid");
        for (size_t a = 0; a < b; ++a)
            if (!ext_orthogonal_tube(tuple[a], tuple[b]))
                throw std::invalid_argument("tuple must be ext-orthogonal");
    }
    std::vector<SignedTubeObject> out(tuple.size());
    out[static_cast<size_t>(k - 1)] = SignedTubeObject{tuple.back(), false};
    for (int p = k - 2; p >= 0; --p) {
        std::vector<TubeObject> tail;
        for (int l = p + 1; l < k; ++l) tail.push_back(out[static_cast<size_t>(l)].obj);
        std::vector<std::vector<long long>> span;
        for (auto& v : tail) span.push_back(tube_dim_vector(v));
        std::vector<long long> want = tube_dim_vector(tuple[static_cast<size_t>(p)]);
        std::optional<SignedTubeObject> found;
        for (auto& cand : tube_bricks(n)) {
            if (!cand.is_rigid()) continue;
            bool exc = true;
            for (auto& later : tail)
                if (!soft_exceptional_pair(cand, later)) { exc = false; break; }
            if (!exc) continue;
            std::vector<TubeObject> ext_seq;
            ext_seq.push_back(cand);
            ext_seq.insert(ext_seq.end(), tail.begin(), tail.end());
            bool rel_proj = is_rel_projective_oracle(ext_seq, 1);
            for (int sign = 0; sign < 2; ++sign) {
                if (sign == 1 && !rel_proj) continue;
                std::vector<long long> diff = tube_dim_vector(cand);
                if (sign == 1)
                    for (auto& x : diff) x = -x;
                for (size_t t = 0; t < diff.size(); ++t) diff[t] -= want[t];
                if (!in_z_span(span, diff)) continue;
                if (found) throw std::logic_error("theta inverse candidate is not unique");
                found = SignedTubeObject{cand, sign == 1};
            }
        }
        if (!found) throw std::logic_error("theta inverse found no candidate");
        out[static_cast<size_t>(p)] = *found;
    }
    return out;
}

// --- beta: rigid objects of the rank-(n+1) tube -> cluster objects of C_n ----

// V_ij with i = n maps to the shifted projective P_{j+1}[1]; otherwise the
// index pair is carried over, skipping the removed mouth position.
inline SignedMod beta_object(const HereditaryCategory& cn, const TubeObject& v) {
    int n = cn.rank();
    if (v.n != n + 1) throw std::invalid_argument("beta expects the tube of rank n+1");
    if (!v.is_rigid()) throw std::invalid_argument("beta expects rigid objects");
    auto [i, j] = v.v_pair();
    if (i == n) {
        int jj = j + 1 == n ? 0 : j + 1;  // P_n is M_00
        return SignedMod{cn.index_of(Mod{0, jj}), true};
    }
    if (i < j) return SignedMod{cn.index_of(Mod{i, mod(j, n)}), false};
    return SignedMod{cn.index_of(Mod{i, j + 1}), false};
}

inline TubeObject beta_inverse_object(const HereditaryCategory& cn, const SignedMod& x) {
    int n = cn.rank();
    Mod m = cn.module(x.id);
    if (x.shifted) {
        if (!cn.is_projective(x.id)) throw std::invalid_argument("only projectives are shifted");
        return make_brick(n, m.j == 0 ? n - 1 : m.j - 1, n + 1);
    }
    if (m.i < m.j) return make_brick(m.i, m.j, n + 1);
    if (m.i == 0 && m.j == 0) return TubeObject(0, n, n + 1);  // V_{0,n}
    if (m.j == 0) return TubeObject(m.i, n, n + 1);            // from V_{i,n}
    return make_brick(m.i, m.j - 1, n + 1);
}

inline std::vector<SignedMod> beta(const HereditaryCategory& cn,
                                   const std::vector<TubeObject>& tuple) {
    std::vector<SignedMod> out;
    out.reserve(tuple.size());
    for (auto& v : tuple) out.push_back(beta_object(cn, v));
    return out;
}

inline std::vector<TubeObject> beta_inverse(const HereditaryCategory& cn,
                                            const std::vector<SignedMod>& tuple) {
    std::vector<TubeObject> out;
    out.reserve(tuple.size());
    for (auto& x : tuple) out.push_back(beta_inverse_object(cn, x));
    return out;
}

// --- chi: ordered partial clusters <-> signed exceptional sequences ----------

inline std::vector<long long> signed_dim(const HereditaryCategory& cat, const SignedMod& x) {
    std::vector<long long> d = cat.dim_vector(x.id);
    if (x.shifted)
        for (auto& v : d) v = -v;
    return d;
}

inline std::vector<SignedMod> chi(const HereditaryCategory& cat,
                                  const std::vector<SignedMod>& cluster) {
    if (cluster.empty()) return {};
    if (!is_partial_cluster(cat, cluster))
        throw std::invalid_argument("chi expects an ordered partial cluster");
    int k = static_cast<int>(cluster.size());
    std::vector<SignedMod> out(cluster.size());
    out[static_cast<size_t>(k - 1)] = cluster.back();
    for (int p = k - 2; p >= 0; --p) {
        std::vector<int> tail;
        std::vector<std::vector<long long>> span;
        for (int l = p + 1; l < k; ++l) {
            tail.push_back(out[static_cast<size_t>(l)].id);
            span.push_back(cat.dim_vector(out[static_cast<size_t>(l)].id));
        }
        std::vector<long long> want = signed_dim(cat, cluster[static_cast<size_t>(p)]);
        std::optional<SignedMod> found;
        for (int cand = 0; cand < cat.module_count(); ++cand) {
            bool exc = true;
            for (int later : tail)
                if (!cat.exceptional_pair(cand, later)) { exc = false; break; }
            if (!exc) continue;
            for (int sign = 0; sign < 2; ++sign) {
                std::vector<long long> diff = cat.dim_vector(cand);
                if (sign == 1)
                    for (auto& x : diff) x = -x;
                for (size_t t = 0; t < diff.size(); ++t) diff[t] -= want[t];
                if (!in_z_span(span, diff)) continue;
                if (sign == 1) {
                    // a shift is only legal at a relatively projective slot
                    std::vector<int> ext_seq;
                    ext_seq.push_back(cand);
                    ext_seq.insert(ext_seq.end(), tail.begin(), tail.end());
                    if (!is_rel_projective(cat, ext_seq, 1))
                        throw std::logic_error("negative chi solution at a non-projective slot");
                }
                if (found) throw std::logic_error("chi candidate is not unique");
                found = SignedMod{cand, sign == 1};
            }
        }
        if (!found) throw std::logic_error("chi found no candidate");
        out[static_cast<size_t>(p)] = *found;
    }
    return out;
}

inline std::vector<SignedMod> chi_inverse(const HereditaryCategory& cat,
                                          const std::vector<SignedMod>& seq) {
    if (seq.empty()) return {};
    if (!is_signed_sequence(cat, seq))
        throw std::invalid_argument("chi inverse expects a signed exceptional sequence");
    int k = static_cast<int>(seq.size());
    std::vector<SignedMod> out(seq.size());
    out[static_cast<size_t>(k - 1)] = seq.back();
    for (int p = k - 2; p >= 0; --p) {
        std::vector<std::vector<long long>> span;
        for (int l = p + 1; l < k; ++l) span.push_back(cat.dim_vector(seq[static_cast<size_t>(l)].id));
        std::vector<long long> want = signed_dim(cat, seq[static_cast<size_t>(p)]);
        std::optional<SignedMod> found;
        for (int cand = 0; cand < cat.module_count(); ++cand)
            for (int sign = 0; sign < 2; ++sign) {
                if (sign == 1 && !cat.is_projective(cand)) continue;
                SignedMod sm{cand, sign == 1};
                bool orth = true;
                for (int l = p + 1; l < k; ++l)
                    if (!cluster_ext_orthogonal(cat, sm, out[static_cast<size_t>(l)])) {
                        orth = false;
                        break;
                    }
                if (!orth) continue;
                std::vector<long long> diff = signed_dim(cat, sm);
                for (size_t t = 0; t < diff.size(); ++t) diff[t] -= want[t];
                if (!in_z_span(span, diff)) continue;
                if (found) throw std::logic_error("chi inverse candidate is not unique");
                found = sm;
            }
        if (!found) throw std::logic_error("chi inverse found no candidate");
        out[static_cast<size_t>(p)] = *found;
    }
    return out;
}

// --- the full chain -----------------------------------------------------------

inline std::vector<SignedMod> full_chain(const HereditaryCategory& cn,
                                         const std::vector<SignedTubeObject>& s) {
    return chi(cn, beta(cn, theta(s)));
}

inline std::vector<SignedTubeObject> full_chain_inverse(const HereditaryCategory& cn,
                                                        const std::vector<SignedMod>& s) {
    return theta_inverse(beta_inverse(cn, chi_inverse(cn, s)));
}

// --- braid action by deletion/insertion --------------------------------------

// sigma_i deletes the (i+1)st object and inserts the unique object before
// position i keeping the sequence exceptional.
inline std::vector<int> braid_on_cn_sequence(const HereditaryCategory& cat,
                                             const std::vector<int>& seq, int i) {
    int n = static_cast<int>(seq.size());
    if (i < 1 || i >= n) throw std::out_of_range("braid generator index out of range");
    if (!is_exc_sequence(cat, seq)) throw std::invalid_argument("not an exceptional sequence");
    std::vector<int> out(seq);
    out[static_cast<size_t>(i)] = out[static_cast<size_t>(i - 1)];
    std::optional<int> found;
    for (int cand = 0; cand < cat.module_count(); ++cand) {
        out[static_cast<size_t>(i - 1)] = cand;
        if (is_exc_sequence(cat, out)) {
            if (found) throw std::logic_error("braid slot candidate is not unique");
            found = cand;
        }
    }
    if (!found) throw std::logic_error("braid slot has no candidate");
    out[static_cast<size_t>(i - 1)] = *found;
    return out;
}

inline ChordSequence braid_on_pointed(const ChordSequence& d, int i) {
    int n = d.n;
    if (i < 1 || i >= n) throw std::out_of_range("braid generator index out of range");
    if (!is_pointed_diagram(d)) throw std::invalid_argument("not a pointed diagram");
    ChordSequence out = d;
    out.items[static_cast<size_t>(i)] = out.items[static_cast<size_t>(i - 1)];
    std::optional<ChordObject> found;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            out.items[static_cast<size_t>(i - 1)] = ChordObject{a, b};
            if (is_valid_sequence(out)) {
                if (found) throw std::logic_error("braid slot candidate is not unique");
                found = ChordObject{a, b};
            }
        }
    if (!found) throw std::logic_error("braid slot has no candidate");
    out.items[static_cast<size_t>(i - 1)] = *found;
    return out;
}

inline std::vector<int> act_word_cn_sequence(const HereditaryCategory& cat, const BraidWord& w,
                                             const std::vector<int>& seq) {
    return act_word(w, seq, [&](const std::vector<int>& x, int i) {
        return braid_on_cn_sequence(cat, x, i);
    });
}

inline ChordSequence act_word_pointed(const BraidWord& w, const ChordSequence& d) {
    return act_word(w, d, [](const ChordSequence& x, int i) { return braid_on_pointed(x, i); });
}

}  // namespace excseq
