#pragma once

// Finite-type hereditary categories used as oracles: type C_n with the
// straight descending orientation (long root at the last vertex, a source)
// and linear A_m.  Modules are the intervals M_ij; dimension vectors live in
// the coordinates where alpha_s is the s-th unit vector for s < n and
// alpha_n = (1,...,1).
//
// Hom and Ext dimensions (over the base field K) come from the standard
// hereditary recursion
//
//   hom(X,Y) = <dim X, dim Y> + hom(Y, tau X),   ext(X,Y) = hom(Y, tau X)
//
// grounded at projectives, where <,> is the Euler form.  The Euler matrix is
// not an input: it is pinned by three constraints checked in the tests
// (hom - ext = <,>, the Coxeter relation E d_tauM = -E^T d_M for
// nonprojectives, and <d,d> = 1 for M_ij with i != j versus 2 for M_ii whose
// endomorphism field is the quadratic extension).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "forest.hpp"  // for mod()

namespace excseq {

struct Mod {
    int i = 0;
    int j = 0;

    bool operator==(const Mod& o) const { return i == o.i && j == o.j; }
    bool operator<(const Mod& o) const { return i != o.i ? i < o.i : j < o.j; }
};

enum class HFamily { TypeC, TypeA };

class HereditaryCategory {
public:
    static HereditaryCategory type_c(int n) {
        if (n < 1) throw std::invalid_argument("rank must be positive");
        HereditaryCategory cat;
        cat.family_ = HFamily::TypeC;
        cat.rank_ = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cat.mods_.push_back(Mod{i, j});
        cat.euler_.assign(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
        for (int v = 0; v < n; ++v) cat.euler_[static_cast<size_t>(v)][static_cast<size_t>(v)] = 1;
        cat.euler_[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)] = 2;
        for (int v = 1; v < n - 1; ++v)
            cat.euler_[static_cast<size_t>(v)][static_cast<size_t>(v - 1)] = -1;
        if (n >= 2) cat.euler_[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 2)] = -2;
        cat.finish_init();
        return cat;
    }

    static HereditaryCategory type_a(int m) {
        if (m < 1) throw std::invalid_argument("rank must be positive");
        HereditaryCategory cat;
        cat.family_ = HFamily::TypeA;
        cat.rank_ = m;
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) cat.mods_.push_back(Mod{i, j});
        cat.euler_.assign(static_cast<size_t>(m), std::vector<long long>(static_cast<size_t>(m), 0));
        for (int v = 0; v < m; ++v) cat.euler_[static_cast<size_t>(v)][static_cast<size_t>(v)] = 1;
        for (int v = 1; v < m; ++v)
            cat.euler_[static_cast<size_t>(v)][static_cast<size_t>(v - 1)] = -1;
        cat.finish_init();
        return cat;
    }

    HFamily family() const { return family_; }
    int rank() const { return rank_; }
    int module_count() const { return static_cast<int>(mods_.size()); }
    const std::vector<Mod>& modules() const { return mods_; }
    Mod module(int id) const { return mods_.at(static_cast<size_t>(id)); }

    int index_of(Mod m) const {
        if (family_ == HFamily::TypeC) {
            if (m.i < 0 || m.i >= rank_ || m.j < 0 || m.j >= rank_)
                throw std::out_of_range("module index out of range");
            return m.i * rank_ + m.j;
        }
        if (m.i < 0 || m.j > rank_ || m.i >= m.j)
            throw std::out_of_range("module index out of range");
        // row i starts after rows 0..i-1 of lengths m, m-1, ...
        int before = m.i * rank_ - (m.i * (m.i - 1)) / 2;
        return before + (m.j - m.i - 1);
    }

    const std::vector<long long>& dim_vector(int id) const {
        return dims_.at(static_cast<size_t>(id));
    }

    bool is_projective(int id) const { return module(id).i == 0; }
    bool is_injective(int id) const {
        Mod m = module(id);
        return family_ == HFamily::TypeC ? m.i == rank_ - 1 : m.j == rank_;
    }

    // C-family modules M_ii have endomorphism field the quadratic extension.
    bool has_f_endomorphism(int id) const {
        Mod m = module(id);
        return family_ == HFamily::TypeC && m.i == m.j;
    }

    // -1 for projectives
    int tau_of(int id) const { return tau_.at(static_cast<size_t>(id)); }

    long long euler_form(const std::vector<long long>& x, const std::vector<long long>& y) const {
        long long s = 0;
        for (int r = 0; r < rank_; ++r)
            for (int c = 0; c < rank_; ++c)
                s += x[static_cast<size_t>(r)] * euler_[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                     y[static_cast<size_t>(c)];
        return s;
    }

    const std::vector<std::vector<long long>>& euler_matrix() const { return euler_; }

    int hom_dim(int x, int y) const { return hom_.at(key(x, y)); }
    int ext_dim(int x, int y) const {
        if (is_projective(x)) return 0;
        return hom_dim(y, tau_of(x));
    }

    // Ordered pair (x, y) with x earlier: Hom(y,x) = Ext(y,x) = 0.
    bool exceptional_pair(int x, int y) const { return hom_dim(y, x) == 0 && ext_dim(y, x) == 0; }

    std::string name_of(int id) const {
        Mod m = module(id);
        return "M" + std::to_string(m.i) + std::to_string(m.j);
    }

private:
    HFamily family_ = HFamily::TypeC;
    int rank_ = 0;
    std::vector<Mod> mods_;
    std::vector<std::vector<long long>> dims_;
    std::vector<int> tau_;
    std::vector<std::vector<long long>> euler_;
    std::vector<int> hom_;  // dense table filled at construction

    size_t key(int x, int y) const {
        return static_cast<size_t>(x) * mods_.size() + static_cast<size_t>(y);
    }

    std::vector<long long> alpha(int s) const {
        // 1-based simple-root coordinates
        std::vector<long long> v(static_cast<size_t>(rank_), 0);
        if (family_ == HFamily::TypeC && s == rank_) {
            for (auto& x : v) x = 1;
        } else {
            v[static_cast<size_t>(s - 1)] = 1;
        }
        return v;
    }

    void finish_init() {
        int n = rank_;
        dims_.reserve(mods_.size());
        tau_.reserve(mods_.size());
        for (auto& m : mods_) {
            std::vector<long long> d(static_cast<size_t>(n), 0);
            auto add = [&](int s, long long sign) {
                auto a = alpha(s);
                for (int t = 0; t < n; ++t) d[static_cast<size_t>(t)] += sign * a[static_cast<size_t>(t)];
            };
            if (family_ == HFamily::TypeC && m.j <= m.i) {
                for (int s = m.i + 1; s <= n; ++s) add(s, +1);
                for (int s = 1; s <= m.j; ++s) add(s, -1);
            } else {
                for (int s = m.i + 1; s <= m.j; ++s) add(s, +1);
            }
            dims_.push_back(std::move(d));
        }
        for (auto& m : mods_) {
            if (m.i == 0) {
                tau_.push_back(-1);
            } else if (family_ == HFamily::TypeC) {
                tau_.push_back(index_of(Mod{m.i - 1, mod(m.j - 1, n)}));
            } else {
                tau_.push_back(index_of(Mod{m.i - 1, m.j - 1}));
            }
        }
        fill_hom_table();
    }

    void fill_hom_table() {
        size_t count = mods_.size();
        hom_.assign(count * count, -1);
        for (size_t x = 0; x < count; ++x)
            for (size_t y = 0; y < count; ++y)
                hom_rec(static_cast<int>(x), static_cast<int>(y), 0);
    }

    int hom_rec(int x, int y, int depth) {
        if (depth > 4 * module_count()) throw std::logic_error("hom recursion did not ground");
        int& slot = hom_[key(x, y)];
        if (slot >= 0) return slot;
        long long e = euler_form(dims_[static_cast<size_t>(x)], dims_[static_cast<size_t>(y)]);
        long long h = is_projective(x) ? e : e + hom_rec(y, tau_of(x), depth + 1);
        if (h < 0 || h > 1000000) throw std::logic_error("hom dimension out of range");
        slot = static_cast<int>(h);
        return slot;
    }
};

// --- sequence machinery -----------------------------------------------------

template <class Visit>
bool enumerate_exc_sequences_visit(const HereditaryCategory& cat, int k, Visit&& visit) {
    if (k > cat.rank()) throw std::invalid_argument("length exceeds rank");
    std::vector<int> seq;
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(seq.size()) == k) return visit(seq);
        for (int cand = 0; cand < cat.module_count(); ++cand) {
            bool ok = true;
            for (int prev : seq)
                if (!cat.exceptional_pair(prev, cand)) { ok = false; break; }
            if (!ok) continue;
            seq.push_back(cand);
            bool go_on = self(self);
            seq.pop_back();
            if (!go_on) return false;
        }
        return true;
    };
    return rec(rec);
}

inline std::vector<std::vector<int>> enumerate_exc_sequences(const HereditaryCategory& cat, int k) {
    std::vector<std::vector<int>> out;
    enumerate_exc_sequences_visit(cat, k, [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

inline bool is_exc_sequence(const HereditaryCategory& cat, const std::vector<int>& seq) {
    for (size_t b = 0; b < seq.size(); ++b)
        for (size_t a = 0; a < b; ++a)
            if (!cat.exceptional_pair(seq[a], seq[b])) return false;
    return true;
}

inline std::vector<int> perp_category(const HereditaryCategory& cat, const std::vector<int>& s) {
    std::vector<int> out;
    for (int y = 0; y < cat.module_count(); ++y) {
        bool ok = true;
        for (int e : s)
            if (cat.hom_dim(e, y) != 0 || cat.ext_dim(e, y) != 0) { ok = false; break; }
        if (ok) out.push_back(y);
    }
    return out;
}

inline std::vector<int> left_perp_category(const HereditaryCategory& cat,
                                           const std::vector<int>& s) {
    std::vector<int> out;
    for (int y = 0; y < cat.module_count(); ++y) {
        bool ok = true;
        for (int e : s)
            if (cat.hom_dim(y, e) != 0 || cat.ext_dim(y, e) != 0) { ok = false; break; }
        if (ok) out.push_back(y);
    }
    return out;
}

// E_j projective in the right perpendicular category of the later terms.
inline bool is_rel_projective(const HereditaryCategory& cat, const std::vector<int>& seq, int j) {
    if (j < 1 || j > static_cast<int>(seq.size())) throw std::out_of_range("position out of range");
    std::vector<int> later(seq.begin() + j, seq.end());
    for (int y : perp_category(cat, later))
        if (cat.ext_dim(seq[static_cast<size_t>(j - 1)], y) != 0) return false;
    return true;
}

inline bool is_rel_injective(const HereditaryCategory& cat, const std::vector<int>& seq, int j) {
    if (j < 1 || j > static_cast<int>(seq.size())) throw std::out_of_range("position out of range");
    std::vector<int> earlier(seq.begin(), seq.begin() + (j - 1));
    for (int y : left_perp_category(cat, earlier))
        if (cat.ext_dim(y, seq[static_cast<size_t>(j - 1)]) != 0) return false;
    return true;
}

struct PerpSignature {
    int mu = 0;
    std::vector<int> lambda;  // ascending, padded with zeros to the sequence length

    bool operator==(const PerpSignature& o) const { return mu == o.mu && lambda == o.lambda; }
    bool operator<(const PerpSignature& o) const {
        if (mu != o.mu) return mu < o.mu;
        return lambda < o.lambda;
    }
};

// Perpendicular type of an exceptional sequence: connected components of the
// hom/ext graph on the perp indecomposables; the component containing an
// F-endomorphism module is the B factor (of rank mu with mu^2 objects), the
// others are A factors of rank m with m(m+1)/2 objects.
inline PerpSignature classify_perp_type(const HereditaryCategory& cat,
                                        const std::vector<int>& seq) {
    std::vector<int> perp = perp_category(cat, seq);
    int len = static_cast<int>(seq.size());
    std::vector<int> comp(perp.size(), -1);
    int ncomp = 0;
    for (size_t s = 0; s < perp.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t t = 0; t < perp.size(); ++t) {
                if (comp[t] >= 0) continue;
                int x = perp[cur], y = perp[t];
                if (cat.hom_dim(x, y) || cat.hom_dim(y, x) || cat.ext_dim(x, y) ||
                    cat.ext_dim(y, x)) {
                    comp[t] = ncomp;
                    stack.push_back(t);
                }
            }
        }
        ++ncomp;
    }
    PerpSignature sig;
    bool seen_b = false;
    for (int c = 0; c < ncomp; ++c) {
        int count = 0;
        bool has_f = false;
        for (size_t s = 0; s < perp.size(); ++s)
            if (comp[s] == c) {
                ++count;
                has_f = has_f || cat.has_f_endomorphism(perp[s]);
            }
        if (has_f) {
            if (seen_b) throw std::logic_error("two components with F endomorphisms");
            seen_b = true;
            int m = 0;
            while (m * m < count) ++m;
            if (m * m != count) throw std::logic_error("B component of non-square size");
            sig.mu = m;
        } else {
            int m = 0;
            while (m * (m + 1) / 2 < count) ++m;
            if (m * (m + 1) / 2 != count) throw std::logic_error("A component of bad size");
            sig.lambda.push_back(m);
        }
    }
    while (static_cast<int>(sig.lambda.size()) < len) sig.lambda.push_back(0);
    std::sort(sig.lambda.begin(), sig.lambda.end());
    if (static_cast<int>(sig.lambda.size()) != len)
        throw std::logic_error("more perp components than free slots");
    int total = sig.mu;
    for (int l : sig.lambda) total += l;
    if (total != cat.rank() - len) throw std::logic_error("perp rank bookkeeping failed");
    return sig;
}

struct SignedMod {
    int id = 0;
    bool shifted = false;

    bool operator==(const SignedMod& o) const { return id == o.id && shifted == o.shifted; }
    bool operator<(const SignedMod& o) const {
        if (id != o.id) return id < o.id;
        return shifted < o.shifted;
    }
};

// Every exceptional sequence together with every choice of shifts supported
// on its relatively projective positions.
template <class Visit>
bool signed_sequences_visit(const HereditaryCategory& cat, int k, Visit&& visit) {
    return enumerate_exc_sequences_visit(cat, k, [&](const std::vector<int>& seq) {
        std::vector<int> proj_pos;
        for (int j = 1; j <= k; ++j)
            if (is_rel_projective(cat, seq, j)) proj_pos.push_back(j);
        int p = static_cast<int>(proj_pos.size());
        for (int mask = 0; mask < (1 << p); ++mask) {
            std::vector<SignedMod> s;
            s.reserve(seq.size());
            for (size_t t = 0; t < seq.size(); ++t) s.push_back(SignedMod{seq[t], false});
            for (int b = 0; b < p; ++b)
                if (mask & (1 << b)) s[static_cast<size_t>(proj_pos[static_cast<size_t>(b)] - 1)].shifted = true;
            if (!visit(s)) return false;
        }
        return true;
    });
}

inline bool is_signed_sequence(const HereditaryCategory& cat, const std::vector<SignedMod>& s) {
    std::vector<int> under;
    under.reserve(s.size());
    for (auto& x : s) under.push_back(x.id);
    if (!is_exc_sequence(cat, under)) return false;
    for (size_t t = 0; t < s.size(); ++t)
        if (s[t].shifted && !is_rel_projective(cat, under, static_cast<int>(t) + 1)) return false;
    return true;
}

// Cluster-category ext-orthogonality: two modules need Ext vanishing both
// ways, shifted projectives are orthogonal to each other, and P[1] vs a
// module M needs Hom(P, M) = 0.
inline bool cluster_ext_orthogonal(const HereditaryCategory& cat, const SignedMod& x,
                                   const SignedMod& y) {
    if ((x.shifted && !cat.is_projective(x.id)) || (y.shifted && !cat.is_projective(y.id)))
        throw std::invalid_argument("only projectives may be shifted in a cluster");
    if (x.shifted && y.shifted) return true;
    if (x.shifted) return cat.hom_dim(x.id, y.id) == 0;
    if (y.shifted) return cat.hom_dim(y.id, x.id) == 0;
    return cat.ext_dim(x.id, y.id) == 0 && cat.ext_dim(y.id, x.id) == 0;
}

inline bool is_partial_cluster(const HereditaryCategory& cat, const std::vector<SignedMod>& t) {
    for (size_t b = 0; b < t.size(); ++b)
        for (size_t a = 0; a < b; ++a)
            if (!cluster_ext_orthogonal(cat, t[a], t[b])) return false;
    return true;
}

}  // namespace excseq
