#pragma once

// Closed-form counters, the linear-subgraph model with its two recursions,
// exceptional-set deduplication, exact relative-projectivity statistics and
// the generating polynomial.  All arithmetic is exact: big integers via GMP,
// probabilities as exact rationals.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "chords.hpp"
#include "hereditary.hpp"
#include "tube.hpp"

namespace excseq {

// long long -> mpz without relying on a (missing) long long overload
inline mpz_class mpz_ll(long long x) { return mpz_class(static_cast<long>(x)); }

inline mpz_class mpz_pow(long long base, int exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

inline mpz_class mpz_binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline mpz_class mpz_fact(long long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

enum class CountKind {
    ExcCn,           // n^k C(n,k)
    SignedCn,        // (n+k)!/(k!(n-k)!)
    ClustersCn,      // (n+k)!/(k!k!(n-k)!)
    ExcAn,           // C(n+1,k+1)(n+1)^(k-1)
    ChordUnoriented, // C(n,k+1) n^(k-1)
    ChordOriented,   // C(n-1,k) n^k
    Pointed,         // n^n
    ExcSetsAn,       // (3n)!/(n!(2n+1)!)
    ExcSetsWn,       // n(3n-3)!/((n-1)!(2n-1)!)
    ExcSetsCn,       // C(3n-2, n-1)
};

inline const char* count_kind_name(CountKind kind) {
    switch (kind) {
        case CountKind::ExcCn: return "exc-cn";
        case CountKind::SignedCn: return "signed-cn";
        case CountKind::ClustersCn: return "clusters-cn";
        case CountKind::ExcAn: return "exc-an";
        case CountKind::ChordUnoriented: return "chord-unoriented";
        case CountKind::ChordOriented: return "chord-oriented";
        case CountKind::Pointed: return "pointed";
        case CountKind::ExcSetsAn: return "excsets-an";
        case CountKind::ExcSetsWn: return "excsets-wn";
        case CountKind::ExcSetsCn: return "excsets-cn";
    }
    return "?";
}

inline std::optional<CountKind> parse_count_kind(const std::string& name) {
    for (CountKind kind :
         {CountKind::ExcCn, CountKind::SignedCn, CountKind::ClustersCn, CountKind::ExcAn,
          CountKind::ChordUnoriented, CountKind::ChordOriented, CountKind::Pointed,
          CountKind::ExcSetsAn, CountKind::ExcSetsWn, CountKind::ExcSetsCn})
        if (name == count_kind_name(kind)) return kind;
    return std::nullopt;
}

inline bool count_kind_wants_k(CountKind kind) {
    switch (kind) {
        case CountKind::Pointed:
        case CountKind::ExcSetsAn:
        case CountKind::ExcSetsWn:
        case CountKind::ExcSetsCn: return false;
        default: return true;
    }
}

inline mpz_class count_formula(CountKind kind, int n, int k = -1) {
    auto need = [&](bool ok) {
        if (!ok) throw std::invalid_argument("parameters outside the formula domain");
    };
    switch (kind) {
        case CountKind::ExcCn:
            need(n >= 1 && k >= 0 && k <= n);
            return mpz_pow(n, k) * mpz_binom(n, k);
        case CountKind::SignedCn:
            need(n >= 1 && k >= 0 && k <= n);
            return mpz_fact(n + k) / (mpz_fact(k) * mpz_fact(n - k));
        case CountKind::ClustersCn:
            need(n >= 1 && k >= 0 && k <= n);
            return mpz_fact(n + k) / (mpz_fact(k) * mpz_fact(k) * mpz_fact(n - k));
        case CountKind::ExcAn:
            need(n >= 1 && k >= 0 && k <= n);
            if (k == 0) return 1;
            return mpz_binom(n + 1, k + 1) * mpz_pow(n + 1, k - 1);
        case CountKind::ChordUnoriented:
            need(n >= 2 && k >= 1 && k < n);
            return mpz_binom(n, k + 1) * mpz_pow(n, k - 1);
        case CountKind::ChordOriented:
            need(n >= 1 && k >= 0 && k < n);
            return mpz_binom(n - 1, k) * mpz_pow(n, k);
        case CountKind::Pointed:
            need(n >= 1);
            return mpz_pow(n, n);
        case CountKind::ExcSetsAn:
            need(n >= 1);
            return mpz_fact(3 * n) / (mpz_fact(n) * mpz_fact(2 * n + 1));
        case CountKind::ExcSetsWn:
            need(n >= 1);
            return n * mpz_fact(3 * n - 3) / (mpz_fact(n - 1) * mpz_fact(2 * n - 1));
        case CountKind::ExcSetsCn:
            need(n >= 1);
            return mpz_binom(3 * n - 2, n - 1);
    }
    throw std::logic_error("unhandled count kind");
}

// --- exceptional sets ---------------------------------------------------------

enum class SetFamily { A, C, W };

// Complete sequences deduplicated by underlying unordered set.
inline long long count_exceptional_sets(SetFamily family, int n) {
    std::set<std::vector<int>> sets;
    auto insert_sorted = [&](std::vector<int> ids) {
        std::sort(ids.begin(), ids.end());
        sets.insert(std::move(ids));
    };
    if (family == SetFamily::A) {
        auto cat = HereditaryCategory::type_a(n);
        enumerate_exc_sequences_visit(cat, n, [&](const std::vector<int>& s) {
            insert_sorted(s);
            return true;
        });
    } else if (family == SetFamily::C) {
        auto cat = HereditaryCategory::type_c(n);
        enumerate_exc_sequences_visit(cat, n, [&](const std::vector<int>& s) {
            insert_sorted(s);
            return true;
        });
    } else {
        enumerate_tube_sequences_visit(n, n - 1, false, [&](const std::vector<TubeObject>& s) {
            std::vector<int> ids;
            for (auto& v : s) ids.push_back(v.a * (2 * n + 1) + v.b);
            insert_sorted(ids);
            return true;
        });
    }
    return static_cast<long long>(sets.size());
}

// --- subgraphs of the linear graph ---------------------------------------------

// A signature (mu; lambda) for subgraphs of L_n: the piece containing the
// long-root end has mu edges, the remaining components have lambda_0 <= ...
// <= lambda_k edges, and mu + sum(lambda) + (k+1) = n.
struct SubgraphSignature {
    int mu = 0;
    std::vector<int> lambda;

    bool operator<(const SubgraphSignature& o) const {
        if (mu != o.mu) return mu < o.mu;
        return lambda < o.lambda;
    }
    bool operator==(const SubgraphSignature& o) const { return mu == o.mu && lambda == o.lambda; }
};

inline bool signature_is_valid(int n, const SubgraphSignature& sig) {
    if (sig.mu < 0) return false;
    // the degenerate signature with no lambda parts is the undeleted L_n
    if (sig.lambda.empty()) return sig.mu == n;
    int sum = sig.mu;
    for (size_t t = 0; t < sig.lambda.size(); ++t) {
        if (sig.lambda[t] < 0) return false;
        if (t > 0 && sig.lambda[t] < sig.lambda[t - 1]) return false;
        sum += sig.lambda[t];
    }
    return sum + static_cast<int>(sig.lambda.size()) == n;
}

// (k+1)! / prod n_p! where n_p counts the parts of lambda equal to p.
inline mpz_class subgraph_count(int n, const SubgraphSignature& sig) {
    if (!signature_is_valid(n, sig)) throw std::invalid_argument("invalid subgraph signature");
    mpz_class r = mpz_fact(static_cast<long long>(sig.lambda.size()));
    std::map<int, int> mult;
    for (int p : sig.lambda) ++mult[p];
    for (auto& [p, c] : mult) r /= mpz_fact(c);
    return r;
}

// Explicit enumeration: choose the deleted edges of L_n; the edge after the
// mu-piece is always deleted, the other deletions sit beyond it.
inline long long enumerate_subgraphs(int n, const SubgraphSignature& sig) {
    if (!signature_is_valid(n, sig)) throw std::invalid_argument("invalid subgraph signature");
    if (sig.lambda.empty()) return 1;
    int k = static_cast<int>(sig.lambda.size()) - 1;
    std::vector<int> multiset = sig.lambda;
    long long count = 0;
    // deleted edge positions d_0 < ... < d_k with d_0 = mu+1
    std::vector<int> del(static_cast<size_t>(k + 1));
    del[0] = sig.mu + 1;
    auto rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == k + 1) {
            std::vector<int> comps;
            for (int t = 0; t < k; ++t) comps.push_back(del[static_cast<size_t>(t + 1)] -
                                                        del[static_cast<size_t>(t)] - 1);
            comps.push_back(n - del[static_cast<size_t>(k)]);
            std::sort(comps.begin(), comps.end());
            if (comps == multiset) ++count;
            return;
        }
        for (int d = from; d <= n; ++d) {
            del[static_cast<size_t>(idx)] = d;
            self(self, idx + 1, d + 1);
        }
        return;
    };
    rec(rec, 1, sig.mu + 2);
    return count;
}

// All signatures with a fixed number of lambda parts.
inline std::vector<SubgraphSignature> signatures_with_parts(int n, int parts) {
    std::vector<SubgraphSignature> out;
    for (int mu = 0; mu <= n - parts; ++mu) {
        int rest = n - parts - mu;
        std::vector<int> lambda;
        auto rec = [&](auto&& self, int remaining, int minimum, int slots) -> void {
            if (slots == 0) {
                if (remaining == 0) out.push_back(SubgraphSignature{mu, lambda});
                return;
            }
            for (int v = minimum; v <= remaining; ++v) {
                lambda.push_back(v);
                self(self, remaining - v, v, slots - 1);
                lambda.pop_back();
            }
        };
        rec(rec, rest, 0, parts);
    }
    return out;
}

// Neighbours in the two counting identities: lambda' drops one part a (the
// mu-piece grows to mu+a+1), lambda'' merges two parts a,b into c = a+b+1.
struct SignatureStep {
    SubgraphSignature target;
    int a = 0;
    int b = 0;       // only for merges
    int n_c = 0;     // multiplicity of c in lambda''
    bool merge = false;
};

inline std::vector<SignatureStep> signature_steps(const SubgraphSignature& sig) {
    std::vector<SignatureStep> steps;
    std::set<int> distinct(sig.lambda.begin(), sig.lambda.end());
    for (int a : distinct) {
        SubgraphSignature t;
        t.mu = sig.mu + a + 1;
        t.lambda = sig.lambda;
        t.lambda.erase(std::find(t.lambda.begin(), t.lambda.end(), a));
        steps.push_back(SignatureStep{t, a, 0, 0, false});
    }
    std::set<std::pair<int, int>> pairs;
    for (size_t x = 0; x < sig.lambda.size(); ++x)
        for (size_t y = x + 1; y < sig.lambda.size(); ++y)
            pairs.insert({sig.lambda[x], sig.lambda[y]});
    for (auto& [a, b] : pairs) {
        int c = a + b + 1;
        SubgraphSignature t;
        t.mu = sig.mu;
        t.lambda = sig.lambda;
        t.lambda.erase(std::find(t.lambda.begin(), t.lambda.end(), a));
        t.lambda.erase(std::find(t.lambda.begin(), t.lambda.end(), b));
        t.lambda.push_back(c);
        std::sort(t.lambda.begin(), t.lambda.end());
        int n_c = static_cast<int>(std::count(t.lambda.begin(), t.lambda.end(), c));
        steps.push_back(SignatureStep{t, a, b, n_c, true});
    }
    return steps;
}

// Both identities, with the halving factor X(a,b) folded into integers:
//   (k+1)|S(mu;l)| = sum |S(mu';l')| + sum n_c * 2X(a,b) * |S(mu;l'')|
//   n    |S(mu;l)| = sum (mu+a+1)|S(mu';l')| + sum n_c (c+1) X(a,b) |S(mu;l'')|
inline bool check_subgraph_recursions(int n, const SubgraphSignature& sig) {
    mpz_class lhs1 = mpz_ll(static_cast<long long>(sig.lambda.size())) * subgraph_count(n, sig);
    mpz_class lhs2 = mpz_class(n) * subgraph_count(n, sig);
    mpz_class rhs1 = 0, rhs2 = 0;
    for (auto& step : signature_steps(sig)) {
        mpz_class s = subgraph_count(n, step.target);
        if (!step.merge) {
            rhs1 += s;
            rhs2 += mpz_class(sig.mu + step.a + 1) * s;
        } else {
            int c = step.a + step.b + 1;
            long long coef1 = step.a == step.b ? step.n_c : 2LL * step.n_c;
            long long coef2 = step.a == step.b ? static_cast<long long>(step.n_c) * (step.a + 1)
                                               : static_cast<long long>(step.n_c) * (c + 1);
            rhs1 += mpz_ll(coef1) * s;
            rhs2 += mpz_ll(coef2) * s;
        }
    }
    return lhs1 == rhs1 && lhs2 == rhs2;
}

// --- exceptional-sequence fibers (N counts) ------------------------------------

struct FiberCounts {
    std::map<SubgraphSignature, long long> all;
    std::map<SubgraphSignature, long long> first_rel_proj;
};

// Classify every length-l exceptional sequence of C_n by its perpendicular
// type and count those whose first element is relatively projective.
inline FiberCounts fiber_counts(const HereditaryCategory& cat, int len) {
    FiberCounts out;
    enumerate_exc_sequences_visit(cat, len, [&](const std::vector<int>& seq) {
        PerpSignature p = classify_perp_type(cat, seq);
        SubgraphSignature sig{p.mu, p.lambda};
        ++out.all[sig];
        if (is_rel_projective(cat, seq, 1)) ++out.first_rel_proj[sig];
        return true;
    });
    return out;
}

// --- relative-projectivity statistics ------------------------------------------

struct RelProjDistribution {
    int n = 0;
    int k = 0;
    long long total = 0;
    std::vector<long long> proj_marginals;  // position j = 1..k
    std::vector<long long> inj_marginals;
    std::map<std::uint32_t, long long> joint;  // bit j-1 set = position j projective
    long long both_proj_and_inj = 0;
};

inline RelProjDistribution relproj_distribution_cn(const HereditaryCategory& cat, int k) {
    RelProjDistribution d;
    d.n = cat.rank();
    d.k = k;
    d.proj_marginals.assign(static_cast<size_t>(k), 0);
    d.inj_marginals.assign(static_cast<size_t>(k), 0);
    enumerate_exc_sequences_visit(cat, k, [&](const std::vector<int>& seq) {
        ++d.total;
        std::uint32_t mask = 0;
        for (int j = 1; j <= k; ++j) {
            bool proj = is_rel_projective(cat, seq, j);
            bool inj = is_rel_injective(cat, seq, j);
            if (proj) {
                mask |= 1u << (j - 1);
                ++d.proj_marginals[static_cast<size_t>(j - 1)];
            }
            if (inj) ++d.inj_marginals[static_cast<size_t>(j - 1)];
            if (proj && inj) ++d.both_proj_and_inj;
        }
        ++d.joint[mask];
        return true;
    });
    return d;
}

inline RelProjDistribution relproj_distribution_tube(int n, int k) {
    RelProjDistribution d;
    d.n = n;
    d.k = k;
    d.proj_marginals.assign(static_cast<size_t>(k), 0);
    d.inj_marginals.assign(static_cast<size_t>(k), 0);
    enumerate_tube_sequences_visit(n, k, false, [&](const std::vector<TubeObject>& seq) {
        ++d.total;
        std::uint32_t mask = 0;
        for (int j = 1; j <= k; ++j) {
            bool proj = is_rel_projective_oracle(seq, j);
            bool inj = is_rel_injective_oracle(seq, j);
            if (proj) {
                mask |= 1u << (j - 1);
                ++d.proj_marginals[static_cast<size_t>(j - 1)];
            }
            if (inj) ++d.inj_marginals[static_cast<size_t>(j - 1)];
            if (proj && inj) ++d.both_proj_and_inj;
        }
        ++d.joint[mask];
        return true;
    });
    return d;
}

// joint * total^(k-1) == prod over positions of the matching marginal count
inline bool joint_is_product_of_marginals(const RelProjDistribution& d) {
    mpz_class total = mpz_ll(d.total);
    for (std::uint32_t mask = 0; mask < (1u << d.k); ++mask) {
        mpz_class lhs = 0;
        auto it = d.joint.find(mask);
        if (it != d.joint.end()) lhs = mpz_class(static_cast<long>(it->second));
        for (int t = 0; t < d.k - 1; ++t) lhs *= total;
        mpz_class rhs = 1;
        for (int j = 1; j <= d.k; ++j) {
            long long m = d.proj_marginals[static_cast<size_t>(j - 1)];
            rhs *= mpz_class(static_cast<long>((mask >> (j - 1)) & 1 ? m : d.total - m));
        }
        if (lhs != rhs) return false;
    }
    return true;
}

// --- the generating polynomial ---------------------------------------------------

// Coefficients a_beta of f(z_k,...,z_1): bit i-1 of the key corresponds to
// z_i, where position i counts from the right-hand end of the sequence.
using RelProjPolynomial = std::map<std::uint32_t, mpz_class>;

inline RelProjPolynomial generating_polynomial_enumerated(const HereditaryCategory& cat, int k) {
    RelProjPolynomial poly;
    enumerate_exc_sequences_visit(cat, k, [&](const std::vector<int>& seq) {
        std::uint32_t mask = 0;
        for (int j = 1; j <= k; ++j)
            if (is_rel_projective(cat, seq, j)) mask |= 1u << (k - j);  // i = k+1-j
        poly[mask] += 1;
        return true;
    });
    return poly;
}

// C(n,k) prod_i (n - i + i z_i) expanded coefficientwise.
inline RelProjPolynomial generating_polynomial_closed(int n, int k) {
    RelProjPolynomial poly;
    mpz_class lead = mpz_binom(n, k);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        mpz_class coef = lead;
        for (int i = 1; i <= k; ++i)
            coef *= (mask >> (i - 1)) & 1 ? mpz_class(i) : mpz_class(n - i);
        if (coef != 0) poly[mask] = coef;
    }
    return poly;
}

inline mpz_class polynomial_specialize(const RelProjPolynomial& poly, long long z) {
    mpz_class acc = 0;
    for (auto& [mask, coef] : poly) {
        mpz_class term = coef;
        for (int b = 0; b < 32; ++b)
            if (mask & (1u << b)) term *= mpz_ll(z);
        acc += term;
    }
    return acc;
}

}  // namespace excseq
