#pragma once

// The verification harness: named suites, each producing one CheckResult per
// claim with exact expected/actual values.  Reports are deterministic and do
// not depend on the parallelism degree.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "counting.hpp"
#include "parallel.hpp"

namespace excseq {

struct CheckResult {
    std::string suite;
    std::string claim;
    std::string anchor;
    int n = 0;
    int k = -1;
    std::string expected;
    std::string actual;
    std::string counterexample;  // serialized first witness of a failure
    bool pass = false;
};

struct VerifyOptions {
    int n_max = 0;  // 0 = per-suite default
    int jobs = 1;
};

// Per-suite default bounds: linear/chord families run to 6, the tube to 5,
// oracle-backed C_n checks to 4.
struct VerifyBounds {
    int chords = 6;
    int tube = 5;
    int cn = 4;
    int braid = 5;
    int braid_triples = 4;
    int bijections = 5;
    int chain_rank = 5;
};

namespace detail {

inline void add_count(std::vector<CheckResult>& out, const std::string& suite,
                      const std::string& claim, const std::string& anchor, int n, int k,
                      const mpz_class& expected, const mpz_class& actual) {
    CheckResult r;
    r.suite = suite;
    r.claim = claim;
    r.anchor = anchor;
    r.n = n;
    r.k = k;
    r.expected = expected.get_str();
    r.actual = actual.get_str();
    r.pass = expected == actual;
    out.push_back(std::move(r));
}

inline void add_flag(std::vector<CheckResult>& out, const std::string& suite,
                     const std::string& claim, const std::string& anchor, int n, int k, bool ok,
                     const std::string& counterexample = "") {
    CheckResult r;
    r.suite = suite;
    r.claim = claim;
    r.anchor = anchor;
    r.n = n;
    r.k = k;
    r.expected = "holds";
    r.actual = ok ? "holds" : "violated";
    if (!ok) r.counterexample = counterexample;
    r.pass = ok;
    out.push_back(std::move(r));
}

inline std::string forest_witness(const RootedForest& f, int i, int j = -1) {
    std::string s = "parent=[";
    for (int v = 1; v <= f.n; ++v)
        s += std::to_string(f.parent_of(v)) + (v < f.n ? "," : "");
    s += "] i=" + std::to_string(i);
    if (j >= 0) s += " j=" + std::to_string(j);
    return s;
}

}  // namespace detail

// --- counting suites -----------------------------------------------------------

inline std::vector<CheckResult> suite_counts(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int ncap = opt.n_max > 0 ? opt.n_max : bounds.chords;

    for (int n = 1; n <= ncap; ++n) {
        std::vector<ChordObject> catalog;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) catalog.push_back(ChordObject{i, j});
        auto ok_all = [&](int a, int b) { return noncrossing_pair(catalog[static_cast<size_t>(a)],
                                                                  catalog[static_cast<size_t>(b)], n); };
        for (int k = 0; k <= n; ++k) {
            long long got = count_sequences_pairwise(static_cast<int>(catalog.size()), k, ok_all,
                                                     opt.jobs);
            detail::add_count(out, "counts", "noncrossing sequences of chords and loops",
                              "exc-cn", n, k, count_formula(CountKind::ExcCn, n, k), mpz_ll(got));
        }
        std::vector<ChordObject> chords_only;
        for (auto& g : catalog)
            if (!g.is_loop()) chords_only.push_back(g);
        auto ok_chords = [&](int a, int b) {
            return noncrossing_pair(chords_only[static_cast<size_t>(a)],
                                    chords_only[static_cast<size_t>(b)], n);
        };
        for (int k = 0; k < n; ++k) {
            long long got = count_sequences_pairwise(static_cast<int>(chords_only.size()), k,
                                                     ok_chords, opt.jobs);
            detail::add_count(out, "counts", "oriented chord diagrams", "chord-oriented", n, k,
                              count_formula(CountKind::ChordOriented, n, k), mpz_ll(got));
        }
        for (int k = 1; k < n; ++k)
            detail::add_count(out, "counts", "unoriented ordered chord diagrams",
                              "chord-unoriented", n, k,
                              count_formula(CountKind::ChordUnoriented, n, k),
                              mpz_ll(static_cast<long long>(enumerate_unoriented(n, k).size())));
        detail::add_count(out, "counts", "pointed chord diagrams", "pointed", n, n,
                          count_formula(CountKind::Pointed, n),
                          count_formula(CountKind::ExcCn, n, n));
    }

    int tcap = std::min(opt.n_max > 0 ? opt.n_max : bounds.tube, bounds.tube);
    for (int n = 2; n <= tcap; ++n) {
        std::vector<TubeObject> bricks = tube_bricks(n);
        std::vector<TubeObject> rigid;
        for (auto& v : bricks)
            if (v.is_rigid()) rigid.push_back(v);
        auto ok_soft = [&](int a, int b) {
            return soft_exceptional_pair(bricks[static_cast<size_t>(a)],
                                         bricks[static_cast<size_t>(b)]);
        };
        auto ok_exc = [&](int a, int b) {
            return soft_exceptional_pair(rigid[static_cast<size_t>(a)],
                                         rigid[static_cast<size_t>(b)]);
        };
        for (int k = 0; k <= n; ++k)
            detail::add_count(out, "counts", "soft exceptional sequences in the tube", "exc-cn",
                              n, k, count_formula(CountKind::ExcCn, n, k),
                              mpz_ll(count_sequences_pairwise(static_cast<int>(bricks.size()), k,
                                                              ok_soft, opt.jobs)));
        for (int k = 0; k < n; ++k)
            detail::add_count(out, "counts", "exceptional sequences in the tube",
                              "chord-oriented", n, k, count_formula(CountKind::ChordOriented, n, k),
                              mpz_ll(count_sequences_pairwise(static_cast<int>(rigid.size()), k,
                                                              ok_exc, opt.jobs)));
    }

    int ccap = std::min(opt.n_max > 0 ? opt.n_max : bounds.cn, bounds.cn);
    for (int n = 1; n <= ccap; ++n) {
        auto cat = HereditaryCategory::type_c(n);
        auto ok = [&](int a, int b) { return cat.exceptional_pair(a, b); };
        for (int k = 0; k <= n; ++k)
            detail::add_count(out, "counts", "exceptional sequences of modules", "exc-cn", n, k,
                              count_formula(CountKind::ExcCn, n, k),
                              mpz_ll(count_sequences_pairwise(cat.module_count(), k, ok,
                                                              opt.jobs)));
    }
    for (int m = 1; m <= ncap; ++m) {
        auto cat = HereditaryCategory::type_a(m);
        auto ok = [&](int a, int b) { return cat.exceptional_pair(a, b); };
        for (int k = 1; k <= m; ++k)
            detail::add_count(out, "counts", "exceptional sequences of linear type", "exc-an", m,
                              k, count_formula(CountKind::ExcAn, m, k),
                              mpz_ll(count_sequences_pairwise(cat.module_count(), k, ok,
                                                              opt.jobs)));
    }
    return out;
}

inline std::vector<CheckResult> suite_equivalence(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int ncap = opt.n_max > 0 ? opt.n_max : bounds.chords;
    for (int n = 1; n <= ncap; ++n) {
        auto cat = HereditaryCategory::type_c(n);
        long long pairs = static_cast<long long>(n) * n * n * n;
        long long mismatches = parallel_count(pairs, opt.jobs, [&](long long idx) {
            int b = static_cast<int>(idx % n);
            int a = static_cast<int>(idx / n % n);
            int j = static_cast<int>(idx / n / n % n);
            int i = static_cast<int>(idx / n / n / n);
            bool chords_ok = noncrossing_pair({i, j}, {a, b}, n);
            bool tube_ok = soft_exceptional_pair(make_brick(i, j, n), make_brick(a, b, n));
            bool mods_ok = cat.exceptional_pair(cat.index_of({i, j}), cat.index_of({a, b}));
            return (chords_ok == tube_ok && chords_ok == mods_ok) ? 0LL : 1LL;
        });
        detail::add_count(out, "equivalence",
                          "module pairs, tube pairs and chord pairs agree on all ordered pairs",
                          "pair-equivalence", n, -1, 0, mpz_ll(mismatches));
    }
    return out;
}

// --- braid suite -----------------------------------------------------------------

inline std::vector<CheckResult> suite_braid(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int ncap = opt.n_max > 0 ? opt.n_max : bounds.braid;
    int tcap = std::min(opt.n_max > 0 ? opt.n_max : bounds.braid_triples, bounds.braid_triples);

    // the 3-chain example: delta_3 increments labels
    {
        RootedTree t(3, {3, 0, 2});
        bool ok = act_word_tree(delta_word(3), t) == RootedTree(3, {3, 1, 0});
        detail::add_flag(out, "braid", "delta_3 shifts the labels of the 3-chain", "delta-shift",
                         3, -1, ok);
    }

    for (int n = 2; n <= ncap; ++n) {
        auto forests = enumerate_forests(n);
        auto trees = enumerate_trees(n);
        bool commute = true, braid_rel = true, conj = true, shift = true, garside_id = true;
        std::string commute_witness, braid_witness;
        for (auto& f : forests) {
            for (int i = 1; i < n && commute; ++i)
                for (int j = i + 2; j < n && commute; ++j) {
                    commute = sigma_forest(sigma_forest(f, i), j) ==
                              sigma_forest(sigma_forest(f, j), i);
                    if (!commute) commute_witness = detail::forest_witness(f, i, j);
                }
            for (int i = 1; i + 1 < n && braid_rel; ++i) {
                braid_rel = sigma_forest(sigma_forest(sigma_forest(f, i), i + 1), i) ==
                            sigma_forest(sigma_forest(sigma_forest(f, i + 1), i), i + 1);
                if (!braid_rel) braid_witness = detail::forest_witness(f, i);
            }
        }
        BraidWord dw = delta_word(n);
        BraidWord g2 = repeat_word(garside_word(n), 2);
        for (auto& t : trees) {
            for (int i = 1; i + 1 < n && conj; ++i)
                conj = act_word_tree(dw, sigma_tree(t, i)) ==
                       sigma_tree(act_word_tree(dw, t), i + 1);
            if (shift) {
                RootedTree plus = act_word_tree(dw, t);
                RootedTree expect;
                expect.n = n;
                expect.parent.assign(static_cast<size_t>(n), 0);
                for (int v = 1; v <= n; ++v) {
                    int nv = mod(v, n) + 1;
                    int p = t.parent_of(v);
                    expect.parent[static_cast<size_t>(nv - 1)] = p == 0 ? 0 : mod(p, n) + 1;
                }
                shift = plus == expect;
            }
            if (garside_id) garside_id = act_word_tree(g2, t) == t;
        }
        detail::add_flag(out, "braid", "distant generators commute on forests", "commutation", n,
                         -1, commute, commute_witness);
        detail::add_flag(out, "braid", "the braid relation holds on forests", "braid-relation", n,
                         -1, braid_rel, braid_witness);
        detail::add_flag(out, "braid", "delta conjugates sigma_i to sigma_{i+1}", "delta-conjugation",
                         n, -1, conj);
        detail::add_flag(out, "braid", "delta shifts tree labels by one", "delta-shift", n, -1,
                         shift);
        detail::add_flag(out, "braid", "the squared Garside element fixes every tree",
                         "garside-square", n, -1, garside_id);

        // bijectivity of each generator on augmented trees
        auto augs = enumerate_augmented_trees(n);
        bool bijective = true;
        for (int i = 1; i < n && bijective; ++i) {
            std::set<AugmentedTree> image;
            for (auto& a : augs) image.insert(sigma_augmented(a, i));
            bijective = image.size() == augs.size();
        }
        detail::add_flag(out, "braid", "each generator permutes the augmented trees", "bijectivity",
                         n, -1, bijective);

        // delta^n lowers epsilon by one; Delta^(2n) is the identity
        BraidWord dn = repeat_word(dw, n);
        BraidWord g2n = repeat_word(garside_word(n), 2 * n);
        bool eps_law = true, id_law = true;
        for (auto& a : augs) {
            AugmentedTree b = act_word_augmented(dn, a);
            eps_law = eps_law && b.tree == a.tree && b.epsilon == mod(a.epsilon - 1, n);
            id_law = id_law && act_word_augmented(g2n, a) == a;
        }
        detail::add_flag(out, "braid", "delta^n lowers the augmentation by one", "delta-power", n,
                         -1, eps_law);
        detail::add_flag(out, "braid", "Delta^(2n) fixes every augmented tree", "garside-power", n,
                         -1, id_law);
    }

    for (int n = 2; n <= tcap; ++n) {
        auto augs = enumerate_augmented_trees(n);
        bool commute = true, braid_rel = true;
        for (auto& a : augs) {
            for (int i = 1; i < n && commute; ++i)
                for (int j = i + 2; j < n && commute; ++j)
                    commute = sigma_augmented(sigma_augmented(a, i), j) ==
                              sigma_augmented(sigma_augmented(a, j), i);
            for (int i = 1; i + 1 < n && braid_rel; ++i)
                braid_rel =
                    sigma_augmented(sigma_augmented(sigma_augmented(a, i), i + 1), i) ==
                    sigma_augmented(sigma_augmented(sigma_augmented(a, i + 1), i), i + 1);
        }
        detail::add_flag(out, "braid", "distant generators commute on augmented trees",
                         "commutation", n, -1, commute);
        detail::add_flag(out, "braid", "the braid relation holds on augmented trees",
                         "braid-relation", n, -1, braid_rel);

        // the same relations for the deletion/insertion action on pointed diagrams
        bool p_commute = true, p_braid = true;
        enumerate_sequences_visit(n, n, ChordMode::WithLoops, [&](const ChordSequence& d) {
            for (int i = 1; i < n && p_commute; ++i)
                for (int j = i + 2; j < n && p_commute; ++j)
                    p_commute = braid_on_pointed(braid_on_pointed(d, i), j) ==
                                braid_on_pointed(braid_on_pointed(d, j), i);
            for (int i = 1; i + 1 < n && p_braid; ++i)
                p_braid =
                    braid_on_pointed(braid_on_pointed(braid_on_pointed(d, i), i + 1), i) ==
                    braid_on_pointed(braid_on_pointed(braid_on_pointed(d, i + 1), i), i + 1);
            return p_commute && p_braid;
        });
        detail::add_flag(out, "braid", "distant generators commute on pointed diagrams",
                         "commutation", n, -1, p_commute);
        detail::add_flag(out, "braid", "the braid relation holds on pointed diagrams",
                         "braid-relation", n, -1, p_braid);

        // equivariance of the deletion/insertion action with the tree action
        auto cat = HereditaryCategory::type_c(n);
        bool equivariant = true;
        for (auto& a : augs) {
            ChordSequence d = diagram_from_tree(a);
            std::vector<int> seq = cn_sequence_of_chords(cat, d);
            for (int i = 1; i < n && equivariant; ++i) {
                AugmentedTree a2 = sigma_augmented(a, i);
                ChordSequence d2 = braid_on_pointed(d, i);
                equivariant = hasse_tree(d2) == a2 &&
                              chords_of_cn_sequence(cat, braid_on_cn_sequence(cat, seq, i)) == d2;
            }
            if (!equivariant) break;
        }
        detail::add_flag(out, "braid", "sequence braiding matches the tree action through the bijection",
                         "equivariance", n, -1, equivariant);
    }
    return out;
}

// --- bijections suite --------------------------------------------------------------

inline std::vector<CheckResult> suite_bijections(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int ncap = std::min(opt.n_max > 0 ? opt.n_max : bounds.bijections, bounds.bijections);

    for (int n = 1; n <= ncap; ++n) {
        bool round = true;
        std::set<ChordSequence> images;
        for (auto& t : enumerate_augmented_trees(n)) {
            ChordSequence d = diagram_from_tree(t);
            images.insert(d);
            if (!(hasse_tree(d) == t)) { round = false; break; }
        }
        long long expect = 1;
        for (int e = 0; e < n; ++e) expect *= n;
        detail::add_flag(out, "bijections", "trees and pointed diagrams are in bijection",
                         "tree-diagram", n, -1,
                         round && static_cast<long long>(images.size()) == expect);
    }

    for (int n = 2; n <= ncap; ++n) {
        bool round = true;
        std::set<AugmentedForest> images;
        enumerate_tube_sequences_visit(n, n - 1, false, [&](const std::vector<TubeObject>& s) {
            AugmentedForest f = forest_of_complete_tube_sequence(s);
            images.insert(f);
            if (!(tube_sequence_of_forest(f) == s)) { round = false; return false; }
            return true;
        });
        long long expect = 1;
        for (int e = 0; e + 1 < n; ++e) expect *= n;
        detail::add_flag(out, "bijections", "complete tube sequences match augmented forests",
                         "tube-forest", n, -1,
                         round && static_cast<long long>(images.size()) == expect);
    }

    // golden chains from the worked examples
    {
        auto cn = HereditaryCategory::type_c(3);
        std::vector<SignedTubeObject> a{{make_brick(1, 2, 4), true},
                                        {make_brick(1, 3, 4), false},
                                        {make_brick(0, 1, 4), false}};
        bool ok1 = theta(a) == std::vector<TubeObject>{make_brick(2, 3, 4), make_brick(0, 3, 4),
                                                       make_brick(0, 1, 4)} &&
                   full_chain(cn, a) == std::vector<SignedMod>{{cn.index_of({1, 2}), true},
                                                               {cn.index_of({1, 1}), false},
                                                               {cn.index_of({0, 1}), false}};
        detail::add_flag(out, "bijections", "worked chain (V12[1],V13,V01)", "golden-chain", 4, 3,
                         ok1);
        std::vector<SignedTubeObject> b{{make_brick(3, 0, 4), false},
                                        {make_brick(1, 2, 4), true},
                                        {make_brick(1, 3, 4), false}};
        bool ok2 = full_chain(cn, b) == std::vector<SignedMod>{{cn.index_of({0, 0}), true},
                                                               {cn.index_of({1, 2}), true},
                                                               {cn.index_of({1, 0}), false}};
        detail::add_flag(out, "bijections", "worked chain (V30,V12[1],V13)", "golden-chain", 4, 3,
                         ok2);
    }

    int rank_cap = std::min(opt.n_max > 0 ? opt.n_max : bounds.chain_rank, bounds.chain_rank);
    for (int rank = 2; rank <= rank_cap; ++rank) {
        auto cn = HereditaryCategory::type_c(rank - 1);
        bool ok = true;
        for (int k = 1; k < rank && ok; ++k) {
            std::set<std::vector<SignedMod>> images;
            long long total = 0;
            enumerate_tube_sequences_visit(rank, k, false, [&](const std::vector<TubeObject>& seq) {
                std::vector<int> proj_pos;
                for (int j = 1; j <= k; ++j)
                    if (is_rel_projective_oracle(seq, j)) proj_pos.push_back(j);
                for (int msk = 0; msk < (1 << proj_pos.size()); ++msk) {
                    std::vector<SignedTubeObject> s;
                    for (auto& v : seq) s.push_back(SignedTubeObject{v, false});
                    for (size_t bpos = 0; bpos < proj_pos.size(); ++bpos)
                        if (msk & (1 << bpos))
                            s[static_cast<size_t>(proj_pos[bpos] - 1)].shifted = true;
                    auto tuple = theta(s);
                    if (!(theta_inverse(tuple) == s)) { ok = false; return false; }
                    auto image = chi(cn, beta(cn, tuple));
                    if (!(full_chain_inverse(cn, image) == s)) { ok = false; return false; }
                    images.insert(image);
                    ++total;
                }
                return true;
            });
            ok = ok && static_cast<long long>(images.size()) == total &&
                 mpz_ll(total) == count_formula(CountKind::SignedCn, rank - 1, k);
        }
        detail::add_flag(out, "bijections",
                         "theta/beta/chi invert and the full chain is a bijection per length",
                         "signed-chain", rank, -1, ok);
    }
    return out;
}

// --- signed counts -----------------------------------------------------------------

inline std::vector<CheckResult> suite_signed(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int ccap = std::min(opt.n_max > 0 ? opt.n_max : bounds.cn, bounds.cn);
    for (int n = 1; n <= ccap; ++n) {
        auto cat = HereditaryCategory::type_c(n);
        for (int k = 0; k <= n; ++k) {
            long long got = 0;
            signed_sequences_visit(cat, k, [&](const std::vector<SignedMod>&) {
                ++got;
                return true;
            });
            detail::add_count(out, "signed", "signed exceptional sequences of modules",
                              "signed-cn", n, k, count_formula(CountKind::SignedCn, n, k),
                              mpz_ll(got));
        }
    }
    int rcap = std::min(opt.n_max > 0 ? opt.n_max : bounds.chain_rank, bounds.chain_rank);
    for (int rank = 2; rank <= rcap; ++rank) {
        for (int k = 1; k < rank; ++k) {
            long long got = 0;
            enumerate_tube_sequences_visit(rank, k, false, [&](const std::vector<TubeObject>& seq) {
                int proj = 0;
                for (int j = 1; j <= k; ++j)
                    if (is_rel_projective_oracle(seq, j)) ++proj;
                got += 1LL << proj;
                return true;
            });
            detail::add_count(out, "signed", "signed exceptional sequences in the tube",
                              "signed-cn", rank, k, count_formula(CountKind::SignedCn, rank - 1, k),
                              mpz_ll(got));
        }
    }
    return out;
}

// --- probability suites ---------------------------------------------------------------

inline std::vector<CheckResult> suite_theorem_e(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int ncap = std::min(opt.n_max > 0 ? opt.n_max : bounds.cn, bounds.cn);
    for (int n = 1; n <= ncap; ++n) {
        auto cat = HereditaryCategory::type_c(n);
        for (int k = 1; k <= n; ++k) {
            RelProjDistribution d = relproj_distribution_cn(cat, k);
            bool marg = true;
            for (int j = 1; j <= k; ++j)
                marg = marg && d.proj_marginals[static_cast<size_t>(j - 1)] * n ==
                                   d.total * (k + 1 - j);
            detail::add_flag(out, "theorem-e",
                             "the j-th marginal equals (k+1-j)/n exactly", "marginals", n, k, marg);
            detail::add_flag(out, "theorem-e", "the joint distribution is the product of marginals",
                             "independence", n, k, joint_is_product_of_marginals(d));
        }
    }
    return out;
}

inline std::vector<CheckResult> suite_theorem_f(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int ncap = std::min(opt.n_max > 0 ? opt.n_max : bounds.tube, bounds.tube);
    for (int n = 2; n <= ncap; ++n) {
        bool agree = true, never_both = true;
        enumerate_tube_sequences_visit(n, n - 1, false, [&](const std::vector<TubeObject>& seq) {
            auto proj = rel_projective_combinatorial(seq);
            auto inj = rel_injective_combinatorial(seq);
            for (int j = 1; j < n; ++j) {
                bool po = is_rel_projective_oracle(seq, j);
                bool io = is_rel_injective_oracle(seq, j);
                if (po != proj[static_cast<size_t>(j - 1)] ||
                    io != inj[static_cast<size_t>(j - 1)])
                    agree = false;
                if (po && io) never_both = false;
            }
            return agree;
        });
        detail::add_flag(out, "theorem-f",
                         "descending vertices are exactly the relatively projective positions",
                         "descending-criterion", n, n - 1, agree);
        detail::add_flag(out, "theorem-f", "no position is both relatively projective and injective",
                         "never-both", n, n - 1, never_both);

        RelProjDistribution d = relproj_distribution_tube(n, n - 1);
        bool marg = true, inj_marg = true;
        for (int j = 1; j < n; ++j) {
            marg = marg && d.proj_marginals[static_cast<size_t>(j - 1)] * n ==
                               d.total * (n - j - 1);
            inj_marg = inj_marg && d.inj_marginals[static_cast<size_t>(j - 1)] * n ==
                                       d.total * (j - 1);
        }
        detail::add_flag(out, "theorem-f", "the j-th marginal equals (n-j-1)/n exactly",
                         "marginals", n, n - 1, marg);
        detail::add_flag(out, "theorem-f", "the injective marginal equals (j-1)/n exactly",
                         "inj-marginals", n, n - 1, inj_marg);
        detail::add_flag(out, "theorem-f", "the joint distribution is the product of marginals",
                         "independence", n, n - 1, joint_is_product_of_marginals(d));
    }
    return out;
}

// --- subgraph model ----------------------------------------------------------------

inline std::vector<CheckResult> suite_subgraphs(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int ncap = opt.n_max > 0 ? opt.n_max : bounds.chords;
    for (int n = 1; n <= ncap; ++n) {
        bool formula = true, recursions = true;
        for (int parts = 1; parts <= n; ++parts)
            for (auto& sig : signatures_with_parts(n, parts)) {
                formula = formula && mpz_ll(enumerate_subgraphs(n, sig)) == subgraph_count(n, sig);
                recursions = recursions && check_subgraph_recursions(n, sig);
            }
        detail::add_flag(out, "subgraphs", "subgraph counts match the factorial formula",
                         "subgraph-count", n, -1, formula);
        detail::add_flag(out, "subgraphs", "both counting identities hold", "subgraph-recursions",
                         n, -1, recursions);
    }
    int ccap = std::min(opt.n_max > 0 ? opt.n_max : bounds.cn, bounds.cn);
    for (int n = 1; n <= ccap; ++n) {
        auto cat = HereditaryCategory::type_c(n);
        bool fibers = true, base = true;
        for (int len = 1; len <= n && fibers; ++len) {
            FiberCounts fc = fiber_counts(cat, len);
            for (auto& [sig, count] : fc.all) {
                mpz_class expect = mpz_pow(n, len) * subgraph_count(n, sig);
                auto it = fc.first_rel_proj.find(sig);
                long long proj = it == fc.first_rel_proj.end() ? 0 : it->second;
                if (mpz_ll(count) != expect || mpz_ll(proj) * n != expect * len) fibers = false;
                if (len == 1 && (count != n || proj != 1)) base = false;
            }
        }
        detail::add_flag(out, "subgraphs", "sequence fibers carry n^len times the subgraph count",
                         "fiber-counts", n, -1, fibers);
        detail::add_flag(out, "subgraphs", "singleton fibers have n elements, one projective",
                         "fiber-base", n, 1, base);
    }
    return out;
}

// --- generating polynomial ------------------------------------------------------------

inline std::vector<CheckResult> suite_genfun(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int ncap = std::min(opt.n_max > 0 ? opt.n_max : bounds.cn, bounds.cn);
    for (int n = 1; n <= ncap; ++n) {
        auto cat = HereditaryCategory::type_c(n);
        for (int k = 1; k <= n; ++k) {
            RelProjPolynomial e = generating_polynomial_enumerated(cat, k);
            bool same = e == generating_polynomial_closed(n, k);
            detail::add_flag(out, "genfun", "enumerated polynomial equals C(n,k) prod (n-i+iz_i)",
                             "generating-function", n, k, same);
            detail::add_count(out, "genfun", "specialization at z=1 counts exceptional sequences",
                              "exc-cn", n, k, count_formula(CountKind::ExcCn, n, k),
                              polynomial_specialize(e, 1));
            detail::add_count(out, "genfun", "specialization at z=2 counts signed sequences",
                              "signed-cn", n, k, count_formula(CountKind::SignedCn, n, k),
                              polynomial_specialize(e, 2));
        }
    }
    return out;
}

// --- exceptional sets -------------------------------------------------------------------

inline std::vector<CheckResult> suite_excsets(const VerifyOptions& opt) {
    VerifyBounds bounds;
    std::vector<CheckResult> out;
    int acap = std::min(opt.n_max > 0 ? opt.n_max : bounds.tube, bounds.tube);
    int ccap = std::min(opt.n_max > 0 ? opt.n_max : bounds.cn, bounds.cn);
    for (int n = 1; n <= acap; ++n)
        detail::add_count(out, "excsets", "exceptional sets of linear type", "excsets-an", n, -1,
                          count_formula(CountKind::ExcSetsAn, n),
                          mpz_ll(count_exceptional_sets(SetFamily::A, n)));
    for (int n = 2; n <= acap; ++n)
        detail::add_count(out, "excsets", "exceptional sets in the tube", "excsets-wn", n, -1,
                          count_formula(CountKind::ExcSetsWn, n),
                          mpz_ll(count_exceptional_sets(SetFamily::W, n)));
    for (int n = 1; n <= ccap; ++n)
        detail::add_count(out, "excsets", "exceptional sets of modules", "excsets-cn", n, -1,
                          count_formula(CountKind::ExcSetsCn, n),
                          mpz_ll(count_exceptional_sets(SetFamily::C, n)));
    return out;
}

// --- dispatch ---------------------------------------------------------------------------

inline std::vector<std::string> verify_suite_names() {
    return {"counts", "equivalence", "braid",     "bijections", "signed",
            "theorem-e", "theorem-f", "subgraphs", "genfun",     "excsets"};
}

inline std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "counts") return suite_counts(opt);
    if (name == "equivalence") return suite_equivalence(opt);
    if (name == "braid") return suite_braid(opt);
    if (name == "bijections") return suite_bijections(opt);
    if (name == "signed") return suite_signed(opt);
    if (name == "theorem-e") return suite_theorem_e(opt);
    if (name == "theorem-f") return suite_theorem_f(opt);
    if (name == "subgraphs") return suite_subgraphs(opt);
    if (name == "genfun") return suite_genfun(opt);
    if (name == "excsets") return suite_excsets(opt);
    if (name == "all") {
        std::vector<CheckResult> out;
        for (auto& suite : verify_suite_names()) {
            auto part = run_suite(suite, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace excseq
