#include <doctest.h>

#include <map>
#include <set>

#include "excseq/braid.hpp"

using namespace excseq;

namespace {

RootedTree shift_labels(const RootedTree& t) {
    RootedTree s;
    s.n = t.n;
    s.parent.assign(static_cast<size_t>(t.n), 0);
    auto up = [&](int v) { return v == 0 ? 0 : mod(v, t.n) + 1; };
    for (int v = 1; v <= t.n; ++v)
        s.parent[static_cast<size_t>(up(v) - 1)] = up(t.parent_of(v) == 0 ? 0 : t.parent_of(v));
    return s;
}

bool related(const RootedForest& f, int i) {
    int pi = f.parent_of(i), pi1 = f.parent_of(i + 1);
    return pi == i + 1 || pi1 == i || pi == pi1;
}

}  // namespace

TEST_CASE("generator cases on small forests") {
    // two isolated roots are siblings under the virtual root: case 3
    RootedForest two(2, {0, 0});
    CHECK(sigma_forest(two, 1) == RootedForest(2, {0, 1}));

    // chain 2 -> 1 (1 child of 2): case 2 makes them siblings
    CHECK(sigma_forest(RootedForest(2, {2, 0}), 1) == RootedForest(2, {0, 0}));

    // root 3 with children 1,2: sigma_1 gives the chain 3 -> 1 -> 2
    CHECK(sigma_forest(RootedForest(3, {3, 3, 0}), 1) == RootedForest(3, {3, 1, 0}));

    // unrelated vertices swap labels and children (case 0)
    RootedForest f(4, {0, 1, 0, 3});  // 1 -> 2, 3 -> 4
    CHECK(sigma_forest(f, 2) == RootedForest(4, {0, 0, 1, 2}));
}

TEST_CASE("sigma_i has order dividing 6 with the expected case pattern") {
    for (int n = 2; n <= 5; ++n)
        for (auto& f : enumerate_forests(n))
            for (int i = 1; i < n; ++i) {
                RootedForest g1 = sigma_forest(f, i);
                RootedForest g2 = sigma_forest(g1, i);
                if (related(f, i)) {
                    CHECK(sigma_forest(g2, i) == f);  // sigma^3 = id
                } else {
                    CHECK(g2 == f);  // sigma^2 = id
                }
            }
}

TEST_CASE("special rule when the root is v_{i+1}") {
    // root 2 over child 1: swapping labels gives root 1 over child 2
    RootedTree t(2, {2, 0});
    CHECK(sigma_tree(t, 1) == RootedTree(2, {0, 1}));

    // shape is preserved, only labels i, i+1 swap
    RootedTree u(3, {3, 3, 0});
    RootedTree v = sigma_tree(u, 2);  // root is v_3 = v_{i+1}
    CHECK(v == RootedTree(3, {2, 0, 2}));
}

TEST_CASE("running example: delta_3 increments labels") {
    RootedTree t(3, {3, 0, 2});  // root 2, chain 2 -> 3 -> 1
    RootedTree s2 = sigma_tree(t, 2);
    CHECK(s2 == RootedTree(3, {3, 3, 0}));  // root 3, children 1 and 2
    RootedTree s1 = sigma_tree(s2, 1);
    CHECK(s1 == RootedTree(3, {3, 1, 0}));  // chain 3 -> 1 -> 2
    CHECK(s1 == shift_labels(t));
}

TEST_CASE("delta_n acts as the label shift on trees") {
    for (int n = 2; n <= 5; ++n) {
        BraidWord d = delta_word(n);
        for (auto& t : enumerate_trees(n)) CHECK(act_word_tree(d, t) == shift_labels(t));
    }
}

TEST_CASE("augmentation changes only at i = r-1") {
    for (int n = 2; n <= 5; ++n)
        for (auto& t : enumerate_trees(n)) {
            int r = root_of_tree(t);
            for (int i = 1; i < n; ++i) {
                AugmentedTree a{t, 1 % n};
                AugmentedTree b = sigma_augmented(a, i);
                if (i != r - 1) {
                    CHECK(b.epsilon == a.epsilon);
                } else {
                    CHECK(b.epsilon ==
                          mod(a.epsilon + reduced_tree_weight(t, r - 1), n));
                    // the underlying augmented forest is unchanged
                    CHECK(truncate_root(b) == truncate_root(a));
                }
            }
        }
}

TEST_CASE("delta_n^n lowers epsilon by one; Garside relations") {
    for (int n = 2; n <= 4; ++n) {
        BraidWord dn = repeat_word(delta_word(n), n);
        BraidWord garside2 = repeat_word(garside_word(n), 2);
        BraidWord garside2n = repeat_word(garside_word(n), 2 * n);
        for (auto& a : enumerate_augmented_trees(n)) {
            AugmentedTree b = act_word_augmented(dn, a);
            CHECK(b.tree == a.tree);
            CHECK(b.epsilon == mod(a.epsilon - 1, n));
            CHECK(act_word_augmented(garside2, a) == b);      // Delta^2 = delta_n^n
            CHECK(act_word_augmented(garside2n, a) == a);     // Delta^(2n) = id
        }
        for (auto& t : enumerate_trees(n)) CHECK(act_word_tree(garside2, t) == t);
    }
}

TEST_CASE("braid and commutation relations hold on forests, trees, augmented trees") {
    for (int n = 2; n <= 4; ++n) {
        auto forests = enumerate_forests(n);
        auto trees = enumerate_trees(n);
        auto augs = enumerate_augmented_trees(n);
        for (int i = 1; i < n; ++i) {
            for (int j = i + 2; j < n; ++j) {
                for (auto& f : forests)
                    CHECK(sigma_forest(sigma_forest(f, i), j) ==
                          sigma_forest(sigma_forest(f, j), i));
                for (auto& a : augs)
                    CHECK(sigma_augmented(sigma_augmented(a, i), j) ==
                          sigma_augmented(sigma_augmented(a, j), i));
            }
            if (i + 1 < n) {
                for (auto& f : forests)
                    CHECK(sigma_forest(sigma_forest(sigma_forest(f, i), i + 1), i) ==
                          sigma_forest(sigma_forest(sigma_forest(f, i + 1), i), i + 1));
                for (auto& t : trees)
                    CHECK(sigma_tree(sigma_tree(sigma_tree(t, i), i + 1), i) ==
                          sigma_tree(sigma_tree(sigma_tree(t, i + 1), i), i + 1));
                for (auto& a : augs)
                    CHECK(sigma_augmented(sigma_augmented(sigma_augmented(a, i), i + 1), i) ==
                          sigma_augmented(sigma_augmented(sigma_augmented(a, i + 1), i), i + 1));
            }
        }
    }
}

TEST_CASE("each generator is a bijection on each carrier") {
    for (int n = 2; n <= 5; ++n) {
        auto forests = enumerate_forests(n);
        for (int i = 1; i < n; ++i) {
            std::set<RootedForest> image;
            for (auto& f : forests) image.insert(sigma_forest(f, i));
            CHECK(image.size() == forests.size());
        }
        auto augs = enumerate_augmented_trees(n);
        for (int i = 1; i < n; ++i) {
            std::set<AugmentedTree> image;
            for (auto& a : augs) image.insert(sigma_augmented(a, i));
            CHECK(image.size() == augs.size());
        }
    }
}

TEST_CASE("reduced weights: multiset preserved away from i, i+1, sum preserved there") {
    for (int n = 2; n <= 5; ++n)
        for (auto& t : enumerate_trees(n)) {
            int r = root_of_tree(t);
            for (int i = 1; i < n; ++i) {
                if (i == r || i == r - 1) continue;
                RootedTree s = sigma_tree(t, i);
                CHECK(reduced_tree_weight(t, i) + reduced_tree_weight(t, i + 1) ==
                      reduced_tree_weight(s, i) + reduced_tree_weight(s, i + 1));
                for (int j = 1; j <= n; ++j) {
                    if (j == i || j == i + 1) continue;
                    CHECK(reduced_tree_weight(t, j) == reduced_tree_weight(s, j));
                }
            }
        }
}

TEST_CASE("projection to trees is equivariant; Delta^2 orbits on augmented trees") {
    for (int n = 2; n <= 4; ++n) {
        for (auto& a : enumerate_augmented_trees(n))
            for (int i = 1; i < n; ++i)
                CHECK(sigma_augmented(a, i).tree == sigma_tree(a.tree, i));

        // orbits of Delta^2 = delta_n^n are exactly the epsilon fibers
        BraidWord dn = repeat_word(delta_word(n), n);
        std::set<std::set<AugmentedTree>> orbits;
        for (auto& a : enumerate_augmented_trees(n)) {
            std::set<AugmentedTree> orbit;
            AugmentedTree cur = a;
            do {
                orbit.insert(cur);
                cur = act_word_augmented(dn, cur);
            } while (!(cur == a));
            orbits.insert(orbit);
        }
        CHECK(orbits.size() == enumerate_trees(n).size());
        for (auto& orbit : orbits) CHECK(orbit.size() == static_cast<size_t>(n));
    }
}

TEST_CASE("word action: identity, cancellation, parsing") {
    RootedTree t(3, {3, 0, 2});
    CHECK(act_word_tree({}, t) == t);
    for (int i = 1; i <= 2; ++i) CHECK(act_word_tree({i, -i}, t) == t);

    BraidWord w = parse_braid_word("s1 s2 s1'");
    CHECK(w == BraidWord{1, 2, -1});
    CHECK_THROWS_AS(parse_braid_word("x3"), std::invalid_argument);
    CHECK_THROWS_AS(act_word_tree({5}, t), std::out_of_range);
}
