#include <doctest.h>

#include <map>
#include <set>

#include "excseq/forest.hpp"

using namespace excseq;

namespace {

// The running example: tree with root 2, edges 2-1, 2-4, 4-3, and its
// truncation, the two-component forest 1, 3->2.
RootedTree example_tree() { return RootedTree(4, {2, 0, 4, 2}); }
RootedForest example_forest() { return RootedForest(3, {0, 3, 0}); }

}  // namespace

TEST_CASE("weights") {
    RootedForest f = example_forest();
    CHECK(weight(f, 3) == 2);
    CHECK(weight(f, 2) == 1);
    CHECK(weight(f, 1) == 1);
    CHECK(weight(RootedForest(1, {0}), 1) == 1);
    CHECK_THROWS_AS(weight(f, 4), std::out_of_range);
}

TEST_CASE("reduced weights") {
    RootedForest f = example_forest();
    CHECK(reduced_weight(f, 3) == 2);
    CHECK(reduced_weight(f, 2) == 0);
    CHECK(reduced_weight(f, 1) == 1);
    CHECK(reduced_weight(RootedForest(1, {0}), 1) == 1);

    // root weights of a forest on m vertices sum to m
    for (int m = 1; m <= 5; ++m)
        for (auto& g : enumerate_forests(m)) {
            int sum = 0;
            for (int i = 1; i <= m; ++i) sum += reduced_weight(g, i);
            CHECK(sum == m);
        }
}

TEST_CASE("reduced tree weights sum to n") {
    for (int n = 1; n <= 6; ++n)
        for (auto& t : enumerate_trees(n)) {
            int sum = 0;
            for (int i = 1; i <= n; ++i) sum += reduced_tree_weight(t, i);
            CHECK(sum == n);
        }
}

TEST_CASE("vertex classes") {
    RootedForest f = example_forest();
    CHECK(vertex_class(f, 2) == VertexClass::Descending);
    CHECK(vertex_class(f, 1) == VertexClass::Root);
    CHECK(vertex_class(RootedForest(2, {2, 0}), 1) == VertexClass::Descending);
    CHECK(vertex_class(RootedForest(2, {2, 0}), 2) == VertexClass::Root);
    CHECK(vertex_class(RootedTree(2, {0, 1}), 2) == VertexClass::Ascending);
}

TEST_CASE("truncate_root on the running example") {
    AugmentedTree t{example_tree(), 3};
    AugmentedForest f = truncate_root(t);
    CHECK(f.forest == example_forest());
    CHECK(f.modulus == 4);
    CHECK(f.epsilon_map() == std::vector<int>{0, 3, 3, 1});
}

TEST_CASE("truncate_root small cases") {
    // single vertex
    AugmentedForest f = truncate_root(AugmentedTree{RootedTree(1, {0}), 0});
    CHECK(f.forest.n == 0);
    CHECK(f.epsilon_map() == std::vector<int>{0});

    // path 3 -> 2 -> 1 rooted at 3 with epsilon 0; by the recurrence the
    // epsilon map of the truncation is (2,2,0)
    AugmentedForest g = truncate_root(AugmentedTree{RootedTree(3, {2, 3, 0}), 0});
    CHECK(g.forest == RootedForest(2, {2, 0}));
    CHECK(g.epsilon_map() == std::vector<int>{2, 2, 0});
}

TEST_CASE("insert_root inverts truncate_root") {
    AugmentedForest f{example_forest(), 4, 0};
    AugmentedTree t = insert_root(f, 2);
    CHECK(t.tree == example_tree());
    CHECK(t.epsilon == 3);

    AugmentedTree single = insert_root(AugmentedForest{RootedForest(0, {}), 1, 0}, 1);
    CHECK(single.tree == RootedTree(1, {0}));
    CHECK(single.epsilon == 0);
}

TEST_CASE("insert_root: n distinct preimages, all truncating back") {
    for (int n = 2; n <= 5; ++n)
        for (auto& f : enumerate_augmented_forests(n)) {
            std::set<AugmentedTree> seen;
            for (int r = 1; r <= n; ++r) {
                AugmentedTree t = insert_root(f, r);
                CHECK(augmented_tree_is_valid(t));
                CHECK(root_of_tree(t.tree) == r);
                seen.insert(t);
                CHECK(truncate_root(t) == f);
            }
            CHECK(seen.size() == static_cast<size_t>(n));
        }
}

TEST_CASE("truncate then insert is the identity") {
    for (int n = 1; n <= 6; ++n)
        for (auto& t : enumerate_trees(n)) {
            AugmentedTree at{t, mod(t.n + 1, n)};
            AugmentedForest f = truncate_root(at);
            CHECK(insert_root(f, root_of_tree(t)) == at);
        }
}

TEST_CASE("epsilon recurrence wraps by one") {
    for (int n = 1; n <= 6; ++n)
        for (auto& f : enumerate_augmented_forests(n)) {
            auto eps = f.epsilon_map();
            CHECK(eps[static_cast<size_t>(n - 1)] == mod(eps[0] + 1, n));
        }
}

TEST_CASE("enumeration cardinalities") {
    CHECK(enumerate_trees(2).size() == 2);
    CHECK(enumerate_forests(3).size() == 16);
    CHECK(enumerate_augmented_trees(3).size() == 27);

    auto pw = [](long long b, int e) {
        long long r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<long long>(enumerate_forests(n - 1).size()) == pw(n, n - 2 < 0 ? 0 : n - 2));
        CHECK(static_cast<long long>(enumerate_trees(n).size()) == pw(n, n - 1));
        CHECK(static_cast<long long>(enumerate_augmented_forests(n).size()) == pw(n, n - 1));
    }
}

TEST_CASE("enumeration is lexicographic and deduplicated") {
    for (int m = 0; m <= 4; ++m) {
        auto all = enumerate_forests(m);
        for (size_t t = 1; t < all.size(); ++t) CHECK(all[t - 1] < all[t]);
        for (auto& f : all) CHECK(forest_is_valid(f));
    }
}
