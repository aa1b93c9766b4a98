#include <doctest.h>

#include "excseq/counting.hpp"

using namespace excseq;

TEST_CASE("closed-form counters") {
    CHECK(count_formula(CountKind::ExcCn, 3, 3) == 27);
    CHECK(count_formula(CountKind::SignedCn, 3, 3) == 120);
    CHECK(count_formula(CountKind::ClustersCn, 3, 3) == 20);
    CHECK(count_formula(CountKind::ExcAn, 2, 2) == 3);
    CHECK(count_formula(CountKind::ChordUnoriented, 4, 3) == 16);
    CHECK(count_formula(CountKind::ChordOriented, 4, 3) == 64);
    CHECK(count_formula(CountKind::Pointed, 3) == 27);
    CHECK(count_formula(CountKind::ExcSetsAn, 2) == 3);
    CHECK(count_formula(CountKind::ExcSetsWn, 3) == 9);
    CHECK(count_formula(CountKind::ExcSetsCn, 3) == 21);
    CHECK_THROWS_AS(count_formula(CountKind::ExcCn, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(count_formula(CountKind::ChordUnoriented, 3, 0), std::invalid_argument);
    // kind name round trip
    CHECK(parse_count_kind("signed-cn") == CountKind::SignedCn);
    CHECK_FALSE(parse_count_kind("nope").has_value());
}

TEST_CASE("exceptional set deduplication matches the closed forms") {
    CHECK(count_exceptional_sets(SetFamily::W, 3) == 9);
    CHECK(count_exceptional_sets(SetFamily::C, 2) == 4);
    CHECK(count_exceptional_sets(SetFamily::A, 1) == 1);
    for (int n = 1; n <= 4; ++n)
        CHECK(mpz_ll(count_exceptional_sets(SetFamily::A, n)) ==
              count_formula(CountKind::ExcSetsAn, n));
    for (int n = 2; n <= 4; ++n)
        CHECK(mpz_ll(count_exceptional_sets(SetFamily::W, n)) ==
              count_formula(CountKind::ExcSetsWn, n));
    for (int n = 1; n <= 3; ++n)
        CHECK(mpz_ll(count_exceptional_sets(SetFamily::C, n)) ==
              count_formula(CountKind::ExcSetsCn, n));
}

TEST_CASE("subgraph counts: formula vs enumeration") {
    SubgraphSignature s41{1, {0, 1}};
    CHECK(subgraph_count(4, s41) == 2);
    CHECK(enumerate_subgraphs(4, s41) == 2);

    SubgraphSignature s52{2, {0, 1}};
    CHECK(subgraph_count(5, s52) == 2);
    CHECK(enumerate_subgraphs(5, s52) == 2);

    // all parts equal: a single arrangement
    SubgraphSignature eq{0, {1, 1, 1}};
    CHECK(subgraph_count(6, eq) == 1);
    CHECK(enumerate_subgraphs(6, eq) == 1);

    for (int n = 1; n <= 7; ++n)
        for (int parts = 1; parts <= n; ++parts)
            for (auto& sig : signatures_with_parts(n, parts))
                CHECK(mpz_ll(enumerate_subgraphs(n, sig)) == subgraph_count(n, sig));
}

TEST_CASE("subgraph recursions hold for every signature") {
    for (int n = 1; n <= 6; ++n)
        for (int parts = 1; parts <= n; ++parts)
            for (auto& sig : signatures_with_parts(n, parts))
                CHECK(check_subgraph_recursions(n, sig));
}

TEST_CASE("fiber counts match the product formulas") {
    for (int n = 2; n <= 3; ++n) {
        auto cat = HereditaryCategory::type_c(n);
        for (int len = 1; len <= n; ++len) {
            FiberCounts fc = fiber_counts(cat, len);
            long long seen = 0;
            for (auto& [sig, count] : fc.all) {
                CHECK(signature_is_valid(n, sig));
                mpz_class expect = mpz_pow(n, len) * subgraph_count(n, sig);
                CHECK(mpz_class(static_cast<long>(count)) == expect);
                mpz_class expect_proj = expect * len / n;
                CHECK(mpz_class(static_cast<long>(fc.first_rel_proj.at(sig))) == expect_proj);
                seen += count;
            }
            CHECK(mpz_class(static_cast<long>(seen)) == count_formula(CountKind::ExcCn, n, len));
            if (len == 1)
                for (auto& [sig, count] : fc.all) {
                    CHECK(count == n);
                    CHECK(fc.first_rel_proj.at(sig) == 1);
                }
        }
    }
}

TEST_CASE("relative projectivity distribution for C_3 complete") {
    auto cat = HereditaryCategory::type_c(3);
    RelProjDistribution d = relproj_distribution_cn(cat, 3);
    CHECK(d.total == 27);
    CHECK(d.proj_marginals == std::vector<long long>{27, 18, 9});
    CHECK(joint_is_product_of_marginals(d));
    // marginals are (k+1-j)/n exactly, for every n <= 3 and k
    for (int n = 1; n <= 3; ++n) {
        auto c = HereditaryCategory::type_c(n);
        for (int k = 1; k <= n; ++k) {
            RelProjDistribution e = relproj_distribution_cn(c, k);
            for (int j = 1; j <= k; ++j)
                CHECK(e.proj_marginals[static_cast<size_t>(j - 1)] * n ==
                      e.total * (k + 1 - j));
            CHECK(joint_is_product_of_marginals(e));
        }
    }
}

TEST_CASE("relative projectivity distribution for the rank-4 tube") {
    RelProjDistribution d = relproj_distribution_tube(4, 3);
    CHECK(d.total == 64);
    CHECK(d.proj_marginals == std::vector<long long>{32, 16, 0});
    CHECK(d.inj_marginals == std::vector<long long>{0, 16, 32});
    CHECK(d.both_proj_and_inj == 0);
    CHECK(joint_is_product_of_marginals(d));
}

TEST_CASE("generating polynomial matches the closed form") {
    auto c2 = HereditaryCategory::type_c(2);
    RelProjPolynomial p = generating_polynomial_enumerated(c2, 1);
    CHECK(p == generating_polynomial_closed(2, 1));
    CHECK(p.at(0) == 2);
    CHECK(p.at(1) == 2);

    for (int n = 1; n <= 3; ++n) {
        auto cat = HereditaryCategory::type_c(n);
        for (int k = 1; k <= n; ++k) {
            RelProjPolynomial e = generating_polynomial_enumerated(cat, k);
            CHECK(e == generating_polynomial_closed(n, k));
            CHECK(polynomial_specialize(e, 1) == count_formula(CountKind::ExcCn, n, k));
            CHECK(polynomial_specialize(e, 2) == count_formula(CountKind::SignedCn, n, k));
        }
    }
}
