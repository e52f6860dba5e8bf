#include <doctest.h>

#include <set>

#include "schubert/bumpless.hpp"
#include "schubert/chains.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

using namespace schubert;

namespace {

BruhatChain example_3_5_chain() {
    BruhatChain c;
    for (auto v : {std::vector<int>{2, 1, 6, 5, 3, 4}, {2, 1, 6, 5, 4, 3}, {3, 1, 6, 5, 4, 2},
                   {3, 5, 6, 4, 2, 1}, {4, 6, 5, 3, 2, 1}, {6, 5, 4, 3, 2, 1}})
        c.perms.push_back(Perm(v));
    return c;
}

BpdGrid example_3_5_bpd() { return chain_bpd_inverse(example_3_5_chain()); }

std::vector<std::pair<int, int>> example_4_9_word() {
    return {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {2, 5}, {2, 6}, {1, 6}, {5, 6}};
}

}  // namespace

TEST_CASE("bumpless counts match Schubert evaluations and the ASM numbers") {
    SchubertCache cache(4);
    auto buckets = enumerate_bpd_all(4);
    long long total = 0;
    for (const Perm& w : all_perms(4)) {
        CHECK(Int(buckets.at(w).size()) == cache.schubert(w).eval_all_ones());
        total += buckets.at(w).size();
    }
    CHECK(total == 41);  // reduced fillings; one ASM filling has a double crossing
    CHECK(count_asm_fillings(1) == 1);
    CHECK(count_asm_fillings(2) == 2);
    CHECK(count_asm_fillings(3) == 7);
    CHECK(count_asm_fillings(4) == 42);
    CHECK(count_asm_fillings(5) == 429);
}

TEST_CASE("the extreme bumpless pipedreams") {
    {
        const auto bpds = enumerate_bpd(Perm::longest(4));
        REQUIRE(bpds.size() == 1);
        CHECK(analyze_bpd(bpds[0]).weight == std::vector<int>{3, 2, 1});
    }
    {
        const auto bpds = enumerate_bpd(Perm::identity(4));
        REQUIRE(bpds.size() == 1);
        CHECK(analyze_bpd(bpds[0]).weight == std::vector<int>{0, 0, 0});
        CHECK(bpd_double_weight(bpds[0]) == Polynomial::constant(4, 1));
    }
    {
        bool found = false;
        for (const BpdGrid& d : enumerate_bpd(Perm({2, 5, 1, 4, 3})))
            if (analyze_bpd(d).weight == std::vector<int>{2, 2, 0, 1}) found = true;
        CHECK(found);
    }
}

TEST_CASE("the running six-row example") {
    const BpdGrid d = example_3_5_bpd();
    CHECK(render_bpd(d) == "...r--\n..rjr-\nr-+-jr\n|rj.r+\n||r-++\n|||r++\n");
    const BpdAnalysis a = analyze_bpd(d);
    CHECK(a.perm == Perm({2, 1, 6, 5, 3, 4}));
    CHECK(a.weight == std::vector<int>{3, 2, 0, 1, 0});
    CHECK(chain_bpd(d).perms == example_3_5_chain().perms);
    CHECK(chain_bpd(d).labels == std::vector<int>{5, 4, 3, 2, 1});
    CHECK(prefix_permutation(d, 0) == Perm::longest(6));
    CHECK(prefix_permutation(d, 1) == Perm({4, 6, 5, 3, 2, 1}));
    CHECK(prefix_permutation(d, 2) == Perm({3, 5, 6, 4, 2, 1}));
}

TEST_CASE("segment_chain reads rows explicitly") {
    const BpdGrid d = example_3_5_bpd();
    const BruhatChain seg = segment_chain(d, 2);
    BruhatChain expected;
    for (auto v : {std::vector<int>{3, 5, 6, 4, 2, 1}, {4, 5, 6, 3, 2, 1}, {4, 6, 5, 3, 2, 1}})
        expected.perms.push_back(Perm(v));
    CHECK(seg.perms == expected.perms);

    for (int n = 2; n <= 4; ++n) {
        for (const auto& [w, bpds] : enumerate_bpd_all(n)) {
            for (const BpdGrid& g : bpds) {
                for (int k = 1; k <= n - 1; ++k) {
                    const BruhatChain s = segment_chain(g, k);
                    auto unique_chain =
                        find_increasing_k_chain(prefix_permutation(g, k),
                                                prefix_permutation(g, k - 1), k);
                    REQUIRE(unique_chain.has_value());
                    CHECK(s.perms == unique_chain->perms);
                }
            }
        }
    }
}

TEST_CASE("build_row matches the worked rows") {
    using T = BpdTile;
    CHECK(build_row(Perm({3, 5, 6, 4, 2, 1}), Perm({4, 6, 5, 3, 2, 1}), 2) ==
          std::vector<T>{T::Blank, T::Blank, T::TurnES, T::TurnNW, T::TurnES, T::H});
    CHECK(build_row(Perm({3, 6, 1, 5, 4, 2}), Perm({3, 6, 5, 4, 2, 1}), 3) ==
          std::vector<T>{T::TurnES, T::H, T::Cross, T::H, T::H, T::Cross});
    // Empty chain: the east-entering pipe crosses everything right of w(k).
    CHECK(build_row(Perm({2, 3, 1}), Perm({2, 3, 1}), 2) ==
          std::vector<T>{T::Blank, T::V, T::TurnES});
    CHECK_THROWS_AS(build_row(Perm({1, 2, 3}), Perm({3, 2, 1}), 1), std::domain_error);
}

TEST_CASE("chain_bpd_inverse round trips") {
    {
        BruhatChain constant;
        for (int i = 0; i < 4; ++i) constant.perms.push_back(Perm::longest(4));
        CHECK(chain_bpd_inverse(constant) == enumerate_bpd(Perm::longest(4))[0]);
    }
    {
        BruhatChain bad;
        bad.perms = {Perm({1, 2, 3}), Perm({3, 2, 1}), Perm({3, 2, 1})};
        CHECK_THROWS_AS(chain_bpd_inverse(bad), std::domain_error);
    }
    for (int n = 2; n <= 4; ++n)
        for (const auto& [w, bpds] : enumerate_bpd_all(n))
            for (const BpdGrid& d : bpds) CHECK(chain_bpd_inverse(chain_bpd(d)) == d);
}

TEST_CASE("phi on the running example and the extremes") {
    {
        const FlaggedTableau t = phi(example_3_5_bpd());
        CHECK(ft_analyze(t).word == example_4_9_word());
        CHECK(render_ft(t) == "...11\n..12\n222\n1.\n5\n");
    }
    {
        // w0: every cell empty; id: every cell filled.
        const FlaggedTableau t = phi(enumerate_bpd(Perm::longest(4))[0]);
        CHECK(ft_analyze(t).weight == std::vector<int>{3, 2, 1});
        const FlaggedTableau s = phi(enumerate_bpd(Perm::identity(4))[0]);
        CHECK(ft_analyze(s).weight == std::vector<int>{0, 0, 0});
    }
    for (int n = 2; n <= 4; ++n)
        for (const auto& [w, bpds] : enumerate_bpd_all(n))
            for (const BpdGrid& d : bpds) CHECK(phi(d) == psi(chain_bpd(d)));
}

TEST_CASE("ft_analyze") {
    {
        const FlaggedTableau t = phi(example_3_5_bpd());
        const FtAnalysis a = ft_analyze(t);
        REQUIRE(a.perm.has_value());
        CHECK(*a.perm == Perm({2, 1, 6, 5, 3, 4}));
        CHECK(a.weight == std::vector<int>{3, 2, 0, 1, 0});
    }
    {
        FlaggedTableau empty(4);
        const FtAnalysis a = ft_analyze(empty);
        REQUIRE(a.perm.has_value());
        CHECK(*a.perm == Perm::longest(4));
        CHECK(a.weight == std::vector<int>{3, 2, 1});
    }
    {
        // (1, 3) drops the length of w0 by three: not a saturated chain.
        FlaggedTableau t(3);
        t.set(1, 1, 1);
        CHECK(!ft_analyze(t).perm.has_value());
    }
}

TEST_CASE("psi and its inverse") {
    CHECK(psi(example_3_5_chain()) == phi(example_3_5_bpd()));
    {
        BruhatChain constant;
        for (int i = 0; i < 4; ++i) constant.perms.push_back(Perm::longest(4));
        const FlaggedTableau t = psi(constant);
        CHECK(t == FlaggedTableau(4));
        CHECK(psi_inverse(t).perms == constant.perms);
    }
    {
        FlaggedTableau bad(3);
        bad.set(1, 1, 1);
        CHECK_THROWS_AS(psi_inverse(bad), std::domain_error);
    }
    for (int n = 2; n <= 4; ++n)
        for (const Perm& w : all_perms(n)) {
            std::vector<int> gamma(n - 1);
            for (int i = 0; i < n - 1; ++i) gamma[i] = n - 1 - i;
            for (const BruhatChain& c : enumerate_compatible_chains(w, gamma))
                CHECK(psi_inverse(psi(c)).perms == c.perms);
        }
}

TEST_CASE("bpd_double_weight sums to the double Schubert polynomial") {
    CHECK(bpd_double_weight(enumerate_bpd(Perm({2, 1}))[0]) ==
          Polynomial::var_x(2, 1) - Polynomial::var_y(2, 1));
    SchubertCache cache(3);
    for (const auto& [w, bpds] : enumerate_bpd_all(3)) {
        Polynomial sum(3);
        for (const BpdGrid& d : bpds) sum += bpd_double_weight(d);
        CHECK(sum == cache.double_schubert(w));
    }
}

TEST_CASE("direct enumeration equals chain-based reconstruction") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> gamma(n - 1);
        for (int i = 0; i < n - 1; ++i) gamma[i] = n - 1 - i;
        for (const auto& [w, bpds] : enumerate_bpd_all(n)) {
            std::set<BpdGrid> direct(bpds.begin(), bpds.end());
            std::set<BpdGrid> rebuilt;
            for (const BruhatChain& c : enumerate_compatible_chains(w, gamma))
                rebuilt.insert(chain_bpd_inverse(c));
            CHECK(direct == rebuilt);
        }
    }
}

TEST_CASE("analyze_bpd rejects inconsistent grids") {
    BpdGrid g = enumerate_bpd(Perm::identity(3))[0];
    g.set(1, 1, BpdTile::Cross);
    CHECK_THROWS_AS(analyze_bpd(g), std::domain_error);
}
