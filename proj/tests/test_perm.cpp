#include <doctest.h>

#include <algorithm>
#include <set>

#include "schubert/perm.hpp"

using namespace schubert;

namespace {

// Brute-force inversion count, independent of Perm::length.
int count_inversions(const std::vector<int>& v) {
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return inv;
}

// Bruhat order as the transitive closure of the cover relation.
std::set<std::pair<Perm, Perm>> bruhat_closure(int n) {
    std::set<std::pair<Perm, Perm>> leq;
    const std::vector<Perm> perms = all_perms(n);
    for (const Perm& u : perms) leq.insert({u, u});
    // Repeatedly extend by covers until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Perm& u : perms) {
            for (const auto& [t, v] : covers_up(u)) {
                for (const Perm& w : perms) {
                    if (leq.count({v, w}) && !leq.count({u, w})) {
                        leq.insert({u, w});
                        changed = true;
                    }
                }
            }
        }
    }
    return leq;
}

}  // namespace

TEST_CASE("make_permutation validates its input") {
    CHECK(Perm({1, 2, 3}) == Perm::identity(3));
    CHECK_NOTHROW(Perm({2, 5, 1, 4, 3}));
    CHECK_THROWS_AS(Perm({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Perm({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm({2, 3}), std::invalid_argument);
}

TEST_CASE("length counts inversions") {
    CHECK(Perm::identity(3).length() == 0);
    CHECK(Perm::longest(5).length() == 10);
    CHECK(Perm({2, 5, 1, 4, 3}).length() == 5);
    for (const Perm& w : all_perms(5))
        CHECK(w.length() == count_inversions(w.one_line()));
}

TEST_CASE("longest_element") {
    CHECK(Perm::longest(1) == Perm({1}));
    CHECK(Perm::longest(3) == Perm({3, 2, 1}));
    CHECK(Perm::longest(5) == Perm({5, 4, 3, 2, 1}));
    CHECK_THROWS_AS(Perm::longest(0), std::invalid_argument);
}

TEST_CASE("group operations") {
    CHECK(Perm({3, 2, 1}).swapped(1, 2) == Perm({2, 3, 1}));
    CHECK(Perm({1, 3, 2}).compose(Perm::longest(3)) == Perm({2, 3, 1}));
    CHECK(Perm::identity(4).inverse() == Perm::identity(4));
    CHECK_THROWS_AS(Perm::identity(3).compose(Perm::identity(4)), std::invalid_argument);
    for (const Perm& w : all_perms(4)) {
        CHECK(w.compose(w.inverse()) == Perm::identity(4));
        CHECK(w.inverse().compose(w) == Perm::identity(4));
    }
}

TEST_CASE("bruhat_leq") {
    CHECK(bruhat_leq(Perm::identity(4), Perm::longest(4)));
    CHECK(bruhat_leq(Perm({2, 1, 4, 3}), Perm({2, 3, 4, 1})));
    CHECK(bruhat_leq(Perm({2, 3, 4, 1}), Perm({3, 4, 2, 1})));
    CHECK(!bruhat_leq(Perm({2, 1, 3}), Perm({1, 3, 2})));
}

TEST_CASE("bruhat_leq agrees with cover closure up to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        const auto leq = bruhat_closure(n);
        for (const Perm& u : all_perms(n))
            for (const Perm& w : all_perms(n))
                CHECK(bruhat_leq(u, w) == (leq.count({u, w}) > 0));
    }
}

TEST_CASE("length changes across transpositions are odd, covers are +1") {
    for (const Perm& u : all_perms(4)) {
        for (int i = 1; i <= 4; ++i) {
            for (int j = i + 1; j <= 4; ++j) {
                const Perm w = u.swapped(i, j);
                const int diff = w.length() - u.length();
                CHECK(diff % 2 != 0);
                CHECK(is_cover(u, w) == (diff == 1));
            }
        }
    }
}

TEST_CASE("k_covers_up") {
    CHECK(k_covers_up(Perm::longest(4), 2).empty());
    {
        const auto covers = k_covers_up(Perm({3, 1, 6, 5, 2, 4}), 2);
        bool found = false;
        for (const auto& [t, w] : covers)
            if (t == Transposition(2, 5) && w == Perm({3, 2, 6, 5, 1, 4})) found = true;
        CHECK(found);
    }
    {
        const auto covers = k_covers_up(Perm({3, 5, 6, 4, 2, 1}), 2);
        bool found = false;
        for (const auto& [t, w] : covers)
            if (t == Transposition(1, 4) && w == Perm({4, 5, 6, 3, 2, 1})) found = true;
        CHECK(found);
    }
    CHECK_THROWS_AS(k_covers_up(Perm::identity(3), 3), std::invalid_argument);
}

TEST_CASE("k_covers_up at k = n-1 collects every cover through position n") {
    for (const Perm& u : all_perms(4)) {
        const auto all = covers_up(u);
        std::vector<std::pair<Transposition, Perm>> expected;
        for (const auto& [t, w] : all)
            if (t.j == 4) expected.push_back({t, w});
        CHECK(k_covers_up(u, 3) == expected);
        for (int k = 1; k <= 3; ++k)
            for (const auto& [t, w] : k_covers_up(u, k)) CHECK(is_cover(u, w));
    }
}

TEST_CASE("decreasing tails") {
    for (int k = 0; k <= 4; ++k) CHECK(has_decreasing_tail(Perm::longest(5), k));
    CHECK(has_decreasing_tail(Perm({3, 1, 6, 5, 4, 2}), 3));
    CHECK(!has_decreasing_tail(Perm({2, 5, 1, 4, 3}), 1));
}

TEST_CASE("antidiagonal heads") {
    for (const Perm& w : all_perms(4)) CHECK(has_antidiagonal_head(w, 1));
    for (int k = 1; k <= 4; ++k) CHECK(has_antidiagonal_head(Perm::longest(4), k));
    CHECK(has_antidiagonal_head(Perm({4, 1, 3, 2}), 2));
    CHECK(!has_antidiagonal_head(Perm({3, 1, 4, 2}), 2));
}

TEST_CASE("decreasing tails persist under k'-covers downward") {
    // u <._{k'} w with k' <= k and w of decreasing tail past k forces the
    // same tail on u.
    for (const Perm& w : all_perms(5)) {
        for (int k = 0; k <= 4; ++k) {
            if (!has_decreasing_tail(w, k)) continue;
            for (int kp = 1; kp <= k; ++kp) {
                for (int i = 1; i <= kp; ++i) {
                    for (int j = kp + 1; j <= 5; ++j) {
                        const Perm u = w.swapped(i, j);
                        if (u.length() + 1 == w.length() && is_cover(u, w))
                            CHECK(has_decreasing_tail(u, k));
                    }
                }
            }
        }
    }
}

TEST_CASE("textual permutation formats") {
    CHECK(parse_perm("2,5,1,4,3") == Perm({2, 5, 1, 4, 3}));
    CHECK(parse_perm("25143") == Perm({2, 5, 1, 4, 3}));
    CHECK(format_perm(Perm({2, 5, 1, 4, 3})) == "2,5,1,4,3");
    CHECK_THROWS_AS(parse_perm(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("1,a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm("102"), std::invalid_argument);
}
