#include <doctest.h>

#include <map>
#include <set>

#include "schubert/bumpless.hpp"
#include "schubert/chains.hpp"
#include "schubert/hybrid.hpp"
#include "schubert/perm.hpp"
#include "schubert/pipedreams.hpp"
#include "schubert/poly.hpp"

using namespace schubert;

namespace {

std::vector<std::string> taus_of(int n) {
    std::vector<std::string> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::string tau(n, 'P');
        for (int r = 0; r < n; ++r)
            if (mask & (1 << r)) tau[r] = 'B';
        out.push_back(tau);
    }
    return out;
}

// The all-B degeneration: a BPD turned upside down.
HpdGrid vertical_flip(const BpdGrid& d) {
    const int n = d.n();
    HpdGrid h(std::string(n, 'B'));
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            HpdTile t = HpdTile::Blank;
            switch (d.at(r, c)) {
                case BpdTile::Blank: t = HpdTile::Blank; break;
                case BpdTile::H: t = HpdTile::H; break;
                case BpdTile::V: t = HpdTile::V; break;
                case BpdTile::Cross: t = HpdTile::Cross; break;
                case BpdTile::TurnES: t = HpdTile::TurnEN; break;
                case BpdTile::TurnNW: t = HpdTile::TurnSW; break;
            }
            h.set(n + 1 - r, c, t);
        }
    }
    return h;
}

HpdGrid example_6_1_hpd() {
    const Perm w({2, 5, 1, 4, 3});
    for (const HpdGrid& h : enumerate_hpd(w, "PBBPB"))
        if (hpd_analyze(h).weight == std::vector<int>{2, 2, 0, 1}) return h;
    REQUIRE(false);
    return HpdGrid("P");
}

}  // namespace

TEST_CASE("row labels and gamma_tau") {
    CHECK(row_labels("PPPP") == std::vector<int>{1, 2, 3, 4});
    CHECK(gamma_tau("PPPP") == std::vector<int>{1, 2, 3});
    CHECK(gamma_tau("BBBB") == std::vector<int>{3, 2, 1});
    CHECK(row_labels("PBBPB") == std::vector<int>{1, 5, 4, 2, 3});
    CHECK(gamma_tau("PBBPB") == std::vector<int>{1, 4, 2, 3});
    CHECK(!valid_tau(""));
    CHECK(!valid_tau("PXB"));
    CHECK_THROWS_AS(row_labels("PQ"), std::invalid_argument);
}

TEST_CASE("distinct gamma_tau count is 2^{n-2}") {
    for (int n = 2; n <= 8; ++n) {
        std::set<std::vector<int>> gammas;
        for (const std::string& tau : taus_of(n)) gammas.insert(gamma_tau(tau));
        CHECK(gammas.size() == (1u << (n - 2)));
    }
}

TEST_CASE("hybrid weights sum to Schubert polynomials for every tau at n = 3") {
    SchubertCache cache(3);
    for (const std::string& tau : taus_of(3)) {
        for (const auto& [w, hs] : enumerate_hpd_all(tau)) {
            Polynomial sum(3);
            for (const HpdGrid& h : hs) sum += Polynomial::x_monomial(3, hpd_analyze(h).weight);
            CHECK(sum == cache.schubert(w));
        }
    }
}

TEST_CASE("all-B hybrids are upside-down bumpless pipedreams") {
    for (const auto& [w, bpds] : enumerate_bpd_all(3)) {
        std::set<HpdGrid> flipped;
        for (const BpdGrid& d : bpds) {
            const HpdGrid h = vertical_flip(d);
            const HpdAnalysis a = hpd_analyze(h);
            CHECK(a.perm == w);
            CHECK(a.weight == analyze_bpd(d).weight);
            CHECK(chain_tau(h).perms == chain_bpd(d).perms);
            flipped.insert(h);
        }
        const auto hs = enumerate_hpd(w, "BBB");
        CHECK(flipped == std::set<HpdGrid>(hs.begin(), hs.end()));
    }
}

TEST_CASE("all-P hybrids carry pipedream data") {
    // Weight multisets agree with PD(w) for every w at n = 3.
    auto pds = enumerate_pd_all(3);
    for (const auto& [w, hs] : enumerate_hpd_all("PPP")) {
        std::multiset<std::vector<int>> hw, pw;
        for (const HpdGrid& h : hs) hw.insert(hpd_analyze(h).weight);
        for (const PdGrid& p : pds.at(w)) pw.insert(analyze_pd(p).weight);
        CHECK(hw == pw);
    }
}

TEST_CASE("the printed five-row hybrid example") {
    const HpdGrid h = example_6_1_hpd();
    const HpdAnalysis a = hpd_analyze(h);
    CHECK(a.perm == Perm({2, 5, 1, 4, 3}));
    CHECK(a.weight == std::vector<int>{2, 2, 0, 1});

    // Weighty tiles sit at (1,1), (1,4), (3,2), (4,1), (4,2).
    std::set<std::pair<int, int>> cells;
    for (int r = 1; r <= 5; ++r) {
        const bool p_row = h.tau()[r - 1] == 'P';
        for (int c = 1; c <= 5; ++c) {
            const HpdTile t = h.at(r, c);
            if (p_row ? (t == HpdTile::Cross || t == HpdTile::H) : (t == HpdTile::Blank))
                cells.insert({r, c});
        }
    }
    CHECK(cells == std::set<std::pair<int, int>>{{1, 1}, {1, 4}, {3, 2}, {4, 1}, {4, 2}});

    // Prefix permutations of the bottom 5, 4, ..., 0 rows.
    std::vector<Perm> expected;
    for (auto v : {std::vector<int>{2, 5, 1, 4, 3}, {5, 3, 1, 4, 2}, {5, 3, 1, 4, 2},
                   {5, 3, 1, 4, 2}, {5, 4, 1, 3, 2}, {5, 4, 3, 2, 1}})
        expected.push_back(Perm(v));
    for (int i = 5; i >= 0; --i) CHECK(prefix_permutation_hpd(h, i) == expected[5 - i]);

    // The printed chain, its compatibility, and the round trip.
    const BruhatChain c = chain_tau(h);
    std::vector<Perm> chain_expected;
    for (auto v : {std::vector<int>{2, 5, 1, 4, 3}, {5, 3, 1, 4, 2}, {5, 3, 1, 4, 2},
                   {5, 4, 1, 3, 2}, {5, 4, 3, 2, 1}})
        chain_expected.push_back(Perm(v));
    CHECK(c.perms == chain_expected);
    CHECK(c.labels == std::vector<int>{1, 4, 2, 3});
    CHECK(is_compatible(c, {1, 4, 2, 3}));
    CHECK(chain_tau_inverse(c, "PBBPB") == h);
}

TEST_CASE("the duplicated prefix sits at the row labeled n") {
    for (const std::string& tau : taus_of(3)) {
        const std::vector<int> lab = row_labels(tau);
        int row_n = 0;
        for (int r = 1; r <= 3; ++r)
            if (lab[r - 1] == 3) row_n = r;
        const int k0 = 3 - row_n + 1;
        for (const auto& [w, hs] : enumerate_hpd_all(tau))
            for (const HpdGrid& h : hs)
                CHECK(prefix_permutation_hpd(h, k0) == prefix_permutation_hpd(h, k0 - 1));
    }
}

TEST_CASE("chain_tau bijects with compatible chains at n = 3") {
    for (const std::string& tau : taus_of(3)) {
        const std::vector<int> gamma = gamma_tau(tau);
        for (const auto& [w, hs] : enumerate_hpd_all(tau)) {
            std::set<std::vector<Perm>> images;
            for (const HpdGrid& h : hs) {
                const BruhatChain c = chain_tau(h);
                CHECK(images.insert(c.perms).second);
                CHECK(chain_tau_inverse(c, tau) == h);
                // Weight law: label k with m weighty tiles gives an
                // increasing k-chain of length n - k - m.
                const HpdAnalysis a = hpd_analyze(h);
                for (int k = 1; k <= 2; ++k) {
                    int seg = -1;
                    for (std::size_t s = 0; s < gamma.size(); ++s)
                        if (gamma[s] == k) seg = static_cast<int>(s);
                    CHECK(c.perms[seg + 1].length() - c.perms[seg].length() ==
                          3 - k - a.weight[k - 1]);
                }
            }
            std::set<std::vector<Perm>> expected;
            for (const BruhatChain& c : enumerate_compatible_chains(w, gamma))
                expected.insert(c.perms);
            CHECK(images == expected);
        }
    }
}

TEST_CASE("increasing chains under a maximal head stay in column k") {
    // At n = 4: when w starts n, n-1, ..., n-k+2, every arrow of an
    // increasing k-chain into w swaps the k-th entry, and the head survives
    // down to u. This is what forces PD-type row extensions to be unique.
    const int n = 4;
    for (int k = 1; k <= n - 1; ++k) {
        for (const Perm& u : all_perms(n)) {
            for (const BruhatChain& c : enumerate_increasing_k_chains(u, k)) {
                if (!has_antidiagonal_head(c.perms.back(), k + 1)) continue;
                CHECK(has_antidiagonal_head(u, k));
                for (std::size_t s = 0; s + 1 < c.perms.size(); ++s) {
                    int lo = 0;
                    for (int p = 1; p <= n; ++p)
                        if (c.perms[s](p) != c.perms[s + 1](p)) {
                            lo = p;
                            break;
                        }
                    CHECK(lo == k);
                }
            }
        }
    }
}

TEST_CASE("chain_tau_inverse rejects incompatible chains") {
    BruhatChain bad;
    bad.perms = {Perm({1, 2, 3}), Perm({3, 2, 1}), Perm({3, 2, 1})};
    CHECK_THROWS_AS(chain_tau_inverse(bad, "PPP"), std::domain_error);
}

TEST_CASE("hpd_analyze rejects inconsistent grids") {
    HpdGrid g("PP");
    g.set(1, 1, HpdTile::H);
    g.set(1, 2, HpdTile::TurnWN);
    g.set(2, 1, HpdTile::TurnWN);
    g.set(2, 2, HpdTile::Blank);
    // Column 1 of the north edge carries no pipe.
    CHECK_THROWS_AS(hpd_analyze(g), std::domain_error);
    g.set(1, 1, HpdTile::V);  // V is not part of the PD-row inventory
    CHECK_THROWS_AS(hpd_analyze(g), std::domain_error);
}
