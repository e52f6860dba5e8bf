#include "schubert/pipedreams.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <stdexcept>

namespace schubert {

PdGrid::PdGrid(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("PdGrid requires n >= 1");
    cells_.assign(n * (n + 1) / 2, PdTile::Bump);
    for (int r = 1; r <= n; ++r) cells_[index(r, n + 1 - r)] = PdTile::Elbow;
}

int PdGrid::index(int r, int c) const {
    if (r < 1 || r > n_ || c < 1 || c > n_ + 1 - r)
        throw std::invalid_argument("PdGrid cell out of range");
    // Row r starts after rows of sizes n, n-1, ..., n-r+2.
    int offset = (r - 1) * n_ - (r - 1) * (r - 2) / 2;
    return offset + c - 1;
}

PdTile PdGrid::at(int r, int c) const { return cells_[index(r, c)]; }

void PdGrid::set(int r, int c, PdTile t) {
    if (c == n_ + 1 - r) throw std::invalid_argument("cannot modify the forced elbow");
    if (t == PdTile::Elbow) throw std::invalid_argument("elbows only occur on the boundary");
    cells_[index(r, c)] = t;
}

namespace {

// Trace all pipes; fills exit[p] (north exit column of pipe p) and, per
// crossing cell, the pair of pipes through it. Returns false when some
// pair of pipes crosses twice.
bool trace(const PdGrid& g, std::vector<int>& exit_col,
           std::vector<std::pair<int, std::pair<int, int>>>* crossings) {
    const int n = g.n();
    exit_col.assign(n + 1, 0);
    // north[c]: pipe currently exiting the top edge of column c, filled row by
    // row from the bottom.
    std::vector<int> north(n + 1, 0);
    std::vector<std::vector<std::pair<int, int>>> cross_pairs(n + 1);
    for (int r = n; r >= 1; --r) {
        int west = r;  // pipe entering row r from the west edge
        std::vector<int> new_north(n + 1, 0);
        for (int c = 1; c <= n + 1 - r; ++c) {
            const int south = (c <= n - r) ? north[c] : 0;
            switch (g.at(r, c)) {
                case PdTile::Cross:
                    if (c == n + 1 - r) return false;  // forced elbow slot
                    new_north[c] = south;
                    cross_pairs[r].push_back({west, south});
                    break;
                case PdTile::Bump:
                    if (c == n + 1 - r) return false;
                    new_north[c] = west;
                    west = south;
                    break;
                case PdTile::Elbow:
                    new_north[c] = west;
                    west = 0;
                    break;
            }
        }
        north = std::move(new_north);
    }
    for (int c = 1; c <= n; ++c) exit_col[north[c]] = c;
    // Two pipes cannot cross more than once.
    std::set<std::pair<int, int>> seen;
    for (int r = 1; r <= n; ++r) {
        for (auto [a, b] : cross_pairs[r]) {
            auto key = std::minmax(a, b);
            if (!seen.insert(key).second) return false;
            if (crossings) crossings->push_back({r, {a, b}});
        }
    }
    return true;
}

}  // namespace

PdAnalysis analyze_pd(const PdGrid& g) {
    const int n = g.n();
    std::vector<int> exit_col;
    if (!trace(g, exit_col, nullptr))
        throw std::domain_error("analyze_pd: two pipes cross more than once");
    std::vector<int> one_line(exit_col.begin() + 1, exit_col.end());
    PdAnalysis out{Perm(one_line), std::vector<int>(std::max(0, n - 1), 0), {}};
    for (int r = 1; r <= n; ++r) {
        for (int c = n + 1 - r; c >= 1; --c) {
            if (g.at(r, c) == PdTile::Cross) {
                if (r <= n - 1) ++out.weight[r - 1];
                out.word.push_back(r + c - 1);
            }
        }
    }
    return out;
}

Perm reduced_word_product(const std::vector<int>& word, int n) {
    Perm w = Perm::identity(n);
    for (int i : word) {
        if (i < 1 || i > n - 1) throw std::invalid_argument("word letter out of range");
        w = w.swapped(i, i + 1);
    }
    return w;
}

namespace {

// Visits every valid pipedream of size n. Cells are processed bottom row
// to top, west to east; `north` tracks the pipe crossing the top edge of
// each processed column, so a repeated crossing prunes as soon as it forms.
void enumerate_all(int n, const std::function<void(const PdGrid&, const Perm&)>& sink) {
    PdGrid grid(n);
    std::vector<std::pair<int, int>> cells;
    for (int r = n; r >= 1; --r)
        for (int c = 1; c <= n + 1 - r; ++c) cells.push_back({r, c});

    std::vector<int> north(n + 2, 0);
    std::vector<std::vector<bool>> crossed(n + 1, std::vector<bool>(n + 1, false));

    auto rec = [&](auto&& self, std::size_t idx, int west) -> void {
        if (idx == cells.size()) {
            std::vector<int> one_line(n);
            for (int col = 1; col <= n; ++col) one_line[north[col] - 1] = col;
            sink(grid, Perm(one_line));
            return;
        }
        auto [r, c] = cells[idx];
        if (c == n + 1 - r) {  // forced elbow ends the row
            north[c] = west;
            self(self, idx + 1, r - 1);
            return;
        }
        const int south = north[c];
        auto [lo, hi] = std::minmax(west, south);
        if (!crossed[lo][hi]) {
            crossed[lo][hi] = true;
            grid.set(r, c, PdTile::Cross);
            self(self, idx + 1, west);  // north[c] keeps the south pipe
            crossed[lo][hi] = false;
        }
        grid.set(r, c, PdTile::Bump);
        north[c] = west;
        self(self, idx + 1, south);
        north[c] = south;
    };
    rec(rec, 0, n);
}

}  // namespace

std::vector<PdGrid> enumerate_pd(const Perm& w) {
    std::vector<PdGrid> out;
    enumerate_all(w.size(), [&](const PdGrid& g, const Perm& p) {
        if (p == w) out.push_back(g);
    });
    return out;
}

std::map<Perm, std::vector<PdGrid>> enumerate_pd_all(int n) {
    std::map<Perm, std::vector<PdGrid>> out;
    for (const Perm& w : all_perms(n)) out[w];
    enumerate_all(n, [&](const PdGrid& g, const Perm& p) { out[p].push_back(g); });
    return out;
}

BruhatChain chain_pd(const PdGrid& g) {
    const int n = g.n();
    analyze_pd(g);  // validates
    BruhatChain chain;
    for (int k = n; k >= 1; --k) {
        // Bottom k rows form a size-k pipedream.
        PdGrid sub(k);
        for (int r = 1; r <= k; ++r)
            for (int c = 1; c <= k - r; ++c) sub.set(r, c, g.at(r + n - k, c));
        const Perm uk = analyze_pd(sub).perm;
        std::vector<int> v;
        for (int x = n; x > k; --x) v.push_back(x);
        for (int i = 1; i <= k; ++i) v.push_back(uk(i));
        chain.perms.push_back(Perm(std::move(v)));
    }
    for (int i = 1; i <= n - 1; ++i) chain.labels.push_back(i);
    return chain;
}

PdGrid chain_pd_inverse(const BruhatChain& c) {
    if (c.perms.empty()) throw std::invalid_argument("empty chain");
    const int n = c.perms[0].size();
    if (static_cast<int>(c.perms.size()) != n)
        throw std::domain_error("chain_pd_inverse: chain must have n entries");
    if (c.perms.back() != Perm::longest(n))
        throw std::domain_error("chain_pd_inverse: chain must end at w0");
    PdGrid g(n);
    // Chain entry i (0-based) is u_{n-i}; the segment u_k -> u_{k-1} fills
    // row n-k+1: for j in [k-1], Bump iff the value j moves in the segment.
    for (int k = n; k >= 2; --k) {
        const Perm& uk = c.perms[n - k];
        const Perm& uk1 = c.perms[n - k + 1];
        auto seg = find_increasing_k_chain(uk, uk1, n - k + 1);
        if (!seg)
            throw std::domain_error("chain_pd_inverse: chain is not compatible with (1..n-1)");
        std::vector<char> swapped(n + 1, 0);
        for (std::size_t s = 0; s + 1 < seg->perms.size(); ++s) {
            const Perm& a = seg->perms[s];
            const Perm& b = seg->perms[s + 1];
            for (int p = 1; p <= n; ++p)
                if (a(p) != b(p)) swapped[a(p)] = 1;
        }
        const int r = n - k + 1;
        for (int j = 1; j <= k - 1; ++j)
            g.set(r, j, swapped[j] ? PdTile::Bump : PdTile::Cross);
    }
    return g;
}

Polynomial pd_double_weight(const PdGrid& g) {
    const int n = g.n();
    analyze_pd(g);  // validates
    Polynomial out = Polynomial::constant(n, 1);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n - r; ++c)
            if (g.at(r, c) == PdTile::Cross)
                out *= Polynomial::var_x(n, r) - Polynomial::var_y(n, c);
    return out;
}

std::string render_pd(const PdGrid& g) {
    std::string s;
    for (int r = 1; r <= g.n(); ++r) {
        for (int c = 1; c <= g.n() + 1 - r; ++c) {
            switch (g.at(r, c)) {
                case PdTile::Cross: s += '+'; break;
                case PdTile::Bump: s += '~'; break;
                case PdTile::Elbow: s += 'r'; break;
            }
        }
        s += '\n';
    }
    return s;
}

}  // namespace schubert
