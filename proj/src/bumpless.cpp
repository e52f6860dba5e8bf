#include "schubert/bumpless.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace schubert {

BpdGrid::BpdGrid(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("BpdGrid requires n >= 1");
    tiles_.assign(n * n, BpdTile::Blank);
}

BpdTile BpdGrid::at(int r, int c) const {
    if (r < 1 || r > n_ || c < 1 || c > n_) throw std::invalid_argument("BpdGrid cell out of range");
    return tiles_[(r - 1) * n_ + (c - 1)];
}

void BpdGrid::set(int r, int c, BpdTile t) {
    if (r < 1 || r > n_ || c < 1 || c > n_) throw std::invalid_argument("BpdGrid cell out of range");
    tiles_[(r - 1) * n_ + (c - 1)] = t;
}

namespace {

struct BpdTrace {
    Perm perm;
    std::vector<std::vector<int>> hpipe;  // pipe on the E/W strand of (r, c), 0 if none
    std::vector<std::vector<int>> vpipe;  // pipe on the N/S strand of (r, c)
    std::vector<std::vector<int>> south;  // south[r][c]: pipe crossing the S edge of row r
};

// Scans rows top to bottom, east to west, checking port consistency, the
// boundary conditions and the crossing rule, and recording pipe positions.
BpdTrace trace_bpd(const BpdGrid& d) {
    const int n = d.n();
    BpdTrace t;
    t.hpipe.assign(n + 1, std::vector<int>(n + 1, 0));
    t.vpipe.assign(n + 1, std::vector<int>(n + 1, 0));
    t.south.assign(n + 1, std::vector<int>(n + 1, 0));
    std::vector<int> north(n + 1, 0);
    for (int r = 1; r <= n; ++r) {
        int horiz = r;  // pipe entering row r from the east edge
        for (int c = n; c >= 1; --c) {
            const int vert = north[c];
            const BpdTile tile = d.at(r, c);
            auto expect = [&](bool e, bool nn) {
                if ((horiz != 0) != e || (vert != 0) != nn)
                    throw std::domain_error("bumpless grid: strand adjacency violated");
            };
            switch (tile) {
                case BpdTile::Blank:
                    expect(false, false);
                    break;
                case BpdTile::H:
                    expect(true, false);
                    t.hpipe[r][c] = horiz;
                    break;
                case BpdTile::V:
                    expect(false, true);
                    t.vpipe[r][c] = vert;
                    t.south[r][c] = vert;
                    break;
                case BpdTile::Cross:
                    expect(true, true);
                    if (!(horiz > vert))
                        throw std::domain_error("bumpless grid: two pipes cross twice");
                    t.hpipe[r][c] = horiz;
                    t.vpipe[r][c] = vert;
                    t.south[r][c] = vert;
                    break;
                case BpdTile::TurnES:
                    expect(true, false);
                    t.hpipe[r][c] = horiz;
                    t.vpipe[r][c] = horiz;
                    t.south[r][c] = horiz;
                    horiz = 0;
                    break;
                case BpdTile::TurnNW:
                    expect(false, true);
                    t.hpipe[r][c] = vert;
                    t.vpipe[r][c] = vert;
                    horiz = vert;
                    break;
            }
            north[c] = t.south[r][c];
        }
        if (horiz != 0) throw std::domain_error("bumpless grid: pipe escapes the west edge");
    }
    std::vector<int> one_line(n, 0);
    for (int c = 1; c <= n; ++c) {
        const int p = t.south[n][c];
        if (p == 0) throw std::domain_error("bumpless grid: south edge port unoccupied");
        one_line[p - 1] = c;
    }
    t.perm = Perm(one_line);
    return t;
}

}  // namespace

BpdAnalysis analyze_bpd(const BpdGrid& d) {
    const int n = d.n();
    BpdTrace t = trace_bpd(d);
    BpdAnalysis out{t.perm, std::vector<int>(std::max(0, n - 1), 0)};
    for (int r = 1; r <= n - 1; ++r)
        for (int c = 1; c <= n; ++c)
            if (d.at(r, c) == BpdTile::Blank) ++out.weight[r - 1];
    return out;
}

namespace {

void enumerate_all_bpd(int n, const std::function<void(const BpdGrid&, const Perm&)>& sink) {
    BpdGrid grid(n);
    std::vector<int> vert(n + 2, 0);
    auto rec = [&](auto&& self, int r, int c, int horiz) -> void {
        if (c == 0) {
            if (horiz != 0) return;  // nothing may escape through the west edge
            if (r == n) {
                std::vector<int> one_line(n);
                for (int col = 1; col <= n; ++col) one_line[vert[col] - 1] = col;
                sink(grid, Perm(one_line));
            } else {
                self(self, r + 1, n, r + 1);
            }
            return;
        }
        const int v = vert[c];
        if (horiz && v) {
            if (horiz > v) {  // crossing rule; a repeated crossing never forms
                grid.set(r, c, BpdTile::Cross);
                self(self, r, c - 1, horiz);
            }
        } else if (horiz) {
            if (r < n) {
                grid.set(r, c, BpdTile::H);
                self(self, r, c - 1, horiz);
            }
            grid.set(r, c, BpdTile::TurnES);
            vert[c] = horiz;
            self(self, r, c - 1, 0);
            vert[c] = 0;
        } else if (v) {
            grid.set(r, c, BpdTile::V);
            self(self, r, c - 1, 0);
            if (r < n) {
                grid.set(r, c, BpdTile::TurnNW);
                vert[c] = 0;
                self(self, r, c - 1, v);
                vert[c] = v;
            }
        } else if (r < n) {
            grid.set(r, c, BpdTile::Blank);
            self(self, r, c - 1, 0);
        }
    };
    rec(rec, 1, n, 1);
}

}  // namespace

long long count_asm_fillings(int n) {
    if (n < 1) throw std::invalid_argument("count_asm_fillings requires n >= 1");
    long long count = 0;
    std::vector<int> vert(n + 2, 0);  // occupancy only; pipe identities are irrelevant here
    auto rec = [&](auto&& self, int r, int c, int horiz) -> void {
        if (c == 0) {
            if (horiz != 0) return;
            if (r == n) ++count;
            else self(self, r + 1, n, 1);
            return;
        }
        const int v = vert[c];
        if (horiz && v) {
            self(self, r, c - 1, horiz);  // cross, double crossings included
        } else if (horiz) {
            if (r < n) self(self, r, c - 1, horiz);  // h
            vert[c] = 1;
            self(self, r, c - 1, 0);  // turn es
            vert[c] = 0;
        } else if (v) {
            self(self, r, c - 1, 0);  // v
            if (r < n) {
                vert[c] = 0;
                self(self, r, c - 1, 1);  // turn nw
                vert[c] = 1;
            }
        } else if (r < n) {
            self(self, r, c - 1, 0);  // blank
        }
    };
    rec(rec, 1, n, 1);
    return count;
}

std::vector<BpdGrid> enumerate_bpd(const Perm& w) {
    std::vector<BpdGrid> out;
    enumerate_all_bpd(w.size(), [&](const BpdGrid& g, const Perm& p) {
        if (p == w) out.push_back(g);
    });
    return out;
}

std::map<Perm, std::vector<BpdGrid>> enumerate_bpd_all(int n) {
    std::map<Perm, std::vector<BpdGrid>> out;
    for (const Perm& w : all_perms(n)) out[w];
    enumerate_all_bpd(n, [&](const BpdGrid& g, const Perm& p) { out[p].push_back(g); });
    return out;
}

Perm prefix_permutation(const BpdGrid& d, int k) {
    const int n = d.n();
    if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range in prefix_permutation");
    if (k == 0) return Perm::longest(n);
    BpdTrace t = trace_bpd(d);
    std::vector<int> head(k, 0);
    for (int c = 1; c <= n; ++c) {
        const int p = t.south[k][c];
        if (p != 0) {
            assert(p <= k);
            head[p - 1] = c;
        }
    }
    return complete_decreasing_tail(head, n);
}

BruhatChain chain_bpd(const BpdGrid& d) {
    const int n = d.n();
    BpdTrace t = trace_bpd(d);
    BruhatChain chain;
    for (int k = n - 1; k >= 0; --k) {
        if (k == 0) {
            chain.perms.push_back(Perm::longest(n));
            break;
        }
        std::vector<int> head(k, 0);
        for (int c = 1; c <= n; ++c)
            if (int p = t.south[k][c]; p != 0) head[p - 1] = c;
        chain.perms.push_back(complete_decreasing_tail(head, n));
    }
    for (int k = n - 1; k >= 1; --k) chain.labels.push_back(k);
    return chain;
}

BruhatChain segment_chain(const BpdGrid& d, int k) {
    const int n = d.n();
    if (k < 1 || k > n - 1) throw std::invalid_argument("k out of range in segment_chain");
    BpdTrace t = trace_bpd(d);
    // Top-free tiles of row k (empty N port): Blank, H, TurnES.
    std::vector<int> topfree_cols;
    std::vector<std::pair<int, int>> bearing;  // (column, source row of its pipe)
    for (int c = 1; c <= n; ++c) {
        const BpdTile tile = d.at(k, c);
        if (tile == BpdTile::Blank || tile == BpdTile::H || tile == BpdTile::TurnES) {
            topfree_cols.push_back(c);
            if (tile != BpdTile::Blank) bearing.push_back({c, t.hpipe[k][c]});
        }
    }
    BruhatChain seg;
    seg.perms.push_back(prefix_permutation(d, k));
    for (std::size_t i = 0; i + 1 < bearing.size(); ++i) {
        const auto [col, src] = bearing[i];
        const int rank =
            static_cast<int>(std::lower_bound(topfree_cols.begin(), topfree_cols.end(), col) -
                             topfree_cols.begin()) + 1;
        seg.perms.push_back(seg.perms.back().swapped(src, n + 1 - rank));
        seg.labels.push_back(k);
    }
    if (seg.perms.back() != prefix_permutation(d, k - 1))
        throw std::logic_error("segment_chain: row reading does not reach the prefix above");
    return seg;
}

std::vector<BpdTile> build_row(const Perm& u, const Perm& w, int k) {
    const int n = u.size();
    if (w.size() != n) throw std::invalid_argument("size mismatch in build_row");
    if (k < 1 || k > n - 1) throw std::invalid_argument("k out of range in build_row");
    if (!has_decreasing_tail(w, k - 1))
        throw std::domain_error("build_row: w must have a decreasing tail past k-1");
    auto chain = find_increasing_k_chain(u, w, k);
    if (!chain) throw std::domain_error("build_row: no increasing k-chain from u to w");

    std::vector<char> swaps_larger(n + 1, 0), swaps_smaller(n + 1, 0);
    std::vector<std::pair<int, int>> swaps;  // (smaller value, larger value)
    std::vector<int> landing;                // position the larger value lands at
    for (std::size_t s = 0; s + 1 < chain->perms.size(); ++s) {
        const Perm& a = chain->perms[s];
        const Perm& b = chain->perms[s + 1];
        int p = 0, q = 0;
        for (int pos = 1; pos <= n; ++pos)
            if (a(pos) != b(pos)) (p == 0 ? p : q) = pos;
        const int small = a(p), large = a(q);
        assert(small < large);
        swaps.push_back({small, large});
        landing.push_back(p);
        swaps_larger[small] = 1;
        swaps_smaller[large] = 1;
    }
    const Perm uinv = u.inverse();
    for (std::size_t s = 0; s < swaps.size(); ++s) {
        // Structural facts about increasing k-chains into a decreasing
        // tail, asserted at runtime.
        const auto [small, large] = swaps[s];
        if (uinv(large) <= k)
            throw std::logic_error("build_row: larger swapped value inside the first k of u");
        for (int c = small + 1; c < large; ++c) {
            if (uinv(c) >= landing[s])
                throw std::logic_error("build_row: straddled value sits right of the landing index");
        }
    }
    for (const auto& [small, large] : swaps)
        for (int c = small + 1; c < large; ++c)
            if (swaps_larger[c] || swaps_smaller[c])
                throw std::logic_error("build_row: straddled value was swapped");

    std::vector<char> in_head(n + 1, 0);
    for (int i = 1; i <= k; ++i) in_head[w(i)] = 1;
    auto straddled = [&](int c) {
        for (const auto& [small, large] : swaps)
            if (small < c && c < large) return true;
        return false;
    };

    std::vector<BpdTile> row(n + 1, BpdTile::Blank);
    for (int c = 1; c <= n; ++c) {
        if (swaps_larger[c] && !swaps_smaller[c]) row[c] = BpdTile::TurnES;
        else if (swaps_larger[c] && swaps_smaller[c]) row[c] = BpdTile::H;
        else if (swaps_smaller[c]) row[c] = BpdTile::TurnNW;
        else if (!in_head[c]) row[c] = BpdTile::Blank;
        else if (straddled(c)) row[c] = BpdTile::Cross;
        else row[c] = BpdTile::V;
    }
    // Finishing step: thread the pipe that enters from the east edge.
    const int wk = w(k);
    if (row[wk] == BpdTile::TurnNW) row[wk] = BpdTile::H;
    else if (row[wk] == BpdTile::V) row[wk] = BpdTile::TurnES;
    else throw std::logic_error("build_row: unexpected raw tile at column w(k)");
    for (int c = wk + 1; c <= n; ++c) {
        if (row[c] != BpdTile::V)
            throw std::logic_error("build_row: unexpected raw tile east of w(k)");
        row[c] = BpdTile::Cross;
    }

    // Post-conditions of the construction: the strands are connected, the
    // pipe under column w(i) leaves at column u(i), and crossings respect
    // the source-row order.
    {
        std::vector<int> north(n + 1, 0);
        for (int i = 1; i <= k - 1; ++i) north[w(i)] = i;
        std::vector<int> exits(n + 1, 0);
        int horiz = k;
        for (int c = n; c >= 1; --c) {
            const int vert = north[c];
            const BpdTile t = row[c];
            const bool has_e = t == BpdTile::H || t == BpdTile::Cross || t == BpdTile::TurnES;
            const bool has_n = t == BpdTile::V || t == BpdTile::Cross || t == BpdTile::TurnNW;
            if (has_e != (horiz != 0) || has_n != (vert != 0))
                throw std::logic_error("build_row: strand adjacency violated");
            switch (t) {
                case BpdTile::Blank:
                case BpdTile::H:
                    break;
                case BpdTile::V:
                    exits[c] = vert;
                    break;
                case BpdTile::Cross:
                    if (!(horiz > vert))
                        throw std::logic_error("build_row: crossing order violated");
                    exits[c] = vert;
                    break;
                case BpdTile::TurnES:
                    exits[c] = horiz;
                    horiz = 0;
                    break;
                case BpdTile::TurnNW:
                    horiz = vert;
                    break;
            }
        }
        if (horiz != 0) throw std::logic_error("build_row: pipe escapes the west edge");
        for (int i = 1; i <= k; ++i)
            if (exits[u(i)] != i)
                throw std::logic_error("build_row: pipe lands in the wrong column");
    }
    return std::vector<BpdTile>(row.begin() + 1, row.end());
}

BpdGrid chain_bpd_inverse(const BruhatChain& c) {
    if (c.perms.empty()) throw std::invalid_argument("empty chain");
    const int n = c.perms[0].size();
    if (static_cast<int>(c.perms.size()) != n)
        throw std::domain_error("chain_bpd_inverse: chain must have n entries");
    if (c.perms.back() != Perm::longest(n))
        throw std::domain_error("chain_bpd_inverse: chain must end at w0");
    BpdGrid g(n);
    for (int k = 1; k <= n - 1; ++k) {
        const Perm& uk = c.perms[n - 1 - k];
        const Perm& wk = c.perms[n - k];
        std::vector<BpdTile> row = build_row(uk, wk, k);
        for (int col = 1; col <= n; ++col) g.set(k, col, row[col - 1]);
    }
    // Row n is forced by port consistency.
    std::vector<char> north(n + 1, 0);
    if (n >= 2)
        for (int col = 1; col <= n; ++col) {
            const BpdTile t = g.at(n - 1, col);
            north[col] = (t == BpdTile::V || t == BpdTile::Cross || t == BpdTile::TurnES);
        }
    bool horiz = true;
    for (int col = n; col >= 1; --col) {
        if (horiz && north[col]) g.set(n, col, BpdTile::Cross);
        else if (horiz) {
            g.set(n, col, BpdTile::TurnES);
            horiz = false;
        } else if (north[col]) g.set(n, col, BpdTile::V);
        else throw std::domain_error("chain_bpd_inverse: bottom row cannot be completed");
    }
    if (horiz) throw std::domain_error("chain_bpd_inverse: bottom row cannot be completed");
    analyze_bpd(g);  // final consistency check
    return g;
}

FlaggedTableau::FlaggedTableau(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("FlaggedTableau requires n >= 1");
    cells_.assign(n * (n - 1) / 2, 0);
}

namespace {

int ft_index(int n, int r, int c) {
    if (r < 1 || r > n - 1 || c < 1 || c > n - r)
        throw std::invalid_argument("FlaggedTableau cell out of range");
    return (r - 1) * n - (r - 1) * r / 2 + c - 1;
}

}  // namespace

int FlaggedTableau::at(int r, int c) const { return cells_[ft_index(n_, r, c)]; }

void FlaggedTableau::set(int r, int c, int value) {
    if (value < 0 || value > r)
        throw std::invalid_argument("FlaggedTableau entry must lie in [row]");
    cells_[ft_index(n_, r, c)] = value;
}

FtAnalysis ft_analyze(const FlaggedTableau& t) {
    const int n = t.n();
    FtAnalysis out;
    out.weight.assign(std::max(0, n - 1), 0);
    for (int r = 1; r <= n - 1; ++r) {
        for (int c = n - r; c >= 1; --c) {
            const int entry = t.at(r, c);
            if (entry == 0) ++out.weight[r - 1];
            else out.word.push_back({entry, n + 1 - c});
        }
    }
    Perm v = Perm::longest(n);
    for (const auto& [a, b] : out.word) {
        Perm next = v.swapped(a, b);
        if (next.length() != v.length() - 1) return out;  // perm stays absent
        v = next;
    }
    out.perm = v;
    return out;
}

FlaggedTableau phi(const BpdGrid& d) {
    const int n = d.n();
    BpdTrace tr = trace_bpd(d);
    FlaggedTableau t(n);
    for (int r = 1; r <= n - 1; ++r) {
        std::vector<int> topfree;
        for (int c = 1; c <= n; ++c) {
            const BpdTile tile = d.at(r, c);
            if (tile == BpdTile::Blank || tile == BpdTile::H || tile == BpdTile::TurnES)
                topfree.push_back(c);
        }
        assert(static_cast<int>(topfree.size()) == n - r + 1);
        for (int j = 1; j <= n - r; ++j) {
            const int col = topfree[j - 1];
            if (d.at(r, col) == BpdTile::Blank) continue;
            const int src = tr.hpipe[r][col];
            assert(src >= 1 && src <= r);
            t.set(r, j, src);
        }
    }
    return t;
}

namespace {

void require_bpd_side_chain(const BruhatChain& c, const char* what) {
    if (c.perms.empty()) throw std::invalid_argument("empty chain");
    const int n = c.perms[0].size();
    if (static_cast<int>(c.perms.size()) != n)
        throw std::domain_error(std::string(what) + ": chain must have n entries");
    if (c.perms.back() != Perm::longest(n))
        throw std::domain_error(std::string(what) + ": chain must end at w0");
}

}  // namespace

FlaggedTableau psi(const BruhatChain& c) {
    require_bpd_side_chain(c, "psi");
    const int n = c.perms[0].size();
    FlaggedTableau t(n);
    for (int k = n - 1; k >= 1; --k) {
        const Perm& uk = c.perms[n - 1 - k];
        const Perm& wk = c.perms[n - k];
        auto seg = find_increasing_k_chain(uk, wk, k);
        if (!seg) throw std::domain_error("psi: chain is not compatible with (n-1, ..., 1)");
        for (std::size_t s = 0; s + 1 < seg->perms.size(); ++s) {
            const Perm& x = seg->perms[s];
            const Perm& y = seg->perms[s + 1];
            int p = 0, q = 0;
            for (int pos = 1; pos <= n; ++pos)
                if (x(pos) != y(pos)) (p == 0 ? p : q) = pos;
            t.set(k, n + 1 - q, p);
        }
    }
    return t;
}

BruhatChain psi_inverse(const FlaggedTableau& t) {
    const int n = t.n();
    std::vector<Perm> ups{Perm::longest(n)};  // u_0, u_1, ..., u_{n-1}
    for (int k = 1; k <= n - 1; ++k) {
        Perm v = ups.back();
        for (int c = n - k; c >= 1; --c) {
            const int entry = t.at(k, c);
            if (entry == 0) continue;
            v = v.swapped(entry, n + 1 - c);
        }
        ups.push_back(v);
        if (!find_increasing_k_chain(ups[k], ups[k - 1], k))
            throw std::domain_error("psi_inverse: tableau is not associated with a permutation");
    }
    BruhatChain c;
    for (int k = n - 1; k >= 0; --k) c.perms.push_back(ups[k]);
    for (int k = n - 1; k >= 1; --k) c.labels.push_back(k);
    return c;
}

Polynomial bpd_double_weight(const BpdGrid& d) {
    const int n = d.n();
    analyze_bpd(d);  // validates
    Polynomial out = Polynomial::constant(n, 1);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (d.at(r, c) == BpdTile::Blank)
                out *= Polynomial::var_x(n, r) - Polynomial::var_y(n, c);
    return out;
}

std::string render_bpd(const BpdGrid& d) {
    std::string s;
    for (int r = 1; r <= d.n(); ++r) {
        for (int c = 1; c <= d.n(); ++c) {
            switch (d.at(r, c)) {
                case BpdTile::Blank: s += '.'; break;
                case BpdTile::H: s += '-'; break;
                case BpdTile::V: s += '|'; break;
                case BpdTile::Cross: s += '+'; break;
                case BpdTile::TurnES: s += 'r'; break;
                case BpdTile::TurnNW: s += 'j'; break;
            }
        }
        s += '\n';
    }
    return s;
}

std::string render_ft(const FlaggedTableau& t) {
    std::string s;
    for (int r = 1; r <= t.n() - 1; ++r) {
        for (int c = 1; c <= t.n() - r; ++c) {
            const int v = t.at(r, c);
            s += v == 0 ? '.' : static_cast<char>('0' + v);
        }
        s += '\n';
    }
    return s;
}

}  // namespace schubert
