#include "schubert/hybrid.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <stdexcept>

namespace schubert {

namespace {

// Tile inventory flags for PD-type rows (the B-row inventory is the six
// bumpless tiles turned upside down and is not in question). The
// discriminating tests (weight sums against Schubert polynomials, the
// worked n = 5 grid, the chain_tau bijection) pin the inventory to
// {Blank, H, Cross, Bump, TurnWN, TurnSE}: a pipe may jog east off a
// lone SE elbow, but never passes straight up through a PD-type row.
constexpr bool kAllowVInPRows = false;
constexpr bool kAllowTurnSEInPRows = true;

}  // namespace

bool valid_tau(const std::string& tau) {
    if (tau.empty()) return false;
    for (char c : tau)
        if (c != 'P' && c != 'B') return false;
    return true;
}

std::vector<int> row_labels(const std::string& tau) {
    if (!valid_tau(tau)) throw std::invalid_argument("tau must be a nonempty string over {P, B}");
    const int n = static_cast<int>(tau.size());
    std::vector<int> lab(n + 1, 0);
    int next = 1;
    for (int r = 1; r <= n; ++r)
        if (tau[r - 1] == 'P') lab[r] = next++;
    for (int r = n; r >= 1; --r)
        if (tau[r - 1] == 'B') lab[r] = next++;
    return std::vector<int>(lab.begin() + 1, lab.end());
}

std::vector<int> gamma_tau(const std::string& tau) {
    std::vector<int> lab = row_labels(tau);
    std::vector<int> gamma;
    for (int l : lab)
        if (l != static_cast<int>(tau.size())) gamma.push_back(l);
    return gamma;
}

HpdGrid::HpdGrid(std::string tau) : n_(static_cast<int>(tau.size())), tau_(std::move(tau)) {
    if (!valid_tau(tau_)) throw std::invalid_argument("tau must be a nonempty string over {P, B}");
    tiles_.assign(n_ * n_, HpdTile::Blank);
}

HpdTile HpdGrid::at(int r, int c) const {
    if (r < 1 || r > n_ || c < 1 || c > n_) throw std::invalid_argument("HpdGrid cell out of range");
    return tiles_[(r - 1) * n_ + (c - 1)];
}

void HpdGrid::set(int r, int c, HpdTile t) {
    if (r < 1 || r > n_ || c < 1 || c > n_) throw std::invalid_argument("HpdGrid cell out of range");
    tiles_[(r - 1) * n_ + (c - 1)] = t;
}

namespace {

// DFS over all valid fillings of one row. `up` carries the pipe crossing
// each column of the boundary below the row (0 if none); at each completed
// filling it holds the boundary above the row while sink() runs, and is
// restored afterwards. Pipes are identified by entry row; `labels` maps
// entry rows to row labels for the crossing rule.
void scan_row(int n, bool p_row, int row_pipe, const std::vector<int>& labels,
              std::vector<int>& up, std::vector<HpdTile>& tiles,
              const std::function<void()>& sink) {
    auto rec = [&](auto&& self, int c, int horiz) -> void {
        const bool done = p_row ? (c > n) : (c < 1);
        if (done) {
            if (horiz == 0) sink();
            return;
        }
        const int next = p_row ? c + 1 : c - 1;
        const int vert = up[c];
        if (horiz && vert) {
            const int hl = labels[horiz], vl = labels[vert];
            if (p_row ? (hl < vl) : (hl > vl)) {
                tiles[c] = HpdTile::Cross;
                self(self, next, horiz);
            }
            if (p_row) {
                tiles[c] = HpdTile::Bump;
                up[c] = horiz;
                self(self, next, vert);
                up[c] = vert;
            }
        } else if (horiz) {
            tiles[c] = HpdTile::H;
            self(self, next, horiz);
            tiles[c] = p_row ? HpdTile::TurnWN : HpdTile::TurnEN;
            up[c] = horiz;
            self(self, next, 0);
            up[c] = 0;
        } else if (vert) {
            if (!p_row || kAllowVInPRows) {
                tiles[c] = HpdTile::V;
                self(self, next, 0);
            }
            if (!p_row || kAllowTurnSEInPRows) {
                tiles[c] = p_row ? HpdTile::TurnSE : HpdTile::TurnSW;
                up[c] = 0;
                self(self, next, vert);
                up[c] = vert;
            }
        } else {
            tiles[c] = HpdTile::Blank;
            self(self, next, 0);
        }
    };
    rec(rec, p_row ? 1 : n, row_pipe);
}

struct HpdTrace {
    Perm perm;                                 // by label
    std::vector<std::vector<int>> north;       // north[r][c]: pipe crossing the N edge of row r
};

// Deterministic single pass with full validation.
HpdTrace trace_hpd(const HpdGrid& h) {
    const int n = h.n();
    const std::vector<int> lab_by_row = row_labels(h.tau());
    std::vector<int> labels(n + 1, 0);
    for (int r = 1; r <= n; ++r) labels[r] = lab_by_row[r - 1];

    HpdTrace t;
    t.north.assign(n + 2, std::vector<int>(n + 1, 0));
    std::vector<int> up(n + 1, 0);
    for (int r = n; r >= 1; --r) {
        const bool p_row = h.tau()[r - 1] == 'P';
        int horiz = r;
        const int from = p_row ? 1 : n, to = p_row ? n : 1, step = p_row ? 1 : -1;
        for (int c = from;; c += step) {
            const int vert = up[c];
            const HpdTile tile = h.at(r, c);
            auto expect = [&](bool want_h, bool want_v) {
                if ((horiz != 0) != want_h || (vert != 0) != want_v)
                    throw std::domain_error("hybrid grid: strand adjacency violated");
            };
            switch (tile) {
                case HpdTile::Blank:
                    expect(false, false);
                    break;
                case HpdTile::H:
                    expect(true, false);
                    up[c] = 0;
                    break;
                case HpdTile::V:
                    if (p_row && !kAllowVInPRows)
                        throw std::domain_error("hybrid grid: V tile in a PD-type row");
                    expect(false, true);
                    break;
                case HpdTile::Cross: {
                    expect(true, true);
                    const int hl = labels[horiz], vl = labels[vert];
                    if (p_row ? !(hl < vl) : !(hl > vl))
                        throw std::domain_error("hybrid grid: crossing rule violated");
                    break;
                }
                case HpdTile::Bump:
                    if (!p_row) throw std::domain_error("hybrid grid: bump in a BPD-type row");
                    expect(true, true);
                    up[c] = horiz;
                    horiz = vert;
                    break;
                case HpdTile::TurnWN:
                    if (!p_row) throw std::domain_error("hybrid grid: WN elbow in a BPD-type row");
                    expect(true, false);
                    up[c] = horiz;
                    horiz = 0;
                    break;
                case HpdTile::TurnSE:
                    if (!p_row || !kAllowTurnSEInPRows)
                        throw std::domain_error("hybrid grid: SE elbow not allowed here");
                    expect(false, true);
                    up[c] = 0;
                    horiz = vert;
                    break;
                case HpdTile::TurnEN:
                    if (p_row) throw std::domain_error("hybrid grid: EN elbow in a PD-type row");
                    expect(true, false);
                    up[c] = horiz;
                    horiz = 0;
                    break;
                case HpdTile::TurnSW:
                    if (p_row) throw std::domain_error("hybrid grid: SW elbow in a PD-type row");
                    expect(false, true);
                    up[c] = 0;
                    horiz = vert;
                    break;
            }
            if (c == to) break;
        }
        if (horiz != 0) throw std::domain_error("hybrid grid: pipe escapes through a side edge");
        t.north[r] = up;
    }
    std::vector<int> one_line(n, 0);
    for (int c = 1; c <= n; ++c) {
        const int p = up[c];
        if (p == 0) throw std::domain_error("hybrid grid: north edge port unoccupied");
        one_line[labels[p] - 1] = c;
    }
    t.perm = Perm(one_line);
    return t;
}

}  // namespace

HpdAnalysis hpd_analyze(const HpdGrid& h) {
    const int n = h.n();
    HpdTrace t = trace_hpd(h);
    HpdAnalysis out{t.perm, std::vector<int>(std::max(0, n - 1), 0)};
    const std::vector<int> lab = row_labels(h.tau());
    for (int r = 1; r <= n; ++r) {
        if (lab[r - 1] == n) continue;
        const bool p_row = h.tau()[r - 1] == 'P';
        int count = 0;
        for (int c = 1; c <= n; ++c) {
            const HpdTile tile = h.at(r, c);
            if (p_row ? (tile == HpdTile::Cross || tile == HpdTile::H) : (tile == HpdTile::Blank))
                ++count;
        }
        out.weight[lab[r - 1] - 1] = count;
    }
    return out;
}

namespace {

void enumerate_all_hpd(const std::string& tau,
                       const std::function<void(const HpdGrid&, const Perm&)>& sink) {
    const int n = static_cast<int>(tau.size());
    const std::vector<int> lab_by_row = row_labels(tau);
    std::vector<int> labels(n + 1, 0);
    for (int r = 1; r <= n; ++r) labels[r] = lab_by_row[r - 1];

    HpdGrid grid(tau);
    std::vector<int> up(n + 1, 0);
    auto run_rows = [&](auto&& self, int r) -> void {
        if (r == 0) {
            std::vector<int> one_line(n, 0);
            for (int c = 1; c <= n; ++c) one_line[labels[up[c]] - 1] = c;
            sink(grid, Perm(one_line));
            return;
        }
        // Each level owns its tile buffer: the scans of the rows above run
        // inside this row's sink and would otherwise clobber a shared one.
        std::vector<HpdTile> tiles(n + 1, HpdTile::Blank);
        scan_row(n, tau[r - 1] == 'P', r, labels, up, tiles, [&]() {
            for (int c = 1; c <= n; ++c) grid.set(r, c, tiles[c]);
            self(self, r - 1);
        });
    };
    run_rows(run_rows, n);
}

}  // namespace

std::vector<HpdGrid> enumerate_hpd(const Perm& w, const std::string& tau) {
    if (static_cast<int>(tau.size()) != w.size())
        throw std::invalid_argument("tau length must match the permutation size");
    std::vector<HpdGrid> out;
    enumerate_all_hpd(tau, [&](const HpdGrid& g, const Perm& p) {
        if (p == w) out.push_back(g);
    });
    return out;
}

std::map<Perm, std::vector<HpdGrid>> enumerate_hpd_all(const std::string& tau) {
    std::map<Perm, std::vector<HpdGrid>> out;
    for (const Perm& w : all_perms(static_cast<int>(tau.size()))) out[w];
    enumerate_all_hpd(tau, [&](const HpdGrid& g, const Perm& p) { out[p].push_back(g); });
    return out;
}

namespace {

// Attaches a permutation to the boundary above a bottom-row stack. Returns
// nullopt when some pipe exits inside the rightmost k1-1 columns: prefixes
// of complete hybrids never do, but dead-end stacks explored by the
// inverse search can.
std::optional<Perm> prefix_from_boundary(int n, const std::vector<int>& labels, int top_row,
                                         const std::vector<int>& boundary) {
    // Labels present in rows top_row..n form a contiguous range [k1, k2].
    int k1 = n + 1, k2 = 0;
    for (int r = top_row; r <= n; ++r) {
        k1 = std::min(k1, labels[r]);
        k2 = std::max(k2, labels[r]);
    }
    assert(k2 - k1 + 1 == n - top_row + 1);
    std::vector<int> one_line(n + 1, 0);
    for (int c = 1; c <= n; ++c) {
        if (int p = boundary[c]; p != 0) {
            if (c > n - k1 + 1) return std::nullopt;
            one_line[labels[p]] = c;
        }
    }
    for (int j = 1; j < k1; ++j) one_line[j] = n + 1 - j;
    std::vector<char> used(n + 1, 0);
    for (int j = 1; j <= k2; ++j) used[one_line[j]] = 1;
    int next = n;
    for (int j = k2 + 1; j <= n; ++j) {
        while (used[next]) --next;
        one_line[j] = next;
        used[next] = 1;
    }
    return Perm(std::vector<int>(one_line.begin() + 1, one_line.end()));
}

}  // namespace

Perm prefix_permutation_hpd(const HpdGrid& h, int i) {
    const int n = h.n();
    if (i < 0 || i > n) throw std::invalid_argument("prefix size out of range");
    if (i == 0) return Perm::longest(n);
    const std::vector<int> lab_by_row = row_labels(h.tau());
    std::vector<int> labels(n + 1, 0);
    for (int r = 1; r <= n; ++r) labels[r] = lab_by_row[r - 1];
    HpdTrace t = trace_hpd(h);
    auto u = prefix_from_boundary(n, labels, n - i + 1, t.north[n - i + 1]);
    if (!u) throw std::logic_error("prefix of a valid grid has a forbidden exit");
    return *u;
}

BruhatChain chain_tau(const HpdGrid& h) {
    const int n = h.n();
    const std::vector<int> lab = row_labels(h.tau());
    int row_n = 0;
    for (int r = 1; r <= n; ++r)
        if (lab[r - 1] == n) row_n = r;
    const int k0 = n - row_n + 1;
    std::vector<Perm> prefixes(n + 1, Perm());
    for (int i = 0; i <= n; ++i) prefixes[i] = prefix_permutation_hpd(h, i);
    if (prefixes[k0] != prefixes[k0 - 1])
        throw std::logic_error("chain_tau: the row labeled n changed the prefix permutation");
    BruhatChain c;
    for (int i = n; i >= 0; --i)
        if (i != k0) c.perms.push_back(prefixes[i]);
    c.labels = gamma_tau(h.tau());
    return c;
}

HpdGrid chain_tau_inverse(const BruhatChain& c, const std::string& tau) {
    if (!valid_tau(tau)) throw std::invalid_argument("tau must be a nonempty string over {P, B}");
    const int n = static_cast<int>(tau.size());
    if (static_cast<int>(c.perms.size()) != n)
        throw std::domain_error("chain_tau_inverse: chain must have n entries");
    if (c.perms[0].size() != n) throw std::invalid_argument("chain/tau size mismatch");
    if (c.perms.back() != Perm::longest(n))
        throw std::domain_error("chain_tau_inverse: chain must end at w0");

    const std::vector<int> lab_by_row = row_labels(tau);
    std::vector<int> labels(n + 1, 0);
    int row_n = 0;
    for (int r = 1; r <= n; ++r) {
        labels[r] = lab_by_row[r - 1];
        if (labels[r] == n) row_n = r;
    }
    const int k0 = n - row_n + 1;
    // Reinsert the prefix permutation the chain omits: the row labeled n
    // never changes the attached permutation.
    std::vector<Perm> prefixes(n + 1, Perm());
    for (int j = 0; j < n; ++j) {
        const int p = (j < n - k0) ? n - j : n - j - 1;
        prefixes[p] = c.perms[j];
    }
    prefixes[k0] = prefixes[k0 - 1];

    HpdGrid grid(tau);
    std::vector<int> up(n + 1, 0);
    std::vector<HpdTile> tiles(n + 1, HpdTile::Blank);
    for (int i = 1; i <= n; ++i) {
        const int r = n - i + 1;
        std::vector<std::vector<HpdTile>> matches;
        std::vector<std::vector<int>> boundaries;
        scan_row(n, tau[r - 1] == 'P', r, labels, up, tiles, [&]() {
            auto cand = prefix_from_boundary(n, labels, r, up);
            if (cand && *cand == prefixes[i]) {
                matches.emplace_back(tiles.begin() + 1, tiles.end());
                boundaries.push_back(up);
            }
        });
        if (matches.empty())
            throw std::domain_error("chain_tau_inverse: chain is not compatible with gamma_tau");
        if (matches.size() > 1)
            throw std::logic_error("chain_tau_inverse: row extension is not unique");
        for (int col = 1; col <= n; ++col) grid.set(r, col, matches[0][col - 1]);
        up = boundaries[0];
    }
    return grid;
}

std::string render_hpd(const HpdGrid& h) {
    const std::vector<int> lab = row_labels(h.tau());
    std::string s;
    for (int r = 1; r <= h.n(); ++r) {
        s += std::to_string(lab[r - 1]);
        s += h.tau()[r - 1];
        s += ' ';
        for (int c = 1; c <= h.n(); ++c) {
            switch (h.at(r, c)) {
                case HpdTile::Blank: s += '.'; break;
                case HpdTile::H: s += '-'; break;
                case HpdTile::V: s += '|'; break;
                case HpdTile::Cross: s += '+'; break;
                case HpdTile::Bump: s += '~'; break;
                case HpdTile::TurnWN: s += 'n'; break;
                case HpdTile::TurnSE: s += 's'; break;
                case HpdTile::TurnEN: s += 'e'; break;
                case HpdTile::TurnSW: s += 'w'; break;
            }
        }
        s += '\n';
    }
    return s;
}

}  // namespace schubert
