#pragma once

// Bumpless pipedreams on the n x n grid, in the convention where pipes
// enter on the east edge of each row and exit through the south edge.
// Covers prefix permutations, the chain_BPD bijection and its row-by-row
// inverse, and the flagged-tableau encodings Phi / Psi.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/chains.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

enum class BpdTile { Blank, H, V, Cross, TurnES, TurnNW };

class BpdGrid {
public:
    explicit BpdGrid(int n);  // all Blank; callers fill every tile

    int n() const { return n_; }
    BpdTile at(int r, int c) const;
    void set(int r, int c, BpdTile t);

    auto operator<=>(const BpdGrid&) const = default;

private:
    int n_;
    std::vector<BpdTile> tiles_;
};

struct BpdAnalysis {
    Perm perm;
    std::vector<int> weight;  // blanks per row, rows 1..n-1
};

// Validates boundary conditions, strand adjacency and the crossing rule
// (horizontal pipe at a Cross is from a later row than the vertical one),
// then traces. Throws std::domain_error on inconsistent grids.
BpdAnalysis analyze_bpd(const BpdGrid& d);

std::vector<BpdGrid> enumerate_bpd(const Perm& w);
std::map<Perm, std::vector<BpdGrid>> enumerate_bpd_all(int n);

// Consistent six-tile fillings with the crossing restriction dropped;
// these are counted by the alternating sign matrix numbers 1, 2, 7, 42,
// 429, ... while the reduced fillings (actual BPDs) are fewer from n = 4.
long long count_asm_fillings(int n);

// Permutation of the k-row prefix, completed with a decreasing tail; k = 0
// gives w0.
Perm prefix_permutation(const BpdGrid& d, int k);

// chain_BPD(D) = (u_{n-1}, ..., u_0), compatible with (n-1, ..., 1);
// wt(chain) is the reverse of (n-1, ..., 1) - wt(D).
BruhatChain chain_bpd(const BpdGrid& d);

// The increasing k-chain from u_k to u_{k-1} read directly off row k of
// D via its pipe-bearing top-free tiles and their ranks.
BruhatChain segment_chain(const BpdGrid& d, int k);

// The row of n tiles that extends a (k-1)-row BPD of w to a k-row BPD of
// u, given that an increasing k-chain from u to w exists. The raw
// per-value assignment is finished by threading the east-entering pipe.
std::vector<BpdTile> build_row(const Perm& u, const Perm& w, int k);

BpdGrid chain_bpd_inverse(const BruhatChain& c);

// Staircase filling with a cell (i, j) for i + j <= n; entries in [i], 0
// meaning empty.
class FlaggedTableau {
public:
    explicit FlaggedTableau(int n);  // all empty

    int n() const { return n_; }
    int row_size(int r) const { return n_ - r; }
    int at(int r, int c) const;
    void set(int r, int c, int value);  // 0 clears

    auto operator<=>(const FlaggedTableau&) const = default;

private:
    int n_;
    std::vector<int> cells_;
};

struct FtAnalysis {
    std::vector<std::pair<int, int>> word;  // reading word, pairs (entry, n+1-column)
    std::optional<Perm> perm;               // absent when the word leaves the cover relation
    std::vector<int> weight;                // empty cells per row, rows 1..n-1
};

FtAnalysis ft_analyze(const FlaggedTableau& t);

FlaggedTableau phi(const BpdGrid& d);
FlaggedTableau psi(const BruhatChain& c);
BruhatChain psi_inverse(const FlaggedTableau& t);

// Product of (x_i - y_j) over blank tiles.
Polynomial bpd_double_weight(const BpdGrid& d);

std::string render_bpd(const BpdGrid& d);       // '.', '-', '|', '+', 'r', 'j'
std::string render_ft(const FlaggedTableau& t); // digits, '.' for empty

}  // namespace schubert
