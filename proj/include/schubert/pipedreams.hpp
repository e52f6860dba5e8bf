#pragma once

// Classical pipedreams on the staircase grid: enumeration, weights,
// reduced words, the chain_PD bijection onto (1, ..., n-1)-compatible
// Bruhat chains, and double-Schubert tile weights.
//
// Grid: a cell (i, j) for i + j <= n + 1; the cell (i, n+1-i) is the
// forced elbow. Pipe i enters the west edge of (i, 1); pipes exit the
// north edge of row 1, and the exit column of pipe i is w(i).

#include <map>
#include <string>
#include <vector>

#include "schubert/chains.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

enum class PdTile { Cross, Bump, Elbow };

class PdGrid {
public:
    explicit PdGrid(int n);  // all free cells Bump (the identity pipedream)

    int n() const { return n_; }
    int row_size(int r) const { return n_ + 1 - r; }
    PdTile at(int r, int c) const;
    void set(int r, int c, PdTile t);  // rejects touching the forced elbow

    auto operator<=>(const PdGrid&) const = default;

private:
    int n_;
    std::vector<PdTile> cells_;  // row-major over the staircase
    int index(int r, int c) const;
};

struct PdAnalysis {
    Perm perm;
    std::vector<int> weight;  // crossings per row, rows 1..n-1
    std::vector<int> word;    // reduced word, top to bottom, right to left
};

// Traced permutation, weight and reduced word; rejects double crossings.
PdAnalysis analyze_pd(const PdGrid& p);

std::vector<PdGrid> enumerate_pd(const Perm& w);
std::map<Perm, std::vector<PdGrid>> enumerate_pd_all(int n);

// Product s_{i_1} ... s_{i_l} of a word.
Perm reduced_word_product(const std::vector<int>& word, int n);

// chain_PD: the Lenart-Sottile bijection onto chains from w to w0
// compatible with (1, ..., n-1); wt(chain) = (n-1, ..., 1) - wt(P).
BruhatChain chain_pd(const PdGrid& p);
PdGrid chain_pd_inverse(const BruhatChain& c);

// Product of (x_i - y_j) over crossing tiles.
Polynomial pd_double_weight(const PdGrid& p);

std::string render_pd(const PdGrid& p);  // '+', '~', 'r'

}  // namespace schubert
