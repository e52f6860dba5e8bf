#pragma once

// Hybrid pipedreams of Knutson-Udell: n x n grids whose rows are PD-type
// ('P', pipe enters the west edge) or BPD-type ('B', pipe enters the east
// edge) according to a type string tau. All pipes exit the north edge of
// row 1. Covers row labels, gamma_tau, enumeration, prefix permutations,
// and the chain_tau bijection onto gamma_tau-compatible chains.

#include <map>
#include <string>
#include <vector>

#include "schubert/chains.hpp"
#include "schubert/perm.hpp"

namespace schubert {

// P rows admit {Blank, H, Cross, Bump, TurnWN}; B rows admit
// {Blank, H, V, Cross, TurnEN, TurnSW}. Bump is {W-N}+{S-E}; the elbows
// are named by the ports they join.
enum class HpdTile { Blank, H, V, Cross, Bump, TurnWN, TurnSE, TurnEN, TurnSW };

bool valid_tau(const std::string& tau);

// PD rows are labeled 1..p top to bottom, then BPD rows p+1..n bottom to top.
std::vector<int> row_labels(const std::string& tau);

// Labels read top to bottom with n removed; length n-1.
std::vector<int> gamma_tau(const std::string& tau);

class HpdGrid {
public:
    HpdGrid(std::string tau);  // all Blank; callers fill every tile

    int n() const { return n_; }
    const std::string& tau() const { return tau_; }
    HpdTile at(int r, int c) const;
    void set(int r, int c, HpdTile t);

    auto operator<=>(const HpdGrid&) const = default;

private:
    int n_;
    std::string tau_;
    std::vector<HpdTile> tiles_;
};

struct HpdAnalysis {
    Perm perm;                // by label: pipe labeled i exits in column perm(i)
    std::vector<int> weight;  // weighty tiles in the row with label i, i = 1..n-1
};

// Validates row inventories, strand adjacency, boundaries and the label
// crossing rule (h < v in P rows, h > v in B rows), then traces.
HpdAnalysis hpd_analyze(const HpdGrid& h);

std::vector<HpdGrid> enumerate_hpd(const Perm& w, const std::string& tau);
std::map<Perm, std::vector<HpdGrid>> enumerate_hpd_all(const std::string& tau);

// Permutation attached to the bottom-i-row prefix, completed inside
// S_n^{<k1} and S_n^{k2 v}; i = 0 gives w0.
Perm prefix_permutation_hpd(const HpdGrid& h, int i);

// chain_tau(H): (u_n, ..., u_0) with the entry at the row labeled n
// removed; n permutations, compatible with gamma_tau.
BruhatChain chain_tau(const HpdGrid& h);

HpdGrid chain_tau_inverse(const BruhatChain& c, const std::string& tau);

std::string render_hpd(const HpdGrid& h);

}  // namespace schubert
