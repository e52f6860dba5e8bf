#pragma once

// Saturated Bruhat chains, increasing k-chains, gamma-compatible chain
// enumeration, Lenart's growth diagram, the flip bijection between the
// two extreme compatibility flavors, and the double-Schubert chain
// weight WT_gamma.

#include <optional>
#include <tuple>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

struct BruhatChain {
    std::vector<Perm> perms;
    std::vector<int> labels;  // optional; one entry per segment when present

    auto operator<=>(const BruhatChain&) const = default;
};

// Per-segment length differences; rejects inputs that are not upward chains.
std::vector<int> chain_weight(const BruhatChain& c);

// The unique saturated k-chain from u to w whose swapped smaller values
// strictly increase, or nullopt. u == w yields the one-permutation chain.
std::optional<BruhatChain> find_increasing_k_chain(const Perm& u, const Perm& w, int k);

// Every increasing k-chain starting at u, the trivial one included.
std::vector<BruhatChain> enumerate_increasing_k_chains(const Perm& u, int k);

bool is_compatible(const BruhatChain& c, const std::vector<int>& ks);

// All chains (w, ..., w0) whose i-th segment admits an increasing
// gamma(i)-chain; gamma must be a permutation of [n-1]. Sorted output.
std::vector<BruhatChain> enumerate_compatible_chains(const Perm& w, const std::vector<int>& gamma);

// Exponent vector of x^{wt_gamma(C)}: entry i is (n-i) minus the length of
// the increasing i-chain segment of C.
std::vector<int> gamma_exponent(const BruhatChain& c, const std::vector<int>& gamma);

// Lenart's local move on a <.k1 b <.k2 c: returns (b'', k2, k1) so that the
// segment becomes a -k2-> b'' -k1-> c.
std::tuple<Perm, int, int> lenart_local_move(const Perm& a, const Perm& b, const Perm& c,
                                             int k1, int k2);

// Lenart's growth diagram: rewrites the concatenation of a saturated
// k1-chain and a saturated k2-chain into a k2-chain followed by a k1-chain
// of the same lengths. Returns (k2-chain, k1-chain).
std::pair<BruhatChain, BruhatChain> growth(int k1, int k2, const BruhatChain& c1,
                                           const BruhatChain& c2);

// growth on a (k1, k2)-compatible triple; returns (u, v', w).
std::tuple<Perm, Perm, Perm> growth_triple(const Perm& u, const Perm& v, const Perm& w,
                                           int k1, int k2);

// Bijection between chains from w to w0 compatible with (n-1, ..., 1) and
// those compatible with (1, ..., n-1); unflip is its inverse.
BruhatChain flip(const BruhatChain& c);
BruhatChain unflip(const BruhatChain& c);

// WT_gamma(C): product over segments i and positions t > gamma_i fixed by
// the segment of (x_{gamma_i} - y_{w_i(t)}). Width-n polynomial.
Polynomial double_weight(const BruhatChain& c, const std::vector<int>& gamma);

}  // namespace schubert
