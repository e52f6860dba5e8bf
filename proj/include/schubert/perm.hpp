#pragma once

// Permutations of [n] in one-line notation, Bruhat and k-Bruhat order
// predicates, and the boundary subsets S_n^{k v} (decreasing tail) and
// S_n^{<k} (antidiagonal head) used by the grid modules.
//
// Conventions: positions and values are 1-based everywhere in the API.
// Composition is (u*v)(i) = u(v(i)); right multiplication by t_{i,j}
// swaps the entries at positions i and j.

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert {

class Perm {
public:
    Perm() = default;
    // Validates that `one_line` is a rearrangement of 1..n.
    explicit Perm(std::vector<int> one_line);

    static Perm identity(int n);
    static Perm longest(int n);  // w0 = [n, n-1, ..., 1]; requires n >= 1

    int size() const { return static_cast<int>(v_.size()); }
    int operator()(int i) const { return v_[i - 1]; }
    const std::vector<int>& one_line() const { return v_; }

    int length() const;  // number of inversions
    Perm inverse() const;
    Perm compose(const Perm& rhs) const;      // (*this)(rhs(i))
    Perm swapped(int i, int j) const;         // right multiplication by t_{i,j}

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> v_;
};

struct Transposition {
    int i = 0;
    int j = 0;
    Transposition() = default;
    Transposition(int i_, int j_);  // requires 1 <= i < j
    auto operator<=>(const Transposition&) const = default;
};

// Cover relation u <. u*t_{i,j} (length goes up by exactly one).
bool is_cover(const Perm& u, const Perm& w);

// Bruhat order via the rank-matrix dominance criterion (O(n^2)).
bool bruhat_leq(const Perm& u, const Perm& w);

// All Bruhat covers u <. u*t_{i,j}, ordered by (i, j).
std::vector<std::pair<Transposition, Perm>> covers_up(const Perm& u);

// Covers with i <= k < j (the k-Bruhat order), ordered by (i, j).
std::vector<std::pair<Transposition, Perm>> k_covers_up(const Perm& u, int k);

// w(k+1) > w(k+2) > ... > w(n); membership in S_n^{k v}, 0 <= k <= n-1.
bool has_decreasing_tail(const Perm& w, int k);

// w(i) = n+1-i for i in [k-1]; membership in S_n^{<k}, 1 <= k <= n.
bool has_antidiagonal_head(const Perm& w, int k);

// Completes the first k values of a permutation in S_n^{k v}: the unused
// values fill positions k+1..n in decreasing order.
Perm complete_decreasing_tail(const std::vector<int>& head, int n);

std::vector<Perm> all_perms(int n);

// Textual format: comma-separated one-line notation ("2,5,1,4,3"); the
// compact digit form ("25143") is accepted on input for n <= 9.
Perm parse_perm(std::string_view text);
std::string format_perm(const Perm& w);

}  // namespace schubert
