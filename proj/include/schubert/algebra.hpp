#pragma once

// Group-algebra engine over Z[x][S_n]: the right Fomin-Kirillov action by
// downward Bruhat covers, Dunkl elements, the R_i products computing the
// bumpless generating element, its commutative product form, the
// nil-Coxeter construction on the permutation basis, and the substitution
// of negated Dunkl elements into Schubert polynomials.

#include <map>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {}
    static GroupAlgebraElement basis(const Perm& w);  // 1 * w

    int n() const { return n_; }
    const std::map<Perm, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Polynomial coeff(const Perm& w) const;

    void add_term(const Perm& w, const Polynomial& f);  // accumulates, drops zeros
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a += b;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a -= b;
    }
    GroupAlgebraElement scaled(const Polynomial& f) const;  // multiply every coefficient

    bool operator==(const GroupAlgebraElement& o) const = default;

private:
    int n_;
    std::map<Perm, Polynomial> terms_;
};

// a (.) d_{i,j}: the linear extension of w -> w t_{i,j} when that is a
// downward cover, 0 otherwise.
GroupAlgebraElement fk_apply_d(const GroupAlgebraElement& a, int i, int j);

// a (.) theta_i with theta_i = -sum_{j<i} d_{j,i} + sum_{j>i} d_{i,j}.
GroupAlgebraElement fk_apply_dunkl(const GroupAlgebraElement& a, int i);

// a (.) u_i: nil-Coxeter right multiplication on the permutation basis
// (w -> w t_{i,i+1} when w(i) < w(i+1), 0 otherwise).
GroupAlgebraElement nc_apply_u(const GroupAlgebraElement& a, int i);

// w0 (.) R_1(x_1) ... R_{n-1}(x_{n-1}) with
// R_i(x_i) = prod_{j=i+1}^{n} (x_i + d_{1,j} + ... + d_{i,j}).
GroupAlgebraElement compute_S_bpd(int n);

// w0 (.) prod_{1<=i<j<=n} (x_i - theta_j); the factors commute, so any
// order computes the same element. The default order is lexicographic in
// (i, j); an explicit order can be supplied for the invariance checks.
GroupAlgebraElement compute_S_bpd_commutative(int n);
GroupAlgebraElement compute_S_bpd_commutative(int n,
                                              const std::vector<std::pair<int, int>>& order);

// The Fomin-Stanley element A_1(x_1) ... A_{n-1}(x_{n-1}) with
// A_i(x_i) = (1 + x_i u_{n-1}) ... (1 + x_i u_i), on the permutation basis.
GroupAlgebraElement compute_S_pd(int n);

// w0 (.) S_w(-theta_n, ..., -theta_2); equals the basis element of w * w0.
GroupAlgebraElement eval_schubert_at_neg_dunkl(SchubertCache& cache, const Perm& w);

// Checks d_i(S) = S (.) u_i coefficientwise for every i, where S is the
// bumpless generating element of S_n.
bool check_dd_intertwiner(int n);

}  // namespace schubert
