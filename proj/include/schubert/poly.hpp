#pragma once

// Exact sparse polynomials in x1..xW, y1..yW with arbitrary-precision
// integer coefficients, divided differences, and the Schubert / double
// Schubert recursions. A polynomial carries its variable width W; all
// operations require matching widths. Code working with S_n uses W = n
// so that y_n is available to the Cauchy identity.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "schubert/perm.hpp"

namespace schubert {

using Int = boost::multiprecision::cpp_int;

class Polynomial {
public:
    // Exponent vector: x exponents at [0, width), y exponents at [width, 2*width).
    using Exp = std::vector<int>;

    Polynomial() : width_(0) {}
    explicit Polynomial(int width) : width_(width) {}

    static Polynomial constant(int width, Int c);
    static Polynomial var_x(int width, int i);  // x_i, 1-based
    static Polynomial var_y(int width, int i);  // y_i, 1-based
    // Monomial with the given x exponents (padded with zeros) and no y part.
    static Polynomial x_monomial(int width, const std::vector<int>& x_exps, Int c = 1);

    int width() const { return width_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Int>& terms() const { return terms_; }
    Int coeff(const Exp& e) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Int& c);

    bool operator==(const Polynomial& o) const = default;

    Int eval_all_ones() const;       // substitutes 1 for every variable
    Polynomial set_y_zero() const;   // kills every term with a y exponent
    int total_degree() const;
    bool has_negative_coeff() const;

    // "x1^2*x2*y3 + 3*y1 - 1" style rendering with a deterministic term order.
    std::string to_string() const;

    void add_term(Exp e, Int c);  // accumulates, drops zeros

private:
    int width_;
    std::map<Exp, Int> terms_;
};

// (f - s_i f) / (x_i - x_{i+1}); acts on the x alphabet only.
Polynomial divided_difference(const Polynomial& f, int i);

// h_d(x_1, ..., x_k): sum of all weakly increasing degree-d monomials.
Polynomial complete_homogeneous(int width, int d, int k);

// Memoized Schubert polynomials for S_n, by three independent routes:
// the divided-difference descent from S_{w0}, the transition recursion,
// and the double Schubert descent from prod_{i+j<=n} (x_i - y_j).
// Polynomials are produced with width n. Thread-safe.
class SchubertCache {
public:
    explicit SchubertCache(int n);
    int n() const { return n_; }

    const Polynomial& schubert(const Perm& w);             // divided differences
    const Polynomial& schubert_transition(const Perm& w);  // transition formula
    const Polynomial& double_schubert(const Perm& w);      // S_w(x, y)

    void warm_all();         // fills the divided-difference table for all of S_n
    std::size_t size() const;  // entries in the divided-difference table

private:
    const Polynomial& schubert_locked(const Perm& w);
    const Polynomial& transition_locked(const Perm& w);
    const Polynomial& double_locked(const Perm& w);

    int n_;
    std::map<Perm, Polynomial> dd_, trans_, dbl_;
    mutable std::mutex mu_;
};

// Monk's rule instance: S_w * (x_1 + ... + x_k) = sum over k-covers.
// Requires w(j) = n for some j > k; throws std::domain_error otherwise.
bool verify_monk(SchubertCache& cache, const Perm& w, int k);

// Sottile's Pieri rule, checked after the fixed-point embedding of u into
// S_{n+d}: S_u * h_d(x_1..x_k) = sum of S_w over increasing k-chain
// endpoints at distance d.
bool verify_pieri_stable(const Perm& u, int k, int d);

// Cauchy-type identity:
// prod_{1<=i<j<=n} (x_i - y_j) = sum_w S_w(x) * S_{w w0}(-y_n, ..., -y_2).
bool verify_cauchy(int n);

}  // namespace schubert
