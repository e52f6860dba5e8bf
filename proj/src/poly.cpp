#include "schubert/poly.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "schubert/chains.hpp"

namespace schubert {

Polynomial Polynomial::constant(int width, Int c) {
    Polynomial p(width);
    p.add_term(Exp(2 * width, 0), std::move(c));
    return p;
}

Polynomial Polynomial::var_x(int width, int i) {
    if (i < 1 || i > width) throw std::invalid_argument("x index out of range");
    Polynomial p(width);
    Exp e(2 * width, 0);
    e[i - 1] = 1;
    p.add_term(std::move(e), 1);
    return p;
}

Polynomial Polynomial::var_y(int width, int i) {
    if (i < 1 || i > width) throw std::invalid_argument("y index out of range");
    Polynomial p(width);
    Exp e(2 * width, 0);
    e[width + i - 1] = 1;
    p.add_term(std::move(e), 1);
    return p;
}

Polynomial Polynomial::x_monomial(int width, const std::vector<int>& x_exps, Int c) {
    if (static_cast<int>(x_exps.size()) > width)
        throw std::invalid_argument("too many exponents for width");
    Polynomial p(width);
    Exp e(2 * width, 0);
    for (std::size_t i = 0; i < x_exps.size(); ++i) {
        if (x_exps[i] < 0) throw std::invalid_argument("negative exponent");
        e[i] = x_exps[i];
    }
    p.add_term(std::move(e), std::move(c));
    return p;
}

Int Polynomial::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(Exp e, Int c) {
    if (c == 0) return;
    assert(static_cast<int>(e.size()) == 2 * width_);
    auto [it, fresh] = terms_.emplace(std::move(e), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (width_ != o.width_) throw std::invalid_argument("polynomial width mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (width_ != o.width_) throw std::invalid_argument("polynomial width mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(width_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.width_ != b.width_) throw std::invalid_argument("polynomial width mismatch");
    Polynomial p(a.width_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exp e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(std::move(e), ca * cb);
        }
    }
    return p;
}

Polynomial& Polynomial::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Int Polynomial::eval_all_ones() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Polynomial Polynomial::set_y_zero() const {
    Polynomial p(width_);
    for (const auto& [e, c] : terms_) {
        bool pure = true;
        for (int i = width_; i < 2 * width_ && pure; ++i)
            if (e[i] != 0) pure = false;
        if (pure) p.terms_.emplace(e, c);
    }
    return p;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

bool Polynomial::has_negative_coeff() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return true;
    return false;
}

namespace {

std::string monomial_name(const Polynomial::Exp& e, int width) {
    std::string s;
    auto piece = [&s](char v, int idx, int exp) {
        if (!s.empty()) s += '*';
        s += v;
        s += std::to_string(idx);
        if (exp > 1) s += '^' + std::to_string(exp);
    };
    for (int i = 0; i < width; ++i)
        if (e[i] > 0) piece('x', i + 1, e[i]);
    for (int i = 0; i < width; ++i)
        if (e[width + i] > 0) piece('y', i + 1, e[width + i]);
    return s.empty() ? "1" : s;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string name = monomial_name(e, width_);
        Int a = c;
        if (s.empty()) {
            if (a < 0) {
                s += '-';
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1 || name == "1") {
            s += a.str();
            if (name != "1") s += '*';
        }
        if (name != "1") s += name;
    }
    return s;
}

Polynomial divided_difference(const Polynomial& f, int i) {
    const int w = f.width();
    if (i < 1 || i >= w) throw std::invalid_argument("divided_difference index out of range");
    Polynomial out(w);
    for (const auto& [e, c] : f.terms()) {
        const int a = e[i - 1], b = e[i];
        if (a == b) continue;
        // (x^a y^b - x^b y^a)/(x - y) = sign * sum_{s} x^{lo+s} y^{hi-1-s}
        const int lo = std::min(a, b), hi = std::max(a, b);
        const Int sgn = (a > b) ? c : -c;
        for (int s = 0; s < hi - lo; ++s) {
            Polynomial::Exp m = e;
            m[i - 1] = lo + s;
            m[i] = hi - 1 - s;
            out.add_term(std::move(m), sgn);
        }
    }
    return out;
}

Polynomial complete_homogeneous(int width, int d, int k) {
    if (d < 0 || k < 1 || k > width) throw std::invalid_argument("bad h_d arguments");
    Polynomial out(width);
    // Weakly increasing index sequences of length d over [k].
    std::vector<int> exps(k, 0);
    auto rec = [&](auto&& self, int minvar, int left) -> void {
        if (left == 0) {
            out += Polynomial::x_monomial(width, exps);
            return;
        }
        for (int v = minvar; v < k; ++v) {
            ++exps[v];
            self(self, v, left - 1);
            --exps[v];
        }
    };
    rec(rec, 0, d);
    return out;
}

SchubertCache::SchubertCache(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SchubertCache requires n >= 1");
}

const Polynomial& SchubertCache::schubert(const Perm& w) {
    std::lock_guard<std::mutex> lock(mu_);
    return schubert_locked(w);
}

const Polynomial& SchubertCache::schubert_locked(const Perm& w) {
    if (w.size() != n_) throw std::invalid_argument("permutation size mismatch");
    if (auto it = dd_.find(w); it != dd_.end()) return it->second;
    Polynomial result(n_);
    if (w == Perm::longest(n_)) {
        result = Polynomial::constant(n_, 1);
        for (int i = 1; i < n_; ++i) {
            std::vector<int> exps(i, 0);
            exps[i - 1] = n_ - i;
            result *= Polynomial::x_monomial(n_, exps);
        }
    } else {
        int i = 0;
        for (int p = 1; p < n_; ++p)
            if (w(p) < w(p + 1)) {
                i = p;
                break;
            }
        result = divided_difference(schubert_locked(w.swapped(i, i + 1)), i);
    }
    return dd_.emplace(w, std::move(result)).first->second;
}

const Polynomial& SchubertCache::schubert_transition(const Perm& w) {
    std::lock_guard<std::mutex> lock(mu_);
    return transition_locked(w);
}

const Polynomial& SchubertCache::transition_locked(const Perm& w) {
    if (w.size() != n_) throw std::invalid_argument("permutation size mismatch");
    if (auto it = trans_.find(w); it != trans_.end()) return it->second;
    Polynomial result(n_);
    if (w == Perm::identity(n_)) {
        result = Polynomial::constant(n_, 1);
    } else {
        int i = 0, j = 0;
        for (int p = n_; p >= 1 && i == 0; --p)
            for (int q = p + 1; q <= n_; ++q)
                if (w(q) < w(p)) {
                    i = p;
                    break;
                }
        for (int q = n_; q > i; --q)
            if (w(q) < w(i)) {
                j = q;
                break;
            }
        const Perm v = w.swapped(i, j);
        assert(v.length() == w.length() - 1);
        result = transition_locked(v) * Polynomial::var_x(n_, i);
        for (int h = 1; h < i; ++h) {
            const Perm up = v.swapped(h, i);
            if (up.length() == v.length() + 1) result += transition_locked(up);
        }
    }
    return trans_.emplace(w, std::move(result)).first->second;
}

const Polynomial& SchubertCache::double_schubert(const Perm& w) {
    std::lock_guard<std::mutex> lock(mu_);
    return double_locked(w);
}

const Polynomial& SchubertCache::double_locked(const Perm& w) {
    if (w.size() != n_) throw std::invalid_argument("permutation size mismatch");
    if (auto it = dbl_.find(w); it != dbl_.end()) return it->second;
    Polynomial result(n_);
    if (w == Perm::longest(n_)) {
        result = Polynomial::constant(n_, 1);
        for (int i = 1; i < n_; ++i)
            for (int j = 1; i + j <= n_; ++j)
                result *= Polynomial::var_x(n_, i) - Polynomial::var_y(n_, j);
    } else {
        int i = 0;
        for (int p = 1; p < n_; ++p)
            if (w(p) < w(p + 1)) {
                i = p;
                break;
            }
        result = divided_difference(double_locked(w.swapped(i, i + 1)), i);
    }
    return dbl_.emplace(w, std::move(result)).first->second;
}

void SchubertCache::warm_all() {
    for (const Perm& w : all_perms(n_)) schubert(w);
}

std::size_t SchubertCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return dd_.size();
}

bool verify_monk(SchubertCache& cache, const Perm& w, int k) {
    const int n = w.size();
    if (k < 1 || k > n - 1) throw std::invalid_argument("k out of range in verify_monk");
    bool applicable = false;
    for (int j = k + 1; j <= n; ++j)
        if (w(j) == n) applicable = true;
    if (!applicable)
        throw std::domain_error("Monk hypothesis fails: w(j) = n requires some j > k");
    Polynomial xsum(n);
    for (int i = 1; i <= k; ++i) xsum += Polynomial::var_x(n, i);
    Polynomial lhs = cache.schubert(w) * xsum;
    Polynomial rhs(n);
    for (const auto& [t, u] : k_covers_up(w, k)) rhs += cache.schubert(u);
    return lhs == rhs;
}

bool verify_pieri_stable(const Perm& u, int k, int d) {
    const int n = u.size();
    if (d < 0 || k < 1 || k > n - 1) throw std::invalid_argument("bad Pieri arguments");
    const int N = n + d;
    std::vector<int> v = u.one_line();
    for (int i = n + 1; i <= N; ++i) v.push_back(i);
    const Perm up(v);
    SchubertCache cache(N);
    Polynomial lhs = cache.schubert(up) * complete_homogeneous(N, d, k);
    Polynomial rhs(N);
    std::set<Perm> seen;
    for (const auto& chain : enumerate_increasing_k_chains(up, k)) {
        if (static_cast<int>(chain.perms.size()) != d + 1) continue;
        const Perm& w = chain.perms.back();
        bool fresh = seen.insert(w).second;
        assert(fresh);  // at most one increasing k-chain per endpoint
        (void)fresh;
        rhs += cache.schubert(w);
    }
    return lhs == rhs;
}

bool verify_cauchy(int n) {
    if (n < 1) throw std::invalid_argument("verify_cauchy requires n >= 1");
    Polynomial lhs = Polynomial::constant(n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            lhs *= Polynomial::var_x(n, i) - Polynomial::var_y(n, j);
    SchubertCache cache(n);
    const Perm w0 = Perm::longest(n);
    Polynomial rhs(n);
    for (const Perm& w : all_perms(n)) {
        // S_{w w0} with x_i replaced by -y_{n+1-i}.
        const Polynomial& g = cache.schubert(w.compose(w0));
        Polynomial sub(n);
        for (const auto& [e, c] : g.terms()) {
            Polynomial::Exp m(2 * n, 0);
            int deg = 0;
            for (int i = 1; i <= n; ++i) {
                m[n + (n + 1 - i) - 1] = e[i - 1];
                deg += e[i - 1];
            }
            sub.add_term(std::move(m), (deg % 2 == 0) ? c : -c);
        }
        rhs += cache.schubert(w) * sub;
    }
    return lhs == rhs;
}

}  // namespace schubert
