#include "schubert/algebra.hpp"

#include <stdexcept>

namespace schubert {

GroupAlgebraElement GroupAlgebraElement::basis(const Perm& w) {
    GroupAlgebraElement a(w.size());
    a.terms_.emplace(w, Polynomial::constant(w.size(), 1));
    return a;
}

Polynomial GroupAlgebraElement::coeff(const Perm& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Polynomial(n_) : it->second;
}

void GroupAlgebraElement::add_term(const Perm& w, const Polynomial& f) {
    if (f.is_zero()) return;
    if (w.size() != n_) throw std::invalid_argument("basis permutation size mismatch");
    auto [it, fresh] = terms_.emplace(w, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    for (const auto& [w, f] : o.terms_) add_term(w, f);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
    for (const auto& [w, f] : o.terms_) add_term(w, -f);
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Polynomial& f) const {
    GroupAlgebraElement out(n_);
    if (f.is_zero()) return out;
    for (const auto& [w, g] : terms_) out.add_term(w, g * f);
    return out;
}

GroupAlgebraElement fk_apply_d(const GroupAlgebraElement& a, int i, int j) {
    const int n = a.n();
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("d_{i,j} needs 1 <= i < j <= n");
    GroupAlgebraElement out(n);
    for (const auto& [w, f] : a.terms()) {
        const Perm img = w.swapped(i, j);
        if (img.length() == w.length() - 1) out.add_term(img, f);
    }
    return out;
}

GroupAlgebraElement fk_apply_dunkl(const GroupAlgebraElement& a, int i) {
    const int n = a.n();
    if (!(1 <= i && i <= n)) throw std::invalid_argument("theta index out of range");
    GroupAlgebraElement out(n);
    for (int j = 1; j < i; ++j) out -= fk_apply_d(a, j, i);
    for (int j = i + 1; j <= n; ++j) out += fk_apply_d(a, i, j);
    return out;
}

GroupAlgebraElement nc_apply_u(const GroupAlgebraElement& a, int i) {
    const int n = a.n();
    if (!(1 <= i && i <= n - 1)) throw std::invalid_argument("u index out of range");
    GroupAlgebraElement out(n);
    for (const auto& [w, f] : a.terms())
        if (w(i) < w(i + 1)) out.add_term(w.swapped(i, i + 1), f);
    return out;
}

namespace {

// a (.) (x_i + B_{i,j}) with B_{i,j} = d_{1,j} + ... + d_{i,j}.
GroupAlgebraElement apply_R_factor(const GroupAlgebraElement& a, int i, int j) {
    GroupAlgebraElement out = a.scaled(Polynomial::var_x(a.n(), i));
    for (int p = 1; p <= i; ++p) out += fk_apply_d(a, p, j);
    return out;
}

}  // namespace

GroupAlgebraElement compute_S_bpd(int n) {
    if (n < 1) throw std::invalid_argument("compute_S_bpd requires n >= 1");
    GroupAlgebraElement a = GroupAlgebraElement::basis(Perm::longest(n));
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i + 1; j <= n; ++j) a = apply_R_factor(a, i, j);
        // After R_1 ... R_i the support must keep a decreasing tail past i.
        for (const auto& [w, f] : a.terms())
            if (!has_decreasing_tail(w, i))
                throw std::logic_error("compute_S_bpd: support escapes S_n^{k v}");
    }
    return a;
}

GroupAlgebraElement compute_S_bpd_commutative(int n) {
    std::vector<std::pair<int, int>> order;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n; ++j) order.push_back({i, j});
    return compute_S_bpd_commutative(n, order);
}

GroupAlgebraElement compute_S_bpd_commutative(int n,
                                              const std::vector<std::pair<int, int>>& order) {
    if (n < 1) throw std::invalid_argument("compute_S_bpd_commutative requires n >= 1");
    if (static_cast<int>(order.size()) != n * (n - 1) / 2)
        throw std::invalid_argument("factor order must cover all pairs i < j");
    GroupAlgebraElement a = GroupAlgebraElement::basis(Perm::longest(n));
    for (const auto& [i, j] : order) {
        if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("bad factor pair");
        a = a.scaled(Polynomial::var_x(n, i)) - fk_apply_dunkl(a, j);
    }
    return a;
}

GroupAlgebraElement compute_S_pd(int n) {
    if (n < 1) throw std::invalid_argument("compute_S_pd requires n >= 1");
    GroupAlgebraElement a = GroupAlgebraElement::basis(Perm::identity(n));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = n - 1; j >= i; --j)
            a += nc_apply_u(a, j).scaled(Polynomial::var_x(n, i));
    return a;
}

GroupAlgebraElement eval_schubert_at_neg_dunkl(SchubertCache& cache, const Perm& w) {
    const int n = cache.n();
    if (w.size() != n) throw std::invalid_argument("permutation size mismatch");
    const Polynomial& f = cache.schubert(w);
    const GroupAlgebraElement start = GroupAlgebraElement::basis(Perm::longest(n));
    GroupAlgebraElement out(n);
    for (const auto& [e, c] : f.terms()) {
        GroupAlgebraElement term = start;
        int degree = 0;
        for (int i = 1; i <= n; ++i) {
            for (int rep = 0; rep < e[i - 1]; ++rep) {
                term = fk_apply_dunkl(term, n + 1 - i);  // x_i -> -theta_{n+1-i}
                ++degree;
            }
        }
        Polynomial scalar = Polynomial::constant(n, (degree % 2 == 0) ? c : -c);
        out += term.scaled(scalar);
    }
    return out;
}

bool check_dd_intertwiner(int n) {
    const GroupAlgebraElement s = compute_S_bpd(n);
    for (int i = 1; i <= n - 1; ++i) {
        GroupAlgebraElement lhs(n);
        for (const auto& [w, f] : s.terms()) lhs.add_term(w, divided_difference(f, i));
        if (lhs != nc_apply_u(s, i)) return false;
    }
    return true;
}

}  // namespace schubert
