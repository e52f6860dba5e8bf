#include "schubert/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace schubert {

Perm::Perm(std::vector<int> one_line) : v_(std::move(one_line)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int x : v_) {
        if (x < 1 || x > n || seen[x])
            throw std::invalid_argument("not a rearrangement of 1..n");
        seen[x] = 1;
    }
}

Perm Perm::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    Perm p;
    p.v_ = std::move(v);
    return p;
}

Perm Perm::longest(int n) {
    if (n < 1) throw std::invalid_argument("longest_element requires n >= 1");
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    Perm p;
    p.v_ = std::move(v);
    return p;
}

int Perm::length() const {
    int n = size(), inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (v_[i] > v_[j]) ++inv;
    return inv;
}

Perm Perm::inverse() const {
    Perm p;
    p.v_.resize(v_.size());
    for (int i = 0; i < size(); ++i) p.v_[v_[i] - 1] = i + 1;
    return p;
}

Perm Perm::compose(const Perm& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("size mismatch in compose");
    Perm p;
    p.v_.resize(v_.size());
    for (int i = 0; i < size(); ++i) p.v_[i] = v_[rhs.v_[i] - 1];
    return p;
}

Perm Perm::swapped(int i, int j) const {
    if (i < 1 || j < 1 || i > size() || j > size() || i == j)
        throw std::invalid_argument("bad transposition positions");
    Perm p = *this;
    std::swap(p.v_[i - 1], p.v_[j - 1]);
    return p;
}

Transposition::Transposition(int i_, int j_) : i(i_), j(j_) {
    if (!(1 <= i && i < j)) throw std::invalid_argument("transposition needs 1 <= i < j");
}

bool is_cover(const Perm& u, const Perm& w) {
    if (u.size() != w.size()) return false;
    int lo = 0, hi = 0, diffs = 0;
    for (int p = 1; p <= u.size(); ++p) {
        if (u(p) != w(p)) {
            ++diffs;
            if (diffs == 1) lo = p;
            else hi = p;
        }
    }
    if (diffs != 2) return false;
    if (u(lo) != w(hi) || u(hi) != w(lo)) return false;
    if (u(lo) > u(hi)) return false;
    for (int p = lo + 1; p < hi; ++p)
        if (u(lo) < u(p) && u(p) < u(hi)) return false;
    return true;
}

bool bruhat_leq(const Perm& u, const Perm& w) {
    if (u.size() != w.size()) throw std::invalid_argument("size mismatch in bruhat_leq");
    const int n = u.size();
    // For every i, j: #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}.
    std::vector<int> cu(n + 2, 0), cw(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = u(i); j >= 1; --j) ++cu[j];
        for (int j = w(i); j >= 1; --j) ++cw[j];
        for (int j = 1; j <= n; ++j)
            if (cu[j] > cw[j]) return false;
    }
    return true;
}

std::vector<std::pair<Transposition, Perm>> covers_up(const Perm& u) {
    std::vector<std::pair<Transposition, Perm>> out;
    const int n = u.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (u(i) >= u(j)) continue;
            bool blocked = false;
            for (int p = i + 1; p < j && !blocked; ++p)
                if (u(i) < u(p) && u(p) < u(j)) blocked = true;
            if (!blocked) out.emplace_back(Transposition(i, j), u.swapped(i, j));
        }
    }
    return out;
}

std::vector<std::pair<Transposition, Perm>> k_covers_up(const Perm& u, int k) {
    const int n = u.size();
    if (k < 1 || k > n - 1) throw std::invalid_argument("k out of range in k_covers_up");
    std::vector<std::pair<Transposition, Perm>> out;
    for (int i = 1; i <= k; ++i) {
        for (int j = k + 1; j <= n; ++j) {
            if (u(i) >= u(j)) continue;
            bool blocked = false;
            for (int p = i + 1; p < j && !blocked; ++p)
                if (u(i) < u(p) && u(p) < u(j)) blocked = true;
            if (!blocked) out.emplace_back(Transposition(i, j), u.swapped(i, j));
        }
    }
    return out;
}

bool has_decreasing_tail(const Perm& w, int k) {
    const int n = w.size();
    if (k < 0 || k > n - 1) throw std::invalid_argument("k out of range in has_decreasing_tail");
    for (int p = k + 1; p < n; ++p)
        if (w(p) < w(p + 1)) return false;
    return true;
}

bool has_antidiagonal_head(const Perm& w, int k) {
    const int n = w.size();
    if (k < 1 || k > n) throw std::invalid_argument("k out of range in has_antidiagonal_head");
    for (int i = 1; i <= k - 1; ++i)
        if (w(i) != n + 1 - i) return false;
    return true;
}

Perm complete_decreasing_tail(const std::vector<int>& head, int n) {
    std::vector<char> used(n + 1, 0);
    std::vector<int> v = head;
    for (int x : head) {
        if (x < 1 || x > n || used[x]) throw std::invalid_argument("bad head in complete_decreasing_tail");
        used[x] = 1;
    }
    for (int x = n; x >= 1; --x)
        if (!used[x]) v.push_back(x);
    return Perm(std::move(v));
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Perm parse_perm(std::string_view text) {
    std::vector<int> v;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation literal");
            v.push_back(c - '0');
        }
    } else {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string piece(text.substr(pos, next == std::string_view::npos ? next : next - pos));
            if (piece.empty()) throw std::invalid_argument("bad permutation literal");
            size_t used = 0;
            int x = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument("bad permutation literal");
            v.push_back(x);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    }
    if (v.empty()) throw std::invalid_argument("empty permutation literal");
    return Perm(std::move(v));
}

std::string format_perm(const Perm& w) {
    std::string s;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(w(i));
    }
    return s;
}

}  // namespace schubert
