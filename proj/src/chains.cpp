#include "schubert/chains.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace schubert {

namespace {

// Positions (i < j) at which two permutations one step apart differ.
std::pair<int, int> arrow_positions(const Perm& u, const Perm& w) {
    int lo = 0, hi = 0;
    for (int p = 1; p <= u.size(); ++p) {
        if (u(p) != w(p)) {
            if (lo == 0) lo = p;
            else hi = p;
        }
    }
    if (hi == 0) throw std::domain_error("permutations do not differ by a transposition");
    return {lo, hi};
}

void require_k_cover(const Perm& u, const Perm& w, int k, const char* what) {
    if (!is_cover(u, w)) throw std::domain_error(std::string(what) + ": not a Bruhat cover");
    auto [i, j] = arrow_positions(u, w);
    if (!(i <= k && k < j))
        throw std::domain_error(std::string(what) + ": cover is not a k-cover");
}

bool is_k_cover(const Perm& u, const Perm& w, int k) {
    if (!is_cover(u, w)) return false;
    auto [i, j] = arrow_positions(u, w);
    return i <= k && k < j;
}

void validate_gamma(const std::vector<int>& gamma, int n) {
    if (static_cast<int>(gamma.size()) != n - 1)
        throw std::invalid_argument("gamma must have length n-1");
    std::vector<char> seen(n, 0);
    for (int g : gamma) {
        if (g < 1 || g > n - 1 || seen[g])
            throw std::invalid_argument("gamma must be a permutation of [n-1]");
        seen[g] = 1;
    }
}

}  // namespace

std::vector<int> chain_weight(const BruhatChain& c) {
    if (c.perms.empty()) throw std::invalid_argument("empty chain");
    std::vector<int> wt;
    for (std::size_t i = 0; i + 1 < c.perms.size(); ++i) {
        if (!bruhat_leq(c.perms[i], c.perms[i + 1]))
            throw std::domain_error("chain_weight: not an upward Bruhat chain");
        wt.push_back(c.perms[i + 1].length() - c.perms[i].length());
    }
    return wt;
}

namespace {

bool search_increasing(const Perm& cur, const Perm& target, int k, int last_small,
                       std::vector<Perm>& path) {
    if (cur == target) return true;
    for (const auto& [t, q] : k_covers_up(cur, k)) {
        const int small = cur(t.i);
        if (small <= last_small) continue;
        if (!bruhat_leq(q, target)) continue;
        path.push_back(q);
        if (search_increasing(q, target, k, small, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<BruhatChain> find_increasing_k_chain(const Perm& u, const Perm& w, int k) {
    if (u.size() != w.size()) throw std::invalid_argument("size mismatch");
    if (k < 1 || k > u.size() - 1) throw std::invalid_argument("k out of range");
    if (!bruhat_leq(u, w)) return std::nullopt;
    std::vector<Perm> path{u};
    if (!search_increasing(u, w, k, 0, path)) return std::nullopt;
    BruhatChain c;
    c.perms = std::move(path);
    c.labels.assign(c.perms.size() - 1, k);
    return c;
}

namespace {

void collect_increasing(const Perm& cur, int k, int last_small, std::vector<Perm>& path,
                        std::vector<BruhatChain>* chains, std::vector<Perm>* endpoints) {
    if (chains) {
        BruhatChain c;
        c.perms = path;
        c.labels.assign(path.size() - 1, k);
        chains->push_back(std::move(c));
    }
    if (endpoints) endpoints->push_back(cur);
    for (const auto& [t, q] : k_covers_up(cur, k)) {
        const int small = cur(t.i);
        if (small <= last_small) continue;
        path.push_back(q);
        collect_increasing(q, k, small, path, chains, endpoints);
        path.pop_back();
    }
}

// Endpoints of all increasing k-chains from u; distinct, since at most
// one increasing k-chain joins two fixed permutations.
std::vector<Perm> increasing_endpoints(const Perm& u, int k) {
    std::vector<Perm> endpoints;
    std::vector<Perm> path{u};
    collect_increasing(u, k, 0, path, nullptr, &endpoints);
    return endpoints;
}

}  // namespace

std::vector<BruhatChain> enumerate_increasing_k_chains(const Perm& u, int k) {
    if (k < 1 || k > u.size() - 1) throw std::invalid_argument("k out of range");
    std::vector<BruhatChain> chains;
    std::vector<Perm> path{u};
    collect_increasing(u, k, 0, path, &chains, nullptr);
    return chains;
}

bool is_compatible(const BruhatChain& c, const std::vector<int>& ks) {
    if (ks.size() + 1 != c.perms.size())
        throw std::invalid_argument("label sequence length must be segments of the chain");
    for (std::size_t i = 0; i < ks.size(); ++i)
        if (!find_increasing_k_chain(c.perms[i], c.perms[i + 1], ks[i]))
            return false;
    return true;
}

namespace {

void extend_compatible(const Perm& w0, const std::vector<int>& gamma, std::size_t seg,
                       std::vector<Perm>& entries, std::vector<BruhatChain>& out) {
    if (seg == gamma.size()) {
        if (entries.back() == w0) {
            BruhatChain c;
            c.perms = entries;
            c.labels = gamma;
            out.push_back(std::move(c));
        }
        return;
    }
    for (const Perm& v : increasing_endpoints(entries.back(), gamma[seg])) {
        entries.push_back(v);
        extend_compatible(w0, gamma, seg + 1, entries, out);
        entries.pop_back();
    }
}

}  // namespace

std::vector<BruhatChain> enumerate_compatible_chains(const Perm& w, const std::vector<int>& gamma) {
    const int n = w.size();
    validate_gamma(gamma, n);
    std::vector<BruhatChain> out;
    std::vector<Perm> entries{w};
    extend_compatible(Perm::longest(n), gamma, 0, entries, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> gamma_exponent(const BruhatChain& c, const std::vector<int>& gamma) {
    const int n = c.perms.empty() ? 0 : c.perms[0].size();
    if (c.perms.size() != gamma.size() + 1)
        throw std::invalid_argument("chain/gamma length mismatch");
    validate_gamma(gamma, n);
    std::vector<int> exps(n - 1, 0);
    for (std::size_t seg = 0; seg < gamma.size(); ++seg) {
        if (!find_increasing_k_chain(c.perms[seg], c.perms[seg + 1], gamma[seg]))
            throw std::domain_error("chain is not compatible with gamma");
        const int len = c.perms[seg + 1].length() - c.perms[seg].length();
        exps[gamma[seg] - 1] = (n - gamma[seg]) - len;
    }
    return exps;
}

std::tuple<Perm, int, int> lenart_local_move(const Perm& a, const Perm& b, const Perm& c,
                                             int k1, int k2) {
    require_k_cover(a, b, k1, "lenart_local_move(a,b)");
    require_k_cover(b, c, k2, "lenart_local_move(b,c)");
    // The interval [a, c] has exactly two midpoints; find the other one.
    std::optional<Perm> other;
    int midpoints = 0;
    for (const auto& [t, m] : covers_up(a)) {
        if (!is_cover(m, c)) continue;
        ++midpoints;
        if (m != b) other = m;
    }
    if (midpoints != 2 || !other)
        throw std::logic_error("length-2 Bruhat interval without two midpoints");
    if (is_k_cover(a, *other, k2) && is_k_cover(*other, c, k1))
        return {*other, k2, k1};
    if (!(is_k_cover(a, b, k2) && is_k_cover(b, c, k1)))
        throw std::logic_error("local move: neither midpoint admits the swapped labels");
    // When the labels are (k, 1), both arrows start at position 1, the move
    // keeps b, and c has a decreasing tail past k1, the far positions must
    // be adjacent and the far values consecutive.
    if (k2 == 1 && has_decreasing_tail(c, k1)) {
        auto [p1, q1] = arrow_positions(a, b);
        auto [p2, q2] = arrow_positions(b, c);
        if (p1 == 1 && p2 == 1 && q2 > k1) {
            if (!(c(q2) == c(q1) + 1 && q2 == q1 - 1))
                throw std::logic_error("Case 5B invariant violated in local move");
        }
    }
    return {b, k2, k1};
}

std::pair<BruhatChain, BruhatChain> growth(int k1, int k2, const BruhatChain& c1,
                                           const BruhatChain& c2) {
    if (c1.perms.empty() || c2.perms.empty()) throw std::invalid_argument("empty chain");
    if (c1.perms.back() != c2.perms.front())
        throw std::domain_error("growth: chains do not share a junction");
    for (std::size_t i = 0; i + 1 < c1.perms.size(); ++i)
        require_k_cover(c1.perms[i], c1.perms[i + 1], k1, "growth(c1)");
    for (std::size_t i = 0; i + 1 < c2.perms.size(); ++i)
        require_k_cover(c2.perms[i], c2.perms[i + 1], k2, "growth(c2)");

    const std::size_t len1 = c1.perms.size() - 1, len2 = c2.perms.size() - 1;
    std::vector<Perm> perms = c1.perms;
    perms.insert(perms.end(), c2.perms.begin() + 1, c2.perms.end());
    std::vector<int> labels(len1, k1);
    labels.insert(labels.end(), len2, k2);

    if (k1 != k2) {
        for (;;) {
            std::size_t idx = labels.size();
            for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
                if (labels[i] == k1 && labels[i + 1] == k2) {
                    idx = i;
                    break;
                }
            }
            if (idx == labels.size()) break;
            auto [mid, l1, l2] =
                lenart_local_move(perms[idx], perms[idx + 1], perms[idx + 2], k1, k2);
            perms[idx + 1] = mid;
            labels[idx] = l1;
            labels[idx + 1] = l2;
        }
    }

    BruhatChain out2, out1;
    out2.perms.assign(perms.begin(), perms.begin() + len2 + 1);
    out2.labels.assign(len2, k2);
    out1.perms.assign(perms.begin() + len2, perms.end());
    out1.labels.assign(len1, k1);
    return {out2, out1};
}

std::tuple<Perm, Perm, Perm> growth_triple(const Perm& u, const Perm& v, const Perm& w,
                                           int k1, int k2) {
    auto c1 = find_increasing_k_chain(u, v, k1);
    if (!c1) throw std::domain_error("growth_triple: no increasing k1-chain from u to v");
    auto c2 = find_increasing_k_chain(v, w, k2);
    if (!c2) throw std::domain_error("growth_triple: no increasing k2-chain from v to w");
    auto [o2, o1] = growth(k1, k2, *c1, *c2);
    return {u, o2.perms.back(), w};
}

namespace {

void require_chain_shape(const BruhatChain& c, const std::vector<int>& gamma, const char* what) {
    if (c.perms.empty()) throw std::invalid_argument("empty chain");
    const int n = c.perms[0].size();
    if (static_cast<int>(c.perms.size()) != n)
        throw std::domain_error(std::string(what) + ": chain must have n entries");
    if (c.perms.back() != Perm::longest(n))
        throw std::domain_error(std::string(what) + ": chain must end at w0");
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (!find_increasing_k_chain(c.perms[i], c.perms[i + 1], gamma[i]))
            throw std::domain_error(std::string(what) + ": chain is not compatible");
}

}  // namespace

BruhatChain flip(const BruhatChain& c) {
    const int n = c.perms.empty() ? 0 : c.perms[0].size();
    std::vector<int> gamma(n - 1);
    for (int i = 0; i < n - 1; ++i) gamma[i] = n - 1 - i;
    require_chain_shape(c, gamma, "flip");
    std::vector<Perm> perms = c.perms;
    for (;;) {
        int i = 0;
        for (int p = 1; p <= n - 1; ++p)
            if (gamma[p - 1] != p) {
                i = p;
                break;
            }
        if (i == 0) break;
        int a = 0;
        for (int p = 1; p <= n - 1; ++p)
            if (gamma[p - 1] == i) a = p;
        auto [u, vp, w] = growth_triple(perms[a - 2], perms[a - 1], perms[a],
                                        gamma[a - 2], gamma[a - 1]);
        perms[a - 1] = vp;
        std::swap(gamma[a - 2], gamma[a - 1]);
    }
    BruhatChain out;
    out.perms = std::move(perms);
    out.labels = gamma;
    return out;
}

BruhatChain unflip(const BruhatChain& c) {
    const int n = c.perms.empty() ? 0 : c.perms[0].size();
    std::vector<int> gamma(n - 1);
    for (int i = 0; i < n - 1; ++i) gamma[i] = i + 1;
    require_chain_shape(c, gamma, "unflip");
    std::vector<Perm> perms = c.perms;
    for (;;) {
        int j = 0;
        for (int p = n - 1; p >= 2; --p)
            if (gamma[p - 2] < gamma[p - 1]) {
                j = p;
                break;
            }
        if (j == 0) break;
        auto [u, vp, w] = growth_triple(perms[j - 2], perms[j - 1], perms[j],
                                        gamma[j - 2], gamma[j - 1]);
        perms[j - 1] = vp;
        std::swap(gamma[j - 2], gamma[j - 1]);
    }
    BruhatChain out;
    out.perms = std::move(perms);
    out.labels = gamma;
    return out;
}

Polynomial double_weight(const BruhatChain& c, const std::vector<int>& gamma) {
    const int n = c.perms.empty() ? 0 : c.perms[0].size();
    if (c.perms.size() != gamma.size() + 1)
        throw std::invalid_argument("chain/gamma length mismatch");
    validate_gamma(gamma, n);
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (!find_increasing_k_chain(c.perms[i], c.perms[i + 1], gamma[i]))
            throw std::domain_error("double_weight: chain is not compatible with gamma");
    Polynomial out = Polynomial::constant(n, 1);
    for (std::size_t seg = 0; seg < gamma.size(); ++seg) {
        const Perm& wi = c.perms[seg];
        const Perm& wn = c.perms[seg + 1];
        const int g = gamma[seg];
        for (int t = g + 1; t <= n; ++t)
            if (wi(t) == wn(t))
                out *= Polynomial::var_x(n, g) - Polynomial::var_y(n, wi(t));
    }
    return out;
}

}  // namespace schubert
