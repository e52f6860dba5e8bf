#include "schubert/json_io.hpp"

#include <stdexcept>

namespace schubert {

namespace {

std::string monomial_key(const Polynomial::Exp& e, int width) {
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

json poly_to_json(const Polynomial& f) {
    // Leading term first: reverse lexicographic order on exponent vectors.
    json j = json::object();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        j[monomial_key(it->first, f.width())] = it->second.str();
    return j;
}

json chain_to_json(const BruhatChain& c) {
    json perms = json::array();
    for (const Perm& w : c.perms) perms.push_back(format_perm(w));
    if (c.labels.empty()) return perms;
    json j;
    j["perms"] = perms;
    j["labels"] = c.labels;
    return j;
}

BruhatChain chain_from_json(const json& j) {
    BruhatChain c;
    const json* perms = nullptr;
    if (j.is_array()) {
        perms = &j;
    } else if (j.is_object() && j.contains("perms")) {
        perms = &j.at("perms");
        if (j.contains("labels")) {
            for (const auto& l : j.at("labels")) c.labels.push_back(l.get<int>());
        }
    } else {
        throw std::invalid_argument("chain JSON must be an array or an object with \"perms\"");
    }
    for (const auto& p : *perms) c.perms.push_back(parse_perm(p.get<std::string>()));
    if (!c.labels.empty() && c.labels.size() + 1 != c.perms.size())
        throw std::invalid_argument("chain labels must have one entry per segment");
    return c;
}

namespace {

template <typename Tile>
struct TileNames {
    std::vector<std::pair<Tile, const char*>> names;
    const char* name(Tile t) const {
        for (const auto& [tile, s] : names)
            if (tile == t) return s;
        throw std::logic_error("unnamed tile");
    }
    Tile tile(const std::string& s) const {
        for (const auto& [tile, n] : names)
            if (s == n) return tile;
        throw std::invalid_argument("unknown tile name: " + s);
    }
};

const TileNames<PdTile> kPdNames{{{PdTile::Cross, "cross"},
                                  {PdTile::Bump, "bump"},
                                  {PdTile::Elbow, "elbow"}}};

const TileNames<BpdTile> kBpdNames{{{BpdTile::Blank, "blank"},
                                    {BpdTile::H, "h"},
                                    {BpdTile::V, "v"},
                                    {BpdTile::Cross, "cross"},
                                    {BpdTile::TurnES, "es"},
                                    {BpdTile::TurnNW, "nw"}}};

const TileNames<HpdTile> kHpdNames{{{HpdTile::Blank, "blank"},
                                    {HpdTile::H, "h"},
                                    {HpdTile::V, "v"},
                                    {HpdTile::Cross, "cross"},
                                    {HpdTile::Bump, "bump"},
                                    {HpdTile::TurnWN, "wn"},
                                    {HpdTile::TurnSE, "se"},
                                    {HpdTile::TurnEN, "en"},
                                    {HpdTile::TurnSW, "sw"}}};

int grid_size(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("grid JSON must carry \"n\" and \"rows\"");
    return j.at("n").get<int>();
}

}  // namespace

json pd_to_json(const PdGrid& g) {
    json rows = json::array();
    for (int r = 1; r <= g.n(); ++r) {
        json row = json::array();
        for (int c = 1; c <= g.n() + 1 - r; ++c) row.push_back(kPdNames.name(g.at(r, c)));
        rows.push_back(row);
    }
    return json{{"n", g.n()}, {"rows", rows}};
}

PdGrid pd_from_json(const json& j) {
    const int n = grid_size(j);
    PdGrid g(n);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("pd needs n rows");
    for (int r = 1; r <= n; ++r) {
        const auto& row = rows[r - 1];
        if (static_cast<int>(row.size()) != n + 1 - r)
            throw std::invalid_argument("pd row has the wrong length");
        for (int c = 1; c <= n + 1 - r; ++c) {
            PdTile t = kPdNames.tile(row[c - 1].get<std::string>());
            if (c == n + 1 - r) {
                if (t != PdTile::Elbow)
                    throw std::invalid_argument("pd row must end with the forced elbow");
            } else {
                if (t == PdTile::Elbow)
                    throw std::invalid_argument("pd elbow off the antidiagonal");
                g.set(r, c, t);
            }
        }
    }
    return g;
}

json bpd_to_json(const BpdGrid& g) {
    json rows = json::array();
    for (int r = 1; r <= g.n(); ++r) {
        json row = json::array();
        for (int c = 1; c <= g.n(); ++c) row.push_back(kBpdNames.name(g.at(r, c)));
        rows.push_back(row);
    }
    return json{{"n", g.n()}, {"rows", rows}};
}

BpdGrid bpd_from_json(const json& j) {
    const int n = grid_size(j);
    BpdGrid g(n);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("bpd needs n rows");
    for (int r = 1; r <= n; ++r) {
        const auto& row = rows[r - 1];
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("bpd row has the wrong length");
        for (int c = 1; c <= n; ++c) g.set(r, c, kBpdNames.tile(row[c - 1].get<std::string>()));
    }
    return g;
}

json hpd_to_json(const HpdGrid& g) {
    json rows = json::array();
    for (int r = 1; r <= g.n(); ++r) {
        json row = json::array();
        for (int c = 1; c <= g.n(); ++c) row.push_back(kHpdNames.name(g.at(r, c)));
        rows.push_back(row);
    }
    return json{{"n", g.n()}, {"tau", g.tau()}, {"labels", row_labels(g.tau())}, {"rows", rows}};
}

HpdGrid hpd_from_json(const json& j) {
    const int n = grid_size(j);
    if (!j.contains("tau")) throw std::invalid_argument("hpd JSON must carry \"tau\"");
    const std::string tau = j.at("tau").get<std::string>();
    if (static_cast<int>(tau.size()) != n) throw std::invalid_argument("tau length must equal n");
    HpdGrid g(tau);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("hpd needs n rows");
    for (int r = 1; r <= n; ++r) {
        const auto& row = rows[r - 1];
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("hpd row has the wrong length");
        for (int c = 1; c <= n; ++c) g.set(r, c, kHpdNames.tile(row[c - 1].get<std::string>()));
    }
    return g;
}

json ft_to_json(const FlaggedTableau& t) {
    json rows = json::array();
    for (int r = 1; r <= t.n() - 1; ++r) {
        json row = json::array();
        for (int c = 1; c <= t.n() - r; ++c) row.push_back(t.at(r, c));
        rows.push_back(row);
    }
    return json{{"n", t.n()}, {"rows", rows}};
}

FlaggedTableau ft_from_json(const json& j) {
    const int n = grid_size(j);
    FlaggedTableau t(n);
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n - 1)
        throw std::invalid_argument("flagged tableau needs n-1 rows");
    for (int r = 1; r <= n - 1; ++r) {
        const auto& row = rows[r - 1];
        if (static_cast<int>(row.size()) != n - r)
            throw std::invalid_argument("flagged tableau row has the wrong length");
        for (int c = 1; c <= n - r; ++c) t.set(r, c, row[c - 1].get<int>());
    }
    return t;
}

json algebra_to_json(const GroupAlgebraElement& a) {
    json j = json::object();
    for (const auto& [w, f] : a.terms()) j[format_perm(w)] = poly_to_json(f);
    return j;
}

}  // namespace schubert
