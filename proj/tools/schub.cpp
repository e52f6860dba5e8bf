// schub: enumeration, Schubert polynomial computation, bijection maps and
// the verification harness on one command line.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>

#include "schubert/algebra.hpp"
#include "schubert/bumpless.hpp"
#include "schubert/chains.hpp"
#include "schubert/hybrid.hpp"
#include "schubert/json_io.hpp"
#include "schubert/perm.hpp"
#include "schubert/pipedreams.hpp"
#include "schubert/poly.hpp"
#include "schubert/verify.hpp"

namespace {

using schubert::json;

std::vector<int> parse_gamma(const std::string& text) {
    std::vector<int> g;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) throw std::invalid_argument("bad gamma literal");
        g.push_back(std::stoi(piece));
    }
    return g;
}

std::string chain_ascii(const schubert::BruhatChain& c) {
    std::string s;
    for (std::size_t i = 0; i < c.perms.size(); ++i) {
        if (i > 0) {
            if (!c.labels.empty()) s += " -" + std::to_string(c.labels[i - 1]) + "-> ";
            else s += " -> ";
        }
        s += schubert::format_perm(c.perms[i]);
    }
    return s;
}

int cmd_enum(const std::string& kind, const std::string& perm_text, const std::string& tau,
             const std::string& gamma_text, const std::string& format) {
    using namespace schubert;
    const Perm w = parse_perm(perm_text);
    long long count = 0;
    auto emit = [&](const json& j, const std::string& ascii) {
        if (format == "count") ++count;
        else if (format == "ascii") std::cout << ascii << "\n";
        else std::cout << j.dump() << "\n";
    };
    if (kind == "pd") {
        for (const PdGrid& p : enumerate_pd(w)) emit(pd_to_json(p), render_pd(p));
    } else if (kind == "bpd") {
        for (const BpdGrid& d : enumerate_bpd(w)) emit(bpd_to_json(d), render_bpd(d));
    } else if (kind == "hpd") {
        if (tau.empty()) throw std::invalid_argument("enum hpd requires --tau");
        for (const HpdGrid& h : enumerate_hpd(w, tau)) emit(hpd_to_json(h), render_hpd(h));
    } else if (kind == "chains") {
        if (gamma_text.empty()) throw std::invalid_argument("enum chains requires --gamma");
        for (const BruhatChain& c : enumerate_compatible_chains(w, parse_gamma(gamma_text)))
            emit(chain_to_json(c), chain_ascii(c));
    } else if (kind == "ft") {
        for (const BpdGrid& d : enumerate_bpd(w)) {
            const FlaggedTableau t = phi(d);
            emit(ft_to_json(t), render_ft(t));
        }
    } else {
        throw std::invalid_argument("unknown enumeration kind: " + kind);
    }
    if (format == "count") std::cout << count << "\n";
    return 0;
}

int cmd_schubert(const std::string& perm_text, const std::string& method,
                 const std::string& gamma_text) {
    using namespace schubert;
    const Perm w = parse_perm(perm_text);
    const int n = w.size();
    Polynomial result(n);
    if (method == "dd") {
        SchubertCache cache(n);
        result = cache.schubert(w);
    } else if (method == "transition") {
        SchubertCache cache(n);
        result = cache.schubert_transition(w);
    } else if (method == "pd") {
        for (const PdGrid& p : enumerate_pd(w))
            result += Polynomial::x_monomial(n, analyze_pd(p).weight);
    } else if (method == "bpd") {
        for (const BpdGrid& d : enumerate_bpd(w))
            result += Polynomial::x_monomial(n, analyze_bpd(d).weight);
    } else if (method == "chain") {
        if (gamma_text.empty()) throw std::invalid_argument("--method chain requires --gamma");
        const std::vector<int> gamma = parse_gamma(gamma_text);
        for (const BruhatChain& c : enumerate_compatible_chains(w, gamma))
            result += Polynomial::x_monomial(n, gamma_exponent(c, gamma));
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }
    std::cout << schubert::poly_to_json(result).dump() << "\n";
    return 0;
}

int cmd_map(const std::string& name, bool inverse, const std::string& tau) {
    using namespace schubert;
    json input;
    try {
        input = json::parse(std::cin);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("stdin is not valid JSON: ") + e.what());
    }
    json output;
    if (name == "chain-pd") {
        output = inverse ? pd_to_json(chain_pd_inverse(chain_from_json(input)))
                         : chain_to_json(chain_pd(pd_from_json(input)));
    } else if (name == "chain-bpd") {
        output = inverse ? bpd_to_json(chain_bpd_inverse(chain_from_json(input)))
                         : chain_to_json(chain_bpd(bpd_from_json(input)));
    } else if (name == "chain-tau") {
        if (inverse) {
            if (tau.empty()) throw std::invalid_argument("map chain-tau --inverse requires --tau");
            output = hpd_to_json(chain_tau_inverse(chain_from_json(input), tau));
        } else {
            output = chain_to_json(chain_tau(hpd_from_json(input)));
        }
    } else if (name == "flip") {
        output = chain_to_json(inverse ? unflip(chain_from_json(input))
                                       : flip(chain_from_json(input)));
    } else if (name == "unflip") {
        output = chain_to_json(inverse ? flip(chain_from_json(input))
                                       : unflip(chain_from_json(input)));
    } else if (name == "growth") {
        if (!input.is_object() || !input.contains("k1") || !input.contains("k2") ||
            !input.contains("chain1") || !input.contains("chain2"))
            throw std::invalid_argument("growth input needs k1, k2, chain1, chain2");
        const int k1 = input.at("k1").get<int>();
        const int k2 = input.at("k2").get<int>();
        auto [c2, c1] = growth(k1, k2, chain_from_json(input.at("chain1")),
                               chain_from_json(input.at("chain2")));
        output = json{{"k2", k2}, {"chain_k2", chain_to_json(c2)},
                      {"k1", k1}, {"chain_k1", chain_to_json(c1)}};
    } else if (name == "phi") {
        output = inverse ? bpd_to_json(chain_bpd_inverse(psi_inverse(ft_from_json(input))))
                         : ft_to_json(phi(bpd_from_json(input)));
    } else if (name == "psi") {
        output = inverse ? chain_to_json(psi_inverse(ft_from_json(input)))
                         : ft_to_json(psi(chain_from_json(input)));
    } else {
        throw std::invalid_argument("unknown map: " + name);
    }
    std::cout << output.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& check, int n, int jobs) {
    using namespace schubert;
    if (!verify::known_check(check)) {
        std::cerr << "unknown check: " << check << "\nknown checks:";
        for (const auto& name : verify::check_names()) std::cerr << " " << name;
        std::cerr << "\n";
        return 2;
    }
    if (n <= 0) n = verify::default_n(check);
    const verify::Report rep = verify::run(check, n, jobs);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schubert-polynomial combinatorics: pipedreams, bumpless and hybrid "
                 "pipedreams, Bruhat chains, and a verification harness"};
    app.require_subcommand(1);

    std::string kind, perm, tau, gamma, format = "json", method = "dd", map_name, check;
    bool inverse = false;
    int n = 0, jobs = 1;

    CLI::App* enum_cmd = app.add_subcommand("enum", "Enumerate objects attached to a permutation");
    enum_cmd->add_option("kind", kind, "pd | bpd | hpd | chains | ft")->required();
    enum_cmd->add_option("--perm", perm, "one-line permutation, e.g. 2,5,1,4,3 or 25143")
        ->required();
    enum_cmd->add_option("--tau", tau, "row type string over {P,B} (hpd)");
    enum_cmd->add_option("--gamma", gamma, "comma-separated permutation of [n-1] (chains)");
    enum_cmd->add_option("--format", format, "json | ascii | count")
        ->check(CLI::IsMember({"json", "ascii", "count"}));

    CLI::App* schubert_cmd = app.add_subcommand("schubert", "Compute a Schubert polynomial");
    schubert_cmd->add_option("--perm", perm, "one-line permutation")->required();
    schubert_cmd->add_option("--method", method, "dd | transition | pd | bpd | chain")
        ->check(CLI::IsMember({"dd", "transition", "pd", "bpd", "chain"}));
    schubert_cmd->add_option("--gamma", gamma, "required for --method chain");

    CLI::App* map_cmd = app.add_subcommand("map", "Apply a bijection to a JSON object on stdin");
    map_cmd->add_option("name", map_name,
                        "chain-pd | chain-bpd | chain-tau | flip | unflip | growth | phi | psi")
        ->required();
    map_cmd->add_flag("--inverse", inverse, "apply the inverse map");
    map_cmd->add_option("--tau", tau, "row type string (chain-tau --inverse)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
    verify_cmd->add_option("check", check, "check name, e.g. theorem-3-6")->required();
    verify_cmd->add_option("--n", n, "desk-scale size (defaults per check)");
    verify_cmd->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enum_cmd->parsed()) return cmd_enum(kind, perm, tau, gamma, format);
        if (schubert_cmd->parsed()) return cmd_schubert(perm, method, gamma);
        if (map_cmd->parsed()) return cmd_map(map_name, inverse, tau);
        if (verify_cmd->parsed()) return cmd_verify(check, n, jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
