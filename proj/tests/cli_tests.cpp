// Exercises the schub binary end to end: every subcommand, the documented
// exit codes, and the JSON wire formats.

#include <cstdio>
#include <unistd.h>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "schubert/bumpless.hpp"
#include "schubert/chains.hpp"
#include "schubert/json_io.hpp"
#include "schubert/perm.hpp"

namespace {

int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& input = "") {
    const std::string dir = std::string("/tmp/schub_cli_") + std::to_string(getpid());
    const std::string in_path = dir + ".in", out_path = dir + ".out";
    {
        FILE* f = fopen(in_path.c_str(), "w");
        fwrite(input.data(), 1, input.size(), f);
        fclose(f);
    }
    const std::string cmd = std::string(SCHUB_CLI_PATH) + " " + args + " < " + in_path + " > " +
                            out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    FILE* f = fopen(out_path.c_str(), "r");
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, got);
    fclose(f);
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

int main() {
    using namespace schubert;

    // Enumeration counts.
    expect(strip(run("enum pd --perm 21 --format count").out) == "1", "enum pd 21 count");
    {
        const RunResult pd = run("enum pd --perm 25143 --format count");
        const RunResult bpd = run("enum bpd --perm 25143 --format count");
        const RunResult hpd = run("enum hpd --perm 25143 --tau PBBPB --format count");
        expect(pd.exit_code == 0 && bpd.exit_code == 0 && hpd.exit_code == 0,
               "enum exit codes");
        expect(strip(pd.out) == "8" && strip(bpd.out) == strip(pd.out) &&
                   strip(hpd.out) == strip(pd.out),
               "pd, bpd and hpd counts all equal the Schubert evaluation at 1");
    }
    expect(strip(run("enum chains --perm 321 --gamma 2,1 --format count").out) == "1",
           "enum chains count for the longest element");
    expect(run("enum ft --perm 321 --format count").exit_code == 0, "enum ft");
    {
        const RunResult r = run("enum bpd --perm 21 --format ascii");
        expect(r.exit_code == 0 && r.out == ".r\nr+\n\n", "enum bpd ascii rendering");
    }
    expect(run("enum pd --perm 11 --format count").exit_code == 2, "malformed perm exits 2");
    expect(run("enum chains --perm 321 --format count").exit_code == 2,
           "enum chains without gamma exits 2");

    // Schubert polynomial routes agree.
    {
        const RunResult dd = run("schubert --perm 132 --method dd");
        expect(strip(dd.out) == R"({"x1":"1","x2":"1"})", "schubert 132 dd JSON");
        const RunResult chain = run("schubert --perm 25143 --method chain --gamma 1,4,2,3");
        const RunResult dd2 = run("schubert --perm 25143 --method dd");
        expect(strip(chain.out) == strip(dd2.out), "chain route equals divided differences");
        expect(strip(run("schubert --perm 12 --method bpd").out) == R"({"1":"1"})",
               "schubert 12 bpd JSON");
        expect(run("schubert --perm 132 --method chain").exit_code == 2,
               "method chain without gamma exits 2");
    }

    // map flip reproduces the printed example.
    {
        const std::string input = R"(["2,1,4,3","2,3,4,1","2,4,3,1","4,3,2,1"])";
        const RunResult r = run("map flip", input);
        expect(r.exit_code == 0, "map flip exit");
        const json j = json::parse(r.out);
        const BruhatChain c = chain_from_json(j);
        std::vector<Perm> want;
        for (auto v : {std::vector<int>{2, 1, 4, 3}, {4, 1, 3, 2}, {4, 3, 1, 2}, {4, 3, 2, 1}})
            want.push_back(Perm(v));
        expect(c.perms == want, "map flip output chain");
        // Out-of-domain input exits 1.
        const std::string bad = R"(["2,3,4,1","3,4,2,1","4,3,2,1","4,3,2,1"])";
        expect(run("map flip", bad).exit_code == 1, "map flip incompatible chain exits 1");
        expect(run("map flip", "not json").exit_code == 2, "map flip bad JSON exits 2");
    }

    // map chain-bpd on the running six-row example, both directions.
    {
        BruhatChain chain;
        for (auto v : {std::vector<int>{2, 1, 6, 5, 3, 4}, {2, 1, 6, 5, 4, 3},
                       {3, 1, 6, 5, 4, 2}, {3, 5, 6, 4, 2, 1}, {4, 6, 5, 3, 2, 1},
                       {6, 5, 4, 3, 2, 1}})
            chain.perms.push_back(Perm(v));
        const BpdGrid d = chain_bpd_inverse(chain);
        const RunResult fwd = run("map chain-bpd", bpd_to_json(d).dump());
        expect(fwd.exit_code == 0 &&
                   chain_from_json(json::parse(fwd.out)).perms == chain.perms,
               "map chain-bpd forward");
        const RunResult back = run("map chain-bpd --inverse", json::parse(fwd.out).dump());
        expect(back.exit_code == 0 && bpd_from_json(json::parse(back.out)) == d,
               "map chain-bpd inverse");

        // phi then psi-inverse is chain_bpd.
        const RunResult ft = run("map phi", bpd_to_json(d).dump());
        expect(ft.exit_code == 0, "map phi");
        const RunResult c2 = run("map psi --inverse", ft.out);
        expect(c2.exit_code == 0 &&
                   chain_from_json(json::parse(c2.out)).perms == chain.perms,
               "map psi --inverse after phi recovers the chain");
    }

    // map growth on the printed two-chain example.
    {
        json in;
        in["k1"] = 2;
        in["k2"] = 3;
        in["chain1"] = json::parse(R"(["2,1,4,3","2,4,1,3","3,4,1,2"])");
        in["chain2"] = json::parse(R"(["3,4,1,2","3,4,2,1"])");
        const RunResult r = run("map growth", in.dump());
        expect(r.exit_code == 0, "map growth exit");
        const json j = json::parse(r.out);
        expect(chain_from_json(j.at("chain_k2")).perms ==
                   std::vector<Perm>{Perm({2, 1, 4, 3}), Perm({2, 3, 4, 1})},
               "map growth k2 chain");
        expect(chain_from_json(j.at("chain_k1")).perms ==
                   std::vector<Perm>{Perm({2, 3, 4, 1}), Perm({2, 4, 3, 1}), Perm({3, 4, 2, 1})},
               "map growth k1 chain");
    }

    // chain-tau round trip through the CLI.
    {
        const std::string tau = "PBB";
        const auto hs = enumerate_hpd(Perm({2, 3, 1}), tau);
        expect(!hs.empty(), "tau hybrid enumeration nonempty");
        const RunResult fwd = run("map chain-tau", hpd_to_json(hs[0]).dump());
        expect(fwd.exit_code == 0, "map chain-tau");
        const RunResult back = run("map chain-tau --inverse --tau " + tau, fwd.out);
        expect(back.exit_code == 0 && hpd_from_json(json::parse(back.out)) == hs[0],
               "map chain-tau --inverse");
        expect(run("map chain-tau --inverse", fwd.out).exit_code == 2,
               "chain-tau inverse without tau exits 2");
    }

    // verify: pass, fail code contract, and the documented case counts.
    {
        const RunResult r = run("verify theorem-4-2 --n 3");
        expect(r.exit_code == 0, "verify theorem-4-2 exits 0");
        const json j = json::parse(r.out);
        expect(j.at("cases").get<long long>() == 6, "theorem-4-2 at n=3 has 6 cases");
        expect(j.at("failures").empty(), "theorem-4-2 has no failures");
        const RunResult r2 = run("verify corollary-2-9 --n 2");
        expect(json::parse(r2.out).at("cases").get<long long>() == 2,
               "corollary-2-9 at n=2 has 2 cases");
        expect(run("verify no-such-check").exit_code == 2, "unknown check exits 2");
        const RunResult jobs = run("verify theorem-3-6 --n 4 --jobs 3");
        const RunResult seq = run("verify theorem-3-6 --n 4 --jobs 1");
        json a = json::parse(jobs.out), b = json::parse(seq.out);
        a.erase("elapsed_ms");
        b.erase("elapsed_ms");
        expect(a == b, "reports are identical across job counts");
    }

    if (g_failures == 0) {
        std::cout << "cli tests passed\n";
        return 0;
    }
    std::cout << g_failures << " cli test(s) failed\n";
    return 1;
}
