#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mvh/characters.hpp"
#include "mvh/hurwitz.hpp"
#include "mvh/marinovafa.hpp"
#include "mvh/partitions.hpp"
#include "mvh/pseries.hpp"

namespace {

using namespace mvh;

Partition parse_parts(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

VerificationReport run_cp_lemma(int max_d) {
    VerificationReport rep;
    rep.suite = "cp-lemma";
    for (int d = 1; d <= max_d; ++d) {
        for (int l = 1; l <= d; ++l) {
            std::string id =
                "cutpower/d=" + std::to_string(d) + "/l=" + std::to_string(l);
            try {
                cut_power(d, l);
                rep.add(id, true);
            } catch (const std::exception& e) {
                rep.add(id, false, e.what());
            }
        }
    }
    return rep;
}

struct Suite {
    std::string name;
    std::function<VerificationReport(bool)> run;  // quick bounds when true
};

std::vector<Suite> registry() {
    return {
        {"vhook", [](bool q) { return check_vhook(q ? 6 : 8); }},
        {"prop-f",
         [](bool q) {
             VerificationReport r;
             r.suite = "prop-f";
             for (int d = 1; d <= (q ? 8 : 10); ++d) {
                 auto fr = verify_prop_f(d);
                 std::string w;
                 for (const auto& c : fr.cases)
                     if (!c.pass) {
                         w = c.id + (c.witness.empty() ? "" : ": " + c.witness);
                         break;
                     }
                 r.add("f/d=" + std::to_string(d), fr.ok(), w);
             }
             return r;
         }},
        {"prop-cj",
         [](bool q) {
             VerificationReport r;
             r.suite = "prop-cj";
             int maxd = q ? 6 : 8;
             r.merge(verify_operator_neighbors(maxd));
             for (int d = 1; d <= maxd; ++d) {
                 for (const auto& nu : enumerate_partitions(d)) {
                     auto c = central_character_action_check(nu);
                     r.add("action/nu=" + nu.str(), c.ok(),
                           c.ok() ? "" : c.cases.front().witness);
                 }
             }
             return r;
         }},
        {"mv-cutjoin",
         [](bool q) { return q ? check_cutjoin_mv(4, 3) : check_cutjoin_mv(6, 4); }},
        {"mv-init", [](bool q) { return check_rinit(q ? 4 : 6); }},
        {"mv-evidence",
         [](bool q) {
             VerificationReport r;
             r.suite = "mv-evidence";
             for (int n = 1; n <= (q ? 6 : 8); ++n) r.merge(check_evidence(n));
             return r;
         }},
        {"mv-limit", [](bool q) { return check_limit_all(q ? 5 : 6); }},
        {"cp-lemma", [](bool q) { return run_cp_lemma(q ? 8 : 10); }},
        {"mv-golden", [](bool) { return check_golden_mv(); }},
        {"phi-cutjoin",
         [](bool q) {
             VerificationReport r;
             r.suite = "phi-cutjoin";
             for (int h : {0, 1})
                 r.merge(q ? verify_cutjoin_phi(h, 4) : verify_cutjoin_phi(h, 5, 4));
             return r;
         }},
        {"phi-golden", [](bool) { return verify_phi_golden(); }},
        {"phi-routes",
         [](bool q) {
             VerificationReport r;
             r.suite = "phi-routes";
             for (int h : {0, 1, 2}) r.merge(verify_routes(h, q ? 5 : 6));
             return r;
         }},
        {"phi-parity",
         [](bool q) {
             VerificationReport r;
             r.suite = "phi-parity";
             for (int h : {0, 1, 2}) r.merge(verify_parity(h, q ? 5 : 6));
             return r;
         }},
        {"s-identities",
         [](bool q) {
             VerificationReport r = s_lambda_identities(q ? 12 : 20);
             r.merge(s_poly_survey(q ? 4 : 5));
             return r;
         }},
        {"mv-conn", [](bool q) { return q ? check_conn(4, 3) : check_conn(6, 4); }},
    };
}

int emit_report(const VerificationReport& rep, bool json) {
    std::cout << (json ? rep.to_json() : rep.text()) << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_verify(const std::string& name, bool quick, bool json, int jobs) {
    auto suites = registry();
    std::vector<Suite> todo;
    if (name == "all") {
        todo = suites;
    } else {
        for (auto& s : suites)
            if (s.name == name) todo.push_back(s);
        if (todo.empty()) {
            std::cerr << "unknown suite: " << name << "\nknown: all";
            for (auto& s : suites) std::cerr << " | " << s.name;
            std::cerr << "\n";
            return 2;
        }
    }

    std::vector<VerificationReport> results(todo.size());
    auto run_one = [&](size_t i) {
        try {
            results[i] = todo[i].run(quick);
        } catch (const std::exception& e) {
            results[i].suite = todo[i].name;
            results[i].add(todo[i].name + "/exception", false, e.what());
        }
    };
    if (jobs > 1 && todo.size() > 1) {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i; (i = next.fetch_add(1)) < todo.size();) run_one(i);
        };
        std::vector<std::thread> pool;
        size_t nthreads = std::min(static_cast<size_t>(jobs), todo.size());
        for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    } else {
        for (size_t i = 0; i < todo.size(); ++i) run_one(i);
    }

    VerificationReport merged;
    merged.suite = name;
    for (const auto& r : results) merged.merge(r);
    return emit_report(merged, json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hurwitz / cut-and-join series computation and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    // short -h would collide with the --h base-genus option below
    app.set_help_flag("--help", "print this help message and exit");

    std::string cache_dir_flag;
    app.add_option("--cache-dir", cache_dir_flag,
                   "character table cache directory (overrides MVH_CACHE_DIR)");

    bool json = false, raw = false, quick = false;
    int jobs = 1;
    app.add_flag("--json", json, "machine-readable report output");
    app.add_flag("--raw", raw, "raw exponent-map series rendering");
    app.add_flag("--quick", quick, "smaller sweep bounds");
    app.add_option("--jobs", jobs, "parallel suite workers")->check(CLI::PositiveNumber);

    auto* ct = app.add_subcommand("chartable", "print the character table of S_d");
    int ct_d = 1, ct_cap = 12;
    ct->add_option("--d", ct_d, "degree")->required();
    ct->add_option("--max-d", ct_cap, "largest degree accepted");

    auto* hw = app.add_subcommand("hurwitz", "Hurwitz numbers via character sums");
    int hw_h = 0, hw_g = 0, hw_d = 0;
    std::string hw_eta;
    std::vector<std::string> hw_profiles;
    bool hw_conn = false, hw_series = false, hw_burnside = false;
    hw->add_option("--h", hw_h, "base genus");
    hw->add_option("--g", hw_g, "cover genus (number mode)");
    hw->add_option("--eta", hw_eta, "profile, comma-separated parts");
    hw->add_flag("--connected", hw_conn, "connected count / series");
    hw->add_flag("--series", hw_series, "print the generating coefficient of p_eta");
    hw->add_flag("--burnside", hw_burnside,
                 "raw character-sum count for arbitrary profiles");
    hw->add_option("--profile", hw_profiles, "branch profile (repeatable, burnside mode)");
    hw->add_option("--d", hw_d, "degree (burnside mode)");

    auto* mv = app.add_subcommand("marinovafa", "sine-weighted character series");
    int mv_D = 1, mv_max = 6;
    bool mv_conn = false;
    std::string mv_check;
    mv->add_option("--D", mv_D, "truncation degree");
    mv->add_option("--max", mv_max, "sweep bound for checks");
    mv->add_flag("--connected", mv_conn, "render the connected series");
    mv->add_option("--check", mv_check,
                   "vhook | cutjoin | evidence | rinit | limit | golden | conn");

    auto* vf = app.add_subcommand("verify", "run a verification suite");
    std::string vf_suite;
    int vf_maxd = -1, vf_D = -1;
    vf->add_option("suite", vf_suite, "suite name or 'all'")->required();
    vf->add_option("--max-d", vf_maxd, "override sweep bound (single suite)");
    vf->add_option("--D", vf_D, "override truncation degree (single suite)");

    CLI11_PARSE(app, argc, argv);

    if (!cache_dir_flag.empty()) set_cache_dir(std::filesystem::path(cache_dir_flag));

    try {
        if (*ct) {
            if (ct_d < 1 || ct_d > ct_cap) {
                std::cerr << "chartable: need 1 <= d <= " << ct_cap << "\n";
                return 2;
            }
            const CharacterTable& T = char_table(ct_d);
            const auto& parts = T.labels();
            std::cout << "S_" << ct_d
                      << " character table, rows nu, columns mu, canonical order\n";
            std::string head = "columns:";
            for (const auto& p : parts) head += " " + p.str();
            std::cout << head << "\n";
            for (int r = 0; r < static_cast<int>(parts.size()); ++r) {
                std::string line = parts[r].str() + ":";
                for (int c = 0; c < static_cast<int>(parts.size()); ++c)
                    line += " " + std::to_string(T.chi(r, c));
                std::cout << line << "\n";
            }
            return 0;
        }

        if (*hw) {
            if (hw_burnside) {
                if (hw_d < 1) {
                    std::cerr << "hurwitz --burnside: need --d >= 1\n";
                    return 2;
                }
                HurwitzQuery q;
                q.h = hw_h;
                q.d = hw_d;
                if (!hw_eta.empty()) q.profiles.push_back(parse_parts(hw_eta));
                for (const auto& s : hw_profiles) q.profiles.push_back(parse_parts(s));
                std::cout << rat_str(burnside_bullet(q)) << "\n";
                return 0;
            }
            if (hw_eta.empty()) {
                std::cerr << "hurwitz: need --eta\n";
                return 2;
            }
            Partition eta = parse_parts(hw_eta);
            if (hw_series) {
                XLaurent x = hw_conn ? phi_circ(hw_h, eta.size()).f.coeff(eta)
                                     : u_poly(hw_h, eta);
                std::cout << "p" << eta.str() << ": "
                          << (raw ? x.str() : x.hyperbolic_str()) << "\n";
                return 0;
            }
            Rat v = hurwitz_number(hw_g, hw_h, eta, hw_conn);
            std::cout << rat_str(v) << "\n";
            return 0;
        }

        if (*mv) {
            if (!mv_check.empty()) {
                VerificationReport rep;
                if (mv_check == "vhook")
                    rep = check_vhook(mv_max);
                else if (mv_check == "cutjoin")
                    rep = check_cutjoin_mv(mv_D, std::min(mv_D, 4));
                else if (mv_check == "evidence") {
                    rep.suite = "mv-evidence";
                    for (int n = 1; n <= mv_max; ++n) rep.merge(check_evidence(n));
                } else if (mv_check == "rinit")
                    rep = check_rinit(mv_D);
                else if (mv_check == "limit")
                    rep = check_limit_all(std::min(mv_max, 6));
                else if (mv_check == "golden")
                    rep = check_golden_mv();
                else if (mv_check == "conn")
                    rep = check_conn(mv_D, std::min(mv_D, 4));
                else {
                    std::cerr << "unknown check: " << mv_check << "\n";
                    return 2;
                }
                return emit_report(rep, json);
            }
            if (mv_D < 1) {
                std::cerr << "marinovafa: need --D >= 1\n";
                return 2;
            }
            MVSeries s = mv_conn ? r_connected(mv_D) : r_bullet(mv_D);
            for (int d = 1; d <= mv_D; ++d) {
                for (const auto& mu : enumerate_partitions(d)) {
                    UVRat c = s.f.coeff(mu);
                    if (c.is_zero()) continue;
                    std::cout << "p" << mu.str() << ": " << c.str() << "\n";
                }
            }
            return 0;
        }

        if (*vf) {
            // bound overrides take the place of the standard sweep for the
            // handful of suites where a single knob makes sense
            if (vf_maxd > 0 || vf_D > 0) {
                VerificationReport rep;
                if (vf_suite == "vhook")
                    rep = check_vhook(vf_maxd > 0 ? vf_maxd : 8);
                else if (vf_suite == "prop-f") {
                    rep.suite = "prop-f";
                    for (int d = 1; d <= (vf_maxd > 0 ? vf_maxd : 10); ++d) {
                        auto fr = verify_prop_f(d);
                        rep.add("f/d=" + std::to_string(d), fr.ok(),
                                fr.ok() ? "" : fr.cases.front().id);
                    }
                } else if (vf_suite == "mv-cutjoin") {
                    int D = vf_D > 0 ? vf_D : 6;
                    rep = check_cutjoin_mv(D, std::min(D, 4));
                } else if (vf_suite == "mv-init")
                    rep = check_rinit(vf_D > 0 ? vf_D : 6);
                else if (vf_suite == "mv-evidence") {
                    rep.suite = "mv-evidence";
                    for (int n = 1; n <= (vf_maxd > 0 ? vf_maxd : 8); ++n)
                        rep.merge(check_evidence(n));
                } else if (vf_suite == "mv-limit")
                    rep = check_limit_all(vf_maxd > 0 ? vf_maxd : 6);
                else if (vf_suite == "cp-lemma")
                    rep = run_cp_lemma(vf_maxd > 0 ? vf_maxd : 10);
                else {
                    std::cerr << "verify: --max-d/--D overrides are not defined for "
                              << vf_suite << "\n";
                    return 2;
                }
                return emit_report(rep, json);
            }
            return cmd_verify(vf_suite, quick, json, jobs);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
