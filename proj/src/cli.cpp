#include "fujimoto/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fujimoto/appendix.hpp"
#include "fujimoto/combinations.hpp"
#include "fujimoto/combinatorics.hpp"
#include "fujimoto/family.hpp"
#include "fujimoto/gamma0.hpp"

namespace fujimoto {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    int m = 0;
    unsigned threads = 0;
    std::string output;
    std::string format = "json";
    std::string mode = "auto";
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::uint64_t samples = 100'000;
    std::uint64_t budget = kExhaustiveSubsetBudget;
    std::uint64_t trials = 50;
    int max_size = 0;
    bool all_minors = false;
    long bound = 10;
    std::uint64_t retry_limit = 2000;
    std::vector<int> m_list;
};

struct Outcome {
    json document;
    bool pass = true;
    std::string raw; // non-JSON payload (DOT)
};

json certificate_header(const std::string& command, const Settings& s, const FamilyParams& p,
                        const std::string& mode) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["m"] = p.m;
    j["t"] = p.t;
    j["mode"] = mode;
    j["seed"] = s.has_seed ? json(s.seed) : json(nullptr);
    return j;
}

json check(bool pass) { return json{{"pass", pass}}; }

ScanMode resolve_scan_mode(const Settings& s, const BigInt& total) {
    const bool fits = total <= BigInt(static_cast<unsigned long>(s.budget));
    if (s.mode == "exhaustive" || (s.mode == "auto" && fits)) {
        if (!fits) {
            throw BudgetError("exhaustive scan over " + total.get_str() + " subsets exceeds the budget of " +
                              std::to_string(s.budget));
        }
        return ScanMode::exhaustive();
    }
    if (s.mode == "sampled" || s.mode == "auto") {
        if (!s.has_seed) {
            throw UsageError("sampled mode needs --seed (" + total.get_str() +
                             " subsets exceed the exhaustive budget)");
        }
        return ScanMode::sampled(s.seed, s.samples);
    }
    throw UsageError("unknown mode '" + s.mode + "'");
}

ScanOptions scan_options(const Settings& s) { return ScanOptions{s.threads}; }

std::vector<json> matrix_rows(const ExactMatrix& a) {
    std::vector<json> rows;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (const auto& v : a.row(r)) row.push_back(v.to_string());
        rows.push_back(row);
    }
    return rows;
}

Outcome run_verify(const Settings& s) {
    const FamilyParams p = FamilyParams::from_m(s.m);
    const ScanMode mode = resolve_scan_mode(s, binomial(3 * p.t, p.m));
    Outcome o;
    o.document = certificate_header("verify", s, p, mode_name(mode));
    json checks;

    checks["sign_factorization"] = check(sign_factorization_check(p));

    const auto [d1, d2, d3] = block_determinants(p);
    json blocks = check(d1 == Rational(1) && d2 == Rational(1) && d3 == Rational(1));
    blocks["det_M1"] = d1.to_string();
    blocks["det_M2"] = d2.to_string();
    blocks["det_M3"] = d3.to_string();
    checks["block_determinants"] = blocks;

    checks["network_equals_M"] = check(verify_network_equals_M(p));

    const auto report = general_position(p, mode, scan_options(s), mode.is_sampled() ? ~0ull : s.budget);
    json gp = to_json(report);
    gp["pass"] = report.passed();
    checks["general_position"] = gp;

    o.document["checks"] = checks;
    for (const auto& [_, c] : checks.items()) o.pass = o.pass && c["pass"].get<bool>();
    o.document["pass"] = o.pass;
    return o;
}

Outcome run_network(const Settings& s) {
    const FamilyParams p = FamilyParams::from_m(s.m);
    const PlanarNetwork net = build_gamma0(omega0(p.m));
    Outcome o;
    if (s.format == "dot") {
        o.raw = export_dot(net, "Gamma0_m" + std::to_string(p.m));
    } else if (s.format == "json") {
        o.document = certificate_header("network", s, p, "none");
        o.document["network"] = export_json(net);
        o.document["pass"] = true;
    } else {
        throw UsageError("network supports --format dot or json");
    }
    return o;
}

Outcome run_lemmas(const Settings& s) {
    const FamilyParams p = FamilyParams::from_m(s.m);
    Outcome o;
    o.document = certificate_header("lemmas", s, p, "exhaustive");
    json checks;

    const auto report = lemma_path_report(p.m, s.budget, s.threads);
    json paths = check(report.passed());
    paths["paths_enumerated"] = report.paths_enumerated;
    json mismatches = json::array();
    for (const auto& mm : report.mismatches) {
        mismatches.push_back({{"quantity", mm.quantity},
                              {"i", mm.i},
                              {"j", mm.j},
                              {"observed", mm.observed.to_string()},
                              {"expected", mm.expected.to_string()}});
    }
    paths["mismatches"] = mismatches;
    paths["total"] = matrix_rows(report.total);
    checks["path_sums"] = paths;

    std::uint64_t cases = 0;
    json bad = json::array();
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; a + b <= 8; ++b) {
            for (long k = 1; k <= 6; ++k) {
                const SubLatticeSpec spec{a, b, k};
                ++cases;
                const BigInt formula = w_ab_formula(spec);
                const BigInt oracle = w_ab_oracle(spec);
                if (formula != oracle) {
                    bad.push_back({{"a", a}, {"b", b}, {"k", k}, {"formula", formula.get_str()},
                                   {"oracle", oracle.get_str()}});
                }
            }
        }
    }
    checks["sublattice_weights"] = {{"pass", bad.empty()}, {"cases", cases}, {"mismatches", bad}};

    cases = 0;
    json bad_s = json::array();
    for (long a = 1; a <= 12; ++a) {
        for (long b = 1; b <= 12; ++b) {
            for (long k = 1; k <= 12; ++k) {
                ++cases;
                const auto r = saalschuetz_check(a, b, k);
                if (!r.holds) {
                    bad_s.push_back({{"a", a}, {"b", b}, {"k", k}, {"lhs", r.lhs.to_string()},
                                     {"rhs", r.rhs.to_string()}});
                }
            }
        }
    }
    checks["saalschuetz"] = {{"pass", bad_s.empty()}, {"cases", cases}, {"mismatches", bad_s}};

    o.document["checks"] = checks;
    for (const auto& [_, c] : checks.items()) o.pass = o.pass && c["pass"].get<bool>();
    o.document["pass"] = o.pass;
    return o;
}

std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    for (int i = 0; i < k; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng() % static_cast<std::uint64_t>(n - i);
        std::swap(all[static_cast<std::size_t>(i)], all[j]);
    }
    std::vector<int> out(all.begin(), all.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

Outcome run_lgv_check(const Settings& s) {
    const FamilyParams p = FamilyParams::from_m(s.m);
    const int max_size = s.max_size > 0 ? std::min(s.max_size, p.m) : std::min(p.m, 4);
    std::vector<MinorQuery> queries;
    if (s.all_minors) {
        for (int k = 1; k <= max_size; ++k) {
            std::vector<int> rows(static_cast<std::size_t>(k));
            std::iota(rows.begin(), rows.end(), 0);
            do {
                std::vector<int> cols(static_cast<std::size_t>(k));
                std::iota(cols.begin(), cols.end(), 0);
                do {
                    MinorQuery q;
                    for (int r : rows) q.rows.push_back(r + 1);
                    for (int c : cols) q.cols.push_back(c + 1);
                    queries.push_back(std::move(q));
                } while (next_combination(cols, p.m));
            } while (next_combination(rows, p.m));
        }
    } else {
        if (!s.has_seed) {
            throw UsageError("lgv-check samples random minors and needs --seed (or --all)");
        }
        std::mt19937_64 rng(s.seed);
        for (std::uint64_t trial = 0; trial < s.trials; ++trial) {
            const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_size));
            MinorQuery q;
            q.rows = random_subset(rng, p.m, k);
            q.cols = random_subset(rng, p.m, k);
            queries.push_back(std::move(q));
        }
    }

    const PlanarNetwork net = build_gamma0(omega0(p.m));
    const ExactMatrix x = weight_matrix(net);
    Outcome o;
    o.document = certificate_header("lgv-check", s, p, s.all_minors ? "exhaustive" : "sampled");
    json trials = json::array();
    std::uint64_t agreed = 0;
    for (const auto& q : queries) {
        const Rational det = minor(x, q);
        const Rational oracle = lgv_oracle_minor(net, q);
        const bool ok = det == oracle;
        agreed += ok;
        trials.push_back({{"rows", q.rows}, {"cols", q.cols}, {"det", det.to_string()},
                          {"oracle", oracle.to_string()}, {"pass", ok}});
    }
    o.pass = agreed == queries.size();
    o.document["checks"] = {{"lgv_equivalence",
                             {{"pass", o.pass}, {"minors", queries.size()}, {"agreed", agreed}, {"trials", trials}}}};
    o.document["pass"] = o.pass;
    return o;
}

Outcome run_extend(const Settings& s) {
    const FamilyParams p = FamilyParams::from_m(s.m);
    if (p.m < 4) {
        throw UsageError("extend needs m >= 4");
    }
    const std::size_t rows = static_cast<std::size_t>(p.m) * static_cast<std::size_t>(p.m + 1) / 2;
    const ScanMode mode = resolve_scan_mode(s, binomial(static_cast<long>(rows), p.m));

    SearchOptions so;
    so.bound = s.bound;
    so.seed = s.seed;
    so.retry_limit = s.retry_limit;
    so.sample_count = s.samples;
    so.exhaustive_budget = s.budget;
    so.scan = scan_options(s);

    Outcome o;
    o.document = certificate_header("extend", s, p, mode_name(mode));
    o.document["bound"] = s.bound;
    json checks;

    SearchResult found;
    try {
        found = search_constants(p, so);
    } catch (const SearchExhausted& e) {
        json partial = json::array();
        for (const auto& [a, b] : e.best.constants.pairs) partial.push_back({a.to_string(), b.to_string()});
        checks["search"] = {{"pass", false}, {"error", e.what()}, {"accepted_pairs", partial},
                            {"candidates_tried", e.best.candidates_tried}};
        o.document["checks"] = checks;
        o.document["pass"] = false;
        o.pass = false;
        return o;
    }
    json rejected = json::array();
    for (const auto& r : found.rejected) {
        rejected.push_back({{"pair", r.pair}, {"a", r.a.to_string()}, {"b", r.b.to_string()},
                            {"failures", r.failures}});
    }
    checks["search"] = {{"pass", true}, {"candidates_tried", found.candidates_tried}, {"rejected", rejected}};

    const auto report = verify_extended_general_position(p, found.constants, mode, scan_options(s),
                                                         mode.is_sampled() ? ~0ull : s.budget);
    json gp = to_json(report);
    gp["pass"] = report.passed();
    checks["extended_general_position"] = gp;

    const WeierstrassData w = hyperplane_coefficients(p, found.constants);
    ExtPolynomial squares;
    for (const auto& h : w.h) squares = squares + h * h;
    checks["sum_of_squares_zero"] = check(squares.is_zero());

    const auto family = extended_family(p, found.constants);
    bool reconstructed = true;
    for (std::size_t i = 0; i < family.size(); ++i) {
        ExtPolynomial sum;
        for (std::size_t j = 0; j < w.h.size(); ++j) sum = sum + w.c[i][j] * w.h[j];
        reconstructed = reconstructed && sum == to_ext(family[i]);
    }
    checks["reconstruction"] = check(reconstructed);

    o.document["checks"] = checks;
    for (const auto& [_, c] : checks.items()) o.pass = o.pass && c["pass"].get<bool>();
    o.document["weierstrass"] = to_json(w);
    o.document["pass"] = o.pass;
    return o;
}

Outcome run_bench(const Settings& s) {
    if (s.m_list.empty()) {
        throw UsageError("bench needs --m-list");
    }
    Outcome o;
    o.document["tool"] = kToolName;
    o.document["version"] = kToolVersion;
    o.document["command"] = "bench";
    o.document["seed"] = s.has_seed ? json(s.seed) : json(nullptr);
    json runs = json::array();
    for (int m : s.m_list) {
        const FamilyParams p = FamilyParams::from_m(m);
        const ScanMode mode = resolve_scan_mode(s, binomial(3 * p.t, p.m));
        const auto report = general_position(p, mode, scan_options(s), mode.is_sampled() ? ~0ull : s.budget);
        json r = to_json(report);
        r["m"] = m;
        r["pass"] = report.passed();
        o.pass = o.pass && report.passed();
        runs.push_back(r);
    }
    o.document["runs"] = runs;
    o.document["pass"] = o.pass;
    return o;
}

std::string render_text(const json& doc) {
    std::ostringstream os;
    os << doc.value("command", "") << " m=" << doc.value("m", 0) << " mode=" << doc.value("mode", "") << '\n';
    if (doc.contains("checks")) {
        for (const auto& [name, c] : doc["checks"].items()) {
            os << name << ": " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
        }
    }
    if (doc.contains("runs")) {
        for (const auto& r : doc["runs"]) {
            os << "m=" << r["m"] << ": " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << " in "
               << r["elapsed_ms"] << " ms\n";
        }
    }
    os << "overall: " << (doc.value("pass", false) ? "PASS" : "FAIL") << '\n';
    return os.str();
}

void emit(const std::string& text, const Settings& s, std::ostream& out) {
    if (s.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(s.output, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write " + s.output);
    }
    f << text;
}

int report_error(const std::string& kind, const std::string& message, std::ostream& out, std::ostream& err) {
    err << kind << ": " << message << '\n';
    out << json{{"error", message}, {"kind", kind}}.dump() << '\n';
    return kExitUsage;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Exact verification of the Fujimoto polynomial families", kToolName};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.add_option("--threads", s.threads, "Worker threads (default: FUJIMOTO_THREADS or all cores)");
    app.add_option("-o,--output", s.output, "Write the report to this file");

    auto add_m = [&](CLI::App* sub) { sub->add_option("--m", s.m, "Even dimension m >= 2")->required(); };
    std::vector<CLI::Option*> seed_options;
    auto add_seed = [&](CLI::App* sub) { seed_options.push_back(sub->add_option("--seed", s.seed, "RNG seed")); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_scan = [&](CLI::App* sub) {
        sub->add_option("--mode", s.mode, "auto, exhaustive or sampled")
            ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
        sub->add_option("--samples", s.samples, "Subsets drawn in sampled mode");
        sub->add_option("--budget", s.budget, "Largest exhaustive scan");
        add_seed(sub);
    };

    auto* verify = app.add_subcommand("verify", "Certificate for the family of dimension m");
    add_m(verify);
    add_scan(verify);
    add_format(verify);

    auto* network = app.add_subcommand("network", "Export the weighted network");
    add_m(network);
    network->add_option("--format", s.format, "dot or json")->check(CLI::IsMember({"json", "dot"}));

    auto* lemmas = app.add_subcommand("lemmas", "Path-sum identities by enumeration");
    add_m(lemmas);
    lemmas->add_option("--budget", s.budget, "Largest number of paths to enumerate");
    add_format(lemmas);

    auto* lgv = app.add_subcommand("lgv-check", "Minors against disjoint path collections");
    add_m(lgv);
    lgv->add_option("--trials", s.trials, "Random minors to check");
    lgv->add_option("--max-size", s.max_size, "Largest minor size (default min(m, 4))");
    lgv->add_flag("--all", s.all_minors, "Check every minor up to --max-size");
    add_seed(lgv);
    add_format(lgv);

    auto* extend = app.add_subcommand("extend", "Extended family, constants and Weierstrass data");
    add_m(extend);
    extend->add_option("--bound", s.bound, "Numerator and denominator bound for constants");
    extend->add_option("--retry-limit", s.retry_limit, "Candidates per pair");
    add_scan(extend);
    add_format(extend);

    auto* bench = app.add_subcommand("bench", "Time general-position scans");
    bench->add_option("--m-list", s.m_list, "Comma-separated list of m")->delimiter(',')->required();
    add_scan(bench);
    add_format(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return report_error("usage", e.what(), out, err);
    }
    s.has_seed = std::any_of(seed_options.begin(), seed_options.end(), [](auto* o) { return o->count() > 0; });

    try {
        Outcome o;
        if (*verify) o = run_verify(s);
        else if (*network) o = run_network(s);
        else if (*lemmas) o = run_lemmas(s);
        else if (*lgv) o = run_lgv_check(s);
        else if (*extend) o = run_extend(s);
        else o = run_bench(s);

        if (!o.raw.empty()) {
            emit(o.raw, s, out);
        } else if (s.format == "text") {
            emit(render_text(o.document), s, out);
        } else {
            emit(o.document.dump(2) + "\n", s, out);
        }
        return o.pass ? kExitPass : kExitCheckFailed;
    } catch (const UsageError& e) {
        return report_error("usage", e.what(), out, err);
    } catch (const PreconditionError& e) {
        return report_error("usage", e.what(), out, err);
    } catch (const BudgetError& e) {
        return report_error("budget", e.what(), out, err);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        out << json{{"error", e.what()}, {"kind", "internal"}}.dump() << '\n';
        return kExitUsage;
    }
}

} // namespace fujimoto
