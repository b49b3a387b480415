// bsymbol: one-weight and two-weight semiprimitive irreducible cyclic codes,
// their b-symbol weight enumerators, and brute-force verification.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsymbol/code.hpp"
#include "bsymbol/field.hpp"
#include "bsymbol/numeric.hpp"
#include "bsymbol/oracle.hpp"
#include "bsymbol/serialize.hpp"
#include "bsymbol/theory.hpp"

namespace {

using namespace bsymbol;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitRejected = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct CommonArgs {
    long long p = 0;
    int t = 1;
    int r = 0;
    long long N = 0;
    std::string poly_q, poly_qr;
    std::string format = "text";
    std::string b_spec;
    long long budget = 0;
    std::uint64_t seed = 12345;
};

long long default_budget() {
    if (const char* env = std::getenv("BSYMBOL_BUDGET")) return std::atoll(env);
    return 1LL << 20;
}

void add_field_flags(CLI::App* cmd, CommonArgs& args, bool with_N = true) {
    cmd->add_option("-p,--prime", args.p, "characteristic p")->required();
    cmd->add_option("-t,--ext-t", args.t, "degree of F_q over F_p (default 1)");
    cmd->add_option("-r,--ext-r", args.r, "degree of F_{q^r} over F_q")->required();
    if (with_N) cmd->add_option("-N,--index", args.N, "divisor N of q^r - 1")->required();
    cmd->add_option("--poly-q", args.poly_q,
                    "primitive polynomial for F_q over F_p (ascending coefficients)");
    cmd->add_option("--poly-qr", args.poly_qr,
                    "primitive polynomial for F_{q^r} over F_q (ascending; z^k tokens)");
    cmd->add_option("--format", args.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--budget", args.budget, "max field size for oracle enumeration");
    cmd->add_option("--seed", args.seed, "sampling seed");
}

CodeParams make_params(const CommonArgs& args) {
    std::vector<long long> poly_q = args.poly_q.empty()
                                        ? default_poly_q(args.p, args.t)
                                        : parse_poly_fp(args.poly_q, args.p, args.t);
    std::optional<std::vector<long long>> poly_qr;
    if (!args.poly_qr.empty())
        poly_qr = parse_poly_fq(args.poly_qr, args.p, args.t, poly_q, args.r);
    FieldSpec spec = make_spec(args.p, args.t, args.r, poly_q, poly_qr);
    return validate_params(build_field_shared(std::move(spec)), args.N);
}

OracleOptions make_oracle_options(const CommonArgs& args) {
    OracleOptions opt;
    opt.budget = args.budget > 0 ? args.budget : default_budget();
    opt.seed = args.seed;
    return opt;
}

// "3", "1-4", or "1..4"
std::pair<long long, long long> parse_b_range(const std::string& spec, long long b_max) {
    if (spec.empty()) return {1, b_max};
    auto dash = spec.find("..");
    std::size_t skip = 2;
    if (dash == std::string::npos) {
        dash = spec.find('-', 1);
        skip = 1;
    }
    if (dash == std::string::npos) {
        long long b = std::stoll(spec);
        return {b, b};
    }
    return {std::stoll(spec.substr(0, dash)), std::stoll(spec.substr(dash + skip))};
}

std::string join(const std::vector<long long>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

int cmd_validate(const CommonArgs& args) {
    const CodeParams params = make_params(args);  // throws on rejection
    const FieldTables& F = params.F();
    nlohmann::json out = params_json(params);
    try {
        const SemiprimitiveData sp = theory_params(params);
        out["semiprimitive"] = params.u > 1;
        out["d"] = sp.d;
        out["s"] = sp.s;
        out["delta_shift"] = sp.delta;
    } catch (const NotSemiprimitiveError& e) {
        if (args.format == "json") {
            out["semiprimitive"] = false;
            out["error"] = e.what();
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "rejected: " << e.what() << "\n";
        }
        return kExitRejected;
    }
    if (args.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "p=" << F.p() << " t=" << F.t() << " q=" << F.q() << " r=" << F.r()
                  << " N=" << params.N << " n=" << params.n << " Delta=" << params.delta
                  << " u=" << params.u << "\n";
        std::cout << "poly_q = " << join(F.spec().poly_q, ",")
                  << "  poly_qr = " << join(F.spec().poly_qr, ",") << "\n";
        if (params.u == 1) {
            std::cout << "one-weight regime (u=1): d=1 s=1 delta=0\n";
        } else {
            const SemiprimitiveData sp = theory_params(params);
            std::cout << "semiprimitive: yes  d=" << sp.d << " s=" << sp.s
                      << " delta=" << sp.delta << "\n";
        }
    }
    return kExitOk;
}

int cmd_enumerate(const CommonArgs& args, const std::string& mode) {
    const CodeParams params = make_params(args);
    const auto [b_lo, b_hi] = parse_b_range(args.b_spec, params.b_max());
    if (b_lo < 1 || b_hi > params.b_max() || b_lo > b_hi)
        throw BOutOfRangeError("b range [" + std::to_string(b_lo) + ", " +
                               std::to_string(b_hi) + "] outside [1, " +
                               std::to_string(params.b_max()) + "]");

    std::vector<std::pair<long long, WeightEnumerator>> results;
    std::optional<SemiprimitiveData> sp;
    if (mode == "formula") sp = theory_params(params);
    std::vector<WeightEnumerator> brute;
    if (mode == "oracle")
        brute = enumerator_brute_all(params, b_hi, make_oracle_options(args));
    for (long long b = b_lo; b <= b_hi; ++b)
        results.emplace_back(b, mode == "formula" ? bsymbol_enumerator_closed(params, *sp, b)
                                                  : brute[b - 1]);

    if (args.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [b, A] : results) {
            nlohmann::json obj = enumerator_json(params, b, A);
            obj["mode"] = mode;
            if (mode == "formula") {
                const MuProfile mu = mu_profile(params, b);
                obj["pb_size"] = mu.pb_size();
                obj["mu"] = mu.mu;
                nlohmann::json weights = nlohmann::json::array();
                for (long long i = 0; i < params.u; ++i)
                    weights.push_back(bsymbol_weight_value(i, params, *sp, mu, b));
                obj["class_weights"] = std::move(weights);
            }
            arr.push_back(std::move(obj));
        }
        std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "b,weight,count\n";
        for (const auto& [b, A] : results)
            for (auto [w, c] : A.counts()) std::cout << b << "," << w << "," << c << "\n";
    } else {
        for (const auto& [b, A] : results) {
            if (mode == "formula") {
                const MuProfile mu = mu_profile(params, b);
                std::vector<long long> weights;
                for (long long i = 0; i < params.u; ++i)
                    weights.push_back(bsymbol_weight_value(i, params, *sp, mu, b));
                std::cout << "b=" << b << "  |P(b)|=" << mu.pb_size() << "  mu=["
                          << join(mu.mu, ",") << "]  W=[" << join(weights, ",") << "]\n";
            }
            std::cout << "b=" << b << ": " << A.to_text() << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const CommonArgs& args, bool inject_delta_flip) {
    const CodeParams params = make_params(args);
    const auto [b_lo, b_hi] = parse_b_range(args.b_spec, params.b_max());

    std::optional<SemiprimitiveData> sp_override;
    if (inject_delta_flip) {
        SemiprimitiveData sp = theory_params(params);
        if (sp.u < 2) throw Error("--inject-delta-flip requires u >= 2");
        sp.delta = (sp.delta + (sp.u % 2 == 0 ? sp.u / 2 : 1)) % sp.u;
        sp_override = sp;
    }
    const VerificationReport report =
        verify_all(params, b_lo, b_hi, make_oracle_options(args), sp_override);

    if (args.format == "json") {
        std::cout << report_json(report).dump(2) << "\n";
    } else {
        std::cout << "params: " << report.params_echo << "\n";
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
            if (!c.pass) std::cout << "  witness: " << c.witness;
            std::cout << "\n";
        }
        std::cout << "RESULT: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return report.all_pass() ? kExitOk : kExitVerifyFail;
}

struct ScanArgs {
    long long p_max = 5;
    long long qr_max = 4096;
    long long b_max = 0;  // 0: per-instance min(r, n-1)
    bool crosscheck = false;
    std::string format = "csv";
    long long budget = 0;
    std::uint64_t seed = 12345;
};

int cmd_scan(const ScanArgs& args) {
    OracleOptions opt;
    opt.budget = args.budget > 0 ? args.budget : default_budget();
    opt.seed = args.seed;
    nlohmann::json rows = nlohmann::json::array();
    if (args.format == "csv")
        std::cout << "p,t,q,r,N,n,Delta,u,d,s,delta,W_A,W_B,b_weights,crosscheck\n";

    for (long long p = 2; p <= args.p_max; ++p) {
        if (!is_prime(p)) continue;
        for (int t = 1; ipow(p, t) <= args.qr_max; ++t) {
            const long long q = ipow(p, t);
            for (int r = 1; ipow(q, r) <= args.qr_max; ++r) {
                FieldPtr field;
                try {
                    field = build_field_shared(make_spec(p, t, r));
                } catch (const Error&) {
                    continue;
                }
                for (long long N : divisors(field->group_order())) {
                    CodeParams params;
                    SemiprimitiveData sp;
                    try {
                        params = validate_params(field, N);
                        sp = theory_params(params);
                    } catch (const Error&) {
                        continue;  // OrderMismatch or not semiprimitive
                    }
                    if (params.b_max() < 1) continue;
                    const long long b_hi = args.b_max > 0
                                               ? std::min(args.b_max, params.b_max())
                                               : params.b_max();
                    const long long wa = hamming_weight_class(sp.delta, sp, params);
                    const long long wb =
                        sp.u > 1 ? hamming_weight_class(sp.delta + 1, sp, params) : wa;

                    std::string bweights;
                    std::vector<nlohmann::json> bjson;
                    for (long long b = 1; b <= b_hi; ++b) {
                        const MuProfile mu = mu_profile(params, b);
                        std::vector<long long> ws;
                        for (long long i = 0; i < sp.u; ++i)
                            ws.push_back(bsymbol_weight_value(i, params, sp, mu, b));
                        if (!bweights.empty()) bweights += ";";
                        bweights += std::to_string(b) + ":" + join(ws, "|");
                        bjson.push_back({{"b", b}, {"class_weights", ws}});
                    }

                    std::string cross;
                    if (args.crosscheck) {
                        if (params.F().field_size() > opt.budget) {
                            cross = "skipped";
                        } else {
                            cross = "ok";
                            const auto brute = enumerator_brute_all(params, b_hi, opt);
                            for (long long b = 1; b <= b_hi; ++b) {
                                if (bsymbol_enumerator_closed(params, sp, b) != brute[b - 1]) {
                                    cross = "mismatch[b=" + std::to_string(b) + "]";
                                    break;
                                }
                            }
                        }
                    }

                    if (args.format == "csv") {
                        std::cout << p << "," << t << "," << q << "," << r << "," << N << ","
                                  << params.n << "," << params.delta << "," << sp.u << ","
                                  << sp.d << "," << sp.s << "," << sp.delta << "," << wa
                                  << "," << wb << "," << bweights << "," << cross << "\n";
                    } else {
                        nlohmann::json row = params_json(params);
                        row["d"] = sp.d;
                        row["s"] = sp.s;
                        row["delta_shift"] = sp.delta;
                        row["W_A"] = wa;
                        row["W_B"] = wb;
                        row["b_weights"] = bjson;
                        if (args.crosscheck) row["crosscheck"] = cross;
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
    if (args.format == "json") std::cout << rows.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"b-symbol weight enumerators of semiprimitive irreducible cyclic codes"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string mode = "formula";
    bool inject_delta_flip = false;
    ScanArgs scan_args;

    CLI::App* validate = app.add_subcommand("validate", "check code parameters");
    add_field_flags(validate, args);

    CLI::App* enumerate = app.add_subcommand("enumerate", "compute weight enumerators");
    add_field_flags(enumerate, args);
    enumerate->add_option("-b,--window", args.b_spec, "b value or range, e.g. 3 or 1-4");
    enumerate->add_option("--mode", mode, "formula or oracle")
        ->check(CLI::IsMember({"formula", "oracle"}));

    CLI::App* verify = app.add_subcommand("verify", "run the full oracle suite");
    add_field_flags(verify, args);
    verify->add_option("-b,--window", args.b_spec, "b value or range");
    verify->add_flag("--inject-delta-flip", inject_delta_flip,
                     "negative control: corrupt delta in the closed form");

    CLI::App* scan = app.add_subcommand("scan", "sweep the semiprimitive parameter space");
    scan->add_option("--p-max", scan_args.p_max, "largest characteristic (default 5)");
    scan->add_option("--qr-max", scan_args.qr_max, "largest field size q^r (default 4096)");
    scan->add_option("--b-max", scan_args.b_max, "cap on b (default min(r, n-1))");
    scan->add_flag("--crosscheck", scan_args.crosscheck,
                   "brute-force each instance under budget");
    scan->add_option("--format", scan_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    scan->add_option("--budget", scan_args.budget, "max field size for crosscheck");
    scan->add_option("--seed", scan_args.seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(args);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(args, mode);
        if (app.got_subcommand(verify)) return cmd_verify(args, inject_delta_flip);
        if (app.got_subcommand(scan)) return cmd_scan(scan_args);
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitRejected;
    }
    return kExitUsage;
}
