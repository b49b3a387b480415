#include "bsymbol/serialize.hpp"

#include <sstream>

namespace bsymbol {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

long long parse_int(const std::string& tok) {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw Error("bad integer token '" + tok + "'");
    return v;
}

std::vector<long long> finish_poly(std::vector<long long> coeffs, int degree,
                                   const char* what) {
    if (static_cast<int>(coeffs.size()) == degree) {
        coeffs.push_back(1);  // leading monic coefficient implied
    } else if (static_cast<int>(coeffs.size()) != degree + 1) {
        throw DegreeMismatchError(std::string(what) + ": expected " +
                                  std::to_string(degree) + " or " +
                                  std::to_string(degree + 1) + " coefficients, got " +
                                  std::to_string(coeffs.size()));
    }
    if (coeffs.back() != 1)
        throw DegreeMismatchError(std::string(what) + ": leading coefficient must be 1");
    return coeffs;
}

}  // namespace

std::vector<long long> parse_poly_fp(const std::string& text, long long p, int degree) {
    std::vector<long long> coeffs;
    for (const auto& tok : split(text, ',')) {
        long long c = parse_int(tok);
        if (c < 0 || c >= p)
            throw DegreeMismatchError("coefficient " + tok + " outside [0, p)");
        coeffs.push_back(c);
    }
    return finish_poly(std::move(coeffs), degree, "poly_q");
}

std::vector<long long> parse_poly_fq(const std::string& text, long long p, int t,
                                     const std::vector<long long>& poly_q, int degree) {
    const auto exp_table = fq_exp_table(p, t, poly_q);
    const long long q = static_cast<long long>(exp_table.size()) + 1;
    std::vector<long long> coeffs;
    for (const auto& tok : split(text, ',')) {
        if (tok.rfind("z^", 0) == 0) {
            long long k = parse_int(tok.substr(2));
            coeffs.push_back(exp_table[((k % (q - 1)) + (q - 1)) % (q - 1)]);
        } else {
            long long c = parse_int(tok);
            if (c < 0 || c >= p)
                throw DegreeMismatchError("constant coefficient " + tok +
                                          " outside [0, p); use z^k tokens for "
                                          "extension-field values");
            coeffs.push_back(c);
        }
    }
    return finish_poly(std::move(coeffs), degree, "poly_qr");
}

nlohmann::json params_json(const CodeParams& params) {
    const FieldTables& F = params.F();
    return {
        {"p", F.p()},       {"t", F.t()},       {"q", F.q()},
        {"r", F.r()},       {"N", params.N},    {"n", params.n},
        {"Delta", params.delta},                {"u", params.u},
        {"poly_q", F.spec().poly_q},            {"poly_qr", F.spec().poly_qr},
    };
}

nlohmann::json enumerator_json(const CodeParams& params, long long b,
                               const WeightEnumerator& A) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto [w, c] : A.counts()) {
        if (w == 0) continue;
        terms.push_back({{"weight", w}, {"count", c}});
    }
    return {
        {"params", params_json(params)},
        {"b", b},
        {"enumerator", terms},
        {"constant_term", A.count(0)},
    };
}

nlohmann::json report_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json item = {{"name", c.name},
                               {"verdict", c.pass ? "pass" : "fail"},
                               {"millis", c.millis}};
        if (!c.pass) item["witness"] = c.witness;
        checks.push_back(std::move(item));
    }
    return {
        {"params", report.params_echo},
        {"seed", report.seed},
        {"all_pass", report.all_pass()},
        {"checks", std::move(checks)},
    };
}

}  // namespace bsymbol
