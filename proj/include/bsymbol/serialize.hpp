#pragma once

#include <string>

#include <json.hpp>

#include "bsymbol/code.hpp"
#include "bsymbol/enumerator.hpp"
#include "bsymbol/oracle.hpp"
#include "bsymbol/theory.hpp"

namespace bsymbol {

nlohmann::json params_json(const CodeParams& params);

/// {"params":{...},"b":3,"enumerator":[{"weight":38,"count":40},...],"constant_term":1}
/// Weights ascending; the weight-0 term is reported as constant_term.
nlohmann::json enumerator_json(const CodeParams& params, long long b,
                               const WeightEnumerator& A);

nlohmann::json report_json(const VerificationReport& report);

/// Parses the CLI polynomial grammar over F_p: comma-separated decimal
/// coefficients ascending by degree. Accepts degree or degree+1 entries
/// (the leading monic coefficient may be omitted); returns degree+1.
std::vector<long long> parse_poly_fp(const std::string& text, long long p, int degree);

/// Same over F_q: tokens are "0", a decimal digit below p (a prime-field
/// constant), or "z^k" with z the F_q generator fixed by poly_q.
std::vector<long long> parse_poly_fq(const std::string& text, long long p, int t,
                                     const std::vector<long long>& poly_q, int degree);

}  // namespace bsymbol
