#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsymbol/code.hpp"
#include "bsymbol/enumerator.hpp"
#include "bsymbol/theory.hpp"

namespace bsymbol {

/// Exact character-sum representation: counts[j] = number of elements of
/// C_i^{(u,q^r)} with prime-field trace j. The period is rational iff the
/// counts are flat on nonzero residues, and then equals counts[0] - counts[1].
struct TraceSpectrum {
    long long u = 1;
    long long class_idx = 0;
    std::vector<long long> counts;  // length p

    bool flat() const {
        for (std::size_t j = 2; j < counts.size(); ++j)
            if (counts[j] != counts[1]) return false;
        return true;
    }
    long long period() const {
        if (!flat()) throw Error("trace spectrum not flat; period is irrational");
        return counts[0] - (counts.size() > 1 ? counts[1] : 0);
    }
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // concrete counterexample on failure
    double millis = 0;
};

struct VerificationReport {
    std::string params_echo;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct OracleOptions {
    long long budget = 1LL << 20;        // max field size for full enumeration
    std::uint64_t seed = 12345;          // sampling seed, echoed in reports
    long long sample_size = 1000;        // weight-identity sample above the cutoff
    long long exhaustive_cutoff = 1LL << 14;
};

/// Tallies b_symbol_weight over all q^r codewords, straight from the
/// definitions (no theorems involved).
WeightEnumerator enumerator_brute(const CodeParams& params, long long b,
                                  const OracleOptions& opt = {});

/// Same pass for every b in [1, b_max]; result indexed by b - 1.
std::vector<WeightEnumerator> enumerator_brute_all(const CodeParams& params, long long b_max,
                                                   const OracleOptions& opt = {});

/// Walks C_i^{(u,q^r)} and bins by prime-field trace.
TraceSpectrum gaussian_period_exact(const FieldTables& field, long long u, long long i,
                                    const OracleOptions& opt = {});

/// w_b(c(a)) = (1/q^{b-1}) sum_{theta in P(b)} w_H(c(theta a)), checked per a.
CheckResult verify_lemma_weight_identity(const CodeParams& params, long long b,
                                         const OracleOptions& opt = {});

/// {xy : x in C_i^{(N)}, y in F_q^*} = ((q-1)u/N) * C_i^{(u)} as multisets.
CheckResult verify_multiset_lemma(const CodeParams& params, long long i,
                                  const OracleOptions& opt = {});

/// mu_profile(r) is the constant vector Delta/u.
CheckResult verify_mu_collapse(const CodeParams& params, const OracleOptions& opt = {});

/// Runs the whole suite for b in [b_lo, b_hi]: formula-vs-brute enumerator
/// equality, period cross-checks, lemma checks, w_r = n, Singleton equality.
/// sp_override substitutes corrupted closed-form data (negative controls).
VerificationReport verify_all(const CodeParams& params, long long b_lo, long long b_hi,
                              const OracleOptions& opt = {},
                              const std::optional<SemiprimitiveData>& sp_override = {});

}  // namespace bsymbol
