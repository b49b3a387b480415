#include "bsymbol/oracle.hpp"

#include <chrono>
#include <random>
#include <unordered_map>

#include "bsymbol/numeric.hpp"

namespace bsymbol {

namespace {

void check_budget(const FieldTables& field, const OracleOptions& opt) {
    if (field.field_size() > opt.budget)
        throw BudgetExceededError("q^r = " + std::to_string(field.field_size()) +
                                  " exceeds enumeration budget " +
                                  std::to_string(opt.budget));
}

// coords of c(gamma^e) into a reusable buffer
void fill_codeword(const CodeParams& params, long long e, std::vector<long long>& buf) {
    const FieldTables& F = params.F();
    const long long order = F.group_order();
    buf.resize(params.n);
    for (long long i = 0; i < params.n; ++i) {
        buf[i] = F.trace_q_by_exp(e);
        e += params.N;
        if (e >= order) e -= order;
    }
}

// Hamming weight of c(gamma^e) for every exponent e, from the raw definition
std::vector<long long> hamming_by_exponent(const CodeParams& params) {
    const FieldTables& F = params.F();
    std::vector<long long> wh(F.group_order(), 0);
    std::vector<long long> buf;
    for (long long e = 0; e < F.group_order(); ++e) {
        fill_codeword(params, e, buf);
        wh[e] = hamming_weight(buf);
    }
    return wh;
}

class Stopwatch {
public:
    double millis() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

}  // namespace

std::vector<WeightEnumerator> enumerator_brute_all(const CodeParams& params, long long b_max,
                                                   const OracleOptions& opt) {
    if (b_max < 1 || b_max > params.b_max())
        throw BOutOfRangeError("b_max = " + std::to_string(b_max) +
                               " outside [1, min(r, n-1)]");
    check_budget(params.F(), opt);
    std::vector<WeightEnumerator> out(b_max);
    for (long long b = 1; b <= b_max; ++b) out[b - 1].add(0, 1);  // zero codeword
    std::vector<long long> buf;
    for (long long e = 0; e < params.F().group_order(); ++e) {
        fill_codeword(params, e, buf);
        const auto w = b_symbol_weights_all(buf, b_max);
        for (long long b = 1; b <= b_max; ++b) out[b - 1].add(w[b - 1], 1);
    }
    return out;
}

WeightEnumerator enumerator_brute(const CodeParams& params, long long b,
                                  const OracleOptions& opt) {
    if (b < 1 || b > params.b_max())
        throw BOutOfRangeError("b = " + std::to_string(b) + " outside [1, min(r, n-1)]");
    return std::move(enumerator_brute_all(params, b, opt)[b - 1]);
}

TraceSpectrum gaussian_period_exact(const FieldTables& field, long long u, long long i,
                                    const OracleOptions& opt) {
    if (u < 1 || field.group_order() % u != 0)
        throw NonDivisorError("u = " + std::to_string(u) + " does not divide q^r - 1");
    check_budget(field, opt);
    TraceSpectrum spec;
    spec.u = u;
    spec.class_idx = ((i % u) + u) % u;
    spec.counts.assign(field.p(), 0);
    for (long long e = spec.class_idx; e < field.group_order(); e += u)
        ++spec.counts[field.trace_p_by_exp(e)];
    return spec;
}

CheckResult verify_lemma_weight_identity(const CodeParams& params, long long b,
                                         const OracleOptions& opt) {
    Stopwatch timer;
    CheckResult res;
    res.name = "weight_identity[b=" + std::to_string(b) + "]";
    const FieldTables& F = params.F();
    if (b < 1 || b > std::min<long long>(F.r(), params.n - 1))
        throw BOutOfRangeError("b = " + std::to_string(b) + " outside [1, min(r, n-1)]");

    const PbSet pb = build_P(params, b);
    const long long order = F.group_order();
    const long long qb1 = ipow(F.q(), b - 1);

    const bool exhaustive = F.field_size() <= opt.exhaustive_cutoff;
    std::vector<long long> sample;
    if (exhaustive) {
        sample.resize(order);
        for (long long e = 0; e < order; ++e) sample[e] = e;
    } else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<long long> dist(0, order - 1);
        for (long long k = 0; k < opt.sample_size; ++k) sample.push_back(dist(rng));
    }

    std::vector<long long> wh_full;
    std::unordered_map<long long, long long> wh_cache;
    if (exhaustive) wh_full = hamming_by_exponent(params);
    auto wh = [&](long long e) {
        if (exhaustive) return wh_full[e];
        auto it = wh_cache.find(e);
        if (it != wh_cache.end()) return it->second;
        std::vector<long long> buf;
        fill_codeword(params, e, buf);
        return wh_cache.emplace(e, hamming_weight(buf)).first->second;
    };

    res.pass = true;
    std::vector<long long> buf;
    for (long long e : sample) {
        fill_codeword(params, e, buf);
        const long long direct = b_symbol_weight(buf, b);
        long long sum = 0;
        for (long long theta : pb.exponents) sum += wh((e + theta) % order);
        if (sum % qb1 != 0 || sum / qb1 != direct) {
            res.pass = false;
            res.witness = "a = gamma^" + std::to_string(e) + ": w_b = " +
                          std::to_string(direct) + ", averaged sum = " +
                          std::to_string(sum) + "/" + std::to_string(qb1);
            break;
        }
    }
    res.millis = timer.millis();
    return res;
}

CheckResult verify_multiset_lemma(const CodeParams& params, long long i,
                                  const OracleOptions& opt) {
    Stopwatch timer;
    CheckResult res;
    res.name = "multiset_lemma[i=" + std::to_string(i) + "]";
    const FieldTables& F = params.F();
    check_budget(F, opt);
    const long long order = F.group_order();
    const long long q = F.q();
    i = ((i % params.N) + params.N) % params.N;

    std::vector<long long> tally(order, 0);
    for (long long x = i; x < order; x += params.N)
        for (long long j = 0; j < q - 1; ++j) ++tally[(x + params.delta * j) % order];

    const long long num = (q - 1) * params.u;
    res.pass = num % params.N == 0;
    const long long mult = res.pass ? num / params.N : -1;
    if (!res.pass) res.witness = "multiplicity (q-1)u/N is not an integer";
    for (long long e = 0; res.pass && e < order; ++e) {
        const long long expect = e % params.u == i % params.u ? mult : 0;
        if (tally[e] != expect) {
            res.pass = false;
            res.witness = "gamma^" + std::to_string(e) + " has multiplicity " +
                          std::to_string(tally[e]) + ", expected " + std::to_string(expect);
        }
    }
    res.millis = timer.millis();
    return res;
}

CheckResult verify_mu_collapse(const CodeParams& params, const OracleOptions& opt) {
    Stopwatch timer;
    CheckResult res;
    res.name = "mu_collapse";
    check_budget(params.F(), opt);
    const MuProfile mu = mu_profile(params, params.F().r());
    const long long expect = params.delta / params.u;
    res.pass = true;
    for (long long idx = 0; idx < params.u; ++idx) {
        if (mu.mu[idx] != expect) {
            res.pass = false;
            res.witness = "mu_(" + std::to_string(idx) + ")(r) = " +
                          std::to_string(mu.mu[idx]) + ", expected " + std::to_string(expect);
            break;
        }
    }
    res.millis = timer.millis();
    return res;
}

VerificationReport verify_all(const CodeParams& params, long long b_lo, long long b_hi,
                              const OracleOptions& opt,
                              const std::optional<SemiprimitiveData>& sp_override) {
    const FieldTables& F = params.F();
    VerificationReport report;
    report.seed = opt.seed;
    report.params_echo = "p=" + std::to_string(F.p()) + " t=" + std::to_string(F.t()) +
                         " r=" + std::to_string(F.r()) + " N=" + std::to_string(params.N) +
                         " n=" + std::to_string(params.n) + " u=" + std::to_string(params.u);

    const SemiprimitiveData sp = sp_override ? *sp_override : theory_params(params);
    b_lo = std::max<long long>(b_lo, 1);
    b_hi = std::min<long long>(b_hi, params.b_max());
    if (b_hi < b_lo)
        throw BOutOfRangeError("empty b range after clamping to [1, min(r, n-1)]");

    // closed-form vs brute-force enumerators
    const auto brute = enumerator_brute_all(params, b_hi, opt);
    for (long long b = b_lo; b <= b_hi; ++b) {
        Stopwatch timer;
        CheckResult res;
        res.name = "enumerator_closed_vs_brute[b=" + std::to_string(b) + "]";
        const WeightEnumerator closed = bsymbol_enumerator_closed(params, sp, b);
        res.pass = closed == brute[b - 1];
        if (!res.pass) {
            for (auto [w, c] : closed.counts()) {
                if (brute[b - 1].count(w) != c) {
                    res.witness = "weight " + std::to_string(w) + ": closed count " +
                                  std::to_string(c) + ", brute count " +
                                  std::to_string(brute[b - 1].count(w));
                    break;
                }
            }
            if (res.witness.empty()) res.witness = "brute has weights absent from closed form";
        }
        res.millis = timer.millis();
        report.checks.push_back(std::move(res));
    }

    // the b-symbol enumerator at b = 1 must degenerate to the Hamming one
    {
        Stopwatch timer;
        CheckResult res;
        res.name = "hamming_b1_degeneration";
        res.pass = bsymbol_enumerator_closed(params, sp, 1) ==
                   hamming_enumerator_closed(params, sp);
        if (!res.pass) res.witness = "b=1 enumerator differs from the Hamming enumerator";
        res.millis = timer.millis();
        report.checks.push_back(std::move(res));
    }

    if (params.u == 1) {
        Stopwatch timer;
        CheckResult res;
        res.name = "one_weight_consistency";
        res.pass = true;
        for (long long b = b_lo; b <= b_hi; ++b) {
            if (one_weight_enumerator(params, b) != bsymbol_enumerator_closed(params, sp, b)) {
                res.pass = false;
                res.witness = "b = " + std::to_string(b);
                break;
            }
        }
        res.millis = timer.millis();
        report.checks.push_back(std::move(res));
    }

    // Gaussian periods: closed form vs exact trace spectra
    {
        Stopwatch timer;
        CheckResult res;
        res.name = "gaussian_periods";
        res.pass = true;
        for (long long i = 0; i < params.u; ++i) {
            const TraceSpectrum spec = gaussian_period_exact(F, params.u, i, opt);
            if (!spec.flat()) {
                res.pass = false;
                res.witness = "class " + std::to_string(i) + ": spectrum not flat";
                break;
            }
            const long long closed = gaussian_period_closed(i, sp, params);
            if (spec.period() != closed) {
                res.pass = false;
                res.witness = "class " + std::to_string(i) + ": exact eta = " +
                              std::to_string(spec.period()) + ", closed form = " +
                              std::to_string(closed);
                break;
            }
        }
        res.millis = timer.millis();
        report.checks.push_back(std::move(res));
    }

    for (long long b = b_lo; b <= b_hi; ++b)
        report.checks.push_back(verify_lemma_weight_identity(params, b, opt));

    {
        Stopwatch timer;
        CheckResult res;
        res.name = "multiset_lemma";
        res.pass = true;
        for (long long i = 0; i < params.N; ++i) {
            CheckResult one = verify_multiset_lemma(params, i, opt);
            if (!one.pass) {
                res.pass = false;
                res.witness = "i = " + std::to_string(i) + ": " + one.witness;
                break;
            }
        }
        res.millis = timer.millis();
        report.checks.push_back(std::move(res));
    }

    report.checks.push_back(verify_mu_collapse(params, opt));

    if (params.b_max() == F.r() && b_hi == F.r()) {
        // b = r is evaluable: every nonzero codeword must have w_r = n
        Stopwatch timer;
        CheckResult res;
        res.name = "wr_equals_n";
        const WeightEnumerator& at_r = brute[F.r() - 1];
        res.pass = at_r.count(params.n) == F.group_order() && at_r.count(0) == 1 &&
                   static_cast<long long>(at_r.counts().size()) == 2;
        if (!res.pass) {
            for (auto [w, c] : at_r.counts())
                if (w != 0 && w != params.n) {
                    res.witness = std::to_string(c) + " codeword(s) of weight " +
                                  std::to_string(w) + " != n";
                    break;
                }
        }
        res.millis = timer.millis();
        report.checks.push_back(std::move(res));

        Stopwatch timer2;
        CheckResult mds;
        mds.name = "singleton_mds_at_r";
        const MdsReport rep = mds_check(params, sp, F.r());
        mds.pass = rep.singleton_equality && rep.all_weights_equal_n;
        if (!mds.pass)
            mds.witness = "d_r = " + std::to_string(rep.d_b) + ", exponent " +
                          std::to_string(rep.singleton_exponent) + " vs r = " +
                          std::to_string(F.r());
        mds.millis = timer2.millis();
        report.checks.push_back(std::move(mds));
    }

    return report;
}

}  // namespace bsymbol
