// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every comparison is exact integer or multiset equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "bsymbol/numeric.hpp"
#include "bsymbol/oracle.hpp"

using namespace bsymbol;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion(int idx, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << idx << "  " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "  (" << seconds_since(start) << " s)\n";
    std::cout.flush();
}

CodeParams example_a() {
    return validate_params(build_field_shared(make_spec(3, 1, 4)), 2);
}

CodeParams example_b() {
    return validate_params(
        build_field_shared(make_spec(2, 1, 4, std::vector<long long>{1, 1},
                                     std::vector<long long>{1, 1, 0, 0, 1})),
        3);
}

CodeParams example_c() {
    return validate_params(
        build_field_shared(make_spec(2, 2, 3, std::vector<long long>{1, 1, 1},
                                     std::vector<long long>{2, 1, 1, 1})),
        9);
}

CodeParams example_d() {
    return validate_params(build_field_shared(make_spec(5, 1, 5)), 4);
}

WeightEnumerator make_enum(std::initializer_list<std::pair<long long, long long>> terms) {
    WeightEnumerator A;
    for (auto [w, c] : terms) A.add(w, c);
    return A;
}

struct Instance {
    CodeParams params;
    SemiprimitiveData sp;
};

std::string tag(const CodeParams& params) {
    return "p=" + std::to_string(params.F().p()) + " t=" + std::to_string(params.F().t()) +
           " r=" + std::to_string(params.F().r()) + " N=" + std::to_string(params.N);
}

// Every valid semiprimitive instance with q^r <= cap, p <= 13, and at least
// one admissible window size b.
std::vector<Instance> sweep(long long cap) {
    std::vector<Instance> out;
    for (long long p : {2, 3, 5, 7, 11, 13}) {
        for (int t = 1; ipow(p, t) <= cap; ++t) {
            const long long q = ipow(p, t);
            long long qr = 1;
            for (int r = 1; qr <= cap / q; ++r) {
                qr *= q;
                FieldPtr field;
                try {
                    field = build_field_shared(make_spec(p, t, r));
                } catch (const Error&) {
                    continue;
                }
                for (long long N : divisors(field->group_order())) {
                    try {
                        CodeParams params = validate_params(field, N);
                        if (params.b_max() < 1) continue;
                        SemiprimitiveData sp = theory_params(params);
                        out.push_back({std::move(params), sp});
                    } catch (const Error&) {
                        // excluded: wrong multiplicative order or not semiprimitive
                    }
                }
            }
        }
    }
    return out;
}

struct Verdict {
    bool ok = true;
    long long instances = 0;
    std::string witness;

    void fail(const std::string& w) {
        if (ok) witness = w;
        ok = false;
    }
    bool finish(std::string& detail, long long min_instances = 1) const {
        if (!ok) {
            detail = witness;
            return false;
        }
        detail = std::to_string(instances) + " instances";
        return instances >= min_instances;
    }
};

}  // namespace

int main() {
    // ---- worked examples ----------------------------------------------------

    criterion(1, "two-weight ternary code, (q,r,N) = (3,4,2)", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        auto params = example_a();
        auto sp = theory_params(params);
        bool ok = hamming_enumerator_closed(params, sp) ==
                  make_enum({{0, 1}, {24, 40}, {30, 40}});
        ok = ok && bsymbol_enumerator_closed(params, sp, 3) ==
                       make_enum({{0, 1}, {38, 40}, {40, 40}});
        auto brute = enumerator_brute_all(params, 3);
        ok = ok && brute[0] == hamming_enumerator_closed(params, sp);
        ok = ok && brute[2] == bsymbol_enumerator_closed(params, sp, 3);
        if (!ok) detail = "enumerator mismatch";
        return ok && seconds_since(start) < 1.0;
    });

    criterion(2, "three-weight binary code, (q,r,N) = (2,4,3)", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        auto params = example_b();
        auto sp = theory_params(params);
        bool ok = build_P(params, 2).exponents == std::vector<long long>{0, 3, 14};
        ok = ok && mu_profile(params, 2).mu == std::vector<long long>{2, 0, 1};
        ok = ok && bsymbol_enumerator_closed(params, sp, 1) ==
                       make_enum({{0, 1}, {2, 10}, {4, 5}});
        ok = ok && bsymbol_enumerator_closed(params, sp, 2) ==
                       make_enum({{0, 1}, {3, 5}, {4, 5}, {5, 5}});
        auto brute = enumerator_brute_all(params, 2);
        ok = ok && brute[0] == bsymbol_enumerator_closed(params, sp, 1);
        ok = ok && brute[1] == bsymbol_enumerator_closed(params, sp, 2);
        if (!ok) detail = "value mismatch";
        return ok && seconds_since(start) < 1.0;
    });

    criterion(3, "quaternary code on the F_4/F_64 tower, (q,r,N) = (4,3,9)",
              [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        auto params = example_c();
        auto sp = theory_params(params);
        bool ok = mu_profile(params, 2).mu == std::vector<long long>{3, 1, 1};
        ok = ok && bsymbol_enumerator_closed(params, sp, 1) ==
                       make_enum({{0, 1}, {4, 21}, {6, 42}});
        ok = ok && bsymbol_enumerator_closed(params, sp, 2) ==
                       make_enum({{0, 1}, {6, 21}, {7, 42}});
        auto brute = enumerator_brute_all(params, 2);
        ok = ok && brute[0] == bsymbol_enumerator_closed(params, sp, 1);
        ok = ok && brute[1] == bsymbol_enumerator_closed(params, sp, 2);
        if (!ok) detail = "value mismatch";
        return ok && seconds_since(start) < 1.0;
    });

    criterion(4, "one-weight code over F_5, (q,r,N) = (5,5,4)", [](std::string& detail) {
        const auto start = std::chrono::steady_clock::now();
        auto params = example_d();
        bool ok = one_weight_enumerator(params, 1) == make_enum({{0, 1}, {625, 3124}});
        ok = ok && one_weight_enumerator(params, 3) == make_enum({{0, 1}, {775, 3124}});
        auto brute = enumerator_brute_all(params, params.b_max());
        for (long long b = 1; ok && b <= params.b_max(); ++b)
            ok = brute[b - 1] == one_weight_enumerator(params, b);
        if (!ok) detail = "value mismatch";
        return ok && seconds_since(start) < 30.0;
    });

    // ---- sweep properties ---------------------------------------------------

    const auto sweep_start = std::chrono::steady_clock::now();
    const std::vector<Instance> instances = sweep(1LL << 14);

    Verdict c5, c6, c7, c8, c9;
    for (const auto& [params, sp] : instances) {
        try {
            ++c5.instances;
            ++c6.instances;
            ++c9.instances;
            const auto brute = enumerator_brute_all(params, params.b_max());

            // closed form vs brute force at every admissible b
            for (long long b = 1; b <= params.b_max(); ++b) {
                if (bsymbol_enumerator_closed(params, sp, b) != brute[b - 1]) {
                    c5.fail(tag(params) + " b=" + std::to_string(b));
                    break;
                }
            }

            // closed-form periods vs exact trace spectra
            for (long long i = 0; i < params.u; ++i) {
                const TraceSpectrum spec = gaussian_period_exact(params.F(), params.u, i);
                if (!spec.flat() ||
                    spec.period() != gaussian_period_closed(i, sp, params)) {
                    c6.fail(tag(params) + " class " + std::to_string(i));
                    break;
                }
            }

            // intermediate identities, exhaustively on the small instances
            if (params.F().field_size() <= (1LL << 12)) {
                ++c7.instances;
                for (long long b = 1; b <= params.b_max(); ++b)
                    if (!verify_lemma_weight_identity(params, b).pass)
                        c7.fail(tag(params) + " weight identity b=" + std::to_string(b));
                for (long long i = 0; i < params.N; ++i)
                    if (!verify_multiset_lemma(params, i).pass)
                        c7.fail(tag(params) + " multiset class " + std::to_string(i));
                if (!verify_mu_collapse(params).pass) c7.fail(tag(params) + " mu collapse");
            }

            // at b = r: all nonzero codewords reach full weight, Singleton equality
            if (params.b_max() == params.F().r()) {
                ++c8.instances;
                const WeightEnumerator& at_r = brute[params.F().r() - 1];
                const MdsReport rep = mds_check(params, sp, params.F().r());
                if (at_r.count(params.n) != params.F().group_order() ||
                    at_r.counts().size() != 2 || !rep.singleton_equality ||
                    !rep.all_weights_equal_n)
                    c8.fail(tag(params));
            }

            // window size 1 degenerates to the Hamming enumerator
            if (bsymbol_enumerator_closed(params, sp, 1) !=
                hamming_enumerator_closed(params, sp))
                c9.fail(tag(params));
        } catch (const std::exception& e) {
            const std::string what = tag(params) + ": " + e.what();
            c5.fail(what);
            c6.fail(what);
            c7.fail(what);
            c8.fail(what);
            c9.fail(what);
        }
    }
    const double sweep_seconds = seconds_since(sweep_start);

    criterion(5, "closed form equals brute force across the sweep",
              [&](std::string& detail) {
        bool ok = c5.finish(detail, 30);
        detail += ", sweep took " + std::to_string(sweep_seconds) + " s";
        return ok && sweep_seconds < 600.0;
    });
    criterion(6, "closed-form periods match exact trace spectra",
              [&](std::string& detail) { return c6.finish(detail, 30); });
    criterion(7, "intermediate identities hold exhaustively on small instances",
              [&](std::string& detail) { return c7.finish(detail, 10); });
    criterion(8, "full weight and Singleton equality at window size r",
              [&](std::string& detail) { return c8.finish(detail); });
    criterion(9, "window size 1 degenerates to the Hamming enumerator",
              [&](std::string& detail) { return c9.finish(detail, 30); });

    // ---- negative control ---------------------------------------------------

    criterion(10, "corrupted delta is caught with a concrete witness",
              [](std::string& detail) {
        auto params = example_a();
        SemiprimitiveData corrupted = theory_params(params);
        corrupted.delta = (corrupted.delta + corrupted.u / 2) % corrupted.u;
        const VerificationReport report = verify_all(params, 1, 3, {}, corrupted);
        if (report.all_pass()) {
            detail = "verification passed despite the corruption";
            return false;
        }
        for (const auto& chk : report.checks)
            if (!chk.pass && !chk.witness.empty()) {
                detail = chk.name + ": " + chk.witness;
                return true;
            }
        detail = "failure reported without a witness";
        return false;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << " ("
              << (10 - failures) << "/10)\n";
    return failures == 0 ? 0 : 1;
}
