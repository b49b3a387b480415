#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsymbol/oracle.hpp"

using namespace bsymbol;

namespace {

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

WeightEnumerator make_enum(std::initializer_list<std::pair<long long, long long>> terms) {
    WeightEnumerator A;
    for (auto [w, c] : terms) A.add(w, c);
    return A;
}

}  // namespace

TEST_CASE("enumerator_brute") {
    auto b = example_b();
    CHECK(enumerator_brute(b, 2) == make_enum({{0, 1}, {3, 5}, {4, 5}, {5, 5}}));
    CHECK(enumerator_brute(b, 1) == make_enum({{0, 1}, {2, 10}, {4, 5}}));
    CHECK(enumerator_brute(b, 2).count(0) == 1);
    CHECK(enumerator_brute(b, 2).total() == b.F().field_size());

    OracleOptions tiny;
    tiny.budget = 8;
    CHECK_THROWS_AS(enumerator_brute(b, 2, tiny), BudgetExceededError);
}

TEST_CASE("brute matches closed form on the worked examples") {
    for (auto params : {example_a(), example_b(), example_c()}) {
        auto sp = theory_params(params);
        auto brute = enumerator_brute_all(params, params.b_max());
        for (long long b = 1; b <= params.b_max(); ++b)
            CHECK(brute[b - 1] == bsymbol_enumerator_closed(params, sp, b));
    }
}

TEST_CASE("gaussian_period_exact") {
    auto a = example_a();
    const FieldTables& F = a.F();

    // u = 1: flat spectrum, eta_0 = -1
    auto full = gaussian_period_exact(F, 1, 0);
    CHECK(full.flat());
    CHECK(full.period() == -1);
    CHECK(full.counts[0] == F.field_size() / F.p() - 1);
    CHECK(full.counts[1] == F.field_size() / F.p());

    auto s0 = gaussian_period_exact(F, 2, 0);
    auto s1 = gaussian_period_exact(F, 2, 1);
    CHECK(s0.flat());
    CHECK(s0.period() == -5);
    CHECK(s1.period() == 4);

    auto c = example_c();
    auto sc = theory_params(c);
    for (long long i = 0; i < 3; ++i) {
        auto spec = gaussian_period_exact(c.F(), 3, i);
        CHECK(spec.flat());
        CHECK(spec.period() == gaussian_period_closed(i, sc, c));
    }

    CHECK_THROWS_AS(gaussian_period_exact(F, 7, 0), NonDivisorError);
}

TEST_CASE("lemma verifiers pass on the worked examples") {
    for (auto params : {example_a(), example_b(), example_c()}) {
        for (long long b = 1; b <= params.b_max(); ++b) {
            auto res = verify_lemma_weight_identity(params, b);
            CHECK_MESSAGE(res.pass, res.witness);
        }
        for (long long i = 0; i < std::min<long long>(params.N, 4); ++i) {
            auto res = verify_multiset_lemma(params, i);
            CHECK_MESSAGE(res.pass, res.witness);
        }
        auto mc = verify_mu_collapse(params);
        CHECK_MESSAGE(mc.pass, mc.witness);
    }
}

TEST_CASE("verify_all") {
    auto c = example_c();
    auto report = verify_all(c, 1, 3);
    CHECK(report.all_pass());
    CHECK(report.checks.size() > 5);

    // negative control: flipped delta must produce a concrete witness
    auto a = example_a();
    SemiprimitiveData corrupted = theory_params(a);
    corrupted.delta = (corrupted.delta + corrupted.u / 2) % corrupted.u;
    auto bad = verify_all(a, 1, 3, {}, corrupted);
    CHECK_FALSE(bad.all_pass());
    bool found_witness = false;
    for (const auto& chk : bad.checks)
        if (!chk.pass && !chk.witness.empty()) found_witness = true;
    CHECK(found_witness);
}

TEST_CASE("enumerator merge is pointwise addition") {
    auto x = make_enum({{0, 1}, {3, 5}});
    auto y = make_enum({{3, 2}, {7, 1}});
    x.merge(y);
    CHECK(x == make_enum({{0, 1}, {3, 7}, {7, 1}}));
    WeightEnumerator empty;
    x.merge(empty);
    CHECK(x == make_enum({{0, 1}, {3, 7}, {7, 1}}));
}

TEST_CASE("enumerator text rendering") {
    CHECK(make_enum({{0, 1}, {38, 40}, {40, 40}}).to_text() == "1 + 40T^38 + 40T^40");
    CHECK(make_enum({{0, 1}, {3, 5}, {4, 5}, {5, 5}}).to_text() ==
          "1 + 5T^3 + 5T^4 + 5T^5");
    CHECK(make_enum({{0, 1}, {1, 1}}).to_text() == "1 + T");
}
