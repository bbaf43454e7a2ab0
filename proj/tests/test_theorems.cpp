#include <catch2/catch_amalgamated.hpp>

#include "mdim/theorems.hpp"

using namespace mdim;

namespace {

const ClaimResult* find_claim(const TheoremCheck& tc, const std::string& needle) {
    for (const auto& c : tc.claims)
        if (c.description.find(needle) != std::string::npos) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("canonical landmark set") {
    CHECK(canonical_S(1) == std::vector<int>{1});
    CHECK(canonical_S(2) == std::vector<int>{1, 4});
    CHECK(canonical_S(4) == std::vector<int>{1, 4, 7, 10});
    for (int k = 1; k <= 10; ++k) CHECK(canonical_S(k).size() == static_cast<std::size_t>(k));
    CHECK_THROWS_AS(canonical_S(0), std::invalid_argument);
}

TEST_CASE("complement code switch") {
    Code code;
    code.entries = {1, 1, 1, 1};
    CHECK(complement_code_switch(code).entries == std::vector<int>{2, 2, 2, 2});

    code.entries = {0, 1, 2};
    CHECK(complement_code_switch(code).entries == std::vector<int>{0, 2, 1});
    CHECK(complement_code_switch(complement_code_switch(code)) == code);

    code.entries = {3};
    CHECK_THROWS_AS(complement_code_switch(code), std::invalid_argument);
}

TEST_CASE("construction helpers validate parameters") {
    CHECK_THROWS_AS(prism_resolving_set(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(prism_resolving_set(2, 1), std::invalid_argument);
    CHECK(prism_resolving_set(4, 2) == std::vector<int>{1, 4, 7, 10});

    CHECK_THROWS_AS(cycle_product_resolving_set(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(cycle_product_resolving_set(3, 2), std::invalid_argument);
    CHECK(cycle_product_resolving_set(3, 4) == std::vector<int>{1, 4, 7, 9});
}

TEST_CASE("And(k) theorem checks pass for k up to 5") {
    CHECK_THROWS_AS(check_theorem_andk(0), std::invalid_argument);
    for (int k = 1; k <= 5; ++k) {
        const auto tc = check_theorem_andk(k);
        INFO(to_text(tc));
        CHECK(tc.theorem_id == TheoremId::AndK);
        CHECK(tc.k == k);
        CHECK_FALSE(tc.n.has_value());
        CHECK(tc.claims.size() == 4);
        CHECK(tc.passed());
    }
}

TEST_CASE("complement theorem checks") {
    CHECK_THROWS_AS(check_theorem_complement(1), std::invalid_argument);
    for (int k = 2; k <= 5; ++k) {
        const auto tc = check_theorem_complement(k);
        INFO(to_text(tc));
        CHECK(tc.theorem_id == TheoremId::Complement);
        CHECK(tc.passed());
    }
}

TEST_CASE("prism theorem checks pass for k >= 2") {
    const auto tc = check_theorem_prism(3, 2);
    INFO(to_text(tc));
    CHECK(tc.passed());
    CHECK(tc.claims.size() == 5);
    CHECK(check_theorem_prism(2, 4).passed());
    CHECK_THROWS_AS(check_theorem_prism(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_theorem_prism(1, 1), std::invalid_argument);
}

TEST_CASE("prism theorem fails honestly at k = 1") {
    const auto tc = check_theorem_prism(1, 2);
    INFO(to_text(tc));
    CHECK_FALSE(tc.passed());

    const auto* resolving = find_claim(tc, "resolves");
    REQUIRE(resolving != nullptr);
    CHECK_FALSE(resolving->passed);

    const auto* exact = find_claim(tc, "exact dimension");
    REQUIRE(exact != nullptr);
    CHECK_FALSE(exact->passed);
    CHECK(exact->evidence.find("dim = 2") != std::string::npos);

    const auto* law = find_claim(tc, "distance law");
    REQUIRE(law != nullptr);
    CHECK(law->passed);
}

TEST_CASE("prism feasibility gate skips exact search beyond k,n <= 4") {
    const auto gated = check_theorem_prism(5, 2);
    INFO(to_text(gated));
    CHECK(gated.passed());
    const auto* upper = find_claim(gated, "upper bound");
    REQUIRE(upper != nullptr);
    CHECK(upper->evidence.find("feasibility gate") != std::string::npos);
    CHECK(find_claim(gated, "exact dimension") == nullptr);

    const auto forced = check_theorem_prism(5, 2, {}, true);
    INFO(to_text(forced));
    CHECK(forced.passed());
    CHECK(find_claim(forced, "exact dimension") != nullptr);
}

TEST_CASE("cycle product proposition for k >= 3") {
    const auto tc = check_proposition_cycle(3, 3);
    INFO(to_text(tc));
    CHECK(tc.theorem_id == TheoremId::CycleProduct);
    CHECK(tc.passed());
    CHECK(tc.claims.size() == 4);
    const auto* exact = find_claim(tc, "lies in {k, k+1}");
    REQUIRE(exact != nullptr);
    CHECK(exact->passed);

    const auto gated = check_proposition_cycle(3, 5);
    INFO(to_text(gated));
    CHECK(gated.passed());
    CHECK(gated.claims.size() == 3);
    CHECK(find_claim(gated, "lies in {k, k+1}") == nullptr);

    CHECK_THROWS_AS(check_proposition_cycle(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_proposition_cycle(0, 3), std::invalid_argument);
}

TEST_CASE("cycle product delegates small k to the display values") {
    const auto odd = check_proposition_cycle(1, 5);
    INFO(to_text(odd));
    CHECK(odd.passed());
    const auto* dim_odd = find_claim(odd, "equals 2");
    REQUIRE(dim_odd != nullptr);

    const auto even = check_proposition_cycle(1, 4);
    INFO(to_text(even));
    CHECK(even.passed());
    REQUIRE(find_claim(even, "equals 3") != nullptr);

    const auto c5 = check_proposition_cycle(2, 6);
    INFO(to_text(c5));
    CHECK(c5.passed());
    REQUIRE(find_claim(c5, "equals 3") != nullptr);
}

TEST_CASE("small cases") {
    CHECK_THROWS_AS(check_small_cases(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(check_small_cases(5, 4), std::invalid_argument);

    const auto tc = check_small_cases(3, 5);
    INFO(to_text(tc));
    CHECK(tc.theorem_id == TheoremId::SmallCases);
    CHECK(tc.passed());
    CHECK(tc.claims.size() == 2 + 2 * 3);
    REQUIRE(find_claim(tc, "And(1) equals K2") != nullptr);
    REQUIRE(find_claim(tc, "And(2) equals C5") != nullptr);
}

TEST_CASE("text rendering") {
    const auto pass_text = to_text(check_theorem_andk(2));
    CHECK(pass_text.find("[PASS] And(k) dimension theorem (k=2)") == 0);
    CHECK(pass_text.find("[FAIL]") == std::string::npos);

    const auto fail_text = to_text(check_theorem_prism(1, 2));
    CHECK(fail_text.find("[FAIL]") == 0);
    CHECK(fail_text.find("k=1, n=2") != std::string::npos);
}

TEST_CASE("budget exhaustion downgrades exact claims") {
    SearchBudget tiny;
    tiny.max_subsets = 1;
    const auto tc = check_theorem_andk(6, tiny);
    INFO(to_text(tc));
    const auto* interval = find_claim(tc, "interval");
    REQUIRE(interval != nullptr);
    CHECK(interval->passed);
    CHECK(interval->evidence.find("budget exhausted") != std::string::npos);
}
