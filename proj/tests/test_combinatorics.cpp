#include <doctest.h>

#include <random>

#include "elq/combinatorics.hpp"
#include "elq/error.hpp"
#include "elq/system.hpp"

using elq::FatPointSystem;

TEST_CASE("binom examples and total convention") {
    CHECK(elq::binom(5, 3) == 10);
    CHECK(elq::binom(2, 3) == 0);
    CHECK(elq::binom(3, 3) == 1);
    CHECK(elq::binom(-1, 2) == 0);
    CHECK(elq::binom(7, 0) == 1);
    CHECK(elq::binom(0, 0) == 1);
}

TEST_CASE("binom satisfies Pascal's rule up to 64") {
    for (std::int64_t n = 1; n <= 64; ++n) {
        for (std::int64_t k = 1; k <= n; ++k) {
            CHECK(elq::binom(n, k) == elq::binom(n - 1, k) + elq::binom(n - 1, k - 1));
        }
    }
    CHECK(elq::binom(64, 32) == 1832624140942590534LL);
}

TEST_CASE("binom overflow is an error") { CHECK_THROWS_AS(elq::binom(200, 100), elq::InternalError); }

TEST_CASE("virtual dimension") {
    CHECK(elq::virtual_dim({2, {1}}) == 8);
    CHECK(elq::virtual_dim({3, {2, 2, 2, 2}}) == 3);
    CHECK(elq::virtual_dim({4, std::vector<std::int64_t>(10, 2)}) == -6);
    CHECK(elq::expected_dim({4, std::vector<std::int64_t>(10, 2)}) == -1);
    CHECK(elq::virtual_dim({0, {}}) == 0);
    CHECK_THROWS_AS(elq::virtual_dim({-1, {}}), elq::UsageError);
    CHECK(elq::expected_dim({-3, {1}}) == -1);
}

TEST_CASE("virtual dimension is bounded by the space of forms") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 500; ++trial) {
        FatPointSystem sys{static_cast<std::int64_t>(gen() % 15), {}};
        const auto r = gen() % 8;
        for (std::uint64_t i = 0; i < r; ++i) sys.mults.push_back(static_cast<std::int64_t>(gen() % 4));
        sys = sys.normalized();
        const auto top = elq::binom(sys.degree + 3, 3) - 1;
        CHECK(elq::virtual_dim(sys) <= top);
        CHECK((elq::virtual_dim(sys) == top) == sys.mults.empty());
    }
}

TEST_CASE("anticanonical degree") {
    CHECK(elq::anticanonical_degree({2, std::vector<std::int64_t>(8, 1)}) == 0);
    CHECK(elq::anticanonical_degree({4, {3, 3}}) == 10);
    CHECK(elq::anticanonical_degree({3, std::vector<std::int64_t>(13, 1)}) == -1);
}

TEST_CASE("anticanonical degree is additive") {
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto r = gen() % 12;
        FatPointSystem a{static_cast<std::int64_t>(gen() % 20), {}};
        FatPointSystem b{static_cast<std::int64_t>(gen() % 20), {}};
        FatPointSystem sum{a.degree + b.degree, {}};
        for (std::uint64_t i = 0; i < r; ++i) {
            a.mults.push_back(static_cast<std::int64_t>(gen() % 6));
            b.mults.push_back(static_cast<std::int64_t>(gen() % 6));
            sum.mults.push_back(a.mults.back() + b.mults.back());
        }
        CHECK(elq::anticanonical_degree(sum) == elq::anticanonical_degree(a) + elq::anticanonical_degree(b));
    }
}

TEST_CASE("line defects") {
    CHECK(elq::line_defects({4, {3, 3, 1}}).entries == std::vector<std::int64_t>{0, 2, 0});
    CHECK(elq::line_defects({5, {2, 2, 2}}).entries == std::vector<std::int64_t>{0, 0, 0});
    CHECK(elq::line_defects({2, {2, 2, 1}}).entries == std::vector<std::int64_t>{1, 2, 1});
    // t_1 needs p_2 and p_3.
    CHECK(elq::line_defects({2, {2, 2}}).entries == std::vector<std::int64_t>{0, 2});
    CHECK(elq::line_defects({2, {}}).entries.empty());

    const auto t = elq::line_defects({4, {3, 3, 1}});
    CHECK(t.support() == std::vector<int>{2});
    CHECK(t.correction() == 1);
}

TEST_CASE("normalize clamps, drops zeros and sorts") {
    const FatPointSystem sys{5, {1, 0, 3, -2, 2}};
    const auto n = sys.normalized();
    CHECK(n == FatPointSystem{5, {3, 2, 1}});
    CHECK(n.is_normalized());
    CHECK_FALSE(sys.is_normalized());
    CHECK(FatPointSystem{0, {}}.is_normalized());
}

TEST_CASE("multiplicity shorthand parsing") {
    using V = std::vector<std::int64_t>;
    CHECK(elq::parse_multiplicities("5,1x19").size() == 20);
    CHECK(elq::parse_multiplicities("5,1x3") == V{5, 1, 1, 1});
    CHECK(elq::parse_multiplicities(" 2 x 3 , 1 ") == V{2, 2, 2, 1});
    CHECK(elq::parse_multiplicities("") == V{});
    CHECK(elq::parse_multiplicities("3x0") == V{});
    CHECK(elq::parse_multiplicities("-1,2") == V{-1, 2});
    CHECK_THROWS_AS(elq::parse_multiplicities("1,,2"), elq::UsageError);
    CHECK_THROWS_AS(elq::parse_multiplicities("a"), elq::UsageError);
    CHECK_THROWS_AS(elq::parse_multiplicities("2x-1"), elq::UsageError);
    CHECK_THROWS_AS(elq::parse_multiplicities("2x"), elq::UsageError);

    CHECK(elq::format_multiplicities({5, 1, 1, 1}) == "5,1x3");
    CHECK(elq::to_string({5, {5, 1, 1, 1}}) == "(5; 5,1^3)");
    CHECK(elq::to_string({0, {}}) == "(0;)");
}

TEST_CASE("text and JSON forms round-trip exactly") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 300; ++trial) {
        FatPointSystem sys{static_cast<std::int64_t>(gen() % 30) - 5, {}};
        const auto r = gen() % 25;
        for (std::uint64_t i = 0; i < r; ++i) sys.mults.push_back(static_cast<std::int64_t>(gen() % 5) - 1);
        CHECK(elq::parse_multiplicities(elq::format_multiplicities(sys.mults)) == sys.mults);

        nlohmann::json j = sys;
        CHECK(nlohmann::json::parse(j.dump()).get<FatPointSystem>() == sys);
    }
    const auto j = nlohmann::json::parse(R"({"d": 5, "m": [5, 1, 1]})");
    CHECK(j.get<FatPointSystem>() == FatPointSystem{5, {5, 1, 1}});
    CHECK(nlohmann::json::parse(R"({"d": 3, "m": "1x13"})").get<FatPointSystem>().r() == 13);
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"m": []})").get<FatPointSystem>(), elq::UsageError);
}
