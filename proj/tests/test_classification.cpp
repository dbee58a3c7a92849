#include <doctest.h>

#include "elq/classification.hpp"
#include "elq/error.hpp"
#include "elq/harness.hpp"
#include "elq/reduction.hpp"

using elq::FatPointSystem;
using V = std::vector<std::int64_t>;

namespace {

V rep(std::int64_t m, std::size_t k, V tail = {}) {
    V out(k, m);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

}  // namespace

TEST_CASE("case two pattern") {
    CHECK(elq::is_case_two({4, rep(2, 10)}) == 2);
    CHECK_FALSE(elq::is_case_two({8, rep(4, 7, {3, 1, 1, 1, 1})}).has_value());
    CHECK(elq::is_case_two({2, rep(1, 8)}) == 1);
    CHECK(elq::is_case_two({6, rep(3, 8, {1})}) == 3);
    CHECK_FALSE(elq::is_case_two({4, rep(2, 7)}).has_value());
    CHECK_FALSE(elq::is_case_two({5, rep(2, 10)}).has_value());
}

TEST_CASE("b and t") {
    CHECK(elq::compute_b({3, rep(1, 13)}) == 13);
    CHECK(elq::compute_b({5, rep(2, 10)}) == 10);
    CHECK(elq::compute_b({5, rep(5, 1, rep(1, 19))}) == 20);
    CHECK(elq::compute_b({5, rep(3, 2, rep(2, 8, {1}))}) == 10);
    CHECK_FALSE(elq::compute_b({4, rep(2, 8)}).has_value());

    CHECK(elq::compute_t({3, rep(1, 13)}, 13) == 1);
    CHECK(elq::compute_t({5, rep(2, 10)}, 10) == 1);
    CHECK(elq::compute_t({5, rep(5, 1, rep(1, 19))}, 20) == 1);
    CHECK(elq::compute_t({5, rep(3, 2, rep(2, 8))}, 10) == 2);
    CHECK_THROWS_AS(elq::compute_t({3, rep(1, 13)}, 8), elq::InternalError);
}

TEST_CASE("classify examples") {
    const auto a = elq::classify({3, rep(1, 13)});
    REQUIRE(std::holds_alternative<elq::cls::CaseThree>(a));
    const auto& three = std::get<elq::cls::CaseThree>(a);
    CHECK(three.t == 1);
    CHECK(three.b == 13);
    CHECK(three.u == 1);
    CHECK(three.n == 1);
    CHECK(three.defects.support().empty());

    const auto b = elq::classify({4, rep(2, 10)});
    REQUIRE(std::holds_alternative<elq::cls::CaseTwo>(b));
    CHECK(std::get<elq::cls::CaseTwo>(b).m == 2);

    const auto c = elq::classify({5, rep(5, 1, rep(1, 19))});
    REQUIRE(std::holds_alternative<elq::cls::Cone>(c));
    CHECK(std::get<elq::cls::Cone>(c).residual.normalized() == FatPointSystem{2, {2}});
    CHECK(std::get<elq::cls::Cone>(c).t == 1);

    const auto d = elq::classify({5, rep(3, 2, rep(2, 8, {1}))});
    REQUIRE(std::holds_alternative<elq::cls::Truncate>(d));
    CHECK(std::get<elq::cls::Truncate>(d).replacement == FatPointSystem{5, rep(3, 2, rep(2, 9))});
    CHECK(std::get<elq::cls::Truncate>(d).t == 2);
    CHECK(std::get<elq::cls::Truncate>(d).b == 10);

    // A t = 2 terminal: n = u - (r-8)(t-1) = 2 - 2.
    const auto e = elq::classify({5, rep(3, 2, rep(2, 8))});
    REQUIRE(std::holds_alternative<elq::cls::CaseThree>(e));
    CHECK(std::get<elq::cls::CaseThree>(e).t == 2);
    CHECK(std::get<elq::cls::CaseThree>(e).u == 2);
    CHECK(std::get<elq::cls::CaseThree>(e).n == 0);

    const auto f = elq::classify({8, rep(4, 7, {3, 1, 1, 1, 1})});
    REQUIRE(std::holds_alternative<elq::cls::CaseThree>(f));
    CHECK(std::get<elq::cls::CaseThree>(f).n == 3);

    CHECK(elq::case_name(elq::classify({4, {3, 3}})) == "one");
    CHECK(elq::case_name(elq::classify({0, {}})) == "one");
    CHECK(elq::case_name(elq::classify({2, rep(1, 8)})) == "two");
}

TEST_CASE("classify rejects inputs outside its domain") {
    CHECK_THROWS_AS(elq::classify({2, {2, 2, 1}}), elq::PreconditionViolated);
    CHECK_THROWS_AS(elq::classify({2, {1, 2}}), elq::PreconditionViolated);
    CHECK_THROWS_AS(elq::classify({3, {4}}), elq::PreconditionViolated);
}

TEST_CASE("classification JSON") {
    const auto j = elq::classification_json(elq::classify({3, rep(1, 13)}));
    CHECK(j["case"] == "three");
    CHECK(j["t"] == 1);
    CHECK(j["n"] == 1);
    CHECK(elq::classification_json(elq::classify({4, rep(2, 10)}))["m"] == 2);
}

TEST_CASE("classification invariants across the grid") {
    elq::harness::SweepConfig cfg;
    cfg.d_max = 8;
    cfg.r_max = 13;
    cfg.m_max = 5;
    std::size_t threes = 0;
    for (const auto& input : elq::harness::enumerate_grid(cfg)) {
        const auto red = elq::reduce_to_standard(input);
        if (red.empty) continue;
        const auto& sys = red.system;
        elq::Classification c;
        REQUIRE_NOTHROW(c = elq::classify(sys));
        if (sys.r() <= 7) CHECK(std::holds_alternative<elq::cls::CaseOne>(c));
        if (const auto* t3 = std::get_if<elq::cls::CaseThree>(&c)) {
            ++threes;
            CHECK(t3->n >= 0);
            CHECK(t3->n <= static_cast<std::int64_t>(sys.r()) - 9);
            CHECK(t3->t >= 1);
            CHECK(t3->t <= sys.mult(sys.r()));
            CHECK(t3->b == static_cast<std::int64_t>(sys.r()));
            CHECK(sys.degree >= sys.mult(1) + t3->t);
        }
        if (const auto* tr = std::get_if<elq::cls::Truncate>(&c)) {
            CHECK(tr->b < static_cast<std::int64_t>(sys.r()));
            CHECK(sys.mult(tr->b + 1) < tr->t);
            CHECK(tr->t <= sys.mult(tr->b));
        }
        if (const auto* cone = std::get_if<elq::cls::Cone>(&c)) {
            CHECK(sys.r() >= 10);
            CHECK(sys.degree < sys.mult(1) + cone->t);
        }
    }
    CHECK(threes > 1000);
}
