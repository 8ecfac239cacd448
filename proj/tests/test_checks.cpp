#include <catch_amalgamated.hpp>

#include "mrb/checks.hpp"

using namespace mrb;

TEST_CASE("every suite passes with a small trial budget") {
    CheckOptions opt;
    opt.omega = DecorationSet(std::vector<std::string>{"a", "b", "c"});
    opt.trials = 10;
    opt.seed = 99;
    for (auto& name : suite_names()) {
        auto rep = run_suite(name, opt);
        INFO(name << ": " << rep.counterexample);
        CHECK(rep.pass);
    }
}

TEST_CASE("fixed seed reproduces counterexamples bit for bit") {
    CheckOptions opt;
    opt.omega = DecorationSet(std::vector<std::string>{"a", "b"});
    opt.trials = 5;
    opt.seed = 1234;
    opt.corrupt = true;
    auto r1 = run_suite("zinbiel", opt);
    auto r2 = run_suite("zinbiel", opt);
    CHECK_FALSE(r1.pass);
    CHECK(r1.counterexample == r2.counterexample);
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(run_suite("nope", CheckOptions{}), std::invalid_argument);
}

TEST_CASE("generator respects the documented bounds") {
    RandomGen g(5);
    DecorationSet omega(std::vector<std::string>{"a", "b", "c", "d"});
    for (int t = 0; t < 200; ++t) {
        auto w = g.word(omega, {"x", "y"}, 3);
        CHECK(w.tail.size() <= 3);
        CHECK(w.head.degree() <= 3);
        for (auto& [d, m] : w.tail) {
            CHECK(omega.contains(d));
            CHECK(m.degree() <= 3);
        }
        auto c = g.coefficient();
        CHECK(c >= -3);
        CHECK(c <= 3);
        CHECK(c != 0);
    }
}
