#include <catch_amalgamated.hpp>

#include "mrb/checks.hpp"
#include "mrb/zinbiel.hpp"

using namespace mrb;

namespace {

const DecorationSet OMEGA(std::vector<std::string>{"a", "b", "c"});
const DecorationSet SINGLE(std::vector<std::string>{"0"});

DecoratedWord gw(const std::string& head,
                 std::vector<std::pair<std::string, std::string>> tail = {}) {
    DecoratedWord w;
    w.head = Monomial::var(head);
    for (auto& [d, m] : tail)
        w.tail.emplace_back(d, Monomial::var(m));
    return w;
}

} // namespace

TEST_CASE("linearity guard") {
    CHECK_NOTHROW(ensure_linear(generator("m")));
    FreeElement bad = FreeElement::single(DecoratedWord{Monomial::var("m", 2), {}});
    CHECK_THROWS_AS(ensure_linear(bad), std::invalid_argument);
}

TEST_CASE("left product on generators") {
    auto m = generator("m"), n = generator("n"), p = generator("p");
    CHECK(prec(OMEGA, "a", m, n) == FreeElement::single(gw("m", {{"a", "n"}})));
    CHECK(prec(OMEGA, "a", m, ZinbielElement{}).is_zero());
    // (m <a n) <b p = m(x)(a,n)(x)(b,p) + m(x)(b,p)(x)(a,n)
    auto r = prec(OMEGA, "b", prec(OMEGA, "a", m, n), p);
    ZinbielElement expect;
    expect.add_term(gw("m", {{"a", "n"}, {"b", "p"}}), 1);
    expect.add_term(gw("m", {{"b", "p"}, {"a", "n"}}), 1);
    CHECK(r == expect);
}

TEST_CASE("right product is the flip") {
    auto m = generator("m"), n = generator("n");
    CHECK(succ(OMEGA, "a", m, n) == FreeElement::single(gw("n", {{"a", "m"}})));
    RandomGen g(61);
    for (int t = 0; t < 50; ++t) {
        auto x = g.zinbiel_element(OMEGA, {"m", "n", "p"}, 2);
        auto y = g.zinbiel_element(OMEGA, {"m", "n", "p"}, 2);
        auto w = g.pick(OMEGA.names());
        CHECK(succ(OMEGA, w, x, y) == prec(OMEGA, w, y, x));
        CHECK(succ(OMEGA, w, x, y) == diamond(apply_P(OMEGA, w, x), y));
    }
}

TEST_CASE("Zinbiel axiom") {
    auto rep = suites::zinbiel(CheckOptions{OMEGA, 200, 9, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
    // corrupted product is caught (negative control)
    auto neg = suites::zinbiel(CheckOptions{OMEGA, 20, 9, true});
    CHECK_FALSE(neg.pass);
    CHECK_FALSE(neg.counterexample.empty());
}

TEST_CASE("dendriform axioms") {
    auto rep = suites::dendriform(CheckOptions{OMEGA, 200, 10, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
    // degenerate inputs
    auto z = ZinbielElement{};
    auto ds = dendriform_defects(OMEGA, "a", "b", z, z, z);
    for (auto& d : ds)
        CHECK(d.is_zero());
}

TEST_CASE("multiple-permutative identity") {
    auto rep = suites::permutative(CheckOptions{OMEGA, 200, 11, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
}

TEST_CASE("linear combinations stay Zinbiel") {
    auto rep = suites::linear_combination(CheckOptions{OMEGA, 100, 12, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
    // single row with coefficient 1 is the plain product
    CoeffRow row{{"a", 1}};
    auto m = generator("m"), n = generator("n");
    CHECK(prec_row(OMEGA, row, m, n) == prec(OMEGA, "a", m, n));
    CHECK(prec_row(OMEGA, CoeffRow{}, m, n).is_zero());
}

TEST_CASE("star product and Loday recovery") {
    auto m = generator("m"), n = generator("n");
    CHECK_THROWS_AS(star(OMEGA, m, n), std::invalid_argument);
    auto s = star(SINGLE, m, n);
    ZinbielElement expect;
    expect.add_term(DecoratedWord{Monomial::var("m"), {{"0", Monomial::var("n")}}}, 1);
    expect.add_term(DecoratedWord{Monomial::var("n"), {{"0", Monomial::var("m")}}}, 1);
    CHECK(s == expect);
    CHECK(star(SINGLE, m, n) == star(SINGLE, n, m));
    // identification sends it to the two-letter shuffle
    TensorSum<std::string> sh;
    sh.add_term({"m", "n"}, 1);
    sh.add_term({"n", "m"}, 1);
    CHECK(identify_words(s) == sh);

    auto rep = suites::loday(CheckOptions{SINGLE, 0, 0, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
    CHECK(rep.trials == 14400); // (3 + 9 + 27 + 81)^2 word pairs

    auto neg = suites::loday(CheckOptions{SINGLE, 0, 0, true});
    CHECK_FALSE(neg.pass);
}

TEST_CASE("Zinbiel lift") {
    VolterraZinbiel vol(OMEGA, KernelFamily::ones(OMEGA));
    std::map<std::string, PolyFunction> f{{"m", Polynomial::var("x")}};
    // m (x) (w,m) -> x * I_w(x) = x^3/2
    CHECK(zinbiel_lift(vol, f, FreeElement::single(gw("m", {{"a", "m"}}))) ==
          Polynomial::var("x", 3).scaled(Rational(1, 2)));
    CHECK_THROWS_WITH(zinbiel_lift(vol, {}, generator("q")), "unassigned generator: q");

    auto rep = suites::lift_zinbiel(CheckOptions{OMEGA, 100, 13, false});
    INFO(rep.counterexample);
    CHECK(rep.pass);
}
