#pragma once

#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mrb/free_mrba.hpp"
#include "mrb/relative.hpp"
#include "mrb/volterra.hpp"
#include "mrb/zinbiel.hpp"

namespace mrb {

/// Deterministic instance generator for the randomized defect suites.
/// Bounds: degree <= 3, tail length <= 3, coefficients in -3..3.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    Rational coefficient() {
        int c = uniform(-3, 3);
        return c == 0 ? Rational(1) : Rational(c);
    }

    std::string pick(const std::vector<std::string>& xs) {
        return xs[static_cast<std::size_t>(uniform(0, static_cast<int>(xs.size()) - 1))];
    }

    Monomial monomial(const std::vector<std::string>& vars, int max_degree, int min_degree = 0) {
        int d = uniform(min_degree, max_degree);
        Monomial m;
        for (int i = 0; i < d; ++i)
            m = m * Monomial::var(pick(vars));
        return m;
    }

    Polynomial polynomial(const std::vector<std::string>& vars, int max_degree,
                          int max_terms = 3) {
        Polynomial p;
        int n = uniform(1, max_terms);
        for (int i = 0; i < n; ++i)
            p += Polynomial::monomial(monomial(vars, max_degree), coefficient());
        return p;
    }

    DecoratedWord word(const DecorationSet& omega, const std::vector<std::string>& vars,
                       int max_tail, int max_degree = 3) {
        DecoratedWord w;
        w.head = monomial(vars, max_degree);
        int k = uniform(0, max_tail);
        for (int i = 0; i < k; ++i)
            w.tail.emplace_back(pick(omega.names()), monomial(vars, max_degree));
        return w;
    }

    FreeElement free_element(const DecorationSet& omega, const std::vector<std::string>& vars,
                             int max_tail, int max_terms = 2, int max_degree = 3) {
        FreeElement e;
        int n = uniform(1, max_terms);
        for (int i = 0; i < n; ++i)
            e.add_term(word(omega, vars, max_tail, max_degree), coefficient());
        return e;
    }

    /// head_case: 0 = head in F, 1 = head in F (x) A+, -1 = random.
    template <class F>
    RelativeWord<F> relative_word(const F& base, const DecorationSet& omega,
                                  const std::vector<std::string>& vars, int max_tail,
                                  int head_case = -1) {
        RelativeWord<F> w;
        w.fhead = base_term(base);
        bool aug = head_case == -1 ? uniform(0, 1) == 1 : head_case == 1;
        w.ahead = aug ? monomial(vars, 3, 1) : Monomial{};
        int k = uniform(0, max_tail);
        for (int i = 0; i < k; ++i)
            w.tail.push_back({pick(omega.names()), base_term(base), monomial(vars, 2, 1)});
        return w;
    }

    template <class F>
    RelativeElement<F> relative_element(const F& base, const DecorationSet& omega,
                                        const std::vector<std::string>& vars, int max_tail,
                                        int head_case = -1, int max_terms = 2) {
        RelativeElement<F> e;
        int n = uniform(1, max_terms);
        for (int i = 0; i < n; ++i)
            e.add_term(relative_word(base, omega, vars, max_tail, head_case), coefficient());
        return e;
    }

    ZinbielElement zinbiel_element(const DecorationSet& omega,
                                   const std::vector<std::string>& gens, int max_tail,
                                   int max_terms = 2) {
        ZinbielElement e;
        int n = uniform(1, max_terms);
        for (int i = 0; i < n; ++i) {
            DecoratedWord w;
            w.head = Monomial::var(pick(gens));
            int k = uniform(0, max_tail);
            for (int j = 0; j < k; ++j)
                w.tail.emplace_back(pick(omega.names()), Monomial::var(pick(gens)));
            e.add_term(w, coefficient());
        }
        return e;
    }

    VolterraAlgebra::BasisTerm base_term(const VolterraAlgebra&) { return uniform(0, 2); }
    FreeAlgebra::BasisTerm base_term(const FreeAlgebra& f) {
        return word(f.omega(), {"s", "t"}, 1, 2);
    }

private:
    std::mt19937_64 rng_;
};

struct CheckReport {
    std::string suite;
    int trials = 0;
    bool pass = true;
    std::string counterexample;

    void fail(const std::string& cx) {
        if (pass) {
            pass = false;
            counterexample = cx;
        }
    }
};

struct CheckOptions {
    DecorationSet omega{std::vector<std::string>{"a", "b", "c"}};
    int trials = 100;
    std::uint64_t seed = 0;
    bool corrupt = false; // negative-control fixture: perturbs the product under test
};

namespace suites {

inline std::vector<std::string> vars() { return {"x", "y"}; }
inline std::vector<std::string> gens() { return {"m", "n", "p"}; }

inline CheckReport rb(const CheckOptions& opt) {
    CheckReport rep{"rb", opt.trials};
    RandomGen g(opt.seed);
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto alpha = g.pick(opt.omega.names());
        auto beta = g.pick(opt.omega.names());
        auto a = g.free_element(opt.omega, vars(), 3);
        auto b = g.free_element(opt.omega, vars(), 3);
        auto d = rb_defect(opt.omega, alpha, beta, a, b);
        if (!d.is_zero())
            rep.fail("alpha=" + alpha + " beta=" + beta + " a=" + to_string(a) +
                     " b=" + to_string(b) + " defect=" + to_string(d));
    }
    return rep;
}

inline CheckReport combined(const CheckOptions& opt) {
    CheckReport rep{"combined", opt.trials};
    RandomGen g(opt.seed);
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        std::map<std::string, Rational> coeffs;
        for (auto& w : opt.omega.names())
            coeffs[w] = g.uniform(-3, 3);
        auto a = g.free_element(opt.omega, vars(), 2);
        auto b = g.free_element(opt.omega, vars(), 2);
        auto d = combined_operator_defect(opt.omega, coeffs, a, b);
        if (!d.is_zero())
            rep.fail("a=" + to_string(a) + " b=" + to_string(b) + " defect=" + to_string(d));
    }
    return rep;
}

inline KernelFamily random_kernels(RandomGen& g, const DecorationSet& omega) {
    KernelFamily k;
    for (auto& w : omega.names())
        k.kernels[w] = g.polynomial({"x"}, 3, 2);
    return k;
}

inline CheckReport volterra_rb(const CheckOptions& opt) {
    CheckReport rep{"volterra-rb", opt.trials};
    RandomGen g(opt.seed);
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto kernels = random_kernels(g, opt.omega);
        auto alpha = g.pick(opt.omega.names());
        auto beta = g.pick(opt.omega.names());
        auto f = g.polynomial({"x"}, 3);
        auto h = g.polynomial({"x"}, 3);
        auto d = vol_rb_defect(alpha, beta, f, h, kernels);
        if (!d.is_zero())
            rep.fail("alpha=" + alpha + " beta=" + beta + " f=" + f.str() + " g=" + h.str() +
                     " defect=" + d.str());
    }
    return rep;
}

inline CheckReport rb_relative(const CheckOptions& opt) {
    CheckReport rep{"rb-relative", opt.trials};
    RandomGen g(opt.seed);
    VolterraAlgebra base(opt.omega, KernelFamily::ones(opt.omega));
    RelativeAlgebra<VolterraAlgebra> alg(base, opt.omega);
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        // stratified so every pairing of head types (F vs F (x) A+) occurs
        int cu = t % 2, cv = (t / 2) % 2;
        auto alpha = g.pick(opt.omega.names());
        auto beta = g.pick(opt.omega.names());
        auto u = g.relative_element(base, opt.omega, vars(), 2, cu);
        auto v = g.relative_element(base, opt.omega, vars(), 2, cv);
        auto d = rel_rb_defect(alg, alpha, beta, u, v);
        if (!d.is_zero())
            rep.fail("alpha=" + alpha + " beta=" + beta + " u=" + to_string(u) +
                     " v=" + to_string(v) + " defect=" + to_string(d));
    }
    return rep;
}

inline CheckReport module_relation(const CheckOptions& opt) {
    CheckReport rep{"module-relation", opt.trials};
    RandomGen g(opt.seed);
    VolterraAlgebra base(opt.omega, KernelFamily::ones(opt.omega));
    RelativeAlgebra<VolterraAlgebra> alg(base, opt.omega);
    WeightMap lambda; // identically zero
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto alpha = g.pick(opt.omega.names());
        auto beta = g.pick(opt.omega.names());
        auto k = g.polynomial({"x"}, 2);
        auto u = g.relative_element(base, opt.omega, vars(), 2);
        auto d = module_relation_defect(base, alg, alpha, beta, k, u, lambda);
        if (!d.is_zero())
            rep.fail("alpha=" + alpha + " beta=" + beta + " k=" + k.str() +
                     " u=" + to_string(u) + " defect=" + to_string(d));
    }
    return rep;
}

inline ZinbielElement maybe_corrupt_prec(const CheckOptions& opt, const std::string& w,
                                         const ZinbielElement& a, const ZinbielElement& b) {
    auto r = prec(opt.omega, w, a, b);
    if (opt.corrupt)
        r += a; // deliberately wrong product for the negative control
    return r;
}

inline CheckReport zinbiel(const CheckOptions& opt) {
    CheckReport rep{"zinbiel", opt.trials};
    RandomGen g(opt.seed);
    auto pr = [&](const std::string& w, const ZinbielElement& a, const ZinbielElement& b) {
        return maybe_corrupt_prec(opt, w, a, b);
    };
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto alpha = g.pick(opt.omega.names());
        auto beta = g.pick(opt.omega.names());
        auto x = g.zinbiel_element(opt.omega, gens(), 2);
        auto y = g.zinbiel_element(opt.omega, gens(), 2);
        auto z = g.zinbiel_element(opt.omega, gens(), 2);
        auto d = pr(beta, pr(alpha, x, y), z) - pr(alpha, x, pr(beta, y, z)) -
                 pr(beta, x, pr(alpha, z, y));
        if (!d.is_zero())
            rep.fail("alpha=" + alpha + " beta=" + beta + " x=" + to_string(x) +
                     " y=" + to_string(y) + " z=" + to_string(z) + " defect=" + to_string(d));
    }
    return rep;
}

inline CheckReport dendriform(const CheckOptions& opt) {
    CheckReport rep{"dendriform", opt.trials};
    RandomGen g(opt.seed);
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto alpha = g.pick(opt.omega.names());
        auto beta = g.pick(opt.omega.names());
        auto x = g.zinbiel_element(opt.omega, gens(), 2);
        auto y = g.zinbiel_element(opt.omega, gens(), 2);
        auto z = g.zinbiel_element(opt.omega, gens(), 2);
        auto ds = dendriform_defects(opt.omega, alpha, beta, x, y, z);
        for (int i = 0; i < 3; ++i)
            if (!ds[static_cast<std::size_t>(i)].is_zero())
                rep.fail("axiom " + std::to_string(i + 1) + " alpha=" + alpha +
                         " beta=" + beta + " x=" + to_string(x) + " y=" + to_string(y) +
                         " z=" + to_string(z));
    }
    return rep;
}

inline CheckReport permutative(const CheckOptions& opt) {
    CheckReport rep{"permutative", opt.trials};
    RandomGen g(opt.seed);
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto alpha = g.pick(opt.omega.names());
        auto beta = g.pick(opt.omega.names());
        auto x = g.zinbiel_element(opt.omega, gens(), 2);
        auto y = g.zinbiel_element(opt.omega, gens(), 2);
        auto z = g.zinbiel_element(opt.omega, gens(), 2);
        auto d = permutative_defect(opt.omega, alpha, beta, x, y, z);
        if (!d.is_zero())
            rep.fail("alpha=" + alpha + " beta=" + beta + " x=" + to_string(x) +
                     " y=" + to_string(y) + " z=" + to_string(z) + " defect=" + to_string(d));
    }
    return rep;
}

inline CheckReport linear_combination(const CheckOptions& opt) {
    CheckReport rep{"linear-combination", opt.trials};
    RandomGen g(opt.seed);
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        CoeffRow ri, rj;
        for (auto& w : opt.omega.names()) {
            ri[w] = g.uniform(-3, 3);
            rj[w] = g.uniform(-3, 3);
        }
        auto x = g.zinbiel_element(opt.omega, gens(), 1);
        auto y = g.zinbiel_element(opt.omega, gens(), 1);
        auto z = g.zinbiel_element(opt.omega, gens(), 1);
        auto d = derived_zinbiel_defect(opt.omega, ri, rj, x, y, z);
        if (!d.is_zero())
            rep.fail("x=" + to_string(x) + " y=" + to_string(y) + " z=" + to_string(z) +
                     " defect=" + to_string(d));
    }
    return rep;
}

/// All generator words up to the given length, singleton Omega.
inline std::vector<ZinbielElement> all_zin_words(const DecorationSet& omega,
                                                 const std::vector<std::string>& gs,
                                                 int max_len) {
    std::vector<ZinbielElement> out;
    std::vector<std::vector<std::string>> level;
    for (auto& a : gs)
        level.push_back({a});
    const std::string& w = omega.names().front();
    for (int len = 1; len <= max_len; ++len) {
        for (auto& seq : level) {
            DecoratedWord word;
            word.head = Monomial::var(seq[0]);
            for (std::size_t i = 1; i < seq.size(); ++i)
                word.tail.emplace_back(w, Monomial::var(seq[i]));
            out.push_back(FreeElement::single(word));
        }
        std::vector<std::vector<std::string>> next;
        for (auto& seq : level)
            for (auto& a : gs) {
                auto s = seq;
                s.push_back(a);
                next.push_back(s);
            }
        level = next;
    }
    return out;
}

inline CheckReport loday(const CheckOptions& opt) {
    DecorationSet omega(std::vector<std::string>{"0"});
    CheckReport rep{"loday", 0};
    int max_len = 4;
    auto words = all_zin_words(omega, gens(), max_len);
    for (auto& a : words) {
        for (auto& b : words) {
            ++rep.trials;
            auto s = star(omega, a, b);
            if (opt.corrupt)
                s += a;
            auto lhs = identify_words(s);
            auto rhs = shuffle(identify_words(a), identify_words(b));
            if (!(lhs == rhs)) {
                rep.fail("a=" + to_string(a) + " b=" + to_string(b));
                return rep;
            }
        }
    }
    return rep;
}

inline CheckReport lift_free(const CheckOptions& opt) {
    CheckReport rep{"lift-free", opt.trials};
    RandomGen g(opt.seed);
    FreeAlgebra self(opt.omega);
    VolterraAlgebra vol(opt.omega, KernelFamily::ones(opt.omega));
    std::map<std::string, FreeElement> fid;
    std::map<std::string, PolyFunction> fx;
    for (auto& v : vars()) {
        fid[v] = embed_j(Polynomial::var(v));
        fx[v] = Polynomial::var("x");
    }
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto a = g.free_element(opt.omega, vars(), 2);
        auto b = g.free_element(opt.omega, vars(), 2);
        auto w = g.pick(opt.omega.names());
        auto p = g.polynomial(vars(), 2);
        // f = j_A into Sha itself: the lift is the identity
        if (!(universal_lift(self, fid, a) == a))
            rep.fail("identity lift: a=" + to_string(a));
        // multiplicativity and operator intertwining, Volterra target
        auto la = universal_lift(vol, fx, a);
        auto lb = universal_lift(vol, fx, b);
        if (!(universal_lift(vol, fx, diamond(a, b)) == la * lb))
            rep.fail("multiplicativity: a=" + to_string(a) + " b=" + to_string(b));
        if (!(universal_lift(vol, fx, apply_P(opt.omega, w, a)) == vol.applyP(w, la)))
            rep.fail("intertwining: w=" + w + " a=" + to_string(a));
        // restriction to A agrees with f
        if (!(universal_lift(vol, fx, embed_j(p)) == p.substitute(vol, fx)))
            rep.fail("restriction: p=" + p.str());
    }
    return rep;
}

inline CheckReport nested(const CheckOptions& opt) {
    CheckReport rep{"nested", opt.trials};
    RandomGen g(opt.seed);
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto w = g.word(opt.omega, vars(), 4);
        if (!(nested_form(opt.omega, w) == FreeElement::single(w)))
            rep.fail("w=" + w.str());
    }
    return rep;
}

inline CheckReport lift_relative(const CheckOptions& opt) {
    CheckReport rep{"lift-relative", opt.trials};
    RandomGen g(opt.seed);
    VolterraAlgebra base(opt.omega, KernelFamily::ones(opt.omega));
    RelativeAlgebra<VolterraAlgebra> self(base, opt.omega);
    std::map<std::string, RelativeElement<VolterraAlgebra>> fid;
    std::map<std::string, PolyFunction> fx;
    for (auto& v : vars()) {
        fid[v] = self.embed_jA(Polynomial::var(v));
        fx[v] = Polynomial::var("x");
    }
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto u = g.relative_element(base, opt.omega, vars(), 2, t % 2);
        auto v = g.relative_element(base, opt.omega, vars(), 2, (t / 2) % 2);
        auto w = g.pick(opt.omega.names());
        auto p = g.polynomial(vars(), 2);
        auto k = g.polynomial({"x"}, 2);
        // f = j_A into Sha^rel itself: the lift is the identity
        if (!(rel_universal_lift<VolterraAlgebra>(self, fid, u) == u))
            rep.fail("identity lift: u=" + to_string(u));
        // Volterra model over itself as target
        auto lu = rel_universal_lift<VolterraAlgebra>(base, fx, u);
        auto lv = rel_universal_lift<VolterraAlgebra>(base, fx, v);
        if (!(rel_universal_lift<VolterraAlgebra>(base, fx, self.mul(u, v)) == lu * lv))
            rep.fail("multiplicativity: u=" + to_string(u) + " v=" + to_string(v));
        if (!(rel_universal_lift<VolterraAlgebra>(base, fx, self.applyP(w, u)) ==
              base.applyP(w, lu)))
            rep.fail("intertwining: w=" + w + " u=" + to_string(u));
        if (!(rel_universal_lift<VolterraAlgebra>(base, fx, self.embed_jA(p)) ==
              p.substitute(base, fx)))
            rep.fail("restriction to A: p=" + p.str());
        if (!(rel_universal_lift<VolterraAlgebra>(base, fx, self.embed_i(k)) == k))
            rep.fail("restriction to F: k=" + k.str());
    }
    return rep;
}

inline CheckReport lift_zinbiel(const CheckOptions& opt) {
    CheckReport rep{"lift-zinbiel", opt.trials};
    RandomGen g(opt.seed);
    ZinbielAlgebra self(opt.omega);
    VolterraZinbiel vol(opt.omega, KernelFamily::ones(opt.omega));
    std::map<std::string, ZinbielElement> fid;
    std::map<std::string, PolyFunction> fx;
    for (auto& m : gens()) {
        fid[m] = generator(m);
        fx[m] = Polynomial::var("x");
    }
    for (int t = 0; t < opt.trials && rep.pass; ++t) {
        auto a = g.zinbiel_element(opt.omega, gens(), 2);
        auto b = g.zinbiel_element(opt.omega, gens(), 2);
        auto w = g.pick(opt.omega.names());
        if (!(zinbiel_lift(self, fid, a) == a))
            rep.fail("identity lift: a=" + to_string(a));
        auto la = zinbiel_lift(vol, fx, a);
        auto lb = zinbiel_lift(vol, fx, b);
        if (!(zinbiel_lift(vol, fx, prec(opt.omega, w, a, b)) == vol.prec(w, la, lb)))
            rep.fail("homomorphism: w=" + w + " a=" + to_string(a) + " b=" + to_string(b));
    }
    return rep;
}

} // namespace suites

inline std::vector<std::string> suite_names() {
    return {"rb",          "rb-relative", "module-relation", "zinbiel",
            "dendriform",  "permutative", "linear-combination", "loday",
            "lift-free",   "lift-relative", "lift-zinbiel",  "volterra-rb",
            "combined",    "nested"};
}

inline CheckReport run_suite(const std::string& name, const CheckOptions& opt) {
    using namespace suites;
    if (name == "rb")
        return rb(opt);
    if (name == "rb-relative")
        return rb_relative(opt);
    if (name == "module-relation")
        return module_relation(opt);
    if (name == "zinbiel")
        return zinbiel(opt);
    if (name == "dendriform")
        return dendriform(opt);
    if (name == "permutative")
        return permutative(opt);
    if (name == "linear-combination")
        return linear_combination(opt);
    if (name == "loday")
        return loday(opt);
    if (name == "lift-free")
        return lift_free(opt);
    if (name == "lift-relative")
        return lift_relative(opt);
    if (name == "lift-zinbiel")
        return lift_zinbiel(opt);
    if (name == "volterra-rb")
        return volterra_rb(opt);
    if (name == "combined")
        return combined(opt);
    if (name == "nested")
        return nested(opt);
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace mrb
