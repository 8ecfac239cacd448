#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mrb/free_mrba.hpp"
#include "mrb/polynomial.hpp"
#include "mrb/shuffle.hpp"

namespace mrb {

/// Weight family lambda_Omega. Identically zero for every base algebra used
/// in the free relative construction.
using WeightMap = std::map<std::string, Rational>;

inline Rational weight_of(const WeightMap& lambda, const std::string& w) {
    auto it = lambda.find(w);
    return it == lambda.end() ? Rational(0) : it->second;
}

/// Canonical basis word of Sha^rel_Omega(A) over a base algebra F. The head
/// ranges over all of F (x) A; every tail slot carries a nonconstant
/// A-monomial, enforcing the F (x) A+ constraint.
template <class F>
struct RelativeWord {
    using FTerm = typename F::BasisTerm;

    struct Slot {
        std::string dec;
        FTerm f;
        Monomial mono;

        bool operator==(const Slot& o) const {
            return dec == o.dec && f == o.f && mono == o.mono;
        }
        bool operator<(const Slot& o) const {
            if (dec != o.dec)
                return dec < o.dec;
            if (!(f == o.f))
                return f < o.f;
            return mono < o.mono;
        }
    };

    FTerm fhead{};
    Monomial ahead;
    std::vector<Slot> tail;

    bool operator==(const RelativeWord& o) const {
        return fhead == o.fhead && ahead == o.ahead && tail == o.tail;
    }
    bool operator<(const RelativeWord& o) const {
        if (tail.size() != o.tail.size())
            return tail.size() < o.tail.size();
        if (!(fhead == o.fhead))
            return fhead < o.fhead;
        if (!(ahead == o.ahead))
            return ahead < o.ahead;
        return tail < o.tail;
    }

    std::string str() const {
        std::string s = "[" + F::term_name(fhead) + "; " + ahead.str() + "]";
        for (auto& sl : tail)
            s += " (x) (" + sl.dec + ":[" + F::term_name(sl.f) + "; " + sl.mono.str() + "])";
        return s;
    }
};

template <class F>
using RelativeElement = LinearCombo<RelativeWord<F>>;

template <class F>
std::string to_string(const RelativeElement<F>& e) {
    if (e.is_zero())
        return "0";
    std::string s;
    for (auto& [w, c] : e.terms()) {
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (a != 1)
            s += to_string(a) + " * ";
        s += w.str();
    }
    return s;
}

/// The free commutative (F, kappa_Omega)-matching Rota-Baxter algebra
/// Sha^rel_Omega(A) over a pluggable weight-0 base algebra F. Also satisfies
/// the relative lift-target contract with itself as base.
template <class F>
class RelativeAlgebra {
public:
    using Word = RelativeWord<F>;
    using Slot = typename Word::Slot;
    using FTerm = typename F::BasisTerm;
    using Element = RelativeElement<F>;

    RelativeAlgebra(F base, DecorationSet omega)
        : base_(std::move(base)), omega_(std::move(omega)) {}

    const F& base() const { return base_; }
    const DecorationSet& omega() const { return omega_; }

    Element zero() const { return {}; }
    Element unit() const { return Element::single(Word{F::unit_term(), Monomial{}, {}}); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element scale(const Rational& c, const Element& a) const { return a.scaled(c); }

    static void check_word(const Word& w) {
        for (auto& sl : w.tail)
            if (sl.mono.is_one())
                throw std::invalid_argument("tail monomial must be nonconstant");
    }

    /// i : F -> Sha^rel, tail-free words with constant A-part.
    Element embed_i(const typename F::Element& f) const {
        Element e;
        for (auto& [t, c] : F::decompose(f))
            e.add_term(Word{t, Monomial{}, {}}, c);
        return e;
    }

    /// j_A : A -> Sha^rel, tail-free words with unit F-part.
    Element embed_jA(const Polynomial& p) const {
        Element e;
        for (auto& [m, c] : p.terms())
            e.add_term(Word{F::unit_term(), m, {}}, c);
        return e;
    }

    /// Heads multiply in F (x) A, tails shuffle.
    Element mul(const Element& a, const Element& b) const {
        return Element::bilinear(a, b, [&](const Word& x, const Word& y) {
            Element r;
            auto heads = F::decompose(base_.mul_terms(x.fhead, y.fhead));
            Monomial am = x.ahead * y.ahead;
            auto sh = shuffle_words(x.tail, y.tail);
            for (auto& [t, ch] : heads)
                for (auto& [tl, cs] : sh.terms())
                    r.add_term(Word{t, am, tl}, ch * cs);
            return r;
        });
    }

    /// The three-case operator on the head decomposition F (+) (F (x) A+).
    Element applyP(const std::string& w, const Element& u) const {
        omega_.require(w);
        return Element::linear(u, [&](const Word& x) { return applyP_word(w, x); });
    }

    Element applyP_word(const std::string& w, const Word& x) const {
        Element r;
        if (!x.ahead.is_one()) {
            // head in F (x) A+: push the whole head into the tail
            Word y;
            y.fhead = F::unit_term();
            y.tail.reserve(x.tail.size() + 1);
            y.tail.push_back(Slot{w, x.fhead, x.ahead});
            y.tail.insert(y.tail.end(), x.tail.begin(), x.tail.end());
            r.add_term(y, 1);
            return r;
        }
        auto kappa = base_.kappa_term(w, x.fhead);
        if (x.tail.empty())
            return embed_i(kappa);
        // head in F, nonempty tail: kappa(u0) (x) tail
        //                           - 1 (x) (w1 : kappa(u0) u1) (x) tail'
        for (auto& [t, c] : F::decompose(kappa))
            r.add_term(Word{t, Monomial{}, x.tail}, c);
        auto prod = base_.mul(kappa, F::term_element(x.tail.front().f));
        for (auto& [t, c] : F::decompose(prod)) {
            Word y;
            y.fhead = F::unit_term();
            y.tail = x.tail;
            y.tail.front().f = t;
            r.add_term(y, -c);
        }
        return r;
    }

    /// Structure morphism for the relative lift-target contract.
    Element fromBaseTerm(const FTerm& t) const {
        return Element::single(Word{t, Monomial{}, {}});
    }
    Element fromBase(const typename F::Element& f) const { return embed_i(f); }

private:
    F base_;
    DecorationSet omega_;
};

/// Defect of the weight-0 matching Rota-Baxter identity in Sha^rel.
template <class F>
RelativeElement<F> rel_rb_defect(const RelativeAlgebra<F>& alg, const std::string& alpha,
                                 const std::string& beta, const RelativeElement<F>& u,
                                 const RelativeElement<F>& v) {
    auto pu = alg.applyP(alpha, u);
    auto pv = alg.applyP(beta, v);
    return alg.mul(pu, pv) - alg.applyP(alpha, alg.mul(u, pv)) -
           alg.applyP(beta, alg.mul(pu, v));
}

/// Defect of the module relation
///   kappa_a(k) P_b(u) - P_a(k P_b(u)) - P_b(kappa_a(k) u) - lambda_b P_a(k u)
/// in any (F, kappa_Omega)-matching Rota-Baxter algebra R.
template <class F, class R>
typename R::Element module_relation_defect(const F& base, const R& target,
                                           const std::string& alpha, const std::string& beta,
                                           const typename F::Element& k,
                                           const typename R::Element& u,
                                           const WeightMap& lambda) {
    auto kap = target.fromBase(base.applyP(alpha, k));
    auto ik = target.fromBase(k);
    auto pbu = target.applyP(beta, u);
    auto lhs = target.mul(kap, pbu);
    auto d = target.add(lhs, target.scale(-1, target.applyP(alpha, target.mul(ik, pbu))));
    d = target.add(d, target.scale(-1, target.applyP(beta, target.mul(kap, u))));
    d = target.add(d, target.scale(-weight_of(lambda, beta),
                                   target.applyP(alpha, target.mul(ik, u))));
    return d;
}

/// Lift of a variable assignment f : X -> R to the unique
/// (F, kappa_Omega)-homomorphism Sha^rel_Omega(Q[X]) -> R.
template <class F, class R>
typename R::Element rel_universal_lift(const R& target,
                                       const std::map<std::string, typename R::Element>& f,
                                       const RelativeElement<F>& u) {
    using E = typename R::Element;
    auto eval_mono = [&](const Monomial& m) -> E {
        return Polynomial::monomial(m).substitute(target, f);
    };
    using Word = RelativeWord<F>;
    auto lift_word = [&](auto&& self, const Word& w, std::size_t pos) -> E {
        typename F::BasisTerm fhead = pos == 0 ? w.fhead : w.tail[pos - 1].f;
        const Monomial& mono = pos == 0 ? w.ahead : w.tail[pos - 1].mono;
        E head = target.mul(target.fromBaseTerm(fhead), eval_mono(mono));
        if (pos == w.tail.size())
            return head;
        return target.mul(head,
                          target.applyP(w.tail[pos].dec, self(self, w, pos + 1)));
    };
    E r = target.zero();
    for (auto& [w, c] : u.terms())
        r = target.add(r, target.scale(c, lift_word(lift_word, w, 0)));
    return r;
}

} // namespace mrb
