#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mrb/polynomial.hpp"
#include "mrb/shuffle.hpp"

namespace mrb {

/// The index set Omega of operator decorations, fixed per session.
class DecorationSet {
public:
    DecorationSet() = default;
    explicit DecorationSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw std::invalid_argument("decoration set must be nonempty");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("duplicate decoration: " + names_[i]);
    }

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }

    bool contains(const std::string& w) const {
        for (auto& n : names_)
            if (n == w)
                return true;
        return false;
    }
    void require(const std::string& w) const {
        if (!contains(w))
            throw std::invalid_argument("unknown decoration: " + w);
    }

private:
    std::vector<std::string> names_;
};

/// Canonical basis word of Sha_Omega(A): a head monomial a0 together with an
/// ordered tail of (decoration, monomial) slots.
struct DecoratedWord {
    using Slot = std::pair<std::string, Monomial>;

    Monomial head;
    std::vector<Slot> tail;

    bool operator==(const DecoratedWord& o) const {
        return head == o.head && tail == o.tail;
    }
    bool operator<(const DecoratedWord& o) const {
        if (tail.size() != o.tail.size())
            return tail.size() < o.tail.size();
        if (!(head == o.head))
            return head < o.head;
        return tail < o.tail;
    }

    std::string str() const {
        std::string s = head.str();
        for (auto& [w, m] : tail)
            s += " (x) (" + w + ":" + m.str() + ")";
        return s;
    }
};

/// Element of Sha_Omega(A) in the monomial-word basis.
using FreeElement = LinearCombo<DecoratedWord>;

inline std::string to_string(const FreeElement& e) {
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

/// Natural embedding j_A : A -> Sha_Omega(A), tail-free words.
inline FreeElement embed_j(const Polynomial& p) {
    FreeElement e;
    for (auto& [m, c] : p.terms())
        e.add_term(DecoratedWord{m, {}}, c);
    return e;
}

/// Augmented shuffle product: heads multiply in A, tails shuffle.
inline FreeElement diamond(const FreeElement& a, const FreeElement& b) {
    return FreeElement::bilinear(a, b, [](const DecoratedWord& x, const DecoratedWord& y) {
        FreeElement r;
        auto sh = shuffle_words(x.tail, y.tail);
        Monomial h = x.head * y.head;
        for (auto& [t, c] : sh.terms())
            r.add_term(DecoratedWord{h, t}, c);
        return r;
    });
}

/// P_omega : a0 (x) tail  |->  1 (x) (omega:a0) (x) tail.
inline FreeElement apply_P(const DecorationSet& omega, const std::string& w,
                           const FreeElement& a) {
    omega.require(w);
    return FreeElement::linear(a, [&](const DecoratedWord& x) {
        DecoratedWord r;
        r.head = Monomial{};
        r.tail.reserve(x.tail.size() + 1);
        r.tail.emplace_back(w, x.head);
        r.tail.insert(r.tail.end(), x.tail.begin(), x.tail.end());
        return FreeElement::single(r);
    });
}

/// Defect of the weight-0 matching Rota-Baxter identity; zero identically.
inline FreeElement rb_defect(const DecorationSet& omega, const std::string& alpha,
                             const std::string& beta, const FreeElement& a,
                             const FreeElement& b) {
    FreeElement pa = apply_P(omega, alpha, a);
    FreeElement pb = apply_P(omega, beta, b);
    return diamond(pa, pb) - apply_P(omega, alpha, diamond(a, pb)) -
           apply_P(omega, beta, diamond(pa, b));
}

/// Defect of the Rota-Baxter identity for P = sum_w c_w P_w; zero since all
/// weights vanish.
inline FreeElement combined_operator_defect(const DecorationSet& omega,
                                            const std::map<std::string, Rational>& coeffs,
                                            const FreeElement& a, const FreeElement& b) {
    auto P = [&](const FreeElement& x) {
        FreeElement r;
        for (auto& [w, c] : coeffs)
            r.add_scaled(apply_P(omega, w, x), c);
        return r;
    };
    FreeElement pa = P(a), pb = P(b);
    return diamond(pa, pb) - P(diamond(a, pb)) - P(diamond(pa, b));
}

/// Evaluates a0 * P_{a1}(a1 * P_{a2}( ... )) inside Sha_Omega(A); equal to the
/// single word w itself.
inline FreeElement nested_form(const DecorationSet& omega, const DecoratedWord& w) {
    FreeElement acc = embed_j(Polynomial::one());
    for (auto it = w.tail.rbegin(); it != w.tail.rend(); ++it) {
        acc = diamond(embed_j(Polynomial::monomial(it->second)), acc);
        acc = apply_P(omega, it->first, acc);
    }
    return diamond(embed_j(Polynomial::monomial(w.head)), acc);
}

/// Unique structure-preserving lift of a variable assignment f : X -> R to a
/// homomorphism Sha_Omega(Q[X]) -> R. R supplies the matching Rota-Baxter
/// target contract: Element, zero, unit, add, mul, scale, applyP.
template <class R>
typename R::Element universal_lift(const R& target,
                                   const std::map<std::string, typename R::Element>& f,
                                   const FreeElement& a) {
    using E = typename R::Element;
    auto eval_mono = [&](const Monomial& m) -> E {
        return Polynomial::monomial(m).substitute(target, f);
    };
    auto lift_word = [&](auto&& self, const DecoratedWord& w, std::size_t pos) -> E {
        Monomial head = pos == 0 ? w.head : w.tail[pos - 1].second;
        if (pos == w.tail.size())
            return eval_mono(head);
        return target.mul(eval_mono(head),
                          target.applyP(w.tail[pos].first, self(self, w, pos + 1)));
    };
    E r = target.zero();
    for (auto& [w, c] : a.terms())
        r = target.add(r, target.scale(c, lift_word(lift_word, w, 0)));
    return r;
}

/// Sha_Omega(Q[X]) as an algebra object: the lift target contract plus the
/// canonical-basis contract needed when it serves as a base algebra.
class FreeAlgebra {
public:
    explicit FreeAlgebra(DecorationSet omega) : omega_(std::move(omega)) {}

    const DecorationSet& omega() const { return omega_; }

    using Element = FreeElement;
    Element zero() const { return {}; }
    Element unit() const { return embed_j(Polynomial::one()); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element mul(const Element& a, const Element& b) const { return diamond(a, b); }
    Element scale(const Rational& c, const Element& a) const { return a.scaled(c); }
    Element applyP(const std::string& w, const Element& a) const {
        return apply_P(omega_, w, a);
    }

    // canonical-basis contract
    using BasisTerm = DecoratedWord;
    static BasisTerm unit_term() { return DecoratedWord{}; }
    static Element term_element(const BasisTerm& t) { return Element::single(t); }
    static std::string term_name(const BasisTerm& t) { return t.str(); }
    static std::vector<std::pair<BasisTerm, Rational>> decompose(const Element& e) {
        return {e.terms().begin(), e.terms().end()};
    }
    Element mul_terms(const BasisTerm& a, const BasisTerm& b) const {
        return diamond(term_element(a), term_element(b));
    }
    Element kappa_term(const std::string& w, const BasisTerm& t) const {
        return applyP(w, term_element(t));
    }

private:
    DecorationSet omega_;
};

} // namespace mrb
