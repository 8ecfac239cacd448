#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "mrb/combo.hpp"
#include "mrb/monomial.hpp"
#include "mrb/rational.hpp"

namespace mrb {

/// Element of the augmented polynomial algebra Q[X]: finite-support map
/// Monomial -> Rational with no zero coefficients stored.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(const Rational& c) {
        Polynomial p;
        p.terms_.add_term(Monomial{}, c);
        return p;
    }
    static Polynomial one() { return constant(1); }
    static Polynomial var(const std::string& name, int exp = 1) {
        Polynomial p;
        p.terms_.add_term(Monomial::var(name, exp), 1);
        return p;
    }
    static Polynomial monomial(const Monomial& m, const Rational& c = 1) {
        Polynomial p;
        p.terms_.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.is_zero(); }

    Polynomial operator+(const Polynomial& o) const { return Polynomial(terms_ + o.terms_); }
    Polynomial operator-(const Polynomial& o) const { return Polynomial(terms_ - o.terms_); }
    Polynomial operator-() const { return Polynomial(-terms_); }
    Polynomial& operator+=(const Polynomial& o) {
        terms_ += o.terms_;
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        terms_ -= o.terms_;
        return *this;
    }

    Polynomial operator*(const Polynomial& o) const {
        return Polynomial(LinearCombo<Monomial>::bilinear(
            terms_, o.terms_, [](const Monomial& a, const Monomial& b) {
                return LinearCombo<Monomial>::single(a * b);
            }));
    }

    Polynomial scaled(const Rational& c) const { return Polynomial(terms_.scaled(c)); }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const { return terms_.terms() < o.terms_.terms(); }

    const std::map<Monomial, Rational>& terms() const { return terms_.terms(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms().find(m);
        return it == terms().end() ? Rational(0) : it->second;
    }

    int degree() const {
        int d = 0;
        for (auto& [m, c] : terms())
            d = std::max(d, m.degree());
        return d;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (auto& [m, c] : terms())
            for (auto& [v, e] : m.exponents())
                vs.insert(v);
        return vs;
    }

    /// Unique split p = c*1 + p_plus with p_plus in the augmentation ideal.
    std::pair<Rational, Polynomial> aug_split() const {
        Rational c = coeff(Monomial{});
        Polynomial plus = *this;
        plus.terms_.add_term(Monomial{}, -c);
        return {c, plus};
    }

    /// Evaluation under the algebra homomorphism extending the assignment.
    /// Alg supplies Element, zero(), unit(), add, mul, scale.
    template <class Alg>
    typename Alg::Element substitute(
        const Alg& alg,
        const std::map<std::string, typename Alg::Element>& assignment) const {
        auto r = alg.zero();
        for (auto& [m, c] : terms()) {
            auto t = alg.unit();
            for (auto& [v, e] : m.exponents()) {
                auto it = assignment.find(v);
                if (it == assignment.end())
                    throw std::invalid_argument("unassigned variable: " + v);
                for (int i = 0; i < e; ++i)
                    t = alg.mul(t, it->second);
            }
            r = alg.add(r, alg.scale(c, t));
        }
        return r;
    }

    /// Canonical text form: terms in descending monomial order,
    /// e.g. "2*x^2*y - 1/3".
    std::string str() const {
        if (is_zero())
            return "0";
        std::string s;
        for (auto it = terms().rbegin(); it != terms().rend(); ++it) {
            const auto& [m, c] = *it;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            if (m.is_one())
                s += to_string(a);
            else if (a == 1)
                s += m.str();
            else
                s += to_string(a) + "*" + m.str();
        }
        return s;
    }

private:
    explicit Polynomial(LinearCombo<Monomial> t) : terms_(std::move(t)) {}

    LinearCombo<Monomial> terms_;
};

/// Algebra object for Polynomial itself, so substitute() can target Q[X].
struct PolynomialAlgebra {
    using Element = Polynomial;
    Element zero() const { return {}; }
    Element unit() const { return Polynomial::one(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element scale(const Rational& c, const Element& a) const { return a.scaled(c); }
};

} // namespace mrb
