#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "mrb/free_mrba.hpp"
#include "mrb/volterra.hpp"

namespace mrb {

/// Elements of Sha_Omega(M) for a generating module M of named generators.
/// Same storage as FreeElement; heads and tail entries must be single
/// generators used linearly, since M carries the zero multiplication.
using ZinbielElement = FreeElement;

inline void ensure_linear(const ZinbielElement& e) {
    for (auto& [w, c] : e.terms()) {
        if (w.head.single_variable().empty())
            throw std::invalid_argument("head is not a single generator: " + w.head.str());
        for (auto& [d, m] : w.tail)
            if (m.single_variable().empty())
                throw std::invalid_argument("tail entry is not a single generator: " + m.str());
    }
}

inline ZinbielElement generator(const std::string& name) {
    return FreeElement::single(DecoratedWord{Monomial::var(name), {}});
}

/// a prec_w b = a0 (x) (abar shuffled with (w:b0) (x) bbar); equals a * P_w(b).
inline ZinbielElement prec(const DecorationSet& omega, const std::string& w,
                           const ZinbielElement& a, const ZinbielElement& b) {
    omega.require(w);
    return diamond(a, apply_P(omega, w, b));
}

/// a succ_w b = b prec_w a = P_w(a) * b.
inline ZinbielElement succ(const DecorationSet& omega, const std::string& w,
                           const ZinbielElement& a, const ZinbielElement& b) {
    return prec(omega, w, b, a);
}

/// Defect of (x o_a y) o_b z = x o_a (y o_b z) + x o_b (z o_a y), o = prec.
inline ZinbielElement zinbiel_defect(const DecorationSet& omega, const std::string& alpha,
                                     const std::string& beta, const ZinbielElement& x,
                                     const ZinbielElement& y, const ZinbielElement& z) {
    return prec(omega, beta, prec(omega, alpha, x, y), z) -
           prec(omega, alpha, x, prec(omega, beta, y, z)) -
           prec(omega, beta, x, prec(omega, alpha, z, y));
}

/// Defects of the three matching dendriform axioms; all zero on Sha_Omega(M).
inline std::array<ZinbielElement, 3> dendriform_defects(
    const DecorationSet& omega, const std::string& alpha, const std::string& beta,
    const ZinbielElement& x, const ZinbielElement& y, const ZinbielElement& z) {
    auto pr = [&](const std::string& w, const ZinbielElement& u, const ZinbielElement& v) {
        return prec(omega, w, u, v);
    };
    auto su = [&](const std::string& w, const ZinbielElement& u, const ZinbielElement& v) {
        return succ(omega, w, u, v);
    };
    ZinbielElement d1 = pr(beta, pr(alpha, x, y), z) - pr(alpha, x, pr(beta, y, z)) -
                        pr(beta, x, su(alpha, y, z));
    ZinbielElement d2 = pr(beta, su(alpha, x, y), z) - su(alpha, x, pr(beta, y, z));
    ZinbielElement d3 = su(alpha, pr(beta, x, y), z) + su(beta, su(alpha, x, y), z) -
                        su(alpha, x, su(beta, y, z));
    return {d1, d2, d3};
}

/// Defect of the multiple-permutative identity (x o_a y) o_b z = (x o_b z) o_a y.
inline ZinbielElement permutative_defect(const DecorationSet& omega, const std::string& alpha,
                                         const std::string& beta, const ZinbielElement& x,
                                         const ZinbielElement& y, const ZinbielElement& z) {
    return prec(omega, beta, prec(omega, alpha, x, y), z) -
           prec(omega, alpha, prec(omega, beta, x, z), y);
}

/// A derived product o_row = sum_w row[w] o_w.
using CoeffRow = std::map<std::string, Rational>;

inline ZinbielElement prec_row(const DecorationSet& omega, const CoeffRow& row,
                               const ZinbielElement& a, const ZinbielElement& b) {
    ZinbielElement r;
    for (auto& [w, c] : row)
        r.add_scaled(prec(omega, w, a, b), c);
    return r;
}

/// Zinbiel defect of the derived family from two coefficient rows; zero by
/// the linear-combination closure.
inline ZinbielElement derived_zinbiel_defect(const DecorationSet& omega, const CoeffRow& ri,
                                             const CoeffRow& rj, const ZinbielElement& x,
                                             const ZinbielElement& y, const ZinbielElement& z) {
    return prec_row(omega, rj, prec_row(omega, ri, x, y), z) -
           prec_row(omega, ri, x, prec_row(omega, rj, y, z)) -
           prec_row(omega, rj, x, prec_row(omega, ri, z, y));
}

/// a star b = a prec b + a succ b. Only defined when Omega is a singleton;
/// under the head-to-first-letter identification it is the shuffle product.
inline ZinbielElement star(const DecorationSet& omega, const ZinbielElement& a,
                           const ZinbielElement& b) {
    if (omega.size() != 1)
        throw std::invalid_argument("star requires a singleton decoration set");
    const std::string& w = omega.names().front();
    return prec(omega, w, a, b) + succ(omega, w, a, b);
}

/// The linear identification Sha(M) = Shuffle(M)+ in singleton mode: the head
/// becomes the first letter, decorations are dropped.
inline TensorSum<std::string> identify_words(const ZinbielElement& a) {
    ensure_linear(a);
    TensorSum<std::string> r;
    for (auto& [w, c] : a.terms()) {
        Word<std::string> letters;
        letters.push_back(w.head.single_variable());
        for (auto& [d, m] : w.tail)
            letters.push_back(m.single_variable());
        r.add_term(letters, c);
    }
    return r;
}

/// Lift of a generator assignment f : M -> D to the unique matching Zinbiel
/// homomorphism Sha_Omega(M) -> D. D supplies Element, zero, add, scale and
/// prec(omega, a, b).
template <class D>
typename D::Element zinbiel_lift(const D& target,
                                 const std::map<std::string, typename D::Element>& f,
                                 const ZinbielElement& a) {
    using E = typename D::Element;
    ensure_linear(a);
    auto assigned = [&](const Monomial& m) -> const E& {
        auto it = f.find(m.single_variable());
        if (it == f.end())
            throw std::invalid_argument("unassigned generator: " + m.single_variable());
        return it->second;
    };
    auto lift_word = [&](auto&& self, const DecoratedWord& w, std::size_t pos) -> E {
        const Monomial& head = pos == 0 ? w.head : w.tail[pos - 1].second;
        if (pos == w.tail.size())
            return assigned(head);
        return target.prec(w.tail[pos].first, assigned(head), self(self, w, pos + 1));
    };
    E r = target.zero();
    for (auto& [w, c] : a.terms())
        r = target.add(r, target.scale(c, lift_word(lift_word, w, 0)));
    return r;
}

/// Sha_Omega(M) as a matching Zinbiel target.
class ZinbielAlgebra {
public:
    explicit ZinbielAlgebra(DecorationSet omega) : omega_(std::move(omega)) {}

    const DecorationSet& omega() const { return omega_; }

    using Element = ZinbielElement;
    Element zero() const { return {}; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element scale(const Rational& c, const Element& a) const { return a.scaled(c); }
    Element prec(const std::string& w, const Element& a, const Element& b) const {
        return mrb::prec(omega_, w, a, b);
    }

private:
    DecorationSet omega_;
};

/// The Volterra model as a matching Zinbiel target: f o_w g = f * I_w(g).
class VolterraZinbiel {
public:
    VolterraZinbiel(DecorationSet omega, KernelFamily kernels)
        : omega_(std::move(omega)), kernels_(std::move(kernels)) {}

    using Element = PolyFunction;
    Element zero() const { return {}; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element scale(const Rational& c, const Element& a) const { return a.scaled(c); }
    Element prec(const std::string& w, const Element& a, const Element& b) const {
        omega_.require(w);
        return volterra_zinbiel(w, a, b, kernels_);
    }

private:
    DecorationSet omega_;
    KernelFamily kernels_;
};

} // namespace mrb
