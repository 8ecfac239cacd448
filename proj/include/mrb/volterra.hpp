#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "mrb/free_mrba.hpp"
#include "mrb/polynomial.hpp"

namespace mrb {

/// Exact polynomial function of the distinguished variable x.
using PolyFunction = Polynomial;

inline void require_univariate(const PolyFunction& f) {
    for (auto& v : f.variables())
        if (v != "x")
            throw std::invalid_argument("polynomial function must be univariate in x, got: " + v);
}

/// The kernels k_omega, one polynomial per decoration.
struct KernelFamily {
    std::map<std::string, PolyFunction> kernels;

    const PolyFunction& at(const std::string& w) const {
        auto it = kernels.find(w);
        if (it == kernels.end())
            throw std::invalid_argument("unknown decoration: " + w);
        return it->second;
    }

    static KernelFamily ones(const DecorationSet& omega) {
        KernelFamily k;
        for (auto& w : omega.names())
            k.kernels[w] = Polynomial::one();
        return k;
    }
};

/// Exact antiderivative with zero constant term: x^j |-> x^{j+1}/(j+1).
inline PolyFunction integrate_simple(const PolyFunction& f) {
    require_univariate(f);
    PolyFunction r;
    for (auto& [m, c] : f.terms()) {
        int j = m.degree();
        r += Polynomial::monomial(Monomial::var("x", j + 1), c / (j + 1));
    }
    return r;
}

/// Volterra operator I_w(f) = int_0^x k_w(t) f(t) dt.
inline PolyFunction integrate_op(const std::string& w, const PolyFunction& f,
                                 const KernelFamily& kernels) {
    return integrate_simple(kernels.at(w) * f);
}

/// Defect of the weight-0 matching Rota-Baxter identity for the I_w family.
inline PolyFunction vol_rb_defect(const std::string& alpha, const std::string& beta,
                                  const PolyFunction& f, const PolyFunction& g,
                                  const KernelFamily& kernels) {
    PolyFunction pf = integrate_op(alpha, f, kernels);
    PolyFunction pg = integrate_op(beta, g, kernels);
    return pf * pg - integrate_op(alpha, f * pg, kernels) - integrate_op(beta, pf * g, kernels);
}

/// The matching Zinbiel product f o_w g = f * I_w(g).
inline PolyFunction volterra_zinbiel(const std::string& w, const PolyFunction& f,
                                     const PolyFunction& g, const KernelFamily& kernels) {
    return f * integrate_op(w, g, kernels);
}

inline PolyFunction truncate_above(const PolyFunction& p, int degree_cap) {
    PolyFunction r;
    for (auto& [m, c] : p.terms())
        if (m.degree() <= degree_cap)
            r += Polynomial::monomial(m, c);
    return r;
}

/// Picard iteration for u = g + sum_w c_w I_w(u), truncated above degree_cap.
/// Converges because each I_w strictly raises minimal degree.
inline PolyFunction picard_solve(const PolyFunction& g,
                                 const std::map<std::string, Rational>& coeffs,
                                 const KernelFamily& kernels, int degree_cap,
                                 int iterations) {
    if (degree_cap < g.degree())
        throw std::invalid_argument("degree cap below degree of the inhomogeneity");
    PolyFunction u = truncate_above(g, degree_cap);
    for (int it = 0; it < iterations; ++it) {
        PolyFunction next = g;
        for (auto& [w, c] : coeffs)
            next += integrate_op(w, u, kernels).scaled(c);
        next = truncate_above(next, degree_cap);
        if (next == u)
            return u;
        u = next;
    }
    PolyFunction residual = g;
    for (auto& [w, c] : coeffs)
        residual += integrate_op(w, u, kernels).scaled(c);
    residual = truncate_above(residual, degree_cap) - u;
    throw std::runtime_error("picard iteration did not stabilize; residual: " + residual.str());
}

/// The Volterra model as an algebra object: matching Rota-Baxter target
/// contract plus the canonical-basis contract (basis {x^j}), so it can serve
/// both as lift target R and as base algebra F.
class VolterraAlgebra {
public:
    VolterraAlgebra(DecorationSet omega, KernelFamily kernels)
        : omega_(std::move(omega)), kernels_(std::move(kernels)) {
        for (auto& w : omega_.names())
            kernels_.at(w); // every decoration needs a kernel
    }

    const DecorationSet& omega() const { return omega_; }
    const KernelFamily& kernels() const { return kernels_; }

    using Element = PolyFunction;
    Element zero() const { return {}; }
    Element unit() const { return Polynomial::one(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element scale(const Rational& c, const Element& a) const { return a.scaled(c); }
    Element applyP(const std::string& w, const Element& a) const {
        omega_.require(w);
        return integrate_op(w, a, kernels_);
    }

    // canonical-basis contract: basis term j stands for x^j
    using BasisTerm = int;
    static BasisTerm unit_term() { return 0; }
    static Element term_element(BasisTerm j) {
        return Polynomial::monomial(Monomial::var("x", j));
    }
    static std::string term_name(BasisTerm j) { return term_element(j).str(); }
    static std::vector<std::pair<BasisTerm, Rational>> decompose(const Element& e) {
        require_univariate(e);
        std::vector<std::pair<BasisTerm, Rational>> r;
        for (auto& [m, c] : e.terms())
            r.emplace_back(m.degree(), c);
        return r;
    }
    Element mul_terms(BasisTerm a, BasisTerm b) const { return term_element(a + b); }
    Element kappa_term(const std::string& w, BasisTerm j) const {
        return applyP(w, term_element(j));
    }

    /// Structure morphism i_R when the model is its own base algebra.
    Element fromBaseTerm(BasisTerm j) const { return term_element(j); }
    Element fromBase(const Element& f) const { return f; }

private:
    DecorationSet omega_;
    KernelFamily kernels_;
};

} // namespace mrb
