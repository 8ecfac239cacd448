#pragma once

#include <map>

#include "mrb/rational.hpp"

namespace mrb {

/// Finite rational linear combination over an ordered basis type B.
/// Zero coefficients are never stored, so operator== is canonical equality.
template <class B>
class LinearCombo {
public:
    LinearCombo() = default;

    static LinearCombo single(const B& b, Rational c = 1) {
        LinearCombo r;
        r.add_term(b, c);
        return r;
    }

    void add_term(const B& b, const Rational& c) {
        if (c == 0)
            return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }

    LinearCombo& operator+=(const LinearCombo& o) {
        for (auto& [b, c] : o.terms_)
            add_term(b, c);
        return *this;
    }
    LinearCombo& operator-=(const LinearCombo& o) {
        for (auto& [b, c] : o.terms_)
            add_term(b, -c);
        return *this;
    }
    LinearCombo operator+(const LinearCombo& o) const {
        LinearCombo r = *this;
        r += o;
        return r;
    }
    LinearCombo operator-(const LinearCombo& o) const {
        LinearCombo r = *this;
        r -= o;
        return r;
    }
    LinearCombo operator-() const { return scaled(-1); }

    LinearCombo scaled(const Rational& c) const {
        LinearCombo r;
        if (c == 0)
            return r;
        for (auto& [b, k] : terms_)
            r.terms_.emplace(b, k * c);
        return r;
    }

    bool operator==(const LinearCombo& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinearCombo& o) const { return !(*this == o); }

    const std::map<B, Rational>& terms() const { return terms_; }

    /// Bilinear extension of a basis-level product.
    template <class F>
    static LinearCombo bilinear(const LinearCombo& a, const LinearCombo& b, F&& term_mul) {
        LinearCombo r;
        for (auto& [x, cx] : a.terms_)
            for (auto& [y, cy] : b.terms_)
                r.add_scaled(term_mul(x, y), cx * cy);
        return r;
    }

    /// Linear extension of a basis-level map.
    template <class F>
    static LinearCombo linear(const LinearCombo& a, F&& term_map) {
        LinearCombo r;
        for (auto& [x, cx] : a.terms_)
            r.add_scaled(term_map(x), cx);
        return r;
    }

    void add_scaled(const LinearCombo& o, const Rational& c) {
        for (auto& [b, k] : o.terms_)
            add_term(b, k * c);
    }

private:
    std::map<B, Rational> terms_;
};

} // namespace mrb
