#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace mrb {

/// Commutative monomial: finite-support map from variable name to positive
/// exponent. The empty map is the unit monomial 1. Total order is graded lex.
class Monomial {
public:
    Monomial() = default;

    static Monomial var(const std::string& name, int exp = 1) {
        Monomial m;
        if (exp < 0)
            throw std::invalid_argument("negative exponent");
        if (exp > 0)
            m.exps_[name] = exp;
        return m;
    }

    bool is_one() const { return exps_.empty(); }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : exps_)
            d += e;
        return d;
    }

    /// Single variable of degree 1, or empty string otherwise.
    std::string single_variable() const {
        if (exps_.size() == 1 && exps_.begin()->second == 1)
            return exps_.begin()->first;
        return {};
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [v, e] : o.exps_)
            if ((r.exps_[v] += e) == 0)
                r.exps_.erase(v);
        return r;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    /// Graded lexicographic: first by total degree, ties broken by the sorted
    /// (variable, exponent) sequence.
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db)
            return da < db;
        return exps_ < o.exps_;
    }

    const std::map<std::string, int>& exponents() const { return exps_; }

    std::string str() const {
        if (exps_.empty())
            return "1";
        std::string s;
        for (auto& [v, e] : exps_) {
            if (!s.empty())
                s += "*";
            s += v;
            if (e != 1)
                s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::map<std::string, int> exps_;
};

} // namespace mrb
