#pragma once

#include <nlohmann/json.hpp>

#include "mrb/free_mrba.hpp"
#include "mrb/polynomial.hpp"
#include "mrb/relative.hpp"

namespace mrb {

using json = nlohmann::json;

inline json monomial_to_json(const Monomial& m) {
    json o = json::object();
    for (auto& [v, e] : m.exponents())
        o[v] = e;
    return o;
}

inline Monomial monomial_from_json(const json& o) {
    Monomial m;
    for (auto& [v, e] : o.items())
        m = m * Monomial::var(v, e.get<int>());
    return m;
}

inline json poly_to_json(const Polynomial& p) {
    json a = json::array();
    for (auto& [m, c] : p.terms())
        a.push_back({{"coeff", to_string(c)}, {"vars", monomial_to_json(m)}});
    return a;
}

inline Polynomial poly_from_json(const json& a) {
    Polynomial p;
    for (auto& t : a)
        p += Polynomial::monomial(monomial_from_json(t.at("vars")),
                                  parse_rational(t.at("coeff").get<std::string>()));
    return p;
}

inline json free_to_json(const FreeElement& e) {
    json a = json::array();
    for (auto& [w, c] : e.terms()) {
        json tail = json::array();
        for (auto& [d, m] : w.tail)
            tail.push_back(json::array({d, monomial_to_json(m)}));
        a.push_back({{"coeff", to_string(c)},
                     {"head", monomial_to_json(w.head)},
                     {"tail", tail}});
    }
    return a;
}

inline FreeElement free_from_json(const json& a) {
    FreeElement e;
    for (auto& t : a) {
        DecoratedWord w;
        w.head = monomial_from_json(t.at("head"));
        for (auto& s : t.at("tail"))
            w.tail.emplace_back(s.at(0).get<std::string>(), monomial_from_json(s.at(1)));
        e.add_term(w, parse_rational(t.at("coeff").get<std::string>()));
    }
    return e;
}

template <class F>
json relative_to_json(const RelativeElement<F>& e) {
    json a = json::array();
    for (auto& [w, c] : e.terms()) {
        json tail = json::array();
        for (auto& sl : w.tail)
            tail.push_back(json::array(
                {sl.dec,
                 {{"fbasis", F::term_name(sl.f)}, {"mono", monomial_to_json(sl.mono)}}}));
        a.push_back({{"coeff", to_string(c)},
                     {"head", {{"fbasis", F::term_name(w.fhead)},
                               {"mono", monomial_to_json(w.ahead)}}},
                     {"tail", tail}});
    }
    return a;
}

} // namespace mrb
