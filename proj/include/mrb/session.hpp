#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>

#include "mrb/free_mrba.hpp"
#include "mrb/json_io.hpp"
#include "mrb/parser.hpp"
#include "mrb/relative.hpp"
#include "mrb/volterra.hpp"
#include "mrb/zinbiel.hpp"

namespace mrb {

enum class Mode { Free, Relative, Zinbiel, Volterra };

inline Mode parse_mode(const std::string& s) {
    if (s == "free")
        return Mode::Free;
    if (s == "relative")
        return Mode::Relative;
    if (s == "zinbiel")
        return Mode::Zinbiel;
    if (s == "volterra")
        return Mode::Volterra;
    throw std::invalid_argument("unknown mode: " + s);
}

struct SessionConfig {
    DecorationSet omega;
    Mode mode = Mode::Free;
    KernelFamily kernels;                  // relative / volterra modes
    std::optional<std::set<std::string>> declared; // restrict idents when set
    std::uint64_t seed = 0;

    void check_ident(const std::string& name, int line, int col) const {
        if (declared && !declared->count(name))
            throw ParseError("unknown identifier '" + name + "'", line, col);
    }
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using EvalValue = std::variant<FreeElement, PolyFunction, RelativeElement<VolterraAlgebra>>;

namespace detail {

inline PolyFunction eval_volterra(const SessionConfig& cfg, const Expr& e) {
    auto rec = [&](const Expr& x) { return eval_volterra(cfg, x); };
    switch (e.kind) {
    case Expr::Kind::Number:
        return Polynomial::constant(e.number);
    case Expr::Kind::Ident:
        cfg.check_ident(e.name, e.line, e.col);
        if (e.name != "x")
            throw EvalError("volterra mode knows only the variable x, got '" + e.name + "'");
        return Polynomial::var("x");
    case Expr::Kind::Sum:
        return rec(*e.args[0]) + rec(*e.args[1]);
    case Expr::Kind::Diff:
        return rec(*e.args[0]) - rec(*e.args[1]);
    case Expr::Kind::Prod:
        return rec(*e.args[0]) * rec(*e.args[1]);
    case Expr::Kind::OpApply:
        cfg.omega.require(e.name);
        return integrate_op(e.name, rec(*e.args[0]), cfg.kernels);
    case Expr::Kind::DendLeft:
        cfg.omega.require(e.name);
        return volterra_zinbiel(e.name, rec(*e.args[0]), rec(*e.args[1]), cfg.kernels);
    case Expr::Kind::DendRight:
        cfg.omega.require(e.name);
        return volterra_zinbiel(e.name, rec(*e.args[1]), rec(*e.args[0]), cfg.kernels);
    case Expr::Kind::Call:
        if (e.name == "picard") {
            if (e.args.size() != 3)
                throw EvalError("picard(g, cap, iters) takes three arguments");
            auto cap = e.args[1];
            auto iters = e.args[2];
            if (cap->kind != Expr::Kind::Number || iters->kind != Expr::Kind::Number)
                throw EvalError("picard cap and iteration count must be integer literals");
            std::map<std::string, Rational> coeffs;
            for (auto& w : cfg.omega.names())
                coeffs[w] = 1;
            return picard_solve(rec(*e.args[0]), coeffs, cfg.kernels,
                                static_cast<int>(numerator(cap->number)),
                                static_cast<int>(numerator(iters->number)));
        }
        throw EvalError("'" + e.name + "' is not available in volterra mode");
    }
    throw EvalError("unreachable");
}

inline FreeElement eval_free(const SessionConfig& cfg, const Expr& e) {
    auto rec = [&](const Expr& x) { return eval_free(cfg, x); };
    switch (e.kind) {
    case Expr::Kind::Number:
        return embed_j(Polynomial::constant(e.number));
    case Expr::Kind::Ident:
        cfg.check_ident(e.name, e.line, e.col);
        return embed_j(Polynomial::var(e.name));
    case Expr::Kind::Sum:
        return rec(*e.args[0]) + rec(*e.args[1]);
    case Expr::Kind::Diff:
        return rec(*e.args[0]) - rec(*e.args[1]);
    case Expr::Kind::Prod:
        return diamond(rec(*e.args[0]), rec(*e.args[1]));
    case Expr::Kind::OpApply:
        return apply_P(cfg.omega, e.name, rec(*e.args[0]));
    default:
        throw EvalError("operation not available in free mode (use --mode zinbiel for "
                        "dendriform products)");
    }
}

/// Zinbiel-mode values: a scalar literal or a module element. Products of two
/// module elements are rejected, M carries the zero multiplication.
struct ZVal {
    std::optional<Rational> scalar;
    ZinbielElement elem;
};

inline ZVal eval_zinbiel(const SessionConfig& cfg, const Expr& e) {
    auto rec = [&](const Expr& x) { return eval_zinbiel(cfg, x); };
    auto want_elem = [](const ZVal& v) -> const ZinbielElement& {
        if (v.scalar)
            throw EvalError("expected a module element, got a scalar");
        return v.elem;
    };
    switch (e.kind) {
    case Expr::Kind::Number:
        return {e.number, {}};
    case Expr::Kind::Ident:
        cfg.check_ident(e.name, e.line, e.col);
        return {std::nullopt, generator(e.name)};
    case Expr::Kind::Sum: {
        auto a = rec(*e.args[0]), b = rec(*e.args[1]);
        if (a.scalar || b.scalar)
            throw EvalError("cannot add a scalar to a module element");
        return {std::nullopt, a.elem + b.elem};
    }
    case Expr::Kind::Diff: {
        auto a = rec(*e.args[0]), b = rec(*e.args[1]);
        if (a.scalar || b.scalar)
            throw EvalError("cannot subtract a scalar and a module element");
        return {std::nullopt, a.elem - b.elem};
    }
    case Expr::Kind::Prod: {
        auto a = rec(*e.args[0]), b = rec(*e.args[1]);
        if (a.scalar && b.scalar)
            return {*a.scalar * *b.scalar, {}};
        if (a.scalar)
            return {std::nullopt, b.elem.scaled(*a.scalar)};
        if (b.scalar)
            return {std::nullopt, a.elem.scaled(*b.scalar)};
        throw EvalError("products of generators are not allowed: the generating module "
                        "has zero multiplication");
    }
    case Expr::Kind::OpApply:
        return {std::nullopt, apply_P(cfg.omega, e.name, want_elem(rec(*e.args[0])))};
    case Expr::Kind::DendLeft:
        return {std::nullopt, prec(cfg.omega, e.name, want_elem(rec(*e.args[0])),
                                   want_elem(rec(*e.args[1])))};
    case Expr::Kind::DendRight:
        return {std::nullopt, succ(cfg.omega, e.name, want_elem(rec(*e.args[0])),
                                   want_elem(rec(*e.args[1])))};
    case Expr::Kind::Call:
        if (e.name == "star" || e.name == "shuffle") {
            if (e.args.size() != 2)
                throw EvalError(e.name + " takes two arguments");
            return {std::nullopt, star(cfg.omega, want_elem(rec(*e.args[0])),
                                       want_elem(rec(*e.args[1])))};
        }
        throw EvalError("'" + e.name + "' is not available in zinbiel mode");
    }
    throw EvalError("unreachable");
}

inline RelativeElement<VolterraAlgebra> eval_relative(const SessionConfig& cfg,
                                                      const RelativeAlgebra<VolterraAlgebra>& alg,
                                                      const Expr& e) {
    auto rec = [&](const Expr& x) { return eval_relative(cfg, alg, x); };
    switch (e.kind) {
    case Expr::Kind::Number:
        return alg.scale(e.number, alg.unit());
    case Expr::Kind::Ident:
        cfg.check_ident(e.name, e.line, e.col);
        return alg.embed_jA(Polynomial::var(e.name));
    case Expr::Kind::Sum:
        return rec(*e.args[0]) + rec(*e.args[1]);
    case Expr::Kind::Diff:
        return rec(*e.args[0]) - rec(*e.args[1]);
    case Expr::Kind::Prod:
        return alg.mul(rec(*e.args[0]), rec(*e.args[1]));
    case Expr::Kind::OpApply:
        return alg.applyP(e.name, rec(*e.args[0]));
    case Expr::Kind::Call:
        if (e.name == "base") {
            if (e.args.size() != 1)
                throw EvalError("base takes one argument");
            return alg.embed_i(eval_volterra(cfg, *e.args[0]));
        }
        throw EvalError("'" + e.name + "' is not available in relative mode");
    default:
        throw EvalError("operation not available in relative mode");
    }
}

} // namespace detail

/// Variables appearing in heads or tails of a free element.
inline std::set<std::string> free_variables(const FreeElement& a) {
    std::set<std::string> vs;
    auto collect = [&](const Monomial& m) {
        for (auto& [v, e] : m.exponents())
            vs.insert(v);
    };
    for (auto& [w, c] : a.terms()) {
        collect(w.head);
        for (auto& [d, m] : w.tail)
            collect(m);
    }
    return vs;
}

/// Evaluate a parsed expression under a session configuration. The `lift`
/// builtin is handled at the top level only, since its result lives in the
/// target algebra.
inline EvalValue evaluate(const SessionConfig& cfg, const Expr& e) {
    if (e.kind == Expr::Kind::Call && e.name == "lift") {
        if (e.args.size() != 2 || e.args[0]->kind != Expr::Kind::Ident)
            throw EvalError("lift(target, expr) takes a target name and an expression");
        const std::string& target = e.args[0]->name;
        if (cfg.mode == Mode::Free) {
            FreeElement a = detail::eval_free(cfg, *e.args[1]);
            if (target == "self") {
                FreeAlgebra R(cfg.omega);
                std::map<std::string, FreeElement> f;
                for (auto& v : free_variables(a))
                    f[v] = embed_j(Polynomial::var(v));
                return universal_lift(R, f, a);
            }
            if (target == "volterra") {
                VolterraAlgebra R(cfg.omega, cfg.kernels);
                std::map<std::string, PolyFunction> f;
                for (auto& v : free_variables(a))
                    f[v] = Polynomial::var("x");
                return universal_lift(R, f, a);
            }
            throw EvalError("unknown lift target: " + target);
        }
        throw EvalError("lift is only supported in free mode");
    }
    switch (cfg.mode) {
    case Mode::Free:
        return detail::eval_free(cfg, e);
    case Mode::Volterra:
        return detail::eval_volterra(cfg, e);
    case Mode::Zinbiel: {
        auto v = detail::eval_zinbiel(cfg, e);
        if (v.scalar)
            throw EvalError("result is a bare scalar; zinbiel elements live in the module");
        return v.elem;
    }
    case Mode::Relative: {
        RelativeAlgebra<VolterraAlgebra> alg(VolterraAlgebra(cfg.omega, cfg.kernels),
                                             cfg.omega);
        return detail::eval_relative(cfg, alg, e);
    }
    }
    throw EvalError("unreachable");
}

inline std::string render_value(const EvalValue& v) {
    if (auto* p = std::get_if<FreeElement>(&v))
        return to_string(*p);
    if (auto* p = std::get_if<PolyFunction>(&v))
        return p->str();
    return to_string(std::get<RelativeElement<VolterraAlgebra>>(v));
}

inline json value_to_json(const EvalValue& v) {
    if (auto* p = std::get_if<FreeElement>(&v))
        return free_to_json(*p);
    if (auto* p = std::get_if<PolyFunction>(&v))
        return poly_to_json(*p);
    return relative_to_json<VolterraAlgebra>(std::get<RelativeElement<VolterraAlgebra>>(v));
}

} // namespace mrb
