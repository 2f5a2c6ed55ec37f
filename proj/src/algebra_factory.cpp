#include "qgame/algebra_factory.hpp"

#include <cstdio>
#include <sstream>

#include "qgame/fock.hpp"

namespace qgame {

namespace {

std::string format_param(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

AlgebraBundle make_fock(const AlgebraSpec& spec) {
    const FockSpace space(spec.n_max);
    const PayoffUnits units(spec.kappa1, spec.kappa2);
    const LadderPair ladder = build_ladder(space);
    const OperatorMatrix number = build_number(space);
    const PayoffPair payoffs = build_payoffs(space, units);

    AlgebraBundle bundle;
    std::ostringstream os;
    os << "fock(n_max=" << spec.n_max << ", kappa1=" << format_param(units.kappa1)
       << ", kappa2=" << format_param(units.kappa2) << ")";
    bundle.description = os.str();
    bundle.space = space.game_space();
    bundle.measurable = {{"N", number}, {"pi1", payoffs.pi1}, {"pi2", payoffs.pi2}};
    bundle.relation_operators = bundle.measurable;
    bundle.relation_operators.push_back({"a+", ladder.raising});
    bundle.relation_operators.push_back({"a-", ladder.lowering});
    bundle.interior = space.interior_indices();

    const Complex i(0.0, 1.0);
    const double k1k2 = units.kappa1 * units.kappa2;
    bundle.canonical = {
        {"N", "a+", {{1.0, "a+"}}, "[N,a+] = a+"},
        {"a-", "a+", {{1.0, "I"}}, "[a-,a+] = I"},
        {"pi1", "pi2", {{i * k1k2, "I"}},
         "[pi1,pi2] = i*" + format_param(k1k2) + "*I"},
    };
    return bundle;
}

AlgebraBundle make_multimode(const AlgebraSpec& spec) {
    const MultiGameSpace space(spec.mode_n_max, spec.total_cutoff);
    const MultimodeOperators ops = build_multimode(space);
    const int k = space.modes();

    AlgebraBundle bundle;
    bundle.space = space.game_space();
    bundle.description = bundle.space->description();
    bundle.interior = space.interior_indices();

    for (int m = 0; m < k; ++m) {
        const std::string idx = std::to_string(m + 1);
        bundle.measurable.push_back({"N" + idx, ops.number[m]});
    }
    bundle.measurable.push_back({"N_total", total_number(ops)});
    if (spec.signs) {
        bundle.measurable.push_back(
            {"N_signed", signed_number(space, *spec.signs)});
    }
    for (const BilinearPayoff& payoff : spec.bilinears) {
        bundle.measurable.push_back(
            {payoff.name, realize_bilinear(ops, payoff)});
        bundle.normal_order_shifts.push_back(
            {payoff.name, payoff.coefficients.trace().real()});
    }

    bundle.relation_operators = bundle.measurable;
    for (int m = 0; m < k; ++m) {
        const std::string idx = std::to_string(m + 1);
        bundle.relation_operators.push_back({"a+" + idx, ops.raising[m]});
        bundle.relation_operators.push_back({"a-" + idx, ops.lowering[m]});
    }

    for (int m = 0; m < k; ++m) {
        const std::string idx = std::to_string(m + 1);
        bundle.canonical.push_back({"N" + idx, "a+" + idx, {{1.0, "a+" + idx}},
                                    "[N" + idx + ",a+" + idx + "] = a+" + idx});
        bundle.canonical.push_back({"a-" + idx, "a+" + idx, {{1.0, "I"}},
                                    "[a-" + idx + ",a+" + idx + "] = I"});
    }
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            const std::string ia = std::to_string(a + 1);
            const std::string ib = std::to_string(b + 1);
            bundle.canonical.push_back({"N" + ia, "N" + ib, {},
                                        "[N" + ia + ",N" + ib + "] = 0"});
            bundle.canonical.push_back({"a+" + ia, "a+" + ib, {},
                                        "[a+" + ia + ",a+" + ib + "] = 0"});
            bundle.canonical.push_back({"a+" + ia, "a-" + ib, {},
                                        "[a+" + ia + ",a-" + ib + "] = 0"});
        }
    }
    for (const BilinearPayoff& payoff : spec.bilinears) {
        bundle.canonical.push_back({payoff.name, "N_total", {},
                                    "[" + payoff.name + ",N_total] = 0"});
    }
    return bundle;
}

AlgebraBundle make_su2(const AlgebraSpec& spec) {
    const Su2Irrep rep = build_su2_irrep(spec.kappa);

    AlgebraBundle bundle;
    bundle.space = rep.game_space();
    bundle.description = bundle.space->description();
    bundle.measurable = {{"pi1", rep.pi1},
                         {"pi2", rep.pi2},
                         {"pi3", rep.pi3},
                         {"casimir", su2_casimir(rep)}};
    bundle.relation_operators = bundle.measurable;
    bundle.interior = bundle.space->interior_indices();

    const Complex i(0.0, 1.0);
    bundle.canonical = {
        {"pi1", "pi2", {{i, "pi3"}}, "[pi1,pi2] = i*pi3"},
        {"pi2", "pi3", {{i, "pi1"}}, "[pi2,pi3] = i*pi1"},
        {"pi3", "pi1", {{i, "pi2"}}, "[pi3,pi1] = i*pi2"},
    };
    return bundle;
}

AlgebraBundle make_su11(const AlgebraSpec& spec) {
    const Su11Irrep rep =
        build_su11_irrep(spec.kappa_real, spec.bound, spec.truncation);

    AlgebraBundle bundle;
    bundle.space = rep.game_space();
    bundle.description = bundle.space->description();
    bundle.measurable = {{"pi1", rep.pi1},
                         {"pi2", rep.pi2},
                         {"pi3", rep.pi3},
                         {"casimir", su11_casimir(rep)}};
    bundle.relation_operators = bundle.measurable;
    bundle.interior = rep.interior_indices();

    const Complex i(0.0, 1.0);
    bundle.canonical = {
        {"pi1", "pi2", {{-i, "pi3"}}, "[pi1,pi2] = -i*pi3"},
        {"pi2", "pi3", {{i, "pi1"}}, "[pi2,pi3] = i*pi1"},
        {"pi3", "pi1", {{i, "pi2"}}, "[pi3,pi1] = i*pi2"},
    };
    return bundle;
}

AlgebraBundle make_single_mode_su11(const AlgebraSpec& spec) {
    const FockSpace fock(spec.n_max);
    const SingleModeSu11 rep = single_mode_su11(fock);

    AlgebraBundle bundle;
    bundle.space = rep.space;
    bundle.description = bundle.space->description();
    bundle.measurable = {{"k1", rep.k1},
                         {"k2", rep.k2},
                         {"k3", rep.k3},
                         {"N", build_number(fock)}};
    bundle.relation_operators = bundle.measurable;
    bundle.interior = bundle.space->interior_indices();

    const Complex i(0.0, 1.0);
    bundle.canonical = {
        {"k1", "k2", {{-i, "k3"}}, "[k1,k2] = -i*k3"},
        {"k2", "k3", {{i, "k1"}}, "[k2,k3] = i*k1"},
        {"k3", "k1", {{i, "k2"}}, "[k3,k1] = i*k2"},
    };
    return bundle;
}

} // namespace

AlgebraKind algebra_kind_from_string(const std::string& name) {
    if (name == "fock") return AlgebraKind::fock;
    if (name == "multimode") return AlgebraKind::multimode;
    if (name == "su2") return AlgebraKind::su2;
    if (name == "su11") return AlgebraKind::su11;
    if (name == "single_mode_su11" || name == "single-mode-su11") {
        return AlgebraKind::single_mode_su11;
    }
    throw ParseError("unknown algebra \"" + name +
                     "\" (expected fock, multimode, su2, su11, "
                     "single_mode_su11)");
}

std::string algebra_kind_to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::fock: return "fock";
        case AlgebraKind::multimode: return "multimode";
        case AlgebraKind::su2: return "su2";
        case AlgebraKind::su11: return "su11";
        case AlgebraKind::single_mode_su11: return "single_mode_su11";
    }
    return "?";
}

AlgebraBundle make_algebra(const AlgebraSpec& spec) {
    switch (spec.kind) {
        case AlgebraKind::fock: return make_fock(spec);
        case AlgebraKind::multimode: return make_multimode(spec);
        case AlgebraKind::su2: return make_su2(spec);
        case AlgebraKind::su11: return make_su11(spec);
        case AlgebraKind::single_mode_su11: return make_single_mode_su11(spec);
    }
    throw Error("make_algebra: unreachable");
}

const OperatorMatrix& find_measurable(const AlgebraBundle& bundle,
                                      const std::string& name) {
    for (const auto& [n, op] : bundle.measurable) {
        if (n == name) return op;
    }
    std::string known;
    for (const auto& [n, op] : bundle.measurable) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw LabelError("unknown operator \"" + name + "\" (available: " + known +
                     ")");
}

} // namespace qgame
