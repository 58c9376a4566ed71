#include <charconv>
#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "jungck/contraction.hpp"
#include "jungck/error.hpp"

namespace jungck {

namespace {

using C = ConditionId;

std::string lit(double x) {
    char buf[40];
    *std::to_chars(buf, buf + sizeof buf - 1, x).ptr = '\0';
    return buf;
}

double checked_div(double a, double b, const Tuple6& t) {
    if (b == 0) throw DomainError("division by zero", std::vector<double>(t.begin(), t.end()));
    return a / b;
}

double max_of(std::initializer_list<double> xs) { return std::max(xs); }
double min_of(std::initializer_list<double> xs) { return std::min(xs); }

struct EntrySpec {
    const char* id;
    std::set<C> claims;
    std::set<C> denies;
    // Inner function: 'p' for psi (comparison), 'r' for rho (half-comparison).
    char inner;
    double default_k;
    bool uses_L;
};

const std::vector<EntrySpec>& specs() {
    static const std::vector<EntrySpec> table = {
        {"linear-quasi", {C::F1a, C::F1b, C::F1c, C::F2}, {}, 'k', 0.3, false},
        {"nonlinear-quasi", {C::F1a, C::F1b, C::F1c, C::F2}, {}, 'r', 0.4, false},
        {"vv-ratio", {C::F1a, C::F2}, {C::F1b, C::F1c}, 'p', 0.5, false},
        {"ratio-not-f2", {C::F1a, C::F1c}, {C::F2}, 'p', 0.5, false},
        {"banach", {C::F1a, C::F1b, C::F1c, C::F2}, {}, 'p', 0.5, false},
        {"rho-sum34", {C::F1a, C::F1b, C::F1c, C::F2}, {}, 'r', 0.4, false},
        {"psi-sum34", {C::F2}, {C::F1a, C::F1b, C::F1c}, 'p', 0.6, false},
        {"rho-sum23", {C::F1a, C::F1b, C::F2}, {}, 'r', 0.4, false},
        {"psi-sum23", {C::F1b, C::F2}, {}, 'p', 0.6, false},
        {"psi-max-avg34", {C::F1b, C::F1c, C::F2}, {}, 'p', 0.5, false},
        {"psi-max-avg56", {C::F1a, C::F2}, {}, 'p', 0.5, false},
        {"psi-max-avg56-L", {C::F1a, C::F2}, {}, 'p', 0.5, true},
        {"psi-max-halves", {C::F1a, C::F1b, C::F1c, C::F2}, {}, 'p', 0.5, false},
        {"psi-max-t4half", {C::F1a, C::F1b, C::F2}, {}, 'p', 0.5, false},
    };
    return table;
}

// Text form of g(arg) for g(t) = k t / (1 + s t), in the expression grammar.
std::string apply_text(double k, double s, const std::string& arg) {
    if (s == 0) return lit(k) + "*(" + arg + ")";
    return lit(k) + "*(" + arg + ")/(1 + " + lit(s) + "*(" + arg + "))";
}

}  // namespace

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const auto& s : specs()) ids.emplace_back(s.id);
    return ids;
}

ImplicitContraction make_catalog_entry(std::string_view id, const std::map<std::string, double>& params) {
    const auto& table = specs();
    const auto it = std::find_if(table.begin(), table.end(), [&](const EntrySpec& s) { return s.id == id; });
    if (it == table.end()) throw Error("unknown catalog entry '" + std::string(id) + "'");
    const EntrySpec& spec = *it;

    for (const auto& [name, value] : params) {
        const bool known = name == "k" || name == "s" || (name == "L" && spec.uses_L);
        if (!known) throw Error("catalog entry '" + std::string(id) + "' has no parameter '" + name + "'");
        if (!std::isfinite(value)) throw Error("parameter " + name + " must be finite");
    }
    auto get = [&](const char* name, double dflt) {
        const auto p = params.find(name);
        return p == params.end() ? dflt : p->second;
    };
    const double k = get("k", spec.default_k);
    const double s = get("s", 0.0);
    const double L = get("L", 1.0);
    if (k < 0 || k >= 1) throw Error("parameter k must lie in [0, 1)");
    if (s < 0) throw Error("parameter s must be nonnegative");
    if (L < 0) throw Error("parameter L must be nonnegative");

    ImplicitContraction ic;
    ic.id = spec.id;
    ic.claims = spec.claims;
    ic.denies = spec.denies;
    ic.params = {{"k", k}, {"s", s}};
    if (spec.uses_L) ic.params["L"] = L;

    const ComparisonFn g = ComparisonFn::rational(k, s);
    auto g_of = [k, s](double t) { return k * t / (1 + s * t); };
    const std::string sid(spec.id);

    if (spec.inner == 'k') {
        ic.inner = ComparisonFn::linear(k);
        ic.companion = ComparisonFn([k](double t) { return k * t / (1 - k); }, lit(k) + "*t/(1 - " + lit(k) + ")");
    } else if (spec.inner == 'r') {
        ic.inner = g;
        ic.inner_is_half = true;
        ic.companion = HalfComparisonFn(g).doubled();
    } else {
        ic.inner = g;
        ic.companion = g;
    }

    if (sid == "linear-quasi") {
        ic.formula = "t1 - " + lit(k) + "*max(t2, t3, t4, t5, t6)";
        ic.F = [k](const Tuple6& t) { return t[0] - k * max_of({t[1], t[2], t[3], t[4], t[5]}); };
    } else if (sid == "nonlinear-quasi") {
        ic.formula = "t1 - " + apply_text(k, s, "max(t2, t3, t4, t5, t6)");
        ic.F = [g_of](const Tuple6& t) { return t[0] - g_of(max_of({t[1], t[2], t[3], t[4], t[5]})); };
    } else if (sid == "vv-ratio") {
        ic.formula = "t1 - " + apply_text(k, s, "t3*(t5 + t6)/(t2 + t4)");
        ic.F = [g_of](const Tuple6& t) { return t[0] - g_of(checked_div(t[2] * (t[4] + t[5]), t[1] + t[3], t)); };
    } else if (sid == "ratio-not-f2") {
        ic.formula = "t1 - " + apply_text(k, s, "t2*(t5 + t6)/(t3 + t4)");
        ic.F = [g_of](const Tuple6& t) { return t[0] - g_of(checked_div(t[1] * (t[4] + t[5]), t[2] + t[3], t)); };
    } else if (sid == "banach") {
        ic.formula = "t1 - " + apply_text(k, s, "t2");
        ic.F = [g_of](const Tuple6& t) { return t[0] - g_of(t[1]); };
    } else if (sid == "rho-sum34" || sid == "psi-sum34") {
        ic.formula = "t1 - " + apply_text(k, s, "t3 + t4");
        ic.F = [g_of](const Tuple6& t) { return t[0] - g_of(t[2] + t[3]); };
    } else if (sid == "rho-sum23" || sid == "psi-sum23") {
        ic.formula = "t1 - " + apply_text(k, s, "t2 + t3");
        ic.F = [g_of](const Tuple6& t) { return t[0] - g_of(t[1] + t[2]); };
    } else if (sid == "psi-max-avg34") {
        ic.formula = "t1 - " + apply_text(k, s, "max(t2, (t3 + t4)/2, t5, t6)");
        ic.F = [g_of](const Tuple6& t) { return t[0] - g_of(max_of({t[1], (t[2] + t[3]) / 2, t[4], t[5]})); };
    } else if (sid == "psi-max-avg56") {
        ic.formula = "t1 - " + apply_text(k, s, "max(t2, t3, t4, (t5 + t6)/2)");
        ic.F = [g_of](const Tuple6& t) { return t[0] - g_of(max_of({t[1], t[2], t[3], (t[4] + t[5]) / 2})); };
    } else if (sid == "psi-max-avg56-L") {
        ic.formula = "t1 - " + apply_text(k, s, "max(t2, t3, t4, (t5 + t6)/2)") + " - " + lit(L) +
                     "*min(t3, t4, t5, t6)";
        ic.F = [g_of, L](const Tuple6& t) {
            return t[0] - g_of(max_of({t[1], t[2], t[3], (t[4] + t[5]) / 2})) - L * min_of({t[2], t[3], t[4], t[5]});
        };
    } else if (sid == "psi-max-halves") {
        ic.formula = "t1 - " + apply_text(k, s, "max(t2, (t3 + t4)/2, (t5 + t6)/2)");
        ic.F = [g_of](const Tuple6& t) { return t[0] - g_of(max_of({t[1], (t[2] + t[3]) / 2, (t[4] + t[5]) / 2})); };
    } else {
        ic.formula = "t1 - " + apply_text(k, s, "max(t2, t3, t4/2, (t5 + t6)/2, t6)");
        ic.F = [g_of](const Tuple6& t) {
            return t[0] - g_of(max_of({t[1], t[2], t[3] / 2, (t[4] + t[5]) / 2, t[5]}));
        };
    }
    return ic;
}

ImplicitContraction make_catalog_entry(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view id = spec.substr(0, colon);
    std::map<std::string, double> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = spec.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view item = rest.substr(0, comma);
            const auto eq = item.find('=');
            if (eq == std::string_view::npos || eq == 0)
                throw Error("malformed catalog parameter '" + std::string(item) + "', expected name=value");
            const std::string name(item.substr(0, eq));
            const std::string value(item.substr(eq + 1));
            char* end = nullptr;
            const double v = std::strtod(value.c_str(), &end);
            if (value.empty() || end != value.c_str() + value.size())
                throw Error("parameter " + name + " has non-numeric value '" + value + "'");
            params[name] = v;
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    return make_catalog_entry(id, params);
}

std::vector<ImplicitContraction> catalog() {
    std::vector<ImplicitContraction> out;
    for (const auto& s : specs()) out.push_back(make_catalog_entry(s.id, {}));
    return out;
}

}  // namespace jungck
