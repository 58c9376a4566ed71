#include "jungck/config.hpp"

#include <charconv>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

#include "jungck/error.hpp"

namespace jungck {

namespace {

struct Value {
    std::string text;
    std::size_t line;
    std::size_t column;
};

using Block = std::map<std::string, Value>;

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"space",
         {"flavor", "points", "values", "distances", "order", "order_label", "value", "budget", "lower", "upper",
          "include_lower", "include_upper"}},
        {"mappings", {"T", "S", "S_inverse", "S_monotone"}},
        {"contraction", {"catalog", "F", "phi", "inner", "inner_is_half", "claims", "denies"}},
        {"run", {"variant", "direction", "x0", "budget", "tol", "eps", "E", "assert"}},
    };
    return keys;
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

// Items of a comma-separated list with their columns.
std::vector<Value> split(const Value& v, char sep = ',') {
    std::vector<Value> out;
    std::size_t start = 0;
    const std::string& s = v.text;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            std::size_t a = start;
            while (a < i && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
            std::string item = trim(std::string_view(s).substr(start, i - start));
            if (!item.empty()) out.push_back({item, v.line, v.column + a});
            start = i + 1;
        }
    }
    return out;
}

double number(const Value& v) {
    const char* begin = v.text.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (v.text.empty() || end != begin + v.text.size())
        throw SyntaxError("expected a number, got '" + v.text + "'", v.line, v.column);
    return x;
}

std::size_t count(const Value& v) {
    const double x = number(v);
    if (x < 0 || x != std::floor(x) || x > 1e15)
        throw SyntaxError("expected a nonnegative integer, got '" + v.text + "'", v.line, v.column);
    return static_cast<std::size_t>(x);
}

bool boolean(const Value& v) {
    if (v.text == "true" || v.text == "yes" || v.text == "1") return true;
    if (v.text == "false" || v.text == "no" || v.text == "0") return false;
    throw SyntaxError("expected true or false, got '" + v.text + "'", v.line, v.column);
}

std::string lit(double x) {
    char buf[40];
    *std::to_chars(buf, buf + sizeof buf - 1, x).ptr = '\0';
    return buf;
}

Expr expr(const Value& v, std::vector<std::string> vars) { return Expr::parse(v.text, std::move(vars), v.line, v.column); }

std::vector<std::string> six_vars() { return {"t1", "t2", "t3", "t4", "t5", "t6"}; }

std::set<ConditionId> conditions(const Value& v) {
    std::set<ConditionId> out;
    for (const auto& item : split(v)) {
        const auto id = condition_from_string(item.text);
        if (!id) throw SyntaxError("unknown condition '" + item.text + "'", item.line, item.column);
        out.insert(*id);
    }
    return out;
}

const Value* get(const Block& b, const char* key) {
    const auto it = b.find(key);
    return it == b.end() ? nullptr : &it->second;
}

}  // namespace

ProblemConfig parse_config(std::string_view text) {
    std::map<std::string, Block> blocks;
    std::string current;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::size_t lead = 0;
        while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw SyntaxError("unterminated block header", line_no, lead + 1);
            const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
            if (!known_keys().count(name)) throw UnknownKey("unknown block [" + name + "]", line_no, lead + 2);
            if (blocks.count(name)) throw SyntaxError("block [" + name + "] appears twice", line_no, lead + 1);
            blocks[name];
            current = name;
            continue;
        }
        const auto eq = raw.find('=');
        if (eq == std::string_view::npos) throw SyntaxError("expected 'key = value'", line_no, lead + 1);
        const std::string key = trim(raw.substr(0, eq));
        if (key.empty()) throw SyntaxError("missing key before '='", line_no, lead + 1);
        if (current.empty()) throw SyntaxError("key '" + key + "' outside of a block", line_no, lead + 1);
        if (!known_keys().at(current).count(key))
            throw UnknownKey("unknown key '" + key + "' in [" + current + "]", line_no, lead + 1);
        std::size_t vstart = eq + 1;
        while (vstart < raw.size() && std::isspace(static_cast<unsigned char>(raw[vstart]))) ++vstart;
        const std::string value = trim(raw.substr(eq + 1));
        Block& block = blocks[current];
        if (block.count(key)) throw SyntaxError("duplicate key '" + key + "'", line_no, lead + 1);
        block[key] = Value{value, line_no, vstart + 1};
    }

    ProblemConfig cfg;
    const Block empty;
    const Block& sp = blocks.count("space") ? blocks["space"] : empty;
    const Block& mp = blocks.count("mappings") ? blocks["mappings"] : empty;
    const Block& ct = blocks.count("contraction") ? blocks["contraction"] : empty;
    const Block& rn = blocks.count("run") ? blocks["run"] : empty;

    SpaceBlock& s = cfg.space;
    if (const Value* v = get(sp, "flavor")) {
        if (v->text == "finite") s.flavor = Flavor::Finite;
        else if (v->text == "indexed") s.flavor = Flavor::Indexed;
        else if (v->text == "interval") s.flavor = Flavor::Interval;
        else throw SyntaxError("flavor must be finite, indexed or interval", v->line, v->column);
    } else if (!sp.empty() || blocks.count("space")) {
        throw SyntaxError("[space] needs a flavor", 1, 1);
    }
    auto only_for = [&](const char* key, Flavor f) {
        if (const Value* v = get(sp, key); v && s.flavor != f)
            throw UnknownKey("key '" + std::string(key) + "' does not apply to this flavor", v->line, v->column);
    };
    only_for("points", Flavor::Finite);
    only_for("values", Flavor::Finite);
    only_for("distances", Flavor::Finite);
    only_for("value", Flavor::Indexed);
    only_for("budget", Flavor::Indexed);
    for (const char* k : {"lower", "upper", "include_lower", "include_upper", "order_label"}) only_for(k, Flavor::Interval);

    if (const Value* v = get(sp, "points"))
        for (const auto& item : split(*v)) s.points.push_back(item.text);
    if (const Value* v = get(sp, "values"))
        for (const auto& item : split(*v)) s.values.push_back(number(item));
    if (const Value* v = get(sp, "distances")) {
        for (const auto& row : split(*v, ';')) {
            for (const auto& item : split(Value{[&] {
                                                    std::string t = row.text;
                                                    std::replace(t.begin(), t.end(), ',', ' ');
                                                    return t;
                                                }(),
                                                row.line, row.column},
                                          ' '))
                s.distances.push_back(number(item));
        }
    }
    if (const Value* v = get(sp, "order")) {
        if (s.flavor == Flavor::Finite) {
            for (const auto& item : split(*v)) {
                const auto le = item.text.find("<=");
                if (le == std::string::npos) throw SyntaxError("expected 'a <= b'", item.line, item.column);
                s.order_pairs.emplace_back(trim(item.text.substr(0, le)), trim(item.text.substr(le + 2)));
            }
        } else if (s.flavor == Flavor::Interval) {
            s.order = expr(*v, {"a", "b"});
        } else {
            throw UnknownKey("indexed spaces use the value order", v->line, v->column);
        }
    }
    if (const Value* v = get(sp, "order_label")) s.order_label = v->text;
    if (const Value* v = get(sp, "value")) s.value = expr(*v, {"i"});
    if (const Value* v = get(sp, "budget")) s.budget = count(*v);
    if (const Value* v = get(sp, "lower")) s.bounds.lower = number(*v);
    if (const Value* v = get(sp, "upper")) s.bounds.upper = number(*v);
    if (const Value* v = get(sp, "include_lower")) s.bounds.include_lower = boolean(*v);
    if (const Value* v = get(sp, "include_upper")) s.bounds.include_upper = boolean(*v);

    MappingsBlock& m = cfg.mappings;
    auto map_spec = [&](const Value& v) -> MapSpec {
        if (s.flavor == Flavor::Finite) {
            std::vector<std::string> labels;
            for (const auto& item : split(v)) labels.push_back(item.text);
            return labels;
        }
        return expr(v, {s.flavor == Flavor::Indexed ? "i" : "x"});
    };
    if (const Value* v = get(mp, "T")) m.T = map_spec(*v);
    if (const Value* v = get(mp, "S")) m.S = map_spec(*v);
    if (const Value* v = get(mp, "S_inverse")) {
        if (s.flavor != Flavor::Interval) throw UnknownKey("S_inverse applies to interval spaces only", v->line, v->column);
        m.s_inverse = expr(*v, {"x"});
    }
    if (const Value* v = get(mp, "S_monotone")) m.s_monotone = boolean(*v);

    ContractionBlock& c = cfg.contraction;
    if (const Value* v = get(ct, "catalog")) {
        const auto colon = v->text.find(':');
        const std::string id = trim(v->text.substr(0, colon));
        const auto ids = catalog_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end())
            throw SyntaxError("unknown catalog entry '" + id + "'", v->line, v->column);
        c.catalog = id;
        if (colon != std::string::npos) {
            Value rest{v->text.substr(colon + 1), v->line, v->column + colon + 1};
            for (const auto& item : split(rest)) {
                const auto e = item.text.find('=');
                if (e == std::string::npos || e == 0)
                    throw SyntaxError("expected name=value", item.line, item.column);
                c.params[trim(item.text.substr(0, e))] =
                    number(Value{trim(item.text.substr(e + 1)), item.line, item.column + e + 1});
            }
        }
    }
    if (const Value* v = get(ct, "F")) {
        if (c.catalog) throw SyntaxError("give either catalog or F, not both", v->line, v->column);
        c.F = expr(*v, six_vars());
    }
    if (const Value* v = get(ct, "phi")) c.phi = expr(*v, {"t"});
    if (const Value* v = get(ct, "inner")) c.inner = expr(*v, {"t"});
    if (const Value* v = get(ct, "inner_is_half")) c.inner_is_half = boolean(*v);
    if (const Value* v = get(ct, "claims")) c.claims = conditions(*v);
    if (const Value* v = get(ct, "denies")) c.denies = conditions(*v);

    RunBlock& r = cfg.run;
    if (const Value* v = get(rn, "variant")) {
        if (!variant_from_string(v->text)) throw SyntaxError("unknown variant '" + v->text + "'", v->line, v->column);
        r.variant = v->text;
    }
    if (const Value* v = get(rn, "direction")) {
        r.direction = direction_from_string(v->text);
        if (!r.direction) throw SyntaxError("direction must be inc, dec or either", v->line, v->column);
    }
    if (const Value* v = get(rn, "x0")) r.x0 = v->text;
    if (const Value* v = get(rn, "budget")) r.budget = count(*v);
    if (const Value* v = get(rn, "tol")) r.tol = number(*v);
    if (const Value* v = get(rn, "eps")) r.eps = number(*v);
    if (const Value* v = get(rn, "E")) r.E = v->text;
    if (const Value* v = get(rn, "assert")) {
        for (const auto& item : split(*v)) {
            const auto p = property_from_string(item.text);
            if (!p) throw SyntaxError("unknown property '" + item.text + "'", item.line, item.column);
            r.asserted.insert(*p);
        }
    }
    return cfg;
}

namespace {

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

std::string map_text(const MapSpec& m) {
    if (const auto* labels = std::get_if<std::vector<std::string>>(&m)) return join(*labels);
    return std::get<Expr>(m).to_string();
}

std::string conditions_text(const std::set<ConditionId>& ids) {
    std::vector<std::string> out;
    for (auto id : ids) out.emplace_back(to_string(id));
    return join(out);
}

}  // namespace

std::string to_text(const ProblemConfig& cfg) {
    std::string out;
    auto kv = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
    const SpaceBlock& s = cfg.space;
    out += "[space]\n";
    kv("flavor", std::string(to_string(s.flavor)));
    switch (s.flavor) {
        case Flavor::Finite: {
            if (!s.points.empty()) kv("points", join(s.points));
            if (!s.values.empty()) {
                std::vector<std::string> v;
                for (double x : s.values) v.push_back(lit(x));
                kv("values", join(v));
            }
            if (!s.distances.empty()) {
                const std::size_t n = s.points.empty() ? 1 : s.points.size();
                std::string rows;
                for (std::size_t i = 0; i < s.distances.size(); ++i) {
                    if (i && i % n == 0) rows += "; ";
                    else if (i) rows += " ";
                    rows += lit(s.distances[i]);
                }
                kv("distances", rows);
            }
            if (!s.order_pairs.empty()) {
                std::vector<std::string> v;
                for (const auto& [a, b] : s.order_pairs) v.push_back(a + " <= " + b);
                kv("order", join(v));
            }
            break;
        }
        case Flavor::Indexed:
            if (s.value) kv("value", s.value->to_string());
            kv("budget", std::to_string(s.budget));
            break;
        case Flavor::Interval:
            kv("lower", lit(s.bounds.lower));
            kv("upper", lit(s.bounds.upper));
            kv("include_lower", s.bounds.include_lower ? "true" : "false");
            kv("include_upper", s.bounds.include_upper ? "true" : "false");
            if (s.order) kv("order", s.order->to_string());
            if (!s.order_label.empty()) kv("order_label", s.order_label);
            break;
    }
    const MappingsBlock& m = cfg.mappings;
    out += "\n[mappings]\n";
    if (m.T) kv("T", map_text(*m.T));
    if (m.S) kv("S", map_text(*m.S));
    if (m.s_inverse) kv("S_inverse", m.s_inverse->to_string());
    kv("S_monotone", m.s_monotone ? "true" : "false");

    const ContractionBlock& c = cfg.contraction;
    out += "\n[contraction]\n";
    if (c.catalog) {
        std::string spec = *c.catalog;
        std::vector<std::string> ps;
        for (const auto& [k, v] : c.params) ps.push_back(k + "=" + lit(v));
        if (!ps.empty()) spec += ":" + join(ps, ",");
        kv("catalog", spec);
    }
    if (c.F) kv("F", c.F->to_string());
    if (c.phi) kv("phi", c.phi->to_string());
    if (c.inner) kv("inner", c.inner->to_string());
    kv("inner_is_half", c.inner_is_half ? "true" : "false");
    if (!c.claims.empty()) kv("claims", conditions_text(c.claims));
    if (!c.denies.empty()) kv("denies", conditions_text(c.denies));

    const RunBlock& r = cfg.run;
    out += "\n[run]\n";
    if (r.variant) kv("variant", *r.variant);
    if (r.direction) kv("direction", std::string(to_string(*r.direction)));
    if (r.x0) kv("x0", *r.x0);
    if (r.budget) kv("budget", std::to_string(*r.budget));
    if (r.tol) kv("tol", lit(*r.tol));
    if (r.eps) kv("eps", lit(*r.eps));
    if (r.E) kv("E", *r.E);
    if (!r.asserted.empty()) {
        std::vector<std::string> v;
        for (auto p : r.asserted) v.emplace_back(to_string(p));
        kv("assert", join(v));
    }
    return out;
}

Point parse_point(const OrderedMetricSpace& space, std::string_view text) {
    const std::string t = trim(text);
    if (const auto* f = space.finite()) {
        if (const auto i = f->find(t)) return Point::at_index(*i);
        throw InvalidPoint("no point labelled '" + t + "'");
    }
    if (space.indexed()) {
        std::string digits = (!t.empty() && t.front() == 'x') ? t.substr(1) : t;
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw InvalidPoint("expected an index such as x3, got '" + t + "'");
        const Point p = Point::at_index(std::stoull(digits));
        space.require(p);
        return p;
    }
    char* end = nullptr;
    const double x = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size()) throw InvalidPoint("expected a real number, got '" + t + "'");
    const Point p = Point::at_value(x);
    space.require(p);
    return p;
}

ImplicitContraction build_contraction(const ContractionBlock& block) {
    if (block.catalog) {
        ImplicitContraction ic = make_catalog_entry(*block.catalog, block.params);
        if (block.phi) {
            const Expr phi = *block.phi;
            ic.companion = ComparisonFn([phi](double t) { return phi({t}); }, phi.to_string());
        }
        return ic;
    }
    if (!block.F) throw Error("the contraction block needs a catalog id or an F expression");
    ImplicitContraction ic;
    ic.id = "custom";
    const Expr F = *block.F;
    ic.formula = F.to_string();
    ic.F = [F](const Tuple6& t) { return F(std::span<const double>(t.data(), t.size())); };
    if (block.phi) {
        const Expr phi = *block.phi;
        ic.companion = ComparisonFn([phi](double t) { return phi({t}); }, phi.to_string());
    }
    if (block.inner) {
        const Expr inner = *block.inner;
        ic.inner = ComparisonFn([inner](double t) { return inner({t}); }, inner.to_string());
        ic.inner_is_half = block.inner_is_half;
        if (!ic.companion && ic.inner_is_half) ic.companion = HalfComparisonFn(*ic.inner).doubled();
        if (!ic.companion && !ic.inner_is_half) ic.companion = ic.inner;
    }
    ic.claims = block.claims;
    ic.denies = block.denies;
    return ic;
}

namespace {

SelfMap build_map(const MapSpec& spec, const SpaceBlock& s, const char* name) {
    if (const auto* labels = std::get_if<std::vector<std::string>>(&spec)) {
        if (labels->size() != s.points.size())
            throw InvalidSpace(std::string(name) + " lists " + std::to_string(labels->size()) + " images for " +
                               std::to_string(s.points.size()) + " points");
        SelfMap::Table t;
        for (const auto& l : *labels) {
            const auto it = std::find(s.points.begin(), s.points.end(), l);
            if (it == s.points.end()) throw InvalidPoint(std::string(name) + " maps to unknown point '" + l + "'");
            t.push_back(static_cast<std::size_t>(it - s.points.begin()));
        }
        return SelfMap::table(std::move(t), name);
    }
    const Expr& e = std::get<Expr>(spec);
    if (e.is_variable(0)) return SelfMap::identity();
    if (s.flavor == Flavor::Indexed) {
        return SelfMap::index_fn(
            [e](std::size_t i) {
                const double v = e({static_cast<double>(i)});
                const double r = std::round(v);
                if (!(r >= 0) || std::abs(v - r) > 1e-9)
                    throw DomainError("index map must yield a nonnegative integer", {static_cast<double>(i), v});
                return static_cast<std::size_t>(r);
            },
            e.to_string());
    }
    return SelfMap::real_fn([e](double x) { return e({x}); }, e.to_string());
}

Subspace parse_subspace(const OrderedMetricSpace& space, const std::string& text) {
    const std::string t = trim(text);
    if (t == "X") return Subspace::whole();
    if (t == "T(X)") return Subspace::image_T();
    if (t == "S(X)") return Subspace::image_S();
    if (t.size() >= 2 && t.front() == '{' && t.back() == '}') {
        std::vector<Point> pts;
        for (const auto& item : split(Value{t.substr(1, t.size() - 2), 0, 0})) pts.push_back(parse_point(space, item.text));
        return Subspace::explicit_points(std::move(pts));
    }
    throw Error("E must be X, T(X), S(X) or {p, q, ...}, got '" + t + "'");
}

OrderedMetricSpace build_space(const SpaceBlock& s) {
    switch (s.flavor) {
        case Flavor::Finite: {
            if (s.points.empty()) throw InvalidSpace("finite space lists no points");
            std::vector<FiniteSpace::OrderPair> order;
            for (const auto& [a, b] : s.order_pairs) {
                const auto ia = std::find(s.points.begin(), s.points.end(), a);
                const auto ib = std::find(s.points.begin(), s.points.end(), b);
                if (ia == s.points.end() || ib == s.points.end())
                    throw InvalidPoint("order mentions unknown point in '" + a + " <= " + b + "'");
                order.emplace_back(ia - s.points.begin(), ib - s.points.begin());
            }
            if (!s.distances.empty()) return FiniteSpace(s.points, s.distances, order);
            if (s.values.empty()) throw InvalidSpace("finite space needs values or distances");
            if (s.order_pairs.empty()) return FiniteSpace::on_line(s.points, s.values);
            return FiniteSpace::on_line(s.points, s.values, order);
        }
        case Flavor::Indexed: {
            if (!s.value) throw InvalidSpace("indexed space needs a value expression in i");
            if (s.budget == 0) throw InvalidSpace("indexed space needs a positive budget");
            const Expr e = *s.value;
            return IndexedSequenceSpace([e](std::size_t i) { return e({static_cast<double>(i)}); }, s.budget,
                                        "x_i = " + e.to_string());
        }
        case Flavor::Interval: {
            if (!s.order) return NumericIntervalSpace(s.bounds);
            const Expr e = *s.order;
            return NumericIntervalSpace(
                s.bounds, [e](double a, double b) { return e({a, b}) != 0; },
                s.order_label.empty() ? "custom" : s.order_label);
        }
    }
    throw InvalidSpace("unknown flavor");
}

}  // namespace

Problem build_problem(const ProblemConfig& cfg) {
    const OrderedMetricSpace base = build_space(cfg.space);
    Problem p{base.with_assertions(cfg.run.asserted), {}, {}};
    const MappingsBlock& m = cfg.mappings;
    if (m.T) p.pair.T = build_map(*m.T, cfg.space, "T");
    if (m.S) p.pair.S = build_map(*m.S, cfg.space, "S");
    if (m.s_inverse) {
        const Expr inv = *m.s_inverse;
        p.pair.s_inverse = [inv](double x) { return inv({x}); };
    }
    p.pair.s_monotone = m.s_monotone;
    if (!cfg.contraction.empty()) p.contraction = build_contraction(cfg.contraction);
    const RunBlock& r = cfg.run;
    if (r.variant) p.variant = *variant_from_string(*r.variant, &p.continuity);
    if (r.direction) p.direction = *r.direction;
    if (r.E) p.E = parse_subspace(p.space, *r.E);
    if (r.x0) p.x0 = parse_point(p.space, *r.x0);
    if (r.budget) p.budget = *r.budget;
    if (r.tol) p.tol = *r.tol;
    p.eps = r.eps;
    return p;
}

}  // namespace jungck
