#include "jungck/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "jungck/error.hpp"

namespace jungck {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

HypothesisEntry entry(std::string label, std::string description) {
    HypothesisEntry e;
    e.label = std::move(label);
    e.description = std::move(description);
    return e;
}

HypothesisEntry& verified(HypothesisEntry& e, std::string detail = {}) {
    e.verdict = Verdict::Verified;
    e.witness = std::move(detail);
    return e;
}

HypothesisEntry& refuted(HypothesisEntry& e, std::string witness, std::vector<Point> pts = {}) {
    e.verdict = Verdict::Counterexample;
    e.witness = std::move(witness);
    e.witness_points = std::move(pts);
    return e;
}

// Asserted when the space vouches for one of `props`, otherwise not checkable.
HypothesisEntry& asserted_or_open(const OrderedMetricSpace& space, HypothesisEntry& e,
                                  std::initializer_list<Property> props, const std::string& why) {
    for (Property p : props) {
        if (space.asserts(p)) {
            e.verdict = Verdict::Asserted;
            e.witness = "asserted (" + std::string(to_string(p)) + "), not verified";
            return e;
        }
    }
    e.verdict = Verdict::NotCheckable;
    e.witness = why;
    return e;
}

bool is_indexed(const OrderedMetricSpace& space) { return space.flavor() == Flavor::Indexed; }

std::string scope(const OrderedMetricSpace& space) {
    return is_indexed(space) ? " on the enumerable fragment" : "";
}

// Sources for exhaustive checks: every point of a finite space, the first
// half of an indexed space's budget.
std::vector<Point> fragment(const OrderedMetricSpace& space) {
    if (space.flavor() == Flavor::Finite) return space.enumerate();
    if (is_indexed(space)) return space.enumerate(std::max<std::size_t>(1, space.indexed()->budget() / 2));
    return {};
}

// Index images of a map over every materializable point.
std::set<std::size_t> image_set(const OrderedMetricSpace& space, const SelfMap& f) {
    std::set<std::size_t> out;
    for (const auto& p : space.enumerate()) out.insert(f.apply(space, p).index());
    return out;
}

bool in_subspace(const OrderedMetricSpace& space, const MappingPair& pair, const Subspace& E, const Point& p,
                 const std::set<std::size_t>& t_img, const std::set<std::size_t>& s_img) {
    (void)space;
    (void)pair;
    switch (E.kind) {
        case Subspace::Kind::Whole: return true;
        case Subspace::Kind::ImageT: return t_img.count(p.index()) != 0;
        case Subspace::Kind::ImageS: return s_img.count(p.index()) != 0;
        case Subspace::Kind::Explicit: return std::find(E.points.begin(), E.points.end(), p) != E.points.end();
    }
    return false;
}

// Materializable members of E in index order (discrete spaces).
std::vector<Point> subspace_members(const OrderedMetricSpace& space, const MappingPair& pair, const Subspace& E) {
    std::vector<Point> out;
    if (E.kind == Subspace::Kind::Explicit) {
        for (const auto& p : E.points)
            if (space.contains(p)) out.push_back(p);
        std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a.index() < b.index(); });
        return out;
    }
    std::set<std::size_t> idx;
    if (E.kind == Subspace::Kind::Whole) {
        for (const auto& p : space.enumerate()) idx.insert(p.index());
    } else {
        idx = image_set(space, E.kind == Subspace::Kind::ImageT ? pair.T : pair.S);
    }
    for (std::size_t i : idx) {
        const Point p = Point::at_index(i);
        if (space.contains(p)) out.push_back(p);
    }
    return out;
}

bool direction_matches(double a, double b, Direction d) {
    switch (d) {
        case Direction::Increasing: return b > a;
        case Direction::Decreasing: return b < a;
        case Direction::Either: return b != a;
    }
    return false;
}

struct ChainLimit {
    double limit;
    double delta;
    std::vector<Point> tail;
};

// Detects a strictly monotone, geometrically contracting tail in a chain of
// indexed points and estimates its limit (Aitken's delta-squared on the last
// three terms). `delta` is the matching tolerance for candidate limit points:
// far below the smallest observed gap, so chain members never match.
std::optional<ChainLimit> chain_limit(const OrderedMetricSpace& space, const std::vector<Point>& chain,
                                      Direction direction) {
    constexpr std::size_t kTail = 8;
    if (chain.size() < kTail) return std::nullopt;
    std::vector<double> v;
    std::vector<Point> tail(chain.end() - kTail, chain.end());
    for (const auto& p : tail) v.push_back(space.indexed()->value(p.index()));
    Direction d = direction;
    if (d == Direction::Either) d = v[1] > v[0] ? Direction::Increasing : Direction::Decreasing;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!direction_matches(v[i - 1], v[i], d)) return std::nullopt;
    for (std::size_t i = 2; i < v.size(); ++i) {
        const double g0 = std::abs(v[i - 1] - v[i - 2]);
        const double g1 = std::abs(v[i] - v[i - 1]);
        if (!(g1 < 0.99 * g0)) return std::nullopt;
    }
    const double x0 = v[kTail - 3], x1 = v[kTail - 2], x2 = v[kTail - 1];
    const double d1 = x2 - x1, d0 = x1 - x0;
    const double denom = d1 - d0;
    const double limit = denom == 0 ? x2 : x2 - d1 * d1 / denom;
    const double last_gap = std::abs(d1);
    return ChainLimit{limit, 1e-6 * last_gap, tail};
}

std::string chain_text(const OrderedMetricSpace& space, const std::vector<Point>& pts) {
    std::string out;
    const std::size_t from = pts.size() > 4 ? pts.size() - 4 : 0;
    for (std::size_t i = from; i < pts.size(); ++i) out += (out.empty() ? "" : ", ") + space.label(pts[i]);
    return "..., " + out;
}

HypothesisEntry from_condition(std::string label, std::string description, const ConditionReport& r) {
    HypothesisEntry e = entry(std::move(label), std::move(description));
    switch (r.verdict) {
        case ConditionVerdict::PassOnGrid: e.verdict = Verdict::Verified; break;
        case ConditionVerdict::Counterexample: e.verdict = Verdict::Counterexample; break;
        case ConditionVerdict::NotApplicable: e.verdict = Verdict::NotCheckable; break;
    }
    e.witness = r.detail;
    if (r.witness && r.witness->point) e.witness_points.push_back(*r.witness->point);
    if (r.witness && r.witness->other) e.witness_points.push_back(*r.witness->other);
    return e;
}

// Runs a check, mapping budget and domain failures to not-checkable.
template <class Fn>
HypothesisEntry guarded(std::string label, std::string description, Fn&& fn) {
    try {
        HypothesisEntry e = fn();
        e.label = std::move(label);
        e.description = std::move(description);
        return e;
    } catch (const BudgetExceeded& ex) {
        HypothesisEntry e = entry(std::move(label), std::move(description));
        e.verdict = Verdict::NotCheckable;
        e.witness = std::string("beyond the materialization budget: ") + ex.what();
        return e;
    } catch (const MissingCompanion& ex) {
        HypothesisEntry e = entry(std::move(label), std::move(description));
        e.verdict = Verdict::NotCheckable;
        e.witness = ex.what();
        return e;
    }
}

Verdict combine(std::initializer_list<Verdict> vs) {
    bool asserted = false, open = false;
    for (Verdict v : vs) {
        if (v == Verdict::Counterexample) return Verdict::Counterexample;
        if (v == Verdict::NotCheckable) open = true;
        if (v == Verdict::Asserted) asserted = true;
    }
    if (open) return Verdict::NotCheckable;
    return asserted ? Verdict::Asserted : Verdict::Verified;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "verified";
        case Verdict::Asserted: return "asserted";
        case Verdict::Counterexample: return "counterexample";
        case Verdict::NotCheckable: return "not-checkable";
    }
    return "?";
}

std::string Subspace::describe() const {
    switch (kind) {
        case Kind::Whole: return "X";
        case Kind::ImageT: return "T(X)";
        case Kind::ImageS: return "S(X)";
        case Kind::Explicit: {
            std::string out = "{";
            for (std::size_t i = 0; i < points.size(); ++i) out += (i ? ", " : "") + points[i].to_string();
            return out + "}";
        }
    }
    return "?";
}

std::string_view to_string(Continuity c) {
    switch (c) {
        case Continuity::SOContinuous: return "i";
        case Continuity::OCompatibleContinuous: return "ii";
        case Continuity::Continuous: return "iii";
    }
    return "?";
}

std::string_view to_string(TheoremVariant v) {
    switch (v) {
        case TheoremVariant::BVOrdered: return "bv-ordered";
        case TheoremVariant::MainRegular: return "main-regular";
        case TheoremVariant::MainContinuity: return "main-continuity";
        case TheoremVariant::PoCUnique: return "poc-unique";
        case TheoremVariant::PoCContinuity: return "poc-continuity";
        case TheoremVariant::QuasiCorollary: return "quasi-corollary";
        case TheoremVariant::Metric: return "metric";
    }
    return "?";
}

std::optional<TheoremVariant> variant_from_string(std::string_view s, Continuity* continuity) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    std::string base = lower;
    std::optional<Continuity> cont;
    if (const auto open = lower.find('('); open != std::string::npos) {
        if (lower.back() != ')') return std::nullopt;
        const std::string arg = lower.substr(open + 1, lower.size() - open - 2);
        base = lower.substr(0, open);
        if (arg == "i") cont = Continuity::SOContinuous;
        else if (arg == "ii") cont = Continuity::OCompatibleContinuous;
        else if (arg == "iii") cont = Continuity::Continuous;
        else return std::nullopt;
    }
    for (auto v : {TheoremVariant::BVOrdered, TheoremVariant::MainRegular, TheoremVariant::MainContinuity,
                   TheoremVariant::PoCUnique, TheoremVariant::PoCContinuity, TheoremVariant::QuasiCorollary,
                   TheoremVariant::Metric}) {
        if (to_string(v) == base) {
            const bool takes_arg = v == TheoremVariant::MainContinuity || v == TheoremVariant::PoCContinuity;
            if (cont && !takes_arg) return std::nullopt;
            if (cont && continuity) *continuity = *cont;
            return v;
        }
    }
    return std::nullopt;
}

HypothesisEntry check_S_increasing(const OrderedMetricSpace& space, const MappingPair& pair) {
    HypothesisEntry e = entry("s-increasing", "Sx <= Sy implies Tx <= Ty");
    std::vector<Point> pts = space.is_discrete() ? fragment(space) : sample_points(space, {});
    std::vector<Point> s, t;
    for (const auto& p : pts) {
        s.push_back(pair.S.apply(space, p));
        t.push_back(pair.T.apply(space, p));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (space.leq(s[i], s[j]) && !space.leq(t[i], t[j])) {
                return refuted(e,
                               "x = " + space.label(pts[i]) + ", y = " + space.label(pts[j]) + ": Sx <= Sy but Tx = " +
                                   space.label(t[i]) + " is not <= Ty = " + space.label(t[j]),
                               {pts[i], pts[j]});
            }
        }
    }
    if (space.is_discrete()) return verified(e, "all pairs checked" + scope(space));
    return asserted_or_open(space, e, {Property::SIncreasing},
                            "no counterexample among " + std::to_string(pts.size()) + " samples; not decidable here");
}

HypothesisEntry check_range_inclusion(const OrderedMetricSpace& space, const MappingPair& pair, const Subspace& E) {
    HypothesisEntry e = entry("range", "T(X) is contained in E = " + E.describe() + ", which is contained in S(X)");
    if (space.is_discrete()) {
        const auto t_img = image_set(space, pair.T);
        const auto s_img = image_set(space, pair.S);
        for (const auto& x : fragment(space)) {
            const Point tx = pair.T.apply(space, x);
            if (!in_subspace(space, pair, E, tx, t_img, s_img))
                return refuted(e, "T(" + space.label(x) + ") = " + space.label(tx) + " is not in E", {x});
        }
        std::vector<Point> members;
        switch (E.kind) {
            case Subspace::Kind::Whole: members = fragment(space); break;
            case Subspace::Kind::ImageT:
                for (const auto& x : fragment(space)) members.push_back(pair.T.apply(space, x));
                break;
            case Subspace::Kind::ImageS: break;
            case Subspace::Kind::Explicit: members = E.points; break;
        }
        for (const auto& m : members) {
            if (!s_img.count(m.index()))
                return refuted(e, space.label(m) + " lies in E but has no S-preimage" + scope(space), {m});
        }
        return verified(e, "inclusions hold" + scope(space));
    }
    if (E.kind == Subspace::Kind::Explicit) {
        e.verdict = Verdict::NotCheckable;
        e.witness = "explicit subspaces are not supported on interval spaces";
        return e;
    }
    if (pair.S.is_identity()) return verified(e, "S is the identity, so S(X) = X and T is a self-map");
    for (const auto& x : sample_points(space, {})) {
        const Point tx = pair.T.apply(space, x);
        std::optional<Point> pre;
        try {
            pre = s_preimage(space, pair, tx);
        } catch (const Error&) {
            break;
        }
        if (!pre) return refuted(e, "T(" + space.label(x) + ") = " + space.label(tx) + " has no S-preimage", {x});
    }
    return asserted_or_open(space, e, {Property::RangeInclusion}, "S(X) cannot be enumerated on an interval");
}

HypothesisEntry check_completeness(const OrderedMetricSpace& space, const MappingPair& pair, const Subspace& E,
                                   Direction direction) {
    HypothesisEntry e = entry("complete", "E = " + E.describe() + " is O-complete");
    if (space.flavor() == Flavor::Finite) return verified(e, "finite metric spaces are complete");
    if (is_indexed(space)) {
        const auto members = subspace_members(space, pair, E);
        const auto lim = chain_limit(space, members, direction);
        if (!lim) return verified(e, "no monotone Cauchy chain escapes E on the enumerable fragment");
        for (const auto& z : members) {
            if (std::abs(space.indexed()->value(z.index()) - lim->limit) <= lim->delta)
                return verified(e, "chain limit " + num(lim->limit) + " is attained at " + space.label(z) + scope(space));
        }
        // The limit may be a point of X outside E.
        std::string outside;
        for (const auto& p : space.enumerate()) {
            if (std::abs(space.indexed()->value(p.index()) - lim->limit) <= lim->delta) {
                outside = " (the limit is " + space.label(p) + ", which is not in E)";
                break;
            }
        }
        return refuted(e, "monotone Cauchy chain " + chain_text(space, lim->tail) + " in E converges to " +
                              num(lim->limit) + ", which is not in E" + outside,
                       lim->tail);
    }
    const auto& b = space.interval()->bounds();
    const bool closed = (b.include_lower || !std::isfinite(b.lower)) && (b.include_upper || !std::isfinite(b.upper));
    if (E.kind == Subspace::Kind::Whole && closed && space.interval()->order_label() == "usual")
        return verified(e, "closed intervals of the real line are complete");
    return asserted_or_open(space, e, {Property::Complete}, "completeness of an interval subspace is not decidable here");
}

HypothesisEntry check_regularity(const OrderedMetricSpace& space, const MappingPair& pair, Direction direction,
                                 const Subspace& E) {
    const char* kind = direction == Direction::Increasing ? "I" : direction == Direction::Decreasing ? "D" : "M";
    HypothesisEntry e = entry("regular", std::string("(E, d, <=) is ") + kind + "-regular");
    const Property prop = direction == Direction::Increasing   ? Property::IRegular
                          : direction == Direction::Decreasing ? Property::DRegular
                                                               : Property::MRegular;
    if (!space.is_discrete()) {
        if (direction == Direction::Either && space.asserts(Property::IRegular) && space.asserts(Property::DRegular)) {
            e.verdict = Verdict::Asserted;
            e.witness = "asserted (i-regular and d-regular), not verified";
            return e;
        }
        return asserted_or_open(space, e, {prop}, "regularity quantifies over sequences of an interval");
    }
    const auto t_img = image_set(space, pair.T);
    const auto s_img = image_set(space, pair.S);
    auto condition = [&](const Point& s, const Point& ss) {
        const bool up = space.leq(s, ss);
        const bool down = space.leq(ss, s);
        return direction == Direction::Increasing ? up : direction == Direction::Decreasing ? down : up && down;
    };
    // Convergent sequences in a finite space are eventually constant, so the
    // condition reduces to the constant sequences at each Sx in E.
    for (const auto& x : fragment(space)) {
        const Point s = pair.S.apply(space, x);
        if (!in_subspace(space, pair, E, s, t_img, s_img)) continue;
        const Point ss = pair.S.apply(space, s);
        if (!condition(s, ss)) {
            const char* rel = direction == Direction::Increasing ? "<=" : direction == Direction::Decreasing ? ">=" : "<= and >=";
            return refuted(e, "x = " + space.label(x) + ": Sx = " + space.label(s) + " is not " + rel + " S(Sx) = " + space.label(ss),
                           {x});
        }
    }
    if (is_indexed(space)) {
        // Non-constant chains of S-images: only limits that are themselves S-images matter.
        std::vector<Point> chain;
        for (std::size_t i : s_img) {
            const Point p = Point::at_index(i);
            if (space.contains(p) && in_subspace(space, pair, E, p, t_img, s_img)) chain.push_back(p);
        }
        if (const auto lim = chain_limit(space, chain, direction)) {
            for (std::size_t i : s_img) {
                const Point w = Point::at_index(i);
                if (!space.contains(w) || std::abs(space.indexed()->value(i) - lim->limit) > lim->delta) continue;
                for (const auto& c : lim->tail) {
                    if (!space.comparable(c, w))
                        return refuted(e, "chain term " + space.label(c) + " is not comparable with its limit " + space.label(w), {c});
                }
                const Point sw = pair.S.apply(space, w);
                if (!condition(w, sw))
                    return refuted(e, "chain limit " + space.label(w) + " fails the condition against S(limit) = " + space.label(sw), {w});
            }
        }
        return verified(e, "pointwise reduction and chain limits checked on the enumerable fragment");
    }
    return verified(e, "finite reduction: Sx vs S(Sx) checked for every x with Sx in E");
}

HypothesisEntry check_weak_compatibility(const OrderedMetricSpace& space, const MappingPair& pair) {
    HypothesisEntry e = entry("weakly-compatible", "S(Tx) = T(Sx) at every coincidence point");
    if (space.is_discrete()) {
        const auto bf = coincidence_points_bruteforce(space, pair);
        for (const auto& x : bf.coincidence_points) {
            const Point stx = pair.S.apply(space, pair.T.apply(space, x));
            const Point tsx = pair.T.apply(space, pair.S.apply(space, x));
            if (!(stx == tsx))
                return refuted(e, "x = " + space.label(x) + ": S(Tx) = " + space.label(stx) + " but T(Sx) = " + space.label(tsx), {x});
        }
        if (bf.coincidence_points.empty()) return verified(e, "vacuous: no coincidence points" + scope(space));
        return verified(e, std::to_string(bf.coincidence_points.size()) + " coincidence points checked" + scope(space));
    }
    if (pair.S.is_identity() || pair.T.is_identity()) return verified(e, "one of the maps is the identity");
    return asserted_or_open(space, e, {Property::WeaklyCompatible, Property::OCompatible},
                            "coincidence points of an interval space cannot be enumerated");
}

HypothesisEntry check_O_compatibility(const OrderedMetricSpace& space, const MappingPair& pair, Direction direction) {
    (void)direction;
    HypothesisEntry e = entry("o-compatible", "d(S(Tx_n), T(Sx_n)) -> 0 along monotone sequences with Sx_n, Tx_n -> t");
    if (pair.S.is_identity() || pair.T.is_identity()) return verified(e, "one of the maps is the identity");
    if (space.flavor() == Flavor::Finite) {
        // Eventually constant sequences: the condition is weak compatibility.
        HypothesisEntry w = check_weak_compatibility(space, pair);
        w.label = e.label;
        w.description = e.description;
        if (w.verdict == Verdict::Verified) w.witness = "finite reduction to weak compatibility: " + w.witness;
        return w;
    }
    return asserted_or_open(space, e, {Property::OCompatible}, "O-compatibility quantifies over convergent sequences");
}

HypothesisEntry check_continuity(const OrderedMetricSpace& space, const MappingPair& pair, Continuity which,
                                 Direction direction) {
    HypothesisEntry e = entry("c2", "");
    const bool finite = space.flavor() == Flavor::Finite;
    auto map_O_continuous = [&](const SelfMap& f, const char* name) {
        HypothesisEntry m = entry(std::string(name) + "-o-continuous", "");
        if (f.is_identity()) return verified(m, "identity");
        if (finite) return verified(m, "sequences in a finite space converge only by becoming constant");
        asserted_or_open(space, m, {Property::OContinuous, Property::Continuous}, std::string(name) + " continuity is not decidable here");
        return m;
    };
    switch (which) {
        case Continuity::SOContinuous: {
            e.description = "(i) T is (S,O)-continuous";
            if (finite) {
                const auto pts = space.enumerate();
                for (const auto& a : pts) {
                    for (const auto& b : pts) {
                        if (pair.S.apply(space, a) == pair.S.apply(space, b) &&
                            !(pair.T.apply(space, a) == pair.T.apply(space, b)))
                            return refuted(e, "Sa = Sb but Ta != Tb for a = " + space.label(a) + ", b = " + space.label(b), {a, b});
                    }
                }
                return verified(e, "finite reduction: T is constant on every S-fibre");
            }
            if (pair.T.is_identity() && pair.S.is_identity()) return verified(e, "both maps are the identity");
            if (pair.S.is_identity() &&
                (space.asserts(Property::OContinuous) || space.asserts(Property::Continuous))) {
                e.verdict = Verdict::Asserted;
                e.witness = "S is the identity and T is asserted continuous";
                return e;
            }
            return asserted_or_open(space, e, {Property::SOContinuous}, "(S,O)-continuity is not decidable here");
        }
        case Continuity::OCompatibleContinuous: {
            e.description = "(ii) (T,S) is O-compatible and T, S are O-continuous";
            const auto oc = check_O_compatibility(space, pair, direction);
            const auto tc = map_O_continuous(pair.T, "T");
            const auto sc = map_O_continuous(pair.S, "S");
            e.verdict = combine({oc.verdict, tc.verdict, sc.verdict});
            e.witness = "O-compatibility: " + oc.witness + "; T: " + tc.witness + "; S: " + sc.witness;
            e.witness_points = oc.witness_points;
            return e;
        }
        case Continuity::Continuous: {
            e.description = "(iii) T and S are continuous";
            if (finite) return verified(e, "every map on a finite metric space is continuous");
            const bool t_id = pair.T.is_identity(), s_id = pair.S.is_identity();
            if (t_id && s_id) return verified(e, "both maps are the identity");
            return asserted_or_open(space, e, {Property::Continuous}, "continuity is not decidable here");
        }
    }
    return e;
}

BruteForceResult coincidence_points_bruteforce(const OrderedMetricSpace& space, const MappingPair& pair,
                                               std::optional<std::size_t> limit) {
    BruteForceResult out;
    std::vector<Point> pts;
    if (space.flavor() == Flavor::Finite) {
        pts = space.enumerate();
    } else if (is_indexed(space)) {
        const std::size_t budget = space.indexed()->budget();
        const std::size_t n = limit.value_or(std::max<std::size_t>(1, budget / 2));
        if (n > budget) throw BudgetExceeded(n, budget);
        pts = space.enumerate(n);
    } else {
        throw Error("coincidence points of an interval space cannot be enumerated");
    }
    std::set<std::size_t> poc;
    for (const auto& x : pts) {
        ++out.inspected;
        const Point sx = pair.S.apply(space, x);
        const Point tx = pair.T.apply(space, x);
        if (!(sx == tx)) continue;
        out.coincidence_points.push_back(x);
        if (poc.insert(sx.index()).second) out.points_of_coincidence.push_back(sx);
        if (sx == x) out.common_fixed_points.push_back(x);
    }
    return out;
}

HypothesisEntry check_directedness(const OrderedMetricSpace& space, const MappingPair& pair,
                                   const std::vector<Point>& C) {
    HypothesisEntry e = entry("directed", "C(T,S) is (T,S)-directed");
    if (C.size() <= 1) return verified(e, "vacuous: at most one coincidence point");
    if (!space.is_discrete()) return asserted_or_open(space, e, {Property::Directed}, "z ranges over an interval");
    const auto pts = space.enumerate();
    std::vector<Point> s_images;
    for (const auto& z : pts) s_images.push_back(pair.S.apply(space, z));
    for (std::size_t i = 0; i < C.size(); ++i) {
        const Point tx = pair.T.apply(space, C[i]);
        for (std::size_t j = i + 1; j < C.size(); ++j) {
            const Point ty = pair.T.apply(space, C[j]);
            bool found = false;
            for (const auto& sz : s_images) {
                if (space.comparable(tx, sz) && space.comparable(ty, sz)) {
                    found = true;
                    break;
                }
            }
            if (!found)
                return refuted(e, "no z with Sz comparable to both T(" + space.label(C[i]) + ") and T(" + space.label(C[j]) + ")",
                               {C[i], C[j]});
        }
    }
    return verified(e, "a common comparable S-image exists for every pair" + scope(space));
}

HypothesisEntry check_totally_ordered(const OrderedMetricSpace& space, const std::vector<Point>& C) {
    HypothesisEntry e = entry("totally-ordered", "C(T,S) is totally ordered");
    for (std::size_t i = 0; i < C.size(); ++i) {
        for (std::size_t j = i + 1; j < C.size(); ++j) {
            if (!space.comparable(C[i], C[j]))
                return refuted(e, space.label(C[i]) + " and " + space.label(C[j]) + " are not comparable", {C[i], C[j]});
        }
    }
    return verified(e, C.size() <= 1 ? "vacuous: at most one coincidence point" : "all pairs comparable");
}

HypothesisEntry check_comparable_mapping(const OrderedMetricSpace& space, const SelfMap& f, std::string_view name) {
    HypothesisEntry e = entry(std::string(name) + "-comparable", std::string(name) + " maps comparable points to comparable points");
    if (f.is_identity()) return verified(e, "identity");
    const auto pts = space.is_discrete() ? fragment(space) : sample_points(space, {});
    std::vector<Point> img;
    for (const auto& p : pts) img.push_back(f.apply(space, p));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (space.comparable(pts[i], pts[j]) && !space.comparable(img[i], img[j]))
                return refuted(e, space.label(pts[i]) + " and " + space.label(pts[j]) + " are comparable but their images are not",
                               {pts[i], pts[j]});
        }
    }
    if (space.is_discrete()) return verified(e, "all comparable pairs checked" + scope(space));
    return asserted_or_open(space, e, {Property::ComparableMapping}, "no counterexample among samples; not decidable here");
}

HypothesisEntry check_one_one(const OrderedMetricSpace& space, const SelfMap& f, std::string_view name) {
    HypothesisEntry e = entry(std::string(name) + "-one-one", std::string(name) + " is one-one");
    if (f.is_identity()) return verified(e, "identity");
    const auto pts = space.is_discrete() ? fragment(space) : sample_points(space, {});
    std::vector<Point> img;
    for (const auto& p : pts) img.push_back(f.apply(space, p));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (space.same(img[i], img[j]))
                return refuted(e, std::string(name) + "(" + space.label(pts[i]) + ") = " + std::string(name) + "(" + space.label(pts[j]) + ")",
                               {pts[i], pts[j]});
        }
    }
    if (space.is_discrete()) return verified(e, "no two points share an image" + scope(space));
    e.verdict = Verdict::NotCheckable;
    e.witness = "no collision among samples; injectivity is not decidable here";
    return e;
}

const HypothesisEntry* HypothesisReport::find(std::string_view label) const {
    for (const auto& e : entries)
        if (e.label == label) return &e;
    return nullptr;
}

namespace {

// Either of two entries suffices ("one of T and S").
HypothesisEntry either_of(std::string label, std::string description, const HypothesisEntry& a, const HypothesisEntry& b) {
    HypothesisEntry e = entry(std::move(label), std::move(description));
    const HypothesisEntry& best = a.verdict == Verdict::Verified   ? a
                                  : b.verdict == Verdict::Verified ? b
                                  : a.verdict == Verdict::Asserted ? a
                                  : b.verdict == Verdict::Asserted ? b
                                  : a.verdict == Verdict::NotCheckable ? a
                                                                       : b;
    e.verdict = best.verdict;
    e.witness = a.label + ": " + a.witness + "; " + b.label + ": " + b.witness;
    if (!e.holds()) e.witness_points = a.witness_points;
    return e;
}

std::string continuity_description(Continuity c) {
    switch (c) {
        case Continuity::SOContinuous: return "(i) T is (S,O)-continuous";
        case Continuity::OCompatibleContinuous: return "(ii) (T,S) is O-compatible and T, S are O-continuous";
        case Continuity::Continuous: return "(iii) T and S are continuous";
    }
    return "";
}

HypothesisEntry start_entry(const OrderedMetricSpace& space, const MappingPair& pair, Direction direction,
                            std::optional<Point>& x0, const std::string& label) {
    const char* rel = direction == Direction::Increasing ? "Sx0 <= Tx0"
                      : direction == Direction::Decreasing ? "Sx0 >= Tx0"
                                                           : "Sx0 comparable with Tx0";
    HypothesisEntry e = entry(label, std::string("there exists x0 with ") + rel);
    if (x0) {
        if (start_condition(space, pair, *x0, direction)) return verified(e, "x0 = " + space.label(*x0));
        refuted(e, "the given x0 = " + space.label(*x0) + " fails " + rel, {*x0});
        return e;
    }
    const auto candidates = space.is_discrete() ? fragment(space) : sample_points(space, {});
    for (const auto& p : candidates) {
        if (start_condition(space, pair, p, direction)) {
            x0 = p;
            return verified(e, "x0 = " + space.label(p) + " (found by search)");
        }
    }
    if (space.flavor() == Flavor::Finite) return refuted(e, std::string("no point satisfies ") + rel);
    e.verdict = Verdict::NotCheckable;
    e.witness = std::string("no inspected point satisfies ") + rel;
    return e;
}

// (a5): every pair in S(X) has a common lower bound of the form Sv.
HypothesisEntry lower_bound_entry(const OrderedMetricSpace& space, const MappingPair& pair) {
    HypothesisEntry e = entry("a5", "for all x, y in S(X) there is v with Sv <= x and Sv <= y");
    if (!space.is_discrete()) {
        e.verdict = Verdict::NotCheckable;
        e.witness = "S(X) cannot be enumerated on an interval";
        return e;
    }
    std::vector<Point> s_img;
    for (const auto& p : fragment(space)) {
        const Point s = pair.S.apply(space, p);
        if (std::find(s_img.begin(), s_img.end(), s) == s_img.end()) s_img.push_back(s);
    }
    for (std::size_t i = 0; i < s_img.size(); ++i) {
        for (std::size_t j = i; j < s_img.size(); ++j) {
            const bool found = std::any_of(s_img.begin(), s_img.end(), [&](const Point& sv) {
                return space.leq(sv, s_img[i]) && space.leq(sv, s_img[j]);
            });
            if (!found)
                return refuted(e, "no Sv below both " + space.label(s_img[i]) + " and " + space.label(s_img[j]),
                               {s_img[i], s_img[j]});
        }
    }
    return verified(e, "checked" + scope(space));
}

bool all_hold(const HypothesisReport& r, const std::vector<std::string>& labels) {
    for (const auto& l : labels) {
        const auto* e = r.find(l);
        if (!e || !e->holds()) return false;
    }
    return true;
}

bool contains_point(const OrderedMetricSpace& space, const std::vector<Point>& v, const Point& p) {
    return std::any_of(v.begin(), v.end(), [&](const Point& q) { return space.same(q, p); });
}

}  // namespace

HypothesisReport certify(const OrderedMetricSpace& input_space, const MappingPair& pair, const ImplicitContraction& ic,
                         TheoremVariant variant, const Subspace& E_in, std::optional<Point> x0,
                         const CertifyOptions& options) {
    const bool metric = variant == TheoremVariant::Metric;
    const OrderedMetricSpace space = metric ? input_space.with_total_relation() : input_space;
    const bool bv = variant == TheoremVariant::BVOrdered;
    const Subspace E = bv ? Subspace::whole() : E_in;
    const Direction dir = metric ? Direction::Either : options.direction;

    HypothesisReport r;
    r.variant = variant;
    r.direction = dir;
    r.continuity = options.continuity;
    auto add = [&](HypothesisEntry e) { r.entries.push_back(std::move(e)); };

    // Standing hypotheses shared by all variants.
    add(guarded("complete", bv ? "X is complete" : "E = " + E.describe() + " is O-complete",
                [&] { return check_completeness(space, pair, E, dir); }));
    add(guarded("range", bv ? "T(X) is contained in S(X)" : "T(X) is contained in E = " + E.describe() + ", contained in S(X)",
                [&] { return check_range_inclusion(space, pair, bv ? Subspace::image_S() : E); }));
    if (!metric) add(guarded("s-increasing", "T is S-increasing", [&] { return check_S_increasing(space, pair); }));
    if (variant == TheoremVariant::QuasiCorollary) {
        add(guarded("half-comparison", "rho is a half-comparison function", [&] {
            if (!ic.inner) throw MissingCompanion("the contraction names no inner function rho");
            return from_condition("", "", check_half_comparison(HalfComparisonFn(*ic.inner), options.grid));
        }));
    } else {
        add(guarded(bv ? "f1a" : "F1a", "F satisfies F1a with the companion phi",
                    [&] { return from_condition("", "", check_condition_F1(ic, ConditionId::F1a, options.grid)); }));
    }
    add(guarded("contraction", "F(d(Tx,Ty), d(Sx,Sy), d(Sx,Tx), d(Sy,Ty), d(Sx,Ty), d(Sy,Tx)) <= 0 whenever Sx <= Sy",
                [&] { return from_condition("", "", evaluate_contraction(space, pair, ic, options.sampler)); }));
    std::vector<std::string> standing;
    for (const auto& e : r.entries) standing.push_back(e.label);

    auto f_entry = [&](const std::string& label, ConditionId id) {
        return guarded(label, "F satisfies " + std::string(to_string(id)),
                       [&] { return from_condition("", "", check_condition(ic, id, options.grid)); });
    };
    auto regular = [&](const std::string& label) {
        return guarded(label, "", [&] {
            auto e = check_regularity(space, pair, dir, E);
            return e;
        });
    };
    auto weak = [&](const std::string& label) {
        return guarded(label, "(T,S) is weakly compatible", [&] { return check_weak_compatibility(space, pair); });
    };
    auto continuity = [&](const std::string& label) {
        auto e = guarded(label, "", [&] { return check_continuity(space, pair, options.continuity, dir); });
        e.description = continuity_description(options.continuity);
        return e;
    };

    // Fill the regularity descriptions once the direction is known.
    const std::string reg_desc = std::string("(E, d, <=) is ") +
                                 (dir == Direction::Increasing ? "I" : dir == Direction::Decreasing ? "D" : "M") + "-regular";

    // Brute-force coincidence set, used by the C(T,S) hypotheses.
    std::optional<BruteForceResult> oracle;
    if (space.is_discrete()) {
        try {
            oracle = coincidence_points_bruteforce(space, pair);
        } catch (const BudgetExceeded&) {
        }
    }
    auto c_entry = [&](const std::string& label, auto&& check) {
        HypothesisEntry e = guarded(label, "", [&] {
            if (!oracle) {
                HypothesisEntry open = entry(label, "");
                asserted_or_open(space, open, {Property::Directed, Property::TotallyOrdered},
                                 "C(T,S) cannot be enumerated");
                return open;
            }
            return check(oracle->coincidence_points);
        });
        return e;
    };
    auto directed = [&](const std::string& label) {
        auto e = c_entry(label, [&](const std::vector<Point>& C) { return check_directedness(space, pair, C); });
        if (!oracle) asserted_or_open(space, e, {Property::Directed}, "C(T,S) cannot be enumerated");
        e.description = "C(T,S) is (T,S)-directed";
        return e;
    };
    auto totally = [&](const std::string& label) {
        auto e = c_entry(label, [&](const std::vector<Point>& C) { return check_totally_ordered(space, C); });
        if (!oracle) asserted_or_open(space, e, {Property::TotallyOrdered}, "C(T,S) cannot be enumerated");
        e.description = "C(T,S) is totally ordered";
        return e;
    };
    auto comparable_map = [&](const std::string& label) {
        return guarded(label, "one of T and S is a comparable mapping", [&] {
            return either_of(label, "", check_comparable_mapping(space, pair.T, "T"),
                             check_comparable_mapping(space, pair.S, "S"));
        });
    };
    auto one_one = [&](const std::string& label) {
        return guarded(label, "one of T and S is one-one", [&] {
            return either_of(label, "", check_one_one(space, pair.T, "T"), check_one_one(space, pair.S, "S"));
        });
    };

    std::vector<std::string> stage_coincidence, stage_common, stage_unique;
    std::vector<Conclusion> conclusions;
    auto with = [](std::vector<std::string> base, std::initializer_list<const char*> more) {
        for (const char* m : more) base.emplace_back(m);
        return base;
    };

    switch (variant) {
        case TheoremVariant::BVOrdered: {
            add(start_entry(space, pair, dir, x0, "a1"));
            auto a2 = regular("a2");
            a2.description = "increasing sequences {Sx_n} -> Sx satisfy Sx_n <= Sx and Sx <= S(Sx)";
            add(a2);
            add(weak("a3"));
            add(f_entry("a4", ConditionId::F2));
            add(guarded("a5", "", [&] { return lower_bound_entry(space, pair); }));
            r.entries.back().description = "for all x, y in S(X) there is v with Sv <= x and Sv <= y";
            add(f_entry("a6", ConditionId::F1c));
            stage_coincidence = with(standing, {"a1", "a2"});
            stage_common = with(stage_coincidence, {"a3", "a4"});
            r.base_labels = stage_common;
            conclusions = {{"a coincidence point exists", stage_coincidence},
                           {"a common fixed point exists", stage_common},
                           {"the common fixed point is unique", with(stage_common, {"a5", "a6"})}};
            break;
        }
        case TheoremVariant::MainRegular:
        case TheoremVariant::MainContinuity: {
            const bool reg = variant == TheoremVariant::MainRegular;
            add(start_entry(space, pair, dir, x0, "b1"));
            if (reg) {
                auto b2 = regular("b2");
                b2.description = reg_desc;
                add(b2);
            } else {
                add(continuity("c2"));
            }
            add(f_entry("b3", ConditionId::F2));
            add(weak("b4"));
            if (reg) {
                add(directed("b5"));
                add(f_entry("b6", ConditionId::F1c));
            } else {
                add(totally("c5"));
                add(comparable_map("c6"));
            }
            stage_coincidence = with(standing, {"b1", reg ? "b2" : "c2"});
            stage_common = with(stage_coincidence, {"b3", "b4"});
            r.base_labels = stage_common;
            conclusions = {{"a coincidence point exists", stage_coincidence},
                           {"a common fixed point exists", stage_common},
                           {"the common fixed point is unique",
                            reg ? with(stage_common, {"b5", "b6"}) : with(stage_common, {"c5", "c6"})}};
            break;
        }
        case TheoremVariant::PoCUnique:
        case TheoremVariant::PoCContinuity: {
            const bool reg = variant == TheoremVariant::PoCUnique;
            add(start_entry(space, pair, dir, x0, "d1"));
            if (reg) {
                auto d2 = regular("d2");
                d2.description = reg_desc;
                add(d2);
            } else {
                add(continuity("c2"));
            }
            add(directed("d3"));
            add(f_entry("d4", ConditionId::F1b));
            add(one_one("d5"));
            add(weak("d6"));
            stage_coincidence = with(standing, {"d1", reg ? "d2" : "c2"});
            r.base_labels = stage_coincidence;
            const auto poc = with(stage_coincidence, {"d3", "d4"});
            const auto uc = with(poc, {"d5"});
            conclusions = {{"a coincidence point exists", stage_coincidence},
                           {"the point of coincidence is unique", poc},
                           {"the coincidence point is unique", uc},
                           {"the common fixed point is unique", with(uc, {"d6"})}};
            break;
        }
        case TheoremVariant::QuasiCorollary: {
            add(start_entry(space, pair, dir, x0, "g1"));
            auto g2 = regular("g2");
            g2.description = reg_desc;
            add(g2);
            add(weak("g3"));
            add(directed("g4"));
            stage_coincidence = with(standing, {"g1", "g2"});
            r.base_labels = stage_coincidence;
            conclusions = {{"a coincidence point exists", stage_coincidence},
                           {"the common fixed point is unique", with(stage_coincidence, {"g3", "g4"})}};
            break;
        }
        case TheoremVariant::Metric: {
            add(weak("weakly-compatible"));
            add(f_entry("F2", ConditionId::F2));
            if (!x0) {
                const auto pts = space.is_discrete() ? fragment(space) : sample_points(space, {});
                if (!pts.empty()) x0 = pts.front();
            }
            stage_coincidence = standing;
            r.base_labels = with(standing, {"weakly-compatible", "F2"});
            conclusions = {{"a coincidence point exists", stage_coincidence},
                           {"the common fixed point is unique", r.base_labels}};
            break;
        }
    }

    // Overall verdict over the base stages.
    {
        bool any_counter = false, any_open = false;
        for (const auto& l : r.base_labels) {
            const auto* e = r.find(l);
            if (!e) continue;
            if (e->verdict == Verdict::Counterexample) any_counter = true;
            if (e->verdict == Verdict::NotCheckable) any_open = true;
            if (e->verdict == Verdict::Asserted) r.relies_on_assertions = true;
        }
        r.overall = any_counter ? Verdict::Counterexample : any_open ? Verdict::NotCheckable : Verdict::Verified;
    }
    r.x0 = x0;
    r.oracle = oracle;

    // Run the solver whenever a start point is available.
    if (x0) {
        SolveOptions so = options.solve;
        so.direction = dir;
        try {
            r.trace = jungck_sequence(space, pair, *x0, so);
            try {
                r.fixed_point = extract_fixed_point(space, pair, *r.trace, options.tol);
            } catch (const NoCoincidence& ex) {
                r.fixed_point_error = ex.what();
            }
        } catch (const NoPreimage& ex) {
            r.fixed_point_error = ex.what();
        }
    }

    for (auto& c : conclusions) {
        c.hypotheses_hold = all_hold(r, c.requires_labels);
        const bool have_solver = r.trace.has_value();
        const auto& fp = r.fixed_point;
        if (c.claim == "a coincidence point exists") {
            c.checked = have_solver || oracle.has_value();
            c.confirmed = fp.has_value() || (oracle && !oracle->coincidence_points.empty());
            c.detail = fp ? fp->detail : (oracle && !oracle->coincidence_points.empty())
                                             ? "brute force finds " + std::to_string(oracle->coincidence_points.size()) + " coincidence points"
                                             : (r.fixed_point_error.empty() ? "no coincidence point found" : r.fixed_point_error);
            if (oracle && oracle->coincidence_points.empty()) c.detail += "; brute force finds none" + scope(space);
        } else if (c.claim == "a common fixed point exists") {
            c.checked = have_solver || oracle.has_value();
            const bool solver_cfp = fp && fp->common_fixed_point;
            c.confirmed = solver_cfp || (oracle && !oracle->common_fixed_points.empty());
            if (solver_cfp && oracle && space.flavor() == Flavor::Finite &&
                !contains_point(space, oracle->common_fixed_points, *fp->common_fixed_point))
                c.confirmed = false;
            c.detail = solver_cfp ? "solver reaches common fixed point " + space.label(*fp->common_fixed_point)
                                  : "solver finds no common fixed point";
            if (oracle) c.detail += "; brute force finds " + std::to_string(oracle->common_fixed_points.size()) + scope(space);
        } else {
            // Uniqueness claims need enumeration.
            if (!oracle || space.flavor() != Flavor::Finite) {
                c.checked = false;
                c.detail = "uniqueness cannot be confirmed without exhaustive enumeration";
                if (fp && fp->common_fixed_point) c.detail += "; solver reaches " + space.label(*fp->common_fixed_point);
            } else {
                c.checked = true;
                const std::vector<Point>* set = &oracle->common_fixed_points;
                if (c.claim == "the point of coincidence is unique") set = &oracle->points_of_coincidence;
                if (c.claim == "the coincidence point is unique") set = &oracle->coincidence_points;
                c.confirmed = set->size() == 1;
                if (c.confirmed && c.claim == "the common fixed point is unique" && fp && fp->common_fixed_point)
                    c.confirmed = space.same(set->front(), *fp->common_fixed_point);
                if (c.confirmed && c.claim == "the common fixed point is unique" && !(fp && fp->common_fixed_point))
                    c.confirmed = false;
                c.detail = "brute force finds " + std::to_string(set->size());
            }
        }
        if (c.hypotheses_hold && c.checked && !c.confirmed)
            r.discrepancies.push_back("hypotheses for '" + c.claim + "' hold but the claim fails: " + c.detail);
    }
    r.conclusions = std::move(conclusions);

    if (!r.discrepancies.empty()) {
        auto diag = guarded("complete-T(X)", "T(X) is O-complete",
                            [&] { return check_completeness(space, pair, Subspace::image_T(), dir); });
        r.diagnostics.push_back(std::move(diag));
    }
    return r;
}

}  // namespace jungck
