#include "jungck/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace jungck {

namespace {

using json = nlohmann::ordered_json;

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json point_json(const OrderedMetricSpace& space, const Point& p) {
    if (p.is_value()) return p.value();
    return space.label(p);
}

json points_json(const OrderedMetricSpace& space, const std::vector<Point>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(point_json(space, p));
    return out;
}

std::string points_text(const OrderedMetricSpace& space, const std::vector<Point>& pts) {
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? ", " : "") + space.label(pts[i]);
    return out + "}";
}

json witness_json(const OrderedMetricSpace* space, const Witness& w) {
    json j;
    j["kind"] = w.kind;
    if (!w.tuple.empty()) j["tuple"] = w.tuple;
    if (w.t) j["t"] = *w.t;
    if (w.coordinate) j["coordinate"] = *w.coordinate + 1;
    if (space && w.point) j["x"] = point_json(*space, *w.point);
    if (space && w.other) j["y"] = point_json(*space, *w.other);
    j["value"] = w.value;
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

json condition_json(const OrderedMetricSpace* space, const ConditionReport& r) {
    json j;
    j["condition"] = std::string(to_string(r.id));
    j["verdict"] = std::string(to_string(r.verdict));
    j["detail"] = r.detail;
    j["grid"] = r.grid;
    j["evaluated"] = r.evaluated;
    j["not_applicable"] = r.not_applicable;
    if (r.witness) j["witness"] = witness_json(space, *r.witness);
    return j;
}

json entry_json(const OrderedMetricSpace& space, const HypothesisEntry& e) {
    json j;
    j["label"] = e.label;
    j["description"] = e.description;
    j["verdict"] = std::string(to_string(e.verdict));
    j["witness"] = e.witness;
    if (!e.witness_points.empty()) j["witness_points"] = points_json(space, e.witness_points);
    return j;
}

json trace_json(const OrderedMetricSpace& space, const IterationTrace& t) {
    json j;
    j["verdict"] = std::string(to_string(t.verdict));
    j["direction"] = std::string(to_string(t.direction));
    if (t.hit_at) j["hit_at"] = *t.hit_at;
    if (t.candidate) j["candidate"] = point_json(space, *t.candidate);
    if (t.residual) j["residual"] = *t.residual;
    j["detail"] = t.detail;
    json steps = json::array();
    for (std::size_t n = 0; n < t.steps.size(); ++n) {
        const Step& s = t.steps[n];
        json row;
        row["n"] = n;
        row["x"] = point_json(space, s.x);
        row["Sx"] = point_json(space, s.sx);
        row["Tx"] = point_json(space, s.tx);
        row["gap"] = s.gap ? json(*s.gap) : json(nullptr);
        steps.push_back(row);
    }
    j["steps"] = steps;
    return j;
}

json fixed_point_json(const OrderedMetricSpace& space, const FixedPointResult& f) {
    json j;
    j["coincidence"] = point_json(space, f.coincidence);
    j["point_of_coincidence"] = point_json(space, f.point_of_coincidence);
    j["residual"] = f.residual;
    j["weakly_compatible_here"] = f.weakly_compatible_here;
    j["common_fixed_point"] = f.common_fixed_point ? point_json(space, *f.common_fixed_point) : json(nullptr);
    j["from_search"] = f.from_search;
    j["detail"] = f.detail;
    return j;
}

void trace_text(std::ostringstream& os, const OrderedMetricSpace& space, const IterationTrace& t) {
    os << "trace: " << to_string(t.verdict) << " (" << to_string(t.direction) << ", " << t.steps.size()
       << " steps)\n";
    if (!t.detail.empty()) os << "  " << t.detail << "\n";
    os << "  n\tx\tSx\tTx\tgap\n";
    for (std::size_t n = 0; n < t.steps.size(); ++n) {
        const Step& s = t.steps[n];
        os << "  " << n << "\t" << space.label(s.x) << "\t" << space.label(s.sx) << "\t" << space.label(s.tx) << "\t"
           << (s.gap ? num(*s.gap) : "-") << "\n";
    }
}

void fixed_point_text(std::ostringstream& os, const OrderedMetricSpace& space,
                      const std::optional<FixedPointResult>& fp, const std::string& error) {
    if (fp) {
        os << "coincidence point: " << space.label(fp->coincidence) << " (residual " << num(fp->residual)
           << (fp->from_search ? ", from residual search" : "") << ")\n";
        os << "point of coincidence: " << space.label(fp->point_of_coincidence) << "\n";
        os << "weakly compatible here: " << (fp->weakly_compatible_here ? "yes" : "no") << "\n";
        os << "common fixed point: " << (fp->common_fixed_point ? space.label(*fp->common_fixed_point) : "none")
           << "\n";
    } else if (!error.empty()) {
        os << "no coincidence point: " << error << "\n";
    }
}

}  // namespace

std::string render_certificate(const OrderedMetricSpace& space, const HypothesisReport& r, Format format) {
    if (format == Format::Structured) {
        json j;
        j["variant"] = std::string(to_string(r.variant));
        if (r.variant == TheoremVariant::MainContinuity || r.variant == TheoremVariant::PoCContinuity)
            j["continuity"] = std::string(to_string(r.continuity));
        j["direction"] = std::string(to_string(r.direction));
        j["space"] = space.describe();
        j["overall"] = std::string(to_string(r.overall));
        j["relies_on_assertions"] = r.relies_on_assertions;
        j["base_labels"] = r.base_labels;
        json entries = json::array();
        for (const auto& e : r.entries) entries.push_back(entry_json(space, e));
        j["hypotheses"] = entries;
        json concl = json::array();
        for (const auto& c : r.conclusions) {
            concl.push_back({{"claim", c.claim},
                             {"requires", c.requires_labels},
                             {"hypotheses_hold", c.hypotheses_hold},
                             {"checked", c.checked},
                             {"confirmed", c.confirmed},
                             {"detail", c.detail}});
        }
        j["conclusions"] = concl;
        j["discrepancies"] = r.discrepancies;
        json diag = json::array();
        for (const auto& e : r.diagnostics) diag.push_back(entry_json(space, e));
        j["diagnostics"] = diag;
        j["x0"] = r.x0 ? point_json(space, *r.x0) : json(nullptr);
        if (r.trace) j["trace"] = trace_json(space, *r.trace);
        if (r.fixed_point) j["fixed_point"] = fixed_point_json(space, *r.fixed_point);
        if (!r.fixed_point_error.empty()) j["fixed_point_error"] = r.fixed_point_error;
        if (r.oracle) {
            j["oracle"] = {{"coincidence_points", points_json(space, r.oracle->coincidence_points)},
                           {"common_fixed_points", points_json(space, r.oracle->common_fixed_points)},
                           {"inspected", r.oracle->inspected}};
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "variant: " << to_string(r.variant);
    if (r.variant == TheoremVariant::MainContinuity || r.variant == TheoremVariant::PoCContinuity)
        os << "(" << to_string(r.continuity) << ")";
    os << "  direction: " << to_string(r.direction) << "\n";
    os << "space: " << space.describe() << "\n\n";
    for (const auto& e : r.entries) {
        os << "  [" << to_string(e.verdict) << "] " << e.label << ": " << e.description << "\n";
        if (!e.witness.empty()) os << "      " << e.witness << "\n";
    }
    os << "\noverall: " << to_string(r.overall) << (r.relies_on_assertions ? " (relies on assertions)" : "") << "\n";
    for (const auto& c : r.conclusions) {
        os << "  conclusion '" << c.claim << "': hypotheses " << (c.hypotheses_hold ? "hold" : "do not hold");
        if (c.checked) os << ", " << (c.confirmed ? "confirmed" : "not confirmed");
        else os << ", not checked";
        os << " (" << c.detail << ")\n";
    }
    for (const auto& d : r.discrepancies) os << "discrepancy: " << d << "\n";
    for (const auto& e : r.diagnostics) {
        os << "diagnostic [" << to_string(e.verdict) << "] " << e.label << ": " << e.witness << "\n";
    }
    if (r.x0) os << "x0: " << space.label(*r.x0) << "\n";
    if (r.trace) trace_text(os, space, *r.trace);
    fixed_point_text(os, space, r.fixed_point, r.fixed_point_error);
    if (r.oracle)
        os << "brute force: coincidence points " << points_text(space, r.oracle->coincidence_points)
           << ", common fixed points " << points_text(space, r.oracle->common_fixed_points) << "\n";
    return os.str();
}

std::string render_solve(const OrderedMetricSpace& space, const IterationTrace& trace,
                         const std::optional<FixedPointResult>& fp, const std::string& error, Format format) {
    if (format == Format::Structured) {
        json j;
        j["space"] = space.describe();
        j["trace"] = trace_json(space, trace);
        j["fixed_point"] = fp ? fixed_point_json(space, *fp) : json(nullptr);
        if (!error.empty()) j["fixed_point_error"] = error;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "space: " << space.describe() << "\n";
    trace_text(os, space, trace);
    fixed_point_text(os, space, fp, error);
    return os.str();
}

std::string render_oracle(const OrderedMetricSpace& space, const BruteForceResult& r, Format format) {
    if (format == Format::Structured) {
        json j;
        j["space"] = space.describe();
        j["inspected"] = r.inspected;
        j["coincidence_points"] = points_json(space, r.coincidence_points);
        j["points_of_coincidence"] = points_json(space, r.points_of_coincidence);
        j["common_fixed_points"] = points_json(space, r.common_fixed_points);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "space: " << space.describe() << "\n";
    os << "inspected: " << r.inspected << " points\n";
    os << "coincidence points: " << points_text(space, r.coincidence_points) << "\n";
    os << "points of coincidence: " << points_text(space, r.points_of_coincidence) << "\n";
    os << "common fixed points: " << points_text(space, r.common_fixed_points) << "\n";
    return os.str();
}

std::string render_catalog(const std::vector<ImplicitContraction>& entries, Format format) {
    auto ids = [](const std::set<ConditionId>& s) {
        std::vector<std::string> out;
        for (auto c : s) out.emplace_back(to_string(c));
        return out;
    };
    if (format == Format::Structured) {
        json arr = json::array();
        for (const auto& ic : entries) {
            arr.push_back({{"id", ic.id},
                           {"formula", ic.formula},
                           {"params", ic.params},
                           {"companion", ic.companion ? ic.companion->label() : ""},
                           {"claims", ids(ic.claims)},
                           {"denies", ids(ic.denies)}});
        }
        return json{{"catalog", arr}}.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& ic : entries) {
        os << ic.id << "\n  F = " << ic.formula << "\n";
        if (ic.companion) os << "  phi(t) = " << ic.companion->label() << "\n";
        os << "  claims:";
        for (const auto& c : ids(ic.claims)) os << " " << c;
        if (!ic.denies.empty()) {
            os << "\n  denies:";
            for (const auto& c : ids(ic.denies)) os << " " << c;
        }
        os << "\n";
    }
    return os.str();
}

std::string render_conditions(const ImplicitContraction& ic, const std::vector<ConditionReport>& reports,
                              Format format) {
    if (format == Format::Structured) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(condition_json(nullptr, r));
        return json{{"id", ic.id}, {"formula", ic.formula}, {"conditions", arr}}.dump(2) + "\n";
    }
    std::ostringstream os;
    os << ic.id << ": F = " << ic.formula << "\n";
    for (const auto& r : reports) {
        os << "  " << to_string(r.id) << ": " << to_string(r.verdict) << "  " << r.detail << "\n";
        if (r.witness) {
            os << "      witness: " << r.witness->kind;
            if (!r.witness->tuple.empty()) {
                os << " at (";
                for (std::size_t i = 0; i < r.witness->tuple.size(); ++i) os << (i ? ", " : "") << num(r.witness->tuple[i]);
                os << ")";
            }
            if (r.witness->t) os << " at t = " << num(*r.witness->t);
            os << ", value " << num(r.witness->value) << "\n";
        }
    }
    return os.str();
}

}  // namespace jungck
