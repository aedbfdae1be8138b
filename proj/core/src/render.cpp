#include "embcalc/render.hpp"

#include "embcalc/frames.hpp"
#include "embcalc/spheres.hpp"

#include <json.hpp>

#include <sstream>

namespace embcalc {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json group_json(const AbelianGroup& g) {
    json out;
    out["kind"] = "group";
    out["free_rank"] = g.free_rank;
    json tors = json::array();
    for (const Int& d : g.torsion) tors.push_back(d.str());
    out["torsion"] = tors;
    out["pretty"] = g.str();
    return out;
}

json group_desc_json(const GroupDesc& g) {
    if (std::holds_alternative<AbelianGroup>(g)) return group_json(std::get<AbelianGroup>(g));
    if (std::holds_alternative<SymbolicGroup>(g)) {
        json out;
        out["kind"] = "symbolic";
        out["name"] = std::get<SymbolicGroup>(g).name;
        return out;
    }
    const LazyQuotient& lazy = std::get<LazyQuotient>(g);
    json out;
    out["kind"] = "lazy";
    out["ambient"] = lazy.ambient;
    out["generators"] = lazy.generators;
    out["relative"] = lazy.relative;
    out["pretty"] = group_desc_str(g);
    return out;
}

json checks_json(const std::vector<HypothesisCheck>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(e);
    }
    return arr;
}

void checks_text(std::ostringstream& out, const std::vector<HypothesisCheck>& checks) {
    for (const auto& c : checks) {
        out << "check[" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << " -- " << c.detail;
        out << "\n";
    }
}

std::string sequence_str(SequenceKind k) {
    switch (k) {
        case SequenceKind::GroupExtension: return "short exact sequence of groups";
        case SequenceKind::SetExtension: return "short exact sequence of sets";
        case SequenceKind::SetSequence: return "exact sequence of sets";
    }
    return "?";
}

std::string cokernel_str(const CokernelPart& c) {
    std::string out;
    if (c.coefficient)
        out += coefficient_str(*c.coefficient);
    else if (!c.coefficient_note.empty())
        out += "[" + c.coefficient_note + "]";
    if (c.group) {
        if (!out.empty()) out += " ⊕ ";
        out += group_desc_str(*c.group);
        if (c.group_relative)
            out += " [relative: dual translates up to word length " +
                   std::to_string(c.orbit_bound) + "]";
    }
    return out.empty() ? "0" : out;
}

std::string ctx_relations_str(const ParityContext& ctx) {
    if (ctx.relations_trivial()) return "none (l = 1)";
    return ctx.involution_sign() > 0 ? "g - g^-1" : "g + g^-1";
}

} // namespace

std::string render_dax(Format fmt, const GroupSpec& spec, const ParityContext& ctx,
                       bool drop_identity, const Trace& trace, const DaxClass& value) {
    if (fmt == Format::Json) {
        json out;
        out["command"] = "dax";
        out["l"] = ctx.disk_dim;
        out["d"] = ctx.ambient_dim;
        out["relations"] = ctx_relations_str(ctx);
        out["drop_identity"] = drop_identity;
        json events = json::array();
        for (const TraceEvent& ev : trace)
            events.push_back((ev.sign > 0 ? "+ " : "- ") + spec.format(ev.loop));
        out["events"] = events;
        out["value"] = format_ring_element(spec, value.value);
        out["zero"] = value.value.is_zero();
        return dump(out);
    }
    std::ostringstream out;
    out << "command: dax\n";
    out << "context: l = " << ctx.disk_dim << ", d = " << ctx.ambient_dim
        << ", relations: " << ctx_relations_str(ctx) << "\n";
    out << "events: " << trace.size() << "\n";
    for (const TraceEvent& ev : trace)
        out << "  " << (ev.sign > 0 ? "+" : "-") << " " << spec.format(ev.loop) << "\n";
    out << "identity dropped: " << (drop_identity ? "yes" : "no") << "\n";
    out << "class: " << format_ring_element(spec, value.value) << "\n";
    return out.str();
}

std::string render_quotient(Format fmt, const GroupSpec& spec, const ParityContext& ctx,
                            bool drop_identity, const GroupDesc& group,
                            const std::vector<ReduceResult>& reduces) {
    (void)spec;
    if (fmt == Format::Json) {
        json out;
        out["command"] = "quotient";
        out["l"] = ctx.disk_dim;
        out["d"] = ctx.ambient_dim;
        out["relations"] = ctx_relations_str(ctx);
        out["drop_identity"] = drop_identity;
        out["group"] = group_desc_json(group);
        json rs = json::array();
        for (const auto& r : reduces) {
            json e;
            e["query"] = r.source;
            e["canonical"] = r.canonical;
            e["zero"] = r.zero;
            e["order"] = r.order ? json(r.order->str()) : json("infinite");
            rs.push_back(e);
        }
        out["reduce"] = rs;
        return dump(out);
    }
    std::ostringstream out;
    out << "command: quotient\n";
    out << "context: l = " << ctx.disk_dim << ", d = " << ctx.ambient_dim
        << ", relations: " << ctx_relations_str(ctx) << "\n";
    out << "identity dropped: " << (drop_identity ? "yes" : "no") << "\n";
    out << "group: " << group_desc_str(group) << "\n";
    for (const auto& r : reduces) {
        out << "reduce " << r.source << ": canonical " << r.canonical << ", zero "
            << (r.zero ? "yes" : "no") << ", class order "
            << (r.order ? r.order->str() : "infinite") << "\n";
    }
    return out.str();
}

std::string render_stiefel(Format fmt, int k, int d, std::optional<int> n_query) {
    AbelianGroup first = stiefel_first(k, d);
    std::optional<AbelianGroup> at;
    if (n_query) at = stiefel_group_at(k, d, *n_query);
    if (fmt == Format::Json) {
        json out;
        out["command"] = "stiefel";
        out["k"] = k;
        out["d"] = d;
        out["first_interesting_degree"] = d - k;
        out["first_interesting_group"] = group_json(first);
        out["vanishing_range"] = "pi_n = 0 for n <= " + std::to_string(d - k - 1);
        out["generator"] = "fiber inclusion of the (d-k)-sphere";
        if (n_query) {
            out["query_degree"] = *n_query;
            out["query_group"] = at ? json(at->str()) : json("unknown");
        }
        return dump(out);
    }
    std::ostringstream out;
    out << "command: stiefel\n";
    out << "frames: " << k << " in dimension " << d << "\n";
    out << "pi_n = 0 for n <= " << d - k - 1 << "\n";
    out << "pi_" << d - k << " = " << first.str() << ", generated by the fiber inclusion\n";
    if (n_query)
        out << "pi_" << *n_query << " = " << (at ? at->str() : std::string("unknown")) << "\n";
    return out.str();
}

std::string render_bo_table(Format fmt, int m_min, int m_max) {
    if (fmt == Format::Json) {
        json rows = json::array();
        for (int m = m_min; m <= m_max; ++m) {
            ExtensionShape s = bo_extension(m);
            json e;
            e["m"] = m;
            e["kernel"] = coefficient_str(s.kernel);
            e["cokernel"] = s.cokernel.str();
            e["middle"] = s.middle ? json(s.middle->str()) : json("extension of the two");
            rows.push_back(e);
        }
        json out;
        out["command"] = "bo-table";
        out["rows"] = rows;
        return dump(out);
    }
    std::ostringstream out;
    out << "command: bo-table\n";
    out << "m | kernel | cokernel | middle pi_(m-1) of BO_(m-1)\n";
    for (int m = m_min; m <= m_max; ++m) {
        ExtensionShape s = bo_extension(m);
        out << m << " | " << coefficient_str(s.kernel) << " | " << s.cokernel.str() << " | "
            << (s.middle ? s.middle->str() : std::string("extension of the two")) << "\n";
    }
    return out.str();
}

std::string render_report(Format fmt, const std::string& command, const ReportResult& result) {
    if (fmt == Format::Json) {
        json out;
        out["command"] = command;
        if (std::holds_alternative<Diagnosis>(result)) {
            const Diagnosis& diag = std::get<Diagnosis>(result);
            out["status"] = "diagnosis";
            out["headline"] = diag.headline;
            out["checks"] = checks_json(diag.checks);
            out["message"] = diag.message;
            return dump(out);
        }
        const ExtensionReport& rep = std::get<ExtensionReport>(result);
        out["status"] = "ok";
        out["headline"] = rep.headline;
        out["checks"] = checks_json(rep.checks);
        out["sequence"] = sequence_str(rep.sequence);
        if (rep.kernel) out["kernel"] = group_desc_json(*rep.kernel);
        out["middle"] = rep.middle;
        json cok;
        if (rep.cokernel.coefficient)
            cok["coefficient"] = coefficient_str(*rep.cokernel.coefficient);
        if (!rep.cokernel.coefficient_note.empty())
            cok["coefficient_note"] = rep.cokernel.coefficient_note;
        if (rep.cokernel.group) {
            cok["group"] = group_desc_json(*rep.cokernel.group);
            cok["relative"] = rep.cokernel.group_relative;
            if (rep.cokernel.group_relative) cok["orbit_bound"] = rep.cokernel.orbit_bound;
        }
        cok["pretty"] = cokernel_str(rep.cokernel);
        out["cokernel"] = cok;
        out["map_in"] = rep.map_in;
        out["map_out"] = rep.map_out;
        out["notes"] = rep.notes;
        out["pi0_loop_group_structure"] = rep.pi0_loop_group_structure;
        return dump(out);
    }
    std::ostringstream out;
    out << "command: " << command << "\n";
    if (std::holds_alternative<Diagnosis>(result)) {
        const Diagnosis& diag = std::get<Diagnosis>(result);
        out << "status: diagnosis\n";
        out << "headline: " << diag.headline << "\n";
        checks_text(out, diag.checks);
        out << diag.message << "\n";
        return out.str();
    }
    const ExtensionReport& rep = std::get<ExtensionReport>(result);
    out << "status: ok\n";
    out << "headline: " << rep.headline << "\n";
    checks_text(out, rep.checks);
    out << "sequence: " << sequence_str(rep.sequence) << "\n";
    if (rep.kernel) out << "kernel: " << group_desc_str(*rep.kernel) << "\n";
    out << "middle: " << rep.middle << "\n";
    out << "cokernel: " << cokernel_str(rep.cokernel) << "\n";
    out << "map in: " << rep.map_in << "\n";
    out << "map out: " << rep.map_out << "\n";
    if (rep.pi0_loop_group_structure)
        out << "flag: degree-zero classes carry the loop-space group structure\n";
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    return out.str();
}

std::string render_catalogue(Format fmt, const CatalogueReport& report) {
    if (fmt == Format::Json) {
        json rows = json::array();
        for (const auto& c : report.cases) {
            json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            e["expected"] = c.expected;
            e["computed"] = c.computed;
            rows.push_back(e);
        }
        json out;
        out["command"] = "catalogue";
        out["cases"] = rows;
        out["all_pass"] = report.all_pass();
        return dump(out);
    }
    std::ostringstream out;
    out << "command: catalogue\n";
    for (const auto& c : report.cases) {
        out << (c.pass ? "[pass] " : "[FAIL] ") << c.name << "\n";
        out << "    expected: " << c.expected << "\n";
        out << "    computed: " << c.computed << "\n";
    }
    out << (report.all_pass() ? "catalogue: all cases pass\n" : "catalogue: FAILURES\n");
    return out.str();
}

} // namespace embcalc
