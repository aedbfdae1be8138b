#include "embcalc/descriptor.hpp"
#include "embcalc/render.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace embcalc;

constexpr int kExitOk = 0;
constexpr int kExitDiagnosis = 2;
constexpr int kExitBadInput = 3;

struct CommonFlags {
    std::string in_path;
    std::string format = "text";
    bool drop_identity_flag = false;
    std::optional<int> orbit_bound;
};

Format parse_format(const std::string& f) {
    if (f == "text") return Format::Text;
    if (f == "json") return Format::Json;
    throw ParseError(0, "unknown format `" + f + "` (use text or json)");
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool needs_input) {
    auto* in = cmd->add_option("--in", flags.in_path, "input descriptor file");
    if (needs_input) in->required();
    cmd->add_option("--format", flags.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--drop-identity", flags.drop_identity_flag,
                  "work in the ring over nonidentity elements");
    cmd->add_option("--orbit-bound", flags.orbit_bound,
                    "word-length bound for dual translates over free groups");
}

bool effective_drop(const CommonFlags& flags, const JobInput& job) {
    if (flags.drop_identity_flag) return true;
    return job.drop_identity.value_or(false);
}

int emit_report(const CommonFlags& flags, const std::string& command, const ReportResult& result) {
    std::cout << render_report(parse_format(flags.format), command, result);
    return std::holds_alternative<Diagnosis>(result) ? kExitDiagnosis : kExitOk;
}

int run_dax(const CommonFlags& flags) {
    JobInput job = parse_input(flags.in_path);
    const GroupSpec& pi = job.require_group();
    ParityContext ctx(job.require_dim(job.l, "l"), job.require_dim(job.d, "d"));
    if (!job.trace) throw ParseError(0, "the dax command needs a trace file in [dax]");
    bool drop = effective_drop(flags, job);
    DaxClass cls = dax_of_trace(ctx, pi, *job.trace, drop);
    std::cout << render_dax(parse_format(flags.format), pi, ctx, drop, *job.trace, cls);
    return kExitOk;
}

int run_quotient(const CommonFlags& flags) {
    JobInput job = parse_input(flags.in_path);
    const GroupSpec& pi = job.require_group();
    ParityContext ctx(job.require_dim(job.l, "l"), job.require_dim(job.d, "d"));
    bool drop = effective_drop(flags, job);
    SpanSpec md = job.md.value_or(SpanSpec{});

    auto quotient = md_image_quotient(ctx, pi, md, drop);
    GroupDesc desc;
    if (std::holds_alternative<AbelianGroup>(quotient)) {
        desc = std::get<AbelianGroup>(quotient);
    } else {
        const SpanReducer& red = std::get<SpanReducer>(quotient);
        LazyQuotient lazy;
        lazy.ambient = std::string(drop ? "Z[pi - 1]" : "Z[pi]") +
                       (ctx.relations_trivial()
                            ? " (no involution relations)"
                            : (ctx.involution_sign() > 0 ? " mod (g - g^-1)" : " mod (g + g^-1)"));
        for (const RingElement& g : red.generators().generators)
            lazy.generators.push_back(format_ring_element(pi, g));
        lazy.relative = true;
        desc = lazy;
    }

    SpanReducer reducer(ctx, pi, md, drop);
    std::vector<ReduceResult> reduces;
    for (std::size_t i = 0; i < job.reduce_queries.size(); ++i) {
        ReduceResult r;
        r.source = job.reduce_sources[i];
        r.canonical = format_ring_element(pi, canonical_form(ctx, pi, job.reduce_queries[i], drop));
        r.zero = reducer.is_zero(job.reduce_queries[i]);
        r.order = reducer.class_order(job.reduce_queries[i]);
        reduces.push_back(std::move(r));
    }
    std::cout << render_quotient(parse_format(flags.format), pi, ctx, drop, desc, reduces);
    return kExitOk;
}

int run_stiefel(const CommonFlags& flags) {
    JobInput job = parse_input(flags.in_path);
    int k = job.require_dim(job.k, "k");
    int d = job.require_dim(job.d, "d");
    std::cout << render_stiefel(parse_format(flags.format), k, d, job.n);
    return kExitOk;
}

int run_bo_table(const CommonFlags& flags) {
    JobInput job = parse_input(flags.in_path);
    int lo = 1, hi = 0;
    if (job.m && !job.m_max) {
        lo = hi = *job.m;
    } else if (job.m_max) {
        hi = *job.m_max;
    } else {
        throw ParseError(0, "the bo-table command needs `m` or `m_max` in [dims]");
    }
    if (lo < 1 || hi < lo) throw ParseError(0, "bo-table range is empty");
    std::cout << render_bo_table(parse_format(flags.format), lo, hi);
    return kExitOk;
}

int run_theorem_c(const CommonFlags& flags) {
    JobInput job = parse_input(flags.in_path);
    const GroupSpec& pi = job.require_group();
    int l = job.require_dim(job.l, "l");
    int d = job.require_dim(job.d, "d");
    ReportResult result =
        theorem_c_report(l, d, pi, job.md.value_or(SpanSpec{}), job.cokernel_group);
    return emit_report(flags, "theorem-c", result);
}

int run_theorem_d(const CommonFlags& flags) {
    JobInput job = parse_input(flags.in_path);
    ManifoldInput input = manifold_input_from_job(job, flags.orbit_bound);
    return emit_report(flags, "theorem-d", theorem_d_report(input));
}

int run_augmented(const CommonFlags& flags) {
    JobInput job = parse_input(flags.in_path);
    const GroupSpec& pi = job.require_group();
    int l = job.require_dim(job.l, "l");
    int d = job.require_dim(job.d, "d");
    ReportResult result = augmented_report(l, d, pi, job.md.value_or(SpanSpec{}), job.md_eps);
    return emit_report(flags, "augmented", result);
}

int run_catalogue(const CommonFlags& flags) {
    CatalogueReport rep = catalogue_check();
    std::cout << render_catalogue(parse_format(flags.format), rep);
    return rep.all_pass() ? kExitOk : kExitDiagnosis;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"calc: exact algebra for spaces of embedded disks"};
    app.require_subcommand(1);

    CommonFlags flags;
    int (*runner)(const CommonFlags&) = nullptr;

    auto wire = [&](CLI::App* cmd, int (*fn)(const CommonFlags&), bool needs_input) {
        add_common(cmd, flags, needs_input);
        cmd->callback([&runner, fn] { runner = fn; });
    };

    wire(app.add_subcommand("dax", "double-point invariant of a trace file"), run_dax, true);
    wire(app.add_subcommand("quotient", "group-ring quotient by relations and listed images"),
         run_quotient, true);
    wire(app.add_subcommand("stiefel", "first interesting frame-bundle homotopy group"),
         run_stiefel, true);
    wire(app.add_subcommand("bo-table", "kernel/cokernel table for orthogonal classifying spaces"),
         run_bo_table, true);
    wire(app.add_subcommand("theorem-c", "extension report for neat disks (no dual)"),
         run_theorem_c, true);
    wire(app.add_subcommand("theorem-d", "extension report for neat disks with a framed dual"),
         run_theorem_d, true);
    wire(app.add_subcommand("augmented", "extension report for disks with a normal field"),
         run_augmented, true);
    wire(app.add_subcommand("catalogue", "run the worked low-dimensional cases"), run_catalogue,
         false);

    CLI11_PARSE(app, argc, argv);

    try {
        return runner(flags);
    } catch (const embcalc::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
