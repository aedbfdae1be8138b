#pragma once

#include "embcalc/assembler.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace embcalc {

/// Input-file error with the offending line number (0 = no position).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Everything a descriptor file can supply. Section and key grammar is
/// documented in docs/input-format.md and pinned by golden files.
struct JobInput {
    std::optional<GroupSpec> group;
    std::optional<int> l, d, k, n, m, m_max;
    bool boundary_nonempty = false;
    std::optional<ModuleData> module_data;
    std::vector<Int> dual_class;
    std::optional<std::vector<Int>> w_values;
    bool lambda_dual_one = false;
    std::optional<AbelianGroup> cokernel_group;
    std::optional<SpanSpec> md, md_eps;
    std::optional<Trace> trace;
    std::vector<std::string> reduce_sources; // raw expressions, for reporting
    std::vector<RingElement> reduce_queries;
    std::optional<int> orbit_bound;
    std::optional<bool> drop_identity;

    const GroupSpec& require_group() const;
    int require_dim(const std::optional<int>& v, const char* name) const;
};

JobInput parse_input(const std::string& path);
JobInput parse_input_text(const std::string& text, const std::string& base_dir = "");

/// Assemble the dual-setting input from a parsed descriptor; `orbit_override`
/// takes precedence over the file's [options] value.
ManifoldInput manifold_input_from_job(const JobInput& job,
                                      std::optional<int> orbit_override = std::nullopt);

/// One element token: a finite-group label, `#index`, `1` for the identity,
/// or a free word like `a.b^-1.a^2`.
GroupElement parse_element_token(const GroupSpec& spec, const std::string& token);

/// Integer formal sum, e.g. `2*t - t3 + 1` or `a.b^-1 - 3*b`.
RingElement parse_ring_expression(const GroupSpec& spec, const std::string& text);

/// Trace files: one `+ <word>` or `- <word>` per line; `#` comments allowed.
/// Free words may separate syllables with spaces or dots.
Trace parse_trace_text(const GroupSpec& spec, const std::string& text);
Trace load_trace_file(const GroupSpec& spec, const std::string& path);

} // namespace embcalc
