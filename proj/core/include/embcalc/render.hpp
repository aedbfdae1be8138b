#pragma once

#include "embcalc/assembler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace embcalc {

enum class Format { Text, Json };

/// Result of one `reduce = <expr>` query against a quotient.
struct ReduceResult {
    std::string source;
    std::string canonical;
    bool zero = false;
    std::optional<Int> order; // nullopt = infinite
};

// All renderings are deterministic: identical inputs give identical bytes.

std::string render_dax(Format fmt, const GroupSpec& spec, const ParityContext& ctx,
                       bool drop_identity, const Trace& trace, const DaxClass& value);

std::string render_quotient(Format fmt, const GroupSpec& spec, const ParityContext& ctx,
                            bool drop_identity, const GroupDesc& group,
                            const std::vector<ReduceResult>& reduces);

std::string render_stiefel(Format fmt, int k, int d, std::optional<int> n_query);

std::string render_bo_table(Format fmt, int m_min, int m_max);

std::string render_report(Format fmt, const std::string& command, const ReportResult& result);

std::string render_catalogue(Format fmt, const CatalogueReport& report);

} // namespace embcalc
