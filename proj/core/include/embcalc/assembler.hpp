#pragma once

#include "embcalc/dax.hpp"
#include "embcalc/frames.hpp"
#include "embcalc/module.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace embcalc {

struct HypothesisCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Description of a quotient that is only decided lazily (infinite
/// fundamental group): the ambient quotient plus the listed generators whose
/// integer span is divided out.
struct LazyQuotient {
    std::string ambient;
    std::vector<std::string> generators;
    bool relative = false;
};

struct SymbolicGroup {
    std::string name;
};

using GroupDesc = std::variant<AbelianGroup, LazyQuotient, SymbolicGroup>;

std::string group_desc_str(const GroupDesc& g);

enum class SequenceKind { GroupExtension, SetExtension, SetSequence };

struct CokernelPart {
    std::optional<CoefficientGroup> coefficient;
    std::string coefficient_note;
    std::optional<GroupDesc> group;
    bool group_relative = false;
    int orbit_bound = 0;
};

/// A validated short-exact-sequence report. Constructed only when every
/// hypothesis check passed; failed inputs produce a Diagnosis instead.
struct ExtensionReport {
    std::string headline;
    std::vector<HypothesisCheck> checks;
    SequenceKind sequence = SequenceKind::GroupExtension;
    std::optional<GroupDesc> kernel;
    std::string middle;
    CokernelPart cokernel;
    std::string map_in;
    std::string map_out;
    std::vector<std::string> notes;
    bool pi0_loop_group_structure = false;
};

struct Diagnosis {
    std::string headline;
    std::vector<HypothesisCheck> checks;
    std::string message;
};

using ReportResult = std::variant<ExtensionReport, Diagnosis>;

/// Everything the dual-setting report consumes, as supplied by the user:
/// dimensions, the fundamental group, the middle-dimensional homotopy module
/// with its action, the dual class, and the double-point image data.
struct ManifoldInput {
    int k = 0;
    int d = 0;
    GroupSpec pi = GroupSpec::trivial();
    ModuleData pi_dk;
    std::vector<Int> dual_class;
    SpanSpec md_values;
    std::optional<SpanSpec> md_eps_values;
    std::optional<std::vector<Int>> w_values;
    bool lambda_dual_attested = false;
    int orbit_word_bound = 4;
};

struct TransferReport {
    std::vector<HypothesisCheck> checks;
    bool pass = false;
    std::optional<SpanSpec> effective_md_eps;
    bool derived = false;
    std::vector<std::string> notes;
};

/// Reuse of the double-point image data across the handle attachment, and
/// consistency of an explicitly supplied augmented image with the derived one
/// in the parity range where the unit-adjunction formula applies.
TransferReport md_transfer_check(const ManifoldInput& input);

/// Extension report for the first interesting homotopy group of the space of
/// neatly embedded disks with boundary condition in a manifold with a framed
/// geometric dual.
ReportResult theorem_d_report(const ManifoldInput& input);

/// Extension report for the space of neat disks with no dual assumed:
/// kernel a quotient of the group ring over nonidentity elements, cokernel
/// the user's homotopy group of the ambient manifold.
ReportResult theorem_c_report(int l, int d, const GroupSpec& pi, const SpanSpec& md_values,
                              std::optional<AbelianGroup> cokernel_data = std::nullopt);

/// Extension report for augmented disks (disks with a normal vector field),
/// including the augmentation-count clause.
ReportResult augmented_report(int l, int d, const GroupSpec& pi, const SpanSpec& md_values,
                              std::optional<SpanSpec> md_eps_values = std::nullopt);

struct CatalogueCase {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string computed;
};

struct CatalogueReport {
    std::vector<CatalogueCase> cases;
    bool all_pass() const;
};

/// Runs the worked low-dimensional cases with their documented inputs and
/// checks the published answers.
CatalogueReport catalogue_check();

} // namespace embcalc
