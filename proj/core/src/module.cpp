#include "embcalc/module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace embcalc {

namespace {

std::vector<std::vector<Int>> relation_rows(const ModuleData& m) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < m.relations.rows(); ++i) rows.push_back(m.relations.row(i));
    return rows;
}

// Columns of (A - I) and (B*A - I) style differences, as candidate lattice
// members.
bool congruent_to_identity(const IntMatrix& a, const Lattice& rel) {
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = a.at(i, j) - (i == j ? 1 : 0);
        if (!rel.contains(col)) return false;
    }
    return true;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    SmithResult snf = smith_normal_form(m);
    if (snf.d != IntMatrix::identity(m.rows()))
        throw std::invalid_argument(
            "module action: letter matrix is not unimodular and no explicit inverse was given");
    // u * m * v = 1  =>  m^-1 = v * u
    return snf.v * snf.u;
}

} // namespace

AbelianGroup ModuleData::underlying_group() const {
    return quotient_presentation(generators, relations);
}

void validate_module(const GroupSpec& pi, const ModuleData& module) {
    const std::size_t n = module.generators;
    if (module.relations.rows() > 0 && module.relations.cols() != n)
        throw std::invalid_argument("module: relation width must equal generator count");
    Lattice rel(n, module.relations);

    std::set<std::size_t> listed_indices;
    for (const ModuleAction& act : module.actions) {
        pi.validate_element(act.element);
        if (pi.is_finite()) {
            if (pi.is_identity(act.element))
                throw std::invalid_argument("module: identity needs no action matrix");
            listed_indices.insert(act.element.index);
        } else {
            if (act.element.word.size() != 1 || act.element.word[0].second != 1)
                throw std::invalid_argument("module: free-group actions must be single letters");
        }
        if (act.matrix.rows() != n || act.matrix.cols() != n)
            throw std::invalid_argument("module: action matrix must be square of generator size");
        for (std::size_t i = 0; i < module.relations.rows(); ++i) {
            if (!rel.contains(act.matrix.times_col(module.relations.row(i))))
                throw std::invalid_argument(
                    "module: action matrix does not preserve the relation lattice");
        }
        if (pi.is_finite()) {
            // The action of g composed order(g) times must be the identity on
            // the quotient; this is exactly g and g^-1 composing to identity.
            std::size_t ord = pi.element_order(act.element);
            IntMatrix power = IntMatrix::identity(n);
            for (std::size_t i = 0; i < ord; ++i) power = power * act.matrix;
            if (!congruent_to_identity(power, rel))
                throw std::invalid_argument(
                    "module: action matrix power does not match the element order");
        } else if (act.inverse) {
            if (act.inverse->rows() != n || act.inverse->cols() != n)
                throw std::invalid_argument("module: inverse action matrix has wrong size");
            for (std::size_t i = 0; i < module.relations.rows(); ++i)
                if (!rel.contains(act.inverse->times_col(module.relations.row(i))))
                    throw std::invalid_argument(
                        "module: inverse action matrix does not preserve the relation lattice");
            if (!congruent_to_identity(act.matrix * *act.inverse, rel) ||
                !congruent_to_identity(*act.inverse * act.matrix, rel))
                throw std::invalid_argument(
                    "module: letter and inverse actions do not compose to the identity");
        } else {
            (void)unimodular_inverse(act.matrix); // throws when not invertible over Z
        }
    }

    if (pi.is_finite() && !pi.is_trivial()) {
        // The listed elements must generate the group (their closure under
        // the table reaches every element).
        std::set<std::size_t> reach = {0};
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::size_t> cur(reach.begin(), reach.end());
            for (std::size_t a : cur)
                for (std::size_t b : listed_indices) {
                    std::size_t p = pi.multiply(pi.element(a), pi.element(b)).index;
                    if (reach.insert(p).second) grew = true;
                }
        }
        if (reach.size() != pi.order())
            throw std::invalid_argument("module: listed action elements do not generate the group");
    }
    if (!pi.is_finite()) {
        std::set<std::size_t> letters;
        for (const ModuleAction& act : module.actions)
            if (!act.element.word.empty()) letters.insert(act.element.word[0].first);
        if (letters.size() != pi.rank())
            throw std::invalid_argument("module: every free letter needs an action matrix");
    }
}

DualQuotient quotient_by_dual(const GroupSpec& pi, const ModuleData& module,
                              const std::vector<Int>& dual_class, int orbit_word_bound) {
    validate_module(pi, module);
    const std::size_t n = module.generators;
    if (dual_class.size() != n)
        throw std::invalid_argument("quotient_by_dual: dual class has wrong length");
    if (orbit_word_bound < 0)
        throw std::invalid_argument("quotient_by_dual: orbit word bound must be nonnegative");

    std::vector<std::vector<Int>> rows = relation_rows(module);
    std::vector<std::vector<Int>> orbit;
    auto lattice = [&]() { return Lattice(n, IntMatrix::from_rows(rows, n)); };

    DualQuotient out;
    if (pi.is_finite()) {
        rows.push_back(dual_class);
        orbit.push_back(dual_class);
        // Close the orbit under the listed generators; inverses are reached
        // through powers, so the closure is the full group orbit.
        bool grew = true;
        while (grew) {
            grew = false;
            Lattice lat = lattice();
            std::vector<std::vector<Int>> next;
            for (const auto& v : orbit)
                for (const ModuleAction& act : module.actions) {
                    std::vector<Int> u = act.matrix.times_col(v);
                    if (!lat.contains(u)) {
                        rows.push_back(u);
                        next.push_back(u);
                        grew = true;
                        lat = lattice();
                    }
                }
            for (auto& v : next) orbit.push_back(std::move(v));
        }
        out.relative = false;
    } else {
        // Translates by all reduced words of bounded length in the letters
        // and their inverses.
        std::vector<IntMatrix> letter(pi.rank(), IntMatrix::identity(n));
        std::vector<IntMatrix> letter_inv(pi.rank(), IntMatrix::identity(n));
        for (const ModuleAction& act : module.actions) {
            std::size_t idx = act.element.word[0].first;
            letter[idx] = act.matrix;
            letter_inv[idx] = act.inverse ? *act.inverse : unimodular_inverse(act.matrix);
        }
        rows.push_back(dual_class);
        struct Node {
            IntMatrix m;
            int last; // symbol index, -1 at root; symbol 2i = letter i, 2i+1 = inverse
        };
        std::vector<Node> frontier{{IntMatrix::identity(n), -1}};
        for (int depth = 0; depth < orbit_word_bound; ++depth) {
            std::vector<Node> next;
            for (const Node& node : frontier)
                for (std::size_t i = 0; i < pi.rank(); ++i)
                    for (int s = 0; s < 2; ++s) {
                        int sym = static_cast<int>(2 * i) + s;
                        int cancel = s == 0 ? sym + 1 : sym - 1;
                        if (node.last == cancel) continue; // keep words reduced
                        Node nn{node.m * (s == 0 ? letter[i] : letter_inv[i]), sym};
                        rows.push_back(nn.m.times_col(dual_class));
                        next.push_back(std::move(nn));
                    }
            frontier = std::move(next);
        }
        out.relative = pi.rank() > 0;
    }
    out.group = Lattice(n, IntMatrix::from_rows(rows, n)).quotient();
    return out;
}

} // namespace embcalc
