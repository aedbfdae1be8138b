#include "embcalc/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace embcalc {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_ll(const std::string& s, int line, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer for " + what + ", got \"" + s + "\"");
    }
}

struct RawEntry {
    int line;
    std::string key;
    std::string sub; // e.g. the element name of an `action <name> = ...` line
    std::string value;
};

struct RawSections {
    std::map<std::string, std::vector<RawEntry>> sections;

    const std::vector<RawEntry>* find(const std::string& name) const {
        auto it = sections.find(name);
        return it == sections.end() ? nullptr : &it->second;
    }
};

RawSections tokenize(const std::string& text) {
    RawSections raw;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError(lineno, "unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty()) throw ParseError(lineno, "empty section name");
            raw.sections[section];
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError(lineno, "expected `key = value`, got \"" + t + "\"");
        if (section.empty()) throw ParseError(lineno, "key before any [section] header");
        std::string lhs = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        auto lhs_parts = split_ws(lhs);
        if (lhs_parts.empty()) throw ParseError(lineno, "missing key");
        RawEntry e;
        e.line = lineno;
        e.key = lhs_parts[0];
        if (lhs_parts.size() == 2)
            e.sub = lhs_parts[1];
        else if (lhs_parts.size() > 2)
            throw ParseError(lineno, "too many tokens before `=`");
        e.value = value;
        raw.sections[section].push_back(std::move(e));
    }
    return raw;
}

const RawEntry* find_unique(const std::vector<RawEntry>& entries, const std::string& key) {
    const RawEntry* found = nullptr;
    for (const auto& e : entries)
        if (e.key == key) {
            if (found) throw ParseError(e.line, "duplicate key `" + key + "`");
            found = &e;
        }
    return found;
}

bool parse_bool(const RawEntry& e) {
    if (e.value == "true" || e.value == "yes" || e.value == "1") return true;
    if (e.value == "false" || e.value == "no" || e.value == "0") return false;
    throw ParseError(e.line, "expected a boolean for `" + e.key + "`");
}

GroupSpec build_group(const std::vector<RawEntry>& entries) {
    const RawEntry* type = find_unique(entries, "type");
    if (!type) throw ParseError(0, "[group] section needs a `type` key");
    auto words = split_ws(type->value);
    if (words.empty()) throw ParseError(type->line, "empty group type");
    const std::string& kind = words[0];

    auto argn = [&](std::size_t want) {
        if (words.size() != want + 1)
            throw ParseError(type->line, "group type `" + kind + "` takes " +
                                             std::to_string(want) + " argument(s)");
    };

    if (kind == "cyclic") {
        argn(1);
        return GroupSpec::cyclic(static_cast<std::size_t>(
            parse_ll(words[1], type->line, "cyclic order")));
    }
    if (kind == "dihedral") {
        argn(1);
        return GroupSpec::dihedral(static_cast<std::size_t>(
            parse_ll(words[1], type->line, "dihedral parameter")));
    }
    if (kind == "quaternion") {
        argn(0);
        return GroupSpec::quaternion();
    }
    if (kind == "klein") {
        argn(0);
        return GroupSpec::klein_four();
    }
    if (kind == "trivial") {
        argn(0);
        return GroupSpec::trivial();
    }
    if (kind == "free") {
        argn(1);
        std::size_t rank =
            static_cast<std::size_t>(parse_ll(words[1], type->line, "free rank"));
        std::vector<std::string> letters;
        if (const RawEntry* ls = find_unique(entries, "letters")) letters = split_ws(ls->value);
        return GroupSpec::free_group(rank, std::move(letters));
    }
    if (kind == "table") {
        argn(0);
        const RawEntry* order = find_unique(entries, "order");
        const RawEntry* table = find_unique(entries, "table");
        if (!order || !table)
            throw ParseError(type->line, "table groups need `order` and `table` keys");
        std::size_t n =
            static_cast<std::size_t>(parse_ll(order->value, order->line, "group order"));
        std::vector<std::size_t> entries_v;
        for (const std::string& tok : split_ws(table->value))
            entries_v.push_back(
                static_cast<std::size_t>(parse_ll(tok, table->line, "table entry")));
        std::vector<std::string> labels;
        if (const RawEntry* lb = find_unique(entries, "labels")) labels = split_ws(lb->value);
        try {
            return GroupSpec::finite(n, std::move(entries_v), std::move(labels));
        } catch (const std::exception& e) {
            throw ParseError(table->line, e.what());
        }
    }
    throw ParseError(type->line, "unknown group type `" + kind + "`");
}

std::vector<Int> parse_int_vector(const RawEntry& e) {
    std::vector<Int> out;
    for (const std::string& tok : split_ws(e.value))
        out.emplace_back(parse_ll(tok, e.line, "vector entry"));
    return out;
}

IntMatrix parse_matrix_rows(const RawEntry& e, std::size_t expect_cols) {
    std::vector<std::vector<Int>> rows;
    for (const std::string& part : split_on(e.value, ';')) {
        std::string p = trim(part);
        if (p.empty()) continue;
        std::vector<Int> row;
        for (const std::string& tok : split_ws(p))
            row.emplace_back(parse_ll(tok, e.line, "matrix entry"));
        if (expect_cols != 0 && row.size() != expect_cols)
            throw ParseError(e.line, "expected rows of length " + std::to_string(expect_cols));
        rows.push_back(std::move(row));
    }
    std::size_t cols = expect_cols;
    if (cols == 0 && !rows.empty()) cols = rows[0].size();
    try {
        return IntMatrix::from_rows(rows, cols);
    } catch (const std::exception& ex) {
        throw ParseError(e.line, ex.what());
    }
}

ModuleData build_module(const GroupSpec& pi, const std::vector<RawEntry>& entries,
                        JobInput& job) {
    ModuleData m;
    const RawEntry* gens = find_unique(entries, "generators");
    if (!gens) throw ParseError(0, "[module] section needs a `generators` key");
    m.generators = static_cast<std::size_t>(parse_ll(gens->value, gens->line, "generator count"));
    if (const RawEntry* rel = find_unique(entries, "relations"))
        m.relations = parse_matrix_rows(*rel, m.generators);
    else
        m.relations = IntMatrix(0, m.generators);

    std::map<std::string, std::pair<int, IntMatrix>> inverses;
    for (const auto& e : entries) {
        if (e.key == "action" || e.key == "action_inverse") {
            if (e.sub.empty())
                throw ParseError(e.line, "`" + e.key + "` needs an element name: `" + e.key +
                                             " <name> = ...`");
            IntMatrix mat = parse_matrix_rows(e, m.generators);
            if (mat.rows() != m.generators)
                throw ParseError(e.line, "action matrix must be square of generator size");
            if (e.key == "action_inverse") {
                inverses.emplace(e.sub, std::make_pair(e.line, std::move(mat)));
                continue;
            }
            ModuleAction act;
            try {
                act.element = parse_element_token(pi, e.sub);
            } catch (const std::exception& ex) {
                throw ParseError(e.line, ex.what());
            }
            act.matrix = std::move(mat);
            m.actions.push_back(std::move(act));
        }
    }
    for (auto& [name, entry] : inverses) {
        bool attached = false;
        for (ModuleAction& act : m.actions) {
            GroupElement el;
            try {
                el = parse_element_token(pi, name);
            } catch (const std::exception& ex) {
                throw ParseError(entry.first, ex.what());
            }
            if (act.element == el) {
                act.inverse = entry.second;
                attached = true;
            }
        }
        if (!attached)
            throw ParseError(entry.first, "`action_inverse " + name + "` has no matching `action`");
    }

    if (const RawEntry* dual = find_unique(entries, "dual")) job.dual_class = parse_int_vector(*dual);
    if (const RawEntry* w = find_unique(entries, "W")) job.w_values = parse_int_vector(*w);
    if (const RawEntry* lam = find_unique(entries, "lambda_dual_one"))
        job.lambda_dual_one = parse_bool(*lam);
    if (const RawEntry* ck = find_unique(entries, "cokernel_group")) {
        auto toks = split_ws(ck->value);
        if (toks.empty()) throw ParseError(ck->line, "cokernel_group needs `rank [factors...]`");
        AbelianGroup g;
        g.free_rank =
            static_cast<std::size_t>(parse_ll(toks[0], ck->line, "cokernel free rank"));
        for (std::size_t i = 1; i < toks.size(); ++i) {
            Int d(parse_ll(toks[i], ck->line, "cokernel invariant factor"));
            if (d < 2) throw ParseError(ck->line, "invariant factors must be >= 2");
            if (!g.torsion.empty() && d % g.torsion.back() != 0)
                throw ParseError(ck->line, "invariant factors must form a divisibility chain");
            g.torsion.push_back(d);
        }
        job.cokernel_group = g;
    }
    return m;
}

SpanSpec parse_span(const GroupSpec& pi, const RawEntry& e) {
    SpanSpec span;
    for (const std::string& part : split_on(e.value, ',')) {
        std::string p = trim(part);
        if (p.empty()) continue;
        try {
            span.generators.push_back(parse_ring_expression(pi, p));
        } catch (const std::exception& ex) {
            throw ParseError(e.line, ex.what());
        }
    }
    return span;
}

std::string dirname_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string() : path.substr(0, pos);
}

} // namespace

const GroupSpec& JobInput::require_group() const {
    if (!group) throw ParseError(0, "this command needs a [group] section");
    return *group;
}

int JobInput::require_dim(const std::optional<int>& v, const char* name) const {
    if (!v) throw ParseError(0, std::string("this command needs `") + name + "` in [dims]");
    return *v;
}

JobInput parse_input_text(const std::string& text, const std::string& base_dir) {
    RawSections raw = tokenize(text);
    JobInput job;

    static const std::map<std::string, std::vector<std::string>> known = {
        {"group", {"type", "order", "table", "labels", "letters"}},
        {"dims", {"l", "d", "k", "n", "m", "m_max", "boundary_nonempty"}},
        {"module",
         {"generators", "relations", "action", "action_inverse", "dual", "W", "lambda_dual_one",
          "cokernel_group"}},
        {"dax", {"md", "md_eps", "trace", "reduce"}},
        {"options", {"orbit_bound", "drop_identity"}},
    };
    for (const auto& [name, entries] : raw.sections) {
        auto it = known.find(name);
        if (it == known.end()) {
            int line = entries.empty() ? 0 : entries.front().line;
            throw ParseError(line, "unknown section [" + name + "]");
        }
        for (const auto& e : entries)
            if (std::find(it->second.begin(), it->second.end(), e.key) == it->second.end())
                throw ParseError(e.line, "unknown key `" + e.key + "` in [" + name + "]");
    }

    if (const auto* g = raw.find("group")) job.group = build_group(*g);

    if (const auto* dims = raw.find("dims")) {
        auto get_int = [&](const char* key, std::optional<int>& into) {
            if (const RawEntry* e = find_unique(*dims, key))
                into = static_cast<int>(parse_ll(e->value, e->line, key));
        };
        get_int("l", job.l);
        get_int("d", job.d);
        get_int("k", job.k);
        get_int("n", job.n);
        get_int("m", job.m);
        get_int("m_max", job.m_max);
        if (const RawEntry* e = find_unique(*dims, "boundary_nonempty"))
            job.boundary_nonempty = parse_bool(*e);
    }

    if (const auto* mod = raw.find("module")) {
        job.module_data = build_module(job.require_group(), *mod, job);
    }

    if (const auto* dax = raw.find("dax")) {
        const GroupSpec& pi = job.require_group();
        if (const RawEntry* e = find_unique(*dax, "md")) job.md = parse_span(pi, *e);
        if (const RawEntry* e = find_unique(*dax, "md_eps")) job.md_eps = parse_span(pi, *e);
        if (const RawEntry* e = find_unique(*dax, "trace")) {
            std::string path = e->value;
            if (!path.empty() && path[0] != '/' && !base_dir.empty())
                path = base_dir + "/" + path;
            try {
                job.trace = load_trace_file(pi, path);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception& ex) {
                throw ParseError(e->line, ex.what());
            }
        }
        for (const auto& e : *dax)
            if (e.key == "reduce") {
                try {
                    job.reduce_queries.push_back(parse_ring_expression(pi, e.value));
                    job.reduce_sources.push_back(e.value);
                } catch (const std::exception& ex) {
                    throw ParseError(e.line, ex.what());
                }
            }
    }

    if (const auto* opt = raw.find("options")) {
        if (const RawEntry* e = find_unique(*opt, "orbit_bound"))
            job.orbit_bound = static_cast<int>(parse_ll(e->value, e->line, "orbit_bound"));
        if (const RawEntry* e = find_unique(*opt, "drop_identity"))
            job.drop_identity = parse_bool(*e);
    }
    return job;
}

JobInput parse_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_input_text(ss.str(), dirname_of(path));
}

ManifoldInput manifold_input_from_job(const JobInput& job, std::optional<int> orbit_override) {
    ManifoldInput input;
    input.k = job.require_dim(job.k, "k");
    input.d = job.require_dim(job.d, "d");
    input.pi = job.require_group();
    if (!job.module_data) throw ParseError(0, "the dual-setting report needs a [module] section");
    input.pi_dk = *job.module_data;
    input.dual_class = job.dual_class;
    input.md_values = job.md.value_or(SpanSpec{});
    input.md_eps_values = job.md_eps;
    input.w_values = job.w_values;
    input.lambda_dual_attested = job.lambda_dual_one;
    input.orbit_word_bound = orbit_override ? *orbit_override : job.orbit_bound.value_or(4);
    return input;
}

namespace {

// Free-word syllable token: letter name, optionally `^exponent`.
Syllable parse_syllable(const GroupSpec& spec, const std::string& tok) {
    auto caret = tok.find('^');
    std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
    long long exp = 1;
    if (caret != std::string::npos) {
        std::string e = tok.substr(caret + 1);
        try {
            std::size_t pos = 0;
            exp = std::stoll(e, &pos);
            if (pos != e.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed exponent in word token \"" + tok + "\"");
        }
    }
    const auto& letters = spec.letters();
    auto it = std::find(letters.begin(), letters.end(), name);
    if (it == letters.end())
        throw std::invalid_argument("unknown letter \"" + name + "\" in word token");
    return {static_cast<std::size_t>(it - letters.begin()), exp};
}

} // namespace

GroupElement parse_element_token(const GroupSpec& spec, const std::string& token) {
    std::string tok = trim(token);
    if (tok.empty()) throw std::invalid_argument("empty element token");
    if (tok == "1") return spec.identity();
    if (tok[0] == '#') {
        long long idx = 0;
        try {
            std::size_t pos = 0;
            idx = std::stoll(tok.substr(1), &pos);
            if (pos != tok.size() - 1 || idx < 0) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed element index \"" + tok + "\"");
        }
        if (!spec.is_finite())
            throw std::invalid_argument("index tokens only apply to finite groups");
        return spec.element(static_cast<std::size_t>(idx));
    }
    if (spec.is_finite()) {
        for (std::size_t i = 0; i < spec.order(); ++i)
            if (spec.label(i) == tok) return spec.element(i);
        throw std::invalid_argument("unknown element label \"" + tok + "\"");
    }
    std::vector<Syllable> word;
    for (const std::string& part : split_on(tok, '.')) {
        std::string p = trim(part);
        if (p.empty()) throw std::invalid_argument("empty syllable in word \"" + tok + "\"");
        word.push_back(parse_syllable(spec, p));
    }
    return spec.word_element(std::move(word));
}

RingElement parse_ring_expression(const GroupSpec& spec, const std::string& text) {
    RingElement out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == n) throw std::invalid_argument("empty ring expression");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected + or - between terms");
        }
        first = false;
        // Optional integer coefficient.
        Int coeff = 1;
        bool have_coeff = false;
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            coeff = Int(text.substr(start, i - start));
            have_coeff = true;
        }
        skip_ws();
        bool have_elem = false;
        std::string elem_tok;
        if (have_coeff && i < n && text[i] == '*') {
            ++i;
            skip_ws();
            have_elem = true;
        } else if (!have_coeff) {
            have_elem = true;
        }
        if (have_elem) {
            start = i;
            while (i < n) {
                char ch = text[i];
                if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '#' ||
                    ch == '.' || ch == '^') {
                    ++i;
                    continue;
                }
                // A minus sign belongs to the token only as a `^-` exponent.
                if (ch == '-' && i > start && text[i - 1] == '^') {
                    ++i;
                    continue;
                }
                break;
            }
            elem_tok = text.substr(start, i - start);
            if (elem_tok.empty()) throw std::invalid_argument("missing element after `*`");
        }
        GroupElement g = have_elem && elem_tok != "1" ? parse_element_token(spec, elem_tok)
                                                      : spec.identity();
        out.add_term(g, sign > 0 ? coeff : Int(-coeff));
    }
    return out;
}

Trace parse_trace_text(const GroupSpec& spec, const std::string& text) {
    Trace trace;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t[0] != '+' && t[0] != '-')
            throw ParseError(lineno, "trace events start with `+` or `-`");
        int sign = t[0] == '+' ? 1 : -1;
        std::string word = trim(t.substr(1));
        if (word.empty()) throw ParseError(lineno, "trace event has no group word");
        GroupElement loop;
        try {
            if (spec.is_finite()) {
                loop = parse_element_token(spec, word);
            } else {
                // Space- or dot-separated syllables.
                std::vector<Syllable> syl;
                for (const std::string& tok : split_ws(word))
                    for (const std::string& part : split_on(tok, '.')) {
                        std::string p = trim(part);
                        if (!p.empty()) syl.push_back(parse_syllable(spec, p));
                    }
                loop = spec.word_element(std::move(syl));
            }
        } catch (const std::exception& ex) {
            throw ParseError(lineno, ex.what());
        }
        trace.push_back(TraceEvent{sign, std::move(loop)});
    }
    return trace;
}

Trace load_trace_file(const GroupSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open trace file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_trace_text(spec, ss.str());
}

} // namespace embcalc
