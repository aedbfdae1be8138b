#include "embcalc/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace embcalc {

namespace {

// Symbol rank for shortlex: a < a^-1 < b < b^-1 < ...
std::size_t symbol_rank(std::size_t letter, bool negative) {
    return 2 * letter + (negative ? 1 : 0);
}

} // namespace

std::size_t GroupElement::word_length() const {
    std::size_t n = 0;
    for (const auto& [letter, exp] : word) n += static_cast<std::size_t>(exp < 0 ? -exp : exp);
    return n;
}

bool GroupElement::operator<(const GroupElement& other) const {
    if (index != other.index) return index < other.index;
    const std::size_t la = word_length();
    const std::size_t lb = other.word_length();
    if (la != lb) return la < lb;
    // Equal length: compare symbol streams.
    std::size_t ia = 0, ib = 0;
    long long ca = 0, cb = 0; // symbols consumed within current syllable
    while (ia < word.size() && ib < other.word.size()) {
        const auto& [let_a, exp_a] = word[ia];
        const auto& [let_b, exp_b] = other.word[ib];
        std::size_t ra = symbol_rank(let_a, exp_a < 0);
        std::size_t rb = symbol_rank(let_b, exp_b < 0);
        if (ra != rb) return ra < rb;
        long long rem_a = (exp_a < 0 ? -exp_a : exp_a) - ca;
        long long rem_b = (exp_b < 0 ? -exp_b : exp_b) - cb;
        long long step = std::min(rem_a, rem_b);
        ca += step;
        cb += step;
        if (ca == (exp_a < 0 ? -exp_a : exp_a)) { ++ia; ca = 0; }
        if (cb == (exp_b < 0 ? -exp_b : exp_b)) { ++ib; cb = 0; }
    }
    return false; // equal
}

std::vector<Syllable> reduce_word(const std::vector<Syllable>& raw) {
    std::vector<Syllable> out;
    for (const auto& [letter, exp] : raw) {
        if (exp == 0) continue;
        if (!out.empty() && out.back().first == letter) {
            out.back().second += exp;
            if (out.back().second == 0) out.pop_back();
        } else {
            out.emplace_back(letter, exp);
        }
    }
    return out;
}

GroupSpec GroupSpec::finite(std::size_t order, std::vector<std::size_t> table,
                            std::vector<std::string> labels) {
    if (order == 0) throw std::invalid_argument("finite group: order must be positive");
    if (table.size() != order * order)
        throw std::invalid_argument("finite group: multiplication table must have order^2 entries");
    GroupSpec s;
    s.kind_ = GroupKind::Finite;
    s.order_ = order;
    s.table_ = std::move(table);
    if (labels.empty()) {
        labels.reserve(order);
        for (std::size_t i = 0; i < order; ++i)
            labels.push_back(i == 0 ? "1" : "g" + std::to_string(i));
    }
    if (labels.size() != order)
        throw std::invalid_argument("finite group: label count must equal order");
    s.labels_ = std::move(labels);
    s.check_axioms();
    return s;
}

void GroupSpec::check_axioms() {
    const std::size_t n = order_;
    auto mul = [&](std::size_t i, std::size_t j) { return table_[i * n + j]; };
    for (std::size_t i = 0; i < n * n; ++i)
        if (table_[i] >= n)
            throw std::invalid_argument("finite group: table entry out of range");
    for (std::size_t i = 0; i < n; ++i)
        if (mul(0, i) != i || mul(i, 0) != i)
            throw std::invalid_argument("finite group: index 0 is not a two-sided identity");
    inverse_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t inv = n;
        for (std::size_t j = 0; j < n; ++j)
            if (mul(i, j) == 0 && mul(j, i) == 0) {
                inv = j;
                break;
            }
        if (inv == n)
            throw std::invalid_argument("finite group: element \"" + labels_[i] + "\" has no inverse");
        inverse_[i] = inv;
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    throw std::invalid_argument("finite group: table is not associative at (" +
                                                labels_[g] + ", " + labels_[h] + ", " + labels_[k] +
                                                ")");
}

GroupSpec GroupSpec::trivial() { return cyclic(1); }

GroupSpec GroupSpec::cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic group: order must be positive");
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t" + std::to_string(i)));
    return finite(n, std::move(table), std::move(labels));
}

GroupSpec GroupSpec::dihedral(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dihedral group: parameter must be positive");
    const std::size_t order = 2 * n;
    // Element a + n*b stands for r^a s^b with s r = r^-1 s.
    auto idx = [&](std::size_t a, std::size_t b) { return a + n * b; };
    std::vector<std::size_t> table(order * order);
    for (std::size_t a1 = 0; a1 < n; ++a1)
        for (std::size_t b1 = 0; b1 < 2; ++b1)
            for (std::size_t a2 = 0; a2 < n; ++a2)
                for (std::size_t b2 = 0; b2 < 2; ++b2) {
                    std::size_t a = b1 == 0 ? (a1 + a2) % n : (a1 + n - a2 % n) % n;
                    std::size_t b = (b1 + b2) % 2;
                    table[idx(a1, b1) * order + idx(a2, b2)] = idx(a, b);
                }
    std::vector<std::string> labels(order);
    for (std::size_t a = 0; a < n; ++a) {
        std::string ra = a == 0 ? "" : (a == 1 ? "r" : "r" + std::to_string(a));
        labels[idx(a, 0)] = a == 0 ? "1" : ra;
        labels[idx(a, 1)] = ra + "s";
    }
    return finite(order, std::move(table), std::move(labels));
}

GroupSpec GroupSpec::quaternion() {
    // Elements b + 4s stand for (-1)^s * basis[b] with basis = (1, i, j, k).
    auto bmul = [](std::size_t x, std::size_t y, bool& neg) -> std::size_t {
        neg = false;
        if (x == 0) return y;
        if (y == 0) return x;
        if (x == y) { neg = true; return 0; }
        // i*j=k, j*k=i, k*i=j are the cyclic products.
        static const std::size_t cyc[3] = {1, 2, 3};
        std::size_t xi = x - 1, yi = y - 1;
        if ((xi + 1) % 3 == yi) return cyc[(yi + 1) % 3];
        neg = true;
        return cyc[(xi + 1) % 3];
    };
    std::vector<std::size_t> table(64);
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) {
            bool neg = false;
            std::size_t b = bmul(x % 4, y % 4, neg);
            std::size_t s = (x / 4 + y / 4 + (neg ? 1 : 0)) % 2;
            table[x * 8 + y] = b + 4 * s;
        }
    return finite(8, std::move(table), {"1", "i", "j", "k", "n", "ni", "nj", "nk"});
}

GroupSpec GroupSpec::klein_four() { return elementary_abelian_2(2); }

GroupSpec GroupSpec::elementary_abelian_2(std::size_t k) {
    const std::size_t n = std::size_t(1) << k;
    std::vector<std::size_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = i ^ j;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            labels.push_back("1");
            continue;
        }
        std::string s;
        for (std::size_t b = 0; b < k; ++b)
            if (i & (std::size_t(1) << b)) s += "x" + std::to_string(b + 1);
        labels.push_back(s);
    }
    return finite(n, std::move(table), std::move(labels));
}

GroupSpec GroupSpec::free_group(std::size_t rank, std::vector<std::string> letters) {
    GroupSpec s;
    s.kind_ = GroupKind::Free;
    s.rank_ = rank;
    if (letters.empty()) {
        for (std::size_t i = 0; i < rank; ++i) {
            if (i < 26)
                letters.push_back(std::string(1, static_cast<char>('a' + i)));
            else
                letters.push_back("x" + std::to_string(i + 1));
        }
    }
    if (letters.size() != rank)
        throw std::invalid_argument("free group: letter count must equal rank");
    s.letters_ = std::move(letters);
    return s;
}

bool GroupSpec::is_trivial() const {
    return is_finite() ? order_ == 1 : rank_ == 0;
}

std::size_t GroupSpec::order() const {
    if (!is_finite()) throw std::logic_error("order(): group is not finite");
    return order_;
}

std::size_t GroupSpec::rank() const {
    if (is_finite()) throw std::logic_error("rank(): group is not free");
    return rank_;
}

GroupElement GroupSpec::identity() const { return GroupElement{}; }

bool GroupSpec::is_identity(const GroupElement& g) const {
    return is_finite() ? g.index == 0 : g.word.empty();
}

GroupElement GroupSpec::element(std::size_t index) const {
    if (!is_finite()) throw std::logic_error("element(): group is not finite");
    if (index >= order_) throw std::invalid_argument("element index out of range");
    return GroupElement{index, {}};
}

GroupElement GroupSpec::word_element(std::vector<Syllable> word) const {
    if (is_finite()) throw std::logic_error("word_element(): group is not free");
    for (const auto& [letter, exp] : word) {
        (void)exp;
        if (letter >= rank_) throw std::invalid_argument("word letter out of range");
    }
    return GroupElement{0, reduce_word(word)};
}

std::vector<GroupElement> GroupSpec::elements() const {
    if (!is_finite()) throw std::logic_error("elements(): group is not finite");
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back(GroupElement{i, {}});
    return out;
}

std::string GroupSpec::format(const GroupElement& g) const {
    validate_element(g);
    if (is_finite()) return labels_[g.index];
    if (g.word.empty()) return "1";
    std::string out;
    for (const auto& [letter, exp] : g.word) {
        if (!out.empty()) out += ".";
        out += letters_[letter];
        if (exp != 1) out += "^" + std::to_string(exp);
    }
    return out;
}

std::size_t GroupSpec::element_order(const GroupElement& g) const {
    if (!is_finite()) throw std::logic_error("element_order(): group is not finite");
    validate_element(g);
    std::size_t cur = g.index;
    std::size_t ord = 1;
    while (cur != 0) {
        cur = table_[cur * order_ + g.index];
        ++ord;
    }
    return ord;
}

void GroupSpec::validate_element(const GroupElement& g) const {
    if (is_finite()) {
        if (!g.word.empty())
            throw std::invalid_argument("element carries a word but the group is finite");
        if (g.index >= order_) throw std::invalid_argument("element index out of range");
        return;
    }
    if (g.index != 0)
        throw std::invalid_argument("free-group element carries a table index");
    for (std::size_t i = 0; i < g.word.size(); ++i) {
        if (g.word[i].first >= rank_) throw std::invalid_argument("word letter out of range");
        if (g.word[i].second == 0)
            throw std::invalid_argument("word has a zero exponent (not reduced)");
        if (i + 1 < g.word.size() && g.word[i].first == g.word[i + 1].first)
            throw std::invalid_argument("word has adjacent equal letters (not reduced)");
    }
}

GroupElement GroupSpec::multiply(const GroupElement& g, const GroupElement& h) const {
    validate_element(g);
    validate_element(h);
    if (is_finite()) return GroupElement{table_[g.index * order_ + h.index], {}};
    std::vector<Syllable> cat = g.word;
    cat.insert(cat.end(), h.word.begin(), h.word.end());
    return GroupElement{0, reduce_word(cat)};
}

GroupElement GroupSpec::invert(const GroupElement& g) const {
    validate_element(g);
    if (is_finite()) return GroupElement{inverse_[g.index], {}};
    std::vector<Syllable> inv;
    inv.reserve(g.word.size());
    for (auto it = g.word.rbegin(); it != g.word.rend(); ++it)
        inv.emplace_back(it->first, -it->second);
    return GroupElement{0, std::move(inv)};
}

GroupElement group_multiply(const GroupSpec& spec, const GroupElement& g, const GroupElement& h) {
    return spec.multiply(g, h);
}

GroupElement group_invert(const GroupSpec& spec, const GroupElement& g) {
    return spec.invert(g);
}

bool is_self_inverse(const GroupSpec& spec, const GroupElement& g) {
    return spec.invert(g) == g;
}

} // namespace embcalc
