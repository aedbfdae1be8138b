#include "embcalc/spheres.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace embcalc {

const char* embedded_sphere_table();     // generated from core/data/sphere_table.txt
const char* embedded_orthogonal_table(); // generated from core/data/orthogonal_table.txt

namespace {

std::string rtrim(const std::string& s) {
    std::size_t end = s.size();
    while (end > 0 && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) --end;
    return s.substr(0, end);
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex16(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

} // namespace

HomotopyTable HomotopyTable::parse(const std::string& text, const std::string& name) {
    HomotopyTable t;
    std::istringstream in(text);
    std::string line;
    std::string payload;
    std::string declared_checksum;
    std::vector<std::string> data_lines;
    while (std::getline(in, line)) {
        line = rtrim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string key, algo, value;
            hs >> key;
            if (key == "version") {
                hs >> t.version_;
            } else if (key == "checksum") {
                hs >> algo >> value;
                if (algo != "fnv1a64")
                    throw std::runtime_error(name + ": unsupported checksum algorithm " + algo);
                declared_checksum = value;
            }
            continue;
        }
        data_lines.push_back(line);
    }
    for (std::size_t i = 0; i < data_lines.size(); ++i) {
        if (i) payload += '\n';
        payload += data_lines[i];
    }
    if (declared_checksum.empty())
        throw std::runtime_error(name + ": missing checksum line");
    std::string actual = hex16(fnv1a64(payload));
    if (actual != declared_checksum)
        throw std::runtime_error(name + ": checksum mismatch (expected " + declared_checksum +
                                 ", computed " + actual + ")");

    for (const std::string& dl : data_lines) {
        std::istringstream ls(dl);
        int n = 0, m = 0;
        long long rank = -1;
        if (!(ls >> n >> m >> rank) || rank < 0)
            throw std::runtime_error(name + ": malformed table line: " + dl);
        AbelianGroup g;
        g.free_rank = static_cast<std::size_t>(rank);
        long long d = 0;
        while (ls >> d) {
            if (d < 2) throw std::runtime_error(name + ": invariant factor below 2: " + dl);
            if (!g.torsion.empty() && d % g.torsion.back() != 0)
                throw std::runtime_error(name + ": invariant factors not a divisibility chain: " + dl);
            g.torsion.emplace_back(d);
        }
        if (!t.entries_.emplace(std::make_pair(n, m), std::move(g)).second)
            throw std::runtime_error(name + ": duplicate entry: " + dl);
    }
    return t;
}

HomotopyTable HomotopyTable::load_file(const std::string& path, const std::string& name) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(name + ": cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), name);
}

std::optional<AbelianGroup> HomotopyTable::lookup(int n, int m) const {
    auto it = entries_.find({n, m});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

const HomotopyTable& sphere_table() {
    static const HomotopyTable table = [] {
        if (const char* dir = std::getenv("CALC_DATA_DIR"))
            return HomotopyTable::load_file(std::string(dir) + "/sphere_table.txt", "sphere table");
        return HomotopyTable::parse(embedded_sphere_table(), "sphere table");
    }();
    return table;
}

const HomotopyTable& orthogonal_table() {
    static const HomotopyTable table = [] {
        if (const char* dir = std::getenv("CALC_DATA_DIR"))
            return HomotopyTable::load_file(std::string(dir) + "/orthogonal_table.txt",
                                            "orthogonal table");
        return HomotopyTable::parse(embedded_orthogonal_table(), "orthogonal table");
    }();
    return table;
}

std::optional<AbelianGroup> sphere_pi(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("sphere_pi: requires n, m >= 0");
    if (m == 0) {
        // Two points: contractible components.
        if (n >= 1) return AbelianGroup{};
        return std::nullopt;
    }
    if (n < m) return AbelianGroup{};
    if (n == m) {
        AbelianGroup z;
        z.free_rank = 1;
        return z;
    }
    if (m == 1) return AbelianGroup{}; // aspherical circle
    return sphere_table().lookup(n, m);
}

std::optional<AbelianGroup> orthogonal_pi(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("orthogonal_pi: requires n, m >= 0");
    return orthogonal_table().lookup(n, m);
}

} // namespace embcalc
