#pragma once

#include "embcalc/abelian.hpp"

#include <map>
#include <optional>
#include <string>

namespace embcalc {

/// Curated table of homotopy groups loaded from a versioned, checksummed
/// plain-text file (one entry per line: `n m rank t1 t2 ...`). Entries
/// outside the table are answered "unknown", never guessed.
class HomotopyTable {
public:
    static HomotopyTable parse(const std::string& text, const std::string& name);
    static HomotopyTable load_file(const std::string& path, const std::string& name);

    std::optional<AbelianGroup> lookup(int n, int m) const;

    const std::string& version() const { return version_; }

private:
    std::map<std::pair<int, int>, AbelianGroup> entries_;
    std::string version_;
};

/// pi_n of the m-sphere where decided:
///  - 0 for n < m, and Z for n = m >= 1;
///  - 0 for the circle in degrees n >= 2 and for the 0-sphere in degrees >= 1;
///  - curated table values in stems up to 7 for m <= 16;
///  - unknown (nullopt) otherwise.
std::optional<AbelianGroup> sphere_pi(int n, int m);

/// Curated pi_n of the rank-m orthogonal group (small range only).
std::optional<AbelianGroup> orthogonal_pi(int n, int m);

/// The tables behind the two queries above, loaded once. `CALC_DATA_DIR`
/// overrides the location of `sphere_table.txt` / `orthogonal_table.txt`;
/// otherwise the copies embedded at build time are used.
const HomotopyTable& sphere_table();
const HomotopyTable& orthogonal_table();

} // namespace embcalc
