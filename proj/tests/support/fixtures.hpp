#pragma once

#include <filesystem>

namespace conway::testing {

// Gauss diagram of the knot 6_2, labels in first-encounter order from the
// base point. Conway polynomial 1 - z^2 - z^4.
inline constexpr const char* k62Code = "U1- O2- U3- O4+ U5+ O3- U6- O1- U2- O5+ U4+ O6-";

// smooth_crossing(6_2, 5): the two-component diagram of the skein triple at
// crossing 5.
inline constexpr const char* k62SmoothedAt5 = "U1- O2- U3- O4+ U4+ O6- | O3- U6- O1- U2-";

inline constexpr const char* kTrefoilCode = "O1+ U2+ O3+ U1+ O2+ U3+";
inline constexpr const char* kHopfCode = "O1+ U2+ | U1+ O2+";

// Non-realizable two-chord diagram splitting the ascending and descending
// state sums: ascending 1 + z^2, descending 1.
inline constexpr const char* kAscDesWitness = "O1+ U2+ U1+ O2+";

inline std::filesystem::path data_dir() { return std::filesystem::path(CONWAY_DATA_DIR); }
inline std::filesystem::path knot_table_path() { return data_dir() / "knot_table.tsv"; }

} // namespace conway::testing
