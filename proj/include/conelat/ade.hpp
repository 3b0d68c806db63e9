#pragma once

// Finite simply-laced Weyl groups and the subgroups fixed by a Dynkin
// diagram automorphism, counted by enumerating the whole group.

#include <cstdint>
#include <string>
#include <vector>

namespace conelat::ade {

struct DynkinType {
    char family = 'A'; // 'A', 'D' or 'E'
    int rank = 1;
    std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

// Parses "A3", "D4", "E6" ...; rank must be at most 8.
DynkinType parse_type(const std::string& s);

// Symmetric Cartan matrix, Bourbaki numbering (0-based here).
std::vector<std::vector<int>> cartan_matrix(const DynkinType& t);

// Node permutation (0-based images).  Accepts "id"/"identity", "flip"
// (A_n reversal, D_n swap of the two short legs, E6 reversal), "triality"
// (D4 cycle of the outer nodes) or a comma list of 1-based images.
std::vector<int> diagram_automorphism(const DynkinType& t, const std::string& spec);

bool is_diagram_automorphism(const DynkinType& t, const std::vector<int>& tau);

// All roots in simple-root coordinates, positive ones first.
std::vector<std::vector<int>> root_system(const DynkinType& t);

std::uint64_t weyl_group_order(const DynkinType& t);

// Enumerates W as permutations of the roots (breadth first from the simple
// reflections) and counts the elements commuting with tau.
std::uint64_t fixed_order_by_root_permutations(const DynkinType& t, const std::vector<int>& tau);

// Walks the W-orbit of the regular weight rho depth first (each orbit point
// has a unique parent) and counts the points fixed by tau; w commutes with
// tau exactly when w(rho) is tau-fixed.  Constant memory.
std::uint64_t fixed_order_by_orbit_search(const DynkinType& t, const std::vector<int>& tau);

struct FoldOptions {
    // required for groups above kLargeGroup elements (E7, E8)
    bool allow_large = false;
};

inline constexpr std::uint64_t kLargeGroup = 1000000;

// Order of {w in W : tau w tau^-1 = w}.
std::uint64_t folded_weyl_order(const DynkinType& t, const std::vector<int>& tau, const FoldOptions& opt = {});

} // namespace conelat::ade
