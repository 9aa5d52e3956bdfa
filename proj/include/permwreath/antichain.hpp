#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permwreath/avoidance.hpp"
#include "permwreath/permutation.hpp"

namespace permwreath {

/// Infinite antichains in the bases of X wr Y built from long pin sequences
/// anchored at a basis element of X (bottom) and of Y (top).
enum class AntichainFamily {
  thm6,                 // Av(25134) wr Av(321), up-right pins
  ex2ii,                // Av(25134) wr Av(4321, *)
  ex2iii,               // Av(25134) wr Av(4312, *)
  ex3_4321_4123,        // Av(25143) wr Av(4321, 4123)
  ex3_4312_4123,        // Av(25143) wr Av(4312, 4123)
  widdershins_2413,     // Av(31542) wr Av(3412, 2413)
  widdershins_2143,     // Av(412563) wr Av(3412, 2143)
};

struct FamilyInfo {
  AntichainFamily family;
  std::string name;
  PermClass x;
  /// Every Y the family's members are basis elements for.
  std::vector<PermClass> ys;
  /// Patterns with exactly one occurrence in every member; empty for the
  /// widdershins families, where the occurrence of 3412 is not unique.
  std::vector<Permutation> unique_anchors;
};

const std::vector<FamilyInfo>& antichain_families();
const FamilyInfo& family_info(AntichainFamily family);
/// Throws InvalidArgument for an unknown name.
AntichainFamily parse_family(std::string_view name);
std::string_view to_string(AntichainFamily family);

/// The k-th member (k >= 1).
Permutation antichain_member(AntichainFamily family, int k);

}  // namespace permwreath
