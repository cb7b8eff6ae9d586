#pragma once

#include <string>
#include <vector>

#include "eigcontain/chartab/character_table.hpp"

namespace eigc {

/// Restriction of one cuspidal or principal series row of a closed-form GL2(F_q) table to
/// the diagonal torus T, the nonsplit torus S and the group ZU (scalars times upper
/// unitriangular matrices), compared exactly against the expected multiplicities:
///   cuspidal C(j):  T every character with central restriction w once;
///                   S the same, except theta_j and theta_qj are absent;
///                   ZU w times (regular of U minus trivial).
///   principal P(a,b): T as for C, with (a,b) and (b,a) twice;
///                   S every character with central restriction w once;
///                   ZU w times (regular of U plus trivial).
/// w is read off the row's values on the centre.
struct RestrictionCheck {
  std::size_t row = 0;
  std::string label;
  bool split_torus = false;
  bool nonsplit_torus = false;
  bool center_unipotent = false;
  std::string detail;  // first mismatch, empty when all hold

  bool ok() const noexcept { return split_torus && nonsplit_torus && center_unipotent; }
};

/// One entry per C and P row of a closed-form GL2 table.
std::vector<RestrictionCheck> gl2_restriction_facts(const CharacterTable& t);

}  // namespace eigc
