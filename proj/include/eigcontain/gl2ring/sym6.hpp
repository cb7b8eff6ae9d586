#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace eigc {

/// Partition of a dimension into cuspidal block sizes, sorted descending.
using IsobaricType = std::vector<int>;

enum class Sym6Case { tetrahedral, octahedral, icosahedral };

Sym6Case parse_sym6_case(std::string_view name);
std::string to_string(Sym6Case c);

struct CertifiedIdentity {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct Sym6Result {
  Sym6Case which = Sym6Case::tetrahedral;
  std::string hypothesis;                    // assumed decomposition, as "lhs = rhs"
  std::string target;                        // the symbol whose type is solved for
  std::string decomposition;                 // ring expression whose blocks are counted
  std::vector<IsobaricType> known_blocks;    // blocks cancelled against the decomposition
  std::vector<std::string> cuspidal_symbols;
  std::vector<std::string> rules;
  std::vector<CertifiedIdentity> identities;
  std::set<IsobaricType> types;

  bool certified() const;
};

/// Admissible isobaric types of Sym^6(pi) in the given case. Throws InternalError when a
/// certificate identity fails to verify.
Sym6Result sym6_isobaric_types(Sym6Case c);

/// Partitions of n into positive parts, each sorted descending.
std::vector<IsobaricType> partitions(int n);

}  // namespace eigc
