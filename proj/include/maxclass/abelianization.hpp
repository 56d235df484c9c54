#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "maxclass/snf.hpp"
#include "maxclass/subgroup.hpp"

namespace maxclass {

// N/N' as an explicit finite abelian group: invariant factors d_1 | d_2 | ...
// (powers of p, trivial factors dropped), a projection homomorphism from
// elements of N to coordinate tuples, and section elements hitting the
// standard basis vectors.
struct AbelianizationData {
  Subgroup source;
  std::vector<std::int64_t> factors;
  std::vector<Element> sections;
  IntMat qcols;  // rank(N) x #factors: igs exponents -> coordinates (pre mod)

  // Coordinates of x in the direct sum of Z/d_k (throws if x is not in N).
  std::vector<std::int64_t> project(const Element& x) const;

  std::int64_t quotient_order() const;  // |N/N'|
};

std::shared_ptr<const AbelianizationData> abelianization(const Subgroup& n);

}  // namespace maxclass
