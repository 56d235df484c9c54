#pragma once

#include <memory>
#include <string>
#include <vector>

#include "maxclass/subgroup.hpp"

namespace maxclass {

// G/N as a pc presentation of the same prime-step shape, together with the
// epimorphism on elements.  Quotient generators are the images of the parent
// generators at the positions where N has no igs member.
struct Quotient {
  std::shared_ptr<const PcPresentation> pres;
  const PcPresentation* parent = nullptr;
  Subgroup kernel;
  std::vector<int> complement;  // parent positions carried by the quotient

  Element project(const Element& x) const;
  Element lift(const Element& xbar) const;  // a set-theoretic section
};

Quotient quotient_presentation(const PcPresentation& g, const Subgroup& n, const std::string& name = "");

}  // namespace maxclass
