#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxclass/budgets.hpp"
#include "maxclass/presentation.hpp"

namespace maxclass {

// Subgroup in canonical form: an echelonized generating sequence (igs) with
// strictly increasing leading indices, leading exponent 1, and zero exponents
// at the other members' leading positions.  The igs of a subgroup is unique,
// so subgroup equality is igs equality.
class Subgroup {
 public:
  Subgroup() = default;

  const PcPresentation* parent() const { return parent_; }
  const std::vector<Element>& igs() const { return igs_; }
  const std::vector<int>& leading() const { return leading_; }
  int rank() const { return static_cast<int>(igs_.size()); }
  std::int64_t order() const;
  std::int64_t index() const;  // |G : H|

  bool contains(const Element& x) const;
  bool contains(const Subgroup& other) const;

  // Canonical representative of the right coset H*x (identity iff x in H).
  Element sift(const Element& x) const;

  // Exponents (a_1..a_r) with x = h_1^{a_1} * ... * h_r^{a_r}, if x in H.
  std::optional<std::vector<int>> express(const Element& x) const;

  // Invariant under conjugation by every pc generator of the parent.
  bool is_normal() const;

  // Canonical byte key: stable sort/hash discriminator.
  std::string key() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.igs_ == b.igs_;
  }

  // Internal: members must already form a canonical igs.
  static Subgroup from_canonical(const PcPresentation* parent, std::vector<Element> igs);

 private:
  const PcPresentation* parent_ = nullptr;
  std::vector<Element> igs_;
  std::vector<int> leading_;
};

Subgroup trivial_subgroup(const PcPresentation& g);
Subgroup full_subgroup(const PcPresentation& g);
Subgroup chain_subgroup(const PcPresentation& g, int k);  // <g_k,...,g_n>

// Canonical igs of the subgroup generated by `gens` (empty list -> trivial).
Subgroup standardize(const PcPresentation& g, const std::vector<Element>& gens);

// Smallest normal subgroup of G containing `gens`.
Subgroup normal_closure(const PcPresentation& g, const std::vector<Element>& gens);

// [A, B], closed under conjugation by A and B.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const Subgroup& h);

// HK; requires one factor to normalize the other (else input_error).
Subgroup product(const Subgroup& h, const Subgroup& k);

// Three tiers: containment; kernel of coset maps when both have index p;
// enumeration of the smaller factor under the budget cap.
Subgroup intersection(const Subgroup& h, const Subgroup& k, const Budgets& budgets = {});

// {g in k0 : [g, x] = 1}, computed layer by layer along the chain H_t.
Subgroup centralizer_in(const Subgroup& k0, const Element& x);

Subgroup center(const PcPresentation& g);

// C_G(A/B) = {g : [g, a] in B for all a in A}; requires B <= A, both normal in G.
Subgroup centralizer_of_section(const PcPresentation& g, const Subgroup& a, const Subgroup& b);

// Kernel of the homomorphism H -> (Z_p)^d given by its values on the igs.
Subgroup hom_kernel(const Subgroup& h, const std::vector<std::vector<int>>& values, int d);

// All p^r elements of H (throws budget_error beyond the cap).
std::vector<Element> enumerate_subgroup(const Subgroup& h, std::int64_t cap);

bool is_abelian(const Subgroup& h);

// lcm of element orders; abelian subgroups avoid enumeration.
std::int64_t subgroup_exponent(const Subgroup& h, const Budgets& budgets = {});

// <x in H : x^{p^i} = 1>.
Subgroup omega(const Subgroup& h, int i, const Budgets& budgets = {});

// Index-p subgroups in a deterministic order ((p^rho - 1)/(p - 1) of them).
std::vector<Subgroup> maximal_subgroups(const PcPresentation& g);

Subgroup frattini_subgroup(const PcPresentation& g);

}  // namespace maxclass
