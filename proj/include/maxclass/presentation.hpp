#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "maxclass/errors.hpp"

namespace maxclass {

class PcPresentation;

inline constexpr int kMaxGens = 16;

// One factor g^e of a stored normal word; exponents lie in (0, p).
struct Factor {
  int gen = 0;
  int exp = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

using NormalWord = std::vector<Factor>;

// Free word over the generators; exponents are arbitrary integers.
struct Word {
  std::vector<std::pair<int, long long>> letters;
  Word() = default;
  Word(std::initializer_list<std::pair<int, long long>> ls) : letters(ls) {}
  Word& append(int gen, long long exp) {
    letters.emplace_back(gen, exp);
    return *this;
  }
};

// Group element in normal form: exponent vector with entries in [0, p).
// Normal forms are unique, so equality is vector equality.
struct Element {
  const PcPresentation* pres = nullptr;
  std::array<std::uint8_t, kMaxGens> v{};

  int exp(int i) const { return v[static_cast<std::size_t>(i - 1)]; }
  void set_exp(int i, int e) { v[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(e); }
  bool is_identity() const;
  int leading() const;         // least index with nonzero exponent; 0 for the identity
  std::uint64_t code() const;  // big-endian base-p encoding; numeric order = lex order

  friend bool operator==(const Element& a, const Element& b) {
    return a.pres == b.pres && a.v == b.v;
  }
};

// Lexicographic comparison of exponent vectors (same presentation assumed).
bool lex_less(const Element& a, const Element& b);

struct ElementHash {
  std::size_t operator()(const Element& a) const;
};

std::string to_string(const Element& a);

struct OverlapFailure {
  std::string overlap;  // which overlap disagreed, e.g. "g3*(g2*g1) vs (g3*g2)*g1"
  std::string lhs;
  std::string rhs;
};

struct ConsistencyReport {
  bool pass = true;
  std::vector<OverlapFailure> failures;
};

// Polycyclic presentation with prime relative orders:
//   g_i^p     = power_rhs(i)            (normal word over indices > i)
//   g_j^{g_i} = g_j * conj_tail(i, j)   (tail over indices > j, for i < j)
//
// The rhs shape forces every chain subgroup H_k = <g_k,...,g_n> to be normal
// in the whole group with H_k/H_{k+1} of order p and central in G/H_{k+1};
// multiplication by an element of H_k fixes exponents below k and adds
// exponents at position k mod p.  Several algorithms below rely on this.
//
// Immutable after construction; operations are pure and safe to share.
class PcPresentation {
 public:
  PcPresentation(std::string name, int p, int n,
                 std::vector<NormalWord> power_rhs,                       // index 1..n at [i-1]
                 std::vector<std::pair<std::pair<int, int>, NormalWord>> conj_tails);

  PcPresentation(const PcPresentation&) = delete;
  PcPresentation& operator=(const PcPresentation&) = delete;

  const std::string& name() const { return name_; }
  int prime() const { return p_; }
  int ngens() const { return n_; }
  std::int64_t order() const { return order_; }

  Element identity() const;
  Element generator(int i) const;

  const NormalWord& power_rhs(int i) const { return power_[static_cast<std::size_t>(i - 1)]; }
  const NormalWord& conj_tail(int i, int j) const;  // i < j
  bool conj_trivial(int i, int j) const { return conj_tail(i, j).empty(); }
  NormalWord conj_rhs(int i, int j) const;  // g_j followed by the tail

  // Unique normal form of a free word (collection from the left).
  Element collect(const Word& w) const;

  // All collection overlaps (Sims tests); pass iff the presented group has order p^n.
  ConsistencyReport consistency_check() const;

 private:
  friend Element multiply(const Element&, const Element&);
  void consume(Element& r, std::vector<std::pair<std::int16_t, std::int16_t>>& stk) const;

  std::string name_;
  int p_ = 0;
  int n_ = 0;
  std::int64_t order_ = 0;
  std::vector<NormalWord> power_;                 // [i-1] -> rhs of g_i^p
  std::vector<std::vector<NormalWord>> conj_;     // [i-1][j-1] -> tail of g_j^{g_i}
};

Element multiply(const Element& a, const Element& b);
Element invert(const Element& a);
Element power(const Element& a, long long k);
Element conjugate(const Element& a, const Element& g);   // g^{-1} a g
Element commutator(const Element& a, const Element& b);  // a^{-1} b^{-1} a b
std::int64_t element_order(const Element& a);

Word to_word(const Element& a);

bool is_prime(int p);

}  // namespace maxclass
