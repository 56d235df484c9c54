#include "maxclass/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace maxclass {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int inverse_mod(int a, int p) {
  int t = 1;
  for (int k = 0; k < p - 2; ++k) t = (t * a) % p;
  return t;
}

}  // namespace

std::int64_t Subgroup::order() const { return parent_ ? ipow(parent_->prime(), rank()) : 1; }

std::int64_t Subgroup::index() const {
  return parent_ ? ipow(parent_->prime(), parent_->ngens() - rank()) : 1;
}

Subgroup Subgroup::from_canonical(const PcPresentation* parent, std::vector<Element> igs) {
  Subgroup s;
  s.parent_ = parent;
  s.igs_ = std::move(igs);
  s.leading_.reserve(s.igs_.size());
  for (const auto& h : s.igs_) s.leading_.push_back(h.leading());
  return s;
}

Element Subgroup::sift(const Element& x) const {
  if (!parent_ || x.pres != parent_) throw input_error("sift: element from a different presentation");
  const int p = parent_->prime();
  Element r = x;
  for (std::size_t i = 0; i < igs_.size(); ++i) {
    int c = r.exp(leading_[i]);
    if (!c) continue;
    r = multiply(power(igs_[i], -c), r);
  }
  return r;
}

bool Subgroup::contains(const Element& x) const { return sift(x).is_identity(); }

bool Subgroup::contains(const Subgroup& other) const {
  for (const auto& h : other.igs())
    if (!contains(h)) return false;
  return true;
}

std::optional<std::vector<int>> Subgroup::express(const Element& x) const {
  if (!parent_ || x.pres != parent_) throw input_error("express: element from a different presentation");
  const int p = parent_->prime();
  std::vector<int> coeffs(igs_.size(), 0);
  Element r = x;
  for (std::size_t i = 0; i < igs_.size(); ++i) {
    int c = r.exp(leading_[i]);
    coeffs[i] = c;
    if (c) r = multiply(power(igs_[i], -c), r);
  }
  if (!r.is_identity()) return std::nullopt;
  return coeffs;
}

bool Subgroup::is_normal() const {
  if (!parent_) return true;
  for (int i = 1; i <= parent_->ngens(); ++i) {
    Element g = parent_->generator(i);
    for (const auto& h : igs_)
      if (!contains(conjugate(h, g))) return false;
  }
  return true;
}

std::string Subgroup::key() const {
  std::string k;
  for (const auto& h : igs_)
    for (int i = 1; i <= parent_->ngens(); ++i) k.push_back(static_cast<char>(h.exp(i)));
  return k;
}

Subgroup trivial_subgroup(const PcPresentation& g) { return Subgroup::from_canonical(&g, {}); }

Subgroup full_subgroup(const PcPresentation& g) {
  std::vector<Element> igs;
  for (int i = 1; i <= g.ngens(); ++i) igs.push_back(g.generator(i));
  return Subgroup::from_canonical(&g, std::move(igs));
}

Subgroup chain_subgroup(const PcPresentation& g, int k) {
  std::vector<Element> igs;
  for (int i = k; i <= g.ngens(); ++i) igs.push_back(g.generator(i));
  return Subgroup::from_canonical(&g, std::move(igs));
}

namespace {

// Sifting closure: slots indexed by leading position, fed from a work queue.
// After the fixpoint the slots form an igs; a final pass echelonizes tails.
class IgsBuilder {
 public:
  explicit IgsBuilder(const PcPresentation& g) : g_(g), slot_(static_cast<std::size_t>(g.ngens() + 1)) {}

  void add(const Element& x) {
    if (x.pres != &g_) throw input_error("standardize: element from a different presentation");
    queue_.push_back(x);
  }

  // Conjugating set: every inserted slot is also closed under these.
  void close_under(std::vector<Element> conjugators) { conj_ = std::move(conjugators); }

  std::vector<Element> run() {
    const int p = g_.prime();
    while (!queue_.empty()) {
      Element x = queue_.front();
      queue_.pop_front();
      // sift against current slots
      Element r = x;
      for (int i = 1; i <= g_.ngens(); ++i) {
        int c = r.exp(i);
        if (!c) continue;
        if (!slot_[static_cast<std::size_t>(i)]) break;
        r = multiply(power(*slot_[static_cast<std::size_t>(i)], -c), r);
      }
      int lead = r.leading();
      if (lead == 0) continue;
      if (slot_[static_cast<std::size_t>(lead)]) {
        // sift got stuck on an unrelated nonzero position below an occupied slot;
        // restart the residue through the queue after one more reduction round
        // cannot happen: sift only stops at an empty slot
        throw std::logic_error("IgsBuilder: sift stopped at an occupied slot");
      }
      r = power(r, inverse_mod(r.exp(lead), p));
      slot_[static_cast<std::size_t>(lead)] = r;
      queue_.push_back(power(r, p));
      for (const auto& t : conj_) {
        queue_.push_back(conjugate(r, t));
      }
      for (std::size_t i = 1; i < slot_.size(); ++i) {
        if (!slot_[i] || static_cast<int>(i) == lead) continue;
        queue_.push_back(conjugate(r, *slot_[i]));
        queue_.push_back(conjugate(*slot_[i], r));
      }
    }
    // echelonize: clear entries at later leading positions
    std::vector<int> leads;
    for (std::size_t i = 1; i < slot_.size(); ++i)
      if (slot_[i]) leads.push_back(static_cast<int>(i));
    for (std::size_t a = 0; a < leads.size(); ++a) {
      Element& h = *slot_[static_cast<std::size_t>(leads[a])];
      for (std::size_t b = a + 1; b < leads.size(); ++b) {
        int c = h.exp(leads[b]);
        if (c) h = multiply(h, power(*slot_[static_cast<std::size_t>(leads[b])], -c));
      }
    }
    std::vector<Element> igs;
    for (int l : leads) igs.push_back(*slot_[static_cast<std::size_t>(l)]);
    return igs;
  }

 private:
  const PcPresentation& g_;
  std::vector<std::optional<Element>> slot_;
  std::deque<Element> queue_;
  std::vector<Element> conj_;
};

}  // namespace

Subgroup standardize(const PcPresentation& g, const std::vector<Element>& gens) {
  IgsBuilder b(g);
  for (const auto& x : gens) b.add(x);
  return Subgroup::from_canonical(&g, b.run());
}

Subgroup normal_closure(const PcPresentation& g, const std::vector<Element>& gens) {
  IgsBuilder b(g);
  std::vector<Element> pcgens;
  for (int i = 1; i <= g.ngens(); ++i) pcgens.push_back(g.generator(i));
  b.close_under(std::move(pcgens));
  for (const auto& x : gens) b.add(x);
  return Subgroup::from_canonical(&g, b.run());
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent() || !a.parent())
    throw input_error("commutator_subgroup: mixed presentations");
  const PcPresentation& g = *a.parent();
  IgsBuilder bld(g);
  std::vector<Element> conjugators;
  conjugators.insert(conjugators.end(), a.igs().begin(), a.igs().end());
  conjugators.insert(conjugators.end(), b.igs().begin(), b.igs().end());
  bld.close_under(std::move(conjugators));
  for (const auto& x : a.igs())
    for (const auto& y : b.igs()) bld.add(commutator(x, y));
  return Subgroup::from_canonical(&g, bld.run());
}

Subgroup derived_subgroup(const Subgroup& h) { return commutator_subgroup(h, h); }

namespace {

bool normalizes(const Subgroup& h, const Subgroup& k) {
  // h normalizes k iff k^x = k for each igs member x of h (finite groups).
  for (const auto& x : h.igs())
    for (const auto& y : k.igs())
      if (!k.contains(conjugate(y, x))) return false;
  return true;
}

}  // namespace

Subgroup product(const Subgroup& h, const Subgroup& k) {
  if (h.parent() != k.parent() || !h.parent()) throw input_error("product: mixed presentations");
  if (!normalizes(h, k) && !normalizes(k, h))
    throw input_error("product: neither factor normalizes the other");
  std::vector<Element> gens = h.igs();
  gens.insert(gens.end(), k.igs().begin(), k.igs().end());
  return standardize(*h.parent(), gens);
}

std::vector<Element> enumerate_subgroup(const Subgroup& h, std::int64_t cap) {
  if (h.order() > cap) throw budget_error("enumerate_subgroup: order exceeds cap");
  const PcPresentation& g = *h.parent();
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(h.order()));
  out.push_back(g.identity());
  for (auto it = h.igs().rbegin(); it != h.igs().rend(); ++it) {
    std::vector<Element> next;
    next.reserve(out.size() * static_cast<std::size_t>(g.prime()));
    Element pw = g.identity();
    for (int e = 0; e < g.prime(); ++e) {
      for (const auto& x : out) next.push_back(multiply(pw, x));
      if (e + 1 < g.prime()) pw = multiply(pw, *it);
    }
    out = std::move(next);
  }
  return out;
}

Subgroup intersection(const Subgroup& h, const Subgroup& k, const Budgets& budgets) {
  if (h.parent() != k.parent() || !h.parent())
    throw input_error("intersection: mixed presentations");
  const PcPresentation& g = *h.parent();
  if (k.contains(h)) return h;
  if (h.contains(k)) return k;
  const int n = g.ngens();
  if (h.rank() == n - 1 && k.rank() == n - 1) {
    // Both have index p (hence are normal); intersect as the joint kernel of
    // the two coset maps G -> Z_p read off the canonical coset representative.
    auto coset_map = [&](const Subgroup& m) {
      int missing = 0;
      std::vector<bool> is_lead(static_cast<std::size_t>(n + 1), false);
      for (int l : m.leading()) is_lead[static_cast<std::size_t>(l)] = true;
      for (int i = 1; i <= n; ++i)
        if (!is_lead[static_cast<std::size_t>(i)]) missing = i;
      return missing;
    };
    int mh = coset_map(h), mk = coset_map(k);
    Subgroup full = full_subgroup(g);
    std::vector<std::vector<int>> values;
    for (int i = 1; i <= n; ++i) {
      Element gi = g.generator(i);
      values.push_back({h.sift(gi).exp(mh), k.sift(gi).exp(mk)});
    }
    return hom_kernel(full, values, 2);
  }
  const Subgroup& small = (h.order() <= k.order()) ? h : k;
  const Subgroup& big = (h.order() <= k.order()) ? k : h;
  if (small.order() > budgets.intersection_elements)
    throw unsupported_error("unsupported intersection: factors too large for the fallback");
  std::vector<Element> members;
  for (const auto& x : enumerate_subgroup(small, budgets.intersection_elements))
    if (big.contains(x)) members.push_back(x);
  return standardize(g, members);
}

Subgroup hom_kernel(const Subgroup& h, const std::vector<std::vector<int>>& values, int d) {
  const PcPresentation& g = *h.parent();
  const int p = g.prime();
  const int r = h.rank();
  if (static_cast<int>(values.size()) != r) throw std::logic_error("hom_kernel: value count mismatch");
  // Row-reduce the r x d value matrix over F_p, tracking row operations on
  // exponent vectors; rows that reduce to zero give kernel generators.
  std::vector<std::vector<int>> m(values);
  for (auto& row : m) {
    if (static_cast<int>(row.size()) != d) throw std::logic_error("hom_kernel: ragged values");
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  std::vector<std::vector<int>> basis(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  int row = 0;
  for (int col = 0; col < d && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(row)]);
    std::swap(basis[static_cast<std::size_t>(piv)], basis[static_cast<std::size_t>(row)]);
    int inv = inverse_mod(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)], p);
    for (int i = row + 1; i < r; ++i) {
      int f = (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] * inv) % p;
      if (!f) continue;
      for (int c = 0; c < d; ++c)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
            ((m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
              f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]) % p + p) % p;
      for (int c = 0; c < r; ++c)
        basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] =
            ((basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
              f * basis[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]) % p + p) % p;
    }
    ++row;
  }
  // Echelonize the nullspace basis so the generator products acquire strictly
  // increasing leading indices; that pins the order of the generated subgroup.
  std::vector<std::vector<int>> null_basis(basis.begin() + row, basis.end());
  {
    std::size_t rr = 0;
    for (int col = 0; col < r && rr < null_basis.size(); ++col) {
      std::size_t piv = rr;
      while (piv < null_basis.size() && !null_basis[piv][static_cast<std::size_t>(col)]) ++piv;
      if (piv == null_basis.size()) continue;
      std::swap(null_basis[piv], null_basis[rr]);
      int inv = inverse_mod(null_basis[rr][static_cast<std::size_t>(col)], p);
      for (auto& x : null_basis[rr]) x = (x * inv) % p;
      for (std::size_t i = 0; i < null_basis.size(); ++i) {
        if (i == rr) continue;
        int f = null_basis[i][static_cast<std::size_t>(col)];
        if (!f) continue;
        for (int c = 0; c < r; ++c)
          null_basis[i][static_cast<std::size_t>(c)] =
              ((null_basis[i][static_cast<std::size_t>(c)] -
                f * null_basis[rr][static_cast<std::size_t>(c)]) % p + p) % p;
      }
      ++rr;
    }
  }
  std::vector<Element> gens;
  for (const auto& brow : null_basis) {
    Element x = g.identity();
    for (int j = 0; j < r; ++j)
      if (brow[static_cast<std::size_t>(j)])
        x = multiply(x, power(h.igs()[static_cast<std::size_t>(j)], brow[static_cast<std::size_t>(j)]));
    gens.push_back(x);
  }
  for (const auto& hi : h.igs()) gens.push_back(power(hi, p));
  return standardize(g, gens);
}

Subgroup centralizer_in(const Subgroup& k0, const Element& x) {
  const PcPresentation& g = *k0.parent();
  if (x.pres != &g) throw input_error("centralizer_in: mixed presentations");
  Subgroup k = k0;
  // After stage t, [h, x] lies in H_{t+1} for every h in k; the coordinate at
  // position t is a homomorphism k -> Z_p because each chain factor is central.
  for (int t = 1; t <= g.ngens(); ++t) {
    std::vector<std::vector<int>> values;
    bool all_zero = true;
    for (const auto& h : k.igs()) {
      Element c = commutator(h, x);
      if (c.leading() != 0 && c.leading() < t)
        throw std::logic_error("centralizer_in: commutator escaped its layer");
      int v = c.exp(t);
      if (v) all_zero = false;
      values.push_back({v});
    }
    if (!all_zero) k = hom_kernel(k, values, 1);
  }
  return k;
}

Subgroup center(const PcPresentation& g) {
  Subgroup c = full_subgroup(g);
  for (int i = 1; i <= g.ngens(); ++i) c = centralizer_in(c, g.generator(i));
  return c;
}

Subgroup centralizer_of_section(const PcPresentation& g, const Subgroup& a, const Subgroup& b) {
  if (a.parent() != &g || b.parent() != &g)
    throw input_error("centralizer_of_section: mixed presentations");
  if (!a.contains(b)) throw input_error("centralizer_of_section: B must lie in A");
  if (!a.is_normal() || !b.is_normal())
    throw input_error("centralizer_of_section: A and B must be normal");
  // Central chain L_t = B * H_t from G down to B; each step has order 1 or p.
  const int n = g.ngens();
  std::vector<Subgroup> chain;
  std::vector<int> new_lead;  // leading position gained at step t (0 if none)
  for (int t = 1; t <= n + 1; ++t) {
    std::vector<Element> gens = b.igs();
    for (int i = t; i <= n; ++i) gens.push_back(g.generator(i));
    chain.push_back(standardize(g, gens));
  }
  for (int t = 0; t < n; ++t) {
    int gained = 0;
    std::vector<bool> next_leads(static_cast<std::size_t>(n + 1), false);
    for (int l : chain[static_cast<std::size_t>(t + 1)].leading())
      next_leads[static_cast<std::size_t>(l)] = true;
    for (int l : chain[static_cast<std::size_t>(t)].leading())
      if (!next_leads[static_cast<std::size_t>(l)]) gained = l;
    new_lead.push_back(gained);
  }
  const int p = g.prime();
  Subgroup c = full_subgroup(g);
  for (const auto& aj : a.igs()) {
    for (int t = 0; t < n; ++t) {
      if (!new_lead[static_cast<std::size_t>(t)]) continue;
      const Subgroup& lt = chain[static_cast<std::size_t>(t)];
      const Subgroup& lt1 = chain[static_cast<std::size_t>(t + 1)];
      Element z = g.identity();
      for (std::size_t m = 0; m < lt.igs().size(); ++m)
        if (lt.leading()[m] == new_lead[static_cast<std::size_t>(t)]) z = lt.igs()[m];
      // Class of y in L_t/L_{t+1} = <z L_{t+1}>: the unique v with y*z^{-v} in L_{t+1}.
      auto coord = [&](const Element& y) {
        for (int v = 0; v < p; ++v)
          if (lt1.contains(multiply(y, power(z, -v)))) return v;
        throw std::logic_error("centralizer_of_section: commutator escaped its layer");
      };
      std::vector<std::vector<int>> values;
      bool all_zero = true;
      for (const auto& h : c.igs()) {
        int v = coord(commutator(h, aj));
        if (v) all_zero = false;
        values.push_back({v});
      }
      if (!all_zero) c = hom_kernel(c, values, 1);
    }
  }
  return c;
}

bool is_abelian(const Subgroup& h) {
  for (std::size_t i = 0; i < h.igs().size(); ++i)
    for (std::size_t j = i + 1; j < h.igs().size(); ++j)
      if (!commutator(h.igs()[i], h.igs()[j]).is_identity()) return false;
  return true;
}

std::int64_t subgroup_exponent(const Subgroup& h, const Budgets& budgets) {
  if (h.rank() == 0) return 1;
  std::int64_t best = 1;
  if (is_abelian(h)) {
    // exp = max element order; the igs realizes it among products of p-power order
    for (const auto& x : h.igs()) best = std::max(best, element_order(x));
    // an abelian group's exponent is the lcm = max of generator orders
    return best;
  }
  if (h.order() > budgets.exponent_elements)
    throw unsupported_error("exponent: subgroup exceeds the enumeration cap and is not abelian");
  for (const auto& x : enumerate_subgroup(h, budgets.exponent_elements))
    best = std::max(best, element_order(x));
  return best;
}

Subgroup omega(const Subgroup& h, int i, const Budgets& budgets) {
  const PcPresentation& g = *h.parent();
  std::int64_t bound = 1;
  for (int t = 0; t < i; ++t) bound *= g.prime();
  if (is_abelian(h)) {
    std::vector<Element> gens;
    for (const auto& x : h.igs()) {
      std::int64_t ord = element_order(x);
      gens.push_back(ord <= bound ? x : power(x, ord / bound));
    }
    return standardize(g, gens);
  }
  if (h.order() > budgets.exponent_elements)
    throw unsupported_error("omega: subgroup exceeds the enumeration cap and is not abelian");
  std::vector<Element> gens;
  for (const auto& x : enumerate_subgroup(h, budgets.exponent_elements))
    if (element_order(x) <= bound) gens.push_back(x);
  return standardize(g, gens);
}

Subgroup frattini_subgroup(const PcPresentation& g) {
  Subgroup d = derived_subgroup(full_subgroup(g));
  std::vector<Element> gens = d.igs();
  for (int i = 1; i <= g.ngens(); ++i) gens.push_back(power(g.generator(i), g.prime()));
  return normal_closure(g, gens);
}

std::vector<Subgroup> maximal_subgroups(const PcPresentation& g) {
  const int p = g.prime();
  const int n = g.ngens();
  Subgroup phi = frattini_subgroup(g);
  std::vector<int> complement;
  {
    std::vector<bool> is_lead(static_cast<std::size_t>(n + 1), false);
    for (int l : phi.leading()) is_lead[static_cast<std::size_t>(l)] = true;
    for (int i = 1; i <= n; ++i)
      if (!is_lead[static_cast<std::size_t>(i)]) complement.push_back(i);
  }
  const int rho = static_cast<int>(complement.size());
  // Coordinates of x modulo Phi(G): canonical coset representative exponents
  // at the complement positions (additive since G/Phi is elementary abelian).
  auto coords = [&](const Element& x) {
    Element r = phi.sift(x);
    std::vector<int> c;
    for (int k : complement) c.push_back(r.exp(k));
    return c;
  };
  std::vector<std::vector<int>> gen_coords;
  for (int i = 1; i <= n; ++i) gen_coords.push_back(coords(g.generator(i)));
  // Normalized dual vectors (first nonzero entry = 1) in lexicographic order.
  std::vector<Subgroup> out;
  std::vector<int> alpha(static_cast<std::size_t>(rho), 0);
  Subgroup full = full_subgroup(g);
  auto advance = [&]() {
    for (int i = rho - 1; i >= 0; --i) {
      if (++alpha[static_cast<std::size_t>(i)] < p) return true;
      alpha[static_cast<std::size_t>(i)] = 0;
    }
    return false;
  };
  while (advance()) {
    int first = 0;
    while (first < rho && alpha[static_cast<std::size_t>(first)] == 0) ++first;
    if (alpha[static_cast<std::size_t>(first)] != 1) continue;  // normalize representative
    std::vector<std::vector<int>> values;
    for (int i = 0; i < n; ++i) {
      int v = 0;
      for (int t = 0; t < rho; ++t)
        v += alpha[static_cast<std::size_t>(t)] * gen_coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
      values.push_back({v % p});
    }
    out.push_back(hom_kernel(full, values, 1));
  }
  return out;
}

}  // namespace maxclass
