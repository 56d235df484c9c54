#include "maxclass/quotient.hpp"

#include <stdexcept>

namespace maxclass {

Element Quotient::project(const Element& x) const {
  if (x.pres != parent) throw input_error("quotient project: element from a different presentation");
  Element r = kernel.sift(x);  // support lies exactly on the complement positions
  Element out = pres->identity();
  for (std::size_t t = 0; t < complement.size(); ++t)
    out.set_exp(static_cast<int>(t) + 1, r.exp(complement[t]));
  return out;
}

Element Quotient::lift(const Element& xbar) const {
  if (xbar.pres != pres.get()) throw input_error("quotient lift: element from a different presentation");
  Element out = parent->identity();
  for (std::size_t t = 0; t < complement.size(); ++t)
    out.set_exp(complement[t], xbar.exp(static_cast<int>(t) + 1));
  return out;
}

Quotient quotient_presentation(const PcPresentation& g, const Subgroup& n, const std::string& name) {
  if (n.parent() != &g) throw input_error("quotient: subgroup of a different presentation");
  if (!n.is_normal()) throw input_error("quotient: subgroup is not normal");
  const int p = g.prime();
  std::vector<int> complement;
  {
    std::vector<bool> is_lead(static_cast<std::size_t>(g.ngens() + 1), false);
    for (int l : n.leading()) is_lead[static_cast<std::size_t>(l)] = true;
    for (int i = 1; i <= g.ngens(); ++i)
      if (!is_lead[static_cast<std::size_t>(i)]) complement.push_back(i);
  }
  const int m = static_cast<int>(complement.size());
  // Express a parent element modulo N over the complement generators: the
  // canonical coset representative's support is exactly the complement.
  auto express_mod = [&](const Element& x) {
    Element r = n.sift(x);
    NormalWord w;
    for (int t = 0; t < m; ++t) {
      int e = r.exp(complement[static_cast<std::size_t>(t)]);
      if (e) w.push_back({t + 1, e});
    }
    return w;
  };
  std::vector<NormalWord> pows;
  for (int t = 0; t < m; ++t)
    pows.push_back(express_mod(power(g.generator(complement[static_cast<std::size_t>(t)]), p)));
  std::vector<std::pair<std::pair<int, int>, NormalWord>> conjs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Element c = conjugate(g.generator(complement[static_cast<std::size_t>(j)]),
                            g.generator(complement[static_cast<std::size_t>(i)]));
      NormalWord w = express_mod(c);
      if (w.empty() || w.front().gen != j + 1 || w.front().exp != 1)
        throw std::logic_error("quotient: conjugate relation lost its leading generator");
      NormalWord tail(w.begin() + 1, w.end());
      if (!tail.empty()) conjs.push_back({{i + 1, j + 1}, tail});
    }
  Quotient q;
  q.pres = std::make_shared<const PcPresentation>(
      name.empty() ? g.name() + "_quot" : name, p, m, std::move(pows), std::move(conjs));
  q.parent = &g;
  q.kernel = n;
  q.complement = std::move(complement);
  auto rep = q.pres->consistency_check();
  if (!rep.pass) throw std::logic_error("quotient: induced presentation is inconsistent");
  return q;
}

}  // namespace maxclass
