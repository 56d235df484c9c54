#include "maxclass/abelianization.hpp"

#include <stdexcept>

namespace maxclass {

std::vector<std::int64_t> AbelianizationData::project(const Element& x) const {
  auto coeffs = source.express(x);
  if (!coeffs) throw input_error("abelianization: element outside the source subgroup");
  std::vector<std::int64_t> raw(coeffs->begin(), coeffs->end());
  std::vector<std::int64_t> out(factors.size(), 0);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) acc += raw[i] * qcols[i][k];
    acc %= factors[k];
    if (acc < 0) acc += factors[k];
    out[k] = acc;
  }
  return out;
}

std::int64_t AbelianizationData::quotient_order() const {
  std::int64_t o = 1;
  for (auto d : factors) o *= d;
  return o;
}

std::shared_ptr<const AbelianizationData> abelianization(const Subgroup& n) {
  const PcPresentation& g = *n.parent();
  const int p = g.prime();
  const int r = n.rank();
  // Relation matrix of the induced presentation of N, read off by expressing
  // powers and commutators of the igs in igs coordinates.
  IntMat rows;
  auto express_row = [&](const Element& x) {
    auto c = n.express(x);
    if (!c) throw std::logic_error("abelianization: closure violated (not an igs?)");
    return std::vector<std::int64_t>(c->begin(), c->end());
  };
  for (int i = 0; i < r; ++i) {
    auto w = express_row(power(n.igs()[static_cast<std::size_t>(i)], p));
    std::vector<std::int64_t> row(static_cast<std::size_t>(r), 0);
    row[static_cast<std::size_t>(i)] = p;
    for (int j = 0; j < r; ++j) row[static_cast<std::size_t>(j)] -= w[static_cast<std::size_t>(j)];
    rows.push_back(std::move(row));
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      auto w = express_row(commutator(n.igs()[static_cast<std::size_t>(j)], n.igs()[static_cast<std::size_t>(i)]));
      rows.push_back(std::move(w));
    }
  auto snf = smith_normal_form(rows, r);
  auto data = std::make_shared<AbelianizationData>();
  data->source = n;
  std::vector<int> kept;
  for (int k = 0; k < r; ++k) {
    if (snf.diag[static_cast<std::size_t>(k)] == 0)
      throw std::logic_error("abelianization: infinite invariant factor for a finite group");
    if (snf.diag[static_cast<std::size_t>(k)] > 1) {
      kept.push_back(k);
      data->factors.push_back(snf.diag[static_cast<std::size_t>(k)]);
    }
  }
  data->qcols.assign(static_cast<std::size_t>(r), std::vector<std::int64_t>(kept.size(), 0));
  for (int i = 0; i < r; ++i)
    for (std::size_t k = 0; k < kept.size(); ++k)
      data->qcols[static_cast<std::size_t>(i)][k] = snf.col[static_cast<std::size_t>(i)][static_cast<std::size_t>(kept[k])];
  // Sections: preimages of the standard basis vectors via the inverse transform.
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const auto& row = snf.col_inv[static_cast<std::size_t>(kept[k])];
    Element s = g.identity();
    for (int i = 0; i < r; ++i)
      if (row[static_cast<std::size_t>(i)])
        s = multiply(s, power(n.igs()[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(i)]));
    data->sections.push_back(s);
  }
  // Verify the projection/section pairing.
  for (std::size_t k = 0; k < data->sections.size(); ++k) {
    auto pr = data->project(data->sections[k]);
    for (std::size_t m = 0; m < pr.size(); ++m)
      if (pr[m] != (m == k ? 1 : 0))
        throw std::logic_error("abelianization: section does not project to a basis vector");
  }
  return data;
}

}  // namespace maxclass
