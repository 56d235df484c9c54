#include "maxclass/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace maxclass {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool Element::is_identity() const {
  for (auto x : v)
    if (x) return false;
  return true;
}

int Element::leading() const {
  if (!pres) return 0;
  for (int i = 1; i <= pres->ngens(); ++i)
    if (v[static_cast<std::size_t>(i - 1)]) return i;
  return 0;
}

std::uint64_t Element::code() const {
  std::uint64_t c = 0;
  const int n = pres ? pres->ngens() : 0;
  const std::uint64_t p = pres ? static_cast<std::uint64_t>(pres->prime()) : 2;
  for (int i = 0; i < n; ++i) c = c * p + v[static_cast<std::size_t>(i)];
  return c;
}

bool lex_less(const Element& a, const Element& b) { return a.v < b.v; }

std::size_t ElementHash::operator()(const Element& a) const {
  std::uint64_t h = 1469598103934665603ull ^ reinterpret_cast<std::uintptr_t>(a.pres);
  for (auto x : a.v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Element& a) {
  if (!a.pres || a.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= a.pres->ngens(); ++i) {
    int e = a.exp(i);
    if (!e) continue;
    if (!first) os << "*";
    os << "g" << i;
    if (e != 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void validate_normal_word(const NormalWord& w, int p, int n, int min_index, const char* what) {
  int last = min_index;
  for (const auto& f : w) {
    if (f.gen <= last || f.gen > n)
      throw input_error(std::string(what) + ": word not in normal form over admissible indices");
    if (f.exp <= 0 || f.exp >= p)
      throw input_error(std::string(what) + ": exponent outside (0, p)");
    last = f.gen;
  }
}

}  // namespace

PcPresentation::PcPresentation(std::string name, int p, int n,
                               std::vector<NormalWord> power_rhs,
                               std::vector<std::pair<std::pair<int, int>, NormalWord>> conj_tails)
    : name_(std::move(name)), p_(p), n_(n) {
  if (!is_prime(p_)) throw input_error("relative order must be a prime");
  if (n_ < 1 || n_ > kMaxGens) throw input_error("generator count out of range");
  order_ = ipow(p_, n_);
  power_.assign(static_cast<std::size_t>(n_), {});
  if (power_rhs.size() > static_cast<std::size_t>(n_))
    throw input_error("too many power relations");
  for (std::size_t i = 0; i < power_rhs.size(); ++i) {
    validate_normal_word(power_rhs[i], p_, n_, static_cast<int>(i) + 1, "power rhs");
    power_[i] = std::move(power_rhs[i]);
  }
  conj_.assign(static_cast<std::size_t>(n_), std::vector<NormalWord>(static_cast<std::size_t>(n_)));
  for (auto& [ij, tail] : conj_tails) {
    auto [i, j] = ij;
    if (i < 1 || j <= i || j > n_) throw input_error("conjugate relation needs i < j within range");
    validate_normal_word(tail, p_, n_, j, "conjugate tail");
    conj_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(tail);
  }
}

Element PcPresentation::identity() const {
  Element e;
  e.pres = this;
  return e;
}

Element PcPresentation::generator(int i) const {
  if (i < 1 || i > n_) throw input_error("generator index out of range");
  Element e = identity();
  e.set_exp(i, 1);
  return e;
}

const NormalWord& PcPresentation::conj_tail(int i, int j) const {
  return conj_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

NormalWord PcPresentation::conj_rhs(int i, int j) const {
  NormalWord w;
  w.push_back({j, 1});
  const auto& t = conj_tail(i, j);
  w.insert(w.end(), t.begin(), t.end());
  return w;
}

// Collection from the left.  State: a normal form r plus a stack of pending
// letters (top = next).  Invariant: the group element r * (pending letters)
// never changes.  Consuming a letter g_k^e either lands in a clean suffix
// (exponent bump with a power-relation carry) or moves one copy of g_k past
// the nonzero suffix of r, replacing the suffix by its conjugate under g_k.
void PcPresentation::consume(Element& r, std::vector<std::pair<std::int16_t, std::int16_t>>& stk) const {
  auto push_word_reversed = [&](const NormalWord& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      stk.emplace_back(static_cast<std::int16_t>(it->gen), static_cast<std::int16_t>(it->exp));
  };
  while (!stk.empty()) {
    auto [k16, e16] = stk.back();
    stk.pop_back();
    const int k = k16;
    int e = e16;
    if (e == 0) continue;
    bool clean = true;
    for (int m = k + 1; m <= n_; ++m)
      if (r.exp(m)) {
        clean = false;
        break;
      }
    if (clean) {
      int t = r.exp(k) + e;
      if (t < p_) {
        r.set_exp(k, t);
      } else {
        r.set_exp(k, t - p_);
        push_word_reversed(power_rhs(k));
      }
      continue;
    }
    // r = P * g_k^{v_k} * S with S != 1; rewrite S*g_k^e = g_k * S^{g_k} * g_k^{e-1}.
    if (e > 1) stk.emplace_back(static_cast<std::int16_t>(k), static_cast<std::int16_t>(e - 1));
    for (int m = n_; m > k; --m) {
      int c = r.exp(m);
      if (!c) continue;
      r.set_exp(m, 0);
      const NormalWord& tail = conj_tail(k, m);
      if (tail.empty()) {
        stk.emplace_back(static_cast<std::int16_t>(m), static_cast<std::int16_t>(c));
      } else {
        for (int rep = 0; rep < c; ++rep) {
          push_word_reversed(tail);
          stk.emplace_back(static_cast<std::int16_t>(m), static_cast<std::int16_t>(1));
        }
      }
    }
    int t = r.exp(k) + 1;
    if (t < p_) {
      r.set_exp(k, t);
    } else {
      r.set_exp(k, 0);
      push_word_reversed(power_rhs(k));  // consumed before the conjugated suffix
    }
  }
}

Element PcPresentation::collect(const Word& w) const {
  // Normalize arbitrary exponents: g^E = g^{E mod p} * (g^p)^{E div p}.
  std::vector<std::pair<std::int16_t, std::int16_t>> seq;
  for (auto [g, E] : w.letters) {
    if (g < 1 || g > n_) throw input_error("collect: generator index out of range");
    long long rmod = ((E % p_) + p_) % p_;
    long long q = (E - rmod) / p_;
    if (rmod > 0) seq.emplace_back(static_cast<std::int16_t>(g), static_cast<std::int16_t>(rmod));
    if (q != 0) {
      Element pw = identity();
      for (const auto& f : power_rhs(g)) pw.set_exp(f.gen, f.exp);  // stored rhs is normal
      Element pq = maxclass::power(pw, q);
      for (int i = 1; i <= n_; ++i)
        if (pq.exp(i))
          seq.emplace_back(static_cast<std::int16_t>(i), static_cast<std::int16_t>(pq.exp(i)));
    }
  }
  Element r = identity();
  std::vector<std::pair<std::int16_t, std::int16_t>> stk(seq.rbegin(), seq.rend());
  consume(r, stk);
  return r;
}

Element multiply(const Element& a, const Element& b) {
  if (!a.pres || a.pres != b.pres) throw input_error("multiply: mixed presentations");
  const PcPresentation& P = *a.pres;
  Element r = a;
  std::vector<std::pair<std::int16_t, std::int16_t>> stk;
  for (int i = P.ngens(); i >= 1; --i)
    if (b.exp(i)) stk.emplace_back(static_cast<std::int16_t>(i), static_cast<std::int16_t>(b.exp(i)));
  P.consume(r, stk);
  return r;
}

Element invert(const Element& a) {
  if (!a.pres) throw input_error("invert: null element");
  const PcPresentation& P = *a.pres;
  const int p = P.prime();
  Element r = a;
  Element inv = P.identity();
  for (int i = 1; i <= P.ngens(); ++i) {
    int c = r.exp(i);
    if (!c) continue;
    Element t = P.collect(Word{{i, p - c}});
    r = multiply(t, r);     // kills position i, fixes positions below
    inv = multiply(t, inv);
  }
  return inv;
}

Element power(const Element& a, long long k) {
  if (!a.pres) throw input_error("power: null element");
  if (k < 0) return power(invert(a), -k);
  Element r = a.pres->identity();
  Element base = a;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1ull) r = multiply(r, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return r;
}

Element conjugate(const Element& a, const Element& g) {
  return multiply(multiply(invert(g), a), g);
}

Element commutator(const Element& a, const Element& b) {
  return multiply(invert(multiply(b, a)), multiply(a, b));
}

std::int64_t element_order(const Element& a) {
  if (!a.pres) throw input_error("element_order: null element");
  std::int64_t ord = 1;
  Element x = a;
  for (int it = 0; it <= a.pres->ngens(); ++it) {
    if (x.is_identity()) return ord;
    x = power(x, a.pres->prime());
    ord *= a.pres->prime();
  }
  throw std::logic_error("element_order: order exceeds group order (inconsistent presentation?)");
}

Word to_word(const Element& a) {
  Word w;
  if (!a.pres) return w;
  for (int i = 1; i <= a.pres->ngens(); ++i)
    if (a.exp(i)) w.append(i, a.exp(i));
  return w;
}

ConsistencyReport PcPresentation::consistency_check() const {
  ConsistencyReport rep;
  auto add_failure = [&](std::string what, const Element& l, const Element& r) {
    rep.pass = false;
    rep.failures.push_back({std::move(what), to_string(l), to_string(r)});
  };
  auto gen = [&](int i) { return generator(i); };
  auto pw = [&](int i) {
    Element e = identity();
    for (const auto& f : power_rhs(i)) e.set_exp(f.gen, f.exp);
    return e;
  };
  // Associativity overlaps g_k (g_j g_i) = (g_k g_j) g_i for k > j > i.
  for (int k = 3; k <= n_; ++k)
    for (int j = 2; j < k; ++j)
      for (int i = 1; i < j; ++i) {
        Element lhs = multiply(gen(k), multiply(gen(j), gen(i)));
        Element rhs = multiply(multiply(gen(k), gen(j)), gen(i));
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "g" << k << "*(g" << j << "*g" << i << ") vs (g" << k << "*g" << j << ")*g" << i;
          add_failure(os.str(), lhs, rhs);
        }
      }
  // Power overlaps.
  for (int j = 2; j <= n_; ++j)
    for (int i = 1; i < j; ++i) {
      {
        Element lhs = multiply(pw(j), gen(i));
        Element rhs = multiply(power(gen(j), p_ - 1), multiply(gen(j), gen(i)));
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "g" << j << "^p*g" << i << " vs g" << j << "^(p-1)*(g" << j << "*g" << i << ")";
          add_failure(os.str(), lhs, rhs);
        }
      }
      {
        Element lhs = multiply(gen(j), pw(i));
        Element rhs = multiply(multiply(gen(j), gen(i)), power(gen(i), p_ - 1));
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "g" << j << "*g" << i << "^p vs (g" << j << "*g" << i << ")*g" << i << "^(p-1)";
          add_failure(os.str(), lhs, rhs);
        }
      }
    }
  for (int i = 1; i <= n_; ++i) {
    Element lhs = multiply(pw(i), gen(i));
    Element rhs = multiply(gen(i), pw(i));
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "g" << i << "^p*g" << i << " vs g" << i << "*g" << i << "^p";
      add_failure(os.str(), lhs, rhs);
    }
  }
  return rep;
}

}  // namespace maxclass
