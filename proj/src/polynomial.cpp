#include "lss/polynomial.hpp"

#include <set>

#include "lss/error.hpp"

namespace lss {

Monomial::Monomial(std::map<Variable, int> exponents) : exponents_(std::move(exponents)) {
  std::erase_if(exponents_, [](const auto& kv) { return kv.second <= 0; });
}

Monomial Monomial::product(Variable a, Variable b) {
  std::map<Variable, int> e;
  ++e[a];
  ++e[b];
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  int total = 0;
  for (const auto& [x, k] : exponents_) total += k;
  return total;
}

int Monomial::exponent(Variable x) const {
  auto it = exponents_.find(x);
  return it == exponents_.end() ? 0 : it->second;
}

bool Monomial::squarefree() const {
  for (const auto& [x, k] : exponents_)
    if (k > 1) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (const auto& [x, k] : exponents_)
    if (other.exponents_.count(x)) return false;
  return true;
}

void Polynomial::add_term(const Monomial& m, const BigInt& coefficient) {
  BigInt& slot = terms_[m];
  slot += coefficient;
  if (slot == 0) terms_.erase(m);
}

std::vector<Polynomial> lss_generators(const Graph& g, int d) {
  if (d < 1) throw Error(ErrorCode::BadParameter, "d must be at least 1");
  std::vector<Polynomial> out;
  for (const auto& e : g.edges()) {
    Polynomial f;
    for (int l = 1; l <= d; ++l) f.add_term(Monomial::product({e.u, l}, {e.v, l}), 1);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Polynomial> twisted_lss_generators(const Graph& g, int d) {
  if (d < 1) throw Error(ErrorCode::BadParameter, "d must be at least 1");
  std::vector<Polynomial> out;
  for (const auto& e : g.edges()) {
    Polynomial f;
    for (int l = 1; l <= d; ++l) {
      f.add_term(Monomial::product({e.u, 2 * l - 1}, {e.v, 2 * l}), 1);
      f.add_term(Monomial::product({e.u, 2 * l}, {e.v, 2 * l - 1}), -1);
    }
    out.push_back(std::move(f));
  }
  return out;
}

TermOrder::TermOrder(int d, std::vector<std::map<Variable, Rational>> weight_layers)
    : d_(d), weights_(std::move(weight_layers)) {}

Rational TermOrder::weight(std::size_t q, const Monomial& m) const {
  Rational total = 0;
  const auto& w = weights_[q];
  for (const auto& [x, k] : m.exponents()) {
    auto it = w.find(x);
    if (it != w.end()) total += it->second * k;
  }
  return total;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t q = 0; q < weights_.size(); ++q) {
    Rational wa = weight(q, a), wb = weight(q, b);
    if (wa < wb) return std::strong_ordering::less;
    if (wa > wb) return std::strong_ordering::greater;
  }
  auto ia = a.exponents().rbegin(), ib = b.exponents().rbegin();
  auto ea = a.exponents().rend(), eb = b.exponents().rend();
  while (ia != ea || ib != eb) {
    // Next smallest variable present in either monomial.
    Variable x;
    if (ib == eb || (ia != ea && ib->first < ia->first))
      x = ia->first;
    else
      x = ib->first;
    int ka = (ia != ea && ia->first == x) ? ia->second : 0;
    int kb = (ib != eb && ib->first == x) ? ib->second : 0;
    if (ka != kb) return ka < kb ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ia != ea && ia->first == x) ++ia;
    if (ib != eb && ib->first == x) ++ib;
  }
  return std::strong_ordering::equal;
}

TermOrder build_term_order(const Graph& g, const TwistedDecomposition& td,
                           const std::vector<TwistedWeightCertificate>& certs, int d) {
  if (d < td.stages())
    throw Error(ErrorCode::DimensionMismatch,
                "d = " + std::to_string(d) + " is smaller than the " + std::to_string(td.stages()) + " stages");
  if (static_cast<int>(certs.size()) != td.stages())
    throw Error(ErrorCode::DimensionMismatch, "one certificate per stage is required");
  std::vector<std::map<Variable, Rational>> layers;
  for (int q = 1; q <= td.stages(); ++q) {
    const auto& c = certs[q - 1];
    if (static_cast<int>(c.odd.size()) != g.n() + 1 || static_cast<int>(c.even.size()) != g.n() + 1)
      throw Error(ErrorCode::DimensionMismatch, "certificate " + std::to_string(q) + " has the wrong vertex count");
    std::map<Variable, Rational> w;
    for (Vertex i = 1; i <= g.n(); ++i) {
      w[{i, 2 * q - 1}] = c.odd[i];
      w[{i, 2 * q}] = c.even[i];
    }
    layers.push_back(std::move(w));
  }
  return TermOrder(d, std::move(layers));
}

Monomial leading_term(const Polynomial& poly, const TermOrder& order) {
  if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : poly.terms())
    if (!best || order.less(*best, m)) best = &m;
  return *best;
}

Monomial expected_leading_term(const TwistedDecomposition& td, const Edge& e) {
  for (int q = 1; q <= td.stages(); ++q) {
    const auto& pair = td.pairs[q - 1];
    if (pair.odd.contains(e)) return Monomial::product({e.u, 2 * q - 1}, {e.v, 2 * q});
    if (pair.even.contains(e)) return Monomial::product({e.u, 2 * q}, {e.v, 2 * q - 1});
  }
  throw Error(ErrorCode::OutOfRange, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not in the decomposition");
}

LeadingTermReport check_leading_terms(const Graph& g, int d, const TwistedDecomposition& td,
                                      const std::vector<TwistedWeightCertificate>& certs) {
  LeadingTermReport r;
  r.d = d;
  r.stages = td.stages();
  r.decomposition = td;
  r.certificates = certs;
  TermOrder order = build_term_order(g, td, certs, d);
  auto gens = twisted_lss_generators(g, d);
  auto note = [&](const std::string& s) {
    if (r.detail.empty()) r.detail = s;
  };
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Monomial lt = leading_term(gens[k], order);
    const Edge& e = g.edges()[k];
    std::string label = "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
    if (!lt.squarefree() || lt.degree() != 2) {
      r.squarefree_quadratic = false;
      note("leading term of edge " + label + " is not a squarefree quadratic");
    }
    if (lt != expected_leading_term(td, e)) {
      r.matches_closed_form = false;
      note("leading term of edge " + label + " is " + to_string(lt) + ", expected " +
           to_string(expected_leading_term(td, e)));
    }
    for (std::size_t j = 0; j < r.leading_terms.size(); ++j) {
      if (!lt.coprime(r.leading_terms[j])) {
        r.coprime = false;
        note("leading terms of edges " + std::to_string(j + 1) + " and " + std::to_string(k + 1) +
             " share a variable");
      }
    }
    r.leading_terms.push_back(std::move(lt));
  }
  return r;
}

LeadingTermReport verify_coprime_leading_terms(const Graph& g, int d, const SearchLimits& limits) {
  TpmdResult t = tpmd_exact(g, limits);
  if (d < t.p)
    throw Error(ErrorCode::DimensionMismatch,
                "d = " + std::to_string(d) + " is below tpmd = " + std::to_string(t.p));
  return check_leading_terms(g, d, t.witness, t.certificates);
}

std::string to_string(const Variable& x) {
  return "x_(" + std::to_string(x.vertex) + "," + std::to_string(x.layer) + ")";
}

std::string to_string(const Monomial& m) {
  if (m.exponents().empty()) return "1";
  std::string s;
  for (const auto& [x, k] : m.exponents()) {
    if (!s.empty()) s += "*";
    s += to_string(x);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    BigInt mag = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1) s += mag.str() + "*";
    s += to_string(m);
  }
  return s;
}

}  // namespace lss
