#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lss/graph.hpp"
#include "lss/limits.hpp"
#include "lss/rational.hpp"
#include "lss/tpmd.hpp"

namespace lss {

// x_{vertex,layer}
struct Variable {
  Vertex vertex = 0;
  int layer = 0;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::map<Variable, int> exponents);
  static Monomial product(Variable a, Variable b);

  const std::map<Variable, int>& exponents() const { return exponents_; }
  int degree() const;
  int exponent(Variable x) const;
  bool squarefree() const;
  bool coprime(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::map<Variable, int> exponents_;
};

class Polynomial {
 public:
  void add_term(const Monomial& m, const BigInt& coefficient);

  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, BigInt> terms_;
};

// One polynomial per edge in canonical edge order.
std::vector<Polynomial> lss_generators(const Graph& g, int d);
std::vector<Polynomial> twisted_lss_generators(const Graph& g, int d);

// Degree first, then the weight vectors w_1, w_2, ... in turn (larger
// weight wins), then graded reverse lexicographic order over variables
// sorted by (vertex, layer) with x_{1,1} largest.
class TermOrder {
 public:
  TermOrder(int d, std::vector<std::map<Variable, Rational>> weight_layers);

  int d() const { return d_; }
  const std::vector<std::map<Variable, Rational>>& weight_layers() const { return weights_; }
  Rational weight(std::size_t q, const Monomial& m) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  int d_;
  std::vector<std::map<Variable, Rational>> weights_;
};

// Weight q is the stage-q certificate placed on layers 2q-1 and 2q.
// Throws DimensionMismatch when d is smaller than the number of stages or
// the certificates do not match the decomposition.
TermOrder build_term_order(const Graph& g, const TwistedDecomposition& td,
                           const std::vector<TwistedWeightCertificate>& certs, int d);

// Throws ZeroPolynomial.
Monomial leading_term(const Polynomial& poly, const TermOrder& order);

// x_{i,2q-1} x_{j,2q} for {i,j} in the odd part of stage q,
// x_{i,2q} x_{j,2q-1} for the even part.
Monomial expected_leading_term(const TwistedDecomposition& td, const Edge& e);

struct LeadingTermReport {
  int d = 0;
  int stages = 0;
  TwistedDecomposition decomposition;
  std::vector<TwistedWeightCertificate> certificates;
  std::vector<Monomial> leading_terms;  // canonical edge order
  bool coprime = true;
  bool squarefree_quadratic = true;
  bool matches_closed_form = true;
  std::string detail;
  bool ok() const { return coprime && squarefree_quadratic && matches_closed_form; }
};

LeadingTermReport check_leading_terms(const Graph& g, int d, const TwistedDecomposition& td,
                                      const std::vector<TwistedWeightCertificate>& certs);
// Runs the exact tpmd search and checks its witness. Throws SizeLimit, and
// DimensionMismatch when d < tpmd(g).
LeadingTermReport verify_coprime_leading_terms(const Graph& g, int d, const SearchLimits& limits = kTpmdLimits);

std::string to_string(const Variable& x);
std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);

}  // namespace lss
