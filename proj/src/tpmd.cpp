#include "lss/tpmd.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "lss/error.hpp"

namespace lss {

namespace {

std::string edge_text(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

bool is_matching(const Matching& m) {
  for (std::size_t a = 0; a < m.edges.size(); ++a)
    for (std::size_t b = a + 1; b < m.edges.size(); ++b)
      if (m.edges[a].shares_vertex(m.edges[b])) return false;
  return true;
}

void require_stage(const TwistedDecomposition& td, int q) {
  if (q < 1 || q > td.stages())
    throw Error(ErrorCode::StageOutOfRange,
                "stage " + std::to_string(q) + " outside 1.." + std::to_string(td.stages()));
}

std::vector<Edge> later_edges(const Graph& g, const TwistedDecomposition& td, int q) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    bool earlier = false;
    for (int s = 0; s < q && !earlier; ++s)
      earlier = td.pairs[s].odd.contains(e) || td.pairs[s].even.contains(e);
    if (!earlier) out.push_back(e);
  }
  return out;
}

}  // namespace

DecompositionCheck check_twisted_decomposition(const Graph& g, const TwistedDecomposition& td) {
  auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };
  std::vector<Edge> all;
  for (std::size_t q = 0; q < td.pairs.size(); ++q) {
    const auto& [odd, even] = td.pairs[q];
    const std::string label = "stage " + std::to_string(q + 1);
    if (!is_matching(odd)) return fail(label + ": odd part is not a matching");
    if (!is_matching(even)) return fail(label + ": even part is not a matching");
    for (const auto& e : odd.edges) {
      for (const auto& f : even.edges) {
        if (f.v == e.u) return fail(label + ": even edge " + edge_text(f) + " ends at " + std::to_string(e.u) +
                                    ", the smaller end of odd edge " + edge_text(e));
        if (f.u == e.v) return fail(label + ": even edge " + edge_text(f) + " starts at " + std::to_string(e.v) +
                                    ", the larger end of odd edge " + edge_text(e));
      }
    }
    all.insert(all.end(), odd.edges.begin(), odd.edges.end());
    all.insert(all.end(), even.edges.begin(), even.edges.end());
  }
  for (const auto& e : all)
    if (!g.has_edge(e.u, e.v)) return fail("edge " + edge_text(e) + " is not in the graph");
  std::sort(all.begin(), all.end());
  if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end())
    return fail("edge " + edge_text(*dup) + " appears in two parts");
  if (static_cast<int>(all.size()) != g.edge_count()) return fail("parts do not cover every edge");
  return {};
}

HqGraph build_hq(const Graph& g, const TwistedDecomposition& td, int q) {
  require_stage(td, q);
  HqGraph h;
  h.stage = q;
  h.n = g.n();
  const int lo = 2 * q - 1, hi = 2 * q;
  for (const auto& e : td.pairs[q - 1].odd.edges) h.matched_edges.push_back({{e.u, lo}, {e.v, hi}});
  for (const auto& e : td.pairs[q - 1].even.edges) h.matched_edges.push_back({{e.v, lo}, {e.u, hi}});
  std::sort(h.matched_edges.begin(), h.matched_edges.end());
  return h;
}

SignSystem stage_system(int n, const Matching& odd, const Matching& even, const std::vector<Edge>& later) {
  SignSystem s;
  s.vertex_count = 2 * n;
  for (const auto& e : odd.edges) {
    s.positive.push_back({e.u, n + e.v});
    s.negative.push_back({e.v, n + e.u});
  }
  for (const auto& e : even.edges) {
    s.positive.push_back({e.v, n + e.u});
    s.negative.push_back({e.u, n + e.v});
  }
  for (const auto& e : later) {
    s.negative.push_back({e.u, n + e.v});
    s.negative.push_back({e.v, n + e.u});
  }
  return s;
}

SignSystem stage_system(const Graph& g, const TwistedDecomposition& td, int q) {
  require_stage(td, q);
  const auto& pair = td.pairs[q - 1];
  return stage_system(g.n(), pair.odd, pair.even, later_edges(g, td, q));
}

std::optional<TwistedWeightCertificate> twisted_mapping_feasible(const Graph& g, const TwistedDecomposition& td,
                                                                 int q) {
  auto w = solve_sign_system(stage_system(g, td, q));
  if (!w) return std::nullopt;
  TwistedWeightCertificate cert;
  cert.stage = q;
  cert.odd.assign(w->begin(), w->begin() + g.n() + 1);
  cert.even.assign(g.n() + 1, Rational{});
  for (Vertex i = 1; i <= g.n(); ++i) cert.even[i] = (*w)[g.n() + i];
  return cert;
}

bool twisted_stage_positive(const Graph& g, const TwistedDecomposition& td, int q) {
  return !has_alternating_cycle(stage_system(g, td, q));
}

std::string twisted_certificate_violation(const Graph& g, const TwistedDecomposition& td, int q,
                                          const TwistedWeightCertificate& cert) {
  const int n = g.n();
  if (static_cast<int>(cert.odd.size()) != n + 1 || static_cast<int>(cert.even.size()) != n + 1)
    return "certificate does not cover every vertex of both layers";
  std::vector<Rational> flat(2 * n + 1);
  for (Vertex i = 1; i <= n; ++i) {
    flat[i] = cert.odd[i];
    flat[n + i] = cert.even[i];
  }
  SignSystem s = stage_system(g, td, q);
  const int lo = 2 * q - 1, hi = 2 * q;
  auto name = [&](Vertex x) {
    return x <= n ? std::to_string(x) + "_" + std::to_string(lo) : std::to_string(x - n) + "_" + std::to_string(hi);
  };
  for (const auto& e : s.positive) {
    Rational sum = flat[e.u] + flat[e.v];
    if (!(sum > 0)) return "w(" + name(e.u) + ") + w(" + name(e.v) + ") = " + to_string(sum) + " is not > 0";
  }
  for (const auto& e : s.negative) {
    Rational sum = flat[e.u] + flat[e.v];
    if (!(sum < 0)) return "w(" + name(e.u) + ") + w(" + name(e.v) + ") = " + to_string(sum) + " is not < 0";
  }
  return {};
}

namespace {

using Mask = std::uint64_t;

class TpmdSearch {
 public:
  TpmdSearch(const Graph& g, const StageObserver& observer)
      : g_(g), n_(g.n()), m_(g.edge_count()), incident_(g.n() + 1, 0), observer_(observer) {
    for (int k = 0; k < m_; ++k) {
      incident_[g.edges()[k].u] |= Mask{1} << k;
      incident_[g.edges()[k].v] |= Mask{1} << k;
    }
  }

  std::vector<std::pair<Mask, Mask>> run() {
    Mask all = m_ == 64 ? ~Mask{0} : (Mask{1} << m_) - 1;
    std::vector<std::pair<Mask, Mask>> stages;
    if (all == 0) return stages;
    for (int k = std::max(1, (max_deg(all) + 1) / 2);; ++k) {
      stages.clear();
      if (solve(all, k, stages)) {
        std::reverse(stages.begin(), stages.end());
        return stages;
      }
    }
  }

 private:
  int max_deg(Mask r) const {
    int best = 0;
    for (int v = 1; v <= n_; ++v) best = std::max(best, __builtin_popcountll(r & incident_[v]));
    return best;
  }

  // Stage feasibility with odd part a, even part b and negative-only edges
  // `later`, via the walk criterion on the doubled vertex set.
  bool feasible(Mask a, Mask b, Mask later) const {
    int mate[129] = {};
    auto pos = [&](int x, int y) {
      mate[x] = y;
      mate[y] = x;
    };
    for (Mask t = a; t; t &= t - 1) {
      const Edge& e = g_.edges()[__builtin_ctzll(t)];
      pos(e.u, n_ + e.v);
    }
    for (Mask t = b; t; t &= t - 1) {
      const Edge& e = g_.edges()[__builtin_ctzll(t)];
      pos(e.v, n_ + e.u);
    }
    Mask succ[129] = {};
    Mask alive = 0;
    auto neg = [&](int x, int y) {
      if (!mate[x] || !mate[y]) return;
      succ[x] |= Mask{1} << (mate[y] - 1);
      succ[y] |= Mask{1} << (mate[x] - 1);
      alive |= Mask{1} << (x - 1) | Mask{1} << (y - 1);
    };
    for (Mask t = a; t; t &= t - 1) {
      const Edge& e = g_.edges()[__builtin_ctzll(t)];
      neg(e.v, n_ + e.u);
    }
    for (Mask t = b; t; t &= t - 1) {
      const Edge& e = g_.edges()[__builtin_ctzll(t)];
      neg(e.u, n_ + e.v);
    }
    for (Mask t = later; t; t &= t - 1) {
      const Edge& e = g_.edges()[__builtin_ctzll(t)];
      neg(e.u, n_ + e.v);
      neg(e.v, n_ + e.u);
    }
    bool changed = true;
    while (changed && alive) {
      changed = false;
      for (Mask rest = alive; rest; rest &= rest - 1) {
        int x = __builtin_ctzll(rest) + 1;
        if ((succ[x] & alive) == 0) {
          alive &= ~(Mask{1} << (x - 1));
          changed = true;
        }
      }
    }
    return alive == 0;
  }

  bool full_stage(Mask a, Mask b, Mask later) const {
    bool ok = feasible(a, b, later);
    if (observer_) observer_(stage_system(n_, to_matching(a), to_matching(b), to_edges(later)), ok);
    return ok;
  }

  Matching to_matching(Mask m) const { return Matching(to_edges(m)); }
  std::vector<Edge> to_edges(Mask m) const {
    std::vector<Edge> out;
    for (Mask t = m; t; t &= t - 1) out.push_back(g_.edges()[__builtin_ctzll(t)]);
    return out;
  }

  struct Partial {
    Mask a = 0, b = 0, later = 0;
    Mask a_cover = 0, b_cover = 0;   // vertices used by each part
    Mask a_small = 0, a_big = 0;     // smaller / larger endpoints of odd edges
    Mask b_small = 0, b_big = 0;     // smaller / larger endpoints of even edges
  };

  static Mask bit(int v) { return Mask{1} << (v - 1); }

  bool can_add_odd(const Partial& s, const Edge& e) const {
    return !(s.a_cover & (bit(e.u) | bit(e.v))) && !(s.b_big & bit(e.u)) && !(s.b_small & bit(e.v));
  }
  bool can_add_even(const Partial& s, const Edge& e) const {
    return !(s.b_cover & (bit(e.u) | bit(e.v))) && !(s.a_small & bit(e.v)) && !(s.a_big & bit(e.u));
  }
  static void add_odd(Partial& s, int k, const Edge& e) {
    s.a |= Mask{1} << k;
    s.a_cover |= bit(e.u) | bit(e.v);
    s.a_small |= bit(e.u);
    s.a_big |= bit(e.v);
  }
  static void add_even(Partial& s, int k, const Edge& e) {
    s.b |= Mask{1} << k;
    s.b_cover |= bit(e.u) | bit(e.v);
    s.b_small |= bit(e.u);
    s.b_big |= bit(e.v);
  }

  // Enumerates stage pairs of residual r that are feasible and cannot absorb
  // another residual edge; stops when visit returns true.
  template <class Visit>
  bool for_each_stage(Mask r, Visit&& visit) const {
    std::vector<int> order;
    for (Mask t = r; t; t &= t - 1) order.push_back(__builtin_ctzll(t));
    auto rec = [&](auto&& self, std::size_t pos, const Partial& s) -> bool {
      if (pos == order.size()) {
        if ((s.a | s.b) == 0) return false;
        if (!full_stage(s.a, s.b, s.later)) return false;
        for (int k : order) {
          Mask kb = Mask{1} << k;
          if (!(s.later & kb)) continue;
          const Edge& e = g_.edges()[k];
          if (can_add_odd(s, e) && full_stage(s.a | kb, s.b, s.later & ~kb)) return false;
          if (can_add_even(s, e) && full_stage(s.a, s.b | kb, s.later & ~kb)) return false;
        }
        return visit(s.a, s.b);
      }
      int k = order[pos];
      const Edge& e = g_.edges()[k];
      if (can_add_odd(s, e)) {
        Partial next = s;
        add_odd(next, k, e);
        if (feasible(next.a, next.b, next.later) && self(self, pos + 1, next)) return true;
      }
      if (can_add_even(s, e)) {
        Partial next = s;
        add_even(next, k, e);
        if (feasible(next.a, next.b, next.later) && self(self, pos + 1, next)) return true;
      }
      Partial next = s;
      next.later |= Mask{1} << k;
      return feasible(next.a, next.b, next.later) && self(self, pos + 1, next);
    };
    return rec(rec, 0, Partial{});
  }

  const std::vector<std::pair<Mask, Mask>>& stages_of(Mask r) {
    auto it = stage_cache_.find(r);
    if (it != stage_cache_.end()) return it->second;
    std::vector<std::pair<Mask, Mask>> list;
    for_each_stage(r, [&](Mask a, Mask b) {
      list.emplace_back(a, b);
      return false;
    });
    return stage_cache_.emplace(r, std::move(list)).first->second;
  }

  bool solve(Mask r, int k, std::vector<std::pair<Mask, Mask>>& stages) {
    if (r == 0) return true;
    if (k == 0 || (max_deg(r) + 1) / 2 > k) return false;
    if (auto it = failed_.find(r); it != failed_.end() && it->second >= k) return false;
    for (auto [a, b] : stages_of(r)) {
      if (solve(r & ~(a | b), k - 1, stages)) {
        stages.emplace_back(a, b);
        return true;
      }
    }
    int& slot = failed_[r];
    slot = std::max(slot, k);
    return false;
  }

  const Graph& g_;
  int n_;
  int m_;
  std::vector<Mask> incident_;
  const StageObserver& observer_;
  std::unordered_map<Mask, int> failed_;
  std::unordered_map<Mask, std::vector<std::pair<Mask, Mask>>> stage_cache_;
};

}  // namespace

TpmdResult tpmd_exact(const Graph& g, const SearchLimits& limits, const StageObserver& observer) {
  if (g.n() > limits.max_n || g.edge_count() > limits.max_edges || g.n() > 32 || g.edge_count() > 64)
    throw Error(ErrorCode::SizeLimit, "exact tpmd search is capped at n <= " + std::to_string(limits.max_n) +
                                          ", |E| <= " + std::to_string(limits.max_edges));
  TpmdSearch search(g, observer);
  TpmdResult result;
  for (auto [a, b] : search.run()) {
    StagePair pair;
    for (Mask t = a; t; t &= t - 1) pair.odd.edges.push_back(g.edges()[__builtin_ctzll(t)]);
    for (Mask t = b; t; t &= t - 1) pair.even.edges.push_back(g.edges()[__builtin_ctzll(t)]);
    result.has_empty_odd_stage = result.has_empty_odd_stage || pair.odd.empty();
    result.witness.pairs.push_back(std::move(pair));
  }
  result.p = result.witness.stages();
  for (int q = 1; q <= result.p; ++q) {
    auto cert = twisted_mapping_feasible(g, result.witness, q);
    if (!cert) throw std::logic_error("LP rejected a stage accepted by the walk criterion");
    result.certificates.push_back(std::move(*cert));
  }
  return result;
}

TwistedFromPmd tpmd_from_pmd(const Graph& g, const PmDecomposition& pm) {
  TwistedFromPmd out;
  for (std::size_t q = 0; q < pm.parts.size(); ++q) {
    if (q >= pm.certificates.size() || !pm.certificates[q])
      throw Error(ErrorCode::MissingCertificate, "part " + std::to_string(q + 1) + " has no weight function");
    const auto& w = pm.certificates[q]->weights;
    Rational top = w.size() > 1 ? *std::max_element(w.begin() + 1, w.end()) : Rational{0};
    Rational low = -(top + 1);
    TwistedWeightCertificate cert;
    cert.stage = static_cast<int>(q + 1);
    cert.odd.assign(g.n() + 1, low);
    cert.even.assign(g.n() + 1, low);
    cert.odd[0] = cert.even[0] = 0;
    for (const auto& e : pm.parts[q].edges) {
      cert.odd[e.u] = w[e.u];
      cert.even[e.v] = w[e.v];
    }
    out.decomposition.pairs.push_back({pm.parts[q], Matching{}});
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

}  // namespace lss
