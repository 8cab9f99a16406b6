#include "lss/cas_export.hpp"

#include <algorithm>
#include <cctype>

#include "lss/error.hpp"

namespace lss {

Dialect parse_dialect(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "macaulay2" || lower == "m2") return Dialect::Macaulay2;
  if (lower == "singular") return Dialect::Singular;
  throw Error(ErrorCode::UnknownDialect, "unknown CAS dialect '" + std::string(name) + "'");
}

std::string_view dialect_name(Dialect d) { return d == Dialect::Macaulay2 ? "macaulay2" : "singular"; }

namespace {

std::string var(Dialect dialect, Vertex i, int k) {
  if (dialect == Dialect::Macaulay2) return "x_(" + std::to_string(i) + "," + std::to_string(k) + ")";
  return "x(" + std::to_string(i) + ")(" + std::to_string(k) + ")";
}

std::string generator(Dialect dialect, const Edge& e, int d, bool twisted) {
  std::string s;
  for (int l = 1; l <= d; ++l) {
    if (twisted) {
      if (l > 1) s += " + ";
      s += var(dialect, e.u, 2 * l - 1) + "*" + var(dialect, e.v, 2 * l) + " - " + var(dialect, e.u, 2 * l) + "*" +
           var(dialect, e.v, 2 * l - 1);
    } else {
      if (l > 1) s += " + ";
      s += var(dialect, e.u, l) + "*" + var(dialect, e.v, l);
    }
  }
  return s;
}

}  // namespace

std::string export_cas_script(const Graph& g, int d, bool twisted, Dialect dialect) {
  if (d < 1) throw Error(ErrorCode::BadParameter, "d must be at least 1");
  const int layers = twisted ? 2 * d : d;
  const int n = std::max(1, g.n());
  const std::string c = dialect == Dialect::Macaulay2 ? "-- " : "// ";
  std::string out;
  if (twisted) {
    out += c + "twisted LSS ideal, d = " + std::to_string(d) + "\n";
    out += c + "generator of edge {i,j}, i < j: sum over l = 1..d of x(i,2l-1)*x(j,2l) - x(i,2l)*x(j,2l-1)\n";
    out += c + "d = 1 gives the binomial edge ideal; in general the ring is isomorphic to a Pfaffian-type coordinate ring\n";
  } else {
    out += c + "LSS ideal, d = " + std::to_string(d) + "\n";
    out += c + "generator of edge {i,j}: sum over l = 1..d of x(i,l)*x(j,l)\n";
    out += c + "d = 1 gives the edge ideal; in general the ring is isomorphic to a determinantal-type coordinate ring\n";
  }
  out += c + "graph: n = " + std::to_string(g.n()) + ", edges:";
  if (g.edge_count() == 0) out += " none";
  for (const auto& e : g.edges()) out += " {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
  out += "\n";

  if (dialect == Dialect::Macaulay2) {
    out += "R = QQ[x_(1,1)..x_(" + std::to_string(n) + "," + std::to_string(layers) + ")];\n";
    if (g.edge_count() == 0) {
      out += "I = ideal(0_R);\n";
    } else {
      out += "I = ideal(\n";
      for (int k = 0; k < g.edge_count(); ++k)
        out += "  " + generator(dialect, g.edges()[k], d, twisted) + (k + 1 < g.edge_count() ? ",\n" : "\n");
      out += ");\n";
    }
    out += "print numgens I;\n";
    out += "print codim I;\n";
  } else {
    out += "ring R = 0, (x(1.." + std::to_string(n) + ")(1.." + std::to_string(layers) + ")), dp;\n";
    if (g.edge_count() == 0) {
      out += "ideal I = 0;\n";
    } else {
      out += "ideal I =\n";
      for (int k = 0; k < g.edge_count(); ++k)
        out += "  " + generator(dialect, g.edges()[k], d, twisted) + (k + 1 < g.edge_count() ? ",\n" : ";\n");
    }
    out += "print(size(I));\n";
    out += "print(nvars(R) - dim(std(I)));\n";
  }
  return out;
}

}  // namespace lss
