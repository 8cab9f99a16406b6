#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace lss::lp {

enum class Status { Optimal, Unbounded };

template <class Scalar>
struct Solution {
  Status status = Status::Optimal;
  Scalar value{};
  std::vector<Scalar> x;
};

// Dense tableau simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0,
// so the slack basis is feasible and no phase one is needed. Pivoting uses
// Bland's rule, which terminates without cycling. Scalar must be an exact
// field type for the result to be meaningful.
template <class Scalar>
Solution<Scalar> maximize(const std::vector<std::vector<Scalar>>& a, const std::vector<Scalar>& b,
                          const std::vector<Scalar>& c) {
  const std::size_t rows = a.size();
  const std::size_t cols = c.size();
  const std::size_t width = cols + rows + 1;  // structural | slack | rhs
  std::vector<std::vector<Scalar>> t(rows + 1, std::vector<Scalar>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    assert(a[i].size() == cols);
    assert(!(b[i] < Scalar{}));
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = Scalar(1);
    t[i][width - 1] = b[i];
    basis[i] = cols + i;
  }
  // Objective row holds reduced costs c_j - z_j.
  for (std::size_t j = 0; j < cols; ++j) t[rows][j] = c[j];

  const Scalar zero{};
  Solution<Scalar> out;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (zero < t[rows][j]) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Scalar best{};
    for (std::size_t i = 0; i < rows; ++i) {
      if (!(zero < t[i][enter])) continue;
      Scalar ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) {
      out.status = Status::Unbounded;
      return out;
    }

    Scalar pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || t[i][enter] == zero) continue;
      Scalar factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != zero) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  out.x.assign(cols, Scalar{});
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) out.x[basis[i]] = t[i][width - 1];
  out.value = Scalar{};
  for (std::size_t j = 0; j < cols; ++j) out.value += c[j] * out.x[j];
  return out;
}

// Same problem with integer data, solved by fraction-free (Bareiss) pivoting:
// the tableau stays integral and every entry is its rational value times the
// last pivot. Returns nullopt if an intermediate would overflow Int.
template <class Int>
struct IntegerSolution {
  Status status = Status::Optimal;
  std::vector<Int> x;  // numerators over denominator
  Int denominator = 1;
};

template <class Int>
std::optional<IntegerSolution<Int>> maximize_integer(const std::vector<std::vector<long long>>& a,
                                                     const std::vector<long long>& b,
                                                     const std::vector<long long>& c) {
  const std::size_t rows = a.size();
  const std::size_t cols = c.size();
  const std::size_t width = cols + rows + 1;
  std::vector<Int> cells((rows + 1) * width, 0);
  auto t = [&](std::size_t r) { return cells.data() + r * width; };
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    assert(b[i] >= 0);
    for (std::size_t j = 0; j < cols; ++j) t(i)[j] = a[i][j];
    t(i)[cols + i] = 1;
    t(i)[width - 1] = b[i];
    basis[i] = cols + i;
  }
  for (std::size_t j = 0; j < cols; ++j) t(rows)[j] = c[j];

  Int d = 1;
  IntegerSolution<Int> out;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t(rows)[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t(i)[enter] <= 0) continue;
      if (leave == rows) {
        leave = i;
        continue;
      }
      Int lhs, rhs;
      if (__builtin_mul_overflow(t(i)[width - 1], t(leave)[enter], &lhs) ||
          __builtin_mul_overflow(t(leave)[width - 1], t(i)[enter], &rhs))
        return std::nullopt;
      if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
    }
    if (leave == rows) {
      out.status = Status::Unbounded;
      return out;
    }

    const Int p = t(leave)[enter];
    const Int* pivot_row = t(leave);
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      Int* row = t(i);
      const Int f = row[enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (f == 0 || pivot_row[j] == 0) {
          if (row[j] == 0 || p == d) continue;
          Int u;
          if (__builtin_mul_overflow(p, row[j], &u)) return std::nullopt;
          row[j] = u / d;
          continue;
        }
        Int u, v, w;
        if (__builtin_mul_overflow(p, row[j], &u) || __builtin_mul_overflow(f, pivot_row[j], &v) ||
            __builtin_sub_overflow(u, v, &w))
          return std::nullopt;
        row[j] = w / d;
      }
    }
    d = p;
    basis[leave] = enter;
  }

  out.x.assign(cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) out.x[basis[i]] = t(i)[width - 1];
  out.denominator = d;
  return out;
}

}  // namespace lss::lp
