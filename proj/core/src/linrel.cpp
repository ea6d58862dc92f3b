#include "hypcat/linrel.hpp"

#include <algorithm>

namespace hypcat {

Mat rref(Mat a) {
  if (a.empty()) return a;
  std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    Rat inv = 1 / a[row][col];
    for (Rat& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat factor = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= factor * a[row][c];
    }
    ++row;
  }
  a.resize(row);
  for (auto& r : a)
    for (Rat& v : r) v.canonicalize();
  return a;
}

Mat null_space(const Mat& a, int cols) {
  Mat r = rref(a);
  std::vector<int> pivot_col(r.size());
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < r.size(); ++i) {
    int c = 0;
    while (r[i][c] == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Mat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) v[pivot_col[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

LinRel linrel_make(int m, int n, Mat rows) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != m + n)
      throw DimensionMismatch("linrel: row length " + std::to_string(r.size()) +
                              " does not match ambient dimension " +
                              std::to_string(m + n));
  return LinRel{m, n, rref(std::move(rows))};
}

bool linrel_equal(const LinRel& r, const LinRel& s) { return r == s; }

LinRel linrel_compose(const LinRel& r, const LinRel& s) {
  if (r.n != s.m)
    throw DimensionMismatch("linrel compose: inner dimensions " +
                            std::to_string(r.n) + " and " +
                            std::to_string(s.m) + " differ");
  int k = r.n;
  int r1 = static_cast<int>(r.basis.size());
  int r2 = static_cast<int>(s.basis.size());
  // Coefficients (alpha, beta) of rows of r and s span the composite's
  // parameter space; the shared middle coordinates must agree.
  Mat constraints(k, std::vector<Rat>(r1 + r2, 0));
  for (int t = 0; t < k; ++t) {
    for (int i = 0; i < r1; ++i) constraints[t][i] = r.basis[i][r.m + t];
    for (int j = 0; j < r2; ++j) constraints[t][r1 + j] = -s.basis[j][t];
  }
  Mat params = null_space(constraints, r1 + r2);
  Mat rows;
  rows.reserve(params.size());
  for (const auto& ab : params) {
    std::vector<Rat> row(r.m + s.n, 0);
    for (int i = 0; i < r1; ++i)
      for (int c = 0; c < r.m; ++c) row[c] += ab[i] * r.basis[i][c];
    for (int j = 0; j < r2; ++j)
      for (int c = 0; c < s.n; ++c)
        row[r.m + c] += ab[r1 + j] * s.basis[j][s.m + c];
    rows.push_back(std::move(row));
  }
  return linrel_make(r.m, s.n, std::move(rows));
}

LinRel linrel_tensor(const LinRel& r, const LinRel& s) {
  Mat rows;
  rows.reserve(r.basis.size() + s.basis.size());
  int m = r.m + s.m;
  int n = r.n + s.n;
  for (const auto& v : r.basis) {
    std::vector<Rat> row(m + n, 0);
    for (int c = 0; c < r.m; ++c) row[c] = v[c];
    for (int c = 0; c < r.n; ++c) row[m + c] = v[r.m + c];
    rows.push_back(std::move(row));
  }
  for (const auto& v : s.basis) {
    std::vector<Rat> row(m + n, 0);
    for (int c = 0; c < s.m; ++c) row[r.m + c] = v[c];
    for (int c = 0; c < s.n; ++c) row[m + r.n + c] = v[s.m + c];
    rows.push_back(std::move(row));
  }
  return linrel_make(m, n, std::move(rows));
}

LinRel linrel_identity(int n) {
  Mat rows(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    rows[i][i] = 1;
    rows[i][n + i] = 1;
  }
  return linrel_make(n, n, std::move(rows));
}

LinRel linrel_swap(int a, int b) {
  Mat rows(a + b, std::vector<Rat>(2 * (a + b), 0));
  for (int i = 0; i < a; ++i) {
    rows[i][i] = 1;
    rows[i][a + b + b + i] = 1;
  }
  for (int j = 0; j < b; ++j) {
    rows[a + j][a + j] = 1;
    rows[a + j][a + b + j] = 1;
  }
  return linrel_make(a + b, a + b, std::move(rows));
}

LinRel linrel_frobenius(LinStructure s, Frob kind, int n) {
  Mat rows;
  auto row = [&](int len) { return std::vector<Rat>(len, 0); };
  switch (kind) {
    case Frob::mu:
      // 2n -> n; copy: a_i = b_i = c_i, add: a_i + b_i = c_i.
      for (int i = 0; i < n; ++i) {
        if (s == LinStructure::copy) {
          auto v = row(3 * n);
          v[i] = 1;
          v[n + i] = 1;
          v[2 * n + i] = 1;
          rows.push_back(std::move(v));
        } else {
          auto v1 = row(3 * n);
          v1[i] = 1;
          v1[2 * n + i] = 1;
          rows.push_back(std::move(v1));
          auto v2 = row(3 * n);
          v2[n + i] = 1;
          v2[2 * n + i] = 1;
          rows.push_back(std::move(v2));
        }
      }
      return linrel_make(2 * n, n, std::move(rows));
    case Frob::delta:
      // n -> 2n; copy: a_i = b_i = c_i, add: a_i = b_i + c_i.
      for (int i = 0; i < n; ++i) {
        if (s == LinStructure::copy) {
          auto v = row(3 * n);
          v[i] = 1;
          v[n + i] = 1;
          v[2 * n + i] = 1;
          rows.push_back(std::move(v));
        } else {
          auto v1 = row(3 * n);
          v1[i] = 1;
          v1[n + i] = 1;
          rows.push_back(std::move(v1));
          auto v2 = row(3 * n);
          v2[i] = 1;
          v2[2 * n + i] = 1;
          rows.push_back(std::move(v2));
        }
      }
      return linrel_make(n, 2 * n, std::move(rows));
    case Frob::eta:
    case Frob::eps:
      // 0 -> n or n -> 0; copy: the whole space, add: the zero subspace.
      if (s == LinStructure::copy) {
        for (int i = 0; i < n; ++i) {
          auto v = row(n);
          v[i] = 1;
          rows.push_back(std::move(v));
        }
      }
      return kind == Frob::eta ? linrel_make(0, n, std::move(rows))
                               : linrel_make(n, 0, std::move(rows));
  }
  throw Error("linrel_frobenius: bad kind");
}

LinRel linrel_random(int m, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> nrows(0, m + n);
  std::uniform_int_distribution<int> entry(-3, 3);
  Mat rows(nrows(rng), std::vector<Rat>(m + n));
  for (auto& r : rows)
    for (Rat& v : r) v = entry(rng);
  return linrel_make(m, n, std::move(rows));
}

std::string show(const LinRel& r) {
  std::string out =
      "LinRel " + std::to_string(r.m) + "->" + std::to_string(r.n) + " {";
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t c = 0; c < r.basis[i].size(); ++c) {
      if (c) out += ",";
      out += r.basis[i][c].get_str();
    }
  }
  return out + "}";
}

}  // namespace hypcat
