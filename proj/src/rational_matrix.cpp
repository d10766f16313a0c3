#include "fiatcells/rational_matrix.hpp"

#include <stdexcept>

namespace fiatcells {

Matrix zero_matrix(std::size_t r, std::size_t c) { return Matrix(r, Vector(c, Rational(0))); }

Matrix identity_matrix(std::size_t n) {
  auto m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 1;
  }
  return m;
}

std::size_t rows(const Matrix& m) { return m.size(); }
std::size_t cols(const Matrix& m) { return m.empty() ? 0 : m.front().size(); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (cols(a) != rows(b) && !(a.empty() || b.empty())) {
    throw std::invalid_argument("matrix dimensions do not match for multiplication");
  }
  const auto n = rows(a);
  const auto k = rows(b);
  const auto m = cols(b);
  auto out = zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < m; ++j) {
        out[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return out;
}

Vector apply(const Matrix& a, const Vector& v) {
  Vector out(rows(a), Rational(0));
  for (std::size_t i = 0; i < rows(a); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (a[i][j] != 0 && v[j] != 0) {
        out[i] += a[i][j] * v[j];
      }
    }
  }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < rows(a); ++i) {
    for (std::size_t j = 0; j < cols(a); ++j) {
      out[i][j] += b[i][j];
    }
  }
  return out;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < rows(a); ++i) {
    for (std::size_t j = 0; j < cols(a); ++j) {
      out[i][j] -= b[i][j];
    }
  }
  return out;
}

Matrix scale(const Matrix& a, const Rational& s) {
  Matrix out = a;
  for (auto& row : out) {
    for (auto& x : row) {
      x *= s;
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  auto out = zero_matrix(cols(a), rows(a));
  for (std::size_t i = 0; i < rows(a); ++i) {
    for (std::size_t j = 0; j < cols(a); ++j) {
      out[j][i] = a[i][j];
    }
  }
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

bool is_zero(const Matrix& a) {
  for (const auto& row : a) {
    if (!is_zero(row)) {
      return false;
    }
  }
  return true;
}

RowEchelon rref(Matrix a) {
  RowEchelon out;
  const auto n = rows(a);
  const auto m = cols(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t pivot = r;
    while (pivot < n && a[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      continue;
    }
    std::swap(a[r], a[pivot]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) {
      x *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) {
        continue;
      }
      Rational factor = a[i][c];
      for (std::size_t j = c; j < m; ++j) {
        if (a[r][j] != 0) {
          a[i][j] -= factor * a[r][j];
        }
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.reduced = std::move(a);
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& a, std::size_t columns) {
  auto echelon = rref(a);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : echelon.pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    Vector v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
      v[echelon.pivots[r]] = -echelon.reduced[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  const auto m = cols(a);
  Matrix augmented = a;
  for (std::size_t i = 0; i < rows(a); ++i) {
    augmented[i].push_back(b[i]);
  }
  auto echelon = rref(std::move(augmented));
  Vector x(m, Rational(0));
  for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
    if (echelon.pivots[r] == m) {
      return std::nullopt;
    }
    x[echelon.pivots[r]] = echelon.reduced[r][m];
  }
  return x;
}

std::string format_matrix(const Matrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows(a); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols(a); ++j) {
      out += (j ? ", " : "") + to_string(a[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace fiatcells
