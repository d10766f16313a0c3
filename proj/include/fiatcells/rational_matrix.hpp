#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fiatcells/numeric.hpp"

namespace fiatcells {

using Vector = std::vector<Rational>;
/// Row-major dense matrix over the rationals.
using Matrix = std::vector<Vector>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
std::size_t rows(const Matrix& m);
std::size_t cols(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& a, const Vector& v);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Rational& s);
Matrix transpose(const Matrix& a);
bool is_zero(const Matrix& a);
bool is_zero(const Vector& v);

struct RowEchelon {
  Matrix reduced;                  // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form.
RowEchelon rref(Matrix a);
std::size_t rank(const Matrix& a);
/// Basis of {x : a x = 0}; `columns` is needed when `a` has no rows.
std::vector<Vector> nullspace(const Matrix& a, std::size_t columns);
/// Some x with a x = b, or nothing when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

std::string format_matrix(const Matrix& a);

}  // namespace fiatcells
