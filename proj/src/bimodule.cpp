#include "fiatcells/bimodule.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <random>

namespace fiatcells {

using nlohmann::json;

// ---------------------------------------------------------------- Algebra

Vector Algebra::basis_vector(std::size_t i) const {
  Vector v(dim(), Rational(0));
  v.at(i) = 1;
  return v;
}

Vector Algebra::multiply(const Vector& u, const Vector& v) const {
  Vector out(dim(), Rational(0));
  for (std::size_t a = 0; a < dim(); ++a) {
    if (u[a] == 0) {
      continue;
    }
    for (std::size_t b = 0; b < dim(); ++b) {
      if (v[b] == 0) {
        continue;
      }
      Rational s = u[a] * v[b];
      const auto& p = products[a][b];
      for (std::size_t c = 0; c < dim(); ++c) {
        if (p[c] != 0) {
          out[c] += s * p[c];
        }
      }
    }
  }
  return out;
}

Matrix Algebra::left_regular(const Vector& a) const {
  auto m = zero_matrix(dim(), dim());
  for (std::size_t b = 0; b < dim(); ++b) {
    auto col = multiply(a, basis_vector(b));
    for (std::size_t c = 0; c < dim(); ++c) {
      m[c][b] = col[c];
    }
  }
  return m;
}

Matrix Algebra::right_regular(const Vector& a) const {
  auto m = zero_matrix(dim(), dim());
  for (std::size_t b = 0; b < dim(); ++b) {
    auto col = multiply(basis_vector(b), a);
    for (std::size_t c = 0; c < dim(); ++c) {
      m[c][b] = col[c];
    }
  }
  return m;
}

void Algebra::check() const {
  const auto n = dim();
  if (n == 0) {
    throw BimoduleError("algebra '" + name + "' has an empty basis");
  }
  if (products.size() != n || unit.size() != n) {
    throw BimoduleError("algebra '" + name + "' has malformed structure constants");
  }
  for (const auto& row : products) {
    if (row.size() != n) {
      throw BimoduleError("algebra '" + name + "' has malformed structure constants");
    }
    for (const auto& v : row) {
      if (v.size() != n) {
        throw BimoduleError("algebra '" + name + "' has malformed structure constants");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        auto lhs = multiply(products[a][b], basis_vector(c));
        auto rhs = multiply(basis_vector(a), products[b][c]);
        if (lhs != rhs) {
          throw BimoduleError("algebra '" + name + "' is not associative at (" + basis[a] + ", " +
                              basis[b] + ", " + basis[c] + ")");
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (multiply(unit, basis_vector(a)) != basis_vector(a) ||
        multiply(basis_vector(a), unit) != basis_vector(a)) {
      throw BimoduleError("algebra '" + name + "': the unit does not act trivially on " +
                          basis[a]);
    }
  }
  if (idempotents.empty()) {
    throw BimoduleError("algebra '" + name + "' lists no idempotents");
  }
  Vector sum(n, Rational(0));
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    if (idempotents[i].size() != n || is_zero(idempotents[i])) {
      throw BimoduleError("algebra '" + name + "': idempotent " + std::to_string(i) +
                          " is malformed or zero");
    }
    for (std::size_t j = 0; j < idempotents.size(); ++j) {
      auto prod = multiply(idempotents[i], idempotents[j]);
      auto expected = i == j ? idempotents[i] : Vector(n, Rational(0));
      if (prod != expected) {
        throw BimoduleError("algebra '" + name + "': idempotents " + std::to_string(i) + " and " +
                            std::to_string(j) + " are not orthogonal idempotents");
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      sum[c] += idempotents[i][c];
    }
  }
  if (sum != unit) {
    throw BimoduleError("algebra '" + name + "': idempotents do not sum to the unit");
  }
}

std::size_t Algebra::pairing(std::size_t f, std::size_t e) const {
  Matrix span;
  for (std::size_t b = 0; b < dim(); ++b) {
    span.push_back(multiply(multiply(idempotents.at(f), basis_vector(b)), idempotents.at(e)));
  }
  return rank(span);
}

std::vector<std::vector<Integer>> Algebra::cartan_matrix() const {
  std::vector<std::vector<Integer>> c(idempotents.size());
  for (std::size_t f = 0; f < idempotents.size(); ++f) {
    for (std::size_t e = 0; e < idempotents.size(); ++e) {
      c[f].push_back(Integer(static_cast<unsigned long>(pairing(f, e))));
    }
  }
  return c;
}

Algebra field_algebra() {
  Algebra a;
  a.name = "Q";
  a.basis = {"1"};
  a.products = {{{Rational(1)}}};
  a.unit = {Rational(1)};
  a.idempotents = {a.unit};
  return a;
}

Algebra dual_numbers() {
  Algebra a;
  a.name = "D";
  a.basis = {"1", "x"};
  const Vector one{1, 0};
  const Vector x{0, 1};
  const Vector zero{0, 0};
  a.products = {{one, x}, {x, zero}};
  a.unit = one;
  a.idempotents = {one};
  return a;
}

namespace {

Rational rational_at(const json& node, const std::string& where) {
  if (node.is_number_integer()) {
    return Rational(std::to_string(node.get<std::int64_t>()));
  }
  if (node.is_string()) {
    return parse_rational(node.get<std::string>());
  }
  throw BimoduleError(where + ": expected an integer or a rational string");
}

Vector vector_from_map(const json& node, const std::vector<std::string>& basis,
                       const std::string& where) {
  if (!node.is_object()) {
    throw BimoduleError(where + ": expected a {label: coefficient} object");
  }
  Vector v(basis.size(), Rational(0));
  for (const auto& [key, value] : node.items()) {
    auto it = std::find(basis.begin(), basis.end(), key);
    if (it == basis.end()) {
      throw BimoduleError(where + ": unknown basis label '" + key + "'");
    }
    v[it - basis.begin()] += rational_at(value, where);
  }
  return v;
}

Algebra algebra_from_json(const json& doc) {
  Algebra a;
  if (!doc.is_object()) {
    throw BimoduleError("algebra: expected an object");
  }
  a.name = doc.value("name", std::string("A"));
  if (!doc.contains("basis") || !doc["basis"].is_array()) {
    throw BimoduleError("algebra '" + a.name + "': missing basis");
  }
  for (const auto& label : doc["basis"]) {
    a.basis.push_back(label.get<std::string>());
  }
  const auto n = a.basis.size();
  a.products.assign(n, std::vector<Vector>(n, Vector(n, Rational(0))));
  for (const auto& triple : doc.value("products", json::array())) {
    if (!triple.is_array() || triple.size() != 3) {
      throw BimoduleError("algebra '" + a.name + "': products entries are [a, b, {label: c}]");
    }
    auto find = [&](const json& label) {
      auto s = label.get<std::string>();
      auto it = std::find(a.basis.begin(), a.basis.end(), s);
      if (it == a.basis.end()) {
        throw BimoduleError("algebra '" + a.name + "': unknown basis label '" + s + "'");
      }
      return static_cast<std::size_t>(it - a.basis.begin());
    };
    a.products[find(triple[0])][find(triple[1])] =
        vector_from_map(triple[2], a.basis, "algebra '" + a.name + "' products");
  }
  if (!doc.contains("unit")) {
    throw BimoduleError("algebra '" + a.name + "': missing unit");
  }
  a.unit = vector_from_map(doc["unit"], a.basis, "algebra '" + a.name + "' unit");
  for (const auto& idem : doc.value("idempotents", json::array())) {
    a.idempotents.push_back(vector_from_map(idem, a.basis, "algebra '" + a.name + "' idempotents"));
  }
  a.check();
  return a;
}

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw BimoduleError(what + ": " + e.what());
  }
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a->basis == b->basis && a->products == b->products && a->unit == b->unit);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const auto ar = rows(a), ac = cols(a), br = rows(b), bc = cols(b);
  auto out = zero_matrix(ar * br, ac * bc);
  for (std::size_t i = 0; i < ar; ++i) {
    for (std::size_t j = 0; j < ac; ++j) {
      if (a[i][j] == 0) {
        continue;
      }
      for (std::size_t k = 0; k < br; ++k) {
        for (std::size_t l = 0; l < bc; ++l) {
          if (b[k][l] != 0) {
            out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
          }
        }
      }
    }
  }
  return out;
}

// Subspace given by a reduced row-echelon basis; coordinates are read at the pivots.
struct Subspace {
  RowEchelon echelon;
  std::size_t dim() const { return echelon.pivots.size(); }
  const Vector& vector(std::size_t i) const { return echelon.reduced[i]; }
  Vector coordinates(const Vector& v) const {
    Vector c(dim(), Rational(0));
    for (std::size_t r = 0; r < dim(); ++r) {
      c[r] = v[echelon.pivots[r]];
    }
    return c;
  }
};

Subspace column_space(const Matrix& m) { return Subspace{rref(transpose(m))}; }

// Matrix of a linear map on a subspace, given the map on the ambient space.
Matrix restrict_to(const Subspace& s, const Matrix& ambient) {
  auto out = zero_matrix(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto image = s.coordinates(fiatcells::apply(ambient, s.vector(i)));
    for (std::size_t k = 0; k < s.dim(); ++k) {
      out[k][i] = image[k];
    }
  }
  return out;
}

}  // namespace

Algebra parse_algebra(std::string_view json_text) {
  return algebra_from_json(parse_json(json_text, "algebra"));
}

std::vector<Algebra> parse_algebra_list(std::string_view json_text) {
  auto doc = parse_json(json_text, "algebra list");
  const json& list = doc.is_object() && doc.contains("algebras") ? doc["algebras"] : doc;
  if (!list.is_array() || list.empty()) {
    throw BimoduleError("algebra list: expected a nonempty list of algebras");
  }
  std::vector<Algebra> out;
  for (const auto& node : list) {
    out.push_back(algebra_from_json(node));
  }
  return out;
}

// ---------------------------------------------------------------- Bimodule

Matrix Bimodule::left_of(const Vector& a) const {
  auto out = zero_matrix(dim, dim);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) {
      out = add(out, scale(left_action[i], a[i]));
    }
  }
  return out;
}

Matrix Bimodule::right_of(const Vector& b) const {
  auto out = zero_matrix(dim, dim);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != 0) {
      out = add(out, scale(right_action[i], b[i]));
    }
  }
  return out;
}

void Bimodule::check() const {
  if (left_action.size() != left->dim() || right_action.size() != right->dim()) {
    throw BimoduleError("bimodule '" + name + "' has the wrong number of action matrices");
  }
  const auto id = identity_matrix(dim);
  if (left_of(left->unit) != id || right_of(right->unit) != id) {
    throw BimoduleError("bimodule '" + name + "' is not unital");
  }
  for (std::size_t a = 0; a < left->dim(); ++a) {
    for (std::size_t b = 0; b < left->dim(); ++b) {
      if (left_of(left->products[a][b]) != multiply(left_action[a], left_action[b])) {
        throw BimoduleError("bimodule '" + name + "': left action is not multiplicative");
      }
    }
  }
  for (std::size_t a = 0; a < right->dim(); ++a) {
    for (std::size_t b = 0; b < right->dim(); ++b) {
      if (right_of(right->products[a][b]) != multiply(right_action[b], right_action[a])) {
        throw BimoduleError("bimodule '" + name + "': right action is not multiplicative");
      }
    }
  }
  for (const auto& l : left_action) {
    for (const auto& r : right_action) {
      if (multiply(l, r) != multiply(r, l)) {
        throw BimoduleError("bimodule '" + name + "': left and right actions do not commute");
      }
    }
  }
}

Bimodule regular_bimodule(const AlgebraPtr& algebra) {
  Bimodule m;
  m.name = algebra->name;
  m.left = algebra;
  m.right = algebra;
  m.dim = algebra->dim();
  for (std::size_t a = 0; a < algebra->dim(); ++a) {
    m.left_action.push_back(algebra->left_regular(algebra->basis_vector(a)));
    m.right_action.push_back(algebra->right_regular(algebra->basis_vector(a)));
  }
  return m;
}

Bimodule projective_bimodule(const AlgebraPtr& a, std::size_t f, const AlgebraPtr& b,
                             std::size_t e) {
  auto af = column_space(a->right_regular(a->idempotents.at(f)));
  auto eb = column_space(b->left_regular(b->idempotents.at(e)));
  Bimodule m;
  m.name = a->name + "e" + std::to_string(f + 1) + "⊗e" + std::to_string(e + 1) + b->name;
  m.left = a;
  m.right = b;
  m.dim = af.dim() * eb.dim();
  const auto id_af = identity_matrix(af.dim());
  const auto id_eb = identity_matrix(eb.dim());
  for (std::size_t x = 0; x < a->dim(); ++x) {
    m.left_action.push_back(
        kronecker(restrict_to(af, a->left_regular(a->basis_vector(x))), id_eb));
  }
  for (std::size_t y = 0; y < b->dim(); ++y) {
    m.right_action.push_back(
        kronecker(id_af, restrict_to(eb, b->right_regular(b->basis_vector(y)))));
  }
  return m;
}

Bimodule direct_sum(const Bimodule& m, const Bimodule& n) {
  if (!same_algebra(m.left, n.left) || !same_algebra(m.right, n.right)) {
    throw BimoduleError("direct sum of bimodules over different algebras");
  }
  Bimodule out;
  out.name = m.name + "⊕" + n.name;
  out.left = m.left;
  out.right = m.right;
  out.dim = m.dim + n.dim;
  auto block = [&](const Matrix& x, const Matrix& y) {
    auto z = zero_matrix(out.dim, out.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
      for (std::size_t j = 0; j < m.dim; ++j) {
        z[i][j] = x[i][j];
      }
    }
    for (std::size_t i = 0; i < n.dim; ++i) {
      for (std::size_t j = 0; j < n.dim; ++j) {
        z[m.dim + i][m.dim + j] = y[i][j];
      }
    }
    return z;
  };
  for (std::size_t a = 0; a < m.left_action.size(); ++a) {
    out.left_action.push_back(block(m.left_action[a], n.left_action[a]));
  }
  for (std::size_t b = 0; b < m.right_action.size(); ++b) {
    out.right_action.push_back(block(m.right_action[b], n.right_action[b]));
  }
  return out;
}

namespace {

Matrix matrix_from_json(const json& node, std::size_t n, const std::string& where) {
  if (!node.is_array() || node.size() != n) {
    throw BimoduleError(where + ": expected a " + std::to_string(n) + "×" + std::to_string(n) +
                        " matrix");
  }
  Matrix m;
  for (const auto& row : node) {
    if (!row.is_array() || row.size() != n) {
      throw BimoduleError(where + ": expected a " + std::to_string(n) + "×" + std::to_string(n) +
                          " matrix");
    }
    Vector v;
    for (const auto& x : row) {
      v.push_back(rational_at(x, where));
    }
    m.push_back(std::move(v));
  }
  return m;
}

Bimodule bimodule_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw BimoduleError("bimodule: expected an object");
  }
  auto kind = doc.value("kind", std::string("explicit"));
  Bimodule m;
  if (kind == "regular") {
    m = regular_bimodule(std::make_shared<const Algebra>(algebra_from_json(doc.at("algebra"))));
  } else if (kind == "projective") {
    auto left = std::make_shared<const Algebra>(algebra_from_json(doc.at("left")));
    auto right = std::make_shared<const Algebra>(algebra_from_json(doc.at("right")));
    m = projective_bimodule(left, doc.value("f", 0), right, doc.value("e", 0));
  } else if (kind == "sum") {
    const auto& parts = doc.at("parts");
    if (!parts.is_array() || parts.empty()) {
      throw BimoduleError("bimodule sum: expected a nonempty list of parts");
    }
    m = bimodule_from_json(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      m = direct_sum(m, bimodule_from_json(parts[i]));
    }
  } else if (kind == "explicit") {
    m.left = std::make_shared<const Algebra>(algebra_from_json(doc.at("left")));
    m.right = std::make_shared<const Algebra>(algebra_from_json(doc.at("right")));
    m.dim = doc.at("dim").get<std::size_t>();
    for (const auto& label : m.left->basis) {
      m.left_action.push_back(
          matrix_from_json(doc.at("left_action").at(label), m.dim, "left action of " + label));
    }
    for (const auto& label : m.right->basis) {
      m.right_action.push_back(
          matrix_from_json(doc.at("right_action").at(label), m.dim, "right action of " + label));
    }
  } else {
    throw BimoduleError("bimodule: unknown kind '" + kind + "'");
  }
  if (doc.contains("name")) {
    m.name = doc["name"].get<std::string>();
  }
  m.check();
  return m;
}

}  // namespace

Bimodule parse_bimodule(std::string_view json_text) {
  try {
    return bimodule_from_json(parse_json(json_text, "bimodule"));
  } catch (const json::exception& e) {
    throw BimoduleError(std::string("bimodule: ") + e.what());
  }
}

// ---------------------------------------------------------------- tensor and hom

Bimodule tensor_over(const Bimodule& m, const Bimodule& n, std::size_t cap) {
  if (!same_algebra(m.right, n.left)) {
    throw BimoduleError("cannot tensor " + m.name + " with " + n.name +
                        ": middle algebras differ");
  }
  const auto dm = m.dim;
  const auto dn = n.dim;
  if (dm * dn > cap) {
    throw DimensionCapExceeded("tensor product " + m.name + "⊗" + n.name + " needs dimension " +
                               std::to_string(dm * dn) + ", above the cap of " +
                               std::to_string(cap));
  }
  const auto total = dm * dn;
  Matrix relations;
  for (std::size_t b = 0; b < m.right->dim(); ++b) {
    const auto& rm = m.right_action[b];
    const auto& ln = n.left_action[b];
    for (std::size_t i = 0; i < dm; ++i) {
      for (std::size_t j = 0; j < dn; ++j) {
        Vector r(total, Rational(0));
        for (std::size_t k = 0; k < dm; ++k) {
          if (rm[k][i] != 0) {
            r[k * dn + j] += rm[k][i];
          }
        }
        for (std::size_t l = 0; l < dn; ++l) {
          if (ln[l][j] != 0) {
            r[i * dn + l] -= ln[l][j];
          }
        }
        if (!is_zero(r)) {
          relations.push_back(std::move(r));
        }
      }
    }
  }
  auto echelon = rref(std::move(relations));
  std::vector<bool> is_pivot(total, false);
  for (auto p : echelon.pivots) {
    is_pivot[p] = true;
  }
  std::vector<std::size_t> quotient;
  for (std::size_t c = 0; c < total; ++c) {
    if (!is_pivot[c]) {
      quotient.push_back(c);
    }
  }
  auto project = [&](const Vector& v) {
    Vector out(quotient.size(), Rational(0));
    for (std::size_t q = 0; q < quotient.size(); ++q) {
      Rational x = v[quotient[q]];
      for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
        const auto& pv = v[echelon.pivots[r]];
        if (pv != 0 && echelon.reduced[r][quotient[q]] != 0) {
          x -= pv * echelon.reduced[r][quotient[q]];
        }
      }
      out[q] = x;
    }
    return out;
  };

  Bimodule out;
  out.name = "(" + m.name + ")⊗(" + n.name + ")";
  out.left = m.left;
  out.right = n.right;
  out.dim = quotient.size();
  auto induced = [&](const Matrix& on_m, const Matrix& on_n) {
    auto mat = zero_matrix(out.dim, out.dim);
    for (std::size_t q = 0; q < quotient.size(); ++q) {
      const auto i = quotient[q] / dn;
      const auto j = quotient[q] % dn;
      Vector image(total, Rational(0));
      for (std::size_t k = 0; k < dm; ++k) {
        for (std::size_t l = 0; l < dn; ++l) {
          if (on_m[k][i] != 0 && on_n[l][j] != 0) {
            image[k * dn + l] += on_m[k][i] * on_n[l][j];
          }
        }
      }
      auto coords = project(image);
      for (std::size_t r = 0; r < out.dim; ++r) {
        mat[r][q] = coords[r];
      }
    }
    return mat;
  };
  const auto id_m = identity_matrix(dm);
  const auto id_n = identity_matrix(dn);
  for (const auto& l : m.left_action) {
    out.left_action.push_back(induced(l, id_n));
  }
  for (const auto& r : n.right_action) {
    out.right_action.push_back(induced(id_m, r));
  }
  return out;
}

std::vector<Matrix> hom_space(const Bimodule& m, const Bimodule& n) {
  if (!same_algebra(m.left, n.left) || !same_algebra(m.right, n.right)) {
    throw BimoduleError("hom between " + m.name + " and " + n.name +
                        ": bimodules over different algebras");
  }
  const auto dm = m.dim;
  const auto dn = n.dim;
  Matrix equations;
  // X A_M = A_N X for every action matrix pair; unknown X[r][c] at r * dm + c.
  auto intertwine = [&](const Matrix& am, const Matrix& an) {
    for (std::size_t r = 0; r < dn; ++r) {
      for (std::size_t c = 0; c < dm; ++c) {
        Vector eq(dn * dm, Rational(0));
        for (std::size_t k = 0; k < dm; ++k) {
          if (am[k][c] != 0) {
            eq[r * dm + k] += am[k][c];
          }
        }
        for (std::size_t k = 0; k < dn; ++k) {
          if (an[r][k] != 0) {
            eq[k * dm + c] -= an[r][k];
          }
        }
        if (!is_zero(eq)) {
          equations.push_back(std::move(eq));
        }
      }
    }
  };
  for (std::size_t a = 0; a < m.left_action.size(); ++a) {
    intertwine(m.left_action[a], n.left_action[a]);
  }
  for (std::size_t b = 0; b < m.right_action.size(); ++b) {
    intertwine(m.right_action[b], n.right_action[b]);
  }
  std::vector<Matrix> basis;
  for (const auto& v : nullspace(equations, dn * dm)) {
    auto x = zero_matrix(dn, dm);
    for (std::size_t r = 0; r < dn; ++r) {
      for (std::size_t c = 0; c < dm; ++c) {
        x[r][c] = v[r * dm + c];
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

bool is_bimodule_map(const Bimodule& m, const Bimodule& n, const Matrix& map) {
  if (rows(map) != n.dim || (m.dim > 0 && cols(map) != m.dim)) {
    return false;
  }
  for (std::size_t a = 0; a < m.left_action.size(); ++a) {
    if (multiply(map, m.left_action[a]) != multiply(n.left_action[a], map)) {
      return false;
    }
  }
  for (std::size_t b = 0; b < m.right_action.size(); ++b) {
    if (multiply(map, m.right_action[b]) != multiply(n.right_action[b], map)) {
      return false;
    }
  }
  return true;
}

namespace {

Rational trace(const Matrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < rows(a); ++i) {
    t += a[i][i];
  }
  return t;
}

std::size_t semisimple_dimension(const std::vector<Matrix>& endomorphisms) {
  const auto k = endomorphisms.size();
  auto gram = zero_matrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      gram[i][j] = trace(multiply(endomorphisms[i], endomorphisms[j]));
    }
  }
  return rank(gram);
}

bool isomorphic(const Bimodule& a, const Bimodule& b) {
  if (a.dim != b.dim) {
    return false;
  }
  auto maps = hom_space(a, b);
  if (maps.empty()) {
    return false;
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(1, 997);
  for (int trial = 0; trial < 8; ++trial) {
    auto x = zero_matrix(b.dim, a.dim);
    for (const auto& m : maps) {
      x = add(x, scale(m, Rational(coeff(rng))));
    }
    if (rank(x) == a.dim) {
      return true;
    }
  }
  return false;
}

struct CandidateSet {
  std::vector<Bimodule> candidates;
  std::vector<std::vector<Integer>> gram;  // gram[i][j] = dim Hom(C_i, C_j)
};

CandidateSet prepare(const std::vector<Bimodule>& candidates) {
  CandidateSet set{candidates, {}};
  const auto k = candidates.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!has_local_endomorphisms(candidates[i])) {
      throw DecompositionError("candidate " + candidates[i].name +
                               " does not have a local endomorphism ring");
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (isomorphic(candidates[i], candidates[j])) {
        throw DecompositionError("candidates " + candidates[i].name + " and " +
                                 candidates[j].name + " are isomorphic");
      }
    }
  }
  set.gram.assign(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      set.gram[i][j] = Integer(static_cast<unsigned long>(
          hom_space(candidates[i], candidates[j]).size()));
    }
  }
  return set;
}

std::vector<Integer> decompose_with(const Bimodule& m, const CandidateSet& set) {
  const auto k = set.candidates.size();
  std::vector<Integer> h(k);
  for (std::size_t i = 0; i < k; ++i) {
    h[i] = Integer(static_cast<unsigned long>(hom_space(set.candidates[i], m).size()));
  }
  auto dimension_matches = [&](const std::vector<Integer>& mult) {
    Integer total = 0;
    for (std::size_t j = 0; j < k; ++j) {
      total += mult[j] * Integer(static_cast<unsigned long>(set.candidates[j].dim));
    }
    return total == Integer(static_cast<unsigned long>(m.dim));
  };
  auto satisfies = [&](const std::vector<Integer>& mult) {
    for (std::size_t i = 0; i < k; ++i) {
      Integer sum = 0;
      for (std::size_t j = 0; j < k; ++j) {
        sum += set.gram[i][j] * mult[j];
      }
      if (sum != h[i]) {
        return false;
      }
    }
    return dimension_matches(mult);
  };

  Matrix g = zero_matrix(k, k);
  Vector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = Rational(h[i]);
    for (std::size_t j = 0; j < k; ++j) {
      g[i][j] = Rational(set.gram[i][j]);
    }
  }
  if (rank(g) == k) {
    auto x = solve(g, rhs);
    std::vector<Integer> mult;
    for (const auto& v : *x) {
      if (v.get_den() != 1 || v < 0) {
        throw DecompositionError(m.name + ": hom counts give a non-integral or negative "
                                 "multiplicity; the candidate list is incomplete");
      }
      mult.push_back(v.get_num());
    }
    if (!dimension_matches(mult)) {
      throw DecompositionError(m.name + ": multiplicities do not account for dimension " +
                               std::to_string(m.dim) + "; the candidate list is incomplete");
    }
    return mult;
  }

  std::vector<std::vector<Integer>> solutions;
  std::vector<Integer> current(k, 0);
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t j, std::size_t used) {
    if (solutions.size() > 1) {
      return;
    }
    if (j == k) {
      if (satisfies(current)) {
        solutions.push_back(current);
      }
      return;
    }
    const auto d = std::max<std::size_t>(set.candidates[j].dim, 1);
    for (std::size_t c = 0; used + c * d <= m.dim; ++c) {
      current[j] = Integer(static_cast<unsigned long>(c));
      search(j + 1, used + c * d);
    }
    current[j] = 0;
  };
  search(0, 0);
  if (solutions.size() != 1) {
    throw DecompositionError(m.name + ": hom counts admit " +
                             (solutions.empty() ? std::string("no") : std::string("several")) +
                             " nonnegative integer decompositions");
  }
  return solutions.front();
}

}  // namespace

bool has_local_endomorphisms(const Bimodule& m) {
  return semisimple_dimension(hom_space(m, m)) == 1;
}

std::vector<Integer> decompose_against(const Bimodule& m, const std::vector<Bimodule>& candidates) {
  return decompose_with(m, prepare(candidates));
}

// ---------------------------------------------------------------- dual-number quiver

bool QuiverReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; }) &&
         end_f == 4 && hom_f_1 == 2 && hom_1_f == 2 && end_1 == 2;
}

QuiverReport verify_dual_numbers_quiver() {
  auto d = std::make_shared<const Algebra>(dual_numbers());
  const auto one_bimodule = regular_bimodule(d);
  const auto f = projective_bimodule(d, 0, d, 0);
  // F has basis u⊗w (u, w ∈ {1, x}) at index 2u + w.
  auto tensor = [](int u, int w) {
    Vector v(4, Rational(0));
    v[2 * u + w] = 1;
    return v;
  };
  // A map out of F is fixed by the image v of 1⊗1: u⊗w ↦ u·v·w.
  auto from_generator = [&](const Bimodule& target, const Vector& v) {
    auto m = zero_matrix(target.dim, 4);
    for (int u = 0; u < 2; ++u) {
      for (int w = 0; w < 2; ++w) {
        auto image = fiatcells::apply(target.left_action[u], fiatcells::apply(target.right_action[w], v));
        for (std::size_t r = 0; r < target.dim; ++r) {
          m[r][2 * u + w] = image[r];
        }
      }
    }
    return m;
  };
  const Matrix alpha = from_generator(one_bimodule, d->unit);
  Vector beta_one = tensor(0, 1);
  beta_one[2] = 1;  // 1⊗x + x⊗1
  Matrix beta = zero_matrix(4, 2);
  for (int a = 0; a < 2; ++a) {
    auto image = fiatcells::apply(f.left_action[a], beta_one);
    for (std::size_t r = 0; r < 4; ++r) {
      beta[r][a] = image[r];
    }
  }
  Vector gamma_one = tensor(0, 1);
  gamma_one[2] = -1;  // 1⊗x − x⊗1
  const Matrix gamma = from_generator(f, gamma_one);

  QuiverReport report;
  auto record = [&](std::string name, bool holds, std::string detail) {
    report.checks.push_back(RelationCheck{std::move(name), holds, std::move(detail)});
  };
  record("alpha is a bimodule map", is_bimodule_map(f, one_bimodule, alpha), format_matrix(alpha));
  record("beta is a bimodule map", is_bimodule_map(one_bimodule, f, beta), format_matrix(beta));
  record("gamma is a bimodule map", is_bimodule_map(f, f, gamma), format_matrix(gamma));
  auto ag = multiply(alpha, gamma);
  record("alpha gamma = 0", is_zero(ag), format_matrix(ag));
  auto gb = multiply(gamma, beta);
  record("gamma beta = 0", is_zero(gb), format_matrix(gb));
  auto ba = multiply(beta, alpha);
  auto gg = multiply(gamma, gamma);
  auto baba = multiply(ba, ba);
  record("gamma^2 = -(beta alpha)^2", gg == scale(baba, Rational(-1)),
         "gamma^2 = " + format_matrix(gg) + ", (beta alpha)^2 = " + format_matrix(baba));
  auto ab = multiply(alpha, beta);
  auto abab = multiply(ab, ab);
  record("(alpha beta)^2 = 0", is_zero(abab), format_matrix(abab));
  record("alpha beta != 0", !is_zero(ab), format_matrix(ab));

  report.end_f = hom_space(f, f).size();
  report.hom_f_1 = hom_space(f, one_bimodule).size();
  report.hom_1_f = hom_space(one_bimodule, f).size();
  report.end_1 = hom_space(one_bimodule, one_bimodule).size();
  return report;
}

// ---------------------------------------------------------------- realize C_A

RealizedCA realize_CA(const std::vector<Algebra>& algebras, std::size_t cap) {
  if (algebras.empty()) {
    throw BimoduleError("no algebras given");
  }
  std::vector<AlgebraPtr> blocks;
  CartanData cartan;
  for (const auto& a : algebras) {
    a.check();
    auto c = a.cartan_matrix();
    for (std::size_t f = 0; f < c.size(); ++f) {
      for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[f][e] != c[e][f]) {
          throw BimoduleError("algebra '" + a.name + "' has dim fAe ≠ dim eAf for idempotents " +
                              std::to_string(f + 1) + ", " + std::to_string(e + 1) +
                              "; it is not weakly symmetric");
        }
      }
    }
    cartan.components.push_back(std::move(c));
    blocks.push_back(std::make_shared<const Algebra>(a));
  }

  struct Vertex {
    std::size_t block;
    std::size_t local;
  };
  std::vector<Vertex> vertices;
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    for (std::size_t v = 0; v < blocks[t]->idempotents.size(); ++v) {
      vertices.push_back(Vertex{t, v});
    }
  }
  const auto n = vertices.size();
  auto projective = [&](std::size_t f, std::size_t e) {
    auto p = projective_bimodule(blocks[vertices[f].block], vertices[f].local,
                                 blocks[vertices[e].block], vertices[e].local);
    p.name = ca_label(f + 1, e + 1);
    return p;
  };

  // The identity bimodule is merged with a projective exactly when it is one.
  std::vector<std::optional<std::size_t>> merged_vertex(blocks.size());
  std::size_t first = 0;
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    const auto count = blocks[t]->idempotents.size();
    auto identity = regular_bimodule(blocks[t]);
    std::vector<Bimodule> local;
    std::vector<std::size_t> local_vertex;
    for (std::size_t f = first; f < first + count; ++f) {
      for (std::size_t e = first; e < first + count; ++e) {
        local.push_back(projective(f, e));
        local_vertex.push_back(f == e ? f : n);
      }
    }
    try {
      auto mult = decompose_against(identity, local);
      Integer total = 0;
      for (const auto& x : mult) {
        total += x;
      }
      for (std::size_t i = 0; i < mult.size() && total == 1; ++i) {
        if (mult[i] == 1 && local_vertex[i] != n) {
          merged_vertex[t] = local_vertex[i];
        }
      }
    } catch (const DecompositionError&) {
    }
    if (!merged_vertex[t] && !has_local_endomorphisms(identity)) {
      throw BimoduleError("identity bimodule of '" + blocks[t]->name +
                          "' is decomposable; the block is not indecomposable");
    }
    first += count;
  }

  MultiCatBuilder builder;
  std::vector<ObjectId> objects;
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    objects.push_back(builder.add_object(std::to_string(t + 1)));
  }
  RealizedCA out;
  out.cartan = cartan;
  std::vector<std::vector<MorphId>> p(n, std::vector<MorphId>(n));
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    if (merged_vertex[t]) {
      auto v = *merged_vertex[t];
      p[v][v] = builder.add_morph(ca_label(v + 1, v + 1), objects[t], objects[t], true);
      out.bimodules.push_back(projective(v, v));
    } else {
      builder.add_morph("1_" + std::to_string(t + 1), objects[t], objects[t], true);
      auto identity = regular_bimodule(blocks[t]);
      identity.name = "1_" + std::to_string(t + 1);
      out.bimodules.push_back(std::move(identity));
    }
  }
  auto is_merged = [&](std::size_t f, std::size_t e) {
    return f == e && merged_vertex[vertices[f].block] == f;
  };
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t e = 0; e < n; ++e) {
      if (is_merged(f, e)) {
        continue;
      }
      p[f][e] = builder.add_morph(ca_label(f + 1, e + 1), objects[vertices[e].block],
                                  objects[vertices[f].block]);
      out.bimodules.push_back(projective(f, e));
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t e = 0; e < n; ++e) {
      if (!is_merged(f, e)) {
        builder.set_star(p[f][e], p[e][f]);
      }
    }
  }

  // Hom category (s, t) → its indecomposables, as morph indices.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> hom_members;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints(out.bimodules.size());
  {
    std::size_t index = 0;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
      endpoints[index] = {t, t};
      hom_members[{t, t}].push_back(index++);
    }
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t e = 0; e < n; ++e) {
        if (is_merged(f, e)) {
          continue;
        }
        endpoints[index] = {vertices[e].block, vertices[f].block};
        hom_members[endpoints[index]].push_back(index);
        ++index;
      }
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, CandidateSet> prepared;
  for (const auto& [key, members] : hom_members) {
    std::vector<Bimodule> candidates;
    for (auto i : members) {
      candidates.push_back(out.bimodules[i]);
    }
    prepared.emplace(key, prepare(candidates));
  }

  const auto identities = blocks.size();
  for (std::size_t g = identities; g < out.bimodules.size(); ++g) {
    for (std::size_t f = identities; f < out.bimodules.size(); ++f) {
      if (endpoints[g].first != endpoints[f].second) {
        continue;
      }
      auto product = tensor_over(out.bimodules[g], out.bimodules[f], cap);
      std::pair<std::size_t, std::size_t> key{endpoints[f].first, endpoints[g].second};
      auto mult = decompose_with(product, prepared.at(key));
      Multiset result;
      const auto& members = hom_members.at(key);
      for (std::size_t i = 0; i < members.size(); ++i) {
        result.add(MorphId{members[i]}, mult[i]);
      }
      builder.set_compose(MorphId{g}, MorphId{f}, std::move(result));
    }
  }
  out.cat = std::move(builder).build();
  return out;
}

}  // namespace fiatcells
