#include "fiatcells/constructors.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "fiatcells/cells.hpp"
#include "fiatcells/kazhdan_lusztig.hpp"

namespace fiatcells {

MultiCat make_s2() {
  MultiCatBuilder b;
  auto i = b.add_object("i");
  b.add_morph("1", i, i, true);
  auto f = b.add_morph("F", i, i);
  b.set_star(f, f);
  b.set_compose(f, f, Multiset::single(f, 2));
  return std::move(b).build();
}

MultiCat make_sl2_singular() {
  MultiCatBuilder b;
  auto i = b.add_object("i");
  auto j = b.add_object("j");
  b.add_morph("1_i", i, i, true);
  auto one_j = b.add_morph("1_j", j, j, true);
  auto on = b.add_morph("theta_on", i, j);
  auto out = b.add_morph("theta_out", j, i);
  auto theta = b.add_morph("theta", i, i);
  b.set_star(on, out);
  b.set_star(out, on);
  b.set_star(theta, theta);
  b.set_compose(out, on, Multiset::single(theta));
  b.set_compose(on, out, Multiset::single(one_j, 2));
  b.set_compose(theta, theta, Multiset::single(theta, 2));
  b.set_compose(on, theta, Multiset::single(on, 2));
  b.set_compose(theta, out, Multiset::single(out, 2));
  return std::move(b).build();
}

// ---------------------------------------------------------------- CartanData

void CartanData::check() const {
  if (components.empty()) {
    throw std::invalid_argument("Cartan data has no components");
  }
  for (std::size_t t = 0; t < components.size(); ++t) {
    const auto& c = components[t];
    const std::string where = "component " + std::to_string(t + 1);
    if (c.empty()) {
      throw std::invalid_argument(where + " is empty");
    }
    for (std::size_t f = 0; f < c.size(); ++f) {
      if (c[f].size() != c.size()) {
        throw std::invalid_argument(where + " is not a square matrix");
      }
      if (c[f][f] < 1) {
        throw std::invalid_argument(where + " has a diagonal entry below 1");
      }
      for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[f][e] < 0) {
          throw std::invalid_argument(where + " has a negative entry");
        }
        if (c[f][e] != c[e][f]) {
          throw std::invalid_argument(
              where + " is not symmetric: a weakly symmetric algebra has (fA)* ≅ Af, so "
                      "dim fAe = dim eAf is required");
        }
      }
    }
  }
}

std::size_t CartanData::vertex_count() const {
  std::size_t n = 0;
  for (const auto& c : components) {
    n += c.size();
  }
  return n;
}

CartanData parse_cartan_data(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("Cartan data: ") + e.what());
  }
  const auto& list = doc.is_object() && doc.contains("components") ? doc["components"] : doc;
  if (!list.is_array()) {
    throw std::invalid_argument("Cartan data: expected a list of matrices");
  }
  CartanData data;
  for (const auto& matrix : list) {
    if (!matrix.is_array()) {
      throw std::invalid_argument("Cartan data: a component is not a matrix");
    }
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : matrix) {
      if (!row.is_array()) {
        throw std::invalid_argument("Cartan data: a matrix row is not a list");
      }
      std::vector<Integer> values;
      for (const auto& entry : row) {
        if (entry.is_number_integer()) {
          values.emplace_back(std::to_string(entry.get<std::int64_t>()));
        } else if (entry.is_string()) {
          values.push_back(parse_integer(entry.get<std::string>()));
        } else {
          throw std::invalid_argument("Cartan data: entries must be integers");
        }
      }
      rows.push_back(std::move(values));
    }
    data.components.push_back(std::move(rows));
  }
  data.check();
  return data;
}

std::string format_cartan_data(const CartanData& data) {
  std::ostringstream out;
  out << "[";
  for (std::size_t t = 0; t < data.components.size(); ++t) {
    out << (t ? ", " : "") << "[";
    const auto& c = data.components[t];
    for (std::size_t f = 0; f < c.size(); ++f) {
      out << (f ? ", " : "") << "[";
      for (std::size_t e = 0; e < c[f].size(); ++e) {
        out << (e ? ", " : "") << c[f][e].get_str();
      }
      out << "]";
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

CartanData random_cartan_data(std::mt19937_64& rng, int max_components, int max_vertices,
                              int max_entry) {
  std::uniform_int_distribution<int> components(1, max_components);
  std::uniform_int_distribution<int> vertices(1, max_vertices);
  std::uniform_int_distribution<int> diagonal(1, max_entry);
  std::uniform_int_distribution<int> off(0, max_entry);
  CartanData data;
  const int k = components(rng);
  for (int t = 0; t < k; ++t) {
    const int n = vertices(rng);
    std::vector<std::vector<Integer>> c;
    while (true) {
      c.assign(n, std::vector<Integer>(n, 0));
      for (int f = 0; f < n; ++f) {
        c[f][f] = diagonal(rng);
        for (int e = f + 1; e < n; ++e) {
          c[f][e] = off(rng);
          c[e][f] = c[f][e];
        }
      }
      std::vector<bool> seen(n, false);
      std::vector<int> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
          if (!seen[w] && c[v][w] != 0) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        break;
      }
    }
    data.components.push_back(std::move(c));
  }
  return data;
}

std::string ca_label(std::size_t f, std::size_t e) {
  return "P[e" + std::to_string(f) + ",e" + std::to_string(e) + "]";
}

MultiCat make_CA(const CartanData& data) {
  data.check();
  struct Vertex {
    std::size_t component;
    std::size_t local;
  };
  std::vector<Vertex> vertices;
  for (std::size_t t = 0; t < data.components.size(); ++t) {
    for (std::size_t v = 0; v < data.components[t].size(); ++v) {
      vertices.push_back(Vertex{t, v});
    }
  }
  auto merged = [&](std::size_t t) {
    const auto& c = data.components[t];
    return c.size() == 1 && c[0][0] == 1;
  };

  MultiCatBuilder b;
  std::vector<ObjectId> objects;
  for (std::size_t t = 0; t < data.components.size(); ++t) {
    objects.push_back(b.add_object(std::to_string(t + 1)));
  }
  const auto n = vertices.size();
  std::vector<std::vector<MorphId>> p(n, std::vector<MorphId>(n));
  std::size_t first_vertex = 0;
  for (std::size_t t = 0; t < data.components.size(); ++t) {
    if (merged(t)) {
      p[first_vertex][first_vertex] =
          b.add_morph(ca_label(first_vertex + 1, first_vertex + 1), objects[t], objects[t], true);
    } else {
      b.add_morph("1_" + std::to_string(t + 1), objects[t], objects[t], true);
    }
    first_vertex += data.components[t].size();
  }
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t e = 0; e < n; ++e) {
      if (f == e && merged(vertices[f].component)) {
        continue;
      }
      p[f][e] = b.add_morph(ca_label(f + 1, e + 1), objects[vertices[e].component],
                            objects[vertices[f].component]);
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t e = 0; e < n; ++e) {
      if (!(f == e && merged(vertices[f].component))) {
        b.set_star(p[f][e], p[e][f]);
      }
    }
  }
  // P[f,e] ∘ P[f2,e2] = c(e,f2) P[f,e2] when e and f2 share a component.
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t f2 = 0; f2 < n; ++f2) {
        if (vertices[e].component != vertices[f2].component) {
          continue;
        }
        const auto& c = data.components[vertices[e].component];
        const Integer& mult = c[vertices[e].local][vertices[f2].local];
        for (std::size_t e2 = 0; e2 < n; ++e2) {
          bool g_identity = f == e && merged(vertices[f].component);
          bool f_identity = f2 == e2 && merged(vertices[f2].component);
          if (g_identity || f_identity) {
            continue;
          }
          Multiset out;
          if (mult != 0) {
            out.add(p[f][e2], mult);
          }
          b.set_compose(p[f][e], p[f2][e2], std::move(out));
        }
      }
    }
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------- Hecke

std::string hecke_label(const Permutation& w) {
  std::string out = "theta_";
  for (int v : w) {
    out += std::to_string(v);
  }
  return out;
}

MultiCat make_hecke(int n, int max_n) {
  if (n < 2 || n > max_n) {
    throw std::invalid_argument("Hecke table requested for S" + std::to_string(n) +
                                "; supported range is 2.." + std::to_string(max_n));
  }
  KLTable kl(n);
  const auto& group = kl.group();
  MultiCatBuilder b;
  auto i = b.add_object("i");
  std::vector<MorphId> theta;
  for (std::size_t w = 0; w < group.size(); ++w) {
    theta.push_back(b.add_morph(hecke_label(group[w]), i, i, w == group.identity_index()));
  }
  for (std::size_t w = 1; w < group.size(); ++w) {
    b.set_star(theta[w], theta[group.index_of(inverse(group[w]))]);
  }
  auto products = kl.products();
  for (std::size_t x = 1; x < group.size(); ++x) {
    for (std::size_t y = 1; y < group.size(); ++y) {
      std::vector<Multiset::Entry> entries;
      for (const auto& [z, h] : products[x][y]) {
        if (!h.nonnegative()) {
          throw std::logic_error("negative KL structure constant h_{" + hecke_label(group[x]) +
                                 "," + hecke_label(group[y]) + "," + hecke_label(group[z]) +
                                 "} = " + h.to_string());
        }
        entries.emplace_back(theta[z], h.at_one());
      }
      b.set_compose(theta[x], theta[y], Multiset(std::move(entries)));
    }
  }
  return std::move(b).build();
}

namespace {

using Partition = std::set<std::set<std::size_t>>;

template <typename Key>
Partition fibers(std::size_t count, const std::function<Key(std::size_t)>& key) {
  std::map<Key, std::set<std::size_t>> groups;
  for (std::size_t i = 0; i < count; ++i) {
    groups[key(i)].insert(i);
  }
  Partition out;
  for (auto& [k, members] : groups) {
    out.insert(std::move(members));
  }
  return out;
}

Partition as_partition(const CellPartition& cells) {
  Partition out;
  for (const auto& cls : cells.classes) {
    std::set<std::size_t> members;
    for (auto m : cls) {
      members.insert(m.index);
    }
    out.insert(std::move(members));
  }
  return out;
}

}  // namespace

RsCellReport rs_cell_check(int n, int max_n) {
  auto cat = make_hecke(n, max_n);
  CellEngine engine(cat);
  SymmetricGroup group(n);
  RsCellReport report;
  report.n = n;
  std::vector<TableauPair> tableaux;
  for (auto m : cat.morph_ids()) {
    // Morphs are declared in the group's element order.
    tableaux.push_back(robinson_schensted(group[m.index]));
  }
  const auto count = tableaux.size();
  auto by_p = fibers<Tableau>(count, [&](std::size_t i) { return tableaux[i].p; });
  auto by_q = fibers<Tableau>(count, [&](std::size_t i) { return tableaux[i].q; });
  auto by_shape = fibers<std::vector<int>>(count, [&](std::size_t i) { return shape(tableaux[i].p); });

  auto right = as_partition(engine.cells(CellKind::right));
  auto left = as_partition(engine.cells(CellKind::left));
  auto two_sided = as_partition(engine.cells(CellKind::two_sided));
  report.right_cells = right.size();
  report.left_cells = left.size();
  report.two_sided_cells = two_sided.size();
  report.standard_tableaux = by_q.size();
  // When every element is an involution both fibrations coincide; the
  // preferred tableau is tried first so the two names stay distinct.
  auto name = [&](const Partition& cells, bool prefer_recording) -> std::string {
    const bool p = cells == by_p;
    const bool q = cells == by_q;
    if (q && (prefer_recording || !p)) {
      return "recording";
    }
    return p ? "insertion" : "none";
  };
  report.right_cells_by = name(right, true);
  report.left_cells_by = name(left, false);
  report.two_sided_by_shape = two_sided == by_shape;
  return report;
}

}  // namespace fiatcells
