#include "fiatcells/report.hpp"

#include <openssl/evp.h>

#include <limits>
#include <sstream>

namespace fiatcells {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Json envelope(std::string_view command, std::optional<std::string_view> input,
              std::optional<std::uint64_t> seed, Json result) {
  Json doc;
  doc["tool"] = "fiatcells";
  doc["version"] = std::string(tool_version);
  doc["command"] = std::string(command);
  doc["input_sha256"] = input ? Json(sha256_hex(*input)) : Json(nullptr);
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  doc["result"] = std::move(result);
  return doc;
}

Json integer_json(const Integer& value) {
  if (value.fits_slong_p()) {
    return Json(static_cast<std::int64_t>(value.get_si()));
  }
  return Json(value.get_str());
}

namespace {

Json labels(const MultiCat& cat, const std::vector<MorphId>& ids) {
  Json out = Json::array();
  for (auto id : ids) {
    out.push_back(cat.label(id));
  }
  return out;
}

std::string label_set(const MultiCat& cat, const std::vector<MorphId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out += (i ? ", " : "") + cat.label(ids[i]);
  }
  return out + "}";
}

std::string kind_plural(CellKind kind) {
  switch (kind) {
    case CellKind::left:
      return "left cells";
    case CellKind::right:
      return "right cells";
    case CellKind::two_sided:
      return "two-sided cells";
  }
  return "";
}

Json matrix_json(const std::vector<std::vector<Integer>>& matrix) {
  Json out = Json::array();
  for (const auto& row : matrix) {
    Json r = Json::array();
    for (const auto& x : row) {
      r.push_back(integer_json(x));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string matrix_text(const std::vector<std::vector<Integer>>& matrix) {
  std::string out = "[";
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < matrix[i].size(); ++j) {
      out += (j ? ", " : "") + matrix[i][j].get_str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

Json validation_json(const MultiCat& cat, const ValidationReport& report) {
  Json out;
  out["ok"] = report.ok();
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json entry;
    entry["law"] = v.law;
    entry["detail"] = v.detail;
    entry["witness"] = labels(cat, v.witness);
    violations.push_back(std::move(entry));
  }
  out["violations"] = std::move(violations);
  return out;
}

std::string validation_text(const MultiCat&, const ValidationReport& report) {
  std::ostringstream out;
  if (report.ok()) {
    out << "validation: ok\n";
    return out.str();
  }
  out << "validation: " << report.violations.size() << " violation"
      << (report.violations.size() == 1 ? "" : "s") << "\n";
  for (const auto& v : report.violations) {
    out << "  " << v.law << ": " << v.detail << "\n";
  }
  return out.str();
}

std::string cell_name(CellKind kind, std::size_t index) {
  const char* prefix = kind == CellKind::right ? "R" : kind == CellKind::left ? "L" : "T";
  return prefix + std::to_string(index + 1);
}

Json partition_json(const MultiCat& cat, const CellPartition& partition) {
  Json out;
  out["kind"] = to_string(partition.kind);
  Json classes = Json::array();
  for (const auto& c : partition.classes) {
    classes.push_back(labels(cat, c));
  }
  out["classes"] = std::move(classes);
  Json hasse = Json::array();
  for (auto [lower, upper] : partition.hasse) {
    hasse.push_back(Json::array({lower + 1, upper + 1}));
  }
  out["hasse"] = std::move(hasse);
  return out;
}

std::string partition_text(const MultiCat& cat, const CellPartition& partition) {
  std::ostringstream out;
  out << kind_plural(partition.kind) << ": " << partition.size() << "\n";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    out << "  " << cell_name(partition.kind, i) << " " << label_set(cat, partition[i]) << "\n";
  }
  for (auto [lower, upper] : partition.hasse) {
    out << "  " << cell_name(partition.kind, lower) << " < " << cell_name(partition.kind, upper)
        << "\n";
  }
  return out.str();
}

std::string order_text(const MultiCat& cat, const CellPartition& partition) {
  std::ostringstream out;
  out << partition_text(cat, partition);
  out << "comparable pairs:\n";
  bool any = false;
  for (std::size_t a = 0; a < partition.size(); ++a) {
    for (std::size_t b = 0; b < partition.size(); ++b) {
      if (a != b && partition.order[a][b]) {
        out << "  " << cell_name(partition.kind, a) << " <= " << cell_name(partition.kind, b)
            << "\n";
        any = true;
      }
    }
  }
  if (!any) {
    out << "  none\n";
  }
  return out.str();
}

Json lint_json(const LintReport& report) {
  Json out;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry;
    entry["id"] = c.id;
    entry["description"] = c.description;
    entry["status"] = to_string(c.status);
    entry["witnesses"] = c.witnesses;
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  out["fiat_certified_impossible"] = report.fiat_certified_impossible;
  return out;
}

std::string lint_text(const LintReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    const char* tag = c.status == CheckStatus::pass   ? "PASS"
                      : c.status == CheckStatus::fail ? "FAIL"
                                                      : "N/A ";
    out << tag << " " << c.id << ": " << c.description << "\n";
    for (const auto& w : c.witnesses) {
      out << "     " << w << "\n";
    }
  }
  out << "fiat-certified-impossible: " << (report.fiat_certified_impossible ? "yes" : "no")
      << "\n";
  return out.str();
}

Analysis report_analyze(const MultiCat& cat) {
  Analysis analysis;
  auto validation = validate(cat);
  analysis.valid = validation.ok();
  analysis.document["validation"] = validation_json(cat, validation);
  std::ostringstream text;
  text << validation_text(cat, validation);
  if (!analysis.valid) {
    analysis.text = text.str();
    return analysis;
  }

  CellEngine engine(cat);
  Json cells;
  for (auto kind : {CellKind::right, CellKind::left, CellKind::two_sided}) {
    const auto& partition = engine.cells(kind);
    cells[to_string(kind)] = partition_json(cat, partition);
    text << partition_text(cat, partition);
  }
  analysis.document["cells"] = std::move(cells);

  const auto& two_sided = engine.cells(CellKind::two_sided);
  std::vector<bool> strong(two_sided.size(), false);
  std::vector<std::optional<MTable>> tables(two_sided.size());
  Json cell_docs = Json::array();
  for (std::size_t q = 0; q < two_sided.size(); ++q) {
    auto verdict = engine.classify_two_sided(q);
    strong[q] = verdict.strongly_regular;
    Json doc;
    doc["cell"] = cell_name(CellKind::two_sided, q);
    doc["members"] = labels(cat, two_sided[q]);
    doc["regular"] = verdict.regular;
    doc["strongly_regular"] = verdict.strongly_regular;
    Json rights = Json::array();
    for (auto r : engine.right_cells_in(q)) {
      rights.push_back(cell_name(CellKind::right, r));
    }
    Json lefts = Json::array();
    for (auto l : engine.left_cells_in(q)) {
      lefts.push_back(cell_name(CellKind::left, l));
    }
    doc["right_cells"] = rights;
    doc["left_cells"] = lefts;
    Json witnesses = Json::array();
    for (auto [f, g] : verdict.witnesses) {
      witnesses.push_back(Json::array({cat.label(f), cat.label(g)}));
    }
    doc["witnesses"] = std::move(witnesses);
    Json empty = Json::array();
    for (auto [l, r] : verdict.empty_intersections) {
      empty.push_back(Json::array({cell_name(CellKind::left, l), cell_name(CellKind::right, r)}));
    }
    doc["empty_intersections"] = std::move(empty);

    text << cell_name(CellKind::two_sided, q) << " " << label_set(cat, two_sided[q]) << ": "
         << (verdict.strongly_regular ? "strongly regular"
             : verdict.regular        ? "regular"
                                      : "not regular")
         << "\n";
    text << "  right cells:";
    for (const auto& r : rights) {
      text << " " << r.get<std::string>();
    }
    text << "\n  left cells:";
    for (const auto& l : lefts) {
      text << " " << l.get<std::string>();
    }
    text << "\n";

    doc["duflo"] = nullptr;
    doc["m_table"] = nullptr;
    doc["cartan_blocks"] = nullptr;
    doc["blocks_agree"] = nullptr;
    doc["m_left_constant"] = nullptr;
    if (verdict.strongly_regular) {
      try {
        auto table = m_table(engine, q);
        Json duflo;
        text << "  duflo:";
        for (const auto& [r, g] : table.duflo) {
          duflo[cell_name(CellKind::right, r)] = cat.label(g);
          text << " " << cell_name(CellKind::right, r) << "=" << cat.label(g);
        }
        text << "\n";
        doc["duflo"] = std::move(duflo);
        Json entries = Json::array();
        for (const auto& [key, coeff] : table.m) {
          Json e;
          e["f"] = cat.label(key.first);
          e["h"] = cat.label(key.second);
          e["target"] = coeff.target ? Json(cat.label(*coeff.target)) : Json(nullptr);
          e["m"] = integer_json(coeff.m);
          entries.push_back(std::move(e));
          text << "  m(" << cat.label(key.first) << ", " << cat.label(key.second)
               << ") = " << coeff.m.get_str();
          if (coeff.target) {
            text << " " << cat.label(*coeff.target);
          }
          text << "\n";
        }
        doc["m_table"] = std::move(entries);
        tables[q] = std::move(table);

        Json blocks = Json::array();
        for (auto r : engine.right_cells_in(q)) {
          for (const auto& block : cartan_blocks(engine, r)) {
            Json b;
            b["right_cell"] = cell_name(CellKind::right, r);
            b["object"] = cat.object_label(block.target);
            b["basis"] = labels(cat, block.basis);
            b["matrix"] = matrix_json(block.matrix);
            blocks.push_back(std::move(b));
            text << "  cartan " << cell_name(CellKind::right, r) << " at "
                 << cat.object_label(block.target) << " " << label_set(cat, block.basis) << ": "
                 << matrix_text(block.matrix) << "\n";
          }
        }
        doc["cartan_blocks"] = std::move(blocks);
        auto agreement = cartan_blocks_agree(engine, q);
        doc["blocks_agree"] = agreement.agree;
        text << "  cartan blocks agree: " << (agreement.agree ? "yes" : "no") << "\n";
        auto constancy = check_left_constancy(engine, q);
        doc["m_left_constant"] = constancy.holds;
        text << "  m constant on left cells: " << (constancy.holds ? "yes" : "no") << "\n";
      } catch (const CellError& e) {
        doc["error"] = e.what();
        text << "  error: " << e.what() << "\n";
      }
    }
    cell_docs.push_back(std::move(doc));
  }
  analysis.document["two_sided_cells"] = std::move(cell_docs);

  Json diagonal = Json::array();
  std::string diagonal_text;
  for (auto f : cat.morph_ids()) {
    const auto q = two_sided.of(f);
    if (!tables[q]) {
      continue;
    }
    Json e;
    e["morph"] = cat.label(f);
    e["m"] = integer_json(tables[q]->diagonal(f));
    diagonal.push_back(std::move(e));
    diagonal_text += (diagonal_text.empty() ? "" : ", ") + tables[q]->diagonal(f).get_str();
  }
  analysis.document["m_diagonal"] = std::move(diagonal);
  text << "m-diagonal: " << (diagonal_text.empty() ? "none" : diagonal_text) << "\n";

  bool all_constant = true;
  for (const auto& doc : analysis.document["two_sided_cells"]) {
    if (doc["m_left_constant"].is_boolean() && !doc["m_left_constant"].get<bool>()) {
      all_constant = false;
    }
  }
  analysis.document["m_left_constant"] = all_constant;
  text << "m constant on left cells: " << (all_constant ? "yes" : "no") << "\n";

  auto lint = fiat_lint(cat);
  analysis.lint_passes = lint.all_pass();
  analysis.document["lint"] = lint_json(lint);
  std::size_t failed = 0;
  for (const auto& c : lint.checks) {
    failed += c.status == CheckStatus::fail;
  }
  text << "lint: " << (lint.all_pass() ? "all pass" : std::to_string(failed) + " failed") << "\n";
  for (const auto& c : lint.checks) {
    if (c.status == CheckStatus::fail) {
      text << "  FAIL " << c.id << "\n";
    }
  }
  analysis.text = text.str();
  return analysis;
}

}  // namespace fiatcells
