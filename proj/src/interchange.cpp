#include "fiatcells/interchange.hpp"

#include <json.hpp>

#include <limits>

namespace fiatcells {

using nlohmann::ordered_json;

namespace {

std::string line_locus(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const ordered_json& field(const ordered_json& node, const char* key, const std::string& locus) {
  if (!node.is_object()) {
    throw LoadError(locus, "expected an object");
  }
  auto it = node.find(key);
  if (it == node.end()) {
    throw LoadError(locus, std::string("missing field '") + key + "'");
  }
  return *it;
}

std::string string_at(const ordered_json& node, const std::string& locus) {
  if (!node.is_string()) {
    throw LoadError(locus, "expected a string");
  }
  return node.get<std::string>();
}

Integer integer_at(const ordered_json& node, const std::string& locus) {
  if (node.is_number_unsigned()) {
    return Integer(std::to_string(node.get<std::uint64_t>()));
  }
  if (node.is_number_integer()) {
    return Integer(std::to_string(node.get<std::int64_t>()));
  }
  if (node.is_string()) {
    try {
      return parse_integer(node.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw LoadError(locus, "malformed integer '" + node.get<std::string>() + "'");
    }
  }
  throw LoadError(locus, "expected an integer");
}

}  // namespace

MultiCat load_multicat(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(line_locus(text, e.byte == 0 ? 0 : e.byte - 1), "parse error");
  }
  if (!doc.is_object()) {
    throw LoadError("document", "expected a JSON object");
  }

  MultiCatBuilder builder;
  const auto& objects = field(doc, "objects", "document");
  if (!objects.is_array()) {
    throw LoadError("objects", "expected an array");
  }
  if (objects.empty()) {
    throw LoadError("objects", "no objects");
  }
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string locus = "objects[" + std::to_string(i) + "]";
    try {
      builder.add_object(string_at(objects[i], locus));
    } catch (const StructureError& e) {
      throw LoadError(locus, e.what());
    }
  }

  const auto& morphisms = field(doc, "morphisms", "document");
  if (!morphisms.is_array()) {
    throw LoadError("morphisms", "expected an array");
  }
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string locus = "morphisms[" + std::to_string(i) + "]";
    const auto& node = morphisms[i];
    auto label = string_at(field(node, "label", locus), locus + ".label");
    auto src_label = string_at(field(node, "src", locus), locus + ".src");
    auto tgt_label = string_at(field(node, "tgt", locus), locus + ".tgt");
    auto src = builder.find_object(src_label);
    if (!src) {
      throw LoadError(locus + ".src", "dangling reference to object '" + src_label + "'");
    }
    auto tgt = builder.find_object(tgt_label);
    if (!tgt) {
      throw LoadError(locus + ".tgt", "dangling reference to object '" + tgt_label + "'");
    }
    bool identity = false;
    if (auto it = node.find("identity"); it != node.end()) {
      if (!it->is_boolean()) {
        throw LoadError(locus + ".identity", "expected a boolean");
      }
      identity = it->get<bool>();
    }
    try {
      builder.add_morph(label, *src, *tgt, identity);
    } catch (const StructureError& e) {
      throw LoadError(locus, e.what());
    }
  }

  auto resolve = [&](const ordered_json& node, const std::string& locus) {
    auto label = string_at(node, locus);
    auto id = builder.find_morph(label);
    if (!id) {
      throw LoadError(locus, "dangling reference to 1-morphism '" + label + "'");
    }
    return *id;
  };

  if (auto it = doc.find("star"); it != doc.end()) {
    if (!it->is_object()) {
      throw LoadError("star", "expected an object");
    }
    for (const auto& [key, value] : it->items()) {
      const std::string locus = "star." + key;
      auto from = builder.find_morph(key);
      if (!from) {
        throw LoadError(locus, "dangling reference to 1-morphism '" + key + "'");
      }
      try {
        builder.set_star(*from, resolve(value, locus));
      } catch (const StructureError& e) {
        throw LoadError(locus, e.what());
      }
    }
  }

  if (auto it = doc.find("compose"); it != doc.end()) {
    if (!it->is_array()) {
      throw LoadError("compose", "expected an array");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string locus = "compose[" + std::to_string(i) + "]";
      const auto& node = (*it)[i];
      auto g = resolve(field(node, "g", locus), locus + ".g");
      auto f = resolve(field(node, "f", locus), locus + ".f");
      const auto& out = field(node, "out", locus);
      if (!out.is_array()) {
        throw LoadError(locus + ".out", "expected an array");
      }
      std::vector<Multiset::Entry> entries;
      for (std::size_t k = 0; k < out.size(); ++k) {
        const std::string entry_locus = locus + ".out[" + std::to_string(k) + "]";
        auto m = resolve(field(out[k], "m", entry_locus), entry_locus + ".m");
        auto mult = integer_at(field(out[k], "mult", entry_locus), entry_locus + ".mult");
        if (mult <= 0) {
          throw LoadError(entry_locus + ".mult", "multiplicity must be positive");
        }
        entries.emplace_back(m, mult);
      }
      try {
        builder.set_compose(g, f, Multiset(std::move(entries)));
      } catch (const StructureError& e) {
        throw LoadError(locus, e.what());
      }
    }
  }

  try {
    return std::move(builder).build();
  } catch (const StructureError& e) {
    throw LoadError("document", e.what());
  }
}

std::string serialize_multicat(const MultiCat& cat) {
  ordered_json doc;
  doc["objects"] = ordered_json::array();
  for (auto o : cat.object_ids()) {
    doc["objects"].push_back(cat.object_label(o));
  }
  doc["morphisms"] = ordered_json::array();
  for (auto m : cat.morph_ids()) {
    ordered_json node;
    node["label"] = cat.label(m);
    node["src"] = cat.object_label(cat.src(m));
    node["tgt"] = cat.object_label(cat.tgt(m));
    if (cat.is_identity(m)) {
      node["identity"] = true;
    }
    doc["morphisms"].push_back(std::move(node));
  }
  doc["star"] = ordered_json::object();
  for (auto m : cat.morph_ids()) {
    doc["star"][cat.label(m)] = cat.label(cat.star(m));
  }
  doc["compose"] = ordered_json::array();
  for (auto g : cat.morph_ids()) {
    for (auto f : cat.morph_ids()) {
      if (!cat.composable(g, f)) {
        continue;
      }
      const auto& out = cat.stored(g, f);
      if (cat.is_identity(g) || cat.is_identity(f)) {
        auto unit = Multiset::single(cat.is_identity(g) ? f : g);
        if (out == unit) {
          continue;
        }
      } else if (out.empty()) {
        continue;
      }
      ordered_json entry;
      entry["g"] = cat.label(g);
      entry["f"] = cat.label(f);
      entry["out"] = ordered_json::array();
      for (const auto& [m, mult] : out) {
        ordered_json item;
        item["m"] = cat.label(m);
        if (mult.fits_slong_p()) {
          item["mult"] = static_cast<std::int64_t>(mult.get_si());
        } else {
          item["mult"] = mult.get_str();
        }
        entry["out"].push_back(std::move(item));
      }
      doc["compose"].push_back(std::move(entry));
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace fiatcells
