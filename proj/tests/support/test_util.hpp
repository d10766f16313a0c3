#pragma once

#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fiatcells/interchange.hpp"
#include "fiatcells/multicat.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::string fixture_text(const std::string& name) { return read_file(fixture_path(name)); }

inline fiatcells::MultiCat fixture(const std::string& name) {
  return fiatcells::load_multicat(fixture_text(name));
}

/// Round-trips a table through its JSON form with an edit applied in between.
inline fiatcells::MultiCat edited(const fiatcells::MultiCat& cat,
                                  const std::function<void(nlohmann::json&)>& edit) {
  auto doc = nlohmann::json::parse(fiatcells::serialize_multicat(cat));
  edit(doc);
  return fiatcells::load_multicat(doc.dump());
}

inline fiatcells::MorphId id(const fiatcells::MultiCat& cat, const std::string& label) {
  return cat.morph_by_label(label);
}

}  // namespace testutil
