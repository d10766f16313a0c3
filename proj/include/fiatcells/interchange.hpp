#pragma once

// JSON table-interchange format:
//   objects:   [label, ...]
//   morphisms: [{label, src, tgt, identity?}, ...]
//   star:      {label: label, ...}
//   compose:   [{g, f, out: [{m, mult}, ...]}, ...]
// Multiplicities are JSON integers, or decimal strings when they exceed 64 bits.

#include <stdexcept>
#include <string>
#include <string_view>

#include "fiatcells/multicat.hpp"

namespace fiatcells {

class LoadError : public std::runtime_error {
 public:
  LoadError(std::string locus, const std::string& message)
      : std::runtime_error(locus.empty() ? message : locus + ": " + message),
        locus_(std::move(locus)) {}
  const std::string& locus() const { return locus_; }

 private:
  std::string locus_;
};

/// Parses and resolves references. Does not check the axioms; see validate().
MultiCat load_multicat(std::string_view text);

/// Canonical form: declaration order for objects and morphisms, star for every
/// morph, compose entries sorted by (g, f) with unit-law and empty entries omitted.
std::string serialize_multicat(const MultiCat& cat);

}  // namespace fiatcells
