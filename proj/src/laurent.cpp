#include "fiatcells/laurent.hpp"

#include <sstream>

namespace fiatcells {

LaurentPoly::LaurentPoly(const Integer& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace(e + k, c);
  }
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace(-e, c);
  }
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace(e * k, c);
  }
  return out;
}

Integer LaurentPoly::at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c;
  }
  return sum;
}

bool LaurentPoly::nonnegative() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) {
      return false;
    }
  }
  return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    add_term(e, c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    add_term(e, -c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      out.add_term(e1 + e2, c1 * c2);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    out.terms_.emplace(e, -c);
  }
  return out;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer magnitude = abs(c);
    if (first) {
      out << (c < 0 ? "-" : "");
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) {
      out << magnitude.get_str();
    }
    out << var;
    if (e != 1) {
      out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace fiatcells
