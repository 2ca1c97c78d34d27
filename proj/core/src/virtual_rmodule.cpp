#include "sl2dirac/virtual_rmodule.hpp"

#include <sstream>

namespace sl2dirac {

VirtualRModule VirtualRModule::single(Weight w, long long mult) {
  VirtualRModule v;
  v.add(w, mult);
  return v;
}

void VirtualRModule::add(Weight w, long long mult) {
  if (mult == 0) return;
  const auto it = coeff_.find(w);
  if (it == coeff_.end()) {
    coeff_.emplace(w, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) coeff_.erase(it);
}

long long VirtualRModule::coeff(Weight w) const {
  const auto it = coeff_.find(w);
  return it == coeff_.end() ? 0 : it->second;
}

VirtualRModule& VirtualRModule::operator+=(const VirtualRModule& o) {
  for (const auto& [w, c] : o.coeff_) add(w, c);
  return *this;
}

VirtualRModule& VirtualRModule::operator-=(const VirtualRModule& o) {
  for (const auto& [w, c] : o.coeff_) add(w, -c);
  return *this;
}

VirtualRModule VirtualRModule::operator-() const {
  VirtualRModule v;
  for (const auto& [w, c] : coeff_) v.add(w, -c);
  return v;
}

std::string VirtualRModule::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : coeff_) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const long long a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "[" << w << "]";
    first = false;
  }
  return os.str();
}

}  // namespace sl2dirac
