#pragma once

#include <map>
#include <string>

namespace sl2dirac {

/// h-eigenvalue. Everything in scope is integrally graded.
using Weight = int;

/// Element of the Grothendieck group of semisimple weight modules for the
/// torus: a finitely supported signed multiset of weights. Zero coefficients
/// are never stored, so equality is plain map equality.
class VirtualRModule {
 public:
  VirtualRModule() = default;

  static VirtualRModule single(Weight w, long long mult = 1);

  void add(Weight w, long long mult);
  long long coeff(Weight w) const;
  bool is_zero() const { return coeff_.empty(); }

  VirtualRModule& operator+=(const VirtualRModule& o);
  VirtualRModule& operator-=(const VirtualRModule& o);
  friend VirtualRModule operator+(VirtualRModule a, const VirtualRModule& b) {
    return a += b;
  }
  friend VirtualRModule operator-(VirtualRModule a, const VirtualRModule& b) {
    return a -= b;
  }
  VirtualRModule operator-() const;

  friend bool operator==(const VirtualRModule& a, const VirtualRModule& b) {
    return a.coeff_ == b.coeff_;
  }

  const std::map<Weight, long long>& coefficients() const { return coeff_; }

  /// e.g. "-[1] - [-1]", weights in ascending order; "0" when empty.
  std::string str() const;

 private:
  std::map<Weight, long long> coeff_;
};

}  // namespace sl2dirac
