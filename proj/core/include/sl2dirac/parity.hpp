#pragma once

namespace sl2dirac {

/// Z/2 grading of the spin factor: Even lives in the "+" half, Odd in "-".
enum class Parity { Even, Odd };

inline Parity flip(Parity p) {
  return p == Parity::Even ? Parity::Odd : Parity::Even;
}

inline char parity_symbol(Parity p) { return p == Parity::Even ? '+' : '-'; }

}  // namespace sl2dirac
