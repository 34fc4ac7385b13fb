#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace diffop {

enum class Var : int { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Var, 3> kVars = {Var::X, Var::Y, Var::Z};

inline char var_name(Var v) { return "xyz"[static_cast<int>(v)]; }

// Exponent triple (a, b, c) standing for x^a y^b z^c.
struct Monomial {
  int32_t x = 0;
  int32_t y = 0;
  int32_t z = 0;

  int32_t degree() const { return x + y + z; }

  int32_t operator[](Var v) const {
    switch (v) {
      case Var::X: return x;
      case Var::Y: return y;
      default: return z;
    }
  }

  int32_t& operator[](Var v) {
    switch (v) {
      case Var::X: return x;
      case Var::Y: return y;
      default: return z;
    }
  }

  bool divides(const Monomial& m) const {
    return x <= m.x && y <= m.y && z <= m.z;
  }

  Monomial operator*(const Monomial& m) const {
    return {x + m.x, y + m.y, z + m.z};
  }

  // Caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const {
    return {x - m.x, y - m.y, z - m.z};
  }

  bool operator==(const Monomial& m) const = default;

  bool is_one() const { return x == 0 && y == 0 && z == 0; }
};

// Graded lexicographic with x > y > z. operator() is "a comes strictly
// before b", so maps ordered with this comparator list highest terms first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.x != b.x) return a.x > b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.z > b.z;
  }
};

inline Monomial monomial_of(Var v, int32_t e = 1) {
  Monomial m;
  m[v] = e;
  return m;
}

std::string to_string(const Monomial& m);

}  // namespace diffop
