#include <sstream>

#include "hessgkm/errors.hpp"
#include "hessgkm/torus/torus.hpp"

namespace hessgkm {

Character Character::zero(int n) { return Character{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)}; }

Character Character::unit(int n, int i) {
  if (i < 1 || i > n) throw InvalidArgument("character index out of range");
  Character c = zero(n);
  c.exponents[static_cast<std::size_t>(i - 1)] = 1;
  return c;
}

Character Character::ratio(int n, int numerator_index, int denominator_index) {
  Character c = zero(n);
  if (numerator_index != 0) c.exponents[static_cast<std::size_t>(numerator_index - 1)] += 1;
  if (denominator_index != 0) c.exponents[static_cast<std::size_t>(denominator_index - 1)] -= 1;
  return c;
}

bool Character::is_zero() const {
  for (auto a : exponents) {
    if (a != 0) return false;
  }
  return true;
}

mpq_class Character::evaluate(const std::vector<mpq_class>& t) const {
  if (t.size() != exponents.size()) throw InvalidArgument("torus point has wrong length");
  mpq_class value = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const auto a = exponents[i];
    if (a == 0) continue;
    if (t[i] == 0) throw InvalidArgument("torus point has a zero coordinate");
    mpq_class p = 1;
    for (std::int64_t k = 0; k < (a < 0 ? -a : a); ++k) p *= t[i];
    if (a < 0) p = 1 / p;
    value *= p;
  }
  return value;
}

std::string Character::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const auto a = exponents[i];
    if (a == 0) continue;
    if (first) {
      if (a < 0) out << '-';
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    const auto mag = a < 0 ? -a : a;
    if (mag != 1) out << mag;
    out << 'e' << (i + 1);
    first = false;
  }
  return first ? "0" : out.str();
}

Character operator+(const Character& a, const Character& b) {
  if (a.size() != b.size()) throw InvalidArgument("character length mismatch");
  Character c = a;
  for (std::size_t i = 0; i < c.exponents.size(); ++i) c.exponents[i] += b.exponents[i];
  return c;
}

Character operator-(const Character& a, const Character& b) { return a + (-b); }

Character operator-(const Character& a) {
  Character c = a;
  for (auto& x : c.exponents) x = -x;
  return c;
}

Cocharacter Cocharacter::regular(int n) {
  Cocharacter s;
  for (int i = 1; i <= n; ++i) s.exponents.push_back(i);
  return s;
}

Cocharacter Cocharacter::conjugated_regular(const Permutation& w) {
  Cocharacter s;
  for (int i = 1; i <= w.size(); ++i) s.exponents.push_back(w(i));
  return s;
}

std::int64_t pairing(const Character& chi, const Cocharacter& lambda) {
  if (chi.exponents.size() != lambda.exponents.size()) throw InvalidArgument("pairing length mismatch");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < chi.exponents.size(); ++i) sum += chi.exponents[i] * lambda.exponents[i];
  return sum;
}

}  // namespace hessgkm
