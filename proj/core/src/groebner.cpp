#include "diffop/groebner.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace diffop {

namespace {

Monomial lcm(const Monomial& a, const Monomial& b) {
  return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}

bool coprime(const Monomial& a, const Monomial& b) {
  return (a * b) == lcm(a, b);
}

Polynomial make_monic(const Polynomial& p) {
  return p * (Rational(1) / p.leading_term().second);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const auto& [fm, fc] = f.leading_term();
  const auto& [gm, gc] = g.leading_term();
  Monomial l = lcm(fm, gm);
  return f * Polynomial(Rational(1) / fc, l / fm) - g * Polynomial(Rational(1) / gc, l / gm);
}

}  // namespace

Polynomial reduce_by_set(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial remainder;
  Polynomial work = p;
  while (!work.is_zero()) {
    const auto& [m, c] = work.leading_term();
    bool reduced = false;
    for (const Polynomial& g : basis) {
      const auto& [gm, gc] = g.leading_term();
      if (gm.divides(m)) {
        work -= g * Polynomial(c / gc, m / gm);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.add_term(m, c);
      work.add_term(m, -c);
    }
  }
  return remainder;
}

GroebnerBasis buchberger(std::vector<Polynomial> generators) {
  std::vector<Polynomial> basis;
  for (auto& g : generators)
    if (!g.is_zero()) basis.push_back(make_monic(g));

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(basis[i].leading_term().first, basis[j].leading_term().first)) continue;
    Polynomial r = reduce_by_set(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // Interreduce: drop generators with redundant leading terms, then fully
  // tail-reduce each survivor against the others.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& mi = basis[i].leading_term().first;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& mj = basis[j].leading_term().first;
      if (mj.divides(mi) && !(mi == mj && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  GroebnerBasis out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = reduce_by_set(minimal[i], others);
    if (!r.is_zero()) out.generators.push_back(make_monic(r));
  }
  std::sort(out.generators.begin(), out.generators.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return GradedLexGreater{}(a.leading_term().first, b.leading_term().first);
            });
  return out;
}

bool has_pure_power_lead(const GroebnerBasis& basis, Var v) {
  for (const Polynomial& g : basis.generators) {
    const Monomial& m = g.leading_term().first;
    if (m[v] > 0 && m[v] == m.degree()) return true;
  }
  return false;
}

}  // namespace diffop
