#include "frep/mpoly.hpp"

#include <algorithm>
#include <mutex>

#include "frep/error.hpp"

namespace frep {

namespace {
void trim(std::vector<unsigned>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}
}  // namespace

MPoly MPoly::constant(const Rational& c) {
  MPoly p;
  if (c != 0) p.terms.emplace(std::vector<unsigned>{}, c);
  return p;
}

MPoly MPoly::variable(unsigned i) {
  MPoly p;
  std::vector<unsigned> e(i + 1, 0);
  e[i] = 1;
  p.terms.emplace(std::move(e), Rational(1));
  return p;
}

void MPoly::insert(std::vector<unsigned> expo, const Rational& c) {
  if (c == 0) return;
  trim(expo);
  auto [it, fresh] = terms.emplace(std::move(expo), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms) out.insert(e, c);
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms) out.insert(e, -c);
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly out;
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      std::vector<unsigned> e(std::max(e1.size(), e2.size()), 0);
      for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
      for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
      out.insert(std::move(e), c1 * c2);
    }
  return out;
}

Rational MPoly::evaluate(const std::vector<Rational>& values) const {
  Rational total(0);
  for (const auto& [e, c] : terms) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= values.size()) throw InvalidArgument("not enough values for polynomial evaluation");
      for (unsigned j = 0; j < e[i]; ++j) t *= values[i];
    }
    total += t;
  }
  return total;
}

std::vector<Rational> MPoly::collapse_univariate() const {
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : terms) {
    unsigned deg = 0;
    for (unsigned x : e) deg += x;
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
    coeffs[deg] += c;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

unsigned MPoly::max_variable() const {
  unsigned m = 0;
  for (const auto& [e, c] : terms) m = std::max(m, static_cast<unsigned>(e.size()));
  return m == 0 ? 0 : m - 1;
}

std::string MPoly::to_string() const {
  if (terms.empty()) return "0";
  // Sort by total degree descending, then by exponent vector.
  std::vector<std::pair<std::vector<unsigned>, Rational>> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned x : a.first) da += x;
    for (unsigned x : b.first) db += x;
    if (da != db) return da > db;
    return a.first < b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rat_to_string(a);
    } else {
      if (a != 1) out += rat_to_string(a) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

// Newton recurrences; cached since the resolver asks repeatedly.
MPoly elementary_in_power_sums(unsigned m) {
  static std::mutex mutex;
  static std::vector<MPoly> cache{MPoly::constant(Rational(1))};
  std::scoped_lock lock(mutex);
  while (cache.size() <= m) {
    unsigned j = static_cast<unsigned>(cache.size());
    MPoly sum;
    for (unsigned i = 1; i <= j; ++i) {
      MPoly t = MPoly::variable(i) * cache[j - i];
      if (i % 2 == 0) t = MPoly::constant(Rational(-1)) * t;
      sum = sum + t;
    }
    cache.push_back(MPoly::constant(Rational(1, static_cast<long>(j))) * sum);
  }
  return cache[m];
}

MPoly complete_in_power_sums(unsigned m) {
  static std::mutex mutex;
  static std::vector<MPoly> cache{MPoly::constant(Rational(1))};
  std::scoped_lock lock(mutex);
  while (cache.size() <= m) {
    unsigned j = static_cast<unsigned>(cache.size());
    MPoly sum;
    for (unsigned i = 1; i <= j; ++i) sum = sum + MPoly::variable(i) * cache[j - i];
    cache.push_back(MPoly::constant(Rational(1, static_cast<long>(j))) * sum);
  }
  return cache[m];
}

MPoly schur_in_power_sums(const Partition& lambda) {
  // Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
  unsigned l = lambda.rows();
  if (l == 0) return MPoly::constant(Rational(1));
  std::vector<std::vector<MPoly>> m(l, std::vector<MPoly>(l));
  for (unsigned i = 0; i < l; ++i)
    for (unsigned j = 0; j < l; ++j) {
      long idx = static_cast<long>(lambda.parts[i]) - static_cast<long>(i) + static_cast<long>(j);
      m[i][j] = idx < 0 ? MPoly() : complete_in_power_sums(static_cast<unsigned>(idx));
    }
  // Laplace expansion over the first column; shapes stay tiny.
  std::vector<unsigned> cols(l);
  for (unsigned j = 0; j < l; ++j) cols[j] = j;
  struct Det {
    const std::vector<std::vector<MPoly>>& m;
    MPoly run(unsigned row, std::vector<unsigned> cols) {
      if (cols.empty()) return MPoly::constant(Rational(1));
      MPoly out;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (m[row][cols[j]].is_zero()) continue;
        std::vector<unsigned> rest;
        for (std::size_t t = 0; t < cols.size(); ++t)
          if (t != j) rest.push_back(cols[t]);
        MPoly sub = run(row + 1, std::move(rest));
        MPoly term = m[row][cols[j]] * sub;
        if (j % 2 == 1) term = MPoly::constant(Rational(-1)) * term;
        out = out + term;
      }
      return out;
    }
  } det{m};
  return det.run(0, std::move(cols));
}

}  // namespace frep
