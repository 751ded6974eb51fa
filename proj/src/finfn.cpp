#include "frep/finfn.hpp"

#include <algorithm>
#include <numeric>

namespace frep {

FinFn::FinFn(unsigned dom_, unsigned cod_, std::vector<unsigned> values_)
    : dom(dom_), cod(cod_), values(std::move(values_)) {
  if (values.size() != dom) throw InvalidArgument("one-line notation length does not match domain");
  if (dom > 0 && cod == 0) throw InvalidArgument("no functions into [0] from a nonempty set");
  for (unsigned v : values)
    if (v < 1 || v > cod) throw InvalidArgument("function value out of range");
}

FinFn FinFn::identity(unsigned k) {
  std::vector<unsigned> v(k);
  std::iota(v.begin(), v.end(), 1u);
  return FinFn(k, k, std::move(v));
}

FinFn FinFn::inclusion(unsigned k) {
  std::vector<unsigned> v(k);
  std::iota(v.begin(), v.end(), 1u);
  return FinFn(k, k + 1, std::move(v));
}

bool FinFn::is_identity() const {
  if (dom != cod) return false;
  for (unsigned i = 0; i < dom; ++i)
    if (values[i] != i + 1) return false;
  return true;
}

bool FinFn::is_injective() const {
  std::vector<bool> seen(cod, false);
  for (unsigned v : values) {
    if (seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

bool FinFn::is_surjective() const {
  std::vector<bool> seen(cod, false);
  std::size_t hit = 0;
  for (unsigned v : values)
    if (!seen[v - 1]) {
      seen[v - 1] = true;
      ++hit;
    }
  return hit == cod;
}

bool FinFn::is_bijection() const { return dom == cod && is_injective(); }

FinFn compose(const FinFn& f, const FinFn& g) {
  if (f.cod != g.dom) throw InvalidArgument("composition interface mismatch");
  std::vector<unsigned> v(f.dom);
  for (unsigned i = 0; i < f.dom; ++i) v[i] = g.values[f.values[i] - 1];
  return FinFn(f.dom, g.cod, std::move(v));
}

std::vector<FinFn> enumerate_functions(unsigned p, unsigned q) {
  std::vector<FinFn> out;
  if (p == 0) {
    out.push_back(FinFn(0, q, {}));
    return out;
  }
  if (q == 0) return out;
  out.reserve(function_count(p, q));
  std::vector<unsigned> v(p, 1);
  while (true) {
    out.push_back(FinFn(p, q, v));
    unsigned i = p;
    while (i > 0) {
      if (v[i - 1] < q) {
        ++v[i - 1];
        break;
      }
      v[i - 1] = 1;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

std::vector<FinFn> enumerate_permutations(unsigned k) {
  std::vector<unsigned> v(k);
  std::iota(v.begin(), v.end(), 1u);
  std::vector<FinFn> out;
  do {
    out.push_back(FinFn(k, k, v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<FinFn> enumerate_injections(unsigned p, unsigned q) {
  std::vector<FinFn> out;
  if (p > q) return out;
  for (FinFn& f : enumerate_functions(p, q))
    if (f.is_injective()) out.push_back(std::move(f));
  return out;
}

std::size_t function_index(const FinFn& f) {
  std::size_t idx = 0;
  for (unsigned i = 0; i < f.dom; ++i) idx = idx * f.cod + (f.values[i] - 1);
  return idx;
}

FinFn function_from_index(unsigned p, unsigned q, std::size_t index) {
  std::vector<unsigned> v(p);
  for (unsigned i = p; i > 0; --i) {
    v[i - 1] = static_cast<unsigned>(index % q) + 1;
    index /= q;
  }
  return FinFn(p, q, std::move(v));
}

int sign(const FinFn& sigma) {
  if (!sigma.is_bijection()) throw InvalidArgument("sign requires a bijection");
  std::vector<bool> seen(sigma.dom, false);
  int s = 1;
  for (unsigned i = 0; i < sigma.dom; ++i) {
    if (seen[i]) continue;
    unsigned len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = sigma.values[j] - 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::vector<unsigned> cycle_type(const FinFn& sigma) {
  if (!sigma.is_bijection()) throw InvalidArgument("cycle type requires a bijection");
  std::vector<bool> seen(sigma.dom, false);
  std::vector<unsigned> type;
  for (unsigned i = 0; i < sigma.dom; ++i) {
    if (seen[i]) continue;
    unsigned len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = sigma.values[j] - 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

FinFn inverse(const FinFn& sigma) {
  if (!sigma.is_bijection()) throw InvalidArgument("inverse requires a bijection");
  std::vector<unsigned> v(sigma.dom);
  for (unsigned i = 0; i < sigma.dom; ++i) v[sigma.values[i] - 1] = i + 1;
  return FinFn(sigma.dom, sigma.cod, std::move(v));
}

std::vector<std::size_t> fixed_point_counts(const FinFn& f, unsigned up_to) {
  if (f.dom != f.cod) throw InvalidArgument("fixed point counts require an endofunction");
  std::vector<std::size_t> out;
  FinFn power = f;
  for (unsigned i = 1; i <= up_to; ++i) {
    std::size_t fixed = 0;
    for (unsigned x = 0; x < f.dom; ++x)
      if (power.values[x] == x + 1) ++fixed;
    out.push_back(fixed);
    if (i < up_to) power = compose(power, f);
  }
  return out;
}

std::string to_string(const FinFn& f) {
  if (f.dom == 0) return "()";
  if (f.dom <= 9 && f.cod <= 9) {
    std::string s;
    for (unsigned v : f.values) s.push_back(static_cast<char>('0' + v));
    return s;
  }
  std::string s = "(";
  for (unsigned i = 0; i < f.dom; ++i) {
    if (i) s += ",";
    s += std::to_string(f.values[i]);
  }
  return s + ")";
}

FinFn finfn_from_string(const std::string& text, unsigned dom, unsigned cod) {
  std::vector<unsigned> v;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw InvalidArgument("unterminated function literal: " + text);
    std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!part.empty()) v.push_back(static_cast<unsigned>(std::stoul(part)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidArgument("bad digit in function literal: " + text);
      v.push_back(static_cast<unsigned>(c - '0'));
    }
  }
  if (v.size() != dom) throw InvalidArgument("function literal has wrong arity: " + text);
  for (unsigned x : v)
    if (x < 1 || x > cod) throw InvalidArgument("function literal out of range: " + text);
  return FinFn(dom, cod, std::move(v));
}

}  // namespace frep
