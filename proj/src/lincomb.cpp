#include "frep/lincomb.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace frep {

void LinComb::insert(const FinFn& f, const Rational& c) {
  if (f.dom != dom || f.cod != cod) throw InvalidArgument("term does not match interface of combination");
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(f, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LinComb lc_add(const LinComb& a, const LinComb& b) {
  if (a.dom != b.dom || a.cod != b.cod) throw InvalidArgument("sum interface mismatch");
  LinComb out = a;
  for (const auto& [f, c] : b.terms) out.insert(f, c);
  return out;
}

LinComb lc_sub(const LinComb& a, const LinComb& b) {
  if (a.dom != b.dom || a.cod != b.cod) throw InvalidArgument("difference interface mismatch");
  LinComb out = a;
  for (const auto& [f, c] : b.terms) out.insert(f, -c);
  return out;
}

LinComb lc_scale(const Rational& c, const LinComb& a) {
  LinComb out(a.dom, a.cod);
  if (c == 0) return out;
  for (const auto& [f, coeff] : a.terms) out.terms.emplace(f, c * coeff);
  return out;
}

LinComb lc_compose(const LinComb& u, const LinComb& v) {
  if (u.cod != v.dom) throw InvalidArgument("composition interface mismatch");
  LinComb out(u.dom, v.cod);
  for (const auto& [f, cf] : u.terms)
    for (const auto& [g, cg] : v.terms) out.insert(compose(f, g), cf * cg);
  return out;
}

LinComb lc_compose(const LinComb& u, const FinFn& v) {
  if (u.cod != v.dom) throw InvalidArgument("composition interface mismatch");
  LinComb out(u.dom, v.cod);
  for (const auto& [f, c] : u.terms) out.insert(compose(f, v), c);
  return out;
}

LinComb lc_compose(const FinFn& u, const LinComb& v) {
  if (u.cod != v.dom) throw InvalidArgument("composition interface mismatch");
  LinComb out(u.dom, v.cod);
  for (const auto& [g, c] : v.terms) out.insert(compose(u, g), c);
  return out;
}

LinComb tau(unsigned k) {
  LinComb out(k, k);
  Rational c(1, static_cast<long>(factorial(k)));
  c.canonicalize();
  for (const FinFn& s : enumerate_permutations(k)) out.insert(s, c);
  return out;
}

LinComb epsilon(unsigned k) {
  LinComb out(k, k);
  Rational c(1, static_cast<long>(factorial(k)));
  c.canonicalize();
  for (const FinFn& s : enumerate_permutations(k)) out.insert(s, sign(s) * c);
  return out;
}

LinComb partial(unsigned k) {
  return lc_compose(epsilon(k), lc_compose(LinComb(FinFn::inclusion(k)), epsilon(k + 1)));
}

// All permutations of [k] moving only the given blocks, with their signs.
static void block_group(const std::vector<std::vector<unsigned>>& blocks, unsigned k,
                        std::vector<std::pair<FinFn, int>>& out) {
  std::vector<std::vector<std::vector<unsigned>>> perms_per_block;
  for (const auto& b : blocks) {
    std::vector<unsigned> p = b;
    std::sort(p.begin(), p.end());
    std::vector<std::vector<unsigned>> all;
    do {
      all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    perms_per_block.push_back(std::move(all));
  }
  std::vector<std::size_t> choice(blocks.size(), 0);
  while (true) {
    std::vector<unsigned> img(k);
    for (unsigned i = 0; i < k; ++i) img[i] = i + 1;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& sorted = perms_per_block[b].front();
      const auto& target = perms_per_block[b][choice[b]];
      for (std::size_t i = 0; i < sorted.size(); ++i) img[sorted[i] - 1] = target[i];
    }
    FinFn s(k, k, std::move(img));
    out.emplace_back(s, sign(s));
    std::size_t b = 0;
    while (b < blocks.size()) {
      if (++choice[b] < perms_per_block[b].size()) break;
      choice[b] = 0;
      ++b;
    }
    if (b == blocks.size()) break;
  }
}

LinComb young_symmetrizer(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, LinComb> cache;
  {
    std::scoped_lock lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  unsigned k = lambda.size();
  // Canonical tableau: cell (r, c) holds the next integer row by row.
  std::vector<std::vector<unsigned>> row_blocks, col_blocks;
  {
    unsigned next = 1;
    std::vector<std::vector<unsigned>> cols(lambda.parts.empty() ? 0 : lambda.parts[0]);
    for (unsigned r = 0; r < lambda.parts.size(); ++r) {
      std::vector<unsigned> row;
      for (unsigned c = 0; c < lambda.parts[r]; ++c) {
        row.push_back(next);
        cols[c].push_back(next);
        ++next;
      }
      row_blocks.push_back(std::move(row));
    }
    col_blocks = std::move(cols);
  }
  std::vector<std::pair<FinFn, int>> rows, cols;
  block_group(row_blocks, k, rows);
  block_group(col_blocks, k, cols);
  LinComb out(k, k);
  Rational norm(static_cast<long>(specht_dim(lambda)), static_cast<long>(factorial(k)));
  norm.canonicalize();
  for (const auto& [r, rs] : rows)
    for (const auto& [c, cs] : cols) out.insert(compose(r, c), cs * norm);
  std::scoped_lock lock(mutex);
  return cache.emplace(lambda, std::move(out)).first->second;
}

std::string to_string(const LinComb& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [f, c] : v.terms) {
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
    if (a != 1) out += rat_to_string(a) + "*";
    out += to_string(f);
    first = false;
  }
  return out;
}

namespace {

struct LcLexer {
  const std::string& s;
  std::size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return s[pos];
  }
};

}  // namespace

LinComb lincomb_from_string(const std::string& text, unsigned dom, unsigned cod) {
  LinComb out(dom, cod);
  LcLexer lx{text};
  if (lx.eof()) throw InvalidArgument("empty linear combination");
  if (!lx.eof() && lx.peek() == '0') {
    std::size_t save = lx.pos;
    ++lx.pos;
    if (lx.eof()) return out;  // literal zero
    lx.pos = save;
  }
  bool first = true;
  while (!lx.eof()) {
    Rational sign_c(1);
    char c = lx.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign_c = -1;
      ++lx.pos;
    } else if (!first) {
      throw InvalidArgument("expected '+' or '-' in linear combination: " + text);
    }
    if (lx.eof()) throw InvalidArgument("dangling sign in linear combination: " + text);
    // Optional coefficient: digits [/ digits] followed by '*'.
    Rational coeff(1);
    std::size_t save = lx.pos;
    std::string num;
    while (lx.pos < lx.s.size() &&
           (std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '/'))
      num.push_back(lx.s[lx.pos++]);
    lx.skip();
    if (!num.empty() && lx.pos < lx.s.size() && lx.s[lx.pos] == '*') {
      ++lx.pos;
      coeff = rat_from_string(num);
    } else {
      lx.pos = save;
    }
    // Function literal: digit run or parenthesized list.
    lx.skip();
    std::string lit;
    if (lx.pos < lx.s.size() && lx.s[lx.pos] == '(') {
      while (lx.pos < lx.s.size()) {
        lit.push_back(lx.s[lx.pos]);
        if (lx.s[lx.pos++] == ')') break;
      }
    } else {
      while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
        lit.push_back(lx.s[lx.pos++]);
    }
    if (lit.empty()) throw InvalidArgument("expected function literal in: " + text);
    out.insert(finfn_from_string(lit, dom, cod), sign_c * coeff);
    first = false;
  }
  return out;
}

}  // namespace frep
