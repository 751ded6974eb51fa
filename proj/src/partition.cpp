#include "frep/partition.hpp"

#include <algorithm>
#include <numeric>

#include "frep/rational.hpp"

namespace frep {

Partition::Partition(std::vector<unsigned> parts_) : parts(std::move(parts_)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

unsigned Partition::size() const {
  unsigned s = 0;
  for (unsigned p : parts) s += p;
  return s;
}

bool Partition::operator<(const Partition& o) const {
  if (size() != o.size()) return size() < o.size();
  return parts < o.parts;
}

std::string to_string(const Partition& p) {
  if (p.parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts[i]);
  }
  return s;
}

Partition partition_from_string(const std::string& text) {
  if (text.empty() || text == "0" || text == "()") return Partition{};
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    parts.push_back(static_cast<unsigned>(std::stoul(part)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

static void gen_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& acc,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

std::vector<Partition> partitions_of(unsigned k) {
  std::vector<Partition> out;
  std::vector<unsigned> acc;
  gen_partitions(k, k == 0 ? 1 : k, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

unsigned long factorial(unsigned n) {
  unsigned long f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

unsigned long binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b.get_ui();
}

static std::vector<std::vector<unsigned>> hook_lengths(const Partition& lambda) {
  const auto& rows = lambda.parts;
  std::vector<unsigned> col_height;
  if (!rows.empty()) col_height.assign(rows[0], 0);
  for (unsigned r = 0; r < rows.size(); ++r)
    for (unsigned c = 0; c < rows[r]; ++c) col_height[c] = r + 1;
  std::vector<std::vector<unsigned>> hooks(rows.size());
  for (unsigned r = 0; r < rows.size(); ++r) {
    hooks[r].resize(rows[r]);
    for (unsigned c = 0; c < rows[r]; ++c)
      hooks[r][c] = (rows[r] - c) + (col_height[c] - r) - 1;
  }
  return hooks;
}

unsigned long specht_dim(const Partition& lambda) {
  unsigned k = lambda.size();
  Integer num = 1;
  for (unsigned i = 2; i <= k; ++i) num *= i;
  for (const auto& row : hook_lengths(lambda))
    for (unsigned h : row) num /= h;
  return num.get_ui();
}

unsigned long schur_dim(const Partition& lambda, unsigned n) {
  if (lambda.rows() > n) return 0;
  auto hooks = hook_lengths(lambda);
  Rational d(1);
  for (unsigned r = 0; r < lambda.parts.size(); ++r)
    for (unsigned c = 0; c < lambda.parts[r]; ++c) {
      long content = static_cast<long>(c) - static_cast<long>(r);
      d *= Rational(static_cast<long>(n) + content, static_cast<long>(hooks[r][c]));
      d.canonicalize();
    }
  if (d.get_den() != 1) throw InternalError("hook content formula produced a non-integer");
  return d.get_num().get_ui();
}

unsigned long stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n == 0) return 1;  // S(0,0) = 1
  if (k == 0) return 0;
  std::vector<std::vector<unsigned long>> s(n + 1, std::vector<unsigned long>(k + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= std::min(i, k); ++j)
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

}  // namespace frep
