#include "frep/presentation.hpp"

namespace frep {

namespace {

Presentation imrep(const std::string& name, const LinComb& v) {
  QfMat f(ObjList::single(v.dom), ObjList::single(v.cod));
  f.at(0, 0) = v;
  return Presentation(name, std::move(f), QfMat(ObjList::single(v.cod), ObjList{}));
}

// All functions [k] -> [k] identifying one pair of points: composing with
// them spans exactly the non-injective part of a hom space.
std::vector<FinFn> pair_collapses(unsigned k) {
  std::vector<FinFn> out;
  for (unsigned a = 1; a <= k; ++a)
    for (unsigned b = a + 1; b <= k; ++b) {
      std::vector<unsigned> v(k);
      for (unsigned i = 1, next = 1; i <= k; ++i) {
        if (i == b)
          v[i - 1] = v[a - 1];
        else
          v[i - 1] = next++;
      }
      out.push_back(FinFn(k, k, std::move(v)));
    }
  return out;
}

// C_lambda = <c_lambda  n_1 ... n_m> / <n_1 ... n_m> with n_i the pair
// collapses: the injection-span quotient cut out by the symmetrizer.
Presentation c_lambda(const std::string& name, const Partition& lambda) {
  unsigned k = lambda.size();
  auto collapses = pair_collapses(k);
  std::vector<unsigned> y_sizes(1 + collapses.size(), k);
  ObjList y(y_sizes);
  QfMat f(ObjList::single(k), y);
  f.at(0, 0) = young_symmetrizer(lambda);
  for (std::size_t i = 0; i < collapses.size(); ++i) f.at(0, 1 + i) = LinComb(collapses[i]);
  ObjList z(std::vector<unsigned>(collapses.size(), k));
  QfMat g(y, z);
  for (std::size_t i = 0; i < collapses.size(); ++i) g.at(1 + i, i) = LinComb::identity(k);
  return Presentation(name, std::move(f), std::move(g));
}

}  // namespace

Presentation builtin_presentation(const std::string& uri) {
  std::string body = uri;
  const std::string scheme = "builtin:";
  if (body.rfind(scheme, 0) == 0) body = body.substr(scheme.size());
  std::string kind = body, arg;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    kind = body.substr(0, slash);
    arg = body.substr(slash + 1);
  }
  auto nat_arg = [&]() -> unsigned {
    if (arg.empty()) throw InvalidArgument("builtin '" + kind + "' needs a numeric argument");
    return static_cast<unsigned>(std::stoul(arg));
  };
  std::string name = "builtin:" + kind + (arg.empty() ? "" : "/" + arg);

  if (kind == "tensor") {
    unsigned k = nat_arg();
    QfMat f = qf_identity(ObjList::single(k));
    return Presentation(name, f, QfMat(ObjList::single(k), ObjList{}));
  }
  if (kind == "s") return imrep(name, tau(nat_arg()));
  if (kind == "lambda") return imrep(name, epsilon(nat_arg()));
  if (kind == "theta") {
    unsigned k = nat_arg();
    return imrep(name, lc_sub(LinComb::identity(k), epsilon(k)));
  }
  if (kind == "p") {
    Partition lambda = partition_from_string(arg);
    return imrep(name, young_symmetrizer(lambda));
  }
  if (kind == "d") {
    unsigned k = nat_arg();
    if (k < 1) throw InvalidArgument("builtin d/k needs k >= 1; use d0 for the point functor");
    return imrep(name, partial(k - 1));
  }
  if (kind == "d0") {
    // <[0]> / <the inclusion [0] -> [1]>: one dimension at the empty set.
    QfMat f = qf_identity(ObjList::single(0));
    QfMat g(ObjList::single(0), ObjList::single(1));
    g.at(0, 0) = LinComb(FinFn(0, 1, {}));
    return Presentation(name, std::move(f), std::move(g));
  }
  if (kind == "c") return c_lambda(name, partition_from_string(arg));
  throw InvalidArgument("unknown builtin kind '" + kind + "'");
}

}  // namespace frep
