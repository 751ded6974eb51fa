#include "frep/presentation.hpp"

#include <cctype>

namespace frep {

Presentation::Presentation(std::string name_, QfMat f_, QfMat g_)
    : name(std::move(name_)), f(std::move(f_)), g(std::move(g_)) {
  if (!(f.dst == g.src)) throw InvalidArgument("presentation maps are not composable: f.dst != g.src");
}

unsigned degree_bound(const Presentation& p) { return p.f.dst.max_size(); }

static std::string object_text(const ObjList& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < x.components(); ++i) {
    if (i) s += " (+) ";
    s += "[" + std::to_string(x.sizes[i]) + "]";
  }
  return s;
}

static std::string matrix_text(const QfMat& m) {
  if (m.src.components() == 0 || m.dst.components() == 0) return "[[ ]]";
  std::string s = "[[ ";
  for (std::size_t i = 0; i < m.src.components(); ++i) {
    if (i) s += " ; ";
    for (std::size_t j = 0; j < m.dst.components(); ++j) {
      if (j) s += " , ";
      s += to_string(m.at(i, j));
    }
  }
  return s + " ]]";
}

static std::string identifier_name(const std::string& name) {
  if (name.empty()) return "V";
  std::string out;
  for (char c : name) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(out.begin(), '_');
  return out;
}

std::string serialize(const Presentation& p) {
  std::string out;
  out += "object X = " + object_text(p.f.src) + "\n";
  out += "object Y = " + object_text(p.f.dst) + "\n";
  out += "map f : X -> Y = " + matrix_text(p.f) + "\n";
  if (p.has_relations()) {
    out += "object Z = " + object_text(p.g.dst) + "\n";
    out += "map g : Y -> Z = " + matrix_text(p.g) + "\n";
    out += "present " + identifier_name(p.name) + " = f / f g\n";
  } else {
    out += "present " + identifier_name(p.name) + " = f\n";
  }
  return out;
}

}  // namespace frep
