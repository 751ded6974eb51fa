#include "frep.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "frep/resolver.hpp"
#include "frep/squish.hpp"

using namespace frep;

struct frep_presentation {
  Presentation p;
};

struct frep_resolution {
  Resolution r;
  DimPoly dim;
  CharPoly character;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

EvalOptions options(size_t row_cap) {
  EvalOptions opts;
  if (row_cap > 0) opts.row_cap = row_cap;
  return opts;
}

template <typename Fn>
frep_status guarded(Fn&& fn) {
  try {
    fn();
    return FREP_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return FREP_ERR_PARSE;
  } catch (const CapExceeded& e) {
    g_last_error = e.what();
    return FREP_ERR_CAP;
  } catch (const VerifyFailure& e) {
    g_last_error = e.what();
    return FREP_ERR_VERIFY;
  } catch (const InvalidArgument& e) {
    g_last_error = e.what();
    return FREP_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FREP_ERR_INTERNAL;
  }
}

std::string term_text(const ResolutionTerm& t) {
  std::string s;
  bool first = true;
  for (unsigned l : t.d_indices) {
    if (!first) s += " + ";
    s += "D_" + std::to_string(l);
    first = false;
  }
  for (const Partition& lam : t.schur) {
    if (!first) s += " + ";
    s += "P_(" + to_string(lam) + ")";
    first = false;
  }
  return first ? "0" : s;
}

}  // namespace

extern "C" {

const char* frep_last_error(void) { return g_last_error.c_str(); }

void frep_string_free(char* s) { std::free(s); }

frep_status frep_presentation_parse(const char* text, frep_presentation** out) {
  return guarded([&] {
    if (!text || !out) throw InvalidArgument("null argument");
    *out = new frep_presentation{parse_presentation(text)};
  });
}

frep_status frep_presentation_builtin(const char* uri, frep_presentation** out) {
  return guarded([&] {
    if (!uri || !out) throw InvalidArgument("null argument");
    *out = new frep_presentation{builtin_presentation(uri)};
  });
}

void frep_presentation_free(frep_presentation* p) { delete p; }

frep_status frep_presentation_serialize(const frep_presentation* p, char** out) {
  return guarded([&] {
    if (!p || !out) throw InvalidArgument("null argument");
    *out = dup_string(serialize(p->p));
  });
}

frep_status frep_degree_bound(const frep_presentation* p, unsigned* out) {
  return guarded([&] {
    if (!p || !out) throw InvalidArgument("null argument");
    *out = degree_bound(p->p);
  });
}

frep_status frep_eval_dim(const frep_presentation* p, unsigned n, size_t row_cap,
                          unsigned long* dim_out) {
  return guarded([&] {
    if (!p || !dim_out) throw InvalidArgument("null argument");
    *dim_out = eval(p->p, n, options(row_cap)).dim;
  });
}

frep_status frep_character(const frep_presentation* p, unsigned n, const char* sigma,
                           size_t row_cap, char** value_out) {
  return guarded([&] {
    if (!p || !sigma || !value_out) throw InvalidArgument("null argument");
    FinFn s = finfn_from_string(sigma, n, n);
    *value_out = dup_string(rat_to_string(character(p->p, n, s, options(row_cap))));
  });
}

frep_status frep_character_table(const frep_presentation* p, unsigned n, size_t row_cap,
                                 char** table_out) {
  return guarded([&] {
    if (!p || !table_out) throw InvalidArgument("null argument");
    std::ostringstream os;
    for (const auto& [type, value] : character_table(p->p, n, options(row_cap)))
      os << to_string(type) << ": " << rat_to_string(value) << "\n";
    *table_out = dup_string(os.str());
  });
}

frep_status frep_resolve(const frep_presentation* p, size_t row_cap, frep_resolution** out) {
  return guarded([&] {
    if (!p || !out) throw InvalidArgument("null argument");
    auto r = std::make_unique<frep_resolution>();
    r->r = resolve(p->p, options(row_cap));
    r->dim = dim_poly(r->r, options(row_cap));
    r->character = char_poly(r->r);
    *out = r.release();
  });
}

void frep_resolution_free(frep_resolution* r) { delete r; }

frep_status frep_resolution_report(const frep_resolution* r, int as_json, char** out) {
  return guarded([&] {
    if (!r || !out) throw InvalidArgument("null argument");
    if (as_json) {
      *out = dup_string(resolution_to_json(r->r, r->dim, r->character));
      return;
    }
    std::ostringstream os;
    os << "target: " << r->r.target.name << "\n";
    for (std::size_t i = 0; i < r->r.terms.size(); ++i)
      os << "term " << i << ": " << term_text(r->r.terms[i]) << "\n";
    os << "dim_poly: " << r->dim.to_string() << " (n >= 1), value at 0: "
       << rat_to_string(r->dim.value_at_zero) << "\n";
    os << "char_poly: " << r->character.poly.to_string() << "\n";
    *out = dup_string(os.str());
  });
}

frep_status frep_resolution_verify(const frep_resolution* r, unsigned n_max, size_t row_cap,
                                   char** report_out) {
  frep_status status = guarded([&] {
    if (!r || !report_out) throw InvalidArgument("null argument");
    VerifyReport report = verify_resolution(r->r, n_max, options(row_cap));
    std::string text;
    for (const std::string& line : report.lines) text += line + "\n";
    *report_out = dup_string(text);
    if (!report.ok) throw VerifyFailure("resolution failed verification");
  });
  return status;
}

frep_status frep_verify_against_oracle(const frep_presentation* p, unsigned n_max, size_t row_cap,
                                       char** report_out) {
  return guarded([&] {
    if (!p || !report_out) throw InvalidArgument("null argument");
    EvalOptions opts = options(row_cap);
    Resolution r = resolve(p->p, opts);
    DimPoly dp = dim_poly(r, opts);
    CharPoly cp = char_poly(r);
    std::ostringstream os;
    bool ok = true;
    VerifyReport exact = verify_resolution(r, n_max, opts);
    for (const std::string& line : exact.lines) os << line << "\n";
    ok = ok && exact.ok;
    for (unsigned n = 0; n <= n_max; ++n) {
      unsigned long oracle = eval(p->p, n, opts).dim;
      Rational predicted = dp.eval(n);
      bool dim_ok = predicted == Rational(static_cast<long>(oracle));
      os << (dim_ok ? "OK" : "FAIL") << " dim at n = " << n << ": oracle " << oracle
         << ", polynomial " << rat_to_string(predicted) << "\n";
      ok = ok && dim_ok;
      if (n == 0) continue;  // the character polynomial is valid for n >= 1
      bool chi_all_ok = true;
      auto table = character_table(p->p, n, opts);
      for (const auto& [type, value] : table) {
        // Rebuild a representative to get its fixed point statistics.
        std::vector<unsigned> v(n);
        unsigned start = 0;
        for (unsigned len : type.parts) {
          for (unsigned i = 0; i < len; ++i) v[start + i] = start + ((i + 1) % len) + 1;
          start += len;
        }
        FinFn sigma(n, n, std::move(v));
        auto stats = fixed_point_counts(sigma, cp.poly.max_variable() == 0 ? 1 : cp.poly.max_variable());
        Rational predicted_chi = cp.eval(n, stats);
        bool chi_ok = predicted_chi == value;
        if (!chi_ok) {
          os << "FAIL character at n = " << n << ", class " << to_string(type) << ": oracle "
             << rat_to_string(value) << ", polynomial " << rat_to_string(predicted_chi) << "\n";
          ok = false;
          chi_all_ok = false;
        }
      }
      if (chi_all_ok) os << "OK characters at n = " << n << "\n";
    }
    *report_out = dup_string(os.str());
    if (!ok) throw VerifyFailure("oracle comparison failed");
  });
}

frep_status frep_squisher_upper(unsigned k, unsigned n, char** out) {
  return guarded([&] {
    if (!out) throw InvalidArgument("null argument");
    *out = dup_string(to_string(upper_squisher(k, n).element));
  });
}

frep_status frep_squisher_lower(unsigned k, int allow_large, char** out) {
  return guarded([&] {
    if (!out) throw InvalidArgument("null argument");
    *out = dup_string(to_string(lower_squisher(k, allow_large != 0).element));
  });
}

}  // extern "C"
