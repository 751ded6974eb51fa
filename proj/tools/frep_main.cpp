// Command-line front end for the frep library. Only the C API is used here.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "frep.h"

namespace {

int status_to_exit(frep_status s) {
  switch (s) {
    case FREP_OK:
      return 0;
    case FREP_ERR_PARSE:
      return 2;
    case FREP_ERR_CAP:
      return 3;
    case FREP_ERR_VERIFY:
      return 4;
    default:
      return 1;
  }
}

// Owned string from the C API with scoped release.
struct ApiString {
  char* s = nullptr;
  ~ApiString() { frep_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct ApiPresentation {
  frep_presentation* p = nullptr;
  ~ApiPresentation() { frep_presentation_free(p); }
};

struct ApiResolution {
  frep_resolution* r = nullptr;
  ~ApiResolution() { frep_resolution_free(r); }
};

[[noreturn]] void die(frep_status s) {
  std::cerr << "error: " << frep_last_error() << "\n";
  std::exit(status_to_exit(s));
}

void check(frep_status s) {
  if (s != FREP_OK) die(s);
}

frep_status load(const std::string& source, ApiPresentation& out) {
  if (source.rfind("builtin:", 0) == 0) return frep_presentation_builtin(source.c_str(), &out.p);
  std::ifstream in(source);
  if (!in) {
    std::cerr << "error: cannot open '" << source << "'\n";
    std::exit(2);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return frep_presentation_parse(buf.str().c_str(), &out.p);
}

std::size_t row_cap_from_env(std::size_t flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("FREP_ROW_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "error: bad FREP_ROW_CAP value '" << env << "'\n";
    std::exit(1);
  }
  return 0;  // library default
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with uniformly presented vector spaces"};
  app.require_subcommand(1);
  std::size_t row_cap = 0;
  app.add_option("--row-cap", row_cap, "maximum hom-space coordinates per evaluation");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "dimension and characters at a fixed [n]");
  std::string eval_file;
  unsigned eval_n = 0;
  std::string eval_sigma;
  bool eval_table = false;
  std::string eval_format = "text";
  eval_cmd->add_option("file", eval_file, "presentation file or builtin: URI")->required();
  eval_cmd->add_option("-n", eval_n, "set size")->required();
  eval_cmd->add_option("--character", eval_sigma, "permutation in one-line notation");
  eval_cmd->add_flag("--table", eval_table, "print the full character table");
  eval_cmd->add_option("--format", eval_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  // resolve
  auto* resolve_cmd = app.add_subcommand("resolve", "finite resolution, dimension and character polynomials");
  std::string resolve_file;
  bool resolve_json = false;
  int resolve_verify = -1;
  resolve_cmd->add_option("file", resolve_file, "presentation file or builtin: URI")->required();
  resolve_cmd->add_flag("--json", resolve_json, "emit the JSON schema");
  resolve_cmd->add_option("--verify", resolve_verify, "check exactness for n = 0..N");

  // squisher
  auto* squish_cmd = app.add_subcommand("squisher", "emit a squishing element");
  std::vector<unsigned> upper_args;
  int lower_k = -1;
  bool squish_large = false;
  squish_cmd->add_option("--upper", upper_args, "k n: fixes every function [k] -> [n]")->expected(2);
  squish_cmd->add_option("--lower", lower_k, "k: acts as 1 - epsilon on maps [k] -> [k+1]");
  squish_cmd->add_flag("--allow-large", squish_large, "lift the size cap on the lower solver");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "compare resolution polynomials against direct evaluation");
  std::string verify_file;
  unsigned verify_n_max = 5;
  verify_cmd->add_option("file", verify_file, "presentation file or builtin: URI")->required();
  verify_cmd->add_option("--n-max", verify_n_max, "largest set size to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  std::size_t cap = row_cap_from_env(row_cap);

  if (*eval_cmd) {
    ApiPresentation p;
    check(load(eval_file, p));
    unsigned long dim = 0;
    check(frep_eval_dim(p.p, eval_n, cap, &dim));
    if (eval_format == "json") {
      std::cout << "{\"n\": " << eval_n << ", \"dim\": " << dim;
      if (!eval_sigma.empty()) {
        ApiString value;
        check(frep_character(p.p, eval_n, eval_sigma.c_str(), cap, &value.s));
        std::cout << ", \"character\": \"" << value.str() << "\"";
      }
      std::cout << "}\n";
      return 0;
    }
    std::cout << "dim = " << dim << "\n";
    if (!eval_sigma.empty()) {
      ApiString value;
      check(frep_character(p.p, eval_n, eval_sigma.c_str(), cap, &value.s));
      std::cout << "character(" << eval_sigma << ") = " << value.str() << "\n";
    }
    if (eval_table) {
      ApiString table;
      check(frep_character_table(p.p, eval_n, cap, &table.s));
      std::cout << table.str();
    }
    return 0;
  }

  if (*resolve_cmd) {
    ApiPresentation p;
    check(load(resolve_file, p));
    ApiResolution r;
    check(frep_resolve(p.p, cap, &r.r));
    ApiString report;
    check(frep_resolution_report(r.r, resolve_json ? 1 : 0, &report.s));
    std::cout << report.str();
    if (!resolve_json) std::cout.flush();
    if (resolve_verify >= 0) {
      ApiString verdict;
      frep_status s = frep_resolution_verify(r.r, static_cast<unsigned>(resolve_verify), cap, &verdict.s);
      std::cout << verdict.str();
      if (s != FREP_OK) die(s);
    }
    return 0;
  }

  if (*squish_cmd) {
    if (!upper_args.empty() && lower_k >= 0) {
      std::cerr << "error: choose one of --upper or --lower\n";
      return 2;
    }
    ApiString elt;
    if (!upper_args.empty()) {
      check(frep_squisher_upper(upper_args[0], upper_args[1], &elt.s));
    } else if (lower_k >= 0) {
      check(frep_squisher_lower(static_cast<unsigned>(lower_k), squish_large ? 1 : 0, &elt.s));
    } else {
      std::cerr << "error: squisher needs --upper k n or --lower k\n";
      return 2;
    }
    std::cout << elt.str() << "\n";
    return 0;
  }

  if (*verify_cmd) {
    ApiPresentation p;
    check(load(verify_file, p));
    ApiString report;
    frep_status s = frep_verify_against_oracle(p.p, verify_n_max, cap, &report.s);
    std::cout << report.str();
    if (s != FREP_OK) die(s);
    return 0;
  }
  return 2;
}
