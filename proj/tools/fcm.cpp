// fcm: lists up to reordering, from the command line.
//
// Exit codes: 0 success, 1 negative answer, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fcm/cmon.hpp"
#include "fcm/derivation.hpp"
#include "fcm/error.hpp"
#include "fcm/laws.hpp"
#include "fcm/literal.hpp"
#include "fcm/nbe.hpp"

namespace {

  struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Usage("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Usage("cannot write " + out);
    f << text << '\n';
  }

  int prove(const std::string& lhs, const std::string& rhs, const std::string& out) {
    auto d = fcm::nbe::decide(fcm::literal::parse_list(lhs), fcm::literal::parse_list(rhs));
    if (!d) {
      std::cout << "NOT-EQUAL\n";
      return 1;
    }
    emit(out, fcm::deriv::serialize(*d));
    return 0;
  }

  int check(const std::string& file, const std::string& lhs, const std::string& rhs) {
    auto d = fcm::deriv::deserialize(slurp(file));
    bool ok = fcm::deriv::check(d, fcm::literal::parse_list(lhs), fcm::literal::parse_list(rhs));
    std::cout << (ok ? "OK" : "CHECK-FAILED") << '\n';
    return ok ? 0 : 1;
  }

  int eval(const std::string& file) {
    auto d = fcm::deriv::deserialize(slurp(file));
    try {
      std::cout << fcm::nbe::perm_to_json(fcm::nbe::eval(d).phi()) << '\n';
    } catch (const fcm::MalformedComm& e) {
      std::cout << "MALFORMED " << e.what() << '\n';
      return 1;
    }
    return 0;
  }

  int quote(const std::string& file, const std::string& lhs, const std::string& rhs, const std::string& out) {
    auto phi = fcm::nbe::perm_from_json(slurp(file));
    auto l = fcm::nbe::vectorise(fcm::literal::parse_list(lhs));
    auto r = fcm::nbe::vectorise(fcm::literal::parse_list(rhs));
    if (!fcm::nbe::PermWitness::holds(l, r, phi)) {
      std::cout << "BROKEN-WITNESS\n";
      return 1;
    }
    emit(out, fcm::deriv::serialize(fcm::nbe::quote(fcm::nbe::PermWitness(l, r, phi))));
    return 0;
  }

  int refine(const std::string& as, const std::string& bs, const std::string& cs, const std::string& ds) {
    using M = fcm::SymbolMultiset;
    auto sq = fcm::refine(fcm::literal::parse<M>(as), fcm::literal::parse<M>(bs), fcm::literal::parse<M>(cs),
                          fcm::literal::parse<M>(ds));
    if (!sq) {
      std::cout << "NO-REFINEMENT\n";
      return 1;
    }
    using fcm::literal::to_string;
    std::cout << to_string(sq->xs1) << ' ' << to_string(sq->xs2) << ' ' << to_string(sq->ys1) << ' '
              << to_string(sq->ys2) << '\n';
    return 0;
  }

  std::optional<std::size_t> parse_degree(const std::string& text) {
    if (text.empty() || text == "-") return std::nullopt;
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6)
      throw Usage("degree must be a natural number or '-'");
    return std::stoul(text);
  }

  int laws(const std::string& suite, std::size_t size, const std::string& degree_text, const std::string& monoid) {
    auto degree = parse_degree(degree_text);
    auto report = fcm::laws::law_suite(suite, size, degree);
    if (!monoid.empty())
      report = fcm::laws::merge(report, fcm::laws::monoid_instance(fcm::cmon::parse_fincmon(slurp(monoid)), degree.value_or(4)));
    std::cout << fcm::laws::format(report);
    return report.all_pass() ? 0 : 1;
  }

}

int main(int argc, char** argv) {
  CLI::App app{"Lists up to reordering: proofs, permutation witnesses, refinements and relational law suites"};
  app.require_subcommand(1);

  std::string lhs, rhs, out, file, as, bs, cs, ds, suite, degree = "-", monoid;
  std::size_t size = 0;

  auto* prove_cmd = app.add_subcommand("prove", "Write a derivation of LHS ~ RHS, or report NOT-EQUAL");
  prove_cmd->add_option("lhs", lhs, "list literal, e.g. [a,b]")->required();
  prove_cmd->add_option("rhs", rhs)->required();
  prove_cmd->add_option("-o,--out", out, "derivation file (default: stdout)");

  auto* check_cmd = app.add_subcommand("check", "Check a derivation file against LHS ~ RHS");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("lhs", lhs)->required();
  check_cmd->add_option("rhs", rhs)->required();

  auto* eval_cmd = app.add_subcommand("eval", "Print the permutation of a derivation");
  eval_cmd->add_option("file", file)->required();

  auto* quote_cmd = app.add_subcommand("quote", "Turn a permutation file into a derivation of LHS ~ RHS");
  quote_cmd->add_option("file", file)->required();
  quote_cmd->add_option("lhs", lhs)->required();
  quote_cmd->add_option("rhs", rhs)->required();
  quote_cmd->add_option("-o,--out", out, "derivation file (default: stdout)");

  auto* refine_cmd = app.add_subcommand("refine", "Split AS+BS = CS+DS into a 2x2 refinement");
  refine_cmd->add_option("as", as)->required();
  refine_cmd->add_option("bs", bs)->required();
  refine_cmd->add_option("cs", cs)->required();
  refine_cmd->add_option("ds", ds)->required();

  auto* laws_cmd = app.add_subcommand("laws", "Run a relational law suite");
  std::string suites;
  for (const auto& s: fcm::laws::suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  laws_cmd->add_option("--suite,suite", suite, "one of: " + suites)->required();
  laws_cmd->add_option("--size,size", size, "largest carrier size")->required();
  laws_cmd->add_option("--degree,degree", degree, "truncation degree, '-' when unused");
  laws_cmd->add_option("--monoid", monoid, "commutative monoid table to check as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (prove_cmd->parsed()) return prove(lhs, rhs, out);
    if (check_cmd->parsed()) return check(file, lhs, rhs);
    if (eval_cmd->parsed()) return eval(file);
    if (quote_cmd->parsed()) return quote(file, lhs, rhs, out);
    if (refine_cmd->parsed()) return refine(as, bs, cs, ds);
    if (laws_cmd->parsed()) return laws(suite, size, degree, monoid);
  } catch (const fcm::ParseError& e) {
    std::cerr << "fcm: parse error: " << e.what() << '\n';
    return 2;
  } catch (const fcm::Error& e) {
    std::cerr << "fcm: " << e.what() << '\n';
    return 2;
  } catch (const Usage& e) {
    std::cerr << "fcm: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
