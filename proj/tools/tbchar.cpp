// tbchar: exact SL2 character-ring computations for two-bridge links b(2p,q).
//
// Subcommands: eta, basis, reduce, check, scan, presentation.
// Variables are printed as ASCII x, xp, y; group generators as X, Xp.
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tbchar/char_variety.hpp"
#include "tbchar/errors.hpp"
#include "tbchar/linkparam.hpp"
#include "tbchar/poly_io.hpp"
#include "tbchar/skein_reduce.hpp"

namespace {

using tbchar::Json;
using tbchar::TwoBridgeParam;

constexpr int kSuccess = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsageError = 2;

struct CommandResult {
  int status = kSuccess;
  std::string payload;  // already formatted (text or JSON)
};

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 1;
  int samples = 100;
};

Json link_json(const TwoBridgeParam& l) {
  return Json{{"twop", l.twop()}, {"q", l.q()}};
}

Json checks_json(const tbchar::CharacterRingReport& rep) {
  Json o = Json::object();
  for (const auto& c : rep.checks) o[c.name] = c.passed;
  return o;
}

Json word_json(const tbchar::Word& w) {
  Json arr = Json::array();
  for (const auto& l : w)
    arr.push_back(Json::array({l.gen == tbchar::Gen::x ? "x" : "xp", l.exponent}));
  return arr;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

CommandResult cmd_eta(const TwoBridgeParam& l, bool nab, const GlobalOptions& opt) {
  const tbchar::Polynomial e = tbchar::eta(l);
  if (opt.json) {
    Json doc{{"link", link_json(l)}, {"eta", tbchar::to_json(e)}};
    if (nab) {
      doc["eta_ab"] = tbchar::to_json(tbchar::eta_ab());
      doc["eta_nab"] = tbchar::to_json(tbchar::eta_nab(l));
    }
    return {kSuccess, dump(doc)};
  }
  std::ostringstream out;
  if (!nab) {
    out << tbchar::to_text(e) << "\n";
  } else {
    out << "eta     = " << tbchar::to_text(e) << "\n";
    out << "eta_ab  = " << tbchar::to_text(tbchar::eta_ab()) << "\n";
    out << "eta_nab = " << tbchar::to_text(tbchar::eta_nab(l)) << "\n";
  }
  return {kSuccess, out.str()};
}

CommandResult cmd_basis(const TwoBridgeParam& l, int max_degree,
                        const GlobalOptions& opt) {
  const auto monomials = tbchar::basis_monomials(l, max_degree);
  const auto desc = tbchar::basis_descriptor(l);
  if (opt.json) {
    Json arr = Json::array();
    for (const auto& m : monomials)
      arr.push_back(Json::array({m.exp[0], m.exp[1], m.exp[2]}));
    return {kSuccess, dump(Json{{"link", link_json(l)},
                                {"y_degree_bound", desc.y_degree_bound},
                                {"max_total_degree", max_degree},
                                {"count", monomials.size()},
                                {"monomials", std::move(arr)}})};
  }
  std::ostringstream out;
  out << tbchar::to_string(l) << ": " << monomials.size()
      << " basis monomials with total degree <= " << max_degree
      << " (y-exponent <= " << desc.y_degree_bound << ")\n";
  for (const auto& m : monomials)
    out << tbchar::monomial_text(tbchar::VarSet::barred, m) << "\n";
  return {kSuccess, out.str()};
}

CommandResult cmd_reduce(const TwoBridgeParam& l, const std::string& poly_text,
                         const GlobalOptions& opt) {
  const tbchar::Polynomial f = tbchar::parse_polynomial(poly_text);
  const tbchar::CharacterRingReducer reducer(l);
  const tbchar::Polynomial nf = reducer.normal_form(f);
  if (opt.json)
    return {kSuccess, dump(Json{{"link", link_json(l)},
                                {"input", tbchar::to_json(f)},
                                {"normal_form", tbchar::to_json(nf)}})};
  return {kSuccess, tbchar::to_text(nf) + "\n"};
}

void print_report_text(std::ostream& out, const tbchar::CharacterRingReport& rep,
                       const GlobalOptions& opt) {
  out << tbchar::to_string(rep.param) << ": checks with " << opt.samples
      << " oracle samples, seed " << opt.seed << "\n";
  for (const auto& c : rep.checks)
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": "
        << c.detail << "\n";
  out << tbchar::to_string(rep.param) << ": "
      << (rep.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
}

CommandResult cmd_check(const TwoBridgeParam& l, const GlobalOptions& opt) {
  const auto rep = tbchar::run_checks(l, opt.samples, opt.seed);
  const int status = rep.all_passed() ? kSuccess : kCheckFailure;
  if (opt.json) {
    return {status, dump(Json{{"link", link_json(l)},
                              {"eta", tbchar::to_json(rep.eta)},
                              {"eta_ab", tbchar::to_json(rep.eta_ab)},
                              {"eta_nab", tbchar::to_json(rep.eta_nab)},
                              {"checks", checks_json(rep)}})};
  }
  std::ostringstream out;
  print_report_text(out, rep, opt);
  return {status, out.str()};
}

// How this link's eta relates to its canonical representative's: the
// comparison is informational only (nothing is asserted about it).
std::string eta_vs_canonical(const TwoBridgeParam& l, const tbchar::Polynomial& e) {
  const TwoBridgeParam canon = tbchar::canonical(l);
  if (canon == l) return "-";
  const tbchar::Polynomial ec = tbchar::eta(canon);
  if (e == ec) return "identical";
  tbchar::Substitution swap(tbchar::VarSet::barred);
  swap.set(tbchar::kX, tbchar::Polynomial::variable(tbchar::VarSet::barred, tbchar::kXp));
  swap.set(tbchar::kXp, tbchar::Polynomial::variable(tbchar::VarSet::barred, tbchar::kX));
  if (e == substitute(ec, swap)) return "swap(x,xp)";
  return "different";
}

CommandResult cmd_scan(std::int64_t max_p, const GlobalOptions& opt) {
  const auto links = tbchar::links_with_p_at_most(max_p);
  std::size_t passed = 0;
  Json jlinks = Json::array();
  std::ostringstream out;
  if (!opt.json) {
    out << "scan: p <= " << max_p << ", " << opt.samples
        << " oracle samples per link, seed " << opt.seed << "\n";
    out << "  link      canonical  deg_y(eta)  deg_y(eta_nab)  checks  eta-vs-canonical\n";
  }
  for (const auto& l : links) {
    const auto rep = tbchar::run_checks(l, opt.samples, opt.seed);
    if (rep.all_passed()) ++passed;
    const std::string relation = eta_vs_canonical(l, rep.eta);
    if (opt.json) {
      jlinks.push_back(Json{{"link", link_json(l)},
                            {"canonical", link_json(tbchar::canonical(l))},
                            {"checks", checks_json(rep)},
                            {"eta_vs_canonical", relation}});
    } else {
      std::string s = "  " + tbchar::to_string(l);
      const auto pad = [&s](std::size_t width) {
        s.resize(std::max(s.size() + 2, width), ' ');
      };
      pad(12);
      s += tbchar::to_string(tbchar::canonical(l));
      pad(23);
      s += std::to_string(rep.eta.degree_in(tbchar::kY));
      pad(35);
      s += std::to_string(rep.eta_nab.degree_in(tbchar::kY));
      pad(51);
      s += rep.all_passed() ? "PASS" : "FAIL";
      pad(59);
      s += relation;
      out << s << "\n";
    }
  }
  const bool all = passed == links.size();
  if (opt.json) {
    return {all ? kSuccess : kCheckFailure,
            dump(Json{{"max_p", max_p},
                      {"samples", opt.samples},
                      {"seed", opt.seed},
                      {"links", std::move(jlinks)},
                      {"passed", passed},
                      {"total", links.size()},
                      {"all_passed", all}})};
  }
  out << "scan: " << passed << "/" << links.size() << " links passed\n";
  return {all ? kSuccess : kCheckFailure, out.str()};
}

CommandResult cmd_presentation(const TwoBridgeParam& l, const GlobalOptions& opt) {
  const auto pres = tbchar::presentation(l);
  const auto eps = tbchar::epsilon_sequence(l);
  if (opt.json) {
    Json jeps = Json::array();
    for (int e : eps) jeps.push_back(e);
    return {kSuccess,
            dump(Json{{"link", link_json(l)},
                      {"generators", Json::array({"x", "xp"})},
                      {"epsilon", std::move(jeps)},
                      {"word", word_json(pres.word)},
                      {"relator", Json{{"lhs", word_json(pres.lhs)},
                                       {"rhs", word_json(pres.rhs)}}}})};
  }
  std::ostringstream out;
  out << tbchar::to_string(l) << ": pi_1 = < " << pres.generators[0] << ", "
      << pres.generators[1] << " | " << pres.generators[0] << " w = w "
      << pres.generators[0] << " >\n";
  out << "w = " << tbchar::to_string(pres.word) << "\n";
  out << "epsilon = (";
  for (std::size_t i = 0; i < eps.size(); ++i)
    out << (i ? ", " : "") << (eps[i] > 0 ? "+1" : "-1");
  out << ")\n";
  return {kSuccess, out.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SL2 character-ring computations for two-bridge links b(2p,q)"};
  app.require_subcommand(1);
  app.fallthrough(true);

  GlobalOptions opt;
  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_option("--seed", opt.seed, "random seed for the matrix oracle")
      ->capture_default_str();
  app.add_option("--samples", opt.samples, "oracle samples per link")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::int64_t twop = 0, q = 0;
  bool nab = false;
  int max_degree = 0;
  std::int64_t max_p = 0;
  std::string poly_text;

  CLI::App* eta_cmd = app.add_subcommand("eta", "print the character-ring polynomial eta");
  eta_cmd->add_option("twop", twop, "even parameter 2p")->required();
  eta_cmd->add_option("q", q, "odd parameter q, coprime to 2p")->required();
  eta_cmd->add_flag("--nab", nab, "also print eta_ab and eta_nab");

  CLI::App* basis_cmd =
      app.add_subcommand("basis", "list basis monomials x^a*xp^b*y^c with c <= p");
  basis_cmd->add_option("twop", twop, "even parameter 2p")->required();
  basis_cmd->add_option("q", q, "odd parameter q, coprime to 2p")->required();
  basis_cmd->add_option("--max-degree", max_degree, "total degree cap")
      ->required()
      ->check(CLI::NonNegativeNumber);

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "normal form modulo eta (y-degree <= p)");
  reduce_cmd->add_option("twop", twop, "even parameter 2p")->required();
  reduce_cmd->add_option("q", q, "odd parameter q, coprime to 2p")->required();
  reduce_cmd->add_option("--poly", poly_text, "polynomial in x, xp, y")->required();

  CLI::App* check_cmd =
      app.add_subcommand("check", "run all verifications for one link");
  check_cmd->add_option("twop", twop, "even parameter 2p")->required();
  check_cmd->add_option("q", q, "odd parameter q, coprime to 2p")->required();

  CLI::App* scan_cmd =
      app.add_subcommand("scan", "run all verifications for every link with p <= max-p");
  scan_cmd->add_option("--max-p", max_p, "largest p to scan")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* pres_cmd =
      app.add_subcommand("presentation", "print the link group presentation");
  pres_cmd->add_option("twop", twop, "even parameter 2p")->required();
  pres_cmd->add_option("q", q, "odd parameter q, coprime to 2p")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    CommandResult result;
    if (app.got_subcommand(eta_cmd))
      result = cmd_eta(TwoBridgeParam(twop, q), nab, opt);
    else if (app.got_subcommand(basis_cmd))
      result = cmd_basis(TwoBridgeParam(twop, q), max_degree, opt);
    else if (app.got_subcommand(reduce_cmd))
      result = cmd_reduce(TwoBridgeParam(twop, q), poly_text, opt);
    else if (app.got_subcommand(check_cmd))
      result = cmd_check(TwoBridgeParam(twop, q), opt);
    else if (app.got_subcommand(scan_cmd))
      result = cmd_scan(max_p, opt);
    else
      result = cmd_presentation(TwoBridgeParam(twop, q), opt);
    std::cout << result.payload;
    return result.status;
  } catch (const tbchar::InvalidParameter& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const tbchar::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const tbchar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailure;
  }
}
