// Command-line front door: evaluate words on points, multiply and decompose
// elements, classify subgroup descriptors, enumerate them, test membership,
// emit generating sets, and run the verification claims.
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "houghton/constructions.hpp"
#include "houghton/descriptor.hpp"
#include "houghton/element.hpp"
#include "houghton/format.hpp"
#include "houghton/verify.hpp"

namespace {

using namespace houghton;

ParamMap parse_params(const std::string& text) {
  ParamMap out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      fail(errc::parse_error, "expected key=value in --params: " + item);
    try {
      out[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(errc::parse_error, "expected an integer in --params: " + item);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  LatticeBasis rows = parse_lattice(text);
  if (rows.rows.size() != 1)
    fail(errc::parse_error, "expected a single comma-separated list");
  return rows.rows[0];
}

struct DescriptorFlags {
  int n = 0;
  std::string lattice, c, type = "fsym", eps;

  SubgroupDescriptor build() const {
    SubgroupDescriptor desc;
    desc.n = n;
    if (!c.empty()) {
      std::vector<std::int64_t> diag = parse_int_list(c);
      std::vector<LatRow> rows(diag.size(),
                               LatRow(diag.size(), 0));
      for (std::size_t i = 0; i < diag.size(); ++i) rows[i][i] = diag[i];
      desc.lattice = lat_make(static_cast<int>(diag.size()), rows);
    } else if (!lattice.empty()) {
      desc.lattice = parse_lattice(lattice);
    } else {
      fail(errc::invalid_argument, "need --lattice or --c");
    }
    desc.sym_type = parse_sym_type(type);
    if (!eps.empty()) desc.twists = parse_twists(eps);
    require_valid(desc);
    return desc;
  }
};

void add_descriptor_flags(CLI::App* cmd, DescriptorFlags& flags,
                          bool need_lattice = true) {
  cmd->add_option("--n", flags.n, "number of rays")->required();
  if (need_lattice) {
    cmd->add_option("--lattice", flags.lattice,
                    "lattice basis rows, e.g. \"2,0;0,3\"");
    cmd->add_option("--c", flags.c, "diagonal lattice shorthand, e.g. 2,4");
  }
  cmd->add_option("--type", flags.type, "subgroup type: fsym or alt");
  cmd->add_option("--eps", flags.eps,
                  "per-axis twists, e.g. \"(swap,trivial)\"");
}

int run_verify(const std::string& claim, const std::string& params_text,
               bool all, const DescriptorFlags& desc_flags,
               std::uint64_t seed) {
  std::vector<Report> reports;
  if (all) {
    for (const ClaimRun& run : default_claim_runs())
      reports.push_back(verify_construction(run.name, run.params, run.desc));
    reports.push_back(verify_parity_law(3, 4));
    reports.push_back(verify_window_lemma(3));
    reports.push_back(verify_decomposition(3, 100, seed));
  } else {
    ParamMap params = parse_params(params_text);
    if (claim == "parity_law") {
      reports.push_back(verify_parity_law(
          static_cast<int>(verify_detail::get_param(params, "n", 3)),
          verify_detail::get_param(params, "c_max", 4)));
    } else if (claim == "window_lemma") {
      reports.push_back(verify_window_lemma(
          verify_detail::get_param(params, "k", 3),
          verify_detail::get_param(params, "sabotage", 0) != 0));
    } else if (claim == "decomposition") {
      reports.push_back(verify_decomposition(
          static_cast<int>(verify_detail::get_param(params, "n", 3)),
          static_cast<int>(verify_detail::get_param(params, "samples", 100)),
          static_cast<std::uint64_t>(
              verify_detail::get_param(params, "seed",
                                       (std::int64_t)seed))));
    } else {
      std::optional<SubgroupDescriptor> desc;
      if (claim == "prop6") desc = desc_flags.build();
      reports.push_back(verify_construction(claim, params, desc));
    }
  }
  bool ok = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) std::cout << '\n';
    std::cout << reports[i].to_text();
    ok = ok && reports[i].overall();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic and subgroup classification for the "
               "Houghton groups"};
  app.require_subcommand(1);

  int n = 0;
  std::string word_text, point_text, claim, params_text;
  bool line_mode = false, verify_all = false;
  std::uint64_t seed = 20240817;
  DescriptorFlags desc_flags;

  CLI::App* eval = app.add_subcommand("eval", "apply a word to a point");
  eval->add_option("--n", n, "number of rays")->required();
  eval->add_option("--word", word_text, "group word")->required();
  eval->add_option("--point", point_text, "point ray:index")->required();
  eval->add_flag("--line", line_mode, "treat points as integers on the line");

  CLI::App* mul = app.add_subcommand("mul", "multiply a word into an element");
  mul->add_option("--n", n, "number of rays")->required();
  mul->add_option("--word", word_text, "group word")->required();

  CLI::App* decompose = app.add_subcommand(
      "decompose", "split an element into a finitary part and a "
                   "translation word");
  decompose->add_option("--n", n, "number of rays")->required();
  decompose->add_option("--word", word_text, "group word")->required();

  CLI::App* orbits =
      app.add_subcommand("orbits", "orbit structure of an element");
  orbits->add_option("--n", n, "number of rays")->required();
  orbits->add_option("--word", word_text, "group word")->required();

  CLI::App* classify =
      app.add_subcommand("classify", "classify a subgroup descriptor");
  add_descriptor_flags(classify, desc_flags);

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list the finite-index subgroups over a diagonal lattice");
  enumerate->add_option("--n", desc_flags.n, "number of rays")->required();
  enumerate->add_option("--c", desc_flags.c, "diagonal entries, e.g. 2,4")
      ->required();

  CLI::App* member = app.add_subcommand(
      "member", "test whether a word's element lies in a described subgroup");
  add_descriptor_flags(member, desc_flags);
  member->add_option("--word", word_text, "group word")->required();

  CLI::App* gen = app.add_subcommand(
      "gen", "emit a minimal generating set for a described subgroup");
  add_descriptor_flags(gen, desc_flags);

  CLI::App* verify = app.add_subcommand("verify", "run verification claims");
  verify->add_option("--claim", claim, "claim name");
  verify->add_option("--params", params_text, "claim parameters k=v,...");
  verify->add_flag("--all", verify_all, "run every claim");
  verify->add_option("--n", desc_flags.n, "rays (prop6 descriptor)");
  verify->add_option("--lattice", desc_flags.lattice,
                     "lattice (prop6 descriptor)");
  verify->add_option("--c", desc_flags.c, "diagonal lattice shorthand");
  verify->add_option("--type", desc_flags.type, "subgroup type");
  verify->add_option("--eps", desc_flags.eps, "twists");
  verify->add_option("--seed", seed, "seed for randomized sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      HoughtonElement g = word_eval(n, parse_word(word_text));
      Point x = parse_point(point_text, line_mode);
      if (line_mode) x = line_embed(x.index);
      Point y = g.eval(x);
      if (line_mode)
        std::cout << point_project(y) << '\n';
      else
        std::cout << format_point(y) << '\n';
    } else if (mul->parsed()) {
      std::cout << to_string(word_eval(n, parse_word(word_text))) << '\n';
    } else if (decompose->parsed()) {
      HoughtonElement g = word_eval(n, parse_word(word_text));
      auto [sigma, v] = he_decompose(g);
      std::cout << "sigma=" << to_string(sigma) << '\n';
      std::cout << "v=";
      for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? "," : "") << v[i];
      std::cout << '\n';
    } else if (orbits->parsed()) {
      OrbitReport rep = he_orbits(word_eval(n, parse_word(word_text)));
      std::cout << "infinite=" << rep.infinite_orbit_count << '\n';
      for (const Cycle& cyc : rep.finite_cycles)
        std::cout << "finite=" << to_string(FinitePermutation::from_cycles(
                                       {cyc}))
                  << '\n';
    } else if (classify->parsed()) {
      ClassReport rep = classify_descriptor(desc_flags.build());
      std::cout << "index=" << rep.index << '\n';
      std::cout << "d=" << rep.d << '\n';
      std::cout << "ab=" << rep.abelianization << '\n';
      std::cout << "normal_form=" << rep.normal_form << '\n';
    } else if (enumerate->parsed()) {
      std::vector<std::int64_t> c = parse_int_list(desc_flags.c);
      std::vector<SubgroupDescriptor> subs =
          desc_enumerate(static_cast<int>(c.size()) + 1, c);
      for (const SubgroupDescriptor& d : subs)
        std::cout << format_descriptor(d) << '\n';
      std::cout << "count=" << subs.size() << '\n';
    } else if (member->parsed()) {
      SubgroupDescriptor desc = desc_flags.build();
      HoughtonElement g = word_eval(desc.n, parse_word(word_text));
      std::cout << "member="
                << (desc_membership(desc, g) ? "true" : "false") << '\n';
    } else if (gen->parsed()) {
      for (const HoughtonElement& g :
           desc_generating_set(desc_flags.build()))
        std::cout << to_string(g) << '\n';
    } else if (verify->parsed()) {
      if (!verify_all && claim.empty())
        fail(errc::invalid_argument, "verify needs --claim or --all");
      return run_verify(claim, params_text, verify_all, desc_flags, seed);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
