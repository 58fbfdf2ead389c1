#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "realreg/analysis.hpp"
#include "realreg/automaton.hpp"
#include "realreg/decomposition.hpp"
#include "realreg/error.hpp"
#include "realreg/intersection.hpp"
#include "realreg/omega_regex.hpp"
#include "realreg/real_sets.hpp"

namespace realreg::cli {

namespace {

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FileKind { Automaton, NormalForm, Regex, ExpSum };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageFailure("cannot write '" + path + "'");
}

/// Comment-free text and the kind named by its first line.
std::pair<FileKind, std::string> sniff(const std::string& text) {
  std::string clean, first;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (first.empty() && line.find_first_not_of(" \t\r") != std::string::npos) first = line;
    clean += line + "\n";
  }
  std::istringstream head(first);
  std::string word, version;
  head >> word >> version;
  if (word == "buchi" && version == "v1") return {FileKind::Automaton, clean};
  if (word == "nf" && version == "v1") return {FileKind::NormalForm, clean};
  if (word == "base") return {first.find(':') != std::string::npos ? FileKind::Regex : FileKind::ExpSum, clean};
  throw ParseError(1, "unrecognized file header '" + first + "'");
}

BuchiAutomaton load_automaton(const std::string& path) {
  const auto [kind, text] = sniff(read_file(path));
  switch (kind) {
    case FileKind::Automaton: return parse_automaton(text);
    case FileKind::NormalForm: return regex_to_automaton(parse_normal_form(text).to_regex());
    case FileKind::Regex: return regex_to_automaton(parse_omega_regex(text));
    case FileKind::ExpSum: break;
  }
  throw ParseError(1, "expected an automaton, ω-regex or normal form");
}

SparseNormalForm load_normal_form(const std::string& path, std::size_t cap) {
  const auto [kind, text] = sniff(read_file(path));
  if (kind == FileKind::NormalForm) return parse_normal_form(text);
  if (kind == FileKind::ExpSum) throw ParseError(1, "expected an automaton, ω-regex or normal form");
  return sparse_normal_form(kind == FileKind::Automaton ? parse_automaton(text)
                                                        : regex_to_automaton(parse_omega_regex(text)),
                            cap);
}

ExpSumDescription load_description(const std::string& path, std::size_t cap) {
  const auto [kind, text] = sniff(read_file(path));
  if (kind == FileKind::ExpSum) return canonicalize(parse_exp_sum(text));
  return to_exp_sum(load_normal_form(path, cap));
}

std::string fixed12(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12f", x);
  return buffer;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::ResourceLimit: return 4;
    default: return 3;
  }
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Analysis of base-r Büchi-recognizable sets", "realreg"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string file, point, out_path;
  std::size_t cap = kDefaultChainCap;
  long height = -1, s = 0, t = 0;
  std::size_t nmax = 30;
  int coord = 0;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "input file")->required();
    sub->add_option("--cap", cap, "resource cap");
    return sub;
  };
  auto* classify_cmd = add_file(app.add_subcommand("classify", "sparsity verdict with witness"));
  auto* dim_cmd = add_file(app.add_subcommand("dim", "Hausdorff dimension of the closure"));
  dim_cmd->add_option("--coord", coord, "coordinate to project onto (1-based)");
  auto* nf_cmd = add_file(app.add_subcommand("nf", "sparse normal form"));
  auto* expsum_cmd = add_file(app.add_subcommand("expsum", "exponential-sum description"));
  auto* cb_cmd = add_file(app.add_subcommand("cb", "Cantor–Bendixson rank and derivatives of the closure"));
  auto* closure_cmd = add_file(app.add_subcommand("closure", "closed automaton"));
  closure_cmd->add_option("-o", out_path, "output file");
  auto* cantor_cmd = add_file(app.add_subcommand("cantor", "extracted Cantor automaton"));
  cantor_cmd->add_option("-o", out_path, "output file");
  auto* member_cmd = add_file(app.add_subcommand("member", "membership of a rational point"));
  member_cmd->add_option("point", point, "p/q[,p/q...]")->required();
  auto* define_cmd = add_file(app.add_subcommand("define", "defining formula and ℓ_L"));
  auto* scale_cmd = add_file(app.add_subcommand("scale", "ℓ with r^{-ℓℕ} definable, and the trace"));
  auto* intersect_cmd = add_file(app.add_subcommand("intersect", "intersection of sparse sets in two bases"));
  intersect_cmd->add_option("--height", height, "exponent bound (default: file, else 60)");
  auto* bound_cmd = app.add_subcommand("bound", "log of the intersection cardinality bound");
  bound_cmd->add_option("s", s, "simple length of S")->required()->check(CLI::NonNegativeNumber);
  bound_cmd->add_option("t", t, "simple length of T")->required()->check(CLI::NonNegativeNumber);
  auto* verdict_cmd = add_file(app.add_subcommand("verdict", "tameness verdict"));
  auto* growth_cmd = add_file(app.add_subcommand("growth", "prefix-count growth oracle"));
  growth_cmd->add_option("--nmax", nmax, "largest prefix length");

  std::vector<std::string> argv_storage{"realreg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {0, "ok\n" + app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, "ok\n" + app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {1, "error: UsageError\n" + std::string(e.what()) + "\n"};
  }

  std::ostringstream out;
  try {
    if (*classify_cmd) {
      out << classify_sparsity(load_automaton(file), cap).str() << "\n";
    } else if (*dim_cmd) {
      const auto a = trim(load_automaton(file));
      if (a.arity() > 1 && coord == 0) fail(ErrorKind::ArityError, "arity > 1 needs --coord");
      const int i = coord == 0 ? 1 : coord;
      out << hausdorff_dim(close(trim(project(a, i)))).str() << "\n";
    } else if (*nf_cmd) {
      out << format_normal_form(load_normal_form(file, cap));
    } else if (*expsum_cmd) {
      out << format_exp_sum(load_description(file, cap));
    } else if (*cb_cmd) {
      ExpSumDescription level = closure(load_description(file, cap));
      out << "rank " << cb_rank(level) << "\n";
      for (std::size_t k = 0; !level.empty(); ++k) {
        out << "level " << k << "\n";
        for (const auto& chain : level.chains) out << format_chain(chain) << "\n";
        level = cb_derivative(level);
      }
    } else if (*closure_cmd || *cantor_cmd) {
      const auto a = load_automaton(file);
      const auto result = *closure_cmd ? close(trim(a)) : extract_cantor(a);
      if (out_path.empty()) {
        out << format_automaton(result);
      } else {
        write_file(out_path, format_automaton(result));
        out << "wrote " << out_path << "\n";
      }
    } else if (*member_cmd) {
      RationalVec x;
      try {
        x = parse_rational_vec(point);
      } catch (const Error&) {
        throw UsageFailure("malformed point '" + point + "'");
      }
      out << (member(load_automaton(file), x) ? "true" : "false") << "\n";
    } else if (*define_cmd) {
      const auto f = defining_formula(load_normal_form(file, cap));
      out << f.text << "\n" << "ell_L " << f.ell_l << "\n";
    } else if (*scale_cmd) {
      out << extract_scale(closure(load_description(file, cap))).str();
    } else if (*intersect_cmd) {
      auto problem = parse_problem(read_file(file));
      if (height >= 0) problem.height = height;
      const auto report = intersect_sparse(problem, cap == kDefaultChainCap ? kDefaultNodeCap : cap);
      for (const auto& v : report.values) out << to_string(v) << "\n";
      nlohmann::ordered_json summary;
      summary["count"] = report.values.size();
      summary["bound_log"] = report.bound_log;
      summary["complete_up_to_height"] = report.height;
      out << summary.dump() << "\n";
    } else if (*bound_cmd) {
      const auto b = intersection_bound_log(s, t);
      char buffer[64];
      std::snprintf(buffer, sizeof buffer, "%.17g", b.log_value);
      out << "log_bound " << buffer << "\n" << "formula " << b.formula << "\n";
    } else if (*verdict_cmd) {
      out << tameness_verdict(load_automaton(file)).str() << "\n";
    } else if (*growth_cmd) {
      if (nmax < 8) throw UsageFailure("--nmax must be at least 8");
      const auto report = growth_oracle(trim(load_automaton(file)), nmax);
      out << (report.growth == Growth::Exponential ? "EXPONENTIAL" : "POLYNOMIAL") << " ratio "
          << fixed12(report.ratio) << " degree " << fixed12(report.degree) << "\n";
    }
  } catch (const UsageFailure& e) {
    return {1, "error: UsageError\n" + std::string(e.what()) + "\n"};
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), "error: " + std::string(to_string(e.kind())) + "\n" + e.what() + "\n"};
  }
  return {0, "ok\n" + out.str()};
}

}  // namespace realreg::cli
