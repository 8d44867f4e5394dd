#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bilie/commands.hpp"
#include "bilie/record.hpp"

namespace {

struct GlobalOptions {
  std::string format = "table";
  int truncation = bilie::kDefaultTruncation;
  int threads = 1;
};

void emit(const bilie::OutputRecord& rec, const GlobalOptions& g) {
  std::cout << bilie::render(rec, g.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the free bigraded Lie algebra of rank two,\n"
               "its special derivation algebra, and Witt-type dimension tables."};
  app.require_subcommand(1);
  // Precedence: command-line flags > BILIE_* environment > config file > defaults.
  app.set_config("--config", "bilie.ini", "INI configuration file");

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->envname("BILIE_FORMAT")
      ->capture_default_str();
  app.add_option("--truncation", g.truncation, "Total-degree truncation of the algebra")
      ->check(CLI::Range(1, bilie::kMaxTotalDegree))
      ->envname("BILIE_TRUNCATION")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Workers for independent bidegree computations")
      ->check(CLI::Range(1, 256))
      ->envname("BILIE_THREADS")
      ->capture_default_str();

  int wk = 2;
  int max_degree = 12;
  std::string mode = "free-upper-bound";
  auto* dims = app.add_subcommand("dims", "Bidegree dimension table and total-degree collapse");
  dims->fallthrough();
  dims->add_option("--wk", wk, "Number of roots of unity (2, 4 or 6)")
      ->check(CLI::IsMember({2, 4, 6}))
      ->envname("BILIE_WK")
      ->capture_default_str();
  dims->add_option("--max-degree", max_degree, "Largest total degree in the table")
      ->envname("BILIE_MAX_DEGREE")
      ->capture_default_str();
  dims->add_option("--mode", mode, "Which dimensions to compute")
      ->check(CLI::IsMember({"free-upper-bound", "outer-special", "classical-witt"}))
      ->capture_default_str();

  int m1 = 0, m2 = 0;
  std::string kind = "lyndon";
  auto* basis = app.add_subcommand("basis", "Basis elements at one bidegree");
  basis->fallthrough();
  basis->add_option("--m1", m1, "First coordinate of the bidegree")->required();
  basis->add_option("--m2", m2, "Second coordinate of the bidegree")->required();
  basis->add_option("--kind", kind, "Basis to print")
      ->check(CLI::IsMember({"lyndon", "special-derivation"}))
      ->capture_default_str();

  int iwk = 2;
  int ibound = 12;
  auto* index = app.add_subcommand("index-set", "Members of the index set I_K");
  index->fallthrough();
  index->add_option("--wk", iwk, "Number of roots of unity (2, 4 or 6)")
      ->check(CLI::IsMember({2, 4, 6}))
      ->envname("BILIE_WK")
      ->capture_default_str();
  index->add_option("--max-degree", ibound, "Largest total degree included")
      ->envname("BILIE_MAX_DEGREE")
      ->capture_default_str();

  int vmax_degree = 12;
  bool inject = false;
  auto* verify = app.add_subcommand("verify", "Run the full invariant suite");
  verify->fallthrough();
  verify->add_option("--max-degree", vmax_degree, "Degree bound for the checks")
      ->envname("BILIE_MAX_DEGREE")
      ->capture_default_str();
  verify->add_flag("--inject-bracket-fault", inject,
                   "Test hook: corrupt one bracket so the Jacobi check fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? bilie::kExitOk : bilie::kExitDomainError;
  }

  try {
    if (*dims) {
      emit(bilie::cmd_dims(wk, max_degree, bilie::dims_mode_from_string(mode),
                           g.truncation, g.threads),
           g);
    } else if (*basis) {
      emit(bilie::cmd_basis({m1, m2}, bilie::basis_kind_from_string(kind), g.truncation), g);
    } else if (*index) {
      emit(bilie::cmd_index_set(iwk, ibound), g);
    } else if (*verify) {
      bilie::VerifyOptions opt;
      opt.max_degree = vmax_degree;
      opt.truncation = g.truncation;
      opt.threads = g.threads;
      opt.inject_bracket_fault = inject;
      const bilie::OutputRecord rec = bilie::cmd_verify(opt);
      emit(rec, g);
      if (!bilie::all_checks_passed(rec)) return bilie::kExitVerifyFailed;
    }
  } catch (const bilie::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bilie::kExitTruncation;
  } catch (const bilie::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bilie::kExitDomainError;
  } catch (const bilie::NotFreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bilie::kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return bilie::kExitInternal;
  }
  return bilie::kExitOk;
}
