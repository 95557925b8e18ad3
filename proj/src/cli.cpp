#include "hym/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hym/algebra.hpp"
#include "hym/compound.hpp"
#include "hym/det.hpp"
#include "hym/io.hpp"
#include "hym/stp.hpp"
#include "hym/verify.hpp"

namespace hym::cli {

namespace {

using json = nlohmann::json;

// Usage problems that are not CLI11 parse errors (bad lists, bad env).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw UsageError(std::string("bad ") + what + " list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

EnumerationBudget parse_budget(const std::string& text) {
  if (text == "unlimited") return EnumerationBudget::unlimited();
  const auto xs = parse_list(text, "budget");
  if (xs.size() != 2) throw UsageError("budget must be 'n,d' or 'unlimited'");
  return EnumerationBudget{xs[0], xs[1]};
}

struct Config {
  std::string command;
  std::vector<std::string> inputs;
  std::string field;  // empty: follow the inputs
  std::string output;
  std::string kind = "sdet";
  std::optional<std::size_t> mult_k, add_k;
  std::string alpha;
  std::string perm;
  std::string budget;
  std::string suite;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string dims;
};

io::AnyHypermatrix load(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return io::parse(ss.str());
  }
  return io::read_file(path);
}

template <class T>
std::vector<Hypermatrix<T>> as_field(const std::vector<io::AnyHypermatrix>& xs) {
  std::vector<Hypermatrix<T>> out;
  for (const auto& x : xs)
    out.push_back(std::visit([](const auto& h) { return convert<T>(h); }, x));
  return out;
}

template <class T>
json run_on(const Config& cfg, const std::vector<Hypermatrix<T>>& in, const EnumerationBudget& budget) {
  const std::string& cmd = cfg.command;
  if (cmd == "stp") return io::to_json(stph(in[0], in[1]));
  if (cmd == "det") {
    const DetKind kind = parse_det_kind(cfg.kind);
    return json{{"kind", det_kind_name(kind)},
                {"field", FieldTraits<T>::name},
                {"value", io::scalar_to_json(hyperdet(in[0], kind, budget))}};
  }
  if (cmd == "compound") {
    if (cfg.mult_k) return io::to_json(mult_compound_hyper(in[0], *cfg.mult_k));
    return io::to_json(add_compound_hyper(in[0], *cfg.add_k));
  }
  if (cmd == "inverse") return io::to_json(inverse(in[0]));
  if (cmd == "transpose") {
    return io::to_json(sigma_transpose(in[0], Permutation(parse_list(cfg.perm, "permutation"))));
  }
  if (cmd == "mexpr") {
    const IndexPartition p(parse_list(cfg.alpha, "alpha"), in[0].order());
    return io::to_json(Hypermatrix<T>::from_matrix(matrix_expression(in[0], p)));
  }
  throw UsageError("unknown command " + cmd);
}

json run_eig(const io::AnyHypermatrix& input) {
  const Hypermatrix<double> a = std::visit([](const auto& h) { return convert<double>(h); }, input);
  if (a.order() != 2) fail(Errc::NotSquare, "eig expects a square matrix (dims of length 2)");
  json eigs = json::array();
  for (const auto& z : eig_small(a.as_matrix())) eigs.push_back({{"re", z.real()}, {"im", z.imag()}});
  return json{{"field", "f64"}, {"eigenvalues", std::move(eigs)}};
}

void emit(const json& doc, const Config& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << doc.dump() << '\n';
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw io::FormatError("cannot write '" + cfg.output + "'");
  f << doc.dump() << '\n';
}

void error_line(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"hym: semi-tensor products, hyperdeterminants and compound hypermatrices"};
  app.require_subcommand(1);
  app.add_option("--field", cfg.field, "Scalar field for the computation")
      ->check(CLI::IsMember({"rational", "f64"}));
  app.add_option("-o,--output", cfg.output, "Write the result to a file instead of stdout");
  app.add_option("--budget", cfg.budget, "Enumeration guard 'n,d' or 'unlimited' (overrides HYM_BUDGET)");

  auto* stp = app.add_subcommand("stp", "Semi-tensor product A ⊛ B");
  stp->add_option("a", cfg.inputs, "Left and right operand files")->required()->expected(2);
  stp->fallthrough();

  auto* det = app.add_subcommand("det", "Hyperdeterminant");
  det->add_option("input", cfg.inputs)->required()->expected(1);
  det->add_option("--kind", cfg.kind)->check(CLI::IsMember({"cdet", "ddet", "sdet"}));
  det->fallthrough();

  auto* compound = app.add_subcommand("compound", "Multiplicative or additive compound");
  compound->add_option("input", cfg.inputs)->required()->expected(1);
  auto* mult = compound->add_option("--mult", cfg.mult_k, "k-multiplicative compound");
  auto* add = compound->add_option("--add", cfg.add_k, "k-additive compound");
  mult->excludes(add);
  compound->fallthrough();

  auto* inv = app.add_subcommand("inverse", "Slicewise inverse of a hypersquare");
  inv->add_option("input", cfg.inputs)->required()->expected(1);
  inv->fallthrough();

  auto* tr = app.add_subcommand("transpose", "sigma-transpose");
  tr->add_option("input", cfg.inputs)->required()->expected(1);
  tr->add_option("--perm", cfg.perm, "Images p1,...,pd (1-based)")->required();
  tr->fallthrough();

  auto* mexpr = app.add_subcommand("mexpr", "Matrix expression M_A^alpha");
  mexpr->add_option("input", cfg.inputs)->required()->expected(1);
  mexpr->add_option("--alpha", cfg.alpha, "Row index positions i,j,... (1-based, may be empty)");
  mexpr->fallthrough();

  auto* eig = app.add_subcommand("eig", "Eigenvalues of a matrix with n <= 3");
  eig->add_option("input", cfg.inputs)->required()->expected(1);
  eig->fallthrough();

  auto* verify = app.add_subcommand("verify", "Run a seeded law-verification suite");
  verify->add_option("suite", cfg.suite)->required();
  verify->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--dims", cfg.dims, "Size budget a,b,... (see README)");
  verify->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_line(err, "UsageError", e.what());
    return kInputError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "compound" && !cfg.mult_k && !cfg.add_k)
      throw UsageError("compound needs --mult k or --add k");

    if (cfg.command == "verify") {
      verify::Options opts{cfg.trials, cfg.seed, parse_list(cfg.dims, "dims")};
      const verify::Report report = verify::run_suite(cfg.suite, opts);
      emit(report.to_json(), cfg, out);
      return report.ok() ? kOk : kDomainError;
    }

    EnumerationBudget budget;
    if (const char* env = std::getenv("HYM_BUDGET"); env && *env) budget = parse_budget(env);
    if (!cfg.budget.empty()) budget = parse_budget(cfg.budget);

    std::vector<io::AnyHypermatrix> inputs;
    for (const auto& path : cfg.inputs) inputs.push_back(load(path));

    if (cfg.command == "eig") {
      emit(run_eig(inputs[0]), cfg, out);
      return kOk;
    }

    std::string field = cfg.field;
    if (field.empty()) {
      field = "rational";
      for (const auto& x : inputs)
        if (std::holds_alternative<Hypermatrix<double>>(x)) field = "f64";
    }
    const json result = field == "rational"
                            ? run_on(cfg, as_field<Rational>(inputs), budget)
                            : run_on(cfg, as_field<double>(inputs), budget);
    emit(result, cfg, out);
    return kOk;
  } catch (const Error& e) {
    error_line(err, errc_name(e.code()), e.what());
    return kDomainError;
  } catch (const io::FormatError& e) {
    error_line(err, "FormatError", e.what());
    return kInputError;
  } catch (const UsageError& e) {
    error_line(err, "UsageError", e.what());
    return kInputError;
  } catch (const std::invalid_argument& e) {
    error_line(err, "UsageError", e.what());
    return kInputError;
  }
}

}  // namespace hym::cli
