// Command-line front end: expression evaluation, verification suites, and
// JSON/CSV reports.  Exit code 0 = pass, 1 = verification failure,
// 2 = usage or IO error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rookchar/gram.hpp"
#include "rookchar/json_io.hpp"
#include "rookchar/notation.hpp"
#include "rookchar/quasicycle.hpp"
#include "rookchar/regular_rep.hpp"
#include "rookchar/rook_core.hpp"
#include "rookchar/tensor_oracle.hpp"
#include "rookchar/thoma.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rookchar;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::InvalidArgument, "cannot open file: " + path);
  }
  nlohmann::json j;
  in >> j;
  return j;
}

std::vector<RookElement> load_elements(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::InvalidArgument, "cannot open file: " + path);
  }
  std::vector<RookElement> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse(line));
  }
  return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"rook monoid character calculator"};
  app.require_subcommand(1);

  std::string params_path, model_path, elements_path, expr, out_format = "json";
  int n = 3;
  int max_subset = 8;
  std::uint64_t seed = 0;
  double tol = 1e-10;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a character value");
  eval_cmd->add_option("--params", params_path)->required();
  eval_cmd->add_option("expr", expr)->required();

  auto* dec_cmd = app.add_subcommand("decompose", "canonical quasicycle decomposition");
  dec_cmd->add_option("expr", expr)->required();

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix and PSD check");
  gram_cmd->add_option("--params", params_path)->required();
  auto* gram_n = gram_cmd->add_option("--all-rn", n, "use all of R_n as elements");
  auto* gram_el = gram_cmd->add_option("--elements", elements_path,
                                       "newline-delimited expression file");
  gram_cmd->add_option("--format", out_format)->check(CLI::IsMember({"json", "csv"}));

  auto* cent_cmd = app.add_subcommand("centrality", "centrality check over R_n");
  cent_cmd->add_option("--params", params_path)->required();
  cent_cmd->add_option("--n", n);
  cent_cmd->add_option("--tol", tol);

  auto* oracle_cmd = app.add_subcommand("oracle", "tensor oracle vs character formula");
  oracle_cmd->add_option("--model", model_path)->required();
  oracle_cmd->add_option("--tol", tol);
  oracle_cmd->add_option("expr", expr)->required();

  auto* limits_cmd = app.add_subcommand("limits", "limit-operator stabilization report");
  limits_cmd->add_option("--model", model_path)->required();
  limits_cmd->add_option("--n", n, "check all r in R_n");
  limits_cmd->add_option("--tol", tol);

  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate R_n");
  enum_cmd->add_option("--n", n)->required();

  auto* reg_cmd = app.add_subcommand("regcheck", "regular representation checks");
  reg_cmd->add_option("--n", n);
  reg_cmd->add_option("--seed", seed);

  auto* wit_cmd = app.add_subcommand("witness", "Gram witness search");
  wit_cmd->add_option("--params", params_path)->required();
  wit_cmd->add_option("--n", n, "pool = R_n");
  wit_cmd->add_option("--max-subset", max_subset);
  wit_cmd->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  if (eval_cmd->parsed()) {
    auto p = params_from_json(load_json(params_path));
    emit({{"value", character(p, parse(expr))}});
    return 0;
  }

  if (dec_cmd->parsed()) {
    ordered_json out = ordered_json::array();
    for (const Quasicycle& q : decompose(parse(expr))) {
      out.push_back(quasicycle_to_json(q));
    }
    emit(out);
    return 0;
  }

  if (gram_cmd->parsed()) {
    if (gram_n->count() == gram_el->count()) {
      std::cerr << "gram: exactly one of --all-rn / --elements required\n";
      return 2;
    }
    auto p = params_from_json(load_json(params_path), /*allow_unchecked=*/true);
    auto elements = gram_el->count() ? load_elements(elements_path)
                                     : enumerate_rn(n);
    SymMatrix g = gram_matrix(p, elements);
    double min_eig = min_eigenvalue(g);
    bool psd = min_eig >= -kPsdTolerance;
    if (out_format == "csv") {
      for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
          std::cout << (j ? "," : "") << g.at(i, j);
        }
        std::cout << "\n";
      }
    } else {
      emit({{"size", g.n}, {"min_eigenvalue", min_eig}, {"is_psd", psd}});
    }
    return psd ? 0 : 1;
  }

  if (cent_cmd->parsed()) {
    auto p = params_from_json(load_json(params_path));
    auto report = check_centrality(p, enumerate_rn(n), tol);
    emit({{"n", n},
          {"max_deviation", report.max_deviation},
          {"pass", report.pass}});
    return report.pass ? 0 : 1;
  }

  if (oracle_cmd->parsed()) {
    auto m = model_from_json(load_json(model_path));
    RookElement r = parse(expr);
    double oracle = oracle_character(m, r);
    double formula = character(m.induced_params(), r);
    double diff = std::fabs(oracle - formula);
    emit({{"oracle", oracle}, {"formula", formula}, {"abs_diff", diff}});
    return diff <= tol ? 0 : 1;
  }

  if (limits_cmd->parsed()) {
    auto m = model_from_json(load_json(model_path));
    double max_diff = 0.0;
    auto limit = limit_operator(m, 1);
    for (const RookElement& r : enumerate_rn(n)) {
      auto lifted = lift(r, m);
      double reference = expectation(product(limit, lifted), m);
      for (int nn = r.max_point() + 2; nn <= m.n_factors(); ++nn) {
        auto swap = lift(cycle({1, nn}), m);
        max_diff = std::max(
            max_diff,
            std::fabs(expectation(product(swap, lifted), m) - reference));
      }
    }
    bool pass = max_diff <= std::max(tol, 1e-12);
    emit({{"n", n}, {"max_abs_diff", max_diff}, {"pass", pass}});
    return pass ? 0 : 1;
  }

  if (enum_cmd->parsed()) {
    auto elements = enumerate_rn(n);
    std::map<int, int> by_deficit;
    for (const auto& r : elements) ++by_deficit[r.rank_deficit()];
    ordered_json deficits;
    for (const auto& [d, count] : by_deficit) {
      deficits[std::to_string(d)] = count;
    }
    emit({{"total", elements.size()}, {"by_deficit", deficits}});
    return 0;
  }

  if (reg_cmd->parsed()) {
    auto basis = enumerate_rn(n);
    bool star_rep = true, multiplicative = true, commute = true, grading = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    const int samples = n <= 2 ? 0 : 500;

    auto sample_pairs = [&](auto&& fn) {
      if (n <= 2) {
        for (const auto& r : basis)
          for (const auto& s : basis) fn(r, s);
      } else {
        for (int i = 0; i < samples; ++i) fn(basis[pick(rng)], basis[pick(rng)]);
      }
    };

    auto mat_mul = [](const auto& a, const auto& b) {
      std::size_t nn = a.size();
      std::vector<std::vector<double>> c(nn, std::vector<double>(nn, 0.0));
      for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t k = 0; k < nn; ++k) {
          if (a[i][k] == 0.0) continue;
          for (std::size_t j = 0; j < nn; ++j) c[i][j] += a[i][k] * b[k][j];
        }
      return c;
    };

    for (const auto& r : basis) {
      auto lm = rep_matrix(Side::Left, r, n);
      auto ls = rep_matrix(Side::Left, star(r), n);
      for (std::size_t i = 0; i < lm.size() && star_rep; ++i)
        for (std::size_t j = 0; j < lm.size(); ++j)
          if (lm[i][j] != ls[j][i]) {
            star_rep = false;
            break;
          }
    }
    sample_pairs([&](const RookElement& r, const RookElement& s) {
      auto prod = mat_mul(rep_matrix(Side::Left, r, n),
                          rep_matrix(Side::Left, s, n));
      if (prod != rep_matrix(Side::Left, compose(r, s), n))
        multiplicative = false;
      auto lr = rep_matrix(Side::Left, r, n);
      auto rr = rep_matrix(Side::Right, s, n);
      if (mat_mul(lr, rr) != mat_mul(rr, lr)) commute = false;
    });
    for (const auto& r : basis) {
      for (const auto& t : basis) {
        auto li = left_action(r, t);
        auto ri = right_action(r, t);
        if ((li && li->rank_deficit() != t.rank_deficit()) ||
            (ri && ri->rank_deficit() != t.rank_deficit())) {
          grading = false;
        }
      }
    }
    bool pass = star_rep && multiplicative && commute && grading;
    emit({{"n", n},
          {"star_rep", star_rep},
          {"multiplicative", multiplicative},
          {"commute", commute},
          {"grading", grading}});
    return pass ? 0 : 1;
  }

  if (wit_cmd->parsed()) {
    auto p = params_from_json(load_json(params_path), /*allow_unchecked=*/true);
    auto report = witness_search(p, enumerate_rn(n), max_subset, seed);
    ordered_json subset = ordered_json::array();
    for (const auto& r : report.subset) subset.push_back(rookchar::format(r));
    emit({{"min_eigenvalue", report.min_eigenvalue},
          {"is_psd", report.is_psd},
          {"subset", subset}});
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rookchar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
