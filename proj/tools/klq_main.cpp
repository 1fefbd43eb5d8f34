// Command-line front end: Kazhdan-Lusztig polynomials and mu-coefficients for
// the symmetric group, Bruhat pictures, Robinson-Schensted tools, the
// minimal-counterexample search, and cell-graph checks.
//
// Exit codes: 0 success, 1 computation/verification failure, 2 usage error,
// 3 I/O error.

#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "klq/bruhat.hpp"
#include "klq/kl.hpp"
#include "klq/rsk.hpp"
#include "klq/search.hpp"
#include "klq/verify.hpp"
#include "klq/wgraph.hpp"

namespace {

struct CacheSession {
  klq::KLCache cache;
  std::string path;
  bool report = false;

  ~CacheSession() = default;

  void open(const std::string& p) {
    path = p;
    report = true;
    cache.load_if_present(path);  // missing file: start fresh, save later
    cache.reset_counters();
  }

  void close() {
    if (path.empty()) return;
    cache.save(path);
    if (report) {
      const auto s = cache.stats();
      std::cout << "cache: entries=" << s.entries << " hits=" << s.hits
                << " misses=" << s.misses << "\n";
    }
  }
};

klq::Permutation parse_perm_arg(const std::string& text) {
  return klq::Permutation::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig polynomial toolkit for the symmetric group"};
  app.require_subcommand(1);

  std::string cache_path;
  std::string strategy_name_opt = "smallest-right";
  int threads = 1;
  app.add_option("--cache", cache_path, "persistent polynomial cache file")->capture_default_str();
  app.add_option("--strategy", strategy_name_opt,
                 "generator choice: smallest-right|largest-right|smallest-left|largest-left");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  // kl
  auto* kl_cmd = app.add_subcommand("kl", "print P_{x,w}");
  std::string kl_x, kl_w;
  kl_cmd->add_option("x", kl_x)->required();
  kl_cmd->add_option("w", kl_w)->required();

  // mu
  auto* mu_cmd = app.add_subcommand("mu", "print mu(x,w)");
  std::string mu_x, mu_w;
  bool mu_symmetric = false;
  mu_cmd->add_option("x", mu_x)->required();
  mu_cmd->add_option("w", mu_w)->required();
  mu_cmd->add_flag("--sym", mu_symmetric, "symmetric mu of a comparable pair");

  // theta
  auto* theta_cmd = app.add_subcommand("theta", "print a correction sum");
  std::string theta_side, theta_x, theta_v;
  int theta_gen = 0;
  bool theta_sets_flag = false;
  theta_cmd->add_option("side", theta_side, "left|right")->required();
  theta_cmd->add_option("s", theta_gen, "generator index")->required();
  theta_cmd->add_option("x", theta_x)->required();
  theta_cmd->add_option("v", theta_v, "ws (right) or sw (left)")->required();
  theta_cmd->add_flag("--sets", theta_sets_flag, "also print the flush/coatomic sets");

  // picture
  auto* pic_cmd = app.add_subcommand("picture", "print the Bruhat picture of a pair");
  std::string pic_x, pic_w;
  bool pic_grid = false;
  pic_cmd->add_option("x", pic_x)->required();
  pic_cmd->add_option("w", pic_w)->required();
  pic_cmd->add_flag("--grid", pic_grid, "print the raw difference grid instead");

  // rsk
  auto* rsk_cmd = app.add_subcommand("rsk", "insertion and recording tableaux of w");
  std::string rsk_w;
  rsk_cmd->add_option("w", rsk_w)->required();

  // cell
  auto* cell_cmd = app.add_subcommand("cell", "list the left cell of a recording tableau");
  std::string cell_q;
  cell_cmd->add_option("Q", cell_q, "tableau text, rows bottom to top, e.g. 013/25/46")
      ->required();

  // knuth
  auto* knuth_cmd = app.add_subcommand("knuth", "apply the operator L_k");
  int knuth_k = 0;
  std::string knuth_w;
  knuth_cmd->add_option("k", knuth_k)->required();
  knuth_cmd->add_option("w", knuth_w)->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "run the counterexample filter pipeline");
  int search_n = 4;
  bool search_json = false, search_knuth_walk = false, search_row_words = false;
  search_cmd->add_option("n", search_n, "degree")->required()->check(CLI::Range(2, 16));
  search_cmd->add_flag("--json", search_json, "emit the report as JSON");
  search_cmd->add_flag("--cond2-knuth-walk", search_knuth_walk,
                       "walk recording tableaux instead of enumerating them");
  search_cmd->add_flag("--cond8-row-words", search_row_words,
                       "irreducibility via row words");

  // wgraph
  auto* wgraph_cmd = app.add_subcommand("wgraph", "cell graphs, matrices and relations");
  std::string wgraph_q;
  bool wgraph_matrices = false;
  wgraph_cmd->add_option("Q", wgraph_q, "recording tableau")->required();
  wgraph_cmd->add_flag("--matrices", wgraph_matrices, "print the generator matrices");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the validation suite");
  std::string suite = "core";
  verify_cmd->add_option("--suite", suite, "core|extended")
      ->check(CLI::IsMember({"core", "extended"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto strategy = klq::strategy_from_name(strategy_name_opt);
  if (!strategy) {
    std::cerr << "unknown strategy: " << strategy_name_opt << "\n";
    return 2;
  }

  try {
    CacheSession session;
    if (!cache_path.empty() && !verify_cmd->parsed()) session.open(cache_path);
    klq::KLCache& cache = session.cache;

    if (kl_cmd->parsed()) {
      const auto x = parse_perm_arg(kl_x), w = parse_perm_arg(kl_w);
      std::cout << klq::kl_poly(x, w, cache, *strategy).str() << "\n";
    } else if (mu_cmd->parsed()) {
      const auto x = parse_perm_arg(mu_x), w = parse_perm_arg(mu_w);
      const auto m = mu_symmetric ? klq::mu_sym(x, w, cache, *strategy)
                                  : klq::mu(x, w, cache, *strategy);
      std::cout << m << "\n";
    } else if (theta_cmd->parsed()) {
      if (theta_side != "left" && theta_side != "right") {
        std::cerr << "side must be left or right\n";
        return 2;
      }
      const auto spec = klq::ThetaSpec::make(
          theta_side == "left" ? klq::Side::left : klq::Side::right, theta_gen,
          parse_perm_arg(theta_x), parse_perm_arg(theta_v));
      if (theta_sets_flag) {
        const auto sets = klq::theta_sets(spec);
        std::cout << "omega (" << sets.omega.size() << "):";
        for (const auto& z : sets.omega) std::cout << " " << z.str();
        std::cout << "\ndelta (" << sets.delta.size() << "):";
        for (const auto& z : sets.delta) std::cout << " " << z.str();
        std::cout << "\n";
      }
      std::cout << klq::theta_sum(spec, cache, *strategy).str() << "\n";
    } else if (pic_cmd->parsed()) {
      const auto x = parse_perm_arg(pic_x), w = parse_perm_arg(pic_w);
      std::cout << (pic_grid ? klq::grid_dump(x, w) : klq::render_picture(x, w));
    } else if (rsk_cmd->parsed()) {
      const auto [p, q] = klq::rsk(parse_perm_arg(rsk_w));
      std::cout << "P: " << p.str() << "\nQ: " << q.str() << "\n";
    } else if (cell_cmd->parsed()) {
      for (const auto& w : klq::left_cell(klq::Tableau::parse(cell_q)))
        std::cout << w.str() << "\n";
    } else if (knuth_cmd->parsed()) {
      std::cout << klq::knuth_apply(knuth_k, parse_perm_arg(knuth_w)).str() << "\n";
    } else if (search_cmd->parsed()) {
      klq::SearchConfig config;
      config.n = search_n;
      config.threads = threads;
      config.cond2_knuth_walk = search_knuth_walk;
      config.cond8_row_words = search_row_words;
      const auto report = klq::run_search(config, cache);
      std::cout << (search_json ? report.json() + "\n" : report.str());
    } else if (wgraph_cmd->parsed()) {
      const auto q = klq::Tableau::parse(wgraph_q);
      const auto cell = klq::left_cell(q);
      const auto kg = klq::kl_graph(cell, cache);
      const auto lg = klq::ls_graph(cell);
      std::cout << "left cell of " << q.str() << " (" << cell.size() << " elements)\n";
      std::cout << "kl graph:\n" << kg.dump();
      std::cout << "ls graph:\n" << lg.dump();
      std::cout << (kg.edges == lg.edges ? "graphs coincide\n" : "graphs differ\n");
      const auto mats = klq::action_matrices(kg);
      if (wgraph_matrices)
        for (const auto& m : mats)
          std::cout << "matrix s_" << m.gen << ":\n" << m.dump();
      std::cout << "relations: " << klq::check_relations(mats).str();
    } else if (verify_cmd->parsed()) {
      klq::verify::Options options;
      options.threads = threads;
      options.cache_path = cache_path;
      const auto checks = suite == "core" ? klq::verify::core_suite(options)
                                          : klq::verify::extended_suite(options);
      const int failures = klq::verify::print_report(checks, std::cout);
      if (failures) {
        std::cout << failures << " check(s) failed\n";
        return 1;
      }
      std::cout << "all checks passed\n";
      return 0;
    }

    session.close();
    return 0;
  } catch (const klq::cache_io_error& e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return 3;
  } catch (const klq::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
