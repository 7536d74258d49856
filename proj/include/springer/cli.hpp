#pragma once

// Command-line front end. run() never exits the process and writes only to
// the given streams, so it can be driven from tests.
//
// Exit codes: 0 success, 1 domain error, 2 fixture error, 64 usage,
// 70 internal failure (including a failed selftest or rc sweep).

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "springer/springer.hpp"

namespace springer::cli {

enum ExitCode : int { ok = 0, domain_error = 1, data_error = 2, usage = 64, internal = 70 };

struct Config {
  std::uint64_t seed = 0;
  int max_n = 8;
  int threads = 1;
  std::string format = "tsv";
  std::string data_dir;  ///< empty: SPRINGER_DATA_DIR, then the built-in path

  DecompositionOptions options() const {
    if (max_n > kHardMaxN) throw DomainError("--max-n may not exceed " + std::to_string(kHardMaxN));
    return {seed, threads, max_n};
  }
  std::string fixtures() const { return data_dir.empty() ? default_data_dir() : data_dir; }
  bool json() const { return format == "json"; }
};

namespace detail {

inline void print_matrix(std::ostream& out, const Config& cfg, const DecompositionMatrix& d) {
  if (cfg.json())
    out << d.to_json().dump() << '\n';
  else
    out << d.to_tsv();
}

inline void decmat(std::ostream& out, const Config& cfg, int n, long long ell, bool springer_rows) {
  auto d = decomposition_matrix_symmetric(n, ell, cfg.options());
  if (springer_rows) d = springer_ordered(d);
  print_matrix(out, cfg, d);
}

inline void basicset_sn(std::ostream& out, const Config& cfg, int n, long long ell) {
  const auto table = symmetric_character_table(n);
  std::vector<std::size_t> rows;
  std::vector<std::string> labels;
  for (const auto& p : springer_order(n)) {
    labels.push_back(p.to_string());
    for (std::size_t i = 0; i < table.row_labels.size(); ++i)
      if (table.row_labels[i] == labels.back()) rows.push_back(i);
  }
  const auto result = springer_basic_set(table.values.select(rows, l_regular_classes(table, ell)));
  std::vector<std::string> violations;
  if (n <= cfg.options().max_n) {
    const auto d = springer_ordered(decomposition_matrix_symmetric(n, ell, cfg.options()));
    for (const auto& v : verify_unitriangular(d, beta_by_label(d), orbit_closure_order(d)).violations)
      violations.push_back(v.describe(d));
  }
  out << basic_set_report(labels, result, violations).dump() << '\n';
}

inline void basicset_g2(std::ostream& out, long long ell) {
  require_field_prime(ell);
  const auto table = g2_character_table();
  const auto result = springer_basic_set(table.restrict_to(l_regular_classes(table, ell)));
  out << basic_set_report(table.row_labels, result).dump() << '\n';
}

inline void springer_map(std::ostream& out, const Config& cfg, int n, long long ell) {
  if (n < 1) throw DomainError("--n must be positive");
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  if (!cfg.json()) out << "#\tmu\torbit\n";
  for (const auto& mu : l_regular_partitions_of(n, static_cast<int>(ell))) {
    const auto pair = psi_modular(mu, ell);
    if (cfg.json())
      j.push_back({{"mu", mu.to_string()}, {"orbit", pair.orbit.to_string()}});
    else
      out << "D\t" << mu.to_string() << '\t' << pair.orbit.to_string() << '\n';
  }
  if (cfg.json()) out << j.dump() << '\n';
}

inline nlohmann::ordered_json rc_json(const Partition& lam, const Partition& mu, const RcCheck& r) {
  return {{"lam", lam.to_string()},           {"mu", mu.to_string()}, {"lam_hat", r.removal.lam_hat.to_string()},
          {"mu_hat", r.removal.mu_hat.to_string()}, {"lhs", r.lhs},         {"rhs", r.rhs},
          {"equal", r.equal()}};
}

inline ExcTable exc_table(const Config& cfg, const std::string& type, long long ell) {
  return load_table(CartanType::parse(type), ell, cfg.fixtures());
}

/// Desk-scale invariant checks; one line per check.
inline int selftest(std::ostream& out, const Config& cfg) {
  int failures = 0;
  const auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    std::string problem;
    try {
      problem = body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      out << "ok\t" << name << '\n';
    } else {
      out << "FAIL\t" << name << "\t" << problem << '\n';
      ++failures;
    }
  };
  const auto opts = cfg.options();

  check("partitions: counts and conjugation", []() -> std::string {
    const long long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n) {
      const auto parts = partitions_of(n);
      if (static_cast<long long>(parts.size()) != p[n]) return "p(" + std::to_string(n) + ") wrong";
      for (const auto& q : parts)
        if (conjugate(conjugate(q)) != q) return "conjugation is not an involution at " + q.to_string();
    }
    return std::string();
  });
  check("weylchar: column orthogonality, S_n n <= 7 and W(G_2)", []() -> std::string {
    std::vector<CharacterTable> tables{g2_character_table()};
    for (int n = 1; n <= 7; ++n) tables.push_back(symmetric_character_table(n));
    for (const auto& t : tables)
      for (std::size_t a = 0; a < t.values.cols(); ++a)
        for (std::size_t b = 0; b < t.values.cols(); ++b) {
          Integer s = 0;
          for (std::size_t i = 0; i < t.values.rows(); ++i) s += t.values(i, a) * t.values(i, b);
          const Integer want = a == b ? Integer(t.group_order() / t.class_sizes[a]) : Integer(0);
          if (s != want) return "orthogonality fails for " + t.row_labels.front() + " table";
        }
    return std::string();
  });
  check("modrep: S_n matrices n <= 5, unitriangular, dimensions, blocks of identity", [&]() -> std::string {
    for (int n = 1; n <= 5; ++n)
      for (long long ell : {2, 3, 5}) {
        const auto d = decomposition_matrix_symmetric(n, ell, opts);
        const auto report = verify_unitriangular(d, beta_by_label(d), [&d](std::size_t a, std::size_t b) {
          return dominates(Partition::parse(d.row_labels[b]), Partition::parse(d.row_labels[a]));
        });
        if (!report.ok()) return "n = " + std::to_string(n) + ", ell = " + std::to_string(ell) + ": " +
                                 report.violations.front().describe(d);
        for (std::size_t i = 0; i < d.rows(); ++i) {
          long long dim = 0;
          for (std::size_t j = 0; j < d.cols(); ++j)
            dim += d.entries(i, j).convert_to<long long>() *
                   static_cast<long long>(simple_module(Partition::parse(d.col_labels[j]), ell).dim());
          if (dim != standard_tableaux_count(Partition::parse(d.row_labels[i])))
            return "dimension bookkeeping fails at " + d.row_labels[i];
        }
        if (springer::detail::factorial(n) % ell != 0 && d.entries != IntMatrix::identity(d.rows()))
          return "not the identity although ell does not divide n!";
      }
    return std::string();
  });
  check("basicset: G_2 at ell = 2 is {chi(1,0), chi(2,2)}", []() -> std::string {
    const auto t = g2_character_table();
    const auto r = springer_basic_set(t.restrict_to(l_regular_classes(t, 2)));
    if (r.selected_rows != std::vector<std::size_t>{0, 2}) return std::string("wrong selection");
    return std::string();
  });
  check("springer_gl: basic sets are the ell-regular partitions, n <= 5", []() -> std::string {
    for (int n = 1; n <= 5; ++n) {
      const auto t = symmetric_character_table(n);
      const auto order = springer_order(n);
      std::vector<std::size_t> rows;
      for (const auto& p : order)
        for (std::size_t i = 0; i < t.row_labels.size(); ++i)
          if (t.row_labels[i] == p.to_string()) rows.push_back(i);
      for (int ell : {2, 3, 5}) {
        std::vector<Partition> got;
        for (std::size_t i : springer_basic_set(t.values.select(rows, l_regular_classes(t, ell))).selected_rows)
          got.push_back(order[i]);
        std::sort(got.begin(), got.end());
        auto want = l_regular_partitions_of(n, ell);
        std::sort(want.begin(), want.end());
        if (got != want) return "mismatch at n = " + std::to_string(n) + ", ell = " + std::to_string(ell);
      }
    }
    return std::string();
  });
  check("springer_gl: row/column removal, n <= 5, ell in {2, 3}", [&]() -> std::string {
    for (long long ell : {2, 3}) {
      const auto s = rc_sweep(5, ell, opts);
      if (!s.failures.empty())
        return s.failures.front().first.first.to_string() + " vs " + s.failures.front().first.second.to_string();
    }
    return std::string();
  });
  check("lattices: invariant factors multiply to the determinant, rank <= 8", []() -> std::string {
    for (char letter : std::string("ABCDEFG"))
      for (int r = 1; r <= 8; ++r) {
        CartanType t{letter, r};
        try {
          t.validate();
        } catch (const DomainError&) {
          continue;
        }
        Integer prod = 1;
        for (const auto& f : smith_normal_form(cartan_matrix_of(t))) prod *= f;
        if (prod != determinant(cartan_matrix_of(t))) return t.to_string();
      }
    return std::string();
  });
  check("excdata: shipped fixtures verify", [&]() -> std::string {
    const std::pair<const char*, long long> shipped[] = {{"G2", 2}, {"G2", 3}, {"F4", 2}, {"F4", 3},
                                                         {"E6", 2}, {"E6", 3}, {"E6", 5}, {"E7", 5},
                                                         {"E7", 7}, {"E8", 5}, {"E8", 7}};
    for (const auto& [type, ell] : shipped) {
      const auto t = exc_table(cfg, type, ell);
      const auto report = verify_structure(t);
      if (!report.ok()) return std::string(type) + ": " + report.violations.front().message;
      if (const auto deg = verify_degrees(t); !deg.empty()) return std::string(type) + ": " + deg.front();
    }
    if (format_pairs(extract_modular_image(exc_table(cfg, "G2", 2))) != "0, A~_1") return std::string("G_2 image");
    return std::string();
  });
  check("lattices vs excdata: minimal orbit column entries", [&]() -> std::string {
    const std::pair<const char*, long long> cases[] = {{"G2", 2}, {"G2", 3}, {"F4", 2}, {"F4", 3},
                                                       {"E6", 2}, {"E6", 3}, {"E6", 5}};
    for (const auto& [type, ell] : cases)
      if (decomposition_number(exc_table(cfg, type, ell), {"A_1", ""}, {"0", ""}) !=
          minimal_decnumber(CartanType::parse(type), ell))
        return std::string(type) + " at ell = " + std::to_string(ell);
    return std::string();
  });
  out << (failures == 0 ? "selftest passed\n" : "selftest FAILED: " + std::to_string(failures) + " check(s)\n");
  return failures == 0 ? ok : internal;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decomposition numbers and the modular Springer correspondence", "springer"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--seed", cfg.seed, "Seed for the randomized MeatAxe steps")->capture_default_str();
  app.add_option("--max-n", cfg.max_n, "Largest n for decomposition matrices (at most 10)")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  app.add_option("--data-dir", cfg.data_dir, "Fixture directory (overrides SPRINGER_DATA_DIR)");

  int n = 0;
  long long ell = 0;
  std::string lam, mu, type;
  bool springer_rows = false;
  int sweep = 0;

  std::function<int()> action;

  auto* decmat = app.add_subcommand("decmat", "Decomposition matrix of S_n over F_ell");
  decmat->add_option("--n", n)->required();
  decmat->add_option("--ell", ell)->required();
  decmat->add_flag("--springer-order", springer_rows, "List rows in the order of the Springer correspondence");
  decmat->callback([&] { action = [&] { detail::decmat(out, cfg, n, ell, springer_rows); return 0; }; });

  auto* basicset = app.add_subcommand("basicset", "Basic set from restricted ordinary characters");
  auto* basic_n = basicset->add_option("--n", n, "Symmetric group S_n");
  auto* basic_t = basicset->add_option("--type", type, "G2 for the dihedral group of order 12");
  basic_n->excludes(basic_t);
  basicset->add_option("--ell", ell)->required();
  basicset->callback([&] {
    action = [&] {
      if (!type.empty()) {
        if (!(CartanType::parse(type) == CartanType{'G', 2}))
          throw DomainError("live character tables exist for S_n and G2 only");
        detail::basicset_g2(out, ell);
      } else if (n > 0) {
        detail::basicset_sn(out, cfg, n, ell);
      } else {
        throw DomainError("basicset needs --n or --type");
      }
      return 0;
    };
  });

  auto* springer = app.add_subcommand("springer", "Modular Springer correspondence for GL_n");
  springer->require_subcommand(1);
  auto* map = springer->add_subcommand("map", "mu -> orbit of Jordan type mu'");
  map->add_option("--n", n)->required();
  map->add_option("--ell", ell)->required();
  map->callback([&] { action = [&] { detail::springer_map(out, cfg, n, ell); return 0; }; });
  auto* dnc = springer->add_subcommand("dnc", "Decomposition number of the nilpotent cone");
  dnc->add_option("--lam", lam)->required();
  dnc->add_option("--mu", mu)->required();
  dnc->add_option("--ell", ell)->required();
  dnc->callback([&] {
    action = [&] {
      out << d_nilcone(Partition::parse(lam), Partition::parse(mu), ell, cfg.options()) << '\n';
      return 0;
    };
  });

  auto* lattice = app.add_subcommand("lattice", "Weight and root lattices");
  lattice->require_subcommand(1);
  auto* fundgroup = lattice->add_subcommand("fundgroup", "Invariant factors of P/Q");
  fundgroup->add_option("--type", type)->required();
  fundgroup->callback([&] {
    action = [&] {
      const auto t = CartanType::parse(type);
      std::vector<std::string> inv;
      for (const auto& f : fundamental_group_invariants(t)) inv.push_back(f.str());
      out << nlohmann::ordered_json{{"type", t.to_string()}, {"invariants", inv}}.dump() << '\n';
      return 0;
    };
  });
  auto* minimal = lattice->add_subcommand("minimal", "Predicted entry for the minimal orbit");
  minimal->add_option("--type", type)->required();
  minimal->add_option("--ell", ell)->required();
  minimal->callback([&] {
    action = [&] {
      out << minimal_decnumber(CartanType::parse(type), ell) << '\n';
      return 0;
    };
  });
  auto* subreg = lattice->add_subcommand("subreg", "F_ell (x) P/Q of the simply-laced cover");
  subreg->add_option("--type", type)->required();
  subreg->add_option("--ell", ell)->required();
  subreg->callback([&] {
    action = [&] {
      out << subregular_module(CartanType::parse(type), ell, cfg.seed).to_json().dump() << '\n';
      return 0;
    };
  });

  auto* exc = app.add_subcommand("exc", "Exceptional decomposition tables");
  exc->require_subcommand(1);
  const auto exc_sub = [&](const std::string& name, const std::string& help) {
    auto* sub = exc->add_subcommand(name, help);
    sub->add_option("--type", type)->required();
    sub->add_option("--ell", ell)->required();
    return sub;
  };
  exc_sub("verify", "Structural checks on a fixture")->callback([&] {
    action = [&] {
      const auto t = detail::exc_table(cfg, type, ell);
      const auto report = verify_structure(t);
      const auto degrees = verify_degrees(t);
      if (cfg.json()) {
        out << structure_report_json(t, report, degrees).dump() << '\n';
      } else {
        out << "#\tcheck\tblock\tmessage\n";
        for (const auto& v : report.violations)
          out << "violation\t" << check_name(v.check) << '\t' << v.block << '\t' << v.message << '\n';
        for (const auto& d : degrees) out << "violation\tdegrees\t-\t" << d << '\n';
        out << t.group_type.to_string() << " ell=" << t.ell << ": "
            << (report.ok() && degrees.empty() ? "ok" : "violations found") << '\n';
      }
      return report.ok() && degrees.empty() ? 0 : int{data_error};
    };
  });
  exc_sub("image", "Pairs at the top of each column")->callback([&] {
    action = [&] {
      const auto image = extract_modular_image(detail::exc_table(cfg, type, ell));
      if (cfg.json()) {
        std::vector<std::string> v;
        for (const auto& p : image) v.push_back(p.to_string());
        out << nlohmann::json(v).dump() << '\n';
      } else {
        out << format_pairs(image) << '\n';
      }
      return 0;
    };
  });
  exc_sub("missing", "Listed pairs outside the image")->callback([&] {
    action = [&] {
      out << format_pairs(missing_pairs(detail::exc_table(cfg, type, ell))) << '\n';
      return 0;
    };
  });
  exc_sub("assemble", "Block-diagonal decomposition matrix")->callback([&] {
    action = [&] {
      detail::print_matrix(out, cfg, assemble(detail::exc_table(cfg, type, ell)));
      return 0;
    };
  });

  auto* rc = app.add_subcommand("rc-check", "Row/column removal for nilpotent-cone decomposition numbers");
  auto* rc_lam = rc->add_option("--lam", lam);
  rc->add_option("--mu", mu)->needs(rc_lam);
  rc->add_option("--ell", ell)->required();
  rc->add_option("--sweep", sweep, "Check every pair lam ⊵ mu with |lam| <= N")->excludes(rc_lam);
  rc->callback([&] {
    action = [&] {
      if (sweep > 0) {
        const auto s = rc_sweep(sweep, ell, cfg.options());
        nlohmann::ordered_json j{{"max_n", sweep}, {"ell", ell}, {"checked", s.checked}, {"skipped", s.skipped}};
        j["failures"] = nlohmann::ordered_json::array();
        for (const auto& [pair, r] : s.failures) j["failures"].push_back(detail::rc_json(pair.first, pair.second, r));
        out << j.dump() << '\n';
        return s.failures.empty() ? 0 : int{internal};
      }
      if (lam.empty() || mu.empty()) throw DomainError("rc-check needs --lam and --mu, or --sweep");
      const auto l = Partition::parse(lam), m = Partition::parse(mu);
      const auto r = check_rc_removal(l, m, ell, cfg.options());
      out << detail::rc_json(l, m, r).dump() << '\n';
      return 0;
    };
  });

  app.add_subcommand("selftest", "Run the desk-scale invariant checks")->callback([&] {
    action = [&] { return detail::selftest(out, cfg); };
  });

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    // prints help for --help, the error and a hint otherwise
    return app.exit(e, out, err) == 0 ? int{ok} : int{usage};
  }

  try {
    return action ? action() : int{usage};
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return domain_error;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return data_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal;
  }
}

}  // namespace springer::cli
