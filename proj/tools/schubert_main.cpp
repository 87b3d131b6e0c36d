// Command-line interface: structure constants, products, Pieri expansions,
// verification sweeps, bijection traces and table dumps.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schubert/jdt.hpp"
#include "schubert/oracle.hpp"
#include "schubert/records.hpp"
#include "schubert/ring.hpp"
#include "schubert/shifted.hpp"

namespace {

using namespace schubert;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string space;
  std::string lambda;
  std::string mu;
  std::string nu;
  std::string mu_tilde;
  std::string convention = "paper";
  std::string format = "text";
  std::string out_file;
  std::string mode;
  bool with_oracle = false;
  int p = 0;
  int max_size = 0;
};

std::string term_symbol(const AmbientSpace& space) {
  return space.type() == SpaceType::type_a ? "s" : "t";
}

long long coefficient_for(const AmbientSpace& space, const Partition& lambda,
                          const Partition& mu, const Partition& nu,
                          Convention convention) {
  if (space.type() == SpaceType::type_a) {
    return lr_coefficient(lambda, mu, nu, space, convention);
  }
  long long f = lrs_coefficient(lambda, mu, nu, space.n(), convention);
  if (space.type() == SpaceType::type_c) {
    int exponent = lambda.length() + mu.length() - nu.length();
    if (f != 0 && exponent < 0) {
      throw std::logic_error("negative type C exponent for a nonzero constant");
    }
    return f == 0 ? 0 : f * (1LL << exponent);
  }
  return f;
}

int run_coeff(const Options& opt) {
  AmbientSpace space = AmbientSpace::parse(opt.space);
  Partition lambda = Partition::parse(opt.lambda);
  Partition mu = Partition::parse(opt.mu);
  Partition nu = Partition::parse(opt.nu);
  Convention convention = opt.convention == "standard" ? Convention::standard_form
                                                       : Convention::paper_form;
  long long c = coefficient_for(space, lambda, mu, nu, convention);
  if (opt.format == "records") {
    std::cout << to_record_line({space.to_string(), lambda, mu, nu, c}) << '\n';
  } else {
    std::cout << c << '\n';
  }
  return kExitOk;
}

int run_product(const Options& opt, bool pieri) {
  AmbientSpace space = AmbientSpace::parse(opt.space);
  SchubertRing ring(space);
  Partition lambda = Partition::parse(opt.lambda);
  Partition left = pieri ? Partition(std::vector<int>{opt.p})
                         : Partition::parse(opt.mu);
  RingElement x = RingElement::basis_element(space, lambda);
  RingElement result = pieri
                           ? ring.pieri_multiply(opt.p, x)
                           : ring.multiply(RingElement::basis_element(space, left), x);
  if (opt.format == "records") {
    for (const auto& [nu, coeff] : result.ordered_terms()) {
      std::cout << to_record_line({space.to_string(), lambda, left, nu, coeff})
                << '\n';
    }
  } else {
    std::string sym = term_symbol(space);
    std::cout << sym << "(" << left.to_string() << ") * " << sym << "("
              << lambda.to_string() << ") = " << result.to_string(sym) << '\n';
  }
  return kExitOk;
}

int run_table(const Options& opt) {
  AmbientSpace space = AmbientSpace::parse(opt.space);
  SchubertRing ring(space);
  if (opt.out_file.empty()) {
    write_table(ring, std::cout);
  } else {
    std::ofstream out(opt.out_file);
    if (!out) throw std::invalid_argument("cannot open output file " + opt.out_file);
    write_table(ring, out);
  }
  return kExitOk;
}

struct OracleSweep {
  long long checked = 0;
  std::vector<std::string> violations;
};

// Agreement of the enumerative constants with the symmetric polynomial
// oracles. Type B/C sweeps are scoped to |lambda|+|mu| <= 8, the range the
// stable P-function oracle is sized for.
OracleSweep oracle_agreement(const SchubertRing& ring) {
  OracleSweep sweep;
  const AmbientSpace& space = ring.space();
  for (const Partition& la : ring.basis()) {
    for (const Partition& mu : ring.basis()) {
      if (space.shifted() && la.weight() + mu.weight() > 8) continue;
      for (const Partition& nu : ring.basis()) {
        long long got = ring.structure_constant(la, mu, nu);
        long long expected = 0;
        if (space.type() == SpaceType::type_a) {
          expected = schur_product_coefficient(la, mu, nu);
        } else {
          expected = p_product_coefficient(la, mu, nu);
          if (space.type() == SpaceType::type_c && expected != 0) {
            expected <<= (la.length() + mu.length() - nu.length());
          }
        }
        ++sweep.checked;
        if (got != expected) {
          sweep.violations.push_back("oracle mismatch at (" + la.to_string() + ") (" +
                                     mu.to_string() + ") (" + nu.to_string() +
                                     "): " + std::to_string(got) + " vs " +
                                     std::to_string(expected));
        }
      }
    }
  }
  return sweep;
}

int run_verify(const Options& opt) {
  std::vector<AmbientSpace> spaces;
  if (!opt.space.empty()) {
    spaces.push_back(AmbientSpace::parse(opt.space));
  } else {
    int a = opt.max_size > 0 ? opt.max_size : 3;
    int n = opt.max_size > 0 ? opt.max_size : 4;
    spaces = {AmbientSpace::type_a(a, a), AmbientSpace::type_b(n),
              AmbientSpace::type_c(n)};
  }
  bool any_violation = false;
  for (const AmbientSpace& space : spaces) {
    SchubertRing ring(space);
    auto start = std::chrono::steady_clock::now();
    VerifyReport report = ring.verify();
    OracleSweep sweep;
    if (opt.with_oracle) sweep = oracle_agreement(ring);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << report.summary();
    if (opt.with_oracle) std::cout << ", " << sweep.checked << " oracle comparisons";
    std::cout << " [" << ms << " ms]\n";
    for (const std::string& v : report.violations) {
      std::cout << "  violation: " << v << '\n';
    }
    for (const std::string& v : sweep.violations) {
      std::cout << "  violation: " << v << '\n';
    }
    any_violation |= !report.ok() || !sweep.violations.empty();
  }
  return any_violation ? kExitViolations : kExitOk;
}

void print_trace(const SlideTrace& trace) {
  std::cout << "  hole (" << trace.start.row << "," << trace.start.col << "):";
  for (const Cell& c : trace.path) std::cout << " (" << c.row << "," << c.col << ")";
  std::cout << '\n';
}

// Record serialization for trace output. Tableaux are row-lists with a
// parallel inner-shape offset list; marked symbols print as "3" / "3'",
// holes as "o" / "o'".

std::string json_int_list(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

std::string json_cell(Cell c) {
  return "[" + std::to_string(c.row) + "," + std::to_string(c.col) + "]";
}

std::string tableau_json(const Tableau& t) {
  std::string rows;
  for (int i = 1; i <= t.shape().rows(); ++i) {
    if (i > 1) rows += ',';
    std::vector<int> row;
    for (int j = t.shape().row_first_col(i); j <= t.shape().row_last_col(i); ++j) {
      row.push_back(t.at({i, j}));
    }
    rows += json_int_list(row);
  }
  return "{\"inner\":" + json_int_list(t.shape().inner().parts()) + ",\"rows\":[" +
         rows + "]}";
}

std::string marked_tableau_json(const MarkedTableau& t) {
  std::string rows;
  for (int i = 1; i <= t.shape().rows(); ++i) {
    if (i > 1) rows += ',';
    rows += '[';
    bool first = true;
    for (int j = t.shape().row_first_col(i); j <= t.shape().row_last_col(i); ++j) {
      if (!first) rows += ',';
      first = false;
      rows += '"' + t.at({i, j}).to_string() + '"';
    }
    rows += ']';
  }
  return "{\"inner\":" + json_int_list(t.shape().inner().parts()) + ",\"rows\":[" +
         rows + "]}";
}

std::string traces_json(const std::vector<SlideTrace>& traces) {
  std::string out = "[";
  for (std::size_t i = 0; i < traces.size(); ++i) {
    if (i) out += ',';
    out += "{\"start\":" + json_cell(traces[i].start) + ",\"path\":[";
    for (std::size_t j = 0; j < traces[i].path.size(); ++j) {
      if (j) out += ',';
      out += json_cell(traces[i].path[j]);
    }
    out += "]}";
  }
  return out + "]";
}

std::string holes_json(const std::vector<HoleCell>& holes) {
  std::string out = "[";
  for (std::size_t i = 0; i < holes.size(); ++i) {
    if (i) out += ',';
    out += "{\"cell\":" + json_cell(holes[i].cell) + ",\"symbol\":\"" +
           (holes[i].marked ? "o'" : "o") + "\"}";
  }
  return out + "]";
}

int run_trace(const Options& opt) {
  AmbientSpace space = AmbientSpace::parse(opt.space);
  Partition lambda = Partition::parse(opt.lambda);
  Partition mu = Partition::parse(opt.mu);
  Partition mu_tilde = Partition::parse(opt.mu_tilde);
  std::optional<Partition> nu;
  if (!opt.nu.empty()) nu = Partition::parse(opt.nu);

  space.require_member(lambda, "lambda");
  space.require_member(mu, "mu");
  space.require_member(mu_tilde, "mu-tilde");
  if (!is_horizontal_strip(mu, mu_tilde)) {
    throw std::invalid_argument("--mu-tilde must add a horizontal strip to --mu");
  }
  Partition lv = space.dual(lambda);
  if (!lv.contains(mu_tilde)) {
    throw std::invalid_argument("--mu-tilde does not fit inside the dual of --lambda");
  }

  int index = 0;
  if (opt.mode == "a") {
    if (space.type() != SpaceType::type_a) {
      throw std::invalid_argument("--mode a needs a type A space");
    }
    SkewShape shape(lv, mu_tilde, DiagramFlavor::young);
    std::vector<Tableau> tableaux;
    if (nu) {
      Partition nv = space.dual(*nu);
      tableaux = enumerate_lr(shape, {nv.parts().begin(), nv.parts().end()});
    } else {
      tableaux = enumerate_lr_all(shape, space.k());
    }
    for (const Tableau& t : tableaux) {
      TransferResult r = pieri_transfer(t, mu, space);
      ++index;
      if (opt.format == "records") {
        std::cout << "{\"instance\":" << index
                  << ",\"tableau\":" << tableau_json(t)
                  << ",\"traces\":" << traces_json(r.traces)
                  << ",\"lambda_tilde\":" << json_int_list(r.new_index.parts())
                  << ",\"result\":" << tableau_json(r.tableau) << "}\n";
        continue;
      }
      std::cout << "instance " << index << " on (" << lv.to_string() << ")/("
                << mu_tilde.to_string() << "):\n"
                << t.to_text();
      for (const SlideTrace& trace : r.traces) print_trace(trace);
      std::cout << "  lands on lambda~ = (" << r.new_index.to_string() << ")\n"
                << r.tableau.to_text() << '\n';
    }
  } else {
    if (space.type() == SpaceType::type_a) {
      throw std::invalid_argument("--mode shifted needs a type B/C/D space");
    }
    int n = space.n();
    int p = mu_tilde.weight() - mu.weight();
    SkewShape base_shape(lv, mu_tilde, DiagramFlavor::shifted);
    std::vector<MarkedTableau> bases;
    if (nu) {
      Partition nv = space.dual(*nu);
      bases = enumerate_lrs(base_shape, {nv.parts().begin(), nv.parts().end()});
    } else {
      bases = enumerate_lrs_all(base_shape, n);
    }
    for (const HoleStrip& strip : enumerate_hole_strips(mu, p, n, HoleSide::nw)) {
      if (strip.extended != mu_tilde) continue;
      for (const MarkedTableau& base : bases) {
        HoledTableau h(HoleSide::nw, lv, mu, strip.holes, base);
        HoleTransferResult r = transfer_nw_to_se(h);
        ++index;
        if (opt.format == "records") {
          std::cout << "{\"instance\":" << index
                    << ",\"holes\":" << holes_json(h.holes())
                    << ",\"base\":" << marked_tableau_json(h.base())
                    << ",\"traces\":" << traces_json(r.traces)
                    << ",\"result_holes\":" << holes_json(r.result.holes())
                    << ",\"result_base\":" << marked_tableau_json(r.result.base())
                    << "}\n";
          continue;
        }
        std::cout << "instance " << index << ":\n" << h.to_text();
        for (const SlideTrace& trace : r.traces) print_trace(trace);
        std::cout << "  result:\n" << r.result.to_text() << '\n';
      }
    }
  }
  if (opt.format != "records") std::cout << index << " instance(s)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schubert structure constants for Grassmannians of types A-D"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* coeff = app.add_subcommand("coeff", "single structure constant");
  coeff->add_option("--space", opt.space)->required();
  coeff->add_option("--lambda", opt.lambda);
  coeff->add_option("--mu", opt.mu);
  coeff->add_option("--nu", opt.nu);
  coeff->add_option("--convention", opt.convention)
      ->check(CLI::IsMember({"paper", "standard"}));
  coeff->add_option("--format", opt.format)->check(CLI::IsMember({"text", "records"}));

  CLI::App* product = app.add_subcommand("product", "full product expansion");
  product->add_option("--space", opt.space)->required();
  product->add_option("--lambda", opt.lambda);
  product->add_option("--mu", opt.mu);
  product->add_option("--format", opt.format)
      ->check(CLI::IsMember({"text", "records"}));

  CLI::App* pieri = app.add_subcommand("pieri", "special class product");
  pieri->add_option("--space", opt.space)->required();
  pieri->add_option("--p", opt.p)->required();
  pieri->add_option("--lambda", opt.lambda);
  pieri->add_option("--format", opt.format)->check(CLI::IsMember({"text", "records"}));

  CLI::App* table = app.add_subcommand("table", "dump all structure constants");
  table->add_option("--space", opt.space)->required();
  table->add_option("--out", opt.out_file);

  CLI::App* verify = app.add_subcommand("verify", "ring identity sweeps");
  verify->add_option("--space", opt.space);
  verify->add_flag("--oracle", opt.with_oracle,
                   "also compare with the symmetric polynomial oracles");
  verify->add_option("--max-size", opt.max_size,
                     "size of the default spaces (A:k=m=N, B:n=N, C:n=N)");

  CLI::App* trace = app.add_subcommand("trace", "slide-by-slide bijection traces");
  trace->add_option("--space", opt.space)->required();
  trace->add_option("--mode", opt.mode)
      ->required()
      ->check(CLI::IsMember({"a", "shifted"}));
  trace->add_option("--lambda", opt.lambda)->required();
  trace->add_option("--mu", opt.mu)->required();
  trace->add_option("--mu-tilde", opt.mu_tilde)->required();
  trace->add_option("--nu", opt.nu);
  trace->add_option("--format", opt.format)->check(CLI::IsMember({"text", "records"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (coeff->parsed()) return run_coeff(opt);
    if (product->parsed()) return run_product(opt, false);
    if (pieri->parsed()) return run_product(opt, true);
    if (table->parsed()) return run_table(opt);
    if (verify->parsed()) return run_verify(opt);
    if (trace->parsed()) return run_trace(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
