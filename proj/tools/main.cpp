// apolar: exact apolarity calculus for binary and ternary forms.
//
// Subcommands: hf, cat, bounds, binary-rank, monomial-rank, family, table.
// Every command accepts --json for machine-readable output. Exit codes:
// 0 success, 1 domain error, 2 parse/usage error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "apolar/apolarity.hpp"
#include "apolar/binary.hpp"
#include "apolar/bounds.hpp"
#include "apolar/family.hpp"
#include "apolar/parse.hpp"

namespace {

using json = nlohmann::json;
using namespace apolar;

std::string read_form_text(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

json rational_json(const Rational& r) {
  return json{{"num", r.numerator().get_str()}, {"den", r.denominator().get_str()}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_hf(const std::string& form_text, bool as_json) {
  const Form f = parse_form(read_form_text(form_text), 3);
  const ApolarProfile p = apolar_profile(f);
  if (as_json) {
    emit(json{{"form", print_form(f)},
              {"degree", p.degree},
              {"hf", p.hf},
              {"al", p.apolar_length}});
    return 0;
  }
  for (std::size_t i = 0; i < p.hf.size(); ++i)
    std::cout << (i ? " " : "") << p.hf[i];
  std::cout << " (al=" << p.apolar_length << ")\n";
  return 0;
}

int run_cat(const std::string& form_text, int order, bool show_matrix, bool as_json) {
  const Form f = parse_form(read_form_text(form_text), 3);
  const QMatrix m = catalecticant(f, order);
  const int rank = matrix_rank(m);
  if (as_json) {
    json j{{"form", print_form(f)},
           {"order", order},
           {"rows", m.rows()},
           {"cols", m.cols()},
           {"rank", rank}};
    if (show_matrix) {
      json rows = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t jcol = 0; jcol < m.cols(); ++jcol)
          row.push_back(rational_json(m.at(i, jcol)));
        rows.push_back(row);
      }
      j["matrix"] = rows;
    }
    emit(j);
    return 0;
  }
  std::cout << "rank " << rank << "\n";
  if (show_matrix) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t jcol = 0; jcol < m.cols(); ++jcol)
        std::cout << (jcol ? " " : "") << m.at(i, jcol).to_string();
      std::cout << "\n";
    }
  }
  return 0;
}

int run_bounds(const std::string& form_text, bool as_json) {
  const Form f = parse_form(read_form_text(form_text), 3);
  const BoundReport r = bound_report(f);
  if (as_json) {
    json dirs = json::array();
    for (const DirectionBounds& d : r.directions)
      dirs.push_back(json{{"direction", direction_name(f.var_count(), d.direction)},
                          {"prop3", d.prop3},
                          {"prop4", d.prop4}});
    emit(json{{"form", r.form_text},
              {"catalecticant_bound", r.catalecticant_bound},
              {"directions", dirs},
              {"notes", r.notes}});
    return 0;
  }
  std::cout << "form: " << r.form_text << "\n";
  std::cout << "catalecticant_bound: " << r.catalecticant_bound << "\n";
  for (const DirectionBounds& d : r.directions) {
    const std::string name = direction_name(f.var_count(), d.direction);
    std::cout << "prop3(" << name << "): " << d.prop3 << "  prop4(" << name
              << "): " << d.prop4 << "\n";
  }
  for (const std::string& n : r.notes) std::cout << "note: " << n << "\n";
  return 0;
}

int run_binary_rank(const std::string& form_text, bool as_json) {
  const Form f = parse_form(read_form_text(form_text), 2);
  const BinaryRankCertificate cert = binary_rank(f);
  if (as_json) {
    emit(json{{"form", print_form(f)},
              {"rank", cert.rank},
              {"min_generator_degree", cert.min_generator_degree},
              {"witness_generator", print_form(cert.witness_generator)},
              {"squarefree_witness_found", cert.squarefree_witness_found}});
    return 0;
  }
  std::cout << "rank " << cert.rank << " (min generator degree "
            << cert.min_generator_degree << ", witness "
            << print_form(cert.witness_generator) << ", squarefree witness "
            << (cert.squarefree_witness_found ? "found" : "not found") << ")\n";
  return 0;
}

int run_monomial_rank(long a, long b, long c, bool as_json) {
  const long r = monomial_rank(a, b, c);
  if (as_json) {
    emit(json{{"a", a}, {"b", b}, {"c", c}, {"rank", r}});
    return 0;
  }
  std::cout << r << "\n";
  return 0;
}

int run_family(long k, bool verify, long samples, std::uint64_t seed, bool as_json) {
  if (!verify) {
    const FamilyInstance inst = family_form(k);
    if (as_json) {
      emit(json{{"k", inst.k},
                {"d", inst.d},
                {"F", print_form(inst.F)},
                {"G", print_form(inst.G)},
                {"al_G", inst.al_G},
                {"tail_cap", inst.tail_cap},
                {"alpha_floor", inst.alpha_floor},
                {"claimed_bound", inst.claimed_bound}});
      return 0;
    }
    std::cout << "k: " << inst.k << "\n"
              << "d: " << inst.d << "\n"
              << "F: " << print_form(inst.F) << "\n"
              << "G: " << print_form(inst.G) << "\n"
              << "al(G): " << inst.al_G << "\n"
              << "tail_cap: " << inst.tail_cap << "\n"
              << "alpha_floor: " << inst.alpha_floor << "\n"
              << "claimed_bound: " << inst.claimed_bound << "\n";
    return 0;
  }

  const FamilyReport r = verify_family(k, samples, seed);
  std::string first_failure;
  for (const FamilyCheck& c : r.checks)
    if (!c.pass && first_failure.empty()) first_failure = c.name;

  if (as_json) {
    json checks = json::array();
    for (const FamilyCheck& c : r.checks)
      checks.push_back(json{{"name", c.name},
                            {"expected", c.expected},
                            {"computed", c.computed},
                            {"pass", c.pass}});
    emit(json{{"k", r.k},
              {"checks", checks},
              {"samples_run", r.samples_run},
              {"min_observed_al", r.min_observed_al},
              {"certified_modulo_sampling", r.certified_modulo_sampling},
              {"resulting_bound", r.resulting_bound}});
  } else {
    std::cout << "family verification, k=" << r.k << "\n";
    for (const FamilyCheck& c : r.checks)
      std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << " (expected "
                << c.expected << ", got " << c.computed << ")\n";
    std::cout << "samples_run: " << r.samples_run << "\n"
              << "min_observed_al: " << r.min_observed_al << "\n"
              << "resulting_bound: " << r.resulting_bound
              << (r.certified_modulo_sampling ? " (certified modulo sampling)" : "")
              << "\n";
  }
  if (r.resulting_bound == 0) {
    std::cerr << "family verification failed: " << first_failure << "\n";
    return 1;
  }
  return 0;
}

int run_table(long dmin, long dmax, bool as_json) {
  const auto rows = bound_table(dmin, dmax);
  if (as_json) {
    json jrows = json::array();
    for (const BoundTableRow& row : rows)
      jrows.push_back(json{{"d", row.d},
                           {"floor_bound", row.floor_bound},
                           {"max_monomial", row.max_monomial},
                           {"witness", row.witness},
                           {"exceeds_monomials", row.exceeds_monomials}});
    emit(json{{"d_min", dmin}, {"d_max", dmax}, {"rows", jrows}});
    return 0;
  }
  std::cout << "d\tfloor_bound\tmax_monomial\twitness\n";
  for (const BoundTableRow& row : rows) {
    std::cout << row.d << "\t" << row.floor_bound << "\t" << row.max_monomial << "\t"
              << (row.witness.empty() ? "-" : row.witness) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact apolarity calculus for binary and ternary forms"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string form_text;
  int order = 0;
  bool show_matrix = false;
  long mr_a = 0, mr_b = 0, mr_c = 0;
  long k = 0, samples = 200, dmin = 0, dmax = 0;
  std::uint64_t seed = 7;
  bool verify = false;

  CLI::App* hf = app.add_subcommand("hf", "Hilbert function and apolar length");
  hf->add_option("--form", form_text, "polynomial expression ('-' reads stdin)")->required();
  hf->fallthrough();

  CLI::App* cat = app.add_subcommand("cat", "catalecticant rank (and matrix)");
  cat->add_option("--form", form_text)->required();
  cat->add_option("--order", order, "derivative order n")->required();
  cat->add_flag("--show-matrix", show_matrix, "print the matrix");
  cat->fallthrough();

  CLI::App* bounds = app.add_subcommand("bounds", "rank lower bounds for a form");
  bounds->add_option("--form", form_text)->required();
  bounds->fallthrough();

  CLI::App* brank = app.add_subcommand("binary-rank", "exact rank of a binary form");
  brank->add_option("--form", form_text)->required();
  brank->fallthrough();

  CLI::App* mrank = app.add_subcommand("monomial-rank", "rank of the monomial x^a y^b z^c");
  mrank->add_option("a", mr_a)->required();
  mrank->add_option("b", mr_b)->required();
  mrank->add_option("c", mr_c)->required();
  mrank->fallthrough();

  CLI::App* family = app.add_subcommand("family", "the high-rank even-degree family");
  family->add_option("--k", k, "family parameter")->required();
  family->add_flag("--verify", verify, "run the mechanical verifier");
  family->add_option("--samples", samples, "number of sampled tails (default 200)");
  family->add_option("--seed", seed, "sampling seed (default 7)");
  family->fallthrough();

  CLI::App* table = app.add_subcommand("table", "per-degree lower bound table");
  table->add_option("--dmin", dmin)->required();
  table->add_option("--dmax", dmax)->required();
  table->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (hf->parsed()) return run_hf(form_text, as_json);
    if (cat->parsed()) return run_cat(form_text, order, show_matrix, as_json);
    if (bounds->parsed()) return run_bounds(form_text, as_json);
    if (brank->parsed()) return run_binary_rank(form_text, as_json);
    if (mrank->parsed()) return run_monomial_rank(mr_a, mr_b, mr_c, as_json);
    if (family->parsed()) return run_family(k, verify, samples, seed, as_json);
    if (table->parsed()) return run_table(dmin, dmax, as_json);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
