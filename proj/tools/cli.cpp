#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hessideals/hessenberg.hpp"
#include "hessideals/ideals.hpp"
#include "hessideals/parallel.hpp"
#include "hessideals/quotient.hpp"
#include "hessideals/symfun.hpp"

namespace hessideals {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

template <typename T>
std::string join_list(const std::vector<T>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

void print_records_text(const std::vector<VerificationRecord>& recs, std::ostream& out) {
  for (const auto& r : recs) {
    out << (r.pass ? "pass" : "FAIL") << ' ' << r.claim;
    if (!r.subject.empty()) out << ' ' << r.subject;
    if (!r.witness.empty()) out << ": " << r.witness;
    out << '\n';
  }
}

size_t count_failures(const std::vector<VerificationRecord>& recs) {
  size_t fails = 0;
  for (const auto& r : recs)
    if (!r.pass) ++fails;
  return fails;
}

// Registered verification claims, in the order `verify all` runs them.
struct RegisteredClaim {
  std::string name;
  std::string description;
  std::function<std::vector<VerificationRecord>(int n, GroebnerCache&, int workers,
                                                const HessenbergFunction* only, bool spair)>
      run;
};

std::vector<RegisteredClaim> claim_registry() {
  return {
      {"counts", "enumeration count, maximal-chain count, bijection roundtrips",
       [](int n, GroebnerCache&, int, const HessenbergFunction*, bool) {
         return verify_counts(n);
       }},
      {"identities", "decomposition/expansion identities as exact polynomial equalities",
       [](int n, GroebnerCache&, int, const HessenbergFunction*, bool) {
         return verify_identities(n);
       }},
      {"matrices", "change-of-basis matrix inverse and image identities",
       [](int n, GroebnerCache&, int, const HessenbergFunction*, bool) {
         return verify_matrix_identities(n);
       }},
      {"groebner", "basis family is a Groebner basis under lex and grlex",
       [](int n, GroebnerCache&, int workers, const HessenbergFunction* only, bool spair) {
         return verify_groebner_property(n, spair, workers, only);
       }},
      {"gen-containment", "marked generating-set inclusions span the Hasse diagram",
       [](int n, GroebnerCache&, int, const HessenbergFunction*, bool) {
         return verify_generator_containment(n);
       }},
      {"containment", "edge-wise ideal containment for both families",
       [](int n, GroebnerCache& cache, int workers, const HessenbergFunction* only, bool) {
         return verify_containment(n, cache, workers, only);
       }},
      {"incomparable", "two-way non-containment witnesses for incomparable pairs",
       [](int n, GroebnerCache& cache, int workers, const HessenbergFunction* only, bool) {
         return verify_incomparable(n, cache, workers, only);
       }},
      {"equality", "triangular-family ideal equals basis-family ideal",
       [](int n, GroebnerCache& cache, int workers, const HessenbergFunction* only, bool) {
         return verify_equality_sweep(n, cache, workers, only);
       }},
      {"reduced-gens", "antidiagonal subfamily generates the full ideal",
       [](int n, GroebnerCache& cache, int workers, const HessenbergFunction* only, bool) {
         return verify_reduced_generators(n, cache, workers, only);
       }},
      {"minimality", "no antidiagonal generator is redundant",
       [](int n, GroebnerCache&, int workers, const HessenbergFunction* only, bool) {
         return verify_minimality_sweep(n, workers, only);
       }},
      {"quotient", "quotient rank, monomial basis, and graded dimensions agree",
       [](int n, GroebnerCache& cache, int workers, const HessenbergFunction* only, bool) {
         return verify_quotient_data(n, cache, workers, only);
       }},
  };
}

std::string claim_help() {
  std::ostringstream os;
  os << "Claims:\n";
  for (const auto& c : claim_registry()) os << "  " << c.name << " - " << c.description << "\n";
  os << "  all - every claim above, in order\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hessenberg ideal toolkit: enumeration, ideal presentations, Groebner\n"
               "verification sweeps, and combinatorial exports."};
  app.require_subcommand(1);
  app.fallthrough(false);

  // Several subcommands take a Hessenberg function as --h, so help is --help
  // only (no -h short flag) everywhere, for consistency.
  app.set_help_flag("--help", "Print this help message and exit");
  const auto add_subcommand = [&app](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "Print this help message and exit");
    return sub;
  };

  // ---- enumerate ----
  auto* cmd_enumerate = add_subcommand(
      "enumerate", "List all Hessenberg functions for n with degree tuples and Dyck paths");
  int en_n = 0;
  std::string en_format = "text";
  std::string en_output;
  cmd_enumerate->add_option("--n", en_n, "Size of the ground set")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_enumerate->add_option("--format", en_format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_enumerate->add_option("--output", en_output, "Write the payload to this file");

  // ---- hasse ----
  auto* cmd_hasse = add_subcommand(
      "hasse", "Hasse diagram of the pointwise order on Hessenberg functions");
  int ha_n = 0;
  std::string ha_format = "dot";
  std::string ha_output;
  bool ha_mark = false;
  cmd_hasse->add_option("--n", ha_n, "Size of the ground set")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_hasse->add_option("--format", ha_format, "Output format")
      ->check(CLI::IsMember({"text", "dot", "json"}));
  cmd_hasse->add_flag("--mark-containment", ha_mark,
                      "Mark edges whose generating sets literally nest");
  cmd_hasse->add_option("--output", ha_output, "Write the payload to this file");

  // ---- gens ----
  auto* cmd_gens =
      add_subcommand("gens", "Print the generators of an ideal presentation for one h");
  std::string ge_h;
  std::string ge_ideal = "triangular";
  std::string ge_format = "text";
  std::string ge_output;
  bool ge_cells = false;
  cmd_gens->add_option("--h", ge_h, "Hessenberg function, e.g. 3,3,3,4")->required();
  cmd_gens->add_option("--ideal", ge_ideal,
                       "Generating family: triangular|antidiagonal|basis (or c|ad|j)");
  cmd_gens->add_option("--format", ge_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_gens->add_flag("--cells", ge_cells, "Show the full family with (i, r, degree) provenance");
  cmd_gens->add_option("--output", ge_output, "Write the payload to this file");

  // ---- groebner ----
  auto* cmd_groebner =
      add_subcommand("groebner", "Reduced Groebner basis of an ideal presentation");
  std::string gr_h;
  std::string gr_ideal = "triangular";
  std::string gr_order = "lex";
  std::string gr_format = "text";
  std::string gr_output;
  cmd_groebner->add_option("--h", gr_h, "Hessenberg function")->required();
  cmd_groebner->add_option("--ideal", gr_ideal,
                           "Generating family: triangular|antidiagonal|basis (or c|ad|j)");
  cmd_groebner->add_option("--order", gr_order, "Monomial order")
      ->check(CLI::IsMember({"lex", "grlex"}));
  cmd_groebner->add_option("--format", gr_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_groebner->add_option("--output", gr_output, "Write the payload to this file");

  // ---- basis ----
  auto* cmd_basis =
      add_subcommand("basis", "Monomial basis of the quotient by the basis-family ideal");
  std::string ba_h;
  std::string ba_format = "text";
  std::string ba_output;
  cmd_basis->add_option("--h", ba_h, "Hessenberg function")->required();
  cmd_basis->add_option("--format", ba_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_basis->add_option("--output", ba_output, "Write the payload to this file");

  // ---- rank ----
  auto* cmd_rank =
      add_subcommand("rank", "Quotient ranks and graded dimensions (one h or a full sweep)");
  int ra_n = 0;
  std::string ra_h;
  std::string ra_format = "text";
  std::string ra_output;
  cmd_rank->add_option("--n", ra_n, "Sweep all Hessenberg functions of this size")
      ->check(CLI::PositiveNumber);
  cmd_rank->add_option("--h", ra_h, "Restrict to a single Hessenberg function");
  cmd_rank->add_option("--format", ra_format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_rank->add_option("--output", ra_output, "Write the payload to this file");

  // ---- chains ----
  auto* cmd_chains =
      add_subcommand("chains", "Maximal chain count of the Hasse diagram, vs. closed forms");
  int ch_n = 0;
  std::string ch_format = "text";
  std::string ch_output;
  cmd_chains->add_option("--n", ch_n, "Size of the ground set")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_chains->add_option("--format", ch_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_chains->add_option("--output", ch_output, "Write the payload to this file");

  // ---- identities ----
  auto* cmd_identities = add_subcommand(
      "identities", "Check every symmetric-function and matrix identity for one n");
  int id_n = 0;
  std::string id_format = "text";
  std::string id_output;
  cmd_identities->add_option("--n", id_n, "Size of the ground set")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_identities->add_option("--format", id_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_identities->add_option("--output", id_output, "Write the payload to this file");

  // ---- verify ----
  auto* cmd_verify = add_subcommand("verify", "Run a registered verification claim");
  cmd_verify->footer(claim_help());
  std::string ve_claim;
  int ve_n = 0;
  std::string ve_h;
  std::string ve_format = "text";
  std::string ve_output;
  int ve_workers = 0;
  bool ve_spair = false;
  cmd_verify->add_option("claim", ve_claim, "Claim name (see list below, or 'all')")->required();
  cmd_verify->add_option("--n", ve_n, "Size of the ground set")->check(CLI::PositiveNumber);
  cmd_verify->add_option("--h", ve_h, "Restrict per-function claims to this function");
  cmd_verify->add_option("--format", ve_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_verify->add_option("--workers", ve_workers,
                         "Worker threads (default: HESSIDEALS_WORKERS or hardware)");
  cmd_verify->add_flag("--spair-check", ve_spair,
                       "Re-prove Groebner certificates by full S-pair reduction (default for n <= 4)");
  cmd_verify->add_option("--output", ve_output, "Write the payload to this file");

  // CLI11 wants argc/argv; synthesize a program name.
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hessideals");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    // resolve the payload stream (--output)
    const auto payload_stream = [&](const std::string& path,
                                    std::ofstream& file) -> std::ostream& {
      if (path.empty()) return out;
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
      return file;
    };

    if (cmd_enumerate->parsed()) {
      std::ofstream file;
      std::ostream& os = payload_stream(en_output, file);
      if (en_format == "json") {
        os << enumeration_json(en_n) << '\n';
      } else if (en_format == "csv") {
        os << "h,beta,dyck\n";
        for (const auto& h : enumerate_hessenberg(en_n))
          os << csv_quote(h.to_string()) << ',' << csv_quote(to_degree_tuple(h).to_string())
             << ',' << to_dyck_path(h).steps() << '\n';
      } else {
        for (const auto& h : enumerate_hessenberg(en_n))
          os << "h=" << h.to_string() << " beta=" << to_degree_tuple(h).to_string()
             << " dyck=" << to_dyck_path(h).steps() << '\n';
      }
      return kExitOk;
    }

    if (cmd_hasse->parsed()) {
      std::ofstream file;
      std::ostream& os = payload_stream(ha_output, file);
      const HasseDiagram d = hasse_diagram(ha_n);
      std::optional<std::vector<bool>> marked;
      if (ha_mark) marked = generator_containment_edges(ha_n).marked;
      if (ha_format == "dot") {
        os << hasse_to_dot(d, marked ? &*marked : nullptr);
      } else if (ha_format == "json") {
        nlohmann::json j;
        j["n"] = ha_n;
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& v : d.vertices) verts.push_back(v.to_string());
        j["vertices"] = std::move(verts);
        nlohmann::json edges = nlohmann::json::array();
        for (size_t e = 0; e < d.edges.size(); ++e) {
          nlohmann::json o;
          o["from"] = d.vertices[d.edges[e].first].to_string();
          o["to"] = d.vertices[d.edges[e].second].to_string();
          if (marked) o["marked"] = (*marked)[e];
          edges.push_back(std::move(o));
        }
        j["edges"] = std::move(edges);
        os << j.dump(2) << '\n';
      } else {
        for (size_t e = 0; e < d.edges.size(); ++e) {
          os << d.vertices[d.edges[e].first].to_string() << " -> "
             << d.vertices[d.edges[e].second].to_string();
          if (marked && (*marked)[e]) os << " [gen-containment]";
          os << '\n';
        }
      }
      return kExitOk;
    }

    if (cmd_gens->parsed()) {
      std::ofstream file;
      std::ostream& os = payload_stream(ge_output, file);
      const HessenbergFunction h = HessenbergFunction::parse(ge_h);
      const IdealPresentation p = make_presentation(kind_from_name(ge_ideal), h);
      if (ge_format == "json") {
        nlohmann::json j;
        j["h"] = h.to_string();
        j["family"] = kind_name(p.kind);
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : p.generators) gens.push_back(g.to_string());
        j["generators"] = std::move(gens);
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& c : p.cells) {
          nlohmann::json o;
          o["i"] = c.i;
          o["r"] = c.r;
          o["degree"] = c.degree;
          o["poly"] = c.poly.to_string();
          cells.push_back(std::move(o));
        }
        j["cells"] = std::move(cells);
        os << j.dump(2) << '\n';
      } else if (ge_cells) {
        for (const auto& c : p.cells)
          os << "i=" << c.i << " r=" << c.r << " deg=" << c.degree << ": " << c.poly.to_string()
             << '\n';
      } else {
        for (const auto& g : p.generators) os << g.to_string() << '\n';
      }
      return kExitOk;
    }

    if (cmd_groebner->parsed()) {
      std::ofstream file;
      std::ostream& os = payload_stream(gr_output, file);
      const HessenbergFunction h = HessenbergFunction::parse(gr_h);
      GroebnerCache cache;
      const GroebnerBasis& gb =
          cache.get(kind_from_name(gr_ideal), h, order_from_name(gr_order));
      if (gr_format == "json") {
        nlohmann::json j;
        j["h"] = h.to_string();
        j["family"] = kind_name(kind_from_name(gr_ideal));
        j["order"] = order_name(gb.order);
        j["certificate"] = certificate_name(gb.certificate);
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& g : gb.basis) basis.push_back(g.to_string());
        j["basis"] = std::move(basis);
        os << j.dump(2) << '\n';
      } else {
        os << "family=" << kind_name(kind_from_name(gr_ideal)) << " order=" << order_name(gb.order)
           << " certificate=" << certificate_name(gb.certificate) << '\n';
        for (const auto& g : gb.basis) os << g.to_string() << '\n';
      }
      return kExitOk;
    }

    if (cmd_basis->parsed()) {
      std::ofstream file;
      std::ostream& os = payload_stream(ba_output, file);
      const HessenbergFunction h = HessenbergFunction::parse(ba_h);
      const auto basis = monomial_basis(h);
      if (ba_format == "json") {
        nlohmann::json j;
        j["h"] = h.to_string();
        j["beta"] = to_degree_tuple(h).ascending();
        j["rank"] = quotient_rank(h);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& m : basis) arr.push_back(m.to_string());
        j["monomials"] = std::move(arr);
        os << j.dump(2) << '\n';
      } else {
        for (const auto& m : basis) os << m.to_string() << '\n';
      }
      return kExitOk;
    }

    if (cmd_rank->parsed()) {
      std::ofstream file;
      std::ostream& os = payload_stream(ra_output, file);
      if (ra_n == 0 && ra_h.empty())
        throw CLI::ValidationError("rank", "one of --n or --h is required");
      std::vector<HessenbergFunction> hs;
      if (!ra_h.empty()) {
        const HessenbergFunction h = HessenbergFunction::parse(ra_h);
        if (ra_n != 0 && ra_n != h.n())
          throw CLI::ValidationError("rank", "--n disagrees with the size of --h");
        hs.push_back(h);
      } else {
        hs = enumerate_hessenberg(ra_n);
      }
      if (ra_format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& h : hs) {
          nlohmann::json o;
          o["h"] = h.to_string();
          o["beta"] = to_degree_tuple(h).ascending();
          o["rank"] = quotient_rank(h);
          o["graded_dims"] = graded_dimensions(h);
          arr.push_back(std::move(o));
        }
        os << arr.dump(2) << '\n';
      } else if (ra_format == "csv") {
        os << "h,beta,rank,graded_dims\n";
        for (const auto& h : hs)
          os << csv_quote(h.to_string()) << ',' << csv_quote(to_degree_tuple(h).to_string())
             << ',' << quotient_rank(h) << ',' << csv_quote(join_list(graded_dimensions(h)))
             << '\n';
      } else {
        for (const auto& h : hs)
          os << "h=" << h.to_string() << " beta=" << to_degree_tuple(h).to_string()
             << " rank=" << quotient_rank(h) << " dims=" << join_list(graded_dimensions(h))
             << '\n';
      }
      return kExitOk;
    }

    if (cmd_chains->parsed()) {
      std::ofstream file;
      std::ostream& os = payload_stream(ch_output, file);
      const MaximalChainCount c = count_maximal_chains(ch_n);
      if (ch_format == "json") {
        nlohmann::json j;
        j["n"] = ch_n;
        j["dfs"] = c.dfs.get_str();
        j["product_formula"] = c.product_formula.get_str();
        j["product_matches"] = c.product_matches;
        j["flat_exponent_formula"] = to_string(c.flat_exponent_formula);
        j["flat_matches"] = c.flat_matches;
        os << j.dump(2) << '\n';
      } else {
        os << "n=" << ch_n << " chains=" << c.dfs.get_str()
           << " product-formula=" << c.product_formula.get_str()
           << (c.product_matches ? " (agrees)" : " (DISAGREES)")
           << " flat-variant=" << to_string(c.flat_exponent_formula)
           << (c.flat_matches ? " (agrees)" : " (disagrees)") << '\n';
      }
      return kExitOk;
    }

    if (cmd_identities->parsed()) {
      std::ofstream file;
      std::ostream& os = payload_stream(id_output, file);
      std::vector<VerificationRecord> recs = verify_identities(id_n);
      const auto extra = verify_matrix_identities(id_n);
      recs.insert(recs.end(), extra.begin(), extra.end());
      if (id_format == "json")
        os << records_to_json(recs) << '\n';
      else
        print_records_text(recs, os);
      const size_t fails = count_failures(recs);
      if (fails > 0) {
        if (id_format != "json") {
          std::vector<VerificationRecord> bad;
          for (const auto& r : recs)
            if (!r.pass) bad.push_back(r);
          err << records_to_json(bad) << '\n';
        }
        return kExitVerificationFailure;
      }
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      std::ofstream file;
      std::ostream& os = payload_stream(ve_output, file);
      std::optional<HessenbergFunction> only;
      if (!ve_h.empty()) {
        only = HessenbergFunction::parse(ve_h);
        if (ve_n != 0 && ve_n != only->n())
          throw CLI::ValidationError("verify", "--n disagrees with the size of --h");
        ve_n = only->n();
      }
      if (ve_n == 0) throw CLI::ValidationError("verify", "one of --n or --h is required");

      const auto registry = claim_registry();
      std::vector<const RegisteredClaim*> selected;
      if (ve_claim == "all") {
        for (const auto& c : registry) selected.push_back(&c);
      } else {
        for (const auto& c : registry)
          if (c.name == ve_claim) selected.push_back(&c);
        if (selected.empty()) {
          err << "error: unknown claim '" << ve_claim << "'\n" << claim_help();
          return kExitUsage;
        }
      }

      const bool spair = ve_spair || ve_n <= 4;
      GroebnerCache cache;
      std::vector<VerificationRecord> recs;
      for (const RegisteredClaim* c : selected) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<VerificationRecord> part =
            c->run(ve_n, cache, ve_workers, only ? &*only : nullptr, spair);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();
        err << "# " << c->name << ": " << part.size() << " records, " << count_failures(part)
            << " failures, " << elapsed << " ms\n";
        recs.insert(recs.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
      }

      if (ve_format == "json")
        os << records_to_json(recs) << '\n';
      else
        print_records_text(recs, os);
      if (count_failures(recs) > 0) {
        if (ve_format != "json") {
          std::vector<VerificationRecord> bad;
          for (const auto& r : recs)
            if (!r.pass) bad.push_back(r);
          err << records_to_json(bad) << '\n';
        }
        return kExitVerificationFailure;
      }
      return kExitOk;
    }

    err << "error: no subcommand selected\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hessideals
