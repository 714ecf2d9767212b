#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "knotcomm/catalog.hpp"
#include "knotcomm/covers.hpp"
#include "knotcomm/errors.hpp"
#include "knotcomm/knot.hpp"
#include "knotcomm/obstructions.hpp"
#include "knotcomm/poly.hpp"
#include "knotcomm/roots.hpp"

using namespace knotcomm;

namespace {

/* Exit codes, following the sysexits convention where nothing more specific
   applies.  The per-command codes are part of the interface:

     invariants / signature / covers / growth
       0 ok, 1 not admissible (growth), 2 unknown knot, 3 missing data
     compare
       0 consistent, 1 certified obstruction, 4 inconclusive,
       5 cover hypothesis violated
     all commands
       64 usage, 65 unreadable catalog, 70 internal failure */
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitSoftware = 70;

std::string g15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string enc(const CertifiedReal& x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g +/- %.2g", x.midpoint(), x.radius());
  return buf;
}

std::string rat_str(const Rat& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

struct GlobalArgs {
  std::optional<std::string> catalog_path;
  std::string out_path;
  double radius = 1e-12;
};

CertifyOptions certify_options(const GlobalArgs& g) {
  CertifyOptions opts;
  opts.target_radius = g.radius;
  return opts;
}

void print_report(std::ostream& os, const ObstructionReport& rep,
                  const std::string& header) {
  os << header << "\n";
  for (const auto& e : rep.entries) {
    os << "  " << e.name << ": " << verdict_name(e.verdict) << " (" << e.detail
       << ")\n";
  }
}

int run_invariants(std::ostream& os, const GlobalArgs& g, const std::string& name) {
  Catalog cat = Catalog::resolve(g.catalog_path);
  KnotRecord k = cat.record(name, certify_options(g));

  /* Evaluate everything first so a missing profile aborts before output. */
  const SignatureProfile& prof = k.profile();
  CertifiedReal tau = k.tau();
  CertifiedReal rho = k.rho();
  int sigma = k.signature();

  os << "knot: " << k.name() << "\n";
  if (k.mirror()) os << "mirror: yes\n";
  os << "alexander: " << k.alexander() << "\n";
  os << "coefficients: [";
  const auto& c = k.alexander().coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ", ";
    os << c[i].get_str();
  }
  os << "]\n";
  os << "degree: " << k.alexander().degree() << "\n";
  os << "monic: " << (abs(k.alexander().lc()) == 1 ? "yes" : "no") << "\n";
  os << "determinant: " << Int(abs(k.alexander().eval(Int(-1)))).get_str() << "\n";
  os << "signature: " << sigma << "\n";
  os << "admissible: " << (k.admissible() ? "yes" : "no") << "\n";
  if (k.genus()) os << "genus: " << *k.genus() << "\n";
  if (k.fibered()) os << "fibered: " << (*k.fibered() ? "yes" : "no") << "\n";
  os << "tau: " << enc(tau) << "\n";
  os << "rho: " << enc(rho) << "\n";
  os << "jumps: " << prof.jumps.size() << "\n";
  for (const auto& j : prof.jumps) {
    os << "  turn " << enc(j.turn) << " multiplicity " << j.multiplicity
       << " value " << j.value_after;
    if (j.exact_turn) os << " (exact " << rat_str(*j.exact_turn) << ")";
    os << "\n";
  }
  if (!k.comment().empty()) os << "comment: " << k.comment() << "\n";
  return 0;
}

int run_signature(std::ostream& os, const GlobalArgs& g, const std::string& name,
                  unsigned long grid) {
  Catalog cat = Catalog::resolve(g.catalog_path);
  KnotRecord k = cat.record(name, certify_options(g));
  const SignatureProfile& prof = k.profile();

  struct Row {
    double turn;
    std::string line;
  };
  std::vector<Row> rows;

  for (unsigned long j = 0; j <= grid; ++j) {
    Rat r(j, 2 * grid);
    r.canonicalize();
    bool at_jump = false;
    for (const auto& jump : prof.jumps) {
      if (jump.exact_turn && *jump.exact_turn == r) at_jump = true;
    }
    if (at_jump) continue;  // the jump row below carries this point
    double t = static_cast<double>(j) / static_cast<double>(2 * grid);
    rows.push_back(Row{t, g15(t) + "," + std::to_string(k.signature_at(r)) + ","});
  }
  for (const auto& jump : prof.jumps) {
    double t = jump.turn.midpoint();
    std::string note = "jump";
    if (jump.exact_turn) note += " at " + rat_str(*jump.exact_turn);
    rows.push_back(Row{t, g15(t) + "," + std::to_string(jump.value_after) + "," + note});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.turn < b.turn; });

  os << "turn,sigma,note\n";
  for (const auto& r : rows) os << r.line << "\n";
  return 0;
}

int run_covers(std::ostream& os, const GlobalArgs& g, const std::string& name,
               unsigned long nmax) {
  Catalog cat = Catalog::resolve(g.catalog_path);
  KnotRecord k = cat.record(name, certify_options(g));
  os << "n,b1,torsion\n";
  for (unsigned long n = 1; n <= nmax; ++n) {
    os << n << "," << b1_of_cover(k, n) << "," << torsion_order(k, n).get_str()
       << "\n";
  }
  return 0;
}

int run_growth(std::ostream& os, const GlobalArgs& g, const std::string& name,
               unsigned long nmax) {
  Catalog cat = Catalog::resolve(g.catalog_path);
  KnotRecord k = cat.record(name, certify_options(g));
  auto seq = growth_sequence(k, nmax);
  os << "k,value\n";
  for (const auto& term : seq) os << term.n << "," << g15(term.value) << "\n";
  return 0;
}

int run_compare(std::ostream& os, const GlobalArgs& g, const std::string& name1,
                const std::string& name2, unsigned long nmax,
                unsigned long orientation_nmax, unsigned long confirm,
                const std::string& epsilon, double pass_width) {
  Catalog cat = Catalog::resolve(g.catalog_path);
  KnotRecord a = cat.record(name1, certify_options(g));
  KnotRecord b = cat.record(name2, certify_options(g));

  CompareOptions copts;
  copts.pass_width = pass_width;
  if (epsilon == "+1") copts.orientation = Orientation::preserving;
  else if (epsilon == "-1") copts.orientation = Orientation::reversing;
  else copts.orientation = Orientation::both;
  bool want_plus = copts.orientation != Orientation::reversing;
  bool want_minus = copts.orientation != Orientation::preserving;

  os << "comparing " << a.name() << " vs " << b.name() << "\n";
  ObstructionReport st = static_compare(a, b);
  print_report(os, st, "static:");
  if (st.overall == Verdict::fail) {
    os << "verdict: obstructed (static invariants differ)\n";
    return 1;
  }
  if (!a.admissible() || !b.admissible()) {
    os << "verdict: not applicable (inadmissible knot, cover tests need "
          "Betti number one covers)\n";
    return 5;
  }

  auto ratios = ratio_scan(a, b, nmax);
  os << "ratio scan (entries <= " << nmax << "): " << ratios.size()
     << " candidate" << (ratios.size() == 1 ? "" : "s") << "\n";
  for (const auto& r : ratios) os << "  " << r.p << ":" << r.q << "\n";
  if (ratios.empty()) {
    os << "verdict: obstructed (no rational tau ratio with entries <= " << nmax
       << ")\n";
    return 1;
  }

  bool any_candidate = false;
  std::optional<std::pair<unsigned long, unsigned long>> best;  // covers
  int best_eps = 0;
  for (const auto& r : ratios) {
    OrientationScan scan =
        orientation_test(a, b, r.p, r.q, orientation_nmax, confirm, copts);
    os << "orientation scan for ratio " << r.p << ":" << r.q << " (k <= "
       << orientation_nmax << ", confirm <= " << confirm << "):\n";
    if (want_plus) {
      os << "  eps=+1: " << scan.plus_candidates.size() << " candidates";
      if (!scan.plus_confirmed.empty()) {
        os << ", confirmed k =";
        for (unsigned long k : scan.plus_confirmed) os << " " << k;
      }
      os << "\n";
      any_candidate = any_candidate || !scan.plus_candidates.empty();
      if (!best && !scan.plus_confirmed.empty()) {
        best = {scan.plus_confirmed[0] * r.p, scan.plus_confirmed[0] * r.q};
        best_eps = +1;
      }
    }
    if (want_minus) {
      os << "  eps=-1: " << scan.minus_candidates.size() << " candidates";
      if (!scan.minus_confirmed.empty()) {
        os << ", confirmed k =";
        for (unsigned long k : scan.minus_confirmed) os << " " << k;
      }
      os << "\n";
      any_candidate = any_candidate || !scan.minus_candidates.empty();
      if (!best && !scan.minus_confirmed.empty()) {
        best = {scan.minus_confirmed[0] * r.p, scan.minus_confirmed[0] * r.q};
        best_eps = -1;
      }
    }
  }

  if (best) {
    CompareOptions single = copts;
    single.orientation = best_eps > 0 ? Orientation::preserving : Orientation::reversing;
    ObstructionReport pair = cover_pair_test(a, best->first, b, best->second, single);
    std::ostringstream hd;
    hd << "cover pair (" << best->first << ", " << best->second << "):";
    print_report(os, pair, hd.str());
    ObstructionReport ms = multiset_power_test(a, best->first, b, best->second);
    print_report(os, ms, "multiset:");
    os << "verdict: consistent (covers (" << best->first << ", " << best->second
       << ") with eps=" << (best_eps > 0 ? "+1" : "-1") << ")\n";
    return 0;
  }
  if (!any_candidate) {
    os << "verdict: obstructed (every cover ladder excluded for k <= "
       << orientation_nmax << ")\n";
    return 1;
  }
  os << "verdict: inconclusive\n";
  return 4;
}

int run_catalog_list(std::ostream& os, const GlobalArgs& g) {
  Catalog cat = Catalog::resolve(g.catalog_path);
  for (const auto& k : cat.knots()) {
    os << k.name;
    if (!k.comment.empty()) os << ": " << k.comment;
    os << "\n";
  }
  return 0;
}

int run_catalog_export(std::ostream& os, const GlobalArgs& g) {
  Catalog cat = Catalog::resolve(g.catalog_path);
  os << cat.to_json();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified knot invariants and commensurability obstructions"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalArgs g;
  app.add_option("--catalog", g.catalog_path,
                 "Catalog file (default: KNOTCOMM_CATALOG or builtin)");
  app.add_option("-o,--output", g.out_path, "Write output to this file");
  app.add_option("--radius", g.radius, "Target certification radius")
      ->default_val(1e-12);

  std::string knot1, knot2;
  unsigned long covers_nmax = 24, growth_nmax = 100, compare_nmax = 24;
  unsigned long orientation_nmax = 480, confirm = 8, grid = 64;
  std::string epsilon = "both";
  double pass_width = 1e-4;

  CLI::App* inv = app.add_subcommand("invariants", "Certified invariants of one knot");
  inv->add_option("knot", knot1, "Knot name")->required();

  CLI::App* cmp = app.add_subcommand("compare", "Commensurability obstructions for a pair");
  cmp->add_option("knot1", knot1, "First knot")->required();
  cmp->add_option("knot2", knot2, "Second knot")->required();
  cmp->add_option("--nmax", compare_nmax, "Largest cover ratio entry scanned")
      ->default_val(24);
  cmp->add_option("--orientation-nmax", orientation_nmax,
                  "Largest ladder index in the orientation scan")
      ->default_val(480);
  cmp->add_option("--confirm", confirm, "Confirm ladder candidates up to this k")
      ->default_val(8);
  cmp->add_option("--epsilon", epsilon, "Orientation: +1, -1, or both")
      ->default_val("both")
      ->check(CLI::IsMember({"+1", "-1", "both"}));
  cmp->add_option("--pass-width", pass_width,
                  "Widest enclosure still reported as agreement")
      ->default_val(1e-4);

  CLI::App* sig = app.add_subcommand("signature", "Signature function as CSV");
  sig->add_option("knot", knot1, "Knot name")->required();
  sig->add_option("--grid", grid, "Number of grid steps across [0, 1/2]")
      ->default_val(64)
      ->check(CLI::PositiveNumber);

  CLI::App* cov = app.add_subcommand("covers", "Cyclic cover homology table as CSV");
  cov->add_option("knot", knot1, "Knot name")->required();
  cov->add_option("--nmax", covers_nmax, "Largest cover index")->default_val(24);

  CLI::App* gro = app.add_subcommand("growth", "Torsion growth sequence as CSV");
  gro->add_option("knot", knot1, "Knot name")->required();
  gro->add_option("--nmax", growth_nmax, "Largest cover index")->default_val(100);

  CLI::App* cat = app.add_subcommand("catalog", "Catalog inspection");
  cat->require_subcommand(1);
  CLI::App* cat_list = cat->add_subcommand("list", "List catalog entries");
  CLI::App* cat_export = cat->add_subcommand("export", "Export the catalog as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ofstream out_file;
  if (!g.out_path.empty()) {
    out_file.open(g.out_path, std::ios::binary);
    if (!out_file) {
      std::cerr << "error: cannot open " << g.out_path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& os = g.out_path.empty() ? std::cout : out_file;

  try {
    if (inv->parsed()) return run_invariants(os, g, knot1);
    if (cmp->parsed()) {
      return run_compare(os, g, knot1, knot2, compare_nmax, orientation_nmax,
                         confirm, epsilon, pass_width);
    }
    if (sig->parsed()) return run_signature(os, g, knot1, grid);
    if (cov->parsed()) return run_covers(os, g, knot1, covers_nmax);
    if (gro->parsed()) return run_growth(os, g, knot1, growth_nmax);
    if (cat->parsed()) {
      if (cat_list->parsed()) return run_catalog_list(os, g);
      if (cat_export->parsed()) return run_catalog_export(os, g);
    }
  } catch (const UnknownKnot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientData& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const B1Violation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const NotAdmissible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSoftware;
  }
  return kExitUsage;
}
