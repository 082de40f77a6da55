#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fibtype/abelian.hpp"
#include "fibtype/classify.hpp"
#include "fibtype/coset.hpp"
#include "fibtype/embedding.hpp"
#include "fibtype/presentation.hpp"
#include "fibtype/serialize.hpp"
#include "fibtype/spine.hpp"
#include "fibtype/whitehead.hpp"

namespace {

constexpr const char* kVersion = "fibtype 1.0.0";

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kMismatch = 1;  // cross-check failure or invalid certificate
constexpr int kUsage = 2;
constexpr int kOverflow = 3;  // coset or embedding budget exhausted

struct TripleArgs {
  long long n = 0, m = 0, k = 0;
};

void add_triple(CLI::App* cmd, TripleArgs& t) {
  cmd->add_option("n", t.n, "number of generators (>= 1)")->required();
  cmd->add_option("m", t.m, "first index of the defining word x_0 x_m x_k^-1")
      ->required();
  cmd->add_option("k", t.k, "second index of the defining word")->required();
}

fibtype::FibTypeParams make_params(const TripleArgs& t) {
  return fibtype::FibTypeParams::make(t.n, t.m, t.k);
}

void print(const fibtype::json& j) { std::cout << j.dump(2) << "\n"; }

std::string iso_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

int cmd_classify(const TripleArgs& t, bool check, long long max_cosets) {
  fibtype::Verdict v = fibtype::classify(make_params(t));
  fibtype::json out = fibtype::to_json(v);
  if (check) {
    fibtype::EnumerationLimits limits;
    limits.max_cosets = max_cosets;
    fibtype::CrossCheckReport rep = fibtype::cross_check(v, limits);
    out["cross_check"] = fibtype::to_json(rep);
    print(out);
    return rep.passed ? kOk : kMismatch;
  }
  print(out);
  return kOk;
}

int cmd_abelianize(const TripleArgs& t) {
  fibtype::FibTypeParams p = make_params(t);
  fibtype::AbelianInvariants inv =
      fibtype::abelianization(fibtype::make_fib_presentation(p));
  fibtype::json out{{"params", fibtype::to_json(p)},
                    {"abelianization", fibtype::to_json(inv)}};
  print(out);
  return kOk;
}

int cmd_enumerate(const TripleArgs& t, const std::vector<std::string>& subgroup,
                  long long max_cosets, const std::string& strategy_name) {
  fibtype::FibTypeParams p = make_params(t);
  fibtype::CyclicPresentation pres = fibtype::make_fib_presentation(p);
  std::vector<fibtype::Word> gens;
  for (const std::string& s : subgroup)
    gens.push_back(fibtype::parse_word(s, p.n));
  fibtype::EnumerationLimits limits;
  limits.max_cosets = max_cosets;
  fibtype::Strategy strat = strategy_name == "felsch" ? fibtype::Strategy::Felsch
                                                      : fibtype::Strategy::HLT;
  fibtype::CosetTable table = fibtype::enumerate(pres, gens, limits, strat);
  bool complete = table.status == fibtype::EnumerationStatus::Complete;
  fibtype::json out{{"params", fibtype::to_json(p)},
                    {"status", complete ? "complete" : "overflowed"},
                    {"peak_cosets", table.peak_cosets}};
  if (complete) out["index"] = table.index();
  print(out);
  return complete ? kOk : kOverflow;
}

int cmd_whitehead(const TripleArgs& t, bool dot) {
  fibtype::FibTypeParams p = make_params(t);
  fibtype::LabeledMultigraph g =
      fibtype::whitehead_graph(fibtype::make_fib_presentation(p));
  if (dot) {
    std::cout << fibtype::to_dot(g, "whitehead");
  } else {
    print(fibtype::json{{"params", fibtype::to_json(p)},
                        {"graph", fibtype::to_json(g)}});
  }
  return kOk;
}

int cmd_embeddings(const TripleArgs& t, unsigned long long budget, bool census_only) {
  fibtype::FibTypeParams p = make_params(t);
  fibtype::LabeledMultigraph g =
      fibtype::whitehead_graph(fibtype::make_fib_presentation(p));
  fibtype::EmbeddingCensus census =
      fibtype::enumerate_spherical_embeddings(g, true, budget);
  fibtype::json cj = fibtype::to_json(census);
  if (census_only) cj.erase("embeddings");
  print(fibtype::json{{"params", fibtype::to_json(p)}, {"census", cj}});
  return census.budget_exhausted ? kOverflow : kOk;
}

fibtype::FacePairingComplex build_polyhedron(const std::string& family, int m) {
  if (family == "h1") return fibtype::build_h_n1_polyhedron(m);
  if (family == "altfib") return fibtype::build_alt_fibonacci_polyhedron(m);
  if (family == "altsier") return fibtype::build_alt_sieradski_polyhedron(m);
  throw CLI::ValidationError("--family must be h1, altfib, or altsier");
}

int cmd_polyhedron(const std::string& family, int m, bool verify) {
  fibtype::FacePairingComplex c = build_polyhedron(family, m);
  fibtype::json out{{"family", family},
                    {"index", m},
                    {"complex", fibtype::to_json(c)}};
  if (verify) {
    fibtype::SpineCheck chk = fibtype::verify_face_pairing(c);
    out["certificate"] = fibtype::to_json(chk);
    print(out);
    return chk.valid ? kOk : kMismatch;
  }
  print(out);
  return kOk;
}

int cmd_export_whitehead(const TripleArgs& t, bool dot, std::ostream& os) {
  fibtype::FibTypeParams p = make_params(t);
  fibtype::LabeledMultigraph g =
      fibtype::whitehead_graph(fibtype::make_fib_presentation(p));
  if (dot)
    os << fibtype::to_dot(g, "whitehead");
  else
    os << fibtype::to_json(g).dump(2) << "\n";
  return kOk;
}

int cmd_export_embedding(const TripleArgs& t, unsigned long long budget,
                         std::ostream& os) {
  fibtype::FibTypeParams p = make_params(t);
  fibtype::LabeledMultigraph g =
      fibtype::whitehead_graph(fibtype::make_fib_presentation(p));
  fibtype::EmbeddingCensus census =
      fibtype::enumerate_spherical_embeddings(g, true, budget);
  os << fibtype::to_json(census).dump(2) << "\n";
  return census.budget_exhausted ? kOverflow : kOk;
}

int cmd_export_polyhedron(const std::string& family, int m, bool dot,
                          std::ostream& os) {
  if (dot) throw CLI::ValidationError("polyhedron export supports --json only");
  os << fibtype::to_json(build_polyhedron(family, m)).dump(2) << "\n";
  return kOk;
}

int cmd_batch(long long lo, long long hi, const std::string& out_path, bool force,
              const std::string& filter) {
  if (lo < 1 || hi < lo)
    throw CLI::ValidationError("--n expects a range A..B with 1 <= A <= B");

  // Records already present in the output file are skipped unless --force.
  std::set<std::tuple<long long, long long, long long>> done;
  if (!force) {
    std::ifstream in(out_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      fibtype::json rec = fibtype::json::parse(line, nullptr, false);
      if (rec.is_discarded() || !rec.contains("params")) continue;
      const auto& p = rec["params"];
      done.emplace(p["n"].get<long long>(), p["m"].get<long long>(),
                   p["k"].get<long long>());
    }
  }

  std::ofstream out(out_path,
                    force ? std::ios::trunc : std::ios::app);
  if (!out) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return kUsage;
  }

  long long written = 0, skipped = 0;
  for (long long n = lo; n <= hi; ++n)
    for (long long m = 0; m < n; ++m)
      for (long long k = 0; k < n; ++k) {
        fibtype::FibTypeParams p = fibtype::FibTypeParams::make(n, m, k);
        if (filter == "h-form" &&
            (fibtype::reduce_gcd(p).d != 1 || !fibtype::to_h_form(p)))
          continue;
        if (done.count({n, m, k})) {
          ++skipped;
          continue;
        }
        fibtype::Verdict v = fibtype::classify(p);
        fibtype::AbelianInvariants inv =
            fibtype::abelianization(fibtype::make_fib_presentation(p));
        fibtype::json digests{
            {"abelian_order",
             inv.is_finite() ? inv.order().get_str() : "infinite"},
            {"known_order",
             v.known_order > 0 ? v.known_order.get_str() : "none"}};
        fibtype::json rec{{"params", fibtype::to_json(p)},
                          {"verdict", fibtype::to_json(v)},
                          {"digests", digests},
                          {"generated_at", iso_timestamp()},
                          {"version", kVersion}};
        out << rec.dump() << "\n";
        ++written;
      }
  std::cerr << "wrote " << written << " records, skipped " << skipped
            << " existing\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification toolkit for the cyclically presented groups "
               "G_n(x_0 x_m x_k^-1)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // classify
  TripleArgs ct;
  bool check = false;
  long long max_cosets = 1'000'000;
  CLI::App* classify =
      app.add_subcommand("classify", "classify a triple and print the verdict");
  add_triple(classify, ct);
  classify->add_flag("--check", check,
                     "re-derive the verdict by enumeration/certificates; "
                     "exit 1 on mismatch");
  classify->add_option("--max-cosets", max_cosets, "coset budget for --check")
      ->envname("FIBTYPE_MAX_COSETS");

  // batch
  std::string range, out_path, filter;
  bool force = false;
  CLI::App* batch =
      app.add_subcommand("batch", "sweep a range of n and append JSON-lines records");
  batch->add_option("--n", range, "inclusive range of n, e.g. 1..12")->required();
  batch->add_option("--out", out_path, "output .jsonl path")->required();
  batch->add_flag("--force", force, "recompute and rewrite existing records");
  batch->add_option("--filter", filter,
                    "record only matching triples (supported: h-form)")
      ->check(CLI::IsMember({"h-form"}));

  // abelianize
  TripleArgs at;
  CLI::App* abelianize =
      app.add_subcommand("abelianize", "print the abelianization invariants");
  add_triple(abelianize, at);

  // enumerate
  TripleArgs et;
  std::vector<std::string> subgroup;
  long long enum_max = 1'000'000;
  std::string strategy = "hlt";
  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "run coset enumeration over a subgroup (default: trivial)");
  add_triple(enumerate_cmd, et);
  enumerate_cmd->add_option("--subgroup", subgroup,
                            "subgroup generator words, e.g. \"x0 x3 X2\"");
  enumerate_cmd->add_option("--max-cosets", enum_max, "coset budget")
      ->envname("FIBTYPE_MAX_COSETS");
  enumerate_cmd->add_option("--strategy", strategy, "hlt or felsch")
      ->check(CLI::IsMember({"hlt", "felsch"}));

  // whitehead
  TripleArgs wt;
  bool wh_dot = false;
  CLI::App* whitehead =
      app.add_subcommand("whitehead", "print the Whitehead graph of the triple");
  add_triple(whitehead, wt);
  whitehead->add_flag("--dot", wh_dot, "emit Graphviz DOT instead of JSON");

  // embeddings
  TripleArgs mt;
  unsigned long long budget = 1ull << 24;
  bool census_only = false;
  CLI::App* embeddings = app.add_subcommand(
      "embeddings", "enumerate spherical embeddings of the Whitehead graph");
  add_triple(embeddings, mt);
  embeddings->add_option("--budget", budget, "rotation-system budget")
      ->envname("FIBTYPE_EMBED_BUDGET");
  embeddings->add_flag("--census", census_only,
                       "print only counts and face-size profiles");

  // polyhedron
  std::string family;
  int poly_m = 0;
  bool verify = false;
  CLI::App* polyhedron = app.add_subcommand(
      "polyhedron", "build a face-pairing ball complex for a known family");
  polyhedron->add_option("--family", family, "h1, altfib, or altsier")
      ->required()
      ->check(CLI::IsMember({"h1", "altfib", "altsier"}));
  polyhedron->add_option("--m,--n", poly_m, "family index")->required();
  polyhedron->add_flag("--verify", verify,
                       "check the identification certificate; exit 1 if invalid");

  // export
  CLI::App* exp = app.add_subcommand("export", "write an object as DOT or JSON");
  exp->require_subcommand(1);
  TripleArgs xwt, xet;
  bool xw_dot = false, xw_json = false;
  std::string xw_out;
  CLI::App* exp_wh = exp->add_subcommand("whitehead", "export a Whitehead graph");
  add_triple(exp_wh, xwt);
  exp_wh->add_flag("--dot", xw_dot, "Graphviz DOT");
  exp_wh->add_flag("--json", xw_json, "JSON (default)");
  exp_wh->add_option("--out", xw_out, "write to file instead of stdout");

  unsigned long long x_budget = 1ull << 24;
  std::string xe_out;
  CLI::App* exp_emb =
      exp->add_subcommand("embedding", "export the spherical embedding census");
  add_triple(exp_emb, xet);
  exp_emb->add_flag("--json", xw_json, "JSON (the only supported format)");
  exp_emb->add_option("--budget", x_budget, "rotation-system budget")
      ->envname("FIBTYPE_EMBED_BUDGET");
  exp_emb->add_option("--out", xe_out, "write to file instead of stdout");

  std::string xp_family, xp_out;
  int xp_m = 0;
  bool xp_dot = false, xp_json = false;
  CLI::App* exp_poly =
      exp->add_subcommand("polyhedron", "export a face-pairing complex");
  exp_poly->add_option("--family", xp_family, "h1, altfib, or altsier")
      ->required()
      ->check(CLI::IsMember({"h1", "altfib", "altsier"}));
  exp_poly->add_option("--m,--n", xp_m, "family index")->required();
  exp_poly->add_flag("--dot", xp_dot, "unsupported; JSON only");
  exp_poly->add_flag("--json", xp_json, "JSON (default)");
  exp_poly->add_option("--out", xp_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);

    auto with_sink = [](const std::string& path, auto fn) {
      if (path.empty()) return fn(std::cout);
      std::ofstream os(path);
      if (!os) {
        std::cerr << "cannot open " << path << " for writing\n";
        return kUsage;
      }
      return fn(os);
    };

    if (*classify) return cmd_classify(ct, check, max_cosets);
    if (*batch) {
      auto sep = range.find("..");
      if (sep == std::string::npos)
        throw CLI::ValidationError("--n expects a range A..B");
      long long lo = std::stoll(range.substr(0, sep));
      long long hi = std::stoll(range.substr(sep + 2));
      return cmd_batch(lo, hi, out_path, force, filter);
    }
    if (*abelianize) return cmd_abelianize(at);
    if (*enumerate_cmd) return cmd_enumerate(et, subgroup, enum_max, strategy);
    if (*whitehead) return cmd_whitehead(wt, wh_dot);
    if (*embeddings) return cmd_embeddings(mt, budget, census_only);
    if (*polyhedron) return cmd_polyhedron(family, poly_m, verify);
    if (*exp_wh)
      return with_sink(xw_out,
                       [&](std::ostream& os) { return cmd_export_whitehead(xwt, xw_dot, os); });
    if (*exp_emb)
      return with_sink(xe_out,
                       [&](std::ostream& os) { return cmd_export_embedding(xet, x_budget, os); });
    if (*exp_poly)
      return with_sink(xp_out, [&](std::ostream& os) {
        return cmd_export_polyhedron(xp_family, xp_m, xp_dot, os);
      });
    return kUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
}
