#include "ul/building.hpp"
#include "ul/errors.hpp"
#include "ul/localring.hpp"
#include "ul/strata.hpp"
#include "ul/suite.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

namespace {

constexpr int kUsage = 1;
constexpr int kBound = 2;
constexpr int kFailed = 3;

struct RunConfig {
  int p = 3;
  int m = 1;
  int N = ul::kDefaultPrecision;
  int radius = 2;
  int center_type = 1;
  int l = 3;
  int degree_bound = 8;
  std::string output;
  std::string format;
  std::string form = "antidiag";
  std::string check = "all";
  std::string witness_file = "membership_witness.json";
  std::uint64_t seed = 0;
  std::uint64_t max_enum = 0;
  std::vector<std::string> skip;
};

void emit(const RunConfig &c, const std::string &body) {
  if (c.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.output);
  if (!f)
    throw ul::InvalidArgument("cannot write " + c.output);
  f << body;
}

void check_prime(int p) {
  if (p == 2)
    throw ul::InvalidArgument("p must be odd");
  if (p < 3)
    throw ul::InvalidArgument("p must be an odd prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw ul::InvalidArgument("p must be prime");
}

int cmd_tree(const RunConfig &c) {
  check_prime(c.p);
  if (c.center_type != 1 && c.center_type != 3)
    throw ul::InvalidArgument("center type must be 1 or 3");
  ul::BuildingContext B(c.p, c.N);
  ul::Ball b = ul::ball(B, B.center(c.center_type), c.radius);
  std::string fmt = c.format.empty() ? "text" : c.format;
  std::string census = ul::to_text(b);
  if (fmt == "text") {
    emit(c, census);
    return 0;
  }
  emit(c, fmt == "json" ? ul::to_json(b) : ul::to_dot(b));
  (c.output.empty() ? std::cerr : std::cout) << census;
  return 0;
}

int cmd_strata(const RunConfig &c) {
  check_prime(c.p);
  ul::FormKind kind;
  if (c.form == "antidiag")
    kind = ul::FormKind::AntiDiagonal;
  else if (c.form == "identity")
    kind = ul::FormKind::Identity;
  else
    throw ul::InvalidArgument("form must be antidiag or identity");
  ul::FiniteHermSpace S(c.p, c.l, c.m, kind);
  auto rows = ul::stratum_table(S);
  std::string fmt = c.format.empty() ? "csv" : c.format;
  if (fmt == "json")
    emit(c, ul::strata_json(rows));
  else if (fmt == "csv")
    emit(c, ul::strata_csv(rows));
  else
    throw ul::InvalidArgument("strata supports csv or json");
  if (c.l == 3) {
    std::uint64_t total = 0;
    for (const auto &r : rows)
      total += r.count;
    std::uint64_t f = ul::fermat_count(c.p, c.m);
    if (total != f) {
      std::cerr << "total " << total << " differs from Fermat count " << f
                << "\n";
      return kFailed;
    }
  }
  return 0;
}

int cmd_fermat(const RunConfig &c) {
  check_prime(c.p);
  std::uint64_t n = ul::fermat_count(c.p, c.m);
  if (c.format == "json") {
    nlohmann::ordered_json j{{"p", c.p}, {"m", c.m}, {"count", n}};
    emit(c, j.dump() + "\n");
  } else {
    emit(c, std::to_string(n) + "\n");
  }
  return 0;
}

int cmd_localring(const RunConfig &c) {
  check_prime(c.p);
  auto F = std::make_shared<const ul::FiniteField>(c.p, 2);
  auto reps = ul::local_representatives(F);
  std::vector<ul::LocalringReport> reports;
  bool ok = true;
  auto want = [&](const std::string &name) {
    return c.check == "all" || c.check == name;
  };
  bool known = false;
  if (want("tangent")) {
    known = true;
    auto I = ul::build_RM(F, reps);
    int d = ul::tangent_dim_at_origin(I);
    ok = ok && d == 2;
    reports.push_back({"tangent", c.p, std::to_string(d), std::nullopt,
                       ul::jacobian_rank_at_origin(I)});
  }
  if (want("tangent-aprime")) {
    known = true;
    auto I = ul::build_A_prime(F, reps);
    int d = ul::tangent_dim_at_origin(I);
    ok = ok && d == c.p + 1;
    reports.push_back({"tangent-aprime", c.p, std::to_string(d), std::nullopt,
                       ul::jacobian_rank_at_origin(I)});
  }
  if (want("vandermonde")) {
    known = true;
    int r = ul::check_vandermonde_rank(*F, reps);
    ok = ok && r == c.p + 1;
    reports.push_back({"vandermonde", c.p, std::to_string(r), std::nullopt, r});
  }
  if (want("eta")) {
    known = true;
    bool all = true;
    for (std::size_t i = 0; i < reps.size(); ++i)
      all = all && ul::check_eta_identity(F, reps[i]) &&
            ul::component_substitution_check(F, reps, static_cast<int>(i));
    ok = ok && all;
    reports.push_back({"eta", c.p, all ? "true" : "false", std::nullopt,
                       std::nullopt});
  }
  if (want("membership")) {
    known = true;
    auto cert = ul::certify_lines_product(F, reps, c.degree_bound);
    std::string result = cert.certified() ? "member" : "unknown";
    std::optional<std::string> wfile;
    if (cert.certified()) {
      result += " (" + cert.ideal + ")";
      const auto &r = cert.ideal == "g_k" ? cert.gk : *cert.rm;
      auto I = cert.ideal == "g_k" ? ul::build_gk(F, reps) : ul::build_RM(F, reps);
      std::ofstream f(c.witness_file);
      if (!f)
        throw ul::InvalidArgument("cannot write " + c.witness_file);
      f << ul::witness_json(I, r);
      wfile = c.witness_file;
    }
    if (cert.ideal != "g_k")
      result += "; (g_k) search up to degree " +
                std::to_string(c.degree_bound) + ": unknown";
    ok = ok && cert.certified();
    reports.push_back({"membership", c.p, result, wfile, std::nullopt});
  }
  if (!known)
    throw ul::InvalidArgument("unknown check: " + c.check);
  std::string body;
  if (c.format == "json") {
    for (const auto &r : reports)
      body += r.to_json();
  } else {
    for (const auto &r : reports) {
      if (c.check != "all")
        body += r.result;
      else
        body += r.check + ": " + r.result;
      if (r.witness)
        body += " [witness: " + *r.witness + "]";
      body += "\n";
    }
  }
  emit(c, body);
  return ok ? 0 : kFailed;
}

int cmd_verify(const RunConfig &c) {
  check_prime(c.p);
  ul::SuiteConfig sc;
  sc.p = c.p;
  sc.seed = c.seed;
  sc.skip.insert(c.skip.begin(), c.skip.end());
  sc.degree_bound = c.degree_bound;
  auto results = ul::run_suite(sc);
  emit(c, ul::format_suite(c.p, results));
  return ul::suite_passed(results) ? 0 : kFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Hermitian lattices, the Bruhat-Tits tree and local models at "
               "an inert prime"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_p = [&](CLI::App *s) {
    s->add_option("--p", c.p, "Odd prime")->required();
    s->add_option("--output,-o", c.output, "Output file");
    s->add_option("--max-enum", c.max_enum,
                  "Enumeration bound (overrides UL_MAX_ENUM)");
  };

  auto *tree = app.add_subcommand("tree", "Ball in the Bruhat-Tits tree");
  add_p(tree);
  tree->add_option("--radius", c.radius)->check(CLI::NonNegativeNumber);
  tree->add_option("--center-type", c.center_type)->check(CLI::IsMember({1, 3}));
  tree->add_option("--N", c.N, "p-adic precision")->check(CLI::Range(4, 30));
  tree->add_option("--format", c.format)
      ->check(CLI::IsMember({"json", "dot", "text"}));

  auto *strata = app.add_subcommand("strata", "Depth strata of Y");
  add_p(strata);
  strata->add_option("--l", c.l)->check(CLI::PositiveNumber);
  strata->add_option("--m", c.m)->check(CLI::PositiveNumber);
  strata->add_option("--form", c.form)
      ->check(CLI::IsMember({"antidiag", "identity"}));
  strata->add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));

  auto *fermat = app.add_subcommand("fermat", "Fermat curve point count");
  add_p(fermat);
  fermat->add_option("--m", c.m)->check(CLI::PositiveNumber);
  fermat->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto *local = app.add_subcommand("localring", "Local ring checks");
  add_p(local);
  local->add_option("--check", c.check)
      ->check(CLI::IsMember({"all", "tangent", "tangent-aprime", "vandermonde",
                             "eta", "membership"}));
  local->add_option("--degree-bound", c.degree_bound)->check(CLI::Range(1, 16));
  local->add_option("--witness-file", c.witness_file);
  local->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

  auto *verify = app.add_subcommand("verify", "Run the verification suite");
  add_p(verify);
  verify->add_option("--seed", c.seed);
  verify->add_option("--skip", c.skip, "Check to skip (repeatable)");
  verify->add_option("--degree-bound", c.degree_bound)->check(CLI::Range(1, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c.max_enum > 0)
      ul::set_enumeration_bound(c.max_enum);
    if (*tree)
      return cmd_tree(c);
    if (*strata)
      return cmd_strata(c);
    if (*fermat)
      return cmd_fermat(c);
    if (*local)
      return cmd_localring(c);
    if (*verify)
      return cmd_verify(c);
  } catch (const ul::BoundExceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBound;
  } catch (const ul::InvalidArgument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
