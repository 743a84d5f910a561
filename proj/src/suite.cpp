#include "ul/suite.hpp"

#include "ul/building.hpp"
#include "ul/errors.hpp"
#include "ul/localring.hpp"
#include "ul/strata.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace ul {

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Check {
  std::string name;
  std::string description;
  std::function<Outcome(const SuiteConfig &, std::mt19937_64 &)> run;
};

std::string join(const std::vector<std::string> &parts) {
  std::string s;
  for (const auto &x : parts)
    s += (s.empty() ? "" : ", ") + x;
  return s;
}

Witt random_witt(const PrimeContext &ctx, std::mt19937_64 &rng) {
  Coeffs c{};
  std::uniform_int_distribution<std::int64_t> d(0, ctx.modulus_pN() - 1);
  for (int i = 0; i < ctx.degree(); ++i)
    c[i] = d(rng);
  return Witt(ctx, c);
}

WMatrix random_unimodular(const PrimeContext &ctx, int n, std::mt19937_64 &rng) {
  WMatrix L = identity_matrix(ctx, n), U = identity_matrix(ctx, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      L(i, j) = random_witt(ctx, rng);
      U(j, i) = random_witt(ctx, rng);
    }
  return L * U;
}

Lattice random_lattice(const SpacePtr &space, std::mt19937_64 &rng) {
  const PrimeContext &ctx = space->context();
  const int n = space->dim();
  std::uniform_int_distribution<int> de(0, 2), dd(0, 1);
  std::vector<Witt> diag;
  for (int i = 0; i < n; ++i)
    diag.push_back(Witt(ctx, 1).mul_p_pow(de(rng)));
  WMatrix B = random_unimodular(ctx, n, rng) * diagonal_matrix(diag) *
              random_unimodular(ctx, n, rng);
  return Lattice::from_generators(space, B, dd(rng));
}

Outcome check_neighbors(const SuiteConfig &c, std::mt19937_64 &) {
  BuildingContext B(c.p);
  const std::size_t up = neighbors_of_type1(B, B.type1_center()).size();
  const std::size_t down = neighbors_of_type3(B, B.type3_center()).size();
  const std::size_t p = c.p;
  std::ostringstream os;
  os << "type1 -> " << up << ", type3 -> " << down;
  return {up == p + 1 && down == p * p * p + 1, os.str()};
}

Outcome check_tree(const SuiteConfig &c, std::mt19937_64 &) {
  BuildingContext B(c.p);
  const int radius = c.tree_radius >= 0 ? c.tree_radius : (c.p == 3 ? 4 : 2);
  bool ok = true;
  std::vector<std::string> parts;
  for (int type : {1, 3}) {
    Ball b = ball(B, B.center(type), radius);
    ok = ok && b.edges.size() + 1 == b.vertices.size();
    ok = ok && b.vertices.size() == predicted_ball_size(c.p, type, radius);
    auto adj = b.adjacency();
    for (auto [u, v] : b.edges)
      ok = ok && b.vertices[u].type != b.vertices[v].type;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) {
      if (b.depth[i] >= radius)
        continue;
      std::size_t want = b.vertices[i].type == 1
                             ? static_cast<std::size_t>(c.p + 1)
                             : static_cast<std::size_t>(c.p * c.p * c.p + 1);
      ok = ok && adj[i].size() == want;
    }
    std::ostringstream os;
    os << "center type " << type << ": |V|=" << b.vertices.size()
       << " |E|=" << b.edges.size();
    parts.push_back(os.str());
  }
  return {ok, "radius " + std::to_string(radius) + ", " + join(parts)};
}

Outcome check_ball(const SuiteConfig &c, std::mt19937_64 &) {
  BuildingContext B(c.p);
  const std::uint64_t p = c.p;
  const std::uint64_t want = 1 + (p + 1) + (p + 1) * p * p * p;
  std::size_t a = ball(B, B.type1_center(), 2).vertices.size();
  std::size_t b = ball(B, B.type3_center(), 2).vertices.size();
  std::ostringstream os;
  os << "radius 2: " << a << " and " << b << " vertices";
  return {a == want && b == want, os.str()};
}

Outcome check_fermat(const SuiteConfig &c, std::mt19937_64 &) {
  const std::uint64_t p = c.p;
  bool ok = fermat_count(c.p, 1) == p * p * p + 1;
  std::vector<std::string> parts;
  for (int m : {1, 2}) {
    FiniteField F(c.p, 2 * m);
    std::uint64_t f = fermat_count(c.p, m);
    for (const auto &j : j_representatives(F))
      ok = ok && chart_curve_count(F, j.lambda) == f;
    parts.push_back("m=" + std::to_string(m) + ": " + std::to_string(f));
  }
  return {ok, join(parts)};
}

Outcome check_partition(const SuiteConfig &c, std::mt19937_64 &) {
  const std::uint64_t p = c.p;
  bool ok = true;
  std::vector<std::string> parts;
  for (int m : {1, 2}) {
    FiniteHermSpace S(c.p, 3, m);
    auto rows = stratum_table(S);
    std::uint64_t total = 0;
    for (const auto &r : rows)
      total += r.count;
    ok = ok && total == enumerate_Y(S).size();
    ok = ok && total == fermat_count(c.p, m);
    ok = ok && rows.at(0).count == p * p * p + 1;
    std::string s = "m=" + std::to_string(m) + ":";
    for (const auto &r : rows)
      s += " " + std::to_string(r.count);
    parts.push_back(s);
  }
  return {ok, join(parts)};
}

Outcome check_tau_stabilize(const SuiteConfig &c, std::mt19937_64 &) {
  auto ctx = make_context(c.p, 2);
  StandardModel model(ctx);
  const FiniteField &F = ctx->residue();
  int n = 0, d1 = 0;
  bool ok = true;
  for (const auto &j : j_representatives(F))
    for (auto [a, b] : chart_points(F, j.lambda)) {
      DieudonneLattice M = build_M_ab(model, j, a, b);
      TauStabilization ts = tau_stabilize(M.M0, 0, 2);
      ok = ok && (ts.d == 0 || ts.d == 1) && ts.type == 2 * ts.d + 1 &&
           ts.chain.satisfied() && ((ts.d == 0) == is_superspecial(M));
      d1 += ts.d == 1;
      ++n;
    }
  return {ok, std::to_string(n) + " lattices, " + std::to_string(d1) +
                  " with d = 1"};
}

Outcome check_dieudonne(const SuiteConfig &c, std::mt19937_64 &) {
  auto ctx = make_context(c.p, 2);
  StandardModel model(ctx);
  const FiniteField &F = ctx->residue();
  int n = 0, bad = 0;
  for (const auto &j : j_representatives(F))
    for (auto [a, b] : chart_points(F, j.lambda)) {
      DieudonneLattice M = build_M_ab(model, j, a, b);
      if (!verify_dieudonne(model, M, 0).ok() ||
          !check_V_basis(model, j, a, b, M))
        ++bad;
      ++n;
    }
  return {bad == 0 && n > 0,
          std::to_string(n) + " lattices, " + std::to_string(bad) + " failing"};
}

Outcome check_duality(const SuiteConfig &c, std::mt19937_64 &rng) {
  bool ok = true;
  int n = 0;
  for (int m : {1, 2}) {
    auto ctx = make_context(c.p, m);
    StandardModel model(ctx);
    for (const SpacePtr &S : {model.space0(), model.space1()})
      for (int it = 0; it < c.samples; ++it) {
        Lattice L = random_lattice(S, rng);
        Lattice D = dual(L);
        ok = ok && dual(D) == tau(L) && tau(D) == dual(tau(L));
        ++n;
      }
  }
  return {ok, std::to_string(n) + " lattices"};
}

Outcome check_classify(const SuiteConfig &c, std::mt19937_64 &rng) {
  auto ctx = make_context(c.p, 1);
  Witt t = skew_unit(*ctx);
  auto diag = [&](std::vector<int> e) {
    std::vector<Witt> d;
    for (int x : e)
      d.push_back(t.mul_p_pow(x));
    return diagonal_matrix(d);
  };
  WMatrix I3 = diag({0, 0, 0}), J3 = diag({1, 0, 0}), D = diag({0, 1, 1});
  bool ok = classify_form(I3) == FormClass::SelfDual &&
            classify_form(J3) == FormClass::NonSelfDual &&
            classify_form(D) == FormClass::SelfDual;
  for (int it = 0; it < c.samples; ++it) {
    WMatrix P = random_unimodular(*ctx, 3, rng);
    for (const WMatrix &G : {I3, J3})
      ok = ok && classify_form(transpose(P) * G * frobenius(P, 1)) ==
                     classify_form(G);
  }
  return {ok, "3 forms, " + std::to_string(c.samples) + " congruences each"};
}

Outcome check_tangent(const SuiteConfig &c, std::mt19937_64 &) {
  auto F = std::make_shared<const FiniteField>(c.p, 2);
  auto reps = local_representatives(F);
  int rm = tangent_dim_at_origin(build_RM(F, reps));
  int ap = tangent_dim_at_origin(build_A_prime(F, reps));
  int vr = check_vandermonde_rank(*F, reps);
  std::ostringstream os;
  os << "R_M " << rm << ", A' " << ap << ", Vandermonde rank " << vr;
  return {rm == 2 && ap == c.p + 1 && vr == c.p + 1, os.str()};
}

Outcome check_eta(const SuiteConfig &c, std::mt19937_64 &) {
  auto F = std::make_shared<const FiniteField>(c.p, 2);
  auto reps = local_representatives(F);
  bool ok = true;
  for (std::size_t i = 0; i < reps.size(); ++i)
    ok = ok && check_eta_identity(F, reps[i]) &&
         component_substitution_check(F, reps, static_cast<int>(i));
  return {ok, std::to_string(reps.size()) + " components"};
}

Outcome check_membership(const SuiteConfig &c, std::mt19937_64 &) {
  auto F = std::make_shared<const FiniteField>(c.p, 2);
  auto reps = local_representatives(F);
  LinesCertificate cert = certify_lines_product(F, reps, c.degree_bound);
  std::string d = "(g_k) up to degree " + std::to_string(c.degree_bound) +
                  ": " + (cert.gk.member ? "member" : "unknown");
  if (cert.rm)
    d += "; R_M: " + std::string(cert.rm->member ? "member" : "unknown");
  return {cert.certified(), d};
}

Outcome check_parity(const SuiteConfig &c, std::mt19937_64 &rng) {
  auto ctx = make_context(c.p, 2);
  StandardModel model(ctx);
  const FiniteField &F = ctx->residue();
  auto reps = j_representatives(F);
  std::vector<std::pair<int, std::pair<FiniteField::Elem, FiniteField::Elem>>> pts;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (auto ab : chart_points(F, reps[i].lambda))
      pts.push_back({static_cast<int>(i), ab});
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  std::uniform_int_distribution<int> shift(-1, 1), odd(0, 1);
  bool ok = true;
  for (int it = 0; it < c.samples; ++it) {
    auto [i, ab] = pts[pick(rng)];
    DieudonneLattice M = build_M_ab(model, reps[i], ab.first, ab.second);
    int k = shift(rng);
    DieudonneLattice S{M.M0.scaled(k), M.M1.scaled(k), 2 * k};
    int io = 2 * k + (odd(rng) ? 1 : -1);
    ok = ok && verify_dieudonne(model, S, 2 * k).ok() &&
         !verify_dieudonne(model, S, io).passed(kVolumeCheck);
  }
  return {ok, std::to_string(c.samples) + " lattices"};
}

const std::vector<Check> &checks() {
  static const std::vector<Check> all = {
      {"building.neighbors", "neighbor counts of type 1 and type 3 vertices",
       check_neighbors},
      {"building.tree", "balls are trees, bipartite by type, full degrees",
       check_tree},
      {"building.ball", "radius-2 ball sizes from both center types",
       check_ball},
      {"strata.fermat", "Fermat and chart curve point counts", check_fermat},
      {"strata.partition", "depth strata partition Y for l = 3",
       check_partition},
      {"isocrystal.tau_stabilize", "tau-stabilization of every chart lattice",
       check_tau_stabilize},
      {"isocrystal.dieudonne", "every chart lattice is a Dieudonne lattice",
       check_dieudonne},
      {"hermlattice.duality", "dual^2 = tau and tau dual = dual tau",
       check_duality},
      {"hermlattice.classify", "form classes and congruence invariance",
       check_classify},
      {"localring.tangent", "tangent dimensions and Vandermonde rank",
       check_tangent},
      {"localring.eta", "eta identity and component substitution", check_eta},
      {"localring.membership", "product of lines lies in the local ideal",
       check_membership},
      {"isocrystal.parity", "odd i fails the volume check", check_parity},
  };
  return all;
}

} // namespace

std::vector<std::string> suite_check_names() {
  std::vector<std::string> v;
  for (const auto &c : checks())
    v.push_back(c.name);
  return v;
}

std::vector<SuiteResult> run_suite(const SuiteConfig &config) {
  for (const auto &s : config.skip) {
    bool known = false;
    for (const auto &c : checks())
      known = known || c.name == s;
    if (!known)
      throw InvalidArgument("unknown check: " + s);
  }
  std::vector<SuiteResult> out;
  for (std::size_t idx = 0; idx < checks().size(); ++idx) {
    const Check &c = checks()[idx];
    SuiteResult r{c.name, c.description, CheckStatus::Fail, ""};
    if (config.skip.count(c.name)) {
      r.status = CheckStatus::Skip;
      r.detail = "skipped";
      out.push_back(r);
      continue;
    }
    std::mt19937_64 rng(config.seed * 1000003ULL + idx);
    try {
      Outcome o = c.run(config, rng);
      r.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
      r.detail = o.detail;
    } catch (const BoundExceeded &) {
      throw;
    } catch (const std::exception &e) {
      r.detail = std::string("error: ") + e.what();
    }
    out.push_back(r);
  }
  return out;
}

std::string format_suite(int p, const std::vector<SuiteResult> &results) {
  std::ostringstream os;
  int pass = 0, fail = 0, skip = 0;
  for (const auto &r : results) {
    const char *tag = r.status == CheckStatus::Pass   ? "PASS"
                      : r.status == CheckStatus::Skip ? "SKIP"
                                                      : "FAIL";
    os << tag << " " << r.name << ": " << r.description << " [" << r.detail
       << "]\n";
    (r.status == CheckStatus::Pass   ? pass
     : r.status == CheckStatus::Skip ? skip
                                     : fail)++;
  }
  os << "p=" << p << " passed=" << pass << " failed=" << fail
     << " skipped=" << skip << "\n";
  return os.str();
}

bool suite_passed(const std::vector<SuiteResult> &results) {
  for (const auto &r : results)
    if (r.status == CheckStatus::Fail)
      return false;
  return true;
}

} // namespace ul
