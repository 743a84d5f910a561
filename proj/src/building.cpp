#include "ul/building.hpp"

#include "ul/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace ul {

using Elem = FiniteField::Elem;

BuildingContext::BuildingContext(int p, int N)
    : ctx_(make_context(p, 1, N)), model_(ctx_),
      j_(j_representatives(ctx_->residue())) {}

Lattice BuildingContext::type1_center() const {
  return Lattice::standard(space());
}

Lattice BuildingContext::type3_center() const {
  return neighbor_lattice_J(model_, j_.at(0).lambda, j_.at(0).mu);
}

Lattice BuildingContext::center(int type) const {
  if (type == 1)
    return type1_center();
  if (type == 3)
    return type3_center();
  throw InvalidArgument("center type must be 1 or 3");
}

std::vector<Lattice> neighbors_of_type1(const BuildingContext &B,
                                        const Lattice &M) {
  const PrimeContext &c = B.context();
  FracMatrix nb = gram_schmidt_normalize(M, 1, 2);
  // Reorder to gram t * diag(p, 1, p).
  WMatrix E = nb.num;
  E.swap_cols(0, 1);
  std::vector<Lattice> out;
  for (const JRep &j : B.j_reps()) {
    WMatrix g = hconcat(mul_p_pow(E, 1), zero_matrix(c, 3, 1));
    Witt l = teichmuller(c, j.lambda), mu = teichmuller(c, j.mu);
    for (int i = 0; i < 3; ++i)
      g(i, 3) = l * E(i, 0) + mu * E(i, 2);
    out.push_back(Lattice::from_generators(B.space(), g, nb.denom + 1));
  }
  return out;
}

std::vector<Lattice> neighbors_of_type3(const BuildingContext &B,
                                        const Lattice &L) {
  const PrimeContext &c = B.context();
  const FiniteField &F = c.residue();
  const int p = c.p();
  FracMatrix nb = gram_schmidt_normalize(L, 3, 0);
  const WMatrix &E = nb.num;
  std::vector<Elem> els = F.elements();
  std::vector<Lattice> out;
  // Normalized projective points [x0 : x1 : x2], first nonzero coordinate 1.
  for (int lead = 0; lead < 3; ++lead) {
    std::vector<Elem> x(3, 0);
    x[lead] = F.one();
    int free = 2 - lead;
    std::size_t total = 1;
    for (int i = 0; i < free; ++i)
      total *= els.size();
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t cc = code;
      for (int i = lead + 1; i < 3; ++i) {
        x[i] = els[cc % els.size()];
        cc /= els.size();
      }
      Elem s = 0;
      for (int i = 0; i < 3; ++i)
        s = F.add(s, F.pow(x[i], p + 1));
      if (s != 0)
        continue;
      // U = {y : sum y_i x_i^p = 0}, basis e_j - (x_j / x_lead)^p e_lead.
      WMatrix g = zero_matrix(c, 3, 2);
      int col = 0;
      for (int jj = 0; jj < 3; ++jj) {
        if (jj == lead)
          continue;
        Witt coef = -teichmuller(c, F.pow(x[jj], p));
        for (int i = 0; i < 3; ++i)
          g(i, col) = E(i, jj) + coef * E(i, lead);
        ++col;
      }
      WMatrix gens = hconcat(g, mul_p_pow(E, 1));
      out.push_back(Lattice::from_generators(B.space(), gens, nb.denom));
    }
  }
  return out;
}

TreeVertex make_vertex(const Lattice &L) {
  return {L.key(), vertex_type(L, 0), L};
}

int Ball::find(const LatticeKey &k) const {
  auto it = lookup.find(k);
  return it == lookup.end() ? -1 : it->second;
}

std::vector<std::vector<int>> Ball::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::uint64_t predicted_ball_size(int p, int center_type, int radius) {
  const std::uint64_t d1 = static_cast<std::uint64_t>(p) + 1;
  const std::uint64_t d3 = static_cast<std::uint64_t>(p) * p * p + 1;
  std::uint64_t total = 1, layer = 1;
  int type = center_type;
  for (int r = 1; r <= radius; ++r) {
    std::uint64_t deg = type == 1 ? d1 : d3;
    layer *= r == 1 ? deg : deg - 1;
    total += layer;
    type = type == 1 ? 3 : 1;
  }
  return total;
}

Ball ball(const BuildingContext &B, const Lattice &center, int radius) {
  if (radius < 0)
    throw InvalidArgument("radius must be nonnegative");
  TreeVertex c = make_vertex(center);
  if (c.type != 1 && c.type != 3)
    throw NotAVertex("center must have type 1 or 3");
  check_enumeration(predicted_ball_size(B.p(), c.type, radius), "ball");
  Ball b;
  b.p = B.p();
  b.radius = radius;
  b.vertices.push_back(c);
  b.depth.push_back(0);
  b.lookup[c.key] = 0;
  std::map<std::pair<int, int>, bool> seen_edge;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (b.depth[u] >= radius)
      continue;
    const TreeVertex tv = b.vertices[u];
    std::vector<Lattice> nbrs = tv.type == 1
                                    ? neighbors_of_type1(B, tv.lattice)
                                    : neighbors_of_type3(B, tv.lattice);
    for (const Lattice &L : nbrs) {
      LatticeKey k = L.key();
      int v = b.find(k);
      if (v < 0) {
        v = static_cast<int>(b.vertices.size());
        int type = vertex_type(L, 0);
        if (type == tv.type)
          throw NotAVertex("adjacent vertices of equal type");
        b.vertices.push_back({k, type, L});
        b.depth.push_back(b.depth[u] + 1);
        b.lookup[k] = v;
        queue.push_back(v);
      }
      auto e = std::minmax(u, v);
      if (!seen_edge[{e.first, e.second}]) {
        seen_edge[{e.first, e.second}] = true;
        b.edges.push_back({e.first, e.second});
      }
    }
  }
  return b;
}

int distance(const Ball &b, const LatticeKey &a, const LatticeKey &c) {
  int s = b.find(a), t = b.find(c);
  if (s < 0 || t < 0)
    throw NotInBall("vertex not in ball");
  auto adj = b.adjacency();
  std::vector<int> dist(b.vertices.size(), -1);
  std::deque<int> q{s};
  dist[s] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == t)
      return dist[u];
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  throw NotInBall("vertices not connected inside the ball");
}

std::string to_string(Incidence i) {
  switch (i) {
  case Incidence::Equal:
    return "equal";
  case Incidence::OnePoint:
    return "one_point";
  case Incidence::Disjoint:
    return "disjoint";
  }
  return "?";
}

Incidence intersection_multiplicity(const Lattice &a, const Lattice &b) {
  if (a == b)
    return Incidence::Equal;
  Lattice I = lattice_intersect(a, b);
  if (is_vertex(I, 0) && vertex_type(I, 0) == 1)
    return Incidence::OnePoint;
  return Incidence::Disjoint;
}

std::string vertex_label(const TreeVertex &v) {
  std::ostringstream os;
  os << v.type << ":" << std::hex;
  os.width(16);
  os.fill('0');
  os << v.key.hash();
  return os.str();
}

namespace {

std::vector<int> sorted_order(const Ball &b) {
  std::vector<int> ord(b.vertices.size());
  for (std::size_t i = 0; i < ord.size(); ++i)
    ord[i] = static_cast<int>(i);
  std::vector<std::string> hex(b.vertices.size());
  for (std::size_t i = 0; i < hex.size(); ++i)
    hex[i] = b.vertices[i].key.hex();
  std::sort(ord.begin(), ord.end(),
            [&](int x, int y) { return hex[x] < hex[y]; });
  return ord;
}

std::vector<std::pair<std::string, std::string>>
sorted_edges(const Ball &b, const std::vector<std::string> &names) {
  std::vector<std::pair<std::string, std::string>> es;
  for (auto [x, y] : b.edges) {
    auto a = names[x], c = names[y];
    if (c < a)
      std::swap(a, c);
    es.push_back({a, c});
  }
  std::sort(es.begin(), es.end());
  return es;
}

} // namespace

std::string to_dot(const Ball &b) {
  std::vector<std::string> names(b.vertices.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    names[i] = vertex_label(b.vertices[i]);
  std::ostringstream os;
  os << "graph building {\n";
  for (int i : sorted_order(b))
    os << "  \"" << names[i] << "\" [shape="
       << (b.vertices[i].type == 1 ? "box" : "circle") << "];\n";
  for (auto &[x, y] : sorted_edges(b, names))
    os << "  \"" << x << "\" -- \"" << y << "\";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const Ball &b) {
  std::vector<std::string> names(b.vertices.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    names[i] = b.vertices[i].key.hex();
  nlohmann::ordered_json j;
  j["p"] = b.p;
  j["radius"] = b.radius;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int i : sorted_order(b))
    j["vertices"].push_back({{"key", names[i]}, {"type", b.vertices[i].type}});
  j["edges"] = nlohmann::ordered_json::array();
  for (auto &[x, y] : sorted_edges(b, names))
    j["edges"].push_back({x, y});
  return j.dump(1) + "\n";
}

std::string to_text(const Ball &b) {
  int t1 = 0, t3 = 0;
  for (const auto &v : b.vertices)
    (v.type == 1 ? t1 : t3)++;
  std::ostringstream os;
  os << "p=" << b.p << " radius=" << b.radius
     << " vertices=" << b.vertices.size() << " type1=" << t1
     << " type3=" << t3 << " edges=" << b.edges.size() << "\n";
  return os.str();
}

} // namespace ul
