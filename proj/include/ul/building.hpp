#pragma once

#include "ul/isocrystal.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ul {

// Vertex lattices of type 1 and 3 at i = 0 for n = 3 over W(F_{p^2}), in the
// space with gram t * diag(p, 1, p).
class BuildingContext {
public:
  explicit BuildingContext(int p, int N = kDefaultPrecision);

  int p() const { return ctx_->p(); }
  const PrimeContext &context() const { return *ctx_; }
  const StandardModel &model() const { return model_; }
  const SpacePtr &space() const { return model_.space0(); }
  const std::vector<JRep> &j_reps() const { return j_; }
  // Standard superspecial lattice (type 1).
  Lattice type1_center() const;
  // Lambda for the first representative of J (type 3).
  Lattice type3_center() const;
  Lattice center(int type) const;

private:
  std::shared_ptr<const PrimeContext> ctx_;
  StandardModel model_;
  std::vector<JRep> j_;
};

struct TreeVertex {
  LatticeKey key;
  int type = 0;
  Lattice lattice;
};

// p + 1 type-3 lattices containing a type-1 lattice M with index 1.
std::vector<Lattice> neighbors_of_type1(const BuildingContext &B,
                                        const Lattice &M);
// p^3 + 1 type-1 lattices inside a type-3 lattice, one per isotropic line of
// Lambda / p Lambda.
std::vector<Lattice> neighbors_of_type3(const BuildingContext &B,
                                        const Lattice &L);
TreeVertex make_vertex(const Lattice &L);

struct Ball {
  int p = 0;
  int radius = 0;
  std::vector<TreeVertex> vertices;
  std::vector<int> depth;
  std::vector<std::pair<int, int>> edges;
  std::unordered_map<LatticeKey, int, LatticeKeyHash> lookup;

  int find(const LatticeKey &k) const;
  std::vector<std::vector<int>> adjacency() const;
};

// Expected size of a ball of the given radius around a vertex of the given
// type, from the neighbor counts.
std::uint64_t predicted_ball_size(int p, int center_type, int radius);

// Breadth-first ball deduplicated by canonical key. Throws BoundExceeded.
Ball ball(const BuildingContext &B, const Lattice &center, int radius);
// Path length inside the ball; throws NotInBall.
int distance(const Ball &b, const LatticeKey &a, const LatticeKey &c);

enum class Incidence { Equal, OnePoint, Disjoint };
std::string to_string(Incidence i);
// For two type-3 lattices: equal, meeting in a type-1 vertex, or disjoint.
Incidence intersection_multiplicity(const Lattice &a, const Lattice &b);

std::string vertex_label(const TreeVertex &v);
std::string to_dot(const Ball &b);
std::string to_json(const Ball &b);
std::string to_text(const Ball &b);

} // namespace ul
