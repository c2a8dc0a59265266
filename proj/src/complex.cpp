#include "edgeideal/complex.hpp"

#include <algorithm>
#include <string>

#include "edgeideal/errors.hpp"

namespace edgeideal {

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> keep;
  for (VertexSet s : sets)
    if (std::none_of(keep.begin(), keep.end(), [&](VertexSet k) { return k.subset_of(s); }))
      keep.push_back(s);
  std::sort(keep.begin(), keep.end());
  return keep;
}

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> keep;
  for (VertexSet s : sets)
    if (std::none_of(keep.begin(), keep.end(), [&](VertexSet k) { return s.subset_of(k); }))
      keep.push_back(s);
  std::sort(keep.begin(), keep.end());
  return keep;
}

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexSet> faces)
    : n_(n), facets_(maximal_elements(std::move(faces))) {
  if (n < 0 || n > kMaxVertices) throw InputError("vertex count must lie in [0, 64]");
  for (VertexSet f : facets_)
    if (!f.subset_of(VertexSet::full(n))) throw InputError("face outside the vertex range");
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::contains_face(VertexSet f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet F) { return f.subset_of(F); });
}

FaceLayers SimplicialComplex::faces(const Limits& limits) const {
  FaceLayers layers;
  if (facets_.empty()) return layers;
  std::vector<VertexSet> all;
  for (VertexSet F : facets_) {
    if (F.size() >= 63 || (std::size_t{1} << F.size()) > limits.face_budget)
      throw ResourceError("facet with " + std::to_string(F.size()) + " vertices exceeds the face budget");
    // Enumerate every submask of F.
    std::uint64_t sub = F.bits();
    while (true) {
      all.emplace_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & F.bits();
    }
    if (all.size() > 4 * limits.face_budget) {
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      if (all.size() > limits.face_budget) throw ResourceError("complex exceeds the face budget");
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() > limits.face_budget) throw ResourceError("complex exceeds the face budget");
  layers.resize(static_cast<std::size_t>(dimension() + 2));
  for (VertexSet f : all) layers[static_cast<std::size_t>(f.size())].push_back(f);
  return layers;
}

SimplicialComplex SimplicialComplex::induced(VertexSet w) const {
  std::vector<VertexSet> restricted;
  for (VertexSet F : facets_) restricted.push_back(F & w);
  return SimplicialComplex(n_, std::move(restricted));
}

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::zero(int n) {
  SquarefreeMonomialIdeal I;
  I.n_ = n;
  return I;
}

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::unit(int n) {
  SquarefreeMonomialIdeal I;
  I.n_ = n;
  I.unit_ = true;
  return I;
}

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::from_supports(int n, std::vector<VertexSet> supports) {
  if (n < 0 || n > kMaxVertices) throw InputError("variable count must lie in [0, 64]");
  for (VertexSet s : supports)
    if (!s.subset_of(VertexSet::full(n))) throw InputError("monomial support outside the variables");
  SquarefreeMonomialIdeal I;
  I.n_ = n;
  if (std::any_of(supports.begin(), supports.end(), [](VertexSet s) { return s.empty(); })) {
    I.unit_ = true;
    return I;
  }
  I.gens_ = minimal_elements(std::move(supports));
  return I;
}

std::vector<VertexSet> SquarefreeMonomialIdeal::supports() const {
  if (unit_) return {VertexSet{}};
  return gens_;
}

bool SquarefreeMonomialIdeal::contains(VertexSet m) const {
  if (unit_) return true;
  return std::any_of(gens_.begin(), gens_.end(), [&](VertexSet g) { return g.subset_of(m); });
}

SquarefreeMonomialIdeal ideal_of_graph(const Graph& g) {
  std::vector<VertexSet> gens;
  for (const Edge& e : g.edges()) gens.push_back(e.ends());
  return SquarefreeMonomialIdeal::from_supports(g.order(), std::move(gens));
}

SimplicialComplex independence_complex(const Graph& g, const Limits& limits) {
  return SimplicialComplex(g.order(), maximal_independent_sets(g, limits));
}

namespace {

struct FaceWalker {
  std::vector<std::vector<VertexSet>> gens_through;  // generators containing each vertex
  FaceLayers& layers;
  std::size_t budget;
  std::size_t count = 0;

  bool addable(VertexSet face, Vertex v) const {
    const VertexSet grown = face.with(v);
    for (VertexSet g : gens_through[static_cast<std::size_t>(v)])
      if (g.subset_of(grown)) return false;
    return true;
  }

  void walk(VertexSet face, VertexSet candidates) {
    if (++count > budget) throw ResourceError("Stanley-Reisner complex exceeds the face budget");
    const auto k = static_cast<std::size_t>(face.size());
    if (layers.size() <= k) layers.resize(k + 1);
    layers[k].push_back(face);
    for (Vertex v : candidates) {
      candidates = candidates.without(v);
      if (addable(face, v)) walk(face.with(v), candidates);
    }
  }
};

}  // namespace

FaceLayers stanley_reisner_faces(const SquarefreeMonomialIdeal& ideal, VertexSet within,
                                 const Limits& limits) {
  FaceLayers layers;
  if (ideal.is_unit()) return layers;
  FaceWalker walker{std::vector<std::vector<VertexSet>>(static_cast<std::size_t>(ideal.variables())),
                    layers, limits.face_budget};
  for (VertexSet g : ideal.generators())
    if (g.subset_of(within))
      for (Vertex v : g) walker.gens_through[static_cast<std::size_t>(v)].push_back(g);
  walker.walk(VertexSet{}, within);
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return layers;
}

SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_unit()) throw DomainError("the unit ideal has the void Stanley-Reisner complex");
  const VertexSet everything = VertexSet::full(ideal.variables());
  const FaceLayers layers = stanley_reisner_faces(ideal, everything, limits);
  std::vector<VertexSet> facets;
  for (const auto& layer : layers)
    for (VertexSet f : layer) {
      bool maximal = true;
      for (Vertex v : everything - f)
        if (!ideal.contains(f.with(v))) {
          maximal = false;
          break;
        }
      if (maximal) facets.push_back(f);
    }
  return SimplicialComplex(ideal.variables(), std::move(facets));
}

}  // namespace edgeideal
