#include "subrosa/patch.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace subrosa {

Patch::Patch(int n, std::vector<PlacedRhombus> tiles) : n_(n), tiles_(std::move(tiles)) { normalize(); }

void Patch::normalize() {
  std::sort(tiles_.begin(), tiles_.end());
  tiles_.erase(std::unique(tiles_.begin(), tiles_.end()), tiles_.end());
}

void Patch::insert(const PlacedRhombus& t) {
  auto it = std::lower_bound(tiles_.begin(), tiles_.end(), t);
  if (it == tiles_.end() || !(*it == t)) tiles_.insert(it, t);
}

void Patch::merge(const Patch& other) {
  std::vector<PlacedRhombus> out;
  out.reserve(tiles_.size() + other.tiles_.size());
  std::set_union(tiles_.begin(), tiles_.end(), other.tiles_.begin(), other.tiles_.end(), std::back_inserter(out));
  tiles_ = std::move(out);
}

bool Patch::contains(const PlacedRhombus& t) const { return std::binary_search(tiles_.begin(), tiles_.end(), t); }

Patch Patch::transformed(const Isometry& g) const {
  std::vector<PlacedRhombus> out;
  out.reserve(tiles_.size());
  for (const auto& t : tiles_) out.push_back(t.transformed(g));
  return Patch(n_, std::move(out));
}

Patch Patch::transformed(const LatticeMap& g) const {
  std::vector<PlacedRhombus> out;
  out.reserve(tiles_.size());
  for (const auto& t : tiles_) out.push_back(t.transformed(g));
  return Patch(n_, std::move(out));
}

double Patch::area() const {
  double a = 0.0;
  for (const auto& t : tiles_) a += t.area();
  return a;
}

std::vector<std::size_t> Patch::shape_counts() const {
  std::vector<std::size_t> c(static_cast<std::size_t>(n_ / 2 + 1), 0);
  for (const auto& t : tiles_) ++c[static_cast<std::size_t>(t.k)];
  return c;
}

std::map<UnitEdge, std::vector<std::size_t>> Patch::edge_index() const {
  std::map<UnitEdge, std::vector<std::size_t>> index;
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    const auto v = tiles_[i].vertices();
    for (std::size_t j = 0; j < 4; ++j) {
      index[UnitEdge{v[j].canonical(), v[(j + 1) % 4].canonical()}].push_back(i);
    }
  }
  return index;
}

std::pair<CycloVector, Word> boundary_loop(const Patch& p) {
  if (p.empty()) throw std::invalid_argument("boundary_loop: empty patch");
  // Boundary edges are directed edges whose reverse is not used by any tile.
  std::unordered_map<CycloVector, std::vector<std::pair<CycloVector, DoubledDirection>>, CycloHash> next;
  std::size_t boundary_edges = 0;
  {
    std::map<UnitEdge, DoubledDirection> directed;
    for (const auto& t : p.tiles()) {
      const auto v = t.vertices();
      const auto dirs = t.edge_directions();
      for (std::size_t j = 0; j < 4; ++j) {
        directed[UnitEdge{v[j].canonical(), v[(j + 1) % 4].canonical()}] = dirs[j];
      }
    }
    for (const auto& [e, d] : directed) {
      if (directed.count(UnitEdge{e.to, e.from}) != 0) continue;
      next[e.from].emplace_back(e.to, d);
      ++boundary_edges;
    }
  }
  for (const auto& [v, outs] : next) {
    if (outs.size() != 1) throw std::invalid_argument("boundary_loop: boundary is not a simple loop");
  }
  // Deterministic start: the smallest boundary vertex.
  CycloVector start = next.begin()->first;
  for (const auto& [v, outs] : next) start = std::min(start, v);
  Word word;
  CycloVector cur = start;
  do {
    const auto& [to, d] = next.at(cur).front();
    word.push_back(d);
    cur = to;
    if (word.size() > boundary_edges) throw std::invalid_argument("boundary_loop: boundary does not close");
  } while (!(cur == start));
  if (word.size() != boundary_edges) throw std::invalid_argument("boundary_loop: boundary has several components");
  return {start, word};
}

}  // namespace subrosa
