#include "flagform/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "flagform/errors.hpp"

namespace flagform {

Lattice Lattice::build(const CentralArrangement& arr) {
  int n = static_cast<int>(arr.hyperplanes.size());
  Matrix forms = forms_matrix(arr);

  Lattice lat;
  lat.flats_.push_back(Flat{{}, 0});
  lat.levels_.push_back({0});

  std::vector<std::vector<int>> frontier = {{}};
  int codim = 0;
  while (true) {
    // closures of (flat at this level) + (one more hyperplane)
    std::set<std::vector<int>> next;
    for (const auto& base : frontier) {
      for (int g = 0; g < n; ++g) {
        if (std::binary_search(base.begin(), base.end(), g)) continue;
        std::vector<Vec> rows;
        for (int i : base) rows.push_back(forms.row(i));
        rows.push_back(forms.row(g));
        SubspaceBasis span = SubspaceBasis::span_of(rows, arr.ambient_dim);
        std::vector<int> closure;
        for (int h = 0; h < n; ++h)
          if (span.contains(forms.row(h))) closure.push_back(h);
        next.insert(closure);
      }
    }
    if (next.empty()) break;
    ++codim;
    lat.levels_.push_back({});
    frontier.assign(next.begin(), next.end());
    for (const auto& s : frontier) {
      lat.levels_[codim].push_back(static_cast<int>(lat.flats_.size()));
      lat.flats_.push_back(Flat{s, codim});
    }
  }

  // mu(min) = 1; mu(X) = -sum over smaller flats
  lat.moebius_.assign(lat.flats_.size(), 0);
  lat.moebius_[0] = 1;
  for (size_t x = 1; x < lat.flats_.size(); ++x) {
    long long s = 0;
    for (size_t y = 0; y < lat.flats_.size(); ++y)
      if (y != x && lat.leq(static_cast<int>(y), static_cast<int>(x)))
        s += lat.moebius_[y];
    lat.moebius_[x] = -s;
  }
  return lat;
}

const Flat& Lattice::flat(int id) const {
  if (id < 0 || id >= static_cast<int>(flats_.size()))
    fail(ErrorCode::FlatNotInLattice, "flat id out of range");
  return flats_[id];
}

const std::vector<int>& Lattice::level(int codim) const {
  static const std::vector<int> empty;
  if (codim < 0 || codim > rank()) return empty;
  return levels_[codim];
}

int Lattice::flat_id(const std::vector<int>& hyperplane_set) const {
  for (size_t i = 0; i < flats_.size(); ++i)
    if (flats_[i].hyperplanes == hyperplane_set) return static_cast<int>(i);
  return -1;
}

bool Lattice::leq(int a, int b) const {
  const auto& sa = flat(a).hyperplanes;
  const auto& sb = flat(b).hyperplanes;
  return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

std::vector<int> Lattice::covers_of(int id) const {
  std::vector<int> out;
  int c = flat(id).codim;
  for (int y : level(c + 1))
    if (leq(id, y)) out.push_back(y);
  return out;
}

long long Lattice::whitney(int codim) const {
  long long s = 0;
  for (int id : level(codim)) s += std::llabs(moebius_[id]);
  return s;
}

std::vector<FlagChain> Lattice::flags_of_length(int p) const {
  std::vector<FlagChain> out;
  if (p < 0 || p > rank()) return out;
  std::vector<int> chain = {0};
  // depth-first in flat-id order gives lex order of flat sequences
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == p) {
      out.push_back(FlagChain{chain});
      return;
    }
    for (int y : level(depth + 1))
      if (leq(chain.back(), y)) {
        chain.push_back(y);
        self(self, depth + 1);
        chain.pop_back();
      }
  };
  extend(extend, 0);
  return out;
}

std::vector<FlagChain> Lattice::flags_terminating_at(int id) const {
  int p = flat(id).codim;
  std::vector<FlagChain> out;
  for (const auto& f : flags_of_length(p))
    if (f.flat_ids.back() == id) out.push_back(f);
  return out;
}

}  // namespace flagform
