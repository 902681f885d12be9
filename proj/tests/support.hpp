#pragma once

#include <map>
#include <queue>
#include <vector>

#include "chevsk/group.hpp"

namespace testing_support {

using namespace chevsk;

inline GroupElement mat2(const RingParams& params, i64 a, i64 b, i64 c, i64 d) {
  const i64 e[] = {a, b, c, d};
  return GroupElement(ModMatrix::from_integers(params, 2, e));
}

// {[[1,1],[0,1]], [[1,0],[1,1]]}
inline GenSet unipotents(const RingParams& params) {
  return GenSet::make({mat2(params, 1, 1, 0, 1), mat2(params, 1, 0, 1, 1)});
}

// Plain BFS over S u S^-1 with std::map, no packing and no ordering tricks.
inline std::map<std::vector<u64>, int> naive_distances(const GenSet& s) {
  std::vector<GroupElement> moves;
  for (const auto& g : s.gens) {
    moves.push_back(g);
    moves.push_back(g.inverse());
  }
  const GroupElement id = GroupElement::identity(s.params, s.dim);
  auto key = [](const GroupElement& g) { return std::vector<u64>(g.mat().entries().begin(), g.mat().entries().end()); };
  std::map<std::vector<u64>, int> dist{{key(id), 0}};
  std::queue<GroupElement> q;
  q.push(id);
  while (!q.empty()) {
    const GroupElement x = q.front();
    q.pop();
    const int d = dist[key(x)];
    for (const auto& m : moves) {
      const GroupElement y = m * x;
      if (dist.emplace(key(y), d + 1).second) q.push(y);
    }
  }
  return dist;
}

}  // namespace testing_support
