#include "mcover/families.hpp"

namespace mcover {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidParameter, "cycle needs at least 2 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph hypercube(int d) {
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) edges.push_back({v, v | (1 << b)});
  return Graph(n, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  const int star[5] = {5, 7, 9, 6, 8};
  for (int i = 0; i < 5; ++i) edges.push_back({star[i], star[(i + 1) % 5]});
  for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});
  return Graph(10, std::move(edges));
}

}  // namespace mcover
