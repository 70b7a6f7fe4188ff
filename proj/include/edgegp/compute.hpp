#pragma once

#include <string>
#include <vector>

#include "edgegp/classes.hpp"
#include "edgegp/solver.hpp"

namespace edgegp {

enum class Method { Auto, Exact, Brute };

/// gp_e of a connected graph; an edgeless graph has value 0.
inline GpeResult gpe_connected(const Graph& g, Method method) {
  if (g.size() == 0) {
    GpeResult r;
    r.method = method == Method::Brute ? "bruteforce" : method == Method::Exact ? "branch-and-bound"
                                                                                : "fastpath:diam2";
    return r;
  }
  switch (method) {
    case Method::Brute: return gpe_bruteforce(g);
    case Method::Exact: return gpe_exact(g);
    case Method::Auto: break;
  }
  if (auto fast = fastpath_result(g)) return *std::move(fast);
  return gpe_exact(g);
}

struct ComputeOutcome {
  GpeResult result;
  std::size_t components = 1;
};

/// gp_e of any graph, summing over connected components; witness edge ids
/// refer to the input graph.
inline ComputeOutcome compute_gpe(const Graph& g, Method method) {
  const auto comps = g.components();
  if (comps.size() <= 1) {
    ComputeOutcome out{gpe_connected(g, method), comps.size()};
    if (!out.result.bounds && g.size() > 0) {
      const auto d = decompose_blocks(g);
      if (d.block_graph) out.result.bounds = block_bounds(d);
    }
    return out;
  }
  ComputeOutcome out;
  out.components = comps.size();
  out.result.method = "component-sum";
  for (const auto& comp : comps) {
    const Graph h = g.induced(comp);
    const auto part = gpe_connected(h, method);
    out.result.value += part.value;
    out.result.lower_bound_used += part.lower_bound_used;
    for (EdgeId e : part.witness)
      out.result.witness.push_back(*g.edge_id(comp[h.edge(e).u], comp[h.edge(e).v]));
  }
  std::sort(out.result.witness.begin(), out.result.witness.end());
  return out;
}

}  // namespace edgegp
