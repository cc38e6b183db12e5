#pragma once

// Delete-contraction G' = G/e \ tau(e) on strongly involutive polyhedra,
// iterated down to an odd wheel.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdmap/error.hpp"
#include "sdmap/families.hpp"
#include "sdmap/identify.hpp"
#include "sdmap/map.hpp"
#include "sdmap/symmetry.hpp"

namespace sdmap {

struct ReductionStep {
  std::pair<std::string, std::string> contracted;
  std::pair<std::string, std::string> deleted;
  CanonicalCode code;  // of the resulting map
  std::string pairing;  // identified pairing of the result, or the error name
};

struct ReductionTrace {
  SphericalMap start;
  std::string start_pairing;
  std::vector<ReductionStep> steps;
  std::vector<SphericalMap> maps;  // after each step
  LabeledMap terminal;
};

/// q when g is the wheel W_q with q odd.
inline std::optional<int> odd_wheel_size(const SphericalMap& g) {
  const int q = g.vertex_count() - 1;
  if (q < 3 || q % 2 == 0 || g.edge_count() != 2 * q) return std::nullopt;
  if (canonical_code(g) != canonical_code(build_wheel(q).map)) return std::nullopt;
  return q;
}

namespace detail {

inline std::string pairing_or_error(const SphericalMap& g) {
  try {
    return identify_pairing(g).name();
  } catch (const Error& e) {
    return std::string(errc_name(e.code()));
  }
}

/// Deletes edge f, then contracts edge e = (u, v) by splicing the rotation
/// at v into the rotation at u where the dart towards v was. Returns
/// nullopt when the result has a loop or parallel edges.
inline std::optional<SphericalMap> delete_contract(const SphericalMap& g, int e, int f) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> ccw(n);
  for (VertexId x = 0; x < n; ++x)
    for (DartId d : g.rotation(x))
      if (SphericalMap::edge_of(d) != f) ccw[x].push_back(g.head(d));
  const VertexId u = g.origin(2 * e), v = g.head(2 * e);

  auto rotate_to = [](std::vector<VertexId> r, VertexId first) {
    auto it = std::find(r.begin(), r.end(), first);
    std::rotate(r.begin(), it, r.end());
    return r;
  };
  // around u: the neighbors after v; around v: the neighbors after u
  auto ru = rotate_to(ccw[u], v), rv = rotate_to(ccw[v], u);
  std::vector<VertexId> merged(ru.begin() + 1, ru.end());
  merged.insert(merged.end(), rv.begin() + 1, rv.end());
  ccw[u] = merged;
  ccw[v].clear();

  std::vector<int> id(n);
  std::vector<std::string> labels;
  for (VertexId x = 0, k = 0; x < n; ++x) {
    if (x == v) continue;
    id[x] = k++;
    labels.push_back(g.label(x));
  }
  id[v] = id[u];
  std::vector<std::vector<VertexId>> out;
  for (VertexId x = 0; x < n; ++x) {
    if (x == v) continue;
    std::vector<VertexId> r;
    for (VertexId y : ccw[x]) r.push_back(id[y]);
    auto sorted = r;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    if (std::find(r.begin(), r.end(), id[x]) != r.end()) return std::nullopt;
    if (r.empty()) return std::nullopt;
    out.push_back(std::move(r));
  }
  try {
    return from_neighbor_lists(out, labels);
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::pair<std::string, std::string> edge_labels(const SphericalMap& g, int e) {
  auto a = g.label(g.origin(2 * e)), b = g.label(g.head(2 * e));
  if (b < a) std::swap(a, b);
  return {a, b};
}

}  // namespace detail

struct ReductionResult {
  SphericalMap map;
  StrongInvolution tau;
  ReductionStep step;
};

/// One reduction step, trying edges in label order. nullopt iff g is an odd
/// wheel.
inline std::optional<ReductionResult> reduce_step(const SphericalMap& g, const StrongInvolution& tau) {
  if (!verify_strong_involution(g, tau.vertex_to_face).strong())
    throw Error(Errc::NotStronglyInvolutive, "witness fails verification");
  if (odd_wheel_size(g)) return std::nullopt;

  CellIndex idx(g);
  std::vector<int> order(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return detail::edge_labels(g, a) < detail::edge_labels(g, b); });
  for (int e : order) {
    const int f = tau.underlying.cells[idx.edge(e)] - idx.v;
    if (f == e) continue;
    auto h = detail::delete_contract(g, e, f);
    if (!h || !validate_polyhedral(*h).polyhedral()) continue;
    if (h->vertex_count() != h->face_count()) continue;
    auto found = find_strong_involutions(*h);
    if (found.empty()) continue;
    ReductionResult r{*h, std::move(found.front()), {}};
    r.step.contracted = detail::edge_labels(g, e);
    r.step.deleted = detail::edge_labels(g, f);
    r.step.code = canonical_code(*h);
    r.step.pairing = detail::pairing_or_error(*h);
    return r;
  }
  throw Error(Errc::StepFailed, "no edge gives a strongly involutive polyhedron");
}

inline ReductionTrace reduce_to_wheel(const SphericalMap& g) {
  auto found = find_strong_involutions(g);
  if (found.empty()) throw Error(Errc::NotStronglyInvolutive, "map has no strong involution");
  ReductionTrace trace;
  trace.start = g;
  trace.start_pairing = detail::pairing_or_error(g);
  SphericalMap cur = g;
  StrongInvolution tau = found.front();
  while (auto r = reduce_step(cur, tau)) {
    trace.steps.push_back(r->step);
    trace.maps.push_back(r->map);
    cur = std::move(r->map);
    tau = std::move(r->tau);
  }
  trace.terminal.map = cur;
  trace.terminal.family = Family::Wheel;
  trace.terminal.params = {cur.vertex_count() - 1, 1, false};
  return trace;
}

struct ExperimentRow {
  Family family;
  FamilyParams params;
  std::vector<std::string> pairings;  // start, then after each step
  int terminal_q = 0;
};

inline std::vector<ExperimentRow> pairing_trace_experiment(const std::vector<std::pair<Family, FamilyParams>>& corpus) {
  std::vector<ExperimentRow> out;
  for (const auto& [f, p] : corpus) {
    auto lm = build_family(f, p);
    auto t = reduce_to_wheel(lm.map);
    ExperimentRow row{f, p, {t.start_pairing}, t.terminal.params.q};
    for (const auto& s : t.steps) row.pairings.push_back(s.pairing);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace sdmap
