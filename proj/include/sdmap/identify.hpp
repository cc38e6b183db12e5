#pragma once

// Identification of the self-dual pairing of a map by matching its
// PairingSignature against matrix realizations of the catalog.

#include <string>
#include <vector>

#include "sdmap/coxeter.hpp"
#include "sdmap/symmetry.hpp"

namespace sdmap {

inline PairingSignature pairing_signature(const PairingInstance& inst) {
  PairingSignature sig;
  sig.dual_order = inst.dual_group.order();
  sig.aut_order = inst.aut_group.order();
  const Mat3 minus = -Mat3::Identity();
  for (const auto& m : inst.dual_group.elements()) {
    const bool iso = !inst.aut_group.contains(m);
    sig.element_profile.emplace_back(matrix_order(m), m.determinant() > 0 ? 1 : -1, iso ? 1 : 0,
                                     fixes_sphere_point(m) ? 1 : 0);
    // the only central fixed-point-free involution of a finite subgroup of O(3)
    if (iso && approx_equal(m, minus)) sig.central_free_involution = true;
  }
  std::sort(sig.element_profile.begin(), sig.element_profile.end());
  return sig;
}

struct PairingMatch {
  PairingInstance instance;
  std::vector<std::string> also_matched;  // degenerate small-q coincidences that were dropped
  bool antipodal() const { return instance.antipodal(); }
  std::string name() const { return instance.name(); }
};

/// Catalog instances whose signature equals sig. Infinite classes are
/// instantiated only at q = dual_order / 4 or dual_order / 2, the values their
/// orders allow.
inline std::vector<PairingInstance> matching_instances(const PairingSignature& sig) {
  std::vector<PairingInstance> out;
  for (const auto& r : pairing_catalog()) {
    std::vector<int> qs;
    if (!r.infinite) {
      qs.push_back(0);
    } else {
      for (int q : {sig.dual_order / 4, sig.dual_order / 2})
        if (q >= 1 && (qs.empty() || qs.back() != q)) qs.push_back(q);
    }
    for (int q : qs) {
      auto inst = instantiate(r, q);
      if (inst.dual_group.order() != sig.dual_order) continue;
      if (pairing_signature(inst) == sig) out.push_back(std::move(inst));
    }
  }
  return out;
}

/// Unique catalog match. When a q = 1 instance of an infinite class coincides
/// with a special pairing, the special pairing is kept.
inline PairingMatch identify_pairing(const PairingSignature& sig) {
  auto found = matching_instances(sig);
  if (found.empty())
    throw Error(Errc::NoCatalogMatch, "no pairing with |Dual| = " + std::to_string(sig.dual_order) +
                                          " matches the symmetry signature");
  PairingMatch m;
  if (found.size() > 1) {
    std::vector<PairingInstance> kept;
    for (auto& f : found) {
      if (f.record.infinite && f.q == 1) m.also_matched.push_back(f.name());
      else kept.push_back(std::move(f));
    }
    found = std::move(kept);
  }
  if (found.size() != 1) {
    std::string names;
    for (const auto& f : found) names += " " + f.name();
    throw Error(Errc::AmbiguousMatch, "candidates:" + names);
  }
  m.instance = std::move(found.front());
  return m;
}

inline PairingMatch identify_pairing(const SphericalMap& g) {
  auto grp = dual_group(g);
  return identify_pairing(pairing_signature(g, grp));
}

}  // namespace sdmap
