#include "dagger/classify.hpp"

#include <algorithm>

namespace dagger {

namespace {

Rat p_power(const Int& p, long k) {
  return k >= 0 ? Rat(pow(p, static_cast<unsigned long>(k)))
                : make_rat(1, pow(p, static_cast<unsigned long>(-k)));
}

// Scales Λ into Z_(p)² but not into pZ_(p)².
LocalQuadLattice2 primitive_scaling(const LocalQuadLattice2& lattice) {
  const Int& p = lattice.prime();
  const Mat2& b = lattice.basis();
  Valuation k = Valuation::infinity();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) k = std::min(k, valuation(b(i, j), p));
  return lattice.scaled(p_power(p, -k.value()));
}

long tree_distance_from_standard(const LocalQuadLattice2& primitive) {
  return valuation(determinant(primitive.basis()), primitive.prime()).value();
}

// Whether h·Λ_from and Λ_to agree up to scaling, given B_to⁻¹ and the basis
// of Λ_from: B_to⁻¹ h B_from must be a scalar times GL(2, Z_(p)).
bool maps_onto(const Int& p, const Mat2& to_inv, const Mat2& h, const Mat2& from_basis) {
  return stabilizes_standard_order(p, to_inv * h * from_basis);
}

}  // namespace

int default_radius(const Int& p) {
  if (p == 2) return 5;
  if (p == 3) return 3;
  return 2;
}

std::vector<LocalQuadLattice2> lattice_ball(const Int& p, const Rat& lambda, int radius) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  std::vector<LocalQuadLattice2> out{LocalQuadLattice2::standard(p, lambda)};
  for (int k = 1; k <= radius; ++k) {
    const Int pk = pow(p, static_cast<unsigned long>(k));
    for (Int t = 0; t < pk; ++t) out.emplace_back(p, lambda, mat2(1, 0, t, pk));
    const Int pk1 = pk / p;
    for (Int s = 0; s < pk1; ++s) out.emplace_back(p, lambda, mat2(p * s, pk, 1, 0));
  }
  return out;
}

std::optional<Mat2> find_conjugating_similitude(const LocalQuadLattice2& from,
                                                const LocalQuadLattice2& to, int max_precision) {
  if (from.prime() != to.prime() || from.lambda() != to.lambda())
    throw DomainError("lattices belong to different quadratic spaces");
  const Int& p = from.prime();
  const Rat& l = from.lambda();
  const Mat2 to_inv = *inverse(to.basis());
  const Mat2 to_dual_inv = *inverse(dual(to).basis());
  const LocalOrder2x2 source = order_of_lattice(from);
  const LocalOrder2x2 target = order_of_lattice(to);
  const Mat2 reflection = mat2(1, 0, 0, -1);

  auto attempt = [&](const Int& s, const Int& t) -> std::optional<Mat2> {
    const Mat2 rotation = mat2(s, t, -l * t, s);
    if (determinant(rotation) == 0) return std::nullopt;
    for (const Mat2& g : {rotation, rotation * reflection}) {
      if (!maps_onto(p, to_inv, g, from.basis()) && !maps_onto(p, to_dual_inv, g, from.basis()))
        continue;
      if (!is_similitude_matrix(l, g)) throw InternalError("search produced a non-similitude");
      if (source.conjugated(g) == target) return g;
    }
    return std::nullopt;
  };

  for (int k = 1; k <= max_precision; ++k) {
    const Int pk = pow(p, static_cast<unsigned long>(k));
    for (Int t = 0; t < pk; ++t)
      if (auto g = attempt(1, t)) return g;
    for (Int s = 0; s < pk / p; ++s)
      if (auto g = attempt(p * s, 1)) return g;
  }
  return std::nullopt;
}

LocalClassification classify_maximal_orders(const Int& p, const Rat& lambda, int radius) {
  LocalClassification out{p, lambda, radius, {}, {}, {}, {}};
  std::vector<std::pair<LocalOrder2x2, LocalQuadLattice2>> found;
  for (const LocalQuadLattice2& lattice : lattice_ball(p, lambda, radius)) {
    const LocalQuadLattice2 d = primitive_scaling(dual(lattice));
    if (tree_distance_from_standard(d) > radius) continue;
    LocalOrder2x2 order = order_of_lattice(lattice);
    const bool seen = std::any_of(found.begin(), found.end(),
                                  [&](const auto& entry) { return entry.first == order; });
    if (!seen) found.emplace_back(std::move(order), lattice);
  }

  std::vector<std::pair<LocalOrder2x2, LocalQuadLattice2>> maximal;
  for (const auto& entry : found) {
    const bool dominated = std::any_of(found.begin(), found.end(), [&](const auto& other) {
      return !(other.first == entry.first) && other.first.contains(entry.first);
    });
    if (!dominated) maximal.push_back(entry);
  }
  // Lattices closest to Z_(p)² first, so that class representatives are
  // the simplest ones found.
  auto closeness = [](const LocalQuadLattice2& lattice) {
    return tree_distance_from_standard(primitive_scaling(lattice));
  };
  std::sort(maximal.begin(), maximal.end(), [&](const auto& a, const auto& b) {
    const long da = closeness(a.second);
    const long db = closeness(b.second);
    if (da != db) return da < db;
    return a.first < b.first;
  });

  const int precision = radius + 2;
  for (const auto& [order, lattice] : maximal) {
    out.orders.push_back(order);
    out.lattices.push_back(lattice);
    std::optional<std::size_t> cls;
    for (std::size_t c = 0; c < out.representatives.size() && !cls; ++c) {
      const LocalQuadLattice2& rep = out.lattices[out.representatives[c]];
      if (find_conjugating_similitude(rep, lattice, precision)) cls = c;
    }
    if (!cls) {
      cls = out.representatives.size();
      out.representatives.push_back(out.orders.size() - 1);
    }
    out.class_of.push_back(*cls);
  }
  return out;
}

}  // namespace dagger
