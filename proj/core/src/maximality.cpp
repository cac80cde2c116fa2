#include "dagger/maximality.hpp"

#include <algorithm>
#include <array>

namespace dagger {

namespace {

class Budget {
 public:
  explicit Budget(SearchBudget b) : left_(b.max_candidates) {}
  void spend(std::uint64_t n = 1) {
    if (n > left_) throw BudgetExceeded("superorder search exceeded its candidate budget");
    left_ -= n;
  }
  std::uint64_t left() const { return left_; }

 private:
  std::uint64_t left_;
};

std::uint64_t word_prime(const Int& p) {
  if (!p.fits_ulong_p() || p > Int("4294967295")) {
    throw DomainError("prime " + p.get_str() + " is too large for local search");
  }
  return p.get_ui();
}

long ord(const IdealZ& ideal, const Int& p) { return valuation(ideal.generator(), p).value(); }

long ramified_valuation(const QuaternionAlgebra& alg, const Int& p) {
  return hilbert_symbol(alg.a(), alg.b(), p) == -1 ? 1 : 0;
}

std::uint64_t mod_word(const Rat& x, std::uint64_t p) {
  if (x.get_den() != 1) throw InternalError("expected an integral coordinate");
  return reduce_mod(x, p);
}

using FpVec = std::vector<std::uint64_t>;

// Search frame between O and W = O^♯ ∩ p^-1 O. Elements of W/O are F_p
// vectors c standing for x = (1/p) Σ c_i e_i.
class Frame {
 public:
  Frame(const Order4& order, const Int& p) : order_(order), p_(word_prime(p)), pz_(p) {
    elems_ = order.basis_elements();
    dual_ = order.trace_dual();
    const IntegralLattice4 w = dual_.intersect(order.scaled(make_rat(1, pz_)));
    std::vector<FpVec> rows;
    for (std::size_t r = 0; r < 4; ++r) {
      const auto c = order.lattice().coordinates(w.basis().row(r));
      FpVec v(4);
      for (std::size_t m = 0; m < 4; ++m) v[m] = mod_word(c[m] * pz_, p_);
      rows.push_back(v);
    }
    FpMatrix red(p_, 4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t m = 0; m < 4; ++m) red(r, m) = rows[r][m];
    const std::size_t rank = red.row_reduce();
    for (std::size_t r = 0; r < rank; ++r) {
      FpVec v(4);
      for (std::size_t m = 0; m < 4; ++m) v[m] = red(r, m);
      subspace_.push_back(v);
    }
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) {
        const auto c = order.lattice().coordinates((elems_[i] * elems_[k]).coords());
        for (std::size_t m = 0; m < 4; ++m) gamma_[i][k][m] = mod_word(c[m], p_);
      }
  }

  std::uint64_t p() const { return p_; }
  const std::vector<FpVec>& subspace() const { return subspace_; }
  const IntegralLattice4& dual() const { return dual_; }

  Quat element(const FpVec& c) const {
    Quat x(order_.algebra());
    for (std::size_t i = 0; i < 4; ++i) x = x + make_rat(Int(static_cast<unsigned long>(c[i])), pz_) * elems_[i];
    return x;
  }

  // Necessary condition for O + Zx to be an order: x e_k and e_k x lie in
  // O + Zx, which only depends on c modulo p.
  bool prefilter(const FpVec& c) const {
    std::size_t lead = 0;
    while (c[lead] == 0) ++lead;
    const std::uint64_t lead_inv = invmod(c[lead], p_);
    auto parallel = [&](const FpVec& v) {
      const std::uint64_t t = mulmod(v[lead], lead_inv, p_);
      for (std::size_t m = 0; m < 4; ++m)
        if (v[m] != mulmod(t, c[m], p_)) return false;
      return true;
    };
    FpVec v(4), u(4);
    for (std::size_t k = 0; k < 4; ++k) {
      std::fill(v.begin(), v.end(), 0);
      std::fill(u.begin(), u.end(), 0);
      for (std::size_t i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t m = 0; m < 4; ++m) {
          v[m] = (v[m] + mulmod(c[i], gamma_[i][k][m], p_)) % p_;
          u[m] = (u[m] + mulmod(c[i], gamma_[k][i][m], p_)) % p_;
        }
      }
      if (!parallel(v) || !parallel(u)) return false;
    }
    return true;
  }

  IntegralLattice4 adjoin(const Quat& x) const {
    RatMatrix gens = order_.basis();
    gens.append_row(x.coords());
    return IntegralLattice4::from_generators(order_.algebra(), gens);
  }

  // Smallest ring containing O and x, or nullopt if it leaves O^♯ (then x
  // lies in no order containing O).
  std::optional<IntegralLattice4> closure(const Quat& x) const {
    IntegralLattice4 current = adjoin(x);
    for (;;) {
      if (!dual_.contains(current)) return std::nullopt;
      RatMatrix gens = current.basis();
      const auto e = current.basis_elements();
      for (const Quat& s : e)
        for (const Quat& t : e) gens.append_row((s * t).coords());
      IntegralLattice4 next = IntegralLattice4::from_generators(order_.algebra(), gens);
      if (next == current) return current;
      current = std::move(next);
    }
  }

  // Basis of the sign-eigenspace of ‡ acting on W/O.
  std::vector<FpVec> eigenspace(const OrthogonalInvolution& inv, int sign) const {
    if (subspace_.empty()) return {};
    std::array<FpVec, 4> d;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto c = order_.lattice().coordinates(inv.apply(elems_[i]).coords());
      d[i].resize(4);
      for (std::size_t m = 0; m < 4; ++m) d[i][m] = mod_word(c[m], p_);
      d[i][i] = (d[i][i] + (sign > 0 ? p_ - 1 : 1)) % p_;
    }
    const std::size_t k = subspace_.size();
    FpMatrix a(p_, k, 4);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < 4; ++i) {
        if (subspace_[r][i] == 0) continue;
        for (std::size_t m = 0; m < 4; ++m)
          a(r, m) = (a(r, m) + mulmod(subspace_[r][i], d[i][m], p_)) % p_;
      }
    std::vector<FpVec> out;
    for (const FpVec& coeffs : a.left_kernel()) {
      FpVec v(4, 0);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t m = 0; m < 4; ++m)
          v[m] = (v[m] + mulmod(coeffs[r], subspace_[r][m], p_)) % p_;
      out.push_back(v);
    }
    return out;
  }

 private:
  const Order4& order_;
  std::uint64_t p_;
  Int pz_;
  std::vector<Quat> elems_;
  IntegralLattice4 dual_ = order_;
  std::vector<FpVec> subspace_;
  std::array<std::array<std::array<std::uint64_t, 4>, 4>, 4> gamma_{};
};

std::uint64_t line_count(std::size_t dim, std::uint64_t p) {
  // (p^dim - 1) / (p - 1), saturating.
  std::uint64_t total = 0, power = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    total += power;
    if (k + 1 < dim && power > UINT64_MAX / p / 2) return UINT64_MAX;
    power *= p;
  }
  return total;
}

template <class Visit>
void visit_lines(const std::vector<FpVec>& basis, std::uint64_t p, Budget& budget, Visit&& visit) {
  budget.spend(line_count(basis.size(), p));
  for_each_line(basis, p, [&](const FpVec& c) {
    visit(c);
    return true;
  });
}

std::optional<IntegralLattice4> smaller(std::optional<IntegralLattice4> best, IntegralLattice4 cand) {
  if (!best || cand < *best) return cand;
  return best;
}

// One deterministic ascent step at p: the least (canonical order) index-p
// superorder O + Zx with x from the candidate lines, else the least closure
// O[x]. With an involution, candidates are ‡-eigenlines, so every result is
// ‡-stable.
Order4 ascend(const Order4& order, const Int& p, const OrthogonalInvolution* inv, Budget& budget) {
  const Frame frame(order, p);
  std::vector<std::vector<FpVec>> spaces;
  if (inv == nullptr) {
    spaces.push_back(frame.subspace());
  } else {
    spaces.push_back(frame.eigenspace(*inv, +1));
    if (frame.p() != 2) spaces.push_back(frame.eigenspace(*inv, -1));
  }
  std::optional<IntegralLattice4> best;
  for (const auto& space : spaces) {
    visit_lines(space, frame.p(), budget, [&](const FpVec& c) {
      if (!frame.prefilter(c)) return;
      IntegralLattice4 cand = frame.adjoin(frame.element(c));
      if (is_order(cand)) best = smaller(std::move(best), std::move(cand));
    });
  }
  if (!best) {
    for (const auto& space : spaces) {
      visit_lines(space, frame.p(), budget, [&](const FpVec& c) {
        if (auto cand = frame.closure(frame.element(c))) best = smaller(std::move(best), std::move(*cand));
      });
    }
  }
  if (!best) {
    throw InternalError("no superorder found at p = " + p.get_str() +
                        " although the discriminant is not minimal");
  }
  return Order4(std::move(*best));
}

// {x : x J ⊆ J}.
IntegralLattice4 left_order(const IntegralLattice4& j) {
  const auto j_inv = inverse(j.basis());
  if (!j_inv) throw InternalError("singular lattice basis");
  RatMatrix cols(0, 4);
  for (const Quat& b : j.basis_elements()) {
    const RatMatrix m = transpose(right_multiplication(b) * *j_inv);
    for (std::size_t r = 0; r < 4; ++r) cols.append_row(m.row(r));
  }
  return IntegralLattice4(j.algebra(), RatLattice::from_generators(cols).dual());
}

Order4 p_maximal_impl(Order4 order, const Int& p, Budget& budget) {
  const long target = ramified_valuation(order.algebra(), p);
  while (ord(reduced_discriminant(order), p) > target) {
    if (p != 2) {
      // Radical idealizer: for odd p the p-radical is O ∩ p O^♯.
      const IntegralLattice4 rad = order.intersect(order.trace_dual().scaled(Rat(p)));
      IntegralLattice4 ideal = left_order(rad);
      if (!(ideal == order)) {
        order = Order4(std::move(ideal));
        continue;
      }
    }
    order = ascend(order, p, nullptr, budget);
  }
  return order;
}

}  // namespace

Order4 p_maximal_order_containing(const Order4& order, const Int& p, SearchBudget budget) {
  Budget b(budget);
  return p_maximal_impl(order, p, b);
}

Order4 maximal_order_containing(const Order4& order, SearchBudget budget) {
  Budget b(budget);
  Order4 current = order;
  for (const auto& [p, e] : factor(reduced_discriminant(order).generator())) {
    current = p_maximal_impl(std::move(current), p, b);
  }
  return current;
}

IdealZ target_discriminant(const QuaternionAlgebra& alg, const OrthogonalInvolution& inv) {
  if (!(inv.algebra() == alg)) throw DomainError("involution on a different algebra");
  return algebra_discriminant(alg).intersect(iota(involution_discriminant(inv)));
}

MaximalityCertificate is_maximal_dagger_order(const Order4& order, const OrthogonalInvolution& inv,
                                              SearchBudget budget) {
  MaximalityCertificate cert{order, target_discriminant(order.algebra(), inv),
                             reduced_discriminant(order), false, std::nullopt, false, {}};
  cert.dagger_stable = is_dagger_stable(inv, order);
  if (cert.dagger_stable && cert.achieved == cert.target) {
    const Order4 m = maximal_order_containing(order, budget);
    cert.eichler_form = dagger_intersection(inv, m) == order;
  }
  cert.maximal = cert.dagger_stable && cert.achieved == cert.target && cert.eichler_form.value_or(false);
  const Int product = cert.achieved.generator() * cert.target.generator();
  for (const auto& [p, e] : factor(product)) {
    cert.witnesses.push_back({p, ord(cert.achieved, p), ord(cert.target, p)});
  }
  return cert;
}

Order4 enlarge_to_maximal_dagger(const Order4& order, const OrthogonalInvolution& inv,
                                 SearchBudget budget) {
  Budget b(budget);
  Order4 current = is_dagger_stable(inv, order) ? order : dagger_intersection(inv, order);
  const IdealZ target = target_discriminant(order.algebra(), inv);
  // Ascending only removes primes from the discriminant.
  for (const auto& [p, e] : factor(reduced_discriminant(current).generator())) {
    const long want = ord(target, p);
    while (ord(reduced_discriminant(current), p) > want) {
      if (p != 2) {
        // M ∩ M^‡ for a maximal M ⊇ O is a ‡-order containing O; at odd p
        // it is Eichler, which keeps the eigenline search two-dimensional.
        Order4 eichler = dagger_intersection(inv, p_maximal_impl(current, p, b));
        if (!(eichler == current)) {
          current = std::move(eichler);
          continue;
        }
      }
      current = ascend(current, p, &inv, b);
    }
  }
  return current;
}

std::vector<Order4> index_p_superorders(const Order4& order, const Int& p, SearchBudget budget) {
  Budget b(budget);
  const Frame frame(order, p);
  std::vector<Order4> out;
  visit_lines(frame.subspace(), frame.p(), b, [&](const FpVec& c) {
    if (!frame.prefilter(c)) return;
    IntegralLattice4 cand = frame.adjoin(frame.element(c));
    if (is_order(cand)) out.emplace_back(std::move(cand));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dagger
