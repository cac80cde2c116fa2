#pragma once

namespace dagger {

template <class Visit>
void for_each_line(const std::vector<std::vector<std::uint64_t>>& basis, std::uint64_t p,
                   Visit&& visit) {
  const std::size_t r = basis.size();
  if (r == 0) return;
  const std::size_t n = basis.front().size();
  // Coefficient vectors (0,..,0,1,c_{k+1},..,c_{r-1}) for each leading slot k.
  std::vector<std::uint64_t> coeffs(r);
  std::vector<std::uint64_t> v(n);
  for (std::size_t lead = 0; lead < r; ++lead) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    coeffs[lead] = 1;
    const std::size_t free = r - lead - 1;
    for (;;) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t i = lead; i < r; ++i) {
          acc = (acc + mulmod(coeffs[i], basis[i][j], p)) % p;
        }
        v[j] = acc;
      }
      if (!visit(static_cast<const std::vector<std::uint64_t>&>(v))) return;
      // Odometer over the free coefficients.
      std::size_t k = 0;
      for (; k < free; ++k) {
        auto& c = coeffs[lead + 1 + k];
        if (++c < p) break;
        c = 0;
      }
      if (k == free) break;
    }
  }
}

}  // namespace dagger
