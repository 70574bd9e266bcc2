#include "khova/homology.hpp"

namespace khova {

DifferentialDims differential_dims(const ChainComplex& complex, Field field) {
  DifferentialDims out;
  const std::size_t n = complex.groups.size();
  out.kernel.resize(n);
  out.image.resize(n);
  for (const auto& [im, d] : complex.differentials) {
    const std::size_t r = rank(d, field);
    out.ranks[im] = r;
    if (r != 0) out.image[static_cast<std::size_t>(im.first)].add_term(im.second - 1, static_cast<unsigned long>(r));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [m, block] : complex.groups[i].blocks) {
      auto it = out.ranks.find({static_cast<int>(i), m});
      const std::size_t r = it == out.ranks.end() ? 0 : it->second;
      out.kernel[i].add_term(m, static_cast<unsigned long>(block.size() - r));
    }
  }
  return out;
}

HomologyTable homology_dims(const ChainComplex& complex, Field field) {
  return homology_dims(complex, differential_dims(complex, field), field);
}

HomologyTable homology_dims(const ChainComplex& complex, const DifferentialDims& dims, Field field) {
  HomologyTable table;
  table.field = field;
  table.reduced = complex.reduction.reduced();
  table.dims.resize(complex.groups.size());
  auto rank_at = [&](int i, int m) -> long long {
    auto it = dims.ranks.find({i, m});
    return it == dims.ranks.end() ? 0 : static_cast<long long>(it->second);
  };
  for (std::size_t i = 0; i < complex.groups.size(); ++i) {
    const int deg = static_cast<int>(i);
    for (const auto& [m, block] : complex.groups[i].blocks) {
      const long long h = static_cast<long long>(block.size()) - rank_at(deg, m) - rank_at(deg - 1, m + 1);
      if (h < 0)
        throw InternalError("negative homology dimension at degree " + std::to_string(i) + ", q-degree " +
                            std::to_string(m));
      table.dims[i].add_term(m, h);
    }
  }
  return table;
}

Superpolynomial superpolynomial(const HomologyTable& table, int n_black, int n_white) {
  Superpolynomial p;
  p.reduced = table.reduced;
  p.n_black = n_black;
  p.n_white = n_white;
  LaurentPoly2 sum;
  for (std::size_t i = 0; i < table.dims.size(); ++i) {
    const int t = static_cast<int>(i);
    sum += lift(table.dims[i]).shifted({t, t});
  }
  p.value = sum.shifted({n_black - 2 * n_white - (table.reduced ? 1 : 0), -n_white});
  return p;
}

LaurentPoly2 correction_term(const Superpolynomial& unreduced, const Superpolynomial& reduced) {
  return lift(quantum_d()) * reduced.value - unreduced.value;
}

bool euler_check(const Superpolynomial& p, const LaurentPoly1& jones) { return evaluate_T(p.value, -1) == jones; }

LaurentPoly1 euler_characteristic(const ChainComplex& complex, int n_black, int n_white) {
  LaurentPoly1 sum;
  for (std::size_t i = 0; i < complex.groups.size(); ++i) {
    LaurentPoly1 term = qdim(complex.groups[i]).shifted(static_cast<int>(i));
    sum += i % 2 == 0 ? term : -term;
  }
  const int shift = n_black - 2 * n_white - (complex.reduction.reduced() ? 1 : 0);
  sum = sum.shifted(shift);
  return n_white % 2 == 0 ? sum : -sum;
}

}  // namespace khova
