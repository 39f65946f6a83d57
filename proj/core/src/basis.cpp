#include "chiralhop/basis.hpp"

#include <stdexcept>

namespace chiralhop {

int local_dim(ModelKind kind) { return kind == ModelKind::VStructure ? 3 : 2; }

long basis_dimension(int n_sites, ModelKind kind) {
  if (n_sites < 1) throw std::invalid_argument("basis_dimension: n_sites must be >= 1");
  long dim = 1;
  for (int s = 0; s < n_sites; ++s) dim *= local_dim(kind);
  return dim;
}

std::vector<BasisState> enumerate_basis(int n_sites, ModelKind kind) {
  const long dim = basis_dimension(n_sites, kind);
  std::vector<BasisState> states;
  states.reserve(static_cast<std::size_t>(dim));
  for (long i = 0; i < dim; ++i) {
    BasisState st;
    st.index = i;
    st.levels.resize(static_cast<std::size_t>(n_sites));
    for (int s = 0; s < n_sites; ++s) {
      st.levels[static_cast<std::size_t>(s)] =
          static_cast<Level>(level_digit(i, s, n_sites, kind));
    }
    states.push_back(std::move(st));
  }
  return states;
}

int excitation_number(const BasisState& state) {
  int count = 0;
  for (Level l : state.levels)
    if (l != Level::Ground) ++count;
  return count;
}

int level_digit(long index, int site, int n_sites, ModelKind kind) {
  const int base = local_dim(kind);
  long q = index;
  for (int s = n_sites - 1; s > site; --s) q /= base;
  return static_cast<int>(q % base);
}

long with_digit(long index, int site, int digit, int n_sites, ModelKind kind) {
  const int base = local_dim(kind);
  long weight = 1;
  for (int s = n_sites - 1; s > site; --s) weight *= base;
  const int old = level_digit(index, site, n_sites, kind);
  return index + (digit - old) * weight;
}

int excitation_count(long index, int n_sites, ModelKind kind) {
  int count = 0;
  for (int s = 0; s < n_sites; ++s)
    if (level_digit(index, s, n_sites, kind) != 0) ++count;
  return count;
}

std::uint32_t pattern_of(long index, int n_sites, ModelKind kind) {
  std::uint32_t pat = 0;
  for (int s = 0; s < n_sites; ++s) {
    pat <<= 1;
    if (level_digit(index, s, n_sites, kind) != 0) pat |= 1u;
  }
  return pat;
}

}  // namespace chiralhop
