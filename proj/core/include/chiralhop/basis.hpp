#pragma once

#include <cstdint>
#include <vector>

namespace chiralhop {

// Per-site level of the three-level scheme. The enumeration order fixes the
// basis order everywhere: 0 < minus < plus.
enum class Level : std::uint8_t { Ground = 0, Minus = 1, Plus = 2 };

enum class ModelKind { VStructure, Hardcore };

// One basis state: a level per site plus its position in the enumeration.
// Enumeration is lexicographic with site 0 as the most significant digit,
// so index = sum_s digit(s) * base^(n-1-s) with base 3 (VStructure) or
// 2 (Hardcore, digit = occupation).
struct BasisState {
  std::vector<Level> levels;
  long index = 0;
};

int local_dim(ModelKind kind);
long basis_dimension(int n_sites, ModelKind kind);

std::vector<BasisState> enumerate_basis(int n_sites, ModelKind kind);

// Number of sites not in the ground level (VStructure) or occupied (Hardcore).
int excitation_number(const BasisState& state);

// Digit of `site` in the index encoding; avoids materializing BasisState.
int level_digit(long index, int site, int n_sites, ModelKind kind);

// Index with the digit of `site` replaced.
long with_digit(long index, int site, int digit, int n_sites, ModelKind kind);

int excitation_count(long index, int n_sites, ModelKind kind);

// Classical detection bit pattern: bit of site s is 1 iff the site is not in
// the ground level. Site 0 is the most significant bit.
std::uint32_t pattern_of(long index, int n_sites, ModelKind kind);

}  // namespace chiralhop
