#pragma once

#include <map>
#include <string>

#include "kdual/chain_complex.hpp"
#include "kdual/dga.hpp"

namespace kdual::testing {

/// T(x, y) modulo words of length >= 3, |x| = -2, |y| = -3, d x = y.
/// Noncommutative with a nonzero differential: a stress test for signs.
inline DGAlgebra coconnective_dg_tensor(const FieldSpec& f) {
  DGAlgebraBuilder b(f, Connectivity::simply_coconnective);
  b.set_unit(b.add_basis("1", 0));
  const std::size_t x = b.add_basis("x", -2);
  const std::size_t y = b.add_basis("y", -3);
  const std::size_t xx = b.add_basis("xx", -4);
  const std::size_t xy = b.add_basis("xy", -5);
  const std::size_t yx = b.add_basis("yx", -5);
  const std::size_t yy = b.add_basis("yy", -6);
  b.add_product(x, x, xx, mpq_class(1));
  b.add_product(x, y, xy, mpq_class(1));
  b.add_product(y, x, yx, mpq_class(1));
  b.add_product(y, y, yy, mpq_class(1));
  b.add_differential(x, y, mpq_class(1));
  b.add_differential(xx, yx, mpq_class(1));
  b.add_differential(xx, xy, mpq_class(1));
  b.add_differential(xy, yy, mpq_class(1));
  b.add_differential(yx, yy, mpq_class(-1));
  b.set_name("dg-tensor-coconnective");
  return std::move(b).build();
}

/// T(a, b) modulo words of length >= 3, |a| = 1, |b| = 2, d b = a.
inline DGAlgebra connective_dg_tensor(const FieldSpec& f) {
  DGAlgebraBuilder b(f, Connectivity::connective);
  b.set_unit(b.add_basis("1", 0));
  const std::size_t a = b.add_basis("a", 1);
  const std::size_t c = b.add_basis("b", 2);
  const std::size_t aa = b.add_basis("aa", 2);
  const std::size_t ab = b.add_basis("ab", 3);
  const std::size_t ba = b.add_basis("ba", 3);
  const std::size_t bb = b.add_basis("bb", 4);
  b.add_product(a, a, aa, mpq_class(1));
  b.add_product(a, c, ab, mpq_class(1));
  b.add_product(c, a, ba, mpq_class(1));
  b.add_product(c, c, bb, mpq_class(1));
  b.add_differential(c, a, mpq_class(1));
  b.add_differential(ab, aa, mpq_class(-1));
  b.add_differential(ba, aa, mpq_class(1));
  b.add_differential(bb, ab, mpq_class(1));
  b.add_differential(bb, ba, mpq_class(1));
  b.set_name("dg-tensor-connective");
  return std::move(b).build();
}

/// Degree -> dimension for the degrees listed, zero elsewhere on [lo, hi].
inline std::map<int, std::size_t> profile(int lo, int hi, const std::map<int, std::size_t>& nonzero) {
  std::map<int, std::size_t> out;
  for (int n = lo; n <= hi; ++n) {
    auto it = nonzero.find(n);
    out[n] = it == nonzero.end() ? 0 : it->second;
  }
  return out;
}

inline std::map<int, std::size_t> ones_at(int lo, int hi, std::initializer_list<int> degrees) {
  std::map<int, std::size_t> nz;
  for (int d : degrees) nz[d] = 1;
  return profile(lo, hi, nz);
}

}  // namespace kdual::testing
