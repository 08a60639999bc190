#pragma once

#include <iosfwd>
#include <tuple>

#include "albertine/ring.hpp"

namespace alb {

/** Dense matrix of arbitrary-precision integers. */
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntMatrix identity(std::size_t n);
  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  bool is_symmetric() const;
};

struct HnfResult {
  IntMatrix h;  // row HNF: nonnegative pivots, zero rows dropped,
                // pivot columns strictly increasing
  IntMatrix u;  // unimodular, u * m = (h padded back with zero rows)
};

/** Row Hermite normal form with unimodular transform.  u has m.rows rows;
 *  its top h.rows rows produce h and the remainder produce zero rows. */
HnfResult hnf(const IntMatrix& m);

/** Determinant by fraction-free (Bareiss) elimination; square input. */
Int det(const IntMatrix& m);

/** Exact inertia (n_plus, n_minus, n_zero) of a symmetric integer matrix,
 *  computed by symmetric pivoting over the rationals. */
std::tuple<std::size_t, std::size_t, std::size_t> ldl_signature(
    const IntMatrix& g);

/** Solve x * H = target over the integers for H a row-HNF basis (full column
 *  rank on its pivot columns).  Returns empty when no integral solution. */
std::vector<Int> solve_hnf(const IntMatrix& h, const std::vector<Int>& target,
                           bool* ok);

/** Text codec: "rows cols" header then whitespace-separated entries. */
std::string intmat_to_text(const IntMatrix& m);
IntMatrix intmat_from_text(const std::string& text);

}  // namespace alb
