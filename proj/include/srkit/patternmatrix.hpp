#pragma once

#include <string>

#include "srkit/fnspec.hpp"

namespace srkit {

// The (N, n, phi) pattern matrix: rows are inputs x in {-1,1}^N, columns are
// pairs (S, w) where S picks one coordinate out of each of the n consecutive
// blocks of size N/n and w in {-1,1}^n; the entry is phi(x|_S * w) with
// coordinatewise product.
//
// Orderings are fixed and documented so dense exports are byte-reproducible:
//   rows   x_j is -1 iff bit j-1 of the row index is set (x_1 fastest),
//   cols   block offsets as base-(N/n) digits, block 1 most significant,
//          then w as an n-bit number, w_1 most significant, 0 meaning +1.
class PatternMatrixSpec {
 public:
  PatternMatrixSpec(long N, long n, FnSpec phi);

  long N() const { return N_; }
  long n() const { return n_; }
  const FnSpec& phi() const { return phi_; }

  Integer rows() const;  // 2^N
  Integer cols() const;  // (N/n)^n * 2^n

  // Entry oracle; requires N <= 62 so indices fit machine words.
  int entry(unsigned long row, unsigned long col) const;

  // Dense CSV export (header row of (S, w) labels, then +-1 entries);
  // requires rows * cols <= 2^20.
  std::string dense_csv() const;

 private:
  long N_, n_;
  FnSpec phi_;
};

}  // namespace srkit
