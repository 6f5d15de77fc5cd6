#include "srkit/patternmatrix.hpp"

#include <sstream>

#include "srkit/errors.hpp"

namespace srkit {

PatternMatrixSpec::PatternMatrixSpec(long N, long n, FnSpec phi)
    : N_(N), n_(n), phi_(std::move(phi)) {
  if (n < 1 || N < 1 || N % n != 0)
    throw UsageError("pattern matrix needs n >= 1 dividing N");
  if (phi_.arity() != n)
    throw UsageError("base function arity must equal n");
}

Integer PatternMatrixSpec::rows() const {
  Integer r(1);
  r <<= N_;
  return r;
}

Integer PatternMatrixSpec::cols() const {
  return pow_integer(Integer(N_ / n_), static_cast<unsigned long>(n_)) *
         pow_integer(2, static_cast<unsigned long>(n_));
}

int PatternMatrixSpec::entry(unsigned long row, unsigned long col) const {
  if (N_ > 62) throw ResourceBound("entry oracle supports N <= 62");
  if (Integer(row) >= rows() || Integer(col) >= cols())
    throw UsageError("pattern matrix index out of range");
  const unsigned long block = static_cast<unsigned long>(N_ / n_);
  unsigned long w_bits = col & ((1uL << n_) - 1);
  unsigned long s_digits = col >> n_;

  // Decode base-`block` digits of S, block 1 in the most significant slot.
  std::vector<unsigned long> offset(n_);
  for (long i = n_ - 1; i >= 0; --i) {
    offset[i] = s_digits % block;
    s_digits /= block;
  }

  unsigned long z = 0;  // mask of -1 coordinates of x|_S * w
  for (long i = 0; i < n_; ++i) {
    const unsigned long pos = static_cast<unsigned long>(i) * block + offset[i];
    const int x_val = (row >> pos) & 1 ? -1 : 1;
    const int w_val = (w_bits >> (n_ - 1 - i)) & 1 ? -1 : 1;
    if (x_val * w_val < 0) z |= 1uL << i;
  }
  return phi_.eval_mask(z);
}

std::string PatternMatrixSpec::dense_csv() const {
  if (rows() * cols() > Integer(1) << 20)
    throw ResourceBound("dense export limited to 2^20 entries");
  const unsigned long r = rows().get_ui();
  const unsigned long c = cols().get_ui();
  const unsigned long block = static_cast<unsigned long>(N_ / n_);

  std::ostringstream out;
  for (unsigned long col = 0; col < c; ++col) {
    unsigned long w_bits = col & ((1uL << n_) - 1);
    unsigned long s_digits = col >> n_;
    std::string s_label(n_, '0'), w_label(n_, '+');
    for (long i = n_ - 1; i >= 0; --i) {
      s_label[i] = static_cast<char>('0' + s_digits % block);
      s_digits /= block;
    }
    for (long i = 0; i < n_; ++i)
      if ((w_bits >> (n_ - 1 - i)) & 1) w_label[i] = '-';
    out << (col ? "," : "") << "S=" << s_label << ";w=" << w_label;
  }
  out << "\n";
  for (unsigned long row = 0; row < r; ++row) {
    for (unsigned long col = 0; col < c; ++col)
      out << (col ? "," : "") << entry(row, col);
    out << "\n";
  }
  return out.str();
}

}  // namespace srkit
