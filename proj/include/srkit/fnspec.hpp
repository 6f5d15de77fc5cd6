#pragma once

#include <string>
#include <vector>

#include "srkit/rational.hpp"

namespace srkit {

// A +-1-valued Boolean function in one of three representations:
//   Explicit        truth table over all 2^arity inputs (arity <= 20). Input
//                   masks set bit i-1 when coordinate x_i is -1.
//   Symmetric       one value per Hamming weight class (number of -1s).
//   BlockSymmetric  one value per weight pair over two blocks of inputs.
class FnSpec {
 public:
  enum class Kind { Explicit, Symmetric, BlockSymmetric };

  static FnSpec explicit_fn(long arity, std::vector<int> values);
  static FnSpec symmetric(long arity, std::vector<int> class_values);
  static FnSpec block_symmetric(long m1, long m2, std::vector<int> values);

  // "maj:N", "parity:N", "and:N", "or:N", "maj_and_maj:N" (N bits per side).
  static FnSpec builtin(const std::string& name);

  Kind kind() const { return kind_; }
  long arity() const { return arity_; }
  long block1() const { return m1_; }
  long block2() const { return m2_; }
  const std::vector<int>& values() const { return values_; }

  // Representation points: inputs (Explicit), weight classes (Symmetric), or
  // weight pairs in row-major order (BlockSymmetric).
  long domain_size() const;
  int value_at(long idx) const;
  // Number of cube inputs collapsing onto a representation point.
  Integer multiplicity(long idx) const;

  // Evaluation on a concrete input mask (bit set = coordinate is -1); for
  // BlockSymmetric the low m1 bits are the first block.
  int eval_mask(unsigned long x) const;

  std::string describe() const;

 private:
  FnSpec() = default;

  Kind kind_ = Kind::Explicit;
  long arity_ = 0;
  long m1_ = 0, m2_ = 0;
  std::vector<int> values_;
};

}  // namespace srkit
