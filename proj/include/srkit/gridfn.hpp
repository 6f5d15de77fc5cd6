#pragma once

#include <map>
#include <vector>

#include "srkit/quadnum.hpp"

namespace srkit {

// Real-valued function on the signed grid {-n, ..., n}, stored sparsely;
// points never set are exactly zero.
class GridFn {
 public:
  explicit GridFn(long n);

  long n() const { return n_; }

  const QuadNum& value(long t) const;
  void set(long t, const QuadNum& v);
  void add(long t, const QuadNum& v) { set(t, value(t) + v); }

  // Support points (nonzero values), ascending.
  std::vector<long> support() const;
  const std::map<long, QuadNum>& entries() const { return values_; }

  QuadNum l1_norm() const;

 private:
  void check_point(long t) const;

  long n_;
  std::map<long, QuadNum> values_;
};

}  // namespace srkit
