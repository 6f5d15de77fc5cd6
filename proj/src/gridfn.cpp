#include "srkit/gridfn.hpp"

#include "srkit/errors.hpp"

namespace srkit {

GridFn::GridFn(long n) : n_(n) {
  if (n < 0) throw UsageError("grid radius must be nonnegative");
}

void GridFn::check_point(long t) const {
  if (t < -n_ || t > n_)
    throw UsageError("grid point " + std::to_string(t) + " outside [-" +
                     std::to_string(n_) + ", " + std::to_string(n_) + "]");
}

const QuadNum& GridFn::value(long t) const {
  check_point(t);
  static const QuadNum zero;
  auto it = values_.find(t);
  return it == values_.end() ? zero : it->second;
}

void GridFn::set(long t, const QuadNum& v) {
  check_point(t);
  if (v.is_zero())
    values_.erase(t);
  else
    values_[t] = v;
}

std::vector<long> GridFn::support() const {
  std::vector<long> s;
  s.reserve(values_.size());
  for (const auto& [t, v] : values_) s.push_back(t);
  return s;
}

QuadNum GridFn::l1_norm() const {
  QuadNum sum;
  for (const auto& [t, v] : values_) sum += v.abs();
  return sum;
}

}  // namespace srkit
