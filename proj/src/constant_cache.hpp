#pragma once

#include <functional>
#include <map>

#include "srkit/enclosure.hpp"

namespace srkit {

// Memoizes an enclosure per precision level; verification sweeps reuse the
// same constants at every grid point.
class ConstantCache {
 public:
  explicit ConstantCache(std::function<Enclosure(unsigned)> compute)
      : compute_(std::move(compute)) {}

  Enclosure operator()(unsigned bits) {
    auto it = memo_.find(bits);
    if (it == memo_.end()) it = memo_.emplace(bits, compute_(bits)).first;
    return it->second;
  }

  std::function<Enclosure(unsigned)> as_fn() {
    return [this](unsigned bits) { return (*this)(bits); };
  }

 private:
  std::function<Enclosure(unsigned)> compute_;
  std::map<unsigned, Enclosure> memo_;
};

}  // namespace srkit
