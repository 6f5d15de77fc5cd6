#include "srkit/fnspec.hpp"

#include <bit>

#include "srkit/combinatorics.hpp"
#include "srkit/errors.hpp"

namespace srkit {

namespace {

void check_pm_one(const std::vector<int>& values) {
  for (int v : values)
    if (v != 1 && v != -1) throw UsageError("function values must be +-1");
}

int maj_class(long k, long m) { return 2 * k >= m ? -1 : 1; }

}  // namespace

FnSpec FnSpec::explicit_fn(long arity, std::vector<int> values) {
  if (arity < 0 || arity > 20)
    throw ResourceBound("explicit truth tables support arity <= 20");
  if (values.size() != (1uL << arity))
    throw UsageError("truth table size must be 2^arity");
  check_pm_one(values);
  FnSpec f;
  f.kind_ = Kind::Explicit;
  f.arity_ = arity;
  f.values_ = std::move(values);
  return f;
}

FnSpec FnSpec::symmetric(long arity, std::vector<int> class_values) {
  if (arity < 0 || arity > 4096)
    throw ResourceBound("symmetric spec supports arity <= 4096");
  if (class_values.size() != static_cast<size_t>(arity + 1))
    throw UsageError("symmetric spec needs arity+1 class values");
  check_pm_one(class_values);
  FnSpec f;
  f.kind_ = Kind::Symmetric;
  f.arity_ = arity;
  f.values_ = std::move(class_values);
  return f;
}

FnSpec FnSpec::block_symmetric(long m1, long m2, std::vector<int> values) {
  if (m1 < 0 || m2 < 0 || m1 > 200 || m2 > 200)
    throw ResourceBound("block-symmetric spec supports <= 200 bits per block");
  if (values.size() != static_cast<size_t>((m1 + 1) * (m2 + 1)))
    throw UsageError("block-symmetric spec needs (m1+1)*(m2+1) values");
  check_pm_one(values);
  FnSpec f;
  f.kind_ = Kind::BlockSymmetric;
  f.arity_ = m1 + m2;
  f.m1_ = m1;
  f.m2_ = m2;
  f.values_ = std::move(values);
  return f;
}

FnSpec FnSpec::builtin(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos)
    throw UsageError("builtin spec is name:bits, e.g. maj:3");
  const std::string base = name.substr(0, colon);
  long m = 0;
  try {
    m = std::stol(name.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("malformed builtin \"" + name + "\"");
  }
  if (m < 1) throw UsageError("builtin arity must be positive");

  std::vector<int> vals;
  if (base == "maj") {
    for (long k = 0; k <= m; ++k) vals.push_back(maj_class(k, m));
    return symmetric(m, vals);
  }
  if (base == "parity") {
    for (long k = 0; k <= m; ++k) vals.push_back(k % 2 == 0 ? 1 : -1);
    return symmetric(m, vals);
  }
  if (base == "and") {  // -1 only when every input is -1
    for (long k = 0; k <= m; ++k) vals.push_back(k == m ? -1 : 1);
    return symmetric(m, vals);
  }
  if (base == "or") {  // -1 as soon as any input is -1
    for (long k = 0; k <= m; ++k) vals.push_back(k >= 1 ? -1 : 1);
    return symmetric(m, vals);
  }
  if (base == "maj_and_maj") {  // AND of two majorities, m bits per side
    for (long k1 = 0; k1 <= m; ++k1)
      for (long k2 = 0; k2 <= m; ++k2)
        vals.push_back(
            maj_class(k1, m) == -1 && maj_class(k2, m) == -1 ? -1 : 1);
    return block_symmetric(m, m, vals);
  }
  throw UsageError("unknown builtin \"" + base + "\"");
}

long FnSpec::domain_size() const {
  switch (kind_) {
    case Kind::Explicit: return 1L << arity_;
    case Kind::Symmetric: return arity_ + 1;
    case Kind::BlockSymmetric: return (m1_ + 1) * (m2_ + 1);
  }
  return 0;
}

int FnSpec::value_at(long idx) const {
  if (idx < 0 || idx >= domain_size())
    throw UsageError("representation point out of range");
  return values_[static_cast<size_t>(idx)];
}

Integer FnSpec::multiplicity(long idx) const {
  if (idx < 0 || idx >= domain_size())
    throw UsageError("representation point out of range");
  switch (kind_) {
    case Kind::Explicit: return 1;
    case Kind::Symmetric: return binomial(arity_, idx);
    case Kind::BlockSymmetric:
      return binomial(m1_, idx / (m2_ + 1)) * binomial(m2_, idx % (m2_ + 1));
  }
  return 0;
}

int FnSpec::eval_mask(unsigned long x) const {
  if (arity_ > 63) throw ResourceBound("mask evaluation supports arity <= 63");
  if ((x >> arity_) != 0)
    throw UsageError("input mask has bits beyond the arity");
  switch (kind_) {
    case Kind::Explicit: return values_[x];
    case Kind::Symmetric: return values_[std::popcount(x)];
    case Kind::BlockSymmetric: {
      const unsigned long lo = x & ((1uL << m1_) - 1);
      const unsigned long hi = x >> m1_;
      return value_at(static_cast<long>(std::popcount(lo)) * (m2_ + 1) +
                      std::popcount(hi));
    }
  }
  return 0;
}

std::string FnSpec::describe() const {
  switch (kind_) {
    case Kind::Explicit:
      return "explicit(" + std::to_string(arity_) + ")";
    case Kind::Symmetric:
      return "symmetric(" + std::to_string(arity_) + ")";
    case Kind::BlockSymmetric:
      return "block_symmetric(" + std::to_string(m1_) + "," +
             std::to_string(m2_) + ")";
  }
  return "?";
}

}  // namespace srkit
