#include "srkit/serialize.hpp"

#include <fstream>
#include <sstream>

#include "srkit/errors.hpp"
#include "srkit/version.hpp"

namespace srkit {

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
  if (!out) throw UsageError("write failed for " + path);
}

Json rational_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw UsageError("rational fields are \"num/den\" strings");
  return rational_from_string(j.get<std::string>());
}

Json quad_json(const QuadNum& v) {
  Json j;
  j["a"] = rational_json(v.rational_part());
  j["b"] = rational_json(v.radical_part());
  j["delta"] = v.delta();
  return j;
}

Json report_json(const PropertyReport& report) {
  Json items = Json::array();
  for (const auto& item : report.items) {
    Json j;
    j["check"] = item.check;
    j["point"] = item.point;
    j["aux"] = item.aux;
    j["status"] = to_string(item.status);
    j["margin"] = item.margin;
    j["bits"] = item.bits_used;
    j["refinement"] = item.refinement;
    items.push_back(std::move(j));
  }
  Json j;
  j["all_pass"] = report.all_pass();
  j["items"] = std::move(items);
  return j;
}

Json manifest_json(const std::string& command, const Json& parameters,
                   unsigned precision_bits, const std::string& outcome) {
  Json j;
  j["artifact_version"] = kArtifactVersion;
  j["command"] = command;
  j["parameters"] = parameters;
  j["precision_bits"] = precision_bits;
  j["outcome"] = outcome;
  return j;
}

Json witness_json(const WitnessCert& cert, const Json& manifest) {
  Json values = Json::array();
  for (const auto& [t, v] : cert.R.entries()) {
    Json entry;
    entry["t"] = t;
    entry["a"] = rational_json(v.rational_part());
    entry["b"] = rational_json(v.radical_part());
    values.push_back(std::move(entry));
  }
  Json j;
  j["n"] = cert.params.n;
  j["d"] = cert.params.d;
  j["delta_int"] = cert.params.delta_int;
  j["u_max"] = cert.params.u_max;      // read-only: floor(n^(2/3))
  j["weight_exponent"] = 20;           // read-only construction constant
  j["values"] = std::move(values);
  j["report"] = report_json(cert.report);
  j["manifest"] = manifest;
  return j;
}

WitnessCert witness_from_json(const Json& j) {
  const long n = j.at("n").get<long>();
  const long d = j.at("d").get<long>();
  unsigned bits = kDefaultBits;
  if (j.contains("manifest") && j["manifest"].contains("precision_bits"))
    bits = j["manifest"]["precision_bits"].get<unsigned>();
  WitnessCert cert;
  cert.params = witness_params(n, d, bits);
  if (j.at("delta_int").get<long>() != cert.params.delta_int)
    throw UsageError("file radicand does not match the stated parameters");
  cert.R = GridFn(n);
  for (const auto& entry : j.at("values")) {
    const long t = entry.at("t").get<long>();
    const Rational a = rational_from_json(entry.at("a"));
    const Rational b = rational_from_json(entry.at("b"));
    cert.R.set(t, QuadNum(a, b,
                          static_cast<unsigned long>(cert.params.delta_int)));
  }
  return cert;
}

Json symfn_json(const SymFn& fn, long delta_int) {
  Json weights = Json::array();
  for (const auto& [k, v] : fn.entries()) {
    Json entry;
    entry["k"] = k;
    entry["a"] = rational_json(v.rational_part());
    entry["b"] = rational_json(v.radical_part());
    weights.push_back(std::move(entry));
  }
  Json j;
  j["m"] = fn.m();
  j["delta_int"] = delta_int;
  j["weights"] = std::move(weights);
  return j;
}

SymFn symfn_from_json(const Json& j) {
  SymFn fn(j.at("m").get<long>());
  const long delta = j.at("delta_int").get<long>();
  for (const auto& entry : j.at("weights"))
    fn.set(entry.at("k").get<long>(),
           QuadNum(rational_from_json(entry.at("a")),
                   rational_from_json(entry.at("b")),
                   static_cast<unsigned long>(delta)));
  return fn;
}

Json fnspec_json(const FnSpec& f) {
  Json j;
  j["arity"] = f.arity();
  switch (f.kind()) {
    case FnSpec::Kind::Explicit: j["kind"] = "explicit"; break;
    case FnSpec::Kind::Symmetric: j["kind"] = "symmetric"; break;
    case FnSpec::Kind::BlockSymmetric:
      j["kind"] = "block_symmetric";
      j["m1"] = f.block1();
      j["m2"] = f.block2();
      break;
  }
  j["values"] = f.values();
  return j;
}

FnSpec fnspec_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const auto values = j.at("values").get<std::vector<int>>();
  if (kind == "explicit")
    return FnSpec::explicit_fn(j.at("arity").get<long>(), values);
  if (kind == "symmetric")
    return FnSpec::symmetric(j.at("arity").get<long>(), values);
  if (kind == "block_symmetric")
    return FnSpec::block_symmetric(j.at("m1").get<long>(),
                                   j.at("m2").get<long>(), values);
  throw UsageError("unknown function kind \"" + kind + "\"");
}

FnSpec fnspec_from_arg(const std::string& arg) {
  if (arg.find(':') != std::string::npos) return FnSpec::builtin(arg);
  return fnspec_from_json(Json::parse(read_file(arg)));
}

}  // namespace srkit
