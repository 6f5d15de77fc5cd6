#pragma once

#include <json.hpp>

#include <string>

#include "srkit/degree.hpp"
#include "srkit/fnspec.hpp"
#include "srkit/report.hpp"
#include "srkit/symfn.hpp"
#include "srkit/witness.hpp"

namespace srkit {

using Json = nlohmann::json;

// Canonical file form: alphabetically ordered keys, two-space indent, LF,
// trailing newline; rationals as "num/den" strings in lowest terms.
std::string dump_canonical(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json quad_json(const QuadNum& v);

Json report_json(const PropertyReport& report);

// Reproducibility manifest embedded in every output file. Wall time is
// deliberately not part of it: identical manifests must imply byte-identical
// files.
Json manifest_json(const std::string& command, const Json& parameters,
                   unsigned precision_bits, const std::string& outcome);

Json witness_json(const WitnessCert& cert, const Json& manifest);
WitnessCert witness_from_json(const Json& j);

Json symfn_json(const SymFn& fn, long delta_int);
SymFn symfn_from_json(const Json& j);

Json fnspec_json(const FnSpec& f);
FnSpec fnspec_from_json(const Json& j);

// CLI argument: builtin "name:bits" or a path to a spec file.
FnSpec fnspec_from_arg(const std::string& arg);

}  // namespace srkit
