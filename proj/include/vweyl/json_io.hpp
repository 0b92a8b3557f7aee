#pragma once

#include <nlohmann/json.hpp>

#include "vweyl/extension.hpp"
#include "vweyl/vahlen.hpp"
#include "vweyl/worked_examples.hpp"

// File formats.  Rationals are exact strings "p/q" (bare "p" when q = 1);
// multivector term keys are comma-joined ascending 0-based generator
// indices with "" for the scalar blade.  Round-trips are bit-exact.
namespace vwio {

using nlohmann::json;

json rational_json(const exactform::Rational& r);
exactform::Rational rational_from(const json& j);

json gram_json(const exactform::RatMat& m);
exactform::RatMat gram_from(const json& j);

json space_json(const exactform::QuadSpace& s);
exactform::SpacePtr space_from(const json& j);

json terms_json(const clifford::Multivector& x);
clifford::Multivector terms_from(const json& j, const clifford::AlgebraPtr& alg);

json multivector_json(const clifford::Multivector& x);
clifford::Multivector multivector_from(const json& j);

json cliffmat_json(const vahlen::CliffMat2& m);
vahlen::CliffMat2 cliffmat_from(const json& j);

json cartan_json(const cartan::CartanMatrix& c, const std::vector<std::string>& labels);
cartan::CartanMatrix cartan_from(const json& j);

json qvector_json(const exactform::QVector& v);
exactform::QVector qvector_from(const json& j);

json extension_json(const cartan::ExtensionSpec& ext);

json matrix_json(const exactform::RatMat& m);
exactform::RatMat matrix_from(const json& j);

json report_json(const paravector::Report& r);

/// Parse failure wrapper so the CLI can map anything malformed to exit 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

json load_file(const std::string& path);
void save_file(const std::string& path, const json& j);

}  // namespace vwio
