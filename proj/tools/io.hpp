#pragma once

#include "topo/certificate.hpp"
#include "topo/cubical.hpp"
#include "topo/geometry.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace topo::io {

using json = nlohmann::json;

// In-memory form of a complex file.
struct ComplexDoc {
  std::string name;
  bool cubical = false;
  GeometricComplex complex;            // simplicial faces; pos empty when no coordinates
  std::optional<CubicalComplex> cubes;
  std::map<int, Face> carrier;         // optional: vertex -> parent face
  std::optional<Vec> center;
};

struct CertificateDoc {
  bool ne = false;
  CollapseCertificate collapse;
  NECertificate tree;
  std::string source_name;
  std::string source_hash;
};

json complex_to_json(const ComplexDoc& doc);
ComplexDoc complex_from_json(const json& j);

json certificate_to_json(const CertificateDoc& doc);
CertificateDoc certificate_from_json(const json& j);

// Stable hash of the facet (or box) list.
std::string complex_hash(const ComplexDoc& doc);

json face_to_json(const Face& f);
Face face_from_json(const json& j);
json point_to_json(const Vec& v);
Vec point_from_json(const json& j);

// Either a bare complex, a bare certificate, or {"complex":..., "certificate":...}.
struct Bundle {
  std::optional<ComplexDoc> complex;
  std::optional<CertificateDoc> certificate;
};
Bundle bundle_from_json(const json& j);
json bundle_to_json(const Bundle& b);

json read_json(const std::string& path);  // "-" reads stdin
void write_json(const json& j, const std::string& path);

}  // namespace topo::io
