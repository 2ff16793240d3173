#include "io.hpp"

#include "topo/errors.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace topo::io {

namespace {

void input_error(const std::string& what) { throw TopoError(ErrorKind::InputError, what); }

json tree_to_json(const NECertificate& cert) {
  int last = -1;
  std::vector<NEStep> steps = ne_flatten(cert, &last);
  json arr = json::array();
  for (const NEStep& s : steps) arr.push_back({{"vertex", s.vertex}, {"link", tree_to_json(s.link)}});
  return {{"steps", arr}, {"last", last}};
}

NECertificate tree_from_json(const json& j) {
  if (!j.is_object() || !j.contains("last")) input_error("malformed non-evasiveness tree");
  std::vector<NEStep> steps;
  for (const json& s : j.value("steps", json::array())) steps.push_back({s.at("vertex").get<int>(), tree_from_json(s.at("link"))});
  return ne_from_steps(steps, j.at("last").get<int>());
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

json face_to_json(const Face& f) { return json(std::vector<int>(f.begin(), f.end())); }

Face face_from_json(const json& j) {
  if (!j.is_array()) input_error("face must be an array of vertex ids");
  std::vector<int> v;
  for (const json& x : j) {
    if (!x.is_number_integer()) input_error("vertex ids must be integers");
    v.push_back(x.get<int>());
  }
  Face f = make_face(v);
  if (f.size() != v.size()) input_error("face " + to_string(f) + " repeats a vertex");
  return f;
}

json point_to_json(const Vec& v) {
  json arr = json::array();
  for (const Q& q : v) arr.push_back(to_string(q));
  return arr;
}

Vec point_from_json(const json& j) {
  if (!j.is_array()) input_error("coordinates must be an array");
  Vec v;
  for (const json& x : j) {
    if (x.is_string()) v.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) v.push_back(Q(x.get<long>()));
    else input_error("coordinates must be \"p/q\" strings or integers");
  }
  return v;
}

std::string complex_hash(const ComplexDoc& doc) {
  std::ostringstream os;
  if (doc.cubical) {
    for (const Box& b : doc.cubes->maximal_boxes()) {
      for (auto [lo, hi] : b) os << lo << ':' << hi << ',';
      os << ';';
    }
  } else {
    for (const Face& f : doc.complex.complex.facets()) os << to_string(f) << ';';
  }
  std::ostringstream hex;
  hex << std::hex << fnv1a(os.str());
  return hex.str();
}

json complex_to_json(const ComplexDoc& doc) {
  json j;
  j["name"] = doc.name;
  j["kind"] = doc.cubical ? "cubical" : "simplicial";
  json verts = json::array();
  if (doc.cubical) {
    const CubicalComplex& K = *doc.cubes;
    j["dim"] = K.cells().dim();
    for (size_t v = 0; v < K.num_vertices(); ++v) {
      json coords = json::array();
      for (int c : K.point(static_cast<int>(v))) coords.push_back(std::to_string(c));
      verts.push_back({{"id", v}, {"coords", coords}});
    }
    json boxes = json::array();
    for (const Box& b : K.maximal_boxes()) {
      json bj = json::array();
      for (auto [lo, hi] : b) bj.push_back({lo, hi});
      boxes.push_back(bj);
    }
    j["boxes"] = boxes;
  } else {
    const SimplicialComplex& C = doc.complex.complex;
    j["dim"] = C.dim();
    for (int v : C.vertices()) {
      json vj = {{"id", v}};
      auto it = doc.complex.pos.find(v);
      if (it != doc.complex.pos.end()) vj["coords"] = point_to_json(it->second);
      verts.push_back(vj);
    }
    json facets = json::array();
    std::vector<Face> fs = C.facets();
    std::sort(fs.begin(), fs.end(), dim_lex_less);
    for (const Face& f : fs) facets.push_back(face_to_json(f));
    j["facets"] = facets;
  }
  j["vertices"] = verts;
  if (!doc.carrier.empty()) {
    json car = json::object();
    for (const auto& [v, f] : doc.carrier) car[std::to_string(v)] = face_to_json(f);
    j["carrier"] = car;
  }
  if (doc.center) j["center"] = point_to_json(*doc.center);
  return j;
}

ComplexDoc complex_from_json(const json& j) {
  if (!j.is_object()) input_error("complex file must be a JSON object");
  ComplexDoc doc;
  doc.name = j.value("name", std::string("unnamed"));
  std::string kind = j.value("kind", std::string("simplicial"));
  if (kind != "simplicial" && kind != "cubical") input_error("kind must be simplicial or cubical");
  doc.cubical = kind == "cubical";
  std::map<int, Vec> coords;
  size_t with = 0, total = 0;
  std::set<int> seen;
  for (const json& v : j.value("vertices", json::array())) {
    int id = v.at("id").get<int>();
    if (!seen.insert(id).second) input_error("duplicate vertex id " + std::to_string(id));
    ++total;
    if (v.contains("coords")) {
      ++with;
      coords[id] = point_from_json(v["coords"]);
    }
  }
  if (with != 0 && with != total) input_error("coordinates must be given for all vertices or none");
  if (doc.cubical) {
    std::vector<Box> boxes;
    for (const json& b : j.at("boxes")) {
      Box box;
      for (const json& iv : b) box.push_back({iv.at(0).get<int>(), iv.at(1).get<int>()});
      boxes.push_back(box);
    }
    if (boxes.empty()) input_error("no boxes");
    doc.cubes = CubicalComplex::from_boxes(boxes);
    for (size_t v = 0; v < doc.cubes->num_vertices(); ++v) {
      Vec q;
      for (int c : doc.cubes->point(static_cast<int>(v))) q.push_back(Q(c));
      doc.complex.pos[static_cast<int>(v)] = q;
    }
  } else {
    std::vector<Face> facets;
    for (const json& f : j.at("facets")) facets.push_back(face_from_json(f));
    if (facets.empty()) input_error("no facets");
    doc.complex.complex = SimplicialComplex::from_facets(facets);
    for (int v : doc.complex.complex.vertices())
      if (with && !coords.count(v)) input_error("vertex " + std::to_string(v) + " has no coordinates");
    doc.complex.pos = coords;
    size_t dim = 0;
    for (auto& [v, p] : coords) {
      if (dim == 0) dim = p.size();
      if (p.size() != dim) input_error("coordinates have inconsistent dimensions");
    }
  }
  if (j.contains("carrier"))
    for (const auto& [k, f] : j["carrier"].items()) doc.carrier[std::stoi(k)] = face_from_json(f);
  if (j.contains("center")) doc.center = point_from_json(j["center"]);
  return doc;
}

json certificate_to_json(const CertificateDoc& doc) {
  json j;
  j["type"] = doc.ne ? "ne" : "collapse";
  j["source"] = {{"name", doc.source_name}, {"hash", doc.source_hash}};
  if (doc.ne) {
    j["tree"] = tree_to_json(doc.tree);
  } else {
    json steps = json::array();
    for (const auto& s : doc.collapse.steps) steps.push_back({face_to_json(s.free), face_to_json(s.coface)});
    j["steps"] = steps;
    json target = json::array();
    for (const Face& f : doc.collapse.target) target.push_back(face_to_json(f));
    j["target"] = target;
  }
  return j;
}

CertificateDoc certificate_from_json(const json& j) {
  if (!j.is_object()) input_error("certificate must be a JSON object");
  CertificateDoc doc;
  std::string type = j.value("type", std::string());
  if (type != "ne" && type != "collapse") input_error("certificate type must be collapse or ne");
  doc.ne = type == "ne";
  if (j.contains("source")) {
    doc.source_name = j["source"].value("name", std::string());
    doc.source_hash = j["source"].value("hash", std::string());
  }
  if (doc.ne) {
    doc.tree = tree_from_json(j.at("tree"));
  } else {
    for (const json& s : j.at("steps")) {
      if (!s.is_array() || s.size() != 2) input_error("collapse step must be [free, coface]");
      doc.collapse.steps.push_back({face_from_json(s[0]), face_from_json(s[1])});
    }
    for (const json& f : j.at("target")) doc.collapse.target.push_back(face_from_json(f));
  }
  return doc;
}

Bundle bundle_from_json(const json& j) {
  Bundle b;
  try {
    if (j.contains("complex") || j.contains("certificate")) {
      if (j.contains("complex")) b.complex = complex_from_json(j["complex"]);
      if (j.contains("certificate")) b.certificate = certificate_from_json(j["certificate"]);
    } else if (j.contains("type") && (j["type"] == "ne" || j["type"] == "collapse")) {
      b.certificate = certificate_from_json(j);
    } else {
      b.complex = complex_from_json(j);
    }
  } catch (const json::exception& e) {
    input_error(std::string("malformed document: ") + e.what());
  } catch (const std::logic_error& e) {
    input_error(std::string("malformed document: ") + e.what());
  }
  return b;
}

json bundle_to_json(const Bundle& b) {
  json j = json::object();
  if (b.complex) j["complex"] = complex_to_json(*b.complex);
  if (b.certificate) j["certificate"] = certificate_to_json(*b.certificate);
  return j;
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) input_error("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw TopoError(ErrorKind::InputError, std::string("invalid JSON: ") + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  if (path == "-") {
    std::cout << j.dump() << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) input_error("cannot write " + path);
  out << j.dump(1) << '\n';
}

}  // namespace topo::io
