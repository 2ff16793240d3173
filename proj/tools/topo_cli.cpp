#include "io.hpp"

#include "topo/cubical_collapse.hpp"
#include "topo/errors.hpp"
#include "topo/gallery.hpp"
#include "topo/hudson.hpp"
#include "topo/lemmas.hpp"
#include "topo/morse.hpp"
#include "topo/search.hpp"
#include "topo/star_shaped.hpp"
#include "topo/subdivision.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace topo;
using io::json;

namespace {

enum Exit { Ok = 0, Failed = 1, Inconclusive = 2, BadInput = 3 };

struct Globals {
  uint64_t seed = 0;
  long budget = 200000;
  bool json_out = false;
};

// Human-readable or JSON report. Goes to stderr when stdout carries data.
class Report {
 public:
  explicit Report(const Globals& g) : g_(g) {}
  Report& set(const std::string& k, json v) {
    j_[k] = std::move(v);
    return *this;
  }
  void emit(bool to_stderr) const {
    std::ostream& os = to_stderr ? std::cerr : std::cout;
    if (g_.json_out) {
      os << j_.dump() << '\n';
      return;
    }
    for (const auto& [k, v] : j_.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }

 private:
  const Globals& g_;
  json j_ = json::object();
};

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::RetryBudgetExceeded:
    case ErrorKind::RecursionBudgetExceeded:
    case ErrorKind::GenericityFailure:
    case ErrorKind::RealizationSearchFailed:
      return Inconclusive;
    case ErrorKind::CertificateRejected:
    case ErrorKind::NotFree:
      return Failed;
    default:
      return BadInput;
  }
}

io::ComplexDoc load_complex(const std::string& path) {
  io::Bundle b = io::bundle_from_json(io::read_json(path));
  if (!b.complex) throw TopoError(ErrorKind::InputError, "no complex in " + path);
  return *b.complex;
}

bool geometric(const io::ComplexDoc& d) { return !d.complex.pos.empty(); }

void require_geometric(const io::ComplexDoc& d) {
  if (!geometric(d) || d.cubical) throw TopoError(ErrorKind::InputError, "a simplicial complex with coordinates is needed");
}

SearchBudget budget(const Globals& g) { return {g.budget, g.seed}; }

io::CertificateDoc collapse_doc(const CollapseCertificate& c, const io::ComplexDoc& src) {
  io::CertificateDoc d;
  d.collapse = c;
  d.source_name = src.name;
  d.source_hash = io::complex_hash(src);
  return d;
}

io::CertificateDoc ne_doc(const NECertificate& c, const io::ComplexDoc& src) {
  io::CertificateDoc d;
  d.ne = true;
  d.tree = c;
  d.source_name = src.name;
  d.source_hash = io::complex_hash(src);
  return d;
}

io::ComplexDoc derived_doc(const DerivedComplex& D, const std::string& name) {
  io::ComplexDoc d;
  d.name = name;
  d.complex.complex = D.complex;
  d.complex.pos = D.pos;
  for (size_t v = 0; v < D.root_carrier.size(); ++v) d.carrier[static_cast<int>(v)] = D.root_carrier[v];
  return d;
}

void write_bundle(const io::Bundle& b, const std::string& out) { io::write_json(io::bundle_to_json(b), out); }

json faces_json(const std::vector<Face>& fs) {
  json a = json::array();
  for (const Face& f : fs) a.push_back(io::face_to_json(f));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collapsibility, non-evasiveness and discrete Morse tools for simplicial and cubical complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--budget", g.budget, "search node budget")->capture_default_str();
  app.add_flag("--json", g.json_out, "machine-readable report");

  std::string in = "-", out = "-";
  auto io_opts = [&](CLI::App* s, bool has_out) {
    s->add_option("-i,--input", in, "input file (- for stdin)")->capture_default_str();
    if (has_out) s->add_option("-o,--output", out, "output file (- for stdout)")->capture_default_str();
  };

  auto* gal = app.add_subcommand("gallery", "generate a gallery complex");
  std::string gname;
  std::vector<std::string> params;
  gal->add_option("name", gname, "item name")->required();
  gal->add_option("--param", params, "parameters k=v");
  gal->add_option("-o,--output", out, "output file")->capture_default_str();
  gal->add_flag_callback("--list", [] {
    for (const auto& n : gallery::names()) std::cout << n << '\n';
    std::exit(0);
  });

  auto* fv = app.add_subcommand("fvector", "print the f-vector and Euler characteristic");
  io_opts(fv, false);

  auto* sdc = app.add_subcommand("sd", "iterated derived subdivision");
  int m = 1;
  sdc->add_option("--m", m, "number of subdivisions")->capture_default_str();
  io_opts(sdc, true);

  auto* ne = app.add_subcommand("ne", "search for a non-evasiveness certificate");
  io_opts(ne, true);

  auto* col = app.add_subcommand("collapse", "search for a collapse");
  std::string target = "point";
  col->add_option("--target", target, "point or a complex file")->capture_default_str();
  io_opts(col, true);

  auto* mor = app.add_subcommand("morse", "gradient matching from a distance function");
  int from_vertex = -1;
  std::string from_point;
  bool check = false;
  auto* fvopt = mor->add_option("--from-vertex", from_vertex, "base vertex");
  mor->add_option("--from-point", from_point, "base point p/q,...")->excludes(fvopt);
  mor->add_flag("--check-bijection", check, "cross-check critical cells against the predicted pairs");
  io_opts(mor, false);

  auto* cat = app.add_subcommand("cat0-collapse", "collapse a cubical complex to a root vertex");
  int root = 0;
  bool cub_flag = false;
  cat->add_option("--root", root, "root vertex id")->capture_default_str();
  cat->add_flag("--cubical", cub_flag, "input is cubical (default)");
  io_opts(cat, true);

  auto* star = app.add_subcommand("star-collapse", "non-evasiveness of sd^{d-2} of a star-shaped complex");
  std::string center;
  star->add_option("--center", center, "star center p/q,... (defaults to the file's center)");
  io_opts(star, true);

  auto* conv = app.add_subcommand("convex-collapse", "collapse sd of a convex complex to a point");
  io_opts(conv, true);

  auto* hud = app.add_subcommand("hudson", "transfer a collapse to a subdivision");
  std::string cert_file, sub_file;
  hud->add_option("--cert", cert_file, "collapse certificate of the input complex")->required();
  hud->add_option("--subdivision", sub_file, "geometric subdivision of the input complex")->required();
  io_opts(hud, true);

  auto* ver = app.add_subcommand("verify", "replay a certificate");
  std::string vcomplex, vcert;
  ver->add_option("--complex", vcomplex, "complex file (default: bundle on stdin)");
  ver->add_option("--cert", vcert, "certificate file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : BadInput;
  }

  Report rep(g);
  bool data_on_stdout = out == "-";
  try {
    if (gal->parsed()) {
      gallery::Spec spec{gname, {}};
      for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw TopoError(ErrorKind::BadParameters, "parameter '" + p + "' is not k=v");
        try {
          spec.params[p.substr(0, eq)] = std::stol(p.substr(eq + 1));
        } catch (const std::exception&) {
          throw TopoError(ErrorKind::BadParameters, "parameter '" + p + "' is not an integer");
        }
      }
      gallery::Item it = gallery::generate(spec);
      io::ComplexDoc d;
      d.name = gname;
      d.cubical = it.cubical;
      d.complex = it.complex;
      d.cubes = it.cubes;
      d.center = it.center;
      write_bundle({d, std::nullopt}, out);
      return Ok;
    }
    if (fv->parsed()) {
      io::ComplexDoc d = load_complex(in);
      std::vector<long> f = d.cubical ? d.cubes->f_vector() : d.complex.complex.f_vector();
      long chi = 0;
      for (size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? -1 : 1) * f[i];
      rep.set("name", d.name).set("fvector", f).set("euler", chi).emit(false);
      return Ok;
    }
    if (sdc->parsed()) {
      io::ComplexDoc d = load_complex(in);
      if (d.cubical) throw TopoError(ErrorKind::InputError, "sd needs a simplicial complex");
      DerivedComplex D = geometric(d) ? sd_m(d.complex, m) : sd_m(d.complex.complex, m);
      io::ComplexDoc o = derived_doc(D, d.name + ".sd" + std::to_string(m));
      write_bundle({o, std::nullopt}, out);
      rep.set("fvector", D.complex.f_vector()).emit(data_on_stdout);
      return Ok;
    }
    if (ne->parsed()) {
      io::ComplexDoc d = load_complex(in);
      if (d.cubical) throw TopoError(ErrorKind::InputError, "non-evasiveness needs a simplicial complex");
      NESearchResult r = is_non_evasive(d.complex.complex, budget(g));
      rep.set("status", r.status == SearchStatus::ProvedImpossible ? "ProvedEvasive" : status_name(r.status))
          .set("nodes", r.nodes);
      if (r.status == SearchStatus::Found) {
        write_bundle({d, ne_doc(r.cert, d)}, out);
        rep.set("size", ne_size(r.cert)).emit(data_on_stdout);
        return Ok;
      }
      rep.emit(data_on_stdout);
      return r.status == SearchStatus::BudgetExceeded ? Inconclusive : Failed;
    }
    if (col->parsed()) {
      io::ComplexDoc d = load_complex(in);
      std::optional<std::vector<Face>> tgt;
      if (target != "point") {
        io::ComplexDoc t = load_complex(target);
        tgt = t.cubical ? t.cubes->cells().maximal_cells() : t.complex.complex.facets();
      }
      CollapseSearchResult r = d.cubical ? collapse_search(d.cubes->cells(), tgt, budget(g))
                                         : collapse_search(d.complex.complex, tgt, budget(g));
      rep.set("status", status_name(r.status)).set("nodes", r.nodes);
      if (!r.note.empty()) rep.set("note", r.note);
      if (r.status == SearchStatus::Found) {
        write_bundle({d, collapse_doc(*r.cert, d)}, out);
        rep.set("steps", r.cert->steps.size()).emit(data_on_stdout);
        return Ok;
      }
      rep.emit(data_on_stdout);
      return r.status == SearchStatus::BudgetExceeded ? Inconclusive : Failed;
    }
    if (mor->parsed()) {
      io::ComplexDoc d = load_complex(in);
      require_geometric(d);
      Vec w;
      if (from_vertex >= 0) w = d.complex.at(from_vertex);
      else if (!from_point.empty()) w = parse_point(from_point);
      else throw TopoError(ErrorKind::InputError, "give --from-vertex or --from-point");
      StarMinimalOracle oracle = distance_oracle(d.complex, w);
      MorseMatching M = gradient_matching(d.complex.complex, oracle);
      json pairs = json::array();
      for (const auto& [a, b] : M.pairs) pairs.push_back({io::face_to_json(a), io::face_to_json(b)});
      rep.set("morse_vector", M.morse_vector()).set("pairs", pairs).set("critical", faces_json(M.critical));
      bool ok = is_acyclic(M.pairs, d.complex.complex).acyclic;
      rep.set("acyclic", ok);
      if (check) {
        auto pred = predicted_critical_pairs(d.complex.complex, oracle);
        std::vector<Face> pc;
        for (const auto& pr : pred) pc.push_back(pr.second);
        std::vector<Face> a = M.critical, b = pc;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        bool same = a == b;
        long alt = 0;
        std::vector<long> mv = M.morse_vector();
        for (size_t i = 0; i < mv.size(); ++i) alt += (i % 2 ? -1 : 1) * mv[i];
        bool euler = alt == d.complex.complex.euler();
        rep.set("bijection", same).set("euler_match", euler);
        ok = ok && same && euler;
      }
      rep.emit(false);
      return ok ? Ok : Failed;
    }
    if (cat->parsed()) {
      io::ComplexDoc d = load_complex(in);
      if (!d.cubical) throw TopoError(ErrorKind::InputError, "cat0-collapse needs a cubical complex");
      CollapseCertificate c = collapse_cubical_cat0(*d.cubes, root);
      write_bundle({d, collapse_doc(c, d)}, out);
      rep.set("steps", c.steps.size()).set("root", root).emit(data_on_stdout);
      return Ok;
    }
    if (star->parsed()) {
      io::ComplexDoc d = load_complex(in);
      require_geometric(d);
      Vec x;
      if (!center.empty()) x = parse_point(center);
      else if (d.center) x = *d.center;
      else throw TopoError(ErrorKind::InputError, "no star center given");
      StarCollapseOptions opt;
      opt.seed = g.seed;
      opt.budget = budget(g);
      StarCollapse r = collapse_star_shaped(d.complex, x, opt);
      io::ComplexDoc o;
      o.name = d.name + ".sd" + std::to_string(r.subdivisions);
      o.complex = r.complex;
      write_bundle({o, ne_doc(r.cert, o)}, out);
      rep.set("subdivisions", r.subdivisions).set("size", ne_size(r.cert)).emit(data_on_stdout);
      return Ok;
    }
    if (conv->parsed()) {
      io::ComplexDoc d = load_complex(in);
      require_geometric(d);
      HudsonResult r = collapse_convex(d.complex, g.seed);
      io::ComplexDoc o = derived_doc(r.sd, d.name + ".sd1");
      write_bundle({o, collapse_doc(r.cert, o)}, out);
      rep.set("steps", r.cert.steps.size()).emit(data_on_stdout);
      return Ok;
    }
    if (hud->parsed()) {
      io::ComplexDoc C = load_complex(in);
      require_geometric(C);
      io::Bundle cb = io::bundle_from_json(io::read_json(cert_file));
      if (!cb.certificate || cb.certificate->ne) throw TopoError(ErrorKind::InputError, "a collapse certificate is needed");
      io::ComplexDoc D = load_complex(sub_file);
      require_geometric(D);
      HudsonResult r = hudson_collapse(C.complex, cb.certificate->collapse, D.complex, g.seed);
      io::ComplexDoc o = derived_doc(r.sd, D.name + ".sd1");
      write_bundle({o, collapse_doc(r.cert, o)}, out);
      rep.set("steps", r.cert.steps.size()).set("target_facets", r.target.facets().size()).emit(data_on_stdout);
      return Ok;
    }
    if (ver->parsed()) {
      io::Bundle b;
      if (vcomplex.empty() && vcert.empty()) {
        b = io::bundle_from_json(io::read_json("-"));
      } else {
        if (vcomplex.empty() || vcert.empty()) throw TopoError(ErrorKind::InputError, "give both --complex and --cert");
        b.complex = load_complex(vcomplex);
        b.certificate = io::bundle_from_json(io::read_json(vcert)).certificate;
      }
      if (!b.complex || !b.certificate) throw TopoError(ErrorKind::InputError, "need a complex and a certificate");
      const io::CertificateDoc& c = *b.certificate;
      VerifyResult r;
      if (c.ne) {
        if (b.complex->cubical) throw TopoError(ErrorKind::InputError, "non-evasiveness certificates are simplicial");
        r = verify_ne(b.complex->complex.complex, c.tree);
      } else if (b.complex->cubical) {
        r = verify_certificate(b.complex->cubes->cells(), c.collapse);
      } else {
        r = verify_certificate(b.complex->complex.complex, c.collapse);
      }
      if (r.ok && !c.source_hash.empty() && c.source_hash != io::complex_hash(*b.complex))
        r = VerifyResult::fail(-1, "certificate was made for a different complex");
      rep.set("valid", r.ok);
      if (!r.ok) rep.set("failing_step", r.failing_step).set("reason", r.reason);
      rep.emit(false);
      return r.ok ? Ok : Failed;
    }
  } catch (const TopoError& e) {
    rep.set("error", kind_name(e.kind())).set("message", e.what()).emit(true);
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    rep.set("error", "InputError").set("message", e.what()).emit(true);
    return BadInput;
  }
  return BadInput;
}
