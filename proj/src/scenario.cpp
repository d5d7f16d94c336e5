#include "anosov/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

#include "anosov/errors.hpp"

namespace anosov {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw ValidationError("scenario: " + msg);
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) {
        ok = true;
        break;
      }
    if (!ok) fail("unknown key '" + it.key() + "' in " + where);
  }
}

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where + " requires '" + key + "'");
  return *it;
}

int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + " must be an integer");
  return j.get<int>();
}

double get_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + " must be a number");
  return j.get<double>();
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where + " must be a string");
  return j.get<std::string>();
}

std::vector<double> get_number_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + " must be an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(get_number(e, where + " entry"));
  return out;
}

Cplx parse_entry(const json& e, const std::string& where, bool& complex_seen) {
  if (e.is_number()) return Cplx(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    double im = e[1].get<double>();
    if (im != 0.0) complex_seen = true;
    return Cplx(e[0].get<double>(), im);
  }
  fail(where + ": matrix entries must be numbers or [re, im] pairs");
}

CMat parse_rect(const json& m, const std::string& where, bool& complex_seen) {
  if (!m.is_array() || m.empty()) fail(where + " must be a nonempty array of rows");
  const std::size_t rows = m.size();
  if (!m[0].is_array() || m[0].empty())
    fail(where + " rows must be nonempty arrays");
  const std::size_t cols = m[0].size();
  CMat out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!m[i].is_array() || m[i].size() != cols)
      fail(where + " rows must all have the same length");
    for (std::size_t j = 0; j < cols; ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_entry(m[i][j], where, complex_seen);
  }
  return out;
}

Mat parse_matrix(const json& m, const std::string& where) {
  bool cx = false;
  CMat c = parse_rect(m, where, cx);
  if (c.rows() != c.cols()) fail(where + " must be square");
  return Mat(std::move(c), cx ? Field::complex_field : Field::real);
}

GroupPresentation parse_presentation(const json& j) {
  check_keys(j, "presentation", {"kind", "rank", "genus", "relators"});
  std::string kind = get_string(require(j, "kind", "presentation"), "presentation.kind");
  if (kind == "free") {
    if (j.contains("genus") || j.contains("relators"))
      fail("free presentation takes only 'rank'");
    return GroupPresentation::free_group(
        get_int(require(j, "rank", "free presentation"), "presentation.rank"));
  }
  if (kind == "surface") {
    if (j.contains("rank") || j.contains("relators"))
      fail("surface presentation takes only 'genus'");
    return GroupPresentation::surface(
        get_int(require(j, "genus", "surface presentation"), "presentation.genus"));
  }
  if (kind == "custom") {
    if (j.contains("genus")) fail("custom presentation takes 'rank' and 'relators'");
    int rank = get_int(require(j, "rank", "custom presentation"), "presentation.rank");
    const json& rels = require(j, "relators", "custom presentation");
    if (!rels.is_array()) fail("presentation.relators must be an array of words");
    std::vector<Word> relators;
    for (const json& r : rels)
      relators.push_back(Word::parse(get_string(r, "relator")));
    return GroupPresentation::custom(rank, std::move(relators));
  }
  fail("presentation.kind must be free, surface or custom");
}

Representation parse_representation(const json& j, const GroupPresentation& P,
                                    std::optional<ComposedFuchsian>* composed) {
  check_keys(j, "representation", {"builder", "mu", "tilt", "q", "base", "images"});
  std::string builder =
      get_string(require(j, "builder", "representation"), "representation.builder");
  if (builder == "schottky") {
    if (P.kind() != PresentationKind::free_group)
      fail("schottky builder needs a free presentation");
    double mu = j.contains("mu") ? get_number(j["mu"], "representation.mu") : 3.0;
    double tilt = j.contains("tilt") ? get_number(j["tilt"], "representation.tilt")
                                     : 0.78539816339744831;
    return schottky_rep(P.rank(), mu, tilt);
  }
  if (builder == "genus2") {
    if (!(P == GroupPresentation::surface(2)))
      fail("genus2 builder needs the surface presentation of genus 2");
    return genus2_rep();
  }
  if (builder == "sym_power") {
    int q = get_int(require(j, "q", "sym_power builder"), "representation.q");
    Representation base =
        parse_representation(require(j, "base", "sym_power builder"), P, nullptr);
    ComposedFuchsian cf = compose_fuchsian(base, q);
    Representation rep = cf.composed;
    if (composed) *composed = std::move(cf);
    return rep;
  }
  if (builder == "explicit") {
    const json& imgs = require(j, "images", "explicit builder");
    if (!imgs.is_array()) fail("representation.images must be an array of matrices");
    std::vector<Mat> mats;
    mats.reserve(imgs.size());
    for (std::size_t g = 0; g < imgs.size(); ++g) {
      std::ostringstream os;
      os << "representation.images[" << g << "]";
      mats.push_back(parse_matrix(imgs[g], os.str()));
    }
    return Representation(P, std::move(mats));
  }
  fail("representation.builder must be schottky, genus2, sym_power or explicit");
}

RealCharacter parse_character(const json& j, const GroupPresentation& P,
                              const std::string& where) {
  std::vector<double> v = get_number_array(j, where);
  if (static_cast<int>(v.size()) != P.rank())
    fail(where + " needs one value per generator");
  RealCharacter chi(std::move(v));
  character_validate(P, chi);
  return chi;
}

XiSpec parse_xi(const json& j) {
  check_keys(j, "suspension.xi", {"type", "params", "images"});
  std::string type = get_string(require(j, "type", "suspension.xi"), "xi.type");
  if (type == "identity") {
    if (j.contains("params") || j.contains("images"))
      fail("identity xi takes no parameters");
    return XiSpec::identity();
  }
  if (type == "signs")
    return XiSpec::signs(get_number_array(require(j, "params", "signs xi"), "xi.params"));
  if (type == "rotation")
    return XiSpec::rotation(
        get_number_array(require(j, "params", "rotation xi"), "xi.params"));
  if (type == "explicit") {
    const json& imgs = require(j, "images", "explicit xi");
    if (!imgs.is_array()) fail("xi.images must be an array of matrices");
    std::vector<Mat> mats;
    for (std::size_t g = 0; g < imgs.size(); ++g) {
      std::ostringstream os;
      os << "xi.images[" << g << "]";
      mats.push_back(parse_matrix(imgs[g], os.str()));
    }
    return XiSpec::explicit_images(std::move(mats));
  }
  fail("xi.type must be identity, signs, rotation or explicit");
}

KappaSpec parse_kappa(const json& j) {
  check_keys(j, "suspension.kappa", {"type", "seed", "blocks"});
  std::string type = get_string(require(j, "type", "suspension.kappa"), "kappa.type");
  if (type == "zero") {
    if (j.contains("seed") || j.contains("blocks"))
      fail("zero kappa takes no parameters");
    return KappaSpec::zero();
  }
  if (type == "coboundary") {
    bool cx = false;
    return KappaSpec::coboundary(
        parse_rect(require(j, "seed", "coboundary kappa"), "kappa.seed", cx));
  }
  if (type == "explicit") {
    const json& blocks = require(j, "blocks", "explicit kappa");
    if (!blocks.is_array()) fail("kappa.blocks must be an array of matrices");
    std::vector<CMat> out;
    for (std::size_t g = 0; g < blocks.size(); ++g) {
      std::ostringstream os;
      os << "kappa.blocks[" << g << "]";
      bool cx = false;
      out.push_back(parse_rect(blocks[g], os.str(), cx));
    }
    return KappaSpec::explicit_table(std::move(out));
  }
  fail("kappa.type must be zero, coboundary or explicit");
}

}  // namespace

DomainSource Scenario::domain_source() const {
  if (fuchsian_route()) return DomainSource::fuchsian(*composed);
  return DomainSource::generic(rep);
}

Scenario parse_scenario_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  check_keys(j, "scenario",
             {"name", "presentation", "representation", "route", "characters",
              "suspension"});

  Scenario s;
  if (j.contains("name")) s.name = get_string(j["name"], "name");
  s.presentation = parse_presentation(require(j, "presentation", "scenario"));
  s.rep = parse_representation(require(j, "representation", "scenario"),
                               s.presentation, &s.composed);

  if (j.contains("route")) {
    std::string route = get_string(j["route"], "route");
    if (route == "generic") {
      s.force_generic = true;
    } else if (route == "fuchsian") {
      if (!s.composed)
        fail("route 'fuchsian' needs a sym_power representation");
    } else {
      fail("route must be fuchsian or generic");
    }
  }

  if (j.contains("characters")) {
    const json& c = j["characters"];
    check_keys(c, "characters", {"phi", "psi1", "psi2"});
    if (c.contains("phi"))
      s.phi = parse_character(c["phi"], s.presentation, "characters.phi");
    if (c.contains("psi1"))
      s.psi1 = parse_character(c["psi1"], s.presentation, "characters.psi1");
    if (c.contains("psi2"))
      s.psi2 = parse_character(c["psi2"], s.presentation, "characters.psi2");
  }

  if (j.contains("suspension")) {
    const json& u = j["suspension"];
    check_keys(u, "suspension", {"p", "xi", "kappa"});
    if (!s.phi) fail("suspension requires characters.phi");
    SuspensionSpec spec;
    spec.p = get_int(require(u, "p", "suspension"), "suspension.p");
    spec.q = s.rep.dim();
    spec.phi = *s.phi;
    spec.zeta = s.rep;
    if (u.contains("xi")) spec.xi = parse_xi(u["xi"]);
    if (u.contains("kappa")) spec.kappa = parse_kappa(u["kappa"]);
    s.suspension = std::move(spec);
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str());
}

}  // namespace anosov
