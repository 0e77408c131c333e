#include "flagtwist/io.hpp"

#include <fstream>

#include "flagtwist/errors.hpp"

namespace flagtwist {

Json gauss_rat_to_json(const GaussRat& x) {
  return Json{{"re", GaussRat::frac_str(x.re())}, {"im", GaussRat::frac_str(x.im())}};
}

GaussRat gauss_rat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw Error("scalar: expected object with fields \"re\" and \"im\"");
  return GaussRat(GaussRat::parse_frac(j.at("re").get<std::string>()),
                  GaussRat::parse_frac(j.at("im").get<std::string>()));
}

Json point_to_json(const ProjPoint& p) {
  Json out = Json::array();
  for (int i = 0; i < 3; ++i) out.push_back(gauss_rat_to_json(p[i]));
  return out;
}

ProjPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3)
    throw Error("point: expected an array of 3 scalars");
  return ProjPoint(gauss_rat_from_json(j[0]), gauss_rat_from_json(j[1]),
                   gauss_rat_from_json(j[2]));
}

Json config_to_json(const Configuration& cfg) {
  Json conics = Json::array();
  for (const Conic& c : cfg.conics) {
    Json entry{{"q", point_to_json(c.q)}};
    if (!c.twistor) entry["m"] = point_to_json(c.m);
    conics.push_back(std::move(entry));
  }
  return Json{{"conics", std::move(conics)}};
}

Configuration config_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("conics") || !j.at("conics").is_array())
    throw Error("configuration: expected object with a \"conics\" array");
  std::vector<Conic> cs;
  std::size_t index = 0;
  for (const Json& entry : j.at("conics")) {
    try {
      if (!entry.contains("q")) throw Error("missing field \"q\"");
      ProjPoint q = point_from_json(entry.at("q"));
      ProjPoint m = entry.contains("m") ? point_from_json(entry.at("m")) : q.conj();
      cs.emplace_back(std::move(q), std::move(m));
    } catch (const Error& e) {
      throw Error("conic #" + std::to_string(index) + ": " + e.what());
    }
    ++index;
  }
  return classify_config(std::move(cs));
}

void save_config(const std::string& path, const Configuration& cfg) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  out << config_to_json(cfg).dump(2) << "\n";
}

Configuration load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
  return config_from_json(j);
}

Json biform_to_json(const BiForm& f) {
  Json terms = Json::array();
  const auto& mons = monomial_basis(f.a(), f.b());
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    terms.push_back(Json{{"pexp", {mons[i].p[0], mons[i].p[1], mons[i].p[2]}},
                         {"lexp", {mons[i].l[0], mons[i].l[1], mons[i].l[2]}},
                         {"coeff", gauss_rat_to_json(f.coeff(i))}});
  }
  return Json{{"bidegree", {f.a(), f.b()}}, {"terms", std::move(terms)}};
}

BiForm biform_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bidegree") || !j.contains("terms"))
    throw Error("form: expected object with \"bidegree\" and \"terms\"");
  BiForm f(j.at("bidegree")[0].get<int>(), j.at("bidegree")[1].get<int>());
  for (const Json& t : j.at("terms")) {
    BiMonomial m;
    for (int i = 0; i < 3; ++i) {
      m.p[i] = t.at("pexp")[i].get<int>();
      m.l[i] = t.at("lexp")[i].get<int>();
    }
    f.add_coeff(m, gauss_rat_from_json(t.at("coeff")));
  }
  return f;
}

}  // namespace flagtwist
