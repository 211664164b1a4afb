#include "slodowy/json_io.hpp"

#include "slodowy/errors.hpp"

namespace slodowy {

namespace {

json rat(const Rat& r) { return to_string(r); }

Rat rat_from(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw InputError("expected a rational string, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<int> ints(const json& j) {
  if (!j.is_array()) throw InputError("expected an integer array, got " + j.dump());
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("expected an integer, got " + x.dump());
    out.push_back(x.get<int>());
  }
  return out;
}

json chars(const Char& c) {
  json vals = json::array();
  for (const auto& v : c.values) vals.push_back(rat(v));
  return vals;
}

}  // namespace

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Pyramid& p) { return {{"shape", to_json(p.shape())}, {"offsets", p.offsets()}}; }

json to_json(const Filling& f) {
  json j = to_json(f.pyramid());
  j["labels"] = f.labels_row_major();
  return j;
}

json to_json(const Mat& m) {
  json entries = json::array();
  for (const auto& [ij, v] : m.entries()) entries.push_back({ij.first, ij.second, rat(v)});
  return {{"n", m.dim()}, {"entries", entries}};
}

json to_json(const Subalg& s) {
  json out = json::array();
  for (const auto& b : s.basis()) out.push_back(to_json(b));
  return out;
}

json to_json(const PBWElem& u) {
  json out = json::array();
  for (const auto& [m, c] : u.terms()) out.push_back({{"mono", m.w}, {"hpow", m.h}, {"coeff", rat(c)}});
  return out;
}

json to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t = e;
    t.push_back(rat(c));
    terms.push_back(t);
  }
  json vars = p.vars() ? json(*p.vars()) : json::array();
  return {{"vars", vars}, {"terms", terms}};
}

json to_json(const GoodReport& r) {
  return {{"GG1", r.gg1}, {"GG2", r.gg2}, {"GG3", r.gg3}, {"GG4", r.gg4},
          {"GG5", r.gg5}, {"GG6", r.gg6}, {"all", r.all()}, {"witness", r.witness}};
}

json to_json(const PremetReport& r) {
  return {{"chi1", r.chi1}, {"chi2", r.chi2}, {"chi3", r.chi3}, {"chi4", r.chi4},
          {"dim_m", r.dim_m}, {"half_orbit_dim", r.half_orbit_dim}, {"all", r.all()}};
}

json to_json(const StageData& sd) {
  json E = json::array();
  for (const auto& m : sd.E) E.push_back(to_json(m));
  return {{"mu", to_json(sd.mu)},
          {"lam", to_json(sd.lam)},
          {"rows", {{"i", sd.rows.receiver}, {"j", sd.rows.donor}}},
          {"pyramid", to_json(sd.pyramid)},
          {"filling", to_json(sd.filling)},
          {"e1", to_json(sd.e1)},
          {"e2", to_json(sd.e2)},
          {"h2prime", to_json(sd.h2prime)},
          {"K", rat(sd.K)},
          {"m1", to_json(sd.m1)},
          {"k", to_json(sd.k)},
          {"m2", to_json(sd.m2)},
          {"E", E},
          {"chi1", chars(sd.chi1)},
          {"chi2", chars(sd.chi2)},
          {"kappa", chars(sd.kappa)}};
}

json to_json(const StageReport& r) {
  json checks = json::object();
  json details = json::object();
  for (const auto& c : r.checks) {
    checks[c.name] = c.ok;
    if (!c.detail.empty()) details[c.name] = c.detail;
  }
  return {{"mu", to_json(r.mu)}, {"lam", to_json(r.lam)}, {"pass", r.all()}, {"checks", checks}, {"witness", details}};
}

json to_json(const Report& r) {
  json checks = json::object();
  json details = json::object();
  for (const auto& c : r.checks) {
    checks[c.name] = c.ok;
    if (!c.detail.empty()) details[c.name] = c.detail;
  }
  json notes = json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  return {{"subject", r.subject}, {"pass", r.all()}, {"checks", checks}, {"witness", details}, {"notes", notes}};
}

Partition partition_from_json(const json& j) { return Partition(ints(j)); }

Pyramid pyramid_from_json(const json& j) {
  return Pyramid(partition_from_json(field(j, "shape")), ints(field(j, "offsets")));
}

Filling filling_from_json(const json& j) { return Filling(pyramid_from_json(j), ints(field(j, "labels"))); }

Mat mat_from_json(const json& j) {
  const json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<int>() < 1) throw InputError("matrix size must be a positive integer");
  const int n = nj.get<int>();
  Mat m(n);
  const json& es = field(j, "entries");
  if (!es.is_array()) throw InputError("matrix entries must be an array");
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("matrix entry must be [i, j, \"p/q\"], got " + e.dump());
    const int r = e[0].get<int>(), c = e[1].get<int>();
    if (r < 1 || r > n || c < 1 || c > n) throw InputError("matrix entry out of range: " + e.dump());
    m.add_to(r, c, rat_from(e[2]));
  }
  return m;
}

PBWElem pbw_from_json(const json& j, int num_letters) {
  if (!j.is_array()) throw InputError("PBW element must be an array of terms");
  PBWElem out;
  for (const auto& t : j) {
    Mono m;
    m.w = ints(field(t, "mono"));
    for (std::size_t k = 0; k < m.w.size(); ++k) {
      if (m.w[k] < 0 || m.w[k] >= num_letters) throw InputError("letter index out of range: " + t.dump());
      if (k > 0 && m.w[k] < m.w[k - 1]) throw InputError("monomial letters must be sorted: " + t.dump());
    }
    const json& h = t.contains("hpow") ? t.at("hpow") : json(0);
    if (!h.is_number_integer() || h.get<int>() < 0) throw InputError("hpow must be a nonnegative integer");
    m.h = h.get<int>();
    out.add(m, rat_from(field(t, "coeff")));
  }
  return out;
}

Poly poly_from_json(const json& j) {
  const json& vj = field(j, "vars");
  if (!vj.is_array()) throw InputError("vars must be an array of names");
  std::vector<std::string> names;
  for (const auto& v : vj) {
    if (!v.is_string()) throw InputError("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  Poly p(make_vars(std::move(names)));
  const json& ts = field(j, "terms");
  if (!ts.is_array()) throw InputError("terms must be an array");
  for (const auto& t : ts) {
    if (!t.is_array() || t.size() != static_cast<std::size_t>(p.nvars()) + 1)
      throw InputError("term needs one exponent per variable plus a coefficient: " + t.dump());
    Poly::Exps e;
    for (int k = 0; k < p.nvars(); ++k) {
      if (!t[k].is_number_integer() || t[k].get<int>() < 0) throw InputError("bad exponent in " + t.dump());
      e.push_back(t[k].get<int>());
    }
    p.add(e, rat_from(t.back()));
  }
  return p;
}

}  // namespace slodowy
