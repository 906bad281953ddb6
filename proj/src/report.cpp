#include "nilsep/report.hpp"

#include "nilsep/group_presets.hpp"
#include "nilsep/suites.hpp"

namespace nilsep {

void RunReport::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool RunReport::ok() const { return first_failure() == nullptr; }

const ReportCheck* RunReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back(Json{{"name", c.name}, {"pass", c.pass}});
  j["checks"] = std::move(cs);
  j["timing_ms"] = timing_ms;
  return j;
}

GroupSource group_source(const std::string& preset, const std::string& spec_file) {
  return {preset, resolve_group(preset, spec_file)};
}

namespace {

Json base_inputs(const GroupSource& src, const Int& p) {
  Json in;
  in["preset"] = src.preset.empty() ? Json(nullptr) : Json(src.preset);
  in["spec"] = spec_to_json(src.group);
  in["p"] = int_to_json(p);
  return in;
}

void require_prime(const Int& p) {
  if (!is_prime(p)) throw Error(ErrorKind::Parse, "p = " + p.get_str() + " is not a prime");
}

Json element_json(const ProductGroupSpec& g, const ProductElement& x) {
  Json j;
  j["text"] = format_element(g, x);
  j["matrix"] = matrix_to_json(x.matrix);
  j["finite"] = g.finite_part.order() > 1 ? Json(g.finite_part.name(x.finite)) : Json(nullptr);
  return j;
}

ProductElement element_from_json(const ProductGroupSpec& g, const Json& j) {
  ProductElement x{matrix_from_json(j.at("matrix"), g.matrix_part.n), g.finite_part.identity()};
  if (!j.at("finite").is_null()) x.finite = g.finite_part.at(j.at("finite").get<std::string>());
  return x;
}

Json ut_json(const MatrixGroupSpec& spec, const UTElement& u) {
  return Json{{"coords", format_matrix_element(spec, u)}, {"matrix", matrix_to_json(u)}};
}

std::string yes_no(bool b) { return b ? "PASS" : "FAIL"; }

// ---- classify

void classify_checks(const ProductGroupSpec& g, const Int& p, const Json& res, RunReport& r) {
  r.check("spec", check_spec(g.matrix_part).ok());
  const std::size_t order = res.at("torsion").at("order").get<std::size_t>();
  const bool is_p = res.at("torsion").at("is_p_group").get<bool>();
  r.check("torsion-order", order == torsion_subgroup(g).order() &&
                               is_p == prime_power_exponent(Int(static_cast<unsigned long>(order)), p).has_value());
  const bool abelian = res.at("quotient_abelian").get<bool>();
  bool witness_ok = false;
  if (abelian) {
    witness_ok = is_abelian(g.matrix_part).abelian;
  } else if (res.at("witness_pair").is_array()) {
    const auto i = res.at("witness_pair")[0].at("index").get<std::size_t>();
    const auto j = res.at("witness_pair")[1].at("index").get<std::size_t>();
    const auto& gens = g.matrix_part.generators;
    witness_ok = i < gens.size() && j < gens.size() && !commutator(gens[i], gens[j]).is_identity();
  }
  r.check("abelian-witness", witness_ok);
  r.check("criterion", res.at("separable").get<bool>() == (is_p && abelian));
}

// ---- witness

void witness_checks(const MatrixGroupSpec& spec, const WitnessReport& w, const std::vector<ConjugatorExponent>& table,
                    unsigned depth, std::size_t cap, RunReport& r, Json* global_out, Json* local_out,
                    Json* scan_out) {
  r.check("spec", check_spec(spec).ok());

  bool table_ok = !table.empty();
  const Int e = ipow(w.q, w.n);
  for (const auto& t : table) table_ok = table_ok && t.modulus > 1 && floor_mod(e * t.k, t.modulus) == 1;
  r.check("exponent-table", table_ok);

  std::string failed;  // first global check that broke; later ones are not evaluated
  std::string global_detail;
  std::optional<bool> lattice;
  try {
    lattice = verify_witness_global(spec, w).lattice_nonconjugate;
  } catch (const VerificationFailedError& err) {
    failed = err.check();
    global_detail = err.what();
  }
  const bool divisibility = failed.empty() || (failed != "divisibility");
  r.check("global-divisibility", divisibility, global_detail);
  r.check("witness-structure", failed.empty() || failed == "lattice", global_detail);
  if (spec.declared_class <= 2) {
    if (!failed.empty()) lattice = false;
    r.check("global-lattice", lattice.value_or(false), global_detail);
  }
  if (global_out) {
    (*global_out)["divisibility_nonconjugate"] = divisibility;
    (*global_out)["lattice_nonconjugate"] = lattice ? Json(*lattice) : Json(nullptr);
  }

  Json local = Json::array();
  for (unsigned m = 1; m <= depth; ++m) {
    const std::string name = "local-m" + std::to_string(m);
    try {
      const LocalVerification lv = verify_witness_local(spec, w, m, cap);
      r.check(name, lv.exact, "k = " + lv.k.get_str() + " mod " + lv.modulus.get_str());
      if (lv.orbit_conjugate)
        r.check("orbit-m" + std::to_string(m), *lv.orbit_conjugate,
                "quotient order " + std::to_string(*lv.quotient_order));
      local.push_back(Json{{"m", m},
                           {"modulus", int_to_json(lv.modulus)},
                           {"k", int_to_json(lv.k)},
                           {"conjugator", matrix_to_json(lv.conjugator)},
                           {"exact", lv.exact},
                           {"orbit_conjugate", lv.orbit_conjugate ? Json(*lv.orbit_conjugate) : Json(nullptr)},
                           {"quotient_order", lv.quotient_order ? Json(*lv.quotient_order) : Json(nullptr)}});
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::LocalCheckFailed) throw;
      r.check(name, false, err.what());
      local.push_back(Json{{"m", m}, {"error", err.what()}});
    }
  }
  if (local_out) *local_out = std::move(local);

  ScanOptions so;
  so.max_order = cap;
  so.witness = &w;
  const TowerScan scan = scan_tower(spec, w.u, w.v, w.p, depth, so);
  r.check("scan-never-separates", !scan.separated_at, scan.summary);
  if (scan_out) {
    Json levels = Json::array();
    for (const auto& l : scan.levels)
      levels.push_back(Json{{"level", l.level},
                            {"conjugate", l.conjugate ? Json(*l.conjugate) : Json(nullptr)},
                            {"method", l.method},
                            {"quotient_order", l.quotient_order ? Json(*l.quotient_order) : Json(nullptr)}});
    *scan_out = Json{{"levels", std::move(levels)}, {"summary", scan.summary}};
  }
}

// ---- separate

void separation_checks(const ProductGroupSpec& g, const Int& p, unsigned level, const ProductElement& a,
                       const ProductElement& b, std::size_t expected_order, std::size_t cap, RunReport& r) {
  const GroupHom<ProductElement> hom = product_congruence_hom(g, p, level, std::max(cap, kDefaultClosureCap));
  r.check("quotient-p-group", hom.codomain.order() == expected_order && hom.codomain.is_p_group(p));
  r.check("images-nonconjugate", !conjugate_in_finite(hom.codomain, hom(a), hom(b)).conjugate);
}

// ---- scan

Json scan_json(const TowerScan& scan) {
  Json levels = Json::array();
  for (const auto& l : scan.levels)
    levels.push_back(Json{{"level", l.level},
                          {"conjugate", l.conjugate ? Json(*l.conjugate) : Json(nullptr)},
                          {"method", l.method},
                          {"quotient_order", l.quotient_order ? Json(*l.quotient_order) : Json(nullptr)},
                          {"size_limited", l.size_limited}});
  return Json{{"levels", std::move(levels)},
              {"separated_at", scan.separated_at ? Json(*scan.separated_at) : Json(nullptr)},
              {"summary", scan.summary}};
}

void scan_checks(const MatrixGroupSpec& spec, const UTElement& x, const UTElement& y, const Int& p, unsigned depth,
                 std::size_t cap, const WitnessReport* w, const Json& expected, RunReport& r) {
  r.check("spec", check_spec(spec).ok());
  ScanOptions so;
  so.max_order = cap;
  so.witness = w;
  const TowerScan scan = scan_tower(spec, x, y, p, depth, so);
  r.check("scan-reproduces", expected.is_null() || scan_json(scan) == expected);
  if (w) r.check("witness-never-separated", !scan.separated_at);
  if (!x.is_identity() || !y.is_identity()) {
    // a separated pair must differ at the reported level
    bool consistent = true;
    if (scan.separated_at) {
      const Modulus mod = make_modulus(p, *scan.separated_at);
      consistent = !(reduce_mod(x, mod) == reduce_mod(y, mod));
    }
    r.check("separation-consistent", consistent);
  }
}

WitnessReport witness_from_json(const MatrixGroupSpec& spec, const Json& res) {
  const std::size_t n = spec.n;
  WitnessReport w{json_to_int(res.at("p")),
                  matrix_from_json(res.at("a").at("matrix"), n),
                  matrix_from_json(res.at("b").at("matrix"), n),
                  res.at("b").at("index").get<std::size_t>(),
                  matrix_from_json(res.at("c").at("matrix"), n),
                  json_to_int(res.at("q")),
                  res.at("n").get<unsigned>(),
                  matrix_from_json(res.at("u").at("matrix"), n),
                  matrix_from_json(res.at("v").at("matrix"), n),
                  {{}, Lattice(upper_count(n)), {}, 1, 0},
                  {}};
  for (const auto& t : res.at("conjugator_exponents"))
    w.conjugator_exponents.push_back(
        {t.at("m").get<unsigned>(), json_to_int(t.at("modulus")), json_to_int(t.at("k"))});
  return w;
}

}  // namespace

RunReport run_classify(const GroupSource& src, const Int& p) {
  require_prime(p);
  const ProductGroupSpec& g = src.group;
  verify_spec(g.matrix_part);
  RunReport r;
  r.command = "classify";
  r.inputs = base_inputs(src, p);
  const SeparabilityVerdict v = classify(g, p);
  const std::string fp = "F_" + p.get_str();
  Json res;
  res["p"] = int_to_json(p);
  res["separable"] = v.separable;
  res["reason"] = v.reason;
  res["torsion"] = Json{{"order", v.torsion_order}, {"is_p_group", v.torsion_is_p_group}};
  res["quotient_abelian"] = v.quotient_abelian;
  if (v.witness_pair) {
    const auto [i, j] = *v.witness_pair;
    res["witness_pair"] = Json::array({Json{{"index", i}, {"name", g.matrix_part.generator_name(i)}},
                                       Json{{"index", j}, {"name", g.matrix_part.generator_name(j)}}});
  } else {
    res["witness_pair"] = nullptr;
  }
  std::string line;
  if (v.separable) {
    line = "conjugacy " + fp + "-separable: tau(G) has order " + std::to_string(v.torsion_order) +
           " (a power of " + p.get_str() + ") and G/tau(G) is abelian";
  } else {
    std::vector<std::string> why;
    if (!v.quotient_abelian) {
      std::string w = "G/tau(G) non-abelian";
      if (v.witness_pair)
        w += ", witness [" + g.matrix_part.generator_name(v.witness_pair->first) + "," +
             g.matrix_part.generator_name(v.witness_pair->second) + "]!=1";
      why.push_back(w);
    }
    if (!v.torsion_is_p_group)
      why.push_back("tau(G) has order " + std::to_string(v.torsion_order) + ", not a power of " + p.get_str());
    line = "NOT conjugacy " + fp + "-separable: " + why[0] + (why.size() > 1 ? "; " + why[1] : "");
  }
  res["summary"] = line;
  r.lines.push_back(g.name() + ": " + line);
  classify_checks(g, p, res, r);
  r.result = std::move(res);
  return r;
}

RunReport run_witness(const GroupSource& src, const Int& p, unsigned depth, const RunOptions& opts) {
  require_prime(p);
  if (depth < 1) throw Error(ErrorKind::Parse, "-K must be at least 1");
  MatrixGroupSpec spec = src.group.matrix_part;
  if (opts.z2_rep) spec.z2_rep = opts.z2_rep;
  verify_spec(spec);
  RunReport r;
  r.command = "witness";
  r.inputs = base_inputs(src, p);
  if (opts.z2_rep) r.inputs["spec"]["z2_rep"] = matrix_to_json(*opts.z2_rep);
  r.inputs["K"] = depth;
  r.inputs["max_order"] = opts.max_order;

  const WitnessReport w = make_witness(spec, p);
  Json res;
  res["p"] = int_to_json(p);
  res["q"] = int_to_json(w.q);
  res["n"] = w.n;
  res["a"] = ut_json(spec, w.a);
  Json b = ut_json(spec, w.b);
  b["index"] = w.b_index;
  b["name"] = spec.generator_name(w.b_index);
  res["b"] = std::move(b);
  res["c"] = ut_json(spec, w.c);
  res["u"] = ut_json(spec, w.u);
  res["v"] = ut_json(spec, w.v);
  Json basis = Json::array();
  for (const auto& col : w.certificate.center_basis.generators()) {
    Json v = Json::array();
    for (const auto& x : col) v.push_back(int_to_json(x));
    basis.push_back(std::move(v));
  }
  Json coords = Json::array();
  for (const auto& x : w.certificate.c_coords) coords.push_back(int_to_json(x));
  Json in_basis = Json::array();
  for (const auto& x : w.certificate.c_in_basis) in_basis.push_back(int_to_json(x));
  res["certificate"] = Json{{"c_coords", std::move(coords)},
                            {"center_basis", std::move(basis)},
                            {"c_in_basis", std::move(in_basis)},
                            {"exponent", int_to_json(w.certificate.exponent)},
                            {"offending_index", w.certificate.offending_index}};
  Json table = Json::array();
  for (const auto& t : w.conjugator_exponents)
    table.push_back(Json{{"m", t.level}, {"modulus", int_to_json(t.modulus)}, {"k", int_to_json(t.k)}});
  res["conjugator_exponents"] = std::move(table);

  Json global, local, scan;
  witness_checks(spec, w, w.conjugator_exponents, depth, opts.max_order, r, &global, &local, &scan);
  res["global"] = std::move(global);
  res["local"] = std::move(local);
  res["scan"] = std::move(scan);
  r.result = std::move(res);

  r.lines.push_back(src.group.name() + ", p = " + p.get_str() + ": q = " + w.q.get_str() +
                    ", n = " + std::to_string(w.n) + ", b = " + spec.generator_name(w.b_index));
  r.lines.push_back("pair u = " + format_matrix_element(spec, w.u) + ", v = " + format_matrix_element(spec, w.v));
  std::size_t local_pass = 0;
  for (const auto& c : r.checks)
    if (c.name.rfind("local-m", 0) == 0 && c.pass) ++local_pass;
  bool global_pass = true;
  for (const auto& c : r.checks)
    if (c.name.rfind("global-", 0) == 0) global_pass = global_pass && c.pass;
  r.lines.push_back("global non-conjugacy " + yes_no(global_pass));
  r.lines.push_back(std::to_string(local_pass) + "/" + std::to_string(depth) + " local checks pass");
  return r;
}

RunReport run_separate(const GroupSource& src, const Int& p, const std::string& a_text, const std::string& b_text,
                       const RunOptions& opts) {
  require_prime(p);
  const ProductGroupSpec& g = src.group;
  verify_spec(g.matrix_part);
  const ProductElement a = parse_element(g, a_text);
  const ProductElement b = parse_element(g, b_text);
  RunReport r;
  r.command = "separate";
  r.inputs = base_inputs(src, p);
  r.inputs["a"] = element_json(g, a);
  r.inputs["b"] = element_json(g, b);
  r.inputs["max_order"] = opts.max_order;
  r.check("spec", true);
  Json res;
  try {
    const SeparationCertificate cert = separate_prop4(g, a, b, p, std::max(opts.max_order, kDefaultClosureCap));
    res["verdict"] = "separated";
    res["branch"] = cert.branch;
    res["level"] = cert.level;
    res["quotient_order"] = cert.quotient.order();
    res["image_a"] = cert.quotient.name(cert.image_a);
    res["image_b"] = cert.quotient.name(cert.image_b);
    separation_checks(g, p, cert.level, a, b, cert.quotient.order(), opts.max_order, r);
    r.lines.push_back("separated (" + cert.branch + ") modulo " + p.get_str() + "^" + std::to_string(cert.level) +
                      ": quotient of order " + std::to_string(cert.quotient.order()) + ", images " +
                      cert.quotient.name(cert.image_a) + " and " + cert.quotient.name(cert.image_b) +
                      " non-conjugate");
  } catch (const AreConjugateError& e) {
    res["verdict"] = "conjugate";
    res["conjugator"] = element_json(g, e.conjugator());
    r.check("conjugator-verifies", product_conj(g, a, e.conjugator()) == b);
    r.lines.push_back("AreConjugate: conjugator " + format_element(g, e.conjugator()));
  }
  r.result = std::move(res);
  return r;
}

RunReport run_scan(const GroupSource& src, const Int& p, const std::string& x_text, const std::string& y_text,
                   unsigned depth, const RunOptions& opts) {
  require_prime(p);
  if (depth < 1) throw Error(ErrorKind::Parse, "-K must be at least 1");
  MatrixGroupSpec spec = src.group.matrix_part;
  if (opts.z2_rep) spec.z2_rep = opts.z2_rep;
  verify_spec(spec);
  RunReport r;
  r.command = "scan";
  r.inputs = base_inputs(src, p);
  if (opts.z2_rep) r.inputs["spec"]["z2_rep"] = matrix_to_json(*opts.z2_rep);
  r.inputs["K"] = depth;
  r.inputs["max_order"] = opts.max_order;

  std::optional<WitnessReport> w;
  UTElement x = UTElement::identity(spec.n), y = x;
  if (x_text.empty() && y_text.empty()) {
    w = make_witness(spec, p);
    x = w->u;
    y = w->v;
    r.inputs["pair"] = "witness";
  } else {
    x = parse_element(src.group, x_text).matrix;
    y = parse_element(src.group, y_text).matrix;
    r.inputs["pair"] = "given";
  }
  r.inputs["x"] = ut_json(spec, x);
  r.inputs["y"] = ut_json(spec, y);
  if (w) {
    Json wj;
    wj["q"] = int_to_json(w->q);
    wj["n"] = w->n;
    wj["b"] = Json{{"index", w->b_index}, {"matrix", matrix_to_json(w->b)}};
    r.inputs["witness"] = std::move(wj);
  }
  ScanOptions so;
  so.max_order = opts.max_order;
  so.witness = w ? &*w : nullptr;
  const TowerScan scan = scan_tower(spec, x, y, p, depth, so);
  r.result = scan_json(scan);
  scan_checks(spec, x, y, p, depth, opts.max_order, so.witness, r.result, r);
  for (const auto& l : scan.levels)
    r.lines.push_back("level " + std::to_string(l.level) + ": " +
                      (l.conjugate ? (*l.conjugate ? "conjugate" : "NOT conjugate") : "undetermined") + " (" +
                      l.method + (l.quotient_order ? ", order " + std::to_string(*l.quotient_order) : "") + ")");
  r.lines.push_back(scan.summary);
  return r;
}

RunReport run_selftest(const SelftestOptions& opts) {
  RunReport r;
  r.command = "selftest";
  r.inputs["corpus"] = opts.corpus;
  r.inputs["extra_tables"] = opts.extra_tables;
  r.inputs["seed"] = opts.seed;

  std::vector<FiniteGroup> corpus;
  if (opts.corpus) corpus = suites::default_corpus();
  for (const auto& path : opts.extra_tables) {
    try {
      corpus.push_back(load_finite_group_file(path));
    } catch (const InvalidTableError& e) {
      r.check(e.property(), false, path + ": " + e.what());
    }
  }
  std::vector<suites::SuiteResult> results = suites::lattice_suites(opts.seed);
  if (!corpus.empty()) {
    results.push_back(suites::coset_criterion_corpus(corpus));
    results.push_back(suites::quotient_corpus(corpus));
  }
  Json rs = Json::array();
  for (const auto& s : results) {
    r.check(s.name, s.ok(), s.first_failure);
    rs.push_back(Json{{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}});
    r.lines.push_back(s.name + ": " + std::to_string(s.cases - s.failures) + "/" + std::to_string(s.cases));
  }
  Json names = Json::array();
  for (const auto& g : corpus) names.push_back(g.label());
  r.result = Json{{"corpus", std::move(names)}, {"suites", std::move(rs)}};
  return r;
}

std::vector<ReportCheck> reverify(const Json& report) {
  try {
    const std::string command = report.at("command").get<std::string>();
    const Json& in = report.at("inputs");
    const Json& res = report.at("result");
    RunReport r;
    if (command == "selftest") {
      SelftestOptions o;
      o.corpus = in.at("corpus").get<bool>();
      o.extra_tables = in.at("extra_tables").get<std::vector<std::string>>();
      o.seed = in.at("seed").get<std::uint64_t>();
      return run_selftest(o).checks;
    }
    const ProductGroupSpec g = spec_from_json(in.at("spec"));
    const Int p = json_to_int(in.at("p"));
    if (command == "classify") {
      classify_checks(g, p, res, r);
    } else if (command == "witness") {
      const WitnessReport w = witness_from_json(g.matrix_part, res);
      MatrixGroupSpec spec = g.matrix_part;
      witness_checks(spec, w, w.conjugator_exponents, in.at("K").get<unsigned>(),
                     in.at("max_order").get<std::size_t>(), r, nullptr, nullptr, nullptr);
    } else if (command == "separate") {
      r.check("spec", check_spec(g.matrix_part).ok());
      const ProductElement a = element_from_json(g, in.at("a"));
      const ProductElement b = element_from_json(g, in.at("b"));
      if (res.at("verdict") == "separated") {
        separation_checks(g, p, res.at("level").get<unsigned>(), a, b, res.at("quotient_order").get<std::size_t>(),
                          in.at("max_order").get<std::size_t>(), r);
      } else {
        const ProductElement h = element_from_json(g, res.at("conjugator"));
        r.check("conjugator-verifies", product_conj(g, a, h) == b);
      }
    } else if (command == "scan") {
      const MatrixGroupSpec& spec = g.matrix_part;
      const UTElement x = matrix_from_json(in.at("x").at("matrix"), spec.n);
      const UTElement y = matrix_from_json(in.at("y").at("matrix"), spec.n);
      std::optional<WitnessReport> w;
      if (in.contains("witness")) {
        const Json& wj = in.at("witness");
        w = WitnessReport{p,
                          spec.z2_rep.value_or(UTElement::identity(spec.n)),
                          matrix_from_json(wj.at("b").at("matrix"), spec.n),
                          wj.at("b").at("index").get<std::size_t>(),
                          UTElement::identity(spec.n),
                          json_to_int(wj.at("q")),
                          wj.at("n").get<unsigned>(),
                          x,
                          y,
                          {{}, Lattice(upper_count(spec.n)), {}, 1, 0},
                          {}};
        w->c = commutator(w->a, w->b);
      }
      scan_checks(spec, x, y, p, in.at("K").get<unsigned>(), in.at("max_order").get<std::size_t>(),
                  w ? &*w : nullptr, res, r);
    } else {
      throw Error(ErrorKind::Parse, "unknown command '" + command + "' in report");
    }
    return r.checks;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed report: ") + e.what());
  }
}

}  // namespace nilsep
