#include "holr/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "holr/braidgrpd.hpp"
#include "holr/selftest.hpp"

namespace holr::cli {

using json = nlohmann::json;
using Eigen::MatrixXcd;

namespace {

/// Malformed invocation or spec; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const WeylChar& c) { return {{"a", to_json(c.a)}, {"b", to_json(c.b)}, {"m", to_json(c.m)}}; }

cplx parse_complex(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  throw UsageError(what + " must be a number or a [re, im] pair");
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw UsageError("missing field '" + key + "' in " + where);
  return j.at(key);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("--N expects an integer or a comma-separated list, got '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("--N is empty");
  return out;
}

json load_spec(const std::string& src) {
  if (src.empty()) throw UsageError("an input file or inline JSON spec is required");
  std::string text = src;
  const auto first = src.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (src[first] != '{' && src[first] != '[')) {
    std::ifstream in(src);
    if (!in) throw UsageError("cannot read input file '" + src + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

json error_object(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

CrossingData parse_crossing(const json& j) {
  CrossingData c;
  const json& sign = field(j, "sign", "crossing");
  if (!sign.is_number_integer() || (sign.get<int>() != 1 && sign.get<int>() != -1)) throw UsageError("sign must be 1 or -1");
  c.sign = sign.get<int>();
  const json& regions = field(j, "regions", "crossing");
  static const char* rnames[4] = {"N", "W", "S", "E"};
  for (int r = 0; r < 4; ++r) c.gamma[r] = parse_complex(field(regions, rnames[r], "regions"), std::string("γ_") + rnames[r]);
  const json& segs = field(j, "segments", "crossing");
  const cplx derived_alpha[4] = {c.gamma[RW] - c.gamma[RN], c.gamma[RS] - c.gamma[RW], c.gamma[RS] - c.gamma[RE],
                                 c.gamma[RE] - c.gamma[RN]};
  static const char* snames[4] = {"1", "2", "1p", "2p"};
  LogWeylChar* slots[4] = {&c.lc1, &c.lc2, &c.lc1p, &c.lc2p};
  for (int s = 0; s < 4; ++s) {
    const json& sj = field(segs, snames[s], "segments");
    const std::string where = std::string("segment ") + snames[s];
    slots[s]->beta = parse_complex(field(sj, "beta", where), where + " beta");
    slots[s]->mu = parse_complex(field(sj, "mu", where), where + " mu");
    slots[s]->alpha = sj.contains("alpha") ? parse_complex(sj.at("alpha"), where + " alpha") : derived_alpha[s];
  }
  if (j.contains("kappa") && !(j.at("kappa").is_string() && j.at("kappa").get<std::string>() == "auto")) {
    c.kappa = parse_complex(j.at("kappa"), "kappa");
  }
  return c;
}

json zetas_json(const ZetaSet& z) {
  static const char* rnames[4] = {"N", "W", "S", "E"};
  json out = json::object();
  for (int r = 0; r < 4; ++r) {
    json e = {{"zeta0", to_json(z.z0[r])}};
    e["zeta1"] = z.pinched ? json(nullptr) : to_json(z.z1[r]);
    out[rnames[r]] = e;
  }
  return out;
}

struct Options {
  std::string N;  // empty: command default
  double tol_rel = 1e-8;
  double tol_singular = 1e-9;
  unsigned long long seed = kDefaultSeed;
  std::string format = "json";
  bool kashaev = false;
  bool pinched = false;
  bool matrix_free = false;
  int samples = 4;
  std::string spec;
};

RootConfig make_config(const Options& o, int N) {
  Tolerance t;
  t.rel = o.tol_rel;
  t.singular = o.tol_singular;
  try {
    return RootConfig(N, t);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int single_N(const Options& o) {
  const std::vector<int> ns = parse_int_list(o.N.empty() ? "2" : o.N);
  if (ns.size() != 1) throw UsageError("--N must be a single integer for this command");
  return ns.front();
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const std::vector<int> ns = parse_int_list(o.N.empty() ? "2,3,5,7" : o.N);
  for (int n : ns) make_config(o, n);
  Tolerance t;
  t.rel = o.tol_rel;
  t.singular = o.tol_singular;
  const std::vector<Check> checks = run_selftest(ns, o.seed, t, o.samples);
  bool ok = true;
  json list = json::array();
  for (const Check& c : checks) {
    ok = ok && c.passed();
    list.push_back({{"name", c.name}, {"N", c.N}, {"deviation", c.deviation}, {"tolerance", c.tolerance}, {"passed", c.passed()}});
  }
  if (o.format == "text") {
    for (const Check& c : checks)
      out << (c.passed() ? "ok   " : "FAIL ") << "N=" << c.N << "  " << c.name << "  " << c.deviation << " <= " << c.tolerance
          << "\n";
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
  } else {
    out << json{{"command", "selftest"}, {"N", ns}, {"seed", o.seed}, {"checks", list}, {"passed", ok}}.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_rmat(const Options& o, std::ostream& out) {
  const RootConfig cfg = make_config(o, single_N(o));
  json res = {{"command", "rmat"}, {"N", cfg.N}};
  if (o.kashaev) {
    const RTensor r = kashaev_rmat(cfg);
    res["kind"] = "kashaev";
    res["pinched"] = true;
    res["entries"] = to_json(r.entries);
    res["det_lu"] = to_json(det_lu(braiding_from(r)));
    out << res.dump(2) << "\n";
    return 0;
  }
  const CrossingData c = parse_crossing(load_spec(o.spec));
  try {
    c.validate(cfg);
    const bool pinched = c.pinched(cfg.tol.singular);
    const ZetaSet z = crossing_zetas(cfg, c, o.pinched);
    res["pinched"] = pinched || z.pinched;
    res["zetas"] = zetas_json(z);
    if (z.pinched) {
      if (!pinched) throw SingularError("a ζ⁰ is an integer but the characters are not pinched");
      const RTensor r = rmat_pinched(cfg, c);
      res["kappa"] = nullptr;
      res["entries"] = to_json(r.entries);
      res["det_closed"] = nullptr;
      res["det_lu"] = to_json(det_lu(braiding_from(r)));
    } else {
      const RTensor r = rmat(cfg, c);
      res["kappa"] = to_json(z.kappa);
      res["entries"] = to_json(r.entries);
      res["det_closed"] = to_json(det_braiding(cfg, c));
      res["det_lu"] = to_json(det_lu(braiding_from(r)));
    }
  } catch (const SingularError& e) {
    out << error_object("singular", e.what()).dump(2) << "\n";
    return 1;
  } catch (const ConstraintError& e) {
    out << error_object("constraint", e.what()).dump(2) << "\n";
    return 1;
  }
  out << res.dump(2) << "\n";
  return 0;
}

struct BraidInput {
  BraidWord word;
  std::vector<WeylChar> top;
  LogSeeds seeds;
  json log;
};

BraidInput parse_braid(const json& j) {
  BraidInput b;
  const json& w = field(j, "width", "braid");
  if (!w.is_number_integer() || w.get<int>() < 1) throw UsageError("width must be a positive integer");
  b.word.width = w.get<int>();
  for (const json& l : field(j, "word", "braid")) {
    if (!l.is_number_integer()) throw UsageError("word letters must be integers");
    b.word.letters.push_back(l.get<int>());
  }
  for (const json& c : field(j, "top_colors", "braid")) {
    b.top.push_back({parse_complex(field(c, "a", "color"), "a"), parse_complex(field(c, "b", "color"), "b"),
                     parse_complex(field(c, "m", "color"), "m")});
  }
  b.log = j.value("log", json::object());
  const json& lg = b.log;
  if (lg.contains("gamma0")) b.seeds.gamma0 = parse_complex(lg.at("gamma0"), "gamma0");
  if (lg.contains("mu"))
    for (const json& v : lg.at("mu")) b.seeds.mu.push_back(parse_complex(v, "mu"));
  if (lg.contains("top_alpha"))
    for (const json& v : lg.at("top_alpha")) b.seeds.top_alpha.push_back(parse_complex(v, "top_alpha"));
  auto int_key = [](const std::string& k) {
    try {
      return std::stoi(k);
    } catch (const std::exception&) {
      throw UsageError("expected an integer key, got '" + k + "'");
    }
  };
  auto list_map = [&](const char* key, std::map<int, cplx>& dst) {
    if (!lg.contains(key)) return;
    const json& v = lg.at(key);
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) dst[int(i)] = parse_complex(v[i], key);
    } else {
      for (auto it = v.begin(); it != v.end(); ++it) dst[int_key(it.key())] = parse_complex(it.value(), key);
    }
  };
  list_map("top_beta", b.seeds.top_beta);
  list_map("bottom_beta", b.seeds.bottom_beta);
  list_map("bottom_gamma", b.seeds.bottom_gamma);
  auto shift_map = [&](const char* key, std::map<int, int>& dst) {
    if (!lg.contains(key)) return;
    for (auto it = lg.at(key).begin(); it != lg.at(key).end(); ++it) {
      if (!it.value().is_number_integer()) throw UsageError(std::string(key) + " values must be integers");
      dst[int_key(it.key())] = it.value().get<int>();
    }
  };
  shift_map("beta_shift", b.seeds.beta_shift);
  shift_map("alpha_shift", b.seeds.alpha_shift);
  return b;
}

/// Explicit per-segment β and per-region γ overrides, then an optional λ target.
void apply_overrides(const BraidInput& in, ColoredBraid& cb) {
  auto int_key = [](const std::string& k) { return std::stoi(k); };
  if (in.log.contains("beta"))
    for (auto it = in.log.at("beta").begin(); it != in.log.at("beta").end(); ++it) {
      const int s = int_key(it.key());
      if (s < 0 || s >= int(cb.log.beta.size())) throw UsageError("segment id out of range in log.beta");
      cb.log.beta[s] = parse_complex(it.value(), "beta");
    }
  if (in.log.contains("gamma"))
    for (auto it = in.log.at("gamma").begin(); it != in.log.at("gamma").end(); ++it) {
      const int r = int_key(it.key());
      if (r < 0 || r >= int(cb.log.gamma.size())) throw UsageError("region id out of range in log.gamma");
      cb.log.gamma[r] = parse_complex(it.value(), "gamma");
    }
  check_log_coloring(cb.diagram, cb.chi, cb.log);
  if (in.log.contains("longitudes")) {
    std::vector<cplx> target;
    for (const json& v : in.log.at("longitudes")) target.push_back(parse_complex(v, "longitudes"));
    if (int(target.size()) != cb.diagram.components) throw UsageError("need one log-longitude per component");
    adjust_longitudes(cb.diagram, cb.log, target);
  }
}

json coloring_json(const DiagramGraph& d, const ChiColoring& chi) {
  json segs = json::array();
  for (std::size_t s = 0; s < d.segments.size(); ++s) {
    json e = to_json(chi.colors[s]);
    e["id"] = s;
    e["component"] = d.segments[s].component;
    e["position"] = d.segments[s].position;
    segs.push_back(e);
  }
  json pinched = json::array();
  for (std::size_t c = 0; c < chi.pinched.size(); ++c)
    if (chi.pinched[c]) pinched.push_back(c);
  return {{"segments", segs}, {"pinched_crossings", pinched}};
}

int cmd_color(const Options& o, std::ostream& out) {
  const BraidInput in = parse_braid(load_spec(o.spec));
  const DiagramGraph d = build_diagram(in.word);
  if (int(in.top.size()) != d.width) throw UsageError("need one top color per strand");
  const ChiColoring chi = propagate_chi(d, in.top, o.tol_singular);
  if (!chi.ok) {
    json e = error_object("inadmissible-coloring", "the coloring is not admissible");
    e["error"]["crossing"] = chi.failed_crossing;
    out << e.dump(2) << "\n";
    return 1;
  }
  json res = coloring_json(d, chi);
  res["command"] = "color";
  json bottom = json::array();
  for (int s : d.bottom_segments) bottom.push_back(to_json(chi.colors[s]));
  res["bottom_colors"] = bottom;
  out << res.dump(2) << "\n";
  return 0;
}

int cmd_braid(const Options& o, std::ostream& out) {
  const RootConfig cfg = make_config(o, single_N(o));
  const BraidInput in = parse_braid(load_spec(o.spec));
  if (int(in.top.size()) != in.word.width) throw UsageError("need one top color per strand");
  json res = {{"command", "braid"}, {"N", cfg.N}};
  try {
    ColoredBraid cb = make_colored_braid(cfg, in.word, in.top, in.seeds);
    apply_overrides(in, cb);
    const DiagramGraph& d = cb.diagram;
    json col = coloring_json(d, cb.chi);
    for (std::size_t s = 0; s < d.segments.size(); ++s) {
      col["segments"][s]["alpha"] = to_json(segment_alpha(d, cb.log, int(s)));
      col["segments"][s]["beta"] = to_json(cb.log.beta[s]);
    }
    res["coloring"] = col["segments"];
    res["pinched_crossings"] = col["pinched_crossings"];
    json gam = json::array();
    for (cplx g : cb.log.gamma) gam.push_back(to_json(g));
    res["gamma"] = gam;
    const std::vector<cplx> lam = log_longitudes(d, cb.log);
    json comps = json::array();
    for (int k = 0; k < d.components; ++k) comps.push_back({{"mu", to_json(cb.log.mu[k])}, {"lambda", to_json(lam[k])}});
    res["components"] = comps;
    const long dim = long(std::pow(cfg.N, d.width));
    res["dimension"] = dim;
    if (!o.matrix_free) res["matrix"] = to_json(jfunc_eval(cfg, d, cb.log));
  } catch (const InadmissibleColoring& e) {
    json err = error_object("inadmissible-coloring", e.what());
    err["error"]["crossing"] = e.crossing();
    out << err.dump(2) << "\n";
    return 1;
  } catch (const SingularError& e) {
    out << error_object("singular", e.what()).dump(2) << "\n";
    return 1;
  } catch (const ConstraintError& e) {
    out << error_object("constraint", e.what()).dump(2) << "\n";
    return 1;
  }
  out << res.dump(2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Holonomy R-matrices of quantum sl2 at a root of unity", "holr"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--N", o.N, "order of the root of unity; selftest accepts a comma-separated list");
  app.add_option("--tol-rel", o.tol_rel, "relative tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-singular", o.tol_singular, "distance treated as a pole")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  auto* st = app.add_subcommand("selftest", "run every identity suite");
  st->add_option("--samples", o.samples, "random samples per identity")->check(CLI::PositiveNumber);
  auto* rm = app.add_subcommand("rmat", "R-matrix of one crossing");
  rm->add_flag("--kashaev", o.kashaev, "emit Kashaev's matrix");
  rm->add_flag("--pinched", o.pinched, "allow pinched crossings");
  rm->add_option("spec", o.spec, "crossing JSON file or inline JSON");
  auto* br = app.add_subcommand("braid", "evaluate a colored braid");
  br->add_flag("--matrix-free", o.matrix_free, "omit the matrix");
  br->add_option("spec", o.spec, "braid JSON file or inline JSON");
  auto* co = app.add_subcommand("color", "propagate characters through a braid");
  co->add_option("spec", o.spec, "braid JSON file or inline JSON");
  for (auto* sub : {st, rm, br, co}) sub->fallthrough();
  app.require_subcommand(1);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  try {
    if (o.tol_rel >= 1.0 || o.tol_singular >= 1.0) throw UsageError("tolerances must be below 1");
    if (*st) return cmd_selftest(o, out);
    if (*rm) return cmd_rmat(o, out);
    if (*br) return cmd_braid(o, out);
    return cmd_color(o, out);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace holr::cli
