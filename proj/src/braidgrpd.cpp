#include "holr/braidgrpd.hpp"

#include <cmath>
#include <sstream>

#include "holr/weylrep.hpp"

namespace holr {

using Eigen::MatrixXcd;

DiagramGraph build_diagram(const BraidWord& word) {
  if (word.width < 1) throw std::invalid_argument("braid width must be ≥ 1");
  DiagramGraph d;
  d.width = word.width;
  d.components = word.width;
  const int w = word.width;
  std::vector<int> cur_seg(w), cur_reg(w + 1);
  for (int c = 0; c <= w; ++c) {
    d.regions.push_back({c, -1, -1});
    cur_reg[c] = c;
  }
  for (int p = 1; p <= w; ++p) {
    Segment s;
    s.component = p - 1;
    s.position = p;
    s.left_region = cur_reg[p];
    s.right_region = cur_reg[p - 1];
    d.segments.push_back(s);
    cur_seg[p - 1] = p - 1;
  }
  d.top_segments = cur_seg;
  d.top_regions = cur_reg;
  for (std::size_t ci = 0; ci < word.letters.size(); ++ci) {
    const int letter = word.letters[ci];
    const int i = std::abs(letter);
    if (letter == 0 || i >= w) {
      std::ostringstream os;
      os << "generator index " << letter << " out of range for width " << w;
      throw std::invalid_argument(os.str());
    }
    const int c = int(ci);
    CrossingInfo x;
    x.sign = letter > 0 ? 1 : -1;
    x.position = i;
    x.seg[0] = cur_seg[i - 1];
    x.seg[1] = cur_seg[i];
    x.region[RN] = cur_reg[i - 1];
    x.region[RW] = cur_reg[i];
    x.region[RS] = cur_reg[i + 1];
    d.regions[cur_reg[i]].bottom_crossing = c;
    const int east = int(d.regions.size());
    d.regions.push_back({i, c, -1});
    x.region[RE] = east;
    cur_reg[i] = east;
    d.segments[x.seg[0]].bottom_crossing = c;
    d.segments[x.seg[1]].bottom_crossing = c;
    // Strand 2 continues at position i as 2′, strand 1 at position i+1 as 1′.
    Segment s2p, s1p;
    s2p.component = d.segments[x.seg[1]].component;
    s2p.position = i;
    s2p.top_crossing = c;
    s2p.left_region = east;
    s2p.right_region = cur_reg[i - 1];
    s1p.component = d.segments[x.seg[0]].component;
    s1p.position = i + 1;
    s1p.top_crossing = c;
    s1p.left_region = cur_reg[i + 1];
    s1p.right_region = east;
    x.seg[3] = int(d.segments.size());
    d.segments.push_back(s2p);
    x.seg[2] = int(d.segments.size());
    d.segments.push_back(s1p);
    cur_seg[i - 1] = x.seg[3];
    cur_seg[i] = x.seg[2];
    const int e = x.sign;
    d.half_segments.push_back({x.seg[0], c, -e});
    d.half_segments.push_back({x.seg[2], c, e});
    d.half_segments.push_back({x.seg[1], c, e});
    d.half_segments.push_back({x.seg[3], c, -e});
    d.crossings.push_back(x);
  }
  d.bottom_segments = cur_seg;
  d.bottom_regions = cur_reg;
  return d;
}

ChiColoring propagate_chi(const DiagramGraph& d, const std::vector<WeylChar>& top, double singular) {
  if (int(top.size()) != d.width) throw std::invalid_argument("need one top color per strand");
  ChiColoring out;
  out.colors.assign(d.segments.size(), WeylChar{});
  out.pinched.assign(d.crossings.size(), false);
  for (int p = 0; p < d.width; ++p) {
    if (!top[p].valid(singular)) {
      out.failed_crossing = -1;
      return out;
    }
    out.colors[d.top_segments[p]] = top[p];
  }
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const CrossingInfo& x = d.crossings[c];
    BraidOutcome o = braid(out.colors[x.seg[0]], out.colors[x.seg[1]], x.sign, singular);
    if (!o.admissible) {
      out.failed_crossing = int(c);
      return out;
    }
    out.colors[x.seg[2]] = o.chi1p;
    out.colors[x.seg[3]] = o.chi2p;
    out.pinched[c] = o.pinched;
  }
  out.ok = true;
  return out;
}

cplx segment_alpha(const DiagramGraph& d, const LogColoring& lc, int s) {
  return lc.gamma[d.segments[s].left_region] - lc.gamma[d.segments[s].right_region];
}

namespace {

cplx pick_log(cplx value, std::optional<cplx> given, int shift, double tol, const char* what) {
  if (given) {
    if (std::abs(exp2pi(*given) - value) > tol * std::max(1.0, std::abs(value))) {
      throw ConstraintError(std::string("supplied log does not match the character: ") + what);
    }
    return *given + double(shift);
  }
  return log_param(value) + double(shift);
}

template <class Map, class Key>
std::optional<cplx> lookup(const Map& m, const Key& k) {
  auto it = m.find(k);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

int lookup_int(const std::map<int, int>& m, int k) {
  auto it = m.find(k);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

LogColoring auto_log_coloring(const RootConfig&, const DiagramGraph& d, const ChiColoring& chi, const LogSeeds& seeds) {
  if (!chi.ok) throw InadmissibleColoring(chi.failed_crossing, "χ-coloring is not admissible");
  const double tol = 1e-7;
  const int w = d.width;
  LogColoring lc;
  lc.beta.assign(d.segments.size(), 0.0);
  lc.gamma.assign(d.regions.size(), 0.0);
  lc.mu.assign(d.components, 0.0);
  for (int k = 0; k < d.components; ++k) {
    const cplx m = chi.colors[d.top_segments[k]].m;
    std::optional<cplx> given;
    if (int(seeds.mu.size()) > k) given = seeds.mu[k];
    lc.mu[k] = pick_log(m, given, 0, tol, "μ");
  }
  lc.gamma[d.top_regions[0]] = seeds.gamma0;
  for (int p = 1; p <= w; ++p) {
    const int s = d.top_segments[p - 1];
    std::optional<cplx> given;
    if (int(seeds.top_alpha.size()) >= p) given = seeds.top_alpha[p - 1];
    lc.gamma[d.top_regions[p]] = lc.gamma[d.top_regions[p - 1]] + pick_log(chi.colors[s].a, given, 0, tol, "top α");
  }
  std::vector<bool> is_bottom(d.regions.size(), false);
  for (int r : d.bottom_regions) is_bottom[r] = true;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const CrossingInfo& x = d.crossings[c];
    const int east = x.region[RE];
    const cplx a2p = chi.colors[x.seg[3]].a;
    std::optional<cplx> given;
    if (is_bottom[east]) {
      if (auto g = lookup(seeds.bottom_gamma, d.regions[east].column)) given = *g - lc.gamma[x.region[RN]];
    }
    lc.gamma[east] = lc.gamma[x.region[RN]] + pick_log(a2p, given, lookup_int(seeds.alpha_shift, int(c)), tol, "α₂′");
  }
  std::vector<int> top_pos(d.segments.size(), -1), bottom_pos(d.segments.size(), -1);
  for (int p = 0; p < w; ++p) {
    top_pos[d.top_segments[p]] = p;
    bottom_pos[d.bottom_segments[p]] = p;
  }
  for (std::size_t s = 0; s < d.segments.size(); ++s) {
    std::optional<cplx> given;
    if (top_pos[s] >= 0) given = lookup(seeds.top_beta, top_pos[s]);
    if (!given && bottom_pos[s] >= 0) given = lookup(seeds.bottom_beta, bottom_pos[s]);
    lc.beta[s] = pick_log(chi.colors[s].b, given, lookup_int(seeds.beta_shift, int(s)), tol, "β");
  }
  return lc;
}

void check_log_coloring(const DiagramGraph& d, const ChiColoring& chi, const LogColoring& lc, double tol) {
  auto ok = [&](cplx logv, cplx v) { return std::abs(exp2pi(logv) - v) <= tol * std::max(1.0, std::abs(v)); };
  for (std::size_t s = 0; s < d.segments.size(); ++s) {
    const WeylChar& c = chi.colors[s];
    if (!ok(segment_alpha(d, lc, int(s)), c.a) || !ok(lc.beta[s], c.b) || !ok(lc.mu[d.segments[s].component], c.m)) {
      std::ostringstream os;
      os << "log-coloring inconsistent at segment " << s;
      throw ConstraintError(os.str());
    }
  }
}

CrossingData crossing_data(const DiagramGraph& d, const LogColoring& lc, int c) {
  const CrossingInfo& x = d.crossings[c];
  auto seg_lc = [&](int s) {
    return LogWeylChar{segment_alpha(d, lc, s), lc.beta[s], lc.mu[d.segments[s].component]};
  };
  CrossingData cd;
  cd.sign = x.sign;
  cd.lc1 = seg_lc(x.seg[0]);
  cd.lc2 = seg_lc(x.seg[1]);
  cd.lc1p = seg_lc(x.seg[2]);
  cd.lc2p = seg_lc(x.seg[3]);
  for (int j = 0; j < 4; ++j) cd.gamma[j] = lc.gamma[x.region[j]];
  return cd;
}

std::vector<cplx> log_longitudes(const DiagramGraph& d, const LogColoring& lc) {
  std::vector<cplx> lam(d.components, 0.0);
  for (const HalfSegment& h : d.half_segments) lam[d.segments[h.segment].component] += 0.5 * double(h.coefficient) * lc.beta[h.segment];
  return lam;
}

void adjust_longitudes(const DiagramGraph& d, LogColoring& lc, const std::vector<cplx>& target, double tol) {
  std::vector<int> coef(d.segments.size(), 0);
  for (const HalfSegment& h : d.half_segments) coef[h.segment] += h.coefficient;
  const std::vector<cplx> lam = log_longitudes(d, lc);
  for (int k = 0; k < d.components; ++k) {
    const cplx delta = target[k] - lam[k];
    if (std::abs(delta) <= tol) continue;
    const double r = std::round(delta.real());
    if (std::abs(delta - r) > tol) throw ConstraintError("log-longitude difference is not an integer");
    bool done = false;
    for (std::size_t s = 0; s < d.segments.size() && !done; ++s) {
      const Segment& seg = d.segments[s];
      if (seg.component != k || seg.top_crossing < 0 || seg.bottom_crossing < 0) continue;
      if (std::abs(coef[s]) != 2) continue;
      // each unit of β moves λ by coef/2 = ±1
      lc.beta[s] += double(coef[s] / 2) * r;
      done = true;
    }
    if (!done) throw ConstraintError("no internal segment can absorb the log-longitude change");
  }
}

namespace {

std::vector<MatrixXcd> crossing_braidings(const RootConfig& cfg, const DiagramGraph& d, const LogColoring& lc) {
  std::vector<MatrixXcd> out(d.crossings.size());
  for (std::size_t c = 0; c < d.crossings.size(); ++c) out[c] = braiding_op(cfg, crossing_data(d, lc, int(c)));
  return out;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

MatrixXcd jfunc_eval(const RootConfig& cfg, const DiagramGraph& d, const LogColoring& lc) {
  const int N = cfg.N, w = d.width;
  const long dim = ipow(N, w);
  const std::vector<MatrixXcd> bs = crossing_braidings(cfg, d, lc);
  MatrixXcd cur = MatrixXcd::Identity(dim, dim), next(dim, dim);
  const long pair = long(N) * N;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const int i = d.crossings[c].position;
    const long hiN = ipow(N, i - 1), loN = ipow(N, w - i - 1);
    const MatrixXcd& B = bs[c];
#pragma omp parallel for schedule(static)
    for (long col = 0; col < dim; ++col) {
      Eigen::VectorXcd v(pair);
      for (long hi = 0; hi < hiN; ++hi)
        for (long lo = 0; lo < loN; ++lo) {
          const long base = hi * pair * loN + lo;
          for (long p = 0; p < pair; ++p) v(p) = cur(base + p * loN, col);
          const Eigen::VectorXcd u = B * v;
          for (long p = 0; p < pair; ++p) next(base + p * loN, col) = u(p);
        }
    }
    cur.swap(next);
  }
  return cur;
}

MatrixXcd jfunc_eval_serial(const RootConfig& cfg, const DiagramGraph& d, const LogColoring& lc) {
  const int N = cfg.N, w = d.width;
  const long dim = ipow(N, w);
  const std::vector<MatrixXcd> bs = crossing_braidings(cfg, d, lc);
  MatrixXcd cur = MatrixXcd::Identity(dim, dim);
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const int i = d.crossings[c].position;
    const MatrixXcd full = kron(kron(MatrixXcd::Identity(ipow(N, i - 1), ipow(N, i - 1)), bs[c]),
                                MatrixXcd::Identity(ipow(N, w - i - 1), ipow(N, w - i - 1)));
    cur = full * cur;
  }
  return cur;
}

std::map<int, cplx> edge_gluing_residuals(const DiagramGraph& d, const LogColoring& lc) {
  std::map<int, cplx> sums;
  for (std::size_t r = 0; r < d.regions.size(); ++r) {
    if (d.regions[r].top_crossing >= 0 && d.regions[r].bottom_crossing >= 0) sums[int(r)] = 0.0;
  }
  static const double role[4] = {1.0, -1.0, 1.0, -1.0};
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto z0 = zeta0_values(crossing_data(d, lc, int(c)));
    const CrossingInfo& x = d.crossings[c];
    for (int j = 0; j < 4; ++j) {
      auto it = sums.find(x.region[j]);
      if (it != sums.end()) it->second += double(x.sign) * role[j] * z0[j];
    }
  }
  return sums;
}

ColoredBraid make_colored_braid(const RootConfig& cfg, const BraidWord& word, const std::vector<WeylChar>& top,
                                const LogSeeds& seeds) {
  ColoredBraid cb;
  cb.word = word;
  cb.diagram = build_diagram(word);
  cb.chi = propagate_chi(cb.diagram, top, cfg.tol.singular);
  if (!cb.chi.ok) {
    std::ostringstream os;
    os << "inadmissible coloring at crossing " << cb.chi.failed_crossing;
    throw InadmissibleColoring(cb.chi.failed_crossing, os.str());
  }
  cb.log = auto_log_coloring(cfg, cb.diagram, cb.chi, seeds);
  check_log_coloring(cb.diagram, cb.chi, cb.log);
  return cb;
}

namespace {

bool same(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))); }

bool same_char(const WeylChar& x, const WeylChar& y, double tol) {
  return same(x.a, y.a, tol) && same(x.b, y.b, tol) && same(x.m, y.m, tol);
}

double max_rel(const MatrixXcd& a, const MatrixXcd& b) {
  const double scale = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

MoveReport check_move(const RootConfig& cfg, const ColoredBraid& before, const ColoredBraid& after, MoveKind kind) {
  MoveReport rep;
  const double tol = 1e-7;
  const DiagramGraph& d1 = before.diagram;
  const DiagramGraph& d2 = after.diagram;
  if (d1.width != d2.width) {
    rep.reason = "width mismatch";
    return rep;
  }
  if (!before.chi.ok || !after.chi.ok) {
    rep.reason = "inadmissible coloring";
    return rep;
  }
  for (int p = 0; p < d1.width; ++p) {
    for (auto [s1, s2] : {std::pair{d1.top_segments[p], d2.top_segments[p]}, std::pair{d1.bottom_segments[p], d2.bottom_segments[p]}}) {
      if (!same_char(before.chi.colors[s1], after.chi.colors[s2], tol)) {
        rep.reason = "boundary characters differ";
        return rep;
      }
      if (!same(before.log.beta[s1], after.log.beta[s2], tol)) {
        rep.reason = "boundary β differ";
        return rep;
      }
      if (d1.segments[s1].component != d2.segments[s2].component) {
        rep.reason = "strand permutations differ";
        return rep;
      }
    }
  }
  for (int c = 0; c <= d1.width; ++c) {
    if (!same(before.log.gamma[d1.top_regions[c]], after.log.gamma[d2.top_regions[c]], tol) ||
        !same(before.log.gamma[d1.bottom_regions[c]], after.log.gamma[d2.bottom_regions[c]], tol)) {
      rep.reason = "boundary γ differ";
      return rep;
    }
  }
  for (int k = 0; k < d1.components; ++k) {
    if (!same(before.log.mu[k], after.log.mu[k], tol)) {
      rep.reason = "μ differ";
      return rep;
    }
  }
  const auto l1 = log_longitudes(d1, before.log), l2 = log_longitudes(d2, after.log);
  for (int k = 0; k < d1.components; ++k) {
    if (!same(l1[k], l2[k], tol)) {
      rep.reason = kind == MoveKind::R3 ? "beta-condition violated (log-longitudes differ)" : "log-longitudes differ";
      return rep;
    }
  }
  rep.eligible = true;
  const MatrixXcd j1 = jfunc_eval(cfg, d1, before.log), j2 = jfunc_eval(cfg, d2, after.log);
  rep.deviation = max_rel(j1, j2);
  rep.passed = rep.deviation <= (kind == MoveKind::R2 ? 1e-8 : 1e-7);
  return rep;
}

LogWeylChar random_log_char(std::mt19937_64& rng, double span, double im_span) {
  std::uniform_real_distribution<double> re(-span, span), im(-im_span, im_span);
  auto draw = [&] { return cplx(re(rng), im(rng)); };
  LogWeylChar lc;
  lc.alpha = draw();
  lc.beta = draw();
  lc.mu = draw();
  return lc;
}

std::vector<WeylChar> random_top_colors(const DiagramGraph& d, std::mt19937_64& rng, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    std::vector<WeylChar> top;
    for (int p = 0; p < d.width; ++p) top.push_back(random_log_char(rng).chi());
    ChiColoring chi = propagate_chi(d, top, 1e-6);
    if (!chi.ok) continue;
    bool pinched = false;
    for (bool b : chi.pinched) pinched = pinched || b;
    if (pinched) continue;
    // keep away from the pinched locus so that ζ⁰ stays off the integers
    bool near = false;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
      const auto& x = d.crossings[c];
      const WeylChar& c1 = chi.colors[x.seg[0]];
      const WeylChar& c2 = chi.colors[x.seg[1]];
      if (std::abs(c2.b - c1.m * c1.b) < 0.05 * std::abs(c2.b)) near = true;
    }
    if (!near) return top;
  }
  throw std::runtime_error("could not draw an admissible coloring");
}

LogSeeds matching_seeds(const ColoredBraid& ref) {
  const DiagramGraph& d = ref.diagram;
  LogSeeds s;
  s.gamma0 = ref.log.gamma[d.top_regions[0]];
  for (int p = 0; p < d.width; ++p) {
    s.top_alpha.push_back(segment_alpha(d, ref.log, d.top_segments[p]));
    s.top_beta[p] = ref.log.beta[d.top_segments[p]];
    s.bottom_beta[p] = ref.log.beta[d.bottom_segments[p]];
  }
  s.mu = ref.log.mu;
  for (int c = 1; c < d.width; ++c) s.bottom_gamma[c] = ref.log.gamma[d.bottom_regions[c]];
  return s;
}

}  // namespace holr
