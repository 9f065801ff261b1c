#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "holr/rmatrix.hpp"

namespace holr {

/// Signed generator indices ±1..±(width-1); σ_i acts on strand positions i and i+1.
struct BraidWord {
  int width = 1;
  std::vector<int> letters;
};

/// A strand piece between crossings (or the boundary).
struct Segment {
  int component = -1;
  int position = 0;  // 1-based, right to left
  int top_crossing = -1;
  int bottom_crossing = -1;
  int left_region = -1;
  int right_region = -1;
};

/// A region; column j lies between positions j and j+1, column 0 is rightmost.
struct RegionInfo {
  int column = 0;
  int top_crossing = -1;
  int bottom_crossing = -1;
};

struct CrossingInfo {
  int sign = 1;
  int position = 1;
  std::array<int, 4> seg{};     // segments 1, 2, 1′, 2′
  std::array<int, 4> region{};  // indexed by Region
};

/// Half-segment at a crossing with its log-longitude coefficient (±1).
struct HalfSegment {
  int segment = -1;
  int crossing = -1;
  int coefficient = 0;
};

struct DiagramGraph {
  int width = 1;
  int components = 0;
  std::vector<Segment> segments;
  std::vector<RegionInfo> regions;
  std::vector<CrossingInfo> crossings;
  std::vector<HalfSegment> half_segments;
  std::vector<int> top_segments, bottom_segments;  // by position - 1
  std::vector<int> top_regions, bottom_regions;    // by column
};

class InadmissibleColoring : public std::runtime_error {
 public:
  InadmissibleColoring(int crossing, const std::string& what) : std::runtime_error(what), crossing_(crossing) {}
  int crossing() const { return crossing_; }

 private:
  int crossing_;
};

DiagramGraph build_diagram(const BraidWord& word);

struct ChiColoring {
  bool ok = false;
  int failed_crossing = -1;
  std::vector<WeylChar> colors;  // per segment
  std::vector<bool> pinched;     // per crossing
};

ChiColoring propagate_chi(const DiagramGraph& d, const std::vector<WeylChar>& top, double singular = 1e-9);

/// β per segment, γ per region, μ per component.
struct LogColoring {
  std::vector<cplx> beta;
  std::vector<cplx> gamma;
  std::vector<cplx> mu;
};

/// Choices that pin down a log-coloring; anything unset falls back to principal logs.
struct LogSeeds {
  cplx gamma0{0.0};
  std::vector<cplx> top_alpha;           // by position - 1
  std::vector<cplx> mu;                  // by component
  std::map<int, cplx> top_beta;          // position - 1 -> β
  std::map<int, cplx> bottom_beta;       // position - 1 -> β
  std::map<int, cplx> bottom_gamma;      // column -> γ
  std::map<int, int> beta_shift;         // segment -> integer added to β
  std::map<int, int> alpha_shift;        // crossing -> integer added to α₂′ (γ_E)
};

LogColoring auto_log_coloring(const RootConfig& cfg, const DiagramGraph& d, const ChiColoring& chi,
                              const LogSeeds& seeds = {});

/// α of a segment: γ(left) - γ(right).
cplx segment_alpha(const DiagramGraph& d, const LogColoring& lc, int segment);

/// Exp-consistency of every log with the χ-coloring; throws ConstraintError.
void check_log_coloring(const DiagramGraph& d, const ChiColoring& chi, const LogColoring& lc, double tol = 1e-8);

CrossingData crossing_data(const DiagramGraph& d, const LogColoring& lc, int crossing);

std::vector<cplx> log_longitudes(const DiagramGraph& d, const LogColoring& lc);

/// Adds integer shifts to internal β's so that λ reaches the target; throws ConstraintError if impossible.
void adjust_longitudes(const DiagramGraph& d, LogColoring& lc, const std::vector<cplx>& target, double tol = 1e-7);

/// Ordered composition of braidings, top crossing first; parallel over columns.
Eigen::MatrixXcd jfunc_eval(const RootConfig& cfg, const DiagramGraph& d, const LogColoring& lc);
/// Dense Kronecker-product reference for jfunc_eval.
Eigen::MatrixXcd jfunc_eval_serial(const RootConfig& cfg, const DiagramGraph& d, const LogColoring& lc);

/// Σ ε s_j ζ_j⁰ around each internal region (s = +1 for N, S and -1 for W, E).
std::map<int, cplx> edge_gluing_residuals(const DiagramGraph& d, const LogColoring& lc);

struct ColoredBraid {
  BraidWord word;
  DiagramGraph diagram;
  ChiColoring chi;
  LogColoring log;
};

ColoredBraid make_colored_braid(const RootConfig& cfg, const BraidWord& word, const std::vector<WeylChar>& top,
                                const LogSeeds& seeds = {});

enum class MoveKind { R2, R3 };

struct MoveReport {
  bool eligible = false;
  std::string reason;
  double deviation = 0.0;
  bool passed = false;
};

MoveReport check_move(const RootConfig& cfg, const ColoredBraid& before, const ColoredBraid& after, MoveKind kind);

/// Top colors drawn until the whole diagram is admissible and unpinched.
std::vector<WeylChar> random_top_colors(const DiagramGraph& d, std::mt19937_64& rng, int max_tries = 200);

/// Random log-character with Re in (-span, span) and Im in (-im_span, im_span).
LogWeylChar random_log_char(std::mt19937_64& rng, double span = 1.0, double im_span = 0.25);

/// Copies the top and bottom boundary of `ref` into seeds for another word with the same endpoints.
LogSeeds matching_seeds(const ColoredBraid& ref);

}  // namespace holr
