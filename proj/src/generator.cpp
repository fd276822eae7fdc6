#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "reeb/error.hpp"
#include "reeb/genoracle.hpp"

namespace reeb {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return uniform() < p; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

struct Strand {
  std::size_t edge;
  EdgeLabel label;
};

class Sweep {
 public:
  Sweep(const GenParams& params, Rng& rng) : params_(params), rng_(rng) {}

  ReebGraph run() {
    const std::uint32_t saddles = params_.saddle_count;
    const std::size_t centers =
        saddles == 0 ? 0 : rng_.below(static_cast<std::size_t>(saddles / 2 + 2));
    const std::size_t events = saddles + centers;

    const std::size_t initial = saddles == 0 ? 1 : 1 + rng_.below(3);
    for (std::size_t i = 0; i < initial; ++i) {
      const auto id = "m" + std::to_string(i);
      vertices_.push_back({id, 0.0, VertexKind::BoundaryMinus});
      const bool inessential = i > 0 && rng_.chance(params_.inessential_bias);
      open(id, inessential ? EdgeLabel::Inessential : EdgeLabel::Essential);
    }

    std::uint32_t saddles_left = saddles;
    std::size_t centers_left = centers;
    const double gap = 1.0 / static_cast<double>(events + 1);
    for (std::size_t i = 0; i < events; ++i) {
      level_ = gap * (static_cast<double>(i + 1) + 0.6 * (rng_.uniform() - 0.5));
      const bool saddle = centers_left == 0 ||
                          (saddles_left > 0 && rng_.below(saddles_left + centers_left) < saddles_left);
      if (saddle) {
        saddle_event();
        --saddles_left;
      } else {
        center_event();
        --centers_left;
      }
    }

    for (std::size_t i = 0; i < live_.size(); ++i) {
      const auto id = "p" + std::to_string(i);
      vertices_.push_back({id, 1.0, VertexKind::BoundaryPlus});
      edges_[live_[i].edge].upper = id;
    }
    return ReebGraph(0.0, 1.0, std::move(vertices_), std::move(edges_));
  }

 private:
  static constexpr std::size_t kMaxStrands = 12;

  std::string new_vertex(VertexKind kind) {
    auto id = "v" + std::to_string(interior_++);
    vertices_.push_back({id, level_, kind});
    return id;
  }

  void open(const std::string& lower, EdgeLabel label) {
    live_.push_back({edges_.size(), label});
    edges_.push_back({"e" + std::to_string(edges_.size()), lower, "", label, std::nullopt});
  }

  Strand close(std::size_t slot, const std::string& upper) {
    const Strand s = live_[slot];
    edges_[s.edge].upper = upper;
    live_.erase(live_.begin() + static_cast<std::ptrdiff_t>(slot));
    return s;
  }

  std::size_t essential_count() const {
    return static_cast<std::size_t>(std::count_if(
        live_.begin(), live_.end(), [](const Strand& s) { return s.label == EdgeLabel::Essential; }));
  }

  EdgeLabel pick(bool inessential) {
    return inessential ? EdgeLabel::Inessential : EdgeLabel::Essential;
  }

  void center_event() {
    std::vector<std::size_t> inessential;
    for (std::size_t i = 0; i < live_.size(); ++i) {
      if (live_[i].label == EdgeLabel::Inessential) inessential.push_back(i);
    }
    if (!inessential.empty() && (live_.size() >= kMaxStrands || rng_.chance(0.5))) {
      const auto slot = inessential[rng_.below(inessential.size())];
      close(slot, new_vertex(VertexKind::Center));
    } else {
      open(new_vertex(VertexKind::Center), EdgeLabel::Inessential);
    }
  }

  void saddle_event() {
    if (pending_pair_) {
      const auto [a, b] = *pending_pair_;
      pending_pair_.reset();
      auto slot_a = find_slot(a);
      auto slot_b = find_slot(b);
      if (slot_a && slot_b) {
        merge(*slot_a, *slot_b);
        return;
      }
    }
    const bool split_now =
        live_.size() < 2 || (live_.size() < kMaxStrands && rng_.chance(0.5));
    if (split_now) {
      split(rng_.below(live_.size()));
    } else {
      const auto a = rng_.below(live_.size());
      auto b = rng_.below(live_.size() - 1);
      if (b >= a) ++b;
      merge(a, b);
    }
  }

  std::optional<std::size_t> find_slot(std::size_t edge) const {
    for (std::size_t i = 0; i < live_.size(); ++i) {
      if (live_[i].edge == edge) return i;
    }
    return std::nullopt;
  }

  void split(std::size_t slot) {
    const auto v = new_vertex(VertexKind::Saddle);
    const Strand s = close(slot, v);
    const bool with_inessential = rng_.chance(params_.inessential_bias);
    EdgeLabel first = EdgeLabel::Essential;
    EdgeLabel second = EdgeLabel::Essential;
    if (s.label == EdgeLabel::Essential) {
      second = pick(with_inessential);                 // E>EE or E>EI
    } else {
      first = second = pick(with_inessential);         // I>EE or I>II
    }
    if (rng_.chance(0.5)) std::swap(first, second);
    open(v, first);
    open(v, second);
    if (rng_.chance(params_.parallel_edge_bias)) {
      pending_pair_ = {live_[live_.size() - 2].edge, live_.back().edge};
    }
  }

  void merge(std::size_t slot_a, std::size_t slot_b) {
    const auto v = new_vertex(VertexKind::Saddle);
    const EdgeLabel la = live_[slot_a].label;
    const EdgeLabel lb = live_[slot_b].label;
    const std::size_t essential_before = essential_count();
    close(std::max(slot_a, slot_b), v);
    close(std::min(slot_a, slot_b), v);

    EdgeLabel result = EdgeLabel::Inessential;
    if (la == EdgeLabel::Essential && lb == EdgeLabel::Essential) {
      // EE>E or EE>I; never lose the last essential strand.
      const bool only_essentials = essential_before == 2;
      result = (!only_essentials && rng_.chance(params_.inessential_bias))
                   ? EdgeLabel::Inessential
                   : EdgeLabel::Essential;
    } else if (la != lb) {
      result = EdgeLabel::Essential;                   // EI>E
    }                                                  // II>I otherwise
    open(v, result);
  }

  const GenParams& params_;
  Rng& rng_;
  Level level_ = 0.0;
  std::size_t interior_ = 0;
  std::vector<ReebVertex> vertices_;
  std::vector<ReebEdge> edges_;
  std::vector<Strand> live_;
  std::optional<std::pair<std::size_t, std::size_t>> pending_pair_;
};

}  // namespace

ReebGraph random_reeb(const GenParams& params) {
  auto in_unit = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };
  if (!in_unit(params.parallel_edge_bias) || !in_unit(params.inessential_bias)) {
    fail(ErrorCode::InvalidParams, "biases must lie in [0, 1]");
  }
  if (params.saddle_count > kMaxSaddles) {
    fail(ErrorCode::GenerationFailed,
         "saddle_count " + std::to_string(params.saddle_count) + " exceeds " +
             std::to_string(kMaxSaddles));
  }
  Rng rng(params.seed);
  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Sweep sweep(params, rng);
    ReebGraph graph = sweep.run();
    if (validate(graph).ok()) return graph;
  }
  fail(ErrorCode::GenerationFailed, "no valid graph within the retry budget");
}

}  // namespace reeb
