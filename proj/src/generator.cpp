#include "blp/generator.hpp"

#include <random>

namespace blp {

namespace {

struct Draw {
  std::mt19937_64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}

  std::uint64_t below(std::uint64_t n) { return rng() % n; }

  // Rational in [-5, 5] with denominator 1..3.
  Rational entry() {
    const std::uint64_t den = 1 + below(3);
    const std::int64_t half = static_cast<std::int64_t>(5 * den);
    const std::int64_t num = static_cast<std::int64_t>(below(2 * half + 1)) - half;
    return Rational(Integer(num), Integer(den));
  }

  // Rational in [0, 5].
  Rational nonneg_entry() {
    const std::uint64_t den = 1 + below(3);
    const std::int64_t num = static_cast<std::int64_t>(below(5 * den + 1));
    return Rational(Integer(num), Integer(den));
  }

  Rational bound() { return Rational(Integer(1 + below(5))); }
};

}  // namespace

BlpInstance generate_instance(const GenSpec& spec) {
  Draw draw(spec.seed);
  const std::size_t nl = spec.num_leader_vars;
  const std::size_t nf = spec.num_follower_vars;

  for (int attempt = 0; attempt < 1000; ++attempt) {
    BlpInstance inst;
    inst.sense = spec.family == InstanceFamily::RandomOptimistic
                     ? ProblemSense::Optimistic
                     : ProblemSense::Pessimistic;
    inst.name = (inst.sense == ProblemSense::Optimistic ? "rand-opt-" : "rand-pes-") +
                std::to_string(spec.seed);
    inst.num_leader_vars = nl;
    inst.num_follower_vars = nf;

    Matrix la(0, nl);
    Matrix lg(0, nf);
    Vec lh;
    const std::size_t coupling_rows =
        spec.family == InstanceFamily::RandomPessimistic ? 1 + draw.below(2) : 0;
    for (std::size_t i = 0; i < spec.num_leader_rows; ++i) {
      Vec arow(nl);
      for (auto& v : arow) v = draw.entry();
      Vec grow = zeros(nf);
      if (spec.family == InstanceFamily::RandomOptimistic && draw.below(2) == 0) {
        for (auto& v : grow) v = draw.entry();
      }
      la.append_row(arow);
      lg.append_row(grow);
      lh.push_back(draw.nonneg_entry());
    }
    for (std::size_t j = 0; j < nl; ++j) {
      Vec arow = zeros(nl);
      arow[j] = 1;
      la.append_row(arow);
      lg.append_row(zeros(nf));
      lh.push_back(draw.bound());
    }
    for (std::size_t c = 0; c < coupling_rows; ++c) {
      Vec grow(nf);
      bool nonzero = false;
      while (!nonzero) {
        for (auto& v : grow) {
          v = draw.entry();
          nonzero = nonzero || v != 0;
        }
      }
      Vec arow(nl);
      for (auto& v : arow) v = draw.entry();
      la.append_row(arow);
      lg.append_row(grow);
      lh.push_back(draw.nonneg_entry() + Rational(1));
    }
    inst.leader_a = std::move(la);
    inst.leader_g = std::move(lg);
    inst.leader_h = std::move(lh);

    inst.leader_cost_x = Vec(nl);
    for (auto& v : inst.leader_cost_x) v = draw.entry();
    inst.leader_cost_y = Vec(nf);
    if (spec.family == InstanceFamily::RandomPessimistic && draw.below(2) == 0) {
      inst.leader_cost_y = zeros(nf);
    } else {
      for (auto& v : inst.leader_cost_y) v = draw.entry();
    }

    Matrix fa(0, nl);
    Matrix fg(0, nf);
    Vec fh;
    for (std::size_t i = 0; i < spec.num_follower_rows; ++i) {
      Vec arow(nl);
      for (auto& v : arow) v = draw.entry();
      Vec grow(nf);
      for (auto& v : grow) v = draw.entry();
      fa.append_row(arow);
      fg.append_row(grow);
      fh.push_back(draw.nonneg_entry());
    }
    for (std::size_t j = 0; j < nf; ++j) {
      Vec grow = zeros(nf);
      grow[j] = 1;
      fa.append_row(zeros(nl));
      fg.append_row(grow);
      fh.push_back(draw.bound());
    }
    inst.follower_a = std::move(fa);
    inst.follower_g = std::move(fg);
    inst.follower_h = std::move(fh);

    inst.follower_cost = Vec(nf);
    if (spec.family == InstanceFamily::RandomPessimistic && draw.below(3) == 0) {
      inst.follower_cost = zeros(nf);
    } else {
      for (auto& v : inst.follower_cost) v = draw.entry();
    }

    check_instance(inst);
    if (validate_a1(inst).a1_status == A1Status::Satisfied) return inst;
  }
  throw std::runtime_error("generate_instance: no A1-satisfying draw found");
}

}  // namespace blp
