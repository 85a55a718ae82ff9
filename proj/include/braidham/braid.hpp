#pragma once

// Two-generator braid machinery: the nu = 1/2 anyon generators, q-deformation
// of normalized Hamiltonians, relation checks, braid words and a numeric
// solver for a braid partner of a given generator.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braidham/hamiltonians.hpp"
#include "braidham/matrix.hpp"
#include "braidham/nelder_mead.hpp"

namespace braidham {

/// The anyon exchange angle used throughout: theta = -pi/2.
inline constexpr double kAnyonTheta = -std::numbers::pi / 2.0;

/// a(theta) = diag(e^{i theta/2}, e^{-i theta/2}).
inline ComplexMatrix anyon_a(double theta = kAnyonTheta) {
  return ComplexMatrix::diagonal({std::polar(1.0, theta / 2.0), std::polar(1.0, -theta / 2.0)});
}

/// b = (1/sqrt 2) [[1, i], [i, 1]], the braid partner of a(-pi/2).
inline ComplexMatrix anyon_b() {
  const double s = kInvSqrt2;
  return {{s, kI * s}, {kI * s, s}};
}

/// R(theta) = exp(i theta/2 H) for a normalized Hamiltonian.
inline ComplexMatrix q_deform(const NormalizedHamiltonian& h, double theta, Tolerance tol = {}) {
  return exp_involutory(h.matrix, theta, tol);
}

/// Ordered pair of equal-dimension unitary generators.
class BraidPair {
 public:
  BraidPair(ComplexMatrix a, ComplexMatrix b, Tolerance tol = {})
      : a_(std::move(a)), b_(std::move(b)) {
    if (a_.dim() != b_.dim()) throw PreconditionError("braid pair: generator dimensions differ");
    if (!classify(a_, tol).unitary) throw PreconditionError("braid pair: A is not unitary");
    if (!classify(b_, tol).unitary) throw PreconditionError("braid pair: B is not unitary");
  }

  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& b() const { return b_; }
  std::size_t dim() const { return a_.dim(); }

 private:
  ComplexMatrix a_;
  ComplexMatrix b_;
};

struct RelationCheck {
  double residual;
  bool pass;
};

/// ||ABA - BAB||_F
inline RelationCheck check_braid_relation(const BraidPair& pair, Tolerance tol = {}) {
  const auto& a = pair.a();
  const auto& b = pair.b();
  const double r = frobenius_distance(a * b * a, b * a * b);
  return {r, r < tol.abs_tol};
}

/// ||ABBA - I||_F, the extra rule that turns the braid group into the
/// 4pi-periodic spinor ("Dirac game") quotient.
inline RelationCheck check_dirac_game_rule(const BraidPair& pair, Tolerance tol = {}) {
  const auto& a = pair.a();
  const auto& b = pair.b();
  const double r = frobenius_distance(a * b * b * a, ComplexMatrix::identity(pair.dim()));
  return {r, r < tol.abs_tol};
}

enum class Letter : std::uint8_t { A, B, AInverse, BInverse };

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(char offending, std::size_t position)
      : std::invalid_argument("invalid braid-word character '" + std::string(1, offending) +
                              "' at position " + std::to_string(position) +
                              " (expected one of a, b, A, B)"),
        character_(offending),
        position_(position) {}

  char character() const { return character_; }
  std::size_t position() const { return position_; }

 private:
  char character_;
  std::size_t position_;
};

/// Finite word over {A, B, A^-1, B^-1}. Text form: lowercase letters are
/// generators, uppercase letters their inverses, whitespace is ignored.
struct BraidWord {
  std::vector<Letter> letters;

  static BraidWord parse(std::string_view text) {
    BraidWord word;
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case 'a': word.letters.push_back(Letter::A); break;
        case 'b': word.letters.push_back(Letter::B); break;
        case 'A': word.letters.push_back(Letter::AInverse); break;
        case 'B': word.letters.push_back(Letter::BInverse); break;
        case ' ': case '\t': case '\n': case '\r': case '\f': case '\v': break;
        default: throw WordParseError(text[i], i);
      }
    }
    return word;
  }

  std::string to_string() const {
    std::string out;
    for (auto l : letters) out.push_back("abAB"[static_cast<int>(l)]);
    return out;
  }

  /// The group inverse: reversed order, each letter inverted.
  BraidWord inverse() const {
    BraidWord out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      switch (*it) {
        case Letter::A: out.letters.push_back(Letter::AInverse); break;
        case Letter::B: out.letters.push_back(Letter::BInverse); break;
        case Letter::AInverse: out.letters.push_back(Letter::A); break;
        case Letter::BInverse: out.letters.push_back(Letter::B); break;
      }
    }
    return out;
  }

  friend BraidWord operator+(BraidWord lhs, const BraidWord& rhs) {
    lhs.letters.insert(lhs.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return lhs;
  }
};

/// Left-to-right product of the word's letters; inverses are adjoints.
inline ComplexMatrix evaluate_word(const BraidPair& pair, const BraidWord& word) {
  const auto a_inv = pair.a().adjoint();
  const auto b_inv = pair.b().adjoint();
  auto out = ComplexMatrix::identity(pair.dim());
  for (auto l : word.letters) {
    switch (l) {
      case Letter::A: out = out * pair.a(); break;
      case Letter::B: out = out * pair.b(); break;
      case Letter::AInverse: out = out * a_inv; break;
      case Letter::BInverse: out = out * b_inv; break;
    }
  }
  return out;
}

struct SolverConfig {
  int max_restarts = 32;
  double residual_target = 1e-10;
  bool exclude_trivial = true;
  std::uint64_t rng_seed = 0;

  void validate() const {
    if (max_restarts < 1) throw PreconditionError("solver: max_restarts must be >= 1");
    if (!(residual_target > 0.0)) throw PreconditionError("solver: residual_target must be > 0");
  }
};

/// Candidates closer than this to `a` count as the trivial solution b = a.
inline constexpr double kTrivialSolutionRadius = 1e-6;

/// e^{i phi} [[e^{i alpha} cos g, e^{i beta} sin g], [-e^{-i beta} sin g, e^{-i alpha} cos g]]
/// covers U(2) with four real parameters (phi, alpha, beta, g).
inline ComplexMatrix unitary_from_angles(const std::array<double, 4>& x) {
  const Complex phase = std::polar(1.0, x[0]);
  const double c = std::cos(x[3]);
  const double s = std::sin(x[3]);
  return {{phase * std::polar(c, x[1]), phase * std::polar(s, x[2])},
          {-phase * std::polar(s, -x[2]), phase * std::polar(c, -x[1])}};
}

struct BraidSolution {
  ComplexMatrix b;
  double residual;   // ||aba - bab||_F, recomputed on the returned b
  int restart;       // index of the start that produced it
};

/// Multi-start simplex search for a unitary b with aba = bab.
/// Restart r draws its starting point from a stream seeded by (rng_seed, r),
/// so results do not depend on how many restarts ran before it.
inline std::optional<BraidSolution> solve_b_given_a(const ComplexMatrix& a,
                                                    const SolverConfig& cfg = {}) {
  cfg.validate();
  if (a.dim() != 2) throw PreconditionError("solve_b_given_a: generator must be 2x2");
  if (!classify(a, Tolerance{1e-10}).unitary) {
    throw PreconditionError("solve_b_given_a: generator is not unitary");
  }

  auto objective = [&](const std::array<double, 4>& x) {
    const auto b = unitary_from_angles(x);
    const double r = frobenius_distance(a * b * a, b * a * b);
    return r * r;
  };

  NelderMeadOptions opts;
  opts.f_target = cfg.residual_target * cfg.residual_target;
  opts.initial_step = 0.5;

  for (int restart = 0; restart < cfg.max_restarts; ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.rng_seed),
                      static_cast<std::uint32_t>(cfg.rng_seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const std::array<double, 4> start{angle(rng), angle(rng), angle(rng), angle(rng) / 4.0};

    const auto found = nelder_mead(objective, start, opts);
    auto b = unitary_from_angles(found.x);
    const double residual = frobenius_distance(a * b * a, b * a * b);
    if (!(residual < cfg.residual_target)) continue;
    if (cfg.exclude_trivial && frobenius_distance(b, a) < kTrivialSolutionRadius) continue;
    return BraidSolution{std::move(b), residual, restart};
  }
  return std::nullopt;
}

}  // namespace braidham
