#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gae/bitstring.hpp"

namespace gae {

/// Template fixing some loci to required alleles; wildcard elsewhere.
struct Schema {
    std::vector<std::pair<std::size_t, std::uint8_t>> fixed;
    double contribution = 0.0;

    /// True when every fixed position carries the required allele.
    /// A schema with no fixed positions matches everything.
    bool matches(const BitString& s) const;
};

/// A fitness problem: a chromosome length plus a deterministic, total
/// evaluation of length-n bit strings.
class FitnessProblem {
public:
    virtual ~FitnessProblem() = default;

    virtual std::string_view name() const = 0;
    virtual std::size_t chromosome_length() const = 0;

    /// Fitness of a chromosome; throws std::invalid_argument on wrong length.
    virtual double evaluate(const BitString& chromosome) const = 0;

    /// Known global optimum fitness, when there is one.
    virtual std::optional<double> optimum_fitness() const { return std::nullopt; }
};

// ---------------------------------------------------------------------------
// Royal Road S1: eight disjoint 5-bit all-ones blocks, 10 points each.

/// Fitness of a 40-bit string: 10 points per complete all-ones block.
double royal_road_s1(const BitString& s);

class RoyalRoadS1 final : public FitnessProblem {
public:
    static constexpr std::size_t kLength = 40;
    static constexpr std::size_t kBlockSize = 5;
    static constexpr std::size_t kBlockCount = 8;
    static constexpr double kBlockValue = 10.0;

    std::string_view name() const override { return "royal-road-s1"; }
    std::size_t chromosome_length() const override { return kLength; }
    double evaluate(const BitString& s) const override { return royal_road_s1(s); }
    std::optional<double> optimum_fitness() const override {
        return kBlockValue * kBlockCount;
    }

    /// The eight block schemata, in block order.
    static const std::vector<Schema>& schemata();
};

// ---------------------------------------------------------------------------
// Binary decoding.

/// Interpret `bits` as an unsigned integer V (most significant bit first)
/// and scale linearly: lo + V / (2^b - 1) * (hi - lo). All-zeros decodes to
/// lo, all-ones to hi. Requires 1 <= b <= 53 and lo < hi.
double decode_real(std::span<const std::uint8_t> bits, double lo, double hi);

// ---------------------------------------------------------------------------
// Optimal control plant:
//   z'' + sin(z) z' + sin(t) cos(z) z^3 = sin(t) u1^2 + cos(t) u2^2 + sin(t) u1 u2
//   z(0) = 2, z'(0) = 2, t in [0, 1]; the payoff is z(1)^2.

struct OdeState {
    double t = 0.0;
    double z1 = 0.0; // z(t)
    double z2 = 0.0; // dz/dt
};

/// Integrate the plant with classical fixed-step RK4 from t = 0 to t_end.
/// `step` must divide [0, t_end] evenly. Returns nullopt if the state
/// leaves the finite range (divergence).
std::optional<OdeState> integrate_plant(double u1, double u2, double step,
                                        double t_end = 1.0);

/// z(1) for constant controls (u1, u2), or nullopt on divergence.
std::optional<double> simulate_plant(double u1, double u2, double step = 1e-3);

/// Fitness of a 60-bit string: two 30-bit controls in [-5, 5], payoff
/// z(1)^2, or 0 when the trajectory diverges.
double control_fitness(const BitString& s, double step = 1e-3);

class OptimalControlProblem final : public FitnessProblem {
public:
    static constexpr std::size_t kBitsPerControl = 30;
    static constexpr double kControlLo = -5.0;
    static constexpr double kControlHi = 5.0;

    explicit OptimalControlProblem(double step = 1e-3);

    std::string_view name() const override { return "optimal-control"; }
    std::size_t chromosome_length() const override { return 2 * kBitsPerControl; }
    double evaluate(const BitString& s) const override;

    double step() const { return step_; }

private:
    double step_;
    int steps_;
    // sin/cos at the half-step grid, shared by every evaluation
    std::vector<double> sin_half_;
    std::vector<double> cos_half_;
};

// ---------------------------------------------------------------------------
// Epistatic Michalewicz function (pairwise-rotated coordinates).

/// Rotate consecutive coordinate pairs by pi/6; the last coordinate is
/// passed through unchanged.
std::vector<double> rotate_epistatic(std::span<const double> x);

/// sum_i sin(y_i) * sin(i * y_i^2 / pi)^20 over the rotated coordinates.
double michalewicz_epistatic(std::span<const double> x);

/// Fitness of a 50-bit string: five 10-bit variables in [0, pi].
double michalewicz_fitness(const BitString& s);

class EpistaticMichalewiczProblem final : public FitnessProblem {
public:
    explicit EpistaticMichalewiczProblem(std::size_t variables = 5,
                                         std::size_t bits_per_variable = 10);

    std::string_view name() const override { return "michalewicz-epistatic"; }
    std::size_t chromosome_length() const override { return variables_ * bits_per_variable_; }
    double evaluate(const BitString& s) const override;

    std::size_t variables() const { return variables_; }

private:
    std::size_t variables_;
    std::size_t bits_per_variable_;
};

// ---------------------------------------------------------------------------

/// Problem registry used by configs; nullptr for an unknown id.
std::unique_ptr<FitnessProblem> make_problem(std::string_view id);

/// The ids make_problem accepts.
std::vector<std::string_view> problem_ids();

} // namespace gae
