#include "gae/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gae {

bool Schema::matches(const BitString& s) const {
    for (const auto& [pos, allele] : fixed) {
        if (s[pos] != allele) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Royal Road S1

double royal_road_s1(const BitString& s) {
    if (s.size() != RoyalRoadS1::kLength)
        throw std::invalid_argument("royal_road_s1: expected a 40-bit string, got " +
                                    std::to_string(s.size()));
    double total = 0.0;
    for (std::size_t block = 0; block < RoyalRoadS1::kBlockCount; ++block) {
        const std::size_t begin = block * RoyalRoadS1::kBlockSize;
        bool complete = true;
        for (std::size_t i = begin; i < begin + RoyalRoadS1::kBlockSize; ++i) {
            if (s[i] != 1) {
                complete = false;
                break;
            }
        }
        if (complete) total += RoyalRoadS1::kBlockValue;
    }
    return total;
}

const std::vector<Schema>& RoyalRoadS1::schemata() {
    static const std::vector<Schema> blocks = [] {
        std::vector<Schema> out;
        out.reserve(kBlockCount);
        for (std::size_t block = 0; block < kBlockCount; ++block) {
            Schema s;
            s.contribution = kBlockValue;
            for (std::size_t i = 0; i < kBlockSize; ++i)
                s.fixed.emplace_back(block * kBlockSize + i, std::uint8_t{1});
            out.push_back(std::move(s));
        }
        return out;
    }();
    return blocks;
}

// ---------------------------------------------------------------------------
// Binary decoding

double decode_real(std::span<const std::uint8_t> bits, double lo, double hi) {
    if (bits.empty() || bits.size() > 53)
        throw std::invalid_argument("decode_real: segment length must be in [1, 53]");
    if (!(lo < hi)) throw std::invalid_argument("decode_real: requires lo < hi");
    std::uint64_t value = 0;
    for (const auto b : bits) value = (value << 1) | b;
    const double denom = std::ldexp(1.0, static_cast<int>(bits.size())) - 1.0;
    return lo + static_cast<double>(value) / denom * (hi - lo);
}

// ---------------------------------------------------------------------------
// Optimal control plant

namespace {

// z1' = z2
// z2' = -sin(z1) z2 - sin(t) cos(z1) z1^3 + sin(t) a + cos(t) b
// with a = u1^2 + u1 u2 and b = u2^2 collecting the constant-control forcing.
struct PlantDerivative {
    double a;
    double b;

    void operator()(double sin_t, double cos_t, double z1, double z2,
                    double& d1, double& d2) const {
        const double s = std::sin(z1);
        const double c = std::cos(z1);
        d1 = z2;
        d2 = -s * z2 - sin_t * c * z1 * z1 * z1 + sin_t * a + cos_t * b;
    }
};

// RK4 over a precomputed half-step trig grid: entry 2i holds t_i, entry
// 2i+1 the midpoint of step i.
std::optional<OdeState> rk4_plant(double u1, double u2, double step, int steps,
                                  std::span<const double> sin_half,
                                  std::span<const double> cos_half) {
    const PlantDerivative deriv{u1 * u1 + u1 * u2, u2 * u2};
    double z1 = 2.0;
    double z2 = 2.0;
    for (int i = 0; i < steps; ++i) {
        const int j0 = 2 * i;
        const int jm = 2 * i + 1;
        const int j1 = 2 * i + 2;
        double k11, k12, k21, k22, k31, k32, k41, k42;
        deriv(sin_half[j0], cos_half[j0], z1, z2, k11, k12);
        deriv(sin_half[jm], cos_half[jm], z1 + 0.5 * step * k11, z2 + 0.5 * step * k12, k21, k22);
        deriv(sin_half[jm], cos_half[jm], z1 + 0.5 * step * k21, z2 + 0.5 * step * k22, k31, k32);
        deriv(sin_half[j1], cos_half[j1], z1 + step * k31, z2 + step * k32, k41, k42);
        z1 += step / 6.0 * (k11 + 2.0 * k21 + 2.0 * k31 + k41);
        z2 += step / 6.0 * (k12 + 2.0 * k22 + 2.0 * k32 + k42);
        if (!std::isfinite(z1) || !std::isfinite(z2)) return std::nullopt;
    }
    return OdeState{step * steps, z1, z2};
}

int plant_step_count(double step, double t_end) {
    if (!(step > 0.0)) throw std::invalid_argument("plant: step must be positive");
    if (t_end < 0.0) throw std::invalid_argument("plant: t_end must be nonnegative");
    const double raw = t_end / step;
    const int steps = static_cast<int>(std::llround(raw));
    if (std::abs(raw - steps) > 1e-9)
        throw std::invalid_argument("plant: step must divide the interval evenly");
    return steps;
}

void fill_half_step_trig(double step, int steps, std::vector<double>& sin_half,
                         std::vector<double>& cos_half) {
    sin_half.resize(2 * static_cast<std::size_t>(steps) + 1);
    cos_half.resize(sin_half.size());
    for (std::size_t j = 0; j < sin_half.size(); ++j) {
        const double t = static_cast<double>(j) * step / 2.0;
        sin_half[j] = std::sin(t);
        cos_half[j] = std::cos(t);
    }
}

} // namespace

std::optional<OdeState> integrate_plant(double u1, double u2, double step, double t_end) {
    const int steps = plant_step_count(step, t_end);
    if (steps == 0) return OdeState{0.0, 2.0, 2.0};
    std::vector<double> sin_half, cos_half;
    fill_half_step_trig(step, steps, sin_half, cos_half);
    return rk4_plant(u1, u2, step, steps, sin_half, cos_half);
}

std::optional<double> simulate_plant(double u1, double u2, double step) {
    const auto state = integrate_plant(u1, u2, step);
    if (!state) return std::nullopt;
    return state->z1;
}

double control_fitness(const BitString& s, double step) {
    const OptimalControlProblem problem(step);
    return problem.evaluate(s);
}

OptimalControlProblem::OptimalControlProblem(double step)
    : step_(step), steps_(plant_step_count(step, 1.0)) {
    fill_half_step_trig(step_, steps_, sin_half_, cos_half_);
}

double OptimalControlProblem::evaluate(const BitString& s) const {
    if (s.size() != chromosome_length())
        throw std::invalid_argument("optimal-control: expected a 60-bit string, got " +
                                    std::to_string(s.size()));
    const double u1 = decode_real(s.segment(0, kBitsPerControl), kControlLo, kControlHi);
    const double u2 =
        decode_real(s.segment(kBitsPerControl, kBitsPerControl), kControlLo, kControlHi);
    const auto state = rk4_plant(u1, u2, step_, steps_, sin_half_, cos_half_);
    if (!state) return 0.0; // divergent trajectory scores zero
    return state->z1 * state->z1;
}

// ---------------------------------------------------------------------------
// Epistatic Michalewicz function

std::vector<double> rotate_epistatic(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<double> y(n);
    if (n == 0) return y;
    const double c = std::cos(std::numbers::pi / 6.0);
    const double s = std::sin(std::numbers::pi / 6.0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const std::size_t i = idx + 1; // 1-based position
        if (i == n) {
            y[idx] = x[idx]; // last coordinate passes through
        } else if (i % 2 == 1) {
            y[idx] = x[idx] * c - x[idx + 1] * s;
        } else {
            y[idx] = x[idx - 1] * s + x[idx] * c;
        }
    }
    return y;
}

double michalewicz_epistatic(std::span<const double> x) {
    const auto y = rotate_epistatic(x);
    double total = 0.0;
    for (std::size_t idx = 0; idx < y.size(); ++idx) {
        const double yi = y[idx];
        const double i = static_cast<double>(idx + 1);
        const double t = std::sin(i * yi * yi / std::numbers::pi);
        // t^20 by squaring
        const double t2 = t * t;
        const double t4 = t2 * t2;
        const double t8 = t4 * t4;
        const double t16 = t8 * t8;
        total += std::sin(yi) * (t16 * t4);
    }
    return total;
}

double michalewicz_fitness(const BitString& s) {
    static const EpistaticMichalewiczProblem problem;
    return problem.evaluate(s);
}

EpistaticMichalewiczProblem::EpistaticMichalewiczProblem(std::size_t variables,
                                                         std::size_t bits_per_variable)
    : variables_(variables), bits_per_variable_(bits_per_variable) {
    if (variables_ == 0 || bits_per_variable_ == 0)
        throw std::invalid_argument("michalewicz-epistatic: needs at least one variable and bit");
}

double EpistaticMichalewiczProblem::evaluate(const BitString& s) const {
    if (s.size() != chromosome_length())
        throw std::invalid_argument("michalewicz-epistatic: expected " +
                                    std::to_string(chromosome_length()) +
                                    "-bit string, got " + std::to_string(s.size()));
    std::vector<double> x(variables_);
    for (std::size_t k = 0; k < variables_; ++k) {
        x[k] = decode_real(s.segment(k * bits_per_variable_, bits_per_variable_), 0.0,
                           std::numbers::pi);
    }
    return michalewicz_epistatic(x);
}

// ---------------------------------------------------------------------------

std::unique_ptr<FitnessProblem> make_problem(std::string_view id) {
    if (id == "royal-road-s1") return std::make_unique<RoyalRoadS1>();
    if (id == "optimal-control") return std::make_unique<OptimalControlProblem>();
    if (id == "michalewicz-epistatic") return std::make_unique<EpistaticMichalewiczProblem>();
    return nullptr;
}

std::vector<std::string_view> problem_ids() {
    return {"royal-road-s1", "optimal-control", "michalewicz-epistatic"};
}

} // namespace gae
