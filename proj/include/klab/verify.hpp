#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "klab/core.hpp"
#include "klab/lattice.hpp"

namespace klab {

struct Sample {
    std::string point;
    cplx lhs;
    cplx rhs;
    double residual = 0.0;
};

struct SkippedSample {
    std::string point;
    ErrorKind kind;
    std::string detail;
};

struct IdentityReport {
    std::string identity_id;
    cplx tau;
    std::uint64_t seed = 0;
    SummationBudget budget_used;
    double tolerance = 0.0;
    std::vector<Sample> samples;
    std::vector<SkippedSample> skipped;
    double max_residual = 0.0;
    bool pass = false;
    // Negative control: the identity with a deliberately wrong sign must fail.
    std::optional<double> control_residual;
    double control_threshold = 0.0;
    std::vector<std::string> notes;

    bool control_ok() const { return !control_residual || *control_residual > control_threshold; }
    void finalize();
};

// |lhs - rhs| / max(1, |rhs|)
double residual(cplx lhs, cplx rhs);

// Deterministic uniform doubles from a 64-bit Mersenne twister.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed);
    double uniform(double lo, double hi);
    // alpha uniform in the sampling window, beta uniform in [0, 1).
    cplx point(const Modulus& tau, double alpha_lo, double alpha_hi);

private:
    std::mt19937_64 rng_;
};

// Half-width of the excluded band around integers when sampling alpha.
inline constexpr double kSampleMargin = 0.1;

IdentityReport verify_eta_constant(const Modulus& tau, const SummationBudget& budget = {});
IdentityReport verify_kronecker_id(const Modulus& tau, int n_samples, std::uint64_t seed,
                                   const SummationBudget& budget = {});
IdentityReport verify_functional_equation(const Modulus& tau, int n_samples, std::uint64_t seed,
                                          const SummationBudget& budget = {});
IdentityReport verify_t_quasi(const Modulus& tau, int grid, std::uint64_t seed, const SummationBudget& budget = {});
IdentityReport verify_hqp(const Modulus& tau, int grid, std::uint64_t seed, const SummationBudget& budget = {});
IdentityReport verify_g_bridge(const Modulus& tau, int grid, std::uint64_t seed, const SummationBudget& budget = {});
IdentityReport verify_fg_identity(const Modulus& tau, int n_samples, std::uint64_t seed,
                                  const SummationBudget& budget = {});
IdentityReport verify_identity1(const Modulus& tau, int n_samples, std::uint64_t seed,
                                const SummationBudget& budget = {});
IdentityReport verify_identity2(const Modulus& tau, int n_samples, std::uint64_t seed,
                                const SummationBudget& budget = {});
IdentityReport verify_psi(const Modulus& tau, int n_samples, std::uint64_t seed, const SummationBudget& budget = {});
IdentityReport verify_h_five_line(const Modulus& tau, int n_samples, std::uint64_t seed,
                                  const SummationBudget& budget = {});
IdentityReport verify_m2_assoc(const std::array<Rational, 4>& slopes, const Modulus& tau, int n_samples,
                               std::uint64_t seed, const SummationBudget& budget = {});
IdentityReport verify_m3_oracle(const std::vector<std::array<Rational, 4>>& quadruples, const Modulus& tau,
                                std::uint64_t seed, const SummationBudget& budget = {});

// Supported slope order for the five-term identity: lambda3 < lambda1 < lambda4 < lambda2 < lambda5.
bool five_term_order_ok(const std::array<Rational, 5>& slopes);
IdentityReport verify_five_term(const std::array<Rational, 5>& slopes, const Modulus& tau, int n_samples,
                                std::uint64_t seed, const SummationBudget& budget = {});
IdentityReport verify_sign_determination(const std::array<Rational, 5>& slopes, const Modulus& tau, int n_samples,
                                         std::uint64_t seed, const SummationBudget& budget = {});

// Five composition terms (coefficient at label 0 of L1 ∩ L5), in the order
// F2345.θ125, F1234.θ145, θ123.F1345, θ345.F1235, θ234.F1245.
std::array<cplx, 5> five_term_values(const std::vector<LineOnTorus>& lines, const Modulus& tau,
                                     const SummationBudget& budget = {}, long representative_offset = 0);

inline constexpr std::array<int, 5> kFiveTermSigns{1, 1, -1, -1, 1};

struct RunParams {
    cplx tau{0.0, 1.0};
    int samples = 0;  // 0 selects the suite default
    std::uint64_t seed = 7;
    SummationBudget budget;
    std::vector<Rational> slopes;
};

const std::vector<std::string>& identity_ids();
IdentityReport run_identity(std::string_view id, const RunParams& params);

}  // namespace klab
