#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace klab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr cplx kTwoPiI{0.0, 2.0 * kPi};

// Guard radius in alpha-coordinates for poles and cone boundaries.
inline constexpr double kGuard = 1e-9;

enum class ErrorKind { DomainError, PoleProximity, BoundaryProximity, ConvergenceBudgetExceeded };

std::string_view to_string(ErrorKind kind);

class EvalError : public std::runtime_error {
public:
    EvalError(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

class Modulus {
public:
    explicit Modulus(cplx tau);

    cplx tau() const noexcept { return tau_; }
    double im() const noexcept { return tau_.imag(); }
    cplx q() const noexcept { return q_; }
    cplx xi() const noexcept { return (tau_ + 1.0) / 2.0; }
    Modulus scaled(int k) const;

private:
    cplx tau_;
    cplx q_;
};

struct SummationBudget {
    double target_tol = 1e-12;
    int max_shell = 200;
    int stall_shells = 2;

    void validate() const;
};

struct SeriesValue {
    cplx value;
    int shells_used = 0;
};

cplx e_of(cplx z);
double alpha(cplx z, const Modulus& tau);
double dist_to_integers(double x);
double sign_of(double x);

// Distance of z to the lattice Z + tau Z measured in the (alpha, beta) coordinates
// of z = alpha * tau + beta.
double lattice_distance(cplx z, const Modulus& tau);

}  // namespace klab
