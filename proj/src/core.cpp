#include "klab/core.hpp"

#include <cmath>

namespace klab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::BoundaryProximity: return "BoundaryProximity";
    case ErrorKind::ConvergenceBudgetExceeded: return "ConvergenceBudgetExceeded";
    }
    return "Unknown";
}

EvalError::EvalError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

Modulus::Modulus(cplx tau) : tau_(tau) {
    if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
        throw EvalError(ErrorKind::DomainError, "Im(tau) must be positive");
    }
    q_ = e_of(tau);
}

Modulus Modulus::scaled(int k) const {
    if (k < 1) throw EvalError(ErrorKind::DomainError, "modulus scale must be a positive integer");
    return Modulus(tau_ * static_cast<double>(k));
}

void SummationBudget::validate() const {
    if (!(target_tol > 0.0) || max_shell < 1 || stall_shells < 1) {
        throw EvalError(ErrorKind::DomainError, "invalid summation budget");
    }
}

cplx e_of(cplx z) { return std::exp(kTwoPiI * z); }

double alpha(cplx z, const Modulus& tau) { return z.imag() / tau.im(); }

double dist_to_integers(double x) { return std::abs(x - std::nearbyint(x)); }

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

double lattice_distance(cplx z, const Modulus& tau) {
    const double a = alpha(z, tau);
    const double b = z.real() - a * tau.tau().real();
    return std::hypot(dist_to_integers(a), dist_to_integers(b));
}

}  // namespace klab
