#pragma once

#include <array>
#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "klab/core.hpp"

namespace klab {

enum class Execution { serial, parallel };

// Shells grow in sup-norm radius around `center`; within a shell, indices are
// visited in lexicographic order. Shells below `min_radius` never count as stalled.
struct ShellOptions {
    std::array<long, 2> center{0, 0};
    int min_radius = 0;
    Execution exec = Execution::serial;
};

namespace detail {

[[noreturn]] inline void budget_exceeded(int max_shell) {
    throw EvalError(ErrorKind::ConvergenceBudgetExceeded,
                    "series not converged within max_shell=" + std::to_string(max_shell));
}

inline void shell_indices(int r, std::vector<std::array<long, 2>>& out) {
    out.clear();
    if (r == 0) {
        out.push_back({0, 0});
        return;
    }
    for (long i = -r; i <= r; ++i) {
        if (i == -r || i == r) {
            for (long j = -r; j <= r; ++j) out.push_back({i, j});
        } else {
            out.push_back({i, -static_cast<long>(r)});
            out.push_back({i, static_cast<long>(r)});
        }
    }
}

}  // namespace detail

template <class Term>
SeriesValue sum_by_shells_1d(Term&& term, const SummationBudget& budget, long center = 0, int min_radius = 0) {
    budget.validate();
    cplx total{0.0, 0.0};
    int stalled = 0;
    for (int r = 0;; ++r) {
        if (r > budget.max_shell) detail::budget_exceeded(budget.max_shell);
        cplx shell{0.0, 0.0};
        double mass = 0.0;
        if (r == 0) {
            cplx t = term(center);
            shell += t;
            mass += std::abs(t);
        } else {
            cplx lo = term(center - r);
            cplx hi = term(center + r);
            shell = lo + hi;
            mass = std::abs(lo) + std::abs(hi);
        }
        total += shell;
        if (r >= min_radius && mass < budget.target_tol) {
            if (++stalled >= budget.stall_shells) return {total, r};
        } else {
            stalled = 0;
        }
    }
}

template <class Term>
SeriesValue sum_by_shells_2d(Term&& term, const SummationBudget& budget, const ShellOptions& opt = {}) {
    budget.validate();
    std::vector<std::array<long, 2>> idx;
    std::vector<cplx> vals;
    cplx total{0.0, 0.0};
    int stalled = 0;
    for (int r = 0;; ++r) {
        if (r > budget.max_shell) detail::budget_exceeded(budget.max_shell);
        detail::shell_indices(r, idx);
        for (auto& p : idx) {
            p[0] += opt.center[0];
            p[1] += opt.center[1];
        }
        const long n = static_cast<long>(idx.size());
        vals.assign(idx.size(), cplx{0.0, 0.0});
        if (opt.exec == Execution::parallel && n >= 64) {
            std::vector<std::exception_ptr> errs(idx.size());
#pragma omp parallel for schedule(static)
            for (long k = 0; k < n; ++k) {
                try {
                    vals[k] = term(idx[k][0], idx[k][1]);
                } catch (...) {
                    errs[k] = std::current_exception();
                }
            }
            for (auto& e : errs) {
                if (e) std::rethrow_exception(e);
            }
        } else {
            for (long k = 0; k < n; ++k) vals[k] = term(idx[k][0], idx[k][1]);
        }
        cplx shell{0.0, 0.0};
        double mass = 0.0;
        for (const cplx& v : vals) {
            shell += v;
            mass += std::abs(v);
        }
        total += shell;
        if (r >= opt.min_radius && mass < budget.target_tol) {
            if (++stalled >= budget.stall_shells) return {total, r};
        } else {
            stalled = 0;
        }
    }
}

}  // namespace klab
