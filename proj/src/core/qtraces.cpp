#include "qtraces.hpp"

#include <algorithm>

#include "algebra.hpp"
#include "characters.hpp"
#include "errors.hpp"
#include "parallel.hpp"

namespace kmchar {

Rat TraceSpec::prefactor() const {
  Rat r = lowest_weight - central_charge / 24;
  r.canonicalize();
  return r;
}

QSeries TraceSpec::series() const { return shift_exponent(body, prefactor()); }

namespace {

struct TraceSet {
  TraceSpec tilde, nu, f, tau;
};

QSeries a1_body(int k, int k0, int N) {
  QSeries ch = wk_specialized_char({AlgebraLabel::A1_1, {k0, k - k0}}, {1, 2}, N);
  return substitute_power(ch, rat(1, 3));
}

TraceSpec tilde_from(const ConformalData& d, QSeries body) { return {d.c1_tilde, d.h, std::move(body)}; }
TraceSpec nu_from(const ConformalData& d, QSeries body) { return {d.c1, d.h_nu, std::move(body)}; }

TraceSpec tau_from(const ConformalData& d, const TraceSpec& nu) {
  Rat lw = d.h_nu / 2 + d.c1 / 16;
  lw.canonicalize();
  return {d.c2, lw, substitute_power(nu.body, rat(1, 2))};
}

TraceSet all_traces(int k, int k0, int N) {
  const auto d = conformal_scalars(k, k0);
  QSeries body = a1_body(k, k0, N);
  TraceSpec nu = nu_from(d, body);
  TraceSpec tau = tau_from(d, nu);
  return {tilde_from(d, std::move(body)), std::move(nu), {d.c2, d.lam, vacuum_graded_dim(k, k0, N)}, std::move(tau)};
}

IdentityCheck check(std::string name, int k, int k0, const Rat& lhs_pre, const QSeries& lhs,
                    const Rat& rhs_pre, const QSeries& rhs) {
  IdentityCheck c;
  c.identity = std::move(name);
  c.k = k;
  c.k0 = k0;
  c.prefactor_equal = lhs_pre == rhs_pre;
  c.body = compare(lhs, rhs);
  c.order = c.body.compared_order;
  if (lhs.order() != rhs.order()) c.body.equal = false;
  return c;
}

}  // namespace

TraceSpec chi_tilde(int k, int k0, int N) { return tilde_from(conformal_scalars(k, k0), a1_body(k, k0, N)); }

TraceSpec chi_nu(int k, int k0, int N) {
  const auto d = conformal_scalars(k, k0);
  QSeries body = a1_body(k, k0, N);
  TraceSpec tilde = tilde_from(d, body);
  TraceSpec nu = nu_from(d, std::move(body));
  if (!(tilde.series() == nu.series()))
    fail(ErrorCode::IdentityViolation, "twisted trace differs from the shifted-Virasoro trace");
  return nu;
}

TraceSpec f_trace(int k, int k0, int N) {
  const auto d = conformal_scalars(k, k0);
  return {d.c2, d.lam, vacuum_graded_dim(k, k0, N)};
}

TraceSpec chi_tau(int k, int k0, int N) {
  const auto d = conformal_scalars(k, k0);
  TraceSpec tau = tau_from(d, chi_nu(k, k0, N));
  if (!(tau.series() == f_trace(k, k0, N).series()))
    fail(ErrorCode::IdentityViolation, "tau-twisted trace differs from the vacuum-space trace");
  return tau;
}

std::vector<IdentityCheck> trace_identity_checks(int k, int k0, int N) {
  const TraceSet t = all_traces(k, k0, N);
  Rat half = t.nu.prefactor() / 2;
  half.canonicalize();
  return {
      check("shifted_equals_twisted", k, k0, t.tilde.prefactor(), t.tilde.body, t.nu.prefactor(), t.nu.body),
      check("vacuum_equals_twisted_at_half", k, k0, t.f.prefactor(), t.f.body, half,
            substitute_power(t.nu.body, rat(1, 2))),
      check("tau_twisted_equals_vacuum", k, k0, t.tau.prefactor(), t.tau.body, t.f.prefactor(), t.f.body),
  };
}

bool TraceReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.ok(); });
}

TraceReport trace_report(int k_min, int k_max, int k0, int N, int jobs) {
  if (k_min < 1 || k_max < k_min) fail(ErrorCode::InvalidArgument, "need 1 <= k_min <= k_max");
  if (N < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
  std::vector<std::pair<int, int>> tasks;
  for (int k = k_min; k <= k_max; ++k) {
    if (k0 >= 0) {
      if (k0 > k) fail(ErrorCode::InvalidArgument, "k0 must not exceed k");
      tasks.emplace_back(k, k0);
    } else {
      for (int j = 0; j <= k; ++j) tasks.emplace_back(k, j);
    }
  }
  std::vector<std::vector<IdentityCheck>> slots(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), jobs, [&](int i) {
    slots[static_cast<std::size_t>(i)] = trace_identity_checks(tasks[i].first, tasks[i].second, N);
  });
  TraceReport report{N, {}};
  for (auto& s : slots)
    for (auto& c : s) report.checks.push_back(std::move(c));
  return report;
}

namespace {

// -sum_j C_j x^{j+1} p'(x), truncated at x^order.
std::vector<Rat> apply_derivation(const std::vector<Rat>& C, const std::vector<Rat>& p, int order) {
  std::vector<Rat> out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    // p_i x^i -> i p_i x^{i-1}, times x^{j+1}.
    for (std::size_t j = 1; j <= C.size(); ++j) {
      const std::size_t e = i + j;
      if (e > static_cast<std::size_t>(order)) break;
      out[e] -= C[j - 1] * p[i] * static_cast<long>(i);
    }
  }
  return out;
}

}  // namespace

std::vector<Rat> delta2_forward(const std::vector<Rat>& C, int order) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "forward expansion needs order >= 1");
  std::vector<Rat> result(static_cast<std::size_t>(order) + 1);
  std::vector<Rat> term(static_cast<std::size_t>(order) + 1);
  term[1] = 1;
  Rat fact = 1;
  // Each application raises the lowest degree by at least one.
  for (int n = 0; n < order; ++n) {
    if (n > 0) {
      term = apply_derivation(C, term, order);
      fact *= n;
    }
    for (std::size_t i = 0; i < term.size(); ++i) result[i] += term[i] / fact;
  }
  for (auto& r : result) r.canonicalize();
  return result;
}

std::vector<Rat> delta2_constants(int J) {
  if (J < 0) fail(ErrorCode::InvalidArgument, "J must be nonnegative");
  std::vector<Rat> C;
  for (int m = 1; m <= J; ++m) {
    C.push_back(Rat(0));
    // The x^{m+1} coefficient is (terms in C_1..C_{m-1}) - C_m.
    const auto e = delta2_forward(C, m + 1);
    const Rat target = m == 1 ? rat(1, 2) : Rat(0);
    C.back() = e[static_cast<std::size_t>(m) + 1] - target;
    C.back().canonicalize();
  }
  return C;
}

}  // namespace kmchar
