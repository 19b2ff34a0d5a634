#include "kmchar.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "algebra.hpp"
#include "appendix.hpp"
#include "characters.hpp"
#include "errors.hpp"
#include "qtraces.hpp"
#include "selftest.hpp"
#include "serialize.hpp"

struct kmc_series {
  kmchar::QSeries value;
};

namespace {

using namespace kmchar;

thread_local std::string last_error;

template <class Fn>
kmc_status guard(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return KMC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<kmc_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    last_error = e.what();
    return KMC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return KMC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(kmc_series** out, QSeries s) {
  need(out, "out");
  *out = new kmc_series{std::move(s)};
}

Rat fraction(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "denominator must be nonzero");
  return rat(num, den);
}

QSeries character(AlgebraLabel label, const std::vector<int>& coords, const std::vector<int>& spec, int order,
                  kmc_method method) {
  if (order < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
  const HighestWeight lam = make_weight(label, coords);
  if (method == KMC_METHOD_PRODUCT) {
    const int level = lam.level();
    if (label == AlgebraLabel::A1_1 && spec == std::vector<int>{1, 2})
      return product_char(label, level, coords[0], order);
    if (label == AlgebraLabel::A2_2 && spec == std::vector<int>{1, 1}) {
      if (level % 2 == 0) fail(ErrorCode::UnsupportedLevelParity, "product formulas cover odd a2_2 levels 2k+1 only");
      return product_char(label, (level - 1) / 2, coords[0], order);
    }
    fail(ErrorCode::InvalidArgument, "product formulas exist for a1_1 at spec 1,2 and a2_2 at spec 1,1 only");
  }
  if (method != KMC_METHOD_WEYL_KAC) fail(ErrorCode::InvalidArgument, "unknown method");
  bool homogeneous = !spec.empty() && spec[0] == 1;
  for (std::size_t i = 1; i < spec.size(); ++i) homogeneous = homogeneous && spec[i] == 0;
  if (homogeneous && spec.size() == coords.size()) return homogeneous_char(lam, order);
  return wk_specialized_char(lam, spec, order);
}

}  // namespace

extern "C" {

const char* kmc_version(void) { return "0.1.0"; }

const char* kmc_last_error(void) { return last_error.c_str(); }

const char* kmc_status_name(kmc_status status) {
  switch (status) {
    case KMC_OK: return "ok";
    case KMC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case KMC_ERR_UNSUPPORTED_LEVEL_PARITY: return "unsupported_level_parity";
    case KMC_ERR_NON_UNIT_LEADING_COEFFICIENT: return "non_unit_leading_coefficient";
    case KMC_ERR_NON_REGULAR_WEIGHT: return "non_regular_weight";
    case KMC_ERR_PARITY_CONFLICT: return "parity_conflict";
    case KMC_ERR_IDENTITY_VIOLATION: return "identity_violation";
    case KMC_ERR_INSUFFICIENT_ORDER: return "insufficient_order";
    case KMC_ERR_INCOMPATIBLE_TRUNCATION: return "incompatible_truncation";
    case KMC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void kmc_string_free(char* s) { std::free(s); }

void kmc_series_free(kmc_series* s) { delete s; }

kmc_status kmc_character(const char* algebra_name, const int* coords, size_t ncoords, const int* spec, size_t nspec,
                         int order, kmc_method method, kmc_series** out) {
  return guard([&] {
    need(algebra_name, "algebra");
    need(coords, "coords");
    need(spec, "spec");
    emit(out, character(parse_algebra_label(algebra_name), std::vector<int>(coords, coords + ncoords),
                        std::vector<int>(spec, spec + nspec), order, method));
  });
}

kmc_status kmc_vacuum_graded_dim(int k, int k0, int order, kmc_series** out) {
  return guard([&] { emit(out, vacuum_graded_dim(k, k0, order)); });
}

kmc_status kmc_series_from_json(const char* json, kmc_series** out) {
  return guard([&] {
    need(json, "json");
    Json parsed;
    try {
      parsed = Json::parse(json);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
    emit(out, series_from_json(parsed));
  });
}

kmc_status kmc_series_format(const kmc_series* s, kmc_format format, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    switch (format) {
      case KMC_FORMAT_JSON: *out = dup_string(series_json(s->value).dump()); return;
      case KMC_FORMAT_CSV: *out = dup_string(series_csv(s->value)); return;
      case KMC_FORMAT_TABLE: *out = dup_string(series_table(s->value)); return;
    }
    fail(ErrorCode::InvalidArgument, "unknown format");
  });
}

kmc_status kmc_series_add(const kmc_series* a, const kmc_series* b, kmc_series** out) {
  return guard([&] {
    need(a, "a");
    need(b, "b");
    emit(out, add(a->value, b->value));
  });
}

kmc_status kmc_series_mul(const kmc_series* a, const kmc_series* b, kmc_series** out) {
  return guard([&] {
    need(a, "a");
    need(b, "b");
    emit(out, mul(a->value, b->value));
  });
}

kmc_status kmc_series_invert(const kmc_series* a, kmc_series** out) {
  return guard([&] {
    need(a, "a");
    emit(out, invert(a->value));
  });
}

kmc_status kmc_series_substitute_power(const kmc_series* a, long num, long den, kmc_series** out) {
  return guard([&] {
    need(a, "a");
    emit(out, substitute_power(a->value, fraction(num, den)));
  });
}

kmc_status kmc_series_shift(const kmc_series* a, long num, long den, kmc_series** out) {
  return guard([&] {
    need(a, "a");
    emit(out, shift_exponent(a->value, fraction(num, den)));
  });
}

kmc_status kmc_series_equal(const kmc_series* a, const kmc_series* b, int* equal) {
  return guard([&] {
    need(a, "a");
    need(b, "b");
    need(equal, "equal");
    *equal = a->value == b->value ? 1 : 0;
  });
}

kmc_status kmc_series_coefficient(const kmc_series* s, long num, long den, char** out) {
  return guard([&] {
    need(s, "series");
    need(out, "out");
    auto c = s->value.coefficient(fraction(num, den));
    if (!c) fail(ErrorCode::InsufficientOrder, "exponent lies beyond the truncation order");
    *out = dup_string(c->get_str());
  });
}

kmc_status kmc_describe_json(const char* algebra_name, char** out) {
  return guard([&] {
    need(out, "out");
    Json j = Json::array();
    if (algebra_name) {
      j.push_back(algebra_json(algebra(parse_algebra_label(algebra_name))));
    } else {
      for (auto label : all_algebras()) j.push_back(algebra_json(algebra(label)));
    }
    *out = dup_string(j.dump());
  });
}

kmc_status kmc_level_weights_json(const char* algebra_name, int level, char** out) {
  return guard([&] {
    need(algebra_name, "algebra");
    need(out, "out");
    Json j = Json::array();
    for (const auto& w : level_weights(parse_algebra_label(algebra_name), level)) j.push_back(weight_json(w));
    *out = dup_string(j.dump());
  });
}

kmc_status kmc_duality_report(int k, int order, int jobs, char** out, int* all_ok) {
  return guard([&] {
    need(out, "out");
    const auto r = verify_duality(k, order, jobs);
    *out = dup_string(duality_json(r).dump());
    if (all_ok) *all_ok = r.ok() ? 1 : 0;
  });
}

kmc_status kmc_trace_json(const char* kind, int k, int k0, int order, char** out) {
  return guard([&] {
    need(kind, "kind");
    need(out, "out");
    const std::string name = kind;
    if (order < 0) fail(ErrorCode::InvalidArgument, "order must be nonnegative");
    auto make = [&]() -> TraceSpec {
      if (name == "chi_tilde") return chi_tilde(k, k0, order);
      if (name == "chi_nu") return chi_nu(k, k0, order);
      if (name == "f") return f_trace(k, k0, order);
      if (name == "chi_tau") return chi_tau(k, k0, order);
      fail(ErrorCode::InvalidArgument, "unknown trace kind '" + name + "'");
    };
    const TraceSpec t = make();
    Json j{{"trace", name}, {"k", k}, {"k0", k0}};
    const Json body = trace_json(t);
    for (const auto& [key, v] : body.items()) j[key] = v;
    *out = dup_string(j.dump());
  });
}

kmc_status kmc_qtrace_report(int k, int k0, int order, int jobs, char** out, int* all_ok) {
  return guard([&] {
    need(out, "out");
    const auto r = trace_report(k, k, k0, order, jobs);
    *out = dup_string(trace_report_json(r).dump());
    if (all_ok) *all_ok = r.ok() ? 1 : 0;
  });
}

kmc_status kmc_appendix_report(int order, char** out, int* all_ok) {
  return guard([&] {
    need(out, "out");
    const auto r = appendix_report(order);
    *out = dup_string(appendix_json(r).dump());
    if (all_ok) *all_ok = r.ok() ? 1 : 0;
  });
}

kmc_status kmc_selftest_report(int jobs, kmc_format format, char** out, int* all_ok) {
  return guard([&] {
    need(out, "out");
    if (format != KMC_FORMAT_JSON && format != KMC_FORMAT_TABLE)
      fail(ErrorCode::InvalidArgument, "selftest reports are JSON or table");
    const auto r = run_selftest(jobs);
    *out = dup_string(format == KMC_FORMAT_JSON ? selftest_json(r).dump() : selftest_table(r));
    if (all_ok) *all_ok = std::all_of(r.begin(), r.end(), [](const CriterionResult& c) { return c.passed; }) ? 1 : 0;
  });
}

}  // extern "C"
