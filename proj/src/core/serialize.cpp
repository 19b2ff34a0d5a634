#include "serialize.hpp"

#include <iomanip>
#include <sstream>

#include "errors.hpp"

namespace kmchar {

std::string short_fraction(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_num().get_str() + "/" + c.get_den().get_str();
}

Json series_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
  return Json{{"grain", s.grain()},
              {"shift", to_fraction_string(s.shift())},
              {"order", to_fraction_string(s.order())},
              {"coefficients", std::move(coeffs)}};
}

QSeries series_from_json(const Json& j) {
  try {
    if (!j.is_object()) fail(ErrorCode::InvalidArgument, "series JSON must be an object");
    const auto grain = j.at("grain").get<std::int64_t>();
    if (grain <= 0) fail(ErrorCode::InvalidArgument, "grain must be positive");
    const Rat shift = parse_rat(j.at("shift").get<std::string>());
    const Rat order = parse_rat(j.at("order").get<std::string>());
    if (grain % denominator_i64(shift) != 0)
      fail(ErrorCode::InvalidArgument, "shift denominator must divide the grain");
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(parse_int(c.get<std::string>()));
    if (coeffs.size() != lattice_count(grain, shift, order))
      fail(ErrorCode::InvalidArgument, "coefficient count does not match grain, shift and order");
    return QSeries(grain, shift, order, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed series JSON: ") + e.what());
  }
}

std::string series_csv(const QSeries& s) {
  std::ostringstream out;
  out << "exponent,coefficient\n";
  for (std::size_t j = 0; j < s.size(); ++j)
    out << to_fraction_string(s.exponent(j)) << ',' << s.coefficients()[j].get_str() << '\n';
  return out.str();
}

std::string series_table(const QSeries& s) {
  std::ostringstream out;
  out << "# grain " << s.grain() << ", shift " << short_fraction(s.shift()) << ", known through q^"
      << short_fraction(s.order()) << '\n';
  std::size_t width = 8;
  for (std::size_t j = 0; j < s.size(); ++j) width = std::max(width, short_fraction(s.exponent(j)).size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "exponent" << "coefficient\n";
  for (std::size_t j = 0; j < s.size(); ++j)
    out << std::left << std::setw(static_cast<int>(width) + 2) << short_fraction(s.exponent(j))
        << s.coefficients()[j].get_str() << '\n';
  return out.str();
}

Json mseries_json(const MSeries& m) {
  Json vars = m.nvars() == 3 ? Json{"u", "v", "w"} : Json{"u", "v"};
  Json terms = Json::array();
  for (const auto& [e, c] : m.terms()) {
    Json t = Json::array();
    for (int i = 0; i < m.nvars(); ++i) t.push_back(e[i]);
    t.push_back(c.get_str());
    terms.push_back(std::move(t));
  }
  return Json{{"vars", std::move(vars)}, {"order", m.order()}, {"weights", m.weights()}, {"terms", std::move(terms)}};
}

Json mismatch_json(const std::optional<Mismatch>& m) {
  if (!m) return nullptr;
  return Json{{"exponent", to_fraction_string(m->exponent)}, {"lhs", m->lhs.get_str()}, {"rhs", m->rhs.get_str()}};
}

Json product_spec_json(const ProductSpec& spec) {
  Json factors = Json::array();
  for (const auto& f : spec.factors)
    factors.push_back(Json{{"modulus", f.modulus}, {"residues", f.residues}, {"exponent", f.exponent}});
  return factors;
}

Json weight_json(const HighestWeight& w) {
  return Json{{"algebra", algebra(w.algebra).name}, {"coords", w.coords}, {"level", w.level()}};
}

Json algebra_json(const AlgebraDesc& alg) {
  return Json{{"label", alg.name},       {"rank", alg.rank},   {"gcm", alg.gcm},
              {"marks", alg.marks},      {"comarks", alg.comarks},
              {"twist", alg.twist},      {"dual_coxeter", alg.dual_coxeter},
              {"coxeter", alg.coxeter()}};
}

Json trace_json(const TraceSpec& t) {
  return Json{{"central_charge", to_fraction_string(t.central_charge)},
              {"lowest_weight", to_fraction_string(t.lowest_weight)},
              {"prefactor", to_fraction_string(t.prefactor())},
              {"body", series_json(t.body)}};
}

namespace {

Json comparison_json(const SeriesComparison& c) {
  return Json{{"equal", c.equal},
              {"max_abs_diff", c.max_abs_diff.get_str()},
              {"compared_order", to_fraction_string(c.compared_order)},
              {"first_mismatch", mismatch_json(c.first_mismatch)}};
}

}  // namespace

Json duality_json(const DualityReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"k0", e.k0},
                           {"status", e.ok() ? "ok" : "mismatch"},
                           {"lhs", series_json(e.lhs)},
                           {"rhs", series_json(e.rhs)},
                           {"max_abs_diff", e.sides.max_abs_diff.get_str()},
                           {"compared_order", to_fraction_string(e.sides.compared_order)},
                           {"first_mismatch", mismatch_json(e.sides.first_mismatch)},
                           {"lhs_vs_product", comparison_json(e.lhs_product)},
                           {"rhs_vs_product", comparison_json(e.rhs_product)}});
  }
  return Json{{"k", r.k}, {"order", r.order}, {"status", r.ok() ? "ok" : "mismatch"}, {"entries", std::move(entries)}};
}

Json trace_report_json(const TraceReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"identity", c.identity},
                          {"k", c.k},
                          {"k0", c.k0},
                          {"order", to_fraction_string(c.order)},
                          {"status", c.ok() ? "ok" : "mismatch"},
                          {"prefactor_equal", c.prefactor_equal},
                          {"first_mismatch", mismatch_json(c.body.first_mismatch)}});
  }
  return Json{{"order", r.order}, {"status", r.ok() ? "ok" : "mismatch"}, {"checks", std::move(checks)}};
}

Json appendix_json(const AppendixReport& r) {
  Json theta{{"order", r.order},
             {"compared_order", r.theta.compared_order},
             {"status", r.theta.equal ? "ok" : "mismatch"},
             {"first_mismatch", nullptr}};
  if (r.theta.first_mismatch) {
    const auto& [e, p] = *r.theta.first_mismatch;
    theta["first_mismatch"] = Json{{"monomial", {e[0], e[1], e[2]}}, {"lhs", p.first.get_str()}, {"rhs", p.second.get_str()}};
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json expected = Json::array();
    for (const auto& [e, v] : c.expected) expected.push_back(Json{to_fraction_string(e), v.get_str()});
    Json item{{"name", c.name}, {"status", c.ok ? "ok" : "mismatch"}};
    if (c.prefactor) item["prefactor"] = to_fraction_string(*c.prefactor);
    item["series"] = series_json(c.computed);
    item["expected"] = std::move(expected);
    item["first_mismatch"] = mismatch_json(c.first_mismatch);
    checks.push_back(std::move(item));
  }
  Json noniso = Json::array();
  for (const auto& n : r.nonisomorphy)
    noniso.push_back(Json{{"lhs", n.lhs},
                          {"rhs", n.rhs},
                          {"compared_order", to_fraction_string(n.compared_order)},
                          {"first_difference", mismatch_json(n.first_difference)}});
  return Json{{"status", r.ok() ? "ok" : "mismatch"},
              {"theta_decomposition", std::move(theta)},
              {"series", std::move(checks)},
              {"square_of_level1", r.square_ok},
              {"prefactor_matches_central_charge", r.prefactor_consistent},
              {"nonisomorphy", std::move(noniso)}};
}

}  // namespace kmchar
