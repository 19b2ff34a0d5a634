#pragma once

// JSON / CSV / table renderings of series and reports. JSON is the stable
// machine format; key order is fixed so identical inputs give identical
// bytes.

#include <string>

#include <json.hpp>

#include "algebra.hpp"
#include "appendix.hpp"
#include "characters.hpp"
#include "multipoly.hpp"
#include "qseries.hpp"
#include "qtraces.hpp"

namespace kmchar {

using Json = nlohmann::ordered_json;

Json series_json(const QSeries& s);
// Throws InvalidArgument on malformed input.
QSeries series_from_json(const Json& j);
std::string series_csv(const QSeries& s);
std::string series_table(const QSeries& s);
// "p/q" for fractions, "p" for integers.
std::string short_fraction(const Rat& r);

Json mseries_json(const MSeries& m);
Json mismatch_json(const std::optional<Mismatch>& m);
Json product_spec_json(const ProductSpec& spec);
Json weight_json(const HighestWeight& w);
Json algebra_json(const AlgebraDesc& alg);
Json trace_json(const TraceSpec& t);

Json duality_json(const DualityReport& r);
Json trace_report_json(const TraceReport& r);
Json appendix_json(const AppendixReport& r);

}  // namespace kmchar
