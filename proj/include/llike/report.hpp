// report.hpp
// CSV / JSON serializers for every result type, and a small SVG line-chart
// emitter (|value| against log10 x). Floating values are written with
// round-trip precision so identical runs give identical bytes.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "llike/bounds.hpp"
#include "llike/coprime_set.hpp"
#include "llike/estimators.hpp"
#include "llike/semigroup.hpp"

namespace llike {

// Shortest round-trip form, always with a decimal point or exponent.
std::string format_double(double v);

nlohmann::json to_json(const RationalSum& s);
nlohmann::json set_json(const CoprimeSet& set);
nlohmann::json to_json(const CorrelationSpec& spec);
nlohmann::json to_json(const ConvergenceReport& r);
nlohmann::json to_json(const Decomposition& d, std::size_t max_listed = 1000);
nlohmann::json to_json(const SemigroupEnumeration& e);
nlohmann::json to_json(const ReciprocalMass& m);
nlohmann::json to_json(const LcmMoment& m);
nlohmann::json to_json(const TailMass& t);
nlohmann::json to_json(const BoundReport& b);
nlohmann::json to_json(const TruncationReport& r);

// x,count,value
void write_convergence_csv(std::ostream& out, const ConvergenceReport& r);
// generator,part,spf   (spf empty for primes)
void write_decomposition_csv(std::ostream& out, const Decomposition& d);
// element,exponents    exponents as "c^e" pairs joined by '/'
void write_semigroup_csv(std::ostream& out, const SemigroupEnumeration& e);
// x,K,recip_sum,ht_bound,empirical,ratio
void write_bounds_csv(std::ostream& out, const std::vector<BoundReport>& rows);

std::string exponent_string(const SemigroupEnumeration& e, std::size_t i);

// Polyline of |values[i]| against log10(xs[i]) with labelled axes.
std::string svg_chart(const std::vector<std::uint64_t>& xs, const std::vector<double>& values,
                      const std::string& title);

} // namespace llike
