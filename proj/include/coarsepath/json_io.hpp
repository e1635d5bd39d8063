#ifndef COARSEPATH_JSON_IO_HPP
#define COARSEPATH_JSON_IO_HPP

#include <json.hpp>

#include "coarsepath/decomposition.hpp"
#include "coarsepath/domination.hpp"
#include "coarsepath/harness.hpp"
#include "coarsepath/layering.hpp"
#include "coarsepath/mccarty.hpp"
#include "coarsepath/orderings.hpp"
#include "coarsepath/quasi_isometry.hpp"

namespace coarsepath {

using Json = nlohmann::ordered_json;

Json decomposition_json(const PathDecomposition& pd);
Json metrics_json(const DecompositionMetrics& m);
Json caterpillar_json(const Caterpillar& t);
Json qi_json(const WeightedPath& p, const QuasiIsometryMap& m);
Json layout_json(const LinearLayout& layout);
Json domination_json(const DominatingPair& w);
Json domination_json(const DominatingPath& w);
Json fat_minor_json(const FatMinorWitness& w);
Json report_json(const ParameterReport& r, int n);

// CSV row matching report_csv_header(); absent fields left empty.
std::string report_csv_header();
std::string report_csv_row(const ParameterReport& r, int n);

}  // namespace coarsepath

#endif
