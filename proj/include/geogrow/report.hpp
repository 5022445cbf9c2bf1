#pragma once

// Structured reports for the command line tools.
//
// Every subcommand assembles one document: schema version, tool stamp,
// config echo, per-stage results, and a timing block.  The machine form is
// JSON with keys in insertion order, so identical configs produce byte
// identical documents once the timing block is stripped.  Exact integers
// and rationals render as decimal strings to stay lossless.

#include <json.hpp>

#include "geogrow/fellow.hpp"
#include "geogrow/growth.hpp"
#include "geogrow/hull.hpp"
#include "geogrow/polytope.hpp"
#include "geogrow/profile_fsa.hpp"

#include <string>

namespace geogrow {

inline constexpr int report_schema_version = 1;
inline constexpr const char* tool_version = "0.1.0";

using ReportDoc = nlohmann::ordered_json;

// Canonical text: two-space indent plus trailing newline, so that
// parse -> emit is the identity on emitted documents.
std::string emit_report(const ReportDoc& doc);
ReportDoc parse_report(const std::string& text);

// Copy without the timing block; golden comparisons use this.
ReportDoc strip_timing(ReportDoc doc);

// Fresh document with the schema, tool and command headers filled in.
ReportDoc make_report(const std::string& command);

std::string int_text(const Int& v);
std::string rat_text(const Rat& v);
ReportDoc vec_json(const VecZ& v);

ReportDoc to_json(const FellowTravelReport& rep, const GeneratingSet& gens);
ReportDoc to_json(const ValidationReport& rep, const GeneratingSet& gens);
ReportDoc to_json(const RationalGF& gf);
ReportDoc to_json(const Polytope& p);
ReportDoc to_json(const AbelianBound& b);
ReportDoc to_json(const ConeLanguage& lang, const GeneratingSet& gens);
ReportDoc to_json(const ConeCheck& check);
ReportDoc to_json(const NerodeTable& table, const GeneratingSet& gens);
ReportDoc gens_json(const GeneratingSet& gens);

}  // namespace geogrow
