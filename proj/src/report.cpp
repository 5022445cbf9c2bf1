#include "geogrow/report.hpp"

#include <sstream>

namespace geogrow {

std::string emit_report(const ReportDoc& doc) { return doc.dump(2) + "\n"; }

ReportDoc parse_report(const std::string& text) {
  try {
    return ReportDoc::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::config, std::string("bad report: ") + e.what());
  }
}

ReportDoc strip_timing(ReportDoc doc) {
  doc.erase("timing");
  return doc;
}

ReportDoc make_report(const std::string& command) {
  ReportDoc doc;
  doc["schema_version"] = report_schema_version;
  doc["tool"] = {{"name", "geogrow"}, {"version", tool_version}};
  doc["command"] = command;
  return doc;
}

std::string int_text(const Int& v) { return v.str(); }

std::string rat_text(const Rat& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

ReportDoc vec_json(const VecZ& v) {
  ReportDoc arr = ReportDoc::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(int_text(v[i]));
  return arr;
}

namespace {

ReportDoc word_json(const GeneratingSet& gens, const Word& w) {
  return ReportDoc(word_str(gens, w));
}

ReportDoc poly_json(const std::vector<Int>& p) {
  ReportDoc arr = ReportDoc::array();
  for (const Int& c : p) arr.push_back(int_text(c));
  return arr;
}

}  // namespace

ReportDoc to_json(const FellowTravelReport& rep, const GeneratingSet& gens) {
  ReportDoc doc;
  doc["delta"] = rep.delta;
  doc["radius"] = rep.radius;
  doc["holds"] = rep.holds;
  doc["minimal_checked"] = int_text(rep.minimal_checked);
  doc["falsified"] = int_text(rep.falsified);
  doc["states"] = rep.states;
  if (rep.counterexample)
    doc["counterexample"] = word_json(gens, *rep.counterexample);
  return doc;
}

ReportDoc to_json(const ValidationReport& rep, const GeneratingSet& gens) {
  ReportDoc doc;
  doc["agree"] = rep.agree;
  doc["radius"] = rep.radius;
  doc["words_checked"] = int_text(rep.words_checked);
  if (rep.disagreement) {
    doc["disagreement"] = word_json(gens, *rep.disagreement);
    doc["automaton_accepts"] = rep.automaton_accepts;
  }
  return doc;
}

ReportDoc to_json(const RationalGF& gf) {
  ReportDoc doc;
  doc["text"] = gf.text();
  doc["numerator"] = poly_json(gf.num);
  doc["denominator"] = poly_json(gf.den);
  return doc;
}

ReportDoc to_json(const Polytope& p) {
  ReportDoc doc;
  doc["dimension"] = p.m;
  ReportDoc verts = ReportDoc::array();
  for (const VecQ& v : p.vertices) {
    ReportDoc vert = ReportDoc::array();
    for (int i = 0; i < p.m; ++i) vert.push_back(rat_text(v[i]));
    verts.push_back(vert);
  }
  doc["vertices"] = verts;
  ReportDoc facets = ReportDoc::array();
  for (const Facet& f : p.facets) {
    ReportDoc facet;
    facet["normal"] = vec_json(f.normal);
    facet["offset"] = rat_text(f.offset);
    facets.push_back(facet);
  }
  doc["facets"] = facets;
  return doc;
}

ReportDoc to_json(const AbelianBound& b) {
  ReportDoc doc;
  doc["bound"] = b.bound;
  doc["frontier_closed"] = b.frontier_closed;
  doc["minimal"] = b.minimal;
  return doc;
}

ReportDoc to_json(const ConeLanguage& lang, const GeneratingSet& gens) {
  ReportDoc doc;
  doc["scale"] = int_text(lang.scale);
  ReportDoc rays = ReportDoc::array();
  for (const Ray& r : lang.tri.rays) rays.push_back(vec_json(r.dir));
  doc["rays"] = rays;
  doc["simplices"] = lang.tri.simplices;
  ReportDoc vws = ReportDoc::array();
  for (const Word& w : lang.vertex_words) vws.push_back(word_json(gens, w));
  doc["vertex_words"] = vws;
  ReportDoc cws = ReportDoc::array();
  for (const Word& w : lang.coset_words) cws.push_back(word_json(gens, w));
  doc["coset_words"] = cws;
  return doc;
}

ReportDoc to_json(const ConeCheck& check) {
  ReportDoc doc;
  doc["geodesic_core"] = check.geodesic_core;
  doc["surjective"] = check.surjective;
  doc["max_slack"] = check.max_slack;
  doc["words_checked"] = check.words_checked;
  if (check.uncovered) doc["uncovered"] = *check.uncovered;
  return doc;
}

ReportDoc to_json(const NerodeTable& table, const GeneratingSet& gens) {
  ReportDoc doc;
  doc["n_max"] = table.n_max;
  doc["all_separated"] = table.all_separated;
  ReportDoc rows = ReportDoc::array();
  for (const NerodeRow& row : table.rows) {
    ReportDoc r;
    r["n"] = row.n;
    r["m"] = row.m;
    r["geodesic"] = word_json(gens, row.geodesic);
    r["ungeodesic"] = word_json(gens, row.ungeodesic);
    r["separated"] = row.separated;
    rows.push_back(r);
  }
  doc["rows"] = rows;
  return doc;
}

ReportDoc gens_json(const GeneratingSet& gens) {
  ReportDoc arr = ReportDoc::array();
  for (const Letter& l : gens.letters) {
    ReportDoc letter;
    letter["name"] = l.name;
    letter["weight"] = l.weight;
    arr.push_back(letter);
  }
  return arr;
}

}  // namespace geogrow
