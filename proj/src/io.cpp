#include "lcstruct/io.hpp"

#include "lcstruct/error.hpp"

namespace lcstruct {

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(Errc::BadInput, "ideal JSON: " + what);
}

}  // namespace

CMonomialIdeal parse_ideal(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is one past the offending character
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(Errc::BadInput, "malformed JSON at " + line_column(text, at));
  }
  if (!j.is_object()) schema_error("top level must be an object");
  if (!j.contains("variables") || !j["variables"].is_number_integer())
    schema_error("\"variables\" must be an integer");
  if (!j.contains("generators") || !j["generators"].is_array())
    schema_error("\"generators\" must be an array");
  const int n = j["variables"].get<int>();
  std::vector<Generator> gens;
  for (std::size_t k = 0; k < j["generators"].size(); ++k) {
    const Json& g = j["generators"][k];
    const std::string where = "generator " + std::to_string(k + 1);
    if (!g.is_object() || !g.contains("coefficient") || !g["coefficient"].is_string())
      throw Error(Errc::BadInput, "ideal JSON: " + where + ": \"coefficient\" must be a string", k);
    if (!g.contains("exponents") || !g["exponents"].is_array())
      throw Error(Errc::BadInput, "ideal JSON: " + where + ": \"exponents\" must be an array", k);
    Generator gen;
    try {
      gen.coefficient = parse_int(g["coefficient"].get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::BadInput, where + ": " + e.what(), k);
    }
    for (const auto& x : g["exponents"]) {
      if (!x.is_number_integer())
        throw Error(Errc::BadInput, "ideal JSON: " + where + ": exponents must be integers", k);
      gen.exponents.push_back(x.get<int>());
    }
    gens.push_back(std::move(gen));
  }
  return CMonomialIdeal::validate(n, std::move(gens));
}

Json ideal_to_json(const CMonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators())
    gens.push_back({{"coefficient", g.coefficient.get_str()}, {"exponents", g.exponents}});
  return {{"variables", ideal.variables()}, {"generators", gens}};
}

Json pelem_to_json(const PElem& e) {
  return {{"free", e.free}, {"q", e.divfree}, {"prufer", e.prufer}, {"torsion", e.torsion}};
}

PElem pelem_from_json(const Json& j, const Int& p) {
  PElem e;
  e.p = p;
  e.free = j.at("free").get<int>();
  e.divfree = j.at("q").get<int>();
  e.prufer = j.at("prufer").get<int>();
  e.torsion = j.at("torsion").get<std::vector<int>>();
  return e;
}

Json report_to_json(const StructureReport& report, bool all_spots) {
  Json out;
  out["i"] = report.i;
  out["degree"] = report.degree;
  out["alpha"] = report.alpha;
  Json locals = Json::object(), bass = Json::object();
  for (const auto& [p, e] : report.locals) locals[p.get_str()] = pelem_to_json(e);
  for (const auto& [p, b] : report.bass) bass[p.get_str()] = {b.mu0, b.mu1};
  out["locals"] = locals;
  out["bass"] = bass;
  out["flags"] = {{"usual", report.flags.usual}, {"split_certified", report.flags.split_certified}};
  if (all_spots) {
    Json spots = Json::object();
    for (const auto& [p, homology] : report.spots) {
      Json column = Json::array();
      for (const auto& e : homology) column.push_back(pelem_to_json(e));
      spots[p.get_str()] = column;
    }
    out["spots"] = spots;
    out["rational_ranks"] = report.rational_ranks;
  }
  return out;
}

StructureReport report_from_json(const Json& j) {
  StructureReport r;
  r.i = j.at("i").get<std::size_t>();
  r.degree = j.at("degree").get<Exponents>();
  r.alpha = j.at("alpha").get<std::size_t>();
  for (const auto& [key, value] : j.at("locals").items()) {
    const Int p = parse_int(key);
    r.locals[p] = pelem_from_json(value, p);
  }
  for (const auto& [key, value] : j.at("bass").items())
    r.bass[parse_int(key)] = {value.at(0).get<int>(), value.at(1).get<int>()};
  r.flags.usual = j.at("flags").at("usual").get<bool>();
  r.flags.split_certified = j.at("flags").at("split_certified").get<bool>();
  if (j.contains("spots")) {
    for (const auto& [key, value] : j.at("spots").items()) {
      const Int p = parse_int(key);
      for (const auto& e : value) r.spots[p].push_back(pelem_from_json(e, p));
    }
  }
  if (j.contains("rational_ranks")) r.rational_ranks = j.at("rational_ranks").get<std::vector<std::size_t>>();
  return r;
}

Json slice_to_json(const CechSlice& slice) {
  Json terms = Json::array();
  for (const auto& term : slice.terms) {
    Json summands = Json::array();
    for (const auto& s : term) {
      std::vector<int> subset;
      for (int j = 0; j < 32; ++j)
        if (s.subset >> j & 1u) subset.push_back(j + 1);
      summands.push_back({{"subset", subset}, {"inverted", s.inverted_value().get_str()}});
    }
    terms.push_back(summands);
  }
  Json differentials = Json::array();
  for (const auto& d : slice.differentials) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      std::vector<long> row;
      for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c).get_si());
      rows.push_back(row);
    }
    differentials.push_back(rows);
  }
  return {{"degree", slice.degree}, {"terms", terms}, {"differentials", differentials}};
}

Json alpha_table_to_json(const AlphaTable& table) {
  Json out = Json::object();
  for (const auto& e : table.entries) out[e.block.label()] = e.alpha;
  return out;
}

Json scan_to_json(const std::vector<BlockScan>& scan) {
  Json out = Json::array();
  for (const auto& s : scan)
    out.push_back({{"block", s.block.label()},
                   {"representative", s.block.representative()},
                   {"alpha", s.alpha},
                   {"torsion_free_present", s.torsion_free_present},
                   {"sampled", s.sampled}});
  return out;
}

}  // namespace lcstruct
