#include "braidk/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace braidk {

nlohmann::json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return static_cast<long long>(x);
  return x.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(int_to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs rows, cols, entries");
  std::size_t rows = j["rows"].get<std::size_t>();
  std::size_t cols = j["cols"].get<std::size_t>();
  const nlohmann::json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows)
    throw std::invalid_argument("matrix JSON entry rows do not match 'rows'");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols)
      throw std::invalid_argument("matrix JSON row " + std::to_string(i) +
                                  " does not match 'cols'");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = int_from_json(entries[i][c]);
  }
  return m;
}

nlohmann::json abelian_to_json(const AbelianGroup& g) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const Int& t : g.torsion) torsion.push_back(int_to_json(t));
  return {{"free_rank", int_to_json(g.free_rank)}, {"torsion", torsion}};
}

nlohmann::json kpair_to_json(const KPair& k) {
  return {{"k0", abelian_to_json(k.k0)},
          {"k1", abelian_to_json(k.k1)},
          {"torsion_free", k.torsion_free()},
          {"provenance", k.provenance}};
}

nlohmann::json combed_to_json(const CombedForm& f) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t k = 0; k < f.levels.size(); ++k) {
    int t = f.strands - 1 - static_cast<int>(k);
    nlohmann::json level = nlohmann::json::array();
    for (const Letter& l : f.levels[k].letters()) {
      long long sign = l.exp < 0 ? -1 : 1;
      for (long long r = 0; r < std::llabs(l.exp); ++r)
        level.push_back(nlohmann::json::array(
            {to_string(PureGen{l.gen, t + 1}), sign}));
    }
    levels.push_back(std::move(level));
  }
  return {{"n", f.strands}, {"levels", levels}};
}

Presentation presentation_from_json(const nlohmann::json& j) {
  if (!j.contains("generators") || !j.contains("relators"))
    throw std::invalid_argument(
        "presentation JSON needs generators and relators");
  Presentation p;
  for (const nlohmann::json& g : j["generators"])
    p.generator_names.push_back(g.get<std::string>());
  for (const nlohmann::json& r : j["relators"])
    p.relators.push_back(
        parse_word(p.generator_names, r.get<std::string>()));
  return p;
}

nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json relators = nlohmann::json::array();
  for (const FreeWord& r : p.relators)
    relators.push_back(to_string(r, p.generator_names));
  return {{"generators", p.generator_names}, {"relators", relators}};
}

}  // namespace braidk
