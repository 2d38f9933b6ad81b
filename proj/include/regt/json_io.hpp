#ifndef REGT_JSON_IO_HPP_
#define REGT_JSON_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "cayley.hpp"
#include "ideals.hpp"
#include "partition.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace regt {

inline void to_json(nlohmann::json& j, Partition const& p) {
  j = nlohmann::json{{"n", p.size()}, {"blocks", p.blocks()}};
}

inline Partition partition_from_json(nlohmann::json const& j) {
  return Partition(j.at("n").get<int>(),
                   j.at("blocks").get<std::vector<std::vector<int>>>());
}

inline void to_json(nlohmann::json& j, Transformation const& t) {
  j = nlohmann::json{{"img", t.img()}};
}

inline Transformation transformation_from_json(nlohmann::json const& j) {
  return Transformation(j.at("img").get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, SemigroupInstance const& s) {
  std::vector<std::vector<int>> elements;
  for (auto const& t : s.elements) {
    elements.push_back(t.img());
  }
  j = nlohmann::json{
      {"E", s.E}, {"kind", kind_name(s.kind)}, {"elements", elements}};
}

inline SemigroupInstance instance_from_json(nlohmann::json const& j) {
  Partition                   E = partition_from_json(j.at("E"));
  std::vector<Transformation> elements;
  for (auto const& img : j.at("elements")) {
    elements.push_back(Transformation(img.get<std::vector<int>>()));
  }
  return make_instance(std::move(E),
                       kind_from_name(j.at("kind").get<std::string>()),
                       std::move(elements));
}

inline void to_json(nlohmann::json& j, GreensClassification const& g) {
  j = nlohmann::json{{"relation", relation_name(g.relation)},
                     {"classes", g.classes}};
}

inline void to_json(nlohmann::json& j, CayleyTable const& t) {
  j = nlohmann::json{{"order", t.order}, {"table", t.table}};
  if (!t.labels.empty()) {
    j["labels"] = t.labels;
  }
}

inline CayleyTable cayley_from_json(nlohmann::json const& j) {
  return CayleyTable(
      j.at("order").get<int>(),
      j.at("table").get<std::vector<std::vector<int>>>(),
      j.contains("labels")
          ? j.at("labels").get<std::vector<std::string>>()
          : std::vector<std::string>{});
}

inline void to_json(nlohmann::json& j, IdealSet const& s) {
  j = nlohmann::json{{"provenance", provenance_name(s.provenance)},
                     {"elements", s.members}};
  if (s.generator) {
    j["generator"] = s.generator->img();
  }
}

inline void to_json(nlohmann::json& j, EmbeddingReport const& r) {
  j = nlohmann::json{{"e_star_preserving", r.all_e_star_preserving},
                     {"regular", r.all_regular},
                     {"collapses_classes", r.all_collapse_classes},
                     {"homomorphism", r.homomorphism},
                     {"injective", r.injective},
                     {"ok", r.ok()}};
}

inline void to_json(nlohmann::json& j, Embedding const& e) {
  std::vector<std::vector<int>> psi;
  for (auto const& t : e.psi) {
    psi.push_back(t.img());
  }
  j = nlohmann::json{
      {"E", e.E}, {"psi", psi}, {"certification", e.report}};
}

}  // namespace regt

#endif  // REGT_JSON_IO_HPP_
