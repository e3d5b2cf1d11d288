#include "qextremal/report.hpp"

#include <sstream>

namespace qx {

namespace {

template <class T> Json opt(const std::optional<T> &v) {
  return v ? Json(*v) : Json(nullptr);
}

Json opt_count(const std::optional<QCount> &v) {
  return v ? Json(to_decimal(*v)) : Json(nullptr);
}

Json kind_k(const FamilyKind &kind) {
  return kind.tag() == FamilyKind::Tag::FisherK ? Json(kind.k()) : Json(nullptr);
}

Json base_report(const std::string &command, long long q, std::size_t n,
                 const FamilyKind &kind, const BoundInfo &bound) {
  Json j;
  j["command"] = command;
  j["q"] = q;
  j["n"] = n;
  j["kind"] = kind.name();
  j["k"] = kind_k(kind);
  j["size"] = nullptr;
  j["bound"] = to_decimal(bound.bound);
  j["conjectured_bound"] = opt_count(bound.conjectured);
  j["bound_status"] = to_string(bound.status);
  j["max_size"] = nullptr;
  j["proven_optimal"] = nullptr;
  j["witness"] = nullptr;
  j["nodes_explored"] = nullptr;
  j["elapsed_ms"] = nullptr;
  j["point_order_hash"] = nullptr;
  return j;
}

} // namespace

const std::vector<std::string> &report_keys() {
  static const std::vector<std::string> keys = {
      "command",        "q",
      "n",              "kind",
      "k",              "size",
      "bound",          "conjectured_bound",
      "bound_status",   "max_size",
      "proven_optimal", "witness",
      "nodes_explored", "elapsed_ms",
      "point_order_hash"};
  return keys;
}

Json subspace_json(const Subspace &s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.ambient(); ++j)
      row.push_back(static_cast<int>(s.basis().at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"k", s.dim()}, {"rows", std::move(rows)}};
}

Json verification_json(const VerificationReport &v) {
  Json j;
  j["conditions_hold"] = v.conditions_hold;
  j["size"] = v.size;
  j["bound"] = to_decimal(v.bound.bound);
  j["bound_status"] = to_string(v.bound.status);
  j["bound_satisfied"] = v.bound_satisfied;
  j["rank_witness"] = opt(v.rank_witness);
  j["parity_witness"] = opt(v.parity_witness);
  j["gram_structure_ok"] = opt(v.gram_structure_ok);
  j["even_row_weights"] = opt(v.even_row_weights);
  j["witness_ok"] = v.witness_ok;
  j["failure_detail"] = opt(v.failure_detail);
  return j;
}

Json verify_report_json(const Family &f, const VerificationReport &v,
                        const std::string &point_order_hash) {
  Json j = base_report("verify", f.field()->q(), f.ambient(), v.kind, v.bound);
  j["size"] = f.size();
  j["point_order_hash"] = point_order_hash;
  j["verification"] = verification_json(v);
  j["verdict"] = v.satisfied() ? "satisfied" : "violated";
  return j;
}

Json extremal_report_json(const std::string &command, const ExtremalReport &r) {
  Json j = base_report(command, r.q, r.n, r.kind, r.bound);
  j["size"] = r.witness.size();
  j["max_size"] = r.clique.max_size;
  j["proven_optimal"] = r.clique.proven_optimal;
  Json witness = Json::array();
  for (const auto &m : r.witness.members())
    witness.push_back(subspace_json(m));
  j["witness"] = std::move(witness);
  j["nodes_explored"] = r.clique.nodes_explored;
  j["elapsed_ms"] = r.clique.elapsed.count();
  j["point_order_hash"] = r.point_order_hash;
  j["vertex_count"] = r.vertex_count;
  j["seed_size"] = r.seed_size;
  j["within_bound"] = r.within_bound;
  j["within_conjecture"] = opt(r.within_conjecture);
  j["outcome"] = r.outcome;
  j["verification"] = verification_json(r.verification);
  return j;
}

Json batch_report_json(const std::string &command, const BatchReport &b) {
  Json j;
  j["command"] = command;
  j["experiment"] = b.name;
  Json instances = Json::array();
  for (const auto &e : b.entries) {
    if (e.report) {
      instances.push_back(extremal_report_json(command, *e.report));
    } else {
      instances.push_back(Json{{"command", command},
                               {"q", e.point.q},
                               {"n", e.point.n},
                               {"kind", e.kind},
                               {"error", e.error.value_or("unknown error")}});
    }
  }
  j["instances"] = std::move(instances);
  return j;
}

std::string to_text(const Json &report) {
  std::ostringstream out;
  for (const auto &[key, value] : report.items()) {
    if (value.is_string())
      out << key << ": " << value.get<std::string>() << '\n';
    else
      out << key << ": " << value.dump() << '\n';
  }
  return out.str();
}

} // namespace qx
