#include "dagger/json_io.hpp"

namespace dagger::json {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with member \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing member \"") + key + "\"");
  return *it;
}

Int int_from_json(const Json& j) {
  const Rat x = rat_from_json(j);
  if (x.get_den() != 1) throw ParseError("expected an integer, got " + to_string(x));
  return x.get_num();
}

long long_from_json(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected a JSON integer");
  return j.get<long>();
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  throw ParseError("expected a rational string, got " + j.dump());
}

Json to_json(const IdealZ& ideal) { return ideal.to_string(); }

IdealZ ideal_from_json(const Json& j) { return IdealZ(int_from_json(j)); }

Json to_json(const QuaternionAlgebra& alg) { return {{"a", to_json(alg.a())}, {"b", to_json(alg.b())}}; }

QuaternionAlgebra algebra_from_json(const Json& j) {
  return QuaternionAlgebra(rat_from_json(member(j, "a")), rat_from_json(member(j, "b")));
}

Json to_json(const Quat& x) {
  return {{"w", to_json(x[0])}, {"x", to_json(x[1])}, {"y", to_json(x[2])}, {"z", to_json(x[3])}};
}

Quat quat_from_json(const QuaternionAlgebra& alg, const Json& j) {
  return Quat(alg, rat_from_json(member(j, "w")), rat_from_json(member(j, "x")), rat_from_json(member(j, "y")),
              rat_from_json(member(j, "z")));
}

Json to_json(const OrthogonalInvolution& inv, bool with_algebra) {
  Json out = {{"u", to_json(inv.u())}};
  if (with_algebra) out["algebra"] = to_json(inv.algebra());
  return out;
}

OrthogonalInvolution involution_from_json(const QuaternionAlgebra& alg, const Json& j) {
  if (j.is_object() && j.contains("algebra") && !(algebra_from_json(j["algebra"]) == alg))
    throw DomainError("involution belongs to a different algebra");
  return OrthogonalInvolution(quat_from_json(alg, member(j, "u")));
}

OrthogonalInvolution involution_from_json(const Json& j) {
  return involution_from_json(algebra_from_json(member(j, "algebra")), j);
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || (rows != 0 && j.size() != rows))
    throw ParseError("expected " + std::to_string(rows) + " rows, got " + j.dump());
  RatMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError("expected rows of length " + std::to_string(cols) + ", got " + j[i].dump());
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const IntegralLattice4& lattice) {
  return {{"algebra", to_json(lattice.algebra())}, {"basis", matrix_to_json(lattice.basis())}};
}

IntegralLattice4 lattice_from_json(const Json& j) {
  const QuaternionAlgebra alg = algebra_from_json(member(j, "algebra"));
  const RatMatrix gens = matrix_from_json(member(j, "basis"), 0, 4);
  return IntegralLattice4::from_generators(alg, gens);
}

Order4 order_from_json(const Json& j) { return Order4(lattice_from_json(j)); }

Json to_json(const MaximalityCertificate& cert) {
  Json witnesses = Json::array();
  for (const PrimeWitness& w : cert.witnesses)
    witnesses.push_back({{"prime", to_string(w.prime)}, {"achieved", w.achieved}, {"target", w.target}});
  Json out = {{"verdict", cert.maximal ? "maximal" : "not-maximal"},
              {"target", to_json(cert.target)},
              {"achieved", to_json(cert.achieved)},
              {"witnesses", std::move(witnesses)},
              {"dagger_stable", cert.dagger_stable},
              {"order", to_json(static_cast<const IntegralLattice4&>(cert.order))}};
  out["eichler_form"] = cert.eichler_form ? Json(*cert.eichler_form) : Json(nullptr);
  return out;
}

MaximalityCertificate certificate_from_json(const Json& j) {
  const std::string verdict = member(j, "verdict").is_string() ? member(j, "verdict").get<std::string>() : "";
  if (verdict != "maximal" && verdict != "not-maximal") throw ParseError("verdict must be maximal or not-maximal");
  MaximalityCertificate cert{order_from_json(member(j, "order")),
                             ideal_from_json(member(j, "target")),
                             ideal_from_json(member(j, "achieved")),
                             false,
                             std::nullopt,
                             verdict == "maximal",
                             {}};
  const Json& stable = member(j, "dagger_stable");
  if (!stable.is_boolean()) throw ParseError("dagger_stable must be a boolean");
  cert.dagger_stable = stable.get<bool>();
  const Json& eichler = member(j, "eichler_form");
  if (eichler.is_boolean()) {
    cert.eichler_form = eichler.get<bool>();
  } else if (!eichler.is_null()) {
    throw ParseError("eichler_form must be a boolean or null");
  }
  const Json& witnesses = member(j, "witnesses");
  if (!witnesses.is_array()) throw ParseError("witnesses must be an array");
  for (const Json& w : witnesses)
    cert.witnesses.push_back(
        {int_from_json(member(w, "prime")), long_from_json(member(w, "achieved")), long_from_json(member(w, "target"))});
  return cert;
}

Json to_json(const LocalQuadLattice2& lattice) {
  const Mat2& b = lattice.basis();
  return {{"p", lattice.prime().get_si()},
          {"lambda", to_json(lattice.lambda())},
          {"basis", matrix_to_json(transpose(b))}};
}

LocalQuadLattice2 local_lattice_from_json(const Json& j) {
  const Json& p = member(j, "p");
  if (!p.is_number_integer()) throw ParseError("p must be a JSON integer");
  return LocalQuadLattice2(Int(p.dump()), rat_from_json(member(j, "lambda")),
                           transpose(matrix_from_json(member(j, "basis"), 2, 2)));
}

Json classification_report(const LocalClassification& c, long classes) {
  Json reps = Json::array();
  for (std::size_t index : c.representatives) {
    const LocalQuadLattice2& l = c.lattices[index];
    reps.push_back({{"gram", matrix_to_json(l.gram())}, {"lattice", to_json(l)}});
  }
  return {{"p", c.prime.get_si()},
          {"lambda", to_json(c.lambda)},
          {"classes", classes},
          {"representatives", std::move(reps)}};
}

Json error_object(std::string_view kind, std::string_view message) {
  return {{"error", {{"kind", std::string(kind)}, {"message", std::string(message)}}}};
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace dagger::json
