#include "sympinv/io.hpp"

namespace sympinv {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json to_json(const Field& f) {
  if (f.is_prime()) return Json{{"kind", "prime"}, {"p", f.p()}};
  return Json{{"kind", "rational"}};
}

Field field_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) bad("field kind must be a string");
  if (kind == "rational") return Field::rational();
  if (kind != "prime") bad("unknown field kind " + kind.dump());
  const Json& p = member(j, "p");
  if (!p.is_number_integer()) bad("field modulus must be an integer");
  try {
    return Field::prime(p.get<std::int64_t>());
  } catch (const DomainError& e) {
    throw UnsupportedField(e.what());
  }
}

Json to_json(const Scalar& s) {
  if (s.field().is_prime()) return s.residue();
  return s.to_string();
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return Scalar(f, j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Scalar::parse(f, j.get<std::string>());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      bad(e.what());
    }
  }
  bad("scalar must be an integer or a string, got " + j.dump());
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

Poly poly_from_json(const Field& f, const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array");
  std::vector<Scalar> c;
  for (const auto& x : j) c.push_back(scalar_from_json(f, x));
  return Poly(f, c);
}

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return Json{{"field", to_json(m.field())}, {"rows", rows}};
}

Mat matrix_from_json(const Json& j) {
  Field f = field_from_json(member(j, "field"));
  const Json& rows = member(j, "rows");
  if (!rows.is_array()) bad("rows must be an array");
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : (rows[0].is_array() ? rows[0].size() : 0);
  std::vector<Scalar> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != c) bad("rows must be arrays of equal length");
    for (const auto& x : row) entries.push_back(scalar_from_json(f, x));
  }
  return Mat(f, r, c, std::move(entries));
}

Json to_json(const SymplecticElement& e) {
  Json gram = e.space().is_standard() ? Json("standard") : to_json(e.gram());
  return Json{{"space", {{"dim", e.dim()}, {"gram", gram}}}, {"matrix", to_json(e.matrix())}};
}

SymplecticElement element_from_json(const Json& j) {
  Mat m = matrix_from_json(member(j, "matrix"));
  if (!m.is_square() || m.rows() % 2 != 0) bad("matrix must be square of even size");
  Mat gram = Mat::standard_symplectic(m.field(), m.rows() / 2);
  if (j.contains("space")) {
    const Json& space = j.at("space");
    if (space.contains("dim") && (!space.at("dim").is_number_integer() || space.at("dim").get<std::size_t>() != m.rows()))
      bad("space dim does not match the matrix");
    if (space.contains("gram") && !(space.at("gram").is_string() && space.at("gram") == "standard")) {
      gram = matrix_from_json(space.at("gram"));
      if (gram.field() != m.field()) bad("gram and matrix over different fields");
      if (gram.rows() != m.rows() || gram.cols() != m.cols()) bad("gram size does not match the matrix");
    }
  }
  try {
    return SymplecticElement(m, gram);
  } catch (const NotSymplectic&) {
    throw;
  } catch (const DomainError& e) {
    bad(e.what());
  }
}

Json to_json(const Witness& w) {
  Json out{{"kind", to_string(w.kind)}};
  if (w.kind == WitnessKind::reverser) {
    out["conjugator"] = to_json(*w.conjugator);
    out["target"] = w.negated ? "negative_inverse" : "inverse";
  } else {
    Json fs = Json::array();
    for (const auto& m : w.factors) fs.push_back(to_json(m));
    out["factors"] = fs;
  }
  return out;
}

Witness witness_from_json(const Field& f, const Json& j) {
  const std::string kind = member(j, "kind").get<std::string>();
  Witness w{WitnessKind::reverser, {}, std::nullopt, false};
  auto load = [&](const Json& mj) {
    Mat m = matrix_from_json(mj);
    if (m.field() != f) bad("witness over a different field");
    return m;
  };
  if (kind == "reverser") {
    w.conjugator = load(member(j, "conjugator"));
    w.negated = j.value("target", std::string("inverse")) == "negative_inverse";
    return w;
  }
  if (kind == "two_involutions")
    w.kind = WitnessKind::two_involutions;
  else if (kind == "two_skew_involutions")
    w.kind = WitnessKind::two_skew_involutions;
  else if (kind == "involution_skew")
    w.kind = WitnessKind::involution_skew;
  else
    bad("unknown witness kind " + kind);
  for (const auto& m : member(j, "factors")) w.factors.push_back(load(m));
  return w;
}

Json to_json(const Decision& d) {
  Json out{{"verdict", to_string(d.verdict)}, {"method", to_string(d.method)}, {"ambient", to_string(d.ambient)}};
  out["witness"] = d.witness ? to_json(*d.witness) : Json(nullptr);
  if (!d.note.empty()) out["note"] = d.note;
  return out;
}

Json to_json(const ClassificationReport& r) {
  Json table = nullptr;
  if (r.elementary_divisors) {
    table = Json::array();
    for (const auto& ed : *r.elementary_divisors)
      table.push_back({{"base", to_json(ed.base)}, {"exponent", ed.exponent}, {"multiplicity", ed.multiplicity}});
  }
  Json inv = Json::array();
  for (const auto& p : r.invariant_factors) inv.push_back(to_json(p));
  return Json{{"invariant_factors", inv},
              {"elementary_divisor_table", table},
              {"reversible_gl", r.reversible_gl},
              {"reversible_sp", to_json(r.reversible_sp)},
              {"bireflectional", to_json(r.bireflectional)},
              {"two_skew", to_json(r.two_skew)},
              {"inv_skew", to_json(r.inv_skew)},
              {"negating_sp", to_json(r.negating_sp)},
              {"inv_skew_gl_reading", to_string(r.inv_skew_gl)},
              {"psp_reversible_not_bireflectional", to_json(r.psp_reversible_not_bireflectional)}};
}

Json wall_report(const SymplecticElement& phi) {
  WallFormData w = wall_form(phi);
  Json out{{"path_basis", to_json(w.path_basis)},
           {"gram_omega", to_json(w.gram_omega)},
           {"theta", to_json(w.theta)},
           {"theta_class", to_json(w.theta_class)},
           {"theta_is_square", is_square(w.theta)}};
  out["antitriangular"] = nullptr;
  const Mat& a = phi.matrix();
  Mat id = Mat::identity(phi.field(), phi.dim());
  const bool unipotent = phi.dim() > 0 && (a - id).pow(static_cast<std::int64_t>(phi.dim())).is_zero();
  if (unipotent && is_cyclic(a)) {
    AntitriangularForm at = wall_antitriangular(phi);
    out["antitriangular"] = {{"generator", to_json(at.generator)},
                             {"matrix", to_json(at.a)},
                             {"theta", to_json(at.theta)},
                             {"conditions_hold", antitriangular_conditions_hold(at.a, at.theta)}};
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace sympinv
