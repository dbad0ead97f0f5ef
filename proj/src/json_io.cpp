#include "penta/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace penta {

namespace {

[[noreturn]] void shape_error(const std::string& where, const std::string& what) {
  throw std::invalid_argument("json: " + where + ": " + what);
}

const Json& expect_field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) shape_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) shape_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

double expect_number(const Json& j, const std::string& where) {
  if (!j.is_number()) shape_error(where, "expected a number");
  return j.get<double>();
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";  // JSON has no inf/nan
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(std::size_t(indent) * depth, ' ');
  const std::string pad_in(std::size_t(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + Json(it.key()).dump() + ": ";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_rec(item, out, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const Complex& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const RationalFunction& r) {
  return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

Json to_json(const BlaschkeProduct& b) {
  Json zeros = Json::array();
  for (const Complex& a : b.zeros()) zeros.push_back(to_json(a));
  return Json{{"zeros", std::move(zeros)}, {"theta", b.theta()}};
}

Json to_json(const Point2& q) { return Json{{"s", to_json(q.s)}, {"p", to_json(q.p)}}; }

Json to_json(const Point3& x) {
  return Json{{"a", to_json(x.a)}, {"s", to_json(x.s)}, {"p", to_json(x.p)}};
}

Json to_json(const Matrix2& m) {
  return Json::array({to_json(m.u11), to_json(m.u12), to_json(m.u21), to_json(m.u22)});
}

Json to_json(const PentaInnerFunction& x) {
  return Json{{"blaschke", to_json(x.blaschke())},
              {"N1", to_json(x.n1())},
              {"N2", to_json(x.n2())},
              {"D", to_json(x.den())},
              {"n", x.degree_bound()}};
}

Json to_json(const VerificationReport& report) {
  return Json{{"circle_residual", report.circle_residual},
              {"bgamma_residual", report.bgamma_residual},
              {"disc_pass_fraction", report.disc_pass_fraction},
              {"coeff_residual", report.coeff_residual},
              {"pass", report.pass}};
}

Json to_json(const AuditReport& report) {
  Json campaigns = Json::array();
  for (const CampaignReport& c : report.campaigns) {
    campaigns.push_back(Json{{"name", c.name},
                             {"count", c.count},
                             {"pass", c.pass},
                             {"worst_residual", c.worst_residual}});
  }
  return Json{{"campaigns", std::move(campaigns)}, {"seed", report.seed}};
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) shape_error("complex", "expected [re, im]");
  return {expect_number(j[0], "complex re"), expect_number(j[1], "complex im")};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) shape_error("polynomial", "expected an array of [re, im] pairs");
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) coeffs.push_back(complex_from_json(item));
  return Polynomial(std::move(coeffs));
}

RationalFunction rational_from_json(const Json& j) {
  return {polynomial_from_json(expect_field(j, "num", "rational")),
          polynomial_from_json(expect_field(j, "den", "rational"))};
}

BlaschkeProduct blaschke_from_json(const Json& j) {
  const Json& zeros_json = expect_field(j, "zeros", "blaschke");
  if (!zeros_json.is_array()) shape_error("blaschke.zeros", "expected an array");
  std::vector<Complex> zeros;
  zeros.reserve(zeros_json.size());
  for (const auto& z : zeros_json) zeros.push_back(complex_from_json(z));
  const double theta = expect_number(expect_field(j, "theta", "blaschke"), "blaschke.theta");
  return BlaschkeProduct(std::move(zeros), theta);
}

Point2 point2_from_json(const Json& j) {
  return {complex_from_json(expect_field(j, "s", "point")),
          complex_from_json(expect_field(j, "p", "point"))};
}

Point3 point3_from_json(const Json& j) {
  return {complex_from_json(expect_field(j, "a", "point")),
          complex_from_json(expect_field(j, "s", "point")),
          complex_from_json(expect_field(j, "p", "point"))};
}

Matrix2 matrix2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    shape_error("matrix", "expected a row-major array of 4 entries");
  return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]),
          complex_from_json(j[3])};
}

PentaInnerData penta_inner_data_from_json(const Json& j) {
  PentaInnerData data;
  data.blaschke = blaschke_from_json(expect_field(j, "blaschke", "inner"));
  data.n1 = polynomial_from_json(expect_field(j, "N1", "inner"));
  data.n2 = polynomial_from_json(expect_field(j, "N2", "inner"));
  data.d = polynomial_from_json(expect_field(j, "D", "inner"));
  const Json& n = expect_field(j, "n", "inner");
  if (!n.is_number_integer()) shape_error("inner.n", "expected an integer");
  data.bound = n.get<int>();
  return data;
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  return out;
}

}  // namespace penta
