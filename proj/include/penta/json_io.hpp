#ifndef PENTA_JSON_IO_HPP
#define PENTA_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "penta/blaschke.hpp"
#include "penta/domains.hpp"
#include "penta/inner.hpp"
#include "penta/oracle.hpp"

namespace penta {

// Insertion-ordered so emitted documents are stable byte-for-byte.
using Json = nlohmann::ordered_json;

// Wire formats:
//   complex            [re, im]
//   Polynomial         array of [re, im], index = power (zero poly: [])
//   RationalFunction   {"num": [...], "den": [...]}
//   BlaschkeProduct    {"zeros": [[re, im], ...], "theta": real}
//   Point2             {"s": [re, im], "p": [re, im]}
//   Point3             {"a": [re, im], "s": [re, im], "p": [re, im]}
//   Matrix2            row-major array of 4 [re, im]
//   PentaInnerFunction {"blaschke": {...}, "N1": [...], "N2": [...],
//                       "D": [...], "n": int}

Json to_json(const Complex& z);
Json to_json(const Polynomial& p);
Json to_json(const RationalFunction& r);
Json to_json(const BlaschkeProduct& b);
Json to_json(const Point2& q);
Json to_json(const Point3& x);
Json to_json(const Matrix2& m);
Json to_json(const PentaInnerFunction& x);
Json to_json(const VerificationReport& report);
Json to_json(const AuditReport& report);

// Parsers throw std::invalid_argument with a field path on shape errors.
Complex complex_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
RationalFunction rational_from_json(const Json& j);
BlaschkeProduct blaschke_from_json(const Json& j);
Point2 point2_from_json(const Json& j);
Point3 point3_from_json(const Json& j);
Matrix2 matrix2_from_json(const Json& j);

struct PentaInnerData {
  BlaschkeProduct blaschke;
  Polynomial n1, n2, d;
  int bound = 0;
};
PentaInnerData penta_inner_data_from_json(const Json& j);

// Serializes with every floating-point number printed to 17 significant
// digits, so values round-trip exactly and output is deterministic.
std::string dump_json(const Json& j, int indent = 2);

}  // namespace penta

#endif  // PENTA_JSON_IO_HPP
