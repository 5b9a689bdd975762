#ifndef SQZ_JSON_IO_HPP
#define SQZ_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "sqz/oracle.hpp"

namespace sqz {

using Json = nlohmann::json;

// All rationals are serialized as exact "p/q" strings; quadratic scalars as
// {"a","b","d"} objects. Keys are emitted in sorted order, so dumps are
// canonical and round-trips are bit-identical.

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

Json point_to_json(const Point2& p);
Point2 point_from_json(const Json& j);

Json projpoint_to_json(const ProjPoint& p);
ProjPoint projpoint_from_json(const Json& j);

Json region_to_json(const RegionSet& r);
RegionSet region_from_json(const Json& j);

Json arc_to_json(const Arc& a);
Arc arc_from_json(const Json& j);
Json arcset_to_json(const ArcSet& a);
ArcSet arcset_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

Json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const Json& j);

Json crown_to_json(const Crown& c);
Crown crown_from_json(const Json& j);

Json squeeze_cert_to_json(const SqueezeCertificate& c);
SqueezeCertificate squeeze_cert_from_json(const Json& j);

Json contractive_pair_to_json(const ContractivePair& c);
ContractivePair contractive_pair_from_json(const Json& j);

Json paradox_family_to_json(const ParadoxFamily& f);
ParadoxFamily paradox_family_from_json(const Json& j);

// Report-style objects (output only).
Json paradox_cert_to_json(const ParadoxCertificate& c);
Json falsify_report_to_json(const FalsifyReport& r);
Json error_to_json(const Error& e);

// Canonical text form (2-space indent, sorted keys, trailing newline).
std::string dump_json(const Json& j);
Json parse_json(const std::string& text);

void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace sqz

#endif
