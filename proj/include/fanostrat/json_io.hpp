#pragma once

#include <string>

#include "json.hpp"

#include "fanostrat/experiment.hpp"
#include "fanostrat/normal.hpp"
#include "fanostrat/schubert.hpp"
#include "fanostrat/strata.hpp"
#include "fanostrat/tangent.hpp"

namespace fanostrat {

using Json = nlohmann::ordered_json;

/// "q" or "p:<prime>".
std::string field_spec(const Field& field);

Json to_json(const SplittingType& a);
/// {"n": 5, "terms": [[[4,2], "3250"], ...], "text": "..."}; coefficients are
/// decimal strings, largest partitions first.
Json to_json(const ChowClass& c);
ChowClass class_from_json(const Json& j);
Json to_json(const BinaryForm& f);
Json to_json(const LineParam& line);
Json to_json(const RankProfile& profile);
Json to_json(const TangentReport& t);
Json to_json(const StrataPoset& poset);
Json to_json(const SamplingReport& r);
Json to_json(const FermatReport& r);

/// {"p0": [...], "p1": [...]} with integer or string ("a/b") entries, or the
/// text form "1,0,0,0;0,1,0,0". Throws DomainError on malformed input.
LineParam line_from_json(const Json& j, const Field& field);
LineParam line_from_text(const std::string& text, const Field& field);

/// "-1,-1,1" -> entries; DomainError on junk.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace fanostrat
