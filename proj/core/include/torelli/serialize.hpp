#ifndef TORELLI_SERIALIZE_HPP_
#define TORELLI_SERIALIZE_HPP_

// JSON encodings of the library's value types.

#include <string>
#include <string_view>

#include "json.hpp"
#include "torelli/config.hpp"
#include "torelli/drags.hpp"
#include "torelli/int_matrix.hpp"
#include "torelli/magnus.hpp"
#include "torelli/rewriter.hpp"

namespace torelli {

  using json = nlohmann::ordered_json;

  // Integers that fit in a long are JSON numbers, larger ones decimal strings.
  json    to_json(Integer const& x);
  Integer integer_from_json(json const& j);

  json to_json(IntVector const& v);
  json to_json(IntMatrix const& m);  // row arrays

  // {"rank": m, "coeffs": [[i, j, c], ...]}, i < j, zeros omitted
  json to_json(ExtVector const& v);
  // {"rank": m, "coeffs": [[k, i, j, c], ...]}: column k, then (i, j)
  json to_json(HomTable const& t);

  json            to_json(PartitionConfig const& c);
  PartitionConfig config_from_json(json const& j);
  // Parses and validates; throws ParseError on malformed JSON.
  PartitionConfig parse_config(std::string_view text);

  json to_json(CappedBasis const& b);  // {"rank": m, "layout": [role, ...]}

  json to_json(Factorization const& f);  // [{"factor": "T:...", "exp": 1}, ...]

  json to_json(GroupMap const& f);  // [image string, ...]

  std::vector<IntVector> vectors_from_json(json const& j);

}  // namespace torelli

#endif  // TORELLI_SERIALIZE_HPP_
