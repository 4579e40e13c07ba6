#pragma once

#include <string>
#include <string_view>

#include "vrseq/rspec.hpp"

namespace vrseq {

// On-disk spec format. One JSON object per spec:
//   {"kind": "constant",    "value": 3}
//   {"kind": "identity"}
//   {"kind": "table",       "values": [1,1,2,3], "tail": "repeat_last"}
//   {"kind": "periodic",    "prefix": [1,1], "cycle": [2,3]}
//   {"kind": "indicator",   "set": "powers_of_two" | "towers" | [2,4,8]}
//   {"kind": "custom_step", "prefix": [1,1], "slope": 1, "offsets": [0,-1]}
// plus an optional "sublinear": false for unrestricted-order specs.
// parse(serialize(parse(text))) == parse(text) as RSpec values.

RSpec rspec_from_json(std::string_view text);
std::string rspec_to_json(const RSpec& spec);

RSpec rspec_from_file(const std::string& path);

}  // namespace vrseq
