#pragma once

// JSON records. Every integer and rational is written as a decimal string.

#include "smmp/hjcf.hpp"
#include "smmp/mori.hpp"
#include "smmp/neighborhoods.hpp"
#include "smmp/tsing.hpp"

#include <json.hpp>

#include <vector>

namespace smmp::json {

using nlohmann::json;

json of(const Integer& x);
json of(const Rational& x);
json of(const std::vector<Integer>& xs);
json of(const Chain& c);
json of(const CQS& c);
json of(const WahlData& w);
json of(const TData& t);
json of(const Invariants& inv);
json of(const ZetaTrace& t);
json of(const NeighborhoodClass& k);
json of(const Subject& s);
json of(const MoriStep& step);
json of(const MoriSequence& seq);
json of(const Classification& c);

}  // namespace smmp::json
