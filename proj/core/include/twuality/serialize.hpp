#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "twuality/group.hpp"
#include "twuality/multimatroid.hpp"
#include "twuality/orbit.hpp"
#include "twuality/ribbon.hpp"
#include "twuality/set_system.hpp"

// JSON encodings. Decoders throw ValidationError on malformed input; the
// encoders always emit the canonical form, so equal values give equal bytes.

namespace twuality {

using Json = nlohmann::json;

/// {"n": 3, "feasible": [[3],[1,3],[2,3]]}
Json encode(const SetSystem& d);
SetSystem decode_set_system(const Json& j);

/// {"n": 1, "bases": [[[1,1]],[[1,3]]]}
Json encode(const Multimatroid& z);
Multimatroid decode_multimatroid(const Json& j);
Json encode(Subtransversal s);

/// {"roles": [[1,2,3], ...]}: class i member (i,r) sits in slot roles[i-1][r-1].
Json encode(const TransversalTriple& t);
TransversalTriple decode_triple(const Json& j);

/// One-line notation, 1-based.
Json encode(const Perm& p);
Perm decode_perm(const Json& j);

Json encode(const FlipVector& g);
FlipVector decode_flip_vector(const Json& j);

/// {"vertices": [[1,2],[3]], "edges": [{"ends":[1,3],"sign":1,"label":1}]}
Json encode(const RibbonGraph& g);
RibbonGraph decode_ribbon_graph(const Json& j);

Json encode(const FourRegularGraph& f);
Json encode(const DeltaMatroidWitness& w);
Json encode(const MultimatroidWitness& w);
Json encode(const OrbitReport& r);
Json encode(const TwualityElement& a);
Json encode(const StabilizerHit& h);
Json encode(const UniformizationResult& u);

/// Parses "(1 2)(3)" cycle notation or "[2,1,3]" one-line notation over [n].
Perm parse_perm(std::string_view text, int n);
/// Parses "*,+,~" or a JSON array of flip tokens.
FlipVector parse_flip_vector(std::string_view text);
/// Parses a JSON triple object or a bare roles array.
TransversalTriple parse_triple(std::string_view text);

/// Canonical bytes: compact dump followed by a newline.
std::string dump(const Json& j);

} // namespace twuality
