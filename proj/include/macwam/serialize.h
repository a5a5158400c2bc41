// Copyright 2026 The macwam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MACWAM_SERIALIZE_H
#define MACWAM_SERIALIZE_H

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "macwam/realization.h"
#include "macwam/sumproduct.h"
#include "macwam/wam.h"

namespace macwam {

using Json = nlohmann::ordered_json;

/// A structurally invalid input document.
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// {"den": "<int>", "num": ["<int>", ...]}: numerators over a common positive
/// denominator, one per power z^0 .. z^{p-2}.
Json cyclo_to_json(const CycloRat &c);
CycloRat cyclo_from_json(uint32_t p, const Json &j);

/// {"p", "n", "dimension", "generators": [digit strings]}.
Json code_to_json(const LinearCode &code);

/// {"p", "vars": [{id, kind, dim}], "constraints": [{id, generators, ports: [{var, sign}]}]}.
Json realization_to_json(const NormalRealization &r);
NormalRealization realization_from_json(const Json &j);

/// {"p", "rows", "cols", "domain", "entries": [[[{"exps", "coeff"}]]]}; terms in
/// lexicographic exponent order.
Json wam_to_json(const WAMatrix &m);
WAMatrix wam_from_json(const Json &j);

/// Same layout with each entry a list of integer strings indexed by degree.
Json hwam_to_json(const HWAMatrix &m);

/// {"group": {"p", "dim"}, "values": ["a/b", ...]}. Values that are not
/// rational are written as CycloRat objects.
Json message_to_json(const Message &m);
Message message_from_json(const Json &j);

/// Parses text, mapping syntax errors to FormatError.
Json parse_json(const std::string &text, const std::string &what);

}  // namespace macwam

#endif
