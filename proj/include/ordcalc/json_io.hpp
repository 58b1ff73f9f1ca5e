#pragma once

#include "ordcalc/calculus.hpp"
#include "ordcalc/cone.hpp"
#include "ordcalc/genset.hpp"
#include "ordcalc/hilbert.hpp"
#include "ordcalc/lgroup.hpp"
#include "ordcalc/matrix.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ordcalc::io {

using nlohmann::json;

/// Input does not match the documented shape for its command.
class schema_error : public std::runtime_error {
public:
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

json ring_to_json(const RingSpec& r);
RingSpec ring_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json genset_to_json(const GenSet& s);
GenSet genset_from_json(const json& j);

json cone_to_json(const cones::ConeRep& c);
cones::ConeRep cone_from_json(const json& j);

json polycone_to_json(const cones::PolyCone& k);
cones::PolyCone polycone_from_json(const json& j);

json hbasis_to_json(const hilbert::HilbertBasis& hb);

/// {"M": Mat, "sign_cols": [...], "box": B?}; sign_cols indices are 0-based.
struct MixedSystemInput {
    hilbert::MixedSystem sys;
    std::optional<long> box;
};
MixedSystemInput mixed_from_json(const json& j);

json term_to_json(const lgroup::LatticeTerm& t);
lgroup::LatticeTerm term_from_json(const json& j, std::size_t dim);

/// {"n": n, "relators": [Term, ...]}
lgroup::LPresentation presentation_from_json(const json& j, std::size_t piece_cap,
                                             std::size_t node_cap);

} // namespace ordcalc::io
