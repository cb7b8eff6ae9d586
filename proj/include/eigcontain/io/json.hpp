#pragma once

#include <json.hpp>

#include "eigcontain/chartab/character_table.hpp"
#include "eigcontain/exact/cyclotomic.hpp"
#include "eigcontain/gl2ring/expr.hpp"
#include "eigcontain/gl2ring/sym6.hpp"
#include "eigcontain/lambda/lambda.hpp"
#include "eigcontain/preceq/preceq.hpp"
#include "eigcontain/satake/satake.hpp"

namespace eigc::io {

using Json = nlohmann::ordered_json;

/// Rationals as [num, den] with decimal strings once they leave int64.
Json to_json(const Rational& r);
/// {"conductor": N, "coeffs": [[num, den], ...]} in the power basis.
Json to_json(const CycNum& x);
Json to_json(const ClassFunction& chi);
Json to_json(const CharacterTable& t);
Json to_json(const EigenMultiset& m);
Json to_json(const PreceqReport& r, const GroupModel& g);
Json to_json(const ContainmentResult& r);
Json to_json(const IdentityReport& r);
Json to_json(const Sym6Result& r);

}  // namespace eigc::io
