#ifndef QBETA_JSON_IO_HPP
#define QBETA_JSON_IO_HPP

#include <json.hpp>

#include "qbeta/ratfunc.hpp"

namespace qbeta {

using Json = nlohmann::ordered_json;

Json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const Json& j);

/// Schema: {"vars":["q","L","X","Y"],
///          "num":[{"e":[eq,eL,eX,eY],"c":"a/b" | {"m":m,"c":["a/b",...]}},...],
///          "den":[...]}
Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

} // namespace qbeta

#endif
