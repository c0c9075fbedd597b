#pragma once

#include <json.hpp>

#include "packbound/expr.hpp"

namespace packbound {
nlohmann::json expr_to_jsonv(const Expr& e);
Expr expr_from_jsonv(const nlohmann::json& j);
}  // namespace packbound
