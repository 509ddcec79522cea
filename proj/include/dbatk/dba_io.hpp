#pragma once

#include <string>

#include <json.hpp>

#include "dbatk/dba.hpp"

namespace dbatk {

/// {"n", "meet":[[...]], "join":[[...]], "neg", "opp", "top", "bot", "labels"}
nlohmann::json dba_to_json(const FiniteDba& d);
/// Throws ParseError on schema violations and on out-of-range entries.
FiniteDba dba_from_json(const nlohmann::json& j);

FiniteDba load_dba(const std::string& path);
void save_dba(const std::string& path, const FiniteDba& d);

}  // namespace dbatk
