#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dbatk/context.hpp"

namespace dbatk {

/// Burmeister .cxt:
///
///     B
///     <name, possibly empty>
///     <|G|>
///     <|M|>
///     <|G| object names>
///     <|M| attribute names>
///     <|G| rows over {'X','.'}>
///
/// The reader also tolerates the common variant with one blank line after
/// the two counts, and CRLF line ends. The writer emits exactly the layout
/// above, one '\n' after every line.
FormalContext read_cxt(std::istream& in);
FormalContext parse_cxt(const std::string& text);
void write_cxt(std::ostream& out, const FormalContext& ctx);
std::string format_cxt(const FormalContext& ctx);

/// {"objects":[...], "attributes":[...], "incidence":[[bool,...],...]}
/// ("name" is written when non-empty and accepted on input).
nlohmann::json context_to_json(const FormalContext& ctx);
FormalContext context_from_json(const nlohmann::json& j);

/// Loads a context from a .cxt or .json file, chosen by extension.
FormalContext load_context(const std::string& path);
void save_context(const std::string& path, const FormalContext& ctx);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace dbatk
