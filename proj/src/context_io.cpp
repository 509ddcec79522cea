#include "dbatk/context_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace dbatk {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(std::move(cur));
    }
    return lines;
}

std::size_t parse_count(const std::string& line, const char* what) {
    std::size_t begin = line.find_first_not_of(" \t");
    std::size_t end = line.find_last_not_of(" \t");
    if (begin == std::string::npos) throw ParseError(std::string("cxt: missing ") + what);
    std::size_t value = 0;
    const char* first = line.data() + begin;
    const char* last = line.data() + end + 1;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError(std::string("cxt: bad ") + what + " '" + line + "'");
    return value;
}

bool has_extension(const std::string& path, const std::string& ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}

}  // namespace

FormalContext parse_cxt(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.size() < 4) throw ParseError("cxt: truncated header");
    if (lines[0] != "B") throw ParseError("cxt: first line must be 'B'");
    const std::string name = lines[1];
    const std::size_t ng = parse_count(lines[2], "object count");
    const std::size_t nm = parse_count(lines[3], "attribute count");

    std::size_t pos = 4;
    const std::size_t body = ng + nm + ng;
    // Trailing empty lines carry no data; a single blank separator after the
    // counts is the widespread variant.
    while (lines.size() > pos + body && lines.back().empty()) lines.pop_back();
    if (lines.size() == pos + body + 1 && lines[pos].empty()) ++pos;
    if (lines.size() != pos + body)
        throw ParseError("cxt: expected " + std::to_string(body) + " body lines, found " +
                         std::to_string(lines.size() - std::min(lines.size(), pos)));

    std::vector<std::string> objects(lines.begin() + static_cast<std::ptrdiff_t>(pos),
                                     lines.begin() + static_cast<std::ptrdiff_t>(pos + ng));
    pos += ng;
    std::vector<std::string> attributes(lines.begin() + static_cast<std::ptrdiff_t>(pos),
                                        lines.begin() + static_cast<std::ptrdiff_t>(pos + nm));
    pos += nm;
    std::vector<std::vector<bool>> inc(ng, std::vector<bool>(nm, false));
    for (std::size_t g = 0; g < ng; ++g, ++pos) {
        const std::string& row = lines[pos];
        if (row.size() != nm)
            throw ParseError("cxt: row " + std::to_string(g) + " has length " + std::to_string(row.size()) +
                             ", expected " + std::to_string(nm));
        for (std::size_t m = 0; m < nm; ++m) {
            const char c = row[m];
            if (c == 'X' || c == 'x')
                inc[g][m] = true;
            else if (c != '.')
                throw ParseError(std::string("cxt: unexpected character '") + c + "' in row " + std::to_string(g));
        }
    }
    try {
        return FormalContext(std::move(objects), std::move(attributes), inc, name);
    } catch (const DimensionError& e) {
        throw ParseError(std::string("cxt: ") + e.what());
    }
}

FormalContext read_cxt(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_cxt(ss.str());
}

void write_cxt(std::ostream& out, const FormalContext& ctx) {
    out << "B\n" << ctx.name() << '\n' << ctx.num_objects() << '\n' << ctx.num_attributes() << '\n';
    for (const auto& o : ctx.objects()) out << o << '\n';
    for (const auto& a : ctx.attributes()) out << a << '\n';
    for (std::size_t g = 0; g < ctx.num_objects(); ++g) {
        std::string row(ctx.num_attributes(), '.');
        ctx.row(g).for_each([&](std::size_t m) { row[m] = 'X'; });
        out << row << '\n';
    }
}

std::string format_cxt(const FormalContext& ctx) {
    std::ostringstream ss;
    write_cxt(ss, ctx);
    return ss.str();
}

nlohmann::json context_to_json(const FormalContext& ctx) {
    nlohmann::json j;
    if (!ctx.name().empty()) j["name"] = ctx.name();
    j["objects"] = ctx.objects();
    j["attributes"] = ctx.attributes();
    nlohmann::json inc = nlohmann::json::array();
    for (const auto& row : ctx.incidence_matrix()) {
        nlohmann::json r = nlohmann::json::array();
        for (bool b : row) r.push_back(b);
        inc.push_back(std::move(r));
    }
    j["incidence"] = std::move(inc);
    return j;
}

FormalContext context_from_json(const nlohmann::json& j) {
    try {
        auto objects = j.at("objects").get<std::vector<std::string>>();
        auto attributes = j.at("attributes").get<std::vector<std::string>>();
        auto inc = j.at("incidence").get<std::vector<std::vector<bool>>>();
        std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string{};
        return FormalContext(std::move(objects), std::move(attributes), inc, std::move(name));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("context json: ") + e.what());
    } catch (const DimensionError& e) {
        throw ParseError(std::string("context json: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << contents;
}

FormalContext load_context(const std::string& path) {
    const std::string text = read_file(path);
    if (has_extension(path, ".json")) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + ": " + e.what());
        }
        return context_from_json(j);
    }
    return parse_cxt(text);
}

void save_context(const std::string& path, const FormalContext& ctx) {
    if (has_extension(path, ".json"))
        write_file(path, context_to_json(ctx).dump(2) + "\n");
    else
        write_file(path, format_cxt(ctx));
}

}  // namespace dbatk
