#include "dbatk/dba_io.hpp"

#include "dbatk/context_io.hpp"
#include "dbatk/error.hpp"

namespace dbatk {

nlohmann::json dba_to_json(const FiniteDba& d) {
    const std::size_t n = d.size();
    nlohmann::json meet = nlohmann::json::array(), join = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        auto mrow = d.meet_table().subspan(i * n, n);
        auto jrow = d.join_table().subspan(i * n, n);
        meet.push_back(std::vector<Index>(mrow.begin(), mrow.end()));
        join.push_back(std::vector<Index>(jrow.begin(), jrow.end()));
    }
    nlohmann::json j;
    j["n"] = n;
    j["meet"] = std::move(meet);
    j["join"] = std::move(join);
    j["neg"] = std::vector<Index>(d.neg_table().begin(), d.neg_table().end());
    j["opp"] = std::vector<Index>(d.opp_table().begin(), d.opp_table().end());
    j["top"] = d.top();
    j["bot"] = d.bot();
    j["labels"] = d.labels();
    return j;
}

FiniteDba dba_from_json(const nlohmann::json& j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        auto flatten = [n](const nlohmann::json& rows, const char* what) {
            auto table = rows.get<std::vector<std::vector<Index>>>();
            if (table.size() != n) throw ParseError(std::string("dba json: ") + what + " must have n rows");
            std::vector<Index> flat;
            flat.reserve(n * n);
            for (const auto& r : table) {
                if (r.size() != n) throw ParseError(std::string("dba json: ") + what + " rows must have n entries");
                flat.insert(flat.end(), r.begin(), r.end());
            }
            return flat;
        };
        auto labels = j.contains("labels") ? j.at("labels").get<std::vector<std::string>>() : std::vector<std::string>{};
        return FiniteDba(n, flatten(j.at("meet"), "meet"), flatten(j.at("join"), "join"),
                         j.at("neg").get<std::vector<Index>>(), j.at("opp").get<std::vector<Index>>(),
                         j.at("top").get<Index>(), j.at("bot").get<Index>(), std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("dba json: ") + e.what());
    } catch (const DimensionError& e) {
        throw ParseError(std::string("dba json: ") + e.what());
    }
}

FiniteDba load_dba(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return dba_from_json(j);
}

void save_dba(const std::string& path, const FiniteDba& d) { write_file(path, dba_to_json(d).dump() + "\n"); }

}  // namespace dbatk
