#include "railfair/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace railfair {

using nlohmann::json;

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

} // namespace

RunRecord make_run_record(const Scenario& s, const FairnessConfig& cfg,
                          int run_number, std::uint64_t seed,
                          const EvalResult& eval) {
    RunRecord r;
    r.index_kind = to_string(cfg.index_kind);
    r.alpha = cfg.alpha;
    r.run_number = run_number;
    r.seed = seed;
    r.inequity_percent = eval.inequity;
    r.revenue = eval.revenue;
    r.scheduled_train_count = eval.scheduled_count;
    for (double v : eval.importance_sums) r.importance_percents.push_back(100.0 * v);
    r.assigned_importance_percent = assigned_importance_percent(eval.importance_sums);
    std::vector<double> capacities;
    for (const auto& ru : s.undertakings) capacities.push_back(ru.framework_capacity);
    r.assigned_capacity_percent =
        assigned_capacity_percent(eval.importance_sums, capacities);
    return r;
}

std::string scenario_to_json(const Scenario& s) {
    json doc;
    doc["undertakings"] = json::array();
    for (const auto& ru : s.undertakings)
        doc["undertakings"].push_back(
            {{"id", ru.id}, {"framework_capacity", ru.framework_capacity}});
    doc["request_sets"] = json::array();
    for (const auto& rs : s.request_sets) {
        json set;
        set["ru_id"] = rs.ru_id;
        set["requests"] = json::array();
        for (const auto& req : rs.requests)
            set["requests"].push_back({{"ru_id", req.ru_id},
                                       {"service_id", req.service_id},
                                       {"route", req.route},
                                       {"desired_departure", req.desired_departure},
                                       {"segment_travel_times", req.segment_travel_times},
                                       {"importance", req.importance},
                                       {"base_revenue", req.base_revenue}});
        doc["request_sets"].push_back(std::move(set));
    }
    doc["line"] = {{"segment_ids", s.line.segment_ids}};
    doc["horizon_minutes"] = s.horizon_minutes;
    doc["max_services"] = s.max_services;
    doc["headway_minutes"] = s.headway_minutes;
    doc["max_shift_minutes"] = s.max_shift_minutes;
    doc["penalty_per_minute"] = s.penalty_per_minute;
    return doc.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("scenario parse error: ") + e.what());
    }
    try {
        Scenario s;
        for (const auto& j : doc.at("undertakings")) {
            RailwayUndertaking ru;
            ru.id = j.at("id").get<int>();
            ru.framework_capacity = j.at("framework_capacity").get<double>();
            s.undertakings.push_back(ru);
        }
        for (const auto& jset : doc.at("request_sets")) {
            RequestSet rs;
            rs.ru_id = jset.at("ru_id").get<int>();
            for (const auto& j : jset.at("requests")) {
                ServiceRequest req;
                req.ru_id = j.at("ru_id").get<int>();
                req.service_id = j.at("service_id").get<int>();
                req.route = j.at("route").get<std::vector<int>>();
                req.desired_departure = j.at("desired_departure").get<int>();
                req.segment_travel_times =
                    j.at("segment_travel_times").get<std::vector<int>>();
                req.importance = j.at("importance").get<double>();
                req.base_revenue = j.at("base_revenue").get<double>();
                rs.requests.push_back(std::move(req));
            }
            s.request_sets.push_back(std::move(rs));
        }
        s.line.segment_ids = doc.at("line").at("segment_ids").get<std::vector<int>>();
        s.horizon_minutes = doc.at("horizon_minutes").get<int>();
        s.max_services = doc.at("max_services").get<int>();
        s.headway_minutes = doc.at("headway_minutes").get<int>();
        s.max_shift_minutes = doc.at("max_shift_minutes").get<int>();
        s.penalty_per_minute = doc.at("penalty_per_minute").get<double>();
        return s;
    } catch (const json::exception& e) {
        throw IoError(std::string("scenario field error: ") + e.what());
    }
}

void save_scenario(const Scenario& s, const std::string& path) {
    write_text_file(path, scenario_to_json(s));
}

Scenario load_scenario(const std::string& path) {
    return scenario_from_json(read_text_file(path));
}

std::string run_records_to_csv(const std::vector<RunRecord>& records) {
    std::size_t n = 0;
    for (const auto& r : records) n = std::max(n, r.importance_percents.size());
    std::ostringstream os;
    os << "index_kind,alpha,run_number,seed,inequity_percent,revenue,"
          "scheduled_train_count";
    for (std::size_t i = 1; i <= n; ++i) os << ",I" << i;
    os << ",assigned_importance_percent,assigned_capacity_percent\n";
    for (const auto& r : records) {
        os << r.index_kind << ',' << format_double(r.alpha) << ',' << r.run_number
           << ',' << r.seed << ',' << format_double(r.inequity_percent) << ','
           << format_double(r.revenue) << ',' << r.scheduled_train_count;
        for (double v : r.importance_percents) os << ',' << format_double(v);
        os << ',' << format_double(r.assigned_importance_percent) << ','
           << format_double(r.assigned_capacity_percent) << '\n';
    }
    return os.str();
}

std::vector<RunRecord> run_records_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw IoError("run record CSV: missing header");
    const auto header = split(line, ',');
    if (header.size() < 9) throw IoError("run record CSV: short header");
    const std::size_t importance_count = header.size() - 9;

    std::vector<RunRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (fields.size() != header.size())
            throw IoError("run record CSV: column count mismatch");
        RunRecord r;
        std::size_t f = 0;
        r.index_kind = fields[f++];
        r.alpha = std::stod(fields[f++]);
        r.run_number = std::stoi(fields[f++]);
        r.seed = std::stoull(fields[f++]);
        r.inequity_percent = std::stod(fields[f++]);
        r.revenue = std::stod(fields[f++]);
        r.scheduled_train_count = std::stoi(fields[f++]);
        for (std::size_t i = 0; i < importance_count; ++i)
            r.importance_percents.push_back(std::stod(fields[f++]));
        r.assigned_importance_percent = std::stod(fields[f++]);
        r.assigned_capacity_percent = std::stod(fields[f++]);
        out.push_back(std::move(r));
    }
    return out;
}

std::string epoch_history_to_csv(const EpochHistory& history) {
    std::ostringstream os;
    os << "epoch,best_fitness,best_revenue,best_fairness,best_inequity\n";
    for (std::size_t i = 0; i < history.size(); ++i)
        os << (i + 1) << ',' << format_double(history[i].best_fitness) << ','
           << format_double(history[i].best_revenue) << ','
           << format_double(history[i].best_fairness) << ','
           << format_double(history[i].best_inequity) << '\n';
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    os << content;
    if (!os) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open for reading: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

} // namespace railfair
