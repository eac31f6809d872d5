#include "sshl/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sshl {

namespace {

using nlohmann::json;

Q rational_field(const json& v, const char* key)
{
    try {
        if (v.is_string())
            return parse_rational(v.get<std::string>());
        if (v.is_number_integer())
            return Q(v.get<long>());
    } catch (const invalid_params& e) {
        throw config_error(std::string(key) + ": " + e.what());
    }
    throw config_error(std::string(key) + " must be a rational string or an integer");
}

} // namespace

Params RunConfig::params(int t) const
{
    Params p{q, s, u, x};
    if (p.x.empty()) {
        for (int i = 0; i <= t; ++i)
            p.x.emplace_back(1, 4 + i);
    } else if (static_cast<int>(p.x.size()) < t + 1) {
        throw config_error("x lists " + std::to_string(p.x.size()) + " values, T = " +
                           std::to_string(t) + " needs " + std::to_string(t + 1));
    }
    return p;
}

RunConfig parse_config(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw config_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw config_error("config must be a JSON object");
    RunConfig c;
    for (const auto& [key, v] : doc.items()) {
        if (key == "q") {
            c.q = rational_field(v, "q");
        } else if (key == "s") {
            c.s = rational_field(v, "s");
        } else if (key == "u") {
            c.u = rational_field(v, "u");
        } else if (key == "x") {
            if (!v.is_array())
                throw config_error("x must be an array");
            c.x.clear();
            for (const auto& e : v)
                c.x.push_back(rational_field(e, "x"));
        } else if (key == "seed") {
            if (!v.is_number_unsigned())
                throw config_error("seed must be a non-negative integer");
            c.seed = v.get<std::uint64_t>();
        } else if (key == "T") {
            if (!v.is_number_integer() || v.get<long>() < 0)
                throw config_error("T must be a non-negative integer");
            c.T = v.get<int>();
        } else if (key == "cap") {
            if (!v.is_number_integer() || v.get<long>() < 1)
                throw config_error("cap must be a positive integer");
            c.cap = v.get<int>();
        } else {
            throw config_error("unknown config key '" + key + "'");
        }
    }
    return c;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string report_json(const CheckReport& r)
{
    json j{{"name", r.name},
           {"detail", r.detail},
           {"mode", r.truncated ? "truncated" : "exact"},
           {"passed", r.passed}};
    if (r.truncated) {
        // Truncated sums carry very long exact rationals; report them in floating point.
        j["lhs"] = to_double(r.lhs);
        j["rhs"] = to_double(r.rhs);
        j["abs_diff"] = to_double(abs(r.lhs - r.rhs));
        j["tail_bound"] = to_double(r.tail_bound);
        j["certificate"] = r.certificate;
    } else {
        j["lhs"] = to_string(r.lhs);
        j["rhs"] = to_string(r.rhs);
    }
    return j.dump();
}

} // namespace sshl
