#include "llike/config.hpp"

#include "llike/error.hpp"

namespace llike {

SieveOptions RunConfig::sieve_options() const {
    SieveOptions o;
    o.segment_len = segment_len;
    o.workers = workers;
    return o;
}

nlohmann::json to_json(const RunConfig& c) {
    return {{"command", c.command},
            {"family", c.family},
            {"set_file", c.set_file},
            {"inject", c.inject},
            {"variant", variant_name(c.variant)},
            {"xmax", c.xmax},
            {"x", c.x},
            {"grid", c.grid},
            {"a", c.a},
            {"h", c.h},
            {"T", c.T},
            {"K", c.K},
            {"l", c.l},
            {"y", c.y},
            {"lo", c.lo},
            {"hi", c.hi},
            {"with_n_c", c.with_n_c},
            {"segment_len", c.segment_len},
            {"out", c.out},
            {"format", c.format},
            {"svg", c.svg},
            {"seed", c.seed},
            {"nmax", c.nmax},
            {"sets", c.sets}};
}

namespace {

template <class T>
void read(const nlohmann::json& j, const char* key, T& dst) {
    if (!j.contains(key)) return;
    try {
        dst = j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::bad_params, std::string("config key '") + key + "': " + e.what());
    }
}

} // namespace

RunConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(Errc::bad_params, "config must be a JSON object");
    RunConfig c;
    read(j, "command", c.command);
    read(j, "family", c.family);
    read(j, "set_file", c.set_file);
    read(j, "inject", c.inject);
    std::string variant(variant_name(c.variant));
    read(j, "variant", variant);
    c.variant = parse_variant(variant);
    read(j, "xmax", c.xmax);
    read(j, "x", c.x);
    read(j, "grid", c.grid);
    read(j, "a", c.a);
    read(j, "h", c.h);
    read(j, "T", c.T);
    read(j, "K", c.K);
    read(j, "l", c.l);
    read(j, "y", c.y);
    read(j, "lo", c.lo);
    read(j, "hi", c.hi);
    read(j, "with_n_c", c.with_n_c);
    read(j, "segment_len", c.segment_len);
    read(j, "out", c.out);
    read(j, "format", c.format);
    read(j, "svg", c.svg);
    read(j, "seed", c.seed);
    read(j, "nmax", c.nmax);
    read(j, "sets", c.sets);
    return c;
}

void check_config(const RunConfig& c) {
    if (c.format != "csv" && c.format != "json")
        throw Error(Errc::bad_params, "format must be csv or json");
    if (c.segment_len < 64) throw Error(Errc::bad_params, "segment length must be >= 64");
    if (c.workers < 1) throw Error(Errc::bad_params, "workers must be >= 1");
    if (!(c.K > 0.0)) throw Error(Errc::bad_params, "K must be positive");
    if (c.l > 4) throw Error(Errc::arity_too_large, std::to_string(c.l) + " > 4");
    if (c.a.size() != c.h.size()) throw Error(Errc::bad_params, "--a and --h lengths differ");
    if (!c.family.empty() && !c.set_file.empty())
        throw Error(Errc::bad_params, "give either --family or --set, not both");
}

} // namespace llike
