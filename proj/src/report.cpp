#include "ringtsp/report.hpp"

namespace ringtsp {

namespace {

template <class T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> read_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["instance"] = {{"source", r.instance.source}, {"n", r.instance.n}, {"seed", opt(r.instance.seed)}};
  j["parameters"] = r.parameters;
  j["result"] = {
      {"tour", r.result.tour},
      {"edges", r.result.edges},
      {"weight", r.result.weight},
      {"optimum", opt(r.result.optimum)},
      {"ratio", opt(r.result.ratio)},
      {"match", opt(r.result.match)},
      {"oracle", opt(r.result.oracle)},
      {"optimal_count", opt(r.result.optimal_count)},
  };
  j["elapsed_ms"] = r.elapsed_ms;
  j["trace"] = r.trace;
  return j;
}

RunReport report_from_json(const nlohmann::json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  const auto& inst = j.at("instance");
  r.instance.source = inst.at("source").get<std::string>();
  r.instance.n = inst.at("n").get<std::size_t>();
  r.instance.seed = read_opt<std::uint64_t>(inst, "seed");
  r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  const auto& res = j.at("result");
  r.result.tour = res.at("tour").get<std::vector<Vertex>>();
  r.result.edges = res.at("edges").get<std::vector<EdgeId>>();
  r.result.weight = res.at("weight").get<double>();
  r.result.optimum = read_opt<double>(res, "optimum");
  r.result.ratio = read_opt<double>(res, "ratio");
  r.result.match = read_opt<bool>(res, "match");
  r.result.oracle = read_opt<std::string>(res, "oracle");
  r.result.optimal_count = read_opt<std::uint64_t>(res, "optimal_count");
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.trace = j.value("trace", nlohmann::json());
  return r;
}

}  // namespace ringtsp
