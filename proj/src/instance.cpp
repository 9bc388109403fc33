#include "maro/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace maro {

namespace {

std::string pair_path(const std::string& x, const std::string& u) { return "(" + x + "," + u + ")"; }

void check_unique(const std::vector<std::string>& ids, const char* what) {
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!seen.insert(ids[i]).second) {
      throw Error(std::string("duplicate ") + what + " identifier '" + ids[i] + "' at " + what + "s[" +
                  std::to_string(i) + "]");
    }
  }
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Instance::Instance(std::string name, std::size_t n, std::vector<std::string> decisions,
                   std::vector<std::string> scenarios, std::vector<std::vector<PointSet>> recourse,
                   bool sampled, nlohmann::ordered_json metadata)
    : name_(std::move(name)),
      n_(n),
      decisions_(std::move(decisions)),
      scenarios_(std::move(scenarios)),
      recourse_(std::move(recourse)),
      sampled_(sampled),
      metadata_(std::move(metadata)) {
  if (n_ < 1) throw Error("objective count n must be at least 1");
  if (decisions_.empty()) throw Error("decisions must be non-empty");
  if (scenarios_.empty()) throw Error("scenarios must be non-empty");
  check_unique(decisions_, "decision");
  check_unique(scenarios_, "scenario");
  if (recourse_.size() != decisions_.size()) throw Error("recourse table does not cover every decision");
  for (std::size_t x = 0; x < decisions_.size(); ++x) {
    if (recourse_[x].size() != scenarios_.size()) {
      throw Error("recourse table does not cover every scenario for decision " + decisions_[x]);
    }
    for (std::size_t u = 0; u < scenarios_.size(); ++u) {
      const PointSet& set = recourse_[x][u];
      const std::string at = pair_path(decisions_[x], scenarios_[u]);
      if (set.empty()) throw Error("empty recourse set at " + at);
      for (std::size_t k = 0; k < set.size(); ++k) {
        if (set[k].size() != n_) {
          throw Error("dimension mismatch at " + at + "[" + std::to_string(k) + "]: expected " +
                      std::to_string(n_) + " objectives, got " + std::to_string(set[k].size()));
        }
        for (double v : set[k]) {
          if (!std::isfinite(v)) throw Error("non-finite objective value at " + at + "[" + std::to_string(k) + "]");
        }
      }
    }
  }
}

const PointSet& Instance::recourse(DecisionIndex x, ScenarioIndex u) const {
  if (x >= decisions_.size()) throw Error("decision index out of range: " + std::to_string(x));
  if (u >= scenarios_.size()) throw Error("scenario index out of range: " + std::to_string(u));
  return recourse_[x][u];
}

PointSet Instance::recourse_union(DecisionIndex x) const {
  PointSet all;
  for (ScenarioIndex u = 0; u < num_scenarios(); ++u) {
    const PointSet& s = recourse(x, u);
    all.insert(all.end(), s.begin(), s.end());
  }
  return all;
}

DecisionIndex Instance::decision_index(std::string_view id) const {
  for (std::size_t i = 0; i < decisions_.size(); ++i) {
    if (decisions_[i] == id) return i;
  }
  throw Error("unknown decision '" + std::string(id) + "'");
}

ScenarioIndex Instance::scenario_index(std::string_view id) const {
  for (std::size_t i = 0; i < scenarios_.size(); ++i) {
    if (scenarios_[i] == id) return i;
  }
  throw Error("unknown scenario '" + std::string(id) + "'");
}

const std::string& Instance::decision_id(DecisionIndex x) const {
  if (x >= decisions_.size()) throw Error("decision index out of range: " + std::to_string(x));
  return decisions_[x];
}

const std::string& Instance::scenario_id(ScenarioIndex u) const {
  if (u >= scenarios_.size()) throw Error("scenario index out of range: " + std::to_string(u));
  return scenarios_[u];
}

bool Instance::singleton_recourse() const {
  for (const auto& row : recourse_) {
    for (const auto& set : row) {
      if (set.size() != 1) return false;
    }
  }
  return true;
}

namespace {

using json = nlohmann::ordered_json;

const json& require(const json& doc, const char* key, const std::string& path) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error("missing field at " + path + "." + key);
  return *it;
}

std::vector<std::string> read_ids(const json& arr, const std::string& path) {
  if (!arr.is_array()) throw Error("expected an array of strings at " + path);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) throw Error("expected a string at " + path + "[" + std::to_string(i) + "]");
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

}  // namespace

Instance load_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw Error("parse error: top-level value must be an object");

  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const std::set<std::string> known{"name", "n", "decisions", "scenarios", "recourse", "sampled", "metadata"};
    if (!known.count(it.key())) throw Error("unknown field at $." + it.key());
  }

  const json& name = require(doc, "name", "$");
  if (!name.is_string()) throw Error("expected a string at $.name");
  const json& n = require(doc, "n", "$");
  if (!n.is_number_integer() || n.get<long long>() < 1) throw Error("expected a positive integer at $.n");
  const std::size_t dim = n.get<std::size_t>();

  std::vector<std::string> decisions = read_ids(require(doc, "decisions", "$"), "$.decisions");
  std::vector<std::string> scenarios = read_ids(require(doc, "scenarios", "$"), "$.scenarios");
  check_unique(decisions, "decision");
  check_unique(scenarios, "scenario");

  const json& rec = require(doc, "recourse", "$");
  if (!rec.is_object()) throw Error("expected an object at $.recourse");
  for (auto it = rec.begin(); it != rec.end(); ++it) {
    if (std::find(decisions.begin(), decisions.end(), it.key()) == decisions.end()) {
      throw Error("unknown decision '" + it.key() + "' at $.recourse." + it.key());
    }
    if (!it->is_object()) throw Error("expected an object at $.recourse." + it.key());
    for (auto jt = it->begin(); jt != it->end(); ++jt) {
      if (std::find(scenarios.begin(), scenarios.end(), jt.key()) == scenarios.end()) {
        throw Error("unknown scenario '" + jt.key() + "' at $.recourse." + it.key() + "." + jt.key());
      }
    }
  }

  std::vector<std::vector<PointSet>> table(decisions.size(), std::vector<PointSet>(scenarios.size()));
  for (std::size_t x = 0; x < decisions.size(); ++x) {
    auto dx = rec.find(decisions[x]);
    if (dx == rec.end()) throw Error("missing recourse for decision " + decisions[x]);
    for (std::size_t u = 0; u < scenarios.size(); ++u) {
      const std::string at = pair_path(decisions[x], scenarios[u]);
      auto du = dx->find(scenarios[u]);
      if (du == dx->end()) throw Error("missing recourse set at " + at);
      if (!du->is_array()) throw Error("expected an array of points at " + at);
      if (du->empty()) throw Error("empty recourse set at " + at);
      PointSet& set = table[x][u];
      for (std::size_t k = 0; k < du->size(); ++k) {
        const json& pt = (*du)[k];
        const std::string pt_path = at + "[" + std::to_string(k) + "]";
        if (!pt.is_array()) throw Error("expected an array of numbers at " + pt_path);
        if (pt.size() != dim) {
          throw Error("dimension mismatch at " + pt_path + ": expected " + std::to_string(dim) +
                      " objectives, got " + std::to_string(pt.size()));
        }
        ObjVec v;
        v.reserve(dim);
        for (const json& c : pt) {
          if (!c.is_number()) throw Error("expected a number at " + pt_path);
          v.push_back(c.get<double>());
        }
        set.push_back(std::move(v));
      }
    }
  }

  bool sampled = false;
  if (auto s = doc.find("sampled"); s != doc.end()) {
    if (!s->is_boolean()) throw Error("expected a boolean at $.sampled");
    sampled = s->get<bool>();
  }
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
  if (auto m = doc.find("metadata"); m != doc.end()) {
    if (!m->is_object()) throw Error("expected an object at $.metadata");
    metadata = *m;
  }

  return Instance(name.get<std::string>(), dim, std::move(decisions), std::move(scenarios), std::move(table),
                  sampled, std::move(metadata));
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
  auto str = [](const std::string& s) { return nlohmann::json(s).dump(); };
  std::ostringstream os;
  os << "{\n  \"name\": " << str(inst.name()) << ",\n  \"n\": " << inst.n() << ",\n  \"decisions\": [";
  for (std::size_t i = 0; i < inst.num_decisions(); ++i) os << (i ? ", " : "") << str(inst.decision_id(i));
  os << "],\n  \"scenarios\": [";
  for (std::size_t i = 0; i < inst.num_scenarios(); ++i) os << (i ? ", " : "") << str(inst.scenario_id(i));
  os << "],\n";
  if (inst.sampled()) os << "  \"sampled\": true,\n";
  if (!inst.metadata().empty()) os << "  \"metadata\": " << inst.metadata().dump() << ",\n";
  os << "  \"recourse\": {";
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
    os << (x ? "," : "") << "\n    " << str(inst.decision_id(x)) << ": {";
    for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
      os << (u ? "," : "") << "\n      " << str(inst.scenario_id(u)) << ": [";
      const PointSet& set = inst.recourse(x, u);
      for (std::size_t k = 0; k < set.size(); ++k) {
        os << (k ? ", " : "") << "[";
        for (std::size_t i = 0; i < set[k].size(); ++i) os << (i ? ", " : "") << format_real(set[k][i]);
        os << "]";
      }
      os << "]";
    }
    os << "\n    }";
  }
  os << "\n  }\n}\n";
  return os.str();
}

}  // namespace maro
