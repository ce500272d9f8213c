#include "gsimplex/io.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <system_error>

#include "gsimplex/instances.hpp"

namespace gsimplex {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational scalar_node(const YAML::Node& node, const std::string& what) {
  if (!node || !node.IsScalar()) throw Error(ErrorKind::Parse, what + ": expected a scalar");
  try {
    return parse_rational(node.as<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, what + ": " + e.what());
  }
}

std::int64_t integer_node(const YAML::Node& node, const std::string& what) {
  if (!node || !node.IsScalar()) throw Error(ErrorKind::Parse, what + ": expected an integer");
  try {
    return node.as<std::int64_t>();
  } catch (const YAML::Exception&) {
    throw Error(ErrorKind::Parse, what + ": expected an integer, got '" + node.as<std::string>() + "'");
  }
}

Coeffs<Rational> coeffs_node(const YAML::Node& node, std::size_t n, const std::string& what) {
  if (!node || !node.IsSequence()) throw Error(ErrorKind::Parse, what + ": expected a list of [index, value] pairs");
  std::vector<Coeffs<Rational>::Entry> entries;
  for (const auto& pair : node) {
    if (!pair.IsSequence() || pair.size() != 2) throw Error(ErrorKind::Parse, what + ": malformed coefficient pair");
    std::int64_t j = integer_node(pair[0], what + " index");
    if (j < 1) throw Error(ErrorKind::Dimension, what + ": coordinate index must be >= 1");
    entries.emplace_back(static_cast<std::size_t>(j), scalar_node(pair[1], what + " value"));
  }
  return Coeffs<Rational>(n, std::move(entries));
}

std::vector<Rational> weights_node(const YAML::Node& node, std::size_t n) {
  if (!node) return std::vector<Rational>(n, Rational(1));
  if (node.IsScalar()) {
    std::string text = node.as<std::string>();
    const std::string prefix = "geometric(";
    if (text.rfind(prefix, 0) != 0 || text.back() != ')') {
      throw Error(ErrorKind::Parse, "weights: expected geometric(delta) or a list, got '" + text + "'");
    }
    Rational ratio = parse_rational(text.substr(prefix.size(), text.size() - prefix.size() - 1));
    return hilbert_weights({GeometricWeights{ratio}, n});
  }
  if (!node.IsSequence()) throw Error(ErrorKind::Parse, "weights: expected geometric(delta) or a list");
  std::vector<Rational> w;
  for (const auto& v : node) w.push_back(scalar_node(v, "weights"));
  if (w.size() != n) throw Error(ErrorKind::Spec, "weights: list length differs from the truncation");
  return w;
}

YAML::Node coeffs_yaml(const Coeffs<Rational>& c) {
  YAML::Node list(YAML::NodeType::Sequence);
  for (const auto& [j, a] : c.entries()) {
    YAML::Node pair(YAML::NodeType::Sequence);
    pair.SetStyle(YAML::EmitterStyle::Flow);
    pair.push_back(j);
    pair.push_back(a.get_str());
    list.push_back(pair);
  }
  list.SetStyle(YAML::EmitterStyle::Flow);
  return list;
}

template <class T>
ordered_json scalar_json(const T& x) {
  if constexpr (ScalarTraits<T>::exact) {
    return x.get_str();
  } else {
    return x;
  }
}

template <class T>
ordered_json point_json(const Point<T>& p) {
  ordered_json out = ordered_json::array();
  for (const auto& v : p.coords()) out.push_back(scalar_json(v));
  return out;
}

template <class T>
std::string scalar_yaml(const T& x) {
  return format_scalar(x);
}

template <class T>
void emit_witness(YAML::Emitter& out, const Witness<T>& w) {
  out << YAML::BeginMap;
  if (w.constraint) out << YAML::Key << "constraint" << YAML::Value << *w.constraint;
  if (w.horizon) out << YAML::Key << "horizon" << YAML::Value << *w.horizon;
  if (w.value) out << YAML::Key << "value" << YAML::Value << scalar_yaml(*w.value);
  if (w.point) {
    out << YAML::Key << "point" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (const auto& v : w.point->coords()) out << scalar_yaml(v);
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw Error(ErrorKind::Parse, std::string("instance: ") + e.what());
  }
  if (!root.IsMap()) throw Error(ErrorKind::Parse, "instance: expected a mapping at the top level");
  std::int64_t n = integer_node(root["truncation"], "truncation");
  if (n < 1) throw Error(ErrorKind::Spec, "truncation must be positive");
  const auto N = static_cast<std::size_t>(n);

  Extent extent = Extent::Finite;
  if (auto model = root["model"]) {
    std::string m = model.as<std::string>();
    if (m == "finite") {
      extent = Extent::Finite;
    } else if (m == "truncated") {
      extent = Extent::Truncated;
    } else {
      throw Error(ErrorKind::Parse, "model: expected finite or truncated, got '" + m + "'");
    }
  }
  std::vector<Rational> weights = weights_node(root["weights"], N);

  const YAML::Node cs = root["constraints"];
  if (!cs || !cs.IsSequence() || cs.size() == 0) throw Error(ErrorKind::Parse, "constraints: expected a nonempty list");
  std::vector<Constraint<Rational>> constraints;
  for (const auto& c : cs) {
    if (!c.IsMap()) throw Error(ErrorKind::Parse, "constraints: each entry must be a mapping");
    ConstraintId id = integer_node(c["id"], "constraint id");
    const std::string where = "constraint " + std::to_string(id);
    try {
      constraints.push_back({id, coeffs_node(c["coeffs"], N, where + " coeffs"), scalar_node(c["bound"], where + " bound")});
    } catch (const Error& e) {
      throw e.with_constraint(id);
    }
  }
  Instance inst{ConstraintSystem<Rational>(std::move(constraints), std::move(weights), extent), std::nullopt};

  if (auto obj = root["objective"]) {
    if (!obj.IsMap()) throw Error(ErrorKind::Parse, "objective: expected a mapping");
    Rational constant = obj["constant"] ? scalar_node(obj["constant"], "objective constant") : Rational(0);
    std::optional<Rational> tail;
    if (obj["tail_bound"]) tail = scalar_node(obj["tail_bound"], "objective tail_bound");
    inst.objective = Objective<Rational>(coeffs_node(obj["coeffs"], N, "objective coeffs"), constant, tail);
  }
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string format_instance(const Instance& instance) {
  const auto& sys = instance.system;
  YAML::Node root;
  root["truncation"] = sys.truncation();
  root["model"] = sys.extent() == Extent::Finite ? "finite" : "truncated";
  YAML::Node weights(YAML::NodeType::Sequence);
  for (const auto& w : sys.weights()) weights.push_back(w.get_str());
  weights.SetStyle(YAML::EmitterStyle::Flow);
  root["weights"] = weights;
  YAML::Node cs(YAML::NodeType::Sequence);
  for (const auto& c : sys.constraints()) {
    YAML::Node node;
    node["id"] = c.id;
    node["coeffs"] = coeffs_yaml(c.functional);
    node["bound"] = c.bound.get_str();
    node.SetStyle(YAML::EmitterStyle::Flow);
    cs.push_back(node);
  }
  root["constraints"] = cs;
  if (instance.objective) {
    YAML::Node obj;
    obj["coeffs"] = coeffs_yaml(instance.objective->linear);
    obj["constant"] = instance.objective->constant.get_str();
    if (instance.objective->tail_bound) obj["tail_bound"] = instance.objective->tail_bound->get_str();
    root["objective"] = obj;
  }
  YAML::Emitter out;
  out << root;
  return std::string(out.c_str()) + "\n";
}

template <class T>
std::string format_trace(const SimplexTrace<T>& trace, const TraceOptions& options) {
  const bool points = options.emit_points || trace.truncation <= 32;
  std::string out;
  for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
    ordered_json rec;
    rec["n"] = n;
    rec["value"] = scalar_json(trace.values[n]);
    rec["gamma"] = scalar_json(trace.gammas[n]);
    if (n < trace.pivots.size()) {
      rec["leaving_id"] = trace.pivots[n].leaving_id;
      rec["entering_id"] = trace.pivots[n].entering_id;
    } else {
      rec["leaving_id"] = nullptr;
      rec["entering_id"] = nullptr;
    }
    if (points) rec["point"] = point_json(trace.iterates[n]);
    out += rec.dump();
    out += '\n';
  }
  ordered_json summary;
  summary["summary"] = true;
  summary["stop"] = std::string(to_string(trace.stop));
  summary["pivots"] = trace.pivot_count();
  summary["iterates"] = trace.iterates.size();
  summary["final_value"] = trace.values.empty() ? ordered_json(nullptr) : scalar_json(trace.values.back());
  summary["final_gamma"] = trace.gammas.empty() ? ordered_json(nullptr) : scalar_json(trace.gammas.back());
  summary["truncation"] = trace.truncation;
  summary["policy"] = std::string(to_string(trace.policy));
  summary["arithmetic"] = std::string(to_string(ScalarTraits<T>::arithmetic));
  out += summary.dump();
  out += '\n';
  return out;
}

template <class T>
std::string format_plot(const SimplexTrace<T>& trace) {
  std::string out = "n,value,gamma\n";
  for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
    out += std::to_string(n) + "," + format_scalar(trace.values[n]) + "," + format_scalar(trace.gammas[n]) + "\n";
  }
  return out;
}

std::string format_section(const std::vector<SectionSample>& samples) {
  std::string out = "alpha,beta,accepted\n";
  for (const auto& s : samples) {
    out += ScalarTraits<double>::to_string(s.alpha) + "," + ScalarTraits<double>::to_string(s.beta) + "," +
           (s.accepted ? "1" : "0") + "\n";
  }
  return out;
}

template <class T>
std::string format_audit(const AuditReport<T>& report) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "truncation" << YAML::Value << report.truncation;
  out << YAML::Key << "model" << YAML::Value << (report.extent == Extent::Finite ? "finite" : "truncated");
  out << YAML::Key << "policy" << YAML::Value << std::string(to_string(report.policy));
  out << YAML::Key << "arithmetic" << YAML::Value << std::string(to_string(ScalarTraits<T>::arithmetic));
  out << YAML::Key << "samples" << YAML::Value << report.samples;
  out << YAML::Key << "sample_count" << YAML::Value << report.sample_count;
  out << YAML::Key << "constants" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "rho" << YAML::Value << scalar_yaml(report.rho);
  out << YAML::Key << "xi" << YAML::Value << scalar_yaml(report.xi);
  out << YAML::Key << "nu" << YAML::Value << scalar_yaml(report.nu);
  out << YAML::Key << "D" << YAML::Value << scalar_yaml(report.D);
  out << YAML::EndMap;
  out << YAML::Key << "assumptions" << YAML::Value << YAML::BeginSeq;
  for (const auto& v : report.verdicts) {
    out << YAML::BeginMap;
    out << YAML::Key << "id" << YAML::Value << v.id;
    out << YAML::Key << "tag" << YAML::Value << v.tag;
    out << YAML::Key << "verdict" << YAML::Value << std::string(to_string(v.status));
    out << YAML::Key << "detail" << YAML::Value << v.detail;
    const bool has_constants = v.id == "A2" || v.id == "A6" || v.id == "A7" || v.id == "A8" ||
                               (v.id == "A9" && !report.cost_tail.empty());
    out << YAML::Key << "constants" << YAML::Value;
    if (!has_constants) out << YAML::Flow;
    out << YAML::BeginMap;
    if (v.id == "A2") out << YAML::Key << "rho" << YAML::Value << scalar_yaml(report.rho);
    if (v.id == "A6" || v.id == "A7") out << YAML::Key << "nu" << YAML::Value << scalar_yaml(report.nu);
    if (v.id == "A7") out << YAML::Key << "D" << YAML::Value << scalar_yaml(report.D);
    if (v.id == "A8") out << YAML::Key << "xi" << YAML::Value << scalar_yaml(report.xi);
    if (v.id == "A9" && !report.cost_tail.empty()) {
      out << YAML::Key << "cost_tail" << YAML::Value << YAML::BeginSeq;
      for (const auto& e : report.cost_tail) {
        out << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "epsilon" << YAML::Value << ScalarTraits<double>::to_string(e.epsilon);
        out << YAML::Key << "K" << YAML::Value;
        if (e.K) {
          out << *e.K;
        } else {
          out << YAML::Null;
        }
        out << YAML::EndMap;
      }
      out << YAML::EndSeq;
    }
    out << YAML::EndMap;
    out << YAML::Key << "witness" << YAML::Value;
    if (v.witness) {
      emit_witness(out, *v.witness);
    } else {
      out << YAML::Null;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::Spec, "cannot write " + tmp.string());
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) throw Error(ErrorKind::Spec, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::Spec, "cannot rename onto " + path.string());
  }
}

#define GSIMPLEX_INSTANTIATE_IO(T)                                               \
  template std::string format_trace(const SimplexTrace<T>&, const TraceOptions&); \
  template std::string format_plot(const SimplexTrace<T>&);                       \
  template std::string format_audit(const AuditReport<T>&);

GSIMPLEX_INSTANTIATE_IO(double)
GSIMPLEX_INSTANTIATE_IO(Rational)

}  // namespace gsimplex
