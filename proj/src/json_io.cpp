#include "placement/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "placement/errors.hpp"

namespace placement {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

double as_double(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> as_doubles(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(as_double(x, what));
  return out;
}

std::vector<int> as_ints(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(as_int(x, what));
  return out;
}

const std::string& as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

// Re-raises model validation failures as parse errors.
template <class F>
auto validated(F&& make) -> decltype(make()) {
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
}

struct ModelWriter {
  Json operator()(const MnlModel& m) const { return {{"type", "mnl"}, {"weights", m.weights}}; }
  Json operator()(const MarkovModel& m) const {
    return {{"type", "markov"}, {"arrival", m.arrival}, {"transitions", m.transitions}};
  }
  Json operator()(const MmnlModel& m) const {
    Json segments = Json::array();
    for (const auto& s : m.segments) segments.push_back({{"theta", s.theta}, {"weights", s.weights}});
    return {{"type", "mmnl"}, {"segments", segments}};
  }
  Json operator()(const RankedListModel& m) const {
    Json lists = Json::array();
    for (const auto& l : m.lists) lists.push_back({{"prob", l.prob}, {"order", l.order}});
    return {{"type", "ranked"}, {"lists", lists}};
  }
};

struct BrowsingWriter {
  Json operator()(const ExplicitBrowsing& b) const {
    Json support = Json::array();
    for (const auto& [locations, prob] : b.support()) {
      support.push_back({{"locations", locations.ids()}, {"prob", prob}});
    }
    return {{"type", "explicit"}, {"support", support}};
  }
  Json operator()(const LineBrowsing& b) const { return {{"type", "line"}, {"theta", b.theta()}}; }
  Json operator()(const SamplerBrowsing&) const {
    throw UnsupportedOperation("sampler-only browsing distributions have no JSON form");
  }
};

}  // namespace

Json to_json(const ChoiceModel& model) { return std::visit(ModelWriter{}, model.variant()); }

ChoiceModel choice_model_from_json(const Json& j, int num_products) {
  const std::string& type = as_string(field(j, "type"), "choice_model.type");
  ChoiceModel::Variant v;
  if (type == "mnl") {
    v = MnlModel{as_doubles(field(j, "weights"), "weights")};
  } else if (type == "markov") {
    MarkovModel m;
    m.arrival = as_doubles(field(j, "arrival"), "arrival");
    const Json& rows = field(j, "transitions");
    if (!rows.is_array()) throw ParseError("transitions must be an array of rows");
    for (const Json& row : rows) m.transitions.push_back(as_doubles(row, "transitions row"));
    v = std::move(m);
  } else if (type == "mmnl") {
    MmnlModel m;
    const Json& segments = field(j, "segments");
    if (!segments.is_array()) throw ParseError("segments must be an array");
    for (const Json& s : segments) {
      m.segments.push_back({as_double(field(s, "theta"), "theta"),
                            as_doubles(field(s, "weights"), "weights")});
    }
    v = std::move(m);
  } else if (type == "ranked") {
    RankedListModel m;
    m.num_products = num_products;
    const Json& lists = field(j, "lists");
    if (!lists.is_array()) throw ParseError("lists must be an array");
    for (const Json& l : lists) {
      m.lists.push_back({as_double(field(l, "prob"), "prob"), as_ints(field(l, "order"), "order")});
    }
    v = std::move(m);
  } else {
    throw ParseError("unknown choice model type '" + type + "'");
  }
  ChoiceModel model = validated([&] { return ChoiceModel(std::move(v)); });
  if (model.num_products() != num_products) {
    throw ParseError("choice model describes " + std::to_string(model.num_products()) +
                     " products, catalog has " + std::to_string(num_products));
  }
  return model;
}

Json to_json(const Browsing& browsing) { return std::visit(BrowsingWriter{}, browsing.variant()); }

Browsing browsing_from_json(const Json& j, int m) {
  const std::string& type = as_string(field(j, "type"), "browsing.type");
  if (type == "line") {
    LineBrowsing line = validated([&] { return LineBrowsing(as_doubles(field(j, "theta"), "theta")); });
    if (line.m() != m) throw ParseError("line browsing theta length differs from m");
    return line;
  }
  if (type == "explicit") {
    const Json& support = field(j, "support");
    if (!support.is_array()) throw ParseError("support must be an array");
    std::vector<WeightedLocations> entries;
    for (const Json& e : support) {
      entries.push_back({LocationSet(as_ints(field(e, "locations"), "locations")),
                         as_double(field(e, "prob"), "prob")});
    }
    return validated([&] { return ExplicitBrowsing(m, std::move(entries)); });
  }
  throw ParseError("unknown browsing type '" + type + "'");
}

Json to_json(const Instance& instance) {
  Json products = Json::array();
  for (const Product& p : instance.products()) products.push_back({{"id", p.id}, {"price", p.price}});
  return {{"products", products},
          {"choice_model", to_json(instance.choice_model())},
          {"m", instance.m()},
          {"browsing", to_json(instance.browsing())}};
}

Instance instance_from_json(const Json& j) {
  const Json& products = field(j, "products");
  if (!products.is_array()) throw ParseError("products must be an array");
  std::vector<Product> catalog;
  for (const Json& p : products) {
    catalog.push_back({as_int(field(p, "id"), "product id"), as_double(field(p, "price"), "price")});
  }
  const int n = static_cast<int>(catalog.size());
  const int m = as_int(field(j, "m"), "m");
  ChoiceModel model = choice_model_from_json(field(j, "choice_model"), n);
  Browsing browsing = browsing_from_json(field(j, "browsing"), m);
  return validated([&] {
    return Instance(std::move(catalog), std::move(model), m, std::move(browsing));
  });
}

Json to_json(const SolveReport& report) {
  Json j;
  j["algorithm"] = report.algorithm;
  j["placement"] = report.placement.slots();
  j["w_exact"] = report.w_exact ? Json(*report.w_exact) : Json(nullptr);
  if (report.w_estimate) {
    const EstimateSummary& e = *report.w_estimate;
    j["w_estimate"] = {{"value", e.value}, {"epsilon", e.epsilon}, {"delta", e.delta},
                       {"samples", e.samples}};
  } else {
    j["w_estimate"] = nullptr;
  }
  j["k"] = report.k ? Json(*report.k) : Json(nullptr);
  j["seed"] = report.seed;
  j["ms"] = report.ms;
  return j;
}

SolveReport report_from_json(const Json& j) {
  SolveReport r;
  r.algorithm = as_string(field(j, "algorithm"), "algorithm");
  r.placement = Placement(as_ints(field(j, "placement"), "placement"));
  if (const Json& w = field(j, "w_exact"); !w.is_null()) r.w_exact = as_double(w, "w_exact");
  if (const Json& e = field(j, "w_estimate"); !e.is_null()) {
    const Json& samples = field(e, "samples");
    if (!samples.is_number_integer()) throw ParseError("samples must be an integer");
    r.w_estimate = EstimateSummary{as_double(field(e, "value"), "value"),
                                   as_double(field(e, "epsilon"), "epsilon"),
                                   as_double(field(e, "delta"), "delta"),
                                   samples.get<std::int64_t>()};
  }
  if (const Json& k = field(j, "k"); !k.is_null()) r.k = as_int(k, "k");
  const Json& seed = field(j, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) throw ParseError("seed must be an integer");
  r.seed = seed.get<std::uint64_t>();
  const Json& ms = field(j, "ms");
  if (!ms.is_number_integer()) throw ParseError("ms must be an integer");
  r.ms = ms.get<std::int64_t>();
  return r;
}

std::string dump_instance(const Instance& instance) { return to_json(instance).dump(2); }

Instance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return instance_from_json(j);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace placement
