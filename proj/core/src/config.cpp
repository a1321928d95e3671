#include "hbf/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hbf/errors.hpp"

namespace hbf {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line_no, const std::string& message) {
  throw FormatError("config line " + std::to_string(line_no) + ": " + message);
}

std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\' && quoted) {
      ++i;
    } else if (line[i] == '"') {
      quoted = !quoted;
    } else if (line[i] == '#' && !quoted) {
      return line.substr(0, i);
    }
  }
  return line;
}

// Parses one scalar starting at text[pos]; advances pos past it.
std::string parse_scalar(std::string_view text, std::size_t& pos,
                         std::size_t line_no) {
  if (pos < text.size() && text[pos] == '"') {
    std::string out;
    for (++pos; pos < text.size(); ++pos) {
      const char c = text[pos];
      if (c == '\\' && pos + 1 < text.size()) {
        const char next = text[++pos];
        out += next == 'n' ? '\n' : next == 't' ? '\t' : next;
      } else if (c == '"') {
        ++pos;
        return out;
      } else {
        out += c;
      }
    }
    fail(line_no, "unterminated string");
  }
  const auto end = text.find_first_of(",]", pos);
  const auto token = trim(text.substr(pos, end == std::string_view::npos
                                               ? std::string_view::npos
                                               : end - pos));
  pos = end == std::string_view::npos ? text.size() : end;
  if (token.empty()) fail(line_no, "empty value");
  return std::string(token);
}

template <typename T>
T to_number(const std::string& text, const std::string& key) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError("config: '" + key + "' expects a number, got '" + text + "'");
  }
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(value)) {
      throw FormatError("config: '" + key + "' must be finite");
    }
  }
  return value;
}

bool to_bool(const std::string& text, const std::string& key) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw FormatError("config: '" + key + "' expects true or false");
}

}  // namespace

std::string_view to_string(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::fp: return "fp";
    case ExperimentKind::fn: return "fn";
    case ExperimentKind::capacity: return "capacity";
    case ExperimentKind::baseline: return "baseline";
    case ExperimentKind::amplify: return "amplify";
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view text) {
  for (auto kind : {ExperimentKind::fp, ExperimentKind::fn, ExperimentKind::capacity,
                    ExperimentKind::baseline, ExperimentKind::amplify}) {
    if (to_string(kind) == text) return kind;
  }
  throw InvalidArgument("unknown experiment kind '" + std::string(text) + "'");
}

void ExperimentConfig::validate() const {
  auto require = [](bool ok, const char* message) {
    if (!ok) throw InvalidArgument(std::string("experiment config: ") + message);
  };
  require(dim >= 2, "dim must be at least 2");
  require(label_count >= 2, "labels must be at least 2");
  require(gain > 0.0 && std::isfinite(gain), "rho must be finite and positive");
  require(trials >= 1, "trials must be at least 1");
  require(probe_count >= 100, "probes must be at least 100");
  require(replicas >= 1, "amplify r must be at least 1");
  if (kind != ExperimentKind::capacity && kind != ExperimentKind::fp) {
    require(items >= 1, "n must be at least 1 for member queries");
  }
  if (kind == ExperimentKind::capacity) {
    require(!capacity_grid.empty(), "capacity grid is empty");
    for (std::size_t i = 0; i < capacity_grid.size(); ++i) {
      require(capacity_grid[i] >= 1, "capacity grid entries must be >= 1");
      require(i == 0 || capacity_grid[i] > capacity_grid[i - 1],
              "capacity grid must be strictly ascending");
    }
  }
  for (const auto& channel : noise) {
    if (const auto* ham = std::get_if<KeyHamming>(&channel)) {
      require(ham->flips <= dim, "key-hamming H exceeds dim");
    }
  }
  if (const auto* a = std::get_if<AutoCalibrate>(&decoder)) {
    require(a->eps > 0.0 && a->eps < 1.0, "decoder eps must lie in (0, 1)");
  }
  if (const auto* f = std::get_if<FixedDecoder>(&decoder)) f->config.validate();
  chase.validate();
}

ConfigDocument parse_config_document(std::string_view text) {
  ConfigDocument doc;
  std::string section;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                      : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty()) fail(line_no, "empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    const auto key = std::string(trim(line.substr(0, eq)));
    if (key.empty()) fail(line_no, "missing key");
    const auto full = section.empty() ? key : section + "." + key;
    const auto value = trim(line.substr(eq + 1));
    if (value.empty()) fail(line_no, "missing value for '" + key + "'");
    if (doc.scalars.count(full) || doc.arrays.count(full)) {
      fail(line_no, "duplicate key '" + full + "'");
    }
    if (value.front() == '[') {
      std::vector<std::string> items;
      std::size_t pos = 1;
      while (true) {
        while (pos < value.size() && (value[pos] == ' ' || value[pos] == '\t')) ++pos;
        if (pos < value.size() && value[pos] == ']') break;
        items.push_back(parse_scalar(value, pos, line_no));
        while (pos < value.size() && (value[pos] == ' ' || value[pos] == '\t')) ++pos;
        if (pos < value.size() && value[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < value.size() && value[pos] == ']') break;
        fail(line_no, "malformed array");
      }
      if (trim(value.substr(pos + 1)) != "") fail(line_no, "text after array");
      doc.arrays[full] = std::move(items);
    } else {
      std::size_t pos = 0;
      auto scalar = parse_scalar(value, pos, line_no);
      if (!trim(value.substr(pos)).empty()) fail(line_no, "unexpected text after value");
      doc.scalars[full] = std::move(scalar);
    }
  }
  return doc;
}

ExperimentConfig apply_config(const ConfigDocument& doc, ExperimentConfig cfg) {
  static const std::set<std::string> known_scalars = {
      "experiment.kind", "experiment.dim",    "experiment.n",
      "experiment.labels", "experiment.rho",  "experiment.trials",
      "experiment.seed", "experiment.probes", "experiment.out",
      "experiment.timing", "decoder.mode",    "decoder.eps",
      "decoder.tau",     "decoder.delta",     "decoder.top_k",
      "baseline.p",      "baseline.ell",      "baseline.T",
      "amplify.r"};
  static const std::set<std::string> known_arrays = {"experiment.noise",
                                                     "capacity.grid"};
  for (const auto& [key, _] : doc.scalars) {
    if (!known_scalars.count(key)) throw FormatError("config: unknown key '" + key + "'");
  }
  for (const auto& [key, _] : doc.arrays) {
    if (!known_arrays.count(key)) throw FormatError("config: unknown key '" + key + "'");
  }
  auto get = [&](const std::string& key) -> const std::string* {
    const auto it = doc.scalars.find(key);
    return it == doc.scalars.end() ? nullptr : &it->second;
  };

  try {
    if (auto v = get("experiment.kind")) cfg.kind = parse_experiment_kind(*v);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  if (auto v = get("experiment.dim")) cfg.dim = to_number<std::size_t>(*v, "dim");
  if (auto v = get("experiment.n")) cfg.items = to_number<std::size_t>(*v, "n");
  if (auto v = get("experiment.labels")) cfg.label_count = to_number<std::size_t>(*v, "labels");
  if (auto v = get("experiment.rho")) cfg.gain = to_number<double>(*v, "rho");
  if (auto v = get("experiment.trials")) cfg.trials = to_number<std::uint64_t>(*v, "trials");
  if (auto v = get("experiment.seed")) cfg.master_seed = to_number<std::uint64_t>(*v, "seed");
  if (auto v = get("experiment.probes")) cfg.probe_count = to_number<std::size_t>(*v, "probes");
  if (auto v = get("experiment.out")) cfg.output = *v;
  if (auto v = get("experiment.timing")) cfg.record_timing = to_bool(*v, "timing");
  if (auto it = doc.arrays.find("experiment.noise"); it != doc.arrays.end()) {
    cfg.noise.clear();
    for (const auto& item : it->second) {
      try {
        cfg.noise.push_back(parse_noise(item));
      } catch (const InvalidArgument& e) {
        throw FormatError(std::string("config: ") + e.what());
      }
    }
  }
  if (auto it = doc.arrays.find("capacity.grid"); it != doc.arrays.end()) {
    cfg.capacity_grid.clear();
    for (const auto& item : it->second) {
      cfg.capacity_grid.push_back(to_number<std::size_t>(item, "capacity.grid"));
    }
  }

  const std::string mode = get("decoder.mode") ? *get("decoder.mode") : "";
  if (mode == "auto" || (mode.empty() && get("decoder.eps"))) {
    AutoCalibrate a;
    if (auto v = get("decoder.eps")) a.eps = to_number<double>(*v, "eps");
    cfg.decoder = a;
  } else if (mode == "signal-split") {
    cfg.decoder = SignalSplit{};
  } else if (mode == "fixed") {
    FixedDecoder f;
    const auto* tau = get("decoder.tau");
    if (!tau) throw FormatError("config: fixed decoder needs decoder.tau");
    f.config.tau = *tau == "inf"    ? INFINITY
                   : *tau == "-inf" ? -INFINITY
                                    : to_number<double>(*tau, "tau");
    if (auto v = get("decoder.delta")) f.config.delta = to_number<double>(*v, "delta");
    if (auto v = get("decoder.top_k")) f.config.top_k = to_number<std::size_t>(*v, "top_k");
    cfg.decoder = f;
  } else if (!mode.empty()) {
    throw FormatError("config: unknown decoder mode '" + mode + "'");
  }

  if (auto v = get("baseline.p")) cfg.chase.p = to_number<double>(*v, "p");
  if (auto v = get("baseline.ell")) cfg.chase.hops = to_number<std::uint64_t>(*v, "ell");
  if (auto v = get("baseline.T")) cfg.chase.hop_time = to_number<double>(*v, "T");
  if (auto v = get("amplify.r")) cfg.replicas = to_number<std::size_t>(*v, "r");
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path,
                             ExperimentConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return apply_config(parse_config_document(text.str()), std::move(base));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace hbf
