#pragma once

// Flat key=value experiment configs with [poly NAME] sections holding
// polynomial terms in the text serialization (exponents then coefficient).

#include <Eigen/Dense>

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apf/model.hpp"

namespace apf {

class ConfigFile {
 public:
  static ConfigFile parse(const std::string& text) {
    ConfigFile cfg;
    cfg.raw_ = text;
    std::istringstream is(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          throw std::invalid_argument("config line " + std::to_string(lineno) +
                                      ": unterminated section header");
        std::string head = trim(line.substr(1, line.size() - 2));
        if (head.rfind("poly ", 0) != 0)
          throw std::invalid_argument("config line " + std::to_string(lineno) +
                                      ": unknown section '" + head + "'");
        section = trim(head.substr(5));
        cfg.polys_[section];  // create
        continue;
      }
      if (section.empty()) {
        const auto eq = line.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("config line " + std::to_string(lineno) +
                                      ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
          throw std::invalid_argument("config line " + std::to_string(lineno) +
                                      ": empty key");
        cfg.values_[key] = value;
      } else {
        cfg.polys_[section] += line + "\n";
      }
    }
    return cfg;
  }

  static ConfigFile load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return parse(os.str());
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get_string(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
      throw std::invalid_argument("config: missing key '" + key + "'");
    return it->second;
  }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  double get_double(const std::string& key) const { return to_double(key, get_string(key)); }

  double get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
  }

  long get_int(const std::string& key) const {
    const double v = get_double(key);
    const long r = static_cast<long>(v);
    if (static_cast<double>(r) != v)
      throw std::invalid_argument("config: key '" + key + "' is not an integer");
    return r;
  }

  long get_int(const std::string& key, long fallback) const {
    return has(key) ? get_int(key) : fallback;
  }

  std::vector<double> get_doubles(const std::string& key) const {
    std::istringstream is(get_string(key));
    std::vector<double> out;
    double v;
    while (is >> v) out.push_back(v);
    if (out.empty())
      throw std::invalid_argument("config: key '" + key + "' holds no numbers");
    return out;
  }

  Eigen::VectorXd get_vector(const std::string& key) const {
    const auto v = get_doubles(key);
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<long>(v.size()));
  }

  bool has_poly(const std::string& name) const { return polys_.count(name) != 0; }

  SparsePolynomial get_poly(const std::string& name, int dim) const {
    auto it = polys_.find(name);
    if (it == polys_.end())
      throw std::invalid_argument("config: missing [poly " + name + "] section");
    return SparsePolynomial::from_text(dim, it->second);
  }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }

  const std::string& raw_text() const { return raw_; }
  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static double to_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double out;
    try {
      out = std::stod(v, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key '" + key + "' is not a number: " + v);
    }
    if (pos != v.size())
      throw std::invalid_argument("config: key '" + key + "' has trailing junk: " + v);
    return out;
  }

  std::string raw_;
  std::map<std::string, std::string> values_;
  std::map<std::string, std::string> polys_;
};

// Assemble the state-space model from dim/obs_dim/noise_dim and the
// [poly drift.i], [poly rho.i.j], [poly obs.j] sections.  An optional
// obs_noise_scale k rescales the observation to unit measurement noise
// (h -> h/k), matching measurements divided by k.
inline ModelSpec model_from_config(const ConfigFile& cfg) {
  ModelSpec m;
  const int d = static_cast<int>(cfg.get_int("dim"));
  const int dw = static_cast<int>(cfg.get_int("noise_dim", 1));
  const int dy = static_cast<int>(cfg.get_int("obs_dim", 1));
  for (int i = 1; i <= d; ++i)
    m.drift.push_back(cfg.get_poly("drift." + std::to_string(i), d));
  m.rho.assign(d, {});
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= dw; ++j) {
      const std::string name = "rho." + std::to_string(i) + "." + std::to_string(j);
      m.rho[i - 1].push_back(cfg.has_poly(name) ? cfg.get_poly(name, d)
                                                : SparsePolynomial(d));
    }
  if (cfg.has("q_diag")) {
    m.q = cfg.get_vector("q_diag").asDiagonal();
    if (m.q.rows() != dw) throw std::invalid_argument("config: q_diag size mismatch");
  } else {
    m.q = Eigen::MatrixXd::Identity(dw, dw);
  }
  const double k = cfg.get_double("obs_noise_scale", 1.0);
  for (int j = 1; j <= dy; ++j) {
    SparsePolynomial h = cfg.get_poly("obs." + std::to_string(j), d);
    if (k != 1.0) h *= 1.0 / k;
    m.obs.push_back(std::move(h));
  }
  m.validate();
  return m;
}

}  // namespace apf
